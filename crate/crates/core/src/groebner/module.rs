//! Submodules of free modules over quotient rings: membership, lifting, syzygies.

use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{groebner, reduce, sort_vector, ModOrder, Vector};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::presentation::RingPresentation;
use crate::ring::PolyRing;

pub(crate) fn to_vector(order: ModOrder, v: &[Polynomial], offset: usize) -> Vector {
    let mut terms = Vec::new();
    for (pos, p) in v.iter().enumerate() {
        terms.extend(p.terms().iter().map(|(m, c)| (pos + offset, m.clone(), c.clone())));
    }
    sort_vector(order, terms)
}

pub(crate) fn from_vector(ring: &Arc<PolyRing>, v: &Vector, offset: usize, len: usize) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<_>> = vec![Vec::new(); len];
    for (pos, m, c) in v {
        if *pos >= offset && *pos < offset + len {
            parts[pos - offset].push((m.clone(), c.clone()));
        }
    }
    parts.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect()
}

/// Generators of `I·R^rank` where `I` is the relation ideal, placed at `offset`.
pub(crate) fn relation_vectors(ring: &RingPresentation, rank: usize, offset: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for l in 0..rank {
        for r in ring.relations() {
            out.push(r.terms().iter().map(|(m, c)| (l + offset, m.clone(), c.clone())).collect());
        }
    }
    out
}

/// A matrix whose rows are elements of `R^ncols`.
#[derive(Clone)]
pub struct ModuleMatrix {
    ring: RingPresentation,
    ncols: usize,
    rows: Vec<Vec<Polynomial>>,
}

impl fmt::Debug for ModuleMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows.len(), self.ncols, self.ring)?;
        for r in &self.rows {
            let s: Vec<String> = r.iter().map(|p| p.to_string()).collect();
            writeln!(f, "  ({})", s.join(", "))?;
        }
        Ok(())
    }
}

impl ModuleMatrix {
    /// Entries are reduced modulo the ring relations.
    pub fn new(ring: &RingPresentation, ncols: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != ncols {
                return Err(Error::Input(format!("row of length {} in a matrix with {ncols} columns", r.len())));
            }
            out.push(r.iter().map(|p| ring.reduce(p)).collect::<Result<Vec<_>>>()?);
        }
        Ok(ModuleMatrix { ring: ring.clone(), ncols, rows: out })
    }

    /// A single column: the elements `entries` of `R^1`.
    pub fn column(ring: &RingPresentation, entries: &[Polynomial]) -> Result<Self> {
        Self::new(ring, 1, entries.iter().map(|p| vec![p.clone()]).collect())
    }

    pub fn identity(ring: &RingPresentation, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        ModuleMatrix { ring: ring.clone(), ncols: n, rows }
    }

    pub fn zero(ring: &RingPresentation, nrows: usize, ncols: usize) -> Self {
        ModuleMatrix { ring: ring.clone(), ncols, rows: vec![vec![ring.zero(); ncols]; nrows] }
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols).map(|j| self.rows.iter().map(|r| r[j].clone()).collect()).collect();
        ModuleMatrix { ring: self.ring.clone(), ncols: self.rows.len(), rows }
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        assert_eq!(v.len(), self.rows.len());
        let mut out = vec![self.ring.zero(); self.ncols];
        for (a, row) in v.iter().zip(&self.rows) {
            if a.is_zero() {
                continue;
            }
            for (o, e) in out.iter_mut().zip(row) {
                *o = &*o + &(a * e);
            }
        }
        out.iter().map(|p| self.ring.reduce(p)).collect()
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &ModuleMatrix) -> Result<Self> {
        assert_eq!(self.ncols, other.nrows());
        let rows = self.rows.iter().map(|r| other.apply(r)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleMatrix { ring: self.ring.clone(), ncols: other.ncols, rows })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|p| p.is_zero()))
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &ModuleMatrix) -> Self {
        assert_eq!(self.ncols, other.ncols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        ModuleMatrix { ring: self.ring.clone(), ncols: self.ncols, rows }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &ModuleMatrix) -> Self {
        let n = self.ncols + other.ncols;
        let mut rows = Vec::new();
        for r in &self.rows {
            let mut row = r.clone();
            row.resize(n, self.ring.zero());
            rows.push(row);
        }
        for r in &other.rows {
            let mut row = vec![self.ring.zero(); self.ncols];
            row.extend(r.iter().cloned());
            rows.push(row);
        }
        ModuleMatrix { ring: self.ring.clone(), ncols: n, rows }
    }

    pub fn submodule(&self) -> Result<SubmoduleBasis> {
        SubmoduleBasis::new(&self.ring, self.ncols, self.rows.clone())
    }
}

/// Syzygies of the rows: generators of `{a : a·m = 0}` over the ring.
pub fn syzygy(m: &ModuleMatrix) -> Result<ModuleMatrix> {
    let sub = m.submodule()?;
    ModuleMatrix::new(m.ring(), m.nrows(), sub.syzygies()?)
}

/// A submodule of `R^rank` with a cached Gröbner basis of `N + I·R^rank`.
#[derive(Clone)]
pub struct SubmoduleBasis {
    ring: RingPresentation,
    rank: usize,
    gens: Vec<Vec<Polynomial>>,
    gb: Vec<Vector>,
    lift_gb: Arc<OnceLock<Vec<Vector>>>,
}

const MEMBER_ORDER: fn(&RingPresentation) -> ModOrder = |r| ModOrder::Top(r.ambient().order());
const LIFT_ORDER: fn(&RingPresentation) -> ModOrder = |r| ModOrder::Pot(r.ambient().order());

impl SubmoduleBasis {
    pub fn new(ring: &RingPresentation, rank: usize, gens: Vec<Vec<Polynomial>>) -> Result<Self> {
        let order = MEMBER_ORDER(ring);
        let mut input: Vec<Vector> = gens.iter().map(|g| to_vector(order, g, 0)).collect();
        input.extend(relation_vectors(ring, rank, 0));
        let gb = groebner(order, input, rank)?;
        Ok(SubmoduleBasis { ring: ring.clone(), rank, gens, gb, lift_gb: Arc::new(OnceLock::new()) })
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[Vec<Polynomial>] {
        &self.gens
    }

    /// Normal form of `v` modulo the submodule and the ring relations.
    pub fn reduce(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        let order = MEMBER_ORDER(&self.ring);
        let refs: Vec<&Vector> = self.gb.iter().collect();
        let r = reduce(order, to_vector(order, v, 0), &refs, true, None).expect("unmetered");
        from_vector(self.ring.ambient(), &r, 0, self.rank)
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        self.reduce(v).iter().all(|p| p.is_zero())
    }

    pub fn contains_all(&self, vs: &[Vec<Polynomial>]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }

    /// True if the submodule is all of `R^rank`.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|i| {
            let mut e = vec![self.ring.zero(); self.rank];
            e[i] = self.ring.one();
            self.contains(&e)
        })
    }

    /// Gröbner basis vectors of `N + I·R^rank`.
    pub fn gb_vectors(&self) -> Vec<Vec<Polynomial>> {
        self.gb.iter().map(|v| from_vector(self.ring.ambient(), v, 0, self.rank)).collect()
    }

    fn lift_basis(&self) -> Result<&[Vector]> {
        if let Some(b) = self.lift_gb.get() {
            return Ok(b);
        }
        let order = LIFT_ORDER(&self.ring);
        let m = self.gens.len();
        let mut input = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            let mut v = to_vector(order, g, 0);
            v.push((self.rank + i, crate::ring::Monomial::one(self.ring.nvars()), crate::poly::q(1)));
            input.push(sort_vector(order, v));
        }
        input.extend(relation_vectors(&self.ring, self.rank, 0));
        let b = groebner(order, input, self.rank + m)?;
        Ok(self.lift_gb.get_or_init(|| b))
    }

    /// Coefficients `a` with `v = Σ a_i·gens_i`, or `None` if `v` is not in the submodule.
    pub fn lift(&self, v: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
        let basis = self.lift_basis()?;
        let order = LIFT_ORDER(&self.ring);
        let refs: Vec<&Vector> = basis.iter().collect();
        let r = reduce(order, to_vector(order, v, 0), &refs, true, None)?;
        if r.iter().any(|t| t.0 < self.rank) {
            return Ok(None);
        }
        let coeffs = from_vector(self.ring.ambient(), &r, self.rank, self.gens.len());
        Ok(Some(coeffs.iter().map(|c| self.ring.reduce(&-c)).collect::<Result<Vec<_>>>()?))
    }

    /// Generators of the syzygies among `gens`, reduced modulo the relations.
    pub fn syzygies(&self) -> Result<Vec<Vec<Polynomial>>> {
        let basis = self.lift_basis()?;
        let m = self.gens.len();
        let mut out = Vec::new();
        for v in basis.iter().filter(|v| v[0].0 >= self.rank) {
            let s = from_vector(self.ring.ambient(), v, self.rank, m);
            let s = s.iter().map(|p| self.ring.reduce(p)).collect::<Result<Vec<_>>>()?;
            if s.iter().any(|p| !p.is_zero()) {
                out.push(s);
            }
        }
        Ok(out)
    }
}
