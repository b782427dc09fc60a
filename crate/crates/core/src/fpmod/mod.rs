//! Finitely presented modules over quotient rings and maps between them.

mod change;
mod homext;
mod ideals;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::module::{ModuleMatrix, SubmoduleBasis};
use crate::poly::Polynomial;
use crate::presentation::RingPresentation;

pub use change::{base_change, invariants, prune, restrict_scalars, InvolutionAction, Invariants, Pruned};
pub use homext::{ext1, ext1_subquotient, hom, hom_subquotient};
pub use ideals::{annihilator, fitting_ideal, minors};

pub type Element = Vec<Polynomial>;

/// `coker(R^p → R^n)`: `ngens` generators modulo the rows of `relations`.
#[derive(Clone)]
pub struct FPModule {
    relations: ModuleMatrix,
    basis: Arc<OnceLock<SubmoduleBasis>>,
}

impl fmt::Debug for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FPModule on {} generators, relations {:?}", self.ngens(), self.relations)
    }
}

impl fmt::Display for FPModule {
    /// `R^n / <rows>`, zero rows omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .relations
            .rows()
            .iter()
            .filter(|r| r.iter().any(|p| !p.is_zero()))
            .map(|r| format!("({})", r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "({})^{}", self.ring(), self.ngens())?;
        if !rows.is_empty() {
            write!(f, " / <{}>", rows.join(", "))?;
        }
        Ok(())
    }
}

impl FPModule {
    pub fn new(relations: ModuleMatrix) -> Self {
        FPModule { relations, basis: Arc::new(OnceLock::new()) }
    }

    pub fn from_rows(ring: &RingPresentation, ngens: usize, rows: Vec<Element>) -> Result<Self> {
        Ok(Self::new(ModuleMatrix::new(ring, ngens, rows)?))
    }

    pub fn free(ring: &RingPresentation, n: usize) -> Self {
        Self::new(ModuleMatrix::zero(ring, 0, n))
    }

    /// `R/(ideal)`.
    pub fn cyclic(ring: &RingPresentation, ideal: &[Polynomial]) -> Result<Self> {
        Self::from_rows(ring, 1, ideal.iter().map(|p| vec![p.clone()]).collect())
    }

    pub fn ring(&self) -> &RingPresentation {
        self.relations.ring()
    }

    pub fn ngens(&self) -> usize {
        self.relations.ncols()
    }

    pub fn relations(&self) -> &ModuleMatrix {
        &self.relations
    }

    pub fn relation_basis(&self) -> Result<&SubmoduleBasis> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = self.relations.submodule()?;
        Ok(self.basis.get_or_init(|| b))
    }

    pub fn unit(&self, i: usize) -> Element {
        let r = self.ring();
        (0..self.ngens()).map(|j| if i == j { r.one() } else { r.zero() }).collect()
    }

    /// Canonical form of an element.
    pub fn reduce(&self, v: &[Polynomial]) -> Result<Element> {
        Ok(self.relation_basis()?.reduce(v))
    }

    pub fn is_zero_element(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(self.relation_basis()?.contains(v))
    }

    pub fn equal(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
        let d: Element = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_zero_element(&d)
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.relation_basis()?.is_everything())
    }

    /// Module elements as a subquotient of the free module on the generators.
    pub fn as_subquotient(&self) -> Subquotient {
        let n = self.ngens();
        Subquotient::new(self.ring(), n, (0..n).map(|i| self.unit(i)).collect(), self.relations.rows().to_vec())
    }
}

/// `(G + K) / K` inside `R^rank`.
#[derive(Clone)]
pub struct Subquotient {
    ring: RingPresentation,
    rank: usize,
    gens: Vec<Element>,
    rels: Vec<Element>,
    rel_basis: Arc<OnceLock<SubmoduleBasis>>,
    full_basis: Arc<OnceLock<SubmoduleBasis>>,
    presentation: Arc<OnceLock<FPModule>>,
}

impl fmt::Debug for Subquotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subquotient of R^{} with {} generators, {} relations", self.rank, self.gens.len(), self.rels.len())
    }
}

impl Subquotient {
    pub fn new(ring: &RingPresentation, rank: usize, gens: Vec<Element>, rels: Vec<Element>) -> Self {
        Subquotient {
            ring: ring.clone(),
            rank,
            gens,
            rels,
            rel_basis: Arc::new(OnceLock::new()),
            full_basis: Arc::new(OnceLock::new()),
            presentation: Arc::new(OnceLock::new()),
        }
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[Element] {
        &self.gens
    }

    pub fn rels(&self) -> &[Element] {
        &self.rels
    }

    fn rel_basis(&self) -> Result<&SubmoduleBasis> {
        if let Some(b) = self.rel_basis.get() {
            return Ok(b);
        }
        let b = SubmoduleBasis::new(&self.ring, self.rank, self.rels.clone())?;
        Ok(self.rel_basis.get_or_init(|| b))
    }

    fn full_basis(&self) -> Result<&SubmoduleBasis> {
        if let Some(b) = self.full_basis.get() {
            return Ok(b);
        }
        let mut all = self.gens.clone();
        all.extend(self.rels.iter().cloned());
        let b = SubmoduleBasis::new(&self.ring, self.rank, all)?;
        Ok(self.full_basis.get_or_init(|| b))
    }

    /// Whether `v` is zero in the quotient by `K`.
    pub fn is_zero_element(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(self.rel_basis()?.contains(v))
    }

    /// Whether `v ∈ G + K`.
    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(self.full_basis()?.contains(v))
    }

    pub fn is_zero(&self) -> Result<bool> {
        let b = self.rel_basis()?;
        Ok(self.gens.iter().all(|g| b.contains(g)))
    }

    /// Coordinates of `v ∈ G + K` with respect to the generators of `G`.
    pub fn coords(&self, v: &[Polynomial]) -> Result<Option<Element>> {
        let s = self.gens.len();
        Ok(self.full_basis()?.lift(v)?.map(|mut c| {
            c.truncate(s);
            c
        }))
    }

    /// Presentation on the generators of `G`.
    pub fn presentation(&self) -> Result<&FPModule> {
        if let Some(p) = self.presentation.get() {
            return Ok(p);
        }
        let s = self.gens.len();
        let syz = self.full_basis()?.syzygies()?;
        let rows: Vec<Element> = syz
            .into_iter()
            .map(|mut r| {
                r.truncate(s);
                r
            })
            .filter(|r| r.iter().any(|p| !p.is_zero()))
            .collect();
        let m = FPModule::from_rows(&self.ring, s, rows)?;
        Ok(self.presentation.get_or_init(|| m))
    }

    /// The submodule `(G' + K)/K` for other generators `G'` in the same ambient.
    pub fn with_gens(&self, gens: Vec<Element>) -> Subquotient {
        Subquotient::new(&self.ring, self.rank, gens, self.rels.clone())
    }

    /// Whether `(self.G + K) ⊆ (other.G + other.K)`.
    pub fn is_submodule_of(&self, other: &Subquotient) -> Result<bool> {
        for g in self.gens.iter().chain(&self.rels) {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A module homomorphism given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: FPModule,
    target: FPModule,
    matrix: ModuleMatrix,
}

impl ModuleMap {
    /// Checks that relations of the source map to zero in the target.
    pub fn new(source: &FPModule, target: &FPModule, images: Vec<Element>) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::Input(format!("{} images for {} generators", images.len(), source.ngens())));
        }
        let matrix = ModuleMatrix::new(target.ring(), target.ngens(), images)?;
        let map = ModuleMap { source: source.clone(), target: target.clone(), matrix };
        for r in source.relations().rows() {
            let img = map.apply(r)?;
            if !target.is_zero_element(&img)? {
                return Err(Error::NotWellDefined(format!("module relation maps to a nonzero element {:?}", img)));
            }
        }
        Ok(map)
    }

    pub fn identity(m: &FPModule) -> Self {
        ModuleMap { source: m.clone(), target: m.clone(), matrix: ModuleMatrix::identity(m.ring(), m.ngens()) }
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn matrix(&self) -> &ModuleMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Polynomial]) -> Result<Element> {
        self.matrix.apply(v)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let matrix = self.matrix.mul(&other.matrix)?;
        Ok(ModuleMap { source: self.source.clone(), target: other.target.clone(), matrix })
    }

    /// Kernel as a subquotient of the source's free module.
    pub fn kernel(&self) -> Result<Subquotient> {
        let s = self.source.ngens();
        let mut rows = self.matrix.rows().to_vec();
        rows.extend(self.target.relations().rows().iter().cloned());
        let sub = SubmoduleBasis::new(self.source.ring(), self.target.ngens(), rows)?;
        let gens: Vec<Element> = sub
            .syzygies()?
            .into_iter()
            .map(|mut r| {
                r.truncate(s);
                r
            })
            .filter(|r| r.iter().any(|p| !p.is_zero()))
            .collect();
        Ok(Subquotient::new(self.source.ring(), s, gens, self.source.relations().rows().to_vec()))
    }

    /// Cokernel on the target generators.
    pub fn cokernel(&self) -> FPModule {
        FPModule::new(self.target.relations().stack(&self.matrix))
    }

    pub fn is_injective(&self) -> Result<bool> {
        self.kernel()?.is_zero()
    }

    pub fn is_surjective(&self) -> Result<bool> {
        self.cokernel().is_zero()
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_surjective()? && self.is_injective()?)
    }

    pub fn is_zero(&self) -> Result<bool> {
        for r in self.matrix.rows() {
            if !self.target.is_zero_element(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
