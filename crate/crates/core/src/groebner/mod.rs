//! Gröbner bases for ideals and submodules, and the ideal operations built on them.

pub mod budget;
mod engine;
pub mod module;

use std::sync::Arc;

use crate::error::Result;
use crate::poly::Polynomial;
use crate::presentation::RingMap;
use crate::ring::{Monomial, MonomialOrder, PolyRing};

pub use budget::{step_budget, with_step_budget, DEFAULT_STEP_BUDGET};
pub use engine::ModOrder;
pub(crate) use engine::{groebner, is_groebner, reduce, sort_vector, Vector};

pub(crate) fn poly_to_vector(p: &Polynomial, pos: usize) -> Vector {
    p.terms().iter().map(|(m, c)| (pos, m.clone(), c.clone())).collect()
}

pub(crate) fn vector_to_poly(ring: &Arc<PolyRing>, v: Vector) -> Polynomial {
    Polynomial::from_terms(ring, v.into_iter().map(|(_, m, c)| (m, c)).collect())
}

/// A reduced Gröbner basis of an ideal, for the order of its ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    vecs: Vec<Vector>,
}

/// Computes the reduced Gröbner basis of `(gens)` in `ring` for `ring.order()`.
pub fn groebner_basis(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let order = ModOrder::Pot(ring.order());
    let input = gens.iter().filter(|g| !g.is_zero()).map(|g| poly_to_vector(g, 0)).collect();
    let vecs = groebner(order, input, 1)?;
    let gens = vecs.iter().map(|v| vector_to_poly(ring, v.clone())).collect();
    Ok(GroebnerBasis { ring: ring.clone(), gens, vecs })
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let refs: Vec<&Vector> = self.vecs.iter().collect();
        let order = ModOrder::Pot(self.ring.order());
        let r = reduce(order, sort_vector(order, poly_to_vector(p, 0)), &refs, true, None).expect("no budget for normal forms");
        vector_to_poly(&self.ring, r)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_all(&self, ps: &[Polynomial]) -> bool {
        ps.iter().all(|p| self.contains(p))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.vecs.iter().map(|v| v[0].1.clone()).collect()
    }

    /// Re-checks Buchberger's criterion on the stored basis.
    pub fn verify(&self) -> bool {
        is_groebner(ModOrder::Pot(self.ring.order()), &self.vecs)
    }

    /// Number of standard monomials if the quotient is finite-dimensional.
    pub fn quotient_dimension(&self) -> Option<usize> {
        let leads = self.lead_monomials();
        let n = self.ring.nvars();
        if self.is_unit() {
            return Some(0);
        }
        // every variable needs a pure power among the leads
        let mut bounds = vec![0u32; n];
        for (i, b) in bounds.iter_mut().enumerate() {
            *b = leads
                .iter()
                .filter(|m| m.0.iter().enumerate().all(|(j, &e)| j == i || e == 0))
                .map(|m| m.0[i])
                .min()?;
        }
        let mut count = 0;
        let mut e = vec![0u32; n];
        loop {
            let m = Monomial(e.clone());
            if !leads.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Some(count);
                }
                e[k] += 1;
                if e[k] < bounds[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

/// True if `p ∈ (gens)`.
pub fn ideal_contains(ring: &Arc<PolyRing>, gens: &[Polynomial], p: &Polynomial) -> Result<bool> {
    Ok(groebner_basis(ring, gens)?.contains(p))
}

/// True if `(a) ⊆ (b)`.
pub fn ideal_subset(ring: &Arc<PolyRing>, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    Ok(groebner_basis(ring, b)?.contains_all(a))
}

pub fn ideals_equal(ring: &Arc<PolyRing>, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    Ok(ideal_subset(ring, a, b)? && ideal_subset(ring, b, a)?)
}

/// Generators of `(gens) ∩ Q[keep]`, returned in `ring`.
pub fn eliminate(ring: &Arc<PolyRing>, gens: &[Polynomial], keep: &[usize]) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    let mut perm = elim.clone();
    perm.extend(keep.iter().copied());
    let names: Vec<&str> = perm.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let block = PolyRing::new(&names, MonomialOrder::Block { first: elim.len() })?;
    let mut to_block = vec![0; n];
    for (k, &i) in perm.iter().enumerate() {
        to_block[i] = k;
    }
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.map_vars(&block, &to_block)).collect();
    let gb = groebner_basis(&block, &moved)?;
    Ok(gb
        .gens()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.free_of(0..elim.len())))
        .map(|g| g.map_vars(ring, &perm))
        .collect())
}

/// Same as [`eliminate`], with variables given by name.
pub fn eliminate_keep_named(ring: &Arc<PolyRing>, gens: &[Polynomial], keep: &[&str]) -> Result<Vec<Polynomial>> {
    let keep = keep.iter().map(|v| ring.var_index(v)).collect::<Result<Vec<_>>>()?;
    eliminate(ring, gens, &keep)
}

/// Adjoins a fresh variable in front of `ring`; returns the new ring and the embedding.
pub(crate) fn adjoin_front(ring: &Arc<PolyRing>, base: &str) -> Result<(Arc<PolyRing>, Vec<usize>)> {
    let t = ring.fresh_name(base);
    let mut names = vec![t];
    names.extend(ring.vars().iter().cloned());
    let big = PolyRing::new(&names, ring.order())?;
    Ok((big, (1..=ring.nvars()).collect()))
}

/// Generators of `(a) ∩ (b)`.
pub fn intersect(ring: &Arc<PolyRing>, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let (big, emb) = adjoin_front(ring, "t")?;
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens: Vec<Polynomial> = a.iter().map(|g| &t * &g.map_vars(&big, &emb)).collect();
    gens.extend(b.iter().map(|g| &one_minus_t * &g.map_vars(&big, &emb)));
    let keep: Vec<usize> = (1..big.nvars()).collect();
    let back: Vec<usize> = std::iter::once(0).chain(0..ring.nvars()).collect();
    Ok(eliminate(&big, &gens, &keep)?.into_iter().map(|g| g.map_vars(ring, &back)).collect())
}

/// Generators of `(a) ∩ (b_1) ∩ ...` for a list of ideals.
pub fn intersect_all(ring: &Arc<PolyRing>, ideals: &[Vec<Polynomial>]) -> Result<Vec<Polynomial>> {
    let mut it = ideals.iter();
    let mut acc = match it.next() {
        Some(first) => first.clone(),
        None => return Ok(vec![Polynomial::one(ring)]),
    };
    for i in it {
        acc = intersect(ring, &acc, i)?;
    }
    Ok(acc)
}

/// `(i) : (j) = {a : a·j ⊆ i}`.
pub fn colon(ring: &Arc<PolyRing>, i: &[Polynomial], j: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut parts = Vec::new();
    for g in j.iter().filter(|g| !g.is_zero()) {
        let inter = intersect(ring, i, std::slice::from_ref(g))?;
        parts.push(inter.iter().map(|h| h.div_exact(g).expect("intersection lies in (g)")).collect());
    }
    let out = intersect_all(ring, &parts)?;
    Ok(groebner_basis(ring, &out)?.gens().to_vec())
}

/// `(i) : (j)^∞`.
pub fn saturate(ring: &Arc<PolyRing>, i: &[Polynomial], j: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut cur = groebner_basis(ring, i)?.gens().to_vec();
    loop {
        let next = colon(ring, &cur, j)?;
        if ideal_subset(ring, &next, &cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Kernel of a ring map, as generators in the source ambient ring.
pub fn ring_map_kernel(map: &RingMap) -> Result<Vec<Polynomial>> {
    let src = map.source().ambient();
    let tgt = map.target().ambient();
    let (ns, nt) = (src.nvars(), tgt.nvars());
    let mut names: Vec<String> = tgt.vars().to_vec();
    let mut src_names = Vec::with_capacity(ns);
    for v in src.vars() {
        let fresh = crate::ring::fresh_name(&names, v);
        names.push(fresh.clone());
        src_names.push(fresh);
    }
    let big = PolyRing::new(&names, MonomialOrder::Block { first: nt })?;
    let tgt_emb: Vec<usize> = (0..nt).collect();
    let mut gens: Vec<Polynomial> = map.target().relations().iter().map(|r| r.map_vars(&big, &tgt_emb)).collect();
    for (i, img) in map.images().iter().enumerate() {
        gens.push(&Polynomial::var(&big, nt + i) - &img.map_vars(&big, &tgt_emb));
    }
    let gb = groebner_basis(&big, &gens)?;
    let mut back = vec![0; nt + ns];
    for i in 0..ns {
        back[nt + i] = i;
    }
    Ok(gb
        .gens()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.free_of(0..nt)))
        .map(|g| g.map_vars(src, &back))
        .collect())
}

#[cfg(test)]
mod tests;
