//! Hom and Ext¹ from presentations.

use super::{Element, FPModule, Subquotient};
use crate::error::Result;
use crate::groebner::module::{syzygy, SubmoduleBasis};
use crate::presentation::RingPresentation;

/// `{v ∈ R^n : v·rows ∈ span(target_rels)}` for a map given by `rows` into `R^m`.
fn preimage_of_zero(ring: &RingPresentation, rows: &[Element], m: usize, target_rels: Vec<Element>) -> Result<Vec<Element>> {
    let n = rows.len();
    let identity = || -> Vec<Element> {
        (0..n).map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect()).collect()
    };
    if m == 0 {
        return Ok(identity());
    }
    let mut all = rows.to_vec();
    all.extend(target_rels);
    let sub = SubmoduleBasis::new(ring, m, all)?;
    Ok(sub
        .syzygies()?
        .into_iter()
        .map(|mut r| {
            r.truncate(n);
            r
        })
        .filter(|r| r.iter().any(|p| !p.is_zero()))
        .collect())
}

/// `rels` placed in each of `blocks` consecutive blocks of width `width`.
fn block_copies(ring: &RingPresentation, rels: &[Element], blocks: usize, width: usize) -> Vec<Element> {
    let mut out = Vec::new();
    for k in 0..blocks {
        for r in rels {
            let mut v = vec![ring.zero(); blocks * width];
            for (j, p) in r.iter().enumerate() {
                v[k * width + j] = p.clone();
            }
            out.push(v);
        }
    }
    out
}

/// Rows of the map `R^{a·b} → R^{p·b}`, `Φ ↦ A·Φ`, where `A` is `p × a`.
fn left_mult_rows(ring: &RingPresentation, a_rows: &[Element], a: usize, b: usize) -> Vec<Element> {
    let p = a_rows.len();
    let mut out = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            let mut v = vec![ring.zero(); p * b];
            for (k, row) in a_rows.iter().enumerate() {
                v[k * b + j] = row[i].clone();
            }
            out.push(v);
        }
    }
    out
}

/// `Hom(M, N)` inside `R^{a·b}`: a homomorphism is the matrix of images of the
/// generators of `M`, flattened row by row.
pub fn hom_subquotient(m: &FPModule, n: &FPModule) -> Result<Subquotient> {
    let ring = m.ring();
    let (a, b) = (m.ngens(), n.ngens());
    let a_rows = m.relations().rows();
    let b_rows = n.relations().rows();
    let p = a_rows.len();
    let l = left_mult_rows(ring, a_rows, a, b);
    let gens = preimage_of_zero(ring, &l, p * b, block_copies(ring, b_rows, p, b))?;
    Ok(Subquotient::new(ring, a * b, gens, block_copies(ring, b_rows, a, b)))
}

pub fn hom(m: &FPModule, n: &FPModule) -> Result<FPModule> {
    Ok(hom_subquotient(m, n)?.presentation()?.clone())
}

/// `Ext¹(M, N)` inside `N^p ⊂ R^{p·b}` from `F2 → F1 → F0 → M`, with `F2` the full
/// first syzygy of the relations of `M`.
pub fn ext1_subquotient(m: &FPModule, n: &FPModule) -> Result<Subquotient> {
    let ring = m.ring();
    let (a, b) = (m.ngens(), n.ngens());
    let a_rows = m.relations().rows();
    let b_rows = n.relations().rows();
    let p = a_rows.len();
    let c_rows = syzygy(m.relations())?.rows().to_vec();
    let c = c_rows.len();
    let lc = left_mult_rows(ring, &c_rows, p, b);
    let gens = preimage_of_zero(ring, &lc, c * b, block_copies(ring, b_rows, c, b))?;
    let mut rels = left_mult_rows(ring, a_rows, a, b);
    rels.extend(block_copies(ring, b_rows, p, b));
    Ok(Subquotient::new(ring, p * b, gens, rels))
}

pub fn ext1(m: &FPModule, n: &FPModule) -> Result<FPModule> {
    Ok(ext1_subquotient(m, n)?.presentation()?.clone())
}
