//! Degree-bounded linear algebra over Q, independent of the Groebner engine.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use semismooth::poly::{Polynomial, Q};
use semismooth::ring::{Monomial, PolyRing};

pub type Vector = BTreeMap<(usize, Vec<u32>), Q>;

/// Exponent vectors of total degree exactly `d`.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

pub fn monomials_upto(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|k| monomials(n, k)).collect()
}

pub fn mono(r: &Arc<PolyRing>, e: &[u32]) -> Polynomial {
    Polynomial::monomial(r, Monomial(e.to_vec()), Q::one())
}

/// A module element as a sparse coefficient vector.
pub fn vector(v: &[Polynomial]) -> Vector {
    let mut out = Vector::new();
    for (i, p) in v.iter().enumerate() {
        for (m, c) in p.terms() {
            out.insert((i, m.0.clone()), c.clone());
        }
    }
    out
}

/// Row-reduces `rows`, returning a basis in echelon form keyed by pivot.
fn echelon(rows: Vec<Vector>) -> Vec<((usize, Vec<u32>), Vector)> {
    let mut basis: Vec<((usize, Vec<u32>), Vector)> = Vec::new();
    for r in rows {
        let r = reduce(&basis, r);
        if let Some((k, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            let inv = Q::one() / c;
            let r: Vector = r.into_iter().map(|(k, v)| (k, v * &inv)).collect();
            basis.push((k, r));
        }
    }
    basis
}

fn reduce(basis: &[((usize, Vec<u32>), Vector)], mut v: Vector) -> Vector {
    for (pivot, row) in basis {
        if let Some(c) = v.get(pivot).cloned() {
            for (k, x) in row {
                let e = v.entry(k.clone()).or_insert_with(Q::zero);
                *e -= &c * x;
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
    }
    v
}

pub fn in_span(rows: Vec<Vector>, target: Vector) -> bool {
    let basis = echelon(rows);
    reduce(&basis, target).is_empty()
}

/// `p ∈ (gens)` using all products `m*g` of degree at most `d`.
pub fn member_bounded(r: &Arc<PolyRing>, gens: &[Polynomial], p: &Polynomial, d: u32) -> bool {
    let mut rows = Vec::new();
    for g in gens {
        let dg = match g.total_degree() {
            Some(k) => k,
            None => continue,
        };
        if dg > d {
            continue;
        }
        for e in monomials_upto(r.nvars(), d - dg) {
            rows.push(vector(&[&mono(r, &e) * g]));
        }
    }
    in_span(rows, vector(std::slice::from_ref(p)))
}

/// A basis of the syzygies `(a_1..a_k)` of `gens` with `deg a_i + deg g_i <= d`.
pub fn syzygies_bounded(r: &Arc<PolyRing>, gens: &[Polynomial], d: u32) -> Vec<Vec<Polynomial>> {
    // unknowns: (i, monomial) with i the generator index
    let mut unknowns = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let dg = g.total_degree().unwrap_or(0);
        if dg <= d {
            for e in monomials_upto(r.nvars(), d - dg) {
                unknowns.push((i, e));
            }
        }
    }
    // columns are the images m*g_i; the kernel of the column map
    let cols: Vec<Vector> = unknowns.iter().map(|(i, e)| vector(&[&mono(r, e) * &gens[*i]])).collect();
    let mut keys: Vec<(usize, Vec<u32>)> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let n = unknowns.len();
    // dense Gauss-Jordan on the equation matrix (rows = keys, cols = unknowns)
    let mut m: Vec<Vec<Q>> = keys.iter().map(|k| cols.iter().map(|c| c.get(k).cloned().unwrap_or_else(Q::zero)).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = Q::one() / m[row][col].clone();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pr = m[row].clone();
                for (x, y) in m[i].iter_mut().zip(pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut sol = vec![Q::zero(); n];
        sol[free] = Q::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            sol[pc] = -m[ri][free].clone();
        }
        let mut v = vec![Polynomial::zero(r); gens.len()];
        for (k, c) in sol.into_iter().enumerate() {
            if !c.is_zero() {
                let (i, e) = &unknowns[k];
                v[*i] = &v[*i] + &Polynomial::monomial(r, Monomial(e.clone()), c);
            }
        }
        out.push(v);
    }
    out
}
