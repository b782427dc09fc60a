//! Fitting ideals and annihilators.

use super::{prune, FPModule};
use crate::error::Result;
use crate::groebner::intersect_all;
use crate::groebner::module::SubmoduleBasis;
use crate::poly::Polynomial;

fn det(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let ring = m[rows[0]][cols[0]].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    let rest_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        let e = &m[rows[0]][c];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let t = e * &det(m, rest_rows, &rest);
        acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// All nonzero `k × k` minors of a matrix given by rows with `ncols` columns.
pub fn minors(rows: &[Vec<Polynomial>], ncols: usize, k: usize) -> Vec<Polynomial> {
    if k == 0 || k > rows.len() || k > ncols {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rs in subsets(rows.len(), k) {
        for cs in subsets(ncols, k) {
            let d = det(rows, &rs, &cs);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// `Fitt_i(M)`: the ideal of `(n − i)`-minors of a presentation, as reduced generators
/// (the zero ideal is the empty list).
pub fn fitting_ideal(m: &FPModule, i: usize) -> Result<Vec<Polynomial>> {
    let pruned = prune(m)?;
    let m = &pruned.module;
    let ring = m.ring();
    let n = m.ngens();
    if i >= n {
        return Ok(vec![ring.one()]);
    }
    let k = n - i;
    let mins = minors(m.relations().rows(), n, k);
    ring.normalize_ideal(&mins)
}

/// `Ann(M)` as the intersection of the annihilators of the generators.
pub fn annihilator(m: &FPModule) -> Result<Vec<Polynomial>> {
    let ring = m.ring();
    let n = m.ngens();
    let mut parts = Vec::with_capacity(n);
    for i in 0..n {
        let mut rows = vec![m.unit(i)];
        rows.extend(m.relations().rows().iter().cloned());
        let sub = SubmoduleBasis::new(ring, n, rows)?;
        let mut ideal: Vec<Polynomial> = sub.syzygies()?.into_iter().map(|r| r[0].clone()).filter(|p| !p.is_zero()).collect();
        ideal.extend(ring.relations().iter().cloned());
        parts.push(ideal);
    }
    if parts.is_empty() {
        return Ok(vec![ring.one()]);
    }
    let inter = intersect_all(ring.ambient(), &parts)?;
    ring.normalize_ideal(&inter)
}
