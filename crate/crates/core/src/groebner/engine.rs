//! Buchberger's algorithm on sparse vectors of a free module.
//!
//! A vector is a list of `(position, monomial, coefficient)` terms sorted in
//! descending order for a [`ModOrder`]. Ideals are the rank-one case.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::budget::Meter;
use crate::error::Result;
use crate::poly::Q;
use crate::ring::{grevlex, Monomial, MonomialOrder};

pub(crate) type Term = (usize, Monomial, Q);
pub(crate) type Vector = Vec<Term>;

/// Orders on the terms `m·e_i` of a free module. A lower position is larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModOrder {
    /// Term over position.
    Top(MonomialOrder),
    /// Position over term.
    Pot(MonomialOrder),
    /// Grevlex on the first `k` variables, then position, then `mono`.
    /// Eliminates those variables and the leading positions together.
    BlockPot { k: usize, mono: MonomialOrder },
}

impl ModOrder {
    pub fn mono(&self) -> MonomialOrder {
        match *self {
            ModOrder::Top(m) | ModOrder::Pot(m) | ModOrder::BlockPot { mono: m, .. } => m,
        }
    }

    pub fn cmp(&self, p1: usize, m1: &Monomial, p2: usize, m2: &Monomial) -> Ordering {
        match *self {
            ModOrder::Top(o) => o.cmp(m1, m2).then_with(|| p2.cmp(&p1)),
            ModOrder::Pot(o) => p2.cmp(&p1).then_with(|| o.cmp(m1, m2)),
            ModOrder::BlockPot { k, mono } => grevlex(&m1.0[..k], &m2.0[..k])
                .then_with(|| p2.cmp(&p1))
                .then_with(|| mono.cmp(m1, m2)),
        }
    }

    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(a.0, &a.1, b.0, &b.1)
    }
}

pub(crate) fn sort_vector(order: ModOrder, terms: Vec<Term>) -> Vector {
    let mut terms = terms;
    terms.sort_by(|a, b| order.cmp_terms(b, a).then_with(|| a.0.cmp(&b.0)));
    let mut out: Vector = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 += t.2,
            _ => out.push(t),
        }
    }
    out.retain(|t| !t.2.is_zero());
    out
}

/// `p - c·m·g`, all inputs sorted.
fn sub_mul(order: ModOrder, p: &[Term], c: &Q, m: &Monomial, g: &[Term]) -> Vector {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < p.len() && j < g.len() {
        let gm = g[j].1.mul(m);
        match order.cmp(p[i].0, &p[i].1, g[j].0, &gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((g[j].0, gm, -(c * &g[j].2)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &p[i].2 - c * &g[j].2;
                if !v.is_zero() {
                    out.push((p[i].0, gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    out.extend(g[j..].iter().map(|(pos, mono, a)| (*pos, mono.mul(m), -(c * a))));
    out
}

fn make_monic(v: &mut Vector) {
    if let Some(lc) = v.first().map(|t| t.2.clone()) {
        if !lc.is_one() {
            let inv = lc.recip();
            for t in v.iter_mut() {
                t.2 *= &inv;
            }
        }
    }
}

fn find_divisor<'a>(basis: &[&'a Vector], pos: usize, m: &Monomial) -> Option<&'a Vector> {
    basis.iter().find(|g| g[0].0 == pos && g[0].1.divides(m)).copied()
}

/// Reduces `v` by monic `basis`. With `full`, every term is reduced, otherwise only the lead.
pub(crate) fn reduce(order: ModOrder, v: Vector, basis: &[&Vector], full: bool, mut meter: Option<&mut Meter>) -> Result<Vector> {
    let mut out = Vec::new();
    let mut p = v;
    let mut start = 0;
    while start < p.len() {
        let (pos, m, c) = &p[start];
        match find_divisor(basis, *pos, m) {
            Some(g) => {
                if let Some(meter) = meter.as_deref_mut() {
                    meter.tick("Groebner reduction")?;
                }
                let q = m.div(&g[0].1);
                let c = c / &g[0].2;
                p = sub_mul(order, &p[start + 1..], &c, &q, &g[1..]);
                start = 0;
            }
            None if full => {
                out.push(p[start].clone());
                start += 1;
            }
            None => {
                out.extend(p.drain(start..));
                break;
            }
        }
    }
    Ok(out)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
}

struct State {
    order: ModOrder,
    product_criterion: bool,
    polys: Vec<Vector>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn lead(&self, i: usize) -> (usize, &Monomial) {
        (self.polys[i][0].0, &self.polys[i][0].1)
    }

    /// Gebauer–Möller update with the new element `h`.
    fn update(&mut self, h: Vector) {
        let t = self.polys.len();
        let (hp, hm) = (h[0].0, h[0].1.clone());
        self.polys.push(h);
        self.active.push(true);

        let cand: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&g| self.active[g] && self.lead(g).0 == hp)
            .map(|g| {
                let gm = self.lead(g).1;
                (g, gm.lcm(&hm), self.product_criterion && gm.coprime(&hm))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (g, l, disjoint)) in cand.iter().enumerate() {
            let dominated = cand[k + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if *disjoint || !dominated {
                kept.push((*g, l.clone(), *disjoint));
            }
        }

        let polys = &self.polys;
        self.pairs.retain(|p| {
            if p.pos != hp || !hm.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i][0].1.lcm(&hm);
            let lj = polys[p.j][0].1.lcm(&hm);
            li == p.lcm || lj == p.lcm
        });
        for (g, l, disjoint) in kept {
            if !disjoint {
                self.pairs.push(Pair { i: g, j: t, lcm: l, pos: hp });
            }
        }

        for g in 0..t {
            if self.active[g] && self.polys[g][0].0 == hp && hm.divides(&self.polys[g][0].1) {
                self.active[g] = false;
            }
        }
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.lcm
                .degree()
                .cmp(&pb.lcm.degree())
                .then_with(|| order.cmp(pa.pos, &pa.lcm, pb.pos, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let f = &self.polys[p.i];
        let g = &self.polys[p.j];
        let qf = p.lcm.div(&f[0].1);
        let qg = p.lcm.div(&g[0].1);
        let sf: Vector = f[1..].iter().map(|(pos, m, c)| (*pos, m.mul(&qf), c.clone())).collect();
        sub_mul(self.order, &sf, &Q::one(), &qg, &g[1..])
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by increasing lead term.
pub(crate) fn groebner(order: ModOrder, gens: Vec<Vector>, rank: usize) -> Result<Vec<Vector>> {
    let mut meter = Meter::new();
    let mut st = State { order, product_criterion: rank == 1, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for g in gens {
        let g = sort_vector(order, g);
        let basis: Vec<&Vector> = st.polys.iter().zip(&st.active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
        let mut h = reduce(order, g, &basis, false, Some(&mut meter))?;
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        st.update(h);
    }
    while let Some(pair) = st.select() {
        meter.tick("Groebner S-pair")?;
        let s = st.spoly(&pair);
        let basis: Vec<&Vector> = st.polys.iter().zip(&st.active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
        let mut h = reduce(order, s, &basis, false, Some(&mut meter))?;
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        st.update(h);
    }
    let mut min: Vec<Vector> = Vec::new();
    let active: Vec<Vector> = st.polys.into_iter().zip(st.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    for (i, p) in active.iter().enumerate() {
        let (pos, m) = (p[0].0, &p[0].1);
        let redundant = active.iter().enumerate().any(|(j, q)| {
            j != i && q[0].0 == pos && q[0].1.divides(m) && (q[0].1 != *m || j < i)
        });
        if !redundant {
            min.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(min.len());
    for i in 0..min.len() {
        let others: Vec<&Vector> = min.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v).collect();
        let head = min[i][0].clone();
        let mut tail = reduce(order, min[i][1..].to_vec(), &others, true, Some(&mut meter))?;
        tail.insert(0, head);
        out.push(tail);
    }
    out.sort_by(|a, b| order.cmp_terms(&a[0], &b[0]));
    Ok(out)
}

/// Checks Buchberger's criterion directly: all S-vectors reduce to zero.
pub(crate) fn is_groebner(order: ModOrder, basis: &[Vector]) -> bool {
    let refs: Vec<&Vector> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (f, g) = (&basis[i], &basis[j]);
            if f[0].0 != g[0].0 {
                continue;
            }
            let lcm = f[0].1.lcm(&g[0].1);
            let qf = lcm.div(&f[0].1);
            let qg = lcm.div(&g[0].1);
            let sf: Vector = f.iter().map(|(p, m, c)| (*p, m.mul(&qf), c / &f[0].2)).collect();
            let sg: Vector = g.iter().map(|(p, m, c)| (*p, m.mul(&qg), c / &g[0].2)).collect();
            let s = sub_mul(order, &sf, &Q::one(), &Monomial::one(lcm.nvars()), &sg);
            match reduce(order, s, &refs, true, None) {
                Ok(r) if r.is_empty() => {}
                _ => return false,
            }
        }
    }
    true
}
