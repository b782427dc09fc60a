//! Modules over `Ā` viewed over `A` along a ring map `A → Ā`.
//!
//! For `M = Ā^b / B` and elements `w_1..w_s ∈ M`, the tool decides whether an
//! element of `M` is an `A`-combination of the `w_l` (and finds one), and computes
//! the `A`-linear relations among the `w_l`. Both come from one Gröbner basis in
//! `Q[x, T]^(b+s)` for an order eliminating `x` and the first `b` positions.

use std::sync::Arc;

use crate::error::Result;
use crate::groebner::module::{from_vector, to_vector};
use crate::groebner::{groebner, reduce, ModOrder, Vector};
use crate::poly::Polynomial;
use crate::presentation::RingMap;
use crate::ring::{fresh_name, MonomialOrder, PolyRing};

pub struct Pushforward {
    map: RingMap,
    rank: usize,
    gens: Vec<Vec<Polynomial>>,
    big: Arc<PolyRing>,
    nx: usize,
    order: ModOrder,
    gb: Vec<Vector>,
}

impl Pushforward {
    /// `M = Ā^rank / relations`, with `A`-module generators `gens`.
    pub fn new(map: &RingMap, rank: usize, relations: &[Vec<Polynomial>], gens: Vec<Vec<Polynomial>>) -> Result<Self> {
        let abar = map.target();
        let a = map.source();
        let nx = abar.nvars();
        let mut names: Vec<String> = abar.vars().to_vec();
        for v in a.vars() {
            let f = fresh_name(&names, v);
            names.push(f);
        }
        let big = PolyRing::new(&names, MonomialOrder::Grevlex)?;
        let order = ModOrder::BlockPot { k: nx, mono: MonomialOrder::Grevlex };
        let xemb: Vec<usize> = (0..nx).collect();
        let up = |p: &Polynomial| p.map_vars(&big, &xemb);

        let mut ideal: Vec<Polynomial> = abar.relations().iter().map(up).collect();
        for (i, g) in map.images().iter().enumerate() {
            ideal.push(&Polynomial::var(&big, nx + i) - &up(g));
        }
        let s = gens.len();
        let mut input: Vec<Vector> = Vec::new();
        for (l, g) in gens.iter().enumerate() {
            let mut v: Vec<Polynomial> = g.iter().map(up).collect();
            v.resize(rank + s, Polynomial::zero(&big));
            v[rank + l] = Polynomial::one(&big);
            input.push(to_vector(order, &v, 0));
        }
        for r in relations {
            let v: Vec<Polynomial> = r.iter().map(up).collect();
            input.push(to_vector(order, &v, 0));
        }
        for pos in 0..rank {
            for h in &ideal {
                input.push(to_vector(order, std::slice::from_ref(h), pos));
            }
        }
        let gb = groebner(order, input, rank + s)?;
        Ok(Pushforward { map: map.clone(), rank, gens, big, nx, order, gb })
    }

    /// `Ā` as an `A`-algebra with module generators `gens`.
    pub fn algebra(map: &RingMap, gens: Vec<Polynomial>) -> Result<Self> {
        Self::new(map, 1, &[], gens.into_iter().map(|g| vec![g]).collect())
    }

    /// The subalgebra of `Ā` generated by the images of `A`.
    pub fn subalgebra(map: &RingMap) -> Result<Self> {
        let one = map.target().one();
        Self::algebra(map, vec![one])
    }

    pub fn map(&self) -> &RingMap {
        &self.map
    }

    pub fn gens(&self) -> &[Vec<Polynomial>] {
        &self.gens
    }

    fn in_a_region(&self, v: &Vector) -> bool {
        v.iter().all(|(pos, m, _)| *pos >= self.rank && m.free_of(0..self.nx))
    }

    fn to_source(&self, p: &Polynomial) -> Result<Polynomial> {
        let a = self.map.source();
        let back: Vec<usize> = (0..self.big.nvars()).map(|i| i.saturating_sub(self.nx)).collect();
        a.reduce(&p.map_vars(a.ambient(), &back))
    }

    /// Coefficients `c` in `A` with `v = Σ c_l·gens_l`, if they exist.
    pub fn express(&self, v: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
        let xemb: Vec<usize> = (0..self.nx).collect();
        let up: Vec<Polynomial> = v.iter().map(|p| p.map_vars(&self.big, &xemb)).collect();
        let refs: Vec<&Vector> = self.gb.iter().collect();
        let r = reduce(self.order, to_vector(self.order, &up, 0), &refs, true, None)?;
        if !self.in_a_region(&r) {
            return Ok(None);
        }
        let coeffs = from_vector(&self.big, &r, self.rank, self.gens.len());
        Ok(Some(coeffs.iter().map(|c| self.to_source(&-c)).collect::<Result<Vec<_>>>()?))
    }

    /// Scalar version of [`express`](Self::express) for rank one.
    pub fn express_scalar(&self, p: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
        self.express(std::slice::from_ref(p))
    }

    /// Generators of the `A`-module of relations among `gens`.
    pub fn relations(&self) -> Result<Vec<Vec<Polynomial>>> {
        let mut out = Vec::new();
        for v in self.gb.iter().filter(|v| self.in_a_region(v)) {
            let c = from_vector(&self.big, v, self.rank, self.gens.len());
            let c = c.iter().map(|p| self.to_source(p)).collect::<Result<Vec<_>>>()?;
            if c.iter().any(|p| !p.is_zero()) {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Whether `gens` generate the whole module over `A`: every `x_j·gens_l` and every
    /// unit vector must be expressible.
    pub fn generates(&self) -> Result<bool> {
        let abar = self.map.target();
        for pos in 0..self.rank {
            let mut e = vec![abar.zero(); self.rank];
            e[pos] = abar.one();
            if self.express(&e)?.is_none() {
                return Ok(false);
            }
        }
        for g in &self.gens {
            for x in abar.gens() {
                let v: Vec<Polynomial> = g.iter().map(|p| &x * p).collect();
                if self.express(&v)?.is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Writes `p ∈ Ā` as the image of an element of `A`, if possible.
pub fn preimage(map: &RingMap, p: &Polynomial) -> Result<Option<Polynomial>> {
    Ok(Pushforward::subalgebra(map)?.express_scalar(p)?.map(|mut c| c.remove(0)))
}

/// True if `p` lies in the subalgebra generated by the images of `map`.
pub fn in_subalgebra(map: &RingMap, p: &Polynomial) -> Result<bool> {
    Ok(preimage(map, p)?.is_some())
}

/// True if every variable of the target is in the image.
pub fn is_surjective(map: &RingMap) -> Result<bool> {
    let sub = Pushforward::subalgebra(map)?;
    for x in map.target().gens() {
        if sub.express_scalar(&x)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::RingPresentation;

    fn pinch() -> RingMap {
        let a = RingPresentation::parse(&["u", "v", "w"], MonomialOrder::Grevlex, &["u^2 - v^2*w"]).unwrap();
        let abar = RingPresentation::parse::<_, &str>(&["x", "y"], MonomialOrder::Grevlex, &[]).unwrap();
        RingMap::parse(&a, &abar, &["x*y", "y", "x^2"]).unwrap()
    }

    #[test]
    fn express_over_pinch() {
        let f = pinch();
        let abar = f.target().clone();
        let x = abar.var("x").unwrap();
        let pf = Pushforward::algebra(&f, vec![abar.one(), x.clone()]).unwrap();
        assert!(pf.generates().unwrap());
        let p = abar.parse_poly("x^3*y + 2*x^2 + x*y^2").unwrap();
        let c = pf.express_scalar(&p).unwrap().unwrap();
        let back = &f.apply(&c[0]).unwrap() + &(&f.apply(&c[1]).unwrap() * &x);
        assert!(abar.equal(&back, &p).unwrap());
        // y·x is in A, x alone is not
        assert!(in_subalgebra(&f, &abar.parse_poly("x*y").unwrap()).unwrap());
        assert!(!in_subalgebra(&f, &x).unwrap());
        assert!(!is_surjective(&f).unwrap());
    }

    #[test]
    fn relations_of_pinch_module() {
        let f = pinch();
        let abar = f.target().clone();
        let x = abar.var("x").unwrap();
        let pf = Pushforward::algebra(&f, vec![abar.one(), x.clone()]).unwrap();
        let rels = pf.relations().unwrap();
        assert!(!rels.is_empty());
        for r in &rels {
            let s = &f.apply(&r[0]).unwrap() + &(&f.apply(&r[1]).unwrap() * &x);
            assert!(abar.is_zero(&s).unwrap());
        }
        // u·1 − v·x = 0 must be among the consequences
        let a = f.source();
        let target = vec![a.var("u").unwrap(), -a.var("v").unwrap()];
        let sub = crate::groebner::module::SubmoduleBasis::new(a, 2, rels).unwrap();
        assert!(sub.contains(&target));
    }
}
