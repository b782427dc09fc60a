//! Radicals of zero-dimensional ideals via squarefree univariate eliminants.

use num_traits::Zero;

use crate::error::Result;
use crate::groebner::{eliminate, groebner_basis};
use crate::poly::{Polynomial, Q};
use crate::presentation::RingPresentation;
use crate::ring::Monomial;

fn to_coeffs(p: &Polynomial, var: usize) -> Vec<Q> {
    let deg = p.terms().iter().map(|(m, _)| m.0[var]).max().unwrap_or(0) as usize;
    let mut c = vec![Q::zero(); deg + 1];
    for (m, a) in p.terms() {
        c[m.0[var] as usize] += a;
    }
    c
}

fn from_coeffs(c: &[Q], like: &Polynomial, var: usize) -> Polynomial {
    let n = like.ring().nvars();
    let terms = c
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| {
            let mut m = Monomial::one(n);
            m.0[var] = k as u32;
            (m, a.clone())
        })
        .collect();
    Polynomial::from_terms(like.ring(), terms)
}

fn trim(mut c: Vec<Q>) -> Vec<Q> {
    while c.last().is_some_and(|a| a.is_zero()) {
        c.pop();
    }
    c
}

fn rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let f = r.last().unwrap().clone() / &lb;
        let shift = r.len() - b.len();
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &f * bi;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn gcd(a: Vec<Q>, b: Vec<Q>) -> Vec<Q> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn div_exact(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap().clone();
    let mut q = vec![Q::zero(); a.len() + 1 - b.len()];
    while r.len() >= b.len() && !r.is_empty() {
        let f = r.last().unwrap().clone() / &lb;
        let shift = r.len() - b.len();
        q[shift] = f.clone();
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &f * bi;
        }
        r.pop();
        r = trim(r);
    }
    q
}

/// Squarefree part of a polynomial in one variable.
pub fn squarefree_part(p: &Polynomial, var: usize) -> Polynomial {
    let c = trim(to_coeffs(p, var));
    if c.len() <= 1 {
        return p.clone();
    }
    let d: Vec<Q> = c.iter().enumerate().skip(1).map(|(k, a)| a * Q::from_integer((k as i64).into())).collect();
    let g = gcd(c.clone(), d);
    from_coeffs(&div_exact(&c, &g), p, var)
}

/// The radical of a zero-dimensional ideal of `ring` (generators in the ambient ring,
/// relations of `ring` included automatically). Returns `None` if the ideal is not
/// zero-dimensional.
pub fn radical_zero_dim(ring: &RingPresentation, ideal: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
    let amb = ring.ambient();
    let mut gens = ring.lift_ideal(ideal);
    let gb = groebner_basis(amb, &gens)?;
    if gb.is_unit() {
        return Ok(Some(vec![ring.one()]));
    }
    if gb.quotient_dimension().is_none() {
        return Ok(None);
    }
    for i in 0..amb.nvars() {
        let e = eliminate(amb, &gens, &[i])?;
        let Some(p) = e.into_iter().find(|p| !p.is_zero()) else { return Ok(None) };
        gens.push(squarefree_part(&p, i));
    }
    ring.normalize_ideal(&gens).map(Some)
}

/// Number of geometric points of a zero-dimensional scheme `V(ideal)`, if finite.
pub fn count_points(ring: &RingPresentation, ideal: &[Polynomial]) -> Result<Option<usize>> {
    let Some(rad) = radical_zero_dim(ring, ideal)? else { return Ok(None) };
    Ok(groebner_basis(ring.ambient(), &ring.lift_ideal(&rad))?.quotient_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonomialOrder;

    #[test]
    fn squarefree() {
        let r = RingPresentation::parse::<_, &str>(&["w"], MonomialOrder::Grevlex, &[]).unwrap();
        let p = r.parse_poly("w^3*(w-1)^2").unwrap();
        assert_eq!(squarefree_part(&p, 0).monic(), r.parse_poly("w^2 - w").unwrap());
    }

    #[test]
    fn points() {
        let r = RingPresentation::parse::<_, &str>(&["u", "v", "w"], MonomialOrder::Grevlex, &[]).unwrap();
        let i: Vec<Polynomial> = ["u", "v^2", "w^2*(w-1)^3"].iter().map(|s| r.parse_poly(s).unwrap()).collect();
        assert_eq!(count_points(&r, &i).unwrap(), Some(2));
        let line: Vec<Polynomial> = ["u", "v"].iter().map(|s| r.parse_poly(s).unwrap()).collect();
        assert_eq!(count_points(&r, &line).unwrap(), None);
    }
}
