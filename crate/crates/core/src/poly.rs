use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::ring::{Monomial, PolyRing};

/// Rational coefficients.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted in descending order for the ring's monomial order and never
/// carry a zero coefficient, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Q)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn check_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) {
    assert!(same_ring(a, b), "polynomials from different rings: {a} vs {b}");
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Q::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Q) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.nvars()), c)] }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(ring.nvars(), i), Q::one())] }
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Q) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Q)>) -> Self {
        let mut acc: HashMap<Monomial, Q> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            *acc.entry(m).or_insert_with(Q::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Q)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Q)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Q)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Variables occurring in this polynomial.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.0[i] > 0))
            .collect()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        // multiplication by a monomial preserves the term order
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn diff(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] > 0)
            .map(|(m, c)| {
                let mut e = m.clone();
                e.0[i] -= 1;
                (e, c * q(m.0[i] as i64))
            })
            .collect();
        // lowering one exponent can reorder terms under grevlex ties, so re-sort
        Self::from_terms(&self.ring, terms)
    }

    pub fn diff_by_name(&self, name: &str) -> Result<Self> {
        Ok(self.diff(self.ring.var_index(name)?))
    }

    /// Substitutes `images[i]` for variable `i`; all images live in one target ring.
    pub fn substitute(&self, images: &[Polynomial], target: &Arc<PolyRing>) -> Self {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &powers[i][1];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
                if t.is_zero() {
                    break;
                }
            }
            for (mm, cc) in t.terms {
                *acc.entry(mm).or_insert_with(Q::zero) += cc;
            }
        }
        Self::from_terms(target, acc.into_iter().collect())
    }

    /// Substitutes a rational value for variable `i`, keeping the ring.
    pub fn eval_var(&self, i: usize, value: &Q) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.clone();
                let k = e.0[i];
                e.0[i] = 0;
                (e, c * pow_q(value, k))
            })
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    /// Re-embeds into `target`, sending variable `i` to variable `var_map[i]`.
    pub fn map_vars(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Self {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &k) in m.0.iter().enumerate() {
                    if k > 0 {
                        e[var_map[i]] += k;
                    }
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Same variables, possibly another order: re-sorts the terms.
    pub fn with_ring(&self, ring: &Arc<PolyRing>) -> Self {
        assert_eq!(ring.vars(), self.ring.vars());
        Self::from_terms(ring, self.terms.clone())
    }

    /// Moves into a ring that shares variable names (by name lookup).
    pub fn rename_into(&self, target: &Arc<PolyRing>) -> Result<Self> {
        let map = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.map_vars(target, &map))
    }

    /// Clears denominators and content so the leading coefficient is a positive integer.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            num = num.gcd(&v);
        }
        let mut s = Q::new(den, num);
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Exact division by `g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        check_ring(&self.ring, &g.ring);
        let (gm, gc) = g.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            if !gm.divides(m) {
                return None;
            }
            let t = (m.div(gm), c / gc);
            rem = &rem - &g.mul_monomial(&t.0, &t.1);
            quot.push(t);
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    pub fn cmp_terms(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.ring.order().cmp(a, b)
    }
}

pub(crate) fn pow_q(v: &Q, k: u32) -> Q {
    let mut r = Q::one();
    for _ in 0..k {
        r *= v;
    }
    r
}

fn merge(a: &Polynomial, b: &Polynomial, negate_b: bool) -> Polynomial {
    check_ring(&a.ring, &b.ring);
    let order = a.ring.order();
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        match order.cmp(&a.terms[i].0, &b.terms[j].0) {
            Ordering::Greater => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (m, c) = &b.terms[j];
                out.push((m.clone(), if negate_b { -c } else { c.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
                if !c.is_zero() {
                    out.push((a.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), if negate_b { -c } else { c.clone() })));
    Polynomial { ring: a.ring.clone(), terms: out }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        merge(self, rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        merge(self, rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        check_ring(&self.ring, &rhs.ring);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if rhs.terms.len() == 1 {
            return self.mul_monomial(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Q> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        Polynomial::from_terms(&self.ring, acc.into_iter().collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn fmt_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: terms in descending ring order, `*` and `^` explicit.
    /// The output parses back to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(fmt_q(&a));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars()[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
