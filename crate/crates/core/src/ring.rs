use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Exponent vector of a monomial, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True if no variable with index in `range` occurs.
    pub fn free_of(&self, range: std::ops::Range<usize>) -> bool {
        self.0[range].iter().all(|&e| e == 0)
    }
}

/// Monomial orders supported by the engine.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Grevlex on the first `first` variables, ties broken by grevlex on the rest.
    /// The first block is eliminated.
    Block { first: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(&a.0, &b.0),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Block { first } => grevlex(&a.0[..first], &b.0[..first])
                .then_with(|| grevlex(&a.0[first..], &b.0[first..])),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block { first } => format!("block:{first}"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "grevlex" | "degrevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => match s.strip_prefix("block:") {
                Some(n) => n
                    .parse()
                    .map(|first| MonomialOrder::Block { first })
                    .map_err(|_| Error::InvalidRing(format!("bad block order `{s}`"))),
                None => Err(Error::InvalidRing(format!("unknown monomial order `{s}`"))),
            },
        }
    }
}

pub(crate) fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// A polynomial ring over the rationals with named variables and a monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Block { first } = order {
            if first > vars.len() {
                return Err(Error::InvalidRing("block larger than variable list".into()));
            }
        }
        Ok(Arc::new(PolyRing { vars, order }))
    }

    /// Grevlex ring; panics on invalid names, for literals in code and tests.
    pub fn grevlex<S: AsRef<str>>(vars: &[S]) -> Arc<Self> {
        Self::new(vars, MonomialOrder::Grevlex).expect("valid variable names")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing { vars: self.vars.clone(), order })
    }

    /// A name not yet used by this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        fresh_name(&self.vars, base)
    }
}

pub(crate) fn fresh_name(taken: &[String], base: &str) -> String {
    if !taken.iter().any(|v| v == base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{base}_{i}"))
        .find(|n| !taken.contains(n))
        .unwrap()
}

pub(crate) fn valid_name(v: &str) -> bool {
    let mut chars = v.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(","))
    }
}
