//! Quotient rings `Q[vars]/(relations)` and homomorphisms between them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::parse::parse_poly;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, PolyRing};

/// A finitely generated algebra `ambient / (relations)` with a cached Gröbner basis.
#[derive(Clone)]
pub struct RingPresentation {
    ambient: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    gb: Arc<OnceLock<GroebnerBasis>>,
}

impl fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
        if rels.is_empty() {
            write!(f, "{}", self.ambient)
        } else {
            write!(f, "{}/({})", self.ambient, rels.join(", "))
        }
    }
}

impl RingPresentation {
    pub fn new(ambient: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Self {
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        RingPresentation { ambient: ambient.clone(), relations, gb: Arc::new(OnceLock::new()) }
    }

    pub fn polynomial_ring(ambient: &Arc<PolyRing>) -> Self {
        Self::new(ambient, Vec::new())
    }

    /// Builds a presentation from variable names, an order and relation strings.
    pub fn parse<S: AsRef<str>, T: AsRef<str>>(vars: &[S], order: MonomialOrder, relations: &[T]) -> Result<Self> {
        let ring = PolyRing::new(vars, order)?;
        let rels = relations.iter().map(|r| parse_poly(r.as_ref(), &ring)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(&ring, rels))
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn vars(&self) -> &[String] {
        self.ambient.vars()
    }

    pub fn gb(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = groebner_basis(&self.ambient, &self.relations)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// Canonical representative modulo the relations.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(self.gb()?.normal_form(p))
    }

    pub fn is_zero(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    pub fn equal(&self, a: &Polynomial, b: &Polynomial) -> Result<bool> {
        self.is_zero(&(a - b))
    }

    /// True for the zero ring.
    pub fn is_trivial(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn parse_poly(&self, s: &str) -> Result<Polynomial> {
        parse_poly(s, &self.ambient)
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        Polynomial::var_named(&self.ambient, name)
    }

    pub fn gen(&self, i: usize) -> Polynomial {
        Polynomial::var(&self.ambient, i)
    }

    pub fn gens(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.gen(i)).collect()
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(&self.ambient)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.ambient)
    }

    /// The quotient by additional relations.
    pub fn quotient(&self, extra: &[Polynomial]) -> Self {
        let mut rels = self.relations.clone();
        rels.extend(extra.iter().cloned());
        Self::new(&self.ambient, rels)
    }

    /// Relations plus `ideal`, as ambient generators.
    pub fn lift_ideal(&self, ideal: &[Polynomial]) -> Vec<Polynomial> {
        let mut out = self.relations.clone();
        out.extend(ideal.iter().cloned());
        out
    }

    /// Whether `(a) ⊆ (b)` in this ring.
    pub fn ideal_subset(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
        let gb = groebner_basis(&self.ambient, &self.lift_ideal(b))?;
        Ok(gb.contains_all(a))
    }

    pub fn ideal_equal(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
        Ok(self.ideal_subset(a, b)? && self.ideal_subset(b, a)?)
    }

    /// Reduced generators of an ideal of this ring, relations removed.
    pub fn normalize_ideal(&self, ideal: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let gb = groebner_basis(&self.ambient, &self.lift_ideal(ideal))?;
        let rel = self.gb()?;
        Ok(gb.gens().iter().filter(|g| !rel.contains(g)).cloned().collect())
    }

    /// Same ring with a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let ring = self.ambient.with_order(order);
        Self::new(&ring, self.relations.iter().map(|r| r.with_ring(&ring)).collect())
    }
}

/// An algebra homomorphism `source → target` given by images of the source variables.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: RingPresentation,
    target: RingPresentation,
    images: Vec<Polynomial>,
}

impl RingMap {
    /// Builds a map and checks that every source relation maps to zero.
    pub fn new(source: &RingPresentation, target: &RingPresentation, images: Vec<Polynomial>) -> Result<Self> {
        let map = Self::new_unchecked(source, target, images)?;
        for r in source.relations() {
            let img = map.apply(r)?;
            if !img.is_zero() {
                return Err(Error::NotWellDefined(format!("relation {r} maps to {img}")));
            }
        }
        Ok(map)
    }

    /// Builds a map without the well-definedness check.
    pub fn new_unchecked(source: &RingPresentation, target: &RingPresentation, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::Input(format!("expected {} images, got {}", source.nvars(), images.len())));
        }
        for img in &images {
            if !crate::poly::same_ring(img.ring(), target.ambient()) {
                return Err(Error::RingMismatch(format!("image {img} is not in {}", target.ambient())));
            }
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images })
    }

    /// Parses image strings in the target ambient.
    pub fn parse<S: AsRef<str>>(source: &RingPresentation, target: &RingPresentation, images: &[S]) -> Result<Self> {
        let imgs = images.iter().map(|s| target.parse_poly(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(source, target, imgs)
    }

    pub fn identity(r: &RingPresentation) -> Self {
        RingMap { source: r.clone(), target: r.clone(), images: r.gens() }
    }

    pub fn source(&self) -> &RingPresentation {
        &self.source
    }

    pub fn target(&self) -> &RingPresentation {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Image of `p` (a source ambient polynomial), reduced modulo the target relations.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let img = p.substitute(&self.images, self.target.ambient());
        self.target.reduce(&img)
    }

    pub fn apply_all(&self, ps: &[Polynomial]) -> Result<Vec<Polynomial>> {
        ps.iter().map(|p| self.apply(p)).collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingMap) -> Result<RingMap> {
        let images = self.images.iter().map(|p| other.apply(p)).collect::<Result<Vec<_>>>()?;
        Self::new_unchecked(&self.source, &other.target, images)
    }

    /// Whether both composites with `inverse` are the identity, certifying an isomorphism.
    pub fn is_inverse(&self, inverse: &RingMap) -> Result<bool> {
        let there = self.then(inverse)?;
        for (i, img) in there.images.iter().enumerate() {
            if !self.source.equal(img, &self.source.gen(i))? {
                return Ok(false);
            }
        }
        let back = inverse.then(self)?;
        for (i, img) in back.images.iter().enumerate() {
            if !self.target.equal(img, &self.target.gen(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Kernel generators in the source ambient (includes the source relations).
    pub fn kernel(&self) -> Result<Vec<Polynomial>> {
        crate::groebner::ring_map_kernel(self)
    }

    pub fn is_injective(&self) -> Result<bool> {
        let k = self.kernel()?;
        Ok(self.source.gb()?.contains_all(&k))
    }
}
