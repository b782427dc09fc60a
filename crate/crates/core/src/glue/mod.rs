//! Pushouts `A = Ā ×_{Ā/(y)} B` along a principal ideal and a finite map.

use crate::error::{Error, Result};
use crate::finite::{is_surjective, Pushforward};
use crate::fpmod::{annihilator, FPModule};
use crate::groebner::{intersect, ring_map_kernel};
use crate::poly::Polynomial;
use crate::presentation::{RingMap, RingPresentation};
use crate::ring::{Monomial, MonomialOrder, PolyRing};

pub const DEFAULT_DEGREE_BOUND: u32 = 4;

/// Data `(Ā, y, B, φ: B → Ā/(y))` with generators of `Ā/(y)` as a `B`-module.
#[derive(Clone, Debug)]
pub struct GluingDatum {
    pub abar: RingPresentation,
    pub y: Polynomial,
    pub b: RingPresentation,
    /// Images of the variables of `B`, as polynomials in `Ā`.
    pub phi: Vec<Polynomial>,
    pub module_gens: Vec<Polynomial>,
    /// Names for the variables of `A`; defaults to `a1, a2, ...`.
    pub a_vars: Option<Vec<String>>,
}

impl GluingDatum {
    pub fn new(abar: RingPresentation, y: Polynomial, b: RingPresentation, phi: Vec<Polynomial>, module_gens: Vec<Polynomial>) -> Result<Self> {
        let d = GluingDatum { abar, y, b, phi, module_gens, a_vars: None };
        d.phi_map()?;
        Ok(d)
    }

    pub fn with_a_vars<S: AsRef<str>>(mut self, names: &[S]) -> Self {
        self.a_vars = Some(names.iter().map(|s| s.as_ref().to_string()).collect());
        self
    }

    /// `Ā/(y)`.
    pub fn abar_mod_y(&self) -> RingPresentation {
        self.abar.quotient(std::slice::from_ref(&self.y))
    }

    /// `φ: B → Ā/(y)`, checked to be well defined.
    pub fn phi_map(&self) -> Result<RingMap> {
        RingMap::new(&self.b, &self.abar_mod_y(), self.phi.clone())
    }

    /// Whether the module generators generate `Ā/(y)` over `B`.
    pub fn is_finite(&self) -> Result<bool> {
        Pushforward::algebra(&self.phi_map()?, self.module_gens.clone())?.generates()
    }
}

/// Options for [`pushout_with`].
#[derive(Clone, Debug, Default)]
pub struct PushoutOptions {
    pub degree_bound: Option<u32>,
    /// Drops the relations of `A` after construction (a deliberately broken control).
    pub drop_relations: bool,
}

/// The pushout ring with its structure maps `f#: A → Ā` and `j#: A → B`.
#[derive(Clone, Debug)]
pub struct PushoutPresentation {
    pub datum: GluingDatum,
    pub a: RingPresentation,
    pub fsharp: RingMap,
    pub jsharp: RingMap,
    pub conductor_a: Vec<Polynomial>,
    pub conductor_abar: Vec<Polynomial>,
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    if n == 0 {
        return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.0.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn free_ring(names: &[String]) -> Result<RingPresentation> {
    Ok(RingPresentation::polynomial_ring(&PolyRing::new(names, MonomialOrder::Grevlex)?))
}

fn generator_map(abar: &RingPresentation, imgs: &[Polynomial]) -> Result<RingMap> {
    let names: Vec<String> = (1..=imgs.len()).map(|i| format!("g{i}")).collect();
    RingMap::new_unchecked(&free_ring(&names)?, abar, imgs.to_vec())
}

pub fn pushout(d: &GluingDatum, degree_bound: u32) -> Result<PushoutPresentation> {
    pushout_with(d, &PushoutOptions { degree_bound: Some(degree_bound), drop_relations: false })
}

/// Builds `A` from lifts of the generators of `B` and elements `y·m·μ` with `μ` a
/// monomial of degree at most the bound, keeping only those not yet generated.
pub fn pushout_with(d: &GluingDatum, opts: &PushoutOptions) -> Result<PushoutPresentation> {
    let bound = opts.degree_bound.unwrap_or(DEFAULT_DEGREE_BOUND);
    d.phi_map()?;
    let abar = &d.abar;
    let mut imgs: Vec<Polynomial> = d.phi.iter().map(|p| abar.reduce(p)).collect::<Result<_>>()?;
    let nlifts = imgs.len();
    let mut sub = Pushforward::subalgebra(&generator_map(abar, &imgs)?)?;
    let mut candidates: Vec<Polynomial> = Vec::new();
    for deg in 0..=bound {
        for mu in monomials_of_degree(abar.nvars(), deg) {
            let mu = Polynomial::monomial(abar.ambient(), mu, crate::poly::q(1));
            for m in &d.module_gens {
                candidates.push(&(&d.y * m) * &mu);
            }
        }
    }
    for c in candidates {
        let c = abar.reduce(&c)?;
        if c.is_zero() || sub.express_scalar(&c)?.is_some() {
            continue;
        }
        imgs.push(c);
        sub = Pushforward::subalgebra(&generator_map(abar, &imgs)?)?;
    }

    let names: Vec<String> = match &d.a_vars {
        Some(n) if n.len() == imgs.len() => n.clone(),
        Some(n) => {
            return Err(Error::Input(format!("{} names supplied for {} pushout generators", n.len(), imgs.len())));
        }
        None => (1..=imgs.len()).map(|i| format!("a{i}")).collect(),
    };
    let free = free_ring(&names)?;
    let kernel = ring_map_kernel(&RingMap::new_unchecked(&free, abar, imgs.clone())?)?;
    let a = if opts.drop_relations {
        free.clone()
    } else {
        RingPresentation::new(free.ambient(), kernel)
    };
    let fsharp = RingMap::new_unchecked(&a, abar, imgs.clone())?;
    let mut jimgs: Vec<Polynomial> = d.b.gens();
    jimgs.extend((nlifts..imgs.len()).map(|_| d.b.zero()));
    let jsharp = RingMap::new(&a, &d.b, jimgs)?;

    let fin = Pushforward::algebra(&fsharp, d.module_gens.clone())?;
    if !opts.drop_relations {
        for m in &d.module_gens {
            for x in abar.gens() {
                let e = abar.reduce(&(&x * m))?;
                if fin.express_scalar(&e)?.is_none() {
                    let witness = abar.reduce(&(&d.y * &e))?;
                    return Err(Error::Completeness { bound, element: witness.to_string() });
                }
            }
        }
    }
    let (conductor_a, conductor_abar) = conductor_of(&fsharp, &d.module_gens)?;
    Ok(PushoutPresentation { datum: d.clone(), a, fsharp, jsharp, conductor_a, conductor_abar })
}

/// `Ann_A(Ā/A)` and its extension to `Ā`.
pub fn conductor_of(fsharp: &RingMap, module_gens: &[Polynomial]) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
    let a = fsharp.source();
    let abar = fsharp.target();
    let pf = Pushforward::algebra(fsharp, module_gens.to_vec())?;
    let mut rows = pf.relations()?;
    match pf.express_scalar(&abar.one())? {
        Some(c) => rows.push(c),
        None => return Err(Error::Certification("1 is not in the span of the module generators".into())),
    }
    let q = FPModule::from_rows(a, module_gens.len(), rows)?;
    let cond = annihilator(&q)?;
    let ext = abar.normalize_ideal(&fsharp.apply_all(&cond)?)?;
    Ok((cond, ext))
}

pub fn conductor(p: &PushoutPresentation) -> (Vec<Polynomial>, Vec<Polynomial>) {
    (p.conductor_a.clone(), p.conductor_abar.clone())
}

/// One named pass/fail entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// Ferrand's criteria for the square to be cartesian.
#[derive(Clone, Debug)]
pub struct CartesianReport {
    pub checks: Vec<Check>,
}

impl CartesianReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.starts_with(prefix))
    }
}

fn show(ps: &[Polynomial]) -> String {
    let v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    format!("({})", v.join(", "))
}

pub fn verify_cartesian(p: &PushoutPresentation) -> Result<CartesianReport> {
    let d = &p.datum;
    let a = &p.a;
    let abar = &d.abar;
    let mut checks = Vec::new();

    let surj = is_surjective(&p.jsharp)?;
    checks.push(Check::new("a: j# surjective", surj, if surj { "every variable of B is hit" } else { "some variable of B is not in the image" }));

    let kj = p.jsharp.kernel()?;
    let fk = p.fsharp.apply_all(&kj)?;
    let ideal_eq = abar.ideal_equal(&fk, std::slice::from_ref(&d.y))?;
    let module_eq = if ideal_eq {
        let pf = Pushforward::new(&p.fsharp, 1, &[], fk.iter().map(|f| vec![f.clone()]).collect())?;
        let mut ok = true;
        for m in &d.module_gens {
            if pf.express_scalar(&abar.reduce(&(&d.y * m))?)?.is_none() {
                ok = false;
                break;
            }
        }
        ok
    } else {
        false
    };
    checks.push(Check::new(
        "b: f#(ker j#) = (y)",
        ideal_eq && module_eq,
        format!("f#(ker j#) = {}; ideal equality {ideal_eq}, equality as sets {module_eq}", show(&abar.normalize_ideal(&fk)?)),
    ));

    let kf = p.fsharp.kernel()?;
    let inter = intersect(a.ambient(), &a.lift_ideal(&kf), &a.lift_ideal(&kj))?;
    let a_gb = a.gb()?;
    let bad: Vec<Polynomial> = inter.into_iter().filter(|g| !a_gb.contains(g)).collect();
    checks.push(Check::new(
        "c: f# injective on ker j#",
        bad.is_empty(),
        if bad.is_empty() { "ker f# ∩ ker j# = 0".to_string() } else { format!("nonzero kernel element {}", bad[0]) },
    ));

    let fin = Pushforward::algebra(&p.fsharp, d.module_gens.clone())?.generates()?;
    checks.push(Check::new(
        "d: f# finite",
        fin,
        format!("Ā generated over A by {}: {fin}", show(&d.module_gens)),
    ));
    Ok(CartesianReport { checks })
}

/// Certifies `A ≅ E` compatibly with maps to `Ā`, where `e_images` are the images of
/// the variables of `E` in `Ā`. Returns the isomorphism `E → A`.
pub fn match_presentation(p: &PushoutPresentation, e: &RingPresentation, e_images: &[Polynomial]) -> Result<Option<RingMap>> {
    let abar = &p.datum.abar;
    let to_abar = match RingMap::new(e, abar, e_images.to_vec()) {
        Ok(m) => m,
        Err(Error::NotWellDefined(_)) => return Ok(None),
        Err(err) => return Err(err),
    };
    let sub_a = Pushforward::subalgebra(&p.fsharp)?;
    let mut fwd = Vec::new();
    for img in e_images {
        match sub_a.express_scalar(img)? {
            Some(mut c) => fwd.push(c.remove(0)),
            None => return Ok(None),
        }
    }
    let sub_e = Pushforward::subalgebra(&to_abar)?;
    let mut back = Vec::new();
    for img in p.fsharp.images() {
        match sub_e.express_scalar(img)? {
            Some(mut c) => back.push(c.remove(0)),
            None => return Ok(None),
        }
    }
    let (phi, psi) = match (RingMap::new(e, &p.a, fwd), RingMap::new(&p.a, e, back)) {
        (Ok(phi), Ok(psi)) => (phi, psi),
        _ => return Ok(None),
    };
    Ok(if phi.is_inverse(&psi)? { Some(phi) } else { None })
}

#[cfg(test)]
mod tests;
