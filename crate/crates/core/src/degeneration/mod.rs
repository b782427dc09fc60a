//! Families over the affine line: the deformation to the normal cone of `Ȳ ⊂ X̄`,
//! fiberwise gluing, and base change of `T¹`.

mod checks;

pub use checks::{
    base_change_t1_check, certify_isomorphic, relative_jacobian_ideal, relative_kahler, relative_t1,
    specialization_cocartesian_check, t1_constancy_check, FamilyReport,
};

use crate::error::{Error, Result};
use crate::glue::{pushout, Check, GluingDatum, PushoutPresentation, DEFAULT_DEGREE_BOUND};
use crate::groebner::colon;
use crate::poly::{Polynomial, Q};
use crate::presentation::{RingMap, RingPresentation};
use crate::ring::{fresh_name, MonomialOrder, PolyRing};

/// A presentation with a distinguished parameter `t`, viewed over `Q[t]`.
#[derive(Clone, Debug)]
pub struct FamilyRing {
    ring: RingPresentation,
    t: usize,
}

/// A fiber of a family with the specialization map.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub ring: RingPresentation,
    pub map: RingMap,
}

impl FamilyRing {
    pub fn new(ring: &RingPresentation, parameter: &str) -> Result<Self> {
        let t = ring.ambient().var_index(parameter)?;
        Ok(FamilyRing { ring: ring.clone(), t })
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn parameter_index(&self) -> usize {
        self.t
    }

    pub fn parameter_name(&self) -> &str {
        &self.ring.vars()[self.t]
    }

    pub fn parameter(&self) -> Polynomial {
        self.ring.gen(self.t)
    }

    /// t-torsion freeness: `(relations : t) = relations`.
    pub fn is_flat(&self) -> Result<bool> {
        let amb = self.ring.ambient();
        let rels = self.ring.relations();
        if rels.is_empty() {
            return Ok(true);
        }
        let col = colon(amb, rels, &[self.parameter()])?;
        for g in &col {
            if !self.ring.is_zero(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The fiber `t = t0`, on the remaining variables.
    pub fn fiber(&self, t0: &Q) -> Result<Fiber> {
        let names: Vec<String> = self.ring.vars().iter().enumerate().filter(|(i, _)| *i != self.t).map(|(_, v)| v.clone()).collect();
        let order = match self.ring.ambient().order() {
            MonomialOrder::Lex => MonomialOrder::Lex,
            _ => MonomialOrder::Grevlex,
        };
        let amb = PolyRing::new(&names, order)?;
        let mut images = Vec::with_capacity(self.ring.nvars());
        let mut k = 0;
        for i in 0..self.ring.nvars() {
            if i == self.t {
                images.push(Polynomial::constant(&amb, t0.clone()));
            } else {
                images.push(Polynomial::var(&amb, k));
                k += 1;
            }
        }
        let rels: Vec<Polynomial> = self.ring.relations().iter().map(|r| r.substitute(&images, &amb)).filter(|r| !r.is_zero()).collect();
        let ring = RingPresentation::new(&amb, rels);
        let map = RingMap::new(&self.ring, &ring, images)?;
        Ok(Fiber { ring, map })
    }
}

/// `R[names]` with the relations of `R`, and the inclusion `R → R[names]`.
pub fn adjoin(r: &RingPresentation, names: &[&str]) -> Result<(RingPresentation, RingMap)> {
    let mut vars = r.vars().to_vec();
    vars.extend(names.iter().map(|s| s.to_string()));
    let amb = PolyRing::new(&vars, MonomialOrder::Grevlex)?;
    let rels = r.relations().iter().map(|p| p.rename_into(&amb)).collect::<Result<Vec<_>>>()?;
    let big = RingPresentation::new(&amb, rels);
    let incl = RingMap::new_unchecked(r, &big, r.gens().iter().map(|g| g.rename_into(&amb)).collect::<Result<_>>()?)?;
    Ok((big, incl))
}

/// The Rees chart `Ā[s, t]/(y − s·t)` of the deformation to the normal cone.
#[derive(Clone, Debug)]
pub struct NormalConeChart {
    pub abar: RingPresentation,
    pub y: Polynomial,
    pub family: FamilyRing,
    pub s: Polynomial,
    pub checks: Vec<Check>,
}

impl NormalConeChart {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn normal_cone_chart(abar: &RingPresentation, y: &Polynomial) -> Result<NormalConeChart> {
    let y = abar.reduce(&y.rename_into(abar.ambient())?)?;
    if y.is_zero() {
        return Err(Error::Input("the ideal of Ybar must be generated by a nonzero element".into()));
    }
    let s_name = fresh_name(abar.vars(), "s");
    let mut taken = abar.vars().to_vec();
    taken.push(s_name.clone());
    let t_name = fresh_name(&taken, "t");
    let (big, incl) = adjoin(abar, &[&s_name, &t_name])?;
    let s = big.var(&s_name)?;
    let t = big.var(&t_name)?;
    let yb = incl.apply(&y)?;
    let mut rels = big.relations().to_vec();
    rels.push(&yb - &(&s * &t));
    let chart = RingPresentation::new(big.ambient(), rels);
    let family = FamilyRing::new(&chart, &t_name)?;
    let mut checks = vec![Check::new("chart flat over Q[t]", family.is_flat()?, "")];

    let one = family.fiber(&Q::from_integer(1.into()))?;
    let to_one = RingMap::new(abar, &one.ring, abar.gens().iter().map(|g| g.rename_into(one.ring.ambient())).collect::<Result<_>>()?)?;
    let mut back = abar.gens();
    back.push(y.clone());
    let from_one = RingMap::new(&one.ring, abar, back)?;
    checks.push(Check::new("fiber at t=1 is Abar", to_one.is_inverse(&from_one)?, "s -> y"));

    let zero = family.fiber(&Q::from_integer(0.into()))?;
    let free = RingPresentation::polynomial_ring(zero.ring.ambient());
    let mut normal: Vec<Polynomial> = abar.relations().iter().map(|r| r.rename_into(zero.ring.ambient())).collect::<Result<_>>()?;
    normal.push(y.rename_into(zero.ring.ambient())?);
    checks.push(Check::new(
        "fiber at t=0 is (Abar/y)[s]",
        free.ideal_equal(zero.ring.relations(), &normal)?,
        "",
    ));

    let on_s = chart.ideal_equal(std::slice::from_ref(&s), &[s.clone(), yb.clone()])?;
    checks.push(Check::new("{s=0} is Ybar x A1", on_s, ""));
    Ok(NormalConeChart { abar: abar.clone(), y, family, s, checks })
}

/// A pushout of families `𝒳 = 𝒳̄ ⊔_{𝒴̄} 𝒴` over `Q[t]`, with `t ↦ t` on every piece.
#[derive(Clone, Debug)]
pub struct FamilyPushout {
    pub datum: GluingDatum,
    pub pushout: PushoutPresentation,
    pub family: FamilyRing,
    pub abar: FamilyRing,
    pub b: FamilyRing,
    /// Whether `Ȳ` is empty, so the gluing is `𝒳 = 𝒳̄`.
    pub trivial: bool,
}

fn extra_names(taken: &[String], count: usize) -> Vec<String> {
    let bases: Vec<String> = match count {
        1 => vec!["v".into()],
        2 => vec!["v".into(), "u".into()],
        n => (1..=n).map(|i| format!("v{i}")).collect(),
    };
    let mut seen = taken.to_vec();
    let mut out = Vec::new();
    for b in bases {
        let n = fresh_name(&seen, &b);
        seen.push(n.clone());
        out.push(n);
    }
    out
}

/// Glues a family `Ā_t` along `y` to `B_t`. `phi` gives the images of all variables of
/// `B_t`, and must send its parameter to that of `Ā_t`.
pub fn family_pushout(abar: &FamilyRing, y: &Polynomial, b: &FamilyRing, phi: Vec<Polynomial>, module_gens: Vec<Polynomial>) -> Result<FamilyPushout> {
    let a_ring = abar.ring();
    let pt = &phi[b.parameter_index()];
    if !a_ring.equal(pt, &abar.parameter())? {
        return Err(Error::Input(format!("phi sends the parameter to {pt}, not {}", abar.parameter())));
    }
    let datum = GluingDatum::new(a_ring.clone(), y.clone(), b.ring().clone(), phi, module_gens)?;
    let probe = pushout(&datum, DEFAULT_DEGREE_BOUND)?;
    let trivial = a_ring.ideal_equal(std::slice::from_ref(y), &[a_ring.one()])?;
    let nb = b.ring().nvars();
    let mut names = b.ring().vars().to_vec();
    let extras = &probe.fsharp.images()[nb..];
    let simple: Option<Vec<String>> = extras
        .iter()
        .map(|img| {
            let sv = img.support_vars();
            (trivial && img.len() == 1 && img.total_degree() == Some(1) && img.terms()[0].1 == Q::from_integer(1.into()))
                .then(|| a_ring.vars()[sv[0]].clone())
                .filter(|n| !names.contains(n))
        })
        .collect();
    match simple {
        Some(s) => names.extend(s),
        None => {
            let e = extra_names(&names, extras.len());
            names.extend(e);
        }
    }
    let datum = datum.with_a_vars(&names);
    let p = pushout(&datum, DEFAULT_DEGREE_BOUND)?;
    let family = FamilyRing::new(&p.a, b.parameter_name())?;
    Ok(FamilyPushout { datum, pushout: p, family, abar: abar.clone(), b: b.clone(), trivial })
}

fn parameter_name(taken: &[String]) -> String {
    fresh_name(taken, "t")
}

/// The constant family `X̄ × A¹ ⊔ Y × A¹` of a gluing datum.
pub fn constant_family(d: &GluingDatum) -> Result<FamilyPushout> {
    let mut taken = d.abar.vars().to_vec();
    taken.extend(d.b.vars().iter().cloned());
    let t = parameter_name(&taken);
    let (abar_t, inc) = adjoin(&d.abar, &[&t])?;
    let (b_t, _) = adjoin(&d.b, &[&t])?;
    let mut phi = inc.apply_all(&d.phi)?;
    phi.push(abar_t.var(&t)?);
    let gens = inc.apply_all(&d.module_gens)?;
    let y = inc.apply(&d.y)?;
    family_pushout(&FamilyRing::new(&abar_t, &t)?, &y, &FamilyRing::new(&b_t, &t)?, phi, gens)
}

/// Glues the deformation of `X̄` to the normal cone of `Ȳ` along `{s = 0} = Ȳ × A¹`
/// to `Y × A¹`. The fiber at `t = 1` is the pushout of `d`, at `t = 0` the pushout of
/// the normal bundle.
pub fn normal_cone_family(d: &GluingDatum) -> Result<(NormalConeChart, FamilyPushout)> {
    let chart = normal_cone_chart(&d.abar, &d.y)?;
    let c = chart.family.ring();
    let t = chart.family.parameter_name().to_string();
    let into = |p: &Polynomial| -> Result<Polynomial> { c.reduce(&p.rename_into(c.ambient())?) };
    let mut taken = d.b.vars().to_vec();
    taken.extend(c.vars().iter().cloned());
    let tb = if d.b.vars().contains(&t) { parameter_name(&taken) } else { t.clone() };
    let (b_t, _) = adjoin(&d.b, &[&tb])?;
    let mut phi = d.phi.iter().map(into).collect::<Result<Vec<_>>>()?;
    phi.push(chart.family.parameter());
    let gens = d.module_gens.iter().map(into).collect::<Result<Vec<_>>>()?;
    let fam = family_pushout(&chart.family, &chart.s, &FamilyRing::new(&b_t, &tb)?, phi, gens)?;
    Ok((chart, fam))
}

/// A family with no gluing: `Ȳ = ∅`, `Y = ∅`, so `𝒳 = 𝒳̄`.
pub fn trivial_family(fam: &FamilyRing) -> Result<FamilyPushout> {
    let a = fam.ring();
    let t = fam.parameter_name().to_string();
    let b = RingPresentation::parse(&[t.as_str()], MonomialOrder::Grevlex, &["1"])?;
    let bt = FamilyRing::new(&b, &t)?;
    family_pushout(fam, &a.one(), &bt, vec![fam.parameter()], vec![a.one()])
}

/// The pieces of a family pushout at `t = t0`.
#[derive(Clone, Debug)]
pub struct FiberPushout {
    /// The family's structure maps specialized to `t0`.
    pub specialized: PushoutPresentation,
    /// The pushout of the specialized gluing datum, computed from scratch.
    pub direct: PushoutPresentation,
}

impl FamilyPushout {
    pub fn fiber(&self, t0: &Q) -> Result<FiberPushout> {
        let fa = self.family.fiber(t0)?;
        let fabar = self.abar.fiber(t0)?;
        let fb = self.b.fiber(t0)?;
        let d = &self.datum;
        let tb = self.b.parameter_index();
        let phi: Vec<Polynomial> = d
            .phi
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != tb)
            .map(|(_, p)| fabar.map.apply(p))
            .collect::<Result<_>>()?;
        let y = fabar.map.apply(&d.y)?;
        let gens = fabar.map.apply_all(&d.module_gens)?;
        let fd = GluingDatum::new(fabar.ring.clone(), y, fb.ring.clone(), phi, gens)?;
        let ta = self.family.parameter_index();
        let drop = |imgs: &[Polynomial], m: &RingMap| -> Result<Vec<Polynomial>> {
            imgs.iter().enumerate().filter(|(i, _)| *i != ta).map(|(_, p)| m.apply(p)).collect()
        };
        let p = &self.pushout;
        let fsharp = RingMap::new(&fa.ring, &fabar.ring, drop(p.fsharp.images(), &fabar.map)?)?;
        let jsharp = RingMap::new(&fa.ring, &fb.ring, drop(p.jsharp.images(), &fb.map)?)?;
        let conductor_a = fa.map.apply_all(&p.conductor_a)?;
        let conductor_abar = fabar.map.apply_all(&p.conductor_abar)?;
        let specialized = PushoutPresentation { datum: fd.clone(), a: fa.ring, fsharp, jsharp, conductor_a, conductor_abar };
        let names = specialized.a.vars().to_vec();
        let direct = match pushout(&fd.clone().with_a_vars(&names), DEFAULT_DEGREE_BOUND) {
            Ok(p) => p,
            Err(Error::Input(_)) => pushout(&fd, DEFAULT_DEGREE_BOUND)?,
            Err(e) => return Err(e),
        };
        Ok(FiberPushout { specialized, direct })
    }
}

#[cfg(test)]
mod tests;
