use super::{FamilyPushout, FamilyRing};
use crate::error::Result;
use crate::fpmod::{annihilator, base_change, ext1, fitting_ideal, minors, prune, FPModule, Subquotient};
use crate::glue::{match_presentation, verify_cartesian, Check};
use crate::groebner::colon;
use crate::poly::{Polynomial, Q};
use crate::singularity::{jacobian_ideal, LineBundleCheck};

/// Checks of one family-level verification.
#[derive(Clone, Debug, Default)]
pub struct FamilyReport {
    pub checks: Vec<Check>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.starts_with(prefix))
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, passed, detail));
    }
}

fn relative_rows(fam: &FamilyRing) -> Vec<Vec<Polynomial>> {
    let r = fam.ring();
    let t = fam.parameter_index();
    r.relations().iter().map(|f| (0..r.nvars()).filter(|&i| i != t).map(|i| f.diff(i)).collect()).collect()
}

/// `Ω_q = Ω_𝒳 / (dt)`, on the generators `dx_i`, `x_i ≠ t`.
pub fn relative_kahler(fam: &FamilyRing) -> Result<FPModule> {
    FPModule::from_rows(fam.ring(), fam.ring().nvars() - 1, relative_rows(fam))
}

pub fn relative_t1(fam: &FamilyRing) -> Result<FPModule> {
    ext1(&relative_kahler(fam)?, &FPModule::free(fam.ring(), 1))
}

/// Relations and maximal minors of the relative Jacobian matrix.
pub fn relative_jacobian_ideal(fam: &FamilyRing) -> Result<Vec<Polynomial>> {
    let r = fam.ring();
    let c = r.relations().len();
    if c == 0 {
        return Ok(vec![r.one()]);
    }
    r.normalize_ideal(&minors(&relative_rows(fam), r.nvars() - 1, c))
}

/// Decides `m ≅ n` for modules over the same ring when both prune to cyclic modules or
/// to the same relation module; distinguishes them by Fitting ideals otherwise.
/// Returns `None` when undecided.
pub fn certify_isomorphic(m: &FPModule, n: &FPModule) -> Result<Option<bool>> {
    let ring = m.ring();
    let pm = prune(m)?.module;
    let pn = prune(n)?.module;
    let (zm, zn) = (pm.is_zero()?, pn.is_zero()?);
    if zm || zn {
        return Ok(Some(zm && zn));
    }
    if pm.ngens() == 1 && pn.ngens() == 1 {
        return Ok(Some(ring.ideal_equal(&annihilator(&pm)?, &annihilator(&pn)?)?));
    }
    if pm.ngens() == pn.ngens() {
        let a = Subquotient::new(ring, pm.ngens(), pm.relations().rows().to_vec(), vec![]);
        let b = Subquotient::new(ring, pn.ngens(), pn.relations().rows().to_vec(), vec![]);
        if a.is_submodule_of(&b)? && b.is_submodule_of(&a)? {
            return Ok(Some(true));
        }
    }
    let k = pm.ngens().max(pn.ngens());
    for i in 0..=k {
        if !ring.ideal_equal(&fitting_ideal(&pm, i)?, &fitting_ideal(&pn, i)?)? {
            return Ok(Some(false));
        }
    }
    Ok(None)
}

fn iso_check(name: &str, m: &FPModule, n: &FPModule) -> Result<Check> {
    Ok(match certify_isomorphic(m, n)? {
        Some(ok) => Check::new(name, ok, ""),
        None => Check::new(name, false, "isomorphism undecided"),
    })
}

fn show(ps: &[Polynomial]) -> String {
    format!("({})", ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
}

/// `f^*T¹_q ≅ T¹_{𝒳_{t0}}` and `𝒳_{t0} ∩ V(J_q) = V(J_{𝒳_{t0}})`.
pub fn base_change_t1_check(fam: &FamilyRing, t0: &Q) -> Result<FamilyReport> {
    let mut r = FamilyReport::default();
    r.push("family flat over Q[t]", fam.is_flat()?, "(relations : t) = relations");
    let fiber = fam.fiber(t0)?;
    let x0 = &fiber.ring;
    let jac0 = jacobian_ideal(x0)?;
    let generic = if x0.relations().is_empty() {
        true
    } else {
        let col = colon(x0.ambient(), x0.relations(), &x0.lift_ideal(&jac0))?;
        col.iter().map(|g| x0.is_zero(g)).collect::<Result<Vec<_>>>()?.into_iter().all(|z| z)
    };
    r.push("fiber generically smooth", generic, format!("Jacobian ideal {}", show(&jac0)));
    if !generic {
        return Ok(r);
    }
    let t1q = relative_t1(fam)?;
    let restricted = base_change(&fiber.map, &t1q)?;
    let direct = crate::singularity::t1(x0)?;
    r.checks.push(iso_check("thm2.11: T1_q restricted to the fiber is T1 of the fiber", &restricted, &direct)?);
    let jq = fiber.map.apply_all(&relative_jacobian_ideal(fam)?)?;
    r.push(
        "cor2.13: fiber of the relative Jacobian ideal is the fiber Jacobian ideal",
        x0.ideal_equal(&jq, &jac0)?,
        format!("{} vs {}", show(&x0.normalize_ideal(&jq)?), show(&jac0)),
    );
    Ok(r)
}

/// The fiber of a family pushout at `t0` is the pushout of the fibers.
pub fn specialization_cocartesian_check(fp: &FamilyPushout, t0: &Q) -> Result<FamilyReport> {
    let mut r = FamilyReport::default();
    r.push("B_t flat over Q[t]", fp.b.is_flat()?, "");
    r.push("Abar_t flat over Q[t]", fp.abar.is_flat()?, "");
    r.push("family flat over Q[t]", fp.family.is_flat()?, "");
    let f = fp.fiber(t0)?;
    for c in verify_cartesian(&f.specialized)?.checks {
        r.push(format!("fiber {}", c.name), c.passed, c.detail);
    }
    let m = match_presentation(&f.direct, &f.specialized.a, f.specialized.fsharp.images())?;
    r.push("prop3.12: fiber of the pushout is the pushout of the fibers", m.is_some(), "");
    Ok(r)
}

/// `T¹_q|_{Y × A¹}` is free of rank one, so its fibers at `t = 0, 1` agree.
pub fn t1_constancy_check(fp: &FamilyPushout) -> Result<FamilyReport> {
    let mut r = FamilyReport::default();
    let t1q = relative_t1(&fp.family)?;
    let on_y = base_change(&fp.pushout.jsharp, &t1q)?;
    let lb = LineBundleCheck::new(&on_y)?;
    if lb.empty_support {
        r.push("cor5.5: T1_q on Y x A1 free of rank 1", true, "no singular locus along Y");
        return Ok(r);
    }
    r.push(
        "cor5.5: T1_q on Y x A1 free of rank 1",
        lb.is_invertible(),
        format!("Fitt0 = {}, Fitt1 = {}", show(&lb.fitt0), show(&lb.fitt1)),
    );
    let mut fibers = Vec::new();
    for t0 in [0, 1] {
        let fb = fp.b.fiber(&Q::from_integer(t0.into()))?;
        let m = base_change(&fb.map, &on_y)?;
        let ok = LineBundleCheck::new(&m)?.is_invertible();
        r.push(format!("fiber at t={t0} free of rank 1"), ok, "");
        fibers.push(m);
    }
    r.checks.push(iso_check("fibers at t=0 and t=1 isomorphic", &fibers[0], &fibers[1])?);
    Ok(r)
}
