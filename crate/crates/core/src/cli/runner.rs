//! Runs corpus items and theorem checks, producing [`Report`]s.

use super::report::Report;
use super::schema::{from_value, CorpusItem, CoverSpec, FamilySpec, GluingSpec, P1Spec, RingSpec};
use crate::covers::{cor46_affine_check, cor46_degree_check, det_sequence_check, embed_in_ve, prop48_check, thm53_degree_check};
use crate::degeneration::{
    base_change_t1_check, certify_isomorphic, constant_family, normal_cone_family, specialization_cocartesian_check,
    t1_constancy_check, trivial_family, FamilyPushout, FamilyRing,
};
use crate::error::{Error, Result};
use crate::fpmod::{base_change, fitting_ideal, prune, FPModule};
use crate::glue::{match_presentation, pushout_with, verify_cartesian, PushoutPresentation};
use crate::poly::{Polynomial, Q};
use crate::ring::MonomialOrder;
use crate::singularity::{
    build_alpha, classify_points, ideal_y_in_xsing, kahler, singular_subscheme, t1, t1_hypersurface_certificate,
    t1_restricted_to_y, tangent, tangent_sequence_check,
};

/// Overrides from the command line.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub order: Option<MonomialOrder>,
    pub degree_bound: Option<u32>,
}

fn show(ps: &[Polynomial]) -> String {
    format!("({})", ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
}

/// `Ω`, `T`, `T¹` and the singular subscheme of a hypersurface.
pub fn run_t1(name: &str, spec: &RingSpec, opts: &RunOptions) -> Result<Report> {
    let x = spec.build(opts.order)?;
    let sing = singular_subscheme(&x)?;
    let mut r = Report::new(name, "hypersurface");
    r.witness("ring", &x);
    r.witness("omega", kahler(&x)?);
    r.witness("tangent", prune(&tangent(&x)?)?.module);
    let t1m = t1(&x)?;
    r.witness("t1", prune(&t1m)?.module);
    r.witness("singular_ideal", show(&sing.ideal));
    r.push("t1: ext1(Omega, O) = O/(f, partials)", t1_hypersurface_certificate(&x)?, "explicit map with zero kernel and cokernel");
    let jac = FPModule::cyclic(&x, &sing.ideal)?;
    let k = prune(&t1m)?.module.ngens().max(1);
    let mut same = true;
    for i in 0..=k {
        if !x.ideal_equal(&fitting_ideal(&t1m, i)?, &fitting_ideal(&jac, i)?)? {
            same = false;
        }
    }
    r.push("t1: Fitting ideals agree", same, format!("Fitt_0..Fitt_{k}"));
    let empty = sing.is_empty()?;
    r.push("t1: T1 = 0 iff smooth", empty == t1m.is_zero()?, if empty { "smooth" } else { "singular" });
    Ok(r)
}

fn kernel_span_check(r: &mut Report, p: &PushoutPresentation, fields: &[Vec<Polynomial>]) -> Result<()> {
    let alpha = build_alpha(p)?;
    let rep = tangent_sequence_check(&alpha)?;
    let mut coords = Vec::new();
    for v in fields {
        match alpha.restricted_coords(v)? {
            Some(c) => coords.push(c),
            None => {
                r.push("thm5.1: kernel spanned by the given fields", false, "field not in g_*T|_Ybar");
                return Ok(());
            }
        }
    }
    let span = rep.kernel.with_gens(coords);
    let ok = span.is_submodule_of(&rep.kernel)? && rep.kernel.is_submodule_of(&span)?;
    let names: Vec<String> = fields.iter().map(|v| show(v)).collect();
    r.push("thm5.1: kernel spanned by the given fields", ok, names.join(", "));
    Ok(())
}

/// Semi-smoothness suite of a pushout: tangent sequence, `X_sing ⊂ Y` and the `T¹|_Y` line bundle.
fn pushout_suite(r: &mut Report, p: &PushoutPresentation) -> Result<()> {
    let alpha = build_alpha(p)?;
    let ts = tangent_sequence_check(&alpha)?;
    r.extend("thm5.1", &ts.checks);
    r.witness("G", &ts.g);
    let iy = ideal_y_in_xsing(p)?;
    r.push("lem3.11: X_sing contained in Y", iy.xsing_in_y, show(&iy.xsing_ideal));
    r.push(
        "lem3.11: I_Y|Xsing invertible on D",
        iy.check.is_invertible() || iy.check.empty_support,
        format!("Fitt0 = {}, Fitt1 = {}", show(&iy.check.fitt0), show(&iy.check.fitt1)),
    );
    let lb = t1_restricted_to_y(p)?;
    r.push("thm5.3: T1|_Y invertible", lb.is_invertible() || lb.empty_support, format!("T1|_Y = {}", lb.module));
    let strata = classify_points(p)?;
    r.push("strata: X_sing supported on Y", strata.supports_agree, strata.dc_locus.clone());
    r.witness("pinch_locus", show(&strata.d_ideal));
    Ok(())
}

pub fn run_glue(name: &str, spec: &GluingSpec, opts: &RunOptions) -> Result<Report> {
    let d = spec.datum(opts.order)?;
    let p = pushout_with(&d, &spec.options(opts.degree_bound))?;
    let mut r = Report::new(name, "gluing");
    r.witness("A", &p.a);
    r.witness("fsharp", show(p.fsharp.images()));
    r.witness("conductor", show(&p.conductor_a));
    let cart = verify_cartesian(&p)?;
    r.extend("pushout", &cart.checks);
    if let Some((e, imgs)) = spec.expected(&d.abar)? {
        let m = match_presentation(&p, &e, &imgs)?;
        r.push("pushout: isomorphic to the expected ring", m.is_some(), e.to_string());
    }
    if !cart.passed() {
        r.skip("thm5.1", "pushout is not cartesian");
        return Ok(r);
    }
    pushout_suite(&mut r, &p)?;
    if let Some(fields) = spec.kernel(&d.abar)? {
        kernel_span_check(&mut r, &p, &fields)?;
    }
    Ok(r)
}

/// Pushforward, exact sequence, embedding in `V(E)`, `I_{Y|X_sing}` and `T¹|_Y` for a double cover.
pub fn run_cover(name: &str, spec: &CoverSpec, opts: &RunOptions) -> Result<Report> {
    let (c, m) = spec.build(opts.order)?;
    let mut r = Report::new(name, "cover");
    r.witness("cover", c.cover());
    let det = det_sequence_check(&c, &m)?;
    for ch in &det.checks {
        let prefix = if ch.name.starts_with("g^*E") || ch.name.starts_with("E free") { "prop4.4i" } else { "lem4.7" };
        r.push(format!("{prefix}: {}", ch.name), ch.passed, ch.detail.clone());
    }
    let emb = embed_in_ve(&c, &m)?;
    r.witness("A", &emb.pushout.a);
    r.extend("thm4.5", &emb.checks);
    r.extend("thm4.5: cartesian", &emb.cartesian.checks);
    let c46 = cor46_affine_check(&c, &emb)?;
    r.push(format!("cor4.6: {}", c46.name), c46.passed, c46.detail);
    match c.branch_is_squarefree() {
        Some(false) => r.skip("prop4.8", "b is not squarefree"),
        _ => {
            let p48 = prop48_check(&c, &m)?;
            for ch in &p48.checks {
                let prefix = if ch.name.starts_with("I_Y|Xsing") { "lem3.11" } else { "prop4.8" };
                r.push(format!("{prefix}: {}", ch.name), ch.passed, ch.detail.clone());
            }
            r.push("thm5.3: (iii) I_Y|Xsing = r_*(M|_R)", p48.passed(), "");
        }
    }
    let p = &emb.pushout;
    if !c.is_etale()? || !c.base().is_trivial()? {
        let alpha = build_alpha(p)?;
        let ts = tangent_sequence_check(&alpha)?;
        r.extend("thm5.1", &ts.checks);
    }
    let on_y = base_change(&p.jsharp, &t1(&p.a)?)?;
    let free = FPModule::free(c.base(), 1);
    let iso = certify_isomorphic(&on_y, &free)?;
    let lb = t1_restricted_to_y(p)?;
    r.push("thm5.3: T1|_Y invertible", lb.is_invertible(), format!("T1|_Y = {}", lb.module));
    r.push(
        "thm5.3: (i) T1|_Y = O(X)|_Y on the chart",
        iso == Some(true),
        "L and det E trivial on the chart",
    );
    Ok(r)
}

pub fn run_p1(name: &str, spec: &P1Spec) -> Result<Report> {
    let mut r = Report::new(name, "p1");
    let n = thm53_degree_check(spec.m)?;
    r.witness("splitting of g_*N^-1", format!("({}, {})", n.splitting.0, n.splitting.1));
    r.witness("deg T1|_Y", n.deg_t1);
    r.witness("deg det g_*(N^-1)", n.deg_det_e);
    for ch in &n.checks {
        if let Some((thm, rest)) = ch.name.split_once(": ") {
            if thm.starts_with("thm5.3") {
                r.push(format!("thm5.3: {rest}"), ch.passed, ch.detail.clone());
            }
        }
    }
    let m = cor46_degree_check(spec.m)?;
    for ch in &m.checks {
        match ch.name.split_once(": ") {
            Some((thm, rest)) => r.push(format!("{thm}: {rest}"), ch.passed, ch.detail.clone()),
            None => r.push(format!("thm4.5: {}", ch.name), ch.passed, ch.detail.clone()),
        }
    }
    Ok(r)
}

fn family_of(spec: &FamilySpec, opts: &RunOptions) -> Result<(FamilyPushout, Option<String>)> {
    match (&spec.ring, &spec.constant, &spec.normal_cone) {
        (Some(ring), None, None) => {
            let fam = FamilyRing::new(&ring.build(opts.order)?, &spec.parameter)?;
            Ok((trivial_family(&fam)?, None))
        }
        (None, Some(g), None) => Ok((constant_family(&g.datum(opts.order)?)?, None)),
        (None, None, Some(g)) => {
            let (chart, fp) = normal_cone_family(&g.datum(opts.order)?)?;
            let failed: Vec<String> = chart.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
            Ok((fp, Some(if failed.is_empty() { String::new() } else { failed.join(", ") })))
        }
        _ => Err(Error::Input("a family needs exactly one of ring, constant, normal_cone".into())),
    }
}

pub fn run_family(name: &str, spec: &FamilySpec, opts: &RunOptions) -> Result<Report> {
    let (fp, chart) = family_of(spec, opts)?;
    let mut r = Report::new(name, "family");
    r.witness("family", fp.family.ring());
    r.witness("parameter", fp.family.parameter_name());
    if let Some(failed) = chart {
        r.push("prop5.4: normal cone chart", failed.is_empty(), failed);
    }
    if spec.wants("prop5.4") {
        r.push("prop5.4: family flat over Q[t]", fp.family.is_flat()?, "(relations : t) = relations");
    }
    for &t0 in &spec.fibers {
        let t = Q::from_integer(t0.into());
        let bc = base_change_t1_check(&fp.family, &t)?;
        for ch in &bc.checks {
            let (thm, rest) = ch.name.split_once(": ").unwrap_or(("thm2.11", ch.name.as_str()));
            if spec.wants(thm) || !ch.passed {
                r.push(format!("{thm}: t={t0}: {rest}"), ch.passed, ch.detail.clone());
            }
        }
        if spec.wants("prop3.12") {
            let sc = specialization_cocartesian_check(&fp, &t)?;
            for ch in &sc.checks {
                let rest = ch.name.split_once(": ").map(|(_, b)| b).unwrap_or(&ch.name);
                r.push(format!("prop3.12: t={t0}: {rest}"), ch.passed, ch.detail.clone());
            }
        }
    }
    if spec.wants("cor5.5") {
        let tc = t1_constancy_check(&fp)?;
        for ch in &tc.checks {
            let rest = ch.name.split_once(": ").map(|(_, b)| b).unwrap_or(&ch.name);
            r.push(format!("cor5.5: {rest}"), ch.passed, ch.detail.clone());
        }
    }
    Ok(r)
}

/// Runs one corpus item of any kind.
pub fn run_item(item: &CorpusItem, opts: &RunOptions) -> Result<Report> {
    match item.kind.as_str() {
        "hypersurface" => from_value(&item.payload).and_then(|s| run_t1(&item.name, &s, opts)),
        "gluing" => from_value(&item.payload).and_then(|s| run_glue(&item.name, &s, opts)),
        "cover" => from_value(&item.payload).and_then(|s| run_cover(&item.name, &s, opts)),
        "family" => from_value(&item.payload).and_then(|s| run_family(&item.name, &s, opts)),
        "p1" => from_value(&item.payload).and_then(|s| run_p1(&item.name, &s)),
        k => Err(Error::Input(format!("unknown corpus kind `{k}`"))),
    }
}

/// The theorem names understood by `verify`.
pub const THEOREMS: [&str; 12] =
    ["thm2.11", "lem3.11", "prop3.12", "prop4.4i", "thm4.5", "cor4.6", "lem4.7", "prop4.8", "thm5.1", "thm5.3", "prop5.4", "cor5.5"];

/// Runs `item` and keeps the checks of `theorem`.
pub fn run_verify(theorem: &str, item: &CorpusItem, opts: &RunOptions) -> Result<Report> {
    if !THEOREMS.contains(&theorem) {
        return Err(Error::Input(format!("unknown theorem `{theorem}`; known: {}", THEOREMS.join(", "))));
    }
    let mut r = run_item(item, opts)?;
    r.checks.retain(|c| c.name.starts_with(theorem));
    if r.checks.is_empty() {
        return Err(Error::Input(format!("item `{}` has no checks for {theorem}", item.name)));
    }
    r.item = format!("{} [{theorem}]", item.name);
    Ok(r)
}

