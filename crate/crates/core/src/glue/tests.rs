use super::*;

pub(crate) fn pinch_datum() -> GluingDatum {
    let abar = RingPresentation::parse::<_, &str>(&["x", "y"], MonomialOrder::Grevlex, &[]).unwrap();
    let b = RingPresentation::parse::<_, &str>(&["t"], MonomialOrder::Grevlex, &[]).unwrap();
    let y = abar.var("y").unwrap();
    let phi = vec![abar.parse_poly("x^2").unwrap()];
    let gens = vec![abar.one(), abar.var("x").unwrap()];
    GluingDatum::new(abar, y, b, phi, gens).unwrap().with_a_vars(&["w", "v", "u"])
}

pub(crate) fn dc_datum() -> GluingDatum {
    let abar = RingPresentation::parse(&["x", "y", "z"], MonomialOrder::Grevlex, &["z^2 - 1"]).unwrap();
    let b = RingPresentation::parse::<_, &str>(&["t"], MonomialOrder::Grevlex, &[]).unwrap();
    let y = abar.var("y").unwrap();
    let phi = vec![abar.var("x").unwrap()];
    let gens = vec![abar.one(), abar.var("z").unwrap()];
    GluingDatum::new(abar, y, b, phi, gens).unwrap()
}

fn ring(vars: &[&str], rels: &[&str]) -> RingPresentation {
    RingPresentation::parse(vars, MonomialOrder::Grevlex, rels).unwrap()
}

#[test]
fn pinch_pushout_is_whitney_umbrella() {
    let p = pushout(&pinch_datum(), 4).unwrap();
    assert_eq!(p.a.nvars(), 3);
    let e = ring(&["u", "v", "w"], &["u^2 - v^2*w"]);
    let abar = &p.datum.abar;
    let imgs: Vec<Polynomial> = ["x*y", "y", "x^2"].iter().map(|s| abar.parse_poly(s).unwrap()).collect();
    assert!(match_presentation(&p, &e, &imgs).unwrap().is_some());
    let report = verify_cartesian(&p).unwrap();
    assert!(report.passed(), "{report:?}");
    let uv = [p.a.var("u").unwrap(), p.a.var("v").unwrap()];
    assert!(p.a.ideal_equal(&p.conductor_a, &uv).unwrap());
    assert!(abar.ideal_equal(&p.conductor_abar, &[abar.var("y").unwrap()]).unwrap());
}

#[test]
fn dc_pushout_is_normal_crossing() {
    let p = pushout(&dc_datum(), 4).unwrap();
    let e = ring(&["u", "v", "w"], &["u*v"]);
    let abar = &p.datum.abar;
    let imgs: Vec<Polynomial> = ["y*(z-1)", "y*(z+1)", "x"].iter().map(|s| abar.parse_poly(s).unwrap()).collect();
    assert!(match_presentation(&p, &e, &imgs).unwrap().is_some());
    assert!(verify_cartesian(&p).unwrap().passed());
    assert!(abar.ideal_equal(&p.conductor_abar, &[abar.var("y").unwrap()]).unwrap());
    // the pinch ring is not a presentation of this pushout
    let wrong = ring(&["u", "v", "w"], &["u^2 - v^2*w"]);
    assert!(match_presentation(&p, &wrong, &imgs).unwrap().is_none());
}

#[test]
fn identity_gluing() {
    let abar = ring(&["x", "y"], &[]);
    let b = ring(&["t"], &["1"]);
    let d = GluingDatum::new(abar.clone(), abar.one(), b, vec![abar.zero()], vec![abar.one()]).unwrap();
    let p = pushout(&d, 2).unwrap();
    let imgs = vec![abar.var("x").unwrap(), abar.var("y").unwrap()];
    assert!(match_presentation(&p, &abar, &imgs).unwrap().is_some());
    assert!(verify_cartesian(&p).unwrap().passed());
    assert!(p.conductor_a.iter().any(|g| g.is_one()));
    assert!(p.conductor_abar.iter().any(|g| g.is_one()));
}

#[test]
fn dropping_relations_breaks_check_c() {
    let opts = PushoutOptions { degree_bound: Some(4), drop_relations: true };
    let p = pushout_with(&pinch_datum(), &opts).unwrap();
    let r = verify_cartesian(&p).unwrap();
    assert!(!r.check("c").unwrap().passed);
    assert!(r.check("a").unwrap().passed);
}

#[test]
fn ill_defined_phi_is_rejected() {
    let abar = ring(&["x", "y"], &[]);
    let b = ring(&["t"], &["t"]);
    let r = GluingDatum::new(abar.clone(), abar.var("y").unwrap(), b, vec![abar.var("x").unwrap()], vec![abar.one()]);
    assert!(matches!(r, Err(Error::NotWellDefined(_))));
}
