use super::*;
use crate::poly::q;

fn ring(vars: &[&str], rels: &[&str]) -> RingPresentation {
    RingPresentation::parse(vars, MonomialOrder::Grevlex, rels).unwrap()
}

fn pinch() -> GluingDatum {
    let abar = ring(&["x", "y"], &[]);
    let b = ring(&["w"], &[]);
    let phi = vec![abar.parse_poly("x^2").unwrap()];
    GluingDatum::new(abar.clone(), abar.var("y").unwrap(), b, phi, vec![abar.one(), abar.var("x").unwrap()]).unwrap()
}

fn dc() -> GluingDatum {
    let abar = ring(&["x", "y", "z"], &["z^2 - 1"]);
    let b = ring(&["w"], &[]);
    let phi = vec![abar.var("x").unwrap()];
    GluingDatum::new(abar.clone(), abar.var("y").unwrap(), b, phi, vec![abar.one(), abar.var("z").unwrap()]).unwrap()
}

fn family(vars: &[&str], rels: &[&str]) -> FamilyRing {
    FamilyRing::new(&ring(vars, rels), "t").unwrap()
}

#[test]
fn normal_cone_chart_fibers() {
    let c = normal_cone_chart(&ring(&["x", "y"], &[]), &ring(&["x", "y"], &[]).var("y").unwrap()).unwrap();
    assert!(c.passed(), "{:?}", c.checks);
    let abar = ring(&["x", "y", "z"], &["z^2 - 1"]);
    let c = normal_cone_chart(&abar, &abar.var("y").unwrap()).unwrap();
    assert!(c.passed(), "{:?}", c.checks);
    assert!(normal_cone_chart(&abar, &abar.zero()).is_err());
}

#[test]
fn fibers_by_substitution() {
    let f = family(&["u", "v", "t"], &["u*v - t"]);
    let x0 = f.fiber(&q(0)).unwrap().ring;
    assert_eq!(x0.relations()[0].to_string(), "u*v");
    let f = family(&["x", "s", "t"], &[]);
    assert_eq!(f.fiber(&q(5)).unwrap().ring.nvars(), 2);
    assert!(f.is_flat().unwrap());
    assert!(!family(&["u", "t"], &["t*u"]).is_flat().unwrap());
}

#[test]
fn pinch_families_are_constant() {
    let (chart, fp) = normal_cone_family(&pinch()).unwrap();
    assert!(chart.passed());
    let want = ring(&["w", "t", "v", "u"], &["u^2 - v^2*w"]);
    let free = RingPresentation::polynomial_ring(fp.family.ring().ambient());
    let rels: Vec<Polynomial> = want.relations().iter().map(|r| r.rename_into(free.ambient()).unwrap()).collect();
    assert!(free.ideal_equal(fp.family.ring().relations(), &rels).unwrap(), "{}", fp.family.ring());
    for fp in [fp, constant_family(&pinch()).unwrap()] {
        assert!(fp.family.is_flat().unwrap());
        for t0 in [0, 1] {
            let r = specialization_cocartesian_check(&fp, &q(t0)).unwrap();
            assert!(r.passed(), "t0 = {t0}: {:?}", r.checks);
        }
        let r = t1_constancy_check(&fp).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
    }
}

#[test]
fn dc_family() {
    let (_, fp) = normal_cone_family(&dc()).unwrap();
    assert_eq!(fp.family.ring().relations().len(), 1);
    for t0 in [0, 1] {
        assert!(specialization_cocartesian_check(&fp, &q(t0)).unwrap().passed());
        assert!(base_change_t1_check(&fp.family, &q(t0)).unwrap().passed());
    }
    assert!(t1_constancy_check(&fp).unwrap().passed());
}

#[test]
fn base_change_of_t1() {
    let f = family(&["u", "v", "w", "t"], &["u^2 - v^2*w"]);
    let r = base_change_t1_check(&f, &q(0)).unwrap();
    assert!(r.passed(), "{:?}", r.checks);
    let f = family(&["u", "v", "t"], &["u*v - t"]);
    for t0 in [0, 1] {
        let r = base_change_t1_check(&f, &q(t0)).unwrap();
        assert!(r.passed(), "t0 = {t0}: {:?}", r.checks);
    }
    let t1 = crate::singularity::t1(&f.fiber(&q(1)).unwrap().ring).unwrap();
    assert!(t1.is_zero().unwrap());
}

#[test]
fn smoothing_as_trivial_gluing() {
    let f = family(&["u", "v", "t"], &["u*v - t"]);
    let fp = trivial_family(&f).unwrap();
    assert!(fp.trivial);
    for t0 in [0, 1] {
        let r = specialization_cocartesian_check(&fp, &q(t0)).unwrap();
        assert!(r.passed(), "t0 = {t0}: {:?}", r.checks);
    }
    let r = t1_constancy_check(&fp).unwrap();
    assert!(r.passed());
    assert_eq!(r.checks[0].detail, "no singular locus along Y");
}

#[test]
fn nonreduced_fiber_is_rejected() {
    let f = family(&["u", "v", "t"], &["u^2 - t*v"]);
    assert!(f.is_flat().unwrap());
    let r = base_change_t1_check(&f, &q(0)).unwrap();
    assert!(!r.check("fiber generically smooth").unwrap().passed);
    assert!(r.check("thm2.11").is_none());
}
