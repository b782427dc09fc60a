use super::*;
use crate::parse::parse_poly;

fn polys(ring: &Arc<PolyRing>, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|t| parse_poly(t, ring).unwrap()).collect()
}

#[test]
fn principal_ideal_is_its_own_basis() {
    let r = PolyRing::grevlex(&["u", "v", "w"]);
    let gb = groebner_basis(&r, &polys(&r, &["u^2 - v^2*w"])).unwrap();
    assert_eq!(gb.gens(), polys(&r, &["v^2*w - u^2"]).as_slice());
    assert!(gb.verify());
}

#[test]
fn monomial_ideal() {
    let r = PolyRing::grevlex(&["x", "y"]);
    let g = polys(&r, &["x^2", "x*y", "y^2"]);
    let gb = groebner_basis(&r, &g).unwrap();
    assert_eq!(gb.gens().len(), 3);
    assert!(gb.contains_all(&g));
    assert_eq!(gb.quotient_dimension(), Some(3));
}

#[test]
fn lex_implicitization_contains_pinch() {
    let r = PolyRing::new(&["x", "y", "u", "v", "w"], MonomialOrder::Lex).unwrap();
    let gb = groebner_basis(&r, &polys(&r, &["u - x*y", "v - y", "w - x^2"])).unwrap();
    assert!(gb.verify());
    let pinch = polys(&r, &["u^2 - v^2*w"]).remove(0);
    assert!(gb.gens().iter().any(|g| g == &pinch || g == &-&pinch));
}

#[test]
fn normal_form_rewrites() {
    let r = PolyRing::new(&["y", "x"], MonomialOrder::Lex).unwrap();
    let gb = groebner_basis(&r, &polys(&r, &["y - x^2"])).unwrap();
    assert_eq!(gb.normal_form(&polys(&r, &["y"])[0]), polys(&r, &["x^2"])[0]);
}

#[test]
fn eliminate_examples() {
    let r = PolyRing::grevlex(&["x", "y", "u", "v", "w"]);
    let e = eliminate_keep_named(&r, &polys(&r, &["u - x*y", "v - y", "w - x^2"]), &["u", "v", "w"]).unwrap();
    assert!(ideals_equal(&r, &e, &polys(&r, &["u^2 - v^2*w"])).unwrap());

    let r = PolyRing::grevlex(&["x", "y", "z", "u", "v", "w"]);
    let gens = polys(&r, &["u - y*(z-1)", "v - y*(z+1)", "w - x", "z^2 - 1"]);
    let e = eliminate_keep_named(&r, &gens, &["u", "v", "w"]).unwrap();
    assert!(ideals_equal(&r, &e, &polys(&r, &["u*v"])).unwrap());

    let r = PolyRing::grevlex(&["x", "t"]);
    assert!(eliminate_keep_named(&r, &polys(&r, &["x - t"]), &["x"]).unwrap().is_empty());
}

#[test]
fn colon_examples() {
    let r = PolyRing::grevlex(&["x", "y"]);
    let c = colon(&r, &polys(&r, &["x*y"]), &polys(&r, &["y"])).unwrap();
    assert!(ideals_equal(&r, &c, &polys(&r, &["x"])).unwrap());
    let c = colon(&r, &polys(&r, &["x^2", "x*y"]), &polys(&r, &["x"])).unwrap();
    assert!(ideals_equal(&r, &c, &polys(&r, &["x", "y"])).unwrap());
    let i = polys(&r, &["x^3 - y", "x*y^2"]);
    let c = colon(&r, &i, &polys(&r, &["1"])).unwrap();
    assert!(ideals_equal(&r, &c, &i).unwrap());
}

#[test]
fn intersection() {
    let r = PolyRing::grevlex(&["x", "y"]);
    let i = intersect(&r, &polys(&r, &["x"]), &polys(&r, &["y"])).unwrap();
    assert!(ideals_equal(&r, &i, &polys(&r, &["x*y"])).unwrap());
}

#[test]
fn kernels() {
    use crate::presentation::{RingMap, RingPresentation};
    let a = RingPresentation::parse::<_, &str>(&["u", "v", "w"], MonomialOrder::Grevlex, &[]).unwrap();
    let b = RingPresentation::parse::<_, &str>(&["x", "y"], MonomialOrder::Grevlex, &[]).unwrap();
    let f = RingMap::parse(&a, &b, &["x*y", "y", "x^2"]).unwrap();
    let k = ring_map_kernel(&f).unwrap();
    assert!(ideals_equal(a.ambient(), &k, &polys(a.ambient(), &["u^2 - v^2*w"])).unwrap());

    let s = RingPresentation::parse::<_, &str>(&["u", "v"], MonomialOrder::Grevlex, &[]).unwrap();
    let t = RingPresentation::parse::<_, &str>(&["x"], MonomialOrder::Grevlex, &[]).unwrap();
    let k = ring_map_kernel(&RingMap::parse(&s, &t, &["x", "x"]).unwrap()).unwrap();
    assert!(ideals_equal(s.ambient(), &k, &polys(s.ambient(), &["u - v"])).unwrap());

    let k = ring_map_kernel(&RingMap::parse(&b, &b, &["y", "x + y^2"]).unwrap()).unwrap();
    assert!(k.is_empty());
}

#[test]
fn budget_exhaustion_is_an_error() {
    let r = PolyRing::grevlex(&["x", "y", "z"]);
    let g = polys(&r, &["x^3 - y*z + 1", "y^3 - x*z^2", "z^3 - x^2*y + y"]);
    let res = with_step_budget(5, || groebner_basis(&r, &g));
    assert!(matches!(res, Err(e) if e.is_resource_limit()));
}

#[test]
fn saturation() {
    let r = PolyRing::grevlex(&["x", "y"]);
    let s = saturate(&r, &polys(&r, &["x^3*y", "x^2*y^2"]), &polys(&r, &["x"])).unwrap();
    assert!(ideals_equal(&r, &s, &polys(&r, &["y"])).unwrap());
}
