use super::*;
use crate::glue::{pushout, GluingDatum};
use crate::ring::MonomialOrder;

fn ring(vars: &[&str], rels: &[&str]) -> RingPresentation {
    RingPresentation::parse(vars, MonomialOrder::Grevlex, rels).unwrap()
}

fn polys(r: &RingPresentation, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|t| r.parse_poly(t).unwrap()).collect()
}

fn pinch_pushout() -> crate::glue::PushoutPresentation {
    let abar = ring(&["x", "y"], &[]);
    let b = ring(&["t"], &[]);
    let d = GluingDatum::new(abar.clone(), abar.var("y").unwrap(), b, polys(&abar, &["x^2"]), polys(&abar, &["1", "x"]))
        .unwrap()
        .with_a_vars(&["w", "v", "u"]);
    pushout(&d, 4).unwrap()
}

fn dc_pushout() -> crate::glue::PushoutPresentation {
    let abar = ring(&["x", "y", "z"], &["z^2 - 1"]);
    let b = ring(&["t"], &[]);
    let d = GluingDatum::new(abar.clone(), abar.var("y").unwrap(), b, polys(&abar, &["x"]), polys(&abar, &["1", "z"])).unwrap();
    pushout(&d, 4).unwrap()
}

#[test]
fn kahler_examples() {
    let line = ring(&["x"], &[]);
    let om = kahler(&line).unwrap();
    assert_eq!(om.ngens(), 1);
    assert_eq!(om.relations().nrows(), 0);
    let pinch = ring(&["u", "v", "w"], &["u^2 - v^2*w"]);
    assert_eq!(kahler(&pinch).unwrap().relations().rows()[0], polys(&pinch, &["2*u", "-2*v*w", "-v^2"]));
    let dc = ring(&["u", "v", "w"], &["u*v"]);
    assert_eq!(kahler(&dc).unwrap().relations().rows()[0], polys(&dc, &["v", "u", "0"]));
}

#[test]
fn tangent_examples() {
    let pinch = ring(&["u", "v", "w"], &["u^2 - v^2*w"]);
    let t = tangent_subquotient(&pinch).unwrap();
    let listed = vec![
        polys(&pinch, &["v*w", "u", "0"]),
        polys(&pinch, &["u", "v", "0"]),
        polys(&pinch, &["v^2", "0", "2*u"]),
        polys(&pinch, &["0", "v", "-2*w"]),
    ];
    let span = t.with_gens(listed);
    assert!(span.is_submodule_of(&t).unwrap() && t.is_submodule_of(&span).unwrap());

    let plane = ring(&["x", "y"], &[]);
    let tp = tangent(&plane).unwrap();
    assert_eq!(crate::fpmod::prune(&tp).unwrap().module.ngens(), 2);
    assert!(crate::fpmod::prune(&tp).unwrap().module.relations().nrows() == 0);

    let dc = ring(&["u", "v", "w"], &["u*v"]);
    let td = tangent_subquotient(&dc).unwrap();
    for v in [["u", "0", "0"], ["0", "v", "0"], ["0", "0", "1"]] {
        assert!(td.contains(&polys(&dc, &v)).unwrap());
    }
}

#[test]
fn t1_and_singular_subscheme() {
    let pinch = ring(&["u", "v", "w"], &["u^2 - v^2*w"]);
    let s = singular_subscheme(&pinch).unwrap();
    assert!(pinch.ideal_equal(&s.ideal, &polys(&pinch, &["u", "v^2", "v*w"])).unwrap());
    assert!(t1_hypersurface_certificate(&pinch).unwrap());
    assert!(!t1(&pinch).unwrap().is_zero().unwrap());

    let dc = ring(&["u", "v", "w"], &["u*v"]);
    assert!(dc.ideal_equal(&singular_subscheme(&dc).unwrap().ideal, &polys(&dc, &["u", "v"])).unwrap());
    let smooth = ring(&["u", "v", "w"], &["u"]);
    assert!(singular_subscheme(&smooth).unwrap().is_empty().unwrap());
    assert!(t1(&smooth).unwrap().is_zero().unwrap());
    let ci = ring(&["u", "v", "w"], &["u", "v"]);
    assert!(matches!(singular_subscheme(&ci), Err(Error::NotHypersurface(_))));
}

#[test]
fn pinch_ideal_y_in_xsing() {
    let p = pinch_pushout();
    let r = ideal_y_in_xsing(&p).unwrap();
    assert!(r.xsing_in_y);
    assert!(r.check.is_invertible());
    assert!(!r.check.empty_support);
    let g = r.generator.unwrap();
    // the class of v generates
    let v = p.a.var("v").unwrap();
    assert!(r.o_d.ideal_equal(&[g], &[v]).unwrap());
    let t1y = t1_restricted_to_y(&p).unwrap();
    assert!(t1y.is_invertible());
}

#[test]
fn dc_strata() {
    let p = dc_pushout();
    let r = ideal_y_in_xsing(&p).unwrap();
    assert!(r.check.empty_support);
    let s = classify_points(&p).unwrap();
    assert!(s.d_empty);
    assert!(s.supports_agree);
    let s = classify_points(&pinch_pushout()).unwrap();
    assert_eq!(s.d_points, Some(1));
    assert!(s.supports_agree);
}

#[test]
fn pinch_alpha_matches_chain_rule() {
    let p = pinch_pushout();
    let alpha = build_alpha(&p).unwrap();
    assert!(alpha.is_injective().unwrap());
    let a = &p.a;
    let abar = &p.datum.abar;
    // A has variables (w, v, u): derivations are listed by values on (w, v, u)
    let cases = [
        (["0", "u", "v*w"], ["0", "x*y"]),
        (["0", "v", "u"], ["0", "y"]),
        (["2*u", "0", "v^2"], ["y", "0"]),
        (["-2*w", "v", "0"], ["-x", "y"]),
    ];
    for (e, expected) in cases {
        let delta = alpha.lift_derivation(&polys(a, &e)).unwrap().unwrap();
        assert_eq!(delta, polys(abar, &expected), "{e:?}");
    }
    let rep = tangent_sequence_check(&alpha).unwrap();
    assert!(rep.passed(), "{:?}", rep.checks);
    let xdx = alpha.restricted_coords(&polys(abar, &["x", "0"])).unwrap().unwrap();
    let span = rep.kernel.with_gens(vec![xdx]);
    assert!(span.is_submodule_of(&rep.kernel).unwrap() && rep.kernel.is_submodule_of(&span).unwrap());
    assert!(!rep.g.is_zero().unwrap());
}

#[test]
fn dc_alpha() {
    let p = dc_pushout();
    let alpha = build_alpha(&p).unwrap();
    assert!(alpha.is_injective().unwrap());
    let rep = tangent_sequence_check(&alpha).unwrap();
    assert!(rep.passed(), "{:?}", rep.checks);
    // the derivation ∂/∂a1 of A (a1 ↦ x) lifts to ∂/∂x
    let a = &p.a;
    let e: Vec<Polynomial> = (0..a.nvars()).map(|i| if i == 0 { a.one() } else { a.zero() }).collect();
    if alpha.t_x.contains(&e).unwrap() {
        let d = alpha.lift_derivation(&e).unwrap().unwrap();
        assert_eq!(d, polys(&p.datum.abar, &["1", "0", "0"]));
    }
}

#[test]
fn identity_gluing_alpha() {
    let abar = ring(&["x", "y"], &[]);
    let b = ring(&["t"], &["1"]);
    let d = GluingDatum::new(abar.clone(), abar.one(), b, vec![abar.zero()], vec![abar.one()]).unwrap();
    let p = pushout(&d, 2).unwrap();
    let alpha = build_alpha(&p).unwrap();
    assert!(alpha.map.is_isomorphism().unwrap());
    let rep = tangent_sequence_check(&alpha).unwrap();
    assert!(rep.passed());
    assert!(rep.g.is_zero().unwrap());
}
