use std::sync::Arc;

use proptest::prelude::*;
use semismooth::parse::parse_poly;
use semismooth::poly::{q, Polynomial};
use semismooth::presentation::{RingMap, RingPresentation};
use semismooth::ring::{MonomialOrder, PolyRing};

const VARS: [&str; 4] = ["x", "y", "z", "w"];

fn ring(order: MonomialOrder) -> Arc<PolyRing> {
    PolyRing::new(&VARS, order).unwrap()
}

/// Up to five terms in four variables, total degree at most five.
fn terms() -> impl Strategy<Value = Vec<(i64, [u32; 4])>> {
    let exps = prop::array::uniform4(0u32..=5).prop_filter("degree <= 5", |e| e.iter().sum::<u32>() <= 5);
    prop::collection::vec((-6i64..=6, exps), 0..=5)
}

fn build(r: &Arc<PolyRing>, ts: &[(i64, [u32; 4])]) -> Polynomial {
    let mut p = Polynomial::zero(r);
    for (c, e) in ts {
        let mut m = Polynomial::constant(r, q(*c));
        for (i, k) in e.iter().enumerate() {
            m = &m * &Polynomial::var(r, i).pow(*k);
        }
        p = &p + &m;
    }
    p
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Lex), Just(MonomialOrder::Block { first: 2 }), Just(MonomialOrder::Grevlex)]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in terms(), b in terms(), c in terms(), o in orders()) {
        let r = ring(o);
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Polynomial::zero(&r));
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
    }

    #[test]
    fn parse_inverts_print(a in terms(), o in orders()) {
        let r = ring(o);
        let p = build(&r, &a);
        let s = p.to_string();
        prop_assert_eq!(parse_poly(&s, &r).unwrap(), p.clone());
        prop_assert_eq!(parse_poly(&s, &r).unwrap().to_string(), s);
    }

    #[test]
    fn derivative_is_linear_and_leibniz(a in terms(), b in terms(), k in -4i64..=4, i in 0usize..4) {
        let r = ring(MonomialOrder::Grevlex);
        let (f, g) = (build(&r, &a), build(&r, &b));
        let c = Polynomial::constant(&r, q(k));
        prop_assert_eq!((&(&c * &f) + &g).diff(i), &(&c * &f.diff(i)) + &g.diff(i));
        prop_assert_eq!((&f * &g).diff(i), &(&f.diff(i) * &g) + &(&f * &g.diff(i)));
    }

    #[test]
    fn ring_maps_are_homomorphisms(a in terms(), b in terms(), imgs in prop::collection::vec(terms(), 4)) {
        let r = ring(MonomialOrder::Grevlex);
        let src = RingPresentation::polynomial_ring(&r);
        let tgt = RingPresentation::parse(&["s", "t"], MonomialOrder::Grevlex, &["s^2 - t^3"]).unwrap();
        let images: Vec<Polynomial> = imgs
            .iter()
            .map(|ts| {
                let t = tgt.ambient();
                let mut p = Polynomial::zero(t);
                for (c, e) in ts {
                    let m = &Polynomial::var(t, 0).pow(e[0]) * &Polynomial::var(t, 1).pow(e[1]);
                    p = &p + &m.scale(&q(*c));
                }
                p
            })
            .collect();
        let f = RingMap::new(&src, &tgt, images).unwrap();
        let (p, q_) = (build(&r, &a), build(&r, &b));
        let fp = f.apply(&p).unwrap();
        let fq = f.apply(&q_).unwrap();
        prop_assert!(tgt.equal(&f.apply(&(&p + &q_)).unwrap(), &(&fp + &fq)).unwrap());
        prop_assert!(tgt.equal(&f.apply(&(&p * &q_)).unwrap(), &(&fp * &fq)).unwrap());
        prop_assert!(tgt.equal(&f.apply(&Polynomial::one(&r)).unwrap(), &tgt.one()).unwrap());
    }
}

#[test]
fn printing_is_deterministic_per_order() {
    let r = ring(MonomialOrder::Lex);
    let p = parse_poly("w + x*y^2 - 3*z^3 + 1/2", &r).unwrap();
    assert_eq!(p.to_string(), parse_poly(&p.to_string(), &r).unwrap().to_string());
    let g = ring(MonomialOrder::Grevlex);
    let pg = parse_poly("w + x*y^2 - 3*z^3 + 1/2", &g).unwrap();
    assert_eq!(pg.to_string(), "x*y^2 - 3*z^3 + w + 1/2");
}
