mod common;

use std::sync::Arc;

use common::{member_bounded, monomials, mono, syzygies_bounded};
use proptest::prelude::*;
use semismooth::groebner::module::{syzygy, ModuleMatrix};
use semismooth::groebner::{colon, eliminate, groebner_basis, ideal_contains};
use semismooth::poly::{q, Polynomial};
use semismooth::presentation::RingPresentation;
use semismooth::ring::{MonomialOrder, PolyRing};

fn ring() -> Arc<PolyRing> {
    PolyRing::grevlex(&["x", "y", "z"])
}

/// A homogeneous form of degree `d` from small integer coefficients.
fn form(r: &Arc<PolyRing>, d: u32, coeffs: &[i64]) -> Polynomial {
    let mut p = Polynomial::zero(r);
    for (e, c) in monomials(r.nvars(), d).iter().zip(coeffs) {
        p = &p + &mono(r, e).scale(&q(*c));
    }
    p
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], n)
}

fn cfg() -> ProptestConfig {
    ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn s_polynomials_reduce_to_zero(a in coeffs(6), b in coeffs(6), c in coeffs(10)) {
        let r = ring();
        let gens = vec![form(&r, 2, &a), form(&r, 2, &b), form(&r, 3, &c)];
        let gb = groebner_basis(&r, &gens).unwrap();
        prop_assert!(gb.verify());
        prop_assert!(gb.contains_all(&gens));
        for g in gb.gens() {
            prop_assert!(g.is_zero() || g.leading_term().unwrap().1 == q(1));
        }
    }

    // homogeneous ideals make the degree-bounded oracle exact
    #[test]
    fn membership_matches_linear_algebra(a in coeffs(6), b in coeffs(6), p in coeffs(10), m1 in coeffs(3), m2 in coeffs(3), member in any::<bool>()) {
        let r = ring();
        let gens = vec![form(&r, 2, &a), form(&r, 2, &b)];
        let target = if member {
            &(&form(&r, 1, &m1) * &gens[0]) + &(&form(&r, 1, &m2) * &gens[1])
        } else {
            form(&r, 3, &p)
        };
        let gb = groebner_basis(&r, &gens).unwrap();
        let nf = gb.normal_form(&target);
        prop_assert_eq!(nf.is_zero(), member_bounded(&r, &gens, &target, 3));
        // the remainder differs from the input by an ideal element
        prop_assert!(member_bounded(&r, &gens, &(&target - &nf), 3));
        for t in nf.terms() {
            prop_assert!(gb.lead_monomials().iter().all(|l| !l.divides(&t.0)));
        }
    }

    #[test]
    fn colon_contains_ideal_and_multiplies_in(a in coeffs(6), b in coeffs(6), j in coeffs(3)) {
        let r = ring();
        let i = vec![form(&r, 2, &a), form(&r, 2, &b)];
        let jj = vec![form(&r, 1, &j)];
        let col = colon(&r, &i, &jj).unwrap();
        for g in &i {
            prop_assert!(ideal_contains(&r, &col, g).unwrap());
        }
        for c in &col {
            for g in &jj {
                prop_assert!(ideal_contains(&r, &i, &(c * g)).unwrap());
            }
        }
    }

    #[test]
    fn syzygies_contain_every_bounded_syzygy(a in coeffs(3), b in coeffs(3), c in coeffs(6)) {
        let r = ring();
        let gens = vec![form(&r, 1, &a), form(&r, 1, &b), form(&r, 2, &c)];
        let pr = RingPresentation::polynomial_ring(&r);
        let m = ModuleMatrix::new(&pr, 1, gens.iter().map(|g| vec![g.clone()]).collect()).unwrap();
        let syz = syzygy(&m).unwrap();
        let basis = syz.submodule().unwrap();
        for s in &syz.rows().to_vec() {
            let dot = s.iter().zip(&gens).fold(Polynomial::zero(&r), |acc, (x, g)| &acc + &(x * g));
            prop_assert!(dot.is_zero());
        }
        for s in syzygies_bounded(&r, &gens, 3) {
            prop_assert!(basis.contains(&s));
        }
    }

    #[test]
    fn elimination_lies_in_the_ideal(a in coeffs(6), b in coeffs(6)) {
        let r = PolyRing::new(&["x", "y", "z"], MonomialOrder::Grevlex).unwrap();
        let gens = vec![form(&r, 2, &a), form(&r, 2, &b), &Polynomial::var(&r, 0) - &Polynomial::var(&r, 1)];
        let elim = eliminate(&r, &gens, &[1, 2]).unwrap();
        for g in &elim {
            prop_assert!(g.terms().iter().all(|(m, _)| m.0[0] == 0));
            prop_assert!(ideal_contains(&r, &gens, g).unwrap());
        }
    }
}
