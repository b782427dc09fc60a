mod common;

use common::{monomials, mono, syzygies_bounded};
use proptest::prelude::*;
use semismooth::fpmod::{annihilator, ext1, fitting_ideal, prune, FPModule, InvolutionAction, ModuleMap, Subquotient};
use semismooth::groebner::groebner_basis;
use semismooth::poly::{q, Polynomial};
use semismooth::presentation::RingPresentation;
use semismooth::ring::MonomialOrder;
use semismooth::singularity::{t1, tangent_subquotient};

fn base() -> RingPresentation {
    RingPresentation::parse::<_, &str>(&["x", "y"], MonomialOrder::Grevlex, &[]).unwrap()
}

/// A polynomial of degree at most 2 in x, y.
fn poly(r: &RingPresentation, c: &[i64]) -> Polynomial {
    let es: Vec<Vec<u32>> = (0..=2).flat_map(|d| monomials(2, d)).collect();
    es.iter().zip(c).fold(r.zero(), |acc, (e, k)| &acc + &mono(r.ambient(), e).scale(&q(*k)))
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![2 => Just(0i64), 1 => -2i64..=2], 6)
}

fn rows(n: usize, k: usize) -> impl Strategy<Value = Vec<Vec<Vec<i64>>>> {
    prop::collection::vec(prop::collection::vec(coeffs(), n), 1..=k)
}

fn module(r: &RingPresentation, n: usize, rs: &[Vec<Vec<i64>>]) -> FPModule {
    let rows = rs.iter().map(|row| row.iter().map(|c| poly(r, c)).collect()).collect();
    FPModule::from_rows(r, n, rows).unwrap()
}

fn cfg() -> ProptestConfig {
    ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn fitting_ideals_ignore_redundant_generators(rs in rows(2, 3), extra in prop::collection::vec(coeffs(), 2)) {
        let r = base();
        let m = module(&r, 2, &rs);
        // new generator e3 = c1 e1 + c2 e2
        let mut bigger: Vec<Vec<Polynomial>> = m.relations().rows().iter().map(|row| {
            let mut row = row.clone();
            row.push(r.zero());
            row
        }).collect();
        bigger.push(vec![-poly(&r, &extra[0]), -poly(&r, &extra[1]), r.one()]);
        let m3 = FPModule::from_rows(&r, 3, bigger).unwrap();
        for i in 0..=3 {
            let a = fitting_ideal(&m, i).unwrap();
            let b = fitting_ideal(&m3, i).unwrap();
            prop_assert!(r.ideal_equal(&a, &b).unwrap(), "Fitt_{} differs", i);
        }
    }

    #[test]
    fn annihilator_kills_the_module(rs in rows(2, 3)) {
        let r = base();
        let m = module(&r, 2, &rs);
        for a in annihilator(&m).unwrap() {
            for i in 0..2 {
                let v: Vec<Polynomial> = m.unit(i).iter().map(|e| &a * e).collect();
                prop_assert!(m.is_zero_element(&v).unwrap());
            }
        }
    }

    // a relation with a unit entry splits off: M is free, so Ext^1(M, N) = 0
    #[test]
    fn ext1_vanishes_on_free_presentations(a in coeffs(), b in coeffs(), f in coeffs()) {
        let r = base();
        let m = FPModule::from_rows(&r, 3, vec![vec![r.one(), poly(&r, &a), poly(&r, &b)]]).unwrap();
        let n = FPModule::cyclic(&r, &[poly(&r, &f)]).unwrap();
        prop_assert!(ext1(&m, &n).unwrap().is_zero().unwrap());
    }

    #[test]
    fn invariants_and_anti_invariants_span(rs in rows(2, 2)) {
        let r = base();
        // symmetrize the relations so the swap of e1, e2 is well defined
        let mut sym = Vec::new();
        for row in &rs {
            sym.push(row.clone());
            sym.push(vec![row[1].clone(), row[0].clone()]);
        }
        let m = module(&r, 2, &sym);
        let swap = ModuleMap::new(&m, &m, vec![m.unit(1), m.unit(0)]).unwrap();
        let act = InvolutionAction::new(swap).unwrap();
        let inv = act.invariants().unwrap();
        let anti = act.anti_invariants().unwrap();
        let mut gens = inv.submodule.gens().to_vec();
        gens.extend(anti.submodule.gens().iter().cloned());
        let both = Subquotient::new(&r, 2, gens, m.relations().rows().to_vec());
        for i in 0..2 {
            prop_assert!(both.contains(&m.unit(i)).unwrap());
        }
    }
}

/// Derivations found by bounded linear algebra on `sum a_i df/dx_i = b f` lie in `T_X`.
#[test]
fn tangent_contains_bounded_derivations() {
    for (vars, f) in [(["u", "v", "w"], "u^2 - v^2*w"), (["u", "v", "w"], "u*v"), (["x", "y", "z"], "x^2 + y^2 + z^3")] {
        let x = RingPresentation::parse(&vars, MonomialOrder::Grevlex, &[f]).unwrap();
        let amb = x.ambient();
        let fp = x.relations()[0].clone();
        let mut gens: Vec<Polynomial> = (0..3).map(|i| fp.diff(i)).collect();
        gens.push(fp.clone());
        let ts = tangent_subquotient(&x).unwrap();
        let found = syzygies_bounded(amb, &gens, 4);
        assert!(!found.is_empty());
        for s in found {
            assert!(ts.contains(&s[..3]).unwrap(), "{f}: {:?} not a derivation", &s[..3]);
        }
    }
}

/// Tjurina numbers of simple singularities against `dim_Q T^1`.
#[test]
fn t1_dimension_is_the_tjurina_number() {
    for (f, tau) in [
        ("x^2 + y^2 + z^2", 1),
        ("x^2 + y^2 + z^3", 2),
        ("x^2 + y^2 + z^4", 3),
        ("x^2*y + y^3 + z^2", 4),
        ("x^3 + y^4 + z^2", 6),
    ] {
        let x = RingPresentation::parse(&["x", "y", "z"], MonomialOrder::Grevlex, &[f]).unwrap();
        let m = prune(&t1(&x).unwrap()).unwrap().module;
        assert_eq!(m.ngens(), 1);
        let mut ideal = x.relations().to_vec();
        ideal.extend(m.relations().rows().iter().map(|row| row[0].clone()));
        let gb = groebner_basis(x.ambient(), &ideal).unwrap();
        assert_eq!(gb.quotient_dimension(), Some(tau), "{f}");
    }
    let cusp = RingPresentation::parse(&["x", "y"], MonomialOrder::Grevlex, &["y^2 - x^3"]).unwrap();
    assert!(!t1(&cusp).unwrap().is_zero().unwrap());
}
