use super::*;

fn cover(b: &str) -> CoverDatum {
    CoverDatum::parse(&["w"], &[] as &[&str], b).unwrap()
}

#[test]
fn pushforward_is_free_with_surjection() {
    for b in ["1", "w", "w^2 - w"] {
        let c = cover(b);
        let pf = pushforward_module(&c, &LinearizedModule::trivial()).unwrap();
        assert!(pf.free_rank_two, "b = {b}");
        assert!(pf.surjection.is_surjective().unwrap());
        let inv = pf.action.invariants().unwrap();
        assert_eq!(prune(&inv.module).unwrap().module.ngens(), 1);
    }
}

#[test]
fn det_sequence_exact() {
    for b in ["1", "w", "w^2 - w"] {
        for sign in [1, -1] {
            let r = det_sequence_check(&cover(b), &LinearizedModule::new("m", sign).unwrap()).unwrap();
            assert!(r.passed(), "b = {b}, sign = {sign}: {:?}", r.checks);
        }
    }
}

#[test]
fn embedding_equations() {
    for (b, h) in [("w", "u^2 - v^2*w"), ("1", "u^2 - v^2"), ("w^2 - w", "u^2 - v^2*w^2 + v^2*w")] {
        let c = cover(b);
        let e = embed_in_ve(&c, &LinearizedModule::trivial()).unwrap();
        assert!(e.passed(), "b = {b}: {:?} {:?}", e.checks, e.cartesian.checks);
        let want = e.pushout.a.parse_poly(h).unwrap();
        let got = e.equation().unwrap();
        assert!(got == want || got == -&want, "b = {b}: {got}");
        assert!(cor46_affine_check(&c, &e).unwrap().passed);
    }
}

#[test]
fn prop48_on_squarefree_branch() {
    for b in ["w", "w^2 - w", "1"] {
        let r = prop48_check(&cover(b), &LinearizedModule::trivial()).unwrap();
        assert!(r.passed(), "b = {b}: {:?}", r.checks);
    }
    let r = prop48_check(&cover("w"), &LinearizedModule::trivial()).unwrap();
    let g = r.ideal_report.generator.clone().unwrap();
    let v = r.embedding.v.clone();
    assert!(g == v || g == -&v, "generator {g}");
}

#[test]
fn nonreduced_branch_flagged() {
    assert_eq!(cover("w^2").branch_is_squarefree(), Some(false));
    assert_eq!(cover("w^2 - w").branch_is_squarefree(), Some(true));
}

/// Sections of `O(d)` upstairs are `x^j`, `0 ≤ j ≤ d`; those of `O(a)` downstairs
/// `X^k`, `0 ≤ k ≤ a`. Splitting is recovered from `h⁰` of all twists.
fn brute_splitting(d: i64) -> (i64, i64) {
    let h0 = |k: i64| (k + 1).max(0);
    let push_h0 = |n: i64| h0(d + 2 * n);
    for a in -12..=12 {
        for b in -12..=a {
            if (-8..=8).all(|n| h0(a + n) + h0(b + n) == push_h0(n)) {
                return (a, b);
            }
        }
    }
    panic!("no splitting for {d}");
}

#[test]
fn p1_degrees_match_brute_force() {
    assert_eq!(p1_pushforward_degrees(0), (0, -1));
    assert_eq!(p1_pushforward_degrees(2), (1, 0));
    for d in -6..=6 {
        let s = p1_pushforward_degrees(d);
        assert_eq!(s, brute_splitting(d), "d = {d}");
        assert_eq!(s.0 + s.1, d - 1);
    }
}

#[test]
fn degree_identities() {
    let r = thm53_degree_check(0).unwrap();
    assert_eq!(r.deg_det_e, -1);
    assert_eq!(r.deg_t1, 2);
    for m in -3..=3 {
        let r = thm53_degree_check(m).unwrap();
        assert!(r.passed(), "m = {m}: {:?}", r.checks);
        assert_eq!(r.deg_t1, m + 2);
        let c = cor46_degree_check(m).unwrap();
        assert!(c.passed(), "m = {m}: {:?}", c.checks);
        assert_eq!(2 * (c.deg_l - c.deg_det_e), 4 - 2 * m);
    }
}

#[test]
fn tangent_sequence_on_cover_pushouts() {
    use crate::singularity::{build_alpha, tangent_sequence_check};
    for b in ["w", "w^2 - w"] {
        let e = embed_in_ve(&cover(b), &LinearizedModule::trivial()).unwrap();
        let alpha = build_alpha(&e.pushout).unwrap();
        let r = tangent_sequence_check(&alpha).unwrap();
        assert!(r.passed(), "b = {b}: {:?}", r.checks);
    }
}
