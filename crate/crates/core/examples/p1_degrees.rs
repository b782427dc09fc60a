//! Degree bookkeeping for a double cover of P1 branched in two points.
use semismooth::covers::{cor46_degree_check, p1_pushforward_degrees, thm53_degree_check};

fn main() -> semismooth::error::Result<()> {
    for m in -3..=3 {
        let (a, b) = p1_pushforward_degrees(-m);
        let n = thm53_degree_check(m)?;
        let c = cor46_degree_check(m)?;
        println!(
            "deg N = {m:>2}: g_*N^-1 = O({a}) + O({b}), deg det = {:>2}, deg T1|_Y = {:>2}, all identities hold: {}",
            n.deg_det_e,
            n.deg_t1,
            n.checks.iter().chain(&c.checks).all(|ch| ch.passed)
        );
    }
    Ok(())
}
