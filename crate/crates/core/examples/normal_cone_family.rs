//! Deformation to the normal cone of the pinch gluing, and a smoothing family uv = t.
use semismooth::degeneration::{
    base_change_t1_check, normal_cone_family, specialization_cocartesian_check, t1_constancy_check, FamilyRing,
};
use semismooth::glue::GluingDatum;
use semismooth::poly::q;
use semismooth::presentation::RingPresentation;
use semismooth::ring::MonomialOrder;

fn main() -> semismooth::error::Result<()> {
    let abar = RingPresentation::parse::<_, &str>(&["x", "y"], MonomialOrder::Grevlex, &[])?;
    let b = RingPresentation::parse::<_, &str>(&["t"], MonomialOrder::Grevlex, &[])?;
    let d = GluingDatum::new(abar.clone(), abar.var("y")?, b, vec![abar.parse_poly("x^2")?], vec![abar.one(), abar.var("x")?])?;
    let (chart, fp) = normal_cone_family(&d)?;
    println!("chart: {}", chart.family.ring());
    println!("family of pushouts: {} over {}", fp.family.ring(), fp.family.parameter_name());
    for t0 in [0, 1] {
        let r = specialization_cocartesian_check(&fp, &q(t0))?;
        println!("  t = {t0}: fiber cocartesian: {}", r.passed());
    }
    println!("  T1 constant along Y x A1: {}", t1_constancy_check(&fp)?.passed());

    let x = RingPresentation::parse(&["u", "v", "t"], MonomialOrder::Grevlex, &["u*v - t"])?;
    let fam = FamilyRing::new(&x, "t")?;
    for t0 in [0, 1] {
        for c in base_change_t1_check(&fam, &q(t0))?.checks {
            println!("  uv = t, t = {t0}: [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
        }
    }
    Ok(())
}
