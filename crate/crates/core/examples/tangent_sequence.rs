//! The injection alpha: T_X -> f_*T_Xbar and the sequence
//! 0 -> (g_*T_Ybar)^inv -> g_*T_Xbar|_Ybar -> G -> 0 for the pinch point.
use semismooth::glue::{pushout, GluingDatum};
use semismooth::presentation::RingPresentation;
use semismooth::ring::MonomialOrder;
use semismooth::singularity::{build_alpha, ideal_y_in_xsing, t1_restricted_to_y, tangent_sequence_check};

fn main() -> semismooth::error::Result<()> {
    let abar = RingPresentation::parse::<_, &str>(&["x", "y"], MonomialOrder::Grevlex, &[])?;
    let b = RingPresentation::parse::<_, &str>(&["t"], MonomialOrder::Grevlex, &[])?;
    let d = GluingDatum::new(abar.clone(), abar.var("y")?, b, vec![abar.parse_poly("x^2")?], vec![abar.one(), abar.var("x")?])?
        .with_a_vars(&["w", "v", "u"]);
    let p = pushout(&d, 4)?;
    let alpha = build_alpha(&p)?;
    let rep = tangent_sequence_check(&alpha)?;
    for c in &rep.checks {
        println!("[{}] {} ({})", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
    }
    println!("G = {}", rep.g);
    let x_dx = vec![abar.var("x")?, abar.zero()];
    println!("x d/dx restricted to Ybar: {:?}", alpha.restricted_coords(&x_dx)?);
    let iy = ideal_y_in_xsing(&p)?;
    println!("I_Xsing = {:?}, contained in Y: {}", iy.xsing_ideal, iy.xsing_in_y);
    println!("T1|_Y = {}", t1_restricted_to_y(&p)?.module);
    Ok(())
}
