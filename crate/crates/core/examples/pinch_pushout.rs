//! Gluing the plane to a line along x -> x^2 gives the Whitney umbrella; the
//! double line z^2 = 1 glued along its projection gives uv = 0.
use semismooth::glue::{match_presentation, pushout, verify_cartesian, GluingDatum};
use semismooth::presentation::RingPresentation;
use semismooth::ring::MonomialOrder;

fn main() -> semismooth::error::Result<()> {
    let abar = RingPresentation::parse::<_, &str>(&["x", "y"], MonomialOrder::Grevlex, &[])?;
    let b = RingPresentation::parse::<_, &str>(&["t"], MonomialOrder::Grevlex, &[])?;
    let d = GluingDatum::new(abar.clone(), abar.var("y")?, b, vec![abar.parse_poly("x^2")?], vec![abar.one(), abar.var("x")?])?
        .with_a_vars(&["w", "v", "u"]);
    let p = pushout(&d, 4)?;
    println!("A = {}", p.a);
    println!("f# = {:?}", p.fsharp.images());
    println!("conductor in A: {:?}", p.conductor_a);
    for c in verify_cartesian(&p)?.checks {
        println!("  [{}] {} ({})", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
    }
    let e = RingPresentation::parse(&["u", "v", "w"], MonomialOrder::Grevlex, &["u^2 - v^2*w"])?;
    let imgs = vec![abar.parse_poly("x*y")?, abar.var("y")?, abar.parse_poly("x^2")?];
    println!("isomorphic to {e}: {}", match_presentation(&p, &e, &imgs)?.is_some());

    let abar = RingPresentation::parse(&["x", "y", "z"], MonomialOrder::Grevlex, &["z^2 - 1"])?;
    let b = RingPresentation::parse::<_, &str>(&["t"], MonomialOrder::Grevlex, &[])?;
    let d = GluingDatum::new(abar.clone(), abar.var("y")?, b, vec![abar.var("x")?], vec![abar.one(), abar.var("z")?])?;
    let p = pushout(&d, 4)?;
    println!("double crossing: A = {}", p.a);
    Ok(())
}
