//! Kähler differentials, tangent module and T1 of a few hypersurfaces.
use semismooth::fpmod::prune;
use semismooth::presentation::RingPresentation;
use semismooth::ring::MonomialOrder;
use semismooth::singularity::{kahler, singular_subscheme, t1, t1_hypersurface_certificate, tangent};

fn main() -> semismooth::error::Result<()> {
    for (name, vars, f) in [
        ("pinch", ["u", "v", "w"], "u^2 - v^2*w"),
        ("double crossing", ["u", "v", "w"], "u*v"),
        ("A2", ["x", "y", "z"], "x^2 + y^2 + z^3"),
    ] {
        let x = RingPresentation::parse(&vars, MonomialOrder::Grevlex, &[f])?;
        println!("{name}: {x}");
        println!("  Omega = {}", kahler(&x)?);
        println!("  T     = {}", prune(&tangent(&x)?)?.module);
        println!("  T1    = {}", prune(&t1(&x)?)?.module);
        println!("  singular ideal = {:?}", singular_subscheme(&x)?.ideal);
        println!("  T1 = O/(f, partials) certified: {}", t1_hypersurface_certificate(&x)?);
    }
    Ok(())
}
