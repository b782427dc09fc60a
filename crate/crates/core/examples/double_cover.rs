//! A double cover z^2 = b of the line, the pushforward E of a linearized module,
//! the sequence 0 -> g^*E -> M -> ... and the embedding of the glued variety in V(E).
use semismooth::covers::{cor46_affine_check, det_sequence_check, embed_in_ve, prop48_check, CoverDatum, LinearizedModule};
use semismooth::presentation::RingPresentation;
use semismooth::ring::MonomialOrder;

fn main() -> semismooth::error::Result<()> {
    let base = RingPresentation::parse::<_, &str>(&["w"], MonomialOrder::Grevlex, &[])?;
    for b in ["w", "w*(w - 1)"] {
        let c = CoverDatum::new(&base, base.parse_poly(b)?, "z")?;
        let m = LinearizedModule::trivial();
        println!("cover {} over {} (branch {b})", c.cover(), base);
        for ch in det_sequence_check(&c, &m)?.checks {
            println!("  [{}] {} {}", if ch.passed { "pass" } else { "FAIL" }, ch.name, ch.detail);
        }
        let emb = embed_in_ve(&c, &m)?;
        println!("  X = {}", emb.pushout.a);
        let c46 = cor46_affine_check(&c, &emb)?;
        println!("  {}: {}", c46.name, c46.passed);
        let p48 = prop48_check(&c, &m)?;
        println!("  I_Y|Xsing = r_*(M|_R): {}", p48.passed());
    }
    Ok(())
}
