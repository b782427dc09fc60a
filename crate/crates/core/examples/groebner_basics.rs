//! Groebner bases, elimination and ideal operations over Q.
use semismooth::groebner::{colon, eliminate_keep_named, groebner_basis, intersect};
use semismooth::parse::parse_poly;
use semismooth::ring::{MonomialOrder, PolyRing};

fn main() -> semismooth::error::Result<()> {
    let r = PolyRing::new(&["x", "y", "u", "v", "w"], MonomialOrder::Lex)?;
    let p = |s: &str| parse_poly(s, &r);
    let graph = vec![p("u - x*y")?, p("v - y")?, p("w - x^2")?];
    let gb = groebner_basis(&r, &graph)?;
    println!("lex basis of the graph of (x,y) -> (xy, y, x^2):");
    for g in gb.gens() {
        println!("  {g}");
    }
    let image = eliminate_keep_named(&r, &graph, &["u", "v", "w"])?;
    println!("image ideal: {image:?}");

    let s = PolyRing::grevlex(&["x", "y"]);
    let q = |t: &str| parse_poly(t, &s);
    let i = vec![q("x^2")?, q("x*y")?];
    println!("(x^2, xy) : x = {:?}", colon(&s, &i, &[q("x")?])?);
    println!("(x) ∩ (y) = {:?}", intersect(&s, &[q("x")?], &[q("y")?])?);
    Ok(())
}
