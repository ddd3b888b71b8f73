//! Standard monomial expansions in the coordinate ring of a Grassmannian.

use lspaths::grassmann::{verify_grassmann_ls, GrassmannRing};

fn main() -> lspaths::Result<()> {
    let ring = GrassmannRing::new(2, 4)?;
    let p = ring.poset();
    let (a, b) = (p.element("14")?, p.element("23")?);
    println!("p14 p23 = {}", ring.straighten(&[a, b])?.display(p));

    let report = verify_grassmann_ls(&ring, 3)?;
    for (r, monomials, rank, paths) in &report.degrees {
        println!("degree {r}: {monomials} standard monomials, rank {rank}, {paths} paths");
    }
    println!("axioms hold: {}, effective weights: {}", report.axioms.passed, report.effective);

    let ring = GrassmannRing::new(2, 5)?;
    let p = ring.poset();
    let (a, b) = (p.element("15")?, p.element("24")?);
    println!("\nin G(2,5): p15 p24 = {}", ring.straighten(&[a, b])?.display(p));
    Ok(())
}
