//! Compare path vectors in the reverse lexicographic order of a linear
//! extension and in the partial order that refines every extension.

use lspaths::fixtures;
use lspaths::orders::{default_extension, linear_extensions, rlex_compare, triangle_compare};
use lspaths::PathVector;

fn main() -> lspaths::Result<()> {
    let p = fixtures::i24();
    let exts = linear_extensions(&p)?;
    println!("i24 has {} linear extensions", exts.len());

    let pairs = [("14:1", "23:1"), ("12:1,34:1", "13:1,24:1"), ("12:1", "13:1")];
    let ext = default_extension(&p);
    for (a, b) in pairs {
        let (v, w) = (PathVector::parse(&p, a)?, PathVector::parse(&p, b)?);
        println!(
            "{a:>10} vs {b:<10} rlex {:?}, partial {}",
            rlex_compare(&v, &w, &ext),
            triangle_compare(&p, &v, &w)?.as_str()
        );
    }
    Ok(())
}
