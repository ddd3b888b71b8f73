//! Order complex of a bonded poset, the embedding of a chain simplex and the
//! rational points of the dilated complex.

use lspaths::complex::{faces, level_points, verify_integral_structure, SimplexEmbedding};
use lspaths::fixtures;

fn main() -> lspaths::Result<()> {
    let p = fixtures::chain_121();
    println!("faces: {}", faces(&p)?.len());

    let chain = p.maximal_chains()?.remove(0);
    let emb = SimplexEmbedding::new(&p, &chain)?;
    println!("bonds along the chain: {:?}", emb.bonds());
    for v in emb.vertices() {
        println!("  vertex {v:?}");
    }

    for r in 1..=4 {
        let pts = level_points(&p, r)?;
        let integral = verify_integral_structure(&p, &chain, r)?;
        println!("r = {r}: {} points, integral structure {}", pts.len(), integral);
    }
    Ok(())
}
