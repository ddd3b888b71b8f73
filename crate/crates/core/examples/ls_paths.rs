//! Enumerate LS paths and split them into degree-one pieces.

use lspaths::fixtures;
use lspaths::paths::{decompose_degree_one, enumerate, width, LsPath};
use lspaths::PathMonomial;

fn main() -> lspaths::Result<()> {
    let p = fixtures::chain_121();
    for r in 1..=3 {
        println!("chain 1-2-1, degree {r}: {} paths", enumerate(&p, r)?.len());
    }

    let p = fixtures::i24();
    for r in 1..=3 {
        println!("i24, degree {r}: {} paths", enumerate(&p, r)?.len());
    }

    let p = fixtures::chain_121();
    let path = LsPath::parse(&p, "e:1,x:1/2,y:1/2")?;
    println!("\n{} has width {}", path.display(&p), width(&p, &path)?);
    let pieces = decompose_degree_one(&p, &path)?;
    println!("decomposes as {}", PathMonomial::new(pieces).display(&p));
    Ok(())
}
