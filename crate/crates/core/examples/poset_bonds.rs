//! Build bonded posets, check the gcd condition and list maximal chains.
//!
//! ```text
//! cargo run --example poset_bonds
//! ```

use lspaths::{fixtures, BondedPoset};

fn main() -> lspaths::Result<()> {
    // bonds 2,2 through x and 3,3 through y: the gcds disagree
    let bad = BondedPoset::new(
        &["b", "x", "y", "t"],
        &[("b", "x", 2), ("x", "t", 2), ("b", "y", 3), ("y", "t", 3)],
    )?;
    let report = bad.verify_gcd_condition()?;
    println!("bad diamond: gcd condition holds = {}", report.ok);
    if let Err(e) = report.into_result(&bad) {
        println!("  {} ({})", e, e.kind());
    }

    for (name, p) in fixtures::all() {
        if !p.verify_gcd_condition()?.ok {
            continue;
        }
        let chains = p.maximal_chains()?;
        println!("{name}: {} elements, rank {}, {} maximal chains", p.len(), p.rank(), chains.len());
        for c in chains {
            println!("  {}", p.format_elements(&c, " < "));
        }
    }

    let p = fixtures::i24();
    let (lo, hi) = (p.element("12")?, p.element("34")?);
    println!("extended bond 12 -> 34 in i24: {}", p.extended_bond(lo, hi)?);
    Ok(())
}
