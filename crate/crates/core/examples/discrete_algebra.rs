//! The discrete LS algebra: products of paths, straightening relations and a
//! check of the axioms they satisfy.

use lspaths::discrete::{discrete_table, multiply_discrete, verify_ls_axioms, AlgebraElement};
use lspaths::fixtures;
use lspaths::paths::{enumerate, LsPath};

fn main() -> lspaths::Result<()> {
    let p = fixtures::i24();
    let x = AlgebraElement::basis(LsPath::parse(&p, "14:1")?);
    let y = AlgebraElement::basis(LsPath::parse(&p, "23:1")?);
    let z = AlgebraElement::basis(LsPath::parse(&p, "24:1")?);
    println!("14 * 23 = {}", multiply_discrete(&p, &x, &y).display(&p));
    println!("14 * 24 = {}", multiply_discrete(&p, &x, &z).display(&p));

    let gens = enumerate(&p, 1)?;
    let table = discrete_table(&p, &gens)?;
    println!("\n{} relations", table.len());
    let report = verify_ls_axioms(&p, &table, &gens, None, false)?;
    println!("axioms hold: {} ({} entries)", report.passed, report.entries_checked);
    for v in &report.violations {
        println!("  {} {}*{}: {}", v.axiom, v.lhs.0.display(&p), v.lhs.1.display(&p), v.detail);
    }
    Ok(())
}
