//! The quasi-valuation as a minimum over chains, and the first levels of the
//! associated Newton-Okounkov body.

use std::collections::BTreeMap;

use lspaths::grassmann::{chain_values, GrassmannRing, PlueckerElement};
use lspaths::orders::default_extension;
use lspaths::valuation::{discrete_values, newton_okounkov_levels};

fn main() -> lspaths::Result<()> {
    let ring = GrassmannRing::new(2, 4)?;
    let p = ring.poset();
    let x = PlueckerElement::monomial(vec![p.element("14")?, p.element("23")?]);

    for (chain, v) in chain_values(&ring, &x)? {
        println!("{:<16} {}", p.format_elements(&chain, ","), v.display(p));
    }
    println!("minimum: {}", ring.quasi_valuation(&x)?.display(p));

    let ext = default_extension(p);
    let mut values = BTreeMap::new();
    for r in 1..=3 {
        values.insert(r, discrete_values(p, r, &ext)?);
    }
    for (r, level) in newton_okounkov_levels(&values)? {
        println!("level {r}: {} points", level.len());
    }
    Ok(())
}
