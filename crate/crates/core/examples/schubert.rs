//! Bruhat order on a Weyl orbit with bonds, Schubert subposets and the check
//! that LS paths of degree one count the Weyl character dimension.
//!
//! ```text
//! cargo run --example schubert -- B2 0,1
//! ```

use lspaths::paths::enumerate;
use lspaths::weyl::{bruhat_poset, format_weight, orbit, parse_weight, weyl_dimension, RootSystem};

fn main() -> lspaths::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = RootSystem::parse(&args.next().unwrap_or_else(|| "G2".into()))?;
    let lambda = parse_weight(&args.next().unwrap_or_else(|| "1,0".into()))?;

    println!("{} with |W| = {}", rs.name(), rs.weyl_group_order());
    for o in orbit(&rs, &lambda)? {
        println!("  {:<12} length {}", format_weight(&o.weight), o.length);
    }

    let p = bruhat_poset(&rs, &lambda, None)?;
    for c in p.covers() {
        if c.bond > 1 {
            println!("bond {} on {} < {}", c.bond, p.label(c.lower), p.label(c.upper));
        }
    }
    println!(
        "degree-one paths {}, dimension {}",
        enumerate(&p, 1)?.len(),
        weyl_dimension(&rs, &lambda)?
    );

    let tau = p.covers()[0].upper;
    let tau_w = parse_weight(p.label(tau))?;
    let below = bruhat_poset(&rs, &lambda, Some(&tau_w))?;
    println!("below {}: {} elements", p.label(tau), below.len());
    Ok(())
}
