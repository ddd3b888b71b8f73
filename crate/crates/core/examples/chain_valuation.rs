//! Valuations attached to maximal chains, and the estimate they satisfy on
//! degree-one paths.

use lspaths::discrete::AlgebraElement;
use lspaths::grassmann::{GrassmannRing, PlueckerElement};
use lspaths::paths::enumerate;
use lspaths::valuation::{check_estimate, ChainValuationData};

fn main() -> lspaths::Result<()> {
    let ring = GrassmannRing::new(2, 4)?;
    let p = ring.poset();
    let id = |l: &str| p.element(l);
    let x = PlueckerElement::monomial(vec![id("14")?, id("23")?]);

    for chain in p.maximal_chains()? {
        println!("chain {}", p.format_elements(&chain, ","));
        println!("  p14 p23 -> {}", ring.chain_valuation(&x, &chain)?.display(p));

        let mut data = ChainValuationData::new(chain.clone());
        let paths = enumerate(p, 1)?;
        for path in &paths {
            let e = AlgebraElement::basis(path.clone());
            data.insert(path.clone(), ring.chain_valuation_algebra(&e, &chain)?);
        }
        let report = check_estimate(p, &data, &paths)?;
        println!("  estimate holds on degree one: {}", report.passed);
    }
    Ok(())
}
