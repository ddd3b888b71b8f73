//! Quasi-valuation primitives: `ν₀,C`, `h_C`, `σ′_h`, the quasi-valuation
//! on the discrete algebra, the estimate checker for chain valuations, and
//! Newton-Okounkov levels.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::discrete::AlgebraElement;
use crate::error::{Error, Result};
use crate::orders::{rlex_compare, LinearExtension};
use crate::paths::LsPath;
use crate::poset::BondedPoset;
use crate::rational::Q;
use crate::vector::PathVector;

fn check_maximal_chain(poset: &BondedPoset, chain: &[usize]) -> Result<()> {
    let ok = chain.len() == poset.rank() + 1
        && chain.iter().enumerate().all(|(i, &e)| e < poset.len() && poset.length_of(e) == i)
        && poset.is_chain(chain);
    if ok {
        Ok(())
    } else {
        Err(Error::NotAChain)
    }
}

/// `ν₀,C(π) = Σ_σ π(σ)·σ_{ℓ(σ)}`.
pub fn nu_zero(poset: &BondedPoset, chain: &[usize], values: &PathVector) -> Result<PathVector> {
    check_maximal_chain(poset, chain)?;
    let mut out = PathVector::zero();
    for (e, c) in values.iter() {
        out.add_to(chain[poset.length_of(e)], c);
    }
    Ok(out)
}

/// `−1` when `supp π ⊆ C`, otherwise the least `h` with `σ_h > max(supp π \ C)`.
pub fn h_index(poset: &BondedPoset, chain: &[usize], values: &PathVector) -> Result<i64> {
    check_maximal_chain(poset, chain)?;
    let off: Vec<usize> = values
        .support()
        .into_iter()
        .filter(|e| !chain.contains(e))
        .collect();
    let Some(&top) = off.iter().max_by_key(|&&e| poset.length_of(e)) else {
        return Ok(-1);
    };
    if off.iter().any(|&e| !poset.leq(e, top)) {
        return Err(Error::NotAChain);
    }
    chain
        .iter()
        .position(|&s| poset.lt(top, s))
        .map(|h| h as i64)
        .ok_or_else(|| Error::NoSuchElement(poset.label(top).to_string()))
}

/// `σ′_h = σ_h / M_{σ_h}`, zero for `h = −1`.
pub fn sigma_prime(poset: &BondedPoset, chain: &[usize], h: i64) -> PathVector {
    if h < 0 {
        return PathVector::zero();
    }
    let s = chain[h as usize];
    PathVector::unit(s, Q::new(1.into(), BigInt::from(poset.lcm_bonds(s))))
}

/// The ≼-least basis path with nonzero coefficient.
pub fn quasi_valuation_discrete(x: &AlgebraElement, ext: &LinearExtension) -> Result<LsPath> {
    x.terms()
        .map(|(p, _)| p)
        .min_by(|a, b| rlex_compare(a.vector(), b.vector(), ext))
        .cloned()
        .ok_or(Error::ZeroElement)
}

/// Values of a chain valuation on a set of inputs, with `C` recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChainValuationData {
    pub chain: Vec<usize>,
    pub values: BTreeMap<LsPath, PathVector>,
}

impl ChainValuationData {
    pub fn new(chain: Vec<usize>) -> Self {
        ChainValuationData {
            chain,
            values: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, path: LsPath, value: PathVector) {
        self.values.insert(path, value);
    }

    /// Checks `ν(σ) = σ` on the chain and positivity of every value.
    pub fn check_invariants(&self) -> Vec<String> {
        let ext = chain_extension(&self.chain);
        let mut problems = Vec::new();
        for (p, v) in &self.values {
            if v.support().iter().any(|e| !self.chain.contains(e)) {
                problems.push(format!("value of {:?} leaves the chain", p.vector()));
            }
            if p.degree() > 0 && cmp_on(v, &PathVector::zero(), &ext) != Ordering::Greater {
                problems.push(format!("value of {:?} is not positive", p.vector()));
            }
            if p.is_extremal() && p.degree() == 1 {
                let e = p.support()[0];
                if self.chain.contains(&e) && *v != *p.vector() {
                    problems.push(format!("chain element #{e} is not fixed"));
                }
            }
        }
        problems
    }
}

/// Chain positions as an order key; only elements of the chain are compared.
fn chain_extension(chain: &[usize]) -> BTreeMap<usize, usize> {
    chain.iter().enumerate().map(|(i, &e)| (e, i)).collect()
}

fn cmp_on(v: &PathVector, w: &PathVector, positions: &BTreeMap<usize, usize>) -> Ordering {
    positions
        .iter()
        .map(|(&e, &i)| (i, v.get(e).cmp(&w.get(e))))
        .filter(|&(_, o)| o != Ordering::Equal)
        .max_by_key(|&(i, _)| i)
        .map_or(Ordering::Equal, |(_, o)| o)
}

/// Outcome of the estimate for one path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EstimateOutcome {
    pub path: LsPath,
    /// `'a'` for on-chain paths, `'b'` otherwise.
    pub case: char,
    pub h: i64,
    pub ok: bool,
    pub residual: PathVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EstimateReport {
    pub passed: bool,
    pub outcomes: Vec<EstimateOutcome>,
}

/// Checks the estimate on each path: value `= π` on the chain, otherwise
/// `value − ν₀,C(π) − σ′_h` truncated to `σ_h, …, σ_N` is `⪰ 0`.
pub fn check_estimate(
    poset: &BondedPoset,
    data: &ChainValuationData,
    paths: &[LsPath],
) -> Result<EstimateReport> {
    let chain = &data.chain;
    let mut outcomes = Vec::with_capacity(paths.len());
    for p in paths {
        let value = data
            .values
            .get(p)
            .ok_or_else(|| Error::MissingValue(p.display(poset)))?;
        let h = h_index(poset, chain, p.vector())?;
        let outcome = if h < 0 {
            EstimateOutcome {
                path: p.clone(),
                case: 'a',
                h,
                ok: value == p.vector(),
                residual: value - p.vector(),
            }
        } else {
            let base = &nu_zero(poset, chain, p.vector())? + &sigma_prime(poset, chain, h);
            let tail: BTreeSet<usize> = chain[h as usize..].iter().copied().collect();
            let residual = (value - &base).restrict(|e| tail.contains(&e));
            let ok = cmp_on(&residual, &PathVector::zero(), &chain_extension(chain)) != Ordering::Less;
            EstimateOutcome {
                path: p.clone(),
                case: 'b',
                h,
                ok,
                residual,
            }
        };
        outcomes.push(outcome);
    }
    Ok(EstimateReport {
        passed: outcomes.iter().all(|o| o.ok),
        outcomes,
    })
}

/// The ≼-minimum of per-chain values; every maximal chain must be present.
pub fn min_over_chains(
    poset: &BondedPoset,
    per_chain: &BTreeMap<Vec<usize>, PathVector>,
    ext: &LinearExtension,
) -> Result<PathVector> {
    let chains = poset.maximal_chains()?;
    for c in &chains {
        if !per_chain.contains_key(c) {
            return Err(Error::MissingChain(poset.format_elements(c, ",")));
        }
    }
    Ok(chains
        .iter()
        .map(|c| &per_chain[c])
        .min_by(|a, b| rlex_compare(a, b, ext))
        .expect("a poset has a maximal chain")
        .clone())
}

/// Level `r` is `{v/r : v ∈ values(r)}`.
pub fn newton_okounkov_levels(
    value_sets: &BTreeMap<u32, Vec<PathVector>>,
) -> Result<BTreeMap<u32, BTreeSet<PathVector>>> {
    value_sets
        .iter()
        .map(|(&r, values)| {
            if r == 0 {
                return Err(Error::Parse("levels start at degree 1".into()));
            }
            let scale = Q::new(1.into(), BigInt::from(r));
            Ok((r, values.iter().map(|v| v.scale(&scale)).collect()))
        })
        .collect()
}

/// Values of the discrete quasi-valuation on `A_r \ {0}`: each basis path
/// is its own value, and every element takes the value of one of its terms.
pub fn discrete_values(poset: &BondedPoset, r: u32, ext: &LinearExtension) -> Result<Vec<PathVector>> {
    crate::paths::enumerate(poset, r)?
        .into_iter()
        .map(|p| Ok(quasi_valuation_discrete(&AlgebraElement::basis(p), ext)?.vector().clone()))
        .collect()
}

/// `x ⪰ y` restricted to the coordinates of `chain`, read in chain order.
pub fn dominates_on_chain(x: &PathVector, y: &PathVector, chain: &[usize]) -> bool {
    cmp_on(x, y, &chain_extension(chain)) != Ordering::Less
}

/// Whether `v` is zero.
pub fn is_zero_vector(v: &PathVector) -> bool {
    v.iter().all(|(_, c)| c.is_zero())
}
