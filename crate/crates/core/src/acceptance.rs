//! The acceptance suite: ten end-to-end checks with pinned time limits.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{simplex_level_points, verify_integral_structure};
use crate::discrete::{nonstandard_pairs, verify_ls_axioms, StraighteningTable};
use crate::error::Result;
use crate::fixtures;
use crate::grassmann::{degenerates_to_discrete, factors_path, GrassmannRing, PlueckerElement};
use crate::orders::{default_extension, rlex_compare, triangle_compare, triangle_compare_by_extensions, Comparison};
use crate::paths::{decompose_degree_one, enumerate, LsPath, PathMonomial};
use crate::poly::Poly;
use crate::poset::{isomorphic, BondedPoset};
use crate::rational::q;
use crate::valuation::{check_estimate, discrete_values, newton_okounkov_levels, ChainValuationData};
use crate::vector::PathVector;
use crate::weyl::{bruhat_poset, weyl_dimension, RootSystem};

/// Seed of the random pairs in the additivity check.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone)]
pub struct AcceptanceConfig {
    /// Degrees capped at 2 where the full suite goes higher.
    pub quick: bool,
    /// Replace the `G(2,4)` straightening table by a wrong one.
    pub corrupt_table: bool,
    pub seed: u64,
    /// Run only these criteria (all when empty).
    pub only: Vec<u32>,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            quick: false,
            corrupt_table: false,
            seed: DEFAULT_SEED,
            only: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct AcceptanceReport {
    pub results: Vec<CriterionResult>,
}

impl AcceptanceReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

type Check = fn(&AcceptanceConfig) -> Result<(bool, String)>;

/// `(id, name, time limit in seconds, check)`.
pub const CRITERIA: [(u32, &str, u64, Check); 10] = [
    (1, "path counts match Weyl dimensions", 10, path_counts),
    (2, "bonds of Bruhat posets", 5, bond_generation),
    (3, "straightening and LS2", 30, straightening),
    (4, "standard monomial basis", 60, standard_basis),
    (5, "chain valuations", 120, chain_valuations),
    (6, "estimate on degree one", 120, estimate),
    (7, "quasi-valuation and degeneration", 60, quasi_valuation),
    (8, "Newton-Okounkov levels and integral structure", 30, levels),
    (9, "partial order oracle", 60, order_oracle),
    (10, "degree-one decomposition", 60, decomposition),
];

pub fn run_criterion(id: u32, config: &AcceptanceConfig) -> Option<CriterionResult> {
    let &(id, name, limit, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = check(config);
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit);
    let (passed, mut detail) = match outcome {
        Ok(x) => x,
        Err(e) => (false, format!("error ({}): {e}", e.kind())),
    };
    let in_time = elapsed <= limit;
    if !in_time {
        detail.push_str(&format!("; over the time limit of {}s", limit.as_secs()));
    }
    Some(CriterionResult {
        id,
        name,
        passed: passed && in_time,
        detail,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: limit.as_millis(),
    })
}

pub fn run_acceptance_suite(config: &AcceptanceConfig) -> AcceptanceReport {
    let results = CRITERIA
        .iter()
        .filter(|c| config.only.is_empty() || config.only.contains(&c.0))
        .filter_map(|c| run_criterion(c.0, config))
        .collect();
    AcceptanceReport { results }
}

fn fail(detail: String) -> Result<(bool, String)> {
    Ok((false, detail))
}

fn path_counts(config: &AcceptanceConfig) -> Result<(bool, String)> {
    let cases: [(&str, &[i64], u32, usize); 7] = [
        ("A1", &[3], 1, 4),
        ("B2", &[1, 0], 1, 5),
        ("A2", &[1, 1], 1, 8),
        ("A3", &[0, 1, 0], 1, 6),
        ("A2", &[1, 1], 2, 27),
        ("A3", &[0, 1, 0], 2, 20),
        ("A3", &[0, 1, 0], 3, 50),
    ];
    let mut checked = 0;
    for (name, lambda, r, expected) in cases {
        if config.quick && r > 2 {
            continue;
        }
        let rs = RootSystem::parse(name)?;
        let poset = bruhat_poset(&rs, lambda, None)?;
        let count = enumerate(&poset, r)?.len();
        let scaled: Vec<i64> = lambda.iter().map(|x| x * r as i64).collect();
        let dim = weyl_dimension(&rs, &scaled)?;
        if count != expected || BigInt::from(count) != dim {
            return fail(format!("{name} {lambda:?} r={r}: {count} paths, dimension {dim}, expected {expected}"));
        }
        checked += 1;
    }
    Ok((true, format!("{checked} counts equal the Weyl dimension")))
}

fn bond_generation(_: &AcceptanceConfig) -> Result<(bool, String)> {
    let b2 = bruhat_poset(&RootSystem::parse("B2")?, &[1, 0], None)?;
    let chains = b2.maximal_chains()?;
    let bonds: Vec<u64> = chains[0]
        .windows(2)
        .map(|w| b2.bond(w[0], w[1]).unwrap_or(0))
        .collect();
    if b2.len() != 4 || chains.len() != 1 || bonds != [1, 2, 1] {
        return fail(format!("B2 ω1 gives {} elements, bonds {bonds:?}", b2.len()));
    }
    let a3 = bruhat_poset(&RootSystem::parse("A3")?, &[0, 1, 0], None)?;
    if !isomorphic(&a3, &fixtures::i24()) || a3.covers().iter().any(|c| c.bond != 1) {
        return fail("A3 ω2 is not I(2,4) with unit bonds".into());
    }
    let generated: [(&str, &[i64]); 8] = [
        ("A1", &[3]),
        ("B2", &[1, 0]),
        ("B2", &[0, 1]),
        ("A2", &[1, 1]),
        ("A3", &[0, 1, 0]),
        ("C3", &[0, 1, 0]),
        ("G2", &[1, 0]),
        ("B3", &[1, 0, 1]),
    ];
    for (name, lambda) in generated {
        let p = bruhat_poset(&RootSystem::parse(name)?, lambda, None)?;
        if !p.verify_gcd_condition()?.ok {
            return fail(format!("{name} {lambda:?} violates the gcd condition"));
        }
    }
    Ok((true, format!("B2 chain bonds (1,2,1), A3 ≅ I(2,4), {} posets pass the gcd check", generated.len())))
}

/// Table entries checked as identities of polynomials.
fn table_holds_in_ring(ring: &GrassmannRing, table: &StraighteningTable) -> Option<String> {
    let p = ring.poset();
    for ((a, b), rhs) in table.entries() {
        let lhs = ring.monomial_poly(&[a.support()[0], b.support()[0]], None);
        let mut sum = Poly::zero(ring.nvars());
        for (c, m) in rhs {
            let f: Vec<usize> = m.factors.iter().map(|x| x.support()[0]).collect();
            sum.add_scaled(&ring.monomial_poly(&f, None), c);
        }
        if lhs != sum {
            return Some(format!(
                "relation for {} does not hold in the ring",
                PathMonomial::new(vec![a.clone(), b.clone()]).display(p)
            ));
        }
    }
    None
}

/// A table for `G(2,4)` that satisfies every ordering axiom but is false.
pub fn corrupted_g24_table(ring: &GrassmannRing) -> Result<StraighteningTable> {
    let p = ring.poset();
    let mut table = ring.table()?;
    let e = |l: &str| -> Result<LsPath> { Ok(LsPath::extremal(p.element(l)?, 1)) };
    let m = PathMonomial::new(vec![e("12")?, e("34")?]);
    table.insert(&e("14")?, &e("23")?, vec![(q(1), m)]);
    Ok(table)
}

fn straightening(config: &AcceptanceConfig) -> Result<(bool, String)> {
    let g24 = GrassmannRing::new(2, 4)?;
    let p = g24.poset();
    let (a, b) = (p.element("14")?, p.element("23")?);
    let expansion = g24.straighten(&[a, b])?;
    let sum = factors_path(&[a, b]);
    if expansion.len() != 2 {
        return fail(format!("14·23 has {} standard terms", expansion.len()));
    }
    for (path, _) in expansion.terms() {
        if triangle_compare(p, sum.vector(), path.vector())? != Comparison::Less {
            return fail(format!("{} is not strictly above 14+23", path.display(p)));
        }
    }
    let mut pair_total = 0;
    for (ring, corrupt) in [(g24, config.corrupt_table), (GrassmannRing::new(2, 5)?, false)] {
        let gens = enumerate(ring.poset(), 1)?;
        let table = if corrupt { corrupted_g24_table(&ring)? } else { ring.table()? };
        let report = verify_ls_axioms(ring.poset(), &table, &gens, Some(&ring.epsilon_weights()), true)?;
        if !report.passed {
            let v = &report.violations[0];
            return fail(format!("G({},{}): {} fails: {}", ring.d(), ring.n(), v.axiom, v.detail));
        }
        if let Some(msg) = table_holds_in_ring(&ring, &table) {
            return fail(format!("G({},{}): {msg}", ring.d(), ring.n()));
        }
        pair_total += nonstandard_pairs(ring.poset(), &gens).len();
    }
    Ok((true, format!("14·23 has 2 terms above 14+23; {pair_total} non-standard pairs straighten with LS2")))
}

fn standard_basis(_: &AcceptanceConfig) -> Result<(bool, String)> {
    let mut detail = Vec::new();
    for n in [4, 5] {
        let ring = GrassmannRing::new(2, n)?;
        let (count, rank) = ring.standard_rank(2);
        let paths = enumerate(ring.poset(), 2)?.len();
        if count != rank || count != paths || (n == 4 && count != 20) {
            return fail(format!("G(2,{n}): {count} standard monomials, rank {rank}, {paths} paths"));
        }
        detail.push(format!("G(2,{n}) {count}/{rank}"));
    }
    Ok((true, format!("count/rank at degree 2: {}", detail.join(", "))))
}

fn random_element(ring: &GrassmannRing, degree: u32, rng: &mut ChaCha8Rng) -> PlueckerElement {
    let basis = ring.standard_monomials(degree, None);
    let terms = rng.gen_range(1..=3);
    let mut out = PlueckerElement::default();
    for _ in 0..terms {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        out.terms.push((q(c), m));
    }
    out
}

fn is_zero_element(ring: &GrassmannRing, x: &PlueckerElement) -> bool {
    ring.element_poly(x, None).is_zero()
}

fn chain_valuations(config: &AcceptanceConfig) -> Result<(bool, String)> {
    let ring = GrassmannRing::new(2, 4)?;
    let p = ring.poset();
    let chains = p.maximal_chains()?;
    for c in &chains {
        for &s in c {
            let v = ring.chain_valuation(&PlueckerElement::monomial(vec![s]), c)?;
            if v != PathVector::unit(s, q(1)) {
                return fail(format!("ν_C({}) = {}", p.label(s), v.display(p)));
            }
        }
    }
    let mut positive = 0;
    for r in 1..=2 {
        for m in ring.standard_monomials(r, None) {
            for c in &chains {
                let v = ring.chain_valuation(&PlueckerElement::monomial(m.clone()), c)?;
                let ext = default_extension(p);
                if rlex_compare(&v, &PathVector::zero(), &ext) != std::cmp::Ordering::Greater {
                    return fail(format!("value of {} is not positive", p.format_elements(&m, "·")));
                }
                positive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut pairs = 0;
    while pairs < 50 {
        let dx = rng.gen_range(1..=2);
        let dy = if config.quick || dx == 2 { 1 } else { rng.gen_range(1..=2) };
        let x = random_element(&ring, dx, &mut rng);
        let y = random_element(&ring, dy, &mut rng);
        if is_zero_element(&ring, &x) || is_zero_element(&ring, &y) {
            continue;
        }
        let c = &chains[rng.gen_range(0..chains.len())];
        let vx = ring.chain_valuation(&x, c)?;
        let vy = ring.chain_valuation(&y, c)?;
        let vxy = ring.chain_valuation(&x.mul(&y), c)?;
        if vxy != &vx + &vy {
            return fail(format!("ν_C(xy) = {} but ν_C(x)+ν_C(y) = {}", vxy.display(p), (&vx + &vy).display(p)));
        }
        pairs += 1;
    }
    Ok((true, format!("chain elements fixed, {positive} positive values, {pairs} additive pairs")))
}

fn estimate(_: &AcceptanceConfig) -> Result<(bool, String)> {
    let mut checked = 0;
    for n in [4, 5] {
        let ring = GrassmannRing::new(2, n)?;
        let p = ring.poset();
        let paths = enumerate(p, 1)?;
        for c in p.maximal_chains()? {
            let mut data = ChainValuationData::new(c.clone());
            for path in &paths {
                let x = PlueckerElement::monomial(path.support());
                data.insert(path.clone(), ring.chain_valuation(&x, &c)?);
            }
            if let Some(problem) = data.check_invariants().first() {
                return fail(format!("G(2,{n}), chain {}: {problem}", p.format_elements(&c, ",")));
            }
            let report = check_estimate(p, &data, &paths)?;
            if let Some(o) = report.outcomes.iter().find(|o| !o.ok) {
                return fail(format!(
                    "G(2,{n}), chain {}: case ({}) fails for {}",
                    p.format_elements(&c, ","),
                    o.case,
                    o.path.display(p)
                ));
            }
            checked += report.outcomes.len();
        }
    }
    Ok((true, format!("{checked} (path, chain) estimates hold")))
}

fn quasi_valuation(_: &AcceptanceConfig) -> Result<(bool, String)> {
    let g24 = GrassmannRing::new(2, 4)?;
    let p = g24.poset();
    let ext = default_extension(p);
    for s in p.elements() {
        let v = g24.quasi_valuation(&PlueckerElement::monomial(vec![s]))?;
        if v != PathVector::unit(s, q(1)) {
            return fail(format!("ν(p_{}) = {}", p.label(s), v.display(p)));
        }
    }
    let (a, b) = (p.element("14")?, p.element("23")?);
    let v = g24.quasi_valuation(&PlueckerElement::monomial(vec![a, b]))?;
    let sum = factors_path(&[a, b]);
    if rlex_compare(&v, sum.vector(), &ext) != std::cmp::Ordering::Greater {
        return fail(format!("ν(p14·p23) = {} is not above 14+23", v.display(p)));
    }
    let mut pairs = 0;
    for n in [4, 5] {
        let ring = GrassmannRing::new(2, n)?;
        let q = ring.poset();
        let ext = default_extension(q);
        for a in q.elements() {
            for b in a..q.len() {
                if !degenerates_to_discrete(&ring, a, b)? {
                    return fail(format!("G(2,{n}): {}·{} does not degenerate", q.label(a), q.label(b)));
                }
                if n == 4 {
                    let expansion = ring.straighten(&[a, b])?;
                    let lead = crate::valuation::quasi_valuation_discrete(&expansion, &ext)?;
                    let v = ring.quasi_valuation(&PlueckerElement::monomial(vec![a, b]))?;
                    if v != *lead.vector() {
                        return fail(format!("ν({}·{}) differs from the least expansion term", q.label(a), q.label(b)));
                    }
                }
                pairs += 1;
            }
        }
    }
    Ok((true, format!("ν(p_τ) = τ, ν(p14·p23) ≻ 14+23, {pairs} degree-two products degenerate")))
}

fn levels(config: &AcceptanceConfig) -> Result<(bool, String)> {
    let r_max = if config.quick { 2 } else { 4 };
    for (name, p) in [("I(2,4)", fixtures::i24()), ("B2 chain", fixtures::chain_121())] {
        let ext = default_extension(&p);
        let values: BTreeMap<u32, Vec<PathVector>> = (1..=r_max)
            .map(|r| Ok((r, discrete_values(&p, r, &ext)?)))
            .collect::<Result<_>>()?;
        let levels = newton_okounkov_levels(&values)?;
        for r in 1..=r_max {
            if levels[&r] != simplex_level_points(&p, r)? {
                return fail(format!("{name}: level {r} differs from Δ_{r}"));
            }
        }
        for c in p.maximal_chains()? {
            for r in 1..=r_max {
                if !verify_integral_structure(&p, &c, r)? {
                    return fail(format!("{name}: integral structure fails on {} at r={r}", p.format_elements(&c, ",")));
                }
            }
        }
    }
    Ok((true, format!("levels r ≤ {r_max} equal Δ_r, integral structure holds")))
}

/// Fixture posets for the exhaustive checks, with Bruhat posets added.
fn oracle_posets() -> Result<Vec<(String, BondedPoset)>> {
    let mut out: Vec<(String, BondedPoset)> = fixtures::all().into_iter().map(|(n, p)| (n.to_string(), p)).collect();
    for (name, lambda) in [("A2", vec![1, 1]), ("G2", vec![1, 0]), ("B2", vec![0, 1])] {
        out.push((format!("{name}{lambda:?}"), bruhat_poset(&RootSystem::parse(name)?, &lambda, None)?));
    }
    Ok(out)
}

fn order_oracle(_: &AcceptanceConfig) -> Result<(bool, String)> {
    let mut pairs = 0u64;
    for (name, p) in oracle_posets()? {
        if p.len() > 7 {
            continue;
        }
        let mut vectors: Vec<PathVector> = Vec::new();
        for r in 1..=2 {
            vectors.extend(enumerate(&p, r)?.into_iter().map(|x| x.vector().clone()));
        }
        for v in &vectors {
            for w in &vectors {
                let fast = triangle_compare(&p, v, w)?;
                let slow = triangle_compare_by_extensions(&p, v, w)?;
                if fast != slow {
                    return fail(format!("{name}: {} vs {}: {fast:?} but {slow:?}", v.display(&p), w.display(&p)));
                }
                pairs += 1;
            }
        }
    }
    Ok((true, format!("{pairs} pairs agree")))
}

/// Every standard multiset of `r` degree-one paths, keyed by its sum.
fn standard_multisets(p: &BondedPoset, gens: &[LsPath], r: usize) -> BTreeMap<PathVector, Vec<Vec<LsPath>>> {
    fn go(
        p: &BondedPoset,
        gens: &[LsPath],
        start: usize,
        r: usize,
        cur: &mut Vec<LsPath>,
        out: &mut BTreeMap<PathVector, Vec<Vec<LsPath>>>,
    ) {
        if cur.len() == r {
            let mut sorted = cur.clone();
            sorted.sort_by_key(|x| (x.min_support(), x.max_support()));
            let m = PathMonomial::new(sorted.clone());
            if m.is_standard(p) {
                out.entry(m.sum()).or_default().push(sorted);
            }
            return;
        }
        for i in start..gens.len() {
            cur.push(gens[i].clone());
            go(p, gens, i, r, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeMap::new();
    go(p, gens, 0, r, &mut Vec::new(), &mut out);
    out
}

fn decomposition(config: &AcceptanceConfig) -> Result<(bool, String)> {
    let r_max = if config.quick { 2 } else { 4 };
    let mut checked = 0;
    for (name, p) in oracle_posets()? {
        let gens = enumerate(&p, 1)?;
        for r in 1..=r_max {
            let oracle = standard_multisets(&p, &gens, r as usize);
            let paths = enumerate(&p, r)?;
            if oracle.len() != paths.len() {
                return fail(format!("{name} r={r}: {} standard monomials, {} paths", oracle.len(), paths.len()));
            }
            for path in &paths {
                let factors = decompose_degree_one(&p, path)?;
                let m = PathMonomial::new(factors.clone());
                let valid = factors.len() == r as usize
                    && factors.iter().all(|f| f.degree() == 1 && LsPath::new(&p, f.vector().clone(), 1).is_ok())
                    && m.is_standard(&p)
                    && m.sum() == *path.vector();
                let expected = oracle.get(path.vector());
                if !valid || expected.map(Vec::as_slice) != Some(std::slice::from_ref(&factors)) {
                    return fail(format!("{name}: decomposition of {} disagrees with the oracle", path.display(&p)));
                }
                checked += 1;
            }
        }
    }
    Ok((true, format!("{checked} paths of degree ≤ {r_max} decompose as the oracle says")))
}
