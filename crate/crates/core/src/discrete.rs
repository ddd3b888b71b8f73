//! The discrete LS algebra over a poset with bonds, weight systems,
//! quotients by `I_τ`, and a checker for the LS-algebra axioms on
//! straightening tables.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orders::{triangle_compare, Comparison};
use crate::paths::{canonical_form, enumerate, LsPath, PathJson, PathMonomial};
use crate::poset::BondedPoset;
use crate::rational::{format_q, is_integer, parse_q, q, Q};
use crate::vector::PathVector;

/// A finite rational combination of LS paths, the standard monomial basis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<LsPath, Q>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn basis(path: LsPath) -> Self {
        Self::term(path, Q::one())
    }

    pub fn term(path: LsPath, coeff: Q) -> Self {
        let mut x = AlgebraElement::zero();
        x.add_term(path, coeff);
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (LsPath, Q)>>(terms: I) -> Self {
        let mut x = AlgebraElement::zero();
        for (p, c) in terms {
            x.add_term(p, c);
        }
        x
    }

    pub fn add_term(&mut self, path: LsPath, coeff: Q) {
        let c = self.terms.get(&path).cloned().unwrap_or_else(Q::zero) + coeff;
        if c.is_zero() {
            self.terms.remove(&path);
        } else {
            self.terms.insert(path, c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LsPath, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, path: &LsPath) -> Q {
        self.terms.get(path).cloned().unwrap_or_else(Q::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees with a nonzero homogeneous component.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(LsPath::degree).collect()
    }

    /// The single degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degrees();
        (d.len() == 1).then(|| *d.iter().next().unwrap())
    }

    pub fn component(&self, degree: u32) -> AlgebraElement {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.degree() == degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms.iter().map(|(p, x)| (p.clone(), x * c)))
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn display(&self, poset: &BondedPoset) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| format!("{c}·[{}]", p.display(poset)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self, poset: &BondedPoset) -> ElementJson {
        ElementJson {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson {
                    coeff: format_q(c),
                    path: p.to_json(poset),
                })
                .collect(),
        }
    }

    pub fn from_json(poset: &BondedPoset, json: &ElementJson) -> Result<Self> {
        let mut x = AlgebraElement::zero();
        for t in &json.terms {
            x.add_term(LsPath::from_json(poset, &t.path)?, parse_q(&t.coeff)?);
        }
        Ok(x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub path: PathJson,
}

/// `{"terms": [{"coeff": "p/q", "path": {...}}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

fn comparable_supports(poset: &BondedPoset, paths: &[&LsPath]) -> bool {
    let mut union: Vec<usize> = paths.iter().flat_map(|p| p.support()).collect();
    union.sort_unstable();
    union.dedup();
    poset.is_chain(&union)
}

/// Product of two basis paths: their sum when the supports are comparable.
pub fn multiply_paths(poset: &BondedPoset, a: &LsPath, b: &LsPath) -> Option<LsPath> {
    comparable_supports(poset, &[a, b]).then(|| {
        LsPath::new(poset, a.sum(b), a.degree() + b.degree())
            .expect("sum of paths with comparable supports is a path")
    })
}

/// Bilinear extension of [`multiply_paths`].
pub fn multiply_discrete(poset: &BondedPoset, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            if let Some(p) = multiply_paths(poset, a, b) {
                out.add_term(p, ca * cb);
            }
        }
    }
    out
}

/// Weights of the extremal paths, in `ℤ^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    dim: usize,
    assignment: Vec<Vec<i64>>,
}

impl WeightSystem {
    pub fn new(poset: &BondedPoset, assignment: Vec<Vec<i64>>) -> Result<Self> {
        if assignment.len() != poset.len() {
            return Err(Error::Parse(format!(
                "weight assignment has {} entries for {} elements",
                assignment.len(),
                poset.len()
            )));
        }
        let dim = assignment.first().map_or(0, Vec::len);
        if assignment.iter().any(|w| w.len() != dim) {
            return Err(Error::Parse("weights of unequal rank".into()));
        }
        Ok(WeightSystem { dim, assignment })
    }

    /// Every element weighted zero.
    pub fn constant(poset: &BondedPoset, dim: usize) -> Self {
        WeightSystem {
            dim,
            assignment: vec![vec![0; dim]; poset.len()],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn of_element(&self, e: usize) -> &[i64] {
        &self.assignment[e]
    }
}

/// A rational weight and whether it lies in the integer lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub vector: Vec<Q>,
    pub integral: bool,
}

/// `λ(π) = Σ_σ π(σ)·λ(σ)`.
pub fn weight_of(ws: &WeightSystem, values: &PathVector) -> Weight {
    let mut vector = vec![Q::zero(); ws.dim];
    for (e, c) in values.iter() {
        for (slot, &w) in vector.iter_mut().zip(&ws.assignment[e]) {
            *slot += c * q(w);
        }
    }
    let integral = vector.iter().all(is_integer);
    Weight { vector, integral }
}

/// Degree-`r` paths sharing the weight of `r·σ` with `σ` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCollision {
    pub element: usize,
    pub degree: u32,
    pub other: LsPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EffectivenessReport {
    pub effective: bool,
    pub collisions: Vec<WeightCollision>,
}

/// Checks that `σ^r` is the only degree-`r` path of weight `r·λ(σ)`, `r ≤ r_max`.
pub fn check_effective(poset: &BondedPoset, ws: &WeightSystem, r_max: u32) -> Result<EffectivenessReport> {
    let mut collisions = Vec::new();
    for r in 1..=r_max {
        let paths = enumerate(poset, r)?;
        let weights: Vec<Vec<Q>> = paths.iter().map(|p| weight_of(ws, p.vector()).vector).collect();
        for e in poset.elements() {
            let extremal = LsPath::extremal(e, r);
            let target = weight_of(ws, extremal.vector()).vector;
            for (p, w) in paths.iter().zip(&weights) {
                if *w == target && *p != extremal {
                    collisions.push(WeightCollision {
                        element: e,
                        degree: r,
                        other: p.clone(),
                    });
                }
            }
        }
    }
    Ok(EffectivenessReport {
        effective: collisions.is_empty(),
        collisions,
    })
}

/// Degree-`r` basis paths spanning `I_τ ∩ A_r`: those with `max supp ≰ τ`.
pub fn ideal_basis_below(poset: &BondedPoset, tau: usize, r: u32) -> Result<Vec<LsPath>> {
    Ok(enumerate(poset, r)?
        .into_iter()
        .filter(|p| p.max_support().is_some_and(|m| !poset.leq(m, tau)))
        .collect())
}

/// Image of `x` in `A_τ`, re-indexed over `quotient` (the poset `S_{≤τ}`).
pub fn project_to_quotient(
    poset: &BondedPoset,
    tau: usize,
    quotient: &BondedPoset,
    x: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (p, c) in x.terms() {
        if p.max_support().is_some_and(|m| !poset.leq(m, tau)) {
            continue;
        }
        let mut v = PathVector::zero();
        for (e, val) in p.vector().iter() {
            v.set(quotient.element(poset.label(e))?, val.clone());
        }
        out.add_term(LsPath::new(quotient, v, p.degree())?, c.clone());
    }
    Ok(out)
}

/// Straightening relations for non-standard degree-two monomials.
///
/// Keys are unordered pairs stored with their factors sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StraighteningTable {
    entries: BTreeMap<(LsPath, LsPath), Vec<(Q, PathMonomial)>>,
}

fn pair_key(a: &LsPath, b: &LsPath) -> (LsPath, LsPath) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl StraighteningTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, a: &LsPath, b: &LsPath, rhs: Vec<(Q, PathMonomial)>) {
        self.entries.insert(pair_key(a, b), rhs);
    }

    pub fn get(&self, a: &LsPath, b: &LsPath) -> Option<&[(Q, PathMonomial)]> {
        self.entries.get(&pair_key(a, b)).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(LsPath, LsPath), &Vec<(Q, PathMonomial)>)> {
        self.entries.iter()
    }

    pub fn to_json(&self, poset: &BondedPoset) -> Vec<TableEntryJson> {
        self.entries
            .iter()
            .map(|((a, b), rhs)| TableEntryJson {
                lhs: vec![a.to_json(poset), b.to_json(poset)],
                rhs: rhs
                    .iter()
                    .map(|(c, m)| RhsJson {
                        coeff: format_q(c),
                        monomial: m.factors.iter().map(|f| f.to_json(poset)).collect(),
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn from_json(poset: &BondedPoset, json: &[TableEntryJson]) -> Result<Self> {
        let mut table = StraighteningTable::new();
        for entry in json {
            let [a, b] = entry.lhs.as_slice() else {
                return Err(Error::Parse("lhs must have two paths".into()));
            };
            let rhs = entry
                .rhs
                .iter()
                .map(|t| {
                    let factors = t
                        .monomial
                        .iter()
                        .map(|p| LsPath::from_json(poset, p))
                        .collect::<Result<Vec<_>>>()?;
                    Ok((parse_q(&t.coeff)?, PathMonomial::new(factors)))
                })
                .collect::<Result<Vec<_>>>()?;
            table.insert(&LsPath::from_json(poset, a)?, &LsPath::from_json(poset, b)?, rhs);
        }
        Ok(table)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhsJson {
    pub coeff: String,
    pub monomial: Vec<PathJson>,
}

/// `{"lhs": [path, path], "rhs": [{"coeff": "p/q", "monomial": [path, path]}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryJson {
    pub lhs: Vec<PathJson>,
    pub rhs: Vec<RhsJson>,
}

/// Whether `a·b` is standard in some order of its factors.
pub fn is_standard_pair(poset: &BondedPoset, a: &LsPath, b: &LsPath) -> bool {
    PathMonomial::new(vec![a.clone(), b.clone()]).is_standard(poset)
        || PathMonomial::new(vec![b.clone(), a.clone()]).is_standard(poset)
}

/// Orders a standard pair increasingly along supports.
pub fn standard_order(poset: &BondedPoset, a: &LsPath, b: &LsPath) -> PathMonomial {
    let ab = PathMonomial::new(vec![a.clone(), b.clone()]);
    if ab.is_standard(poset) {
        ab
    } else {
        PathMonomial::new(vec![b.clone(), a.clone()])
    }
}

/// Non-standard unordered pairs of the given degree-one paths.
pub fn nonstandard_pairs(poset: &BondedPoset, generators: &[LsPath]) -> Vec<(LsPath, LsPath)> {
    let mut out = Vec::new();
    for (i, a) in generators.iter().enumerate() {
        for b in &generators[i..] {
            if !is_standard_pair(poset, a, b) {
                out.push(pair_key(a, b));
            }
        }
    }
    out
}

/// The discrete relations: the canonical form, or zero for non-comparable supports.
pub fn discrete_table(poset: &BondedPoset, generators: &[LsPath]) -> Result<StraighteningTable> {
    let mut table = StraighteningTable::new();
    for (a, b) in nonstandard_pairs(poset, generators) {
        let rhs = if comparable_supports(poset, &[&a, &b]) {
            let cf = canonical_form(poset, &PathMonomial::new(vec![a.clone(), b.clone()]))?;
            vec![(Q::one(), cf)]
        } else {
            Vec::new()
        };
        table.insert(&a, &b, rhs);
    }
    Ok(table)
}

/// One failed axiom check on one table entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub lhs: (LsPath, LsPath),
    pub axiom: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub entries_checked: usize,
    pub violations: Vec<AxiomViolation>,
    /// Canonical-form coefficients that are nonzero but not 1 (non-strict mode).
    pub notes: Vec<String>,
}

/// Checks (LS2), (LS3), weight homogeneity and the strict inequalities
/// `π₁, π₂ ◁ π₂′` on every entry of `table`.
///
/// The table must cover every non-standard pair of `generators`. With
/// `strict` off, a canonical-form coefficient that is nonzero but not 1 is
/// reported as a note instead of a violation.
pub fn verify_ls_axioms(
    poset: &BondedPoset,
    table: &StraighteningTable,
    generators: &[LsPath],
    weights: Option<&WeightSystem>,
    strict: bool,
) -> Result<AxiomReport> {
    for (a, b) in nonstandard_pairs(poset, generators) {
        if table.get(&a, &b).is_none() {
            return Err(Error::MissingEntry(
                PathMonomial::new(vec![a, b]).display(poset),
            ));
        }
    }
    let mut violations = Vec::new();
    let mut notes = Vec::new();
    for ((a, b), rhs) in table.entries() {
        let lhs = (a.clone(), b.clone());
        let mut fail = |axiom: &'static str, detail: String| {
            violations.push(AxiomViolation {
                lhs: lhs.clone(),
                axiom,
                detail,
            })
        };
        if is_standard_pair(poset, a, b) {
            fail("nonstandard-lhs", "left side is already standard".into());
            continue;
        }
        let lhs_sum = a.sum(b);
        for (_, m) in rhs {
            if m.factors.len() != 2 || !m.is_standard(poset) {
                return Err(Error::NonStandardTarget(m.display(poset)));
            }
        }
        for (c, m) in rhs {
            if c.is_zero() {
                continue;
            }
            let target = m.sum();
            match triangle_compare(poset, &lhs_sum, &target)? {
                Comparison::Less | Comparison::Equal => {}
                other => fail(
                    "LS2",
                    format!("{} is {} the sum of the factors", m.display(poset), other.as_str()),
                ),
            }
            let upper = m.factors[1].vector();
            for f in [a, b] {
                if triangle_compare(poset, f.vector(), upper)? != Comparison::Less {
                    fail(
                        "strict-inequality",
                        format!("{} is not strictly below {}", f.display(poset), m.factors[1].display(poset)),
                    );
                }
            }
            if let Some(ws) = weights {
                if weight_of(ws, &lhs_sum).vector != weight_of(ws, &target).vector {
                    fail("weight-homogeneity", format!("{} changes weight", m.display(poset)));
                }
            }
        }
        if comparable_supports(poset, &[a, b]) {
            let cf = canonical_form(poset, &PathMonomial::new(vec![a.clone(), b.clone()]))?;
            let coeff = rhs
                .iter()
                .filter(|(_, m)| *m == cf)
                .fold(Q::zero(), |acc, (c, _)| acc + c);
            if coeff.is_zero() {
                fail("LS3", format!("canonical form {} is missing", cf.display(poset)));
            } else if !coeff.is_one() {
                let msg = format!("canonical form {} has coefficient {coeff}", cf.display(poset));
                if strict {
                    fail("LS3", msg);
                } else {
                    notes.push(msg);
                }
            }
        }
    }
    Ok(AxiomReport {
        passed: violations.is_empty(),
        entries_checked: table.len(),
        violations,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::frac;

    fn ext(p: &BondedPoset, l: &str) -> LsPath {
        LsPath::extremal(p.element(l).unwrap(), 1)
    }

    #[test]
    fn discrete_products() {
        let g = fixtures::i24();
        let x = AlgebraElement::basis(ext(&g, "14"));
        let y = AlgebraElement::basis(ext(&g, "23"));
        assert!(multiply_discrete(&g, &x, &y).is_zero());

        let c = BondedPoset::new(&["e", "x", "y"], &[("e", "x", 1), ("x", "y", 2)]).unwrap();
        let mid = AlgebraElement::basis(LsPath::parse(&c, "x:1/2,y:1/2").unwrap());
        let sq = multiply_discrete(&c, &mid, &mid);
        assert_eq!(sq, AlgebraElement::basis(LsPath::parse(&c, "x,y").unwrap()));

        let s = AlgebraElement::basis(ext(&g, "13"));
        let s2 = multiply_discrete(&g, &s, &s);
        assert_eq!(s2, AlgebraElement::basis(LsPath::extremal(g.element("13").unwrap(), 2)));
    }

    #[test]
    fn weights() {
        let g = fixtures::i24();
        let ws = crate::grassmann::GrassmannRing::new(2, 4).unwrap().epsilon_weights();
        let w = weight_of(&ws, ext(&g, "13").vector());
        assert_eq!(w.vector, vec![q(1), q(0), q(1), q(0)]);
        assert!(w.integral);

        let a1 = fixtures::a1_bond3();
        let ws = WeightSystem::new(&a1, vec![vec![3], vec![-3]]).unwrap();
        let p = LsPath::parse(&a1, "e:2/3,s:1/3").unwrap();
        assert_eq!(weight_of(&ws, p.vector()).vector, vec![q(1)]);
        let half = PathVector::from_pairs([(0, frac(1, 2))]);
        assert!(!weight_of(&ws, &half).integral);
        assert!(check_effective(&a1, &ws, 3).unwrap().effective);
        assert!(!check_effective(&a1, &WeightSystem::constant(&a1, 1), 1).unwrap().effective);
    }

    #[test]
    fn ideals() {
        let g = fixtures::i24();
        let i = ideal_basis_below(&g, g.element("24").unwrap(), 1).unwrap();
        assert_eq!(i, vec![ext(&g, "34")]);
        assert!(ideal_basis_below(&g, g.top(), 2).unwrap().is_empty());
        let below_bottom = ideal_basis_below(&g, g.bottom(), 1).unwrap();
        assert_eq!(below_bottom.len(), 5);
        assert!(!below_bottom.contains(&ext(&g, "12")));
    }

    #[test]
    fn discrete_tables_pass() {
        for (name, p) in fixtures::all() {
            let gens = enumerate(&p, 1).unwrap();
            let table = discrete_table(&p, &gens).unwrap();
            let report = verify_ls_axioms(&p, &table, &gens, None, true).unwrap();
            assert!(report.passed, "{name}: {:?}", report.violations);
        }
    }

    #[test]
    fn missing_entry_is_an_error() {
        let g = fixtures::i24();
        let gens = enumerate(&g, 1).unwrap();
        assert!(matches!(
            verify_ls_axioms(&g, &StraighteningTable::new(), &gens, None, true),
            Err(Error::MissingEntry(_))
        ));
    }

    #[test]
    fn wrong_but_ordered_table_passes_axioms() {
        // 14·23 → 12·34 alone satisfies every axiom; only ring arithmetic rejects it.
        let g = fixtures::i24();
        let gens = enumerate(&g, 1).unwrap();
        let mut table = StraighteningTable::new();
        let m = PathMonomial::new(vec![ext(&g, "12"), ext(&g, "34")]);
        table.insert(&ext(&g, "14"), &ext(&g, "23"), vec![(q(1), m)]);
        let report = verify_ls_axioms(&g, &table, &gens, None, true).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn ls2_violation_detected() {
        let g = fixtures::i24();
        let gens = enumerate(&g, 1).unwrap();
        let mut table = StraighteningTable::new();
        let m = PathMonomial::new(vec![ext(&g, "12"), ext(&g, "13")]);
        table.insert(&ext(&g, "14"), &ext(&g, "23"), vec![(q(1), m)]);
        let report = verify_ls_axioms(&g, &table, &gens, None, true).unwrap();
        assert!(!report.passed);
        assert!(report.violations.iter().any(|v| v.axiom == "LS2"));
    }

    #[test]
    fn canonical_coefficient_strictness() {
        let c = BondedPoset::new(&["e", "x", "y"], &[("e", "x", 1), ("x", "y", 2)]).unwrap();
        let gens = enumerate(&c, 1).unwrap();
        let mut table = discrete_table(&c, &gens).unwrap();
        let mid = LsPath::parse(&c, "x:1/2,y:1/2").unwrap();
        let cf = PathMonomial::new(vec![LsPath::extremal(1, 1), LsPath::extremal(2, 1)]);
        table.insert(&mid, &mid, vec![(q(2), cf)]);
        let strict = verify_ls_axioms(&c, &table, &gens, None, true).unwrap();
        assert!(!strict.passed);
        let lax = verify_ls_axioms(&c, &table, &gens, None, false).unwrap();
        assert!(lax.passed);
        assert_eq!(lax.notes.len(), 1);
    }

    #[test]
    fn table_json_round_trip() {
        let c = fixtures::chain_121();
        let gens = enumerate(&c, 1).unwrap();
        let table = discrete_table(&c, &gens).unwrap();
        let json = serde_json::to_string(&table.to_json(&c)).unwrap();
        let back: Vec<TableEntryJson> = serde_json::from_str(&json).unwrap();
        assert_eq!(StraighteningTable::from_json(&c, &back).unwrap(), table);
    }
}
