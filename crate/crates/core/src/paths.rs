//! LS paths: validation, enumeration, decomposition into degree-one paths
//! and canonical forms of monomials.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::IntegerLattice;
use crate::poset::BondedPoset;
use crate::rational::{is_integer, parse_q, q, Q};
use crate::vector::PathVector;

/// A validated LS path of a fixed degree.
///
/// Ordered by `(degree, support, values)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LsPath {
    degree: u32,
    vector: PathVector,
}

impl LsPath {
    pub fn new(poset: &BondedPoset, vector: PathVector, degree: u32) -> Result<Self> {
        match ls_violation(poset, &vector, degree) {
            None => Ok(LsPath { degree, vector }),
            Some(why) => Err(Error::NotAnLSPath(format!("{} ({why})", vector.display(poset)))),
        }
    }

    /// The extremal path `r·σ`.
    pub fn extremal(e: usize, r: u32) -> Self {
        LsPath {
            degree: r,
            vector: PathVector::unit(e, q(r as i64)),
        }
    }

    pub fn zero() -> Self {
        LsPath {
            degree: 0,
            vector: PathVector::zero(),
        }
    }

    /// For values already known to satisfy the path conditions.
    pub(crate) fn new_unchecked(vector: PathVector, degree: u32) -> Self {
        LsPath { degree, vector }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn vector(&self) -> &PathVector {
        &self.vector
    }

    pub fn value(&self, e: usize) -> Q {
        self.vector.get(e)
    }

    /// The support, increasing along the chain.
    pub fn support(&self) -> Vec<usize> {
        self.vector.support()
    }

    pub fn min_support(&self) -> Option<usize> {
        self.vector.support().first().copied()
    }

    pub fn max_support(&self) -> Option<usize> {
        self.vector.support().last().copied()
    }

    pub fn is_extremal(&self) -> bool {
        self.vector.len() == 1
    }

    /// Sum of two paths; an LS path whenever the supports are comparable.
    pub fn sum(&self, other: &LsPath) -> PathVector {
        &self.vector + &other.vector
    }

    pub fn display(&self, poset: &BondedPoset) -> String {
        self.vector.display(poset)
    }

    pub fn to_json(&self, poset: &BondedPoset) -> PathJson {
        PathJson {
            degree: self.degree,
            values: self.vector.to_json(poset).values,
        }
    }

    pub fn from_json(poset: &BondedPoset, json: &PathJson) -> Result<Self> {
        let mut v = PathVector::zero();
        for (label, value) in &json.values {
            v.add_to(poset.element(label)?, &parse_q(value)?);
        }
        LsPath::new(poset, v, json.degree)
    }

    /// Parses `"x:1/2,y:1/2"`; the degree is the total mass.
    pub fn parse(poset: &BondedPoset, text: &str) -> Result<Self> {
        let v = PathVector::parse(poset, text)?;
        let total = v.total();
        let degree = total
            .to_integer()
            .to_u32()
            .filter(|_| is_integer(&total))
            .ok_or_else(|| Error::NotAnLSPath(format!("non-integral mass {total}")))?;
        LsPath::new(poset, v, degree)
    }
}

/// `{"degree": r, "values": {"label": "p/q"}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson {
    pub degree: u32,
    pub values: BTreeMap<String, String>,
}

/// Bond between two comparable elements (the gcd along a chain between them).
fn chain_bond(poset: &BondedPoset, a: usize, b: usize) -> u64 {
    poset
        .extended_bond(a, b)
        .expect("consecutive chain elements are comparable")
}

fn ls_violation(poset: &BondedPoset, values: &PathVector, degree: u32) -> Option<&'static str> {
    if values.support().iter().any(|&e| e >= poset.len()) {
        return Some("unknown element");
    }
    if !values.is_nonnegative() {
        return Some("negative value");
    }
    let supp = values.support();
    if !poset.is_chain(&supp) {
        return Some("support is not a chain");
    }
    if values.total() != q(degree as i64) {
        return Some("values do not sum to the degree");
    }
    let mut partial = Q::zero();
    for w in supp.windows(2) {
        partial += values.get(w[0]);
        let b = chain_bond(poset, w[0], w[1]);
        if !is_integer(&(&partial * q(b as i64))) {
            return Some("bond integrality fails");
        }
    }
    None
}

/// Nonnegativity, totally ordered support, and the bond integrality of
/// partial sums.
pub fn is_ls_path(poset: &BondedPoset, values: &PathVector, degree: u32) -> bool {
    ls_violation(poset, values, degree).is_none()
}

/// Bonds between consecutive elements of a chain.
fn chain_bonds(poset: &BondedPoset, chain: &[usize]) -> Vec<u64> {
    chain.windows(2).map(|w| chain_bond(poset, w[0], w[1])).collect()
}

fn sorted_chain(poset: &BondedPoset, chain: &[usize]) -> Result<Vec<usize>> {
    let mut c = chain.to_vec();
    c.sort_unstable();
    c.dedup();
    if c.iter().any(|&e| e >= poset.len()) {
        return Err(Error::UnknownElement(format!("{c:?}")));
    }
    if !poset.is_chain(&c) {
        return Err(Error::NotAChain);
    }
    Ok(c)
}

/// `LS_r(C)`: paths of degree `r` supported on the chain `C`.
///
/// Walks the integer points of the dilated embedded simplex: with bonds
/// `b_j` between consecutive chain elements and partial masses `s_j`, the
/// integers `t_j = b_j·s_j` satisfy `0 ≤ t_1/b_1 ≤ … ≤ t_k/b_k ≤ r`.
pub fn enumerate_on_chain(poset: &BondedPoset, chain: &[usize], r: u32) -> Result<Vec<LsPath>> {
    let chain = sorted_chain(poset, chain)?;
    if chain.is_empty() {
        return Ok(if r == 0 { vec![LsPath::zero()] } else { Vec::new() });
    }
    let bonds = chain_bonds(poset, &chain);
    let bound = poset.limits().max_paths;
    let mut out = Vec::new();
    let mut partial: Vec<Q> = Vec::with_capacity(bonds.len());
    walk_partials(&chain, &bonds, r, &mut partial, &mut out, bound)?;
    out.sort();
    Ok(out)
}

fn walk_partials(
    chain: &[usize],
    bonds: &[u64],
    r: u32,
    partial: &mut Vec<Q>,
    out: &mut Vec<LsPath>,
    bound: u64,
) -> Result<()> {
    let j = partial.len();
    let r_q = q(r as i64);
    if j == bonds.len() {
        if out.len() as u64 >= bound {
            return Err(Error::TooLarge {
                what: "LS path enumeration",
                bound,
            });
        }
        let mut v = PathVector::zero();
        let mut prev = Q::zero();
        for (i, s) in partial.iter().chain(std::iter::once(&r_q)).enumerate() {
            v.set(chain[i], s - &prev);
            prev = s.clone();
        }
        out.push(LsPath::new_unchecked(v, r));
        return Ok(());
    }
    let b = bonds[j] as i64;
    let lo = partial.last().cloned().unwrap_or_else(Q::zero);
    let start = (&lo * q(b)).ceil().to_integer().to_i64().unwrap();
    for t in start..=(r as i64 * b) {
        partial.push(Q::new(BigInt::from(t), BigInt::from(b)));
        walk_partials(chain, bonds, r, partial, out, bound)?;
        partial.pop();
    }
    Ok(())
}

/// `LS_r`: union over maximal chains, deduplicated and sorted.
pub fn enumerate(poset: &BondedPoset, r: u32) -> Result<Vec<LsPath>> {
    let mut all = BTreeSet::new();
    for chain in poset.maximal_chains()? {
        all.extend(enumerate_on_chain(poset, &chain, r)?);
        if all.len() as u64 > poset.limits().max_paths {
            return Err(Error::TooLarge {
                what: "LS path enumeration",
                bound: poset.limits().max_paths,
            });
        }
    }
    Ok(all.into_iter().collect())
}

/// A formal product of LS paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathMonomial {
    pub factors: Vec<LsPath>,
}

impl PathMonomial {
    pub fn new(factors: Vec<LsPath>) -> Self {
        PathMonomial { factors }
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(LsPath::degree).sum()
    }

    /// `max supp π_h ≤ min supp π_{h+1}` for consecutive factors.
    pub fn is_standard(&self, poset: &BondedPoset) -> bool {
        self.factors.windows(2).all(|w| {
            match (w[0].max_support(), w[1].min_support()) {
                (Some(a), Some(b)) => poset.leq(a, b),
                _ => true,
            }
        })
    }

    pub fn sum(&self) -> PathVector {
        let mut v = PathVector::zero();
        for f in &self.factors {
            v += f.vector();
        }
        v
    }

    pub fn display(&self, poset: &BondedPoset) -> String {
        self.factors
            .iter()
            .map(|f| format!("({})", f.display(poset)))
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// Splits `π` into its standard factorization by degree-one paths.
///
/// Lays the mass of `π` along its support and cuts it at every integer;
/// each piece is checked, with an exhaustive search as fallback.
pub fn decompose_degree_one(poset: &BondedPoset, path: &LsPath) -> Result<Vec<LsPath>> {
    if let Some(why) = ls_violation(poset, path.vector(), path.degree()) {
        return Err(Error::NotAnLSPath(why.to_string()));
    }
    if let Some(factors) = greedy_factors(poset, path) {
        return Ok(factors);
    }
    exhaustive_factors(poset, path).ok_or_else(|| {
        Error::NotAnLSPath(format!("no standard decomposition of {}", path.display(poset)))
    })
}

fn greedy_factors(poset: &BondedPoset, path: &LsPath) -> Option<Vec<LsPath>> {
    let supp = path.support();
    let mut factors = Vec::with_capacity(path.degree() as usize);
    let mut start = Q::zero();
    let mut intervals = Vec::with_capacity(supp.len());
    for &e in &supp {
        let end = &start + path.value(e);
        intervals.push((e, start.clone(), end.clone()));
        start = end;
    }
    for h in 0..path.degree() {
        let (lo, hi) = (q(h as i64), q(h as i64 + 1));
        let mut v = PathVector::zero();
        for (e, a, b) in &intervals {
            let overlap = b.clone().min(hi.clone()) - a.clone().max(lo.clone());
            if overlap.is_positive() {
                v.set(*e, overlap);
            }
        }
        if !is_ls_path(poset, &v, 1) {
            return None;
        }
        factors.push(LsPath::new_unchecked(v, 1));
    }
    PathMonomial::new(factors.clone())
        .is_standard(poset)
        .then_some(factors)
}

fn exhaustive_factors(poset: &BondedPoset, path: &LsPath) -> Option<Vec<LsPath>> {
    let candidates = enumerate_on_chain(poset, &path.support(), 1).ok()?;
    let mut acc = Vec::new();
    search_factors(poset, &candidates, path.vector().clone(), &mut acc).then_some(acc)
}

fn search_factors(
    poset: &BondedPoset,
    candidates: &[LsPath],
    rest: PathVector,
    acc: &mut Vec<LsPath>,
) -> bool {
    if rest.is_zero() {
        return true;
    }
    for c in candidates {
        if let Some(prev) = acc.last() {
            if !poset.leq(prev.max_support().unwrap(), c.min_support().unwrap()) {
                continue;
            }
        }
        let remaining = &rest - c.vector();
        if !remaining.is_nonnegative() {
            continue;
        }
        acc.push(c.clone());
        if search_factors(poset, candidates, remaining, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

/// The standard monomial whose factors sum to the factors of `monomial`.
pub fn canonical_form(poset: &BondedPoset, monomial: &PathMonomial) -> Result<PathMonomial> {
    let mut union: Vec<usize> = monomial.factors.iter().flat_map(LsPath::support).collect();
    union.sort_unstable();
    union.dedup();
    if !poset.is_chain(&union) {
        return Err(Error::NonComparableSupports);
    }
    let sum = LsPath::new(poset, monomial.sum(), monomial.degree())?;
    Ok(PathMonomial::new(decompose_degree_one(poset, &sum)?))
}

/// For a degree-one path with support `σ₁ < … < σ_n`, `n ≥ 2`, returns
/// `π′ = (1−a₁)σ₁ + a₁σ₂` and `π″ = (a₁+a₂)σ₂ + π|{σ₃,…}`.
pub fn split_head(poset: &BondedPoset, path: &LsPath) -> Result<(LsPath, LsPath)> {
    if path.degree() != 1 {
        return Err(Error::NotAnLSPath("split_head needs a degree one path".into()));
    }
    let supp = path.support();
    if supp.len() < 2 {
        return Err(Error::WidthOne);
    }
    let (s1, s2) = (supp[0], supp[1]);
    let (a1, a2) = (path.value(s1), path.value(s2));
    let head = PathVector::from_pairs([(s1, Q::one() - &a1), (s2, a1.clone())]);
    let mut tail = path.vector().restrict(|e| e != s1);
    tail.set(s2, a1 + a2);
    Ok((LsPath::new(poset, head, 1)?, LsPath::new(poset, tail, 1)?))
}

/// `ℓ(max supp π) − ℓ(min supp π) + 1`.
pub fn width(poset: &BondedPoset, path: &LsPath) -> Result<usize> {
    match (path.min_support(), path.max_support()) {
        (Some(lo), Some(hi)) => Ok(poset.length_of(hi) - poset.length_of(lo) + 1),
        _ => Err(Error::ZeroPath),
    }
}

/// The lattice `L_C ⊆ ℚ^C` generated by the LS paths supported on `C`,
/// stored as an integer lattice after scaling by a common denominator.
#[derive(Debug, Clone)]
pub struct ChainLattice {
    chain: Vec<usize>,
    denominator: BigInt,
    lattice: IntegerLattice,
}

impl ChainLattice {
    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    /// Basis vectors, coordinates indexed by the chain.
    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.lattice
            .basis()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| Q::new(x, self.denominator.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn contains(&self, v: &PathVector) -> bool {
        if v.support().iter().any(|e| !self.chain.contains(e)) {
            return false;
        }
        let scaled: Vec<Q> = self
            .chain
            .iter()
            .map(|&e| v.get(e) * Q::from_integer(self.denominator.clone()))
            .collect();
        if scaled.iter().any(|x| !is_integer(x)) {
            return false;
        }
        let ints: Vec<BigInt> = scaled.into_iter().map(|x| x.to_integer()).collect();
        self.lattice.contains(&ints)
    }
}

pub fn chain_lattice_basis(poset: &BondedPoset, chain: &[usize]) -> Result<ChainLattice> {
    let chain = sorted_chain(poset, chain)?;
    let generators = enumerate_on_chain(poset, &chain, 1)?;
    let denominator = generators
        .iter()
        .flat_map(|g| chain.iter().map(move |&e| g.value(e).denom().clone()))
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let rows: Vec<Vec<BigInt>> = generators
        .iter()
        .map(|g| {
            chain
                .iter()
                .map(|&e| (g.value(e) * Q::from_integer(denominator.clone())).to_integer())
                .collect()
        })
        .collect();
    let lattice = IntegerLattice::from_generators(chain.len(), &rows);
    Ok(ChainLattice {
        chain,
        denominator,
        lattice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::frac;

    fn pv(p: &BondedPoset, pairs: &[(&str, Q)]) -> PathVector {
        PathVector::from_pairs(pairs.iter().map(|(l, c)| (p.element(l).unwrap(), c.clone())))
    }

    #[test]
    fn membership_examples() {
        let p = fixtures::chain_121();
        let half = frac(1, 2);
        assert!(is_ls_path(&p, &pv(&p, &[("x", half.clone()), ("y", half.clone())]), 1));
        assert!(!is_ls_path(&p, &pv(&p, &[("e", half.clone()), ("x", half.clone())]), 1));
        let g = fixtures::i24();
        assert!(!is_ls_path(&g, &pv(&g, &[("14", half.clone()), ("23", half.clone())]), 1));
        assert!(!is_ls_path(&p, &pv(&p, &[("x", q(1))]), 2));
        assert!(!is_ls_path(&p, &pv(&p, &[("x", q(2)), ("y", q(-1))]), 1));
    }

    #[test]
    fn small_enumerations() {
        let a1 = fixtures::a1_bond3();
        let c = a1.maximal_chains().unwrap().remove(0);
        assert_eq!(enumerate_on_chain(&a1, &c, 1).unwrap().len(), 4);
        assert_eq!(enumerate_on_chain(&a1, &c, 0).unwrap(), vec![LsPath::zero()]);
        let p = fixtures::chain_121();
        let c = p.maximal_chains().unwrap().remove(0);
        let one = enumerate_on_chain(&p, &c, 1).unwrap();
        assert_eq!(one.len(), 5);
        assert_eq!(enumerate(&fixtures::i24(), 1).unwrap().len(), 6);
        assert_eq!(enumerate(&fixtures::i24(), 2).unwrap().len(), 20);
        let point = fixtures::point();
        assert_eq!(enumerate(&point, 3).unwrap(), vec![LsPath::extremal(0, 3)]);
        assert!(matches!(
            enumerate_on_chain(&fixtures::i24(), &[2, 3], 1),
            Err(Error::NotAChain)
        ));
    }

    #[test]
    fn decomposition_examples() {
        let p = BondedPoset::new(&["e", "x", "y"], &[("e", "x", 1), ("x", "y", 2)]).unwrap();
        let half = frac(1, 2);
        let pi = LsPath::new(&p, pv(&p, &[("e", q(1)), ("x", half.clone()), ("y", half.clone())]), 2).unwrap();
        let parts = decompose_degree_one(&p, &pi).unwrap();
        assert_eq!(parts[0], LsPath::extremal(p.element("e").unwrap(), 1));
        assert_eq!(parts[1].vector(), &pv(&p, &[("x", half.clone()), ("y", half.clone())]));
        let xy = LsPath::new(&p, pv(&p, &[("x", q(1)), ("y", q(1))]), 2).unwrap();
        let parts = decompose_degree_one(&p, &xy).unwrap();
        assert_eq!(parts, vec![LsPath::extremal(1, 1), LsPath::extremal(2, 1)]);
        assert_eq!(
            decompose_degree_one(&p, &LsPath::extremal(1, 3)).unwrap(),
            vec![LsPath::extremal(1, 1); 3]
        );
    }

    #[test]
    fn canonical_forms() {
        let p = BondedPoset::new(&["e", "x", "y"], &[("e", "x", 1), ("x", "y", 2)]).unwrap();
        let half = frac(1, 2);
        let mid = LsPath::new(&p, pv(&p, &[("x", half.clone()), ("y", half)]), 1).unwrap();
        let cf = canonical_form(&p, &PathMonomial::new(vec![mid.clone(), mid.clone()])).unwrap();
        assert_eq!(cf.factors, vec![LsPath::extremal(1, 1), LsPath::extremal(2, 1)]);
        let std = PathMonomial::new(vec![LsPath::extremal(0, 1), mid]);
        assert_eq!(canonical_form(&p, &std).unwrap(), std);
        let sq = PathMonomial::new(vec![LsPath::extremal(1, 1); 2]);
        assert_eq!(canonical_form(&p, &sq).unwrap(), sq);
        let g = fixtures::i24();
        let bad = PathMonomial::new(vec![
            LsPath::extremal(g.element("14").unwrap(), 1),
            LsPath::extremal(g.element("23").unwrap(), 1),
        ]);
        assert!(matches!(canonical_form(&g, &bad), Err(Error::NonComparableSupports)));
    }

    #[test]
    fn split_head_examples() {
        let p = fixtures::chain_121();
        let half = frac(1, 2);
        let mid = LsPath::new(&p, pv(&p, &[("x", half.clone()), ("y", half.clone())]), 1).unwrap();
        let (head, tail) = split_head(&p, &mid).unwrap();
        assert_eq!(head, mid);
        assert_eq!(tail, LsPath::extremal(p.element("y").unwrap(), 1));

        let a1 = fixtures::a1_bond3();
        let pi = LsPath::new(&a1, pv(&a1, &[("e", frac(2, 3)), ("s", frac(1, 3))]), 1).unwrap();
        let (head, tail) = split_head(&a1, &pi).unwrap();
        assert_eq!(head.vector(), &pv(&a1, &[("e", frac(1, 3)), ("s", frac(2, 3))]));
        assert_eq!(tail, LsPath::extremal(a1.element("s").unwrap(), 1));
        let cf = canonical_form(&a1, &PathMonomial::new(vec![head, pi])).unwrap();
        assert_eq!(cf.factors, vec![LsPath::extremal(0, 1), tail]);

        assert!(matches!(split_head(&a1, &LsPath::extremal(0, 1)), Err(Error::WidthOne)));
    }

    #[test]
    fn widths() {
        let p = fixtures::chain_121();
        let half = frac(1, 2);
        let mid = LsPath::new(&p, pv(&p, &[("x", half.clone()), ("y", half)]), 1).unwrap();
        assert_eq!(width(&p, &LsPath::extremal(1, 1)).unwrap(), 1);
        assert_eq!(width(&p, &mid).unwrap(), 2);
        let ez = LsPath::new(&p, pv(&p, &[("e", q(1)), ("z", q(1))]), 2).unwrap();
        assert_eq!(width(&p, &ez).unwrap(), 4);
        assert!(matches!(width(&p, &LsPath::zero()), Err(Error::ZeroPath)));
    }

    #[test]
    fn lattice_of_unit_bond_chain_is_standard() {
        let g = fixtures::i24();
        let c = g.maximal_chains().unwrap().remove(0);
        let l = chain_lattice_basis(&g, &c).unwrap();
        assert_eq!(l.rank(), 5);
        let id: Vec<Vec<Q>> = (0..5)
            .map(|i| (0..5).map(|j| if i == j { q(1) } else { q(0) }).collect())
            .collect();
        assert_eq!(l.basis(), id);
    }

    #[test]
    fn lattice_of_bond_three_segment() {
        let a1 = fixtures::a1_bond3();
        let l = chain_lattice_basis(&a1, &[0, 1]).unwrap();
        // Reduced basis recorded: (1/3, 2/3) and (0, 1).
        assert_eq!(l.basis(), vec![vec![frac(1, 3), frac(2, 3)], vec![q(0), q(1)]]);
        assert!(l.contains(&PathVector::from_pairs([(0, frac(1, 3)), (1, frac(-1, 3))])));
        assert!(!l.contains(&PathVector::from_pairs([(0, frac(1, 2)), (1, frac(1, 2))])));
    }

    #[test]
    fn json_text_forms() {
        let p = fixtures::chain_121();
        let mid = LsPath::parse(&p, "x:1/2, y:1/2").unwrap();
        let json = mid.to_json(&p);
        assert_eq!(json.values["x"], "1/2");
        assert_eq!(LsPath::from_json(&p, &json).unwrap(), mid);
        assert!(LsPath::parse(&p, "e:1/2,x:1/2").is_err());
    }
}
