//! Finite root systems from Cartan matrices and the Bruhat posets `W^λ_τ`
//! with bonds `b_λ(σ, σ′) = ⟨σ(λ), β∨⟩`.
//!
//! Weights are integer vectors in the basis of fundamental weights. The
//! Cartan matrix has `a_ij = ⟨α_i∨, α_j⟩`, long roots have squared length 2.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::LsPath;
use crate::poset::{BondedPoset, Limits};
use crate::rational::{q, Q};
use crate::vector::PathVector;

/// Largest Weyl group handled.
pub const MAX_WEYL_ORDER: u64 = 100_000;
/// Largest orbit turned into a poset.
pub const MAX_ORBIT: u64 = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    kind: char,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Half squared lengths of the simple roots, the longest being 1.
    symmetrizer: Vec<Q>,
    /// Positive roots in the basis of simple roots.
    roots: Vec<Vec<i64>>,
    /// Matching coroots in the basis of simple coroots.
    coroots: Vec<Vec<i64>>,
}

fn weyl_order(kind: char, rank: usize) -> Option<u64> {
    let fact = |n: usize| (1..=n as u64).product::<u64>();
    Some(match (kind, rank) {
        ('A', n) if n >= 1 => fact(n + 1),
        ('B' | 'C', n) if n >= 2 => (1u64 << n) * fact(n),
        ('D', n) if n >= 4 => (1u64 << (n - 1)) * fact(n),
        ('E', 6) => 51_840,
        ('E', 7) => 2_903_040,
        ('E', 8) => 696_729_600,
        ('F', 4) => 1_152,
        ('G', 2) => 12,
        _ => return None,
    })
}

fn cartan_matrix(kind: char, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match kind {
        'A' | 'B' | 'C' | 'F' | 'G' => (1..rank).for_each(|i| link(i - 1, i)),
        'D' => {
            (1..rank - 1).for_each(|i| link(i - 1, i));
            link(rank - 3, rank - 1);
        }
        'E' => {
            link(0, 2);
            link(1, 3);
            (3..rank).for_each(|i| link(i - 1, i));
        }
        _ => unreachable!(),
    }
    match kind {
        // α_n short
        'B' => a[rank - 1][rank - 2] = -2,
        // α_n long
        'C' => a[rank - 2][rank - 1] = -2,
        // α_1, α_2 long
        'F' => a[2][1] = -2,
        // α_1 short
        'G' => a[0][1] = -3,
        _ => {}
    }
    a
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootSystem {
    /// `"A3"`, `"B2"`, `"G2"`, ...
    pub fn parse(text: &str) -> Result<Self> {
        let mut chars = text.trim().chars();
        let kind = chars.next().map(|c| c.to_ascii_uppercase());
        let rank = chars.as_str().parse::<usize>().ok();
        match (kind, rank) {
            (Some(k), Some(r)) => build_root_system(k, r),
            _ => Err(Error::UnsupportedType(text.to_string())),
        }
    }

    pub fn kind(&self) -> char {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// `(α_i, α_j)` with long roots of squared length 2.
    pub fn simple_inner(&self, i: usize, j: usize) -> Q {
        &self.symmetrizer[i] * q(self.cartan[i][j])
    }

    /// `(β, γ)` for roots in the simple root basis.
    pub fn inner(&self, beta: &[i64], gamma: &[i64]) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                if beta[i] != 0 && gamma[j] != 0 {
                    acc += self.simple_inner(i, j) * q(beta[i] * gamma[j]);
                }
            }
        }
        acc
    }

    /// `⟨μ, β∨⟩` for the `index`-th positive root.
    pub fn pairing(&self, mu: &[i64], index: usize) -> i64 {
        dot(&self.coroots[index], mu)
    }

    /// A root written in fundamental weights: coordinate `k` is `⟨β, α_k∨⟩`.
    pub fn root_as_weight(&self, beta: &[i64]) -> Vec<i64> {
        (0..self.rank).map(|k| dot(&self.cartan[k], beta)).collect()
    }

    /// `s_β(μ) = μ − ⟨μ, β∨⟩β`.
    pub fn reflect(&self, mu: &[i64], index: usize) -> Vec<i64> {
        let c = self.pairing(mu, index);
        let beta = self.root_as_weight(&self.roots[index]);
        mu.iter().zip(beta).map(|(m, b)| m - c * b).collect()
    }

    /// `s_i(μ) = μ − μ_i α_i`.
    pub fn simple_reflect(&self, mu: &[i64], i: usize) -> Vec<i64> {
        (0..self.rank).map(|k| mu[k] - mu[i] * self.cartan[k][i]).collect()
    }

    /// `ρ = Σ ω_i`.
    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank]
    }

    /// `|W|`.
    pub fn weyl_group_order(&self) -> u64 {
        weyl_order(self.kind, self.rank).expect("validated at construction")
    }

    /// Number of positive roots `μ` pairs negatively with, i.e. `ℓ` of the
    /// minimal representative taking the dominant weight to `μ`.
    pub fn length(&self, mu: &[i64]) -> usize {
        (0..self.roots.len()).filter(|&i| self.pairing(mu, i) < 0).count()
    }
}

/// Root data of a finite irreducible type.
pub fn build_root_system(kind: char, rank: usize) -> Result<RootSystem> {
    let kind = kind.to_ascii_uppercase();
    let order = weyl_order(kind, rank).ok_or_else(|| Error::UnsupportedType(format!("{kind}{rank}")))?;
    if order > MAX_WEYL_ORDER {
        return Err(Error::TooLarge {
            what: "Weyl group order",
            bound: MAX_WEYL_ORDER,
        });
    }
    let cartan = cartan_matrix(kind, rank);

    // d_i a_ij = d_j a_ji along the connected diagram
    let mut sym: Vec<Option<Q>> = vec![None; rank];
    sym[0] = Some(Q::one());
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for j in 0..rank {
            if j != i && cartan[i][j] != 0 && sym[j].is_none() {
                let di = sym[i].clone().unwrap();
                sym[j] = Some(di * q(cartan[i][j]) / q(cartan[j][i]));
                queue.push_back(j);
            }
        }
    }
    let sym: Vec<Q> = sym.into_iter().map(Option::unwrap).collect();
    let max = sym.iter().max().unwrap().clone();
    let symmetrizer = sym.into_iter().map(|d| d / &max).collect();

    let unit = |i: usize| -> Vec<i64> { (0..rank).map(|k| i64::from(k == i)).collect() };
    let mut roots: Vec<Vec<i64>> = (0..rank).map(unit).collect();
    let mut coroots = roots.clone();
    let mut seen: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let mut next = 0;
    while next < roots.len() {
        let (beta, gamma) = (roots[next].clone(), coroots[next].clone());
        next += 1;
        for i in 0..rank {
            let c = dot(&cartan[i], &beta);
            let mut b = beta.clone();
            b[i] -= c;
            if b.iter().any(|&x| x < 0) || seen.contains_key(&b) {
                continue;
            }
            let cc: i64 = (0..rank).map(|j| gamma[j] * cartan[j][i]).sum();
            let mut g = gamma.clone();
            g[i] -= cc;
            seen.insert(b.clone(), roots.len());
            roots.push(b);
            coroots.push(g);
        }
    }
    Ok(RootSystem {
        kind,
        rank,
        cartan,
        symmetrizer,
        roots,
        coroots,
    })
}

/// An orbit point `σ(λ)` with `ℓ(σ)` and a reduced word for the minimal `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitElement {
    pub weight: Vec<i64>,
    pub length: usize,
    /// Simple reflections, applied right to left to `λ`.
    pub word: Vec<usize>,
}

pub fn check_dominant(lambda: &[i64]) -> Result<()> {
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(format_weight(lambda)));
    }
    Ok(())
}

/// `W·λ` by breadth-first search along length-increasing simple reflections.
pub fn orbit(rs: &RootSystem, lambda: &[i64]) -> Result<Vec<OrbitElement>> {
    if lambda.len() != rs.rank {
        return Err(Error::Parse(format!("weight needs {} coordinates", rs.rank)));
    }
    check_dominant(lambda)?;
    let mut out = vec![OrbitElement {
        weight: lambda.to_vec(),
        length: 0,
        word: Vec::new(),
    }];
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::from([(lambda.to_vec(), 0)]);
    let mut next = 0;
    while next < out.len() {
        let cur = out[next].clone();
        next += 1;
        for i in 0..rs.rank {
            if cur.weight[i] > 0 {
                let w = rs.simple_reflect(&cur.weight, i);
                if !seen.contains_key(&w) {
                    if out.len() as u64 >= MAX_ORBIT {
                        return Err(Error::OrbitTooLarge(MAX_ORBIT));
                    }
                    let mut word = vec![i];
                    word.extend(&cur.word);
                    seen.insert(w.clone(), out.len());
                    out.push(OrbitElement {
                        weight: w,
                        length: cur.length + 1,
                        word,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// `"1,-1,0"` wrapped in parentheses.
pub fn format_weight(w: &[i64]) -> String {
    format!(
        "({})",
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    )
}

/// Parses `"0,1,0"` or `"(0,1,0)"`.
pub fn parse_weight(text: &str) -> Result<Vec<i64>> {
    text.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad weight `{text}`")))
        })
        .collect()
}

/// The poset `W^λ_τ` on orbit points, labelled by their weights.
///
/// Covers join `μ` to `s_β(μ)` one length higher, where `⟨μ, β∨⟩ > 0`; the
/// bond is that pairing. With `tau` only the points below it are kept.
pub fn bruhat_poset(rs: &RootSystem, lambda: &[i64], tau: Option<&[i64]>) -> Result<BondedPoset> {
    let points = orbit(rs, lambda)?;
    let index: HashMap<&[i64], usize> = points.iter().enumerate().map(|(i, p)| (p.weight.as_slice(), i)).collect();

    // reflection edges up in length, with their pairings
    let mut edges: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (a, p) in points.iter().enumerate() {
        for beta in 0..rs.roots.len() {
            let c = rs.pairing(&p.weight, beta);
            if c > 0 {
                let b = index[rs.reflect(&p.weight, beta).as_slice()];
                debug_assert!(points[b].length > p.length);
                edges.insert((a, b), c);
            }
        }
    }

    let labels: Vec<String> = points.iter().map(|p| format_weight(&p.weight)).collect();
    let mut covers = Vec::new();
    for (&(a, b), &bond) in &edges {
        if points[b].length == points[a].length + 1 {
            covers.push((labels[a].clone(), labels[b].clone(), bond));
        }
    }
    let full = BondedPoset::with_limits(&labels, &covers, Limits::from_env())?;
    full.verify_gcd_condition()?.into_result(&full)?;
    match tau {
        None => Ok(full),
        Some(t) => {
            let e = full.element(&format_weight(t))?;
            full.subposet_below(e)
        }
    }
}

/// The Bruhat order of the whole orbit as a relation matrix, from closure of
/// reflection edges. Used to cross-check the poset's order.
pub fn orbit_order(rs: &RootSystem, lambda: &[i64]) -> Result<(Vec<OrbitElement>, Vec<Vec<bool>>)> {
    let points = orbit(rs, lambda)?;
    let index: HashMap<Vec<i64>, usize> = points.iter().enumerate().map(|(i, p)| (p.weight.clone(), i)).collect();
    let n = points.len();
    let mut rel = vec![vec![false; n]; n];
    for (a, p) in points.iter().enumerate() {
        rel[a][a] = true;
        for beta in 0..rs.roots.len() {
            if rs.pairing(&p.weight, beta) > 0 {
                rel[a][index[&rs.reflect(&p.weight, beta)]] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    Ok((points, rel))
}

/// `Σ_j (a_j − a_{j−1})·σ_j` from `σ_1 > … > σ_r` and `0 = a_0 < … < a_r = 1`.
///
/// `times` lists `a_1, …, a_r`.
pub fn littelmann_to_function(poset: &BondedPoset, sigmas: &[usize], times: &[Q]) -> Result<LsPath> {
    let malformed = |m: &str| Error::MalformedPair(m.to_string());
    if sigmas.is_empty() || sigmas.len() != times.len() {
        return Err(malformed("need one time per element"));
    }
    if sigmas.iter().any(|&s| s >= poset.len()) {
        return Err(malformed("unknown element"));
    }
    if sigmas.windows(2).any(|w| !poset.lt(w[1], w[0])) {
        return Err(malformed("elements must be strictly decreasing"));
    }
    if times.windows(2).any(|w| w[0] >= w[1]) || times[0] <= Q::zero() || !times.last().unwrap().is_one() {
        return Err(malformed("times must increase strictly from 0 to 1"));
    }
    let mut v = PathVector::zero();
    let mut prev = Q::zero();
    for (&s, a) in sigmas.iter().zip(times) {
        v.add_to(s, &(a - &prev));
        prev = a.clone();
    }
    LsPath::new(poset, v, 1)
}

/// Inverse of [`littelmann_to_function`] on degree-one paths.
pub fn function_to_littelmann(path: &LsPath) -> Result<(Vec<usize>, Vec<Q>)> {
    if path.degree() != 1 {
        return Err(Error::MalformedPair("only degree-one paths are Littelmann paths".into()));
    }
    let mut sigmas = Vec::new();
    let mut times = Vec::new();
    let mut acc = Q::zero();
    for (e, c) in path.vector().iter().collect::<Vec<_>>().into_iter().rev() {
        acc += c;
        sigmas.push(e);
        times.push(acc.clone());
    }
    Ok((sigmas, times))
}

/// `dim V(λ) = ∏_{β>0} ⟨λ+ρ, β∨⟩ / ⟨ρ, β∨⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i64]) -> Result<BigInt> {
    check_dominant(lambda)?;
    let rho = rs.rho();
    let shifted: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut acc = Q::one();
    for i in 0..rs.roots.len() {
        acc *= Q::new(rs.pairing(&shifted, i).into(), rs.pairing(&rho, i).into());
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::paths::enumerate;
    use crate::poset::isomorphic;
    use crate::rational::frac;

    #[test]
    fn root_counts() {
        for (name, count) in [("A1", 1), ("A3", 6), ("B2", 4), ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36)] {
            let rs = RootSystem::parse(name).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "{name}");
        }
        assert!(matches!(RootSystem::parse("H3"), Err(Error::UnsupportedType(_))));
        assert!(matches!(RootSystem::parse("E8"), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn cartan_from_inner_product() {
        for name in ["A2", "B3", "C3", "D4", "G2", "F4"] {
            let rs = RootSystem::parse(name).unwrap();
            let n = rs.rank();
            for i in 0..n {
                for j in 0..n {
                    let e = |k: usize| (0..n).map(|x| i64::from(x == k)).collect::<Vec<_>>();
                    let a = q(2) * rs.inner(&e(i), &e(j)) / rs.inner(&e(i), &e(i));
                    assert_eq!(a, q(rs.cartan()[i][j]), "{name} {i} {j}");
                }
            }
            // β∨ = 2β/(β,β) and α_i∨ = 2α_i/(α_i,α_i)
            for (beta, cob) in rs.positive_roots().iter().zip(rs.positive_coroots()) {
                let bb = rs.inner(beta, beta);
                for i in 0..n {
                    let e = |k: usize| (0..n).map(|x| i64::from(x == k)).collect::<Vec<_>>();
                    let ii = rs.inner(&e(i), &e(i));
                    assert_eq!(q(2 * cob[i]) / ii, q(2 * beta[i]) / &bb, "{name}");
                }
            }
        }
        let b2 = RootSystem::parse("B2").unwrap();
        let lengths: Vec<Q> = b2.positive_roots().iter().map(|r| b2.inner(r, r)).collect();
        assert!(lengths.contains(&q(2)) && lengths.contains(&q(1)));
    }

    #[test]
    fn bruhat_examples() {
        let b2 = RootSystem::parse("B2").unwrap();
        let p = bruhat_poset(&b2, &[1, 0], None).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.maximal_chains().unwrap().len(), 1);
        let bonds: Vec<u64> = p.maximal_chains().unwrap()[0].windows(2).map(|w| p.bond(w[0], w[1]).unwrap()).collect();
        assert_eq!(bonds, vec![1, 2, 1]);
        assert!(isomorphic(&p, &fixtures::chain_121()));

        let a3 = RootSystem::parse("A3").unwrap();
        let g = bruhat_poset(&a3, &[0, 1, 0], None).unwrap();
        assert!(isomorphic(&g, &fixtures::i24()));

        let a1 = RootSystem::parse("A1").unwrap();
        assert!(isomorphic(&bruhat_poset(&a1, &[3], None).unwrap(), &fixtures::a1_bond3()));
        assert!(matches!(bruhat_poset(&a1, &[-1], None), Err(Error::NotDominant(_))));
    }

    #[test]
    fn schubert_restriction() {
        let a3 = RootSystem::parse("A3").unwrap();
        let full = bruhat_poset(&a3, &[0, 1, 0], None).unwrap();
        let mid = full.label(full.elements().find(|&e| full.length_of(e) == 2).unwrap()).to_string();
        let below = bruhat_poset(&a3, &[0, 1, 0], Some(&parse_weight(&mid).unwrap())).unwrap();
        assert_eq!(below.rank(), 2);
    }

    #[test]
    fn lengths_agree_with_bfs() {
        let rs = RootSystem::parse("B3").unwrap();
        for p in orbit(&rs, &[1, 0, 1]).unwrap() {
            assert_eq!(rs.length(&p.weight), p.length);
            assert_eq!(p.word.len(), p.length);
        }
    }

    #[test]
    fn dimensions() {
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(weyl_dimension(&a1, &[3]).unwrap(), 4.into());
        let a3 = RootSystem::parse("A3").unwrap();
        assert_eq!(weyl_dimension(&a3, &[0, 2, 0]).unwrap(), 20.into());
        let b2 = RootSystem::parse("B2").unwrap();
        assert_eq!(weyl_dimension(&b2, &[1, 0]).unwrap(), 5.into());
        let g2 = RootSystem::parse("G2").unwrap();
        assert_eq!(weyl_dimension(&g2, &[1, 0]).unwrap(), 7.into());
    }

    #[test]
    fn path_counts_match_dimensions() {
        for (name, lambda) in [("A1", vec![3]), ("B2", vec![1, 0]), ("A2", vec![1, 1]), ("A3", vec![0, 1, 0])] {
            let rs = RootSystem::parse(name).unwrap();
            let p = bruhat_poset(&rs, &lambda, None).unwrap();
            for r in 1..=2 {
                let rl: Vec<i64> = lambda.iter().map(|x| x * r as i64).collect();
                let dim = weyl_dimension(&rs, &rl).unwrap();
                assert_eq!(BigInt::from(enumerate(&p, r).unwrap().len()), dim, "{name} r={r}");
            }
        }
    }

    #[test]
    fn littelmann_pairs() {
        let c = fixtures::chain_121();
        let (x, y) = (c.element("x").unwrap(), c.element("y").unwrap());
        let p = littelmann_to_function(&c, &[y, x], &[frac(1, 2), q(1)]).unwrap();
        assert_eq!(p, LsPath::parse(&c, "x:1/2,y:1/2").unwrap());
        assert_eq!(function_to_littelmann(&p).unwrap(), (vec![y, x], vec![frac(1, 2), q(1)]));

        let a1 = fixtures::a1_bond3();
        let p = LsPath::parse(&a1, "e:1/3,s:2/3").unwrap();
        assert_eq!(function_to_littelmann(&p).unwrap(), (vec![1, 0], vec![frac(2, 3), q(1)]));
        assert!(matches!(
            littelmann_to_function(&c, &[x, y], &[frac(1, 2), q(1)]),
            Err(Error::MalformedPair(_))
        ));
        let ext = littelmann_to_function(&c, &[x], &[q(1)]).unwrap();
        assert!(ext.is_extremal());
    }
}
