//! The order complex `Δ(S)` of chains, its levels `Δ_r(S)`, and the
//! bond-scaled affine embeddings of its simplices.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::paths::{enumerate, is_ls_path};
use crate::poset::BondedPoset;
use crate::rational::{lcm_u64, q, Q};
use crate::vector::PathVector;

/// All nonempty chains, ordered by size and then by element sequence.
pub fn faces(poset: &BondedPoset) -> Result<Vec<Vec<usize>>> {
    let bound = poset.limits().max_chains;
    let mut out = Vec::new();
    let mut current = Vec::new();
    for e in poset.elements() {
        current.push(e);
        grow(poset, &mut current, &mut out, bound)?;
        current.pop();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn grow(
    poset: &BondedPoset,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    bound: u64,
) -> Result<()> {
    if out.len() as u64 >= bound {
        return Err(Error::TooLarge {
            what: "face enumeration",
            bound,
        });
    }
    out.push(current.clone());
    let last = *current.last().unwrap();
    for e in last + 1..poset.len() {
        if poset.lt(last, e) {
            current.push(e);
            grow(poset, current, out, bound)?;
            current.pop();
        }
    }
    Ok(())
}

/// The affine map sending the vertices of `Δ(C)` to
/// `v_i = Σ_{j≤i} b(σ_{j−1}, σ_j)·e_j ∈ ℤ^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexEmbedding {
    chain: Vec<usize>,
    bonds: Vec<u64>,
}

impl SimplexEmbedding {
    pub fn new(poset: &BondedPoset, chain: &[usize]) -> Result<Self> {
        let mut chain = chain.to_vec();
        chain.sort_unstable();
        chain.dedup();
        if chain.is_empty() || !poset.is_chain(&chain) {
            return Err(Error::NotAChain);
        }
        let bonds = chain
            .windows(2)
            .map(|w| poset.extended_bond(w[0], w[1]))
            .collect::<Result<_>>()?;
        Ok(SimplexEmbedding { chain, bonds })
    }

    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    pub fn bonds(&self) -> &[u64] {
        &self.bonds
    }

    /// Dimension `k` of the simplex.
    pub fn dim(&self) -> usize {
        self.bonds.len()
    }

    /// Vertex images `v_0, …, v_k`.
    pub fn vertices(&self) -> Vec<Vec<i64>> {
        (0..=self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| if j < i { self.bonds[j] as i64 } else { 0 })
                    .collect()
            })
            .collect()
    }

    /// Image of `Σ_i v(σ_i)·σ_i`: coordinate `j` is `b_j·Σ_{i≥j} v(σ_i)`.
    pub fn image(&self, v: &PathVector) -> Vec<Q> {
        (1..=self.dim())
            .map(|j| {
                let tail = self.chain[j..]
                    .iter()
                    .fold(Q::zero(), |acc, &e| acc + v.get(e));
                tail * q(self.bonds[j - 1] as i64)
            })
            .collect()
    }

    /// Inverse of [`image`](Self::image) on points of total mass `total`.
    pub fn preimage(&self, point: &[Q], total: &Q) -> PathVector {
        let k = self.dim();
        let tails: Vec<Q> = (0..=k)
            .map(|j| {
                if j == 0 {
                    total.clone()
                } else {
                    &point[j - 1] / q(self.bonds[j - 1] as i64)
                }
            })
            .collect();
        PathVector::from_pairs((0..=k).map(|i| {
            let next = if i < k { tails[i + 1].clone() } else { Q::zero() };
            (self.chain[i], &tails[i] - next)
        }))
    }
}

/// `Δ_r(S) = {π/r : π ∈ LS_r}`.
pub fn level_points(poset: &BondedPoset, r: u32) -> Result<BTreeSet<PathVector>> {
    if r == 0 {
        return Err(Error::Parse("levels start at degree 1".into()));
    }
    let scale = Q::new(1.into(), BigInt::from(r));
    Ok(enumerate(poset, r)?
        .iter()
        .map(|p| p.vector().scale(&scale))
        .collect())
}

/// `Δ_r(S)` computed from the geometry alone: integer points of each dilated
/// facet simplex `r·i_K(Δ(C))`, pulled back and divided by `r`.
pub fn simplex_level_points(poset: &BondedPoset, r: u32) -> Result<BTreeSet<PathVector>> {
    if r == 0 {
        return Err(Error::Parse("levels start at degree 1".into()));
    }
    let scale = Q::new(1.into(), BigInt::from(r));
    let mut out = BTreeSet::new();
    for chain in poset.maximal_chains()? {
        let emb = SimplexEmbedding::new(poset, &chain)?;
        let mut points = BTreeSet::new();
        dilated_points(&emb, r, &mut Vec::new(), &mut points);
        for z in points {
            out.insert(emb.preimage(&z, &q(r as i64)).scale(&scale));
        }
    }
    Ok(out)
}

/// Checks that `i_K` maps `{π/r : π ∈ LS_r(C)}` bijectively onto
/// `(1/r)ℤ^k ∩ i_K(Δ(C))`.
///
/// Both sides are enumerated independently: the left by brute force over
/// all functions on `C` with values in `(1/M)ℤ` filtered by the path
/// conditions, the right by integer points of the dilated simplex.
pub fn verify_integral_structure(poset: &BondedPoset, chain: &[usize], r: u32) -> Result<bool> {
    let emb = SimplexEmbedding::new(poset, chain)?;
    let m = emb.bonds().iter().fold(1, |acc, &b| lcm_u64(acc, b));
    let r_q = q(r as i64);

    let mut left: BTreeSet<Vec<Q>> = BTreeSet::new();
    let mut values = Vec::with_capacity(emb.chain().len());
    let mut paths = Vec::new();
    compositions(r as u64 * m, emb.chain().len(), &mut values, &mut paths);
    for parts in paths {
        let v = PathVector::from_pairs(
            emb.chain()
                .iter()
                .zip(&parts)
                .map(|(&e, &c)| (e, Q::new(BigInt::from(c), BigInt::from(m)))),
        );
        if is_ls_path(poset, &v, r) {
            let img = emb.image(&v);
            if img.iter().any(|x| !x.is_integer()) {
                return Ok(false);
            }
            if emb.preimage(&img, &r_q) != v {
                return Ok(false);
            }
            if !left.insert(img) {
                return Ok(false);
            }
        }
    }

    let mut right: BTreeSet<Vec<Q>> = BTreeSet::new();
    let mut point = Vec::with_capacity(emb.dim());
    dilated_points(&emb, r, &mut point, &mut right);
    Ok(left == right)
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
fn compositions(total: u64, parts: usize, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if parts == 1 {
        acc.push(total);
        out.push(acc.clone());
        acc.pop();
        return;
    }
    for first in 0..=total {
        acc.push(first);
        compositions(total - first, parts - 1, acc, out);
        acc.pop();
    }
}

/// Integer `z ∈ ℤ^k` with `r ≥ z_1/b_1 ≥ … ≥ z_k/b_k ≥ 0`, i.e. `z/r ∈ i_K(Δ(C))`.
fn dilated_points(emb: &SimplexEmbedding, r: u32, point: &mut Vec<Q>, out: &mut BTreeSet<Vec<Q>>) {
    let j = point.len();
    if j == emb.dim() {
        out.insert(point.clone());
        return;
    }
    let b = emb.bonds()[j] as i64;
    let cap = match j {
        0 => q(r as i64),
        _ => &point[j - 1] / q(emb.bonds()[j - 1] as i64),
    };
    let max = (cap * q(b)).floor().to_integer().to_i64().unwrap();
    for z in 0..=max {
        point.push(q(z));
        dilated_points(emb, r, point, out);
        point.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::frac;

    #[test]
    fn faces_of_chain_and_grassmann_poset() {
        let c = fixtures::chain_121();
        assert_eq!(faces(&c).unwrap().len(), 15);
        let g = fixtures::i24();
        let f = faces(&g).unwrap();
        let non_face = vec![g.element("14").unwrap(), g.element("23").unwrap()];
        assert!(!f.contains(&non_face));
        let facets: Vec<_> = f.iter().filter(|c| c.len() == 5).collect();
        assert_eq!(facets.len(), 2);
    }

    #[test]
    fn embedding_of_bonded_chain() {
        let p = fixtures::chain_121();
        let emb = SimplexEmbedding::new(&p, &[0, 1, 2, 3]).unwrap();
        assert_eq!(
            emb.vertices(),
            vec![vec![0, 0, 0], vec![1, 0, 0], vec![1, 2, 0], vec![1, 2, 1]]
        );
        let mid = PathVector::parse(&p, "x:1/2,y:1/2").unwrap();
        assert_eq!(emb.image(&mid), vec![q(1), q(1), q(0)]);
        let bad = PathVector::parse(&p, "e:1/2,x:1/2").unwrap();
        assert_eq!(emb.image(&bad), vec![frac(1, 2), q(0), q(0)]);
        assert_eq!(emb.preimage(&emb.image(&mid), &q(1)), mid);
        assert!(matches!(
            SimplexEmbedding::new(&fixtures::i24(), &[2, 3]),
            Err(Error::NotAChain)
        ));
    }

    #[test]
    fn levels() {
        let a1 = fixtures::a1_bond3();
        assert_eq!(level_points(&a1, 1).unwrap().len(), 4);
        assert_eq!(level_points(&a1, 3).unwrap().len(), 10);
        assert_eq!(level_points(&fixtures::i24(), 1).unwrap().len(), 6);
        for p in [fixtures::i24(), fixtures::chain_121(), fixtures::bonded_diamond()] {
            for r in 1..=3 {
                assert_eq!(level_points(&p, r).unwrap(), simplex_level_points(&p, r).unwrap());
            }
        }
    }

    #[test]
    fn integral_structure_small() {
        let p = fixtures::chain_121();
        for r in 1..=4 {
            assert!(verify_integral_structure(&p, &[0, 1, 2, 3], r).unwrap());
        }
        assert!(verify_integral_structure(&p, &[2], 3).unwrap());
    }
}
