//! Finite graded posets with bonds on their covers.
//!
//! Elements are stored sorted by `(length, label)`, so element indices are
//! already a linear extension of the order. All order structure comes from
//! the covers; labels only break ties in output ordering.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{gcd_u64, lcm_u64};

/// Safety bounds for enumerations that can blow up combinatorially.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximal chains of the whole poset.
    pub max_chains: u64,
    /// Maximal chains inside any single interval (gcd check).
    pub max_interval_chains: u64,
    /// LS paths produced by one enumeration call.
    pub max_paths: u64,
    /// Largest poset for which all linear extensions are listed.
    pub max_extension_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_chains: 1_000_000,
            max_interval_chains: 1_000_000,
            max_paths: 1_000_000,
            max_extension_elements: 8,
        }
    }
}

impl Limits {
    /// Defaults, with `LSPATH_MAX_CHAINS` overriding the enumeration bounds.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var("LSPATH_MAX_CHAINS")
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            limits.max_chains = n;
            limits.max_interval_chains = n;
            limits.max_paths = n;
        }
        limits
    }
}

/// A cover `lower < upper` carrying a positive bond.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub bond: u64,
}

#[derive(Debug, Clone)]
pub struct BondedPoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<Cover>,
    up: Vec<Vec<(usize, u64)>>,
    down: Vec<Vec<(usize, u64)>>,
    length: Vec<usize>,
    leq: Vec<Vec<bool>>,
    limits: Limits,
}

impl PartialEq for BondedPoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.covers == other.covers
    }
}

impl Eq for BondedPoset {}

impl BondedPoset {
    /// Validates and builds a poset from labels and `(lower, upper, bond)` covers.
    pub fn new<S: AsRef<str>>(elements: &[S], covers: &[(S, S, i64)]) -> Result<Self> {
        Self::with_limits(elements, covers, Limits::default())
    }

    pub fn with_limits<S: AsRef<str>>(
        elements: &[S],
        covers: &[(S, S, i64)],
        limits: Limits,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::NoUniqueExtremum("minimal"));
        }
        let mut tmp_index: HashMap<&str, usize> = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if tmp_index.insert(e.as_ref(), i).is_some() {
                return Err(Error::DuplicateLabel(e.as_ref().to_string()));
            }
        }
        let mut edges: Vec<(usize, usize, u64)> = Vec::with_capacity(covers.len());
        for (lo, hi, bond) in covers {
            let (lo, hi) = (lo.as_ref(), hi.as_ref());
            let l = *tmp_index
                .get(lo)
                .ok_or_else(|| Error::UnknownElement(lo.to_string()))?;
            let u = *tmp_index
                .get(hi)
                .ok_or_else(|| Error::UnknownElement(hi.to_string()))?;
            if *bond < 1 {
                return Err(Error::NonPositiveBond {
                    lower: lo.to_string(),
                    upper: hi.to_string(),
                    bond: *bond,
                });
            }
            if l == u {
                return Err(Error::CyclicCovers);
            }
            if edges.iter().any(|&(a, b, _)| a == l && b == u) {
                return Err(Error::RedundantCover {
                    lower: lo.to_string(),
                    upper: hi.to_string(),
                });
            }
            edges.push((l, u, *bond as u64));
        }

        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(l, u, _) in &edges {
            up[l].push(u);
            indeg[u] += 1;
        }
        // Kahn's algorithm; leftovers mean a cycle.
        let mut topo = Vec::with_capacity(n);
        let mut deg = indeg.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&i| deg[i] == 0).collect();
        while let Some(v) = stack.pop() {
            topo.push(v);
            for &w in &up[v] {
                deg[w] -= 1;
                if deg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::CyclicCovers);
        }
        let minimal: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| up[i].is_empty()).collect();
        if minimal.len() != 1 {
            return Err(Error::NoUniqueExtremum("minimal"));
        }
        if maximal.len() != 1 {
            return Err(Error::NoUniqueExtremum("maximal"));
        }

        // Strict reachability via paths of length >= 1, in reverse topological order.
        let mut reach: Vec<Vec<bool>> = vec![vec![false; n]; n];
        for &v in topo.iter().rev() {
            let succ = up[v].clone();
            for w in succ {
                reach[v][w] = true;
                for x in 0..n {
                    if reach[w][x] {
                        reach[v][x] = true;
                    }
                }
            }
        }
        for &(l, u, _) in &edges {
            // Redundant iff some other successor of l reaches u.
            if up[l].iter().any(|&w| w != u && reach[w][u]) {
                return Err(Error::RedundantCover {
                    lower: elements[l].as_ref().to_string(),
                    upper: elements[u].as_ref().to_string(),
                });
            }
        }

        let bottom = minimal[0];
        let mut length: Vec<Option<usize>> = vec![None; n];
        length[bottom] = Some(0);
        for &v in &topo {
            let lv = length[v].ok_or_else(|| {
                Error::NotGraded(format!("`{}` is not above the minimum", elements[v].as_ref()))
            })?;
            for &w in &up[v] {
                match length[w] {
                    None => length[w] = Some(lv + 1),
                    Some(lw) if lw != lv + 1 => {
                        return Err(Error::NotGraded(format!(
                            "chains to `{}` have lengths {} and {}",
                            elements[w].as_ref(),
                            lw,
                            lv + 1
                        )))
                    }
                    _ => {}
                }
            }
        }
        let length: Vec<usize> = length.into_iter().map(|l| l.unwrap()).collect();

        // Re-index by (length, label).
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            (length[a], elements[a].as_ref()).cmp(&(length[b], elements[b].as_ref()))
        });
        let mut new_of = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let labels: Vec<String> = order.iter().map(|&o| elements[o].as_ref().to_string()).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let mut covers: Vec<Cover> = edges
            .iter()
            .map(|&(l, u, b)| Cover {
                lower: new_of[l],
                upper: new_of[u],
                bond: b,
            })
            .collect();
        covers.sort();
        let mut upv = vec![Vec::new(); n];
        let mut downv = vec![Vec::new(); n];
        for c in &covers {
            upv[c.lower].push((c.upper, c.bond));
            downv[c.upper].push((c.lower, c.bond));
        }
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                leq[new_of[a]][new_of[b]] = a == b || reach[a][b];
            }
        }
        let length = order.iter().map(|&o| length[o]).collect();
        Ok(BondedPoset {
            labels,
            index,
            covers,
            up: upv,
            down: downv,
            length,
            leq,
            limits,
        })
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn set_limits(&mut self, limits: Limits) {
        self.limits = limits;
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    /// Upper covers of `e` with their bonds.
    pub fn upper_covers(&self, e: usize) -> &[(usize, u64)] {
        &self.up[e]
    }

    pub fn lower_covers(&self, e: usize) -> &[(usize, u64)] {
        &self.down[e]
    }

    pub fn bond(&self, lower: usize, upper: usize) -> Option<u64> {
        self.up[lower]
            .iter()
            .find(|&&(u, _)| u == upper)
            .map(|&(_, b)| b)
    }

    /// Length function, `ℓ(0̂) = 0`.
    pub fn length_of(&self, e: usize) -> usize {
        self.length[e]
    }

    /// Length of the poset, the length of its maximum.
    pub fn rank(&self) -> usize {
        self.length[self.top()]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    /// Whether `elements` are pairwise comparable.
    pub fn is_chain(&self, elements: &[usize]) -> bool {
        elements
            .iter()
            .enumerate()
            .all(|(i, &a)| elements[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    /// Sorts a chain increasingly; index order refines the poset order.
    pub fn sort_chain(&self, elements: &mut [usize]) {
        elements.sort_unstable();
    }

    /// Labels of a sequence of elements joined by `sep`.
    pub fn format_elements(&self, elements: &[usize], sep: &str) -> String {
        elements
            .iter()
            .map(|&e| self.label(e))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses a comma-separated list of labels.
    pub fn parse_elements(&self, list: &str) -> Result<Vec<usize>> {
        split_list(list).into_iter().map(|s| self.element(s)).collect()
    }

    /// Saturated chains from `lower` to `upper` in lexicographic label order,
    /// failing once more than `bound` have been produced.
    pub fn interval_chains(&self, lower: usize, upper: usize, bound: u64) -> Result<Vec<Vec<usize>>> {
        if !self.leq(lower, upper) {
            return Err(Error::NotComparable(
                self.label(lower).to_string(),
                self.label(upper).to_string(),
            ));
        }
        let mut out = Vec::new();
        let mut path = vec![lower];
        self.chains_dfs(upper, &mut path, &mut out, bound)?;
        Ok(out)
    }

    fn chains_dfs(
        &self,
        target: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        bound: u64,
    ) -> Result<()> {
        let last = *path.last().unwrap();
        if last == target {
            if out.len() as u64 >= bound {
                return Err(Error::TooManyChains(bound));
            }
            out.push(path.clone());
            return Ok(());
        }
        let mut next: Vec<usize> = self.up[last]
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| self.leq(u, target))
            .collect();
        next.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        for u in next {
            path.push(u);
            self.chains_dfs(target, path, out, bound)?;
            path.pop();
        }
        Ok(())
    }

    /// Every maximal chain `0̂ … 1̂`, lexicographic in label sequence.
    pub fn maximal_chains(&self) -> Result<Vec<Vec<usize>>> {
        self.interval_chains(self.bottom(), self.top(), self.limits.max_chains)
    }

    /// Number of saturated chains from `lower` to every element above it.
    fn chain_counts_from(&self, lower: usize) -> Vec<u128> {
        let n = self.len();
        let mut count = vec![0u128; n];
        count[lower] = 1;
        for v in lower..n {
            if count[v] == 0 {
                continue;
            }
            for &(u, _) in &self.up[v] {
                count[u] = count[u].saturating_add(count[v]);
            }
        }
        count
    }

    /// Checks that every interval has a single gcd of bonds along its maximal chains.
    pub fn verify_gcd_condition(&self) -> Result<GcdReport> {
        let n = self.len();
        let mut violations = Vec::new();
        for lower in 0..n {
            let counts = self.chain_counts_from(lower);
            for upper in lower + 1..n {
                if !self.leq(lower, upper) {
                    continue;
                }
                if counts[upper] > self.limits.max_interval_chains as u128 {
                    return Err(Error::IntervalTooLarge {
                        lower: self.label(lower).to_string(),
                        upper: self.label(upper).to_string(),
                        bound: self.limits.max_interval_chains,
                    });
                }
            }
            // gcd -> one witness chain, propagated upward in index order.
            let mut witnesses: Vec<BTreeMap<u64, Vec<usize>>> = vec![BTreeMap::new(); n];
            witnesses[lower].insert(0, vec![lower]);
            for v in lower..n {
                if witnesses[v].is_empty() {
                    continue;
                }
                let here = std::mem::take(&mut witnesses[v]);
                for &(u, bond) in &self.up[v] {
                    for (g, chain) in &here {
                        let g2 = gcd_u64(*g, bond);
                        witnesses[u].entry(g2).or_insert_with(|| {
                            let mut c = chain.clone();
                            c.push(u);
                            c
                        });
                    }
                }
                if v != lower && here.len() > 1 {
                    let mut it = here.iter();
                    let (g1, c1) = it.next().unwrap();
                    let (g2, c2) = it.next().unwrap();
                    violations.push(GcdViolation {
                        lower,
                        upper: v,
                        chain1: c1.clone(),
                        chain2: c2.clone(),
                        gcd1: *g1,
                        gcd2: *g2,
                    });
                }
                witnesses[v] = here;
            }
        }
        Ok(GcdReport {
            ok: violations.is_empty(),
            violations,
        })
    }

    /// gcd of the bonds along one maximal chain of `[lower, upper]`.
    ///
    /// Under the gcd condition the choice of chain does not matter.
    pub fn extended_bond(&self, lower: usize, upper: usize) -> Result<u64> {
        if !self.lt(lower, upper) {
            return Err(Error::NotComparable(
                self.label(lower).to_string(),
                self.label(upper).to_string(),
            ));
        }
        let mut g = 0;
        let mut v = lower;
        while v != upper {
            let &(u, b) = self.up[v]
                .iter()
                .find(|&&(u, _)| self.leq(u, upper))
                .expect("a cover towards the upper end exists");
            g = gcd_u64(g, b);
            v = u;
        }
        Ok(g)
    }

    /// `M_σ`: lcm of the bonds of all covers touching `e`; 1 if there are none.
    pub fn lcm_bonds(&self, e: usize) -> u64 {
        self.up[e]
            .iter()
            .chain(self.down[e].iter())
            .fold(1, |acc, &(_, b)| lcm_u64(acc, b))
    }

    /// The induced poset on `{σ | σ ≤ top}`.
    pub fn subposet_below(&self, top: usize) -> Result<BondedPoset> {
        if top >= self.len() {
            return Err(Error::UnknownElement(format!("#{top}")));
        }
        let keep: Vec<usize> = self.elements().filter(|&e| self.leq(e, top)).collect();
        let labels: Vec<&str> = keep.iter().map(|&e| self.label(e)).collect();
        let covers: Vec<(&str, &str, i64)> = self
            .covers
            .iter()
            .filter(|c| self.leq(c.upper, top))
            .map(|c| (self.label(c.lower), self.label(c.upper), c.bond as i64))
            .collect();
        BondedPoset::with_limits(&labels, &covers, self.limits)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            covers: self
                .covers
                .iter()
                .map(|c| CoverJson {
                    lower: self.label(c.lower).to_string(),
                    upper: self.label(c.upper).to_string(),
                    bond: Some(c.bond as i64),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        Self::from_json_with_limits(json, Limits::default())
    }

    pub fn from_json_with_limits(json: &PosetJson, limits: Limits) -> Result<Self> {
        let covers: Vec<(&str, &str, i64)> = json
            .covers
            .iter()
            .map(|c| (c.lower.as_str(), c.upper.as_str(), c.bond.unwrap_or(1)))
            .collect();
        let elements: Vec<&str> = json.elements.iter().map(String::as_str).collect();
        BondedPoset::with_limits(&elements, &covers, limits)
    }
}

/// Splits on commas outside parentheses, so labels like `(1,-1)` survive.
pub fn split_list(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// Whether some bijection preserves covers and their bonds.
pub fn isomorphic(a: &BondedPoset, b: &BondedPoset) -> bool {
    if a.len() != b.len() || a.covers().len() != b.covers().len() || a.rank() != b.rank() {
        return false;
    }
    let profile = |p: &BondedPoset, e: usize| {
        let mut up: Vec<u64> = p.upper_covers(e).iter().map(|c| c.1).collect();
        let mut down: Vec<u64> = p.lower_covers(e).iter().map(|c| c.1).collect();
        up.sort_unstable();
        down.sort_unstable();
        (p.length_of(e), up, down)
    };
    let pa: Vec<_> = a.elements().map(|e| profile(a, e)).collect();
    let pb: Vec<_> = b.elements().map(|e| profile(b, e)).collect();
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    extend_iso(a, b, &pa, &pb, 0, &mut map, &mut used)
}

fn extend_iso<T: PartialEq>(
    a: &BondedPoset,
    b: &BondedPoset,
    pa: &[T],
    pb: &[T],
    e: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if e == a.len() {
        return true;
    }
    for f in b.elements() {
        if used[f] || pa[e] != pb[f] {
            continue;
        }
        // covers into already mapped elements must agree, with bonds
        let consistent = a.lower_covers(e).iter().all(|&(l, bond)| b.bond(map[l], f) == Some(bond));
        if !consistent {
            continue;
        }
        map[e] = f;
        used[f] = true;
        if extend_iso(a, b, pa, pb, e + 1, map, used) {
            return true;
        }
        used[f] = false;
        map[e] = usize::MAX;
    }
    false
}

/// Witness pair of maximal chains of one interval with different bond gcds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdViolation {
    pub lower: usize,
    pub upper: usize,
    pub chain1: Vec<usize>,
    pub chain2: Vec<usize>,
    pub gcd1: u64,
    pub gcd2: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdReport {
    pub ok: bool,
    pub violations: Vec<GcdViolation>,
}

impl GcdReport {
    /// Turns the first violation into an error.
    pub fn into_result(self, poset: &BondedPoset) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::GcdCondition {
                lower: poset.label(v.lower).to_string(),
                upper: poset.label(v.upper).to_string(),
                gcd1: v.gcd1,
                gcd2: v.gcd2,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub lower: String,
    pub upper: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bond: Option<i64>,
}

/// On-disk poset format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<CoverJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn grassmann_fixture_is_valid() {
        let p = fixtures::i24();
        assert_eq!(p.len(), 6);
        assert_eq!(p.rank(), 4);
        assert_eq!(p.label(p.bottom()), "12");
        assert_eq!(p.label(p.top()), "34");
        assert!(!p.comparable(p.element("14").unwrap(), p.element("23").unwrap()));
    }

    #[test]
    fn bonded_chain() {
        let p = fixtures::chain_121();
        assert_eq!(p.rank(), 3);
        let [e, x, y, z] = ["e", "x", "y", "z"].map(|l| p.element(l).unwrap());
        assert_eq!(p.extended_bond(e, z).unwrap(), 1);
        assert_eq!(p.extended_bond(x, z).unwrap(), 1);
        assert_eq!(p.extended_bond(e, y).unwrap(), 1);
        assert_eq!(p.extended_bond(x, y).unwrap(), 2);
        assert_eq!(p.lcm_bonds(x), 2);
        assert_eq!(p.lcm_bonds(y), 2);
        assert_eq!(p.lcm_bonds(e), 1);
        assert_eq!(p.lcm_bonds(z), 1);
        assert!(matches!(p.extended_bond(z, x), Err(Error::NotComparable(..))));
    }

    #[test]
    fn gcd_of_two_step_chain() {
        let p = BondedPoset::new(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]).unwrap();
        assert_eq!(p.extended_bond(0, 2).unwrap(), 2);
    }

    #[test]
    fn redundant_top_cover_rejected() {
        let err = BondedPoset::new(
            &["0", "a", "1"],
            &[("0", "a", 1), ("a", "1", 1), ("0", "1", 1)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::RedundantCover { .. } | Error::NotGraded(_)));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            BondedPoset::new(&["a", "b"], &[("a", "b", 0)]),
            Err(Error::NonPositiveBond { .. })
        ));
        assert!(matches!(
            BondedPoset::new(&["a", "b", "c"], &[("a", "b", 1)]),
            Err(Error::NoUniqueExtremum(_))
        ));
        assert!(matches!(
            BondedPoset::new(&["a", "b"], &[("a", "q", 1)]),
            Err(Error::UnknownElement(_))
        ));
        assert!(matches!(
            BondedPoset::new(&["a", "a"], &[]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            BondedPoset::new(&["a", "b"], &[("a", "b", 1), ("b", "a", 1)]),
            Err(Error::CyclicCovers) | Err(Error::NoUniqueExtremum(_))
        ));
        // Two chains of different lengths into the top.
        assert!(matches!(
            BondedPoset::new(
                &["0", "a", "b", "c", "1"],
                &[("0", "a", 1), ("a", "b", 1), ("b", "1", 1), ("0", "c", 1), ("c", "1", 1)]
            ),
            Err(Error::NotGraded(_))
        ));
    }

    #[test]
    fn gcd_condition_reports_witnesses() {
        assert!(fixtures::i24().verify_gcd_condition().unwrap().ok);
        assert!(fixtures::chain_121().verify_gcd_condition().unwrap().ok);
        let bad = fixtures::bad_diamond();
        let report = bad.verify_gcd_condition().unwrap();
        assert!(!report.ok);
        let v = &report.violations[0];
        assert_eq!((bad.label(v.lower), bad.label(v.upper)), ("0", "1"));
        assert_eq!((v.gcd1, v.gcd2), (2, 3));
        assert_eq!(v.chain1.len(), 3);
        assert!(matches!(
            report.into_result(&bad),
            Err(Error::GcdCondition { .. })
        ));
    }

    #[test]
    fn interval_bound_is_enforced() {
        let mut p = fixtures::i24();
        p.set_limits(Limits {
            max_interval_chains: 1,
            ..Limits::default()
        });
        assert!(matches!(
            p.verify_gcd_condition(),
            Err(Error::IntervalTooLarge { .. })
        ));
        assert!(p.maximal_chains().is_ok());
        p.set_limits(Limits {
            max_chains: 1,
            ..Limits::default()
        });
        assert!(matches!(p.maximal_chains(), Err(Error::TooManyChains(1))));
    }

    #[test]
    fn maximal_chains_of_fixtures() {
        let p = fixtures::i24();
        let chains: Vec<String> = p
            .maximal_chains()
            .unwrap()
            .iter()
            .map(|c| p.format_elements(c, ","))
            .collect();
        assert_eq!(chains, ["12,13,14,24,34", "12,13,23,24,34"]);
        assert_eq!(fixtures::chain_121().maximal_chains().unwrap().len(), 1);
        assert_eq!(fixtures::diamond().maximal_chains().unwrap().len(), 2);
    }

    #[test]
    fn restriction_below() {
        let p = fixtures::i24();
        let below = p.subposet_below(p.element("24").unwrap()).unwrap();
        assert_eq!(below.len(), 5);
        assert_eq!(below.label(below.top()), "24");
        assert!(below.verify_gcd_condition().unwrap().ok);
        assert_eq!(p.subposet_below(p.top()).unwrap(), p);
        let point = p.subposet_below(p.bottom()).unwrap();
        assert_eq!(point.len(), 1);
        assert_eq!(point.lcm_bonds(point.bottom()), 1);
        assert_eq!(point.rank(), 0);
    }

    #[test]
    fn json_bonds_default_to_one() {
        let json: PosetJson = serde_json::from_str(
            r#"{"elements": ["a", "b"], "covers": [{"lower": "a", "upper": "b"}]}"#,
        )
        .unwrap();
        let p = BondedPoset::from_json(&json).unwrap();
        assert_eq!(p.bond(0, 1), Some(1));
        let back = BondedPoset::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
    }
}
