//! Sparse exact vectors in `ℚ^S`, the common codomain of paths and valuations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::BondedPoset;
use crate::rational::{format_q, parse_q, Q};

/// Sparse mapping element index → nonzero rational.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PathVector(BTreeMap<usize, Q>);

impl PathVector {
    pub fn zero() -> Self {
        PathVector(BTreeMap::new())
    }

    /// The indicator vector of one element, scaled by `c`.
    pub fn unit(e: usize, c: Q) -> Self {
        let mut v = PathVector::zero();
        v.set(e, c);
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> Self {
        let mut v = PathVector::zero();
        for (e, c) in pairs {
            v.add_to(e, &c);
        }
        v
    }

    pub fn get(&self, e: usize) -> Q {
        self.0.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, e: usize, c: Q) {
        if c.is_zero() {
            self.0.remove(&e);
        } else {
            self.0.insert(e, c);
        }
    }

    pub fn add_to(&mut self, e: usize, c: &Q) {
        let v = self.get(e) + c;
        self.set(e, v);
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Support in increasing index order.
    pub fn support(&self) -> Vec<usize> {
        self.0.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.0.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of all coordinates.
    pub fn total(&self) -> Q {
        self.0.values().fold(Q::zero(), |acc, c| acc + c)
    }

    pub fn scale(&self, c: &Q) -> PathVector {
        if c.is_zero() {
            return PathVector::zero();
        }
        PathVector(self.0.iter().map(|(&e, x)| (e, x * c)).collect())
    }

    /// Keeps only coordinates whose element satisfies `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(usize) -> bool) -> PathVector {
        PathVector(
            self.0
                .iter()
                .filter(|(&e, _)| keep(e))
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|c| !c.is_negative())
    }

    /// Relabels coordinates through `map`, summing collisions.
    pub fn map_support(&self, mut map: impl FnMut(usize) -> usize) -> PathVector {
        PathVector::from_pairs(self.0.iter().map(|(&e, c)| (map(e), c.clone())))
    }

    pub fn to_json(&self, poset: &BondedPoset) -> VectorJson {
        VectorJson {
            values: self
                .0
                .iter()
                .map(|(&e, c)| (poset.label(e).to_string(), format_q(c)))
                .collect(),
        }
    }

    pub fn from_json(poset: &BondedPoset, json: &VectorJson) -> Result<Self> {
        let mut v = PathVector::zero();
        for (label, value) in &json.values {
            v.add_to(poset.element(label)?, &parse_q(value)?);
        }
        Ok(v)
    }

    /// Parses `"a:1/2,b:1/2"` or bare `"a"` (coefficient 1) style text.
    pub fn parse(poset: &BondedPoset, text: &str) -> Result<Self> {
        let mut v = PathVector::zero();
        for part in crate::poset::split_list(text) {
            match part.split_once(':') {
                Some((label, c)) => v.add_to(poset.element(label.trim())?, &parse_q(c)?),
                None => v.add_to(poset.element(part)?, &Q::from_integer(1.into())),
            }
        }
        Ok(v)
    }

    /// Human readable `1/2·x + 1/2·y` form.
    pub fn display(&self, poset: &BondedPoset) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.0
            .iter()
            .map(|(&e, c)| {
                if c == &Q::from_integer(1.into()) {
                    poset.label(e).to_string()
                } else {
                    format!("{}·{}", c, poset.label(e))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Ord for PathVector {
    /// Support as an index sequence first, then the value sequence.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .keys()
            .cmp(other.0.keys())
            .then_with(|| self.0.values().cmp(other.0.values()))
    }
}

impl PartialOrd for PathVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&PathVector> for PathVector {
    fn add_assign(&mut self, rhs: &PathVector) {
        for (&e, c) in &rhs.0 {
            self.add_to(e, c);
        }
    }
}

impl SubAssign<&PathVector> for PathVector {
    fn sub_assign(&mut self, rhs: &PathVector) {
        for (&e, c) in &rhs.0 {
            self.add_to(e, &-c);
        }
    }
}

impl Add<&PathVector> for &PathVector {
    type Output = PathVector;
    fn add(self, rhs: &PathVector) -> PathVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&PathVector> for &PathVector {
    type Output = PathVector;
    fn sub(self, rhs: &PathVector) -> PathVector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &PathVector {
    type Output = PathVector;
    fn neg(self) -> PathVector {
        PathVector(self.0.iter().map(|(&e, c)| (e, -c)).collect())
    }
}

/// `{"values": {"label": "p/q"}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorJson {
    pub values: BTreeMap<String, String>,
}

impl VectorJson {
    pub fn parse_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
