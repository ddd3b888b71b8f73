//! Reverse lexicographic orders on `ℚ^S` and the partial order ⊴ they
//! share.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poset::BondedPoset;
use crate::vector::PathVector;

/// A total order on the poset elements refining the partial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearExtension {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl LinearExtension {
    /// Validates that `order` lists every element once and respects `≤`.
    pub fn new(poset: &BondedPoset, order: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        let mut position = vec![usize::MAX; n];
        for (i, &e) in order.iter().enumerate() {
            if e >= n || position[e] != usize::MAX {
                return Err(Error::Parse("extension must list every element once".into()));
            }
            position[e] = i;
        }
        if order.len() != n {
            return Err(Error::Parse("extension must list every element once".into()));
        }
        for c in poset.covers() {
            if position[c.lower] > position[c.upper] {
                return Err(Error::Parse(format!(
                    "extension puts {} after {}",
                    poset.label(c.lower),
                    poset.label(c.upper)
                )));
            }
        }
        Ok(LinearExtension { order, position })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, e: usize) -> usize {
        self.position[e]
    }
}

/// Sort by `(length, label)`.
///
/// Elements are stored in exactly this order, so this is the identity.
pub fn default_extension(poset: &BondedPoset) -> LinearExtension {
    let order: Vec<usize> = poset.elements().collect();
    LinearExtension {
        position: order.clone(),
        order,
    }
}

fn differing(v: &PathVector, w: &PathVector) -> Vec<(usize, Ordering)> {
    let keys: BTreeSet<usize> = v.support().into_iter().chain(w.support()).collect();
    keys.into_iter()
        .filter_map(|e| {
            let ord = v.get(e).cmp(&w.get(e));
            (ord != Ordering::Equal).then_some((e, ord))
        })
        .collect()
}

/// Reverse lexicographic comparison: the extension-largest differing
/// coordinate decides, smaller value is smaller.
pub fn rlex_compare(v: &PathVector, w: &PathVector, ext: &LinearExtension) -> Ordering {
    differing(v, w)
        .into_iter()
        .max_by_key(|&(e, _)| ext.position(e))
        .map_or(Ordering::Equal, |(_, ord)| ord)
}

/// Outcome of comparing under the partial order ⊴.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Comparison {
    pub fn as_str(self) -> &'static str {
        match self {
            Comparison::Less => "LT",
            Comparison::Equal => "EQ",
            Comparison::Greater => "GT",
            Comparison::Incomparable => "INCOMPARABLE",
        }
    }

    /// `v ⊴ w`.
    pub fn is_le(self) -> bool {
        matches!(self, Comparison::Less | Comparison::Equal)
    }
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

/// `v ⊴ w` iff `v ≼ w` for every linear extension; decided on the
/// ≤-maximal coordinates where the vectors differ.
pub fn triangle_compare(poset: &BondedPoset, v: &PathVector, w: &PathVector) -> Result<Comparison> {
    if let Some(e) = v
        .support()
        .into_iter()
        .chain(w.support())
        .find(|&e| e >= poset.len())
    {
        return Err(Error::UnknownElement(format!("#{e}")));
    }
    let diff = differing(v, w);
    if diff.is_empty() {
        return Ok(Comparison::Equal);
    }
    let maximal = diff
        .iter()
        .filter(|&&(e, _)| !diff.iter().any(|&(f, _)| poset.lt(e, f)));
    let mut dirs = maximal.map(|&(_, o)| o);
    let first = dirs.next().unwrap();
    Ok(if dirs.all(|o| o == first) {
        first.into()
    } else {
        Comparison::Incomparable
    })
}

/// All linear extensions, lexicographic in their label sequences.
pub fn linear_extensions(poset: &BondedPoset) -> Result<Vec<LinearExtension>> {
    let bound = poset.limits().max_extension_elements;
    if poset.len() > bound {
        return Err(Error::TooLarge {
            what: "linear extension enumeration",
            bound: bound as u64,
        });
    }
    let n = poset.len();
    let mut missing: Vec<usize> = (0..n).map(|e| poset.lower_covers(e).len()).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    extend(poset, &mut missing, &mut current, &mut out);
    Ok(out)
}

fn extend(
    poset: &BondedPoset,
    missing: &mut [usize],
    current: &mut Vec<usize>,
    out: &mut Vec<LinearExtension>,
) {
    if current.len() == poset.len() {
        out.push(LinearExtension::new(poset, current.clone()).expect("topological order"));
        return;
    }
    let mut ready: Vec<usize> = poset
        .elements()
        .filter(|&e| missing[e] == 0 && !current.contains(&e))
        .collect();
    ready.sort_by(|&a, &b| poset.label(a).cmp(poset.label(b)));
    for e in ready {
        current.push(e);
        for &(u, _) in poset.upper_covers(e) {
            missing[u] -= 1;
        }
        extend(poset, missing, current, out);
        for &(u, _) in poset.upper_covers(e) {
            missing[u] += 1;
        }
        current.pop();
    }
}

/// `v ⊴ w` decided by brute force over every linear extension.
pub fn triangle_compare_by_extensions(
    poset: &BondedPoset,
    v: &PathVector,
    w: &PathVector,
) -> Result<Comparison> {
    let exts = linear_extensions(poset)?;
    let all = |o: Ordering| exts.iter().all(|x| rlex_compare(v, w, x) == o);
    Ok(if v == w {
        Comparison::Equal
    } else if all(Ordering::Less) {
        Comparison::Less
    } else if all(Ordering::Greater) {
        Comparison::Greater
    } else {
        Comparison::Incomparable
    })
}

/// The ≼-minimum of a nonempty family.
pub fn rlex_min<'a, I>(values: I, ext: &LinearExtension) -> Option<&'a PathVector>
where
    I: IntoIterator<Item = &'a PathVector>,
{
    values
        .into_iter()
        .min_by(|a, b| rlex_compare(a, b, ext))
}

/// `v ≻ 0` in reverse-lex order.
pub fn is_positive(v: &PathVector, ext: &LinearExtension) -> bool {
    rlex_compare(v, &PathVector::zero(), ext) == Ordering::Greater
}

/// Largest-position coordinate with a nonzero value.
pub fn leading_coordinate(v: &PathVector, ext: &LinearExtension) -> Option<usize> {
    v.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, _)| e)
        .max_by_key(|&e| ext.position(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn v(p: &BondedPoset, text: &str) -> PathVector {
        PathVector::parse(p, text).unwrap()
    }

    #[test]
    fn default_extension_of_grassmann_poset() {
        let p = fixtures::i24();
        let ext = default_extension(&p);
        assert_eq!(p.format_elements(ext.order(), ","), "12,13,14,23,24,34");
        let d = fixtures::diamond();
        assert_eq!(d.format_elements(default_extension(&d).order(), ","), "0,a,b,1");
    }

    #[test]
    fn rlex_examples() {
        let p = fixtures::i24();
        let ext = default_extension(&p);
        assert_eq!(rlex_compare(&v(&p, "14,23"), &v(&p, "13,24"), &ext), Ordering::Less);
        assert_eq!(rlex_compare(&v(&p, "13,24"), &v(&p, "12,34"), &ext), Ordering::Less);
        assert_eq!(rlex_compare(&v(&p, "13,24"), &v(&p, "13,24"), &ext), Ordering::Equal);
    }

    #[test]
    fn triangle_examples() {
        let p = fixtures::i24();
        assert_eq!(
            triangle_compare(&p, &v(&p, "13,24"), &v(&p, "12,34")).unwrap(),
            Comparison::Less
        );
        let d = fixtures::diamond();
        assert_eq!(
            triangle_compare(&d, &v(&d, "a"), &v(&d, "b")).unwrap(),
            Comparison::Incomparable
        );
        assert_eq!(
            triangle_compare(&d, &v(&d, "a"), &v(&d, "a")).unwrap(),
            Comparison::Equal
        );
        assert_eq!(
            triangle_compare_by_extensions(&d, &v(&d, "a"), &v(&d, "b")).unwrap(),
            Comparison::Incomparable
        );
    }

    #[test]
    fn extension_counts() {
        let chain = BondedPoset::new(&["a", "b", "c"], &[("a", "b", 1), ("b", "c", 1)]).unwrap();
        assert_eq!(linear_extensions(&chain).unwrap().len(), 1);
        assert_eq!(linear_extensions(&fixtures::antichain3()).unwrap().len(), 6);
        let exts = linear_extensions(&fixtures::i24()).unwrap();
        assert_eq!(exts.len(), 2);
        let p = fixtures::i24();
        assert_eq!(p.format_elements(exts[1].order(), ","), "12,13,23,14,24,34");
    }

    #[test]
    fn extension_validation() {
        let p = fixtures::diamond();
        assert!(LinearExtension::new(&p, vec![0, 2, 1, 3]).is_ok());
        assert!(LinearExtension::new(&p, vec![1, 0, 2, 3]).is_err());
        assert!(LinearExtension::new(&p, vec![0, 1, 2]).is_err());
    }
}
