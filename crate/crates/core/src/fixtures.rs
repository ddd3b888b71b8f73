//! Small posets used by the examples, tests and the acceptance suite.

use crate::poset::BondedPoset;

fn build(elements: &[&str], covers: &[(&str, &str, i64)]) -> BondedPoset {
    BondedPoset::new(elements, covers).expect("fixture poset is valid")
}

/// `I(2,4)`: two-subsets of `{1,2,3,4}` under componentwise order.
pub fn i24() -> BondedPoset {
    build(
        &["12", "13", "14", "23", "24", "34"],
        &[
            ("12", "13", 1),
            ("13", "14", 1),
            ("13", "23", 1),
            ("14", "24", 1),
            ("23", "24", 1),
            ("24", "34", 1),
        ],
    )
}

/// The chain `e < x < y < z` with bonds `1, 2, 1` (the `B2` vector representation).
pub fn chain_121() -> BondedPoset {
    build(
        &["e", "x", "y", "z"],
        &[("e", "x", 1), ("x", "y", 2), ("y", "z", 1)],
    )
}

/// `e < s` with bond 3 (`A1`, highest weight `3ω`).
pub fn a1_bond3() -> BondedPoset {
    build(&["e", "s"], &[("e", "s", 3)])
}

/// `0 < a, b < 1` with all bonds 1.
pub fn diamond() -> BondedPoset {
    build(
        &["0", "a", "b", "1"],
        &[("0", "a", 1), ("a", "1", 1), ("0", "b", 1), ("b", "1", 1)],
    )
}

/// A diamond whose bonds satisfy the gcd condition but are not all 1.
pub fn bonded_diamond() -> BondedPoset {
    build(
        &["0", "a", "b", "1"],
        &[("0", "a", 2), ("a", "1", 1), ("0", "b", 1), ("b", "1", 2)],
    )
}

/// A diamond violating the gcd condition: gcd 2 through `a`, 3 through `b`.
pub fn bad_diamond() -> BondedPoset {
    build(
        &["0", "a", "b", "1"],
        &[("0", "a", 2), ("a", "1", 2), ("0", "b", 3), ("b", "1", 3)],
    )
}

/// Three incomparable middles between a bottom and a top.
pub fn antichain3() -> BondedPoset {
    build(
        &["0", "a", "b", "c", "1"],
        &[
            ("0", "a", 1),
            ("0", "b", 1),
            ("0", "c", 1),
            ("a", "1", 1),
            ("b", "1", 1),
            ("c", "1", 1),
        ],
    )
}

/// The one-element poset.
pub fn point() -> BondedPoset {
    build(&["p"], &[])
}

/// Every valid fixture (gcd condition holds), with a name.
pub fn all() -> Vec<(&'static str, BondedPoset)> {
    vec![
        ("i24", i24()),
        ("chain_121", chain_121()),
        ("a1_bond3", a1_bond3()),
        ("diamond", diamond()),
        ("bonded_diamond", bonded_diamond()),
        ("antichain3", antichain3()),
        ("point", point()),
    ]
}
