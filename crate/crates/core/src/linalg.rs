//! Exact membership and coordinates in the span of a family of polynomials.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{Exponents, Poly};
use crate::rational::Q;

#[derive(Debug, Clone)]
struct Row {
    pivot: Exponents,
    poly: Poly,
    /// The row as a combination of the generators.
    combo: BTreeMap<usize, Q>,
}

/// Row echelon form of a list of generators, remembering how each row was
/// built so that solutions come back in generator coordinates.
///
/// Each row is monic at its pivot, the smallest exponent vector it has after
/// reduction by all earlier rows.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    generators: usize,
    rows: Vec<Row>,
    dependent: Vec<usize>,
}

fn add_combo(acc: &mut BTreeMap<usize, Q>, other: &BTreeMap<usize, Q>, c: &Q) {
    for (i, x) in other {
        let v = acc.entry(*i).or_insert_with(Q::zero);
        *v += x * c;
        if v.is_zero() {
            acc.remove(i);
        }
    }
}

impl SpanSolver {
    pub fn new(generators: &[Poly]) -> Self {
        let mut s = SpanSolver {
            generators: 0,
            rows: Vec::new(),
            dependent: Vec::new(),
        };
        for g in generators {
            s.push(g.clone());
        }
        s
    }

    fn reduce(&self, mut poly: Poly, combo: &mut BTreeMap<usize, Q>) -> Poly {
        for row in &self.rows {
            let c = poly.coefficient(&row.pivot);
            if !c.is_zero() {
                let minus = -c;
                poly.add_scaled(&row.poly, &minus);
                add_combo(combo, &row.combo, &minus);
            }
        }
        poly
    }

    /// Appends a generator; returns whether it raised the rank.
    pub fn push(&mut self, g: Poly) -> bool {
        let index = self.generators;
        self.generators += 1;
        let mut combo = BTreeMap::from([(index, Q::one())]);
        let reduced = self.reduce(g, &mut combo);
        let Some((pivot, lead)) = reduced.terms().iter().next() else {
            self.dependent.push(index);
            return false;
        };
        let pivot = pivot.clone();
        let inv = Q::one() / lead;
        let poly = reduced.scale(&inv);
        let combo = combo.into_iter().map(|(i, c)| (i, c * &inv)).collect();
        self.rows.push(Row { pivot, poly, combo });
        true
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Generators that were combinations of earlier ones.
    pub fn dependent(&self) -> &[usize] {
        &self.dependent
    }

    /// Coefficients `c` with `target = Σ c_i·g_i`, or `None` outside the span.
    ///
    /// With dependent generators the solution puts zero on them.
    pub fn solve(&self, target: &Poly) -> Option<BTreeMap<usize, Q>> {
        let mut combo = BTreeMap::new();
        let residual = self.reduce(target.clone(), &mut combo);
        residual.is_zero().then(|| {
            combo
                .into_iter()
                .map(|(i, c)| (i, -c))
                .collect()
        })
    }

    pub fn contains(&self, target: &Poly) -> bool {
        let mut combo = BTreeMap::new();
        self.reduce(target.clone(), &mut combo).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn solve_in_span() {
        let x = Poly::var(3, 0);
        let y = Poly::var(3, 1);
        let z = Poly::var(3, 2);
        let gens = vec![x.add(&y), y.add(&z), x.sub(&z)];
        let s = SpanSolver::new(&gens);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.dependent(), &[2]);
        let target = x.scale(&q(2)).add(&y.scale(&q(3))).add(&z);
        let c = s.solve(&target).unwrap();
        let mut back = Poly::zero(3);
        for (i, coeff) in &c {
            back.add_scaled(&gens[*i], coeff);
        }
        assert_eq!(back, target);
        assert!(s.solve(&x).is_none());
        assert!(!s.contains(&z));
    }
}
