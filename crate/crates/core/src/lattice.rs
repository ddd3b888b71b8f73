//! Integer lattices in echelon (Hermite) form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sublattice of `ℤ^dim` stored by an echelon basis with positive pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    dim: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntegerLattice {
    pub fn from_generators(dim: usize, generators: &[Vec<BigInt>]) -> Self {
        let mut pending: Vec<Vec<BigInt>> = generators
            .iter()
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .cloned()
            .collect();
        let mut rows = Vec::new();
        for col in 0..dim {
            loop {
                let active: Vec<usize> = (0..pending.len())
                    .filter(|&i| !pending[i][col].is_zero())
                    .collect();
                if active.len() <= 1 {
                    if let Some(&i) = active.first() {
                        let mut row = pending.swap_remove(i);
                        if row[col].is_negative() {
                            row.iter_mut().for_each(|x| *x = -x.clone());
                        }
                        rows.push((col, row));
                    }
                    break;
                }
                let pivot = *active
                    .iter()
                    .min_by(|&&a, &&b| pending[a][col].abs().cmp(&pending[b][col].abs()))
                    .unwrap();
                let prow = pending[pivot].clone();
                for &i in &active {
                    if i == pivot {
                        continue;
                    }
                    let factor = pending[i][col].div_floor(&prow[col]);
                    for (x, p) in pending[i].iter_mut().zip(&prow) {
                        *x -= &factor * p;
                    }
                }
            }
            pending.retain(|g| g.iter().any(|x| !x.is_zero()));
        }
        // Reduce entries above each pivot into [0, pivot).
        for i in (0..rows.len()).rev() {
            let (col, prow) = rows[i].clone();
            for row in rows.iter_mut().take(i) {
                let factor = row.1[col].div_floor(&prow[col]);
                if !factor.is_zero() {
                    for (x, p) in row.1.iter_mut().zip(&prow) {
                        *x -= &factor * p;
                    }
                }
            }
        }
        IntegerLattice { dim, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (col, row) in &self.rows {
            let (quot, rem) = v[*col].div_rem(&row[*col]);
            if !rem.is_zero() {
                return false;
            }
            if !quot.is_zero() {
                for (x, p) in v.iter_mut().zip(row) {
                    *x -= &quot * p;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn echelon_basis_of_even_sum_lattice() {
        let l = IntegerLattice::from_generators(2, &[iv(&[2, 0]), iv(&[1, 1]), iv(&[0, 2])]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&iv(&[1, -1])));
        assert!(l.contains(&iv(&[3, 5])));
        assert!(!l.contains(&iv(&[1, 0])));
        assert_eq!(l.basis(), vec![iv(&[1, 1]), iv(&[0, 2])]);
    }

    #[test]
    fn rank_deficient() {
        let l = IntegerLattice::from_generators(3, &[iv(&[2, 4, 6]), iv(&[3, 6, 9])]);
        assert_eq!(l.rank(), 1);
        assert!(l.contains(&iv(&[1, 2, 3])));
        assert!(!l.contains(&iv(&[1, 2, 4])));
    }
}
