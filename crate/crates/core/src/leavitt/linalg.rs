//! Exact sparse linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::element::Coeff;

/// A sparse vector indexed by column.
pub type SparseVec = BTreeMap<usize, Coeff>;

/// A row space kept in reduced row echelon form: every stored row has a
/// leading 1 in its pivot column and zeros in every other pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

fn axpy(target: &mut SparseVec, factor: &Coeff, row: &SparseVec) {
    for (&col, x) in row {
        let entry = target.entry(col).or_insert_with(Coeff::zero);
        *entry -= factor * x;
        if entry.is_zero() {
            target.remove(&col);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// The residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v: SparseVec = v
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(&c, x)| (c, x.clone()))
            .collect();
        for (pivot, row) in &self.rows {
            if let Some(factor) = v.get(pivot).cloned() {
                axpy(&mut v, &factor, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = Coeff::one() / lead;
        for x in v.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(factor) = row.get(&pivot).cloned() {
                axpy(row, &factor, &v);
            }
        }
        self.rows.insert(pivot, v);
        true
    }

    /// A basis of `{x : row · x = 0 for every row}` over columns `0..ncols`,
    /// one vector per free column, in increasing free-column order.
    pub fn kernel(&self, ncols: usize) -> Vec<SparseVec> {
        (0..ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|free| {
                let mut x = SparseVec::new();
                x.insert(free, Coeff::one());
                for (&pivot, row) in &self.rows {
                    if let Some(a) = row.get(&free) {
                        x.insert(pivot, -a.clone());
                    }
                }
                x
            })
            .collect()
    }
}

/// Kernel of the matrix whose rows are `rows`.
pub fn nullspace<'a>(
    rows: impl IntoIterator<Item = &'a SparseVec>,
    ncols: usize,
) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for row in rows {
        ech.insert(row);
    }
    ech.kernel(ncols)
}
