//! Exact sparse linear algebra over cyclotomic fields.

use std::collections::{BTreeMap, HashMap};

use crate::cyclotomic::Cyclotomic;

/// A sparse vector indexed by basis position.
pub type SparseVec = BTreeMap<usize, Cyclotomic>;

/// A subspace kept in fully reduced row echelon form: every stored row has
/// coefficient 1 at its pivot and 0 at every other pivot.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    rows: Vec<SparseVec>,
    pivots: HashMap<usize, usize>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn spanned_by<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut s = Subspace::new();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        // rows vanish on each other's pivots, so one pass over the original
        // support suffices
        for col in v.keys() {
            let Some(&r) = self.pivots.get(col) else { continue };
            let Some(c) = out.get(col).cloned() else { continue };
            if c.is_zero() {
                continue;
            }
            axpy(&mut out, &c.neg(), &self.rows[r]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else { return false };
        let inv = lead.inv().expect("nonzero leading coefficient");
        for c in r.values_mut() {
            *c = c.mul(&inv);
        }
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &c.neg(), &r);
            }
        }
        r.insert(p, Cyclotomic::one());
        self.pivots.insert(p, self.rows.len());
        self.rows.push(r);
        true
    }
}

/// `y += a * x`, dropping entries that cancel.
pub fn axpy(y: &mut SparseVec, a: &Cyclotomic, x: &SparseVec) {
    for (k, v) in x {
        let t = a.mul(v);
        match y.get_mut(k) {
            Some(e) => {
                *e = e.add(&t);
                if e.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                if !t.is_zero() {
                    y.insert(*k, t);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, c)| (k, Cyclotomic::from_integer(c))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut s = Subspace::new();
        assert!(s.insert(&v(&[(0, 1), (1, 2)])));
        assert!(s.insert(&v(&[(1, 1), (2, 1)])));
        assert!(!s.insert(&v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[(0, 2), (1, 4)])));
        assert!(!s.contains(&v(&[(2, 1)])));
        assert!(s.contains(&v(&[(0, 1), (2, -2)])));
    }

    #[test]
    fn cyclotomic_coefficients() {
        let z = Cyclotomic::root_of_unity(3, 1);
        let mut s = Subspace::new();
        let a: SparseVec = [(0, Cyclotomic::one()), (1, z.clone())].into_iter().collect();
        s.insert(&a);
        let b: SparseVec = [(0, z.clone()), (1, z.mul(&z))].into_iter().collect();
        assert!(s.contains(&b));
        let c: SparseVec = [(0, z.clone()), (1, z.clone())].into_iter().collect();
        assert!(!s.contains(&c));
    }
}
