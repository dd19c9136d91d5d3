//! Dense exact Gaussian elimination. Systems here are tiny (tens of
//! unknowns), so there is no attempt at sparsity or pivoting heuristics
//! beyond "first nonzero".

use crate::scalar::Scalar;

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Rref<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl<T: Scalar> Rref<T> {
    pub fn new(mut m: Vec<Vec<T>>, cols: usize) -> Self {
        debug_assert!(m.iter().all(|r| r.len() == cols));
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = T::one() / m[r][c].clone();
            for x in m[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for i in 0..m.len() {
                if i == r || m[i][c].is_zero() {
                    continue;
                }
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i][c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        Self { rows: m, pivots, cols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical kernel basis: one vector per free column, with a 1 in that
    /// column and zeros in the other free columns.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![T::zero(); self.cols];
                v[free] = T::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }
}

pub fn kernel<T: Scalar>(m: Vec<Vec<T>>, cols: usize) -> Vec<Vec<T>> {
    Rref::new(m, cols).kernel()
}

pub fn rank<T: Scalar>(m: Vec<Vec<T>>, cols: usize) -> usize {
    Rref::new(m, cols).rank()
}
