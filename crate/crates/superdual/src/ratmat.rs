//! Exact linear algebra over the rationals: rank, nullspace dimension, and
//! membership of a vector in the span of a family. Plain Gaussian
//! elimination with `BigRational` pivots; no numerical rank decisions.

use num::{BigRational, Zero};

#[derive(Debug, Clone)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> RatMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = RatMatrix::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m.data[i * c + j] = v;
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    /// Row-echelon rank by exact elimination. Consumes a working copy.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..cols {
            // find a pivot
            let mut pr = None;
            for r in pivot_row..rows {
                if !a[r * cols + col].is_zero() {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            a.swap_chunks(pivot_row, pr, cols);
            let inv = a[pivot_row * cols + col].recip();
            for c in col..cols {
                let v = &a[pivot_row * cols + c] * &inv;
                a[pivot_row * cols + c] = v;
            }
            for r in 0..rows {
                if r == pivot_row || a[r * cols + col].is_zero() {
                    continue;
                }
                let factor = a[r * cols + col].clone();
                for c in col..cols {
                    let v = &a[r * cols + c] - &(&factor * &a[pivot_row * cols + c]);
                    a[r * cols + c] = v;
                }
            }
            rank += 1;
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        rank
    }

    /// Dimension of the right nullspace.
    pub fn nullspace_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<BigRational> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        for k in 0..width {
            self.swap(a * width + k, b * width + k);
        }
    }
}

/// Does `target` lie in the linear span of `basis`? All vectors must have the
/// same length. Decided exactly by comparing ranks.
pub fn in_span(basis: &[Vec<BigRational>], target: &[BigRational]) -> bool {
    if target.iter().all(|v| v.is_zero()) {
        return true;
    }
    let n = target.len();
    let without = RatMatrix::from_rows(
        basis
            .iter()
            .map(|b| {
                assert_eq!(b.len(), n);
                b.clone()
            })
            .collect(),
    );
    let mut with_rows: Vec<Vec<BigRational>> = basis.to_vec();
    with_rows.push(target.to_vec());
    let with = RatMatrix::from_rows(with_rows);
    without.rank() == with.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{int, rat};

    #[test]
    fn rank_and_nullspace() {
        let m = RatMatrix::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(1), int(0), int(1)],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullspace_dim(), 1);
        let id = RatMatrix::from_rows(vec![vec![int(1), int(0)], vec![int(0), rat(1, 3)]]);
        assert_eq!(id.rank(), 2);
        assert_eq!(id.nullspace_dim(), 0);
        let z = RatMatrix::zero(2, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.nullspace_dim(), 4);
    }

    #[test]
    fn span_membership() {
        let b1 = vec![int(1), int(0), int(1)];
        let b2 = vec![int(0), int(1), int(1)];
        assert!(in_span(
            &[b1.clone(), b2.clone()],
            &[int(2), int(3), int(5)]
        ));
        assert!(!in_span(&[b1, b2], &[int(0), int(0), int(1)]));
        assert!(in_span(&[], &[int(0), int(0)]));
    }
}
