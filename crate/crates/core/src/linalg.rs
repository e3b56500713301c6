//! Dense exact linear algebra over the rationals.
//!
//! Ranks come from fraction-free (Bareiss) elimination on integer rows; null
//! spaces come from reduced row echelon form over `BigRational`. Matrices here
//! are tiny (a few dozen rows), so no attempt is made at sparsity.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows. `cols` is needed for the `rows == 0` case.
    pub fn from_ints(rows: &[&[i64]], cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |r, c| BigRational::from_integer(rows[r][c].into()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        Self::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(BigRational::zero(), |acc, k| acc + &self[(r, k)] * &rhs[(k, c)])
        })
    }

    /// Side-by-side concatenation; all blocks share the row count `rows`.
    pub fn hstack(rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                for c in 0..b.cols {
                    out[(r, off + c)] = b[(r, c)].clone();
                }
            }
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks share the column count `cols`.
    pub fn vstack(cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    pub fn row_block(&self, start: usize, len: usize) -> Matrix {
        Self::from_fn(len, self.cols, |r, c| self[(start + r, c)].clone())
    }

    pub fn col_block(&self, start: usize, len: usize) -> Matrix {
        Self::from_fn(self.rows, len, |r, c| self[(r, start + c)].clone())
    }

    /// Rank by fraction-free Gaussian elimination. Each row is first scaled to
    /// integers; every intermediate division is exact.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|r| self.integer_row(r)).collect();
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in rank + 1..self.rows {
                for j in col + 1..self.cols {
                    let v = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                    debug_assert!((&v % &prev).is_zero());
                    m[i][j] = v / &prev;
                }
                m[i][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    fn integer_row(&self, r: usize) -> Vec<BigInt> {
        let row = &self.data[r * self.cols..(r + 1) * self.cols];
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for c in col..m.cols {
                m[(row, c)] = &m[(row, c)] * &inv;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in col..m.cols {
                        let d = &f * &m[(row, c)];
                        m[(r, c)] -= d;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Basis of `{v : self * v = 0}` as the columns of the returned matrix
    /// (shape `cols x nullity`).
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                out[(p, k)] = -r[(i, f)].clone();
            }
        }
        out
    }

    /// Basis of the left null space `{w : w^T * self = 0}` as the rows of the
    /// returned matrix (shape `corank x rows`).
    pub fn left_nullspace(&self) -> Matrix {
        self.transpose().nullspace().transpose()
    }

    /// Entries rendered as `"p/q"` strings (`"p"` for integers), row-major.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| fmt_rational(&self[(r, c)])).collect())
            .collect()
    }

    pub fn has_negative(&self) -> bool {
        self.data.iter().any(Signed::is_negative)
    }
}

fn fmt_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = BigRational;

    fn index(&self, (r, c): (usize, usize)) -> &BigRational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigRational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{:?}", self.rows, self.cols, self.to_strings())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_ranks() {
        assert_eq!(Matrix::zeros(3, 2).rank(), 0);
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[2, 4]], 2).rank(), 1);
        assert_eq!(Matrix::from_ints(&[&[0, 1, 1], &[0, 1, 1], &[0, 0, 3]], 3).rank(), 2);
        assert_eq!(Matrix::zeros(0, 5).rank(), 0);
    }

    #[test]
    fn rational_rows_are_scaled() {
        let mut m = Matrix::zeros(2, 2);
        m[(0, 0)] = q(1, 2);
        m[(0, 1)] = q(1, 3);
        m[(1, 0)] = q(3, 2);
        m[(1, 1)] = q(1, 1);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_sum_map() {
        // k^2 -> k, (x, y) |-> x + y
        let m = Matrix::from_ints(&[&[1, 1]], 2);
        let n = m.nullspace();
        assert_eq!(n.shape(), (2, 1));
        assert!(m.mul(&n).is_zero());
        let l = Matrix::from_ints(&[&[1], &[1]], 1).left_nullspace();
        assert_eq!(l.shape(), (1, 2));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..5, 0usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                Matrix::from_fn(r, c, |i, j| BigRational::from_integer(v[i * c + j].into()))
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_rank_matches_rref(m in small_matrix()) {
            let (_, pivots) = m.rref();
            prop_assert_eq!(m.rank(), pivots.len());
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            let n = m.nullspace();
            prop_assert_eq!(m.rank() + n.cols(), m.cols());
            prop_assert!(m.mul(&n).is_zero());
            prop_assert_eq!(n.rank(), n.cols());
        }
    }
}
