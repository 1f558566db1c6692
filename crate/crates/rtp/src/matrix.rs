//! Dense matrices over a [`Ring`] with exact determinants.
//!
//! [`RingMatrix::det`] dispatches on the coefficient ring: rational matrices
//! use fraction-free (Bareiss) elimination, whose intermediate divisions are
//! exact in any integral domain; polynomial matrices up to
//! [`Ring::EXPANSION_DET_LIMIT`] use Laplace expansion memoized on column
//! subsets, which avoids polynomial division entirely, and fall back to
//! fraction-free elimination above that size.  Minor enumeration for the
//! positivity checks lives in [`crate::positivity`]; this module only knows
//! shapes, products and determinants.

use std::collections::HashMap;
use std::fmt;

use crate::arith::{Rational, Ring};
use crate::{Error, Result};

/// Dense `rows x cols` matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct RingMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    /// Builds from row-major data.
    ///
    /// # Panics
    /// Panics if `data.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        RingMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix::new(rows, cols, vec![R::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RingMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    /// Builds entrywise from an index function.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Submatrix selected by explicit row and column index lists
    /// (order-preserving, repetition allowed).
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> RingMatrix<R> {
        RingMatrix::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j]).clone()
        })
    }

    /// Consumes the matrix, returning its row-major entries.
    pub fn into_data(self) -> Vec<R> {
        self.data
    }

    /// Entrywise map into another ring.
    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> RingMatrix<S> {
        RingMatrix::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    /// Matrix product.
    ///
    /// # Panics
    /// Panics on inner-dimension mismatch.
    pub fn mul(&self, other: &RingMatrix<R>) -> RingMatrix<R> {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        RingMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        })
    }

    /// Exact determinant; errors on non-square input.
    pub fn det(&self) -> Result<R> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        if n <= R::EXPANSION_DET_LIMIT {
            Ok(self.det_expansion())
        } else {
            Ok(self.det_bareiss())
        }
    }

    /// Laplace expansion along rows, memoized on the set of still-available
    /// columns; no division, `O(2^n)` subproblems.
    fn det_expansion(&self) -> R {
        let n = self.rows;
        debug_assert!(n <= 64);
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut memo: HashMap<u64, R> = HashMap::new();
        self.det_expansion_rec(full, n, &mut memo)
    }

    fn det_expansion_rec(&self, mask: u64, n: usize, memo: &mut HashMap<u64, R>) -> R {
        if mask == 0 {
            return R::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let row = n - (mask.count_ones() as usize);
        let mut acc = R::zero();
        let mut position = 0usize; // index of the column among the available ones
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = self.get(row, j);
            if !entry.is_zero() {
                let sub = self.det_expansion_rec(mask & !(1 << j), n, memo);
                let term = entry.mul(&sub);
                acc = if position % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            position += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Fraction-free (Bareiss) elimination with row pivoting.  Every interior
    /// division is exact over an integral domain; a failed exactness check
    /// would indicate memory corruption or a non-domain ring and panics.
    fn det_bareiss(&self) -> R {
        let n = self.rows;
        let mut m: Vec<Vec<R>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return R::zero();
                };
                m.swap(k, r);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination produced an inexact division");
                }
                m[i][k] = R::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign_flip {
            det.neg()
        } else {
            det
        }
    }

    /// Exact inverse of a lower-triangular matrix whose diagonal entries are
    /// units, by forward substitution.
    pub fn inverse_lower_triangular(&self) -> Result<RingMatrix<R>> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut inv = RingMatrix::zeros(n, n);
        let diag_inv: Vec<R> = (0..n)
            .map(|i| {
                self.get(i, i).inv_unit().ok_or_else(|| {
                    Error::Domain(format!("diagonal entry ({i},{i}) is not a unit"))
                })
            })
            .collect::<Result<_>>()?;
        for j in 0..n {
            inv.set(j, j, diag_inv[j].clone());
            for i in j + 1..n {
                let mut acc = R::zero();
                for k in j..i {
                    acc = acc.add(&self.get(i, k).mul(inv.get(k, j)));
                }
                inv.set(i, j, acc.mul(&diag_inv[i]).neg());
            }
        }
        Ok(inv)
    }

    /// Rows as a JSON array of arrays.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|i| serde_json::Value::Array(self.row(i).iter().map(Ring::to_json).collect()))
            .collect();
        serde_json::Value::Array(rows)
    }
}

impl RingMatrix<Rational> {
    /// Lifts a rational matrix into a polynomial ring (constant entries).
    pub fn lift(&self, vars: &crate::arith::VarSet) -> RingMatrix<crate::arith::Poly> {
        self.map(|r| crate::arith::Poly::constant(vars, r.clone()))
    }
}

impl<R: Ring> fmt::Display for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Poly, VarSet};

    fn rmat(rows: usize, cols: usize, entries: &[i64]) -> RingMatrix<Rational> {
        RingMatrix::new(rows, cols, entries.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn pascal_principal_minor_is_unimodular() {
        // 3x3 leading block of the binomial triangle
        let m = rmat(3, 3, &[1, 0, 0, 1, 1, 0, 1, 2, 1]);
        assert_eq!(m.det().unwrap(), rat(1));
    }

    #[test]
    fn sign_reversal_witness() {
        let m = rmat(2, 2, &[1, 2, 3, 1]);
        assert_eq!(m.det().unwrap(), rat(-5));
    }

    #[test]
    fn singular_and_pivoting_cases() {
        let m = rmat(3, 3, &[0, 1, 2, 0, 2, 4, 1, 1, 1]);
        assert_eq!(m.det().unwrap(), rat(0));
        let p = rmat(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(p.det().unwrap(), rat(-1));
    }

    #[test]
    fn non_square_is_an_error() {
        let m = rmat(2, 3, &[1, 0, 0, 0, 1, 0]);
        assert!(matches!(m.det(), Err(Error::NonSquareMatrix { rows: 2, cols: 3 })));
    }

    #[test]
    fn polynomial_determinant_by_expansion() {
        let vs = VarSet::new(["q"]);
        let q = Poly::var(&vs, "q");
        let one = Poly::constant(&vs, rat(1));
        // det [[1+q, q], [q, q+q^2]] = (1+q)^2 q - q^2 = q + q^2 + q^3
        let m = RingMatrix::new(
            2,
            2,
            vec![
                one.add(&q),
                q.clone(),
                q.clone(),
                q.add(&q.mul(&q)),
            ],
        );
        let det = m.det().unwrap();
        let expected = q.add(&q.pow(2)).add(&q.pow(3));
        assert_eq!(det, expected);
        assert!(det.is_nonneg());
    }

    #[test]
    fn expansion_and_bareiss_agree_on_polynomials() {
        let vs = VarSet::new(["q"]);
        let q = Poly::var(&vs, "q");
        let n = 4;
        // Hilbert-like polynomial matrix: entries q^(|i-j|) + (i+j)
        let m = RingMatrix::from_fn(n, n, |i, j| {
            q.pow(i.abs_diff(j)).add(&Poly::constant(&vs, rat((i + j) as i64)))
        });
        let by_expansion = m.det_expansion();
        let by_elimination = m.det_bareiss();
        assert_eq!(by_expansion, by_elimination);
    }

    #[test]
    fn lower_triangular_inverse() {
        let m = rmat(3, 3, &[1, 0, 0, 2, 1, 0, 1, 3, 1]);
        let inv = m.inverse_lower_triangular().unwrap();
        assert_eq!(m.mul(&inv), RingMatrix::identity(3));
        assert_eq!(inv.mul(&m), RingMatrix::identity(3));
    }

    #[test]
    fn submatrix_selects_minor() {
        let m = rmat(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let s = m.submatrix(&[0, 2], &[1, 2]);
        assert_eq!(s, rmat(2, 2, &[2, 3, 8, 9]));
    }
}
