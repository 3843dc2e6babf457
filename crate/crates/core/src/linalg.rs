//! Exact dense linear algebra over the base scalar field (rationals or a
//! quadratic extension). Used for rank/kernel computations and for the
//! signature of symmetric matrices; forms stay sparse everywhere else.

use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<Scalar>>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![vec![Scalar::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.a[i][i] = Scalar::one();
        }
        m
    }

    /// Row echelon form by exact Gaussian elimination with deterministic
    /// left-to-right pivoting (first non-zero row in each column). Returns
    /// the rank and the pivot column indices.
    pub fn row_reduce(&mut self) -> Result<(usize, Vec<usize>), ScalarError> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.a[i][c].is_zero()) else {
                continue;
            };
            self.a.swap(r, p);
            let inv = Scalar::one().div(&self.a[r][c])?;
            for j in c..self.cols {
                self.a[r][j] = self.a[r][j].mul(&inv)?;
            }
            for i in 0..self.rows {
                if i == r || self.a[i][c].is_zero() {
                    continue;
                }
                let f = self.a[i][c].clone();
                for j in c..self.cols {
                    let delta = f.mul(&self.a[r][j])?;
                    self.a[i][j] = self.a[i][j].sub(&delta)?;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok((r, pivots))
    }

    pub fn rank(&self) -> Result<usize, ScalarError> {
        let mut m = self.clone();
        Ok(m.row_reduce()?.0)
    }

    /// Basis of the null space, in reduced echelon convention: one vector per
    /// free column, with a `1` in the free position. Deterministic given the
    /// matrix.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<Scalar>>, ScalarError> {
        let mut m = self.clone();
        let (_, pivots) = m.row_reduce()?;
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                // row r reads: x_pc + sum_j a[r][j] x_j = 0 over free columns
                v[pc] = m.a[r][free].neg();
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Exact inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Mat>, ScalarError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.a[i][j] = self.a[i][j].clone();
            }
            aug.a[i][n + i] = Scalar::one();
        }
        let (rank, pivots) = aug.row_reduce()?;
        if rank < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Ok(None);
        }
        let mut inv = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.a[i][j] = aug.a[i][n + j].clone();
            }
        }
        Ok(Some(inv))
    }
}

/// Exact signature of a symmetric matrix by congruence diagonalization.
/// Returns `(positives, negatives, zeros)`.
pub fn symmetric_signature(g: &Mat) -> Result<(usize, usize, usize), ScalarError> {
    assert_eq!(g.rows, g.cols);
    let n = g.rows;
    let mut m = g.a.clone();
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut zero = 0usize;
    let mut k = 0usize;
    while k < n {
        if m[k][k].is_zero() {
            // Look below/right for a usable pivot: first a non-zero diagonal
            // entry to swap in, else a non-zero off-diagonal to fold in.
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // Congruence: add row/col j to row/col k; the new (k,k) entry
                // is 2*m[k][j] != 0.
                for c in 0..n {
                    let t = m[j][c].clone();
                    m[k][c] = m[k][c].add(&t)?;
                }
                for r in 0..n {
                    let t = m[r][j].clone();
                    m[r][k] = m[r][k].add(&t)?;
                }
            } else {
                zero += 1;
                k += 1;
                continue;
            }
        }
        let pivot = m[k][k].clone();
        match pivot.sign()? {
            1 => pos += 1,
            -1 => neg += 1,
            _ => unreachable!("pivot is non-zero"),
        }
        // Clear row/column k below the pivot by symmetric elimination.
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].div(&pivot)?;
            for j in k..n {
                let delta = f.mul(&m[k][j])?;
                m[i][j] = m[i][j].sub(&delta)?;
            }
            for r in k..n {
                let delta = f.mul(&m[r][k])?;
                m[r][i] = m[r][i].sub(&delta)?;
            }
        }
        k += 1;
    }
    Ok((pos, neg, zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Mat {
        let mut out = Mat::zero(rows.len(), rows[0].len());
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                out.a[i][j] = Scalar::int(v);
            }
        }
        out
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank().unwrap(), 2);
        let ker = a.kernel_basis().unwrap();
        assert_eq!(ker.len(), 1);
        // Verify A v = 0 exactly.
        for row in &a.a {
            let mut acc = Scalar::zero();
            for (c, v) in row.iter().zip(&ker[0]) {
                acc = acc.add(&c.mul(v).unwrap()).unwrap();
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[5, 3]]);
        let inv = a.inverse().unwrap().unwrap();
        // a * inv = I
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Scalar::zero();
                for k in 0..2 {
                    acc = acc.add(&a.a[i][k].mul(&inv.a[k][j]).unwrap()).unwrap();
                }
                let expect = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(acc, expect);
            }
        }
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().unwrap().is_none());
    }

    #[test]
    fn signature_cases() {
        assert_eq!(symmetric_signature(&Mat::identity(4)).unwrap(), (4, 0, 0));
        let d = m(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, -1, 0, 0],
            &[0, 0, 0, 0, -1, 0],
            &[0, 0, 0, 0, 0, -1],
        ]);
        assert_eq!(symmetric_signature(&d).unwrap(), (3, 3, 0));
        // Hyperbolic plane: zero diagonal, off-diagonal coupling.
        let h = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(symmetric_signature(&h).unwrap(), (1, 1, 0));
        let z = m(&[&[0, 0], &[0, 5]]);
        assert_eq!(symmetric_signature(&z).unwrap(), (1, 0, 1));
    }
}
