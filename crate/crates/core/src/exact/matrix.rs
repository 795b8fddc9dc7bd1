//! Dense matrices over cyclotomic fields, with exact Gaussian elimination.

use serde::{Deserialize, Serialize};

use super::{CycloNumber, ExactError};

/// A dense matrix of [`CycloNumber`] entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<CycloNumber>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<CycloNumber>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![CycloNumber::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for k in 0..n {
            m.set(k, k, CycloNumber::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloNumber) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &(a * b) + out.get(i, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycloNumber]) -> Result<Vec<CycloNumber>, ExactError> {
        if self.cols != v.len() {
            return Err(ExactError::DimensionMismatch(format!(
                "{}x{} * vec of {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![CycloNumber::zero(); self.rows];
        for i in 0..self.rows {
            for (j, x) in v.iter().enumerate() {
                if x.is_zero() || self.get(i, j).is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(self.get(i, j) * x);
            }
        }
        Ok(out)
    }

    /// Solve `A x = b` for square nonsingular `A`.
    pub fn solve(&self, b: &[CycloNumber]) -> Result<Vec<CycloNumber>, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "solve on a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if b.len() != self.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "rhs length {} for a {}x{} matrix",
                b.len(),
                self.rows,
                self.cols
            )));
        }
        let n = self.rows;
        let mut aug: Vec<Vec<CycloNumber>> = (0..n)
            .map(|i| {
                let mut row: Vec<CycloNumber> =
                    (0..n).map(|j| self.get(i, j).clone()).collect();
                row.push(b[i].clone());
                row
            })
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !aug[r][col].is_zero()) else {
                return Err(ExactError::SingularMatrix(format!(
                    "no pivot in column {col}"
                )));
            };
            aug.swap(col, p);
            let inv = aug[col][col].inv()?;
            for c in col..=n {
                aug[col][c] = &aug[col][c] * &inv;
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let factor = aug[r][col].clone();
                    for c in col..=n {
                        let delta = &factor * &aug[col][c];
                        aug[r][c] = &aug[r][c] - &delta;
                    }
                }
            }
        }
        Ok(aug.into_iter().map(|mut row| row.pop().unwrap()).collect())
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self) -> Result<ExactMatrix, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for k in 0..n {
            let mut e = vec![CycloNumber::zero(); n];
            e[k] = CycloNumber::one();
            cols.push(self.solve(&e)?);
        }
        let mut out = Self::zero(n, n);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-full Gaussian elimination.
    pub fn det(&self) -> Result<CycloNumber, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m: Vec<Vec<CycloNumber>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut det = CycloNumber::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(CycloNumber::zero());
            };
            if p != col {
                m.swap(col, p);
                det = &det * &CycloNumber::from_int(-1);
            }
            det = &det * &m[col][col];
            let inv = m[col][col].inv()?;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        Ok(det)
    }

    pub fn is_nonsingular(&self) -> bool {
        self.det().map_or(false, |d| !d.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use num_bigint::BigInt;

    fn c(n: i64) -> CycloNumber {
        CycloNumber::from_int(n)
    }

    #[test]
    fn solve_identity() {
        let a = ExactMatrix::identity(3);
        let b = vec![c(5), CycloNumber::i(), c(-2)];
        assert_eq!(a.solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_diagonal_with_i() {
        // A = [[i, 0], [0, 2]], b = [1, 1]  ->  x = [-i, 1/2]
        let a = ExactMatrix::from_rows(vec![
            vec![CycloNumber::i(), c(0)],
            vec![c(0), c(2)],
        ]);
        let b = vec![c(1), c(1)];
        let x = a.solve(&b).unwrap();
        assert_eq!(x[0], -&CycloNumber::i());
        assert_eq!(
            x[1],
            CycloNumber::from_rational(Rational::new(BigInt::from(1), BigInt::from(2)))
        );
        // substitute back
        assert_eq!(a.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn solve_singular_errors() {
        let a = ExactMatrix::from_rows(vec![vec![c(1), c(1)], vec![c(1), c(1)]]);
        let b = vec![c(1), c(2)];
        assert!(matches!(
            a.solve(&b),
            Err(crate::exact::ExactError::SingularMatrix(_))
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let a = ExactMatrix::from_rows(vec![
            vec![c(1), CycloNumber::i(), c(0)],
            vec![c(0), c(2), CycloNumber::sqrt2()],
            vec![c(1), c(0), c(3)],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(3));
        assert_eq!(inv.mul(&a).unwrap(), ExactMatrix::identity(3));
    }

    #[test]
    fn det_values() {
        let a = ExactMatrix::from_rows(vec![vec![c(2), c(1)], vec![c(1), c(1)]]);
        assert_eq!(a.det().unwrap(), c(1));
        let s = ExactMatrix::from_rows(vec![vec![c(1), c(1)], vec![c(1), c(1)]]);
        assert_eq!(s.det().unwrap(), CycloNumber::zero());
        assert!(!s.is_nonsingular());
    }
}
