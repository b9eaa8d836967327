use num::traits::{Signed, Zero};
use thiserror::Error;

use crate::rat::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LdlError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
}

/// Dense symmetric rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(dim: usize) -> Self {
        RatMatrix {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LdlError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(LdlError::NotSquare);
        }
        let data = rows.into_iter().flatten().collect();
        Ok(RatMatrix { dim, data })
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            *m.get_mut(i, i) = Rational::from_integer(1.into());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.dim + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.dim + j]
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn add_scaled_outer(&mut self, c: &Rational, u: &[(usize, Rational)]) {
        for (i, vi) in u {
            for (j, vj) in u {
                let term = c * vi * vj;
                self.data[i * self.dim + j] += term;
            }
        }
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.dim, self.dim, |i, j| crate::rat::to_f64(self.get(i, j)))
    }
}

/// Exact psd test by symmetric Gaussian elimination (LDL^T). A zero pivot is
/// allowed only when its entire remaining row vanishes; a negative pivot or a
/// nonzero row under a zero pivot disqualifies the matrix.
pub fn rational_psd_check(w: &RatMatrix) -> Result<bool, LdlError> {
    for i in 0..w.dim() {
        for j in (i + 1)..w.dim() {
            if w.get(i, j) != w.get(j, i) {
                return Err(LdlError::NotSymmetric(i, j));
            }
        }
    }
    let m = w.dim();
    let mut a = w.clone();
    for k in 0..m {
        let pivot = a.get(k, k).clone();
        if pivot.is_negative() {
            return Ok(false);
        }
        if pivot.is_zero() {
            for j in (k + 1)..m {
                if !a.get(k, j).is_zero() {
                    return Ok(false);
                }
            }
            continue;
        }
        for i in (k + 1)..m {
            if a.get(i, k).is_zero() {
                continue;
            }
            let factor = a.get(i, k) / &pivot;
            for j in (k + 1)..m {
                if a.get(k, j).is_zero() {
                    continue;
                }
                let delta = &factor * a.get(k, j);
                *a.get_mut(i, j) -= delta;
            }
            *a.get_mut(i, k) = Rational::zero();
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn mat(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_is_psd() {
        assert!(rational_psd_check(&RatMatrix::identity(3)).unwrap());
    }

    #[test]
    fn antidiagonal_is_not_psd() {
        assert!(!rational_psd_check(&mat(&[&[0, 1], &[1, 0]])).unwrap());
    }

    #[test]
    fn diagonally_dominant_is_psd() {
        assert!(rational_psd_check(&mat(&[&[2, 1], &[1, 2]])).unwrap());
    }

    #[test]
    fn boundary_cases() {
        // singular psd
        assert!(rational_psd_check(&mat(&[&[1, 1], &[1, 1]])).unwrap());
        // negative definite
        assert!(!rational_psd_check(&mat(&[&[-1, 0], &[0, -1]])).unwrap());
        // zero matrix
        assert!(rational_psd_check(&RatMatrix::zeros(2)).unwrap());
        // zero diagonal with nonzero row, later block
        assert!(!rational_psd_check(&mat(&[&[1, 0, 2], &[0, 0, 1], &[2, 1, 9]])).unwrap());
    }

    #[test]
    fn rejects_asymmetric() {
        let m = RatMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(0), rat(1)]]).unwrap();
        assert_eq!(rational_psd_check(&m), Err(LdlError::NotSymmetric(0, 1)));
    }
}
