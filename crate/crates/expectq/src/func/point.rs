use num::traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cube;
use crate::rat::Rational;
use crate::MAX_VARS;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PointFunctionError {
    #[error("n must be between 1 and {MAX_VARS}, got {0}")]
    BadArity(usize),
    #[error("expected 2^n = {expected} values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("value at point {0:#b} is negative")]
    NegativeValue(usize),
}

/// A nonnegative function on {0,1}^n, stored as exact values on all 2^n cube
/// points. The universal input object: every degree, certificate, and matrix
/// in the crate is derived from one of these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointFunction {
    n: usize,
    values: Vec<Rational>,
}

impl PointFunction {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self, PointFunctionError> {
        if n < 1 || n > MAX_VARS {
            return Err(PointFunctionError::BadArity(n));
        }
        if values.len() != 1 << n {
            return Err(PointFunctionError::WrongLength {
                expected: 1 << n,
                got: values.len(),
            });
        }
        if let Some(x) = values.iter().position(|v| v.is_negative()) {
            return Err(PointFunctionError::NegativeValue(x));
        }
        Ok(PointFunction { n, values })
    }

    pub fn constant(n: usize, c: Rational) -> Result<Self, PointFunctionError> {
        Self::new(n, vec![c; 1 << n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Value at the cube point encoded by `x`.
    pub fn value(&self, x: usize) -> &Rational {
        &self.values[x]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_boolean(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || v.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|v| *v == self.values[0])
    }

    /// max_x f(x), the optimum of the cube maximization problem.
    pub fn max_value(&self) -> Rational {
        self.values.iter().max().expect("nonempty").clone()
    }

    pub fn argmax(&self) -> usize {
        let m = self.max_value();
        self.values.iter().position(|v| *v == m).expect("max attained")
    }

    /// True when f depends on x only through the Hamming weight.
    pub fn is_weight_symmetric(&self) -> bool {
        let mut seen: Vec<Option<&Rational>> = vec![None; self.n + 1];
        for x in 0..self.values.len() {
            let k = cube::weight(x);
            match seen[k] {
                None => seen[k] = Some(&self.values[x]),
                Some(v) => {
                    if *v != self.values[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// f composed with the variable permutation `perm` (perm[i] is the 0-based
    /// new position of variable i).
    pub fn permute(&self, perm: &[usize]) -> PointFunction {
        assert_eq!(perm.len(), self.n);
        let mut values = vec![Rational::zero(); self.values.len()];
        for x in 0..self.values.len() {
            let mut y = 0usize;
            for i in 0..self.n {
                if x & (1 << i) != 0 {
                    y |= 1 << perm[i];
                }
            }
            values[y] = self.values[x].clone();
        }
        PointFunction { n: self.n, values }
    }

    /// f with inputs flipped on the coordinates of `mask` (x_i -> 1 - x_i).
    pub fn flip(&self, mask: usize) -> PointFunction {
        let mut values = vec![Rational::zero(); self.values.len()];
        for x in 0..self.values.len() {
            values[x ^ mask] = self.values[x].clone();
        }
        PointFunction { n: self.n, values }
    }
}
