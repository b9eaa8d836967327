use std::ops::{Add, Div, Mul, Neg, Sub};

use num::traits::{One, Zero};

use crate::rat::Rational;

/// Scalar types a univariate polynomial can carry: exact rationals for the
/// certificate paths, f64 for the SDP-derived paths.
pub trait PolyScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_usize(v: usize) -> Self;
    /// Magnitude used for norm reporting.
    fn abs_f64(&self) -> f64;
}

impl PolyScalar for f64 {
    fn from_usize(v: usize) -> Self {
        v as f64
    }
    fn abs_f64(&self) -> f64 {
        self.abs()
    }
}

impl PolyScalar for Rational {
    fn from_usize(v: usize) -> Self {
        Rational::from_integer(v.into())
    }
    fn abs_f64(&self) -> f64 {
        crate::rat::to_f64(self).abs()
    }
}

/// Single-variable polynomial, coefficient on index k multiplying t^k.
/// Trailing zero coefficients are trimmed on construction, so
/// degree = highest stored index.
#[derive(Debug, Clone, PartialEq)]
pub struct UnivariatePoly<T> {
    coeffs: Vec<T>,
}

impl<T: PolyScalar> UnivariatePoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn evaluate(&self, t: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    pub fn evaluate_at(&self, k: usize) -> T {
        self.evaluate(&T::from_usize(k))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_usize(k))
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(T::zero);
            let b = other.coeffs.get(k).cloned().unwrap_or_else(T::zero);
            coeffs.push(a + b);
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(coeffs)
    }

    /// Euclidean division: self = q*divisor + r with deg r < deg divisor.
    /// Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return (Self::zero(), Self::new(rem));
        }
        let lead = divisor.coeffs[dlen - 1].clone();
        let mut quot = vec![T::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dlen - 1].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Max coefficient magnitude, for remainder reporting.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs_f64()).fold(0.0, f64::max)
    }

    /// Interpolates the polynomial taking `values[k]` at node k = 0..=n
    /// (Newton divided differences, exact when T is exact).
    pub fn interpolate_on_nodes(values: &[T]) -> Self {
        assert!(!values.is_empty());
        let n = values.len();
        // divided-difference table, in place
        let mut dd: Vec<T> = values.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = dd[i].clone() - dd[i - 1].clone();
                dd[i] = num / T::from_usize(level);
            }
        }
        // Horner over the Newton basis (t - 0)(t - 1)...
        let mut poly = Self::zero();
        for k in (0..n).rev() {
            // poly = poly * (t - k) + dd[k]
            let node = Self::new(vec![T::zero() - T::from_usize(k), T::one()]);
            poly = poly.mul(&node).add(&Self::new(vec![dd[k].clone()]));
        }
        poly
    }
}
