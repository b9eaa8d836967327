use num::traits::Zero;
use thiserror::Error;

use crate::cube;
use crate::func::{MultilinearPoly, PointFunction, PolyScalar, UnivariatePoly};
use crate::rat::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymmetricProfileError {
    #[error("function is not weight-symmetric")]
    NotSymmetric,
    #[error("profile length {got} does not match n+1 = {expected}")]
    WrongLength { expected: usize, got: usize },
}

/// Weight profile of a symmetric function: g(k) is the value on inputs of
/// Hamming weight k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricProfile {
    n: usize,
    profile: Vec<Rational>,
}

impl SymmetricProfile {
    pub fn new(n: usize, profile: Vec<Rational>) -> Result<Self, SymmetricProfileError> {
        if profile.len() != n + 1 {
            return Err(SymmetricProfileError::WrongLength {
                expected: n + 1,
                got: profile.len(),
            });
        }
        Ok(SymmetricProfile { n, profile })
    }

    pub fn from_point_function(f: &PointFunction) -> Result<Self, SymmetricProfileError> {
        if !f.is_weight_symmetric() {
            return Err(SymmetricProfileError::NotSymmetric);
        }
        let mut profile = vec![Rational::zero(); f.n() + 1];
        for x in 0..f.len() {
            profile[cube::weight(x)] = f.value(x).clone();
        }
        Ok(SymmetricProfile {
            n: f.n(),
            profile,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, k: usize) -> &Rational {
        &self.profile[k]
    }

    pub fn profile(&self) -> &[Rational] {
        &self.profile
    }

    pub fn to_point_function(&self) -> Result<PointFunction, crate::func::PointFunctionError> {
        let values = (0..(1usize << self.n))
            .map(|x| self.profile[cube::weight(x)].clone())
            .collect();
        PointFunction::new(self.n, values)
    }
}

/// Symmetrization of per-point values: averages over each Hamming-weight
/// layer, then interpolates on the nodes 0..=n. Exact for exact scalars; the
/// f64 instantiation serves the SDP-derived paths.
pub fn symmetrize_values<T: PolyScalar>(n: usize, point_values: &[T]) -> UnivariatePoly<T> {
    assert_eq!(point_values.len(), 1 << n);
    let mut sums = vec![T::zero(); n + 1];
    for (x, v) in point_values.iter().enumerate() {
        let k = cube::weight(x);
        sums[k] = sums[k].clone() + v.clone();
    }
    let averages: Vec<T> = sums
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            let count = num_points_of_weight(n, k);
            s / T::from_usize(count)
        })
        .collect();
    UnivariatePoly::interpolate_on_nodes(&averages)
}

fn num_points_of_weight(n: usize, k: usize) -> usize {
    // binomial(n, k); n <= MAX_VARS so this never overflows
    let mut c = 1usize;
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// The symmetrization q(k) = E_{|x|=k}[p(x)], a univariate polynomial of
/// degree at most deg(p).
pub fn symmetrize(p: &MultilinearPoly) -> UnivariatePoly<Rational> {
    symmetrize_values(p.n(), &p.evaluate_all())
}
