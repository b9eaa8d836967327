use num::traits::Zero;
use serde::{Deserialize, Serialize};

use crate::func::PointFunction;
use crate::nnl::degree::{nnl_degree, NnlError, MAX_LP_TERMS};
use crate::nnl::terms::{literal_terms, term_count};
use crate::rat::{serde_rational, Rational};
use crate::solver::{minimize_lp, LpMinOutcome, RationalLpInstance};

/// Value of one relaxation round: the least c such that c - f has a degree-d
/// literal representation. Below the degree of f no c works at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SaValue {
    Infinite,
    Finite(#[serde(with = "serde_rational")] Rational),
}

impl SaValue {
    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            SaValue::Finite(v) => Some(v),
            SaValue::Infinite => None,
        }
    }

    /// Ordering with Infinite on top, for monotonicity checks.
    pub fn ge(&self, other: &SaValue) -> bool {
        match (self, other) {
            (SaValue::Infinite, _) => true,
            (SaValue::Finite(_), SaValue::Infinite) => false,
            (SaValue::Finite(a), SaValue::Finite(b)) => a >= b,
        }
    }
}

/// Exact relaxation value at round d: minimize c subject to
/// c - f = sum of alpha * (degree <= d literal terms), alpha >= 0,
/// solved as one LP with c split into a difference of nonnegatives.
pub fn sherali_adams_value(f: &PointFunction, d: usize) -> Result<SaValue, NnlError> {
    let n = f.n();
    if d > n {
        return Err(NnlError::DegreeOutOfRange { d, n });
    }
    let count = term_count(n, d);
    if count > MAX_LP_TERMS {
        return Err(NnlError::TooLarge { terms: count });
    }

    // rows: sum_t alpha_t a_t(x) - c_plus + c_minus = -f(x)
    let rhs: Vec<Rational> = f.values().iter().map(|v| -v.clone()).collect();
    let mut inst = RationalLpInstance::new(f.len(), rhs)?;
    let one = Rational::from_integer(1.into());
    let cplus: Vec<(usize, Rational)> = (0..f.len()).map(|x| (x, -one.clone())).collect();
    let cminus: Vec<(usize, Rational)> = (0..f.len()).map(|x| (x, one.clone())).collect();
    inst.add_column(cplus)?;
    inst.add_column(cminus)?;
    for t in literal_terms(n, d) {
        let col = t
            .satisfying_points(n)
            .into_iter()
            .map(|x| (x, one.clone()))
            .collect();
        inst.add_column(col)?;
    }
    let mut obj = vec![Rational::zero(); inst.num_vars()];
    obj[0] = one.clone();
    obj[1] = -one;

    match minimize_lp(&inst, &obj)? {
        LpMinOutcome::Optimal { value, .. } => Ok(SaValue::Finite(value)),
        LpMinOutcome::Infeasible(_) => Ok(SaValue::Infinite),
        // c >= max f bounds the objective below
        LpMinOutcome::Unbounded => Err(NnlError::Lp(crate::solver::LpError::Internal(
            "relaxation value unbounded below",
        ))),
    }
}

/// The round where Sherali-Adams becomes exact: the literal degree of
/// alpha(f) - f.
pub fn sa_exact_level(f: &PointFunction) -> Result<usize, NnlError> {
    let alpha = f.max_value();
    let gap_values = f.values().iter().map(|v| &alpha - v).collect();
    let gap = PointFunction::new(f.n(), gap_values).expect("alpha - f is nonnegative");
    Ok(nnl_degree(&gap)?.degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::triangle_max_cut;
    use crate::rat::rat;

    #[test]
    fn full_round_gives_the_maximum() {
        let f = triangle_max_cut();
        assert_eq!(
            sherali_adams_value(&f, 3).unwrap(),
            SaValue::Finite(rat(2))
        );
    }

    #[test]
    fn constant_function_all_rounds() {
        let f = PointFunction::constant(2, rat(3)).unwrap();
        for d in 0..=2 {
            assert_eq!(
                sherali_adams_value(&f, d).unwrap(),
                SaValue::Finite(rat(3))
            );
        }
        assert_eq!(sa_exact_level(&f).unwrap(), 0);
    }

    #[test]
    fn low_rounds_of_triangle_are_infinite() {
        // c - f has degree 2, no literal polynomial of degree <= 1 matches
        let f = triangle_max_cut();
        assert_eq!(sherali_adams_value(&f, 0).unwrap(), SaValue::Infinite);
        assert_eq!(sherali_adams_value(&f, 1).unwrap(), SaValue::Infinite);
    }

    #[test]
    fn rounds_are_monotone_for_triangle() {
        let f = triangle_max_cut();
        let vals: Vec<SaValue> = (0..=3)
            .map(|d| sherali_adams_value(&f, d).unwrap())
            .collect();
        for w in vals.windows(2) {
            assert!(w[0].ge(&w[1]));
        }
        assert_eq!(vals[3], SaValue::Finite(rat(2)));
    }

    #[test]
    fn dictator_exact_level_is_one() {
        // f = x1: alpha = 1, 1 - x1 is a degree-1 literal
        let f = PointFunction::new(2, vec![rat(0), rat(1), rat(0), rat(1)]).unwrap();
        assert_eq!(sa_exact_level(&f).unwrap(), 1);
    }

    #[test]
    fn shifted_weight_square_exact_level() {
        // g = 2|x| - |x|^2 on n=2 has alpha = 1 and alpha - g = (|x|-1)^2
        let f = PointFunction::new(2, vec![rat(0), rat(1), rat(1), rat(0)]).unwrap();
        assert_eq!(sa_exact_level(&f).unwrap(), 2);
    }
}
