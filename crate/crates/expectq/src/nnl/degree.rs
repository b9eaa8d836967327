use num::traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::func::PointFunction;
use crate::nnl::terms::{literal_terms, term_count, LiteralTerm};
use crate::rat::{serde_rational, Rational};
use crate::solver::{solve_lp, FarkasCertificate, LpError, LpOutcome, RationalLpInstance};

/// LP size guard: sum over terms of 2^|S| entries.
pub const MAX_LP_TERMS: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NnlError {
    #[error("degree {d} out of range 0..={n}")]
    DegreeOutOfRange { d: usize, n: usize },
    #[error("LP would have {terms} term columns, above the {MAX_LP_TERMS} guard")]
    TooLarge { terms: usize },
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// A nonnegative combination of literal terms equal to f on every cube point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonnegLiteralRep {
    pub n: usize,
    pub terms: Vec<RepTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepTerm {
    #[serde(rename = "S")]
    pub support_vars: Vec<usize>,
    #[serde(rename = "b")]
    pub negation_bits: Vec<u8>,
    #[serde(with = "serde_rational")]
    pub alpha: Rational,
}

impl RepTerm {
    pub fn literal(&self) -> LiteralTerm {
        let support = crate::cube::mask_of(&self.support_vars);
        let mut negated = 0usize;
        for (v, b) in self.support_vars.iter().zip(&self.negation_bits) {
            if *b == 1 {
                negated |= 1 << (v - 1);
            }
        }
        LiteralTerm::new(support, negated)
    }
}

impl NonnegLiteralRep {
    pub fn from_weights(n: usize, terms: &[LiteralTerm], alphas: &[Rational]) -> Self {
        let terms = terms
            .iter()
            .zip(alphas)
            .filter(|(_, a)| !a.is_zero())
            .map(|(t, a)| RepTerm {
                support_vars: t.support_vars(),
                negation_bits: t.negation_bits(),
                alpha: a.clone(),
            })
            .collect();
        NonnegLiteralRep { n, terms }
    }

    /// max |S| over retained terms; 0 for the empty representation.
    pub fn degree(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.support_vars.len())
            .max()
            .unwrap_or(0)
    }

    pub fn evaluate(&self, x: usize) -> Rational {
        let mut acc = Rational::zero();
        for t in &self.terms {
            if t.literal().satisfied(x) {
                acc += &t.alpha;
            }
        }
        acc
    }

    /// Exact pointwise check against f, plus nonnegativity of every weight.
    pub fn verify(&self, f: &PointFunction) -> bool {
        if self.n != f.n() {
            return false;
        }
        if self.terms.iter().any(|t| t.alpha.is_negative()) {
            return false;
        }
        (0..f.len()).all(|x| &self.evaluate(x) == f.value(x))
    }
}

#[derive(Debug, Clone)]
pub enum NnlOutcome {
    Representation(NonnegLiteralRep),
    Infeasible(FarkasCertificate),
}

/// Decides whether f has a degree-d nonnegative literal representation.
/// Exact both ways: the representation reproduces f on every point, and the
/// Farkas certificate is verified against the literal-term LP.
pub fn nnl_feasible(f: &PointFunction, d: usize) -> Result<NnlOutcome, NnlError> {
    let n = f.n();
    if d > n {
        return Err(NnlError::DegreeOutOfRange { d, n });
    }
    let count = term_count(n, d);
    if count > MAX_LP_TERMS {
        return Err(NnlError::TooLarge { terms: count });
    }
    let terms = literal_terms(n, d);
    let inst = build_lp(f, &terms)?;
    match solve_lp(&inst)? {
        LpOutcome::Feasible(alphas) => {
            let rep = NonnegLiteralRep::from_weights(n, &terms, &alphas);
            debug_assert!(rep.verify(f));
            Ok(NnlOutcome::Representation(rep))
        }
        LpOutcome::Infeasible(cert) => Ok(NnlOutcome::Infeasible(cert)),
    }
}

fn build_lp(f: &PointFunction, terms: &[LiteralTerm]) -> Result<RationalLpInstance, LpError> {
    let mut inst = RationalLpInstance::new(f.len(), f.values().to_vec())?;
    let one = Rational::from_integer(1.into());
    for t in terms {
        let col = t
            .satisfying_points(f.n())
            .into_iter()
            .map(|x| (x, one.clone()))
            .collect();
        inst.add_column(col)?;
    }
    Ok(inst)
}

/// Exact nonnegative literal degree with a representation at the answer and
/// a Farkas certificate at every level below it.
#[derive(Debug, Clone)]
pub struct NnlDegree {
    pub degree: usize,
    pub rep: NonnegLiteralRep,
    /// certificate for level d, for d = 0..degree-1
    pub infeasibility: Vec<FarkasCertificate>,
}

/// Ascending degree search. Level n never needs the LP: the full-support
/// point indicators reproduce any nonnegative f, and that explicit
/// representation is itself a basic solution of the level-n LP.
pub fn nnl_degree(f: &PointFunction) -> Result<NnlDegree, NnlError> {
    let n = f.n();
    let mut infeasibility = Vec::new();
    for d in 0..n {
        match nnl_feasible(f, d)? {
            NnlOutcome::Representation(rep) => {
                return Ok(NnlDegree {
                    degree: d,
                    rep,
                    infeasibility,
                })
            }
            NnlOutcome::Infeasible(cert) => infeasibility.push(cert),
        }
    }
    let rep = full_interpolation_rep(f);
    debug_assert!(rep.verify(f));
    Ok(NnlDegree {
        degree: n,
        rep,
        infeasibility,
    })
}

/// The always-feasible degree-n representation: one full-support term per
/// point with positive value, negated outside the point's support.
fn full_interpolation_rep(f: &PointFunction) -> NonnegLiteralRep {
    let n = f.n();
    let full = (1usize << n) - 1;
    let mut terms = Vec::new();
    let mut alphas = Vec::new();
    for x in 0..f.len() {
        if !f.value(x).is_zero() {
            terms.push(LiteralTerm::new(full, full & !x));
            alphas.push(f.value(x).clone());
        }
    }
    NonnegLiteralRep::from_weights(n, &terms, &alphas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{one_hot_quadratic, step_quadratic};
    use crate::rat::rat;

    fn pf(n: usize, vals: &[i64]) -> PointFunction {
        PointFunction::new(n, vals.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    #[test]
    fn zero_function_has_empty_rep_at_degree_zero() {
        let f = pf(2, &[0, 0, 0, 0]);
        match nnl_feasible(&f, 0).unwrap() {
            NnlOutcome::Representation(rep) => {
                assert!(rep.terms.is_empty());
                assert_eq!(rep.degree(), 0);
                assert!(rep.verify(&f));
            }
            _ => panic!("expected representation"),
        }
    }

    #[test]
    fn or2_infeasible_at_degree_one() {
        let f = pf(2, &[0, 1, 1, 1]);
        match nnl_feasible(&f, 1).unwrap() {
            NnlOutcome::Infeasible(cert) => {
                // re-verify against an independently built LP
                let terms = literal_terms(2, 1);
                let inst = build_lp(&f, &terms).unwrap();
                assert!(cert.verify(&inst));
            }
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn or2_degree_is_two() {
        let f = pf(2, &[0, 1, 1, 1]);
        let res = nnl_degree(&f).unwrap();
        assert_eq!(res.degree, 2);
        assert_eq!(res.infeasibility.len(), 2);
        assert!(res.rep.verify(&f));
    }

    #[test]
    fn one_hot_quadratic_feasible_at_two_on_n2() {
        // (|x|-1)^2 on n=2 has the rep (1-x1)(1-x2) + x1 x2
        let f = one_hot_quadratic(2);
        match nnl_feasible(&f, 2).unwrap() {
            NnlOutcome::Representation(rep) => {
                assert!(rep.verify(&f));
                assert_eq!(rep.degree(), 2);
            }
            _ => panic!("expected representation"),
        }
        assert_eq!(nnl_degree(&f).unwrap().degree, 2);
    }

    #[test]
    fn scaled_dictator_has_degree_one() {
        // f = 3 x1
        let f = pf(2, &[0, 3, 0, 3]);
        let res = nnl_degree(&f).unwrap();
        assert_eq!(res.degree, 1);
        assert!(res.rep.verify(&f));
    }

    #[test]
    fn step_quadratic_needs_full_degree_on_n3() {
        let f = step_quadratic(3);
        let res = nnl_degree(&f).unwrap();
        assert_eq!(res.degree, 3);
        assert_eq!(res.infeasibility.len(), 3);
        assert!(res.rep.verify(&f));
    }

    #[test]
    fn degree_out_of_range_rejected() {
        let f = pf(1, &[0, 1]);
        assert!(matches!(
            nnl_feasible(&f, 2),
            Err(NnlError::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn invariance_under_permutation_and_flip() {
        let f = pf(3, &[0, 1, 2, 0, 1, 3, 0, 2]);
        let d0 = nnl_degree(&f).unwrap().degree;
        let perm = f.permute(&[2, 0, 1]);
        assert_eq!(nnl_degree(&perm).unwrap().degree, d0);
        let flip = f.flip(0b101);
        assert_eq!(nnl_degree(&flip).unwrap().degree, d0);
    }

    #[test]
    fn rep_serialization_round_trip() {
        let f = one_hot_quadratic(2);
        let res = nnl_degree(&f).unwrap();
        let json = serde_json::to_string(&res.rep).unwrap();
        let back: NonnegLiteralRep = serde_json::from_str(&json).unwrap();
        assert_eq!(back, res.rep);
        assert!(back.verify(&f));
    }
}
