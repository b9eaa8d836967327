use num::traits::Zero;
use serde::{Deserialize, Serialize};

use crate::nnl::degree::NonnegLiteralRep;
use crate::rat::{serde_rational, Rational};

/// The randomized algorithm induced by a literal representation: draw a term
/// with probability alpha/M, query its support, output M when all literals
/// hold and 0 otherwise. The expectation on input x is exactly the
/// represented function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerAlgorithm {
    pub n: usize,
    /// Total mass M = sum of alphas.
    #[serde(with = "serde_rational")]
    pub total_mass: Rational,
    pub rep: NonnegLiteralRep,
    /// Worst-case queries: the representation degree.
    pub query_cost: usize,
}

/// Builds the sampler. An empty representation (f identically zero) yields
/// the algorithm that outputs 0 with no queries.
pub fn synthesize_sampler(rep: &NonnegLiteralRep) -> SamplerAlgorithm {
    let total_mass: Rational = rep.terms.iter().map(|t| t.alpha.clone()).sum();
    SamplerAlgorithm {
        n: rep.n,
        query_cost: rep.degree(),
        total_mass,
        rep: rep.clone(),
    }
}

impl SamplerAlgorithm {
    /// Probability of drawing each term, in representation order.
    pub fn probabilities(&self) -> Vec<Rational> {
        if self.total_mass.is_zero() {
            return vec![Rational::zero(); self.rep.terms.len()];
        }
        self.rep
            .terms
            .iter()
            .map(|t| &t.alpha / &self.total_mass)
            .collect()
    }

    /// Exact expectation on input x: M * P(drawn term satisfied at x).
    pub fn exact_expectation(&self, x: usize) -> Rational {
        self.rep.evaluate(x)
    }

    /// Probability that the output is M (rather than 0) on input x.
    pub fn success_probability(&self, x: usize) -> Rational {
        if self.total_mass.is_zero() {
            return Rational::zero();
        }
        &self.rep.evaluate(x) / &self.total_mass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::one_hot_quadratic;
    use crate::nnl::nnl_degree;
    use crate::rat::{rat, ratio};

    #[test]
    fn sampler_for_one_hot_quadratic_n2() {
        let f = one_hot_quadratic(2);
        let rep = nnl_degree(&f).unwrap().rep;
        let s = synthesize_sampler(&rep);
        assert_eq!(s.total_mass, rat(2));
        assert_eq!(s.query_cost, 2);
        // on 00 the expectation is (1/2) * 2 * 1 + (1/2) * 2 * 0 = 1
        assert_eq!(s.exact_expectation(0b00), rat(1));
        assert_eq!(s.success_probability(0b00), ratio(1, 2));
        for x in 0..4 {
            assert_eq!(&s.exact_expectation(x), f.value(x));
        }
        let probs = s.probabilities();
        assert_eq!(probs.iter().sum::<Rational>(), rat(1));
    }

    #[test]
    fn zero_function_sampler() {
        let f = crate::func::PointFunction::constant(2, rat(0)).unwrap();
        let rep = nnl_degree(&f).unwrap().rep;
        let s = synthesize_sampler(&rep);
        assert!(s.total_mass.is_zero());
        assert_eq!(s.query_cost, 0);
        assert_eq!(s.exact_expectation(0b11), rat(0));
    }

    #[test]
    fn constant_representation_outputs_deterministically() {
        let f = crate::func::PointFunction::constant(2, rat(5)).unwrap();
        let rep = nnl_degree(&f).unwrap().rep;
        let s = synthesize_sampler(&rep);
        assert_eq!(s.query_cost, 0);
        assert_eq!(s.total_mass, rat(5));
        for x in 0..4 {
            assert_eq!(s.exact_expectation(x), rat(5));
            assert_eq!(s.success_probability(x), rat(1));
        }
    }
}
