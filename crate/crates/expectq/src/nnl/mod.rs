//! Nonnegative literal degree: the randomized query cost of computing f in
//! expectation.
//!
//! A literal term is a product of variables and negated variables; f has a
//! degree-d representation when it is a nonnegative combination of terms on
//! at most d variables. Each degree probe is one exact rational LP whose
//! columns are the 0/1 indicator vectors of the terms; feasibility yields the
//! representation, infeasibility yields a Farkas certificate. The degree
//! search ascends and keeps the certificate from every level below the
//! answer.
//!
//! The same LP with the constant as an extra free variable computes
//! Sherali-Adams relaxation values, and the synthesized sampler turns a
//! representation into the matching randomized algorithm.

mod degree;
mod sampler;
mod sherali;
mod terms;

pub use degree::{nnl_degree, nnl_feasible, NnlDegree, NnlError, NnlOutcome, NonnegLiteralRep};
pub use sampler::{synthesize_sampler, SamplerAlgorithm};
pub use sherali::{sa_exact_level, sherali_adams_value, SaValue};
pub use terms::{literal_terms, term_count, LiteralTerm};
