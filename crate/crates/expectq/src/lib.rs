//! Query complexity in expectation, computed exactly.
//!
//! An algorithm computes a nonnegative function f on {0,1}^n *in expectation*
//! when its output is a nonnegative random variable whose mean on input x is
//! exactly f(x). The randomized and quantum query costs of this task are
//! polynomial degrees in disguise, and both are computable at desk scale:
//!
//! - the randomized cost equals the *nonnegative literal degree*: the least d
//!   such that f is a nonnegative combination of products of at most d
//!   literals. Decided by an exact rational LP with Farkas certificates
//!   ([`nnl`]).
//! - the quantum cost equals the *sum-of-squares degree*: the least d such
//!   that f = sum of squares of degree-d polynomials on the cube. Decided by
//!   a Gram-matrix SDP with exactly verified pseudo-moment witnesses on the
//!   infeasible side ([`sos`]).
//!
//! On top of the two degree engines sit the synthesized algorithms and their
//! exact simulators ([`sim`]), Sherali-Adams and Lasserre hierarchy levels
//! ([`nnl`], [`sos`]), a staged Grover search model with its approximate
//! counting function ([`grover`]), and the matrix side: AND-composed
//! matrices, correlation-polytope slack submatrices, psd/nonnegative
//! factorizations, and the perfect-matching slack matrix with its entrywise
//! approximation ([`factors`]).
//!
//! Everything degree-facing is exact: function values, LP pivoting,
//! certificate checks, and witness verification run over arbitrary-precision
//! rationals. Floating point appears only inside the SDP iteration and in
//! quantities that are intrinsically approximate (Gram matrices, state
//! vectors, Grover probabilities).

pub mod cube;
pub mod factors;
pub mod func;
pub mod grover;
pub mod instances;
pub mod nnl;
pub mod rat;
pub mod sim;
pub mod solver;
pub mod sos;

pub use rat::Rational;

/// Hard cap on the number of variables; everything here enumerates all 2^n
/// cube points, so larger n is out of scope by design.
pub const MAX_VARS: usize = 12;
