//! Backend feasibility solvers.
//!
//! Two engines, one per cone:
//! - exact rational LP (find x >= 0 with Ax = b) via primal simplex with
//!   Bland's rule, returning either a solution or a Farkas certificate, both
//!   re-verified exactly before they leave the module;
//! - psd feasibility via alternating projections between the psd cone and
//!   the constraint subspace, returning a float solution, an exactly
//!   verified pseudo-moment infeasibility witness, or Undetermined.

mod ldl;
mod lp;
mod psd;

pub use ldl::{rational_psd_check, LdlError, RatMatrix};
pub use lp::{
    minimize_lp, solve_lp, FarkasCertificate, LpError, LpMinOutcome, LpOutcome, RationalLpInstance,
};
pub use psd::{
    solve_psd, ConstraintMatrix, MomentWitness, PsdConstraint, PsdError, PsdFeasibilityInstance,
    PsdOptions, PsdOutcome,
};
