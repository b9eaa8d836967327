//! Exact representations of functions on {0,1}^n and their polynomial
//! transforms: multilinear interpolation, Fourier coefficients,
//! symmetrization, and deterministic decision-tree depth.

mod dtree;
mod multilinear;
mod point;
mod specfile;
mod symmetric;
mod unipoly;

pub use dtree::{decision_tree_depth, decision_tree_depth_capped, DtreeError, DEFAULT_DEPTH_CAP};
pub use multilinear::{from_fourier, interpolate_multilinear, to_fourier, FourierTable, MultilinearPoly};
pub use point::{PointFunction, PointFunctionError};
pub use specfile::{function_from_json, function_to_json, SpecFileError};
pub use symmetric::{symmetrize, symmetrize_values, SymmetricProfile};
pub use unipoly::{PolyScalar, UnivariatePoly};
