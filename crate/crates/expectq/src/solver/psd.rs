use nalgebra::{DMatrix, DVector};
use num::traits::{Signed, Zero};
use thiserror::Error;

use crate::rat::{approx_rational, to_f64, Rational};
use crate::solver::ldl::{rational_psd_check, RatMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PsdError {
    #[error("iteration budget must be positive")]
    EmptyBudget,
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error("constraint index {idx} out of dimension {dim}")]
    IndexOutOfRange { idx: usize, dim: usize },
    #[error("dense constraint matrix must be symmetric of the instance dimension")]
    BadDenseConstraint,
}

/// Symmetric coefficient matrix of one linear equality on the matrix
/// variable. Rank-one constraints (the 2^n Gram point constraints) stay in
/// factored form; anything else is dense.
#[derive(Debug, Clone)]
pub enum ConstraintMatrix {
    /// C = u u^T with sparse u.
    RankOne(Vec<(usize, Rational)>),
    Dense(RatMatrix),
}

#[derive(Debug, Clone)]
pub struct PsdConstraint {
    pub matrix: ConstraintMatrix,
    pub target: Rational,
}

/// Find Q >= 0 (psd) with <C_j, Q> = t_j for all j.
#[derive(Debug, Clone)]
pub struct PsdFeasibilityInstance {
    dim: usize,
    constraints: Vec<PsdConstraint>,
}

#[derive(Debug, Clone, Copy)]
pub struct PsdOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PsdOptions {
    fn default() -> Self {
        PsdOptions {
            tol: 1e-8,
            max_iter: 100_000,
        }
    }
}

/// Pseudo-moment infeasibility witness: multipliers y with
/// W = sum_j y_j C_j psd (checked exactly) and sum_j y_j t_j < 0.
/// Weak duality then rules out any feasible psd Q.
#[derive(Debug, Clone)]
pub struct MomentWitness {
    pub y: Vec<Rational>,
    pub matrix: RatMatrix,
    pub value: Rational,
}

impl MomentWitness {
    /// Assembles W and the functional value exactly from multipliers.
    pub fn from_multipliers(inst: &PsdFeasibilityInstance, y: Vec<Rational>) -> MomentWitness {
        assert_eq!(y.len(), inst.constraints.len());
        let mut w = RatMatrix::zeros(inst.dim);
        let mut value = Rational::zero();
        for (c, yj) in inst.constraints.iter().zip(&y) {
            if yj.is_zero() {
                continue;
            }
            value += yj * &c.target;
            match &c.matrix {
                ConstraintMatrix::RankOne(u) => w.add_scaled_outer(yj, u),
                ConstraintMatrix::Dense(d) => {
                    for i in 0..inst.dim {
                        for j in 0..inst.dim {
                            *w.get_mut(i, j) += yj * d.get(i, j);
                        }
                    }
                }
            }
        }
        MomentWitness {
            y,
            matrix: w,
            value,
        }
    }

    /// Full exact re-check: reassembles W from y, compares, tests psd, and
    /// requires a strictly negative functional value.
    pub fn verify(&self, inst: &PsdFeasibilityInstance) -> bool {
        if self.y.len() != inst.constraints.len() {
            return false;
        }
        let rebuilt = MomentWitness::from_multipliers(inst, self.y.clone());
        if rebuilt.matrix != self.matrix || rebuilt.value != self.value {
            return false;
        }
        if !self.value.is_negative() {
            return false;
        }
        matches!(rational_psd_check(&self.matrix), Ok(true))
    }
}

#[derive(Debug)]
pub enum PsdOutcome {
    ApproxFeasible {
        q: DMatrix<f64>,
        residual: f64,
    },
    CandidateInfeasible(MomentWitness),
    Undetermined {
        residual: f64,
        gap_estimate: f64,
        /// Float multipliers of the best separating direction seen; callers
        /// with structural knowledge may round these more cleverly.
        multiplier_hint: Option<Vec<f64>>,
    },
}

impl PsdFeasibilityInstance {
    pub fn new(dim: usize) -> Self {
        PsdFeasibilityInstance {
            dim,
            constraints: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[PsdConstraint] {
        &self.constraints
    }

    pub fn add_rank_one(
        &mut self,
        u: Vec<(usize, Rational)>,
        target: Rational,
    ) -> Result<(), PsdError> {
        for (i, _) in &u {
            if *i >= self.dim {
                return Err(PsdError::IndexOutOfRange {
                    idx: *i,
                    dim: self.dim,
                });
            }
        }
        self.constraints.push(PsdConstraint {
            matrix: ConstraintMatrix::RankOne(u),
            target,
        });
        Ok(())
    }

    pub fn add_dense(&mut self, c: RatMatrix, target: Rational) -> Result<(), PsdError> {
        if c.dim() != self.dim || !c.is_symmetric() {
            return Err(PsdError::BadDenseConstraint);
        }
        self.constraints.push(PsdConstraint {
            matrix: ConstraintMatrix::Dense(c),
            target,
        });
        Ok(())
    }

    pub fn targets(&self) -> Vec<Rational> {
        self.constraints.iter().map(|c| c.target.clone()).collect()
    }
}

enum ConsF64 {
    RankOne { idx: Vec<usize>, w: Vec<f64> },
    Dense(DMatrix<f64>),
}

impl ConsF64 {
    fn inner(&self, x: &DMatrix<f64>) -> f64 {
        match self {
            ConsF64::RankOne { idx, w } => {
                let mut acc = 0.0;
                for (a, wa) in idx.iter().zip(w) {
                    let row = x.row(*a);
                    let mut dot = 0.0;
                    for (b, wb) in idx.iter().zip(w) {
                        dot += wb * row[*b];
                    }
                    acc += wa * dot;
                }
                acc
            }
            ConsF64::Dense(d) => d.dot(x),
        }
    }

    fn add_scaled_to(&self, mu: f64, x: &mut DMatrix<f64>) {
        match self {
            ConsF64::RankOne { idx, w } => {
                for (a, wa) in idx.iter().zip(w) {
                    for (b, wb) in idx.iter().zip(w) {
                        x[(*a, *b)] += mu * wa * wb;
                    }
                }
            }
            ConsF64::Dense(d) => {
                x.zip_apply(d, |xv, dv| *xv += mu * dv);
            }
        }
    }

    fn frobenius_with(&self, other: &ConsF64, dim: usize) -> f64 {
        match (self, other) {
            (ConsF64::RankOne { idx: i1, w: w1 }, ConsF64::RankOne { idx: i2, w: w2 }) => {
                // <u u^T, v v^T> = (u.v)^2
                let mut dot = 0.0;
                let mut b = 0usize;
                for (a, wa) in i1.iter().zip(w1) {
                    while b < i2.len() && i2[b] < *a {
                        b += 1;
                    }
                    if b < i2.len() && i2[b] == *a {
                        dot += wa * w2[b];
                    }
                }
                dot * dot
            }
            (ConsF64::RankOne { idx, w }, ConsF64::Dense(d))
            | (ConsF64::Dense(d), ConsF64::RankOne { idx, w }) => {
                let mut acc = 0.0;
                for (a, wa) in idx.iter().zip(w) {
                    for (b, wb) in idx.iter().zip(w) {
                        acc += wa * wb * d[(*a, *b)];
                    }
                }
                let _ = dim;
                acc
            }
            (ConsF64::Dense(d1), ConsF64::Dense(d2)) => d1.dot(d2),
        }
    }
}

struct ApSolver {
    cons: Vec<ConsF64>,
    targets: Vec<f64>,
    // eigendecomposition of the constraint Gram matrix, for least-squares
    // multiplier solves
    g_vecs: DMatrix<f64>,
    g_vals: DVector<f64>,
}

impl ApSolver {
    fn new(inst: &PsdFeasibilityInstance) -> Self {
        let cons: Vec<ConsF64> = inst
            .constraints
            .iter()
            .map(|c| match &c.matrix {
                ConstraintMatrix::RankOne(u) => {
                    let mut pairs: Vec<(usize, f64)> =
                        u.iter().map(|(i, v)| (*i, to_f64(v))).collect();
                    pairs.sort_by_key(|(i, _)| *i);
                    ConsF64::RankOne {
                        idx: pairs.iter().map(|(i, _)| *i).collect(),
                        w: pairs.iter().map(|(_, v)| *v).collect(),
                    }
                }
                ConstraintMatrix::Dense(d) => ConsF64::Dense(d.to_f64()),
            })
            .collect();
        let targets: Vec<f64> = inst.constraints.iter().map(|c| to_f64(&c.target)).collect();
        let k = cons.len();
        let mut g = DMatrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let v = cons[i].frobenius_with(&cons[j], inst.dim);
                g[(i, j)] = v;
                g[(j, i)] = v;
            }
        }
        let eig = g.symmetric_eigen();
        ApSolver {
            cons,
            targets,
            g_vecs: eig.eigenvectors,
            g_vals: eig.eigenvalues,
        }
    }

    fn residuals(&self, x: &DMatrix<f64>) -> DVector<f64> {
        DVector::from_fn(self.cons.len(), |j, _| {
            self.targets[j] - self.cons[j].inner(x)
        })
    }

    fn max_violation(&self, x: &DMatrix<f64>) -> f64 {
        self.residuals(x).amax()
    }

    /// Least-squares multipliers: mu = G^+ r.
    fn solve_multipliers(&self, r: &DVector<f64>) -> DVector<f64> {
        if self.cons.is_empty() {
            return DVector::zeros(0);
        }
        let lam_max = self.g_vals.amax();
        let cutoff = lam_max * 1e-12;
        let proj = self.g_vecs.transpose() * r;
        let scaled = DVector::from_fn(proj.len(), |i, _| {
            if self.g_vals[i].abs() > cutoff {
                proj[i] / self.g_vals[i]
            } else {
                0.0
            }
        });
        &self.g_vecs * scaled
    }

    fn project_affine(&self, x: &DMatrix<f64>) -> DMatrix<f64> {
        let r = self.residuals(x);
        let mu = self.solve_multipliers(&r);
        let mut out = x.clone();
        for (j, c) in self.cons.iter().enumerate() {
            if mu[j] != 0.0 {
                c.add_scaled_to(mu[j], &mut out);
            }
        }
        out
    }

    fn project_psd(&self, x: &DMatrix<f64>) -> DMatrix<f64> {
        let sym = (x + x.transpose()) * 0.5;
        let mut eig = sym.symmetric_eigen();
        for v in eig.eigenvalues.iter_mut() {
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        eig.recompose()
    }

    /// Multipliers expressing the separating direction W in the constraint
    /// span: y with sum_j y_j C_j ~ W.
    fn witness_multipliers(&self, w: &DMatrix<f64>) -> Vec<f64> {
        let c = DVector::from_fn(self.cons.len(), |j, _| self.cons[j].inner(w));
        self.solve_multipliers(&c).iter().copied().collect()
    }
}

/// Alternating projections between the psd cone and the constraint subspace.
///
/// Feasible instances converge to a psd iterate meeting every constraint to
/// `tol`; strictly infeasible ones converge to a positive gap whose
/// displacement direction separates the sets, which after exact rational
/// rounding becomes a [`MomentWitness`]. If neither materializes within the
/// budget the answer is Undetermined with the best separating multipliers.
pub fn solve_psd(
    inst: &PsdFeasibilityInstance,
    opts: PsdOptions,
) -> Result<PsdOutcome, PsdError> {
    if opts.max_iter == 0 {
        return Err(PsdError::EmptyBudget);
    }
    if !(opts.tol > 0.0) {
        return Err(PsdError::BadTolerance);
    }
    let ap = ApSolver::new(inst);
    let zero = DMatrix::zeros(inst.dim, inst.dim);
    // start on the affine side
    let mut a = ap.project_affine(&zero);
    let mut prev_gap = f64::INFINITY;
    let mut best_hint: Option<Vec<f64>> = None;
    let mut last_residual = f64::INFINITY;

    let check_every = 50usize;
    let mut iter = 0usize;
    while iter < opts.max_iter {
        let p = ap.project_psd(&a);
        let res = ap.max_violation(&p);
        last_residual = res;
        if res <= opts.tol {
            return Ok(PsdOutcome::ApproxFeasible {
                q: p,
                residual: res,
            });
        }
        let w_float = &p - &a;
        let gap = w_float.norm();
        if iter % check_every == check_every - 1 {
            let stalled = (prev_gap - gap).abs() <= 1e-9 * gap.max(1e-12);
            if stalled && gap > opts.tol * 100.0 {
                let y_float = ap.witness_multipliers(&w_float);
                best_hint = Some(y_float.clone());
                if let Some(w) = round_witness(inst, &y_float) {
                    return Ok(PsdOutcome::CandidateInfeasible(w));
                }
            }
            prev_gap = gap;
        }
        a = ap.project_affine(&p);
        iter += 1;
    }
    // budget exhausted; one last witness attempt from the current direction
    let p = ap.project_psd(&a);
    let w_float = &p - &a;
    let gap = w_float.norm();
    let y_float = ap.witness_multipliers(&w_float);
    if gap > opts.tol {
        if let Some(w) = round_witness(inst, &y_float) {
            return Ok(PsdOutcome::CandidateInfeasible(w));
        }
        best_hint = Some(y_float);
    }
    Ok(PsdOutcome::Undetermined {
        residual: last_residual,
        gap_estimate: gap,
        multiplier_hint: best_hint,
    })
}

/// Denominator cap for continued-fraction rounding of witness multipliers.
pub const WITNESS_DENOMINATOR_CAP: u64 = 1_000_000;

/// Rounds float multipliers to exact rationals and verifies the witness.
/// Tries the raw scale first, then normalized so the functional value is -1.
pub fn round_witness(inst: &PsdFeasibilityInstance, y_float: &[f64]) -> Option<MomentWitness> {
    let yt: f64 = y_float
        .iter()
        .zip(inst.constraints.iter())
        .map(|(y, c)| y * to_f64(&c.target))
        .sum();
    if !(yt < 0.0) {
        return None;
    }
    let scales = [1.0, -1.0 / yt];
    for cap in [1_000u64, WITNESS_DENOMINATOR_CAP] {
        for scale in scales {
            let y: Option<Vec<Rational>> = y_float
                .iter()
                .map(|v| approx_rational(v * scale, cap))
                .collect();
            let Some(y) = y else { continue };
            let w = MomentWitness::from_multipliers(inst, y);
            if w.value.is_negative() && matches!(rational_psd_check(&w.matrix), Ok(true)) {
                return Some(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn trivial_feasible() {
        // 1x1: Q11 = 1
        let mut inst = PsdFeasibilityInstance::new(1);
        inst.add_rank_one(vec![(0, rat(1))], rat(1)).unwrap();
        match solve_psd(&inst, PsdOptions::default()).unwrap() {
            PsdOutcome::ApproxFeasible { q, residual } => {
                assert!((q[(0, 0)] - 1.0).abs() < 1e-7);
                assert!(residual <= 1e-8);
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn trivial_infeasible_with_exact_witness() {
        // 1x1: Q11 = -1
        let mut inst = PsdFeasibilityInstance::new(1);
        inst.add_rank_one(vec![(0, rat(1))], rat(-1)).unwrap();
        match solve_psd(&inst, PsdOptions::default()).unwrap() {
            PsdOutcome::CandidateInfeasible(w) => {
                assert!(w.verify(&inst));
                assert!(w.value.is_negative());
                assert_eq!(w.matrix.get(0, 0), &rat(1));
                assert_eq!(w.value, rat(-1));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn two_dim_feasible_interior() {
        // diag targets 1, 2; off-diagonal via dense constraint = 0
        let mut inst = PsdFeasibilityInstance::new(2);
        inst.add_rank_one(vec![(0, rat(1))], rat(1)).unwrap();
        inst.add_rank_one(vec![(1, rat(1))], rat(2)).unwrap();
        let mut c = RatMatrix::zeros(2);
        *c.get_mut(0, 1) = rat(1);
        *c.get_mut(1, 0) = rat(1);
        inst.add_dense(c, rat(0)).unwrap();
        match solve_psd(&inst, PsdOptions::default()).unwrap() {
            PsdOutcome::ApproxFeasible { q, .. } => {
                assert!((q[(0, 0)] - 1.0).abs() < 1e-6);
                assert!((q[(1, 1)] - 2.0).abs() < 1e-6);
                assert!(q[(0, 1)].abs() < 1e-6);
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_by_diagonal_sandwich() {
        // Q11 = 0 forces row to vanish, but Q12 = 1 demanded
        let mut inst = PsdFeasibilityInstance::new(2);
        inst.add_rank_one(vec![(0, rat(1))], rat(0)).unwrap();
        let mut c = RatMatrix::zeros(2);
        *c.get_mut(0, 1) = rat(1);
        *c.get_mut(1, 0) = rat(1);
        inst.add_dense(c, rat(2)).unwrap();
        inst.add_rank_one(vec![(1, rat(1))], rat(1)).unwrap();
        match solve_psd(&inst, PsdOptions::default()).unwrap() {
            PsdOutcome::CandidateInfeasible(w) => assert!(w.verify(&inst)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn budget_validation() {
        let inst = PsdFeasibilityInstance::new(1);
        assert_eq!(
            solve_psd(
                &inst,
                PsdOptions {
                    tol: 1e-8,
                    max_iter: 0
                }
            )
            .err(),
            Some(PsdError::EmptyBudget)
        );
    }

    #[test]
    fn witness_rejects_tampering() {
        let mut inst = PsdFeasibilityInstance::new(1);
        inst.add_rank_one(vec![(0, rat(1))], rat(-1)).unwrap();
        let good = MomentWitness::from_multipliers(&inst, vec![rat(1)]);
        assert!(good.verify(&inst));
        let mut bad = good.clone();
        bad.value = rat(-2);
        assert!(!bad.verify(&inst));
        // positive value is not a certificate
        let pos = MomentWitness::from_multipliers(&inst, vec![rat(-1)]);
        assert!(!pos.verify(&inst));
    }
}
