use num::traits::{Signed, Zero};
use thiserror::Error;

use crate::rat::{to_f64, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("column entry row {row} out of range {rows}")]
    RowOutOfRange { row: usize, rows: usize },
    #[error("objective length {got} does not match variable count {expected}")]
    ObjectiveMismatch { expected: usize, got: usize },
    #[error("rhs length {got} does not match row count {expected}")]
    RhsMismatch { expected: usize, got: usize },
    #[error("internal simplex invariant violated: {0}")]
    Internal(&'static str),
}

/// Feasibility-form LP data: find x >= 0 with Ax = b. Columns are sparse.
#[derive(Debug, Clone)]
pub struct RationalLpInstance {
    rows: usize,
    cols: Vec<Vec<(usize, Rational)>>,
    rhs: Vec<Rational>,
}

impl RationalLpInstance {
    pub fn new(rows: usize, rhs: Vec<Rational>) -> Result<Self, LpError> {
        if rhs.len() != rows {
            return Err(LpError::RhsMismatch {
                expected: rows,
                got: rhs.len(),
            });
        }
        Ok(RationalLpInstance {
            rows,
            cols: Vec::new(),
            rhs,
        })
    }

    pub fn add_column(&mut self, entries: Vec<(usize, Rational)>) -> Result<usize, LpError> {
        for (r, _) in &entries {
            if *r >= self.rows {
                return Err(LpError::RowOutOfRange {
                    row: *r,
                    rows: self.rows,
                });
            }
        }
        self.cols.push(entries);
        Ok(self.cols.len() - 1)
    }

    pub fn from_dense(a: &[Vec<Rational>], b: Vec<Rational>) -> Result<Self, LpError> {
        let rows = a.len();
        let mut inst = Self::new(rows, b)?;
        let nvars = a.first().map_or(0, Vec::len);
        for j in 0..nvars {
            let col = (0..rows)
                .filter(|&i| !a[i][j].is_zero())
                .map(|i| (i, a[i][j].clone()))
                .collect();
            inst.add_column(col)?;
        }
        Ok(inst)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn num_vars(&self) -> usize {
        self.cols.len()
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.cols[j]
    }

    /// Exact check of Ax = b and x >= 0; the independent side of the solver.
    pub fn check_solution(&self, x: &[Rational]) -> bool {
        if x.len() != self.cols.len() || x.iter().any(Signed::is_negative) {
            return false;
        }
        let mut ax = vec![Rational::zero(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            if x[j].is_zero() {
                continue;
            }
            for (r, v) in col {
                ax[*r] += v * &x[j];
            }
        }
        ax == self.rhs
    }

    /// Exact check of y^T A <= 0 (componentwise) and y^T b > 0.
    pub fn check_farkas(&self, y: &[Rational]) -> bool {
        if y.len() != self.rows {
            return false;
        }
        for col in &self.cols {
            let dot: Rational = col.iter().map(|(r, v)| &y[*r] * v).sum();
            if dot.is_positive() {
                return false;
            }
        }
        let yb: Rational = self.rhs.iter().zip(y).map(|(b, yi)| b * yi).sum();
        yb.is_positive()
    }
}

/// Infeasibility certificate: y with y^T A <= 0 and y^T b > 0.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FarkasCertificate {
    #[serde(with = "crate::rat::serde_rational_vec")]
    pub y: Vec<Rational>,
}

impl FarkasCertificate {
    pub fn verify(&self, inst: &RationalLpInstance) -> bool {
        inst.check_farkas(&self.y)
    }
}

#[derive(Debug, Clone)]
pub enum LpOutcome {
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
}

#[derive(Debug, Clone)]
pub enum LpMinOutcome {
    Optimal {
        x: Vec<Rational>,
        value: Rational,
        /// Dual prices proving optimality: y^T A <= c and y^T b = value.
        dual: Vec<Rational>,
    },
    Infeasible(FarkasCertificate),
    Unbounded,
}

/// Decides Ax = b, x >= 0 by phase-1 simplex with Bland's rule, so the
/// method is deterministic and cannot cycle. Pricing is pre-screened in
/// floating point, but every entering decision and the final optimality
/// claim are settled exactly. Both answers are re-verified exactly before
/// being returned.
pub fn solve_lp(inst: &RationalLpInstance) -> Result<LpOutcome, LpError> {
    let mut s = Simplex::new(inst);
    let feasible = s.run_phase1()?;
    if !feasible {
        let y = s.farkas();
        if !inst.check_farkas(&y) {
            return Err(LpError::Internal("farkas certificate failed verification"));
        }
        return Ok(LpOutcome::Infeasible(FarkasCertificate { y }));
    }
    let x = s.structural_solution();
    if !inst.check_solution(&x) {
        return Err(LpError::Internal("feasible point failed verification"));
    }
    Ok(LpOutcome::Feasible(x))
}

/// Minimizes c^T x over Ax = b, x >= 0 (phase-1 then phase-2).
/// Optimality is certified by exact dual feasibility and strong duality.
pub fn minimize_lp(inst: &RationalLpInstance, obj: &[Rational]) -> Result<LpMinOutcome, LpError> {
    if obj.len() != inst.num_vars() {
        return Err(LpError::ObjectiveMismatch {
            expected: inst.num_vars(),
            got: obj.len(),
        });
    }
    let mut s = Simplex::new(inst);
    if !s.run_phase1()? {
        let y = s.farkas();
        if !inst.check_farkas(&y) {
            return Err(LpError::Internal("farkas certificate failed verification"));
        }
        return Ok(LpMinOutcome::Infeasible(FarkasCertificate { y }));
    }

    match s.purge_artificials() {
        PurgeResult::Clean => {}
        PurgeResult::RedundantRows(drop) => {
            // Dependent equality rows: solve the reduced system and lift the
            // dual back with zero weight on the dropped rows.
            let keep: Vec<usize> = (0..inst.rows()).filter(|r| !drop.contains(r)).collect();
            let mut remap = vec![usize::MAX; inst.rows()];
            for (new, &old) in keep.iter().enumerate() {
                remap[old] = new;
            }
            let mut reduced = RationalLpInstance::new(
                keep.len(),
                keep.iter().map(|&r| inst.rhs[r].clone()).collect(),
            )?;
            for col in &inst.cols {
                let entries = col
                    .iter()
                    .filter(|(r, _)| remap[*r] != usize::MAX)
                    .map(|(r, v)| (remap[*r], v.clone()))
                    .collect();
                reduced.add_column(entries)?;
            }
            return match minimize_lp(&reduced, obj)? {
                LpMinOutcome::Optimal { x, value, dual } => {
                    let mut lifted = vec![Rational::zero(); inst.rows()];
                    for (new, &old) in keep.iter().enumerate() {
                        lifted[old] = dual[new].clone();
                    }
                    verify_optimal(inst, obj, &x, &value, &lifted)?;
                    Ok(LpMinOutcome::Optimal {
                        x,
                        value,
                        dual: lifted,
                    })
                }
                // reduced system is feasible by construction
                LpMinOutcome::Infeasible(_) => {
                    Err(LpError::Internal("reduced system became infeasible"))
                }
                LpMinOutcome::Unbounded => Ok(LpMinOutcome::Unbounded),
            };
        }
    }

    match s.run_phase2(obj)? {
        Phase2Result::Optimal => {
            let x = s.structural_solution();
            let value: Rational = obj.iter().zip(&x).map(|(c, xi)| c * xi).sum();
            let dual = s.current_duals();
            verify_optimal(inst, obj, &x, &value, &dual)?;
            Ok(LpMinOutcome::Optimal { x, value, dual })
        }
        Phase2Result::Unbounded => Ok(LpMinOutcome::Unbounded),
    }
}

fn verify_optimal(
    inst: &RationalLpInstance,
    obj: &[Rational],
    x: &[Rational],
    value: &Rational,
    dual: &[Rational],
) -> Result<(), LpError> {
    if !inst.check_solution(x) {
        return Err(LpError::Internal("optimal point failed verification"));
    }
    let cx: Rational = obj.iter().zip(x).map(|(c, xi)| c * xi).sum();
    if &cx != value {
        return Err(LpError::Internal("objective value mismatch"));
    }
    // dual feasibility: c_j - y^T a_j >= 0 for every column
    for (j, col) in inst.cols.iter().enumerate() {
        let ya: Rational = col.iter().map(|(r, v)| &dual[*r] * v).sum();
        if (&obj[j] - &ya).is_negative() {
            return Err(LpError::Internal("dual infeasible at optimum"));
        }
    }
    // strong duality
    let yb: Rational = inst.rhs.iter().zip(dual).map(|(b, yi)| b * yi).sum();
    if &yb != value {
        return Err(LpError::Internal("strong duality gap at optimum"));
    }
    Ok(())
}

enum PurgeResult {
    Clean,
    RedundantRows(Vec<usize>),
}

enum Phase2Result {
    Optimal,
    Unbounded,
}

/// Revised simplex state over the row-flipped instance (rhs made nonnegative
/// so the artificial basis is feasible). Variable j < nstruct is structural;
/// variable nstruct + i is the artificial of row i. Exact state throughout;
/// floats only pre-screen pricing candidates.
struct Simplex<'a> {
    inst: &'a RationalLpInstance,
    m: usize,
    nstruct: usize,
    flipped: Vec<bool>,
    binv: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    xb: Vec<Rational>,
    is_basic: Vec<bool>,
    /// exact prices for the current phase costs, maintained per pivot
    pi: Vec<Rational>,
    /// float mirror of the prices, kept in sync with pi
    pi_f: Vec<f64>,
    /// float mirrors of the flipped columns, for pricing
    cols_f: Vec<Vec<(usize, f64)>>,
    /// structural costs of the current phase
    costs: Vec<Rational>,
    costs_f: Vec<f64>,
    /// scratch: float reduced costs and their accumulated magnitudes
    rc_f: Vec<f64>,
    rc_scale: Vec<f64>,
}

impl<'a> Simplex<'a> {
    fn new(inst: &'a RationalLpInstance) -> Self {
        let m = inst.rows();
        let flipped: Vec<bool> = inst.rhs.iter().map(Signed::is_negative).collect();
        let b: Vec<Rational> = inst
            .rhs
            .iter()
            .zip(&flipped)
            .map(|(v, &f)| if f { -v.clone() } else { v.clone() })
            .collect();
        let mut binv = vec![vec![Rational::zero(); m]; m];
        for (i, row) in binv.iter_mut().enumerate() {
            row[i] = Rational::from_integer(1.into());
        }
        let cols_f = inst
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(r, v)| {
                        let x = to_f64(v);
                        (*r, if flipped[*r] { -x } else { x })
                    })
                    .collect()
            })
            .collect();
        let nstruct = inst.num_vars();
        Simplex {
            inst,
            m,
            nstruct,
            flipped,
            xb: b,
            binv,
            basis: (0..m).map(|i| nstruct + i).collect(),
            is_basic: vec![false; nstruct],
            pi: Vec::new(),
            cols_f,
            costs: vec![Rational::zero(); nstruct],
            costs_f: vec![0.0; nstruct],
            rc_f: vec![0.0; nstruct],
            rc_scale: vec![0.0; nstruct],
        }
    }

    /// Entry of structural column j in flipped row space.
    fn col_iter(&self, j: usize) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.inst.cols[j].iter().map(move |(r, v)| {
            let val = if self.flipped[*r] { -v.clone() } else { v.clone() };
            (*r, val)
        })
    }

    fn is_artificial(&self, var: usize) -> bool {
        var >= self.nstruct
    }

    /// pi = c_B^T B^{-1} from scratch for the current phase costs
    /// (artificial cost given by `art_cost`).
    fn recompute_pi(&mut self, art_cost: &Rational) {
        let mut pi = vec![Rational::zero(); self.m];
        for (i, &var) in self.basis.iter().enumerate() {
            let c = if self.is_artificial(var) {
                art_cost.clone()
            } else {
                self.costs[var].clone()
            };
            if c.is_zero() {
                continue;
            }
            for (p, bij) in pi.iter_mut().zip(&self.binv[i]) {
                if !bij.is_zero() {
                    *p += &c * bij;
                }
            }
        }
        self.pi = pi;
    }

    fn exact_reduced_cost(&self, j: usize) -> Rational {
        let mut rc = self.costs[j].clone();
        for (r, v) in self.col_iter(j) {
            if !self.pi[r].is_zero() {
                rc -= &self.pi[r] * &v;
            }
        }
        rc
    }

    /// Float reduced costs for every nonbasic structural column, with the
    /// accumulated magnitude that bounds their rounding error.
    fn float_pricing(&mut self) {
        let pi_f: Vec<f64> = self.pi.iter().map(to_f64).collect();
        for j in 0..self.nstruct {
            if self.is_basic[j] {
                self.rc_f[j] = f64::INFINITY;
                self.rc_scale[j] = 0.0;
                continue;
            }
            let mut rc = self.costs_f[j];
            let mut scale = rc.abs();
            for (r, v) in &self.cols_f[j] {
                let t = pi_f[*r] * v;
                rc -= t;
                scale += t.abs();
            }
            self.rc_f[j] = rc;
            self.rc_scale[j] = scale;
        }
    }

    /// First structural column with exactly negative reduced cost (Bland).
    /// Columns whose float reduced cost is positive beyond its error bound
    /// are trusted nonnegative in the first pass; if only such columns
    /// remain, a full exact scan settles optimality.
    fn choose_entering(&mut self) -> Option<(usize, Rational)> {
        self.float_pricing();
        for j in 0..self.nstruct {
            if self.is_basic[j] {
                continue;
            }
            let tau = self.rc_scale[j] * 1e-12 + 1e-300;
            if self.rc_f[j] > tau {
                continue;
            }
            let rc = self.exact_reduced_cost(j);
            if rc.is_negative() {
                return Some((j, rc));
            }
        }
        // optimality is never declared on float evidence alone
        for j in 0..self.nstruct {
            if self.is_basic[j] {
                continue;
            }
            let rc = self.exact_reduced_cost(j);
            if rc.is_negative() {
                return Some((j, rc));
            }
        }
        None
    }

    /// u = B^{-1} a_j for structural column j.
    fn pivot_column(&self, j: usize) -> Vec<Rational> {
        let mut u = vec![Rational::zero(); self.m];
        for (r, v) in self.col_iter(j) {
            for (ui, row) in u.iter_mut().zip(&self.binv) {
                if !row[r].is_zero() {
                    *ui += &row[r] * &v;
                }
            }
        }
        u
    }

    /// Bland ratio test: min xb_i/u_i over u_i > 0, ties to the smallest
    /// basic variable index. None when u <= 0.
    fn ratio_test(&self, u: &[Rational]) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for i in 0..self.m {
            if !u[i].is_positive() {
                continue;
            }
            let ratio = &self.xb[i] / &u[i];
            match &best {
                None => best = Some((i, ratio)),
                Some((bi, br)) => {
                    if ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]) {
                        best = Some((i, ratio));
                    }
                }
            }
        }
        best.map(|(i, _)| i)
    }

    /// Basis change at `row`; updates B^{-1}, the basic values, and the
    /// exact prices (pi += (rc_q / u_r) * old row r of B^{-1}). The pivot
    /// row is usually very sparse, so updates run over its support only.
    fn pivot(&mut self, row: usize, var: usize, u: &[Rational], rc_q: &Rational) {
        let theta = &self.xb[row] / &u[row];
        // pi' = pi + (rc_q / u_r) * (old row r of B^{-1})
        let price_step = rc_q / &u[row];
        let mut support: Vec<usize> = Vec::new();
        for (idx, v) in self.binv[row].iter().enumerate() {
            if !v.is_zero() {
                if !price_step.is_zero() {
                    self.pi[idx] += &price_step * v;
                }
                support.push(idx);
            }
        }
        // normalize pivot row of B^{-1}
        let inv_pivot = Rational::from_integer(1.into()) / &u[row];
        for &idx in &support {
            let v = &mut self.binv[row][idx];
            *v = &*v * &inv_pivot;
        }
        let pivot_row = self.binv[row].clone();
        for i in 0..self.m {
            if i == row || u[i].is_zero() {
                continue;
            }
            let row_i = &mut self.binv[i];
            for &idx in &support {
                row_i[idx] -= &u[i] * &pivot_row[idx];
            }
            if !theta.is_zero() {
                self.xb[i] -= &theta * &u[i];
            }
        }
        self.xb[row] = theta;
        let leaving = self.basis[row];
        if !self.is_artificial(leaving) {
            self.is_basic[leaving] = false;
        }
        self.basis[row] = var;
        if !self.is_artificial(var) {
            self.is_basic[var] = true;
        }
    }

    fn set_phase1_costs(&mut self) {
        for c in self.costs.iter_mut() {
            *c = Rational::zero();
        }
        self.costs_f.iter_mut().for_each(|c| *c = 0.0);
        // artificial basis, cost 1 each: pi starts at the flipped unit prices
        self.recompute_pi(&Rational::from_integer(1.into()));
    }

    /// Phase-1: minimize the sum of artificials. True iff that optimum is 0.
    fn run_phase1(&mut self) -> Result<bool, LpError> {
        self.set_phase1_costs();
        let mut iters = 0usize;
        let t0 = std::time::Instant::now();
        loop {
            iters += 1;
            if iters % 200 == 0 {
                let bits: usize = self.binv.iter().flat_map(|r| r.iter()).map(|v| v.numer().bits() as usize + v.denom().bits() as usize).sum();
                let nnz: usize = self.binv.iter().flat_map(|r| r.iter()).filter(|v| !v.is_zero()).count();
                eprintln!("iter {} bits/e {} nnz {}% elapsed {:?}", iters, bits / (self.m * self.m), nnz * 100 / (self.m * self.m), t0.elapsed());
            }
            let Some((q, rc)) = self.choose_entering() else {
                let infeas: Rational = self
                    .basis
                    .iter()
                    .zip(&self.xb)
                    .filter(|(v, _)| self.is_artificial(**v))
                    .map(|(_, x)| x.clone())
                    .sum();
                return Ok(infeas.is_zero());
            };
            let u = self.pivot_column(q);
            let Some(r) = self.ratio_test(&u) else {
                // phase-1 objective is bounded below by 0
                return Err(LpError::Internal("phase-1 ratio test found no pivot"));
            };
            self.pivot(r, q, &u, &rc);
        }
    }

    /// Farkas vector from the phase-1 optimum, mapped back to original rows.
    fn farkas(&self) -> Vec<Rational> {
        self.pi
            .iter()
            .zip(&self.flipped)
            .map(|(p, &f)| if f { -p.clone() } else { p.clone() })
            .collect()
    }

    fn structural_solution(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.nstruct];
        for (i, &var) in self.basis.iter().enumerate() {
            if var < self.nstruct {
                x[var] = self.xb[i].clone();
            }
        }
        x
    }

    /// Pivots out artificials stuck in the basis at zero. Rows where no
    /// structural column can replace them are reported as redundant.
    fn purge_artificials(&mut self) -> PurgeResult {
        let mut redundant = Vec::new();
        for row in 0..self.m {
            if !self.is_artificial(self.basis[row]) {
                continue;
            }
            debug_assert!(self.xb[row].is_zero(), "artificial basic above zero");
            let mut replaced = false;
            for j in 0..self.nstruct {
                if self.is_basic[j] {
                    continue;
                }
                // only row `row` of u decides replaceability
                let mut urow = Rational::zero();
                for (r, v) in self.col_iter(j) {
                    if !self.binv[row][r].is_zero() {
                        urow += &self.binv[row][r] * &v;
                    }
                }
                if !urow.is_zero() {
                    let u = self.pivot_column(j);
                    let rc = self.exact_reduced_cost(j);
                    self.pivot(row, j, &u, &rc);
                    replaced = true;
                    break;
                }
            }
            if !replaced {
                redundant.push(row);
            }
        }
        if redundant.is_empty() {
            PurgeResult::Clean
        } else {
            PurgeResult::RedundantRows(redundant)
        }
    }

    fn run_phase2(&mut self, obj: &[Rational]) -> Result<Phase2Result, LpError> {
        self.costs = obj.to_vec();
        self.costs_f = obj.iter().map(to_f64).collect();
        self.recompute_pi(&Rational::zero());
        loop {
            let Some((q, rc)) = self.choose_entering() else {
                return Ok(Phase2Result::Optimal);
            };
            let u = self.pivot_column(q);
            let Some(r) = self.ratio_test(&u) else {
                return Ok(Phase2Result::Unbounded);
            };
            self.pivot(r, q, &u, &rc);
        }
    }

    fn current_duals(&self) -> Vec<Rational> {
        self.pi
            .iter()
            .zip(&self.flipped)
            .map(|(p, &f)| if f { -p.clone() } else { p.clone() })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn inst(a: &[&[i64]], b: &[i64]) -> RationalLpInstance {
        let rows: Vec<Vec<Rational>> = a
            .iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        RationalLpInstance::from_dense(&rows, b.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    #[test]
    fn single_equation_feasible() {
        let i = inst(&[&[1]], &[1]);
        match solve_lp(&i).unwrap() {
            LpOutcome::Feasible(x) => assert_eq!(x, vec![rat(1)]),
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn single_equation_infeasible() {
        let i = inst(&[&[1]], &[-1]);
        match solve_lp(&i).unwrap() {
            LpOutcome::Infeasible(cert) => {
                assert_eq!(cert.y, vec![rat(-1)]);
                assert!(cert.verify(&i));
            }
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn two_variable_system() {
        // x1 + x2 = 3, x1 - x2 = 1 -> (2, 1)
        let i = inst(&[&[1, 1], &[1, -1]], &[3, 1]);
        match solve_lp(&i).unwrap() {
            LpOutcome::Feasible(x) => {
                assert!(i.check_solution(&x));
                assert_eq!(x, vec![rat(2), rat(1)]);
            }
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn infeasible_by_sign() {
        // x1 + x2 = -2 with x >= 0
        let i = inst(&[&[1, 1]], &[-2]);
        match solve_lp(&i).unwrap() {
            LpOutcome::Infeasible(cert) => assert!(cert.verify(&i)),
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn infeasible_by_combination() {
        // x1 = 1, x1 = 2 simultaneously
        let i = inst(&[&[1], &[1]], &[1, 2]);
        match solve_lp(&i).unwrap() {
            LpOutcome::Infeasible(cert) => assert!(cert.verify(&i)),
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn redundant_rows_feasible() {
        // duplicated constraint
        let i = inst(&[&[1, 1], &[1, 1]], &[2, 2]);
        match solve_lp(&i).unwrap() {
            LpOutcome::Feasible(x) => assert!(i.check_solution(&x)),
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn minimize_simple() {
        // min x1 + x2 s.t. x1 + 2 x2 = 2 -> x = (0,1), value 1
        let i = inst(&[&[1, 2]], &[2]);
        match minimize_lp(&i, &[rat(1), rat(1)]).unwrap() {
            LpMinOutcome::Optimal { x, value, dual } => {
                assert_eq!(value, rat(1));
                assert_eq!(x, vec![rat(0), rat(1)]);
                assert_eq!(dual, vec![ratio(1, 2)]);
            }
            _ => panic!("expected optimal"),
        }
    }

    #[test]
    fn minimize_with_free_variable_split() {
        // min c over c - x1 = 1/2 i.e. c = x1 + 1/2, c split into c+ - c-:
        // columns: c+ (coeff 1), c- (coeff -1), x1 (coeff -1); rhs 1/2
        let mut i = RationalLpInstance::new(1, vec![ratio(1, 2)]).unwrap();
        i.add_column(vec![(0, rat(1))]).unwrap();
        i.add_column(vec![(0, rat(-1))]).unwrap();
        i.add_column(vec![(0, rat(-1))]).unwrap();
        match minimize_lp(&i, &[rat(1), rat(-1), rat(0)]).unwrap() {
            LpMinOutcome::Optimal { value, .. } => assert_eq!(value, ratio(1, 2)),
            _ => panic!("expected optimal"),
        }
    }

    #[test]
    fn minimize_unbounded() {
        // min -x1 s.t. x1 - x2 = 0: x1 = x2 -> -x1 unbounded below
        let i = inst(&[&[1, -1]], &[0]);
        match minimize_lp(&i, &[rat(-1), rat(0)]).unwrap() {
            LpMinOutcome::Unbounded => {}
            _ => panic!("expected unbounded"),
        }
    }

    #[test]
    fn minimize_with_redundant_row() {
        // min x1 s.t. x1 + x2 = 2 (twice)
        let i = inst(&[&[1, 1], &[1, 1]], &[2, 2]);
        match minimize_lp(&i, &[rat(1), rat(0)]).unwrap() {
            LpMinOutcome::Optimal { value, .. } => assert_eq!(value, rat(0)),
            _ => panic!("expected optimal"),
        }
    }

    #[test]
    fn minimize_infeasible() {
        let i = inst(&[&[1]], &[-1]);
        match minimize_lp(&i, &[rat(1)]).unwrap() {
            LpMinOutcome::Infeasible(cert) => assert!(cert.verify(&i)),
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn degenerate_instance_terminates() {
        let i = inst(
            &[&[1, 1, 1, 0, 0], &[1, 0, 0, 1, 0], &[0, 1, 0, 0, 1]],
            &[2, 1, 1],
        );
        match minimize_lp(&i, &[rat(-1), rat(-1), rat(0), rat(0), rat(0)]).unwrap() {
            LpMinOutcome::Optimal { value, .. } => assert_eq!(value, rat(-2)),
            _ => panic!("expected optimal"),
        }
    }

    #[test]
    fn fractional_data() {
        // (1/3) x1 + (1/7) x2 = 2/21 -> scaled solutions exist
        let mut i = RationalLpInstance::new(1, vec![ratio(2, 21)]).unwrap();
        i.add_column(vec![(0, ratio(1, 3))]).unwrap();
        i.add_column(vec![(0, ratio(1, 7))]).unwrap();
        match minimize_lp(&i, &[rat(1), rat(1)]).unwrap() {
            LpMinOutcome::Optimal { x, value, .. } => {
                assert!(i.check_solution(&x));
                // cheapest unit of coverage is via x1 (coefficient 1/3)
                assert_eq!(value, ratio(2, 7));
            }
            _ => panic!("expected optimal"),
        }
    }
}
