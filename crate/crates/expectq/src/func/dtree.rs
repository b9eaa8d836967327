use std::collections::HashMap;

use thiserror::Error;

use crate::func::PointFunction;

/// Exhaustive minimax over restrictions is 3^n-ish; anything past this needs
/// deliberate opt-in.
pub const DEFAULT_DEPTH_CAP: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DtreeError {
    #[error("decision tree depth requires a Boolean-valued function")]
    NotBoolean,
    #[error("n = {n} exceeds the configured cap {cap}")]
    ArityAboveCap { n: usize, cap: usize },
}

/// Exact deterministic decision-tree depth of a Boolean function, by minimax
/// recursion over restrictions with memoization. Default arity cap applies.
pub fn decision_tree_depth(f: &PointFunction) -> Result<usize, DtreeError> {
    decision_tree_depth_capped(f, DEFAULT_DEPTH_CAP)
}

pub fn decision_tree_depth_capped(f: &PointFunction, cap: usize) -> Result<usize, DtreeError> {
    if !f.is_boolean() {
        return Err(DtreeError::NotBoolean);
    }
    if f.n() > cap {
        return Err(DtreeError::ArityAboveCap { n: f.n(), cap });
    }
    let mut memo: HashMap<(usize, usize), usize> = HashMap::new();
    Ok(depth(f, 0, 0, &mut memo))
}

/// Minimal depth on the subcube where the variables of `fixed` are pinned to
/// the corresponding bits of `vals`.
fn depth(
    f: &PointFunction,
    fixed: usize,
    vals: usize,
    memo: &mut HashMap<(usize, usize), usize>,
) -> usize {
    if let Some(&d) = memo.get(&(fixed, vals)) {
        return d;
    }
    let n = f.n();
    let full = (1usize << n) - 1;
    let free = full & !fixed;

    let mut constant = true;
    let mut first = None;
    for sub in crate::cube::submasks(free) {
        let x = vals | sub;
        match first {
            None => first = Some(f.value(x)),
            Some(v) => {
                if v != f.value(x) {
                    constant = false;
                    break;
                }
            }
        }
    }
    let d = if constant {
        0
    } else {
        let mut best = usize::MAX;
        for i in 0..n {
            let bit = 1 << i;
            if fixed & bit != 0 {
                continue;
            }
            let lo = depth(f, fixed | bit, vals, memo);
            let hi = depth(f, fixed | bit, vals | bit, memo);
            best = best.min(1 + lo.max(hi));
        }
        best
    };
    memo.insert((fixed, vals), d);
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn pf(n: usize, vals: &[i64]) -> PointFunction {
        PointFunction::new(n, vals.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    #[test]
    fn constant_has_depth_zero() {
        assert_eq!(decision_tree_depth(&pf(2, &[1, 1, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn dictator_has_depth_one() {
        assert_eq!(decision_tree_depth(&pf(2, &[0, 1, 0, 1])).unwrap(), 1);
    }

    #[test]
    fn and3_is_evasive() {
        assert_eq!(
            decision_tree_depth(&pf(3, &[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(),
            3
        );
    }

    #[test]
    fn rejects_non_boolean_and_oversized() {
        let g = pf(1, &[0, 2]);
        assert_eq!(decision_tree_depth(&g), Err(DtreeError::NotBoolean));
        let f = pf(3, &[0; 8]);
        assert!(matches!(
            decision_tree_depth_capped(&f, 2),
            Err(DtreeError::ArityAboveCap { .. })
        ));
    }
}
