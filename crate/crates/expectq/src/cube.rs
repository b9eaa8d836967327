//! Bit-mask encoding of the Boolean cube.
//!
//! A point x in {0,1}^n is the integer whose bit i is x_{i+1}; points run
//! 0..2^n. A subset S of [n] uses the same encoding. This ordering is fixed
//! across all modules and file formats.

/// Hamming weight.
pub fn weight(mask: usize) -> usize {
    mask.count_ones() as usize
}

/// 1-based variable indices of a subset mask, ascending.
pub fn elements(mask: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(weight(mask));
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        out.push(i + 1);
        m &= m - 1;
    }
    out
}

/// Mask from 1-based variable indices.
pub fn mask_of(vars: &[usize]) -> usize {
    vars.iter().fold(0, |m, &v| m | (1 << (v - 1)))
}

/// All submasks of `mask`, including 0 and `mask` itself.
pub fn submasks(mask: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(1 << weight(mask));
    let mut s = mask;
    loop {
        out.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & mask;
    }
    out.reverse();
    out
}

/// All subsets of [n] with |S| <= d, ordered by (|S|, lexicographic on the
/// sorted element lists). This is the fixed basis/term order used by the LP
/// and SDP columns.
pub fn subsets_up_to(n: usize, d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for k in 0..=d.min(n) {
        let mut of_size: Vec<usize> = (0usize..(1 << n)).filter(|m| weight(*m) == k).collect();
        of_size.sort_by(|a, b| elements(*a).cmp(&elements(*b)));
        out.extend(of_size);
    }
    out
}

/// All masks of weight k among n bits, ascending as integers.
pub fn masks_of_weight(n: usize, k: usize) -> Vec<usize> {
    (0usize..(1 << n)).filter(|m| weight(*m) == k).collect()
}
