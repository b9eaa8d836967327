use serde::{Deserialize, Serialize};

use crate::cube;

/// One literal product: for i in the support, the factor is x_i when the
/// negation bit is clear and (1 - x_i) when set. The term evaluates to 1
/// exactly on the subcube fixing those coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteralTerm {
    pub support: usize,
    pub negated: usize,
}

impl LiteralTerm {
    pub fn new(support: usize, negated: usize) -> Self {
        debug_assert_eq!(negated & !support, 0, "negation outside support");
        LiteralTerm { support, negated }
    }

    pub fn degree(&self) -> usize {
        cube::weight(self.support)
    }

    /// 1 when x agrees with the pattern on the support, else 0.
    pub fn satisfied(&self, x: usize) -> bool {
        (x & self.support) == (self.support & !self.negated)
    }

    /// All cube points of the satisfying subcube.
    pub fn satisfying_points(&self, n: usize) -> Vec<usize> {
        let full = (1usize << n) - 1;
        let fixed = self.support & !self.negated;
        cube::submasks(full & !self.support)
            .into_iter()
            .map(|free| fixed | free)
            .collect()
    }

    /// 1-based support variables, ascending.
    pub fn support_vars(&self) -> Vec<usize> {
        cube::elements(self.support)
    }

    /// Negation bits aligned with `support_vars`.
    pub fn negation_bits(&self) -> Vec<u8> {
        cube::elements(self.support)
            .iter()
            .map(|v| ((self.negated >> (v - 1)) & 1) as u8)
            .collect()
    }
}

/// Number of literal terms with support size at most d.
pub fn term_count(n: usize, d: usize) -> usize {
    cube::subsets_up_to(n, d)
        .iter()
        .map(|s| 1usize << cube::weight(*s))
        .sum()
}

/// All terms with |support| <= d in the fixed order: supports by
/// (size, lex), and for each support the negation patterns in binary
/// counting order over the sorted support variables. LP columns, certificate
/// records, and sampler tables all use this order.
pub fn literal_terms(n: usize, d: usize) -> Vec<LiteralTerm> {
    let mut out = Vec::with_capacity(term_count(n, d));
    for support in cube::subsets_up_to(n, d) {
        let vars = cube::elements(support);
        let k = vars.len();
        for pattern in 0..(1usize << k) {
            let mut negated = 0usize;
            for (j, v) in vars.iter().enumerate() {
                if (pattern >> j) & 1 == 1 {
                    negated |= 1 << (v - 1);
                }
            }
            out.push(LiteralTerm::new(support, negated));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_satisfaction() {
        // x1 (1 - x3): support {1,3}, negated {3}
        let t = LiteralTerm::new(0b101, 0b100);
        assert!(t.satisfied(0b001));
        assert!(t.satisfied(0b011));
        assert!(!t.satisfied(0b101));
        assert!(!t.satisfied(0b000));
        assert_eq!(t.satisfying_points(3), vec![0b001, 0b011]);
        assert_eq!(t.support_vars(), vec![1, 3]);
        assert_eq!(t.negation_bits(), vec![0, 1]);
    }

    #[test]
    fn counts_and_order() {
        assert_eq!(term_count(2, 1), 1 + 2 * 2);
        assert_eq!(term_count(2, 2), 1 + 4 + 4);
        let terms = literal_terms(2, 1);
        assert_eq!(terms.len(), 5);
        // empty product first, then x1, 1-x1, x2, 1-x2
        assert_eq!(terms[0], LiteralTerm::new(0, 0));
        assert_eq!(terms[1], LiteralTerm::new(0b01, 0));
        assert_eq!(terms[2], LiteralTerm::new(0b01, 0b01));
        assert_eq!(terms[3], LiteralTerm::new(0b10, 0));
        assert_eq!(terms[4], LiteralTerm::new(0b10, 0b10));
    }

    #[test]
    fn full_degree_terms_are_point_indicators() {
        for t in literal_terms(2, 2).iter().filter(|t| t.degree() == 2) {
            assert_eq!(t.satisfying_points(2).len(), 1);
        }
    }
}
