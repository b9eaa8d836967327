use num::traits::Zero;

use crate::cube;
use crate::func::PointFunction;
use crate::rat::{ratio, Rational};

/// Multilinear polynomial over [n] in the monomial basis: coefficient on the
/// subset mask S multiplies prod_{i in S} x_i. Dense: index = subset mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearPoly {
    n: usize,
    coeffs: Vec<Rational>,
}

/// Fourier coefficients of a multilinear polynomial: coefficient on s
/// multiplies the character (-1)^{x.s}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierTable {
    n: usize,
    coeffs: Vec<Rational>,
}

impl MultilinearPoly {
    pub fn zero(n: usize) -> Self {
        MultilinearPoly {
            n,
            coeffs: vec![Rational::zero(); 1 << n],
        }
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), 1 << n);
        MultilinearPoly { n, coeffs }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.coeffs[0] = c;
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, subset: usize) -> &Rational {
        &self.coeffs[subset]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, subset: usize, c: Rational) {
        self.coeffs[subset] = c;
    }

    /// max |S| with nonzero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, _)| cube::weight(s))
            .max()
            .unwrap_or(0)
    }

    /// Evaluation at one cube point: sum of coefficients on submasks of x.
    pub fn evaluate(&self, x: usize) -> Rational {
        let mut acc = Rational::zero();
        for s in cube::submasks(x) {
            if !self.coeffs[s].is_zero() {
                acc += &self.coeffs[s];
            }
        }
        acc
    }

    /// Values on all 2^n points via the subset-sum (zeta) butterfly.
    pub fn evaluate_all(&self) -> Vec<Rational> {
        let mut v = self.coeffs.clone();
        for i in 0..self.n {
            let bit = 1 << i;
            for x in 0..v.len() {
                if x & bit != 0 {
                    let lo = v[x ^ bit].clone();
                    v[x] += lo;
                }
            }
        }
        v
    }

    /// The PointFunction with these values; panics if any value is negative.
    pub fn to_point_function(&self) -> PointFunction {
        PointFunction::new(self.n, self.evaluate_all()).expect("nonnegative values")
    }

    pub fn add(&self, other: &MultilinearPoly) -> MultilinearPoly {
        assert_eq!(self.n, other.n);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        MultilinearPoly { n: self.n, coeffs }
    }

    pub fn scale(&self, c: &Rational) -> MultilinearPoly {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        MultilinearPoly {
            n: self.n,
            coeffs,
        }
    }
}

/// The unique multilinear polynomial agreeing with f on all cube points
/// (Moebius inversion of the truth table).
pub fn interpolate_multilinear(f: &PointFunction) -> MultilinearPoly {
    let mut c: Vec<Rational> = f.values().to_vec();
    for i in 0..f.n() {
        let bit = 1 << i;
        for x in 0..c.len() {
            if x & bit != 0 {
                let lo = c[x ^ bit].clone();
                c[x] -= lo;
            }
        }
    }
    MultilinearPoly {
        n: f.n(),
        coeffs: c,
    }
}

/// Fourier coefficients of p: phat(s) = (-1)^{|s|} sum_{S >= s} c_S / 2^{|S|}.
pub fn to_fourier(p: &MultilinearPoly) -> FourierTable {
    let n = p.n;
    let mut v: Vec<Rational> = p
        .coeffs
        .iter()
        .enumerate()
        .map(|(s, c)| c * ratio(1, 1 << cube::weight(s)))
        .collect();
    // superset-sum butterfly
    for i in 0..n {
        let bit = 1 << i;
        for x in 0..v.len() {
            if x & bit == 0 {
                let hi = v[x | bit].clone();
                v[x] += hi;
            }
        }
    }
    for (s, c) in v.iter_mut().enumerate() {
        if cube::weight(s) % 2 == 1 {
            *c = -c.clone();
        }
    }
    FourierTable { n, coeffs: v }
}

/// Inverse of [`to_fourier`]: c_S = (-2)^{|S|} sum_{s >= S} phat(s).
pub fn from_fourier(t: &FourierTable) -> MultilinearPoly {
    let n = t.n;
    let mut v = t.coeffs.clone();
    for i in 0..n {
        let bit = 1 << i;
        for x in 0..v.len() {
            if x & bit == 0 {
                let hi = v[x | bit].clone();
                v[x] += hi;
            }
        }
    }
    for (s, c) in v.iter_mut().enumerate() {
        let k = cube::weight(s);
        let mut scale = ratio(1 << k, 1);
        if k % 2 == 1 {
            scale = -scale;
        }
        *c = &*c * scale;
    }
    MultilinearPoly { n, coeffs: v }
}

impl FourierTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, s: usize) -> &Rational {
        &self.coeffs[s]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Largest |s| with nonzero coefficient.
    pub fn support_degree(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, _)| cube::weight(s))
            .max()
            .unwrap_or(0)
    }

    pub fn evaluate(&self, x: usize) -> Rational {
        let mut acc = Rational::zero();
        for (s, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if cube::weight(x & s) % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn pf(n: usize, vals: &[i64]) -> PointFunction {
        PointFunction::new(n, vals.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    #[test]
    fn interpolates_and2() {
        // AND on n=2: coefficient 1 on {1,2}, else 0
        let p = interpolate_multilinear(&pf(2, &[0, 0, 0, 1]));
        assert_eq!(p.coeff(0b11), &rat(1));
        assert_eq!(p.coeff(0b00), &rat(0));
        assert_eq!(p.coeff(0b01), &rat(0));
        assert_eq!(p.coeff(0b10), &rat(0));
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn interpolates_constant() {
        let p = interpolate_multilinear(&pf(3, &[5; 8]));
        assert_eq!(p.coeff(0), &rat(5));
        assert!(p.coeffs()[1..].iter().all(|c| c.is_zero()));
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn interpolates_weight_shift_square() {
        // f = (|x|-1)^2 on n=2: 1 - x1 - x2 + 2 x1 x2
        let p = interpolate_multilinear(&pf(2, &[1, 0, 0, 1]));
        assert_eq!(p.coeff(0b00), &rat(1));
        assert_eq!(p.coeff(0b01), &rat(-1));
        assert_eq!(p.coeff(0b10), &rat(-1));
        assert_eq!(p.coeff(0b11), &rat(2));
    }

    #[test]
    fn evaluate_matches_source_function() {
        let f = pf(3, &[3, 0, 1, 4, 1, 5, 9, 2]);
        let p = interpolate_multilinear(&f);
        for x in 0..8 {
            assert_eq!(&p.evaluate(x), f.value(x));
        }
        assert_eq!(p.evaluate_all(), f.values().to_vec());
    }

    #[test]
    fn fourier_of_single_variable() {
        // p = x1 -> phat(empty)=1/2, phat({1})=-1/2
        let mut p = MultilinearPoly::zero(2);
        p.set_coeff(0b01, rat(1));
        let t = to_fourier(&p);
        assert_eq!(t.coeff(0b00), &ratio(1, 2));
        assert_eq!(t.coeff(0b01), &ratio(-1, 2));
        assert_eq!(t.coeff(0b10), &rat(0));
        assert_eq!(t.coeff(0b11), &rat(0));
    }

    #[test]
    fn fourier_of_affine_sum() {
        // p = x1 + x2 - 1 on n=2 -> phat(empty)=0, phat({1})=phat({2})=-1/2
        let mut p = MultilinearPoly::zero(2);
        p.set_coeff(0b00, rat(-1));
        p.set_coeff(0b01, rat(1));
        p.set_coeff(0b10, rat(1));
        let t = to_fourier(&p);
        assert_eq!(t.coeff(0b00), &rat(0));
        assert_eq!(t.coeff(0b01), &ratio(-1, 2));
        assert_eq!(t.coeff(0b10), &ratio(-1, 2));
        assert_eq!(t.coeff(0b11), &rat(0));
    }

    #[test]
    fn fourier_round_trip_and_evaluation_agree() {
        let f = pf(3, &[2, 7, 1, 8, 2, 8, 1, 8]);
        let p = interpolate_multilinear(&f);
        let t = to_fourier(&p);
        assert_eq!(from_fourier(&t), p);
        for x in 0..8 {
            assert_eq!(t.evaluate(x), p.evaluate(x));
        }
    }
}
