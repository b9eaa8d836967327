//! Named function families used by the test suites and the CLI.

use num::traits::Zero;

use crate::cube;
use crate::func::PointFunction;
use crate::rat::{rat, Rational};

/// (|x| - a)(|x| - b) on n variables. Panics if the product is negative
/// somewhere on {0,...,n} (then it is not a valid instance).
pub fn weight_quadratic(n: usize, a: i64, b: i64) -> PointFunction {
    let values = (0..(1usize << n))
        .map(|x| {
            let k = cube::weight(x) as i64;
            rat((k - a) * (k - b))
        })
        .collect();
    PointFunction::new(n, values).expect("quadratic must be nonnegative on weights")
}

/// (|x| - 1)^2: quantum cost 1, randomized cost n.
pub fn one_hot_quadratic(n: usize) -> PointFunction {
    weight_quadratic(n, 1, 1)
}

/// (|x| - 1)(|x| - 2): the sqrt(n) quantum lower-bound instance.
pub fn step_quadratic(n: usize) -> PointFunction {
    weight_quadratic(n, 1, 2)
}

/// Max-cut objective sum over both orientations of each undirected edge:
/// f(x) = sum_{each edge {i,j}} [x_i(1-x_j) + x_j(1-x_i)], vertices 1-based.
pub fn max_cut(n: usize, edges: &[(usize, usize)]) -> PointFunction {
    let values = (0..(1usize << n))
        .map(|x| {
            let mut cut = 0i64;
            for &(i, j) in edges {
                let xi = (x >> (i - 1)) & 1;
                let xj = (x >> (j - 1)) & 1;
                if xi != xj {
                    cut += 1;
                }
            }
            rat(cut)
        })
        .collect();
    PointFunction::new(n, values).expect("cut counts are nonnegative")
}

/// Triangle max-cut instance on 3 vertices; optimum 2.
pub fn triangle_max_cut() -> PointFunction {
    max_cut(3, &[(1, 2), (2, 3), (1, 3)])
}

/// 4-cycle max-cut instance; optimum 4.
pub fn four_cycle_max_cut() -> PointFunction {
    max_cut(4, &[(1, 2), (2, 3), (3, 4), (1, 4)])
}

/// Uniformly random nonnegative function with values k/denominator,
/// k in 0..=max_numer, from the given generator.
pub fn random_nonnegative<R: rand::Rng>(
    n: usize,
    max_numer: u64,
    denominator: u64,
    rng: &mut R,
) -> PointFunction {
    let values = (0..(1usize << n))
        .map(|_| {
            let k = rng.gen_range(0..=max_numer);
            Rational::new(k.into(), denominator.into())
        })
        .collect();
    PointFunction::new(n, values).expect("values are nonnegative")
}

/// Random Boolean function.
pub fn random_boolean<R: rand::Rng>(n: usize, rng: &mut R) -> PointFunction {
    let values = (0..(1usize << n))
        .map(|_| if rng.gen::<bool>() { rat(1) } else { Rational::zero() })
        .collect();
    PointFunction::new(n, values).expect("boolean values")
}

/// Boolean function from the bits of `index` (truth table as an integer).
pub fn boolean_from_index(n: usize, index: u64) -> PointFunction {
    let values = (0..(1usize << n))
        .map(|x| {
            if (index >> x) & 1 == 1 {
                rat(1)
            } else {
                Rational::zero()
            }
        })
        .collect();
    PointFunction::new(n, values).expect("boolean values")
}
