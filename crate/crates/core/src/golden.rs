//! Exact comparisons against the irrational thresholds φ−1, √3−1 and 2φ−3.
//!
//! All tests reduce to the sign of a polynomial with rational coefficients,
//! so they never round.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rational::{int, Rational};

fn sign(r: &Rational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Order of `x` relative to φ−1 = (√5−1)/2, via sign((2x+1)²−5). Requires `x ≥ 0`.
pub fn cmp_golden(x: &Rational) -> Ordering {
    let s = x * int(2) + int(1);
    sign(&(&s * &s - int(5)))
}

/// Order of `x` relative to √3−1, via sign((x+1)²−3). Requires `x ≥ 0`.
pub fn cmp_sqrt3_minus_1(x: &Rational) -> Ordering {
    let s = x + int(1);
    sign(&(&s * &s - int(3)))
}

/// Order of `x` relative to 2φ−3 = √5−2, via sign((x+2)²−5). Requires `x ≥ −2`.
pub fn cmp_two_phi_minus_3(x: &Rational) -> Ordering {
    let s = x + int(2);
    sign(&(&s * &s - int(5)))
}

/// `a > φ−1` ⟺ `a² + a − 1 > 0` (for `a ≥ 0`).
pub fn above_golden(a: &Rational) -> bool {
    cmp_golden(a) == Ordering::Greater
}

/// `a > √3−1` ⟺ `a² + 2a − 2 > 0` (for `a ≥ 0`).
pub fn above_sqrt3_minus_1(a: &Rational) -> bool {
    cmp_sqrt3_minus_1(a) == Ordering::Greater
}

/// Rational lower approximation of φ−1 with denominator `2^bits`.
pub fn golden_approx(bits: u32) -> Rational {
    let scale = BigInt::from(1) << bits;
    let five: BigInt = &scale * &scale * 5u32;
    let root5 = num_integer::Roots::sqrt(&five);
    Rational::new(root5 - &scale, scale * 2)
}

/// ⌊(√5−2)/ε⌋ for a positive rational ε = p/q, computed as ⌊(√(5q²) − 2q)/p⌋.
pub fn floor_two_phi_minus_3_over(eps: &Rational) -> BigInt {
    let p = eps.numer();
    let q = eps.denom();
    // the inner floor does not change the outer one: the right side kp+2q is an integer
    let five_q2: BigInt = q * q * 5u32;
    let r = num_integer::Roots::sqrt(&five_q2);
    (r - q * 2) / p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn golden_examples() {
        assert_eq!(cmp_golden(&rat(3, 5)), Ordering::Less);
        assert_eq!(cmp_golden(&rat(2, 3)), Ordering::Greater);
        assert_eq!(cmp_golden(&int(1)), Ordering::Greater);
        assert_eq!(cmp_golden(&int(0)), Ordering::Less);
    }

    #[test]
    fn sqrt3_examples() {
        assert_eq!(cmp_sqrt3_minus_1(&rat(7, 10)), Ordering::Less);
        assert_eq!(cmp_sqrt3_minus_1(&rat(3, 4)), Ordering::Greater);
    }

    #[test]
    fn approximation_brackets_phi() {
        let lo = golden_approx(64);
        let hi = &lo + Rational::new(1.into(), BigInt::from(1) << 64u32);
        assert_eq!(cmp_golden(&lo), Ordering::Less);
        assert_eq!(cmp_golden(&hi), Ordering::Greater);
    }

    #[test]
    fn floor_matches_bracket() {
        for (p, q) in [(1, 200), (3, 7), (1, 1000), (1, 17)] {
            let eps = rat(p, q);
            let k = Rational::from_integer(floor_two_phi_minus_3_over(&eps));
            assert_ne!(cmp_two_phi_minus_3(&(&k * &eps)), Ordering::Greater);
            let next = (k + int(1)) * &eps;
            assert_eq!(cmp_two_phi_minus_3(&next), Ordering::Greater);
        }
    }
}
