//! Total variation distance between value vectors of possibly different horizons.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, sum, Rational};
use crate::valuation::ValuationVector;

/// ½ Σ |p(t) − v(t)|, with the shorter vector padded by zero-valued goods.
pub fn tv_distance(p: &ValuationVector, v: &ValuationVector) -> Result<Rational> {
    for x in [p, v] {
        if !x.is_normalized() {
            return Err(Error::NotNormalized {
                sum: format_rational(&sum(x.values())),
            });
        }
    }
    Ok(tv_raw(p.values(), v.values()))
}

/// The padded half-ℓ₁ distance on raw slices, with no normalization check.
pub fn tv_raw(p: &[Rational], v: &[Rational]) -> Rational {
    let zero = Rational::zero();
    let len = p.len().max(v.len());
    let total = (0..len).fold(Rational::zero(), |acc, t| {
        let a = p.get(t).unwrap_or(&zero);
        let b = v.get(t).unwrap_or(&zero);
        acc + (a - b).abs()
    });
    total / Rational::from_integer(2.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn vv(x: &[(i64, i64)]) -> ValuationVector {
        ValuationVector::new(x.iter().map(|&(a, b)| rat(a, b)).collect()).unwrap()
    }

    #[test]
    fn padded_example() {
        let p = vv(&[(1, 3), (1, 3), (1, 3)]);
        let v = vv(&[(1, 3), (1, 3), (1, 6), (1, 6)]);
        assert_eq!(tv_distance(&p, &v).unwrap(), rat(1, 6));
        assert_eq!(tv_distance(&p, &p).unwrap(), rat(0, 1));
    }

    #[test]
    fn rejects_unnormalized() {
        let p = ValuationVector::unnormalized(vec![rat(1, 3)]).unwrap();
        let v = vv(&[(1, 1)]);
        assert!(tv_distance(&p, &v).is_err());
    }
}
