//! Closed-form error bounds `D(a)`, their inverses, and curve sweeps.
//!
//! Sufficient bounds give the largest prediction error under which an
//! algorithm still guarantees an `a`-EFX allocation. Lower bounds give the
//! error beyond which no online algorithm can.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::golden::{above_golden, above_sqrt3_minus_1};
use crate::rational::{format_rational, int, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundId {
    FollowerSufficient,
    FollowerNecessary,
    NonId2Lb,
    Id2Lb,
    IdNLbSmall,
    IdNLbLarge,
    IdNLbCombined,
    MainSufficient,
    ThreeGoodsSufficient,
    TwoValueSufficient,
    TwoValue2Lb,
    TwoValueNLb,
}

impl BoundId {
    pub const ALL: [BoundId; 12] = [
        Self::FollowerSufficient,
        Self::FollowerNecessary,
        Self::NonId2Lb,
        Self::Id2Lb,
        Self::IdNLbSmall,
        Self::IdNLbLarge,
        Self::IdNLbCombined,
        Self::MainSufficient,
        Self::ThreeGoodsSufficient,
        Self::TwoValueSufficient,
        Self::TwoValue2Lb,
        Self::TwoValueNLb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::FollowerSufficient => "follower-sufficient",
            Self::FollowerNecessary => "follower-necessary",
            Self::NonId2Lb => "non-id-2-lb",
            Self::Id2Lb => "id-2-lb",
            Self::IdNLbSmall => "id-n-lb-small",
            Self::IdNLbLarge => "id-n-lb-large",
            Self::IdNLbCombined => "id-n-lb-combined",
            Self::MainSufficient => "main-sufficient",
            Self::ThreeGoodsSufficient => "three-goods-sufficient",
            Self::TwoValueSufficient => "two-value-sufficient",
            Self::TwoValue2Lb => "two-value-2-lb",
            Self::TwoValueNLb => "two-value-n-lb",
        }
    }

    /// True for bounds below which some algorithm succeeds.
    pub fn is_sufficient(self) -> bool {
        matches!(
            self,
            Self::FollowerSufficient
                | Self::MainSufficient
                | Self::ThreeGoodsSufficient
                | Self::TwoValueSufficient
        )
    }

    fn domain(self) -> Domain {
        match self {
            Self::NonId2Lb => Domain::AboveHalf,
            Self::Id2Lb | Self::MainSufficient | Self::TwoValueSufficient => Domain::AboveGolden,
            Self::TwoValue2Lb => Domain::AboveSqrt3,
            Self::FollowerNecessary | Self::ThreeGoodsSufficient | Self::FollowerSufficient => {
                Domain::Closed
            }
            _ => Domain::PositiveClosed,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_lowercase();
        Self::ALL
            .into_iter()
            .find(|b| b.name().replace('-', "") == key)
            .ok_or_else(|| Error::UnknownBound(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Domain {
    /// `[0, 1]`
    Closed,
    /// `(0, 1]`
    PositiveClosed,
    /// `(1/2, 1]`
    AboveHalf,
    /// `(φ−1, 1]`
    AboveGolden,
    /// `(√3−1, 1]`
    AboveSqrt3,
}

impl Domain {
    fn check(self, a: &Rational) -> Result<()> {
        let fail = |what: &str| Err(Error::Domain(format!("a = {} violates {what}", format_rational(a))));
        if a > &Rational::one() {
            return fail("a <= 1");
        }
        match self {
            Domain::Closed if a.is_negative() => fail("a >= 0"),
            Domain::PositiveClosed if !a.is_positive() => fail("a > 0"),
            Domain::AboveHalf if a <= &rat(1, 2) => fail("a > 1/2"),
            Domain::AboveGolden if !above_golden(a) => fail("a^2 + a - 1 > 0"),
            Domain::AboveSqrt3 if !above_sqrt3_minus_1(a) => fail("a^2 + 2a - 2 > 0"),
            _ => Ok(()),
        }
    }
}

/// Agent count and the offline factor `ã` of the allocation being followed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundParams {
    pub n: usize,
    pub a_tilde: Rational,
}

impl Default for BoundParams {
    fn default() -> Self {
        Self { n: 2, a_tilde: Rational::one() }
    }
}

impl BoundParams {
    pub fn with_n(n: usize) -> Self {
        Self { n, ..Self::default() }
    }
}

fn min(a: Rational, b: Rational) -> Rational {
    if b < a {
        b
    } else {
        a
    }
}

/// `d_max(a)` for the two-agent identical allocator.
pub fn main_d_max(a: &Rational) -> Rational {
    let one = Rational::one();
    (int(4) + a - a * a) * (&one - a) / ((int(2) + a) * (int(5) - a) * (&one + a))
}

/// Exact error bound `D(a)`.
pub fn eval_bound(id: BoundId, a: &Rational, params: &BoundParams) -> Result<Rational> {
    id.domain().check(a)?;
    let n = params.n;
    if n < 2 {
        return Err(Error::Domain(format!("n = {n} violates n >= 2")));
    }
    let needs_many = matches!(
        id,
        BoundId::IdNLbSmall | BoundId::IdNLbLarge | BoundId::IdNLbCombined | BoundId::TwoValueNLb
    );
    if needs_many && n < 3 {
        return Err(Error::Domain(format!("n = {n} violates n >= 3")));
    }
    let one = Rational::one();
    let nn = int(n as i64);
    let spread = int(2 * n as i64 - 3);
    Ok(match id {
        BoundId::FollowerSufficient => {
            let at = &params.a_tilde;
            if at > &one || !at.is_positive() || a > at {
                return Err(Error::Domain(format!(
                    "a = {} violates a <= a_tilde = {} <= 1",
                    format_rational(a),
                    format_rational(at)
                )));
            }
            (at - a) / ((int(2) * &nn - int(2) + at) * (&one + a))
        }
        BoundId::FollowerNecessary => (&one - a) / ((int(2) * &nn - int(1)) * (&one + a)),
        BoundId::NonId2Lb => (&one - a) / min(int(6) * a, int(4)),
        BoundId::Id2Lb => (&one - a) / min(int(2) * a * (int(2) + a), int(4)),
        BoundId::IdNLbSmall => one / (int(2) * (&nn - int(1) + int(2) * a)),
        BoundId::IdNLbLarge => (&one - a * a) / (int(4) + spread * a),
        BoundId::IdNLbCombined => min(
            eval_bound(BoundId::IdNLbSmall, a, params)?,
            eval_bound(BoundId::IdNLbLarge, a, params)?,
        ),
        BoundId::MainSufficient => main_d_max(a),
        BoundId::ThreeGoodsSufficient => (&one - a) / (&one + a),
        BoundId::TwoValueSufficient => rat(2, 5) * (&one - a) / (&one + a),
        BoundId::TwoValue2Lb => (&one - a) / int(2),
        BoundId::TwoValueNLb => int(2) * (&one - a * a) / (int(4) + spread * a),
    })
}

/// `eval_bound` with the out-of-domain region reported as `1` (no accuracy needed).
pub fn eval_or_plateau(id: BoundId, a: &Rational, params: &BoundParams) -> Result<Rational> {
    match eval_bound(id, a, params) {
        Err(Error::Domain(_)) if a <= &Rational::one() && !a.is_negative() => Ok(Rational::one()),
        other => other,
    }
}

const INVERT_BITS: u32 = 64;
const MONOTONE_SAMPLES: i64 = 64;

/// Largest `a` in the bound's domain with `D(a) ≥ d`.
pub fn invert_bound(id: BoundId, d: &Rational, params: &BoundParams) -> Result<Rational> {
    if d.is_negative() {
        return Err(Error::Domain(format!("d = {} violates d >= 0", format_rational(d))));
    }
    if id == BoundId::FollowerSufficient {
        let at = &params.a_tilde;
        let c = int(2 * params.n as i64 - 2) + at;
        let a = (at - &c * d) / (Rational::one() + &c * d);
        eval_bound(id, &a, params)?;
        return Ok(a);
    }
    let (lo, hi) = domain_bracket(id);
    let top = Rational::one();
    let at_top = eval_bound(id, &top, params)?;
    if d <= &at_top {
        return Ok(top);
    }
    check_monotone(id, &lo, &hi, params)?;
    // lo may sit outside the domain; its probe is the one just inside it
    let probe_lo = &lo + Rational::new(BigInt::one(), BigInt::one() << INVERT_BITS);
    let at_lo = eval_bound(id, &probe_lo, params)?;
    if d > &at_lo {
        return Err(Error::Domain(format!(
            "d = {} exceeds the bound's supremum near a = {}",
            format_rational(d),
            format_rational(&lo)
        )));
    }
    let mut lo = probe_lo;
    let mut hi = top;
    let eps = Rational::new(BigInt::one(), BigInt::one() << INVERT_BITS);
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / int(2);
        let mid = round_dyadic(&mid, INVERT_BITS + 2);
        if eval_bound(id, &mid, params)? >= *d {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

fn round_dyadic(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = (x * Rational::from_integer(scale.clone())).floor();
    scaled / Rational::from_integer(scale)
}

/// A rational left endpoint at or below the domain infimum.
fn domain_bracket(id: BoundId) -> (Rational, Rational) {
    let lo = match id.domain() {
        Domain::Closed | Domain::PositiveClosed => Rational::zero(),
        Domain::AboveHalf => rat(1, 2),
        Domain::AboveGolden => crate::golden::golden_approx(INVERT_BITS),
        Domain::AboveSqrt3 => {
            let scale = BigInt::one() << INVERT_BITS;
            let three: BigInt = &scale * &scale * 3u32;
            let root3 = num_integer::Roots::sqrt(&three);
            Rational::new(root3 - &scale, scale)
        }
    };
    (lo, Rational::one())
}

fn check_monotone(id: BoundId, lo: &Rational, hi: &Rational, params: &BoundParams) -> Result<()> {
    let mut prev: Option<Rational> = None;
    for k in 1..=MONOTONE_SAMPLES {
        let a = lo + (hi - lo) * rat(k, MONOTONE_SAMPLES);
        let v = match eval_bound(id, &a, params) {
            Ok(v) => v,
            Err(Error::Domain(_)) => continue,
            Err(e) => return Err(e),
        };
        if prev.as_ref().is_some_and(|p| &v > p) {
            return Err(Error::NotMonotone(id.name().to_string()));
        }
        prev = Some(v);
    }
    Ok(())
}

/// Inclusive grid `start, start+step, ...` that always ends with `stop`.
pub fn grid(start: &Rational, stop: &Rational, step: &Rational) -> Result<Vec<Rational>> {
    if !step.is_positive() || start > stop {
        return Err(Error::Domain("grid needs step > 0 and start <= stop".into()));
    }
    let mut out = Vec::new();
    let mut x = start.clone();
    while &x < stop {
        out.push(x.clone());
        x += step;
    }
    out.push(stop.clone());
    Ok(out)
}

/// One row per grid point: `a` followed by `D(a)` per bound, plateau `1` outside domains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveTable {
    pub ids: Vec<BoundId>,
    pub rows: Vec<(Rational, Vec<Rational>)>,
}

impl CurveTable {
    /// CSV with header `a,<bound-id>...`; `places` selects decimal rendering, else exact `p/q`.
    pub fn to_csv(&self, places: Option<usize>) -> String {
        let render = |r: &Rational| match places {
            Some(p) => crate::rational::to_decimal(r, p),
            None => format_rational(r),
        };
        let mut out = String::from("a");
        for id in &self.ids {
            out.push(',');
            out.push_str(id.name());
        }
        out.push('\n');
        for (a, vals) in &self.rows {
            out.push_str(&render(a));
            for v in vals {
                out.push(',');
                out.push_str(&render(v));
            }
            out.push('\n');
        }
        out
    }
}

pub fn sweep_curves(ids: &[BoundId], a_grid: &[Rational], params: &BoundParams) -> Result<CurveTable> {
    let rows = a_grid
        .iter()
        .map(|a| {
            let vals = ids
                .iter()
                .map(|&id| eval_or_plateau(id, a, params))
                .collect::<Result<Vec<_>>>()?;
            Ok((a.clone(), vals))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveTable { ids: ids.to_vec(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let p = BoundParams::default();
        let a = rat(4, 5);
        assert_eq!(eval_bound(BoundId::FollowerSufficient, &a, &p).unwrap(), rat(1, 27));
        assert_eq!(eval_bound(BoundId::Id2Lb, &a, &p).unwrap(), rat(1, 20));
        assert_eq!(eval_bound(BoundId::MainSufficient, &a, &p).unwrap(), rat(52, 1323));
    }

    #[test]
    fn follower_inverse_is_closed_form() {
        let p = BoundParams::default();
        let a = rat(7, 10);
        let d = eval_bound(BoundId::FollowerSufficient, &a, &p).unwrap();
        assert_eq!(invert_bound(BoundId::FollowerSufficient, &d, &p).unwrap(), a);
    }

    #[test]
    fn plateau_below_golden() {
        let p = BoundParams::default();
        assert_eq!(eval_or_plateau(BoundId::Id2Lb, &rat(3, 5), &p).unwrap(), Rational::one());
        assert!(eval_bound(BoundId::Id2Lb, &rat(3, 5), &p).is_err());
    }

    #[test]
    fn names_parse() {
        for b in BoundId::ALL {
            assert_eq!(b.name().parse::<BoundId>().unwrap(), b);
        }
        assert_eq!("IdN_LB_small".parse::<BoundId>().unwrap(), BoundId::IdNLbSmall);
        assert_eq!("Id2LB".parse::<BoundId>().unwrap(), BoundId::Id2Lb);
    }
}
