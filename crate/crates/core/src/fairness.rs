//! xset/oset and the EFX/EF1 factors of an allocation.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{serde_str, sum, Rational};
use crate::valuation::{Allocation, ValuationProfile};

/// `bundle` without its lowest-valued good (lowest id on ties).
pub fn xset(bundle: &[usize], f: &[Rational]) -> Vec<usize> {
    drop_extreme(bundle, f, |cand, best| cand < best)
}

/// `bundle` without its highest-valued good (lowest id on ties).
pub fn oset(bundle: &[usize], f: &[Rational]) -> Vec<usize> {
    drop_extreme(bundle, f, |cand, best| cand > best)
}

fn drop_extreme(
    bundle: &[usize],
    f: &[Rational],
    better: impl Fn(&Rational, &Rational) -> bool,
) -> Vec<usize> {
    let Some(victim) = pick(bundle, f, better) else {
        return Vec::new();
    };
    bundle.iter().copied().filter(|&g| g != victim).collect()
}

fn pick(
    bundle: &[usize],
    f: &[Rational],
    better: impl Fn(&Rational, &Rational) -> bool,
) -> Option<usize> {
    let mut best: Option<usize> = None;
    for &g in bundle {
        best = match best {
            None => Some(g),
            Some(b) if better(&f[g], &f[b]) || (f[g] == f[b] && g < b) => Some(g),
            keep => keep,
        };
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FairnessReport {
    #[serde(with = "serde_str")]
    pub efx_factor: Rational,
    #[serde(with = "serde_str")]
    pub ef1_factor: Rational,
    #[serde(with = "serde_str::matrix")]
    pub per_pair_efx: Vec<Vec<Rational>>,
    pub binding_pair: Option<(usize, usize)>,
}

#[derive(Clone, Copy)]
enum Relax {
    AnyGood,
    OneGood,
}

/// Per-pair ratios and their minimum, both clamped to 1.
fn pairwise<R: AsRef<[Rational]>>(
    bundles: &[Vec<usize>],
    rows: &[R],
    relax: Relax,
) -> (Rational, Vec<Vec<Rational>>, Option<(usize, usize)>) {
    let n = bundles.len();
    let one = Rational::one();
    let mut matrix = vec![vec![one.clone(); n]; n];
    let mut factor = one.clone();
    let mut binding = None;
    for i in 0..n {
        let f = rows[i].as_ref();
        let own = sum(bundles[i].iter().map(|&g| &f[g]));
        for j in 0..n {
            if i == j || bundles[j].len() < 2 {
                continue;
            }
            let total = sum(bundles[j].iter().map(|&g| &f[g]));
            let removed = match relax {
                Relax::AnyGood => pick(&bundles[j], f, |c, b| c < b),
                Relax::OneGood => pick(&bundles[j], f, |c, b| c > b),
            }
            .expect("bundle has at least two goods");
            let other = total - &f[removed];
            if other.is_zero() {
                continue;
            }
            let ratio = &own / &other;
            if ratio < one {
                if ratio < factor {
                    factor = ratio.clone();
                    binding = Some((i, j));
                }
                matrix[i][j] = ratio;
            }
        }
    }
    (factor, matrix, binding)
}

/// Largest `a` such that the allocation is `a`-EFX under the given per-agent rows.
pub fn efx_factor_rows<R: AsRef<[Rational]>>(bundles: &[Vec<usize>], rows: &[R]) -> Rational {
    pairwise(bundles, rows, Relax::AnyGood).0
}

/// Largest `a` such that the allocation is `a`-EF1 under the given per-agent rows.
pub fn ef1_factor_rows<R: AsRef<[Rational]>>(bundles: &[Vec<usize>], rows: &[R]) -> Rational {
    pairwise(bundles, rows, Relax::OneGood).0
}

/// Full report on raw rows; bundles may reference a prefix of the goods.
pub fn report_rows<R: AsRef<[Rational]>>(bundles: &[Vec<usize>], rows: &[R]) -> FairnessReport {
    let (efx_factor, per_pair_efx, binding_pair) = pairwise(bundles, rows, Relax::AnyGood);
    let ef1_factor = pairwise(bundles, rows, Relax::OneGood).0;
    FairnessReport { efx_factor, ef1_factor, per_pair_efx, binding_pair }
}

fn check_shape(alloc: &Allocation, profile: &ValuationProfile) -> Result<()> {
    if alloc.n() != profile.n() {
        return Err(Error::InvalidAllocation(format!(
            "{} bundles for {} agents",
            alloc.n(),
            profile.n()
        )));
    }
    if alloc.horizon() != profile.horizon() {
        return Err(Error::InvalidAllocation(format!(
            "allocation covers {} goods, profile has {}",
            alloc.horizon(),
            profile.horizon()
        )));
    }
    Ok(())
}

pub fn fairness_report(alloc: &Allocation, profile: &ValuationProfile) -> Result<FairnessReport> {
    check_shape(alloc, profile)?;
    Ok(report_rows(alloc.bundles(), profile.vectors()))
}

pub fn efx_factor(alloc: &Allocation, profile: &ValuationProfile) -> Result<Rational> {
    check_shape(alloc, profile)?;
    Ok(efx_factor_rows(alloc.bundles(), profile.vectors()))
}

pub fn ef1_factor(alloc: &Allocation, profile: &ValuationProfile) -> Result<Rational> {
    check_shape(alloc, profile)?;
    Ok(ef1_factor_rows(alloc.bundles(), profile.vectors()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn f(x: &[(i64, i64)]) -> Vec<Rational> {
        x.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    #[test]
    fn xset_oset_examples() {
        let v = f(&[(1, 2), (3, 10), (1, 5)]);
        assert!(xset(&[], &v).is_empty());
        assert_eq!(xset(&[0, 1, 2], &v), vec![0, 1]);
        assert_eq!(oset(&[0, 1, 2], &v), vec![1, 2]);
        assert_eq!(xset(&[0, 1], &f(&[(1, 4), (1, 4), (1, 2)])), vec![1]);
        assert_eq!(oset(&[1, 2], &f(&[(0, 1), (2, 5), (2, 5)])), vec![2]);
    }

    #[test]
    fn factor_examples() {
        let v = f(&[(1, 2), (3, 10), (1, 5)]);
        let p = ValuationProfile::from_rows(vec![v.clone(), v], true).unwrap();
        let a = Allocation::from_bundles(vec![vec![2], vec![0, 1]], 3).unwrap();
        let r = fairness_report(&a, &p).unwrap();
        assert_eq!(r.efx_factor, rat(2, 5));
        assert_eq!(r.ef1_factor, rat(2, 3));
        assert_eq!(r.binding_pair, Some((0, 1)));
        assert_eq!(r.per_pair_efx[0][1], rat(2, 5));
        assert_eq!(r.per_pair_efx[1][0], rat(1, 1));
    }

    #[test]
    fn singletons_are_vacuous() {
        let v = f(&[(1, 1)]);
        let p = ValuationProfile::from_rows(vec![v.clone(), v], true).unwrap();
        let a = Allocation::from_bundles(vec![vec![0], vec![]], 1).unwrap();
        let r = fairness_report(&a, &p).unwrap();
        assert_eq!(r.efx_factor, rat(1, 1));
        assert_eq!(r.binding_pair, None);
    }
}
