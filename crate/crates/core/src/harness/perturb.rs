//! Truths at an exact TV distance from the predictions.
//!
//! Mass is only ever taken from coordinates that have not gained and only
//! deposited on coordinates that have not lost, so every unit moved counts
//! fully toward the distance.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, rat, sum, Rational};
use crate::valuation::ValuationProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PerturbMode {
    /// Move mass between existing goods.
    Shift,
    /// Deposit the moved mass on new goods past the predicted horizon.
    Append,
    /// Drop trailing goods and redistribute.
    Truncate,
    /// Swap the values of two goods, then shift the remainder.
    Reorder,
}

impl PerturbMode {
    pub const ALL: [PerturbMode; 4] = [Self::Shift, Self::Append, Self::Truncate, Self::Reorder];

    pub fn name(self) -> &'static str {
        match self {
            Self::Shift => "shift",
            Self::Append => "append",
            Self::Truncate => "truncate",
            Self::Reorder => "reorder",
        }
    }
}

impl fmt::Display for PerturbMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PerturbMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InfeasiblePerturbation(format!("unknown mode {s:?}")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Untouched,
    Lost,
    Gained,
}

fn infeasible(msg: String) -> Error {
    Error::InfeasiblePerturbation(msg)
}

/// Random positive weights over `k` slots, summing to `total`.
fn split(total: &Rational, k: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let w: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=5)).collect();
    let s: i64 = w.iter().sum();
    w.into_iter().map(|x| total * rat(x, s)).collect()
}

/// Takes `amount` from coordinates allowed to lose, skipping `keep`.
fn remove(
    v: &mut [Rational],
    dir: &mut [Dir],
    amount: Rational,
    keep: &[usize],
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let mut left = amount;
    let mut cands: Vec<usize> = (0..v.len())
        .filter(|&g| dir[g] != Dir::Gained && !keep.contains(&g) && v[g].is_positive())
        .collect();
    cands.shuffle(rng);
    for pass in 0..2 {
        for &g in &cands {
            if !left.is_positive() {
                return Ok(());
            }
            let mut take = if v[g] < left { v[g].clone() } else { left.clone() };
            if pass == 0 && rng.gen_bool(0.5) {
                take /= int(2);
            }
            if take.is_positive() {
                v[g] -= &take;
                left -= &take;
                dir[g] = Dir::Lost;
            }
        }
    }
    if left.is_positive() {
        return Err(infeasible(format!(
            "removable mass falls short of the request by {}",
            format_rational(&left)
        )));
    }
    Ok(())
}

fn deposit(v: &mut [Rational], dir: &mut [Dir], targets: &[usize], amount: &Rational, rng: &mut ChaCha8Rng) {
    if targets.is_empty() || amount.is_zero() {
        return;
    }
    for (&g, x) in targets.iter().zip(split(amount, targets.len(), rng)) {
        v[g] += x;
        dir[g] = Dir::Gained;
    }
}

/// Shape decided once per profile so all agents keep a common horizon.
#[derive(Clone, Copy)]
enum Shape {
    Same,
    Append(usize),
    Truncate(usize),
}

fn perturb_row(
    p: &[Rational],
    d: &Rational,
    mode: PerturbMode,
    shape: Shape,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Rational>> {
    let mut v = p.to_vec();
    let mut removed_by_shape = Rational::zero();
    match shape {
        Shape::Same => {}
        Shape::Append(k) => v.extend(std::iter::repeat_n(Rational::zero(), k)),
        Shape::Truncate(k) => {
            let cut = v.len() - k;
            removed_by_shape = sum(&v[cut..]);
            v.truncate(cut);
        }
    }
    let mut dir = vec![Dir::Untouched; v.len()];
    let mut left = d - &removed_by_shape;
    let mut gained = Rational::zero();

    if mode == PerturbMode::Reorder {
        let m = p.len().min(v.len());
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let diff = (&v[i] - &v[j]).abs();
                if diff.is_positive() && diff <= left {
                    pairs.push((i, j));
                }
            }
        }
        if let Some(&(i, j)) = pairs.choose(rng) {
            let diff = (&v[i] - &v[j]).abs();
            let (hi, lo) = if v[i] > v[j] { (i, j) } else { (j, i) };
            v.swap(i, j);
            dir[hi] = Dir::Lost;
            dir[lo] = Dir::Gained;
            left -= &diff;
            gained = diff;
        }
    }

    let targets: Vec<usize> = match shape {
        Shape::Append(k) => (v.len() - k..v.len()).collect(),
        _ => {
            let mut open: Vec<usize> = (0..v.len()).filter(|&g| dir[g] != Dir::Lost).collect();
            open.shuffle(rng);
            let want = rng.gen_range(1..=2).min(open.len());
            open.truncate(want);
            open
        }
    };
    let to_deposit = d - &gained;
    if to_deposit.is_positive() && targets.is_empty() {
        return Err(infeasible("no coordinate can absorb mass".into()));
    }
    let attempt = remove(&mut v, &mut dir, left.clone(), &targets, rng);
    if let Err(e) = attempt {
        if matches!(shape, Shape::Append(_)) {
            return Err(e);
        }
        // retry with the lightest eligible coordinate as the only target
        return perturb_fallback(p, d, shape, rng).map_err(|_| e);
    }
    deposit(&mut v, &mut dir, &targets, &to_deposit, rng);
    Ok(v)
}

fn perturb_fallback(p: &[Rational], d: &Rational, shape: Shape, rng: &mut ChaCha8Rng) -> Result<Vec<Rational>> {
    let mut v = p.to_vec();
    let mut removed = Rational::zero();
    if let Shape::Truncate(k) = shape {
        let cut = v.len() - k;
        removed = sum(&v[cut..]);
        v.truncate(cut);
    }
    let mut dir = vec![Dir::Untouched; v.len()];
    let target = (0..v.len())
        .min_by(|&a, &b| v[a].cmp(&v[b]).then(a.cmp(&b)))
        .ok_or_else(|| infeasible("empty profile".into()))?;
    remove(&mut v, &mut dir, d - &removed, &[target], rng)?;
    deposit(&mut v, &mut dir, &[target], d, rng);
    Ok(v)
}

/// Truths at TV distance exactly `d[i]` from each agent's prediction.
/// Identical profiles are perturbed once (with `d[0]`) and stay identical.
pub fn perturb(
    p: &ValuationProfile,
    d: &[Rational],
    mode: PerturbMode,
    seed: u64,
) -> Result<ValuationProfile> {
    if d.len() != p.n() {
        return Err(Error::WrongAgentCount { expected: p.n(), got: d.len() });
    }
    for di in d {
        if di.is_negative() || di > &Rational::from_integer(1.into()) {
            return Err(infeasible(format!("distance {} outside [0, 1]", format_rational(di))));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = p.rows();
    let agents = if p.is_identical() { 1 } else { p.n() };
    let shape = match mode {
        PerturbMode::Append => Shape::Append(rng.gen_range(1..=3)),
        PerturbMode::Truncate => {
            let horizon = p.horizon();
            let mut k = 0;
            while k + 1 < horizon
                && (0..agents).all(|i| sum(&rows[i][horizon - k - 1..]) <= d[i])
            {
                k += 1;
            }
            if k == 0 {
                Shape::Same
            } else {
                Shape::Truncate(rng.gen_range(1..=k))
            }
        }
        _ => Shape::Same,
    };
    let mut out = Vec::with_capacity(p.n());
    for i in 0..agents {
        out.push(perturb_row(&rows[i], &d[i], mode, shape, &mut rng)?);
    }
    if p.is_identical() {
        let row = out.pop().expect("one row");
        out = vec![row; p.n()];
    }
    ValuationProfile::from_rows(out, p.is_identical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tv::tv_distance;
    use crate::valuation::ValuationVector;

    #[test]
    fn uniform_three_at_one_sixth() {
        let p = ValuationProfile::identical(2, ValuationVector::new(vec![rat(1, 3); 3]).unwrap()).unwrap();
        for mode in PerturbMode::ALL {
            for seed in 0..20 {
                let v = perturb(&p, &[rat(1, 6), rat(1, 6)], mode, seed).unwrap();
                assert_eq!(tv_distance(p.agent(0), v.agent(0)).unwrap(), rat(1, 6), "{mode} {seed}");
            }
        }
    }

    #[test]
    fn zero_distance_is_identity_for_shift() {
        let p = ValuationProfile::identical(2, ValuationVector::new(vec![rat(1, 4); 4]).unwrap()).unwrap();
        let v = perturb(&p, &[rat(0, 1), rat(0, 1)], PerturbMode::Shift, 7).unwrap();
        assert_eq!(v, p);
    }
}
