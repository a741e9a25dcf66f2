use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::fairness::efx_factor_rows;
use crate::rational::Rational;
use crate::valuation::{Allocation, ValuationProfile};

/// Largest `n^T` the exhaustive oracle accepts.
pub const BRUTE_FORCE_BUDGET: u64 = 10_000_000;

/// Best EFX factor over all allocations, with the first witness found in
/// enumeration order. Identical profiles enumerate one labelling per partition.
pub fn brute_force_best_factor(profile: &ValuationProfile) -> Result<(Rational, Allocation)> {
    let n = profile.n();
    let t = profile.horizon();
    let count = (n as u64).checked_pow(t as u32);
    if count.is_none_or(|c| c > BRUTE_FORCE_BUDGET) {
        return Err(Error::BudgetExceeded(format!(
            "{n}^{t} allocations exceeds {BRUTE_FORCE_BUDGET}"
        )));
    }
    let mut search = Search {
        n,
        identical: profile.is_identical(),
        owner: vec![0; t],
        best: None,
        eval: Evaluator::new(profile),
    };
    search.descend(0, 0);
    let (factor, owner) = search.best.expect("at least one allocation exists");
    Ok((factor, Allocation::from_assignment(&owner, n)?))
}

struct Search<'a> {
    n: usize,
    identical: bool,
    owner: Vec<usize>,
    best: Option<(Rational, Vec<usize>)>,
    eval: Evaluator<'a>,
}

impl Search<'_> {
    /// Returns true once a factor of 1 is found.
    fn descend(&mut self, t: usize, used: usize) -> bool {
        if t == self.owner.len() {
            let f = self.eval.factor(&self.owner, self.n);
            let better = self.best.as_ref().is_none_or(|(b, _)| &f > b);
            let done = f.is_one();
            if better {
                self.best = Some((f, self.owner.clone()));
            }
            return done;
        }
        let limit = if self.identical { (used + 1).min(self.n) } else { self.n };
        for i in 0..limit {
            self.owner[t] = i;
            if self.descend(t + 1, used.max(i + 1)) {
                return true;
            }
        }
        false
    }
}

enum Evaluator<'a> {
    Scaled(Vec<Vec<i128>>),
    Exact(&'a ValuationProfile),
}

impl<'a> Evaluator<'a> {
    fn new(profile: &'a ValuationProfile) -> Self {
        let limit = BigInt::one() << 60u32;
        let mut rows = Vec::with_capacity(profile.n());
        for v in profile.vectors() {
            let lcm = v
                .values()
                .iter()
                .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            if lcm > limit {
                return Evaluator::Exact(profile);
            }
            let row: Option<Vec<i128>> = v
                .values()
                .iter()
                .map(|r| (r.numer() * (&lcm / r.denom())).to_i128())
                .collect();
            match row {
                Some(r) => rows.push(r),
                None => return Evaluator::Exact(profile),
            }
        }
        Evaluator::Scaled(rows)
    }

    fn factor(&self, owner: &[usize], n: usize) -> Rational {
        match self {
            Evaluator::Exact(profile) => {
                let alloc = Allocation::from_assignment(owner, n).expect("valid owners");
                efx_factor_rows(alloc.bundles(), profile.vectors())
            }
            Evaluator::Scaled(rows) => scaled_factor(rows, owner, n),
        }
    }
}

fn scaled_factor(rows: &[Vec<i128>], owner: &[usize], n: usize) -> Rational {
    let mut size = vec![0usize; n];
    for &j in owner {
        size[j] += 1;
    }
    let (mut bn, mut bd) = (1i128, 1i128);
    for (i, row) in rows.iter().enumerate() {
        let mut total = vec![0i128; n];
        let mut min = vec![i128::MAX; n];
        for (g, &j) in owner.iter().enumerate() {
            total[j] += row[g];
            min[j] = min[j].min(row[g]);
        }
        let own = total[i];
        for j in 0..n {
            if j == i || size[j] < 2 {
                continue;
            }
            let other = total[j] - min[j];
            if other > 0 && own * bd < bn * other {
                bn = own;
                bd = other;
            }
        }
    }
    Rational::new(bn.into(), bd.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn three_goods_example() {
        let v = vec![rat(1, 2), rat(3, 10), rat(1, 5)];
        let p = ValuationProfile::from_rows(vec![v.clone(), v], true).unwrap();
        let (f, w) = brute_force_best_factor(&p).unwrap();
        assert_eq!(f, rat(1, 1));
        assert_eq!(w.bundle_set(), [vec![0], vec![1, 2]].into_iter().collect());
    }

    #[test]
    fn budget_enforced() {
        let v = vec![rat(1, 30); 30];
        let p = ValuationProfile::from_rows(vec![v.clone(), v], true).unwrap();
        assert!(matches!(brute_force_best_factor(&p), Err(Error::BudgetExceeded(_))));
    }
}
