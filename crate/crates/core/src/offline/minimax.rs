//! Best factor any deterministic online algorithm attains against a fixed adversary.
//!
//! The adversary reacts only to past decisions, so an algorithm that knows the
//! adversary can steer to any leaf of its decision tree. The oracle value is
//! therefore the maximum, over decision paths, of the final EFX factor.

use num_traits::{One, Zero};

use crate::adversaries::{Adversary, Reveal};
use crate::error::{Error, Result};
use crate::fairness::efx_factor_rows;
use crate::rational::Rational;
use crate::valuation::Allocation;

/// Node limit for the decision-tree walk.
pub const MINIMAX_NODE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimaxResult {
    pub factor: Rational,
    /// Allocation on a best path.
    pub witness: Allocation,
    /// Per-agent values revealed along that path.
    pub rows: Vec<Vec<Rational>>,
    pub nodes: u64,
}

struct Walk<'a> {
    adv: &'a Adversary,
    n: usize,
    decisions: Vec<usize>,
    rows: Vec<Vec<Rational>>,
    nodes: u64,
    best: Option<(Rational, Vec<usize>, Vec<Vec<Rational>>)>,
}

impl Walk<'_> {
    fn bundles(owner: &[usize], n: usize) -> Vec<Vec<usize>> {
        let mut b = vec![Vec::new(); n];
        for (g, &i) in owner.iter().enumerate() {
            b[i].push(g);
        }
        b
    }

    fn offer(&mut self, factor: Rational, owner: Vec<usize>, rows: Vec<Vec<Rational>>) {
        if self.best.as_ref().is_none_or(|(f, _, _)| factor > *f) {
            self.best = Some((factor, owner, rows));
        }
    }

    fn done(&self) -> bool {
        self.best.as_ref().is_some_and(|(f, _, _)| f.is_one())
    }

    fn descend(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > MINIMAX_NODE_BUDGET {
            return Err(Error::BudgetExceeded(format!(
                "minimax walk exceeded {MINIMAX_NODE_BUDGET} nodes"
            )));
        }
        match self.adv.reveal(&self.decisions) {
            Reveal::Done => {
                let f = efx_factor_rows(&Self::bundles(&self.decisions, self.n), &self.rows);
                self.offer(f, self.decisions.clone(), self.rows.clone());
            }
            Reveal::Padding(k) => {
                for j in 0..self.n {
                    let mut owner = self.decisions.clone();
                    owner.extend(std::iter::repeat_n(j, k));
                    let mut rows = self.rows.clone();
                    for r in rows.iter_mut() {
                        r.extend(std::iter::repeat_n(Rational::zero(), k));
                    }
                    let f = efx_factor_rows(&Self::bundles(&owner, self.n), &rows);
                    self.offer(f, owner, rows);
                    if self.done() {
                        break;
                    }
                }
            }
            Reveal::Good(values) => {
                for (row, v) in self.rows.iter_mut().zip(values) {
                    row.push(v);
                }
                for i in 0..self.n {
                    self.decisions.push(i);
                    self.descend()?;
                    self.decisions.pop();
                    if self.done() {
                        break;
                    }
                }
                for row in self.rows.iter_mut() {
                    row.pop();
                }
            }
        }
        Ok(())
    }
}

/// Oracle value of the adversary. For the prediction-only construction the
/// maximum ranges over algorithms that follow an exact EFX plan of the predictions.
pub fn minimax_online_factor(adv: &Adversary) -> Result<MinimaxResult> {
    if adv.is_prediction_only() {
        return prediction_following_factor(adv);
    }
    let n = adv.n();
    let mut walk = Walk {
        adv,
        n,
        decisions: Vec::new(),
        rows: vec![Vec::new(); n],
        nodes: 0,
        best: None,
    };
    walk.descend()?;
    let (factor, owner, rows) = walk.best.expect("the tree has a leaf");
    Ok(MinimaxResult {
        factor,
        witness: Allocation::from_assignment(&owner, n)?,
        rows,
        nodes: walk.nodes,
    })
}

fn prediction_following_factor(adv: &Adversary) -> Result<MinimaxResult> {
    let p = adv.predictions().expect("prediction-only has predictions");
    let n = adv.n();
    let t = p.horizon();
    let total = (n as u64).checked_pow(t as u32).unwrap_or(u64::MAX);
    if total > MINIMAX_NODE_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "{n}^{t} plans exceeds {MINIMAX_NODE_BUDGET}"
        )));
    }
    let prows = p.rows();
    let mut best: Option<(Rational, Allocation, Vec<Vec<Rational>>)> = None;
    let mut owner = vec![0usize; t];
    for code in 0..total {
        let mut c = code;
        for o in owner.iter_mut() {
            *o = (c % n as u64) as usize;
            c /= n as u64;
        }
        let plan = Allocation::from_assignment(&owner, n)?;
        if !efx_factor_rows(plan.bundles(), &prows).is_one() {
            continue;
        }
        let truth = adv.truth_against(&plan).expect("prediction-only truth");
        let rows = vec![truth; n];
        let f = efx_factor_rows(plan.bundles(), &rows);
        if best.as_ref().is_none_or(|(b, _, _)| f > *b) {
            best = Some((f, plan, rows));
        }
    }
    let (factor, witness, rows) = best.expect("uniform prediction admits an exact EFX plan");
    Ok(MinimaxResult { factor, witness, rows, nodes: total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversaries::{build_adversary, AdversarySpec, ConstructionId};
    use crate::rational::rat;

    #[test]
    fn two_value_pair_is_below_target() {
        let spec = AdversarySpec::new(ConstructionId::TwoValuePair, rat(4, 5))
            .with_param("eps", &rat(11, 100));
        let res = minimax_online_factor(&build_adversary(&spec).unwrap()).unwrap();
        assert!(res.factor < rat(4, 5));
    }

    #[test]
    fn prediction_only_closed_form() {
        let spec = AdversarySpec::new(ConstructionId::PredictionOnly, rat(3, 5))
            .with_param("D", &rat(1, 10));
        let res = minimax_online_factor(&build_adversary(&spec).unwrap()).unwrap();
        // (1/3 - 1/10) / (1/3 + 1/10)
        assert_eq!(res.factor, rat(7, 13));
    }
}
