use num_traits::One;

use crate::error::{Error, Result};
use crate::golden::above_golden;
use crate::offline::lpt;
use crate::rational::{format_rational, Rational};
use crate::valuation::ValuationProfile;

use super::forms::{classify_form, FormInfo, FormTag};
use super::three_goods::ThreeGoods;
use super::{incompatible, BundleState, OnlineAllocator};

/// Upper bound on basic operations the main allocator spends per arriving good.
pub const MAIN_OPS_PER_STEP: u32 = 6;

#[derive(Debug, Clone)]
enum Mode {
    Small(ThreeGoods),
    Follow { owner: Vec<usize> },
    Thresholds { is_large: Vec<bool>, threshold: Rational, in_low: u32, in_high: u32 },
}

/// Two identical agents with predictions and target `a ∈ (φ−1, 1]`.
///
/// Computes LPT on the predictions once, classifies its form, then places
/// each good with a constant number of comparisons.
#[derive(Debug, Clone)]
pub struct MainAllocator {
    a: Rational,
    info: FormInfo,
    horizon: usize,
    mode: Mode,
    state: BundleState,
    ops: Vec<u32>,
}

impl MainAllocator {
    pub fn new(p: &ValuationProfile, a: &Rational) -> Result<Self> {
        if !above_golden(a) || a > &Rational::one() {
            return Err(Error::Domain(format!(
                "a = {} violates a^2 + a - 1 > 0 and a <= 1",
                format_rational(a)
            )));
        }
        if p.n() != 2 || !p.is_identical() {
            return Err(incompatible("main", "needs identical predictions for two agents"));
        }
        let horizon = p.horizon();
        let plan = lpt(p.agent(0), 2);
        let info = classify_form(&plan, p.agent(0), a)?;
        let mode = match info.tag {
            FormTag::ThreeGoods => Mode::Small(ThreeGoods::new(horizon)),
            FormTag::Passthrough | FormTag::SingletonA2 => Mode::Follow { owner: plan.owners() },
            _ => {
                let mut is_large = vec![false; horizon];
                for &g in &info.large {
                    is_large[g] = true;
                }
                Mode::Thresholds {
                    is_large,
                    threshold: info.threshold.clone().expect("forms carry a threshold"),
                    in_low: 0,
                    in_high: 0,
                }
            }
        };
        Ok(Self {
            a: a.clone(),
            info,
            horizon,
            mode,
            state: BundleState::new(2),
            ops: Vec::new(),
        })
    }

    pub fn form(&self) -> &FormInfo {
        &self.info
    }

    pub fn target(&self) -> &Rational {
        &self.a
    }
}

impl OnlineAllocator for MainAllocator {
    fn name(&self) -> String {
        "main".into()
    }

    fn n(&self) -> usize {
        2
    }

    fn step(&mut self, t: usize, revealed: &[Rational]) -> Result<usize> {
        self.state.check(t, revealed)?;
        let low = self.info.low;
        let high = self.info.high();
        let fallback = self.info.fallback;
        let (i, ops) = match &mut self.mode {
            Mode::Small(inner) => {
                let i = inner.step(t, revealed)?;
                (i, inner.op_counts().and_then(|o| o.last().copied()).unwrap_or(1))
            }
            Mode::Follow { owner } => (owner.get(t).copied().unwrap_or(low), 1),
            Mode::Thresholds { is_large, threshold, in_low, in_high } => {
                if t < self.horizon && is_large[t] {
                    let to_high = (revealed[0] <= *threshold && *in_high < 2) || (fallback && *in_low >= 1);
                    if to_high {
                        *in_high += 1;
                        (high, 5)
                    } else {
                        *in_low += 1;
                        (low, 5)
                    }
                } else {
                    (low, 2)
                }
            }
        };
        debug_assert!(ops <= MAIN_OPS_PER_STEP);
        self.ops.push(ops);
        Ok(self.state.place(t, revealed, i))
    }

    fn bundles(&self) -> &[Vec<usize>] {
        self.state.bundles()
    }

    fn op_counts(&self) -> Option<&[u32]> {
        Some(&self.ops)
    }
}
