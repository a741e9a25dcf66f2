use crate::error::Result;
use crate::offline::{cut_and_choose, eliminate_envy_cycles, lpt, unenvied_agent};
use crate::rational::Rational;
use crate::valuation::{Allocation, ValuationProfile};

use super::{incompatible, BundleState, OnlineAllocator};

/// Offline procedure producing an EFX allocation of the predictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FollowerBase {
    /// Identical predictions, any `n`.
    Lpt,
    /// Two agents, any predictions.
    CutAndChoose,
}

/// Follows an envy-cycle-free EFX plan of the predictions, ignoring true values.
/// Goods past the predicted horizon go to an unenvied agent of the plan.
#[derive(Debug, Clone)]
pub struct PredictionFollower {
    base: FollowerBase,
    plan: Allocation,
    owner: Vec<usize>,
    sink: usize,
    state: BundleState,
}

impl PredictionFollower {
    pub fn new(p: &ValuationProfile, base: FollowerBase) -> Result<Self> {
        let name = Self::base_name(base);
        let start = match base {
            FollowerBase::Lpt => {
                if !p.is_identical() {
                    return Err(incompatible(name, "lpt needs identical predictions"));
                }
                lpt(p.agent(0), p.n())
            }
            FollowerBase::CutAndChoose => {
                if p.n() != 2 {
                    return Err(incompatible(name, format!("needs n = 2, got {}", p.n())));
                }
                cut_and_choose(p.agent(0), p.agent(1))
            }
        };
        let plan = eliminate_envy_cycles(&start, p);
        let sink = unenvied_agent(&plan, p)?;
        Ok(Self {
            base,
            owner: plan.owners(),
            plan,
            sink,
            state: BundleState::new(p.n()),
        })
    }

    fn base_name(base: FollowerBase) -> &'static str {
        match base {
            FollowerBase::Lpt => "follower:lpt",
            FollowerBase::CutAndChoose => "follower:cut-and-choose",
        }
    }

    /// The envy-cycle-free plan being followed.
    pub fn plan(&self) -> &Allocation {
        &self.plan
    }

    /// Recipient of goods beyond the predicted horizon.
    pub fn sink(&self) -> usize {
        self.sink
    }
}

impl OnlineAllocator for PredictionFollower {
    fn name(&self) -> String {
        Self::base_name(self.base).into()
    }

    fn n(&self) -> usize {
        self.state.n()
    }

    fn step(&mut self, t: usize, revealed: &[Rational]) -> Result<usize> {
        self.state.check(t, revealed)?;
        let i = self.owner.get(t).copied().unwrap_or(self.sink);
        Ok(self.state.place(t, revealed, i))
    }

    fn bundles(&self) -> &[Vec<usize>] {
        self.state.bundles()
    }
}
