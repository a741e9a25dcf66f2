//! Online allocators.
//!
//! Goods arrive one at a time as a vector of per-agent values and must be
//! placed immediately. Every allocator shares [`BundleState`], which rejects
//! out-of-order arrivals, wrong-length value vectors and negative values.

mod ef1;
mod follower;
mod forms;
mod greedy;
mod main_alg;
mod three_goods;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};
use crate::valuation::{Allocation, ValuationProfile};

pub use ef1::LowestBundleEf1;
pub use follower::{FollowerBase, PredictionFollower};
pub use forms::{classify_form, passthrough_threshold, FormInfo, FormTag};
pub use greedy::GreedyPhi;
pub use main_alg::{MainAllocator, MAIN_OPS_PER_STEP};
pub use three_goods::ThreeGoods;

/// Contract shared by all allocators.
pub trait OnlineAllocator: Send {
    fn name(&self) -> String;

    fn n(&self) -> usize;

    /// Places good `t` (arriving in index order) and returns the receiving agent.
    fn step(&mut self, t: usize, revealed: &[Rational]) -> Result<usize>;

    /// Bundles of the goods placed so far.
    fn bundles(&self) -> &[Vec<usize>];

    /// Basic operations spent on each step so far, for allocators that count them.
    fn op_counts(&self) -> Option<&[u32]> {
        None
    }

    fn allocation(&self) -> Allocation {
        let horizon = self.bundles().iter().map(Vec::len).sum();
        Allocation::from_bundles(self.bundles().to_vec(), horizon)
            .expect("allocators keep a partition of the revealed goods")
    }
}

/// Partial bundles plus the running own-valuation of each agent.
#[derive(Debug, Clone)]
pub struct BundleState {
    bundles: Vec<Vec<usize>>,
    own: Vec<Rational>,
    next: usize,
}

impl BundleState {
    pub fn new(n: usize) -> Self {
        Self {
            bundles: vec![Vec::new(); n],
            own: vec![Rational::zero(); n],
            next: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.bundles.len()
    }

    /// Number of goods placed so far.
    pub fn placed(&self) -> usize {
        self.next
    }

    pub fn bundles(&self) -> &[Vec<usize>] {
        &self.bundles
    }

    /// `v_i(B_i)` under the values revealed so far.
    pub fn own_value(&self, i: usize) -> &Rational {
        &self.own[i]
    }

    pub fn check(&self, t: usize, revealed: &[Rational]) -> Result<()> {
        if t != self.next {
            return Err(Error::OutOfOrder { expected: self.next, got: t });
        }
        if revealed.len() != self.n() {
            return Err(Error::WrongAgentCount { expected: self.n(), got: revealed.len() });
        }
        if let Some(v) = revealed.iter().find(|v| v.is_negative()) {
            return Err(Error::NegativeValue { good: t, value: format_rational(v) });
        }
        Ok(())
    }

    pub fn place(&mut self, t: usize, revealed: &[Rational], i: usize) -> usize {
        debug_assert_eq!(t, self.next);
        self.bundles[i].push(t);
        self.own[i] += &revealed[i];
        self.next += 1;
        i
    }
}

/// What an allocator may read before the first good arrives.
#[derive(Debug, Clone)]
pub struct AllocatorContext {
    pub n: usize,
    /// Whether true valuations are promised identical.
    pub identical: bool,
    pub predictions: Option<ValuationProfile>,
    pub declared_accuracy: Option<Vec<Rational>>,
}

impl AllocatorContext {
    pub fn new(n: usize, identical: bool) -> Self {
        Self { n, identical, predictions: None, declared_accuracy: None }
    }

    pub fn with_predictions(mut self, p: ValuationProfile) -> Self {
        self.predictions = Some(p);
        self
    }

    fn require_two_identical(&self, name: &str) -> Result<()> {
        if self.n != 2 {
            return Err(incompatible(name, format!("needs n = 2, got {}", self.n)));
        }
        if !self.identical {
            return Err(incompatible(name, "needs identical valuations"));
        }
        Ok(())
    }

    fn predictions(&self, name: &str) -> Result<&ValuationProfile> {
        let p = self
            .predictions
            .as_ref()
            .ok_or_else(|| incompatible(name, "needs predictions"))?;
        if p.n() != self.n {
            return Err(incompatible(name, format!("{} prediction rows for {} agents", p.n(), self.n)));
        }
        Ok(p)
    }
}

pub(crate) fn incompatible(name: &str, reason: impl Into<String>) -> Error {
    Error::Incompatible { allocator: name.to_string(), reason: reason.into() }
}

/// Allocator names accepted by [`make_allocator`].
pub const ALLOCATOR_NAMES: [&str; 6] = [
    "greedy-phi",
    "ef1-lowest",
    "follower:lpt",
    "follower:cut-and-choose",
    "three-goods",
    "main",
];

/// Builds an allocator by name; `a` is the target factor where one applies.
pub fn make_allocator(
    name: &str,
    a: Option<&Rational>,
    ctx: &AllocatorContext,
) -> Result<Box<dyn OnlineAllocator>> {
    match name {
        "greedy-phi" => {
            ctx.require_two_identical(name)?;
            Ok(Box::new(GreedyPhi::new()))
        }
        "ef1-lowest" => {
            if ctx.n < 1 {
                return Err(incompatible(name, "needs at least one agent"));
            }
            Ok(Box::new(LowestBundleEf1::new(ctx.n)))
        }
        "follower:lpt" => {
            let p = ctx.predictions(name)?;
            Ok(Box::new(PredictionFollower::new(p, FollowerBase::Lpt)?))
        }
        "follower:cut-and-choose" => {
            let p = ctx.predictions(name)?;
            Ok(Box::new(PredictionFollower::new(p, FollowerBase::CutAndChoose)?))
        }
        "three-goods" => {
            ctx.require_two_identical(name)?;
            let p = ctx.predictions(name)?;
            Ok(Box::new(ThreeGoods::new(p.horizon())))
        }
        "main" => {
            ctx.require_two_identical(name)?;
            let p = ctx.predictions(name)?;
            let a = a.ok_or_else(|| incompatible(name, "needs a target factor a"))?;
            Ok(Box::new(MainAllocator::new(p, a)?))
        }
        other => Err(Error::UnknownAllocator(other.to_string())),
    }
}
