use crate::adversaries::{realized_error, Adversary, ErrorClaim, Reveal};
use crate::error::{Error, Result};
use crate::fairness::report_rows;
use crate::online::{make_allocator, AllocatorContext, OnlineAllocator};
use crate::rational::{format_rational, Rational};
use crate::valuation::{Allocation, Instance};

use super::transcript::{GameTranscript, Source, StepRecord};

/// Allocator choice: registry name plus target factor where one applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllocatorChoice {
    pub name: String,
    pub a: Option<Rational>,
}

impl AllocatorChoice {
    pub fn new(name: &str) -> Self {
        Self { name: name.to_string(), a: None }
    }

    pub fn with_a(mut self, a: Rational) -> Self {
        self.a = Some(a);
        self
    }
}

fn finish(
    source: Source,
    choice: &AllocatorChoice,
    n: usize,
    steps: Vec<StepRecord>,
    alloc: &dyn OnlineAllocator,
) -> Result<GameTranscript> {
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| steps.iter().map(|s| s.values[i].clone()).collect())
        .collect();
    let allocation = alloc.allocation();
    let report = report_rows(allocation.bundles(), &rows);
    Ok(GameTranscript {
        source,
        seed: None,
        allocator: choice.name.clone(),
        a: choice.a.clone(),
        n,
        steps,
        allocation,
        report,
        realized_error: None,
        claimed_error: None,
        error_consistent: None,
    })
}

/// Feeds the instance's true values in arrival order.
pub fn run_instance(choice: &AllocatorChoice, instance: &Instance) -> Result<GameTranscript> {
    let n = instance.n();
    let ctx = AllocatorContext {
        n,
        identical: instance.truths.is_identical(),
        predictions: Some(instance.predictions.clone()),
        declared_accuracy: Some(instance.declared_accuracy.clone()),
    };
    let mut alloc = make_allocator(&choice.name, choice.a.as_ref(), &ctx)?;
    let mut steps = Vec::with_capacity(instance.truths.horizon());
    for t in 0..instance.truths.horizon() {
        let values = instance.truths.column(t);
        let agent = alloc.step(t, &values)?;
        steps.push(StepRecord { good: t, values, agent });
    }
    let mut tr = finish(Source::Instance { path: None }, choice, n, steps, alloc.as_ref())?;
    tr.realized_error = Some(instance.errors());
    Ok(tr)
}

/// Plays the allocator against the adversary; `choice.a` defaults to the adversary's `a`.
pub fn run_duel(choice: &AllocatorChoice, adv: &Adversary) -> Result<GameTranscript> {
    let n = adv.n();
    let mut choice = choice.clone();
    if choice.a.is_none() {
        choice.a = Some(adv.a().clone());
    }
    let ctx = AllocatorContext {
        n,
        identical: adv.is_identical(),
        predictions: adv.predictions().cloned(),
        declared_accuracy: None,
    };
    let mut alloc = make_allocator(&choice.name, choice.a.as_ref(), &ctx)?;
    let mut steps: Vec<StepRecord> = Vec::new();
    let mut decisions = Vec::new();
    loop {
        let batch = match adv.reveal(&decisions) {
            Reveal::Done => break,
            Reveal::Good(values) => vec![values],
            Reveal::Padding(k) => vec![vec![Rational::from_integer(0.into()); n]; k],
        };
        for values in batch {
            let t = steps.len();
            if t >= adv.horizon() {
                return Err(Error::AdversaryExhausted(format!(
                    "revealed good {t} beyond horizon {}",
                    adv.horizon()
                )));
            }
            let agent = alloc.step(t, &values)?;
            decisions.push(agent);
            steps.push(StepRecord { good: t, values, agent });
        }
    }
    if steps.len() != adv.horizon() {
        return Err(Error::AdversaryExhausted(format!(
            "path ended after {} of {} goods",
            steps.len(),
            adv.horizon()
        )));
    }
    let source = Source::Adversary { spec: adv.spec().clone() };
    let mut tr = finish(source, &choice, n, steps, alloc.as_ref())?;
    let rows = tr.rows();
    tr.realized_error = realized_error(adv, &rows);
    let claim = adv.claimed_error(&decisions);
    tr.claimed_error = match &claim {
        ErrorClaim::NoPrediction => None,
        ErrorClaim::Exact(e) => Some(format!("= {}", format_rational(e))),
        ErrorClaim::AtMost(e) => Some(format!("<= {}", format_rational(e))),
    };
    tr.error_consistent = tr
        .realized_error
        .as_ref()
        .map(|errs| errs.iter().all(|e| claim.admits(e)));
    Ok(tr)
}

/// Allocation of an instance's goods by a named allocator, without a transcript.
pub fn allocate(choice: &AllocatorChoice, instance: &Instance) -> Result<Allocation> {
    Ok(run_instance(choice, instance)?.allocation)
}
