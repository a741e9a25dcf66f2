use serde::{Deserialize, Serialize};

use crate::adversaries::AdversarySpec;
use crate::error::{Error, Result};
use crate::fairness::FairnessReport;
use crate::online::OnlineAllocator;
use crate::rational::{serde_str, Rational};
use crate::valuation::Allocation;

/// Where the revealed values came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Source {
    Instance {
        #[serde(skip_serializing_if = "Option::is_none", default)]
        path: Option<String>,
    },
    Adversary {
        spec: AdversarySpec,
    },
}

/// One arrival: the good, its per-agent values and the chosen agent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub good: usize,
    #[serde(with = "serde_str::vec")]
    pub values: Vec<Rational>,
    pub agent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTranscript {
    pub source: Source,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub allocator: String,
    #[serde(with = "serde_str::option", default)]
    pub a: Option<Rational>,
    pub n: usize,
    pub steps: Vec<StepRecord>,
    pub allocation: Allocation,
    pub report: FairnessReport,
    #[serde(with = "serde_str::option_vec", default)]
    pub realized_error: Option<Vec<Rational>>,
    /// Human-readable claim such as `= 1/20` or `<= 1/20`, for duels.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub claimed_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error_consistent: Option<bool>,
}

impl GameTranscript {
    pub fn efx_factor(&self) -> &Rational {
        &self.report.efx_factor
    }

    pub fn decisions(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.agent).collect()
    }

    /// Per-agent rows of revealed values.
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.n)
            .map(|i| self.steps.iter().map(|s| s.values[i].clone()).collect())
            .collect()
    }

    /// Rebuilds the allocation from the recorded steps.
    pub fn allocation_from_steps(&self) -> Result<Allocation> {
        for (t, s) in self.steps.iter().enumerate() {
            if s.good != t {
                return Err(Error::IncompleteTranscript(format!(
                    "step {t} records good {}",
                    s.good
                )));
            }
        }
        Allocation::from_assignment(&self.decisions(), self.n)
    }

    /// Feeds the recorded values to a fresh allocator and checks it makes the
    /// same decisions and ends in the recorded allocation.
    pub fn replay(&self, allocator: &mut dyn OnlineAllocator) -> Result<bool> {
        for s in &self.steps {
            if allocator.step(s.good, &s.values)? != s.agent {
                return Ok(false);
            }
        }
        Ok(allocator.allocation() == self.allocation && self.allocation_from_steps()? == self.allocation)
    }
}
