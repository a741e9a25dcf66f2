//! Valuation vectors, profiles, instances and allocations.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, serde_str, sum, Rational};
use crate::tv::tv_distance;

/// One agent's additive values over goods `0..horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationVector {
    values: Vec<Rational>,
    normalized: bool,
}

impl ValuationVector {
    /// Nonnegative entries summing exactly to 1.
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        check_nonnegative(&values)?;
        let total = sum(&values);
        if !total.is_one() {
            return Err(Error::NotNormalized { sum: format_rational(&total) });
        }
        Ok(Self { values, normalized: true })
    }

    /// Nonnegative entries with no constraint on the total (prefix values, scratch rows).
    pub fn unnormalized(values: Vec<Rational>) -> Result<Self> {
        check_nonnegative(&values)?;
        let normalized = sum(&values).is_one();
        Ok(Self { values, normalized })
    }

    pub fn horizon(&self) -> usize {
        self.values.len()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, good: usize) -> &Rational {
        &self.values[good]
    }

    pub fn value_of<'a>(&self, bundle: impl IntoIterator<Item = &'a usize>) -> Rational {
        bundle
            .into_iter()
            .fold(Rational::zero(), |acc, &g| acc + &self.values[g])
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }
}

impl AsRef<[Rational]> for ValuationVector {
    fn as_ref(&self) -> &[Rational] {
        &self.values
    }
}

fn check_nonnegative(values: &[Rational]) -> Result<()> {
    match values.iter().position(|v| v.is_negative()) {
        Some(good) => Err(Error::NegativeValue {
            good,
            value: format_rational(&values[good]),
        }),
        None => Ok(()),
    }
}

/// `n` normalized vectors over a common horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationProfile {
    vectors: Vec<ValuationVector>,
    identical: bool,
}

impl ValuationProfile {
    pub fn new(vectors: Vec<ValuationVector>, identical: bool) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidProfile("no agents".into()));
        }
        let horizon = vectors[0].horizon();
        if horizon == 0 {
            return Err(Error::InvalidProfile("empty horizon".into()));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.horizon() != horizon {
                return Err(Error::InvalidProfile(format!(
                    "agent {i} has horizon {}, agent 0 has {horizon}",
                    v.horizon()
                )));
            }
            if !v.is_normalized() {
                return Err(Error::InvalidProfile(format!("agent {i} is not normalized")));
            }
        }
        if identical && vectors.iter().any(|v| v != &vectors[0]) {
            return Err(Error::InvalidProfile(
                "flagged identical but vectors differ".into(),
            ));
        }
        Ok(Self { vectors, identical })
    }

    /// `n` copies of one vector.
    pub fn identical(n: usize, v: ValuationVector) -> Result<Self> {
        Self::new(vec![v; n], true)
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, identical: bool) -> Result<Self> {
        let vectors = rows
            .into_iter()
            .map(ValuationVector::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(vectors, identical)
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn horizon(&self) -> usize {
        self.vectors[0].horizon()
    }

    pub fn is_identical(&self) -> bool {
        self.identical
    }

    pub fn agent(&self, i: usize) -> &ValuationVector {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[ValuationVector] {
        &self.vectors
    }

    /// Per-agent values of good `t`.
    pub fn column(&self, t: usize) -> Vec<Rational> {
        self.vectors.iter().map(|v| v.get(t).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.vectors.iter().map(|v| v.values().to_vec()).collect()
    }
}

/// Predictions, truths and the declared per-agent accuracy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub predictions: ValuationProfile,
    pub truths: ValuationProfile,
    pub declared_accuracy: Vec<Rational>,
}

impl Instance {
    pub fn new(
        predictions: ValuationProfile,
        truths: ValuationProfile,
        declared_accuracy: Vec<Rational>,
    ) -> Result<Self> {
        let n = truths.n();
        if predictions.n() != n {
            return Err(Error::InvalidProfile(format!(
                "predictions have {} agents, truths have {n}",
                predictions.n()
            )));
        }
        if declared_accuracy.len() != n {
            return Err(Error::InvalidProfile(format!(
                "{} accuracy entries for {n} agents",
                declared_accuracy.len()
            )));
        }
        for (i, acc) in declared_accuracy.iter().enumerate() {
            if acc.is_negative() || acc > &Rational::one() {
                return Err(Error::InvalidProfile(format!(
                    "accuracy {} of agent {i} outside [0,1]",
                    format_rational(acc)
                )));
            }
            let realized = Rational::one() - tv_distance(predictions.agent(i), truths.agent(i))?;
            if acc > &realized {
                return Err(Error::AccuracyOverclaimed {
                    agent: i,
                    declared: format_rational(acc),
                    realized: format_rational(&realized),
                });
            }
        }
        Ok(Self { predictions, truths, declared_accuracy })
    }

    /// Instance whose declared accuracy equals the realized accuracy.
    pub fn with_realized_accuracy(
        predictions: ValuationProfile,
        truths: ValuationProfile,
    ) -> Result<Self> {
        let acc = (0..truths.n())
            .map(|i| {
                tv_distance(predictions.agent(i), truths.agent(i)).map(|d| Rational::one() - d)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(predictions, truths, acc)
    }

    pub fn n(&self) -> usize {
        self.truths.n()
    }

    /// Realized per-agent TV error.
    pub fn errors(&self) -> Vec<Rational> {
        (0..self.n())
            .map(|i| {
                tv_distance(self.predictions.agent(i), self.truths.agent(i))
                    .expect("profiles are normalized")
            })
            .collect()
    }

    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            n: self.n(),
            identical: self.truths.is_identical() && self.predictions.is_identical(),
            predictions: self.predictions.rows(),
            truths: self.truths.rows(),
            accuracy: self.declared_accuracy.clone(),
        }
    }
}

/// The on-disk instance format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    pub identical: bool,
    #[serde(with = "serde_str::matrix")]
    pub predictions: Vec<Vec<Rational>>,
    #[serde(with = "serde_str::matrix")]
    pub truths: Vec<Vec<Rational>>,
    #[serde(with = "serde_str::vec")]
    pub accuracy: Vec<Rational>,
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<Instance> {
        if self.predictions.len() != self.n || self.truths.len() != self.n {
            return Err(Error::InvalidProfile(format!(
                "n = {} but {} prediction rows and {} truth rows",
                self.n,
                self.predictions.len(),
                self.truths.len()
            )));
        }
        let p = ValuationProfile::from_rows(self.predictions, self.identical)?;
        let v = ValuationProfile::from_rows(self.truths, self.identical)?;
        Instance::new(p, v, self.accuracy)
    }
}

/// A partition of goods `0..horizon` into `n` bundles. Bundles are kept sorted by good id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Allocation {
    bundles: Vec<Vec<usize>>,
}

impl Allocation {
    pub fn from_bundles(mut bundles: Vec<Vec<usize>>, horizon: usize) -> Result<Self> {
        let mut seen = vec![false; horizon];
        for (i, b) in bundles.iter_mut().enumerate() {
            b.sort_unstable();
            for &g in b.iter() {
                if g >= horizon {
                    return Err(Error::InvalidAllocation(format!(
                        "agent {i} holds good {g} beyond horizon {horizon}"
                    )));
                }
                if std::mem::replace(&mut seen[g], true) {
                    return Err(Error::InvalidAllocation(format!("good {g} allocated twice")));
                }
            }
        }
        if let Some(g) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidAllocation(format!("good {g} unallocated")));
        }
        Ok(Self { bundles })
    }

    /// `owner[t]` is the agent receiving good `t`.
    pub fn from_assignment(owner: &[usize], n: usize) -> Result<Self> {
        let mut bundles = vec![Vec::new(); n];
        for (g, &i) in owner.iter().enumerate() {
            if i >= n {
                return Err(Error::InvalidAllocation(format!(
                    "good {g} assigned to agent {i} of {n}"
                )));
            }
            bundles[i].push(g);
        }
        Ok(Self { bundles })
    }

    pub fn n(&self) -> usize {
        self.bundles.len()
    }

    pub fn horizon(&self) -> usize {
        self.bundles.iter().map(Vec::len).sum()
    }

    pub fn bundle(&self, i: usize) -> &[usize] {
        &self.bundles[i]
    }

    pub fn bundles(&self) -> &[Vec<usize>] {
        &self.bundles
    }

    pub fn into_bundles(self) -> Vec<Vec<usize>> {
        self.bundles
    }

    /// Owner of each good, indexed by good id.
    pub fn owners(&self) -> Vec<usize> {
        let mut owner = vec![usize::MAX; self.horizon()];
        for (i, b) in self.bundles.iter().enumerate() {
            for &g in b {
                owner[g] = i;
            }
        }
        owner
    }

    /// Bundles reassigned so that new agent `i` holds old bundle `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            bundles: perm.iter().map(|&j| self.bundles[j].clone()).collect(),
        }
    }

    /// Multiset of bundles, order-independent.
    pub fn bundle_set(&self) -> BTreeSet<Vec<usize>> {
        self.bundles.iter().cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rejects_negative_and_unnormalized() {
        assert!(matches!(
            ValuationVector::new(vec![rat(3, 2), rat(-1, 2)]),
            Err(Error::NegativeValue { good: 1, .. })
        ));
        assert!(matches!(
            ValuationVector::new(vec![rat(1, 2), rat(1, 3)]),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn identical_flag_checked() {
        let a = ValuationVector::new(vec![rat(1, 2), rat(1, 2)]).unwrap();
        let b = ValuationVector::new(vec![rat(1, 4), rat(3, 4)]).unwrap();
        assert!(ValuationProfile::new(vec![a.clone(), b.clone()], true).is_err());
        assert!(ValuationProfile::new(vec![a, b], false).is_ok());
    }

    #[test]
    fn partition_checked() {
        assert!(Allocation::from_bundles(vec![vec![0], vec![0, 1]], 2).is_err());
        assert!(Allocation::from_bundles(vec![vec![0], vec![]], 2).is_err());
        assert!(Allocation::from_bundles(vec![vec![3], vec![]], 2).is_err());
        let a = Allocation::from_bundles(vec![vec![2, 0], vec![1]], 3).unwrap();
        assert_eq!(a.bundle(0), &[0, 2]);
        assert_eq!(a.owners(), vec![0, 1, 0]);
    }

    #[test]
    fn overclaimed_accuracy_rejected() {
        let p = ValuationProfile::from_rows(vec![vec![rat(1, 2), rat(1, 2)]; 2], true).unwrap();
        let v = ValuationProfile::from_rows(vec![vec![rat(1, 4), rat(3, 4)]; 2], true).unwrap();
        assert!(Instance::new(p.clone(), v.clone(), vec![rat(3, 4); 2]).is_ok());
        assert!(matches!(
            Instance::new(p, v, vec![rat(4, 5); 2]),
            Err(Error::AccuracyOverclaimed { agent: 0, .. })
        ));
    }
}
