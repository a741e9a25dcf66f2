use std::cmp::Ordering;

use crate::error::Result;
use crate::golden::cmp_golden;
use crate::rational::Rational;

use super::{BundleState, OnlineAllocator};

/// Two identical agents without predictions: agent 0 keeps taking goods while
/// its bundle stays at most φ−1, everything else goes to agent 1.
#[derive(Debug, Clone)]
pub struct GreedyPhi {
    state: BundleState,
}

impl GreedyPhi {
    pub fn new() -> Self {
        Self { state: BundleState::new(2) }
    }
}

impl Default for GreedyPhi {
    fn default() -> Self {
        Self::new()
    }
}

impl OnlineAllocator for GreedyPhi {
    fn name(&self) -> String {
        "greedy-phi".into()
    }

    fn n(&self) -> usize {
        2
    }

    fn step(&mut self, t: usize, revealed: &[Rational]) -> Result<usize> {
        self.state.check(t, revealed)?;
        let after = self.state.own_value(0) + &revealed[0];
        let i = if cmp_golden(&after) == Ordering::Greater { 1 } else { 0 };
        Ok(self.state.place(t, revealed, i))
    }

    fn bundles(&self) -> &[Vec<usize>] {
        self.state.bundles()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn run(vals: &[Rational]) -> Vec<usize> {
        let mut g = GreedyPhi::new();
        vals.iter()
            .enumerate()
            .map(|(t, v)| g.step(t, &[v.clone(), v.clone()]).unwrap())
            .collect()
    }

    #[test]
    fn traces() {
        assert_eq!(run(&[rat(3, 10), rat(3, 10), rat(1, 5), rat(1, 5)]), vec![0, 0, 1, 1]);
        assert_eq!(run(&[rat(1, 2), rat(1, 2)]), vec![0, 1]);
        assert_eq!(run(&[rat(2, 5), rat(3, 10), rat(3, 10)]), vec![0, 1, 1]);
    }

    #[test]
    fn rejects_out_of_order() {
        let mut g = GreedyPhi::new();
        assert!(g.step(1, &[rat(1, 2), rat(1, 2)]).is_err());
    }
}
