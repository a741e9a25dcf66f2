use crate::error::Result;
use crate::rational::Rational;

use super::{BundleState, OnlineAllocator};

/// Each good goes to the agent whose own bundle is currently worth least to
/// itself (lowest id on ties). Exact EF1 at every prefix for identical valuations.
#[derive(Debug, Clone)]
pub struct LowestBundleEf1 {
    state: BundleState,
}

impl LowestBundleEf1 {
    pub fn new(n: usize) -> Self {
        Self { state: BundleState::new(n) }
    }
}

impl OnlineAllocator for LowestBundleEf1 {
    fn name(&self) -> String {
        "ef1-lowest".into()
    }

    fn n(&self) -> usize {
        self.state.n()
    }

    fn step(&mut self, t: usize, revealed: &[Rational]) -> Result<usize> {
        self.state.check(t, revealed)?;
        let i = (0..self.n())
            .min_by(|&a, &b| self.state.own_value(a).cmp(self.state.own_value(b)).then(a.cmp(&b)))
            .expect("at least one agent");
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

    #[test]
    fn uniform_stream_cycles() {
        let mut a = LowestBundleEf1::new(3);
        let v = vec![rat(1, 5); 3];
        let d: Vec<usize> = (0..5).map(|t| a.step(t, &v).unwrap()).collect();
        assert_eq!(d, vec![0, 1, 2, 0, 1]);
    }
}
