use num_traits::One;

use crate::error::Result;
use crate::rational::Rational;

use super::{BundleState, OnlineAllocator};

/// Two identical agents with predicted horizon `T'`. Only `T'` is used: the
/// first `min(T', 3)` goods are split assuming the third carries all
/// remaining value, later goods join the lighter bundle as it stood then.
#[derive(Debug, Clone)]
pub struct ThreeGoods {
    head: usize,
    state: BundleState,
    first: Option<Rational>,
    isolate: bool,
    first_is_max: bool,
    sink: Option<usize>,
    ops: Vec<u32>,
}

impl ThreeGoods {
    pub fn new(predicted_horizon: usize) -> Self {
        Self {
            head: predicted_horizon.min(3),
            state: BundleState::new(2),
            first: None,
            isolate: false,
            first_is_max: false,
            sink: None,
            ops: Vec::new(),
        }
    }

    fn decide(&mut self, t: usize, v: &Rational) -> (usize, u32) {
        if t >= self.head {
            let sink = *self.sink.get_or_insert_with(|| {
                if self.state.own_value(0) <= self.state.own_value(1) {
                    0
                } else {
                    1
                }
            });
            return (sink, 1);
        }
        match t {
            0 => {
                self.first = Some(v.clone());
                (0, 1)
            }
            1 => {
                let v1 = self.first.as_ref().expect("first good seen");
                let rest = Rational::one() - v1 - v;
                let top = if v1 >= v { v1 } else { v };
                self.isolate = *top >= rest;
                self.first_is_max = v1 >= v;
                (if self.isolate { 1 } else { 0 }, 3)
            }
            _ => {
                let i = match (self.isolate, self.first_is_max) {
                    (true, true) => 1,
                    (true, false) => 0,
                    (false, _) => 1,
                };
                (i, 1)
            }
        }
    }
}

impl OnlineAllocator for ThreeGoods {
    fn name(&self) -> String {
        "three-goods".into()
    }

    fn n(&self) -> usize {
        2
    }

    fn step(&mut self, t: usize, revealed: &[Rational]) -> Result<usize> {
        self.state.check(t, revealed)?;
        let (i, ops) = self.decide(t, &revealed[0]);
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn run(h: usize, vals: &[Rational]) -> Vec<Vec<usize>> {
        let mut a = ThreeGoods::new(h);
        for (t, v) in vals.iter().enumerate() {
            a.step(t, &[v.clone(), v.clone()]).unwrap();
        }
        a.bundles().to_vec()
    }

    #[test]
    fn traces() {
        assert_eq!(run(3, &[rat(1, 5), rat(1, 2), rat(3, 10)]), vec![vec![0, 2], vec![1]]);
        assert_eq!(run(3, &[rat(2, 5), rat(1, 10), rat(1, 2)]), vec![vec![0, 1], vec![2]]);
    }
}
