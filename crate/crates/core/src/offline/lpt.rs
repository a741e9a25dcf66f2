use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::rational::Rational;
use crate::valuation::{Allocation, ValuationVector};

/// Longest-processing-time allocation of `f` among `n` agents.
///
/// Goods are taken in non-ascending value (ascending id on ties), each to a
/// bundle of currently minimum value (lowest agent id on ties).
pub fn lpt(f: &ValuationVector, n: usize) -> Allocation {
    lpt_values(f.values(), n)
}

pub fn lpt_values(f: &[Rational], n: usize) -> Allocation {
    assert!(n >= 1, "lpt needs at least one agent");
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by(|&a, &b| f[b].cmp(&f[a]).then(a.cmp(&b)));

    let mut heap: BinaryHeap<Reverse<(Rational, usize)>> =
        (0..n).map(|i| Reverse((Rational::from_integer(0.into()), i))).collect();
    let mut bundles = vec![Vec::new(); n];
    for g in order {
        let Reverse((value, i)) = heap.pop().expect("heap holds n entries");
        bundles[i].push(g);
        heap.push(Reverse((value + &f[g], i)));
    }
    for b in &mut bundles {
        b.sort_unstable();
    }
    Allocation::from_bundles(bundles, f.len()).expect("lpt assigns every good once")
}

/// LPT on `p1`, then agent 2 picks the bundle it values more (bundle 2 on ties).
pub fn cut_and_choose(p1: &ValuationVector, p2: &ValuationVector) -> Allocation {
    let base = lpt(p1, 2);
    let v0 = p2.value_of(base.bundle(0));
    let v1 = p2.value_of(base.bundle(1));
    if v0 > v1 {
        base.permuted(&[1, 0])
    } else {
        base
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn vv(x: &[(i64, i64)]) -> ValuationVector {
        ValuationVector::new(x.iter().map(|&(a, b)| rat(a, b)).collect()).unwrap()
    }

    #[test]
    fn small_traces() {
        let a = lpt(&vv(&[(1, 2), (1, 4), (1, 4)]), 2);
        assert_eq!(a.bundles(), &[vec![0], vec![1, 2]]);
        let a = lpt(&vv(&[(1, 1), (0, 1), (0, 1)]), 2);
        assert_eq!(a.bundles(), &[vec![0], vec![1, 2]]);
    }

    #[test]
    fn uniform_leaves_one_singleton() {
        for n in 2..6 {
            let t = 2 * n - 1;
            let f = vv(&vec![(1, t as i64); t]);
            let a = lpt(&f, n);
            assert_eq!(a.bundle(n - 1), &[n - 1]);
            for i in 0..n - 1 {
                assert_eq!(a.bundle(i).len(), 2);
            }
        }
    }

    #[test]
    fn chooser_takes_preferred_bundle() {
        let p1 = vv(&[(1, 2), (1, 4), (1, 4)]);
        let p2 = vv(&[(1, 10), (1, 10), (8, 10)]);
        let a = cut_and_choose(&p1, &p2);
        assert_eq!(a.bundle(1), &[1, 2]);
        let p2 = vv(&[(8, 10), (1, 10), (1, 10)]);
        let a = cut_and_choose(&p1, &p2);
        assert_eq!(a.bundle(1), &[0]);
    }
}
