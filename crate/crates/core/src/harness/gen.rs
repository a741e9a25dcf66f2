//! Seeded instance generators.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::offline::lpt;
use crate::online::{classify_form, passthrough_threshold, FormTag};
use crate::rational::{int, rat, Rational};
use crate::valuation::{ValuationProfile, ValuationVector};

fn weights_row(t: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let w: Vec<i64> = (0..t).map(|_| rng.gen_range(1..=10)).collect();
    let s: i64 = w.iter().sum();
    w.into_iter().map(|x| rat(x, s)).collect()
}

/// Random positive integer weights in `1..=10`, normalized by their sum.
pub fn gen_random_instance(n: usize, t: usize, identical: bool, seed: u64) -> Result<ValuationProfile> {
    if n < 1 || t < 1 {
        return Err(Error::InvalidProfile(format!("need n >= 1 and T >= 1, got n = {n}, T = {t}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if identical {
        ValuationProfile::identical(n, ValuationVector::new(weights_row(t, &mut rng))?)
    } else {
        let rows = (0..n).map(|_| weights_row(t, &mut rng)).collect();
        ValuationProfile::from_rows(rows, false)
    }
}

/// Uniform rational strictly inside `(lo, hi)` on a 1/1000 lattice of the interval.
fn inside(lo: &Rational, hi: &Rational, rng: &mut ChaCha8Rng) -> Rational {
    lo + (hi - lo) * rat(rng.gen_range(1..=999), 1000)
}

/// Splits `total` into `k` or more goods, each strictly below `cap`.
fn small_goods(total: &Rational, cap: &Rational, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let mut k = rng.gen_range(1..=3);
    loop {
        let w: Vec<i64> = (0..k).map(|_| rng.gen_range(4..=6)).collect();
        let s: i64 = w.iter().sum();
        let parts: Vec<Rational> = w.into_iter().map(|x| total * rat(x, s)).collect();
        if parts.iter().all(|p| p < cap) {
            return parts;
        }
        k += 1;
    }
}

/// A two-agent identical prediction whose LPT allocation has the requested form at `a`.
pub fn gen_form_prediction(tag: FormTag, a: &Rational, seed: u64) -> Result<ValuationVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = passthrough_threshold(a);
    let one = Rational::one();
    let third = rat(1, 3);
    let two_thirds = rat(2, 3);
    for _ in 0..200 {
        let (big, rest_cap, late): (Vec<Rational>, Rational, Option<bool>) = match tag {
            FormTag::Form1 => {
                let z = inside(&((&one - &tau) / int(2)), &third, &mut rng);
                (vec![z.clone(), z.clone(), z.clone()], z, None)
            }
            FormTag::Form2or4 => {
                if rng.gen_bool(0.5) {
                    let y = inside(&((&one - &tau) / int(2)), &third, &mut rng);
                    let z = inside(&y, &(&one - int(2) * &y), &mut rng);
                    (vec![z, y.clone(), y.clone()], y, None)
                } else {
                    let s = inside(&(&one - &tau), &two_thirds, &mut rng);
                    let y = inside(&(&s / int(2)), &(&one - &s), &mut rng);
                    let xs = &s - &y;
                    let z = inside(&y, &(&one - &s), &mut rng);
                    (vec![z, y, xs.clone()], xs, None)
                }
            }
            FormTag::Form3EarlyY | FormTag::Form3LateY => {
                let s = inside(&(&one - &tau), &two_thirds, &mut rng);
                let z = inside(&(&s / int(2)), &(&one - &s), &mut rng);
                let y = &s - &z;
                (vec![z.clone(), z, y.clone()], y, Some(tag == FormTag::Form3LateY))
            }
            FormTag::SingletonA2 => {
                let g = inside(&(&one - &tau), &one, &mut rng);
                (vec![g.clone()], g, None)
            }
            FormTag::Passthrough | FormTag::ThreeGoods => {
                return Err(Error::Domain(format!("no targeted generator for {tag:?}")));
            }
        };
        let rest_total = &one - big.iter().fold(Rational::zero(), |acc, v| acc + v);
        if rest_total <= Rational::zero() {
            continue;
        }
        let mut rest = small_goods(&rest_total, &rest_cap, &mut rng);
        if tag == FormTag::SingletonA2 && rest.len() < 3 {
            rest = small_goods(&rest_total, &(&rest_total / int(2)), &mut rng);
            while rest.len() < 3 {
                let last = rest.pop().expect("nonempty");
                rest.push(&last / int(2));
                rest.push(last / int(2));
            }
        }
        let mut values: Vec<Rational> = big.iter().cloned().chain(rest).collect();
        match late {
            // the second-level good is big[2]; put it after or before both top goods
            Some(want_late) => {
                let mut order: Vec<usize> = (0..values.len()).collect();
                order.shuffle(&mut rng);
                let pos = |order: &[usize], g: usize| order.iter().position(|&x| x == g).expect("present");
                let (p0, p1, py) = (pos(&order, 0), pos(&order, 1), pos(&order, 2));
                let is_late = py > p0 && py > p1;
                if is_late != want_late {
                    let target = if want_late { p0.max(p1) } else { p0.min(p1) };
                    order.swap(py, target);
                }
                values = order.into_iter().map(|g| values[g].clone()).collect();
            }
            None => values.shuffle(&mut rng),
        }
        let p = ValuationVector::new(values)?;
        if let Ok(info) = classify_form(&lpt(&p, 2), &p, a) {
            if info.tag == tag {
                return Ok(p);
            }
        }
    }
    Err(Error::Domain(format!("could not generate {tag:?} at this a")))
}
