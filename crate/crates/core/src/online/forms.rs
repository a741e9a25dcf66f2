use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bounds::main_d_max;
use crate::error::{Error, Result};
use crate::fairness::efx_factor_rows;
use crate::rational::{format_rational, int, Rational};
use crate::valuation::{Allocation, ValuationVector};

/// Structural class of the two-agent LPT allocation of the predictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormTag {
    /// The lighter bundle is heavy enough that the plan itself is safe.
    Passthrough,
    /// Predicted horizon at most three.
    ThreeGoods,
    /// Heavier bundle holds two top-level goods.
    Form1,
    /// Heavier bundle holds a second-level good and a good of at most that level.
    Form2or4,
    /// Heavier bundle is one top-level and one second-level good, the latter
    /// not predicted to arrive after both top-level goods.
    Form3EarlyY,
    /// As above, with the second-level good predicted last.
    Form3LateY,
    /// Heavier bundle is a single good.
    SingletonA2,
}

/// Classification result: the tag, the relabeling and the runtime thresholds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormInfo {
    pub tag: FormTag,
    /// Index of the lighter LPT bundle (plays agent 1); the other plays agent 2.
    pub low: usize,
    pub z: Option<Rational>,
    pub y: Option<Rational>,
    /// Goods tracked by id at runtime, ascending.
    pub large: Vec<usize>,
    pub threshold: Option<Rational>,
    /// Once a large good sits with agent 1, the remaining ones go to agent 2.
    pub fallback: bool,
    pub tau: Rational,
    pub d_max: Rational,
}

impl FormInfo {
    pub fn high(&self) -> usize {
        1 - self.low
    }
}

/// `(4+a−a²)/((2+a)(5−a))`: at or above this, the lighter bundle is safe as is.
pub fn passthrough_threshold(a: &Rational) -> Rational {
    (int(4) + a - a * a) / ((int(2) + a) * (int(5) - a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Z,
    Y,
    X,
}

fn inconsistent(msg: impl Into<String>) -> Error {
    Error::InconsistentForm(msg.into())
}

/// Classifies `alloc`, which must be an exact EFX two-bundle allocation of `p`.
pub fn classify_form(alloc: &Allocation, p: &ValuationVector, a: &Rational) -> Result<FormInfo> {
    let tau = passthrough_threshold(a);
    let d_max = main_d_max(a);
    let mut info = FormInfo {
        tag: FormTag::ThreeGoods,
        low: 0,
        z: None,
        y: None,
        large: Vec::new(),
        threshold: None,
        fallback: false,
        tau,
        d_max,
    };
    let f = p.values();
    if f.len() <= 3 {
        return Ok(info);
    }
    if alloc.n() != 2 || alloc.horizon() != f.len() {
        return Err(inconsistent("allocation does not split the predicted goods between two agents"));
    }
    if !efx_factor_rows(alloc.bundles(), &[f, f]).is_one() {
        return Err(inconsistent("allocation is not exact EFX on the predictions"));
    }
    let v0 = p.value_of(alloc.bundle(0));
    let v1 = p.value_of(alloc.bundle(1));
    info.low = if v0 <= v1 { 0 } else { 1 };
    let a1 = alloc.bundle(info.low);
    let a2 = alloc.bundle(info.high());
    let p_a1 = if info.low == 0 { v0 } else { v1 };
    if p_a1 >= info.tau || a.is_one() {
        info.tag = FormTag::Passthrough;
        return Ok(info);
    }
    if a2.len() == 1 {
        info.tag = FormTag::SingletonA2;
        return Ok(info);
    }
    if a2.len() != 2 {
        return Err(inconsistent(format!(
            "heavier bundle has {} goods below the passthrough threshold",
            a2.len()
        )));
    }

    let z = f.iter().max().expect("nonempty").clone();
    let y = f.iter().filter(|v| **v < z).max().cloned();
    let level = |g: usize| {
        if f[g] == z {
            Level::Z
        } else if y.as_ref() == Some(&f[g]) {
            Level::Y
        } else {
            Level::X
        }
    };
    let a1_z: Vec<usize> = a1.iter().copied().filter(|&g| level(g) == Level::Z).collect();
    let mut pair = [(level(a2[0]), a2[0]), (level(a2[1]), a2[1])];
    pair.sort();
    let half_d = &info.d_max / int(2);
    let one_z_in_a1 = |what: &str| -> Result<()> {
        if a1_z.len() == 1 {
            Ok(())
        } else {
            Err(inconsistent(format!(
                "{what}: lighter bundle holds {} top-level goods, expected 1",
                a1_z.len()
            )))
        }
    };
    let mut large = vec![a2[0], a2[1]];
    match (pair[0].0, pair[1].0) {
        (Level::Z, Level::Z) => {
            one_z_in_a1("form 1")?;
            info.tag = FormTag::Form1;
            info.threshold = Some(&z + &half_d);
        }
        (Level::Z, Level::Y) => {
            one_z_in_a1("form 3")?;
            let y_id = pair[1].1;
            let late = y_id > pair[0].1 && y_id > a1_z[0];
            if late {
                let one = Rational::one();
                let margin = (&one - a) * (&one - a) / ((int(2) + a) * (int(5) - a));
                info.tag = FormTag::Form3LateY;
                info.threshold = Some(&z + margin);
                info.fallback = true;
            } else {
                info.tag = FormTag::Form3EarlyY;
                info.threshold = Some(&z + &half_d);
            }
        }
        (Level::Y, Level::Y) | (Level::Y, Level::X) => {
            one_z_in_a1("form 2/4")?;
            info.tag = FormTag::Form2or4;
            info.threshold = Some(y.clone().expect("y level present") + &half_d);
            info.fallback = true;
        }
        (l0, l1) => {
            return Err(inconsistent(format!(
                "heavier bundle levels {l0:?}/{l1:?} with lighter value {}",
                format_rational(&p_a1)
            )));
        }
    }
    large.extend(a1_z);
    large.sort_unstable();
    info.large = large;
    info.z = Some(z);
    info.y = y;
    Ok(info)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::offline::lpt;
    use crate::rational::rat;

    fn vv(x: &[(i64, i64)]) -> ValuationVector {
        ValuationVector::new(x.iter().map(|&(a, b)| rat(a, b)).collect()).unwrap()
    }

    #[test]
    fn passthrough_threshold_value() {
        assert_eq!(passthrough_threshold(&rat(7, 10)), rat(421, 1161));
        let p = vv(&[(3, 10), (3, 10), (1, 5), (1, 5)]);
        let info = classify_form(&lpt(&p, 2), &p, &rat(7, 10)).unwrap();
        assert_eq!(info.tag, FormTag::Passthrough);
    }

    #[test]
    fn three_goods_by_horizon() {
        let p = vv(&[(1, 3), (1, 3), (1, 3)]);
        let info = classify_form(&lpt(&p, 2), &p, &rat(7, 10)).unwrap();
        assert_eq!(info.tag, FormTag::ThreeGoods);
    }

    #[test]
    fn form1_two_top_goods() {
        // LPT gives {0,2} against {1,3}, and 34/100 is below the threshold
        let p = vv(&[(33, 100), (33, 100), (33, 100), (1, 100)]);
        let info = classify_form(&lpt(&p, 2), &p, &rat(7, 10)).unwrap();
        assert_eq!(info.tag, FormTag::Form1);
        assert_eq!(info.large, vec![0, 1, 2]);
    }
}
