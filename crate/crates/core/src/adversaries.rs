//! Adaptive adversaries for the lower-bound constructions.
//!
//! Each adversary is a deterministic branching program: the next revealed
//! good is a function of the allocator's past decisions only, so the minimax
//! oracle can walk every branch and the harness can replay a duel exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{eval_bound, BoundId, BoundParams};
use crate::error::{Error, Result};
use crate::golden::{above_golden, above_sqrt3_minus_1, cmp_two_phi_minus_3, golden_approx};
use crate::offline::{eliminate_envy_cycles, lpt, unenvied_agent};
use crate::rational::{format_rational, int, midpoint, rat, Rational};
use crate::valuation::{Allocation, ValuationProfile, ValuationVector};

/// The nine lower-bound constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionId {
    /// Two identical agents, no predictions, any `a > φ−1`.
    GoldenNoPred,
    /// `n ≥ 3` identical agents, no predictions.
    ManyNoPred,
    /// Two non-identical agents, no predictions.
    NonIdenticalNoPred,
    /// Uniform prediction defeating any algorithm that follows an exact EFX plan blindly.
    PredictionOnly,
    /// Two non-identical agents with predictions, `T = 4`.
    NonIdenticalPred,
    /// Two identical agents with predictions, `T = 4`.
    IdenticalPred,
    /// `n ≥ 3` identical agents with predictions.
    ManyPred,
    /// Two identical agents with a 2-value prediction.
    TwoValuePair,
    /// `n ≥ 3` identical agents with a 2-value prediction.
    TwoValueMany,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 9] = [
        Self::GoldenNoPred,
        Self::ManyNoPred,
        Self::NonIdenticalNoPred,
        Self::PredictionOnly,
        Self::NonIdenticalPred,
        Self::IdenticalPred,
        Self::ManyPred,
        Self::TwoValuePair,
        Self::TwoValueMany,
    ];

    /// 1-based position in [`ConstructionId::ALL`].
    pub fn number(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).expect("listed") + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::GoldenNoPred => "golden-no-pred",
            Self::ManyNoPred => "many-no-pred",
            Self::NonIdenticalNoPred => "non-identical-no-pred",
            Self::PredictionOnly => "prediction-only",
            Self::NonIdenticalPred => "non-identical-pred",
            Self::IdenticalPred => "identical-pred",
            Self::ManyPred => "many-pred",
            Self::TwoValuePair => "two-value-pair",
            Self::TwoValueMany => "two-value-many",
        }
    }

    /// The allocator each construction is dueled against by default.
    pub fn natural_target(self) -> &'static str {
        match self {
            Self::GoldenNoPred => "greedy-phi",
            Self::ManyNoPred | Self::NonIdenticalNoPred => "ef1-lowest",
            Self::PredictionOnly | Self::ManyPred | Self::TwoValueMany => "follower:lpt",
            Self::NonIdenticalPred => "follower:cut-and-choose",
            Self::IdenticalPred | Self::TwoValuePair => "main",
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(k) = s.parse::<usize>() {
            if (1..=9).contains(&k) {
                return Ok(Self::ALL[k - 1]);
            }
        }
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownAdversary(s.to_string()))
    }
}

/// Construction id, target factor `a`, agent count and free-parameter overrides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdversarySpec {
    pub id: ConstructionId,
    #[serde(with = "crate::rational::serde_str")]
    pub a: Rational,
    pub n: Option<usize>,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

impl AdversarySpec {
    pub fn new(id: ConstructionId, a: Rational) -> Self {
        Self { id, a, n: None, params: BTreeMap::new() }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_param(mut self, name: &str, value: &Rational) -> Self {
        self.params.insert(name.to_string(), format_rational(value));
        self
    }

    fn param(&self, name: &str) -> Result<Option<Rational>> {
        self.params
            .get(name)
            .map(|s| crate::rational::parse_rational(s))
            .transpose()
    }
}

/// What the adversary does next on a given decision history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reveal {
    /// Per-agent values of the next good.
    Good(Vec<Rational>),
    /// The remaining `k` goods are worth zero to everyone.
    Padding(usize),
    Done,
}

/// The realized prediction error a construction promises on a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ErrorClaim {
    /// No prediction is emitted.
    NoPrediction,
    Exact(Rational),
    AtMost(Rational),
}

impl ErrorClaim {
    pub fn admits(&self, realized: &Rational) -> bool {
        match self {
            ErrorClaim::NoPrediction => false,
            ErrorClaim::Exact(e) => realized == e,
            ErrorClaim::AtMost(e) => realized <= e && !realized.is_negative(),
        }
    }
}

#[derive(Debug, Clone)]
enum Plan {
    Golden { eps: Rational },
    ManyNoPred { eps: Rational },
    NonIdNoPred { eps: Rational },
    Fixed { truth: Vec<Vec<Rational>>, d: Rational },
    NonIdPred { eps: Rational, lambda: Rational },
    IdPred { eps: Rational, lambda: Rational },
    ManySmall { eps: Rational },
    KGoods { k: Rational, shift: Rational, claim: ErrorClaim },
    TwoValuePair { eps: Rational },
}

/// A built, validated adversary.
#[derive(Debug, Clone)]
pub struct Adversary {
    spec: AdversarySpec,
    n: usize,
    horizon: usize,
    identical: bool,
    predictions: Option<ValuationProfile>,
    resolved: BTreeMap<String, Rational>,
    plan: Plan,
}

fn domain(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(what()))
    }
}

fn open_interval(name: &str, x: &Rational, lo: &Rational, hi: &Rational) -> Result<()> {
    domain(lo < x && x < hi, || {
        format!(
            "{name} = {} must lie in ({}, {})",
            format_rational(x),
            format_rational(lo),
            format_rational(hi)
        )
    })
}

fn half_open(name: &str, x: &Rational, lo: &Rational, hi: &Rational) -> Result<()> {
    domain(lo < x && x <= hi, || {
        format!(
            "{name} = {} must lie in ({}, {}]",
            format_rational(x),
            format_rational(lo),
            format_rational(hi)
        )
    })
}

fn nonneg(name: &str, x: &Rational) -> Result<()> {
    domain(!x.is_negative(), || {
        format!("{name} = {} must be nonnegative", format_rational(x))
    })
}

fn a_in_unit(a: &Rational) -> Result<()> {
    half_open("a", a, &Rational::zero(), &Rational::one())
}

fn a_above_golden(a: &Rational) -> Result<()> {
    domain(above_golden(a) && a <= &Rational::one(), || {
        format!("a = {} must satisfy a^2 + a - 1 > 0 and a <= 1", format_rational(a))
    })
}

fn identical_profile(n: usize, values: Vec<Rational>) -> Result<ValuationProfile> {
    ValuationProfile::identical(n, ValuationVector::new(values)?)
}

/// Plan the prediction-following algorithm derives from an identical prediction.
fn follower_plan(p: &ValuationProfile) -> (Allocation, usize) {
    let base = lpt(p.agent(0), p.n());
    let plan = eliminate_envy_cycles(&base, p);
    let k = unenvied_agent(&plan, p).expect("acyclic after elimination");
    (plan, k)
}

pub fn build_adversary(spec: &AdversarySpec) -> Result<Adversary> {
    let a = spec.a.clone();
    let one = Rational::one();
    let half = rat(1, 2);
    let mut resolved = BTreeMap::new();
    let two_agents = |spec: &AdversarySpec| -> Result<usize> {
        match spec.n {
            None | Some(2) => Ok(2),
            Some(n) => Err(Error::Domain(format!("construction needs n = 2, got {n}"))),
        }
    };
    let many_agents = |spec: &AdversarySpec| -> Result<usize> {
        let n = spec.n.unwrap_or(3);
        domain(n >= 3, || format!("construction needs n >= 3, got {n}"))?;
        Ok(n)
    };

    let (n, horizon, identical, predictions, plan) = match spec.id {
        ConstructionId::GoldenNoPred => {
            let n = two_agents(spec)?;
            a_above_golden(&a)?;
            let lambda = match spec.param("lambda")? {
                Some(l) => l,
                None => {
                    let bits = 16;
                    let phi_hi = golden_approx(bits) + Rational::new(1.into(), num_bigint::BigInt::from(1) << bits);
                    (&a - phi_hi) / int(2)
                }
            };
            domain(lambda.is_positive() && above_golden(&(&a - &lambda)), || {
                format!(
                    "lambda = {} must lie in (0, a - phi + 1)",
                    format_rational(&lambda)
                )
            })?;
            let eps = &lambda / int(4);
            let steps = crate::golden::floor_two_phi_minus_3_over(&eps);
            let horizon = usize::try_from(steps).map_err(|_| {
                Error::Domain("horizon too large for lambda".into())
            })? + 3;
            resolved.insert("lambda".into(), lambda);
            resolved.insert("eps".into(), eps.clone());
            (n, horizon, true, None, Plan::Golden { eps })
        }
        ConstructionId::ManyNoPred => {
            let n = many_agents(spec)?;
            a_in_unit(&a)?;
            let eps = &a / int(3 * (n as i64 - 1));
            resolved.insert("eps".into(), eps.clone());
            (n, n + 1, true, None, Plan::ManyNoPred { eps })
        }
        ConstructionId::NonIdenticalNoPred => {
            let n = two_agents(spec)?;
            a_in_unit(&a)?;
            let eps = &a / int(4);
            let four_over_a = (int(4) / &a).floor().to_integer();
            let horizon = usize::try_from(four_over_a).expect("a > 0") + 2;
            resolved.insert("eps".into(), eps.clone());
            (n, horizon, false, None, Plan::NonIdNoPred { eps })
        }
        ConstructionId::PredictionOnly => {
            let n = spec.n.unwrap_or(2);
            domain(n >= 2, || format!("construction needs n >= 2, got {n}"))?;
            domain(!a.is_negative() && a <= one, || {
                format!("a = {} must lie in [0, 1]", format_rational(&a))
            })?;
            let m = 2 * n - 1;
            let unit = rat(1, m as i64);
            let bound = eval_bound(BoundId::FollowerNecessary, &a, &BoundParams::with_n(n))?;
            let d = spec.param("D")?.unwrap_or_else(|| midpoint(&bound, &unit));
            half_open("D", &d, &bound, &unit)?;
            let p = identical_profile(n, vec![unit.clone(); m])?;
            let (plan, _) = follower_plan(&p);
            let truth = prediction_only_truth(&plan, &unit, &d);
            resolved.insert("D".into(), d.clone());
            let truth = vec![truth; n];
            (n, m, true, Some(p), Plan::Fixed { truth, d })
        }
        ConstructionId::NonIdenticalPred => {
            let n = two_agents(spec)?;
            domain(a > half && a <= one, || {
                format!("a = {} must lie in (1/2, 1]", format_rational(&a))
            })?;
            let (lambda, eps) = if a <= rat(2, 3) {
                let hi = (int(2) * &a - int(1)) / (int(6) * &a);
                let lambda = spec.param("lambda")?.unwrap_or_else(|| midpoint(&Rational::zero(), &hi));
                domain(!lambda.is_negative() && lambda < hi, || {
                    format!(
                        "lambda = {} must lie in [0, {})",
                        format_rational(&lambda),
                        format_rational(&hi)
                    )
                })?;
                let eps = rat(1, 6) - &lambda;
                (lambda, eps)
            } else {
                let lo = (&one - &a) / int(4);
                let hi = &a / int(8);
                let lambda = spec.param("lambda")?.unwrap_or_else(|| midpoint(&lo, &hi));
                open_interval("lambda", &lambda, &lo, &hi)?;
                (lambda.clone(), lambda)
            };
            let p1 = vec![
                int(2) * &eps,
                int(2) * &lambda,
                &half - int(2) * &eps - &lambda,
                &half - &lambda,
            ];
            let p2 = vec![p1[1].clone(), p1[0].clone(), p1[2].clone(), p1[3].clone()];
            nonneg("1/2 - 3 eps - lambda", &(&half - int(3) * &eps - &lambda))?;
            let p = ValuationProfile::from_rows(vec![p1, p2], false)?;
            resolved.insert("lambda".into(), lambda.clone());
            resolved.insert("eps".into(), eps.clone());
            (n, 4, false, Some(p), Plan::NonIdPred { eps, lambda })
        }
        ConstructionId::IdenticalPred => {
            let n = two_agents(spec)?;
            a_above_golden(&a)?;
            let (lambda, eps) = if !above_sqrt3_minus_1(&a) {
                let bound = (&one - &a) / (int(2) * &a * (int(2) + &a));
                let d = spec.param("D")?.unwrap_or_else(|| &bound * rat(5, 4));
                domain(d > bound, || {
                    format!(
                        "D = {} must exceed (1-a)/(2a(2+a)) = {}",
                        format_rational(&d),
                        format_rational(&bound)
                    )
                })?;
                let r_hi = &d - &bound;
                let r = spec.param("r")?.unwrap_or_else(|| midpoint(&Rational::zero(), &r_hi));
                half_open("r", &r, &Rational::zero(), &r_hi)?;
                let cap = (&a * &a + &a - int(1)) / (int(2) * &a * (int(2) + &a));
                let lambda = std::cmp::max(&cap - &r, Rational::zero());
                let lo = &bound + &r * (&one - &a) / (&one + &a);
                let hi = &bound + &r;
                let eps = spec.param("eps")?.unwrap_or_else(|| midpoint(&lo, &hi));
                open_interval("eps", &eps, &lo, &hi)?;
                resolved.insert("D".into(), d);
                resolved.insert("r".into(), r);
                (lambda, eps)
            } else {
                let lo = (&one - &a) / int(4);
                let cap = &a / (int(4) * (int(2) + &a));
                let hi = match spec.param("D")? {
                    Some(d) => {
                        resolved.insert("D".into(), d.clone());
                        std::cmp::min(cap, d)
                    }
                    None => cap,
                };
                let eps = spec.param("eps")?.unwrap_or_else(|| midpoint(&lo, &hi));
                open_interval("eps", &eps, &lo, &hi)?;
                (eps.clone(), eps)
            };
            domain(lambda <= eps, || "lambda <= eps".to_string())?;
            domain(int(5) * &eps + &lambda <= half, || {
                format!(
                    "2 eps <= 1/2 - 3 eps - lambda fails for eps = {}, lambda = {}",
                    format_rational(&eps),
                    format_rational(&lambda)
                )
            })?;
            let p = vec![
                int(2) * &lambda,
                int(2) * &eps,
                &half - int(2) * &eps - &lambda,
                &half - &lambda,
            ];
            let p = identical_profile(n, p)?;
            resolved.insert("lambda".into(), lambda.clone());
            resolved.insert("eps".into(), eps.clone());
            (n, 4, true, Some(p), Plan::IdPred { eps, lambda })
        }
        ConstructionId::ManyPred => {
            let n = many_agents(spec)?;
            a_in_unit(&a)?;
            let params = BoundParams::with_n(n);
            let small = eval_bound(BoundId::IdNLbSmall, &a, &params)?;
            let large = eval_bound(BoundId::IdNLbLarge, &a, &params)?;
            let nn = int(n as i64);
            let m = 2 * n - 1;
            if small <= large {
                let hi = &a / (&nn - int(1) + int(2) * &a);
                let eps = spec.param("eps")?.unwrap_or_else(|| midpoint(&Rational::zero(), &hi));
                open_interval("eps", &eps, &Rational::zero(), &hi)?;
                let rest = &half - &eps;
                let mid = int(2 * n as i64 - 3) / (int((n as i64 - 1) * (n as i64 - 2))) * &rest;
                let mut p = vec![eps.clone(), eps.clone()];
                p.extend(std::iter::repeat_n(mid, n - 2));
                p.push(&rest / (&nn - int(1)));
                p.resize(m, Rational::zero());
                let p = identical_profile(n, p)?;
                resolved.insert("eps".into(), eps.clone());
                resolved.insert("lemma".into(), int(0));
                (n, m, true, Some(p), Plan::ManySmall { eps })
            } else {
                let (k, eps, p) = k_goods_setup(spec, &a, n, false, &mut resolved)?;
                resolved.insert("lemma".into(), int(1));
                let plan = Plan::KGoods {
                    k,
                    shift: int(2) * &eps,
                    claim: ErrorClaim::Exact(eps),
                };
                (n, m, true, Some(p), plan)
            }
        }
        ConstructionId::TwoValuePair => {
            let n = two_agents(spec)?;
            domain(above_sqrt3_minus_1(&a) && a <= one, || {
                format!("a = {} must satisfy a^2 + 2a - 2 > 0 and a <= 1", format_rational(&a))
            })?;
            let lo = (&one - &a) / int(2);
            let hi = &a / (int(2) * (int(2) + &a));
            let eps = spec.param("eps")?.unwrap_or_else(|| midpoint(&lo, &hi));
            open_interval("eps", &eps, &lo, &hi)?;
            let p = identical_profile(n, vec![eps.clone(), eps.clone(), &half - &eps, &half - &eps])?;
            resolved.insert("eps".into(), eps.clone());
            (n, 4, true, Some(p), Plan::TwoValuePair { eps })
        }
        ConstructionId::TwoValueMany => {
            let n = many_agents(spec)?;
            a_in_unit(&a)?;
            let (k, eps, p) = k_goods_setup(spec, &a, n, true, &mut resolved)?;
            let plan = Plan::KGoods {
                k,
                shift: eps.clone(),
                claim: ErrorClaim::AtMost(eps),
            };
            (n, 2 * n - 1, true, Some(p), plan)
        }
    };

    Ok(Adversary {
        spec: spec.clone(),
        n,
        horizon,
        identical,
        predictions,
        resolved,
        plan,
    })
}

/// Shared setup of the `k`-goods constructions; `two_value` selects the 2-value variant.
fn k_goods_setup(
    spec: &AdversarySpec,
    a: &Rational,
    n: usize,
    two_value: bool,
    resolved: &mut BTreeMap<String, Rational>,
) -> Result<(Rational, Rational, ValuationProfile)> {
    let one = Rational::one();
    let denom = int(4) + int(2 * n as i64 - 3) * a;
    let spread = int(2 * n as i64 - 3);
    let k_hi = a / &denom;
    // below this k no admissible eps pushes the two-empty-agents branch under a
    let k_lo = &k_hi * &spread / (&spread + int(4) * a);
    let k = spec.param("k")?.unwrap_or_else(|| midpoint(&k_lo, &k_hi));
    open_interval("k", &k, &Rational::zero(), &k_hi)?;
    let scale = if two_value { int(2) } else { one.clone() };
    let lo = &scale * (&one - a * a) / &denom;
    let hi = &scale / &denom;
    let h = (&one - &spread * &k) / int(2);
    let forced = &scale * (&h - int(2) * a * &k) / int(2);
    let floor = std::cmp::max(lo.clone(), forced.clone());
    let eps = spec.param("eps")?.unwrap_or_else(|| midpoint(&floor, &hi));
    half_open("eps", &eps, &lo, &hi)?;
    domain(eps > forced, || {
        format!(
            "eps = {} must exceed {} so that a shifted last pair defeats the bundle of three k-goods",
            format_rational(&eps),
            format_rational(&forced)
        )
    })?;
    let shift = if two_value { eps.clone() } else { int(2) * &eps };
    nonneg("(1 - (2n-3)k)/2 - shift", &(&h - &shift))?;
    let mut p = vec![k.clone(); 2 * n - 3];
    if two_value {
        p.push(h.clone());
        p.push(h);
    } else {
        p.push(&h - &eps);
        p.push(&h + &eps);
    }
    resolved.insert("k".into(), k.clone());
    resolved.insert("eps".into(), eps.clone());
    Ok((k, eps, identical_profile(n, p)?))
}

/// Truth defeating a prediction-following plan on the uniform prediction: the
/// singleton good loses `d`, the lowest-id good of the lowest-indexed other bundle gains it.
fn prediction_only_truth(plan: &Allocation, unit: &Rational, d: &Rational) -> Vec<Rational> {
    let m = plan.horizon();
    let mut truth = vec![unit.clone(); m];
    let single = plan
        .bundles()
        .iter()
        .position(|b| b.len() == 1)
        .expect("exact EFX on the uniform prediction leaves one singleton");
    let other = plan
        .bundles()
        .iter()
        .enumerate()
        .find(|(i, b)| *i != single && !b.is_empty())
        .map(|(_, b)| b[0])
        .expect("another bundle exists");
    truth[plan.bundle(single)[0]] -= d;
    truth[other] += d;
    truth
}

enum Step {
    Good(Vec<Rational>),
    Stop,
}

/// Emits `tail[j]` for the `j`-th good after `start`, then stops.
fn tail_step(len: usize, start: usize, tail: Vec<Vec<Rational>>) -> Step {
    match tail.into_iter().nth(len - start) {
        Some(g) => Step::Good(g),
        None => Step::Stop,
    }
}

impl Adversary {
    pub fn spec(&self) -> &AdversarySpec {
        &self.spec
    }

    pub fn id(&self) -> ConstructionId {
        self.spec.id
    }

    pub fn a(&self) -> &Rational {
        &self.spec.a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The promised number of goods, zero-valued padding included.
    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn is_identical(&self) -> bool {
        self.identical
    }

    pub fn predictions(&self) -> Option<&ValuationProfile> {
        self.predictions.as_ref()
    }

    /// Resolved free parameters (defaults filled in).
    pub fn parameters(&self) -> &BTreeMap<String, Rational> {
        &self.resolved
    }

    /// True for the construction that only defeats prediction-following algorithms.
    pub fn is_prediction_only(&self) -> bool {
        self.spec.id == ConstructionId::PredictionOnly
    }

    fn same(&self, v: Rational) -> Vec<Rational> {
        vec![v; self.n]
    }

    /// Next move given the allocator's decisions so far.
    pub fn reveal(&self, decisions: &[usize]) -> Reveal {
        let len = decisions.len();
        if len >= self.horizon {
            return Reveal::Done;
        }
        match self.step(decisions) {
            Step::Good(g) => Reveal::Good(g),
            Step::Stop => Reveal::Padding(self.horizon - len),
        }
    }

    fn step(&self, d: &[usize]) -> Step {
        let len = d.len();
        let one = Rational::one();
        let half = rat(1, 2);
        match &self.plan {
            Plan::Golden { eps } => {
                if len == 0 {
                    return Step::Good(self.same(eps.clone()));
                }
                let p = d[0];
                let mut x = eps.clone();
                for (i, &di) in d.iter().enumerate().take(len).skip(1) {
                    if di != p {
                        let tail = vec![self.same(&one - &x - eps)];
                        return tail_step(len, i + 1, tail);
                    }
                    x += eps;
                    if cmp_two_phi_minus_3(&x) == std::cmp::Ordering::Greater {
                        let g = (&one - &x) / int(2);
                        let tail = vec![self.same(g.clone()), self.same(g)];
                        return tail_step(len, i + 1, tail);
                    }
                }
                Step::Good(self.same(eps.clone()))
            }
            Plan::ManyNoPred { eps } => {
                if len < 2 {
                    return Step::Good(self.same(eps.clone()));
                }
                let rest = &one - int(2) * eps;
                let tail = if d[0] == d[1] {
                    vec![self.same(rest)]
                } else {
                    let g = rest / int(self.n as i64 - 1);
                    vec![self.same(g); self.n - 1]
                };
                tail_step(len, 2, tail)
            }
            Plan::NonIdNoPred { eps } => {
                let zero = Rational::zero();
                if len == 0 {
                    return Step::Good(vec![eps.clone(), zero]);
                }
                let first_to_second = d[0] == 1;
                for (i, &di) in d.iter().enumerate().take(len).skip(1) {
                    let t = int(i as i64 + 1);
                    if first_to_second {
                        if di == 0 || &t * eps > &one - eps {
                            let tail = vec![vec![&one - &t * eps, one.clone()]];
                            return tail_step(len, i + 1, tail);
                        }
                    } else if di == 1 || (&t - int(1)) * eps > &one - eps {
                        let tail = vec![vec![&one - eps, &one - (&t - int(1)) * eps]];
                        return tail_step(len, i + 1, tail);
                    }
                }
                if first_to_second {
                    Step::Good(vec![eps.clone(), zero])
                } else {
                    Step::Good(vec![zero, eps.clone()])
                }
            }
            Plan::Fixed { truth, .. } => Step::Good(truth.iter().map(|row| row[len].clone()).collect()),
            Plan::NonIdPred { eps, lambda } => {
                let two = int(2);
                match len {
                    0 => Step::Good(vec![&two * eps, &two * lambda]),
                    1 => Step::Good(vec![&two * lambda, &two * eps]),
                    _ => {
                        let low = &half - int(3) * eps - lambda;
                        let high = &half + eps - lambda;
                        let flat = &half - eps - lambda;
                        let tail = match (d[0], d[1]) {
                            (0, 0) => vec![vec![low, flat.clone()], vec![high, flat]],
                            (1, 1) => vec![vec![flat.clone(), low], vec![flat, high]],
                            _ => vec![vec![low.clone(), low], vec![high.clone(), high]],
                        };
                        tail_step(len, 2, tail)
                    }
                }
            }
            Plan::IdPred { eps, lambda } => match len {
                0 => Step::Good(self.same(int(2) * lambda)),
                1 => Step::Good(self.same(int(2) * eps)),
                _ => {
                    let tail = if d[0] == d[1] {
                        let g = &half - eps - lambda;
                        vec![self.same(g.clone()), self.same(g)]
                    } else {
                        vec![
                            self.same(&half - int(3) * eps - lambda),
                            self.same(&half + eps - lambda),
                        ]
                    };
                    tail_step(len, 2, tail)
                }
            },
            Plan::ManySmall { eps } => {
                if len < 2 {
                    return Step::Good(self.same(eps.clone()));
                }
                let rest = &one - int(2) * eps;
                let tail = if d[0] == d[1] {
                    let g = rest / int(self.n as i64 - 2);
                    vec![self.same(g); self.n - 2]
                } else {
                    let g = rest / int(self.n as i64 - 1);
                    vec![self.same(g); self.n - 1]
                };
                tail_step(len, 2, tail)
            }
            Plan::KGoods { k, shift, .. } => {
                let kn = 2 * self.n - 3;
                if len < kn {
                    return Step::Good(self.same(k.clone()));
                }
                let h = (&one - int(kn as i64) * k) / int(2);
                let mut holds = vec![false; self.n];
                for &i in &d[..kn] {
                    holds[i] = true;
                }
                let empty = holds.iter().filter(|&&b| !b).count();
                let tail = if empty == 1 {
                    vec![self.same(h.clone()), self.same(h)]
                } else {
                    vec![self.same(&h - shift), self.same(&h + shift)]
                };
                tail_step(len, kn, tail)
            }
            Plan::TwoValuePair { eps } => {
                if len < 2 {
                    return Step::Good(self.same(eps.clone()));
                }
                let tail = if d[0] == d[1] {
                    let g = &half - eps;
                    vec![self.same(g.clone()), self.same(g)]
                } else {
                    vec![self.same(&half - int(2) * eps), self.same(half)]
                };
                tail_step(len, 2, tail)
            }
        }
    }

    /// The error the construction promises on the path fixed by `decisions`.
    pub fn claimed_error(&self, _decisions: &[usize]) -> ErrorClaim {
        let param = |name: &str| self.resolved[name].clone();
        match &self.plan {
            Plan::Golden { .. } | Plan::ManyNoPred { .. } | Plan::NonIdNoPred { .. } => {
                ErrorClaim::NoPrediction
            }
            Plan::Fixed { d, .. } => ErrorClaim::Exact(d.clone()),
            Plan::NonIdPred { eps, .. } | Plan::IdPred { eps, .. } => ErrorClaim::Exact(eps.clone()),
            Plan::ManySmall { eps } => {
                ErrorClaim::Exact((rat(1, 2) - eps) / int(self.n as i64 - 1))
            }
            Plan::KGoods { claim, .. } => claim.clone(),
            Plan::TwoValuePair { .. } => ErrorClaim::AtMost(param("eps")),
        }
    }

    /// Truth the prediction-only construction reveals against a given exact-EFX plan.
    pub fn truth_against(&self, plan: &Allocation) -> Option<Vec<Rational>> {
        match &self.plan {
            Plan::Fixed { d, .. } => {
                let unit = rat(1, self.horizon as i64);
                Some(prediction_only_truth(plan, &unit, d))
            }
            _ => None,
        }
    }

    /// Walks one decision path to completion, returning per-agent revealed rows.
    pub fn play(&self, mut choose: impl FnMut(usize, &[Rational]) -> usize) -> Result<(Vec<usize>, Vec<Vec<Rational>>)> {
        let mut decisions = Vec::new();
        let mut rows = vec![Vec::new(); self.n];
        loop {
            match self.reveal(&decisions) {
                Reveal::Done => break,
                Reveal::Good(values) => {
                    let i = choose(decisions.len(), &values);
                    if i >= self.n {
                        return Err(Error::AdversaryExhausted(format!("agent {i} out of range")));
                    }
                    for (row, v) in rows.iter_mut().zip(values) {
                        row.push(v);
                    }
                    decisions.push(i);
                }
                Reveal::Padding(k) => {
                    for _ in 0..k {
                        let zeros = vec![Rational::zero(); self.n];
                        let i = choose(decisions.len(), &zeros);
                        for row in rows.iter_mut() {
                            row.push(Rational::zero());
                        }
                        decisions.push(i);
                    }
                }
            }
        }
        Ok((decisions, rows))
    }
}

/// Per-agent TV distance between the adversary's predictions and revealed rows.
pub fn realized_error(adv: &Adversary, rows: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let p = adv.predictions()?;
    Some(
        p.vectors()
            .iter()
            .zip(rows)
            .map(|(pi, vi)| crate::tv::tv_raw(pi.values(), vi))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::sum;

    fn paths(adv: &Adversary, seed: u64) -> (Vec<usize>, Vec<Vec<Rational>>) {
        let mut state = seed;
        adv.play(|_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as usize) % adv.n()
        })
        .unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for c in ConstructionId::ALL {
            assert_eq!(c.name().parse::<ConstructionId>().unwrap(), c);
            assert_eq!(c.number().to_string().parse::<ConstructionId>().unwrap(), c);
        }
    }

    #[test]
    fn random_paths_normalize() {
        let specs = vec![
            AdversarySpec::new(ConstructionId::GoldenNoPred, rat(7, 10)),
            AdversarySpec::new(ConstructionId::ManyNoPred, rat(1, 2)).with_n(4),
            AdversarySpec::new(ConstructionId::NonIdenticalNoPred, rat(1, 2)),
            AdversarySpec::new(ConstructionId::PredictionOnly, rat(3, 4)).with_n(3),
            AdversarySpec::new(ConstructionId::NonIdenticalPred, rat(4, 5)),
            AdversarySpec::new(ConstructionId::NonIdenticalPred, rat(3, 5)),
            AdversarySpec::new(ConstructionId::IdenticalPred, rat(7, 10)),
            AdversarySpec::new(ConstructionId::IdenticalPred, rat(4, 5)),
            AdversarySpec::new(ConstructionId::ManyPred, rat(1, 2)),
            AdversarySpec::new(ConstructionId::ManyPred, rat(1, 20)),
            AdversarySpec::new(ConstructionId::TwoValuePair, rat(4, 5)),
            AdversarySpec::new(ConstructionId::TwoValueMany, rat(1, 2)).with_n(4),
        ];
        for spec in specs {
            let adv = build_adversary(&spec).unwrap();
            for seed in 0..50 {
                let (d, rows) = paths(&adv, seed);
                assert_eq!(d.len(), adv.horizon(), "{:?}", spec);
                for row in &rows {
                    assert_eq!(sum(row), Rational::one(), "{:?}", spec);
                    assert!(row.iter().all(|v| !v.is_negative()));
                }
            }
        }
    }

    #[test]
    fn prediction_only_two_agents() {
        let adv = build_adversary(
            &AdversarySpec::new(ConstructionId::PredictionOnly, rat(3, 5))
                .with_param("D", &rat(1, 10)),
        )
        .unwrap();
        let (_, rows) = adv.play(|_, _| 0).unwrap();
        assert_eq!(rows[0], vec![rat(13, 30), rat(7, 30), rat(1, 3)]);
    }

    #[test]
    fn domain_errors_name_constraint() {
        let err = build_adversary(&AdversarySpec::new(ConstructionId::GoldenNoPred, rat(3, 5)))
            .unwrap_err();
        assert!(err.to_string().contains("a^2 + a - 1"));
        let err = build_adversary(
            &AdversarySpec::new(ConstructionId::TwoValuePair, rat(4, 5)).with_param("eps", &rat(1, 20)),
        )
        .unwrap_err();
        assert!(err.to_string().contains("eps"));
    }
}
