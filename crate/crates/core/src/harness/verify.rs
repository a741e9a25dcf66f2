//! Named claim-verification suites. Failures are data: each report carries
//! the number of failing cases and the first counterexample as JSON.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::adversaries::{build_adversary, realized_error, AdversarySpec, ConstructionId};
use crate::bounds::{eval_bound, eval_or_plateau, grid, invert_bound, main_d_max, sweep_curves, BoundId, BoundParams};
use crate::error::{Error, Result};
use crate::fairness::{ef1_factor_rows, efx_factor_rows};
use crate::golden::golden_approx;
use crate::offline::{brute_force_best_factor, lpt, minimax_online_factor};
use crate::online::FormTag;
use crate::rational::{format_rational, int, rat, to_decimal, to_decimal_floor, Rational};
use crate::valuation::{Allocation, Instance, ValuationProfile, ValuationVector};

use super::gen::{gen_form_prediction, gen_random_instance};
use super::perturb::{perturb, PerturbMode};
use super::run::{run_duel, run_instance, AllocatorChoice};
use super::transcript::GameTranscript;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    LptExactness,
    GreedyGuarantee,
    Ef1Baseline,
    FollowerGuarantee,
    MainGuarantee,
    ThreeGoods,
    ExampleNumbers,
    AdversaryDefeats,
    ErrorConsistency,
    FigureCurves,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Self::LptExactness,
        Self::GreedyGuarantee,
        Self::Ef1Baseline,
        Self::FollowerGuarantee,
        Self::MainGuarantee,
        Self::ThreeGoods,
        Self::ExampleNumbers,
        Self::AdversaryDefeats,
        Self::ErrorConsistency,
        Self::FigureCurves,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::LptExactness => "lpt-exactness",
            Self::GreedyGuarantee => "greedy-guarantee",
            Self::Ef1Baseline => "ef1-baseline",
            Self::FollowerGuarantee => "follower-guarantee",
            Self::MainGuarantee => "main-guarantee",
            Self::ThreeGoods => "three-goods",
            Self::ExampleNumbers => "example-numbers",
            Self::AdversaryDefeats => "adversary-defeats",
            Self::ErrorConsistency => "error-consistency",
            Self::FigureCurves => "figure-curves",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    /// Cases skipped because an input could not be generated.
    pub skipped: usize,
    pub detail: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Value>,
}

const MAX_LISTED_FAILURES: usize = 8;

struct Tally {
    suite: Suite,
    cases: usize,
    failures: usize,
    skipped: usize,
    detail: Vec<String>,
    counterexample: Option<Value>,
}

impl Tally {
    fn new(suite: Suite) -> Self {
        Self { suite, cases: 0, failures: 0, skipped: 0, detail: Vec::new(), counterexample: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> (String, Value)) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.failures <= MAX_LISTED_FAILURES {
                let (msg, cx) = what();
                self.detail.push(format!("failure: {msg}"));
                self.counterexample.get_or_insert(cx);
            }
        }
    }

    fn note(&mut self, line: String) {
        self.detail.push(line);
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            passed: self.failures == 0 && self.cases > 0,
            cases: self.cases,
            failures: self.failures,
            skipped: self.skipped,
            detail: self.detail,
            counterexample: self.counterexample,
        }
    }
}

fn rng_for(suite: Suite) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xEF5 ^ ((suite as u64) << 32))
}

fn transcript_json(tr: &GameTranscript) -> Value {
    serde_json::to_value(tr).unwrap_or(Value::Null)
}

fn instance_json(instance: &Instance) -> Value {
    serde_json::to_value(instance.to_file()).unwrap_or(Value::Null)
}

fn fail_json(e: &Error) -> (String, Value) {
    (e.to_string(), json!({ "error": e.to_string() }))
}

pub fn verify_claims(suite: Suite) -> SuiteReport {
    match suite {
        Suite::LptExactness => lpt_exactness(),
        Suite::GreedyGuarantee => greedy_guarantee(),
        Suite::Ef1Baseline => ef1_baseline(),
        Suite::FollowerGuarantee => follower_guarantee(),
        Suite::MainGuarantee => main_guarantee(),
        Suite::ThreeGoods => three_goods(),
        Suite::ExampleNumbers => example_numbers(),
        Suite::AdversaryDefeats => adversary_defeats(),
        Suite::ErrorConsistency => error_consistency(),
        Suite::FigureCurves => figure_curves(),
    }
}

pub fn verify_all() -> Vec<SuiteReport> {
    Suite::ALL.into_iter().map(verify_claims).collect()
}

fn lpt_exactness() -> SuiteReport {
    let mut tally = Tally::new(Suite::LptExactness);
    let mut rng = rng_for(Suite::LptExactness);
    let mut brute_checked = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=5);
        let t = rng.gen_range(1..=12);
        let seed = rng.gen();
        let p = gen_random_instance(n, t, true, seed).expect("valid shape");
        let alloc = lpt(p.agent(0), n);
        let factor = efx_factor_rows(alloc.bundles(), &p.rows());
        let ctx = || {
            (
                format!("n = {n}, T = {t}, seed = {seed}: factor {}", format_rational(&factor)),
                json!({ "n": n, "T": t, "seed": seed, "allocation": alloc }),
            )
        };
        tally.check(factor.is_one(), ctx);
        if t <= 8 {
            brute_checked += 1;
            let best = brute_force_best_factor(&p).map(|(f, _)| f);
            tally.check(matches!(&best, Ok(f) if f.is_one()), || {
                (format!("brute force disagrees on n = {n}, T = {t}, seed = {seed}"), json!({ "seed": seed }))
            });
        }
    }
    tally.note(format!("{brute_checked} instances cross-checked by brute force"));
    tally.finish()
}

fn self_instance(p: ValuationProfile) -> Instance {
    Instance::with_realized_accuracy(p.clone(), p).expect("same profile")
}

fn greedy_guarantee() -> SuiteReport {
    let mut tally = Tally::new(Suite::GreedyGuarantee);
    let mut rng = rng_for(Suite::GreedyGuarantee);
    let choice = AllocatorChoice::new("greedy-phi");
    for _ in 0..1000 {
        let t = rng.gen_range(1..=12);
        let p = gen_random_instance(2, t, true, rng.gen()).expect("valid shape");
        match run_instance(&choice, &self_instance(p)) {
            Ok(tr) => {
                let f = tr.efx_factor();
                let lhs = (int(2) * f + int(1)) * (int(2) * f + int(1));
                tally.check(lhs >= int(5), || {
                    (format!("factor {} below phi - 1", format_rational(f)), transcript_json(&tr))
                });
            }
            Err(e) => tally.check(false, || fail_json(&e)),
        }
    }
    tally.finish()
}

fn ef1_baseline() -> SuiteReport {
    let mut tally = Tally::new(Suite::Ef1Baseline);
    let mut rng = rng_for(Suite::Ef1Baseline);
    let choice = AllocatorChoice::new("ef1-lowest");
    for _ in 0..500 {
        let n = rng.gen_range(2..=5);
        let t = rng.gen_range(1..=12);
        let p = gen_random_instance(n, t, true, rng.gen()).expect("valid shape");
        match run_instance(&choice, &self_instance(p)) {
            Ok(tr) => {
                let rows = tr.rows();
                let decisions = tr.decisions();
                let bad = (1..=decisions.len()).find(|&k| {
                    let prefix = Allocation::from_assignment(&decisions[..k], n).expect("agents in range");
                    !ef1_factor_rows(prefix.bundles(), &rows).is_one()
                });
                tally.check(bad.is_none(), || {
                    (format!("prefix of length {} is not EF1", bad.unwrap_or(0)), transcript_json(&tr))
                });
            }
            Err(e) => tally.check(false, || fail_json(&e)),
        }
    }
    tally.finish()
}

/// Truths at distance exactly `d`, trying `modes` in order.
fn truths_at(p: &ValuationProfile, d: &Rational, modes: &[PerturbMode], seed: u64) -> Option<ValuationProfile> {
    let ds = vec![d.clone(); p.n()];
    modes.iter().find_map(|&m| perturb(p, &ds, m, seed).ok())
}


fn follower_guarantee() -> SuiteReport {
    let mut tally = Tally::new(Suite::FollowerGuarantee);
    let mut rng = rng_for(Suite::FollowerGuarantee);
    let choice = AllocatorChoice::new("follower:lpt");
    let mut misses = [0usize; 2];
    while tally.cases < 500 {
        let n = *[2usize, 3, 4].choose(&mut rng).expect("nonempty");
        let t = rng.gen_range(1..=10);
        let p = gen_random_instance(n, t, true, rng.gen()).expect("valid shape");
        let d = rat(rng.gen_range(0..=10), 100);
        let mode = *PerturbMode::ALL.choose(&mut rng).expect("nonempty");
        let Some(v) = truths_at(&p, &d, &[mode, PerturbMode::Shift, PerturbMode::Append], rng.gen()) else {
            tally.skipped += 1;
            continue;
        };
        let instance = Instance::with_realized_accuracy(p, v).expect("normalized");
        let m = int(2 * n as i64 - 1);
        let bound = (Rational::one() - &m * &d) / (Rational::one() + &m * &d);
        let longer = instance.truths.horizon() > instance.predictions.horizon();
        match run_instance(&choice, &instance) {
            Ok(tr) => {
                let ok = tr.efx_factor() >= &bound;
                if !ok {
                    misses[usize::from(longer)] += 1;
                }
                tally.check(ok, || {
                (
                    format!(
                        "n = {n}, T' = {}, T = {}, d = {}: factor {} below {}",
                        instance.predictions.horizon(),
                        instance.truths.horizon(),
                        format_rational(&d),
                        format_rational(tr.efx_factor()),
                        format_rational(&bound)
                    ),
                    json!({ "instance": instance_json(&instance), "transcript": transcript_json(&tr) }),
                )
                });
            }
            Err(e) => tally.check(false, || fail_json(&e)),
        }
    }
    tally.note(format!("misses with T <= T': {}, with T > T': {}", misses[0], misses[1]));
    tally.finish()
}

/// Target factors exercised by the main-allocator suite.
pub const MAIN_TARGETS: [(i64, i64); 7] = [(5, 8), (2, 3), (7, 10), (3, 4), (4, 5), (7, 8), (19, 20)];

const TARGETED_FORMS: [FormTag; 5] = [
    FormTag::Form1,
    FormTag::Form2or4,
    FormTag::Form3EarlyY,
    FormTag::Form3LateY,
    FormTag::SingletonA2,
];

fn main_guarantee() -> SuiteReport {
    let mut tally = Tally::new(Suite::MainGuarantee);
    let mut rng = rng_for(Suite::MainGuarantee);
    let mut targeted = 0;
    for (num, den) in MAIN_TARGETS {
        let a = rat(num, den);
        let choice = AllocatorChoice::new("main").with_a(a.clone());
        let d_max = main_d_max(&a);
        for case in 0..200 {
            let seed: u64 = rng.gen();
            let p = if case % 2 == 0 {
                let tag = TARGETED_FORMS[(case / 2) % TARGETED_FORMS.len()];
                gen_form_prediction(tag, &a, seed).ok().map(|v| {
                    targeted += 1;
                    ValuationProfile::identical(2, v).expect("two agents")
                })
            } else {
                None
            };
            let p = match p {
                Some(p) => p,
                None => gen_random_instance(2, rng.gen_range(1..=10), true, seed).expect("valid shape"),
            };
            let d = &d_max * rat(rng.gen_range(0..=4), 4);
            let mode = PerturbMode::ALL[case % PerturbMode::ALL.len()];
            let Some(v) = truths_at(&p, &d, &[mode, PerturbMode::Shift, PerturbMode::Append], rng.gen()) else {
                tally.skipped += 1;
                continue;
            };
            let instance = Instance::with_realized_accuracy(p, v).expect("normalized");
            match run_instance(&choice, &instance) {
                Ok(tr) => tally.check(tr.efx_factor() >= &a, || {
                    (
                        format!(
                            "a = {}: factor {}",
                            format_rational(&a),
                            format_rational(tr.efx_factor())
                        ),
                        json!({ "instance": instance_json(&instance), "transcript": transcript_json(&tr) }),
                    )
                }),
                Err(e) => tally.check(false, || {
                    (
                        e.to_string(),
                        json!({ "error": e.to_string(), "a": format_rational(&a), "instance": instance_json(&instance) }),
                    )
                }),
            }
        }
    }
    tally.note(format!("{targeted} predictions generated with a targeted form"));
    tally.finish()
}

fn scaled_row(total: &Rational, k: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let w: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=10)).collect();
    let s: i64 = w.iter().sum();
    w.into_iter().map(|x| total * rat(x, s)).collect()
}

fn three_goods() -> SuiteReport {
    let mut tally = Tally::new(Suite::ThreeGoods);
    let mut rng = rng_for(Suite::ThreeGoods);
    let choice = AllocatorChoice::new("three-goods");
    for _ in 0..500 {
        let t = rng.gen_range(1..=3);
        let p = gen_random_instance(2, t, true, rng.gen()).expect("valid shape");
        let v = gen_random_instance(2, t, true, rng.gen()).expect("valid shape");
        let instance = Instance::with_realized_accuracy(p, v).expect("normalized");
        match run_instance(&choice, &instance) {
            Ok(tr) => tally.check(tr.efx_factor().is_one(), || {
                ("T = T' <= 3 but not exact EFX".into(), transcript_json(&tr))
            }),
            Err(e) => tally.check(false, || fail_json(&e)),
        }
    }
    let targets = [rat(1, 2), rat(5, 8), rat(3, 4), rat(9, 10)];
    for _ in 0..500 {
        let a = targets.choose(&mut rng).expect("nonempty").clone();
        let cap = (Rational::one() - &a) / (Rational::one() + &a);
        let trailing = &cap * rat(rng.gen_range(0..=4), 4);
        let mut values = scaled_row(&(Rational::one() - &trailing), 3, &mut rng);
        let k = rng.gen_range(1..=4);
        values.extend(scaled_row(&trailing, k, &mut rng));
        let v = ValuationProfile::identical(2, ValuationVector::new(values).expect("normalized")).expect("two agents");
        let p = gen_random_instance(2, 3, true, rng.gen()).expect("valid shape");
        let instance = Instance::with_realized_accuracy(p, v).expect("normalized");
        match run_instance(&choice, &instance) {
            Ok(tr) => tally.check(tr.efx_factor() >= &a, || {
                (
                    format!("trailing mass {}: factor {} below {}", format_rational(&trailing), format_rational(tr.efx_factor()), format_rational(&a)),
                    transcript_json(&tr),
                )
            }),
            Err(e) => tally.check(false, || fail_json(&e)),
        }
    }
    tally.finish()
}

/// `φ − 9/10` to 64 bits.
pub fn example_target() -> Rational {
    golden_approx(64) + rat(1, 10)
}

fn example_numbers() -> SuiteReport {
    let mut tally = Tally::new(Suite::ExampleNumbers);
    let params = BoundParams::default();
    let a = example_target();
    let mut expect = |label: &str, got: Result<String>, want: &str| {
        let got = got.unwrap_or_else(|e| e.to_string());
        tally.note(format!("{label}: {got}"));
        tally.check(got == want, || (format!("{label}: got {got}, want {want}"), json!({ "label": label, "got": got })));
    };
    let one = Rational::one();
    expect(
        "follower accuracy at a = phi - 0.9",
        eval_bound(BoundId::FollowerSufficient, &a, &params).map(|d| to_decimal(&(&one - d), 3)),
        "0.945",
    );
    expect(
        "main accuracy at a = phi - 0.9",
        eval_bound(BoundId::MainSufficient, &a, &params).map(|d| to_decimal(&(&one - d), 3)),
        "0.941",
    );
    expect(
        "follower factor recovered from its accuracy",
        eval_bound(BoundId::FollowerSufficient, &a, &params)
            .and_then(|d| invert_bound(BoundId::FollowerSufficient, &d, &params))
            .map(|a| to_decimal_floor(&a, 3)),
        "0.718",
    );
    let d = rat(55, 1000);
    expect(
        "main factor at accuracy 0.945",
        invert_bound(BoundId::MainSufficient, &d, &params).map(|a| to_decimal_floor(&a, 3)),
        "0.734",
    );
    tally.finish()
}

/// The nine duel configurations, one per construction.
pub fn canonical_duels() -> Vec<AdversarySpec> {
    use ConstructionId::*;
    vec![
        AdversarySpec::new(GoldenNoPred, rat(7, 10)),
        AdversarySpec::new(ManyNoPred, rat(1, 2)).with_n(3),
        AdversarySpec::new(NonIdenticalNoPred, rat(1, 2)),
        AdversarySpec::new(PredictionOnly, rat(1, 2)),
        AdversarySpec::new(NonIdenticalPred, rat(4, 5)),
        AdversarySpec::new(IdenticalPred, rat(7, 10)),
        AdversarySpec::new(ManyPred, rat(1, 2)).with_n(3),
        AdversarySpec::new(TwoValuePair, rat(4, 5)).with_param("eps", &rat(11, 100)),
        AdversarySpec::new(TwoValueMany, rat(1, 2)).with_n(3),
    ]
}

/// Small-horizon parameterizations certified against every online algorithm.
pub fn minimax_specs() -> Vec<AdversarySpec> {
    use ConstructionId::*;
    vec![
        AdversarySpec::new(GoldenNoPred, Rational::one()).with_param("lambda", &rat(7, 20)),
        AdversarySpec::new(PredictionOnly, rat(1, 2)),
        AdversarySpec::new(NonIdenticalPred, rat(4, 5)),
        AdversarySpec::new(IdenticalPred, rat(7, 10)),
        AdversarySpec::new(IdenticalPred, rat(4, 5)),
        AdversarySpec::new(TwoValuePair, rat(4, 5)).with_param("eps", &rat(11, 100)),
    ]
}

fn adversary_defeats() -> SuiteReport {
    let mut tally = Tally::new(Suite::AdversaryDefeats);
    for spec in canonical_duels() {
        let label = format!("({}) {} a = {}", spec.id.number(), spec.id, format_rational(&spec.a));
        let target = AllocatorChoice::new(spec.id.natural_target());
        match build_adversary(&spec).and_then(|adv| run_duel(&target, &adv)) {
            Ok(tr) => {
                tally.note(format!("{label} vs {}: factor {}", target.name, format_rational(tr.efx_factor())));
                tally.check(tr.efx_factor() < &spec.a, || {
                    (format!("{label} not defeated"), transcript_json(&tr))
                });
            }
            Err(e) => tally.check(false, || fail_json(&e)),
        }
    }
    for spec in minimax_specs() {
        let label = format!("({}) {} a = {}", spec.id.number(), spec.id, format_rational(&spec.a));
        match build_adversary(&spec).and_then(|adv| minimax_online_factor(&adv).map(|r| (adv, r))) {
            Ok((adv, r)) => {
                tally.note(format!(
                    "{label}: minimax {} over T = {} ({} nodes)",
                    format_rational(&r.factor),
                    adv.horizon(),
                    r.nodes
                ));
                tally.check(r.factor < spec.a, || {
                    (
                        format!("{label}: minimax factor {}", format_rational(&r.factor)),
                        json!({ "spec": spec, "witness": r.witness }),
                    )
                });
            }
            Err(e) => tally.check(false, || fail_json(&e)),
        }
    }
    tally.finish()
}

fn error_consistency() -> SuiteReport {
    let mut tally = Tally::new(Suite::ErrorConsistency);
    let mut rng = rng_for(Suite::ErrorConsistency);
    for spec in canonical_duels() {
        let adv = match build_adversary(&spec) {
            Ok(adv) => adv,
            Err(e) => {
                tally.check(false, || fail_json(&e));
                continue;
            }
        };
        let target = AllocatorChoice::new(spec.id.natural_target());
        match run_duel(&target, &adv) {
            Ok(tr) => tally.check(tr.error_consistent != Some(false), || {
                (format!("{}: realized error outside the claim", spec.id), transcript_json(&tr))
            }),
            Err(e) => tally.check(false, || fail_json(&e)),
        }
        for _ in 0..50 {
            let n = adv.n();
            let played = adv.play(|_, _| rng.gen_range(0..n));
            match played {
                Ok((decisions, rows)) => {
                    let claim = adv.claimed_error(&decisions);
                    let ok = rows.iter().all(|r| r.iter().sum::<Rational>().is_one() && r.iter().all(|v| v >= &Rational::zero()))
                        && realized_error(&adv, &rows).is_none_or(|errs| errs.iter().all(|e| claim.admits(e)));
                    tally.check(ok, || {
                        (
                            format!("{}: path {decisions:?} breaks its claim", spec.id),
                            json!({ "spec": spec, "decisions": decisions }),
                        )
                    });
                }
                Err(e) => tally.check(false, || fail_json(&e)),
            }
        }
    }
    tally.finish()
}

/// Frozen values `(a, follower, main, id-2-lb)` checked against the sweep.
fn curve_spot_values() -> Vec<[Rational; 4]> {
    vec![
        [rat(4, 5), rat(1, 27), rat(52, 1323), rat(1, 20)],
        [rat(71, 100), rat(29, 513), rat(1219711, 19880289), rat(1450, 19241)],
        [rat(17, 25), rat(4, 63), rat(2636, 37989), rat(100, 1139)],
        [Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()],
    ]
}

fn figure_curves() -> SuiteReport {
    let mut tally = Tally::new(Suite::FigureCurves);
    let params = BoundParams::default();
    let ids = [BoundId::FollowerSufficient, BoundId::MainSufficient, BoundId::Id2Lb];
    let points = grid(&rat(62, 100), &Rational::one(), &rat(3, 100)).expect("valid grid");
    let table = match sweep_curves(&ids, &points, &params) {
        Ok(t) => t,
        Err(e) => {
            tally.check(false, || fail_json(&e));
            return tally.finish();
        }
    };
    tally.note(format!("{} grid points", table.rows.len()));
    for (a, vals) in &table.rows {
        tally.check(vals[0] <= vals[1] && vals[1] <= vals[2], || {
            (
                format!("ordering fails at a = {}", format_rational(a)),
                json!({ "a": format_rational(a), "values": vals.iter().map(format_rational).collect::<Vec<_>>() }),
            )
        });
    }
    for a in [rat(1, 2), rat(3, 5), rat(618, 1000)] {
        let v = eval_or_plateau(BoundId::Id2Lb, &a, &params);
        tally.check(matches!(&v, Ok(x) if x.is_one()), || {
            (format!("no plateau at a = {}", format_rational(&a)), json!({ "a": format_rational(&a) }))
        });
    }
    for spot in curve_spot_values() {
        let row = table.rows.iter().find(|(a, _)| a == &spot[0]);
        tally.check(row.is_some_and(|(_, vals)| vals[..] == spot[1..]), || {
            (format!("spot values differ at a = {}", format_rational(&spot[0])), json!({ "a": format_rational(&spot[0]) }))
        });
    }
    tally.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn example_numbers_pass() {
        let r = verify_claims(Suite::ExampleNumbers);
        assert!(r.passed, "{:?}", r.detail);
    }
}
