//! Hand-derived and independently computed values, frozen.

use efx_online::adversaries::{build_adversary, AdversarySpec, ConstructionId};
use efx_online::bounds::{eval_bound, invert_bound, main_d_max, BoundId, BoundParams};
use efx_online::harness::{run_duel, run_instance, AllocatorChoice};
use efx_online::offline::{brute_force_best_factor, lpt, minimax_online_factor};
use efx_online::rational::{parse_rational, rat, to_decimal_floor, Rational};
use efx_online::{ef1_factor, efx_factor, tv_distance, Allocation, Instance, ValuationProfile, ValuationVector};

fn vector(xs: &[&str]) -> ValuationVector {
    ValuationVector::new(xs.iter().map(|x| parse_rational(x).unwrap()).collect()).unwrap()
}

fn identical(n: usize, xs: &[&str]) -> ValuationProfile {
    ValuationProfile::identical(n, vector(xs)).unwrap()
}

#[test]
fn factors_of_a_small_allocation() {
    let p = identical(2, &["3/5", "3/10", "1/10"]);
    let a = Allocation::from_bundles(vec![vec![0, 1], vec![2]], 3).unwrap();
    // agent 1 holds 1/10 against xset {g0} = 3/5 and oset {g1} = 3/10
    assert_eq!(efx_factor(&a, &p).unwrap(), rat(1, 6));
    assert_eq!(ef1_factor(&a, &p).unwrap(), rat(1, 3));
}

#[test]
fn tv_pads_the_shorter_vector() {
    let p = vector(&["1/2", "1/2"]);
    let v = vector(&["1/3", "1/3", "1/3"]);
    assert_eq!(tv_distance(&p, &v).unwrap(), rat(1, 3));
}

#[test]
fn lpt_trace_four_agents() {
    let p = vector(&["3/23", "9/23", "3/23", "1/23", "7/23"]);
    assert_eq!(lpt(&p, 4).bundles(), &[vec![1], vec![4], vec![0, 3], vec![2]]);
}

#[test]
fn brute_force_finds_exact_efx() {
    let p = identical(3, &["1/2", "1/4", "1/8", "1/16", "1/16"]);
    let (factor, witness) = brute_force_best_factor(&p).unwrap();
    assert_eq!(factor, Rational::from_integer(1.into()));
    assert_eq!(efx_factor(&witness, &p).unwrap(), factor);
}

#[test]
fn follower_bound_counterexample() {
    let p = identical(4, &["3/23", "9/23", "3/23", "1/23", "7/23"]);
    let v = identical(4, &["189/920", "9/23", "7/230", "63/920", "7/23"]);
    let instance = Instance::with_realized_accuracy(p, v).unwrap();
    assert_eq!(instance.errors(), vec![rat(1, 10); 4]);
    let tr = run_instance(&AllocatorChoice::new("follower:lpt"), &instance).unwrap();
    // agent 3 keeps 7/230 while bundle {g0, g3} minus g3 is worth 189/920
    assert_eq!(tr.efx_factor(), &rat(4, 27));
    let claimed = (Rational::from_integer(1.into()) - rat(7, 10)) / (Rational::from_integer(1.into()) + rat(7, 10));
    assert_eq!(claimed, rat(3, 17));
    assert!(tr.efx_factor() < &claimed);
}

#[test]
fn figure_one_triple_at_four_fifths() {
    let p = BoundParams::default();
    let a = rat(4, 5);
    assert_eq!(eval_bound(BoundId::FollowerSufficient, &a, &p).unwrap(), rat(1, 27));
    assert_eq!(main_d_max(&a), rat(52, 1323));
    assert_eq!(eval_bound(BoundId::Id2Lb, &a, &p).unwrap(), rat(1, 20));
}

#[test]
fn follower_and_non_identical_at_one_half() {
    let p = BoundParams::default();
    assert_eq!(eval_bound(BoundId::FollowerSufficient, &rat(1, 2), &p).unwrap(), rat(1, 9));
    assert!(eval_bound(BoundId::NonId2Lb, &rat(1, 2), &p).is_err());
}

#[test]
fn main_factor_at_accuracy_0945_brackets() {
    let d = rat(55, 1000);
    assert!(main_d_max(&rat(734, 1000)) >= d);
    assert!(main_d_max(&rat(735, 1000)) < d);
    let a = invert_bound(BoundId::MainSufficient, &d, &BoundParams::default()).unwrap();
    assert_eq!(to_decimal_floor(&a, 3), "0.734");
}

#[test]
fn prediction_only_minimax_closed_form() {
    let spec = AdversarySpec::new(ConstructionId::PredictionOnly, rat(3, 5)).with_param("D", &rat(1, 10));
    let adv = build_adversary(&spec).unwrap();
    // (1/3 - D) / (1/3 + D)
    assert_eq!(minimax_online_factor(&adv).unwrap().factor, rat(7, 13));
}

#[test]
fn non_identical_pred_duel_at_four_fifths() {
    let adv = build_adversary(&AdversarySpec::new(ConstructionId::NonIdenticalPred, rat(4, 5))).unwrap();
    let tr = run_duel(&AllocatorChoice::new("follower:cut-and-choose"), &adv).unwrap();
    assert_eq!(tr.efx_factor(), &rat(7, 10));
}

#[test]
fn many_pred_large_regime_defeats_follower() {
    let adv = build_adversary(&AdversarySpec::new(ConstructionId::ManyPred, rat(1, 2)).with_n(3)).unwrap();
    let tr = run_duel(&AllocatorChoice::new("follower:lpt"), &adv).unwrap();
    assert!(tr.efx_factor() < &rat(1, 2));
    assert_eq!(tr.error_consistent, Some(true));
}
