use proptest::prelude::*;

use efx_online::adversaries::{build_adversary, realized_error, AdversarySpec, ConstructionId};
use efx_online::bounds::{eval_bound, invert_bound, main_d_max, BoundId, BoundParams};
use efx_online::harness::{gen_random_instance, perturb, run_instance, AllocatorChoice, PerturbMode, MAIN_TARGETS};
use efx_online::offline::{eliminate_envy_cycles, lpt, unenvied_agent, EnvyGraph};
use efx_online::online::{make_allocator, AllocatorContext};
use efx_online::rational::{rat, sum, Rational};
use efx_online::{ef1_factor, efx_factor, tv_distance, Instance};

fn mode() -> impl Strategy<Value = PerturbMode> {
    prop::sample::select(PerturbMode::ALL.to_vec())
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn perturb_hits_the_requested_distance(
        n in 1usize..=3,
        t in 2usize..=8,
        identical in any::<bool>(),
        k in 0i64..=30,
        mode in mode(),
        seed in any::<u64>(),
    ) {
        let p = gen_random_instance(n, t, identical, seed).unwrap();
        let d = rat(k, 100);
        if let Ok(v) = perturb(&p, &vec![d.clone(); n], mode, seed) {
            for i in 0..n {
                prop_assert_eq!(tv_distance(p.agent(i), v.agent(i)).unwrap(), d.clone());
                prop_assert_eq!(sum(v.agent(i).values()), one());
            }
            prop_assert_eq!(v.is_identical(), identical);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn shift_is_always_feasible_below_a_tenth(n in 1usize..=3, t in 2usize..=8, k in 0i64..=10, seed in any::<u64>()) {
        let p = gen_random_instance(n, t, true, seed).unwrap();
        prop_assert!(perturb(&p, &vec![rat(k, 100); n], PerturbMode::Shift, seed).is_ok());
    }

    #[test]
    fn lpt_is_exact_efx(n in 1usize..=5, t in 1usize..=14, seed in any::<u64>()) {
        let p = gen_random_instance(n, t, true, seed).unwrap();
        prop_assert_eq!(efx_factor(&lpt(p.agent(0), n), &p).unwrap(), one());
    }

    #[test]
    fn factors_stay_in_unit_interval_and_efx_implies_ef1(
        n in 2usize..=4,
        t in 1usize..=8,
        seed in any::<u64>(),
        owners in prop::collection::vec(0usize..4, 8),
    ) {
        let p = gen_random_instance(n, t, false, seed).unwrap();
        let owner: Vec<usize> = owners[..t].iter().map(|o| o % n).collect();
        let alloc = efx_online::Allocation::from_assignment(&owner, n).unwrap();
        let x = efx_factor(&alloc, &p).unwrap();
        let e = ef1_factor(&alloc, &p).unwrap();
        prop_assert!(x >= Rational::from_integer(0.into()) && x <= one());
        prop_assert!(e >= x);
        prop_assert!(e <= one());
    }

    #[test]
    fn identical_factor_ignores_agent_labels(n in 2usize..=4, t in 1usize..=8, seed in any::<u64>(), shift in 0usize..4) {
        let p = gen_random_instance(n, t, true, seed).unwrap();
        let owner: Vec<usize> = (0..t).map(|g| (g * 7 + seed as usize) % n).collect();
        let alloc = efx_online::Allocation::from_assignment(&owner, n).unwrap();
        let perm: Vec<usize> = (0..n).map(|i| (i + shift) % n).collect();
        prop_assert_eq!(efx_factor(&alloc, &p).unwrap(), efx_factor(&alloc.permuted(&perm), &p).unwrap());
    }

    #[test]
    fn cycle_elimination_leaves_a_source(n in 2usize..=4, t in 1usize..=8, seed in any::<u64>()) {
        let p = gen_random_instance(n, t, false, seed).unwrap();
        let owner: Vec<usize> = (0..t).map(|g| (g + seed as usize) % n).collect();
        let alloc = efx_online::Allocation::from_assignment(&owner, n).unwrap();
        let done = eliminate_envy_cycles(&alloc, &p);
        prop_assert!(EnvyGraph::build(&done, &p).is_acyclic());
        prop_assert!(unenvied_agent(&done, &p).is_ok());
        prop_assert_eq!(done.bundle_set(), alloc.bundle_set());
    }

    #[test]
    fn replay_reproduces_the_allocation(n in 2usize..=4, t in 2usize..=10, seed in any::<u64>(), k in 0i64..=10) {
        let p = gen_random_instance(n, t, true, seed).unwrap();
        let v = perturb(&p, &vec![rat(k, 100); n], PerturbMode::Shift, seed).unwrap();
        let instance = Instance::with_realized_accuracy(p.clone(), v).unwrap();
        for name in ["ef1-lowest", "follower:lpt"] {
            let choice = AllocatorChoice::new(name);
            let first = run_instance(&choice, &instance).unwrap();
            prop_assert_eq!(&first, &run_instance(&choice, &instance).unwrap());
            let ctx = AllocatorContext::new(n, true).with_predictions(p.clone());
            let mut fresh = make_allocator(name, None, &ctx).unwrap();
            prop_assert!(first.replay(fresh.as_mut()).unwrap());
        }
    }

    #[test]
    fn main_allocator_meets_its_target(
        which in 0usize..MAIN_TARGETS.len(),
        t in 1usize..=12,
        quarter in 0i64..=4,
        mode in mode(),
        seed in any::<u64>(),
    ) {
        let (num, den) = MAIN_TARGETS[which];
        let a = rat(num, den);
        let p = gen_random_instance(2, t, true, seed).unwrap();
        let d = main_d_max(&a) * rat(quarter, 4);
        if let Ok(v) = perturb(&p, &[d.clone(), d], mode, seed) {
            let instance = Instance::with_realized_accuracy(p, v).unwrap();
            let tr = run_instance(&AllocatorChoice::new("main").with_a(a.clone()), &instance).unwrap();
            prop_assert!(tr.efx_factor() >= &a, "factor {} below {}", tr.efx_factor(), a);
        }
    }

    #[test]
    fn main_counts_constant_work_per_step(t in 1usize..=30, seed in any::<u64>()) {
        let p = gen_random_instance(2, t, true, seed).unwrap();
        let ctx = AllocatorContext::new(2, true).with_predictions(p.clone());
        let mut alloc = make_allocator("main", Some(&rat(3, 4)), &ctx).unwrap();
        for g in 0..t {
            alloc.step(g, &p.column(g)).unwrap();
        }
        let ops = alloc.op_counts().unwrap();
        prop_assert_eq!(ops.len(), t);
        prop_assert!(ops.iter().all(|&c| c <= efx_online::online::MAIN_OPS_PER_STEP));
    }

    #[test]
    fn adversary_paths_normalize_and_keep_their_claim(which in 0usize..9, seed in any::<u64>()) {
        let specs = efx_online::harness::canonical_duels();
        let spec: &AdversarySpec = &specs[which];
        let adv = build_adversary(spec).unwrap();
        let mut state = seed;
        let (decisions, rows) = adv.play(|_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as usize) % adv.n()
        }).unwrap();
        prop_assert_eq!(decisions.len(), adv.horizon());
        for row in &rows {
            prop_assert_eq!(sum(row), one());
        }
        let claim = adv.claimed_error(&decisions);
        if let Some(errs) = realized_error(&adv, &rows) {
            prop_assert!(errs.iter().all(|e| claim.admits(e)));
        }
    }

    #[test]
    fn bounds_invert_then_eval_round_trips(k in 62i64..=99, id in prop::sample::select(vec![
        BoundId::FollowerSufficient, BoundId::MainSufficient, BoundId::Id2Lb, BoundId::ThreeGoodsSufficient,
    ])) {
        let p = BoundParams::default();
        let a = rat(k, 100);
        let d = eval_bound(id, &a, &p).unwrap();
        let back = invert_bound(id, &d, &p).unwrap();
        prop_assert!(back >= a.clone() - rat(1, 1 << 40));
        prop_assert!(back <= a + rat(1, 1 << 40));
    }
}

#[test]
fn construction_ids_cover_all_nine() {
    assert_eq!(ConstructionId::ALL.len(), 9);
}
