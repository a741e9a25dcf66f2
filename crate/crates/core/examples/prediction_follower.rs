//! Follow an LPT plan of the predictions; shows both a clean run and an
//! instance where the follower falls below (1 - a) / (1 + a).

use efx_online::harness::{gen_random_instance, perturb, run_instance, AllocatorChoice, PerturbMode};
use efx_online::rational::{parse_rational, rat};
use efx_online::{Instance, Result, ValuationProfile, ValuationVector};

fn identical(n: usize, xs: &[&str]) -> Result<ValuationProfile> {
    let v = ValuationVector::new(xs.iter().map(|x| parse_rational(x)).collect::<Result<_>>()?)?;
    ValuationProfile::identical(n, v)
}

fn main() -> Result<()> {
    let follower = AllocatorChoice::new("follower:lpt");

    let p = gen_random_instance(3, 9, true, 11)?;
    let v = perturb(&p, &[rat(1, 50), rat(1, 50), rat(1, 50)], PerturbMode::Shift, 11)?;
    let tr = run_instance(&follower, &Instance::with_realized_accuracy(p, v)?)?;
    println!("random, d = 1/50   efx {}", tr.efx_factor());

    let p = identical(4, &["3/23", "9/23", "3/23", "1/23", "7/23"])?;
    let v = identical(4, &["189/920", "9/23", "7/230", "63/920", "7/23"])?;
    let instance = Instance::with_realized_accuracy(p, v)?;
    let tr = run_instance(&follower, &instance)?;
    println!("counterexample     d = {}  efx {}  (3/17 claimed)", instance.errors()[0], tr.efx_factor());
    println!("                   bundles {:?}", tr.allocation.bundles());
    Ok(())
}
