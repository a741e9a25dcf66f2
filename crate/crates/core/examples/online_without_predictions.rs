//! Allocators that see goods one at a time and know nothing ahead.

use efx_online::harness::{gen_random_instance, run_instance, AllocatorChoice};
use efx_online::{Instance, Result};

fn main() -> Result<()> {
    for seed in 0..5 {
        let p = gen_random_instance(2, 8, true, seed)?;
        let instance = Instance::with_realized_accuracy(p.clone(), p)?;
        let greedy = run_instance(&AllocatorChoice::new("greedy-phi"), &instance)?;
        let ef1 = run_instance(&AllocatorChoice::new("ef1-lowest"), &instance)?;
        println!(
            "seed {seed}  greedy-phi efx {:<10} ef1-lowest efx {:<10} ef1 {}",
            greedy.efx_factor().to_string(),
            ef1.efx_factor().to_string(),
            ef1.report.ef1_factor
        );
    }
    Ok(())
}
