//! Best factor any online allocator can secure against a construction,
//! by exhaustive search over the adversary's game tree.

use efx_online::adversaries::build_adversary;
use efx_online::harness::minimax_specs;
use efx_online::offline::minimax_online_factor;
use efx_online::Result;

fn main() -> Result<()> {
    for spec in minimax_specs() {
        let adv = build_adversary(&spec)?;
        let r = minimax_online_factor(&adv)?;
        println!(
            "{:<24} a = {:<5} minimax {:<12} nodes {:>7}  below a: {}",
            spec.id.name(),
            adv.a().to_string(),
            r.factor.to_string(),
            r.nodes,
            &r.factor < adv.a()
        );
    }
    Ok(())
}
