//! Every lower-bound construction played against its natural target.

use efx_online::adversaries::build_adversary;
use efx_online::harness::{canonical_duels, run_duel, AllocatorChoice};
use efx_online::Result;

fn main() -> Result<()> {
    for spec in canonical_duels() {
        let adv = build_adversary(&spec)?;
        let target = spec.id.natural_target();
        let tr = run_duel(&AllocatorChoice::new(target), &adv)?;
        let verdict = if tr.efx_factor() < adv.a() { "defeated" } else { "held" };
        println!(
            "{:>1} {:<24} vs {:<24} a = {:<5} efx {:<10} {verdict}  error claim ok: {:?}",
            spec.id.number(),
            spec.id.name(),
            target,
            adv.a().to_string(),
            tr.efx_factor().to_string(),
            tr.error_consistent
        );
    }
    Ok(())
}
