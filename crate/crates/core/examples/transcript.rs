//! A run serialized to JSON, read back and replayed against a fresh allocator.

use efx_online::harness::{gen_random_instance, run_instance, AllocatorChoice, GameTranscript};
use efx_online::online::{make_allocator, AllocatorContext};
use efx_online::rational::rat;
use efx_online::{Instance, Result};

fn main() -> Result<()> {
    let p = gen_random_instance(2, 5, true, 3)?;
    let instance = Instance::with_realized_accuracy(p.clone(), p.clone())?;
    let tr = run_instance(&AllocatorChoice::new("main").with_a(rat(7, 10)), &instance)?;

    let text = serde_json::to_string_pretty(&tr)?;
    println!("{text}");
    let back: GameTranscript = serde_json::from_str(&text)?;

    let ctx = AllocatorContext::new(2, true).with_predictions(p);
    let mut fresh = make_allocator("main", Some(&rat(7, 10)), &ctx)?;
    eprintln!("round trip equal: {}, replay matches: {}", back == tr, back.replay(fresh.as_mut())?);
    Ok(())
}
