//! Tolerated prediction error as a function of the target factor, as CSV.

use efx_online::bounds::{grid, invert_bound, sweep_curves, BoundId, BoundParams};
use efx_online::rational::{rat, to_decimal_floor};
use efx_online::Result;

fn main() -> Result<()> {
    let params = BoundParams::default();
    let points = grid(&rat(62, 100), &rat(1, 1), &rat(1, 50))?;
    let ids = [BoundId::FollowerSufficient, BoundId::MainSufficient, BoundId::Id2Lb];
    print!("{}", sweep_curves(&ids, &points, &params)?.to_csv(Some(5)));

    let a = invert_bound(BoundId::MainSufficient, &rat(1, 20), &params)?;
    eprintln!("main allocator at error 1/20 guarantees {}", to_decimal_floor(&a, 4));
    Ok(())
}
