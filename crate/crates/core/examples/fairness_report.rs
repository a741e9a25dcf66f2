//! EFX and EF1 factors of a fixed allocation, with the binding pair.

use efx_online::rational::parse_rational;
use efx_online::{fairness_report, Allocation, Result, ValuationProfile, ValuationVector};

fn main() -> Result<()> {
    let values = ["2/5", "1/4", "1/5", "1/10", "1/20"]
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?;
    let profile = ValuationProfile::identical(2, ValuationVector::new(values)?)?;
    let alloc = Allocation::from_bundles(vec![vec![0], vec![1, 2, 3, 4]], 5)?;

    let report = fairness_report(&alloc, &profile)?;
    println!("bundles      {:?}", alloc.bundles());
    println!("efx factor   {}", report.efx_factor);
    println!("ef1 factor   {}", report.ef1_factor);
    if let Some((i, j)) = report.binding_pair {
        println!("binding pair agent {i} looking at agent {j}");
    }
    Ok(())
}
