//! Offline allocations: LPT, cut-and-choose, and the brute-force optimum.

use efx_online::offline::{brute_force_best_factor, cut_and_choose, lpt};
use efx_online::rational::parse_rational;
use efx_online::{efx_factor, Result, ValuationProfile, ValuationVector};

fn vector(xs: &[&str]) -> Result<ValuationVector> {
    ValuationVector::new(xs.iter().map(|x| parse_rational(x)).collect::<Result<_>>()?)
}

fn main() -> Result<()> {
    let v = vector(&["3/23", "9/23", "3/23", "1/23", "7/23"])?;
    let identical = ValuationProfile::identical(3, v.clone())?;
    let plan = lpt(&v, 3);
    println!("lpt, 3 agents      {:?}  efx {}", plan.bundles(), efx_factor(&plan, &identical)?);

    let (best, witness) = brute_force_best_factor(&identical)?;
    println!("brute force        {:?}  efx {best}", witness.bundles());

    let w = vector(&["1/10", "1/10", "2/5", "1/5", "1/5"])?;
    let pair = ValuationProfile::new(vec![v.clone(), w], false)?;
    let cc = cut_and_choose(pair.agent(0), pair.agent(1));
    println!("cut-and-choose     {:?}  efx {}", cc.bundles(), efx_factor(&cc, &pair)?);
    Ok(())
}
