//! Truths at an exact total-variation distance from the predictions.

use efx_online::harness::{gen_random_instance, perturb, PerturbMode};
use efx_online::rational::rat;
use efx_online::{tv_distance, Result};

fn main() -> Result<()> {
    let p = gen_random_instance(2, 6, false, 7)?;
    let d = [rat(1, 20), rat(3, 25)];
    println!("prediction agent 0: {:?}", p.agent(0).values().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    for mode in PerturbMode::ALL {
        match perturb(&p, &d, mode, 7) {
            Ok(v) => {
                let dist: Vec<String> = (0..2)
                    .map(|i| tv_distance(p.agent(i), v.agent(i)).map(|x| x.to_string()))
                    .collect::<Result<_>>()?;
                println!("{:<9} distances {dist:?}  horizon {}", format!("{mode:?}"), v.horizon());
            }
            Err(e) => println!("{:<9} {e}", format!("{mode:?}")),
        }
    }
    Ok(())
}
