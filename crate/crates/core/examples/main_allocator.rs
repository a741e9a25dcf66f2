//! The two-agent allocator: classify the predicted LPT plan, then run it
//! against truths at the largest tolerated error.

use efx_online::bounds::main_d_max;
use efx_online::harness::{gen_form_prediction, perturb, run_instance, AllocatorChoice, PerturbMode};
use efx_online::offline::lpt;
use efx_online::online::{classify_form, FormTag};
use efx_online::rational::rat;
use efx_online::{Instance, Result, ValuationProfile};

fn main() -> Result<()> {
    let a = rat(3, 4);
    let d = main_d_max(&a);
    println!("a = {a}, tolerated error {d}");
    let tags = [
        FormTag::Form1,
        FormTag::Form2or4,
        FormTag::Form3EarlyY,
        FormTag::Form3LateY,
        FormTag::SingletonA2,
    ];
    for (seed, tag) in tags.into_iter().enumerate() {
        let f = match gen_form_prediction(tag, &a, seed as u64) {
            Ok(f) => f,
            Err(e) => {
                println!("{tag:?}: {e}");
                continue;
            }
        };
        let form = classify_form(&lpt(&f, 2), &f, &a)?;
        let p = ValuationProfile::identical(2, f)?;
        let v = perturb(&p, &[d.clone(), d.clone()], PerturbMode::Shift, seed as u64)
            .or_else(|_| perturb(&p, &[d.clone(), d.clone()], PerturbMode::Append, seed as u64))?;
        let tr = run_instance(&AllocatorChoice::new("main").with_a(a.clone()), &Instance::with_realized_accuracy(p, v)?)?;
        println!("{:<12} classified {:<12} goods {:>2}  efx {}", format!("{tag:?}"), format!("{:?}", form.tag), tr.steps.len(), tr.efx_factor());
    }
    Ok(())
}
