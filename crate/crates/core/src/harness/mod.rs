//! Game runner, generators, claim-verification suites and transcripts.

mod gen;
mod perturb;
mod run;
mod transcript;
mod verify;

pub use gen::{gen_form_prediction, gen_random_instance};
pub use perturb::{perturb, PerturbMode};
pub use run::{allocate, run_duel, run_instance, AllocatorChoice};
pub use transcript::{GameTranscript, Source, StepRecord};
pub use verify::{
    canonical_duels, example_target, minimax_specs, verify_all, verify_claims, Suite, SuiteReport, MAIN_TARGETS,
};
