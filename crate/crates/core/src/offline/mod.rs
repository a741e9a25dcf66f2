//! Offline building blocks and verification oracles.

mod brute;
mod envy;
mod lpt;
mod minimax;

pub use brute::{brute_force_best_factor, BRUTE_FORCE_BUDGET};
pub use envy::{eliminate_envy_cycles, unenvied_agent, EnvyGraph};
pub use lpt::{cut_and_choose, lpt, lpt_values};
pub use minimax::{minimax_online_factor, MinimaxResult, MINIMAX_NODE_BUDGET};
