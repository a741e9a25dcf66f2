//! Online EFX allocation of indivisible goods, with and without predictions.
//!
//! Exact rational arithmetic throughout: values, fairness factors, prediction
//! errors and bounds are [`Rational`]s, and every threshold involving φ or √3
//! is decided by integer sign tests.

pub mod adversaries;
pub mod bounds;
pub mod error;
pub mod fairness;
pub mod golden;
pub mod harness;
pub mod offline;
pub mod online;
pub mod rational;
pub mod tv;
pub mod valuation;

pub use error::{Error, Result};
pub use fairness::{ef1_factor, efx_factor, fairness_report, FairnessReport};
pub use rational::Rational;
pub use tv::tv_distance;
pub use valuation::{Allocation, Instance, ValuationProfile, ValuationVector};
