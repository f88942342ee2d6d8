//! Randomized verification harness: seeded instance generators, batch
//! sweeps with CSV/JSON output, and empirical sharpness curves.

pub mod gen;
pub mod rng;
pub mod sharpness;
pub mod sweep;
