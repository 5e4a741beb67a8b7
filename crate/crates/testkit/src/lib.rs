//! Test support for the ridfa workspace.
//!
//! Everything in here exists to check the production crates from the
//! outside: hand-built reference machines with known behaviour, brute-force
//! oracles that decide the same questions as the library by independent
//! (slower) means, and seeded random instance generators. None of it is
//! used by the library itself.

pub mod brute;
pub mod machines;
pub mod random;

pub use random::SplitMix64;
