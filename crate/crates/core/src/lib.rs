//! Toggle dynamics on independent sets of a path graph.
//!
//! The state space is the family of independent sets of the path on `n`
//! vertices, viewed as length-`n` binary strings with no `11`. The crate
//! builds the vertex toggles and their products, computes orbits and orbit
//! boards, verifies homomesy of indicator statistics with exact rational
//! arithmetic, decomposes orbit boards of the left-to-right sweep into
//! snakes, reconstructs orbits from snake compositions, counts orbits via
//! necklace formulas with brute-force cross-checks, walks any Coxeter word
//! to the sweep by admissible conjugation, and translates everything to
//! promotion and rowmotion on order ideals of the zigzag poset.

mod cyclic;
mod error;

pub mod coxeter;
pub mod enumeration;
pub mod indep;
pub mod orbits;
pub mod snakes;
pub mod word;
pub mod zigzag;

pub use error::{Error, Result};
pub use indep::{
    enumerate_independent_sets, enumerate_independent_sets_with_limit, IndependentSet,
    ABSOLUTE_MAX_N, DEFAULT_MAX_N,
};
pub use orbits::{
    all_orbits, all_orbits_parallel, all_orbits_parallel_with_limit, all_orbits_with_limit,
    check_homomesy, orbit_average, HomomesyReport, HomomesyVerdict, Orbit, OrbitBoard, Rat,
    Statistic,
};
pub use word::{random_coxeter_words, CoxeterWord, EdgeDirection, Orientation, ToggleWord};
