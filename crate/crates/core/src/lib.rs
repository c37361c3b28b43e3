//! Exact-arithmetic engine for the classification of cuspidal two-orbit
//! varieties under a simple algebraic group.
//!
//! Everything is computed over arbitrary-precision rationals: root systems in
//! their standard coordinate realizations, Weyl group actions, Chevalley
//! structure constants, and the linear programs that decide which candidate
//! stabilizer patterns admit a compatible dominant weight. The two
//! classification engines (`classify::type1`, `classify::type2`) enumerate
//! candidates from scratch; `catalog` carries the expected answer so the
//! enumeration can be diffed against it.

pub mod qlinalg;
pub mod linprog;
pub mod roots;
pub mod weyl;
pub mod chevalley;
pub mod catalog;
pub mod classify;
pub mod weights;

pub use qlinalg::{QMatrix, QVector, Rat};
pub use roots::{RootSystem, RootSystemType};
