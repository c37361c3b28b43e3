//! Candidate-stabilizer searches over a fixed base root system.
//!
//! Two engines live here. `type1` enumerates root subsets Psi such that
//! t + sum of g_gamma over Psi can be the stabilizer of a point whose torus
//! closure is full; the search is driven entirely by rank-2 containment
//! constraints encoded in `reformul`. `type2` enumerates stabilizers whose
//! toral part has codimension one, built from a pair of extreme weights of a
//! fundamental-type representation.

pub mod reformul;
pub mod type1;
pub mod type2;

pub use reformul::{reformul_constraint, Alternative, PlaneConstraint, Reading};
pub use type1::{enumerate_type1, Type1Pair};
pub use type2::{
    enumerate_type2, g2_integrality_obstruction, type2_candidate_triples, type2_stabilizer_levi,
    Type2Candidate, Type2Pair,
};
