//! İnönü–Wigner contractions of three-dimensional real Lie algebras and of
//! their representations by differential operators.

// index loops mirror the component formulas for 3×3 structure constants
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod special;
pub mod jet;
pub mod spaces;
pub mod reps;
pub mod verify;
pub mod direct_limit;
