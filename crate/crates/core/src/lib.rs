//! Finite groups, their character tables, and bounds on covariant and
//! essential dimension, together with a small laboratory for multihomogeneous
//! polynomial maps.

pub mod bounds;
pub mod cli;
pub mod covariant;
pub mod cyclotomic;
pub mod dsl;
pub mod error;
pub mod group;
pub mod modp;
pub mod perm;
pub mod reps;

pub use error::{BoundError, CovariantError, DslError, GroupError, RepsError};
pub use group::{FiniteGroup, Subgroup};
pub use perm::Permutation;
