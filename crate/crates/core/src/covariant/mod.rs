//! Block-structured polynomial maps: multidegrees and degree matrices,
//! leading parts, composition, equivariance, twisting by invariants,
//! regularization and image dimensions.

mod congruence;
mod dimension;
pub mod io;
pub mod linalg;
mod map;
mod poly;
mod rep;
mod space;

pub use congruence::degree_congruences;
pub use dimension::{image_dimension, projective_image_dimension, RANK_TRIALS};
pub use map::{poly_multidegree, regularize, regularize_with, twist_by_invariant, twist_rational, PolyMap, RationalPolyMap};
pub use poly::{int_point, Monomial, Poly};
pub use rep::{
    is_equivariant, is_faithful_covariant, is_invariant, monomials_of_degree, random_point, reynolds_invariant,
    CycMatrix, MatrixRep, FAITHFUL_TRIALS, POINT_BOUND,
};
pub use space::{DegreeMatrix, GradedSpace};
