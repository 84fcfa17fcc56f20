//! Degree congruences for covariants of products with a common prime in the
//! orders of the centers.

use crate::error::CovariantError;
use crate::group::structure::is_prime;
use crate::group::FiniteGroup;

use super::map::PolyMap;
use super::rep::{is_equivariant, MatrixRep};

/// For an equivariant `phi: V_1 + .. + V_n -> V_1 + .. + V_n` of
/// `G_1 x .. x G_n` with `p | |Z(G_i)|` for all `i`, checks `A = I (mod p)`
/// and `det A != 0`.
pub fn degree_congruences(
    phi: &PolyMap,
    rho_v: &MatrixRep,
    rho_w: &MatrixRep,
    factors: &[FiniteGroup],
    p: u64,
) -> Result<bool, CovariantError> {
    let pre = |m: &str| Err(CovariantError::Precondition(m.into()));
    if !is_prime(p) {
        return pre("p must be prime");
    }
    let n = factors.len();
    if phi.domain().num_blocks() != n || phi.codomain().num_blocks() != n {
        return pre("need one domain and one codomain block per factor");
    }
    let order: usize = factors.iter().map(FiniteGroup::order).product();
    if order != rho_v.group().order() {
        return pre("group order differs from the product of the factors");
    }
    if factors.iter().any(|f| !(f.center().order() as u64).is_multiple_of(p)) {
        return pre("p must divide the order of every factor's center");
    }
    if !is_equivariant(phi, rho_v, rho_w) {
        return pre("map is not equivariant");
    }
    let a = phi.degree_matrix()?;
    let det_nonzero = a.det().is_some_and(|d| d != 0.into());
    Ok(a.is_identity_mod(p as i64) && det_nonzero)
}
