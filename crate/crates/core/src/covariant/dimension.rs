//! Image dimensions by Jacobian rank at random integer points.

use rand::Rng;

use crate::cyclotomic::CycNumber;
use crate::error::CovariantError;

use super::linalg;
use super::map::PolyMap;
use super::poly::Poly;
use super::rep::{random_point, POINT_BOUND};

/// Number of random points whose Jacobian ranks are maximized over.
pub const RANK_TRIALS: usize = 3;

fn jacobian(phi: &PolyMap) -> Vec<Vec<Poly>> {
    let n = phi.nvars();
    phi.components().iter().map(|p| (0..n).map(|i| p.derivative(i)).collect()).collect()
}

fn eval_rows(jac: &[Vec<Poly>], point: &[CycNumber]) -> Vec<Vec<CycNumber>> {
    jac.iter().map(|row| row.iter().map(|d| d.eval(point)).collect()).collect()
}

/// Dimension of the closure of `phi(V)`: the generic rank of the Jacobian.
pub fn image_dimension<R: Rng + ?Sized>(phi: &PolyMap, rng: &mut R) -> usize {
    let jac = jacobian(phi);
    (0..RANK_TRIALS)
        .map(|_| {
            let p = random_point(rng, phi.nvars(), POINT_BOUND);
            linalg::rank(&eval_rows(&jac, &p))
        })
        .max()
        .unwrap_or(0)
}

/// Dimension of the image in `P(W_1) x .. x P(W_m)`: in each codomain block
/// divide by a coordinate that does not vanish at the sample point and
/// differentiate the remaining ratios.
pub fn projective_image_dimension<R: Rng + ?Sized>(phi: &PolyMap, rng: &mut R) -> Result<usize, CovariantError> {
    let jac = jacobian(phi);
    let cod = phi.codomain();
    let mut best: Option<usize> = None;
    for _ in 0..RANK_TRIALS {
        let p = random_point(rng, phi.nvars(), POINT_BOUND);
        let values = phi.evaluate(&p);
        let grads = eval_rows(&jac, &p);
        let mut rows = Vec::new();
        let mut degenerate = false;
        for j in 0..cod.num_blocks() {
            let range = cod.block_range(j);
            let Some(c) = range.clone().find(|&c| !values[c].is_zero()) else {
                degenerate = true;
                break;
            };
            for k in range.filter(|&k| k != c) {
                // d(phi_k / phi_c) up to the factor phi_c^-2
                let row = grads[k]
                    .iter()
                    .zip(&grads[c])
                    .map(|(gk, gc)| &(&values[c] * gk) - &(&values[k] * gc))
                    .collect();
                rows.push(row);
            }
        }
        if degenerate {
            continue;
        }
        let r = linalg::rank(&rows);
        best = Some(best.map_or(r, |b| b.max(r)));
    }
    best.ok_or(CovariantError::ChartDegenerate)
}
