//! Matrix representations, equivariance and invariants.

use rand::Rng;

use crate::cyclotomic::CycNumber;
use crate::error::CovariantError;
use crate::group::FiniteGroup;

use super::linalg::{self, identity, mat_mul, mat_vec};
use super::map::PolyMap;
use super::poly::{Monomial, Poly};
use super::space::GradedSpace;

pub type CycMatrix = Vec<Vec<CycNumber>>;

/// A block-diagonal representation `G -> prod GL(V_i)`, acting on column
/// vectors, with `rho(g h) = rho(g) rho(h)` in the group's multiplication.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    group: FiniteGroup,
    space: GradedSpace,
    generator_blocks: Vec<Vec<CycMatrix>>,
    elements: Vec<CycMatrix>,
}

impl MatrixRep {
    /// Builds from per-generator, per-block matrices, extending to all
    /// elements and checking the homomorphism property.
    pub fn new(
        group: &FiniteGroup,
        space: &GradedSpace,
        generator_blocks: Vec<Vec<CycMatrix>>,
    ) -> Result<Self, CovariantError> {
        if generator_blocks.len() != group.generators().len() {
            return Err(CovariantError::NotARepresentation(format!(
                "{} generators but {} matrices",
                group.generators().len(),
                generator_blocks.len()
            )));
        }
        let n = space.total_dim();
        let mut gens = Vec::with_capacity(generator_blocks.len());
        for (s, blocks) in generator_blocks.iter().enumerate() {
            if blocks.len() != space.num_blocks() {
                return Err(CovariantError::BlockMismatch(format!(
                    "generator {s} has {} blocks, space has {}",
                    blocks.len(),
                    space.num_blocks()
                )));
            }
            let mut full = vec![vec![CycNumber::zero(); n]; n];
            for (b, m) in blocks.iter().enumerate() {
                let r = space.block_range(b);
                if m.len() != r.len() || m.iter().any(|row| row.len() != r.len()) {
                    return Err(CovariantError::BlockMismatch(format!(
                        "generator {s} block {b} is not {0}x{0}",
                        r.len()
                    )));
                }
                if linalg::det(m).is_zero() {
                    return Err(CovariantError::NotARepresentation(format!("generator {s} block {b} is singular")));
                }
                for (i, row) in m.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        full[r.start + i][r.start + j] = v.clone();
                    }
                }
            }
            gens.push(full);
        }
        let elements = group.extend_along_tree(&gens, identity(n), |a, b| mat_mul(a, b));
        if !group.check_homomorphism(&elements, |a, b| mat_mul(a, b)) {
            return Err(CovariantError::NotARepresentation("generator relations fail".into()));
        }
        Ok(Self { group: group.clone(), space: space.clone(), generator_blocks, elements })
    }

    /// The trivial action on `space`.
    pub fn trivial(group: &FiniteGroup, space: &GradedSpace) -> Self {
        let blocks: Vec<CycMatrix> = space.block_dims().iter().map(|&d| identity(d)).collect();
        let gens = vec![blocks; group.generators().len()];
        Self::new(group, space, gens).expect("identity matrices form a representation")
    }

    /// `rho + sigma` with blocks concatenated.
    pub fn direct_sum(&self, other: &MatrixRep) -> Result<MatrixRep, CovariantError> {
        if !self.group.ptr_eq(&other.group) {
            return Err(CovariantError::NotARepresentation("representations of different groups".into()));
        }
        let gens = self
            .generator_blocks
            .iter()
            .zip(&other.generator_blocks)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        MatrixRep::new(&self.group, &self.space.extend(&other.space), gens)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.total_dim()
    }

    /// Per-generator, per-block matrices as given.
    pub fn generator_blocks(&self) -> &[Vec<CycMatrix>] {
        &self.generator_blocks
    }

    /// Full matrix of the element with index `g`.
    pub fn matrix(&self, g: usize) -> &CycMatrix {
        &self.elements[g]
    }

    /// Least common conductor of all generator entries.
    pub fn conductor(&self) -> u32 {
        self.generator_blocks
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .fold(1u32, |acc, v| num_integer::lcm(acc, v.conductor()))
    }

    pub fn is_faithful(&self) -> bool {
        let id = identity(self.dim());
        (1..self.group.order()).all(|g| self.elements[g] != id)
    }

    /// Linear forms `(rho(g) x)_i = sum_l rho(g)_il x_l`.
    pub fn substitution(&self, g: usize) -> Vec<Poly> {
        let n = self.dim();
        self.elements[g]
            .iter()
            .map(|row| {
                Poly::from_terms(
                    n,
                    row.iter().enumerate().map(|(l, v)| {
                        let mut e = vec![0; n];
                        e[l] = 1;
                        (e, v.clone())
                    }),
                )
            })
            .collect()
    }

    pub fn act(&self, g: usize, v: &[CycNumber]) -> Vec<CycNumber> {
        mat_vec(&self.elements[g], v)
    }

    /// Whether only the identity fixes `v`.
    pub fn has_trivial_stabilizer(&self, v: &[CycNumber]) -> bool {
        (1..self.group.order()).all(|g| self.act(g, v) != v)
    }
}

/// `f(rho(g) x) = f(x)` for every generator `g`.
pub fn is_invariant(f: &Poly, rho: &MatrixRep) -> bool {
    f.nvars() == rho.dim()
        && rho.group.generator_indices().iter().all(|&g| f.substitute(&rho.substitution(g)) == *f)
}

/// `phi(rho_v(g) x) = rho_w(g) phi(x)` for every generator, as polynomial
/// identities.
pub fn is_equivariant(phi: &PolyMap, rho_v: &MatrixRep, rho_w: &MatrixRep) -> bool {
    if phi.domain() != rho_v.space() || phi.codomain() != rho_w.space() || !rho_v.group.ptr_eq(&rho_w.group) {
        return false;
    }
    for &g in rho_v.group.generator_indices() {
        let subs = rho_v.substitution(g);
        let m = rho_w.matrix(g);
        for (i, row) in m.iter().enumerate() {
            let lhs = phi.components()[i].substitute(&subs);
            let mut rhs = Poly::zero(phi.nvars());
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    rhs = &rhs + &phi.components()[k].scale(c);
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Exponent vectors of total degree `d` in `n` variables, increasing in the
/// graded-lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, d: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() + 1 == n {
            acc.push(d);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for e in 0..=d {
            acc.push(e);
            go(n, d - e, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, d, &mut Vec::new(), &mut out);
    }
    out.sort_by_key(|a| Monomial(a.clone()));
    out
}

/// Average of `m(rho(g) x)` over the group for monomials `m` of degree `d`
/// (optionally of a fixed block multidegree); returns the first nonzero
/// average.
pub fn reynolds_invariant(rho: &MatrixRep, d: u32, multidegree: Option<&[u32]>) -> Result<Poly, CovariantError> {
    if d == 0 {
        return Err(CovariantError::Precondition("degree must be positive".into()));
    }
    let space = rho.space();
    if let Some(md) = multidegree {
        if md.len() != space.num_blocks() || md.iter().sum::<u32>() != d {
            return Err(CovariantError::Precondition("multidegree does not match degree and blocks".into()));
        }
    }
    let n = rho.dim();
    let subs: Vec<Vec<Poly>> = (0..rho.group.order()).map(|g| rho.substitution(g)).collect();
    let inv_order = CycNumber::rational(num_rational::BigRational::new(1.into(), (rho.group.order() as i64).into()));
    for e in monomials_of_degree(n, d) {
        if let Some(md) = multidegree {
            let ok = (0..space.num_blocks()).all(|b| e[space.block_range(b)].iter().sum::<u32>() == md[b]);
            if !ok {
                continue;
            }
        }
        let m = Poly::term(n, e, CycNumber::one());
        let mut acc = Poly::zero(n);
        for s in &subs {
            acc = &acc + &m.substitute(s);
        }
        if !acc.is_zero() {
            return Ok(acc.scale(&inv_order));
        }
    }
    Err(CovariantError::NotFound)
}

/// Random integer vector with entries in `[-bound, bound]`.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Vec<CycNumber> {
    (0..n).map(|_| CycNumber::from_int(rng.gen_range(-bound..=bound))).collect()
}

/// Bound on coordinates of random evaluation points.
pub const POINT_BOUND: i64 = 1_000_000;

/// Number of random points tried by [`is_faithful_covariant`].
pub const FAITHFUL_TRIALS: usize = 8;

/// Whether some `phi(v)` has trivial stabilizer, sampling points `v` with
/// trivial stabilizer in the domain.
pub fn is_faithful_covariant<R: Rng + ?Sized>(
    phi: &PolyMap,
    rho_v: &MatrixRep,
    rho_w: &MatrixRep,
    rng: &mut R,
) -> Result<bool, CovariantError> {
    if !is_equivariant(phi, rho_v, rho_w) {
        return Err(CovariantError::NotEquivariant);
    }
    let mut saw_free = false;
    for _ in 0..FAITHFUL_TRIALS {
        let v = random_point(rng, rho_v.dim(), POINT_BOUND);
        if !rho_v.has_trivial_stabilizer(&v) {
            continue;
        }
        saw_free = true;
        if rho_w.has_trivial_stabilizer(&phi.evaluate(&v)) {
            return Ok(true);
        }
    }
    if saw_free {
        Ok(false)
    } else {
        Err(CovariantError::NoFreePoint)
    }
}
