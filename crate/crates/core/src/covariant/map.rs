//! Polynomial maps between graded spaces and their degree calculus.

use std::collections::BTreeSet;

use rand::Rng;

use crate::cyclotomic::CycNumber;
use crate::error::CovariantError;

use super::poly::Poly;
use super::rep::{is_invariant, MatrixRep};
use super::space::{DegreeMatrix, GradedSpace};

/// `phi = (phi_1, .., phi_m): V -> W`, one polynomial per codomain
/// coordinate in the domain coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    domain: GradedSpace,
    codomain: GradedSpace,
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(domain: GradedSpace, codomain: GradedSpace, components: Vec<Poly>) -> Result<Self, CovariantError> {
        if components.len() != codomain.total_dim() {
            return Err(CovariantError::BlockMismatch(format!(
                "codomain has dimension {} but {} components were given",
                codomain.total_dim(),
                components.len()
            )));
        }
        if let Some(p) = components.iter().find(|p| p.nvars() != domain.total_dim()) {
            return Err(CovariantError::BlockMismatch(format!(
                "component in {} variables, domain has dimension {}",
                p.nvars(),
                domain.total_dim()
            )));
        }
        Ok(Self { domain, codomain, components })
    }

    pub fn identity(space: &GradedSpace) -> Self {
        let n = space.total_dim();
        Self { domain: space.clone(), codomain: space.clone(), components: (0..n).map(|i| Poly::var(n, i)).collect() }
    }

    pub fn domain(&self) -> &GradedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedSpace {
        &self.codomain
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// Coordinate polynomials of codomain block `j`.
    pub fn block(&self, j: usize) -> &[Poly] {
        &self.components[self.codomain.block_range(j)]
    }

    pub fn block_is_zero(&self, j: usize) -> bool {
        self.block(j).iter().all(Poly::is_zero)
    }

    pub fn nvars(&self) -> usize {
        self.domain.total_dim()
    }

    /// Per-domain-block degrees of an exponent vector.
    pub fn multidegree(&self, exponents: &[u32]) -> Vec<u32> {
        (0..self.domain.num_blocks())
            .map(|b| exponents[self.domain.block_range(b)].iter().sum())
            .collect()
    }

    /// Multidegrees occurring in block `j`.
    pub fn block_support(&self, j: usize) -> BTreeSet<Vec<u32>> {
        self.block(j).iter().flat_map(|p| p.terms().map(|(m, _)| self.multidegree(&m.0))).collect()
    }

    /// The degree matrix `A = (alpha_ji)`, provided every block is nonzero
    /// and carries a single multidegree.
    pub fn degree_matrix(&self) -> Result<DegreeMatrix, CovariantError> {
        let mut rows = Vec::with_capacity(self.codomain.num_blocks());
        for j in 0..self.codomain.num_blocks() {
            let support = self.block_support(j);
            let mut it = support.iter();
            let Some(first) = it.next() else {
                return Err(CovariantError::ZeroComponent(j));
            };
            if let Some(second) = it.next() {
                return Err(CovariantError::NotMultihomogeneous {
                    block: j,
                    first: first.iter().map(|&v| v as i64).collect(),
                    second: second.iter().map(|&v| v as i64).collect(),
                });
            }
            rows.push(first.iter().map(|&v| v as i64).collect());
        }
        Ok(DegreeMatrix::new(rows))
    }

    pub fn is_multihomogeneous(&self) -> bool {
        self.degree_matrix().is_ok()
    }

    /// Whether `beta` gives distinct weights to distinct multidegrees of
    /// each block.
    pub fn beta_separates(&self, beta: &[u64]) -> bool {
        beta.len() == self.domain.num_blocks()
            && (0..self.codomain.num_blocks()).all(|j| {
                let support = self.block_support(j);
                let weights: BTreeSet<u64> = support.iter().map(|a| weight(a, beta)).collect();
                weights.len() == support.len()
            })
    }

    /// A weight vector with the separation property: geometric weights
    /// `(1, M, M^2, ..)` with `M` one more than the largest total degree,
    /// falling back to random weights.
    pub fn choose_generic_beta<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        let n = self.domain.num_blocks();
        let max_deg = self.components.iter().filter_map(Poly::total_degree).max().unwrap_or(0) as u64;
        let m = max_deg + 1;
        let beta: Vec<u64> = (0..n).map(|i| m.pow(i as u32)).collect();
        if self.beta_separates(&beta) {
            return beta;
        }
        loop {
            let beta: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=64)).collect();
            if self.beta_separates(&beta) {
                return beta;
            }
        }
    }

    /// Keeps in each block only the part of maximal `beta`-weight.
    pub fn phi_max(&self, beta: &[u64]) -> Result<PolyMap, CovariantError> {
        if beta.len() != self.domain.num_blocks() {
            return Err(CovariantError::BlockMismatch(format!(
                "weight vector has {} entries for {} domain blocks",
                beta.len(),
                self.domain.num_blocks()
            )));
        }
        let mut components = self.components.clone();
        for j in 0..self.codomain.num_blocks() {
            let support = self.block_support(j);
            let weights: BTreeSet<u64> = support.iter().map(|a| weight(a, beta)).collect();
            if weights.len() != support.len() {
                return Err(CovariantError::BetaNotSeparating(j));
            }
            let Some(&h) = weights.iter().next_back() else { continue };
            for c in self.codomain.block_range(j) {
                let p = &self.components[c];
                components[c] = Poly::from_terms(
                    p.nvars(),
                    p.terms()
                        .filter(|(m, _)| weight(&self.multidegree(&m.0), beta) == h)
                        .map(|(m, c)| (m.0.clone(), c.clone())),
                );
            }
        }
        PolyMap::new(self.domain.clone(), self.codomain.clone(), components)
    }

    /// `self o inner`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap, CovariantError> {
        if self.domain != inner.codomain {
            return Err(CovariantError::BlockMismatch(format!(
                "outer domain {:?} differs from inner codomain {:?}",
                self.domain.block_dims(),
                inner.codomain.block_dims()
            )));
        }
        let components = self.components.iter().map(|p| p.substitute(&inner.components)).collect();
        PolyMap::new(inner.domain.clone(), self.codomain.clone(), components)
    }

    pub fn evaluate(&self, point: &[CycNumber]) -> Vec<CycNumber> {
        self.components.iter().map(|p| p.eval(point)).collect()
    }

    /// Keeps the first `k` codomain blocks.
    pub fn truncate(&self, k: usize) -> Result<PolyMap, CovariantError> {
        let dims = self.codomain.block_dims()[..k].to_vec();
        let cod = GradedSpace::new(dims)?;
        let n = cod.total_dim();
        PolyMap::new(self.domain.clone(), cod, self.components[..n].to_vec())
    }

    /// Concatenates the codomains of two maps on the same domain.
    pub fn stack(&self, other: &PolyMap) -> Result<PolyMap, CovariantError> {
        if self.domain != other.domain {
            return Err(CovariantError::BlockMismatch("maps have different domains".into()));
        }
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        PolyMap::new(self.domain.clone(), self.codomain.extend(&other.codomain), components)
    }

    /// Multiplies every coordinate of codomain block `j` by `factors[j]`.
    fn scale_blocks(&self, factors: &[Poly]) -> Vec<Poly> {
        let mut out = self.components.clone();
        for (j, f) in factors.iter().enumerate() {
            for c in self.codomain.block_range(j) {
                out[c] = &self.components[c] * f;
            }
        }
        out
    }
}

fn weight(alpha: &[u32], beta: &[u64]) -> u64 {
    alpha.iter().zip(beta).map(|(&a, &b)| a as u64 * b).sum()
}

/// Multidegree of a polynomial with respect to `space`, if it has one.
pub fn poly_multidegree(p: &Poly, space: &GradedSpace) -> Option<Vec<u32>> {
    let mut out: Option<Vec<u32>> = None;
    for (m, _) in p.terms() {
        let d: Vec<u32> = (0..space.num_blocks()).map(|b| m.0[space.block_range(b)].iter().sum()).collect();
        match &out {
            None => out = Some(d),
            Some(prev) if *prev != d => return None,
            _ => {}
        }
    }
    out
}

/// `psi = h^-1 phi` with a single polynomial denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolyMap {
    numerator: PolyMap,
    denominator: Poly,
}

impl RationalPolyMap {
    pub fn new(numerator: PolyMap, denominator: Poly) -> Result<Self, CovariantError> {
        if denominator.is_zero() {
            return Err(CovariantError::DivisionByZero);
        }
        if denominator.nvars() != numerator.nvars() {
            return Err(CovariantError::BlockMismatch("denominator lives in a different space".into()));
        }
        Ok(Self { numerator, denominator })
    }

    pub fn regular(map: PolyMap) -> Self {
        let n = map.nvars();
        Self { numerator: map, denominator: Poly::one(n) }
    }

    pub fn numerator(&self) -> &PolyMap {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    /// Degree matrix of numerator minus the denominator's multidegree in
    /// every row.
    pub fn degree_matrix(&self) -> Result<DegreeMatrix, CovariantError> {
        let a = self.numerator.degree_matrix()?;
        let h = poly_multidegree(&self.denominator, self.numerator.domain()).ok_or_else(|| {
            CovariantError::Precondition("denominator is not multihomogeneous".into())
        })?;
        let rows = a
            .entries()
            .iter()
            .map(|r| r.iter().zip(&h).map(|(x, &y)| x - y as i64).collect())
            .collect();
        Ok(DegreeMatrix::new(rows))
    }

    pub fn evaluate(&self, point: &[CycNumber]) -> Result<Vec<CycNumber>, CovariantError> {
        let h = self.denominator.eval(point);
        let inv = h.inverse().map_err(|_| CovariantError::DivisionByZero)?;
        Ok(self.numerator.evaluate(point).iter().map(|v| v * &inv).collect())
    }
}

fn check_twist(phi: &PolyMap, f: &Poly, mu: &[i64], rho_v: Option<&MatrixRep>) -> Result<(), CovariantError> {
    let a = phi.degree_matrix()?;
    if mu.len() != a.rows() || !a.column_space_contains(mu) {
        return Err(CovariantError::MuNotInColumnSpace);
    }
    if f.nvars() != phi.nvars() || f.is_zero() {
        return Err(CovariantError::Precondition("twisting polynomial must be a nonzero function on the domain".into()));
    }
    if let Some(rho) = rho_v {
        if !is_invariant(f, rho) {
            return Err(CovariantError::NotInvariant);
        }
    }
    Ok(())
}

/// `(f^mu_1 phi_1, .., f^mu_m phi_m)` for `mu` in the rational column space
/// of the degree matrix. Invariance of `f` is checked when `rho_v` is given.
pub fn twist_by_invariant(
    phi: &PolyMap,
    f: &Poly,
    mu: &[i64],
    rho_v: Option<&MatrixRep>,
) -> Result<PolyMap, CovariantError> {
    check_twist(phi, f, mu, rho_v)?;
    if mu.iter().any(|&m| m < 0) {
        return Err(CovariantError::Precondition(
            "negative twist exponents give a rational map; use twist_rational".into(),
        ));
    }
    let factors: Vec<Poly> = mu.iter().map(|&m| f.pow(m as u32)).collect();
    PolyMap::new(phi.domain.clone(), phi.codomain.clone(), phi.scale_blocks(&factors))
}

/// Twist allowing negative exponents; the common denominator is
/// `f^s` with `s = max(-mu_j, 0)`.
pub fn twist_rational(
    phi: &PolyMap,
    f: &Poly,
    mu: &[i64],
    rho_v: Option<&MatrixRep>,
) -> Result<RationalPolyMap, CovariantError> {
    check_twist(phi, f, mu, rho_v)?;
    let s = mu.iter().map(|&m| (-m).max(0)).max().unwrap_or(0);
    let factors: Vec<Poly> = mu.iter().map(|&m| f.pow((m + s) as u32)).collect();
    let num = PolyMap::new(phi.domain.clone(), phi.codomain.clone(), phi.scale_blocks(&factors))?;
    RationalPolyMap::new(num, f.pow(s as u32))
}

/// `(f psi, f)` with `f` the denominator: a regular map into the codomain
/// extended by a one-dimensional block.
pub fn regularize(psi: &RationalPolyMap) -> Result<PolyMap, CovariantError> {
    regularize_with(psi, &psi.denominator)
}

/// `(f psi, f)` for a given `f` such that `f psi` is regular.
pub fn regularize_with(psi: &RationalPolyMap, f: &Poly) -> Result<PolyMap, CovariantError> {
    let num = &psi.numerator;
    let mut components = Vec::with_capacity(num.components.len() + 1);
    for p in &num.components {
        let q = (p * f)
            .div_exact(&psi.denominator)
            .ok_or_else(|| CovariantError::Precondition("f times the map is not regular".into()))?;
        components.push(q);
    }
    components.push(f.clone());
    let cod = num.codomain.extend(&GradedSpace::new(vec![1])?);
    PolyMap::new(num.domain.clone(), cod, components)
}
