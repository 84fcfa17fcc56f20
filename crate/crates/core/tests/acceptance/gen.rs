//! Random maps, representations of small groups and the projection onto
//! equivariant maps.

use covdim::covariant::{CycMatrix, GradedSpace, MatrixRep, Poly, PolyMap};
use covdim::cyclotomic::CycNumber;
use covdim::FiniteGroup;
use rand::Rng;

pub fn int(v: i64) -> CycNumber {
    CycNumber::from_int(v)
}

pub fn coeff<R: Rng>(rng: &mut R) -> CycNumber {
    let v = rng.gen_range(1..=5);
    int(if rng.gen_bool(0.5) { v } else { -v })
}

pub fn space<R: Rng>(rng: &mut R, blocks: std::ops::RangeInclusive<usize>, dims: std::ops::RangeInclusive<usize>) -> GradedSpace {
    let n = rng.gen_range(blocks);
    GradedSpace::new((0..n).map(|_| rng.gen_range(dims.clone())).collect()).unwrap()
}

/// Exponent vector whose degree in block `b` is `md[b]`.
pub fn monomial<R: Rng>(rng: &mut R, sp: &GradedSpace, md: &[u32]) -> Vec<u32> {
    let mut e = vec![0u32; sp.total_dim()];
    for (b, &d) in md.iter().enumerate() {
        let r = sp.block_range(b);
        for _ in 0..d {
            e[rng.gen_range(r.clone())] += 1;
        }
    }
    e
}

/// Nonzero polynomial with every term of block multidegree `md`.
pub fn homogeneous_poly<R: Rng>(rng: &mut R, sp: &GradedSpace, md: &[u32], terms: usize) -> Poly {
    loop {
        let p = Poly::from_terms(sp.total_dim(), (0..terms).map(|_| (monomial(rng, sp, md), coeff(rng))));
        if !p.is_zero() {
            return p;
        }
    }
}

/// `rows[j][i]` is the degree of codomain block `j` in domain block `i`.
/// With `dependent`, coordinates after the first in a block are multiples
/// of the first, so the block has one-dimensional image.
pub fn multihomogeneous_map<R: Rng>(
    rng: &mut R,
    domain: &GradedSpace,
    codomain: &GradedSpace,
    rows: &[Vec<u32>],
    dependent: bool,
) -> PolyMap {
    let mut comps = Vec::new();
    for (j, md) in rows.iter().enumerate() {
        let terms = rng.gen_range(1..=3);
        let first = homogeneous_poly(rng, domain, md, terms);
        for c in 0..codomain.block_dims()[j] {
            let p = match (c, dependent) {
                (0, _) => first.clone(),
                (_, true) => first.scale(&coeff(rng)),
                (_, false) => {
                    let terms = rng.gen_range(1..=3);
                    homogeneous_poly(rng, domain, md, terms)
                }
            };
            comps.push(p);
        }
    }
    PolyMap::new(domain.clone(), codomain.clone(), comps).unwrap()
}

/// `m x n` degree rows with entries up to `max`, each row nonzero.
pub fn degree_rows<R: Rng>(rng: &mut R, m: usize, n: usize, max: u32) -> Vec<Vec<u32>> {
    (0..m)
        .map(|_| loop {
            let row: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
            if row.iter().any(|&v| v > 0) {
                break row;
            }
        })
        .collect()
}

/// Sparse map with terms of total degree `1..=max_deg`, no coordinate zero.
pub fn sparse_map<R: Rng>(rng: &mut R, domain: &GradedSpace, codomain: &GradedSpace, max_deg: u32) -> PolyMap {
    let n = domain.total_dim();
    let comps = (0..codomain.total_dim())
        .map(|_| loop {
            let terms = (0..rng.gen_range(1..=4)).map(|_| {
                let d = rng.gen_range(1..=max_deg);
                let mut e = vec![0u32; n];
                for _ in 0..d {
                    e[rng.gen_range(0..n)] += 1;
                }
                (e, coeff(rng))
            });
            let p = Poly::from_terms(n, terms);
            if !p.is_zero() {
                break p;
            }
        })
        .collect();
    PolyMap::new(domain.clone(), codomain.clone(), comps).unwrap()
}

/// `1/|G| sum_g rho_w(g)^-1 phi(rho_v(g) x)`, an equivariant map.
pub fn equivariant_projection(phi: &PolyMap, rho_v: &MatrixRep, rho_w: &MatrixRep) -> PolyMap {
    let g = rho_v.group();
    let n = phi.nvars();
    let mut out = vec![Poly::zero(n); phi.components().len()];
    for x in 0..g.order() {
        let subs = rho_v.substitution(x);
        let moved: Vec<Poly> = phi.components().iter().map(|p| p.substitute(&subs)).collect();
        let back = rho_w.matrix(g.inv(x));
        for (i, row) in back.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out[i] = &out[i] + &moved[k].scale(c);
                }
            }
        }
    }
    let scale = CycNumber::rational(num_rational::BigRational::new(1.into(), (g.order() as i64).into()));
    let comps = out.iter().map(|p| p.scale(&scale)).collect();
    PolyMap::new(phi.domain().clone(), phi.codomain().clone(), comps).unwrap()
}

/// The permutation representation, repeated on `copies` blocks.
pub fn permutation_rep(g: &FiniteGroup, copies: usize) -> MatrixRep {
    let n = g.degree();
    let sp = GradedSpace::new(vec![n; copies]).unwrap();
    let mats: Vec<Vec<CycMatrix>> = g
        .generators()
        .iter()
        .map(|p| {
            let mut m = vec![vec![int(0); n]; n];
            for j in 0..n {
                m[p.image(j)][j] = int(1);
            }
            vec![m; copies]
        })
        .collect();
    MatrixRep::new(g, &sp, mats).unwrap()
}

fn root(n: u32, k: i64) -> CycNumber {
    CycNumber::root_of_unity(n, k)
}

/// A faithful irreducible representation of a small group, given as one
/// matrix per generator: `C_n` by a primitive root, `D8` by the square's
/// symmetries and `Q8` by the Pauli-type matrices.
pub fn factor_rep(spec: &str) -> (FiniteGroup, Vec<CycMatrix>) {
    let g = covdim::dsl::group_from_spec(spec).unwrap();
    let z = |v: i64| int(v);
    let mats = match spec {
        "D8" => vec![vec![vec![z(0), z(-1)], vec![z(1), z(0)]], vec![vec![z(1), z(0)], vec![z(0), z(-1)]]],
        "Q8" => vec![
            vec![vec![root(4, 1), z(0)], vec![z(0), root(4, 3)]],
            vec![vec![z(0), z(-1)], vec![z(1), z(0)]],
        ],
        c => {
            let n: u32 = c[1..].parse().unwrap();
            vec![vec![vec![root(n, 1)]]]
        }
    };
    (g, mats)
}

/// `G_1 x .. x G_n` acting on `V_1 + .. + V_n`, each factor on its block.
pub fn product_rep(specs: &[&str]) -> (Vec<FiniteGroup>, FiniteGroup, MatrixRep) {
    let parts: Vec<(FiniteGroup, Vec<CycMatrix>)> = specs.iter().map(|s| factor_rep(s)).collect();
    let factors: Vec<FiniteGroup> = parts.iter().map(|(g, _)| g.clone()).collect();
    let g = covdim::group::direct_product_many(&factors).unwrap();
    let dims: Vec<usize> = parts.iter().map(|(_, m)| m[0].len()).collect();
    let sp = GradedSpace::new(dims.clone()).unwrap();
    let ident = |d: usize| -> CycMatrix { (0..d).map(|i| (0..d).map(|j| int(i64::from(i == j))).collect()).collect() };
    let mut gens = Vec::new();
    for (f, (_, mats)) in parts.iter().enumerate() {
        for m in mats {
            gens.push((0..dims.len()).map(|b| if b == f { m.clone() } else { ident(dims[b]) }).collect());
        }
    }
    let rho = MatrixRep::new(&g, &sp, gens).unwrap();
    (factors, g, rho)
}
