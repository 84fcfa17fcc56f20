//! Dixon-Schneider: common eigenvectors of the class-multiplication
//! matrices over `F_q`, then a lift of each character to eigenvalue
//! multiplicities of roots of unity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::RepsError;
use crate::group::FiniteGroup;
use crate::modp::{self, Matrix};

/// Eigenvalue data for one irreducible: for each class, pairs
/// `(t, m)` meaning `zeta_e^t` occurs `m` times.
pub(super) struct RawCharacter {
    pub degree: u64,
    pub eigen: Vec<Vec<(u32, u64)>>,
}

const RANDOM_ATTEMPTS: usize = 24;

/// The prime the table is computed over: smallest `q = 1 (mod e)` above
/// `2 |G|^(3/2)`.
pub(super) fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let bound = (2.0 * (order as f64).powf(1.5)).ceil() as u64;
    modp::prime_congruent_one(exponent, bound)
}

pub(super) fn compute(g: &FiniteGroup) -> Result<(u64, Vec<RawCharacter>), RepsError> {
    let n = g.order() as u64;
    let classes = g.conjugacy_classes();
    let lookup = g.class_lookup();
    let k = classes.len();
    let e = g.exponent();
    let q = dixon_prime(n, e);
    let reps: Vec<usize> = classes.iter().map(|c| c.representative).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let id_class = lookup[0];

    // a[j][i][l] = #{x in C_j : x^-1 z_l in C_i}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (j, cls) in classes.iter().enumerate() {
        for &x in &cls.members {
            let xi = g.inv(x);
            for (l, &z) in reps.iter().enumerate() {
                a[j][lookup[g.mul(xi, z)]][l] += 1;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0xD1C5_0A);
    let identity: Matrix = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut queue = vec![identity];
    let mut lines: Vec<Vec<u64>> = Vec::new();
    while let Some(basis) = queue.pop() {
        if basis.len() == 1 {
            lines.push(basis.into_iter().next().unwrap());
            continue;
        }
        let pieces = split_space(&basis, &a, q, &mut rng)?;
        queue.extend(pieces);
    }

    let inv_class: Vec<usize> = reps.iter().map(|&x| lookup[g.inv(x)]).collect();
    let root = modp::primitive_root(q);
    let z = modp::pow(root, (q - 1) / e, q);
    let zp: Vec<u64> = (0..e).map(|t| modp::pow(z, t, q)).collect();
    let power_classes: Vec<Vec<usize>> = reps
        .iter()
        .map(|&x| {
            let o = g.element_order(x);
            let mut out = Vec::with_capacity(o as usize);
            let mut y = 0usize;
            for _ in 0..o {
                out.push(lookup[y]);
                y = g.mul(y, x);
            }
            out
        })
        .collect();

    let mut chars = Vec::with_capacity(k);
    for v in lines {
        let lead = v[id_class];
        if lead == 0 {
            return Err(RepsError::Table("eigenvector vanishes on the identity class".into()));
        }
        let li = modp::inv(lead, q);
        let omega: Vec<u64> = v.iter().map(|&c| modp::mul(c, li, q)).collect();
        let mut s = 0u64;
        for i in 0..k {
            let t = modp::mul(omega[i], omega[inv_class[i]], q);
            s = (s + modp::mul(t, modp::inv(sizes[i] % q, q), q)) % q;
        }
        if s == 0 {
            return Err(RepsError::Table("degenerate central character".into()));
        }
        let d2 = modp::mul(n % q, modp::inv(s, q), q);
        let degree = (1..)
            .take_while(|d: &u64| d * d <= n)
            .find(|d| d * d % q == d2 && n.is_multiple_of(*d))
            .ok_or_else(|| RepsError::Table("no integer degree matches".into()))?;
        let chi: Vec<u64> = (0..k)
            .map(|i| modp::mul(modp::mul(omega[i], degree, q), modp::inv(sizes[i] % q, q), q))
            .collect();

        let mut eigen = Vec::with_capacity(k);
        for pcs in &power_classes {
            let o = pcs.len() as u64;
            let step = e / o;
            let o_inv = modp::inv(o % q, q);
            let mut row = Vec::new();
            let mut total = 0u64;
            for kk in 0..o {
                let mut acc = 0u64;
                for (l, &c) in pcs.iter().enumerate() {
                    let t = (e - (kk * l as u64 * step) % e) % e;
                    acc = (acc + modp::mul(chi[c], zp[t as usize], q)) % q;
                }
                let m = modp::mul(acc, o_inv, q);
                if m > degree {
                    return Err(RepsError::Table("eigenvalue multiplicity out of range".into()));
                }
                if m > 0 {
                    row.push(((kk * step) as u32, m));
                    total += m;
                }
            }
            if total != degree {
                return Err(RepsError::Table("eigenvalue multiplicities do not sum to the degree".into()));
            }
            eigen.push(row);
        }
        chars.push(RawCharacter { degree, eigen });
    }
    Ok((q, chars))
}

/// Splits the span of `basis` (rows, in reduced echelon form) into common
/// eigenspaces of some matrix in the class algebra.
fn split_space(
    basis: &Matrix,
    a: &[Matrix],
    q: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Matrix>, RepsError> {
    let k = a.len();
    for attempt in 0..RANDOM_ATTEMPTS + k {
        let m: Matrix = if attempt < RANDOM_ATTEMPTS {
            let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..q)).collect();
            let mut m = vec![vec![0u64; k]; k];
            for (j, c) in coeffs.iter().enumerate() {
                if *c == 0 {
                    continue;
                }
                for i in 0..k {
                    for l in 0..k {
                        if a[j][i][l] != 0 {
                            m[i][l] = (m[i][l] + modp::mul(*c, a[j][i][l] % q, q)) % q;
                        }
                    }
                }
            }
            m
        } else {
            a[attempt - RANDOM_ATTEMPTS]
                .iter()
                .map(|r| r.iter().map(|&x| x % q).collect())
                .collect()
        };
        if let Some(pieces) = eigenspaces(basis, &m, q, rng)? {
            return Ok(pieces);
        }
    }
    Err(RepsError::Table("class matrices do not split an eigenspace".into()))
}

fn eigenspaces(
    basis: &Matrix,
    m: &Matrix,
    q: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Vec<Matrix>>, RepsError> {
    let r = basis.len();
    let k = m.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("nonzero basis row"))
        .collect();
    // restricted[t][s]: coordinate t of M b_s
    let mut restricted = vec![vec![0u64; r]; r];
    for (s, b) in basis.iter().enumerate() {
        for (t, &p) in pivots.iter().enumerate() {
            let mut acc = 0u64;
            for l in 0..k {
                if b[l] != 0 {
                    acc = (acc + modp::mul(m[p][l], b[l], q)) % q;
                }
            }
            restricted[t][s] = acc;
        }
    }
    let roots = modp::roots(&modp::charpoly(&restricted, q), q, rng);
    if roots.len() <= 1 {
        return Ok(None);
    }
    let mut pieces = Vec::new();
    let mut dim = 0;
    for lambda in roots {
        let mut shifted = restricted.clone();
        for (t, row) in shifted.iter_mut().enumerate() {
            row[t] = (row[t] + q - lambda) % q;
        }
        let coords = modp::nullspace(&shifted, q);
        dim += coords.len();
        let mut vecs: Matrix = coords
            .iter()
            .map(|y| {
                let mut v = vec![0u64; k];
                for (t, &yt) in y.iter().enumerate() {
                    if yt == 0 {
                        continue;
                    }
                    for l in 0..k {
                        v[l] = (v[l] + modp::mul(yt, basis[t][l], q)) % q;
                    }
                }
                v
            })
            .collect();
        modp::rref(&mut vecs, q);
        pieces.push(vecs);
    }
    if dim != r {
        return Err(RepsError::Table("class algebra is not diagonalizable modulo q".into()));
    }
    Ok(Some(pieces))
}
