//! Arithmetic over prime fields `F_q`, `q < 2^32`: dense linear algebra,
//! characteristic polynomials and root finding.

use rand::Rng;

#[inline]
pub fn mul(a: u64, b: u64, q: u64) -> u64 {
    a * b % q
}

pub fn pow(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b, q);
        }
        b = mul(b, b, q);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, q: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(q));
    pow(a, q - 2, q)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `q > lower` with `q = 1 (mod m)`.
pub fn prime_congruent_one(m: u64, lower: u64) -> u64 {
    let mut q = (lower / m + 1) * m + 1;
    while !is_prime(q) {
        q += m;
    }
    q
}

/// Smallest generator of the multiplicative group of `F_q`.
pub fn primitive_root(q: u64) -> u64 {
    let factors = crate::group::structure::prime_factors(q - 1);
    (2..q)
        .find(|&g| factors.iter().all(|&f| pow(g, (q - 1) / f, q) != 1))
        .expect("prime field has a primitive root")
}

pub type Matrix = Vec<Vec<u64>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix, q: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let iv = inv(m[r][c], q);
        for v in m[r].iter_mut() {
            *v = mul(*v, iv, q);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let t = mul(f, m[r][j], q);
                    m[i][j] = (m[i][j] + q - t) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &Matrix, q: u64) -> Vec<Vec<u64>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.clone();
    let pivots = rref(&mut a, q);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (q - a[r][free]) % q;
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial `det(x I - m)`, constant term first, via
/// reduction to Hessenberg form.
pub fn charpoly(m: &Matrix, q: u64) -> Vec<u64> {
    let n = m.len();
    let mut h = m.clone();
    for c in 0..n.saturating_sub(2) {
        let Some(p) = (c + 1..n).find(|&i| h[i][c] != 0) else { continue };
        if p != c + 1 {
            h.swap(p, c + 1);
            for row in h.iter_mut() {
                row.swap(p, c + 1);
            }
        }
        let iv = inv(h[c + 1][c], q);
        for i in c + 2..n {
            if h[i][c] == 0 {
                continue;
            }
            let f = mul(h[i][c], iv, q);
            // row_i -= f row_{c+1}; col_{c+1} += f col_i
            for j in 0..n {
                let t = mul(f, h[c + 1][j], q);
                h[i][j] = (h[i][j] + q - t) % q;
            }
            for row in h.iter_mut() {
                let t = mul(f, row[i], q);
                row[c + 1] = (row[c + 1] + t) % q;
            }
        }
    }
    // p_k = charpoly of the leading k x k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // (x - h_kk) p_{k}
        let prev = &polys[k];
        let mut next = vec![0u64; prev.len() + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % q;
            next[i] = (next[i] + q - mul(h[k][k], c, q)) % q;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul(prod, h[i + 1][i], q);
            let coef = mul(prod, h[i][k], q);
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = (next[j] + q - mul(coef, c, q)) % q;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn trim(p: &mut Vec<u64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn poly_rem(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv(b[db], q);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let f = mul(r[dr], lead_inv, q);
        for (i, &bc) in b.iter().enumerate() {
            let t = mul(f, bc, q);
            r[dr - db + i] = (r[dr - db + i] + q - t) % q;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], q: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul(x, y, q)) % q;
        }
    }
    poly_rem(&out, m, q)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], q: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, m, q);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, q);
        }
        b = poly_mulmod(&b, &b, m, q);
        e >>= 1;
    }
    acc
}

fn is_zero(p: &[u64]) -> bool {
    p.iter().all(|&c| c == 0)
}

fn poly_gcd(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !is_zero(&b) {
        let r = poly_rem(&a, &b, q);
        a = b;
        b = r;
    }
    let li = inv(*a.last().unwrap(), q);
    a.iter().map(|&c| mul(c, li, q)).collect()
}

/// Distinct roots in `F_q` of a nonzero polynomial, sorted.
pub fn roots<R: Rng>(f: &[u64], q: u64, rng: &mut R) -> Vec<u64> {
    let mut f = f.to_vec();
    trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    let li = inv(*f.last().unwrap(), q);
    let f: Vec<u64> = f.iter().map(|&c| mul(c, li, q)).collect();
    // g = gcd(f, x^q - x) is the product of the distinct linear factors
    let mut xq = poly_powmod(&[0, 1], q, &f, q);
    xq.resize(xq.len().max(2), 0);
    xq[1] = (xq[1] + q - 1) % q;
    let g = poly_gcd(&f, &xq, q);
    let mut out = Vec::new();
    split(g, q, rng, &mut out);
    out.sort_unstable();
    out
}

fn split<R: Rng>(g: Vec<u64>, q: u64, rng: &mut R, out: &mut Vec<u64>) {
    let deg = g.len() - 1;
    match deg {
        0 => {}
        1 => out.push((q - g[0]) % q),
        _ => loop {
            let a = rng.gen_range(0..q);
            let mut h = poly_powmod(&[a, 1], (q - 1) / 2, &g, q);
            h[0] = (h[0] + q - 1) % q;
            if is_zero(&h) {
                continue;
            }
            let d = poly_gcd(&g, &h, q);
            let dd = d.len() - 1;
            if dd > 0 && dd < deg {
                let other = poly_div_exact(&g, &d, q);
                split(d, q, rng, out);
                split(other, q, rng, out);
                return;
            }
        },
    }
}

fn poly_div_exact(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv(b[db], q);
    let mut quo = vec![0u64; a.len() - db];
    for k in (0..quo.len()).rev() {
        let f = mul(r[k + db], lead_inv, q);
        quo[k] = f;
        for (i, &bc) in b.iter().enumerate() {
            let t = mul(f, bc, q);
            r[k + i] = (r[k + i] + q - t) % q;
        }
    }
    quo
}
