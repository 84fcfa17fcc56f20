//! Independent reference computations.

use std::collections::HashSet;

use covdim::cyclotomic::CycNumber;
use covdim::reps::CharacterTable;
use covdim::{FiniteGroup, Subgroup};

fn primes_of(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Invariant factors `n_1 | n_2 | ..` of every abelian group of order
/// `2..=max`, built from partitions of the prime exponents.
pub fn abelian_groups(max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for n in 2..=max {
        let mut acc: Vec<Vec<usize>> = vec![vec![]];
        for (p, e) in primes_of(n) {
            let mut next = Vec::new();
            for part in partitions(e, e) {
                for a in &acc {
                    // part is decreasing; align from the largest factor
                    let len = a.len().max(part.len());
                    let mut merged = vec![1usize; len];
                    for (i, v) in a.iter().rev().enumerate() {
                        merged[len - 1 - i] *= v;
                    }
                    for (i, &k) in part.iter().enumerate() {
                        merged[len - 1 - i] *= p.pow(k);
                    }
                    next.push(merged);
                }
            }
            acc = next;
        }
        out.extend(acc);
    }
    out
}

pub fn mult_order(r: u64, m: u64) -> u64 {
    let mut x = r % m;
    let mut k = 1;
    while x != 1 {
        x = x * r % m;
        k += 1;
    }
    k
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest first,
/// by dividing `x^n - 1` by the polynomials of the proper divisors.
fn cyclotomic(n: usize) -> Vec<i64> {
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let den = cyclotomic(d);
        let mut q = vec![0i64; num.len() - den.len() + 1];
        for i in (0..q.len()).rev() {
            let c = num[i + den.len() - 1];
            q[i] = c;
            for (j, &b) in den.iter().enumerate() {
                num[i + j] -= c * b;
            }
        }
        num = q;
    }
    num
}

/// Reduces an element of `Z[x]/(x^e - 1)` modulo the `e`-th cyclotomic
/// polynomial.
fn reduce(mut v: Vec<i64>, phi: &[i64]) -> Vec<i64> {
    let d = phi.len() - 1;
    for i in (d..v.len()).rev() {
        let c = v[i];
        if c != 0 {
            for (j, &b) in phi.iter().enumerate() {
                v[i - d + j] -= c * b;
            }
        }
    }
    v.truncate(d);
    v
}

/// Both orthogonality relations, computed exactly in `Z[zeta_e]`. Each
/// value is written as the sum of the eigenvalues of a representing matrix,
/// after checking that this sum is the stated value.
pub fn orthogonality(t: &CharacterTable) -> Result<(), String> {
    let order = t.group().order() as i64;
    let e = t.exponent() as usize;
    let phi = cyclotomic(e);
    let classes = t.classes();
    let chars = t.irreducibles();
    if chars.len() != classes.len() {
        return Err("table is not square".into());
    }
    let mut roots: Vec<Vec<Vec<(usize, i64)>>> = Vec::new();
    for (a, x) in chars.iter().enumerate() {
        let mut row = Vec::new();
        for c in 0..classes.len() {
            let eig = x.eigenvalues(c);
            let mut counts = vec![0i64; e];
            for &(k, m) in eig {
                counts[k as usize] += m as i64;
            }
            if counts.iter().sum::<i64>() != x.degree() as i64 || CycNumber::from_root_counts(e as u32, &counts) != *x.value(c) {
                return Err(format!("eigenvalues of character {a} on class {c}"));
            }
            row.push(eig.iter().map(|&(k, m)| (k as usize, m as i64)).collect());
        }
        roots.push(row);
    }
    // sum of w * x * conj(y) over the listed triples, compared with `want`
    let check = |terms: &mut dyn Iterator<Item = (i64, &Vec<(usize, i64)>, &Vec<(usize, i64)>)>, want: i64| {
        let mut acc = vec![0i64; e];
        for (w, x, y) in terms {
            for &(i, m) in x {
                for &(j, n) in y {
                    acc[(i + e - j) % e] += w * m * n;
                }
            }
        }
        let mut r = reduce(acc, &phi);
        r[0] -= want;
        r.iter().all(|&v| v == 0)
    };
    for a in 0..chars.len() {
        for b in 0..chars.len() {
            let want = if a == b { order } else { 0 };
            let mut it = (0..classes.len()).map(|c| (classes[c].size() as i64, &roots[a][c], &roots[b][c]));
            if !check(&mut it, want) {
                return Err(format!("rows {a} and {b}"));
            }
        }
    }
    for c in 0..classes.len() {
        for d in 0..classes.len() {
            let want = if c == d { order / classes[c].size() as i64 } else { 0 };
            let mut it = (0..chars.len()).map(|a| (1, &roots[a][c], &roots[a][d]));
            if !check(&mut it, want) {
                return Err(format!("columns {c} and {d}"));
            }
        }
    }
    Ok(())
}

/// Smallest total degree of a set of irreducibles whose kernels meet
/// trivially, by trying every subset in order of size. A kernel is the set
/// of classes where the character takes the value of its degree. Subsets
/// with more members than the best degree so far cannot improve it.
pub fn brute_min_faithful(t: &CharacterTable) -> u64 {
    let chars = t.irreducibles();
    let classes = t.classes().len();
    let id = t.classes().iter().position(|c| c.representative == 0).unwrap();
    let kernels: Vec<Vec<bool>> = chars
        .iter()
        .map(|x| (0..classes).map(|c| *x.value(c) == *x.value(id)).collect())
        .collect();
    let mut best = u64::MAX;
    let mut size = 1;
    while size <= chars.len() && (size as u64) < best {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let faithful = (0..classes).all(|c| c == id || pick.iter().any(|&i| !kernels[i][c]));
            if faithful {
                best = best.min(pick.iter().map(|&i| chars[i].degree()).sum());
            }
            // next combination
            let Some(i) = (0..size).rev().find(|&i| pick[i] < chars.len() - size + i) else { break };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
        size += 1;
    }
    best
}

/// Elements commuting with every element.
pub fn naive_center(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order()).filter(|&x| (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x))).collect()
}

/// Every subgroup containing `base`, by repeatedly adjoining elements.
pub fn overgroups(base: &Subgroup) -> Vec<Subgroup> {
    let g = base.parent().clone();
    let key = |s: &Subgroup| s.elements().collect::<Vec<_>>();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([key(base)]);
    let mut out = vec![base.clone()];
    let mut frontier = vec![base.clone()];
    while let Some(s) = frontier.pop() {
        for x in 0..g.order() {
            if s.contains(x) {
                continue;
            }
            let mut t = s.clone();
            t.adjoin(x);
            if seen.insert(key(&t)) {
                out.push(t.clone());
                frontier.push(t);
            }
        }
    }
    out
}

/// Exact determinant of a small integer matrix (fraction-free elimination).
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| a[r][k] != 0) else { return 0 };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub fn mat_mul(b: &[Vec<i64>], a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    b.iter().map(|row| (0..a[0].len()).map(|c| row.iter().zip(a).map(|(x, r)| x * r[c]).sum()).collect()).collect()
}

pub fn rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect();
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())) else { break };
        if a[p][c].abs() < 1e-9 {
            continue;
        }
        a.swap(p, r);
        for i in 0..rows {
            if i != r {
                let f = a[i][c] / a[r][c];
                for j in c..cols {
                    a[i][j] -= f * a[r][j];
                }
            }
        }
        r += 1;
    }
    r
}
