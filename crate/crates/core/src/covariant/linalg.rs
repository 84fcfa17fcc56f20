//! Exact Gaussian elimination over cyclotomic fields.

use crate::cyclotomic::CycNumber;

/// Row-reduces in place and returns the rank.
pub fn row_reduce(m: &mut [Vec<CycNumber>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                let t = &f * &m[r][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
        r += 1;
    }
    r
}

pub fn rank(m: &[Vec<CycNumber>]) -> usize {
    row_reduce(&mut m.to_vec())
}

pub fn det(m: &[Vec<CycNumber>]) -> CycNumber {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = CycNumber::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return CycNumber::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = &d * &a[c][c];
        let inv = a[c][c].inverse().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    d
}

/// Some solution of `a x = b`, if one exists.
pub fn solve(a: &[Vec<CycNumber>], b: &[CycNumber]) -> Option<Vec<CycNumber>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<CycNumber>> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let rank = row_reduce(&mut aug);
    let mut x = vec![CycNumber::zero(); cols];
    for row in aug.iter().take(rank) {
        let lead = row.iter().position(|v| !v.is_zero()).unwrap();
        if lead == cols {
            return None;
        }
        x[lead] = row[cols].clone();
    }
    Some(x)
}

pub fn mat_mul(a: &[Vec<CycNumber>], b: &[Vec<CycNumber>]) -> Vec<Vec<CycNumber>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = CycNumber::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<CycNumber>], v: &[CycNumber]) -> Vec<CycNumber> {
    a.iter()
        .map(|row| {
            let mut acc = CycNumber::zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<CycNumber>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { CycNumber::one() } else { CycNumber::zero() }).collect())
        .collect()
}
