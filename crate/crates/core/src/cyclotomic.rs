//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element is stored in the power basis `1, z, .., z^(phi(N)-1)` modulo
//! the `N`-th cyclotomic polynomial, with `z = exp(2 pi i / N)`. Operands of
//! different conductors are embedded into the field of the least common
//! multiple. Conductor 1 is the rational fast path.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::CovariantError;

/// Data shared by all elements of one conductor.
struct Field {
    phi: usize,
    /// `reduce[k]` is `z^k` in the power basis, `k < n`.
    reduce: Vec<Vec<BigInt>>,
}

fn field(n: u32) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return f.clone();
    }
    let f = Arc::new(build_field(n));
    cache.lock().unwrap().insert(n, f.clone());
    f
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // x^n - 1 = prod_{d | n} Phi_d(x); divide out the proper divisors.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        q[k] = c;
    }
    q
}

fn build_field(n: u32) -> Field {
    let poly = cyclotomic_polynomial(n);
    let phi = poly.len() - 1;
    let mut reduce = Vec::with_capacity(n as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..n {
        reduce.push(cur.clone());
        // multiply by z and reduce the top coefficient
        let top = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for i in 0..phi {
                cur[i] -= &top * &poly[i];
            }
        }
    }
    Field { phi, reduce }
}

pub fn euler_phi(n: u32) -> usize {
    field(n).phi
}

/// An element of `Q(zeta_N)`.
#[derive(Clone)]
pub struct CycNumber {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::rational(BigRational::from_integer(v.into()))
    }

    pub fn rational(q: BigRational) -> Self {
        Self { conductor: 1, coeffs: vec![q] }
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let mut c = vec![BigRational::zero(); n as usize];
        c[k.rem_euclid(n as i64) as usize] = BigRational::one();
        Self::from_exponent_coeffs(n, &c)
    }

    /// `sum_k c[k] zeta_n^k` for arbitrary `k`, reduced to the power basis.
    pub fn from_exponent_coeffs(n: u32, c: &[BigRational]) -> Self {
        let f = field(n);
        let mut coeffs = vec![BigRational::zero(); f.phi];
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (i, r) in f.reduce[k % n as usize].iter().enumerate() {
                if !r.is_zero() {
                    coeffs[i] += ck * BigRational::from_integer(r.clone());
                }
            }
        }
        Self { conductor: n, coeffs }
    }

    /// Integer sum of roots of unity `sum_k m[k] zeta_n^k`.
    pub fn from_root_counts(n: u32, m: &[i64]) -> Self {
        let c: Vec<BigRational> = m.iter().map(|&v| BigRational::from_integer(v.into())).collect();
        Self::from_exponent_coeffs(n, &c)
    }

    /// Builds from power-basis coefficients; `coeffs.len()` must be `phi(n)`.
    pub fn from_power_basis(n: u32, coeffs: Vec<BigRational>) -> Result<Self, CovariantError> {
        if coeffs.len() != euler_phi(n) {
            return Err(CovariantError::Format(format!(
                "conductor {n} needs {} coefficients, got {}",
                euler_phi(n),
                coeffs.len()
            )));
        }
        Ok(Self { conductor: n, coeffs })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image in `Q(zeta_m)` for a multiple `m` of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        assert!(m.is_multiple_of(self.conductor), "conductor {} does not divide {m}", self.conductor);
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut c = vec![BigRational::zero(); m as usize];
        for (i, ci) in self.coeffs.iter().enumerate() {
            c[i * step] = ci.clone();
        }
        Self::from_exponent_coeffs(m, &c)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let m = self.conductor.lcm(&other.conductor);
        (self.embed(m), other.embed(m))
    }

    /// Galois automorphism `zeta -> zeta^k`, `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        let mut c = vec![BigRational::zero(); n as usize];
        for (i, ci) in self.coeffs.iter().enumerate() {
            let e = (i as i64 * k).rem_euclid(n as i64) as usize;
            c[e] += ci;
        }
        Self::from_exponent_coeffs(n, &c)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CycNumber::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse, by solving `self * x = 1` in the power basis.
    pub fn inverse(&self) -> Result<Self, CovariantError> {
        if self.is_zero() {
            return Err(CovariantError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self { conductor: self.conductor, coeffs: pad(q.recip(), self.coeffs.len()) });
        }
        let n = self.conductor;
        let phi = self.coeffs.len();
        // column j of the multiplication matrix is self * z^j
        let cols: Vec<CycNumber> = (0..phi)
            .map(|j| self * &CycNumber::root_of_unity(n, j as i64))
            .collect();
        let mut m: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<BigRational> = cols.iter().map(|c| c.coeffs[i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero()).ok_or(CovariantError::DivisionByZero)?;
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for v in m[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (a, b) in m[r].iter_mut().zip(pivot_row.iter()) {
                        *a -= &f * b;
                    }
                }
            }
        }
        Ok(Self { conductor: n, coeffs: m.into_iter().map(|row| row[phi].clone()).collect() })
    }

    pub fn div(&self, other: &Self) -> Result<Self, CovariantError> {
        Ok(self * &other.inverse()?)
    }
}

fn pad(q: BigRational, len: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); len];
    v[0] = q;
    v
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNumber {}

impl From<i64> for CycNumber {
    fn from(v: i64) -> Self {
        CycNumber::from_int(v)
    }
}

impl From<BigRational> for CycNumber {
    fn from(q: BigRational) -> Self {
        CycNumber::rational(q)
    }
}

impl Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        if self.conductor == rhs.conductor {
            return CycNumber {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            };
        }
        let (a, b) = self.common(rhs);
        &a + &b
    }
}

impl Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        if self.conductor != rhs.conductor {
            let (a, b) = self.common(rhs);
            return &a * &b;
        }
        let n = self.conductor;
        if self.coeffs.len() == 1 {
            return CycNumber { conductor: n, coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        let mut c = vec![BigRational::zero(); n as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[(i + j) % n as usize] += a * b;
                }
            }
        }
        CycNumber::from_exponent_coeffs(n, &c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for CycNumber {
            type Output = CycNumber;
            fn $f(self, rhs: CycNumber) -> CycNumber {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Canonical text form: terms by descending power of `z`, e.g.
/// `1/2*z^3 - 2`. The conductor is not part of the string.
impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let zpart = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&zpart)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), zpart)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (N={})", self, self.conductor)
    }
}

impl CycNumber {
    /// Parses a sum of terms `[sign] [rational] [*] [z[^k]]` in `Q(zeta_n)`.
    pub fn parse(text: &str, n: u32) -> Result<Self, CovariantError> {
        let err = |m: &str| CovariantError::Format(format!("bad cyclotomic number {text:?}: {m}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty"));
        }
        let mut coeffs = vec![BigRational::zero(); n as usize];
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigRational::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                i += 1;
            }
            let coeff = if start == i {
                BigRational::one()
            } else {
                BigRational::from_str(&s[start..i]).map_err(|_| err("bad rational"))?
            };
            let mut power = 0u64;
            let has_num = start != i;
            if i < bytes.len() && bytes[i] == b'*' {
                if !has_num {
                    return Err(err("dangling '*'"));
                }
                i += 1;
                if i >= bytes.len() || bytes[i] != b'z' {
                    return Err(err("expected z after '*'"));
                }
            }
            if i < bytes.len() && bytes[i] == b'z' {
                i += 1;
                power = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let ps = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    power = s[ps..i].parse().map_err(|_| err("bad exponent"))?;
                }
            } else if !has_num {
                return Err(err("expected a number or z"));
            }
            if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                return Err(err("unexpected character"));
            }
            coeffs[(power % n as u64) as usize] += sign * coeff;
        }
        Ok(Self::from_exponent_coeffs(n, &coeffs))
    }

    /// Approximate complex value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN);
            let a = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += v * a.cos();
            im += v * a.sin();
        }
        (re, im)
    }
}
