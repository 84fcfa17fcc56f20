use super::products::direct_product;
use super::FiniteGroup;
use crate::error::GroupError;
use crate::perm::Permutation;

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n <= 1 {
        return Ok(FiniteGroup::trivial());
    }
    let images = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    FiniteGroup::new(n, vec![Permutation::from_images(images)?])
}

/// Symmetric group on `n` points, generated by `(1 2)` and `(1 2 .. n)`.
pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n <= 1 {
        return Ok(FiniteGroup::trivial());
    }
    let t = Permutation::from_cycles(n, &[vec![0, 1]])?;
    if n == 2 {
        return FiniteGroup::new(n, vec![t]);
    }
    let c = Permutation::from_cycles(n, &[(0..n as u32).collect()])?;
    FiniteGroup::new(n, vec![t, c])
}

/// Alternating group on `n` points, generated by `(1 2 3)` and an
/// `(n-1)`- or `n`-cycle of even parity.
pub fn alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    if n <= 2 {
        return Ok(FiniteGroup::trivial());
    }
    let t = Permutation::from_cycles(n, &[vec![0, 1, 2]])?;
    if n == 3 {
        return FiniteGroup::new(n, vec![t]);
    }
    let long: Vec<u32> = if n % 2 == 1 { (0..n as u32).collect() } else { (1..n as u32).collect() };
    let c = Permutation::from_cycles(n, &[long])?;
    FiniteGroup::new(n, vec![t, c])
}

/// Dihedral group of order `order` (even, at least 4), generated by a
/// rotation and a reflection. Order 4 is the Klein four-group on 4 points.
pub fn dihedral(order: usize) -> Result<FiniteGroup, GroupError> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(GroupError::NotAPermutation(format!("no dihedral group of order {order}")));
    }
    let m = order / 2;
    if m == 2 {
        let r = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?;
        let s = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]])?;
        return FiniteGroup::new(4, vec![r, s]);
    }
    let r = Permutation::from_images((0..m as u32).map(|i| (i + 1) % m as u32).collect())?;
    let s = Permutation::from_images((0..m as u32).map(|i| (m as u32 - i) % m as u32).collect())?;
    FiniteGroup::new(m, vec![r, s])
}

/// Quaternion group of order 8 in its regular representation, generated by
/// `i` and `j`.
pub fn quaternion8() -> Result<FiniteGroup, GroupError> {
    // Points 0..8 stand for 1, i, j, k, -1, -i, -j, -k; generators act by
    // right multiplication.
    let i = Permutation::from_images(vec![1, 4, 7, 2, 5, 0, 3, 6])?;
    let j = Permutation::from_images(vec![2, 3, 4, 5, 6, 7, 0, 1])?;
    FiniteGroup::new(8, vec![i, j])
}

/// `C_{n_1} x ... x C_{n_r}` on disjoint point sets.
pub fn abelian(invariants: &[usize]) -> Result<FiniteGroup, GroupError> {
    let mut g = FiniteGroup::trivial();
    let mut first = true;
    for &n in invariants {
        let c = cyclic(n)?;
        g = if first { c } else { direct_product(&g, &c)? };
        first = false;
    }
    Ok(g)
}

/// `(Z/p)^r`.
pub fn elementary_abelian(p: usize, rank: usize) -> Result<FiniteGroup, GroupError> {
    abelian(&vec![p; rank])
}
