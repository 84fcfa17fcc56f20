use std::fmt;

use super::products::quotient;
use super::{FiniteGroup, Subgroup};
use crate::error::GroupError;

/// Quotient shapes recognised by [`FiniteGroup::surjects_onto`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurjectionTarget {
    /// Dihedral group of the given order `2n`, `n >= 2`.
    Dihedral(usize),
    A4,
    S4,
    A5,
}

impl fmt::Display for SurjectionTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurjectionTarget::Dihedral(m) => write!(f, "D{m}"),
            SurjectionTarget::A4 => f.write_str("A4"),
            SurjectionTarget::S4 => f.write_str("S4"),
            SurjectionTarget::A5 => f.write_str("A5"),
        }
    }
}

impl SurjectionTarget {
    pub fn order(self) -> usize {
        match self {
            SurjectionTarget::Dihedral(m) => m,
            SurjectionTarget::A4 => 12,
            SurjectionTarget::S4 => 24,
            SurjectionTarget::A5 => 60,
        }
    }

    /// Structural identification of `h` with the target.
    pub fn matches(self, h: &FiniteGroup) -> bool {
        if h.order() != self.order() {
            return false;
        }
        match self {
            SurjectionTarget::Dihedral(m) => m >= 4 && m % 2 == 0 && is_dihedral(h),
            SurjectionTarget::A4 => {
                let d = h.derived_subgroup();
                d.order() == 4 && d.is_abelian() && class_sizes(h) == [1, 3, 4, 4]
            }
            SurjectionTarget::S4 => h.derived_subgroup().order() == 12 && class_sizes(h) == [1, 3, 6, 6, 8],
            SurjectionTarget::A5 => h.derived_subgroup().order() == 60 && class_sizes(h) == [1, 12, 12, 15, 20],
        }
    }
}

fn class_sizes(h: &FiniteGroup) -> Vec<usize> {
    let mut s: Vec<usize> = h.conjugacy_classes().iter().map(|c| c.size()).collect();
    s.sort_unstable();
    s
}

/// A cyclic subgroup of index two and an involution outside it inverting it.
fn is_dihedral(h: &FiniteGroup) -> bool {
    let n = (h.order() / 2) as u64;
    (0..h.order()).filter(|&r| h.element_order(r) == n).any(|r| {
        let rot = Subgroup::generated_by(h, &[r]);
        (0..h.order()).any(|s| {
            h.element_order(s) == 2 && !rot.contains(s) && h.conj(r, s) == h.inv(r)
        })
    })
}

impl FiniteGroup {
    /// Whether some quotient `G/N` is isomorphic to `target`.
    pub fn surjects_onto(&self, target: SurjectionTarget) -> Result<bool, GroupError> {
        Ok(self.surjection_kernel(target)?.is_some())
    }

    /// A normal subgroup `N` with `G/N` isomorphic to `target`.
    pub fn surjection_kernel(&self, target: SurjectionTarget) -> Result<Option<Subgroup>, GroupError> {
        if !self.order().is_multiple_of(target.order()) {
            return Ok(None);
        }
        let want = self.order() / target.order();
        for n in self.normal_subgroups()? {
            if n.order() != want {
                continue;
            }
            let q = quotient(&n)?;
            if target.matches(&q.group) {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// The first quotient onto a dihedral group of order at least 4, `A4`,
    /// `S4` or `A5`, if any.
    pub fn covdim_two_quotient(&self) -> Result<Option<(SurjectionTarget, Subgroup)>, GroupError> {
        for n in self.normal_subgroups()? {
            let m = self.order() / n.order();
            let targets = [
                SurjectionTarget::Dihedral(m),
                SurjectionTarget::A4,
                SurjectionTarget::S4,
                SurjectionTarget::A5,
            ];
            for t in targets {
                if t.order() != m || (matches!(t, SurjectionTarget::Dihedral(_)) && (m < 4 || m % 2 == 1)) {
                    continue;
                }
                let q = quotient(&n)?;
                if t.matches(&q.group) {
                    return Ok(Some((t, n)));
                }
            }
        }
        Ok(None)
    }
}
