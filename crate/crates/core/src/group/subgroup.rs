use std::fmt;

use fixedbitset::FixedBitSet;

use super::FiniteGroup;
use crate::error::GroupError;

/// A subgroup of a [`FiniteGroup`], stored as a bitset over element indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: FixedBitSet,
    generators: Vec<usize>,
}

impl Subgroup {
    /// The subgroup generated by `gens` (element indices of `parent`).
    pub fn generated_by(parent: &FiniteGroup, gens: &[usize]) -> Self {
        let mut h = Self::trivial(parent);
        for &g in gens {
            h.adjoin(g);
        }
        h
    }

    pub fn trivial(parent: &FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(parent.order());
        members.insert(0);
        Self { parent: parent.clone(), members, generators: Vec::new() }
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(parent.order());
        members.insert_range(..);
        Self { parent: parent.clone(), members, generators: parent.generator_indices().to_vec() }
    }

    /// Builds a subgroup from a member set that is already known to be closed.
    pub(crate) fn from_closed_set(parent: &FiniteGroup, members: FixedBitSet) -> Self {
        let mut h = Self::trivial(parent);
        for x in members.ones() {
            if !h.contains(x) {
                h.adjoin(x);
            }
        }
        debug_assert_eq!(h.members, members);
        h
    }

    /// Adds `x` to the generating set and closes up.
    pub fn adjoin(&mut self, x: usize) {
        if self.members.contains(x) {
            return;
        }
        self.generators.push(x);
        let g = &self.parent;
        let mut list: Vec<usize> = self.members.ones().collect();
        let mut k = 0;
        // Every product of old elements with the generators is either old or
        // reached from a new element, so scanning the full list once suffices.
        while k < list.len() {
            let a = list[k];
            for &s in &self.generators {
                let b = g.mul(a, s);
                if !self.members.contains(b) {
                    self.members.insert(b);
                    list.push(b);
                }
            }
            k += 1;
        }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        self.generators.iter().all(|&h| {
            g.generator_indices()
                .iter()
                .all(|&s| self.contains(g.conj(h, s)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commutes(a, b)))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Subgroup::from_closed_set(&self.parent, m)
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut h = self.clone();
        for &x in &other.generators {
            h.adjoin(x);
        }
        h
    }

    /// The subgroup as a permutation group in its own right, on the parent's
    /// points.
    pub fn to_group(&self) -> Result<FiniteGroup, GroupError> {
        let gens = self
            .generators
            .iter()
            .map(|&i| self.parent.element(i).clone())
            .collect();
        FiniteGroup::with_cap(self.parent.degree(), gens, self.parent.order_cap())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.ptr_eq(&other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|&i| self.parent.element(i).to_string())
            .collect();
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("generators", &gens)
            .finish()
    }
}
