//! Structural subgroups: center, derived subgroup, normal closures, minimal
//! normal subgroups and the Gaschutz faithfulness test.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::{FiniteGroup, Subgroup};
use crate::error::GroupError;

/// Limit on the number of normal subgroups [`FiniteGroup::normal_subgroups`]
/// will enumerate.
pub const NORMAL_SUBGROUP_CAP: usize = 10_000;

/// Node budget for the elementary abelian subgroup search behind
/// [`FiniteGroup::p_rank`].
pub const P_RANK_BUDGET: usize = 2_000_000;

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

impl FiniteGroup {
    pub fn center(&self) -> Subgroup {
        let gens = self.generator_indices();
        let mut members = FixedBitSet::with_capacity(self.order());
        for x in 0..self.order() {
            if gens.iter().all(|&s| self.commutes(x, s)) {
                members.insert(x);
            }
        }
        Subgroup::from_closed_set(self, members)
    }

    /// Normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = self.generator_indices();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                comms.push(c);
            }
        }
        self.normal_closure(&comms)
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, set: &[usize]) -> Subgroup {
        let mut h = Subgroup::generated_by(self, set);
        loop {
            let mut grew = false;
            let hgens = h.generators().to_vec();
            for x in hgens {
                for &s in self.generator_indices() {
                    let c = self.conj(x, s);
                    if !h.contains(c) {
                        h.adjoin(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return h;
            }
        }
    }

    /// Normal closures of the class representatives, in class order,
    /// without duplicates.
    fn class_closures(&self) -> Vec<Subgroup> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for c in self.conjugacy_classes() {
            let n = self.normal_closure(&[c.representative]);
            if seen.insert(n.members().clone()) {
                out.push(n);
            }
        }
        out
    }

    /// All minimal normal subgroups. Each is the normal closure of any of its
    /// nonidentity elements.
    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        let closures: Vec<Subgroup> =
            self.class_closures().into_iter().filter(|n| !n.is_trivial()).collect();
        inclusion_minimal(closures)
    }

    /// The inclusion-minimal nontrivial normal abelian subgroups. Each is
    /// elementary abelian.
    pub fn minimal_normal_abelian_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        if self.is_trivial() {
            return Err(GroupError::TrivialGroup);
        }
        let mut seen = HashSet::new();
        let mut candidates = Vec::new();
        for c in self.conjugacy_classes() {
            if !is_prime(self.element_order(c.representative)) {
                continue;
            }
            let n = self.normal_closure(&[c.representative]);
            if n.is_abelian() && seen.insert(n.members().clone()) {
                candidates.push(n);
            }
        }
        Ok(inclusion_minimal(candidates))
    }

    /// `N_G`: the subgroup generated by the minimal normal abelian subgroups.
    pub fn socle_abelian(&self) -> Result<Subgroup, GroupError> {
        let mins = self.minimal_normal_abelian_subgroups()?;
        let mut acc = Subgroup::trivial(self);
        for m in &mins {
            acc = acc.join(m);
        }
        Ok(acc)
    }

    /// Gaschutz's criterion: `G` has a faithful irreducible representation iff
    /// `N_G` is the normal closure of a single element.
    pub fn is_faithful_gaschutz(&self) -> Result<bool, GroupError> {
        let n = self.socle_abelian()?;
        Ok(self.gaschutz_witness_in(&n).is_some())
    }

    /// An element of `N_G` whose conjugacy class generates `N_G`.
    pub fn gaschutz_witness(&self) -> Result<Option<usize>, GroupError> {
        let n = self.socle_abelian()?;
        Ok(self.gaschutz_witness_in(&n))
    }

    fn gaschutz_witness_in(&self, n: &Subgroup) -> Option<usize> {
        let order = n.order();
        self.conjugacy_classes()
            .iter()
            .map(|c| c.representative)
            .filter(|&r| n.contains(r))
            .find(|&r| self.normal_closure(&[r]).order() == order)
    }

    /// Minimal number of generators of an abelian group.
    pub fn abelian_rank(&self) -> Result<usize, GroupError> {
        if !self.is_abelian() {
            return Err(GroupError::NotAbelian);
        }
        Ok(prime_factors(self.order() as u64)
            .into_iter()
            .map(|p| self.omega_rank(p))
            .max()
            .unwrap_or(0))
    }

    /// Rank of the elements of order dividing `p` in an abelian group.
    fn omega_rank(&self, p: u64) -> usize {
        let count = self.element_orders().iter().filter(|&&o| o == 1 || o == p).count();
        let mut r = 0;
        let mut q = 1usize;
        while q < count {
            q *= p as usize;
            r += 1;
        }
        r
    }

    /// Largest `r` such that `(Z/p)^r` embeds in `G`.
    pub fn p_rank(&self, p: u64) -> Result<usize, GroupError> {
        Ok(self.elementary_abelian_witness(p, P_RANK_BUDGET)?.len())
    }

    /// Generators of an elementary abelian `p`-subgroup of maximal rank,
    /// found by exhaustive search over commuting elements of order `p`.
    pub fn elementary_abelian_witness(
        &self,
        p: u64,
        budget: usize,
    ) -> Result<Vec<usize>, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        if self.is_abelian() {
            return Ok(self.abelian_elementary_witness(p));
        }
        let cand: Vec<usize> =
            (0..self.order()).filter(|&x| self.element_order(x) == p).collect();
        let mut search = RankSearch { g: self, p, budget, nodes: 0, best: Vec::new() };
        search.dfs(&mut Vec::new(), &[0], &cand)?;
        Ok(search.best)
    }

    fn abelian_elementary_witness(&self, p: u64) -> Vec<usize> {
        let omega: Vec<usize> =
            (0..self.order()).filter(|&x| self.element_order(x) == p).collect();
        let mut h = Subgroup::trivial(self);
        for x in omega {
            if !h.contains(x) {
                h.adjoin(x);
            }
        }
        h.generators().to_vec()
    }

    /// Every normal subgroup, found as joins of normal closures of class
    /// representatives. Sorted by order.
    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        let base = self.class_closures();
        let mut seen: HashSet<FixedBitSet> = base.iter().map(|n| n.members().clone()).collect();
        let mut all = base.clone();
        let mut k = 0;
        while k < all.len() {
            let x = all[k].clone();
            for b in &base {
                if b.is_subset(&x) {
                    continue;
                }
                let j = x.join(b);
                if seen.insert(j.members().clone()) {
                    if all.len() >= NORMAL_SUBGROUP_CAP {
                        return Err(GroupError::BudgetExceeded {
                            what: "normal subgroup enumeration",
                            budget: NORMAL_SUBGROUP_CAP,
                        });
                    }
                    all.push(j);
                }
            }
            k += 1;
        }
        all.sort_by_key(|n| n.order());
        Ok(all)
    }
}

fn inclusion_minimal(candidates: Vec<Subgroup>) -> Vec<Subgroup> {
    candidates
        .iter()
        .filter(|n| {
            !candidates
                .iter()
                .any(|m| m.order() < n.order() && m.is_subset(n))
        })
        .cloned()
        .collect()
}

struct RankSearch<'a> {
    g: &'a FiniteGroup,
    p: u64,
    budget: usize,
    nodes: usize,
    best: Vec<usize>,
}

impl RankSearch<'_> {
    fn dfs(&mut self, gens: &mut Vec<usize>, members: &[usize], cand: &[usize]) -> Result<(), GroupError> {
        if gens.len() > self.best.len() {
            self.best = gens.clone();
        }
        let p = self.p as usize;
        let size = members.len();
        for (i, &c) in cand.iter().enumerate() {
            // Improving on the best rank needs p^(best+1) - |E| further elements.
            let needed = p.saturating_pow(self.best.len() as u32 + 1).saturating_sub(size);
            if cand.len() - i < needed {
                break;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(GroupError::BudgetExceeded { what: "p-rank search", budget: self.budget });
            }
            let mut next_members = Vec::with_capacity(size * p);
            let mut power = 0usize;
            for _ in 0..p {
                next_members.extend(members.iter().map(|&e| self.g.mul(e, power)));
                power = self.g.mul(power, c);
            }
            next_members.sort_unstable();
            let next_cand: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&d| self.g.commutes(c, d) && next_members.binary_search(&d).is_err())
                .collect();
            gens.push(c);
            self.dfs(gens, &next_members, &next_cand)?;
            gens.pop();
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian, cyclic, dihedral, direct_product, symmetric};
    use crate::perm::Permutation;

    fn elem(g: &FiniteGroup, cycles: &[Vec<u32>]) -> usize {
        g.index_of(&Permutation::from_cycles(g.degree(), cycles).unwrap()).unwrap()
    }

    /// Brute-force center: elements commuting with every element.
    fn center_oracle(g: &FiniteGroup) -> usize {
        (0..g.order())
            .filter(|&x| (0..g.order()).all(|y| g.commutes(x, y)))
            .count()
    }

    #[test]
    fn centers() {
        let s4 = symmetric(4).unwrap();
        assert_eq!(center_oracle(&s4), 1);
        assert!(s4.center().is_trivial());
        let c6 = cyclic(6).unwrap();
        assert_eq!(c6.center().order(), 6);
    }

    #[test]
    fn derived_subgroups() {
        let s4 = symmetric(4).unwrap();
        let d = s4.derived_subgroup();
        assert_eq!(d.order(), 12);
        // brute force: closure of all commutators
        let mut comms = Vec::new();
        for a in 0..24 {
            for b in 0..24 {
                comms.push(s4.mul(s4.mul(s4.inv(a), s4.inv(b)), s4.mul(a, b)));
            }
        }
        assert_eq!(Subgroup::generated_by(&s4, &comms), d);
        assert!(abelian(&[2, 6]).unwrap().derived_subgroup().is_trivial());
    }

    #[test]
    fn normal_closures_in_s4() {
        let s4 = symmetric(4).unwrap();
        let v = s4.normal_closure(&[elem(&s4, &[vec![0, 1], vec![2, 3]])]);
        assert_eq!(v.order(), 4);
        assert!(v.is_abelian());
        let a4 = s4.normal_closure(&[elem(&s4, &[vec![0, 1, 2]])]);
        assert_eq!(a4.order(), 12);
        assert!(s4.normal_closure(&[0]).is_trivial());
    }

    #[test]
    fn minimal_normal_abelian() {
        let s4 = symmetric(4).unwrap();
        let m = s4.minimal_normal_abelian_subgroups().unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 4);
        let d8 = dihedral(8).unwrap();
        let m = d8.minimal_normal_abelian_subgroups().unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0], d8.center());
        let k = abelian(&[2, 2]).unwrap();
        let m = k.minimal_normal_abelian_subgroups().unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|n| n.order() == 2));
        assert_eq!(
            FiniteGroup::trivial().minimal_normal_abelian_subgroups().unwrap_err(),
            GroupError::TrivialGroup
        );
    }

    #[test]
    fn gaschutz_small_cases() {
        assert!(symmetric(4).unwrap().is_faithful_gaschutz().unwrap());
        assert!(!abelian(&[2, 2]).unwrap().is_faithful_gaschutz().unwrap());
        assert!(cyclic(12).unwrap().is_faithful_gaschutz().unwrap());
        let s3 = symmetric(3).unwrap();
        // centers 1 and 1 are coprime
        assert!(direct_product(&s3, &s3).unwrap().is_faithful_gaschutz().unwrap());
        let d8 = dihedral(8).unwrap();
        assert!(!direct_product(&d8, &d8).unwrap().is_faithful_gaschutz().unwrap());
    }

    #[test]
    fn ranks() {
        assert_eq!(cyclic(6).unwrap().abelian_rank().unwrap(), 1);
        assert_eq!(abelian(&[2, 2, 2, 2]).unwrap().abelian_rank().unwrap(), 4);
        assert_eq!(abelian(&[2, 4]).unwrap().abelian_rank().unwrap(), 2);
        assert_eq!(symmetric(3).unwrap().abelian_rank(), Err(GroupError::NotAbelian));
        assert_eq!(FiniteGroup::trivial().abelian_rank().unwrap(), 0);
    }

    /// Brute-force p-rank: the largest elementary abelian p-subgroup among
    /// all subgroups generated by up to four elements of order p.
    fn p_rank_oracle(g: &FiniteGroup, p: u64) -> usize {
        let els: Vec<usize> = (0..g.order()).filter(|&x| g.element_order(x) == p).collect();
        let mut best = 0;
        let is_elem_ab = |h: &Subgroup| {
            h.is_abelian() && h.elements().all(|x| x == 0 || g.element_order(x) == p)
        };
        let log = |n: usize| {
            let (mut r, mut q) = (0, 1);
            while q < n {
                q *= p as usize;
                r += 1;
            }
            r
        };
        for &a in &els {
            best = best.max(1);
            for &b in &els {
                let h = Subgroup::generated_by(g, &[a, b]);
                if is_elem_ab(&h) {
                    best = best.max(log(h.order()));
                    for &c in &els {
                        let h3 = Subgroup::generated_by(g, &[a, b, c]);
                        if is_elem_ab(&h3) {
                            best = best.max(log(h3.order()));
                        }
                    }
                }
            }
        }
        best
    }

    #[test]
    fn p_ranks_match_brute_force() {
        let s4 = symmetric(4).unwrap();
        assert_eq!(p_rank_oracle(&s4, 2), 2);
        assert_eq!(s4.p_rank(2).unwrap(), 2);
        assert_eq!(s4.p_rank(3).unwrap(), 1);
        let s3 = symmetric(3).unwrap();
        let s3s3 = direct_product(&s3, &s3).unwrap();
        assert_eq!(p_rank_oracle(&s3s3, 2), 2);
        assert_eq!(s3s3.p_rank(2).unwrap(), 2);
        assert_eq!(s3s3.p_rank(3).unwrap(), 2);
        assert_eq!(cyclic(5).unwrap().p_rank(5).unwrap(), 1);
        assert_eq!(cyclic(5).unwrap().p_rank(2).unwrap(), 0);
        assert!(s4.p_rank(4).is_err());
    }

    #[test]
    fn normal_subgroup_lattices() {
        let s4 = symmetric(4).unwrap();
        let orders: Vec<usize> = s4.normal_subgroups().unwrap().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert_eq!(cyclic(6).unwrap().normal_subgroups().unwrap().len(), 4);
        let a5 = crate::group::alternating(5).unwrap();
        assert_eq!(a5.normal_subgroups().unwrap().len(), 2);
    }

    #[test]
    fn class_sizes_divide_order() {
        for g in [symmetric(4).unwrap(), dihedral(12).unwrap(), crate::group::quaternion8().unwrap()] {
            let sum: usize = g.conjugacy_classes().iter().map(|c| c.size()).sum();
            assert_eq!(sum, g.order());
            assert!(g.conjugacy_classes().iter().all(|c| g.order() % c.size() == 0));
        }
    }
}
