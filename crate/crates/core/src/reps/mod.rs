//! Exact character theory: character tables with values in `Q(zeta_e)`,
//! kernels, faithful irreducibles and minimal faithful representations.

mod dixon;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::cyclotomic::CycNumber;
use crate::error::{GroupError, RepsError};
use crate::group::{ConjugacyClass, FiniteGroup, Subgroup};

/// Bound on the number of kernel intersections explored by
/// [`min_faithful_rep_dim`].
pub const FAITHFUL_SEARCH_BUDGET: usize = 1_000_000;

/// An irreducible character.
#[derive(Clone, Debug)]
pub struct Character {
    degree: u64,
    values: Vec<CycNumber>,
    eigen: Vec<Vec<(u32, u64)>>,
    kernel: Vec<usize>,
}

impl Character {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// One value per conjugacy class, in the order of the table's classes.
    pub fn values(&self) -> &[CycNumber] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycNumber {
        &self.values[class]
    }

    /// Eigenvalues of a representing matrix on `class` as pairs `(t, m)`:
    /// `zeta_e^t` with multiplicity `m`.
    pub fn eigenvalues(&self, class: usize) -> &[(u32, u64)] {
        &self.eigen[class]
    }

    /// Classes on which the character takes the value `degree`.
    pub fn kernel_classes(&self) -> &[usize] {
        &self.kernel
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel.len() == 1
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }
}

/// The irreducible characters of a finite group.
pub struct CharacterTable {
    group: FiniteGroup,
    exponent: u32,
    prime: u64,
    irreducibles: Vec<Character>,
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CharacterTable")
            .field("order", &self.group.order())
            .field("exponent", &self.exponent)
            .field("degrees", &self.degrees())
            .finish()
    }
}

impl CharacterTable {
    /// Computes the table from scratch; [`character_table`] caches it on the
    /// group instead.
    pub fn compute(group: &FiniteGroup) -> Result<Self, RepsError> {
        let (prime, raw) = dixon::compute(group)?;
        let e = group.exponent() as u32;
        let classes = group.conjugacy_classes();
        let n = group.order() as u64;
        let mut irreducibles = Vec::with_capacity(raw.len());
        for r in raw {
            if !n.is_multiple_of(r.degree) {
                return Err(RepsError::Table(format!("degree {} does not divide {n}", r.degree)));
            }
            let values: Vec<CycNumber> = r
                .eigen
                .iter()
                .map(|row| CycNumber::from_root_counts(e, &root_counts(e, row, 1)))
                .collect();
            let deg = CycNumber::from_int(r.degree as i64);
            let kernel = (0..classes.len()).filter(|&i| values[i] == deg).collect();
            irreducibles.push(Character { degree: r.degree, values, eigen: r.eigen, kernel });
        }
        irreducibles.sort_by(|a, b| (a.degree, &a.eigen).cmp(&(b.degree, &b.eigen)));
        let table = Self { group: group.clone(), exponent: e, prime, irreducibles };
        if table.irreducibles.len() != classes.len() {
            return Err(RepsError::Table("wrong number of irreducibles".into()));
        }
        Ok(table)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        self.group.conjugacy_classes()
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    /// Conductor of the value field.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The prime modulo which the table was computed.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| c.degree).collect()
    }

    pub fn trivial_character(&self) -> &Character {
        &self.irreducibles[0]
    }

    /// `{g : chi(g) = chi(1)}`.
    pub fn kernel(&self, chi: &Character) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.group.order());
        let classes = self.classes();
        for &c in &chi.kernel {
            for &x in &classes[c].members {
                members.insert(x);
            }
        }
        Subgroup::from_closed_set(&self.group, members)
    }

    /// `<a, b> = (1/|G|) sum_g a(g) conj(b(g))`.
    pub fn inner_product(&self, a: &Character, b: &Character) -> CycNumber {
        let acc = self.weighted_pairing(a, b);
        let n = self.group.order() as i64;
        CycNumber::from_root_counts(self.exponent, &acc)
            .scale(&num_rational::BigRational::new(1.into(), n.into()))
    }

    fn weighted_pairing(&self, a: &Character, b: &Character) -> Vec<i64> {
        let e = self.exponent as usize;
        let mut acc = vec![0i64; e];
        for (i, cls) in self.classes().iter().enumerate() {
            let w = cls.size() as i64;
            for &(ta, ma) in &a.eigen[i] {
                for &(tb, mb) in &b.eigen[i] {
                    acc[(ta as usize + e - tb as usize) % e] += w * (ma * mb) as i64;
                }
            }
        }
        acc
    }

    /// Checks both orthogonality relations exactly.
    pub fn check_orthogonality(&self) -> bool {
        let e = self.exponent;
        let n = self.group.order() as i64;
        let irr = &self.irreducibles;
        for (x, a) in irr.iter().enumerate() {
            for (y, b) in irr.iter().enumerate().skip(x) {
                let target = if x == y { n } else { 0 };
                if CycNumber::from_root_counts(e, &self.weighted_pairing(a, b)) != CycNumber::from_int(target) {
                    return false;
                }
            }
        }
        let classes = self.classes();
        let eu = e as usize;
        for i in 0..classes.len() {
            for j in i..classes.len() {
                let mut acc = vec![0i64; eu];
                for chi in irr {
                    for &(ta, ma) in &chi.eigen[i] {
                        for &(tb, mb) in &chi.eigen[j] {
                            acc[(ta as usize + eu - tb as usize) % eu] += (ma * mb) as i64;
                        }
                    }
                }
                let target = if i == j { n / classes[i].size() as i64 } else { 0 };
                if CycNumber::from_root_counts(e, &acc) != CycNumber::from_int(target) {
                    return false;
                }
            }
        }
        true
    }

    /// JSON report: class representatives in cycle notation and values as
    /// canonical cyclotomic strings.
    pub fn to_json(&self) -> Value {
        let orders = self.group.element_orders();
        let classes: Vec<Value> = self
            .classes()
            .iter()
            .map(|c| {
                json!({
                    "representative": self.group.element(c.representative).to_string(),
                    "size": c.size(),
                    "order": orders[c.representative],
                })
            })
            .collect();
        let characters: Vec<Value> = self
            .irreducibles
            .iter()
            .map(|chi| {
                json!({
                    "degree": chi.degree,
                    "faithful": chi.is_faithful(),
                    "values": chi.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "order": self.group.order(),
            "conductor": self.exponent,
            "classes": classes,
            "characters": characters,
        })
    }
}

fn root_counts(e: u32, row: &[(u32, u64)], sign: i64) -> Vec<i64> {
    let mut out = vec![0i64; e as usize];
    for &(t, m) in row {
        out[t as usize] += sign * m as i64;
    }
    out
}

/// The character table of `g`, computed once per group and shared.
pub fn character_table(g: &FiniteGroup) -> Result<Arc<CharacterTable>, RepsError> {
    if let Some(t) = g.table_cache().get() {
        return Ok(t.clone());
    }
    let t = Arc::new(CharacterTable::compute(g)?);
    Ok(g.table_cache().get_or_init(|| t).clone())
}

pub fn kernel_of_character(table: &CharacterTable, chi: &Character) -> Subgroup {
    table.kernel(chi)
}

/// Whether some irreducible character has trivial kernel.
pub fn has_faithful_irreducible(g: &FiniteGroup) -> Result<bool, RepsError> {
    Ok(character_table(g)?.irreducibles().iter().any(Character::is_faithful))
}

/// Faithfulness decided by both the socle criterion and the character
/// table; disagreement is an error.
pub fn is_faithful(g: &FiniteGroup) -> Result<bool, RepsError> {
    if g.is_trivial() {
        return Ok(true);
    }
    let gaschutz = g.is_faithful_gaschutz()?;
    let table = has_faithful_irreducible(g)?;
    if gaschutz != table {
        return Err(RepsError::OracleDisagreement { gaschutz, table });
    }
    Ok(table)
}

/// For faithful factors, the direct product is faithful iff the center
/// orders are pairwise coprime.
pub fn is_faithful_product_criterion(factors: &[FiniteGroup]) -> Result<bool, RepsError> {
    let mut centers = Vec::with_capacity(factors.len());
    for (i, f) in factors.iter().enumerate() {
        if !has_faithful_irreducible(f)? {
            return Err(RepsError::NotFaithfulFactor(i));
        }
        centers.push(f.center().order());
    }
    for i in 0..centers.len() {
        for j in i + 1..centers.len() {
            if centers[i].gcd(&centers[j]) != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest dimension of a faithful complex representation: a shortest
/// path from the whole group to the trivial subgroup, where each step
/// intersects with the kernel of an irreducible at the cost of its degree.
pub fn min_faithful_rep_dim(g: &FiniteGroup) -> Result<u64, RepsError> {
    if g.is_trivial() {
        return Err(GroupError::TrivialGroup.into());
    }
    let table = character_table(g)?;
    let k = table.classes().len();
    let id_class = g.class_lookup()[0];
    let kernels: Vec<(u64, FixedBitSet)> = table
        .irreducibles()
        .iter()
        .map(|chi| {
            let mut b = FixedBitSet::with_capacity(k);
            chi.kernel_classes().iter().for_each(|&c| b.insert(c));
            (chi.degree(), b)
        })
        .collect();
    let mut whole = FixedBitSet::with_capacity(k);
    whole.insert_range(..);
    let mut best: HashMap<FixedBitSet, u64> = HashMap::new();
    let mut states = vec![whole.clone()];
    best.insert(whole, 0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((cost, id))) = heap.pop() {
        let state = states[id].clone();
        if best[&state] < cost {
            continue;
        }
        if state.count_ones(..) == 1 && state.contains(id_class) {
            return Ok(cost);
        }
        for (deg, ker) in &kernels {
            let mut next = state.clone();
            next.intersect_with(ker);
            if next == state {
                continue;
            }
            let c = cost + deg;
            if best.get(&next).is_some_and(|&b| b <= c) {
                continue;
            }
            if best.len() >= FAITHFUL_SEARCH_BUDGET {
                return Err(GroupError::BudgetExceeded {
                    what: "faithful representation search",
                    budget: FAITHFUL_SEARCH_BUDGET,
                }
                .into());
            }
            best.insert(next.clone(), c);
            states.push(next);
            heap.push(Reverse((c, states.len() - 1)));
        }
    }
    Err(RepsError::Table("no faithful sum of irreducibles".into()))
}

/// Rank of `Z(G)` and whether it is cyclic; a trivial center is `(0, true)`.
pub fn center_rank_and_cyclicity(g: &FiniteGroup) -> Result<(usize, bool), GroupError> {
    let z = g.center().to_group()?;
    if z.is_trivial() {
        return Ok((0, true));
    }
    Ok((z.abelian_rank()?, z.is_cyclic()))
}

#[cfg(test)]
mod tests;
