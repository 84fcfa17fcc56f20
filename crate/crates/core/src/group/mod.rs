//! Permutation groups with a fully enumerated element set.
//!
//! Every [`FiniteGroup`] stores its elements in breadth-first order from the
//! identity (index 0) along right multiplication by the generators, together
//! with the spanning tree of that search. Element indices are the currency of
//! the rest of the crate: subgroups are bitsets over them and homomorphisms
//! are extended along the spanning tree.

mod families;
mod products;
pub mod structure;
mod subgroup;
mod surject;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::GroupError;
use crate::perm::Permutation;

pub use families::*;
pub use products::{direct_product, direct_product_many, extend_automorphism, quotient, semidirect_product, QuotientMap};
pub use subgroup::Subgroup;
pub use surject::SurjectionTarget;

/// Default bound on the number of elements a group may have.
pub const DEFAULT_ORDER_CAP: usize = 200_000;

/// Order cap used by constructors that do not take one explicitly.
/// `COVDIM_ORDER_CAP` overrides [`DEFAULT_ORDER_CAP`].
pub fn default_order_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("COVDIM_ORDER_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&c| c > 0)
            .unwrap_or(DEFAULT_ORDER_CAP)
    })
}

/// A conjugacy class, by element indices of the parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Smallest element index in the class.
    pub representative: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    /// `tree[i] = (j, s)` with `elements[i] = elements[j] * generators[s]`.
    tree: Vec<(usize, usize)>,
    gen_index: Vec<usize>,
    order_cap: usize,
    inverse: OnceLock<Vec<usize>>,
    classes: OnceLock<(Vec<ConjugacyClass>, Vec<usize>)>,
    orders: OnceLock<Vec<u64>>,
    table: OnceLock<Arc<crate::reps::CharacterTable>>,
}

/// A finite permutation group. Cloning is cheap and shares all caches.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<Inner>,
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` on `degree` points,
    /// failing once more than `order_cap` elements appear.
    pub fn with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        order_cap: usize,
    ) -> Result<Self, GroupError> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut tree = vec![(0usize, usize::MAX)];
        let mut i = 0;
        while i < elements.len() {
            for (s, g) in generators.iter().enumerate() {
                let h = elements[i].then(g);
                if !index.contains_key(&h) {
                    if elements.len() >= order_cap {
                        return Err(GroupError::CapExceeded { cap: order_cap });
                    }
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                    tree.push((i, s));
                }
            }
            i += 1;
        }
        let gen_index = generators.iter().map(|g| index[g]).collect();
        Ok(Self {
            inner: Arc::new(Inner {
                degree,
                generators,
                elements,
                index,
                tree,
                gen_index,
                order_cap,
                inverse: OnceLock::new(),
                classes: OnceLock::new(),
                orders: OnceLock::new(),
                table: OnceLock::new(),
            }),
        })
    }

    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        Self::with_cap(degree, generators, default_order_cap())
    }

    pub fn trivial() -> Self {
        Self::new(1, vec![]).expect("trivial group")
    }

    pub(crate) fn table_cache(&self) -> &OnceLock<Arc<crate::reps::CharacterTable>> {
        &self.inner.table
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn order_cap(&self) -> usize {
        self.inner.order_cap
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.inner.gen_index
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.inner.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.inner.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.inner.index.get(p).copied()
    }

    pub fn ptr_eq(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Index of `elements[a] * elements[b]`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.inner.elements[a].then(&self.inner.elements[b]);
        self.inner.index[&p]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse_table()[a]
    }

    fn inverse_table(&self) -> &[usize] {
        self.inner.inverse.get_or_init(|| {
            self.inner
                .elements
                .iter()
                .map(|p| self.inner.index[&p.inverse()])
                .collect()
        })
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        self.inner.index[&self.inner.elements[a].pow(e)]
    }

    /// `g^-1 a g`.
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        let (pa, pb) = (self.element(a), self.element(b));
        pa.then(pb) == pb.then(pa)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.element_orders()[a]
    }

    pub fn element_orders(&self) -> &[u64] {
        self.inner
            .orders
            .get_or_init(|| self.inner.elements.iter().map(Permutation::order).collect())
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.element_orders()
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.inner.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.is_abelian() && self.element_orders().contains(&n)
    }

    /// Conjugacy classes sorted by representative; the identity class is first.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes_and_lookup().0
    }

    /// Class index of every element.
    pub fn class_lookup(&self) -> &[usize] {
        &self.classes_and_lookup().1
    }

    fn classes_and_lookup(&self) -> &(Vec<ConjugacyClass>, Vec<usize>) {
        self.inner.classes.get_or_init(|| {
            let n = self.order();
            let mut lookup = vec![usize::MAX; n];
            let mut classes = Vec::new();
            let gens: Vec<usize> = self.inner.gen_index.clone();
            for start in 0..n {
                if lookup[start] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                lookup[start] = id;
                let mut members = vec![start];
                let mut k = 0;
                while k < members.len() {
                    let x = members[k];
                    for &g in &gens {
                        let y = self.conj(x, g);
                        if lookup[y] == usize::MAX {
                            lookup[y] = id;
                            members.push(y);
                        }
                    }
                    k += 1;
                }
                members.sort_unstable();
                classes.push(ConjugacyClass { representative: start, members });
            }
            (classes, lookup)
        })
    }

    /// Extends generator images to every element along the enumeration tree.
    /// The result is only a homomorphism if the images satisfy the group's
    /// relations; see [`FiniteGroup::check_homomorphism`].
    pub fn extend_along_tree<T: Clone>(
        &self,
        gen_images: &[T],
        identity: T,
        mul: impl Fn(&T, &T) -> T,
    ) -> Vec<T> {
        let mut out: Vec<T> = Vec::with_capacity(self.order());
        out.push(identity);
        for i in 1..self.order() {
            let (j, s) = self.inner.tree[i];
            let v = mul(&out[j], &gen_images[s]);
            out.push(v);
        }
        out
    }

    /// Checks that a map on all elements is a homomorphism by testing
    /// `f(g s) = f(g) f(s)` for every element `g` and generator `s`.
    pub fn check_homomorphism<T: PartialEq>(
        &self,
        images: &[T],
        mul: impl Fn(&T, &T) -> T,
    ) -> bool {
        for g in 0..self.order() {
            for &si in &self.inner.gen_index {
                let gs = self.mul(g, si);
                if mul(&images[g], &images[si]) != images[gs] {
                    return false;
                }
            }
        }
        true
    }

    /// Shortest generator word (indices into the generator list) of every
    /// element, read off the enumeration tree.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while i != 0 {
            let (j, s) = self.inner.tree[i];
            w.push(s);
            i = j;
        }
        w.reverse();
        w
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.inner.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_of_small_families() {
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(FiniteGroup::trivial().order(), 1);
        let c3c4 = direct_product(&cyclic(3).unwrap(), &cyclic(4).unwrap()).unwrap();
        assert_eq!(c3c4.order(), 12);
    }

    #[test]
    fn order_cap_is_enforced() {
        let s5 = symmetric(5).unwrap();
        let err = FiniteGroup::with_cap(5, s5.generators().to_vec(), 100).unwrap_err();
        assert_eq!(err, GroupError::CapExceeded { cap: 100 });
    }

    #[test]
    fn closure_invariants() {
        let g = symmetric(4).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
        for &s in g.generator_indices() {
            assert!(s < g.order());
        }
        let sizes: usize = g.conjugacy_classes().iter().map(|c| c.size()).sum();
        assert_eq!(sizes, 24);
    }

    #[test]
    fn s4_class_sizes() {
        let g = symmetric(4).unwrap();
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(symmetric(3).unwrap().conjugacy_classes().len(), 3);
        assert_eq!(cyclic(7).unwrap().conjugacy_classes().len(), 7);
    }

    #[test]
    fn word_reproduces_element() {
        let g = alternating(5).unwrap();
        for i in [0, 1, 17, 59] {
            let mut p = Permutation::identity(g.degree());
            for s in g.word(i) {
                p = p.then(&g.generators()[s]);
            }
            assert_eq!(&p, g.element(i));
        }
    }
}
