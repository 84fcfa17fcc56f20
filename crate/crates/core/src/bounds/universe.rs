//! The groups a derivation reasons about: the input, its declared or
//! discovered direct factors, selected quotients, and products with
//! elementary abelian groups. Structural claims are computed here, both when
//! a group enters the universe and again when a certificate is replayed.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_integer::Integer;

use super::facts::{Claim, DimInterval, Fact};
use crate::covariant::{CycMatrix, GradedSpace, MatrixRep};
use crate::cyclotomic::CycNumber;
use crate::dsl::{build, Action, Family, GroupSpec};
use crate::group::structure::{is_prime, prime_factors};
use crate::group::{cyclic, direct_product_many, quotient, FiniteGroup, Subgroup};
use crate::reps::{self, character_table};

/// Depth beyond which groups are no longer expanded.
pub const MAX_DEPTH: usize = 4;
const MAX_SPLIT_CANDIDATES: usize = 3;
const MAX_CYCLIC_CANDIDATES: usize = 2;
/// Orders above which the normal-subgroup based searches are skipped.
const SEARCH_ORDER_LIMIT: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    Center,
    CharacterKernel,
    CyclicExtension,
}

#[derive(Clone, Debug)]
pub enum Origin {
    Input,
    /// A declared factor (`spec` is set) or a normal direct factor.
    Factor { parent: usize, subgroup: Option<Subgroup> },
    Quotient { parent: usize, kernel: Subgroup, kind: QuotientKind },
    Elementary { base: usize, p: u64, m: usize },
}

/// Cached structural data of a universe group.
#[derive(Debug)]
pub struct NodeFacts {
    pub order: usize,
    pub center_order: usize,
    pub center_cyclic: bool,
    pub center_rank: usize,
    pub abelian: bool,
    pub abelian_rank: Option<usize>,
    pub cyclic: bool,
    pub center_derived: Option<usize>,
    pub faithful: Option<bool>,
    pub min_faithful_dim: Option<u64>,
    pub p_group: Option<u64>,
    pub p_ranks: Vec<(u64, usize)>,
    pub cyclic_semidirect: Option<Claim>,
    pub matrix_model: Option<usize>,
    pub no_small_quotient: OnceLock<Option<bool>>,
}

pub struct Node {
    pub label: String,
    pub description: String,
    pub group: FiniteGroup,
    pub spec: Option<GroupSpec>,
    pub origin: Origin,
    pub depth: usize,
    pub auxiliary: bool,
    pub facts: NodeFacts,
    pub factors: Option<Vec<usize>>,
    /// Relation claims about this group (factors, quotients, extensions).
    pub relations: Vec<Claim>,
    pub expanded: bool,
    pub covdim: DimInterval,
    pub edim: DimInterval,
    /// Certificates behind covdim lo/hi and edim lo/hi.
    pub reasons: [Option<usize>; 4],
}

impl Node {
    pub fn closed(&self) -> bool {
        self.covdim.is_exact() && self.edim.is_exact()
    }
}

pub fn center_rank_cyclic(g: &FiniteGroup) -> (usize, usize, bool) {
    let z = g.center();
    let order = z.order();
    if order == 1 {
        return (1, 0, true);
    }
    match z.to_group() {
        Ok(zg) => (order, zg.abelian_rank().unwrap_or(0), zg.is_cyclic()),
        Err(_) => (order, 0, false),
    }
}

pub fn center_derived_meet(g: &FiniteGroup) -> usize {
    g.center().intersection(&g.derived_subgroup()).order()
}

fn prime_power(n: usize) -> Option<u64> {
    let ps = prime_factors(n as u64);
    (ps.len() == 1).then(|| ps[0])
}

/// `p`-rank, through declared factors when there are any: the `p`-rank of
/// a direct product is the sum over the factors.
pub fn spec_p_rank(group: &FiniteGroup, spec: Option<&GroupSpec>, p: u64) -> Option<usize> {
    if let Some(spec @ GroupSpec::Product(..)) = spec {
        let mut total = 0;
        for f in spec.factors() {
            total += build(f).ok()?.p_rank(p).ok()?;
        }
        return Some(total);
    }
    group.p_rank(p).ok()
}

/// Shape data of `Z/p^l : Z/p^k [a -> a^n]`: `(p, k, l, n, |alpha|)`.
pub fn cyclic_semidirect_data(spec: &GroupSpec) -> Option<(u64, u32, u32, u64, u64)> {
    let GroupSpec::Semidirect { kernel, actor, actions } = spec else { return None };
    let (GroupSpec::Named(Family::Cyclic, kn), GroupSpec::Named(Family::Cyclic, an)) = (&**kernel, &**actor) else {
        return None;
    };
    let p = prime_power(*kn)?;
    if prime_power(*an) != Some(p) {
        return None;
    }
    let l = kn.ilog(p as usize);
    let k = an.ilog(p as usize);
    let [action] = actions.as_slice() else { return None };
    let modulus = *kn as i64;
    let n = match action {
        Action::Inversion => modulus - 1,
        Action::Images(list) => {
            let mut n = 1i64;
            for (g, w) in list {
                if *g != 0 {
                    return None;
                }
                n = w.0.iter().map(|&(_, e)| e).sum::<i64>();
            }
            n.rem_euclid(modulus)
        }
    };
    let n = n as u64;
    let mut order = 1u64;
    let mut x = n % *kn as u64;
    while x != 1 % *kn as u64 {
        x = x * n % *kn as u64;
        order += 1;
        if order > *kn as u64 {
            return None;
        }
    }
    Some((p, k, l, n, order))
}

/// The two-dimensional model `a -> diag(zeta, zeta^n)`, `x -> swap` of
/// `Z/2 : Z/2^l`; its dimension when it is a faithful representation.
pub fn dihedral_model(group: &FiniteGroup, spec: &GroupSpec) -> Option<usize> {
    let (p, k, l, n, _) = cyclic_semidirect_data(spec)?;
    if p != 2 || k != 1 || group.generators().len() != 2 {
        return None;
    }
    let m = 1u32 << l;
    let zero = CycNumber::zero;
    let a: CycMatrix = vec![
        vec![CycNumber::root_of_unity(m, 1), zero()],
        vec![zero(), CycNumber::root_of_unity(m, n as i64)],
    ];
    let s: CycMatrix = vec![vec![zero(), CycNumber::one()], vec![CycNumber::one(), zero()]];
    let space = GradedSpace::new(vec![2]).ok()?;
    let rep = MatrixRep::new(group, &space, vec![vec![a], vec![s]]).ok()?;
    rep.is_faithful().then_some(2)
}

pub fn no_small_quotient(g: &FiniteGroup) -> Option<bool> {
    g.covdim_two_quotient().ok().map(|q| q.is_none())
}

pub fn compute_facts(group: &FiniteGroup, spec: Option<&GroupSpec>, full: bool) -> NodeFacts {
    let order = group.order();
    let (center_order, center_rank, center_cyclic) = center_rank_cyclic(group);
    let abelian = group.is_abelian();
    let abelian_rank = if abelian { group.abelian_rank().ok() } else { None };
    let p_group = prime_power(order);
    let mut facts = NodeFacts {
        order,
        center_order,
        center_cyclic,
        center_rank,
        abelian,
        abelian_rank,
        cyclic: group.is_cyclic(),
        center_derived: None,
        faithful: None,
        min_faithful_dim: None,
        p_group,
        p_ranks: Vec::new(),
        cyclic_semidirect: None,
        matrix_model: None,
        no_small_quotient: OnceLock::new(),
    };
    if !full || order == 1 {
        return facts;
    }
    facts.center_derived = Some(center_derived_meet(group));
    facts.faithful = reps::is_faithful(group).ok();
    facts.min_faithful_dim = reps::min_faithful_rep_dim(group).ok();
    if !abelian {
        facts.p_ranks = prime_factors(order as u64)
            .into_iter()
            .filter_map(|p| spec_p_rank(group, spec, p).map(|r| (p, r)))
            .collect();
    }
    if let Some(spec) = spec {
        if let Some((p, k, l, _, alpha_order)) = cyclic_semidirect_data(spec) {
            facts.cyclic_semidirect = Some(Claim::CyclicSemidirect { p, k, l, alpha_order });
            facts.matrix_model = dihedral_model(group, spec);
        }
    }
    facts
}

/// Complementary normal subgroups `A x B = G`, both proper.
pub fn discover_factors(g: &FiniteGroup) -> Option<(Subgroup, Subgroup)> {
    if g.is_abelian() || g.order() > SEARCH_ORDER_LIMIT {
        return None;
    }
    let ns = g.normal_subgroups().ok()?;
    for a in &ns {
        if a.is_trivial() || a.order() == g.order() {
            continue;
        }
        let want = g.order() / a.order();
        if a.order() > want {
            break;
        }
        if let Some(b) = ns.iter().find(|b| b.order() == want && a.intersection(b).is_trivial()) {
            return Some((a.clone(), b.clone()));
        }
    }
    None
}

/// Order of the root of unity `zeta_e^t`.
fn root_order(t: u32, e: u32) -> u64 {
    (e / t.gcd(&e)) as u64
}

fn split_holds(g: &FiniteGroup, wi: usize, ci: usize, p: u64) -> Option<Subgroup> {
    let table = character_table(g).ok()?;
    let w = table.irreducibles().get(wi)?;
    let chi = table.irreducibles().get(ci)?;
    if !chi.is_linear() {
        return None;
    }
    let h = table.kernel(w);
    if h.is_trivial() || !(h.order() as u64).is_multiple_of(p) {
        return None;
    }
    if !h.intersection(&table.kernel(chi)).is_trivial() {
        return None;
    }
    let e = table.exponent();
    let lookup = g.class_lookup();
    let scalar = g.center().elements().any(|z| {
        if g.element_order(z) != p {
            return false;
        }
        let (we, ce) = (w.eigenvalues(lookup[z]), chi.eigenvalues(lookup[z]));
        we.len() == 1 && ce.len() == 1 && we[0].0 == ce[0].0 && root_order(we[0].0, e) == p
    });
    scalar.then_some(h)
}

/// Irreducible/linear pairs satisfying the splitting hypotheses, one per
/// distinct kernel `H`: `(irreducible, linear, p, H)`.
pub fn split_candidates(g: &FiniteGroup) -> Vec<(usize, usize, u64, Subgroup)> {
    let Ok(table) = character_table(g) else { return Vec::new() };
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (wi, w) in table.irreducibles().iter().enumerate() {
        if w.is_faithful() || out.len() >= MAX_SPLIT_CANDIDATES {
            continue;
        }
        let h = table.kernel(w);
        if h.is_trivial() || seen.contains(h.members()) {
            continue;
        }
        'found: for (ci, chi) in table.irreducibles().iter().enumerate() {
            if !chi.is_linear() {
                continue;
            }
            for p in prime_factors(h.order() as u64) {
                if split_holds(g, wi, ci, p).is_some() {
                    seen.insert(h.members().clone());
                    out.push((wi, ci, p, h.clone()));
                    break 'found;
                }
            }
        }
    }
    out
}

/// Order of a linear character as an element of the character group.
fn linear_order(chi: &reps::Character, e: u32) -> u64 {
    (0..chi.values().len())
        .flat_map(|c| chi.eigenvalues(c).iter().map(|&(t, _)| root_order(t, e)))
        .fold(1, |acc, o| acc.lcm(&o))
}

fn cyclic_ext_holds(g: &FiniteGroup, ci: usize, p: u64, n: &Subgroup) -> bool {
    let Ok(table) = character_table(g) else { return false };
    let Some(chi) = table.irreducibles().get(ci) else { return false };
    if !chi.is_linear() || n.is_trivial() || !n.is_normal() {
        return false;
    }
    let o = linear_order(chi, table.exponent());
    if o == 1 || prime_power(o as usize) != Some(p) {
        return false;
    }
    let k = table.kernel(chi);
    if !n.intersection(&k).is_trivial() {
        return false;
    }
    let Ok(q) = quotient(n) else { return false };
    let zq = q.group.center();
    let image: HashSet<usize> = k.elements().map(|x| q.projection[x]).collect();
    let meet = image.iter().filter(|&&y| zq.contains(y)).count();
    (meet as u64).is_multiple_of(p)
}

/// `(linear, p, N)` with `G/N` the lower row of a cyclic-extension diagram.
pub fn cyclic_candidates(g: &FiniteGroup) -> Vec<(usize, u64, Subgroup)> {
    if g.order() > SEARCH_ORDER_LIMIT {
        return Vec::new();
    }
    let (Ok(table), Ok(normals)) = (character_table(g), g.normal_subgroups()) else { return Vec::new() };
    let mut out = Vec::new();
    for (ci, chi) in table.irreducibles().iter().enumerate() {
        if !chi.is_linear() {
            continue;
        }
        let o = linear_order(chi, table.exponent());
        let Some(p) = prime_power(o as usize) else { continue };
        for n in &normals {
            if out.len() >= MAX_CYCLIC_CANDIDATES {
                return out;
            }
            if cyclic_ext_holds(g, ci, p, n) {
                out.push((ci, p, n.clone()));
            }
        }
    }
    out
}

/// Center orders of the factors when every factor is a nontrivial faithful
/// group.
pub fn faithful_factor_centers(nodes: &[Node], factors: &[usize]) -> Option<Vec<usize>> {
    factors
        .iter()
        .map(|&f| {
            let n = &nodes[f];
            (n.facts.order > 1 && n.facts.faithful == Some(true)).then_some(n.facts.center_order)
        })
        .collect()
}

fn product_of(nodes: &[Node], factors: &[usize]) -> Option<FiniteGroup> {
    let groups: Vec<FiniteGroup> = factors.iter().map(|&f| nodes[f].group.clone()).collect();
    direct_product_many(&groups).ok()
}

/// Recomputes a structural claim from scratch. Bound claims are not
/// structural and always fail here.
pub fn verify_claim(nodes: &[Node], fact: &Fact) -> bool {
    let Some(node) = nodes.get(fact.node) else { return false };
    let g = &node.group;
    match &fact.claim {
        Claim::CovdimAtLeast(_) | Claim::CovdimAtMost(_) | Claim::EdimAtLeast(_) | Claim::EdimAtMost(_) => false,
        Claim::Order(o) => g.order() == *o,
        Claim::CenterOrder(c) => g.center().order() == *c,
        Claim::CenterCyclic(b) => center_rank_cyclic(g).2 == *b,
        Claim::CenterDerivedMeet(m) => center_derived_meet(g) == *m,
        Claim::Abelian(b) => g.is_abelian() == *b,
        Claim::AbelianRank(r) => g.abelian_rank().ok() == Some(*r),
        Claim::Cyclic(b) => g.is_cyclic() == *b,
        Claim::Faithful(b) => reps::is_faithful(g).ok() == Some(*b),
        Claim::PRank { p, rank } => {
            let computed = match &node.origin {
                Origin::Elementary { base, p: q, m } => {
                    let b = &nodes[*base];
                    spec_p_rank(&b.group, b.spec.as_ref(), *p).map(|r| r + if q == p { *m } else { 0 })
                }
                _ => spec_p_rank(g, node.spec.as_ref(), *p),
            };
            computed == Some(*rank)
        }
        Claim::MinFaithfulDim(d) => reps::min_faithful_rep_dim(g).ok() == Some(*d),
        Claim::PGroup(p) => g.order() > 1 && prime_power(g.order()) == Some(*p),
        Claim::DirectFactors(fs) => verify_factors(nodes, fact.node, fs),
        Claim::FaithfulFactors { centers, whole } => {
            if *whole {
                g.order() > 1 && reps::is_faithful(g).ok() == Some(true) && centers == &vec![g.center().order()]
            } else {
                let Some(fs) = &node.factors else { return false };
                verify_factors(nodes, fact.node, fs)
                    && fs.len() == centers.len()
                    && fs.iter().zip(centers).all(|(&f, &c)| {
                        let h = &nodes[f].group;
                        h.order() > 1 && h.center().order() == c && reps::is_faithful(h).ok() == Some(true)
                    })
            }
        }
        Claim::ElementaryExtension { base, p, m } => {
            let Origin::Elementary { base: b, p: q, m: k } = &node.origin else { return false };
            let Some(base_node) = nodes.get(*base) else { return false };
            b == base
                && q == p
                && k == m
                && is_prime(*p)
                && g.order() == base_node.group.order() * (*p as usize).pow(*m as u32)
                && g.center().order() == base_node.group.center().order() * (*p as usize).pow(*m as u32)
        }
        Claim::CentralQuotient(q) => {
            let Some(qn) = nodes.get(*q) else { return false };
            match &qn.origin {
                Origin::Quotient { parent, kernel, kind: QuotientKind::Center } => {
                    *parent == fact.node
                        && kernel.members() == g.center().members()
                        && qn.group.order() * kernel.order() == g.order()
                }
                _ => false,
            }
        }
        Claim::CharacterSplit { quotient: q, p, irreducible, linear } => {
            let Some(qn) = nodes.get(*q) else { return false };
            let Origin::Quotient { parent, kernel, kind: QuotientKind::CharacterKernel } = &qn.origin else {
                return false;
            };
            *parent == fact.node
                && split_holds(g, *irreducible, *linear, *p).is_some_and(|h| h.members() == kernel.members())
                && qn.group.order() * kernel.order() == g.order()
        }
        Claim::CyclicExtension { quotient: q, p, linear } => {
            let Some(qn) = nodes.get(*q) else { return false };
            let Origin::Quotient { parent, kernel, kind: QuotientKind::CyclicExtension } = &qn.origin else {
                return false;
            };
            *parent == fact.node
                && cyclic_ext_holds(g, *linear, *p, kernel)
                && qn.group.order() * kernel.order() == g.order()
        }
        Claim::NoSmallQuotient => no_small_quotient(g) == Some(true),
        Claim::CyclicSemidirect { p, k, l, alpha_order } => node
            .spec
            .as_ref()
            .and_then(cyclic_semidirect_data)
            .is_some_and(|(q, kk, ll, _, a)| (q, kk, ll, a) == (*p, *k, *l, *alpha_order)),
        Claim::MatrixModel { dim } => node.spec.as_ref().and_then(|s| dihedral_model(g, s)) == Some(*dim),
    }
}

fn verify_factors(nodes: &[Node], id: usize, fs: &[usize]) -> bool {
    let node = &nodes[id];
    if node.factors.as_deref() != Some(fs) || fs.len() < 2 {
        return false;
    }
    let orders: usize = fs.iter().map(|&f| nodes[f].group.order()).product();
    if orders != node.group.order() {
        return false;
    }
    let subgroups: Vec<Option<&Subgroup>> = fs
        .iter()
        .map(|&f| match &nodes[f].origin {
            Origin::Factor { parent, subgroup } if *parent == id => Some(subgroup.as_ref()),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()
        .unwrap_or_default();
    if subgroups.len() != fs.len() {
        return false;
    }
    if subgroups.iter().all(Option::is_none) {
        // Declared product: the factor specs are the top-level factors.
        let Some(spec) = &node.spec else { return false };
        let declared = spec.factors();
        declared.len() == fs.len()
            && fs.iter().zip(declared).all(|(&f, d)| nodes[f].spec.as_ref() == Some(d))
            && product_of(nodes, fs).is_some_and(|p| p.order() == node.group.order())
    } else {
        let subs: Option<Vec<&Subgroup>> = subgroups.into_iter().collect();
        let Some(subs) = subs else { return false };
        subs.iter().all(|s| s.is_normal())
            && subs.iter().enumerate().all(|(i, a)| {
                subs[i + 1..].iter().all(|b| a.intersection(b).is_trivial())
            })
    }
}

/// `base x (Z/p)^m` as a permutation group.
pub fn elementary_extension(base: &FiniteGroup, p: u64, m: usize) -> Option<FiniteGroup> {
    let cp = cyclic(p as usize).ok()?;
    let mut parts = vec![base.clone()];
    parts.extend(std::iter::repeat_n(cp, m));
    direct_product_many(&parts).ok()
}
