//! Interval bounds for covariant and essential dimension, derived by
//! forward chaining over a small universe of related groups. Every
//! tightening is recorded as a [`Certificate`] that can be replayed.

mod catalog;
mod facts;
mod report;
mod rules;
mod universe;

use std::collections::{HashMap, HashSet};

pub use catalog::{catalog_entries, verify_catalog, CatalogEntry, CatalogOutcome, CatalogReport};
pub use facts::{Certificate, Claim, DimInterval, Fact, Quantity, RuleId};
pub use rules::conclude;

use crate::dsl::{build, parse_group_spec, GroupSpec};
use crate::error::BoundError;
use crate::group::{quotient, FiniteGroup};
use universe::{
    compute_facts, cyclic_candidates, discover_factors, elementary_extension, faithful_factor_centers,
    no_small_quotient, split_candidates, verify_claim, Node, Origin, QuotientKind, MAX_DEPTH,
};

/// Upper limit on saturation passes over the whole universe.
const MAX_PASSES: usize = 10_000;

/// Everything the engine established about a group.
pub struct GroupFacts {
    pub spec: Option<String>,
    pub group: FiniteGroup,
    pub order: usize,
    pub center_order: usize,
    pub center_rank: usize,
    pub center_cyclic: bool,
    pub is_abelian: bool,
    pub abelian_rank: Option<usize>,
    pub is_faithful: Option<bool>,
    pub p_group: Option<u64>,
    pub p_ranks: Vec<(u64, usize)>,
    /// Labels of the direct factors, if the group was declared as a product.
    pub product_decomposition: Option<Vec<String>>,
    pub covdim: DimInterval,
    pub edim: DimInterval,
    pub certificates: Vec<Certificate>,
    /// The trivial group gets `covdim = edim = 0` by convention.
    pub trivial_convention: bool,
    nodes: Vec<Node>,
}

/// Parses, builds and analyzes a group specification.
pub fn analyze(spec: &str) -> Result<GroupFacts, BoundError> {
    let ast = parse_group_spec(spec)?;
    analyze_spec(&ast)
}

pub fn analyze_spec(spec: &GroupSpec) -> Result<GroupFacts, BoundError> {
    let group = build(spec)?;
    Engine::new(group, Some(spec.clone())).run()
}

/// Analyzes a group given without a construction; no product structure is
/// assumed beyond what is discovered from normal subgroups.
pub fn analyze_group(group: &FiniteGroup) -> Result<GroupFacts, BoundError> {
    Engine::new(group.clone(), None).run()
}

struct Engine {
    nodes: Vec<Node>,
    certificates: Vec<Certificate>,
    recorded: HashSet<(RuleId, Fact)>,
}

impl Engine {
    fn new(group: FiniteGroup, spec: Option<GroupSpec>) -> Self {
        let mut e = Engine { nodes: Vec::new(), certificates: Vec::new(), recorded: HashSet::new() };
        let description = spec.as_ref().map_or_else(|| "input group".to_string(), ToString::to_string);
        e.add_node(group, spec, Origin::Input, description, 0, false);
        e
    }

    fn add_node(
        &mut self,
        group: FiniteGroup,
        spec: Option<GroupSpec>,
        origin: Origin,
        description: String,
        depth: usize,
        auxiliary: bool,
    ) -> usize {
        let id = self.nodes.len();
        let facts = compute_facts(&group, spec.as_ref(), !auxiliary);
        let mut relations = Vec::new();
        if let Origin::Elementary { base, p, m } = origin {
            relations.push(Claim::ElementaryExtension { base, p, m });
        }
        self.nodes.push(Node {
            label: format!("G{id}"),
            description,
            group,
            spec,
            origin,
            depth,
            auxiliary,
            facts,
            factors: None,
            relations,
            expanded: false,
            covdim: DimInterval::unknown(),
            edim: DimInterval::unknown(),
            reasons: [None; 4],
        });
        id
    }

    fn run(mut self) -> Result<GroupFacts, BoundError> {
        let mut passes = 0;
        loop {
            while self.pass()? {
                passes += 1;
                if passes > MAX_PASSES {
                    return Err(BoundError::NoFixpoint(MAX_PASSES));
                }
            }
            if self.nodes[0].closed() || !self.expand_frontier() {
                break;
            }
        }
        Ok(self.finish())
    }

    /// Expands every open, unexpanded, non-auxiliary group within the depth
    /// limit. Returns whether anything was added.
    fn expand_frontier(&mut self) -> bool {
        let frontier: Vec<usize> = (0..self.nodes.len())
            .filter(|&i| {
                let n = &self.nodes[i];
                !n.expanded && !n.auxiliary && !n.closed() && n.depth < MAX_DEPTH && n.facts.order > 1
            })
            .collect();
        let before = self.nodes.len();
        let mut relations_added = false;
        for id in frontier {
            let r = self.nodes[id].relations.len();
            self.expand(id);
            relations_added |= self.nodes[id].relations.len() > r;
        }
        self.nodes.len() > before || relations_added
    }

    fn expand(&mut self, id: usize) {
        self.nodes[id].expanded = true;
        let depth = self.nodes[id].depth + 1;
        let label = self.nodes[id].label.clone();
        let group = self.nodes[id].group.clone();

        // Direct factors.
        let declared: Option<Vec<GroupSpec>> = self.nodes[id]
            .spec
            .as_ref()
            .filter(|s| matches!(s, GroupSpec::Product(..)))
            .map(|s| s.factors().into_iter().cloned().collect());
        let mut factor_ids = Vec::new();
        if let Some(specs) = declared {
            for s in specs {
                if let Ok(g) = build(&s) {
                    let d = format!("{s} (factor of {label})");
                    factor_ids.push(self.add_node(g, Some(s), Origin::Factor { parent: id, subgroup: None }, d, depth, false));
                }
            }
        } else if let Some((a, b)) = discover_factors(&group) {
            for (i, s) in [a, b].into_iter().enumerate() {
                if let Ok(g) = s.to_group() {
                    let d = format!("normal direct factor {} of {label} (order {})", i + 1, g.order());
                    factor_ids.push(self.add_node(g, None, Origin::Factor { parent: id, subgroup: Some(s) }, d, depth, false));
                }
            }
        }
        if factor_ids.len() >= 2 {
            self.nodes[id].factors = Some(factor_ids.clone());
            self.nodes[id].relations.push(Claim::DirectFactors(factor_ids.clone()));
        }

        // Decompositions into faithful groups, and products with (Z/p)^m.
        let mut decompositions = Vec::new();
        if self.nodes[id].facts.faithful == Some(true) {
            decompositions.push(Claim::FaithfulFactors { centers: vec![self.nodes[id].facts.center_order], whole: true });
        }
        if factor_ids.len() >= 2 {
            if let Some(centers) = faithful_factor_centers(&self.nodes, &factor_ids) {
                decompositions.push(Claim::FaithfulFactors { centers, whole: false });
            }
        }
        if !decompositions.is_empty() {
            self.nodes[id].relations.extend(decompositions);
            for p in crate::group::structure::prime_factors(group.order() as u64) {
                for m in 1..=2 {
                    if let Some(g) = elementary_extension(&group, p, m) {
                        let d = format!("{label} x (Z/{p})^{m}");
                        self.add_node(g, None, Origin::Elementary { base: id, p, m }, d, depth, true);
                    }
                }
            }
        }

        // G/Z(G) for a cyclic center meeting the derived subgroup trivially.
        let f = &self.nodes[id].facts;
        if f.center_order > 1 && f.center_cyclic && f.center_derived == Some(1) && !f.abelian {
            let z = group.center();
            if let Ok(q) = quotient(&z) {
                let d = format!("{label}/Z({label})");
                let qid = self.add_node(q.group, None, Origin::Quotient { parent: id, kernel: z, kind: QuotientKind::Center }, d, depth, false);
                self.nodes[id].relations.push(Claim::CentralQuotient(qid));
            }
        }

        // Quotients by kernels of irreducibles split off by a linear character.
        for (wi, ci, p, h) in split_candidates(&group) {
            if let Ok(q) = quotient(&h) {
                let d = format!("{label}/ker(chi_{wi}) (order {})", q.group.order());
                let qid = self.add_node(
                    q.group,
                    None,
                    Origin::Quotient { parent: id, kernel: h, kind: QuotientKind::CharacterKernel },
                    d,
                    depth,
                    false,
                );
                self.nodes[id].relations.push(Claim::CharacterSplit { quotient: qid, p, irreducible: wi, linear: ci });
            }
        }

        // Cyclic-extension diagrams.
        for (ci, p, n) in cyclic_candidates(&group) {
            if let Ok(q) = quotient(&n) {
                let d = format!("{label}/N (|N| = {}, over chi_{ci})", n.order());
                let qid = self.add_node(
                    q.group,
                    None,
                    Origin::Quotient { parent: id, kernel: n, kind: QuotientKind::CyclicExtension },
                    d,
                    depth,
                    false,
                );
                self.nodes[id].relations.push(Claim::CyclicExtension { quotient: qid, p, linear: ci });
            }
        }
    }

    fn bound_facts(&self, id: usize) -> Vec<Fact> {
        let n = &self.nodes[id];
        let mut out = Vec::new();
        for (q, iv) in [(Quantity::Covdim, n.covdim), (Quantity::Edim, n.edim)] {
            if iv.lo > 0 {
                out.push(Fact::new(id, Claim::make_bound(q, true, iv.lo)));
            }
            if let Some(h) = iv.hi {
                out.push(Fact::new(id, Claim::make_bound(q, false, h)));
            }
        }
        out
    }

    fn covdim_facts(&self, id: usize) -> Vec<Fact> {
        self.bound_facts(id)
            .into_iter()
            .filter(|f| matches!(f.claim, Claim::CovdimAtLeast(_) | Claim::CovdimAtMost(_)))
            .collect()
    }

    /// Premise lists on which `rule` may fire at group `id`.
    fn gather(&self, rule: RuleId, id: usize) -> Vec<Vec<Fact>> {
        let n = &self.nodes[id];
        let f = &n.facts;
        let at = |c: Claim| Fact::new(id, c);
        let mut out: Vec<Vec<Fact>> = Vec::new();
        match rule {
            RuleId::Trivial => {
                if f.order == 1 {
                    out.push(vec![at(Claim::Order(1))]);
                }
            }
            RuleId::Nontrivial => {
                if f.order > 1 {
                    out.push(vec![at(Claim::Order(f.order))]);
                }
            }
            RuleId::Chain => out.extend(self.bound_facts(id).into_iter().map(|b| vec![b])),
            RuleId::Abelian => {
                if let (true, Some(r)) = (f.abelian, f.abelian_rank) {
                    out.push(vec![at(Claim::Abelian(true)), at(Claim::AbelianRank(r))]);
                }
            }
            RuleId::Subgroup => {
                for &(p, rank) in &f.p_ranks {
                    out.push(vec![at(Claim::PRank { p, rank })]);
                }
                if let Origin::Elementary { base, p, m } = n.origin {
                    if let Some(&(_, r)) = self.nodes[base].facts.p_ranks.iter().find(|x| x.0 == p) {
                        out.push(vec![at(Claim::PRank { p, rank: r + m })]);
                    }
                }
                if let Some(fs) = &n.factors {
                    for &g in fs {
                        if self.nodes[g].covdim.lo > 0 {
                            out.push(vec![
                                at(Claim::DirectFactors(fs.clone())),
                                Fact::new(g, Claim::CovdimAtLeast(self.nodes[g].covdim.lo)),
                            ]);
                        }
                    }
                }
            }
            RuleId::CenterEq => {
                if f.order > 1 {
                    for b in self.bound_facts(id) {
                        out.push(vec![at(Claim::Order(f.order)), at(Claim::CenterOrder(f.center_order)), b]);
                    }
                }
            }
            RuleId::TimesPCoprime | RuleId::TimesPDivides => {
                if let Origin::Elementary { base, p, m } = n.origin {
                    let ext = at(Claim::ElementaryExtension { base, p, m });
                    let mut bounds = self.covdim_facts(base);
                    bounds.extend(self.covdim_facts(id));
                    for rel in &self.nodes[base].relations {
                        if !matches!(rel, Claim::FaithfulFactors { .. }) {
                            continue;
                        }
                        let ff = Fact::new(base, rel.clone());
                        for b in &bounds {
                            let mut ps = vec![ext.clone(), ff.clone()];
                            if rule == RuleId::TimesPCoprime {
                                ps.push(Fact::new(base, Claim::CenterOrder(self.nodes[base].facts.center_order)));
                            }
                            ps.push(b.clone());
                            out.push(ps);
                        }
                    }
                }
            }
            RuleId::CentralExt => {
                for rel in &n.relations {
                    let Claim::CentralQuotient(q) = *rel else { continue };
                    let (Some(meet), Some(qf)) = (f.center_derived, self.nodes[q].facts.faithful) else { continue };
                    let mut bounds = self.covdim_facts(q);
                    bounds.extend(self.covdim_facts(id));
                    for b in bounds {
                        out.push(vec![
                            at(rel.clone()),
                            at(Claim::CenterCyclic(f.center_cyclic)),
                            at(Claim::CenterOrder(f.center_order)),
                            at(Claim::CenterDerivedMeet(meet)),
                            Fact::new(q, Claim::Faithful(qf)),
                            b,
                        ]);
                    }
                }
            }
            RuleId::CharSplit => {
                for rel in &n.relations {
                    let Claim::CharacterSplit { quotient: q, .. } = *rel else { continue };
                    let mut bounds = self.covdim_facts(q);
                    bounds.extend(self.covdim_facts(id));
                    out.extend(bounds.into_iter().map(|b| vec![at(rel.clone()), b]));
                }
            }
            RuleId::CyclicExt => {
                for rel in &n.relations {
                    let Claim::CyclicExtension { quotient: q, .. } = *rel else { continue };
                    let qn = &self.nodes[q];
                    if let (Some(qf), true) = (qn.facts.faithful, qn.covdim.lo > 0) {
                        out.push(vec![
                            at(rel.clone()),
                            Fact::new(q, Claim::Faithful(qf)),
                            Fact::new(q, Claim::CovdimAtLeast(qn.covdim.lo)),
                        ]);
                    }
                }
            }
            RuleId::PGroupKm => {
                if let (Some(p), Some(d)) = (f.p_group, f.min_faithful_dim) {
                    out.push(vec![at(Claim::PGroup(p)), at(Claim::MinFaithfulDim(d))]);
                }
            }
            RuleId::FaithfulUb => {
                if let Some(d) = f.min_faithful_dim {
                    out.push(vec![at(Claim::MinFaithfulDim(d))]);
                }
            }
            RuleId::Covdim2Nonfaithful => {
                if f.faithful == Some(false) {
                    let mut ps = vec![at(Claim::Faithful(false)), at(Claim::Abelian(f.abelian))];
                    if let Some(r) = f.abelian_rank {
                        ps.push(at(Claim::AbelianRank(r)));
                    }
                    out.push(ps);
                }
            }
            RuleId::Covdim2Faithful => {
                if f.faithful == Some(true) && !f.cyclic && n.covdim.lo < 3 {
                    let none = *f.no_small_quotient.get_or_init(|| no_small_quotient(&n.group));
                    if none == Some(true) {
                        out.push(vec![at(Claim::Faithful(true)), at(Claim::Cyclic(false)), at(Claim::NoSmallQuotient)]);
                    }
                }
            }
            RuleId::Gpkl => {
                if let Some(c) = &f.cyclic_semidirect {
                    out.push(vec![at(c.clone())]);
                }
            }
            RuleId::Dihedral2 => {
                if let (Some(c), Some(dim)) = (&f.cyclic_semidirect, f.matrix_model) {
                    out.push(vec![at(c.clone()), at(Claim::MatrixModel { dim })]);
                }
            }
            RuleId::ProductSubadd => {
                if let Some(fs) = &n.factors {
                    let his: Option<Vec<Fact>> = fs
                        .iter()
                        .map(|&g| self.nodes[g].edim.hi.map(|h| Fact::new(g, Claim::EdimAtMost(h))))
                        .collect();
                    if let Some(his) = his {
                        let mut ps = vec![at(Claim::DirectFactors(fs.clone()))];
                        ps.extend(his);
                        out.push(ps);
                    }
                }
            }
        }
        out
    }

    /// One sweep of every rule over every group; whether anything changed.
    fn pass(&mut self) -> Result<bool, BoundError> {
        let mut changed = false;
        for id in 0..self.nodes.len() {
            for rule in RuleId::ALL {
                for premises in self.gather(rule, id) {
                    for conclusion in conclude(rule, &premises) {
                        changed |= self.apply(rule, &premises, conclusion)?;
                    }
                }
            }
        }
        Ok(changed)
    }

    fn record(&mut self, rule: RuleId, premises: &[Fact], conclusion: Fact) -> usize {
        self.certificates.push(Certificate { rule, premises: premises.to_vec(), conclusion });
        self.certificates.len() - 1
    }

    fn apply(&mut self, rule: RuleId, premises: &[Fact], conclusion: Fact) -> Result<bool, BoundError> {
        let id = conclusion.node;
        let Some((q, lower, v)) = conclusion.claim.bound() else {
            // A structural conclusion must agree with the computed fact.
            if let Claim::Faithful(b) = conclusion.claim {
                if let Some(actual) = self.nodes[id].facts.faithful {
                    if actual != b {
                        return Err(BoundError::ContradictoryFact {
                            group: self.nodes[id].description.clone(),
                            claim: format!("{} by {}", self.render(&conclusion), rule.id()),
                        });
                    }
                }
            }
            if self.recorded.insert((rule, conclusion.clone())) {
                self.record(rule, premises, conclusion);
            }
            return Ok(false);
        };
        let node = &self.nodes[id];
        let (iv, slot) = match q {
            Quantity::Covdim => (node.covdim, 0),
            Quantity::Edim => (node.edim, 2),
        };
        let tighter = if lower { v > iv.lo } else { iv.hi.is_none_or(|h| v < h) };
        if !tighter {
            return Ok(false);
        }
        let cert = self.record(rule, premises, conclusion);
        let node = &mut self.nodes[id];
        let iv = match q {
            Quantity::Covdim => &mut node.covdim,
            Quantity::Edim => &mut node.edim,
        };
        if lower {
            iv.lo = v;
            node.reasons[slot] = Some(cert);
        } else {
            iv.hi = Some(v);
            node.reasons[slot + 1] = Some(cert);
        }
        let iv = *iv;
        if iv.hi.is_some_and(|h| iv.lo > h) {
            let (lo, hi) = (node.reasons[slot], node.reasons[slot + 1]);
            return Err(BoundError::InconsistentDerivation {
                group: node.description.clone(),
                quantity: q.name(),
                lower: Box::new(self.certificates[lo.unwrap_or(cert)].clone()),
                upper: Box::new(self.certificates[hi.unwrap_or(cert)].clone()),
            });
        }
        Ok(true)
    }

    fn render(&self, f: &Fact) -> String {
        render_fact(&self.nodes, f)
    }

    fn finish(self) -> GroupFacts {
        let root = &self.nodes[0];
        let f = &root.facts;
        GroupFacts {
            spec: root.spec.as_ref().map(ToString::to_string),
            group: root.group.clone(),
            order: f.order,
            center_order: f.center_order,
            center_rank: f.center_rank,
            center_cyclic: f.center_cyclic,
            is_abelian: f.abelian,
            abelian_rank: f.abelian_rank,
            is_faithful: if f.order == 1 { Some(true) } else { f.faithful },
            p_group: f.p_group,
            p_ranks: f.p_ranks.clone(),
            product_decomposition: root
                .spec
                .as_ref()
                .filter(|s| matches!(s, GroupSpec::Product(..)))
                .map(|s| s.factors().iter().map(ToString::to_string).collect()),
            covdim: root.covdim,
            edim: root.edim,
            trivial_convention: f.order == 1,
            certificates: self.certificates,
            nodes: self.nodes,
        }
    }
}

pub(crate) fn render_fact(nodes: &[Node], f: &Fact) -> String {
    let g = nodes.get(f.node).map_or("?", |n| n.label.as_str());
    let l = |i: usize| nodes.get(i).map_or_else(|| "?".to_string(), |n| n.label.clone());
    match &f.claim {
        Claim::CovdimAtLeast(v) => format!("covdim({g}) >= {v}"),
        Claim::CovdimAtMost(v) => format!("covdim({g}) <= {v}"),
        Claim::EdimAtLeast(v) => format!("edim({g}) >= {v}"),
        Claim::EdimAtMost(v) => format!("edim({g}) <= {v}"),
        Claim::Order(o) => format!("|{g}| = {o}"),
        Claim::CenterOrder(c) => format!("|Z({g})| = {c}"),
        Claim::CenterCyclic(b) => format!("Z({g}) {}cyclic", if *b { "" } else { "not " }),
        Claim::CenterDerivedMeet(m) => format!("|Z({g}) ∩ [{g},{g}]| = {m}"),
        Claim::Abelian(b) => format!("{g} {}abelian", if *b { "" } else { "not " }),
        Claim::AbelianRank(r) => format!("rank({g}) = {r}"),
        Claim::Cyclic(b) => format!("{g} {}cyclic", if *b { "" } else { "not " }),
        Claim::Faithful(b) => format!("{g} {}faithful", if *b { "" } else { "not " }),
        Claim::PRank { p, rank } => format!("{p}-rank({g}) = {rank}"),
        Claim::MinFaithfulDim(d) => format!("min faithful dim({g}) = {d}"),
        Claim::PGroup(p) => format!("{g} is a {p}-group"),
        Claim::DirectFactors(fs) => {
            format!("{g} = {}", fs.iter().map(|&i| l(i)).collect::<Vec<_>>().join(" x "))
        }
        Claim::FaithfulFactors { centers, whole } => {
            if *whole {
                format!("{g} is nontrivial and faithful, |Z| = {}", centers[0])
            } else {
                format!("{g} is a product of nontrivial faithful groups with |Z_i| = {centers:?}")
            }
        }
        Claim::ElementaryExtension { base, p, m } => format!("{g} = {} x (Z/{p})^{m}", l(*base)),
        Claim::CentralQuotient(q) => format!("{} = {g}/Z({g})", l(*q)),
        Claim::CharacterSplit { quotient, p, irreducible, linear } => format!(
            "{} = {g}/ker(chi_{irreducible}); chi_{irreducible} + chi_{linear} faithful with a central Z/{p} acting by scalars",
            l(*quotient)
        ),
        Claim::CyclicExtension { quotient, p, linear } => {
            format!("{} = {g}/N completes the {p}-power diagram over chi_{linear}", l(*quotient))
        }
        Claim::NoSmallQuotient => format!("{g} has no quotient D_2n (n >= 2), A4, S4 or A5"),
        Claim::CyclicSemidirect { p, k, l: ll, alpha_order } => {
            format!("{g} = Z/{p}^{k} acting on Z/{p}^{ll} by an automorphism of order {alpha_order}")
        }
        Claim::MatrixModel { dim } => format!("{g} has an explicit faithful {dim}-dimensional model"),
    }
}

/// Universe entry as reported: label, description, order, intervals.
#[derive(Clone, Debug)]
pub struct UniverseEntry {
    pub label: String,
    pub description: String,
    pub order: usize,
    pub covdim: DimInterval,
    pub edim: DimInterval,
}

impl GroupFacts {
    pub fn render(&self, f: &Fact) -> String {
        render_fact(&self.nodes, f)
    }

    pub fn universe(&self) -> Vec<UniverseEntry> {
        self.nodes
            .iter()
            .map(|n| UniverseEntry {
                label: n.label.clone(),
                description: n.description.clone(),
                order: n.facts.order,
                covdim: n.covdim,
                edim: n.edim,
            })
            .collect()
    }

    /// Re-runs every certificate: structural premises are recomputed from
    /// scratch, bound premises must follow from earlier conclusions, and the
    /// rule applied to the premises must yield the recorded conclusion. The
    /// final intervals must be exactly those the certificates establish.
    pub fn replay(&self) -> Result<(), BoundError> {
        let mut established: HashMap<(usize, Quantity, bool), u64> = HashMap::new();
        let mut checked: HashMap<Fact, bool> = HashMap::new();
        let fail = |i: usize, reason: String| BoundError::ReplayFailed { index: i, reason };
        for (i, c) in self.certificates.iter().enumerate() {
            for p in &c.premises {
                match p.claim.bound() {
                    Some((q, lower, v)) => {
                        let ok = match established.get(&(p.node, q, lower)) {
                            Some(&have) => if lower { have >= v } else { have <= v },
                            None => lower && v == 0,
                        };
                        if !ok {
                            return Err(fail(i, format!("premise {} not yet established", self.render(p))));
                        }
                    }
                    None => {
                        let ok = *checked.entry(p.clone()).or_insert_with(|| verify_claim(&self.nodes, p));
                        if !ok {
                            return Err(fail(i, format!("premise {} does not hold", self.render(p))));
                        }
                    }
                }
            }
            if !conclude(c.rule, &c.premises).contains(&c.conclusion) {
                return Err(fail(i, format!("{} does not yield {}", c.rule.id(), self.render(&c.conclusion))));
            }
            if let Some((q, lower, v)) = c.conclusion.claim.bound() {
                let e = established.entry((c.conclusion.node, q, lower)).or_insert(v);
                *e = if lower { (*e).max(v) } else { (*e).min(v) };
            }
        }
        for (id, n) in self.nodes.iter().enumerate() {
            for (q, iv) in [(Quantity::Covdim, n.covdim), (Quantity::Edim, n.edim)] {
                let lo = established.get(&(id, q, true)).copied().unwrap_or(0);
                let hi = established.get(&(id, q, false)).copied();
                if lo != iv.lo || hi != iv.hi {
                    return Err(fail(self.certificates.len(), format!("{} {} of {} not reproduced", q.name(), iv, n.label)));
                }
            }
        }
        Ok(())
    }
}
