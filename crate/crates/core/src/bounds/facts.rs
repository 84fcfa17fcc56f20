use std::fmt;

use serde_json::{json, Value};

/// A bracket `[lo, hi]` for an unknown dimension; `hi = None` is unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimInterval {
    pub lo: u64,
    pub hi: Option<u64>,
}

impl DimInterval {
    pub fn unknown() -> Self {
        Self { lo: 0, hi: None }
    }

    pub fn exact(v: u64) -> Self {
        Self { lo: v, hi: Some(v) }
    }

    /// The value when `lo == hi`.
    pub fn value(&self) -> Option<u64> {
        self.hi.filter(|&h| h == self.lo)
    }

    pub fn is_exact(&self) -> bool {
        self.value().is_some()
    }

    pub fn contains(&self, v: u64) -> bool {
        v >= self.lo && self.hi.is_none_or(|h| v <= h)
    }

    pub fn to_json(&self) -> Value {
        json!([self.lo, self.hi])
    }
}

impl Default for DimInterval {
    fn default() -> Self {
        Self::unknown()
    }
}

impl fmt::Display for DimInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(h) => write!(f, "[{}, {h}]", self.lo),
            None => write!(f, "[{}, ?]", self.lo),
        }
    }
}

/// Which of the two dimensions a bound speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Covdim,
    Edim,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Covdim => "covdim",
            Quantity::Edim => "edim",
        }
    }
}

/// A statement about one group of the derivation universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    CovdimAtLeast(u64),
    CovdimAtMost(u64),
    EdimAtLeast(u64),
    EdimAtMost(u64),
    Order(usize),
    CenterOrder(usize),
    CenterCyclic(bool),
    /// `|Z(G) ∩ [G, G]|`.
    CenterDerivedMeet(usize),
    Abelian(bool),
    AbelianRank(usize),
    Cyclic(bool),
    Faithful(bool),
    PRank { p: u64, rank: usize },
    MinFaithfulDim(u64),
    PGroup(u64),
    /// The group is the internal direct product of these universe groups.
    DirectFactors(Vec<usize>),
    /// A decomposition into nontrivial faithful groups with these center
    /// orders; `whole` means the group itself is the single factor.
    FaithfulFactors { centers: Vec<usize>, whole: bool },
    /// The group is `base x (Z/p)^m`.
    ElementaryExtension { base: usize, p: u64, m: usize },
    /// `quotient` is `G/Z(G)`.
    CentralQuotient(usize),
    /// `quotient` is `G/H` with `H` the kernel of irreducible `irreducible`,
    /// `irreducible + linear` faithful and a central element of order `p`
    /// acting by the same scalar on both summands.
    CharacterSplit { quotient: usize, p: u64, irreducible: usize, linear: usize },
    /// `quotient = G/N` sits in the cyclic-extension diagram over the
    /// linear character `linear` of `p`-power order.
    CyclicExtension { quotient: usize, p: u64, linear: usize },
    /// No quotient is dihedral of order at least 4, `A4`, `S4` or `A5`.
    NoSmallQuotient,
    /// `Z/p^k` acting on `Z/p^l` through an automorphism of order `alpha_order`.
    CyclicSemidirect { p: u64, k: u32, l: u32, alpha_order: u64 },
    /// An explicit faithful representation of this dimension.
    MatrixModel { dim: usize },
}

impl Claim {
    pub fn bound(&self) -> Option<(Quantity, bool, u64)> {
        match *self {
            Claim::CovdimAtLeast(v) => Some((Quantity::Covdim, true, v)),
            Claim::CovdimAtMost(v) => Some((Quantity::Covdim, false, v)),
            Claim::EdimAtLeast(v) => Some((Quantity::Edim, true, v)),
            Claim::EdimAtMost(v) => Some((Quantity::Edim, false, v)),
            _ => None,
        }
    }

    pub(crate) fn make_bound(q: Quantity, lower: bool, v: u64) -> Claim {
        match (q, lower) {
            (Quantity::Covdim, true) => Claim::CovdimAtLeast(v),
            (Quantity::Covdim, false) => Claim::CovdimAtMost(v),
            (Quantity::Edim, true) => Claim::EdimAtLeast(v),
            (Quantity::Edim, false) => Claim::EdimAtMost(v),
        }
    }
}

/// A claim about the universe group with the given index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fact {
    pub node: usize,
    pub claim: Claim,
}

impl Fact {
    pub fn new(node: usize, claim: Claim) -> Self {
        Self { node, claim }
    }
}

/// Forward-chaining rules of the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Trivial,
    Nontrivial,
    Chain,
    Abelian,
    Subgroup,
    CenterEq,
    TimesPCoprime,
    TimesPDivides,
    CentralExt,
    CharSplit,
    CyclicExt,
    PGroupKm,
    FaithfulUb,
    Covdim2Nonfaithful,
    Covdim2Faithful,
    Gpkl,
    Dihedral2,
    ProductSubadd,
}

impl RuleId {
    pub const ALL: [RuleId; 18] = [
        RuleId::Trivial,
        RuleId::Nontrivial,
        RuleId::Chain,
        RuleId::Abelian,
        RuleId::Subgroup,
        RuleId::CenterEq,
        RuleId::TimesPCoprime,
        RuleId::TimesPDivides,
        RuleId::CentralExt,
        RuleId::CharSplit,
        RuleId::CyclicExt,
        RuleId::PGroupKm,
        RuleId::FaithfulUb,
        RuleId::Covdim2Nonfaithful,
        RuleId::Covdim2Faithful,
        RuleId::Gpkl,
        RuleId::Dihedral2,
        RuleId::ProductSubadd,
    ];

    pub fn id(self) -> &'static str {
        match self {
            RuleId::Trivial => "R-TRIVIAL",
            RuleId::Nontrivial => "R-NONTRIVIAL",
            RuleId::Chain => "R-CHAIN",
            RuleId::Abelian => "R-ABELIAN",
            RuleId::Subgroup => "R-SUBGROUP",
            RuleId::CenterEq => "R-CENTER-EQ",
            RuleId::TimesPCoprime => "R-TIMES-P-COPRIME",
            RuleId::TimesPDivides => "R-TIMES-P-DIVIDES",
            RuleId::CentralExt => "R-CENTRAL-EXT",
            RuleId::CharSplit => "R-CHAR-SPLIT",
            RuleId::CyclicExt => "R-CYCLIC-EXT",
            RuleId::PGroupKm => "R-PGROUP-KM",
            RuleId::FaithfulUb => "R-FAITHFUL-UB",
            RuleId::Covdim2Nonfaithful => "R-COVDIM2-NONFAITHFUL",
            RuleId::Covdim2Faithful => "R-COVDIM2-FAITHFUL",
            RuleId::Gpkl => "R-GPKL",
            RuleId::Dihedral2 => "R-DIHEDRAL2",
            RuleId::ProductSubadd => "R-PRODUCT-SUBADD",
        }
    }

    /// The statement each rule instantiates.
    pub fn cite(self) -> &'static str {
        match self {
            RuleId::Trivial => "convention: the trivial group has covdim = edim = 0 (flagged)",
            RuleId::Nontrivial => "a nontrivial group has no faithful covariant of dimension 0",
            RuleId::Chain => "edim G <= covdim G <= edim G + 1",
            RuleId::Abelian => "abelian of rank r: covdim G = r",
            RuleId::Subgroup => {
                "H <= G implies covdim H <= covdim G (subgroup monotonicity, cited from earlier work); (Z/p)^r has covdim r"
            }
            RuleId::CenterEq => {
                "covdim G = edim G iff Z(G) is nontrivial; trivial center gives covdim G = edim G + 1"
            }
            RuleId::TimesPCoprime => {
                "G a product of nontrivial faithful groups, p coprime to |Z(G)|: covdim(G x Z/p) = covdim G; for faithful G, covdim(G x (Z/p)^m) = covdim G + m - 1 (single-factor products allowed)"
            }
            RuleId::TimesPDivides => {
                "p divides every |Z(G_i)|: covdim(G x (Z/p)^m) = covdim G + m"
            }
            RuleId::CentralExt => {
                "Z(G) cyclic nontrivial, Z(G) meets (G,G) trivially, G/Z(G) faithful: edim G = covdim G = covdim G/Z(G)"
            }
            RuleId::CharSplit => {
                "V = W + C_chi faithful, W irreducible, H = ker(G -> GL(W)), p | |H|, a subgroup acting as scalars Z/p on V: covdim G = covdim G/H + 1"
            }
            RuleId::CyclicExt => {
                "K -> G -> mu_(p^l) over K -> G' -> mu_(p^m), G' faithful, p | |Z(G') ∩ K|: covdim G >= covdim G' + 1"
            }
            RuleId::PGroupKm => {
                "p-groups: edim G equals the minimal dimension of a faithful representation"
            }
            RuleId::FaithfulUb => "the identity of a faithful module is a faithful covariant: covdim G <= min faithful dimension",
            RuleId::Covdim2Nonfaithful => "a non-faithful group of covariant dimension 2 is abelian of rank 2",
            RuleId::Covdim2Faithful => {
                "a faithful group of covariant dimension 2 surjects onto D_2n (n >= 2), A4, S4 or A5"
            }
            RuleId::Gpkl => {
                "Z/p^k acting on Z/p^l by alpha: faithful iff |alpha| = p^k; noncommutative with p = 2, k > 1 gives covdim >= 3; p >= 3, k >= 2 gives covdim >= 4"
            }
            RuleId::Dihedral2 => {
                "Z/2 acting on Z/2^l embeds in GL2 via diag(zeta, zeta^n) and the swap: covdim = 2"
            }
            RuleId::ProductSubadd => "edim(G x H) <= edim G + edim H (product of rational covariants)",
        }
    }
}

/// One rule application: `conclusion` follows from `premises` by `rule`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub rule: RuleId,
    pub premises: Vec<Fact>,
    pub conclusion: Fact,
}
