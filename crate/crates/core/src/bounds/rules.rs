//! The pure inference step of every rule: premises in, conclusions out.
//! Derivation and certificate replay both go through [`conclude`].

use super::facts::{Claim, Fact, Quantity, RuleId};

/// Covdim bound of `b` moved to `to` with `delta` added; `None` when the
/// shifted value would be negative.
fn shift_covdim(b: &Fact, to: usize, delta: i64) -> Option<Fact> {
    let (q, lower, v) = b.claim.bound()?;
    if q != Quantity::Covdim {
        return None;
    }
    let w = v as i64 + delta;
    let w = match (lower, w < 0) {
        (true, true) => 0,
        (false, true) => return None,
        _ => w as u64,
    };
    Some(Fact::new(to, Claim::make_bound(Quantity::Covdim, lower, w)))
}

/// Bound on either side of `covdim x = covdim base + delta`.
fn relate(base: usize, x: usize, delta: i64, b: &Fact) -> Vec<Fact> {
    let out = if b.node == base {
        shift_covdim(b, x, delta)
    } else if b.node == x {
        shift_covdim(b, base, -delta)
    } else {
        None
    };
    out.into_iter().collect()
}

pub fn conclude(rule: RuleId, premises: &[Fact]) -> Vec<Fact> {
    use Claim::*;
    let at = |n: usize, c: Claim| Fact::new(n, c);
    match rule {
        RuleId::Trivial => match premises {
            [Fact { node, claim: Order(1) }] => vec![at(*node, CovdimAtMost(0)), at(*node, EdimAtMost(0))],
            _ => vec![],
        },
        RuleId::Nontrivial => match premises {
            [Fact { node, claim: Order(o) }] if *o > 1 => vec![at(*node, EdimAtLeast(1))],
            _ => vec![],
        },
        RuleId::Chain => match premises {
            [Fact { node, claim }] => {
                let n = *node;
                match *claim {
                    EdimAtLeast(v) => vec![at(n, CovdimAtLeast(v))],
                    CovdimAtMost(v) => vec![at(n, EdimAtMost(v))],
                    EdimAtMost(v) => vec![at(n, CovdimAtMost(v + 1))],
                    CovdimAtLeast(v) if v > 0 => vec![at(n, EdimAtLeast(v - 1))],
                    _ => vec![],
                }
            }
            _ => vec![],
        },
        RuleId::Abelian => match premises {
            [Fact { node: a, claim: Abelian(true) }, Fact { node: b, claim: AbelianRank(r) }] if a == b => {
                vec![at(*a, CovdimAtLeast(*r as u64)), at(*a, CovdimAtMost(*r as u64))]
            }
            _ => vec![],
        },
        RuleId::Subgroup => match premises {
            [Fact { node, claim: PRank { rank, .. } }] => vec![at(*node, CovdimAtLeast(*rank as u64))],
            [Fact { node: g, claim: DirectFactors(fs) }, Fact { node: f, claim: CovdimAtLeast(v) }] if fs.contains(f) => {
                vec![at(*g, CovdimAtLeast(*v))]
            }
            _ => vec![],
        },
        RuleId::CenterEq => match premises {
            [Fact { node: a, claim: Order(o) }, Fact { node: b, claim: CenterOrder(c) }, bound]
                if a == b && bound.node == *a && *o > 1 =>
            {
                let Some((q, lower, v)) = bound.claim.bound() else { return vec![] };
                let n = *a;
                let out = if *c > 1 {
                    let other = match q {
                        Quantity::Covdim => Quantity::Edim,
                        Quantity::Edim => Quantity::Covdim,
                    };
                    Some(Claim::make_bound(other, lower, v))
                } else {
                    match q {
                        Quantity::Edim => Some(Claim::make_bound(Quantity::Covdim, lower, v + 1)),
                        Quantity::Covdim if v > 0 => Some(Claim::make_bound(Quantity::Edim, lower, v - 1)),
                        Quantity::Covdim => None,
                    }
                };
                out.map(|c| at(n, c)).into_iter().collect()
            }
            _ => vec![],
        },
        RuleId::TimesPCoprime => match premises {
            [Fact { node: x, claim: ElementaryExtension { base, p, m } }, Fact { node: b1, claim: FaithfulFactors { whole, .. } }, Fact { node: b2, claim: CenterOrder(c) }, bound]
                if b1 == base && b2 == base && !(*c as u64).is_multiple_of(*p) && *m >= 1 && (*m == 1 || *whole) =>
            {
                relate(*base, *x, *m as i64 - 1, bound)
            }
            _ => vec![],
        },
        RuleId::TimesPDivides => match premises {
            [Fact { node: x, claim: ElementaryExtension { base, p, m } }, Fact { node: b1, claim: FaithfulFactors { centers, .. } }, bound]
                if b1 == base && !centers.is_empty() && centers.iter().all(|&c| (c as u64).is_multiple_of(*p)) =>
            {
                relate(*base, *x, *m as i64, bound)
            }
            _ => vec![],
        },
        RuleId::CentralExt => match premises {
            [Fact { node: g, claim: CentralQuotient(q) }, Fact { node: g1, claim: CenterCyclic(true) }, Fact { node: g2, claim: CenterOrder(c) }, Fact { node: g3, claim: CenterDerivedMeet(1) }, Fact { node: q1, claim: Faithful(true) }, bound]
                if g == g1 && g == g2 && g == g3 && q == q1 && *c > 1 =>
            {
                relate(*q, *g, 0, bound)
            }
            _ => vec![],
        },
        RuleId::CharSplit => match premises {
            [Fact { node: g, claim: CharacterSplit { quotient, .. } }, bound] => relate(*quotient, *g, 1, bound),
            _ => vec![],
        },
        RuleId::CyclicExt => match premises {
            [Fact { node: g, claim: CyclicExtension { quotient, .. } }, Fact { node: q1, claim: Faithful(true) }, Fact { node: q, claim: CovdimAtLeast(v) }]
                if q == quotient && q1 == quotient =>
            {
                vec![at(*g, CovdimAtLeast(v + 1))]
            }
            _ => vec![],
        },
        RuleId::PGroupKm => match premises {
            [Fact { node: a, claim: PGroup(_) }, Fact { node: b, claim: MinFaithfulDim(d) }] if a == b => {
                vec![at(*a, EdimAtLeast(*d)), at(*a, EdimAtMost(*d))]
            }
            _ => vec![],
        },
        RuleId::FaithfulUb => match premises {
            [Fact { node, claim: MinFaithfulDim(d) }] => vec![at(*node, CovdimAtMost(*d))],
            _ => vec![],
        },
        RuleId::Covdim2Nonfaithful => match premises {
            [Fact { node: a, claim: Faithful(false) }, Fact { node: b, claim: Abelian(false) }] if a == b => {
                vec![at(*a, CovdimAtLeast(3))]
            }
            [Fact { node: a, claim: Faithful(false) }, Fact { node: b, claim: Abelian(true) }, Fact { node: c, claim: AbelianRank(r) }]
                if a == b && a == c && *r > 2 =>
            {
                vec![at(*a, CovdimAtLeast(3))]
            }
            _ => vec![],
        },
        RuleId::Covdim2Faithful => match premises {
            [Fact { node: a, claim: Faithful(true) }, Fact { node: b, claim: Cyclic(false) }, Fact { node: c, claim: NoSmallQuotient }]
                if a == b && a == c =>
            {
                vec![at(*a, CovdimAtLeast(3))]
            }
            _ => vec![],
        },
        RuleId::Gpkl => match premises {
            [Fact { node, claim: CyclicSemidirect { p, k, alpha_order, .. } }] => {
                let mut out = vec![at(*node, Faithful(*alpha_order == p.pow(*k)))];
                if *alpha_order > 1 {
                    if *p == 2 && *k > 1 {
                        out.push(at(*node, CovdimAtLeast(3)));
                    } else if *p >= 3 && *k >= 2 {
                        out.push(at(*node, CovdimAtLeast(4)));
                    }
                }
                out
            }
            _ => vec![],
        },
        RuleId::Dihedral2 => match premises {
            [Fact { node: a, claim: CyclicSemidirect { p: 2, k: 1, alpha_order, .. } }, Fact { node: b, claim: MatrixModel { dim: 2 } }]
                if a == b =>
            {
                let mut out = vec![at(*a, CovdimAtMost(2))];
                if *alpha_order > 1 {
                    out.push(at(*a, CovdimAtLeast(2)));
                }
                out
            }
            _ => vec![],
        },
        RuleId::ProductSubadd => match premises {
            [Fact { node: g, claim: DirectFactors(fs) }, rest @ ..] if rest.len() == fs.len() && !fs.is_empty() => {
                let mut sum = 0;
                for (f, b) in fs.iter().zip(rest) {
                    match b {
                        Fact { node, claim: EdimAtMost(v) } if node == f => sum += v,
                        _ => return vec![],
                    }
                }
                vec![at(*g, EdimAtMost(sum))]
            }
            _ => vec![],
        },
    }
}
