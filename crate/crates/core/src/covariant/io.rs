//! JSON file format for a covariant together with its group and
//! representations.
//!
//! ```json
//! {
//!   "spaces": {"domain": [2], "codomain": [3]},
//!   "group": "C2",
//!   "conductor": 1,
//!   "rep_matrices": {"domain": [[[["-1", "0"], ["0", "-1"]]]], "codomain": [..]},
//!   "map": [[[{"coeff": "1", "exponents": [2, 0]}], ..]],
//!   "denominator": [{"coeff": "1", "exponents": [0, 0]}]
//! }
//! ```
//!
//! `rep_matrices` lists, per group generator, per block, the rows of the
//! block matrix. `map` lists, per codomain block, per coordinate, the
//! monomials. Numbers are cyclotomic strings in `z = zeta_N`, `N` the
//! declared conductor.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNumber;
use crate::dsl::group_from_spec;
use crate::error::CovariantError;
use crate::group::FiniteGroup;

use super::map::{PolyMap, RationalPolyMap};
use super::poly::Poly;
use super::rep::{CycMatrix, MatrixRep};
use super::space::GradedSpace;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpaces {
    domain: Vec<usize>,
    codomain: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawReps {
    domain: Vec<Vec<Vec<Vec<String>>>>,
    codomain: Vec<Vec<Vec<Vec<String>>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMonomial {
    coeff: String,
    exponents: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    spaces: RawSpaces,
    group: String,
    conductor: u32,
    rep_matrices: RawReps,
    map: Vec<Vec<Vec<RawMonomial>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    denominator: Option<Vec<RawMonomial>>,
}

/// A covariant `phi: V -> W` (possibly rational) with the data needed to
/// check it.
#[derive(Clone, Debug)]
pub struct CovariantFile {
    pub group_spec: String,
    pub group: FiniteGroup,
    pub conductor: u32,
    pub rho_v: MatrixRep,
    pub rho_w: MatrixRep,
    pub map: PolyMap,
    pub denominator: Option<Poly>,
}

fn format_err(m: impl Into<String>) -> CovariantError {
    CovariantError::Format(m.into())
}

fn parse_matrices(
    raw: &[Vec<Vec<Vec<String>>>],
    n: u32,
) -> Result<Vec<Vec<CycMatrix>>, CovariantError> {
    raw.iter()
        .map(|blocks| {
            blocks
                .iter()
                .map(|rows| {
                    rows.iter()
                        .map(|row| row.iter().map(|s| CycNumber::parse(s, n)).collect::<Result<Vec<_>, _>>())
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect()
}

fn parse_poly(raw: &[RawMonomial], nvars: usize, n: u32) -> Result<Poly, CovariantError> {
    let mut p = Poly::zero(nvars);
    for m in raw {
        if m.exponents.len() != nvars {
            return Err(format_err(format!(
                "monomial has {} exponents, the domain has {nvars} coordinates",
                m.exponents.len()
            )));
        }
        p = &p + &Poly::term(nvars, m.exponents.clone(), CycNumber::parse(&m.coeff, n)?);
    }
    Ok(p)
}

fn print_number(c: &CycNumber, n: u32) -> Result<String, CovariantError> {
    if !n.is_multiple_of(c.conductor()) {
        return Err(format_err(format!("coefficient {c} does not live in conductor {n}")));
    }
    Ok(c.embed(n).to_string())
}

fn print_poly(p: &Poly, n: u32) -> Result<Vec<RawMonomial>, CovariantError> {
    p.terms()
        .rev()
        .map(|(m, c)| Ok(RawMonomial { coeff: print_number(c, n)?, exponents: m.0.clone() }))
        .collect()
}

fn print_matrices(rep: &MatrixRep, n: u32) -> Result<Vec<Vec<Vec<Vec<String>>>>, CovariantError> {
    rep.generator_blocks()
        .iter()
        .map(|blocks| {
            blocks
                .iter()
                .map(|m| {
                    m.iter()
                        .map(|row| row.iter().map(|c| print_number(c, n)).collect::<Result<Vec<_>, _>>())
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect()
}

impl CovariantFile {
    pub fn from_json_str(text: &str) -> Result<Self, CovariantError> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| format_err(e.to_string()))?;
        if raw.conductor == 0 {
            return Err(format_err("conductor must be positive"));
        }
        let n = raw.conductor;
        let group = group_from_spec(&raw.group).map_err(|e| format_err(format!("group {:?}: {e}", raw.group)))?;
        let domain = GradedSpace::new(raw.spaces.domain)?;
        let codomain = GradedSpace::new(raw.spaces.codomain)?;
        let rho_v = MatrixRep::new(&group, &domain, parse_matrices(&raw.rep_matrices.domain, n)?)?;
        let rho_w = MatrixRep::new(&group, &codomain, parse_matrices(&raw.rep_matrices.codomain, n)?)?;
        if raw.map.len() != codomain.num_blocks() {
            return Err(format_err(format!(
                "map has {} blocks, codomain has {}",
                raw.map.len(),
                codomain.num_blocks()
            )));
        }
        let nvars = domain.total_dim();
        let mut components = Vec::new();
        for (j, block) in raw.map.iter().enumerate() {
            if block.len() != codomain.block_dims()[j] {
                return Err(format_err(format!(
                    "map block {j} has {} coordinates, expected {}",
                    block.len(),
                    codomain.block_dims()[j]
                )));
            }
            for coord in block {
                components.push(parse_poly(coord, nvars, n)?);
            }
        }
        let map = PolyMap::new(domain, codomain, components)?;
        let denominator = raw.denominator.as_deref().map(|d| parse_poly(d, nvars, n)).transpose()?;
        if denominator.as_ref().is_some_and(Poly::is_zero) {
            return Err(CovariantError::DivisionByZero);
        }
        Ok(Self { group_spec: raw.group, group, conductor: n, rho_v, rho_w, map, denominator })
    }

    /// The same data with a different map (for example a leading part).
    pub fn with_map(&self, map: PolyMap) -> Self {
        Self { map, denominator: None, ..self.clone() }
    }

    pub fn rational_map(&self) -> Result<RationalPolyMap, CovariantError> {
        match &self.denominator {
            Some(d) => RationalPolyMap::new(self.map.clone(), d.clone()),
            None => Ok(RationalPolyMap::regular(self.map.clone())),
        }
    }

    pub fn to_json(&self) -> Result<serde_json::Value, CovariantError> {
        let n = self.conductor;
        let cod = self.map.codomain();
        let map = (0..cod.num_blocks())
            .map(|j| self.map.block(j).iter().map(|p| print_poly(p, n)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let raw = RawFile {
            spaces: RawSpaces {
                domain: self.map.domain().block_dims().to_vec(),
                codomain: cod.block_dims().to_vec(),
            },
            group: self.group_spec.clone(),
            conductor: n,
            rep_matrices: RawReps {
                domain: print_matrices(&self.rho_v, n)?,
                codomain: print_matrices(&self.rho_w, n)?,
            },
            map,
            denominator: self.denominator.as_ref().map(|d| print_poly(d, n)).transpose()?,
        };
        serde_json::to_value(raw).map_err(|e| format_err(e.to_string()))
    }

    /// Canonical text: pretty-printed JSON with a trailing newline.
    pub fn to_json_string(&self) -> Result<String, CovariantError> {
        let mut s = serde_json::to_string_pretty(&self.to_json()?).map_err(|e| format_err(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }
}
