use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{analyze, DimInterval};

/// A group with known exact dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: String,
    pub covdim: u64,
    pub edim: Option<u64>,
}

impl CatalogEntry {
    fn new(name: &str, spec: &str, covdim: u64, edim: Option<u64>) -> Self {
        Self { name: name.into(), spec: spec.into(), covdim, edim }
    }
}

/// `Z/4` acting on `A4 = <(1 2 3), (2 3 4)>` by conjugation with `(1 2 3 4)`.
pub const A4_BY_C4: &str = "A4 : C4 [a -> b, b -> b a^-1]";
/// `C4 x C8` acting on `C3 x C3`: the `C4` generator inverts everything, the
/// `C8` generator inverts the first factor only.
pub const C3C3_BY_C4C8: &str = "(C3 x C3) : (C4 x C8) [inv; a -> a^-1, b -> b]";

/// Invariant factor lists `d1 | d2 | ..` of abelian groups of order at most
/// `max_order`, including the empty list for the trivial group.
pub fn abelian_invariants(max_order: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        let last = prefix.last().copied().unwrap_or(1);
        let mut d = if prefix.is_empty() { 2 } else { last };
        while product * d <= max {
            if d % last == 0 {
                prefix.push(d);
                extend(prefix, product * d, max, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    out
}

fn abelian_spec(inv: &[usize]) -> String {
    if inv.is_empty() {
        return "C1".into();
    }
    inv.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join(" x ")
}

/// The golden catalog: worked examples and every abelian group of order at
/// most 64 (covdim equals rank).
pub fn catalog_entries() -> Vec<CatalogEntry> {
    let mut v = vec![
        CatalogEntry::new("S3", "S3", 2, Some(1)),
        CatalogEntry::new("S4", "S4", 3, None),
        CatalogEntry::new("S3 x S3", "S3 x S3", 3, None),
        CatalogEntry::new("S3 x S4", "S3 x S4", 4, None),
        CatalogEntry::new("S4 x S4", "S4 x S4", 5, None),
        CatalogEntry::new("C3 : C4", "C3 : C4 [inv]", 2, Some(2)),
        CatalogEntry::new("A4 : C4", A4_BY_C4, 3, Some(3)),
        CatalogEntry::new("(C3 x C3) : (C4 x C8)", C3C3_BY_C4C8, 4, Some(4)),
        CatalogEntry::new("G_2(1,2,a), a(1) = 3", "C4 : C2 [a -> a^3]", 2, None),
        CatalogEntry::new("G_2(1,3,a), a(1) = 3", "C8 : C2 [a -> a^3]", 2, None),
        CatalogEntry::new("G_2(1,3,a), a(1) = 5", "C8 : C2 [a -> a^5]", 2, None),
        CatalogEntry::new("G_2(1,3,a), a(1) = 7", "C8 : C2 [a -> a^7]", 2, None),
    ];
    for inv in abelian_invariants(64) {
        let spec = abelian_spec(&inv);
        let rank = inv.len() as u64;
        v.push(CatalogEntry::new(&format!("abelian {spec}"), &spec, rank, Some(rank)));
    }
    v
}

#[derive(Clone, Debug)]
pub struct CatalogOutcome {
    pub entry: CatalogEntry,
    pub covdim: Option<DimInterval>,
    pub edim: Option<DimInterval>,
    pub certificates: usize,
    pub error: Option<String>,
    pub millis: u128,
}

impl CatalogOutcome {
    pub fn passed(&self) -> bool {
        let cov = self.covdim.and_then(|i| i.value()) == Some(self.entry.covdim);
        let ed = match self.entry.edim {
            Some(e) => self.edim.and_then(|i| i.value()) == Some(e),
            None => true,
        };
        self.error.is_none() && cov && ed
    }
}

#[derive(Clone, Debug)]
pub struct CatalogReport {
    pub outcomes: Vec<CatalogOutcome>,
}

impl CatalogReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(CatalogOutcome::passed)
    }

    pub fn failures(&self) -> Vec<&CatalogOutcome> {
        self.outcomes.iter().filter(|o| !o.passed()).collect()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .outcomes
            .iter()
            .map(|o| {
                json!({
                    "name": o.entry.name,
                    "group": o.entry.spec,
                    "expected": {"covdim": o.entry.covdim, "edim": o.entry.edim},
                    "covdim": o.covdim.map(|i| i.to_json()),
                    "edim": o.edim.map(|i| i.to_json()),
                    "certificates": o.certificates,
                    "pass": o.passed(),
                    "error": o.error,
                })
            })
            .collect();
        json!({
            "entries": entries,
            "passed": self.outcomes.iter().filter(|o| o.passed()).count(),
            "total": self.outcomes.len(),
        })
    }
}

/// Analyzes every catalog entry, in parallel, and compares with the
/// expected values. Each outcome carries its certificate count.
pub fn verify_catalog() -> CatalogReport {
    let outcomes = catalog_entries()
        .into_par_iter()
        .map(|entry| {
            let start = Instant::now();
            let result = analyze(&entry.spec).and_then(|facts| {
                facts.replay()?;
                Ok(facts)
            });
            let millis = start.elapsed().as_millis();
            match result {
                Ok(f) => CatalogOutcome {
                    entry,
                    covdim: Some(f.covdim),
                    edim: Some(f.edim),
                    certificates: f.certificates.len(),
                    error: None,
                    millis,
                },
                Err(e) => CatalogOutcome {
                    entry,
                    covdim: None,
                    edim: None,
                    certificates: 0,
                    error: Some(e.to_string()),
                    millis,
                },
            }
        })
        .collect();
    CatalogReport { outcomes }
}
