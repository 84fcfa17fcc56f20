use serde_json::{json, Value};

use super::GroupFacts;

impl GroupFacts {
    /// The analysis report: group, order, center, faithfulness, the two
    /// intervals, the derivation universe and every certificate.
    pub fn to_json(&self) -> Value {
        let certificates: Vec<Value> = self
            .certificates
            .iter()
            .map(|c| {
                json!({
                    "rule": c.rule.id(),
                    "cite": c.rule.cite(),
                    "conclusion": self.render(&c.conclusion),
                    "premises": c.premises.iter().map(|p| self.render(p)).collect::<Vec<_>>(),
                })
            })
            .collect();
        let universe: Vec<Value> = self
            .universe()
            .into_iter()
            .map(|u| {
                json!({
                    "id": u.label,
                    "description": u.description,
                    "order": u.order,
                    "covdim": u.covdim.to_json(),
                    "edim": u.edim.to_json(),
                })
            })
            .collect();
        let mut report = json!({
            "group": self.spec.clone().unwrap_or_else(|| "input group".into()),
            "order": self.order,
            "center": {
                "order": self.center_order,
                "rank": self.center_rank,
                "cyclic": self.center_cyclic,
            },
            "faithful": self.is_faithful,
            "abelian": self.is_abelian,
            "covdim": self.covdim.to_json(),
            "edim": self.edim.to_json(),
            "universe": universe,
            "certificates": certificates,
        });
        if self.trivial_convention {
            report["convention"] = json!("trivial group: covdim = edim = 0");
        }
        report
    }
}
