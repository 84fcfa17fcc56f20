// Character tables with exact cyclotomic values and the smallest faithful
// representation.
//
// ```bash
// cargo run --example character_table
// ```

use std::error::Error;

use covdim::dsl::group_from_spec;
use covdim::reps::{character_table, min_faithful_rep_dim};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = group_from_spec("S4")?;
    let t = character_table(&g)?;
    println!("S4, values in Q(zeta_{})", t.exponent());
    for (c, class) in t.classes().iter().enumerate() {
        println!("  class {c}: {} of size {}", g.element(class.representative), class.size());
    }
    for chi in t.irreducibles() {
        let values: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
        println!("  [{}]{}", values.join(", "), if chi.is_faithful() { "  faithful" } else { "" });
    }
    let sum: u64 = t.degrees().iter().map(|d| d * d).sum();
    if sum != g.order() as u64 || !t.check_orthogonality() {
        return Err("S4 table fails the degree sum or orthogonality".into());
    }

    let h = group_from_spec("C3 : C4 [inv]")?;
    let th = character_table(&h)?;
    println!("\nC3 : C4, values in Q(zeta_{})", th.exponent());
    for chi in th.irreducibles() {
        let values: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
        println!("  [{}]", values.join(", "));
    }

    for (spec, expected) in [("Q8", 2), ("C2 x C2", 2), ("S4", 3), ("C3 x C3 x C3", 3), ("D8 x C4", 3)] {
        let d = min_faithful_rep_dim(&group_from_spec(spec)?)?;
        println!("min faithful dimension of {spec:<14} {d}");
        if d != expected {
            return Err(format!("{spec}: expected {expected}, got {d}").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
