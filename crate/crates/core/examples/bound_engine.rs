// Brackets for the covariant and essential dimension, each bound backed
// by a replayable certificate.
//
// ```bash
// cargo run --example bound_engine
// ```

use std::error::Error;

use covdim::bounds::analyze;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let facts = analyze("S3 x S3")?;
    println!("S3 x S3: covdim {}, edim {}", facts.covdim, facts.edim);
    for u in facts.universe() {
        println!("  {:<4} {:<32} covdim {} edim {}", u.label, u.description, u.covdim, u.edim);
    }
    for c in &facts.certificates {
        let premises: Vec<String> = c.premises.iter().map(|p| facts.render(p)).collect();
        println!("  {:<22} {:<24} from {}", c.rule.id(), facts.render(&c.conclusion), premises.join(", "));
    }
    facts.replay()?;
    println!("all {} certificates replay", facts.certificates.len());

    for spec in ["S3", "C3 : C4 [inv]", "C8 : C2 [a -> a^3]", "C4 x C4 x C2", "S4 x S4"] {
        let f = analyze(spec)?;
        println!("{spec:<20} covdim {:<8} edim {}", f.covdim.to_string(), f.edim);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
