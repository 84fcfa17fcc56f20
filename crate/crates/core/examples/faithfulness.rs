// A group is faithful when it has a faithful irreducible representation.
// Two independent tests: the socle criterion (one normal generator for the
// abelian part of the socle) and a scan of the character table.
//
// ```bash
// cargo run --example faithfulness
// ```

use std::error::Error;

use covdim::dsl::group_from_spec;
use covdim::reps::{has_faithful_irreducible, is_faithful_product_criterion};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let specs = [
        "C12",
        "C2 x C2",
        "S3 x S3",
        "S4 x C2",
        "Q8",
        "D8 x C3",
        "C4 : C4 [a -> a^3]",
        "C9 : C3 [a -> a^4]",
        "C9 : C9 [a -> a^4]",
        "A5",
    ];
    for spec in specs {
        let g = group_from_spec(spec)?;
        let socle = g.is_faithful_gaschutz()?;
        let table = has_faithful_irreducible(&g)?;
        println!("{spec:<20} socle {socle:<5} table {table:<5}");
        if socle != table {
            return Err(format!("{spec}: the oracles disagree").into());
        }
    }

    // Products of faithful groups: faithful iff the center orders are
    // pairwise coprime.
    let s3 = group_from_spec("S3")?;
    let c4 = group_from_spec("C4")?;
    let c6 = group_from_spec("C6")?;
    println!("\nS3 x C4 faithful: {}", is_faithful_product_criterion(&[s3, c4.clone()])?);
    println!("C4 x C6 faithful: {}", is_faithful_product_criterion(&[c4, c6])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
