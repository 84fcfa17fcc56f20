// Centers, derived subgroups and the abelian part of the socle for a few
// small groups.
//
// ```bash
// cargo run --example group_structure
// ```

use std::error::Error;

use covdim::dsl::group_from_spec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("{:<16} {:>5} {:>7} {:>8} {:>7} {:>9}", "group", "order", "center", "derived", "socle", "faithful");
    for spec in ["S4", "D8", "Q8", "A4", "C3 : C4 [inv]", "S3 x S3", "C2 x C2"] {
        let g = group_from_spec(spec)?;
        let socle = g.socle_abelian()?;
        println!(
            "{spec:<16} {:>5} {:>7} {:>8} {:>7} {:>9}",
            g.order(),
            g.center().order(),
            g.derived_subgroup().order(),
            socle.order(),
            g.is_faithful_gaschutz()?
        );
    }

    // S4 has the Klein four group as its only minimal normal subgroup; the
    // dihedral group of order 8 has its center.
    let s4 = group_from_spec("S4")?;
    let minimal = s4.minimal_normal_abelian_subgroups()?;
    if minimal.len() != 1 || minimal[0].order() != 4 || minimal[0].elements().any(|x| s4.element_order(x) > 2) {
        return Err("S4: expected the Klein four group".into());
    }
    let d8 = group_from_spec("D8")?;
    let socle = d8.socle_abelian()?;
    if socle.order() != 2 || socle.members() != d8.center().members() {
        return Err("D8: expected the center".into());
    }
    println!("\nS4 socle: Klein four group; D8 socle: its center of order 2");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
