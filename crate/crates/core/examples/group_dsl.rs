// The group specification language: families, products, semidirect
// products and permutation generators.
//
// ```bash
// cargo run --example group_dsl
// ```

use std::error::Error;

use covdim::dsl::{build, parse_group_spec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let specs = [
        "C3 : C4 [inv]",
        "S3 x S3",
        "D8",
        "C8 : C2 [a -> a^5]",
        "(C3 x C3) : (C4 x C8) [inv; a -> a^-1, b -> b]",
        "A4 : C4 [a -> b, b -> b a^-1]",
        "perm{(1 2 3 4), (1 3)}",
    ];
    for text in specs {
        let ast = parse_group_spec(text)?;
        let printed = ast.to_string();
        if parse_group_spec(&printed)? != ast {
            return Err(format!("{text}: printing does not round-trip").into());
        }
        println!("{text:<48} order {:<5} printed as {printed}", build(&ast)?.order());
    }

    for bad in ["X3", "C3 x", "S3 : C2 [inv]", "D7", "C4 : C2 [a -> a^2]"] {
        let err = parse_group_spec(bad).and_then(|ast| build(&ast));
        match err {
            Ok(_) => return Err(format!("{bad}: accepted").into()),
            Err(e) => println!("{bad:<20} rejected: {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
