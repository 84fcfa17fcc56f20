// Drives the command-line front end in process and parses its JSON.
//
// ```bash
// cargo run --example cli_reports
// ```

use std::error::Error;

use covdim::cli::run;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let veronese = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/veronese.json");
    let calls: Vec<Vec<&str>> = vec![
        vec!["analyze", "S4 x S4", "--json"],
        vec!["faithful", "C2 x C2", "--json"],
        vec!["table", "Q8", "--json"],
        vec!["covariant", "dim", veronese, "--json"],
        vec!["covariant", "phimax", veronese, "--seed", "3", "--json"],
        vec!["analyze", "C3 : C2 [inv] x", "--json"],
    ];
    for args in calls {
        let out = run(std::iter::once("covdim").chain(args.iter().copied()));
        let v: serde_json::Value = serde_json::from_str(&out.stdout)?;
        let summary = match args[0] {
            "analyze" if out.code == 0 => format!("covdim {} edim {}", v["covdim"], v["edim"]),
            "faithful" => format!("socle {} table {} agree {}", v["gaschutz"], v["character_table"], v["agree"]),
            "table" => format!("{} classes", v["classes"].as_array().map_or(0, Vec::len)),
            "covariant" if args[1] == "dim" => format!("dim {} projective {}", v["dim"], v["projective_dim"]),
            "covariant" => format!("beta {}", v["beta"]),
            _ => format!("error {}", v["error"]["code"]),
        };
        println!("exit {} {:<40} {summary}", out.code, args[..2].join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
