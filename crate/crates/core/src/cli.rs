//! Command-line front end.
//!
//! ```text
//! covdim analyze <spec> [--json]
//! covdim faithful <spec> [--json]
//! covdim table <spec> [--json]
//! covdim covariant check|degrees|phimax|dim|faithful <file> [--beta 3,1] [--seed N] [--json]
//! covdim catalog [--json]
//! ```
//!
//! Exit status is 0 on success, 1 when a computation fails and 2 for bad
//! invocations or unreadable input. With `--json` errors are reported on
//! stdout as `{"error": {"code": .., "message": ..}}`.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bounds::{analyze_spec, verify_catalog};
use crate::covariant::io::CovariantFile;
use crate::covariant::{image_dimension, is_equivariant, is_faithful_covariant, projective_image_dimension};
use crate::dsl::{build, parse_group_spec};
use crate::error::{BoundError, CovariantError, DslError, GroupError, RepsError};
use crate::reps::{character_table, has_faithful_irreducible};

/// Seed used by randomized covariant operations when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 0x00c0_7d1e;

#[derive(Parser, Debug)]
#[command(name = "covdim", version, about = "Faithfulness, character tables and covariant dimension of finite groups")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derive covdim and edim brackets with certificates.
    Analyze { spec: String },
    /// Decide faithfulness by the socle criterion and by the character table.
    Faithful { spec: String },
    /// Print the character table.
    Table { spec: String },
    /// Operations on a covariant file.
    Covariant {
        #[command(subcommand)]
        op: CovariantOp,
    },
    /// Re-derive every catalog entry and compare with the expected values.
    Catalog,
}

#[derive(clap::Args, Debug)]
struct CovariantArgs {
    file: PathBuf,
    /// Weight vector for leading parts, comma separated.
    #[arg(long, value_delimiter = ',')]
    beta: Option<Vec<u64>>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum CovariantOp {
    /// Equivariance, multihomogeneity and the degree matrix.
    Check(CovariantArgs),
    /// The degree matrix with its rank and determinant.
    Degrees(CovariantArgs),
    /// The leading part for a weight vector, as a covariant file.
    Phimax(CovariantArgs),
    /// Dimension of the closure of the image, affine and projective.
    Dim(CovariantArgs),
    /// Whether the covariant is faithful.
    Faithful(CovariantArgs),
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    exit: i32,
    code: &'static str,
    message: String,
}

impl Failure {
    fn usage(code: &'static str, message: impl Into<String>) -> Self {
        Self { exit: 2, code, message: message.into() }
    }

    fn compute(code: &'static str, message: impl Into<String>) -> Self {
        Self { exit: 1, code, message: message.into() }
    }
}

fn group_code(e: &GroupError) -> &'static str {
    match e {
        GroupError::CapExceeded { .. } => "order_cap_exceeded",
        GroupError::BudgetExceeded { .. } => "budget_exceeded",
        GroupError::NotAPermutation(_) => "not_a_permutation",
        GroupError::DegreeMismatch => "degree_mismatch",
        GroupError::NotAHomomorphism(_) => "not_a_homomorphism",
        GroupError::TrivialGroup => "trivial_group",
        _ => "group_error",
    }
}

impl From<DslError> for Failure {
    fn from(e: DslError) -> Self {
        match &e {
            DslError::Syntax { .. } => Failure::usage("syntax_error", e.to_string()),
            DslError::Semantic(_) => Failure::usage("semantic_error", e.to_string()),
            DslError::Group(g) => Failure::compute(group_code(g), e.to_string()),
        }
    }
}

impl From<RepsError> for Failure {
    fn from(e: RepsError) -> Self {
        let code = match &e {
            RepsError::Group(g) => group_code(g),
            RepsError::NotFaithfulFactor(_) => "not_faithful_factor",
            RepsError::OracleDisagreement { .. } => "oracle_disagreement",
            RepsError::Table(_) => "character_table_failed",
        };
        Failure::compute(code, e.to_string())
    }
}

impl From<BoundError> for Failure {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Dsl(d) => d.into(),
            BoundError::Reps(r) => r.into(),
            BoundError::Group(g) => Failure::compute(group_code(&g), g.to_string()),
            BoundError::InconsistentDerivation { .. } => Failure::compute("inconsistent_derivation", e.to_string()),
            BoundError::ContradictoryFact { .. } => Failure::compute("contradictory_fact", e.to_string()),
            BoundError::NoFixpoint(_) => Failure::compute("no_fixpoint", e.to_string()),
            BoundError::ReplayFailed { .. } => Failure::compute("replay_failed", e.to_string()),
        }
    }
}

impl From<CovariantError> for Failure {
    fn from(e: CovariantError) -> Self {
        let code = match &e {
            CovariantError::Format(_) => return Failure::usage("format_error", e.to_string()),
            CovariantError::Group(g) => group_code(g),
            CovariantError::ZeroComponent(_) => "zero_component",
            CovariantError::NotMultihomogeneous { .. } => "not_multihomogeneous",
            CovariantError::BetaNotSeparating(_) => "beta_not_separating",
            CovariantError::BlockMismatch(_) => "block_mismatch",
            CovariantError::NotARepresentation(_) => "not_a_representation",
            CovariantError::NotEquivariant => "not_equivariant",
            CovariantError::NoFreePoint => "no_free_point",
            CovariantError::ChartDegenerate => "chart_degenerate",
            CovariantError::DivisionByZero => "division_by_zero",
            _ => "covariant_error",
        };
        Failure::compute(code, e.to_string())
    }
}

/// A successful run: the JSON report and its plain-text rendering. A
/// report may still carry a failing exit status (disagreeing oracles, a
/// failed catalog entry).
struct Report {
    json: Value,
    text: String,
    exit: i32,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Self { json, text, exit: 0 }
    }
}

/// Runs the tool on `argv` (including the program name) and captures what
/// it would print.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let json_mode = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CliOutput { code: 0, stdout: e.to_string(), stderr: String::new() };
            }
            let message = e.to_string();
            let message = message.strip_prefix("error: ").unwrap_or(&message).trim_end().to_string();
            return emit_failure(Failure::usage("usage_error", message), json_mode);
        }
    };
    match dispatch(&cli.command) {
        Ok(r) => {
            let stdout = if cli.json { to_json_text(&r.json) } else { r.text };
            CliOutput { code: r.exit, stdout, stderr: String::new() }
        }
        Err(f) => emit_failure(f, cli.json),
    }
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn emit_failure(f: Failure, json_mode: bool) -> CliOutput {
    if json_mode {
        let v = json!({"error": {"code": f.code, "message": f.message}});
        CliOutput { code: f.exit, stdout: to_json_text(&v), stderr: String::new() }
    } else {
        CliOutput { code: f.exit, stdout: String::new(), stderr: format!("error: {}\n", f.message) }
    }
}

fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Analyze { spec } => analyze_cmd(spec),
        Command::Faithful { spec } => faithful_cmd(spec),
        Command::Table { spec } => table_cmd(spec),
        Command::Covariant { op } => covariant_cmd(op),
        Command::Catalog => Ok(catalog_cmd()),
    }
}

fn analyze_cmd(spec: &str) -> Result<Report, Failure> {
    let ast = parse_group_spec(spec)?;
    let facts = analyze_spec(&ast)?;
    let mut text = String::new();
    let _ = writeln!(text, "group     {ast}");
    let _ = writeln!(text, "order     {}", facts.order);
    let _ = writeln!(
        text,
        "center    order {}, rank {}, {}",
        facts.center_order,
        facts.center_rank,
        if facts.center_cyclic { "cyclic" } else { "not cyclic" }
    );
    if let Some(f) = facts.is_faithful {
        let _ = writeln!(text, "faithful  {f}");
    }
    let _ = writeln!(text, "covdim    {}", facts.covdim);
    let _ = writeln!(text, "edim      {}", facts.edim);
    if facts.trivial_convention {
        let _ = writeln!(text, "note      trivial group: covdim = edim = 0 by convention");
    }
    let _ = writeln!(text, "\nuniverse:");
    for u in facts.universe() {
        let _ = writeln!(text, "  {:<4} {:<40} order {:<6} covdim {} edim {}", u.label, u.description, u.order, u.covdim, u.edim);
    }
    let _ = writeln!(text, "\ncertificates:");
    for (i, c) in facts.certificates.iter().enumerate() {
        let premises: Vec<String> = c.premises.iter().map(|p| facts.render(p)).collect();
        let _ = writeln!(text, "  {i:>3} {:<22} {}  <=  {}", c.rule.id(), facts.render(&c.conclusion), premises.join("; "));
    }
    Ok(Report::ok(facts.to_json(), text))
}

fn faithful_cmd(spec: &str) -> Result<Report, Failure> {
    let ast = parse_group_spec(spec)?;
    let g = build(&ast)?;
    if g.is_trivial() {
        let json = json!({
            "group": ast.to_string(),
            "order": 1,
            "gaschutz": null,
            "character_table": true,
            "agree": true,
            "faithful": true,
            "convention": "trivial group: faithful by convention, N_G undefined",
        });
        let text = format!("group            {ast}\norder            1\nfaithful         true (convention for the trivial group)\n");
        return Ok(Report::ok(json, text));
    }
    let gaschutz = g.is_faithful_gaschutz().map_err(|e| Failure::compute(group_code(&e), e.to_string()))?;
    let table = has_faithful_irreducible(&g)?;
    let agree = gaschutz == table;
    let json = json!({
        "group": ast.to_string(),
        "order": g.order(),
        "gaschutz": gaschutz,
        "character_table": table,
        "agree": agree,
        "faithful": if agree { Some(table) } else { None },
    });
    let text = format!(
        "group            {ast}\norder            {}\nsocle criterion  {gaschutz}\ncharacter table  {table}\n{}\n",
        g.order(),
        if agree { "oracles agree" } else { "ORACLES DISAGREE" }
    );
    Ok(Report { json, text, exit: if agree { 0 } else { 1 } })
}

fn table_cmd(spec: &str) -> Result<Report, Failure> {
    let ast = parse_group_spec(spec)?;
    let g = build(&ast)?;
    let t = character_table(&g)?;
    let json = t.to_json();
    let mut text = format!("character table of {ast} (order {}, values in z = zeta_{})\n", g.order(), t.exponent());
    let orders = g.element_orders();
    let _ = writeln!(text, "classes:");
    for (i, c) in t.classes().iter().enumerate() {
        let _ = writeln!(
            text,
            "  c{i:<3} size {:<5} order {:<4} {}",
            c.size(),
            orders[c.representative],
            g.element(c.representative)
        );
    }
    let _ = writeln!(text, "characters:");
    for (i, chi) in t.irreducibles().iter().enumerate() {
        let values: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
        let mark = if chi.is_faithful() { " *" } else { "" };
        let _ = writeln!(text, "  X{i:<3} [{}]{mark}", values.join(", "));
    }
    Ok(Report::ok(json, text))
}

fn read_covariant(path: &PathBuf) -> Result<CovariantFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage("io_error", format!("cannot read {}: {e}", path.display())))?;
    Ok(CovariantFile::from_json_str(&text)?)
}

fn degree_json(d: &crate::covariant::DegreeMatrix) -> Value {
    json!({
        "matrix": d.entries(),
        "rank": d.rank(),
        "det": d.det().map(|v| v.to_string()),
        "rational": d.is_rational(),
    })
}

fn covariant_cmd(op: &CovariantOp) -> Result<Report, Failure> {
    let (CovariantOp::Check(args)
    | CovariantOp::Degrees(args)
    | CovariantOp::Phimax(args)
    | CovariantOp::Dim(args)
    | CovariantOp::Faithful(args)) = op;
    let file = read_covariant(&args.file)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let path = args.file.display().to_string();
    match op {
        CovariantOp::Check(_) => {
            let equivariant = is_equivariant(&file.map, &file.rho_v, &file.rho_w);
            let multihomogeneous = file.map.is_multihomogeneous();
            let degrees = if multihomogeneous { Some(file.rational_map()?.degree_matrix()?) } else { None };
            let json = json!({
                "file": path,
                "group": file.group_spec,
                "domain": file.map.domain().block_dims(),
                "codomain": file.map.codomain().block_dims(),
                "rational": file.denominator.is_some(),
                "equivariant": equivariant,
                "multihomogeneous": multihomogeneous,
                "degree_matrix": degrees.as_ref().map(degree_json),
            });
            let mut text = format!("group             {}\nequivariant       {equivariant}\nmultihomogeneous  {multihomogeneous}\n", file.group_spec);
            if let Some(d) = &degrees {
                let _ = writeln!(text, "degree matrix     {d}");
            }
            Ok(Report { json, text, exit: if equivariant { 0 } else { 1 } })
        }
        CovariantOp::Degrees(_) => {
            let d = file.rational_map()?.degree_matrix()?;
            let json = json!({"file": path, "degree_matrix": degree_json(&d)});
            let det = d.det().map_or_else(|| "-".to_string(), |v| v.to_string());
            let text = format!("degree matrix  {d}\nrank           {}\ndet            {det}\n", d.rank());
            Ok(Report::ok(json, text))
        }
        CovariantOp::Phimax(_) => {
            let beta = match &args.beta {
                Some(b) => {
                    let n = file.map.domain().num_blocks();
                    if b.len() != n {
                        return Err(Failure::usage(
                            "usage_error",
                            format!("--beta has {} entries, the domain has {n} blocks", b.len()),
                        ));
                    }
                    b.clone()
                }
                None => file.map.choose_generic_beta(&mut rng),
            };
            let lead = file.with_map(file.map.phi_max(&beta)?);
            let text = lead.to_json_string()?;
            let json = json!({"file": path, "beta": beta, "seed": args.seed, "covariant": lead.to_json()?});
            Ok(Report::ok(json, text))
        }
        CovariantOp::Dim(_) => {
            let dim = image_dimension(&file.map, &mut rng);
            let projective = match projective_image_dimension(&file.map, &mut rng) {
                Ok(d) => Some(d),
                Err(CovariantError::ChartDegenerate) => None,
                Err(e) => return Err(e.into()),
            };
            let json = json!({"file": path, "seed": args.seed, "dim": dim, "projective_dim": projective});
            let mut text = format!("{dim}\n");
            if let Some(p) = projective {
                let _ = writeln!(text, "projective {p}");
            }
            Ok(Report::ok(json, text))
        }
        CovariantOp::Faithful(_) => {
            let faithful = is_faithful_covariant(&file.map, &file.rho_v, &file.rho_w, &mut rng)?;
            let json = json!({"file": path, "seed": args.seed, "faithful": faithful});
            Ok(Report::ok(json, format!("{faithful}\n")))
        }
    }
}

fn catalog_cmd() -> Report {
    let report = verify_catalog();
    let mut text = String::new();
    for o in &report.outcomes {
        let status = if o.passed() { "ok  " } else { "FAIL" };
        let show = |i: Option<crate::bounds::DimInterval>| i.map_or_else(|| "-".to_string(), |i| i.to_string());
        let _ = write!(text, "{status} {:<34} covdim {:<8} edim {:<8}", o.entry.name, show(o.covdim), show(o.edim));
        if let Some(e) = &o.error {
            let _ = write!(text, " error: {e}");
        }
        text.push('\n');
    }
    let passed = report.outcomes.iter().filter(|o| o.passed()).count();
    let _ = writeln!(text, "{passed}/{} entries reproduced", report.outcomes.len());
    let exit = if report.all_passed() { 0 } else { 1 };
    Report { json: report.to_json(), text, exit }
}
