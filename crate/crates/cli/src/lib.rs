//! The `fingroup` command line. [`run`] holds everything so tests can
//! drive it in-process.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fingroup::classification::{self, emit_table, emit_tables, enumerate_groups_oracle, verify_paper, TableFormat, TableRow};
use fingroup::invariants::{fingerprint, CenterType, InvariantReport};
use fingroup::isomorphism::find_isomorphism;
use fingroup::presentation::{enumerate, parse_presentation, DEFAULT_MAX_COSETS};
use fingroup::{CayleyTable, Error};

#[derive(Debug, Parser)]
#[command(name = "fingroup", version, about = "Finite groups from presentations and products")]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate a presentation into a Cayley table.
    Build {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        presentation: Option<String>,
        /// Read the presentation text from a file.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        expect_order: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Write the group file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Center, derived subgroup, class equation, and counts for a group file.
    Invariants {
        #[arg(long)]
        group: PathBuf,
    },
    /// Decide whether two group files are isomorphic.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Build and verify the catalog of order 8 or 16.
    Classify {
        #[arg(long, value_parser = ["8", "16"])]
        order: String,
        #[arg(long)]
        emit: Option<Format>,
    },
    /// Exhaustively enumerate the groups of a small order.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=8))]
        order: u64,
    },
    /// Run every classification and structure check.
    VerifyPaper,
    /// Print the classification tables.
    Emit {
        #[arg(long, value_enum)]
        table: TableName,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Markdown,
    Json,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Markdown => TableFormat::Markdown,
            Format::Json => TableFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableName {
    Conclusion,
}

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

enum Failure {
    /// Bad arguments, unreadable input, or a parse error.
    Usage(String),
    /// A computation or check did not succeed.
    Check(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Build { presentation, file, expect_order, max_cosets, out: path } => {
            build(out, cli.json, presentation, file, expect_order, max_cosets, path)
        }
        Command::Invariants { group } => invariants(out, cli.json, &group),
        Command::Iso { a, b } => iso(out, cli.json, &a, &b),
        Command::Classify { order, emit } => classify(out, cli.json, order.parse().expect("validated by clap"), emit),
        Command::Enumerate { order } => enumerate_order(out, cli.json, order as usize),
        Command::VerifyPaper => verify(out, cli.json),
        Command::Emit { table: TableName::Conclusion, format } => emit(out, format),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

fn read_group(path: &Path) -> Result<CayleyTable, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    CayleyTable::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn build(
    out: &mut dyn Write,
    json: bool,
    presentation: Option<String>,
    file: Option<PathBuf>,
    expect_order: Option<usize>,
    max_cosets: usize,
    path: Option<PathBuf>,
) -> CmdResult {
    let text = match (presentation, file) {
        (Some(t), _) => t,
        (None, Some(f)) => fs::read_to_string(&f).map_err(|e| Failure::Usage(format!("{}: {e}", f.display())))?,
        (None, None) => return Err(Failure::Usage("one of --presentation or --file is required".into())),
    };
    let mut p = parse_presentation(&text).map_err(|e| Failure::Usage(e.to_string()))?.with_max_cosets(max_cosets);
    if let Some(n) = expect_order {
        p = p.with_expected_order(n);
    }
    let e = enumerate(&p).map_err(|e| Failure::Check(e.to_string()))?;
    let g = e.group;
    if let Some(path) = &path {
        fs::write(path, g.to_json() + "\n")?;
    }
    if json {
        writeln!(out, "{}", g.to_json())?;
    } else {
        writeln!(out, "order {}", g.order())?;
        writeln!(out, "presentation {p}")?;
        let names: Vec<String> = g.elements().map(|a| g.label(a).into_owned()).collect();
        writeln!(out, "elements {}", names.join(" "))?;
        if let Some(path) = path {
            writeln!(out, "wrote {}", path.display())?;
        }
    }
    Ok(EXIT_OK)
}

fn invariants(out: &mut dyn Write, json: bool, path: &Path) -> CmdResult {
    let g = read_group(path)?;
    let r = InvariantReport::new(&g);
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("report serializes"))?;
        return Ok(EXIT_OK);
    }
    let kind = r.center.kind.map_or(String::new(), |k| format!(" ({k})"));
    writeln!(out, "order            {}", r.order)?;
    writeln!(out, "center           {{{}}}{kind}", r.center.members.join(", "))?;
    writeln!(out, "derived          {{{}}}", r.derived.members.join(", "))?;
    writeln!(out, "class equation   {} = {}", r.order, r.class_equation)?;
    writeln!(out, "element orders   {}", histogram(&r.order_profile))?;
    writeln!(out, "subgroup orders  {}", histogram(&r.subgroup_counts))?;
    Ok(EXIT_OK)
}

fn histogram(h: &std::collections::BTreeMap<usize, usize>) -> String {
    h.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct IsoVerdict {
    isomorphic: bool,
    witness: Option<Vec<usize>>,
}

fn iso(out: &mut dyn Write, json: bool, a: &Path, b: &Path) -> CmdResult {
    let (g1, g2) = (read_group(a)?, read_group(b)?);
    let w = find_isomorphism(&g1, &g2);
    let verdict = IsoVerdict { isomorphic: w.is_some(), witness: w.map(|w| w.image().to_vec()) };
    if json {
        writeln!(out, "{}", serde_json::to_string(&verdict).expect("verdict serializes"))?;
    } else if let Some(image) = &verdict.witness {
        let pairs: Vec<String> = image.iter().enumerate().map(|(x, y)| format!("{}->{}", g1.label(x), g2.label(*y))).collect();
        writeln!(out, "isomorphic")?;
        writeln!(out, "witness {}", pairs.join(" "))?;
    } else {
        writeln!(out, "not isomorphic")?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Classification<'a> {
    order: usize,
    groups: Vec<TableRow>,
    checks: &'a classification::Report,
    passed: bool,
}

fn classify(out: &mut dyn Write, json: bool, order: usize, emit: Option<Format>) -> CmdResult {
    let (built, report) = classification::classify(order).expect("order validated by clap");
    let code = if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
    if let Some(format) = emit {
        let text = emit_table(order, format.into()).expect("catalog exists");
        writeln!(out, "{}", text.trim_end())?;
        return Ok(code);
    }
    let rows: Vec<TableRow> = built.iter().map(TableRow::from_built).collect();
    if json {
        let c = Classification { order, groups: rows, checks: &report, passed: report.all_passed() };
        writeln!(out, "{}", serde_json::to_string_pretty(&c).expect("classification serializes"))?;
        return Ok(code);
    }
    writeln!(out, "groups of order {order}: {}", rows.len())?;
    for r in &rows {
        writeln!(out, "  {:<12} {:<10} {}", r.name, r.center, r.presentation)?;
    }
    let pairs = report.rows_with("non-isomorphic").count();
    let distinct = report.rows_with("non-isomorphic").all(|r| r.pass);
    writeln!(out, "pairwise non-isomorphic: {} ({pairs} pairs)", if distinct { "yes" } else { "no" })?;
    for f in report.failures() {
        writeln!(out, "FAIL {} {}: expected {} computed {}", f.check_id, f.subject, f.expected, f.computed)?;
    }
    writeln!(out, "{} checks, {} failed", report.rows.len(), report.failures().count())?;
    Ok(code)
}

#[derive(Serialize)]
struct OracleGroup {
    abelian: bool,
    center: String,
    order_profile: Vec<(usize, usize)>,
    group: fingroup::group::GroupFile,
}

fn enumerate_order(out: &mut dyn Write, json: bool, n: usize) -> CmdResult {
    let groups = enumerate_groups_oracle(n).map_err(|e| match e {
        Error::OrderOutOfRange(_) => Failure::Usage(e.to_string()),
        other => Failure::Check(other.to_string()),
    })?;
    let described: Vec<OracleGroup> = groups
        .iter()
        .map(|g| OracleGroup {
            abelian: g.is_abelian(),
            center: CenterType::of(g).to_string(),
            order_profile: fingerprint(g).order_profile,
            group: g.into(),
        })
        .collect();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&described).expect("groups serialize"))?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "groups of order {n}: {}", described.len())?;
    for (i, d) in described.iter().enumerate() {
        let profile: Vec<String> = d.order_profile.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        let kind = if d.abelian { "abelian" } else { "nonabelian" };
        writeln!(out, "  #{i} {kind:<10} center {:<8} element orders {}", d.center, profile.join(" "))?;
    }
    Ok(EXIT_OK)
}

fn emit(out: &mut dyn Write, format: Format) -> CmdResult {
    writeln!(out, "{}", emit_tables(format.into()).trim_end())?;
    Ok(EXIT_OK)
}

fn verify(out: &mut dyn Write, json: bool) -> CmdResult {
    let report = verify_paper().map_err(|e| Failure::Check(e.to_string()))?;
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}
