//! Command-line front end. Exit status: 0 success, 1 failed check, 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{verify, Check, VerificationReport};
use crate::classical::{cross_check, Series};
use crate::codes::BinaryCode;
use crate::composition::{sign_table, AlgebraKind};
use crate::coordalg::{axiom_report, exceptional};
use crate::lattices::{double_dual_contained, identify_root_system, minus_one_in_weyl, orthogonal_root_frame, roots_of_code_lattice};
use crate::liealg::{build_lie_algebra, LieAlgebra, StructureConstantsJson};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lieforge", version, about = "Exact models of E7, E8, F4 and classical Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Binary linear codes.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Construction A root lattices.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// The exceptional algebras.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Run checks on a structure-constant file.
    Verify(VerifyArgs),
    /// Classical matrix models.
    #[command(subcommand)]
    Classical(ClassicalCommand),
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CodeSource {
    /// Built-in code: hamming7, simplex7, exthamming8, even4.
    #[arg(long)]
    name: Option<String>,
    /// Code file: a header `n k` followed by k generator rows.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl CodeSource {
    fn load(&self) -> Result<(String, BinaryCode)> {
        match (&self.name, &self.file) {
            (Some(name), _) => Ok((name.clone(), BinaryCode::builtin_by_name(name)?)),
            (None, Some(path)) => Ok((path.display().to_string(), BinaryCode::parse_text(&read(path)?)?)),
            (None, None) => Err(Error::input("pass --name or --file")),
        }
    }
}

#[derive(Subcommand, Debug)]
enum CodeCommand {
    /// Parameters, weight enumerator and dual of a code.
    Info {
        #[command(flatten)]
        source: CodeSource,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    /// Roots of the lattice of a code and their type.
    Roots {
        /// Built-in code name.
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        code: Option<String>,
        /// Code file.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraCommand {
    /// Structure constants of e7, e8 or f4.
    Build {
        #[arg(long = "type")]
        kind: AlgebraKind,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The sign table `ε`.
    Signs {
        #[arg(long = "type")]
        kind: AlgebraKind,
    },
    /// Coordinate-algebra products and the code-algebra axiom report.
    Coordinates {
        #[arg(long = "type")]
        kind: AlgebraKind,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Structure-constant JSON file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Comma-separated subset of jacobi,killing,centralizer,roots,spectrum.
    #[arg(long, default_value = "jacobi,killing,centralizer,roots,spectrum")]
    checks: String,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum ClassicalCommand {
    /// Build a matrix model and cross-check it against the abstract builder.
    Build {
        #[arg(long)]
        series: Series,
        #[arg(long)]
        n: usize,
        /// Write the structure constants here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

impl clap::ValueEnum for AlgebraKind {
    fn value_variants<'a>() -> &'a [Self] {
        &[AlgebraKind::E7, AlgebraKind::E8, AlgebraKind::F4]
    }
    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        let lower = match self {
            AlgebraKind::E7 => "e7",
            AlgebraKind::E8 => "e8",
            AlgebraKind::F4 => "f4",
        };
        Some(clap::builder::PossibleValue::new(lower).alias(self.name()))
    }
}

impl clap::ValueEnum for Series {
    fn value_variants<'a>() -> &'a [Self] {
        &[Series::C, Series::D, Series::B]
    }
    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Parses `jacobi,killing,...` into checks, rejecting unknown names.
pub fn parse_checks(s: &str) -> Result<Vec<Check>> {
    let mut out: Vec<Check> = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(Error::input("no checks requested"));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn read_structure_constants(path: &Path) -> Result<LieAlgebra> {
    let json: StructureConstantsJson =
        serde_json::from_str(&read(path)?).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
    LieAlgebra::from_json(&json)
}

pub fn write_structure_constants(l: &LieAlgebra, path: &Path) -> Result<()> {
    std::fs::write(path, serde_json::to_string(&l.to_json())? + "\n")?;
    Ok(())
}

/// Outcome of a command: rendered output and whether every check passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

#[derive(Serialize)]
struct CodeInfo {
    source: String,
    parameters: String,
    n: usize,
    k: usize,
    d: Option<usize>,
    weight_enumerator: Vec<u64>,
    generator: Vec<String>,
    dual_parameters: String,
    self_orthogonal: bool,
    self_dual: bool,
}

fn code_info(source: &CodeSource, format: Format) -> Result<Output> {
    let (name, code) = source.load()?;
    let dual = code.dual();
    let info = CodeInfo {
        source: name,
        parameters: code.parameters_label(),
        n: code.len(),
        k: code.dimension(),
        d: code.minimum_distance(),
        weight_enumerator: code.weight_enumerator(),
        generator: code.generator().iter().map(|r| r.to_bit_string()).collect(),
        dual_parameters: dual.parameters_label(),
        self_orthogonal: code.is_subcode_of(&dual),
        self_dual: code == dual,
    };
    Ok(Output::ok(match format {
        Format::Json => to_json(&info)?,
        Format::Table => {
            let enumerator: Vec<String> = info.weight_enumerator.iter().map(u64::to_string).collect();
            format!(
                "code               {}\nparameters         {}\nweight enumerator  {}\ndual               {}\nself-orthogonal    {}\nself-dual          {}\n",
                info.source,
                info.parameters,
                enumerator.join(" "),
                info.dual_parameters,
                info.self_orthogonal,
                info.self_dual
            )
        }
    }))
}

#[derive(Serialize)]
struct LatticeInfo {
    source: String,
    root_count: usize,
    #[serde(flatten)]
    system: crate::lattices::RootSystemReport,
    minus_one_in_weyl: bool,
    double_dual_contained: bool,
    roots: Vec<Vec<i64>>,
}

fn lattice_roots(code: &Option<String>, file: &Option<PathBuf>, format: Format) -> Result<Output> {
    let source = CodeSource { name: code.clone(), file: file.clone() };
    let (name, code) = source.load()?;
    let roots = roots_of_code_lattice(&code);
    if roots.is_empty() {
        return Err(Error::input(format!("the lattice of {name} has no roots")));
    }
    let system = identify_root_system(&roots)?;
    let minus_one = orthogonal_root_frame(&roots).and_then(|f| minus_one_in_weyl(&f)).unwrap_or(false);
    let info = LatticeInfo {
        source: name,
        root_count: roots.len(),
        system,
        minus_one_in_weyl: minus_one,
        double_dual_contained: double_dual_contained(&code),
        roots: roots.iter().map(|r| r.0.clone()).collect(),
    };
    Ok(Output::ok(match format {
        Format::Json => to_json(&info)?,
        Format::Table => {
            let mut s = format!(
                "code              {}\ntype              {}\nroots             {}\nminus one in W    {}\n",
                info.source, info.system.dynkin_type, info.root_count, info.minus_one_in_weyl
            );
            s.push_str("doubled coordinates:\n");
            for r in &info.roots {
                let cells: Vec<String> = r.iter().map(|x| format!("{x:>2}")).collect();
                s.push_str(&cells.join(" "));
                s.push('\n');
            }
            s
        }
    }))
}

fn algebra_build(kind: AlgebraKind, out: &Option<PathBuf>) -> Result<Output> {
    let l = build_lie_algebra(&exceptional(kind))?;
    match out {
        Some(path) => {
            write_structure_constants(&l, path)?;
            Ok(Output::ok(format!("{kind}: dim {} written to {}\n", l.dim(), path.display())))
        }
        None => Ok(Output::ok(serde_json::to_string(&l.to_json())? + "\n")),
    }
}

#[derive(Serialize)]
struct CoordinateInfo {
    #[serde(flatten)]
    products: crate::coordalg::CoordinateAlgebraJson,
    axioms: crate::coordalg::AxiomReport,
}

fn render_verification(report: &VerificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Table => {
            let mark = |b: bool| if b { "pass" } else { "FAIL" };
            let mut s = format!("dimension    {}\nrank         {}\n", report.dimension, report.rank);
            if let Some(j) = &report.jacobi {
                s.push_str(&format!("jacobi       {}", mark(j.passed)));
                if let Some(w) = &j.witness {
                    s.push_str(&format!("  ({}, {}, {})", w.labels[0], w.labels[1], w.labels[2]));
                }
                s.push('\n');
            }
            if let Some(k) = &report.killing {
                s.push_str(&format!("killing      {}  (rank {})\n", mark(k.passed), k.rank));
            }
            if let Some(c) = &report.centralizer {
                s.push_str(&format!("centralizer  {}  (dim {})\n", mark(c.passed), c.dimension));
            }
            if let Some(r) = &report.roots {
                match (&r.system, &r.error) {
                    (Some(sys), _) => s.push_str(&format!(
                        "roots        {}  ({} roots, type {})\n",
                        mark(r.passed),
                        sys.root_count,
                        sys.dynkin_type
                    )),
                    (None, e) => s.push_str(&format!("roots        FAIL  ({})\n", e.clone().unwrap_or_default())),
                }
            }
            if let Some(sp) = &report.spectrum {
                s.push_str(&format!("spectrum     {}\n", mark(sp.passed)));
            }
            s.push_str(&format!("overall      {}\n", mark(report.passed)));
            Ok(s)
        }
    }
}

fn classical_build(series: Series, n: usize, out: &Option<PathBuf>, format: Format) -> Result<Output> {
    let (report, rebuilt) = cross_check(series, n)?;
    if let Some(path) = out {
        write_structure_constants(&rebuilt, path)?;
    }
    let text = match format {
        Format::Json => to_json(&report)?,
        Format::Table => format!(
            "algebra        {series}{n}\nambient        {}\ndimension      {} (expected {})\nblocks         {}\ntype           {} (expected {})\nrebuild        {}\n",
            report.ambient_dim,
            report.dim,
            report.expected_dim,
            report.blocks.iter().map(|b| format!("{}:{}", b.name, b.dim)).collect::<Vec<_>>().join(" "),
            report.dynkin_type,
            report.expected_type,
            if report.rebuilt_matches { "matches" } else { "differs" }
        ),
    };
    Ok(Output { text, passed: report.passed() })
}

fn dispatch(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Code(CodeCommand::Info { source, format }) => code_info(&source, format),
        Command::Lattice(LatticeCommand::Roots { code, file, format }) => lattice_roots(&code, &file, format),
        Command::Algebra(AlgebraCommand::Build { kind, out }) => algebra_build(kind, &out),
        Command::Algebra(AlgebraCommand::Signs { kind }) => Ok(Output::ok(to_json(&sign_table(kind).to_json())?)),
        Command::Algebra(AlgebraCommand::Coordinates { kind }) => {
            let a = exceptional(kind);
            let info = CoordinateInfo { products: a.to_json(), axioms: axiom_report(&a) };
            Ok(Output::ok(to_json(&info)?))
        }
        Command::Verify(args) => {
            let checks = parse_checks(&args.checks)?;
            let l = read_structure_constants(&args.input)?;
            let report = verify(&l, &checks);
            Ok(Output { text: render_verification(&report, args.format)?, passed: report.passed })
        }
        Command::Classical(ClassicalCommand::Build { series, n, out, format }) => classical_build(series, n, &out, format),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Json(_) | Error::Io(_) => EXIT_INPUT,
        _ => EXIT_FAILED,
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `stdout` and diagnostics to `stderr`; returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    match dispatch(cli) {
        Ok(out) => {
            if let Err(e) = stdout.write_all(out.text.as_bytes()) {
                let _ = writeln!(stderr, "lieforge: {e}");
                return EXIT_INPUT;
            }
            if out.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "lieforge: {e}");
            exit_code(&e)
        }
    }
}

/// Sizes the global worker pool from `LIEFORGE_THREADS` (unset or 0: automatic).
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("LIEFORGE_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("LIEFORGE_THREADS={value:?} is not a number")))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::input(e.to_string()))?;
    }
    Ok(())
}
