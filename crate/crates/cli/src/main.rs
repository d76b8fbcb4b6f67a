//! `lame-dessins`: derive ramification tables, build and check the dessins
//! realizing them, enumerate small cases, export for drawing.
//!
//! Exit status: 0 on success, 1 when a check fails or no table exists,
//! 2 for usage, parse and I/O errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lame_dessins::document::{to_dot, DessinDocument};
use lame_dessins::enumerator::{EnumerationError, Enumerator, DEFAULT_DEGREE_CAP};
use lame_dessins::fuchsian::{parse_rational, SchwarzSignature};
use lame_dessins::generators::generate;
use lame_dessins::hypermap::Passport;
use lame_dessins::tables::{derive_tables, render_table, table_for_case, CaseId, TableError};
use lame_dessins::validation::validate_document;

#[derive(Parser)]
#[command(
    name = "lame-dessins",
    version,
    about = "Dessins d'enfants for Lamé operators with finite monodromy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every ramification table compatible with a Lamé parameter.
    Tables {
        #[arg(long, value_enum)]
        group: Group,
        /// Exact rational, e.g. 3/4.
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
    /// Build the marked dessin of a case and write it as JSON.
    Generate {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run the full chain of checks on a dessin document.
    Validate {
        path: PathBuf,
        #[command(flatten)]
        case: CaseArgs,
    },
    /// List the equivalence classes of a case or a passport.
    Enumerate {
        #[arg(long, requires = "k", conflicts_with = "passport")]
        case: Option<CaseId>,
        #[arg(long, requires = "case")]
        k: Option<u64>,
        /// Cycle types over 0, 1 and infinity, e.g. "1,1,1;3;3".
        #[arg(long, required_unless_present = "case")]
        passport: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: usize,
        /// Write each class to DIR/class_N.json.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Render a dessin document as Graphviz DOT or normalized JSON.
    Export {
        path: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
    },
}

#[derive(Args)]
struct CaseArgs {
    #[arg(long)]
    case: CaseId,
    #[arg(long)]
    k: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Octahedral,
    Icosahedral,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn read_document(path: &Path) -> Result<DessinDocument> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    DessinDocument::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn tables(out: &mut impl Write, group: Group, n: &str) -> Result<ExitCode> {
    let n = parse_rational(n).with_context(|| format!("--n {n:?}"))?;
    let parent = match group {
        Group::Octahedral => SchwarzSignature::octahedral(),
        Group::Icosahedral => SchwarzSignature::icosahedral(),
    };
    let found = match derive_tables(&parent, n) {
        Ok(t) => t,
        Err(e @ TableError::ParameterOutOfRange(_)) => {
            writeln!(out, "no tables: {e}")?;
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e.into()),
    };
    if found.is_empty() {
        writeln!(out, "no tables for {parent}, n = {n}")?;
        return Ok(ExitCode::from(1));
    }
    for (i, t) in found.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        write!(out, "{}", render_table(t))?;
    }
    writeln!(
        out,
        "\n{} table{}",
        found.len(),
        if found.len() == 1 { "" } else { "s" }
    )?;
    Ok(ExitCode::SUCCESS)
}

fn generate_cmd(out: &mut impl Write, case: CaseArgs, output: &Path) -> Result<ExitCode> {
    let m = generate(case.case, case.k);
    let d = m.dessin();
    write_file(output, &DessinDocument::from_marked(&m).to_json())?;
    writeln!(out, "case {} k = {}", case.case, case.k)?;
    writeln!(out, "n = {}", case.case.n(case.k))?;
    writeln!(out, "degree {}", d.degree())?;
    writeln!(out, "passport {}", d.passport())?;
    writeln!(out, "genus {}", d.genus()?)?;
    writeln!(out, "wrote {}", output.display())?;
    Ok(ExitCode::SUCCESS)
}

fn validate(out: &mut impl Write, path: &Path, case: CaseArgs) -> Result<ExitCode> {
    let doc = read_document(path)?;
    let report = validate_document(&doc, &table_for_case(case.case, case.k));
    write!(out, "{report}")?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn save_classes(dir: Option<&Path>, docs: impl Iterator<Item = DessinDocument>) -> Result<()> {
    let Some(dir) = dir else { return Ok(()) };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (i, doc) in docs.enumerate() {
        write_file(&dir.join(format!("class_{}.json", i + 1)), &doc.to_json())?;
    }
    Ok(())
}

fn plural(count: usize) -> &'static str {
    if count == 1 {
        "class"
    } else {
        "classes"
    }
}

fn cap_guidance(e: EnumerationError) -> anyhow::Error {
    match e {
        EnumerationError::DegreeCapExceeded { degree, cap } => anyhow::anyhow!(
            "degree {degree} is above the enumeration cap {cap}; pass --cap {degree} to search anyway (the search grows factorially)"
        ),
        e => e.into(),
    }
}

fn enumerate(
    out: &mut impl Write,
    case: Option<(CaseId, u64)>,
    passport: Option<&str>,
    cap: usize,
    out_dir: Option<&Path>,
) -> Result<ExitCode> {
    let enumerator = Enumerator::with_cap(cap);
    match (case, passport) {
        (Some((case, k)), None) => {
            let t = table_for_case(case, k);
            let classes = enumerator.marked(&t).map_err(cap_guidance)?;
            writeln!(out, "case {case} k = {k}, degree {}, n = {}", t.degree, t.n)?;
            writeln!(out, "{} marked {}", classes.len(), plural(classes.len()))?;
            for (i, m) in classes.iter().enumerate() {
                writeln!(out, "[{}] {m}", i + 1)?;
            }
            save_classes(out_dir, classes.iter().map(DessinDocument::from_marked))?;
        }
        (None, Some(spec)) => {
            let p = Passport::parse(spec).with_context(|| format!("--passport {spec:?}"))?;
            let classes = enumerator.passport(&p).map_err(cap_guidance)?;
            writeln!(out, "passport {p}")?;
            writeln!(out, "{} {}", classes.len(), plural(classes.len()))?;
            for (i, d) in classes.iter().enumerate() {
                writeln!(out, "[{}] {d} genus {}", i + 1, d.genus()?)?;
            }
            save_classes(out_dir, classes.iter().map(DessinDocument::from_dessin))?;
        }
        _ => bail!("give either --case with --k, or --passport"),
    }
    Ok(ExitCode::SUCCESS)
}

fn export(out: &mut impl Write, path: &Path, format: Format) -> Result<ExitCode> {
    let doc = read_document(path)?;
    match format {
        Format::Json => write!(out, "{}", doc.normalized()?.to_json())?,
        Format::Dot => {
            let dot = match doc.marks {
                Some(_) => {
                    let m = doc.to_marked()?;
                    to_dot(m.dessin(), Some(&m))
                }
                None => to_dot(&doc.to_dessin()?, None),
            };
            write!(out, "{dot}")?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    match cli.command {
        Command::Tables { group, n } => tables(out, group, &n),
        Command::Generate { case, output } => generate_cmd(out, case, &output),
        Command::Validate { path, case } => validate(out, &path, case),
        Command::Enumerate {
            case,
            k,
            passport,
            cap,
            out_dir,
        } => enumerate(
            out,
            case.zip(k),
            passport.as_deref(),
            cap,
            out_dir.as_deref(),
        ),
        Command::Export { path, format } => export(out, &path, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli, &mut out).and_then(|code| Ok(out.flush().map(|_| code)?)) {
        Ok(code) => code,
        // The reader went away (e.g. `| head`); nothing left to report.
        Err(e)
            if e.downcast_ref::<io::Error>().map(io::Error::kind)
                == Some(io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
