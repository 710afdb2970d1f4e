use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use magogkit::enumerate::{max_minus_ones, observed_max_minus_ones, refined_stats, visit_class, EnumerationReport};
use magogkit::io::json::{parse_documents, render_report, verdict_value, Document};
use magogkit::io::{render_ascii, render_json, render_svg};
use magogkit::verify::verify;
use magogkit::{convert, Error, Family, ObjectClass, Representation};

#[derive(Parser)]
#[command(name = "magogkit", version, about = "Magog matrices, their grid representations and ASM counterparts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate every object of a class, one document per line, followed
    /// by a report line.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// e.g. magog-matrix, magog-fpl, asm-vertex-model, square-ice
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Stop after this many objects.
        #[arg(long)]
        limit: Option<usize>,
        /// Write ascii/svg renderings to files here instead of stdout.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Convert documents to another representation.
    Convert {
        /// Target representation (e.g. fpl) or class (e.g. magog-fpl).
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        files: Vec<PathBuf>,
    },
    /// Classify documents and list every violated condition.
    Validate {
        /// Family (magog, asm) or full class (e.g. magog-fpl).
        #[arg(long)]
        class: Option<String>,
        files: Vec<PathBuf>,
    },
    /// Refined statistics of the magog matrices of order n.
    Stats {
        #[arg(long)]
        n: usize,
    },
    /// Run the invariant suite for orders 1..=max-n.
    Verify {
        #[arg(long)]
        max_n: usize,
    },
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    /// Some input or check was not valid; details are already printed.
    Rejected,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invalid { .. } => 2,
        Error::Malformed(_) | Error::OutOfRange { .. } | Error::Range(_) => 3,
        Error::ResourceLimit(_) => 4,
        Error::Internal(_) => 1,
    }
}

fn read_inputs(files: &[PathBuf]) -> Result<Vec<Document>, Failure> {
    let mut docs = Vec::new();
    if files.is_empty() {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        docs.extend(parse_documents(&text)?);
    }
    for f in files {
        docs.extend(parse_documents(&fs::read_to_string(f)?)?);
    }
    Ok(docs)
}

fn render(format: Format, x: &magogkit::Object) -> String {
    match format {
        Format::Json => render_json(x) + "\n",
        Format::Ascii => render_ascii(x),
        Format::Svg => render_svg(x),
    }
}

fn enumerate(
    n: usize,
    class: &str,
    format: Format,
    limit: Option<usize>,
    out_dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let class: ObjectClass = class.parse()?;
    if let Some(d) = out_dir {
        fs::create_dir_all(d)?;
    }
    let start = Instant::now();
    let mut emitted = 0usize;
    let mut io_error = None;
    let limit = limit.unwrap_or(usize::MAX);
    if limit > 0 {
        visit_class(n, class, &mut |x| {
            let body = render(format, &x);
            let written = match (format, out_dir) {
                (Format::Json, _) => out.write_all(body.as_bytes()),
                (_, None) => writeln!(out, "{body}"),
                (f, Some(d)) => {
                    let ext = if matches!(f, Format::Svg) { "svg" } else { "txt" };
                    fs::write(d.join(format!("{class}-n{n}-{:06}.{ext}", emitted + 1)), body)
                }
            };
            if let Err(e) = written {
                io_error = Some(e);
                return ControlFlow::Break(());
            }
            emitted += 1;
            if emitted == limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
    }
    if let Some(e) = io_error {
        return Err(e.into());
    }
    let report = EnumerationReport::new(n, class, emitted.into(), start.elapsed());
    writeln!(out, "{}", render_report(&report))?;
    eprintln!("{class} n={n}: {emitted} objects in {:.3}s", report.elapsed.as_secs_f64());
    Ok(())
}

/// The target of `convert --class`: a bare representation, or a class whose
/// family is imposed on inputs that do not declare one.
fn conversion_target(s: &str) -> Result<(Representation, Option<Family>), Error> {
    if let Ok(r) = s.parse::<Representation>() {
        return Ok((r, None));
    }
    let c: ObjectClass = s.parse()?;
    Ok((c.representation, Some(c.family)))
}

fn convert_cmd(target: &str, format: Format, files: &[PathBuf], out: &mut dyn Write) -> Result<(), Failure> {
    let (repr, family) = conversion_target(target)?;
    for mut doc in read_inputs(files)? {
        if let (Some(want), Some(have)) = (family, doc.family) {
            if want != have {
                return Err(Error::Malformed(format!("cannot convert a {have} object to the {want} family")).into());
            }
        }
        doc.family = doc.family.or(family);
        let x = doc.into_object()?;
        out.write_all(render(format, &convert(&x, repr)?).as_bytes())?;
    }
    Ok(())
}

fn class_names(doc: &Document, family: Family) -> String {
    ObjectClass::new(doc.representation, family).to_string()
}

fn validate_cmd(class: Option<&str>, files: &[PathBuf], out: &mut dyn Write) -> Result<(), Failure> {
    let requested: Option<(Option<Representation>, Family)> = match class {
        None => None,
        Some(s) => Some(match s.parse::<Family>() {
            Ok(f) => (None, f),
            Err(_) => {
                let c: ObjectClass = s.parse()?;
                (Some(c.representation), c.family)
            }
        }),
    };
    let mut all_valid = true;
    for doc in read_inputs(files)? {
        if let Some((Some(r), _)) = requested {
            if r != doc.representation {
                return Err(Error::Malformed(format!(
                    "document kind `{}` does not match the requested class",
                    doc.representation.kind()
                ))
                .into());
            }
        }
        let mut classification = Vec::new();
        let mut checks = Vec::new();
        if let magogkit::io::Payload::Entries(rows) = &doc.payload {
            let v = magogkit::matrix::validate_sign(rows)?;
            if v.is_valid() {
                classification.push("sign".to_string());
            }
            checks.push(verdict_value("sign", &v));
        }
        let mut requested_valid = None;
        for family in Family::ALL {
            let v = doc.verdict(family)?;
            let name = class_names(&doc, family);
            if v.is_valid() {
                classification.push(name.clone());
            }
            let wanted = match requested {
                Some((_, f)) => f == family,
                None => doc.family.is_none_or(|f| f == family),
            };
            if wanted {
                requested_valid = Some(requested_valid.unwrap_or(false) || v.is_valid());
                checks.push(verdict_value(&name, &v));
            }
        }
        let valid = requested_valid.unwrap_or(false);
        all_valid &= valid;
        let line = json!({
            "kind": doc.representation.kind(),
            "n": doc.n,
            "classification": classification,
            "valid": valid,
            "checks": checks,
        });
        writeln!(out, "{line}")?;
    }
    if all_valid {
        Ok(())
    } else {
        Err(Failure::Rejected)
    }
}

fn stats_cmd(n: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let start = Instant::now();
    let stats = refined_stats(n)?;
    let count: u64 = stats["minus_ones"].values().sum();
    writeln!(out, "{:<14} {:>6} {:>10}", "statistic", "value", "count")?;
    for (name, dist) in &stats {
        for (value, k) in dist {
            writeln!(out, "{name:<14} {value:>6} {k:>10}")?;
        }
    }
    let (formula, observed) = (max_minus_ones(n), observed_max_minus_ones(n)?);
    let verdict = if formula == observed { "agree" } else { "DISAGREE" };
    writeln!(out, "max_minus_ones formula {formula} observed {observed} ({verdict})")?;
    let class = ObjectClass::new(Representation::Matrix, Family::Magog);
    let mut report = EnumerationReport::new(n, class, count.into(), start.elapsed());
    report.stats = Some(stats);
    writeln!(out, "{}", render_report(&report))?;
    Ok(())
}

fn verify_cmd(max_n: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let checks = verify(max_n)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status}  n={:<2} {:<16} {}", c.n, c.name, c.detail)?;
    }
    writeln!(out, "{} checks, {failed} failed", checks.len())?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Rejected)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Enumerate { n, class, format, limit, out_dir } => {
            enumerate(n, &class, format, limit, out_dir.as_deref(), &mut out)
        }
        Command::Convert { class, format, files } => convert_cmd(&class, format, &files, &mut out),
        Command::Validate { class, files } => validate_cmd(class.as_deref(), &files, &mut out),
        Command::Stats { n } => stats_cmd(n, &mut out),
        Command::Verify { max_n } => verify_cmd(max_n, &mut out),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_error = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage_error { 3 } else { 0 });
        }
    };
    if let Some(k) = std::env::var("MAGOGKIT_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected) => ExitCode::from(2),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
