//! The `gamma0` command line tool.
//!
//! Exit codes: 0 on success, 1 when a verification sweep finds a failure or
//! output cannot be written, 2 on usage errors and invalid levels.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::arith::Modulus;
use crate::cosets::{build_theta, CosetTable};
use crate::domain::{arc_census, genus, glue};
use crate::output::{ArcsDoc, CosetsDoc, CuspsDoc, GenusDoc, GluingDoc, VerifyDoc, WTableDoc};
use crate::parallel::with_jobs;
use crate::render::{render_svg, RenderOptions};
use crate::verify::{summarize, verify_range, LevelReport};
use crate::wfunc::w_table;

#[derive(Debug, Parser)]
#[command(name = "gamma0", version, about = "Connected fundamental domains for Γ₀(N)")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The W table W_j for j mod N.
    Wtable { n: i64 },
    /// The coset representatives Θ in canonical order.
    Cosets { n: i64 },
    /// Cusp classes and the domain cusps falling in each.
    Cusps { n: i64 },
    /// Boundary arcs of the domain.
    Arcs { n: i64 },
    /// Side pairings with their Γ₀(N) witnesses.
    Gluing { n: i64 },
    /// Genus of X₀(N) from the glued domain.
    Genus { n: i64 },
    /// SVG drawing of the domain.
    Render {
        n: i64,
        /// Height at which the rays to ∞ are cut.
        #[arg(long, default_value_t = 2.2)]
        svg_clip: f64,
        #[arg(long, default_value_t = 900)]
        width: u32,
        #[arg(long, default_value_t = 900)]
        height: u32,
        #[arg(long)]
        no_labels: bool,
    },
    /// Run every self check for each N in A..B (inclusive).
    Verify {
        #[arg(value_name = "A..B")]
        range: Option<String>,
        #[arg(long = "range", value_name = "A..B", conflicts_with = "range")]
        range_flag: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

const VERIFY_CHUNK: i64 = 64;

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = e.print();
                    2
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn modulus(n: i64) -> Result<Modulus, Failure> {
    Modulus::new(n).map_err(|e| Failure::Usage(e.to_string()))
}

fn table(n: i64, jobs: Option<usize>) -> Result<CosetTable, Failure> {
    let md = modulus(n)?;
    with_jobs(jobs, || build_theta(md)).map_err(|e| Failure::Runtime(e.to_string()))
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("invalid range '{s}', expected A..B with 2 ≤ A ≤ B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    modulus(a)?;
    modulus(b)?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn emit<W: Write>(cli: &Cli, out: &mut W, text: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Runtime(e.to_string());
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}

fn execute<W: Write>(cli: &Cli, out: &mut W) -> Result<i32, Failure> {
    let jobs = cli.jobs;
    let text = match &cli.command {
        Command::Wtable { n } => {
            let md = modulus(*n)?;
            let t = with_jobs(jobs, || w_table(md));
            let doc = WTableDoc::new(&t);
            if cli.json {
                to_json(&doc)
            } else {
                let mut s = format!("{:>6} {:>6} {:>6}\n", "j", "W", "M");
                for (e, m) in doc.entries.iter().zip(&doc.m) {
                    let _ = writeln!(s, "{:>6} {:>6} {:>6}", e.j, e.w, m);
                }
                s
            }
        }
        Command::Cosets { n } => {
            let t = table(*n, jobs)?;
            let doc = CosetsDoc::new(&t);
            if cli.json {
                to_json(&doc)
            } else {
                let mut s = format!("N = {}: {} representatives\n", doc.n, doc.count);
                for (k, r) in doc.reps.iter().enumerate() {
                    let _ = writeln!(s, "{k:>6}  {}", r.word);
                }
                s
            }
        }
        Command::Cusps { n } => {
            let t = table(*n, jobs)?;
            let doc = CuspsDoc::new(&t);
            if cli.json {
                to_json(&doc)
            } else {
                let mut s = format!("N = {}: {} cusp classes\n", doc.n, doc.count);
                for c in &doc.classes {
                    let members: Vec<String> = c.members.iter().map(|m| format!("{} (W = {})", m.cusp, m.w)).collect();
                    let _ = writeln!(s, "d = {:<6} b = {:<6} width = {:<6} {}", c.d, c.b, c.width, members.join(", "));
                }
                s
            }
        }
        Command::Arcs { n } => {
            let t = table(*n, jobs)?;
            if cli.json {
                to_json(&ArcsDoc::new(&t))
            } else {
                let census = arc_census(&t);
                let mut s = format!("N = {}: {} boundary arcs\n", n, census.len());
                for (a, case) in census {
                    let _ = writeln!(s, "{:<20} {}", a.to_string(), case.label());
                }
                s
            }
        }
        Command::Gluing { n } => {
            let t = table(*n, jobs)?;
            let pairs = glue(&t).map_err(|e| Failure::Runtime(e.to_string()))?;
            let doc = GluingDoc::new(*n, &pairs);
            if cli.json {
                to_json(&doc)
            } else {
                let mut s = format!("N = {}: {} side pairs\n", n, doc.count);
                for p in &pairs {
                    let _ = writeln!(s, "{:<16} ~ {:<16} {:?}  {}", p.arc1.to_string(), p.arc2.to_string(), p.kind, p.witness);
                }
                s
            }
        }
        Command::Genus { n } => {
            let t = table(*n, jobs)?;
            let r = genus(&t).map_err(|e| Failure::Runtime(e.to_string()))?;
            if cli.json {
                to_json(&GenusDoc::from(&r))
            } else {
                format!("N = {}: genus {} (V = {}, E = {}, F = {})\n", r.n, r.genus, r.vertices, r.edges, r.faces)
            }
        }
        Command::Render { n, svg_clip, width, height, no_labels } => {
            if !(svg_clip.is_finite() && *svg_clip > 1.0) {
                return Err(Failure::Usage(format!("--svg-clip must exceed 1, got {svg_clip}")));
            }
            let t = table(*n, jobs)?;
            let pairs = glue(&t).map_err(|e| Failure::Runtime(e.to_string()))?;
            let opts = RenderOptions { width: *width, height: *height, clip: *svg_clip, labels: !no_labels };
            render_svg(&t, &pairs, &opts)
        }
        Command::Verify { range, range_flag } => {
            let text = range
                .as_ref()
                .or(range_flag.as_ref())
                .ok_or_else(|| Failure::Usage("verify needs a range A..B".into()))?;
            let (lo, hi) = parse_range(text)?;
            return verify(cli, out, lo, hi);
        }
    };
    emit(cli, out, &text)?;
    Ok(0)
}

fn verify<W: Write>(cli: &Cli, out: &mut W, lo: i64, hi: i64) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::Runtime(e.to_string());
    let mut file = match &cli.out {
        Some(p) => Some(std::fs::File::create(p).map_err(io)?),
        None => None,
    };
    let sink: &mut dyn Write = match file.as_mut() {
        Some(f) => f,
        None => out,
    };
    let mut all: Vec<LevelReport> = Vec::new();
    let mut start = lo;
    while start <= hi {
        let end = (start + VERIFY_CHUNK - 1).min(hi);
        let chunk = with_jobs(cli.jobs, || verify_range(start, end));
        if !cli.json {
            for r in &chunk {
                let line = match r.first_failure() {
                    None => format!("N = {}: ok (genus {})", r.n, r.genus.unwrap_or(-1)),
                    Some(c) => format!("N = {}: FAIL {}: {}", r.n, c.name, c.detail.clone().unwrap_or_default()),
                };
                writeln!(sink, "{line}").map_err(io)?;
            }
            sink.flush().map_err(io)?;
        }
        all.extend(chunk);
        start = end + 1;
    }
    let summary = summarize(lo, hi, &all);
    let failed = summary.failed;
    if cli.json {
        sink.write_all(to_json(&VerifyDoc::new(all, summary)).as_bytes()).map_err(io)?;
    } else {
        let tail = match &summary.first_failure {
            None => format!("{}..{}: {} levels checked, all passed", lo, hi, summary.checked),
            Some((n, name, detail)) => format!(
                "{}..{}: {} of {} levels failed; first failure at N = {n} ({name}: {detail})",
                lo, hi, failed, summary.checked
            ),
        };
        writeln!(sink, "{tail}").map_err(io)?;
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
