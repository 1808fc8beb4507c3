//! Command-line front end. Exit status: 0 success, 1 usage or parse error,
//! 2 verification or expectation failure.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelianize::{expected_h1, h1};
use crate::consistency::{check_central_twist, check_generation, check_psi_surjectivity};
use crate::cover::build_cover;
use crate::perm::{is_liftable, psi};
use crate::presentations::{build, lemma_suite, GroupFamily, Presentation, Variant};
use crate::report::{corrupt, verify_presentation, Engine, Report, ReportLine};
use crate::sphere::{equal_in_mod, rep_of_word};
use crate::words::{parse_word, Generator, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

pub const DEFAULT_SEED: u64 = 20240601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Algebra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Sphere,
    Cover,
    Both,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Sphere => Engine::Sphere,
            EngineArg::Cover => Engine::Cover,
            EngineArg::Both => Engine::Both,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "smodpres", version, about = "Presentations of liftable and balanced superelliptic mapping class groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// pmod, w, w-star, lmod-{boundary,marked,closed}, smod-{boundary,marked,closed}
    #[arg(long)]
    pub family: Option<String>,
    /// n, or the number of points for pmod
    #[arg(long, alias = "m")]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a presentation.
    Emit {
        #[command(flatten)]
        common: Common,
    },
    /// Check every relator in the sphere and/or cover model.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "sphere")]
        engine: EngineArg,
        /// Replace exponent-carrying relators by off-by-one corruptions.
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// First integral homology of a presentation.
    H1 {
        #[command(flatten)]
        common: Common,
        /// Compare with the closed-form table.
        #[arg(long)]
        expect: bool,
    },
    /// Classify a word as parity-preserving, parity-reversing or not liftable.
    Liftable {
        word: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run the technical identity suite.
    Lemmas {
        #[command(flatten)]
        common: Common,
    },
    /// Structural checks and cover self-tests.
    Report {
        #[command(flatten)]
        common: Common,
    },
}

struct Failure(i32, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn family_of(c: &Common) -> Result<GroupFamily, Failure> {
    let name = c.family.as_deref().ok_or_else(|| usage("missing --family"))?;
    name.parse().map_err(usage)
}

fn presentation_of(c: &Common) -> Result<Presentation, Failure> {
    let family = family_of(c)?;
    build(family, c.n, c.k).map_err(usage)
}

fn print_report(out: &mut dyn Write, report: &Report, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", report.to_json()),
        _ => write!(out, "{}", report.to_text()),
    }
}

/// Run with the given argument list (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure(EXIT_USAGE, e.to_string())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Emit { common } => {
            let p = presentation_of(&common)?;
            let text = match common.format {
                Format::Text => p.to_text(),
                Format::Json => format!("{}\n", p.to_json()),
                Format::Algebra => p.to_algebra(),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { common, engine, corrupt: inject } => {
            let mut p = presentation_of(&common)?;
            if inject {
                p = corrupt(&p);
            }
            let report = verify_presentation(&p, engine.into(), common.k).map_err(usage)?;
            print_report(out, &report, common.format).map_err(io)?;
            Ok(if report.all_ok() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::H1 { common, expect } => {
            let p = presentation_of(&common)?;
            let g = h1(&p).map_err(usage)?;
            match common.format {
                Format::Json => writeln!(out, "{}", g.to_json()),
                _ => writeln!(out, "{g}"),
            }
            .map_err(io)?;
            if !expect {
                return Ok(EXIT_OK);
            }
            let n = common.n.unwrap_or(0);
            match expected_h1(p.family, n, common.k) {
                Some(e) if e == g => Ok(EXIT_OK),
                Some(e) => Err(Failure(EXIT_FAIL, format!("expected {e}"))),
                None => Err(usage(format!("no closed form for {}", p.family))),
            }
        }
        Command::Liftable { word, common } => {
            let n = common.n.ok_or_else(|| usage("missing --n"))?;
            let w = parse_word(&word).map_err(usage)?;
            let class = is_liftable(&w, n).map_err(usage)?;
            let image = psi(&w, 2 * n + 2).map_err(usage)?;
            writeln!(out, "{class} {image}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Lemmas { common } => {
            let n = common.n.ok_or_else(|| usage("missing --n"))?;
            if n == 0 {
                return Err(usage("n must be at least 1"));
            }
            let mut lines: Vec<ReportLine> = Vec::new();
            for pair in lemma_suite(n) {
                let start = Instant::now();
                let f = rep_of_word(&pair.right.inverse().mul(&pair.left), 2 * n + 2).map_err(usage)?;
                let ok = equal_in_mod(&pair.left, &pair.right, 2 * n + 2).map_err(usage)?;
                lines.push(ReportLine {
                    tag: pair.name.clone(),
                    ok,
                    max_image_length: f.max_image_length(),
                    elapsed_ms: start.elapsed().as_millis(),
                    witness: (!ok).then(|| format!("{} vs {}", pair.left, pair.right)),
                });
            }
            lines.sort_by(|a, b| a.tag.cmp(&b.tag));
            let report = Report { lines };
            print_report(out, &report, common.format).map_err(io)?;
            Ok(if report.all_ok() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Report { common } => {
            let n = common.n.ok_or_else(|| usage("missing --n"))?;
            let k = common.k.unwrap_or(3);
            let report = structural_report(n, k, common.seed).map_err(usage)?;
            print_report(out, &report, common.format).map_err(io)?;
            Ok(if report.all_ok() { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

/// Structural checks for one `(n, k)` plus a seeded sample of the lift
/// homomorphism law.
pub fn structural_report(n: usize, k: usize, seed: u64) -> Result<Report, String> {
    let s = |e: &dyn std::fmt::Display| e.to_string();
    let mut lines = Vec::new();
    if n <= 3 {
        for v in [Variant::Closed, Variant::Marked] {
            lines.push(check_psi_surjectivity(n, v).map_err(|e| s(&e))?.to_line());
        }
    }
    lines.push(check_central_twist(n, k).map_err(|e| s(&e))?.to_line());
    for v in [Variant::Boundary, Variant::Marked, Variant::Closed] {
        lines.push(check_generation(GroupFamily::LMod(v), n, None).map_err(|e| s(&e))?.to_line());
        lines.push(check_generation(GroupFamily::SMod(v), n, Some(k)).map_err(|e| s(&e))?.to_line());
    }
    lines.push(lift_homomorphism_sample(n, k, seed, 20).map_err(|e| s(&e))?);
    lines.sort_by(|a, b| a.tag.cmp(&b.tag));
    Ok(Report { lines })
}

/// Random words in the closed generators: the product of generator matrices
/// equals the matrix of the composed automorphism.
pub fn lift_homomorphism_sample(
    n: usize,
    k: usize,
    seed: u64,
    samples: usize,
) -> Result<ReportLine, crate::cover::CoverError> {
    let start = Instant::now();
    let model = build_cover(n, k, Variant::Closed)?;
    let mut gens: Vec<Generator> = (1..=2 * n).map(|i| Generator::h(i as u32)).collect();
    gens.push(Generator::t(1, 2));
    gens.push(Generator::t(2, 3));
    gens.push(Generator::r());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witness = None;
    let mut longest = 0;
    for _ in 0..samples {
        let len = rng.gen_range(1..=6);
        let w = Word::from_letters((0..len).map(|_| {
            let g = gens[rng.gen_range(0..gens.len())].clone();
            (g, if rng.gen_bool(0.5) { 1 } else { -1 })
        }));
        let f = rep_of_word(&w, 2 * n + 2)?;
        longest = longest.max(f.max_image_length());
        let direct = model.lift_automorphism(&f)?;
        if direct != model.lift_matrix(&w)?.matrix {
            witness = Some(format!("lift of {w} is not the product of generator lifts"));
            break;
        }
    }
    Ok(ReportLine {
        tag: format!("lift-homomorphism[{n},{k},seed={seed}]"),
        ok: witness.is_none(),
        max_image_length: longest,
        elapsed_ms: start.elapsed().as_millis(),
        witness,
    })
}
