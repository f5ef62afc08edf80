use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use regmap::analysis::{lemma_suite, LemmaOptions};
use regmap::census::{parse_census, record_to_map, write_lemma_report, write_report, CensusError, ReportFormat};
use regmap::fermat::verify_fermat;
use regmap::fpgroup::{Presentation, DEFAULT_MAX_COSETS};
use regmap::mapcore::RegularMap;
use regmap::quotient::{orbit_statistics, quotient_map_bounded, subgroup_from_words};
use regmap::verifier::{analyze_named, theorem_report, MapSummary};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Maps with more rotations than this are sampled under `--sample-large`.
const LARGE_ORDER: usize = 10_000;

#[derive(Parser)]
#[command(name = "regmap", version, about = "Regular maps from group presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize the map of a presentation file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        max_cosets: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build fer(n) and check its invariants.
    Fermat { n: u64 },
    /// Validate every census record and check the density classification.
    CensusVerify {
        file: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Restrict lemma quantifiers to K vertices and elements on large maps.
        #[arg(long, value_name = "K")]
        sample_large: Option<usize>,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Quotient of a map by the subgroup generated by `;`-separated words.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Run the lemma suite and print one JSON line per check.
    Lemmas {
        file: PathBuf,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::JsonLines,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

enum Outcome {
    Clean,
    Violations,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn max_cosets(flag: Option<usize>) -> Result<usize, InputError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("REGMAP_MAX_COSETS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| InputError(format!("REGMAP_MAX_COSETS must be a positive integer, found `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_COSETS),
    }
}

fn read_map(file: &Path, bound: Option<usize>) -> Result<(String, Presentation, RegularMap), InputError> {
    let text = fs::read_to_string(file).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let p = Presentation::parse(&text).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let m = RegularMap::build(&p, max_cosets(bound)?)?;
    let id = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok((id, p, m))
}

fn analyze(file: &Path, bound: Option<usize>, format: Format) -> Result<Outcome, InputError> {
    let (id, _, m) = read_map(file, bound)?;
    let summary = analyze_named(&id, &m, &LemmaOptions::default());
    write_report(std::slice::from_ref(&summary), format.into(), io::stdout().lock())?;
    let report = theorem_report(std::slice::from_ref(&summary));
    Ok(if report.is_clean() { Outcome::Clean } else { Outcome::Violations })
}

fn fermat(n: u64) -> Result<Outcome, InputError> {
    let report = verify_fermat(n)?;
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, &report)?;
    writeln!(out)?;
    Ok(if report.pass { Outcome::Clean } else { Outcome::Violations })
}

fn census_verify(
    file: &Path,
    jobs: Option<usize>,
    format: Format,
    sample_large: Option<usize>,
    bound: Option<usize>,
) -> Result<Outcome, InputError> {
    let bound = max_cosets(bound)?;
    let f = fs::File::open(file).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let records = parse_census(BufReader::new(f)).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build()?;
    let results: Vec<Result<MapSummary, CensusError>> = pool.install(|| {
        records
            .par_iter()
            .map(|r| {
                let m = record_to_map(r, bound)?;
                let opts = LemmaOptions {
                    sample: sample_large.filter(|_| m.order() > LARGE_ORDER),
                };
                Ok(analyze_named(&r.id, &m, &opts))
            })
            .collect()
    });

    let mut summaries = Vec::new();
    let mut mismatches = 0;
    for result in results {
        match result {
            Ok(s) => summaries.push(s),
            Err(e) => {
                mismatches += 1;
                eprintln!("error: {e}");
            }
        }
    }
    write_report(&summaries, format.into(), io::stdout().lock())?;
    let report = theorem_report(&summaries);
    for v in &report.violations {
        eprintln!("violation: {v} is simple, reflexive, of density above 1/2 and neither tetrahedron nor Fermat");
    }
    for f in &report.lemma_failures {
        eprintln!("lemma failure: {} {} {}", f.id, f.lemma, f.witness.as_deref().unwrap_or(""));
    }
    eprintln!(
        "{} records, {} validated, {} high density, {} violations, {} lemma failures, {} mismatches",
        records.len(),
        report.total,
        report.high_density_count,
        report.violations.len(),
        report.lemma_failures.len(),
        mismatches
    );
    Ok(if report.is_clean() && mismatches == 0 { Outcome::Clean } else { Outcome::Violations })
}

#[derive(Serialize)]
struct QuotientSummary {
    subgroup_order: usize,
    vertex_orbits: BTreeMap<usize, usize>,
    edge_orbits: BTreeMap<usize, usize>,
    face_orbits: BTreeMap<usize, usize>,
    quotient: MapSummary,
}

fn quotient(file: &Path, subgroup: &str, bound: Option<usize>) -> Result<Outcome, InputError> {
    let (id, p, m) = read_map(file, bound)?;
    let words = subgroup
        .split(';')
        .filter(|w| !w.trim().is_empty())
        .map(|w| p.parse_word(w))
        .collect::<Result<Vec<_>, _>>()?;
    let h = subgroup_from_words(&m, &words);
    let out = quotient_map_bounded(&m, &h, max_cosets(bound)?)?;
    let stats = orbit_statistics(&m, &h);
    let summary = QuotientSummary {
        subgroup_order: h.order(),
        vertex_orbits: stats.vertices,
        edge_orbits: stats.edges,
        face_orbits: stats.faces,
        quotient: analyze_named(&format!("{id}/H"), &out, &LemmaOptions::default()),
    };
    let mut stdout = io::stdout().lock();
    serde_json::to_writer(&mut stdout, &summary)?;
    writeln!(stdout)?;
    Ok(Outcome::Clean)
}

fn lemmas(file: &Path, bound: Option<usize>) -> Result<Outcome, InputError> {
    let (id, _, m) = read_map(file, bound)?;
    let report = lemma_suite(&m);
    write_lemma_report(&id, &report, io::stdout().lock())?;
    Ok(if report.is_clean() { Outcome::Clean } else { Outcome::Violations })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { file, max_cosets, format } => analyze(&file, max_cosets, format),
        Command::Fermat { n } => fermat(n),
        Command::CensusVerify {
            file,
            jobs,
            format,
            sample_large,
            max_cosets,
        } => census_verify(&file, jobs, format, sample_large, max_cosets),
        Command::Quotient {
            file,
            subgroup,
            max_cosets,
        } => quotient(&file, &subgroup, max_cosets),
        Command::Lemmas { file, max_cosets } => lemmas(&file, max_cosets),
    };
    match result {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violations) => ExitCode::from(1),
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

