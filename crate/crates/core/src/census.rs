//! Census files of regular maps and the report formats.
//!
//! One record per line:
//!
//! ```text
//! id=R3.1 genus=3 type={3,7} order=168 chiral=false rels=R^3;S^7;(R*S)^2;(R^-1*S^2)^4
//! ```
//!
//! `order` is the order of the rotation group. Lines starting with `#` and
//! blank lines are ignored. Fields are separated by whitespace and must
//! appear in the order shown; `rels` takes the rest of the line.

use crate::analysis::LemmaReport;
use crate::fpgroup::{parse_word, ParseError, Presentation, Word};
use crate::mapcore::{MapError, RegularMap};
use crate::verifier::MapSummary;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use std::io::{self, BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("line {line}{}: {message}", id.as_ref().map(|i| format!(" ({i})")).unwrap_or_default())]
    Syntax {
        line: usize,
        id: Option<String>,
        message: String,
    },
    #[error("line {line}: duplicate id {id}")]
    DuplicateId { id: String, line: usize },
    #[error("{id}: declared {field}={declared} but the map has {computed}")]
    DeclarationMismatch {
        id: String,
        field: &'static str,
        declared: String,
        computed: String,
    },
    #[error("{id}: {source}")]
    Map { id: String, source: MapError },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub id: String,
    pub genus: u64,
    pub p: usize,
    pub q: usize,
    /// Order of the rotation group.
    pub rotation_order: usize,
    pub chiral: bool,
    pub relators: Vec<Word>,
}

impl CensusRecord {
    pub fn presentation(&self) -> Presentation {
        Presentation::map(self.relators.clone())
    }
}

impl fmt::Display for CensusRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["R".to_string(), "S".to_string()];
        write!(
            f,
            "id={} genus={} type={{{},{}}} order={} chiral={} rels=",
            self.id, self.genus, self.p, self.q, self.rotation_order, self.chiral
        )?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}", r.display(&names))?;
        }
        Ok(())
    }
}

fn positive(value: &str, field: &str) -> Result<usize, String> {
    match value.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("{field} must be a positive integer, found `{value}`")),
    }
}

fn parse_line(line: &str) -> Result<CensusRecord, (Option<String>, String)> {
    let mut rest = line.trim();
    let mut take = |key: &str, last: bool| -> Result<String, String> {
        let prefix = format!("{key}=");
        let body = rest
            .strip_prefix(&prefix)
            .ok_or_else(|| format!("expected field `{key}=`"))?;
        let (value, tail) = if last {
            (body.trim_end(), "")
        } else {
            body.split_once(char::is_whitespace).unwrap_or((body, ""))
        };
        if value.is_empty() {
            return Err(format!("empty value for `{key}`"));
        }
        rest = tail.trim_start();
        Ok(value.to_string())
    };

    let id = take("id", false).map_err(|m| (None, m))?;
    let fail = |m: String| (Some(id.clone()), m);
    let genus = take("genus", false).map_err(fail)?;
    let genus = genus
        .parse::<u64>()
        .map_err(|_| fail(format!("genus must be a non-negative integer, found `{genus}`")))?;
    let ty = take("type", false).map_err(fail)?;
    let (p, q) = ty
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .and_then(|t| t.split_once(','))
        .ok_or_else(|| fail(format!("type must look like {{p,q}}, found `{ty}`")))?;
    let p = positive(p.trim(), "p").map_err(fail)?;
    let q = positive(q.trim(), "q").map_err(fail)?;
    let order = take("order", false).map_err(fail)?;
    let rotation_order = positive(&order, "order").map_err(fail)?;
    let chiral = match take("chiral", false).map_err(fail)?.as_str() {
        "true" => true,
        "false" => false,
        other => return Err(fail(format!("chiral must be true or false, found `{other}`"))),
    };
    let rels = take("rels", true).map_err(fail)?;
    let names = ["R".to_string(), "S".to_string()];
    let mut relators = Vec::new();
    for (i, text) in rels.split(';').enumerate() {
        let w = parse_word(text, &names).map_err(|e| match e {
            ParseError::Syntax { column, message, .. } => fail(format!("relator {}: column {column}: {message}", i + 1)),
            other => fail(format!("relator {}: {other}", i + 1)),
        })?;
        if w.is_empty() {
            return Err(fail(format!("relator {} is trivial", i + 1)));
        }
        relators.push(w);
    }
    Ok(CensusRecord {
        id,
        genus,
        p,
        q,
        rotation_order,
        chiral,
        relators,
    })
}

/// Parses every record; ids must be unique.
pub fn parse_census(input: impl BufRead) -> Result<Vec<CensusRecord>, CensusError> {
    let mut records = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let record = parse_line(trimmed).map_err(|(id, message)| CensusError::Syntax {
            line: i + 1,
            id,
            message,
        })?;
        if !seen.insert(record.id.clone()) {
            return Err(CensusError::DuplicateId {
                id: record.id,
                line: i + 1,
            });
        }
        records.push(record);
    }
    Ok(records)
}

pub fn parse_census_str(text: &str) -> Result<Vec<CensusRecord>, CensusError> {
    parse_census(text.as_bytes())
}

/// Canonical form: one record per line, single spaces, LF endings.
pub fn write_census(records: &[CensusRecord], mut out: impl Write) -> io::Result<()> {
    for r in records {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

/// Builds the map and checks every declared field against it.
pub fn record_to_map(r: &CensusRecord, max_cosets: usize) -> Result<RegularMap, CensusError> {
    let m = RegularMap::build(&r.presentation(), max_cosets).map_err(|source| CensusError::Map {
        id: r.id.clone(),
        source,
    })?;
    let mismatch = |field: &'static str, declared: String, computed: String| CensusError::DeclarationMismatch {
        id: r.id.clone(),
        field,
        declared,
        computed,
    };
    if m.order() != r.rotation_order {
        return Err(mismatch("order", r.rotation_order.to_string(), m.order().to_string()));
    }
    if m.map_type() != (r.p, r.q) {
        return Err(mismatch(
            "type",
            format!("{{{},{}}}", r.p, r.q),
            format!("{{{},{}}}", m.p(), m.q()),
        ));
    }
    if m.genus() != r.genus {
        return Err(mismatch("genus", r.genus.to_string(), m.genus().to_string()));
    }
    let chiral = !m.is_reflexive();
    if chiral != r.chiral {
        return Err(mismatch("chiral", r.chiral.to_string(), chiral.to_string()));
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    JsonLines,
    Csv,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    order: usize,
    p: usize,
    q: usize,
    genus: u64,
    simple: bool,
    reflexive: bool,
    density: String,
    classification: String,
    lemma_failures: String,
}

/// One record per map. Empty input writes nothing, not even a CSV header.
pub fn write_report(results: &[MapSummary], format: ReportFormat, mut out: impl Write) -> io::Result<()> {
    match format {
        ReportFormat::JsonLines => {
            for r in results {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
        }
        ReportFormat::Csv => {
            if results.is_empty() {
                return Ok(());
            }
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            for r in results {
                w.serialize(CsvRow {
                    id: &r.id,
                    order: r.order,
                    p: r.p,
                    q: r.q,
                    genus: r.genus,
                    simple: r.simple,
                    reflexive: r.reflexive,
                    density: crate::analysis::density_string(&r.density),
                    classification: r.classification.to_string(),
                    lemma_failures: r.lemma_failures.join(";"),
                })
                .map_err(io::Error::other)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct LemmaLine<'a> {
    map: &'a str,
    lemma: &'a str,
    applicable: bool,
    passed: Option<bool>,
    witness: Option<&'a str>,
}

/// JSON lines, one per check.
pub fn write_lemma_report(id: &str, report: &LemmaReport, mut out: impl Write) -> io::Result<()> {
    for c in &report.checks {
        serde_json::to_writer(
            &mut out,
            &LemmaLine {
                map: id,
                lemma: &c.lemma,
                applicable: c.applicable,
                passed: c.passed,
                witness: c.witness.as_deref(),
            },
        )?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
