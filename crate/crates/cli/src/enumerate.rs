//! JSONL enumeration of T-links within bounds.
//!
//! One record per normalized spec, in the order of `enumerate_t`, then a
//! single summary line. The output only depends on the bounds and the
//! Jones limit, so a resumed run reproduces a fresh one byte for byte.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::Path;

use braidforge_core::classify::{classify_t, GeometricKind};
use braidforge_core::corpus::enumerate_t;
use braidforge_core::invariants::profile;
use braidforge_core::{t_to_v, TLinkSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};

const CHUNK: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub spec: String,
    pub v_form: String,
    pub kind: String,
    pub rule: Option<String>,
    /// SHA-256 of the JSON invariant profile of the minimal braid.
    pub digest: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub counts: BTreeMap<String, usize>,
    pub bounds: [usize; 3],
    pub jones_limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SummaryLine {
    summary: Summary,
}

pub fn record(t: &TLinkSpec, jones_limit: usize) -> CliResult<Record> {
    let (v, _) = t_to_v(t)?;
    let verdict = classify_t(t)?;
    let profile_json = serde_json::to_string(&profile(&v.braid(), jones_limit))?;
    Ok(Record {
        spec: t.to_string(),
        v_form: v.to_string(),
        kind: verdict.kind.name().to_string(),
        rule: verdict.rule().map(str::to_string),
        digest: hex::encode(Sha256::digest(profile_json.as_bytes())),
    })
}

fn empty_counts() -> BTreeMap<String, usize> {
    GeometricKind::ALL.iter().map(|k| (k.name().to_string(), 0)).collect()
}

fn pool(workers: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Io(io::Error::other(e)))
}

/// Complete record lines already in `path`, checked against `corpus`.
/// A trailing partial line or summary line is discarded.
fn existing_records(path: &Path, corpus: &[TLinkSpec]) -> CliResult<(Vec<Record>, u64)> {
    let mut text = String::new();
    match File::open(path) {
        Ok(mut f) => {
            f.read_to_string(&mut text)?;
        }
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok((Vec::new(), 0)),
        Err(e) => return Err(e.into()),
    }
    let mut records = Vec::new();
    let mut kept_bytes = 0u64;
    for line in text.split_inclusive('\n') {
        let Some(body) = line.strip_suffix('\n') else { break };
        let Ok(rec) = serde_json::from_str::<Record>(body) else { break };
        match corpus.get(records.len()) {
            Some(t) if t.to_string() == rec.spec => {}
            _ => {
                return Err(CliError::Io(io::Error::new(
                    io::ErrorKind::InvalidData,
                    format!("{}: line {} does not belong to this enumeration", path.display(), records.len() + 1),
                )))
            }
        }
        kept_bytes += line.len() as u64;
        records.push(rec);
    }
    Ok((records, kept_bytes))
}

/// Run the enumeration, writing to `config.output_path` or to `out`.
pub fn cmd_enumerate(config: &RunConfig, out: &mut dyn Write) -> CliResult<Summary> {
    let corpus = enumerate_t(config.bounds);
    let mut counts = empty_counts();
    let mut start = 0;

    let mut file_writer;
    let writer: &mut dyn Write = match &config.output_path {
        Some(path) => {
            let mut file = OpenOptions::new().create(true).truncate(false).read(true).write(true).open(path)?;
            let kept_bytes = if config.resume {
                let (records, kept_bytes) = existing_records(path, &corpus)?;
                for rec in &records {
                    *counts.entry(rec.kind.clone()).or_default() += 1;
                }
                start = records.len();
                kept_bytes
            } else {
                0
            };
            file.set_len(kept_bytes)?;
            file.seek(SeekFrom::Start(kept_bytes))?;
            file_writer = BufWriter::new(file);
            &mut file_writer
        }
        None if config.resume => {
            return Err(CliError::Io(io::Error::new(io::ErrorKind::InvalidInput, "--resume needs --out")))
        }
        None => out,
    };

    let pool = pool(config.workers)?;
    for chunk in corpus[start..].chunks(CHUNK) {
        let records: Vec<Record> =
            pool.install(|| chunk.par_iter().map(|t| record(t, config.jones_limit)).collect::<CliResult<_>>())?;
        for rec in &records {
            *counts.entry(rec.kind.clone()).or_default() += 1;
            serde_json::to_writer(&mut *writer, rec)?;
            writer.write_all(b"\n")?;
        }
        writer.flush()?;
    }

    let b = config.bounds;
    let summary = Summary {
        total: corpus.len(),
        counts,
        bounds: [b.p_max, b.q_max, b.block_max],
        jones_limit: config.jones_limit,
    };
    serde_json::to_writer(&mut *writer, &SummaryLine { summary: summary.clone() })?;
    writer.write_all(b"\n")?;
    writer.flush()?;
    Ok(summary)
}
