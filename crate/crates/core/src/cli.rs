//! Command-line front end.
//!
//! Reads plain text or FASTA, runs one of the algorithms per sequence and
//! prints one row per window start. Rows use 1-based positions.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};
use rayon::prelude::*;

use crate::error::Error;
use crate::lce::DirectionalIndex;
use crate::mappability::{Algorithm, MappabilityVector};
use crate::oracle::{naive_mappability, OracleConfig};
use crate::text::{Origin, Text};
use crate::{large_m, nlogn, oracle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Plain,
    Fasta,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMode {
    Le1,
    Exact,
    OneMismatch,
    AllThree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Csv,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "onemap",
    version,
    about = "Per-window counts of occurrences with at most one mismatch"
)]
pub struct RunConfig {
    /// Input file, or `-` for standard input.
    pub input: PathBuf,

    /// Window length.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,

    #[arg(long, default_value = "auto", value_parser = parse_algorithm)]
    pub algorithm: Algorithm,

    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,

    #[arg(long, value_enum, default_value_t = CountMode::Le1)]
    pub mode: CountMode,

    /// Do not count each window as an occurrence of itself.
    #[arg(long)]
    pub no_self: bool,

    #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
    pub output: OutputFormat,

    /// Cross-check every record against the brute-force oracle.
    #[arg(long)]
    pub verify: bool,

    /// Print phase timings instead of counts.
    #[arg(long)]
    pub bench: bool,

    /// Process FASTA records concurrently.
    #[arg(long)]
    pub parallel: bool,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

impl RunConfig {
    pub fn include_self(&self) -> bool {
        !self.no_self
    }
}

/// A failed run: exit status and message for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

/// Splits FASTA input into `(id, sequence)` records. Sequences are
/// uppercased and line breaks dropped.
pub fn parse_fasta(data: &[u8]) -> Vec<(String, Vec<u8>)> {
    let mut out: Vec<(String, Vec<u8>)> = Vec::new();
    for line in data.split(|&b| b == b'\n') {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if let Some(header) = line.strip_prefix(b">") {
            let header = String::from_utf8_lossy(header);
            let id = header.split_whitespace().next().unwrap_or("").to_string();
            out.push((id, Vec::new()));
        } else if let Some((_, seq)) = out.last_mut() {
            seq.extend(
                line.iter()
                    .filter(|b| !b.is_ascii_whitespace())
                    .map(u8::to_ascii_uppercase),
            );
        }
    }
    out
}

fn is_fasta(data: &[u8]) -> bool {
    data.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'>')
}

/// Plain input: every byte except line breaks is a symbol.
fn plain_text(data: &[u8]) -> Text {
    let bytes: Vec<u8> = data
        .iter()
        .copied()
        .filter(|&b| b != b'\n' && b != b'\r')
        .collect();
    Text::from_bytes(&bytes)
}

pub fn load_texts(data: &[u8], format: InputFormat) -> Vec<Text> {
    let fasta = match format {
        InputFormat::Plain => false,
        InputFormat::Fasta => true,
        InputFormat::Auto => is_fasta(data),
    };
    if fasta {
        parse_fasta(data)
            .into_iter()
            .map(|(id, seq)| Text::from_bytes(&seq).with_origin(Origin::FastaRecord(id)))
            .collect()
    } else {
        vec![plain_text(data)]
    }
}

struct Timings {
    index: Duration,
    compute: Duration,
    batches: usize,
    peak: usize,
}

fn run_algorithm(
    text: &Text,
    m: usize,
    alg: Algorithm,
    bench: bool,
) -> Result<(MappabilityVector, Timings), Error> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    let index = if bench {
        let t0 = Instant::now();
        DirectionalIndex::new(text)?;
        t0.elapsed()
    } else {
        Duration::ZERO
    };
    let t0 = Instant::now();
    let (v, batches, peak) = match alg {
        Algorithm::Nlogn => {
            let (v, s) = nlogn::one_mappability_nlogn_with_stats(text, m, false)?;
            (
                v,
                s.light_batches.len() + s.heavy_batches.len(),
                s.max_batch(),
            )
        }
        Algorithm::LargeM => {
            let (v, s) = large_m::one_mappability_large_m_with_stats(text, m)?;
            (v, s.batches, s.max_updates_per_pass)
        }
        _ => (
            oracle::naive_mappability(text, m, &OracleConfig::default())?,
            0,
            0,
        ),
    };
    let compute = t0.elapsed();
    Ok((
        v,
        Timings {
            index,
            compute,
            batches,
            peak,
        },
    ))
}

fn columns(v: &MappabilityVector, i: usize, mode: CountMode, include_self: bool) -> Vec<u64> {
    let own = u64::from(!include_self);
    let exact = v.exact()[i] - own;
    let one = v.one_mismatch()[i];
    match mode {
        CountMode::Le1 => vec![exact + one],
        CountMode::Exact => vec![exact],
        CountMode::OneMismatch => vec![one],
        CountMode::AllThree => vec![exact, one, exact + one],
    }
}

/// Output block for one text, or the failure it hit.
fn process(cfg: &RunConfig, text: &Text) -> Result<String, Failure> {
    let m = cfg.m as usize;
    let alg = cfg.algorithm.resolve(text.len(), m);
    let sep = match cfg.output {
        OutputFormat::Tsv => '\t',
        OutputFormat::Csv => ',',
    };
    let mut out = String::new();
    if let Origin::FastaRecord(id) = text.origin() {
        writeln!(out, "# record={id}").unwrap();
    }
    writeln!(
        out,
        "# m={m} algorithm={} include_self={}",
        alg.name(),
        cfg.include_self()
    )
    .unwrap();

    let total = Instant::now();
    let (v, t) = run_algorithm(text, m, alg, cfg.bench)?;

    if cfg.verify && text.len() <= OracleConfig::default().max_n && alg != Algorithm::Naive {
        let want = naive_mappability(text, m, &OracleConfig::default())?;
        let bad = (0..v.len())
            .find(|&i| v.total_le1(i) != want.total_le1(i) || v.exact()[i] != want.exact()[i]);
        if let Some(i) = bad {
            return Err(Failure {
                code: EXIT_MISMATCH,
                message: format!(
                    "verification failed at position {}: got exact={} le1={}, oracle exact={} le1={}",
                    i + 1,
                    v.exact()[i],
                    v.total_le1(i),
                    want.exact()[i],
                    want.total_le1(i)
                ),
            });
        }
    }

    if cfg.bench {
        let total = total.elapsed();
        writeln!(out, "# phase=index seconds={:.6}", t.index.as_secs_f64()).unwrap();
        writeln!(
            out,
            "# phase=algorithm seconds={:.6}",
            t.compute.as_secs_f64()
        )
        .unwrap();
        writeln!(out, "# phase=total seconds={:.6}", total.as_secs_f64()).unwrap();
        writeln!(
            out,
            "bench n={} m={m} algorithm={} index_s={:.6} algorithm_s={:.6} total_s={:.6} batches={} peak_batch={}",
            text.len(),
            alg.name(),
            t.index.as_secs_f64(),
            t.compute.as_secs_f64(),
            total.as_secs_f64(),
            t.batches,
            t.peak
        )
        .unwrap();
        return Ok(out);
    }

    for i in 0..v.len() {
        write!(out, "{}", i + 1).unwrap();
        for c in columns(&v, i, cfg.mode, cfg.include_self()) {
            write!(out, "{sep}{c}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn read_input(cfg: &RunConfig, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let mut data = Vec::new();
    let res = if cfg.input.as_os_str() == "-" {
        stdin.read_to_end(&mut data).map(|_| ())
    } else {
        std::fs::File::open(&cfg.input).and_then(|mut f| f.read_to_end(&mut data).map(|_| ()))
    };
    res.map_err(|e| Failure {
        code: EXIT_IO,
        message: format!("cannot read {}: {e}", cfg.input.display()),
    })?;
    Ok(data)
}

/// Runs the tool. Blocks already written stay written when a later record
/// fails.
pub fn run(cfg: &RunConfig, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), Failure> {
    let data = read_input(cfg, stdin)?;
    let texts = load_texts(&data, cfg.format);
    let io_err = |e: io::Error| Failure {
        code: EXIT_IO,
        message: format!("write failed: {e}"),
    };
    if cfg.parallel {
        let blocks: Vec<Result<String, Failure>> =
            texts.par_iter().map(|t| process(cfg, t)).collect();
        for b in blocks {
            stdout.write_all(b?.as_bytes()).map_err(io_err)?;
        }
    } else {
        for t in &texts {
            stdout
                .write_all(process(cfg, t)?.as_bytes())
                .map_err(io_err)?;
        }
    }
    stdout.flush().map_err(io_err)
}

/// Parses `args` and runs; returns the process exit status.
pub fn main_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_IO } else { EXIT_OK };
        }
    };
    match run(&cfg, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "onemap: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(input: &str, args: &[&str]) -> (i32, String, String) {
        let mut argv = vec!["onemap", "-"];
        argv.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with(argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn fasta_records() {
        let r = parse_fasta(b">one desc\nac\ngt\n\n>two\r\nnn\r\n");
        assert_eq!(
            r,
            vec![
                ("one".into(), b"ACGT".to_vec()),
                ("two".into(), b"NN".to_vec())
            ]
        );
        assert!(is_fasta(b"\n >x"));
        assert!(!is_fasta(b"abab"));
    }

    #[test]
    fn no_self_and_modes() {
        let (code, out, _) = run_str(
            "abab\n",
            &[
                "--m",
                "2",
                "--no-self",
                "--mode",
                "all-three",
                "--output",
                "csv",
            ],
        );
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "# m=2 algorithm=nlogn include_self=false\n1,1,0,1\n2,0,0,0\n3,1,0,1\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str("abc", &["--m", "4"]).0, EXIT_INPUT);
        assert_eq!(
            run_str("abc", &["--m", "2", "--algorithm", "large-m"]).0,
            EXIT_INPUT
        );
        assert_eq!(run_str("", &["--m", "1"]).0, EXIT_INPUT);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with(
            ["onemap", "/nonexistent/x", "--m", "1"],
            &mut io::empty(),
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_IO);
    }
}
