//! Size and timing comparisons between the codecs.
//!
//! Every row is round-trip checked; a mismatch aborts the run. Rows come out
//! in input order, then codec name order, regardless of how many threads ran.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use rayon::prelude::*;
use serde::Serialize;

use crate::baselines;
use crate::bits::BitString;
use crate::codec_byte;
use crate::container::{self, Container};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Codec {
    /// Byte-level codec in the raw layout (32 flag bytes + payload).
    Mrle,
    /// Bit-level codec in the container layout.
    MrleBit,
    PackBits,
    Rle,
}

impl Codec {
    pub const DEFAULT: [Codec; 3] = [Codec::Mrle, Codec::PackBits, Codec::Rle];
    pub const ALL: [Codec; 4] = [Codec::Mrle, Codec::MrleBit, Codec::PackBits, Codec::Rle];

    pub fn name(self) -> &'static str {
        match self {
            Codec::Mrle => "mrle",
            Codec::MrleBit => "mrle-bit",
            Codec::PackBits => "packbits",
            Codec::Rle => "rle",
        }
    }

    pub fn encode(self, input: &[u8]) -> Vec<u8> {
        match self {
            Codec::Mrle => {
                let (flags, payload) = codec_byte::mrle_encode(input);
                container::write_raw(&flags, &payload.bytes)
            }
            Codec::MrleBit => {
                container::write_container(&Container::encode_bits(&BitString::from_bytes(input)))
            }
            Codec::PackBits => baselines::packbits_encode(input),
            Codec::Rle => baselines::rle_encode(input),
        }
    }

    pub fn decode(self, encoded: &[u8]) -> Result<Vec<u8>> {
        match self {
            Codec::Mrle => {
                let (flags, payload) = container::read_raw(encoded)?;
                codec_byte::mrle_decode(&flags, &payload)
            }
            Codec::MrleBit => container::read_container(encoded)?.decode(),
            Codec::PackBits => baselines::packbits_decode(encoded),
            Codec::Rle => baselines::rle_decode(encoded),
        }
    }

    /// Parses a comma-separated list, sorted and deduplicated.
    pub fn parse_list(s: &str) -> Result<Vec<Codec>> {
        let mut codecs = s
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Codec::from_str)
            .collect::<Result<Vec<_>>>()?;
        codecs.sort_by_key(|c| c.name());
        codecs.dedup();
        Ok(codecs)
    }
}

impl FromStr for Codec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Codec::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCodec(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    /// `00 01 00 01 ...`: every run has length 1.
    Alternating,
    /// All zero bytes.
    Constant,
    /// Runs with geometrically distributed lengths (success probability `p`).
    GeometricRuns(f64),
    /// Uniform random bytes.
    Random,
}

pub const DEFAULT_GEOMETRIC_P: f64 = 0.1;

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownGenerator(s.to_string());
        match s {
            "alternating" => return Ok(Generator::Alternating),
            "constant" => return Ok(Generator::Constant),
            "random" => return Ok(Generator::Random),
            "geometric-runs" => return Ok(Generator::GeometricRuns(DEFAULT_GEOMETRIC_P)),
            _ => {}
        }
        let p = s
            .strip_prefix("geometric-runs(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(unknown)?
            .parse::<f64>()
            .map_err(|_| unknown())?;
        if !(p > 0.0 && p <= 1.0) {
            return Err(unknown());
        }
        Ok(Generator::GeometricRuns(p))
    }
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Generator::Alternating => f.write_str("alternating"),
            Generator::Constant => f.write_str("constant"),
            Generator::GeometricRuns(p) => write!(f, "geometric-runs({p})"),
            Generator::Random => f.write_str("random"),
        }
    }
}

/// A synthetic input: `generator:size[:seed]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorpusSpec {
    pub generator: Generator,
    pub size: usize,
    pub seed: u64,
}

impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Format(format!("corpus spec `{s}` is not generator:size[:seed]"));
        let mut parts = s.split(':');
        let generator = parts.next().ok_or_else(bad)?.parse()?;
        let size = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let seed = match parts.next() {
            Some(p) => p.parse().map_err(|_| bad())?,
            None => 0,
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(CorpusSpec {
            generator,
            size,
            seed,
        })
    }
}

impl std::fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:{}", self.generator, self.size, self.seed)
    }
}

pub fn generate_corpus(spec: &CorpusSpec) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.generator {
        Generator::Alternating => (0..spec.size).map(|i| (i % 2) as u8).collect(),
        Generator::Constant => vec![0; spec.size],
        Generator::Random => {
            let mut out = vec![0; spec.size];
            rng.fill(&mut out[..]);
            out
        }
        Generator::GeometricRuns(p) => {
            let lengths = Geometric::new(p).expect("p validated on parse");
            let mut out = Vec::with_capacity(spec.size);
            let mut value: u8 = rng.random();
            while out.len() < spec.size {
                let len = (lengths.sample(&mut rng) + 1).min((spec.size - out.len()) as u64);
                out.extend(std::iter::repeat_n(value, len as usize));
                // Next value always differs so runs stay maximal.
                value = value.wrapping_add(rng.random_range(1..=255));
            }
            out
        }
    }
}

/// Where one bench input comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum BenchSource {
    File(PathBuf),
    Corpus(CorpusSpec),
    /// In-memory data with a display label.
    Bytes {
        label: String,
        data: Vec<u8>,
    },
}

impl BenchSource {
    pub fn label(&self) -> String {
        match self {
            BenchSource::File(p) => p.display().to_string(),
            BenchSource::Corpus(c) => format!("gen:{c}"),
            BenchSource::Bytes { label, .. } => label.clone(),
        }
    }

    pub fn load(&self) -> Result<Vec<u8>> {
        match self {
            BenchSource::File(p) => std::fs::read(p).map_err(|e| Error::io(p, e)),
            BenchSource::Corpus(c) => Ok(generate_corpus(c)),
            BenchSource::Bytes { data, .. } => Ok(data.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub path: String,
    pub codec: String,
    pub input_bytes: u64,
    pub encoded_bytes: u64,
    /// `encoded / input`; absent for empty inputs.
    pub ratio: Option<f64>,
    pub encode_ms: f64,
    pub decode_ms: f64,
    pub roundtrip_ok: bool,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// Copy with both timing columns zeroed, for run-to-run comparisons.
    pub fn without_timings(&self) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| BenchRow {
                    encode_ms: 0.0,
                    decode_ms: 0.0,
                    ..r.clone()
                })
                .collect(),
        }
    }
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn bench_one(label: &str, data: &[u8], codec: Codec) -> Result<BenchRow> {
    let t = Instant::now();
    let encoded = codec.encode(data);
    let encode_ms = ms_since(t);
    let t = Instant::now();
    let decoded = codec.decode(&encoded);
    let decode_ms = ms_since(t);
    if decoded.ok().as_deref() != Some(data) {
        return Err(Error::RoundTripFailed {
            path: label.to_string(),
            codec: codec.name().to_string(),
        });
    }
    let input_bytes = data.len() as u64;
    let encoded_bytes = encoded.len() as u64;
    Ok(BenchRow {
        path: label.to_string(),
        codec: codec.name().to_string(),
        input_bytes,
        encoded_bytes,
        ratio: (input_bytes > 0).then(|| encoded_bytes as f64 / input_bytes as f64),
        encode_ms,
        decode_ms,
        roundtrip_ok: true,
    })
}

pub fn run_bench(inputs: &[BenchSource], codecs: &[Codec]) -> Result<BenchReport> {
    if inputs.is_empty() {
        return Err(Error::EmptySelection("no bench inputs"));
    }
    if codecs.is_empty() {
        return Err(Error::EmptySelection("no codecs selected"));
    }
    let mut codecs = codecs.to_vec();
    codecs.sort_by_key(|c| c.name());
    codecs.dedup();

    let per_file = inputs
        .par_iter()
        .map(|src| {
            let label = src.label();
            let data = src.load()?;
            codecs
                .iter()
                .map(|&c| bench_one(&label, &data, c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BenchReport {
        rows: per_file.into_iter().flatten().collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "table" => Ok(ReportFormat::Table),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!(
                "unknown format `{other}` (expected table, csv or json)"
            )),
        }
    }
}

pub const CSV_COLUMNS: [&str; 8] = [
    "path",
    "codec",
    "input_bytes",
    "encoded_bytes",
    "ratio",
    "encode_ms",
    "decode_ms",
    "roundtrip_ok",
];

pub const FRAMING_NOTE: &str = "mrle sizes include the 32-byte compressibility list (raw layout); \
mrle-bit sizes include the 15-byte container header; rle and packbits have no header.";

pub fn emit_report(report: &BenchReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => emit_table(report),
        ReportFormat::Csv => emit_csv(report),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report.rows).expect("rows serialize");
            s.push('\n');
            s
        }
    }
}

fn emit_csv(report: &BenchReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).expect("in-memory write");
    for row in &report.rows {
        w.serialize(RowNoHeader(row)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

/// Serializes a row as a tuple so the csv writer does not emit a second header.
struct RowNoHeader<'a>(&'a BenchRow);

impl Serialize for RowNoHeader<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r = self.0;
        (
            &r.path,
            &r.codec,
            r.input_bytes,
            r.encoded_bytes,
            r.ratio,
            r.encode_ms,
            r.decode_ms,
            r.roundtrip_ok,
        )
            .serialize(s)
    }
}

fn emit_table(report: &BenchReport) -> String {
    let path_w = report
        .rows
        .iter()
        .map(|r| r.path.len())
        .chain([4])
        .max()
        .unwrap_or(4);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<path_w$}  {:<8}  {:>12}  {:>12}  {:>8}  {:>10}  {:>10}  {:>9}",
        "path", "codec", "input_bytes", "encoded", "ratio", "enc_ms", "dec_ms", "roundtrip"
    );
    for r in &report.rows {
        let ratio = r
            .ratio
            .map_or_else(|| "-".to_string(), |x| format!("{x:.4}"));
        let _ = writeln!(
            s,
            "{:<path_w$}  {:<8}  {:>12}  {:>12}  {:>8}  {:>10.3}  {:>10.3}  {:>9}",
            r.path,
            r.codec,
            r.input_bytes,
            r.encoded_bytes,
            ratio,
            r.encode_ms,
            r.decode_ms,
            if r.roundtrip_ok { "ok" } else { "FAIL" }
        );
    }
    let _ = writeln!(s, "\nnote: {FRAMING_NOTE}");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bytes(label: &str, data: &[u8]) -> BenchSource {
        BenchSource::Bytes {
            label: label.into(),
            data: data.to_vec(),
        }
    }

    #[test]
    fn worked_example_sizes() {
        let report = run_bench(
            &[
                bytes("ex1", b"AAAABBCCCDB"),
                bytes("ex2", b"AAABBBAACDAAAABDB"),
            ],
            &[Codec::Rle, Codec::Mrle],
        )
        .unwrap();
        let sizes: Vec<_> = report
            .rows
            .iter()
            .map(|r| (r.path.as_str(), r.codec.as_str(), r.encoded_bytes))
            .collect();
        assert_eq!(
            sizes,
            vec![
                ("ex1", "mrle", 40),
                ("ex1", "rle", 10),
                ("ex2", "mrle", 46),
                ("ex2", "rle", 18),
            ]
        );
    }

    #[test]
    fn corpus_generators() {
        let c = |s: &str| generate_corpus(&s.parse().unwrap());
        assert_eq!(c("constant:1020"), vec![0u8; 1020]);
        assert_eq!(c("alternating:6"), vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(
            c("geometric-runs(0.2):5000:7"),
            c("geometric-runs(0.2):5000:7")
        );
        assert_ne!(c("random:64:1"), c("random:64:2"));
        assert_eq!(c("geometric-runs:777:3").len(), 777);
        assert!(c("random:0").is_empty());
        assert!(matches!(
            "zigzag:10".parse::<CorpusSpec>(),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(matches!(
            "geometric-runs(0):10".parse::<CorpusSpec>(),
            Err(Error::UnknownGenerator(_))
        ));
        assert!("random".parse::<CorpusSpec>().is_err());
    }

    #[test]
    fn geometric_runs_are_maximal() {
        let data = generate_corpus(&"geometric-runs(0.05):20000:11".parse().unwrap());
        let runs = crate::analysis::scan_runs(&data);
        let mean = data.len() as f64 / runs.len() as f64;
        assert!(mean > 10.0 && mean < 30.0, "mean run length {mean}");
    }

    #[test]
    fn report_formats() {
        let empty = BenchReport::default();
        assert_eq!(
            emit_report(&empty, ReportFormat::Csv),
            CSV_COLUMNS.join(",") + "\n"
        );
        assert_eq!(emit_report(&empty, ReportFormat::Json).trim(), "[]");

        let report = run_bench(&[bytes("x", b"aaab")], &[Codec::Rle]).unwrap();
        let json: serde_json::Value =
            serde_json::from_str(&emit_report(&report, ReportFormat::Json)).unwrap();
        let arr = json.as_array().unwrap();
        assert_eq!(arr.len(), 1);
        let obj = arr[0].as_object().unwrap();
        assert_eq!(obj.len(), 8);
        for key in CSV_COLUMNS {
            assert!(obj.contains_key(key), "{key}");
        }
        let table = emit_report(&report, ReportFormat::Table);
        assert!(table.contains(FRAMING_NOTE));
    }

    #[test]
    fn empty_input_has_no_ratio() {
        let report = run_bench(&[bytes("e", b"")], &Codec::ALL).unwrap();
        assert!(report
            .rows
            .iter()
            .all(|r| r.ratio.is_none() && r.roundtrip_ok));
        let csv = emit_report(&report, ReportFormat::Csv);
        assert!(csv.lines().nth(1).unwrap().starts_with("e,mrle,0,32,,"));
    }

    #[test]
    fn missing_file_names_path() {
        let err = run_bench(
            &[BenchSource::File("/nonexistent/zzz.bin".into())],
            &[Codec::Rle],
        )
        .unwrap_err();
        assert!(err.to_string().contains("/nonexistent/zzz.bin"));
    }

    #[test]
    fn codec_list_parsing() {
        assert_eq!(
            Codec::parse_list("rle,mrle,rle").unwrap(),
            vec![Codec::Mrle, Codec::Rle]
        );
        assert!(Codec::parse_list("zip").is_err());
    }
}
