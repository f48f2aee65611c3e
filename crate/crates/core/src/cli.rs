//! Command-line front end. The `mrle` binary is a thin wrapper around [`run_cli`].
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O error, 3 corrupt or malformed input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::analysis::{AnalysisReport, PACKED_LIST_LEN};
use crate::bench::{self, BenchSource, Codec, CorpusSpec, ReportFormat};
use crate::bits::BitString;
use crate::codec_bit;
use crate::codec_byte;
use crate::container::{self, Container, Mode, BIT_HEADER_LEN, BYTE_HEADER_LEN};
use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_CORRUPT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mrle",
    version,
    about = "Run-length coding with per-symbol compressibility flags"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print per-symbol savings, flags, and the predicted encoded size.
    Analyze {
        /// Input file, or `-` for stdin.
        input: PathBuf,
        #[arg(long, default_value = "byte")]
        mode: Mode,
        /// Predict the size of the raw layout instead of the container.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        json: bool,
    },
    Encode(CodecArgs),
    Decode(CodecArgs),
    /// Compare codecs on files and generated corpora.
    Bench {
        /// Input files (`-` for stdin).
        inputs: Vec<PathBuf>,
        /// Generated input, `generator:size[:seed]` where generator is
        /// alternating, constant, random, geometric-runs or geometric-runs(P).
        #[arg(long = "corpus", value_name = "SPEC")]
        corpus: Vec<String>,
        /// Comma-separated: mrle, mrle-bit, packbits, rle.
        #[arg(long, default_value = "mrle,packbits,rle")]
        codecs: String,
        #[arg(long, default_value = "table")]
        format: ReportFormat,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct CodecArgs {
    /// Input file, or `-` for stdin.
    pub input: PathBuf,
    /// Output file, or `-` for stdout.
    #[arg(short, long, default_value = "-")]
    pub output: PathBuf,
    /// Decode: the expected container mode. Encode: the codec to use.
    #[arg(long)]
    pub mode: Option<Mode>,
    /// Bare 32-byte flag list + payload, no header (byte mode only).
    #[arg(long)]
    pub raw: bool,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn is_stdio(p: &Path) -> bool {
    p.as_os_str() == "-"
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> CliResult<Vec<u8>> {
    if is_stdio(path) {
        let mut buf = Vec::new();
        stdin
            .read_to_end(&mut buf)
            .map_err(|e| Error::io("<stdin>", e))?;
        Ok(buf)
    } else {
        Ok(std::fs::read(path).map_err(|e| Error::io(path, e))?)
    }
}

fn write_output(path: &Path, data: &[u8], stdout: &mut dyn Write) -> CliResult<()> {
    if is_stdio(path) {
        stdout
            .write_all(data)
            .and_then(|_| stdout.flush())
            .map_err(|e| Error::io("<stdout>", e))?;
    } else {
        std::fs::write(path, data).map_err(|e| Error::io(path, e))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SymbolEntry {
    symbol: u16,
    counter: i64,
    compressible: bool,
}

#[derive(Serialize)]
struct AnalyzeOutput {
    mode: &'static str,
    input_bytes: u64,
    /// Byte mode: payload bytes. Bit mode: payload bits.
    payload_size: u64,
    predicted_encoded_bytes: u64,
    layout: &'static str,
    compressible: Vec<u16>,
    symbols: Vec<SymbolEntry>,
}

fn analyze_output(data: &[u8], mode: Mode, raw: bool) -> AnalyzeOutput {
    match mode {
        Mode::Byte => {
            let report = AnalysisReport::analyze(data);
            let mut present = [false; 256];
            for &b in data {
                present[b as usize] = true;
            }
            let header = if raw {
                PACKED_LIST_LEN
            } else {
                BYTE_HEADER_LEN
            } as u64;
            AnalyzeOutput {
                mode: "byte",
                input_bytes: report.input_length,
                payload_size: report.predicted_payload,
                predicted_encoded_bytes: header + report.predicted_payload,
                layout: if raw { "raw" } else { "container" },
                compressible: report.comp_bit_list.set_symbols().map(u16::from).collect(),
                symbols: (0..256)
                    .filter(|&s| present[s])
                    .map(|s| SymbolEntry {
                        symbol: s as u16,
                        counter: report.counters[s],
                        compressible: report.counters[s] > 0,
                    })
                    .collect(),
            }
        }
        Mode::Bit => {
            let bits = BitString::from_bytes(data);
            let a = codec_bit::analyze_bits(&bits);
            let mut present = [false; 2];
            for b in bits.iter() {
                present[b as usize] = true;
            }
            AnalyzeOutput {
                mode: "bit",
                input_bytes: data.len() as u64,
                payload_size: a.predicted_payload_bits,
                predicted_encoded_bytes: BIT_HEADER_LEN as u64
                    + a.predicted_payload_bits.div_ceil(8),
                layout: "container",
                compressible: (0..2u16).filter(|&b| a.flags.is_set(b == 1)).collect(),
                symbols: (0..2)
                    .filter(|&b| present[b])
                    .map(|b| SymbolEntry {
                        symbol: b as u16,
                        counter: a.counters[b],
                        compressible: a.flags.is_set(b == 1),
                    })
                    .collect(),
            }
        }
    }
}

fn render_analysis(out: &AnalyzeOutput) -> String {
    use std::fmt::Write as _;
    let unit = if out.mode == "bit" { "bits" } else { "bytes" };
    let mut s = String::new();
    let _ = writeln!(s, "mode:               {}", out.mode);
    let _ = writeln!(s, "input size:         {} bytes", out.input_bytes);
    let _ = writeln!(s, "payload size:       {} {unit}", out.payload_size);
    let _ = writeln!(
        s,
        "predicted encoded:  {} bytes ({})",
        out.predicted_encoded_bytes, out.layout
    );
    let _ = writeln!(s, "compressible:       {}", out.compressible.len());
    let _ = writeln!(s, "\n{:>6}  {:>6}  {:>12}  flag", "symbol", "char", "saved");
    for e in &out.symbols {
        let ch = if out.mode == "byte" && (0x21..0x7F).contains(&e.symbol) {
            (e.symbol as u8 as char).to_string()
        } else {
            String::new()
        };
        let _ = writeln!(
            s,
            "{:>6}  {:>6}  {:>12}  {}",
            e.symbol,
            ch,
            e.counter,
            if e.compressible { 1 } else { 0 }
        );
    }
    s
}

fn encode(args: &CodecArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<()> {
    let mode = args.mode.unwrap_or_default();
    if args.raw && mode == Mode::Bit {
        return Err(Failure::Usage(
            "--raw is only available in byte mode".into(),
        ));
    }
    let data = read_input(&args.input, stdin)?;
    let encoded = match (mode, args.raw) {
        (Mode::Byte, true) => {
            let (flags, payload) = codec_byte::mrle_encode(&data);
            container::write_raw(&flags, &payload.bytes)
        }
        (Mode::Byte, false) => container::write_container(&Container::encode_bytes(&data)),
        (Mode::Bit, _) => {
            container::write_container(&Container::encode_bits(&BitString::from_bytes(&data)))
        }
    };
    write_output(&args.output, &encoded, stdout)
}

fn decode(args: &CodecArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<()> {
    if args.raw && args.mode == Some(Mode::Bit) {
        return Err(Failure::Usage(
            "--raw is only available in byte mode".into(),
        ));
    }
    let data = read_input(&args.input, stdin)?;
    let decoded = if args.raw {
        let (flags, payload) = container::read_raw(&data)?;
        codec_byte::mrle_decode(&flags, &payload)?
    } else {
        let c = container::read_container(&data)?;
        if let Some(expected) = args.mode {
            if c.mode() != expected {
                return Err(Error::Format(format!(
                    "container is {:?} mode, expected {expected:?}",
                    c.mode()
                ))
                .into());
            }
        }
        c.decode()?
    };
    write_output(&args.output, &decoded, stdout)
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<()> {
    match cmd {
        Command::Analyze {
            input,
            mode,
            raw,
            json,
        } => {
            if raw && mode == Mode::Bit {
                return Err(Failure::Usage(
                    "--raw is only available in byte mode".into(),
                ));
            }
            let data = read_input(&input, stdin)?;
            let out = analyze_output(&data, mode, raw);
            let text = if json {
                serde_json::to_string_pretty(&out).expect("analysis serializes") + "\n"
            } else {
                render_analysis(&out)
            };
            write_output(Path::new("-"), text.as_bytes(), stdout)
        }
        Command::Encode(args) => encode(&args, stdin, stdout),
        Command::Decode(args) => decode(&args, stdin, stdout),
        Command::Bench {
            inputs,
            corpus,
            codecs,
            format,
            output,
        } => {
            let codecs = Codec::parse_list(&codecs).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut sources = Vec::new();
            for p in inputs {
                if is_stdio(&p) {
                    let data = read_input(&p, stdin)?;
                    sources.push(BenchSource::Bytes {
                        label: "-".into(),
                        data,
                    });
                } else {
                    sources.push(BenchSource::File(p));
                }
            }
            for spec in &corpus {
                let spec: CorpusSpec = spec
                    .parse()
                    .map_err(|e: Error| Failure::Usage(e.to_string()))?;
                sources.push(BenchSource::Corpus(spec));
            }
            if sources.is_empty() {
                return Err(Failure::Usage(
                    "bench needs at least one input or --corpus".into(),
                ));
            }
            if codecs.is_empty() {
                return Err(Failure::Usage("bench needs at least one codec".into()));
            }
            let report = bench::run_bench(&sources, &codecs)?;
            write_output(
                &output,
                bench::emit_report(&report, format).as_bytes(),
                stdout,
            )
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(config.command, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Io { .. } => EXIT_IO,
                e if e.is_corrupt_input() => EXIT_CORRUPT,
                _ => EXIT_USAGE,
            }
        }
    }
}
