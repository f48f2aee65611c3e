//! Bit-level variant for two-symbol streams (monochrome images, fax lines).
//!
//! A compressible bit value is written as the value bit followed by 7-bit run
//! fields. Raw field `127` adds 127 and another field follows; raw field
//! `f` in `0..=126` adds `f + 1` and ends the run. Values that are not
//! compressible are written as literal bits.

use crate::bits::{BitReader, BitString};
use crate::error::{Error, Result};

pub const FIELD_WIDTH: u32 = 7;
/// Raw field value meaning "127 more, and keep reading".
pub const FIELD_ESCAPE: u32 = 127;
/// Largest run contribution of a single field.
pub const MAX_FIELD_RUN: u64 = 127;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BitCompList {
    pub zero_compressible: bool,
    pub one_compressible: bool,
}

impl BitCompList {
    pub fn is_set(&self, bit: bool) -> bool {
        if bit {
            self.one_compressible
        } else {
            self.zero_compressible
        }
    }

    /// Bit 0 for value 0, bit 1 for value 1.
    pub fn to_byte(self) -> u8 {
        self.zero_compressible as u8 | (self.one_compressible as u8) << 1
    }

    pub fn from_byte(b: u8) -> Result<Self> {
        if b & !0b11 != 0 {
            return Err(Error::Format(format!(
                "reserved bit-mode flag bits set: {b:#04x}"
            )));
        }
        Ok(Self {
            zero_compressible: b & 1 != 0,
            one_compressible: b & 2 != 0,
        })
    }
}

/// Net bits saved by run-encoding a run of `length`: `length - 1 - 7 * ceil(length / 127)`.
pub fn saved_bits(length: u64) -> Result<i64> {
    if length == 0 {
        return Err(Error::ZeroRunLength);
    }
    Ok(saved_bits_unchecked(length))
}

fn saved_bits_unchecked(length: u64) -> i64 {
    length as i64 - 1 - FIELD_WIDTH as i64 * length.div_ceil(MAX_FIELD_RUN) as i64
}

/// Maximal runs of a bit string as `(bit, length)`.
pub fn scan_bit_runs(input: &BitString) -> Vec<(bool, u64)> {
    let mut runs: Vec<(bool, u64)> = Vec::new();
    for bit in input.iter() {
        match runs.last_mut() {
            Some((b, n)) if *b == bit => *n += 1,
            _ => runs.push((bit, 1)),
        }
    }
    runs
}

/// Savings counters indexed by bit value (`[zero, one]`) and the derived flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitAnalysis {
    pub flags: BitCompList,
    pub counters: [i64; 2],
    pub input_bits: u64,
    pub predicted_payload_bits: u64,
}

pub fn analyze_bits(input: &BitString) -> BitAnalysis {
    let mut counters = [0i64; 2];
    for (bit, len) in scan_bit_runs(input) {
        counters[bit as usize] += saved_bits_unchecked(len);
    }
    let flags = BitCompList {
        zero_compressible: counters[0] > 0,
        one_compressible: counters[1] > 0,
    };
    let saved: i64 = counters.iter().filter(|&&c| c > 0).sum();
    BitAnalysis {
        flags,
        counters,
        input_bits: input.len() as u64,
        predicted_payload_bits: input.len() as u64 - saved as u64,
    }
}

fn push_run_fields(out: &mut BitString, length: u64) {
    let fields = length.div_ceil(MAX_FIELD_RUN);
    for _ in 1..fields {
        out.push_field(FIELD_ESCAPE, FIELD_WIDTH);
    }
    let last = length - MAX_FIELD_RUN * (fields - 1);
    out.push_field((last - 1) as u32, FIELD_WIDTH);
}

/// Run fields for one run length; `ceil(length / 127)` fields of 7 bits.
pub fn encode_run_fields(length: u64) -> Result<BitString> {
    if length == 0 {
        return Err(Error::ZeroRunLength);
    }
    let mut out = BitString::new();
    push_run_fields(&mut out, length);
    Ok(out)
}

fn read_run_fields(reader: &mut BitReader<'_>) -> Result<u64> {
    let mut total = 0u64;
    loop {
        let field = reader
            .read_field(FIELD_WIDTH)
            .ok_or(Error::TruncatedInput("run field cut short"))?;
        if field == FIELD_ESCAPE {
            total += MAX_FIELD_RUN;
        } else {
            return Ok(total + field as u64 + 1);
        }
    }
}

/// Decodes a field sequence produced by [`encode_run_fields`].
pub fn decode_run_fields(fields: &BitString) -> Result<u64> {
    read_run_fields(&mut BitReader::new(fields))
}

pub fn encode_bits_with_flags(input: &BitString, flags: BitCompList) -> BitString {
    let mut out = BitString::with_capacity(input.len());
    for (bit, len) in scan_bit_runs(input) {
        if flags.is_set(bit) {
            out.push(bit);
            push_run_fields(&mut out, len);
        } else {
            out.push_repeated(bit, len as usize);
        }
    }
    out
}

pub fn encode_bits(input: &BitString) -> (BitCompList, BitString) {
    let analysis = analyze_bits(input);
    let payload = encode_bits_with_flags(input, analysis.flags);
    debug_assert_eq!(payload.len() as u64, analysis.predicted_payload_bits);
    (analysis.flags, payload)
}

/// Decodes until exactly `original_bit_count` bits are produced.
///
/// Up to 7 trailing zero bits (byte padding) may follow the last token; any
/// other leftover, or a run that overshoots the count, is a length mismatch.
pub fn decode_bits(
    flags: BitCompList,
    payload: &BitString,
    original_bit_count: u64,
) -> Result<BitString> {
    let mut out = BitString::with_capacity(original_bit_count as usize);
    let mut reader = BitReader::new(payload);
    while (out.len() as u64) < original_bit_count {
        let bit = reader
            .read_bit()
            .ok_or(Error::TruncatedInput("payload ended before the bit count"))?;
        let len = if flags.is_set(bit) {
            read_run_fields(&mut reader)?
        } else {
            1
        };
        let produced = out.len() as u64 + len;
        if produced > original_bit_count {
            return Err(Error::LengthMismatch {
                expected: original_bit_count,
                actual: produced,
            });
        }
        out.push_repeated(bit, len as usize);
    }
    let leftover = reader.remaining();
    if leftover >= 8 || (0..leftover).any(|_| reader.read_bit() == Some(true)) {
        return Err(Error::LengthMismatch {
            expected: original_bit_count,
            actual: original_bit_count + leftover as u64,
        });
    }
    Ok(out)
}
