//! Run detection and the per-symbol compressibility analysis.
//!
//! A symbol is worth run-encoding only if, summed over all of its maximal
//! runs, the tokens `[value][run bytes...]` take fewer bytes than writing
//! the run out literally. The result of that decision for all 256 byte
//! values is the [`CompBitList`], which is stored in front of the payload.

use crate::error::{Error, Result};

/// Largest amount a single terminating run byte can carry.
pub const MAX_RUN_CHUNK: u64 = 254;

/// Size of a packed [`CompBitList`] in bytes.
pub const PACKED_LIST_LEN: usize = 32;

/// A maximal repetition of one byte value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub value: u8,
    pub length: u64,
}

/// Splits `input` into maximal runs. Adjacent runs always differ in value.
pub fn scan_runs(input: &[u8]) -> Vec<Run> {
    let mut runs: Vec<Run> = Vec::new();
    for &b in input {
        match runs.last_mut() {
            Some(run) if run.value == b => run.length += 1,
            _ => runs.push(Run {
                value: b,
                length: 1,
            }),
        }
    }
    runs
}

/// Net bytes saved by run-encoding a run of `length` instead of writing it literally.
///
/// A run token costs one value byte plus `ceil(length / 254)` run bytes, so this
/// is `length - 1 - ceil(length / 254)`. Negative values mean the run grows.
pub fn saved_bytes(length: u64) -> Result<i64> {
    if length == 0 {
        return Err(Error::ZeroRunLength);
    }
    Ok(length as i64 - 1 - length.div_ceil(MAX_RUN_CHUNK) as i64)
}

fn saved_bytes_unchecked(length: u64) -> i64 {
    length as i64 - 1 - length.div_ceil(MAX_RUN_CHUNK) as i64
}

/// Per-symbol savings, summed over every maximal run of that symbol.
pub fn compute_counters(input: &[u8]) -> [i64; 256] {
    let mut counters = [0i64; 256];
    for run in scan_runs(input) {
        counters[run.value as usize] += saved_bytes_unchecked(run.length);
    }
    counters
}

/// The 256 compressibility flags, indexed by symbol code.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CompBitList {
    words: [u64; 4],
}

impl std::fmt::Debug for CompBitList {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.set_symbols()).finish()
    }
}

impl CompBitList {
    pub const fn empty() -> Self {
        Self { words: [0; 4] }
    }

    pub fn from_flags(flags: [bool; 256]) -> Self {
        Self::from_symbols((0..=255u8).filter(|&s| flags[s as usize]))
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = u8>) -> Self {
        let mut list = Self::empty();
        for s in symbols {
            list.set(s, true);
        }
        list
    }

    #[inline]
    pub fn is_set(&self, symbol: u8) -> bool {
        self.words[symbol as usize / 64] >> (symbol % 64) & 1 != 0
    }

    pub fn set(&mut self, symbol: u8, compressible: bool) {
        let bit = 1u64 << (symbol % 64);
        let word = &mut self.words[symbol as usize / 64];
        if compressible {
            *word |= bit;
        } else {
            *word &= !bit;
        }
    }

    pub fn to_flags(&self) -> [bool; 256] {
        std::array::from_fn(|i| self.is_set(i as u8))
    }

    /// Symbols whose flag is set, ascending.
    pub fn set_symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0..=255u8).filter(move |&s| self.is_set(s))
    }

    pub fn count_set(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Packs symbol `c` into byte `c / 8`, bit `c % 8` (LSB first).
    pub fn pack(&self) -> [u8; PACKED_LIST_LEN] {
        let mut out = [0u8; PACKED_LIST_LEN];
        for (chunk, word) in out.chunks_exact_mut(8).zip(self.words) {
            chunk.copy_from_slice(&word.to_le_bytes());
        }
        out
    }

    pub fn unpack(bytes: &[u8]) -> Result<Self> {
        if bytes.len() != PACKED_LIST_LEN {
            return Err(if bytes.len() < PACKED_LIST_LEN {
                Error::TruncatedInput("compressibility list needs 32 bytes")
            } else {
                Error::Format(format!(
                    "compressibility list must be 32 bytes, got {}",
                    bytes.len()
                ))
            });
        }
        let mut words = [0u64; 4];
        for (word, chunk) in words.iter_mut().zip(bytes.chunks_exact(8)) {
            *word = u64::from_le_bytes(chunk.try_into().expect("8-byte chunk"));
        }
        Ok(Self { words })
    }
}

pub fn build_comp_bit_list(counters: &[i64; 256]) -> CompBitList {
    CompBitList::from_symbols((0..=255u8).filter(|&s| counters[s as usize] > 0))
}

pub fn pack_comp_bit_list(list: &CompBitList) -> [u8; PACKED_LIST_LEN] {
    list.pack()
}

pub fn unpack_comp_bit_list(bytes: &[u8]) -> Result<CompBitList> {
    CompBitList::unpack(bytes)
}

/// Everything the encoder needs to know about an input before the second pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub counters: [i64; 256],
    pub comp_bit_list: CompBitList,
    pub input_length: u64,
    /// Exact byte length of the payload the encoder will produce.
    pub predicted_payload: u64,
}

impl AnalysisReport {
    pub fn analyze(input: &[u8]) -> Self {
        let counters = compute_counters(input);
        let comp_bit_list = build_comp_bit_list(&counters);
        let saved: i64 = counters.iter().filter(|&&c| c > 0).sum();
        let input_length = input.len() as u64;
        Self {
            counters,
            comp_bit_list,
            input_length,
            predicted_payload: input_length - saved as u64,
        }
    }

    /// Raw layout size: packed list followed by the payload.
    pub fn predicted_raw_size(&self) -> u64 {
        PACKED_LIST_LEN as u64 + self.predicted_payload
    }

    /// Bytes saved across all flagged symbols.
    pub fn total_saved(&self) -> i64 {
        self.counters.iter().filter(|&&c| c > 0).sum()
    }
}

pub fn analyze(input: &[u8]) -> AnalysisReport {
    AnalysisReport::analyze(input)
}
