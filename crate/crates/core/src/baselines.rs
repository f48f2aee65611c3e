//! Reference codecs: classic `[run][value]` RLE and PackBits.

use crate::analysis::scan_runs;
use crate::error::{Error, Result};

/// One classic RLE pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RlePair {
    pub run: u8,
    pub value: u8,
}

pub const RLE_MAX_RUN: u64 = 255;

pub fn rle_pairs(input: &[u8]) -> Vec<RlePair> {
    let mut pairs = Vec::new();
    for run in scan_runs(input) {
        let mut remaining = run.length;
        while remaining > 0 {
            let n = remaining.min(RLE_MAX_RUN);
            pairs.push(RlePair {
                run: n as u8,
                value: run.value,
            });
            remaining -= n;
        }
    }
    pairs
}

pub fn rle_encode(input: &[u8]) -> Vec<u8> {
    rle_pairs(input)
        .into_iter()
        .flat_map(|p| [p.run, p.value])
        .collect()
}

pub fn rle_decode(input: &[u8]) -> Result<Vec<u8>> {
    if !input.len().is_multiple_of(2) {
        return Err(Error::TruncatedInput("odd-length RLE stream"));
    }
    let mut out = Vec::new();
    for (i, pair) in input.chunks_exact(2).enumerate() {
        if pair[0] == 0 {
            return Err(Error::InvalidRunByte { offset: 2 * i });
        }
        out.extend(std::iter::repeat_n(pair[1], pair[0] as usize));
    }
    Ok(out)
}

const PACKBITS_MAX: usize = 128;

fn flush_literal(out: &mut Vec<u8>, literal: &mut Vec<u8>) {
    if !literal.is_empty() {
        out.push((literal.len() - 1) as u8);
        out.append(literal);
    }
}

/// PackBits with repeat tokens for runs of 3 or more; shorter runs go into literal groups.
pub fn packbits_encode(input: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(input.len() + input.len().div_ceil(PACKBITS_MAX));
    let mut literal: Vec<u8> = Vec::with_capacity(PACKBITS_MAX);
    for run in scan_runs(input) {
        let mut remaining = run.length as usize;
        while remaining >= 3 {
            let n = remaining.min(PACKBITS_MAX);
            flush_literal(&mut out, &mut literal);
            // 257 - n as a two's-complement byte, i.e. -(n - 1)
            out.push((1 - n as i16) as u8);
            out.push(run.value);
            remaining -= n;
        }
        for _ in 0..remaining {
            literal.push(run.value);
            if literal.len() == PACKBITS_MAX {
                flush_literal(&mut out, &mut literal);
            }
        }
    }
    flush_literal(&mut out, &mut literal);
    out
}

pub fn packbits_decode(input: &[u8]) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut pos = 0;
    while let Some(&n) = input.get(pos) {
        pos += 1;
        match n {
            0..=127 => {
                let count = n as usize + 1;
                let data = input
                    .get(pos..pos + count)
                    .ok_or(Error::TruncatedInput("PackBits literal cut short"))?;
                out.extend_from_slice(data);
                pos += count;
            }
            128 => {}
            _ => {
                let &value = input
                    .get(pos)
                    .ok_or(Error::TruncatedInput("PackBits repeat cut short"))?;
                out.extend(std::iter::repeat_n(value, 257 - n as usize));
                pos += 1;
            }
        }
    }
    Ok(out)
}
