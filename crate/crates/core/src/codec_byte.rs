//! Byte-level encoder and decoder.
//!
//! Payload tokens are value-first. A flagged symbol is followed by one or more
//! run bytes: `255` adds 254 and another run byte follows, `1..=254` adds that
//! amount and ends the run. Unflagged symbols are written literally, one byte
//! per occurrence. Run byte `0` is never produced.

use crate::analysis::{scan_runs, AnalysisReport, CompBitList, MAX_RUN_CHUNK};
use crate::error::{Error, Result};

/// Run byte meaning "254 more, and keep reading".
pub const RUN_ESCAPE: u8 = 255;

/// Token stream following the compressibility list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EncodedPayload {
    pub bytes: Vec<u8>,
}

impl EncodedPayload {
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }
}

impl From<Vec<u8>> for EncodedPayload {
    fn from(bytes: Vec<u8>) -> Self {
        Self { bytes }
    }
}

impl AsRef<[u8]> for EncodedPayload {
    fn as_ref(&self) -> &[u8] {
        &self.bytes
    }
}

fn push_run_length(out: &mut Vec<u8>, length: u64) {
    let chunks = length.div_ceil(MAX_RUN_CHUNK);
    for _ in 1..chunks {
        out.push(RUN_ESCAPE);
    }
    out.push((length - MAX_RUN_CHUNK * (chunks - 1)) as u8);
}

/// Encodes a run length as `ceil(length / 254)` run bytes.
pub fn encode_run_length(length: u64) -> Result<Vec<u8>> {
    if length == 0 {
        return Err(Error::ZeroRunLength);
    }
    let mut out = Vec::with_capacity(length.div_ceil(MAX_RUN_CHUNK) as usize);
    push_run_length(&mut out, length);
    Ok(out)
}

/// Reads one run length starting at `*pos`, advancing `*pos` past it.
pub fn decode_run_length(stream: &[u8], pos: &mut usize) -> Result<u64> {
    let mut total = 0u64;
    loop {
        let Some(&b) = stream.get(*pos) else {
            return Err(Error::TruncatedInput("run length cut short"));
        };
        match b {
            0 => return Err(Error::InvalidRunByte { offset: *pos }),
            RUN_ESCAPE => {
                total += MAX_RUN_CHUNK;
                *pos += 1;
            }
            n => {
                *pos += 1;
                return Ok(total + n as u64);
            }
        }
    }
}

/// Encodes `input` under a caller-chosen flag list.
///
/// Any list decodes correctly; only the analysed list is guaranteed to be
/// the smallest.
pub fn encode_with_flags(input: &[u8], flags: &CompBitList) -> EncodedPayload {
    let mut out = Vec::with_capacity(input.len());
    for run in scan_runs(input) {
        if flags.is_set(run.value) {
            out.push(run.value);
            push_run_length(&mut out, run.length);
        } else {
            out.extend(std::iter::repeat_n(run.value, run.length as usize));
        }
    }
    EncodedPayload { bytes: out }
}

pub fn mrle_encode(input: &[u8]) -> (CompBitList, EncodedPayload) {
    let report = AnalysisReport::analyze(input);
    let payload = encode_with_flags(input, &report.comp_bit_list);
    debug_assert_eq!(payload.len() as u64, report.predicted_payload);
    (report.comp_bit_list, payload)
}

pub fn mrle_decode(flags: &CompBitList, payload: &[u8]) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(payload.len());
    let mut pos = 0;
    while let Some(&value) = payload.get(pos) {
        pos += 1;
        if flags.is_set(value) {
            let length = decode_run_length(payload, &mut pos)?;
            out.extend(std::iter::repeat_n(value, length as usize));
        } else {
            out.push(value);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_length_examples() {
        assert_eq!(encode_run_length(4).unwrap(), vec![0x04]);
        assert_eq!(encode_run_length(254).unwrap(), vec![0xFE]);
        assert_eq!(encode_run_length(255).unwrap(), vec![0xFF, 0x01]);
        assert_eq!(
            encode_run_length(1020).unwrap(),
            vec![0xFF, 0xFF, 0xFF, 0xFF, 0x04]
        );
        assert!(matches!(encode_run_length(0), Err(Error::ZeroRunLength)));
    }

    #[test]
    fn decode_run_length_examples() {
        let mut pos = 0;
        assert_eq!(decode_run_length(&[0x04], &mut pos).unwrap(), 4);
        assert_eq!(pos, 1);
        pos = 0;
        assert_eq!(decode_run_length(&[0xFF, 0x01], &mut pos).unwrap(), 255);
        pos = 0;
        assert!(matches!(
            decode_run_length(&[0x00], &mut pos),
            Err(Error::InvalidRunByte { offset: 0 })
        ));
        pos = 0;
        assert!(matches!(
            decode_run_length(&[0xFF], &mut pos),
            Err(Error::TruncatedInput(_))
        ));
    }

    #[test]
    fn encode_examples() {
        let (flags, payload) = mrle_encode(b"AAAABBCCCDB");
        assert_eq!(flags, CompBitList::from_symbols(*b"AC"));
        assert_eq!(payload.bytes, b"A\x04BBC\x03DB");

        let (flags, payload) = mrle_encode(b"AAABBBAACDAAAABDB");
        assert_eq!(flags, CompBitList::from_symbols(*b"A"));
        assert_eq!(payload.bytes, b"A\x03BBBA\x02CDA\x04BDB");
        assert_eq!(payload.len(), 14);

        let (flags, payload) = mrle_encode(b"");
        assert_eq!(flags, CompBitList::empty());
        assert!(payload.is_empty());
    }

    #[test]
    fn decode_examples() {
        let flags = CompBitList::from_symbols(*b"AC");
        assert_eq!(
            mrle_decode(&flags, b"A\x04BBC\x03DB").unwrap(),
            b"AAAABBCCCDB"
        );
        let flags = CompBitList::from_symbols(*b"B");
        assert_eq!(
            mrle_decode(&flags, &[0x42, 0xFF, 0x05]).unwrap(),
            vec![b'B'; 259]
        );
        let flags = CompBitList::from_symbols(*b"A");
        assert!(matches!(
            mrle_decode(&flags, b"A"),
            Err(Error::TruncatedInput(_))
        ));
        assert!(matches!(
            mrle_decode(&flags, b"A\x00"),
            Err(Error::InvalidRunByte { offset: 1 })
        ));
    }

    #[test]
    fn forced_flags_still_round_trip() {
        let input = b"xxyyyyzabbbbbbbb";
        for mask in [
            CompBitList::empty(),
            CompBitList::from_flags([true; 256]),
            CompBitList::from_symbols(*b"yz"),
        ] {
            let payload = encode_with_flags(input, &mask);
            assert_eq!(mrle_decode(&mask, &payload.bytes).unwrap(), input);
        }
    }
}
