//! Run-length coding that stores run counts only for symbols that pay for them.
//!
//! Classic RLE writes a `[run][value]` pair for every run, doubling data with
//! no repetition. This crate first measures, per byte value, whether run
//! tokens would save space ([`analysis`]), records the answer in a 256-bit
//! [`CompBitList`], and then writes value-first tokens where a run byte follows
//! only flagged values ([`codec_byte`]). The worst case is therefore the input
//! plus the 32-byte list.
//!
//! ```
//! let (flags, payload) = mrle::mrle_encode(b"AAAABBCCCDB");
//! assert_eq!(payload.bytes, b"A\x04BBC\x03DB");
//! assert_eq!(mrle::mrle_decode(&flags, &payload.bytes).unwrap(), b"AAAABBCCCDB");
//! ```
//!
//! A two-symbol variant for bitstreams lives in [`codec_bit`], Standard-RLE and
//! PackBits in [`baselines`], file framing in [`container`] and the comparison
//! harness in [`bench`].

pub mod analysis;
pub mod baselines;
pub mod bench;
pub mod bits;
pub mod cli;
pub mod codec_bit;
pub mod codec_byte;
pub mod container;
mod error;

pub use analysis::{analyze, scan_runs, AnalysisReport, CompBitList, Run};
pub use bits::BitString;
pub use codec_bit::{decode_bits, encode_bits, BitCompList};
pub use codec_byte::{mrle_decode, mrle_encode, EncodedPayload};
pub use container::{Container, Mode};
pub use error::{Error, Result};
