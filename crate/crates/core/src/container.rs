//! On-disk framing.
//!
//! Raw layout (byte mode only): 32 packed flag bytes followed by the payload.
//!
//! Container layout:
//!
//! ```text
//! 4D 52 4C 45          magic "MRLE"
//! 01                   version
//! 00 | 01              mode: byte-level | bit-level
//! byte mode:  [32 packed flag bytes] [payload ...]
//! bit mode:   [flag byte] [u64 LE original bit count] [payload ...]
//! ```

use crate::analysis::{CompBitList, PACKED_LIST_LEN};
use crate::bits::BitString;
use crate::codec_bit::{self, BitCompList};
use crate::codec_byte;
use crate::error::{Error, Result};

pub const MAGIC: [u8; 4] = *b"MRLE";
pub const VERSION: u8 = 1;
pub const MODE_BYTE: u8 = 0;
pub const MODE_BIT: u8 = 1;

const PREAMBLE_LEN: usize = MAGIC.len() + 2;
pub const BYTE_HEADER_LEN: usize = PREAMBLE_LEN + PACKED_LIST_LEN;
pub const BIT_HEADER_LEN: usize = PREAMBLE_LEN + 1 + 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Byte,
    Bit,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "byte" => Ok(Mode::Byte),
            "bit" => Ok(Mode::Bit),
            other => Err(format!("unknown mode `{other}` (expected byte or bit)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Container {
    Byte {
        flags: CompBitList,
        payload: Vec<u8>,
    },
    Bit {
        flags: BitCompList,
        original_bit_count: u64,
        /// Packed payload bits, zero-padded to whole bytes.
        payload: Vec<u8>,
    },
}

impl Container {
    pub fn mode(&self) -> Mode {
        match self {
            Container::Byte { .. } => Mode::Byte,
            Container::Bit { .. } => Mode::Bit,
        }
    }

    /// Encodes `input` with the byte-level codec.
    pub fn encode_bytes(input: &[u8]) -> Self {
        let (flags, payload) = codec_byte::mrle_encode(input);
        Container::Byte {
            flags,
            payload: payload.bytes,
        }
    }

    /// Encodes `input` with the bit-level codec.
    pub fn encode_bits(input: &BitString) -> Self {
        let (flags, payload) = codec_bit::encode_bits(input);
        Container::Bit {
            flags,
            original_bit_count: input.len() as u64,
            payload: payload.into_bytes(),
        }
    }

    /// Byte mode: the original bytes. Bit mode: the original bits, zero-padded.
    pub fn decode(&self) -> Result<Vec<u8>> {
        match self {
            Container::Byte { flags, payload } => codec_byte::mrle_decode(flags, payload),
            Container::Bit { .. } => Ok(self.decode_bits()?.into_bytes()),
        }
    }

    pub fn decode_bits(&self) -> Result<BitString> {
        match self {
            Container::Bit {
                flags,
                original_bit_count,
                payload,
            } => {
                codec_bit::decode_bits(*flags, &BitString::from_bytes(payload), *original_bit_count)
            }
            Container::Byte { .. } => Ok(BitString::from_bytes(&self.decode()?)),
        }
    }

    pub fn encoded_len(&self) -> usize {
        match self {
            Container::Byte { payload, .. } => BYTE_HEADER_LEN + payload.len(),
            Container::Bit { payload, .. } => BIT_HEADER_LEN + payload.len(),
        }
    }
}

pub fn write_container(c: &Container) -> Vec<u8> {
    let mut out = Vec::with_capacity(c.encoded_len());
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    match c {
        Container::Byte { flags, payload } => {
            out.push(MODE_BYTE);
            out.extend_from_slice(&flags.pack());
            out.extend_from_slice(payload);
        }
        Container::Bit {
            flags,
            original_bit_count,
            payload,
        } => {
            out.push(MODE_BIT);
            out.push(flags.to_byte());
            out.extend_from_slice(&original_bit_count.to_le_bytes());
            out.extend_from_slice(payload);
        }
    }
    out
}

pub fn read_container(bytes: &[u8]) -> Result<Container> {
    let magic_len = bytes.len().min(MAGIC.len());
    if bytes[..magic_len] != MAGIC[..magic_len] {
        return Err(Error::Format("bad magic".into()));
    }
    if bytes.len() < PREAMBLE_LEN {
        return Err(Error::TruncatedInput("container header"));
    }
    if bytes[4] != VERSION {
        return Err(Error::Format(format!("unsupported version {}", bytes[4])));
    }
    match bytes[5] {
        MODE_BYTE => {
            if bytes.len() < BYTE_HEADER_LEN {
                return Err(Error::TruncatedInput("byte-mode header"));
            }
            Ok(Container::Byte {
                flags: CompBitList::unpack(&bytes[PREAMBLE_LEN..BYTE_HEADER_LEN])?,
                payload: bytes[BYTE_HEADER_LEN..].to_vec(),
            })
        }
        MODE_BIT => {
            if bytes.len() < BIT_HEADER_LEN {
                return Err(Error::TruncatedInput("bit-mode header"));
            }
            let flags = BitCompList::from_byte(bytes[PREAMBLE_LEN])?;
            let count = u64::from_le_bytes(
                bytes[PREAMBLE_LEN + 1..BIT_HEADER_LEN]
                    .try_into()
                    .expect("8-byte slice"),
            );
            Ok(Container::Bit {
                flags,
                original_bit_count: count,
                payload: bytes[BIT_HEADER_LEN..].to_vec(),
            })
        }
        m => Err(Error::Format(format!("unknown mode {m}"))),
    }
}

/// The bare layout: packed flags then payload, nothing else.
pub fn write_raw(flags: &CompBitList, payload: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(PACKED_LIST_LEN + payload.len());
    out.extend_from_slice(&flags.pack());
    out.extend_from_slice(payload);
    out
}

pub fn read_raw(bytes: &[u8]) -> Result<(CompBitList, Vec<u8>)> {
    if bytes.len() < PACKED_LIST_LEN {
        return Err(Error::TruncatedInput("raw layout needs 32 flag bytes"));
    }
    let (head, payload) = bytes.split_at(PACKED_LIST_LEN);
    Ok((CompBitList::unpack(head)?, payload.to_vec()))
}
