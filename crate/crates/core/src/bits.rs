/// A sequence of bits packed most-significant bit first into bytes.
///
/// The last byte is zero-padded when `len` is not a multiple of 8.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    bytes: Vec<u8>,
    len: usize,
}

impl std::fmt::Debug for BitString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitString({}: ", self.len)?;
        for bit in self.iter().take(256) {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        if self.len > 256 {
            f.write_str("...")?;
        }
        f.write_str(")")
    }
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            bytes: Vec::with_capacity(bits.div_ceil(8)),
            len: 0,
        }
    }

    /// Every bit of `bytes`, MSB first.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        Self {
            bytes: bytes.to_vec(),
            len: bytes.len() * 8,
        }
    }

    /// The first `len` bits of `bytes`. Returns `None` if `bytes` is too short.
    pub fn from_bytes_with_len(bytes: &[u8], len: usize) -> Option<Self> {
        if bytes.len() * 8 < len {
            return None;
        }
        let mut out = Self {
            bytes: bytes[..len.div_ceil(8)].to_vec(),
            len,
        };
        out.clear_padding();
        Some(out)
    }

    /// Parses a string of `0`/`1` characters; whitespace is ignored.
    pub fn parse(s: &str) -> Option<Self> {
        let mut out = Self::new();
        for c in s.chars() {
            match c {
                '0' => out.push(false),
                '1' => out.push(true),
                c if c.is_whitespace() => {}
                _ => return None,
            }
        }
        Some(out)
    }

    fn clear_padding(&mut self) {
        let rem = self.len % 8;
        if rem != 0 {
            if let Some(last) = self.bytes.last_mut() {
                *last &= 0xFF << (8 - rem);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Packed bytes, zero-padded.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    #[inline]
    pub fn get(&self, index: usize) -> Option<bool> {
        (index < self.len).then(|| self.bytes[index / 8] & (0x80 >> (index % 8)) != 0)
    }

    #[inline]
    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(8) {
            self.bytes.push(0);
        }
        if bit {
            let last = self.bytes.len() - 1;
            self.bytes[last] |= 0x80 >> (self.len % 8);
        }
        self.len += 1;
    }

    pub fn push_repeated(&mut self, bit: bool, count: usize) {
        // Fill to a byte boundary, then whole bytes.
        let mut remaining = count;
        while remaining > 0 && !self.len.is_multiple_of(8) {
            self.push(bit);
            remaining -= 1;
        }
        let fill = if bit { 0xFF } else { 0x00 };
        self.bytes.extend(std::iter::repeat_n(fill, remaining / 8));
        self.len += remaining / 8 * 8;
        for _ in 0..remaining % 8 {
            self.push(bit);
        }
    }

    /// Appends the low `width` bits of `value`, most significant first.
    pub fn push_field(&mut self, value: u32, width: u32) {
        for shift in (0..width).rev() {
            self.push((value >> shift) & 1 != 0);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.bytes[i / 8] & (0x80 >> (i % 8)) != 0)
    }
}

impl FromIterator<bool> for BitString {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut out = Self::new();
        for bit in iter {
            out.push(bit);
        }
        out
    }
}

/// Sequential reader over a [`BitString`].
pub struct BitReader<'a> {
    bits: &'a BitString,
    pos: usize,
}

impl<'a> BitReader<'a> {
    pub fn new(bits: &'a BitString) -> Self {
        Self { bits, pos: 0 }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn remaining(&self) -> usize {
        self.bits.len() - self.pos
    }

    pub fn read_bit(&mut self) -> Option<bool> {
        let bit = self.bits.get(self.pos)?;
        self.pos += 1;
        Some(bit)
    }

    /// Reads `width` bits MSB first. Consumes nothing if fewer remain.
    pub fn read_field(&mut self, width: u32) -> Option<u32> {
        if self.remaining() < width as usize {
            return None;
        }
        let mut v = 0;
        for _ in 0..width {
            v = (v << 1) | self.read_bit()? as u32;
        }
        Some(v)
    }
}
