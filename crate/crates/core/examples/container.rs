//! Writing and reading both on-disk layouts.
//!
//! cargo run --example container

use mrle::container::{read_container, read_raw, write_container, write_raw, Container};
use mrle::{mrle_decode, mrle_encode, BitString};

fn hex(bytes: &[u8]) -> String {
    bytes
        .iter()
        .map(|b| format!("{b:02X}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() {
    let input = b"AAAABBCCCDB";

    let (flags, payload) = mrle_encode(input);
    let raw = write_raw(&flags, &payload.bytes);
    println!(
        "raw ({} bytes):\n  list    {}\n  payload {}",
        raw.len(),
        hex(&raw[..32]),
        hex(&raw[32..])
    );
    let (flags, payload) = read_raw(&raw).unwrap();
    assert_eq!(mrle_decode(&flags, &payload).unwrap(), input);

    let framed = write_container(&Container::encode_bytes(input));
    println!(
        "\ncontainer, byte mode ({} bytes):\n  header  {}",
        framed.len(),
        hex(&framed[..6])
    );
    assert_eq!(read_container(&framed).unwrap().decode().unwrap(), input);

    let bits = BitString::from_bytes(&[0x00, 0x00, 0x00, 0xFF, 0xFF, 0x0F]);
    let framed = write_container(&Container::encode_bits(&bits));
    println!(
        "\ncontainer, bit mode ({} bytes):\n  {}",
        framed.len(),
        hex(&framed)
    );
    assert_eq!(
        read_container(&framed).unwrap().decode_bits().unwrap(),
        bits
    );

    let mut corrupt = framed.clone();
    corrupt[0] = b'X';
    println!(
        "\ncorrupted magic: {}",
        read_container(&corrupt).unwrap_err()
    );
}
