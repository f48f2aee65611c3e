//! The two-symbol variant on a synthetic monochrome scanline.
//!
//! cargo run --example bit_level

use mrle::codec_bit::analyze_bits;
use mrle::{decode_bits, encode_bits, BitString};

fn main() {
    // A 640-pixel line: white margin, a few black strokes, white margin.
    let mut line = BitString::new();
    for (bit, n) in [
        (false, 160),
        (true, 12),
        (false, 40),
        (true, 3),
        (false, 2),
        (true, 30),
        (false, 393),
    ] {
        line.push_repeated(bit, n);
    }

    let a = analyze_bits(&line);
    println!("bits: {}", line.len());
    println!(
        "saved if run-coded: zeros {}, ones {}",
        a.counters[0], a.counters[1]
    );
    println!("flags: {:?}", a.flags);

    let (flags, payload) = encode_bits(&line);
    println!(
        "payload: {} bits ({} bytes padded)",
        payload.len(),
        payload.as_bytes().len()
    );

    let back = decode_bits(flags, &payload, line.len() as u64).unwrap();
    assert_eq!(back, line);

    let mut zeros = BitString::new();
    zeros.push_repeated(false, 160);
    println!("\n160 zeros -> {:?}", encode_bits(&zeros).1);
}
