//! Encode and decode the two worked examples, side by side with Standard-RLE.
//!
//! cargo run --example byte_codec

use mrle::baselines::rle_encode;
use mrle::{mrle_decode, mrle_encode};

fn show(bytes: &[u8]) -> String {
    bytes
        .iter()
        .map(|&b| {
            if b.is_ascii_alphabetic() {
                (b as char).to_string()
            } else {
                b.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() {
    for input in [&b"AAAABBCCCDB"[..], b"AAABBBAACDAAAABDB"] {
        let (flags, payload) = mrle_encode(input);
        let rle = rle_encode(input);
        println!("data:          {}", String::from_utf8_lossy(input));
        println!(
            "flagged:       {:?}",
            flags.set_symbols().map(char::from).collect::<String>()
        );
        println!("standard rle:  {}  ({} bytes)", show(&rle), rle.len());
        println!(
            "mrle payload:  {}  ({} bytes)",
            show(&payload.bytes),
            payload.len()
        );

        let back = mrle_decode(&flags, &payload.bytes).expect("valid payload");
        assert_eq!(back, input);
        println!("decoded:       {}\n", String::from_utf8_lossy(&back));
    }
}
