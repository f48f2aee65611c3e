//! How runs longer than one run byte are chunked.
//!
//! cargo run --example long_runs

use mrle::analysis::saved_bytes;
use mrle::codec_byte::{decode_run_length, encode_run_length};
use mrle::mrle_encode;

fn main() {
    println!("{:>7}  {:>6}  run bytes", "length", "saved");
    for len in [1u64, 2, 3, 253, 254, 255, 508, 509, 1020, 65_535] {
        let bytes = encode_run_length(len).unwrap();
        let mut pos = 0;
        assert_eq!(decode_run_length(&bytes, &mut pos).unwrap(), len);
        let shown: Vec<String> = bytes.iter().take(8).map(|b| format!("{b:02X}")).collect();
        let more = if bytes.len() > 8 { " ..." } else { "" };
        println!(
            "{len:>7}  {:>6}  {}{more} ({} bytes)",
            saved_bytes(len).unwrap(),
            shown.join(" "),
            bytes.len()
        );
    }

    let (_, payload) = mrle_encode(&[b'A'; 1020]);
    println!("\n'A' x 1020 -> {:02X?}", payload.bytes);
}
