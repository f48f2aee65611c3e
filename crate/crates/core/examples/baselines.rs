//! Standard-RLE, PackBits and the flagged codec on the same inputs.
//!
//! cargo run --example baselines

use mrle::baselines::{packbits_decode, packbits_encode, rle_decode, rle_encode};
use mrle::bench::{generate_corpus, CorpusSpec};
use mrle::mrle_encode;

fn main() {
    let mut inputs: Vec<(String, Vec<u8>)> = vec![
        ("BBBBAAOPPOOOOP".into(), b"BBBBAAOPPOOOOP".to_vec()),
        ("AAAABBBBCCDDE".into(), b"AAAABBBBCCDDE".to_vec()),
    ];
    for spec in [
        "alternating:4096",
        "constant:4096",
        "geometric-runs(0.2):4096:1",
        "random:4096:1",
    ] {
        let spec: CorpusSpec = spec.parse().unwrap();
        inputs.push((spec.to_string(), generate_corpus(&spec)));
    }

    println!(
        "{:<28} {:>6} {:>6} {:>9} {:>9}",
        "input", "size", "rle", "packbits", "mrle+32"
    );
    for (name, data) in &inputs {
        let rle = rle_encode(data);
        let pb = packbits_encode(data);
        assert_eq!(&rle_decode(&rle).unwrap(), data);
        assert_eq!(&packbits_decode(&pb).unwrap(), data);
        let (_, payload) = mrle_encode(data);
        println!(
            "{name:<28} {:>6} {:>6} {:>9} {:>9}",
            data.len(),
            rle.len(),
            pb.len(),
            32 + payload.len()
        );
    }
}
