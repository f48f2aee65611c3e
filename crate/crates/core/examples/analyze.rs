//! Per-symbol savings and the resulting compressibility flags.
//!
//! cargo run --example analyze -- [TEXT]

use mrle::analysis::{analyze, scan_runs};

fn main() {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "AAABBBAACDAAAABDB".to_string());
    let input = input.as_bytes();

    let runs: Vec<String> = scan_runs(input)
        .iter()
        .map(|r| format!("{}x{}", r.value as char, r.length))
        .collect();
    println!(
        "input: {:?} ({} bytes)",
        String::from_utf8_lossy(input),
        input.len()
    );
    println!("runs:  {}", runs.join(" "));

    let report = analyze(input);
    println!("\nsymbol  saved  flag");
    for s in 0..=255u8 {
        if input.contains(&s) {
            let flag = report.comp_bit_list.is_set(s) as u8;
            println!(
                "{:>6}  {:>5}  {flag}",
                s as char, report.counters[s as usize]
            );
        }
    }
    println!(
        "\npayload {} bytes, raw file {} bytes (input + list would be {})",
        report.predicted_payload,
        report.predicted_raw_size(),
        input.len() + 32
    );
}
