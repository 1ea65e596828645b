//! Computed terms checked against the bundled OEIS reference b-files.
//!
//! Each rule maps to a published OEIS sequence; the fixtures under
//! tests/fixtures/ carry the published terms. To check against a live or
//! mirrored server instead, use `privperm verify <rule> --fetch`.
//!
//! Usage: cargo run --example bfile_verify -- [max_n]  (default 100)

use std::path::PathBuf;

use privperm::{compare_terms, count_rule, parse_bfile, sequence_id, RuleKind, SequenceTerms};

fn main() {
    let max_n: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a positive integer"))
        .unwrap_or(100);

    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut failures = 0u32;

    for rule in RuleKind::ALL {
        let id = sequence_id(rule);
        let path = fixtures.join(id.bfile_name());
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("read {}: {e}", path.display()));
        let reference = parse_bfile(id.clone(), &text).expect("bundled fixture parses");

        let values: Vec<_> = (1..=max_n)
            .map(|n| count_rule(rule, n).expect("n >= 1"))
            .collect();
        let computed = SequenceTerms::from_values(id.clone(), 1, values).expect("non-empty");

        let report = compare_terms(&computed, &reference).expect("ranges overlap at n=1");
        println!("{rule} vs {id}: {report}");
        if !report.all_match() {
            failures += 1;
        }
    }

    if failures > 0 {
        eprintln!("{failures} sequences disagree with their reference terms");
        std::process::exit(1);
    }
}
