//! Closed-form counts checked against brute-force enumeration, every rule.
//!
//! The two engines share no code path: one multiplies interval statistics,
//! the other simulates every choice sequence. Agreement is the point.
//!
//! Usage: cargo run --example crosscheck -- [max_n]    (default 8)

use privperm::{count_by_enumeration, count_rule, RuleKind};

fn main() {
    let max_n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a positive integer"))
        .unwrap_or(8);

    let mut mismatches = 0u32;
    println!("{:>4} {:>5} {:>14} {:>14}  verdict", "rule", "n", "formula", "oracle");
    for rule in RuleKind::ALL {
        for n in 1..=max_n {
            let formula = count_rule(rule, u64::from(n)).expect("n >= 1");
            let oracle = count_by_enumeration(rule, n).expect("n within the enumeration guard");
            let verdict = if formula == oracle { "ok" } else { "MISMATCH" };
            if formula != oracle {
                mismatches += 1;
            }
            println!("{:>4} {n:>5} {:>14} {:>14}  {verdict}", rule.to_string(), formula.to_string(), oracle.to_string());
        }
    }

    if mismatches > 0 {
        eprintln!("{mismatches} mismatches");
        std::process::exit(1);
    }
    println!("all {} checks passed", RuleKind::ALL.len() as u32 * max_n);
}
