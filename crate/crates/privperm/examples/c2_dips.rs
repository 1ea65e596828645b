//! Places where one more payphone means fewer circular seatings.
//!
//! The circular distance-rule count C2 is not monotone: at certain n
//! (just past powers of two and certain midpoints) adding a payphone
//! shrinks the number of reachable seatings. This scans for every such
//! drop and prints one window in full.
//!
//! Usage: cargo run --example c2_dips -- [max_n]       (default 128)

use privperm::{count_rule, Count, RuleKind};

fn c2(n: u64) -> Count {
    count_rule(RuleKind::C2, n).expect("n >= 1")
}

fn main() {
    let max_n: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a positive integer"))
        .unwrap_or(128);

    let mut drops = Vec::new();
    let mut previous = c2(1);
    for n in 2..=max_n {
        let current = c2(n);
        if current < previous {
            drops.push(n);
        }
        previous = current;
    }

    let list = drops
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    println!("C2 drops when n reaches: {list}   (scanned 2..={max_n})");
    println!();

    println!("around the double drop at 96..98:");
    for n in 94..=99 {
        let value = c2(n);
        let marker = if value < c2(n - 1) { "  <- fewer than before" } else { "" };
        println!("  C2({n:>3}) = {value}{marker}");
    }
}
