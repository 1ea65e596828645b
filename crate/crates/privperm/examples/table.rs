//! The first terms of all seven counting sequences, side by side.
//!
//! Usage: cargo run --example table -- [max_n]        (default 12)

use privperm::{count_rule, RuleKind};

fn main() {
    let max_n: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a positive integer"))
        .unwrap_or(12);

    print!("{:>4}", "n");
    for rule in RuleKind::ALL {
        print!("{:>16}", rule.to_string());
    }
    println!();

    for n in 1..=max_n {
        print!("{n:>4}");
        for rule in RuleKind::ALL {
            let count = count_rule(rule, n).expect("n >= 1");
            print!("{:>16}", count.to_string());
        }
        println!();
    }

    println!();
    println!("P-rules seat along a row, C-rules around a circle; every value");
    println!("is exact. Rules and sequences: P1=A358056 P2=A095236 P3=A361295");
    println!("P4=A095912 P5=A363785 C1=A361296 C2=A095239.");
}
