//! Every payphone permutation reachable under one rule, in sorted order.
//!
//! Usage: cargo run --example enumerate -- [rule] [n]  (default p2 6)

use privperm::{count_rule, enumerate, RuleKind};

fn main() {
    let mut args = std::env::args().skip(1);
    let rule: RuleKind = args
        .next()
        .unwrap_or_else(|| "p2".into())
        .parse()
        .expect("rule must be one of p1 p2 p3 p4 p5 c1 c2");
    let n: u32 = args
        .next()
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(6);

    let perms = enumerate(rule, n).expect("n within the enumeration guard");
    for perm in &perms {
        println!("{perm}");
    }
    println!("total under {rule} with {n} payphones: {}", perms.len());

    // The closed-form count must agree with what we just listed.
    let formula = count_rule(rule, u64::from(n)).expect("n >= 1");
    assert_eq!(formula.to_string(), perms.len().to_string());
    println!("closed-form count agrees: {formula}");
}
