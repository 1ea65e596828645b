//! Interval-length multisets S(n) and their multiplicities, three ways.
//!
//! S(n) records the lengths of the free intervals produced while n+1 people
//! fill a circle of n+1 payphones under the distance rule: {n} splits into
//! {(n-1)/2} and {n/2}, and so on down to nothing. The multiplicity of a
//! length k in S(n) can be read off the recurrence, summed in closed form,
//! or computed from the binary structure of n alone; all three must agree.
//!
//! Usage: cargo run --example multiplicity -- [n]      (default 40)

use privperm::{multiplicity_explicit, multiplicity_lemma, s_multiset};

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(40);

    println!("the first few multisets:");
    for m in 1..=12.min(n) {
        println!("  S({m:>2}) = {}", s_multiset(m));
    }
    println!();

    let multiset = s_multiset(n);
    println!("S({n}) = {multiset}");
    println!();
    println!("{:>6} {:>12} {:>12} {:>12}", "k", "recurrence", "closed sum", "explicit");
    for (k, count) in multiset.iter() {
        let lemma = multiplicity_lemma(n, k);
        let explicit = multiplicity_explicit(n, k);
        assert_eq!(count, lemma, "closed sum disagrees at k={k}");
        assert_eq!(count, explicit, "explicit formula disagrees at k={k}");
        println!("{k:>6} {count:>12} {lemma:>12} {explicit:>12}");
    }
    println!();
    println!(
        "total intervals: {} (always n, one per arrival after the first)",
        multiset.total()
    );
}
