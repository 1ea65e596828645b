//! One reproducible random seating, narrated arrival by arrival.
//!
//! Usage: cargo run --example seating_walkthrough -- [rule] [n] [seed]
//!                                                  (default p1 10 7)

use privperm::{sample_run, BoothState, Closure, Interval, RuleKind};

fn render(state: &BoothState) -> String {
    let cells: Vec<String> = (1..=state.n())
        .map(|pos| state.occupant(pos).map_or(".".into(), |p| p.to_string()))
        .collect();
    format!("[ {} ]", cells.join(" "))
}

fn describe(interval: &Interval, n: u32) -> String {
    let positions = interval.positions(n);
    let span = if positions.len() == 1 {
        positions[0].to_string()
    } else {
        format!("{}-{}", positions.first().unwrap(), positions.last().unwrap())
    };
    let closure = match interval.closure() {
        Closure::Open => "open",
        Closure::SemiClosed => "semi-closed",
        Closure::Closed => "closed",
    };
    format!("{span} {closure} (len {}, full {})", interval.length(), interval.full_length())
}

fn main() {
    let mut args = std::env::args().skip(1);
    let rule: RuleKind = args
        .next()
        .unwrap_or_else(|| "p1".into())
        .parse()
        .expect("rule must be one of p1 p2 p3 p4 p5 c1 c2");
    let n: u32 = args
        .next()
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(10);
    let seed: u64 = args
        .next()
        .map(|s| s.parse().expect("seed must be an integer"))
        .unwrap_or(7);

    let states = sample_run(rule, n, seed).expect("n >= 1");
    println!("rule {rule}, {n} payphones, seed {seed}");
    println!();

    for pair in states.windows(2) {
        let (before, after) = (&pair[0], &pair[1]);
        let person = before.seated() + 1;
        let choices = before.allowed_choices(rule).expect("booth not full");
        let taken = (1..=n)
            .find(|&pos| before.occupant(pos).is_none() && after.occupant(pos).is_some())
            .expect("exactly one new occupant per arrival");

        let choice_list = choices
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        println!("person {person:>2} may take {{{choice_list}}}, takes {taken}");
        print!("           {}", render(after));
        let intervals = after.intervals();
        if intervals.is_empty() {
            println!("   (no free intervals left)");
        } else {
            let summary = intervals
                .iter()
                .map(|iv| describe(iv, n))
                .collect::<Vec<_>>()
                .join("; ");
            println!("   {summary}");
        }
    }

    let perm = states.last().unwrap().permutation().expect("full booth");
    println!();
    println!("payphone permutation: {perm}");
}
