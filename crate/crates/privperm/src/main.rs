//! Thin command-line front end over the `privperm` library: sequence terms,
//! permutation listings, formula-vs-simulation cross-checks, and OEIS
//! b-file verification.
//!
//! Exit codes are a stable contract for scripting: 0 on success, 1 when a
//! verification or cross-check finds a discrepancy (or I/O fails), 2 on
//! usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use privperm::{
    compare_terms, count_by_enumeration, count_rule, emit_bfile, enumerate_with_limit,
    fetch_bfile, multiplicity_explicit, parse_bfile, s_multiset, sequence_id, Count, Error,
    RuleKind, SequenceTerms, BASE_URL_ENV, DEFAULT_BASE_URL, DEFAULT_ENUMERATION_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "privperm",
    version,
    about = "Count, enumerate, and verify payphone permutations under seven privacy rules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms of a rule's counting sequence for n in from..=to.
    Terms {
        #[arg(value_parser = parse_rule)]
        rule: RuleKind,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        from: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
        /// Output shape: values on one line, OEIS b-file lines, or n,value CSV.
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// List every permutation reachable under a rule, one per line, sorted.
    Enumerate {
        #[arg(value_parser = parse_rule)]
        rule: RuleKind,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Refusal threshold for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: u32,
    },
    /// Compare the counting formulas against brute-force enumeration for
    /// every rule and every n up to --max-n.
    Crosscheck {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
    /// Check computed terms against an OEIS b-file (local or fetched).
    Verify {
        #[arg(value_parser = parse_rule)]
        rule: RuleKind,
        /// Path to a local b-file.
        #[arg(long, conflicts_with = "fetch")]
        bfile: Option<PathBuf>,
        /// Download the b-file from the OEIS (or --base-url) instead.
        #[arg(long)]
        fetch: bool,
        /// Compute terms up to this index before comparing.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Where to fetch b-files from.
        #[arg(long, env = BASE_URL_ENV, default_value = DEFAULT_BASE_URL)]
        base_url: String,
        /// Extra attempts after a failed fetch.
        #[arg(long, default_value_t = 2)]
        retries: u32,
    },
    /// Show how many intervals of each length arise while a row of n fills.
    Multiplicity {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Report only the multiplicity of this length.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Bfile,
    Csv,
}

fn parse_rule(s: &str) -> Result<RuleKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Terms {
            rule,
            from,
            to,
            format,
        } => cmd_terms(rule, from, to, format),
        Command::Enumerate { rule, n, limit } => cmd_enumerate(rule, n, limit),
        Command::Crosscheck { max_n } => cmd_crosscheck(max_n),
        Command::Verify {
            rule,
            bfile,
            fetch,
            max_n,
            base_url,
            retries,
        } => cmd_verify(rule, bfile, fetch, max_n, &base_url, retries),
        Command::Multiplicity { n, k } => cmd_multiplicity(n, k),
    };
    ExitCode::from(code)
}

fn computed_terms(rule: RuleKind, from: u64, to: u64) -> Vec<Count> {
    (from..=to)
        .map(|n| count_rule(rule, n).expect("n >= 1 by construction"))
        .collect()
}

fn cmd_terms(rule: RuleKind, from: u64, to: u64, format: Format) -> u8 {
    if from > to {
        eprintln!("error: empty range: from={from} exceeds to={to}");
        return 2;
    }
    let values = computed_terms(rule, from, to);
    match format {
        Format::Plain => {
            let line: Vec<String> = values.iter().map(Count::to_string).collect();
            println!("{}", line.join(" "));
        }
        Format::Bfile => {
            let terms = SequenceTerms::from_values(sequence_id(rule), from as i64, values)
                .expect("range is nonempty and consecutive");
            print!("{}", emit_bfile(&terms));
        }
        Format::Csv => {
            for (i, value) in values.iter().enumerate() {
                println!("{},{value}", from + i as u64);
            }
        }
    }
    0
}

fn cmd_enumerate(rule: RuleKind, n: u32, limit: u32) -> u8 {
    let permutations = match enumerate_with_limit(rule, n, limit) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    for p in &permutations {
        println!("{p}");
    }
    println!("total: {}", permutations.len());
    0
}

fn cmd_crosscheck(max_n: u32) -> u8 {
    if max_n > DEFAULT_ENUMERATION_LIMIT {
        eprintln!(
            "error: --max-n {max_n} exceeds the enumeration guard ({DEFAULT_ENUMERATION_LIMIT})"
        );
        return 2;
    }
    let mut checks = 0usize;
    let mut first_failure: Option<String> = None;
    for rule in RuleKind::ALL {
        for n in 1..=max_n {
            let formula = count_rule(rule, u64::from(n)).expect("n >= 1");
            let oracle = count_by_enumeration(rule, n).expect("n within guard");
            let ok = formula == oracle;
            checks += 1;
            println!(
                "{} n={n} formula={formula} oracle={oracle} {}",
                rule.name(),
                if ok { "ok" } else { "MISMATCH" }
            );
            if !ok && first_failure.is_none() {
                first_failure = Some(format!(
                    "{} n={n} formula={formula} oracle={oracle}",
                    rule.name()
                ));
            }
        }
    }
    match first_failure {
        None => {
            println!("all {checks} checks passed");
            0
        }
        Some(failure) => {
            eprintln!("crosscheck failed: {failure}");
            1
        }
    }
}

fn cmd_verify(
    rule: RuleKind,
    bfile: Option<PathBuf>,
    fetch: bool,
    max_n: u64,
    base_url: &str,
    retries: u32,
) -> u8 {
    let id = sequence_id(rule);
    let text = if let Some(path) = bfile {
        match std::fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return 1;
            }
        }
    } else if fetch {
        match fetch_bfile(&id, base_url, retries) {
            Ok(text) => text,
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        }
    } else {
        eprintln!("error: one of --bfile <PATH> or --fetch is required");
        return 2;
    };
    let reference = match parse_bfile(id.clone(), &text) {
        Ok(terms) => terms,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let computed = SequenceTerms::from_values(id.clone(), 1, computed_terms(rule, 1, max_n))
        .expect("range is nonempty and consecutive");
    let report = match compare_terms(&computed, &reference) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    println!("{} vs {id}: {report}", rule.name());
    if report.all_match() {
        0
    } else {
        1
    }
}

fn cmd_multiplicity(n: u64, k: Option<u64>) -> u8 {
    match k {
        Some(k) => println!("{}", multiplicity_explicit(n, k)),
        None => {
            let pairs: Vec<String> = s_multiset(n)
                .iter()
                .map(|(length, count)| format!("{length}:{count}"))
                .collect();
            println!("{}", pairs.join(" "));
        }
    }
    0
}
