//! Exact enumeration of privacy-seeking seating: payphone permutations.
//!
//! `n` people arrive one by one at a row (or circle) of `n` payphones, and
//! each takes a free payphone as far from everybody else as the house rule
//! allows. Writing down, for each payphone, which person ended up there
//! yields a *payphone permutation* — and not every permutation can arise
//! this way. This crate counts and enumerates the ones that can, exactly,
//! for seven variants of the privacy rule:
//!
//! | rule | layout | preference |
//! |------|--------|------------|
//! | `P1` | row    | maximize distance to the nearest occupied payphone |
//! | `P2` | row    | enter a longest interval, then sit as in P1 inside it |
//! | `P3` | row    | P1, but at distance 1 prefer a free end of the row |
//! | `P4` | row    | P2, but among unit intervals prefer an end seat over a sandwiched one |
//! | `P5` | row    | P1, but at distance 1 prefer a seat with one occupied neighbour |
//! | `C1` | circle | P1 around a circle |
//! | `C2` | circle | P2 around a circle |
//!
//! Two engines compute every count. [`counting::count_rule`] evaluates
//! closed-form formulas built on interval-evolution multisets
//! ([`multiset`]), in exact big-integer arithmetic, comfortably out to
//! hundreds of terms. [`simulator::enumerate`] plays the seating process
//! out state by state and lists the permutations themselves; it shares no
//! code with the formula engine, which makes it an honest cross-check (and
//! it is the thing to use when you want the permutations, not just how many
//! there are). The seven sequences are in the OEIS, and [`oeis`] reads,
//! writes, compares, and fetches b-files so results can be verified against
//! the published terms.
//!
//! The `examples/` directory is the front door; each example exercises one
//! capability end to end:
//!
//! * `table` — the first terms of all seven sequences, side by side;
//! * `enumerate` — every permutation reachable under a rule, with the
//!   classic six-payphone walkthrough outcomes highlighted;
//! * `seating_walkthrough` — one random-but-reproducible seating, narrated
//!   state by state with its intervals;
//! * `crosscheck` — formulas vs. brute force on every rule;
//! * `multiplicity` — interval-evolution multisets and the three agreeing
//!   ways to compute their multiplicities;
//! * `bfile_verify` — computed terms checked against a bundled OEIS b-file;
//! * `c2_dips` — the counterintuitive places where adding a payphone
//!   *reduces* the number of circular seatings.
//!
//! A thin `privperm` binary exposes the same capabilities as subcommands
//! (`terms`, `enumerate`, `crosscheck`, `verify`, `multiplicity`) for
//! scripting; see the README.

pub mod counting;
pub mod error;
pub mod multiset;
pub mod oeis;
pub mod simulator;

pub use counting::{a060973, count_rule, f_weight, g_weight, h_weight, Count, RuleKind};
pub use error::{Error, Result};
pub use multiset::{
    multiplicity_explicit, multiplicity_lemma, s_multiset, s_prime, LengthMultiset,
};
pub use oeis::{
    compare_terms, emit_bfile, fetch_bfile, parse_bfile, sequence_id, ComparisonReport, OeisId,
    SequenceTerms, BASE_URL_ENV, DEFAULT_BASE_URL,
};
pub use simulator::{
    count_by_enumeration, enumerate, enumerate_with_limit, sample_run, BoothState, Closure,
    Interval, Layout, PayphonePermutation, DEFAULT_ENUMERATION_LIMIT,
};
