//! Exact counts of payphone permutations for all seven seating rules.
//!
//! Each counting formula has the same shape: describe how the row or circle
//! decomposes into intervals once the first one or two people have chosen,
//! then weigh the interval-evolution multiset (see [`crate::multiset`]) by
//! the number of arrival orders it admits. Three weight functions cover the
//! seven rules:
//!
//! * [`f_weight`] — rules where each interval has a forced "middle" choice
//!   except even lengths, which offer two (P2, C2);
//! * [`g_weight`] — max-distance rules, where an interval of length `2q` is
//!   interchangeable with one of length `2q−1` (P1, C1);
//! * [`h_weight`] — the P5 variant, where the sandwiched/short intervals at
//!   lengths 1 and 2 stop being interchangeable.
//!
//! All arithmetic is exact; counts grow superexponentially and live in
//! [`Count`] (an arbitrary-precision unsigned integer).

use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::multiset::{multiplicity_explicit, s_multiset, s_prime, LengthMultiset};

/// Exact nonnegative count; arbitrary precision.
pub type Count = BigUint;

/// The seven seating rules. P-rules seat along a row of payphones, C-rules
/// around a circle.
///
/// * `P1`: maximize the distance to the nearest occupied payphone.
/// * `P2`: enter a longest interval (by full length), then sit as in P1
///   within it.
/// * `P3`: as P1, but at distance 1 prefer a payphone at the open end of the
///   row over any other.
/// * `P4`: as P2, but when only length-1 intervals remain prefer an end
///   payphone over a sandwiched one.
/// * `P5`: as P1, but at distance 1 prefer a payphone with a single occupied
///   neighbour over a sandwiched one.
/// * `C1`/`C2`: P1/P2 on a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleKind {
    P1,
    P2,
    P3,
    P4,
    P5,
    C1,
    C2,
}

impl RuleKind {
    /// All rules, in display order.
    pub const ALL: [RuleKind; 7] = [
        RuleKind::P1,
        RuleKind::P2,
        RuleKind::P3,
        RuleKind::P4,
        RuleKind::P5,
        RuleKind::C1,
        RuleKind::C2,
    ];

    /// True for the circular rules C1 and C2.
    pub fn is_circular(self) -> bool {
        matches!(self, RuleKind::C1 | RuleKind::C2)
    }

    /// Lowercase name as accepted on the command line.
    pub fn name(self) -> &'static str {
        match self {
            RuleKind::P1 => "p1",
            RuleKind::P2 => "p2",
            RuleKind::P3 => "p3",
            RuleKind::P4 => "p4",
            RuleKind::P5 => "p5",
            RuleKind::C1 => "c1",
            RuleKind::C2 => "c2",
        }
    }
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name().to_uppercase())
    }
}

impl FromStr for RuleKind {
    type Err = Error;

    /// Case-insensitive: `"p1"`, `"P1"`, … `"c2"`.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p1" => Ok(RuleKind::P1),
            "p2" => Ok(RuleKind::P2),
            "p3" => Ok(RuleKind::P3),
            "p4" => Ok(RuleKind::P4),
            "p5" => Ok(RuleKind::P5),
            "c1" => Ok(RuleKind::C1),
            "c2" => Ok(RuleKind::C2),
            _ => Err(Error::UnknownRule(s.to_string())),
        }
    }
}

/// `n!` from a process-wide cache of ascending products. Multiplicities of
/// interval lengths stay small (≤ total interval mass), so a flat vector of
/// every factorial up to the largest requested is cheap and saves the
/// counting sums from recomputing the same factorials thousands of times.
fn factorial(n: u64) -> Count {
    static CACHE: LazyLock<Mutex<Vec<Count>>> =
        LazyLock::new(|| Mutex::new(vec![Count::from(1u32)]));
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= n as usize {
        let k = cache.len() as u64;
        let next = cache.last().unwrap() * k;
        cache.push(next);
    }
    cache[n as usize].clone()
}

fn two_pow(exponent: u64) -> Count {
    Count::from(1u32) << usize::try_from(exponent).expect("exponent fits usize")
}

/// Weight of an interval multiset when every interval orders its own filling
/// uniquely except that even lengths offer two middles:
/// `F(M) = ∏ₖ (#ₖM)! · 2^(Σₖ #₂ₖM)`.
///
/// Intervals of equal length are interchangeable (the factorials); each
/// even-length interval contributes an independent choice of two middles.
pub fn f_weight(m: &LengthMultiset) -> Count {
    let mut product = Count::from(1u32);
    let mut evens = 0u64;
    for (length, count) in m.iter() {
        product *= factorial(count);
        if length % 2 == 0 {
            evens += count;
        }
    }
    product * two_pow(evens)
}

/// Weight of an interval multiset under max-distance seating:
/// `G(M) = ∏_q (#₂qM + #₂q₋₁M)! · 2^(Σ_{q≥2} #₂qM)`.
///
/// Lengths `2q` and `2q−1` offer the same nearest-neighbour distance `q`, so
/// the factorial pools them. An even length `2q` still has two best seats —
/// except `2·1 = 2`, where the two seats of a closed length-2 interval are
/// the same distance-1 choice the subsequent length-1 leftover would give,
/// so no extra factor arises at q = 1.
pub fn g_weight(m: &LengthMultiset) -> Count {
    let mut product = Count::from(1u32);
    let mut evens_beyond_two = 0u64;
    let mut pair_total = 0u64;
    let mut current_pair = 0u64;
    for (length, count) in m.iter() {
        let q = length.div_ceil(2);
        if q != current_pair {
            product *= factorial(pair_total);
            pair_total = 0;
            current_pair = q;
        }
        pair_total += count;
        if length % 2 == 0 && q >= 2 {
            evens_beyond_two += count;
        }
    }
    product *= factorial(pair_total);
    product * two_pow(evens_beyond_two)
}

/// Weight of an interval multiset under P5's distance-then-neighbour rule:
/// `H(M) = ∏_{q≥2} (#₂qM + #₂q₋₁M)! · (#₂M)! · (#₁M)! · 2^(Σ_q #₂qM)`.
///
/// Like [`g_weight`] for `q ≥ 2`, but lengths 1 and 2 are no longer
/// interchangeable (a sandwiched payphone is avoided while a length-2
/// interval's seats are not), and every even length — including 2 —
/// contributes its factor of two.
pub fn h_weight(m: &LengthMultiset) -> Count {
    let mut product = Count::from(1u32);
    let mut evens = 0u64;
    let mut pair_total = 0u64;
    let mut current_pair = 0u64;
    for (length, count) in m.iter() {
        if length <= 2 {
            product *= factorial(count);
        } else {
            let q = length.div_ceil(2);
            if q != current_pair {
                product *= factorial(pair_total);
                pair_total = 0;
                current_pair = q;
            }
            pair_total += count;
        }
        if length % 2 == 0 {
            evens += count;
        }
    }
    product *= factorial(pair_total);
    product * two_pow(evens)
}

/// Number of payphone permutations of `n` booths under `rule`, by formula.
///
/// Counts are defined for `n ≥ 1` (the sequences are indexed from 1);
/// `n = 0` is rejected. The row rules P3–P5 take their stated closed form
/// for `n ≥ 4` and the explicit small values 1, 2, 4 below that.
pub fn count_rule(rule: RuleKind, n: u64) -> Result<Count> {
    if n == 0 {
        return Err(Error::TermIndexZero);
    }
    let count = match rule {
        // The first person picks any of n seats; the rest fill a circle gap
        // of n−1, whose interval evolution is exactly S(n−1).
        RuleKind::C2 => n * f_weight(&s_multiset(n - 1)),
        RuleKind::C1 => n * g_weight(&s_multiset(n - 1)),
        // The first person splits the row at seat i into semi-closed pieces
        // of lengths i−1 and n−i.
        RuleKind::P2 => split_sum(n, f_weight),
        RuleKind::P1 => split_sum(n, g_weight),
        RuleKind::P3 => small_or(n, |n| end_biased_sum(n, g_weight)),
        RuleKind::P4 => small_or(n, |n| end_biased_sum(n, f_weight)),
        RuleKind::P5 => small_or(n, p5_sum),
    };
    Ok(count)
}

/// Σ over the first person's seat i of weight(S′(i−1) ∪ S′(n−i)).
fn split_sum(n: u64, weight: fn(&LengthMultiset) -> Count) -> Count {
    let mut total = Count::ZERO;
    for i in 1..=n {
        let m = s_prime(i - 1)
            .union(&s_prime(n - i))
            .expect("interval multiplicities are bounded by n");
        total += weight(&m);
    }
    total
}

/// P3/P4 shape for `n ≥ 4`: the first person at an end seat (i ∈ {1, n})
/// or next to one (i ∈ {2, n−1}) leads to the single semi-closed piece
/// S′(n−1) or S′(n−2) — the end-bias makes the second person's seat forced
/// rather than splitting — and interior seats split as usual.
fn end_biased_sum(n: u64, weight: fn(&LengthMultiset) -> Count) -> Count {
    debug_assert!(n >= 4);
    let mut total = 2u32 * weight(&s_prime(n - 1)) + 2u32 * weight(&s_prime(n - 2));
    for i in 3..=n - 2 {
        let m = s_prime(i - 1)
            .union(&s_prime(n - i))
            .expect("interval multiplicities are bounded by n");
        total += weight(&m);
    }
    total
}

/// P5 shape for `n ≥ 4`: like the end-biased sum with H, but a first person
/// at i ∈ {2, n−1} leaves the end seat as a length-2-equivalent piece,
/// giving the single middle term H({2} ∪ S′(n−2)).
fn p5_sum(n: u64) -> Count {
    debug_assert!(n >= 4);
    let mut near_end = s_prime(n - 2);
    near_end
        .insert(2, 1)
        .expect("interval multiplicities are bounded by n");
    let mut total = 2u32 * h_weight(&s_prime(n - 1)) + h_weight(&near_end);
    for i in 3..=n - 2 {
        let m = s_prime(i - 1)
            .union(&s_prime(n - i))
            .expect("interval multiplicities are bounded by n");
        total += h_weight(&m);
    }
    total
}

/// P3/P4/P5 all start 1, 2, 4 before their closed forms kick in at n = 4.
fn small_or(n: u64, formula: fn(u64) -> Count) -> Count {
    match n {
        1 => Count::from(1u32),
        2 => Count::from(2u32),
        3 => Count::from(4u32),
        _ => formula(n),
    }
}

/// Number of length-1 intervals that ever appear while `n − 1` people fill a
/// closed interval of length `n − 1`; equivalently the number of seats whose
/// occupant arrives with both neighbours already seated.
///
/// Computed as `#₁S(n−1)` via the explicit multiplicity formula; satisfies
/// the divide-and-conquer recurrence `f(n) = f(⌊n/2⌋) + f(⌈n/2⌉)` with
/// `f(1) = 0`, `f(2) = 1` (OEIS A060973).
pub fn a060973(n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        // S(0) is empty.
        return 0;
    }
    multiplicity_explicit(n - 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(u64, u64)]) -> LengthMultiset {
        LengthMultiset::from_pairs(pairs).unwrap()
    }

    fn count(rule: RuleKind, n: u64) -> Count {
        count_rule(rule, n).unwrap()
    }

    /// First ten terms of each sequence, the values the formulas must hit.
    pub(crate) const FIRST_TEN: [(RuleKind, [u64; 10]); 7] = [
        (RuleKind::P1, [1, 2, 4, 8, 20, 48, 216, 576, 1392, 7200]),
        (RuleKind::P2, [1, 2, 4, 8, 16, 36, 136, 216, 672, 2592]),
        (RuleKind::P3, [1, 2, 4, 6, 12, 40, 144, 384, 1008, 6816]),
        (RuleKind::P4, [1, 2, 4, 6, 12, 28, 104, 152, 528, 2208]),
        (RuleKind::P5, [1, 2, 4, 6, 16, 28, 120, 264, 576, 2784]),
        (RuleKind::C1, [1, 2, 6, 8, 60, 144, 336, 384, 8640, 57600]),
        (RuleKind::C2, [1, 2, 6, 8, 40, 96, 168, 384, 1728, 15360]),
    ];

    #[test]
    fn f_weight_values() {
        assert_eq!(f_weight(&LengthMultiset::new()), Count::from(1u32));
        assert_eq!(f_weight(&ms(&[(1, 2), (3, 1)])), Count::from(2u32));
        assert_eq!(f_weight(&ms(&[(1, 2), (2, 1), (4, 1)])), Count::from(8u32));
    }

    #[test]
    fn g_weight_values() {
        assert_eq!(g_weight(&LengthMultiset::new()), Count::from(1u32));
        assert_eq!(g_weight(&ms(&[(1, 1), (2, 1)])), Count::from(2u32));
        assert_eq!(g_weight(&ms(&[(1, 2), (2, 1), (4, 1)])), Count::from(12u32));
    }

    #[test]
    fn h_weight_values() {
        assert_eq!(h_weight(&LengthMultiset::new()), Count::from(1u32));
        assert_eq!(h_weight(&ms(&[(1, 1), (2, 2), (5, 1)])), Count::from(8u32));
        assert_eq!(h_weight(&ms(&[(1, 2), (3, 2)])), Count::from(4u32));
    }

    #[test]
    fn first_ten_terms_of_every_sequence() {
        for (rule, expected) in FIRST_TEN {
            for (i, &value) in expected.iter().enumerate() {
                let n = i as u64 + 1;
                assert_eq!(
                    count(rule, n),
                    Count::from(value),
                    "{rule}({n})"
                );
            }
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(count(RuleKind::C2, 4), Count::from(8u32));
        assert_eq!(count(RuleKind::P1, 7), Count::from(216u32));
        assert_eq!(count(RuleKind::P5, 5), Count::from(16u32));
        assert_eq!(count(RuleKind::P3, 3), Count::from(4u32));
        assert_eq!(count(RuleKind::C1, 10), Count::from(57600u32));
    }

    #[test]
    fn n_zero_is_rejected() {
        for rule in RuleKind::ALL {
            assert!(matches!(count_rule(rule, 0), Err(Error::TermIndexZero)));
        }
    }

    #[test]
    fn circular_counts_are_divisible_by_n() {
        for n in 1..=200u64 {
            for rule in [RuleKind::C1, RuleKind::C2] {
                let c = count(rule, n);
                assert_eq!(&c % n, Count::ZERO, "{rule}({n}) = {c} not divisible by {n}");
            }
        }
    }

    #[test]
    fn restrictive_rules_count_no_more() {
        // P2, P3, P5 restrict P1's choices; P4 restricts P2's.
        for n in 1..=10u64 {
            let p1 = count(RuleKind::P1, n);
            assert!(count(RuleKind::P2, n) <= p1, "P2 vs P1 at {n}");
            assert!(count(RuleKind::P3, n) <= p1, "P3 vs P1 at {n}");
            assert!(count(RuleKind::P5, n) <= p1, "P5 vs P1 at {n}");
            assert!(
                count(RuleKind::P4, n) <= count(RuleKind::P2, n),
                "P4 vs P2 at {n}"
            );
        }
    }

    #[test]
    fn circle_counts_can_decrease_with_more_payphones() {
        for n in [24u64, 32, 48, 56, 64] {
            assert!(
                count(RuleKind::C2, n) > count(RuleKind::C2, n + 1),
                "C2({n}) vs C2({})",
                n + 1
            );
        }
        let (a, b, c) = (
            count(RuleKind::C2, 96),
            count(RuleKind::C2, 97),
            count(RuleKind::C2, 98),
        );
        assert!(a > b && b > c);
    }

    #[test]
    fn a060973_values_and_recurrence() {
        assert_eq!(a060973(1), 0);
        assert_eq!(a060973(2), 1);
        assert_eq!(a060973(8), 4);
        for n in 3..=4096u64 {
            assert_eq!(
                a060973(n),
                a060973(n / 2) + a060973(n.div_ceil(2)),
                "recurrence at {n}"
            );
        }
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in RuleKind::ALL {
            assert_eq!(rule.name().parse::<RuleKind>().unwrap(), rule);
            assert_eq!(rule.to_string().parse::<RuleKind>().unwrap(), rule);
        }
        assert!(matches!(
            "p6".parse::<RuleKind>(),
            Err(Error::UnknownRule(_))
        ));
        assert!("".parse::<RuleKind>().is_err());
    }

    #[test]
    fn circularity_flag() {
        assert!(RuleKind::C1.is_circular());
        assert!(RuleKind::C2.is_circular());
        for rule in [
            RuleKind::P1,
            RuleKind::P2,
            RuleKind::P3,
            RuleKind::P4,
            RuleKind::P5,
        ] {
            assert!(!rule.is_circular());
        }
    }
}
