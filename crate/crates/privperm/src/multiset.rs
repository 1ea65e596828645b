//! Interval-length multisets and the multiplicity functions on them.
//!
//! When people fill a closed stretch of `n` available payphones one at a
//! time, always taking a middle of the stretch they enter, the stretch of
//! length `n` splits into two of lengths `⌊(n−1)/2⌋` and `⌈(n−1)/2⌉`, and so
//! on recursively. `S(n)` collects the lengths of every nonempty stretch that
//! ever appears:
//!
//! ```text
//! S(0) = ∅
//! S(n) = {n} ∪ S(⌊(n−1)/2⌋) ∪ S(⌈(n−1)/2⌉)
//! ```
//!
//! The multiplicity of a length `k` in `S(n)` is available three independent
//! ways: straight from the recurrence ([`s_multiset`]), as a closed-form sum
//! ([`multiplicity_lemma`]), and as a piecewise explicit formula
//! ([`multiplicity_explicit`]). They agree everywhere; the redundancy is the
//! point, since the counting formulas downstream lean on these values.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};

/// A multiset of interval lengths: each length `≥ 1` maps to how many times
/// it occurs. Stored sparsely; `S(n)` has only `O(log n)` distinct lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LengthMultiset {
    entries: BTreeMap<u64, u64>,
}

impl LengthMultiset {
    /// The empty multiset.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from `(length, multiplicity)` pairs. Pairs may
    /// repeat; multiplicities accumulate.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        let mut m = Self::new();
        for &(length, count) in pairs {
            m.insert(length, count)?;
        }
        Ok(m)
    }

    /// Adds `count` occurrences of `length`.
    ///
    /// Adding zero occurrences is a no-op. Fails if the stored multiplicity
    /// would overflow its 64-bit counter.
    pub fn insert(&mut self, length: u64, count: u64) -> Result<()> {
        assert!(length >= 1, "interval lengths are positive");
        if count == 0 {
            return Ok(());
        }
        let slot = self.entries.entry(length).or_insert(0);
        *slot = slot
            .checked_add(count)
            .ok_or(Error::MultiplicityOverflow { length })?;
        Ok(())
    }

    /// Componentwise sum of two multisets: every length's multiplicity in the
    /// result is the sum of its multiplicities in the operands.
    pub fn union(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (length, count) in other.iter() {
            out.insert(length, count)?;
        }
        Ok(out)
    }

    /// Multiplicity of `length` in the multiset (0 if absent).
    pub fn multiplicity(&self, length: u64) -> u64 {
        self.entries.get(&length).copied().unwrap_or(0)
    }

    /// Total number of elements counted with multiplicity. For `S(n)` this
    /// is exactly `n`: each of the `n` arrivals enters one nonempty stretch.
    pub fn total(&self) -> u128 {
        self.entries.values().map(|&c| u128::from(c)).sum()
    }

    /// Number of distinct lengths present.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Iterates `(length, multiplicity)` pairs in ascending length order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&l, &c)| (l, c))
    }
}

impl fmt::Display for LengthMultiset {
    /// Renders as `{1^2, 2, 4}`; multiplicity 1 omits the exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (length, count)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if count == 1 {
                write!(f, "{length}")?;
            } else {
                write!(f, "{length}^{count}")?;
            }
        }
        write!(f, "}}")
    }
}

static S_CACHE: LazyLock<Mutex<HashMap<u64, Arc<LengthMultiset>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The interval-evolution multiset `S(n)`, computed by the recurrence
/// `S(n) = {n} ∪ S(⌊(n−1)/2⌋) ∪ S(⌈(n−1)/2⌉)` with `S(0) = ∅`.
///
/// Results are memoized globally and shared via `Arc`, so repeated calls are
/// cheap and the recursion costs one evaluation per distinct subproblem.
pub fn s_multiset(n: u64) -> Arc<LengthMultiset> {
    static EMPTY: LazyLock<Arc<LengthMultiset>> =
        LazyLock::new(|| Arc::new(LengthMultiset::new()));
    if n == 0 {
        return Arc::clone(&EMPTY);
    }
    if let Some(hit) = S_CACHE.lock().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    // Compute children outside the lock; the recursion must not hold it.
    // For n ≥ 1, ⌊(n−1)/2⌋ and ⌈(n−1)/2⌉ are (n−1)/2 and n/2.
    let left = s_multiset((n - 1) / 2);
    let right = s_multiset(n / 2);
    let mut m = left
        .union(&right)
        .expect("multiplicities in S(n) are bounded by n");
    m.insert(n, 1)
        .expect("multiplicities in S(n) are bounded by n");
    let arc = Arc::new(m);
    Arc::clone(
        S_CACHE
            .lock()
            .unwrap()
            .entry(n)
            .or_insert_with(|| Arc::clone(&arc)),
    )
}

/// The contribution `S′(ℓ)` of a semi-closed interval of length `ℓ` to the
/// interval evolution: empty for `ℓ = 0`, otherwise `S(ℓ−1) ∪ {2ℓ−1}`.
///
/// A semi-closed interval of length `ℓ` behaves like the visible half of a
/// closed interval of length `2ℓ−1`: its first occupant always takes the open
/// end, leaving a closed interval of length `ℓ−1`.
pub fn s_prime(l: u64) -> LengthMultiset {
    if l == 0 {
        return LengthMultiset::new();
    }
    let mut m = (*s_multiset(l - 1)).clone();
    m.insert(2 * l - 1, 1)
        .expect("multiplicities in S'(l) are bounded by 2l");
    m
}

/// Multiplicity of `k` in `S(n)` as a closed-form sum: over all `ℓ ≥ 0` with
/// `k·2^ℓ ≤ n` and `(k+2)·2^ℓ ≥ n+2`, add `2^ℓ − |n+1 − (k+1)·2^ℓ|`.
///
/// The bounds are evaluated in exact integer arithmetic (no logarithms), so
/// powers of two land on the correct side. An empty range yields 0; in
/// particular `k > n` yields 0.
pub fn multiplicity_lemma(n: u64, k: u64) -> u64 {
    assert!(n >= 1 && k >= 1);
    let (n, k) = (i128::from(n), i128::from(k));
    let mut total: i128 = 0;
    let mut pow: i128 = 1;
    while k * pow <= n {
        if (k + 2) * pow >= n + 2 {
            total += pow - (n + 1 - (k + 1) * pow).abs();
        }
        pow <<= 1;
    }
    u64::try_from(total).expect("each summand is nonnegative and bounded by n")
}

/// Multiplicity of `k` in `S(n)` by the explicit piecewise formula.
///
/// For `k ≥ 2` at most one case can apply, and the implementation asserts
/// that rather than summing: `1 + (n mod 2^ℓ)` if `k = ⌊n/2^ℓ⌋` for some
/// `ℓ < ⌊log₂ n⌋`, or `2^ℓ − 1 − (n mod 2^ℓ)` if `k = ⌊n/2^ℓ⌋ − 1` for some
/// `ℓ ≤ ⌊log₂(n/3)⌋`, else 0. For `k = 1` there is a dedicated two-branch
/// case at `ℓ = ⌊log₂ n⌋`. Agrees with [`multiplicity_lemma`] everywhere.
pub fn multiplicity_explicit(n: u64, k: u64) -> u64 {
    assert!(n >= 1 && k >= 1);
    if k == 1 {
        let l = n.ilog2();
        // n ≥ 3·2^(ℓ−1) − 1, compared as 2n ≥ 3·2^ℓ − 2 to stay in integers
        // (widened so the power of two cannot overflow at the top of u64).
        return if 2 * u128::from(n) >= 3 * (1u128 << l) - 2 {
            1 + (n & ((1u64 << l) - 1))
        } else {
            // ℓ = 0 forces n = 1, which the first branch always takes.
            1u64 << (l - 1)
        };
    }
    let mut found: Option<u64> = None;
    let mut record = |value: u64| {
        assert!(
            found.is_none(),
            "multiplicity cases are mutually exclusive for k >= 2 (n={n}, k={k})"
        );
        found = Some(value);
    };
    for l in 0..n.ilog2() {
        if n >> l == k {
            record(1 + (n & ((1u64 << l) - 1)));
        }
    }
    if n >= 3 {
        for l in 0..=(n / 3).ilog2() {
            if (n >> l) - 1 == k {
                record((1u64 << l) - 1 - (n & ((1u64 << l) - 1)));
            }
        }
    }
    found.unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(u64, u64)]) -> LengthMultiset {
        LengthMultiset::from_pairs(pairs).unwrap()
    }

    #[test]
    fn s_multiset_small_values() {
        assert!(s_multiset(0).is_empty());
        assert_eq!(*s_multiset(1), ms(&[(1, 1)]));
        assert_eq!(*s_multiset(2), ms(&[(1, 1), (2, 1)]));
        assert_eq!(*s_multiset(3), ms(&[(1, 2), (3, 1)]));
        assert_eq!(*s_multiset(4), ms(&[(1, 2), (2, 1), (4, 1)]));
        assert_eq!(*s_multiset(5), ms(&[(1, 2), (2, 2), (5, 1)]));
        assert_eq!(*s_multiset(6), ms(&[(1, 3), (2, 1), (3, 1), (6, 1)]));
        assert_eq!(*s_multiset(7), ms(&[(1, 4), (3, 2), (7, 1)]));
        assert_eq!(
            *s_multiset(11),
            ms(&[(1, 4), (2, 4), (5, 2), (11, 1)])
        );
    }

    #[test]
    fn s_prime_small_values() {
        assert!(s_prime(0).is_empty());
        assert_eq!(s_prime(1), ms(&[(1, 1)]));
        assert_eq!(s_prime(2), ms(&[(1, 1), (3, 1)]));
        assert_eq!(s_prime(3), ms(&[(1, 1), (2, 1), (5, 1)]));
        assert_eq!(s_prime(4), ms(&[(1, 2), (3, 1), (7, 1)]));
    }

    #[test]
    fn union_is_componentwise_addition() {
        let empty = LengthMultiset::new();
        let m = ms(&[(1, 2), (3, 1)]);
        assert_eq!(empty.union(&m).unwrap(), m);
        assert_eq!(
            m.union(&ms(&[(1, 1), (2, 1)])).unwrap(),
            ms(&[(1, 3), (2, 1), (3, 1)])
        );
        assert_eq!(
            s_prime(2).union(&s_prime(2)).unwrap(),
            ms(&[(1, 2), (3, 2)])
        );
    }

    #[test]
    fn union_overflow_is_reported() {
        let a = ms(&[(9, u64::MAX)]);
        let b = ms(&[(9, 1)]);
        match a.union(&b) {
            Err(Error::MultiplicityOverflow { length: 9 }) => {}
            other => panic!("expected overflow error, got {other:?}"),
        }
    }

    #[test]
    fn zero_count_insert_stores_nothing() {
        let mut m = LengthMultiset::new();
        m.insert(5, 0).unwrap();
        assert!(m.is_empty());
        assert_eq!(m.multiplicity(5), 0);
    }

    #[test]
    fn display_format() {
        assert_eq!(LengthMultiset::new().to_string(), "{}");
        assert_eq!(ms(&[(1, 2), (2, 1), (4, 1)]).to_string(), "{1^2, 2, 4}");
        assert_eq!(s_multiset(7).to_string(), "{1^4, 3^2, 7}");
    }

    #[test]
    fn lemma_spot_values() {
        assert_eq!(multiplicity_lemma(4, 2), 1);
        assert_eq!(multiplicity_lemma(5, 4), 0);
        assert_eq!(multiplicity_lemma(7, 1), 4);
        assert_eq!(multiplicity_lemma(11, 2), 4);
    }

    #[test]
    fn explicit_spot_values() {
        assert_eq!(multiplicity_explicit(3, 1), 2);
        assert_eq!(multiplicity_explicit(4, 1), 2);
        assert_eq!(multiplicity_explicit(11, 2), 4);
        for n in [2u64, 3, 7, 16, 100, 1023, 1024] {
            assert_eq!(multiplicity_explicit(n, n), 1, "#_n S(n) at n={n}");
        }
    }

    #[test]
    fn three_computations_agree() {
        for n in 1..=128u64 {
            let s = s_multiset(n);
            for k in 1..=n {
                let from_recurrence = s.multiplicity(k);
                assert_eq!(
                    multiplicity_lemma(n, k),
                    from_recurrence,
                    "lemma vs recurrence at n={n}, k={k}"
                );
                assert_eq!(
                    multiplicity_explicit(n, k),
                    from_recurrence,
                    "explicit vs recurrence at n={n}, k={k}"
                );
            }
        }
    }

    #[test]
    fn mass_conservation() {
        for n in 0..=512u64 {
            assert_eq!(s_multiset(n).total(), u128::from(n), "|S({n})|");
        }
    }

    #[test]
    fn support_is_sparse_and_bounded() {
        for n in 1..=256u64 {
            let s = s_multiset(n);
            assert_eq!(s.multiplicity(n), 1);
            for (k, count) in s.iter() {
                assert!(k <= n);
                assert!(count >= 1);
                // Every present length is ⌊n/2^ℓ⌋ or ⌊n/2^ℓ⌋ − 1 for some ℓ.
                let witnessed = (0..=n.ilog2())
                    .any(|l| k == n >> l || k + 1 == n >> l);
                assert!(witnessed, "length {k} in S({n}) outside the predicted support");
            }
            assert!(s.distinct() <= 2 * (n.ilog2() as usize + 1));
        }
    }

    #[test]
    fn memoization_is_transparent() {
        let a = s_multiset(99);
        let b = s_multiset(99);
        assert_eq!(*a, *b);
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn concurrent_queries_agree() {
        let expected = (*s_multiset(300)).clone();
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| (*s_multiset(300)).clone()))
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), expected);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // The two closed forms are O(log n), so they can be checked far
            // beyond where materializing S(n) stays reasonable.
            #[test]
            fn lemma_matches_explicit_far_out(n in 1u64..=1_000_000, k in 1u64..=1_000_000) {
                prop_assert_eq!(multiplicity_lemma(n, k), multiplicity_explicit(n, k));
            }

            #[test]
            fn recurrence_matches_lemma(n in 1u64..=400, k in 1u64..=400) {
                prop_assert_eq!(s_multiset(n).multiplicity(k), multiplicity_lemma(n, k));
            }
        }
    }
}
