//! The seating process itself: booth states, preference rules, and
//! exhaustive enumeration of every reachable payphone permutation.
//!
//! This module is the brute-force oracle for the counting formulas in
//! [`crate::counting`]. It deliberately shares no machinery with the
//! interval-multiset engine: rules are evaluated directly on explicit booth
//! states, so an agreement between [`count_by_enumeration`] and
//! [`crate::counting::count_rule`] actually means something.
//!
//! Positions are 1-based throughout, matching how one would number a row of
//! payphones out loud.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::counting::{Count, RuleKind};
use crate::error::{Error, Result};

/// Payphones along a wall, or around a circular kiosk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    Row,
    Circle,
}

/// How a run of available payphones is bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    /// No occupied payphone on either side; only the empty booth has one.
    Open,
    /// Occupied on exactly one side, the other side being the end of the
    /// row. Rows only.
    SemiClosed,
    /// Occupied on both sides. On a circle every interval of a nonempty
    /// booth is closed, both flanks possibly being the same person.
    Closed,
}

/// A maximal run of consecutive available payphones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    start: u32,
    length: u32,
    closure: Closure,
}

impl Interval {
    /// First position of the run (1-based). On a circle the run may wrap
    /// past the highest position.
    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    /// Length used when intervals compete: a closed interval counts as is; a
    /// semi-closed interval of length `ℓ` counts as `2ℓ−1`, since it behaves
    /// like the visible half of a closed interval mirrored at its open end.
    /// For a (necessarily empty-booth) open interval the value is nominal —
    /// no comparison ever happens before the first person sits — and is
    /// taken as `2ℓ`, mirroring at both ends.
    pub fn full_length(&self) -> u32 {
        match self.closure {
            Closure::Closed => self.length,
            Closure::SemiClosed => 2 * self.length - 1,
            Closure::Open => 2 * self.length,
        }
    }

    /// The positions of the run in order, wrapping modulo `n` on a circle.
    pub fn positions(&self, n: u32) -> Vec<u32> {
        (0..self.length)
            .map(|i| (self.start - 1 + i) % n + 1)
            .collect()
    }

    /// The row-end position of a semi-closed interval — the seat its first
    /// occupant always takes. `None` for other closures.
    pub fn open_end(&self) -> Option<u32> {
        match self.closure {
            Closure::SemiClosed if self.start == 1 => Some(1),
            Closure::SemiClosed => Some(self.start + self.length - 1),
            _ => None,
        }
    }
}

/// An immutable snapshot of the booth: who sits where, and who arrives next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoothState {
    layout: Layout,
    slots: Vec<Option<u32>>,
    next_person: u32,
}

impl BoothState {
    /// An empty booth of `n ≥ 1` payphones awaiting person 1.
    pub fn new(layout: Layout, n: u32) -> Self {
        assert!(n >= 1, "a booth has at least one payphone");
        Self {
            layout,
            slots: vec![None; n as usize],
            next_person: 1,
        }
    }

    pub fn n(&self) -> u32 {
        self.slots.len() as u32
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    /// Who occupies `pos` (1-based), if anyone.
    pub fn occupant(&self, pos: u32) -> Option<u32> {
        assert!((1..=self.n()).contains(&pos), "position out of range");
        self.slots[pos as usize - 1]
    }

    /// How many people are seated so far.
    pub fn seated(&self) -> u32 {
        self.next_person - 1
    }

    pub fn is_empty(&self) -> bool {
        self.next_person == 1
    }

    pub fn is_full(&self) -> bool {
        self.next_person == self.n() + 1
    }

    fn occupied(&self, idx: usize) -> bool {
        self.slots[idx].is_some()
    }

    /// All maximal runs of available payphones, classified by closure, in
    /// ascending order of first position (circular runs start after the
    /// anchor occupant).
    pub fn intervals(&self) -> Vec<Interval> {
        let n = self.n() as usize;
        if self.is_empty() {
            return vec![Interval {
                start: 1,
                length: self.n(),
                closure: Closure::Open,
            }];
        }
        let mut out = Vec::new();
        match self.layout {
            Layout::Row => {
                let mut i = 0;
                while i < n {
                    if self.occupied(i) {
                        i += 1;
                        continue;
                    }
                    let run_start = i;
                    while i < n && !self.occupied(i) {
                        i += 1;
                    }
                    let closure = match (run_start > 0, i < n) {
                        (true, true) => Closure::Closed,
                        (false, false) => Closure::Open, // unreachable: booth nonempty
                        _ => Closure::SemiClosed,
                    };
                    out.push(Interval {
                        start: run_start as u32 + 1,
                        length: (i - run_start) as u32,
                        closure,
                    });
                }
            }
            Layout::Circle => {
                // Walk the circle starting just past an occupant, so no run
                // is split by the wrap point; every run is closed. The final
                // offset lands back on the (occupied) anchor, closing any
                // run still open.
                let anchor = (0..n).find(|&i| self.occupied(i)).unwrap();
                let mut run_start_off: Option<usize> = None;
                for off in 1..=n {
                    if self.occupied((anchor + off) % n) {
                        if let Some(s) = run_start_off.take() {
                            out.push(Interval {
                                start: ((anchor + s) % n) as u32 + 1,
                                length: (off - s) as u32,
                                closure: Closure::Closed,
                            });
                        }
                    } else if run_start_off.is_none() {
                        run_start_off = Some(off);
                    }
                }
                out.sort_by_key(|iv| iv.start);
            }
        }
        out
    }

    /// Distance from `pos` to the nearest occupied payphone: `|pos − q|`
    /// minimized over occupants `q` on a row, the shorter way around on a
    /// circle. Errs on an empty booth — the first person has no distance.
    pub fn nearest_distance(&self, pos: u32) -> Result<u32> {
        assert!((1..=self.n()).contains(&pos), "position out of range");
        if self.is_empty() {
            return Err(Error::EmptyBooth);
        }
        let n = self.n();
        let mut best = u32::MAX;
        for (idx, slot) in self.slots.iter().enumerate() {
            if slot.is_none() {
                continue;
            }
            let q = idx as u32 + 1;
            let direct = pos.abs_diff(q);
            let d = match self.layout {
                Layout::Row => direct,
                Layout::Circle => direct.min(n - direct),
            };
            best = best.min(d);
        }
        Ok(best)
    }

    /// Count of occupied immediate neighbours of `pos` (0, 1 or 2).
    fn occupied_neighbours(&self, pos: u32) -> u32 {
        let n = self.n();
        if n == 1 {
            return 0;
        }
        let mut neighbours = Vec::with_capacity(2);
        match self.layout {
            Layout::Row => {
                if pos > 1 {
                    neighbours.push(pos - 1);
                }
                if pos < n {
                    neighbours.push(pos + 1);
                }
            }
            Layout::Circle => {
                neighbours.push((pos + n - 2) % n + 1);
                if n > 2 {
                    neighbours.push(pos % n + 1);
                }
            }
        }
        neighbours
            .into_iter()
            .filter(|&q| self.occupant(q).is_some())
            .count() as u32
    }

    /// True when `pos` is the open end of a semi-closed interval of length 1
    /// — a free payphone at the very end of the row whose single inward
    /// neighbour is taken.
    fn is_end_of_unit_semiclosed(&self, pos: u32) -> bool {
        let n = self.n();
        if self.layout != Layout::Row || n < 2 || self.occupant(pos).is_some() {
            return false;
        }
        (pos == 1 && self.occupant(2).is_some())
            || (pos == n && self.occupant(n - 1).is_some())
    }

    /// Available positions maximizing [`Self::nearest_distance`], with the
    /// achieved maximum.
    fn max_distance_choices(&self) -> (Vec<u32>, u32) {
        let mut best = 0;
        let mut choices = Vec::new();
        for pos in 1..=self.n() {
            if self.occupant(pos).is_some() {
                continue;
            }
            let d = self
                .nearest_distance(pos)
                .expect("caller ensures the booth is nonempty");
            match d.cmp(&best) {
                std::cmp::Ordering::Greater => {
                    best = d;
                    choices = vec![pos];
                }
                std::cmp::Ordering::Equal => choices.push(pos),
                std::cmp::Ordering::Less => {}
            }
        }
        (choices, best)
    }

    /// Best seats of every interval of maximal full length — the middle(s)
    /// of a closed interval, the open end of a semi-closed one — with the
    /// maximal full length itself.
    fn longest_interval_choices(&self) -> (Vec<u32>, u32) {
        let intervals = self.intervals();
        let best_full = intervals
            .iter()
            .map(Interval::full_length)
            .max()
            .expect("caller ensures the booth is not full");
        let mut choices = BTreeSet::new();
        for interval in intervals {
            if interval.full_length() != best_full {
                continue;
            }
            match interval.closure() {
                Closure::Closed => {
                    let ps = interval.positions(self.n());
                    let m = ps.len();
                    choices.insert(ps[(m - 1) / 2]);
                    if m % 2 == 0 {
                        choices.insert(ps[m / 2]);
                    }
                }
                Closure::SemiClosed => {
                    choices.insert(interval.open_end().expect("semi-closed has an open end"));
                }
                Closure::Open => unreachable!("open intervals only occur in an empty booth"),
            }
        }
        (choices.into_iter().collect(), best_full)
    }

    /// Every payphone the next person may take under `rule`, ascending.
    ///
    /// An empty booth allows all `n` positions — the first person has no
    /// preference under any rule. Panics if the rule's layout (row for
    /// P-rules, circle for C-rules) does not match the state's.
    pub fn allowed_choices(&self, rule: RuleKind) -> Result<Vec<u32>> {
        assert_eq!(
            rule.is_circular(),
            self.layout == Layout::Circle,
            "rule {rule} does not apply to a {:?} layout",
            self.layout
        );
        if self.is_full() {
            return Err(Error::BoothFull);
        }
        if self.is_empty() {
            return Ok((1..=self.n()).collect());
        }
        let choices = match rule {
            RuleKind::P1 | RuleKind::C1 => self.max_distance_choices().0,
            RuleKind::P2 | RuleKind::C2 => self.longest_interval_choices().0,
            // At distance 1 an end seat (next to one person, with the wall
            // on the other side) beats any other; otherwise plain P1.
            RuleKind::P3 => {
                let (base, best) = self.max_distance_choices();
                let ends: Vec<u32> = base
                    .iter()
                    .copied()
                    .filter(|&p| self.is_end_of_unit_semiclosed(p))
                    .collect();
                if best == 1 && !ends.is_empty() {
                    ends
                } else {
                    base
                }
            }
            // At distance 1 a seat with a single occupied neighbour beats a
            // sandwiched one; otherwise plain P1.
            RuleKind::P5 => {
                let (base, best) = self.max_distance_choices();
                let single: Vec<u32> = base
                    .iter()
                    .copied()
                    .filter(|&p| self.occupied_neighbours(p) == 1)
                    .collect();
                if best == 1 && !single.is_empty() {
                    single
                } else {
                    base
                }
            }
            // When only unit intervals are left, an end seat beats a
            // sandwiched one; otherwise plain P2.
            RuleKind::P4 => {
                let (base, best_full) = self.longest_interval_choices();
                let ends: Vec<u32> = base
                    .iter()
                    .copied()
                    .filter(|&p| self.is_end_of_unit_semiclosed(p))
                    .collect();
                if best_full == 1 && !ends.is_empty() {
                    ends
                } else {
                    base
                }
            }
        };
        Ok(choices)
    }

    /// Seats the next person at `pos`, returning the new state and leaving
    /// `self` untouched.
    pub fn step(&self, pos: u32) -> Result<BoothState> {
        if !(1..=self.n()).contains(&pos) {
            return Err(Error::PositionOutOfRange { pos, n: self.n() });
        }
        if self.slots[pos as usize - 1].is_some() {
            return Err(Error::PositionOccupied { pos });
        }
        let mut next = self.clone();
        next.slots[pos as usize - 1] = Some(self.next_person);
        next.next_person += 1;
        Ok(next)
    }

    /// The permutation recorded by a full booth: position → person.
    pub fn permutation(&self) -> Option<PayphonePermutation> {
        if !self.is_full() {
            return None;
        }
        let assignment = self.slots.iter().map(|s| s.unwrap()).collect();
        Some(PayphonePermutation::new(assignment).expect("a full booth seats each person once"))
    }
}

/// The outcome of a complete seating: entry `j` is the person who ended up
/// at payphone `j`. Always a bijection of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PayphonePermutation {
    assignment: Vec<u32>,
}

impl PayphonePermutation {
    /// Validates that `assignment` is a permutation of `1..=len` (nonempty).
    pub fn new(assignment: Vec<u32>) -> Result<Self> {
        let n = assignment.len() as u32;
        if n == 0 {
            return Err(Error::NotAPermutation);
        }
        let mut seen = vec![false; assignment.len()];
        for &person in &assignment {
            if !(1..=n).contains(&person) || seen[person as usize - 1] {
                return Err(Error::NotAPermutation);
            }
            seen[person as usize - 1] = true;
        }
        Ok(Self { assignment })
    }

    pub fn n(&self) -> u32 {
        self.assignment.len() as u32
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// The person at payphone `pos` (1-based).
    pub fn person_at(&self, pos: u32) -> u32 {
        self.assignment[pos as usize - 1]
    }
}

impl fmt::Display for PayphonePermutation {
    /// Comma-separated assignment: `3,5,1,4,6,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, person) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{person}")?;
        }
        Ok(())
    }
}

impl FromStr for PayphonePermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let assignment = s
            .split(',')
            .map(|part| part.trim().parse::<u32>().map_err(|_| Error::NotAPermutation))
            .collect::<Result<Vec<u32>>>()?;
        Self::new(assignment)
    }
}

/// Largest `n` [`enumerate`] accepts without an explicit limit. The counts
/// grow superexponentially; 12 keeps the worst circular case near a million
/// outcomes.
pub const DEFAULT_ENUMERATION_LIMIT: u32 = 12;

/// Every payphone permutation reachable under `rule`, sorted
/// lexicographically. Refuses `n` above [`DEFAULT_ENUMERATION_LIMIT`]; use
/// [`enumerate_with_limit`] to go (knowingly) further.
pub fn enumerate(rule: RuleKind, n: u32) -> Result<BTreeSet<PayphonePermutation>> {
    enumerate_with_limit(rule, n, DEFAULT_ENUMERATION_LIMIT)
}

/// [`enumerate`] with a caller-chosen refusal threshold.
pub fn enumerate_with_limit(
    rule: RuleKind,
    n: u32,
    limit: u32,
) -> Result<BTreeSet<PayphonePermutation>> {
    assert!(n >= 1, "a booth has at least one payphone");
    if n > limit {
        return Err(Error::EnumerationLimit { n, limit });
    }
    let layout = if rule.is_circular() {
        Layout::Circle
    } else {
        Layout::Row
    };
    let mut reached = BTreeSet::new();
    let mut pending = vec![BoothState::new(layout, n)];
    while let Some(state) = pending.pop() {
        if state.is_full() {
            reached.insert(state.permutation().expect("state is full"));
            continue;
        }
        for pos in state.allowed_choices(rule)? {
            pending.push(state.step(pos)?);
        }
    }
    Ok(reached)
}

/// Cardinality of [`enumerate`]\(rule, n\) — the brute-force counterpart of
/// [`crate::counting::count_rule`].
pub fn count_by_enumeration(rule: RuleKind, n: u32) -> Result<Count> {
    Ok(Count::from(enumerate(rule, n)?.len()))
}

/// One random complete seating under `rule`: at every arrival a uniformly
/// random allowed payphone is taken. Returns all `n + 1` states from empty
/// to full. Deterministic in `seed`.
pub fn sample_run(rule: RuleKind, n: u32, seed: u64) -> Result<Vec<BoothState>> {
    let layout = if rule.is_circular() {
        Layout::Circle
    } else {
        Layout::Row
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut states = vec![BoothState::new(layout, n)];
    while !states.last().unwrap().is_full() {
        let state = states.last().unwrap();
        let choices = state.allowed_choices(rule)?;
        let pos = choices[rng.random_range(0..choices.len())];
        states.push(state.step(pos)?);
    }
    Ok(states)
}
