use std::io;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors produced by the counting engines, the simulator and b-file I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A multiset multiplicity would exceed its 64-bit counter.
    #[error("multiplicity overflow for length {length}")]
    MultiplicityOverflow { length: u64 },

    /// Sequence counts are indexed from 1; there is no term at n = 0.
    #[error("sequence terms are defined for n >= 1")]
    TermIndexZero,

    /// Distance to the nearest occupied payphone is undefined in an empty booth.
    #[error("no payphone is occupied yet")]
    EmptyBooth,

    /// Every payphone is occupied; no choice can be made.
    #[error("no payphone is available")]
    BoothFull,

    /// Attempt to seat a person at an occupied payphone.
    #[error("payphone {pos} is already occupied")]
    PositionOccupied { pos: u32 },

    /// Position outside 1..=n.
    #[error("payphone {pos} is out of range 1..={n}")]
    PositionOutOfRange { pos: u32, n: u32 },

    /// Exhaustive enumeration refused: the search space grows super-exponentially.
    #[error("refusing to enumerate n = {n} exhaustively (limit {limit}); raise the limit explicitly if you really want this")]
    EnumerationLimit { n: u32, limit: u32 },

    /// Rule name outside {p1..p5, c1, c2}.
    #[error("unknown rule {0:?} (expected one of p1, p2, p3, p4, p5, c1, c2)")]
    UnknownRule(String),

    /// An assignment vector that is not a bijection of 1..=n.
    #[error("assignment is not a permutation of 1..=n")]
    NotAPermutation,

    /// Malformed OEIS identifier.
    #[error("invalid OEIS id {0:?}: expected 'A' followed by six digits")]
    InvalidOeisId(String),

    /// Malformed b-file content.
    #[error("b-file format error at line {line}: {reason}")]
    BfileFormat { line: usize, reason: String },

    /// A `SequenceTerms` value must hold at least one term.
    #[error("a term list must not be empty")]
    EmptyTerms,

    /// Term indices must be consecutive.
    #[error("non-consecutive term indices: expected {expected}, got {got}")]
    NonConsecutiveIndex { expected: i64, got: i64 },

    /// The two term lists share no index.
    #[error("term ranges {a:?} and {b:?} do not overlap")]
    DisjointRanges { a: (i64, i64), b: (i64, i64) },

    /// The requested b-file does not exist on the server.
    #[error("b-file not found (HTTP 404) at {url}")]
    BfileNotFound { url: String },

    /// Any other non-success HTTP status.
    #[error("HTTP {status} fetching {url}")]
    HttpStatus { url: String, status: u16 },

    /// Connection-level fetch failure after all retries.
    #[error("failed to fetch {url}: {message}")]
    FetchTransport { url: String, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}
