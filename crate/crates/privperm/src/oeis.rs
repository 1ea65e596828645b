//! OEIS b-file support: parse, emit, compare, and fetch.
//!
//! Each of the seven sequences this crate computes is published in the OEIS,
//! so every run can be checked against the recorded terms. A b-file is the
//! OEIS's plain-text term listing — one `index value` pair per line, `#`
//! starting a comment — served at `https://oeis.org/Axxxxxx/bxxxxxx.txt`.
//!
//! Parsing tolerates CRLF line endings and stray whitespace around the two
//! tokens, and nothing else; emission is canonical (`index value\n`), so
//! `parse ∘ emit` is the identity and `emit ∘ parse` canonicalizes.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::counting::{Count, RuleKind};
use crate::error::{Error, Result};

/// Where b-files live unless overridden.
pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

/// Environment variable consulted by the CLI for a replacement base URL
/// (e.g. a local mirror).
pub const BASE_URL_ENV: &str = "PRIVPERM_OEIS_BASE_URL";

/// A validated OEIS sequence identifier: `A` followed by six digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OeisId(String);

impl OeisId {
    pub fn new(id: &str) -> Result<Self> {
        let bytes = id.as_bytes();
        if bytes.len() == 7 && bytes[0] == b'A' && bytes[1..].iter().all(u8::is_ascii_digit) {
            Ok(Self(id.to_string()))
        } else {
            Err(Error::InvalidOeisId(id.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The six digits without the `A`.
    pub fn digits(&self) -> &str {
        &self.0[1..]
    }

    /// Conventional b-file name, `b358056.txt` for `A358056`.
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", self.digits())
    }

    /// Full b-file URL under `base_url` (trailing slashes ignored).
    pub fn bfile_url(&self, base_url: &str) -> String {
        format!(
            "{}/{}/{}",
            base_url.trim_end_matches('/'),
            self.0,
            self.bfile_name()
        )
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for OeisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s)
    }
}

/// The OEIS identifier of each rule's counting sequence.
pub fn sequence_id(rule: RuleKind) -> OeisId {
    let id = match rule {
        RuleKind::P1 => "A358056",
        RuleKind::P2 => "A095236",
        RuleKind::P3 => "A361295",
        RuleKind::P4 => "A095912",
        RuleKind::P5 => "A363785",
        RuleKind::C1 => "A361296",
        RuleKind::C2 => "A095239",
    };
    OeisId::new(id).expect("the built-in ids are well-formed")
}

/// A contiguous run of terms of one sequence: consecutive indices, each with
/// its exact value. Never empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTerms {
    id: OeisId,
    terms: Vec<(i64, Count)>,
}

impl SequenceTerms {
    pub fn new(id: OeisId, terms: Vec<(i64, Count)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyTerms);
        }
        for pair in terms.windows(2) {
            let expected = pair[0].0 + 1;
            if pair[1].0 != expected {
                return Err(Error::NonConsecutiveIndex {
                    expected,
                    got: pair[1].0,
                });
            }
        }
        Ok(Self { id, terms })
    }

    /// Terms from a plain list of values starting at index `offset`.
    pub fn from_values(id: OeisId, offset: i64, values: Vec<Count>) -> Result<Self> {
        let terms = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| (offset + i as i64, v))
            .collect();
        Self::new(id, terms)
    }

    pub fn id(&self) -> &OeisId {
        &self.id
    }

    /// Index of the first term.
    pub fn offset(&self) -> i64 {
        self.terms[0].0
    }

    /// Index of the last term.
    pub fn last_index(&self) -> i64 {
        self.terms[self.terms.len() - 1].0
    }

    /// `(first, last)` index, inclusive.
    pub fn range(&self) -> (i64, i64) {
        (self.offset(), self.last_index())
    }

    pub fn terms(&self) -> &[(i64, Count)] {
        &self.terms
    }

    /// The value at `index`, if within range.
    pub fn value_at(&self, index: i64) -> Option<&Count> {
        let pos = index.checked_sub(self.offset())?;
        usize::try_from(pos).ok().and_then(|p| self.terms.get(p)).map(|(_, v)| v)
    }
}

/// Parses b-file text into terms for sequence `id`.
///
/// Comment lines (starting `#`) and blank lines are skipped but still
/// counted for error reporting. Data lines must hold exactly an integer
/// index and a nonnegative integer value, with consecutive indices.
pub fn parse_bfile(id: OeisId, text: &str) -> Result<SequenceTerms> {
    let mut terms: Vec<(i64, Count)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim_end();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let (Some(index_tok), Some(value_tok), None) =
            (tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(Error::BfileFormat {
                line,
                reason: format!("expected 'index value', got {content:?}"),
            });
        };
        let index: i64 = index_tok.parse().map_err(|_| Error::BfileFormat {
            line,
            reason: format!("malformed index {index_tok:?}"),
        })?;
        let value: Count = value_tok.parse().map_err(|_| Error::BfileFormat {
            line,
            reason: format!("value {value_tok:?} is not a nonnegative integer"),
        })?;
        if let Some(&(prev, _)) = terms.last() {
            if index != prev + 1 {
                return Err(Error::BfileFormat {
                    line,
                    reason: format!("expected index {}, got {index}", prev + 1),
                });
            }
        }
        terms.push((index, value));
    }
    SequenceTerms::new(id, terms)
}

/// Canonical b-file text: `index value\n` per term, nothing else.
pub fn emit_bfile(terms: &SequenceTerms) -> String {
    let mut out = String::new();
    for (index, value) in terms.terms() {
        out.push_str(&format!("{index} {value}\n"));
    }
    out
}

/// Outcome of comparing two term runs over their shared index range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    /// Inclusive index range both runs cover.
    pub overlap: (i64, i64),
    /// Number of indices compared (the size of the overlap).
    pub compared: usize,
    /// How many of them agreed.
    pub matched: usize,
    /// Lowest disagreeing index with both values (computed, reference).
    pub first_mismatch: Option<(i64, Count, Count)>,
}

impl ComparisonReport {
    pub fn all_match(&self) -> bool {
        self.matched == self.compared
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.overlap;
        match &self.first_mismatch {
            None => write!(f, "all {} terms match on {lo}..={hi}", self.compared),
            Some((index, computed, reference)) => write!(
                f,
                "mismatch at n={index}: computed {computed}, reference {reference} \
                 ({} of {} matched on {lo}..={hi})",
                self.matched, self.compared
            ),
        }
    }
}

/// Compares `computed` against `reference` wherever their index ranges
/// overlap. Errs if they share no index at all.
pub fn compare_terms(
    computed: &SequenceTerms,
    reference: &SequenceTerms,
) -> Result<ComparisonReport> {
    let lo = computed.offset().max(reference.offset());
    let hi = computed.last_index().min(reference.last_index());
    if lo > hi {
        return Err(Error::DisjointRanges {
            a: computed.range(),
            b: reference.range(),
        });
    }
    let mut matched = 0;
    let mut first_mismatch = None;
    for index in lo..=hi {
        let c = computed.value_at(index).expect("index within overlap");
        let r = reference.value_at(index).expect("index within overlap");
        if c == r {
            matched += 1;
        } else if first_mismatch.is_none() {
            first_mismatch = Some((index, c.clone(), r.clone()));
        }
    }
    Ok(ComparisonReport {
        overlap: (lo, hi),
        compared: (hi - lo + 1) as usize,
        matched,
        first_mismatch,
    })
}

/// Downloads the b-file for `id` from `base_url` and returns its raw text.
///
/// A 404 is reported as not-found immediately; connection failures and
/// 5xx responses are retried up to `retries` additional attempts; any other
/// non-success status fails at once.
pub fn fetch_bfile(id: &OeisId, base_url: &str, retries: u32) -> Result<String> {
    let url = id.bfile_url(base_url);
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(Duration::from_secs(30)))
        .build()
        .into();
    let mut last_error = None;
    for _attempt in 0..=retries {
        match agent.get(&url).call() {
            Ok(mut response) => {
                return response.body_mut().read_to_string().map_err(|e| {
                    Error::FetchTransport {
                        url: url.clone(),
                        message: e.to_string(),
                    }
                });
            }
            Err(ureq::Error::StatusCode(404)) => {
                return Err(Error::BfileNotFound { url });
            }
            Err(ureq::Error::StatusCode(status)) if (500..600).contains(&status) => {
                last_error = Some(Error::HttpStatus {
                    url: url.clone(),
                    status,
                });
            }
            Err(ureq::Error::StatusCode(status)) => {
                return Err(Error::HttpStatus { url, status });
            }
            Err(other) => {
                last_error = Some(Error::FetchTransport {
                    url: url.clone(),
                    message: other.to_string(),
                });
            }
        }
    }
    Err(last_error.expect("at least one attempt was made"))
}
