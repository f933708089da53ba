//! m-Dyck paths in their sequence encoding.
//!
//! A path of height `n` with slope `m` is the sequence `(a_1, ..., a_n)` where
//! `a_i` is the number of right-steps taken before the `i`-th up-step. Valid
//! sequences are nondecreasing and satisfy `a_i <= m(i-1)`, so `a_1 = 0`.
//! Positions are 1-based in every public function; storage is a plain `Vec`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("empty sequence")]
    Empty,
    #[error("slope m must be at least 1")]
    ZeroSlope,
    #[error("height n must be at least 1")]
    ZeroHeight,
    #[error("{0}")]
    Invalid(Violation),
    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("cannot parse sequence literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
    #[error("step word is not an m-Dyck path: {0}")]
    BadStepWord(String),
    #[error("refusing to enumerate {count} paths (cap {cap})")]
    CapExceeded { count: BigUint, cap: u64 },
}

/// First failing condition of a candidate sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `a_{i-1} > a_i`.
    Decreasing { position: usize },
    /// `a_i > m(i-1)`.
    AboveBound { position: usize, value: u32, bound: u64 },
}

impl Violation {
    pub fn position(&self) -> usize {
        match *self {
            Violation::Decreasing { position } | Violation::AboveBound { position, .. } => position,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Decreasing { position } => {
                write!(f, "violates a_(i-1) ≤ a_i at i={position}")
            }
            Violation::AboveBound { position, value, bound } => {
                write!(f, "violates a_i ≤ m(i−1) at i={position} ({value} > {bound})")
            }
        }
    }
}

/// Slope `m` and height `n` of a family of paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    m: u32,
    n: usize,
}

impl Params {
    pub fn new(m: u32, n: usize) -> Result<Self, PathError> {
        if m == 0 {
            return Err(PathError::ZeroSlope);
        }
        if n == 0 {
            return Err(PathError::ZeroHeight);
        }
        Ok(Params { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={}", self.m, self.n)
    }
}

/// Upper bound `m(i-1)` for 1-based position `i`.
#[inline]
pub(crate) fn bound(m: u32, position: usize) -> u64 {
    m as u64 * (position as u64 - 1)
}

/// A validated m-Dyck path sequence. Ordering is lexicographic on the values,
/// which is the canonical element order used for IDs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathSeq(Vec<u32>);

impl PathSeq {
    /// Validates `values` against slope `m`.
    pub fn new(values: Vec<u32>, m: u32) -> Result<Self, PathError> {
        validate_sequence(&values, m)?;
        Ok(PathSeq(values))
    }

    pub(crate) fn from_raw(values: Vec<u32>) -> Self {
        PathSeq(values)
    }

    /// `(0, m, 2m, ..., (n-1)m)`, the bottom of the lattice.
    pub fn bottom(params: Params) -> Self {
        PathSeq((1..=params.n).map(|i| bound(params.m, i) as u32).collect())
    }

    /// `(0, 0, ..., 0)`, the top of the lattice.
    pub fn top(params: Params) -> Self {
        PathSeq(vec![0; params.n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at 1-based `position`. Panics when out of range.
    pub fn at(&self, position: usize) -> u32 {
        assert!(
            position >= 1 && position <= self.0.len(),
            "position {position} out of range 1..={}",
            self.0.len()
        );
        self.0[position - 1]
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&v| v as u64).sum()
    }

    /// Digit-string shorthand (`024`), available when every value is at most 9.
    pub fn digits(&self) -> Option<String> {
        self.0
            .iter()
            .map(|&v| char::from_digit(v, 10))
            .collect::<Option<String>>()
    }
}

impl fmt::Display for PathSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses a sequence literal: `0,2,4`, or the digit shorthand `024`.
///
/// A literal without commas is read digit by digit, so `10` means `(1, 0)`.
/// Values above 9 need the comma form.
pub fn parse_sequence_literal(literal: &str) -> Result<Vec<u32>, PathError> {
    let trimmed = literal.trim();
    let parse_err = |reason: &str| PathError::Parse {
        literal: literal.to_string(),
        reason: reason.to_string(),
    };
    if trimmed.is_empty() {
        return Err(PathError::Empty);
    }
    if trimmed.contains(',') {
        trimmed
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| parse_err(&format!("{part:?}: {e}")))
            })
            .collect()
    } else if trimmed.chars().all(|c| c.is_ascii_digit()) {
        Ok(trimmed.chars().map(|c| c.to_digit(10).unwrap()).collect())
    } else {
        Err(parse_err("expected comma-separated non-negative integers"))
    }
}

impl FromStr for PathSeq {
    type Err = PathError;

    /// Parses without checking the slope bound; use [`PathSeq::new`] to validate.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequence_literal(s).map(PathSeq)
    }
}

/// Checks nondecreasing order and `a_i <= m(i-1)`, reporting the smallest
/// failing position.
pub fn validate_sequence(seq: &[u32], m: u32) -> Result<(), PathError> {
    if seq.is_empty() {
        return Err(PathError::Empty);
    }
    if m == 0 {
        return Err(PathError::ZeroSlope);
    }
    for (idx, &value) in seq.iter().enumerate() {
        let position = idx + 1;
        if idx > 0 && seq[idx - 1] > value {
            return Err(PathError::Invalid(Violation::Decreasing { position }));
        }
        let limit = bound(m, position);
        if value as u64 > limit {
            return Err(PathError::Invalid(Violation::AboveBound {
                position,
                value,
                bound: limit,
            }));
        }
    }
    Ok(())
}

/// `binom((m+1)n, n) / (mn+1)`, exactly.
pub fn fuss_catalan(m: u32, n: u64) -> BigUint {
    let total = (m as u64 + 1) * n;
    let mut binom = BigUint::from(1u32);
    // binom(total, n) = prod_{i=1..n} (total - n + i) / i; each partial product is an integer.
    for i in 1..=n {
        binom *= total - n + i;
        binom /= i;
    }
    let denom = BigUint::from(m as u64 * n + 1);
    let rem = &binom % &denom;
    assert!(rem.is_zero(), "Fuss-Catalan division left remainder {rem}");
    binom / denom
}

/// Streams every valid sequence for `params` in ascending lexicographic order.
#[derive(Debug, Clone)]
pub struct PathIter {
    m: u32,
    current: Option<Vec<u32>>,
}

impl PathIter {
    pub fn new(params: Params) -> Self {
        PathIter {
            m: params.m,
            current: Some(vec![0; params.n]),
        }
    }
}

impl Iterator for PathIter {
    type Item = PathSeq;

    fn next(&mut self) -> Option<PathSeq> {
        let cur = self.current.take()?;
        let out = PathSeq(cur.clone());
        let mut next = cur;
        // Rightmost position that can still grow; everything after it resets to
        // the smallest nondecreasing continuation.
        let grow = (1..next.len())
            .rev()
            .find(|&idx| (next[idx] as u64) < bound(self.m, idx + 1));
        if let Some(idx) = grow {
            next[idx] += 1;
            let v = next[idx];
            next[idx + 1..].iter_mut().for_each(|x| *x = v);
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All paths for `(m, n)`, refusing when the count exceeds `cap`.
pub fn enumerate_paths(params: Params, cap: u64) -> Result<Vec<PathSeq>, PathError> {
    let count = fuss_catalan(params.m, params.n as u64);
    match count.to_u64() {
        Some(c) if c <= cap => {
            let mut out = Vec::with_capacity(c as usize);
            out.extend(PathIter::new(params));
            Ok(out)
        }
        _ => Err(PathError::CapExceeded { count, cap }),
    }
}

/// End position `k` of the primitive subsequence starting at 1-based `i`:
/// the largest `k >= i` with `a_j - a_i < m(j - i)` for all `i < j <= k`.
pub fn primitive_subsequence(seq: &PathSeq, m: u32, i: usize) -> Result<usize, PathError> {
    let len = seq.len();
    if i == 0 || i > len {
        return Err(PathError::PositionOutOfRange { position: i, len });
    }
    Ok(primitive_end(seq.values(), m, i - 1) + 1)
}

/// 0-based core of [`primitive_subsequence`].
pub(crate) fn primitive_end(values: &[u32], m: u32, start: usize) -> usize {
    let base = values[start] as u64;
    let mut end = start;
    for (j, &v) in values.iter().enumerate().skip(start + 1) {
        let rise = v as u64 - base;
        if rise < m as u64 * (j - start) as u64 {
            end = j;
        } else {
            break;
        }
    }
    end
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Unit vertical step.
    Up,
    /// Unit horizontal step.
    Right,
}

/// A path written as a word over `{U, R}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepWord(Vec<Step>);

impl StepWord {
    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Recovers the sequence: `a_i` counts the `R`s before the `i`-th `U`.
    pub fn decode(&self, m: u32) -> Result<PathSeq, PathError> {
        let mut rights = 0u32;
        let mut values = Vec::new();
        for step in &self.0 {
            match step {
                Step::Up => values.push(rights),
                Step::Right => rights += 1,
            }
        }
        if values.is_empty() {
            return Err(PathError::BadStepWord("no up-steps".into()));
        }
        let expected = m as u64 * values.len() as u64;
        if rights as u64 != expected {
            return Err(PathError::BadStepWord(format!(
                "{rights} right-steps, expected {expected}"
            )));
        }
        PathSeq::new(values, m)
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.0 {
            f.write_str(match step {
                Step::Up => "U",
                Step::Right => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for StepWord {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'R' | 'r' => Ok(Step::Right),
                other => Err(PathError::BadStepWord(format!("unexpected symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(StepWord)
    }
}

/// Writes the path as steps: `a_i` right-steps precede the `i`-th up-step and
/// `mn - a_n` trailing right-steps close the path at `(mn, n)`.
pub fn to_step_word(seq: &PathSeq, m: u32) -> StepWord {
    let total = m as u64 * seq.len() as u64;
    let mut steps = Vec::with_capacity(seq.len() + total as usize);
    let mut rights = 0u64;
    for &v in seq.values() {
        while rights < v as u64 {
            steps.push(Step::Right);
            rights += 1;
        }
        steps.push(Step::Up);
    }
    while rights < total {
        steps.push(Step::Right);
        rights += 1;
    }
    StepWord(steps)
}
