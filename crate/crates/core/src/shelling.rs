//! The `(j, a_j)` edge labeling and exhaustive chain analysis.
//!
//! A cover `a ⋖ b` gets the label `(j, a_j)` where `j` is the first position
//! at which `a` and `b` differ. Labels are compared by position first and,
//! within a position, by *descending* value. Label words compare
//! lexicographically with proper prefixes first.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::exec::Exec;
use crate::lattice::{cover_move, ElemId, IntervalView, Lattice, LatticeError};
use crate::paths::{primitive_end, PathSeq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShellingError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("({a}) -> ({b}) is not a cover edge")]
    NotACover { a: PathSeq, b: PathSeq },
    #[error("interval [{bottom},{top}] has more than {cap} maximal chains")]
    ChainCapExceeded { bottom: ElemId, top: ElemId, cap: u64 },
    #[error("interval [{bottom},{top}] has {count} falling chains")]
    MultipleFalling { bottom: ElemId, top: ElemId, count: usize },
    #[error("rising-chain construction stuck at {at} on the way to {top}")]
    ConstructionStuck { at: PathSeq, top: PathSeq },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeLabel {
    pub position: usize,
    pub value: u32,
}

impl EdgeLabel {
    pub fn new(position: usize, value: u32) -> Self {
        EdgeLabel { position, value }
    }
}

impl Ord for EdgeLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.position
            .cmp(&other.position)
            .then_with(|| other.value.cmp(&self.value))
    }
}

impl PartialOrd for EdgeLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.position, self.value)
    }
}

/// `(i,u) <= (j,v)` iff `i < j`, or `i = j` and `u >= v`.
pub fn label_leq(x: EdgeLabel, y: EdgeLabel) -> bool {
    x.position < y.position || (x.position == y.position && x.value >= y.value)
}

fn label_lt(x: EdgeLabel, y: EdgeLabel) -> bool {
    label_leq(x, y) && x != y
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LabelWord(pub Vec<EdgeLabel>);

impl LabelWord {
    pub fn labels(&self) -> &[EdgeLabel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&[(usize, u32)]> for LabelWord {
    fn from(pairs: &[(usize, u32)]) -> Self {
        LabelWord(pairs.iter().map(|&(j, v)| EdgeLabel::new(j, v)).collect())
    }
}

impl fmt::Display for LabelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// Lexicographic order on label words; a prefix precedes its extensions.
pub fn word_lex_leq(w1: &LabelWord, w2: &LabelWord) -> bool {
    for (x, y) in w1.0.iter().zip(&w2.0) {
        if x != y {
            return label_lt(*x, *y);
        }
    }
    w1.len() <= w2.len()
}

/// Label of the cover `a ⋖ b`; errors unless `b` is the covering move of `a`
/// at the first differing position.
pub fn edge_label(a: &PathSeq, b: &PathSeq, m: u32) -> Result<EdgeLabel, ShellingError> {
    let not_cover = || ShellingError::NotACover {
        a: a.clone(),
        b: b.clone(),
    };
    if a.len() != b.len() {
        return Err(not_cover());
    }
    let j = a
        .values()
        .iter()
        .zip(b.values())
        .position(|(x, y)| x != y)
        .ok_or_else(not_cover)?
        + 1;
    match cover_move(a, m, j - 1) {
        Ok(moved) if &moved == b => Ok(EdgeLabel::new(j, a.at(j))),
        _ => Err(not_cover()),
    }
}

/// Label of a stored cover, without re-checking it.
pub fn cover_label(lat: &Lattice, from: ElemId, position: usize) -> EdgeLabel {
    let j = position + 1;
    EdgeLabel::new(j, lat.element(from).at(j))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalChain {
    pub elements: Vec<ElemId>,
    pub word: LabelWord,
}

impl MaximalChain {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// Strictly increasing labels. Chains with at most one edge qualify.
pub fn is_rising(chain: &MaximalChain) -> bool {
    chain.word.0.windows(2).all(|w| label_lt(w[0], w[1]))
}

/// Strictly decreasing labels. Chains with at most one edge qualify.
pub fn is_falling(chain: &MaximalChain) -> bool {
    chain.word.0.windows(2).all(|w| label_lt(w[1], w[0]))
}

/// Depth-first walk over the maximal chains of an interval.
///
/// Outgoing covers are visited by increasing position, which is increasing
/// label order, so chains come out in lexicographic order of their words.
pub struct MaximalChains<'v, 'a> {
    view: &'v IntervalView<'a>,
    path: Vec<ElemId>,
    labels: Vec<EdgeLabel>,
    cursor: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'v, 'a> MaximalChains<'v, 'a> {
    pub fn new(view: &'v IntervalView<'a>) -> Self {
        MaximalChains {
            view,
            path: Vec::new(),
            labels: Vec::new(),
            cursor: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn snapshot(&self) -> MaximalChain {
        MaximalChain {
            elements: self.path.clone(),
            word: LabelWord(self.labels.clone()),
        }
    }
}

impl Iterator for MaximalChains<'_, '_> {
    type Item = MaximalChain;

    fn next(&mut self) -> Option<MaximalChain> {
        let view = self.view;
        let lat = view.lattice();
        if !self.started {
            self.started = true;
            self.path.push(view.bottom());
            self.cursor.push(0);
            if view.is_singleton() {
                self.done = true;
                return Some(self.snapshot());
            }
        }
        while !self.done {
            let depth = self.path.len() - 1;
            let node = self.path[depth];
            let outs = lat.up_covers(node);
            let start = self.cursor[depth];
            let step = outs[start..]
                .iter()
                .enumerate()
                .find(|(_, c)| view.contains(c.target));
            match step {
                Some((offset, c)) => {
                    self.cursor[depth] = start + offset + 1;
                    self.path.push(c.target);
                    self.labels.push(cover_label(lat, node, c.position));
                    if c.target == view.top() {
                        let chain = self.snapshot();
                        self.path.pop();
                        self.labels.pop();
                        return Some(chain);
                    }
                    self.cursor.push(0);
                }
                None => {
                    self.path.pop();
                    self.cursor.pop();
                    if self.path.is_empty() {
                        self.done = true;
                    } else {
                        self.labels.pop();
                    }
                }
            }
        }
        None
    }
}

pub fn maximal_chains<'v, 'a>(view: &'v IntervalView<'a>) -> MaximalChains<'v, 'a> {
    MaximalChains::new(view)
}

/// Collects all maximal chains, refusing beyond `cap`.
pub fn collect_chains(view: &IntervalView<'_>, cap: u64) -> Result<Vec<MaximalChain>, ShellingError> {
    let mut out = Vec::new();
    for chain in maximal_chains(view) {
        if out.len() as u64 >= cap {
            return Err(ShellingError::ChainCapExceeded {
                bottom: view.bottom(),
                top: view.top(),
                cap,
            });
        }
        out.push(chain);
    }
    Ok(out)
}

/// Builds the rising chain by always decrementing at the smallest position
/// where the current element still exceeds the top of the interval.
pub fn rising_chain(view: &IntervalView<'_>) -> Result<MaximalChain, ShellingError> {
    let lat = view.lattice();
    let m = lat.m();
    let target = lat.element(view.top());
    let start = lat.element(view.bottom());
    let diff: Vec<usize> = (1..=start.len())
        .filter(|&j| start.at(j) != target.at(j))
        .collect();
    let mut cur_id = view.bottom();
    let mut elements = vec![cur_id];
    let mut labels = Vec::new();
    while cur_id != view.top() {
        let cur = lat.element(cur_id);
        let stuck = || ShellingError::ConstructionStuck {
            at: cur.clone(),
            top: target.clone(),
        };
        let j = *diff
            .iter()
            .find(|&&j| cur.at(j) > target.at(j))
            .ok_or_else(stuck)?;
        if j < 2 {
            return Err(stuck());
        }
        let next = cover_move(cur, m, j - 1).map_err(|_| stuck())?;
        let next_id = lat.id_of(&next).ok_or_else(stuck)?;
        if !view.contains(next_id) {
            return Err(stuck());
        }
        labels.push(EdgeLabel::new(j, cur.at(j)));
        elements.push(next_id);
        cur_id = next_id;
    }
    Ok(MaximalChain {
        elements,
        word: LabelWord(labels),
    })
}

/// Falling maximal chains of the interval; more than one is an error.
pub fn falling_chains(view: &IntervalView<'_>) -> Result<Vec<MaximalChain>, ShellingError> {
    let falling: Vec<MaximalChain> = maximal_chains(view).filter(is_falling).collect();
    if falling.len() > 1 {
        return Err(ShellingError::MultipleFalling {
            bottom: view.bottom(),
            top: view.top(),
            count: falling.len(),
        });
    }
    Ok(falling)
}

/// Predicted falling word: positions `j` with `a_j != b_j` and
/// `a_j >= a_{j-1} + m`, in decreasing order, labelled with `a_j`.
pub fn candidate_falling_labels(a: &PathSeq, b: &PathSeq, m: u32) -> LabelWord {
    let labels = (2..=a.len())
        .rev()
        .filter(|&j| a.at(j) != b.at(j) && a.at(j) as u64 >= a.at(j - 1) as u64 + m as u64)
        .map(|j| EdgeLabel::new(j, a.at(j)))
        .collect();
    LabelWord(labels)
}

/// Per-interval result of [`verify_el`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCheck {
    pub bottom: ElemId,
    pub top: ElemId,
    pub num_chains: u64,
    pub num_rising: u64,
    pub num_falling: u64,
    pub lex_first_is_rising: bool,
    pub violation: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct ElReport {
    pub intervals: Vec<IntervalCheck>,
}

impl ElReport {
    pub fn violations(&self) -> impl Iterator<Item = &IntervalCheck> {
        self.intervals.iter().filter(|c| c.violation.is_some())
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Maximal chains allowed per interval.
    pub chain_cap: u64,
    pub exec: Exec,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            chain_cap: 10_000_000,
            exec: Exec::default(),
        }
    }
}

/// Checks one interval: a unique rising chain, equal to the constructed one
/// and lexicographically first, and at most one falling chain.
pub fn check_interval(view: &IntervalView<'_>, chain_cap: u64) -> Result<IntervalCheck, ShellingError> {
    let mut num_chains = 0u64;
    let mut num_rising = 0u64;
    let mut num_falling = 0u64;
    let mut rising: Option<MaximalChain> = None;
    let mut first: Option<MaximalChain> = None;
    let mut lex_min: Option<MaximalChain> = None;
    for chain in maximal_chains(view) {
        num_chains += 1;
        if num_chains > chain_cap {
            return Err(ShellingError::ChainCapExceeded {
                bottom: view.bottom(),
                top: view.top(),
                cap: chain_cap,
            });
        }
        if is_falling(&chain) {
            num_falling += 1;
        }
        if is_rising(&chain) {
            num_rising += 1;
            rising.get_or_insert_with(|| chain.clone());
        }
        if lex_min.as_ref().is_none_or(|best| !word_lex_leq(&best.word, &chain.word)) {
            lex_min = Some(chain.clone());
        }
        first.get_or_insert(chain);
    }
    let lex_min = lex_min.expect("every interval has a maximal chain");
    let lex_first_is_rising = is_rising(&lex_min);

    let mut problems = Vec::new();
    if num_rising != 1 {
        problems.push(format!("{num_rising} rising chains"));
    }
    if !lex_first_is_rising {
        problems.push(format!("lex-first chain {} is not rising", lex_min.word));
    }
    if num_falling > 1 {
        problems.push(format!("{num_falling} falling chains"));
    }
    if first.as_ref() != Some(&lex_min) {
        problems.push("depth-first order disagrees with lexicographic order".into());
    }
    match rising_chain(view) {
        Ok(built) => {
            if !is_rising(&built) {
                problems.push(format!("constructed chain {} is not rising", built.word));
            }
            if rising.as_ref().is_some_and(|r| r != &built) {
                problems.push(format!("constructed chain {} differs from rising chain", built.word));
            }
        }
        Err(e) => problems.push(e.to_string()),
    }
    Ok(IntervalCheck {
        bottom: view.bottom(),
        top: view.top(),
        num_chains,
        num_rising,
        num_falling,
        lex_first_is_rising,
        violation: (!problems.is_empty()).then(|| problems.join("; ")),
    })
}

/// Runs [`check_interval`] on every interval `[a, b]`, ordered by `(a, b)`.
pub fn verify_el(lat: &Lattice, opts: &VerifyOptions) -> Result<ElReport, ShellingError> {
    let rows = opts.exec.try_map_range(lat.len(), |a| {
        let ups = lat.up_set(a);
        ups.ones()
            .map(|b| check_interval(&lat.interval(a, b)?, opts.chain_cap))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(ElReport {
        intervals: rows.into_iter().flatten().collect(),
    })
}

/// Interval where the predicted falling word differs from the actual falling chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FallingMismatch {
    pub bottom: ElemId,
    pub top: ElemId,
    pub predicted: LabelWord,
    pub actual: LabelWord,
}

/// Compares [`candidate_falling_labels`] against the actual falling chain on
/// every interval that has one.
pub fn falling_label_mismatches(lat: &Lattice, exec: Exec) -> Result<Vec<FallingMismatch>, ShellingError> {
    let rows = exec.try_map_range(lat.len(), |a| {
        let mut out = Vec::new();
        for b in lat.up_set(a).ones() {
            let view = lat.interval(a, b)?;
            if let Some(actual) = falling_chains(&view)?.pop() {
                let predicted = candidate_falling_labels(lat.element(a), lat.element(b), lat.m());
                if predicted != actual.word {
                    out.push(FallingMismatch {
                        bottom: a,
                        top: b,
                        predicted,
                        actual: actual.word,
                    });
                }
            }
        }
        Ok::<_, ShellingError>(out)
    })?;
    Ok(rows.into_iter().flatten().collect())
}

/// `a_k >= a_{k-1} + m`.
pub fn steep_ascent_at(a: &PathSeq, m: u32, k: usize) -> bool {
    a.at(k) as u64 >= a.at(k - 1) as u64 + m as u64
}

/// No primitive subsequence starting at some `i < k` reaches position `k`.
pub fn uncovered_by_earlier_primitive(a: &PathSeq, m: u32, k: usize) -> bool {
    (0..k - 1).all(|start| primitive_end(a.values(), m, start) + 1 < k)
}

/// `(element, position)` pairs where [`steep_ascent_at`] and
/// [`uncovered_by_earlier_primitive`] disagree.
pub fn primitive_predicate_divergences(lat: &Lattice) -> Vec<(ElemId, usize)> {
    let m = lat.m();
    (0..lat.len())
        .flat_map(|id| {
            let a = lat.element(id);
            (2..=a.len())
                .filter(move |&k| steep_ascent_at(a, m, k) != uncovered_by_earlier_primitive(a, m, k))
                .map(move |k| (id, k))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::BuildOptions;
    use crate::paths::Params;
    use proptest::prelude::*;

    fn s(d: &str) -> PathSeq {
        d.parse().unwrap()
    }

    fn word(pairs: &[(usize, u32)]) -> LabelWord {
        LabelWord::from(pairs)
    }

    fn t32() -> Lattice {
        Lattice::build(Params::new(2, 3).unwrap(), &BuildOptions::default()).unwrap()
    }

    #[test]
    fn edge_label_examples() {
        assert_eq!(edge_label(&s("024"), &s("014"), 2).unwrap(), EdgeLabel::new(2, 2));
        assert_eq!(edge_label(&s("024"), &s("023"), 2).unwrap(), EdgeLabel::new(3, 4));
        assert_eq!(edge_label(&s("012"), &s("001"), 2).unwrap(), EdgeLabel::new(2, 1));
        assert!(matches!(edge_label(&s("024"), &s("004"), 2), Err(ShellingError::NotACover { .. })));
        assert!(edge_label(&s("024"), &s("024"), 2).is_err());
    }

    #[test]
    fn label_order_examples() {
        assert!(label_leq(EdgeLabel::new(2, 2), EdgeLabel::new(3, 4)));
        assert!(label_leq(EdgeLabel::new(3, 4), EdgeLabel::new(3, 3)));
        assert!(!label_leq(EdgeLabel::new(3, 3), EdgeLabel::new(3, 4)));
        assert!(label_leq(EdgeLabel::new(2, 1), EdgeLabel::new(2, 1)));
    }

    #[test]
    fn word_order_examples() {
        assert!(word_lex_leq(&word(&[(2, 2)]), &word(&[(2, 2), (3, 1)])));
        assert!(!word_lex_leq(&word(&[(2, 2), (3, 1)]), &word(&[(2, 2)])));
        assert!(word_lex_leq(&word(&[(2, 2), (2, 1)]), &word(&[(3, 4)])));
        let w = word(&[(3, 4), (2, 2)]);
        assert!(word_lex_leq(&w, &w));
        assert!(word_lex_leq(&LabelWord::default(), &w));
    }

    #[test]
    fn chain_counts_on_t32() {
        let lat = t32();
        let id = |d: &str| lat.id_of(&s(d)).unwrap();
        let v = lat.interval(id("012"), id("001")).unwrap();
        assert_eq!(maximal_chains(&v).count(), 1);
        let v = lat.interval(id("013"), id("013")).unwrap();
        let chains: Vec<_> = maximal_chains(&v).collect();
        assert_eq!(chains.len(), 1);
        assert!(chains[0].is_empty());
        assert_eq!(chains[0].elements, vec![id("013")]);
        let full = lat.interval(lat.zero(), lat.one()).unwrap();
        assert_eq!(maximal_chains(&full).count(), 7);
        assert!(matches!(
            collect_chains(&full, 6),
            Err(ShellingError::ChainCapExceeded { cap: 6, .. })
        ));
        assert_eq!(collect_chains(&full, 7).unwrap().len(), 7);
    }

    #[test]
    fn rising_chain_examples() {
        let lat = t32();
        let id = |d: &str| lat.id_of(&s(d)).unwrap();
        let full = lat.interval(lat.zero(), lat.one()).unwrap();
        let r = rising_chain(&full).unwrap();
        assert_eq!(r.word, word(&[(2, 2), (2, 1), (3, 4), (3, 3), (3, 2), (3, 1)]));
        let v = lat.interval(id("013"), id("001")).unwrap();
        let r = rising_chain(&v).unwrap();
        assert_eq!(r.elements, vec![id("013"), id("003"), id("002"), id("001")]);
        assert_eq!(r.word, word(&[(2, 1), (3, 3), (3, 2)]));
        let single = lat.interval(id("022"), id("022")).unwrap();
        assert!(rising_chain(&single).unwrap().is_empty());
    }

    #[test]
    fn rising_and_falling_predicates() {
        let lat = t32();
        let id = |d: &str| lat.id_of(&s(d)).unwrap();
        let c = MaximalChain {
            elements: vec![id("024"), id("014"), id("013"), id("012")],
            word: word(&[(2, 2), (3, 4), (3, 3)]),
        };
        assert!(is_rising(&c) && !is_falling(&c));
        let c = MaximalChain {
            elements: vec![id("024"), id("023"), id("012")],
            word: word(&[(3, 4), (2, 2)]),
        };
        assert!(is_falling(&c) && !is_rising(&c));
        let c = MaximalChain {
            elements: vec![id("024"), id("014")],
            word: word(&[(2, 2)]),
        };
        assert!(is_falling(&c) && is_rising(&c));
    }

    #[test]
    fn falling_chain_examples() {
        let lat = t32();
        let id = |d: &str| lat.id_of(&s(d)).unwrap();
        let f = falling_chains(&lat.interval(id("024"), id("012")).unwrap()).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].word, word(&[(3, 4), (2, 2)]));
        assert!(falling_chains(&lat.interval(id("024"), id("004")).unwrap()).unwrap().is_empty());
        let f = falling_chains(&lat.interval(id("002"), id("002")).unwrap()).unwrap();
        assert_eq!(f.len(), 1);
        assert!(f[0].is_empty());
    }

    #[test]
    fn candidate_labels_examples() {
        assert_eq!(candidate_falling_labels(&s("024"), &s("012"), 2), word(&[(3, 4), (2, 2)]));
        assert!(candidate_falling_labels(&s("013"), &s("013"), 2).is_empty());
        assert!(candidate_falling_labels(&s("012"), &s("001"), 2).is_empty());
    }

    #[test]
    fn candidate_mismatches_include_known_covers() {
        let lat = t32();
        let id = |d: &str| lat.id_of(&s(d)).unwrap();
        let mism = falling_label_mismatches(&lat, Exec::Sequential).unwrap();
        let pairs: Vec<(ElemId, ElemId)> = mism.iter().map(|r| (r.bottom, r.top)).collect();
        assert!(pairs.contains(&(id("012"), id("001"))));
        // D' = {2} here, and the single cover is labelled (2,2): no mismatch
        assert!(!pairs.contains(&(id("023"), id("012"))));
        let row = mism.iter().find(|r| (r.bottom, r.top) == (id("012"), id("001"))).unwrap();
        assert_eq!(row.actual, word(&[(2, 1)]));
    }

    #[test]
    fn primitive_predicates_diverge_on_known_example() {
        let a = s("0124");
        assert!(steep_ascent_at(&a, 2, 4));
        assert!(!uncovered_by_earlier_primitive(&a, 2, 4));
        let lat = Lattice::build(Params::new(2, 4).unwrap(), &BuildOptions::default()).unwrap();
        let div = primitive_predicate_divergences(&lat);
        assert!(div.contains(&(lat.id_of(&a).unwrap(), 4)));
    }

    #[test]
    fn verify_small_lattices() {
        for (m, n) in [(2, 3), (1, 4), (1, 5), (3, 3)] {
            let lat = Lattice::build(Params::new(m, n).unwrap(), &BuildOptions::default()).unwrap();
            let report = verify_el(&lat, &VerifyOptions::default()).unwrap();
            assert!(report.is_clean(), "m={m} n={n}: {:?}", report.violations().next());
        }
    }

    #[test]
    fn verify_reports_chain_cap() {
        let lat = t32();
        let opts = VerifyOptions {
            chain_cap: 3,
            exec: Exec::Sequential,
        };
        assert!(matches!(verify_el(&lat, &opts), Err(ShellingError::ChainCapExceeded { .. })));
    }

    fn arb_label() -> impl Strategy<Value = EdgeLabel> {
        (2usize..6, 0u32..8).prop_map(|(j, v)| EdgeLabel::new(j, v))
    }

    proptest! {
        #[test]
        fn label_order_is_total(x in arb_label(), y in arb_label()) {
            let lt = label_lt(x, y);
            let gt = label_lt(y, x);
            let eq = x == y;
            prop_assert_eq!(lt as u8 + gt as u8 + eq as u8, 1);
            prop_assert_eq!(label_leq(x, y), x <= y);
        }

        #[test]
        fn word_order_matches_slice_order(
            a in proptest::collection::vec(arb_label(), 0..5),
            b in proptest::collection::vec(arb_label(), 0..5),
        ) {
            let (wa, wb) = (LabelWord(a.clone()), LabelWord(b.clone()));
            prop_assert_eq!(word_lex_leq(&wa, &wb), a <= b);
        }
    }
}
