//! Moebius function engines and interval classification.
//!
//! Four ways to get `μ(a, b)`:
//!
//! - [`mobius_recursive`]: the defining recursion. This is the ground truth
//!   everything else is compared against.
//! - [`mobius_chain_alternating`]: signed count of strict chains, by length.
//! - [`mobius_falling`]: `(-1)^s` for a unique falling chain of length `s`.
//! - [`mobius_closed`]: the position-set formula of [`classify_interval`].
//!
//! The closed forms at the extremes are [`mobius_from_bottom`] and
//! [`mobius_to_top`]. [`spherical_census`] and [`top_census_by_diff`] count
//! the elements with nonzero `μ(0̂, ·)` and `μ(·, 1̂)`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exec::Exec;
use crate::lattice::{cover_move, ElemId, IntervalView, Lattice, LatticeError};
use crate::paths::{bound, PathSeq};
use crate::shelling::{falling_chains, ShellingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Shelling(#[from] ShellingError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("census mismatch: {0}")]
    CensusMismatch(String),
}

/// A set of 1-based positions, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffKey(Vec<usize>);

impl DiffKey {
    pub fn new(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        positions.dedup();
        DiffKey(positions)
    }

    /// `{from, from+1, ..., to}`.
    pub fn range(from: usize, to: usize) -> Self {
        DiffKey((from..=to).collect())
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.binary_search(&position).is_ok()
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DiffKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Recursive,
    ChainAlternating,
    Falling,
    Closed,
}

/// `μ(a, b)` for every comparable pair, stored densely by `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    size: usize,
    values: Vec<Option<i64>>,
    engine: Engine,
}

impl MobiusTable {
    fn from_rows(engine: Engine, rows: Vec<Vec<Option<i64>>>) -> Self {
        let size = rows.len();
        MobiusTable {
            size,
            values: rows.into_iter().flatten().collect(),
            engine,
        }
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    /// `None` when `a` is not below `b`.
    pub fn get(&self, a: ElemId, b: ElemId) -> Option<i64> {
        self.values[a * self.size + b]
    }

    pub fn entries(&self) -> impl Iterator<Item = (ElemId, ElemId, i64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(move |(k, v)| v.map(|v| (k / self.size, k % self.size, v)))
    }
}

/// `μ(a,a) = 1`, `μ(a,b) = -Σ_{a <= z < b} μ(a,z)`, one bottom at a time.
pub fn mobius_recursive(lat: &Lattice, exec: Exec) -> MobiusTable {
    let rows = exec.map_range(lat.len(), |a| {
        let mut row = vec![None; lat.len()];
        let ups = lat.up_set(a);
        for &z in lat.linear_extension() {
            if !ups.contains(z) {
                continue;
            }
            let value = if z == a {
                1
            } else {
                let mut below = (*lat.down_set(z)).clone();
                below.intersect_with(&ups);
                -below
                    .ones()
                    .filter(|&y| y != z)
                    .map(|y| row[y].expect("predecessor visited first"))
                    .sum::<i64>()
            };
            row[z] = Some(value);
        }
        row
    });
    MobiusTable::from_rows(Engine::Recursive, rows)
}

/// `Σ_k (-1)^k c_k`, where `c_k` counts chains `a = x_0 < x_1 < ... < x_k = b`.
pub fn mobius_chain_alternating(view: &IntervalView<'_>) -> i64 {
    let lat = view.lattice();
    let order = view.members_linear();
    // chains[idx][len]: chains of length `len` from the bottom to order[idx]
    let mut chains: Vec<Vec<i128>> = Vec::with_capacity(order.len());
    for (idx, &z) in order.iter().enumerate() {
        let mut counts = if idx == 0 { vec![1i128] } else { Vec::new() };
        for (prev_idx, &y) in order[..idx].iter().enumerate() {
            if !lat.leq(y, z) {
                continue;
            }
            let prev = &chains[prev_idx];
            if counts.len() < prev.len() + 1 {
                counts.resize(prev.len() + 1, 0);
            }
            for (len, &c) in prev.iter().enumerate() {
                counts[len + 1] += c;
            }
        }
        chains.push(counts);
    }
    let top = chains.last().expect("interval is nonempty");
    let total: i128 = top
        .iter()
        .enumerate()
        .map(|(len, &c)| if len % 2 == 0 { c } else { -c })
        .sum();
    total as i64
}

/// `(-1)^s` for the unique falling chain of length `s`, else 0.
pub fn mobius_falling(view: &IntervalView<'_>) -> Result<i64, ShellingError> {
    Ok(match falling_chains(view)?.first() {
        Some(chain) => sign(chain.len()),
        None => 0,
    })
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Fills a table from a per-interval engine.
pub fn mobius_table_by<F>(lat: &Lattice, engine: Engine, exec: Exec, f: F) -> Result<MobiusTable, TopologyError>
where
    F: Fn(&IntervalView<'_>) -> Result<i64, TopologyError> + Sync + Send,
{
    let rows = exec.try_map_range(lat.len(), |a| {
        let mut row = vec![None; lat.len()];
        for b in lat.up_set(a).ones() {
            row[b] = Some(f(&lat.interval(a, b)?)?);
        }
        Ok::<_, TopologyError>(row)
    })?;
    Ok(MobiusTable::from_rows(engine, rows))
}

pub fn mobius_chain_table(lat: &Lattice, exec: Exec) -> MobiusTable {
    mobius_table_by(lat, Engine::ChainAlternating, exec, |v| Ok(mobius_chain_alternating(v)))
        .expect("chain engine is infallible")
}

pub fn mobius_falling_table(lat: &Lattice, exec: Exec) -> Result<MobiusTable, TopologyError> {
    mobius_table_by(lat, Engine::Falling, exec, |v| Ok(mobius_falling(v)?))
}

pub fn mobius_closed_table(lat: &Lattice, exec: Exec) -> Result<MobiusTable, TopologyError> {
    mobius_table_by(lat, Engine::Closed, exec, |v| {
        let l = v.lattice();
        mobius_closed(l.element(v.bottom()), l.element(v.top()), l.m())
    })
}

/// Counts `i ∈ D`, `i < j`, with `a_j - 1 - a_i < m(j-i)` and
/// `a_k - a_i < m(k-i)` for all `i < k < j`.
///
/// Requires `j ∈ D` and `a_i > a_{i-1}` for every `i ∈ D`.
pub fn e_counter(a: &PathSeq, m: u32, set: &DiffKey, j: usize) -> Result<usize, TopologyError> {
    if !set.contains(j) {
        return Err(TopologyError::Precondition(format!("{j} is not in {set}")));
    }
    if let Some(&bad) = set
        .positions()
        .iter()
        .find(|&&i| i < 2 || i > a.len() || a.at(i) <= a.at(i - 1))
    {
        return Err(TopologyError::Precondition(format!(
            "position {bad} of {set} is not a strict ascent of ({a})"
        )));
    }
    let m = m as i64;
    let val = |k: usize| a.at(k) as i64;
    let count = set
        .positions()
        .iter()
        .take_while(|&&i| i < j)
        .filter(|&&i| {
            val(j) - 1 - val(i) < m * (j - i) as i64
                && (i + 1..j).all(|k| val(k) - val(i) < m * (k - i) as i64)
        })
        .count();
    Ok(count)
}

/// The covering move that first changes position `j`; needs `a_j > a_{j-1}`.
pub fn up_rotation(a: &PathSeq, m: u32, j: usize) -> Result<PathSeq, TopologyError> {
    if j < 2 || j > a.len() || a.at(j) <= a.at(j - 1) {
        return Err(TopologyError::Precondition(format!(
            "no strict ascent at position {j} of ({a})"
        )));
    }
    Ok(cover_move(a, m, j - 1)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    /// Open interval homotopic to a sphere of this dimension; `-1` is empty.
    /// The trivial interval `[a, a]` gets `-2`, keeping `μ = (-1)^{d}`.
    Sphere(i64),
    Point,
}

impl fmt::Display for IntervalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalKind::Sphere(d) => write!(f, "Sphere({d})"),
            IntervalKind::Point => f.write_str("Point"),
        }
    }
}

/// Outcome of the two conditions at one position of the witness set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionCheck {
    pub position: usize,
    /// `a_j - 1 - a_{j-1} < m` implies `b_j - b_{j-1} < m`.
    pub slope_kept: bool,
    /// `b_j = a_j - 1 - e_j(a)`.
    pub drop_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalClass {
    pub kind: IntervalKind,
    /// `{j : a_j != b_j and a_j > a_{j-1}}`.
    pub witness: DiffKey,
    pub checks: Vec<PositionCheck>,
}

/// Classifies `[a, b]` (with `a <= b`) as a sphere of dimension `|D| - 2`
/// when both conditions hold at every position of `D`, else as a point.
pub fn classify_interval(a: &PathSeq, b: &PathSeq, m: u32) -> Result<IntervalClass, TopologyError> {
    if a.len() != b.len() {
        return Err(TopologyError::Precondition(format!(
            "({a}) and ({b}) have different lengths"
        )));
    }
    let witness = DiffKey(
        (2..=a.len())
            .filter(|&j| a.at(j) != b.at(j) && a.at(j) > a.at(j - 1))
            .collect(),
    );
    let mi = m as i64;
    let av = |k: usize| a.at(k) as i64;
    let bv = |k: usize| b.at(k) as i64;
    let checks = witness
        .positions()
        .iter()
        .map(|&j| {
            let e = e_counter(a, m, &witness, j)? as i64;
            Ok(PositionCheck {
                position: j,
                slope_kept: !(av(j) - 1 - av(j - 1) < mi) || bv(j) - bv(j - 1) < mi,
                drop_matches: bv(j) == av(j) - 1 - e,
            })
        })
        .collect::<Result<Vec<_>, TopologyError>>()?;
    let kind = if checks.iter().all(|c| c.slope_kept && c.drop_matches) {
        IntervalKind::Sphere(witness.len() as i64 - 2)
    } else {
        IntervalKind::Point
    };
    Ok(IntervalClass {
        kind,
        witness,
        checks,
    })
}

/// `(-1)^{|D|}` for a sphere, 0 for a point.
pub fn mobius_closed(a: &PathSeq, b: &PathSeq, m: u32) -> Result<i64, TopologyError> {
    let class = classify_interval(a, b, m)?;
    Ok(match class.kind {
        IntervalKind::Sphere(_) => sign(class.witness.len()),
        IntervalKind::Point => 0,
    })
}

/// `μ(0̂, a)`: with `D = {j : a_j != (j-1)m}` and `D_j = {i ∈ D : i < j}`,
/// `(-1)^{|D|}` if `a_j = (j-1)m - 1 - |D_j|` for all `j ∈ D`, else 0.
pub fn mobius_from_bottom(a: &PathSeq, m: u32) -> i64 {
    let set: Vec<usize> = (1..=a.len())
        .filter(|&j| a.at(j) as u64 != bound(m, j))
        .collect();
    let holds = set
        .iter()
        .enumerate()
        .all(|(below, &j)| a.at(j) as i64 == bound(m, j) as i64 - 1 - below as i64);
    if holds {
        sign(set.len())
    } else {
        0
    }
}

/// `μ(a, 1̂)`: with `D = {j : a_j > a_{j-1}}`, `(-1)^{|D|}` if
/// `a_j = e_j(a) + 1` for all `j ∈ D`, else 0.
pub fn mobius_to_top(a: &PathSeq, m: u32) -> i64 {
    let set = DiffKey((2..=a.len()).filter(|&j| a.at(j) > a.at(j - 1)).collect());
    let holds = set.positions().iter().all(|&j| {
        let e = e_counter(a, m, &set, j).expect("ascent set satisfies the counter precondition");
        a.at(j) as usize == e + 1
    });
    if holds {
        sign(set.len())
    } else {
        0
    }
}

/// Positions `>= 2` where `a` and `b` differ.
pub fn diff_set(a: &PathSeq, b: &PathSeq) -> DiffKey {
    DiffKey((2..=a.len()).filter(|&i| a.at(i) != b.at(i)).collect())
}

/// Elements whose diff-set against `a` is exactly `key`.
pub fn diff_class(lat: &Lattice, a: ElemId, key: &DiffKey) -> Vec<ElemId> {
    let base = lat.element(a);
    (0..lat.len())
        .filter(|&b| &diff_set(base, lat.element(b)) == key)
        .collect()
}

/// `0̂` with one subtracted at every position in `key`.
pub fn chi_witness(key: &DiffKey, m: u32, n: usize) -> Result<PathSeq, TopologyError> {
    if let Some(&bad) = key.positions().iter().find(|&&p| p < 2 || p > n) {
        return Err(TopologyError::Precondition(format!(
            "position {bad} outside 2..={n}"
        )));
    }
    let values = (1..=n)
        .map(|j| bound(m, j) as u32 - key.contains(j) as u32)
        .collect();
    Ok(PathSeq::new(values, m).map_err(LatticeError::from)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    /// Elements with `μ(0̂, ·) != 0`.
    pub from_bottom: Vec<ElemId>,
    /// Elements with `μ(·, 1̂) != 0`.
    pub to_top: Vec<ElemId>,
    pub expected: u64,
}

/// Both spherical sets; errors unless each has `2^{n-1}` elements.
pub fn spherical_census(lat: &Lattice, table: &MobiusTable) -> Result<Census, TopologyError> {
    let (zero, one) = (lat.zero(), lat.one());
    let from_bottom: Vec<ElemId> = (0..lat.len())
        .filter(|&a| table.get(zero, a).is_some_and(|v| v != 0))
        .collect();
    let to_top: Vec<ElemId> = (0..lat.len())
        .filter(|&a| table.get(a, one).is_some_and(|v| v != 0))
        .collect();
    let expected = 1u64 << (lat.n() - 1);
    if from_bottom.len() as u64 != expected || to_top.len() as u64 != expected {
        return Err(TopologyError::CensusMismatch(format!(
            "|S0| = {}, |S1| = {}, expected {expected}",
            from_bottom.len(),
            to_top.len()
        )));
    }
    Ok(Census {
        from_bottom,
        to_top,
        expected,
    })
}

/// Groups `{a : μ(a, 1̂) != 0}` by diff-set against `1̂`. Errors unless the
/// only keys are `∅` (count 1) and `[i, n]` (count `2^{n-i}`) for every `i`.
pub fn top_census_by_diff(lat: &Lattice, table: &MobiusTable) -> Result<BTreeMap<DiffKey, usize>, TopologyError> {
    let one = lat.one();
    let top = lat.element(one);
    let mut groups: BTreeMap<DiffKey, usize> = BTreeMap::new();
    for a in 0..lat.len() {
        if table.get(a, one).is_some_and(|v| v != 0) {
            *groups.entry(diff_set(lat.element(a), top)).or_default() += 1;
        }
    }
    let n = lat.n();
    let mut expected: BTreeMap<DiffKey, usize> = BTreeMap::new();
    expected.insert(DiffKey::default(), 1);
    for i in 2..=n {
        expected.insert(DiffKey::range(i, n), 1 << (n - i));
    }
    if groups != expected {
        return Err(TopologyError::CensusMismatch(format!(
            "grouping {} differs from expected {}",
            fmt_groups(&groups),
            fmt_groups(&expected)
        )));
    }
    Ok(groups)
}

fn fmt_groups(g: &BTreeMap<DiffKey, usize>) -> String {
    g.iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// How a closed-form value disagrees with the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Discrepancy {
    /// Classified as a point, but `μ != 0`.
    PointNonzero,
    /// Classified as `Sphere(d)`, but `μ != (-1)^d`.
    SphereSign,
}

/// One interval with every engine's value side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusRow {
    pub bottom: ElemId,
    pub top: ElemId,
    pub recursive: i64,
    pub chain: i64,
    pub falling: i64,
    pub closed: i64,
    pub class: IntervalClass,
    pub discrepancy: Option<Discrepancy>,
}

impl MobiusRow {
    pub fn engines_agree(&self) -> bool {
        self.recursive == self.chain && self.chain == self.falling
    }
}

/// Evaluates all engines on one interval, given the recursion value.
pub fn mobius_row(view: &IntervalView<'_>, recursive: i64) -> Result<MobiusRow, TopologyError> {
    let lat = view.lattice();
    let (a, b) = (lat.element(view.bottom()), lat.element(view.top()));
    let class = classify_interval(a, b, lat.m())?;
    let closed = match class.kind {
        IntervalKind::Sphere(_) => sign(class.witness.len()),
        IntervalKind::Point => 0,
    };
    let discrepancy = match class.kind {
        IntervalKind::Point if recursive != 0 => Some(Discrepancy::PointNonzero),
        IntervalKind::Sphere(d) if recursive != sign(d.rem_euclid(2) as usize) => {
            Some(Discrepancy::SphereSign)
        }
        _ => None,
    };
    Ok(MobiusRow {
        bottom: view.bottom(),
        top: view.top(),
        recursive,
        chain: mobius_chain_alternating(view),
        falling: mobius_falling(view)?,
        closed,
        class,
        discrepancy,
    })
}

/// [`mobius_row`] for every interval, ordered by `(bottom, top)`.
pub fn mobius_rows(lat: &Lattice, exec: Exec) -> Result<Vec<MobiusRow>, TopologyError> {
    let oracle = mobius_recursive(lat, exec);
    let rows = exec.try_map_range(lat.len(), |a| {
        lat.up_set(a)
            .ones()
            .map(|b| mobius_row(&lat.interval(a, b)?, oracle.get(a, b).expect("comparable")))
            .collect::<Result<Vec<_>, TopologyError>>()
    })?;
    Ok(rows.into_iter().flatten().collect())
}
