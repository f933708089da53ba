//! The m-Tamari lattice on m-Dyck paths.
//!
//! A covering move at position `i` (with `a_i < a_{i+1}`) decrements the
//! primitive subsequence starting at `i+1`. Moves lower the entry sum, so the
//! bottom is `(0, m, ..., (n-1)m)` and the top is `(0, ..., 0)`.
//!
//! Element IDs are ranks in the lexicographic enumeration. Order queries go
//! through up-sets and down-sets: precomputed bitsets for lattices up to
//! [`BuildOptions::dense_threshold`] elements, otherwise computed per query
//! and memoized.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use fixedbitset::FixedBitSet;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exec::Exec;
use crate::paths::{self, fuss_catalan, primitive_end, PathError, PathIter, PathSeq, Params};

pub type ElemId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("no cover at position {position}: a_i = a_(i+1)")]
    NoCover { position: usize },
    #[error("cover position {position} out of range 1..{len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("lattice has {elements} elements, cap is {cap} (needs roughly {estimated_bytes} bytes)")]
    CapExceeded {
        elements: String,
        cap: u64,
        estimated_bytes: String,
    },
    #[error("empty interval: element {bottom} is not below element {top}")]
    EmptyInterval { bottom: ElemId, top: ElemId },
    #[error("element id {0} out of range")]
    UnknownId(ElemId),
    #[error("sequence {0} is not an element of this lattice")]
    UnknownElement(PathSeq),
    #[error("lattice property broken: {count} minimal upper bounds of {a} and {b}")]
    NotALattice { a: ElemId, b: ElemId, count: usize },
    #[error("invalid lattice export: {0}")]
    InvalidExport(String),
}

/// One upward cover edge. `position` is the move position `i` (1-based);
/// the first changed entry is `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cover {
    pub position: usize,
    pub target: ElemId,
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Refuse to build lattices with more elements than this.
    pub max_elements: u64,
    /// Precompute reachability bitsets up to this many elements.
    pub dense_threshold: usize,
    pub exec: Exec,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_elements: 2_000_000,
            dense_threshold: 20_000,
            exec: Exec::default(),
        }
    }
}

/// Applies the covering move at 1-based position `i`.
pub fn cover_move(seq: &PathSeq, m: u32, i: usize) -> Result<PathSeq, LatticeError> {
    let n = seq.len();
    if i == 0 || i >= n {
        return Err(LatticeError::PositionOutOfRange { position: i, len: n });
    }
    let vals = seq.values();
    if vals[i - 1] >= vals[i] {
        return Err(LatticeError::NoCover { position: i });
    }
    Ok(apply_move(vals, m, i))
}

// Caller guarantees a_i < a_{i+1}.
fn apply_move(vals: &[u32], m: u32, i: usize) -> PathSeq {
    let end = primitive_end(vals, m, i);
    let mut out = vals.to_vec();
    out[i..=end].iter_mut().for_each(|v| *v -= 1);
    PathSeq::from_raw(out)
}

/// All upward covers of `seq`, one per strict ascent, by increasing position.
pub fn covers(seq: &PathSeq, m: u32) -> Vec<(usize, PathSeq)> {
    let vals = seq.values();
    (1..vals.len())
        .filter(|&i| vals[i - 1] < vals[i])
        .map(|i| (i, apply_move(vals, m, i)))
        .collect()
}

#[derive(Debug)]
enum Reachability {
    Dense {
        up: Vec<Arc<FixedBitSet>>,
        down: Vec<Arc<FixedBitSet>>,
    },
    OnDemand {
        up: RwLock<HashMap<ElemId, Arc<FixedBitSet>>>,
        down: RwLock<HashMap<ElemId, Arc<FixedBitSet>>>,
    },
}

#[derive(Debug)]
pub struct Lattice {
    params: Params,
    elements: Vec<PathSeq>,
    up_covers: Vec<Vec<Cover>>,
    /// `Cover::target` holds the lower endpoint here.
    down_covers: Vec<Vec<Cover>>,
    zero: ElemId,
    one: ElemId,
    /// Bottom-first linear extension (descending entry sum, then id).
    linear: Vec<ElemId>,
    edge_count: usize,
    reach: Reachability,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params
            && self.elements == other.elements
            && self.up_covers == other.up_covers
    }
}

impl Eq for Lattice {}

impl Lattice {
    pub fn build(params: Params, opts: &BuildOptions) -> Result<Self, LatticeError> {
        let count = fuss_catalan(params.m(), params.n() as u64);
        let fits = count.to_u64().filter(|&c| c <= opts.max_elements);
        if fits.is_none() {
            let bytes = &count * (params.n() * 4 + 64) as u64;
            return Err(LatticeError::CapExceeded {
                elements: count.to_string(),
                cap: opts.max_elements,
                estimated_bytes: bytes.to_string(),
            });
        }
        let elements: Vec<PathSeq> = PathIter::new(params).collect();
        let m = params.m();
        let up_covers = opts.exec.map_range(elements.len(), |id| {
            covers(&elements[id], m)
                .into_iter()
                .map(|(position, target)| Cover {
                    position,
                    target: elements
                        .binary_search(&target)
                        .expect("cover target is a valid path"),
                })
                .collect::<Vec<_>>()
        });
        Ok(Self::assemble(params, elements, up_covers, opts))
    }

    /// Wires up derived structure from elements (canonical order) and up-covers.
    fn assemble(
        params: Params,
        elements: Vec<PathSeq>,
        up_covers: Vec<Vec<Cover>>,
        opts: &BuildOptions,
    ) -> Self {
        let len = elements.len();
        let mut down_covers = vec![Vec::new(); len];
        for (source, outs) in up_covers.iter().enumerate() {
            for c in outs {
                down_covers[c.target].push(Cover {
                    position: c.position,
                    target: source,
                });
            }
        }
        let edge_count = up_covers.iter().map(Vec::len).sum();
        let zero = elements
            .binary_search(&PathSeq::bottom(params))
            .expect("bottom element present");
        let one = elements
            .binary_search(&PathSeq::top(params))
            .expect("top element present");
        let mut linear: Vec<ElemId> = (0..len).collect();
        linear.sort_by_key(|&id| (std::cmp::Reverse(elements[id].sum()), id));

        let reach = if len <= opts.dense_threshold {
            let mut up = vec![None::<Arc<FixedBitSet>>; len];
            for &x in linear.iter().rev() {
                let mut set = FixedBitSet::with_capacity(len);
                set.insert(x);
                for c in &up_covers[x] {
                    set.union_with(up[c.target].as_ref().unwrap());
                }
                up[x] = Some(Arc::new(set));
            }
            let mut down = vec![None::<Arc<FixedBitSet>>; len];
            for &x in &linear {
                let mut set = FixedBitSet::with_capacity(len);
                set.insert(x);
                for c in &down_covers[x] {
                    set.union_with(down[c.target].as_ref().unwrap());
                }
                down[x] = Some(Arc::new(set));
            }
            Reachability::Dense {
                up: up.into_iter().map(Option::unwrap).collect(),
                down: down.into_iter().map(Option::unwrap).collect(),
            }
        } else {
            Reachability::OnDemand {
                up: RwLock::new(HashMap::new()),
                down: RwLock::new(HashMap::new()),
            }
        };

        Lattice {
            params,
            elements,
            up_covers,
            down_covers,
            zero,
            one,
            linear,
            edge_count,
            reach,
        }
    }

    /// Rebuilds a lattice from exported parts, checking every edge against the
    /// covering move and the element list against the canonical enumeration.
    pub fn from_parts(
        params: Params,
        elements: Vec<PathSeq>,
        edges: &[(ElemId, ElemId, usize)],
        opts: &BuildOptions,
    ) -> Result<Self, LatticeError> {
        let bad = |msg: String| LatticeError::InvalidExport(msg);
        for (id, e) in elements.iter().enumerate() {
            if e.len() != params.n() {
                return Err(bad(format!("element {id} has length {}", e.len())));
            }
            paths::validate_sequence(e.values(), params.m())?;
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("elements not in strictly ascending order".into()));
        }
        let expected = fuss_catalan(params.m(), params.n() as u64);
        if num_bigint::BigUint::from(elements.len()) != expected {
            return Err(bad(format!("{} elements, expected {expected}", elements.len())));
        }
        let mut up_covers = vec![Vec::new(); elements.len()];
        for &(from, to, position) in edges {
            if from >= elements.len() || to >= elements.len() {
                return Err(bad(format!("edge ({from},{to}) references unknown id")));
            }
            let moved = cover_move(&elements[from], params.m(), position)?;
            if moved != elements[to] {
                return Err(bad(format!("edge ({from},{to}) at {position} is not a cover")));
            }
            up_covers[from].push(Cover { position, target: to });
        }
        for (id, outs) in up_covers.iter_mut().enumerate() {
            outs.sort_by_key(|c| c.position);
            let want = covers(&elements[id], params.m()).len();
            if outs.len() != want || outs.windows(2).any(|w| w[0].position == w[1].position) {
                return Err(bad(format!("element {id} has incomplete or duplicate covers")));
            }
        }
        Ok(Self::assemble(params, elements, up_covers, opts))
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn m(&self) -> u32 {
        self.params.m()
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PathSeq] {
        &self.elements
    }

    pub fn element(&self, id: ElemId) -> &PathSeq {
        &self.elements[id]
    }

    pub fn id_of(&self, seq: &PathSeq) -> Option<ElemId> {
        self.elements.binary_search(seq).ok()
    }

    /// Like [`Lattice::id_of`], but reports unknown sequences as an error.
    pub fn require(&self, seq: &PathSeq) -> Result<ElemId, LatticeError> {
        self.id_of(seq)
            .ok_or_else(|| LatticeError::UnknownElement(seq.clone()))
    }

    pub fn up_covers(&self, id: ElemId) -> &[Cover] {
        &self.up_covers[id]
    }

    pub fn down_covers(&self, id: ElemId) -> &[Cover] {
        &self.down_covers[id]
    }

    pub fn zero(&self) -> ElemId {
        self.zero
    }

    pub fn one(&self) -> ElemId {
        self.one
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// `(from, to, position)` for every cover, by source id then position.
    pub fn edges(&self) -> impl Iterator<Item = (ElemId, ElemId, usize)> + '_ {
        self.up_covers
            .iter()
            .enumerate()
            .flat_map(|(from, outs)| outs.iter().map(move |c| (from, c.target, c.position)))
    }

    /// Elements ordered so that `x < y` puts `x` first.
    pub fn linear_extension(&self) -> &[ElemId] {
        &self.linear
    }

    pub fn has_dense_reachability(&self) -> bool {
        matches!(self.reach, Reachability::Dense { .. })
    }

    fn check(&self, id: ElemId) -> Result<(), LatticeError> {
        if id < self.len() {
            Ok(())
        } else {
            Err(LatticeError::UnknownId(id))
        }
    }

    /// `{z : id <= z}`.
    pub fn up_set(&self, id: ElemId) -> Arc<FixedBitSet> {
        match &self.reach {
            Reachability::Dense { up, .. } => Arc::clone(&up[id]),
            Reachability::OnDemand { up, .. } => {
                Self::memo(up, id, || self.search(id, |x| &self.up_covers[x]))
            }
        }
    }

    /// `{z : z <= id}`.
    pub fn down_set(&self, id: ElemId) -> Arc<FixedBitSet> {
        match &self.reach {
            Reachability::Dense { down, .. } => Arc::clone(&down[id]),
            Reachability::OnDemand { down, .. } => {
                Self::memo(down, id, || self.search(id, |x| &self.down_covers[x]))
            }
        }
    }

    fn memo(
        cache: &RwLock<HashMap<ElemId, Arc<FixedBitSet>>>,
        id: ElemId,
        compute: impl FnOnce() -> FixedBitSet,
    ) -> Arc<FixedBitSet> {
        if let Some(hit) = cache.read().unwrap().get(&id) {
            return Arc::clone(hit);
        }
        let set = Arc::new(compute());
        cache
            .write()
            .unwrap()
            .entry(id)
            .or_insert(set)
            .clone()
    }

    fn search<'s>(&'s self, start: ElemId, next: impl Fn(ElemId) -> &'s [Cover]) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(x) = stack.pop() {
            for c in next(x) {
                if !seen.put(c.target) {
                    stack.push(c.target);
                }
            }
        }
        seen
    }

    pub fn leq(&self, a: ElemId, b: ElemId) -> bool {
        if a == b {
            return true;
        }
        match &self.reach {
            Reachability::Dense { up, .. } => up[a].contains(b),
            Reachability::OnDemand { .. } => self.up_set(a).contains(b),
        }
    }

    /// `[a, b]`; `a = b` gives a singleton, `a` not below `b` is an error.
    pub fn interval(&self, a: ElemId, b: ElemId) -> Result<IntervalView<'_>, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        if !self.leq(a, b) {
            return Err(LatticeError::EmptyInterval { bottom: a, top: b });
        }
        let mut members = (*self.up_set(a)).clone();
        members.intersect_with(&self.down_set(b));
        Ok(IntervalView {
            lattice: self,
            bottom: a,
            top: b,
            members,
        })
    }

    /// Least upper bound.
    pub fn join(&self, a: ElemId, b: ElemId) -> Result<ElemId, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        let mut common = (*self.up_set(a)).clone();
        common.intersect_with(&self.up_set(b));
        self.unique_extreme(a, b, &common, |z| self.down_set(z))
    }

    /// Greatest lower bound.
    pub fn meet(&self, a: ElemId, b: ElemId) -> Result<ElemId, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        let mut common = (*self.down_set(a)).clone();
        common.intersect_with(&self.down_set(b));
        self.unique_extreme(a, b, &common, |z| self.up_set(z))
    }

    // Elements of `common` whose `toward` set meets `common` only in themselves.
    fn unique_extreme(
        &self,
        a: ElemId,
        b: ElemId,
        common: &FixedBitSet,
        toward: impl Fn(ElemId) -> Arc<FixedBitSet>,
    ) -> Result<ElemId, LatticeError> {
        let extremes: Vec<ElemId> = common
            .ones()
            .filter(|&z| toward(z).intersection(common).count() == 1)
            .collect();
        match extremes.as_slice() {
            [z] => Ok(*z),
            _ => Err(LatticeError::NotALattice {
                a,
                b,
                count: extremes.len(),
            }),
        }
    }
}

/// The closed interval `[bottom, top]` of a lattice.
#[derive(Debug, Clone)]
pub struct IntervalView<'a> {
    lattice: &'a Lattice,
    bottom: ElemId,
    top: ElemId,
    members: FixedBitSet,
}

impl<'a> IntervalView<'a> {
    pub fn lattice(&self) -> &'a Lattice {
        self.lattice
    }

    pub fn bottom(&self) -> ElemId {
        self.bottom
    }

    pub fn top(&self) -> ElemId {
        self.top
    }

    pub fn contains(&self, id: ElemId) -> bool {
        self.members.contains(id)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.bottom == self.top
    }

    /// Member ids in ascending order.
    pub fn members(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.members.ones()
    }

    /// Members in bottom-first linear-extension order.
    pub fn members_linear(&self) -> Vec<ElemId> {
        self.lattice
            .linear_extension()
            .iter()
            .copied()
            .filter(|&z| self.contains(z))
            .collect()
    }
}
