//! Text formats: lattice JSON (both directions), DOT, CSV reports and the
//! census JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::lattice::{BuildOptions, ElemId, Lattice, LatticeError};
use crate::paths::{PathSeq, Params};
use crate::shelling::{cover_label, ElReport};
use crate::topology::{Census, DiffKey, MobiusRow};

/// Serialized lattice. Field order is the output order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeExport {
    pub m: u32,
    pub n: usize,
    pub elements: Vec<Vec<u32>>,
    /// `[from, to, position]`.
    pub covers: Vec<[usize; 3]>,
    pub zero: ElemId,
    pub one: ElemId,
}

impl LatticeExport {
    pub fn from_lattice(lat: &Lattice) -> Self {
        LatticeExport {
            m: lat.m(),
            n: lat.n(),
            elements: lat.elements().iter().map(|e| e.values().to_vec()).collect(),
            covers: lat.edges().map(|(a, b, i)| [a, b, i]).collect(),
            zero: lat.zero(),
            one: lat.one(),
        }
    }

    pub fn into_lattice(self, opts: &BuildOptions) -> Result<Lattice, LatticeError> {
        let params = Params::new(self.m, self.n)?;
        let elements = self
            .elements
            .into_iter()
            .map(|v| PathSeq::new(v, self.m))
            .collect::<Result<Vec<_>, _>>()?;
        let edges: Vec<(ElemId, ElemId, usize)> =
            self.covers.iter().map(|&[a, b, i]| (a, b, i)).collect();
        let lat = Lattice::from_parts(params, elements, &edges, opts)?;
        if lat.zero() != self.zero || lat.one() != self.one {
            return Err(LatticeError::InvalidExport(format!(
                "zero/one ({}, {}) do not match elements ({}, {})",
                self.zero,
                self.one,
                lat.zero(),
                lat.one()
            )));
        }
        Ok(lat)
    }
}

pub fn lattice_to_json(lat: &Lattice) -> String {
    serde_json::to_string(&LatticeExport::from_lattice(lat)).expect("plain data serializes")
}

pub fn lattice_from_json(text: &str, opts: &BuildOptions) -> Result<Lattice, LatticeError> {
    let export: LatticeExport =
        serde_json::from_str(text).map_err(|e| LatticeError::InvalidExport(e.to_string()))?;
    export.into_lattice(opts)
}

/// Hasse diagram drawn bottom-to-top, edges labelled `(j,aj)`.
pub fn lattice_to_dot(lat: &Lattice) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"T_{}^({})\" {{", lat.n(), lat.m()).unwrap();
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for (id, e) in lat.elements().iter().enumerate() {
        writeln!(out, "  n{id} [label=\"{e}\"];").unwrap();
    }
    for (a, b, i) in lat.edges() {
        writeln!(out, "  n{a} -> n{b} [label=\"{}\"];", cover_label(lat, a, i)).unwrap();
    }
    out.push_str("}\n");
    out
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

/// `a,b,num_chains,num_rising,num_falling,lex_first_is_rising,violation`,
/// with `a` and `b` as sequence literals.
pub fn write_el_csv<W: io::Write>(lat: &Lattice, report: &ElReport, out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "a",
        "b",
        "num_chains",
        "num_rising",
        "num_falling",
        "lex_first_is_rising",
        "violation",
    ])
    .map_err(csv_err)?;
    for row in &report.intervals {
        w.write_record([
            lat.element(row.bottom).to_string(),
            lat.element(row.top).to_string(),
            row.num_chains.to_string(),
            row.num_rising.to_string(),
            row.num_falling.to_string(),
            row.lex_first_is_rising.to_string(),
            row.violation.clone().unwrap_or_default(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()
}

/// `a_id,a_seq,b_id,b_seq,mu_recursive,mu_chain,mu_falling,mu_closed,class,D_size,discrepancy`.
pub fn write_mobius_csv<'r, W, I>(lat: &Lattice, rows: I, out: W) -> io::Result<()>
where
    W: io::Write,
    I: IntoIterator<Item = &'r MobiusRow>,
{
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "a_id",
        "a_seq",
        "b_id",
        "b_seq",
        "mu_recursive",
        "mu_chain",
        "mu_falling",
        "mu_closed",
        "class",
        "D_size",
        "discrepancy",
    ])
    .map_err(csv_err)?;
    for r in rows {
        w.write_record([
            r.bottom.to_string(),
            lat.element(r.bottom).to_string(),
            r.top.to_string(),
            lat.element(r.top).to_string(),
            r.recursive.to_string(),
            r.chain.to_string(),
            r.falling.to_string(),
            r.closed.to_string(),
            r.class.kind.to_string(),
            r.class.witness.len().to_string(),
            r.discrepancy.is_some().to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusExport {
    pub m: u32,
    pub n: usize,
    #[serde(rename = "S0")]
    pub s0: Vec<ElemId>,
    #[serde(rename = "S1")]
    pub s1: Vec<ElemId>,
    pub expected: u64,
    /// Keyed by the diff-set written as `{i,...}`.
    pub by_diff: BTreeMap<String, usize>,
}

pub fn census_to_json(lat: &Lattice, census: &Census, by_diff: &BTreeMap<DiffKey, usize>) -> String {
    let export = CensusExport {
        m: lat.m(),
        n: lat.n(),
        s0: census.from_bottom.clone(),
        s1: census.to_top.clone(),
        expected: census.expected,
        by_diff: by_diff.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
    };
    serde_json::to_string(&export).expect("plain data serializes")
}
