//! Verification suites run by `mtamari verify`.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use mtamari::export::{census_to_json, write_el_csv, write_mobius_csv};
use mtamari::shelling::{verify_el, VerifyOptions};
use mtamari::topology::{
    mobius_from_bottom, mobius_recursive, mobius_rows, mobius_to_top, spherical_census,
    top_census_by_diff, IntervalKind, TopologyError,
};
use mtamari::{Exec, Lattice};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    El,
    Mobius,
    Spherical,
    Theorem43,
    All,
}

impl Suite {
    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::El, Suite::Mobius, Suite::Spherical, Suite::Theorem43],
            s => vec![s],
        }
    }
}

pub struct Context<'a> {
    pub exec: Exec,
    /// Directory for per-cell report files.
    pub out_dir: Option<&'a Path>,
    /// Send the theorem43 CSV to stdout (single cell, no `--out`).
    pub csv_to_stdout: bool,
}

/// Summary lines go to stderr whenever stdout carries CSV.
fn say(ctx: &Context<'_>, line: String) {
    if ctx.csv_to_stdout {
        eprintln!("{line}");
    } else {
        println!("{line}");
    }
}

fn report_file(ctx: &Context<'_>, name: String) -> Result<Option<(PathBuf, File)>, Failure> {
    let Some(dir) = ctx.out_dir else {
        return Ok(None);
    };
    let path = dir.join(name);
    let file = File::create(&path).map_err(|e| Failure::io(&path, e))?;
    Ok(Some((path, file)))
}

/// Runs `suite` on one lattice. Returns the first assertion failure, if any,
/// as `Err(Failure::Verify)`.
pub fn run(suite: Suite, lat: &Lattice, ctx: &Context<'_>) -> Result<(), Failure> {
    let mut first_failure = None;
    for s in suite.expand() {
        let outcome = match s {
            Suite::El => el(lat, ctx),
            Suite::Mobius => mobius(lat, ctx),
            Suite::Spherical => spherical(lat, ctx),
            Suite::Theorem43 => theorem43(lat, ctx),
            Suite::All => unreachable!("expanded above"),
        };
        match outcome {
            Ok(()) => {}
            Err(Failure::Verify(msg)) => {
                say(ctx, format!("FAIL {msg}"));
                first_failure.get_or_insert(Failure::Verify(msg));
            }
            Err(other) => return Err(other),
        }
    }
    first_failure.map_or(Ok(()), Err)
}

fn cell(lat: &Lattice) -> String {
    format!("m={} n={}", lat.m(), lat.n())
}

fn el(lat: &Lattice, ctx: &Context<'_>) -> Result<(), Failure> {
    let opts = VerifyOptions { exec: ctx.exec, ..VerifyOptions::default() };
    let report = verify_el(lat, &opts).map_err(|e| Failure::Verify(format!("el {}: {e}", cell(lat))))?;
    if let Some((path, file)) = report_file(ctx, format!("el_m{}_n{}.csv", lat.m(), lat.n()))? {
        write_el_csv(lat, &report, file).map_err(|e| Failure::io(&path, e))?;
    }
    let bad = report.violations().count();
    say(ctx, format!("el {}: {} intervals, {bad} violations", cell(lat), report.intervals.len()));
    let first = report.violations().next().map(|v| {
        format!(
            "el {}: [({}), ({})]: {}",
            cell(lat),
            lat.element(v.bottom),
            lat.element(v.top),
            v.violation.as_deref().unwrap_or("violation")
        )
    });
    first.map_or(Ok(()), |msg| Err(Failure::Verify(msg)))
}

fn mobius(lat: &Lattice, ctx: &Context<'_>) -> Result<(), Failure> {
    let rows = mobius_rows(lat, ctx.exec).map_err(|e| Failure::Verify(format!("mobius {}: {e}", cell(lat))))?;
    if let Some((path, file)) = report_file(ctx, format!("mobius_m{}_n{}.csv", lat.m(), lat.n()))? {
        write_mobius_csv(lat, &rows, file).map_err(|e| Failure::io(&path, e))?;
    }
    let mut failures: Vec<String> = Vec::new();
    let (mut engines, mut range, mut bottom, mut top, mut sphere) = (0, 0, 0, 0, 0);
    for r in &rows {
        let pair = || format!("[({}), ({})]", lat.element(r.bottom), lat.element(r.top));
        if !r.engines_agree() {
            engines += 1;
            failures.push(format!(
                "engines disagree on {}: recursive {} chain {} falling {}",
                pair(),
                r.recursive,
                r.chain,
                r.falling
            ));
        }
        if !(-1..=1).contains(&r.recursive) {
            range += 1;
            failures.push(format!("μ{} = {} out of range", pair(), r.recursive));
        }
        if r.bottom == lat.zero() && mobius_from_bottom(lat.element(r.top), lat.m()) != r.recursive {
            bottom += 1;
            failures.push(format!("μ(0̂, ({})) = {} but closed form at 0̂ disagrees", lat.element(r.top), r.recursive));
        }
        if r.top == lat.one() && mobius_to_top(lat.element(r.bottom), lat.m()) != r.recursive {
            top += 1;
            failures.push(format!("μ(({}), 1̂) = {} but closed form at 1̂ disagrees", lat.element(r.bottom), r.recursive));
        }
        if let IntervalKind::Sphere(d) = r.class.kind {
            let want = if d.rem_euclid(2) == 0 { 1 } else { -1 };
            if r.recursive != want {
                sphere += 1;
                failures.push(format!("{} classified Sphere({d}) but μ = {}", pair(), r.recursive));
            }
        }
    }
    say(
        ctx,
        format!(
            "mobius {}: {} intervals; engine mismatches {engines}, out of range {range}, \
             closed form at 0̂ {bottom}, closed form at 1̂ {top}, unsound spheres {sphere}",
            cell(lat),
            rows.len()
        ),
    );
    match failures.into_iter().next() {
        None => Ok(()),
        Some(first) => Err(Failure::Verify(format!("mobius {}: {first}", cell(lat)))),
    }
}

fn spherical(lat: &Lattice, ctx: &Context<'_>) -> Result<(), Failure> {
    let table = mobius_recursive(lat, ctx.exec);
    let verify = |e: TopologyError| Failure::Verify(format!("spherical {}: {e}", cell(lat)));
    let census = spherical_census(lat, &table).map_err(verify)?;
    let by_diff = top_census_by_diff(lat, &table).map_err(verify)?;
    if let Some((path, mut file)) = report_file(ctx, format!("census_m{}_n{}.json", lat.m(), lat.n()))? {
        writeln!(file, "{}", census_to_json(lat, &census, &by_diff)).map_err(|e| Failure::io(&path, e))?;
    }
    say(
        ctx,
        format!(
            "spherical {}: |S0| = {} |S1| = {} expected {}",
            cell(lat),
            census.from_bottom.len(),
            census.to_top.len(),
            census.expected
        ),
    );
    Ok(())
}

/// Pinned discrepancy set for `m = 2, n = 3`.
const PINNED: [(&str, &str); 2] = [("0,1,2", "0,0,1"), ("0,2,3", "0,1,2")];

fn theorem43(lat: &Lattice, ctx: &Context<'_>) -> Result<(), Failure> {
    let rows = mobius_rows(lat, ctx.exec).map_err(|e| Failure::Verify(format!("theorem43 {}: {e}", cell(lat))))?;
    let flagged: Vec<_> = rows.iter().filter(|r| r.discrepancy.is_some()).collect();
    if let Some((path, file)) = report_file(ctx, format!("theorem43_m{}_n{}.csv", lat.m(), lat.n()))? {
        write_mobius_csv(lat, flagged.iter().copied(), file).map_err(|e| Failure::io(&path, e))?;
    } else if ctx.csv_to_stdout {
        write_mobius_csv(lat, flagged.iter().copied(), io::stdout().lock())
            .map_err(|e| Failure::Usage(format!("writing stdout: {e}")))?;
    }
    let long = flagged
        .iter()
        .filter(|r| lat.interval(r.bottom, r.top).is_ok_and(|v| v.len() > 2))
        .count();
    say(
        ctx,
        format!(
            "theorem43 {}: {} discrepancies ({long} on intervals longer than a cover)",
            cell(lat),
            flagged.len()
        ),
    );
    if (lat.m(), lat.n()) == (2, 3) {
        let mut got: Vec<(String, String)> = flagged
            .iter()
            .map(|r| (lat.element(r.bottom).to_string(), lat.element(r.top).to_string()))
            .collect();
        got.sort();
        let want: Vec<(String, String)> =
            PINNED.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        if got != want || flagged.iter().any(|r| r.recursive != -1) {
            return Err(Failure::Verify(format!(
                "theorem43 m=2 n=3: pinned discrepancy set differs: {got:?}"
            )));
        }
    }
    Ok(())
}
