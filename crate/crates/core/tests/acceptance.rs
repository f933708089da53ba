//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use mtamari::export::{lattice_from_json, lattice_to_dot, lattice_to_json};
use mtamari::paths::{fuss_catalan, PathIter};
use mtamari::shelling::{maximal_chains, rising_chain, verify_el, LabelWord, VerifyOptions};
use mtamari::topology::{
    mobius_from_bottom, mobius_rows, mobius_to_top, spherical_census, top_census_by_diff, DiffKey,
    IntervalKind, MobiusRow,
};
use mtamari::{BuildOptions, Exec, Lattice, Params, PathSeq, DEFAULT_GRID};

type Outcome = Result<String, String>;

fn build(m: u32, n: usize) -> Lattice {
    Lattice::build(Params::new(m, n).unwrap(), &BuildOptions::default()).unwrap()
}

fn seq(d: &str) -> PathSeq {
    d.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid() -> Vec<(Lattice, Vec<MobiusRow>)> {
    DEFAULT_GRID
        .iter()
        .map(|&(m, n)| {
            let lat = build(m, n);
            let rows = mobius_rows(&lat, Exec::Parallel).unwrap();
            (lat, rows)
        })
        .collect()
}

fn ac1_enumeration() -> Outcome {
    const BUDGET: Duration = Duration::from_secs(60);
    let start = Instant::now();
    let mut cells = 0;
    for m in 1..=4u32 {
        for n in 1..=7usize {
            let expected = fuss_catalan(m, n as u64);
            if expected > BigUint::from(250_000u32) {
                continue;
            }
            let count = PathIter::new(Params::new(m, n).unwrap()).count();
            ensure(BigUint::from(count) == expected, || {
                format!("m={m} n={n}: enumerated {count}, formula {expected}")
            })?;
            cells += 1;
        }
    }
    for (m, n, v) in [(2, 3, 12u32), (3, 4, 140), (3, 5, 969), (1, 8, 1430)] {
        ensure(fuss_catalan(m, n) == BigUint::from(v), || format!("C({m},{n}) != {v}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{cells} cells, {elapsed:.2?}"))
}

/// Labelled Hasse diagram of T_3^(2).
const T32_LABELS: [(&str, &str, (usize, u32)); 16] = [
    ("024", "014", (2, 2)),
    ("024", "023", (3, 4)),
    ("014", "004", (2, 1)),
    ("014", "013", (3, 4)),
    ("004", "003", (3, 4)),
    ("013", "003", (2, 1)),
    ("013", "012", (3, 3)),
    ("003", "002", (3, 3)),
    ("023", "012", (2, 2)),
    ("023", "022", (3, 3)),
    ("002", "001", (3, 2)),
    ("012", "001", (2, 1)),
    ("012", "011", (3, 2)),
    ("022", "011", (2, 2)),
    ("001", "000", (3, 1)),
    ("011", "000", (2, 1)),
];

fn ac2_golden_fixture() -> Outcome {
    let lat = build(2, 3);
    ensure(lat.len() == 12, || format!("{} elements", lat.len()))?;
    ensure(lat.edge_count() == 16, || format!("{} edges", lat.edge_count()))?;
    ensure(lat.element(lat.zero()) == &seq("024"), || "bottom".into())?;
    ensure(lat.element(lat.one()) == &seq("000"), || "top".into())?;
    let mut built: Vec<(String, String, String)> = lat
        .edges()
        .map(|(a, b, i)| {
            let l = mtamari::shelling::cover_label(&lat, a, i);
            (
                lat.element(a).digits().unwrap(),
                lat.element(b).digits().unwrap(),
                l.to_string(),
            )
        })
        .collect();
    let mut drawn: Vec<(String, String, String)> = T32_LABELS
        .iter()
        .map(|(a, b, (j, v))| (a.to_string(), b.to_string(), format!("({j},{v})")))
        .collect();
    built.sort();
    drawn.sort();
    ensure(built == drawn, || format!("labelled edges differ: {built:?}"))?;
    Ok("12 elements, 16 edges, labels match".into())
}

fn ac3_el_property() -> Outcome {
    const CELL_BUDGET: Duration = Duration::from_secs(120);
    let mut intervals = 0usize;
    let mut slowest = Duration::ZERO;
    for &(m, n) in DEFAULT_GRID {
        let start = Instant::now();
        let lat = build(m, n);
        let report = verify_el(&lat, &VerifyOptions::default()).map_err(|e| e.to_string())?;
        if let Some(bad) = report.violations().next() {
            return Err(format!(
                "m={m} n={n} [{},{}]: {}",
                lat.element(bad.bottom),
                lat.element(bad.top),
                bad.violation.as_deref().unwrap_or("")
            ));
        }
        for row in &report.intervals {
            ensure(row.num_rising == 1 && row.lex_first_is_rising && row.num_falling <= 1, || {
                format!("m={m} n={n}: bad row {row:?}")
            })?;
        }
        intervals += report.intervals.len();
        let elapsed = start.elapsed();
        ensure(elapsed < CELL_BUDGET, || format!("m={m} n={n} took {elapsed:?}"))?;
        slowest = slowest.max(elapsed);
    }
    Ok(format!("{intervals} intervals, 0 violations, slowest cell {slowest:.2?}"))
}

fn ac4_rising_chain_fixture() -> Outcome {
    let lat = build(2, 3);
    let full = lat.interval(lat.zero(), lat.one()).map_err(|e| e.to_string())?;
    let rising = rising_chain(&full).map_err(|e| e.to_string())?;
    let expected = LabelWord::from(&[(2, 2), (2, 1), (3, 4), (3, 3), (3, 2), (3, 1)][..]);
    ensure(rising.word == expected, || format!("rising word {}", rising.word))?;
    let chains: Vec<_> = maximal_chains(&full).collect();
    ensure(chains.len() == 7, || format!("{} maximal chains", chains.len()))?;
    let rising_count = chains.iter().filter(|c| mtamari::shelling::is_rising(c)).count();
    ensure(rising_count == 1 && chains[0] == rising, || "rising chain not unique/first".into())?;
    Ok(format!("word {expected}, 7 maximal chains"))
}

fn ac5_engines(grid: &[(Lattice, Vec<MobiusRow>)]) -> Outcome {
    let mut count = 0;
    for (lat, rows) in grid {
        for r in rows {
            ensure(r.engines_agree(), || {
                format!(
                    "m={} n={} [({}), ({})]: recursive {} chain {} falling {}",
                    lat.m(),
                    lat.n(),
                    lat.element(r.bottom),
                    lat.element(r.top),
                    r.recursive,
                    r.chain,
                    r.falling
                )
            })?;
            ensure((-1..=1).contains(&r.recursive), || format!("μ = {} out of range", r.recursive))?;
            count += 1;
        }
    }
    Ok(format!("{count} intervals, three engines equal, μ ∈ {{-1,0,1}}"))
}

fn ac6_extreme_closed_forms(grid: &[(Lattice, Vec<MobiusRow>)]) -> Outcome {
    let mut checked = 0;
    let mut bottom_bad = Vec::new();
    let mut top_bad = Vec::new();
    for (lat, rows) in grid {
        let oracle: BTreeMap<(usize, usize), i64> =
            rows.iter().map(|r| ((r.bottom, r.top), r.recursive)).collect();
        for a in 0..lat.len() {
            let e = lat.element(a);
            let from_bottom = oracle[&(lat.zero(), a)];
            let to_top = oracle[&(a, lat.one())];
            let closed = mobius_from_bottom(e, lat.m());
            if closed != from_bottom {
                bottom_bad.push(format!("m={} ({e}): {closed} vs {from_bottom}", lat.m()));
            }
            let closed = mobius_to_top(e, lat.m());
            if closed != to_top {
                top_bad.push(format!("m={} ({e}): {closed} vs {to_top}", lat.m()));
            }
            checked += 1;
        }
    }
    let lat = build(2, 3);
    let table = mtamari::topology::mobius_recursive(&lat, Exec::Sequential);
    let census = spherical_census(&lat, &table).map_err(|e| e.to_string())?;
    let names = |ids: &[usize]| {
        let mut v: Vec<String> = ids.iter().map(|&i| lat.element(i).digits().unwrap()).collect();
        v.sort();
        v
    };
    ensure(names(&census.from_bottom) == ["012", "014", "023", "024"], || {
        format!("S0 = {:?}", names(&census.from_bottom))
    })?;
    ensure(names(&census.to_top) == ["000", "001", "011", "012"], || {
        format!("S1 = {:?}", names(&census.to_top))
    })?;
    ensure(bottom_bad.is_empty() && top_bad.is_empty(), || {
        format!(
            "S0/S1 fixture matches, but closed form differs from recursion on {} of {checked} \
             elements at 0̂ (e.g. {}) and {} at 1̂ (e.g. {})",
            bottom_bad.len(),
            bottom_bad.first().map_or("-", String::as_str),
            top_bad.len(),
            top_bad.first().map_or("-", String::as_str),
        )
    })?;
    Ok(format!("{checked} elements, S0/S1 fixture matches"))
}

fn ac7_census(grid: &[(Lattice, Vec<MobiusRow>)]) -> Outcome {
    for (lat, _) in grid {
        let table = mtamari::topology::mobius_recursive(lat, Exec::Parallel);
        let census = spherical_census(lat, &table).map_err(|e| format!("m={} n={}: {e}", lat.m(), lat.n()))?;
        let expected = 1usize << (lat.n() - 1);
        ensure(census.from_bottom.len() == expected && census.to_top.len() == expected, || {
            "census size".into()
        })?;
        let groups = top_census_by_diff(lat, &table).map_err(|e| e.to_string())?;
        for i in 2..=lat.n() {
            let got = groups.get(&DiffKey::range(i, lat.n())).copied().unwrap_or(0);
            ensure(got == 1 << (lat.n() - i), || format!("D=[{i},{}] count {got}", lat.n()))?;
        }
        ensure(groups.get(&DiffKey::default()) == Some(&1), || "empty key".into())?;
    }
    Ok(format!("{} cells, |S0| = |S1| = 2^(n-1), grouping 2^(n-i)", grid.len()))
}

fn ac8_sphere_soundness(grid: &[(Lattice, Vec<MobiusRow>)]) -> Outcome {
    let mut spheres = 0;
    let mut bad = Vec::new();
    for (lat, rows) in grid {
        for r in rows {
            if let IntervalKind::Sphere(d) = r.class.kind {
                let want = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                if r.recursive != want {
                    bad.push(format!(
                        "m={} [({}), ({})] Sphere({d}) μ={}",
                        lat.m(),
                        lat.element(r.bottom),
                        lat.element(r.top),
                        r.recursive
                    ));
                }
                spheres += 1;
            }
        }
    }
    ensure(bad.is_empty(), || {
        format!("{} of {spheres} sphere classifications disagree: {}", bad.len(), bad.join("; "))
    })?;
    Ok(format!("{spheres} sphere classifications, all match μ = (-1)^d"))
}

fn ac9_discrepancy_fixture() -> Outcome {
    let lat = build(2, 3);
    let rows = mobius_rows(&lat, Exec::Sequential).map_err(|e| e.to_string())?;
    let mut flagged: Vec<(String, String, i64)> = rows
        .iter()
        .filter(|r| r.class.kind == IntervalKind::Point && r.recursive != 0)
        .map(|r| {
            (
                lat.element(r.bottom).digits().unwrap(),
                lat.element(r.top).digits().unwrap(),
                r.recursive,
            )
        })
        .collect();
    flagged.sort();
    let expected = vec![
        ("012".to_string(), "001".to_string(), -1),
        ("023".to_string(), "012".to_string(), -1),
    ];
    ensure(flagged == expected, || format!("report {flagged:?}"))?;
    Ok("exactly (012,001) and (023,012), both μ = -1".into())
}

fn ac10_serialization() -> Outcome {
    for &(m, n) in DEFAULT_GRID {
        let lat = build(m, n);
        let json = lattice_to_json(&lat);
        let back = lattice_from_json(&json, &BuildOptions::default()).map_err(|e| e.to_string())?;
        ensure(back == lat && lattice_to_json(&back) == json, || format!("m={m} n={n}: JSON round trip"))?;
        let dot = lattice_to_dot(&lat);
        let nodes = dot.lines().filter(|l| l.contains(" [label=") && !l.contains("->")).count();
        let edges = dot.lines().filter(|l| l.contains(" -> ")).count();
        ensure(nodes == lat.len() && edges == lat.edge_count(), || {
            format!("m={m} n={n}: DOT has {nodes} nodes / {edges} edges")
        })?;
        let parsed = mtamari::export::LatticeExport::from_lattice(&lat);
        ensure(parsed.elements.len() == nodes && parsed.covers.len() == edges, || {
            "JSON and DOT disagree".into()
        })?;
    }
    Ok(format!("{} cells round-trip, DOT counts match", DEFAULT_GRID.len()))
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut results: Vec<(&str, Outcome)> = vec![
        ("AC1 enumeration counts", ac1_enumeration()),
        ("AC2 golden T_3^(2) fixture", ac2_golden_fixture()),
        ("AC3 EL property on grid", ac3_el_property()),
        ("AC4 rising-chain fixture", ac4_rising_chain_fixture()),
    ];
    let grid = grid();
    results.push(("AC5 Moebius engine agreement", ac5_engines(&grid)));
    results.push(("AC6 closed forms at 0̂ and 1̂", ac6_extreme_closed_forms(&grid)));
    results.push(("AC7 spherical censuses", ac7_census(&grid)));
    results.push(("AC8 sphere-direction soundness", ac8_sphere_soundness(&grid)));
    results.push(("AC9 point-direction discrepancy fixture", ac9_discrepancy_fixture()));
    results.push(("AC10 JSON/DOT serialization", ac10_serialization()));

    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed ({:.2?})",
        results.len() - failed,
        started.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
