//! `mtamari`: enumerate, export and verify m-Tamari lattices.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

mod grid;
mod render;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use mtamari::export::{lattice_to_dot, lattice_to_json, write_mobius_csv};
use mtamari::paths::{parse_sequence_literal, PathIter};
use mtamari::topology::{mobius_recursive, mobius_row};
use mtamari::{fuss_catalan, BuildOptions, Exec, Lattice, Params, PathSeq, DEFAULT_GRID};

const ENUMERATE_CAP: u64 = 10_000_000;

#[derive(Parser)]
#[command(name = "mtamari", version, about = "m-Tamari lattices on m-Dyck paths")]
struct Cli {
    /// Worker threads for parallel passes (1 runs sequentially).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Size cap: paths for `enumerate`, lattice elements elsewhere.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,
    /// Output file (`enumerate`, `lattice`, `mobius`) or report directory (`verify`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every path sequence of height n, then the count.
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Export the Hasse diagram.
    Lattice {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
    },
    /// Moebius values for one pair, or the full table as CSV.
    Mobius {
        #[arg(long)]
        m: u32,
        /// Height; inferred from --from/--to when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
    },
    /// Run verification suites over one cell or a grid.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        #[arg(long, requires = "n", conflicts_with = "grid")]
        m: Option<u32>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        /// Cells like `1:2-5,2:2-4,3:2-3,4:2-3` (the default).
        #[arg(long)]
        grid: Option<String>,
    },
    /// Draw a path sequence as ASCII art.
    Render {
        /// Sequence literal, `0,2,4` or `024`.
        seq: String,
        #[arg(long)]
        m: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug)]
pub enum Failure {
    Verify(String),
    Usage(String),
}

impl Failure {
    pub fn io(path: &Path, e: io::Error) -> Self {
        Failure::Usage(format!("{}: {e}", path.display()))
    }

    fn usage(e: impl std::fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Run {
    exec: Exec,
    cap: Option<u64>,
    out: Option<PathBuf>,
}

impl Run {
    fn build(&self, m: u32, n: usize) -> Result<Lattice, Failure> {
        let params = Params::new(m, n).map_err(Failure::usage)?;
        let mut opts = BuildOptions { exec: self.exec, ..BuildOptions::default() };
        if let Some(cap) = self.cap {
            opts.max_elements = cap;
        }
        Lattice::build(params, &opts).map_err(Failure::usage)
    }

    fn sink(&self) -> Result<Box<dyn Write>, Failure> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| Failure::io(path, e))?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    fn write_err(&self, e: io::Error) -> Failure {
        match &self.out {
            Some(path) => Failure::io(path, e),
            None => Failure::Usage(format!("writing stdout: {e}")),
        }
    }
}

fn parse_seq(literal: &str, m: u32) -> Result<PathSeq, Failure> {
    let values = parse_sequence_literal(literal).map_err(Failure::usage)?;
    PathSeq::new(values, m).map_err(Failure::usage)
}

fn enumerate(run: &Run, m: u32, n: usize, format: ListFormat) -> Result<(), Failure> {
    let params = Params::new(m, n).map_err(Failure::usage)?;
    let expected = fuss_catalan(m, n as u64);
    let cap = run.cap.unwrap_or(ENUMERATE_CAP);
    if expected > BigUint::from(cap) {
        return Err(Failure::Usage(format!(
            "m={m} n={n} has {expected} paths, cap is {cap} (raise --cap to proceed)"
        )));
    }
    let mut out = run.sink()?;
    let mut count = 0u64;
    if let ListFormat::Csv = format {
        writeln!(out, "id,seq").map_err(|e| run.write_err(e))?;
    }
    for seq in PathIter::new(params) {
        match format {
            ListFormat::Text => writeln!(out, "{seq}"),
            ListFormat::Csv => writeln!(out, "{count},\"{seq}\""),
        }
        .map_err(|e| run.write_err(e))?;
        count += 1;
    }
    out.flush().map_err(|e| run.write_err(e))?;
    drop(out);
    let summary = format!("count={count} fuss_catalan={expected}");
    // Keep stdout pure CSV; the summary still reaches the terminal.
    match (format, &run.out) {
        (ListFormat::Text, None) => println!("{summary}"),
        _ => eprintln!("{summary}"),
    }
    if BigUint::from(count) == expected {
        Ok(())
    } else {
        Err(Failure::Verify("enumeration count differs from the Fuss-Catalan number".into()))
    }
}

fn export(run: &Run, m: u32, n: usize, format: ExportFormat) -> Result<(), Failure> {
    let lat = run.build(m, n)?;
    let text = match format {
        ExportFormat::Dot => lattice_to_dot(&lat),
        ExportFormat::Json => lattice_to_json(&lat) + "\n",
    };
    let mut out = run.sink()?;
    out.write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .map_err(|e| run.write_err(e))
}

fn mobius(run: &Run, m: u32, n: Option<usize>, pair: Option<(String, String)>) -> Result<(), Failure> {
    let Some((from, to)) = pair else {
        let n = n.ok_or_else(|| Failure::Usage("--n is required without --from/--to".into()))?;
        let lat = run.build(m, n)?;
        let rows = mtamari::topology::mobius_rows(&lat, run.exec).map_err(Failure::usage)?;
        let mut out = run.sink()?;
        return write_mobius_csv(&lat, &rows, &mut out)
            .and_then(|()| out.flush())
            .map_err(|e| run.write_err(e));
    };
    let (a, b) = (parse_seq(&from, m)?, parse_seq(&to, m)?);
    if a.len() != b.len() || n.is_some_and(|n| n != a.len()) {
        return Err(Failure::Usage(format!(
            "sequences ({a}) and ({b}) must both have length {}",
            n.unwrap_or(a.len())
        )));
    }
    let lat = run.build(m, a.len())?;
    let (ia, ib) = (lat.require(&a).map_err(Failure::usage)?, lat.require(&b).map_err(Failure::usage)?);
    let mut out = run.sink()?;
    let mut emit = |line: String| writeln!(out, "{line}").map_err(|e| run.write_err(e));
    if !lat.leq(ia, ib) {
        emit(format!("incomparable: ({a}) is not below ({b})"))?;
        return out.flush().map_err(|e| run.write_err(e));
    }
    let recursive = mobius_recursive(&lat, run.exec).get(ia, ib).expect("comparable pair");
    let view = lat.interval(ia, ib).map_err(Failure::usage)?;
    let row = mobius_row(&view, recursive).map_err(Failure::usage)?;
    emit(format!("a={a} b={b}"))?;
    emit(format!("mu_recursive={}", row.recursive))?;
    emit(format!("mu_chain={}", row.chain))?;
    emit(format!("mu_falling={}", row.falling))?;
    emit(format!("mu_closed={}", row.closed))?;
    emit(format!("class={} D={}", row.class.kind, row.class.witness))?;
    emit(format!("discrepancy={}", row.discrepancy.is_some()))?;
    out.flush().map_err(|e| run.write_err(e))
}

fn verify_cmd(
    run: &Run,
    suite: verify::Suite,
    cell: Option<(u32, usize)>,
    grid: Option<&str>,
) -> Result<(), Failure> {
    let cells = match (cell, grid) {
        (Some(c), _) => vec![c],
        (None, Some(g)) => grid::parse_grid(g).map_err(Failure::Usage)?,
        (None, None) => DEFAULT_GRID.to_vec(),
    };
    if let Some(dir) = &run.out {
        std::fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
    }
    let ctx = verify::Context {
        exec: run.exec,
        out_dir: run.out.as_deref(),
        csv_to_stdout: run.out.is_none() && cells.len() == 1 && suite == verify::Suite::Theorem43,
    };
    let mut first = None;
    for (m, n) in cells {
        let lat = run.build(m, n)?;
        if let Err(f) = verify::run(suite, &lat, &ctx) {
            match f {
                Failure::Verify(_) => {
                    first.get_or_insert(f);
                }
                usage => return Err(usage),
            }
        }
    }
    first.map_or(Ok(()), Err)
}

fn render_cmd(literal: &str, m: u32) -> Result<(), Failure> {
    if m == 0 {
        return Err(Failure::Usage("slope m must be at least 1".into()));
    }
    let seq = parse_seq(literal, m)?;
    print!("{}", render::render(&seq, m));
    Ok(())
}

fn dispatch(cli: Cli, exec: Exec) -> Result<(), Failure> {
    let run = Run { exec, cap: cli.cap, out: cli.out };
    match cli.command {
        Command::Enumerate { m, n, format } => enumerate(&run, m, n, format),
        Command::Lattice { m, n, format } => export(&run, m, n, format),
        Command::Mobius { m, n, from, to } => mobius(&run, m, n, from.zip(to)),
        Command::Verify { suite, m, n, grid } => verify_cmd(&run, suite, m.zip(n), grid.as_deref()),
        Command::Render { seq, m } => render_cmd(&seq, m),
    }
}

#[cfg(feature = "parallel")]
fn with_workers(cli: Cli) -> Result<(), Failure> {
    match cli.workers {
        Some(0) => Err(Failure::Usage("--workers must be at least 1".into())),
        Some(1) => dispatch(cli, Exec::Sequential),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(Failure::usage)?;
            pool.install(|| dispatch(cli, Exec::Parallel))
        }
        None => dispatch(cli, Exec::Parallel),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_workers(cli: Cli) -> Result<(), Failure> {
    if cli.workers == Some(0) {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    dispatch(cli, Exec::Sequential)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match with_workers(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
