mod dataset;
mod format;
mod report;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use dataset::{box_points, disc_points, Dataset, DATASET_SIZE};
use format::{fmt_complex, fmt_f64, parse_complex, parse_field};
use num_complex::Complex64;
use polylog::oracle::oracle_polylog;
use polylog::special::riemann_zeta;
use polylog::{polylog, EvaluationConfig, EvaluationResult};
use rayon::prelude::*;
use report::AccuracyReport;
use std::fs::File;
use std::hint::black_box;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const BATCH_HEADER: [&str; 10] = [
    "s_re",
    "s_im",
    "z_re",
    "z_im",
    "li_re",
    "li_im",
    "method",
    "terms",
    "depth",
    "converged",
];
const REFERENCE_HEADER: [&str; 6] = ["s_re", "s_im", "z_re", "z_im", "ref_re", "ref_im"];

#[derive(Parser)]
#[command(
    name = "polylog",
    version,
    about = "Evaluate and test the polylogarithm Li_s(z)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct GoalArg {
    /// Relative accuracy goal
    #[arg(long, default_value_t = 1e-12)]
    goal: f64,
}

impl GoalArg {
    fn config(self) -> Result<EvaluationConfig> {
        let config = EvaluationConfig {
            accuracy_goal: self.goal,
            ..EvaluationConfig::default()
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Li_s(z) at one point
    Eval {
        /// Parameter, e.g. 2, -1.5, 0.5+3i
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Argument, e.g. 2, -0.5, 1-2i
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[command(flatten)]
        goal: GoalArg,
        /// Also print method, term count and recursion depth
        #[arg(long)]
        verbose: bool,
    },
    /// Evaluate every row "s_re,s_im,z_re,z_im" of a CSV file
    Batch {
        input: PathBuf,
        /// Output CSV (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        goal: GoalArg,
    },
    /// Compare against reference rows "s_re,s_im,z_re,z_im,ref_re,ref_im"
    Compare {
        input: PathBuf,
        /// Histogram CSV (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        goal: GoalArg,
    },
    /// Time polylog against riemann_zeta on a random dataset
    Bench {
        #[arg(long, value_enum, default_value_t = Dataset::Box2)]
        dataset: Dataset,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Passes over the dataset
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Write oracle reference values for random s in the 16x16 box and |z| <= radius
    GenReference {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0.9)]
        radius: f64,
        /// Output CSV (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval {
            s,
            z,
            goal,
            verbose,
        } => cmd_eval(&s, &z, goal, verbose),
        Command::Batch { input, out, goal } => cmd_batch(&input, out.as_deref(), goal),
        Command::Compare { input, out, goal } => cmd_compare(&input, out.as_deref(), goal),
        Command::Bench {
            dataset,
            seed,
            iterations,
        } => cmd_bench(dataset, seed, iterations),
        Command::GenReference {
            count,
            seed,
            radius,
            out,
        } => cmd_gen_reference(count, seed, radius, out.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn read_records(path: &Path) -> Result<Vec<csv::StringRecord>> {
    let mut text = String::new();
    File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .with_context(|| format!("cannot read {}", path.display()))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.with_context(|| format!("{}: bad CSV", path.display()))?;
        let blank = rec.iter().all(|f| f.is_empty());
        let header = i == 0 && rec.get(0).is_some_and(|f| f.parse::<f64>().is_err());
        if !blank && !header {
            records.push(rec);
        }
    }
    Ok(records)
}

fn numbers(rec: &csv::StringRecord, want: usize) -> Result<Vec<f64>> {
    if rec.len() != want {
        anyhow::bail!("expected {want} fields, found {}", rec.len());
    }
    rec.iter().map(parse_field).collect()
}

fn cmd_eval(s: &str, z: &str, goal: GoalArg, verbose: bool) -> Result<u8> {
    let s = parse_complex(s).context("--s")?;
    let z = parse_complex(z).context("--z")?;
    let r = polylog(s, z, &goal.config()?)?;
    println!("{}", fmt_complex(r.value));
    if verbose {
        println!("method: {}", r.method);
        println!("terms: {}", r.terms_used);
        println!("depth: {}", r.recursion_depth);
        println!("converged: {}", r.converged);
    }
    if r.is_pole {
        println!("note: pole at z = 1 for Re(s) <= 1");
    }
    if !r.converged {
        eprintln!("warning: series stopped at the term limit");
        return Ok(2);
    }
    Ok(0)
}

fn batch_row(
    rec: &csv::StringRecord,
    config: &EvaluationConfig,
) -> Result<(Vec<f64>, EvaluationResult)> {
    let v = numbers(rec, 4)?;
    let r = polylog(
        Complex64::new(v[0], v[1]),
        Complex64::new(v[2], v[3]),
        config,
    )?;
    Ok((v, r))
}

fn cmd_batch(input: &Path, out: Option<&Path>, goal: GoalArg) -> Result<u8> {
    let config = goal.config()?;
    let records = read_records(input)?;
    let results: Vec<_> = records
        .par_iter()
        .map(|rec| batch_row(rec, &config))
        .collect();
    let mut writer = csv::Writer::from_writer(output(out)?);
    writer.write_record(BATCH_HEADER)?;
    let mut failed = 0;
    for (line, (rec, result)) in records.iter().zip(&results).enumerate() {
        match result {
            Ok((v, r)) => {
                let mut row: Vec<String> = v.iter().map(|&x| fmt_f64(x)).collect();
                row.extend([
                    fmt_f64(r.value.re),
                    fmt_f64(r.value.im),
                    r.method.to_string(),
                    r.terms_used.to_string(),
                    r.recursion_depth.to_string(),
                    r.converged.to_string(),
                ]);
                writer.write_record(&row)?;
            }
            Err(e) => {
                failed += 1;
                eprintln!("row {}: {e:#}", line + 1);
                let mut row: Vec<String> = (0..4)
                    .map(|i| rec.get(i).unwrap_or("").to_string())
                    .collect();
                row.extend(["nan", "nan", "Error", "0", "0", "false"].map(String::from));
                writer.write_record(&row)?;
            }
        }
    }
    writer.flush()?;
    Ok(if failed > 0 { 3 } else { 0 })
}

enum RowError {
    Relative(f64),
    Absolute(f64),
}

fn compare_row(rec: &csv::StringRecord, config: &EvaluationConfig) -> Result<RowError> {
    let v = numbers(rec, 6)?;
    let reference = Complex64::new(v[4], v[5]);
    let value = polylog(
        Complex64::new(v[0], v[1]),
        Complex64::new(v[2], v[3]),
        config,
    )?
    .value;
    let diff = (value - reference).norm();
    Ok(if reference.norm() == 0.0 {
        RowError::Absolute(diff)
    } else {
        RowError::Relative(diff / reference.norm())
    })
}

fn cmd_compare(input: &Path, out: Option<&Path>, goal: GoalArg) -> Result<u8> {
    let config = goal.config()?;
    let records = read_records(input)?;
    let rows: Vec<_> = records
        .par_iter()
        .map(|rec| compare_row(rec, &config))
        .collect();
    let mut errors = Vec::with_capacity(rows.len());
    for (line, row) in rows.into_iter().enumerate() {
        match row {
            Ok(RowError::Relative(e)) => errors.push(e),
            Ok(RowError::Absolute(e)) => {
                println!(
                    "row {}: absolute-error row (zero reference), error {}",
                    line + 1,
                    fmt_f64(e)
                );
                errors.push(e);
            }
            Err(e) => {
                println!("row {}: evaluation failed: {e:#}", line + 1);
                errors.push(f64::INFINITY);
            }
        }
    }
    let report = AccuracyReport::from_errors(&errors, config.accuracy_goal);
    let mut writer = csv::Writer::from_writer(output(out)?);
    writer.write_record(["log10_error_lower", "count"])?;
    for (edge, count) in &report.histogram {
        writer.write_record([fmt_f64(*edge), count.to_string()])?;
    }
    writer.flush()?;
    drop(writer);
    println!(
        "total={} exceed={} max={}",
        report.total,
        report.exceed_goal,
        fmt_f64(report.max_rel_error)
    );
    Ok(0)
}

fn cmd_bench(dataset: Dataset, seed: u64, iterations: usize) -> Result<u8> {
    let iterations = iterations.max(1);
    let points = box_points(dataset, seed, DATASET_SIZE);
    let config = EvaluationConfig::default();
    let mut failures = 0;
    let start = Instant::now();
    for _ in 0..iterations {
        for &(s, z) in &points {
            if black_box(polylog(black_box(s), black_box(z), &config)).is_err() {
                failures += 1;
            }
        }
    }
    let polylog_ns = start.elapsed().as_nanos() as f64 / (iterations * points.len()) as f64;
    let start = Instant::now();
    for _ in 0..iterations {
        for &(s, _) in &points {
            let _ = black_box(riemann_zeta(black_box(s)));
        }
    }
    let zeta_ns = start.elapsed().as_nanos() as f64 / (iterations * points.len()) as f64;
    println!(
        "dataset={} points={} iterations={iterations} seed={seed}",
        dataset.name(),
        points.len()
    );
    println!("polylog_mean_ns={polylog_ns:.1}");
    println!("zeta_mean_ns={zeta_ns:.1}");
    println!("ratio={:.2}", polylog_ns / zeta_ns);
    println!("failed_evaluations={failures}");
    Ok(0)
}

fn cmd_gen_reference(count: usize, seed: u64, radius: f64, out: Option<&Path>) -> Result<u8> {
    if !(radius > 0.0 && radius <= 0.99) {
        anyhow::bail!("--radius must lie in (0, 0.99]");
    }
    let points = disc_points(seed, count, radius);
    let values: Vec<_> = points
        .par_iter()
        .map(|&(s, z)| oracle_polylog(s, z).map(|v| v.to_complex()))
        .collect();
    let mut writer = csv::Writer::from_writer(output(out)?);
    writer.write_record(REFERENCE_HEADER)?;
    let mut skipped = 0;
    for ((s, z), v) in points.iter().zip(values) {
        match v {
            Ok(v) if v.re.is_finite() && v.im.is_finite() => {
                writer.write_record([s.re, s.im, z.re, z.im, v.re, v.im].map(fmt_f64))?;
            }
            _ => skipped += 1,
        }
    }
    writer.flush()?;
    if skipped > 0 {
        eprintln!("skipped {skipped} points outside the oracle's reach");
    }
    Ok(0)
}
