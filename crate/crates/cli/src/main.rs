//! Command-line front end for the spin^c index and curvature-bound engine.
//!
//! Exit codes: 0 success, 2 parity violation, 3 malformed input,
//! 4 failed agreement or residual check.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use report::{HilbertReport, IndexReport, Row};
use spinc_bounds::comass::TwoForm;
use spinc_bounds::fsgeometry::{expected_kappa, verify_identities_with_step, ChartPoint};
use spinc_bounds::indextheory::{
    cpn_hilbert, hilbert_polynomial, index_lattice_sum, index_residue, index_strict, scan_family,
    CompleteIntersection, IndexError,
};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_PARITY: u8 = 2;
const EXIT_BAD_INPUT: u8 = 3;
const EXIT_CHECK_FAILED: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "spinc-bounds")]
#[command(about = "exact Dirac indices, Hilbert polynomials, and scalar-curvature bounds \
for complete intersections; numerical 2-form norms and Fubini-Study checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Index of the Dirac operator with twist k on V^n(degrees)
    Index {
        /// Complex dimension n
        #[arg(long)]
        n: u32,
        /// Comma-separated hypersurface degrees; empty means CP^n
        #[arg(long, default_value = "")]
        degrees: String,
        /// Integer twist k (must satisfy k === n+r+1-|a| mod 2)
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Also print the residue-route and lattice-sum values
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hilbert polynomial of V^n(degrees) and its valid-parity zeros
    Hilbert {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "")]
        degrees: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Scalar-curvature bound of V^n(degrees): value, case, k0
    Bound {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "")]
        degrees: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Bound table over a family of complete intersections, with
    /// per-row agreement checks (this is also the regression harness)
    Scan {
        /// Largest complex dimension (n starts at 1)
        #[arg(long)]
        n_max: u32,
        /// Largest codimension (r starts at 0)
        #[arg(long, default_value_t = 0)]
        r_max: u32,
        /// Largest hypersurface degree
        #[arg(long, default_value_t = 1)]
        degree_max: u32,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Comass norm of a skew matrix read from a file
    /// (whitespace-separated entries, one line per row)
    Norm { file: PathBuf },
    /// Verify the Fubini-Study curvature identities on CP^n numerically
    Fscheck {
        #[arg(long)]
        n: u32,
        /// Number of random chart points (the origin is always included)
        #[arg(long, default_value_t = 50)]
        samples: u32,
        /// Finite-difference step
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Residual tolerance
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };
    init_thread_pool();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.exit_code)
        }
    }
}

struct Failure {
    exit_code: u8,
    message: String,
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        exit_code: EXIT_BAD_INPUT,
        message: message.into(),
    }
}

fn check_failed(message: impl Into<String>) -> Failure {
    Failure {
        exit_code: EXIT_CHECK_FAILED,
        message: message.into(),
    }
}

/// Cap rayon's parallelism from SPINC_BOUNDS_THREADS when set.
fn init_thread_pool() {
    if let Ok(raw) = std::env::var("SPINC_BOUNDS_THREADS") {
        if let Ok(threads) = raw.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn parse_degrees(raw: &str) -> Result<Vec<u32>, Failure> {
    let mut degrees = Vec::new();
    for token in raw.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let a: u32 = token
            .parse()
            .map_err(|_| bad_input(format!("degree '{}' is not a positive integer", token)))?;
        degrees.push(a);
    }
    Ok(degrees)
}

fn build_ci(n: u32, degrees: &str) -> Result<CompleteIntersection, Failure> {
    let degrees = parse_degrees(degrees)?;
    CompleteIntersection::new(n, degrees).map_err(|e| bad_input(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Index {
            n,
            degrees,
            k,
            verify,
            format,
        } => cmd_index(n, &degrees, k, verify, format),
        Command::Hilbert { n, degrees, format } => cmd_hilbert(n, &degrees, format),
        Command::Bound { n, degrees, format } => cmd_bound(n, &degrees, format),
        Command::Scan {
            n_max,
            r_max,
            degree_max,
            format,
        } => cmd_scan(n_max, r_max, degree_max, format),
        Command::Norm { file } => cmd_norm(&file),
        Command::Fscheck {
            n,
            samples,
            step,
            seed,
            tol,
        } => cmd_fscheck(n, samples, step, seed, tol),
    }
}

fn emit_rows(rows: &[Row], format: Format) {
    match format {
        Format::Json => println!("{}", report::emit_json(rows)),
        Format::Csv => print!("{}", report::emit_csv(rows)),
        Format::Markdown => print!("{}", report::emit_markdown(rows)),
        Format::Text => unreachable!("text output is command-specific"),
    }
}

fn cmd_index(n: u32, degrees: &str, k: i64, verify: bool, format: Format) -> Result<(), Failure> {
    let ci = build_ci(n, degrees)?;
    let value = index_strict(&ci, k).map_err(|e| match e {
        IndexError::ParityViolation { .. } => Failure {
            exit_code: EXIT_PARITY,
            message: e.to_string(),
        },
        other => bad_input(other.to_string()),
    })?;
    let residue = verify.then(|| index_residue(&ci, k));
    let lattice = verify.then(|| index_lattice_sum(&ci, k));

    if format == Format::Text {
        println!("{}", value);
        if verify {
            let residue = residue.as_ref().expect("computed under --verify");
            let lattice = lattice.as_ref().expect("computed under --verify");
            println!("residue route: {}", residue);
            println!("lattice sum:   {}", lattice);
            let ok = residue.is_integer()
                && lattice.is_integer()
                && residue.to_integer() == value
                && lattice.to_integer() == value;
            println!("agreement:     {}", if ok { "ok" } else { "MISMATCH" });
            if !ok {
                return Err(check_failed("index routes disagree"));
            }
        }
        return Ok(());
    }

    let mut row = Row::base(&ci);
    row.index = Some(IndexReport {
        k,
        value: value.to_string(),
        residue: residue.map(|r| r.to_integer().to_string()),
        lattice_sum: lattice.map(|l| l.to_integer().to_string()),
    });
    emit_rows(&[row], format);
    Ok(())
}

fn hilbert_report(ci: &CompleteIntersection) -> HilbertReport {
    let p = if ci.codimension() == 0 {
        cpn_hilbert(ci.n())
    } else {
        hilbert_polynomial(ci)
    };
    let window = 2 * ci.n() as i64;
    let zeros: Vec<i64> = p
        .integer_zeros_in(-window, window)
        .into_iter()
        .filter(|&k| ci.valid_parity(k))
        .collect();
    HilbertReport {
        polynomial: p.to_string(),
        coefficients: p.coeffs().iter().map(|c| c.to_string()).collect(),
        zeros,
    }
}

fn cmd_hilbert(n: u32, degrees: &str, format: Format) -> Result<(), Failure> {
    let ci = build_ci(n, degrees)?;
    let report = hilbert_report(&ci);
    if format == Format::Text {
        println!("P(k) = {}", report.polynomial);
        println!(
            "coefficients (ascending degree): {}",
            report.coefficients.join(", ")
        );
        println!(
            "zeros among valid-parity integers in [{}, {}]: {}",
            -2 * ci.n() as i64,
            2 * ci.n() as i64,
            if report.zeros.is_empty() {
                "none".to_string()
            } else {
                report
                    .zeros
                    .iter()
                    .map(|z| z.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            }
        );
        return Ok(());
    }
    let mut row = Row::base(&ci);
    row.hilbert = Some(report);
    emit_rows(&[row], format);
    Ok(())
}

fn cmd_bound(n: u32, degrees: &str, format: Format) -> Result<(), Failure> {
    let ci = build_ci(n, degrees)?;
    let row = Row::base(&ci);
    if format == Format::Text {
        println!(
            "bound: {}   case: {}   k0: {}   table=search: {}",
            row.bound.value,
            row.bound.case,
            row.bound.k0,
            if row.bound.agree { "agree" } else { "DISAGREE" }
        );
        if let Some(note) = &row.bound.note {
            println!("note: {}", note);
        }
    } else {
        emit_rows(&[row], format);
    }
    Ok(())
}

fn cmd_scan(n_max: u32, r_max: u32, degree_max: u32, format: Format) -> Result<(), Failure> {
    if n_max == 0 || degree_max == 0 {
        return Err(bad_input("scan ranges must be nonempty"));
    }
    let family = scan_family(n_max, r_max, degree_max);
    // rows are independent; collect preserves family order, so output is
    // deterministic regardless of thread count
    use rayon::prelude::*;
    let rows: Vec<Row> = family.par_iter().map(Row::base).collect();
    if format == Format::Text {
        emit_rows(&rows, Format::Markdown);
    } else {
        emit_rows(&rows, format);
    }
    let failures: Vec<&Row> = rows.iter().filter(|r| !r.all_checks_pass()).collect();
    if !failures.is_empty() {
        return Err(check_failed(format!(
            "{} of {} rows failed an agreement check",
            failures.len(),
            rows.len()
        )));
    }
    Ok(())
}

fn cmd_norm(file: &std::path::Path) -> Result<(), Failure> {
    let content = std::fs::read_to_string(file)
        .map_err(|e| bad_input(format!("cannot read {}: {}", file.display(), e)))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<f64>, _> = line.split_whitespace().map(str::parse::<f64>).collect();
        let row =
            row.map_err(|e| bad_input(format!("line {}: bad entry: {}", lineno + 1, e)))?;
        rows.push(row);
    }
    let d = rows.len();
    if d == 0 {
        return Err(bad_input("matrix file is empty"));
    }
    if rows.iter().any(|r| r.len() != d) {
        return Err(bad_input(format!("matrix must be square ({} rows)", d)));
    }
    if rows.iter().flatten().any(|v| !v.is_finite()) {
        return Err(bad_input("matrix entries must be finite"));
    }
    let alpha = TwoForm::from_entries(&rows).map_err(|e| bad_input(e.to_string()))?;
    let norm = alpha.norm().map_err(|e| bad_input(e.to_string()))?;
    println!("{:.12}", norm);
    Ok(())
}

fn cmd_fscheck(n: u32, samples: u32, step: f64, seed: u64, tol: f64) -> Result<(), Failure> {
    if n == 0 {
        return Err(bad_input("n must be at least 1"));
    }
    let n = n as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = vec![ChartPoint::origin(n)];
    for _ in 0..samples {
        points.push(ChartPoint::random(n, 1.2, &mut rng));
    }
    let mut max_kappa_dev = 0.0f64;
    let mut max_kappa_rho = 0.0f64;
    let mut max_omega = 0.0f64;
    let mut max_einstein = 0.0f64;
    for p in &points {
        let report =
            verify_identities_with_step(p, step).map_err(|e| bad_input(e.to_string()))?;
        max_kappa_dev = max_kappa_dev.max((report.kappa - expected_kappa(n)).abs());
        max_kappa_rho = max_kappa_rho.max(report.kappa_residual);
        max_omega = max_omega.max(report.omega_residual);
        max_einstein = max_einstein.max(report.einstein_residual);
    }
    println!(
        "fubini-study check on CP^{} ({} points, step {:e}, seed {})",
        n,
        points.len(),
        step,
        seed
    );
    println!(
        "kappa = {:<6} max |kappa - {}| = {:.3e}",
        expected_kappa(n),
        expected_kappa(n),
        max_kappa_dev
    );
    println!("kappa = 2||rho||    max residual = {:.3e}", max_kappa_rho);
    println!("||omega|| = {:<4}    max residual = {:.3e}", n, max_omega);
    println!("Ric = (n+1) g       max residual = {:.3e}", max_einstein);
    let worst = max_kappa_dev
        .max(max_kappa_rho)
        .max(max_omega)
        .max(max_einstein);
    if worst > tol {
        let mut msg = String::new();
        let _ = write!(
            msg,
            "residual {:.3e} exceeds tolerance {:.1e}",
            worst, tol
        );
        return Err(check_failed(msg));
    }
    println!("all residuals within {:.1e}", tol);
    Ok(())
}
