//! Command-line front end.
//!
//! Subcommands: `matrix`, `spectrum`, `energy`, `bounds`, `gen`, `verify`.
//! Digraph input is the edge-list format, read from a file argument or
//! stdin. Stdout carries data only; diagnostics go to stderr, so pipelines
//! like `skewlap gen g2 2 1 | skewlap bounds` compose.
//!
//! Exit status: 0 on success, 1 on a domain error (the error name leads the
//! stderr line), 2 on a usage error.

use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bounds;
use crate::digraph::Digraph;
use crate::eigen::{self, EigenError, Spectrum};
use crate::energy;
use crate::families::{FamilyError, FamilySpec};
use crate::fmt::sig12;
use crate::io::{self as edge_io, ParseError};
use crate::matrices::{self, DenseMatrix};
use crate::oracle::{self, OracleError, RandomSweep, SweepConfig};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eigen(#[from] EigenError),
    #[error("{0}")]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{reason}")]
    Usage { reason: String },
}

impl CliError {
    fn name(&self) -> &'static str {
        match self {
            CliError::Parse(e) => e.name(),
            CliError::Eigen(e) => e.name(),
            CliError::Family(e) => e.name(),
            CliError::Oracle(e) => e.name(),
            CliError::Io(_) => "IoError",
            CliError::Usage { .. } => "UsageError",
        }
    }
}

#[derive(Parser)]
#[command(
    name = "skewlap",
    version,
    about = "Skew Laplacian spectra, energies, and bounds for oriented digraphs",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    /// Out-adjacency A+
    Aplus,
    /// In-adjacency A- = (A+)^T
    Aminus,
    /// Skew-adjacency S = A+ - A-
    S,
    /// Underlying adjacency A(G_U) = A+ + A-
    A,
    /// Degree diagonal D = D+ + D-
    D,
    /// Out-degree diagonal D+
    Dplus,
    /// In-degree diagonal D-
    Dminus,
    /// Net degree diagonal D~ = D+ - D-
    Dtilde,
    /// Laplacian of the underlying graph L = D - A(G_U)
    L,
    /// Total-degree skew Laplacian SL = D - S
    Sl,
    /// Out-degree Laplacian L+ = D+ - A+
    Lplus,
    /// Net skew Laplacian SL~ = D~ - S
    Slnew,
}

impl MatrixKind {
    fn build(&self, g: &Digraph) -> DenseMatrix {
        match self {
            MatrixKind::Aplus => matrices::adjacency_out(g),
            MatrixKind::Aminus => matrices::adjacency_in(g),
            MatrixKind::S => matrices::skew_adjacency(g),
            MatrixKind::A => matrices::underlying_adjacency(g),
            MatrixKind::D => matrices::degree_matrices(g).total,
            MatrixKind::Dplus => matrices::degree_matrices(g).out_degree,
            MatrixKind::Dminus => matrices::degree_matrices(g).in_degree,
            MatrixKind::Dtilde => matrices::degree_matrices(g).net,
            MatrixKind::L => matrices::laplacian_underlying(g),
            MatrixKind::Sl => matrices::skew_laplacian_old(g),
            MatrixKind::Lplus => matrices::laplacian_out(g),
            MatrixKind::Slnew => matrices::skew_laplacian_new(g),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EnergyFormat {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print a matrix built from a digraph
    Matrix {
        /// Edge-list file; stdin when omitted or `-`
        input: Option<String>,
        /// Which matrix to build
        #[arg(long, value_enum, default_value = "slnew")]
        matrix: MatrixKind,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print the eigenvalues of a matrix built from a digraph
    Spectrum {
        /// Edge-list file; stdin when omitted or `-`
        input: Option<String>,
        /// Which matrix to analyze
        #[arg(long, value_enum, default_value = "slnew")]
        matrix: MatrixKind,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Override the zero-classification threshold
        #[arg(long)]
        zero_tol: Option<f64>,
    },
    /// Print every energy functional of a digraph
    Energy {
        /// Edge-list file; stdin when omitted or `-`
        input: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: EnergyFormat,
    },
    /// Evaluate every bound, with slack and tightness flags
    Bounds {
        /// Edge-list file; stdin when omitted or `-`
        input: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Relative tolerance for tightness flags
        #[arg(long, default_value_t = bounds::DEFAULT_TIGHTNESS_TOL)]
        tol: f64,
    },
    /// Generate a named digraph family as an edge list
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Run the verification sweep and print its JSON summary
    Verify {
        /// Check every oriented graph on up to this many vertices
        #[arg(long)]
        exhaustive: Option<usize>,
        /// Number of random digraphs to check
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Order of the random digraphs
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Arc probability of the random digraphs
        #[arg(long, default_value_t = 0.5)]
        arc_probability: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Additive soundness tolerance
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Directed path on n vertices
    Path { n: usize },
    /// Directed cycle on n vertices (n >= 3)
    Cycle { n: usize },
    /// Balanced orientation of a complete bipartite graph, blocks of
    /// the given size (4 * block vertices)
    G1 { block: usize },
    /// alpha oriented triangles plus beta isolated vertices
    G2 { alpha: usize, beta: usize },
    /// Random oriented graph with the given arc probability
    Rand {
        n: usize,
        arc_probability: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Random tournament (every pair adjacent)
    Tournament {
        n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Random balanced digraph: a union of fresh directed cycles
    Balanced {
        n: usize,
        cycles: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

impl GenFamily {
    fn spec(&self) -> FamilySpec {
        match *self {
            GenFamily::Path { n } => FamilySpec::Path { n },
            GenFamily::Cycle { n } => FamilySpec::Cycle { n },
            GenFamily::G1 { block } => FamilySpec::CompleteBipartite { block },
            GenFamily::G2 { alpha, beta } => FamilySpec::TrianglesPlusIsolated { alpha, beta },
            GenFamily::Rand {
                n,
                arc_probability,
                seed,
            } => FamilySpec::RandomOriented {
                n,
                arc_probability,
                seed,
            },
            GenFamily::Tournament { n, seed } => FamilySpec::RandomTournament { n, seed },
            GenFamily::Balanced { n, cycles, seed } => FamilySpec::RandomBalanced {
                n,
                cycle_count: cycles,
                seed,
            },
        }
    }
}

/// Parses `args` and runs the requested command, writing data to `out` and
/// diagnostics to `err`; returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "{}: {}", e.name(), e);
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Matrix {
            input,
            matrix,
            format,
        } => {
            let g = read_digraph(&input)?;
            let m = matrix.build(&g);
            match format {
                Format::Table => write!(out, "{}", m.to_table())?,
                Format::Json => writeln!(out, "{}", m.to_json())?,
            }
            Ok(0)
        }
        Command::Spectrum {
            input,
            matrix,
            format,
            zero_tol,
        } => {
            let g = read_digraph(&input)?;
            let m = matrix.build(&g);
            let mut s = eigen::eigenvalues(&m)?;
            if let Some(tol) = zero_tol {
                s = s.with_zero_tol(tol);
            }
            match format {
                Format::Table => write!(out, "{}", spectrum_table(&s))?,
                Format::Json => writeln!(out, "{}", spectrum_json(&s))?,
            }
            Ok(0)
        }
        Command::Energy { input, format } => {
            let g = read_digraph(&input)?;
            let report = energy::energy_report(&g)?;
            match format {
                EnergyFormat::Table => write!(out, "{}", report.to_table())?,
                EnergyFormat::Json => writeln!(out, "{}", report.to_json())?,
                EnergyFormat::Csv => {
                    writeln!(out, "{}", energy::EnergyReport::CSV_HEADER)?;
                    writeln!(out, "{}", report.to_csv_row())?;
                }
            }
            Ok(0)
        }
        Command::Bounds { input, format, tol } => {
            let g = read_digraph(&input)?;
            let report = bounds::full_report(&g, tol)?;
            match format {
                Format::Table => write!(out, "{}", report.to_table())?,
                Format::Json => writeln!(out, "{}", report.to_json())?,
            }
            Ok(0)
        }
        Command::Gen { family } => {
            let g = family.spec().generate()?;
            write!(out, "{}", edge_io::format_edge_list(&g))?;
            Ok(0)
        }
        Command::Verify {
            exhaustive,
            random,
            n,
            arc_probability,
            seed,
            tol,
        } => {
            if !(0.0..=1.0).contains(&arc_probability) {
                return Err(CliError::Usage {
                    reason: "arc probability must lie in [0, 1]".to_string(),
                });
            }
            let config = SweepConfig {
                exhaustive_max: exhaustive,
                random: (random > 0).then_some(RandomSweep {
                    count: random,
                    n,
                    arc_probability,
                    seed,
                }),
                tol,
            };
            let summary = oracle::sweep_bounds(&config)?;
            writeln!(out, "{}", summary.to_json())?;
            Ok(if summary.violations.is_empty() { 0 } else { 1 })
        }
    }
}

fn read_digraph(input: &Option<String>) -> Result<Digraph, CliError> {
    let text = match input.as_deref() {
        None | Some("-") => {
            let mut buffer = String::new();
            std::io::stdin().read_to_string(&mut buffer)?;
            buffer
        }
        Some(path) => std::fs::read_to_string(path)?,
    };
    Ok(edge_io::parse_edge_list(&text)?)
}

fn spectrum_json(s: &Spectrum) -> String {
    let values: Vec<String> = s
        .values()
        .iter()
        .map(|v| format!("{{\"re\":{},\"im\":{}}}", sig12(v.re), sig12(v.im)))
        .collect();
    format!(
        "{{\"eigenvalues\":[{}],\"residual\":{},\"zero_tol\":{}}}",
        values.join(","),
        sig12(s.residual()),
        sig12(s.zero_tol())
    )
}

fn spectrum_table(s: &Spectrum) -> String {
    let mut rows: Vec<(String, String)> = vec![("re".into(), "im".into())];
    for v in s.values() {
        rows.push((sig12(v.re), sig12(v.im)));
    }
    let width = rows.iter().map(|(a, _)| a.len()).max().unwrap_or(2);
    let mut out = String::new();
    for (re, im) in rows {
        out.push_str(&format!("{re:>width$}  {im}\n"));
    }
    out.push_str(&format!("residual  {}\n", sig12(s.residual())));
    out.push_str(&format!("zero_tol  {}\n", sig12(s.zero_tol())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let status = run(
            std::iter::once("skewlap").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            status,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gen_path_emits_edge_list() {
        let (status, out, _) = run_capture(&["gen", "path", "4"]);
        assert_eq!(status, 0);
        assert_eq!(out, "4 3\n1 2\n2 3\n3 4\n");
    }

    #[test]
    fn gen_is_deterministic_per_seed() {
        let a = run_capture(&["gen", "rand", "8", "0.5", "--seed", "42"]);
        let b = run_capture(&["gen", "rand", "8", "0.5", "--seed", "42"]);
        assert_eq!(a, b);
    }

    #[test]
    fn usage_error_exits_two() {
        let (status, _, err) = run_capture(&["nonsense"]);
        assert_eq!(status, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn help_exits_zero() {
        let (status, out, _) = run_capture(&["--help"]);
        assert_eq!(status, 0);
        assert!(out.contains("Usage"));
    }

    #[test]
    fn domain_error_exits_one_with_name() {
        let (status, _, err) = run_capture(&["gen", "cycle", "2"]);
        assert_eq!(status, 1);
        assert!(err.starts_with("InvalidSize:"), "stderr: {err}");
    }

    #[test]
    fn verify_small_sweep_reports_clean_json() {
        let (status, out, _) = run_capture(&["verify", "--exhaustive", "3"]);
        assert_eq!(status, 0);
        assert!(out.contains("\"violations\":[]"));
        assert!(out.contains("\"digraphs_checked\":31"));
    }

    #[test]
    fn matrix_json_for_generated_file() {
        let dir = std::env::temp_dir().join("skewlap-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("p4.txt");
        std::fs::write(&path, "4 3\n1 2\n2 3\n3 4\n").unwrap();
        let (status, out, _) = run_capture(&[
            "matrix",
            path.to_str().unwrap(),
            "--matrix",
            "slnew",
            "--format",
            "json",
        ]);
        assert_eq!(status, 0);
        assert_eq!(
            out,
            "{\"order\":4,\"rows\":[[1,-1,0,0],[1,0,-1,0],[0,1,0,-1],[0,0,1,-1]]}\n"
        );
        let (status, out, _) =
            run_capture(&["spectrum", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(status, 0);
        assert!(out.contains("\"im\":1.41421356237"), "{out}");
        let (status, out, _) = run_capture(&["energy", path.to_str().unwrap(), "--format", "csv"]);
        assert_eq!(status, 0);
        assert!(out.starts_with("n,m,p,E,Es,LEg,LEk,SLEk,SLEg,LEm,SLE,M,M1\n"));
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn zero_tol_override_keeps_the_residual() {
        let dir = std::env::temp_dir().join("skewlap-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c4.txt");
        std::fs::write(&path, "4 4\n1 2\n2 3\n3 4\n4 1\n").unwrap();
        let (status, out, _) = run_capture(&[
            "spectrum",
            path.to_str().unwrap(),
            "--zero-tol",
            "0.5",
            "--format",
            "json",
        ]);
        assert_eq!(status, 0);
        assert!(out.contains("\"zero_tol\":0.5"), "{out}");
        // the overridden threshold must not erase the certified residual
        assert!(!out.contains("\"residual\":0,"), "{out}");
    }

    #[test]
    fn empty_digraph_is_handled_end_to_end() {
        let dir = std::env::temp_dir().join("skewlap-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("empty.txt");
        std::fs::write(&path, "0 0\n").unwrap();
        let (status, out, _) = run_capture(&["energy", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(status, 0);
        assert!(out.contains("\"n\":0"));
        let (status, _, _) = run_capture(&["bounds", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(status, 0);
        // a spectrum of an order-0 matrix is a domain error, not a panic
        let (status, _, err) = run_capture(&["spectrum", path.to_str().unwrap()]);
        assert_eq!(status, 1);
        assert!(err.starts_with("EmptyMatrix:"));
    }

    #[test]
    fn missing_file_is_io_error() {
        let (status, _, err) = run_capture(&["energy", "/definitely/not/here.txt"]);
        assert_eq!(status, 1);
        assert!(err.starts_with("IoError:"));
    }
}
