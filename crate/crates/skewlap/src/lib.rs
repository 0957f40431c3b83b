//! Skew Laplacian spectra and energies of oriented digraphs.
//!
//! For a simple digraph with out-degrees `d+` and in-degrees `d-`, the net
//! skew Laplacian is `SL~ = D~ - S`, where `D~ = diag(d+ - d-)` and `S` is
//! the skew-adjacency matrix (`+1` along an arc, `-1` against it). Its rows
//! sum to zero and its trace is zero, and the sum of the moduli of its
//! eigenvalues is the skew Laplacian energy `sle`. The crate computes that
//! energy alongside seven older energy functionals, evaluates the
//! inequalities
//!
//! ```text
//! 2 sqrt(|M|) <= sle <= sqrt(2 M1 (n - p)) <= sqrt(2 M1 n)
//! ```
//!
//! (with `M = -m + (1/2) sum (d+_i - d-_i)^2`, `M1 = M + 2m`, and `p` weak
//! components), classifies the digraphs attaining them, and ships a
//! verification harness that replays every bound over exhaustive and
//! randomized digraph corpora.
//!
//! # Quick start
//!
//! ```
//! use skewlap::families::directed_path;
//! use skewlap::energy::energy_report;
//!
//! let path = directed_path(4)?;
//! let report = energy_report(&path)?;
//! assert!((report.sle - 2.0 * 2.0f64.sqrt()).abs() < 1e-9);
//! assert_eq!(report.m_invariant.as_f64(), -2.0);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! # Modules
//!
//! - [`digraph`]: validated oriented digraphs (no loops, digons, or
//!   duplicate arcs) with degree, component, and balance queries.
//! - [`matrices`]: the adjacency, degree, and Laplacian matrices of a
//!   digraph, all with exact integer entries.
//! - [`eigen`]: dense nonsymmetric eigensolver (balance, Hessenberg,
//!   Francis double-shift QR) with certified residuals, exact spectral
//!   moments, and exact characteristic polynomials.
//! - [`energy`]: the eight energy functionals and the invariants `M`, `M1`.
//! - [`bounds`]: every inequality with slack, tightness, and equality-case
//!   classification.
//! - [`families`]: generators for the reference families and seeded random
//!   corpora (ChaCha8, reproducible across platforms).
//! - [`oracle`]: exhaustive enumeration of small oriented graphs and the
//!   sweep that checks every invariant on every digraph.
//! - [`io`]: the edge-list text format (`n m` header, 1-indexed arcs).
//! - [`cli`]: the `skewlap` command-line interface over all of the above.
//!
//! The `examples/` directory has one runnable walkthrough per capability;
//! start with `cargo run --example energy_report`.

pub mod bounds;
pub mod cli;
pub mod digraph;
pub mod eigen;
pub mod energy;
pub mod families;
pub(crate) mod fmt;
pub mod io;
pub mod matrices;
pub mod oracle;

pub use digraph::{Components, DegreeVector, Digraph, DigraphError};
pub use eigen::{eigenvalues, spectral_moment, EigenError, Spectrum};
pub use energy::{energy_report, EnergyReport, HalfInt};
pub use matrices::DenseMatrix;
