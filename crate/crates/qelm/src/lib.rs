//! Quantum extreme learning machine on a 1D Rydberg chain, simulated with
//! matrix product states.
//!
//! The pipeline encodes classical feature vectors as site-dependent laser
//! detunings of a Rydberg-atom chain, evolves the chain with one-site or
//! two-site TDVP, and reads out time series of `⟨Z_i⟩` / `⟨Z_i Z_j⟩`
//! correlators as a feature embedding for a linear classifier.
//!
//! Crate layout:
//!
//! * [`tensor`] — dense complex tensor kernels (contraction, truncated SVD,
//!   QR, Krylov matrix exponentials)
//! * [`mps`] — matrix product states, canonical forms, observables, entropy
//! * [`hamiltonian`] — the Rydberg chain Hamiltonian (interaction table, MPO,
//!   dense form helpers)
//! * [`tdvp`] — one-site and two-site TDVP integrators
//! * [`oracle`] — dense statevector reference implementation (small systems)
//! * [`embedding`] — correlator embeddings and disorder/concentration metrics
//! * [`ml`] — PCA, feature scaling, softmax/MLP heads, k-fold evaluation
//! * [`data`] — MNIST IDX ingestion, synthetic digits, embedding caches, CSV
//!
//! Units: Hamiltonian coefficients are angular frequencies in rad/µs, times
//! are in µs, distances in µm. A Rabi frequency quoted as `Ω = 2π` means
//! 2π rad/µs.
//!
//! With the default `parallel` feature, dataset-level loops fan out across a
//! rayon thread pool; disabling it yields a fully sequential build with
//! identical numerical output.

// Force linkage of the BLAS backend used by `ndarray`'s `blas` feature.
use blas_src as _;

pub mod data;
pub mod embedding;
pub mod hamiltonian;
pub mod ml;
pub mod mps;
pub mod oracle;
pub mod parallel;
pub mod tdvp;
pub mod tensor;

pub use num_complex::Complex64 as C64;
