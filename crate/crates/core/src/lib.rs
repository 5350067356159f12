//! Majorization calculus and prescribed-diagonal solvers on a matrix model
//! of a II₁ factor.
//!
//! The factor is modelled at finite resolution `n` by the algebra of n×n
//! complex hermitian matrices with the normalized trace τ = Tr/n. The masa is
//! the diagonal subalgebra and the trace-preserving conditional expectation
//! `E` onto it is diagonal pinching. Spectral data is carried by step
//! functions on [0,1) with breakpoints on the 1/n grid, so every trace
//! quantity is a multiple of 1/n.
//!
//! Modules:
//! - [`operator`]: hermitian operators, pinching, spectral decomposition,
//!   scale-indexed spectral projections, equimeasurability.
//! - [`majorization`]: spectral scales, Ky Fan curves, the majorization
//!   classifier and the slack functional with its block decomposition laws.
//! - [`averaging`]: the two-block averaging unitary and spectral-projection
//!   matching unitaries.
//! - [`solver`]: partial solutions, the orbit-mode solver and the exact
//!   solver, plus the carpenter special case.
//! - [`choquet`]: atomic-measure splitting with prescribed masses and means,
//!   and the finite-spectrum solve route built on it.
//! - [`oracle`]: instance generation by T-transforms, the classical
//!   rotation-chain constructor, and independent invariant checkers.
//! - [`formats`]: file formats used by the CLI.

pub mod averaging;
pub mod choquet;
pub mod formats;
pub mod majorization;
pub mod operator;
pub mod oracle;
pub mod solver;

pub use operator::{DiagonalProjection, EigenDecomposition, HermitianOperator, TraceContext};

/// Default tolerance for hermiticity, eigensolver reconstruction and
/// positivity checks. Two orders above double-precision backward error for
/// the dense hermitian eigensolver at n ≤ 512.
pub const EIG_TOL: f64 = 1e-10;

/// Default tolerance for comparing spectral scales and Ky Fan curves.
pub const SCALE_TOL: f64 = 1e-9;

/// Error type shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("resolution mismatch: {0} vs {1}")]
    ResolutionMismatch(usize, usize),

    #[error("matrix is not hermitian: max |H - H*| = {0:.3e}")]
    NotHermitian(f64),

    #[error("operator is not positive: min eigenvalue {0:.3e} below -{1:.3e}")]
    NotPositive(f64, f64),

    #[error("matrix is not diagonal: max off-diagonal {0:.3e}")]
    NotDiagonal(f64),

    #[error("eigensolver failed: {0}")]
    Eigensolver(String),

    #[error("majorization does not hold: {0}")]
    NotMajorized(String),

    #[error("operands are equimeasurable: no crossing sets exist")]
    NoCrossing,

    #[error("block ordering precondition violated: {0}")]
    BlockOrdering(String),

    #[error("domination precondition violated: {0}")]
    Domination(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("grid too coarse at resolution {n}: {detail}; refine n and retry")]
    GridTooCoarse { n: usize, detail: String },

    #[error("iteration budget exceeded after {0} iterations")]
    IterationBudget(usize),

    #[error("infeasible split target: partial sums violated at index {index}: {detail}")]
    InfeasibleSplit { index: usize, detail: String },

    #[error("required refinement factor exceeds cap {cap}")]
    RefinementExceeded { cap: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
