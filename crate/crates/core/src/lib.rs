//! Exact solver for bipolar max-product fuzzy relation equations under the
//! product negation.
//!
//! A system of `n` equations over `m` unknowns in `[0, 1]`
//!
//! ```text
//! max_j max(a⁺_ij * x_j, a⁻_ij * n(x_j)) = b_i
//! ```
//!
//! is solved exactly over the rationals: solvability, the greatest and
//! maximal solutions, and the least or minimal ones when they exist.
//!
//! ```
//! use bfre::{parse_system, summarize, SolverOptions};
//!
//! let sys = parse_system(r#"{
//!     "a_plus":  [["0.4", "0.2", "0.5"], ["0", "0", "0.4"]],
//!     "a_minus": [["0.7", "0.1", "0.2"], ["0.9", "0", "0"]],
//!     "b": ["0.3", "0"]
//! }"#).unwrap();
//! let summary = summarize(&sys, &SolverOptions::default()).unwrap();
//! assert_eq!(summary.greatest.unwrap().to_string(), "(0.75, 1, 0)");
//! ```

pub mod algebra;
pub mod columns;
pub mod error;
pub mod model;
pub mod oracle;
pub mod report;
pub mod single_eq;
pub mod system;

pub use algebra::{neg_product, residuum, tnorm_product, Scalar};
pub use columns::{ColumnSet, MAX_COLUMNS};
pub use error::{Error, Result};
pub use model::{
    evaluate_equation, is_solution, parse_system, support_pattern, system_to_json, Assignment,
    BipolarEquation, BipolarSystem, SupportPattern,
};
pub use single_eq::{
    greatest_single, lower_single, maximal_single, solvable_single, LowerDescription,
};
pub use system::{
    construct_solution, enumerate_feasible_pairs, greatest_system, is_feasible_pair, lower_system,
    maximal_solutions, solvable_system, summarize, FeasibleFamily, FeasiblePair, SolutionSummary,
    SolverOptions,
};
