//! Closed-form resolution of a single bipolar equation.
//!
//! Nothing here enumerates: solvability, the greatest or maximal solutions
//! and the lower end of the solution set are read off the coefficients by
//! exact comparisons against `b`. The system solver reaches the same
//! answers through feasible pairs, so the two routes cross-check each
//! other on one-row systems.

use crate::algebra::{residuum, Scalar};
use crate::error::{Error, Result};
use crate::model::{Assignment, BipolarEquation};

/// The index sets driving the `b > 0` case split (0-based).
///
/// `k_minus` holds the columns whose negative coefficient equals `b`;
/// `k_plus` the columns with `a⁺_k >= b` such that every *other* column
/// has `a⁻_j < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverIndexSets {
    pub k_plus: Vec<usize>,
    pub k_minus: Vec<usize>,
}

/// What the solution set looks like from below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerDescription {
    Least(Assignment),
    /// A non-empty antichain holding every minimal solution.
    FiniteMinimals(Vec<Assignment>),
    NoMinimalElements,
}

impl LowerDescription {
    /// The tuples carried by the description (empty for
    /// `NoMinimalElements`).
    pub fn tuples(&self) -> &[Assignment] {
        match self {
            LowerDescription::Least(x) => std::slice::from_ref(x),
            LowerDescription::FiniteMinimals(xs) => xs,
            LowerDescription::NoMinimalElements => &[],
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            LowerDescription::Least(_) => "least",
            LowerDescription::FiniteMinimals(_) => "finite_minimals",
            LowerDescription::NoMinimalElements => "no_minimal_elements",
        }
    }
}

pub fn cover_index_sets(eq: &BipolarEquation) -> CoverIndexSets {
    let b = eq.b();
    let k_minus = (0..eq.m()).filter(|&k| eq.a_minus()[k] == *b).collect();
    let k_plus = (0..eq.m())
        .filter(|&k| eq.a_plus()[k] >= *b && (0..eq.m()).all(|j| j == k || eq.a_minus()[j] < *b))
        .collect();
    CoverIndexSets { k_plus, k_minus }
}

pub fn solvable_single(eq: &BipolarEquation) -> bool {
    let b = eq.b();
    if b.is_zero() {
        eq.a_plus()
            .iter()
            .zip(eq.a_minus())
            .all(|(ap, am)| ap.is_zero() || am.is_zero())
    } else {
        eq.a_plus().iter().any(|ap| ap >= b) || eq.a_minus().iter().any(|am| am == b)
    }
}

fn require_solvable(eq: &BipolarEquation, op: &str) -> Result<()> {
    if solvable_single(eq) {
        Ok(())
    } else {
        Err(Error::contract(format!(
            "{op} called on an unsolvable equation"
        )))
    }
}

/// The greatest solution, when there is one.
///
/// For `b > 0` with every `a⁺_j < b` the maximal solutions are the tuples
/// of ones with a single zero at some `k ∈ K⁻`; a greatest solution exists
/// exactly when there is only one of them.
pub fn greatest_single(eq: &BipolarEquation) -> Result<Option<Assignment>> {
    require_solvable(eq, "greatest_single")?;
    let b = eq.b();
    if b.is_zero() {
        // a column with a⁺ = a⁻ = 0 is free; take its top value
        let x = eq
            .a_plus()
            .iter()
            .map(|ap| {
                if ap.is_zero() {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        return Ok(Some(Assignment::new(x)));
    }
    if eq.a_plus().iter().any(|ap| ap >= b) {
        let x = eq.a_plus().iter().map(|ap| residuum(b, ap)).collect();
        return Ok(Some(Assignment::new(x)));
    }
    let mut maximal = maximal_single(eq)?;
    Ok(if maximal.len() == 1 {
        maximal.pop()
    } else {
        None
    })
}

pub fn maximal_single(eq: &BipolarEquation) -> Result<Vec<Assignment>> {
    require_solvable(eq, "maximal_single")?;
    let b = eq.b();
    if b.is_zero() || eq.a_plus().iter().any(|ap| ap >= b) {
        let greatest = greatest_single(eq)?.expect("greatest exists in this case");
        return Ok(vec![greatest]);
    }
    let ones = Assignment::ones(eq.m());
    Ok(cover_index_sets(eq)
        .k_minus
        .into_iter()
        .map(|k| ones.with(k, Scalar::zero()))
        .collect())
}

pub fn lower_single(eq: &BipolarEquation) -> Result<LowerDescription> {
    require_solvable(eq, "lower_single")?;
    let b = eq.b();
    let m = eq.m();
    if b.is_zero() {
        return Ok(if eq.a_minus().iter().all(Scalar::is_zero) {
            LowerDescription::Least(Assignment::zeros(m))
        } else {
            // a column with a⁻ > 0 has a⁺ = 0 and must stay positive; it can
            // be halved forever
            LowerDescription::NoMinimalElements
        });
    }

    let hits_b = eq.a_minus().iter().any(|am| am == b);
    let exceeds_b = eq.a_minus().iter().any(|am| am > b);
    if hits_b {
        return Ok(if exceeds_b {
            LowerDescription::NoMinimalElements
        } else {
            LowerDescription::Least(Assignment::zeros(m))
        });
    }

    let zeros = Assignment::zeros(m);
    let minimals: Vec<_> = cover_index_sets(eq)
        .k_plus
        .into_iter()
        .map(|k| zeros.with(k, residuum(b, &eq.a_plus()[k])))
        .collect();
    Ok(if minimals.is_empty() {
        LowerDescription::NoMinimalElements
    } else {
        LowerDescription::FiniteMinimals(minimals)
    })
}
