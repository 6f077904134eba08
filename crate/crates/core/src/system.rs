//! Resolution of systems through feasible pairs.
//!
//! A pair `(J⁺, J⁻)` partitions the columns into those that will be
//! positive and those that will be zero. It is feasible when, for every
//! row `i`:
//!
//! * `b_i = 0`: `a⁺_ij = 0` on `J⁺` and `a⁻_ij = 0` on `J⁻`;
//! * `b_i > 0`: `a⁻_ij <= b_i` on `J⁻`, and the row is covered either by a
//!   column `j ∈ J⁺` with `a⁺_ij >= b_i` whose residuum `b_i <- a⁺_ij` is
//!   the smallest in column `j` (b1), or by a column `j ∈ J⁻` with
//!   `a⁻_ij = b_i` and `a⁻_hj <= b_h` in every row `h` (b2).
//!
//! Feasible pairs are exactly the support patterns of solutions, and for
//! each one the tuple `f(J⁺)` (zero on `J⁻`, the column-wise minimum of
//! residua on `J⁺`) is a solution. Greatest and maximal solutions come
//! from the maximal elements of `S⁺ = {J⁺}`, minimal ones from the
//! maximal elements of `S⁻ = {J⁻}` whose support cannot be lowered.

use rayon::prelude::*;

use crate::algebra::{residuum, tnorm_product, Scalar};
use crate::columns::{ColumnSet, MAX_COLUMNS};
use crate::error::{Error, Result};
use crate::model::{Assignment, BipolarEquation, BipolarSystem};
use crate::single_eq::LowerDescription;

pub const DEFAULT_ENUMERATION_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Largest `m` for which all `2^m` partitions are scanned.
    pub cap: usize,
    /// Worker count for the partition scan; `1` keeps it on the calling
    /// thread.
    pub threads: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            threads: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FeasiblePair {
    pub j_plus: ColumnSet,
    pub j_minus: ColumnSet,
}

/// The set `S` of feasible pairs, in ascending order of the `J⁺` bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibleFamily {
    m: usize,
    plus_masks: Vec<u64>,
}

impl FeasibleFamily {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.plus_masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus_masks.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = FeasiblePair> + '_ {
        let full = ColumnSet::full(self.m);
        self.plus_masks.iter().map(move |&bits| {
            let j_plus = ColumnSet::from_bits(bits);
            FeasiblePair {
                j_plus,
                j_minus: ColumnSet::from_bits(full.bits() & !bits),
            }
        })
    }

    pub fn s_plus(&self) -> Vec<ColumnSet> {
        self.pairs().map(|p| p.j_plus).collect()
    }

    pub fn s_minus(&self) -> Vec<ColumnSet> {
        self.pairs().map(|p| p.j_minus).collect()
    }

    pub fn contains_minus(&self, j_minus: ColumnSet) -> bool {
        let plus = j_minus.complement(self.m).bits();
        self.plus_masks.binary_search(&plus).is_ok()
    }
}

fn check_partition(system: &BipolarSystem, j_plus: ColumnSet, j_minus: ColumnSet) -> Result<()> {
    let m = system.m();
    if m > MAX_COLUMNS {
        return Err(Error::ResourceLimit {
            what: "column count for index sets",
            requested: m as u128,
            cap: MAX_COLUMNS as u128,
        });
    }
    if !j_plus.intersection(j_minus).is_empty() || j_plus.union(j_minus) != ColumnSet::full(m) {
        return Err(Error::contract(format!(
            "({j_plus}, {j_minus}) is not a partition of the {m} columns"
        )));
    }
    Ok(())
}

/// Checks the feasibility conditions directly, row by row.
pub fn is_feasible_pair(
    system: &BipolarSystem,
    j_plus: ColumnSet,
    j_minus: ColumnSet,
) -> Result<bool> {
    check_partition(system, j_plus, j_minus)?;
    let n = system.n();
    Ok(system.rows().iter().enumerate().all(|(i, row)| {
        let b = row.b();
        if b.is_zero() {
            return j_plus.iter().all(|j| row.a_plus()[j].is_zero())
                && j_minus.iter().all(|j| row.a_minus()[j].is_zero());
        }
        if j_minus.iter().any(|j| row.a_minus()[j] > *b) {
            return false;
        }
        let b1 = j_plus.iter().any(|j| {
            let a = &row.a_plus()[j];
            a >= b && {
                let own = residuum(b, a);
                (0..n).all(|h| own <= residuum(system.b(h), system.a_plus(h, j)))
            }
        });
        let b2 = || {
            j_minus.iter().any(|j| {
                row.a_minus()[j] == *b && (0..n).all(|h| system.a_minus(h, j) <= system.b(h))
            })
        };
        let _ = i;
        b1 || b2()
    }))
}

/// Feasibility compiled to bitmasks: two global admissibility masks plus
/// one `(b1, b2)` witness mask pair per row with `b_i > 0`.
struct CompiledFeasibility {
    full: u64,
    plus_allowed: u64,
    minus_allowed: u64,
    covers: Vec<(u64, u64)>,
}

impl CompiledFeasibility {
    fn compile(system: &BipolarSystem) -> Self {
        let m = system.m();
        let n = system.n();
        let full = ColumnSet::full(m).bits();
        let bounds = column_upper_bounds(system);
        let mut plus_allowed = full;
        let mut minus_allowed = full;
        let mut covers = Vec::new();
        for i in 0..n {
            let row = system.row(i);
            let b = row.b();
            let mask_of = |pred: &dyn Fn(usize) -> bool| {
                (0..m)
                    .filter(|&j| pred(j))
                    .fold(0u64, |acc, j| acc | 1 << j)
            };
            if b.is_zero() {
                plus_allowed &= mask_of(&|j| row.a_plus()[j].is_zero());
                minus_allowed &= mask_of(&|j| row.a_minus()[j].is_zero());
            } else {
                minus_allowed &= mask_of(&|j| row.a_minus()[j] <= *b);
                let b1 = mask_of(&|j| {
                    let a = &row.a_plus()[j];
                    a >= b && residuum(b, a) == bounds[j]
                });
                let b2 = mask_of(&|j| {
                    row.a_minus()[j] == *b && (0..n).all(|h| system.a_minus(h, j) <= system.b(h))
                });
                covers.push((b1, b2));
            }
        }
        CompiledFeasibility {
            full,
            plus_allowed,
            minus_allowed,
            covers,
        }
    }

    #[inline]
    fn accepts(&self, plus: u64) -> bool {
        let minus = self.full & !plus;
        plus & !self.plus_allowed == 0
            && minus & !self.minus_allowed == 0
            && self
                .covers
                .iter()
                .all(|&(b1, b2)| plus & b1 != 0 || minus & b2 != 0)
    }

    fn scan(&self, range: std::ops::Range<u64>) -> Vec<u64> {
        range.filter(|&plus| self.accepts(plus)).collect()
    }
}

/// All feasible pairs, found by scanning every `J⁺ ⊆ {1..m}` as a counter.
///
/// With `threads > 1` the counter range is cut into disjoint slices
/// scanned in parallel; slices are concatenated in order so the result
/// does not depend on the worker count.
pub fn enumerate_feasible_pairs(
    system: &BipolarSystem,
    options: &SolverOptions,
) -> Result<FeasibleFamily> {
    let m = system.m();
    let cap = options.cap.min(MAX_COLUMNS);
    if m > cap {
        return Err(Error::ResourceLimit {
            what: "column count for 2^m feasible-pair enumeration",
            requested: m as u128,
            cap: cap as u128,
        });
    }
    let compiled = CompiledFeasibility::compile(system);
    let total = 1u64 << m;
    let plus_masks = if options.threads <= 1 || total < 1 << 12 {
        compiled.scan(0..total)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::contract(format!("cannot start worker pool: {e}")))?;
        let slices = (options.threads as u64 * 16).min(total);
        let width = total.div_ceil(slices);
        pool.install(|| {
            (0..slices)
                .into_par_iter()
                .map(|s| compiled.scan(s * width..((s + 1) * width).min(total)))
                .collect::<Vec<_>>()
        })
        .concat()
    };
    Ok(FeasibleFamily { m, plus_masks })
}

pub fn solvable_system(system: &BipolarSystem, options: &SolverOptions) -> Result<bool> {
    Ok(!enumerate_feasible_pairs(system, options)?.is_empty())
}

/// `min_h (b_h <- a⁺_hj)` for every column `j`.
pub fn column_upper_bounds(system: &BipolarSystem) -> Vec<Scalar> {
    (0..system.m())
        .map(|j| {
            (0..system.n())
                .map(|h| residuum(system.b(h), system.a_plus(h, j)))
                .min()
                .expect("n >= 1")
        })
        .collect()
}

/// `f(J⁺)` without the feasibility check.
fn constructed(system: &BipolarSystem, j_plus: ColumnSet) -> Assignment {
    let bounds = column_upper_bounds(system);
    Assignment::new(
        bounds
            .into_iter()
            .enumerate()
            .map(|(j, u)| {
                if j_plus.contains(j) {
                    u
                } else {
                    Scalar::zero()
                }
            })
            .collect(),
    )
}

/// The solution `f(J⁺)` attached to a feasible pair: zero outside `J⁺`,
/// `min_h (b_h <- a⁺_hj)` on `J⁺`.
pub fn construct_solution(system: &BipolarSystem, j_plus: ColumnSet) -> Result<Assignment> {
    let j_minus = j_plus.complement(system.m().min(MAX_COLUMNS));
    check_partition(system, j_plus, j_minus)?;
    if !is_feasible_pair(system, j_plus, j_minus)? {
        return Err(Error::contract(format!(
            "({j_plus}, {j_minus}) is not a feasible pair"
        )));
    }
    Ok(constructed(system, j_plus))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalElements {
    /// Inclusion-maximal members in ascending bitmask order.
    pub maximal: Vec<ColumnSet>,
    /// The member containing every other one, if any.
    pub greatest: Option<ColumnSet>,
}

pub fn maximal_elements(family: &[ColumnSet]) -> MaximalElements {
    let mut candidates = family.to_vec();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    candidates.dedup();
    // a non-maximal set sits inside a strictly larger one that was seen first
    let mut maximal: Vec<ColumnSet> = Vec::new();
    for set in candidates {
        if !maximal.iter().any(|&big| set.is_proper_subset(big)) {
            maximal.push(set);
        }
    }
    maximal.sort();
    let greatest = if maximal.len() == 1 {
        Some(maximal[0])
    } else {
        None
    };
    MaximalElements { maximal, greatest }
}

fn solvable_family(
    system: &BipolarSystem,
    options: &SolverOptions,
    op: &str,
) -> Result<FeasibleFamily> {
    let family = enumerate_feasible_pairs(system, options)?;
    if family.is_empty() {
        return Err(Error::contract(format!(
            "{op} called on an unsolvable system"
        )));
    }
    Ok(family)
}

pub fn greatest_system(
    system: &BipolarSystem,
    options: &SolverOptions,
) -> Result<Option<Assignment>> {
    let family = solvable_family(system, options, "greatest_system")?;
    Ok(maximal_elements(&family.s_plus())
        .greatest
        .map(|top| constructed(system, top)))
}

pub fn maximal_solutions(
    system: &BipolarSystem,
    options: &SolverOptions,
) -> Result<Vec<Assignment>> {
    let family = solvable_family(system, options, "maximal_solutions")?;
    Ok(maximal_from_family(system, &family))
}

fn maximal_from_family(system: &BipolarSystem, family: &FeasibleFamily) -> Vec<Assignment> {
    maximal_elements(&family.s_plus())
        .maximal
        .into_iter()
        .map(|j_plus| constructed(system, j_plus))
        .collect()
}

/// The system restricted to the columns outside `J⁻` and to the rows
/// `I = {i : b_i = 0 or a⁻_ij < b_i for every j ∈ J⁻}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSystem {
    /// `None` when the restriction has no rows or no columns.
    pub base: Option<BipolarSystem>,
    /// Retained rows (0-based, original numbering).
    pub rows: Vec<usize>,
    /// Retained columns (0-based, original numbering).
    pub columns: Vec<usize>,
    /// Independent terms of the retained rows.
    pub b: Vec<Scalar>,
}

pub fn reduced_system(system: &BipolarSystem, j_minus: ColumnSet) -> ReducedSystem {
    let rows: Vec<usize> = (0..system.n())
        .filter(|&i| {
            let b = system.b(i);
            b.is_zero() || j_minus.iter().all(|j| system.a_minus(i, j) < b)
        })
        .collect();
    let columns: Vec<usize> = (0..system.m()).filter(|&j| !j_minus.contains(j)).collect();
    let b: Vec<Scalar> = rows.iter().map(|&i| system.b(i).clone()).collect();
    let base = if rows.is_empty() || columns.is_empty() {
        None
    } else {
        let equations = rows
            .iter()
            .map(|&i| {
                let pick = |xs: &[Scalar]| columns.iter().map(|&j| xs[j].clone()).collect();
                let row = system.row(i);
                BipolarEquation::new(pick(row.a_plus()), pick(row.a_minus()), row.b().clone())
                    .expect("non-empty restriction")
            })
            .collect();
        Some(BipolarSystem::new(equations).expect("uniform width"))
    };
    ReducedSystem {
        base,
        rows,
        columns,
        b,
    }
}

/// Whether the solutions with support exactly `J⁺` reduce to the single
/// tuple `f(J⁺)`.
///
/// On that support every coordinate ranges over `(0, f(J⁺)_j]` and a row
/// whose `J⁻` terms stay below `b_i` needs some coordinate sitting at its
/// bound with `a⁺_ij * x_j = b_i`. A coordinate is pinned iff it is the
/// only such coverer of at least one row.
pub fn support_is_pinned(system: &BipolarSystem, j_plus: ColumnSet) -> bool {
    let m = system.m();
    let j_minus = j_plus.complement(m);
    let x = constructed(system, j_plus);
    let covers = |i: usize, j: usize| tnorm_product(system.a_plus(i, j), x.get(j)) == *system.b(i);
    let needy: Vec<usize> = (0..system.n())
        .filter(|&i| {
            let b = system.b(i);
            b.is_positive() && j_minus.iter().all(|l| system.a_minus(i, l) < b)
        })
        .collect();
    j_plus.iter().all(|j| {
        needy
            .iter()
            .any(|&i| covers(i, j) && j_plus.iter().all(|k| k == j || !covers(i, k)))
    })
}

/// Decides whether a reduced system has exactly one solution.
pub fn unique_solution_check(reduced: &ReducedSystem) -> Result<bool> {
    let Some(base) = &reduced.base else {
        return Ok(if reduced.rows.is_empty() {
            // no equations: every tuple over the retained columns solves it
            reduced.columns.is_empty()
        } else {
            // no columns: the empty tuple, which solves iff every b_i is 0
            reduced.b.iter().all(Scalar::is_zero)
        });
    };
    let options = SolverOptions {
        cap: MAX_COLUMNS,
        threads: 1,
    };
    let family = enumerate_feasible_pairs(base, &options)?;
    if family.len() != 1 {
        // none: no solution; several: distinct supports, distinct solutions
        return Ok(false);
    }
    let only = family.pairs().next().expect("one pair");
    Ok(support_is_pinned(base, only.j_plus))
}

pub fn lower_system(system: &BipolarSystem, options: &SolverOptions) -> Result<LowerDescription> {
    let family = solvable_family(system, options, "lower_system")?;
    let mut diagnostics = Vec::new();
    lower_from_family(system, &family, &mut diagnostics)
}

fn lower_from_family(
    system: &BipolarSystem,
    family: &FeasibleFamily,
    diagnostics: &mut Vec<String>,
) -> Result<LowerDescription> {
    let m = system.m();
    if family.contains_minus(ColumnSet::full(m)) {
        return Ok(LowerDescription::Least(Assignment::zeros(m)));
    }
    let mut minimals = Vec::new();
    for j_minus in maximal_elements(&family.s_minus()).maximal {
        let j_plus = j_minus.complement(m);
        let pinned = support_is_pinned(system, j_plus);
        let reduced_unique = unique_solution_check(&reduced_system(system, j_minus))?;
        match (pinned, reduced_unique) {
            (true, true) => {}
            (true, false) => diagnostics.push(format!(
                "maximal J- = {j_minus}: reduced system is not uniquely solvable, but the support {j_plus} is pinned by the full system; f(J-) reported as minimal"
            )),
            (false, _) => diagnostics.push(format!(
                "maximal J- = {j_minus}: support {j_plus} can be lowered, contributes no minimal solution"
            )),
        }
        if pinned {
            minimals.push(constructed(system, j_plus));
        }
    }
    Ok(if minimals.is_empty() {
        LowerDescription::NoMinimalElements
    } else {
        LowerDescription::FiniteMinimals(minimals)
    })
}

/// Everything the solver knows about one system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSummary {
    pub solvable: bool,
    pub greatest: Option<Assignment>,
    pub maximal: Vec<Assignment>,
    /// `None` exactly when the system is unsolvable.
    pub lower: Option<LowerDescription>,
    pub pairs: FeasibleFamily,
    pub diagnostics: Vec<String>,
}

pub fn summarize(system: &BipolarSystem, options: &SolverOptions) -> Result<SolutionSummary> {
    let pairs = enumerate_feasible_pairs(system, options)?;
    if pairs.is_empty() {
        return Ok(SolutionSummary {
            solvable: false,
            greatest: None,
            maximal: Vec::new(),
            lower: None,
            pairs,
            diagnostics: vec!["no feasible pair: the system has no solution".into()],
        });
    }
    let mut diagnostics = Vec::new();
    let plus = maximal_elements(&pairs.s_plus());
    let greatest = plus.greatest.map(|top| constructed(system, top));
    let maximal = maximal_from_family(system, &pairs);
    let lower = lower_from_family(system, &pairs, &mut diagnostics)?;
    Ok(SolutionSummary {
        solvable: true,
        greatest,
        maximal,
        lower: Some(lower),
        pairs,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{is_solution, parse_system};

    const MOTOR: &str = r#"{
        "a_plus":  [["0.4", "0.2", "0.5"], ["0", "0", "0.4"]],
        "a_minus": [["0.7", "0.1", "0.2"], ["0.9", "0", "0"]],
        "b": ["0.3", "0"]
    }"#;

    fn motor() -> BipolarSystem {
        parse_system(MOTOR).unwrap()
    }

    fn cols(one_based: &[usize]) -> ColumnSet {
        ColumnSet::from_one_based(one_based.iter().copied()).unwrap()
    }

    fn x(values: &[&str]) -> Assignment {
        Assignment::parse(values).unwrap()
    }

    fn system(rows: &[(&[&str], &[&str], &str)]) -> BipolarSystem {
        BipolarSystem::new(
            rows.iter()
                .map(|(ap, am, b)| BipolarEquation::parse(ap, am, b).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    #[test]
    fn motor_feasible_pairs() {
        let sys = motor();
        assert!(is_feasible_pair(&sys, cols(&[1, 2]), cols(&[3])).unwrap());
        assert!(is_feasible_pair(&sys, cols(&[1]), cols(&[2, 3])).unwrap());
        assert!(!is_feasible_pair(&sys, cols(&[1, 2, 3]), cols(&[])).unwrap());
        let family = enumerate_feasible_pairs(&sys, &opts()).unwrap();
        let pairs: Vec<_> = family.pairs().map(|p| (p.j_plus, p.j_minus)).collect();
        assert_eq!(
            pairs,
            vec![(cols(&[1]), cols(&[2, 3])), (cols(&[1, 2]), cols(&[3]))]
        );
    }

    #[test]
    fn non_partitions_are_rejected() {
        let sys = motor();
        assert!(matches!(
            is_feasible_pair(&sys, cols(&[1]), cols(&[3])),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            is_feasible_pair(&sys, cols(&[1, 2]), cols(&[2, 3])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn negative_terms_above_b_make_a_pair_infeasible() {
        // (∅, {1,2}) would leave 0.7 on the left-hand side
        let sys = system(&[(&["0.1", "0.1"], &["0.5", "0.7"], "0.5")]);
        assert!(!is_feasible_pair(&sys, cols(&[]), cols(&[1, 2])).unwrap());
        assert!(is_feasible_pair(&sys, cols(&[2]), cols(&[1])).unwrap());
    }

    #[test]
    fn trivial_and_unsolvable_families() {
        let zero = system(&[(&["0"], &["0"], "0")]);
        let family = enumerate_feasible_pairs(&zero, &opts()).unwrap();
        assert_eq!(family.s_plus(), vec![cols(&[]), cols(&[1])]);

        let unsolvable = system(&[(&["0.1", "0.1"], &["0.2", "0.3"], "0.5")]);
        assert!(enumerate_feasible_pairs(&unsolvable, &opts())
            .unwrap()
            .is_empty());
        assert!(!solvable_system(&unsolvable, &opts()).unwrap());
        assert!(solvable_system(&motor(), &opts()).unwrap());
    }

    #[test]
    fn enumeration_cap() {
        let wide = system(&[(&["0"; 5], &["0"; 5], "0")]);
        let err =
            enumerate_feasible_pairs(&wide, &SolverOptions { cap: 4, threads: 1 }).unwrap_err();
        assert!(matches!(
            err,
            Error::ResourceLimit {
                requested: 5,
                cap: 4,
                ..
            }
        ));
        assert_eq!(
            enumerate_feasible_pairs(&wide, &SolverOptions { cap: 5, threads: 1 })
                .unwrap()
                .len(),
            32
        );
    }

    #[test]
    fn constructs_solutions() {
        let sys = motor();
        assert_eq!(
            construct_solution(&sys, cols(&[1, 2])).unwrap(),
            x(&["0.75", "1", "0"])
        );
        assert_eq!(
            construct_solution(&sys, cols(&[1])).unwrap(),
            x(&["0.75", "0", "0"])
        );
        assert!(matches!(
            construct_solution(&sys, cols(&[1, 2, 3])),
            Err(Error::Contract(_))
        ));
        let zero = system(&[(&["0"], &["0"], "0")]);
        assert_eq!(construct_solution(&zero, cols(&[1])).unwrap(), x(&["1"]));
    }

    #[test]
    fn maximal_element_extraction() {
        let m = maximal_elements(&[cols(&[1, 2]), cols(&[1])]);
        assert_eq!(
            (m.maximal, m.greatest),
            (vec![cols(&[1, 2])], Some(cols(&[1, 2])))
        );
        let m = maximal_elements(&[cols(&[3]), cols(&[2, 3])]);
        assert_eq!(
            (m.maximal, m.greatest),
            (vec![cols(&[2, 3])], Some(cols(&[2, 3])))
        );
        let m = maximal_elements(&[cols(&[]), cols(&[1]), cols(&[2])]);
        assert_eq!(
            (m.maximal, m.greatest),
            (vec![cols(&[1]), cols(&[2])], None)
        );
        assert_eq!(maximal_elements(&[]).greatest, None);
    }

    #[test]
    fn greatest_and_maximal() {
        let sys = motor();
        assert_eq!(
            greatest_system(&sys, &opts()).unwrap(),
            Some(x(&["0.75", "1", "0"]))
        );
        assert_eq!(
            maximal_solutions(&sys, &opts()).unwrap(),
            vec![x(&["0.75", "1", "0"])]
        );

        let two = system(&[(&["0", "0"], &["0.5", "0.5"], "0.5")]);
        assert_eq!(greatest_system(&two, &opts()).unwrap(), None);
        assert_eq!(
            maximal_solutions(&two, &opts()).unwrap(),
            vec![x(&["1", "0"]), x(&["0", "1"])]
        );

        let zero = system(&[(&["0"], &["0"], "0")]);
        assert_eq!(greatest_system(&zero, &opts()).unwrap(), Some(x(&["1"])));
        assert_eq!(maximal_solutions(&zero, &opts()).unwrap(), vec![x(&["1"])]);

        let unsolvable = system(&[(&["0.1", "0.1"], &["0.2", "0.3"], "0.5")]);
        assert!(matches!(
            greatest_system(&unsolvable, &opts()),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn reduced_systems() {
        let sys = motor();
        let r = reduced_system(&sys, cols(&[2, 3]));
        assert_eq!((r.rows.clone(), r.columns.clone()), (vec![0, 1], vec![0]));
        let expected = system(&[(&["0.4"], &["0.7"], "0.3"), (&["0"], &["0.9"], "0")]);
        assert_eq!(r.base.as_ref(), Some(&expected));
        assert!(unique_solution_check(&r).unwrap());

        let r = reduced_system(&sys, cols(&[3]));
        assert_eq!((r.rows, r.columns), (vec![0, 1], vec![0, 1]));

        let r = reduced_system(&sys, cols(&[]));
        assert_eq!((r.rows, r.columns), (vec![0, 1], vec![0, 1, 2]));
    }

    #[test]
    fn uniqueness_check() {
        let one = system(&[(&["0.2"], &["0"], "0.1")]);
        let r = reduced_system(&one, cols(&[]));
        assert!(unique_solution_check(&r).unwrap());

        let free = ReducedSystem {
            base: None,
            rows: vec![],
            columns: vec![0],
            b: vec![],
        };
        assert!(!unique_solution_check(&free).unwrap());
        let empty = ReducedSystem {
            base: None,
            rows: vec![],
            columns: vec![],
            b: vec![],
        };
        assert!(unique_solution_check(&empty).unwrap());

        // x = 0.5 and x = 0 both solve 1*x ∨ 0.5*n(x) = 0.5
        let two = system(&[(&["1"], &["0.5"], "0.5")]);
        assert!(!unique_solution_check(&reduced_system(&two, cols(&[]))).unwrap());

        // 0.5*x = 0.5 ∨ ... with a second free column
        let loose = system(&[(&["1", "0.1"], &["0", "0"], "0.5")]);
        assert!(!unique_solution_check(&reduced_system(&loose, cols(&[]))).unwrap());
    }

    #[test]
    fn lower_descriptions() {
        assert_eq!(
            lower_system(&motor(), &opts()).unwrap(),
            LowerDescription::FiniteMinimals(vec![x(&["0.75", "0", "0"])])
        );

        let two = system(&[(&["0", "0"], &["0.5", "0.5"], "0.5")]);
        assert_eq!(
            lower_system(&two, &opts()).unwrap(),
            LowerDescription::Least(x(&["0", "0"]))
        );

        let pinned = system(&[
            (&["0", "0.3"], &["0.5", "0"], "0.5"),
            (&["0", "0.6"], &["0", "0"], "0.3"),
        ]);
        assert_eq!(
            lower_system(&pinned, &opts()).unwrap(),
            LowerDescription::FiniteMinimals(vec![x(&["0", "0.5"])])
        );

        // x1 = 0 and x2 ranges over (0, 1]
        let open = system(&[
            (&["0", "0"], &["0.5", "0.7"], "0.5"),
            (&["0", "0.1"], &["0.3", "0"], "0.3"),
        ]);
        assert_eq!(
            lower_system(&open, &opts()).unwrap(),
            LowerDescription::NoMinimalElements
        );
    }

    #[test]
    fn minimal_solution_outside_the_reduced_uniqueness_criterion() {
        // the only solution is (0, 0.5); the reduced system for J- = {1}
        // also admits x2 = 0
        let sys = system(&[
            (&["0", "0"], &["0.5", "0.8"], "0.5"),
            (&["0", "1"], &["0.1", "0.5"], "0.5"),
        ]);
        assert!(!unique_solution_check(&reduced_system(&sys, cols(&[1]))).unwrap());
        let summary = summarize(&sys, &opts()).unwrap();
        assert_eq!(
            summary.lower,
            Some(LowerDescription::FiniteMinimals(vec![x(&["0", "0.5"])]))
        );
        assert_eq!(summary.greatest, Some(x(&["0", "0.5"])));
        assert_eq!(summary.diagnostics.len(), 1);
    }

    #[test]
    fn summaries() {
        let s = summarize(&motor(), &opts()).unwrap();
        assert!(s.solvable);
        assert_eq!(s.greatest, Some(x(&["0.75", "1", "0"])));
        assert_eq!(s.maximal, vec![x(&["0.75", "1", "0"])]);
        assert_eq!(
            s.lower,
            Some(LowerDescription::FiniteMinimals(vec![x(&[
                "0.75", "0", "0"
            ])]))
        );
        assert_eq!(s.pairs.len(), 2);

        let s = summarize(
            &system(&[(&["0.1", "0.1"], &["0.2", "0.3"], "0.5")]),
            &opts(),
        )
        .unwrap();
        assert!(!s.solvable && s.greatest.is_none() && s.maximal.is_empty() && s.lower.is_none());

        let s = summarize(&system(&[(&["0"], &["0"], "0")]), &opts()).unwrap();
        assert_eq!(s.greatest, Some(x(&["1"])));
        assert_eq!(s.lower, Some(LowerDescription::Least(x(&["0"]))));
    }

    #[test]
    fn every_feasible_pair_yields_a_solution() {
        let sys = motor();
        for pair in enumerate_feasible_pairs(&sys, &opts()).unwrap().pairs() {
            let sol = construct_solution(&sys, pair.j_plus).unwrap();
            assert!(is_solution(&sys, &sol).unwrap());
        }
    }

    #[test]
    fn parallel_scan_matches_sequential() {
        let sys = system(&[(&["0"; 14], &["0"; 14], "0")]);
        let seq = enumerate_feasible_pairs(
            &sys,
            &SolverOptions {
                cap: 24,
                threads: 1,
            },
        )
        .unwrap();
        let par = enumerate_feasible_pairs(
            &sys,
            &SolverOptions {
                cap: 24,
                threads: 3,
            },
        )
        .unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.len(), 1 << 14);
    }
}
