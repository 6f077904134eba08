//! Brute-force checks and instance generation.
//!
//! Nothing in here uses feasible pairs. The grid scan tests every point of
//! `{0, 1/q, ..., 1}^m` against the equations directly, so it can refute
//! the solver but never prove unsolvability over the continuum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::model::{
    column_term, evaluate_equation, is_solution, Assignment, BipolarEquation, BipolarSystem,
};

pub const DEFAULT_GRID_CAP: u128 = 10_000_000;

/// The grid `{0, 1/q, ..., 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    q: u32,
}

impl GridSpec {
    pub fn new(q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::contract("grid denominator must be positive"));
        }
        Ok(GridSpec { q })
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn point(self, k: u32) -> Scalar {
        Scalar::from_ratio(k.into(), self.q.into()).expect("k <= q")
    }

    /// Number of points in `grid^m`.
    pub fn size(self, m: usize) -> u128 {
        (self.q as u128 + 1)
            .checked_pow(m as u32)
            .unwrap_or(u128::MAX)
    }
}

/// How one column term compares with `b_i` at a grid value.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Reach {
    Below,
    Hits,
    Above,
}

/// Every grid point that solves the system exactly, in lexicographic order.
pub fn grid_solutions(system: &BipolarSystem, grid: GridSpec) -> Result<Vec<Assignment>> {
    grid_solutions_capped(system, grid, DEFAULT_GRID_CAP)
}

pub fn grid_solutions_capped(
    system: &BipolarSystem,
    grid: GridSpec,
    cap: u128,
) -> Result<Vec<Assignment>> {
    let values: Vec<Scalar> = (0..=grid.q).map(|k| grid.point(k)).collect();
    Ok(grid_solution_ticks(system, grid, cap)?
        .into_iter()
        .map(|p| Assignment::new(p.into_iter().map(|k| values[k as usize].clone()).collect()))
        .collect())
}

/// Like [`grid_solutions_capped`], with each solution given by its grid
/// indices: `k` stands for `k/q`.
pub fn grid_solution_ticks(
    system: &BipolarSystem,
    grid: GridSpec,
    cap: u128,
) -> Result<Vec<Vec<u32>>> {
    let (m, n) = (system.m(), system.n());
    let size = grid.size(m);
    if size > cap {
        return Err(Error::ResourceLimit {
            what: "grid points",
            requested: size,
            cap,
        });
    }
    let q = grid.q;
    let values: Vec<Scalar> = (0..=q).map(|k| grid.point(k)).collect();
    // reach[i][j][k]: column j of row i at x_j = k/q
    let reach: Vec<Vec<Vec<Reach>>> = (0..n)
        .map(|i| {
            let b = system.b(i);
            (0..m)
                .map(|j| {
                    values
                        .iter()
                        .map(|v| {
                            let t = column_term(system.a_plus(i, j), system.a_minus(i, j), v);
                            match t.cmp(b) {
                                std::cmp::Ordering::Less => Reach::Below,
                                std::cmp::Ordering::Equal => Reach::Hits,
                                std::cmp::Ordering::Greater => Reach::Above,
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let solves = |point: &[u32]| {
        reach.iter().all(|row| {
            let mut hit = false;
            for (j, &k) in point.iter().enumerate() {
                match row[j][k as usize] {
                    Reach::Above => return false,
                    Reach::Hits => hit = true,
                    Reach::Below => {}
                }
            }
            hit
        })
    };
    Ok((0..=q)
        .into_par_iter()
        .map(|lead| {
            let mut out = Vec::new();
            let mut point = vec![0u32; m];
            point[0] = lead;
            loop {
                if solves(&point) {
                    out.push(point.clone());
                }
                // odometer over coordinates 1..m, last one fastest
                let mut j = m;
                loop {
                    if j == 1 {
                        return out;
                    }
                    j -= 1;
                    if point[j] < q {
                        point[j] += 1;
                        break;
                    }
                    point[j] = 0;
                }
            }
        })
        .flatten()
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Above,
    Below,
}

/// A grid solution strictly above (or below) `x`, if there is one.
pub fn refute_extremal(
    system: &BipolarSystem,
    x: &Assignment,
    direction: Direction,
    grid: GridSpec,
) -> Result<Option<Assignment>> {
    if !is_solution(system, x)? {
        return Err(Error::contract(format!("{x} is not a solution")));
    }
    Ok(refute_among(&grid_solutions(system, grid)?, x, direction))
}

/// Same as [`refute_extremal`] against a precomputed solution list.
pub fn refute_among(
    solutions: &[Assignment],
    x: &Assignment,
    direction: Direction,
) -> Option<Assignment> {
    solutions
        .iter()
        .find(|y| match direction {
            Direction::Above => x.strictly_below(y),
            Direction::Below => y.strictly_below(x),
        })
        .cloned()
}

/// Halves `x_k` (0-based `k`) `steps` times, requiring a solution after
/// every step.
pub fn halving_descent(
    system: &BipolarSystem,
    x: &Assignment,
    k: usize,
    steps: usize,
) -> Result<bool> {
    if !is_solution(system, x)? {
        return Err(Error::contract(format!("{x} is not a solution")));
    }
    if k >= x.len() || !x.get(k).is_positive() {
        return Err(Error::contract(format!(
            "coordinate {} of {x} is not positive",
            k + 1
        )));
    }
    let mut current = x.clone();
    for _ in 0..steps {
        current = current.with(k, current.get(k).halved());
        if !is_solution(system, &current)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedInstance {
    pub system: BipolarSystem,
    pub planted: Assignment,
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::contract(format!("need m, n >= 1, got m={m}, n={n}")));
    }
    Ok(())
}

fn draw(rng: &mut ChaCha8Rng, grid: GridSpec, count: usize) -> Vec<Scalar> {
    (0..count)
        .map(|_| grid.point(rng.gen_range(0..=grid.q)))
        .collect()
}

/// A seeded system built around a random grid assignment; `b` is the
/// left-hand side evaluated there, so the instance is always solvable.
pub fn plant_instance(seed: u64, m: usize, n: usize, grid: GridSpec) -> Result<PlantedInstance> {
    check_dims(m, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let planted = Assignment::new(draw(&mut rng, grid, m));
    let rows = (0..n)
        .map(|_| {
            let a_plus = draw(&mut rng, grid, m);
            let a_minus = draw(&mut rng, grid, m);
            let probe = BipolarEquation::new(a_plus.clone(), a_minus.clone(), Scalar::zero())?;
            let b = evaluate_equation(&probe, &planted)?;
            BipolarEquation::new(a_plus, a_minus, b)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlantedInstance {
        system: BipolarSystem::new(rows)?,
        planted,
    })
}

/// A seeded system with every coefficient, `b` included, drawn from the
/// grid. Often unsolvable.
pub fn random_system(seed: u64, m: usize, n: usize, grid: GridSpec) -> Result<BipolarSystem> {
    check_dims(m, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..n)
        .map(|_| {
            let a_plus = draw(&mut rng, grid, m);
            let a_minus = draw(&mut rng, grid, m);
            let b = draw(&mut rng, grid, 1).remove(0);
            BipolarEquation::new(a_plus, a_minus, b)
        })
        .collect::<Result<Vec<_>>>()?;
    BipolarSystem::new(rows)
}
