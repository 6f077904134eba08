//! Completeness of the extremal sets against the grid.
//!
//! Coefficients come from the grid with step 1/4 and every `b` is either
//! on that grid or a product of two of its points, so every extremal
//! coordinate is 0 or some `b / a` with a denominator dividing 48. On the
//! grid with step 1/48 the solution set is a union of boxes whose faces all
//! sit on grid points. Then the maximal solutions are exactly the
//! grid-maximal points, and the minimal ones are exactly the grid-minimal
//! points with no coordinate at 1/48 (a coordinate there is free and could
//! go lower off the grid).

use bfre::oracle::{
    grid_solution_ticks, plant_instance, random_system, GridSpec, DEFAULT_GRID_CAP,
};
use bfre::*;
use num_rational::BigRational;

const COEFF_Q: u32 = 4;
const FINE_Q: u32 = 48;
const SIDE: usize = FINE_Q as usize + 1;

fn to_ticks(x: &Assignment) -> Vec<u32> {
    x.values()
        .iter()
        .map(|v| {
            let r = v.as_rational() * BigRational::from_integer(FINE_Q.into());
            assert!(r.is_integer(), "{v} is off the fine grid");
            r.to_integer().try_into().unwrap()
        })
        .collect()
}

/// Dense index of a tick vector, last coordinate fastest.
fn index(t: &[u32]) -> usize {
    t.iter().fold(0, |acc, &k| acc * SIDE + k as usize)
}

/// `out[p]`: some solution lies componentwise below `p` (above it when
/// `upward`), `p` included.
fn closure(m: usize, is_sol: &[bool], upward: bool) -> Vec<bool> {
    let mut out = is_sol.to_vec();
    let len = out.len();
    for step in 0..len {
        let p = if upward { len - 1 - step } else { step };
        let mut stride = 1;
        for _ in 0..m {
            let k = p / stride % SIDE;
            if upward && k + 1 < SIDE {
                out[p] |= out[p + stride];
            } else if !upward && k > 0 {
                out[p] |= out[p - stride];
            }
            stride *= SIDE;
        }
    }
    out
}

/// Whether `closure` holds at some point one tick away from `t`.
fn reaches_beyond(t: &[u32], closure: &[bool], upward: bool) -> bool {
    (0..t.len()).any(|j| {
        let mut u = t.to_vec();
        match (upward, u[j]) {
            (true, k) if k < FINE_Q => u[j] += 1,
            (false, k) if k > 0 => u[j] -= 1,
            _ => return false,
        }
        closure[index(&u)]
    })
}

fn check(sys: &BipolarSystem, label: &str) {
    let m = sys.m();
    let summary = summarize(sys, &SolverOptions::default()).unwrap();
    let ticks = grid_solution_ticks(sys, GridSpec::new(FINE_Q).unwrap(), DEFAULT_GRID_CAP).unwrap();
    if !summary.solvable {
        assert!(ticks.is_empty(), "{label}: solver says unsolvable");
        return;
    }
    let mut is_sol = vec![false; SIDE.pow(m as u32)];
    for t in &ticks {
        is_sol[index(t)] = true;
    }
    let down = closure(m, &is_sol, false);
    let up = closure(m, &is_sol, true);

    let mut grid_max: Vec<Vec<u32>> = ticks
        .iter()
        .filter(|t| !reaches_beyond(t, &up, true))
        .cloned()
        .collect();
    let mut reported_max: Vec<Vec<u32>> = summary.maximal.iter().map(to_ticks).collect();
    grid_max.sort();
    reported_max.sort();
    assert_eq!(reported_max, grid_max, "{label}: maximal set");

    let mut grid_min: Vec<Vec<u32>> = ticks
        .iter()
        .filter(|t| !t.contains(&1) && !reaches_beyond(t, &down, false))
        .cloned()
        .collect();
    grid_min.sort();
    let lower = summary.lower.unwrap();
    let mut reported_min: Vec<Vec<u32>> = lower.tuples().iter().map(to_ticks).collect();
    reported_min.sort();
    assert_eq!(reported_min, grid_min, "{label}: minimal set for {lower:?}");
    if let LowerDescription::Least(z) = &lower {
        let z = to_ticks(z);
        assert!(
            ticks.iter().all(|t| z.iter().zip(t).all(|(a, b)| a <= b)),
            "{label}: least"
        );
    }
}

#[test]
fn planted_extremal_sets_are_complete() {
    let grid = GridSpec::new(COEFF_Q).unwrap();
    for seed in 0..150u64 {
        let m = 1 + (seed % 3) as usize;
        let n = 1 + ((seed / 3) % 3) as usize;
        let sys = plant_instance(seed, m, n, grid).unwrap().system;
        check(&sys, &format!("planted seed {seed} ({m}x{n})"));
    }
}

#[test]
fn random_extremal_sets_are_complete() {
    let grid = GridSpec::new(COEFF_Q).unwrap();
    for seed in 0..150u64 {
        let m = 1 + (seed % 3) as usize;
        let n = 1 + ((seed / 3) % 2) as usize;
        let sys = random_system(seed, m, n, grid).unwrap();
        check(&sys, &format!("random seed {seed} ({m}x{n})"));
    }
}
