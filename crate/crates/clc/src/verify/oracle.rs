//! Independent ways to compute indirect scores, used to cross-check the
//! triple-loop closure. Both are exact and deliberately naive.

use num::bigint::BigInt;

use crate::closure::IndirectScores;
use crate::error::{Error, Result};
use crate::profile::LlullMatrix;

/// Size cap for exhaustive path enumeration.
pub const ORACLE_BOUND: usize = 8;

/// Indirect scores by brute force: for every ordered pair, enumerate all
/// simple paths and take the best worst link.
pub fn oracle_indirect_scores(matrix: &LlullMatrix) -> Result<IndirectScores> {
    let n = matrix.candidates().len();
    if n > ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            n,
            bound: ORACLE_BOUND,
        });
    }
    let (nums, den) = matrix.table().common_numerators();
    let mut best = nums.clone();
    let mut visited = vec![false; n];
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            visited.iter_mut().for_each(|v| *v = false);
            visited[x] = true;
            let mut best_xy = nums[x * n + y].clone();
            explore(&nums, n, x, y, None, &mut visited, &mut best_xy);
            best[x * n + y] = best_xy;
        }
    }
    Ok(IndirectScores::from_fn(
        matrix.candidates().clone(),
        |x, y| crate::rational::Rational::new(best[x * n + y].clone(), den.clone()),
    ))
}

fn explore(
    nums: &[BigInt],
    n: usize,
    current: usize,
    target: usize,
    weakest: Option<&BigInt>,
    visited: &mut Vec<bool>,
    best: &mut BigInt,
) {
    for next in 0..n {
        if next == current || (next != target && visited[next]) {
            continue;
        }
        let link = &nums[current * n + next];
        let score = match weakest {
            Some(w) if w < link => w,
            _ => link,
        };
        if next == target {
            if *score > *best {
                *best = score.clone();
            }
            continue;
        }
        // No point extending a path already no better than the best found.
        if *score <= *best {
            continue;
        }
        visited[next] = true;
        let score = score.clone();
        explore(nums, n, next, target, Some(&score), visited, best);
        visited[next] = false;
    }
}

/// Indirect scores as a max-min matrix power: with the diagonal treated
/// as 1, the product `(vw)_xz = max_y min(v_xy, w_yz)` stabilizes at
/// exponent `N - 1`, and the result is the closure.
pub fn indirect_scores_by_power(matrix: &LlullMatrix) -> IndirectScores {
    let n = matrix.candidates().len();
    let (base, den) = matrix.table().common_numerators();
    let supplement = |cells: &[BigInt], i: usize, j: usize| -> BigInt {
        if i == j {
            den.clone()
        } else {
            cells[i * n + j].clone()
        }
    };
    let mut power = base.clone();
    for _ in 1..n.saturating_sub(1) {
        let mut next = vec![BigInt::from(0); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut best = BigInt::from(0);
                for k in 0..n {
                    let left = supplement(&power, i, k);
                    let right = supplement(&base, k, j);
                    let through = left.min(right);
                    if through > best {
                        best = through;
                    }
                }
                next[i * n + j] = best;
            }
        }
        power = next;
    }
    let candidates = matrix.candidates().clone();
    IndirectScores::from_fn(candidates, |x, y| {
        crate::rational::Rational::new(power[x * n + y].clone(), den.clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::candidates::CandidateSet;
    use crate::closure::indirect_scores;
    use crate::rational::rat;

    #[test]
    fn oracle_equals_input_for_two_candidates() {
        let set = CandidateSet::new(["A", "B"]).unwrap();
        let m = LlullMatrix::from_fn(set, |x, _| if x == 0 { rat(3, 4) } else { rat(1, 4) });
        let oracle = oracle_indirect_scores(&m).unwrap();
        assert_eq!(oracle.get(0, 1), &rat(3, 4));
        assert_eq!(oracle.get(1, 0), &rat(1, 4));
    }

    #[test]
    fn oracle_and_power_agree_with_the_closure_on_a_cycle() {
        let set = CandidateSet::new(["A", "B", "C"]).unwrap();
        let m = LlullMatrix::from_fn(set, |x, y| {
            if (y + 3 - x) % 3 == 1 {
                rat(2, 3)
            } else {
                rat(1, 3)
            }
        });
        let dp = indirect_scores(&m);
        assert_eq!(oracle_indirect_scores(&m).unwrap(), dp);
        assert_eq!(indirect_scores_by_power(&m), dp);
    }

    #[test]
    fn oracle_refuses_large_inputs() {
        let names: Vec<String> = (0..9).map(|i| format!("c{i}")).collect();
        let set = CandidateSet::new(names).unwrap();
        let m = LlullMatrix::from_fn(set, |_, _| rat(1, 2));
        assert!(matches!(
            oracle_indirect_scores(&m),
            Err(Error::BoundExceeded { n: 9, bound: 8 })
        ));
    }
}
