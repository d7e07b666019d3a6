use num::bigint::BigInt;
use num::{Integer, One, Zero};

use crate::candidates::CandidateSet;
use crate::rational::Rational;

/// Read access to a pairwise score table over a candidate set. Implemented
/// by the Llull matrix, the indirect scores and the projected scores, so
/// that margins, autonomy checks and rendering work on any of them.
pub trait Scores {
    fn candidates(&self) -> &CandidateSet;

    fn score(&self, x: usize, y: usize) -> &Rational;

    /// True when every outsider relates identically to all of `members`:
    /// `v_az = v_bz` and `v_za = v_zb` for `a, b` in the set, `z` outside.
    fn is_autonomous(&self, members: &[usize]) -> bool {
        let n = self.candidates().len();
        let Some(&first) = members.first() else {
            return true;
        };
        for z in (0..n).filter(|z| !members.contains(z)) {
            for &m in &members[1..] {
                if self.score(first, z) != self.score(m, z)
                    || self.score(z, first) != self.score(z, m)
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Dense square table of rationals indexed by ordered candidate pairs.
/// Diagonal cells are never meaningful and stay at zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PairTable {
    n: usize,
    cells: Vec<Rational>,
}

impl PairTable {
    pub fn zeros(n: usize) -> Self {
        PairTable {
            n,
            cells: vec![Rational::zero(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut t = PairTable::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    t.cells[i * n + j] = f(i, j);
                }
            }
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        debug_assert_ne!(i, j);
        self.cells[i * self.n + j] = value;
    }

    /// Rewrites every off-diagonal cell as a numerator over one shared
    /// denominator. Selection-only algorithms (max-min closures, rectangle
    /// minima) then run on plain integer comparisons.
    pub fn common_numerators(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for (k, cell) in self.cells.iter().enumerate() {
            if k / self.n != k % self.n {
                den = den.lcm(cell.denom());
            }
        }
        let nums = self
            .cells
            .iter()
            .enumerate()
            .map(|(k, cell)| {
                if k / self.n == k % self.n {
                    BigInt::zero()
                } else {
                    cell.numer() * (&den / cell.denom())
                }
            })
            .collect();
        (nums, den)
    }

    pub fn from_numerators(n: usize, nums: &[BigInt], den: &BigInt) -> Self {
        PairTable::from_fn(n, |i, j| Rational::new(nums[i * n + j].clone(), den.clone()))
    }
}
