//! Seeded generators for random and structured inputs. Planted profiles
//! check their own structure at generation time, so a failing theorem
//! check can never be blamed on a malformed input.

use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::candidates::CandidateSet;
use crate::matrix::Scores;
use crate::profile::{aggregate, Ballot, LlullMatrix, Profile};
use crate::rational::{rat, rat_int, Rational};

/// Deterministic generator stream for one seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn generic_candidates(n: usize) -> CandidateSet {
    CandidateSet::new((0..n).map(|i| format!("c{i}"))).expect("n >= 1")
}

/// Random complete matrix: each pair gets `k / granularity` one way and
/// the complement the other way.
pub fn random_gamma_matrix(rng: &mut ChaCha8Rng, n: usize, granularity: u32) -> LlullMatrix {
    let g = i64::from(granularity.max(1));
    let mut picks = vec![0i64; n * n];
    for x in 0..n {
        for y in (x + 1)..n {
            let k = rng.gen_range(0..=g);
            picks[x * n + y] = k;
            picks[y * n + x] = g - k;
        }
    }
    LlullMatrix::from_fn(generic_candidates(n), |x, y| rat(picks[x * n + y], g))
}

/// Random ranking of `pool` with ties: tie_percent is the chance that a
/// candidate joins the previous tier instead of opening a new one.
fn random_tiers(rng: &mut ChaCha8Rng, pool: &[usize], tie_percent: u32) -> Vec<Vec<usize>> {
    let mut shuffled = pool.to_vec();
    shuffled.shuffle(rng);
    let mut tiers: Vec<Vec<usize>> = Vec::new();
    for c in shuffled {
        let join = !tiers.is_empty() && rng.gen_range(0..100) < tie_percent;
        if join {
            tiers.last_mut().unwrap().push(c);
        } else {
            tiers.push(vec![c]);
        }
    }
    tiers
}

/// Random profile of `ballots` weighted rankings over `n` candidates.
pub fn random_profile(
    rng: &mut ChaCha8Rng,
    n: usize,
    ballots: usize,
    max_weight: u32,
    tie_percent: u32,
) -> Profile {
    let candidates = generic_candidates(n);
    let pool: Vec<usize> = (0..n).collect();
    let ballots = (0..ballots)
        .map(|_| {
            let tiers = random_tiers(rng, &pool, tie_percent);
            let weight = rat_int(i64::from(rng.gen_range(1..=max_weight.max(1))));
            Ballot::new(&candidates, tiers, weight).expect("generated tiers partition the set")
        })
        .collect();
    Profile::new(candidates, ballots)
}

/// Random strict relation with roughly `density_percent` of all pairs.
pub fn random_relation(rng: &mut ChaCha8Rng, n: usize, density_percent: u32) -> crate::closure::Relation {
    let candidates = generic_candidates(n);
    let pairs = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y)
        .filter(|_| rng.gen_range(0..100) < density_percent)
        .collect::<Vec<_>>();
    crate::closure::Relation::new(candidates, pairs)
}

/// A generated profile carrying a structure that was verified to hold.
#[derive(Clone, Debug)]
pub struct PlantedProfile {
    pub profile: Profile,
    pub structure: PlantedStructure,
}

#[derive(Clone, Debug)]
pub enum PlantedStructure {
    /// Every ballot ranks all of `upper` above all of `lower`, so the
    /// aggregate scores are exactly 1 across the split.
    Dominance { upper: Vec<usize>, lower: Vec<usize> },
    /// More than half the weight ranks `upper` above `lower` pairwise.
    Majority { upper: Vec<usize>, lower: Vec<usize> },
    /// `members` form a block in every ballot.
    Clones { members: Vec<usize> },
}

fn random_split(rng: &mut ChaCha8Rng, n: usize, upper_size: usize) -> (Vec<usize>, Vec<usize>) {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    let mut upper = all[..upper_size].to_vec();
    let mut lower = all[upper_size..].to_vec();
    upper.sort_unstable();
    lower.sort_unstable();
    (upper, lower)
}

/// Profile where every ballot puts all of the upper class above all of
/// the lower class.
pub fn planted_dominance(
    rng: &mut ChaCha8Rng,
    upper_size: usize,
    lower_size: usize,
    ballots: usize,
) -> PlantedProfile {
    let n = upper_size + lower_size;
    let candidates = generic_candidates(n);
    let (upper, lower) = random_split(rng, n, upper_size);
    let ballots = (0..ballots.max(1))
        .map(|_| {
            let mut tiers = random_tiers(rng, &upper, 30);
            tiers.extend(random_tiers(rng, &lower, 30));
            let weight = rat_int(i64::from(rng.gen_range(1..=3u32)));
            Ballot::new(&candidates, tiers, weight).expect("tiers partition the set")
        })
        .collect();
    let profile = Profile::new(candidates, ballots);
    let matrix = aggregate(&profile).expect("positive total weight");
    for &x in &upper {
        for &y in &lower {
            assert!(matrix.get(x, y).is_one(), "planted dominance violated");
        }
    }
    PlantedProfile {
        profile,
        structure: PlantedStructure::Dominance { upper, lower },
    }
}

/// Profile where a strict majority of the weight ranks the upper class
/// above the lower class, while the rest of the ballots are arbitrary.
pub fn planted_majority(
    rng: &mut ChaCha8Rng,
    upper_size: usize,
    lower_size: usize,
) -> PlantedProfile {
    let n = upper_size + lower_size;
    let candidates = generic_candidates(n);
    let (upper, lower) = random_split(rng, n, upper_size);
    let free_ballots = rng.gen_range(1..=4usize);
    let aligned_ballots = free_ballots + rng.gen_range(1..=3usize);
    let pool: Vec<usize> = (0..n).collect();
    let mut ballots = Vec::new();
    for _ in 0..aligned_ballots {
        let mut tiers = random_tiers(rng, &upper, 30);
        tiers.extend(random_tiers(rng, &lower, 30));
        ballots.push(Ballot::new(&candidates, tiers, rat_int(1)).unwrap());
    }
    for _ in 0..free_ballots {
        let tiers = random_tiers(rng, &pool, 20);
        ballots.push(Ballot::new(&candidates, tiers, rat_int(1)).unwrap());
    }
    let profile = Profile::new(candidates, ballots);
    let matrix = aggregate(&profile).expect("positive total weight");
    let half = rat(1, 2);
    for &x in &upper {
        for &y in &lower {
            assert!(*matrix.get(x, y) > half, "planted majority violated");
        }
    }
    PlantedProfile {
        profile,
        structure: PlantedStructure::Majority { upper, lower },
    }
}

/// Profile in which `members` form a block of every ballot: either a run
/// of tiers of their own or one tied block inside a tier.
pub fn planted_clones(
    rng: &mut ChaCha8Rng,
    clone_size: usize,
    outsiders: usize,
    ballots: usize,
) -> PlantedProfile {
    let n = clone_size + outsiders;
    let candidates = generic_candidates(n);
    let (members, others) = random_split(rng, n, clone_size);
    let rep = members[0];
    let mut slot_pool: Vec<usize> = others.clone();
    slot_pool.push(rep);
    let ballots = (0..ballots.max(1))
        .map(|_| {
            let skeleton = random_tiers(rng, &slot_pool, 25);
            let mut tiers: Vec<Vec<usize>> = Vec::new();
            for tier in skeleton {
                if !tier.contains(&rep) {
                    tiers.push(tier);
                } else if tier.len() > 1 {
                    // Block tied with outsiders: all clones share the tier.
                    let mut expanded = tier;
                    expanded.retain(|&c| c != rep);
                    expanded.extend(members.iter().copied());
                    tiers.push(expanded);
                } else {
                    // Block on its own: expand into a run of clone tiers.
                    tiers.extend(random_tiers(rng, &members, 40));
                }
            }
            let weight = rat_int(i64::from(rng.gen_range(1..=3u32)));
            Ballot::new(&candidates, tiers, weight).expect("tiers partition the set")
        })
        .collect();
    let profile = Profile::new(candidates, ballots);
    let matrix = aggregate(&profile).expect("positive total weight");
    assert!(
        matrix.is_autonomous(&members),
        "planted clone set is not autonomous"
    );
    profile
        .contract(&members)
        .expect("clone set contracts in every ballot");
    PlantedProfile {
        profile,
        structure: PlantedStructure::Clones { members },
    }
}

/// Raises candidate `a` without touching any other pair: each margin
/// `m_ay` moves a random fraction of the way to 1.
pub fn random_lift(
    rng: &mut ChaCha8Rng,
    matrix: &LlullMatrix,
    a: usize,
    granularity: u32,
) -> LlullMatrix {
    let n = matrix.candidates().len();
    let g = i64::from(granularity.max(1));
    let one = Rational::one();
    let half = rat(1, 2);
    let mut lifted = Vec::with_capacity(n);
    for y in 0..n {
        if y == a {
            lifted.push(Rational::zero());
            continue;
        }
        let m = matrix.get(a, y) - matrix.get(y, a);
        let t = rat(rng.gen_range(0..=g), g);
        lifted.push(&m + (&one - &m) * t);
    }
    LlullMatrix::from_fn(matrix.candidates().clone(), |x, y| {
        if x == a {
            (&one + &lifted[y]) * &half
        } else if y == a {
            (&one - &lifted[x]) * &half
        } else {
            matrix.get(x, y).clone()
        }
    })
}

/// Moves every margin by at most `2 * eps` (so every score by at most
/// `eps`), clamping into `[-1, 1]`; completeness is preserved by
/// construction.
pub fn perturb_margins(
    rng: &mut ChaCha8Rng,
    matrix: &LlullMatrix,
    eps: &Rational,
    granularity: u32,
) -> LlullMatrix {
    let n = matrix.candidates().len();
    let g = i64::from(granularity.max(1));
    let one = Rational::one();
    let half = rat(1, 2);
    let mut entries = vec![Rational::zero(); n * n];
    for x in 0..n {
        for y in (x + 1)..n {
            let m = matrix.get(x, y) - matrix.get(y, x);
            let delta = rat(rng.gen_range(-g..=g), g) * eps * rat_int(2);
            let shifted = (m + delta).min(one.clone()).max(-one.clone());
            entries[x * n + y] = (&one + &shifted) * &half;
            entries[y * n + x] = (&one - &shifted) * &half;
        }
    }
    LlullMatrix::from_fn(matrix.candidates().clone(), |x, y| {
        entries[x * n + y].clone()
    })
}
