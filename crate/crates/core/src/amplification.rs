//! Repeated queries, threshold decisions and the classical baselines.
//!
//! Each continuous-variable query either detects (the measured position falls
//! inside the window) or not, so `m` queries to a fixed oracle are `m`
//! Bernoulli trials. Only the indicator matters for the decision, so the
//! simulation draws Bernoulli variables with the exact window probability
//! instead of sampling positions from the density.

use core::f64::consts::FRAC_PI_2;

// Float math is inherent on f64 in core only on recent toolchains.
#[allow(unused_imports)]
use num_traits::Float;

use crate::bitstrings::{classify, BitString, PromiseClass};
use crate::error::{Error, Result};
use crate::measurement::{asb_window_prob, constant_window_prob};
use crate::rng::{TrialRng, ALGORITHM};

/// Runs simulated per RNG stream in [`monte_carlo_error`]; fixed so results do
/// not depend on how blocks are scheduled.
pub const MONTE_CARLO_BLOCK: u64 = 4096;

/// Seeds used when a result must hold across several independent runs.
pub const SEED_PANEL: [u64; 10] = [0, 1, 2, 3, 5, 8, 13, 21, 34, 55];

/// Which promise class the oracle is set to, or which class was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Constant,
    Balanced,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Constant => "Constant",
            Decision::Balanced => "Balanced",
        }
    }

    fn stream_tag(self) -> u64 {
        match self {
            Decision::Constant => 0,
            Decision::Balanced => 1,
        }
    }
}

/// Per-query detection probabilities for the two promise classes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QueryModel {
    p_constant: f64,
    p_balanced: f64,
    illustrative: bool,
}

impl QueryModel {
    /// Requires `0 ≤ p_balanced < 1/2 < p_constant ≤ 1`.
    pub fn new(p_constant: f64, p_balanced: f64) -> Result<Self> {
        if !((0.0..0.5).contains(&p_balanced) && p_constant > 0.5 && p_constant <= 1.0) {
            return Err(Error::UnseparatedModel {
                p_constant,
                p_balanced,
            });
        }
        Ok(Self {
            p_constant,
            p_balanced,
            illustrative: false,
        })
    }

    /// The constant and worst-case (ASB) window probabilities at `Pδ = π/2`.
    pub fn optimal_window() -> Self {
        let p_constant = constant_window_prob(1.0, FRAC_PI_2).expect("valid window");
        let p_balanced = asb_window_prob(1.0, FRAC_PI_2).expect("valid window");
        Self::new(p_constant, p_balanced).expect("separated by construction")
    }

    /// The rounded pair `(3/4, 1/4)` used for the simple Chernoff argument.
    pub fn illustrative() -> Self {
        Self {
            p_constant: 0.75,
            p_balanced: 0.25,
            illustrative: true,
        }
    }

    pub fn p_constant(&self) -> f64 {
        self.p_constant
    }

    pub fn p_balanced(&self) -> f64 {
        self.p_balanced
    }

    pub fn is_illustrative(&self) -> bool {
        self.illustrative
    }

    pub fn detection_probability(&self, truth: Decision) -> f64 {
        match truth {
            Decision::Constant => self.p_constant,
            Decision::Balanced => self.p_balanced,
        }
    }

    /// Chernoff bound on the probability that [`decide`] misclassifies after
    /// `m` queries when the oracle is `truth`.
    ///
    /// For constant oracles the lower tail is used with `(1 − ε)μ = m/2`; for
    /// balanced oracles the upper tail with `(1 + ε)μ = m/2`, with `ε` capped
    /// at 1 (which bounds `Pr[X > 2μ] ≥ Pr[X > m/2]`).
    pub fn chernoff_bound(&self, truth: Decision, m: u64) -> f64 {
        let m = m as f64;
        match truth {
            Decision::Constant => {
                let eps = 1.0 - 1.0 / (2.0 * self.p_constant);
                (-m * self.p_constant * eps * eps / 2.0).exp()
            }
            Decision::Balanced => {
                if self.p_balanced == 0.0 {
                    return 0.0;
                }
                let eps = (1.0 / (2.0 * self.p_balanced) - 1.0).min(1.0);
                (-m * self.p_balanced * eps * eps / 4.0).exp()
            }
        }
    }
}

impl Default for QueryModel {
    fn default() -> Self {
        Self::optimal_window()
    }
}

fn check_queries(m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::TooSmall {
            name: "query count",
            min: 1,
            value: 0,
        });
    }
    Ok(())
}

fn count_detections(p: f64, m: u64, rng: &mut TrialRng) -> u64 {
    (0..m).filter(|_| rng.bernoulli(p)).count() as u64
}

/// Number of detections in `m` queries to a `truth` oracle, from stream 0 of
/// `seed`.
pub fn run_trials(model: &QueryModel, truth: Decision, m: u64, seed: u64) -> Result<u64> {
    check_queries(m)?;
    let mut rng = TrialRng::new(seed, 0);
    Ok(count_detections(
        model.detection_probability(truth),
        m,
        &mut rng,
    ))
}

/// More than half the queries detected → constant; ties go to balanced.
pub fn decide(detections: u64, m: u64) -> Decision {
    if 2 * detections > m {
        Decision::Constant
    } else {
        Decision::Balanced
    }
}

fn check_chernoff(mu: f64, eps: f64) -> Result<()> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::NotPositive {
            name: "mu",
            value: mu,
        });
    }
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::NotPositive {
            name: "epsilon in (0, 1]",
            value: eps,
        });
    }
    Ok(())
}

/// `Pr[X < (1 − ε)μ] < e^{−με²/2}`.
pub fn chernoff_lower(mu: f64, eps: f64) -> Result<f64> {
    check_chernoff(mu, eps)?;
    Ok((-mu * eps * eps / 2.0).exp())
}

/// `Pr[X > (1 + ε)μ] < e^{−με²/4}`.
pub fn chernoff_upper(mu: f64, eps: f64) -> Result<f64> {
    check_chernoff(mu, eps)?;
    Ok((-mu * eps * eps / 4.0).exp())
}

/// `1 − e^{−m/24}`.
pub fn success_bound(m: u64) -> f64 {
    -(-(m as f64) / 24.0).exp_m1()
}

/// Success probability of `m` random queries without replacement:
/// `1 − Π_{j=1}^{m} (N/2 − (j−1))/(N − (j−1))`, and exactly 1 once
/// `m > N/2`.
pub fn classical_probabilistic_bound(len: usize, m: usize) -> Result<f64> {
    if len < 2 {
        return Err(Error::TooShort(len));
    }
    if !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    if m > len / 2 {
        return Ok(1.0);
    }
    let half = (len / 2) as f64;
    let n = len as f64;
    let fail: f64 = (0..m).map(|j| (half - j as f64) / (n - j as f64)).product();
    Ok(1.0 - fail)
}

/// `1 − 2^{−m}`.
pub fn with_replacement_bound(m: usize) -> f64 {
    1.0 - 0.5f64.powi(m as i32)
}

/// Result of the deterministic classical strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeterministicOutcome {
    pub class: PromiseClass,
    pub queries: usize,
    /// `z` is neither constant nor balanced, so `class` may be wrong.
    pub promise_violated: bool,
}

/// Queries `z_0, z_1, …` in order and stops at the first output that differs
/// from `z_0` (balanced) or after `N/2 + 1` equal outputs (constant).
pub fn classical_deterministic(z: &BitString) -> DeterministicOutcome {
    let limit = z.len() / 2 + 1;
    let first = z.bit(0);
    let mut queries = 1;
    let mut class = PromiseClass::Constant;
    while queries < limit {
        let out = z.bit(queries);
        queries += 1;
        if out != first {
            class = PromiseClass::Balanced;
            break;
        }
    }
    DeterministicOutcome {
        class,
        queries,
        promise_violated: classify(z) == PromiseClass::Neither,
    }
}

/// Raw counts from one block of Monte-Carlo runs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BlockTally {
    pub runs: u64,
    pub detections: u64,
    pub errors: u64,
    pub constant_decisions: u64,
}

impl core::ops::Add for BlockTally {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self {
            runs: self.runs + o.runs,
            detections: self.detections + o.detections,
            errors: self.errors + o.errors,
            constant_decisions: self.constant_decisions + o.constant_decisions,
        }
    }
}

/// Number of blocks covering `runs` runs.
pub fn block_count(runs: u64) -> u64 {
    runs.div_ceil(MONTE_CARLO_BLOCK)
}

/// Simulates block `block` of a `runs`-run experiment; block `b` reads stream
/// `2b + (truth == Balanced)` of `seed`.
pub fn monte_carlo_block(
    model: &QueryModel,
    truth: Decision,
    m: u64,
    runs: u64,
    seed: u64,
    block: u64,
) -> BlockTally {
    let start = block * MONTE_CARLO_BLOCK;
    let len = MONTE_CARLO_BLOCK.min(runs.saturating_sub(start));
    let mut rng = TrialRng::new(seed, 2 * block + truth.stream_tag());
    let p = model.detection_probability(truth);
    let mut tally = BlockTally {
        runs: len,
        ..BlockTally::default()
    };
    for _ in 0..len {
        let detections = count_detections(p, m, &mut rng);
        let decision = decide(detections, m);
        tally.detections += detections;
        tally.errors += u64::from(decision != truth);
        tally.constant_decisions += u64::from(decision == Decision::Constant);
    }
    tally
}

/// Empirical misclassification rate for one oracle class.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplificationReport {
    pub truth: Decision,
    pub m: u64,
    pub runs: u64,
    /// Detections summed over all runs.
    pub detections: u64,
    /// The decision reached in the majority of runs.
    pub decision: Decision,
    pub errors: u64,
    pub empirical_error: f64,
    pub chernoff_bound: f64,
    pub seed: u64,
    pub rng: &'static str,
}

impl AmplificationReport {
    pub fn from_tally(
        model: &QueryModel,
        truth: Decision,
        m: u64,
        seed: u64,
        tally: BlockTally,
    ) -> Self {
        let decision = if 2 * tally.constant_decisions > tally.runs {
            Decision::Constant
        } else {
            Decision::Balanced
        };
        Self {
            truth,
            m,
            runs: tally.runs,
            detections: tally.detections,
            decision,
            errors: tally.errors,
            empirical_error: tally.errors as f64 / tally.runs as f64,
            chernoff_bound: model.chernoff_bound(truth, m),
            seed,
            rng: ALGORITHM,
        }
    }
}

/// Runs `runs` independent `m`-query experiments for each oracle class and
/// reports the empirical error of [`decide`]. Returns `(constant, balanced)`.
pub fn monte_carlo_error(
    model: &QueryModel,
    m: u64,
    runs: u64,
    seed: u64,
) -> Result<(AmplificationReport, AmplificationReport)> {
    check_queries(m)?;
    if runs == 0 {
        return Err(Error::TooSmall {
            name: "runs",
            min: 1,
            value: 0,
        });
    }
    let report = |truth| {
        let tally = (0..block_count(runs))
            .map(|b| monte_carlo_block(model, truth, m, runs, seed, b))
            .fold(BlockTally::default(), |a, b| a + b);
        AmplificationReport::from_tally(model, truth, m, seed, tally)
    };
    Ok((report(Decision::Constant), report(Decision::Balanced)))
}
