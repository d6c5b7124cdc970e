//! Acceptance suite. Runs every criterion at its fixed tolerance, prints one
//! PASS/FAIL line each and exits non-zero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use cvdj::crosscheck::fft_crosscheck;
use cvdj::parallel;
use cvdj_core::amplification::{
    classical_deterministic, classical_probabilistic_bound, QueryModel, SEED_PANEL,
};
use cvdj_core::asb::{signed_sum, SignAssignment, DEFAULT_GRID};
use cvdj_core::bitstrings::{asb_pair, enumerate_balanced, BitString, PromiseClass};
use cvdj_core::dv::dj_run;
use cvdj_core::encoding::{encoded_momentum, grid_sample};
use cvdj_core::measurement::{
    asb_window_prob, constant_window_prob, optimal_delta, separation, window_probability, Window,
};
use cvdj_core::quadrature::integrate_with_breaks;
use cvdj_core::rng::TrialRng;
use cvdj_core::sine_integral::sine_integral;
use cvdj_core::wavefunction::{closed_form_asb_pdf, closed_form_constant_pdf, pdf};
use cvdj_core::{CvParams, PositionWavefunction};

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn within(elapsed: Duration, limit_secs: f64) -> bool {
    elapsed.as_secs_f64() < limit_secs
}

/// A uniformly random balanced string of length `len`.
fn random_balanced(rng: &mut TrialRng, len: usize) -> BitString {
    let mut bits: Vec<bool> = (0..len).map(|i| i >= len / 2).collect();
    for i in (1..len).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        bits.swap(i, j);
    }
    BitString::new(bits).unwrap()
}

/// Half constant, half balanced.
fn random_promise_string(rng: &mut TrialRng, len: usize) -> BitString {
    if rng.bernoulli(0.5) {
        BitString::constant(len, rng.bernoulli(0.5)).unwrap()
    } else {
        random_balanced(rng, len)
    }
}

fn dv_exactness() -> Verdict {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut checked = 0usize;
    for n in 1..=3 {
        let len = 1 << n;
        for bit in [false, true] {
            worst =
                worst.max((dj_run(&BitString::constant(len, bit).unwrap()).unwrap() - 1.0).abs());
            checked += 1;
        }
        for z in enumerate_balanced(len).unwrap() {
            worst = worst.max(dj_run(&z).unwrap().abs());
            checked += 1;
        }
    }
    let mut rng = TrialRng::new(1, 0);
    for n in 4..=10 {
        let len = 1 << n;
        for bit in [false, true] {
            worst =
                worst.max((dj_run(&BitString::constant(len, bit).unwrap()).unwrap() - 1.0).abs());
            checked += 1;
        }
        for _ in 0..1000 {
            worst = worst.max(dj_run(&random_balanced(&mut rng, len)).unwrap().abs());
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    Verdict::new(
        worst <= 1e-12 && within(elapsed, 10.0),
        format!("{checked} strings, max |deviation| {worst:.3e}, {elapsed:.2?}"),
    )
}

fn headline_probabilities() -> Verdict {
    let start = Instant::now();
    let c = constant_window_prob(1.0, FRAC_PI_2).unwrap();
    let a = asb_window_prob(1.0, FRAC_PI_2).unwrap();
    let closed = 2.0 * (PI * sine_integral(PI) - 2.0) / (PI * PI);
    let w = Window::symmetric(FRAC_PI_2).unwrap();
    let cq = window_probability(&closed_form_constant_pdf(1.0).unwrap(), w).unwrap();
    let aq = window_probability(&closed_form_asb_pdf(1.0).unwrap(), w).unwrap();
    let elapsed = start.elapsed();
    let pass = (c - closed).abs() < 1e-14
        && (c - cq).abs() < 1e-9
        && (a - aq).abs() < 1e-9
        && (c - 0.7737).abs() <= 5e-4
        && (a - 0.1609).abs() <= 5e-4
        && within(elapsed, 1.0);
    Verdict::new(
        pass,
        format!(
            "Pr_C {c:.6} (closed form diff {:.1e}, quadrature diff {:.1e}), Pr_ASB {a:.6} (quadrature diff {:.1e}), {elapsed:.2?}",
            (c - closed).abs(),
            (c - cq).abs(),
            (a - aq).abs()
        ),
    )
}

fn optimal_window() -> Verdict {
    let mut pass = true;
    let mut worst_product = 0.0f64;
    let mut worst_grid = 0.0f64;
    for big_p in [0.5, 1.0, 2.0, 10.0] {
        let d = optimal_delta(big_p).unwrap();
        worst_product = worst_product.max((d * big_p - FRAC_PI_2).abs());
        let upper = 4.0 * PI / big_p;
        let steps = 40_000;
        let h = upper / steps as f64;
        let mut best = (0.0, f64::NEG_INFINITY);
        for k in 1..=steps {
            let delta = k as f64 * h;
            let s = separation(big_p, delta).unwrap();
            if s > best.1 {
                best = (delta, s);
            }
        }
        worst_grid = worst_grid.max((best.0 - d).abs() / h);
        pass &= (d * big_p - FRAC_PI_2).abs() <= 1e-9 && (best.0 - d).abs() <= h;
    }
    Verdict::new(
        pass,
        format!(
            "max |Pδ* − π/2| {worst_product:.1e}; grid argmax within {worst_grid:.2} grid steps on (0, 4π/P]"
        ),
    )
}

fn closed_form_agreement() -> Verdict {
    let big_p = 1.0;
    let half = 4.0 * PI / big_p;
    let points = 10_000;
    let cc = closed_form_constant_pdf(big_p).unwrap();
    let ac = closed_form_asb_pdf(big_p).unwrap();
    let mut worst_rel: (f64, usize, &str, f64) = (0.0, 0, "", 0.0);
    let mut worst_peak = 0.0f64;
    let mut failing = 0usize;
    for n in [2, 4, 8, 16] {
        let params = CvParams::new(n, big_p).unwrap();
        let constant = pdf(&PositionWavefunction::new(
            &BitString::constant(n, false).unwrap(),
            params,
        )
        .unwrap());
        let asb = pdf(&PositionWavefunction::new(&asb_pair(n).unwrap().0, params).unwrap());
        for (label, phasor, closed) in [("constant", &constant, &cc), ("asb", &asb, &ac)] {
            for k in 0..points {
                let x = -half + (k as f64 + 0.5) * 2.0 * half / points as f64;
                let (u, v) = (phasor.density(x), closed.density(x));
                let rel = if u == v { 0.0 } else { (u - v).abs() / v.abs() };
                worst_peak = worst_peak.max((u - v).abs() / (big_p / PI));
                if rel > 1e-12 {
                    failing += 1;
                }
                if rel > worst_rel.0 {
                    worst_rel = (rel, n, label, x);
                }
            }
        }
    }
    Verdict::new(
        failing == 0,
        format!(
            "max relative error {:.2e} (N={}, {}, x={:.6}); {failing} of {} points above 1e-12; error relative to peak P/π {worst_peak:.1e}",
            worst_rel.0,
            worst_rel.1,
            worst_rel.2,
            worst_rel.3,
            8 * points
        ),
    )
}

fn transform_consistency() -> Verdict {
    let mut rng = TrialRng::new(5, 0);
    let mut pass = true;
    let mut worst = 0.0f64;
    let mut monotone = true;
    for _ in 0..20 {
        let n = [2, 4, 8][(rng.next_u64() % 3) as usize];
        let z = BitString::from_u64(rng.next_u64(), n).unwrap();
        let big_p = 0.5 + 1.5 * rng.next_unit();
        let params = CvParams::new(n, big_p).unwrap();
        let devs: Vec<f64> = [1 << 12, 1 << 13, 1 << 14]
            .iter()
            .map(|&m| {
                fft_crosscheck(&z, params, m, 4.0 * PI)
                    .unwrap()
                    .max_deviation
            })
            .collect();
        monotone &= devs.windows(2).all(|w| w[1] < w[0]);
        worst = worst.max(devs[2]);
        pass &= devs[2] <= 1e-3;
    }
    Verdict::new(
        pass && monotone,
        format!("max L∞ deviation at M=2^14 {worst:.2e}; monotone under doubling: {monotone}"),
    )
}

fn dominance() -> Verdict {
    let mut pass = true;
    let mut notes = Vec::new();
    let mut n8_time = Duration::ZERO;
    for n in [2, 4, 6, 8] {
        let start = Instant::now();
        let r = parallel::verify_asb_dominance(n, DEFAULT_GRID).unwrap();
        if n == 8 {
            n8_time = start.elapsed();
        }
        pass &= r.holds && r.worst_margin >= 0.0;
        notes.push(format!("N={n} margin {:.1e}", r.worst_margin));
    }
    let g = |s: &str| SignAssignment::from_bits(&s.parse::<BitString>().unwrap()).unwrap();
    let (s1, s2, s3) = (g("0011"), g("0101"), g("0110"));
    let mut ordered = true;
    for k in 0..DEFAULT_GRID {
        let x = FRAC_PI_2 * k as f64 / (DEFAULT_GRID - 1) as f64;
        let m1 = signed_sum(&s1, x).norm();
        ordered &= m1 >= signed_sum(&s2, x).norm() && m1 >= signed_sum(&s3, x).norm();
    }
    pass &= ordered && within(n8_time, 60.0);
    Verdict::new(
        pass,
        format!(
            "{}; N=4 orderings hold: {ordered}; N=8 in {n8_time:.2?}",
            notes.join(", ")
        ),
    )
}

fn amplification() -> Verdict {
    let start = Instant::now();
    let model = QueryModel::illustrative();
    let bound = (-4.0f64).exp();
    let mut worst: (f64, f64) = (0.0, 0.0);
    for seed in SEED_PANEL {
        let (c, b) = parallel::monte_carlo_error(&model, 96, 100_000, seed).unwrap();
        worst = (
            worst.0.max(c.empirical_error),
            worst.1.max(b.empirical_error),
        );
    }
    let elapsed = start.elapsed();
    Verdict::new(
        worst.0 <= bound && worst.1 <= bound && within(elapsed, 30.0),
        format!(
            "worst empirical error constant {:.2e}, balanced {:.2e} vs e^-4 = {bound:.4}; {elapsed:.2?}",
            worst.0, worst.1
        ),
    )
}

fn classical_baselines() -> Verdict {
    let mut pass = true;
    let mut pairs = 0usize;
    for n in (4..=1024).step_by(2) {
        for m in 1..=n / 2 {
            let exact = classical_probabilistic_bound(n, m).unwrap();
            pass &= exact >= 1.0 - 0.5f64.powi(m as i32);
            pairs += 1;
        }
    }
    let mut inputs = 0usize;
    for n in (2..=12).step_by(2) {
        let mut strings: Vec<BitString> = enumerate_balanced(n).unwrap().collect();
        strings.push(BitString::constant(n, false).unwrap());
        strings.push(BitString::constant(n, true).unwrap());
        for z in strings {
            let o = classical_deterministic(&z);
            let truth = if z.count_ones() % n == 0 {
                PromiseClass::Constant
            } else {
                PromiseClass::Balanced
            };
            pass &= o.class == truth && o.queries <= n / 2 + 1;
            inputs += 1;
        }
    }
    Verdict::new(
        pass,
        format!("{pairs} (N, m) pairs, {inputs} promise inputs"),
    )
}

fn normalization() -> Verdict {
    let mut rng = TrialRng::new(9, 0);
    let mut momentum_worst = 0.0f64;
    let mut position_min = (f64::INFINITY, String::new());
    let mut below = 0usize;
    for _ in 0..50 {
        let n = [2, 4, 8, 16][(rng.next_u64() % 4) as usize];
        let z = random_promise_string(&mut rng, n);
        let big_p = 0.5 + 3.5 * rng.next_unit();
        let params = CvParams::new(n, big_p).unwrap();
        let signal = encoded_momentum(&z, params).unwrap();
        let grid = grid_sample(&signal, 64 * n).unwrap();
        let norm: f64 = grid.values.iter().map(|v| v * v).sum::<f64>() * grid.spacing;
        momentum_worst = momentum_worst.max((norm - 1.0).abs());
        let wf = PositionWavefunction::new(&z, params).unwrap();
        let x = 200.0 / big_p;
        let pos = integrate_with_breaks(|t| wf.density(t), -x, x, PI / big_p, 1e-10).unwrap();
        if pos < 0.995 {
            below += 1;
        }
        if pos < position_min.0 {
            position_min = (pos, z.to_string());
        }
    }
    Verdict::new(
        momentum_worst <= 1e-9 && below == 0,
        format!(
            "momentum |norm − 1| ≤ {momentum_worst:.1e}; position norm on [−200/P, 200/P] below 0.995 for {below} of 50 (min {:.5} at z={})",
            position_min.0, position_min.1
        ),
    )
}

fn determinism() -> Verdict {
    let exe = env!("CARGO_BIN_EXE_cvdj");
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for d in &dirs {
        let status = Command::new(exe)
            .args(["reproduce-figures", "--output"])
            .arg(d.path())
            .output()
            .unwrap()
            .status;
        if !status.success() {
            return Verdict::new(false, "reproduce-figures failed");
        }
    }
    let mut names: Vec<_> = fs::read_dir(dirs[0].path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    let figures_equal = names
        .iter()
        .all(|n| fs::read(dirs[0].path().join(n)).ok() == fs::read(dirs[1].path().join(n)).ok());
    let amplify = || {
        Command::new(exe)
            .args([
                "amplify",
                "--m",
                "96",
                "--runs",
                "100000",
                "--seed",
                "42",
                "--illustrative",
            ])
            .output()
            .unwrap()
    };
    let (a, b) = (amplify(), amplify());
    let amplify_equal = a.status.success() && a.stdout == b.stdout;
    Verdict::new(
        figures_equal && amplify_equal && names.len() == 10,
        format!(
            "{} figure files identical: {figures_equal}; amplify output identical: {amplify_equal}",
            names.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("qubit algorithm exactness", dv_exactness),
        ("headline window probabilities", headline_probabilities),
        ("optimal window", optimal_window),
        ("closed-form/phasor agreement", closed_form_agreement),
        ("transform consistency", transform_consistency),
        ("ASB dominance", dominance),
        ("probability amplification", amplification),
        ("classical baselines", classical_baselines),
        ("normalization", normalization),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag} {name}: {}", i + 1, v.detail);
        failed += usize::from(!v.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
