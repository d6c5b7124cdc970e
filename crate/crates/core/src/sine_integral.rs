//! The sine integral `Si(t) = ∫_0^t sin(u)/u du`.
//!
//! For `|t| < 8` the Maclaurin series is summed directly (largest term ≈ 50,
//! so about two digits are lost to cancellation). Beyond that,
//! `Si(t) = π/2 − f(t)cos t − g(t)sin t` with the auxiliary functions read off
//! the continued fraction of `E1(it)` (modified Lentz), which converges to full
//! precision where the divergent asymptotic series cannot.

use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
// Float math is inherent on f64 in core only on recent toolchains.
#[allow(unused_imports)]
use num_traits::Float;

const SERIES_LIMIT: f64 = 8.0;
const MAX_TERMS: usize = 200;
const TINY: f64 = 1e-300;

pub fn sine_integral(t: f64) -> f64 {
    if t < 0.0 {
        return -sine_integral(-t);
    }
    if t < SERIES_LIMIT {
        series(t)
    } else {
        let (f, g) = auxiliary(t);
        FRAC_PI_2 - f * t.cos() - g * t.sin()
    }
}

fn series(t: f64) -> f64 {
    let t2 = t * t;
    // term_k = (-1)^k t^{2k+1} / (2k+1)!
    let mut term = t;
    let mut sum = t;
    for k in 1..MAX_TERMS {
        let a = (2 * k) as f64;
        term *= -t2 / (a * (a + 1.0));
        let contribution = term / (a + 1.0);
        sum += contribution;
        if contribution.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Auxiliary functions `(f(t), g(t))` for `t > 0`, from
/// `e^{it}·E1(it) = g(t) − i·f(t)`.
pub fn auxiliary(t: f64) -> (f64, f64) {
    let z = Complex64::new(0.0, t);
    // E1(z)·e^{z} = 1/(z+1 − 1²/(z+3 − 2²/(z+5 − …)))
    let mut b = z + 1.0;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..MAX_TERMS {
        let an = -((i * i) as f64);
        b += 2.0;
        d = (d * an + b).inv();
        c = b + c.inv() * an;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    (-h.im, h.re)
}
