//! Adaptive Simpson quadrature.
//!
//! Oscillatory integrands are first split at caller-supplied breakpoints
//! (typically the zeros of a sinc envelope); each panel then gets a share of
//! the absolute tolerance proportional to its width.

use alloc::vec::Vec;

// Float math is inherent on f64 in core only on recent toolchains.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 48;

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

impl Panel {
    fn new(f: &impl Fn(f64) -> f64, a: f64, b: f64, fa: f64, fb: f64) -> Self {
        let m = 0.5 * (a + b);
        let fm = f(m);
        Self {
            a,
            b,
            fa,
            fm,
            fb,
            whole: (b - a) / 6.0 * (fa + 4.0 * fm + fb),
        }
    }
}

fn refine(f: &impl Fn(f64) -> f64, panel: Panel, tol: f64, depth: u32) -> Result<f64> {
    let m = 0.5 * (panel.a + panel.b);
    let left = Panel::new(f, panel.a, m, panel.fa, panel.fm);
    let right = Panel::new(f, m, panel.b, panel.fm, panel.fb);
    let split = left.whole + right.whole;
    let delta = split - panel.whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(split + delta / 15.0);
    }
    if depth >= MAX_DEPTH || m <= panel.a || m >= panel.b {
        return Err(Error::QuadratureDiverged {
            a: panel.a,
            b: panel.b,
        });
    }
    Ok(refine(f, left, 0.5 * tol, depth + 1)? + refine(f, right, 0.5 * tol, depth + 1)?)
}

/// `∫_a^b f` to absolute tolerance `tol`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate(f, b, a, tol).map(|v| -v);
    }
    let panel = Panel::new(&f, a, b, f(a), f(b));
    refine(&f, panel, tol, 0)
}

/// `∫_a^b f`, split at every integer multiple of `spacing` inside `(a, b)`.
pub fn integrate_with_breaks(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    spacing: f64,
    tol: f64,
) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate_with_breaks(f, b, a, spacing, tol).map(|v| -v);
    }
    let mut edges = Vec::new();
    edges.push(a);
    let mut k = (a / spacing).floor() + 1.0;
    while k * spacing < b {
        let edge = k * spacing;
        if edge > a {
            edges.push(edge);
        }
        k += 1.0;
    }
    edges.push(b);
    let width = b - a;
    edges
        .windows(2)
        .map(|w| integrate(&f, w[0], w[1], tol * (w[1] - w[0]) / width))
        .sum()
}
