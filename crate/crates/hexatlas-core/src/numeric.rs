//! Overflow- and cancellation-safe hyperbolic evaluation.
//!
//! Degenerating families push side lengths to extremes (down to machine
//! epsilon scale, up to `exp(n)` for n around 40, i.e. ~1e17), far past the
//! ~710 threshold where `cosh`/`sinh` overflow. Everything here works on the
//! log scale or with explicit `x - 1` style deltas so those regimes stay
//! exact to rounding.

use core::f64::consts::LN_2;

/// Lengths below this are treated as degeneration, never clamped.
pub const MIN_LENGTH: f64 = 1e-12;

/// Threshold above which `acosh(exp(L))` is just `L + ln 2` to double
/// precision (error is O(exp(-2L))).
const LOG_HUGE: f64 = 44.0;

/// `ln(sinh x)` for `x > 0`, valid far beyond the overflow range of `sinh`.
pub fn ln_sinh(x: f64) -> f64 {
    if x < 350.0 {
        libm::log(libm::sinh(x))
    } else {
        x - LN_2
    }
}

/// `ln(cosh x)` for `x >= 0`, valid far beyond the overflow range of `cosh`.
pub fn ln_cosh(x: f64) -> f64 {
    if x < 350.0 {
        libm::log(libm::cosh(x))
    } else {
        x - LN_2
    }
}

/// `coth(x) - 1 = 2 / (e^{2x} - 1)`, exact to rounding for all `x > 0`.
pub fn coth_m1(x: f64) -> f64 {
    2.0 / libm::expm1(2.0 * x)
}

/// `coth(x)` for `x > 0`.
pub fn coth(x: f64) -> f64 {
    1.0 + coth_m1(x)
}

/// `ln(coth x)` for `x > 0`.
pub fn ln_coth(x: f64) -> f64 {
    libm::log1p(coth_m1(x))
}

/// `acosh(1 + d)` for `d >= 0`, accurate for tiny `d`.
pub fn acosh1p(d: f64) -> f64 {
    if d <= 0.0 {
        return 0.0;
    }
    if d > 1e15 {
        // sqrt(d^2 + 2d) would overflow its square; acosh(x) ~ ln(2x).
        return LN_2 + libm::log1p(d);
    }
    libm::log1p(d + libm::sqrt(d * (d + 2.0)))
}

/// `ln(e^p + e^q)` without overflow.
pub fn log_add_exp(p: f64, q: f64) -> f64 {
    let (hi, lo) = if p >= q { (p, q) } else { (q, p) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + libm::log1p(libm::exp(lo - hi))
}

/// `acosh(e^L)` given the logarithm `L = ln y >= 0` of the argument.
///
/// For small `L` the delta `y - 1` is recovered as `expm1(L)` so no
/// cancellation occurs; for large `L` the asymptotic `L + ln 2` takes over.
pub fn acosh_of_exp(l: f64) -> f64 {
    if l > LOG_HUGE {
        l + LN_2
    } else {
        acosh1p(libm::expm1(l))
    }
}

/// `asinh(e^L)` given the logarithm `L = ln y` of the argument.
pub fn asinh_of_exp(l: f64) -> f64 {
    if l > LOG_HUGE {
        l + LN_2
    } else {
        libm::asinh(libm::exp(l))
    }
}

/// `acosh(sinh u * sinh v)`, the length whose cosh is a product of sinhs.
///
/// Returns an error-free value only when the product is at least 1; callers
/// pass arguments coming from a consistent hexagon, where that holds up to
/// rounding, so arguments within `1e-9` below 1 are treated as exactly 1.
pub fn acosh_sinh_product(u: f64, v: f64) -> Option<f64> {
    let l = ln_sinh(u) + ln_sinh(v);
    if l > LOG_HUGE {
        return Some(l + LN_2);
    }
    let y = libm::exp(l);
    if y < 1.0 - 1e-9 {
        return None;
    }
    if y <= 1.0 {
        return Some(0.0);
    }
    Some(libm::acosh(y))
}

/// Positive, finite, and not degenerate.
pub fn valid_length(x: f64) -> bool {
    x.is_finite() && x >= MIN_LENGTH
}
