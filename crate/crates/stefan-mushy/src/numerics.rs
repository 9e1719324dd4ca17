//! Special functions and monotone root finding with explicit accuracy
//! contracts. No other module computes erf or extracts roots directly.

use std::f64::consts::{FRAC_2_SQRT_PI, PI};

use thiserror::Error;

/// Largest f64 strictly below 1. `erf` saturates here so its range stays the
/// open interval (-1, 1) even where the true value rounds to 1.
const ONE_BELOW: f64 = 1.0 - f64::EPSILON / 2.0;

/// Switchover between the series and the continued fraction. The alternating
/// Maclaurin sum loses ~2 digits to cancellation by |x| = 3, so the series is
/// used in its exp-scaled all-positive form and handed over earlier, where
/// both branches agree to well under 1e-15 (see `branches_agree_at_switch`).
const ERF_SPLIT: f64 = 2.0;

/// Error function, accurate to <= 1e-15 absolute against the integral
/// definition on the whole real line. Odd by construction; the returned value
/// always lies strictly inside (-1, 1) for finite input.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == 0.0 {
        return x;
    }
    let ax = x.abs();
    let value = if ax <= ERF_SPLIT {
        erf_series(ax)
    } else {
        (1.0 - erfc_tail(ax)).min(ONE_BELOW)
    };
    if x < 0.0 {
        -value
    } else {
        value
    }
}

/// exp-scaled power series: erf(x) = (2/sqrt(pi)) x e^(-x^2) sum_n (2x^2)^n / (1*3*...*(2n+1)).
/// Every term is positive, so there is no cancellation to amplify rounding.
fn erf_series(x: f64) -> f64 {
    let z = 2.0 * x * x;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut n = 0.0_f64;
    while term > sum * 1e-18 {
        n += 1.0;
        term *= z / (2.0 * n + 1.0);
        sum += term;
    }
    FRAC_2_SQRT_PI * x * (-x * x).exp() * sum
}

/// Complementary tail via the standard continued fraction
/// sqrt(pi) e^(x^2) erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
/// evaluated with the modified Lentz algorithm. Converges fast for x >= 2.
fn erfc_tail(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut value = TINY;
    let mut c = value;
    let mut d = 0.0_f64;
    for n in 1..=400u32 {
        let a = if n == 1 { 1.0 } else { (n as f64 - 1.0) / 2.0 };
        d = x + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = x + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        value *= delta;
        if (delta - 1.0).abs() < 1e-17 {
            break;
        }
    }
    (-x * x).exp() / PI.sqrt() * value
}

/// Search interval for a root; `lo < hi` is required. When produced by the
/// expansion inside [`find_root_increasing`], the objective changes sign
/// between the endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo < hi, "bracket requires lo < hi (got [{lo}, {hi}])");
        Self { lo, hi }
    }
}

/// Upper limit for bracket expansion. Physical front coefficients are O(1)
/// (erf is already 1 to machine precision at 30), so a hint growing past this
/// means the objective never turns positive.
pub const BRACKET_EXPANSION_CAP: f64 = 1e3;

/// Bracket expansion exhausted without straddling a root; for the front
/// equations this signals subcritical data upstream.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("objective has no sign change on [{lo}, {hi}]")]
pub struct NoSignChange {
    pub lo: f64,
    pub hi: f64,
}

/// Finds the root of a continuous, strictly increasing `f`.
///
/// The hint is expanded by doubling `hi` (up to [`BRACKET_EXPANSION_CAP`])
/// until `f` changes sign, then a safeguarded secant/bisection hybrid shrinks
/// the bracket below `tol`. Deterministic for identical inputs.
pub fn find_root_increasing<F>(f: F, hint: Bracket, tol: f64) -> Result<f64, NoSignChange>
where
    F: Fn(f64) -> f64,
{
    assert!(tol > 0.0 && tol.is_finite(), "tolerance must be positive");
    let mut lo = hint.lo;
    let mut hi = hint.hi;
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_lo > 0.0 {
        // increasing objective already positive: no root to the right
        return Err(NoSignChange { lo, hi });
    }
    let mut f_hi = f(hi);
    while f_hi < 0.0 {
        if hi >= BRACKET_EXPANSION_CAP {
            return Err(NoSignChange { lo: hint.lo, hi });
        }
        lo = hi;
        f_lo = f_hi;
        hi = (hi * 2.0).min(BRACKET_EXPANSION_CAP);
        f_hi = f(hi);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }

    // Secant steps accelerate; the forced bisection on odd iterations
    // guarantees the bracket halves at least every other step.
    let mut iter = 0_u32;
    while hi - lo > tol && iter < 400 {
        let mid = 0.5 * (lo + hi);
        let x = if iter.is_multiple_of(2) {
            let secant = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
            if secant.is_finite() && secant > lo && secant < hi {
                secant
            } else {
                mid
            }
        } else {
            mid
        };
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx < 0.0 {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        iter += 1;
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // ---- independent oracles (kept free of the implementation path) ----

    /// Alternating Maclaurin sum with Kahan compensation; oracle-grade for
    /// |x| <= 1.5 where no cancellation occurs.
    fn erf_taylor_oracle(x: f64, terms: usize) -> f64 {
        let mut sum = 0.0_f64;
        let mut comp = 0.0_f64;
        let mut term = x;
        let mut pow = x;
        let mut fact = 1.0_f64;
        for n in 0..terms {
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            pow *= x * x;
            fact *= (n + 1) as f64;
            let sign = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
            term = sign * pow / (fact * (2.0 * (n + 1) as f64 + 1.0));
        }
        sum * FRAC_2_SQRT_PI
    }

    /// Integral-definition oracle: Gauss-Legendre quadrature of
    /// (2/sqrt(pi)) e^(-t^2) over [0, x] in panels of width <= 1/2.
    fn erf_quadrature_oracle(x: f64) -> f64 {
        const N: usize = 40;
        let mut nodes = [0.0_f64; N];
        let mut weights = [0.0_f64; N];
        for (i, (node, weight)) in nodes.iter_mut().zip(weights.iter_mut()).enumerate() {
            let mut t = (PI * (i as f64 + 0.75) / (N as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0_f64, t);
                for k in 2..=N {
                    let p2 = ((2 * k - 1) as f64 * t * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                let dp = N as f64 * (t * p1 - p0) / (t * t - 1.0);
                let dt = p1 / dp;
                t -= dt;
                if dt.abs() < 1e-17 {
                    break;
                }
            }
            let (mut p0, mut p1) = (1.0_f64, t);
            for k in 2..=N {
                let p2 = ((2 * k - 1) as f64 * t * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = N as f64 * (t * p1 - p0) / (t * t - 1.0);
            *node = t;
            *weight = 2.0 / ((1.0 - t * t) * dp * dp);
        }
        let ax = x.abs();
        let panels = (ax / 0.5).ceil().max(1.0) as usize;
        let h = ax / panels as f64;
        let mut total = 0.0_f64;
        let mut comp = 0.0_f64;
        for p in 0..panels {
            let mid = (p as f64 + 0.5) * h;
            let half = 0.5 * h;
            for i in 0..N {
                let t = mid + half * nodes[i];
                let contrib = weights[i] * half * (-t * t).exp();
                let y = contrib - comp;
                let s = total + y;
                comp = (s - total) - y;
                total = s;
            }
        }
        let v = total * FRAC_2_SQRT_PI;
        if x < 0.0 {
            -v
        } else {
            v
        }
    }

    /// Plain bisection, the oracle route for root values frozen below.
    fn bisection_oracle(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> f64 {
        assert!(f(lo) < 0.0 && f(hi) > 0.0);
        for _ in 0..iters {
            let mid = 0.5 * (lo + hi);
            let fm = f(mid);
            if fm == 0.0 {
                return mid;
            }
            if fm < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    // Frozen oracle outputs (Taylor >= 40 terms, 60-step bisection).
    const ERF_ONE: f64 = 0.8427007929497149;
    const INV_ERF_HALF: f64 = 0.4769362762044699;

    #[test]
    fn erf_at_zero_is_zero() {
        assert_eq!(erf(0.0), 0.0);
    }

    #[test]
    fn erf_is_odd() {
        for &x in &[0.7, 0.1, 1.3, 2.5, 4.0] {
            assert_eq!(erf(-x), -erf(x));
        }
    }

    #[test]
    fn erf_at_one_matches_taylor_oracle() {
        let oracle = erf_taylor_oracle(1.0, 45);
        assert!((oracle - ERF_ONE).abs() <= 1e-15);
        assert!((erf(1.0) - ERF_ONE).abs() <= 1e-15);
        assert!((erf(1.0) - oracle).abs() <= 1e-15);
    }

    #[test]
    fn erf_matches_integral_definition_to_1e15() {
        let mut worst = 0.0_f64;
        let mut i = 0;
        let mut x = -6.0;
        while x <= 6.0 {
            let diff = (erf(x) - erf_quadrature_oracle(x)).abs();
            worst = worst.max(diff);
            i += 1;
            x = -6.0 + 0.037 * i as f64;
        }
        assert!(worst <= 1e-15, "max |erf - quadrature| = {worst:e}");
    }

    #[test]
    fn branches_agree_at_switch() {
        // both routes must agree where the implementation hands over, and
        // also at 3 where one could still place the split
        for &x in &[2.0, 2.0000000001, 2.5, 3.0] {
            let series = erf_series(x);
            let tail = 1.0 - erfc_tail(x);
            assert!(
                (series - tail).abs() <= 1e-15,
                "branch gap at {x}: {:e}",
                (series - tail).abs()
            );
        }
    }

    #[test]
    fn erf_range_is_open_interval() {
        for &x in &[5.0, 6.0, 10.0, 30.0, 1e6] {
            assert!(erf(x) < 1.0);
            assert!(erf(-x) > -1.0);
        }
    }

    #[test]
    fn erf_strictly_increasing_across_full_range_grid() {
        // sampled so every true increment exceeds one ulp of the output;
        // past ~5.86 the function saturates at the largest double below 1
        // and distinct outputs stop being representable
        let mut grid = vec![-6.0];
        let mut x = -5.8;
        while x <= 5.8 {
            grid.push(x);
            x += 0.1;
        }
        grid.push(6.0);
        for w in grid.windows(2) {
            assert!(erf(w[0]) < erf(w[1]), "not strict at [{}, {}]", w[0], w[1]);
        }
    }

    #[test]
    fn erfc_tail_bound_holds_on_sample() {
        // 1 - erf(x) in (0, e^(-x^2)) for x in [0.1, 6]
        let mut x = 0.1;
        while x <= 6.0 {
            let tail = 1.0 - erf(x);
            assert!(tail > 0.0, "tail vanished at x = {x}");
            assert!(tail < (-x * x).exp(), "tail bound broken at x = {x}");
            x += 0.0583;
        }
    }

    #[test]
    fn root_of_affine_function_is_exact() {
        let root = find_root_increasing(|x| x - 1.0, Bracket::new(0.0, 2.0), 1e-13).unwrap();
        assert_eq!(root, 1.0);
    }

    #[test]
    fn root_of_erf_equation_matches_bisection_oracle() {
        let oracle = bisection_oracle(|x| erf(x) - 0.5, 0.0, 1.0, 60);
        assert!((oracle - INV_ERF_HALF).abs() <= 1e-13);
        let root = find_root_increasing(|x| erf(x) - 0.5, Bracket::new(0.0, 1.0), 1e-13).unwrap();
        assert!((root - INV_ERF_HALF).abs() <= 1e-13);
    }

    #[test]
    fn positive_function_reports_no_sign_change() {
        let err = find_root_increasing(|x| x + 1.0, Bracket::new(0.0, 2.0), 1e-13).unwrap_err();
        assert_eq!(err, NoSignChange { lo: 0.0, hi: 2.0 });
    }

    #[test]
    fn expansion_cap_reports_no_sign_change() {
        // strictly increasing but forever negative
        let err =
            find_root_increasing(|x| -1.0 / (1.0 + x), Bracket::new(1e-12, 1.0), 1e-13).unwrap_err();
        assert!(err.hi >= BRACKET_EXPANSION_CAP);
    }

    #[test]
    fn sign_changes_within_tol_of_returned_root() {
        let f = |x: f64| erf(x) - 0.25;
        let root = find_root_increasing(f, Bracket::new(1e-12, 1.0), 1e-13).unwrap();
        assert!(f(root - 1e-13) <= 0.0 || f(root + 1e-13) >= 0.0);
        assert!(f(root - 1e-12) < 0.0);
        assert!(f(root + 1e-12) > 0.0);
    }

    proptest! {
        #[test]
        fn erf_strictly_increasing(a in -4.0f64..4.0, d in 1e-6f64..2.0) {
            // |x| <= 4 keeps erf' * d above one ulp for every generated pair;
            // the grid test above covers the sparser far range
            let b = (a + d).min(4.0);
            prop_assume!(b > a);
            prop_assert!(erf(a) < erf(b));
        }

        #[test]
        fn erf_nondecreasing_in_saturated_tail(a in 5.8f64..6.0, d in 0.0f64..0.2) {
            prop_assert!(erf(a) <= erf(a + d));
        }

        #[test]
        fn root_finder_solves_monotone_cubics(
            slope in 0.01f64..10.0,
            cubic in 0.0f64..5.0,
            root in 0.001f64..500.0,
        ) {
            // f(x) = slope (x - root) + cubic (x - root)^3 is strictly increasing
            let f = move |x: f64| slope * (x - root) + cubic * (x - root).powi(3);
            let found = find_root_increasing(f, Bracket::new(1e-12, 1.0), 1e-13).unwrap();
            prop_assert!((found - root).abs() <= 1e-9 * root.max(1.0));
        }

        #[test]
        fn root_finder_is_idempotent(target in 0.05f64..0.95) {
            let f = move |x: f64| erf(x) - target;
            let first = find_root_increasing(f, Bracket::new(1e-12, 1.0), 1e-13).unwrap();
            let again = find_root_increasing(
                f,
                Bracket::new(0.5 * first, 1.5 * first + 1e-12),
                1e-13,
            )
            .unwrap();
            prop_assert!((first - again).abs() <= 1e-13);
        }
    }
}
