//! Internal one-dimensional search primitives: golden-section minimization,
//! bisection, and a deterministic multi-start scan.

/// 1/φ, the golden-section interval ratio.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section minimum of `f` on [lo, hi], to interval width `tol`.
///
/// Derivative-free; converges to a local minimum inside the bracket. Returns
/// the bracket midpoint.
pub(crate) fn golden_min<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    if hi <= lo {
        return lo;
    }
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    while hi - lo > tol {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = f(d);
        }
    }
    0.5 * (lo + hi)
}

/// Bisection root of a continuous `f` with a sign change on [lo, hi].
///
/// Runs until the bracket is narrower than `tol`; returns the midpoint.
pub(crate) fn bisect_root<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    debug_assert!(flo * f(hi) <= 0.0, "no sign change on the bracket");
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return mid;
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    0.5 * (lo + hi)
}

/// Bisection of a monotone boolean predicate: `false` at `lo`, `true` at `hi`.
/// Returns the transition point to width `tol`.
pub(crate) fn bisect_predicate<P: Fn(f64) -> bool>(
    pred: P,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Result of a multi-start line minimization.
pub(crate) struct LineMin {
    pub value: f64,
    /// All global minimizers found, sorted ascending and deduplicated.
    pub minimizers: Vec<f64>,
}

/// Deterministic global minimization on [lo, hi].
///
/// Scans `seeds` evenly spaced points, golden-refines every sample that is a
/// local minimum of the scan (interval endpoints are always kept as
/// candidates), then reports the best value and every candidate within
/// `value_tol` of it, deduplicated at `x_tol`.
pub(crate) fn multistart_min<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    seeds: usize,
    refine_tol: f64,
    value_tol: f64,
    x_tol: f64,
) -> LineMin {
    debug_assert!(seeds >= 2);
    if hi - lo <= refine_tol {
        return LineMin {
            value: f(lo),
            minimizers: vec![lo],
        };
    }
    let step = (hi - lo) / (seeds - 1) as f64;
    let xs: Vec<f64> = (0..seeds).map(|i| lo + step * i as f64).collect();
    let vals: Vec<f64> = xs.iter().map(|&x| f(x)).collect();

    let mut candidates: Vec<(f64, f64)> = Vec::new();
    for i in 0..seeds {
        let left_ok = i == 0 || vals[i - 1] >= vals[i];
        let right_ok = i + 1 == seeds || vals[i + 1] >= vals[i];
        if left_ok && right_ok {
            let bl = if i == 0 { lo } else { xs[i - 1] };
            let bh = if i + 1 == seeds { hi } else { xs[i + 1] };
            let x = golden_min(&f, bl, bh, refine_tol).clamp(lo, hi);
            let fx = f(x);
            // keep whichever of the refined point and the seed is better
            if fx <= vals[i] {
                candidates.push((fx, x));
            } else {
                candidates.push((vals[i], xs[i]));
            }
        }
    }
    // interval endpoints are legitimate minima even when the scan slopes away
    candidates.push((vals[0], lo));
    candidates.push((vals[seeds - 1], hi));

    let best = candidates
        .iter()
        .map(|&(v, _)| v)
        .fold(f64::INFINITY, f64::min);
    let mut minimizers: Vec<f64> = candidates
        .into_iter()
        .filter(|&(v, _)| v <= best + value_tol)
        .map(|(_, x)| x)
        .collect();
    minimizers.sort_by(|a, b| a.partial_cmp(b).expect("finite minimizers"));
    minimizers.dedup_by(|a, b| (*a - *b).abs() < x_tol);
    LineMin {
        value: best,
        minimizers,
    }
}
