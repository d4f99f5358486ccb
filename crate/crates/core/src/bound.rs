//! Tight lower bounds for the Rényi entropy sum of a qubit observable pair.
//!
//! The bound is the minimum over θ ∈ [0, γ] of the entropy-sum objective,
//! where γ = arccos c and c is the eigenbasis overlap. Closed forms cover the
//! index square [0, 1/2]² and two of the three equal-index regimes; everything
//! else is a guarded one-dimensional minimization. Regime transitions are
//! located by bracketed root finding.

use crate::entropy::{entropy_sum, renyi_entropy, Angle, EntropicIndex, ProbabilityPair};
use crate::error::{Error, Result};
use crate::solve::{bisect_predicate, bisect_root, multistart_min};
use rayon::prelude::*;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, LN_2};

/// Number of evenly spaced seeds for the multi-start scans.
const SCAN_SEEDS: usize = 129;
/// Golden-section refinement width in θ.
const THETA_REFINE_TOL: f64 = 1e-12;
/// Minimizers within this of the global minimum are reported.
const MIN_VALUE_TOL: f64 = 1e-9;
/// Angular deduplication tolerance for the reported minimizer set.
const THETA_DEDUP_TOL: f64 = 1e-8;
/// An interior minimizer this close to γ/2 is treated as the endpoint regime.
const HALF_GAMMA_EDGE: f64 = 1e-6;
/// Overlaps within this of 1/√2 are treated as complementary.
const COMPLEMENTARY_TOL: f64 = 1e-12;
/// Slack accepted when validating an overlap value.
const OVERLAP_INPUT_TOL: f64 = 1e-9;

/// Eigenbasis overlap c ∈ [1/√2, 1] together with its angle γ = arccos c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Overlap {
    c: f64,
    gamma: f64,
}

impl Overlap {
    /// Builds from the overlap value; accepts up to 1e-9 outside [1/√2, 1]
    /// and clamps, rejecting anything further out.
    pub fn from_c(c: f64) -> Result<Self> {
        if !c.is_finite()
            || c < FRAC_1_SQRT_2 - OVERLAP_INPUT_TOL
            || c > 1.0 + OVERLAP_INPUT_TOL
        {
            return Err(Error::InvalidOverlap(c));
        }
        let c = c.clamp(FRAC_1_SQRT_2, 1.0);
        Ok(Self { c, gamma: c.acos() })
    }

    /// Builds from γ = arccos c ∈ [0, π/4].
    pub fn from_gamma(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || !(-1e-12..=FRAC_PI_4 + 1e-12).contains(&gamma) {
            return Err(Error::OutOfDomain {
                name: "gamma",
                value: gamma,
                lo: 0.0,
                hi: FRAC_PI_4,
            });
        }
        let gamma = gamma.clamp(0.0, FRAC_PI_4);
        Ok(Self {
            c: gamma.cos(),
            gamma,
        })
    }

    /// Builds from the rotation angle γ_T ∈ [0, π/2] of the canonical factor;
    /// the effective angle is γ = π/4 − |π/4 − γ_T|.
    pub fn from_gamma_t(gamma_t: f64) -> Result<Self> {
        if !gamma_t.is_finite() || !(-1e-12..=FRAC_PI_2 + 1e-12).contains(&gamma_t) {
            return Err(Error::OutOfDomain {
                name: "gamma_t",
                value: gamma_t,
                lo: 0.0,
                hi: FRAC_PI_2,
            });
        }
        Self::from_gamma(FRAC_PI_4 - (FRAC_PI_4 - gamma_t).abs())
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// γ = arccos c ∈ [0, π/4].
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// True exactly for c = 1 (commuting observables).
    pub fn is_commuting(&self) -> bool {
        self.gamma == 0.0
    }

    /// True for c = 1/√2 within 1e-12 (complementary observables).
    pub fn is_complementary(&self) -> bool {
        (self.c - FRAC_1_SQRT_2).abs() <= COMPLEMENTARY_TOL
    }
}

/// Which dispatch path produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// c = 1: commuting observables, bound 0.
    TrivialC1,
    /// Both indices in [0, 1/2]: analytic expression.
    ClosedFormSquare,
    /// Equal indices, first regime: endpoint minimizers θ ∈ {0, γ}.
    DiagonalFirst,
    /// Equal indices, interior minimizer pair {θ*, γ − θ*}.
    DiagonalInterior,
    /// Equal indices at or past the transition: single minimizer γ/2.
    DiagonalHalfGamma,
    /// General indices: multi-start numeric minimization.
    NumericGeneral,
}

impl Regime {
    pub fn label(&self) -> &'static str {
        match self {
            Regime::TrivialC1 => "trivial-c1",
            Regime::ClosedFormSquare => "closed-form-square",
            Regime::DiagonalFirst => "diagonal-first",
            Regime::DiagonalInterior => "diagonal-interior",
            Regime::DiagonalHalfGamma => "diagonal-half-gamma",
            Regime::NumericGeneral => "numeric-general",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// A computed bound: its value in nats, the full minimizer-angle set in
/// [0, γ], and the dispatch regime.
#[derive(Debug, Clone)]
pub struct BoundResult {
    pub value: f64,
    pub theta_opt: Vec<Angle>,
    pub regime: Regime,
    pub alpha: EntropicIndex,
    pub beta: EntropicIndex,
    pub overlap: Overlap,
}

fn angles(thetas: impl IntoIterator<Item = f64>) -> Vec<Angle> {
    thetas
        .into_iter()
        .map(|t| Angle::new(t).expect("finite minimizer angle"))
        .collect()
}

fn trivial_result(alpha: EntropicIndex, beta: EntropicIndex, overlap: Overlap) -> BoundResult {
    BoundResult {
        value: 0.0,
        theta_opt: angles([0.0]),
        regime: Regime::TrivialC1,
        alpha,
        beta,
        overlap,
    }
}

/// The tight lower bound for the entropy sum at indices (α, β) and overlap c.
///
/// Dispatch: c = 1 is trivial; both indices in [0, 1/2]² use the analytic
/// square expression; equal indices use the semi-analytic diagonal; everything
/// else is minimized numerically over θ ∈ [0, γ] from a 129-seed scan with
/// golden-section refinement. `theta_opt` lists every global minimizer found,
/// deduplicated at 1e-8.
pub fn tight_bound(alpha: EntropicIndex, beta: EntropicIndex, ov: Overlap) -> BoundResult {
    if ov.is_commuting() {
        return trivial_result(alpha, beta, ov);
    }
    if alpha.get() <= 0.5 && beta.get() <= 0.5 {
        return closed_form_square(alpha, beta, ov).expect("indices verified inside the square");
    }
    if alpha == beta {
        return diagonal_bound(alpha, ov);
    }
    let g = ov.gamma();
    let m = multistart_min(
        |t| entropy_sum(alpha, beta, g, t),
        0.0,
        g,
        SCAN_SEEDS,
        THETA_REFINE_TOL,
        MIN_VALUE_TOL,
        THETA_DEDUP_TOL,
    );
    BoundResult {
        value: m.value,
        theta_opt: angles(m.minimizers),
        regime: Regime::NumericGeneral,
        alpha,
        beta,
        overlap: ov,
    }
}

/// Analytic bound on the square α, β ∈ [0, 1/2]:
/// log[c^{2λ} + (1−c²)^λ]/(1−λ) with λ = max(α, β).
///
/// Minimizers: θ = 0 if α < β, θ = γ if α > β, both if α = β.
pub fn closed_form_square(
    alpha: EntropicIndex,
    beta: EntropicIndex,
    ov: Overlap,
) -> Result<BoundResult> {
    for idx in [alpha, beta] {
        if idx.get() > 0.5 {
            return Err(Error::OutOfDomain {
                name: "entropic index",
                value: idx.get(),
                lo: 0.0,
                hi: 0.5,
            });
        }
    }
    let lam = alpha.max(beta);
    let p = ProbabilityPair::new(ov.c() * ov.c())?;
    let value = renyi_entropy(p, lam);
    let mut thetas = if alpha.get() < beta.get() {
        vec![0.0]
    } else if alpha.get() > beta.get() {
        vec![ov.gamma()]
    } else {
        vec![0.0, ov.gamma()]
    };
    thetas.dedup_by(|a, b| (*a - *b).abs() < THETA_DEDUP_TOL);
    Ok(BoundResult {
        value,
        theta_opt: angles(thetas),
        regime: Regime::ClosedFormSquare,
        alpha,
        beta,
        overlap: ov,
    })
}

/// Interior minimization of the equal-index objective over [0, γ/2].
/// Returns the minimum value and the minimizer closest to γ/2.
fn diagonal_interior_min(alpha: EntropicIndex, ov: Overlap) -> (f64, f64) {
    let g = ov.gamma();
    let m = multistart_min(
        |t| entropy_sum(alpha, alpha, g, t),
        0.0,
        0.5 * g,
        SCAN_SEEDS,
        THETA_REFINE_TOL,
        MIN_VALUE_TOL,
        THETA_DEDUP_TOL,
    );
    let t_star = *m.minimizers.last().expect("multistart yields a minimizer");
    (m.value, t_star)
}

/// Semi-analytic bound on the equal-index line β = α.
///
/// Three regimes: endpoint minimizers with the analytic first expression for
/// α up to 1/2 (up to the transition index at complementary overlap), an
/// interior minimizer pair located numerically on (0, γ/2], and the analytic
/// half-angle expression once the minimizer reaches γ/2. The first expression
/// is evaluated through [`renyi_entropy`] so α = 1 takes the Shannon limit.
pub fn diagonal_bound(alpha: EntropicIndex, ov: Overlap) -> BoundResult {
    if ov.is_commuting() {
        return trivial_result(alpha, alpha, ov);
    }
    let first_edge = if ov.is_complementary() {
        alpha_dagger()
    } else {
        0.5
    };
    if alpha.get() <= first_edge {
        let p = ProbabilityPair::new(ov.c() * ov.c()).expect("c² is a probability");
        return BoundResult {
            value: renyi_entropy(p, alpha),
            theta_opt: angles([0.0, ov.gamma()]),
            regime: Regime::DiagonalFirst,
            alpha,
            beta: alpha,
            overlap: ov,
        };
    }
    let half_gamma = 0.5 * ov.gamma();
    let (value, t_star) = diagonal_interior_min(alpha, ov);
    if half_gamma - t_star <= HALF_GAMMA_EDGE {
        let p = ProbabilityPair::new(0.5 * (1.0 + ov.c())).expect("(1+c)/2 is a probability");
        BoundResult {
            value: 2.0 * renyi_entropy(p, alpha),
            theta_opt: angles([half_gamma]),
            regime: Regime::DiagonalHalfGamma,
            alpha,
            beta: alpha,
            overlap: ov,
        }
    } else {
        BoundResult {
            value,
            theta_opt: angles([t_star, ov.gamma() - t_star]),
            regime: Regime::DiagonalInterior,
            alpha,
            beta: alpha,
            overlap: ov,
        }
    }
}

/// The index at which the complementary-overlap diagonal bound switches from
/// log 2 to its half-angle expression: the unique root of
/// (2/(1−α)) log[((2+√2)/4)^α + ((2−√2)/4)^α] = log 2 on (1, 2).
pub fn alpha_dagger() -> f64 {
    let p = ProbabilityPair::new((2.0 + std::f64::consts::SQRT_2) / 4.0)
        .expect("(2+√2)/4 is a probability");
    // monotone decreasing in α; evaluated through the entropy so the quotient
    // is stable across α = 1
    bisect_root(
        |a| 2.0 * renyi_entropy(p, EntropicIndex::new(a).expect("bracket is valid")) - LN_2,
        1.0,
        2.0,
        1e-12,
    )
}

/// The smallest equal index α at which the interior minimizer reaches γ/2.
///
/// Located by predicate bisection on α over (1/2, α†), using the continuous
/// growth of the interior minimizer toward γ/2. At complementary overlap the
/// transition coincides with [`alpha_dagger`]; at c = 1 it is undefined.
pub fn alpha_star(ov: Overlap) -> Result<f64> {
    if ov.is_commuting() {
        return Err(Error::TransitionUndefined);
    }
    let dag = alpha_dagger();
    if ov.is_complementary() {
        return Ok(dag);
    }
    let half_gamma = 0.5 * ov.gamma();
    let reached = |a: f64| {
        let (_, t_star) =
            diagonal_interior_min(EntropicIndex::new(a).expect("bracket is valid"), ov);
        half_gamma - t_star <= HALF_GAMMA_EDGE
    };
    Ok(bisect_predicate(reached, 0.5, dag, 1e-8))
}

/// Analytic but suboptimal bound for arbitrary (α, β): the diagonal bound at
/// λ = max(α, β). Coincides with the tight bound when α = β.
pub fn suboptimal_bound(alpha: EntropicIndex, beta: EntropicIndex, ov: Overlap) -> f64 {
    diagonal_bound(alpha.max(beta), ov).value
}

/// A named reference bound with its validity flag at the queried (α, β, c).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceBound {
    pub name: &'static str,
    pub value: f64,
    /// Whether the bound's stated precondition holds at the queried point.
    pub applies: bool,
}

/// The classical reference bounds at overlap c, each flagged with whether its
/// precondition on (α, β, c) holds.
///
/// Validity flags: the Deutsch bound holds everywhere; the Maassen–Uffink
/// Shannon bound −2 log c holds for α, β ≤ 1 by index monotonicity; the
/// Maassen–Uffink complementary value applies at c = 1/√2 outside the
/// log-2-tight region 1/(2α) + 1/(2β) ≥ 1; the Rastegin half-index bound needs
/// α, β ≤ 1/2 and the collision bound α, β ≤ 2.
pub fn reference_bounds(
    alpha: EntropicIndex,
    beta: EntropicIndex,
    ov: Overlap,
) -> Vec<ReferenceBound> {
    let c = ov.c();
    let (a, b) = (alpha.get(), beta.get());
    // β ≤ α/(2α−1) in product form, symmetric and total on α, β ≥ 0
    let log2_tight_region = 2.0 * a * b <= a + b;
    vec![
        ReferenceBound {
            name: "deutsch",
            value: -2.0 * (0.5 * (1.0 + c)).ln(),
            applies: true,
        },
        ReferenceBound {
            name: "maassen_uffink_shannon",
            value: -2.0 * c.ln(),
            applies: a <= 1.0 && b <= 1.0,
        },
        ReferenceBound {
            name: "maassen_uffink_conjugate",
            value: 2.0 * (2.0 * std::f64::consts::SQRT_2 / (1.0 + std::f64::consts::SQRT_2)).ln(),
            applies: ov.is_complementary() && !log2_tight_region,
        },
        ReferenceBound {
            name: "rastegin_half",
            value: (4.0 * c * c * (1.0 - c * c)).sqrt().ln_1p(),
            applies: a <= 0.5 && b <= 0.5,
        },
        ReferenceBound {
            name: "collision",
            value: -2.0 * (0.5 * (1.0 + c * c)).ln(),
            applies: a <= 2.0 && b <= 2.0,
        },
    ]
}

/// Which quantity a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweptVariable {
    Alpha,
    Beta,
    OverlapC,
}

/// A one-dimensional sweep: the swept variable, its grid, and fixed values
/// for the other two quantities (the fixed slot of the swept variable is
/// ignored).
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub variable: SweptVariable,
    pub grid: Vec<f64>,
    pub alpha: f64,
    pub beta: f64,
    pub c: f64,
}

/// One sweep row: swept value, bound, minimizer set, regime.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub swept: f64,
    pub value: f64,
    pub theta_opt: Vec<f64>,
    pub regime: Regime,
}

/// Evaluates the tight bound along a grid. Grid points are independent and
/// evaluated in parallel; rows come back in grid order regardless of
/// scheduling. Rejects empty or non-increasing grids.
pub fn bound_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    if spec.grid.is_empty() || spec.grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid);
    }
    spec.grid
        .par_iter()
        .map(|&x| {
            let (a, b, c) = match spec.variable {
                SweptVariable::Alpha => (x, spec.beta, spec.c),
                SweptVariable::Beta => (spec.alpha, x, spec.c),
                SweptVariable::OverlapC => (spec.alpha, spec.beta, x),
            };
            let res = tight_bound(
                EntropicIndex::new(a)?,
                EntropicIndex::new(b)?,
                Overlap::from_c(c)?,
            );
            Ok(SweepRow {
                swept: x,
                value: res.value,
                theta_opt: res.theta_opt.iter().map(|t| t.radians()).collect(),
                regime: res.regime,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn idx(l: f64) -> EntropicIndex {
        EntropicIndex::new(l).unwrap()
    }

    fn ov(c: f64) -> Overlap {
        Overlap::from_c(c).unwrap()
    }

    #[test]
    fn overlap_construction_and_validation() {
        assert!(Overlap::from_c(0.5).is_err());
        assert!(Overlap::from_c(1.1).is_err());
        assert!(Overlap::from_c(f64::NAN).is_err());
        let o = ov(0.8);
        assert_abs_diff_eq!(o.gamma().cos(), 0.8, epsilon = 1e-15);
        assert!(ov(1.0).is_commuting());
        assert!(ov(FRAC_1_SQRT_2).is_complementary());
        assert!(!ov(0.8).is_complementary());
        // tolerance clamp just below the lower edge
        assert!(Overlap::from_c(FRAC_1_SQRT_2 - 5e-10).is_ok());
    }

    #[test]
    fn overlap_from_gamma_t_folds_both_branches() {
        let a = Overlap::from_gamma_t(0.3).unwrap();
        let b = Overlap::from_gamma_t(FRAC_PI_2 - 0.3).unwrap();
        assert_abs_diff_eq!(a.c(), b.c(), epsilon = 1e-15);
        assert!(Overlap::from_gamma_t(FRAC_PI_2).unwrap().is_commuting());
        assert!(Overlap::from_gamma_t(1.6).is_err());
    }

    #[test]
    fn tight_bound_trivial_at_c1() {
        let r = tight_bound(idx(1.0), idx(1.0), ov(1.0));
        assert_eq!(r.value, 0.0);
        assert_eq!(r.regime, Regime::TrivialC1);
        assert_eq!(r.theta_opt.len(), 1);
    }

    #[test]
    fn tight_bound_matches_rastegin_half_index() {
        // closed form log[1 + √(4c²(1−c²))] at α = β = 1/2, c = 0.8 gives log 1.96
        let r = tight_bound(idx(0.5), idx(0.5), ov(0.8));
        assert_abs_diff_eq!(r.value, (1.96f64).ln(), epsilon = 1e-12);
        assert_eq!(r.regime, Regime::ClosedFormSquare);
        assert_eq!(r.theta_opt.len(), 2);
    }

    #[test]
    fn tight_bound_matches_collision_value_at_complementary() {
        let r = tight_bound(idx(2.0), idx(2.0), ov(FRAC_1_SQRT_2));
        assert_abs_diff_eq!(r.value, 2.0 * (4.0f64 / 3.0).ln(), epsilon = 1e-12);
        assert_eq!(r.regime, Regime::DiagonalHalfGamma);
    }

    #[test]
    fn tight_bound_is_log2_for_subconjugate_indices_at_complementary() {
        for (a, b) in [(2.0, 0.6), (1.0, 1.0), (3.0, 0.55), (0.4, 5.0)] {
            let r = tight_bound(idx(a), idx(b), ov(FRAC_1_SQRT_2));
            assert_abs_diff_eq!(r.value, LN_2, epsilon = 1e-10);
        }
    }

    #[test]
    fn closed_form_square_examples() {
        let r = closed_form_square(idx(0.5), idx(0.5), ov(FRAC_1_SQRT_2)).unwrap();
        assert_abs_diff_eq!(r.value, LN_2, epsilon = 1e-12);

        let r = closed_form_square(idx(0.3), idx(0.5), ov(0.9)).unwrap();
        let direct = (0.81f64.powf(0.5) + 0.19f64.powf(0.5)).ln() / 0.5;
        assert_abs_diff_eq!(r.value, direct, epsilon = 1e-12);
        assert_eq!(r.theta_opt.len(), 1);
        assert_eq!(r.theta_opt[0].radians(), 0.0);

        // α > β picks the other endpoint
        let r = closed_form_square(idx(0.5), idx(0.3), ov(0.9)).unwrap();
        assert_abs_diff_eq!(r.theta_opt[0].radians(), ov(0.9).gamma(), epsilon = 1e-15);

        // support measure: both indices zero
        let r = closed_form_square(idx(0.0), idx(0.0), ov(0.9)).unwrap();
        assert_eq!(r.value, LN_2);
        assert_eq!(r.theta_opt.len(), 2);

        assert!(closed_form_square(idx(0.6), idx(0.2), ov(0.9)).is_err());
    }

    #[test]
    fn diagonal_first_regime_value_and_minimizers() {
        let o = ov(0.9);
        let r = diagonal_bound(idx(0.4), o);
        let direct = (0.81f64.powf(0.4) + 0.19f64.powf(0.4)).ln() / 0.6;
        assert_abs_diff_eq!(r.value, direct, epsilon = 1e-12);
        assert_eq!(r.regime, Regime::DiagonalFirst);
        assert_eq!(r.theta_opt.len(), 2);
        assert_abs_diff_eq!(r.theta_opt[1].radians(), o.gamma(), epsilon = 1e-15);
    }

    #[test]
    fn diagonal_collision_index_reproduces_published_value() {
        for c in [FRAC_1_SQRT_2, 0.75, 0.85, 0.95, 0.999] {
            let r = diagonal_bound(idx(2.0), ov(c));
            assert_abs_diff_eq!(
                r.value,
                -2.0 * (0.5 * (1.0 + c * c)).ln(),
                epsilon = 1e-12
            );
            assert_eq!(r.regime, Regime::DiagonalHalfGamma, "c = {c}");
        }
    }

    #[test]
    fn diagonal_past_dagger_at_complementary() {
        // α = 1.5 > α† ≈ 1.43: half-angle expression with (2±√2)/4
        let r = diagonal_bound(idx(1.5), ov(FRAC_1_SQRT_2));
        let hi = (2.0 + std::f64::consts::SQRT_2) / 4.0;
        let lo = (2.0 - std::f64::consts::SQRT_2) / 4.0;
        let direct = 2.0 / (1.0 - 1.5) * (hi.powf(1.5) + lo.powf(1.5)).ln();
        assert_abs_diff_eq!(r.value, direct, epsilon = 1e-12);
        assert_eq!(r.regime, Regime::DiagonalHalfGamma);
        assert_eq!(r.theta_opt.len(), 1);
        assert_abs_diff_eq!(
            r.theta_opt[0].radians(),
            FRAC_PI_4 / 2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn diagonal_below_dagger_at_complementary_is_log2() {
        for a in [0.6, 1.0, 1.2, 1.42] {
            let r = diagonal_bound(idx(a), ov(FRAC_1_SQRT_2));
            assert_abs_diff_eq!(r.value, LN_2, epsilon = 1e-12);
            assert_eq!(r.regime, Regime::DiagonalFirst);
        }
    }

    #[test]
    fn diagonal_shannon_interior_case() {
        // c = 0.75 has its transition above 1, so α = 1 sits in the interior
        let o = ov(0.75);
        let r = diagonal_bound(idx(1.0), o);
        assert_eq!(r.regime, Regime::DiagonalInterior);
        assert_eq!(r.theta_opt.len(), 2);
        let (t0, t1) = (r.theta_opt[0].radians(), r.theta_opt[1].radians());
        assert_abs_diff_eq!(t0 + t1, o.gamma(), epsilon = 1e-9);
        // both minimizers achieve the value
        for t in [t0, t1] {
            let v = entropy_sum(idx(1.0), idx(1.0), o.gamma(), t);
            assert_abs_diff_eq!(v, r.value, epsilon = 1e-9);
        }
    }

    #[test]
    fn alpha_dagger_interval_and_residual() {
        let dag = alpha_dagger();
        assert!((1.425..=1.435).contains(&dag), "alpha_dagger = {dag}");
        // regression against an independently bisected high-precision value
        assert_abs_diff_eq!(dag, 1.431_355_881_2, epsilon = 1e-6);
        let p = ProbabilityPair::new((2.0 + std::f64::consts::SQRT_2) / 4.0).unwrap();
        let residual = 2.0 * renyi_entropy(p, idx(dag)) - LN_2;
        assert!(residual.abs() < 1e-9, "residual = {residual}");
    }

    #[test]
    fn alpha_star_spot_values_from_transition_table() {
        for (c, expected) in [(0.85, 0.955), (0.75, 1.249), (0.99, 0.576)] {
            let a = alpha_star(ov(c)).unwrap();
            assert!(
                (a - expected).abs() <= 2e-3,
                "alpha_star({c}) = {a}, expected {expected}"
            );
        }
    }

    #[test]
    fn alpha_star_edges() {
        assert_eq!(alpha_star(ov(1.0)), Err(Error::TransitionUndefined));
        let at_complementary = alpha_star(ov(FRAC_1_SQRT_2)).unwrap();
        assert_eq!(at_complementary, alpha_dagger());
        let a = alpha_star(ov(0.85)).unwrap();
        assert!(a > 0.5 && a < alpha_dagger());
    }

    #[test]
    fn suboptimal_bound_reduces_to_diagonal_maximum() {
        let o = ov(0.9);
        assert_eq!(
            suboptimal_bound(idx(0.2), idx(0.4), o),
            diagonal_bound(idx(0.4), o).value
        );
        // never exceeds the tight bound
        let o8 = ov(0.8);
        let sub = suboptimal_bound(idx(1.0), idx(3.0), o8);
        let tight = tight_bound(idx(1.0), idx(3.0), o8).value;
        assert!(sub <= tight + 1e-12, "sub = {sub}, tight = {tight}");
        // coincides on the diagonal
        assert_abs_diff_eq!(
            suboptimal_bound(idx(1.7), idx(1.7), o8),
            tight_bound(idx(1.7), idx(1.7), o8).value,
            epsilon = 1e-15
        );
    }

    #[test]
    fn reference_bound_values() {
        let at = |c: f64| reference_bounds(idx(1.0), idx(1.0), ov(c));
        let find = |bounds: &[ReferenceBound], name: &str| -> ReferenceBound {
            *bounds.iter().find(|b| b.name == name).unwrap()
        };
        let b1 = at(1.0);
        assert_eq!(find(&b1, "deutsch").value, 0.0);
        assert_eq!(find(&b1, "maassen_uffink_shannon").value, 0.0);
        let b2 = at(FRAC_1_SQRT_2);
        assert_abs_diff_eq!(
            find(&b2, "maassen_uffink_shannon").value,
            LN_2,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(find(&b2, "rastegin_half").value, LN_2, epsilon = 1e-12);
        assert!(!find(&b2, "rastegin_half").applies); // α = β = 1 > 1/2
        assert!(find(&b2, "collision").applies);
    }

    #[test]
    fn sweep_rejects_bad_grids() {
        let mut spec = SweepSpec {
            variable: SweptVariable::Alpha,
            grid: vec![],
            alpha: 1.0,
            beta: 1.0,
            c: 0.9,
        };
        assert!(matches!(bound_sweep(&spec), Err(Error::InvalidGrid)));
        spec.grid = vec![1.0, 0.5];
        assert!(matches!(bound_sweep(&spec), Err(Error::InvalidGrid)));
        spec.grid = vec![1.0, 1.0];
        assert!(matches!(bound_sweep(&spec), Err(Error::InvalidGrid)));
    }

    #[test]
    fn sweep_rows_follow_grid_order() {
        let spec = SweepSpec {
            variable: SweptVariable::OverlapC,
            grid: vec![0.75, 0.85, 0.95],
            alpha: 1.0,
            beta: 1.0,
            c: 0.0,
        };
        let rows = bound_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].swept, 0.75);
        assert_eq!(rows[2].swept, 0.95);
        // bound shrinks toward commuting observables
        assert!(rows[0].value > rows[1].value && rows[1].value > rows[2].value);
    }
}
