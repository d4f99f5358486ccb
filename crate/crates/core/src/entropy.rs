//! Scalar entropy primitives for two-outcome distributions and the
//! trigonometric objective built from them.
//!
//! Everything here is a pure function of its arguments. Natural logarithm
//! throughout; entropies are in nats.

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2};

/// Slack used when validating angular domains, absorbing representation
/// error in quantities like `arccos(c)`.
pub(crate) const ANGLE_DOMAIN_SLACK: f64 = 1e-12;

/// A Rényi entropic index λ ≥ 0.
///
/// λ = 1 selects the Shannon limit and λ = 0 the support measure; both are
/// handled by explicit branches, never by perturbing λ. Infinite indices are
/// rejected — the λ → ∞ limit is exposed separately as [`min_entropy`].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropicIndex(f64);

impl EntropicIndex {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda < 0.0 {
            return Err(Error::InvalidIndex(lambda));
        }
        Ok(Self(lambda))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Larger of two indices, used by the suboptimal-bound reduction.
    pub fn max(self, other: Self) -> Self {
        if self.0 >= other.0 {
            self
        } else {
            other
        }
    }
}

/// A two-outcome probability distribution (p, 1 − p).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityPair(f64);

impl ProbabilityPair {
    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() || !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        Ok(Self(p))
    }

    /// Probability of the first outcome.
    pub fn first(self) -> f64 {
        self.0
    }

    /// Probability of the second outcome.
    pub fn second(self) -> f64 {
        1.0 - self.0
    }
}

/// A finite angle in radians.
///
/// Reduced domains such as [0, π/4] or [0, γ] are enforced by the operations
/// that need them, not by the type.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Result<Self> {
        if !radians.is_finite() {
            return Err(Error::InvalidAngle(radians));
        }
        Ok(Self(radians))
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Rényi entropy of a two-outcome distribution.
///
/// Returns (1/(1−λ)) log(p^λ + (1−p)^λ) for λ ∉ {0, 1}, the Shannon entropy
/// at λ = 1 (with 0 log 0 := 0), and log of the support cardinality at λ = 0.
/// The generic branch is evaluated through `exp_m1`/`ln_1p`, which stays
/// accurate for λ near 1 where the direct form cancels catastrophically.
/// Result is in [0, log 2].
pub fn renyi_entropy(p: ProbabilityPair, lam: EntropicIndex) -> f64 {
    let (p1, p2) = (p.first(), p.second());
    let l = lam.get();
    let h = if l == 1.0 {
        let mut s = 0.0;
        if p1 > 0.0 {
            s -= p1 * p1.ln();
        }
        if p2 > 0.0 {
            s -= p2 * p2.ln();
        }
        s
    } else if l == 0.0 {
        if p1 > 0.0 && p2 > 0.0 {
            LN_2
        } else {
            0.0
        }
    } else {
        // p^λ + q^λ = 1 + Σ q_k (e^{(λ-1) ln q_k} − 1), skipping zero outcomes.
        let d = l - 1.0;
        let mut x = 0.0;
        if p1 > 0.0 {
            x += p1 * f64::exp_m1(d * p1.ln());
        }
        if p2 > 0.0 {
            x += p2 * f64::exp_m1(d * p2.ln());
        }
        f64::ln_1p(x) / -d
    };
    // Provably in [0, log 2]; the clamp only shields ulp-level sign noise.
    h.max(0.0).min(LN_2)
}

/// Min-entropy −log max(p, 1 − p), the λ → ∞ limit of [`renyi_entropy`].
pub fn min_entropy(p: ProbabilityPair) -> f64 {
    -p.first().max(p.second()).ln()
}

/// The power sum (cos²θ)^λ + (sin²θ)^λ.
///
/// At λ = 0 each term contributes 1 when its base is nonzero and 0 otherwise,
/// so the result counts the support of (cos²θ, sin²θ); this matches the
/// support-measure convention of [`renyi_entropy`] at λ = 0.
pub fn big_d(lam: EntropicIndex, theta: Angle) -> f64 {
    let (s, c) = theta.radians().sin_cos();
    let (s2, c2) = (s * s, c * c);
    let l = lam.get();
    if l == 0.0 {
        let mut n = 0.0;
        if c2 > 0.0 {
            n += 1.0;
        }
        if s2 > 0.0 {
            n += 1.0;
        }
        n
    } else {
        c2.powf(l) + s2.powf(l)
    }
}

/// Derivative in θ of [`big_d`]: λ sin(2θ) [(sin²θ)^{λ−1} − (cos²θ)^{λ−1}].
///
/// Evaluated in the grouped form 2λ [cos θ (sin θ)^{2λ−1} − sin θ (cos θ)^{2λ−1}]
/// so the endpoint limits come out right on θ ∈ [0, π/2]: at θ = 0 this is 0
/// for λ > 1/2, 1 at λ = 1/2, and +∞ for λ < 1/2 (the divergence is reported
/// as a signed infinity, not an error). Rejects λ = 0.
pub fn big_d_prime(lam: EntropicIndex, theta: Angle) -> Result<f64> {
    let l = lam.get();
    if l == 0.0 {
        return Err(Error::UnsupportedIndex(l));
    }
    let (s, c) = theta.radians().sin_cos();
    let e = 2.0 * l - 1.0;
    let term_s = c * s.signum() * s.abs().powf(e);
    let term_c = s * c.signum() * c.abs().powf(e);
    Ok(2.0 * l * (term_s - term_c))
}

/// Curvature kernel of the entropy term: the second derivative of
/// log D_λ(θ)/(1−λ) equals `curvature_k(λ, θ) / big_d(λ, θ)²`.
///
/// Returns (2λ/(1−λ)) [(2λ−1)(sin²(2θ)/4)^{λ−1} − (cos²θ)^{2λ−1} − (sin²θ)^{2λ−1}].
/// Rejects λ ∈ {0, 1} and θ outside the open interval (0, π/2); the Shannon
/// case is handled by callers through a numerical λ → 1 limit when needed.
pub fn curvature_k(lam: EntropicIndex, theta: Angle) -> Result<f64> {
    let l = lam.get();
    if l == 0.0 || l == 1.0 {
        return Err(Error::UnsupportedIndex(l));
    }
    let t = theta.radians();
    if t <= 0.0 || t >= FRAC_PI_2 {
        return Err(Error::OutOfDomain {
            name: "theta",
            value: t,
            lo: 0.0,
            hi: FRAC_PI_2,
        });
    }
    let (s, c) = t.sin_cos();
    let (s2, c2) = (s * s, c * c);
    // sin²(2θ)/4 = sin²θ cos²θ
    let mixed = (s2 * c2).powf(l - 1.0);
    let bracket = (2.0 * l - 1.0) * mixed - c2.powf(2.0 * l - 1.0) - s2.powf(2.0 * l - 1.0);
    Ok(2.0 * l / (1.0 - l) * bracket)
}

/// Entropy sum without domain validation; callers guarantee θ ∈ [0, γ].
pub(crate) fn entropy_sum(alpha: EntropicIndex, beta: EntropicIndex, gamma: f64, theta: f64) -> f64 {
    let pa = ProbabilityPair::new(theta.cos().powi(2).clamp(0.0, 1.0)).expect("cos² is in [0,1]");
    let pb = ProbabilityPair::new((gamma - theta).cos().powi(2).clamp(0.0, 1.0))
        .expect("cos² is in [0,1]");
    renyi_entropy(pa, alpha) + renyi_entropy(pb, beta)
}

/// The objective H_α((cos²θ, sin²θ)) + H_β((cos²(γ−θ), sin²(γ−θ))).
///
/// Requires γ ∈ [0, π/4] and θ ∈ [0, γ]. Both terms go through
/// [`renyi_entropy`] so the λ ∈ {0, 1} limits are uniform with the rest of
/// the crate.
pub fn objective(
    alpha: EntropicIndex,
    beta: EntropicIndex,
    gamma: Angle,
    theta: Angle,
) -> Result<f64> {
    let g = gamma.radians();
    let t = theta.radians();
    if !(-ANGLE_DOMAIN_SLACK..=FRAC_PI_4 + ANGLE_DOMAIN_SLACK).contains(&g) {
        return Err(Error::OutOfDomain {
            name: "gamma",
            value: g,
            lo: 0.0,
            hi: FRAC_PI_4,
        });
    }
    if !(-ANGLE_DOMAIN_SLACK..=g + ANGLE_DOMAIN_SLACK).contains(&t) {
        return Err(Error::OutOfDomain {
            name: "theta",
            value: t,
            lo: 0.0,
            hi: g,
        });
    }
    Ok(entropy_sum(alpha, beta, g, t))
}

/// The gap [D_β(γ−θ) − D_β(γ+θ)]/(β−1), nonnegative on [0, π/4]².
///
/// Its sign is what makes the relative phase 0 optimal in the reduced
/// minimization. Rejects β ∈ {0, 1}.
pub fn delta_gap(beta: EntropicIndex, theta: Angle, gamma: Angle) -> Result<f64> {
    let b = beta.get();
    if b == 0.0 || b == 1.0 {
        return Err(Error::UnsupportedIndex(b));
    }
    let t = theta.radians();
    let g = gamma.radians();
    for (name, value) in [("theta", t), ("gamma", g)] {
        if !(-ANGLE_DOMAIN_SLACK..=FRAC_PI_4 + ANGLE_DOMAIN_SLACK).contains(&value) {
            return Err(Error::OutOfDomain {
                name,
                value,
                lo: 0.0,
                hi: FRAC_PI_4,
            });
        }
    }
    let minus = big_d(beta, Angle::new(g - t)?);
    let plus = big_d(beta, Angle::new(g + t)?);
    Ok((minus - plus) / (b - 1.0))
}
