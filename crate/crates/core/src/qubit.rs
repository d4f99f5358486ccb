//! 2×2 unitary algebra: overlap extraction, the phase–rotation–phase
//! factorization, construction of the bound-saturating state family, and the
//! Landau–Pollak saturation check.

use crate::bound::{BoundResult, Overlap};
use crate::entropy::{renyi_entropy, Angle, EntropicIndex, ProbabilityPair};
use crate::error::{Error, Result};
use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

/// Unit-norm tolerance for state construction.
const NORM_TOL: f64 = 1e-12;
/// Unitarity tolerance for matrix construction.
const UNITARY_TOL: f64 = 1e-12;
/// Angles this close to a degenerate rotation are factored by convention.
const DEGENERATE_TOL: f64 = 1e-12;
/// Accepted gap between a bound's overlap and a matrix's overlap.
const OVERLAP_MATCH_TOL: f64 = 1e-9;

/// A pure qubit state: two complex amplitudes of unit norm, expressed in the
/// first observable's eigenbasis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    a1: Complex64,
    a2: Complex64,
}

impl QubitState {
    pub fn new(a1: Complex64, a2: Complex64) -> Result<Self> {
        let norm2 = a1.norm_sqr() + a2.norm_sqr();
        if !norm2.is_finite() || (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm2));
        }
        Ok(Self { a1, a2 })
    }

    /// Real state (cos θ, sin θ).
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            a1: Complex64::new(c, 0.0),
            a2: Complex64::new(s, 0.0),
        }
    }

    pub fn a1(&self) -> Complex64 {
        self.a1
    }

    pub fn a2(&self) -> Complex64 {
        self.a2
    }

    /// Outcome distribution (|a1|², |a2|²) as a probability pair.
    pub fn probabilities(&self) -> ProbabilityPair {
        ProbabilityPair::new(self.a1.norm_sqr().clamp(0.0, 1.0))
            .expect("squared amplitude is a probability")
    }

    /// The state multiplied by the global phase e^{iφ}.
    pub fn phase_shifted(&self, phi: f64) -> Self {
        let ph = Complex64::from_polar(1.0, phi);
        Self {
            a1: ph * self.a1,
            a2: ph * self.a2,
        }
    }

    /// |⟨self|other⟩|, 1 for states equal up to a global phase.
    pub fn fidelity(&self, other: &Self) -> f64 {
        (self.a1.conj() * other.a1 + self.a2.conj() * other.a2).norm()
    }
}

/// A 2×2 complex unitary basis-change matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2 {
    m: [[Complex64; 2]; 2],
}

/// Max-norm of T†T − I over all entries.
fn unitarity_defect(m: &[[Complex64; 2]; 2]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let mut dot = Complex64::new(0.0, 0.0);
            for k in 0..2 {
                dot += m[k][i].conj() * m[k][j];
            }
            let expected = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot - expected).norm());
        }
    }
    worst
}

impl Unitary2 {
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let defect = unitarity_defect(&entries);
        if !defect.is_finite() || defect > UNITARY_TOL {
            return Err(Error::NotUnitary(defect));
        }
        Ok(Self { m: entries })
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self {
            m: [[one, zero], [zero, one]],
        }
    }

    /// The real rotation [[cos γ_T, sin γ_T], [−sin γ_T, cos γ_T]].
    pub fn rotation(gamma_t: f64) -> Self {
        let (s, c) = gamma_t.sin_cos();
        Self {
            m: [
                [Complex64::new(c, 0.0), Complex64::new(s, 0.0)],
                [Complex64::new(-s, 0.0), Complex64::new(c, 0.0)],
            ],
        }
    }

    /// Builds Φ(u) V(γ_T) Φ(v) from left phases, rotation angle, and right
    /// phases.
    pub fn from_phases(u: [f64; 2], gamma_t: f64, v: [f64; 2]) -> Self {
        let (s, c) = gamma_t.sin_cos();
        let eu = [
            Complex64::from_polar(1.0, u[0]),
            Complex64::from_polar(1.0, u[1]),
        ];
        let ev = [
            Complex64::from_polar(1.0, v[0]),
            Complex64::from_polar(1.0, v[1]),
        ];
        Self {
            m: [
                [eu[0] * c * ev[0], eu[0] * s * ev[1]],
                [-eu[1] * s * ev[0], eu[1] * c * ev[1]],
            ],
        }
    }

    /// Projects near-unitary entries onto the closest unitary by normalizing
    /// and orthogonalizing the columns, then constructs. Intended for
    /// user-supplied matrices that pass a coarser unitarity screen than the
    /// type's own tolerance.
    pub fn renormalized(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let defect = unitarity_defect(&entries);
        if !defect.is_finite() {
            return Err(Error::NotUnitary(defect));
        }
        let mut col0 = [entries[0][0], entries[1][0]];
        let n0 = (col0[0].norm_sqr() + col0[1].norm_sqr()).sqrt();
        if n0 == 0.0 {
            return Err(Error::NotUnitary(defect));
        }
        col0 = [col0[0] / n0, col0[1] / n0];
        let mut col1 = [entries[0][1], entries[1][1]];
        let proj = col0[0].conj() * col1[0] + col0[1].conj() * col1[1];
        col1 = [col1[0] - proj * col0[0], col1[1] - proj * col0[1]];
        let n1 = (col1[0].norm_sqr() + col1[1].norm_sqr()).sqrt();
        if n1 == 0.0 {
            return Err(Error::NotUnitary(defect));
        }
        col1 = [col1[0] / n1, col1[1] / n1];
        Self::new([[col0[0], col1[0]], [col0[1], col1[1]]])
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    /// T ψ.
    pub fn apply(&self, psi: &QubitState) -> QubitState {
        let b1 = self.m[0][0] * psi.a1 + self.m[0][1] * psi.a2;
        let b2 = self.m[1][0] * psi.a1 + self.m[1][1] * psi.a2;
        // unitarity preserves the norm; bypass the tolerance check
        QubitState { a1: b1, a2: b2 }
    }

    /// Swaps the two rows (relabels the second observable's outcomes).
    pub fn row_swapped(&self) -> Self {
        Self {
            m: [self.m[1], self.m[0]],
        }
    }
}

/// The phase–rotation–phase form (u, γ_T, v) of a unitary, gauge-fixed by
/// v₁ = 0 so the decomposition is deterministic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitaryFactorization {
    pub u: [f64; 2],
    pub gamma_t: f64,
    pub v: [f64; 2],
}

impl UnitaryFactorization {
    /// Rebuilds Φ(u) V(γ_T) Φ(v).
    pub fn reconstruct(&self) -> Unitary2 {
        Unitary2::from_phases(self.u, self.gamma_t, self.v)
    }
}

/// The overlap c = max |T_lk| of a unitary.
///
/// Unitarity keeps the maximum modulus in [1/√2, 1] up to rounding, so the
/// conversion cannot fail for a valid [`Unitary2`].
pub fn overlap_of(t: &Unitary2) -> Overlap {
    let mut c: f64 = 0.0;
    for row in &t.m {
        for e in row {
            c = c.max(e.norm());
        }
    }
    Overlap::from_c(c).expect("unitarity keeps the largest modulus in [1/√2, 1]")
}

/// Factors T = Φ(u) V(γ_T) Φ(v) with γ_T = arccos |T₁₁| ∈ [0, π/2] and the
/// gauge v₁ = 0.
///
/// When V has a vanishing column (γ_T ∈ {0, π/2}) one right phase is
/// unconstrained and is set to 0. Reconstruction agrees with the input to
/// 1e-10 entrywise.
pub fn factorize(t: &Unitary2) -> UnitaryFactorization {
    let gamma_t = t.m[0][0].norm().clamp(0.0, 1.0).acos();
    let (u, v);
    if gamma_t <= DEGENERATE_TOL {
        // diagonal: T = diag(e^{iu₁}, e^{iu₂}), v₂ free
        u = [t.m[0][0].arg(), t.m[1][1].arg()];
        v = [0.0, 0.0];
    } else if gamma_t >= FRAC_PI_2 - DEGENERATE_TOL {
        // antidiagonal: u₁ + v₂ underdetermined, take v₂ = 0
        u = [t.m[0][1].arg(), (-t.m[1][0]).arg()];
        v = [0.0, 0.0];
    } else {
        let u1 = t.m[0][0].arg();
        let u2 = (-t.m[1][0]).arg();
        let mut v2 = t.m[0][1].arg() - u1;
        // wrap into (−π, π] for a canonical representative
        if v2 > PI {
            v2 -= TAU;
        } else if v2 <= -PI {
            v2 += TAU;
        }
        u = [u1, u2];
        v = [0.0, v2];
    }
    UnitaryFactorization { u, gamma_t, v }
}

/// One member of the minimizer family: the branch angle, the half-turn shift
/// n ∈ {0, 1}, and the resulting state at global phase 0.
#[derive(Debug, Clone, Copy)]
pub struct MinimizerState {
    pub theta_opt: Angle,
    pub n: u8,
    pub state: QubitState,
}

/// The family of bound-achieving states for a unitary, closed under global
/// phase by construction.
#[derive(Debug, Clone)]
pub struct MinimizerFamily {
    pub theta_opts: Vec<Angle>,
    /// Sign applied to the minimizer angle, +1 for γ_T ≤ π/4 and −1 past it.
    pub epsilon_t: f64,
    pub v: [f64; 2],
    pub states: Vec<MinimizerState>,
}

/// Builds every bound-achieving state for `t` from a bound computed at the
/// same overlap: for each minimizer angle θ and shift n ∈ {0, 1}, the state
/// Φ(−v) (cos(ε_T θ + nπ/2), sin(ε_T θ + nπ/2)) with ε_T = sign(π/4 − γ_T).
///
/// ε_T is taken as +1 at γ_T = π/4, where both sign choices generate the same
/// family. Fails if the bound's overlap does not match the matrix's.
pub fn minimizer_states(t: &Unitary2, bound: &BoundResult) -> Result<MinimizerFamily> {
    let actual = overlap_of(t);
    if (actual.c() - bound.overlap.c()).abs() > OVERLAP_MATCH_TOL {
        return Err(Error::OverlapMismatch {
            expected: bound.overlap.c(),
            actual: actual.c(),
        });
    }
    let f = factorize(t);
    let epsilon_t = if f.gamma_t <= FRAC_PI_4 { 1.0 } else { -1.0 };
    let phase = [
        Complex64::from_polar(1.0, -f.v[0]),
        Complex64::from_polar(1.0, -f.v[1]),
    ];
    let mut states = Vec::with_capacity(2 * bound.theta_opt.len());
    for &theta in &bound.theta_opt {
        for n in 0..2u8 {
            let angle = epsilon_t * theta.radians() + f64::from(n) * FRAC_PI_2;
            let (s, c) = angle.sin_cos();
            states.push(MinimizerState {
                theta_opt: theta,
                n,
                state: QubitState {
                    a1: phase[0] * c,
                    a2: phase[1] * s,
                },
            });
        }
    }
    Ok(MinimizerFamily {
        theta_opts: bound.theta_opt.clone(),
        epsilon_t,
        v: f.v,
        states,
    })
}

/// Landau–Pollak residual
/// arccos √max P^A + arccos √max P^B − arccos c.
///
/// Nonnegative for every state; zero certifies saturation, which the
/// minimizer family attains.
pub fn landau_pollak_residual(psi: &QubitState, t: &Unitary2) -> f64 {
    let pa = psi.probabilities();
    let pb = t.apply(psi).probabilities();
    let max_a = pa.first().max(pa.second()).clamp(0.0, 1.0);
    let max_b = pb.first().max(pb.second()).clamp(0.0, 1.0);
    max_a.sqrt().acos() + max_b.sqrt().acos() - overlap_of(t).gamma()
}

/// The entropy sum H_α(|ψ|²) + H_β(|Tψ|²): the functional every bound in this
/// crate lower-bounds.
pub fn entropy_sum_of_state(
    psi: &QubitState,
    t: &Unitary2,
    alpha: EntropicIndex,
    beta: EntropicIndex,
) -> f64 {
    renyi_entropy(psi.probabilities(), alpha) + renyi_entropy(t.apply(psi).probabilities(), beta)
}

/// A state drawn uniformly from the pure-state manifold: colatitude uniform
/// in its cosine, relative phase uniform, global phase fixed to 0.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> QubitState {
    let cos_colat: f64 = rng.gen_range(-1.0..=1.0);
    let half = (cos_colat.clamp(-1.0, 1.0).acos()) * 0.5;
    let phi: f64 = rng.gen_range(0.0..TAU);
    let (s, c) = half.sin_cos();
    QubitState {
        a1: Complex64::new(c, 0.0),
        a2: Complex64::from_polar(s, phi),
    }
}

/// A Haar-like random unitary: |T₁₁|² uniform in [0, 1], all four phases
/// uniform.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R) -> Unitary2 {
    let gamma_t = rng.gen_range(0.0..=1.0_f64).sqrt().acos();
    let u = [rng.gen_range(0.0..TAU), rng.gen_range(0.0..TAU)];
    let v = [rng.gen_range(0.0..TAU), rng.gen_range(0.0..TAU)];
    Unitary2::from_phases(u, gamma_t, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::tight_bound;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;
    use std::f64::consts::FRAC_PI_6;

    fn idx(l: f64) -> EntropicIndex {
        EntropicIndex::new(l).unwrap()
    }

    #[test]
    fn state_construction_enforces_norm() {
        assert!(QubitState::new(Complex64::new(1.0, 0.0), Complex64::new(0.1, 0.0)).is_err());
        let s = QubitState::from_angle(0.3);
        assert_abs_diff_eq!(s.probabilities().first(), 0.3f64.cos().powi(2));
    }

    #[test]
    fn unitary_construction_enforces_unitarity() {
        let bad = [
            [Complex64::new(1.0, 0.0), Complex64::new(0.1, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        ];
        assert!(Unitary2::new(bad).is_err());
        assert!(Unitary2::renormalized(bad).is_ok());
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(overlap_of(&Unitary2::identity()).c(), 1.0);
        assert_abs_diff_eq!(
            overlap_of(&Unitary2::rotation(FRAC_PI_4)).c(),
            std::f64::consts::FRAC_1_SQRT_2,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            overlap_of(&Unitary2::rotation(FRAC_PI_6)).c(),
            3.0f64.sqrt() / 2.0,
            epsilon = 1e-15
        );
        // past π/4 the off-diagonal dominates
        assert_abs_diff_eq!(
            overlap_of(&Unitary2::rotation(1.2)).c(),
            1.2f64.sin(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn factorize_canonical_rotation() {
        let f = factorize(&Unitary2::rotation(0.4));
        assert_abs_diff_eq!(f.gamma_t, 0.4, epsilon = 1e-14);
        assert_eq!(f.u, [0.0, 0.0]);
        assert_eq!(f.v, [0.0, 0.0]);
    }

    #[test]
    fn factorize_diagonal_phases() {
        let delta = 0.7;
        let t = Unitary2::new([
            [Complex64::from_polar(1.0, delta), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        ])
        .unwrap();
        let f = factorize(&t);
        assert_eq!(f.gamma_t, 0.0);
        assert_abs_diff_eq!(f.u[0], delta, epsilon = 1e-15);
        assert_abs_diff_eq!(f.u[1], 0.0, epsilon = 1e-15);
        let r = f.reconstruct();
        for i in 0..2 {
            for j in 0..2 {
                assert!((r.entry(i, j) - t.entry(i, j)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn factorize_round_trips_random_unitaries() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for _ in 0..200 {
            let t = random_unitary(&mut rng);
            let r = factorize(&t).reconstruct();
            for i in 0..2 {
                for j in 0..2 {
                    assert!(
                        (r.entry(i, j) - t.entry(i, j)).norm() < 1e-10,
                        "entry ({i},{j}) mismatch"
                    );
                }
            }
        }
    }

    #[test]
    fn minimizers_for_identity_are_basis_states() {
        let t = Unitary2::identity();
        let bound = tight_bound(idx(1.0), idx(1.0), overlap_of(&t));
        let fam = minimizer_states(&t, &bound).unwrap();
        assert_eq!(fam.states.len(), 2);
        for m in &fam.states {
            assert_abs_diff_eq!(
                entropy_sum_of_state(&m.state, &t, idx(1.0), idx(1.0)),
                0.0,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn minimizers_at_complementary_half_indices() {
        let t = Unitary2::rotation(FRAC_PI_4);
        let bound = tight_bound(idx(0.5), idx(0.5), overlap_of(&t));
        let fam = minimizer_states(&t, &bound).unwrap();
        // θ ∈ {0, γ} × n ∈ {0, 1}
        assert_eq!(fam.states.len(), 4);
        for m in &fam.states {
            assert_abs_diff_eq!(
                entropy_sum_of_state(&m.state, &t, idx(0.5), idx(0.5)),
                std::f64::consts::LN_2,
                epsilon = 1e-9
            );
            assert!(landau_pollak_residual(&m.state, &t).abs() < 1e-9);
        }
    }

    #[test]
    fn minimizers_on_mirrored_rotation_branch() {
        // γ_T = 3π/8 > π/4, so ε_T = −1 and γ = π/8
        let t = Unitary2::rotation(3.0 * FRAC_PI_4 / 2.0);
        let ovl = overlap_of(&t);
        assert_abs_diff_eq!(ovl.gamma(), FRAC_PI_4 / 2.0, epsilon = 1e-14);
        let bound = tight_bound(idx(3.0), idx(3.0), ovl);
        let fam = minimizer_states(&t, &bound).unwrap();
        assert_eq!(fam.epsilon_t, -1.0);
        for m in &fam.states {
            assert_abs_diff_eq!(
                entropy_sum_of_state(&m.state, &t, idx(3.0), idx(3.0)),
                bound.value,
                epsilon = 1e-9
            );
        }
    }

    #[test]
    fn minimizer_overlap_mismatch_is_rejected() {
        let t = Unitary2::rotation(FRAC_PI_4);
        let bound = tight_bound(idx(1.0), idx(1.0), Overlap::from_c(0.95).unwrap());
        assert!(matches!(
            minimizer_states(&t, &bound),
            Err(Error::OverlapMismatch { .. })
        ));
    }

    #[test]
    fn wrong_branch_sign_breaks_attainment() {
        // flipping ε_T must be detectable whenever the minimizer is interior;
        // this pins the sign convention against silent regressions
        let t = Unitary2::rotation(0.64); // c ≈ 0.8, γ_T < π/4 so ε_T = +1
        let bound = tight_bound(idx(1.0), idx(1.0), overlap_of(&t));
        let fam = minimizer_states(&t, &bound).unwrap();
        let theta = fam.theta_opts[0].radians();
        assert!(theta > 1e-3, "interior minimizer expected");
        let wrong = QubitState::from_angle(-theta);
        let sum = entropy_sum_of_state(&wrong, &t, idx(1.0), idx(1.0));
        assert!(
            sum > bound.value + 1e-6,
            "sign flip went undetected: {sum} vs {}",
            bound.value
        );
    }

    #[test]
    fn landau_pollak_zero_for_aligned_basis() {
        let psi = QubitState::from_angle(0.0);
        assert_eq!(landau_pollak_residual(&psi, &Unitary2::identity()), 0.0);
    }

    #[test]
    fn landau_pollak_nonnegative_for_random_states() {
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        let t = Unitary2::rotation(FRAC_PI_4);
        for _ in 0..2000 {
            let psi = random_state(&mut rng);
            assert!(landau_pollak_residual(&psi, &t) >= -1e-9);
        }
    }

    #[test]
    fn entropy_sum_examples_and_phase_invariance() {
        let t = Unitary2::identity();
        let psi = QubitState::from_angle(0.0);
        assert_eq!(entropy_sum_of_state(&psi, &t, idx(0.5), idx(3.0)), 0.0);

        let even = QubitState::from_angle(FRAC_PI_4);
        assert_abs_diff_eq!(
            entropy_sum_of_state(&even, &t, idx(1.0), idx(1.0)),
            2.0 * std::f64::consts::LN_2,
            epsilon = 1e-12
        );

        // invariance under a global phase, up to rounding in the phase product
        let mut rng = ChaCha12Rng::seed_from_u64(9);
        for _ in 0..100 {
            let psi = random_state(&mut rng);
            let shifted = psi.phase_shifted(rng.gen_range(0.0..TAU));
            let t = random_unitary(&mut rng);
            assert_abs_diff_eq!(
                entropy_sum_of_state(&psi, &t, idx(0.7), idx(2.0)),
                entropy_sum_of_state(&shifted, &t, idx(0.7), idx(2.0)),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn random_states_are_normalized() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let s = random_state(&mut rng);
            let n = s.a1().norm_sqr() + s.a2().norm_sqr();
            assert!((n - 1.0).abs() < 1e-12);
        }
    }
}
