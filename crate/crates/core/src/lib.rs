//! Tight lower bounds for the sum of Rényi entropies of two qubit
//! observables' outcome distributions, for arbitrary entropic indices
//! (α, β) and arbitrary eigenbasis overlap c.
//!
//! The crate computes the bound by regime dispatch — closed forms on the
//! index square [0, 1/2]² and on most of the equal-index line, guarded 1-D
//! minimization elsewhere — constructs the minimizing states through the
//! phase–rotation–phase factorization of the basis change, and checks every
//! result against a brute-force oracle that searches a wider parameter space
//! than the engine uses.
//!
//! All computation is pure and deterministic; sweeps and the oracle evaluate
//! grid points in parallel with index-ordered assembly, so results do not
//! depend on scheduling.

pub mod bound;
pub mod entropy;
mod error;
pub mod oracle;
pub mod qubit;
mod solve;

pub use bound::{
    alpha_dagger, alpha_star, bound_sweep, closed_form_square, diagonal_bound, reference_bounds,
    suboptimal_bound, tight_bound, BoundResult, Overlap, ReferenceBound, Regime, SweepRow,
    SweepSpec, SweptVariable,
};
pub use entropy::{
    big_d, big_d_prime, curvature_k, delta_gap, min_entropy, objective, renyi_entropy, Angle,
    EntropicIndex, ProbabilityPair,
};
pub use error::{Error, Result};
pub use oracle::{
    brute_force_min, run_verification, verify_phase_optimality, OracleConfig, SuiteReport,
    VerificationReport,
};
pub use qubit::{
    entropy_sum_of_state, factorize, landau_pollak_residual, minimizer_states, overlap_of,
    random_state, random_unitary, MinimizerFamily, MinimizerState, QubitState, Unitary2,
    UnitaryFactorization,
};
