//! Exact classification of Lie brackets on a 3-dimensional vector space.
//!
//! A bracket is stored by its structure constants over the rationals ℚ or
//! the Gaussian rationals ℚ(i), and every decision in this crate — the
//! Jacobi identity, the Bianchi isomorphism type, orbit dimensions,
//! stabilizer membership, orbit closures — is made in exact arithmetic.
//! Isomorphism witnesses are exact whenever the required scaling lives in
//! the base field, and high-precision dyadic approximations (with exactly
//! computed residuals) otherwise.
//!
//! The pipeline:
//!
//! 1. [`tensor`]: vectors, covectors, matrices, symmetric forms and brackets
//!    over the exact scalar field, plus the basis-change [`action`].
//! 2. [`decomp`]: the equivariant split of a bracket into a symmetric matrix
//!    part and a covector part, `C = Tr(M) + j(ν)`, and the Jacobi
//!    obstruction in both its direct and decomposed forms.
//! 3. [`classify`]: rank/signature invariants, the adjugate family invariant,
//!    and the Bianchi type decision over either field.
//! 4. [`canon`]: congruence diagonalization, canonical representatives, and
//!    isomorphism witnesses with exact residual accounting.
//! 5. [`orbits`]: orbit dimension by linearized action, stabilizer
//!    (automorphism-group) data and membership tests, closure sets and the
//!    closure poset.
//! 6. [`io`] / [`sample`]: interchange formats, DOT rendering, and the
//!    deterministic sample generator backing the test corpus.

pub mod action;
pub mod canon;
pub mod classify;
pub mod decomp;
pub mod error;
pub mod io;
pub mod orbits;
pub mod sample;
pub mod scalar;
pub mod tensor;

pub use action::{act_bracket, act_covector, act_sym};
pub use canon::{
    canonicalize, congruence_diagonalize, isomorphic, witness, WitnessResult,
    DEFAULT_WITNESS_TOLERANCE,
};
pub use classify::{
    classify, derived_algebra_dim, invariant_c, is_unimodular, rank_signature,
    representative, representative_pair, BianchiClass, BianchiType,
    ClassificationReport, RankSig, StructureLabel, TypeLabel,
};
pub use decomp::{
    compose, decompose, is_jacobi, j_embed, jacobian_tensor, jacobian_via_theorem,
    p_project, tr_embed, trace_map, Decomposition,
};
pub use error::{Error, Result};
pub use io::{
    format_approx, parse_bracket_text, render_bracket, render_dot, BracketFile,
    ConstantEntry, ReportDoc, SCHEMA_VERSION,
};
pub use orbits::{
    aut_info, closure_poset, closure_set, infinitesimal_action, orbit_dim_of_label,
    orbit_dimension, stabilizer_dimension, stabilizer_membership, AutGroupInfo,
    ClosurePoset, PosetNode,
};
pub use sample::{
    random_bracket, random_group_element, random_small_scalar, sample_brackets,
    within_entry_bound, DEFAULT_ENTRY_BOUND,
};
pub use scalar::{FieldMode, Scalar};
pub use tensor::{
    rank_of, Bracket, Covector, GroupElement, JacobiTensor, Matrix3, SymForm, Vector,
    PAIRS,
};
