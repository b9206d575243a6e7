//! The basis-change action on brackets and on the pieces of their
//! decomposition.
//!
//! A basis change `g` acts on a bracket by `(g.C)(a, b) = g·C(g⁻¹a, g⁻¹b)`,
//! on the symmetric part by the determinant-twisted congruence
//! `g.A = det(g)⁻¹ · g A gᵀ`, and on the trace covector by `g.ν = ν·g⁻¹`.
//! These three transforms commute with the decomposition, which the test
//! suite checks on random data.

use crate::tensor::{Bracket, Covector, GroupElement, SymForm, PAIRS};

/// `(g.C)(a, b) = g·C(g⁻¹a, g⁻¹b)` evaluated on all basis pairs.
pub fn act_bracket(g: &GroupElement, c: &Bracket) -> Bracket {
    let inv = g.inverse_matrix();
    let cols: [_; 3] = std::array::from_fn(|k| inv.col(k));
    let values: Vec<_> = PAIRS
        .iter()
        .map(|&(i, j)| g.matrix().vec_mul(&c.eval(&cols[i], &cols[j])))
        .collect();
    let [v12, v13, v23]: [_; 3] = values.try_into().unwrap();
    Bracket::from_values(v12, v13, v23)
}

/// Twisted congruence `g.A = det(g)⁻¹ · g A gᵀ`.
pub fn act_sym(g: &GroupElement, a: &SymForm) -> SymForm {
    let m = g
        .matrix()
        .mul(a.matrix())
        .mul(&g.matrix().transpose())
        .scale(&g.det().inv());
    SymForm::from_matrix_unchecked(m)
}

/// Dual action `g.ν = ν·g⁻¹`.
pub fn act_covector(g: &GroupElement, nu: &Covector) -> Covector {
    g.inverse_matrix().cov_mul(nu)
}
