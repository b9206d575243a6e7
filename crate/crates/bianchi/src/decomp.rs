//! Splitting a bracket into a symmetric form and a trace covector.
//!
//! Four equivariant maps connect brackets with simpler tensors:
//!
//! * `trace_map : Λ²V*⊗V → V*` — contraction `(tr C)_i = Σ_k C_{ki}^k`;
//! * `j_embed : V* → Λ²V*⊗V` — `j(α)(a,b) = α(a)·b − α(b)·a`;
//! * `p_project : Λ²V*⊗V → S²V` — symmetrized contraction against the
//!   basis volume form;
//! * `tr_embed : S²V → Λ²V*⊗V` — `Tr(A)_{ij}^l = Σ_k ε_{ijk} a^{kl}`.
//!
//! They satisfy `tr∘j = -2·id`, `p∘j = 0`, `tr∘Tr = 0`, `p∘Tr = 2·id`, and
//! the reconstruction `½·Tr∘p − ½·j∘tr = id`, so every bracket splits
//! uniquely as `C = Tr(M) + j(ν)` with `M = ½·p(C)` and `ν = -½·tr(C)`.
//! The Jacobi obstruction collapses accordingly: `J_C = 2·M(ν, ·)`, making
//! the Jacobi identity a rank-one linear condition on the pair `(M, ν)`.

use crate::scalar::Scalar;
use crate::tensor::{Bracket, Covector, JacobiTensor, SymForm, Vector};

/// The pair a bracket decomposes into: `C = Tr(m) + j(nu)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub m: SymForm,
    pub nu: Covector,
}

/// Contraction `(tr C)_i = Σ_k C_{ki}^k`.
pub fn trace_map(c: &Bracket) -> Covector {
    let sc = |i, j, k| c.structure_constant(i, j, k);
    Covector([
        &(-&sc(0, 1, 1)) - &sc(0, 2, 2),
        &sc(0, 1, 0) - &sc(1, 2, 2),
        &sc(0, 2, 0) + &sc(1, 2, 1),
    ])
}

/// `j(α)(a, b) = α(a)·b − α(b)·a`.
pub fn j_embed(alpha: &Covector) -> Bracket {
    let a = &alpha.0;
    Bracket::from_values(
        Vector([-&a[1], a[0].clone(), Scalar::zero()]),
        Vector([-&a[2], Scalar::zero(), a[0].clone()]),
        Vector([Scalar::zero(), -&a[2], a[1].clone()]),
    )
}

/// Symmetric part of a bracket: `p(C)^{kl} = Σ_{ij} ε^{kij} C_{ij}^l`
/// symmetrized in `(k, l)`. Kills the image of `j` and inverts `tr_embed`
/// up to the factor 2.
pub fn p_project(c: &Bracket) -> SymForm {
    let sc = |i, j, k| c.structure_constant(i, j, k);
    let two = Scalar::from_int(2);
    SymForm::from_upper([
        &two * &sc(1, 2, 0),                 // p^{11}
        &sc(1, 2, 1) - &sc(0, 2, 0),         // p^{12}
        &sc(0, 1, 0) + &sc(1, 2, 2),         // p^{13}
        &(-&two) * &sc(0, 2, 1),             // p^{22}
        &sc(0, 1, 1) - &sc(0, 2, 2),         // p^{23}
        &two * &sc(0, 1, 2),                 // p^{33}
    ])
}

/// `Tr(A)_{ij}^l = Σ_k ε_{ijk} a^{kl}`: rows of `A` become the values on the
/// cyclically matching basis pairs.
pub fn tr_embed(a: &SymForm) -> Bracket {
    let row = |k: usize| Vector(a.matrix().row(k));
    Bracket::from_values(row(2), row(1).neg(), row(0))
}

/// Splits `C = Tr(m) + j(nu)` with `m = ½·p(C)`, `nu = -½·tr(C)`.
pub fn decompose(c: &Bracket) -> Decomposition {
    let half = Scalar::ratio(1, 2);
    let p = p_project(c);
    let m = SymForm::from_matrix_unchecked(p.matrix().scale(&half));
    let tr = trace_map(c);
    let nu = tr.scale(&(-&half));
    Decomposition { m, nu }
}

/// Inverse of [`decompose`]: `Tr(m) + j(nu)`.
pub fn compose(m: &SymForm, nu: &Covector) -> Bracket {
    tr_embed(m).add(&j_embed(nu))
}

/// Jacobi obstruction by the direct route: the cyclic sum
/// `C(C(e1,e2), e3) + C(C(e2,e3), e1) + C(C(e3,e1), e2)`.
pub fn jacobian_tensor(c: &Bracket) -> JacobiTensor {
    let e: [_; 3] = std::array::from_fn(Vector::basis);
    let mut sum = Vector::zero();
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        sum = sum.add(&c.eval(&c.eval(&e[i], &e[j]), &e[k]));
    }
    JacobiTensor(sum)
}

/// Jacobi obstruction computed from a decomposition: `J = 2·m(nu, ·)`.
/// Independent of [`jacobian_tensor`]; the two routes must agree.
pub fn jacobian_via_theorem(m: &SymForm, nu: &Covector) -> JacobiTensor {
    JacobiTensor(m.contract(nu).scale(&Scalar::from_int(2)))
}

/// Whether the bracket satisfies the Jacobi identity. Decides via the
/// decomposition route and debug-asserts agreement with the cyclic sum.
pub fn is_jacobi(c: &Bracket) -> bool {
    let dec = decompose(c);
    let fast = jacobian_via_theorem(&dec.m, &dec.nu);
    debug_assert_eq!(fast, jacobian_tensor(c));
    fast.is_zero()
}
