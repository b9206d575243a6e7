//! Canonical forms and isomorphism witnesses.
//!
//! [`canonicalize`] drives a bracket onto the model representative of its
//! type by an explicit basis change, built in stages: congruence
//! diagonalization of the symmetric part, sign normalization, reordering,
//! diagonal rescaling, and (class B) alignment of the trace covector.
//!
//! Every stage is exact rational/Gaussian-rational arithmetic except one:
//! the final diagonal rescale for class A types of rank ≥ 2 may need square
//! roots that do not exist in the field. Those scales — and only those — are
//! approximated by dyadic rationals with [`SQRT_FRACTION_BITS`] fractional
//! bits. The returned matrix is still an exact rational matrix, and its
//! residual is computed in exact arithmetic before being reported as a
//! float. Class B scales are always exact: for the `VI_h`/`VII_h` families
//! the constraint `adj(M) = c·ννᵀ` forces the square roots to cancel.

use num::rational::BigRational;

use crate::action::{act_bracket, act_covector, act_sym};
use crate::classify::{classify, representative, BianchiType};
use crate::decomp::decompose;
use crate::error::Result;
use crate::scalar::{FieldMode, Scalar, SQRT_FRACTION_BITS};
use crate::tensor::{Bracket, Covector, GroupElement, Matrix3, SymForm};

/// Default acceptance bound for witness residuals. Approximate witnesses
/// carry ~192-bit scales, so genuine witnesses sit far below this.
pub const DEFAULT_WITNESS_TOLERANCE: f64 = 1e-9;

/// An isomorphism witness: a basis change `g` with `g.C1 = C2` (or, from
/// [`canonicalize`], `g.C = representative`).
#[derive(Clone, Debug)]
pub struct WitnessResult {
    /// The witness matrix; exact rational/Gaussian entries in all cases.
    pub g: Matrix3,
    /// Max-norm of `g.C1 − C2`, evaluated in exact arithmetic and rounded
    /// to a float for reporting. Zero when the witness is exact.
    pub residual: f64,
    /// Set when no approximate square root entered the construction; then
    /// `g` itself maps `C1` to `C2` exactly.
    pub exact_g: Option<Matrix3>,
}

impl WitnessResult {
    pub fn is_exact(&self) -> bool {
        self.exact_g.is_some()
    }
}

fn rat_to_f64(r: &BigRational) -> f64 {
    Scalar::from_rational(r.clone()).to_f64().0
}

/// Exact congruence diagonalization: returns `(g, D)` with `g A gᵀ = D`
/// diagonal (no determinant twist) and `g` invertible.
///
/// Pivoting is deterministic: the largest-magnitude available diagonal entry
/// (squared modulus, ties to the smallest index) is used; when the trailing
/// diagonal vanishes but an off-diagonal entry survives, the hyperbolic move
/// `e_i ← e_i + e_j` manufactures a pivot. Afterwards the diagonal is
/// reordered — positives, negatives, zeros for real input; nonzeros before
/// zeros otherwise.
pub fn congruence_diagonalize(a: &SymForm) -> (Matrix3, SymForm) {
    let mut m = a.matrix().clone();
    let mut g = Matrix3::identity();
    let real = a.is_real();

    // row_i += f·row_j on g; the congruent m gets the matching column op too.
    fn add_row(m: &mut Matrix3, i: usize, j: usize, f: &Scalar) {
        for col in 0..3 {
            let v = m.get(i, col) + &(f * m.get(j, col));
            m.set(i, col, v);
        }
    }
    fn add_col(m: &mut Matrix3, i: usize, j: usize, f: &Scalar) {
        for row in 0..3 {
            let v = m.get(row, i) + &(f * m.get(row, j));
            m.set(row, i, v);
        }
    }
    fn swap_sym(m: &mut Matrix3, i: usize, j: usize) {
        for col in 0..3 {
            let (a, b) = (m.get(i, col).clone(), m.get(j, col).clone());
            m.set(i, col, b);
            m.set(j, col, a);
        }
        for row in 0..3 {
            let (a, b) = (m.get(row, i).clone(), m.get(row, j).clone());
            m.set(row, i, b);
            m.set(row, j, a);
        }
    }
    fn swap_rows(m: &mut Matrix3, i: usize, j: usize) {
        for col in 0..3 {
            let (a, b) = (m.get(i, col).clone(), m.get(j, col).clone());
            m.set(i, col, b);
            m.set(j, col, a);
        }
    }

    for k in 0..3 {
        // Best diagonal pivot at or below k.
        let pick = |m: &Matrix3| -> Option<usize> {
            let mut best: Option<(usize, BigRational)> = None;
            for i in k..3 {
                let e = m.get(i, i);
                if e.is_zero() {
                    continue;
                }
                let mag = e.norm_sq();
                if best.as_ref().map_or(true, |(_, b)| mag > *b) {
                    best = Some((i, mag));
                }
            }
            best.map(|(i, _)| i)
        };
        let mut pivot = pick(&m);
        if pivot.is_none() {
            // Trailing diagonal is zero; look for an off-diagonal entry.
            let hyp = (k..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .find(|&(i, j)| !m.get(i, j).is_zero());
            let Some((i, j)) = hyp else {
                break; // trailing block is zero: done
            };
            // e_i ← e_i + e_j turns the (i,j) entry into a diagonal pivot.
            let one = Scalar::one();
            add_row(&mut m, i, j, &one);
            add_col(&mut m, i, j, &one);
            add_row(&mut g, i, j, &one);
            pivot = pick(&m);
        }
        let p = pivot.expect("pivot exists after hyperbolic step");
        if p != k {
            swap_sym(&mut m, k, p);
            swap_rows(&mut g, k, p);
        }
        let d = m.get(k, k).clone();
        for i in k + 1..3 {
            if m.get(i, k).is_zero() {
                continue;
            }
            let f = -&(&m.get(i, k).clone() / &d);
            add_row(&mut m, i, k, &f);
            add_col(&mut m, i, k, &f);
            add_row(&mut g, i, k, &f);
        }
    }

    // Deterministic ordering of the diagonal.
    let category = |s: &Scalar| -> u8 {
        if real {
            match s.sign_real() {
                1 => 0,
                -1 => 1,
                _ => 2,
            }
        } else if s.is_zero() {
            1
        } else {
            0
        }
    };
    let mut perm = [0usize, 1, 2];
    perm.sort_by_key(|&i| (category(m.get(i, i)), i));
    if perm != [0, 1, 2] {
        let p = Matrix3::permutation(perm);
        m = p.mul(&m).mul(&p.transpose());
        g = p.mul(&g);
    }

    debug_assert!({
        let d = g.mul(a.matrix()).mul(&g.transpose());
        (0..3).all(|i| (0..3).all(|j| i == j || d.get(i, j).is_zero())) && m == d
    });
    (g, SymForm::from_matrix_unchecked(m))
}

/// Running state of the canonicalization pipeline: the decomposition of the
/// moved bracket plus the accumulated exact basis change.
struct State {
    a: SymForm,
    nu: Covector,
    g: GroupElement,
}

impl State {
    fn apply(&mut self, step: Matrix3) {
        let step = GroupElement::new(step).expect("pipeline steps are invertible");
        self.a = act_sym(&step, &self.a);
        self.nu = act_covector(&step, &self.nu);
        self.g = step.compose(&self.g);
    }

    fn diag_entry(&self, k: usize) -> Scalar {
        self.a.entry(k, k).clone()
    }
}

fn diag_matrix(s: [Scalar; 3]) -> Matrix3 {
    Matrix3::diag(s)
}

/// Square root in the working field, or `None` when it would be irrational.
fn field_sqrt(x: &Scalar, mode: FieldMode) -> Option<Scalar> {
    match mode {
        FieldMode::Real => x.sqrt_exact_real(),
        FieldMode::Complex => x.sqrt_exact(),
    }
}

/// Drives `c` onto the model representative of its type. Returns the type
/// together with a witness `w` such that `w.g . c = representative`, exact
/// whenever the required square roots exist in the field (always, for class
/// B and for class A of rank ≤ 1).
pub fn canonicalize(c: &Bracket, mode: FieldMode) -> Result<(BianchiType, WitnessResult)> {
    let report = classify(c, mode)?;
    let ty = report.ty;
    let dec = decompose(c);
    let mut st = State { a: dec.m, nu: dec.nu, g: GroupElement::identity() };

    // Stage 1: diagonalize the symmetric part (the determinant twist keeps
    // it diagonal, merely rescaled).
    let (g0, _) = congruence_diagonalize(&st.a);
    st.apply(g0);

    // Stage 2 (real data): a global sign flip has determinant −1, so its
    // twisted action negates every diagonal entry; use it when negatives
    // outnumber positives.
    if mode == FieldMode::Real {
        let signs: Vec<i8> = (0..3).map(|k| st.diag_entry(k).sign_real()).collect();
        let pos = signs.iter().filter(|&&s| s > 0).count();
        let neg = signs.iter().filter(|&&s| s < 0).count();
        if neg > pos {
            st.apply(Matrix3::identity().neg());
        }
    }

    // Stage 3: reorder the diagonal (positives, negatives, zeros — nonzeros
    // first in complex mode) by a signed permutation of determinant +1, so
    // the twist cannot disturb the signs being arranged.
    {
        let category = |s: &Scalar| -> u8 {
            match mode {
                FieldMode::Real => match s.sign_real() {
                    1 => 0,
                    -1 => 1,
                    _ => 2,
                },
                FieldMode::Complex => u8::from(s.is_zero()),
            }
        };
        let mut perm = [0usize, 1, 2];
        perm.sort_by_key(|&i| (category(&st.diag_entry(i)), i));
        if perm != [0, 1, 2] {
            let mut p = Matrix3::permutation(perm);
            if p.det().sign_real() < 0 {
                for col in 0..3 {
                    let v = -p.get(0, col);
                    p.set(0, col, v);
                }
            }
            st.apply(p);
        }
    }

    // Stage 4: type-specific finish. Only the class A scales of rank ≥ 2 can
    // leave the field; they are collected as squared factors and resolved
    // exactly when possible, dyadically otherwise.
    let mut approx_scale: Option<[Scalar; 3]> = None;
    match &ty {
        BianchiType::I => {}

        BianchiType::II => {
            let d1 = st.diag_entry(0);
            st.apply(diag_matrix([Scalar::one(), d1, Scalar::one()]));
        }

        BianchiType::V => {
            // a = 0; send ν to λ³ by a basis whose third row is ν.
            let k = (0..3).find(|&k| !st.nu.0[k].is_zero()).expect("type V has nonzero trace");
            let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
            let mut rows = Matrix3::zero();
            rows.set(0, others[0], Scalar::one());
            rows.set(1, others[1], Scalar::one());
            for col in 0..3 {
                rows.set(2, col, st.nu.0[col].clone());
            }
            st.apply(rows);
        }

        BianchiType::IV => {
            // Normalize a to diag(1,0,0), then align ν inside the stabilizer
            // of a: block matrices diag(det(g₂), g₂) preserve diag(1,0,0)
            // under the twisted action, and the choice below sends ν ↦ λ³.
            let d1 = st.diag_entry(0);
            st.apply(diag_matrix([Scalar::one(), d1, Scalar::one()]));
            let (n2, n3) = (st.nu.0[1].clone(), st.nu.0[2].clone());
            let (a, b) = if !n3.is_zero() {
                (Scalar::one(), Scalar::zero())
            } else {
                (Scalar::zero(), Scalar::one())
            };
            let det2 = &(&a * &n3) - &(&b * &n2);
            let mut step = Matrix3::zero();
            step.set(0, 0, det2);
            step.set(1, 1, a);
            step.set(1, 2, b);
            step.set(2, 1, n2);
            step.set(2, 2, n3);
            st.apply(step);
        }

        BianchiType::VIh(h2) | BianchiType::VIIh(h2) => {
            // Rank-2 class B: the scale is exact in every case. With the
            // state at a = diag(d1, d2, 0), ν = ν₃λ³, the adjugate relation
            // gives d1·d2 = ±ν₃²/h², which turns the square roots in the
            // scale into exact rationals.
            let d1 = st.diag_entry(0);
            let n3 = st.nu.0[2].clone();
            debug_assert!(st.nu.0[0].is_zero() && st.nu.0[1].is_zero());
            let scale = match field_sqrt(h2, mode) {
                Some(root) => {
                    // Model (diag(1, ∓1, 0), h·λ³) with h = −root for VI_h,
                    // +root for VII_h.
                    let h = if matches!(&ty, BianchiType::VIh(_)) {
                        -&root
                    } else {
                        root
                    };
                    [
                        &n3 / &(&h * &d1),
                        Scalar::one(),
                        &n3 / &h,
                    ]
                }
                None => {
                    // Model (diag(h², ∓1, 0), h²·λ³).
                    [&n3 / &d1, Scalar::one(), &n3 / h2]
                }
            };
            st.apply(diag_matrix(scale));
        }

        BianchiType::VI0 | BianchiType::VII0 => {
            // Rank-2 class A: want diag(±1) entries. s₂² = d1/|d2| may be
            // irrational; s₃ = s₂·|d2| rides along exactly.
            let (d1, d2) = (st.diag_entry(0), st.diag_entry(1));
            let d2_mag = match mode {
                FieldMode::Real => {
                    if d2.sign_real() < 0 {
                        -&d2
                    } else {
                        d2.clone()
                    }
                }
                FieldMode::Complex => d2.clone(),
            };
            let r2 = &d1 / &d2_mag;
            match field_sqrt(&r2, mode) {
                Some(s2) => {
                    let s3 = &s2 * &d2_mag;
                    st.apply(diag_matrix([Scalar::one(), s2, s3]));
                }
                None => {
                    let s2 = r2.sqrt_dyadic(SQRT_FRACTION_BITS);
                    let s3 = &s2 * &d2_mag;
                    approx_scale = Some([Scalar::one(), s2, s3]);
                }
            }
        }

        BianchiType::VIII | BianchiType::IX => {
            // Rank 3: s_i² is the product of the other two diagonal
            // magnitudes. Over the Gaussians "magnitude" is the entry itself
            // and the branch choices must multiply back to det-consistency,
            // fixed by flipping s₁ if needed.
            let d: [Scalar; 3] = std::array::from_fn(|k| st.diag_entry(k));
            let mag = |x: &Scalar| -> Scalar {
                match mode {
                    FieldMode::Real => {
                        if x.sign_real() < 0 {
                            -x
                        } else {
                            x.clone()
                        }
                    }
                    FieldMode::Complex => x.clone(),
                }
            };
            let r: [Scalar; 3] =
                std::array::from_fn(|i| &mag(&d[(i + 1) % 3]) * &mag(&d[(i + 2) % 3]));
            let exact: Option<Vec<Scalar>> =
                r.iter().map(|x| field_sqrt(x, mode)).collect();
            match exact {
                Some(s) => {
                    let mut s: [Scalar; 3] = s.try_into().unwrap();
                    fix_product_branch(&mut s, &d, mode);
                    st.apply(diag_matrix(s));
                }
                None => {
                    let mut s: [Scalar; 3] =
                        std::array::from_fn(|i| r[i].sqrt_dyadic(SQRT_FRACTION_BITS));
                    fix_product_branch(&mut s, &d, mode);
                    approx_scale = Some(s);
                }
            }
        }
    }

    let rep = representative(&ty, mode)?;
    let result = match approx_scale {
        None => {
            let g = st.g.matrix().clone();
            debug_assert_eq!(act_bracket(&st.g, c), rep);
            WitnessResult { exact_g: Some(g.clone()), g, residual: 0.0 }
        }
        Some(s) => {
            let g = Matrix3::diag(s).mul(st.g.matrix());
            let ge = GroupElement::new(g.clone()).expect("dyadic scales are nonzero");
            let err_sq = act_bracket(&ge, c).max_diff_norm_sq(&rep);
            WitnessResult { g, residual: rat_to_f64(&err_sq).sqrt(), exact_g: None }
        }
    };
    Ok((ty, result))
}

/// Branch coherence for the rank-3 scale over the Gaussians: the three roots
/// must multiply to `d1·d2·d3`; each is only determined up to sign, so flip
/// `s₁` when the product lands on the wrong sheet. Real positive scales are
/// already coherent.
fn fix_product_branch(s: &mut [Scalar; 3], d: &[Scalar; 3], mode: FieldMode) {
    if mode == FieldMode::Real {
        return;
    }
    let prod = &(&s[0] * &s[1]) * &s[2];
    let target = &(&d[0] * &d[1]) * &d[2];
    // Exactly ±target for exact roots; within 2^-180 of one of them for
    // dyadic roots, so the nearer one is the truth.
    let off = (&prod - &target).norm_sq();
    let flipped = (&prod + &target).norm_sq();
    if off > flipped {
        s[0] = -&s[0];
    }
}

/// Exact isomorphism decision: equality of all invariant report fields.
/// No floating-point quantity participates.
pub fn isomorphic(c1: &Bracket, c2: &Bracket, mode: FieldMode) -> Result<bool> {
    let r1 = classify(c1, mode)?;
    let r2 = classify(c2, mode)?;
    Ok(r1.invariants_match(&r2))
}

/// Constructs a basis change with `g.C1 = C2`, or `None` when the two
/// brackets are not isomorphic. Both sides are canonicalized; the witness is
/// `g₂⁻¹ ∘ g₁` and is exact whenever both canonicalizations were.
pub fn witness(c1: &Bracket, c2: &Bracket, mode: FieldMode) -> Result<Option<WitnessResult>> {
    if !isomorphic(c1, c2, mode)? {
        return Ok(None);
    }
    let (_, w1) = canonicalize(c1, mode)?;
    let (_, w2) = canonicalize(c2, mode)?;
    let g2_inv = w2.g.inverse().expect("witness matrices are invertible");
    let g = g2_inv.mul(&w1.g);
    let ge = GroupElement::new(g.clone()).expect("witness matrices are invertible");
    let err_sq = act_bracket(&ge, c1).max_diff_norm_sq(c2);
    let exact = w1.exact_g.is_some() && w2.exact_g.is_some();
    debug_assert!(!exact || num::Zero::is_zero(&err_sq));
    Ok(Some(WitnessResult {
        exact_g: exact.then(|| g.clone()),
        residual: rat_to_f64(&err_sq).sqrt(),
        g,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::compose;
    use crate::scalar::Scalar;

    fn diag_form(d: [i64; 3]) -> SymForm {
        SymForm::from_diag(std::array::from_fn(|k| Scalar::from_int(d[k])))
    }

    fn g_int(rows: [[i64; 3]; 3]) -> GroupElement {
        GroupElement::new(Matrix3::from_fn(|i, j| Scalar::from_int(rows[i][j]))).unwrap()
    }

    #[test]
    fn diagonalization_properties() {
        let samples = [
            SymForm::from_upper([
                Scalar::zero(),
                Scalar::one(),
                Scalar::zero(),
                Scalar::zero(),
                Scalar::zero(),
                Scalar::zero(),
            ]), // hyperbolic plane: needs the e1 ← e1+e2 move
            SymForm::from_upper([
                Scalar::from_int(2),
                Scalar::from_int(1),
                Scalar::from_int(-1),
                Scalar::ratio(1, 2),
                Scalar::from_int(3),
                Scalar::from_int(0),
            ]),
            diag_form([0, 0, -5]),
            SymForm::zero(),
        ];
        for a in &samples {
            let (g, d) = congruence_diagonalize(a);
            assert!(!g.det().is_zero());
            let gagt = g.mul(a.matrix()).mul(&g.transpose());
            assert_eq!(&gagt, d.matrix());
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        assert!(d.entry(i, j).is_zero());
                    }
                }
            }
            // Ordering: positives, then negatives, then zeros.
            let cat: Vec<i8> = (0..3)
                .map(|k| match d.entry(k, k).sign_real() {
                    1 => 0,
                    -1 => 1,
                    _ => 2,
                })
                .collect();
            let mut sorted = cat.clone();
            sorted.sort();
            assert_eq!(cat, sorted);
        }
    }

    #[test]
    fn diagonalization_signature_stability() {
        // The hyperbolic plane has signature (1,1).
        let hyp = SymForm::from_upper([
            Scalar::zero(),
            Scalar::one(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
        ]);
        let (_, d) = congruence_diagonalize(&hyp);
        let signs: Vec<i8> = (0..3).map(|k| d.entry(k, k).sign_real()).collect();
        assert_eq!(signs, vec![1, -1, 0]);
    }

    #[test]
    fn canonicalize_exact_for_class_b_and_low_rank() {
        let l3 = Covector::basis(2);
        // VI_h with non-square h² = 2: M = diag(2,-1,0), ν = 2λ³.
        let m = SymForm::from_diag([Scalar::from_int(2), Scalar::from_int(-1), Scalar::zero()]);
        let c = compose(&m, &l3.scale(&Scalar::from_int(2)));
        let (ty, w) = canonicalize(&c, FieldMode::Real).unwrap();
        assert_eq!(ty, BianchiType::VIh(Scalar::from_int(2)));
        assert!(w.is_exact(), "class B witnesses must be exact");
        assert_eq!(w.residual, 0.0);
        // And an awkward starting basis.
        let g = g_int([[3, 1, 0], [2, 1, 0], [5, 0, 1]]);
        let moved = act_bracket(&g, &c);
        let (ty2, w2) = canonicalize(&moved, FieldMode::Real).unwrap();
        assert_eq!(ty2, ty);
        assert!(w2.is_exact());
        // Low-rank class A: II from a messy presentation.
        let c = compose(&diag_form([1, 0, 0]), &Covector::zero());
        let moved = act_bracket(&g, &c);
        let (ty3, w3) = canonicalize(&moved, FieldMode::Real).unwrap();
        assert_eq!(ty3, BianchiType::II);
        assert!(w3.is_exact());
    }

    #[test]
    fn canonicalize_square_scales_stay_exact() {
        // VI_0 with diag(4,-9,0): the scale ratio 4/9 is a perfect square.
        let c = compose(&diag_form([4, -9, 0]), &Covector::zero());
        let (ty, w) = canonicalize(&c, FieldMode::Real).unwrap();
        assert_eq!(ty, BianchiType::VI0);
        assert!(w.is_exact());
    }

    #[test]
    fn canonicalize_irrational_scales_certify_tiny_residuals() {
        // IX-like data diag(2,3,5): no product of two entries is square.
        let c = compose(&diag_form([2, 3, 5]), &Covector::zero());
        let (ty, w) = canonicalize(&c, FieldMode::Real).unwrap();
        assert_eq!(ty, BianchiType::IX);
        assert!(!w.is_exact());
        assert!(w.residual > 0.0 && w.residual < 1e-40, "residual {}", w.residual);
        // The matrix is still exact data: re-checking the residual in exact
        // arithmetic reproduces the reported bound.
        let ge = GroupElement::new(w.g.clone()).unwrap();
        let rep = representative(&ty, FieldMode::Real).unwrap();
        let err = act_bracket(&ge, &c).max_diff_norm_sq(&rep);
        assert!(rat_to_f64(&err).sqrt() <= w.residual);
    }

    #[test]
    fn witness_round_trips() {
        let l3 = Covector::basis(2);
        let c1 = compose(&diag_form([1, -1, 0]), &l3.scale(&Scalar::from_int(-2)));
        let g = g_int([[1, 2, 1], [0, 1, 4], [0, 0, 1]]);
        let c2 = act_bracket(&g, &c1);
        let w = witness(&c1, &c2, FieldMode::Real).unwrap().unwrap();
        assert!(w.is_exact());
        let ge = GroupElement::new(w.g.clone()).unwrap();
        assert_eq!(act_bracket(&ge, &c1), c2);
    }

    #[test]
    fn witness_absent_across_types() {
        let c1 = compose(&diag_form([1, 1, 0]), &Covector::zero()); // VII_0
        let c2 = compose(&diag_form([1, -1, 0]), &Covector::zero()); // VI_0
        assert!(witness(&c1, &c2, FieldMode::Real).unwrap().is_none());
        assert!(!isomorphic(&c1, &c2, FieldMode::Real).unwrap());
        // Same family, different parameter: not isomorphic.
        let l3 = Covector::basis(2);
        let b1 = compose(&diag_form([1, 1, 0]), &l3.scale(&Scalar::from_int(1)));
        let b2 = compose(&diag_form([1, 1, 0]), &l3.scale(&Scalar::from_int(3)));
        assert!(witness(&b1, &b2, FieldMode::Real).unwrap().is_none());
        // But over the Gaussians VI_0 and VII_0 merge.
        assert!(isomorphic(&c1, &c2, FieldMode::Complex).unwrap());
        let w = witness(&c1, &c2, FieldMode::Complex).unwrap().unwrap();
        let ge = GroupElement::new(w.g.clone()).unwrap();
        if w.is_exact() {
            assert_eq!(act_bracket(&ge, &c1), c2);
        } else {
            assert!(w.residual < 1e-40);
        }
    }

    #[test]
    fn complex_rank3_branch_coherence() {
        // diag(i, 1, 1) over the Gaussians: product of roots must match the
        // determinant sheet.
        let m = SymForm::from_diag([Scalar::i(), Scalar::one(), Scalar::one()]);
        let c = compose(&m, &Covector::zero());
        let (ty, w) = canonicalize(&c, FieldMode::Complex).unwrap();
        assert_eq!(ty, BianchiType::IX);
        let ge = GroupElement::new(w.g.clone()).unwrap();
        let rep = representative(&ty, FieldMode::Complex).unwrap();
        if w.is_exact() {
            assert_eq!(act_bracket(&ge, &c), rep);
        } else {
            let err = act_bracket(&ge, &c).max_diff_norm_sq(&rep);
            assert!(rat_to_f64(&err).sqrt() < 1e-40);
        }
    }
}
