//! Deciding the isomorphism type of a 3-dimensional Lie algebra.
//!
//! A bracket decomposes as `C = Tr(M) + j(ν)`. Under a basis change the pair
//! `(M, ν)` transforms by the determinant-twisted congruence and the dual
//! action, so the Bianchi type is read off from invariants of that pair:
//!
//! * `ν = 0` (class A, unimodular): the type is determined by the rank of
//!   `M` and, over the rationals, the absolute signature —
//!   `(0,0) ↦ I`, `(1,1) ↦ II`, `(2,0) ↦ VI_0`, `(2,2) ↦ VII_0`,
//!   `(3,1) ↦ VIII`, `(3,3) ↦ IX`.
//! * `ν ≠ 0` (class B): rank 0 is `V`, rank 1 is `IV`; rank 2 splits into
//!   the families `VI_h` / `VII_h`, whose parameter is pinned by the
//!   adjugate invariant `c` from `adj(M) = c·ννᵀ` via `h² = ∓1/c`. Rank 3
//!   cannot satisfy the Jacobi identity with `ν ≠ 0`.
//!
//! Over the Gaussian rationals signs collapse: class A leaves ranks
//! `0,1,2,3 ↦ I, II, VII_0, IX`, and the whole rank-2 class B merges into
//! `VII_h` with `h² = 1/c`.

use std::fmt;

use crate::canon::congruence_diagonalize;
use crate::decomp::{decompose, jacobian_tensor, jacobian_via_theorem, trace_map, Decomposition};
use crate::error::{Error, Result};
use crate::orbits::{aut_info, orbit_dimension, AutGroupInfo};
use crate::scalar::{FieldMode, Scalar};
use crate::tensor::{Bracket, Covector, Matrix3, SymForm};

/// Bianchi type labels, without family parameters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum TypeLabel {
    I,
    II,
    IV,
    V,
    VI0,
    VIH,
    VII0,
    VIIH,
    VIII,
    IX,
}

impl TypeLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            TypeLabel::I => "I",
            TypeLabel::II => "II",
            TypeLabel::IV => "IV",
            TypeLabel::V => "V",
            TypeLabel::VI0 => "VI_0",
            TypeLabel::VIH => "VI_h",
            TypeLabel::VII0 => "VII_0",
            TypeLabel::VIIH => "VII_h",
            TypeLabel::VIII => "VIII",
            TypeLabel::IX => "IX",
        }
    }

    /// All labels that exist over the given field, in display order.
    pub fn all(mode: FieldMode) -> Vec<TypeLabel> {
        use TypeLabel::*;
        match mode {
            FieldMode::Real => vec![I, II, IV, V, VI0, VIH, VII0, VIIH, VIII, IX],
            FieldMode::Complex => vec![I, II, IV, V, VII0, VIIH, IX],
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Unimodularity class: A (`ν = 0`) or B (`ν ≠ 0`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BianchiClass {
    A,
    B,
}

impl BianchiClass {
    pub fn as_str(self) -> &'static str {
        match self {
            BianchiClass::A => "A",
            BianchiClass::B => "B",
        }
    }
}

/// Structural adjectives attached to a type.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StructureLabel {
    Abelian,
    Nilpotent,
    Solvable,
    Simple,
}

impl StructureLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureLabel::Abelian => "abelian",
            StructureLabel::Nilpotent => "nilpotent",
            StructureLabel::Solvable => "solvable",
            StructureLabel::Simple => "simple",
        }
    }
}

/// A Bianchi isomorphism type. The continuous families carry their exact
/// parameter `h²` (the square is the invariant: `h` and `-h` give isomorphic
/// algebras, and over the rationals `h` itself need not exist exactly).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BianchiType {
    I,
    II,
    IV,
    V,
    VI0,
    VIh(Scalar),
    VII0,
    VIIh(Scalar),
    VIII,
    IX,
}

impl BianchiType {
    pub fn label(&self) -> TypeLabel {
        match self {
            BianchiType::I => TypeLabel::I,
            BianchiType::II => TypeLabel::II,
            BianchiType::IV => TypeLabel::IV,
            BianchiType::V => TypeLabel::V,
            BianchiType::VI0 => TypeLabel::VI0,
            BianchiType::VIh(_) => TypeLabel::VIH,
            BianchiType::VII0 => TypeLabel::VII0,
            BianchiType::VIIh(_) => TypeLabel::VIIH,
            BianchiType::VIII => TypeLabel::VIII,
            BianchiType::IX => TypeLabel::IX,
        }
    }

    pub fn class(&self) -> BianchiClass {
        match self {
            BianchiType::IV | BianchiType::V | BianchiType::VIh(_) | BianchiType::VIIh(_) => {
                BianchiClass::B
            }
            _ => BianchiClass::A,
        }
    }

    /// Exact family parameter, for `VI_h` and `VII_h`.
    pub fn h_squared(&self) -> Option<&Scalar> {
        match self {
            BianchiType::VIh(h2) | BianchiType::VIIh(h2) => Some(h2),
            _ => None,
        }
    }

    /// `VI_h` at `h² = 1` is traditionally listed as type III.
    pub fn is_iii(&self) -> bool {
        matches!(self, BianchiType::VIh(h2) if h2.is_one())
    }

    /// The finest structure descriptor: abelian ⊂ nilpotent ⊂ solvable, or
    /// simple for the two semisimple types.
    pub fn structure_labels(&self) -> Vec<StructureLabel> {
        use StructureLabel::*;
        match self {
            BianchiType::I => vec![Abelian],
            BianchiType::II => vec![Nilpotent],
            BianchiType::VIII | BianchiType::IX => vec![Simple],
            _ => vec![Solvable],
        }
    }

    /// Resolves a user-facing label plus optional `h²` parameter. Accepts
    /// `III` as the alias for `VI_h` at `h² = 1`, and tolerates the
    /// underscore-free spellings `VI0`, `VIh`, `VII0`, `VIIh`.
    pub fn from_label(label: &str, h_squared: Option<Scalar>) -> Result<BianchiType> {
        let needs_no_param = |ty: BianchiType| {
            if h_squared.is_some() {
                Err(Error::Precondition(format!(
                    "type {} does not take an h^2 parameter",
                    label
                )))
            } else {
                Ok(ty)
            }
        };
        match label {
            "I" => needs_no_param(BianchiType::I),
            "II" => needs_no_param(BianchiType::II),
            "III" => needs_no_param(BianchiType::VIh(Scalar::one())),
            "IV" => needs_no_param(BianchiType::IV),
            "V" => needs_no_param(BianchiType::V),
            "VI_0" | "VI0" => needs_no_param(BianchiType::VI0),
            "VII_0" | "VII0" => needs_no_param(BianchiType::VII0),
            "VIII" => needs_no_param(BianchiType::VIII),
            "IX" => needs_no_param(BianchiType::IX),
            "VI_h" | "VIh" => h_squared.map(BianchiType::VIh).ok_or_else(|| {
                Error::Precondition("family type VI_h needs an h^2 parameter".into())
            }),
            "VII_h" | "VIIh" => h_squared.map(BianchiType::VIIh).ok_or_else(|| {
                Error::Precondition("family type VII_h needs an h^2 parameter".into())
            }),
            other => Err(Error::Precondition(format!("unknown type label {other:?}"))),
        }
    }

    /// Checks the type exists over the given field and its parameter is in
    /// range (`h² > 0` over the rationals, `h² ≠ 0` over the Gaussians).
    pub fn check_mode(&self, mode: FieldMode) -> Result<()> {
        match (self, mode) {
            (BianchiType::VI0 | BianchiType::VIII, FieldMode::Complex) => Err(Error::TypeMode(
                format!("{} does not exist over the complex field", self.label()),
            )),
            (BianchiType::VIh(_), FieldMode::Complex) => Err(Error::TypeMode(
                "VI_h merges into VII_h over the complex field".into(),
            )),
            (BianchiType::VIh(h2), FieldMode::Real) => {
                if !h2.is_real() || h2.sign_real() <= 0 {
                    Err(Error::TypeMode(format!(
                        "VI_h needs a positive rational h^2, got {h2}"
                    )))
                } else {
                    Ok(())
                }
            }
            (BianchiType::VIIh(h2), FieldMode::Real) => {
                if !h2.is_real() || h2.sign_real() <= 0 {
                    Err(Error::TypeMode(format!(
                        "VII_h needs a positive rational h^2, got {h2}"
                    )))
                } else {
                    Ok(())
                }
            }
            (BianchiType::VIIh(h2), FieldMode::Complex) => {
                if h2.is_zero() {
                    Err(Error::TypeMode("VII_h needs h^2 != 0; use VII_0".into()))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Approximate `h` for the families (principal square root of `h²`,
    /// negated for `VI_h` where the representative uses `h < 0`).
    pub fn h_approx(&self) -> Option<(f64, f64)> {
        match self {
            BianchiType::VIh(h2) => {
                let (re, _) = h2.to_f64();
                Some((-re.sqrt(), 0.0))
            }
            BianchiType::VIIh(h2) => {
                let (re, im) = h2.to_f64();
                let root = num::complex::Complex::new(re, im).sqrt();
                Some((root.re, root.im))
            }
            _ => None,
        }
    }
}

impl fmt::Display for BianchiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.h_squared() {
            Some(h2) => write!(f, "{} (h^2 = {})", self.label(), h2),
            None => write!(f, "{}", self.label()),
        }
    }
}

/// Rank and, over the rationals, absolute signature of the symmetric part.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RankSig {
    pub rank: u8,
    /// `|positives − negatives|`; `None` over the Gaussian rationals, where
    /// signs are not invariant.
    pub abs_signature: Option<u8>,
}

/// Everything the classifier can say about one bracket.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub mode: FieldMode,
    pub ty: BianchiType,
    pub decomposition: Decomposition,
    pub rank_sig: RankSig,
    /// Adjugate invariant, present exactly for the rank-2 class B types.
    pub invariant_c: Option<Scalar>,
    pub h_approx: Option<(f64, f64)>,
    pub unimodular: bool,
    pub derived_dim: u8,
    pub labels: Vec<StructureLabel>,
    pub orbit_dim: u8,
    pub aut: AutGroupInfo,
}

impl ClassificationReport {
    /// Equality on every exact invariant field. Two brackets are isomorphic
    /// over the report's field exactly when their reports match here; no
    /// floating-point field participates.
    pub fn invariants_match(&self, other: &ClassificationReport) -> bool {
        self.mode == other.mode
            && self.ty == other.ty
            && self.rank_sig == other.rank_sig
            && self.invariant_c == other.invariant_c
            && self.unimodular == other.unimodular
            && self.derived_dim == other.derived_dim
            && self.labels == other.labels
            && self.orbit_dim == other.orbit_dim
    }
}

/// Rank and (real mode) absolute signature of a symmetric form, by exact
/// congruence diagonalization.
pub fn rank_signature(a: &SymForm, mode: FieldMode) -> Result<RankSig> {
    if mode == FieldMode::Real && !a.is_real() {
        return Err(Error::ModeMismatch(
            "symmetric part has gaussian entries; run in complex mode".into(),
        ));
    }
    let (_, d) = congruence_diagonalize(a);
    let mut pos = 0u8;
    let mut neg = 0u8;
    let mut rank = 0u8;
    for k in 0..3 {
        let e = d.entry(k, k);
        if e.is_zero() {
            continue;
        }
        rank += 1;
        if mode == FieldMode::Real {
            match e.sign_real() {
                1 => pos += 1,
                -1 => neg += 1,
                _ => unreachable!(),
            }
        }
    }
    debug_assert_eq!(rank, a.rank());
    Ok(RankSig {
        rank,
        abs_signature: match mode {
            FieldMode::Real => Some(pos.abs_diff(neg)),
            FieldMode::Complex => None,
        },
    })
}

/// The adjugate invariant of a rank-2 pair: the factor `c` in
/// `adj(M) = c·ννᵀ`. The twisted action sends `adj(M) ↦ g⁻ᵀ adj(M) g⁻¹` and
/// `ννᵀ` the same way, so `c` is constant on isomorphism classes.
///
/// Requires `ν ≠ 0`, `rank(M) = 2` and `Mν = 0` (the Jacobi identity for the
/// recomposed bracket); fails with the exact Jacobi obstruction otherwise.
pub fn invariant_c(a: &SymForm, nu: &Covector) -> Result<Scalar> {
    if nu.is_zero() {
        return Err(Error::Precondition(
            "adjugate invariant needs a nonzero trace covector".into(),
        ));
    }
    if a.rank() != 2 {
        return Err(Error::Precondition(format!(
            "adjugate invariant needs a rank-2 symmetric part, got rank {}",
            a.rank()
        )));
    }
    let j = jacobian_via_theorem(a, nu);
    if !j.is_zero() {
        let [x, y, z] = j.components().clone();
        return Err(Error::JacobiViolation(x, y, z));
    }
    let adj = a.adjugate();
    let k = (0..3).find(|&k| !nu.0[k].is_zero()).expect("nu nonzero");
    let c = adj.get(k, k) / &(&nu.0[k] * &nu.0[k]);
    debug_assert!({
        let model = Matrix3::from_fn(|i, j| &(&c * &nu.0[i]) * &nu.0[j]);
        model == adj
    });
    debug_assert!(!c.is_zero());
    Ok(c)
}

/// Dimension of the derived algebra `[g, g]`: the rank of the matrix whose
/// columns are `C(e1,e2)`, `C(e2,e3)`, `C(e3,e1)`.
pub fn derived_algebra_dim(c: &Bracket) -> u8 {
    let cols = [c.value(0, 1), c.value(1, 2), c.value(2, 0)];
    Matrix3::from_fn(|i, j| cols[j].0[i].clone()).rank()
}

/// Class A check: the trace covector vanishes.
pub fn is_unimodular(c: &Bracket) -> bool {
    trace_map(c).is_zero()
}

/// Full classification of a Lie bracket over the chosen field.
///
/// Errors: [`Error::JacobiViolation`] with the exact obstruction if the input
/// is not a Lie bracket, [`Error::ModeMismatch`] for gaussian entries in real
/// mode.
pub fn classify(c: &Bracket, mode: FieldMode) -> Result<ClassificationReport> {
    if mode == FieldMode::Real && !c.is_real() {
        return Err(Error::ModeMismatch(
            "bracket has gaussian entries; run in complex mode".into(),
        ));
    }
    let dec = decompose(c);
    let j = jacobian_via_theorem(&dec.m, &dec.nu);
    debug_assert_eq!(j, jacobian_tensor(c));
    if !j.is_zero() {
        let [x, y, z] = j.components().clone();
        return Err(Error::JacobiViolation(x, y, z));
    }

    let rank_sig = rank_signature(&dec.m, mode)?;
    let unimodular = dec.nu.is_zero();
    let mut inv_c = None;

    let ty = if unimodular {
        match mode {
            FieldMode::Real => {
                match (rank_sig.rank, rank_sig.abs_signature.expect("real mode")) {
                    (0, 0) => BianchiType::I,
                    (1, 1) => BianchiType::II,
                    (2, 0) => BianchiType::VI0,
                    (2, 2) => BianchiType::VII0,
                    (3, 1) => BianchiType::VIII,
                    (3, 3) => BianchiType::IX,
                    pair => unreachable!("impossible rank/signature pair {pair:?}"),
                }
            }
            FieldMode::Complex => match rank_sig.rank {
                0 => BianchiType::I,
                1 => BianchiType::II,
                2 => BianchiType::VII0,
                3 => BianchiType::IX,
                r => unreachable!("impossible rank {r}"),
            },
        }
    } else {
        match rank_sig.rank {
            0 => BianchiType::V,
            1 => BianchiType::IV,
            2 => {
                let c_val = invariant_c(&dec.m, &dec.nu)?;
                let h2 = match (mode, rank_sig.abs_signature) {
                    // Real split: definite kernel-complement (|s| = 2) is the
                    // rotational family VII_h with c > 0; indefinite (|s| = 0)
                    // is VI_h with c < 0.
                    (FieldMode::Real, Some(0)) => {
                        debug_assert_eq!(c_val.sign_real(), -1);
                        -&c_val.inv()
                    }
                    (FieldMode::Real, Some(2)) => c_val.inv(),
                    (FieldMode::Complex, None) => c_val.inv(),
                    _ => unreachable!(),
                };
                let ty = match (mode, rank_sig.abs_signature) {
                    (FieldMode::Real, Some(0)) => BianchiType::VIh(h2),
                    _ => BianchiType::VIIh(h2),
                };
                inv_c = Some(c_val);
                ty
            }
            // rank 3 with ν ≠ 0 contradicts Mν = 0.
            r => unreachable!("rank {r} with nonzero trace covector passed Jacobi"),
        }
    };

    let orbit_dim = orbit_dimension(c)?;
    let aut = aut_info(&ty, mode)?;
    Ok(ClassificationReport {
        mode,
        h_approx: ty.h_approx(),
        labels: ty.structure_labels(),
        derived_dim: derived_algebra_dim(c),
        unimodular,
        rank_sig,
        invariant_c: inv_c,
        decomposition: dec,
        orbit_dim,
        aut,
        ty,
    })
}

/// The representative pair `(M, ν)` whose composition is the canonical model
/// of a type. Exact: when `h²` is a perfect square the classical model with
/// rational `h` is used; otherwise an equivalent all-rational model
/// `(diag(h², ∓1, 0), h²·λ³)` stands in.
pub fn representative_pair(ty: &BianchiType, mode: FieldMode) -> Result<(SymForm, Covector)> {
    ty.check_mode(mode)?;
    let diag = |a: i64, b: i64, c: i64| {
        SymForm::from_diag([Scalar::from_int(a), Scalar::from_int(b), Scalar::from_int(c)])
    };
    let lambda3 = Covector::basis(2);
    let pair = match ty {
        BianchiType::I => (diag(0, 0, 0), Covector::zero()),
        BianchiType::II => (diag(1, 0, 0), Covector::zero()),
        BianchiType::VI0 => (diag(1, -1, 0), Covector::zero()),
        BianchiType::VII0 => (diag(1, 1, 0), Covector::zero()),
        BianchiType::VIII => (diag(1, 1, -1), Covector::zero()),
        BianchiType::IX => (diag(1, 1, 1), Covector::zero()),
        BianchiType::V => (diag(0, 0, 0), lambda3),
        BianchiType::IV => (diag(1, 0, 0), lambda3),
        BianchiType::VIh(h2) => match h2.sqrt_exact_real() {
            Some(h) => (diag(1, -1, 0), lambda3.scale(&-&h)),
            None => (
                SymForm::from_diag([h2.clone(), Scalar::from_int(-1), Scalar::zero()]),
                lambda3.scale(h2),
            ),
        },
        BianchiType::VIIh(h2) => {
            let root = match mode {
                FieldMode::Real => h2.sqrt_exact_real(),
                FieldMode::Complex => h2.sqrt_exact(),
            };
            match root {
                Some(h) => (diag(1, 1, 0), lambda3.scale(&h)),
                None => (
                    SymForm::from_diag([h2.clone(), Scalar::one(), Scalar::zero()]),
                    lambda3.scale(h2),
                ),
            }
        }
    };
    Ok(pair)
}

/// Canonical model bracket of a type; see [`representative_pair`].
pub fn representative(ty: &BianchiType, mode: FieldMode) -> Result<Bracket> {
    let (m, nu) = representative_pair(ty, mode)?;
    Ok(crate::decomp::compose(&m, &nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::compose;

    fn cls(m: &SymForm, nu: &Covector, mode: FieldMode) -> ClassificationReport {
        classify(&compose(m, nu), mode).unwrap()
    }

    fn diag(d: [i64; 3]) -> SymForm {
        SymForm::from_diag(std::array::from_fn(|k| Scalar::from_int(d[k])))
    }

    #[test]
    fn class_a_table() {
        let cases: [([i64; 3], BianchiType); 6] = [
            ([0, 0, 0], BianchiType::I),
            ([1, 0, 0], BianchiType::II),
            ([1, -1, 0], BianchiType::VI0),
            ([1, 1, 0], BianchiType::VII0),
            ([1, 1, -1], BianchiType::VIII),
            ([1, 1, 1], BianchiType::IX),
        ];
        for (d, expect) in cases {
            let r = cls(&diag(d), &Covector::zero(), FieldMode::Real);
            assert_eq!(r.ty, expect, "diag {d:?}");
            assert!(r.unimodular);
            assert_eq!(r.ty.class(), BianchiClass::A);
        }
        // Sign permutations land in the same type: diag(-1,1,1) is still VIII.
        let r = cls(&diag([-1, 1, 1]), &Covector::zero(), FieldMode::Real);
        assert_eq!(r.ty, BianchiType::VIII);
        assert_eq!(r.rank_sig.abs_signature, Some(1));
    }

    #[test]
    fn class_b_table() {
        let l3 = Covector::basis(2);
        assert_eq!(cls(&diag([0, 0, 0]), &l3, FieldMode::Real).ty, BianchiType::V);
        assert_eq!(cls(&diag([1, 0, 0]), &l3, FieldMode::Real).ty, BianchiType::IV);
        // diag(1,-1,0) with ν = h·λ³: type VI_h.
        for h in [1i64, 2, 3] {
            let r = cls(&diag([1, -1, 0]), &l3.scale(&Scalar::from_int(-h)), FieldMode::Real);
            assert_eq!(r.ty, BianchiType::VIh(Scalar::from_int(h * h)));
            assert_eq!(r.invariant_c, Some(Scalar::ratio(-1, h * h)));
            assert_eq!(r.ty.is_iii(), h == 1);
        }
        for h in [1i64, 3] {
            let r = cls(&diag([1, 1, 0]), &l3.scale(&Scalar::from_int(h)), FieldMode::Real);
            assert_eq!(r.ty, BianchiType::VIIh(Scalar::from_int(h * h)));
            assert_eq!(r.invariant_c, Some(Scalar::ratio(1, h * h)));
        }
    }

    #[test]
    fn fractional_family_parameters() {
        // ν = (3/2)·λ³ over diag(1,1,0) gives h² = 9/4.
        let r = cls(
            &diag([1, 1, 0]),
            &Covector::basis(2).scale(&Scalar::ratio(3, 2)),
            FieldMode::Real,
        );
        assert_eq!(r.ty, BianchiType::VIIh(Scalar::ratio(9, 4)));
        // A non-square parameter: M = diag(2,-1,0), ν = 2λ³ gives h² = 2.
        let m = SymForm::from_diag([Scalar::from_int(2), Scalar::from_int(-1), Scalar::zero()]);
        let r = cls(&m, &Covector::basis(2).scale(&Scalar::from_int(2)), FieldMode::Real);
        assert_eq!(r.ty, BianchiType::VIh(Scalar::from_int(2)));
    }

    #[test]
    fn jacobi_failures_are_reported_exactly() {
        // M = diag(1,0,0), ν = λ¹: J = 2·e1.
        let c = compose(&diag([1, 0, 0]), &Covector::basis(0));
        match classify(&c, FieldMode::Real) {
            Err(Error::JacobiViolation(x, y, z)) => {
                assert_eq!(x, Scalar::from_int(2));
                assert!(y.is_zero() && z.is_zero());
            }
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn complex_mode_merges_types() {
        let l3 = Covector::basis(2);
        // VI_0 data is VII_0 over the Gaussians.
        let r = cls(&diag([1, -1, 0]), &Covector::zero(), FieldMode::Complex);
        assert_eq!(r.ty, BianchiType::VII0);
        assert_eq!(r.rank_sig.abs_signature, None);
        // VIII merges into IX.
        let r = cls(&diag([1, 1, -1]), &Covector::zero(), FieldMode::Complex);
        assert_eq!(r.ty, BianchiType::IX);
        // VI_h data at h² = 4 becomes VII_h with h² = -4.
        let r = cls(&diag([1, -1, 0]), &l3.scale(&Scalar::from_int(-2)), FieldMode::Complex);
        assert_eq!(r.ty, BianchiType::VIIh(Scalar::from_int(-4)));
        // Real-mode classification of gaussian data is refused.
        let m = SymForm::from_diag([Scalar::i(), Scalar::zero(), Scalar::zero()]);
        let c = compose(&m, &Covector::zero());
        assert!(matches!(
            classify(&c, FieldMode::Real),
            Err(Error::ModeMismatch(_))
        ));
    }

    #[test]
    fn representatives_classify_to_themselves() {
        let mut types = vec![
            BianchiType::I,
            BianchiType::II,
            BianchiType::IV,
            BianchiType::V,
            BianchiType::VI0,
            BianchiType::VII0,
            BianchiType::VIII,
            BianchiType::IX,
            BianchiType::VIh(Scalar::from_int(4)),
            BianchiType::VIh(Scalar::from_int(2)),
            BianchiType::VIIh(Scalar::ratio(9, 2)),
            BianchiType::VIIh(Scalar::from_int(9)),
        ];
        for ty in types.drain(..) {
            let rep = representative(&ty, FieldMode::Real).unwrap();
            let r = classify(&rep, FieldMode::Real).unwrap();
            assert_eq!(r.ty, ty, "representative of {ty}");
        }
        // Complex-mode family representative with a gaussian, non-square h².
        let h2 = Scalar::gaussian(1, 1, 1, 1); // 1 + i
        let ty = BianchiType::VIIh(h2);
        let rep = representative(&ty, FieldMode::Complex).unwrap();
        assert_eq!(classify(&rep, FieldMode::Complex).unwrap().ty, ty);
        // And a gaussian perfect square: h² = 2i = (1+i)².
        let ty = BianchiType::VIIh(Scalar::gaussian(0, 1, 2, 1));
        let rep = representative(&ty, FieldMode::Complex).unwrap();
        assert_eq!(classify(&rep, FieldMode::Complex).unwrap().ty, ty);
    }

    #[test]
    fn type_mode_checks() {
        for ty in [
            BianchiType::VI0,
            BianchiType::VIII,
            BianchiType::VIh(Scalar::from_int(1)),
        ] {
            assert!(matches!(
                representative(&ty, FieldMode::Complex),
                Err(Error::TypeMode(_))
            ));
        }
        assert!(matches!(
            representative(&BianchiType::VIh(Scalar::from_int(-1)), FieldMode::Real),
            Err(Error::TypeMode(_))
        ));
        assert!(matches!(
            representative(&BianchiType::VIIh(Scalar::zero()), FieldMode::Complex),
            Err(Error::TypeMode(_))
        ));
    }

    #[test]
    fn label_parsing() {
        assert_eq!(
            BianchiType::from_label("III", None).unwrap(),
            BianchiType::VIh(Scalar::one())
        );
        assert_eq!(
            BianchiType::from_label("VI_h", Some(Scalar::ratio(9, 2))).unwrap(),
            BianchiType::VIh(Scalar::ratio(9, 2))
        );
        assert!(BianchiType::from_label("VI_h", None).is_err());
        assert!(BianchiType::from_label("X", None).is_err());
        assert!(BianchiType::from_label("IX", Some(Scalar::one())).is_err());
    }

    #[test]
    fn derived_dimension_examples() {
        let l3 = Covector::basis(2);
        assert_eq!(derived_algebra_dim(&compose(&diag([0, 0, 0]), &Covector::zero())), 0);
        assert_eq!(derived_algebra_dim(&compose(&diag([1, 0, 0]), &Covector::zero())), 1);
        assert_eq!(derived_algebra_dim(&compose(&diag([1, 1, 1]), &Covector::zero())), 3);
        assert_eq!(derived_algebra_dim(&compose(&diag([0, 0, 0]), &l3)), 2);
        // III (h² = 1) drops to derived dimension 1; other VI_h have 2.
        let iii = representative(&BianchiType::VIh(Scalar::one()), FieldMode::Real).unwrap();
        assert_eq!(derived_algebra_dim(&iii), 1);
        let vi4 = representative(&BianchiType::VIh(Scalar::from_int(4)), FieldMode::Real).unwrap();
        assert_eq!(derived_algebra_dim(&vi4), 2);
    }
}
