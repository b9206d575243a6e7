//! Orbit geometry: stabilizer (= automorphism group) data, orbit dimensions
//! via the linearized action, exact membership tests for the block-form
//! stabilizers of the unimodular types, and the orbit-closure poset.
//!
//! The orbit of a bracket under basis changes is its isomorphism class; its
//! dimension is the rank of the infinitesimal action `ξ ↦ ξ·C` of 3×3
//! matrices on brackets, a 9×9 exact rank computation. Stabilizer dimension
//! is the complementary `9 − rank`. Closure relations are encoded as static
//! tables — per-type sets, plus the two family-union nodes `∪ VI_h`,
//! `∪ VII_h` whose closures pick up the extra degenerations `IV`, `V` and
//! `VI_0`/`VII_0` that no single family member reaches.

use std::collections::BTreeSet;
use std::fmt;

use crate::classify::{BianchiClass, BianchiType, TypeLabel};
use crate::decomp::is_jacobi;
use crate::error::{Error, Result};
use crate::scalar::{FieldMode, Scalar};
use crate::tensor::{rank_of, Bracket, Matrix3, Vector};

/// Automorphism group of a type: the stabilizer of its representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroupInfo {
    /// Group name; absent for the class B types over the complex field,
    /// where no closed form is tabulated.
    pub name: Option<&'static str>,
    pub dimension: u8,
    /// The block conditions cutting the group out of GL(3).
    pub description: &'static str,
}

/// `(ξ·C)(a, b) = ξ·C(a,b) − C(ξa, b) − C(a, ξb)`: the infinitesimal version
/// of the basis-change action.
pub fn infinitesimal_action(xi: &Matrix3, c: &Bracket) -> Bracket {
    let col: [Vector; 3] = std::array::from_fn(|k| xi.col(k));
    let e: [Vector; 3] = std::array::from_fn(Vector::basis);
    let value = |i: usize, j: usize| {
        xi.vec_mul(&c.value(i, j))
            .sub(&c.eval(&col[i], &e[j]))
            .sub(&c.eval(&e[i], &col[j]))
    };
    Bracket::from_values(value(0, 1), value(0, 2), value(1, 2))
}

/// Orbit dimension of a Lie bracket: rank of `ξ ↦ ξ·C` over the exact field.
pub fn orbit_dimension(c: &Bracket) -> Result<u8> {
    if !is_jacobi(c) {
        let j = crate::decomp::jacobian_tensor(c);
        let [x, y, z] = j.components().clone();
        return Err(Error::JacobiViolation(x, y, z));
    }
    // Columns: the images of the nine elementary matrices E_ab.
    let images: Vec<[Scalar; 9]> = (0..9)
        .map(|n| {
            let mut xi = Matrix3::zero();
            xi.set(n / 3, n % 3, Scalar::one());
            infinitesimal_action(&xi, c).flatten()
        })
        .collect();
    Ok(rank_of(9, 9, |i, j| images[j][i].clone()))
}

/// `9 − orbit_dimension`: the dimension of the automorphism group.
pub fn stabilizer_dimension(c: &Bracket) -> Result<u8> {
    Ok(9 - orbit_dimension(c)?)
}

/// Signature profile `(k, l, m)` of a unimodular representative:
/// `diag(+1 ×k, −1 ×l, 0 ×m)`.
fn signature_profile(label: TypeLabel) -> Option<(usize, usize, usize)> {
    match label {
        TypeLabel::I => Some((0, 0, 3)),
        TypeLabel::II => Some((1, 0, 2)),
        TypeLabel::VI0 => Some((1, 1, 1)),
        TypeLabel::VII0 => Some((2, 0, 1)),
        TypeLabel::VIII => Some((2, 1, 0)),
        TypeLabel::IX => Some((3, 0, 0)),
        _ => None,
    }
}

fn det_block(g: &Matrix3, start: usize, len: usize) -> Scalar {
    match len {
        0 => Scalar::one(),
        1 => g.get(start, start).clone(),
        2 => {
            let (a, b) = (g.get(start, start), g.get(start, start + 1));
            let (c, d) = (g.get(start + 1, start), g.get(start + 1, start + 1));
            &(a * d) - &(b * c)
        }
        3 => g.det(),
        _ => unreachable!(),
    }
}

/// Exact membership test for the stabilizer of a unimodular representative:
/// `g` must be block upper-triangular with an invertible `(k+l)` block `g₁`
/// and `m` block `g₂`, and satisfy `g₁·ε·g₁ᵀ = det(g₁)·det(g₂)·ε` where
/// `ε = diag(1 ×k, −1 ×l)`. Equivalent to `act_bracket(g, rep) = rep`.
///
/// Errors: non-invertible `g`, and class B or family types (their
/// stabilizers are not of this block shape).
pub fn stabilizer_membership(g: &Matrix3, t: &BianchiType) -> Result<bool> {
    if t.class() != BianchiClass::A {
        return Err(Error::Precondition(format!(
            "stabilizer block test covers the unimodular types, not {}",
            t.label()
        )));
    }
    let (k, l, m) = signature_profile(t.label()).expect("class A profile");
    if g.det().is_zero() {
        return Err(Error::Singular);
    }
    let r = k + l;
    // Lower-left m×r block must vanish.
    for i in r..3 {
        for j in 0..r {
            if !g.get(i, j).is_zero() {
                return Ok(false);
            }
        }
    }
    let d1 = det_block(g, 0, r);
    let d2 = det_block(g, r, m);
    debug_assert!(!d1.is_zero() && !d2.is_zero(), "blocks of invertible g");
    // g₁ ε g₁ᵀ = det(g₁) det(g₂) ε on the leading r×r block.
    let eps = |i: usize| -> Scalar {
        if i < k {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        }
    };
    let factor = &d1 * &d2;
    for i in 0..r {
        for j in 0..r {
            let mut lhs = Scalar::zero();
            for s in 0..r {
                lhs = &lhs + &(&(g.get(i, s) * &eps(s)) * g.get(j, s));
            }
            let rhs = if i == j { &factor * &eps(i) } else { Scalar::zero() };
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Static stabilizer table; names follow the classical groups, with block
/// shapes spelled out in the description.
pub fn aut_info(t: &BianchiType, mode: FieldMode) -> Result<AutGroupInfo> {
    t.check_mode(mode)?;
    let info = |name: Option<&'static str>, dimension: u8, description: &'static str| {
        AutGroupInfo { name, dimension, description }
    };
    let complex_b = "no closed-form block description tabulated over the complex field; \
         dimension from the linearized action";
    Ok(match (t.label(), mode) {
        (TypeLabel::I, FieldMode::Real) => info(
            Some("GL₃ℝ"),
            9,
            "every invertible matrix fixes the zero bracket",
        ),
        (TypeLabel::I, FieldMode::Complex) => info(
            Some("GL₃ℂ"),
            9,
            "every invertible matrix fixes the zero bracket",
        ),
        (TypeLabel::II, FieldMode::Real) => info(
            Some("GL₂ℝ-block group"),
            6,
            "block matrices [det(g2), h; 0, g2] with g2 invertible 2x2 and h a 1x2 row",
        ),
        (TypeLabel::II, FieldMode::Complex) => info(
            Some("GL₂ℂ-block group"),
            6,
            "block matrices [det(g2), h; 0, g2] with g2 invertible 2x2 and h a 1x2 row",
        ),
        (TypeLabel::IV, FieldMode::Real) => info(
            Some("ℝ*⋉ℝ³-block group"),
            4,
            "matrices [m, h1, h2; 0, m, 0; 0, h3, 1] with m nonzero",
        ),
        (TypeLabel::V, FieldMode::Real) => info(
            Some("Aff₂(ℝ)"),
            6,
            "matrices [g1, 0; h, 1] with g1 invertible 2x2 and h a 1x2 row: \
             the affine group of the plane",
        ),
        (TypeLabel::VI0, FieldMode::Real) => info(
            Some("CO(1,1)-block group"),
            4,
            "matrices [g1, h; 0, g2] with g1·diag(1,-1)·g1ᵀ = c·diag(1,-1) \
             and g2 = c/det(g1)",
        ),
        (TypeLabel::VIH, FieldMode::Real) => info(
            Some("CO(1,1)⋉ℝ²"),
            4,
            "matrices [g1, h; 0, 1] with g1·diag(1,-1)·g1ᵀ a nonzero multiple of diag(1,-1)",
        ),
        (TypeLabel::VII0, FieldMode::Real) => info(
            Some("CO(2)-block group"),
            4,
            "matrices [g1, h; 0, g2] with g1·g1ᵀ = c·identity and g2 = c/det(g1)",
        ),
        (TypeLabel::VII0, FieldMode::Complex) => info(
            Some("CO(2,ℂ)-block group"),
            4,
            "matrices [g1, h; 0, g2] with g1·g1ᵀ = c·identity and g2 = c/det(g1)",
        ),
        (TypeLabel::VIIH, FieldMode::Real) => info(
            Some("CO(2)⋉ℝ²"),
            4,
            "matrices [g1, h; 0, 1] with g1·g1ᵀ a nonzero multiple of the identity",
        ),
        (TypeLabel::VIII, FieldMode::Real) => info(
            Some("SO(2,1)"),
            3,
            "g with g·diag(1,1,-1)·gᵀ = diag(1,1,-1) and det(g) = 1",
        ),
        (TypeLabel::IX, FieldMode::Real) => info(
            Some("SO(3)"),
            3,
            "g with g·gᵀ = identity and det(g) = 1",
        ),
        (TypeLabel::IX, FieldMode::Complex) => info(
            Some("SO(3,ℂ)"),
            3,
            "g with g·gᵀ = identity and det(g) = 1",
        ),
        (TypeLabel::IV, FieldMode::Complex) => info(None, 4, complex_b),
        (TypeLabel::V, FieldMode::Complex) => info(None, 6, complex_b),
        (TypeLabel::VIIH, FieldMode::Complex) => info(None, 4, complex_b),
        (label, mode) => unreachable!("mode check admitted {label} in {mode:?}"),
    })
}

/// Orbit dimension by type label (families share one value for every `h²`).
pub fn orbit_dim_of_label(label: TypeLabel) -> u8 {
    match label {
        TypeLabel::I => 0,
        TypeLabel::II | TypeLabel::V => 3,
        TypeLabel::IV
        | TypeLabel::VI0
        | TypeLabel::VIH
        | TypeLabel::VII0
        | TypeLabel::VIIH => 5,
        TypeLabel::VIII | TypeLabel::IX => 6,
    }
}

/// Closure members of a single type's orbit (the type itself included).
fn closure_labels(label: TypeLabel, mode: FieldMode) -> &'static [TypeLabel] {
    use TypeLabel::*;
    match (label, mode) {
        (I, _) => &[I],
        (II, _) => &[II, I],
        (IV, _) => &[IV, II, V, I],
        (V, _) => &[V, I],
        (VI0, FieldMode::Real) => &[VI0, II, I],
        (VIH, FieldMode::Real) => &[VIH, II, I],
        (VII0, _) => &[VII0, II, I],
        (VIIH, _) => &[VIIH, II, I],
        (VIII, FieldMode::Real) => &[VIII, VI0, VII0, II, I],
        (IX, FieldMode::Real) => &[IX, VI0, VII0, II, I],
        (IX, FieldMode::Complex) => &[IX, VII0, II, I],
        (l, m) => unreachable!("{l} does not exist in {m:?} mode"),
    }
}

/// Closure members of a family union `∪ VI_h` / `∪ VII_h`: beyond the family
/// members themselves, degeneration inside the union reaches `IV`, `V` and
/// the `h = 0` endpoint of the family.
fn union_closure_labels(family: TypeLabel, mode: FieldMode) -> &'static [TypeLabel] {
    use TypeLabel::*;
    match (family, mode) {
        (VIH, FieldMode::Real) => &[VIH, IV, V, VI0, II, I],
        (VIIH, _) => &[VIIH, IV, V, VII0, II, I],
        (l, m) => unreachable!("no family union for {l} in {m:?} mode"),
    }
}

/// Types whose orbits lie in the closure of `t`'s orbit, `t` included.
pub fn closure_set(t: &BianchiType, mode: FieldMode) -> Result<BTreeSet<TypeLabel>> {
    t.check_mode(mode)?;
    Ok(closure_labels(t.label(), mode).iter().copied().collect())
}

/// A node of the closure poset: a type, or one of the family unions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum PosetNode {
    Ty(TypeLabel),
    UnionVI,
    UnionVII,
}

impl PosetNode {
    pub fn dim(self) -> u8 {
        match self {
            PosetNode::Ty(l) => orbit_dim_of_label(l),
            // A one-parameter family of 5-dimensional orbits.
            PosetNode::UnionVI | PosetNode::UnionVII => 6,
        }
    }

    pub fn is_union(self) -> bool {
        !matches!(self, PosetNode::Ty(_))
    }

    pub fn name(self) -> String {
        match self {
            PosetNode::Ty(l) => l.as_str().to_string(),
            PosetNode::UnionVI => "VI_h union".to_string(),
            PosetNode::UnionVII => "VII_h union".to_string(),
        }
    }
}

impl fmt::Display for PosetNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The full closure poset: every type node plus the family-union nodes, with
/// one edge per strict closure relation.
#[derive(Clone, Debug)]
pub struct ClosurePoset {
    /// Sorted by (dimension, name); deterministic.
    pub nodes: Vec<PosetNode>,
    /// `(upper, lower)`: the second node's orbits lie in the closure of the
    /// first's. Dimension strictly decreases along every edge.
    pub edges: Vec<(PosetNode, PosetNode)>,
}

impl ClosurePoset {
    /// Strict closure members of a node, as recorded in the edge list.
    pub fn reachable(&self, from: PosetNode) -> Vec<PosetNode> {
        self.edges
            .iter()
            .filter(|(src, _)| *src == from)
            .map(|(_, dst)| *dst)
            .collect()
    }
}

/// Builds the closure poset for a field mode.
pub fn closure_poset(mode: FieldMode) -> ClosurePoset {
    let mut nodes: Vec<PosetNode> = TypeLabel::all(mode)
        .into_iter()
        .map(PosetNode::Ty)
        .collect();
    if mode == FieldMode::Real {
        nodes.push(PosetNode::UnionVI);
    }
    nodes.push(PosetNode::UnionVII);
    nodes.sort_by_key(|n| (n.dim(), *n));

    let mut edges = Vec::new();
    for &node in &nodes {
        let members: &[TypeLabel] = match node {
            PosetNode::Ty(l) => closure_labels(l, mode),
            PosetNode::UnionVI => union_closure_labels(TypeLabel::VIH, mode),
            PosetNode::UnionVII => union_closure_labels(TypeLabel::VIIH, mode),
        };
        for &target in members {
            let dst = PosetNode::Ty(target);
            if dst != node {
                edges.push((node, dst));
            }
        }
    }
    ClosurePoset { nodes, edges }
}
