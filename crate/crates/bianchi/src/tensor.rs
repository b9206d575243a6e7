//! Tensor types on a 3-dimensional vector space with a fixed basis
//! `e1, e2, e3`: vectors, covectors, matrices, invertible basis changes,
//! symmetric bilinear forms, and antisymmetric brackets `Λ²V* ⊗ V`.
//!
//! Everything is indexed 0-based internally; the public API keeps that
//! convention and leaves 1-based labels to the I/O layer.

use std::fmt;

use num::rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Basis-pair order used to store a bracket: values on `(e1,e2)`, `(e1,e3)`,
/// `(e2,e3)`.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// An element of `V`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector(pub [Scalar; 3]);

/// An element of the dual space `V*`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Covector(pub [Scalar; 3]);

impl Vector {
    pub fn zero() -> Vector {
        Vector(std::array::from_fn(|_| Scalar::zero()))
    }

    /// `e_k` for `k` in `0..3`.
    pub fn basis(k: usize) -> Vector {
        let mut v = Vector::zero();
        v.0[k] = Scalar::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(std::array::from_fn(|k| &self.0[k] + &other.0[k]))
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(std::array::from_fn(|k| &self.0[k] - &other.0[k]))
    }

    pub fn neg(&self) -> Vector {
        Vector(std::array::from_fn(|k| -&self.0[k]))
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector(std::array::from_fn(|k| s * &self.0[k]))
    }
}

impl Covector {
    pub fn zero() -> Covector {
        Covector(std::array::from_fn(|_| Scalar::zero()))
    }

    /// `λ^k`, the basis covector dual to `e_k`.
    pub fn basis(k: usize) -> Covector {
        let mut v = Covector::zero();
        v.0[k] = Scalar::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Covector {
        Covector(std::array::from_fn(|k| s * &self.0[k]))
    }

    /// Natural pairing `⟨ν, v⟩`.
    pub fn pair(&self, v: &Vector) -> Scalar {
        let mut acc = Scalar::zero();
        for k in 0..3 {
            acc = &acc + &(&self.0[k] * &v.0[k]);
        }
        acc
    }
}

/// A 3×3 matrix over the scalar field, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix3 {
    e: [[Scalar; 3]; 3],
}

impl Matrix3 {
    pub fn from_rows(e: [[Scalar; 3]; 3]) -> Matrix3 {
        Matrix3 { e }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix3 {
        Matrix3 { e: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn zero() -> Matrix3 {
        Matrix3::from_fn(|_, _| Scalar::zero())
    }

    pub fn identity() -> Matrix3 {
        Matrix3::from_fn(|i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn diag(d: [Scalar; 3]) -> Matrix3 {
        let mut m = Matrix3::zero();
        for (k, v) in d.into_iter().enumerate() {
            m.e[k][k] = v;
        }
        m
    }

    /// Permutation matrix sending basis slot `k` to old slot `perm[k]`:
    /// conjugation `P A Pᵀ` carries `A[perm[i]][perm[j]]` to position `(i,j)`.
    pub fn permutation(perm: [usize; 3]) -> Matrix3 {
        Matrix3::from_fn(|i, j| {
            if perm[i] == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.e[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.e[i][j] = v;
    }

    pub fn row(&self, i: usize) -> [Scalar; 3] {
        self.e[i].clone()
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector(std::array::from_fn(|i| self.e[i][j].clone()))
    }

    pub fn transpose(&self) -> Matrix3 {
        Matrix3::from_fn(|i, j| self.e[j][i].clone())
    }

    pub fn mul(&self, other: &Matrix3) -> Matrix3 {
        Matrix3::from_fn(|i, j| {
            let mut acc = Scalar::zero();
            for k in 0..3 {
                acc = &acc + &(&self.e[i][k] * &other.e[k][j]);
            }
            acc
        })
    }

    /// Matrix acting on a column vector.
    pub fn vec_mul(&self, v: &Vector) -> Vector {
        Vector(std::array::from_fn(|i| {
            let mut acc = Scalar::zero();
            for k in 0..3 {
                acc = &acc + &(&self.e[i][k] * &v.0[k]);
            }
            acc
        }))
    }

    /// Row covector acting from the left: `ν ↦ ν·M`.
    pub fn cov_mul(&self, nu: &Covector) -> Covector {
        Covector(std::array::from_fn(|j| {
            let mut acc = Scalar::zero();
            for k in 0..3 {
                acc = &acc + &(&nu.0[k] * &self.e[k][j]);
            }
            acc
        }))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix3 {
        Matrix3::from_fn(|i, j| s * &self.e[i][j])
    }

    pub fn neg(&self) -> Matrix3 {
        Matrix3::from_fn(|i, j| -&self.e[i][j])
    }

    pub fn add(&self, other: &Matrix3) -> Matrix3 {
        Matrix3::from_fn(|i, j| &self.e[i][j] + &other.e[i][j])
    }

    pub fn sub(&self, other: &Matrix3) -> Matrix3 {
        Matrix3::from_fn(|i, j| &self.e[i][j] - &other.e[i][j])
    }

    pub fn det(&self) -> Scalar {
        let e = &self.e;
        let m = |i: usize, j: usize| &e[i][j];
        let c0 = &(m(1, 1) * m(2, 2)) - &(m(1, 2) * m(2, 1));
        let c1 = &(m(1, 0) * m(2, 2)) - &(m(1, 2) * m(2, 0));
        let c2 = &(m(1, 0) * m(2, 1)) - &(m(1, 1) * m(2, 0));
        &(&(m(0, 0) * &c0) - &(m(0, 1) * &c1)) + &(m(0, 2) * &c2)
    }

    /// Adjugate (transposed cofactor matrix): `A·adj(A) = det(A)·1`.
    pub fn adjugate(&self) -> Matrix3 {
        let e = &self.e;
        let cof = |i: usize, j: usize| {
            let r: Vec<usize> = (0..3).filter(|&r| r != i).collect();
            let c: Vec<usize> = (0..3).filter(|&c| c != j).collect();
            let minor = &(&e[r[0]][c[0]] * &e[r[1]][c[1]]) - &(&e[r[0]][c[1]] * &e[r[1]][c[0]]);
            if (i + j) % 2 == 0 {
                minor
            } else {
                -&minor
            }
        };
        Matrix3::from_fn(|i, j| cof(j, i))
    }

    pub fn inverse(&self) -> Option<Matrix3> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let inv_d = d.inv();
        Some(self.adjugate().scale(&inv_d))
    }

    /// Rank over the scalar field, by exact Gaussian elimination.
    pub fn rank(&self) -> u8 {
        rank_of(3, 3, |i, j| self.e[i][j].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.e[0][1] == self.e[1][0] && self.e[0][2] == self.e[2][0] && self.e[1][2] == self.e[2][1]
    }

    pub fn is_real(&self) -> bool {
        self.e.iter().flatten().all(Scalar::is_real)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix3 {
        Matrix3::from_fn(|i, j| f(&self.e[i][j]))
    }
}

/// Rank of an `rows × cols` exact matrix given by an entry oracle.
pub fn rank_of(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> Scalar) -> u8 {
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|i| (0..cols).map(|j| entry(i, j)).collect())
        .collect();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for i in row + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &pivot;
            for j in col..cols {
                m[i][j] = &m[i][j] - &(&f * &m[row][j]);
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank as u8
}

/// An invertible basis change, carrying its determinant and inverse so the
/// group action never recomputes them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    mat: Matrix3,
    det: Scalar,
    inv: Matrix3,
}

impl GroupElement {
    /// Wraps a matrix, rejecting singular input.
    pub fn new(mat: Matrix3) -> Result<GroupElement> {
        let det = mat.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let inv = mat.adjugate().scale(&det.inv());
        Ok(GroupElement { mat, det, inv })
    }

    pub fn identity() -> GroupElement {
        GroupElement {
            mat: Matrix3::identity(),
            det: Scalar::one(),
            inv: Matrix3::identity(),
        }
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.mat
    }

    pub fn det(&self) -> &Scalar {
        &self.det
    }

    pub fn inverse_matrix(&self) -> &Matrix3 {
        &self.inv
    }

    /// Group product `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            mat: self.mat.mul(&other.mat),
            det: &self.det * &other.det,
            inv: other.inv.mul(&self.inv),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            mat: self.inv.clone(),
            det: self.det.inv(),
            inv: self.mat.clone(),
        }
    }
}

/// A symmetric bilinear form on `V*` (equivalently an element of `S²V`),
/// stored as its symmetric matrix `a^{kl}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymForm {
    m: Matrix3,
}

impl SymForm {
    pub fn zero() -> SymForm {
        SymForm { m: Matrix3::zero() }
    }

    pub fn from_diag(d: [Scalar; 3]) -> SymForm {
        SymForm { m: Matrix3::diag(d) }
    }

    /// Builds from the upper triangle `(a11, a12, a13, a22, a23, a33)`.
    pub fn from_upper(u: [Scalar; 6]) -> SymForm {
        let [a11, a12, a13, a22, a23, a33] = u;
        SymForm {
            m: Matrix3::from_rows([
                [a11.clone(), a12.clone(), a13.clone()],
                [a12, a22.clone(), a23.clone()],
                [a13, a23, a33],
            ]),
        }
    }

    pub fn from_matrix(m: Matrix3) -> Result<SymForm> {
        if !m.is_symmetric() {
            return Err(Error::Precondition("matrix is not symmetric".into()));
        }
        Ok(SymForm { m })
    }

    /// For products known symmetric by construction (`g A gᵀ` and friends).
    pub fn from_matrix_unchecked(m: Matrix3) -> SymForm {
        debug_assert!(m.is_symmetric());
        SymForm { m }
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.m.get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.m == Matrix3::zero()
    }

    pub fn rank(&self) -> u8 {
        self.m.rank()
    }

    pub fn adjugate(&self) -> Matrix3 {
        self.m.adjugate()
    }

    /// Interior product: contracts a covector into the first slot,
    /// `(A ν)^l = Σ_k a^{lk} ν_k ∈ V`.
    pub fn contract(&self, nu: &Covector) -> Vector {
        self.m.vec_mul(&Vector(nu.0.clone()))
    }

    pub fn is_real(&self) -> bool {
        self.m.is_real()
    }
}

/// An antisymmetric bracket `C ∈ Λ²V* ⊗ V`, stored by its values on the
/// basis pairs `(e1,e2)`, `(e1,e3)`, `(e2,e3)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bracket {
    c: [Vector; 3],
}

impl Bracket {
    pub fn zero() -> Bracket {
        Bracket { c: std::array::from_fn(|_| Vector::zero()) }
    }

    /// Builds from `C(e1,e2)`, `C(e1,e3)`, `C(e2,e3)`.
    pub fn from_values(c12: Vector, c13: Vector, c23: Vector) -> Bracket {
        Bracket { c: [c12, c13, c23] }
    }

    /// Value on the `p`-th basis pair in [`PAIRS`] order.
    pub fn pair_value(&self, p: usize) -> &Vector {
        &self.c[p]
    }

    /// `C(e_i, e_j)` for any `i, j`, antisymmetry included.
    pub fn value(&self, i: usize, j: usize) -> Vector {
        if i == j {
            return Vector::zero();
        }
        match PAIRS.iter().position(|&(a, b)| (a, b) == (i, j)) {
            Some(p) => self.c[p].clone(),
            None => {
                let p = PAIRS.iter().position(|&(a, b)| (a, b) == (j, i)).unwrap();
                self.c[p].neg()
            }
        }
    }

    /// Structure constant `C_{ij}^k` (0-based indices).
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.value(i, j).0[k].clone()
    }

    /// Sets `C_{ij}^k` for `i < j`; the `(j,i)` value follows by antisymmetry.
    pub fn set_structure_constant(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let p = PAIRS
            .iter()
            .position(|&(a, b)| (a, b) == (i, j))
            .expect("set_structure_constant requires i < j");
        self.c[p].0[k] = v;
    }

    /// Bilinear evaluation `C(a, b)`.
    pub fn eval(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (p, &(i, j)) in PAIRS.iter().enumerate() {
            // coefficient of the (e_i, e_j) pair in a ∧ b
            let coeff = &(&a.0[i] * &b.0[j]) - &(&a.0[j] * &b.0[i]);
            if !coeff.is_zero() {
                out = out.add(&self.c[p].scale(&coeff));
            }
        }
        out
    }

    pub fn add(&self, other: &Bracket) -> Bracket {
        Bracket { c: std::array::from_fn(|p| self.c[p].add(&other.c[p])) }
    }

    pub fn sub(&self, other: &Bracket) -> Bracket {
        Bracket { c: std::array::from_fn(|p| self.c[p].sub(&other.c[p])) }
    }

    pub fn neg(&self) -> Bracket {
        Bracket { c: std::array::from_fn(|p| self.c[p].neg()) }
    }

    pub fn scale(&self, s: &Scalar) -> Bracket {
        Bracket { c: std::array::from_fn(|p| self.c[p].scale(s)) }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Vector::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.c.iter().flat_map(|v| v.0.iter()).all(Scalar::is_real)
    }

    /// The nine structure constants as a flat array, pair-major.
    pub fn flatten(&self) -> [Scalar; 9] {
        std::array::from_fn(|n| self.c[n / 3].0[n % 3].clone())
    }

    /// Largest squared modulus of an entry of `self - other`; exact, used to
    /// bound witness residuals.
    pub fn max_diff_norm_sq(&self, other: &Bracket) -> BigRational {
        let diff = self.sub(other);
        diff.flatten()
            .iter()
            .map(Scalar::norm_sq)
            .max()
            .expect("nonempty")
    }
}

impl fmt::Display for Bracket {
    /// Renders as bracket relations, e.g. `[e2,e3] = e1 - 2 e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Conventional presentation order: (1,2), (2,3), (3,1).
        let display_pairs = [(0usize, 1usize), (1, 2), (2, 0)];
        let mut parts = Vec::new();
        for &(i, j) in &display_pairs {
            let v = self.value(i, j);
            parts.push(format!("[e{},e{}] = {}", i + 1, j + 1, fmt_vector(&v)));
        }
        write!(f, "{}", parts.join(", "))
    }
}

fn fmt_vector(v: &Vector) -> String {
    let mut out = String::new();
    for (k, coeff) in v.0.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (sign, mag) = if coeff.is_real() && coeff.sign_real() < 0 {
            ('-', -coeff)
        } else {
            ('+', coeff.clone())
        };
        if out.is_empty() {
            if sign == '-' {
                out.push('-');
            }
        } else {
            out.push(' ');
            out.push(sign);
            out.push(' ');
        }
        if mag.is_one() {
            out.push_str(&format!("e{}", k + 1));
        } else if mag.is_real() {
            out.push_str(&format!("{} e{}", mag, k + 1));
        } else {
            out.push_str(&format!("({}) e{}", mag, k + 1));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The Jacobi obstruction `J(e1,e2,e3) ∈ V`: three exact components that all
/// vanish exactly when the bracket satisfies the Jacobi identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobiTensor(pub Vector);

impl JacobiTensor {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn components(&self) -> &[Scalar; 3] {
        &self.0 .0
    }
}
