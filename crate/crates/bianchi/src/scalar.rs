//! Exact scalar arithmetic.
//!
//! A [`Scalar`] is a Gaussian rational: a pair of arbitrary-precision
//! rationals `re + im·i`. Real-mode computations simply keep `im = 0`.
//! Arithmetic is exact — numerator and denominator stay coprime with a
//! positive denominator, so equality of scalars is literal equality and no
//! floating point ever enters a decision. Floats are produced only for
//! display, via [`Scalar::to_f64`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Scalar field a computation runs over: the rationals (exact model of the
/// real case) or the Gaussian rationals (exact model of the complex case).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Real,
    Complex,
}

impl FieldMode {
    /// Name used in file and report headers.
    pub fn name(self) -> &'static str {
        match self {
            FieldMode::Real => "rational",
            FieldMode::Complex => "gaussian",
        }
    }

    /// Inverse of [`FieldMode::name`].
    pub fn from_name(s: &str) -> Option<FieldMode> {
        match s {
            "rational" => Some(FieldMode::Real),
            "gaussian" => Some(FieldMode::Complex),
            _ => None,
        }
    }
}

/// Number of fractional bits carried by dyadic square-root approximants.
/// Residuals of approximate witnesses are of this order, far below any
/// acceptance tolerance in use.
pub const SQRT_FRACTION_BITS: u64 = 192;

/// An exact Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

/// Failure to read a scalar literal.
#[derive(Debug, Clone, Error)]
#[error("invalid scalar literal {literal:?}: {reason}")]
pub struct ParseScalarError {
    pub literal: String,
    pub reason: &'static str,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Scalar {
        Scalar { re, im }
    }

    pub fn zero() -> Scalar {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Scalar {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `p/q` as a real scalar. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Scalar {
        Scalar::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// `a/b + (c/d)i`. Panics if `b == 0` or `d == 0`.
    pub fn gaussian(a: i64, b: i64, c: i64, d: i64) -> Scalar {
        Scalar::new(
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::new(BigInt::from(c), BigInt::from(d)),
        )
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::new(r, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re² + im²`, an exact nonnegative rational. Doubles as
    /// the pivot-magnitude key: for real scalars it orders like `|x|`.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero; callers guard.
    pub fn inv(&self) -> Scalar {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "inverse of zero scalar");
        Scalar::new(&self.re / &n, -&self.im / &n)
    }

    /// Sign of a real scalar: -1, 0 or +1.
    pub fn sign_real(&self) -> i8 {
        debug_assert!(self.is_real());
        match self.re.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Order two real scalars. Debug-asserts both are real.
    pub fn cmp_real(&self, other: &Scalar) -> Ordering {
        debug_assert!(self.is_real() && other.is_real());
        self.re.cmp(&other.re)
    }

    /// Exact square root in the Gaussian rationals, if one exists. The root
    /// returned is canonical: positive real part, or (for negative reals)
    /// positive imaginary part.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        if self.im.is_zero() {
            if self.re.is_negative() {
                // sqrt(-r) = sqrt(r)·i
                return rat_sqrt(&-self.re.clone())
                    .map(|y| Scalar::new(BigRational::zero(), y));
            }
            return rat_sqrt(&self.re).map(Scalar::from_rational);
        }
        // z = a + bi with b != 0: need |z| = sqrt(a² + b²) rational, then
        // x² = (a + |z|)/2 rational square; y = b / 2x.
        let s = rat_sqrt(&self.norm_sq())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let t = (&self.re + &s) / &two;
        let x = rat_sqrt(&t)?;
        // b != 0 forces |z| > |a|, hence t > 0 and x > 0.
        debug_assert!(x.is_positive());
        let y = &self.im / (&two * &x);
        let root = Scalar::new(x, y);
        debug_assert_eq!(&root * &root, *self);
        Some(root)
    }

    /// Exact square root within the rationals. `None` for non-real input,
    /// negative input, or a non-square.
    pub fn sqrt_exact_real(&self) -> Option<Scalar> {
        if !self.is_real() || self.re.is_negative() {
            return None;
        }
        rat_sqrt(&self.re).map(Scalar::from_rational)
    }

    /// Dyadic approximation of the principal square root, accurate to
    /// `2^-frac_bits` in each component. Exact rational output (a float never
    /// appears); inputs on the negative real axis take the root with positive
    /// imaginary part.
    pub fn sqrt_dyadic(&self, frac_bits: u64) -> Scalar {
        if self.im.is_zero() {
            if self.re.is_negative() {
                let y = rat_sqrt_dyadic(&-self.re.clone(), frac_bits);
                return Scalar::new(BigRational::zero(), y);
            }
            return Scalar::from_rational(rat_sqrt_dyadic(&self.re, frac_bits));
        }
        let two = BigRational::from_integer(BigInt::from(2));
        // Retry with more precision if the approximate modulus is not yet
        // large enough to keep (a + |z|)/2 positive; terminates because the
        // true value is a positive algebraic number.
        let mut bits = frac_bits;
        loop {
            let s = rat_sqrt_dyadic(&self.norm_sq(), bits);
            let t = (&self.re + &s) / &two;
            if t.is_positive() {
                let x = rat_sqrt_dyadic(&t, bits);
                if x.is_positive() {
                    let y = &self.im / (&two * &x);
                    return Scalar::new(x, y);
                }
            }
            bits *= 2;
        }
    }

    /// Components as floats, for display only.
    pub fn to_f64(&self) -> (f64, f64) {
        (rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    /// Canonical literal: `p/q` (denominator omitted when 1) for real values,
    /// `re+imi` / `re-imi` otherwise. [`Scalar::from_str`] is its inverse.
    pub fn to_literal(&self) -> String {
        format!("{self}")
    }
}

fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rat_sqrt(r: &BigRational) -> Option<BigRational> {
    debug_assert!(!r.is_negative());
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Floor of `sqrt(p/q)` on a dyadic grid with `frac_bits` fractional bits:
/// `isqrt(p·q·4^frac_bits) / (q·2^frac_bits)`, within `2^-frac_bits` of the
/// true root.
fn rat_sqrt_dyadic(r: &BigRational, frac_bits: u64) -> BigRational {
    debug_assert!(!r.is_negative());
    if r.is_zero() {
        return BigRational::zero();
    }
    let scaled = r.numer() * r.denom() << (2 * frac_bits);
    let root = scaled.sqrt();
    BigRational::new(root, r.denom() << frac_bits)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", fmt_rat(&self.re), sign, fmt_rat(&self.im.abs()))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One rational token: optional sign, integer, optional `/denominator`.
fn parse_rat(tok: &str, lit: &str) -> Result<BigRational, ParseScalarError> {
    let err = |reason| ParseScalarError { literal: lit.to_string(), reason };
    let (numer, denom) = match tok.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (tok, None),
    };
    let n = BigInt::from_str(numer).map_err(|_| err("bad numerator"))?;
    let d = match denom {
        Some(d) => {
            let d = BigInt::from_str(d).map_err(|_| err("bad denominator"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            if d.sign() == Sign::Minus {
                return Err(err("denominator must be positive"));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `p`, `p/q`, `p/q+r/si`, `p/q-r/si`, `r/si`, `i`, `-i`.
    fn from_str(s: &str) -> Result<Scalar, ParseScalarError> {
        let lit = s;
        let s = s.trim();
        let err = |reason| ParseScalarError { literal: lit.to_string(), reason };
        if s.is_empty() {
            return Err(err("empty literal"));
        }
        let (real_tok, imag_tok) = match s.strip_suffix(['i', 'I']) {
            None => (Some(s), None),
            Some(body) => {
                // Split at the sign that separates the real and imaginary
                // parts, if any; a leading sign does not count.
                let pos = body
                    .char_indices()
                    .rev()
                    .find(|&(idx, ch)| idx > 0 && (ch == '+' || ch == '-'))
                    .map(|(idx, _)| idx);
                match pos {
                    Some(pos) => (Some(&body[..pos]), Some(&body[pos..])),
                    None => (None, Some(body)),
                }
            }
        };
        let re = match real_tok {
            Some(tok) => parse_rat(tok, lit)?,
            None => BigRational::zero(),
        };
        let im = match imag_tok {
            None => BigRational::zero(),
            Some("") | Some("+") => BigRational::one(),
            Some("-") => -BigRational::one(),
            Some(tok) => parse_rat(tok, lit)?,
        };
        Ok(Scalar::new(re, im))
    }
}
