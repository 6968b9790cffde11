//! Exact univariate polynomial arithmetic over arbitrary-precision integers
//! and rationals, plus the falling-factorial and binomial builders used by
//! every chromatic-polynomial formula in this crate.
//!
//! Coefficients are stored constant term first. The canonical form of the
//! zero polynomial is an empty coefficient vector; all constructors strip
//! trailing zeros so equality is plain coefficient-wise comparison.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Exact division left a nonzero remainder.
    #[error("polynomial division is not exact (nonzero remainder)")]
    NonDivisible,
    /// A rational polynomial was required to be integral but is not.
    #[error("polynomial has a non-integer coefficient at degree {0}")]
    NotIntegral(usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Dense polynomial with arbitrary-precision integer coefficients,
/// constant term first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Dense polynomial with exact rational coefficients, constant term first.
/// Every coefficient is kept in lowest terms by `BigRational` itself.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn trim_int(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

fn trim_rat(mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs: trim_int(coeffs) }
    }

    /// Convenience constructor from machine integers, constant term first.
    pub fn from_coeffs<I: Into<BigInt>>(coeffs: Vec<I>) -> Self {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial X.
    pub fn x() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of X^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Schoolbook product; degrees stay small enough here that nothing
    /// fancier is warranted.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails with `NonDivisible` when the
    /// remainder is nonzero. Division runs over the rationals so non-monic
    /// divisors are handled, and the quotient is checked to be integral.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (q, r) = RatPoly::from(self).div_rem(&RatPoly::from(divisor))?;
        if !r.is_zero() {
            return Err(PolyError::NonDivisible);
        }
        q.to_int_poly().map_err(|_| PolyError::NonDivisible)
    }

    /// Exact evaluation at an integer point by Horner's rule.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Floating Horner evaluation. Coefficients that overflow f64 saturate
    /// to infinity; callers working with such polynomials should use the
    /// scaled conversion in the root finder instead.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + big_to_f64(c);
        }
        acc
    }

    /// Expanded `self(sX + t)` over the rationals.
    pub fn compose_linear(&self, s: &BigRational, t: &BigRational) -> RatPoly {
        let lin = RatPoly::new(vec![t.clone(), s.clone()]);
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&RatPoly::constant(BigRational::from(c.clone())));
        }
        acc
    }

    /// `self(X - shift)` for an integer shift, staying in integer arithmetic.
    pub fn shift_var(&self, shift: &BigInt) -> Self {
        let lin = IntPoly::new(vec![-shift.clone(), BigInt::one()]);
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// Largest coefficient magnitude, as f64 bit length surrogate for scaling.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Self { coeffs: trim_rat(coeffs) }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Long division: returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dlen = divisor.coeffs.len();
        let dlead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Self::zero(), Self::new(rem)));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dlen + 1];
        for qi in (0..quot.len()).rev() {
            let lead = rem[qi + dlen - 1].clone();
            if lead.is_zero() {
                continue;
            }
            let q = lead / dlead;
            for (di, dc) in divisor.coeffs.iter().enumerate() {
                rem[qi + di] -= &q * dc;
            }
            quot[qi] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(PolyError::NonDivisible);
        }
        Ok(q)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            let cf = c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN);
            acc = acc * z + cf;
        }
        acc
    }

    /// Defined iff every coefficient has denominator 1.
    pub fn to_int_poly(&self) -> Result<IntPoly, PolyError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return Err(PolyError::NotIntegral(i));
            }
            out.push(c.to_integer());
        }
        Ok(IntPoly::new(out))
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly::new(p.coeffs.iter().map(|c| BigRational::from(c.clone())).collect())
    }
}

impl From<IntPoly> for RatPoly {
    fn from(p: IntPoly) -> Self {
        RatPoly::new(p.coeffs.into_iter().map(BigRational::from).collect())
    }
}

/// The falling factorial (X)_n = X(X-1)...(X-n+1); the constant 1 for n = 0.
pub fn falling_factorial(n: usize) -> IntPoly {
    falling_factorial_shifted(n, &BigInt::zero())
}

/// (X - shift)(X - shift - 1)...(X - shift - n + 1), i.e. the falling
/// factorial evaluated at X - shift.
pub fn falling_factorial_shifted(n: usize, shift: &BigInt) -> IntPoly {
    let mut acc = IntPoly::one();
    for j in 0..n {
        let root = shift + BigInt::from(j);
        acc = acc.mul(&IntPoly::new(vec![-root, BigInt::one()]));
    }
    acc
}

/// Scalar falling factorial (a)_k = a(a-1)...(a-k+1); zero when k > a >= 0.
pub fn falling_factorial_int(a: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= a - BigInt::from(j);
    }
    acc
}

/// The binomial-coefficient polynomial C(X, k) = (X)_k / k!.
pub fn binomial_poly(k: usize) -> RatPoly {
    let mut kfact = BigInt::one();
    for j in 1..=k {
        kfact *= BigInt::from(j);
    }
    RatPoly::from(falling_factorial(k)).scale(&BigRational::new(BigInt::one(), kfact))
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl From<IntPoly> for PolyJson {
    fn from(p: IntPoly) -> Self {
        PolyJson { coeffs: p.coeffs.iter().map(|c| c.to_string()).collect() }
    }
}

impl TryFrom<PolyJson> for IntPoly {
    type Error = String;

    fn try_from(j: PolyJson) -> Result<Self, String> {
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for s in &j.coeffs {
            coeffs.push(s.parse::<BigInt>().map_err(|e| format!("bad coefficient {s:?}: {e}"))?);
        }
        Ok(IntPoly::new(coeffs))
    }
}

fn fmt_poly<C: fmt::Display + Zero + PartialOrd>(
    coeffs: &[C],
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (sign, mag) = match s.strip_prefix('-') {
            Some(m) => ("-", m.to_string()),
            None => ("+", s),
        };
        if first {
            if sign == "-" {
                write!(f, "-")?;
            }
            first = false;
        } else {
            write!(f, " {} ", sign)?;
        }
        match i {
            0 => write!(f, "{mag}")?,
            _ => {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "X")?;
                } else {
                    write!(f, "X^{i}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}
