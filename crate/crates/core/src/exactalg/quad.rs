use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// `a + b·√D` with rational `a`, `b` and a fixed nonzero integer `D`.
///
/// `√D` is kept as a formal symbol even when `D` is a perfect square, so a
/// product of two nonzero elements can vanish in that case; use
/// [`normalize`](Self::normalize) to collapse to a rational when possible.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExtNumber {
    a: Scalar,
    b: Scalar,
    d: BigInt,
}

impl QuadExtNumber {
    pub fn new(a: Scalar, b: Scalar, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DegenerateDiscriminant);
        }
        Ok(Self { a, b, d })
    }

    pub fn rational(a: Scalar, d: BigInt) -> Result<Self> {
        Self::new(a, Scalar::zero(), d)
    }

    /// `√D` itself.
    pub fn sqrt_d(d: BigInt) -> Result<Self> {
        Self::new(Scalar::zero(), Scalar::one(), d)
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// `a² − D·b²`.
    pub fn norm(&self) -> Scalar {
        &self.a * &self.a - Scalar::from_integer(self.d.clone()) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conjugate();
        Ok(Self { a: c.a / &n, b: c.b / &n, d: self.d.clone() })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self { a: Scalar::one(), b: Scalar::zero(), d: self.d.clone() };
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Collapses to a rational when the irrational part vanishes or `D` is a
    /// perfect square.
    pub fn normalize(&self) -> Option<Scalar> {
        if self.b.is_zero() {
            return Some(self.a.clone());
        }
        if self.d.is_positive() {
            let root = self.d.sqrt();
            if &root * &root == self.d {
                return Some(&self.a + &self.b * Scalar::from_integer(root));
            }
        }
        None
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(self.d, other.d, "mixing elements of Q(√{}) and Q(√{})", self.d, other.d);
    }
}

impl fmt::Display for QuadExtNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}

impl<'a> Add<&'a QuadExtNumber> for &'a QuadExtNumber {
    type Output = QuadExtNumber;
    fn add(self, rhs: &QuadExtNumber) -> QuadExtNumber {
        self.check_same_field(rhs);
        QuadExtNumber { a: &self.a + &rhs.a, b: &self.b + &rhs.b, d: self.d.clone() }
    }
}

impl<'a> Sub<&'a QuadExtNumber> for &'a QuadExtNumber {
    type Output = QuadExtNumber;
    fn sub(self, rhs: &QuadExtNumber) -> QuadExtNumber {
        self.check_same_field(rhs);
        QuadExtNumber { a: &self.a - &rhs.a, b: &self.b - &rhs.b, d: self.d.clone() }
    }
}

impl<'a> Mul<&'a QuadExtNumber> for &'a QuadExtNumber {
    type Output = QuadExtNumber;
    fn mul(self, rhs: &QuadExtNumber) -> QuadExtNumber {
        self.check_same_field(rhs);
        let d = Scalar::from_integer(self.d.clone());
        QuadExtNumber {
            a: &self.a * &rhs.a + d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
            d: self.d.clone(),
        }
    }
}

impl Neg for &QuadExtNumber {
    type Output = QuadExtNumber;
    fn neg(self) -> QuadExtNumber {
        QuadExtNumber { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
}

/// `H01(r,s;n)` from the closed form `(λⁿ − μⁿ)/(λ − μ)` with
/// `λ = (r − √D)/2`, `μ = −s/λ` and `D = r² + 4s`, evaluated inside `Q(√D)`.
pub fn quad_binet(r: &BigInt, s: &BigInt, n: u64) -> Result<Scalar> {
    if r.is_zero() {
        return Err(Error::ZeroParameter("r"));
    }
    if s.is_zero() {
        return Err(Error::ZeroParameter("s"));
    }
    let d = r * r + BigInt::from(4) * s;
    if d.is_zero() {
        return Err(Error::DegenerateDiscriminant);
    }
    let half = Scalar::new(BigInt::one(), BigInt::from(2));
    let lambda = QuadExtNumber::new(
        Scalar::from_integer(r.clone()) * &half,
        -half,
        d.clone(),
    )?;
    let minus_s = QuadExtNumber::rational(Scalar::from_integer(-s), d)?;
    let mu = &minus_s * &lambda.inverse()?;
    let value = &(&lambda.pow(n) - &mu.pow(n)) * &(&lambda - &mu).inverse()?;
    if !value.b.is_zero() {
        return Err(Error::Invariant(format!(
            "closed form left an irrational part {} for r={r}, s={s}, n={n}",
            value.b
        )));
    }
    Ok(value.a)
}
