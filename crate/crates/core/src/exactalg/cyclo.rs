//! The cyclotomic field `Q(ζ_m)`, elements stored as residues modulo `Φ_m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Scalar, UniPoly};
use crate::error::{Error, Result};

/// `Φ_m`, the minimal polynomial of a primitive `m`-th root of unity.
///
/// Obtained by exact division of `x^m − 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(m: i64) -> Result<UniPoly> {
    if m < 1 {
        return Err(Error::InvalidConductor(m));
    }
    let m = m as usize;
    let mut phi = UniPoly::from_coeffs({
        let mut c = vec![Scalar::zero(); m + 1];
        c[0] = -Scalar::one();
        c[m] = Scalar::one();
        c
    });
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        phi = phi.exact_div(&cyclotomic_polynomial(d as i64)?)?;
    }
    Ok(phi)
}

/// Shared context for one conductor `m`.
#[derive(PartialEq, Eq, Debug)]
pub struct CyclotomicField {
    m: u64,
    modulus: UniPoly,
}

impl CyclotomicField {
    pub fn new(m: i64) -> Result<Arc<Self>> {
        let modulus = cyclotomic_polynomial(m)?;
        Ok(Arc::new(Self { m: m as u64, modulus }))
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    /// `φ(m)`, the degree of the field over the rationals.
    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("cyclotomic polynomials are nonzero")
    }

    pub fn element(self: &Arc<Self>, residue: &UniPoly) -> CyclotomicNumber {
        CyclotomicNumber { field: Arc::clone(self), residue: self.reduce(residue.coeffs().to_vec()) }
    }

    /// Remainder modulo the monic integral `Φ_m`, without divisions.
    fn reduce(&self, mut coeffs: Vec<Scalar>) -> UniPoly {
        let phi = self.modulus.coeffs();
        let d = phi.len() - 1;
        while coeffs.len() > d {
            let c = coeffs.pop().expect("longer than the modulus");
            if c.is_zero() {
                continue;
            }
            let base = coeffs.len() - d;
            for (j, f) in phi[..d].iter().enumerate() {
                if !f.is_zero() {
                    coeffs[base + j] -= &c * f;
                }
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn rational(self: &Arc<Self>, c: Scalar) -> CyclotomicNumber {
        CyclotomicNumber { field: Arc::clone(self), residue: UniPoly::constant(c) }
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicNumber {
        self.rational(Scalar::zero())
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicNumber {
        self.rational(Scalar::one())
    }

    /// `ζ_m^k` for any integer `k` (taken modulo `m`).
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CyclotomicNumber {
        let e = k.rem_euclid(self.m as i64) as usize;
        self.element(&UniPoly::monomial(Scalar::one(), e))
    }
}

/// Element of `Q(ζ_m)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    residue: UniPoly,
}

impl CyclotomicNumber {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.m
    }

    /// Representative of degree below `φ(m)`, as a polynomial in `ζ_m`.
    pub fn residue(&self) -> &UniPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.residue.is_one()
    }

    /// The rational value, when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Scalar> {
        match self.residue.degree() {
            None => Some(Scalar::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { field: Arc::clone(&self.field), residue: self.residue.scale(c) }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// residue and `Φ_m`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, u, _) = self.residue.ext_gcd(&self.field.modulus);
        if !g.is_one() {
            return Err(Error::Invariant(format!(
                "gcd of residue and cyclotomic polynomial is {:?}",
                g
            )));
        }
        Ok(self.field.element(&u))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.m, other.field.m,
            "mixing elements of different cyclotomic fields"
        );
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.residue == other.residue
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = format!("z{}", self.field.m);
        let shown = self.residue.display(&var).to_string();
        f.write_str(&shown)
    }
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_same_field(rhs);
        CyclotomicNumber { field: Arc::clone(&self.field), residue: &self.residue + &rhs.residue }
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_same_field(rhs);
        CyclotomicNumber { field: Arc::clone(&self.field), residue: &self.residue - &rhs.residue }
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_same_field(rhs);
        self.field.element(&(&self.residue * &rhs.residue))
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { field: Arc::clone(&self.field), residue: -&self.residue }
    }
}

/// Convenience for the inverse of a nonzero element; see [`CyclotomicNumber::inverse`].
pub fn cyclo_invert(z: &CyclotomicNumber) -> Result<CyclotomicNumber> {
    z.inverse()
}

/// Euler's totient, for cross-checking `deg Φ_m`.
pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut out = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}
