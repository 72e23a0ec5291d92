//! Truncated power-series oracle for rational generating functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Scalar, UniPoly};
use crate::multisection::RationalOgf;

/// Default number of terms for series comparisons.
pub const DEFAULT_TERMS: usize = 64;

/// First coefficients of a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub coeffs: Vec<Scalar>,
    pub source: String,
}

impl SeriesPrefix {
    pub fn new(coeffs: Vec<Scalar>, source: impl Into<String>) -> Self {
        Self { coeffs, source: source.into() }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_poly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }
}

/// `numerator / denominator` to `n` coefficients by long division.
pub fn expand_ratio(numerator: &UniPoly, denominator: &UniPoly, n: usize) -> Result<Vec<Scalar>> {
    let d0 = denominator.coeff(0);
    if d0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let den = denominator.coeffs();
    if d0.is_one() && den.iter().chain(numerator.coeffs()).all(|c| c.is_integer()) {
        return Ok(expand_integral(numerator, den, n));
    }
    let mut out: Vec<Scalar> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = numerator.coeff(i);
        for (j, d) in den.iter().enumerate().skip(1).take(i) {
            acc -= d * &out[i - j];
        }
        out.push(acc / &d0);
    }
    Ok(out)
}

/// Same recurrence in integers when no division is needed.
fn expand_integral(numerator: &UniPoly, den: &[Scalar], n: usize) -> Vec<Scalar> {
    let den: Vec<BigInt> = den.iter().map(|c| c.to_integer()).collect();
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = numerator.coeff(i).to_integer();
        for (j, d) in den.iter().enumerate().skip(1).take(i) {
            acc -= d * &out[i - j];
        }
        out.push(acc);
    }
    out.into_iter().map(Scalar::from_integer).collect()
}

pub fn expand(ogf: &RationalOgf, n: usize) -> Result<SeriesPrefix> {
    let coeffs = expand_ratio(ogf.numerator(), ogf.denominator(), n)?;
    Ok(SeriesPrefix::new(coeffs, format!("expand({ogf})")))
}

/// `a(m·n + l)` for every `n` the prefix can supply.
pub fn section_terms(prefix: &SeriesPrefix, m: usize, l: usize) -> Result<SeriesPrefix> {
    if m == 0 {
        return Err(Error::InvalidModulus(0));
    }
    if l >= m {
        return Err(Error::InvalidPart { m: m as i64, l: l as i64 });
    }
    let coeffs = prefix.coeffs.iter().skip(l).step_by(m).cloned().collect();
    Ok(SeriesPrefix::new(coeffs, format!("section({}, m={m}, l={l})", prefix.source)))
}

/// True iff `numerator ≡ denominator · Σ prefix_n xⁿ (mod x^N)` with `N` the
/// prefix length.
pub fn certify_ogf(ogf: &RationalOgf, prefix: &SeriesPrefix) -> bool {
    let n = prefix.len();
    let product = (ogf.denominator() * &prefix.as_poly()).truncate(n);
    product == ogf.numerator().truncate(n)
}
