use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Scalar, UniPoly};

/// Polynomial in `x` whose coefficients are polynomials in `y`;
/// `coeffs[j]` is the coefficient of `x^j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_x_coeffs(vec![UniPoly::one()])
    }

    pub fn from_x_coeffs(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `c(y)·x^j`.
    pub fn term(c: UniPoly, j: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(); j + 1];
        coeffs[j] = c;
        Self::from_x_coeffs(coeffs)
    }

    pub fn x_coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn x_coeff(&self, j: usize) -> UniPoly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^j y^k`.
    pub fn coeff(&self, j: usize, k: usize) -> Scalar {
        self.coeffs.get(j).map(|c| c.coeff(k)).unwrap_or_else(Scalar::zero)
    }

    /// `self(y, x^m)`.
    pub fn inflate_x(&self, m: usize) -> BiPoly {
        assert!(m >= 1, "inflate factor must be positive");
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); (self.coeffs.len() - 1) * m + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * m] = c.clone();
        }
        Self { coeffs }
    }

    /// Multiplication by `x^k`.
    pub fn shift_x(&self, k: usize) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Reduction modulo `x^n`.
    pub fn truncate_x(&self, n: usize) -> BiPoly {
        Self::from_x_coeffs(self.coeffs.iter().take(n).cloned().collect())
    }

    /// First `(x power, y power)` at which `self` and `other` differ.
    pub fn first_difference(&self, other: &BiPoly) -> Option<(usize, usize)> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find_map(|j| {
            self.x_coeff(j)
                .first_difference(&other.x_coeff(j))
                .map(|k| (j, k))
        })
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        BiDisplay(self)
    }
}

struct BiDisplay<'a>(&'a BiPoly);

impl fmt::Display for BiDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.0.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({})", c.display("y"))?,
                1 => write!(f, "({})*x", c.display("y"))?,
                _ => write!(f, "({})*x^{j}", c.display("y"))?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self.display())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_x_coeffs((0..n).map(|j| &self.x_coeff(j) + &rhs.x_coeff(j)).collect())
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_x_coeffs((0..n).map(|j| &self.x_coeff(j) - &rhs.x_coeff(j)).collect())
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BiPoly::from_x_coeffs(coeffs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}
