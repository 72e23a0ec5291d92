//! Horadam sequences `H(p,q;r,s;n)` over all integer `n`, the section
//! signature `SUM(r,s;m)` and the Lucas-polynomial triangle behind it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::chebyshev;
use crate::exactalg::{Scalar, UniPoly};
use crate::params::{HoradamSpec, Signature};

/// `H01(r,s;n)` for `n ≥ 0`, iteratively from the seeds `0, 1`.
pub fn h01_int(sig: &Signature, n: u64) -> BigInt {
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = sig.r() * &cur + sig.s() * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    prev
}

/// `H01(r,s;n)` for every integer `n`; negative indices use
/// `H01(−n) = −(−s)^(−n)·H01(n)` and are rational in general.
pub fn h01_term(sig: &Signature, n: i64) -> Scalar {
    if n >= 0 {
        return Scalar::from_integer(h01_int(sig, n as u64));
    }
    let neg_s = Scalar::from_integer(sig.neg_s());
    let exp = i32::try_from(n).expect("index fits in i32");
    -neg_s.pow(exp) * Scalar::from_integer(h01_int(sig, n.unsigned_abs()))
}

/// `H(p,q;r,s;n) = q·H01(n) + p·s·H01(n−1)`.
pub fn h_term(spec: &HoradamSpec, n: i64) -> Scalar {
    let sig = spec.signature();
    Scalar::from_integer(spec.q().clone()) * h01_term(sig, n)
        + Scalar::from_integer(spec.p() * spec.s()) * h01_term(sig, n - 1)
}

/// First `count` terms straight from the seeds and the recurrence.
pub fn terms(spec: &HoradamSpec, count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let (mut a, mut b) = (spec.p().clone(), spec.q().clone());
    for _ in 0..count {
        let next = spec.r() * &b + spec.s() * &a;
        out.push(std::mem::replace(&mut a, std::mem::replace(&mut b, next)));
    }
    out
}

/// `SUM(r,s;m)` along each of its four independent routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumRoutes {
    /// `Σ_k T(m,k)·s^k·r^(m−2k)` over row `m` of the Lucas triangle.
    pub triangle: Scalar,
    /// `H(2,r;r,s;m)`.
    pub lucas: Scalar,
    /// `s·H01(m−1) + H01(m+1)`.
    pub fundamental: Scalar,
    /// `(√−s)^m·R(m, r/√−s)`.
    pub chebyshev: Scalar,
}

impl SumRoutes {
    pub fn agree(&self) -> bool {
        self.triangle == self.lucas
            && self.lucas == self.fundamental
            && self.fundamental == self.chebyshev
    }
}

pub fn sum_routes(sig: &Signature, m: u32) -> SumRoutes {
    let triangle = triangle_sum(&triangle_row(m as usize).entries, sig, m);
    let m = i64::from(m);
    let lucas_spec = HoradamSpec::with_signature(2, sig.r().clone(), sig.clone());
    SumRoutes {
        triangle: Scalar::from_integer(triangle),
        lucas: h_term(&lucas_spec, m),
        fundamental: Scalar::from_integer(sig.s().clone()) * h01_term(sig, m - 1) + h01_term(sig, m + 1),
        chebyshev: chebyshev::scaled_r(sig, m),
    }
}

/// `SUM(r,s;m) = Σ_k T(m,k)·s^k·r^(m−2k)`, the first signature component of
/// the `m`-section. The other routes of [`sum_routes`] are cross-checks.
pub fn sum_value(sig: &Signature, m: u32) -> BigInt {
    triangle_sum(&triangle_row_recurrence(m as usize), sig, m)
}

fn triangle_sum(row: &[BigInt], sig: &Signature, m: u32) -> BigInt {
    row.iter()
        .enumerate()
        .map(|(k, t)| {
            t * num_traits::pow(sig.s().clone(), k) * num_traits::pow(sig.r().clone(), m as usize - 2 * k)
        })
        .sum()
}

/// Row `n` of the Lucas-polynomial triangle, `T(n,k)` for `k = 0..=⌊n/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRow {
    pub n: usize,
    pub entries: Vec<BigInt>,
}

impl TriangleRow {
    /// `P(n, y) = Σ_k T(n,k)·y^k`.
    pub fn polynomial(&self) -> UniPoly {
        UniPoly::from_ints(self.entries.iter().cloned())
    }
}

/// Rows up to which [`triangle_row`] also checks against the generating
/// function `(2 − x)/(1 − x − y·x²)`.
pub const TRIANGLE_OGF_HORIZON: usize = 60;

/// Row `n`, computed from the recurrence and the factorial formula and, up to
/// [`TRIANGLE_OGF_HORIZON`], the generating function.
///
/// # Panics
///
/// If the routes disagree.
pub fn triangle_row(n: usize) -> TriangleRow {
    let entries = triangle_row_recurrence(n);
    assert_eq!(entries, triangle_row_explicit(n), "triangle routes disagree in row {n}");
    if n <= TRIANGLE_OGF_HORIZON {
        assert_eq!(entries, triangle_row_from_ogf(n), "triangle g.f. disagrees in row {n}");
    }
    TriangleRow { n, entries }
}

/// `T(n,k) = T(n−1,k) + T(n−2,k−1)` from rows `[2]` and `[1]`.
pub fn triangle_row_recurrence(n: usize) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut cur: Vec<BigInt> = vec![BigInt::one()];
    if n == 0 {
        return prev;
    }
    for row in 2..=n {
        let next = (0..=row / 2)
            .map(|k| {
                let a = cur.get(k).cloned().unwrap_or_default();
                let b = if k >= 1 { prev.get(k - 1).cloned().unwrap_or_default() } else { BigInt::zero() };
                a + b
            })
            .collect();
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `T(n,k) = n·(n−1−k)! / (k!·(n−2k)!)` for `n ≥ 1`, `T(0,0) = 2`.
pub fn triangle_row_explicit(n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::from(2)];
    }
    (0..=n / 2)
        .map(|k| {
            let num = BigInt::from(n) * factorial(n - 1 - k);
            let den = factorial(k) * factorial(n - 2 * k);
            let (q, r) = num.div_rem(&den);
            assert!(r.is_zero(), "T({n},{k}) is not an integer");
            q
        })
        .collect()
}

/// Coefficient of `x^n y^k` in `(2 − x)·Σ_j (x + y·x²)^j`, i.e.
/// `2·C(n−k, k) − C(n−1−k, k)`.
pub fn triangle_row_from_ogf(n: usize) -> Vec<BigInt> {
    (0..=n / 2)
        .map(|k| {
            let first = BigInt::from(2) * binomial(n - k, k);
            let second = if n > k { binomial(n - 1 - k, k) } else { BigInt::zero() };
            first - second
        })
        .collect()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}
