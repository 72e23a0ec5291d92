//! Chebyshev `S` polynomials (`S(n,y) = U(n,y/2)`) and their monic first-kind
//! companions `R(n,y) = S(n,y) − S(n−2,y) = 2·T(n,y/2)`, together with the
//! exact identities they satisfy and their "scaled" integer evaluations
//! `(√−s)ⁿ·P(r/√−s)`.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::check::{CheckReport, Counterexample};
use crate::error::{Error, Result};
use crate::exactalg::{int, Scalar, UniPoly};
use crate::params::Signature;

/// `S(0..=max, y)` by the three-term recurrence.
pub fn s_polys(max: usize) -> Vec<UniPoly> {
    let y = UniPoly::var();
    let mut out = Vec::with_capacity(max + 1);
    out.push(UniPoly::one());
    if max >= 1 {
        out.push(y.clone());
    }
    for n in 2..=max {
        let next = &(&y * &out[n - 1]) - &out[n - 2];
        out.push(next);
    }
    out
}

/// `S(n, y)` for any integer `n`, with `S(−1) = 0` and `S(n) = −S(−n−2)` for
/// `n ≤ −2`.
pub fn s_poly(n: i64) -> UniPoly {
    match n {
        -1 => UniPoly::zero(),
        n if n < -1 => -s_poly(-n - 2),
        n => cached_s(n as usize),
    }
}

/// `S(n, y)` for `n ≥ 0` from a process-wide table grown on demand.
fn cached_s(n: usize) -> UniPoly {
    static TABLE: OnceLock<Mutex<Vec<UniPoly>>> = OnceLock::new();
    let mut table = TABLE
        .get_or_init(|| Mutex::new(s_polys(1)))
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner());
    let y = UniPoly::var();
    while table.len() <= n {
        let k = table.len();
        let next = &(&y * &table[k - 1]) - &table[k - 2];
        table.push(next);
    }
    table[n].clone()
}

/// `R(n, y) = S(n, y) − S(n−2, y)`.
pub fn r_poly(n: i64) -> UniPoly {
    &s_poly(n) - &s_poly(n - 2)
}

/// `(√−s)^index · P(r/√−s)` without radicals: `Σ c_k r^k (−s)^((index−k)/2)`.
///
/// Every nonzero coefficient must sit at a degree with the parity of `index`;
/// negative exponents of `−s` give exact rationals.
pub fn scaled_eval(poly: &UniPoly, index: i64, sig: &Signature) -> Result<Scalar> {
    let r = sig.r();
    let neg_s = Scalar::from_integer(sig.neg_s());
    let mut total = Scalar::zero();
    for (k, c) in poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let gap = index - k as i64;
        if gap.rem_euclid(2) != 0 {
            return Err(Error::ParityMismatch { index, degree: k });
        }
        let rk = Scalar::from_integer(num_traits::pow(r.clone(), k));
        let exp = i32::try_from(gap / 2).expect("exponent fits in i32");
        total += c * rk * neg_s.pow(exp);
    }
    Ok(total)
}

/// `(√−s)ⁿ·S(n, r/√−s)`, which equals `H01(r,s;n+1)`.
pub fn scaled_s(sig: &Signature, n: i64) -> Scalar {
    scaled_eval(&s_poly(n), n, sig).expect("S(n) has the parity of n")
}

/// `(√−s)ⁿ·R(n, r/√−s)`, the trace of the `n`-th transfer-matrix power.
pub fn scaled_r(sig: &Signature, n: i64) -> Scalar {
    scaled_eval(&r_poly(n), n, sig).expect("R(n) has the parity of n")
}

/// `S(n)² − S(n−1)·S(n+1) = 1` as a polynomial identity.
pub fn cassini_check(n: i64) -> CheckReport {
    let mut report = CheckReport::new("cassini");
    let lhs = &(&s_poly(n) * &s_poly(n)) - &(&s_poly(n - 1) * &s_poly(n + 1));
    report.record(expect_poly(&lhs, &UniPoly::one(), || {
        Counterexample::new("S(n)^2 - S(n-1)S(n+1) != 1").at_n(n)
    }));
    report
}

/// The alternative bisection identities:
/// `S(2m−1) = S(m−1)·R(m)`, `S(2m−2) = 1 + S(m−2)·R(m)` and
/// `S(2m) = S(m)·R(m) − 1`.
pub fn bisection_identities_check(m: i64) -> CheckReport {
    let mut report = CheckReport::new("bisection");
    let r = r_poly(m);
    let one = UniPoly::one();
    let cases = [
        (s_poly(2 * m - 1), &s_poly(m - 1) * &r, "S(2m-1) = S(m-1)R(m)"),
        (s_poly(2 * m - 2), &one + &(&s_poly(m - 2) * &r), "S(2m-2) = 1 + S(m-2)R(m)"),
        (s_poly(2 * m), &(&s_poly(m) * &r) - &one, "S(2m) = S(m)R(m) - 1"),
    ];
    for (lhs, rhs, what) in &cases {
        report.record(expect_poly(lhs, rhs, || Counterexample::new(*what).at_n(m)));
    }
    report
}

pub(crate) fn expect_poly(
    got: &UniPoly,
    want: &UniPoly,
    ctx: impl FnOnce() -> Counterexample,
) -> std::result::Result<(), Counterexample> {
    match got.first_difference(want) {
        None => Ok(()),
        Some(i) => {
            let mut c = ctx().at_coefficient(i);
            c.detail = format!("{}: coefficient {} is {} but expected {}", c.detail, i, got.coeff(i), want.coeff(i));
            Err(c)
        }
    }
}

/// Exact 2×2 integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[BigInt; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        Self([[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]])
    }

    /// `[[r, s], [1, 0]]`.
    pub fn transfer(sig: &Signature) -> Self {
        Self([[sig.r().clone(), sig.s().clone()], [BigInt::one(), BigInt::zero()]])
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn trace(&self) -> BigInt {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> BigInt {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }
}

/// Compares `Qⁿ`, built by repeated multiplication, with its Chebyshev form
/// `[[S̃(n), s·S̃(n−1)], [S̃(n−1), s·S̃(n−2)]]` where `S̃` is [`scaled_s`]; also
/// checks `tr Qⁿ = (√−s)ⁿ R(n, r/√−s)` and `det Qⁿ = (−s)ⁿ`.
pub fn q_matrix_power_check(sig: &Signature, n: u32) -> CheckReport {
    let mut report = CheckReport::new("q-matrix");
    let q = Mat2::transfer(sig);
    let power = (0..n).fold(Mat2::identity(), |acc, _| acc.mul(&q));
    let n_i = i64::from(n);
    let s = Scalar::from_integer(sig.s().clone());
    let expected = [
        [scaled_s(sig, n_i), &s * scaled_s(sig, n_i - 1)],
        [scaled_s(sig, n_i - 1), &s * scaled_s(sig, n_i - 2)],
    ];
    for i in 0..2 {
        for j in 0..2 {
            let got = Scalar::from_integer(power.0[i][j].clone());
            report.record(if got == expected[i][j] {
                Ok(())
            } else {
                Err(Counterexample::new(format!(
                    "entry ({i},{j}) of Q^n is {got}, Chebyshev form gives {}",
                    expected[i][j]
                ))
                .at_n(n_i))
            });
        }
    }
    let trace = Scalar::from_integer(power.trace());
    report.record(if trace == scaled_r(sig, n_i) {
        Ok(())
    } else {
        Err(Counterexample::new(format!("trace {trace} != scaled R(n)")).at_n(n_i))
    });
    let det = power.det();
    report.record(if det == num_traits::pow(sig.neg_s(), n as usize) {
        Ok(())
    } else {
        Err(Counterexample::new(format!("det {det} != (-s)^n")).at_n(n_i))
    });
    report
}

/// Classical first-kind `T(n, x)` by `T(n) = 2x·T(n−1) − T(n−2)`; used only to
/// cross-check `R(n, y) = 2·T(n, y/2)`.
pub fn classical_t(n: usize) -> UniPoly {
    let two_x = UniPoly::monomial(int(2), 1);
    let (mut prev, mut cur) = (UniPoly::one(), UniPoly::var());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
