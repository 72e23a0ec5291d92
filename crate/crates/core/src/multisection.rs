//! Closed forms for the `m`-section of Horadam sequences.
//!
//! For `0 ≤ l < m` the subsequence `H(m·n + l)` is again a Horadam sequence
//! with seeds `(H(l), H(m+l))` and signature `(SUM(r,s;m), −(−s)^m)`, so its
//! generating function has the shared denominator `1 − SUM·x + (−s)^m·x²`.
//! The Chebyshev `S` version is a rational function in `x` whose coefficients
//! are polynomials in `y`, with denominator `1 − R(m,y)·x + x²`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::check::{CheckReport, Counterexample};
use crate::chebyshev::{self, r_poly, s_poly, scaled_eval};
use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, Scalar, UniPoly};
use crate::horadam::{h01_term, h_term, sum_value};
use crate::params::{HoradamSpec, Signature};
use crate::series;

/// Rational generating function in lowest terms with denominator constant
/// term `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalOgf {
    numerator: UniPoly,
    denominator: UniPoly,
}

impl RationalOgf {
    /// Reduces by the polynomial gcd and scales so the denominator has
    /// constant term `1`.
    pub fn new(numerator: UniPoly, denominator: UniPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = numerator.gcd(&denominator);
        let (mut num, mut den) = (numerator, denominator);
        if !g.is_constant() {
            num = num.exact_div(&g)?;
            den = den.exact_div(&g)?;
        }
        let c = den.coeff(0);
        if c.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = c.recip();
        Ok(Self { numerator: num.scale(&inv), denominator: den.scale(&inv) })
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.denominator
    }

    /// `G(x^m)`.
    pub fn inflate(&self, m: usize) -> RationalOgf {
        Self { numerator: self.numerator.inflate(m), denominator: self.denominator.inflate(m) }
    }

    /// `x^k·G(x)`.
    pub fn shift(&self, k: usize) -> RationalOgf {
        Self { numerator: self.numerator.shift(k), denominator: self.denominator.clone() }
    }

    pub fn add(&self, other: &RationalOgf) -> RationalOgf {
        if self.numerator.is_zero() {
            return other.clone();
        }
        if other.numerator.is_zero() {
            return self.clone();
        }
        if self.denominator == other.denominator {
            return Self::new(&self.numerator + &other.numerator, self.denominator.clone())
                .expect("shared denominator with constant term 1");
        }
        let num = &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator);
        let den = &self.denominator * &other.denominator;
        Self::new(num, den).expect("product of denominators with constant term 1")
    }
}

/// `Σ_l x^l·G_l(x^m)` for the `m = sections.len()` parts of a multisection.
///
/// Sums over the shared denominator when the parts have one, reducing once.
pub fn reassemble(sections: &[RationalOgf]) -> RationalOgf {
    let m = sections.len();
    let shared = sections.windows(2).all(|w| w[0].denominator == w[1].denominator);
    match sections.first() {
        None => RationalOgf::new(UniPoly::zero(), UniPoly::one()).expect("constant denominator"),
        Some(first) if shared => {
            let num = sections
                .iter()
                .enumerate()
                .fold(UniPoly::zero(), |acc, (l, g)| &acc + &g.numerator.inflate(m).shift(l));
            RationalOgf::new(num, first.denominator.inflate(m)).expect("inflated denominator keeps constant term 1")
        }
        Some(_) => sections
            .iter()
            .enumerate()
            .map(|(l, g)| g.inflate(m).shift(l))
            .reduce(|a, b| a.add(&b))
            .expect("nonempty"),
    }
}

impl fmt::Display for RationalOgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator.display("x"), self.denominator.display("x"))
    }
}

/// Seeds and signature of part `l` of the `m`-section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionParams {
    pub p_prime: BigInt,
    pub q_prime: BigInt,
    pub r_prime: BigInt,
    pub s_prime: BigInt,
    pub m: u32,
    pub l: u32,
}

impl SectionParams {
    /// The section as a sequence in its own right. `r′` may be zero.
    pub fn derived_spec(&self) -> HoradamSpec {
        let sig = Signature::new(self.r_prime.clone(), self.s_prime.clone())
            .expect("s' = -(-s)^m is nonzero");
        HoradamSpec::with_signature(self.p_prime.clone(), self.q_prime.clone(), sig)
    }
}

pub(crate) fn validate(m: i64, l: i64) -> Result<(u32, u32)> {
    if m < 1 || m > i64::from(u32::MAX) {
        return Err(Error::InvalidModulus(m));
    }
    if l < 0 || l >= m {
        return Err(Error::InvalidPart { m, l });
    }
    Ok((m as u32, l as u32))
}

fn integer(value: Scalar, what: &str) -> BigInt {
    assert!(value.is_integer(), "{what} = {value} is not an integer");
    value.to_integer()
}

/// `−(−s)^m`.
pub fn section_s(sig: &Signature, m: u32) -> BigInt {
    -num_traits::pow(sig.neg_s(), m as usize)
}

pub fn section_params(spec: &HoradamSpec, m: i64, l: i64) -> Result<SectionParams> {
    let (m, l) = validate(m, l)?;
    Ok(SectionParams {
        p_prime: integer(h_term(spec, i64::from(l)), "H(l)"),
        q_prime: integer(h_term(spec, i64::from(m + l)), "H(m+l)"),
        r_prime: sum_value(spec.signature(), m),
        s_prime: section_s(spec.signature(), m),
        m,
        l,
    })
}

/// `(p − (p·r − q)·x) / (1 − r·x − s·x²)`.
pub fn ogf_h(spec: &HoradamSpec) -> RationalOgf {
    let num = UniPoly::from_ints([spec.p().clone(), -(spec.p() * spec.r() - spec.q())]);
    let den = UniPoly::from_ints([BigInt::one(), -spec.r().clone(), -spec.s().clone()]);
    RationalOgf::new(num, den).expect("denominator has constant term 1")
}

/// `[H(l) − (H(l)·SUM − H(m+l))·x] / [1 − SUM·x + (−s)^m·x²]`.
pub fn section_ogf_h(spec: &HoradamSpec, m: i64, l: i64) -> Result<RationalOgf> {
    let params = section_params(spec, m, l)?;
    let hl = &params.p_prime;
    let num = UniPoly::from_ints([hl.clone(), -(hl * &params.r_prime - &params.q_prime)]);
    let den = UniPoly::from_ints([BigInt::one(), -params.r_prime.clone(), -params.s_prime.clone()]);
    RationalOgf::new(num, den)
}

/// Numerator and denominator of a generating function in `x` with
/// coefficients in `Z[y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateOgf {
    pub numerator: BiPoly,
    pub denominator: BiPoly,
}

/// The `S` section generating function for any integer `l`, including the
/// negative parts `l = −1, −2` that appear when deriving the `H` sections.
pub fn gsml_parts(m: u32, l: i64) -> BivariateOgf {
    let m_i = i64::from(m);
    let r = r_poly(m_i);
    let sl = s_poly(l);
    let x_coeff = -&(&(&sl * &r) - &s_poly(m_i + l));
    BivariateOgf {
        numerator: BiPoly::from_x_coeffs(vec![sl, x_coeff]),
        denominator: BiPoly::from_x_coeffs(vec![UniPoly::one(), -&r, UniPoly::one()]),
    }
}

/// `Σ_n S(m·n + l, y)·xⁿ = [S(l) − (S(l)·R(m) − S(m+l))·x] / [1 − R(m)·x + x²]`.
pub fn section_ogf_s(m: i64, l: i64) -> Result<BivariateOgf> {
    let (m, l) = validate(m, l)?;
    Ok(gsml_parts(m, i64::from(l)))
}

/// `c(s,m) = (√−s)^m / √((−s)^m)`, always `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignC(i8);

impl SignC {
    pub fn value(self) -> i8 {
        self.0
    }
}

/// `+1` for `s < 0`; for `s > 0` the period-4 pattern `+1, −1, −1, +1`
/// starting at `m = 1`.
pub fn c_sign(s: &BigInt, m: u32) -> Result<SignC> {
    if s.is_zero() {
        return Err(Error::ZeroParameter("s"));
    }
    if m < 1 {
        return Err(Error::InvalidModulus(i64::from(m)));
    }
    if s.is_negative() {
        return Ok(SignC(1));
    }
    Ok(SignC(match m % 4 {
        1 | 0 => 1,
        _ => -1,
    }))
}

/// `S(m·n + l) = S(m+l)·S(n−1, R(m)) − S(l)·S(n−2, R(m))` in `Z[y]` for
/// `n = 0..=n_max`, plus the `l = 0` form `S(m·n) = S(n, R(m)) + S(m−2)·S(n−1, R(m))`.
pub fn s_section_identity_check(m: i64, l: i64, n_max: u32) -> Result<CheckReport> {
    let (m, l) = validate(m, l)?;
    let (m, l) = (i64::from(m), i64::from(l));
    let mut report = CheckReport::new("s-section");
    let r = r_poly(m);
    let composed = |k: i64| s_poly(k).compose(&r);
    let (s_ml, s_l) = (s_poly(m + l), s_poly(l));
    for n in 0..=i64::from(n_max) {
        let lhs = s_poly(m * n + l);
        let rhs = &(&s_ml * &composed(n - 1)) - &(&s_l * &composed(n - 2));
        report.record(chebyshev::expect_poly(&lhs, &rhs, || {
            Counterexample::new("S(mn+l) != S(m+l)S(n-1,R) - S(l)S(n-2,R)").at_n(n).at_l(l)
        }));
        if l == 0 {
            let rhs0 = &composed(n) + &(&s_poly(m - 2) * &composed(n - 1));
            report.record(chebyshev::expect_poly(&lhs, &rhs0, || {
                Counterexample::new("S(mn) != S(n,R) + S(m-2)S(n-1,R)").at_n(n).at_l(0)
            }));
        }
    }
    Ok(report)
}

/// `H01(m·n + l) = q′·H01(r′,s′;n) + p′·s′·H01(r′,s′;n−1)` with
/// `p′ = H01(l)`, `q′ = H01(m+l)`, `r′ = (√−s)^m R(m, r/√−s)`, `s′ = −(−s)^m`.
/// For `l = 0` also `H01(m·n) = H01(m)·H01(r′,s′;n)`.
pub fn h01_section_check(sig: &Signature, m: i64, l: i64, n_max: u32) -> Result<CheckReport> {
    let (m, l) = validate(m, l)?;
    let (m, l) = (i64::from(m), i64::from(l));
    let mut report = CheckReport::new("h01-section");
    let p1 = h01_term(sig, l);
    let q1 = h01_term(sig, m + l);
    let r1 = integer(chebyshev::scaled_r(sig, m), "r'");
    let s1 = section_s(sig, m as u32);
    let sig1 = Signature::new(r1, s1.clone())?;
    let s1 = Scalar::from_integer(s1);
    for n in 0..=i64::from(n_max) {
        let lhs = h01_term(sig, m * n + l);
        let rhs = &q1 * h01_term(&sig1, n) + &p1 * &s1 * h01_term(&sig1, n - 1);
        report.record(expect_scalar(&lhs, &rhs, || Counterexample::new("H01(mn+l)").at_n(n).at_l(l)));
        if l == 0 {
            let rhs0 = h01_term(sig, m) * h01_term(&sig1, n);
            report.record(expect_scalar(&lhs, &rhs0, || {
                Counterexample::new("H01(mn) != H01(m)H01(r',s';n)").at_n(n).at_l(0)
            }));
        }
    }
    Ok(report)
}

fn expect_scalar(
    got: &Scalar,
    want: &Scalar,
    ctx: impl FnOnce() -> Counterexample,
) -> std::result::Result<(), Counterexample> {
    if got == want {
        Ok(())
    } else {
        let mut c = ctx();
        c.detail = format!("{}: got {got}, expected {want}", c.detail);
        Err(c)
    }
}

/// Both sides of `1 − R(m)x^m + x^{2m} = (1 − yx + x²)·Σ_l x^l·N_l(y, x^m)`,
/// built from the given numerators `N_l` (in `y` and `x`).
pub fn master_identity_sides(m: u32, numerators: &[BiPoly]) -> (BiPoly, BiPoly) {
    let m_us = m as usize;
    let lhs = BiPoly::from_x_coeffs({
        let mut c = vec![UniPoly::zero(); 2 * m_us + 1];
        c[0] = UniPoly::one();
        c[m_us] = -&r_poly(i64::from(m));
        c[2 * m_us] = &c[2 * m_us] + &UniPoly::one();
        c
    });
    let sum = numerators
        .iter()
        .enumerate()
        .fold(BiPoly::zero(), |acc, (l, num)| &acc + &num.inflate_x(m_us).shift_x(l));
    let s_ogf_den = BiPoly::from_x_coeffs(vec![UniPoly::one(), -&UniPoly::var(), UniPoly::one()]);
    (lhs, &s_ogf_den * &sum)
}

/// Checks the master identity with caller-supplied numerators; the closed-form
/// numerators are those of [`section_ogf_s`].
pub fn master_identity_check_with(m: u32, numerators: &[BiPoly]) -> CheckReport {
    let mut report = CheckReport::new("master");
    let (lhs, rhs) = master_identity_sides(m, numerators);
    report.record(match lhs.first_difference(&rhs) {
        None => Ok(()),
        Some((j, k)) => Err(Counterexample::new(format!(
            "x^{j} y^{k}: LHS {} vs RHS {}",
            lhs.coeff(j, k),
            rhs.coeff(j, k)
        ))
        .at_n(i64::from(m))
        .at_coefficient(j)),
    });
    report
}

pub fn master_identity_check(m: i64) -> Result<CheckReport> {
    let (m, _) = validate(m, 0)?;
    let numerators: Vec<BiPoly> =
        (0..i64::from(m)).map(|l| gsml_parts(m, l).numerator).collect();
    Ok(master_identity_check_with(m, &numerators))
}

/// The alternative bisections of `H01` and `H` at index `m`, each both via
/// `SUM` and via scaled `S`/`R` values:
///
/// * `H01(2m+1) = H01(m)·SUM(m+1) + (−s)^m = S̃(m−1)·R̃(m+1) + (−s)^m`
/// * `H01(2m)   = H01(m)·SUM(m)            = S̃(m−1)·R̃(m)`
/// * `H(2m+1)   = H01(m)·(q·SUM(m+1) + p·s·SUM(m)) + (−s)^m·q`
/// * `H(2m)     = SUM(m)·(q·H01(m) + s·p·H01(m−1)) − (−s)^m·p`
///
/// where `S̃(k) = (√−s)^k S(k, r/√−s)` and `R̃` likewise.
pub fn alt_bisection_check(spec: &HoradamSpec, m: u32) -> CheckReport {
    let mut report = CheckReport::new("alt-bisection");
    let sig = spec.signature();
    let mi = i64::from(m);
    let (p, q, s) = (
        Scalar::from_integer(spec.p().clone()),
        Scalar::from_integer(spec.q().clone()),
        Scalar::from_integer(spec.s().clone()),
    );
    let neg_s_m = Scalar::from_integer(num_traits::pow(sig.neg_s(), m as usize));
    let sum_m = Scalar::from_integer(sum_value(sig, m));
    let sum_m1 = Scalar::from_integer(sum_value(sig, m + 1));
    let h01 = |n: i64| h01_term(sig, n);
    let st = |n: i64| chebyshev::scaled_s(sig, n);
    let rt = |n: i64| chebyshev::scaled_r(sig, n);

    let cases: [(&str, Scalar, Scalar); 8] = [
        ("H01(2m+1) via SUM", h01(2 * mi + 1), h01(mi) * &sum_m1 + &neg_s_m),
        ("H01(2m+1) via S,R", h01(2 * mi + 1), st(mi - 1) * rt(mi + 1) + &neg_s_m),
        ("H01(2m) via SUM", h01(2 * mi), h01(mi) * &sum_m),
        ("H01(2m) via S,R", h01(2 * mi), st(mi - 1) * rt(mi)),
        (
            "H(2m+1) via SUM",
            h_term(spec, 2 * mi + 1),
            h01(mi) * (&q * &sum_m1 + &p * &s * &sum_m) + &neg_s_m * &q,
        ),
        (
            "H(2m+1) via S,R",
            h_term(spec, 2 * mi + 1),
            st(mi - 1) * (&q * rt(mi + 1) + &s * &p * rt(mi)) + &neg_s_m * &q,
        ),
        (
            "H(2m) via SUM",
            h_term(spec, 2 * mi),
            &sum_m * (&q * h01(mi) + &s * &p * h01(mi - 1)) - &neg_s_m * &p,
        ),
        (
            "H(2m) via S,R",
            h_term(spec, 2 * mi),
            rt(mi) * (&q * st(mi - 1) + &s * &p * st(mi - 2)) - &neg_s_m * &p,
        ),
    ];
    for (what, lhs, rhs) in &cases {
        report.record(expect_scalar(lhs, rhs, || Counterexample::new(*what).at_n(mi)));
    }
    report
}

/// The `S` section generating function with `y = r/√−s`, `x → (√−s)^m·x` and
/// an overall factor `(√−s)^l`, all of which cancel into exact rationals:
/// returns the numerator and denominator in `x`.
pub fn scaled_gsml(sig: &Signature, m: u32, l: i64) -> Result<(UniPoly, UniPoly)> {
    let parts = gsml_parts(m, l);
    let step = i64::from(m);
    let num = parts
        .numerator
        .x_coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| scaled_eval(c, l + step * j as i64, sig))
        .collect::<Result<Vec<_>>>()?;
    let den = parts
        .denominator
        .x_coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| scaled_eval(c, step * j as i64, sig))
        .collect::<Result<Vec<_>>>()?;
    Ok((UniPoly::from_coeffs(num), UniPoly::from_coeffs(den)))
}

/// Rebuilds the `H` section generating function as
/// `q·(√−s)^(l−1)·GS(m, l−1; (√−s)^m x) + p·s·(√−s)^(l−2)·GS(m, l−2; (√−s)^m x)`
/// and compares its first `n_terms` coefficients with those of
/// [`section_ogf_h`].
pub fn ghml_from_gsml_check(spec: &HoradamSpec, m: i64, l: i64, n_terms: usize) -> Result<CheckReport> {
    let (m, l) = validate(m, l)?;
    let li = i64::from(l);
    let mut report = CheckReport::new("ghml-from-gsml");
    let sig = spec.signature();
    let (num_q, den_q) = scaled_gsml(sig, m, li - 1)?;
    let (num_p, den_p) = scaled_gsml(sig, m, li - 2)?;
    if den_q != den_p {
        return Err(Error::Invariant("scaled section denominators differ".into()));
    }
    let q = Scalar::from_integer(spec.q().clone());
    let ps = Scalar::from_integer(spec.p() * spec.s());
    let num = &num_q.scale(&q) + &num_p.scale(&ps);
    let rebuilt = RationalOgf::new(num, den_q)?;
    let closed = section_ogf_h(spec, i64::from(m), li)?;
    let a = series::expand(&rebuilt, n_terms)?;
    let b = series::expand(&closed, n_terms)?;
    for (i, (x, y)) in a.coeffs.iter().zip(&b.coeffs).enumerate() {
        report.record(expect_scalar(x, y, || {
            Counterexample::new("series coefficient").at_l(li).at_coefficient(i)
        }));
    }
    Ok(report)
}
