//! Multisection by roots of unity over `Q(ζ_m)`.
//!
//! With `w_k = ζ_m^k` the matrix `V_m(x)` with entries `(w_k·x)^l` maps the
//! sections of `G` to the values `G(w_k·x)`. Its inverse is built entry by
//! entry from elementary symmetric functions of the other nodes, and row `l`
//! applied to `G(w_k·x^{1/m})` gives the `l`-th section. Nothing here uses the
//! closed forms of [`crate::multisection`], so agreement between the two is a
//! real cross-check.

use std::sync::Arc;

use itertools::Itertools;

use crate::check::{CheckReport, Counterexample};
use crate::error::{Error, Result};
use crate::exactalg::{CyclotomicField, CyclotomicNumber, Scalar, UniPoly};
use crate::multisection::RationalOgf;
use crate::series;

/// `ζ_m^k` with `0 ≤ k < m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootOfUnity {
    pub m: u32,
    pub k: u32,
    pub value: CyclotomicNumber,
}

pub fn root_of_unity(m: i64, k: i64) -> Result<RootOfUnity> {
    let field = CyclotomicField::new(m)?;
    if k < 0 || k >= m {
        return Err(Error::InvalidPart { m, l: k });
    }
    Ok(RootOfUnity { m: m as u32, k: k as u32, value: field.zeta_pow(k) })
}

/// `V_m(x)⁻¹`; entry `(l, j)` is `scalars[l][j]·x^{row_x_power[l]}` with
/// `row_x_power[l] = −l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VandermondeInverse {
    pub m: u32,
    pub scalars: Vec<Vec<CyclotomicNumber>>,
    pub row_x_power: Vec<i64>,
}

/// Coefficients `e_0..=e_n` of `∏(1 + v·t)`, i.e. the elementary symmetric
/// functions of `values`.
pub fn elementary_symmetric(field: &Arc<CyclotomicField>, values: &[CyclotomicNumber]) -> Vec<CyclotomicNumber> {
    let mut e = vec![field.one()];
    for v in values {
        let mut next = e.clone();
        next.push(field.zero());
        for (k, c) in e.iter().enumerate() {
            next[k + 1] = &next[k + 1] + &(c * v);
        }
        e = next;
    }
    e
}

/// `e_k` as the sum over all `k`-subsets; exponential, for cross-checking.
pub fn elementary_symmetric_enumerated(
    field: &Arc<CyclotomicField>,
    values: &[CyclotomicNumber],
    k: usize,
) -> CyclotomicNumber {
    values
        .iter()
        .combinations(k)
        .map(|subset| subset.into_iter().fold(field.one(), |acc, v| &acc * v))
        .fold(field.zero(), |acc, t| &acc + &t)
}

/// Entry `(l, j)` is `(−1)^l·x^{m−1−l}·e_{m−1−l}(P_j) / (x^{m−1}·∏_{i≠j}(w_i − w_j))`
/// where `P_j` lists the nodes other than `w_j`.
pub fn build_inverse(m: i64) -> Result<VandermondeInverse> {
    let field = CyclotomicField::new(m)?;
    let n = m as usize;
    let nodes: Vec<CyclotomicNumber> = (0..m).map(|k| field.zeta_pow(k)).collect();
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let others: Vec<CyclotomicNumber> =
            nodes.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, v)| v.clone()).collect();
        let e = elementary_symmetric(&field, &others);
        let dn = others.iter().fold(field.one(), |acc, w| &acc * &(w - &nodes[j]));
        let dn_inv = dn.inverse()?;
        let column: Vec<CyclotomicNumber> = (0..n)
            .map(|l| {
                let num = &e[n - 1 - l] * &dn_inv;
                if l % 2 == 1 { -&num } else { num }
            })
            .collect();
        columns.push(column);
    }
    let scalars = (0..n).map(|l| (0..n).map(|j| columns[j][l].clone()).collect()).collect();
    Ok(VandermondeInverse { m: m as u32, scalars, row_x_power: (0..m).map(|l| -l).collect() })
}

/// `V_m⁻¹·V_m = I`: the x-powers cancel, leaving `Σ_j inv[l][j]·w_j^{l'} = δ(l, l')`.
pub fn forward_identity_check(inv: &VandermondeInverse) -> CheckReport {
    let mut report = CheckReport::new("vandermonde-identity");
    let field = inv.scalars[0][0].field().clone();
    let m = inv.m as i64;
    for (l, row) in inv.scalars.iter().enumerate() {
        for lp in 0..m {
            let entry = row
                .iter()
                .enumerate()
                .fold(field.zero(), |acc, (j, c)| &acc + &(c * &field.zeta_pow(j as i64 * lp)));
            let want = if l as i64 == lp { field.one() } else { field.zero() };
            let x_power = inv.row_x_power[l] + lp;
            let ok = entry == want && (l as i64 != lp || x_power == 0);
            report.record(if ok {
                Ok(())
            } else {
                Err(Counterexample::new(format!("(V^-1 V)[{l}][{lp}] = {entry}")).at_l(l as i64))
            });
        }
    }
    report
}

/// Polynomial in `t` over `Q(ζ_m)`, lowest power first.
type CycloPoly = Vec<CyclotomicNumber>;

fn cp_mul(a: &CycloPoly, b: &CycloPoly, field: &Arc<CyclotomicField>) -> CycloPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // accumulate unreduced residue products, reduce once per coefficient
    let mut raw = vec![UniPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                raw[i + j] = &raw[i + j] + &(x.residue() * y.residue());
            }
        }
    }
    raw.iter().map(|r| field.element(r)).collect()
}

fn cp_add(a: &CycloPoly, b: &CycloPoly, field: &Arc<CyclotomicField>) -> CycloPoly {
    (0..a.len().max(b.len()))
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => field.zero(),
        })
        .collect()
}

/// `p(ζ^k·t)`, given `zetas[i] = ζ^i` for `i < m`.
fn rotate(p: &UniPoly, k: usize, zetas: &[CyclotomicNumber]) -> CycloPoly {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| zetas[k * i % zetas.len()].scale(c))
        .collect()
}

fn to_rational_poly(p: &CycloPoly, what: &str) -> Result<UniPoly> {
    p.iter()
        .enumerate()
        .map(|(i, c)| {
            c.to_rational().ok_or_else(|| {
                Error::Invariant(format!("{what}: coefficient of t^{i} is not rational: {c}"))
            })
        })
        .collect::<Result<Vec<Scalar>>>()
        .map(UniPoly::from_coeffs)
}

/// All `m` sections of `ogf` through the inverse Vandermonde rows.
///
/// The common denominator `∏_k Q(ζ^k·t)` is a norm and has rational
/// coefficients; the numerator of row `l` must be rational, divisible by
/// `t^l`, and a polynomial in `t^m` after the division. Any violation is an
/// [`Error::Invariant`].
pub fn sections_via_filter(ogf: &RationalOgf, m: i64) -> Result<Vec<RationalOgf>> {
    sections_with_inverse(&build_inverse(m)?, ogf)
}

/// [`sections_via_filter`] with a prebuilt inverse, for sweeps over many
/// generating functions with the same `m`.
pub fn sections_with_inverse(inv: &VandermondeInverse, ogf: &RationalOgf) -> Result<Vec<RationalOgf>> {
    let field = inv.scalars[0][0].field().clone();
    let n = inv.m as usize;
    let zetas: Vec<CyclotomicNumber> = (0..n as i64).map(|k| field.zeta_pow(k)).collect();
    let nums: Vec<CycloPoly> = (0..n).map(|k| rotate(ogf.numerator(), k, &zetas)).collect();
    let dens: Vec<CycloPoly> = (0..n).map(|k| rotate(ogf.denominator(), k, &zetas)).collect();

    // prefix[k] = ∏_{i<k} dens[i], suffix[k] = ∏_{i≥k} dens[i]
    let one = vec![field.one()];
    let mut prefix = vec![one.clone()];
    for d in &dens {
        prefix.push(cp_mul(prefix.last().unwrap(), d, &field));
    }
    let mut suffix = vec![one; n + 1];
    for k in (0..n).rev() {
        suffix[k] = cp_mul(&dens[k], &suffix[k + 1], &field);
    }
    let terms: Vec<CycloPoly> = (0..n)
        .map(|j| cp_mul(&nums[j], &cp_mul(&prefix[j], &suffix[j + 1], &field), &field))
        .collect();

    let den = to_rational_poly(&prefix[n], "common denominator")?;
    let den = den
        .deflate(n)
        .ok_or_else(|| Error::Invariant("common denominator is not a polynomial in t^m".into()))?;

    (0..n)
        .map(|l| {
            let combined = terms.iter().zip(&inv.scalars[l]).fold(Vec::new(), |acc, (t, c)| {
                let scaled: CycloPoly = t.iter().map(|a| a * c).collect();
                cp_add(&acc, &scaled, &field)
            });
            let num = to_rational_poly(&combined, "section numerator")?;
            let num = num
                .unshift(l)
                .ok_or_else(|| Error::Invariant(format!("section {l} numerator not divisible by t^{l}")))?;
            let num = num
                .deflate(n)
                .ok_or_else(|| Error::Invariant(format!("section {l} numerator not a polynomial in t^m")))?;
            RationalOgf::new(num, den.clone())
        })
        .collect()
}

/// Section `l` of `ogf`, sanity-checked against the first `n_terms`
/// coefficients of the series section.
pub fn section_via_filter(ogf: &RationalOgf, m: i64, l: i64, n_terms: usize) -> Result<RationalOgf> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    if l < 0 || l >= m {
        return Err(Error::InvalidPart { m, l });
    }
    let section = sections_via_filter(ogf, m)?.swap_remove(l as usize);
    let prefix = series::expand(ogf, m as usize * n_terms)?;
    let expected = series::section_terms(&prefix, m as usize, l as usize)?;
    if !series::certify_ogf(&section, &expected) {
        return Err(Error::Invariant(format!("filtered section {section} disagrees with the series")));
    }
    Ok(section)
}
