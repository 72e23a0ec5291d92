use num_bigint::BigInt;
use num_traits::Zero;

use msection::chebyshev::{r_poly, s_poly};
use msection::horadam::{h_term, terms, triangle_row_explicit, triangle_row_from_ogf, triangle_row_recurrence};
use msection::multisection::{
    c_sign, master_identity_check, ogf_h, reassemble, s_section_identity_check, section_ogf_h, section_ogf_s,
    section_params,
};
use msection::oeis::OeisFixture;
use msection::series::{certify_ogf, expand, section_terms, SeriesPrefix};
use msection::{Error, HoradamSpec, Scalar, Signature, UniPoly};

use crate::args::{MAX_M, MAX_N};
use crate::fixtures::FixtureSource;
use crate::report::{self, CheckOutcome, Output, Report};
use crate::CliError;

/// Terms shown by `msect` and `ogf` unless `--n-terms` is given.
pub const SHOWN_TERMS: usize = 12;

fn horadam(p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) -> Result<HoradamSpec, CliError> {
    HoradamSpec::new(p.clone(), q.clone(), r.clone(), s.clone()).map_err(|e| CliError::Usage(e.to_string()))
}

fn modulus(m: i64) -> Result<i64, CliError> {
    if (1..=MAX_M).contains(&m) {
        Ok(m)
    } else {
        Err(CliError::Usage(format!("m must be in 1..={MAX_M}, got {m}")))
    }
}

fn parts(m: i64, l: Option<i64>) -> Result<Vec<i64>, CliError> {
    match l {
        None => Ok((0..m).collect()),
        Some(l) if (0..m).contains(&l) => Ok(vec![l]),
        Some(l) => Err(CliError::Usage(format!("l must be in 0..{m}, got {l}"))),
    }
}

fn integer_prefix(values: &[BigInt], source: &str) -> SeriesPrefix {
    SeriesPrefix::new(values.iter().cloned().map(Scalar::from_integer).collect(), source)
}

#[allow(clippy::too_many_arguments)]
pub fn msect(
    p: &BigInt,
    q: &BigInt,
    r: &BigInt,
    s: &BigInt,
    m: i64,
    l: Option<i64>,
    n_terms: Option<usize>,
) -> Result<Report, CliError> {
    let spec = horadam(p, q, r, s)?;
    let m = modulus(m)?;
    let ls = parts(m, l)?;
    let n = n_terms.unwrap_or(SHOWN_TERMS);
    let mut report = Report::new(match l {
        Some(l) => format!("msect {p} {q} {r} {s} {m} {l}"),
        None => format!("msect {p} {q} {r} {s} {m}"),
    });
    for (k, v) in [("p", p), ("q", q), ("r", r), ("s", s)] {
        report.input(k, v);
    }
    report.input("m", m);
    if let Some(l) = l {
        report.input("l", l);
    }
    let direct = integer_prefix(&terms(&spec, m as usize * n), "recurrence");
    let mut sections = Vec::new();
    for &l in &ls {
        let params = section_params(&spec, m, l)?;
        let g = section_ogf_h(&spec, m, l)?;
        let shown = expand(&g, n)?;
        let want = section_terms(&direct, m as usize, l as usize)?;
        report.check(CheckOutcome::single(
            format!("certify m={m} l={l}"),
            certify_ogf(&g, &want),
            Some(format!("OGF {g} does not reproduce H({m}n+{l}) from the recurrence")),
        ));
        report.outputs.push(Output::Section {
            m: params.m,
            l: params.l,
            p_prime: params.p_prime.to_string(),
            q_prime: params.q_prime.to_string(),
            r_prime: params.r_prime.to_string(),
            s_prime: params.s_prime.to_string(),
            numerator: report::poly(g.numerator()),
            denominator: report::poly(g.denominator()),
            display: g.to_string(),
            terms: report::scalars(&shown.coeffs),
        });
        sections.push(g);
    }
    if l.is_none() {
        let whole = ogf_h(&spec);
        let back = reassemble(&sections);
        report.check(CheckOutcome::single(
            "reassembly",
            back == whole,
            Some(format!("sum of sections gives {back}, expected {whole}")),
        ));
    }
    Ok(report)
}

pub fn ogf(p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt, n_terms: Option<usize>) -> Result<Report, CliError> {
    let spec = horadam(p, q, r, s)?;
    let n = n_terms.unwrap_or(SHOWN_TERMS);
    let mut report = Report::new(format!("ogf {p} {q} {r} {s}"));
    for (k, v) in [("p", p), ("q", q), ("r", r), ("s", s)] {
        report.input(k, v);
    }
    let g = ogf_h(&spec);
    let direct = integer_prefix(&terms(&spec, n), "recurrence");
    report.check(CheckOutcome::single(
        "certify",
        certify_ogf(&g, &direct),
        Some(format!("OGF {g} does not reproduce the recurrence")),
    ));
    report.outputs.push(Output::Ogf {
        numerator: report::poly(g.numerator()),
        denominator: report::poly(g.denominator()),
        display: g.to_string(),
        terms: report::scalars(&direct.coeffs),
    });
    Ok(report)
}

pub fn s_section(m: i64, l: Option<i64>) -> Result<Report, CliError> {
    let m = modulus(m)?;
    let ls = parts(m, l)?;
    let mut report = Report::new(match l {
        Some(l) => format!("s-section {m} {l}"),
        None => format!("s-section {m}"),
    });
    report.input("m", m);
    for &l in &ls {
        let g = section_ogf_s(m, l)?;
        report.outputs.push(Output::ChebyshevSection {
            m: m as u32,
            l: l as u32,
            numerator: report::bipoly(&g.numerator),
            denominator: report::bipoly(&g.denominator),
            display: format!("({}) / ({})", g.numerator.display(), g.denominator.display()),
        });
        let mut check: report::CheckOutcome = (&s_section_identity_check(m, l, 10)?).into();
        check.name = format!("s-section l={l}");
        report.check(check);
    }
    if l.is_none() && m <= 16 {
        report.check((&master_identity_check(m)?).into());
    }
    Ok(report)
}

pub fn triangle(rows: usize) -> Result<Report, CliError> {
    if rows as i64 > MAX_N {
        return Err(CliError::Usage(format!("at most {MAX_N} rows")));
    }
    let mut report = Report::new(format!("triangle {rows}"));
    report.input("rows", rows);
    let lucas = HoradamSpec::new(2, 1, 1, 1).expect("valid signature");
    let mut routes = CheckOutcome { name: "triangle routes".into(), cases: 0, passed: true, counterexample: None };
    let mut sums = CheckOutcome { name: "row sum = Lucas".into(), cases: 0, passed: true, counterexample: None };
    for n in 0..=rows {
        let entries = triangle_row_recurrence(n);
        routes.cases += 1;
        if routes.passed && (entries != triangle_row_explicit(n) || entries != triangle_row_from_ogf(n)) {
            routes.passed = false;
            routes.counterexample = Some(format!("row {n}"));
        }
        let sum: BigInt = entries.iter().sum();
        sums.cases += 1;
        if sums.passed && Scalar::from_integer(sum.clone()) != h_term(&lucas, n as i64) {
            sums.passed = false;
            sums.counterexample = Some(format!("row {n} sums to {sum}"));
        }
        report.outputs.push(Output::TriangleRow {
            n,
            entries: entries.iter().map(ToString::to_string).collect(),
            row_sum: sum.to_string(),
        });
    }
    report.check(routes);
    report.check(sums);
    Ok(report)
}

/// A named generator of integer sequences, parsed from `name:arg,arg,...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    H(HoradamSpec),
    H01(Signature),
    Section(HoradamSpec, i64, i64),
    CSign(BigInt),
    Triangle,
    SCoeffs,
    RCoeffs,
}

impl Generator {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("unknown generator {text:?}"));
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let nums: Vec<BigInt> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',').map(|t| t.trim().parse::<BigInt>()).collect::<Result<_, _>>().map_err(|_| bad())?
        };
        let small = |b: &BigInt| i64::try_from(b).map_err(|_| bad());
        let usage = |e: Error| CliError::Usage(e.to_string());
        Ok(match (name, nums.as_slice()) {
            ("h", [p, q, r, s]) => Generator::H(HoradamSpec::new(p.clone(), q.clone(), r.clone(), s.clone()).map_err(usage)?),
            ("h01", [r, s]) => {
                Generator::H01(HoradamSpec::new(0, 1, r.clone(), s.clone()).map_err(usage)?.signature().clone())
            }
            ("msect", [p, q, r, s, m, l]) => {
                let spec = HoradamSpec::new(p.clone(), q.clone(), r.clone(), s.clone()).map_err(usage)?;
                let m = modulus(small(m)?)?;
                let l = parts(m, Some(small(l)?))?[0];
                Generator::Section(spec, m, l)
            }
            ("c-sign", [s]) if !s.is_zero() => Generator::CSign(s.clone()),
            ("triangle", []) => Generator::Triangle,
            ("s-coeffs", []) => Generator::SCoeffs,
            ("r-coeffs", []) => Generator::RCoeffs,
            _ => return Err(bad()),
        })
    }

    /// The first `count` values.
    pub fn values(&self, count: usize) -> Result<Vec<BigInt>, CliError> {
        let integral = |v: Scalar| -> Result<BigInt, CliError> {
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(Error::Invariant(format!("non-integer term {v}")).into())
            }
        };
        Ok(match self {
            Generator::H(spec) => terms(spec, count),
            Generator::H01(sig) => terms(&HoradamSpec::fundamental(sig.clone()), count),
            Generator::Section(spec, m, l) => expand(&section_ogf_h(spec, *m, *l)?, count)?
                .coeffs
                .into_iter()
                .map(integral)
                .collect::<Result<_, _>>()?,
            Generator::CSign(s) => (1..=count as u32)
                .map(|m| c_sign(s, m).map(|c| BigInt::from(c.value())))
                .collect::<Result<_, _>>()?,
            Generator::Triangle => flat_rows(count, triangle_row_recurrence),
            Generator::SCoeffs => flat_rows(count, |n| poly_ints(&s_poly(n as i64))),
            Generator::RCoeffs => flat_rows(count, |n| poly_ints(&r_poly(n as i64))),
        })
    }
}

fn poly_ints(p: &UniPoly) -> Vec<BigInt> {
    p.coeffs().iter().map(|c| c.to_integer()).collect()
}

fn flat_rows(count: usize, row: impl Fn(usize) -> Vec<BigInt>) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut n = 0;
    while out.len() < count {
        out.extend(row(n));
        n += 1;
    }
    out.truncate(count);
    out
}

pub fn oeis_check(
    source: &FixtureSource,
    a_number: &str,
    generator: &str,
    skip: usize,
    n_terms: Option<usize>,
) -> Result<Report, CliError> {
    let gen = Generator::parse(generator)?;
    let fixture: OeisFixture = source.load(a_number)?;
    let available = fixture.terms.len().saturating_sub(skip);
    let compared = n_terms.map_or(available, |n| n.min(available));
    if compared == 0 {
        return Err(CliError::Usage(format!("{} has no terms after skipping {skip}", fixture.a_number)));
    }
    let values = gen.values(compared)?;
    let expected = &fixture.terms[skip..skip + compared];
    let match_length = expected.iter().zip(&values).take_while(|(a, b)| a == b).count();
    let mut report = Report::new(format!("oeis-check {a_number} {generator}"));
    report.input("a_number", &fixture.a_number);
    report.input("generator", generator);
    report.input("skip", skip);
    report.check(CheckOutcome::single(
        format!("{} prefix", fixture.a_number),
        match_length == compared,
        Some(format!(
            "term {} differs: fixture {}, generated {}",
            skip + match_length,
            expected.get(match_length).map_or("-".into(), ToString::to_string),
            values.get(match_length).map_or("-".into(), ToString::to_string)
        )),
    ));
    report.outputs.push(Output::OeisMatch {
        a_number: fixture.a_number.clone(),
        provenance: fixture.provenance.to_string(),
        offset: fixture.offset,
        skip,
        compared,
        match_length,
    });
    Ok(report)
}
