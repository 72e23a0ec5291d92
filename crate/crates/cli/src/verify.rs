//! Identity sweeps behind `msection verify <suite>`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use msection::chebyshev::{bisection_identities_check, cassini_check, q_matrix_power_check};
use msection::horadam::{sum_routes, triangle_row_explicit, triangle_row_from_ogf, triangle_row_recurrence};
use msection::multisection::{
    alt_bisection_check, ghml_from_gsml_check, h01_section_check, master_identity_check, ogf_h,
    s_section_identity_check, section_ogf_h,
};
use msection::series::{expand, section_terms, DEFAULT_TERMS};
use msection::vandermonde::{build_inverse, forward_identity_check, sections_with_inverse};
use msection::{CheckReport, Counterexample, HoradamSpec, Signature};

use crate::args::{Suite, VerifyArgs, MAX_M, MAX_N, MAX_R};
use crate::report::Report;
use crate::CliError;

struct Bounds {
    m_max: i64,
    n_min: i64,
    n_max: i64,
    r_max: i64,
}

fn bounds(args: &VerifyArgs) -> Result<Bounds, CliError> {
    let (m, n_min, n, r) = match args.suite {
        Suite::Cassini => (0, -10, 40, 0),
        Suite::Bisection => (30, 0, 0, 0),
        Suite::Master => (12, 0, 0, 0),
        Suite::SSection => (8, 0, 12, 0),
        Suite::H01Section => (6, 0, 15, 4),
        Suite::AltBisection => (20, 0, 0, 5),
        Suite::VandermondeCross => (6, 0, 0, 3),
        Suite::Triangle => (25, 0, 60, 6),
        Suite::QMatrix => (0, 0, 20, 4),
        Suite::GhmlFromGsml => (5, 0, 0, 3),
    };
    let b = Bounds {
        m_max: args.m_max.unwrap_or(m),
        n_min: args.n_min.unwrap_or(n_min),
        n_max: args.n_max.unwrap_or(n),
        r_max: args.r_max.unwrap_or(r),
    };
    let usage = |what: &str| Err(CliError::Usage(what.to_string()));
    if !(0..=MAX_M).contains(&b.m_max) {
        return usage(&format!("--m-max must be in 0..={MAX_M}"));
    }
    if b.n_min.abs() > MAX_N || b.n_max.abs() > MAX_N || b.n_min > b.n_max {
        return usage(&format!("need -{MAX_N} <= --n-min <= --n-max <= {MAX_N}"));
    }
    if !(0..=MAX_R).contains(&b.r_max) {
        return usage(&format!("--r-max must be in 0..={MAX_R}"));
    }
    Ok(b)
}

fn signatures(r_max: i64) -> impl Iterator<Item = (i64, i64)> {
    let nonzero = move || (-r_max..=r_max).filter(|v| *v != 0);
    nonzero().flat_map(move |r| nonzero().map(move |s| (r, s)))
}

fn spec(p: i64, q: i64, r: i64, s: i64) -> HoradamSpec {
    HoradamSpec::new(p, q, r, s).expect("grid excludes zero r and s")
}

/// Prefixes the first counterexample with the grid point it came from.
fn tagged(mut rep: CheckReport, tag: impl FnOnce() -> String) -> CheckReport {
    if let Some(c) = rep.failure.as_mut() {
        c.detail = format!("[{}] {}", tag(), c.detail);
    }
    rep
}

pub fn run(args: &VerifyArgs, n_terms: Option<usize>, seed: Option<u64>) -> Result<Report, CliError> {
    let b = bounds(args)?;
    let mut report = Report::new(format!("verify {}", suite_name(args.suite)));
    report.input("m_max", b.m_max);
    report.input("n_min", b.n_min);
    report.input("n_max", b.n_max);
    report.input("r_max", b.r_max);
    let mut total = CheckReport::new(suite_name(args.suite));
    match args.suite {
        Suite::Cassini => {
            for n in b.n_min..=b.n_max {
                total.absorb(cassini_check(n));
            }
        }
        Suite::Bisection => {
            for m in 0..=b.m_max {
                total.absorb(bisection_identities_check(m));
            }
        }
        Suite::Master => {
            for m in 1..=b.m_max {
                total.absorb(master_identity_check(m)?);
            }
        }
        Suite::SSection => {
            for m in 1..=b.m_max {
                for l in 0..m {
                    total.absorb(s_section_identity_check(m, l, b.n_max.max(0) as u32)?);
                }
            }
        }
        Suite::H01Section => {
            for (r, s) in signatures(b.r_max) {
                let sig = Signature::new(r, s)?;
                for m in 1..=b.m_max {
                    for l in 0..m {
                        let rep = h01_section_check(&sig, m, l, b.n_max.max(0) as u32)?;
                        total.absorb(tagged(rep, || format!("r={r} s={s} m={m}")));
                    }
                }
            }
        }
        Suite::AltBisection => {
            for (r, s) in signatures(b.r_max) {
                for (p, q) in [(0, 1), (1, 0), (2, 1), (-2, 3)] {
                    let sp = spec(p, q, r, s);
                    for m in 0..=b.m_max as u32 {
                        total.absorb(tagged(alt_bisection_check(&sp, m), || format!("p={p} q={q} r={r} s={s}")));
                    }
                }
            }
        }
        Suite::VandermondeCross => {
            report.input("n_terms", n_terms.unwrap_or(DEFAULT_TERMS));
            if let Some(seed) = seed {
                report.input("seed", seed);
                report.input("samples", args.samples);
            }
            total.absorb(vandermonde_cross(&b, n_terms.unwrap_or(DEFAULT_TERMS), seed, args.samples)?);
        }
        Suite::Triangle => {
            for n in 0..=b.n_max.max(0) as usize {
                let rec = triangle_row_recurrence(n);
                let ok = rec == triangle_row_explicit(n) && rec == triangle_row_from_ogf(n);
                total.record(if ok { Ok(()) } else { Err(Counterexample::new("triangle routes differ").at_n(n as i64)) });
            }
            for (r, s) in signatures(b.r_max) {
                let sig = Signature::new(r, s)?;
                for m in 0..=b.m_max as u32 {
                    let routes = sum_routes(&sig, m);
                    total.record(if routes.agree() {
                        Ok(())
                    } else {
                        Err(Counterexample::new(format!("SUM routes differ for r={r} s={s}: {routes:?}")).at_n(i64::from(m)))
                    });
                }
            }
        }
        Suite::QMatrix => {
            for (r, s) in signatures(b.r_max) {
                let sig = Signature::new(r, s)?;
                for n in 0..=b.n_max.max(0) as u32 {
                    total.absorb(tagged(q_matrix_power_check(&sig, n), || format!("r={r} s={s}")));
                }
            }
        }
        Suite::GhmlFromGsml => {
            let n = n_terms.unwrap_or(24);
            for (r, s) in signatures(b.r_max) {
                for (p, q) in [(0, 1), (1, 0), (2, -1)] {
                    let sp = spec(p, q, r, s);
                    for m in 1..=b.m_max {
                        for l in 0..m {
                            let rep = ghml_from_gsml_check(&sp, m, l, n)?;
                            total.absorb(tagged(rep, || format!("p={p} q={q} r={r} s={s} m={m}")));
                        }
                    }
                }
            }
        }
    }
    report.check((&total).into());
    Ok(report)
}

pub fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Cassini => "cassini",
        Suite::Bisection => "bisection",
        Suite::Master => "master",
        Suite::SSection => "s-section",
        Suite::H01Section => "h01-section",
        Suite::AltBisection => "alt-bisection",
        Suite::VandermondeCross => "vandermonde-cross",
        Suite::Triangle => "triangle",
        Suite::QMatrix => "q-matrix",
        Suite::GhmlFromGsml => "ghml-from-gsml",
    }
}

/// Closed form, root-of-unity filter and series section must coincide; the
/// inverse Vandermonde matrices themselves are checked first.
fn vandermonde_cross(b: &Bounds, n_terms: usize, seed: Option<u64>, samples: usize) -> Result<CheckReport, CliError> {
    let mut rep = CheckReport::new("vandermonde-cross");
    let m_max = b.m_max.max(1);
    let inverses = (1..=m_max).map(build_inverse).collect::<Result<Vec<_>, _>>()?;
    for inv in &inverses {
        rep.absorb(forward_identity_check(inv));
    }
    let specs: Vec<(i64, i64, i64, i64)> = match seed {
        None => {
            let grid: Vec<(i64, i64)> = signatures(b.r_max).collect();
            (-2..=2)
                .flat_map(|p| (-2..=2).map(move |q| (p, q)))
                .flat_map(|(p, q)| grid.iter().map(move |&(r, s)| (p, q, r, s)))
                .collect()
        }
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r_max = b.r_max.max(1);
            let nonzero = |rng: &mut ChaCha8Rng| loop {
                let v = rng.gen_range(-r_max..=r_max);
                if v != 0 {
                    break v;
                }
            };
            (0..samples)
                .map(|_| {
                    let p = rng.gen_range(-9..=9);
                    let q = rng.gen_range(-9..=9);
                    (p, q, nonzero(&mut rng), nonzero(&mut rng))
                })
                .collect()
        }
    };
    for (p, q, r, s) in specs {
        let sp = spec(p, q, r, s);
        let g = ogf_h(&sp);
        for (mi, inv) in inverses.iter().enumerate() {
            let m = mi as i64 + 1;
            let prefix = expand(&g, m as usize * n_terms)?;
            let filtered = sections_with_inverse(inv, &g)?;
            for (l, via_filter) in filtered.iter().enumerate() {
                let closed = section_ogf_h(&sp, m, l as i64)?;
                let want = section_terms(&prefix, m as usize, l)?;
                let got = expand(&closed, want.len())?;
                let ctx = || format!("p={p} q={q} r={r} s={s} m={m}");
                rep.record(if &closed != via_filter {
                    Err(Counterexample::new(format!("[{}] closed {closed} vs filter {via_filter}", ctx())).at_l(l as i64))
                } else if got.coeffs != want.coeffs {
                    Err(Counterexample::new(format!("[{}] series section differs", ctx())).at_l(l as i64))
                } else {
                    Ok(())
                });
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(suite: Suite) -> VerifyArgs {
        VerifyArgs { suite, m_max: None, n_min: None, n_max: None, r_max: None, samples: 5 }
    }

    #[test]
    fn small_default_suites_pass() {
        for suite in [Suite::Cassini, Suite::Bisection, Suite::Master, Suite::SSection, Suite::QMatrix] {
            let rep = run(&args(suite), None, None).unwrap();
            assert!(rep.passed, "{suite:?}: {:?}", rep.checks);
            assert!(rep.checks[0].cases > 0);
        }
    }

    #[test]
    fn bounded_sweeps_pass() {
        let mut a = args(Suite::VandermondeCross);
        a.m_max = Some(3);
        a.r_max = Some(2);
        assert!(run(&a, Some(16), None).unwrap().passed);
        assert!(run(&a, Some(16), Some(7)).unwrap().passed);
        let mut a = args(Suite::GhmlFromGsml);
        a.m_max = Some(3);
        a.r_max = Some(2);
        assert!(run(&a, None, None).unwrap().passed);
        let mut a = args(Suite::AltBisection);
        a.m_max = Some(6);
        a.r_max = Some(2);
        assert!(run(&a, None, None).unwrap().passed);
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let mut a = args(Suite::VandermondeCross);
        a.m_max = Some(2);
        let x = run(&a, Some(8), Some(42)).unwrap();
        let y = run(&a, Some(8), Some(42)).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn out_of_range_bounds_are_usage_errors() {
        let mut a = args(Suite::Master);
        a.m_max = Some(MAX_M + 1);
        assert!(matches!(run(&a, None, None), Err(CliError::Usage(_))));
        let mut a = args(Suite::Cassini);
        a.n_min = Some(5);
        a.n_max = Some(1);
        assert!(matches!(run(&a, None, None), Err(CliError::Usage(_))));
    }
}
