//! Acceptance gate: thirteen criteria, each checked exactly and reported on
//! one line. Runs as a plain binary so the report is always printed.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use msection::chebyshev::{bisection_identities_check, cassini_check, r_poly, s_poly};
use msection::exactalg::{int, BiPoly, CyclotomicField, Scalar, UniPoly};
use msection::horadam::{h01_term, h_term, sum_routes, terms, triangle_row};
use msection::multisection::{
    alt_bisection_check, c_sign, gsml_parts, master_identity_check, reassemble, master_identity_check_with, ogf_h,
    s_section_identity_check, section_ogf_h, section_ogf_s, section_params,
};
use msection::oeis;
use msection::series::{certify_ogf, expand, section_terms, DEFAULT_TERMS};
use msection::vandermonde::{build_inverse, forward_identity_check, sections_with_inverse, VandermondeInverse};
use msection::{CheckReport, HoradamSpec, RationalOgf, Signature};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_ok(rep: &CheckReport) -> Result<(), String> {
    ensure(rep.passed(), || rep.to_string())
}

fn spec(p: i64, q: i64, r: i64, s: i64) -> HoradamSpec {
    HoradamSpec::new(p, q, r, s).unwrap()
}

fn upoly(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c.iter().copied())
}

fn ogf(num: &[i64], den: &[i64]) -> RationalOgf {
    RationalOgf::new(upoly(num), upoly(den)).unwrap()
}

fn nonzero(range: std::ops::RangeInclusive<i64>) -> impl Iterator<Item = i64> + Clone {
    range.filter(|v| *v != 0)
}

fn scalars(v: &[BigInt]) -> Vec<Scalar> {
    v.iter().cloned().map(Scalar::from_integer).collect()
}

fn fibonacci_trisection_params() -> Outcome {
    let fib = spec(0, 1, 1, 1);
    let want = [[0, 2, 4, 1], [1, 3, 4, 1], [1, 5, 4, 1]];
    for (l, w) in want.iter().enumerate() {
        let got = section_params(&fib, 3, l as i64).map_err(|e| e.to_string())?;
        let got = [&got.p_prime, &got.q_prime, &got.r_prime, &got.s_prime];
        let w: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
        ensure(got.iter().zip(&w).all(|(a, b)| *a == b), || format!("l={l}: got {got:?}"))?;
    }
    Ok("(0,2,4,1) (1,3,4,1) (1,5,4,1)".into())
}

fn fibonacci_trisection_ogfs() -> Outcome {
    let fib = spec(0, 1, 1, 1);
    let want = [ogf(&[0, 2], &[1, -4, -1]), ogf(&[1, -1], &[1, -4, -1]), ogf(&[1, 1], &[1, -4, -1])];
    // F(3n), F(3n+1), F(3n+2) = A015448(n+1)
    let fixtures = [("A014445", 0usize), ("A033887", 0), ("A015448", 1)];
    for l in 0..3 {
        let got = section_ogf_h(&fib, 3, l as i64).map_err(|e| e.to_string())?;
        ensure(got == want[l], || format!("l={l}: {got}"))?;
        let (id, skip) = fixtures[l];
        let fixture = oeis::bundled(id).map_err(|e| e.to_string())?;
        let series = expand(&got, 20).map_err(|e| e.to_string())?;
        let expected = scalars(&fixture.terms[skip..skip + 20]);
        ensure(series.coeffs == expected, || format!("l={l}: series differs from {id}"))?;
    }
    Ok("2x, 1-x, 1+x over 1-4x-x^2; 20 terms vs A014445/A033887/A015448".into())
}

fn chebyshev_trisection_ogfs() -> Outcome {
    let den = BiPoly::from_x_coeffs(vec![upoly(&[1]), upoly(&[0, 3, 0, -1]), upoly(&[1])]);
    let nums = [
        BiPoly::from_x_coeffs(vec![upoly(&[1]), upoly(&[0, 1])]),
        BiPoly::from_x_coeffs(vec![upoly(&[0, 1]), upoly(&[1])]),
        BiPoly::from_x_coeffs(vec![upoly(&[-1, 0, 1])]),
    ];
    for (l, num) in nums.iter().enumerate() {
        let g = section_ogf_s(3, l as i64).map_err(|e| e.to_string())?;
        ensure(&g.numerator == num && g.denominator == den, || {
            format!("l={l}: ({}) / ({})", g.numerator.display(), g.denominator.display())
        })?;
    }
    Ok("(1+yx), (y+x), (y^2-1) over 1-y(y^2-3)x+x^2".into())
}

fn master_identity() -> Outcome {
    let mut mutations = 0usize;
    for m in 1..=12u32 {
        report_ok(&master_identity_check(i64::from(m)).map_err(|e| e.to_string())?)?;
        let nums: Vec<BiPoly> = (0..i64::from(m)).map(|l| gsml_parts(m, l).numerator).collect();
        for (l, num) in nums.iter().enumerate() {
            for (j, cy) in num.x_coeffs().iter().enumerate() {
                for k in 0..=cy.degree().unwrap_or(0) {
                    let mut coeffs = num.x_coeffs().to_vec();
                    coeffs[j] = &coeffs[j] + &UniPoly::monomial(Scalar::one(), k);
                    let mut mutated = nums.clone();
                    mutated[l] = BiPoly::from_x_coeffs(coeffs);
                    ensure(!master_identity_check_with(m, &mutated).passed(), || {
                        format!("m={m} l={l}: mutation at x^{j} y^{k} not detected")
                    })?;
                    mutations += 1;
                }
            }
        }
    }
    Ok(format!("m in [1,12]; {mutations} single-coefficient mutations all detected"))
}

fn lemma_two_and_cassini() -> Outcome {
    for m in 0..=30 {
        report_ok(&bisection_identities_check(m))?;
    }
    for n in -10..=40 {
        report_ok(&cassini_check(n))?;
    }
    Ok("bisection m in [0,30]; Cassini n in [-10,40]".into())
}

fn four_route_sum() -> Outcome {
    let mut cases = 0;
    for r in nonzero(-6..=6) {
        for s in nonzero(-6..=6) {
            let sig = Signature::new(r, s).unwrap();
            for m in 0..=25 {
                let routes = sum_routes(&sig, m);
                ensure(routes.agree(), || format!("r={r} s={s} m={m}: {routes:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (r,s,m) cases"))
}

fn oracle_triangulation() -> Outcome {
    let mut sections = 0usize;
    let inverses: Vec<VandermondeInverse> = (1..=6).map(|m| build_inverse(m).unwrap()).collect();
    for p in -3..=3i64 {
        for q in -3..=3i64 {
            for r in nonzero(-4..=4) {
                for s in nonzero(-4..=4) {
                    let sp = spec(p, q, r, s);
                    let g = ogf_h(&sp);
                    let direct = scalars(&terms(&sp, DEFAULT_TERMS));
                    let prefix = expand(&g, DEFAULT_TERMS).map_err(|e| e.to_string())?;
                    ensure(prefix.coeffs == direct, || format!("{sp:?}: OGF expansion differs from recurrence"))?;
                    for m in 1..=6usize {
                        let filtered = sections_with_inverse(&inverses[m - 1], &g).map_err(|e| format!("{sp:?} m={m}: {e}"))?;
                        let mut closed_forms = Vec::with_capacity(m);
                        for (l, via_filter) in filtered.iter().enumerate() {
                            let ctx = || format!("p={p} q={q} r={r} s={s} m={m} l={l}");
                            let closed = section_ogf_h(&sp, m as i64, l as i64).map_err(|e| e.to_string())?;
                            ensure(&closed == via_filter, || format!("{}: closed {closed} vs filter {via_filter}", ctx()))?;
                            let want = section_terms(&prefix, m, l).map_err(|e| e.to_string())?;
                            let got = expand(&closed, want.len()).map_err(|e| e.to_string())?;
                            ensure(got.coeffs == want.coeffs && certify_ogf(&closed, &want), || {
                                format!("{}: series section disagrees", ctx())
                            })?;
                            closed_forms.push(closed);
                            sections += 1;
                        }
                        let total = reassemble(&closed_forms);
                        ensure(total == g, || format!("{sp:?} m={m}: reassembly gives {total}, want {g}"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{sections} sections: closed form = filter = 64-term series; reassembly exact"))
}

fn s_section_identity() -> Outcome {
    let mut cases = 0;
    for m in 1..=8 {
        for l in 0..m {
            let rep = s_section_identity_check(m, l, 12).map_err(|e| e.to_string())?;
            report_ok(&rep)?;
            cases += rep.cases;
        }
    }
    // S(mn) = S(n, R(m)) + S(m-2)·S(n-1, R(m)), evaluated independently here
    for m in 1..=8i64 {
        let r = r_poly(m);
        for n in 0..=12i64 {
            let rhs = &s_poly(n).compose(&r) + &(&s_poly(m - 2) * &s_poly(n - 1).compose(&r));
            ensure(s_poly(m * n) == rhs, || format!("l=0 form fails at m={m} n={n}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} polynomial identities, m <= 8, n <= 12, plus the l=0 form"))
}

fn alternative_bisections() -> Outcome {
    let fib = Signature::new(1, 1).unwrap();
    let lucas3 = h_term(&spec(2, 1, 1, 1), 3);
    ensure(h01_term(&fib, 5) == h01_term(&fib, 2) * lucas3 + int(1), || "F(5) != F(2)L(3) + 1".into())?;
    let mut cases = 0;
    for p in -2..=2i64 {
        for q in -2..=2i64 {
            for r in nonzero(-5..=5) {
                for s in nonzero(-5..=5) {
                    let sp = spec(p, q, r, s);
                    for m in 0..=20 {
                        let rep = alt_bisection_check(&sp, m);
                        ensure(rep.passed(), || format!("{sp:?} m={m}: {rep}"))?;
                        cases += rep.cases;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} identity instances; F(5) = F(2)L(3) + 1"))
}

fn negative_index() -> Outcome {
    for r in nonzero(-6..=6) {
        for s in nonzero(-6..=6) {
            let sig = Signature::new(r, s).unwrap();
            let (rq, sq) = (int(r), int(s));
            ensure(h01_term(&sig, -1) == sq.recip(), || format!("H01({r},{s};-1)"))?;
            ensure(h01_term(&sig, -2) == -&rq / (&sq * &sq), || format!("H01({r},{s};-2)"))?;
            for n in 0..=20i64 {
                let sign = num_traits::pow(-&sq, n as usize);
                ensure(h01_term(&sig, n) == -sign * h01_term(&sig, -n), || format!("involution r={r} s={s} n={n}"))?;
            }
        }
    }
    Ok("H01(-1) = 1/s, H01(-2) = -r/s^2, involution n <= 20".into())
}

fn vandermonde_exactness() -> Outcome {
    for m in 1..=8 {
        report_ok(&forward_identity_check(&build_inverse(m).map_err(|e| e.to_string())?))?;
    }
    let inv = build_inverse(3).map_err(|e| e.to_string())?;
    let f = CyclotomicField::new(3).map_err(|e| e.to_string())?;
    let third = Scalar::new(1.into(), 3.into());
    let (one, w, wb) = (f.one(), f.zeta_pow(1), f.zeta_pow(2));
    let want = [[&one, &one, &one], [&one, &wb, &w], [&one, &w, &wb]];
    for l in 0..3 {
        for j in 0..3 {
            let e = want[l][j].scale(&third);
            ensure(inv.scalars[l][j] == e, || format!("m=3 entry ({l},{j}) = {}", inv.scalars[l][j]))?;
        }
    }
    ensure(inv.row_x_power == [0, -1, -2], || "row weights".into())?;
    Ok("V^-1 V = I for m <= 8; m=3 inverse entrywise".into())
}

fn c_sign_table() -> Outcome {
    let fixture = oeis::bundled("A087960").map_err(|e| e.to_string())?;
    for m in 1..=40u32 {
        let got = c_sign(&BigInt::from(1), m).map_err(|e| e.to_string())?.value();
        let want = &fixture.terms[m as usize - 1];
        ensure(BigInt::from(got) == *want, || format!("c(1,{m}) = {got}, A087960 gives {want}"))?;
        let neg = c_sign(&BigInt::from(-1), m).map_err(|e| e.to_string())?.value();
        ensure(neg == 1, || format!("c(-1,{m}) = {neg}"))?;
    }
    Ok("c(1,m) = A087960(m-1) for m <= 40; c(-1,m) = 1".into())
}

fn offline_fixtures() -> Outcome {
    for id in oeis::BUNDLED {
        let f = oeis::bundled(id).map_err(|e| e.to_string())?;
        ensure(f.provenance == oeis::Provenance::Bundled && !f.terms.is_empty(), || id.to_string())?;
    }
    let fib = oeis::bundled("A000045").map_err(|e| e.to_string())?;
    let sig = Signature::new(1, 1).unwrap();
    for (n, t) in fib.terms.iter().enumerate().take(41) {
        ensure(h01_term(&sig, n as i64) == Scalar::from_integer(t.clone()), || format!("F({n})"))?;
    }
    let flat = |rows: Vec<Vec<BigInt>>| rows.into_iter().flatten().collect::<Vec<_>>();
    let triangle = flat((0..=40).map(|n| triangle_row(n).entries).collect());
    let s_coeffs = flat((0..=30).map(|n| poly_ints(&s_poly(n))).collect());
    let r_coeffs = flat((0..=30).map(|n| poly_ints(&r_poly(n))).collect());
    for (id, ours) in [("A034807", triangle), ("A049310", s_coeffs), ("A127672", r_coeffs)] {
        let f = oeis::bundled(id).map_err(|e| e.to_string())?;
        ensure(f.terms == ours, || format!("{id} differs from the generated rows"))?;
    }
    Ok("8 bundled fixtures load without network; A000045/A034807/A049310/A127672 regenerate".into())
}

/// Dense coefficient list, keeping interior zeros; `R(0) = 2` and `S(0) = 1`.
fn poly_ints(p: &UniPoly) -> Vec<BigInt> {
    p.coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_integer() && !(c.is_negative() && c.is_zero()));
            c.to_integer()
        })
        .collect()
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("Fibonacci trisection parameters", fibonacci_trisection_params),
        ("Fibonacci trisection OGFs", fibonacci_trisection_ogfs),
        ("Chebyshev trisection OGFs", chebyshev_trisection_ogfs),
        ("master identity and mutation", master_identity),
        ("bisection identities and Cassini", lemma_two_and_cassini),
        ("four-route SUM agreement", four_route_sum),
        ("oracle triangulation", oracle_triangulation),
        ("S-section polynomial identity", s_section_identity),
        ("alternative bisections", alternative_bisections),
        ("negative-index contracts", negative_index),
        ("Vandermonde exactness", vandermonde_exactness),
        ("c(s,m) sign table", c_sign_table),
        ("offline fixtures", offline_fixtures),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} [{secs:.2}s] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{secs:.2}s] {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
