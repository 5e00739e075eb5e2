//! Acceptance suite: one line per criterion, exit status 1 if any fails.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zqr::lincode::{LinearCode, DEFAULT_BUDGET};
use zqr::modring::{
    count_zero_sums, family_params, is_prime, quad_partition, residue_class_counts, LemmaClass,
    Modulus,
};
use zqr::padic::{expand, expand_all, matches_template, Target, Template};
use zqr::polyring::{binary_qr_factors, hensel_lift_factors, DensePoly};
use zqr::qr::{build_family, product_identities_report, solve_exhaustive, CaseTag, CodeName};
use zqr::verify::{run_sweep, vacuity_scan};

const LIMIT_LEMMAS: Duration = Duration::from_secs(1);
const LIMIT_IDENTITIES: Duration = Duration::from_secs(1);
const LIMIT_SCAN: Duration = Duration::from_secs(120);
const LIMIT_WEIGHT_EACH: Duration = Duration::from_secs(60);
const LIMIT_ODD_LIKE: Duration = Duration::from_secs(60);
const LIMIT_PADIC: Duration = Duration::from_secs(1);
/// Random codes per operation in the brute-force comparison.
const ORACLE_CODES: usize = 120;
const ORACLE_SEED: u64 = 20_260_101;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn z(m: u32) -> Modulus<u64> {
    Modulus::new(m).unwrap()
}

fn primes_pm1_mod8(bound: u64) -> Vec<u64> {
    (3..bound)
        .filter(|&p| is_prime(p) && matches!(p % 8, 1 | 7))
        .collect()
}

fn lemma_suite() -> Outcome {
    let start = Instant::now();
    let primes = primes_pm1_mod8(100);
    for &p in &primes {
        let part = quad_partition(p).map_err(|e| e.to_string())?;
        let (q, n) = (part.residues(), part.nonresidues());
        let half = (p as usize - 1) / 2;
        let sums = (
            count_zero_sums(q, q, p),
            count_zero_sums(n, n, p),
            count_zero_sums(q, n, p),
        );
        let k = part.lemma_class().k() as usize;
        let (want_sums, same, mixed) = match part.lemma_class() {
            LemmaClass::MinusOne(_) => (
                (0, 0, half),
                (2 * k - 1, 2 * k, 0),
                (2 * k - 1, 2 * k - 1, 1),
            ),
            LemmaClass::PlusOne(_) => ((half, half, 0), (2 * k - 1, 2 * k, 1), (2 * k, 2 * k, 0)),
        };
        ensure(
            sums == want_sums,
            format!("p={p}: zero sums {sums:?} != {want_sums:?}"),
        )?;
        for &i in q {
            let a = residue_class_counts(i, q, &part).as_tuple();
            let b = residue_class_counts(i, n, &part).as_tuple();
            ensure(
                a == same && b == mixed,
                format!("p={p} i={i}: counts {a:?} {b:?}"),
            )?;
        }
    }
    let t = within(start, LIMIT_LEMMAS)?;
    Ok(format!("{} primes, {t:.2?}", primes.len()))
}

fn product_identities() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for p in [7, 17, 23, 31, 41, 47] {
        for m in [4, 5] {
            let r = product_identities_report(p, m).map_err(|e| e.to_string())?;
            for c in &r.checks {
                ensure(c.holds, format!("p={p} m={m}: {} != {}", c.name, c.formula))?;
                n += 1;
            }
        }
    }
    let t = within(start, LIMIT_IDENTITIES)?;
    Ok(format!("{n} identities exact, {t:.2?}"))
}

fn idempotent_scan() -> Outcome {
    let start = Instant::now();
    for (p, m) in [(7u64, 4u32), (23, 5)] {
        let zz = z(m);
        let inv = zz.inv(p).unwrap();
        let sols = solve_exhaustive(p, m).map_err(|e| e.to_string())?;
        ensure(!sols.is_empty(), format!("({p},{m}): no solutions"))?;
        for s in &sols {
            ensure(
                s.satisfies_trace_relation(),
                format!("({p},{m}) {s:?}: 2a-(b+c) != 1"),
            )?;
            ensure(
                [inv, zz.neg(inv)].contains(&s.trace_sum()),
                format!("({p},{m}) {s:?}: b+c not +-1/p"),
            )?;
        }
        let sums: BTreeSet<u64> = sols.iter().map(|s| s.trace_sum()).collect();
        if (p, m) == (7, 4) {
            ensure(
                sums == BTreeSet::from([7, 9]),
                format!("(7,4) sums {sums:?}"),
            )?;
        } else {
            ensure(
                sums == BTreeSet::from([7, 25]),
                format!("(23,5) sums {sums:?}"),
            )?;
        }
    }
    let cfg = zqr::config::SweepConfig::parse("p_list = [23]\nm_list = [5]\n").unwrap();
    let report = run_sweep(&cfg, None);
    let finding = report
        .errata
        .iter()
        .find(|f| f.kind == "trace_sum_not_pm_p" && f.p == Some(23) && f.m == Some(5))
        .ok_or("verifier did not report the (23,5) trace-sum finding")?;
    ensure(
        finding.detail["trace_sums"] == serde_json::json!([7, 25]),
        format!("finding detail {}", finding.detail),
    )?;
    let t = within(start, LIMIT_SCAN)?;
    Ok(format!(
        "(7,4) sums {{7,9}}, (23,5) sums {{7,25}} reported, {t:.2?}"
    ))
}

fn clause(name: &str, holds: bool, failures: &mut Vec<String>) {
    if !holds {
        failures.push(name.to_string());
    }
}

fn family_7_4() -> Outcome {
    let f = build_family::<u64>(7, 4).map_err(|e| e.to_string())?;
    let mut bad = Vec::new();
    let shift = f.shift_ideal();
    let full = LinearCode::full(7, z(4));
    let meet = f.q_prime.intersect(&f.n_prime).unwrap();
    let join = f.q_prime.sum(&f.n_prime).unwrap();
    clause("case C12", f.case_tag == CaseTag::C12, &mut bad);
    clause("Q ~ N", f.q.equivalent_under_mu(&f.n).is_some(), &mut bad);
    clause(
        "Q' ~ N'",
        f.q_prime.equivalent_under_mu(&f.n_prime).is_some(),
        &mut bad,
    );
    clause(
        "Q' meet N' = ((8k-1)h)",
        meet == shift && meet.cardinality_log2() == 4,
        &mut bad,
    );
    clause(
        "Q' + N' = R_p",
        join == full && join.cardinality_log2() == 28,
        &mut bad,
    );
    clause(
        "log2|Q'| = 16",
        f.q_prime.cardinality_log2() == 16,
        &mut bad,
    );
    clause(
        "log2|N'| = 16",
        f.n_prime.cardinality_log2() == 16,
        &mut bad,
    );
    clause("log2|Q| = 12", f.q.cardinality_log2() == 12, &mut bad);
    clause("log2|N| = 12", f.n.cardinality_log2() == 12, &mut bad);
    clause(
        "Q' = Q + ((8k-1)h)",
        f.q.sum(&shift).unwrap() == f.q_prime,
        &mut bad,
    );
    clause(
        "N' = N + ((8k-1)h)",
        f.n.sum(&shift).unwrap() == f.n_prime,
        &mut bad,
    );
    clause("Q self-orthogonal", f.q.is_self_orthogonal(), &mut bad);
    clause("N self-orthogonal", f.n.is_self_orthogonal(), &mut bad);
    clause("dual(Q') = Q", f.q_prime.dual() == f.q, &mut bad);
    clause("dual(N') = N", f.n_prime.dual() == f.n, &mut bad);
    ensure(bad.is_empty(), format!("failed: {}", bad.join("; ")))?;
    Ok("14 clauses hold".into())
}

/// The stated claims for the sub-case with `p = -(8k - 1)` and `p^2 = 1`,
/// evaluated literally at `(17, 5)`.
fn family_17_5() -> Outcome {
    let f = build_family::<u64>(17, 5).map_err(|e| e.to_string())?;
    let mut bad = Vec::new();
    let shift = f.shift_ideal();
    let full = LinearCode::full(17, z(5));
    clause("case C21", f.case_tag == CaseTag::C21, &mut bad);
    clause("Q ~ N", f.q.equivalent_under_mu(&f.n).is_some(), &mut bad);
    clause(
        "Q' ~ N'",
        f.q_prime.equivalent_under_mu(&f.n_prime).is_some(),
        &mut bad,
    );
    clause(
        "Q meet N = ((8k-1)h)",
        f.q.intersect(&f.n).unwrap() == shift,
        &mut bad,
    );
    clause("Q + N = R_p", f.q.sum(&f.n).unwrap() == full, &mut bad);
    clause("log2|Q| = 45", f.q.cardinality_log2() == 45, &mut bad);
    clause("log2|N| = 45", f.n.cardinality_log2() == 45, &mut bad);
    clause(
        "Q = Q' + ((8k-1)h)",
        f.q_prime.sum(&shift).unwrap() == f.q,
        &mut bad,
    );
    clause(
        "N = N' + ((8k-1)h)",
        f.n_prime.sum(&shift).unwrap() == f.n,
        &mut bad,
    );
    clause(
        "log2|Q'| = 40",
        f.q_prime.cardinality_log2() == 40,
        &mut bad,
    );
    clause(
        "log2|N'| = 40",
        f.n_prime.cardinality_log2() == 40,
        &mut bad,
    );
    clause(
        "Q' self-orthogonal",
        f.q_prime.is_self_orthogonal(),
        &mut bad,
    );
    clause(
        "N' self-orthogonal",
        f.n_prime.is_self_orthogonal(),
        &mut bad,
    );
    clause("dual(Q) = Q'", f.q.dual() == f.q_prime, &mut bad);
    clause("dual(N) = N'", f.n.dual() == f.n_prime, &mut bad);
    let sizes = format!(
        "sizes Q={} Q'={} N={} N'={}",
        f.q.cardinality_log2(),
        f.q_prime.cardinality_log2(),
        f.n.cardinality_log2(),
        f.n_prime.cardinality_log2()
    );
    ensure(
        bad.is_empty(),
        format!("{sizes}; failed: {}", bad.join("; ")),
    )?;
    Ok(format!("14 clauses hold, {sizes}"))
}

fn hensel() -> Outcome {
    let seed = binary_qr_factors::<u64>(7).map_err(|e| e.to_string())?;
    let l2 = hensel_lift_factors(&seed, 2).map_err(|e| e.to_string())?;
    let (fq, fn_) = (l2.f_q.to_pretty(), l2.f_n.to_pretty());
    ensure(
        fq == "x^3+2x^2+x+3" || fn_ == "x^3+2x^2+x+3",
        format!("lifted factors {fq}, {fn_}"),
    )?;
    // Full-degree product, independent of the library's verifier.
    let z2 = z(2);
    let prod = l2.f_unit.mul(&l2.f_q, &z2).mul(&l2.f_n, &z2);
    ensure(
        prod == DensePoly::x_pow_minus_one(7, &z2),
        format!("product {}", prod.to_pretty()),
    )?;
    let mut towers = 0;
    for p in [7u64, 17, 23, 31, 41, 47] {
        let seed = binary_qr_factors::<u64>(p).map_err(|e| e.to_string())?;
        for m in 1..=8 {
            let top = hensel_lift_factors(&seed, m).map_err(|e| e.to_string())?;
            ensure(top.verifies(), format!("p={p} m={m}: product check"))?;
            for j in 1..=m {
                let low = hensel_lift_factors(&seed, j).unwrap();
                ensure(
                    top.reduce_to(z(j)) == low,
                    format!("p={p}: lift to {m} reduces wrongly mod 2^{j}"),
                )?;
                towers += 1;
            }
        }
    }
    Ok(format!("f_q = {fq}, {towers} tower reductions consistent"))
}

/// Multiplication in `GF(2)[x]` with polynomials as bit masks.
fn gf2_mul(a: u64, b: u64) -> u64 {
    let mut out = 0;
    for i in 0..64 {
        if b >> i & 1 == 1 {
            out ^= a << i;
        }
    }
    out
}

/// Minimum weight of the binary cyclic code of length `p` generated by
/// `g`, via all messages `u` of degree `< p - deg g`: each word is `u g`.
fn binary_min_weight(g_bits: u64, p: u32) -> u32 {
    let deg = 63 - g_bits.leading_zeros();
    let k = p - deg;
    (1u64..1 << k)
        .map(|u| gf2_mul(u, g_bits).count_ones())
        .min()
        .unwrap()
}

fn bits_of(f: &DensePoly<u64>) -> u64 {
    f.coeffs()
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &c)| acc | ((c & 1) << i))
}

fn min_weight() -> Outcome {
    let mut notes = Vec::new();
    for (p, ms) in [(7u64, vec![2u32, 3, 4]), (17, vec![2])] {
        let seed = binary_qr_factors::<u64>(p).map_err(|e| e.to_string())?;
        let binary = binary_min_weight(bits_of(&seed.f_q), p as u32);
        let want = if p == 7 { 3 } else { 5 };
        ensure(
            binary == want,
            format!("p={p}: binary enumerator gives {binary}"),
        )?;
        for m in ms {
            let start = Instant::now();
            let lifted = hensel_lift_factors(&seed, m).unwrap();
            let code = LinearCode::from_polynomial(&lifted.f_q_ring());
            let r = code
                .min_weight_exhaustive(DEFAULT_BUDGET)
                .map_err(|e| e.to_string())?;
            let t = within(start, LIMIT_WEIGHT_EACH)?;
            ensure(r.enumerated, "not exhaustive")?;
            ensure(
                r.min_weight as u32 == binary,
                format!("p={p} m={m}: {} vs binary {binary}", r.min_weight),
            )?;
            notes.push(format!(
                "({p},{m}) d={} over 2^{} in {t:.2?}",
                r.min_weight,
                code.cardinality_log2()
            ));
        }
    }
    Ok(notes.join(", "))
}

fn odd_like() -> Outcome {
    let start = Instant::now();
    let f = build_family::<u64>(7, 4).map_err(|e| e.to_string())?;
    let code = f.code(CodeName::QPrime);
    ensure(
        code.cardinality_log2() == 16,
        "Q' is not the (p+1)/2-type code",
    )?;
    let r = code
        .min_weight_parity(DEFAULT_BUDGET)
        .map_err(|e| e.to_string())?;
    let t = within(start, LIMIT_ODD_LIKE)?;
    ensure(
        r.all_min_odd_like,
        format!("{} even-like minimum words", r.min_even_like),
    )?;
    Ok(format!(
        "d={}, {} minimum words all odd-like, {t:.2?}",
        r.min_weight, r.min_weight_count
    ))
}

fn padic_suite() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for p in (3..200u64).filter(|&p| p % 2 == 1) {
        for m in 4..=8u32 {
            let Ok(params) = family_params(p, m) else {
                continue;
            };
            pairs += 1;
            let e = expand_all(p, m).map_err(|e| e.to_string())?;
            let (hi, lo) = if params.sign == 1 {
                ([&e.p, &e.inv_p], [&e.neg_p, &e.neg_inv_p])
            } else {
                ([&e.neg_p, &e.neg_inv_p], [&e.p, &e.inv_p])
            };
            for x in hi {
                ensure(
                    matches_template(x, Template::Low111).unwrap(),
                    format!("p={p} m={m}: 111 template"),
                )?;
            }
            for x in lo {
                ensure(
                    matches_template(x, Template::Low100).unwrap(),
                    format!("p={p} m={m}: 100 template"),
                )?;
            }
            let order = 1u128 << m;
            ensure(
                u128::from(e.p.value) * u128::from(e.inv_p.value) % order == 1,
                format!("p={p} m={m}: p * (1/p) != 1"),
            )?;
            // Oracle: brute-force search for the inverse, direct negation.
            let inv = (1..order as u64)
                .find(|x| u128::from(p) * u128::from(*x) % order == 1)
                .unwrap();
            let want = [
                (Target::P, p % order as u64),
                (
                    Target::NegP,
                    (order as u64 - p % order as u64) % order as u64,
                ),
                (Target::InvP, inv),
                (Target::NegInvP, (order as u64 - inv) % order as u64),
            ];
            for (t, v) in want {
                let got = expand(t, p, m).unwrap();
                let from_digits: u64 = got
                    .digits
                    .iter()
                    .enumerate()
                    .map(|(i, &d)| u64::from(d) << i)
                    .sum();
                ensure(
                    got.value == v && from_digits == v,
                    format!("p={p} m={m} {}: {} != {v}", t.name(), got.value),
                )?;
            }
        }
    }
    let t = within(start, LIMIT_PADIC)?;
    Ok(format!("{pairs} (p,m) pairs, {t:.2?}"))
}

fn vacuity() -> Outcome {
    let pairs: Vec<(u64, u32)> = primes_pm1_mod8(200)
        .into_iter()
        .flat_map(|p| (4..=8).map(move |m| (p, m)))
        .collect();
    let scan = vacuity_scan(&pairs);
    ensure(
        scan.constructible.is_empty(),
        format!("constructible: {:?}", scan.constructible),
    )?;
    let findings = scan.findings();
    let subjects: Vec<_> = findings.iter().filter_map(|f| f.subject.clone()).collect();
    ensure(
        findings.iter().all(|f| f.kind == "vacuous_case") && subjects == ["C11", "C22"],
        format!("findings {subjects:?}"),
    )?;
    for &(p, m) in &pairs {
        if let Ok(fam) = build_family::<u64>(p, m) {
            ensure(
                !matches!(fam.case_tag, CaseTag::C11 | CaseTag::C22),
                format!("({p},{m}) built {:?}", fam.case_tag),
            )?;
        }
    }
    Ok(format!(
        "{} in-range pairs, findings for C11 and C22",
        scan.pairs_in_range
    ))
}

// Independent brute force over explicit word sets.

type Word = Vec<u64>;

fn brute_span(rows: &[Word], n: usize, m: u32) -> HashSet<Word> {
    let mask = (1u64 << m) - 1;
    let mut span: HashSet<Word> = HashSet::from([vec![0; n]]);
    for r in rows {
        let mut next = HashSet::new();
        for w in &span {
            for c in 0..=mask {
                next.insert(w.iter().zip(r).map(|(&a, &b)| (a + c * b) & mask).collect());
            }
        }
        span = next;
    }
    span
}

fn brute_dual(span: &HashSet<Word>, n: usize, m: u32) -> HashSet<Word> {
    let mask = (1u64 << m) - 1;
    let total = 1u64 << (m as usize * n);
    (0..total)
        .map(|idx| {
            (0..n)
                .map(|i| (idx >> (m as usize * i)) & mask)
                .collect::<Word>()
        })
        .filter(|v| {
            span.iter().all(|w| {
                w.iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| acc.wrapping_add(a * b))
                    & mask
                    == 0
            })
        })
        .collect()
}

fn random_rows(rng: &mut ChaCha8Rng, n: usize, m: u32) -> Vec<Word> {
    let k = rng.gen_range(0..=3);
    (0..k)
        .map(|_| {
            let mut r: Word = (0..n).map(|_| rng.gen_range(0..1u64 << m)).collect();
            // Scale some rows by 2 to exercise non-free modules.
            if rng.gen_bool(0.3) {
                r.iter_mut().for_each(|x| *x = (*x * 2) & ((1 << m) - 1));
            }
            r
        })
        .collect()
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut counts = [0usize; 4];
    while counts.iter().any(|&c| c < ORACLE_CODES) {
        let m = rng.gen_range(1..=3u32);
        let n = rng.gen_range(1..=(18 / m as usize).min(9));
        let zz = z(m);
        let rows_a = random_rows(&mut rng, n, m);
        let rows_b = random_rows(&mut rng, n, m);
        let a = LinearCode::from_rows(&rows_a, n, zz);
        let b = LinearCode::from_rows(&rows_b, n, zz);
        let span_a = brute_span(&rows_a, n, m);
        let span_b = brute_span(&rows_b, n, m);

        let canon_span = brute_span(a.rows(), n, m);
        ensure(
            canon_span == span_a,
            format!("canonical span differs (n={n} m={m})"),
        )?;
        ensure(
            1u128 << a.cardinality_log2() == span_a.len() as u128,
            format!("cardinality {} vs {}", a.cardinality_log2(), span_a.len()),
        )?;
        counts[0] += 1;

        let dual = brute_dual(&span_a, n, m);
        ensure(
            brute_span(a.dual().rows(), n, m) == dual,
            format!("dual differs (n={n} m={m})"),
        )?;
        counts[1] += 1;

        let meet: HashSet<Word> = span_a.intersection(&span_b).cloned().collect();
        let got = a.intersect(&b).unwrap();
        ensure(
            brute_span(got.rows(), n, m) == meet,
            format!("intersection differs (n={n} m={m})"),
        )?;
        counts[2] += 1;

        let weights: Vec<usize> = span_a
            .iter()
            .map(|w| w.iter().filter(|&&x| x != 0).count())
            .filter(|&w| w > 0)
            .collect();
        match (
            weights.iter().min(),
            a.min_weight_exhaustive(DEFAULT_BUDGET),
        ) {
            (None, Err(zqr::Error::NoNonzeroWords)) => {}
            (Some(&d), Ok(r)) => {
                let count = weights.iter().filter(|&&w| w == d).count() as u64;
                ensure(
                    r.min_weight == d && r.min_weight_count == count,
                    format!(
                        "min weight {}/{} vs {d}/{count}",
                        r.min_weight, r.min_weight_count
                    ),
                )?;
            }
            (want, got) => return Err(format!("min weight mismatch: {want:?} vs {got:?}")),
        }
        counts[3] += 1;
    }
    Ok(format!(
        "canonical {}, dual {}, intersect {}, min_weight {} random codes",
        counts[0], counts[1], counts[2], counts[3]
    ))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1", "lemma suite", lemma_suite),
        ("2", "product identities", product_identities),
        ("3", "idempotent scan", idempotent_scan),
        ("4a", "family clauses (7,4)", family_7_4),
        ("4b", "family clauses (17,5)", family_17_5),
        ("5", "hensel lift", hensel),
        ("6", "minimum weight", min_weight),
        ("7", "odd-like minimum words", odd_like),
        ("8", "2-adic suite", padic_suite),
        ("9", "vacuity report", vacuity),
        ("10", "oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        match f() {
            Ok(detail) => println!("criterion {id} [{name}]: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id} [{name}]: FAIL ({detail})");
            }
        }
    }
    println!("acceptance: {failed} failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
