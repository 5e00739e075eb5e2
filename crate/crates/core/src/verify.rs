//! Sweep verifier: runs every structural check over a grid of `(p, m)` and
//! separates genuine failures from known discrepancies ("errata").

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::SweepConfig;
use crate::error::{Error, Result};
use crate::lincode::LinearCode;
use crate::modring::{
    count_zero_sums, family_params, quad_partition, residue_class_counts, LemmaClass, Modulus,
    QuadPartition, ResidueClass,
};
use crate::padic::{expand_all, inverse_equals_self, matches_template, Template};
use crate::polyring::{binary_qr_factors, hensel_lift_factors};
use crate::qr::{
    build_family, product_identities_report, solve_idempotent_system, swap_conjugate, CaseTag,
    IdempotentCoeffs,
};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A known discrepancy, listed in the expectation file.
    Erratum,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub p: Option<u64>,
    pub m: Option<u32>,
    pub status: Status,
    pub detail: String,
}

/// A reproducible discrepancy between a stated claim and exact computation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Finding {
    pub kind: String,
    pub p: Option<u64>,
    pub m: Option<u32>,
    pub subject: Option<String>,
    pub detail: Value,
}

impl Finding {
    /// Stable identifier, e.g. `trace_sum_not_pm_p p=23 m=5`.
    pub fn key(&self) -> String {
        let mut k = self.kind.clone();
        if let Some(p) = self.p {
            k.push_str(&format!(" p={p}"));
        }
        if let Some(m) = self.m {
            k.push_str(&format!(" m={m}"));
        }
        if let Some(s) = &self.subject {
            k.push_str(&format!(" [{s}]"));
        }
        k
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub erratum: usize,
    pub skipped: usize,
    pub findings: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpectationDiff {
    pub missing: Vec<String>,
    pub unexpected: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub p_list: Vec<u64>,
    pub m_list: Vec<u32>,
    pub budget: u64,
    pub checks: Vec<Check>,
    pub errata: Vec<Finding>,
    pub expectation: Option<ExpectationDiff>,
    pub budget_exceeded: bool,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.budget_exceeded {
            EXIT_BUDGET
        } else if self.passed() {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }

    /// JSON with lexicographically sorted object keys.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,id,p,m,status,detail\n");
        let opt = |v: Option<String>| v.unwrap_or_default();
        for c in &self.checks {
            out.push_str(&format!(
                "check,{},{},{},{},{}\n",
                csv_field(&c.id),
                opt(c.p.map(|p| p.to_string())),
                opt(c.m.map(|m| m.to_string())),
                serde_json::to_value(c.status).unwrap().as_str().unwrap(),
                csv_field(&c.detail)
            ));
        }
        for f in &self.errata {
            out.push_str(&format!(
                "erratum,{},{},{},erratum,{}\n",
                csv_field(&f.key()),
                opt(f.p.map(|p| p.to_string())),
                opt(f.m.map(|m| m.to_string())),
                csv_field(&f.detail.to_string())
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Reads an expectation file: one finding key per line, `#` comments.
pub fn read_expected(path: &std::path::Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect())
}

struct Sweep<'a> {
    cfg: &'a SweepConfig,
    expected: Option<BTreeSet<String>>,
    checks: Vec<Check>,
    errata: Vec<Finding>,
    budget_exceeded: bool,
}

impl Sweep<'_> {
    fn check(
        &mut self,
        id: &str,
        p: Option<u64>,
        m: Option<u32>,
        ok: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            id: id.into(),
            p,
            m,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
    }

    fn skip(&mut self, id: &str, p: u64, m: u32, detail: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            p: Some(p),
            m: Some(m),
            status: Status::Skipped,
            detail: detail.into(),
        });
    }

    fn finding(
        &mut self,
        kind: &str,
        p: Option<u64>,
        m: Option<u32>,
        subject: Option<String>,
        detail: Value,
    ) {
        self.errata.push(Finding {
            kind: kind.into(),
            p,
            m,
            subject,
            detail,
        });
    }

    /// A claim that fails is a failure unless the expectation file lists it,
    /// in which case it is recorded as an erratum.
    fn claim(&mut self, id: &str, p: u64, m: u32, subject: String, holds: bool, detail: String) {
        if holds {
            self.check(id, Some(p), Some(m), true, detail);
            return;
        }
        let finding = Finding {
            kind: id.into(),
            p: Some(p),
            m: Some(m),
            subject: Some(subject),
            detail: Value::String(detail.clone()),
        };
        let listed = self
            .expected
            .as_ref()
            .is_some_and(|e| e.contains(&finding.key()));
        self.checks.push(Check {
            id: id.into(),
            p: Some(p),
            m: Some(m),
            status: if listed {
                Status::Erratum
            } else {
                Status::Fail
            },
            detail,
        });
        self.errata.push(finding);
    }

    fn per_prime(&mut self, p: u64) {
        let part = match quad_partition(p) {
            Ok(part) => part,
            Err(e) => {
                self.check("partition", Some(p), None, false, e.to_string());
                return;
            }
        };
        self.check("partition", Some(p), None, partition_ok(&part), "");

        let (q, n) = (part.residues(), part.nonresidues());
        let half = (p as usize - 1) / 2;
        let (qq, nn, qn) = (
            count_zero_sums(q, q, p),
            count_zero_sums(n, n, p),
            count_zero_sums(q, n, p),
        );
        let expected = if p % 8 == 7 {
            (0, 0, half)
        } else {
            (half, half, 0)
        };
        self.check(
            "zero_sums",
            Some(p),
            None,
            (qq, nn, qn) == expected,
            format!("QQ={qq} NN={nn} QN={qn}"),
        );
        if p % 8 == 1 && nn != 0 {
            self.finding(
                "printed_zero_sum_statement",
                Some(p),
                None,
                None,
                json!({ "claim": "i + j != 0 for all i, j in N", "nn_zero_sums": nn }),
            );
        }

        let k = part.lemma_class().k();
        let (same, mixed) = match part.lemma_class() {
            LemmaClass::MinusOne(_) => ((2 * k - 1, 2 * k, 0), (2 * k - 1, 2 * k - 1, 1)),
            LemmaClass::PlusOne(_) => ((2 * k - 1, 2 * k, 1), (2 * k, 2 * k, 0)),
        };
        let as_usize = |(a, b, c): (u64, u64, u64)| (a as usize, b as usize, c as usize);
        let ok = q.iter().all(|&i| {
            residue_class_counts(i, q, &part).as_tuple() == as_usize(same)
                && residue_class_counts(i, n, &part).as_tuple() == as_usize(mixed)
        });
        self.check(
            "residue_counts",
            Some(p),
            None,
            ok,
            format!("same-class {same:?}, mixed {mixed:?}"),
        );

        match binary_qr_factors::<u64>(p) {
            Ok(f) => {
                let deg = (p - 1) as usize / 2;
                let ok = f.verifies() && f.f_q.degree() == Some(deg) && f.f_n.degree() == Some(deg);
                self.check("binary_factors", Some(p), None, ok, f.f_q.to_pretty());
            }
            Err(e) => self.check("binary_factors", Some(p), None, false, e.to_string()),
        }
    }

    fn per_pair(&mut self, p: u64, m: u32) {
        if let Err(e) = self.try_pair(p, m) {
            self.check("internal", Some(p), Some(m), false, e.to_string());
        }
    }

    fn try_pair(&mut self, p: u64, m: u32) -> Result<()> {
        let z = Modulus::<u64>::new(m)?;
        let pm = z.from_u64(p);
        let inv = z.inv(pm).expect("odd p");

        let ids = product_identities_report(p, m)?;
        let detail = ids
            .checks
            .iter()
            .map(|c| {
                format!(
                    "{}={}:{}",
                    c.name,
                    c.formula,
                    if c.holds { "ok" } else { "FAIL" }
                )
            })
            .collect::<Vec<_>>()
            .join(" ");
        self.check(
            "product_identities",
            Some(p),
            Some(m),
            ids.all_hold(),
            detail,
        );
        for f in ids.printed_forms.iter().filter(|f| !f.holds) {
            self.finding(
                "printed_product_identity",
                Some(p),
                Some(m),
                Some(f.name.clone()),
                json!({ "printed": f.formula }),
            );
        }

        let sols = solve_idempotent_system(p, m)?;
        self.check_solutions(p, m, &sols, pm, inv);
        self.check_padic(p, m);
        self.check_hensel(p, m)?;
        self.check_family(p, m)?;
        self.check_lift_weight(p, m)?;
        Ok(())
    }

    fn check_solutions(&mut self, p: u64, m: u32, sols: &[IdempotentCoeffs], pm: u64, inv: u64) {
        let z = Modulus::<u64>::new(m).expect("valid");
        let set: BTreeSet<_> = sols.iter().map(|c| (c.alpha, c.beta, c.gamma)).collect();
        let idem = sols
            .iter()
            .all(|c| c.to_poly::<u64>().is_ok_and(|e| e.is_idempotent()));
        self.check(
            "idempotent_solutions",
            Some(p),
            Some(m),
            !sols.is_empty() && idem,
            format!("{} solutions", sols.len()),
        );
        self.check(
            "trace_relation",
            Some(p),
            Some(m),
            sols.iter().all(IdempotentCoeffs::satisfies_trace_relation),
            "",
        );
        self.check(
            "coefficient_system",
            Some(p),
            Some(m),
            sols.iter().all(IdempotentCoeffs::coefficient_system_holds),
            "",
        );
        let closed = sols.iter().all(|c| {
            let s = swap_conjugate(c);
            set.contains(&(s.alpha, s.beta, s.gamma))
        });
        self.check("swap_closure", Some(p), Some(m), closed, "");

        let sums: BTreeSet<u64> = sols.iter().map(IdempotentCoeffs::trace_sum).collect();
        let pm_inv = [inv, z.neg(inv)];
        let pm_p = [pm, z.neg(pm)];
        self.check(
            "trace_sum_pm_inverse",
            Some(p),
            Some(m),
            sums.iter().all(|s| pm_inv.contains(s)),
            format!("sums {sums:?}, +-1/p = {pm_inv:?}"),
        );
        let all_pm_p = sums.iter().all(|s| pm_p.contains(s));
        let square_one = inverse_equals_self(p, m);
        self.check(
            "trace_sum_pm_p_iff_square_one",
            Some(p),
            Some(m),
            all_pm_p == square_one,
            format!("p^2 = {} mod 2^{m}", z.mul(pm, pm)),
        );
        if !all_pm_p {
            self.finding(
                "trace_sum_not_pm_p",
                Some(p),
                Some(m),
                None,
                json!({
                    "trace_sums": sums,
                    "pm_p": pm_p,
                    "pm_inverse_p": pm_inv,
                    "p_squared": z.mul(pm, pm),
                }),
            );
        }

        if let Ok(params) = family_params(p, m) {
            let c = z.from_u64(params.shift_constant());
            let closed = sols.iter().all(|s| {
                let dir = if s.trace_sum() == c {
                    -1i64
                } else if s.trace_sum() == z.neg(c) {
                    1
                } else {
                    return true;
                };
                let shifted = z.add(s.alpha, z.mul(z.from_i64(dir), c));
                let t = (
                    shifted,
                    z.add(s.beta, z.mul(z.from_i64(dir), c)),
                    z.add(s.gamma, z.mul(z.from_i64(dir), c)),
                );
                set.contains(&t)
            });
            self.check("shift_closure", Some(p), Some(m), closed, "");
        }
    }

    fn check_padic(&mut self, p: u64, m: u32) {
        let Ok(params) = family_params(p, m) else {
            self.skip("padic_templates", p, m, "p = +-1 mod 2^m");
            return;
        };
        let Ok(e) = expand_all(p, m) else {
            self.check(
                "padic_templates",
                Some(p),
                Some(m),
                false,
                "expansion failed",
            );
            return;
        };
        let z = Modulus::<u64>::new(m).expect("valid");
        let (hi, lo) = if params.sign == 1 {
            ([&e.p, &e.inv_p], [&e.neg_p, &e.neg_inv_p])
        } else {
            ([&e.neg_p, &e.neg_inv_p], [&e.p, &e.inv_p])
        };
        let templates = hi
            .iter()
            .all(|x| matches_template(x, Template::Low111).unwrap_or(false))
            && lo
                .iter()
                .all(|x| matches_template(x, Template::Low100).unwrap_or(false));
        self.check("padic_templates", Some(p), Some(m), templates, "");
        let arith = z.mul(e.p.value, e.inv_p.value) == 1
            && z.add(e.p.value, e.neg_p.value) == 0
            && z.mul(e.p.value, e.neg_inv_p.value) == z.neg(1);
        let oracle = e.p.value == z.from_u64(p)
            && e.inv_p.value == z.inv(z.from_u64(p)).expect("odd")
            && e.neg_p.value == z.neg(z.from_u64(p))
            && e.neg_inv_p.value == z.neg(e.inv_p.value);
        self.check("padic_arithmetic", Some(p), Some(m), arith && oracle, "");
        if e.p.value != e.inv_p.value {
            self.finding(
                "pm_p_not_pm_inverse",
                Some(p),
                Some(m),
                None,
                json!({ "p": e.p.value, "inv_p": e.inv_p.value, "digits_p": e.p.digits, "digits_inv_p": e.inv_p.digits }),
            );
        }
    }

    fn check_hensel(&mut self, p: u64, m: u32) -> Result<()> {
        let seed = binary_qr_factors::<u64>(p)?;
        let top = hensel_lift_factors(&seed, m)?;
        let tower = (1..=m).all(|j| {
            let zj = Modulus::new(j).expect("valid");
            hensel_lift_factors(&seed, j).is_ok_and(|lj| top.reduce_to(zj) == lj)
        });
        self.check(
            "hensel_lift",
            Some(p),
            Some(m),
            top.verifies() && tower,
            top.f_q.to_pretty(),
        );
        Ok(())
    }

    fn check_family(&mut self, p: u64, m: u32) -> Result<()> {
        let fam = match build_family::<u64>(p, m) {
            Ok(f) => f,
            Err(Error::OutOfFamilyRange { .. }) => {
                self.skip("family", p, m, "p = +-1 mod 2^m");
                return Ok(());
            }
            Err(Error::NoCaseApplies { .. }) => {
                let z = Modulus::<u64>::new(m)?;
                let sq = z.mul(z.from_u64(p), z.from_u64(p));
                self.skip("family", p, m, "no sub-case applies");
                self.finding(
                    "no_case_applies",
                    Some(p),
                    Some(m),
                    None,
                    json!({ "p_squared": sq, "reason": "p^2 is neither 1 nor -1 modulo 2^m" }),
                );
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        self.check(
            "family_case",
            Some(p),
            Some(m),
            matches!(fam.case_tag, CaseTag::C12 | CaseTag::C21),
            fam.case_tag.name(),
        );
        self.check(
            "family_idempotents",
            Some(p),
            Some(m),
            [
                &fam.idempotents.q,
                &fam.idempotents.q_prime,
                &fam.idempotents.n,
                &fam.idempotents.n_prime,
            ]
            .iter()
            .all(|e| e.is_idempotent()),
            "",
        );
        self.claim(
            "family_contains_lift",
            p,
            m,
            "larger Q-side code contains the lifted generator".into(),
            fam.contains_lifted_generator,
            String::new(),
        );
        for c in fam.clauses() {
            let subject = format!("{} {}", c.clause, c.name);
            self.claim("family_clause", p, m, subject, c.holds, c.detail);
        }

        let big = if fam.q.cardinality_log2() >= fam.q_prime.cardinality_log2() {
            &fam.q
        } else {
            &fam.q_prime
        };
        match big.min_weight_parity(self.cfg.budget) {
            Ok(r) => self.claim(
                "odd_like_minimum",
                p,
                m,
                "minimum words of the larger Q-side code are odd-like".into(),
                r.all_min_odd_like,
                format!(
                    "d={} even={} odd={}",
                    r.min_weight, r.min_even_like, r.min_odd_like
                ),
            ),
            Err(Error::BudgetExceeded { needed, .. }) => {
                self.over_budget("odd_like_minimum", p, m, needed)
            }
            Err(e) => return Err(e),
        }
        Ok(())
    }

    fn over_budget(&mut self, id: &str, p: u64, m: u32, needed: u64) {
        if self.cfg.require_exhaustive {
            self.budget_exceeded = true;
        }
        self.skip(
            id,
            p,
            m,
            format!("2^{needed} words exceed budget {}", self.cfg.budget),
        );
    }

    fn check_lift_weight(&mut self, p: u64, m: u32) -> Result<()> {
        let seed = binary_qr_factors::<u64>(p)?;
        let lifted = LinearCode::from_polynomial(&hensel_lift_factors(&seed, m)?.f_q_ring());
        let binary = LinearCode::from_polynomial(&seed.f_q_ring());
        let budget = self.cfg.budget;
        match (
            lifted.min_weight_exhaustive(budget),
            binary.min_weight_exhaustive(budget),
        ) {
            (Ok(a), Ok(b)) => self.check(
                "lift_min_weight",
                Some(p),
                Some(m),
                a.min_weight == b.min_weight,
                format!("lifted {} binary {}", a.min_weight, b.min_weight),
            ),
            (Err(Error::BudgetExceeded { needed, .. }), _)
            | (_, Err(Error::BudgetExceeded { needed, .. })) => {
                self.over_budget("lift_min_weight", p, m, needed)
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
        Ok(())
    }

    fn vacuity(&mut self) {
        let pairs: Vec<(u64, u32)> = self
            .cfg
            .p_list
            .iter()
            .flat_map(|&p| self.cfg.m_list.iter().map(move |&m| (p, m)))
            .collect();
        let scan = vacuity_scan(&pairs);
        self.check(
            "vacuous_cases",
            None,
            None,
            scan.constructible.is_empty(),
            format!("{} in-range pairs scanned", scan.pairs_in_range),
        );
        for f in scan.findings() {
            self.errata.push(f);
        }
    }
}

fn partition_ok(part: &QuadPartition) -> bool {
    let p = part.p();
    let (q, n) = (part.residues(), part.nonresidues());
    let half = (p as usize - 1) / 2;
    let disjoint = q.iter().all(|i| !n.contains(i));
    let closed = q
        .iter()
        .all(|&a| q.iter().all(|&b| part.is_residue(a * b % p)))
        && q.iter()
            .all(|&a| n.iter().all(|&b| part.is_nonresidue(a * b % p)));
    q.len() == half
        && n.len() == half
        && disjoint
        && part.is_residue(2)
        && part.class_of(0) == ResidueClass::Zero
        && closed
}

/// Outcome of scanning `(p, m)` pairs for the two sub-cases that need
/// `p^2 = -1 (mod 2^m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VacuityScan {
    pub pairs_in_range: usize,
    /// Pairs where some solution meets a `p^2 = -1` sub-case. Always empty
    /// for `m >= 3`, since odd squares are `1 (mod 8)`.
    pub constructible: Vec<(u64, u32, CaseTag)>,
}

impl VacuityScan {
    pub fn findings(&self) -> Vec<Finding> {
        [CaseTag::C11, CaseTag::C22]
            .into_iter()
            .filter(|t| !self.constructible.iter().any(|(_, _, c)| c == t))
            .map(|t| Finding {
                kind: "vacuous_case".into(),
                p: None,
                m: None,
                subject: Some(t.name().into()),
                detail: json!({
                    "reason": "requires p^2 = -1 mod 2^m, which has no odd solution for m >= 3",
                    "pairs_in_range": self.pairs_in_range,
                }),
            })
            .collect()
    }
}

/// Checks every pair in family range for constructibility of the sub-cases
/// that need `p^2 = -1`, using the congruence side conditions against the
/// full solution set.
pub fn vacuity_scan(pairs: &[(u64, u32)]) -> VacuityScan {
    let mut pairs_in_range = 0;
    let mut constructible = Vec::new();
    for &(p, m) in pairs {
        let Ok(params) = family_params(p, m) else {
            continue;
        };
        pairs_in_range += 1;
        let z = Modulus::<u64>::new(m).expect("valid");
        let pm = z.from_u64(p);
        for tag in [CaseTag::C11, CaseTag::C22] {
            // The trace-sum condition is checked against both possible signs,
            // so no solve is needed to refute the squared condition.
            if tag.side_conditions(&params, pm) || tag.side_conditions(&params, z.neg(pm)) {
                let sols = solve_idempotent_system(p, m).unwrap_or_default();
                if sols
                    .iter()
                    .any(|s| tag.side_conditions(&params, s.trace_sum()))
                {
                    constructible.push((p, m, tag));
                }
            }
        }
    }
    VacuityScan {
        pairs_in_range,
        constructible,
    }
}

/// Runs the full sweep. `expected` lists finding keys that are known
/// discrepancies; when given, the emitted set must match it exactly.
pub fn run_sweep(cfg: &SweepConfig, expected: Option<Vec<String>>) -> Report {
    let mut sweep = Sweep {
        cfg,
        expected: expected.map(|e| e.into_iter().collect()),
        checks: Vec::new(),
        errata: Vec::new(),
        budget_exceeded: false,
    };
    for &p in &cfg.p_list {
        sweep.per_prime(p);
    }
    for &p in &cfg.p_list {
        for &m in &cfg.m_list {
            sweep.per_pair(p, m);
        }
    }
    sweep.vacuity();
    sweep.errata.sort_by_key(Finding::key);

    let expectation = sweep.expected.as_ref().map(|exp| {
        let got: BTreeSet<String> = sweep.errata.iter().map(Finding::key).collect();
        ExpectationDiff {
            missing: exp.difference(&got).cloned().collect(),
            unexpected: got.difference(exp).cloned().collect(),
        }
    });
    if let Some(diff) = &expectation {
        let ok = diff.missing.is_empty() && diff.unexpected.is_empty();
        sweep.check(
            "errata_match_expectation",
            None,
            None,
            ok,
            format!(
                "missing {:?}, unexpected {:?}",
                diff.missing, diff.unexpected
            ),
        );
    }

    let mut summary = Summary {
        findings: sweep.errata.len(),
        ..Summary::default()
    };
    for c in &sweep.checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Erratum => summary.erratum += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Report {
        schema_version: SCHEMA_VERSION,
        p_list: cfg.p_list.clone(),
        m_list: cfg.m_list.clone(),
        budget: cfg.budget,
        checks: sweep.checks,
        errata: sweep.errata,
        expectation,
        budget_exceeded: sweep.budget_exceeded,
        summary,
    }
}
