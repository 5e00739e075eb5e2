//! Command-line front end. [`run`] parses arguments, dispatches, writes JSON
//! or CSV to the given sink and returns the process exit status.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zqr::config::{Format, SweepConfig};
use zqr::lincode::{LinearCode, DEFAULT_BUDGET};
use zqr::modring::{count_zero_sums, quad_partition, Modulus};
use zqr::padic::expand_all;
use zqr::polyring::{binary_qr_factors, hensel_lift_factors};
use zqr::qr::{build_family, product_identities_report, solve_idempotent_system, CodeName};
use zqr::verify::{
    read_expected, run_sweep, EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, SCHEMA_VERSION,
};
use zqr::Error;

#[derive(Parser, Debug)]
#[command(name = "zqr", version, about = "Quadratic residue codes over Z/2^m")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Residues and nonresidues modulo p.
    Partition { p: u64 },
    /// Products of e1, e2 and h against their closed forms.
    Identities { p: u64, m: u32 },
    /// All idempotents alpha + beta e1 + gamma e2 with beta != gamma.
    Idempotents { p: u64, m: u32 },
    /// The four family codes and their structural clauses.
    Family { p: u64, m: u32 },
    /// Runs every check over a configured grid.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the format in the config file.
        #[arg(long, value_enum)]
        format: Option<OutFormat>,
    },
    /// Minimum Hamming weight of a family code or of the lifted generator's ideal.
    Weight {
        p: u64,
        m: u32,
        /// Code to measure; all available codes when omitted.
        #[arg(long, value_enum)]
        code: Option<CodeArg>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Fail rather than report a bound when the budget is too small.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// Binary digits of p, -p, 1/p, -1/p modulo 2^m.
    Padic { p: u64, m: u32 },
    /// Hensel lift of the binary factors of x^p - 1 to Z/2^m.
    Lift { p: u64, m: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CodeArg {
    Q,
    Qprime,
    N,
    Nprime,
    Lift,
}

impl CodeArg {
    const ALL: [CodeArg; 5] = [
        CodeArg::Q,
        CodeArg::Qprime,
        CodeArg::N,
        CodeArg::Nprime,
        CodeArg::Lift,
    ];

    fn name(&self) -> &'static str {
        match self {
            CodeArg::Q => "q",
            CodeArg::Qprime => "qprime",
            CodeArg::N => "n",
            CodeArg::Nprime => "nprime",
            CodeArg::Lift => "lift",
        }
    }

    fn family_code(&self) -> Option<CodeName> {
        match self {
            CodeArg::Q => Some(CodeName::Q),
            CodeArg::Qprime => Some(CodeName::QPrime),
            CodeArg::N => Some(CodeName::N),
            CodeArg::Nprime => Some(CodeName::NPrime),
            CodeArg::Lift => None,
        }
    }
}

/// Result of a subcommand before rendering.
struct Outcome {
    body: Body,
    code: i32,
}

enum Body {
    Json(Value),
    Text(String),
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let outcome = match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_for(&e);
        }
    };
    let written = match outcome.body {
        Body::Json(v) => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&v).expect("json value")
        ),
        Body::Text(t) => write!(out, "{t}"),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}

fn json_outcome(mut v: Value, code: i32) -> Outcome {
    v["schema_version"] = json!(SCHEMA_VERSION);
    Outcome {
        body: Body::Json(v),
        code,
    }
}

fn dispatch(cmd: Command) -> zqr::Result<Outcome> {
    match cmd {
        Command::Partition { p } => partition(p),
        Command::Identities { p, m } => identities(p, m),
        Command::Idempotents { p, m } => idempotents(p, m),
        Command::Family { p, m } => family(p, m),
        Command::Verify { config, format } => verify(config, format),
        Command::Weight {
            p,
            m,
            code,
            budget,
            exhaustive,
            format,
        } => weight(p, m, code, budget, exhaustive, format),
        Command::Padic { p, m } => padic(p, m),
        Command::Lift { p, m } => lift(p, m),
    }
}

fn partition(p: u64) -> zqr::Result<Outcome> {
    let part = quad_partition(p)?;
    let (q, n) = (part.residues(), part.nonresidues());
    Ok(json_outcome(
        json!({
            "p": p,
            "residues": q,
            "nonresidues": n,
            "lemma_k": part.lemma_class().k(),
            "zero_sums": {
                "qq": count_zero_sums(q, q, p),
                "nn": count_zero_sums(n, n, p),
                "qn": count_zero_sums(q, n, p),
            },
        }),
        EXIT_OK,
    ))
}

fn identities(p: u64, m: u32) -> zqr::Result<Outcome> {
    let r = product_identities_report(p, m)?;
    let code = if r.all_hold() { EXIT_OK } else { EXIT_FAILED };
    Ok(json_outcome(
        serde_json::to_value(&r).expect("report"),
        code,
    ))
}

fn idempotents(p: u64, m: u32) -> zqr::Result<Outcome> {
    let sols = solve_idempotent_system(p, m)?;
    let list: Vec<Value> = sols
        .iter()
        .map(|c| {
            json!({
                "alpha": c.alpha,
                "beta": c.beta,
                "gamma": c.gamma,
                "trace_sum": c.trace_sum(),
                "trace_relation": c.satisfies_trace_relation(),
            })
        })
        .collect();
    Ok(json_outcome(
        json!({ "p": p, "m": m, "solutions": list }),
        EXIT_OK,
    ))
}

fn family(p: u64, m: u32) -> zqr::Result<Outcome> {
    let f = build_family::<u64>(p, m)?;
    let clauses = f.clauses();
    let code = if clauses.iter().all(|c| c.holds) {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    let sizes: serde_json::Map<String, Value> = CodeName::ALL
        .iter()
        .map(|c| (c.name().to_string(), json!(f.code(*c).cardinality_log2())))
        .collect();
    Ok(json_outcome(
        json!({
            "p": p,
            "m": m,
            "k": f.params.k,
            "sign": f.params.sign,
            "case": f.case_tag.name(),
            "coeffs": { "alpha": f.coeffs.alpha, "beta": f.coeffs.beta, "gamma": f.coeffs.gamma },
            "idempotents": {
                "q": f.idempotents.q,
                "qprime": f.idempotents.q_prime,
                "n": f.idempotents.n,
                "nprime": f.idempotents.n_prime,
            },
            "log2_sizes": sizes,
            "contains_lifted_generator": f.contains_lifted_generator,
            "clauses": clauses,
        }),
        code,
    ))
}

fn verify(path: PathBuf, format: Option<OutFormat>) -> zqr::Result<Outcome> {
    let cfg = SweepConfig::load(&path)?;
    let expected = cfg
        .expected_errata
        .as_deref()
        .map(read_expected)
        .transpose()?;
    let report = run_sweep(&cfg, expected);
    let format = match format {
        Some(OutFormat::Csv) => Format::Csv,
        Some(OutFormat::Json) => Format::Json,
        None => cfg.format,
    };
    let body = match format {
        Format::Json => Body::Json(report.to_json()),
        Format::Csv => Body::Text(report.to_csv()),
    };
    let code = report.exit_code();
    if cfg.output == "-" {
        return Ok(Outcome { body, code });
    }
    let text = match body {
        Body::Json(v) => serde_json::to_string_pretty(&v).expect("json value") + "\n",
        Body::Text(t) => t,
    };
    std::fs::write(&cfg.output, text).map_err(|e| Error::Config(format!("{}: {e}", cfg.output)))?;
    let summary = serde_json::to_value(&report.summary).expect("summary");
    Ok(json_outcome(
        json!({ "output": cfg.output, "summary": summary }),
        code,
    ))
}

fn weight(
    p: u64,
    m: u32,
    code: Option<CodeArg>,
    budget: u64,
    exhaustive: bool,
    format: OutFormat,
) -> zqr::Result<Outcome> {
    let z = Modulus::<u64>::new(m)?;
    let lifted = hensel_lift_factors(&binary_qr_factors::<u64>(p)?, z.exponent())?;
    let wanted: Vec<CodeArg> = code.map_or_else(|| CodeArg::ALL.to_vec(), |c| vec![c]);
    let family = if wanted.iter().any(|c| c.family_code().is_some()) {
        match build_family::<u64>(p, m) {
            Ok(f) => Some(f),
            Err(e) if code.is_some() => return Err(e),
            Err(_) => None,
        }
    } else {
        None
    };
    let mut rows = Vec::new();
    for c in wanted {
        let lc: LinearCode<u64> = match (c.family_code(), &family) {
            (Some(name), Some(f)) => f.code(name).clone(),
            (Some(_), None) => continue,
            (None, _) => LinearCode::from_polynomial(&lifted.f_q_ring()),
        };
        let report = if exhaustive {
            lc.min_weight_exhaustive(budget)?
        } else {
            lc.min_weight(budget)?
        };
        rows.push((c, lc.cardinality_log2(), report));
    }
    let body = match format {
        OutFormat::Csv => {
            let mut s = String::from("p,m,code,log2_size,min_weight,exhaustive\n");
            for (c, log, r) in &rows {
                s.push_str(&format!(
                    "{p},{m},{},{log},{},{}\n",
                    c.name(),
                    r.min_weight,
                    r.enumerated
                ));
            }
            return Ok(Outcome {
                body: Body::Text(s),
                code: EXIT_OK,
            });
        }
        OutFormat::Json => json!({
            "p": p,
            "m": m,
            "budget": budget,
            "codes": rows
                .iter()
                .map(|(c, log, r)| json!({ "code": c.name(), "log2_size": log, "report": r }))
                .collect::<Vec<_>>(),
        }),
    };
    Ok(json_outcome(body, EXIT_OK))
}

fn padic(p: u64, m: u32) -> zqr::Result<Outcome> {
    let e = expand_all(p, m)?;
    Ok(json_outcome(
        json!({
            "prime": p,
            "m": m,
            "p": e.p.digits,
            "neg_p": e.neg_p.digits,
            "inv_p": e.inv_p.digits,
            "neg_inv_p": e.neg_inv_p.digits,
            "values": {
                "p": e.p.value,
                "neg_p": e.neg_p.value,
                "inv_p": e.inv_p.value,
                "neg_inv_p": e.neg_inv_p.value,
            },
        }),
        EXIT_OK,
    ))
}

fn lift(p: u64, m: u32) -> zqr::Result<Outcome> {
    let seed = binary_qr_factors::<u64>(p)?;
    let f = hensel_lift_factors(&seed, m)?;
    let code = if f.verifies() { EXIT_OK } else { EXIT_FAILED };
    Ok(json_outcome(
        json!({
            "p": p,
            "m": m,
            "f_unit": f.f_unit,
            "f_q": f.f_q,
            "f_n": f.f_n,
            "pretty": {
                "f_unit": f.f_unit.to_pretty(),
                "f_q": f.f_q.to_pretty(),
                "f_n": f.f_n.to_pretty(),
            },
            "product_is_x_p_minus_1": f.verifies(),
        }),
        code,
    ))
}
