//! Command-line front end. Exit codes: 0 success, 1 verification mismatch,
//! 2 invalid arguments.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::closed_form::{closed_qn, LabelAlignment};
use crate::group::{is_normal, GroupError, GroupParams};
use crate::verify::{
    invariants_to_json, matrix_to_json, run_verify, CheckResult, HContext, ParamsJson,
    VerificationReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest group order the subgroup enumeration is run on.
pub const MAX_GROUP_ORDER: u64 = 5000;
pub const MAX_POWER: u32 = 32;

#[derive(Debug, Parser)]
#[command(
    name = "burnside-aug",
    version,
    about = "Burnside rings and augmentation quotients of the modular p-groups H(p,m)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List conjugacy classes of subgroups
    Subgroups(CommonArgs),
    /// Print the table of marks
    Marks(CommonArgs),
    /// Hermite basis of the n-th power of the augmentation ideal
    Delta(PowerArgs),
    /// Invariants of Q_n = Delta^n / Delta^(n+1)
    Qn(PowerArgs),
    /// Compare the generic pipeline with the closed forms
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Odd prime p
    #[arg(long = "p")]
    p: u64,
    /// Exponent m (order of a is p^m)
    #[arg(long = "m")]
    m: u32,
    /// Write a JSON report to this path instead of printing a table
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PowerArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Power index n >= 1
    #[arg(long = "n", default_value_t = 1)]
    n: u32,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Largest power index to check
    #[arg(long = "max-n", default_value_t = 6)]
    max_n: u32,
}

struct UsageError(String);

fn params_from(
    args: &CommonArgs,
    needs_closed_form: bool,
    err: &mut dyn Write,
) -> Result<GroupParams, UsageError> {
    let params = GroupParams::new(args.p, args.m).map_err(|e| {
        UsageError(match e {
            GroupError::NotOddPrime(_) => "p must be an odd prime".to_string(),
            other => other.to_string(),
        })
    })?;
    if params.group_order() > MAX_GROUP_ORDER {
        return Err(UsageError(format!(
            "group order {} exceeds the enumeration limit {MAX_GROUP_ORDER}",
            params.group_order()
        )));
    }
    if params.m() < 3 {
        if needs_closed_form {
            return Err(UsageError("verify requires m >= 3".into()));
        }
        let _ = writeln!(
            err,
            "warning: m = {} is outside the closed-form range; closed-form checks are skipped",
            params.m()
        );
    }
    Ok(params)
}

fn check_power(name: &str, n: u32) -> Result<(), UsageError> {
    if n == 0 || n > MAX_POWER {
        return Err(UsageError(format!(
            "{name} must be between 1 and {MAX_POWER}"
        )));
    }
    Ok(())
}

fn params_json(params: &GroupParams) -> ParamsJson {
    ParamsJson {
        p: params.p(),
        m: params.m(),
    }
}

fn class_names(ctx: &HContext) -> Vec<String> {
    match &ctx.alignment {
        Ok(al) => al.labels_by_class().iter().map(|l| l.to_string()).collect(),
        Err(_) => (0..ctx.table.rank())
            .map(|i| format!("class_{i}"))
            .collect(),
    }
}

fn closed_alignment(ctx: &HContext) -> Option<&LabelAlignment> {
    if ctx.params.m() < 3 {
        return None;
    }
    ctx.alignment.as_ref().ok()
}

/// Human-readable text plus the report for one subcommand.
type Outcome = (String, VerificationReport);

fn run_subgroups(params: GroupParams) -> Outcome {
    let start = Instant::now();
    let ctx = HContext::build(params);
    let names = class_names(&ctx);
    let classes = ctx.table.classes();
    let mut text = format!(
        "{params}: {} subgroups in {} conjugacy classes\n{:>5} {:>6} {:>5} {:>7}  label\n",
        ctx.subgroups.len(),
        classes.len(),
        "class",
        "order",
        "size",
        "normal"
    );
    let mut rows = Vec::new();
    for (i, class) in classes.classes().iter().enumerate() {
        let rep = &class[0];
        let normal = is_normal(&ctx.group, rep);
        text.push_str(&format!(
            "{i:>5} {:>6} {:>5} {:>7}  {}\n",
            rep.order(),
            class.len(),
            normal,
            names[i]
        ));
        let gens: Vec<Value> = rep
            .generators(&ctx.group)
            .iter()
            .map(|g| json!([g.u(), g.v()]))
            .collect();
        rows.push(json!({
            "index": i,
            "label": names[i],
            "order": rep.order(),
            "size": class.len(),
            "normal": normal,
            "generators": gens,
        }));
    }
    let mut checks = Vec::new();
    if params.m() >= 3 {
        checks.push(ctx.subgroup_classification());
    }
    let report = VerificationReport {
        params: params_json(&params),
        max_n: None,
        checks,
        results: json!({ "subgroups": ctx.subgroups.len(), "classes": rows }),
        wall_time: start.elapsed(),
    };
    (text, report)
}

fn run_marks(params: GroupParams) -> Outcome {
    let start = Instant::now();
    let ctx = HContext::build(params);
    let names = class_names(&ctx);
    let marks = ctx.table.marks();
    let width = names.iter().map(|s| s.len()).max().unwrap_or(1).max(4);
    let mut text = format!(
        "table of marks of {params} (row K, column G/L)\n{:width$} ",
        ""
    );
    for n in &names {
        text.push_str(&format!(" {n:>width$}"));
    }
    text.push('\n');
    for (i, name) in names.iter().enumerate() {
        text.push_str(&format!("{name:>width$} "));
        for x in marks.row(i) {
            text.push_str(&format!(" {:>width$}", x.to_string()));
        }
        text.push('\n');
    }
    let report = VerificationReport {
        params: params_json(&params),
        max_n: None,
        checks: Vec::new(),
        results: json!({ "labels": names, "marks": matrix_to_json(marks) }),
        wall_time: start.elapsed(),
    };
    (text, report)
}

fn run_delta(params: GroupParams, n: u32) -> Result<Outcome, String> {
    let start = Instant::now();
    let ctx = HContext::build(params);
    let names = class_names(&ctx);
    let power = ctx.table.ideal_power(n).map_err(|e| e.to_string())?;
    let mut checks = Vec::new();
    if let Some(al) = closed_alignment(&ctx) {
        let check = match ctx.closed_lattice(al, n) {
            Ok(closed) if closed == power.basis => {
                CheckResult::pass("delta_matches_closed_form", format!("Delta^{n} agrees"))
            }
            Ok(_) => CheckResult::fail("delta_matches_closed_form", format!("Delta^{n} differs")),
            Err(e) => CheckResult::fail("delta_matches_closed_form", e),
        };
        checks.push(check);
    }
    let mut text = format!(
        "Delta^{n} of {params}: Hermite basis in coordinates ({})\n",
        names[..ctx.table.delta_rank()].join(", ")
    );
    text.push_str(&power.basis.to_string());
    let report = VerificationReport {
        params: params_json(&params),
        max_n: None,
        checks,
        results: json!({
            "n": n,
            "coordinates": &names[..ctx.table.delta_rank()],
            "basis": matrix_to_json(&power.basis),
        }),
        wall_time: start.elapsed(),
    };
    Ok((text, report))
}

fn run_qn(params: GroupParams, n: u32) -> Result<Outcome, String> {
    let start = Instant::now();
    let ctx = HContext::build(params);
    let q = ctx.table.quotient_qn(n).map_err(|e| e.to_string())?;
    let mut checks = Vec::new();
    if params.m() >= 3 {
        let want = closed_qn(&params, n).map_err(|e| e.to_string())?;
        checks.push(if q == want {
            CheckResult::pass("qn_matches_closed_form", format!("Q_{n} = {q}"))
        } else {
            CheckResult::fail(
                "qn_matches_closed_form",
                format!("Q_{n} = {q}, closed form {want}"),
            )
        });
    }
    let report = VerificationReport {
        params: params_json(&params),
        max_n: None,
        checks,
        results: json!({ "n": n, "invariants": invariants_to_json(&q) }),
        wall_time: start.elapsed(),
    };
    Ok((format!("{q}\n"), report))
}

fn verify_text(report: &VerificationReport) -> String {
    let mut text = format!(
        "verify p={} m={} max-n={}\n",
        report.params.p,
        report.params.m,
        report.max_n.unwrap_or(0)
    );
    for c in &report.checks {
        let tag = if c.passed() { "pass" } else { "FAIL" };
        text.push_str(&format!("[{tag}] {}: {}\n", c.name, c.detail));
    }
    text.push_str(if report.passed() {
        "overall: pass\n"
    } else {
        "overall: FAIL\n"
    });
    text
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };

    let outcome = dispatch(cli.command, err);
    let (text, report, json_path) = match outcome {
        Ok(v) => v,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_MISMATCH;
        }
    };

    match json_path {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, report.to_json() + "\n") {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = write!(out, "{text}");
        }
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

fn dispatch(
    command: Command,
    err: &mut dyn Write,
) -> Result<(String, VerificationReport, Option<PathBuf>), Failure> {
    match command {
        Command::Subgroups(args) => {
            let params = params_from(&args, false, err)?;
            let (t, r) = run_subgroups(params);
            Ok((t, r, args.json))
        }
        Command::Marks(args) => {
            let params = params_from(&args, false, err)?;
            let (t, r) = run_marks(params);
            Ok((t, r, args.json))
        }
        Command::Delta(args) => {
            check_power("n", args.n)?;
            let params = params_from(&args.common, false, err)?;
            let (t, r) = run_delta(params, args.n).map_err(Failure::Internal)?;
            Ok((t, r, args.common.json))
        }
        Command::Qn(args) => {
            check_power("n", args.n)?;
            let params = params_from(&args.common, false, err)?;
            let (t, r) = run_qn(params, args.n).map_err(Failure::Internal)?;
            Ok((t, r, args.common.json))
        }
        Command::Verify(args) => {
            check_power("max-n", args.max_n)?;
            let params = params_from(&args.common, true, err)?;
            let report =
                run_verify(params, args.max_n).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok((verify_text(&report), report, args.common.json))
        }
    }
}
