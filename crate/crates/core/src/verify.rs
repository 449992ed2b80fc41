//! Generic-versus-closed-form comparison checks and the report they produce.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::burnside::MarksTable;
use crate::closed_form::{
    self, all_labels, closed_delta_power_basis, closed_mul, closed_qn, label_alignment, BasisLabel,
    ClosedFormError, LabelAlignment, LabelCombination,
};
use crate::group::{enumerate_subgroups, is_normal, Element, GroupParams, ModularGroup, Subgroup};
use crate::zlattice::{self, AbelianInvariants, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl CheckResult {
    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(name: &str, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Fail,
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamsJson {
    pub p: u64,
    pub m: u32,
}

/// Outcome of one CLI run: checks plus subcommand-specific results.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub params: ParamsJson,
    pub max_n: Option<u32>,
    pub checks: Vec<CheckResult>,
    pub results: Value,
    pub wall_time: Duration,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    params: &'a ParamsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_n: Option<u32>,
    checks: &'a [CheckResult],
    results: &'a Value,
    wall_time_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> String {
        let doc = ReportJson {
            params: &self.params,
            max_n: self.max_n,
            checks: &self.checks,
            results: &self.results,
            wall_time_ms: self.wall_time.as_millis(),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}

pub fn big_to_json(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(big_to_json).collect()))
            .collect(),
    )
}

pub fn invariants_to_json(inv: &AbelianInvariants) -> Value {
    json!({
        "divisors": inv.divisors().iter().map(big_to_json).collect::<Vec<_>>(),
        "free_rank": inv.free_rank(),
    })
}

/// Multiplication table under test; the real one is [`closed_mul`].
pub type MulTable = dyn Fn(&GroupParams, BasisLabel, BasisLabel) -> LabelCombination + Sync;

/// Everything the checks share for one `H(p,m)`: subgroups, marks, labels.
pub struct HContext {
    pub params: GroupParams,
    pub group: ModularGroup,
    pub subgroups: Vec<Subgroup<Element>>,
    pub table: MarksTable<Element>,
    pub alignment: Result<LabelAlignment, ClosedFormError>,
}

impl HContext {
    pub fn build(params: GroupParams) -> Self {
        let group = ModularGroup::new(params);
        let subgroups = enumerate_subgroups(&group);
        let classes = crate::group::conjugacy_classes_of_subgroups(&group, &subgroups);
        let table = crate::burnside::marks_for_classes(&group, classes);
        let alignment = label_alignment(&params, table.classes());
        Self {
            params,
            group,
            subgroups,
            table,
            alignment,
        }
    }

    /// Enumerated subgroups are exactly `N_i`, `M_kl` and `H`; normality and
    /// conjugacy match the closed description.
    pub fn subgroup_classification(&self) -> CheckResult {
        const NAME: &str = "subgroup_classification";
        let params = &self.params;
        let (p, m) = (params.p(), params.m());

        let mut normal_expected: BTreeSet<Subgroup<Element>> = BTreeSet::new();
        let mut top_class: BTreeSet<Subgroup<Element>> = BTreeSet::new();
        for i in 0..=m {
            normal_expected.insert(closed_form::subgroup_n(params, i).expect("i <= m"));
        }
        for k in 1..=m {
            for l in 0..p {
                let s = closed_form::subgroup_m(params, k, l).expect("1 <= k <= m");
                if k < m {
                    normal_expected.insert(s);
                } else {
                    top_class.insert(s);
                }
            }
        }
        normal_expected.insert(closed_form::whole_group(params));

        let expected_count = (m as u64) * p + m as u64 + 2;
        let expected: BTreeSet<_> = normal_expected.union(&top_class).cloned().collect();
        let found: BTreeSet<_> = self.subgroups.iter().cloned().collect();
        if expected.len() as u64 != expected_count {
            return CheckResult::fail(
                NAME,
                format!(
                    "closed constructors give {} distinct subgroups, expected {expected_count}",
                    expected.len()
                ),
            );
        }
        if found != expected {
            return CheckResult::fail(
                NAME,
                format!(
                    "enumeration found {} subgroups, closed list has {}; {} missing, {} extra",
                    found.len(),
                    expected.len(),
                    expected.difference(&found).count(),
                    found.difference(&expected).count()
                ),
            );
        }
        for s in &self.subgroups {
            let normal = is_normal(&self.group, s);
            if normal != normal_expected.contains(s) {
                return CheckResult::fail(
                    NAME,
                    format!(
                        "subgroup of order {} has normal = {normal}, unexpected",
                        s.order()
                    ),
                );
            }
        }
        let classes = self.table.classes();
        for class in classes.classes() {
            let members: BTreeSet<_> = class.iter().cloned().collect();
            let ok = if top_class.contains(&class[0]) {
                members == top_class
            } else {
                class.len() == 1
            };
            if !ok {
                return CheckResult::fail(
                    NAME,
                    format!(
                        "class of a subgroup of order {} has size {}",
                        class[0].order(),
                        class.len()
                    ),
                );
            }
        }
        CheckResult::pass(
            NAME,
            format!(
                "{} subgroups matched, {} classes, {} normal, one class of size {p}",
                found.len(),
                classes.len(),
                normal_expected.len()
            ),
        )
    }

    fn alignment(&self) -> Result<&LabelAlignment, String> {
        self.alignment.as_ref().map_err(|e| e.to_string())
    }

    /// Compares `mul` with mark-based multiplication on every ordered label pair.
    pub fn mult_table_with(&self, mul: &MulTable) -> CheckResult {
        const NAME: &str = "mult_table";
        let al = match self.alignment() {
            Ok(al) => al,
            Err(e) => return CheckResult::fail(NAME, e),
        };
        let products = match self.table.products() {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(NAME, e.to_string()),
        };
        let labels = all_labels(&self.params);
        for &x in &labels {
            for &y in &labels {
                let generic = al.to_combination(&products[al.index(x)][al.index(y)]);
                let closed = mul(&self.params, x, y);
                if generic != closed {
                    return CheckResult::fail(
                        NAME,
                        format!("{x} * {y}: generic {generic}, closed form {closed}"),
                    );
                }
            }
        }
        CheckResult::pass(NAME, format!("{} ordered pairs agree", labels.len().pow(2)))
    }

    pub fn mult_table(&self) -> CheckResult {
        self.mult_table_with(&closed_mul)
    }

    /// A table with one flipped coefficient must be rejected.
    pub fn comparator_self_test(&self) -> CheckResult {
        const NAME: &str = "comparator_self_test";
        let m = self.params.m();
        let corrupted = move |params: &GroupParams, x: BasisLabel, y: BasisLabel| {
            let z = closed_mul(params, x, y);
            if x == BasisLabel::Beta(m, 0) && y == BasisLabel::Beta(m, 0) {
                z.scale(&BigInt::from(-1))
            } else {
                z
            }
        };
        let r = self.mult_table_with(&corrupted);
        if r.passed() {
            CheckResult::fail(NAME, "corrupted multiplication table was accepted")
        } else {
            CheckResult::pass(NAME, format!("corrupted table rejected ({})", r.detail))
        }
    }

    /// HNF of the generic `Delta^n` equals HNF of the closed basis, n = 1..max_n.
    pub fn delta_powers(&self, max_n: u32) -> CheckResult {
        const NAME: &str = "delta_powers";
        let al = match self.alignment() {
            Ok(al) => al,
            Err(e) => return CheckResult::fail(NAME, e),
        };
        let powers = match self.table.ideal_powers(max_n.max(1)) {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(NAME, e.to_string()),
        };
        for pw in &powers {
            let closed = match self.closed_lattice(al, pw.n) {
                Ok(b) => b,
                Err(e) => return CheckResult::fail(NAME, e),
            };
            if closed != pw.basis {
                return CheckResult::fail(
                    NAME,
                    format!("Delta^{} differs from the closed-form basis", pw.n),
                );
            }
        }
        CheckResult::pass(
            NAME,
            format!(
                "Delta^1..Delta^{max_n} match, rank {}",
                self.table.delta_rank()
            ),
        )
    }

    /// HNF of the closed-form basis of `Delta^n` in Delta-coordinates.
    pub fn closed_lattice(&self, al: &LabelAlignment, n: u32) -> Result<IntMatrix, String> {
        let basis = closed_delta_power_basis(&self.params, n).map_err(|e| e.to_string())?;
        let rows = basis
            .iter()
            .map(|c| self.table.to_delta_coords(&c.to_element(al)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        Ok(zlattice::lattice_basis(&IntMatrix::from_rows(
            rows,
            self.table.delta_rank(),
        )))
    }

    /// Generic `Q_n` equals the closed form and is constant from n = 2 on.
    pub fn qn(&self, max_n: u32) -> (CheckResult, Vec<AbelianInvariants>) {
        const NAME: &str = "qn";
        let series = match self.table.quotient_series(max_n.max(1)) {
            Ok(s) => s,
            Err(e) => return (CheckResult::fail(NAME, e.to_string()), Vec::new()),
        };
        for (i, q) in series.iter().enumerate() {
            let n = i as u32 + 1;
            let want = match closed_qn(&self.params, n) {
                Ok(w) => w,
                Err(e) => return (CheckResult::fail(NAME, e.to_string()), series),
            };
            if *q != want {
                return (
                    CheckResult::fail(NAME, format!("Q_{n} = {q}, closed form {want}")),
                    series,
                );
            }
        }
        if series.len() > 1 && series[1..].iter().any(|q| *q != series[1]) {
            return (
                CheckResult::fail(NAME, "Q_n is not constant for n >= 2"),
                series,
            );
        }
        let detail = match series.len() {
            1 => format!("Q_1 = {}", series[0]),
            k => format!("Q_1 = {}, Q_2..Q_{k} = {}", series[0], series[1]),
        };
        (CheckResult::pass(NAME, detail), series)
    }
}

pub fn verify_subgroup_classification(params: GroupParams) -> CheckResult {
    HContext::build(params).subgroup_classification()
}

pub fn verify_mult_table(params: GroupParams) -> CheckResult {
    HContext::build(params).mult_table()
}

pub fn verify_delta_powers(params: GroupParams, max_n: u32) -> CheckResult {
    HContext::build(params).delta_powers(max_n)
}

pub fn verify_qn(params: GroupParams, max_n: u32) -> CheckResult {
    HContext::build(params).qn(max_n).0
}

/// Runs every check for `params`, independent checks on separate threads.
/// Checks are reported sorted by name.
pub fn run_verify(params: GroupParams, max_n: u32) -> Result<VerificationReport, ClosedFormError> {
    if params.m() < 3 {
        return Err(ClosedFormError::UnsupportedParams(params.m()));
    }
    let start = Instant::now();
    let ctx = HContext::build(params);
    // fill the product cache once before the threads share it
    let _ = ctx.table.products();

    let (mut checks, series) = std::thread::scope(|s| {
        let classification = s.spawn(|| ctx.subgroup_classification());
        let mult = s.spawn(|| ctx.mult_table());
        let selftest = s.spawn(|| ctx.comparator_self_test());
        let delta = s.spawn(|| ctx.delta_powers(max_n));
        let (qn, series) = ctx.qn(max_n);
        let checks = vec![
            classification.join().expect("check thread panicked"),
            mult.join().expect("check thread panicked"),
            selftest.join().expect("check thread panicked"),
            delta.join().expect("check thread panicked"),
            qn,
        ];
        (checks, series)
    });
    checks.sort_by(|a, b| a.name.cmp(&b.name));

    let results = json!({
        "classes": ctx.table.rank(),
        "subgroups": ctx.subgroups.len(),
        "qn": series
            .iter()
            .enumerate()
            .map(|(i, q)| json!({ "n": i + 1, "invariants": invariants_to_json(q) }))
            .collect::<Vec<_>>(),
    });
    Ok(VerificationReport {
        params: ParamsJson {
            p: params.p(),
            m: params.m(),
        },
        max_n: Some(max_n),
        checks,
        results,
        wall_time: start.elapsed(),
    })
}
