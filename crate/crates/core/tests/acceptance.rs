//! Acceptance criteria. Each criterion prints one `AC-k PASS|FAIL: ...` line;
//! the process exits non-zero when any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cornell_lab::analysis::{
    analyze, first_order_pt, reproduce_table_with, table_spec, RowComparison, TableReport,
    Tolerances, Verdict,
};
use cornell_lab::asymptotic::AsymptoticModel;
use cornell_lab::coulomb::{big_r_of_g, coulomb_energy, g_map, CoulombState};
use cornell_lab::oracle::{
    shooting_bracket, solve_auto, solve_eigenvalue_shooting, OracleSettings,
};
use cornell_lab::params::DEFAULT_MASS;
use cornell_lab::specfun::airy_first_zero;
use cornell_lab::SystemParams;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

const ACCEPTANCE: Tolerances = Tolerances {
    r0: 5e-4,
    r_delta_e: 1e-3,
    delta_e: 2e-3,
};
const TABLE_BUDGET: Duration = Duration::from_secs(30);

type Criterion = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn params(a: f64, b: f64, dim: i32, l: i32) -> SystemParams {
    SystemParams::new(a, b, DEFAULT_MASS, dim, l).unwrap()
}

fn oracle(p: &SystemParams, n: u32) -> f64 {
    solve_auto(p, n, &OracleSettings::default()).unwrap().energy
}

fn off_rows(report: &TableReport) -> Vec<String> {
    report
        .rows
        .iter()
        .filter(|c| c.verdict != Verdict::Pass)
        .map(|c| describe(report.spec.id, c))
        .collect()
}

fn describe(table: u8, c: &RowComparison) -> String {
    let col = |name: &str, check: &Option<cornell_lab::analysis::ColumnCheck>| match check {
        Some(k) if !k.within => format!(
            " {name}={:.6} vs {} (diff {:.2e})",
            k.computed, k.expected, k.abs_diff
        ),
        _ => String::new(),
    };
    format!(
        "T{table}(a={}, b={}, l={}) {}:{}{}{}",
        c.row.a,
        c.row.b,
        c.row.l,
        c.verdict,
        col("r0", &c.r0),
        col("r_dE", &c.r_delta_e),
        col("dE", &c.delta_e),
    )
}

fn timed_table(id: u8) -> (TableReport, Duration) {
    let start = Instant::now();
    let report = reproduce_table_with(
        &table_spec(id).unwrap(),
        &ACCEPTANCE,
        &OracleSettings::default(),
    );
    (report, start.elapsed())
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let r0 = AsymptoticModel::new(&params(1.0, 1.0, 3, 0))
        .asymptotic_peak_radius()
        .unwrap();
    let elapsed = start.elapsed();
    let mut pass = (r0 - 0.884).abs() <= 5e-4 && elapsed < Duration::from_millis(1);
    let mut detail = format!("r0={r0:.6} in {elapsed:?}");
    for (b, printed) in [(0.01_f64, 4.103), (1.0, 0.884), (100.0, 0.190)] {
        let scaled = r0 * b.powf(-1.0 / 3.0);
        pass &= (scaled - printed).abs() <= 5e-4;
        detail += &format!("; b={b}: {scaled:.6} vs {printed}");
    }
    Outcome::new(pass, detail)
}

fn table_outcome(id: u8) -> (TableReport, Duration, bool, String) {
    let (report, elapsed) = timed_table(id);
    let off = off_rows(&report);
    let pass = off.is_empty() && elapsed < TABLE_BUDGET;
    let detail = format!(
        "{}/{} rows within (5e-4, 1e-3, 2e-3) in {:.2?}{}{}",
        report.count(Verdict::Pass),
        report.rows.len(),
        elapsed,
        if off.is_empty() { "" } else { "; " },
        off.join("; ")
    );
    (report, elapsed, pass, detail)
}

fn ac2() -> Outcome {
    let (_, _, pass, detail) = table_outcome(1);
    Outcome::new(pass, detail)
}

fn ac3() -> Outcome {
    let (report, _, pass, mut detail) = table_outcome(3);
    let values: Vec<(f64, f64)> = report
        .rows
        .iter()
        .filter_map(|c| c.result.as_ref().ok())
        .map(|r| (r.r_delta_e, r.delta_e))
        .collect();
    let monotone = values.len() == report.rows.len()
        && values
            .windows(2)
            .all(|w| w[1].0 < w[0].0 && w[1].1 < w[0].1);
    detail += &format!("; r_dE and dE strictly decreasing in a: {monotone}");
    Outcome::new(pass && monotone, detail)
}

fn ac4() -> Outcome {
    let (report, elapsed) = timed_table(2);
    let mut pass = elapsed < TABLE_BUDGET;
    let mut notes = vec![];
    for c in &report.rows {
        match c.verdict {
            Verdict::Pass => {}
            Verdict::ExpectedDiscrepancy if c.result.is_ok() => notes.push(describe(2, c)),
            _ => {
                pass = false;
                notes.push(describe(2, c));
            }
        }
        if c.row.b == 0.01 && c.row.l == 0 && c.verdict != Verdict::ExpectedDiscrepancy {
            pass = false;
            notes.push("(b=0.01, l=0) not flagged".into());
        }
    }
    Outcome::new(
        pass,
        format!(
            "{} PASS, {} EXPECTED-DISCREPANCY, {} FAIL in {elapsed:.2?}; {}",
            report.count(Verdict::Pass),
            report.count(Verdict::ExpectedDiscrepancy),
            report.count(Verdict::Fail),
            notes.join("; ")
        ),
    )
}

fn ac5() -> Outcome {
    let e = oracle(&params(0.0, 1.0, 3, 0), 0);
    let zero = airy_first_zero();
    let pass = (e + zero).abs() <= 1e-5 && (e - 2.338107).abs() <= 1e-5;
    Outcome::new(pass, format!("E={e:.9}, -a1={:.9}", -zero))
}

/// Every distinct (a, b, N, ℓ) appearing in the three tables.
fn table_configurations() -> Vec<SystemParams> {
    let mut seen = BTreeSet::new();
    let mut out = vec![];
    for id in 1..=3 {
        let spec = table_spec(id).unwrap();
        for row in &spec.rows {
            if seen.insert((row.a.to_bits(), row.b.to_bits(), spec.dim, row.l)) {
                out.push(spec.params(row).unwrap());
            }
        }
    }
    out
}

fn coulomb_identity_worst() -> f64 {
    let mut worst = 0.0_f64;
    // Λ = 0, 1/2, 1, 2
    for (dim, l) in [(3, 0), (4, 0), (3, 1), (3, 2)] {
        for a in [0.3, 1.0, 2.7] {
            let p = params(a, 1.0, dim, l);
            let lam = p.lambda().value();
            for n in 0..=3 {
                let s = CoulombState::new(&p, n);
                for i in 0..200 {
                    let r = 1e-3 * 10f64.powf(6.0 * f64::from(i) / 199.0);
                    let lhs =
                        s.energy - (-a / r + p.lambda().centrifugal() / (2.0 * p.m() * r * r));
                    let g = g_map(&p, n, r).unwrap();
                    let rhs =
                        s.g_slope * s.g_slope / (2.0 * p.m()) * big_r_of_g(n, lam, g).unwrap();
                    worst = worst.max(((lhs - rhs) / lhs).abs());
                }
            }
        }
    }
    worst
}

fn airy_residual_worst() -> f64 {
    let mut worst = 0.0_f64;
    for b in [0.01, 1.0, 100.0] {
        let m = AsymptoticModel::new(&params(1.0, b, 3, 0));
        for i in 0..200 {
            let x = 0.05 * 200f64.powf(f64::from(i) / 199.0);
            let r = x / m.scale();
            worst = worst.max(m.airy_ode_residual_fd(r).unwrap().abs() / (b * r));
        }
    }
    worst
}

fn susy_worst() -> f64 {
    let strategy = (
        0.0f64..3.0,
        -3.0f64..2.0,
        0.1f64..5.0,
        3i32..6,
        0i32..6,
        0.01f64..4.0,
    );
    let mut runner = TestRunner::deterministic();
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let (a, log_b, m, dim, l, x) = strategy.new_tree(&mut runner).unwrap().current();
        let p = SystemParams::new(a, 10f64.powf(log_b), m, dim, l).unwrap();
        let model = AsymptoticModel::new(&p);
        let r = x * (p.lambda().value() + 1.0) / model.scale();
        let susy = model.susy_delta_e(r).unwrap();
        let profile = model.delta_e_profile(r).unwrap();
        worst = worst.max((susy - profile).abs() / profile.abs().max(f64::MIN_POSITIVE));
    }
    worst
}

fn round_trip_worst() -> f64 {
    let mut worst = 0.0_f64;
    for p in table_configurations() {
        let res = analyze(&p).unwrap();
        let model = AsymptoticModel::new(&p);
        let back = model.delta_e_profile(res.r_delta_e).unwrap() + res.e_es;
        worst = worst.max((back - res.e_exact).abs() / res.delta_e.abs());
    }
    worst
}

fn ac6() -> Outcome {
    let coulomb = coulomb_identity_worst();
    let airy = airy_residual_worst();
    let susy = susy_worst();
    let round_trip = round_trip_worst();
    let pass = coulomb <= 1e-12 && airy <= 1e-7 && susy <= 1e-12 && round_trip < 1e-12;
    Outcome::new(
        pass,
        format!(
            "worst relative: Coulomb identity {coulomb:.1e}, Airy ODE {airy:.1e}, susy {susy:.1e} (1000 cases), \
             round trip {round_trip:.1e}"
        ),
    )
}

fn ac7() -> Outcome {
    let configs = table_configurations();
    let mut agreement = 0.0_f64;
    for p in &configs {
        let matrix = oracle(p, 0);
        let shooting = solve_eigenvalue_shooting(p, 0, shooting_bracket(p, 0))
            .unwrap()
            .energy;
        agreement = agreement.max((matrix - shooting).abs());
    }
    let mut coulomb = 0.0_f64;
    for l in [0, 1] {
        let p = params(1.0, 1e-8, 3, l);
        for n in 0..=2 {
            coulomb = coulomb.max((oracle(&p, n) - coulomb_energy(&p, n)).abs());
        }
    }
    let lambda_eq = (oracle(&params(1.0, 1.0, 3, 1), 0) - oracle(&params(1.0, 1.0, 5, 0), 0)).abs();
    let pass = agreement <= 1e-6 && coulomb <= 1e-5 && lambda_eq <= 1e-6;
    Outcome::new(
        pass,
        format!(
            "matrix vs shooting max {agreement:.1e} over {} configurations; Coulomb limit max {coulomb:.1e}; \
             (N=3,l=1) vs (N=5,l=0) {lambda_eq:.1e}",
            configs.len()
        ),
    )
}

fn ac8() -> Outcome {
    let rel = |b: f64| {
        let p = params(1.0, b, 3, 0);
        let pt = first_order_pt(&p).unwrap();
        let exact = oracle(&p, 0) - coulomb_energy(&p, 0);
        (pt, exact, (pt - exact).abs() / exact.abs())
    };
    let (pt_small, ex_small, small) = rel(0.01);
    let (pt_big, ex_big, big) = rel(1.0);
    Outcome::new(
        small <= 0.05 && big >= 0.5,
        format!(
            "b=0.01: {pt_small:.4} vs {ex_small:.4} ({:.1}%); b=1: {pt_big:.4} vs {ex_big:.4} ({:.1}%)",
            100.0 * small,
            100.0 * big
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("AC-1", ac1),
        ("AC-2", ac2),
        ("AC-3", ac3),
        ("AC-4", ac4),
        ("AC-5", ac5),
        ("AC-6", ac6),
        ("AC-7", ac7),
        ("AC-8", ac8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = check();
        println!(
            "{name} {}: {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
        failed += usize::from(!outcome.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
