//! Number formatting and row rendering shared by the subcommands.

use crate::analysis::{ColumnCheck, RowComparison, SpectralResult, TableReport};

/// Significant digits for the critical radius.
pub const RADIUS_DIGITS: usize = 16;
/// Significant digits for energies and every other derived quantity.
pub const ENERGY_DIGITS: usize = 9;

pub const MISSING: &str = "NA";

/// `x` rounded to `digits` significant digits, positional notation when the
/// exponent is moderate, scientific otherwise. Locale independent.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.prec$e}", prec = digits - 1)
    }
}

pub fn energy(x: f64) -> String {
    sig(x, ENERGY_DIGITS)
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| MISSING.to_string(), energy)
}

pub const RESULT_COLUMNS: [&str; 17] = [
    "a",
    "b",
    "m",
    "N",
    "l",
    "Lambda",
    "e_es",
    "e_exact",
    "delta_e",
    "est_error",
    "r0_asym",
    "r0_coulomb",
    "r_delta_e",
    "margin",
    "regime",
    "multiple_roots",
    "pt1_delta_e",
];

/// Input columns of a configuration (a, b, m, N, l, Lambda).
pub fn input_fields(a: f64, b: f64, m: f64, dim: i32, l: i32) -> Vec<String> {
    let lambda = (dim + 2 * l - 3) as f64 / 2.0;
    vec![
        a.to_string(),
        b.to_string(),
        m.to_string(),
        dim.to_string(),
        l.to_string(),
        lambda.to_string(),
    ]
}

/// Values in [`RESULT_COLUMNS`] order.
pub fn result_fields(r: &SpectralResult) -> Vec<String> {
    let p = &r.params;
    let mut out = input_fields(p.a(), p.b(), p.m(), p.dim() as i32, p.l() as i32);
    out.extend([
        energy(r.e_es),
        energy(r.e_exact),
        energy(r.delta_e),
        sig(r.est_error, 3),
        energy(r.r0_asym),
        opt(r.r0_coulomb),
        sig(r.r_delta_e, RADIUS_DIGITS),
        energy(r.margin),
        r.regime.to_string(),
        r.multiple_roots.to_string(),
        opt(r.pt1_delta_e),
    ]);
    out
}

/// `key: value` lines for a single result.
pub fn result_text(r: &SpectralResult) -> String {
    let width = RESULT_COLUMNS.iter().map(|c| c.len()).max().unwrap_or(0);
    RESULT_COLUMNS
        .iter()
        .zip(result_fields(r))
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

pub fn csv_line<S: AsRef<str>>(fields: &[S]) -> String {
    let mut line = fields
        .iter()
        .map(AsRef::as_ref)
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}

pub const TABLE_COLUMNS: [&str; 16] = [
    "table",
    "a",
    "b",
    "N",
    "l",
    "r0",
    "r0_expected",
    "r0_diff",
    "r_delta_e",
    "r_delta_e_expected",
    "r_delta_e_diff",
    "delta_e",
    "delta_e_expected",
    "delta_e_diff",
    "regime",
    "verdict",
];

fn check_fields(c: &Option<ColumnCheck>, expected: f64, digits: usize) -> [String; 3] {
    match c {
        Some(c) => [
            sig(c.computed, digits),
            expected.to_string(),
            sig(c.abs_diff, 3),
        ],
        None => [MISSING.into(), expected.to_string(), MISSING.into()],
    }
}

pub fn comparison_fields(report: &TableReport, c: &RowComparison) -> Vec<String> {
    let mut out = vec![
        report.spec.id.to_string(),
        c.row.a.to_string(),
        c.row.b.to_string(),
        report.spec.dim.to_string(),
        c.row.l.to_string(),
    ];
    out.extend(check_fields(&c.r0, c.row.expected_r0, ENERGY_DIGITS));
    out.extend(check_fields(
        &c.r_delta_e,
        c.row.expected_r_delta_e,
        RADIUS_DIGITS,
    ));
    out.extend(check_fields(
        &c.delta_e,
        c.row.expected_delta_e,
        ENERGY_DIGITS,
    ));
    out.push(
        c.result
            .as_ref()
            .map_or_else(|_| MISSING.to_string(), |r| r.regime.to_string()),
    );
    out.push(c.verdict.to_string());
    out
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line = row
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{s:<w$}", w = widths[j]))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
