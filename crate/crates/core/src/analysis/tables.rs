//! Published ground-state reference tables and their reproduction.
//!
//! Values are embedded exactly as printed, suspected misprints included; a
//! row that carries a note and disagrees with the computation is reported as
//! [`Verdict::ExpectedDiscrepancy`] instead of [`Verdict::Fail`].

use std::fmt;

use rayon::prelude::*;

use super::{analyze_with, SpectralResult};
use crate::error::{Error, Result};
use crate::oracle::OracleSettings;
use crate::params::{SystemParams, DEFAULT_MASS};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "CORNELL_LAB_THREADS";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub a: f64,
    pub b: f64,
    pub l: u32,
    pub expected_r0: f64,
    pub expected_r_delta_e: f64,
    pub expected_delta_e: f64,
    pub note: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub id: u8,
    pub dim: i32,
    pub mass: f64,
    pub caption: &'static str,
    pub rows: Vec<TableRow>,
}

impl TableSpec {
    pub fn params(&self, row: &TableRow) -> Result<SystemParams> {
        SystemParams::new(row.a, row.b, self.mass, self.dim, row.l as i32)
    }
}

/// Absolute tolerances per compared column.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub r0: f64,
    pub r_delta_e: f64,
    pub delta_e: f64,
}

impl Tolerances {
    /// Report tolerances: r₀ is printed to three decimals, and some entries
    /// are truncated rather than rounded.
    pub const REPORT: Tolerances = Tolerances {
        r0: 5e-3,
        r_delta_e: 1e-3,
        delta_e: 2e-3,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::REPORT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    ExpectedDiscrepancy,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::ExpectedDiscrepancy => "EXPECTED-DISCREPANCY",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColumnCheck {
    pub computed: f64,
    pub expected: f64,
    pub abs_diff: f64,
    pub within: bool,
}

impl ColumnCheck {
    fn new(computed: f64, expected: f64, tol: f64) -> Self {
        let abs_diff = (computed - expected).abs();
        Self {
            computed,
            expected,
            abs_diff,
            within: abs_diff <= tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RowComparison {
    pub row: TableRow,
    pub result: std::result::Result<SpectralResult, Error>,
    pub r0: Option<ColumnCheck>,
    pub r_delta_e: Option<ColumnCheck>,
    pub delta_e: Option<ColumnCheck>,
    pub verdict: Verdict,
}

impl RowComparison {
    fn new(spec: &TableSpec, row: &TableRow, tol: &Tolerances, settings: &OracleSettings) -> Self {
        let result = spec.params(row).and_then(|p| analyze_with(&p, settings));
        let (r0, r_delta_e, delta_e) = match &result {
            Ok(res) => (
                Some(ColumnCheck::new(res.r0_asym, row.expected_r0, tol.r0)),
                Some(ColumnCheck::new(
                    res.r_delta_e,
                    row.expected_r_delta_e,
                    tol.r_delta_e,
                )),
                Some(ColumnCheck::new(
                    res.delta_e,
                    row.expected_delta_e,
                    tol.delta_e,
                )),
            ),
            Err(_) => (None, None, None),
        };
        let agrees = [r0, r_delta_e, delta_e]
            .iter()
            .all(|c| c.is_some_and(|c| c.within));
        let verdict = match (agrees, row.note) {
            (true, _) => Verdict::Pass,
            (false, Some(_)) if result.is_ok() => Verdict::ExpectedDiscrepancy,
            (false, _) => Verdict::Fail,
        };
        Self {
            row: *row,
            result,
            r0,
            r_delta_e,
            delta_e,
            verdict,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableReport {
    pub spec: TableSpec,
    pub tolerances: Tolerances,
    pub rows: Vec<RowComparison>,
}

impl TableReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == verdict).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Verdict::Fail) > 0
    }
}

/// Compare every row at the [`Tolerances::REPORT`] tolerances.
pub fn reproduce_table(spec: &TableSpec) -> TableReport {
    reproduce_table_with(spec, &Tolerances::REPORT, &OracleSettings::default())
}

/// Rows are analyzed in parallel (capped by `CORNELL_LAB_THREADS` when set)
/// and reported in table order.
pub fn reproduce_table_with(
    spec: &TableSpec,
    tolerances: &Tolerances,
    settings: &OracleSettings,
) -> TableReport {
    let run = || {
        spec.rows
            .par_iter()
            .map(|row| RowComparison::new(spec, row, tolerances, settings))
            .collect::<Vec<_>>()
    };
    let rows = match thread_cap()
        .and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok())
    {
        Some(pool) => pool.install(run),
        None => run(),
    };
    TableReport {
        spec: spec.clone(),
        tolerances: *tolerances,
        rows,
    }
}

pub(crate) fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n > 0)
}

const NOTE_T1_R0_TRUNCATED: &str =
    "printed r0 9.195 is truncated; the b^(-1/3) scaling of the b = 1 and b = 100 entries gives 9.1956";
const NOTE_T2_DELTA_E: &str =
    "printed dE 0.534 breaks the l-ordering of the neighbouring rows (0.106, 0.153, ...); \
     a dropped zero (0.0534) fits, and the printed r_dE is consistent with dE near 0.054";
const NOTE_T2_REFERENCE: &str =
    "printed r_dE and dE are consistent with each other through the profile but not with \
     the computed ground-state energy; the reference energy used for this row appears to be wrong";
const NOTE_T3_DELTA_E: &str =
    "printed dE 2.254 disagrees with its own r_dE, where the profile evaluates to 2.2562";

fn row(b: f64, l: u32, r0: f64, r_de: f64, de: f64) -> TableRow {
    TableRow {
        a: 1.0,
        b,
        l,
        expected_r0: r0,
        expected_r_delta_e: r_de,
        expected_delta_e: de,
        note: None,
    }
}

fn noted(mut row: TableRow, note: &'static str) -> TableRow {
    row.note = Some(note);
    row
}

#[allow(clippy::excessive_precision)] // printed digits, kept verbatim
fn table_1() -> TableSpec {
    TableSpec {
        id: 1,
        dim: 3,
        mass: DEFAULT_MASS,
        caption: "ground state, V = -1/r + b r, N = 3",
        rows: vec![
            row(0.01, 0, 4.103, 1.7436481087936350, 0.029),
            row(0.01, 1, 6.873, 4.9460678940048420, 0.080),
            noted(
                row(0.01, 2, 9.195, 7.9252834202633755, 0.130),
                NOTE_T1_R0_TRUNCATED,
            ),
            row(0.01, 3, 11.265, 10.555231364572375, 0.175),
            row(0.01, 4, 13.163, 12.921702562396474, 0.216),
            row(0.01, 5, 14.935, 15.094068452133266, 0.254),
            row(1.0, 0, 0.884, 0.7994448794104599, 1.648),
            row(1.0, 1, 1.481, 1.5319979780777233, 2.888),
            row(1.0, 2, 1.981, 2.1271924940550924, 3.878),
            row(1.0, 3, 2.427, 2.6476825358214430, 4.742),
            row(1.0, 4, 2.836, 3.120002415656866, 5.527),
            row(1.0, 5, 3.218, 3.5579114353323114, 6.255),
            row(100.0, 0, 0.190, 0.20718831032409812, 46.652),
            row(100.0, 1, 0.319, 0.3568814759026067, 70.079),
            row(100.0, 2, 0.427, 0.48025853095063736, 89.743),
            row(100.0, 3, 0.523, 0.5892382922692437, 107.350),
            row(100.0, 4, 0.611, 0.6887636263960271, 123.572),
            row(100.0, 5, 0.693, 0.7814337345649496, 138.768),
        ],
    }
}

#[allow(clippy::excessive_precision)] // printed digits, kept verbatim
fn table_2() -> TableSpec {
    TableSpec {
        id: 2,
        dim: 4,
        mass: DEFAULT_MASS,
        caption: "ground state, V = -1/r + b r, N = 4",
        rows: vec![
            noted(
                row(0.01, 0, 5.566, 3.3312700304565390, 0.534),
                NOTE_T2_DELTA_E,
            ),
            row(0.01, 1, 8.074, 6.4834209674432110, 0.106),
            row(0.01, 2, 10.255, 9.278604516903260, 0.153),
            row(0.01, 3, 12.232, 11.766427983937469, 0.196),
            row(0.01, 4, 14.063, 14.028816948623492, 0.235),
            noted(
                row(0.01, 5, 15.783, 14.585313802191063, 0.293),
                NOTE_T2_REFERENCE,
            ),
            row(1.0, 0, 1.199, 1.1896870585180375, 2.314),
            row(1.0, 1, 1.739, 1.8415039963613402, 3.404),
            row(1.0, 2, 2.209, 2.394675709114608, 4.322),
            row(1.0, 3, 2.635, 2.888823024670750, 5.143),
            noted(
                row(1.0, 4, 3.030, 2.4699633437009440, 7.094),
                NOTE_T2_REFERENCE,
            ),
            noted(
                row(1.0, 5, 3.400, 2.3228580785446677, 8.805),
                NOTE_T2_REFERENCE,
            ),
        ],
    }
}

#[allow(clippy::excessive_precision)] // printed digits, kept verbatim
fn table_3() -> TableSpec {
    let data = [
        (0.0, 1.0092498710582083, 2.338),
        (0.1, 0.9871174720215355, 2.254),
        (0.2, 0.9650736643159619, 2.177),
        (0.3, 0.9432041027784062, 2.101),
        (0.4, 0.9215784931711197, 2.028),
        (0.5, 0.9002533954125955, 1.958),
        (0.6, 0.8792744720957341, 1.891),
        (0.7, 0.8586783015732216, 1.826),
        (0.8, 0.8384938486996074, 1.764),
        (0.9, 0.8187436656830261, 1.705),
        (1.0, 0.7994448794104599, 1.648),
        (1.1, 0.7806100091335577, 1.593),
        (1.2, 0.7622476487440810, 1.541),
        (1.3, 0.7443630403947710, 1.491),
        (1.4, 0.7269585604248531, 1.443),
        (1.5, 0.7100341340504672, 1.397),
        (1.6, 0.6935875917754227, 1.353),
        (1.7, 0.6776149777440374, 1.311),
        (1.8, 0.6621108181210410, 1.270),
        (1.9, 0.6470684263448296, 1.232),
    ];
    let rows = data
        .iter()
        .map(|&(a, r_de, de)| TableRow {
            a,
            b: 1.0,
            l: 0,
            // single r0 for the whole table, from its caption
            expected_r0: 0.884,
            expected_r_delta_e: r_de,
            expected_delta_e: de,
            note: (a == 0.1).then_some(NOTE_T3_DELTA_E),
        })
        .collect();
    TableSpec {
        id: 3,
        dim: 3,
        mass: DEFAULT_MASS,
        caption: "ground state, V = -a/r + r, N = 3",
        rows,
    }
}

/// Embedded reference table `id` (1, 2 or 3).
pub fn table_spec(id: u8) -> Option<TableSpec> {
    match id {
        1 => Some(table_1()),
        2 => Some(table_2()),
        3 => Some(table_3()),
        _ => None,
    }
}
