//! Recompute the three reference tables and compare against the printed values.
//!
//! `cargo run --release --example reproduce_tables -- 2` restricts to one table.

use cornell_lab::analysis::{reproduce_table, table_spec, Verdict};

fn main() {
    let ids: Vec<u8> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let ids = if ids.is_empty() { vec![1, 2, 3] } else { ids };
    for id in ids {
        let Some(spec) = table_spec(id) else {
            eprintln!("no table {id}");
            continue;
        };
        println!("Table {id}: {}", spec.caption);
        let report = reproduce_table(&spec);
        for c in &report.rows {
            let res = match &c.result {
                Ok(r) => format!(
                    "r0={:.4} r_dE={:.6} dE={:.4} {}",
                    r.r0_asym, r.r_delta_e, r.delta_e, r.regime
                ),
                Err(e) => e.to_string(),
            };
            println!(
                "  a={:<4} b={:<5} l={}  {res}  [{}]{}",
                c.row.a,
                c.row.b,
                c.row.l,
                c.verdict,
                c.row.note.map(|n| format!(" {n}")).unwrap_or_default()
            );
        }
        println!(
            "  {} pass, {} expected discrepancies, {} failures\n",
            report.count(Verdict::Pass),
            report.count(Verdict::ExpectedDiscrepancy),
            report.count(Verdict::Fail)
        );
    }
}
