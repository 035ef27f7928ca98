use cornell_lab::analysis::{
    analyze, first_order_pt, reproduce_table, table_spec, Regime, TableReport, Verdict,
};
use cornell_lab::SystemParams;

fn report(id: u8) -> TableReport {
    let r = reproduce_table(&table_spec(id).unwrap());
    for c in &r.rows {
        let res = c.result.as_ref().unwrap();
        println!(
            "T{id} a={} b={} l={}: r0 {:.6} r_dE {:.10} dE {:.6} {} {}",
            c.row.a,
            c.row.b,
            c.row.l,
            res.r0_asym,
            res.r_delta_e,
            res.delta_e,
            res.regime,
            c.verdict
        );
    }
    r
}

#[test]
fn table_1_report_passes_with_paper_regimes() {
    let r = report(1);
    assert!(!r.has_failures());
    for c in &r.rows {
        let res = c.result.as_ref().unwrap();
        let expected = match (c.row.b, c.row.l) {
            (b, l) if b == 0.01 && l <= 4 => Regime::CoulombDominant,
            (b, l) if b == 1.0 && l == 0 => Regime::CoulombDominant,
            _ => Regime::LinearDominant,
        };
        assert_eq!(res.regime, expected, "b={} l={}", c.row.b, c.row.l);
        assert!(res.r_delta_e < res.r0_coulomb.unwrap());
    }
    // energy correction grows with l inside each b block
    for block in r.rows.chunks(6) {
        for w in block.windows(2) {
            assert!(w[1].result.as_ref().unwrap().delta_e > w[0].result.as_ref().unwrap().delta_e);
        }
    }
}

#[test]
fn table_2_report_flags_inconsistent_rows() {
    let r = report(2);
    assert!(!r.has_failures());
    assert!(r.count(Verdict::ExpectedDiscrepancy) >= 1);
    assert_eq!(r.rows[0].verdict, Verdict::ExpectedDiscrepancy);
}

#[test]
fn table_3_report_is_monotone_in_a() {
    let r = report(3);
    assert!(!r.has_failures());
    for w in r.rows.windows(2) {
        let (x, y) = (w[0].result.as_ref().unwrap(), w[1].result.as_ref().unwrap());
        assert!(y.r_delta_e < x.r_delta_e);
        assert!(y.delta_e < x.delta_e);
    }
}

#[test]
fn first_order_error_grows_with_tension() {
    let errors: Vec<f64> = [0.001, 0.01, 0.1, 1.0]
        .iter()
        .map(|&b| {
            let p = SystemParams::cornell(1.0, b).unwrap();
            let exact = analyze(&p).unwrap().delta_e;
            (first_order_pt(&p).unwrap() - exact).abs() / exact
        })
        .collect();
    assert!(errors.windows(2).all(|w| w[1] > w[0]), "{errors:?}");
}
