use glasser::master::VerificationReport;
use glasser::report::*;
use glasser::C64;
use proptest::prelude::*;

fn sample() -> VerificationReport {
    VerificationReport {
        id: "Ct2d".into(),
        paper_eq: "Ct2d".into(),
        params: vec![("a".into(), 0.1), ("b".into(), -2.0 / 3.0)],
        lhs: C64::new(0.24999999999999989, 1e-300),
        lhs_error: 3.3e-11,
        rhs_closed: C64::new(0.25, 0.0),
        rhs_residues: C64::new(0.2499999999999999, 2.6e-16),
        criterion_dev: 1.4e-17,
        residual_closed: 8.9e-17,
        residual_residues: 2.1e-16,
        pass: true,
        seconds: 0.0123,
        error: None,
    }
}

#[test]
fn json_has_the_report_schema() {
    let v: serde_json::Value = serde_json::from_str(&report_to_json(&sample())).unwrap();
    let keys = [
        "id", "paper_eq", "params", "lhs", "rhs_closed", "rhs_residues", "criterion_dev", "residual_closed",
        "residual_residues", "pass", "seconds",
    ];
    for k in keys {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    for k in ["re", "im", "err"] {
        assert!(v["lhs"].get(k).is_some());
    }
    assert!(v.get("error").is_none());
}

#[test]
fn numbers_carry_17_significant_digits() {
    assert_eq!(num(0.1), "1.0000000000000001e-1");
    assert_eq!(num(-2.0), "-2.0000000000000000e0");
    assert_eq!(num(f64::NAN), "null");
    assert_eq!(num(f64::INFINITY), "null");
}

#[test]
fn json_round_trip() {
    let r = sample();
    let back = reports_from_json(&reports_to_json(&[r.clone(), r.clone()])).unwrap();
    assert_eq!(back, vec![r.clone(), r.clone()]);
    let single = reports_from_json(&report_to_json(&r)).unwrap();
    assert_eq!(single, vec![r]);
}

#[test]
fn failed_reports_keep_their_error() {
    let mut r = sample();
    r.pass = false;
    r.lhs = C64::new(f64::NAN, f64::NAN);
    r.error = Some("quadrature: \"boom\"".into());
    let back = reports_from_json(&report_to_json(&r)).unwrap().remove(0);
    assert!(back.lhs.re.is_nan());
    assert_eq!(back.error, r.error);
    assert!(!back.pass);
}

#[test]
fn malformed_input_is_rejected() {
    assert!(reports_from_json("{").is_err());
    assert!(reports_from_json("3").is_err());
    assert!(reports_from_json("{\"id\":\"x\"}").is_err());
}

#[test]
fn csv_and_text() {
    let rs = [sample()];
    let csv = reports_to_csv(&rs);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let row = lines.next().unwrap();
    assert_eq!(row.split(',').count(), CSV_HEADER.split(',').count());
    assert!(row.starts_with("Ct2d,Ct2d,a=1.0000000000000001e-1;b=-6.6666666666666663e-1,"));
    let text = reports_to_text(&rs);
    assert!(text.contains("Ct2d") && text.contains("1/1 passed"));
    assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
    assert!("xml".parse::<Format>().is_err());
    assert_eq!(render(&rs, Format::Json), reports_to_json(&rs));
}

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
        -1e3..1e3f64,
        Just(0.0),
        Just(-0.0),
    ]
}

proptest! {
    #[test]
    fn any_finite_report_round_trips(
        id in "[A-Za-z][A-Za-z0-9]{0,8}",
        names in proptest::collection::btree_set("[a-z]{1,3}", 0..4),
        values in proptest::collection::vec(finite(), 4),
        nums in proptest::collection::vec(finite(), 11),
        pass in any::<bool>(),
        error in proptest::option::of("[ -~]{0,20}"),
    ) {
        let params: Vec<(String, f64)> = names.into_iter().zip(values).collect();
        let r = VerificationReport {
            id: id.clone(),
            paper_eq: id,
            params,
            lhs: C64::new(nums[0], nums[1]),
            lhs_error: nums[2],
            rhs_closed: C64::new(nums[3], nums[4]),
            rhs_residues: C64::new(nums[5], nums[6]),
            criterion_dev: nums[7],
            residual_closed: nums[8],
            residual_residues: nums[9],
            pass,
            seconds: nums[10],
            error,
        };
        let back = reports_from_json(&report_to_json(&r)).unwrap();
        prop_assert_eq!(back, vec![r]);
    }
}
