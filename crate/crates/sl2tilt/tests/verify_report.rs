use sl2tilt::verify::{run_verify, VerifyConfig};

fn assert_all_pass(cfg: VerifyConfig) {
    let r = run_verify(&cfg).unwrap();
    for c in &r.checks {
        println!("{:>9} {:<28} {} {:>6} ms {}", c.suite, c.id, if c.pass { "ok" } else { "FAIL" }, c.millis, c.witness.clone().unwrap_or_default());
    }
    assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn default_configuration_passes() {
    assert_all_pass(VerifyConfig::default());
}

#[test]
fn l5_passes() {
    assert_all_pass(VerifyConfig { l: 5, ..Default::default() });
}

#[test]
fn report_order_is_deterministic() {
    let cfg = VerifyConfig { depth: 3, ..Default::default() };
    let a: Vec<(String, String, bool)> = run_verify(&cfg).unwrap().checks.into_iter().map(|c| (c.suite, c.id, c.pass)).collect();
    let b: Vec<(String, String, bool)> = run_verify(&cfg).unwrap().checks.into_iter().map(|c| (c.suite, c.id, c.pass)).collect();
    assert_eq!(a, b);
}
