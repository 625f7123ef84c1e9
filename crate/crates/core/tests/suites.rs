use kr_core::builders::Builder;
use kr_core::cartan::{AffineSpec, Family};
use kr_core::verify::{
    default_grid, phi0_violations, run_suite, Phi0Rule, Status, Suite,
};

/// Failures other than the positivity rule on sign-free rectangles.
fn unexpected(b: &mut Builder, spec: AffineSpec, suite: Suite) -> bool {
    if suite != Suite::Phi0 {
        return true;
    }
    let build = b.build(spec).unwrap();
    let (_, bad) = phi0_violations(&build).unwrap();
    bad.iter().any(|v| v.rule != Phi0Rule::Positive || !v.sign_free_rectangle)
}

#[test]
fn default_grid_all_suites() {
    let mut b = Builder::new();
    let reports = run_suite(&mut b, &default_grid(), &Suite::ALL);
    let mut failed = Vec::new();
    for r in &reports {
        if r.status == Status::Fail && unexpected(&mut b, r.spec, r.suite) {
            println!("{r}");
            failed.push(r.clone());
        }
    }
    assert!(failed.is_empty(), "{} unexpected failures", failed.len());
    let applicable = |s: Suite| reports.iter().filter(|r| r.suite == s && r.status != Status::Skipped).count();
    assert_eq!(applicable(Suite::Regularity), default_grid().len());
    assert!(applicable(Suite::Similarity) > 0 && applicable(Suite::Jlowest) > 0);
}

#[test]
fn positivity_rule_fails_only_on_sign_free_rectangles() {
    let mut b = Builder::new();
    for family in [Family::C1, Family::A2Even, Family::D2] {
        let spec = AffineSpec::new(family, 3, 1, 2).unwrap();
        let build = b.build(spec).unwrap();
        let (checked, bad) = phi0_violations(&build).unwrap();
        assert!(checked > 0);
        assert_eq!(bad.len(), 1, "{spec}: {bad:?}");
        assert_eq!(bad[0].rule, Phi0Rule::Positive);
        assert!(bad[0].sign_free_rectangle);
        assert_eq!(build.graph.phi(bad[0].vertex, 0), 0);
    }
    // r = n − 1 leaves no column shorter than n − 1 in a rectangle
    for family in [Family::C1, Family::D2] {
        let build = b.build(AffineSpec::new(family, 3, 2, 2).unwrap()).unwrap();
        assert!(phi0_violations(&build).unwrap().1.is_empty());
    }
}
