use firstfit::props::{run_suite, Suite};

#[test]
fn every_suite_passes() {
    for suite in Suite::EACH {
        let report = run_suite(suite, 2024);
        for c in &report.checks {
            assert!(c.passed, "{suite}: {} failed: {}", c.name, c.detail);
            assert!(c.cases > 0, "{suite}: {} checked nothing", c.name);
        }
    }
}

#[test]
fn reports_depend_only_on_the_seed() {
    assert_eq!(run_suite(Suite::Twins, 5), run_suite(Suite::Twins, 5));
}
