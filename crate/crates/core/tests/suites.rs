use bisgpd::harness::corpus::{check, Corpus, Suite};
use bisgpd::harness::engine::Status;
use bisgpd::Limits;

fn suite_passes(suite: Suite) {
    let reports = check(suite, &Corpus::fixtures(), &Limits::default());
    assert!(reports.iter().any(|r| r.status == Status::Pass), "{} ran no laws", suite);
    for r in &reports {
        println!("{}", r.to_text());
        assert_ne!(r.status, Status::Fail, "{}", r.to_text());
    }
}

#[test]
fn bisection_suite_passes() {
    suite_passes(Suite::Bisection);
}

#[test]
fn comonad_suite_passes() {
    suite_passes(Suite::Comonad);
}

#[test]
fn ltimes_adjunction_suite_passes() {
    suite_passes(Suite::LtimesAdjunction);
}

#[test]
fn quotient_suite_passes() {
    suite_passes(Suite::Quotient);
}

#[test]
fn gauge_suite_passes() {
    suite_passes(Suite::Gauge);
}

#[test]
fn canonical_suite_passes() {
    suite_passes(Suite::Canonical);
}

#[test]
fn r_adjunction_suite_passes() {
    suite_passes(Suite::RAdjunction);
}

#[test]
fn coreflection_suite_passes() {
    suite_passes(Suite::Coreflection);
}

#[test]
fn equivalence_suite_passes() {
    suite_passes(Suite::Equivalence);
}

#[test]
fn functor_suite_passes() {
    suite_passes(Suite::Functor);
}
