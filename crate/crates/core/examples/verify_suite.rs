//! Run every identity check, then show that a corrupted sign is caught.

use ospchar::formulae::Mutation;
use ospchar::verify::{run_suite, Suite, SuiteConfig};

fn main() {
    let reports = run_suite(&SuiteConfig::default());
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} checks, {failed} failed", reports.len());

    for mutation in Mutation::ALL {
        let config = SuiteConfig {
            suites: Suite::ALL.into_iter().filter(Suite::uses_tail_formula).collect(),
            m_min: 2,
            mutation: Some(mutation),
            ..SuiteConfig::default()
        };
        let reports = run_suite(&config);
        let first = reports.iter().find(|r| !r.pass).map(|r| r.summary_line());
        println!("{}: first failure {}", mutation.name(), first.unwrap_or_else(|| "none".into()));
    }
}
