//! The fixture checks and the seeded random property suites.

use std::time::{Duration, Instant};

use crate::expect;
use crate::properties::{self, Verdict};
use crate::random::{self, Shape};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        Self { name, passed: 0, skipped: 0, failures: Vec::new(), elapsed: Duration::ZERO }
    }

    fn record(&mut self, outcome: Result<Verdict, String>) {
        match outcome {
            Ok(Verdict::Checked) => self.passed += 1,
            Ok(Verdict::Skipped) => self.skipped += 1,
            Err(e) => self.failures.push(e),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} passed, {} skipped, {} failed",
            self.name,
            self.passed,
            self.skipped,
            self.failures.len()
        )
    }
}

fn timed(name: &'static str, body: impl FnOnce(&mut SuiteResult)) -> SuiteResult {
    let start = Instant::now();
    let mut r = SuiteResult::new(name);
    body(&mut r);
    r.elapsed = start.elapsed();
    r
}

pub fn fixtures() -> SuiteResult {
    timed("fixtures", |r| {
        for (name, check) in expect::CHECKS {
            r.record(check().map(|()| Verdict::Checked).map_err(|e| format!("{name}: {e}")));
        }
    })
}

/// Random update programs on total databases; see
/// [`properties::check_update_case`].
pub fn update_properties(seed: u64, cases: usize) -> SuiteResult {
    timed("update-properties", |r| {
        let mut rng = random::rng(seed);
        let shape = Shape::small();
        for i in 0..cases {
            let (up, d) = random::update_case(&mut rng, &shape);
            r.record(properties::check_update_case(&up, &d).map_err(|e| format!("case {i} (seed {seed}): {e}")));
        }
    })
}

/// Random ground programs against brute force.
pub fn oracle_equivalence(seed: u64, cases: usize) -> SuiteResult {
    timed("oracle-equivalence", |r| {
        let mut rng = random::rng(seed);
        for i in 0..cases {
            let p = random::ground_program(&mut rng, 8);
            r.record(
                properties::check_ground_program(&p)
                    .map(|()| Verdict::Checked)
                    .map_err(|e| format!("case {i} (seed {seed}): {e}")),
            );
        }
    })
}

/// Random renamings of the database constants.
pub fn genericity(seed: u64, cases: usize) -> SuiteResult {
    timed("genericity", |r| {
        let mut rng = random::rng(seed);
        let shape = Shape::generic();
        for i in 0..cases {
            let (up, d) = random::update_case(&mut rng, &shape);
            let rho = random::renaming(&mut rng, &shape);
            r.record(properties::check_generic(&up, &d, &rho).map_err(|e| format!("case {i} (seed {seed}): {e}")));
        }
    })
}

/// All suites with their default sizes. Each random suite derives its own
/// seed from `seed`.
pub fn all(seed: u64) -> Vec<SuiteResult> {
    vec![
        fixtures(),
        update_properties(seed, 200),
        oracle_equivalence(seed.wrapping_add(1), 100),
        genericity(seed.wrapping_add(2), 50),
    ]
}
