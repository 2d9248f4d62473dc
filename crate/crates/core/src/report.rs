//! Seeded law checking with shrinking, and the reports it produces.

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub type CaseRng = ChaCha8Rng;

/// Outcome of one law body: `Err` carries a description of the failure.
pub type LawResult = std::result::Result<(), String>;

/// Returns `Err(msg())` unless `cond` holds.
pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> LawResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    pub fn new(suite: impl Into<String>, runner: &Runner) -> Self {
        LawReport { suite: suite.into(), seed: runner.seed, cases: runner.cases, laws: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawOutcome> {
        self.laws.iter().filter(|l| !l.passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn push(&mut self, outcome: LawOutcome) {
        self.laws.push(outcome);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawOutcome {
    pub law: String,
    pub passed: bool,
    pub cases_run: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
}

/// A failing case, reproducible from `seed`, `stream` and the size bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub seed: u64,
    pub stream: u64,
    pub max_set: usize,
    pub max_decoration: usize,
    pub detail: String,
}

/// Upper bounds handed to generators: set sizes and decoration sizes
/// (edge count or subspace dimension).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sizes {
    pub max_set: usize,
    pub max_decoration: usize,
}

impl Sizes {
    pub const fn new(max_set: usize, max_decoration: usize) -> Self {
        Sizes { max_set, max_decoration }
    }
}

const SHRINK_TRIES: u64 = 40;
const SHRINK_STREAM_BASE: u64 = 1 << 40;

/// Runs law bodies over `cases` seeded cases.
#[derive(Debug, Clone, Copy)]
pub struct Runner {
    pub seed: u64,
    pub cases: usize,
    pub sizes: Sizes,
}

impl Runner {
    pub fn new(seed: u64, cases: usize, sizes: Sizes) -> Self {
        Runner { seed, cases, sizes }
    }

    pub fn with_sizes(self, sizes: Sizes) -> Self {
        Runner { sizes, ..self }
    }

    pub fn with_cases(self, cases: usize) -> Self {
        Runner { cases, ..self }
    }

    /// The generator for one case.
    pub fn rng(seed: u64, stream: u64) -> CaseRng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        rng
    }

    /// Checks `law` on every case; on failure, searches smaller size bounds
    /// for a minimal counterexample.
    pub fn law<L>(&self, name: &str, law: L) -> LawOutcome
    where
        L: Fn(&mut CaseRng, Sizes) -> LawResult,
    {
        for case in 0..self.cases {
            let stream = case as u64;
            if let Err(detail) = run_case(&law, self.seed, stream, self.sizes) {
                let counterexample = self.shrink(&law).unwrap_or(Counterexample {
                    seed: self.seed,
                    stream,
                    max_set: self.sizes.max_set,
                    max_decoration: self.sizes.max_decoration,
                    detail,
                });
                return LawOutcome {
                    law: name.to_string(),
                    passed: false,
                    cases_run: case + 1,
                    counterexample: Some(counterexample),
                };
            }
        }
        LawOutcome { law: name.to_string(), passed: true, cases_run: self.cases, counterexample: None }
    }

    /// Runs a deterministic check once.
    pub fn once<L>(&self, name: &str, law: L) -> LawOutcome
    where
        L: Fn() -> LawResult,
    {
        let result = catch_unwind(AssertUnwindSafe(&law))
            .unwrap_or_else(|p| Err(format!("panicked: {}", panic_message(&p))));
        LawOutcome {
            law: name.to_string(),
            passed: result.is_ok(),
            cases_run: 1,
            counterexample: result.err().map(|detail| Counterexample {
                seed: self.seed,
                stream: 0,
                max_set: self.sizes.max_set,
                max_decoration: self.sizes.max_decoration,
                detail,
            }),
        }
    }

    fn shrink<L>(&self, law: &L) -> Option<Counterexample>
    where
        L: Fn(&mut CaseRng, Sizes) -> LawResult,
    {
        let Sizes { max_set, max_decoration } = self.sizes;
        let mut stream = SHRINK_STREAM_BASE;
        for total in 0..=max_set + max_decoration {
            for set in 0..=total.min(max_set) {
                let deco = total - set;
                if deco > max_decoration {
                    continue;
                }
                let sizes = Sizes::new(set, deco);
                for _ in 0..SHRINK_TRIES {
                    if let Err(detail) = run_case(law, self.seed, stream, sizes) {
                        return Some(Counterexample {
                            seed: self.seed,
                            stream,
                            max_set: set,
                            max_decoration: deco,
                            detail,
                        });
                    }
                    stream += 1;
                }
            }
        }
        None
    }
}

fn run_case<L>(law: &L, seed: u64, stream: u64, sizes: Sizes) -> LawResult
where
    L: Fn(&mut CaseRng, Sizes) -> LawResult,
{
    let mut rng = Runner::rng(seed, stream);
    catch_unwind(AssertUnwindSafe(|| law(&mut rng, sizes)))
        .unwrap_or_else(|p| Err(format!("panicked: {}", panic_message(&p))))
}

fn panic_message(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "unknown panic".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn passing_law_runs_every_case() {
        let runner = Runner::new(7, 25, Sizes::new(3, 3));
        let out = runner.law("trivial", |_, _| Ok(()));
        assert!(out.passed);
        assert_eq!(out.cases_run, 25);
    }

    #[test]
    fn failing_law_is_shrunk_to_small_bounds() {
        let runner = Runner::new(7, 100, Sizes::new(6, 6));
        // fails whenever a sampled size reaches 2
        let out = runner.law("planted", |rng, sizes| {
            let n = rng.gen_range(0..=sizes.max_set);
            ensure(n < 2, || format!("n = {n}"))
        });
        assert!(!out.passed);
        let cx = out.counterexample.unwrap();
        assert_eq!(cx.max_set, 2);
        assert_eq!(cx.max_decoration, 0);
        // reproducible from the recorded stream
        let mut rng = Runner::rng(cx.seed, cx.stream);
        assert!(rng.gen_range(0..=cx.max_set) >= 2);
    }

    #[test]
    fn panics_become_failures() {
        let runner = Runner::new(1, 3, Sizes::new(1, 1));
        let out = runner.law("boom", |_, _| panic!("planted"));
        assert!(!out.passed);
        assert!(out.counterexample.unwrap().detail.contains("planted"));
    }
}
