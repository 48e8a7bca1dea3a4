//! Exhaustive verification sweeps: every minimal coset word of every
//! quotient in a scope is built and each identity of the Bott-Samelson and
//! component computations is checked on it, with counterexamples recorded.

mod checks;
mod scope;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bott_samelson::BottSamelsonData;
use crate::components::{self, Partition};
use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem};
use crate::weyl::{self, Word};

pub use scope::{
    AuditScope, ScopeEntry, DEFAULT_BUDGET, DEFAULT_CHAIN_WINDOW, DEFAULT_MAX_DEGREE,
    DEFAULT_WORD_CAP,
};

/// Counterexamples kept per suite; failures beyond this are only counted.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Positivity,
    Bounds,
    ChowOracle,
    Reversal,
    Pgqb,
    Fin,
    Rectif,
    Pgqmoins1,
    Contracted,
    HatDuality,
    TangentNonneg,
    Swap,
    LastLetter,
    GrassmannianCount,
    HolePic,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Positivity,
        Suite::Bounds,
        Suite::ChowOracle,
        Suite::Reversal,
        Suite::Pgqb,
        Suite::Fin,
        Suite::Rectif,
        Suite::Pgqmoins1,
        Suite::Contracted,
        Suite::HatDuality,
        Suite::TangentNonneg,
        Suite::Swap,
        Suite::LastLetter,
        Suite::GrassmannianCount,
        Suite::HolePic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Positivity => "positivity",
            Suite::Bounds => "bounds",
            Suite::ChowOracle => "chow-oracle",
            Suite::Reversal => "reversal",
            Suite::Pgqb => "pgqb",
            Suite::Fin => "fin",
            Suite::Rectif => "rectif",
            Suite::Pgqmoins1 => "pgqmoins1",
            Suite::Contracted => "contracted",
            Suite::HatDuality => "hat-duality",
            Suite::TangentNonneg => "tangent-nonneg",
            Suite::Swap => "swap",
            Suite::LastLetter => "last-letter",
            Suite::GrassmannianCount => "grassmannian-count",
            Suite::HolePic => "hole-pic",
        }
    }

    /// One-line statement of what the suite checks.
    pub fn description(self) -> &'static str {
        match self {
            Suite::Positivity => "<alpha_i^v, alpha_j> >= 0",
            Suite::Bounds => "<alpha_i^v, alpha_j> <= 2, with 2 only for equal roots",
            Suite::ChowOracle => "chain-sum oracle = [C_i].xi_j = <beta_i^v, beta_j>",
            Suite::Reversal => "pairings survive reversing the beta sequence",
            Suite::Pgqb => "reversed alphas contain the special root exactly once",
            Suite::Fin => "pairings with the special positions follow the beta pattern",
            Suite::Rectif => "sum over later special positions is 1 off them, 0 on them",
            Suite::Pgqmoins1 => "<alpha_i^v, s_x(alpha_j)> >= -1 when <alpha_i^v, alpha_x> = 1",
            Suite::Contracted => "contracted divisors and moving Schubert divisors",
            Suite::HatDuality => "hat, gamma and tilde curve identities",
            Suite::TangentNonneg => "nef curves meet T_k and T_k - xi_k nonnegatively",
            Suite::Swap => "commuting letters transpose the data; counts agree across words",
            Suite::LastLetter => "the last beta letter is the special root",
            Suite::GrassmannianCount => "component counts are binom(d + r - 1, d)",
            Suite::HolePic => "holes of the diagram = Picard rank of the open orbit",
        }
    }

    fn is_grassmannian(self) -> bool {
        matches!(self, Suite::GrassmannianCount | Suite::HolePic)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('_', "-");
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == t)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// A failed check, with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub family: Family,
    pub rank: usize,
    pub weight: usize,
    pub word: Vec<usize>,
    pub indices: Vec<usize>,
    pub observed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: u64,
    pub predicted_checks: u64,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

/// For one quotient: on how many words the degree of every `C_j` equals its
/// intersection with the line bundle of `w_k`, respectively of `i(w_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeObservation {
    pub family: Family,
    pub rank: usize,
    pub weight: usize,
    pub words: u64,
    pub agrees_with_weight: u64,
    pub agrees_with_dual_weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub entries: Vec<ScopeEntry>,
    pub words: u64,
    pub suites: Vec<SuiteReport>,
    pub degree_observations: Vec<DegreeObservation>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    pub fn suite(&self, suite: Suite) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == suite)
    }

    pub fn total_checks(&self) -> u64 {
        self.suites.iter().map(|s| s.checks).sum()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scope: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        writeln!(f, "scope: {}", if scope.is_empty() { "(empty)".into() } else { scope.join(" ") })?;
        writeln!(f, "words: {}", self.words)?;
        writeln!(
            f,
            "{:<20} {:>6} {:>12} {:>10} {:>9}",
            "suite", "status", "checks", "failures", "ms"
        )?;
        for s in &self.suites {
            writeln!(
                f,
                "{:<20} {:>6} {:>12} {:>10} {:>9}",
                s.suite.name(),
                if s.passed { "pass" } else { "FAIL" },
                s.checks,
                s.failures,
                s.elapsed_ms
            )?;
        }
        for s in self.suites.iter().filter(|s| !s.counterexamples.is_empty()) {
            writeln!(f, "\ncounterexamples for {}:", s.suite)?;
            for c in &s.counterexamples {
                writeln!(
                    f,
                    "  [{}] {}{} w{} word {:?} at {:?}: observed {}, expected {}",
                    c.check, c.family, c.rank, c.weight, c.word, c.indices, c.observed, c.expected
                )?;
            }
        }
        if !self.degree_observations.is_empty() {
            writeln!(f, "\nline bundle vs degree (words agreeing with L(w), L(i(w))):")?;
            for o in &self.degree_observations {
                writeln!(
                    f,
                    "  {}{} w{}: {}/{} and {}/{}",
                    o.family,
                    o.rank,
                    o.weight,
                    o.agrees_with_weight,
                    o.words,
                    o.agrees_with_dual_weight,
                    o.words
                )?;
            }
        }
        Ok(())
    }
}

/// One word of the sweep with everything the checks need.
pub(crate) struct Case<'a> {
    pub entry: ScopeEntry,
    pub bs: BottSamelsonData<'a>,
    /// Component counts of the coset's canonical word for `d = 0..=max_degree`.
    pub canonical_counts: std::sync::Arc<Vec<u64>>,
}

/// A Grassmannian Schubert variety for the partition suites.
pub(crate) struct GrassCase<'a> {
    pub partition: Partition,
    pub bs: BottSamelsonData<'a>,
}

fn seed_for(entry: &ScopeEntry, word: &Word) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let head = [entry.family as usize, entry.rank, entry.weight];
    for &x in head.iter().chain(word.letters()) {
        h ^= x as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn counts_up_to(bs: &BottSamelsonData, max_degree: u64) -> Result<Vec<u64>> {
    (0..=max_degree)
        .map(|d| components::component_count(bs, d))
        .collect()
}

fn prepare_cases<'a>(
    scope: &AuditScope,
    systems: &'a [(ScopeEntry, RootSystem)],
    need_counts: bool,
) -> Result<Vec<Case<'a>>> {
    let mut cases = Vec::new();
    for (entry, rs) in systems {
        let cosets = weyl::minuscule_coset_elements(rs, entry.weight, scope.max_length)?;
        for (canonical, g) in cosets {
            let (words, _) =
                weyl::sample_reduced_words(rs, &g, scope.word_cap, seed_for(entry, &canonical));
            let canonical_bs = BottSamelsonData::build_unverified(rs, entry.weight, &canonical)?;
            let counts = if need_counts {
                counts_up_to(&canonical_bs, scope.max_degree)?
            } else {
                Vec::new()
            };
            let counts = std::sync::Arc::new(counts);
            for word in words {
                let bs = BottSamelsonData::build_unverified(rs, entry.weight, &word)?;
                cases.push(Case {
                    entry: *entry,
                    bs,
                    canonical_counts: counts.clone(),
                });
            }
        }
    }
    Ok(cases)
}

fn prepare_grass<'a>(
    systems: &'a [((usize, usize), RootSystem)],
) -> Result<Vec<GrassCase<'a>>> {
    let mut out = Vec::new();
    for ((rows, cols), rs) in systems {
        for p in Partition::all_in_box(*rows, *cols) {
            let (word, k) = components::partition_to_word(&p)?;
            let bs = BottSamelsonData::build_unverified(rs, k, &word)?;
            out.push(GrassCase { partition: p, bs });
        }
    }
    Ok(out)
}

/// Elementary checks the suites would run on this scope.
pub fn estimate(scope: &AuditScope, suites: &[Suite]) -> Result<u64> {
    scope.validate()?;
    let systems = root_systems(scope)?;
    let cases = prepare_cases(scope, &systems, false)?;
    let boxes = box_systems(scope)?;
    let grass = prepare_grass(&boxes)?;
    Ok(predict(scope, suites, &cases, &grass))
}

fn predict(scope: &AuditScope, suites: &[Suite], cases: &[Case], grass: &[GrassCase]) -> u64 {
    suites
        .iter()
        .map(|&s| {
            if s.is_grassmannian() {
                grass
                    .iter()
                    .map(|g| checks::predicted_grass(s, g, scope))
                    .sum::<u64>()
            } else {
                cases
                    .iter()
                    .map(|c| checks::predicted(s, &c.bs, scope))
                    .sum::<u64>()
            }
        })
        .sum()
}

fn root_systems(scope: &AuditScope) -> Result<Vec<(ScopeEntry, RootSystem)>> {
    scope
        .entries
        .iter()
        .map(|e| Ok((*e, RootSystem::build(e.family, e.rank)?)))
        .collect()
}

fn box_systems(scope: &AuditScope) -> Result<Vec<((usize, usize), RootSystem)>> {
    scope
        .grassmannian_boxes()
        .into_iter()
        .map(|(r, c)| Ok(((r, c), RootSystem::build(Family::A, r + c - 1)?)))
        .collect()
}

/// Runs one suite over the scope.
pub fn run_suite(scope: &AuditScope, suite: Suite) -> Result<AuditReport> {
    run(scope, &[suite])
}

/// Runs the given suites over the scope. The sweep is rejected before it
/// starts if the predicted number of checks exceeds the scope's budget.
pub fn run(scope: &AuditScope, suites: &[Suite]) -> Result<AuditReport> {
    scope.validate()?;
    match scope.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::invariant(format!("cannot start worker pool: {e}")))?
            .install(|| run_in_pool(scope, suites)),
        None => run_in_pool(scope, suites),
    }
}

fn run_in_pool(scope: &AuditScope, suites: &[Suite]) -> Result<AuditReport> {
    let mut suites = suites.to_vec();
    suites.sort_unstable();
    suites.dedup();

    let systems = root_systems(scope)?;
    let need_counts = suites.contains(&Suite::Swap);
    let cases = prepare_cases(scope, &systems, need_counts)?;
    let boxes = box_systems(scope)?;
    let grass = if suites.iter().any(|s| s.is_grassmannian()) {
        prepare_grass(&boxes)?
    } else {
        Vec::new()
    };

    let estimated = predict(scope, &suites, &cases, &grass);
    if estimated > scope.budget {
        return Err(Error::BudgetExceeded {
            estimated,
            budget: scope.budget,
        });
    }
    log::info!(
        "audit: {} words, {} partitions, {estimated} checks predicted",
        cases.len(),
        grass.len()
    );

    let mut reports = Vec::new();
    for &suite in &suites {
        let start = Instant::now();
        let (tallies, predicted): (Vec<checks::Tally>, u64) = if suite.is_grassmannian() {
            let t = grass
                .par_iter()
                .map(|g| checks::run_grass(suite, g, scope))
                .collect::<Result<Vec<_>>>()?;
            let p = grass.iter().map(|g| checks::predicted_grass(suite, g, scope)).sum();
            (t, p)
        } else {
            let t = cases
                .par_iter()
                .map(|c| checks::run_case(suite, c, scope))
                .collect::<Result<Vec<_>>>()?;
            let p = cases.iter().map(|c| checks::predicted(suite, &c.bs, scope)).sum();
            (t, p)
        };
        let mut total = checks::Tally::default();
        for t in tallies {
            total.merge(t);
        }
        if total.checks != predicted {
            total.failures += 1;
            total.counterexamples.insert(
                0,
                Counterexample {
                    check: "accounting".into(),
                    family: Family::A,
                    rank: 0,
                    weight: 0,
                    word: Vec::new(),
                    indices: Vec::new(),
                    observed: total.checks.to_string(),
                    expected: predicted.to_string(),
                },
            );
        }
        total.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        reports.push(SuiteReport {
            suite,
            passed: total.failures == 0,
            checks: total.checks,
            predicted_checks: predicted,
            failures: total.failures,
            counterexamples: total.counterexamples,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }

    let mut degree_observations: Vec<DegreeObservation> = Vec::new();
    for c in &cases {
        let (w, dual) = checks::line_bundle_agreement(&c.bs)?;
        let pos = degree_observations.iter().position(|o| {
            o.family == c.entry.family && o.rank == c.entry.rank && o.weight == c.entry.weight
        });
        let o = match pos {
            Some(p) => &mut degree_observations[p],
            None => {
                degree_observations.push(DegreeObservation {
                    family: c.entry.family,
                    rank: c.entry.rank,
                    weight: c.entry.weight,
                    words: 0,
                    agrees_with_weight: 0,
                    agrees_with_dual_weight: 0,
                });
                degree_observations.last_mut().expect("just pushed")
            }
        };
        o.words += 1;
        o.agrees_with_weight += u64::from(w);
        o.agrees_with_dual_weight += u64::from(dual);
    }

    Ok(AuditReport {
        entries: scope.entries.clone(),
        words: cases.len() as u64,
        suites: reports,
        degree_observations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), s.name());
        }
        assert_eq!("hat_duality".parse::<Suite>().unwrap(), Suite::HatDuality);
        assert!(matches!("nope".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn positivity_on_a2() {
        let mut scope = AuditScope::new(AuditScope::parse_entries("A2").unwrap());
        scope.max_length = 2;
        let report = run_suite(&scope, Suite::Positivity).unwrap();
        assert!(report.passed());
        assert_eq!(report.words, 6);
        let s = report.suite(Suite::Positivity).unwrap();
        assert!(s.counterexamples.is_empty());
        // 3 + 3 cosets of lengths 0, 1, 2
        assert_eq!(s.checks, 2 * (1 + 4));
    }

    #[test]
    fn grassmannian_count_small_boxes() {
        let mut scope = AuditScope::empty();
        scope.boxes = Some(vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
        scope.max_degree = 3;
        let report = run_suite(&scope, Suite::GrassmannianCount).unwrap();
        assert!(report.passed());
        assert_eq!(report.suite(Suite::GrassmannianCount).unwrap().checks, (2 + 3 + 3 + 6) * 4);
    }

    #[test]
    fn empty_scope_passes_trivially() {
        let report = run(&AuditScope::empty(), &Suite::ALL).unwrap();
        assert!(report.passed());
        assert_eq!(report.total_checks(), 0);
        assert_eq!(report.words, 0);
    }

    #[test]
    fn budget_is_enforced_up_front() {
        let mut scope = AuditScope::default_scope();
        scope.budget = 10;
        assert!(matches!(
            run_suite(&scope, Suite::Positivity),
            Err(Error::BudgetExceeded { budget: 10, .. })
        ));
    }

    #[test]
    fn reports_are_deterministic() {
        let mut scope = AuditScope::new(AuditScope::parse_entries("A3,D4:1").unwrap());
        scope.jobs = Some(3);
        let strip = |mut r: AuditReport| {
            for s in &mut r.suites {
                s.elapsed_ms = 0;
            }
            serde_json::to_string(&r).unwrap()
        };
        let a = strip(run(&scope, &Suite::ALL).unwrap());
        scope.jobs = Some(1);
        let b = strip(run(&scope, &Suite::ALL).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_scope_is_rejected() {
        let scope = AuditScope::new(vec![ScopeEntry {
            family: Family::E,
            rank: 8,
            weight: 1,
        }]);
        assert!(matches!(run(&scope, &Suite::ALL), Err(Error::InvalidScope(_))));
    }
}
