//! Per-group reports, catalog surveys and theorem verification.

mod catalog;
pub mod checks;
mod verify;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::engel::left_engel_set;
use crate::graph::{build_engel_graph, Diameter, GraphMetrics};
use crate::group::{ClosureConfig, Group};
use crate::io::{GroupSpec, LoadError};

pub use catalog::{catalog, CatalogEntry, FamilySelection};
pub use verify::{lemma_sweep, verify_theorems, verify_theorems_with, Verdict, VerdictKind};

/// Check names used in [`GroupReport::checks`].
pub mod names {
    pub const BAER: &str = "baer";
    pub const FITTING_MAXIMAL: &str = "fittingMaximal";
    pub const BOUNDED_COLLAPSE: &str = "boundedEngelCollapse";
    pub const RANDOMLY_ENGEL: &str = "randomlyEngelCharacterization";
    pub const CLIQUE: &str = "cliqueAtLeast3";
    pub const NO_ISOLATED: &str = "noIsolatedVertex";
    pub const UNIVERSAL: &str = "universalVertex";
    pub const DIAMETER_ONE: &str = "diameterOne";
    pub const NILPOTENT_BY_CYCLIC: &str = "nilpotentByCyclicDiameter";
    pub const CLASS_SUBGRAPH: &str = "conjugacyClassSubgraph";
}

/// Coverage statement attached to every survey.
pub const COVERAGE_NOTE: &str = "Catalog survey: symmetric, alternating, dihedral and dicyclic \
groups, their products with cyclic groups, and bundled generator-file groups. This is a subset \
of all groups of each order; a complete sweep needs a small-groups database.";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn pass() -> Self {
        CheckOutcome {
            passed: true,
            counterexample: None,
        }
    }

    pub fn fail(counterexample: impl Into<String>) -> Self {
        CheckOutcome {
            passed: false,
            counterexample: Some(counterexample.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupReport {
    pub name: String,
    pub order: usize,
    pub is_engel: bool,
    pub fitting_order: usize,
    /// Absent for Engel groups.
    pub metrics: Option<GraphMetrics>,
    pub checks: BTreeMap<String, CheckOutcome>,
}

impl GroupReport {
    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &CheckOutcome)> {
        self.checks
            .iter()
            .filter(|(_, c)| !c.passed)
            .map(|(n, c)| (n.as_str(), c))
    }

    pub fn is_connected(&self) -> Option<bool> {
        self.metrics.map(|m| m.component_count == 1)
    }
}

/// Builds the Engel graph of `g` and runs every applicable check.
pub fn analyze(g: &Group) -> GroupReport {
    use checks::*;
    let l = left_engel_set(g);
    let mut out = BTreeMap::new();
    let mut put = |name: &str, c: CheckOutcome| {
        out.insert(name.to_string(), c);
    };
    put(names::BAER, baer(g));
    if g.order() <= MAXIMALITY_LIMIT {
        put(names::FITTING_MAXIMAL, fitting_maximal(g, &l));
        put(names::BOUNDED_COLLAPSE, bounded_collapse(g, &l));
    }
    if g.order() <= CONJUGATE_LIMIT {
        put(
            names::RANDOMLY_ENGEL,
            randomly_engel_characterization(g, &l),
        );
    }
    let is_engel = l.len() == g.order();
    let metrics = if is_engel {
        None
    } else {
        let graph = build_engel_graph(g).expect("non-Engel group");
        let m = GraphMetrics::of(&graph);
        put(names::CLIQUE, clique_at_least_3(g, &m));
        put(names::NO_ISOLATED, no_isolated_vertex(g, &graph));
        put(names::UNIVERSAL, universal_vertex(g, &graph));
        put(names::DIAMETER_ONE, diameter_one(g, &l, &graph));
        if cyclic_quotient_generator(g, &l).is_some() {
            put(
                names::NILPOTENT_BY_CYCLIC,
                nilpotent_by_cyclic_diameter(g, &graph),
            );
        }
        if nilpotent_by_abelian(g) {
            put(
                names::CLASS_SUBGRAPH,
                conjugacy_class_subgraph(g, &l, &graph),
            );
        }
        Some(m)
    };
    GroupReport {
        name: g.name().to_string(),
        order: g.order(),
        is_engel,
        fitting_order: l.len(),
        metrics,
        checks: out,
    }
}

pub fn report(spec: &GroupSpec) -> Result<GroupReport, LoadError> {
    Ok(analyze(&spec.build()?))
}

/// A check failure found during a survey.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailedCheck {
    pub group: String,
    pub check: String,
    pub counterexample: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SurveySummary {
    /// Diameter (`"inf"` when disconnected) to number of groups.
    pub diameter_histogram: BTreeMap<String, usize>,
    pub planar_groups: Vec<String>,
    /// Disconnected Engel graphs would be new phenomena and are listed apart.
    pub disconnected_groups: Vec<String>,
    pub failed_checks: Vec<FailedCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyResult {
    pub max_order: usize,
    pub coverage: String,
    pub reports: Vec<GroupReport>,
    pub summary: SurveySummary,
}

impl SurveyResult {
    pub fn checked_groups(&self) -> Vec<&str> {
        self.reports.iter().map(|r| r.name.as_str()).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed_checks.is_empty()
    }
}

/// Surveys the catalog up to `max_order` on `jobs` threads (`0` means the
/// rayon default). Output does not depend on `jobs`.
pub fn survey(max_order: usize, families: FamilySelection, jobs: usize) -> SurveyResult {
    let entries = catalog(max_order, families);
    let config = ClosureConfig::from_env();
    let run = || -> Vec<Result<GroupReport, (String, String)>> {
        entries
            .par_iter()
            .map(|e| {
                e.build(&config)
                    .map(|g| analyze(&g))
                    .map_err(|err| (e.name(), err.to_string()))
            })
            .collect()
    };
    let results = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let mut reports = Vec::new();
    let mut summary = SurveySummary::default();
    for r in results {
        match r {
            Ok(rep) => reports.push(rep),
            Err((group, err)) => summary.failed_checks.push(FailedCheck {
                group,
                check: "construction".into(),
                counterexample: err,
            }),
        }
    }
    reports.sort_by(|a, b| (a.order, &a.name).cmp(&(b.order, &b.name)));
    for rep in &reports {
        if let Some(m) = rep.metrics {
            let d = m.diameter.map_or("none".to_string(), |d| d.to_string());
            *summary.diameter_histogram.entry(d).or_default() += 1;
            if m.planar {
                summary.planar_groups.push(rep.name.clone());
            }
            if m.diameter == Some(Diameter::Infinite) {
                summary.disconnected_groups.push(rep.name.clone());
            }
        }
        for (check, c) in rep.failures() {
            summary.failed_checks.push(FailedCheck {
                group: rep.name.clone(),
                check: check.to_string(),
                counterexample: c.counterexample.clone().unwrap_or_default(),
            });
        }
    }
    summary
        .failed_checks
        .sort_by(|a, b| (&a.group, &a.check).cmp(&(&b.group, &b.check)));
    SurveyResult {
        max_order,
        coverage: COVERAGE_NOTE.to_string(),
        reports,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_group_spec;

    fn rep(s: &str) -> GroupReport {
        report(&parse_group_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn reports_of_small_groups() {
        let s3 = rep("S3");
        assert_eq!(s3.fitting_order, 3);
        let m = s3.metrics.unwrap();
        assert_eq!((m.vertex_count, m.edge_count, m.clique_number), (3, 3, 3));
        assert_eq!(m.diameter, Some(Diameter::Finite(1)));
        assert!(m.planar && s3.all_passed());

        let a4 = rep("A4");
        let m = a4.metrics.unwrap();
        assert_eq!((m.vertex_count, m.clique_number, m.planar), (8, 4, false));
        assert_eq!(m.diameter, Some(Diameter::Finite(2)));

        let c12 = rep("C12");
        assert!(c12.is_engel && c12.metrics.is_none());
        assert_eq!(c12.fitting_order, 12);
        assert!(c12.all_passed());
    }

    #[test]
    fn survey_is_sorted_and_independent_of_jobs() {
        let one = survey(24, FamilySelection::all(), 1);
        let many = survey(24, FamilySelection::all(), 4);
        assert_eq!(one, many);
        let keys: Vec<_> = one
            .reports
            .iter()
            .map(|r| (r.order, r.name.clone()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(one.all_passed(), "{:?}", one.summary.failed_checks);
        assert_eq!(
            survey(6, FamilySelection::all(), 1).checked_groups(),
            ["S3"]
        );
    }
}
