//! JSON serialization of reports and surveys. Field order is fixed by the
//! struct layouts below.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Diameter;
use crate::survey::{FailedCheck, GroupReport, SurveyResult};

#[derive(Serialize)]
#[serde(untagged)]
enum DiameterJson {
    Finite(usize),
    Infinite(&'static str),
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ReportJson<'a> {
    name: &'a str,
    order: usize,
    is_engel: bool,
    fitting_order: usize,
    vertex_count: usize,
    edge_count: usize,
    component_count: usize,
    diameter: Option<DiameterJson>,
    clique_number: usize,
    planar: Option<bool>,
    isolated_count: usize,
    checks: BTreeMap<&'a str, &'static str>,
}

impl<'a> From<&'a GroupReport> for ReportJson<'a> {
    fn from(r: &'a GroupReport) -> Self {
        let m = r.metrics.unwrap_or(crate::graph::GraphMetrics {
            vertex_count: 0,
            edge_count: 0,
            component_count: 0,
            diameter: None,
            clique_number: 0,
            planar: false,
            isolated_count: 0,
        });
        ReportJson {
            name: &r.name,
            order: r.order,
            is_engel: r.is_engel,
            fitting_order: r.fitting_order,
            vertex_count: m.vertex_count,
            edge_count: m.edge_count,
            component_count: m.component_count,
            diameter: m.diameter.map(|d| match d {
                Diameter::Finite(k) => DiameterJson::Finite(k),
                Diameter::Infinite => DiameterJson::Infinite("inf"),
            }),
            clique_number: m.clique_number,
            planar: r.metrics.map(|m| m.planar),
            isolated_count: m.isolated_count,
            checks: r
                .checks
                .iter()
                .map(|(k, c)| (k.as_str(), if c.passed { "pass" } else { "fail" }))
                .collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FailedCheckJson<'a> {
    group: &'a str,
    check: &'a str,
    counterexample: &'a str,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SummaryJson<'a> {
    diameter_histogram: &'a BTreeMap<String, usize>,
    planar_groups: &'a [String],
    disconnected_groups: &'a [String],
    failed_checks: Vec<FailedCheckJson<'a>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SurveyJson<'a> {
    max_order: usize,
    coverage: &'a str,
    checked_groups: Vec<&'a str>,
    reports: Vec<ReportJson<'a>>,
    summary: SummaryJson<'a>,
}

/// One-line JSON object for a report. Engel groups have zero counts and
/// `null` diameter and planarity.
pub fn write_report(r: &GroupReport) -> String {
    serde_json::to_string(&ReportJson::from(r)).expect("report serializes")
}

fn failed(f: &FailedCheck) -> FailedCheckJson<'_> {
    FailedCheckJson {
        group: &f.group,
        check: &f.check,
        counterexample: &f.counterexample,
    }
}

/// Pretty-printed survey, with a trailing newline.
pub fn write_survey(s: &SurveyResult) -> String {
    let json = SurveyJson {
        max_order: s.max_order,
        coverage: &s.coverage,
        checked_groups: s.checked_groups(),
        reports: s.reports.iter().map(ReportJson::from).collect(),
        summary: SummaryJson {
            diameter_histogram: &s.summary.diameter_histogram,
            planar_groups: &s.summary.planar_groups,
            disconnected_groups: &s.summary.disconnected_groups,
            failed_checks: s.summary.failed_checks.iter().map(failed).collect(),
        },
    };
    let mut out = serde_json::to_string_pretty(&json).expect("survey serializes");
    out.push('\n');
    out
}
