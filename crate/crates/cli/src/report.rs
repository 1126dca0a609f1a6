//! The verification pipeline over a manifest and its JSON report.

use std::collections::{BTreeMap, BTreeSet};

use codegree_core::chartable::table_violations;
use codegree_core::classifier::FailureReason;
use codegree_core::codegree::{cod_all, cod_nonlinear};
use codegree_core::numtheory::gcd;
use codegree_core::oracles::{run_oracles, OracleOptions, OracleResult, Status};
use codegree_core::{character_table, classify_with_table, prime_graph, Certificate, PrimeGraph};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::manifest::ManifestEntry;

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub bound: usize,
    /// Worker threads; 1 runs sequentially.
    pub jobs: usize,
    /// Largest order on which the subgroup-table oracles run.
    pub subgroup_oracle_limit: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            bound: codegree_core::DEFAULT_ORDER_BOUND,
            jobs: 1,
            subgroup_oracle_limit: OracleOptions::default().subgroup_oracle_limit,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: BTreeSet<u64>,
    pub edges: Vec<(u64, u64)>,
    pub components: usize,
}

impl From<&PrimeGraph> for GraphSummary {
    fn from(g: &PrimeGraph) -> Self {
        GraphSummary {
            vertices: g.vertices.clone(),
            edges: g.edges.iter().copied().collect(),
            components: g.num_components(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupRecord {
    pub name: String,
    pub spec: String,
    pub passed: bool,
    pub error: Option<String>,
    pub order: Option<usize>,
    pub cod_all: BTreeSet<u64>,
    pub cod_nonlinear: BTreeSet<u64>,
    pub graph_all: Option<GraphSummary>,
    pub graph_nonlinear: Option<GraphSummary>,
    pub table_violations: Vec<String>,
    pub certificate: Option<Certificate>,
    pub oracles: Vec<OracleResult>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleTally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub passed: usize,
    pub failed: usize,
    pub build_errors: usize,
    pub table_failures: usize,
    pub star_groups: usize,
    pub branches: BTreeMap<String, usize>,
    pub classification_violations: usize,
    pub converse_violations: usize,
    pub oracles: BTreeMap<String, OracleTally>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub groups: Vec<GroupRecord>,
    pub summary: Summary,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn error_record(entry: &ManifestEntry, err: &CliError) -> GroupRecord {
    GroupRecord {
        name: entry.name.clone(),
        spec: entry.spec.to_string(),
        passed: false,
        error: Some(err.to_string()),
        order: None,
        cod_all: BTreeSet::new(),
        cod_nonlinear: BTreeSet::new(),
        graph_all: None,
        graph_nonlinear: None,
        table_violations: Vec::new(),
        certificate: None,
        oracles: Vec::new(),
    }
}

/// Runs the whole pipeline for one entry. Errors become failed records.
pub fn process_entry(entry: &ManifestEntry, options: &RunOptions) -> GroupRecord {
    match try_process(entry, options) {
        Ok(r) => r,
        Err(e) => error_record(entry, &e),
    }
}

fn try_process(entry: &ManifestEntry, options: &RunOptions) -> Result<GroupRecord> {
    let mut g = entry.spec.build(options.bound)?;
    g.set_name(entry.name.clone());
    let table = character_table(&g)?;
    let violations = table_violations(&table);
    let all = cod_all(&table)?;
    let nonlinear = cod_nonlinear(&table)?;
    let certificate = classify_with_table(&table)?;
    // C_p x L with L a nonabelian p'-group
    let direct_product_prime = entry.spec.direct_cyclic_prime().filter(|&p| {
        let rest = g.order() as u64 / p;
        gcd(rest, p) == 1 && !g.is_abelian()
    });
    let oracle_options = OracleOptions {
        subgroup_oracle_limit: options.subgroup_oracle_limit,
        direct_product_prime,
    };
    let oracles = run_oracles(&table, &oracle_options)?;
    let passed = violations.is_empty()
        && certificate.passed()
        && oracles.iter().all(|o| o.status != Status::Fail);
    log::info!("{}: order {}, passed {passed}", entry.name, g.order());
    Ok(GroupRecord {
        name: entry.name.clone(),
        spec: entry.spec.to_string(),
        passed,
        error: None,
        order: Some(g.order()),
        graph_all: Some((&prime_graph(&all)).into()),
        graph_nonlinear: (!nonlinear.is_empty()).then(|| (&prime_graph(&nonlinear)).into()),
        cod_all: all,
        cod_nonlinear: nonlinear,
        table_violations: violations,
        certificate: Some(certificate),
        oracles,
    })
}

fn summarize(records: &[GroupRecord]) -> Summary {
    let mut s = Summary {
        groups: records.len(),
        ..Default::default()
    };
    for r in records {
        if r.passed {
            s.passed += 1;
        } else {
            s.failed += 1;
        }
        if r.error.is_some() {
            s.build_errors += 1;
        }
        if !r.table_violations.is_empty() {
            s.table_failures += 1;
        }
        if let Some(c) = &r.certificate {
            if c.is_star {
                s.star_groups += 1;
            }
            let branch = serde_json::to_value(c.branch).expect("enum serializes");
            *s.branches.entry(branch.as_str().unwrap_or("?").to_string()).or_default() += 1;
            match c.failure_reason {
                Some(FailureReason::ClassificationViolation) => s.classification_violations += 1,
                Some(FailureReason::ConverseViolation) => s.converse_violations += 1,
                None => {}
            }
        }
        for o in &r.oracles {
            let t = s.oracles.entry(o.oracle.clone()).or_default();
            match o.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::NotApplicable => t.not_applicable += 1,
            }
        }
    }
    s
}

/// Processes every entry and assembles the report in manifest order.
pub fn run_suite(manifest: &[ManifestEntry], options: &RunOptions) -> Result<RunReport> {
    if manifest.is_empty() {
        return Err(CliError::EmptyManifest);
    }
    let records: Vec<GroupRecord> = if options.jobs <= 1 {
        manifest.iter().map(|e| process_entry(e, options)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| manifest.par_iter().map(|e| process_entry(e, options)).collect())
    };
    let summary = summarize(&records);
    Ok(RunReport { groups: records, summary })
}
