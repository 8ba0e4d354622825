//! Corpus sweeps: every criterion plus the explicit search on each graph.

use compfactor_core::factor::{
    check_thm11, check_thm13, check_thm14, check_thm15, deficiency_capped,
};
use compfactor_core::spectral::check_thm12;
use compfactor_core::{builder, verify_certificate, ConditionVerdict, Graph, Limits, TreeCatalog};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::format::parse_graph6;

/// Sweep settings shared by every row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub k: usize,
    pub tol: f64,
    pub limits: Limits,
}

/// The result of running the explicit factor search on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchOutcome {
    Found,
    Absent,
    /// Order above the search cap.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    /// 1-based line number in the input.
    pub line: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    #[serde(flatten, skip_serializing_if = "Option::is_none", default)]
    pub result: Option<RowResult>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowResult {
    pub n: usize,
    pub m: usize,
    pub deficiency: i64,
    pub has_factor: bool,
    pub verdicts: Vec<ConditionVerdict>,
    pub factor_search: SearchOutcome,
    /// A sufficient condition holds although no factor exists.
    pub counterexample: bool,
    /// The explicit search disagrees with the exact criterion, or returned
    /// a certificate that fails verification.
    pub disagreement: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub errors: usize,
    pub with_factor: usize,
    /// Per condition label: applicable rows and rows where it holds.
    pub conditions: Vec<ConditionTally>,
    pub counterexamples: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionTally {
    pub condition: String,
    pub applicable: usize,
    pub holds: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub k: usize,
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

impl SweepReport {
    /// Process exit code: 1 on any counterexample or disagreement, else 3
    /// on any row error, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.summary.counterexamples > 0 || self.summary.disagreements > 0 {
            1
        } else if self.summary.errors > 0 {
            3
        } else {
            0
        }
    }
}

/// Label used in summaries, e.g. `1.3(t=1)`.
pub fn condition_label(v: &ConditionVerdict, t: Option<usize>) -> String {
    match t {
        Some(t) => format!("{}(t={t})", v.theorem),
        None => v.theorem.to_string(),
    }
}

/// All verdicts for one graph: the exact criterion, then the four
/// sufficient conditions (the edge-count one for every `t` in `1..k`).
pub fn verdicts(
    g: &Graph,
    cfg: &SweepConfig,
) -> compfactor_core::Result<Vec<(ConditionVerdict, Option<usize>)>> {
    let mut out = vec![
        (check_thm11(g, cfg.k, &cfg.limits)?, None),
        (check_thm12(g, cfg.k, cfg.tol)?, None),
    ];
    for t in 1..cfg.k {
        out.push((check_thm13(g, cfg.k, t, &cfg.limits)?, Some(t)));
    }
    out.push((check_thm14(g, cfg.k, &cfg.limits)?, None));
    out.push((check_thm15(g, cfg.k, &cfg.limits)?, None));
    Ok(out)
}

/// Analyses one graph. `catalog` must cover every order up to the factor
/// cap that will be searched.
pub fn analyse(
    g: &Graph,
    cfg: &SweepConfig,
    catalog: &TreeCatalog,
) -> compfactor_core::Result<(RowResult, Vec<Option<usize>>)> {
    let report = deficiency_capped(g, cfg.k, cfg.limits.deficiency)?;
    let labelled = verdicts(g, cfg)?;
    let has_factor = report.has_factor();
    let counterexample = !has_factor
        && labelled
            .iter()
            .any(|(v, _)| !v.theorem.is_exact() && v.implies_factor());
    let (factor_search, disagreement) = if g.order() <= cfg.limits.factor.min(catalog.max_order) {
        match builder::find_factor_capped(g, cfg.k, catalog, cfg.limits.factor)? {
            Some(cert) => (
                SearchOutcome::Found,
                !has_factor || verify_certificate(g, cfg.k, &cert, catalog).is_err(),
            ),
            None => (SearchOutcome::Absent, has_factor),
        }
    } else {
        (SearchOutcome::Skipped, false)
    };
    let ts = labelled.iter().map(|(_, t)| *t).collect();
    Ok((
        RowResult {
            n: g.order(),
            m: g.size(),
            deficiency: report.value,
            has_factor,
            verdicts: labelled.into_iter().map(|(v, _)| v).collect(),
            factor_search,
            counterexample,
            disagreement,
        },
        ts,
    ))
}

/// Sweeps graph6 lines (blank lines ignored). Rows are computed in
/// parallel and reported in input order.
pub fn sweep(text: &str, cfg: &SweepConfig) -> compfactor_core::Result<SweepReport> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let parsed: Vec<(usize, &str, Result<Graph, String>)> = lines
        .iter()
        .map(|&(line, s)| (line, s, parse_graph6(s).map_err(|e| e.to_string())))
        .collect();
    let max_order = parsed
        .iter()
        .filter_map(|(_, _, g)| g.as_ref().ok().map(Graph::order))
        .filter(|&n| n <= cfg.limits.factor)
        .max()
        .unwrap_or(1);
    let catalog = compfactor_core::enumerate_catalog(cfg.k, max_order)?;

    let results: Vec<(SweepRow, Vec<Option<usize>>)> = parsed
        .into_par_iter()
        .map(|(line, s, g)| {
            let res = g.and_then(|g| analyse(&g, cfg, &catalog).map_err(|e| e.to_string()));
            match res {
                Ok((r, ts)) => (
                    SweepRow {
                        line,
                        graph6: s.to_owned(),
                        error: None,
                        result: Some(r),
                    },
                    ts,
                ),
                Err(e) => (
                    SweepRow {
                        line,
                        graph6: s.to_owned(),
                        error: Some(e),
                        result: None,
                    },
                    Vec::new(),
                ),
            }
        })
        .collect();

    let mut summary = SweepSummary::default();
    let mut rows = Vec::with_capacity(results.len());
    for (row, ts) in results {
        summary.graphs += 1;
        match &row.result {
            None => summary.errors += 1,
            Some(r) => {
                summary.with_factor += usize::from(r.has_factor);
                summary.counterexamples += usize::from(r.counterexample);
                summary.disagreements += usize::from(r.disagreement);
                for (v, t) in r.verdicts.iter().zip(ts) {
                    let label = condition_label(v, t);
                    let pos = match summary.conditions.iter().position(|c| c.condition == label) {
                        Some(p) => p,
                        None => {
                            summary.conditions.push(ConditionTally {
                                condition: label,
                                applicable: 0,
                                holds: 0,
                            });
                            summary.conditions.len() - 1
                        }
                    };
                    let tally = &mut summary.conditions[pos];
                    tally.applicable += usize::from(v.applicable());
                    tally.holds += usize::from(v.implies_factor());
                }
            }
        }
        rows.push(row);
    }
    Ok(SweepReport {
        k: cfg.k,
        rows,
        summary,
    })
}
