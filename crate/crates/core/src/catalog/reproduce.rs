//! Batch drivers that re-derive the catalog annotations from scratch: pair
//! verification, cohomology tables, existence/non-existence sweeps and
//! lambda-sign analysis, each emitting one PASS/FAIL row per check.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{sample_bindings, verify_pair_against, Catalog, CatalogError, SubcaseRow};
use crate::exterior::KForm;
use crate::halfflat::{
    lambda_sign_analysis, obstruction_certificate, refined_metric_obstruction,
    LambdaSignOutcome,
};
use crate::lie::Presentation;
use crate::scalar::{Rat, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReproduceScope {
    Examples,
    Cohomology,
    Theorem4d,
    Theorem5d,
    Prop33,
    Prop41,
    Prop42,
}

impl ReproduceScope {
    pub fn parse(s: &str) -> Option<ReproduceScope> {
        Some(match s {
            "examples" => ReproduceScope::Examples,
            "cohomology" => ReproduceScope::Cohomology,
            "theorem-4d" => ReproduceScope::Theorem4d,
            "theorem-5d" => ReproduceScope::Theorem5d,
            "prop-3.3" => ReproduceScope::Prop33,
            "prop-4.1" => ReproduceScope::Prop41,
            "prop-4.2" => ReproduceScope::Prop42,
            _ => return None,
        })
    }

    pub fn all() -> [ReproduceScope; 7] {
        [
            ReproduceScope::Examples,
            ReproduceScope::Cohomology,
            ReproduceScope::Theorem4d,
            ReproduceScope::Theorem5d,
            ReproduceScope::Prop33,
            ReproduceScope::Prop41,
            ReproduceScope::Prop42,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            ReproduceScope::Examples => "examples",
            ReproduceScope::Cohomology => "cohomology",
            ReproduceScope::Theorem4d => "theorem-4d",
            ReproduceScope::Theorem5d => "theorem-5d",
            ReproduceScope::Prop33 => "prop-3.3",
            ReproduceScope::Prop41 => "prop-4.1",
            ReproduceScope::Prop42 => "prop-4.2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct RowResult {
    pub id: String,
    pub status: RowStatus,
    pub expected: String,
    pub computed: String,
}

impl RowResult {
    fn pass(id: String, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        RowResult {
            id,
            status: RowStatus::Pass,
            expected: expected.into(),
            computed: computed.into(),
        }
    }

    fn fail(id: String, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        RowResult {
            id,
            status: RowStatus::Fail,
            expected: expected.into(),
            computed: computed.into(),
        }
    }

    fn check(id: String, ok: bool, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        if ok {
            Self::pass(id, expected, computed)
        } else {
            Self::fail(id, expected, computed)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproduceReport {
    pub scope: &'static str,
    pub rows: Vec<RowResult>,
    pub passed: usize,
    pub failed: usize,
}

impl ReproduceReport {
    fn new(scope: ReproduceScope, rows: Vec<RowResult>) -> Self {
        let passed = rows.iter().filter(|r| r.status == RowStatus::Pass).count();
        let failed = rows.len() - passed;
        ReproduceReport {
            scope: scope.name(),
            rows,
            passed,
            failed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== reproduce {} ==\n", self.scope));
        for r in &self.rows {
            let status = match r.status {
                RowStatus::Pass => "PASS",
                RowStatus::Fail => "FAIL",
            };
            out.push_str(&format!(
                "{:<4} {:<44} expected: {:<28} computed: {}\n",
                status, r.id, r.expected, r.computed
            ));
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed\n",
            self.scope, self.passed, self.failed
        ));
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReproduceConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for ReproduceConfig {
    fn default() -> Self {
        ReproduceConfig {
            samples: 10_000,
            seed: 20_106,
        }
    }
}

/// Run one reproduction scope over the whole catalog. Rows are independent
/// and evaluated in parallel; output order follows catalog order.
pub fn reproduce(
    cat: &Catalog,
    scope: ReproduceScope,
    config: ReproduceConfig,
) -> Result<ReproduceReport, CatalogError> {
    let rows = match scope {
        ReproduceScope::Examples => examples_rows(cat)?,
        ReproduceScope::Cohomology => cohomology_rows(cat)?,
        ReproduceScope::Theorem4d => theorem4d_rows(cat)?,
        ReproduceScope::Theorem5d => theorem5d_rows(cat)?,
        ReproduceScope::Prop33 => prop33_rows(cat)?,
        ReproduceScope::Prop41 => prop41_rows(cat, config)?,
        ReproduceScope::Prop42 => prop42_rows(cat, config)?,
    };
    Ok(ReproduceReport::new(scope, rows))
}

fn bindings_list(row: &SubcaseRow) -> Result<Vec<BTreeMap<String, Rat>>, CatalogError> {
    row.samples
        .iter()
        .map(|s| sample_bindings(s).map_err(CatalogError::BadAnnotations))
        .collect()
}

fn binding_label(b: &BTreeMap<String, Rat>) -> String {
    if b.is_empty() {
        return String::new();
    }
    let inner: Vec<String> = b.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
    format!("[{}]", inner.join(","))
}

/// Verify every example pair at every annotated binding, including the
/// exact Gram-matrix comparison.
fn examples_rows(cat: &Catalog) -> Result<Vec<RowResult>, CatalogError> {
    let mut tasks = Vec::new();
    for pref in &cat.annotations.pairs {
        let pair = cat.load_pair(&pref.file)?;
        let param_sets: Vec<BTreeMap<String, String>> = if pref.params.is_empty() {
            vec![BTreeMap::new()]
        } else {
            pref.params.clone()
        };
        for sample in param_sets {
            let bindings =
                sample_bindings(&sample).map_err(CatalogError::BadAnnotations)?;
            let g = cat.presentation(&pref.algebra, &bindings)?;
            tasks.push((pref.algebra.clone(), binding_label(&bindings), g, pair.clone()));
        }
    }
    let rows: Vec<RowResult> = tasks
        .par_iter()
        .map(|(algebra, label, g, pair)| {
            let id = format!("{}{} ({})", algebra, label, pair.file);
            match verify_pair_against(g, pair) {
                Ok(v) if v.verdict => {
                    RowResult::pass(id, "half-flat, Gram exact", "all flags true")
                }
                Ok(v) => RowResult::fail(
                    id,
                    "half-flat, Gram exact",
                    format!(
                        "rho_closed={} omega2_closed={} compatible={} normalized={} \
                         lambda_negative={} positive_definite={} gram_matches={}",
                        v.report.rho_closed,
                        v.report.omega2_closed,
                        v.report.compatible,
                        v.report.normalized,
                        v.report.lambda_negative,
                        v.report.metric_positive_definite,
                        v.gram_matches
                    ),
                ),
                Err(e) => RowResult::fail(id, "half-flat, Gram exact", e.to_string()),
            }
        })
        .collect();
    Ok(rows)
}

/// Check the annotated cohomology vector, center dimension and
/// unimodularity of every subcase at every sample, with a cross-sample
/// rank-agreement guard.
fn cohomology_rows(cat: &Catalog) -> Result<Vec<RowResult>, CatalogError> {
    let all_rows: Vec<&SubcaseRow> = cat
        .annotations
        .rows4
        .iter()
        .chain(cat.annotations.rows5.iter())
        .collect();
    let mut tasks = Vec::new();
    for row in all_rows {
        tasks.push((row, bindings_list(row)?));
    }
    let rows: Vec<Vec<RowResult>> = tasks
        .par_iter()
        .map(|(row, samples)| cohomology_row(cat, row, samples))
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

fn cohomology_row(
    cat: &Catalog,
    row: &SubcaseRow,
    samples: &[BTreeMap<String, Rat>],
) -> Vec<RowResult> {
    let mut out = Vec::new();
    let mut seen_h: Option<Vec<usize>> = None;
    for bindings in samples {
        let id = format!("{}{}", row.id, binding_label(bindings));
        let g = match cat.presentation(&row.base, bindings) {
            Ok(g) => g,
            Err(e) => {
                out.push(RowResult::fail(id, "presentation loads", e.to_string()));
                continue;
            }
        };
        let h = match g.cohomology_dims() {
            Ok(h) => h.0,
            Err(e) => {
                out.push(RowResult::fail(id, "cohomology computes", e.to_string()));
                continue;
            }
        };
        // Rank agreement across samples within one subcase.
        if let Some(prev) = &seen_h {
            if prev != &h {
                out.push(RowResult::fail(
                    id.clone(),
                    format!("h stable across samples ({:?})", prev),
                    format!("{:?}", h),
                ));
                continue;
            }
        } else {
            seen_h = Some(h.clone());
        }
        if let Some(expected) = &row.h {
            out.push(RowResult::check(
                format!("{} h*", id),
                &h == expected,
                format!("{:?}", expected),
                format!("{:?}", h),
            ));
        } else {
            out.push(RowResult::pass(
                format!("{} h*", id),
                "computed",
                format!("{:?}", h),
            ));
        }
        let inv = match g.structural_invariants() {
            Ok(i) => i,
            Err(e) => {
                out.push(RowResult::fail(
                    format!("{} invariants", id),
                    "invariants compute",
                    e.to_string(),
                ));
                continue;
            }
        };
        if let Some(center) = row.center {
            let matches = inv.center_dim == center;
            if matches {
                out.push(RowResult::pass(
                    format!("{} center", id),
                    center.to_string(),
                    inv.center_dim.to_string(),
                ));
            } else if row.center_discrepancy {
                out.push(RowResult::pass(
                    format!("{} center", id),
                    format!("{} (annotation flagged as discrepant)", center),
                    format!("{} (computed value reported)", inv.center_dim),
                ));
            } else {
                out.push(RowResult::fail(
                    format!("{} center", id),
                    center.to_string(),
                    inv.center_dim.to_string(),
                ));
            }
        }
        if let Some(uni) = row.unimodular {
            out.push(RowResult::check(
                format!("{} unimodular", id),
                inv.unimodular == uni,
                uni.to_string(),
                inv.unimodular.to_string(),
            ));
        }
    }
    out
}

fn alpha_form(i: u8) -> KForm {
    KForm::basis(6, &[i])
}

/// Does some catalog pair cover this subcase row (same base, bindings inside
/// the subcase)?
fn pair_covering(
    cat: &Catalog,
    row: &SubcaseRow,
    summand: &str,
) -> Result<Option<(String, BTreeMap<String, Rat>)>, CatalogError> {
    let name = format!("{}+{}", row.base, summand);
    for pref in &cat.annotations.pairs {
        if pref.algebra != name {
            continue;
        }
        let param_sets: Vec<BTreeMap<String, String>> = if pref.params.is_empty() {
            vec![BTreeMap::new()]
        } else {
            pref.params.clone()
        };
        for sample in param_sets {
            let bindings =
                sample_bindings(&sample).map_err(CatalogError::BadAnnotations)?;
            if cat
                .matching_row(&row.base, &bindings)?
                .map(|r| r.id == row.id)
                .unwrap_or(false)
            {
                return Ok(Some((pref.file.clone(), bindings)));
            }
        }
    }
    Ok(None)
}

/// Scan the six basis one-forms for an identically-zero certificate; a
/// half-flat-admitting algebra must yield none (soundness consistency).
fn no_basis_obstruction(g: &Presentation) -> Result<bool, CatalogError> {
    for i in 1..=6u8 {
        let cert = obstruction_certificate(g, &alpha_form(i))?;
        if cert.is_obstruction() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Existence side of the four-dimensional classification: for `g + r2`
/// either a catalog pair verifies on the row itself, or the row is covered
/// by the one-parameter family `B` and the row's own presentation passes
/// the soundness scan.
fn theorem4d_existence(
    cat: &Catalog,
    row: &SubcaseRow,
    bindings: &BTreeMap<String, Rat>,
    id: String,
) -> Result<RowResult, CatalogError> {
    if let Some((file, pair_bindings)) = pair_covering(cat, row, "r2")? {
        let g = cat.presentation(&format!("{}+r2", row.base), &pair_bindings)?;
        let pair = cat.load_pair(&file)?;
        let v = verify_pair_against(&g, &pair)?;
        return Ok(RowResult::check(
            id,
            v.verdict,
            "half-flat example verifies",
            format!("pair {} verdict {}", file, v.verdict),
        ));
    }
    // Covered through an isomorphic member of the B family; the row's own
    // presentation still must not produce a basis obstruction.
    let g = cat.presentation(&format!("{}+r2", row.base), bindings)?;
    let ok = no_basis_obstruction(&g)?;
    Ok(RowResult::check(
        id,
        ok,
        "existence via isomorphic family member; no basis obstruction",
        format!("basis scan clean: {}", ok),
    ))
}

fn theorem4d_rows(cat: &Catalog) -> Result<Vec<RowResult>, CatalogError> {
    let mut tasks: Vec<(SubcaseRow, BTreeMap<String, Rat>)> = Vec::new();
    for row in &cat.annotations.rows4 {
        for b in bindings_list(row)? {
            tasks.push((row.clone(), b));
        }
    }
    let rows: Vec<Result<Vec<RowResult>, CatalogError>> = tasks
        .par_iter()
        .map(|(row, bindings)| {
            let mut out = Vec::new();
            let label = format!("{}{}", row.id, binding_label(bindings));
            // (a) g + R2 never admits: e4 obstructs.
            let g_rr = cat.presentation(&format!("{}+R2", row.base), bindings)?;
            let cert = obstruction_certificate(&g_rr, &alpha_form(4))?;
            out.push(RowResult::check(
                format!("{}+R2 obstructed", label),
                cert.is_obstruction(),
                "certificate identically zero (alpha=e4)",
                format!("{:?}", cert.verdict),
            ));
            // (b) g + r2 admits iff the hf flag is set.
            match row.hf_r2 {
                Some(true) => {
                    out.push(theorem4d_existence(
                        cat,
                        row,
                        bindings,
                        format!("{}+r2 admits", label),
                    )?);
                }
                Some(false) => {
                    let g = cat.presentation(&format!("{}+r2", row.base), bindings)?;
                    if row.refined_obstruction {
                        let e4 = alpha_form(4);
                        let e5 = alpha_form(5);
                        let target = e4
                            .add(&e5.scale(&Scalar::root(2).unwrap()).unwrap())
                            .unwrap();
                        let res =
                            refined_metric_obstruction(&g, &[(e5, e4)], &target);
                        out.push(RowResult::check(
                            format!("{}+r2 obstructed (refined)", label),
                            res.is_ok(),
                            "null-vector identity chain holds",
                            match res {
                                Ok(_) => "chain holds; contradiction established".into(),
                                Err(e) => e.to_string(),
                            },
                        ));
                    } else {
                        let cert = obstruction_certificate(&g, &alpha_form(4))?;
                        out.push(RowResult::check(
                            format!("{}+r2 obstructed", label),
                            cert.is_obstruction(),
                            "certificate identically zero (alpha=e4)",
                            format!("{:?}", cert.verdict),
                        ));
                    }
                }
                None => {}
            }
            Ok(out)
        })
        .collect();
    flatten_results(rows)
}

/// The five-dimensional classification predicate, driven by computed
/// unimodularity and h^2 plus the annotated nilradical.
fn theorem5d_predicts(
    row: &SubcaseRow,
    bindings: &BTreeMap<String, Rat>,
    unimodular: bool,
    h2: usize,
) -> bool {
    let nil = row.nilradical.as_deref().unwrap_or("");
    let base = row.base.as_str();
    let value = |name: &str| bindings.get(name).cloned();
    if unimodular {
        // (i) nilpotent, except A5.3
        if nil == "self" {
            return base != "A5.3";
        }
        // (ii) four-dimensional nilradical, h^2 >= 2, except A5.9(-1,-1)
        if matches!(nil, "R4" | "h3+R" | "A4.1") {
            if base == "A5.9" {
                let minus_one = Rat::from_integer((-1).into());
                if value("beta") == Some(minus_one.clone())
                    && value("gamma") == Some(minus_one)
                {
                    return false;
                }
            }
            return h2 >= 2;
        }
        // (iii) nilradical R^3 or R^2
        matches!(nil, "R3" | "R2")
    } else {
        // (i) nilradical h3, or (ii) the three exceptional members
        if nil == "h3" {
            return true;
        }
        let pair = |a: i64, b: i64| {
            value("alpha") == Some(Rat::from_integer(a.into()))
                && value("beta") == Some(Rat::from_integer(b.into()))
        };
        (base == "A5.19" && (pair(-1, 3) || pair(2, -3)))
            || (base == "A5.30"
                && value("alpha") == Some(Rat::from_integer(0.into())))
    }
}

fn theorem5d_rows(cat: &Catalog) -> Result<Vec<RowResult>, CatalogError> {
    let mut tasks: Vec<(SubcaseRow, BTreeMap<String, Rat>)> = Vec::new();
    for row in &cat.annotations.rows5 {
        for b in bindings_list(row)? {
            tasks.push((row.clone(), b));
        }
    }
    let rows: Vec<Result<Vec<RowResult>, CatalogError>> = tasks
        .par_iter()
        .map(|(row, bindings)| {
            let mut out = Vec::new();
            let label = format!("{}{}", row.id, binding_label(bindings));
            let g5 = cat.presentation(&row.base, bindings)?;
            let inv = g5.structural_invariants()?;
            let h = g5.cohomology_dims()?;
            let predicted = theorem5d_predicts(row, bindings, inv.unimodular, h.0[1]);
            if let Some(expected_hf) = row.hf_r {
                out.push(RowResult::check(
                    format!("{} classification", label),
                    predicted == expected_hf,
                    format!("admits: {}", expected_hf),
                    format!(
                        "predicate(uni={}, h2={}, nil={}) = {}",
                        inv.unimodular,
                        h.0[1],
                        row.nilradical.as_deref().unwrap_or("?"),
                        predicted
                    ),
                ));
            }
            let g = cat.presentation(&format!("{}+R", row.base), bindings)?;
            if predicted {
                if let Some((file, pair_bindings)) = pair_covering(cat, row, "R")? {
                    let gp =
                        cat.presentation(&format!("{}+R", row.base), &pair_bindings)?;
                    let pair = cat.load_pair(&file)?;
                    let v = verify_pair_against(&gp, &pair)?;
                    out.push(RowResult::check(
                        format!("{}+R admits", label),
                        v.verdict,
                        "half-flat example verifies",
                        format!("pair {} verdict {}", file, v.verdict),
                    ));
                } else {
                    let ok = no_basis_obstruction(&g)?;
                    out.push(RowResult::check(
                        format!("{}+R admits", label),
                        ok,
                        "example external; no basis obstruction",
                        format!("basis scan clean: {}", ok),
                    ));
                }
            } else {
                let cert = obstruction_certificate(&g, &alpha_form(5))?;
                out.push(RowResult::check(
                    format!("{}+R obstructed", label),
                    cert.is_obstruction(),
                    "certificate identically zero (alpha=e5)",
                    format!("{:?}", cert.verdict),
                ));
            }
            Ok(out)
        })
        .collect();
    flatten_results(rows)
}

fn prop33_rows(cat: &Catalog) -> Result<Vec<RowResult>, CatalogError> {
    let mut tasks: Vec<(SubcaseRow, BTreeMap<String, Rat>)> = Vec::new();
    for row in &cat.annotations.rows4 {
        for b in bindings_list(row)? {
            tasks.push((row.clone(), b));
        }
    }
    let rows: Vec<Result<Vec<RowResult>, CatalogError>> = tasks
        .par_iter()
        .map(|(row, bindings)| {
            let mut out = Vec::new();
            let label = format!("{}{}", row.id, binding_label(bindings));
            // (i) direct sums with R^2 never admit.
            let g_rr = cat.presentation(&format!("{}+R2", row.base), bindings)?;
            let cert = obstruction_certificate(&g_rr, &alpha_form(4))?;
            out.push(RowResult::check(
                format!("{}+R2 (i)", label),
                cert.is_obstruction(),
                "identically zero (alpha=e4)",
                format!("{:?}", cert.verdict),
            ));
            // (ii) non-unimodular, non-exceptional sums with r2.
            if row.unimodular == Some(false) && row.hf_r2 == Some(false) {
                let g = cat.presentation(&format!("{}+r2", row.base), bindings)?;
                let cert = obstruction_certificate(&g, &alpha_form(4))?;
                out.push(RowResult::check(
                    format!("{}+r2 (ii)", label),
                    cert.is_obstruction(),
                    "identically zero (alpha=e4)",
                    format!("{:?}", cert.verdict),
                ));
            }
            // (iii) the refined metric obstruction.
            if row.refined_obstruction {
                let g = cat.presentation(&format!("{}+r2", row.base), bindings)?;
                let e4 = alpha_form(4);
                let e5 = alpha_form(5);
                let target = e4
                    .add(&e5.scale(&Scalar::root(2).unwrap()).unwrap())
                    .unwrap();
                let res = refined_metric_obstruction(&g, &[(e5, e4)], &target);
                out.push(RowResult::check(
                    format!("{}+r2 (iii)", label),
                    res.is_ok(),
                    "null-vector identity chain holds",
                    match res {
                        Ok(_) => "chain holds; contradiction established".into(),
                        Err(e) => e.to_string(),
                    },
                ));
            }
            Ok(out)
        })
        .collect();
    flatten_results(rows)
}

fn lambda_expectation(report_status: &LambdaSignOutcome) -> &'static str {
    match report_status {
        LambdaSignOutcome::IdenticallyZero => "IdenticallyZero",
        LambdaSignOutcome::NonNegativeSampled { .. } => "NonNegativeSampled",
        LambdaSignOutcome::IndefiniteWitness { .. } => "IndefiniteWitness",
    }
}

fn lambda_row(
    cat: &Catalog,
    name: &str,
    bindings: &BTreeMap<String, Rat>,
    id: String,
    expected: &'static str,
    config: ReproduceConfig,
) -> Result<RowResult, CatalogError> {
    let g = cat.presentation(name, bindings)?;
    let report = lambda_sign_analysis(&g, config.samples, config.seed)?;
    let got = lambda_expectation(&report.status);
    let computed = match &report.status {
        LambdaSignOutcome::NonNegativeSampled { samples } => {
            format!("consistent with lambda >= 0 ({} samples)", samples)
        }
        LambdaSignOutcome::IndefiniteWitness { sample_index, .. } => {
            format!("negative value at sample {}", sample_index)
        }
        LambdaSignOutcome::IdenticallyZero => "lambda = 0 on closed three-forms".into(),
    };
    Ok(RowResult::check(id, got == expected, expected, computed))
}

fn prop41_rows(
    cat: &Catalog,
    config: ReproduceConfig,
) -> Result<Vec<RowResult>, CatalogError> {
    let mut tasks: Vec<(SubcaseRow, BTreeMap<String, Rat>)> = Vec::new();
    for row in &cat.annotations.rows4 {
        for b in bindings_list(row)? {
            tasks.push((row.clone(), b));
        }
    }
    let rows: Vec<Result<Vec<RowResult>, CatalogError>> = tasks
        .par_iter()
        .map(|(row, bindings)| {
            let mut out = Vec::new();
            let label = format!("{}{}", row.id, binding_label(bindings));
            let expected_rr = if row.lambda_eq0_rr == Some(true) {
                "IdenticallyZero"
            } else if row.lambda_ge0_rr == Some(true) {
                "NonNegativeSampled"
            } else {
                "IndefiniteWitness"
            };
            out.push(lambda_row(
                cat,
                &format!("{}+R2", row.base),
                bindings,
                format!("{}+R2 lambda", label),
                expected_rr,
                config,
            )?);
            let expected_r2 = if row.lambda_ge0_r2 == Some(true) {
                "NonNegativeSampled"
            } else {
                "IndefiniteWitness"
            };
            out.push(lambda_row(
                cat,
                &format!("{}+r2", row.base),
                bindings,
                format!("{}+r2 lambda", label),
                expected_r2,
                config,
            )?);
            Ok(out)
        })
        .collect();
    flatten_results(rows)
}

fn prop42_rows(
    cat: &Catalog,
    config: ReproduceConfig,
) -> Result<Vec<RowResult>, CatalogError> {
    let mut tasks: Vec<(SubcaseRow, BTreeMap<String, Rat>)> = Vec::new();
    for row in &cat.annotations.rows5 {
        for b in bindings_list(row)? {
            tasks.push((row.clone(), b));
        }
    }
    let rows: Vec<Result<Vec<RowResult>, CatalogError>> = tasks
        .par_iter()
        .map(|(row, bindings)| {
            let mut out = Vec::new();
            let label = format!("{}{}", row.id, binding_label(bindings));
            let g5 = cat.presentation(&row.base, bindings)?;
            let h = g5.cohomology_dims()?;
            // lambda vanishes identically iff the nilradical is R^4 and
            // h^3 of the summand is zero; algebras with catalog examples
            // must show a negative witness; everything else is reported
            // for the record against the sampling outcome.
            let expected = if row.nilradical.as_deref() == Some("R4") && h.0[2] == 0 {
                "IdenticallyZero"
            } else if pair_covering(cat, row, "R")?.is_some() {
                "IndefiniteWitness"
            } else {
                ""
            };
            if expected.is_empty() {
                let g = cat.presentation(&format!("{}+R", row.base), bindings)?;
                let report = lambda_sign_analysis(&g, config.samples, config.seed)?;
                out.push(RowResult::pass(
                    format!("{}+R lambda", label),
                    "recorded (no annotated expectation)",
                    lambda_expectation(&report.status).to_string(),
                ));
            } else {
                out.push(lambda_row(
                    cat,
                    &format!("{}+R", row.base),
                    bindings,
                    format!("{}+R lambda", label),
                    expected,
                    config,
                )?);
            }
            Ok(out)
        })
        .collect();
    flatten_results(rows)
}

fn flatten_results(
    rows: Vec<Result<Vec<RowResult>, CatalogError>>,
) -> Result<Vec<RowResult>, CatalogError> {
    let mut out = Vec::new();
    for r in rows {
        out.extend(r?);
    }
    Ok(out)
}
