//! Machine-readable catalog of four- and five-dimensional Lie algebras with
//! their known half-flat data: dual presentations as data files, per-subcase
//! annotations (cohomology, center, unimodularity, existence and
//! lambda-sign flags), explicit example pairs with expected metrics, and
//! reproduction drivers that re-derive every annotation from scratch.
//!
//! Directory layout: `algebras/*.alg` (presentations), `annotations.json`,
//! `examples/*.pair` (omega and rho in form syntax plus the expected Gram
//! matrix).

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exterior::KForm;
use crate::halfflat::{verify_half_flat, HalfFlatError, VerificationReport};
use crate::lie::{parse_presentation, Presentation, PresentationParseError};
use crate::linalg::Mat;
use crate::scalar::{parse_scalar_expr, Rat};
use crate::stable::metric_gram;

mod reproduce;
pub use reproduce::{
    reproduce, ReproduceConfig, ReproduceReport, ReproduceScope, RowResult, RowStatus,
};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("parameter value excluded for `{algebra}`: {reason}")]
    ExcludedParameter { algebra: String, reason: String },
    #[error("override for parameter `{0}` matches no summand")]
    UnknownParameter(String),
    #[error("catalog i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("bad annotations file: {0}")]
    BadAnnotations(String),
    #[error("bad pair file {file}: {msg}")]
    BadPair { file: String, msg: String },
    #[error("presentation `{name}`: {source}")]
    BadPresentation {
        name: String,
        source: PresentationParseError,
    },
    #[error(transparent)]
    Lie(#[from] crate::lie::LieError),
    #[error(transparent)]
    HalfFlat(#[from] HalfFlatError),
}

/// One parameter-subcase of a catalog algebra, with everything the
/// reproduction drivers check against.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubcaseRow {
    pub id: String,
    pub base: String,
    pub subcase: String,
    /// Conditions like `alpha != -2`, evaluated on exact rationals; a
    /// parameter binding belongs to this row iff all conditions hold.
    #[serde(default)]
    pub conditions: Vec<String>,
    /// Sample bindings used by batch drivers (at least two per subcase with
    /// free parameters).
    pub samples: Vec<BTreeMap<String, String>>,
    /// Expected cohomology dimensions of the summand itself.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unimodular: Option<bool>,
    /// Annotated center differs from the computed one; reported, not failed.
    #[serde(default)]
    pub center_discrepancy: bool,
    /// Non-existence is established by the refined null-vector chain over
    /// Q(sqrt(2)) instead of the plain one-form certificate.
    #[serde(default)]
    pub refined_obstruction: bool,
    /// Nilradical label (annotation only, never computed).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilradical: Option<String>,
    /// Four-dimensional rows: does `g + r2` admit a half-flat structure?
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hf_r2: Option<bool>,
    /// Five-dimensional rows: does `g + R` admit a half-flat structure?
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hf_r: Option<bool>,
    /// lambda >= 0 for all closed three-forms on `g + r2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_ge0_r2: Option<bool>,
    /// lambda >= 0 for all closed three-forms on `g + R2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_ge0_rr: Option<bool>,
    /// lambda = 0 for all closed three-forms on `g + R2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_eq0_rr: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Reference to an example pair file, valid for the listed bindings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairRef {
    pub file: String,
    /// Composed algebra name, e.g. `A4.1+r2`.
    pub algebra: String,
    /// Parameter bindings under which the pair is half-flat; one empty map
    /// means "no parameters".
    #[serde(default)]
    pub params: Vec<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Annotations {
    pub rows4: Vec<SubcaseRow>,
    pub rows5: Vec<SubcaseRow>,
    pub pairs: Vec<PairRef>,
}

/// A parsed example pair with its expected Gram matrix.
#[derive(Debug, Clone)]
pub struct ExamplePair {
    pub file: String,
    pub algebra: String,
    pub rootd: u32,
    pub omega: KForm,
    pub rho: KForm,
    pub gram: Mat,
}

/// An instantiated catalog entry: the presentation at concrete parameter
/// values plus the matching subcase annotations.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub presentation: Presentation,
    pub row: Option<SubcaseRow>,
}

pub struct Catalog {
    pub dir: PathBuf,
    sources: BTreeMap<String, String>,
    pub annotations: Annotations,
}

impl Catalog {
    /// Load a catalog from its directory.
    pub fn load(dir: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
        let dir = dir.as_ref().to_path_buf();
        let alg_dir = dir.join("algebras");
        let mut sources = BTreeMap::new();
        let entries = fs::read_dir(&alg_dir).map_err(|e| CatalogError::Io {
            path: alg_dir.clone(),
            source: e,
        })?;
        for entry in entries {
            let entry = entry.map_err(|e| CatalogError::Io {
                path: alg_dir.clone(),
                source: e,
            })?;
            let path = entry.path();
            if path.extension().and_then(|s| s.to_str()) != Some("alg") {
                continue;
            }
            let name = path.file_stem().unwrap().to_string_lossy().to_string();
            let text = fs::read_to_string(&path).map_err(|e| CatalogError::Io {
                path: path.clone(),
                source: e,
            })?;
            sources.insert(name, text);
        }
        let ann_path = dir.join("annotations.json");
        let ann_text = fs::read_to_string(&ann_path).map_err(|e| CatalogError::Io {
            path: ann_path,
            source: e,
        })?;
        let annotations: Annotations = serde_json::from_str(&ann_text)
            .map_err(|e| CatalogError::BadAnnotations(e.to_string()))?;
        Ok(Catalog {
            dir,
            sources,
            annotations,
        })
    }

    /// Default catalog location: `$SF_CATALOG_DIR`, else `./catalog`.
    pub fn default_dir() -> PathBuf {
        if let Ok(p) = std::env::var("SF_CATALOG_DIR") {
            return PathBuf::from(p);
        }
        PathBuf::from("catalog")
    }

    pub fn algebra_names(&self) -> impl Iterator<Item = &String> {
        self.sources.keys()
    }

    fn declared_params(source: &str) -> Vec<String> {
        source
            .lines()
            .filter_map(|l| {
                let rest = l.trim().strip_prefix("param ")?;
                Some(rest.split('=').next()?.trim().to_string())
            })
            .collect()
    }

    /// Resolve a composed name like `A4.1+r2` or `A5.19+R` into a
    /// presentation, applying parameter overrides to the summands that
    /// declare them.
    pub fn presentation(
        &self,
        name: &str,
        overrides: &BTreeMap<String, Rat>,
    ) -> Result<Presentation, CatalogError> {
        let parts: Vec<&str> = name.split('+').map(|s| s.trim()).collect();
        let mut used: BTreeMap<&String, bool> =
            overrides.keys().map(|k| (k, false)).collect();
        let mut acc: Option<Presentation> = None;
        for part in parts {
            let source = self
                .sources
                .get(part)
                .ok_or_else(|| CatalogError::UnknownAlgebra(part.to_string()))?;
            let declared = Self::declared_params(source);
            let mut local = BTreeMap::new();
            for (k, v) in overrides {
                if declared.contains(k) {
                    local.insert(k.clone(), v.clone());
                    used.insert(k, true);
                }
            }
            let p = parse_presentation(source, &local).map_err(|e| {
                CatalogError::BadPresentation {
                    name: part.to_string(),
                    source: e,
                }
            })?;
            acc = Some(match acc {
                None => p,
                Some(prev) => prev.direct_sum(&p)?,
            });
        }
        for (k, was_used) in used {
            if !was_used {
                return Err(CatalogError::UnknownParameter(k.clone()));
            }
        }
        let mut p = acc.ok_or_else(|| CatalogError::UnknownAlgebra(name.to_string()))?;
        p.name = name.to_string();
        Ok(p)
    }

    /// Rows describing one base algebra.
    pub fn rows_for(&self, base: &str) -> Vec<&SubcaseRow> {
        self.annotations
            .rows4
            .iter()
            .chain(self.annotations.rows5.iter())
            .filter(|r| r.base == base)
            .collect()
    }

    /// Find the subcase row matching the given bindings, by evaluating each
    /// row's conditions exactly.
    pub fn matching_row(
        &self,
        base: &str,
        params: &BTreeMap<String, Rat>,
    ) -> Result<Option<&SubcaseRow>, CatalogError> {
        for row in self.rows_for(base) {
            let mut all_hold = true;
            for cond in &row.conditions {
                if !eval_condition(cond, params).map_err(|msg| {
                    CatalogError::BadAnnotations(format!(
                        "row {}: bad condition `{}`: {}",
                        row.id, cond, msg
                    ))
                })? {
                    all_hold = false;
                    break;
                }
            }
            if all_hold {
                return Ok(Some(row));
            }
        }
        Ok(None)
    }

    /// Instantiate a catalog algebra at concrete parameter values. The
    /// bindings must land in one of the algebra's subcases; values excluded
    /// by every subcase are rejected.
    pub fn instantiate(
        &self,
        name: &str,
        overrides: &BTreeMap<String, Rat>,
    ) -> Result<CatalogEntry, CatalogError> {
        let presentation = self.presentation(name, overrides)?;
        if !presentation.jacobi_check()? {
            return Err(CatalogError::BadPresentation {
                name: name.to_string(),
                source: PresentationParseError::JacobiFailure,
            });
        }
        let base = name.split('+').next().unwrap_or(name);
        let row = if !self.rows_for(base).is_empty() {
            match self.matching_row(base, &presentation.params)? {
                Some(r) => Some(r.clone()),
                None => {
                    let bindings: Vec<String> = presentation
                        .params
                        .iter()
                        .map(|(k, v)| format!("{}={}", k, v))
                        .collect();
                    return Err(CatalogError::ExcludedParameter {
                        algebra: name.to_string(),
                        reason: format!(
                            "bindings [{}] match no subcase of {}",
                            bindings.join(", "),
                            base
                        ),
                    });
                }
            }
        } else {
            None
        };
        Ok(CatalogEntry { presentation, row })
    }

    pub fn pair_path(&self, file: &str) -> PathBuf {
        self.dir.join("examples").join(file)
    }

    /// Parse an example `.pair` file.
    pub fn load_pair(&self, file: &str) -> Result<ExamplePair, CatalogError> {
        let path = self.pair_path(file);
        let text = fs::read_to_string(&path).map_err(|e| CatalogError::Io {
            path,
            source: e,
        })?;
        parse_pair(file, &text)
    }
}

pub fn parse_pair(file: &str, text: &str) -> Result<ExamplePair, CatalogError> {
    let bad = |msg: String| CatalogError::BadPair {
        file: file.to_string(),
        msg,
    };
    let mut algebra = None;
    let mut rootd = 0u32;
    let mut omega = None;
    let mut rho = None;
    let mut gram = Mat::zero(6, 6);
    let empty = BTreeMap::new();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("algebra ") {
            algebra = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("rootd ") {
            rootd = rest
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad rootd `{}`", rest)))?;
        } else if let Some(rest) = line.strip_prefix("omega") {
            let expr = rest
                .trim()
                .strip_prefix('=')
                .ok_or_else(|| bad("expected `omega = ...`".into()))?;
            omega = Some(
                crate::exterior::parse_form(expr.trim(), 6, 2, rootd, &empty)
                    .map_err(|e| bad(e.to_string()))?,
            );
        } else if let Some(rest) = line.strip_prefix("rho") {
            let expr = rest
                .trim()
                .strip_prefix('=')
                .ok_or_else(|| bad("expected `rho = ...`".into()))?;
            rho = Some(
                crate::exterior::parse_form(expr.trim(), 6, 3, rootd, &empty)
                    .map_err(|e| bad(e.to_string()))?,
            );
        } else if let Some(rest) = line.strip_prefix("g ") {
            let (indices, expr) = rest
                .split_once('=')
                .ok_or_else(|| bad("expected `g <i> <j> = <scalar>`".into()))?;
            let idx: Vec<usize> = indices
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad(format!("bad gram indices `{}`", indices)))?;
            if idx.len() != 2 || idx.iter().any(|&i| i < 1 || i > 6) {
                return Err(bad(format!("bad gram indices `{}`", indices)));
            }
            let value = parse_scalar_expr(expr.trim(), rootd, &empty)
                .map_err(|e| bad(e.to_string()))?;
            gram.a[idx[0] - 1][idx[1] - 1] = value.clone();
            gram.a[idx[1] - 1][idx[0] - 1] = value;
        } else {
            return Err(bad(format!("cannot parse line `{}`", line)));
        }
    }
    Ok(ExamplePair {
        file: file.to_string(),
        algebra: algebra.ok_or_else(|| bad("missing `algebra` line".into()))?,
        rootd,
        omega: omega.ok_or_else(|| bad("missing `omega` line".into()))?,
        rho: rho.ok_or_else(|| bad("missing `rho` line".into()))?,
        gram,
    })
}

/// Evaluate a condition of the form `<expr> <rel> <expr>` with
/// `rel in {==, !=, <, <=, >, >=}` on exact rationals.
pub fn eval_condition(cond: &str, params: &BTreeMap<String, Rat>) -> Result<bool, String> {
    for rel in ["==", "!=", "<=", ">=", "<", ">"] {
        if let Some(pos) = cond.find(rel) {
            let lhs = &cond[..pos];
            let rhs = &cond[pos + rel.len()..];
            let l = parse_scalar_expr(lhs.trim(), 0, params).map_err(|e| e.to_string())?;
            let r = parse_scalar_expr(rhs.trim(), 0, params).map_err(|e| e.to_string())?;
            let diff = l.sub(&r).map_err(|e| e.to_string())?;
            let sign = diff.sign().map_err(|e| e.to_string())?;
            return Ok(match rel {
                "==" => sign == 0,
                "!=" => sign != 0,
                "<" => sign < 0,
                "<=" => sign <= 0,
                ">" => sign > 0,
                ">=" => sign >= 0,
                _ => unreachable!(),
            });
        }
    }
    Err("no relation found".into())
}

/// Parse `name=p/q` pairs from CLI-style parameter bindings.
pub fn parse_bindings(specs: &[String]) -> Result<BTreeMap<String, Rat>, String> {
    let mut out = BTreeMap::new();
    let empty = BTreeMap::new();
    for spec in specs {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| format!("expected name=value, got `{}`", spec))?;
        let v = parse_scalar_expr(value.trim(), 0, &empty).map_err(|e| e.to_string())?;
        let v = v
            .as_rational()
            .ok_or_else(|| format!("parameter `{}` must be rational", name))?
            .clone();
        out.insert(name.trim().to_string(), v);
    }
    Ok(out)
}

/// Bindings from annotation sample maps (`{"alpha": "-1/2"}`).
pub fn sample_bindings(
    sample: &BTreeMap<String, String>,
) -> Result<BTreeMap<String, Rat>, String> {
    let specs: Vec<String> = sample
        .iter()
        .map(|(k, v)| format!("{}={}", k, v))
        .collect();
    parse_bindings(&specs)
}

#[derive(Debug, Clone, Serialize)]
pub struct PairVerification {
    pub report: VerificationReport,
    pub gram_matches: bool,
    pub verdict: bool,
}

/// Full check of an example pair: half-flat verification plus exact
/// coefficient-by-coefficient comparison with the expected Gram matrix.
pub fn verify_pair_against(
    g: &Presentation,
    pair: &ExamplePair,
) -> Result<PairVerification, HalfFlatError> {
    let report = verify_half_flat(g, &pair.omega, &pair.rho)?;
    let gram_matches = if report.verdict {
        let gm = metric_gram(&pair.omega, &pair.rho)?;
        let mut ok = true;
        'outer: for i in 0..6 {
            for j in 0..6 {
                if gm.a[i][j] != pair.gram.a[i][j] {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok
    } else {
        false
    };
    let verdict = report.verdict && gram_matches;
    Ok(PairVerification {
        report,
        gram_matches,
        verdict,
    })
}
