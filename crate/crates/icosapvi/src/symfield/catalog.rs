//! The bundled catalog of explicit solutions and its batch verifier.
//!
//! The catalog ships as JSON (`data/catalog.json`, embedded at compile time):
//! for each entry the parameter tuples θ, the pair (y, t) as coefficient
//! lists over ℚ, optionally the curve modulus f, optionally a bivariate
//! implicit model F(y, t), and optionally a designated base point s₀ for the
//! leading-coefficient check. Four entries are one-parameter families and
//! carry, besides their tabulated tuples, an extra sample tuple on the same
//! parameter line. Some entries share their (t, u, s) data with a donor
//! entry literally — the loader resolves those frames in a second pass and
//! the verifier re-checks the sharing.
//!
//! [`verify_entry`] accepts an entry only if the PVI residual vanishes
//! identically at every tuple, the implicit model (when present) vanishes
//! identically, and the leading coefficient at the designated branch (when
//! present) is exactly the expected rational.

use std::collections::HashMap;
use std::sync::LazyLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Deserialize;

use super::curve::CurveFieldElem;
use super::poly::Poly;
use super::pvi::{check_implicit, leading_coeff, pvi_residual, BiPoly, PviParams};
use super::ratfunc::RatFunc;
use super::SymError;
use crate::exact::{format_rational, parse_rational, Rational};

/// One explicit solution: parameterization, parameters, and side checks.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Short identifier (e.g. "sol38", "thmC").
    pub id: String,
    /// Human-readable description, including the matching classification row.
    pub anchor: String,
    /// Tabulated parameter tuples (θ₁, θ₂, θ₃, θ₄) this entry solves.
    pub thetas: Vec<[Rational; 4]>,
    /// Extra sample tuples on the family's parameter line (families only).
    pub extra_thetas: Vec<[Rational; 4]>,
    /// The solution y(s) as a field element.
    pub y: CurveFieldElem,
    /// The independent variable t(s) as a field element.
    pub t: CurveFieldElem,
    /// Curve modulus f with u² = f, when the chart is quadratic.
    pub modulus: Option<Poly>,
    /// Implicit bivariate model F(y, t) ≡ 0, when the source states one.
    pub implicit: Option<BiPoly>,
    /// Designated branch for the leading-coefficient check, when stated.
    pub leading: Option<LeadingBranch>,
    /// Donor entry this one shares its (t, u, s) data with, when any.
    pub frame: Option<String>,
}

/// A branch point s₀ through (y, t) = (0, 0) with its expected lim y/t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingBranch {
    /// Base point on the s-line.
    pub s0: Rational,
    /// Expected exact limit of y/t.
    pub expect: Rational,
    /// Embedding sign: −1 verifies the branch u ↦ −√f instead.
    pub u_sign: i8,
}

/// Outcome of verifying a single catalog entry.
#[derive(Clone, Debug)]
pub struct EntryReport {
    /// Entry identifier.
    pub id: String,
    /// Rendered tuples whose residual vanished (tabulated, then family).
    pub thetas: Vec<String>,
    /// Whether an implicit model was present and vanished identically.
    pub implicit_checked: bool,
    /// The verified leading coefficient, when a branch was designated.
    pub leading: Option<Rational>,
    /// Donor id when this entry's (t, u, s) frame was re-checked as shared.
    pub shares_frame_with: Option<String>,
    /// Wall-clock verification time.
    pub millis: u128,
}

impl EntryReport {
    /// One-line rendering: id, θ list, pass, timing.
    pub fn line(&self) -> String {
        let mut extras = String::new();
        if self.implicit_checked {
            extras.push_str(", implicit model ok");
        }
        if let Some(c) = &self.leading {
            extras.push_str(&format!(", leading coeff {}", format_rational(c)));
        }
        if let Some(donor) = &self.shares_frame_with {
            extras.push_str(&format!(", shares (t,u,s) with {donor}"));
        }
        format!(
            "{}: pass ({} ms) theta {}{}",
            self.id,
            self.millis,
            self.thetas.join(" "),
            extras
        )
    }
}

/// Outcome of verifying the whole catalog.
#[derive(Debug)]
pub struct CatalogReport {
    /// Per-entry outcomes, in catalog order.
    pub rows: Vec<(String, Result<EntryReport, SymError>)>,
    /// Total wall-clock time.
    pub millis: u128,
}

impl CatalogReport {
    /// True when every entry verified.
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|(_, r)| r.is_ok())
    }

    /// Multi-line rendering with a summary line at the end.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (id, row) in &self.rows {
            match row {
                Ok(report) => out.push_str(&report.line()),
                Err(e) => out.push_str(&format!("{id}: FAIL ({e})")),
            }
            out.push('\n');
        }
        let passed = self.rows.iter().filter(|(_, r)| r.is_ok()).count();
        out.push_str(&format!(
            "verified {passed}/{} entries in {} ms\n",
            self.rows.len(),
            self.millis
        ));
        out
    }
}

/// The embedded catalog, in file order.
pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

/// Look up an entry by id. "thmB" is accepted as an alias for "sol33"
/// (the same solution carries both names in the sources).
pub fn catalog_entry(id: &str) -> Option<&'static CatalogEntry> {
    let id = if id == "thmB" { "sol33" } else { id };
    CATALOG.iter().find(|e| e.id == id)
}

/// Verify one entry: exact residual at every tuple, implicit model, leading
/// coefficient, and frame sharing. Errors carry the failing detail.
pub fn verify_entry(id: &str) -> Result<EntryReport, SymError> {
    let entry = catalog_entry(id).ok_or_else(|| SymError::UnknownEntry(id.to_string()))?;
    let start = Instant::now();
    let mut rendered = Vec::new();
    for theta in entry.thetas.iter().chain(entry.extra_thetas.iter()) {
        let params = PviParams::new(theta.clone());
        let residual = pvi_residual(&entry.y, &entry.t, &params)?;
        if !residual.is_zero() {
            return Err(SymError::VerificationFailed {
                id: entry.id.clone(),
                theta: params.theta_string(),
                residual: residual.to_string(),
            });
        }
        rendered.push(compact_theta(theta));
    }
    let mut implicit_checked = false;
    if let Some(rel) = &entry.implicit {
        if !check_implicit(rel, &entry.y, &entry.t)? {
            return Err(SymError::VerificationFailed {
                id: entry.id.clone(),
                theta: "-".to_string(),
                residual: format!("implicit model F(y,t) = {}", rel.eval(&entry.y, &entry.t)?),
            });
        }
        implicit_checked = true;
    }
    let mut leading_value = None;
    if let Some(branch) = &entry.leading {
        let (y, t) = if branch.u_sign < 0 {
            (entry.y.conj(), entry.t.conj())
        } else {
            (entry.y.clone(), entry.t.clone())
        };
        let c = leading_coeff(&y, &t, &branch.s0)?;
        if c != branch.expect {
            return Err(SymError::VerificationFailed {
                id: entry.id.clone(),
                theta: "-".to_string(),
                residual: format!(
                    "leading coefficient {} at s0 = {}, expected {}",
                    format_rational(&c),
                    format_rational(&branch.s0),
                    format_rational(&branch.expect)
                ),
            });
        }
        leading_value = Some(c);
    }
    let mut shares_frame_with = None;
    if let Some(donor_id) = &entry.frame {
        let donor = catalog_entry(donor_id)
            .ok_or_else(|| SymError::Data(format!("frame donor `{donor_id}` missing")))?;
        if entry.t != donor.t || entry.modulus != donor.modulus {
            return Err(SymError::VerificationFailed {
                id: entry.id.clone(),
                theta: "-".to_string(),
                residual: format!("(t, u, s) frame differs from donor `{donor_id}`"),
            });
        }
        shares_frame_with = Some(donor_id.clone());
    }
    Ok(EntryReport {
        id: entry.id.clone(),
        thetas: rendered,
        implicit_checked,
        leading: leading_value,
        shares_frame_with,
        millis: start.elapsed().as_millis(),
    })
}

/// Verify every catalog entry (in parallel), reporting per-entry outcomes in
/// catalog order.
pub fn verify_all() -> CatalogReport {
    let start = Instant::now();
    let rows = CATALOG
        .par_iter()
        .map(|e| (e.id.clone(), verify_entry(&e.id)))
        .collect();
    CatalogReport { rows, millis: start.elapsed().as_millis() }
}

fn compact_theta(theta: &[Rational; 4]) -> String {
    let one = |q: &Rational| {
        if num_traits::One::is_one(q.denom()) {
            q.numer().to_string()
        } else {
            format_rational(q)
        }
    };
    format!(
        "({},{},{},{})",
        one(&theta[0]),
        one(&theta[1]),
        one(&theta[2]),
        one(&theta[3]),
    )
}

// ---------------------------------------------------------------------------
// JSON loading.
// ---------------------------------------------------------------------------

static CATALOG_JSON: &str = include_str!("../../data/catalog.json");

static CATALOG: LazyLock<Vec<CatalogEntry>> =
    LazyLock::new(|| load_catalog(CATALOG_JSON).expect("bundled catalog is valid"));

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    #[allow(dead_code)]
    comment: String,
    entries: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    id: String,
    anchor: String,
    thetas: Vec<[String; 4]>,
    #[serde(default)]
    extra_thetas: Vec<[String; 4]>,
    #[serde(default)]
    frame: Option<String>,
    #[serde(default)]
    modulus: Option<Vec<String>>,
    #[serde(default)]
    t: Option<RawElem>,
    y: RawElem,
    #[serde(default)]
    implicit: Option<Vec<(u32, u32, String)>>,
    #[serde(default)]
    leading: Option<RawLeading>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawElem {
    a: RawRatFunc,
    #[serde(default)]
    b: Option<RawRatFunc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRatFunc {
    num: Vec<String>,
    den: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLeading {
    s0: String,
    expect: String,
    u_sign: i8,
}

fn parse_poly(coeffs: &[String]) -> Result<Poly, SymError> {
    let parsed: Result<Vec<Rational>, _> = coeffs.iter().map(|c| parse_rational(c)).collect();
    Ok(Poly::new(parsed?))
}

fn parse_ratfunc(raw: &RawRatFunc) -> Result<RatFunc, SymError> {
    RatFunc::new(parse_poly(&raw.num)?, parse_poly(&raw.den)?)
}

fn parse_theta(raw: &[String; 4]) -> Result<[Rational; 4], SymError> {
    Ok([
        parse_rational(&raw[0])?,
        parse_rational(&raw[1])?,
        parse_rational(&raw[2])?,
        parse_rational(&raw[3])?,
    ])
}

fn parse_elem(raw: &RawElem, modulus: Option<&Poly>) -> Result<CurveFieldElem, SymError> {
    let a = parse_ratfunc(&raw.a)?;
    match &raw.b {
        None => Ok(CurveFieldElem::rational(a)),
        Some(b) => {
            let f = modulus.ok_or_else(|| {
                SymError::Data("element has a u-part but the entry has no modulus".into())
            })?;
            CurveFieldElem::from_parts(a, parse_ratfunc(b)?, f.clone())
        }
    }
}

fn load_catalog(json: &str) -> Result<Vec<CatalogEntry>, SymError> {
    let raw: RawCatalog =
        serde_json::from_str(json).map_err(|e| SymError::Data(format!("bad JSON: {e}")))?;

    // First pass: parse every entry that owns its chart data.
    struct Frame {
        modulus: Option<Poly>,
        t: CurveFieldElem,
    }
    let mut frames: HashMap<String, Frame> = HashMap::new();
    for e in &raw.entries {
        if e.frame.is_some() {
            if e.t.is_some() || e.modulus.is_some() {
                return Err(SymError::Data(format!(
                    "entry `{}` both declares a frame donor and owns chart data",
                    e.id
                )));
            }
            continue;
        }
        let modulus = e.modulus.as_deref().map(parse_poly).transpose()?;
        let t = e
            .t
            .as_ref()
            .ok_or_else(|| SymError::Data(format!("entry `{}` lacks t", e.id)))?;
        let t = parse_elem(t, modulus.as_ref())?;
        frames.insert(e.id.clone(), Frame { modulus, t });
    }

    // Second pass: build all entries, borrowing donor frames where declared
    // (a donor can appear later in the file than its dependents).
    let mut out = Vec::with_capacity(raw.entries.len());
    for e in &raw.entries {
        let (modulus, t) = match &e.frame {
            None => {
                let f = &frames[&e.id];
                (f.modulus.clone(), f.t.clone())
            }
            Some(donor) => {
                let f = frames.get(donor).ok_or_else(|| {
                    SymError::Data(format!(
                        "entry `{}` names unknown frame donor `{donor}`",
                        e.id
                    ))
                })?;
                (f.modulus.clone(), f.t.clone())
            }
        };
        let y = parse_elem(&e.y, modulus.as_ref())?;
        let thetas = e.thetas.iter().map(parse_theta).collect::<Result<Vec<_>, _>>()?;
        let extra_thetas =
            e.extra_thetas.iter().map(parse_theta).collect::<Result<Vec<_>, _>>()?;
        let implicit = e
            .implicit
            .as_ref()
            .map(|terms| {
                let parsed: Result<Vec<_>, SymError> = terms
                    .iter()
                    .map(|(i, j, c)| Ok((*i, *j, parse_rational(c)?)))
                    .collect();
                Ok::<_, SymError>(BiPoly::new(parsed?))
            })
            .transpose()?;
        let leading = e
            .leading
            .as_ref()
            .map(|l| {
                if l.u_sign != 1 && l.u_sign != -1 {
                    return Err(SymError::Data(format!(
                        "entry `{}` has u_sign {} (must be ±1)",
                        e.id, l.u_sign
                    )));
                }
                Ok(LeadingBranch {
                    s0: parse_rational(&l.s0)?,
                    expect: parse_rational(&l.expect)?,
                    u_sign: l.u_sign,
                })
            })
            .transpose()?;
        out.push(CatalogEntry {
            id: e.id.clone(),
            anchor: e.anchor.clone(),
            thetas,
            extra_thetas,
            y,
            t,
            modulus,
            implicit,
            leading,
            frame: e.frame.clone(),
        });
    }
    Ok(out)
}
