//! Runs selected checks over a set of genera and assembles a deterministic report.

mod catalog;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub use catalog::{lookup, CheckInfo, CATALOG};

use crate::curve;
use crate::error::{Error, Result};
use crate::moduli;
use crate::realize;
use crate::report::{CheckMode, CheckOutcome, Verdict, Witness};
use crate::ring::{GenusContext, Mode, TruncationWindow};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub genera: Vec<u32>,
    /// Check ids in catalog order; empty selects every check.
    pub checks: Vec<String>,
    /// Overrides `[0, 10g+10]`.
    pub adic_window: Option<(i64, i64)>,
    /// Overrides `[−(10g+10), r²(g−1)+g]`.
    pub dim_window: Option<(i64, i64)>,
    #[serde(skip)]
    pub workers: Option<usize>,
}

impl RunConfig {
    pub fn new(genera: Vec<u32>) -> Self {
        RunConfig { genera, checks: Vec::new(), adic_window: None, dim_window: None, workers: None }
    }

    pub fn with_checks<S: Into<String>>(mut self, checks: impl IntoIterator<Item = S>) -> Self {
        self.checks = checks.into_iter().map(Into::into).collect();
        self
    }

    /// The selected checks in catalog order.
    pub fn selected(&self) -> Result<Vec<(usize, &'static CheckInfo)>> {
        if self.checks.is_empty() {
            return Ok(CATALOG.iter().enumerate().collect());
        }
        let mut out = Vec::new();
        for id in &self.checks {
            let entry = lookup(id).ok_or_else(|| Error::Config(format!("unknown check id {id:?}")))?;
            if !out.contains(&entry) {
                out.push(entry);
            }
        }
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    fn adic_ctx(&self, g: u32) -> Result<GenusContext> {
        let w = match self.adic_window {
            Some((lo, hi)) => TruncationWindow::new(lo, hi, Mode::Adic)?,
            None => TruncationWindow::default_adic(g),
        };
        GenusContext::new(g as i64, w)
    }

    fn dim_ctx(&self, g: u32, rank: u32) -> Result<GenusContext> {
        let w = match self.dim_window {
            Some((lo, hi)) => TruncationWindow::new(lo, hi, Mode::Dimensional)?,
            None => TruncationWindow::default_dimensional(g, rank),
        };
        GenusContext::new(g as i64, w)
    }

    pub fn validate(&self) -> Result<()> {
        if self.genera.is_empty() {
            return Err(Error::Config("no genus selected".into()));
        }
        if let Some(&g) = self.genera.iter().find(|&&g| g < 2) {
            return Err(Error::InvalidGenus(g as i64));
        }
        if self.workers == Some(0) {
            return Err(Error::Config("worker count must be positive".into()));
        }
        let selected = self.selected()?;
        for &g in &self.genera {
            let g1 = g as i64 - 1;
            let w = self.adic_ctx(g)?.window();
            let need = if selected.iter().any(|(_, c)| c.rank3_adic) { 8 * g1 } else { 3 * g1 };
            if w.e_min > 0 || w.e_max < need {
                return Err(Error::Config(format!(
                    "adic window [{}, {}] must cover [0, {need}] at g={g}",
                    w.e_min, w.e_max
                )));
            }
            if let Some((lo, hi)) = self.dim_window {
                TruncationWindow::new(lo, hi, Mode::Dimensional)?;
                if selected.iter().any(|(_, c)| c.dimensional) {
                    let need = if selected.iter().any(|(_, c)| c.rank3_dim) { 8 * g1 } else { 3 * g1 };
                    if lo > -need || hi < need {
                        return Err(Error::Config(format!(
                            "dimensional window [{lo}, {hi}] must cover [−{need}, {need}] at g={g}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: &'static str,
    pub genus: u32,
    pub variant: Option<String>,
    pub anchor: &'static str,
    pub mode: CheckMode,
    pub verdict: Verdict,
    pub window: Option<(i64, i64)>,
    pub witness: Option<Witness>,
    pub note: Option<String>,
    pub details: Value,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub config: RunConfig,
    pub summary: Summary,
    pub reports: Vec<CheckReport>,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }

    /// Canonical JSON; timing fields are dropped unless `timing` is set, so
    /// identical configurations give byte-identical output.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("report serialization is infallible");
        if !timing {
            for r in v["reports"].as_array_mut().expect("reports array") {
                r.as_object_mut().expect("report object").remove("wall_time_ms");
            }
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let verdict = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Flagged => "FLAG",
            };
            let mode = serde_json::to_value(r.mode).expect("mode");
            let variant = r.variant.as_deref().map(|v| format!(" [{v}]")).unwrap_or_default();
            let window = r.window.map(|(lo, hi)| format!(" window [{lo}, {hi}]")).unwrap_or_default();
            out.push_str(&format!(
                "{verdict} {}{variant} g={} {}{window} ({:.1} ms)\n",
                r.id,
                r.genus,
                mode.as_str().unwrap_or(""),
                r.wall_time_ms
            ));
            if let Some(note) = &r.note {
                out.push_str(&format!("     note: {note}\n"));
            }
            if let (Verdict::Fail, Some(w)) = (r.verdict, &r.witness) {
                out.push_str(&format!(
                    "     witness at {}: expected {} got {}\n",
                    w.location, w.expected, w.actual
                ));
            }
        }
        out.push_str(&format!(
            "{} pass, {} fail, {} flagged\n",
            self.summary.pass, self.summary.fail, self.summary.flagged
        ));
        out
    }
}

type Variants = Vec<(Option<String>, Result<CheckOutcome>)>;

fn one(r: Result<CheckOutcome>) -> Variants {
    vec![(None, r)]
}

fn variants<T: std::fmt::Display>(
    items: impl IntoIterator<Item = T>,
    mut f: impl FnMut(&T) -> Result<CheckOutcome>,
) -> Variants {
    items.into_iter().map(|x| (Some(x.to_string()), f(&x))).collect()
}

fn count_check(g: u32) -> Result<CheckOutcome> {
    let curve = realize::fixture_curve(g)?;
    let (data, brute) = realize::check_counts_against_curve(&curve, 6)?;
    let cross = realize::count_cross_check(&data, 6)?;
    let details = json!({
        "curve": { "p": curve.p, "f": curve.f },
        "brute": brute.details,
        "cross": cross.details,
    });
    Ok(CheckOutcome::combine(CheckMode::Exact, [brute, cross]).with_details(details))
}

fn dispatch(cfg: &RunConfig, id: &str, g: u32) -> Result<Variants> {
    let adic = cfg.adic_ctx(g)?;
    Ok(match id {
        "zeta-rationality" => one(curve::check_zeta_rationality(adic, 4 * g)),
        "functional-equation" => one(curve::check_functional_equation(adic)),
        "symmpro" => one((|| {
            let parts = (g..=3 * g)
                .map(|k| curve::check_symmetric_power_decomposition(adic, k as i64))
                .collect::<Result<Vec<_>>>()?;
            Ok(CheckOutcome::combine(CheckMode::Exact, parts).with_details(json!({ "k": [g, 3 * g] })))
        })()),
        "deczeta-chow" => variants(1..=3i64, |&i| curve::check_dec_zeta(adic, i)).relabel("i"),
        "deczeta-var" => {
            let ctx = cfg.dim_ctx(g, 3)?;
            variants(2..=3i64, |&i| curve::check_dec_zeta(ctx, i)).relabel("i")
        }
        "motiviczeta-closed-form" => variants(1..=3i64, |&i| curve::check_zeta_closed_form(adic, i)).relabel("i"),
        "rank2" => one(moduli::check_rank2(adic)),
        "rank3" => one(moduli::check_rank3(adic)),
        "rank3-x-identity" => one(moduli::x_identity_all(g)),
        "j-squared-cancellation" => one(moduli::check_j_squared_cancellation(adic)),
        "j-linear-term" => one(moduli::check_j_linear_term(adic)),
        "inversion-consistency" => {
            variants([2u32, 3], |&n| moduli::check_inversion_consistency(adic, n, 1))
                .into_iter()
                .map(|(v, r)| (v.map(|n| format!("n={n},d=1")), r))
                .collect()
        }
        "behrend-dhillon" => {
            let mut out = Vec::new();
            for r in [2u32, 3] {
                let ctx = cfg.dim_ctx(g, r)?;
                out.push((Some(format!("r={r}")), moduli::check_behrend_dhillon(ctx, r)));
            }
            out
        }
        "var-rank2" => {
            let ctx = cfg.dim_ctx(g, 2)?;
            vec![
                (Some("main".into()), moduli::var_rank2_check(ctx)),
                (Some("l3-prefactor".into()), moduli::lefschetz_cube_probe(ctx)),
            ]
        }
        "var-rank3" => one(moduli::var_rank3_check(cfg.dim_ctx(g, 3)?)),
        "unstable-rank2-hn-sum" => one(moduli::check_unstable_rank2_hn_sum(cfg.dim_ctx(g, 2)?)),
        "realize-poincare-rank2" => one(realize::check_poincare_rank2(g)),
        "realize-hodge-consistency" => one(realize::check_hodge_consistency(g)),
        "count-cross-check" => one(count_check(g)),
        other => return Err(Error::Config(format!("unknown check id {other:?}"))),
    })
}

trait Relabel {
    fn relabel(self, key: &str) -> Self;
}

impl Relabel for Variants {
    fn relabel(self, key: &str) -> Self {
        self.into_iter().map(|(v, r)| (v.map(|x| format!("{key}={x}")), r)).collect()
    }
}

fn error_outcome(e: &Error) -> CheckOutcome {
    CheckOutcome::fail(CheckMode::Exact, Witness::scalar("error", e, "no error"))
}

fn run_one(cfg: &RunConfig, idx: usize, info: &'static CheckInfo, g: u32) -> Result<Vec<(usize, CheckReport)>> {
    let start = Instant::now();
    let results = dispatch(cfg, info.id, g)?;
    let ms = start.elapsed().as_secs_f64() * 1000.0 / results.len().max(1) as f64;
    let mut out = Vec::new();
    for (variant, res) in results {
        let outcome = match res {
            Ok(o) => o,
            // a window that cannot decide the identity is a configuration problem
            Err(e @ Error::Config(_)) => return Err(e),
            Err(e) => error_outcome(&e),
        };
        out.push((
            idx,
            CheckReport {
                id: info.id,
                genus: g,
                variant,
                anchor: info.anchor,
                mode: outcome.mode,
                verdict: outcome.verdict,
                window: outcome.window,
                witness: outcome.witness,
                note: outcome.note,
                details: outcome.details,
                wall_time_ms: ms,
            },
        ));
    }
    Ok(out)
}

/// Validates `cfg`, runs every selected check for every genus on a worker
/// pool, and returns the reports in (catalog, genus, variant) order.
pub fn run(cfg: &RunConfig) -> Result<RunReport> {
    cfg.validate()?;
    let selected = cfg.selected()?;
    let mut genera = cfg.genera.clone();
    genera.sort_unstable();
    genera.dedup();
    let tasks: Vec<(usize, &'static CheckInfo, u32)> = selected
        .iter()
        .flat_map(|&(i, c)| genera.iter().map(move |&g| (i, c, g)))
        .collect();

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.workers {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    let results: Vec<Result<Vec<(usize, CheckReport)>>> =
        pool.install(|| tasks.par_iter().map(|&(i, c, g)| run_one(cfg, i, c, g)).collect());

    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    // par_iter preserves task order; the sort only documents the contract
    reports.sort_by_key(|(i, r)| (*i, r.genus));
    let reports: Vec<CheckReport> = reports.into_iter().map(|(_, r)| r).collect();
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let summary = Summary {
        pass: count(Verdict::Pass),
        fail: count(Verdict::Fail),
        flagged: count(Verdict::Flagged),
    };
    let mut config = cfg.clone();
    config.genera = genera;
    config.checks = selected.iter().map(|(_, c)| c.id.to_string()).collect();
    Ok(RunReport { schema: SCHEMA, config, summary, reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank2_single_genus() {
        let r = run(&RunConfig::new(vec![2]).with_checks(["rank2"])).unwrap();
        assert_eq!(r.reports.len(), 1);
        assert_eq!(r.reports[0].verdict, Verdict::Pass);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn inversion_is_flagged() {
        let r = run(&RunConfig::new(vec![2]).with_checks(["inversion-consistency"])).unwrap();
        assert_eq!(r.reports.len(), 2);
        for rep in &r.reports {
            assert_eq!(rep.verdict, Verdict::Flagged);
            assert!(rep.note.as_deref().unwrap().starts_with("inversion-fixed-vs-varying-determinant"));
        }
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn invalid_configs() {
        assert!(run(&RunConfig::new(vec![1])).is_err());
        assert!(run(&RunConfig::new(vec![])).is_err());
        assert!(run(&RunConfig::new(vec![2]).with_checks(["nope"])).is_err());
        let mut c = RunConfig::new(vec![3]).with_checks(["rank3"]);
        c.adic_window = Some((0, 10));
        assert!(matches!(run(&c), Err(Error::Config(_))));
        c.checks = vec!["rank2".into()];
        assert!(run(&c).is_ok());
    }

    #[test]
    fn deterministic_json() {
        let cfg = RunConfig::new(vec![3, 2]).with_checks(["deczeta-chow", "functional-equation"]);
        let a = run(&cfg).unwrap().to_json(false);
        let b = run(&RunConfig { workers: Some(1), ..cfg }).unwrap().to_json(false);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let ids: Vec<_> = a["reports"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap().to_string()).collect();
        assert_eq!(ids[0], "functional-equation");
        assert_eq!(a["reports"][2]["variant"], "i=1");
    }
}
