//! Desk-scale exhaustive verification of the packing theorem and the
//! clutter conjectures over generated instances, with replayable reports.

use crate::clutter::{self, Clutter, MinorOutcome};
use crate::enumerate::{canonical_grafts_upto, TMode};
use crate::error::{Error, Result};
use crate::graft::SignedGraft;
use crate::json::InstanceJson;
use crate::obstruction::{self, Scan, SearchBudget};
use crate::solve;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub max_m: usize,
    pub t_empty: bool,
    pub t_pair: bool,
    #[serde(default)]
    pub jobs: Option<usize>,
    #[serde(default)]
    pub log_instances: bool,
}

impl VerifyConfig {
    pub fn theorem_default() -> VerifyConfig {
        VerifyConfig {
            max_n: 4,
            max_m: 7,
            t_empty: true,
            t_pair: true,
            jobs: None,
            log_instances: false,
        }
    }

    fn modes(&self) -> Vec<TMode> {
        let mut v = Vec::new();
        if self.t_empty {
            v.push(TMode::Empty);
        }
        if self.t_pair {
            v.push(TMode::Pair);
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRow {
    pub instance: InstanceJson,
    pub eulerian: bool,
    /// "none", "k5tilde", "f7" or "inconclusive".
    pub scan: String,
    /// None encodes the no-join sentinel.
    pub tau: Option<usize>,
    pub nu: usize,
    pub packs: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub generated: usize,
    pub eulerian: usize,
    pub obstruction_free: usize,
    pub packed: usize,
    pub skipped_budget: usize,
    /// Instances with no odd T-join at all; the theorem is vacuous there
    /// and they are exempt from the packing check.
    pub no_join: usize,
    /// Eulerian, obstruction-free, |T| ≤ 2 instances with an odd T-join
    /// that fail to pack. Any entry falsifies the implementation, not the
    /// theorem.
    pub counterexamples: Vec<InstanceRow>,
    /// Non-Eulerian instances that do not pack yet carry no obstruction
    /// (the reason the Eulerian hypothesis cannot be dropped).
    pub non_eulerian_unpacked_obstruction_free: usize,
    /// Whether the (K4, E(K4), ∅) control appeared among them.
    pub k4_control_seen: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<InstanceRow>>,
    /// Wall-clock; excluded from determinism comparisons.
    pub runtime_ms: u128,
}

fn classify_instance(sg: &SignedGraft) -> Result<InstanceRow> {
    let eulerian = sg.is_eulerian();
    let scan = obstruction::obstruction_scan(sg, &SearchBudget::default())?;
    let scan_name = match &scan {
        Scan::None => "none",
        Scan::K5Tilde(_) => "k5tilde",
        Scan::F7(_) => "f7",
        Scan::Inconclusive => "inconclusive",
    };
    let r = solve::packs(sg)?;
    Ok(InstanceRow {
        instance: InstanceJson::from_graft(sg),
        eulerian,
        scan: scan_name.into(),
        tau: r.tau.finite(),
        nu: r.nu,
        packs: r.packs,
    })
}

fn run_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
    }
}

/// Every generated Eulerian graft with at most two terminals and no
/// obstruction minor must pack.
pub fn verify_main_theorem(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let start = std::time::Instant::now();
    let mut instances: Vec<SignedGraft> = Vec::new();
    for mode in cfg.modes() {
        instances.extend(canonical_grafts_upto(cfg.max_n, cfg.max_m, mode));
    }
    let rows: Result<Vec<InstanceRow>> = run_pool(cfg.jobs, || {
        instances
            .par_iter()
            .map(classify_instance)
            .collect::<Result<Vec<_>>>()
    });
    let rows = rows?;

    let mut report = VerifyReport {
        config: cfg.clone(),
        generated: rows.len(),
        eulerian: 0,
        obstruction_free: 0,
        packed: 0,
        skipped_budget: 0,
        no_join: 0,
        counterexamples: Vec::new(),
        non_eulerian_unpacked_obstruction_free: 0,
        k4_control_seen: false,
        rows: None,
        runtime_ms: 0,
    };
    let k4 = obstruction::k4_graft();
    for row in &rows {
        if row.eulerian {
            report.eulerian += 1;
        }
        match row.scan.as_str() {
            "none" => report.obstruction_free += 1,
            "inconclusive" => {
                report.skipped_budget += 1;
                continue;
            }
            _ => {}
        }
        if row.packs {
            report.packed += 1;
        }
        if row.tau.is_none() {
            report.no_join += 1;
        }
        if row.eulerian && row.scan == "none" && !row.packs && row.tau.is_some() {
            report.counterexamples.push(row.clone());
        }
        if !row.eulerian && row.scan == "none" && !row.packs && row.tau.is_some() {
            report.non_eulerian_unpacked_obstruction_free += 1;
            if !report.k4_control_seen {
                let sg = row.instance.to_graft()?;
                if sg.n() == 4
                    && sg.m() == 6
                    && sg.terminals().is_empty()
                    && obstruction::graft_isomorphism(&sg, &k4).is_some()
                {
                    report.k4_control_seen = true;
                }
            }
        }
    }
    if cfg.log_instances {
        report.rows = Some(rows);
    }
    report.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Recompute a logged row and compare.
pub fn replay_row(row: &InstanceRow) -> Result<()> {
    let sg = row.instance.to_graft()?;
    let fresh = classify_instance(&sg)?;
    if &fresh == row {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "replay mismatch: stored {row:?}, recomputed {fresh:?}"
        )))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub config: VerifyConfig,
    pub checked: usize,
    /// Instances whose cycling/idealness hypothesis held.
    pub cycling_hypothesis: usize,
    pub idealness_hypothesis: usize,
    /// Hypothesis-true instances violating the conclusion (must stay
    /// empty; an entry is a falsification artifact).
    pub cycling_violations: Vec<InstanceJson>,
    pub idealness_violations: Vec<InstanceJson>,
    /// Instances excluded by a detected obstruction minor.
    pub excluded: usize,
    pub skipped_budget: usize,
    /// Half-integrality of the returned optimum on idealness-hypothesis
    /// instances with at most two terminals.
    pub half_integral_checked: usize,
    pub half_integral_failures: usize,
    pub runtime_ms: u128,
}

struct ConjRow {
    instance: InstanceJson,
    cycling: Option<bool>,
    cycling_ok: bool,
    idealness: Option<bool>,
    idealness_ok: bool,
    excluded: bool,
    half_integral: Option<bool>,
}

fn conjecture_row(sg: &SignedGraft) -> Result<ConjRow> {
    let c = Clutter::from_signed_graft(sg)?;
    let cyc = clutter::cycling_check(&c);
    let ide = clutter::idealness_check(&c);
    let excluded = cyc
        .exclusions
        .iter()
        .chain(ide.exclusions.iter())
        .any(|(_, o)| matches!(o, MinorOutcome::Found(_)));
    // half-integrality: the doubling route must reach the LP optimum and
    // its weights are halves by construction
    let half_integral = if ide.hypothesis == Some(true) && sg.terminals().len() <= 2 && sg.m() <= 16
    {
        if c.sets().is_empty() {
            Some(true)
        } else {
            let lp = solve::nustar(sg)?;
            let halves = solve::nustar_half_integral(sg)?;
            let ok = halves.value == lp.value
                && halves.weights.iter().all(|(_, w)| {
                    let two = BigRational::from_integer(2.into());
                    (w * &two).is_integer() && *w <= BigRational::one()
                });
            Some(ok)
        }
    } else {
        None
    };
    Ok(ConjRow {
        instance: InstanceJson::from_graft(sg),
        cycling: cyc.hypothesis,
        cycling_ok: cyc.consistent.unwrap_or(true),
        idealness: ide.hypothesis,
        idealness_ok: ide.consistent.unwrap_or(true),
        excluded,
        half_integral,
    })
}

/// Run the cycling and idealness checkers over every generated graft.
pub fn verify_conjectures(cfg: &VerifyConfig) -> Result<ConjectureReport> {
    let start = std::time::Instant::now();
    let mut instances: Vec<SignedGraft> = Vec::new();
    for mode in cfg.modes() {
        instances.extend(canonical_grafts_upto(cfg.max_n, cfg.max_m, mode));
    }
    let rows: Result<Vec<ConjRow>> = run_pool(cfg.jobs, || {
        instances
            .par_iter()
            .map(conjecture_row)
            .collect::<Result<Vec<_>>>()
    });
    let rows = rows?;
    let mut report = ConjectureReport {
        config: cfg.clone(),
        checked: rows.len(),
        cycling_hypothesis: 0,
        idealness_hypothesis: 0,
        cycling_violations: Vec::new(),
        idealness_violations: Vec::new(),
        excluded: 0,
        skipped_budget: 0,
        half_integral_checked: 0,
        half_integral_failures: 0,
        runtime_ms: 0,
    };
    for row in rows {
        match row.cycling {
            Some(true) => {
                report.cycling_hypothesis += 1;
                if !row.cycling_ok {
                    report.cycling_violations.push(row.instance.clone());
                }
            }
            Some(false) => {}
            None => report.skipped_budget += 1,
        }
        if row.idealness == Some(true) {
            report.idealness_hypothesis += 1;
            if !row.idealness_ok {
                report.idealness_violations.push(row.instance.clone());
            }
        }
        if row.excluded {
            report.excluded += 1;
        }
        match row.half_integral {
            Some(ok) => {
                report.half_integral_checked += 1;
                if !ok {
                    report.half_integral_failures += 1;
                }
            }
            None => {}
        }
    }
    report.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Exit code semantics: 0 consistent, 2 counterexample, 3 budget skips.
pub fn exit_code(report: &VerifyReport) -> i32 {
    if !report.counterexamples.is_empty() {
        2
    } else if report.skipped_budget > 0 {
        3
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_sweep_is_consistent() {
        let cfg = VerifyConfig {
            max_n: 3,
            max_m: 4,
            t_empty: true,
            t_pair: true,
            jobs: Some(2),
            log_instances: true,
        };
        let report = verify_main_theorem(&cfg).unwrap();
        assert!(report.counterexamples.is_empty());
        assert_eq!(report.skipped_budget, 0);
        assert_eq!(exit_code(&report), 0);
        // rows replay
        for row in report.rows.as_ref().unwrap().iter().take(25) {
            replay_row(row).unwrap();
        }
    }

    #[test]
    fn determinism_modulo_runtime() {
        let cfg = VerifyConfig {
            max_n: 3,
            max_m: 3,
            t_empty: true,
            t_pair: false,
            jobs: Some(3),
            log_instances: true,
        };
        let mut a = verify_main_theorem(&cfg).unwrap();
        let mut b = verify_main_theorem(&cfg).unwrap();
        a.runtime_ms = 0;
        b.runtime_ms = 0;
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn tiny_conjecture_sweep() {
        let cfg = VerifyConfig {
            max_n: 3,
            max_m: 4,
            t_empty: true,
            t_pair: true,
            jobs: Some(2),
            log_instances: false,
        };
        let report = verify_conjectures(&cfg).unwrap();
        assert!(report.cycling_violations.is_empty());
        assert!(report.idealness_violations.is_empty());
        assert_eq!(report.half_integral_failures, 0);
        assert!(report.half_integral_checked > 0);
    }
}
