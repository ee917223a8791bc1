//! Exhaustive verification sweeps over enumerated trees.
//!
//! Each sweep enumerates every unlabeled tree up to a bounded order, computes
//! exact invariants with two independent methods where available, and records
//! the checked inequalities. Violations never abort a sweep: the full report
//! is assembled first so a falsified check comes with complete context.

use std::collections::BTreeMap;
use std::time::Instant;

use p3c_core::canon::canonical_form;
use p3c_core::{convexity, families, radon, tree_dp, Graph};
use rayon::prelude::*;

use crate::report::{InvariantRecord, Summary, SweepConfig, SweepReport, Violation};
use crate::{graph6, Error};

/// Largest order accepted by [`verify_theorem2`].
pub const THM2_MAX_N: usize = 14;
/// Largest order accepted by [`verify_theorem1`] per part count.
pub const THM1_MAX_N_K3: usize = 8;
pub const THM1_MAX_N_K4: usize = 6;
/// Largest order accepted by [`verify_recursions`].
pub const RECURSION_MAX_N: usize = 8;

/// Trees checked per parallel work unit.
const BATCH: usize = 64;

#[derive(Debug, Clone, Copy)]
enum Sweep {
    Thm1 { k: u32 },
    Thm2,
    Recursions { k: u32 },
}

impl Sweep {
    fn name(self) -> &'static str {
        match self {
            Sweep::Thm1 { .. } => "thm1",
            Sweep::Thm2 => "thm2",
            Sweep::Recursions { .. } => "recursions",
        }
    }

    fn k(self) -> Option<u32> {
        match self {
            Sweep::Thm1 { k } | Sweep::Recursions { k } => Some(k),
            Sweep::Thm2 => None,
        }
    }
}

/// Checks `r2 <= 2 * alpha` and `r2 >= alpha` on every tree with
/// `2 <= n <= n_max`, plus any `extras`.
///
/// The free number comes from the tree recursion and is cross-checked
/// against branch-and-bound search; the Radon number is brute force.
pub fn verify_theorem2(n_max: usize, jobs: usize, extras: &[Graph]) -> Result<SweepReport, Error> {
    guard_n(n_max, THM2_MAX_N)?;
    run_sweep(Sweep::Thm2, n_max, jobs, extras)
}

/// Checks `rk <= (k-1) * r2` for `k` in `{3, 4}` on every tree with
/// `2 <= n <= n_max`, plus any `extras`.
pub fn verify_theorem1(
    n_max: usize,
    k: u32,
    jobs: usize,
    extras: &[Graph],
) -> Result<SweepReport, Error> {
    let cap = match k {
        3 => THM1_MAX_N_K3,
        4 => THM1_MAX_N_K4,
        _ => {
            return Err(Error::Usage(format!(
                "theorem 1 sweep supports k in {{3, 4}}, got {k}"
            )))
        }
    };
    guard_n(n_max, cap)?;
    run_sweep(Sweep::Thm1 { k }, n_max, jobs, extras)
}

/// Cross-validates the component recursions against brute force at every
/// vertex of every tree with `2 <= n <= n_max`: the hull-avoiding Radon
/// number for the given `k`, and the vertex-avoiding free number.
pub fn verify_recursions(
    n_max: usize,
    k: u32,
    jobs: usize,
    extras: &[Graph],
) -> Result<SweepReport, Error> {
    if !(2..=3).contains(&k) {
        return Err(Error::Usage(format!(
            "recursion sweep supports k in {{2, 3}}, got {k}"
        )));
    }
    guard_n(n_max, RECURSION_MAX_N)?;
    run_sweep(Sweep::Recursions { k }, n_max, jobs, extras)
}

fn guard_n(n_max: usize, cap: usize) -> Result<(), Error> {
    if !(2..=cap).contains(&n_max) {
        return Err(Error::Usage(format!(
            "sweep order must satisfy 2 <= n <= {cap}, got {n_max}"
        )));
    }
    Ok(())
}

fn run_sweep(sweep: Sweep, n_max: usize, jobs: usize, extras: &[Graph]) -> Result<SweepReport, Error> {
    let mut trees: Vec<Graph> = Vec::new();
    for n in 2..=n_max {
        trees.extend(families::enumerate_trees(n)?);
    }
    for g in extras {
        if !g.is_tree() || g.n() < 2 {
            return Err(Error::Usage(
                "extra inputs to a sweep must be trees on at least two vertices".into(),
            ));
        }
        trees.push(canonical_form(g)?);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Pool(e.to_string()))?;
    let mut results: Vec<(InvariantRecord, Vec<Violation>)> = pool.install(|| {
        trees
            .par_chunks(BATCH)
            .map(|chunk| {
                chunk
                    .iter()
                    .map(|g| check_tree(sweep, g))
                    .collect::<Result<Vec<_>, Error>>()
            })
            .collect::<Result<Vec<_>, Error>>()
            .map(|batches| batches.into_iter().flatten().collect())
    })?;

    // Canonical report order, independent of scheduling.
    results.sort_by(|a, b| (a.0.n, &a.0.tree_id).cmp(&(b.0.n, &b.0.tree_id)));
    let mut records = Vec::with_capacity(results.len());
    let mut violations = Vec::new();
    for (mut record, mut v) in results {
        record.refresh_checks();
        records.push(record);
        violations.append(&mut v);
    }
    let checked = records.len();
    Ok(SweepReport {
        schema: crate::report::SCHEMA.into(),
        config: SweepConfig {
            sweep: sweep.name().into(),
            n_max,
            k: sweep.k(),
            jobs,
        },
        records,
        summary: Summary {
            checked,
            violations,
        },
    })
}

/// Computes one record; returns check failures alongside it.
fn check_tree(sweep: Sweep, g: &Graph) -> Result<(InvariantRecord, Vec<Violation>), Error> {
    let start = Instant::now();
    let tree_id = graph6::encode(g);
    let mut violations = Vec::new();
    let fail = |check: String, detail: String, reproduce: String| Violation {
        tree_id: tree_id.clone(),
        n: g.n(),
        check,
        detail,
        reproduce,
    };

    let (alpha, _) = tree_dp::alpha_tree(g)?;
    let (alpha_search, _) = convexity::max_free_set(g)?;
    if alpha != alpha_search {
        violations.push(fail(
            "alpha_crosscheck".into(),
            format!("recursion gives {alpha}, branch and bound gives {alpha_search}"),
            format!("p3c alpha --graph6 '{tree_id}'"),
        ));
    }
    let alpha_star_min = (0..g.n())
        .map(|v| tree_dp::alpha_star_tree(g, v))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .min()
        .unwrap_or(0);
    let r2 = radon::max_anti_radon_multiset(g, 2)?.value;

    let mut rk = BTreeMap::new();
    let mut eq2_ok = true;
    match sweep {
        Sweep::Thm2 => {}
        Sweep::Thm1 { k } => {
            let value = radon::max_anti_radon_multiset(g, k as usize)?.value;
            rk.insert(k, value);
            if value > (k as usize - 1) * r2 {
                violations.push(fail(
                    format!("thm1[{k}]"),
                    format!("rk={value} exceeds (k-1)*r2={}", (k as usize - 1) * r2),
                    format!("p3c radon --k {k} --graph6 '{tree_id}'"),
                ));
            }
        }
        Sweep::Recursions { k } => {
            for v in 0..g.n() {
                let by_recursion = tree_dp::radon_star_tree(g, v, k as usize)?;
                let by_search = radon::radon_star(g, v, k as usize)?.value;
                if by_recursion != by_search {
                    eq2_ok = false;
                    violations.push(fail(
                        format!("radon_star[k={k},v={v}]"),
                        format!("recursion gives {by_recursion}, search gives {by_search}"),
                        format!("p3c radon-star --k {k} --vertex {v} --graph6 '{tree_id}'"),
                    ));
                }
                let star_recursion = tree_dp::alpha_star_tree(g, v)?;
                let avoid = p3c_core::VertexSet::from_elements(g.n(), &[v]);
                let star_search = convexity::max_free_set_excluding(g, &avoid)?.0;
                if star_recursion != star_search {
                    eq2_ok = false;
                    violations.push(fail(
                        format!("alpha_star[v={v}]"),
                        format!("recursion gives {star_recursion}, search gives {star_search}"),
                        format!("p3c alpha --star {v} --graph6 '{tree_id}'"),
                    ));
                }
            }
        }
    }

    if r2 > 2 * alpha {
        violations.push(fail(
            "thm2".into(),
            format!("r2={r2} exceeds 2*alpha={}", 2 * alpha),
            format!("p3c radon --k 2 --graph6 '{tree_id}'"),
        ));
    }
    if r2 < alpha {
        violations.push(fail(
            "lower".into(),
            format!("r2={r2} is below alpha={alpha}"),
            format!("p3c radon --k 2 --graph6 '{tree_id}'"),
        ));
    }

    let record = InvariantRecord {
        tree_id,
        n: g.n(),
        alpha,
        alpha_star_min,
        r2,
        rk,
        thm1_ok: BTreeMap::new(),
        thm2_ok: true,
        lower_ok: true,
        eq2_ok,
        runtime_ms: start.elapsed().as_millis() as u64,
    };
    Ok((record, violations))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm2_smallest_sweep_matches_hand_checked_trees() {
        let report = verify_theorem2(4, 1, &[]).unwrap();
        assert_eq!(report.summary.checked, 4);
        assert!(report.summary.violations.is_empty());
        let by_id: Vec<(usize, usize, usize)> = report
            .records
            .iter()
            .map(|r| (r.n, r.alpha, r.r2))
            .collect();
        // P2, P3, then the two trees on four vertices.
        assert_eq!(by_id[0], (2, 2, 2));
        assert_eq!(by_id[1], (3, 2, 2));
        assert_eq!(by_id[2].0, 4);
        assert_eq!(by_id[3].0, 4);
        for r in &report.records {
            assert!(r.thm2_ok && r.lower_ok && r.eq2_ok);
            assert!(r.rk.is_empty());
        }
    }

    #[test]
    fn injected_sharpness_tree_attains_equality() {
        let t1 = families::sharpness_tree(1).unwrap();
        let report = verify_theorem2(4, 1, &[t1]).unwrap();
        assert_eq!(report.summary.checked, 5);
        assert!(report.summary.violations.is_empty());
        let rec = report.records.iter().find(|r| r.n == 10).unwrap();
        assert_eq!(rec.alpha, 3);
        assert_eq!(rec.r2, 6);
        assert!(rec.thm2_ok);
        assert_eq!(rec.r2, 2 * rec.alpha);
    }

    #[test]
    fn thm1_small_sweep_is_clean() {
        let report = verify_theorem1(5, 3, 1, &[]).unwrap();
        assert_eq!(report.summary.checked, 1 + 1 + 2 + 3);
        assert!(report.summary.violations.is_empty());
        for r in &report.records {
            assert_eq!(r.thm1_ok.len(), 1);
            assert!(r.thm1_ok[&3]);
            assert!(r.rk[&3] <= 2 * r.r2);
        }
    }

    #[test]
    fn recursion_sweep_agrees_everywhere() {
        let report = verify_recursions(5, 2, 1, &[]).unwrap();
        assert_eq!(report.summary.checked, 1 + 1 + 2 + 3);
        assert!(report.summary.violations.is_empty());
        assert!(report.records.iter().all(|r| r.eq2_ok));
    }

    #[test]
    fn sweeps_are_deterministic_across_worker_counts() {
        let mut a = verify_theorem2(6, 1, &[]).unwrap();
        let mut b = verify_theorem2(6, 2, &[]).unwrap();
        for r in a.records.iter_mut().chain(b.records.iter_mut()) {
            r.runtime_ms = 0;
        }
        b.config.jobs = a.config.jobs;
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn guards_reject_out_of_range_parameters() {
        assert!(verify_theorem2(1, 1, &[]).is_err());
        assert!(verify_theorem2(15, 1, &[]).is_err());
        assert!(verify_theorem1(9, 3, 1, &[]).is_err());
        assert!(verify_theorem1(7, 4, 1, &[]).is_err());
        assert!(verify_theorem1(5, 2, 1, &[]).is_err());
        assert!(verify_recursions(9, 2, 1, &[]).is_err());
        assert!(verify_recursions(5, 4, 1, &[]).is_err());
        let g1 = families::counterexample_g1();
        assert!(verify_theorem2(4, 1, &[g1]).is_err());
    }
}
