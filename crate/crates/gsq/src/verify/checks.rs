//! Exhaustive range checks: every theorem about extremal graph squares is
//! swept over complete isomorphism-class enumerations at desk scale.

use std::collections::BTreeMap;

use num::rational::{BigRational, Ratio};
use rayon::prelude::*;

use super::report::{ClaimReport, ExtremalRow, Status, Tolerances, Witness};
use super::{
    assert_extreme, attainer_set, canon, cmp_square_vs_value, fmt_float, radius_error_bound,
    square_radius, witness_with_radius, CertifiedCmp, VerifyError,
};
use crate::enumerate::{
    all_connected, all_trees, all_unicyclic, CONNECTED_ORDER_CAP, TREE_ORDER_CAP,
    UNICYCLIC_ORDER_CAP,
};
use crate::families::{broom, cycle, cycle_star, path, star, tadpole};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::spectral::{exact_radius, DEFAULT_TOL};

fn default_tolerances() -> Tolerances {
    Tolerances {
        residual: DEFAULT_TOL,
        exact_width: Some(1e-12),
        tie_gap: None,
    }
}

/// Certified radii of the squares of a whole stream, in stream order.
fn radii(graphs: &[Graph]) -> Result<Vec<(f64, f64)>, VerifyError> {
    graphs
        .par_iter()
        .map(|g| square_radius(g, DEFAULT_TOL))
        .collect()
}

/// `rho(G^2) <= n - 1` for every connected graph, with equality exactly when
/// the square is complete, i.e. when `diameter(G) <= 2`.
pub fn check_upper_bound_connected(n_min: usize, n_max: usize) -> Result<ClaimReport, VerifyError> {
    if n_min < 1 || n_min > n_max || n_max > UNICYCLIC_ORDER_CAP {
        return Err(VerifyError::Range {
            what: "order",
            lo: n_min,
            hi: n_max,
        });
    }
    let mut status = Status::Holds;
    let mut witnesses = Vec::new();
    let mut table = Vec::new();
    for n in n_min..=n_max {
        // all connected classes while the cap allows, unicyclic classes beyond
        let graphs: Vec<Graph> = if n <= CONNECTED_ORDER_CAP {
            all_connected(n)?.graphs().to_vec()
        } else {
            all_unicyclic(n, None)?.graphs().to_vec()
        };
        let vals = radii(&graphs)?;
        let bound = BigRational::from_integer((n as i64 - 1).into());
        let bound_f = (n - 1) as f64;
        let complete_edges = n * (n - 1) / 2;
        let mut equality = Vec::new();
        let mut sharpest: Option<usize> = None;
        for (i, g) in graphs.iter().enumerate() {
            let small_diameter = g.diameter().is_some_and(|d| d <= 2);
            let square_complete = g.square().edge_count() == complete_edges;
            if small_diameter != square_complete {
                status = Status::Violated;
                witnesses.push(witness_with_radius(
                    g,
                    format!("n={n}: square completeness and diameter <= 2 disagree"),
                    vals[i],
                ));
                continue;
            }
            if square_complete {
                equality.push(i);
                let err = radius_error_bound(n, vals[i].1) + 1e-13;
                if (vals[i].0 - bound_f).abs() > err
                    && cmp_square_vs_value(g, vals[i], &bound, bound_f)? != CertifiedCmp::Equal
                {
                    status = Status::Violated;
                    witnesses.push(witness_with_radius(
                        g,
                        format!("n={n}: complete square but radius differs from n-1"),
                        vals[i],
                    ));
                }
            } else {
                match cmp_square_vs_value(g, vals[i], &bound, bound_f)? {
                    CertifiedCmp::Less => {}
                    CertifiedCmp::Undecided => {
                        status = status.combine(Status::Undecided);
                        witnesses.push(witness_with_radius(
                            g,
                            format!("n={n}: strict bound could not be certified"),
                            vals[i],
                        ));
                    }
                    _ => {
                        status = Status::Violated;
                        witnesses.push(witness_with_radius(
                            g,
                            format!("n={n}: radius reaches n-1 with incomplete square"),
                            vals[i],
                        ));
                    }
                }
                if sharpest.is_none_or(|s| vals[i].0 > vals[s].0) {
                    sharpest = Some(i);
                }
            }
        }
        let eq_rep = equality
            .first()
            .copied()
            .expect("complete square exists at every order");
        table.push(ExtremalRow {
            n,
            param: None,
            role: "equality_class".into(),
            graph6: to_graph6(&graphs[eq_rep]),
            radius: bound_f,
            certificate: vals[eq_rep].1,
            note: Some(format!(
                "{} graphs attain n-1, all with diameter <= 2",
                equality.len()
            )),
        });
        if let Some(s) = sharpest {
            table.push(ExtremalRow {
                n,
                param: None,
                role: "strict_max".into(),
                graph6: to_graph6(&graphs[s]),
                radius: vals[s].0,
                certificate: vals[s].1,
                note: Some(format!(
                    "closest strict case, gap {}",
                    fmt_float(bound_f - vals[s].0)
                )),
            });
        }
    }
    Ok(ClaimReport {
        claim: "rho(G^2) <= n-1 for connected G, equality exactly when diameter(G) <= 2".into(),
        range: format!("n={n_min}..={n_max} (connected classes up to n=9, unicyclic beyond)"),
        status,
        witnesses,
        extremal_table: table,
        tolerances: default_tolerances(),
        runtime_ms: None,
    })
}

/// Shared body for unique-extremizer sweeps over one stream per order.
#[allow(clippy::too_many_arguments)]
fn extreme_sweep(
    n: usize,
    graphs: &[Graph],
    vals: &[(f64, f64)],
    expected: &[String],
    maximize: bool,
    role: &str,
    param: Option<usize>,
    status: &mut Status,
    witnesses: &mut Vec<Witness>,
    table: &mut Vec<ExtremalRow>,
) -> Result<(), VerifyError> {
    let out = assert_extreme(graphs, vals, expected, maximize)?;
    *status = status.combine(out.status);
    for &i in &out.offenders {
        witnesses.push(witness_with_radius(
            &graphs[i],
            format!("n={n}: reaches the {role} value reserved for the expected class"),
            vals[i],
        ));
    }
    for &i in &out.unsettled {
        witnesses.push(witness_with_radius(
            &graphs[i],
            format!("n={n}: {role} comparison could not be certified"),
            vals[i],
        ));
    }
    let gap_note = out.second.map_or_else(
        || "no competing class".to_string(),
        |s| {
            format!(
                "margin to nearest other class {}",
                fmt_float((s - out.best).abs())
            )
        },
    );
    table.push(ExtremalRow {
        n,
        param,
        role: role.into(),
        graph6: to_graph6(&graphs[out.baseline]),
        radius: out.best,
        certificate: vals[out.baseline].1,
        note: Some(gap_note),
    });
    Ok(())
}

/// The path uniquely minimizes and the star uniquely maximizes `rho(T^2)`
/// over all trees of each order; the maximum equals `n - 1`.
pub fn check_tree_extremes(n_min: usize, n_max: usize) -> Result<ClaimReport, VerifyError> {
    if n_min < 4 || n_min > n_max || n_max > TREE_ORDER_CAP {
        return Err(VerifyError::Range {
            what: "order",
            lo: n_min,
            hi: n_max,
        });
    }
    let mut status = Status::Holds;
    let mut witnesses = Vec::new();
    let mut table = Vec::new();
    for n in n_min..=n_max {
        let graphs = all_trees(n)?.graphs().to_vec();
        let vals = radii(&graphs)?;
        extreme_sweep(
            n,
            &graphs,
            &vals,
            &[canon(&path(n)?)],
            false,
            "minimizer",
            None,
            &mut status,
            &mut witnesses,
            &mut table,
        )?;
        extreme_sweep(
            n,
            &graphs,
            &vals,
            &[canon(&star(n)?)],
            true,
            "maximizer",
            None,
            &mut status,
            &mut witnesses,
            &mut table,
        )?;
        // the maximum itself must equal n-1 (the star's square is complete)
        let star_row = table.last().expect("maximizer row just pushed");
        if (star_row.radius - (n as f64 - 1.0)).abs()
            > radius_error_bound(n, star_row.certificate) + 1e-13
        {
            status = Status::Violated;
            witnesses.push(Witness {
                graph6: star_row.graph6.clone(),
                note: format!("n={n}: tree maximum differs from n-1"),
                values: BTreeMap::from([("radius".to_string(), star_row.radius)]),
            });
        }
    }
    Ok(ClaimReport {
        claim: "over trees of order n, the path uniquely minimizes and the star uniquely maximizes rho(T^2); the maximum is n-1".into(),
        range: format!("n={n_min}..={n_max}, all tree classes"),
        status,
        witnesses,
        extremal_table: table,
        tolerances: default_tolerances(),
        runtime_ms: None,
    })
}

/// The path uniquely minimizes `rho(G^2)` over all connected graphs.
pub fn check_connected_min(n_min: usize, n_max: usize) -> Result<ClaimReport, VerifyError> {
    if n_min < 4 || n_min > n_max || n_max > CONNECTED_ORDER_CAP {
        return Err(VerifyError::Range {
            what: "order",
            lo: n_min,
            hi: n_max,
        });
    }
    let mut status = Status::Holds;
    let mut witnesses = Vec::new();
    let mut table = Vec::new();
    for n in n_min..=n_max {
        let graphs = all_connected(n)?.graphs().to_vec();
        let vals = radii(&graphs)?;
        extreme_sweep(
            n,
            &graphs,
            &vals,
            &[canon(&path(n)?)],
            false,
            "minimizer",
            None,
            &mut status,
            &mut witnesses,
            &mut table,
        )?;
    }
    Ok(ClaimReport {
        claim: "over connected graphs of order n, the path uniquely minimizes rho(G^2)".into(),
        range: format!("n={n_min}..={n_max}, all connected classes"),
        status,
        witnesses,
        extremal_table: table,
        tolerances: default_tolerances(),
        runtime_ms: None,
    })
}

/// Only the tadpole (triangle with a pendant path) and the cycle attain the
/// minimum of `rho(U^2)` over unicyclic graphs of each order.
pub fn check_unicyclic_min(n_min: usize, n_max: usize) -> Result<ClaimReport, VerifyError> {
    if n_min < 4 || n_min > n_max || n_max > UNICYCLIC_ORDER_CAP {
        return Err(VerifyError::Range {
            what: "order",
            lo: n_min,
            hi: n_max,
        });
    }
    let mut status = Status::Holds;
    let mut witnesses = Vec::new();
    let mut table = Vec::new();
    for n in n_min..=n_max {
        let graphs = all_unicyclic(n, None)?.graphs().to_vec();
        let vals = radii(&graphs)?;
        let allowed = [canon(&tadpole(n)?), canon(&cycle(n)?)];
        let out = assert_extreme(&graphs, &vals, &allowed, false)?;
        status = status.combine(out.status);
        for &i in &out.offenders {
            witnesses.push(witness_with_radius(
                &graphs[i],
                format!("n={n}: unexpected graph reaches the unicyclic minimum"),
                vals[i],
            ));
        }
        for &i in &out.unsettled {
            witnesses.push(witness_with_radius(
                &graphs[i],
                format!("n={n}: minimum comparison could not be certified"),
                vals[i],
            ));
        }
        table.push(ExtremalRow {
            n,
            param: None,
            role: "minimizer".into(),
            graph6: to_graph6(&graphs[out.baseline]),
            radius: out.best,
            certificate: vals[out.baseline].1,
            note: Some(out.second.map_or_else(
                || "no competing class".into(),
                |s| format!("margin to nearest other class {}", fmt_float(s - out.best)),
            )),
        });
        // report the other allowed attainer alongside
        let other = allowed
            .iter()
            .find(|c| **c != canon(&graphs[out.baseline]))
            .expect("two allowed attainers");
        if let Some(j) = graphs.iter().position(|g| canon(g) == *other) {
            table.push(ExtremalRow {
                n,
                param: None,
                role: "companion".into(),
                graph6: to_graph6(&graphs[j]),
                radius: vals[j].0,
                certificate: vals[j].1,
                note: Some("second graph allowed to attain the minimum".into()),
            });
        }
    }
    Ok(ClaimReport {
        claim: "over unicyclic graphs of order n, only the triangle-tadpole and the cycle attain the minimum of rho(U^2)".into(),
        range: format!("n={n_min}..={n_max}, all unicyclic classes"),
        status,
        witnesses,
        extremal_table: table,
        tolerances: default_tolerances(),
        runtime_ms: None,
    })
}

/// Every unicyclic graph whose girth lies strictly between 4 and its order
/// has square mean degree above 4 (exact rational arithmetic) and hence
/// `rho(U^2) > 4` (exact oracle).
pub fn check_girth_lemma(n_min: usize, n_max: usize) -> Result<ClaimReport, VerifyError> {
    if n_min < 6 || n_min > n_max || n_max > UNICYCLIC_ORDER_CAP {
        return Err(VerifyError::Range {
            what: "order",
            lo: n_min,
            hi: n_max,
        });
    }
    let four = Ratio::new(4i64, 1);
    let four_big = BigRational::from_integer(4.into());
    let unit = BigRational::from_integer(1.into());
    let mut status = Status::Holds;
    let mut witnesses = Vec::new();
    let mut table = Vec::new();
    for n in n_min..=n_max {
        let stream = all_unicyclic(n, None)?;
        let qualifying: Vec<&Graph> = stream
            .iter()
            .filter(|g| g.girth().is_some_and(|c| c >= 5 && c < n))
            .collect();
        let results: Vec<(Ratio<i64>, bool, (f64, f64))> = qualifying
            .par_iter()
            .map(|g| -> Result<_, VerifyError> {
                let sq = g.square();
                let alpha = sq.degree_stats().1;
                let exceeds = exact_radius(&sq, &unit)?.exceeds(&four_big);
                let v = square_radius(g, DEFAULT_TOL)?;
                Ok((alpha, exceeds, v))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut min_alpha: Option<usize> = None;
        let mut min_rho: Option<usize> = None;
        for (i, (alpha, exceeds, v)) in results.iter().enumerate() {
            if *alpha <= four {
                status = Status::Violated;
                witnesses.push(witness_with_radius(
                    qualifying[i],
                    format!("n={n}: square mean degree {alpha} fails to exceed 4"),
                    *v,
                ));
            }
            if !exceeds {
                status = Status::Violated;
                witnesses.push(witness_with_radius(
                    qualifying[i],
                    format!("n={n}: exact oracle denies rho > 4"),
                    *v,
                ));
            }
            if min_alpha.is_none_or(|m| *alpha < results[m].0) {
                min_alpha = Some(i);
            }
            if min_rho.is_none_or(|m| v.0 < results[m].2 .0) {
                min_rho = Some(i);
            }
        }
        if let (Some(a), Some(r)) = (min_alpha, min_rho) {
            let alpha = &results[a].0;
            table.push(ExtremalRow {
                n,
                param: None,
                role: "min_mean_degree".into(),
                graph6: to_graph6(qualifying[a]),
                radius: results[a].2 .0,
                certificate: results[a].2 .1,
                note: Some(format!(
                    "square mean degree {}/{} over {} qualifying graphs",
                    alpha.numer(),
                    alpha.denom(),
                    qualifying.len()
                )),
            });
            table.push(ExtremalRow {
                n,
                param: None,
                role: "min_radius".into(),
                graph6: to_graph6(qualifying[r]),
                radius: results[r].2 .0,
                certificate: results[r].2 .1,
                note: Some(format!(
                    "girth {}",
                    qualifying[r].girth().expect("unicyclic")
                )),
            });
        }
    }
    Ok(ClaimReport {
        claim:
            "every unicyclic graph with 5 <= girth < n has square mean degree > 4 and rho(U^2) > 4"
                .into(),
        range: format!("n={n_min}..={n_max}, girth 5..n-1"),
        status,
        witnesses,
        extremal_table: table,
        tolerances: default_tolerances(),
        runtime_ms: None,
    })
}

/// At fixed order and girth, the cycle with all surplus vertices pendant at
/// one cycle vertex uniquely maximizes `rho(U^2)`.
pub fn check_girth_max(
    n_min: usize,
    n_max: usize,
    g_min: usize,
    g_max: usize,
) -> Result<ClaimReport, VerifyError> {
    if n_min < 4 || n_min > n_max || n_max > UNICYCLIC_ORDER_CAP {
        return Err(VerifyError::Range {
            what: "order",
            lo: n_min,
            hi: n_max,
        });
    }
    if g_min < 3 || g_min > g_max || g_max > n_max {
        return Err(VerifyError::Range {
            what: "girth",
            lo: g_min,
            hi: g_max,
        });
    }
    let mut status = Status::Holds;
    let mut witnesses = Vec::new();
    let mut table = Vec::new();
    for n in n_min..=n_max {
        let stream = all_unicyclic(n, None)?;
        let mut buckets: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
        for g in stream.iter() {
            buckets
                .entry(g.girth().expect("unicyclic girth"))
                .or_default()
                .push(g.clone());
        }
        for girth in g_min..=g_max.min(n) {
            let Some(class) = buckets.get(&girth) else {
                continue;
            };
            let vals = radii(class)?;
            extreme_sweep(
                n,
                class,
                &vals,
                &[canon(&cycle_star(n, girth)?)],
                true,
                "maximizer",
                Some(girth),
                &mut status,
                &mut witnesses,
                &mut table,
            )?;
        }
    }
    Ok(ClaimReport {
        claim:
            "at fixed order and girth, the cycle with one pendant star uniquely maximizes rho(U^2)"
                .into(),
        range: format!("n={n_min}..={n_max}, girth={g_min}..={g_max}"),
        status,
        witnesses,
        extremal_table: table,
        tolerances: default_tolerances(),
        runtime_ms: None,
    })
}

/// How strongly a cell supports one extremal reading.
#[derive(Clone, Copy, PartialEq, Eq)]
enum CellSupport {
    Supported,
    Refuted,
    Unsettled,
}

/// At fixed order and diameter, checks whether the trees attaining each
/// extreme of `rho(T^2)` are brooms (a path with a terminal star at one of
/// its vertices). Both the minimizing and the maximizing reading are swept;
/// the claim holds if at least one reading is supported at every cell.
pub fn check_diameter_candidates(
    n_min: usize,
    n_max: usize,
    d_min: usize,
    d_max: usize,
) -> Result<ClaimReport, VerifyError> {
    if n_min < 4 || n_min > n_max || n_max > TREE_ORDER_CAP {
        return Err(VerifyError::Range {
            what: "order",
            lo: n_min,
            hi: n_max,
        });
    }
    if d_min < 2 || d_min > d_max || d_max > n_max - 1 {
        return Err(VerifyError::Range {
            what: "diameter",
            lo: d_min,
            hi: d_max,
        });
    }
    let mut witnesses = Vec::new();
    let mut table = Vec::new();
    let mut support = BTreeMap::from([
        ("minimizer", (0usize, 0usize, 0usize)), // supported, refuted, unsettled
        ("maximizer", (0usize, 0usize, 0usize)),
    ]);
    for n in n_min..=n_max {
        let stream = all_trees(n)?;
        let mut buckets: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
        for g in stream.iter() {
            buckets
                .entry(g.diameter().expect("tree diameter"))
                .or_default()
                .push(g.clone());
        }
        for d in d_min..=d_max.min(n - 1) {
            let Some(class) = buckets.get(&d) else {
                continue;
            };
            let vals = radii(class)?;
            // broom shapes at this cell; mirror-symmetric attachments collapse
            let mut brooms: BTreeMap<String, Vec<usize>> = BTreeMap::new();
            for i in 2..=d {
                brooms.entry(canon(&broom(n, d, i)?)).or_default().push(i);
            }
            for (maximize, role) in [(false, "minimizer"), (true, "maximizer")] {
                let (attainers, unsettled, baseline) = attainer_set(class, &vals, maximize)?;
                let base_canon = canon(&class[baseline]);
                let base_is_broom = brooms.contains_key(&base_canon);
                let stray_attainer = attainers
                    .iter()
                    .any(|&i| !brooms.contains_key(&canon(&class[i])));
                let stray_unsettled = unsettled
                    .iter()
                    .any(|&i| !brooms.contains_key(&canon(&class[i])));
                let cell = if stray_attainer {
                    CellSupport::Refuted
                } else if stray_unsettled {
                    CellSupport::Unsettled
                } else {
                    CellSupport::Supported
                };
                let tally = support.get_mut(role).expect("both roles tracked");
                match cell {
                    CellSupport::Supported => tally.0 += 1,
                    CellSupport::Refuted => tally.1 += 1,
                    CellSupport::Unsettled => tally.2 += 1,
                }
                if cell == CellSupport::Refuted {
                    for &i in attainers
                        .iter()
                        .filter(|&&i| !brooms.contains_key(&canon(&class[i])))
                    {
                        witnesses.push(witness_with_radius(
                            &class[i],
                            format!("n={n} d={d}: non-broom tree attains the {role} value"),
                            vals[i],
                        ));
                    }
                }
                let broom_note = if base_is_broom {
                    format!("broom i={:?}", brooms[&base_canon])
                } else {
                    "not a broom".to_string()
                };
                table.push(ExtremalRow {
                    n,
                    param: Some(d),
                    role: role.into(),
                    graph6: to_graph6(&class[baseline]),
                    radius: vals[baseline].0,
                    certificate: vals[baseline].1,
                    note: Some(format!(
                        "{broom_note}; attainers={}, unsettled={}",
                        attainers.len(),
                        unsettled.len()
                    )),
                });
            }
        }
    }
    let verdict = |t: (usize, usize, usize)| {
        if t.1 > 0 {
            Status::Violated
        } else if t.2 > 0 {
            Status::Undecided
        } else {
            Status::Holds
        }
    };
    let min_v = verdict(support["minimizer"]);
    let max_v = verdict(support["maximizer"]);
    // the claim stands if at least one reading is uniformly supported
    let status = if min_v == Status::Holds || max_v == Status::Holds {
        Status::Holds
    } else if min_v == Status::Undecided || max_v == Status::Undecided {
        Status::Undecided
    } else {
        Status::Violated
    };
    let (smin, smax) = (support["minimizer"], support["maximizer"]);
    witnesses.insert(
        0,
        Witness {
            graph6: String::new(),
            note: format!(
                "reading support over cells: minimizer supported={} refuted={} unsettled={}; maximizer supported={} refuted={} unsettled={}",
                smin.0, smin.1, smin.2, smax.0, smax.1, smax.2
            ),
            values: BTreeMap::new(),
        },
    );
    Ok(ClaimReport {
        claim: "at fixed order and diameter, the trees attaining the extremes of rho(T^2) are brooms (path with a terminal star)".into(),
        range: format!("n={n_min}..={n_max}, d={d_min}..={d_max}"),
        status,
        witnesses,
        extremal_table: table,
        tolerances: default_tolerances(),
        runtime_ms: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_bound_small_orders_hold() {
        let report = check_upper_bound_connected(1, 5).unwrap();
        assert_eq!(report.status, Status::Holds);
        assert!(report.witnesses.is_empty());
        // each order has an equality row; strict rows appear from n=4 on
        assert!(report
            .extremal_table
            .iter()
            .any(|r| r.role == "equality_class" && r.n == 5));
        let eq5 = report
            .extremal_table
            .iter()
            .find(|r| r.role == "equality_class" && r.n == 5)
            .unwrap();
        assert_eq!(eq5.radius, 4.0);
    }

    #[test]
    fn tree_extremes_small_orders_hold() {
        let report = check_tree_extremes(4, 7).unwrap();
        assert_eq!(report.status, Status::Holds);
        for n in 4..=7 {
            let min_row = report
                .extremal_table
                .iter()
                .find(|r| r.n == n && r.role == "minimizer")
                .unwrap();
            assert_eq!(min_row.graph6, canon(&path(n).unwrap()));
            let max_row = report
                .extremal_table
                .iter()
                .find(|r| r.n == n && r.role == "maximizer")
                .unwrap();
            assert_eq!(max_row.graph6, canon(&star(n).unwrap()));
            assert!((max_row.radius - (n as f64 - 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn connected_minimum_small_orders_hold() {
        let report = check_connected_min(4, 6).unwrap();
        assert_eq!(report.status, Status::Holds);
        assert!(report.witnesses.is_empty());
    }

    #[test]
    fn unicyclic_minimum_small_orders_hold() {
        let report = check_unicyclic_min(4, 7).unwrap();
        assert_eq!(report.status, Status::Holds);
        // each order reports the minimizer and the companion attainer
        for n in 4..=7 {
            assert!(report
                .extremal_table
                .iter()
                .any(|r| r.n == n && r.role == "minimizer"));
            assert!(report
                .extremal_table
                .iter()
                .any(|r| r.n == n && r.role == "companion"));
        }
    }

    #[test]
    fn girth_lemma_small_orders_hold() {
        let report = check_girth_lemma(6, 8).unwrap();
        assert_eq!(report.status, Status::Holds);
        assert!(report.witnesses.is_empty());
        assert!(report
            .extremal_table
            .iter()
            .any(|r| r.role == "min_mean_degree"));
    }

    #[test]
    fn girth_maximum_small_orders_hold() {
        let report = check_girth_max(5, 7, 3, 7).unwrap();
        assert_eq!(report.status, Status::Holds);
        let row = report
            .extremal_table
            .iter()
            .find(|r| r.n == 6 && r.param == Some(3))
            .unwrap();
        assert_eq!(row.graph6, canon(&cycle_star(6, 3).unwrap()));
    }

    #[test]
    fn diameter_candidates_resolve_the_reading() {
        let report = check_diameter_candidates(5, 7, 2, 6).unwrap();
        assert_eq!(report.status, Status::Holds);
        // at n=6, d=3 the balanced double star minimizes but is not a broom,
        // so the data must carry the maximizing reading
        let summary = &report.witnesses[0].note;
        assert!(
            summary.contains("maximizer supported"),
            "summary: {summary}"
        );
        let max_cells: Vec<_> = report
            .extremal_table
            .iter()
            .filter(|r| r.role == "maximizer")
            .collect();
        assert!(max_cells
            .iter()
            .all(|r| r.note.as_deref().unwrap().starts_with("broom")));
        let min63 = report
            .extremal_table
            .iter()
            .find(|r| r.n == 6 && r.param == Some(3) && r.role == "minimizer")
            .unwrap();
        assert_eq!(
            min63.note.as_deref().unwrap().split(';').next().unwrap(),
            "not a broom"
        );
    }

    #[test]
    fn range_validation() {
        assert!(check_upper_bound_connected(0, 5).is_err());
        assert!(check_tree_extremes(3, 10).is_err());
        assert!(check_connected_min(4, 10).is_err());
        assert!(check_unicyclic_min(4, 13).is_err());
        assert!(check_girth_lemma(5, 8).is_err());
        assert!(check_girth_max(5, 7, 2, 6).is_err());
        assert!(check_diameter_candidates(5, 7, 2, 7).is_err());
    }
}
