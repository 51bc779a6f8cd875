//! Machine verification of spectral extremality claims about graph squares.
//!
//! Each operation sweeps an exhaustive range of graphs (or a seeded random
//! sample), computes certified spectral radii, and returns a [`ClaimReport`].
//! A verdict of `HOLDS` means every comparison was settled decisively — by a
//! floating-point gap exceeding the certified error bounds, or by the exact
//! oracle when the gap was too small to trust. Comparisons that cannot be
//! settled either way yield `UNDECIDED`, never a silent pass.

mod checks;
mod props;
mod report;
mod scans;

pub use checks::{
    check_connected_min, check_diameter_candidates, check_girth_lemma, check_girth_max,
    check_tree_extremes, check_unicyclic_min, check_upper_bound_connected,
};
pub use props::check_lemma_properties;
pub use report::{fmt_float, ClaimReport, ExtremalRow, Status, Tolerances, Witness};
pub use scans::{scan_conjecture1, scan_conjecture2};

use std::cmp::Ordering;

use num::rational::BigRational;
use num::BigInt;
use thiserror::Error;

use crate::enumerate::EnumerateError;
use crate::families::FamilyError;
use crate::graph::{Graph, GraphError};
use crate::graph6::to_graph6;
use crate::iso::{canonical_form, IsoError};
use crate::spectral::{exact_radius, spectral_radius, SpectralError, EXACT_ORDER_CAP};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("requested {what} range {lo}..={hi} is empty or outside the supported caps")]
    Range {
        what: &'static str,
        lo: usize,
        hi: usize,
    },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Isolation widths tried, finest last, when the exact oracle must separate
/// two radii that the floating-point gap could not.
const EXACT_WIDTH_LADDER: [(i32, f64); 3] = [(12, 1e-12), (16, 1e-16), (20, 1e-20)];

/// Rigorous bound on `|computed - true|` for a radius certified with the
/// given max-norm residual on an order-`n` graph: the Rayleigh estimate sits
/// within the 2-norm of the residual of the dominant eigenvalue.
pub(crate) fn radius_error_bound(n: usize, residual: f64) -> f64 {
    (n as f64).sqrt() * residual
}

/// Certified radius of `g`'s square: `(radius, residual)`.
pub(crate) fn square_radius(g: &Graph, tol: f64) -> Result<(f64, f64), VerifyError> {
    let r = spectral_radius(&g.square(), tol)?;
    Ok((r.radius, r.residual))
}

pub(crate) fn canon(g: &Graph) -> String {
    canonical_form(g)
        .expect("verification graphs stay within the canonical cap")
        .into_string()
}

/// Outcome of comparing two spectral radii with certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CertifiedCmp {
    Less,
    Greater,
    /// Certified equal: the squares share a characteristic polynomial.
    Equal,
    /// Neither the float gap nor the exact ladder could separate them.
    Undecided,
}

/// Compares `rho(a)` against `rho(b)` for the graphs as given. `va`/`vb` are
/// previously computed `(radius, residual)` pairs. Falls back to the exact
/// oracle when the float gap is inside the certified error bounds.
pub(crate) fn cmp_radii(
    a: &Graph,
    b: &Graph,
    va: (f64, f64),
    vb: (f64, f64),
) -> Result<CertifiedCmp, VerifyError> {
    if a == b {
        return Ok(CertifiedCmp::Equal);
    }
    let margin = radius_error_bound(a.n(), va.1) + radius_error_bound(b.n(), vb.1) + 1e-13;
    if vb.0 - va.0 > margin {
        return Ok(CertifiedCmp::Less);
    }
    if va.0 - vb.0 > margin {
        return Ok(CertifiedCmp::Greater);
    }
    if a.n() > EXACT_ORDER_CAP || b.n() > EXACT_ORDER_CAP {
        return Ok(CertifiedCmp::Undecided);
    }
    for (exp, _) in EXACT_WIDTH_LADDER {
        let width = BigRational::new(BigInt::from(1), BigInt::from(10u64).pow(exp as u32));
        let ea = exact_radius(a, &width)?;
        let eb = exact_radius(b, &width)?;
        // radii live in half-open intervals (lo, hi]
        if ea.interval().1 <= eb.interval().0 {
            return Ok(CertifiedCmp::Less);
        }
        if eb.interval().1 <= ea.interval().0 {
            return Ok(CertifiedCmp::Greater);
        }
    }
    let width = BigRational::new(BigInt::from(1), BigInt::from(10u64).pow(12));
    if exact_radius(a, &width)?.charpoly() == exact_radius(b, &width)?.charpoly() {
        return Ok(CertifiedCmp::Equal);
    }
    Ok(CertifiedCmp::Undecided)
}

/// Compares `rho(a^2)` against `rho(b^2)`; `va`/`vb` certify the squares.
pub(crate) fn cmp_square_radii(
    a: &Graph,
    b: &Graph,
    va: (f64, f64),
    vb: (f64, f64),
) -> Result<CertifiedCmp, VerifyError> {
    cmp_radii(&a.square(), &b.square(), va, vb)
}

/// Certified attainers of the extremum over one class: the float champion
/// plus every graph not certified to lie strictly inside the extremum, split
/// into certified ties and unsettled comparisons. Returns
/// `(attainers, unsettled, champion_index)`.
pub(crate) fn attainer_set(
    graphs: &[Graph],
    vals: &[(f64, f64)],
    maximize: bool,
) -> Result<(Vec<usize>, Vec<usize>, usize), VerifyError> {
    let baseline = (0..graphs.len())
        .min_by(|&i, &j| {
            let key = |k: usize| {
                if maximize {
                    (-vals[k].0, canon(&graphs[k]))
                } else {
                    (vals[k].0, canon(&graphs[k]))
                }
            };
            key(i).partial_cmp(&key(j)).expect("finite radii")
        })
        .expect("class is nonempty");
    let mut attainers = vec![baseline];
    let mut unsettled = Vec::new();
    for i in 0..graphs.len() {
        if i == baseline {
            continue;
        }
        let cmp = cmp_square_radii(&graphs[baseline], &graphs[i], vals[baseline], vals[i])?;
        let inside = if maximize {
            cmp == CertifiedCmp::Greater
        } else {
            cmp == CertifiedCmp::Less
        };
        if inside {
            continue;
        }
        if cmp == CertifiedCmp::Undecided {
            unsettled.push(i);
        } else {
            attainers.push(i);
        }
    }
    Ok((attainers, unsettled, baseline))
}

/// Compares `rho(g^2)` against an exact rational bound, certified.
pub(crate) fn cmp_square_vs_value(
    g: &Graph,
    v: (f64, f64),
    bound: &BigRational,
    bound_f: f64,
) -> Result<CertifiedCmp, VerifyError> {
    let margin = radius_error_bound(g.n(), v.1) + 1e-13;
    if bound_f - v.0 > margin {
        return Ok(CertifiedCmp::Less);
    }
    if v.0 - bound_f > margin {
        return Ok(CertifiedCmp::Greater);
    }
    if g.n() > EXACT_ORDER_CAP {
        return Ok(CertifiedCmp::Undecided);
    }
    let width = BigRational::new(BigInt::from(1), BigInt::from(10u64).pow(12));
    let exact = exact_radius(&g.square(), &width)?;
    Ok(match exact.cmp_value(bound) {
        Ordering::Less => CertifiedCmp::Less,
        Ordering::Greater => CertifiedCmp::Greater,
        Ordering::Equal => CertifiedCmp::Equal,
    })
}

/// Result of checking that an extremum over a stream is attained only by an
/// expected set of graphs.
pub(crate) struct ExtremeOutcome {
    pub status: Status,
    /// Indices certified to beat or tie the expected extremum.
    pub offenders: Vec<usize>,
    /// Indices whose comparison could not be settled.
    pub unsettled: Vec<usize>,
    /// Index of the expected graph attaining the extremum.
    pub baseline: usize,
    /// Extreme value over the expected graphs.
    pub best: f64,
    /// Most competitive value among non-expected graphs, if any exist.
    pub second: Option<f64>,
}

/// Checks that the min (or max, with `maximize`) of `rho(g^2)` over `graphs`
/// is attained only by graphs whose canonical form lies in `expected`.
/// `vals[i]` must hold the certified `(radius, residual)` of `graphs[i]`'s
/// square. Every non-expected graph must sit decisively on the wrong side of
/// the best expected value.
pub(crate) fn assert_extreme(
    graphs: &[Graph],
    vals: &[(f64, f64)],
    expected: &[String],
    maximize: bool,
) -> Result<ExtremeOutcome, VerifyError> {
    let canons: Vec<String> = graphs.iter().map(canon).collect();
    let baseline = (0..graphs.len())
        .filter(|&i| expected.contains(&canons[i]))
        .min_by(|&i, &j| {
            let key = |k: usize| {
                if maximize {
                    (-vals[k].0, canons[k].clone())
                } else {
                    (vals[k].0, canons[k].clone())
                }
            };
            key(i).partial_cmp(&key(j)).expect("finite radii")
        })
        .expect("expected extremal graph appears in the stream");
    let mut offenders = Vec::new();
    let mut unsettled = Vec::new();
    let mut second: Option<f64> = None;
    for i in 0..graphs.len() {
        if expected.contains(&canons[i]) {
            continue;
        }
        second = Some(match second {
            None => vals[i].0,
            Some(s) if maximize => s.max(vals[i].0),
            Some(s) => s.min(vals[i].0),
        });
        let cmp = cmp_square_radii(&graphs[baseline], &graphs[i], vals[baseline], vals[i])?;
        let fine = if maximize {
            cmp == CertifiedCmp::Greater
        } else {
            cmp == CertifiedCmp::Less
        };
        if fine {
            continue;
        }
        if cmp == CertifiedCmp::Undecided {
            unsettled.push(i);
        } else {
            offenders.push(i);
        }
    }
    let status = if !offenders.is_empty() {
        Status::Violated
    } else if !unsettled.is_empty() {
        Status::Undecided
    } else {
        Status::Holds
    };
    Ok(ExtremeOutcome {
        status,
        offenders,
        unsettled,
        baseline,
        best: vals[baseline].0,
        second,
    })
}

pub(crate) fn witness_with_radius(g: &Graph, note: String, v: (f64, f64)) -> Witness {
    Witness {
        graph6: to_graph6(g),
        note,
        values: std::collections::BTreeMap::from([
            ("radius".to_string(), v.0),
            ("residual".to_string(), v.1),
        ]),
    }
}
