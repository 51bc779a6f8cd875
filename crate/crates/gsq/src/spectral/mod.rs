//! Dominant-eigenvalue computation for adjacency matrices.
//!
//! Two independent routes to the spectral radius:
//!
//! - [`spectral_radius`]: power iteration with a certified residual, usable
//!   at any order;
//! - [`exact_radius`]: integer characteristic polynomial plus Sturm-chain
//!   root isolation, exact but capped at small orders.
//!
//! The iterative solver runs on the diagonally shifted matrix `A + I`. The
//! shift moves the spectrum to `[1 - rho, 1 + rho]` so the dominant
//! eigenvalue is strictly largest in absolute value even on bipartite graphs
//! (where `A` itself has the pair `-rho, rho` and plain iteration
//! oscillates); the radius reported is the shifted estimate minus one.

mod exact;

pub use exact::{exact_radius, ExactRadius, EXACT_ORDER_CAP};

use crate::graph::Graph;
use thiserror::Error;

/// Residual tolerance used when callers have no reason to pick another.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Looser tolerance for long parameter scans; claimed inequalities hold with
/// gaps far above this wherever strictness is asserted.
pub const SCAN_TOL: f64 = 1e-10;

/// Hard cap on power-iteration steps; hitting it is an explicit error, never
/// a silently unconverged answer.
pub const ITERATION_CAP: usize = 1_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("no convergence to residual {tol:e} within {iterations} iterations (last residual {residual:e})")]
    NotConverged {
        tol: f64,
        residual: f64,
        iterations: usize,
    },
    #[error("exact oracle is capped at n <= {cap}, got n = {n}")]
    OrderAboveCap { n: usize, cap: usize },
    #[error("interval width must be positive")]
    InvalidWidth,
    #[error("vector length {got} does not match vertex count {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vertex {0} out of range for n = {1}")]
    InvalidVertex(usize, usize),
    #[error("start vector must be strictly positive")]
    NonPositiveStart,
    #[error("integer overflow computing characteristic polynomial at n = {0}")]
    CoefficientOverflow(usize),
}

/// A certified dominant-eigenpair estimate.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    /// Estimated spectral radius.
    pub radius: f64,
    /// Perron vector estimate, unit max-norm; strictly positive entries when
    /// the input graph is connected.
    pub vector: Vec<f64>,
    /// Certificate: `max_v |(A x)_v - radius * x_v|` for the returned `x`.
    pub residual: f64,
    /// Iterations actually spent.
    pub iterations: usize,
}

/// Spectral radius by shifted power iteration, certified by the max-norm
/// residual of the *unshifted* eigenvalue equation.
///
/// Starts from the all-ones vector, which has positive overlap with the
/// Perron direction on every graph.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    iterate(g, vec![1.0; g.n()], tol)
}

/// Same iteration from a caller-chosen strictly positive start vector; used
/// to confirm that the converged pair does not depend on the start.
pub fn spectral_radius_with_start(
    g: &Graph,
    start: &[f64],
    tol: f64,
) -> Result<SpectralResult, SpectralError> {
    if start.len() != g.n() {
        return Err(SpectralError::DimensionMismatch {
            expected: g.n(),
            got: start.len(),
        });
    }
    if !start.iter().all(|&v| v > 0.0 && v.is_finite()) {
        return Err(SpectralError::NonPositiveStart);
    }
    let max = start.iter().cloned().fold(0.0f64, f64::max);
    iterate(g, start.iter().map(|v| v / max).collect(), tol)
}

fn iterate(g: &Graph, mut x: Vec<f64>, tol: f64) -> Result<SpectralResult, SpectralError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    let n = g.n();
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 1..=ITERATION_CAP {
        // y = (A + I) x, one sweep over the adjacency lists
        for u in 0..n {
            y[u] = x[u] + g.neighbors(u).iter().map(|&w| x[w]).sum::<f64>();
        }
        // Rayleigh quotient of the shifted matrix, un-shifted
        let xy: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let xx: f64 = x.iter().map(|a| a * a).sum();
        let radius = xy / xx - 1.0;
        // (A x)_v = y_v - x_v, so the residual costs no extra matrix pass
        residual = x
            .iter()
            .zip(&y)
            .map(|(&xv, &yv)| ((yv - xv) - radius * xv).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok(SpectralResult {
                radius,
                vector: x,
                residual,
                iterations: it,
            });
        }
        let norm = y.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        for (xv, &yv) in x.iter_mut().zip(&y) {
            *xv = yv / norm;
        }
    }
    Err(SpectralError::NotConverged {
        tol,
        residual,
        iterations: ITERATION_CAP,
    })
}

/// The neighborhood sum `X_v + sum of X_u over u adjacent to v` — taken in
/// `g` itself, not in any power of `g`.
pub fn tilde(g: &Graph, x: &[f64], v: usize) -> Result<f64, SpectralError> {
    if x.len() != g.n() {
        return Err(SpectralError::DimensionMismatch {
            expected: g.n(),
            got: x.len(),
        });
    }
    if v >= g.n() {
        return Err(SpectralError::InvalidVertex(v, g.n()));
    }
    Ok(x[v] + g.neighbors(v).iter().map(|&u| x[u]).sum::<f64>())
}

/// Worst-vertex defect of the eigenvalue equation of `g`'s square: returns
/// `max_v |radius * X_v - sum of X_u over u != v at distance <= 2 in g|`.
///
/// `result` must come from a solve on `power(g, 2)`.
pub fn check_eigen_equation(g: &Graph, result: &SpectralResult) -> f64 {
    let sq = g.square();
    (0..g.n())
        .map(|v| {
            let sum: f64 = sq.neighbors(v).iter().map(|&u| result.vector[u]).sum();
            (result.radius * result.vector[v] - sum).abs()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::BigRational;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn complete_graph_radius() {
        let r = spectral_radius(&complete(5), DEFAULT_TOL).unwrap();
        assert!((r.radius - 4.0).abs() <= 1e-12);
        assert!(r.residual <= DEFAULT_TOL);
        // uniform Perron vector
        assert!(r.vector.iter().all(|&v| (v - 1.0).abs() < 1e-9));
    }

    #[test]
    fn cycle_square_radius_is_four() {
        let r = spectral_radius(&cycle(6).square(), DEFAULT_TOL).unwrap();
        assert!((r.radius - 4.0).abs() <= 1e-11);
    }

    #[test]
    fn path_square_golden_value() {
        let r = spectral_radius(&path(4).square(), DEFAULT_TOL).unwrap();
        let expected = (1.0 + 17f64.sqrt()) / 2.0;
        assert!((r.radius - expected).abs() <= 1e-11);
    }

    #[test]
    fn bipartite_graphs_converge() {
        // stars and even cycles have spectrum symmetric about zero; the
        // shifted iteration must not oscillate
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let r = spectral_radius(&star, DEFAULT_TOL).unwrap();
        assert!((r.radius - 2.0).abs() <= 1e-12);
        let r = spectral_radius(&cycle(8), DEFAULT_TOL).unwrap();
        assert!((r.radius - 2.0).abs() <= 1e-10);
        let r = spectral_radius(&path(2), DEFAULT_TOL).unwrap();
        assert!((r.radius - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn perron_vector_positive_and_unit_max_norm() {
        for g in [path(7), cycle(9), complete(4)] {
            let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
            assert!(r.vector.iter().all(|&v| v > 0.0));
            let max = r.vector.iter().cloned().fold(0.0f64, f64::max);
            assert!((max - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn restart_reaches_same_pair() {
        let g = path(9).square();
        let a = spectral_radius(&g, DEFAULT_TOL).unwrap();
        let start: Vec<f64> = (0..g.n()).map(|v| 0.3 + 0.1 * (v as f64 % 7.0)).collect();
        let b = spectral_radius_with_start(&g, &start, DEFAULT_TOL).unwrap();
        assert!((a.radius - b.radius).abs() <= 2.0 * DEFAULT_TOL);
        for (x, y) in a.vector.iter().zip(&b.vector) {
            assert!((x - y).abs() < 1e-6);
        }
    }

    #[test]
    fn rejects_bad_starts_and_tolerances() {
        let g = path(3);
        assert!(matches!(
            spectral_radius(&g, 0.0),
            Err(SpectralError::InvalidTolerance(_))
        ));
        assert!(matches!(
            spectral_radius_with_start(&g, &[1.0, 1.0], DEFAULT_TOL),
            Err(SpectralError::DimensionMismatch {
                expected: 3,
                got: 2
            })
        ));
        assert!(matches!(
            spectral_radius_with_start(&g, &[1.0, 0.0, 1.0], DEFAULT_TOL),
            Err(SpectralError::NonPositiveStart)
        ));
    }

    #[test]
    fn edgeless_and_singleton_radius_zero() {
        let e3 = Graph::from_edges(3, []).unwrap();
        let r = spectral_radius(&e3, DEFAULT_TOL).unwrap();
        assert_eq!(r.radius, 0.0);
        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!(spectral_radius(&k1, DEFAULT_TOL).unwrap().radius, 0.0);
    }

    #[test]
    fn agreement_with_exact_oracle() {
        let width = BigRational::new(1.into(), 1_000_000_000_000i64.into());
        for g in [path(5), path(8), cycle(7), cycle(7).square(), complete(6)] {
            let fast = spectral_radius(&g, DEFAULT_TOL).unwrap();
            let slow = exact_radius(&g, &width).unwrap();
            assert!(
                (fast.radius - slow.midpoint_f64()).abs() <= 1e-10,
                "disagreement on n={}",
                g.n()
            );
        }
    }

    #[test]
    fn tilde_examples() {
        let p3 = path(3);
        assert_eq!(tilde(&p3, &[1.0, 1.0, 1.0], 1).unwrap(), 3.0);
        assert_eq!(tilde(&p3, &[1.0, 1.0, 1.0], 0).unwrap(), 2.0);
        let k3 = complete(3);
        let r = spectral_radius(&k3, DEFAULT_TOL).unwrap();
        let t = tilde(&k3, &r.vector, 0).unwrap();
        assert!((t - 3.0 * r.vector[0]).abs() < 1e-9);
        assert!(matches!(
            tilde(&p3, &[1.0, 1.0], 0),
            Err(SpectralError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            tilde(&p3, &[1.0, 1.0, 1.0], 5),
            Err(SpectralError::InvalidVertex(5, 3))
        ));
    }

    #[test]
    fn tilde_symmetry_on_path_square_perron_vector() {
        // the Perron vector of P_n^2 inherits the end-to-end symmetry of the
        // path, and so do the neighborhood sums taken in P_n
        let n = 9;
        let p = path(n);
        let r = spectral_radius(&p.square(), DEFAULT_TOL).unwrap();
        for k in 0..n {
            let a = tilde(&p, &r.vector, k).unwrap();
            let b = tilde(&p, &r.vector, n - 1 - k).unwrap();
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn eigen_equation_check() {
        // C_5 squared is K_5: uniform vector, radius 4, zero defect
        let c5 = cycle(5);
        let r = spectral_radius(&c5.square(), DEFAULT_TOL).unwrap();
        assert!(check_eigen_equation(&c5, &r) <= 1e-10);
        // negative control: a perturbed vector must show a large defect
        let mut bad = r.clone();
        bad.vector[0] += 0.25;
        assert!(check_eigen_equation(&c5, &bad) > 1e-3);
    }
}
