//! Exact spectral-radius oracle for small graphs.
//!
//! The characteristic polynomial of the adjacency matrix is computed in
//! checked 128-bit integer arithmetic (Faddeev–LeVerrier), then the largest
//! real root is isolated with a Sturm chain over arbitrary-precision integers.
//! Everything downstream of the polynomial is exact rational arithmetic, so
//! the resulting interval and the boundary predicates (`exceeds`,
//! `is_exactly`) carry no floating-point error at all.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

use super::SpectralError;
use crate::graph::Graph;

/// Largest vertex count accepted by the exact oracle. Characteristic
/// polynomial coefficients and Faddeev–LeVerrier intermediates of 0/1
/// adjacency matrices stay far inside `i128` range up to this order.
pub const EXACT_ORDER_CAP: usize = 12;

/// Exact isolation of the adjacency spectral radius.
///
/// Holds the integer characteristic polynomial `det(xI - A)` together with a
/// rational interval `(lo, hi]` that contains the largest real root and no
/// other distinct root; no root exceeds `hi`.
#[derive(Debug, Clone)]
pub struct ExactRadius {
    /// Coefficients of `det(xI - A)`, ascending: `charpoly[j]` multiplies `x^j`.
    charpoly: Vec<i128>,
    /// Sturm chain of the squarefree part of the polynomial.
    sturm: Vec<Vec<BigInt>>,
    /// Sign variations of the chain at +infinity (leading-coefficient signs).
    variations_at_inf: usize,
    lo: BigRational,
    hi: BigRational,
}

impl ExactRadius {
    /// Monic integer characteristic polynomial, ascending by power of `x`.
    pub fn charpoly(&self) -> &[i128] {
        &self.charpoly
    }

    /// The isolating interval `(lo, hi]`.
    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// Nearest-double approximation of the interval midpoint.
    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint()
            .to_f64()
            .expect("midpoint fits in f64 range")
    }

    /// Nearest-double approximation of the interval width.
    pub fn width_f64(&self) -> f64 {
        self.width().to_f64().expect("width fits in f64 range")
    }

    /// Number of distinct roots of the characteristic polynomial strictly
    /// greater than `x` (Sturm count, exact).
    pub fn count_roots_above(&self, x: &BigRational) -> usize {
        self.variations_at(x) - self.variations_at_inf
    }

    /// Exact strict comparison: does the spectral radius exceed `x`?
    pub fn exceeds(&self, x: &BigRational) -> bool {
        self.count_roots_above(x) >= 1
    }

    /// Exact three-way comparison of the spectral radius against `x`.
    pub fn cmp_value(&self, x: &BigRational) -> Ordering {
        if self.exceeds(x) {
            Ordering::Greater
        } else if eval_sign(&self.charpoly_big(), x) == 0 {
            Ordering::Equal
        } else {
            Ordering::Less
        }
    }

    /// Exact equality test: is the spectral radius exactly `x`?
    pub fn is_exactly(&self, x: &BigRational) -> bool {
        self.cmp_value(x) == Ordering::Equal
    }

    fn charpoly_big(&self) -> Vec<BigInt> {
        self.charpoly.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.sturm.iter().map(|p| eval_sign(p, x)))
    }
}

/// Computes the characteristic polynomial and isolates the largest real root
/// to an interval no wider than `width`.
///
/// Bisection runs on exact root counts: the bracket starts just below zero
/// and at `n` (all adjacency eigenvalues lie strictly below `n`), and each
/// step keeps the invariant that the interval `(lo, hi]` contains the largest
/// root while nothing lies above `hi`. The loop also continues past the width
/// target until the interval contains exactly one distinct root.
pub fn exact_radius(g: &Graph, width: &BigRational) -> Result<ExactRadius, SpectralError> {
    if !width.is_positive() {
        return Err(SpectralError::InvalidWidth);
    }
    let n = g.n();
    if n > EXACT_ORDER_CAP {
        return Err(SpectralError::OrderAboveCap {
            n,
            cap: EXACT_ORDER_CAP,
        });
    }
    let charpoly = charpoly_ascending(g)?;
    let poly_big: Vec<BigInt> = charpoly.iter().map(|&c| BigInt::from(c)).collect();
    let sturm = sturm_chain(&squarefree_part(&poly_big));
    let variations_at_inf = variations(sturm.iter().map(|p| sign(p.last().unwrap())));

    let mut radius = ExactRadius {
        charpoly,
        sturm,
        variations_at_inf,
        lo: -BigRational::one(),
        hi: BigRational::from_integer(n.into()),
    };
    let two = BigRational::from_integer(2.into());
    loop {
        let in_interval = radius.variations_at(&radius.lo) - radius.variations_at(&radius.hi);
        if radius.width() <= *width && in_interval == 1 {
            return Ok(radius);
        }
        let mid = (&radius.lo + &radius.hi) / &two;
        if radius.count_roots_above(&mid) >= 1 {
            radius.lo = mid;
        } else {
            radius.hi = mid;
        }
    }
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier
/// recurrence in checked `i128`, returned ascending by power.
fn charpoly_ascending(g: &Graph) -> Result<Vec<i128>, SpectralError> {
    let n = g.n();
    let overflow = || SpectralError::CoefficientOverflow(n);
    let mut a = vec![vec![0i128; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    // descending[k] multiplies x^(n-k)
    let mut descending = vec![0i128; n + 1];
    descending[0] = 1;
    let mut m = a.clone();
    for (k, coeff) in descending.iter_mut().enumerate().skip(1) {
        let mut tr = 0i128;
        for (i, row) in m.iter().enumerate() {
            tr = tr.checked_add(row[i]).ok_or_else(overflow)?;
        }
        debug_assert_eq!(
            tr % k as i128,
            0,
            "Faddeev-LeVerrier trace division is exact"
        );
        let c = -(tr / k as i128);
        *coeff = c;
        if k < n {
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = row[i].checked_add(c).ok_or_else(overflow)?;
            }
            m = checked_mat_mul(&a, &m).ok_or_else(overflow)?;
        }
    }
    descending.reverse();
    Ok(descending)
}

fn checked_mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Option<Vec<Vec<i128>>> {
    let n = a.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j].checked_add(aik.checked_mul(b[k][j])?)?;
            }
        }
    }
    Some(out)
}

// --- integer polynomial helpers -------------------------------------------
//
// Polynomials are `Vec<BigInt>` ascending by power, trimmed (no trailing
// zeros); the empty vector is the zero polynomial.

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sign(x: &BigInt) -> i8 {
    match x.sign() {
        num::bigint::Sign::Minus => -1,
        num::bigint::Sign::NoSign => 0,
        num::bigint::Sign::Plus => 1,
    }
}

/// Sign of `p(x)` for rational `x`, via the homogenized integer value
/// `sum_j p[j] * num^j * den^(d-j)` (the denominator of `x` is positive).
fn eval_sign(p: &[BigInt], x: &BigRational) -> i8 {
    let d = p.len() - 1;
    let (num, den) = (x.numer(), x.denom());
    let mut acc = p[d].clone();
    let mut den_pow = BigInt::one();
    for j in (0..d).rev() {
        den_pow *= den;
        acc = acc * num + &p[j] * &den_pow;
    }
    sign(&acc)
}

fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| c * BigInt::from(j))
        .collect();
    trim(&mut out);
    out
}

/// Positive gcd of the coefficients; zero for the zero polynomial.
fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content, preserving the leading sign.
fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x / &c).collect()
}

fn negated(mut p: Vec<BigInt>) -> Vec<BigInt> {
    for c in &mut p {
        *c = -std::mem::take(c);
    }
    p
}

fn positive_lead(p: Vec<BigInt>) -> Vec<BigInt> {
    match p.last() {
        Some(lc) if lc.is_negative() => negated(p),
        _ => p,
    }
}

/// Pseudo-remainder of `a` by `b`, sign-corrected so the result is a
/// *positive* rational multiple of the true remainder `a mod b` over Q[x].
/// (Each reduction step scales by `lc(b)`; an odd number of scalings by a
/// negative leading coefficient would otherwise flip the sign.)
fn signed_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut flipped = false;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in &mut r {
            *c = &*c * lb;
        }
        if lb.is_negative() {
            flipped = !flipped;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    if flipped {
        negated(r)
    } else {
        r
    }
}

/// Primitive polynomial gcd (Euclid on pseudo-remainders), positive lead.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    while !b.is_empty() {
        let r = primitive(&signed_pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    positive_lead(a)
}

/// Exact quotient `a / b` up to a positive constant, as a primitive
/// polynomial (valid only when `b` divides `a`, which is how it is used:
/// dividing a polynomial by its gcd with its derivative).
fn primitive_quotient(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut q: Vec<BigInt> = Vec::new();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in &mut q {
            *c = &*c * lb;
        }
        let pos = dr - db;
        if q.len() <= pos {
            q.resize(pos + 1, BigInt::zero());
        }
        q[pos] += &lr;
        for c in &mut r {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[pos + i] -= &lr * bc;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    debug_assert!(r.is_empty(), "quotient used on inexact division");
    positive_lead(primitive(&q))
}

/// Squarefree part `p / gcd(p, p')`, primitive with positive lead. Shares the
/// distinct real roots of `p`, which is all Sturm counting needs.
fn squarefree_part(p: &[BigInt]) -> Vec<BigInt> {
    let g = poly_gcd(p, &derivative(p));
    if g.len() == 1 {
        return positive_lead(primitive(p));
    }
    primitive_quotient(p, &g)
}

/// Sturm chain of a squarefree polynomial: `p, p', -rem, ...`, each entry a
/// positive multiple of the classical one, ending at a nonzero constant.
fn sturm_chain(p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut chain = vec![p.to_vec(), derivative(p)];
    while chain.last().unwrap().len() > 1 {
        let k = chain.len();
        let r = signed_pseudo_rem(&chain[k - 2], &chain[k - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(negated(primitive(&r)));
    }
    chain
}

/// Counts sign changes, skipping zeros.
fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn default_width() -> BigRational {
        rat(1, 1_000_000_000_000)
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn p3_charpoly_and_root() {
        // x^3 - 2x, largest root sqrt(2)
        let r = exact_radius(&path(3), &default_width()).unwrap();
        assert_eq!(r.charpoly(), &[0, -2, 0, 1]);
        let mid = r.midpoint_f64();
        assert!((mid - 2f64.sqrt()).abs() < 1e-11);
        assert!(r.exceeds(&rat(14, 10)));
        assert!(!r.exceeds(&rat(15, 10)));
        assert!(!r.is_exactly(&int(1)));
    }

    #[test]
    fn k3_charpoly_and_exact_two() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = exact_radius(&k3, &default_width()).unwrap();
        assert_eq!(r.charpoly(), &[-2, -3, 0, 1]);
        assert!(r.is_exactly(&int(2)));
        assert!(!r.exceeds(&int(2)));
        assert!(r.exceeds(&rat(199, 100)));
        assert_eq!(r.cmp_value(&int(3)), Ordering::Less);
        assert_eq!(r.cmp_value(&int(2)), Ordering::Equal);
        assert_eq!(r.cmp_value(&int(1)), Ordering::Greater);
    }

    #[test]
    fn p4_square_golden_root() {
        // P_4 squared is K_4 minus one edge: x^4 - 5x^2 - 4x,
        // largest root (1 + sqrt(17)) / 2
        let sq = path(4).square();
        let r = exact_radius(&sq, &default_width()).unwrap();
        assert_eq!(r.charpoly(), &[0, -4, -5, 0, 1]);
        let expected = (1.0 + 17f64.sqrt()) / 2.0;
        assert!((r.midpoint_f64() - expected).abs() < 1e-11);
    }

    #[test]
    fn star_has_exact_sqrt_degree() {
        // K_{1,4}: x^5 - 4x^3, radius exactly 2
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let r = exact_radius(&star, &default_width()).unwrap();
        assert_eq!(r.charpoly(), &[0, 0, 0, -4, 0, 1]);
        assert!(r.is_exactly(&int(2)));
    }

    #[test]
    fn repeated_root_still_isolates() {
        // two disjoint edges: (x^2 - 1)^2; the largest root 1 has
        // multiplicity two but counts once
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = exact_radius(&g, &default_width()).unwrap();
        assert_eq!(r.charpoly(), &[1, 0, -2, 0, 1]);
        assert!(r.is_exactly(&int(1)));
        assert_eq!(r.count_roots_above(&int(0)), 1);
    }

    #[test]
    fn edgeless_graph_radius_zero() {
        let g = Graph::from_edges(3, []).unwrap();
        let r = exact_radius(&g, &default_width()).unwrap();
        assert_eq!(r.charpoly(), &[0, 0, 0, 1]);
        assert!(r.is_exactly(&int(0)));
        assert!(!r.exceeds(&int(0)));
    }

    #[test]
    fn singleton_graph() {
        let g = Graph::from_edges(1, []).unwrap();
        let r = exact_radius(&g, &default_width()).unwrap();
        assert_eq!(r.charpoly(), &[0, 1]);
        assert!(r.is_exactly(&int(0)));
    }

    #[test]
    fn interval_invariants() {
        let r = exact_radius(&path(5), &default_width()).unwrap();
        let (lo, hi) = r.interval();
        assert!(r.width() <= default_width());
        assert!(lo < hi);
        // exactly one distinct root in (lo, hi], none above hi
        assert_eq!(r.count_roots_above(lo), 1);
        assert_eq!(r.count_roots_above(hi), 0);
    }

    #[test]
    fn order_cap_enforced() {
        let big = path(13);
        assert!(matches!(
            exact_radius(&big, &default_width()),
            Err(SpectralError::OrderAboveCap { n: 13, cap: 12 })
        ));
        // exactly at the cap is fine
        assert!(exact_radius(&path(12), &default_width()).is_ok());
    }

    #[test]
    fn rejects_nonpositive_width() {
        assert!(matches!(
            exact_radius(&path(3), &int(0)),
            Err(SpectralError::InvalidWidth)
        ));
    }

    #[test]
    fn sturm_chain_of_cubic() {
        // x^3 - x: chain is x^3 - x, 3x^2 - 1, x, 1 (up to positive factors)
        let p: Vec<BigInt> = [0, -1, 0, 1].map(BigInt::from).to_vec();
        let chain = sturm_chain(&p);
        assert_eq!(chain.len(), 4);
        assert_eq!(chain[2], [0, 1].map(BigInt::from).to_vec());
        assert_eq!(chain[3], vec![BigInt::from(1)]);
        // roots in (0, 2] -> just 1; in (-2, 0] -> -1 and 0
        let v = |x: &BigRational| variations(chain.iter().map(|q| eval_sign(q, x)));
        assert_eq!(v(&int(0)) - v(&int(2)), 1);
        assert_eq!(v(&int(-2)) - v(&int(0)), 2);
    }
}
