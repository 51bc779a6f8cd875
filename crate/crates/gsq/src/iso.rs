//! Canonical forms for isomorphism-class deduplication, subgraph-containment
//! testing, and search for minimal forbidden subgraphs.
//!
//! Canonicalization is refinement-then-backtracking: vertices are first
//! partitioned by degree and distance profile, the partition is refined to
//! stability by neighbor-cell signatures, and remaining symmetry is broken by
//! individualizing one vertex per non-singleton cell. The canonical labeling
//! is the one whose packed upper-triangle adjacency bits are minimal;
//! automorphisms discovered from equal-bits leaves prune symmetric branches.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::rational::BigRational;
use num::{Signed, ToPrimitive};
use rayon::prelude::*;
use thiserror::Error;

use crate::enumerate::{all_trees, all_unicyclic, EnumerateError};
use crate::graph::Graph;
use crate::graph6::from_graph6;
use crate::spectral::{exact_radius, spectral_radius, SpectralError, DEFAULT_TOL, EXACT_ORDER_CAP};

/// Largest vertex count accepted by the canonical-labeling search.
pub const CANONICAL_ORDER_CAP: usize = 16;

/// Margin around a forbidden-subgraph threshold below which a floating-point
/// radius is not trusted; inside it the exact oracle must decide, and above
/// the exact oracle's order cap the classification fails loudly.
const FLOAT_DECISION_GUARD: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum IsoError {
    #[error("canonical labeling capped at n <= {cap}, got n = {n}")]
    OrderAboveCap { n: usize, cap: usize },
    #[error("forbidden-subgraph threshold must be positive")]
    NonPositiveThreshold,
    #[error("radius of {graph6} lies within {guard:e} of the threshold and the order exceeds the exact oracle cap")]
    UndecidedBoundary { graph6: String, guard: f64 },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// A canonical graph6 string: equal bytes exactly when the graphs are
/// isomorphic (within the order cap).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Decodes the canonically labeled graph.
    pub fn graph(&self) -> Graph {
        from_graph6(&self.0).expect("canonical bytes are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Canonical relabeling of `g`, invariant under input permutation.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, IsoError> {
    let key = canonical_key(g)?;
    Ok(CanonicalForm(crate::graph6::to_graph6(&graph_from_key(
        g.n(),
        key,
    ))))
}

/// The packed adjacency bits of the canonical labeling: upper triangle in
/// column order, first pair at the highest bit. At fixed order, equal keys
/// exactly when isomorphic; numeric key order matches graph6 byte order.
pub(crate) fn canonical_key(g: &Graph) -> Result<u128, IsoError> {
    let n = g.n();
    if n > CANONICAL_ORDER_CAP {
        return Err(IsoError::OrderAboveCap {
            n,
            cap: CANONICAL_ORDER_CAP,
        });
    }
    let mut search = CanonSearch {
        g,
        n,
        best_bits: u128::MAX,
        best_perm: Vec::new(),
        autos: Vec::new(),
    };
    let cells = initial_partition(g);
    search.run(cells, &mut Vec::new());
    Ok(search.best_bits)
}

/// Rebuilds the graph a canonical key encodes.
pub(crate) fn graph_from_key(n: usize, key: u128) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if key >> (127 - idx) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges).expect("key bits encode a valid graph")
}

/// Initial coloring by (degree, sorted distance profile); cells emerge in
/// invariant order, independent of the input labeling.
fn initial_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut groups: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let mut profile: Vec<usize> = g
            .bfs_distances(v)
            .into_iter()
            .map(|d| d.unwrap_or(usize::MAX))
            .collect();
        profile.sort_unstable();
        groups.entry((g.degree(v), profile)).or_default().push(v);
    }
    groups.into_values().collect()
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    best_bits: u128,
    best_perm: Vec<usize>,
    /// Automorphisms discovered from pairs of leaves with equal bits.
    autos: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    /// Refines the ordered partition to stability: within each cell, vertices
    /// are regrouped by the sorted multiset of their neighbors' cell indices.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let mut sig: Vec<usize> =
                        self.g.neighbors(v).iter().map(|&u| cell_of[u]).collect();
                    sig.sort_unstable();
                    groups.entry(sig).or_default().push(v);
                }
                if groups.len() > 1 {
                    split = true;
                }
                next.extend(groups.into_values());
            }
            *cells = next;
            if !split {
                return;
            }
        }
    }

    /// Adjacency bits of `g` relabeled by `sigma` (position -> vertex).
    fn bits(&self, sigma: &[usize]) -> u128 {
        let mut bits = 0u128;
        let mut idx = 0;
        for v in 1..self.n {
            for u in 0..v {
                if self.g.has_edge(sigma[u], sigma[v]) {
                    bits |= 1 << (127 - idx);
                }
                idx += 1;
            }
        }
        bits
    }

    fn run(&mut self, mut cells: Vec<Vec<usize>>, fixed: &mut Vec<usize>) {
        self.refine(&mut cells);
        if cells.iter().all(|c| c.len() == 1) {
            let sigma: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let bits = self.bits(&sigma);
            match bits.cmp(&self.best_bits) {
                Ordering::Less => {
                    self.best_bits = bits;
                    self.best_perm = sigma;
                }
                Ordering::Equal => {
                    // two labelings with identical images compose to an
                    // automorphism: best_perm[p] -> sigma[p]
                    let mut pi = vec![0usize; self.n];
                    for p in 0..self.n {
                        pi[self.best_perm[p]] = sigma[p];
                    }
                    self.autos.push(pi);
                }
                Ordering::Greater => {}
            }
            return;
        }
        let tidx = cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("non-singleton cell exists");
        let target = cells[tidx].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if self.in_tried_orbit(v, &tried, fixed) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == tidx {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            fixed.push(v);
            self.run(child, fixed);
            fixed.pop();
        }
    }

    /// True when some known automorphism fixing every individualized vertex
    /// maps `v` into the orbit of an already-explored sibling; such branches
    /// reproduce bit-identical leaves and are skipped.
    fn in_tried_orbit(&self, v: usize, tried: &[usize], fixed: &[usize]) -> bool {
        if tried.is_empty() || self.autos.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for pi in &self.autos {
            if fixed.iter().all(|&f| pi[f] == f) {
                for (x, &px) in pi.iter().enumerate() {
                    uf.union(x, px);
                }
            }
        }
        let root = uf.find(v);
        tried.iter().any(|&u| uf.find(u) == root)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Does `host` contain `pattern` as an ordinary (not necessarily induced)
/// subgraph? True exactly when some injective vertex map carries every
/// pattern edge to a host edge.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    let (hn, pn) = (host.n(), pattern.n());
    if pn > hn || pattern.edge_count() > host.edge_count() {
        return false;
    }
    // k-th largest pattern degree must not exceed k-th largest host degree
    let hd = host.degree_sequence();
    let pd = pattern.degree_sequence();
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return false;
    }
    let order = embedding_order(pattern);
    let mut pos = vec![usize::MAX; pn];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    // pattern neighbors already placed when position k is reached
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            pattern
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| pos[u] < pos[v])
                .collect()
        })
        .collect();
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; hn];
    place(host, pattern, &order, &earlier, 0, &mut map, &mut used)
}

/// Most-constrained-first vertex order: start at maximum degree, then prefer
/// vertices with the most already-ordered neighbors.
fn embedding_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = pattern.neighbors(v).iter().filter(|&&u| placed[u]).count();
                (anchored, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

fn place(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    earlier: &[Vec<usize>],
    k: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return true;
    }
    let pv = order[k];
    let try_vertex = |u: usize, map: &mut Vec<usize>, used: &mut Vec<bool>| -> bool {
        if used[u] || host.degree(u) < pattern.degree(pv) {
            return false;
        }
        if !earlier[k].iter().all(|&e| host.has_edge(u, map[e])) {
            return false;
        }
        map[pv] = u;
        used[u] = true;
        if place(host, pattern, order, earlier, k + 1, map, used) {
            return true;
        }
        used[u] = false;
        false
    };
    if let Some(&anchor) = earlier[k].first() {
        // candidates must be host-adjacent to the anchor's image
        let anchored_to = map[anchor];
        for &u in host.neighbors(anchored_to) {
            if try_vertex(u, map, used) {
                return true;
            }
        }
    } else {
        for u in 0..host.n() {
            if try_vertex(u, map, used) {
                return true;
            }
        }
    }
    false
}

/// Graph class searched by [`minimal_forbidden`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Tree,
    Unicyclic,
}

/// How threshold membership is decided.
///
/// `Strict` keeps graphs with `rho(G^2) > t`; `Proper` keeps `rho(G^2) >= t`,
/// which matches arguments that discard any graph *properly* containing a
/// member (a graph sitting exactly at the threshold, such as the 5-vertex
/// star at `t = 4`, is forbidden in `Proper` mode but not in `Strict`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ForbiddenMode {
    #[default]
    Strict,
    Proper,
}

/// All graphs in the class, up to order `n_max`, whose squares pass the
/// threshold test and that contain no smaller passing graph as a subgraph.
///
/// The result is an antichain under subgraph containment, ordered by
/// increasing order and then canonical bytes. Threshold comparisons are made
/// by the exact oracle wherever the order permits; beyond that cap a
/// floating-point radius is accepted only outside a guard band around the
/// threshold.
pub fn minimal_forbidden(
    class: GraphClass,
    threshold: &BigRational,
    n_max: usize,
    mode: ForbiddenMode,
) -> Result<Vec<Graph>, IsoError> {
    if !threshold.is_positive() {
        return Err(IsoError::NonPositiveThreshold);
    }
    let n_min = match class {
        GraphClass::Tree => 1,
        GraphClass::Unicyclic => 3,
    };
    let mut minimal: Vec<Graph> = Vec::new();
    for n in n_min..=n_max {
        let stream = match class {
            GraphClass::Tree => all_trees(n)?,
            GraphClass::Unicyclic => all_unicyclic(n, None)?,
        };
        // graphs of equal order in one class cannot properly contain each
        // other, so candidates at order n only need screening against the
        // minimal set found at smaller orders
        let fresh = stream
            .graphs()
            .par_iter()
            .map(|g| -> Result<Option<Graph>, IsoError> {
                if minimal.iter().any(|m| contains_subgraph(g, m)) {
                    return Ok(None);
                }
                Ok(passes_threshold(g, threshold, mode)?.then(|| g.clone()))
            })
            .collect::<Result<Vec<Option<Graph>>, _>>()?;
        minimal.extend(fresh.into_iter().flatten());
    }
    Ok(minimal)
}

fn passes_threshold(
    g: &Graph,
    threshold: &BigRational,
    mode: ForbiddenMode,
) -> Result<bool, IsoError> {
    let sq = g.square();
    if g.n() <= EXACT_ORDER_CAP {
        let exact = exact_radius(&sq, &BigRational::from_integer(1.into()))?;
        return Ok(match mode {
            ForbiddenMode::Strict => exact.exceeds(threshold),
            ForbiddenMode::Proper => exact.cmp_value(threshold) != Ordering::Less,
        });
    }
    let rho = spectral_radius(&sq, DEFAULT_TOL)?.radius;
    let t = threshold.to_f64().expect("threshold fits in f64");
    if (rho - t).abs() <= FLOAT_DECISION_GUARD {
        return Err(IsoError::UndecidedBoundary {
            graph6: crate::graph6::to_graph6(g),
            guard: FLOAT_DECISION_GUARD,
        });
    }
    Ok(match mode {
        ForbiddenMode::Strict | ForbiddenMode::Proper => rho > t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, cycle_star, path, star, star_plus, tadpole};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn canon(g: &Graph) -> String {
        canonical_form(g).unwrap().into_string()
    }

    #[test]
    fn permutation_invariance_on_paths_and_cycles() {
        let forward = path(4).unwrap();
        let backward = Graph::from_edges(4, [(3, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(canon(&forward), canon(&backward));
        assert_ne!(canon(&cycle(4).unwrap()), canon(&path(4).unwrap()));
    }

    #[test]
    fn random_relabelings_agree() {
        // a fixed 10-vertex tree, relabeled 100 times
        let t = Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (1, 3),
                (3, 4),
                (4, 5),
                (3, 6),
                (0, 7),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap();
        let reference = canon(&t);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut perm: Vec<usize> = (0..10).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            assert_eq!(canon(&t.permuted(&perm)), reference);
        }
    }

    #[test]
    fn canonical_graph_is_isomorphic_relabeling() {
        let g = tadpole(7).unwrap();
        let cf = canonical_form(&g).unwrap();
        let cg = cf.graph();
        assert_eq!(cg.n(), g.n());
        assert_eq!(cg.degree_sequence(), g.degree_sequence());
        assert_eq!(canon(&cg), cf.as_str());
    }

    #[test]
    fn highly_symmetric_graphs_terminate_quickly() {
        // complete graph and Petersen graph stress the orbit pruning
        let k9 = crate::families::complete(9).unwrap();
        let shifted: Vec<usize> = (0..9).map(|v| (v + 4) % 9).collect();
        assert_eq!(canon(&k9), canon(&k9.permuted(&shifted)));

        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, 5 + i)));
        let petersen = Graph::from_edges(10, edges).unwrap();
        let rotated: Vec<usize> = (0..10)
            .map(|v| if v < 5 { (v + 1) % 5 } else { 5 + (v - 4) % 5 })
            .collect();
        assert_eq!(canon(&petersen), canon(&petersen.permuted(&rotated)));
    }

    #[test]
    fn order_cap_enforced() {
        let p17 = path(17).unwrap();
        assert!(matches!(
            canonical_form(&p17),
            Err(IsoError::OrderAboveCap { n: 17, cap: 16 })
        ));
        assert!(canonical_form(&path(16).unwrap()).is_ok());
    }

    #[test]
    fn subgraph_containment_examples() {
        let k4 = crate::families::complete(4).unwrap();
        assert!(contains_subgraph(&k4, &cycle(3).unwrap()));
        assert!(!contains_subgraph(&path(5).unwrap(), &star(4).unwrap()));
        assert!(!contains_subgraph(&tadpole(6).unwrap(), &star(5).unwrap()));
        assert!(contains_subgraph(
            &cycle_star(6, 3).unwrap(),
            &star(5).unwrap()
        ));
        // reflexivity and a same-order non-example
        let g = star_plus(6).unwrap();
        assert!(contains_subgraph(&g, &g));
        assert!(!contains_subgraph(&cycle(6).unwrap(), &path(7).unwrap()));
        assert!(contains_subgraph(&cycle(6).unwrap(), &path(6).unwrap()));
    }

    #[test]
    fn minimal_forbidden_trees_strict_excludes_boundary_star() {
        let four = BigRational::from_integer(4.into());
        let found = minimal_forbidden(GraphClass::Tree, &four, 7, ForbiddenMode::Strict).unwrap();
        assert!(!found.is_empty());
        let keys: Vec<String> = found.iter().map(canon).collect();
        // the 5-vertex star sits exactly at the threshold: not strictly above
        assert!(!keys.contains(&canon(&star(5).unwrap())));
        // the 6-vertex star is strictly above and contains no smaller member
        assert!(keys.contains(&canon(&star(6).unwrap())));
        // antichain: no member contains another
        for a in &found {
            for b in &found {
                if canon(a) != canon(b) {
                    assert!(!contains_subgraph(a, b));
                }
            }
        }
        // every member is certified strictly above the threshold
        for g in &found {
            let exact = exact_radius(&g.square(), &BigRational::from_integer(1.into())).unwrap();
            assert!(exact.exceeds(&four));
        }
    }

    #[test]
    fn minimal_forbidden_proper_mode_keeps_boundary_star() {
        let four = BigRational::from_integer(4.into());
        let found = minimal_forbidden(GraphClass::Tree, &four, 6, ForbiddenMode::Proper).unwrap();
        let keys: Vec<String> = found.iter().map(canon).collect();
        assert!(keys.contains(&canon(&star(5).unwrap())));
        // anything containing the 5-star is screened out
        assert!(!keys.contains(&canon(&star(6).unwrap())));
    }

    #[test]
    fn minimal_forbidden_rejects_bad_threshold() {
        let zero = BigRational::from_integer(0.into());
        assert!(matches!(
            minimal_forbidden(GraphClass::Tree, &zero, 5, ForbiddenMode::Strict),
            Err(IsoError::NonPositiveThreshold)
        ));
    }
}
