//! Simple undirected graphs with dense integer labels, plus the metric and
//! surgery operations the rest of the crate builds on: BFS distances, powers,
//! girth, coalescence and branch relocation.

use num::rational::Ratio;
use thiserror::Error;

/// Rational number used for exact degree statistics.
pub type Rational = Ratio<i64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0},{1}) has endpoint out of range for n={2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("vertex {0} out of range for n={1}")]
    InvalidVertex(usize, usize),
    #[error("graph power requires k >= 1")]
    ZeroPower,
    #[error("relocation endpoints must differ")]
    SameVertex,
    #[error("no edge ({0},{1}) to remove")]
    MissingEdge(usize, usize),
}

/// A simple undirected graph on vertices `0..n`.
///
/// No self-loops, no parallel edges. Neighbor lists are kept sorted, so edge
/// queries are `O(log d)` and iteration order is deterministic. Instances are
/// immutable; the surgery operations return new graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating symmetric pairs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Iterates edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Returns a copy with edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if u >= self.n || v >= self.n {
            return Err(GraphError::EndpointOutOfRange(u, v, self.n));
        }
        let mut g = self.clone();
        if let Err(pos) = g.adj[u].binary_search(&v) {
            g.adj[u].insert(pos, v);
            let pos = g.adj[v].binary_search(&u).unwrap_err();
            g.adj[v].insert(pos, u);
        }
        Ok(g)
    }

    /// Returns a copy with edge `{u, v}` removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        let pos = g.adj[u].binary_search(&v).unwrap();
        g.adj[u].remove(pos);
        let pos = g.adj[v].binary_search(&u).unwrap();
        g.adj[v].remove(pos);
        Ok(g)
    }

    /// Returns a copy with vertex `v` deleted; vertices above `v` shift down.
    pub fn remove_vertex(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::InvalidVertex(v, self.n));
        }
        if self.n == 1 {
            return Err(GraphError::EmptyGraph);
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges = self
            .edges()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (shift(a), shift(b)));
        Graph::from_edges(self.n - 1, edges)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, edges).expect("permutation preserves validity")
    }

    /// BFS distances from `start`; `None` where unreachable.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances.
    pub fn distances(&self) -> DistanceMatrix {
        let rows = (0..self.n).map(|s| self.bfs_distances(s)).collect();
        DistanceMatrix { n: self.n, rows }
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// The `k`-th power: same vertices, `u ~ v` iff `1 <= dist(u,v) <= k`.
    pub fn power(&self, k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::ZeroPower);
        }
        let mut edges = Vec::new();
        for u in 0..self.n {
            let dist = self.bfs_distances(u);
            for (v, dist_v) in dist.iter().enumerate().skip(u + 1) {
                if matches!(dist_v, Some(d) if (1..=k).contains(d)) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, edges)
    }

    /// The square `G^2`, shorthand for `power(2)`.
    pub fn square(&self) -> Self {
        self.power(2).expect("k=2 is valid")
    }

    /// Maximum finite distance; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// BFS from every vertex; a non-tree edge `{u, w}` seen from start `s`
    /// witnesses a closed walk of length `dist(s,u) + dist(s,w) + 1`, and the
    /// minimum over all starts is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let cycle = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// Maximum degree and exact average degree `2|E|/n`.
    pub fn degree_stats(&self) -> (usize, Rational) {
        let max = (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0);
        let avg = Rational::new(2 * self.edge_count() as i64, self.n as i64);
        (max, avg)
    }

    pub fn is_regular(&self) -> bool {
        self.adj.iter().all(|l| l.len() == self.adj[0].len())
    }

    /// Connected with `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Connected with exactly `n` edges (one cycle).
    pub fn is_unicyclic(&self) -> bool {
        self.edge_count() == self.n && self.is_connected()
    }

    /// Degree sequence in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<_> = self.adj.iter().map(Vec::len).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }
}

/// All-pairs hop-count table.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    rows: Vec<Vec<Option<usize>>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`; `None` when unreachable.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.rows[u][v]
    }
}

/// Glues `g2` onto `g1` by identifying `g2`'s vertex `v2` with `g1`'s `v1`.
///
/// Labels are deterministic: `g1` keeps `0..n1`; vertex `j` of `g2` maps to
/// `v1` when `j == v2`, otherwise to `n1 + j` (minus one past `v2`). The
/// result has `n1 + n2 - 1` vertices.
pub fn coalesce(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph, GraphError> {
    if v1 >= g1.n() {
        return Err(GraphError::InvalidVertex(v1, g1.n()));
    }
    if v2 >= g2.n() {
        return Err(GraphError::InvalidVertex(v2, g2.n()));
    }
    let n1 = g1.n();
    let map2 = |j: usize| {
        if j == v2 {
            v1
        } else if j < v2 {
            n1 + j
        } else {
            n1 + j - 1
        }
    };
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(u, v)| (map2(u), map2(v))));
    let edges: Vec<_> = edges.collect();
    Graph::from_edges(n1 + g2.n() - 1, edges)
}

/// Attaches `h2` (rooted at `w`) to `h1` at `v_old` and, separately, at
/// `v_new`, returning both graphs under one labeling so per-vertex data such
/// as eigenvector entries can be compared across the pair.
pub fn relocate_branch(
    h1: &Graph,
    v_old: usize,
    v_new: usize,
    h2: &Graph,
    w: usize,
) -> Result<(Graph, Graph), GraphError> {
    if v_old == v_new {
        return Err(GraphError::SameVertex);
    }
    let at_old = coalesce(h1, v_old, h2, w)?;
    let at_new = coalesce(h1, v_new, h2, w)?;
    Ok((at_old, at_new))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
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
    fn from_edges_triangle() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(2, 1));
    }

    #[test]
    fn from_edges_dedups_symmetric_pair() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn from_edges_rejects_self_loop_and_range() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, [(0, 5)]),
            Err(GraphError::EndpointOutOfRange(0, 5, 2))
        );
        assert_eq!(Graph::from_edges(0, []), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn distances_path_cycle_disconnected() {
        assert_eq!(path(4).distances().get(0, 3), Some(3));
        assert_eq!(cycle(5).distances().get(0, 2), Some(2));
        let two = Graph::from_edges(2, []).unwrap();
        assert_eq!(two.distances().get(0, 1), None);
    }

    #[test]
    fn power_of_path_and_cycle() {
        let p4sq = path(4).square();
        let expected = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)]).unwrap();
        assert_eq!(p4sq, expected);
        assert_eq!(cycle(5).square(), complete(5));
        assert_eq!(path(6).power(1).unwrap(), path(6));
        assert_eq!(path(6).power(0), Err(GraphError::ZeroPower));
    }

    #[test]
    fn power_at_diameter_is_complete() {
        for g in [path(5), cycle(7), star(6)] {
            let d = g.diameter().unwrap();
            assert_eq!(g.power(d).unwrap(), complete(g.n()));
        }
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(star(6).diameter(), Some(2));
        assert_eq!(path(5).diameter(), Some(4));
        assert_eq!(complete(4).diameter(), Some(1));
        let two = Graph::from_edges(2, []).unwrap();
        assert_eq!(two.diameter(), None);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(7).girth(), Some(7));
        // star plus a leaf-leaf edge has a triangle
        let sp = star(5).add_edge(1, 2).unwrap();
        assert_eq!(sp.girth(), Some(3));
        assert_eq!(path(6).girth(), None);
        assert_eq!(cycle(4).girth(), Some(4));
        // triangle with pendant: shortest cycle still 3 from every start
        let paw = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert_eq!(paw.girth(), Some(3));
    }

    #[test]
    fn coalesce_tadpole_and_stars() {
        let tad = coalesce(&cycle(3), 0, &path(3), 0).unwrap();
        assert_eq!(tad.n(), 5);
        assert_eq!(tad.degree_sequence(), vec![3, 2, 2, 2, 1]);

        let s7 = coalesce(&star(4), 0, &star(4), 0).unwrap();
        assert_eq!(s7, star(7));

        // order arithmetic
        let g = coalesce(&cycle(4), 2, &path(5), 3).unwrap();
        assert_eq!(g.n(), 4 + 5 - 1);
    }

    #[test]
    fn coalesce_rejects_bad_vertex() {
        assert!(matches!(
            coalesce(&path(3), 7, &path(3), 0),
            Err(GraphError::InvalidVertex(7, 3))
        ));
    }

    #[test]
    fn relocate_branch_pair() {
        let (a, b) = relocate_branch(&path(4), 3, 1, &path(2), 0).unwrap();
        assert_eq!(a.n(), 5);
        assert_eq!(b.n(), 5);
        // attaching P_2 at an endpoint of P_4 yields P_5
        assert_eq!(a.degree_sequence(), vec![2, 2, 2, 1, 1]);
        assert_eq!(b.degree_sequence(), vec![3, 2, 1, 1, 1]);
        assert!(matches!(
            relocate_branch(&path(4), 1, 1, &path(2), 0),
            Err(GraphError::SameVertex)
        ));
    }

    #[test]
    fn degree_stats_examples() {
        assert_eq!(cycle(6).degree_stats(), (2, Rational::from_integer(2)));
        assert_eq!(star(5).degree_stats(), (4, Rational::new(8, 5)));
        // the square of a long enough cycle is 4-regular
        let c6sq = cycle(6).square();
        assert_eq!(c6sq.degree_stats(), (4, Rational::from_integer(4)));
        assert!(c6sq.is_regular());
    }

    #[test]
    fn remove_vertex_shifts_labels() {
        let g = path(4).remove_vertex(1).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn tree_and_unicyclic_predicates() {
        assert!(path(5).is_tree());
        assert!(!cycle(5).is_tree());
        assert!(cycle(5).is_unicyclic());
        assert!(!path(5).is_unicyclic());
    }
}
