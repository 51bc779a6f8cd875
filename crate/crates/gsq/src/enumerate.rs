//! Exhaustive generation of small graph classes — trees, unicyclic graphs,
//! and connected graphs — one representative per isomorphism class.
//!
//! Trees come from the canonical rooted level-sequence successor rule, then
//! collapse to free trees by canonical form. Unicyclic graphs are trees plus
//! one non-edge; connected graphs grow one vertex at a time, each new vertex
//! attached to a nonempty subset of the previous layer. Every stream is
//! deduplicated and emitted in canonical-byte order, so the output is
//! deterministic regardless of thread count.

use std::fmt;
use std::io::{self, Write};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::iso::{canonical_key, graph_from_key};

/// Largest order for tree enumeration.
pub const TREE_ORDER_CAP: usize = 14;
/// Largest order for unicyclic enumeration.
pub const UNICYCLIC_ORDER_CAP: usize = 12;
/// Largest order for connected-graph enumeration.
pub const CONNECTED_ORDER_CAP: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("{class} enumeration supports {min} <= n <= {max}, got n = {n}")]
    OrderOutOfRange {
        class: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("girth filter must satisfy 3 <= g <= n, got g = {girth} at n = {n}")]
    GirthOutOfRange { girth: usize, n: usize },
    #[error("tree diameter must satisfy 2 <= d <= n - 1, got d = {d} at n = {n}")]
    DiameterOutOfRange { d: usize, n: usize },
}

/// Which class a stream enumerates, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamClass {
    Trees { n: usize },
    TreesWithDiameter { n: usize, d: usize },
    Unicyclic { n: usize, girth: Option<usize> },
    Connected { n: usize },
}

impl fmt::Display for StreamClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StreamClass::Trees { n } => write!(f, "trees(n={n})"),
            StreamClass::TreesWithDiameter { n, d } => write!(f, "trees(n={n},d={d})"),
            StreamClass::Unicyclic { n, girth: None } => write!(f, "unicyclic(n={n})"),
            StreamClass::Unicyclic { n, girth: Some(g) } => write!(f, "unicyclic(n={n},g={g})"),
            StreamClass::Connected { n } => write!(f, "connected(n={n})"),
        }
    }
}

/// A fully materialized enumeration: canonically labeled representatives in
/// canonical-byte order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationStream {
    class: StreamClass,
    graphs: Vec<Graph>,
}

impl EnumerationStream {
    pub fn class(&self) -> StreamClass {
        self.class
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }

    /// Writes the stream as graph6, one graph per line.
    pub fn write_graph6<W: Write>(&self, out: &mut W) -> io::Result<()> {
        for g in &self.graphs {
            writeln!(out, "{}", to_graph6(g))?;
        }
        Ok(())
    }
}

impl IntoIterator for EnumerationStream {
    type Item = Graph;
    type IntoIter = std::vec::IntoIter<Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.into_iter()
    }
}

impl<'a> IntoIterator for &'a EnumerationStream {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

/// Sorts candidate canonical keys, drops duplicates, and decodes one
/// representative per class. Key order equals graph6 byte order at fixed n.
fn settle(n: usize, mut keys: Vec<u128>) -> Vec<Graph> {
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter().map(|key| graph_from_key(n, key)).collect()
}

/// All free trees on `n` vertices, one per isomorphism class.
pub fn all_trees(n: usize) -> Result<EnumerationStream, EnumerateError> {
    if n == 0 || n > TREE_ORDER_CAP {
        return Err(EnumerateError::OrderOutOfRange {
            class: "tree",
            n,
            min: 1,
            max: TREE_ORDER_CAP,
        });
    }
    let rooted: Vec<Graph> = LevelSequences::new(n)
        .map(|seq| tree_from_levels(&seq))
        .collect();
    let keys: Vec<u128> = rooted
        .par_iter()
        .map(|t| canonical_key(t).expect("tree order within canonical cap"))
        .collect();
    Ok(EnumerationStream {
        class: StreamClass::Trees { n },
        graphs: settle(n, keys),
    })
}

/// All trees on `n` vertices with diameter exactly `d`.
pub fn all_trees_with_diameter(n: usize, d: usize) -> Result<EnumerationStream, EnumerateError> {
    if !(3..=TREE_ORDER_CAP).contains(&n) {
        return Err(EnumerateError::OrderOutOfRange {
            class: "tree",
            n,
            min: 3,
            max: TREE_ORDER_CAP,
        });
    }
    if d < 2 || d > n - 1 {
        return Err(EnumerateError::DiameterOutOfRange { d, n });
    }
    let trees = all_trees(n)?;
    let graphs = trees
        .graphs
        .into_iter()
        .filter(|t| t.diameter() == Some(d))
        .collect();
    Ok(EnumerationStream {
        class: StreamClass::TreesWithDiameter { n, d },
        graphs,
    })
}

/// All unicyclic graphs on `n` vertices, optionally restricted to one girth.
pub fn all_unicyclic(n: usize, girth: Option<usize>) -> Result<EnumerationStream, EnumerateError> {
    if !(3..=UNICYCLIC_ORDER_CAP).contains(&n) {
        return Err(EnumerateError::OrderOutOfRange {
            class: "unicyclic",
            n,
            min: 3,
            max: UNICYCLIC_ORDER_CAP,
        });
    }
    if let Some(g) = girth {
        if g < 3 || g > n {
            return Err(EnumerateError::GirthOutOfRange { girth: g, n });
        }
    }
    let trees = all_trees(n)?;
    // every unicyclic graph is a spanning tree plus exactly one extra edge
    let keys: Vec<u128> = trees
        .graphs
        .par_iter()
        .flat_map_iter(|t| {
            (0..n)
                .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !t.has_edge(u, v))
                .map(|(u, v)| {
                    let g = t.add_edge(u, v).expect("non-edge addition is valid");
                    canonical_key(&g).expect("unicyclic order within canonical cap")
                })
        })
        .collect();
    let mut graphs = settle(n, keys);
    if let Some(g) = girth {
        graphs.retain(|u| u.girth() == Some(g));
    }
    Ok(EnumerationStream {
        class: StreamClass::Unicyclic { n, girth },
        graphs,
    })
}

/// All connected graphs on `n` vertices, one per isomorphism class.
pub fn all_connected(n: usize) -> Result<EnumerationStream, EnumerateError> {
    if n == 0 || n > CONNECTED_ORDER_CAP {
        return Err(EnumerateError::OrderOutOfRange {
            class: "connected",
            n,
            min: 1,
            max: CONNECTED_ORDER_CAP,
        });
    }
    // layer k holds all connected graphs on k vertices; deleting any non-cut
    // vertex of a connected graph lands in the previous layer, so attaching a
    // new vertex to every nonempty subset reaches everything
    let mut layer = vec![Graph::from_edges(1, std::iter::empty()).expect("single vertex")];
    for k in 2..=n {
        let keys: Vec<u128> = layer
            .par_iter()
            .flat_map_iter(|g| {
                let base: Vec<(usize, usize)> = g.edges().collect();
                (1u32..(1u32 << (k - 1))).map(move |mask| {
                    let mut edges = base.clone();
                    edges.extend(
                        (0..k - 1)
                            .filter(|b| mask >> b & 1 == 1)
                            .map(|b| (b, k - 1)),
                    );
                    let cand = Graph::from_edges(k, edges).expect("augmented graph is valid");
                    canonical_key(&cand).expect("connected order within canonical cap")
                })
            })
            .collect();
        layer = settle(k, keys);
    }
    Ok(EnumerationStream {
        class: StreamClass::Connected { n },
        graphs: layer,
    })
}

/// Canonical rooted-tree level sequences on `n` vertices, lexicographically
/// decreasing, beginning with the path `0,1,..,n-1` and ending at the star
/// `0,1,..,1`.
struct LevelSequences {
    current: Option<Vec<usize>>,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        LevelSequences {
            current: Some((0..n).collect()),
        }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let seq = self.current.take()?;
        // successor: find the rightmost level > 1, retreat it by repeating
        // the pattern that starts at its new parent
        if let Some(p) = (0..seq.len()).rev().find(|&i| seq[i] > 1) {
            let q = (0..p)
                .rev()
                .find(|&i| seq[i] == seq[p] - 1)
                .expect("parent level precedes");
            let mut next = seq.clone();
            for i in p..next.len() {
                next[i] = next[i - (p - q)];
            }
            self.current = Some(next);
        }
        Some(seq)
    }
}

/// Decodes a level sequence: each vertex hangs off the nearest earlier vertex
/// one level up.
fn tree_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for j in 1..n {
        let parent = (0..j)
            .rev()
            .find(|&i| levels[i] + 1 == levels[j])
            .expect("canonical level sequence");
        edges.push((parent, j));
    }
    Graph::from_edges(n, edges).expect("level sequence encodes a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, star};
    use crate::graph6::from_graph6;
    use crate::iso::canonical_form;

    #[test]
    fn free_tree_counts_match_known_table() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(all_trees(n).unwrap().len(), want, "trees on {n} vertices");
        }
    }

    #[test]
    fn rooted_sequence_counts_match_known_table() {
        let expected = [1usize, 1, 2, 4, 9, 20, 48, 115, 286, 719];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                LevelSequences::new(n).count(),
                want,
                "rooted trees on {n} vertices"
            );
        }
    }

    #[test]
    fn unicyclic_counts_match_known_table() {
        let expected = [1usize, 2, 5, 13, 33, 89];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 3;
            assert_eq!(
                all_unicyclic(n, None).unwrap().len(),
                want,
                "unicyclic on {n} vertices"
            );
        }
    }

    #[test]
    fn connected_counts_match_known_table() {
        let expected = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                all_connected(n).unwrap().len(),
                want,
                "connected on {n} vertices"
            );
        }
    }

    #[test]
    fn diameter_slices_partition_the_trees() {
        let total = all_trees(8).unwrap().len();
        let by_diameter: usize = (2..=7)
            .map(|d| all_trees_with_diameter(8, d).unwrap().len())
            .sum();
        assert_eq!(by_diameter, total);
        assert_eq!(all_trees_with_diameter(6, 3).unwrap().len(), 2);
    }

    #[test]
    fn extreme_diameters_are_star_and_path() {
        let canon = |g: &Graph| canonical_form(g).unwrap().into_string();
        for n in 4..=9 {
            let stars = all_trees_with_diameter(n, 2).unwrap();
            assert_eq!(stars.len(), 1);
            assert_eq!(canon(&stars.graphs()[0]), canon(&star(n).unwrap()));
            let paths = all_trees_with_diameter(n, n - 1).unwrap();
            assert_eq!(paths.len(), 1);
            assert_eq!(canon(&paths.graphs()[0]), canon(&path(n).unwrap()));
        }
    }

    #[test]
    fn girth_slices_partition_the_unicyclic_graphs() {
        let canon = |g: &Graph| canonical_form(g).unwrap().into_string();
        let total = all_unicyclic(7, None).unwrap().len();
        let by_girth: usize = (3..=7)
            .map(|g| all_unicyclic(7, Some(g)).unwrap().len())
            .sum();
        assert_eq!(by_girth, total);
        let full_girth = all_unicyclic(6, Some(6)).unwrap();
        assert_eq!(full_girth.len(), 1);
        assert_eq!(canon(&full_girth.graphs()[0]), canon(&cycle(6).unwrap()));
    }

    #[test]
    fn streams_are_canonically_sorted_and_roundtrip() {
        let stream = all_trees(7).unwrap();
        let mut bytes = Vec::new();
        stream.write_graph6(&mut bytes).unwrap();
        let lines: Vec<&str> = std::str::from_utf8(&bytes).unwrap().lines().collect();
        assert_eq!(lines.len(), stream.len());
        let mut sorted = lines.clone();
        sorted.sort_unstable();
        assert_eq!(lines, sorted, "emission order is canonical-byte order");
        for (line, g) in lines.iter().zip(stream.iter()) {
            assert_eq!(&from_graph6(line).unwrap(), g);
        }
    }

    #[test]
    fn every_enumerated_graph_lies_in_its_class() {
        for g in all_trees(8).unwrap().iter() {
            assert!(g.is_tree());
        }
        for g in all_unicyclic(7, None).unwrap().iter() {
            assert!(g.is_unicyclic());
        }
        for (g, class) in all_unicyclic(7, Some(4))
            .unwrap()
            .iter()
            .map(|g| (g, g.girth()))
        {
            assert!(g.is_unicyclic());
            assert_eq!(class, Some(4));
        }
        for g in all_connected(6).unwrap().iter() {
            assert!(g.is_connected());
        }
    }

    #[test]
    fn range_validation() {
        assert!(matches!(
            all_trees(15),
            Err(EnumerateError::OrderOutOfRange { class: "tree", .. })
        ));
        assert!(matches!(
            all_unicyclic(13, None),
            Err(EnumerateError::OrderOutOfRange {
                class: "unicyclic",
                ..
            })
        ));
        assert!(matches!(
            all_connected(10),
            Err(EnumerateError::OrderOutOfRange {
                class: "connected",
                ..
            })
        ));
        assert!(matches!(
            all_unicyclic(8, Some(2)),
            Err(EnumerateError::GirthOutOfRange { girth: 2, n: 8 })
        ));
        assert!(matches!(
            all_trees_with_diameter(6, 6),
            Err(EnumerateError::DiameterOutOfRange { d: 6, n: 6 })
        ));
    }
}
