//! Constructors for the named graph families whose squares realize spectral
//! extremes: paths, cycles, stars, complete graphs, stars with one extra
//! edge, tadpoles, cycle-stars, brooms, and three-legged spiders.
//!
//! Labelings are deterministic and frozen, so per-vertex data (Perron
//! entries, graph6 strings) is stable across runs:
//!
//! - `path(n)`: edges `0-1-...-(n-1)`;
//! - `cycle(n)`: path labeling plus the wrap edge `{n-1, 0}`;
//! - `star(n)` / `complete(n)`: center `0` / all pairs;
//! - `star_plus(n)`: star plus the edge `{1, 2}`;
//! - `tadpole(n)`: triangle `{0,1,2}` with the path `2-3-...-(n-1)` grown
//!   from vertex `2`;
//! - `cycle_star(n, g)`: cycle `0..g-1` with `n-g` leaves on vertex `0`;
//! - `broom(n, d, i)`: path `0..d` with `n-d-1` leaves on vertex `i-1`
//!   (the `i`-th path vertex, counted from one as in the usual statements);
//! - `spider(a, b, c)`: center `0`, three pendant paths in consecutive label
//!   ranges.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{coalesce, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{0} requires n >= {1}, got n = {2}")]
    OrderBelowMinimum(&'static str, usize, usize),
    #[error("cycle_star requires 3 <= g <= n, got g = {g} with n = {n}")]
    GirthOutOfRange { g: usize, n: usize },
    #[error("broom requires d >= 2, 2 <= i <= d, n >= d + 1; got n = {n}, d = {d}, i = {i}")]
    BroomParameters { n: usize, d: usize, i: usize },
    #[error("cannot parse family spec {0:?}: {1}")]
    Parse(String, String),
}

/// The path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderBelowMinimum("path", 1, n));
    }
    Ok(Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).expect("valid path edges"))
}

/// The cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderBelowMinimum("cycle", 3, n));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle edges"))
}

/// The star with center `0` and leaves `1..n`.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderBelowMinimum("star", 1, n));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("valid star edges"))
}

/// The complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderBelowMinimum("complete", 1, n));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges).expect("valid complete edges"))
}

/// The star on `n` vertices with two of its leaves joined: unicyclic, girth
/// 3, and diameter 2 once `n >= 4`.
pub fn star_plus(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderBelowMinimum("star_plus", 3, n));
    }
    Ok(star(n)?.add_edge(1, 2).expect("leaves 1 and 2 exist"))
}

/// The triangle with a pendant path: cycle `{0,1,2}` coalesced with a path
/// on `n - 2` vertices at vertex `2`, so `2-3-...-(n-1)` is the tail.
pub fn tadpole(n: usize) -> Result<Graph, FamilyError> {
    if n < 4 {
        return Err(FamilyError::OrderBelowMinimum("tadpole", 4, n));
    }
    let g = coalesce(&cycle(3)?, 2, &path(n - 2)?, 0).expect("valid coalescence");
    Ok(g)
}

/// A cycle of length `g` with `n - g` pendant leaves on vertex `0` (a star
/// whose center is identified with a cycle vertex).
pub fn cycle_star(n: usize, g: usize) -> Result<Graph, FamilyError> {
    if !(3..=n).contains(&g) {
        return Err(FamilyError::GirthOutOfRange { g, n });
    }
    let gr = coalesce(&cycle(g)?, 0, &star(n - g + 1)?, 0).expect("valid coalescence");
    Ok(gr)
}

/// A path on `d + 1` vertices (labels `0..d`) with `n - d - 1` pendant
/// leaves on its `i`-th vertex, i.e. label `i - 1`. Diameter stays `d` for
/// every admissible attachment point `2 <= i <= d`.
pub fn broom(n: usize, d: usize, i: usize) -> Result<Graph, FamilyError> {
    if d < 2 || i < 2 || i > d || n < d + 1 {
        return Err(FamilyError::BroomParameters { n, d, i });
    }
    let g = coalesce(&path(d + 1)?, i - 1, &star(n - d)?, 0).expect("valid coalescence");
    Ok(g)
}

/// Three pendant paths of edge-lengths `a`, `b`, `c` sharing the center `0`;
/// order `a + b + c + 1`. Zero-length legs are allowed, so paths and stars
/// are degenerate spiders.
pub fn spider(a: usize, b: usize, c: usize) -> Result<Graph, FamilyError> {
    let mut edges = Vec::new();
    let mut next = 1;
    for leg in [a, b, c] {
        let mut prev = 0;
        for _ in 0..leg {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Graph::from_edges(a + b + c + 1, edges).expect("valid spider edges"))
}

/// A parsed family name with parameters; the CLI's way of naming graphs.
///
/// Canonical text form is `family:key=value,...` with the keys in the order
/// shown by `Display`, e.g. `broom:n=9,d=4,i=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    StarPlus { n: usize },
    Complete { n: usize },
    Tadpole { n: usize },
    CycleStar { n: usize, g: usize },
    Broom { n: usize, d: usize, i: usize },
    Spider { a: usize, b: usize, c: usize },
}

impl FamilySpec {
    /// Instantiates the graph this spec names.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Star { n } => star(n),
            FamilySpec::StarPlus { n } => star_plus(n),
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::Tadpole { n } => tadpole(n),
            FamilySpec::CycleStar { n, g } => cycle_star(n, g),
            FamilySpec::Broom { n, d, i } => broom(n, d, i),
            FamilySpec::Spider { a, b, c } => spider(a, b, c),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path:n={n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:n={n}"),
            FamilySpec::Star { n } => write!(f, "star:n={n}"),
            FamilySpec::StarPlus { n } => write!(f, "star_plus:n={n}"),
            FamilySpec::Complete { n } => write!(f, "complete:n={n}"),
            FamilySpec::Tadpole { n } => write!(f, "tadpole:n={n}"),
            FamilySpec::CycleStar { n, g } => write!(f, "cycle_star:n={n},g={g}"),
            FamilySpec::Broom { n, d, i } => write!(f, "broom:n={n},d={d},i={i}"),
            FamilySpec::Spider { a, b, c } => write!(f, "spider:a={a},b={b},c={c}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| FamilyError::Parse(s.to_string(), msg.to_string());
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let keys: &[&str] = match name {
            "path" | "cycle" | "star" | "star_plus" | "complete" | "tadpole" => &["n"],
            "cycle_star" => &["n", "g"],
            "broom" => &["n", "d", "i"],
            "spider" => &["a", "b", "c"],
            _ => return Err(err("unknown family name")),
        };
        let mut values = vec![None; keys.len()];
        for part in params.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| err("expected key=value"))?;
            let slot = keys
                .iter()
                .position(|&key| key == k.trim())
                .ok_or_else(|| err("unexpected parameter key"))?;
            if values[slot].is_some() {
                return Err(err("duplicate parameter"));
            }
            let parsed: usize = v
                .trim()
                .parse()
                .map_err(|_| err("parameter is not a non-negative integer"))?;
            values[slot] = Some(parsed);
        }
        let get = |k: &str| {
            let slot = keys.iter().position(|&key| key == k).unwrap();
            values[slot].ok_or_else(|| err("missing parameter"))
        };
        Ok(match name {
            "path" => FamilySpec::Path { n: get("n")? },
            "cycle" => FamilySpec::Cycle { n: get("n")? },
            "star" => FamilySpec::Star { n: get("n")? },
            "star_plus" => FamilySpec::StarPlus { n: get("n")? },
            "complete" => FamilySpec::Complete { n: get("n")? },
            "tadpole" => FamilySpec::Tadpole { n: get("n")? },
            "cycle_star" => FamilySpec::CycleStar {
                n: get("n")?,
                g: get("g")?,
            },
            "broom" => FamilySpec::Broom {
                n: get("n")?,
                d: get("d")?,
                i: get("i")?,
            },
            "spider" => FamilySpec::Spider {
                a: get("a")?,
                b: get("b")?,
                c: get("c")?,
            },
            _ => unreachable!("name validated above"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_families() {
        assert_eq!(path(1).unwrap().n(), 1);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert_eq!(star(4).unwrap().degree_sequence(), vec![3, 1, 1, 1]);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(path(0), Err(FamilyError::OrderBelowMinimum("path", 1, 0)));
        assert_eq!(cycle(2), Err(FamilyError::OrderBelowMinimum("cycle", 3, 2)));
    }

    #[test]
    fn star_plus_shape() {
        assert_eq!(star_plus(3).unwrap(), cycle(3).unwrap());
        for n in 4..9 {
            let g = star_plus(n).unwrap();
            assert!(g.is_unicyclic());
            assert_eq!(g.girth(), Some(3));
            assert_eq!(g.diameter(), Some(2));
            assert_eq!(g.degree_sequence()[0], n - 1);
        }
        assert!(star_plus(2).is_err());
    }

    #[test]
    fn tadpole_shape() {
        let t4 = tadpole(4).unwrap();
        assert_eq!(t4.degree_sequence(), vec![3, 2, 2, 1]);
        assert_eq!(t4.girth(), Some(3));
        for n in 5..10 {
            let t = tadpole(n).unwrap();
            assert_eq!(t.n(), n);
            assert!(t.is_unicyclic());
            assert_eq!(t.girth(), Some(3));
            let mut expected = vec![2; n];
            expected[0] = 3;
            expected[n - 1] = 1;
            assert_eq!(t.degree_sequence(), expected);
            // the tail really is 2-3-...-(n-1)
            for v in 3..n {
                assert!(t.has_edge(v - 1, v));
            }
        }
        assert!(tadpole(3).is_err());
    }

    #[test]
    fn cycle_star_shape() {
        assert_eq!(cycle_star(6, 6).unwrap(), cycle(6).unwrap());
        let g = cycle_star(5, 3).unwrap();
        assert_eq!(g.degree_sequence(), vec![4, 2, 2, 1, 1]);
        assert_eq!(g.degree(0), 4);
        assert_eq!(cycle_star(4, 3).unwrap(), star_plus(4).unwrap());
        for (n, g) in [(7, 3), (7, 4), (7, 5), (9, 6)] {
            let gr = cycle_star(n, g).unwrap();
            assert_eq!(gr.n(), n);
            assert!(gr.is_unicyclic());
            assert_eq!(gr.girth(), Some(g));
        }
        assert_eq!(
            cycle_star(4, 5),
            Err(FamilyError::GirthOutOfRange { g: 5, n: 4 })
        );
    }

    #[test]
    fn broom_shape() {
        let b = broom(7, 4, 3).unwrap();
        assert_eq!(b.n(), 7);
        assert!(b.is_tree());
        assert_eq!(b.degree(2), 4); // v_3 carries the two leaves
        assert_eq!(b.diameter(), Some(4));

        // all leaves at the center of a short path gives a star
        let s = broom(8, 2, 2).unwrap();
        assert_eq!(s.degree_sequence(), star(8).unwrap().degree_sequence());

        // diameter is d regardless of the attachment point
        for d in 2..6 {
            for i in 2..=d {
                let g = broom(d + 3, d, i).unwrap();
                assert_eq!(g.n(), d + 3);
                assert_eq!(g.diameter(), Some(d));
            }
        }
        assert!(matches!(
            broom(7, 4, 1),
            Err(FamilyError::BroomParameters { .. })
        ));
        assert!(matches!(
            broom(7, 4, 5),
            Err(FamilyError::BroomParameters { .. })
        ));
        assert!(matches!(
            broom(4, 4, 2),
            Err(FamilyError::BroomParameters { .. })
        ));
    }

    #[test]
    fn spider_shape() {
        let s = spider(1, 1, 1).unwrap();
        assert_eq!(s, star(4).unwrap());
        let p = spider(2, 2, 0).unwrap();
        assert_eq!(p.n(), 5);
        assert!(p.is_tree());
        assert_eq!(p.degree_sequence(), vec![2, 2, 2, 1, 1]); // a path in disguise
        assert_eq!(p.diameter(), Some(4));
        let s = spider(2, 2, 1).unwrap();
        assert_eq!(s.n(), 6);
        assert_eq!(s.degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
        assert_eq!(spider(0, 0, 0).unwrap().n(), 1);
    }

    #[test]
    fn spec_roundtrip() {
        let specs = [
            "path:n=5",
            "cycle:n=8",
            "star:n=4",
            "star_plus:n=6",
            "complete:n=3",
            "tadpole:n=7",
            "cycle_star:n=7,g=4",
            "broom:n=9,d=4,i=3",
            "spider:a=2,b=2,c=1",
        ];
        for s in specs {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert!(spec.build().is_ok());
        }
    }

    #[test]
    fn spec_parse_errors() {
        for bad in [
            "wheel:n=5",
            "broom:n=9,d=4",
            "broom:n=9,d=4,i=3,x=1",
            "path:n=five",
            "path:n=5,n=6",
            "cycle_star:n",
        ] {
            assert!(
                bad.parse::<FamilySpec>().is_err(),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn spec_build_dispatch() {
        let spec: FamilySpec = "broom:n=9,d=4,i=3".parse().unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g, broom(9, 4, 3).unwrap());
    }
}
