//! Cross-checks of the library against independent test-local oracles.
//!
//! Every oracle here is built from first principles inside this file —
//! boolean matrix products, closed-form eigenvalues, Prüfer sequences,
//! brute-force permutation search — so agreement is evidence, not
//! circularity.

use std::collections::{BTreeSet, HashSet};

use num::{BigRational, ToPrimitive};
use proptest::prelude::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use gsq::enumerate::{all_trees, all_unicyclic};
use gsq::families::{broom, cycle, cycle_star, path, spider, star, star_plus, tadpole};
use gsq::iso::{canonical_form, contains_subgraph};
use gsq::spectral::{exact_radius, spectral_radius, DEFAULT_TOL};
use gsq::{from_graph6, to_graph6, Graph};

fn big(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn radius(g: &Graph) -> f64 {
    spectral_radius(g, DEFAULT_TOL).expect("converges").radius
}

// ---------------------------------------------------------------------------
// Graph powers against a boolean-matrix oracle.

/// `k`-th power computed the slow way: boolean adjacency matrix powers,
/// OR-accumulated, no BFS involved.
fn power_by_matrix(g: &Graph, k: usize) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut reach = adj.clone();
    let mut acc = adj.clone();
    for _ in 1..k {
        let mut next = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                for (l, row) in adj.iter().enumerate() {
                    if reach[i][l] && row[j] {
                        next[i][j] = true;
                        break;
                    }
                }
            }
        }
        reach = next;
        for i in 0..n {
            for j in 0..n {
                acc[i][j] |= reach[i][j];
            }
        }
    }
    let mut edges = Vec::new();
    for (u, row) in acc.iter().enumerate() {
        for (v, &hit) in row.iter().enumerate().skip(u + 1) {
            if hit {
                edges.push((u, v));
            }
        }
    }
    edges
}

fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g.edges().collect();
    e.sort_unstable();
    e
}

#[test]
fn square_matches_boolean_matrix_product() {
    for t in all_trees(8).unwrap().graphs() {
        assert_eq!(sorted_edges(&t.square()), power_by_matrix(t, 2));
    }
    for u in all_unicyclic(7, None).unwrap().graphs() {
        assert_eq!(sorted_edges(&u.square()), power_by_matrix(u, 2));
    }
}

#[test]
fn higher_powers_match_boolean_matrix_product() {
    let zoo = [
        path(9).unwrap(),
        cycle(8).unwrap(),
        tadpole(9).unwrap(),
        spider(2, 3, 3).unwrap(),
        broom(9, 5, 3).unwrap(),
    ];
    for g in &zoo {
        for k in 1..=4 {
            assert_eq!(
                sorted_edges(&g.power(k).unwrap()),
                power_by_matrix(g, k),
                "power {k} of {}",
                to_graph6(g)
            );
        }
    }
}

#[test]
fn squaring_halves_the_diameter() {
    // dist_{G^2}(u,v) = ceil(dist_G(u,v) / 2), hence the same for diameters.
    for t in all_trees(9).unwrap().graphs() {
        let d = t.diameter().unwrap();
        assert_eq!(t.square().diameter().unwrap(), d.div_ceil(2));
    }
    for u in all_unicyclic(8, None).unwrap().graphs() {
        let d = u.diameter().unwrap();
        assert_eq!(u.square().diameter().unwrap(), d.div_ceil(2));
    }
}

// ---------------------------------------------------------------------------
// Spectral radii against closed forms.

#[test]
fn radii_match_closed_forms() {
    for n in 2..=30 {
        let want = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        assert!((radius(&path(n).unwrap()) - want).abs() < 1e-9, "path {n}");
    }
    for n in 3..=30 {
        assert!((radius(&cycle(n).unwrap()) - 2.0).abs() < 1e-9, "cycle {n}");
    }
    for n in 2..=30 {
        let want = ((n - 1) as f64).sqrt();
        assert!((radius(&star(n).unwrap()) - want).abs() < 1e-9, "star {n}");
    }
}

#[test]
fn exact_oracle_matches_closed_forms() {
    // rho(C_n) = 2 and rho(K_{1,n-1}) = sqrt(n-1) are exact algebraic
    // statements the Sturm oracle can settle with no floating point at all.
    for n in 3..=12 {
        assert!(exact_radius(&cycle(n).unwrap(), &rational(1, 1_000_000))
            .unwrap()
            .is_exactly(&big(2)));
    }
    // sqrt(n-1) is rational only for n-1 a perfect square.
    for (n, root) in [(2, 1), (5, 2), (10, 3)] {
        assert!(exact_radius(&star(n).unwrap(), &rational(1, 1_000_000))
            .unwrap()
            .is_exactly(&big(root)));
    }
}

#[test]
fn iterative_and_exact_radii_agree_on_family_zoo() {
    let width = rational(1, 1_000_000_000_000);
    let mut zoo = vec![star_plus(8).unwrap(), spider(3, 3, 5).unwrap()];
    for n in 4..=12 {
        zoo.push(path(n).unwrap());
        zoo.push(cycle(n).unwrap());
        zoo.push(tadpole(n).unwrap());
        zoo.push(broom(n, 3, 2).unwrap());
        zoo.push(cycle_star(n, 3).unwrap());
    }
    for g in &zoo {
        for h in [g.clone(), g.square()] {
            let it = spectral_radius(&h, DEFAULT_TOL).unwrap();
            let ex = exact_radius(&h, &width).unwrap();
            let err = (h.n() as f64).sqrt() * it.residual + ex.width_f64();
            assert!(
                (it.radius - ex.midpoint_f64()).abs() <= err + 1e-10,
                "solver disagreement on {}",
                to_graph6(&h)
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Enumeration against labeled-object oracles.

/// Decode a Prüfer sequence over `{0, .., n-1}` into its labeled tree.
fn tree_from_prufer(seq: &[usize], n: usize) -> Graph {
    let mut deg = vec![1usize; n];
    for &s in seq {
        deg[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    for &s in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, s));
        deg[s] -= 1;
        if deg[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut last = leaves.into_iter();
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    edges.push((u, v));
    Graph::from_edges(n, edges).unwrap()
}

/// Count non-isomorphic trees on `n` vertices by decoding *all* `n^(n-2)`
/// Prüfer sequences and deduplicating canonical forms.
fn tree_count_by_prufer(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut seen = HashSet::new();
    let mut seq = vec![0usize; len];
    for code in 0..total {
        let mut c = code;
        for slot in seq.iter_mut() {
            *slot = c % n;
            c /= n;
        }
        let t = tree_from_prufer(&seq, n);
        seen.insert(canonical_form(&t).unwrap().into_string());
    }
    seen.len()
}

#[test]
fn tree_counts_match_prufer_oracle() {
    for n in 1..=8 {
        assert_eq!(
            all_trees(n).unwrap().len(),
            tree_count_by_prufer(n),
            "tree count at n = {n}"
        );
    }
}

/// Canonical u64 adjacency encoding by brute force: minimum over all `n!`
/// vertex permutations. Complete invariant, independent of the refinement
/// machinery in the library.
fn min_perm_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8, "n! search only viable for tiny n");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                code = (code << 1) | u64::from(g.has_edge(perm[u], perm[v]));
            }
        }
        best = best.min(code);
        // Next lexicographic permutation, done when fully descending.
        let Some(i) = (0..n - 1).rfind(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rfind(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best
}

/// Count non-isomorphic unicyclic graphs on `n` vertices by adding every
/// possible edge to every tree and deduplicating with the n!-search code.
fn unicyclic_count_by_tree_plus_edge(n: usize) -> usize {
    let mut seen = HashSet::new();
    for t in all_trees(n).unwrap().graphs() {
        for u in 0..n {
            for v in u + 1..n {
                if !t.has_edge(u, v) {
                    seen.insert(min_perm_code(&t.add_edge(u, v).unwrap()));
                }
            }
        }
    }
    seen.len()
}

#[test]
fn unicyclic_counts_match_tree_plus_edge_oracle() {
    for n in 3..=8 {
        assert_eq!(
            all_unicyclic(n, None).unwrap().len(),
            unicyclic_count_by_tree_plus_edge(n),
            "unicyclic count at n = {n}"
        );
    }
}

#[test]
fn brute_force_codes_agree_with_canonical_forms() {
    // Two complete invariants must induce the same partition into classes.
    let graphs: Vec<Graph> = all_unicyclic(7, None)
        .unwrap()
        .graphs()
        .iter()
        .map(|u| u.square())
        .collect();
    for a in &graphs {
        for b in &graphs {
            let by_perm = min_perm_code(a) == min_perm_code(b);
            let by_canon = canonical_form(a).unwrap() == canonical_form(b).unwrap();
            assert_eq!(by_perm, by_canon);
        }
    }
}

// ---------------------------------------------------------------------------
// Subgraph containment against exhaustive injection search.

/// Does some injective map embed `pattern` into `host` edge-preservingly?
/// Checked by trying every injection, with no pruning or ordering tricks.
fn contains_by_every_injection(host: &Graph, pattern: &Graph) -> bool {
    let (nh, np) = (host.n(), pattern.n());
    if np > nh {
        return false;
    }
    let pattern_edges: Vec<_> = pattern.edges().collect();
    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    fn rec(
        v: usize,
        np: usize,
        nh: usize,
        map: &mut [usize],
        used: &mut [bool],
        host: &Graph,
        pattern_edges: &[(usize, usize)],
    ) -> bool {
        if v == np {
            return pattern_edges
                .iter()
                .all(|&(a, b)| host.has_edge(map[a], map[b]));
        }
        for img in 0..nh {
            if !used[img] {
                map[v] = img;
                used[img] = true;
                if rec(v + 1, np, nh, map, used, host, pattern_edges) {
                    return true;
                }
                used[img] = false;
            }
        }
        false
    }
    rec(0, np, nh, &mut map, &mut used, host, &pattern_edges)
}

#[test]
fn subgraph_search_matches_exhaustive_injections() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5355_4247);
    let hosts: Vec<Graph> = all_unicyclic(7, None)
        .unwrap()
        .graphs()
        .iter()
        .cloned()
        .chain(all_trees(7).unwrap().graphs().iter().cloned())
        .collect();
    let patterns: Vec<Graph> = all_trees(5)
        .unwrap()
        .graphs()
        .iter()
        .cloned()
        .chain(all_unicyclic(5, None).unwrap().graphs().iter().cloned())
        .collect();
    for _ in 0..300 {
        let host = hosts.choose(&mut rng).unwrap();
        let pattern = patterns.choose(&mut rng).unwrap();
        assert_eq!(
            contains_subgraph(host, pattern),
            contains_by_every_injection(host, pattern),
            "host {} pattern {}",
            to_graph6(host),
            to_graph6(pattern)
        );
    }
}

// ---------------------------------------------------------------------------
// Serialization round-trips on arbitrary graphs.

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph()) {
        let encoded = to_graph6(&g);
        let back = from_graph6(&encoded).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back), encoded);
    }

    #[test]
    fn permuting_vertices_preserves_radius_and_canonical_form(
        g in arb_graph(),
        seed in any::<u64>(),
    ) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.permuted(&perm);
        prop_assert!((radius(&g) - radius(&h)).abs() < 1e-9);
        if g.n() <= 10 {
            prop_assert_eq!(
                canonical_form(&g).unwrap(),
                canonical_form(&h).unwrap()
            );
        }
    }

    #[test]
    fn square_spectral_radius_never_below_base(g in arb_graph()) {
        // G is a subgraph of G^2 on the same vertex set.
        prop_assert!(radius(&g.square()) >= radius(&g) - 1e-9);
    }
}

// ---------------------------------------------------------------------------
// Exact oracle sanity on integer-spectrum graphs.

#[test]
fn exact_oracle_certifies_integer_radii() {
    // rho(K_n) = n - 1: the complete graph has integer spectrum.
    for n in 2..=10 {
        let g = gsq::families::complete(n).unwrap();
        let ex = exact_radius(&g, &rational(1, 1024)).unwrap();
        assert!(ex.is_exactly(&big(n as i64 - 1)));
        assert!(!ex.exceeds(&big(n as i64 - 1)));
        assert!(ex.exceeds(&(big(n as i64 - 1) - rational(1, 1_000_000))));
    }
    // Interval endpoints bracket the true value.
    let ex = exact_radius(&path(7).unwrap(), &rational(1, 1 << 40)).unwrap();
    let (lo, hi) = ex.interval();
    let mid = ex.midpoint_f64();
    assert!(lo.to_f64().unwrap() <= mid && mid <= hi.to_f64().unwrap() + 1e-15);
}
