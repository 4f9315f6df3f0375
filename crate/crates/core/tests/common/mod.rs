#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use ckcenter::leavitt::paths_up_to;
use ckcenter::{AlgebraElement, Coeff, Graph, LeavittAlgebra, Monomial, Path, VertexSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn graph_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Graph {
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = pairs
        .iter()
        .enumerate()
        .map(|(i, &(s, t))| {
            (
                format!("e{}", i + 1),
                format!("v{}", s + 1),
                format!("v{}", t + 1),
            )
        })
        .collect();
    Graph::new(vertices, edges).unwrap()
}

/// Every multigraph on 1..=3 labelled vertices with at most 4 edges, edges
/// listed as a sorted multiset of (source, target) pairs.
pub fn exhaustive_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
        let mut chosen = Vec::new();
        multisets(&pairs, 0, 4, &mut chosen, &mut |m| {
            out.push(graph_from_pairs(n, m))
        });
    }
    out
}

type Pair = (usize, usize);

fn multisets(
    items: &[(usize, usize)],
    start: usize,
    left: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[Pair]),
) {
    emit(chosen);
    if left == 0 {
        return;
    }
    for i in start..items.len() {
        chosen.push(items[i]);
        multisets(items, i, left - 1, chosen, emit);
        chosen.pop();
    }
}

pub fn random_graph(rng: &mut StdRng, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.random_range(1..=max_vertices);
    let m = rng.random_range(0..=max_edges);
    let pairs: Vec<(usize, usize)> = (0..m)
        .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
        .collect();
    graph_from_pairs(n, &pairs)
}

/// 500 seeded random graphs with at most 5 vertices and 7 edges.
pub fn random_corpus() -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    (0..500).map(|_| random_graph(&mut rng, 5, 7)).collect()
}

pub fn full_corpus() -> Vec<Graph> {
    let mut all = exhaustive_corpus();
    all.extend(random_corpus());
    all
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u64 << n).map(move |mask| VertexSet::from_mask(n, mask))
}

/// Vertices reachable from `v` by breadth-first search over edge endpoints.
pub fn bfs_reach(g: &Graph, v: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([v]);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for e in g.edges() {
            if e.src == u && seen.insert(e.dst) {
                queue.push_back(e.dst);
            }
        }
    }
    seen
}

pub fn oracle_hereditary(g: &Graph, w: &VertexSet) -> bool {
    w.iter()
        .all(|v| bfs_reach(g, v).iter().all(|u| w.contains(*u)))
}

pub fn oracle_annihilator(g: &Graph, w: &VertexSet) -> VertexSet {
    (0..g.vertex_count())
        .filter(|&v| bfs_reach(g, v).iter().all(|u| !w.contains(*u)))
        .collect()
}

pub fn oracle_saturated(g: &Graph, w: &VertexSet) -> bool {
    oracle_hereditary(g, w)
        && (0..g.vertex_count()).all(|v| {
            let outs: Vec<_> = g.edges().iter().filter(|e| e.src == v).collect();
            w.contains(v) || outs.is_empty() || !outs.iter().all(|e| w.contains(e.dst))
        })
}

pub fn mask(set: &VertexSet) -> u64 {
    set.iter().map(|v| 1u64 << v).sum()
}

/// Arrival paths of `w` enumerated by extending backwards from `w`, up to
/// length `2|V|`, as edge-id strings. `finite` is false when some arrival
/// path is longer than the number of vertices outside `w`.
pub struct EnumeratedArrivals {
    pub finite: bool,
    pub paths: BTreeSet<String>,
}

pub fn enumerate_arrivals(g: &Graph, w: &VertexSet) -> EnumeratedArrivals {
    let n = g.vertex_count();
    let outside = n - w.len();
    let limit = 2 * n;
    let mut paths = BTreeSet::new();
    let mut finite = true;
    // (source vertex, edge names in order)
    let mut frontier: Vec<(usize, Vec<String>)> = w.iter().map(|v| (v, Vec::new())).collect();
    for v in w.iter() {
        paths.insert(g.vertex_name(v).to_string());
    }
    for len in 1..=limit {
        let mut next = Vec::new();
        for (src, edges) in &frontier {
            for e in g.edges() {
                if e.dst != *src || w.contains(e.src) {
                    continue;
                }
                let mut p = vec![e.id.clone()];
                p.extend(edges.iter().cloned());
                if len > outside {
                    finite = false;
                }
                paths.insert(p.join("*"));
                next.push((e.src, p));
            }
        }
        frontier = next;
    }
    EnumeratedArrivals { finite, paths }
}

pub fn hereditary_subsets(g: &Graph) -> Vec<VertexSet> {
    subsets(g.vertex_count())
        .filter(|w| oracle_hereditary(g, w))
        .collect()
}

/// Random element with at most `max_terms` terms, coefficients in -2..=2,
/// monomials `p q*` with `|p|, |q| <= 2`.
pub fn random_element(alg: &LeavittAlgebra, rng: &mut StdRng, max_terms: usize) -> AlgebraElement {
    let paths = paths_up_to(alg.graph(), 2);
    let mut out = AlgebraElement::zero();
    for _ in 0..rng.random_range(0..=max_terms) {
        let p = &paths[rng.random_range(0..paths.len())];
        let same: Vec<&Path> = paths.iter().filter(|q| q.range() == p.range()).collect();
        let q = same[rng.random_range(0..same.len())];
        let c = Coeff::from_integer(rng.random_range(-2i64..=2).into());
        out.add_term(Monomial::new(p.clone(), q.clone()).unwrap(), c);
    }
    alg.normal_form(&out)
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
