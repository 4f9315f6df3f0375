use std::collections::BTreeSet;

use super::{Graph, Path, VertexSet};
use crate::error::{Error, Result};

/// A closed path whose edge sources are pairwise distinct.
///
/// Stored rotated so that it starts at the vertex with the lexicographically
/// smallest identifier; two cycles are equal iff they use the same edges in
/// the same cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    edges: Vec<usize>,
}

impl Cycle {
    pub fn from_edges(g: &Graph, edges: &[usize]) -> Result<Self> {
        let path = Path::from_edges(g, edges).map_err(|_| {
            Error::NotACycle(format!(
                "edges {:?} are not composable",
                g.edge_names(edges)
            ))
        })?;
        if path.source() != path.range() {
            return Err(Error::NotACycle(format!(
                "path {} is not closed",
                g.path_string(&path)
            )));
        }
        let sources: BTreeSet<usize> = path.edge_sources(g).collect();
        if sources.len() != edges.len() {
            return Err(Error::NotACycle(format!(
                "path {} repeats a vertex",
                g.path_string(&path)
            )));
        }
        let start = (0..edges.len())
            .min_by_key(|&i| g.vertex_name(g.edge(edges[i]).src))
            .expect("nonempty");
        let mut rotated = edges[start..].to_vec();
        rotated.extend_from_slice(&edges[..start]);
        Ok(Cycle { edges: rotated })
    }

    pub fn from_names<S: AsRef<str>>(g: &Graph, names: &[S]) -> Result<Self> {
        let edges = names
            .iter()
            .map(|n| g.edge_id(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Cycle::from_edges(g, &edges)
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices `s(e1), ..., s(en)` in cycle order.
    pub fn vertices(&self, g: &Graph) -> Vec<usize> {
        self.edges.iter().map(|&e| g.edge(e).src).collect()
    }

    pub fn vertex_set(&self, g: &Graph) -> VertexSet {
        self.vertices(g).into_iter().collect()
    }

    pub fn path(&self, g: &Graph) -> Path {
        Path::from_edges(g, &self.edges).expect("cycle edges compose")
    }

    /// The `n` rotations `e_i e_{i+1} ... e_{i-1}` as closed paths.
    pub fn rotations(&self, g: &Graph) -> Vec<Path> {
        let n = self.edges.len();
        (0..n)
            .map(|i| {
                let rotated: Vec<usize> = (0..n).map(|k| self.edges[(i + k) % n]).collect();
                Path::from_edges(g, &rotated).expect("rotation composes")
            })
            .collect()
    }

    pub fn names(&self, g: &Graph) -> Vec<String> {
        g.edge_names(&self.edges)
    }
}

impl Graph {
    /// All simple cycles in canonical rotation, sorted by their edge
    /// identifier sequences. Loops and parallel-edge cycles are included.
    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.vertex_count();
        let mut found = Vec::new();
        for start in 0..n {
            let mut on_path = vec![false; n];
            on_path[start] = true;
            let mut edges = Vec::new();
            self.extend_cycles(start, start, &mut on_path, &mut edges, &mut found);
        }
        let mut cycles: Vec<Cycle> = found
            .into_iter()
            .map(|edges| Cycle::from_edges(self, &edges).expect("enumerated cycle is valid"))
            .collect();
        cycles.sort_by_cached_key(|c| c.names(self));
        cycles
    }

    // Cycles rooted at their smallest vertex index `start`.
    fn extend_cycles(
        &self,
        start: usize,
        at: usize,
        on_path: &mut [bool],
        edges: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        for &e in self.out_edges(at) {
            let next = self.edge(e).dst;
            if next == start {
                edges.push(e);
                found.push(edges.clone());
                edges.pop();
            } else if next > start && !on_path[next] {
                on_path[next] = true;
                edges.push(e);
                self.extend_cycles(start, next, on_path, edges, found);
                edges.pop();
                on_path[next] = false;
            }
        }
    }

    /// Edges leaving a vertex of `cycle` that are not edges of `cycle`.
    pub fn exits(&self, cycle: &Cycle) -> Vec<usize> {
        let on_cycle: BTreeSet<usize> = cycle.edges().iter().copied().collect();
        let mut exits: Vec<usize> = cycle
            .vertices(self)
            .into_iter()
            .flat_map(|v| self.out_edges(v).iter().copied())
            .filter(|e| !on_cycle.contains(e))
            .collect();
        exits.sort_unstable();
        exits
    }

    /// Cycles without an exit.
    pub fn ne_cycles(&self) -> Vec<Cycle> {
        self.cycles()
            .into_iter()
            .filter(|c| self.exits(c).is_empty())
            .collect()
    }

    /// Some cycle of the subgraph induced on `within`, if one exists.
    pub fn find_cycle_within(&self, within: &VertexSet) -> Option<Cycle> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut mark = vec![Mark::New; self.vertex_count()];
        for root in within.iter() {
            if mark[root] != Mark::New {
                continue;
            }
            // (vertex, next out-edge position, edge used to enter vertex)
            let mut stack: Vec<(usize, usize, Option<usize>)> = vec![(root, 0, None)];
            mark[root] = Mark::Active;
            while let Some(top) = stack.last_mut() {
                let (v, pos) = (top.0, top.1);
                let Some(&e) = self.out_edges(v).get(pos) else {
                    mark[v] = Mark::Done;
                    stack.pop();
                    continue;
                };
                top.1 += 1;
                let w = self.edge(e).dst;
                if !within.contains(w) {
                    continue;
                }
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Active;
                        stack.push((w, 0, Some(e)));
                    }
                    Mark::Active => {
                        let from = stack
                            .iter()
                            .position(|f| f.0 == w)
                            .expect("active on stack");
                        let mut edges: Vec<usize> =
                            stack[from + 1..].iter().filter_map(|f| f.2).collect();
                        edges.push(e);
                        return Some(
                            Cycle::from_edges(self, &edges)
                                .expect("back edge closes a simple cycle"),
                        );
                    }
                    Mark::Done => {}
                }
            }
        }
        None
    }
}
