use super::{Cycle, Graph, VertexSet};
use crate::error::{Error, Result};

/// Why a graph fails the simplicity criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityWitness {
    /// A proper nonempty hereditary saturated subset.
    HereditarySaturated(VertexSet),
    /// A cycle without an exit.
    ExitlessCycle(Cycle),
}

impl Graph {
    /// The factor graph modulo a hereditary saturated set: vertices outside
    /// the set and the edges whose range avoids it, identifiers preserved.
    pub fn factor_graph(&self, set: &VertexSet) -> Result<Graph> {
        if !self.is_saturated(set)? {
            return Err(Error::NotSaturated);
        }
        if set.len() == self.vertex_count() {
            return Err(Error::FactorByAll);
        }
        let vertices = (0..self.vertex_count())
            .filter(|&v| !set.contains(v))
            .map(|v| self.vertex_name(v).to_string());
        let edges = self
            .edges()
            .iter()
            .filter(|e| !set.contains(e.dst))
            .map(|e| {
                (
                    e.id.clone(),
                    self.vertex_name(e.src).to_string(),
                    self.vertex_name(e.dst).to_string(),
                )
            });
        Graph::new(vertices, edges)
    }

    /// Simplicity test: no proper nonempty hereditary saturated subset and
    /// every cycle has an exit. Returns `Err(witness)` when the test fails.
    ///
    /// Every nonempty hereditary saturated set contains the saturated closure
    /// of each of its vertices, so only those `n` candidates need checking.
    /// The witness subset is the smallest such candidate.
    pub fn simplicity(&self) -> std::result::Result<(), SimplicityWitness> {
        let n = self.vertex_count();
        let proper = (0..n)
            .map(|v| {
                let closure = self.descendants(v);
                self.saturation(&closure).expect("closure is hereditary")
            })
            .filter(|s| s.len() < n)
            .min_by(|a, b| {
                a.len()
                    .cmp(&b.len())
                    .then_with(|| self.set_names(a).cmp(&self.set_names(b)))
            });
        if let Some(set) = proper {
            return Err(SimplicityWitness::HereditarySaturated(set));
        }
        match self.ne_cycles().into_iter().next() {
            Some(c) => Err(SimplicityWitness::ExitlessCycle(c)),
            None => Ok(()),
        }
    }

    pub fn is_simple(&self) -> bool {
        self.simplicity().is_ok()
    }

    /// Whether the graph is exactly one cycle through all of its vertices.
    pub fn is_single_cycle(&self) -> bool {
        self.edge_count() == self.vertex_count()
            && self
                .cycles()
                .first()
                .is_some_and(|c| c.len() == self.vertex_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn factor_graph_examples() {
        let g4 = fixtures::g4();
        assert_eq!(g4.factor_graph(&VertexSet::new()).unwrap(), g4);

        let f = g4
            .factor_graph(&g4.vertex_set(&["v2", "v3", "v4"]).unwrap())
            .unwrap();
        assert_eq!(f.vertex_names(), ["v1", "v5"]);
        assert_eq!(f.edge_names(&[0]), ["f"]);
        assert_eq!(f.edge_count(), 1);

        let f = g4.factor_graph(&g4.vertex_set(&["v5"]).unwrap()).unwrap();
        assert_eq!(f.vertex_names(), ["v1", "v2", "v3", "v4"]);
        assert_eq!(f.edge_names(&[0, 1, 2, 3]), ["a", "b", "c", "d"]);
        assert_eq!(f.edge_count(), 4);

        assert_eq!(g4.factor_graph(&g4.all_vertices()), Err(Error::FactorByAll));
        let g3 = fixtures::g3();
        assert_eq!(
            g3.factor_graph(&g3.vertex_set(&["v4"]).unwrap()),
            Err(Error::NotSaturated)
        );
        assert_eq!(
            g3.factor_graph(&g3.vertex_set(&["v1"]).unwrap()),
            Err(Error::NotHereditary)
        );
    }

    #[test]
    fn simplicity_examples() {
        let c3 = fixtures::cycle(3);
        match c3.simplicity() {
            Err(SimplicityWitness::ExitlessCycle(c)) => {
                assert_eq!(c.names(&c3), ["e1", "e2", "e3"])
            }
            other => panic!("unexpected {other:?}"),
        }

        let two_loops = Graph::new(["v1"], [("c", "v1", "v1"), ("d", "v1", "v1")]).unwrap();
        assert!(two_loops.is_simple());

        let g4 = fixtures::g4();
        assert_eq!(
            g4.simplicity(),
            Err(SimplicityWitness::HereditarySaturated(
                g4.vertex_set(&["v5"]).unwrap()
            ))
        );
    }

    #[test]
    fn single_cycle_detection() {
        assert!(fixtures::cycle(1).is_single_cycle());
        assert!(fixtures::cycle(4).is_single_cycle());
        assert!(!fixtures::g4().is_single_cycle());
        assert!(!fixtures::g3().is_single_cycle());
    }
}
