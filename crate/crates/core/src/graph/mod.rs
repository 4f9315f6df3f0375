//! Finite directed multigraphs and their vertex-set combinatorics.
//!
//! Vertices and edges are addressed by their position in the input lists.
//! Identifiers are kept for parsing and printing only.

mod cycles;
mod path;
mod structure;
mod vertex_set;

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cycles::Cycle;
pub use path::Path;
pub use structure::SimplicityWitness;
pub use vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: usize,
    pub dst: usize,
}

#[derive(Clone, Debug)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

/// On-disk form: `{"vertices": [...], "edges": [{"id", "src", "dst"}...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub src: String,
    pub dst: String,
}

impl Graph {
    /// Builds a graph from identifier lists, enforcing uniqueness of all
    /// identifiers and that every edge endpoint is a known vertex.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut seen = HashSet::new();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::Parse("empty vertex identifier".into()));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateId(v.clone()));
            }
            vertex_index.insert(v.clone(), i);
        }

        let n = vertices.len();
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        let mut edge_list = Vec::new();
        let mut edge_index = HashMap::new();
        for (i, (id, src, dst)) in edges.into_iter().enumerate() {
            let (id, src, dst): (String, String, String) = (id.into(), src.into(), dst.into());
            if id.is_empty() {
                return Err(Error::Parse("empty edge identifier".into()));
            }
            if !seen.insert(id.clone()) {
                return Err(Error::DuplicateId(id));
            }
            let s = *vertex_index.get(&src).ok_or(Error::UnknownVertex(src))?;
            let d = *vertex_index.get(&dst).ok_or(Error::UnknownVertex(dst))?;
            out_edges[s].push(i);
            in_edges[d].push(i);
            edge_index.insert(id.clone(), i);
            edge_list.push(Edge { id, src: s, dst: d });
        }

        Ok(Graph {
            vertices,
            edges: edge_list,
            vertex_index,
            edge_index,
            out_edges,
            in_edges,
        })
    }

    pub fn from_doc(doc: GraphDoc) -> Result<Self> {
        Graph::new(
            doc.vertices,
            doc.edges.into_iter().map(|e| (e.id, e.src, e.dst)),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::from_doc(doc)
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    id: e.id.clone(),
                    src: self.vertices[e.src].clone(),
                    dst: self.vertices[e.dst].clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("graph document serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_id(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<usize> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    /// Edges with source `v`, i.e. `s^{-1}(v)`.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_edges[v].is_empty()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|n| self.vertex_id(n.as_ref())).collect()
    }

    /// Member names of `set`, sorted lexicographically.
    pub fn set_names(&self, set: &VertexSet) -> Vec<String> {
        let mut names: Vec<String> = set.iter().map(|v| self.vertices[v].clone()).collect();
        names.sort();
        names
    }

    pub fn edge_names(&self, edges: &[usize]) -> Vec<String> {
        edges.iter().map(|&e| self.edges[e].id.clone()).collect()
    }

    /// Path from edge identifiers; a single vertex identifier gives the
    /// zero-length path.
    pub fn path_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Path> {
        if let [single] = names {
            if let Ok(v) = self.vertex_id(single.as_ref()) {
                return Ok(Path::vertex(v));
            }
        }
        let edges = names
            .iter()
            .map(|n| self.edge_id(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Path::from_edges(self, &edges)
    }

    /// Edge identifiers joined by `*`, or the vertex identifier for a
    /// zero-length path.
    pub fn path_string(&self, p: &Path) -> String {
        if p.is_vertex() {
            self.vertices[p.source()].clone()
        } else {
            self.edge_names(p.edges()).join("*")
        }
    }

    /// All vertices reachable from `v` by a path of length at least zero.
    pub fn descendants(&self, v: usize) -> VertexSet {
        self.reach_from(std::iter::once(v))
    }

    pub fn descendants_of(&self, name: &str) -> Result<VertexSet> {
        Ok(self.descendants(self.vertex_id(name)?))
    }

    fn reach_from(&self, start: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut seen = VertexSet::new();
        let mut queue = VecDeque::new();
        for v in start {
            if seen.insert(v) {
                queue.push_back(v);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &e in &self.out_edges[u] {
                let w = self.edges[e].dst;
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Vertices from which some member of `target` is reachable.
    pub fn ancestors_of_set(&self, target: &VertexSet) -> VertexSet {
        let mut seen = target.clone();
        let mut queue: VecDeque<usize> = target.iter().collect();
        while let Some(u) = queue.pop_front() {
            for &e in &self.in_edges[u] {
                let w = self.edges[e].src;
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Reflexive-transitive reachability table, one descendant set per vertex.
    pub fn reachability(&self) -> Vec<VertexSet> {
        (0..self.vertex_count())
            .map(|v| self.descendants(v))
            .collect()
    }

    pub fn is_hereditary(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            self.out_edges[v]
                .iter()
                .all(|&e| set.contains(self.edges[e].dst))
        })
    }

    /// Smallest hereditary superset: the union of all descendants.
    pub fn hereditary_closure(&self, set: &VertexSet) -> VertexSet {
        self.reach_from(set.iter())
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| self.is_sink(v))
            .collect()
    }

    /// Whether some edge leaves `v` for a vertex outside `set`. Sinks never do.
    fn escapes(&self, v: usize, set: &VertexSet) -> bool {
        self.out_edges[v]
            .iter()
            .any(|&e| !set.contains(self.edges[e].dst))
    }

    /// Saturation test for a hereditary set.
    pub fn is_saturated(&self, set: &VertexSet) -> Result<bool> {
        if !self.is_hereditary(set) {
            return Err(Error::NotHereditary);
        }
        Ok((0..self.vertex_count())
            .all(|v| set.contains(v) || self.is_sink(v) || self.escapes(v, set)))
    }

    /// Least saturated hereditary superset of a hereditary set.
    pub fn saturation(&self, set: &VertexSet) -> Result<VertexSet> {
        if !self.is_hereditary(set) {
            return Err(Error::NotHereditary);
        }
        let mut current = set.clone();
        loop {
            let added: Vec<usize> = (0..self.vertex_count())
                .filter(|&v| !current.contains(v) && !self.is_sink(v) && !self.escapes(v, &current))
                .collect();
            if added.is_empty() {
                return Ok(current);
            }
            current.extend(added);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &Graph, names: &[&str]) -> VertexSet {
        g.vertex_set(names).unwrap()
    }

    #[test]
    fn parses_smallest_graphs() {
        let g = Graph::from_json(r#"{"vertices":["v1"],"edges":[]}"#).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let g =
            Graph::from_json(r#"{"vertices":["v1"],"edges":[{"id":"c","src":"v1","dst":"v1"}]}"#)
                .unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 1));
        assert_eq!(g.edge(0).src, g.edge(0).dst);
    }

    #[test]
    fn parse_errors_name_the_token() {
        let cases = [
            (
                r#"{"vertices":["v1"],"edges":[{"id":"c","src":"v1","dst":"v2"}]}"#,
                Error::UnknownVertex("v2".into()),
            ),
            (r#"{"vertices":[],"edges":[]}"#, Error::EmptyGraph),
            (
                r#"{"vertices":["v1","v1"],"edges":[]}"#,
                Error::DuplicateId("v1".into()),
            ),
            (
                r#"{"vertices":["v1"],"edges":[{"id":"v1","src":"v1","dst":"v1"}]}"#,
                Error::DuplicateId("v1".into()),
            ),
            (
                r#"{"vertices":["v1"],"edges":[{"id":"c","src":"v1","dst":"v1"},{"id":"c","src":"v1","dst":"v1"}]}"#,
                Error::DuplicateId("c".into()),
            ),
        ];
        for (text, err) in cases {
            assert_eq!(Graph::from_json(text), Err(err), "{text}");
        }
        assert!(matches!(
            Graph::from_json(r#"{"vertices":["v1"],"edges":[],"extra":1}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Graph::from_json(
                r#"{"vertices":["v1"],"edges":[{"id":"c","src":"v1","dst":"v1","w":2}]}"#
            ),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn json_round_trip_preserves_order() {
        let g = fixtures::g4();
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.vertex_names(), ["v1", "v2", "v3", "v4", "v5"]);
    }

    #[test]
    fn descendants_examples() {
        let g4 = fixtures::g4();
        assert_eq!(g4.descendants_of("v5").unwrap(), set(&g4, &["v5"]));
        assert_eq!(g4.descendants_of("v1").unwrap(), g4.all_vertices());
        let c3 = fixtures::cycle(3);
        assert_eq!(c3.descendants_of("v1").unwrap(), c3.all_vertices());
        assert_eq!(
            g4.descendants_of("v9"),
            Err(Error::UnknownVertex("v9".into()))
        );
    }

    #[test]
    fn hereditary_examples() {
        let g4 = fixtures::g4();
        assert!(g4.is_hereditary(&VertexSet::new()));
        assert!(g4.is_hereditary(&set(&g4, &["v2", "v3", "v4"])));
        assert!(!g4.is_hereditary(&set(&g4, &["v1"])));
        assert!(g4.hereditary_closure(&VertexSet::new()).is_empty());
        assert_eq!(
            g4.hereditary_closure(&set(&g4, &["v2"])),
            set(&g4, &["v2", "v3", "v4"])
        );
    }

    #[test]
    fn sinks_examples() {
        assert!(fixtures::g2().sinks().contains(1));
        let one_loop = fixtures::cycle(1);
        assert!(one_loop.sinks().is_empty());
        let g4 = fixtures::g4();
        assert_eq!(g4.sinks(), set(&g4, &["v5"]));
        let g3 = fixtures::g3();
        assert_eq!(g3.sinks(), set(&g3, &["v4"]));
    }

    #[test]
    fn saturation_examples() {
        let g3 = fixtures::g3();
        let g4 = fixtures::g4();
        assert!(g4.is_saturated(&g4.all_vertices()).unwrap());
        assert!(!g3.is_saturated(&set(&g3, &["v4"])).unwrap());
        assert!(g4.is_saturated(&set(&g4, &["v2", "v3", "v4"])).unwrap());
        assert_eq!(
            g3.saturation(&set(&g3, &["v4"])).unwrap(),
            g3.all_vertices()
        );
        assert_eq!(
            g4.saturation(&set(&g4, &["v5"])).unwrap(),
            set(&g4, &["v5"])
        );
        let w = set(&g4, &["v2", "v3", "v4"]);
        assert_eq!(g4.saturation(&w).unwrap(), w);
        assert_eq!(
            g4.is_saturated(&set(&g4, &["v1"])),
            Err(Error::NotHereditary)
        );
        assert_eq!(g4.saturation(&set(&g4, &["v2"])), Err(Error::NotHereditary));
    }
}
