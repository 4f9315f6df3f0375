use super::Graph;
use crate::error::{Error, Result};

/// A finite path `e1 ... en` in a graph, or a vertex viewed as a path of
/// length zero.
///
/// Source and range are cached so that prefix arithmetic does not need the
/// graph. Ordering is by source, then edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: usize,
    edges: Vec<usize>,
    range: usize,
}

impl Path {
    /// The zero-length path at `v`.
    pub fn vertex(v: usize) -> Self {
        Path {
            source: v,
            edges: Vec::new(),
            range: v,
        }
    }

    /// Builds a path of positive length, checking composability.
    pub fn from_edges(g: &Graph, edges: &[usize]) -> Result<Self> {
        let (&first, rest) = edges
            .split_first()
            .ok_or_else(|| Error::NotAPath("empty edge list".into()))?;
        let mut path = Path::edge(g, first);
        for &e in rest {
            path = path.then(g, e)?;
        }
        Ok(path)
    }

    /// The length-one path consisting of edge `e`.
    pub fn edge(g: &Graph, e: usize) -> Self {
        let edge = g.edge(e);
        Path {
            source: edge.src,
            edges: vec![e],
            range: edge.dst,
        }
    }

    /// Appends an edge.
    pub fn then(&self, g: &Graph, e: usize) -> Result<Self> {
        let edge = g.edge(e);
        if edge.src != self.range {
            return Err(Error::NotAPath(edge.id.clone()));
        }
        let mut edges = self.edges.clone();
        edges.push(e);
        Ok(Path {
            source: self.source,
            edges,
            range: edge.dst,
        })
    }

    /// Prepends an edge.
    pub fn after(&self, g: &Graph, e: usize) -> Result<Self> {
        let edge = g.edge(e);
        if edge.dst != self.source {
            return Err(Error::NotAPath(edge.id.clone()));
        }
        let mut edges = Vec::with_capacity(self.edges.len() + 1);
        edges.push(e);
        edges.extend_from_slice(&self.edges);
        Ok(Path {
            source: edge.src,
            edges,
            range: self.range,
        })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn range(&self) -> usize {
        self.range
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn last_edge(&self) -> Option<usize> {
        self.edges.last().copied()
    }

    /// Concatenation `self · other`; `None` unless `r(self) = s(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.range != other.source {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Path {
            source: self.source,
            edges,
            range: other.range,
        })
    }

    /// If `self = prefix · rest`, returns `rest`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if self.source != prefix.source || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path {
            source: prefix.range,
            edges: self.edges[prefix.edges.len()..].to_vec(),
            range: self.range,
        })
    }

    /// Drops the final edge, returning the shortened path and that edge.
    pub fn split_last(&self, g: &Graph) -> Option<(Path, usize)> {
        let (&last, init) = self.edges.split_last()?;
        Some((
            Path {
                source: self.source,
                edges: init.to_vec(),
                range: g.edge(last).src,
            },
            last,
        ))
    }

    /// Source vertices of every edge, i.e. all vertices visited before the range.
    pub fn edge_sources<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = usize> + 'a {
        self.edges.iter().map(move |&e| g.edge(e).src)
    }
}
