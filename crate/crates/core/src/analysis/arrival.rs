use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph, Path, VertexSet};

/// The arrival paths into a hereditary set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrivalSet {
    /// Every arrival path, sorted by length then by printed form.
    Finite(Vec<Path>),
    /// A cycle outside the set from which the set is reachable; going round
    /// it any number of times before arriving gives infinitely many paths.
    Infinite(Cycle),
}

impl ArrivalSet {
    pub fn is_finite(&self) -> bool {
        matches!(self, ArrivalSet::Finite(_))
    }

    pub fn paths(&self) -> Option<&[Path]> {
        match self {
            ArrivalSet::Finite(paths) => Some(paths),
            ArrivalSet::Infinite(_) => None,
        }
    }
}

fn check_hereditary_nonempty(g: &Graph, set: &VertexSet) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if !g.is_hereditary(set) {
        return Err(Error::NotHereditary);
    }
    Ok(())
}

/// Paths whose range lies in `set` and whose earlier vertices all lie outside
/// it; the vertices of `set` themselves are the zero-length arrival paths.
///
/// The set is infinite iff the vertices outside `set` that reach it span a
/// cycle. Otherwise that region is acyclic, every arrival path visits
/// distinct vertices before arriving, and a backwards search from `set`
/// lists them all.
pub fn arrival_paths(g: &Graph, set: &VertexSet) -> Result<ArrivalSet> {
    check_hereditary_nonempty(g, set)?;
    let approach = g.ancestors_of_set(set).difference(set);
    if let Some(cycle) = g.find_cycle_within(&approach) {
        return Ok(ArrivalSet::Infinite(cycle));
    }

    let mut paths = Vec::new();
    let mut frontier: Vec<Path> = set.iter().map(Path::vertex).collect();
    while let Some(p) = frontier.pop() {
        for &e in g.in_edges(p.source()) {
            if !set.contains(g.edge(e).src) {
                frontier.push(p.after(g, e).expect("edge ends at path source"));
            }
        }
        paths.push(p);
    }
    paths.sort_by_cached_key(|p| (p.len(), g.path_string(p)));
    Ok(ArrivalSet::Finite(paths))
}

pub fn is_finitary(g: &Graph, set: &VertexSet) -> Result<bool> {
    Ok(arrival_paths(g, set)?.is_finite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn strings(g: &Graph, arr: &ArrivalSet) -> Vec<String> {
        arr.paths()
            .unwrap()
            .iter()
            .map(|p| g.path_string(p))
            .collect()
    }

    #[test]
    fn full_set_arrives_at_vertices_only() {
        for g in [
            fixtures::g2(),
            fixtures::g3(),
            fixtures::g4(),
            fixtures::cycle(3),
        ] {
            let arr = arrival_paths(&g, &g.all_vertices()).unwrap();
            let mut expected = g.vertex_names().to_vec();
            expected.sort();
            assert_eq!(strings(&g, &arr), expected);
        }
    }

    #[test]
    fn g4_arrivals() {
        let g4 = fixtures::g4();
        let arr = arrival_paths(&g4, &g4.vertex_set(&["v5"]).unwrap()).unwrap();
        assert_eq!(strings(&g4, &arr), ["v5", "f"]);
        let w = g4.vertex_set(&["v2", "v3", "v4"]).unwrap();
        assert_eq!(
            strings(&g4, &arrival_paths(&g4, &w).unwrap()),
            ["v2", "v3", "v4", "a"]
        );
        assert!(is_finitary(&g4, &w).unwrap());
    }

    #[test]
    fn g2_sink_is_not_finitary() {
        let g2 = fixtures::g2();
        let w = g2.vertex_set(&["v2"]).unwrap();
        match arrival_paths(&g2, &w).unwrap() {
            ArrivalSet::Infinite(c) => assert_eq!(c.names(&g2), ["c"]),
            other => panic!("expected infinite, got {other:?}"),
        }
        assert!(!is_finitary(&g2, &w).unwrap());
        assert!(is_finitary(&g2, &g2.all_vertices()).unwrap());
    }

    #[test]
    fn preconditions() {
        let g4 = fixtures::g4();
        assert_eq!(arrival_paths(&g4, &VertexSet::new()), Err(Error::EmptySet));
        assert_eq!(
            arrival_paths(&g4, &g4.vertex_set(&["v1"]).unwrap()),
            Err(Error::NotHereditary)
        );
    }

    #[test]
    fn chain_arrivals() {
        let g3 = fixtures::g3();
        let w = g3.vertex_set(&["v3", "v4"]).unwrap();
        assert_eq!(
            strings(&g3, &arrival_paths(&g3, &w).unwrap()),
            ["v3", "v4", "e2", "e1*e2"]
        );
    }
}
