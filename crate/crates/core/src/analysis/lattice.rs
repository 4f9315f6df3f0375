use std::collections::BTreeSet;

use super::arrival::is_finitary;
use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph, VertexSet};

/// Default bound on `|V|` for the exhaustive subset scan.
pub const DEFAULT_MAX_VERTICES: usize = 16;

/// Vertices with no descendant in `set`. Always hereditary; the annihilator
/// of the empty set is every vertex.
pub fn annihilator(g: &Graph, set: &VertexSet) -> VertexSet {
    let reach = g.ancestors_of_set(set);
    reach.complement(g.vertex_count())
}

/// `(W⊥)⊥`: the largest hereditary set all of whose vertices reach `set`.
pub fn double_annihilator(g: &Graph, set: &VertexSet) -> VertexSet {
    annihilator(g, &annihilator(g, set))
}

/// The finitary hereditary annihilator subsets, with the empty set as bottom
/// and `V` as top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitaryLattice {
    /// Sorted by size, then by member names.
    pub elements: Vec<VertexSet>,
    /// Minimal nonempty elements, in the same order.
    pub atoms: Vec<VertexSet>,
}

impl FinitaryLattice {
    pub fn contains(&self, set: &VertexSet) -> bool {
        self.elements.contains(set)
    }

    pub fn meet(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        a.intersection(b)
    }

    /// `(a⊥ ∩ b⊥)⊥`.
    pub fn join(&self, g: &Graph, a: &VertexSet, b: &VertexSet) -> VertexSet {
        annihilator(g, &annihilator(g, a).intersection(&annihilator(g, b)))
    }

    /// `a⊥`, the Boolean complement.
    pub fn complement(&self, g: &Graph, a: &VertexSet) -> VertexSet {
        annihilator(g, a)
    }

    pub fn atoms_below<'a>(&'a self, set: &'a VertexSet) -> impl Iterator<Item = &'a VertexSet> {
        self.atoms.iter().filter(move |a| a.is_subset(set))
    }
}

/// Enumerates `(S⊥)⊥` over every subset `S`, keeps the finitary ones and
/// checks that they are closed under meet and join.
pub fn finitary_lattice(g: &Graph, max_vertices: usize) -> Result<FinitaryLattice> {
    let n = g.vertex_count();
    let limit = max_vertices.min(63);
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "vertex count",
            actual: n,
            limit,
        });
    }

    let reach = g.reachability();
    let perp =
        |set: &VertexSet| -> VertexSet { (0..n).filter(|&v| reach[v].is_disjoint(set)).collect() };

    let mut closed: BTreeSet<VertexSet> = BTreeSet::new();
    for mask in 0..(1u64 << n) {
        closed.insert(perp(&perp(&VertexSet::from_mask(n, mask))));
    }

    let mut elements = Vec::new();
    for set in closed {
        if set.is_empty() || is_finitary(g, &set)? {
            elements.push(set);
        }
    }
    elements.sort_by_cached_key(|s| (s.len(), g.set_names(s)));

    let members: BTreeSet<&VertexSet> = elements.iter().collect();
    for a in &elements {
        for b in &elements {
            let meet = a.intersection(b);
            let join = perp(&perp(a).intersection(&perp(b)));
            if !members.contains(&meet) || !members.contains(&join) {
                return Err(Error::Inconsistent(format!(
                    "finitary annihilator sets {:?} and {:?} are not closed under meet and join",
                    g.set_names(a),
                    g.set_names(b)
                )));
            }
        }
    }

    let atoms = elements
        .iter()
        .filter(|a| !a.is_empty())
        .filter(|a| {
            !elements
                .iter()
                .any(|b| !b.is_empty() && b != *a && b.is_subset(a))
        })
        .cloned()
        .collect();

    Ok(FinitaryLattice { elements, atoms })
}

/// How an atom contributes to the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomKind {
    /// A copy of the scalars, spanned by `e(A)`.
    Scalar,
    /// A copy of the circle algebra, coming from this finitary exitless cycle.
    Circle(Cycle),
}

/// Classifies an atom by the finitary exitless cycle whose double
/// annihilator equals it, if there is one.
pub fn classify_atom(g: &Graph, atom: &VertexSet) -> Result<AtomKind> {
    if atom.is_empty() {
        return Err(Error::EmptySet);
    }
    if !g.is_hereditary(atom) {
        return Err(Error::NotHereditary);
    }
    let mut matches = Vec::new();
    for cycle in g.ne_cycles() {
        let vertices = cycle.vertex_set(g);
        if is_finitary(g, &vertices)? && double_annihilator(g, &vertices) == *atom {
            matches.push(cycle);
        }
    }
    match matches.len() {
        0 => Ok(AtomKind::Scalar),
        1 => Ok(AtomKind::Circle(matches.pop().expect("one match"))),
        _ => Err(Error::Inconsistent(format!(
            "several exitless cycles match atom {:?}",
            g.set_names(atom)
        ))),
    }
}
