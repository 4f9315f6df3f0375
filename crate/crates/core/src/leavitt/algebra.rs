use std::collections::HashMap;

use num_traits::One;

use super::element::{AlgebraElement, Coeff, Monomial};
use crate::analysis::{arrival_paths, ArrivalSet};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph, Path, VertexSet};

/// One edge `γ(v) ∈ s^{-1}(v)` for every non-sink vertex `v`. Monomials
/// `p q*` where `p` and `q` both end in the same special edge are exactly
/// the ones the normal form eliminates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialEdgeChoice(Vec<Option<usize>>);

impl SpecialEdgeChoice {
    /// The edge with the lexicographically smallest identifier at each vertex.
    pub fn smallest_ids(g: &Graph) -> Self {
        SpecialEdgeChoice(
            (0..g.vertex_count())
                .map(|v| {
                    g.out_edges(v)
                        .iter()
                        .copied()
                        .min_by(|&a, &b| g.edge(a).id.cmp(&g.edge(b).id))
                })
                .collect(),
        )
    }

    /// Explicit choice keyed by vertex identifier; unlisted non-sinks get the
    /// default.
    pub fn from_names(g: &Graph, choice: &HashMap<String, String>) -> Result<Self> {
        let mut special = Self::smallest_ids(g);
        for (v, e) in choice {
            let v = g.vertex_id(v)?;
            let e = g.edge_id(e)?;
            if g.edge(e).src != v {
                return Err(Error::NotAPath(format!(
                    "{} does not start at {}",
                    g.edge(e).id,
                    g.vertex_name(v)
                )));
            }
            special.0[v] = Some(e);
        }
        Ok(special)
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.0.get(v).copied().flatten()
    }
}

/// A generator of `L(Γ)` as an algebra: a vertex, an edge or a ghost edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Vertex(usize),
    Edge(usize),
    Ghost(usize),
}

/// Arithmetic in the Leavitt path algebra of a fixed graph.
///
/// All results are returned in normal form with respect to the algebra's
/// special-edge choice; elements built by hand should be passed through
/// [`LeavittAlgebra::normal_form`] before comparison.
#[derive(Clone, Debug)]
pub struct LeavittAlgebra<'g> {
    graph: &'g Graph,
    special: SpecialEdgeChoice,
}

impl<'g> LeavittAlgebra<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_special(graph, SpecialEdgeChoice::smallest_ids(graph))
    }

    pub fn with_special(graph: &'g Graph, special: SpecialEdgeChoice) -> Self {
        LeavittAlgebra { graph, special }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn special(&self) -> &SpecialEdgeChoice {
        &self.special
    }

    pub fn vertex(&self, v: usize) -> AlgebraElement {
        AlgebraElement::monomial(Monomial::vertex(v))
    }

    pub fn edge(&self, e: usize) -> AlgebraElement {
        self.path(&Path::edge(self.graph, e))
    }

    pub fn ghost(&self, e: usize) -> AlgebraElement {
        self.path_star(&Path::edge(self.graph, e))
    }

    /// A path as an element; normalized, since a path is itself a basis
    /// monomial.
    pub fn path(&self, p: &Path) -> AlgebraElement {
        AlgebraElement::monomial(Monomial::path(p.clone()))
    }

    pub fn path_star(&self, p: &Path) -> AlgebraElement {
        AlgebraElement::monomial(Monomial::path_star(p.clone()))
    }

    /// `1 = Σ_v v`.
    pub fn one(&self) -> AlgebraElement {
        self.sum_of_vertices(&self.graph.all_vertices())
    }

    pub fn sum_of_vertices(&self, set: &VertexSet) -> AlgebraElement {
        set.iter()
            .map(|v| (Monomial::vertex(v), Coeff::one()))
            .collect()
    }

    pub fn generator(&self, g: Generator) -> AlgebraElement {
        match g {
            Generator::Vertex(v) => self.vertex(v),
            Generator::Edge(e) => self.edge(e),
            Generator::Ghost(e) => self.ghost(e),
        }
    }

    /// `V ∪ E ∪ E*` in that order.
    pub fn generators(&self) -> Vec<Generator> {
        let n = self.graph.vertex_count();
        let m = self.graph.edge_count();
        (0..n)
            .map(Generator::Vertex)
            .chain((0..m).map(Generator::Edge))
            .chain((0..m).map(Generator::Ghost))
            .collect()
    }

    pub fn generator_name(&self, g: Generator) -> String {
        match g {
            Generator::Vertex(v) => self.graph.vertex_name(v).to_string(),
            Generator::Edge(e) => self.graph.edge(e).id.clone(),
            Generator::Ghost(e) => format!("{}^*", self.graph.edge(e).id),
        }
    }

    /// Whether `m` ends in the same special edge on both sides.
    fn is_redex(&self, m: &Monomial) -> bool {
        match (m.p().last_edge(), m.q().last_edge()) {
            (Some(a), Some(b)) => a == b && self.special.get(self.graph.edge(a).src) == Some(a),
            _ => false,
        }
    }

    /// Basis monomials are those the normal form leaves untouched.
    pub fn is_basis_monomial(&self, m: &Monomial) -> bool {
        !self.is_redex(m)
    }

    /// Whether every monomial is a basis monomial.
    pub fn is_normal(&self, a: &AlgebraElement) -> bool {
        a.monomials().all(|m| !self.is_redex(m))
    }

    /// Rewrites `p₁e (q₁e)*` with `e = γ(v)` special at `v = s(e)` into
    /// `p₁q₁* − Σ_{f ∈ s^{-1}(v), f ≠ e} (p₁f)(q₁f)*` until no such
    /// monomial remains. Each step shortens the redex or replaces it by
    /// monomials ending in non-special edges, so this terminates.
    pub fn normal_form(&self, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in a {
            self.reduce_into(m.clone(), c.clone(), &mut out);
        }
        out
    }

    fn reduce_into(&self, m: Monomial, c: Coeff, out: &mut AlgebraElement) {
        let mut pending = vec![(m, c)];
        while let Some((m, c)) = pending.pop() {
            if !self.is_redex(&m) {
                out.add_term(m, c);
                continue;
            }
            let (p, q) = m.into_parts();
            let (p1, e) = p.split_last(self.graph).expect("redex has edges");
            let (q1, _) = q.split_last(self.graph).expect("redex has edges");
            let v = self.graph.edge(e).src;
            for &f in self.graph.out_edges(v) {
                if f == e {
                    continue;
                }
                let pf = p1.then(self.graph, f).expect("f starts at r(p1)");
                let qf = q1.then(self.graph, f).expect("f starts at r(q1)");
                out.add_term(Monomial::new(pf, qf).expect("same range"), -c.clone());
            }
            pending.push((Monomial::new(p1, q1).expect("same range"), c));
        }
    }

    /// Checks that every monomial of `a` is a well-formed monomial of this
    /// algebra's graph.
    pub fn validate(&self, a: &AlgebraElement) -> Result<()> {
        let g = self.graph;
        let check_path = |p: &Path| -> Result<()> {
            let rebuilt = if p.is_vertex() {
                if p.source() >= g.vertex_count() {
                    return Err(Error::ForeignElement(format!(
                        "vertex index {}",
                        p.source()
                    )));
                }
                Path::vertex(p.source())
            } else {
                if let Some(&e) = p.edges().iter().find(|&&e| e >= g.edge_count()) {
                    return Err(Error::ForeignElement(format!("edge index {e}")));
                }
                Path::from_edges(g, p.edges()).map_err(|e| Error::ForeignElement(e.to_string()))?
            };
            if rebuilt != *p {
                return Err(Error::ForeignElement(
                    "path endpoints disagree with graph".into(),
                ));
            }
            Ok(())
        };
        for m in a.monomials() {
            check_path(m.p())?;
            check_path(m.q())?;
        }
        Ok(())
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (x, cx) in a {
            for (y, cy) in b {
                if let Some(m) = x.product(y) {
                    self.reduce_into(m, cx * cy, &mut out);
                }
            }
        }
        out
    }

    /// [`multiply`](Self::multiply) after validating both operands.
    pub fn try_multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.multiply(a, b))
    }

    /// `a^k` for `k ≥ 0`, with `a^0 = 1`.
    pub fn pow(&self, a: &AlgebraElement, k: u32) -> AlgebraElement {
        (0..k).fold(self.one(), |acc, _| self.multiply(&acc, a))
    }

    /// The involution `(c pq*)* = c̄ qp*`; conjugation is trivial on rationals.
    pub fn star(&self, a: &AlgebraElement) -> AlgebraElement {
        a.iter().map(|(m, c)| (m.star(), c.clone())).collect()
    }

    pub fn commutator(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        &self.multiply(a, b) - &self.multiply(b, a)
    }

    /// The first generator not commuting with `a`, or `None` when `a` is
    /// central. Vertices, edges and ghost edges generate `L(Γ)`, so these
    /// commutators suffice.
    pub fn non_commuting_generator(&self, a: &AlgebraElement) -> Option<Generator> {
        self.generators()
            .into_iter()
            .find(|&g| !self.commutator(a, &self.generator(g)).is_zero())
    }

    pub fn is_central(&self, a: &AlgebraElement) -> bool {
        self.non_commuting_generator(a).is_none()
    }

    /// `e(W) = Σ_{p ∈ Arr(W)} p p*` for a nonempty finitary hereditary `W`.
    pub fn build_e(&self, set: &VertexSet) -> Result<AlgebraElement> {
        let paths = self.finite_arrivals(set)?;
        let raw: AlgebraElement = paths
            .into_iter()
            .map(|p| {
                (
                    Monomial::new(p.clone(), p).expect("same range"),
                    Coeff::one(),
                )
            })
            .collect();
        Ok(self.normal_form(&raw))
    }

    fn finite_arrivals(&self, set: &VertexSet) -> Result<Vec<Path>> {
        match arrival_paths(self.graph, set)? {
            ArrivalSet::Finite(paths) => Ok(paths),
            ArrivalSet::Infinite(c) => Err(Error::NotFinitary(c.names(self.graph).join("*"))),
        }
    }

    fn require_exitless(&self, c: &Cycle) -> Result<()> {
        match self.graph.exits(c).first() {
            Some(&e) => Err(Error::CycleHasExit(self.graph.edge(e).id.clone())),
            None => Ok(()),
        }
    }

    /// `z(C) = e1⋯en + e2⋯en e1 + ⋯ + en e1⋯e(n−1)` for an exitless cycle.
    pub fn build_z(&self, c: &Cycle) -> Result<AlgebraElement> {
        self.require_exitless(c)?;
        Ok(c.rotations(self.graph)
            .into_iter()
            .map(|p| (Monomial::path(p), Coeff::one()))
            .collect())
    }

    /// `Σ_{p ∈ Arr(C)} p z p*` with `z = z(C)^k`, `z = (z(C)*)^{-k}` for
    /// negative `k`, and `z = Σ_{v ∈ V(C)} v` for `k = 0`.
    pub fn build_conjugated(&self, c: &Cycle, k: i32) -> Result<AlgebraElement> {
        let z = self.build_z(c)?;
        let vertices = c.vertex_set(self.graph);
        let arrivals = self.finite_arrivals(&vertices)?;
        let base = if k >= 0 { z } else { self.star(&z) };
        let power = (0..k.unsigned_abs()).fold(self.sum_of_vertices(&vertices), |acc, _| {
            self.multiply(&acc, &base)
        });
        Ok(arrivals
            .iter()
            .map(|p| {
                let left = self.multiply(&self.path(p), &power);
                self.multiply(&left, &self.path_star(p))
            })
            .sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn alg_check(g: &Graph, text: &str) -> AlgebraElement {
        LeavittAlgebra::new(g).parse(text).unwrap()
    }

    #[test]
    fn ghost_times_edge() {
        let g = fixtures::g4();
        let alg = LeavittAlgebra::new(&g);
        let (a, f) = (g.edge_id("a").unwrap(), g.edge_id("f").unwrap());
        assert!(alg.multiply(&alg.ghost(a), &alg.edge(f)).is_zero());
        assert_eq!(
            alg.multiply(&alg.ghost(a), &alg.edge(a)),
            alg.vertex(g.edge(a).dst)
        );
    }

    #[test]
    fn normal_form_examples() {
        let g = Graph::new(["v", "w"], [("e", "v", "w"), ("f", "v", "w")]).unwrap();
        let alg = LeavittAlgebra::new(&g);
        let ee = alg_check(&g, "1 e·e^*");
        assert!(!alg.is_normal(&ee));
        assert_eq!(alg.normal_form(&ee), alg_check(&g, "1 v - 1 f·f^*"));

        let basis = alg_check(&g, "1 f·f^* + 2 e·f^*");
        assert_eq!(alg.normal_form(&basis), basis);

        let c3 = fixtures::cycle(3);
        let alg = LeavittAlgebra::new(&c3);
        assert_eq!(
            alg.normal_form(&alg_check(&c3, "1 e1·e1^*")),
            alg_check(&c3, "1 v1")
        );
    }

    #[test]
    fn continuation_product_normalizes() {
        let c3 = fixtures::cycle(3);
        let alg = LeavittAlgebra::new(&c3);
        let lhs = alg_check(&c3, "1 e1·e1^**e3^*");
        let rhs = alg_check(&c3, "1 e3*e1*e2·e2^*");
        assert_eq!(alg.multiply(&lhs, &rhs), alg_check(&c3, "1 e1"));
    }

    #[test]
    fn star_examples() {
        let g = fixtures::g4();
        let alg = LeavittAlgebra::new(&g);
        let v = alg.vertex(0);
        assert_eq!(alg.star(&v), v);
        let x = alg_check(&g, "1 a·d^*");
        assert_eq!(alg.star(&x), alg_check(&g, "1 d·a^*"));
        let e = alg.build_e(&g.vertex_set(&["v5"]).unwrap()).unwrap();
        assert_eq!(alg.star(&e), e);
    }

    #[test]
    fn commutator_examples() {
        let c3 = fixtures::cycle(3);
        let alg = LeavittAlgebra::new(&c3);
        let a = alg_check(&c3, "1 e1 + 2 e2^* - 1 v3");
        assert!(alg.commutator(&a, &a).is_zero());
        assert!(alg.commutator(&alg.one(), &a).is_zero());
        let z = alg.build_z(&c3.cycles()[0]).unwrap();
        assert!(alg.commutator(&z, &alg.edge(0)).is_zero());
    }

    #[test]
    fn centrality_examples() {
        let c3 = fixtures::cycle(3);
        let alg = LeavittAlgebra::new(&c3);
        assert!(alg.is_central(&alg.one()));
        let witness = alg.non_commuting_generator(&alg.edge(0)).unwrap();
        assert!(!alg
            .commutator(&alg.edge(0), &alg.generator(witness))
            .is_zero());

        let g4 = fixtures::g4();
        let alg = LeavittAlgebra::new(&g4);
        let e = alg.build_e(&g4.vertex_set(&["v5"]).unwrap()).unwrap();
        assert!(alg.is_central(&e));
    }

    #[test]
    fn build_e_examples() {
        let g4 = fixtures::g4();
        let alg = LeavittAlgebra::new(&g4);
        assert_eq!(alg.build_e(&g4.all_vertices()).unwrap(), alg.one());
        assert_eq!(
            alg.build_e(&g4.vertex_set(&["v5"]).unwrap()).unwrap(),
            alg_check(&g4, "1 v5 + 1 f·f^*")
        );
        // a is special at v1, so a a* rewrites to v1 - f f*.
        let w = g4.vertex_set(&["v2", "v3", "v4"]).unwrap();
        let e = alg.build_e(&w).unwrap();
        assert_eq!(
            e,
            alg.normal_form(&alg_check(&g4, "1 v2 + 1 v3 + 1 v4 + 1 a·a^*"))
        );
        assert_eq!(e, alg_check(&g4, "1 v1 + 1 v2 + 1 v3 + 1 v4 - 1 f·f^*"));

        let g2 = fixtures::g2();
        let alg = LeavittAlgebra::new(&g2);
        assert_eq!(
            alg.build_e(&g2.vertex_set(&["v2"]).unwrap()),
            Err(Error::NotFinitary("c".into()))
        );
    }

    #[test]
    fn build_z_examples() {
        let g = Graph::new(["v1"], [("c", "v1", "v1")]).unwrap();
        let alg = LeavittAlgebra::new(&g);
        assert_eq!(alg.build_z(&g.cycles()[0]).unwrap(), alg_check(&g, "1 c"));

        let c3 = fixtures::cycle(3);
        let alg = LeavittAlgebra::new(&c3);
        assert_eq!(
            alg.build_z(&c3.cycles()[0]).unwrap(),
            alg_check(&c3, "1 e1*e2*e3·v1 + 1 e2*e3*e1·v2 + 1 e3*e1*e2·v3")
        );

        let g4 = fixtures::g4();
        let alg = LeavittAlgebra::new(&g4);
        let bcd = Cycle::from_names(&g4, &["b", "c", "d"]).unwrap();
        assert_eq!(
            alg.build_z(&bcd).unwrap(),
            alg_check(&g4, "1 b*c*d + 1 c*d*b + 1 d*b*c")
        );

        let g2 = fixtures::g2();
        let alg = LeavittAlgebra::new(&g2);
        assert_eq!(
            alg.build_z(&g2.cycles()[0]),
            Err(Error::CycleHasExit("f".into()))
        );
    }

    #[test]
    fn build_conjugated_examples() {
        let c3 = fixtures::cycle(3);
        let alg = LeavittAlgebra::new(&c3);
        let c = &c3.cycles()[0];
        assert_eq!(alg.build_conjugated(c, 0).unwrap(), alg.one());
        assert_eq!(alg.build_conjugated(c, 1).unwrap(), alg.build_z(c).unwrap());

        let g4 = fixtures::g4();
        let alg = LeavittAlgebra::new(&g4);
        let bcd = Cycle::from_names(&g4, &["b", "c", "d"]).unwrap();
        let w = bcd.vertex_set(&g4);
        assert_eq!(
            alg.build_conjugated(&bcd, 0).unwrap(),
            alg.build_e(&w).unwrap()
        );
        let zc = alg.build_conjugated(&bcd, 1).unwrap();
        let expected = alg.normal_form(&alg_check(
            &g4,
            "1 b*c*d + 1 c*d*b + 1 d*b*c + 1 a*b*c*d·a^*",
        ));
        assert_eq!(zc, expected);
        for k in -2..=2 {
            assert!(
                alg.is_central(&alg.build_conjugated(&bcd, k).unwrap()),
                "k = {k}"
            );
        }
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let g4 = fixtures::g4();
        let c3 = fixtures::cycle(3);
        let x = alg_check(&g4, "1 f·f^*");
        let alg = LeavittAlgebra::new(&c3);
        assert!(matches!(
            alg.try_multiply(&x, &alg.one()),
            Err(Error::ForeignElement(_))
        ));
        assert!(alg.try_multiply(&alg.one(), &alg.one()).is_ok());
    }

    #[test]
    fn custom_special_edges() {
        let g4 = fixtures::g4();
        let choice = HashMap::from([("v1".to_string(), "f".to_string())]);
        let alg =
            LeavittAlgebra::with_special(&g4, SpecialEdgeChoice::from_names(&g4, &choice).unwrap());
        let e = alg.build_e(&g4.vertex_set(&["v5"]).unwrap()).unwrap();
        assert_eq!(e, alg.normal_form(&alg_check(&g4, "1 v5 + 1 v1 - 1 a·a^*")));
        assert!(alg.is_central(&e));
        let bad = HashMap::from([("v2".to_string(), "f".to_string())]);
        assert!(SpecialEdgeChoice::from_names(&g4, &bad).is_err());
    }
}
