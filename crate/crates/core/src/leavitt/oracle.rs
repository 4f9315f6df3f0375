//! Brute-force center of a filtered piece of `L(Γ)`.
//!
//! The unknown is a combination of basis monomials `p q*` with
//! `|p|, |q| ≤ L`. Its commutators with all of `V ∪ E ∪ E*` are computed
//! exactly, so the solution space is exactly the center intersected with
//! that piece; no truncation is involved.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::algebra::LeavittAlgebra;
use super::element::{AlgebraElement, Coeff, Monomial};
use super::linalg::{Echelon, SparseVec};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path};

/// Default bound on the number of candidate monomials.
pub const DEFAULT_ORACLE_BOUND: usize = 4000;

/// All paths of length at most `max_len`, vertices first.
pub fn paths_up_to(g: &Graph, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> = (0..g.vertex_count()).map(Path::vertex).collect();
    let mut layer = all.clone();
    for _ in 0..max_len {
        let next: Vec<Path> = layer
            .iter()
            .flat_map(|p| {
                g.out_edges(p.range())
                    .iter()
                    .map(move |&e| p.then(g, e).expect("edge starts at range"))
            })
            .collect();
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// The central elements of degree at most `degree`, as an exact basis.
#[derive(Clone, Debug)]
pub struct BoundedCenter {
    pub degree: usize,
    /// The candidate basis monomials, indexing the coordinates.
    pub monomials: Vec<Monomial>,
    /// Basis of the solution space in reduced form.
    pub basis: Vec<AlgebraElement>,
    span: Echelon,
    index: HashMap<Monomial, usize>,
}

impl BoundedCenter {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `a` in the candidate monomials, or `None` if `a` uses
    /// a monomial outside the filtered piece.
    pub fn coordinates(&self, a: &AlgebraElement) -> Option<SparseVec> {
        a.iter()
            .map(|(m, c)| self.index.get(m).map(|&i| (i, c.clone())))
            .collect()
    }

    /// Whether the normal-form element `a` lies in the solution space.
    pub fn contains(&self, a: &AlgebraElement) -> bool {
        self.coordinates(a).is_some_and(|v| self.span.contains(&v))
    }
}

impl LeavittAlgebra<'_> {
    /// The basis monomials `p q*` with `|p|, |q| ≤ degree`.
    pub fn basis_monomials(&self, degree: usize) -> Vec<Monomial> {
        let paths = paths_up_to(self.graph(), degree);
        let mut by_range: BTreeMap<usize, Vec<&Path>> = BTreeMap::new();
        for p in &paths {
            by_range.entry(p.range()).or_default().push(p);
        }
        let mut out = Vec::new();
        for group in by_range.values() {
            for p in group {
                for q in group {
                    let m = Monomial::new((*p).clone(), (*q).clone()).expect("same range");
                    if self.is_basis_monomial(&m) {
                        out.push(m);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Solves `[x, g] = 0` for all generators `g` over the span of basis
    /// monomials of degree at most `degree`.
    pub fn center_degree_bounded(&self, degree: usize, bound: usize) -> Result<BoundedCenter> {
        let monomials = self.basis_monomials(degree);
        if monomials.len() > bound {
            return Err(Error::LimitExceeded {
                what: "candidate monomial count",
                actual: monomials.len(),
                limit: bound,
            });
        }
        let index: HashMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();

        // One equation per (generator, output monomial).
        let mut rows: HashMap<(usize, Monomial), SparseVec> = HashMap::new();
        let generators: Vec<AlgebraElement> = self
            .generators()
            .into_iter()
            .map(|g| self.generator(g))
            .collect();
        for (j, m) in monomials.iter().enumerate() {
            let x = AlgebraElement::monomial(m.clone());
            for (gi, g) in generators.iter().enumerate() {
                for (out, c) in &self.commutator(&x, g) {
                    rows.entry((gi, out.clone()))
                        .or_default()
                        .insert(j, c.clone());
                }
            }
        }

        let mut equations = Echelon::new();
        let mut keys: Vec<&(usize, Monomial)> = rows.keys().collect();
        keys.sort();
        for key in keys {
            equations.insert(&rows[key]);
        }

        let kernel = equations.kernel(monomials.len());
        let mut span = Echelon::new();
        let basis = kernel
            .iter()
            .map(|v| {
                span.insert(v);
                v.iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&i, c): (&usize, &Coeff)| (monomials[i].clone(), c.clone()))
                    .collect()
            })
            .collect();

        Ok(BoundedCenter {
            degree,
            monomials,
            basis,
            span,
            index,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn counts_paths() {
        let g3 = fixtures::g3();
        assert_eq!(paths_up_to(&g3, 0).len(), 4);
        assert_eq!(paths_up_to(&g3, 3).len(), 4 + 3 + 2 + 1);
        let c3 = fixtures::cycle(3);
        assert_eq!(paths_up_to(&c3, 2).len(), 9);
    }

    #[test]
    fn g2_degree_two_center_is_scalars() {
        let g2 = fixtures::g2();
        let alg = LeavittAlgebra::new(&g2);
        let z = alg.center_degree_bounded(2, DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(z.dimension(), 1);
        assert!(z.contains(&alg.one()));
    }

    #[test]
    fn g3_degree_three_center_is_scalars() {
        let g3 = fixtures::g3();
        let alg = LeavittAlgebra::new(&g3);
        let z = alg.center_degree_bounded(3, DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(z.dimension(), 1);
        assert!(z.contains(&alg.one()));
    }

    #[test]
    fn c3_degree_three_center_has_z_and_its_adjoint() {
        let c3 = fixtures::cycle(3);
        let alg = LeavittAlgebra::new(&c3);
        let zc = alg.build_z(&c3.cycles()[0]).unwrap();
        let center = alg.center_degree_bounded(3, DEFAULT_ORACLE_BOUND).unwrap();
        assert!(center.contains(&alg.one()));
        assert!(center.contains(&zc));
        assert!(center.contains(&alg.star(&zc)));
        assert_eq!(center.dimension(), 3);
        assert!(!center.contains(&alg.edge(0)));
        for b in &center.basis {
            assert!(alg.is_central(b));
        }
    }

    #[test]
    fn guard_is_enforced() {
        let c3 = fixtures::cycle(3);
        let alg = LeavittAlgebra::new(&c3);
        assert!(matches!(
            alg.center_degree_bounded(3, 5),
            Err(Error::LimitExceeded { .. })
        ));
    }
}
