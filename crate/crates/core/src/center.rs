//! The center `Z(L(Γ)) ≅ ℂ^a ⊕ T^b` with explicit generators.
//!
//! Each atom `A` of the finitary annihilator lattice contributes the central
//! idempotent `e(A)`. An atom that is the double annihilator of a finitary
//! exitless cycle `C` contributes a circle summand, presented by the unitary
//! `Σ_{p ∈ Arr(C)} p z(C) p*` of the corner `e(A) L(Γ)` and its adjoint;
//! every other atom contributes a scalar summand. The center of `CK(Γ)` is
//! the closure, with the Laurent algebra of each circle summand completing
//! to the continuous functions on the circle.

use serde::{Deserialize, Serialize};

use crate::analysis::{classify_atom, finitary_lattice, AtomKind};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::leavitt::{linalg::Echelon, AlgebraElement, LeavittAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomReport {
    pub vertices: VertexSet,
    pub kind: AtomKind,
}

/// Role of a generator in the report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorRole {
    /// `e(A)` for the atom at this index.
    Idempotent(usize),
    /// The conjugated power `Σ p z(C)^k p*` for the circle atom at this index.
    CirclePower(usize, i32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralGenerator {
    pub role: GeneratorRole,
    pub element: AlgebraElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterReport {
    pub atoms: Vec<AtomReport>,
    /// Number of scalar summands `a`.
    pub c_count: usize,
    /// Number of circle summands `b`.
    pub t_count: usize,
    pub generators: Vec<CentralGenerator>,
    pub verified: bool,
    /// Identities that failed during verification; empty iff `verified`.
    pub failures: Vec<String>,
}

/// Serialized report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CenterReportDoc {
    pub atoms: Vec<AtomDoc>,
    pub c_count: usize,
    pub t_count: usize,
    pub generators: Vec<String>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomDoc {
    pub vertices: Vec<String>,
    #[serde(rename = "type")]
    pub kind: String,
    pub cycle: Option<Vec<String>>,
}

impl CenterReport {
    pub fn to_doc(&self, g: &Graph) -> CenterReportDoc {
        let alg = LeavittAlgebra::new(g);
        CenterReportDoc {
            atoms: self
                .atoms
                .iter()
                .map(|a| AtomDoc {
                    vertices: g.set_names(&a.vertices),
                    kind: match a.kind {
                        AtomKind::Scalar => "C".into(),
                        AtomKind::Circle(_) => "T".into(),
                    },
                    cycle: match &a.kind {
                        AtomKind::Scalar => None,
                        AtomKind::Circle(c) => Some(c.names(g)),
                    },
                })
                .collect(),
            c_count: self.c_count,
            t_count: self.t_count,
            generators: self
                .generators
                .iter()
                .map(|gen| alg.format(&gen.element))
                .collect(),
            verified: self.verified,
        }
    }

    pub fn to_json(&self, g: &Graph) -> String {
        serde_json::to_string_pretty(&self.to_doc(g)).expect("report serializes")
    }

    /// `ℂ ⊕ ℂ ⊕ T`-style summary; `0` for the empty sum.
    pub fn isomorphism_type(&self) -> String {
        let parts: Vec<&str> = std::iter::repeat_n("ℂ", self.c_count)
            .chain(std::iter::repeat_n("T", self.t_count))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }

    pub fn idempotent(&self, atom: usize) -> Option<&AlgebraElement> {
        self.generators
            .iter()
            .find(|g| g.role == GeneratorRole::Idempotent(atom))
            .map(|g| &g.element)
    }
}

/// Computes the atoms, their classification and generators, and verifies
/// every generator symbolically.
pub fn compute_center(g: &Graph, max_vertices: usize) -> Result<CenterReport> {
    let lattice = finitary_lattice(g, max_vertices)?;
    let alg = LeavittAlgebra::new(g);

    let mut atoms = Vec::new();
    let mut generators = Vec::new();
    for (i, set) in lattice.atoms.iter().enumerate() {
        let kind = classify_atom(g, set)?;
        generators.push(CentralGenerator {
            role: GeneratorRole::Idempotent(i),
            element: alg.build_e(set)?,
        });
        if let AtomKind::Circle(c) = &kind {
            for k in [1, -1] {
                generators.push(CentralGenerator {
                    role: GeneratorRole::CirclePower(i, k),
                    element: alg.build_conjugated(c, k)?,
                });
            }
        }
        atoms.push(AtomReport {
            vertices: set.clone(),
            kind,
        });
    }

    let t_count = atoms
        .iter()
        .filter(|a| matches!(a.kind, AtomKind::Circle(_)))
        .count();
    let mut report = CenterReport {
        c_count: atoms.len() - t_count,
        t_count,
        atoms,
        generators,
        verified: false,
        failures: Vec::new(),
    };
    report.failures = verify(&alg, &report);
    report.verified = report.failures.is_empty();
    Ok(report)
}

fn verify(alg: &LeavittAlgebra<'_>, report: &CenterReport) -> Vec<String> {
    let g = alg.graph();
    let mut failures = Vec::new();
    let atom_name = |i: usize| format!("{{{}}}", g.set_names(&report.atoms[i].vertices).join(","));

    for gen in &report.generators {
        if let Some(w) = alg.non_commuting_generator(&gen.element) {
            failures.push(format!(
                "{:?} does not commute with {}",
                gen.role,
                alg.generator_name(w)
            ));
        }
    }

    let idempotents: Vec<&AlgebraElement> = (0..report.atoms.len())
        .map(|i| report.idempotent(i).expect("one idempotent per atom"))
        .collect();
    for (i, e) in idempotents.iter().enumerate() {
        if alg.multiply(e, e) != **e {
            failures.push(format!("e({}) is not idempotent", atom_name(i)));
        }
        if alg.star(e) != **e {
            failures.push(format!("e({}) is not self-adjoint", atom_name(i)));
        }
        for (j, f) in idempotents.iter().enumerate().skip(i + 1) {
            if !alg.multiply(e, f).is_zero() {
                failures.push(format!(
                    "e({}) and e({}) are not orthogonal",
                    atom_name(i),
                    atom_name(j)
                ));
            }
        }
    }
    let total: AlgebraElement = idempotents.iter().map(|e| (*e).clone()).sum();
    if total != alg.one() {
        failures.push("the atom idempotents do not sum to 1".into());
    }

    for gen in &report.generators {
        let GeneratorRole::CirclePower(i, _) = gen.role else {
            continue;
        };
        let e = idempotents[i];
        let zc = &gen.element;
        let adj = alg.star(zc);
        if alg.multiply(e, zc) != *zc || alg.multiply(zc, e) != *zc {
            failures.push(format!(
                "{:?} does not live in the corner of e({})",
                gen.role,
                atom_name(i)
            ));
        }
        if alg.multiply(zc, &adj) != *e || alg.multiply(&adj, zc) != *e {
            failures.push(format!(
                "{:?} is not unitary in the corner of e({})",
                gen.role,
                atom_name(i)
            ));
        }
    }
    failures
}

/// Comparison of the predicted center with the brute-force one in degrees
/// at most `degree`.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub degree: usize,
    /// Predicted central elements that fit in the degree bound.
    pub predicted: Vec<AlgebraElement>,
    pub predicted_dim: usize,
    pub oracle_dim: usize,
    /// Every predicted element lies in the brute-force solution space.
    pub contained: bool,
    pub dims_match: bool,
    /// Predicted elements missing from the brute-force space.
    pub missing: Vec<AlgebraElement>,
}

/// Predicted elements are `1`, `e(W)` for every nonempty lattice element and
/// the conjugated powers of `z(C)` for circle atoms, kept when their normal
/// form has degree at most `degree`.
pub fn cross_check_center(
    g: &Graph,
    degree: usize,
    oracle_bound: usize,
    max_vertices: usize,
) -> Result<CrossCheck> {
    let alg = LeavittAlgebra::new(g);
    let oracle = alg.center_degree_bounded(degree, oracle_bound)?;
    let lattice = finitary_lattice(g, max_vertices)?;

    let mut candidates = vec![alg.one()];
    for set in lattice.elements.iter().filter(|s| !s.is_empty()) {
        candidates.push(alg.build_e(set)?);
    }
    for atom in &lattice.atoms {
        if let AtomKind::Circle(c) = classify_atom(g, atom)? {
            // Degrees grow with |k|, so stop at the first power that does not fit.
            for sign in [1, -1] {
                for k in 1.. {
                    let x = alg.build_conjugated(&c, sign * k)?;
                    if x.degree() > degree {
                        break;
                    }
                    candidates.push(x);
                }
            }
        }
    }
    let predicted: Vec<AlgebraElement> = candidates
        .into_iter()
        .filter(|x| x.degree() <= degree)
        .collect();

    let mut rank = Echelon::new();
    let mut missing = Vec::new();
    for x in &predicted {
        let coords = oracle
            .coordinates(x)
            .expect("degree-bounded normal form uses candidate monomials");
        rank.insert(&coords);
        if !oracle.contains(x) {
            missing.push(x.clone());
        }
    }

    Ok(CrossCheck {
        degree,
        predicted_dim: rank.rank(),
        oracle_dim: oracle.dimension(),
        contained: missing.is_empty(),
        dims_match: rank.rank() == oracle.dimension(),
        predicted,
        missing,
    })
}
