//! Text syntax for elements.
//!
//! A term is a rational coefficient followed by a monomial; terms are joined
//! by ` + ` and ` − ` (ASCII `-` is accepted on input). A monomial `p q*`
//! prints as the `*`-joined edge identifiers of `p`, a `·`, then the ghost
//! edges of `q*` in product order, each suffixed `^*`. Zero-length paths
//! print as their vertex, and a monomial `v v*` prints as just `v`:
//!
//! ```text
//! 1 v5 + 1 f·f^*
//! 2 e1*e2·v3 − 1/2 v1·e2^**e1^*
//! ```
//!
//! On input the coefficient may be omitted (meaning 1), a bare path `p`
//! means `p r(p)*` and a bare ghost word means `r(q) q*`.

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::algebra::LeavittAlgebra;
use super::element::{AlgebraElement, Coeff, Monomial};
use crate::error::{Error, Result};
use crate::graph::Path;

const DOT: char = '·';
const MINUS: char = '−';
const GHOST: &str = "^*";

impl LeavittAlgebra<'_> {
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let g = self.graph();
        let (p, q) = (m.p(), m.q());
        if p.is_vertex() && q.is_vertex() {
            return g.vertex_name(p.source()).to_string();
        }
        let left = g.path_string(p);
        let right = if q.is_vertex() {
            g.vertex_name(q.source()).to_string()
        } else {
            q.edges()
                .iter()
                .rev()
                .map(|&e| format!("{}{GHOST}", g.edge(e).id))
                .collect::<Vec<_>>()
                .join("*")
        };
        format!("{left}{DOT}{right}")
    }

    /// Canonical printing: terms ordered by `|p| + |q|`, then `p`, then `q`
    /// by identifier sequence.
    pub fn format(&self, a: &AlgebraElement) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let g = self.graph();
        let mut terms: Vec<(&Monomial, &Coeff)> = a.iter().collect();
        terms.sort_by_cached_key(|(m, _)| {
            (
                m.p().len() + m.q().len(),
                path_key(g, m.p()),
                path_key(g, m.q()),
            )
        });
        let mut out = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let text = self.format_monomial(m);
            if i == 0 {
                out.push_str(&format!("{c} {text}"));
            } else if c.is_negative() {
                out.push_str(&format!(" {MINUS} {} {text}", -c));
            } else {
                out.push_str(&format!(" + {c} {text}"));
            }
        }
        out
    }

    pub fn parse(&self, text: &str) -> Result<AlgebraElement> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::ElementParse("empty input".into()));
        }
        if tokens == ["0"] {
            return Ok(AlgebraElement::zero());
        }
        let mut out = AlgebraElement::zero();
        let mut i = 0;
        while i < tokens.len() {
            let mut sign = Coeff::one();
            if i > 0 {
                sign = match tokens[i] {
                    "+" => Coeff::one(),
                    "-" | "−" => -Coeff::one(),
                    other => {
                        return Err(Error::ElementParse(format!(
                            "expected + or − before \"{other}\""
                        )))
                    }
                };
                i += 1;
            }
            let coeff = match tokens.get(i).and_then(|t| parse_coeff(t)) {
                Some(c) => {
                    i += 1;
                    c
                }
                None => Coeff::one(),
            };
            let word = tokens
                .get(i)
                .ok_or_else(|| Error::ElementParse("missing monomial after coefficient".into()))?;
            out.add_term(self.parse_monomial(word)?, sign * coeff);
            i += 1;
        }
        Ok(out)
    }

    pub fn parse_monomial(&self, word: &str) -> Result<Monomial> {
        let g = self.graph();
        let bad = |msg: String| Error::ElementParse(msg);
        let monomial = match word.split_once(DOT) {
            None if word.ends_with(GHOST) => Monomial::path_star(self.parse_ghosts(word)?),
            None => Monomial::path(self.parse_path(word)?),
            Some((left, right)) => {
                let p = self.parse_path(left)?;
                let q = if right.contains(GHOST) {
                    self.parse_ghosts(right)?
                } else {
                    Path::vertex(g.vertex_id(right).map_err(|e| bad(e.to_string()))?)
                };
                Monomial::new(p, q).ok_or_else(|| {
                    bad(format!(
                        "\"{word}\": the two paths end at different vertices"
                    ))
                })?
            }
        };
        Ok(monomial)
    }

    fn parse_path(&self, word: &str) -> Result<Path> {
        let names: Vec<&str> = word.split('*').collect();
        if names.iter().any(|n| n.is_empty()) {
            return Err(Error::ElementParse(format!("malformed path \"{word}\"")));
        }
        self.graph()
            .path_from_names(&names)
            .map_err(|e| Error::ElementParse(format!("\"{word}\": {e}")))
    }

    /// `en^**...*e1^*`, i.e. `(e1⋯en)*`, returned as the path `e1⋯en`.
    fn parse_ghosts(&self, word: &str) -> Result<Path> {
        let malformed = || Error::ElementParse(format!("malformed ghost path \"{word}\""));
        let body = word.strip_suffix(GHOST).ok_or_else(malformed)?;
        let mut names: Vec<&str> = Vec::new();
        for (i, piece) in body.split(GHOST).enumerate() {
            let name = if i == 0 {
                piece
            } else {
                piece.strip_prefix('*').ok_or_else(malformed)?
            };
            if name.is_empty() || name.contains('*') {
                return Err(malformed());
            }
            names.push(name);
        }
        names.reverse();
        let g = self.graph();
        let edges = names
            .iter()
            .map(|n| g.edge_id(n))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::ElementParse(format!("\"{word}\": {e}")))?;
        Path::from_edges(g, &edges).map_err(|e| Error::ElementParse(format!("\"{word}\": {e}")))
    }
}

fn path_key(g: &crate::graph::Graph, p: &Path) -> Vec<String> {
    if p.is_vertex() {
        vec![g.vertex_name(p.source()).to_string()]
    } else {
        g.edge_names(p.edges())
    }
}

fn parse_coeff(token: &str) -> Option<Coeff> {
    let token = token.replace(MINUS, "-");
    let first = token.chars().next()?;
    if !(first.is_ascii_digit() || first == '-' || first == '+') {
        return None;
    }
    token.parse::<BigRational>().ok()
}
