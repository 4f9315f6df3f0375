use std::collections::btree_map::{self, BTreeMap, Entry};
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::Path;

/// Exact rational coefficients.
pub type Coeff = BigRational;

/// A spanning monomial `p q*` with `r(p) = r(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    p: Path,
    q: Path,
}

impl Monomial {
    /// `None` when the ranges differ.
    pub fn new(p: Path, q: Path) -> Option<Self> {
        (p.range() == q.range()).then_some(Monomial { p, q })
    }

    /// The vertex `v = v v*`.
    pub fn vertex(v: usize) -> Self {
        Monomial {
            p: Path::vertex(v),
            q: Path::vertex(v),
        }
    }

    /// `p = p r(p)*`.
    pub fn path(p: Path) -> Self {
        let q = Path::vertex(p.range());
        Monomial { p, q }
    }

    /// `q* = r(q) q*`.
    pub fn path_star(q: Path) -> Self {
        let p = Path::vertex(q.range());
        Monomial { p, q }
    }

    pub fn p(&self) -> &Path {
        &self.p
    }

    pub fn q(&self) -> &Path {
        &self.q
    }

    pub fn into_parts(self) -> (Path, Path) {
        (self.p, self.q)
    }

    pub fn star(&self) -> Monomial {
        Monomial {
            p: self.q.clone(),
            q: self.p.clone(),
        }
    }

    /// `max(|p|, |q|)`.
    pub fn degree(&self) -> usize {
        self.p.len().max(self.q.len())
    }

    /// Product of two monomials before normalization. `(pq*)(rs*)` is
    /// `p r' s*` when `r = q r'`, `p (s q')*` when `q = r q'`, and zero when
    /// neither path continues the other.
    pub fn product(&self, other: &Monomial) -> Option<Monomial> {
        if let Some(rest) = other.p.strip_prefix(&self.q) {
            let p = self.p.concat(&rest).expect("ranges agree");
            return Some(Monomial {
                p,
                q: other.q.clone(),
            });
        }
        if let Some(rest) = self.q.strip_prefix(&other.p) {
            let q = other.q.concat(&rest).expect("ranges agree");
            return Some(Monomial {
                p: self.p.clone(),
                q,
            });
        }
        None
    }
}

/// A finite linear combination of monomials with nonzero rational
/// coefficients. Two elements in normal form are equal iff they are equal
/// as values of this type.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Coeff>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Coeff::one())
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let mut a = Self::zero();
        a.add_term(m, c);
        a
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Monomial, Coeff> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Largest `max(|p|, |q|)` over the terms; 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }
}

impl FromIterator<(Monomial, Coeff)> for AlgebraElement {
    fn from_iter<I: IntoIterator<Item = (Monomial, Coeff)>>(iter: I) -> Self {
        let mut a = AlgebraElement::zero();
        for (m, c) in iter {
            a.add_term(m, c);
        }
        a
    }
}

impl<'a> IntoIterator for &'a AlgebraElement {
    type Item = (&'a Monomial, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, Monomial, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in rhs {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in rhs {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        -&self
    }
}

impl std::iter::Sum for AlgebraElement {
    fn sum<I: Iterator<Item = AlgebraElement>>(iter: I) -> Self {
        iter.fold(AlgebraElement::zero(), |acc, x| &acc + &x)
    }
}
