//! Multivariate polynomials over ℚ with dense exponent vectors.

mod grading;
mod order;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{BigInt, Rational};
use crate::face::Face;

pub use grading::GradingMatrix;
pub use order::{compare, MonomialOrder};
pub use parse::parse_polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("exponent vectors of length {0} and {1} cannot be compared")]
    LengthMismatch(usize, usize),
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous with respect to the grading")]
    NotHomogeneous,
    #[error("grading matrix has rank {rank}, expected full rank {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("grading matrix row {row} has {found} entries, expected {expected}")]
    RaggedGrading {
        row: usize,
        found: usize,
        expected: usize,
    },
}

/// Variable names of `ℚ[T₁,…,T_r]`. Characteristic is always zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(PolyError::InvalidRing("at least one variable is required".into()));
        }
        if names.len() > crate::face::MAX_VARS {
            return Err(PolyError::InvalidRing(format!(
                "at most {} variables supported",
                crate::face::MAX_VARS
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::InvalidRing(format!("`{name}` is not a valid identifier")));
            }
            if names[..i].contains(name) {
                return Err(PolyError::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Ring { names })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn variable(&self, name: &str) -> Option<Polynomial> {
        self.index_of(name).map(|i| Polynomial::variable(i, self.nvars()))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector `T₁^{a₁}⋯T_r^{a_r}`.
///
/// The derived `Ord` is plain lexicographic order on exponents and is only
/// used for storage; use [`MonomialOrder`] for term orders.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Bit `i` set iff variable `i` occurs (variables ≥ 64 share bit 63).
    pub(crate) fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | 1 << i.min(63))
    }
}

/// Polynomial with exact rational coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        Self::monomial(c, Monomial::one(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn variable(i: usize, nvars: usize) -> Self {
        Self::monomial(Rational::one(), Monomial::variable(i, nvars))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collects terms, summing coefficients of repeated monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial length does not match ring");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Terms in storage (lexicographic, ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms sorted descending under `ord`.
    pub fn terms_by(&self, ord: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Deletes every term that involves a variable outside `keep`.
    pub fn substitute_zero(&self, keep: &Face) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| {
                    m.exponents()
                        .iter()
                        .enumerate()
                        .all(|(i, &e)| e == 0 || keep.contains(i))
                })
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Renames variables: variable `i` becomes variable `map[i]` of a ring with
    /// `nvars` variables.
    pub fn remap_variables(&self, map: &[usize], nvars: usize) -> Polynomial {
        assert_eq!(map.len(), self.nvars);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; nvars];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial(e), c.clone())
        });
        Polynomial::from_terms(nvars, terms)
    }

    /// Applies `T_i ↦ -T_i` for every `i` with `negate[i]`.
    pub fn flip_signs(&self, negate: &[bool]) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let odd = m
                        .exponents()
                        .iter()
                        .zip(negate)
                        .filter(|(&e, &n)| n && e % 2 == 1)
                        .count()
                        % 2
                        == 1;
                    (m.clone(), if odd { -c.clone() } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Product of the variables in `face` (1 for the empty face).
    pub fn face_product(face: &Face) -> Polynomial {
        let nvars = face.nvars();
        let mut e = vec![0; nvars];
        for i in face.indices() {
            e[i] = 1;
        }
        Polynomial::monomial(Rational::one(), Monomial(e))
    }

    /// Writes the polynomial using the variable names of `ring`.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ring }
    }

    pub fn to_string_in(&self, ring: &Ring) -> String {
        self.display(ring).to_string()
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    ring: &'a Ring,
}

impl fmt::Display for PolyDisplay<'_> {
    /// Terms are printed in descending `dp` order using the explicit-caret
    /// grammar accepted by [`parse_polynomial`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms_by(&MonomialOrder::Dp).into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Integer `a` as a constant polynomial.
pub fn constant_int(a: i64, nvars: usize) -> Polynomial {
    Polynomial::constant(Rational::from_integer(BigInt::from(a)), nvars)
}
