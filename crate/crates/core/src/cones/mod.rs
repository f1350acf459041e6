//! Rational polyhedral cones and fans in ℚ^k.
//!
//! A [`Cone`] is always held in canonical double description:
//!
//! * `lineality`: the reduced row echelon basis of the lineality space, rows
//!   scaled to primitive integer vectors;
//! * `rays`: extreme rays modulo the lineality space, reduced against that
//!   basis, primitive and sorted;
//! * `equations`: the same kind of canonical basis for the orthogonal
//!   complement of the linear span;
//! * `facet_normals`: irredundant inner normals `n` (`⟨n, x⟩ ≥ 0` on the cone),
//!   reduced against the equations, primitive and sorted.
//!
//! Because every field is canonical, structural equality is cone equality.

mod dd;
mod fan;
mod polytope;

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact::{
    canonical_row_basis, dot, dot_rat, format_vector, primitive_from_rational, reduce_modulo,
    to_rational, ExactError, IntVector, RatMatrix, RatVector, Rational,
};

pub use fan::{lies_in_boundary, Fan};
pub use polytope::{newton_polytope, normal_fan, Polytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation undefined on the zero cone")]
    ZeroCone,
    #[error("linear map is singular")]
    Singular,
    #[error("zero polynomial has no Newton polytope")]
    ZeroPolynomial,
    #[error("polytope has no vertices")]
    EmptyPolytope,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cone {
    ambient_dim: usize,
    rays: Vec<IntVector>,
    lineality: Vec<IntVector>,
    facet_normals: Vec<IntVector>,
    equations: Vec<IntVector>,
}

fn check_dims(vectors: &[IntVector], k: usize) -> Result<(), ConeError> {
    match vectors.iter().find(|v| v.len() != k) {
        Some(v) => Err(ConeError::DimensionMismatch {
            expected: k,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

fn canonical_modulo(vectors: Vec<IntVector>, basis: &[IntVector]) -> Vec<IntVector> {
    let mut out: Vec<IntVector> = vectors
        .iter()
        .filter_map(|v| reduce_modulo(v, basis))
        .collect();
    out.sort();
    out.dedup();
    out
}

impl Cone {
    /// Cone spanned by `rays`; `cone_from_rays` with an explicit lineality part.
    pub fn from_generators(
        rays: &[IntVector],
        lineality: &[IntVector],
        k: usize,
    ) -> Result<Cone, ConeError> {
        check_dims(rays, k)?;
        check_dims(lineality, k)?;
        let (facets, equations) = dd::generators_of(rays, lineality, k);
        let (rays, lineality) = dd::generators_of(&facets, &equations, k);
        Ok(Self::assemble(k, rays, lineality, facets, equations))
    }

    pub fn from_rays(rays: &[IntVector], k: usize) -> Result<Cone, ConeError> {
        Self::from_generators(rays, &[], k)
    }

    /// `{x : ⟨a, x⟩ ≥ 0 for a in inequalities, ⟨e, x⟩ = 0 for e in equations}`.
    pub fn from_inequalities(
        inequalities: &[IntVector],
        equations: &[IntVector],
        k: usize,
    ) -> Result<Cone, ConeError> {
        check_dims(inequalities, k)?;
        check_dims(equations, k)?;
        let (rays, lineality) = dd::generators_of(inequalities, equations, k);
        let (facets, equations) = dd::generators_of(&rays, &lineality, k);
        Ok(Self::assemble(k, rays, lineality, facets, equations))
    }

    fn assemble(
        k: usize,
        rays: Vec<IntVector>,
        lineality: Vec<IntVector>,
        facets: Vec<IntVector>,
        equations: Vec<IntVector>,
    ) -> Cone {
        let lineality = canonical_row_basis(&lineality, k);
        let equations = canonical_row_basis(&equations, k);
        Cone {
            ambient_dim: k,
            rays: canonical_modulo(rays, &lineality),
            facet_normals: canonical_modulo(facets, &equations),
            lineality,
            equations,
        }
    }

    pub fn zero(k: usize) -> Cone {
        Self::from_generators(&[], &[], k).expect("no vectors")
    }

    pub fn full_space(k: usize) -> Cone {
        Self::from_inequalities(&[], &[], k).expect("no vectors")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IntVector] {
        &self.lineality
    }

    pub fn facet_normals(&self) -> &[IntVector] {
        &self.facet_normals
    }

    pub fn equations(&self) -> &[IntVector] {
        &self.equations
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_full_dim(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    fn check_point(&self, w: &[Rational]) -> Result<(), ConeError> {
        if w.len() != self.ambient_dim {
            return Err(ConeError::DimensionMismatch {
                expected: self.ambient_dim,
                found: w.len(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, w: &[Rational]) -> Result<bool, ConeError> {
        self.check_point(w)?;
        Ok(self.equations.iter().all(|e| dot_rat(e, w).is_zero())
            && self.facet_normals.iter().all(|n| !dot_rat(n, w).is_negative()))
    }

    /// `true` iff `w` lies in the relative interior.
    pub fn contains_relative_interior(&self, w: &[Rational]) -> Result<bool, ConeError> {
        self.check_point(w)?;
        Ok(self.equations.iter().all(|e| dot_rat(e, w).is_zero())
            && self.facet_normals.iter().all(|n| dot_rat(n, w).is_positive()))
    }

    fn contains_vector(&self, v: &[crate::exact::BigInt]) -> bool {
        self.equations.iter().all(|e| dot(e, v).is_zero())
            && self.facet_normals.iter().all(|n| !dot(n, v).is_negative())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        self.ambient_dim == other.ambient_dim
            && other.rays.iter().all(|r| self.contains_vector(r))
            && other.lineality.iter().all(|l| {
                self.contains_vector(l) && {
                    let neg: IntVector = l.iter().map(|x| -x).collect();
                    self.contains_vector(&neg)
                }
            })
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone, ConeError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(ConeError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let ineqs: Vec<IntVector> = self
            .facet_normals
            .iter()
            .chain(&other.facet_normals)
            .cloned()
            .collect();
        let eqs: Vec<IntVector> = self.equations.iter().chain(&other.equations).cloned().collect();
        Self::from_inequalities(&ineqs, &eqs, self.ambient_dim)
    }

    /// The face cut out by the supporting hyperplane `⟨n, x⟩ = 0`.
    pub fn face_for_normal(&self, n: &[crate::exact::BigInt]) -> Cone {
        let rays: Vec<IntVector> = self
            .rays
            .iter()
            .filter(|r| dot(n, r).is_zero())
            .cloned()
            .collect();
        Self::from_generators(&rays, &self.lineality, self.ambient_dim).expect("same dimension")
    }

    /// All codimension-one faces, in the order of `facet_normals`.
    pub fn facets(&self) -> Result<Vec<Cone>, ConeError> {
        if self.is_zero() {
            return Err(ConeError::ZeroCone);
        }
        Ok(self
            .facet_normals
            .iter()
            .map(|n| self.face_for_normal(n))
            .collect())
    }

    /// Sum of the rays; lies in the relative interior.
    pub fn relative_interior_point(&self) -> Result<RatVector, ConeError> {
        if self.is_zero() {
            return Err(ConeError::ZeroCone);
        }
        let mut w = vec![Rational::zero(); self.ambient_dim];
        for r in &self.rays {
            for (wi, ri) in w.iter_mut().zip(r) {
                *wi += Rational::from_integer(ri.clone());
            }
        }
        Ok(w)
    }

    /// Smallest face of `self` containing `w` (which must lie in `self`).
    pub fn minimal_face_containing(&self, w: &[Rational]) -> Cone {
        let tight: Vec<IntVector> = self
            .facet_normals
            .iter()
            .filter(|n| dot_rat(n, w).is_zero())
            .cloned()
            .collect();
        let mut eqs = self.equations.clone();
        eqs.extend(tight);
        Self::from_inequalities(&self.facet_normals, &eqs, self.ambient_dim).expect("same dimension")
    }

    /// `true` iff `self` is a face of `other`.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        if !other.contains_cone(self) {
            return false;
        }
        if self.is_zero() {
            return other.minimal_face_containing(&vec![Rational::zero(); self.ambient_dim]) == *self;
        }
        let w = self.relative_interior_point().expect("nonzero");
        other.minimal_face_containing(&w) == *self
    }

    /// Image under an invertible linear map `A`.
    ///
    /// Rays map by `A`, normals by `A^{-T}`; no double description is redone.
    pub fn image(&self, a: &RatMatrix) -> Result<Cone, ConeError> {
        if a.nrows() != self.ambient_dim || a.ncols() != self.ambient_dim {
            return Err(ConeError::DimensionMismatch {
                expected: self.ambient_dim,
                found: a.ncols(),
            });
        }
        let inverse_t = match a.inverse() {
            Ok(inv) => inv.transpose(),
            Err(ExactError::Singular) => return Err(ConeError::Singular),
            Err(e) => return Err(e.into()),
        };
        let map = |m: &RatMatrix, v: &IntVector| -> IntVector {
            primitive_from_rational(&m.mul_vec(&to_rational(v)).expect("square"))
                .expect("invertible map keeps vectors nonzero")
        };
        let rays = self.rays.iter().map(|r| map(a, r)).collect();
        let lineality: Vec<IntVector> = self.lineality.iter().map(|l| map(a, l)).collect();
        let facets = self.facet_normals.iter().map(|n| map(&inverse_t, n)).collect();
        let equations: Vec<IntVector> = self.equations.iter().map(|e| map(&inverse_t, e)).collect();
        Ok(Self::assemble(self.ambient_dim, rays, lineality, facets, equations))
    }
}

/// Cone of all non-negative combinations of `rays`.
pub fn cone_from_rays(rays: &[IntVector], k: usize) -> Result<Cone, ConeError> {
    Cone::from_rays(rays, k)
}

pub fn cone_equal(a: &Cone, b: &Cone) -> bool {
    a == b
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rays: Vec<String> = self.rays.iter().map(|r| format_vector(r)).collect();
        write!(f, "cone{{{}}}", rays.join(", "))?;
        if !self.lineality.is_empty() {
            let lin: Vec<String> = self.lineality.iter().map(|r| format_vector(r)).collect();
            write!(f, " + lin{{{}}}", lin.join(", "))?;
        }
        Ok(())
    }
}
