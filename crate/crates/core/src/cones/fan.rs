use std::collections::HashMap;

use super::{Cone, ConeError};
use crate::exact::{canonical_row_basis, IntVector};

/// A fan given by its maximal cones.
///
/// Rays are collected into one lexicographically sorted list; each maximal
/// cone is the sorted list of indices of its rays. All cones of a fan share
/// the same lineality space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    ambient_dim: usize,
    rays: Vec<IntVector>,
    lineality: Vec<IntVector>,
    maximal_cones: Vec<Vec<usize>>,
    cones: Vec<Cone>,
}

impl Fan {
    /// Builds the fan from its maximal cones (duplicates are merged).
    pub fn from_cones(mut cones: Vec<Cone>, ambient_dim: usize) -> Result<Fan, ConeError> {
        if let Some(c) = cones.iter().find(|c| c.ambient_dim() != ambient_dim) {
            return Err(ConeError::DimensionMismatch {
                expected: ambient_dim,
                found: c.ambient_dim(),
            });
        }
        cones.sort();
        cones.dedup();
        let mut rays: Vec<IntVector> = cones.iter().flat_map(|c| c.rays().iter().cloned()).collect();
        rays.sort();
        rays.dedup();
        let lineality_rows: Vec<IntVector> =
            cones.iter().flat_map(|c| c.lineality().iter().cloned()).collect();
        let lineality = canonical_row_basis(&lineality_rows, ambient_dim);
        let mut indexed: Vec<(Vec<usize>, Cone)> = cones
            .into_iter()
            .map(|c| {
                let idx = c
                    .rays()
                    .iter()
                    .map(|r| rays.binary_search(r).expect("ray collected"))
                    .collect();
                (idx, c)
            })
            .collect();
        indexed.sort();
        let (maximal_cones, cones) = indexed.into_iter().unzip();
        Ok(Fan {
            ambient_dim,
            rays,
            lineality,
            maximal_cones,
            cones,
        })
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

    /// Ray-index lists, sorted, in the same order as [`Fan::cones`].
    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.maximal_cones
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// For every facet of a maximal cone, the indices of the maximal cones
    /// having it as a facet.
    pub fn facet_incidence(&self) -> HashMap<Cone, Vec<usize>> {
        let mut map: HashMap<Cone, Vec<usize>> = HashMap::new();
        for (i, c) in self.cones.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for f in c.facets().expect("nonzero cone") {
                map.entry(f).or_default().push(i);
            }
        }
        map
    }

    /// Pairs of maximal cones sharing a facet, as sorted index pairs.
    pub fn adjacency(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .facet_incidence()
            .into_values()
            .filter(|owners| owners.len() == 2)
            .map(|o| (o[0].min(o[1]), o[0].max(o[1])))
            .collect();
        edges.sort();
        edges.dedup();
        edges
    }

    /// Every facet not contained in the boundary of `support` is shared by
    /// exactly two maximal cones, and boundary facets by exactly one.
    pub fn facets_properly_shared(&self, support: &Cone) -> bool {
        self.facet_incidence().iter().all(|(f, owners)| {
            let on_boundary = lies_in_boundary(f, support);
            owners.len() == if on_boundary { 1 } else { 2 }
        })
    }

    /// Pairwise intersections of maximal cones are faces of both.
    pub fn intersections_are_faces(&self) -> bool {
        (0..self.cones.len()).all(|i| {
            (i + 1..self.cones.len()).all(|j| {
                let (a, b) = (&self.cones[i], &self.cones[j]);
                let ab = a.intersect(b).expect("same dimension");
                ab.is_face_of(a) && ab.is_face_of(b)
            })
        })
    }
}

/// `true` iff the cone `tau ⊆ support` lies in the topological boundary of
/// the full-dimensional cone `support`.
pub fn lies_in_boundary(tau: &Cone, support: &Cone) -> bool {
    if !support.is_full_dim() {
        return true;
    }
    let w = if tau.is_zero() {
        vec![crate::exact::Rational::default(); tau.ambient_dim()]
    } else {
        tau.relative_interior_point().expect("nonzero")
    };
    support
        .facet_normals()
        .iter()
        .any(|n| crate::exact::dot_rat(n, &w) == crate::exact::Rational::default())
}
