//! GIT-fans of torus actions on affine varieties.
//!
//! Given a `Q`-homogeneous ideal `𝔞 ⊆ ℚ[T₁,…,T_r]`, the GIT-fan is the fan
//! of cones `λ_Ω(w) = ⋂_{w ∈ η ∈ Ω} η`, where `Ω` is the set of orbit cones
//! `Q(γ) = cone(q_i | i ∈ γ)` over the a-faces `γ`. The pipeline is
//! [`enumerate_afaces`] → [`orbit_cones`] → [`initial_cone`] → [`traverse`].

mod afaces;
mod traverse;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cones::{Cone, ConeError, Fan};
use crate::exact::{int, IntVector, RatVector};
use crate::face::Face;
use crate::groebner::Ideal;
use crate::poly::{GradingMatrix, PolyError};
use crate::symmetry::{PermGroup, Symmetry, SymmetryError};

pub use afaces::{enumerate_afaces, is_aface, AFaces};
pub use traverse::{adjacent_point, covers_support, interior_facets, traverse, traverse_modulo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GitFanError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("point lies in no orbit cone")]
    PointOutsideSupport,
    #[error("no full-dimensional GIT-cone found after {0} samples")]
    ExhaustedAttempts(usize),
    #[error("no admissible point beyond the facet after {0} halvings")]
    EpsilonUnderflow(usize),
    #[error("cone is not a facet of the given chamber")]
    NotAFacet,
    #[error("no a-faces")]
    NoAFaces,
    #[error("no orbit cone equals cone(Q); the GIT-fan does not cover it")]
    SupportNotCovered,
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// Input of the GIT-fan computation, validated on construction.
#[derive(Clone, Debug)]
pub struct GitProblem {
    ideal: Ideal,
    q: GradingMatrix,
    symmetry: Option<Symmetry>,
}

impl GitProblem {
    pub fn new(ideal: Ideal, q: GradingMatrix, group: Option<PermGroup>) -> Result<Self, GitFanError> {
        let r = ideal.nvars();
        if q.nvars() != r {
            return Err(GitFanError::InvalidInput(format!(
                "Q has {} columns but the ring has {r} variables",
                q.nvars()
            )));
        }
        for (i, g) in ideal.generators().iter().enumerate() {
            if !q.is_homogeneous(g) {
                return Err(GitFanError::InvalidInput(format!(
                    "generator {} `{}` is not homogeneous with respect to Q",
                    i + 1,
                    g.display(ideal.ring())
                )));
            }
        }
        let symmetry = match group {
            None => None,
            Some(group) => Some(Symmetry::new(group, &ideal, &q).map_err(|e| match e {
                SymmetryError::IncompatibleIdeal(p) => GitFanError::InvalidInput(format!(
                    "permutation {p} does not preserve the ideal"
                )),
                SymmetryError::NoLinearAction(p) => GitFanError::InvalidInput(format!(
                    "permutation {p} does not act linearly on the columns of Q"
                )),
                other => GitFanError::InvalidInput(other.to_string()),
            })?),
        };
        Ok(GitProblem { ideal, q, symmetry })
    }

    /// Builds `Q` from integer rows, reporting ragged or rank-deficient input.
    pub fn from_rows(
        ideal: Ideal,
        rows: Vec<IntVector>,
        group: Option<PermGroup>,
    ) -> Result<Self, GitFanError> {
        let r = ideal.nvars();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != r) {
            return Err(GitFanError::InvalidInput(format!(
                "row {} of Q has {} entries, expected {r}",
                i + 1,
                row.len()
            )));
        }
        let q = GradingMatrix::new(rows).map_err(|e| match e {
            PolyError::RankDeficient { rank, expected } => GitFanError::InvalidInput(format!(
                "Q has rank {rank} but {expected} rows; it must have full row rank"
            )),
            other => GitFanError::InvalidInput(other.to_string()),
        })?;
        Self::new(ideal, q, group)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn grading(&self) -> &GradingMatrix {
        &self.q
    }

    pub fn symmetry(&self) -> Option<&Symmetry> {
        self.symmetry.as_ref()
    }

    /// Same problem with the symmetry group dropped.
    pub fn without_symmetry(&self) -> GitProblem {
        GitProblem {
            ideal: self.ideal.clone(),
            q: self.q.clone(),
            symmetry: None,
        }
    }
}

/// Deduplicated orbit cones with the a-faces projecting to each, and the
/// support cone `Γ = cone(q₁,…,q_r)`.
#[derive(Clone, Debug)]
pub struct OrbitConeSet {
    cones: Vec<Cone>,
    provenance: Vec<Vec<Face>>,
    gamma: Cone,
}

impl OrbitConeSet {
    /// An orbit cone set given directly by its cones, without provenance.
    pub fn from_cones(mut cones: Vec<Cone>, gamma: Cone) -> OrbitConeSet {
        cones.sort();
        cones.dedup();
        OrbitConeSet {
            provenance: vec![Vec::new(); cones.len()],
            cones,
            gamma,
        }
    }

    /// Sorted, pairwise distinct.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// `provenance()[i]` lists the faces with `Q(γ) = cones()[i]`.
    pub fn provenance(&self) -> &[Vec<Face>] {
        &self.provenance
    }

    pub fn gamma(&self) -> &Cone {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }
}

/// `Q(γ) = cone(q_i | i ∈ γ)`; the zero cone for `γ = ∅`.
pub fn orbit_cone(q: &GradingMatrix, face: &Face) -> Cone {
    let rays: Vec<IntVector> = face.indices().map(|i| q.column(i)).collect();
    Cone::from_rays(&rays, q.k()).expect("columns have length k")
}

/// Projects every face to its orbit cone and merges equal cones.
pub fn orbit_cones(q: &GradingMatrix, afaces: &[Face]) -> Result<OrbitConeSet, GitFanError> {
    if afaces.is_empty() {
        return Err(GitFanError::NoAFaces);
    }
    let mut by_cone: BTreeMap<Cone, Vec<Face>> = BTreeMap::new();
    for f in afaces {
        by_cone.entry(orbit_cone(q, f)).or_default().push(*f);
    }
    let (cones, provenance) = by_cone.into_iter().unzip();
    Ok(OrbitConeSet {
        cones,
        provenance,
        gamma: orbit_cone(q, &Face::full(q.nvars())),
    })
}

/// `λ_Ω(w)`: the intersection of all orbit cones containing `w`.
pub fn gitcone(omega: &OrbitConeSet, w: &[crate::exact::Rational]) -> Result<Cone, GitFanError> {
    let mut inequalities = Vec::new();
    let mut equations = Vec::new();
    let mut any = false;
    for c in &omega.cones {
        if c.contains(w)? {
            any = true;
            inequalities.extend_from_slice(c.facet_normals());
            equations.extend_from_slice(c.equations());
        }
    }
    if !any {
        return Err(GitFanError::PointOutsideSupport);
    }
    Ok(Cone::from_inequalities(&inequalities, &equations, omega.gamma.ambient_dim())?)
}

/// Samples `w₀` as seeded random positive integer combinations of the rays
/// of `Γ` until `λ_Ω(w₀)` is full-dimensional.
pub fn initial_cone(
    omega: &OrbitConeSet,
    seed: u64,
    max_attempts: usize,
) -> Result<(RatVector, Cone), GitFanError> {
    let gamma = &omega.gamma;
    let k = gamma.ambient_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generators: Vec<&IntVector> = gamma.rays().iter().chain(gamma.lineality()).collect();
    for _ in 0..max_attempts {
        let mut w: IntVector = vec![int(0); k];
        for g in &generators {
            let c = int(rng.gen_range(1..=64));
            for (wi, gi) in w.iter_mut().zip(g.iter()) {
                *wi += &c * gi;
            }
        }
        let w = crate::exact::to_rational(&w);
        let lambda = gitcone(omega, &w)?;
        if lambda.is_full_dim() {
            return Ok((w, lambda));
        }
    }
    Err(GitFanError::ExhaustedAttempts(max_attempts))
}

/// Tuning knobs of [`compute_gitfan`].
#[derive(Clone, Debug)]
pub struct GitFanOptions {
    pub seed: u64,
    pub threads: usize,
    /// Use the problem's symmetry group when it has one.
    pub use_symmetry: bool,
    pub max_initial_attempts: usize,
    pub max_halvings: usize,
}

impl Default for GitFanOptions {
    fn default() -> Self {
        GitFanOptions {
            seed: 0,
            threads: default_threads(),
            use_symmetry: true,
            max_initial_attempts: 1000,
            max_halvings: 64,
        }
    }
}

pub fn default_threads() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}

/// Orbit of maximal cones under the symmetry group, as indices into
/// [`GitFanResult::fan`]'s maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeOrbit {
    pub rep: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Stats {
    pub aface_tests: usize,
    pub cones: usize,
    pub orbits: usize,
}

#[derive(Clone, Debug)]
pub struct GitFanResult {
    pub fan: Fan,
    pub gamma: Cone,
    pub afaces: AFaces,
    pub orbit_cone_count: usize,
    /// Present when the traversal ran modulo symmetry.
    pub orbits: Option<Vec<ConeOrbit>>,
    /// Pairs of maximal cones sharing an interior facet.
    pub adjacency: Vec<(usize, usize)>,
    pub stats: Stats,
}

impl GitFanResult {
    pub fn maximal_cones(&self) -> &[Cone] {
        self.fan.cones()
    }
}

/// Runs the full pipeline. The result depends only on the problem and the
/// seed, not on the thread count.
pub fn compute_gitfan(problem: &GitProblem, options: &GitFanOptions) -> Result<GitFanResult, GitFanError> {
    let symmetry = problem.symmetry.as_ref().filter(|_| options.use_symmetry);
    let afaces = enumerate_afaces(&problem.ideal, symmetry.map(Symmetry::group), options.threads);
    let omega = orbit_cones(&problem.q, &afaces.faces)?;
    if omega.cones.binary_search(&omega.gamma).is_err() {
        return Err(GitFanError::SupportNotCovered);
    }
    let (_, lambda0) = initial_cone(&omega, options.seed, options.max_initial_attempts)?;
    let k = problem.q.k();

    let (cones, reps) = match symmetry {
        None => (
            traverse(&omega, lambda0, options.threads, options.max_halvings)?,
            None,
        ),
        Some(sym) => {
            let reps = traverse_modulo(&omega, lambda0, sym, options.threads, options.max_halvings)?;
            let mut all: Vec<Cone> = reps.iter().flat_map(|r| sym.cone_orbit(r)).collect();
            all.sort();
            all.dedup();
            (all, Some((reps, sym)))
        }
    };
    let fan = Fan::from_cones(cones, k)?;
    let index: BTreeMap<&Cone, usize> = fan.cones().iter().enumerate().map(|(i, c)| (c, i)).collect();
    let orbits = reps.map(|(reps, sym)| {
        let mut orbits: Vec<ConeOrbit> = reps
            .iter()
            .map(|rep| {
                let mut members: Vec<usize> = sym.cone_orbit(rep).iter().map(|c| index[c]).collect();
                members.sort_unstable();
                ConeOrbit {
                    rep: index[rep],
                    members,
                }
            })
            .collect();
        orbits.sort_by_key(|o| o.members[0]);
        orbits
    });
    let adjacency = fan.adjacency();
    let stats = Stats {
        aface_tests: afaces.tests,
        cones: fan.cones().len(),
        orbits: orbits.as_ref().map_or(fan.cones().len(), Vec::len),
    };
    Ok(GitFanResult {
        gamma: omega.gamma.clone(),
        orbit_cone_count: omega.len(),
        fan,
        afaces,
        orbits,
        adjacency,
        stats,
    })
}

/// `f` applied to every item on up to `threads` scoped threads, results in
/// input order.
pub(crate) fn parallel_map<T: Sync, R: Send>(
    items: &[T],
    threads: usize,
    f: impl Fn(&T) -> R + Sync,
) -> Vec<R> {
    let threads = threads.clamp(1, items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= items.len() {
                            return done;
                        }
                        done.push((i, f(&items[i])));
                    }
                })
            })
            .collect();
        for w in workers {
            for (i, r) in w.join().expect("worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every index visited")).collect()
}

#[cfg(test)]
mod tests;
