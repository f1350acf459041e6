//! Fan traversal: walking from chamber to chamber across interior facets.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::{Condvar, Mutex};
use std::thread;

use num_traits::{One, Zero};

use super::{gitcone, parallel_map, GitFanError, OrbitConeSet};
use crate::cones::{lies_in_boundary, Cone};
use crate::exact::{dot_rat, to_rational, RatVector, Rational};
use crate::symmetry::Symmetry;

/// Facets of `lambda` not contained in `∂Γ`.
pub fn interior_facets(lambda: &Cone, gamma: &Cone) -> Vec<Cone> {
    if lambda.is_zero() {
        return Vec::new();
    }
    lambda
        .facets()
        .expect("nonzero cone")
        .into_iter()
        .filter(|tau| !lies_in_boundary(tau, gamma))
        .collect()
}

/// A point `w = c - ε·n` just beyond the facet `tau` of `lambda`, where `c`
/// is the relative interior point of `tau` and `n` the inner normal of
/// `lambda` at `tau`. `ε` starts at 1 and is halved until `w ∈ Γ`, `w ∉ λ`,
/// `λ_Ω(w)` is full-dimensional and `λ_Ω(w) ∩ λ = τ`.
///
/// Returns `w` together with `λ_Ω(w)`.
pub fn adjacent_point(
    omega: &OrbitConeSet,
    lambda: &Cone,
    tau: &Cone,
    max_halvings: usize,
) -> Result<(RatVector, Cone), GitFanError> {
    let c = if tau.is_zero() {
        vec![Rational::zero(); tau.ambient_dim()]
    } else {
        tau.relative_interior_point()?
    };
    let normal = lambda
        .facet_normals()
        .iter()
        .find(|n| dot_rat(n, &c).is_zero())
        .ok_or(GitFanError::NotAFacet)?;
    let n = to_rational(normal);
    let mut eps = Rational::one();
    for _ in 0..=max_halvings {
        let w: RatVector = c.iter().zip(&n).map(|(ci, ni)| ci - &eps * ni).collect();
        if omega.gamma().contains(&w)? && !lambda.contains(&w)? {
            let neighbor = gitcone(omega, &w)?;
            if neighbor.is_full_dim() && neighbor.intersect(lambda)? == *tau {
                return Ok((w, neighbor));
            }
        }
        eps /= Rational::from_integer(2.into());
    }
    Err(GitFanError::EpsilonUnderflow(max_halvings))
}

#[derive(Default)]
struct Shared {
    /// Unclaimed entries: facet ↦ the cone it was discovered from.
    frontier: BTreeMap<Cone, Cone>,
    /// Entries currently being processed.
    claimed: HashSet<Cone>,
    cones: BTreeSet<Cone>,
    busy: usize,
    error: Option<GitFanError>,
}

impl Shared {
    /// Symmetric difference with `{(τ, owner)}`. A claimed entry counts as
    /// present, so the second cone through an interior facet always
    /// cancels it.
    fn toggle(&mut self, tau: Cone, owner: &Cone) {
        if self.frontier.remove(&tau).is_some() || self.claimed.remove(&tau) {
            return;
        }
        self.frontier.insert(tau, owner.clone());
    }

    fn add_cone(&mut self, lambda: Cone, gamma: &Cone) {
        if self.cones.contains(&lambda) {
            return;
        }
        for tau in interior_facets(&lambda, gamma) {
            self.toggle(tau, &lambda);
        }
        self.cones.insert(lambda);
    }
}

/// All maximal GIT-cones, found by repeatedly claiming a frontier facet,
/// crossing it and toggling the new cone's interior facets into the
/// frontier. Stops when the frontier is empty and no worker is busy.
///
/// Workers claim entries concurrently; the resulting set does not depend
/// on scheduling.
pub fn traverse(
    omega: &OrbitConeSet,
    lambda0: Cone,
    threads: usize,
    max_halvings: usize,
) -> Result<Vec<Cone>, GitFanError> {
    let gamma = omega.gamma();
    let mut shared = Shared::default();
    shared.add_cone(lambda0, gamma);
    let state = Mutex::new(shared);
    let wake = Condvar::new();

    let worker = || loop {
        let (tau, owner) = {
            let mut s = state.lock().expect("no worker panicked");
            loop {
                if s.error.is_some() {
                    return;
                }
                if let Some((tau, owner)) = s.frontier.pop_first() {
                    s.claimed.insert(tau.clone());
                    s.busy += 1;
                    break (tau, owner);
                }
                if s.busy == 0 {
                    wake.notify_all();
                    return;
                }
                s = wake.wait(s).expect("no worker panicked");
            }
        };
        let outcome = adjacent_point(omega, &owner, &tau, max_halvings);
        let mut s = state.lock().expect("no worker panicked");
        match outcome {
            Ok((_, neighbor)) => {
                s.add_cone(neighbor, gamma);
                s.claimed.remove(&tau);
            }
            Err(e) => {
                s.error.get_or_insert(e);
            }
        }
        s.busy -= 1;
        wake.notify_all();
    };

    let threads = threads.max(1);
    if threads == 1 {
        worker();
    } else {
        thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(worker);
            }
        });
    }
    let s = state.into_inner().expect("no worker panicked");
    if let Some(e) = s.error {
        return Err(e);
    }
    debug_assert!(s.frontier.is_empty() && s.claimed.is_empty());
    Ok(s.cones.into_iter().collect())
}

/// Traversal modulo a symmetry group: only canonical orbit representatives
/// are expanded, level by level. Returns the sorted representatives.
pub fn traverse_modulo(
    omega: &OrbitConeSet,
    lambda0: Cone,
    symmetry: &Symmetry,
    threads: usize,
    max_halvings: usize,
) -> Result<Vec<Cone>, GitFanError> {
    let gamma = omega.gamma();
    let start = symmetry.canonical_cone(&lambda0);
    let mut reps: BTreeSet<Cone> = BTreeSet::from([start.clone()]);
    let mut level = vec![start];
    while !level.is_empty() {
        let tasks: Vec<(&Cone, Cone)> = level
            .iter()
            .flat_map(|lambda| interior_facets(lambda, gamma).into_iter().map(move |t| (lambda, t)))
            .collect();
        let found = parallel_map(&tasks, threads, |(lambda, tau)| {
            adjacent_point(omega, lambda, tau, max_halvings)
                .map(|(_, neighbor)| symmetry.canonical_cone(&neighbor))
        });
        let mut next = Vec::new();
        for rep in found {
            let rep = rep?;
            if reps.insert(rep.clone()) {
                next.push(rep);
            }
        }
        next.sort();
        level = next;
    }
    Ok(reps.into_iter().collect())
}

/// `true` iff every facet of a cone in `cones` either lies in `∂Γ` or is a
/// facet of exactly two cones. This is the termination certificate: the
/// cones then cover `Γ`.
pub fn covers_support(cones: &[Cone], gamma: &Cone) -> bool {
    let mut count: BTreeMap<Cone, usize> = BTreeMap::new();
    for c in cones {
        for tau in interior_facets(c, gamma) {
            *count.entry(tau).or_default() += 1;
        }
    }
    count.values().all(|&n| n == 2) && cones.iter().all(|c| c.is_full_dim())
}

