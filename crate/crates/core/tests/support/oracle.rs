//! Brute-force GIT-fan: close the orbit cones under pairwise intersection,
//! evaluate `λ_Ω(w)` at a relative interior point of every face of every
//! cone in the closure, keep the full-dimensional results.
//!
//! Shares nothing with the traversal beyond the cone type; `λ_Ω(w)` is
//! recomputed by folding pairwise intersections.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gitfan_core::cones::Cone;
use gitfan_core::exact::{int_vector, IntVector, Rational};
use gitfan_core::face::Face;
use gitfan_core::gitfan::is_aface;
use gitfan_core::groebner::Ideal;
use gitfan_core::poly::{GradingMatrix, Monomial, Polynomial, Ring};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn orbit_cones_by_definition(ideal: &Ideal, q: &GradingMatrix) -> Vec<Cone> {
    let cols = q.columns();
    let mut out: BTreeSet<Cone> = BTreeSet::new();
    for f in Face::all_subsets(ideal.nvars()) {
        if is_aface(ideal, &f) {
            let rays: Vec<IntVector> = f.indices().map(|i| cols[i].clone()).collect();
            out.insert(Cone::from_rays(&rays, q.k()).unwrap());
        }
    }
    out.into_iter().collect()
}

fn all_faces(c: &Cone, into: &mut BTreeSet<Cone>) {
    if !into.insert(c.clone()) || c.is_zero() {
        return;
    }
    for f in c.facets().unwrap() {
        all_faces(&f, into);
    }
}

fn lambda(omega: &[Cone], w: &[Rational], k: usize) -> Option<Cone> {
    omega
        .iter()
        .filter(|c| c.contains(w).unwrap())
        .fold(None, |acc: Option<Cone>, c| {
            Some(match acc {
                None => c.clone(),
                Some(a) => a.intersect(c).unwrap(),
            })
        })
        .inspect(|c| assert_eq!(c.ambient_dim(), k))
}

/// `true` iff `chambers` are the maximal cones of a fan with support `Γ`:
/// pairwise intersections are common faces and every facet off `∂Γ` is
/// shared by exactly two chambers. The GIT-cones of an irreducible variety
/// always pass; reducible inputs may not.
pub fn forms_fan_over(chambers: &[Cone], gamma: &Cone) -> bool {
    let fan = gitfan_core::cones::Fan::from_cones(chambers.to_vec(), gamma.ambient_dim()).unwrap();
    !chambers.is_empty() && fan.intersections_are_faces() && fan.facets_properly_shared(gamma)
}

/// Full-dimensional GIT-cones, sorted.
pub fn brute_force_chambers(omega: &[Cone], k: usize) -> Vec<Cone> {
    let mut closure: BTreeSet<Cone> = omega.iter().cloned().collect();
    loop {
        let current: Vec<Cone> = closure.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                grew |= closure.insert(a.intersect(b).unwrap());
            }
        }
        if !grew {
            break;
        }
    }
    let mut faces = BTreeSet::new();
    for c in &closure {
        all_faces(c, &mut faces);
    }
    let mut chambers = BTreeSet::new();
    for f in &faces {
        let w = if f.is_zero() {
            vec![Rational::zero(); k]
        } else {
            f.relative_interior_point().unwrap()
        };
        if let Some(l) = lambda(omega, &w, k) {
            if l.is_full_dim() {
                chambers.insert(l);
            }
        }
    }
    chambers.into_iter().collect()
}

/// Random instance with `k ≤ 3`, `r ≤ 6`: a full-rank `Q` with entries in
/// `-1..=3` and one or two `Q`-homogeneous binomials or trinomials whose
/// zero set meets the big torus.
pub struct Instance {
    pub ideal: Ideal,
    pub rows: Vec<IntVector>,
}

pub fn random_instance(seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let k = rng.gen_range(1..=3);
        let r = rng.gen_range(k + 1..=6);
        let rows: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..r).map(|_| rng.gen_range(-1..=3)).collect())
            .collect();
        let rows: Vec<IntVector> = rows.iter().map(|row| int_vector(row)).collect();
        let Ok(q) = GradingMatrix::new(rows.clone()) else { continue };
        let exponents: Vec<Vec<u32>> = (0..3usize.pow(r as u32))
            .map(|mut n| {
                (0..r)
                    .map(|_| {
                        let e = (n % 3) as u32;
                        n /= 3;
                        e
                    })
                    .collect()
            })
            .collect();
        let ngens = rng.gen_range(1..=2);
        let mut gens = Vec::new();
        for _ in 0..20 {
            if gens.len() == ngens {
                break;
            }
            let lead = &exponents[rng.gen_range(1..exponents.len())];
            let degree = q.degree_of(lead);
            let partners: Vec<&Vec<u32>> = exponents
                .iter()
                .filter(|e| *e != lead && q.degree_of(e) == degree)
                .collect();
            if partners.is_empty() {
                continue;
            }
            let nterms = rng.gen_range(1..=2).min(partners.len());
            let mut terms = vec![(Monomial::new(lead.clone()), Rational::from_integer(1.into()))];
            for _ in 0..nterms {
                let e = partners[rng.gen_range(0..partners.len())];
                let c: i64 = [-2, -1, 1, 2][rng.gen_range(0..4)];
                terms.push((Monomial::new(e.clone()), Rational::from_integer(c.into())));
            }
            // strip the monomial content so {T_i = 0} is not a component
            let content: Vec<u32> = (0..r)
                .map(|i| terms.iter().map(|(m, _)| m.exponents()[i]).min().unwrap())
                .collect();
            let terms: Vec<(Monomial, Rational)> = terms
                .into_iter()
                .map(|(m, c)| (m.div(&Monomial::new(content.clone())).unwrap(), c))
                .collect();
            let g = Polynomial::from_terms(r, terms);
            if g.len() >= 2 {
                gens.push(g);
            }
        }
        if gens.len() != ngens {
            continue;
        }
        let names: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
        let ring = Ring::new(names).unwrap();
        let ideal = Ideal::new(ring, gens).unwrap();
        // the traversal needs V(𝔞) to meet the big torus
        if !is_aface(&ideal, &Face::full(r)) {
            continue;
        }
        return Instance { ideal, rows };
    }
}
