use crate::face::Face;
use crate::groebner::{is_trivial, saturate, Ideal};
use crate::poly::{Polynomial, Ring};
use crate::symmetry::{canonical_rep, orbit_decompose, FaceOrbit, PermGroup};

use super::parallel_map;

/// `true` iff the torus orbit `O(γ)` meets `V(𝔞)`, decided by
/// `(𝔞|_{T_i = 0, i ∉ γ}) : (∏_{i∈γ} T_i)^∞ ≠ ⟨1⟩`.
///
/// After the substitution only the variables of `γ` remain, so the
/// saturation is carried out in the smaller ring `ℚ[T_i | i ∈ γ]`.
pub fn is_aface(ideal: &Ideal, face: &Face) -> bool {
    assert_eq!(ideal.nvars(), face.nvars(), "face and ideal live in different rings");
    let restricted: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.substitute_zero(face))
        .filter(|g| !g.is_zero())
        .collect();
    if restricted.is_empty() {
        return true;
    }
    // a single term is a unit times a monomial in the saturating variables
    if restricted.iter().any(|g| g.len() == 1) {
        return false;
    }
    let kept: Vec<usize> = face.indices().collect();
    let mut position = vec![0; face.nvars()];
    for (new, &old) in kept.iter().enumerate() {
        position[old] = new;
    }
    let ring = Ring::new(kept.iter().map(|&i| ideal.ring().name(i).to_string()))
        .expect("subset of valid names");
    let m = kept.len();
    let compact = Ideal::new(
        ring,
        restricted
            .iter()
            .map(|g| g.remap_variables(&position, m))
            .collect(),
    )
    .expect("generators remapped into the ring");
    let product = Polynomial::face_product(&Face::full(m));
    !is_trivial(&saturate(&compact, &product))
}

/// Outcome of a-face enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AFaces {
    /// Every a-face, sorted by bit pattern.
    pub faces: Vec<Face>,
    /// Orbits of a-faces when a group was used, sorted by representative.
    pub orbits: Option<Vec<FaceOrbit>>,
    /// Number of saturation tests executed.
    pub tests: usize,
}

impl AFaces {
    /// Orbit representatives, or every a-face when no group was used.
    pub fn representatives(&self) -> Vec<Face> {
        match &self.orbits {
            Some(orbits) => orbits.iter().map(|o| o.rep).collect(),
            None => self.faces.clone(),
        }
    }
}

/// Tests all `2^r` subsets, or one representative per subset orbit when a
/// group is given. Tests run on up to `threads` threads; the result does not
/// depend on the thread count.
pub fn enumerate_afaces(ideal: &Ideal, group: Option<&PermGroup>, threads: usize) -> AFaces {
    let r = ideal.nvars();
    match group {
        None => {
            let subsets: Vec<Face> = Face::all_subsets(r).collect();
            let verdicts = parallel_map(&subsets, threads, |f| is_aface(ideal, f));
            let mut faces: Vec<Face> = subsets
                .iter()
                .zip(verdicts)
                .filter_map(|(f, ok)| ok.then_some(*f))
                .collect();
            faces.sort_by_key(Face::bits);
            AFaces {
                faces,
                orbits: None,
                tests: subsets.len(),
            }
        }
        Some(group) => {
            let subsets: Vec<Face> = Face::all_subsets(r).collect();
            let orbits = orbit_decompose(&subsets, group);
            let verdicts = parallel_map(&orbits, threads, |o| is_aface(ideal, &o.rep));
            let tests = orbits.len();
            let accepted: Vec<FaceOrbit> = orbits
                .into_iter()
                .zip(verdicts)
                .filter_map(|(o, ok)| ok.then_some(o))
                .collect();
            let mut faces: Vec<Face> = accepted.iter().flat_map(|o| o.members.iter().copied()).collect();
            faces.sort_by_key(Face::bits);
            debug_assert!(accepted.iter().all(|o| canonical_rep(&o.rep, group).0 == o.rep));
            AFaces {
                faces,
                orbits: Some(accepted),
                tests,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ideal(names: &[&str], gens: &[&str]) -> Ideal {
        let r = Ring::new(names.iter().copied()).unwrap();
        let gens = gens.iter().map(|g| parse_polynomial(g, &r).unwrap()).collect();
        Ideal::new(r, gens).unwrap()
    }

    /// Direct definition: saturate in the full ring without compaction.
    fn is_aface_uncompacted(ideal: &Ideal, face: &Face) -> bool {
        let restricted = ideal.map_generators(|g| g.substitute_zero(face));
        !is_trivial(&saturate(&restricted, &Polynomial::face_product(face)))
    }

    #[test]
    fn zero_ideal_meets_every_orbit() {
        let a = ideal(&["x", "y"], &[]);
        let found = enumerate_afaces(&a, None, 1);
        assert_eq!(found.faces.len(), 4);
        assert_eq!(found.tests, 4);
    }

    #[test]
    fn principal_monomial_ideal() {
        let a = ideal(&["x", "y"], &["x"]);
        assert!(!is_aface(&a, &Face::from_indices(2, &[0])));
        assert!(is_aface(&a, &Face::from_indices(2, &[1])));
        assert!(is_aface(&a, &Face::empty(2)));
        assert!(!is_aface(&a, &Face::full(2)));
    }

    #[test]
    fn constant_term_excludes_the_origin() {
        let a = ideal(&["x", "y"], &["x*y - 1"]);
        assert!(!is_aface(&a, &Face::empty(2)));
        assert!(!is_aface(&a, &Face::from_indices(2, &[0])));
        assert!(is_aface(&a, &Face::full(2)));
    }

    #[test]
    fn compaction_agrees_with_the_definition() {
        let ideals = [
            ideal(&["a", "b", "c", "d"], &["a*d - b*c"]),
            ideal(&["a", "b", "c", "d"], &["a*b - c^2", "b*d - c*d"]),
            ideal(&["a", "b", "c", "d"], &["a^2 - b*c + c*d", "a*b*c - d^3"]),
            ideal(&["a", "b", "c", "d"], &["a - b", "c - d", "a*c"]),
        ];
        for a in &ideals {
            for f in Face::all_subsets(4) {
                assert_eq!(is_aface(a, &f), is_aface_uncompacted(a, &f), "{f}");
            }
        }
    }

    #[test]
    fn symmetric_enumeration_covers_the_same_faces() {
        let a = ideal(&["a", "b", "c", "d"], &["a*b - c*d"]);
        let gens = vec![
            crate::symmetry::Permutation::parse_cycles("(1 2)", 4).unwrap(),
            crate::symmetry::Permutation::parse_cycles("(1 3)(2 4)", 4).unwrap(),
        ];
        let g = PermGroup::generate(4, gens, 100).unwrap();
        let plain = enumerate_afaces(&a, None, 2);
        let reduced = enumerate_afaces(&a, Some(&g), 2);
        assert_eq!(plain.faces, reduced.faces);
        assert!(reduced.tests < plain.tests);
    }
}
