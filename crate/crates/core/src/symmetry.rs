//! Permutation groups acting on variable indices, and the induced actions on
//! faces of the orthant and on cones in ℚ^k.
//!
//! Groups are small (|G| ≤ a few thousand), so they are stored as full
//! element lists and orbits are computed by brute force.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::cones::{Cone, ConeError};
use crate::exact::{solve_linear, to_rational, RatMatrix};
use crate::face::Face;
use crate::groebner::Ideal;
use crate::poly::{GradingMatrix, Polynomial};

pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

/// Largest number of variables for which sign twists are searched exhaustively.
const MAX_SIGN_SEARCH_VARS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds the limit of {0}")]
    GroupTooLarge(usize),
    #[error("permutation {0} does not map the ideal generators to themselves up to sign")]
    IncompatibleIdeal(String),
    #[error("permutation {0} does not induce a linear map on the grading space")]
    NoLinearAction(String),
}

/// Bijection of `{0, …, r-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, SymmetryError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(SymmetryError::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, SymmetryError> {
        let bad = |msg: String| SymmetryError::InvalidPermutation(format!("`{text}`: {msg}"));
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(bad("empty".into()));
        }
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(bad("expected `(`".into()));
            };
            let close = body.find(')').ok_or_else(|| bad("missing `)`".into()))?;
            let points: Vec<usize> = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let p: usize = s.parse().map_err(|_| bad(format!("`{s}` is not a point")))?;
                    if p == 0 || p > degree {
                        return Err(bad(format!("point {p} outside 1..={degree}")));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<_, _>>()?;
            for &p in &points {
                if used[p] {
                    return Err(bad(format!("point {} appears twice", p + 1)));
                }
                used[p] = true;
            }
            for (i, &p) in points.iter().enumerate() {
                images[p] = points[(i + 1) % points.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Substitutes `T_i ↦ T_{σ(i)}`.
    pub fn act_on_polynomial(&self, p: &Polynomial) -> Polynomial {
        p.remap_variables(&self.images, p.nvars())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.images[i];
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// `{σ(i) | i ∈ γ}`.
pub fn act_on_face(sigma: &Permutation, face: &Face) -> Face {
    assert_eq!(sigma.degree(), face.nvars(), "degree mismatch");
    let mut out = Face::empty(face.nvars());
    for i in face.indices() {
        out.insert(sigma.apply(i));
    }
    out
}

/// Finite permutation group with its full element list.
///
/// Elements are listed in breadth-first order from the identity, so the
/// list is determined by the generator list.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn generate(
        degree: usize,
        generators: Vec<Permutation>,
        max_order: usize,
    ) -> Result<Self, SymmetryError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(SymmetryError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in &generators {
                let h = g.compose(&e);
                if seen.insert(h.clone()) {
                    if elements.len() == max_order {
                        return Err(SymmetryError::GroupTooLarge(max_order));
                    }
                    elements.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, Vec::new(), 1).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|e| e == p)
    }
}

/// Canonical representative of the orbit of `face` together with the size
/// of its stabilizer. The representative is the orbit member whose sorted
/// index list is lexicographically least.
pub fn canonical_rep(face: &Face, group: &PermGroup) -> (Face, usize) {
    let mut best = *face;
    let mut stabilizer = 0;
    for g in group.elements() {
        let image = act_on_face(g, face);
        if image == *face {
            stabilizer += 1;
        }
        if image.lex_key() > best.lex_key() {
            best = image;
        }
    }
    (best, stabilizer)
}

/// One orbit of faces with its canonical representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceOrbit {
    pub rep: Face,
    /// Sorted by increasing bit pattern.
    pub members: Vec<Face>,
}

/// Splits the `G`-closure of `faces` into orbits, sorted by representative.
pub fn orbit_decompose(faces: &[Face], group: &PermGroup) -> Vec<FaceOrbit> {
    let mut orbits: BTreeMap<u64, (Face, HashSet<Face>)> = BTreeMap::new();
    for face in faces {
        let (rep, _) = canonical_rep(face, group);
        // descending lex_key = ascending sorted index lists
        let key = u64::MAX - rep.lex_key();
        let entry = orbits.entry(key).or_insert_with(|| (rep, HashSet::new()));
        if entry.1.contains(face) {
            continue;
        }
        for g in group.elements() {
            entry.1.insert(act_on_face(g, face));
        }
    }
    orbits
        .into_values()
        .map(|(rep, members)| {
            let mut members: Vec<Face> = members.into_iter().collect();
            members.sort_by_key(Face::bits);
            FaceOrbit { rep, members }
        })
        .collect()
}

/// The matrix `A` with `A·q_i = q_{σ(i)}` for every column of `Q`, or `None`
/// if no such linear map exists.
pub fn induced_map(sigma: &Permutation, q: &GradingMatrix) -> Option<RatMatrix> {
    let k = q.k();
    let columns = q.columns();
    let qmat = RatMatrix::from_int_rows(q.rows()).expect("rectangular");
    let (_, basis) = qmat.rref();
    if basis.len() != k || sigma.degree() != q.nvars() {
        return None;
    }
    // Row j of A solves  Q_B^T a_j = (row j of Q_{σ(B)})^T.
    let qb_t = RatMatrix::from_rows(basis.iter().map(|&i| to_rational(&columns[i])).collect())
        .expect("rectangular");
    let mut rows = Vec::with_capacity(k);
    for j in 0..k {
        let rhs: Vec<_> = basis
            .iter()
            .map(|&i| to_rational(&columns[sigma.apply(i)])[j].clone())
            .collect();
        rows.push(solve_linear(&qb_t, &rhs).ok()??);
    }
    let a = RatMatrix::from_rows(rows).expect("k rows of length k");
    let consistent = (0..q.nvars()).all(|i| {
        a.mul_int_vec(&columns[i]).expect("k columns") == to_rational(&columns[sigma.apply(i)])
    });
    consistent.then_some(a)
}

/// Image of a cone under an invertible linear map.
pub fn act_on_cone(a: &RatMatrix, c: &Cone) -> Result<Cone, ConeError> {
    c.image(a)
}

/// Finds sign flips `s` such that `σ·(s·g)` is, for every generator `g`,
/// plus or minus some generator. Returns the flip pattern.
///
/// Coordinate sign changes lie in the big torus, so they preserve every
/// torus orbit; `σ∘s` therefore permutes the orbits meeting `V(𝔞)` exactly
/// as `σ` does.
pub fn sign_twist(sigma: &Permutation, ideal: &Ideal) -> Option<Vec<bool>> {
    let r = ideal.nvars();
    let gens = ideal.generators();
    let targets: HashSet<Polynomial> = gens
        .iter()
        .flat_map(|g| [g.clone(), -g])
        .collect();
    let works = |negate: &[bool]| {
        gens.iter()
            .all(|g| targets.contains(&sigma.act_on_polynomial(&g.flip_signs(negate))))
    };
    let used: Vec<usize> = (0..r)
        .filter(|&i| gens.iter().any(|g| g.terms().any(|(m, _)| m.exponents()[i] > 0)))
        .collect();
    let search = if used.len() <= MAX_SIGN_SEARCH_VARS { used.len() } else { 0 };
    (0u64..1 << search).find_map(|mask| {
        let mut negate = vec![false; r];
        for (bit, &v) in used.iter().enumerate().take(search) {
            negate[v] = mask >> bit & 1 == 1;
        }
        works(&negate).then_some(negate)
    })
}

/// A permutation group acting compatibly on an ideal and a grading matrix,
/// with the induced matrix of every group element.
#[derive(Clone, Debug)]
pub struct Symmetry {
    group: PermGroup,
    maps: Vec<RatMatrix>,
}

impl Symmetry {
    /// Validates every generator against `ideal` (up to sign twists) and `q`.
    pub fn new(group: PermGroup, ideal: &Ideal, q: &GradingMatrix) -> Result<Self, SymmetryError> {
        if group.degree() != q.nvars() {
            return Err(SymmetryError::DegreeMismatch {
                expected: q.nvars(),
                found: group.degree(),
            });
        }
        for g in group.generators() {
            if sign_twist(g, ideal).is_none() {
                return Err(SymmetryError::IncompatibleIdeal(g.to_string()));
            }
        }
        let maps = group
            .elements()
            .iter()
            .map(|g| induced_map(g, q).ok_or_else(|| SymmetryError::NoLinearAction(g.to_string())))
            .collect::<Result<_, _>>()?;
        Ok(Symmetry { group, maps })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Induced matrices, aligned with `group().elements()`.
    pub fn maps(&self) -> &[RatMatrix] {
        &self.maps
    }

    pub fn canonical_face(&self, face: &Face) -> (Face, usize) {
        canonical_rep(face, &self.group)
    }

    /// Least element of the orbit of `c` under the induced linear action.
    pub fn canonical_cone(&self, c: &Cone) -> Cone {
        self.maps
            .iter()
            .map(|a| c.image(a).expect("group elements act invertibly"))
            .min()
            .expect("group contains the identity")
    }

    /// The distinct images of `c`, sorted.
    pub fn cone_orbit(&self, c: &Cone) -> Vec<Cone> {
        let mut orbit: Vec<Cone> = self
            .maps
            .iter()
            .map(|a| c.image(a).expect("group elements act invertibly"))
            .collect();
        orbit.sort();
        orbit.dedup();
        orbit
    }
}
