//! Buchberger's algorithm and the ideal operations built on it.
//!
//! Pairs are selected by the normal strategy (smallest lcm first) and pruned
//! with the Gebauer–Möller installation, which realizes both Buchberger's
//! product criterion and the chain criterion. Every basis returned is reduced
//! and sorted by descending leading monomial, so equal ideals give identical
//! bases.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::Rational;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("generator {index} has {found} variables, ring has {expected}")]
    RingMismatch {
        index: usize,
        found: usize,
        expected: usize,
    },
}

/// Finitely generated ideal of `ℚ[T₁,…,T_r]`. Zero generators are dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        for (index, g) in generators.iter().enumerate() {
            if g.nvars() != ring.nvars() {
                return Err(GroebnerError::RingMismatch {
                    index,
                    found: g.nvars(),
                    expected: ring.nvars(),
                });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring, generators })
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal {
            ring,
            generators: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Same ideal, generators replaced by `f(g)` for each generator `g`.
    pub fn map_generators(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.iter().map(f).filter(|g| !g.is_zero()).collect(),
        }
    }

    /// `true` iff both ideals have the same reduced `dp` basis.
    pub fn same_as(&self, other: &Ideal) -> bool {
        buchberger(self, MonomialOrder::Dp).elements == buchberger(other, MonomialOrder::Dp).elements
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn into_ideal(self, ring: Ring) -> Ideal {
        Ideal {
            ring,
            generators: self.elements,
        }
    }
}

// ---------------------------------------------------------------------------
// Sorted-term representation used inside the algorithm.

#[derive(Clone, Debug)]
struct Sparse {
    /// Descending under the active order.
    terms: Vec<(Monomial, Rational)>,
}

impl Sparse {
    fn from_poly(p: &Polynomial, ord: &MonomialOrder) -> Self {
        Sparse {
            terms: p
                .terms_by(ord)
                .into_iter()
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            if lc.is_one() {
                return;
            }
            let inv = lc.recip();
            for (_, c) in &mut self.terms {
                *c *= &inv;
            }
        }
    }
}

/// `a - c·m·b` where `a` and `b` are descending term lists.
fn sub_scaled(
    a: &[(Monomial, Rational)],
    c: &Rational,
    m: &Monomial,
    b: &[(Monomial, Rational)],
    ord: &MonomialOrder,
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(bm, bc)| (bm.mul(m), bc * c)).peekable();
    while i < a.len() {
        let Some((bm, _)) = bi.peek() else { break };
        match ord.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (bm, bc) = bi.next().expect("peeked");
                out.push((bm, -bc));
            }
            Ordering::Equal => {
                let (bm, bc) = bi.next().expect("peeked");
                let v = &a[i].1 - bc;
                if !v.is_zero() {
                    out.push((bm, v));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(bi.map(|(bm, bc)| (bm, -bc)));
    out
}

struct Reducer<'a> {
    basis: Vec<&'a Sparse>,
    masks: Vec<u64>,
}

impl<'a> Reducer<'a> {
    /// Every element must be monic.
    fn new(basis: Vec<&'a Sparse>) -> Self {
        let masks = basis.iter().map(|g| g.lm().support_mask()).collect();
        Reducer { basis, masks }
    }

    fn divisor(&self, m: &Monomial) -> Option<&'a Sparse> {
        let mask = m.support_mask();
        self.basis
            .iter()
            .zip(&self.masks)
            .find(|(g, &gm)| gm & !mask == 0 && g.lm().divides(m))
            .map(|(g, _)| *g)
    }

    /// Full reduction: no term of the result is divisible by a leading monomial.
    fn reduce(&self, f: &Sparse, ord: &MonomialOrder) -> Sparse {
        let mut done = Vec::new();
        let mut rest = f.terms.clone();
        let mut start = 0;
        while start < rest.len() {
            let (m, c) = &rest[start];
            match self.divisor(m) {
                None => {
                    done.push(rest[start].clone());
                    start += 1;
                }
                Some(g) => {
                    let q = m.div(g.lm()).expect("divisor");
                    let c = c.clone();
                    rest = sub_scaled(&rest[start + 1..], &c, &q, &g.terms[1..], ord);
                    start = 0;
                }
            }
        }
        Sparse { terms: done }
    }
}

fn s_poly(f: &Sparse, g: &Sparse, ord: &MonomialOrder) -> Sparse {
    let l = f.lm().lcm(g.lm());
    let uf = l.div(f.lm()).expect("lcm");
    let ug = l.div(g.lm()).expect("lcm");
    let cf = f.terms[0].1.recip();
    let cg = &g.terms[0].1.recip();
    let scaled_f: Vec<_> = f.terms[1..]
        .iter()
        .map(|(m, c)| (m.mul(&uf), c * &cf))
        .collect();
    Sparse {
        terms: sub_scaled(&scaled_f, cg, &ug, &g.terms[1..], ord),
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    ord: MonomialOrder,
    polys: Vec<Sparse>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn reducer(&self) -> Reducer<'_> {
        Reducer::new(self.active.iter().map(|&i| &self.polys[i]).collect())
    }

    /// Gebauer–Möller installation of a new, fully reduced, monic element.
    fn install(&mut self, h: Sparse) {
        let hi = self.polys.len();
        let lm_h = h.lm().clone();
        self.polys.push(h);

        let candidates: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, self.polys[g].lm().lcm(&lm_h)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, l)) in candidates.iter().enumerate() {
            let coprime = self.polys[*g].lm().is_coprime(&lm_h);
            let dominated = candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && polys[p.i].lm().lcm(&lm_h) != p.lcm
                && polys[p.j].lm().lcm(&lm_h) != p.lcm)
        });
        for (g, l) in kept {
            if !self.polys[g].lm().is_coprime(&lm_h) {
                self.pairs.push(Pair { i: g, j: hi, lcm: l });
            }
        }
        self.active.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.active.push(hi);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            ord.cmp(&pa.lcm, &pb.lcm)
                .then((pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) {
        while let Some(pair) = self.next_pair() {
            let s = s_poly(&self.polys[pair.i], &self.polys[pair.j], &self.ord);
            if s.is_zero() {
                continue;
            }
            let mut h = self.reducer().reduce(&s, &self.ord);
            if h.is_zero() {
                continue;
            }
            h.make_monic();
            if h.lm().is_one() {
                // unit ideal: nothing else matters
                self.polys.push(h);
                self.active = vec![self.polys.len() - 1];
                self.pairs.clear();
                return;
            }
            self.install(h);
        }
    }

    /// Inter-reduces the active elements and sorts them descending.
    fn reduced_basis(&self) -> Vec<Sparse> {
        let mut basis: Vec<Sparse> = self.active.iter().map(|&i| self.polys[i].clone()).collect();
        let ord = self.ord;
        basis.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
        let mut out = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let others: Vec<&Sparse> = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g)
                .collect();
            let reducer = Reducer::new(others);
            let head = basis[i].terms[0].clone();
            let tail = reducer.reduce(
                &Sparse {
                    terms: basis[i].terms[1..].to_vec(),
                },
                &ord,
            );
            let mut g = Sparse {
                terms: std::iter::once(head).chain(tail.terms).collect(),
            };
            g.make_monic();
            out.push(g);
        }
        out.sort_by(|a, b| ord.cmp(b.lm(), a.lm()));
        out
    }
}

/// Reduced Gröbner basis of `ideal` under `ord`.
pub fn buchberger(ideal: &Ideal, ord: MonomialOrder) -> GroebnerBasis {
    let nvars = ideal.nvars();
    let mut input: Vec<Sparse> = ideal
        .generators
        .iter()
        .map(|g| {
            let mut s = Sparse::from_poly(g, &ord);
            s.make_monic();
            s
        })
        .collect();
    input.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));

    let mut engine = Engine {
        ord,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in input {
        let mut h = engine.reducer().reduce(&f, &ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            engine.polys.push(h);
            engine.active = vec![engine.polys.len() - 1];
            engine.pairs.clear();
            break;
        }
        engine.install(h);
    }
    if !(engine.active.len() == 1 && engine.polys[engine.active[0]].lm().is_one()) {
        engine.run();
    }
    let elements = engine
        .reduced_basis()
        .iter()
        .map(|g| g.to_poly(nvars))
        .collect();
    GroebnerBasis {
        order: ord,
        nvars,
        elements,
        reduced: true,
    }
}

/// Remainder of `f` on division by `basis`; no term of the result is
/// divisible by a leading monomial of `basis`.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    let ord = basis.order;
    let elements: Vec<Sparse> = basis
        .elements
        .iter()
        .map(|g| {
            let mut s = Sparse::from_poly(g, &ord);
            s.make_monic();
            s
        })
        .collect();
    let reducer = Reducer::new(elements.iter().collect());
    reducer.reduce(&Sparse::from_poly(f, &ord), &ord).to_poly(f.nvars())
}

/// S-polynomial of `f` and `g` under `ord` (both nonzero).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Polynomial {
    let sf = Sparse::from_poly(f, &ord);
    let sg = Sparse::from_poly(g, &ord);
    s_poly(&sf, &sg, &ord).to_poly(f.nvars())
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> bool {
    normal_form(f, &buchberger(ideal, MonomialOrder::Dp)).is_zero()
}

/// `true` iff the ideal is the whole ring.
pub fn is_trivial(ideal: &Ideal) -> bool {
    buchberger(ideal, MonomialOrder::Dp).is_unit()
}

/// Generators of `I ∩ ℚ[variables not in drop]`.
///
/// Variables are reordered so the dropped ones form the first block of a
/// `(dp, dp)` block order; the returned generators are a reduced `dp`
/// basis of the elimination ideal, still written in the original ring.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Ideal {
    let n = ideal.nvars();
    let mut order: Vec<usize> = drop.to_vec();
    order.sort_unstable();
    order.dedup();
    let prefix = order.len();
    order.extend((0..n).filter(|i| !drop.contains(i)));
    // forward[i] = new position of variable i
    let mut forward = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        forward[v] = pos;
    }
    let moved = Ideal {
        ring: ideal.ring.clone(),
        generators: ideal
            .generators
            .iter()
            .map(|g| g.remap_variables(&forward, n))
            .collect(),
    };
    let gb = buchberger(&moved, MonomialOrder::Block { prefix });
    let generators = gb
        .elements
        .into_iter()
        .filter(|g| g.terms().all(|(m, _)| m.exponents()[..prefix].iter().all(|&e| e == 0)))
        .map(|g| g.remap_variables(&order, n))
        .collect();
    Ideal {
        ring: ideal.ring.clone(),
        generators,
    }
}

/// `I : f^∞`, computed as `(I + ⟨1 - t·f⟩) ∩ ℚ[T]` with a fresh variable `t`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Ideal {
    let n = ideal.nvars();
    if f.is_zero() {
        return Ideal {
            ring: ideal.ring.clone(),
            generators: vec![Polynomial::one(n)],
        };
    }
    // t becomes variable 0, T_i becomes variable i + 1
    let shift: Vec<usize> = (1..=n).collect();
    let mut generators: Vec<Polynomial> = ideal
        .generators
        .iter()
        .map(|g| g.remap_variables(&shift, n + 1))
        .collect();
    let t = Polynomial::variable(0, n + 1);
    let tf = &t * &f.remap_variables(&shift, n + 1);
    generators.push(&Polynomial::one(n + 1) - &tf);
    let ring = extended_ring(&ideal.ring);
    let gb = buchberger(
        &Ideal { ring, generators },
        MonomialOrder::Block { prefix: 1 },
    );
    let unshift: Vec<usize> = std::iter::once(0).chain(0..n).collect();
    let generators = gb
        .elements
        .into_iter()
        .filter(|g| g.terms().all(|(m, _)| m.exponents()[0] == 0))
        .map(|g| g.remap_variables(&unshift, n))
        .collect();
    Ideal {
        ring: ideal.ring.clone(),
        generators,
    }
}

fn extended_ring(ring: &Ring) -> Ring {
    let fresh = (0..)
        .map(|i| if i == 0 { "t".to_string() } else { format!("t{i}") })
        .find(|name| ring.index_of(name).is_none())
        .expect("some name is free");
    Ring::new(std::iter::once(fresh).chain(ring.names().iter().cloned())).expect("valid names")
}

/// Checks the Buchberger criterion: every S-polynomial reduces to zero.
pub fn satisfies_buchberger_criterion(basis: &GroebnerBasis) -> bool {
    let g = &basis.elements;
    (0..g.len()).all(|i| {
        (i + 1..g.len()).all(|j| normal_form(&s_polynomial(&g[i], &g[j], basis.order), basis).is_zero())
    })
}

/// Checks the shape of a reduced basis: monic, pairwise distinct leading
/// monomials, and no term divisible by another element's leading monomial.
pub fn is_reduced_basis(basis: &GroebnerBasis) -> bool {
    let ord = basis.order;
    let lms: Vec<&Monomial> = basis
        .elements
        .iter()
        .map(|g| g.leading_term(&ord).expect("nonzero").0)
        .collect();
    basis.elements.iter().enumerate().all(|(i, g)| {
        g.leading_term(&ord).is_some_and(|(_, c)| c.is_one())
            && g.terms().all(|(m, _)| {
                lms.iter()
                    .enumerate()
                    .all(|(j, lm)| j == i || !lm.divides(m))
            })
    })
}
