//! Double-description method: generators of `{x : A x ≥ 0, E x = 0}`.
//!
//! Constraints are inserted one at a time. The lineality space is kept as
//! an explicit basis; the pointed part is a list of extreme rays, each with
//! the set of inequalities it satisfies with equality. Two rays on opposite
//! sides of a new hyperplane are combined only if they are adjacent, decided
//! by the combinatorial test (no third ray is tight on every inequality that
//! both are tight on).

use num_traits::{Signed, Zero};

use crate::exact::{dot, gcd_normalize, int, BigInt, IntVector};

#[derive(Clone, Debug)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn with_capacity(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn insert_range(&mut self, end: usize) {
        for i in 0..end {
            self.insert(i);
        }
    }

    fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: IntVector,
    tight: BitSet,
}

fn primitive(v: IntVector) -> Option<IntVector> {
    gcd_normalize(&v).ok()
}

fn combine(s: &BigInt, a: &[BigInt], t: &BigInt, b: &[BigInt]) -> IntVector {
    a.iter().zip(b).map(|(x, y)| s * x - t * y).collect()
}

/// Removes zero rows and duplicates (after making rows primitive).
fn clean(rows: &[IntVector]) -> Vec<IntVector> {
    let mut out: Vec<IntVector> = Vec::new();
    for r in rows {
        if let Some(p) = primitive(r.clone()) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Returns `(rays, lineality)` of `{x ∈ ℚ^dim : ⟨a, x⟩ ≥ 0 ∀a ∈ ineqs, ⟨e, x⟩ = 0 ∀e ∈ eqs}`.
///
/// Rays are primitive extreme rays of the cone modulo its lineality space;
/// neither list is canonicalized.
pub(crate) fn generators_of(
    ineqs: &[IntVector],
    eqs: &[IntVector],
    dim: usize,
) -> (Vec<IntVector>, Vec<IntVector>) {
    let eqs = clean(eqs);
    let mut ineqs = clean(ineqs);
    // a pair ±a of inequalities is an equation
    let mut extra_eqs = Vec::new();
    ineqs.retain(|a| {
        let neg: IntVector = a.iter().map(|x| -x).collect();
        if eqs.contains(a) || eqs.contains(&neg) {
            return false;
        }
        true
    });
    let snapshot = ineqs.clone();
    ineqs.retain(|a| {
        let neg: IntVector = a.iter().map(|x| -x).collect();
        if snapshot.contains(&neg) {
            if a > &neg {
                extra_eqs.push(a.clone());
            }
            return false;
        }
        true
    });
    let eqs: Vec<IntVector> = eqs.into_iter().chain(extra_eqs).collect();

    let mut lineality: Vec<IntVector> = (0..dim)
        .map(|i| (0..dim).map(|j| int(i64::from(i == j))).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let nbits = ineqs.len();

    for e in &eqs {
        insert_constraint(e, None, &mut lineality, &mut rays, nbits);
    }
    for (idx, a) in ineqs.iter().enumerate() {
        insert_constraint(a, Some(idx), &mut lineality, &mut rays, nbits);
    }
    (rays.into_iter().map(|r| r.v).collect(), lineality)
}

/// Inserts one constraint; `index` is `Some(i)` for the `i`-th inequality and
/// `None` for an equation.
fn insert_constraint(
    a: &[BigInt],
    index: Option<usize>,
    lineality: &mut Vec<IntVector>,
    rays: &mut Vec<Ray>,
    nbits: usize,
) {
    if let Some(p) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
        let mut l0 = lineality.swap_remove(p);
        let mut s = dot(a, &l0);
        if s.is_negative() {
            l0.iter_mut().for_each(|x| *x = -&*x);
            s = -s;
        }
        for l in lineality.iter_mut() {
            let v = dot(a, l);
            if !v.is_zero() {
                *l = primitive(combine(&s, l, &v, &l0)).expect("independent lineality");
            }
        }
        for r in rays.iter_mut() {
            let v = dot(a, &r.v);
            if !v.is_zero() {
                r.v = primitive(combine(&s, &r.v, &v, &l0)).expect("ray independent of lineality");
            }
            if let Some(i) = index {
                r.tight.insert(i);
            }
        }
        if let Some(i) = index {
            let mut tight = BitSet::with_capacity(nbits);
            tight.insert_range(i);
            rays.push(Ray { v: l0, tight });
        }
        return;
    }

    let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
    let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
    let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
    if neg.is_empty() && (index.is_some() || pos.is_empty()) {
        if let Some(i) = index {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.tight.insert(i);
                }
            }
        }
        return;
    }

    let mut created = Vec::new();
    for &p in &pos {
        for &n in &neg {
            let common = rays[p].tight.intersection(&rays[n].tight);
            let adjacent = !(0..rays.len())
                .any(|r| r != p && r != n && common.is_subset(&rays[r].tight));
            if !adjacent {
                continue;
            }
            let vn = -&values[n];
            let v: IntVector = rays[n]
                .v
                .iter()
                .zip(&rays[p].v)
                .map(|(x, y)| &values[p] * x + &vn * y)
                .collect();
            let Some(v) = primitive(v) else { continue };
            let mut tight = common;
            if let Some(i) = index {
                tight.insert(i);
            }
            created.push(Ray { v, tight });
        }
    }

    let keep_positive = index.is_some();
    let old = std::mem::take(rays);
    for (mut r, v) in old.into_iter().zip(values) {
        if v.is_zero() {
            if let Some(i) = index {
                r.tight.insert(i);
            }
            rays.push(r);
        } else if v.is_positive() && keep_positive {
            rays.push(r);
        }
    }
    for r in created {
        if !rays.iter().any(|x| x.v == r.v) {
            rays.push(r);
        }
    }
}
