use num_traits::One;

use super::{Cone, ConeError, Fan};
use crate::exact::{BigInt, IntVector};
use crate::poly::Polynomial;

/// Lattice polytope given by its vertices (sorted lexicographically).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<IntVector>,
}

impl Polytope {
    /// Convex hull of `points`; only the extreme points are kept.
    pub fn from_points(points: &[IntVector], dim: usize) -> Result<Polytope, ConeError> {
        if points.is_empty() {
            return Err(ConeError::EmptyPolytope);
        }
        // extreme rays of the homogenization cone(1 × points) are the vertices
        let lifted: Vec<IntVector> = points
            .iter()
            .map(|p| {
                if p.len() != dim {
                    return Err(ConeError::DimensionMismatch {
                        expected: dim,
                        found: p.len(),
                    });
                }
                Ok(std::iter::once(BigInt::one()).chain(p.iter().cloned()).collect())
            })
            .collect::<Result<_, _>>()?;
        let cone = Cone::from_rays(&lifted, dim + 1)?;
        let mut vertices: Vec<IntVector> = cone
            .rays()
            .iter()
            .map(|r| {
                debug_assert!(r[0].is_one(), "lifted points are primitive");
                r[1..].to_vec()
            })
            .collect();
        vertices.sort();
        Ok(Polytope { dim, vertices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    /// Inner normal cone `{u : ⟨u, v' - v⟩ ≥ 0 for all vertices v'}` of vertex `i`.
    pub fn normal_cone(&self, i: usize) -> Cone {
        let v = &self.vertices[i];
        let ineqs: Vec<IntVector> = self
            .vertices
            .iter()
            .filter(|w| *w != v)
            .map(|w| w.iter().zip(v).map(|(a, b)| a - b).collect())
            .collect();
        Cone::from_inequalities(&ineqs, &[], self.dim).expect("same dimension")
    }
}

/// Newton polytope: convex hull of the exponent vectors of `f`.
pub fn newton_polytope(f: &Polynomial) -> Result<Polytope, ConeError> {
    if f.is_zero() {
        return Err(ConeError::ZeroPolynomial);
    }
    let points: Vec<IntVector> = f
        .terms()
        .map(|(m, _)| m.exponents().iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    Polytope::from_points(&points, f.nvars())
}

/// Complete fan of inner normal cones of the vertices.
pub fn normal_fan(p: &Polytope) -> Fan {
    let cones = (0..p.vertices.len()).map(|i| p.normal_cone(i)).collect();
    Fan::from_cones(cones, p.dim).expect("same dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_vector;
    use crate::poly::{parse_polynomial, Ring};

    fn newton(s: &str) -> Polytope {
        let r = Ring::new(["x", "y"]).unwrap();
        newton_polytope(&parse_polynomial(s, &r).unwrap()).unwrap()
    }

    #[test]
    fn newton_examples() {
        assert_eq!(
            newton("x^3+y^3+1").vertices(),
            &[int_vector(&[0, 0]), int_vector(&[0, 3]), int_vector(&[3, 0])]
        );
        assert_eq!(newton("5").vertices(), &[int_vector(&[0, 0])]);
        assert_eq!(
            newton("x^2 + x*y + y^2").vertices(),
            &[int_vector(&[0, 2]), int_vector(&[2, 0])]
        );
        assert_eq!(
            newton_polytope(&Polynomial::zero(2)),
            Err(ConeError::ZeroPolynomial)
        );
    }

    #[test]
    fn normal_fan_of_triangle() {
        let fan = normal_fan(&newton("x^3+y^3+1"));
        assert_eq!(
            fan.rays(),
            &[int_vector(&[-1, -1]), int_vector(&[0, 1]), int_vector(&[1, 0])]
        );
        assert_eq!(fan.maximal_cones(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(fan.facets_properly_shared(&Cone::full_space(2)));
        assert!(fan.intersections_are_faces());
    }

    #[test]
    fn normal_fan_of_point_and_segment() {
        let fan = normal_fan(&newton("5"));
        assert_eq!(fan.cones(), &[Cone::full_space(2)]);
        assert_eq!(fan.maximal_cones(), &[Vec::<usize>::new()]);

        let seg = Polytope::from_points(&[int_vector(&[0, 0]), int_vector(&[1, 0])], 2).unwrap();
        let fan = normal_fan(&seg);
        assert_eq!(fan.rays(), &[int_vector(&[-1, 0]), int_vector(&[1, 0])]);
        assert_eq!(fan.lineality(), &[int_vector(&[0, 1])]);
        assert_eq!(fan.maximal_cones(), &[vec![0], vec![1]]);
        assert!(fan.facets_properly_shared(&Cone::full_space(2)));
    }
}
