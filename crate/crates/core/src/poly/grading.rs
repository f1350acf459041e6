use num_traits::Zero;

use super::{PolyError, Polynomial};
use crate::exact::{BigInt, IntVector, RatMatrix};

/// Integer matrix `Q = (q₁,…,q_r) ∈ ℤ^{k×r}` assigning `deg(T_i) = q_i`.
///
/// Construction checks that every row has `r` entries and that `Q` has full
/// row rank `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradingMatrix {
    rows: Vec<IntVector>,
    nvars: usize,
}

impl GradingMatrix {
    pub fn new(rows: Vec<IntVector>) -> Result<Self, PolyError> {
        let nvars = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != nvars {
                return Err(PolyError::RaggedGrading {
                    row: i + 1,
                    found: row.len(),
                    expected: nvars,
                });
            }
        }
        let k = rows.len();
        let rank = if k == 0 {
            0
        } else {
            RatMatrix::from_int_rows(&rows).expect("rows are rectangular").rank()
        };
        if k == 0 || rank < k {
            return Err(PolyError::RankDeficient { rank, expected: k });
        }
        Ok(GradingMatrix { rows, nvars })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, PolyError> {
        Self::new(rows.iter().map(|r| crate::exact::int_vector(r)).collect())
    }

    /// Number of grading dimensions `k`.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Number of variables `r`.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    /// Column `q_i`.
    pub fn column(&self, i: usize) -> IntVector {
        self.rows.iter().map(|row| row[i].clone()).collect()
    }

    pub fn columns(&self) -> Vec<IntVector> {
        (0..self.nvars).map(|i| self.column(i)).collect()
    }

    /// `Q · e` for an exponent vector `e`.
    pub fn degree_of(&self, exponents: &[u32]) -> IntVector {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(exponents)
                    .filter(|(_, &e)| e > 0)
                    .map(|(q, &e)| q * BigInt::from(e))
                    .fold(BigInt::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// The common degree of all terms of `p`.
    pub fn multidegree(&self, p: &Polynomial) -> Result<IntVector, PolyError> {
        let mut terms = p.terms();
        let (first, _) = terms.next().ok_or(PolyError::ZeroPolynomial)?;
        let degree = self.degree_of(first.exponents());
        for (m, _) in terms {
            if self.degree_of(m.exponents()) != degree {
                return Err(PolyError::NotHomogeneous);
            }
        }
        Ok(degree)
    }

    pub fn is_homogeneous(&self, p: &Polynomial) -> bool {
        p.is_zero() || self.multidegree(p).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_vector;
    use crate::poly::{parse_polynomial, Ring};
    use proptest::prelude::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            GradingMatrix::from_i64(&[&[1, 1], &[1]]),
            Err(PolyError::RaggedGrading { row: 2, found: 1, expected: 2 })
        ));
        assert!(matches!(
            GradingMatrix::from_i64(&[&[1, 1], &[2, 2]]),
            Err(PolyError::RankDeficient { rank: 1, expected: 2 })
        ));
    }

    #[test]
    fn multidegree_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let q = GradingMatrix::from_i64(&[&[1, 1]]).unwrap();
        let xy = parse_polynomial("x*y", &r).unwrap();
        assert_eq!(q.multidegree(&xy), Ok(int_vector(&[2])));
        let p = parse_polynomial("x + y^2", &r).unwrap();
        assert_eq!(q.multidegree(&p), Err(PolyError::NotHomogeneous));
        assert_eq!(q.multidegree(&Polynomial::zero(2)), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn plucker_multidegree() {
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let names: Vec<String> = pairs.iter().map(|(i, j)| format!("p{}{}", i + 1, j + 1)).collect();
        let r = Ring::new(names).unwrap();
        let mut rows = vec![vec![0i64; 10]; 5];
        for (c, &(i, j)) in pairs.iter().enumerate() {
            rows[i][c] = 1;
            rows[j][c] = 1;
        }
        let q = GradingMatrix::new(rows.iter().map(|r| int_vector(r)).collect()).unwrap();
        let p = parse_polynomial("p12*p34 - p13*p24 + p14*p23", &r).unwrap();
        assert_eq!(q.multidegree(&p), Ok(int_vector(&[1, 1, 1, 1, 0])));
    }

    proptest! {
        #[test]
        fn degree_is_additive(
            a in proptest::collection::vec(0u32..4, 3),
            b in proptest::collection::vec(0u32..4, 3),
            c in proptest::collection::vec(0u32..4, 3),
        ) {
            // Q = (1 1 1; 0 1 2); homogeneous f, g built from matching monomial pairs
            let q = GradingMatrix::from_i64(&[&[1, 1, 1], &[0, 1, 2]]).unwrap();
            let r = Ring::new(["x", "y", "z"]).unwrap();
            let mono = |e: &[u32]| Polynomial::monomial(
                crate::exact::rat(1, 1),
                crate::poly::Monomial::new(e.to_vec()),
            );
            // x*z and y^2 share degree (2, 2): multiply a monomial by (x z - y^2)
            let binom = parse_polynomial("x*z - y^2", &r).unwrap();
            let f = &mono(&a) * &binom;
            let g = &mono(&b) * &mono(&c);
            let df = q.multidegree(&f).unwrap();
            let dg = q.multidegree(&g).unwrap();
            let dfg = q.multidegree(&(&f * &g)).unwrap();
            let sum: IntVector = df.iter().zip(&dg).map(|(x, y)| x + y).collect();
            prop_assert_eq!(dfg, sum);
        }
    }
}
