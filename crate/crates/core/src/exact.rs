//! Exact integer and rational arithmetic.
//!
//! Big integers and reduced rationals come from `num-bigint` / `num-rational`;
//! this module adds the vector helpers and the small dense linear algebra
//! (elimination, rank, solving, null spaces) used by the cone and symmetry
//! layers. Nothing here touches floating point.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_bigint::BigInt;

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

/// Dense integer vector.
pub type IntVector = Vec<BigInt>;

/// Dense rational vector.
pub type RatVector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid number literal `{0}`")]
    Parse(String),
    #[error("matrix is singular")]
    Singular,
}

pub fn parse_bigint(text: &str) -> Result<BigInt, ExactError> {
    BigInt::from_str(text.trim()).map_err(|_| ExactError::Parse(text.to_string()))
}

/// Parses `"p"` or `"p/q"`; the result is fully reduced.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let text = text.trim();
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_bigint(text)?)),
        Some((num, den)) => {
            let num = parse_bigint(num)?;
            let den = parse_bigint(den)?;
            if den.is_zero() {
                return Err(ExactError::Parse(text.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn int(value: i64) -> BigInt {
    BigInt::from(value)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int_vector(values: &[i64]) -> IntVector {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn to_rational(v: &[BigInt]) -> RatVector {
    v.iter().cloned().map(Rational::from_integer).collect()
}

pub fn is_zero_vector<T: Zero>(v: &[T]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Divides by the gcd of the entries, keeping the direction.
pub fn gcd_normalize(v: &[BigInt]) -> Result<IntVector, ExactError> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return Err(ExactError::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Positive multiple of a rational vector that is a primitive integer vector.
pub fn primitive_from_rational(v: &[Rational]) -> Result<IntVector, ExactError> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: IntVector = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    gcd_normalize(&scaled)
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[BigInt], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + y * x)
}

/// Dense rational matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<RatVector>) -> Result<Self, ExactError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(ExactError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_int_rows(rows: &[IntVector]) -> Result<Self, ExactError> {
        Self::from_rows(rows.iter().map(|r| to_rational(r)).collect())
    }

    /// Builds a `rows x cols` matrix with an explicit shape (useful when `rows == 0`).
    pub fn with_shape(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, ExactError> {
        if entries.len() != rows * cols {
            return Err(ExactError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(RatMatrix {
            rows,
            cols,
            data: entries,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> RatVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<RatVector, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul_int_vec(&self, v: &[BigInt]) -> Result<RatVector, ExactError> {
        self.mul_vec(&to_rational(v))
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(l, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let v = &m[(row, j)] * &inv;
                m[(row, j)] = v;
            }
            for i in 0..m.rows {
                if i == row || m[(i, col)].is_zero() {
                    continue;
                }
                let factor = m[(i, col)].clone();
                for j in col..m.cols {
                    let delta = &factor * &m[(row, j)];
                    m[(i, j)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<RatVector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = -r[(i, f)].clone();
                }
                x
            })
            .collect()
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<RatMatrix, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(ExactError::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn rank(a: &RatMatrix) -> usize {
    a.rank()
}

/// Solves `A x = b` exactly.
///
/// Returns `Ok(None)` when the system is inconsistent. Underdetermined systems
/// get the solution with every free variable set to zero.
pub fn solve_linear(a: &RatMatrix, b: &[Rational]) -> Result<Option<RatVector>, ExactError> {
    if b.len() != a.nrows() {
        return Err(ExactError::DimensionMismatch {
            expected: a.nrows(),
            found: b.len(),
        });
    }
    let n = a.ncols();
    let mut aug = RatMatrix::zeros(a.nrows(), n + 1);
    for i in 0..a.nrows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, n)].clone();
    }
    Ok(Some(x))
}

/// Canonical integer basis of the row space: the reduced row echelon form
/// with every row scaled to a primitive integer vector.
pub fn canonical_row_basis(rows: &[IntVector], dim: usize) -> Vec<IntVector> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_int_rows(rows).expect("rows share a dimension");
    debug_assert_eq!(m.ncols(), dim);
    let (r, pivots) = m.rref();
    (0..pivots.len())
        .map(|i| primitive_from_rational(r.row(i)).expect("pivot rows are nonzero"))
        .collect()
}

/// Reduces `v` modulo the span of a canonical row basis by clearing pivot
/// coordinates, then returns the primitive positive multiple.
///
/// Returns `None` when `v` lies in the span.
pub fn reduce_modulo(v: &[BigInt], basis: &[IntVector]) -> Option<IntVector> {
    let mut x = to_rational(v);
    for row in basis {
        let Some(p) = row.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        if x[p].is_zero() {
            continue;
        }
        let factor = &x[p] / Rational::from_integer(row[p].clone());
        for (xi, ri) in x.iter_mut().zip(row) {
            *xi -= &factor * ri;
        }
    }
    primitive_from_rational(&x).ok()
}

pub fn format_vector<T: fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn signum(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rmat(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_int_rows(&rows.iter().map(|r| int_vector(r)).collect::<Vec<_>>()).unwrap()
    }

    fn rvec(v: &[i64]) -> RatVector {
        to_rational(&int_vector(v))
    }

    #[test]
    fn gcd_normalize_examples() {
        assert_eq!(gcd_normalize(&int_vector(&[2, 4, 6])).unwrap(), int_vector(&[1, 2, 3]));
        assert_eq!(gcd_normalize(&int_vector(&[1, 0, 0])).unwrap(), int_vector(&[1, 0, 0]));
        assert_eq!(gcd_normalize(&int_vector(&[-3, 6])).unwrap(), int_vector(&[-1, 2]));
        assert_eq!(gcd_normalize(&int_vector(&[0, 0])), Err(ExactError::ZeroVector));
    }

    #[test]
    fn solve_examples() {
        let x = solve_linear(&RatMatrix::identity(2), &rvec(&[3, 5])).unwrap();
        assert_eq!(x, Some(rvec(&[3, 5])));
        let x = solve_linear(&rmat(&[&[1, 1], &[1, -1]]), &rvec(&[2, 0])).unwrap();
        assert_eq!(x, Some(rvec(&[1, 1])));
        let a = rmat(&[&[1, 2]]);
        let x = solve_linear(&a, &rvec(&[4])).unwrap().unwrap();
        assert_eq!(x, rvec(&[4, 0]));
        assert_eq!(a.mul_vec(&x).unwrap(), rvec(&[4]));
    }

    #[test]
    fn solve_inconsistent_and_mismatch() {
        let a = rmat(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve_linear(&a, &rvec(&[1, 2])).unwrap(), None);
        assert!(matches!(
            solve_linear(&a, &rvec(&[1])),
            Err(ExactError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        assert_eq!(rank(&rmat(&[&[1, 1]])), 1);
        // columns e_i + e_j, 1 <= i < j <= 5
        let mut rows = vec![vec![0i64; 10]; 5];
        let mut col = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                rows[i][col] = 1;
                rows[j][col] = 1;
                col += 1;
            }
        }
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        assert_eq!(rank(&rmat(&refs)), 5);
    }

    #[test]
    fn rational_parse_print() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(q, rat(-3, 2));
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(parse_bigint("-123456789012345678901234567890").unwrap().to_string(), "-123456789012345678901234567890");
    }

    #[test]
    fn inverse_and_nullspace() {
        let a = rmat(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert_eq!(rmat(&[&[1, 2], &[2, 4]]).inverse(), Err(ExactError::Singular));
        let ns = rmat(&[&[1, 1, 1]]).nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(rmat(&[&[1, 1, 1]]).mul_vec(&v).unwrap()[0].is_zero());
        }
    }

    #[test]
    fn reduce_modulo_is_canonical() {
        let basis = canonical_row_basis(&[int_vector(&[0, 2, 2])], 3);
        assert_eq!(basis, vec![int_vector(&[0, 1, 1])]);
        let a = reduce_modulo(&int_vector(&[1, 0, 0]), &basis).unwrap();
        let b = reduce_modulo(&int_vector(&[2, 3, 3]), &basis).unwrap();
        assert_eq!(a, b);
        assert_eq!(reduce_modulo(&int_vector(&[0, -1, -1]), &basis), None);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * a.recip(), Rational::one());
            }
            prop_assert!(a.denom().is_positive());
            prop_assert!(a.numer().gcd(a.denom()).is_one());
        }

        #[test]
        fn normalize_scale_invariant(v in proptest::collection::vec(-30i64..30, 1..6), c in 1i64..20) {
            let v = int_vector(&v);
            prop_assume!(!is_zero_vector(&v));
            let n = gcd_normalize(&v).unwrap();
            prop_assert_eq!(gcd_normalize(&n).unwrap(), n.clone());
            let scaled: IntVector = v.iter().map(|x| x * c).collect();
            prop_assert_eq!(gcd_normalize(&scaled).unwrap(), n);
        }

        #[test]
        fn solution_satisfies_system(
            entries in proptest::collection::vec(-5i64..5, 6),
            b in proptest::collection::vec(-5i64..5, 2),
        ) {
            let a = RatMatrix::with_shape(2, 3, rvec(&entries)).unwrap();
            let b = rvec(&b);
            if let Some(x) = solve_linear(&a, &b).unwrap() {
                prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
            } else {
                prop_assert!(a.rank() < 2);
            }
        }
    }
}
