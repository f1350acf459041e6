use std::cmp::Ordering;

use super::{Monomial, PolyError};

/// Term orders on exponent vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic.
    #[default]
    Dp,
    /// Lexicographic with `T₁ > T₂ > … > T_r`.
    Lp,
    /// `dp` on the first `prefix` variables, ties broken by `dp` on the rest.
    /// Any polynomial whose leading monomial avoids the prefix variables
    /// avoids them entirely, which is what elimination needs.
    Block { prefix: usize },
}

impl MonomialOrder {
    /// Compares two monomials of the same length.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        debug_assert_eq!(a.len(), b.len());
        match *self {
            MonomialOrder::Dp => degrevlex(a, b),
            MonomialOrder::Lp => a.cmp(b),
            MonomialOrder::Block { prefix } => {
                let p = prefix.min(a.len());
                degrevlex(&a[..p], &b[..p]).then_with(|| degrevlex(&a[p..], &b[p..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Dp => "dp".into(),
            MonomialOrder::Lp => "lp".into(),
            MonomialOrder::Block { prefix } => format!("(dp({prefix}),dp)"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dp" => Ok(MonomialOrder::Dp),
            "lp" => Ok(MonomialOrder::Lp),
            other => Err(format!("unknown monomial order `{other}` (expected dp or lp)")),
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Checked comparison that rejects monomials from different rings.
pub fn compare(a: &Monomial, b: &Monomial, ord: &MonomialOrder) -> Result<Ordering, PolyError> {
    if a.nvars() != b.nvars() {
        return Err(PolyError::LengthMismatch(a.nvars(), b.nvars()));
    }
    Ok(ord.cmp(a, b))
}
