//! Faces of the positive orthant, i.e. subsets of the variable indices.

use std::fmt;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 64;

/// A subset `γ` of `{0, …, r-1}` stored as a bitset (bit `i` set iff `i ∈ γ`).
///
/// Indices are 0-based in the API; bitstrings and cycle notation are 1-based
/// in the sense that character `i` (from the left) stands for variable `i+1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Face {
    bits: u64,
    nvars: usize,
}

impl Face {
    pub fn empty(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Face { bits: 0, nvars }
    }

    pub fn full(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let bits = if nvars == 64 { u64::MAX } else { (1u64 << nvars) - 1 };
        Face { bits, nvars }
    }

    pub fn from_bits(bits: u64, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        debug_assert!(nvars == 64 || bits >> nvars == 0);
        Face { bits, nvars }
    }

    pub fn from_indices(nvars: usize, indices: &[usize]) -> Self {
        let mut f = Face::empty(nvars);
        for &i in indices {
            f.insert(i);
        }
        f
    }

    /// Parses a bitstring such as `"1010"`.
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let nvars = s.chars().count();
        if nvars > MAX_VARS {
            return None;
        }
        let mut f = Face::empty(nvars);
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => f.insert(i),
                '0' => {}
                _ => return None,
            }
        }
        Some(f)
    }

    /// Every subset of `{0, …, nvars-1}`, in increasing bit order.
    pub fn all_subsets(nvars: usize) -> impl Iterator<Item = Face> {
        assert!(nvars < MAX_VARS, "cannot enumerate 2^{nvars} subsets");
        (0..(1u64 << nvars)).map(move |bits| Face { bits, nvars })
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.nvars, "index {i} out of range for {} variables", self.nvars);
        self.bits |= 1 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.nvars && self.bits >> i & 1 == 1
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nvars).filter(move |&i| self.contains(i))
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.nvars)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    /// Ordering key under which the lexicographically least sorted index list
    /// is the *largest* key among faces of equal cardinality.
    pub(crate) fn lex_key(&self) -> u64 {
        self.bits.reverse_bits()
    }

    /// `true` if `self` precedes `other` when comparing sorted index lists
    /// lexicographically (`[1] < [1, 2] < [1, 3] < [2]`).
    pub fn lex_less(&self, other: &Face) -> bool {
        let a: Vec<usize> = self.indices().collect();
        let b: Vec<usize> = other.indices().collect();
        a < b
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.indices().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitstrings_round_trip() {
        let f = Face::from_indices(5, &[0, 3]);
        assert_eq!(f.to_bitstring(), "10010");
        assert_eq!(Face::from_bitstring("10010"), Some(f));
        assert_eq!(Face::from_bitstring("10x"), None);
        assert_eq!(f.to_string(), "{1,4}");
    }

    #[test]
    fn subsets_and_sizes() {
        assert_eq!(Face::all_subsets(3).count(), 8);
        assert_eq!(Face::full(3).len(), 3);
        assert!(Face::empty(3).is_empty());
        assert_eq!(Face::full(64).len(), 64);
    }

    #[test]
    fn lex_order_of_equal_size_faces() {
        let a = Face::from_indices(3, &[0, 1]);
        let b = Face::from_indices(3, &[0, 2]);
        let c = Face::from_indices(3, &[1, 2]);
        assert!(a.lex_less(&b) && b.lex_less(&c));
        assert!(a.lex_key() > b.lex_key() && b.lex_key() > c.lex_key());
    }
}
