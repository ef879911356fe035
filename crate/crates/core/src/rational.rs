//! Exact rational scalars and their `[num, den]` wire form.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn half() -> Q {
    Q::new(1, 2)
}

pub fn to_pair(x: &Q) -> [i64; 2] {
    [*x.numer(), *x.denom()]
}

pub fn from_pair(num: i64, den: i64) -> Result<Q> {
    if den == 0 {
        return Err(Error::input("zero denominator"));
    }
    Ok(Q::new(num, den))
}

/// Sparse vector over a numbered basis, kept sorted by index with no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec(Vec<(usize, Q)>);

impl SparseVec {
    pub const EMPTY: SparseVec = SparseVec(Vec::new());

    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    pub fn unit(index: usize) -> Self {
        SparseVec(vec![(index, Q::one())])
    }

    /// Builds a vector from unsorted terms, merging repeats and dropping zeros.
    pub fn from_terms(mut terms: Vec<(usize, Q)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(usize, Q)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 += c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        SparseVec(out)
    }

    pub fn terms(&self) -> &[(usize, Q)] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Q {
        match self.0.binary_search_by_key(&index, |t| t.0) {
            Ok(p) => self.0[p].1,
            Err(_) => Q::zero(),
        }
    }

    pub fn scaled(&self, s: Q) -> Self {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|&(i, c)| (i, c * s)).collect())
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut terms = self.0.clone();
        terms.extend_from_slice(&other.0);
        SparseVec::from_terms(terms)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.last().map(|t| t.0)
    }
}

impl FromIterator<(usize, Q)> for SparseVec {
    fn from_iter<I: IntoIterator<Item = (usize, Q)>>(iter: I) -> Self {
        SparseVec::from_terms(iter.into_iter().collect())
    }
}
