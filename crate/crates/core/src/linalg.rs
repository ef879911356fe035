//! Exact linear algebra: fraction-free (Bareiss) elimination over big
//! integers for ranks of large sparse matrices, and a small dense rational
//! row reducer used to solve coordinate systems.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Sparse integer row: column → nonzero entry.
pub type IntRow = BTreeMap<usize, BigInt>;

/// Clears denominators of a rational row by multiplying with their lcm.
pub fn integer_row(row: impl IntoIterator<Item = (usize, Q)>) -> IntRow {
    let entries: Vec<(usize, Q)> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    let lcm = entries.iter().fold(1i64, |acc, (_, v)| acc.lcm(v.denom()));
    entries
        .into_iter()
        .map(|(c, v)| (c, BigInt::from(*v.numer() * (lcm / *v.denom()))))
        .collect()
}

/// Result of fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Elimination {
    pub rank: usize,
    /// Last Bareiss pivot: for a square nonsingular input this is ± its determinant.
    pub last_pivot: BigInt,
}

/// Rank of a sparse integer matrix by Bareiss elimination.
///
/// Every intermediate entry is a minor of the input, so all divisions are
/// exact and no rationals appear. Rows whose pivot-column entry is zero are
/// still rescaled by `pivot / previous_pivot` to keep that invariant.
pub fn bareiss(rows: Vec<IntRow>) -> Elimination {
    let mut rows: Vec<IntRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    while rank < rows.len() {
        // Pivot: smallest leading column, ties broken by the shortest row.
        let (p, col) = match rows[rank..]
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.keys().next().map(|&c| (c, r.len(), i + rank)))
            .min()
        {
            Some((c, _, i)) => (i, c),
            None => break,
        };
        rows.swap(rank, p);
        let pivot_row = std::mem::take(&mut rows[rank]);
        let pivot = pivot_row[&col].clone();
        for row in rows[rank + 1..].iter_mut() {
            let factor = row.remove(&col);
            let mut next = IntRow::new();
            for (c, v) in row.iter() {
                let scaled = v * &pivot;
                next.insert(*c, scaled);
            }
            if let Some(f) = factor {
                for (c, v) in pivot_row.iter().filter(|(c, _)| **c != col) {
                    let e = next.entry(*c).or_insert_with(BigInt::zero);
                    *e -= &f * v;
                }
            }
            next.retain(|_, v| !v.is_zero());
            for v in next.values_mut() {
                debug_assert!((&*v % &prev).is_zero());
                *v = &*v / &prev;
            }
            *row = next;
        }
        prev = pivot.clone();
        rows[rank] = pivot_row;
        rank += 1;
        rows[rank..].sort_by_key(|r| r.keys().next().copied());
    }
    Elimination { rank, last_pivot: prev }
}

pub fn rank_of_rational_rows(rows: impl IntoIterator<Item = Vec<(usize, Q)>>) -> usize {
    bareiss(rows.into_iter().map(integer_row).collect()).rank
}

/// Dense reduced row-echelon form over the rationals, with pivot bookkeeping
/// so vectors in the row space can be expressed in terms of the rows.
#[derive(Clone, Debug)]
pub struct RowSpace {
    ncols: usize,
    /// Reduced rows, each tagged with the combination of input rows producing it.
    reduced: Vec<(Vec<Q>, Vec<Q>)>,
    pivots: Vec<usize>,
    inputs: usize,
}

impl RowSpace {
    pub fn new(rows: &[Vec<Q>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let inputs = rows.len();
        let mut work: Vec<(Vec<Q>, Vec<Q>)> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut tag = vec![Q::zero(); inputs];
                tag[i] = Q::one();
                (r.clone(), tag)
            })
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..work.len()).find(|&r| !work[r].0[col].is_zero()) else {
                continue;
            };
            work.swap(rank, p);
            let inv = work[rank].0[col].recip();
            scale(&mut work[rank], inv);
            let pivot = work[rank].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r != rank && !row.0[col].is_zero() {
                    let f = row.0[col];
                    axpy(row, &pivot, -f);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        work.truncate(rank);
        RowSpace { ncols, reduced: work, pivots, inputs }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coefficients `x` with `Σ x_i · input_i = v`, if `v` lies in the row space.
    /// Requires the input rows to be linearly independent for uniqueness.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(v.len(), self.ncols);
        let mut coeffs = vec![Q::zero(); self.inputs];
        let mut residual = v.to_vec();
        for ((row, tag), &col) in self.reduced.iter().zip(&self.pivots) {
            let f = residual[col];
            if f.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(row) {
                *r -= f * x;
            }
            for (c, t) in coeffs.iter_mut().zip(tag) {
                *c += f * t;
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coeffs)
    }
}

fn scale(row: &mut (Vec<Q>, Vec<Q>), s: Q) {
    row.0.iter_mut().chain(row.1.iter_mut()).for_each(|x| *x *= s);
}

fn axpy(row: &mut (Vec<Q>, Vec<Q>), pivot: &(Vec<Q>, Vec<Q>), f: Q) {
    for (x, p) in row.0.iter_mut().zip(&pivot.0) {
        *x += f * p;
    }
    for (x, p) in row.1.iter_mut().zip(&pivot.1) {
        *x += f * p;
    }
}

/// Positive-definiteness of a small symmetric rational matrix via leading minors.
pub fn leading_minors_positive(m: &[Vec<Q>]) -> bool {
    (1..=m.len()).all(|k| determinant(&m[..k].iter().map(|r| r[..k].to_vec()).collect::<Vec<_>>()).is_positive())
}

/// Determinant of a small dense rational matrix.
pub fn determinant(m: &[Vec<Q>]) -> Q {
    let k = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut det = Q::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for r in c + 1..k {
            let f = a[r][c] / a[c][c];
            let (top, bottom) = a.split_at_mut(r);
            for (x, v) in bottom[0][c..k].iter_mut().zip(&top[c][c..k]) {
                *x -= f * v;
            }
        }
    }
    det
}
