//! Exact linear algebra over the rationals.
//!
//! Everything here works on sparse rows keyed by column index. The matrices
//! that show up in practice (stacked adjoint matrices of a few elements of a
//! 248-dimensional algebra) have a handful of nonzeros per row, so an
//! incrementally maintained reduced row echelon form stays small.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// Sparse vector: column index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Converts an integral rational to `i64`, or `None`.
pub fn q_to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.to_integer()).ok()
}

/// `v += c * w`, dropping entries that cancel.
pub fn axpy(v: &mut SparseVec, c: &Q, w: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&k, x) in w {
        let entry = v.entry(k).or_insert_with(Q::zero);
        *entry += c * x;
        if entry.is_zero() {
            v.remove(&k);
        }
    }
}

/// Reduced row echelon form, built one row at a time.
///
/// Invariant: every stored row has coefficient one at its pivot and zero at
/// every other row's pivot.
#[derive(Clone, Debug, Default)]
pub struct Rref {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Rref {
    pub fn new(ncols: usize) -> Self {
        Rref {
            ncols,
            ..Default::default()
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &mut SparseVec) {
        let hits: Vec<(usize, Q)> = v
            .iter()
            .filter_map(|(k, x)| self.pivot_row.get(k).map(|&r| (r, x.clone())))
            .collect();
        for (r, x) in hits {
            axpy(v, &-x, &self.rows[r]);
        }
    }

    /// Adds a row. Returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        debug_assert!(v.keys().all(|&k| k < self.ncols));
        self.reduce(&mut v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for x in v.values_mut() {
            *x *= &inv;
        }
        for row in &mut self.rows {
            if let Some(x) = row.get(&pivot).cloned() {
                axpy(row, &-x, &v);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.pivots.push(pivot);
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_empty()
    }

    /// Basis of the solution space of `rows * x = 0`.
    ///
    /// Each basis vector has a one at its own free column and zero at every
    /// other free column, so the coordinates of a kernel element in this
    /// basis are read off at the free columns.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| !self.pivot_row.contains_key(c))
            .collect();
        let mut basis: BTreeMap<usize, SparseVec> = free
            .iter()
            .map(|&f| (f, SparseVec::from([(f, Q::one())])))
            .collect();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (&c, x) in row {
                if c != p {
                    if let Some(b) = basis.get_mut(&c) {
                        b.insert(p, -x.clone());
                    }
                }
            }
        }
        basis.into_values().collect()
    }
}

/// Kernel of the matrix with the given sparse rows.
pub fn nullspace<I>(rows: I, ncols: usize) -> Vec<SparseVec>
where
    I: IntoIterator<Item = SparseVec>,
{
    let mut r = Rref::new(ncols);
    for row in rows {
        r.insert(row);
    }
    r.nullspace()
}

/// Rank of a set of sparse vectors.
pub fn rank<'a, I>(vectors: I, ncols: usize) -> usize
where
    I: IntoIterator<Item = &'a SparseVec>,
{
    let mut r = Rref::new(ncols);
    for v in vectors {
        r.insert(v.clone());
    }
    r.rank()
}

/// One particular solution of `rows * x = rhs`, or `None` if inconsistent.
pub fn solve(rows: &[SparseVec], rhs: &[Q], ncols: usize) -> Option<SparseVec> {
    assert_eq!(rows.len(), rhs.len());
    let mut r = Rref::new(ncols + 1);
    for (row, b) in rows.iter().zip(rhs) {
        let mut aug = row.clone();
        if !b.is_zero() {
            aug.insert(ncols, b.clone());
        }
        r.insert(aug);
    }
    if r.pivots.contains(&ncols) {
        return None;
    }
    let mut x = SparseVec::new();
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        if let Some(b) = row.get(&ncols) {
            x.insert(p, b.clone());
        }
    }
    Some(x)
}

/// Inverse of a small dense square matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Largest absolute value of a numerator or denominator, for diagnostics.
pub fn height(v: &SparseVec) -> BigInt {
    v.values()
        .flat_map(|x| [x.numer().abs(), x.denom().abs()])
        .max()
        .unwrap_or_else(BigInt::zero)
}
