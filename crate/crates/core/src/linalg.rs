//! Exact incremental Gaussian elimination over [`Scalar`] with sparse rows.

use std::collections::BTreeMap;

use crate::coeff::Scalar;

/// Sorted `(column, value)` pairs without zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, n: usize, conductor: u32) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(conductor); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

fn sub_scaled(row: &mut BTreeMap<usize, Scalar>, factor: &Scalar, pivot: &SparseVec) {
    for (j, v) in pivot {
        let t = factor * v;
        match row.get_mut(j) {
            Some(x) => {
                *x = &*x - &t;
                if x.is_zero() {
                    row.remove(j);
                }
            }
            None => {
                row.insert(*j, -t);
            }
        }
    }
}

/// Row space of a growing set of vectors, kept in semi-echelon form: every
/// stored row has leading coefficient 1 at a column no other row leads at,
/// and is zero at the pivot columns of earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    conductor: u32,
    rows: Vec<SparseVec>,
    pivot_of: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize, conductor: u32) -> Self {
        Echelon {
            ncols,
            conductor,
            rows: Vec::new(),
            pivot_of: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces a vector against every pivot row; the result vanishes at all
    /// pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut row: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = row
                .range(cursor..)
                .find(|(c, _)| self.pivot_of.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            let Some((col, factor)) = next else { break };
            sub_scaled(&mut row, &factor, &self.rows[self.pivot_of[&col]]);
            cursor = col + 1;
        }
        row.into_iter().collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the row space; true when the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((lead, c)) = r.first().cloned() else {
            return false;
        };
        let inv = c.inv().expect("nonzero pivot");
        let r: SparseVec = r.into_iter().map(|(j, x)| (j, &x * &inv)).collect();
        self.pivot_of.insert(lead, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        self.insert(&sparse_from_dense(v))
    }

    /// Reduced row echelon form, rows sorted by pivot column.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut rows: BTreeMap<usize, BTreeMap<usize, Scalar>> = self
            .pivot_of
            .iter()
            .map(|(&c, &i)| (c, self.rows[i].iter().cloned().collect()))
            .collect();
        let pivots: Vec<usize> = rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let prow: SparseVec = rows[&p].iter().map(|(a, b)| (*a, b.clone())).collect();
            for &q in pivots.iter().filter(|&&q| q < p) {
                let row = rows.get_mut(&q).unwrap();
                if let Some(f) = row.get(&p).cloned() {
                    sub_scaled(row, &f, &prow);
                }
            }
        }
        rows.into_values().map(|r| r.into_iter().collect()).collect()
    }

    /// Basis of the right kernel {x : r·x = 0 for every row r}, one vector per
    /// non-pivot column (that column set to 1), in increasing column order.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let rref = self.rref();
        let pivots: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
        let one = Scalar::one(self.conductor);
        (0..self.ncols)
            .filter(|c| !self.pivot_of.contains_key(c))
            .map(|free| {
                let mut v: SparseVec = Vec::new();
                for (row, &p) in rref.iter().zip(&pivots) {
                    if let Ok(k) = row.binary_search_by_key(&free, |(j, _)| *j) {
                        v.push((p, -&row[k].1));
                    }
                }
                v.push((free, one.clone()));
                v.sort_by_key(|(j, _)| *j);
                v
            })
            .collect()
    }
}
