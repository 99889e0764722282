//! Basis tuples for substitution scans.
//!
//! A multilinear polynomial vanishes (or is central) on all of A^m exactly when
//! it does so on all basis tuples. Monomial automorphisms (generator
//! permutations of E, conjugation by permutation matrices) map basis tuples to
//! signed basis tuples and preserve both the zero set and the center, so one
//! tuple per orbit suffices. Tuples on which every product of the entries
//! vanishes are dropped as well (overlapping blades).

use super::{Algebra, Kind};
use crate::grassmann::Blade;

/// An indexable list of basis tuples of a fixed arity.
#[derive(Clone, Debug)]
pub enum TupleSpace {
    /// All dim^arity tuples in lexicographic order.
    Full { dim: usize, arity: usize, len: usize },
    /// An explicit list, stored flat.
    Listed { arity: usize, flat: Vec<usize> },
}

impl TupleSpace {
    /// `None` when dim^arity overflows.
    pub fn full(dim: usize, arity: usize) -> Option<TupleSpace> {
        let len = (0..arity).try_fold(1usize, |acc, _| acc.checked_mul(dim))?;
        Some(TupleSpace::Full { dim, arity, len })
    }

    pub fn listed(arity: usize, tuples: Vec<Vec<usize>>) -> TupleSpace {
        TupleSpace::Listed {
            arity,
            flat: tuples.into_iter().flatten().collect(),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            TupleSpace::Full { arity, .. } | TupleSpace::Listed { arity, .. } => *arity,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            TupleSpace::Full { len, .. } => *len,
            TupleSpace::Listed { arity, flat } => {
                if *arity == 0 {
                    1
                } else {
                    flat.len() / arity
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes tuple number `idx` into `out` (length = arity).
    pub fn fill(&self, idx: usize, out: &mut [usize]) {
        match self {
            TupleSpace::Full { dim, arity, .. } => {
                let mut rest = idx;
                for slot in (0..*arity).rev() {
                    out[slot] = rest % dim;
                    rest /= dim;
                }
            }
            TupleSpace::Listed { arity, flat } => {
                out.copy_from_slice(&flat[idx * arity..(idx + 1) * arity]);
            }
        }
    }

    pub fn get(&self, idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.arity()];
        self.fill(idx, &mut out);
        out
    }
}

/// Size vectors (s_1..s_m), s_i ≡ parity_i (mod 2) when given, Σ s_i ≤ n,
/// realized as consecutive blades.
fn disjoint_blades(m: usize, n: u32, parity: Option<&[bool]>) -> Vec<Vec<Blade>> {
    fn rec(
        slot: usize,
        m: usize,
        left: u32,
        offset: u32,
        parity: Option<&[bool]>,
        cur: &mut Vec<Blade>,
        out: &mut Vec<Vec<Blade>>,
    ) {
        if slot == m {
            out.push(cur.clone());
            return;
        }
        for s in 0..=left {
            if parity.is_some_and(|p| (s % 2 == 1) != p[slot]) {
                continue;
            }
            let mask = if s == 0 { 0 } else { ((1u64 << s) - 1) << offset };
            cur.push(Blade(mask));
            rec(slot + 1, m, left - s, offset + s, parity, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, n, 0, parity, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Label sequences of length `len` over blocks of the given sizes where the
/// labels of each block appear first in increasing order. Labels are global:
/// block b owns offset_b..offset_b + size_b.
fn block_patterns(len: usize, sizes: &[u32]) -> Vec<Vec<u32>> {
    fn rec(
        len: usize,
        sizes: &[u32],
        offsets: &[u32],
        used: &mut Vec<u32>,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for b in 0..sizes.len() {
            let fresh = used[b] < sizes[b];
            for t in 0..used[b] + u32::from(fresh) {
                let new = t == used[b];
                if new {
                    used[b] += 1;
                }
                cur.push(offsets[b] + t);
                rec(len, sizes, offsets, used, cur, out);
                cur.pop();
                if new {
                    used[b] -= 1;
                }
            }
        }
    }
    let offsets: Vec<u32> = sizes
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let mut out = Vec::new();
    rec(
        len,
        sizes,
        &offsets,
        &mut vec![0; sizes.len()],
        &mut Vec::with_capacity(len),
        &mut out,
    );
    out
}

impl Algebra {
    /// One basis tuple per automorphism orbit, minus tuples on which every
    /// word in the entries vanishes.
    pub fn orbit_tuples(&self, arity: usize) -> TupleSpace {
        TupleSpace::listed(arity, self.orbit_list(arity))
    }

    fn orbit_list(&self, m: usize) -> Vec<Vec<usize>> {
        match &self.kind {
            Kind::Grassmann(n) => disjoint_blades(m, *n, None)
                .into_iter()
                .map(|t| t.into_iter().map(|b| b.0 as usize).collect())
                .collect(),
            Kind::Matrix(k) => {
                let k = *k as usize;
                block_patterns(2 * m, &[k as u32])
                    .into_iter()
                    .map(|p| {
                        p.chunks(2)
                            .map(|rc| rc[0] as usize * k + rc[1] as usize)
                            .collect()
                    })
                    .collect()
            }
            Kind::Mpq(b) => {
                let mut out = Vec::new();
                for pat in block_patterns(2 * m, &[b.p, b.q]) {
                    let odd: Vec<bool> = pat
                        .chunks(2)
                        .map(|rc| b.block(rc[0]) != b.block(rc[1]))
                        .collect();
                    for blades in disjoint_blades(m, b.n, Some(&odd)) {
                        out.push(
                            pat.chunks(2)
                                .zip(blades)
                                .map(|(rc, bl)| b.index[&(rc[0], rc[1], bl)])
                                .collect(),
                        );
                    }
                }
                out
            }
            Kind::Tensor(a, b) => {
                let left = a.orbit_list(m);
                let right = b.orbit_list(m);
                let db = b.dim;
                let mut out = Vec::with_capacity(left.len() * right.len());
                for x in &left {
                    for y in &right {
                        out.push(x.iter().zip(y).map(|(i, j)| i * db + j).collect());
                    }
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;

    #[test]
    fn full_space_order() {
        let t = TupleSpace::full(3, 2).unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(t.get(0), vec![0, 0]);
        assert_eq!(t.get(5), vec![1, 2]);
        assert!(TupleSpace::full(4096, 6).is_none());
    }

    #[test]
    fn orbit_counts() {
        // size vectors with sum <= n: C(n + m, m)
        assert_eq!(build_algebra("E(6)").unwrap().orbit_tuples(3).len(), 84);
        assert_eq!(build_algebra("E(10)").unwrap().orbit_tuples(5).len(), 3003);
        // restricted growth strings of length 2m with at most 2 labels
        assert_eq!(build_algebra("Mat(2)").unwrap().orbit_tuples(5).len(), 512);
        assert_eq!(build_algebra("Mat(3)").unwrap().orbit_tuples(1).len(), 2);
        assert_eq!(build_algebra("T(E(6),E(6))").unwrap().orbit_tuples(3).len(), 84 * 84);
        assert_eq!(build_algebra("E(3)").unwrap().orbit_tuples(0).len(), 1);
    }

    #[test]
    fn patterns_are_canonical() {
        let p = block_patterns(3, &[2]);
        assert_eq!(
            p,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1]
            ]
        );
        let two = block_patterns(2, &[1, 1]);
        assert_eq!(two, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
