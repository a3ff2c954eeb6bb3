//! Permutations avoiding 2|31-bar, Fishburn matrices, the Lehmer code, and the
//! distribution checks that run over inversion sequences.

use crate::seq::{asc_of, for_each_inversion_sequence, max_of, rep_of, rmin_of, zero_of};
use serde::Serialize;
use std::collections::HashMap;
use std::hash::Hash;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FishburnError {
    #[error("not a permutation of 1..n: {0:?}")]
    NotPermutation(Vec<u32>),
    #[error("not a Fishburn matrix: {0}")]
    NotFishburn(String),
}

/// A permutation of [n] in one-line notation, 1-based values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self, FishburnError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(FishburnError::NotPermutation(entries));
            }
            seen[v] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn complement(&self) -> Permutation {
        let n = self.0.len() as u32;
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }
}

/// Calls `f` on every permutation of [n] in lexicographic order.
pub fn for_each_permutation<F: FnMut(&[u32])>(n: usize, mut f: F) {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    loop {
        f(&p);
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// True when no i < j-1 has p_i < p_{i+1} and p_j = p_i - 1.
pub fn avoids_pattern_slice(p: &[u32]) -> bool {
    for i in 0..p.len().saturating_sub(1) {
        if p[i] < p[i + 1] && p[i + 2..].contains(&(p[i].wrapping_sub(1))) {
            return false;
        }
    }
    true
}

pub fn avoids_pattern(p: &Permutation) -> bool {
    avoids_pattern_slice(&p.0)
}

pub fn pattern_avoiders(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| {
        if avoids_pattern_slice(p) {
            out.push(Permutation(p.to_vec()));
        }
    });
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PermStats {
    pub des: u32,
    pub iasc: u32,
    pub lmin: u32,
    pub lmax: u32,
    pub rmin: u32,
    pub rmax: u32,
}

pub fn perm_stats_slice(p: &[u32]) -> PermStats {
    let n = p.len();
    let des = p.windows(2).filter(|w| w[0] > w[1]).count() as u32;
    let mut pos = vec![0usize; n + 2];
    for (i, &v) in p.iter().enumerate() {
        pos[v as usize] = i;
    }
    let iasc = (1..n).filter(|&v| pos[v + 1] > pos[v]).count() as u32;
    let records = |it: &mut dyn Iterator<Item = u32>, less: bool| {
        let mut best: Option<u32> = None;
        let mut c = 0;
        for v in it {
            if best.is_none_or(|b| if less { v < b } else { v > b }) {
                best = Some(v);
                c += 1;
            }
        }
        c
    };
    PermStats {
        des,
        iasc,
        lmin: records(&mut p.iter().copied(), true),
        lmax: records(&mut p.iter().copied(), false),
        rmin: records(&mut p.iter().rev().copied(), true),
        rmax: records(&mut p.iter().rev().copied(), false),
    }
}

pub fn perm_stats(p: &Permutation) -> PermStats {
    perm_stats_slice(&p.0)
}

/// s_i = number of j < i with p_j > p_i.
pub fn lehmer_code(p: &Permutation) -> Vec<u32> {
    let q = &p.0;
    (0..q.len())
        .map(|i| q[..i].iter().filter(|&&v| v > q[i]).count() as u32)
        .collect()
}

/// Upper-triangular square matrix of non-negative integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FishburnMatrix {
    dim: usize,
    cells: Vec<u32>,
}

impl FishburnMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, FishburnError> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(FishburnError::NotFishburn("matrix must be square and non-empty".into()));
        }
        let cells: Vec<u32> = rows.into_iter().flatten().collect();
        let m = FishburnMatrix { dim, cells };
        for i in 0..dim {
            for j in 0..i {
                if m.get(i, j) != 0 {
                    return Err(FishburnError::NotFishburn(format!("entry ({}, {}) below the diagonal", i + 1, j + 1)));
                }
            }
            if (0..dim).all(|j| m.get(i, j) == 0) {
                return Err(FishburnError::NotFishburn(format!("row {} is zero", i + 1)));
            }
            if (0..dim).all(|j| m.get(j, i) == 0) {
                return Err(FishburnError::NotFishburn(format!("column {} is zero", i + 1)));
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.cells.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn total(&self) -> u32 {
        self.cells.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MatrixStats {
    pub rowsum1: u32,
    pub ne: u32,
    pub tr: u32,
}

pub fn matrix_stats(m: &FishburnMatrix) -> MatrixStats {
    let d = m.dim;
    let rowsum1 = (0..d).map(|j| m.get(0, j)).sum();
    let tr = (0..d).filter(|&i| m.get(i, i) != 0).count() as u32;
    let mut ne = 0;
    for i in 0..d {
        for j in 0..d {
            if m.get(i, j) == 0 {
                continue;
            }
            let clear = (0..=i).all(|s| (j..d).all(|t| (s, t) == (i, j) || m.get(s, t) == 0));
            if clear {
                ne += 1;
            }
        }
    }
    MatrixStats { rowsum1, ne, tr }
}

/// All upper-triangular Fishburn matrices with entry sum n, ordered by dimension
/// and then row-major entries.
pub fn enumerate_fishburn_matrices(n: usize) -> Vec<FishburnMatrix> {
    let mut out = Vec::new();
    for dim in 1..=n {
        let mut cells = vec![0u32; dim * dim];
        let mut col_hit = vec![false; dim];
        fill(dim, 0, 0, n as u32, &mut cells, &mut col_hit, false, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    dim: usize,
    i: usize,
    j: usize,
    budget: u32,
    cells: &mut Vec<u32>,
    col_hit: &mut Vec<bool>,
    row_hit: bool,
    out: &mut Vec<FishburnMatrix>,
) {
    if i == dim {
        if budget == 0 {
            out.push(FishburnMatrix { dim, cells: cells.clone() });
        }
        return;
    }
    // every later row needs at least one unit, and so does this row if still empty
    let need = (dim - i - 1) as u32 + u32::from(!row_hit);
    if budget < need {
        return;
    }
    let last_in_row = j + 1 == dim;
    // (j, j) is the last cell of column j in row-major order
    let closes_col = i == j && !col_hit[j];
    let lo = u32::from((last_in_row && !row_hit) || closes_col);
    let spare = budget - need + u32::from(!row_hit);
    for v in (lo..=spare).rev() {
        cells[i * dim + j] = v;
        let was = col_hit[j];
        if v > 0 {
            col_hit[j] = true;
        }
        let rh = row_hit || v > 0;
        if last_in_row {
            fill(dim, i + 1, i + 1, budget - v, cells, col_hit, false, out);
        } else {
            fill(dim, i, j + 1, budget - v, cells, col_hit, rh, out);
        }
        col_hit[j] = was;
    }
    cells[i * dim + j] = 0;
}

/// Multiset of a key over a collection.
pub fn histogram<K: Eq + Hash, I: IntoIterator<Item = K>>(items: I) -> HashMap<K, u64> {
    let mut h = HashMap::new();
    for k in items {
        *h.entry(k).or_insert(0) += 1;
    }
    h
}

/// True when the two projections of every element give equal multisets.
pub fn same_distribution<T, K, A, B>(items: &[T], a: A, b: B) -> bool
where
    K: Eq + Hash,
    A: Fn(&T) -> K,
    B: Fn(&T) -> K,
{
    histogram(items.iter().map(a)) == histogram(items.iter().map(b))
}

fn inversion_stat_rows(n: usize) -> Vec<[u32; 5]> {
    let mut rows = Vec::new();
    for_each_inversion_sequence(n, |s| {
        rows.push([asc_of(s), rep_of(s), zero_of(s), max_of(s), rmin_of(s)]);
    });
    rows
}

/// (asc,rep,zero,max,rmin) against (asc,rep,zero,rmin,max) over I_n.
pub fn check_conjecture_quintuple(n: usize) -> bool {
    let rows = inversion_stat_rows(n);
    same_distribution(&rows, |r| *r, |r| [r[0], r[1], r[2], r[4], r[3]])
}

/// (asc,rep,zero,max) against (rep,asc,rmin,zero) over I_n.
pub fn check_prop_syminv(n: usize) -> bool {
    let rows = inversion_stat_rows(n);
    same_distribution(&rows, |r| [r[0], r[1], r[2], r[3]], |r| [r[1], r[0], r[4], r[2]])
}

/// (des,iasc) over S_n against (asc,rep) over I_n.
pub fn check_foata(n: usize) -> bool {
    let mut perms = Vec::new();
    for_each_permutation(n, |p| {
        let st = perm_stats_slice(p);
        perms.push((st.des, st.iasc));
    });
    let inv: Vec<(u32, u32)> = inversion_stat_rows(n).iter().map(|r| (r[0], r[1])).collect();
    histogram(perms) == histogram(inv)
}

/// The three permutation displays over S_n(pattern), at multiset level.
pub fn check_avoider_symmetries(n: usize) -> [bool; 3] {
    let st: Vec<PermStats> = pattern_avoiders(n).iter().map(perm_stats).collect();
    [
        same_distribution(
            &st,
            |s| [s.des, s.iasc, s.lmax, s.lmin, s.rmax],
            |s| [s.des, s.iasc, s.lmax, s.rmax, s.lmin],
        ),
        same_distribution(&st, |s| [s.des, s.iasc, s.lmax, s.lmin], |s| [s.iasc, s.des, s.lmin, s.lmax]),
        same_distribution(&st, |s| [s.des, s.iasc, s.lmax, s.rmax], |s| [s.iasc, s.des, s.lmin, s.lmax]),
    ]
}

/// Symmetry of (ne,tr) with rowsum1 fixed, and of the pairs (rowsum1,ne), (rowsum1,tr).
pub fn check_matrix_symmetries(n: usize) -> [bool; 3] {
    let st: Vec<MatrixStats> = enumerate_fishburn_matrices(n).iter().map(matrix_stats).collect();
    [
        same_distribution(&st, |s| (s.rowsum1, s.ne, s.tr), |s| (s.rowsum1, s.tr, s.ne)),
        same_distribution(&st, |s| (s.rowsum1, s.ne), |s| (s.ne, s.rowsum1)),
        same_distribution(&st, |s| (s.rowsum1, s.tr), |s| (s.tr, s.rowsum1)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let id = Permutation::identity(3);
        assert!(avoids_pattern(&id));
        let st = perm_stats(&id);
        assert_eq!((st.des, st.iasc, st.lmin, st.lmax, st.rmax, st.rmin), (0, 2, 1, 3, 1, 3));
        assert_eq!(lehmer_code(&Permutation::new(vec![2, 1]).unwrap()), vec![0, 1]);
        let one = enumerate_fishburn_matrices(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rows(), vec![vec![1]]);
    }
}
