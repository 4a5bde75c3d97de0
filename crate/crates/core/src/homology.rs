//! Exact simplicial (co)homology over the rationals.
//!
//! Ranks are computed by sparse Gaussian elimination with arbitrary-precision
//! rational entries and Markowitz-style pivot selection, so all dimension
//! counts are exact. Torsion is not computed; every formula served here is a
//! dimension statement over a field of characteristic zero.

use std::collections::HashMap;

use num::rational::BigRational;
use num::traits::Zero;
use num::BigInt;

use crate::complex::SimplicialComplex;
use crate::vset::VertexSet;

/// Sparse matrix as rows of (column, coefficient) pairs.
pub struct SparseMatrix {
    pub n_cols: usize,
    pub rows: Vec<Vec<(usize, BigRational)>>,
}

impl SparseMatrix {
    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Rank over the rationals.
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        // column occupancy counts for pivot selection
        let mut col_count: Vec<usize> = vec![0; self.n_cols];
        for r in &self.rows {
            for (c, _) in r {
                col_count[*c] += 1;
            }
        }
        let mut active: Vec<usize> = (0..self.rows.len()).collect();
        loop {
            // pick pivot minimizing (row_len - 1) * (col_count - 1)
            let mut best: Option<(usize, usize, usize)> = None; // (score, row, col)
            for &ri in &active {
                let row = &self.rows[ri];
                if row.is_empty() {
                    continue;
                }
                for (c, _) in row {
                    let score = (row.len() - 1) * (col_count[*c].saturating_sub(1));
                    if best.map_or(true, |(s, _, _)| score < s) {
                        best = Some((score, ri, *c));
                    }
                }
                if let Some((0, _, _)) = best {
                    break;
                }
            }
            let (_, pr, pc) = match best {
                Some(b) => b,
                None => break,
            };
            rank += 1;
            let pivot_row = std::mem::take(&mut self.rows[pr]);
            for (c, _) in &pivot_row {
                col_count[*c] -= 1;
            }
            let pivot_val = pivot_row
                .iter()
                .find(|(c, _)| *c == pc)
                .map(|(_, v)| v.clone())
                .unwrap();
            active.retain(|&ri| ri != pr);
            for &ri in &active {
                let has = self.rows[ri].iter().find(|(c, _)| *c == pc).map(|(_, v)| v.clone());
                let factor = match has {
                    Some(v) => v / &pivot_val,
                    None => continue,
                };
                let mut merged: HashMap<usize, BigRational> = HashMap::new();
                for (c, v) in self.rows[ri].drain(..) {
                    col_count[c] -= 1;
                    merged.insert(c, v);
                }
                for (c, v) in &pivot_row {
                    let delta = v * &factor;
                    let entry = merged.entry(*c).or_insert_with(BigRational::zero);
                    *entry -= delta;
                }
                let mut new_row: Vec<(usize, BigRational)> = merged
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                new_row.sort_by_key(|(c, _)| *c);
                for (c, _) in &new_row {
                    col_count[*c] += 1;
                }
                self.rows[ri] = new_row;
            }
        }
        rank
    }
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Chain complex of a simplicial complex over the rationals.
///
/// `basis[k]` is the sorted list of faces of dimension `k - 1` (index 0 is
/// the empty-face level, present only in the reduced/augmented complex).
pub struct ChainComplex {
    pub basis: Vec<Vec<VertexSet>>,
    /// `boundary[k]`: matrix of ∂ from level k to level k-1; rows indexed by
    /// level-k faces, columns by level-(k-1) faces.
    pub boundary: Vec<SparseMatrix>,
}

fn boundary_matrix(from: &[VertexSet], to: &[VertexSet]) -> SparseMatrix {
    let index: HashMap<VertexSet, usize> = to.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let rows = from
        .iter()
        .map(|f| {
            let mut row = Vec::with_capacity(f.len());
            for (pos, v) in f.iter().enumerate() {
                let g = f.remove(v);
                if let Some(&ci) = index.get(&g) {
                    let sign = if pos % 2 == 0 { rational(1) } else { rational(-1) };
                    row.push((ci, sign));
                }
            }
            row.sort_by_key(|(c, _)| *c);
            row
        })
        .collect();
    SparseMatrix {
        n_cols: to.len(),
        rows,
    }
}

impl ChainComplex {
    pub fn new(k: &SimplicialComplex, reduced: bool) -> ChainComplex {
        let max_dim = k.dim().unwrap_or(-1);
        let mut basis: Vec<Vec<VertexSet>> = Vec::new();
        let start = if reduced { -1 } else { 0 };
        for d in start..=max_dim {
            basis.push(k.faces_of_dim(d).to_vec());
        }
        if basis.is_empty() {
            basis.push(Vec::new());
        }
        let mut boundary = Vec::new();
        for lvl in 1..basis.len() {
            boundary.push(boundary_matrix(&basis[lvl], &basis[lvl - 1]));
        }
        ChainComplex { basis, boundary }
    }

    /// Verify ∂∘∂ = 0 by composing consecutive boundary maps.
    pub fn boundary_squares_to_zero(&self) -> bool {
        for lvl in 1..self.boundary.len() {
            let upper = &self.boundary[lvl];
            let lower = &self.boundary[lvl - 1];
            for row in &upper.rows {
                let mut acc: HashMap<usize, BigRational> = HashMap::new();
                for (mid, v) in row {
                    for (c, w) in &lower.rows[*mid] {
                        *acc.entry(*c).or_insert_with(BigRational::zero) += v * w;
                    }
                }
                if acc.values().any(|v| !v.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Homology dimensions per level (same indexing as `basis`).
    pub fn homology_dims(self) -> Vec<usize> {
        let sizes: Vec<usize> = self.basis.iter().map(|b| b.len()).collect();
        let ranks: Vec<usize> = self.boundary.into_iter().map(|m| m.rank()).collect();
        (0..sizes.len())
            .map(|lvl| {
                let rank_in = if lvl < ranks.len() { ranks[lvl] } else { 0 };
                let rank_out = if lvl == 0 { 0 } else { ranks[lvl - 1] };
                sizes[lvl] - rank_in - rank_out
            })
            .collect()
    }
}

/// Reduced homology dimensions of `K`; index `i` of the result is
/// dimension `i - 1` (so index 0 is the degree -1 slot). The void complex
/// gets H̃_{-1} = 1; the empty complex has no homology at all.
pub fn reduced_homology(k: &SimplicialComplex) -> Vec<usize> {
    if k.is_empty_complex() {
        return vec![0];
    }
    ChainComplex::new(k, true).homology_dims()
}

pub fn reduced_homology_dim(k: &SimplicialComplex, degree: i32) -> usize {
    let dims = reduced_homology(k);
    let idx = degree + 1;
    if idx < 0 || idx as usize >= dims.len() {
        0
    } else {
        dims[idx as usize]
    }
}

/// Non-reduced Betti numbers, index = dimension.
pub fn betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    if k.is_empty_complex() || k.is_void() {
        return vec![0];
    }
    ChainComplex::new(k, false).homology_dims()
}

pub fn betti_number(k: &SimplicialComplex, degree: i32) -> usize {
    if degree < 0 {
        return 0;
    }
    let b = betti_numbers(k);
    b.get(degree as usize).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn circle_homology() {
        let e5 = named::cycle(5).unwrap();
        assert_eq!(reduced_homology(&e5), vec![0, 0, 1]);
    }

    #[test]
    fn torus_betti() {
        let t = named::torus(7).unwrap();
        assert_eq!(reduced_homology(&t), vec![0, 0, 2, 1]);
        assert_eq!(betti_numbers(&t), vec![1, 2, 1]);
    }

    #[test]
    fn void_complex_has_degree_minus_one_class() {
        let v = SimplicialComplex::void(0);
        assert_eq!(reduced_homology(&v), vec![1]);
        assert_eq!(reduced_homology_dim(&v, -1), 1);
    }

    #[test]
    fn empty_complex_has_no_homology() {
        let e = SimplicialComplex::empty(0);
        assert_eq!(reduced_homology_dim(&e, -1), 0);
    }

    #[test]
    fn spheres() {
        for n in 1..=3usize {
            let s = named::boundary_simplex(n + 1);
            let mut expect = vec![0; n + 2];
            expect[n + 1] = 1;
            assert_eq!(reduced_homology(&s), expect, "sphere dim {n}");
        }
    }

    #[test]
    fn boundary_squares() {
        let cc = ChainComplex::new(&named::icosahedron(), true);
        assert!(cc.boundary_squares_to_zero());
    }

    #[test]
    fn euler_matches_betti_alternating_sum() {
        for name in ["cycle:6", "torus:8", "cyclic3:7", "icosahedron"] {
            let k = named::named_complex(name).unwrap();
            let chi: i64 = betti_numbers(&k)
                .iter()
                .enumerate()
                .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
                .sum();
            assert_eq!(chi, k.euler_characteristic(), "{name}");
        }
    }

    #[test]
    fn rank_of_small_matrix() {
        let m = SparseMatrix {
            n_cols: 3,
            rows: vec![
                vec![(0, rational(1)), (1, rational(2))],
                vec![(0, rational(2)), (1, rational(4))],
                vec![(2, rational(5))],
            ],
        };
        assert_eq!(m.rank(), 2);
    }
}
