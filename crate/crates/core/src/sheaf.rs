//! Graded local cohomology of the Stanley-Reisner ring and cohomology of
//! twists of the structure sheaf on the associated projective scheme.

use crate::complex::SimplicialComplex;
use crate::error::{domain, Error, Result};
use crate::homology::{betti_numbers, reduced_homology_dim};
use crate::vset::VertexSet;

/// dim H^i_m(A_K)_c for the irrelevant maximal ideal m and a multidegree
/// c ∈ ℤ^n. Nonzero only when c ≤ 0 and the support of c is a face b, in
/// which case it equals dim H̃^{i−|b|−1}(link(b)).
pub fn local_cohomology_dim(k: &SimplicialComplex, i: i32, c: &[i64]) -> Result<usize> {
    if c.len() != k.n_vertices() {
        return domain(format!(
            "multidegree has {} entries, complex has {} vertices",
            c.len(),
            k.n_vertices()
        ));
    }
    if c.iter().any(|&e| e > 0) {
        return Ok(0);
    }
    let b: VertexSet = c
        .iter()
        .enumerate()
        .filter(|(_, &e)| e < 0)
        .map(|(v, _)| v)
        .collect();
    if !k.contains(b) {
        return Ok(0);
    }
    let link = k.link(b)?;
    Ok(reduced_homology_dim(&link, i - b.len() as i32 - 1))
}

/// Dimensions h^p(P(K), O(m)) for p = 0..dim K, m ≥ 0.
///
/// For m = 0 these are the rational Betti numbers of K; for m ≥ 1 only h⁰
/// survives and equals the dimension of the degree-m part of the
/// Stanley-Reisner ring, counted face by face.
pub fn twisted_structure_sheaf_cohomology(k: &SimplicialComplex, m: i64) -> Result<Vec<usize>> {
    if m < 0 {
        return Err(Error::Unsupported("negative twists".into()));
    }
    if m == 0 {
        return Ok(betti_numbers(k));
    }
    let dim = k.dim().unwrap_or(-1).max(0) as usize;
    let mut out = vec![0usize; dim + 1];
    let mut h0: u128 = 0;
    for f in k.nonempty_faces() {
        h0 += binomial((m - 1) as u128, (f.len() - 1) as u128);
    }
    out[0] = usize::try_from(h0).map_err(|_| Error::Resource("h0 overflows usize".into()))?;
    Ok(out)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn positive_entry_vanishes() {
        let k = named::cycle(4).unwrap();
        assert_eq!(local_cohomology_dim(&k, 2, &[1, 0, -1, 0]).unwrap(), 0);
    }

    #[test]
    fn two_points_vertex_degree() {
        let k = named::boundary_simplex(1);
        assert_eq!(local_cohomology_dim(&k, 1, &[-1, 0]).unwrap(), 1);
    }

    #[test]
    fn square_degree_zero() {
        let k = named::cycle(4).unwrap();
        assert_eq!(local_cohomology_dim(&k, 1, &[0, 0, 0, 0]).unwrap(), 0);
        // top local cohomology of a circle in degree 0: H̃^1(E4) = 1
        assert_eq!(local_cohomology_dim(&k, 2, &[0, 0, 0, 0]).unwrap(), 1);
    }

    #[test]
    fn nonface_support_vanishes() {
        let k = named::cycle(4).unwrap();
        assert_eq!(local_cohomology_dim(&k, 2, &[-1, 0, -1, 0]).unwrap(), 0);
    }

    #[test]
    fn sheaf_twists() {
        let e4 = named::cycle(4).unwrap();
        assert_eq!(twisted_structure_sheaf_cohomology(&e4, 0).unwrap(), vec![1, 1]);
        assert_eq!(twisted_structure_sheaf_cohomology(&e4, 1).unwrap(), vec![4, 0]);
        let d2 = named::boundary_simplex(2);
        assert_eq!(twisted_structure_sheaf_cohomology(&d2, 2).unwrap(), vec![6, 0]);
        assert!(twisted_structure_sheaf_cohomology(&e4, -1).is_err());
    }
}
