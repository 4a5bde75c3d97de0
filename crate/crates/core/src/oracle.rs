//! Brute-force cotangent cohomology straight from the monomial-ideal
//! presentation, by exact linear algebra in a single multidegree.
//!
//! Homomorphisms out of the ideal are pinned down on the minimal
//! generators; relations come from the pairwise lcm syzygies (which
//! generate the full relation module of a monomial ideal, with second
//! syzygies generated by triples) and the Koszul relations are the scaled
//! antisymmetric pairs. Everything reduces to ranks of small sparse
//! rational matrices, so the results are independent of the topological
//! formulas and serve as their cross-check.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::homology::{rational, SparseMatrix};
use crate::vset::VertexSet;

pub const MAX_B_LEN: usize = 4;
pub const MAX_A_TOTAL: u32 = 4;

#[derive(Debug, Clone, Serialize)]
pub struct MonomialIdealPresentation {
    /// Minimal non-faces, sorted; the squarefree generators of the ideal.
    pub generators: Vec<VertexSet>,
    pub n_vertices: usize,
}

pub fn minimal_nonfaces(k: &SimplicialComplex) -> MonomialIdealPresentation {
    MonomialIdealPresentation {
        generators: k.minimal_nonfaces(),
        n_vertices: k.n_vertices(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DerivationReport {
    /// True iff every non-maximal face is properly contained in at least
    /// two faces, i.e. the derivation module is generated by the Euler
    /// derivations x_v ∂/∂x_v.
    pub euler_generated: bool,
    /// Witnesses: non-maximal faces with fewer than two proper superfaces.
    pub witnesses: Vec<VertexSet>,
    /// Per support vertex v, minimal generators of the ideal a_v of
    /// monomials x_f with closed_star(f) ⊆ closed_star(v).
    pub coefficient_ideals: Vec<(usize, Vec<VertexSet>)>,
}

pub fn derivation_module_check(k: &SimplicialComplex) -> DerivationReport {
    let faces = k.all_faces();
    let mut witnesses = Vec::new();
    for &f in &faces {
        let supers = faces
            .iter()
            .filter(|g| f != **g && f.is_subset_of(**g))
            .count();
        // facets have no proper superfaces and are exempt
        if supers != 0 && supers < 2 {
            witnesses.push(f);
        }
        if supers == 0 && !k.facets().contains(&f) {
            witnesses.push(f);
        }
    }
    let star_facets = |f: VertexSet| -> Vec<VertexSet> {
        k.facets()
            .iter()
            .copied()
            .filter(|m| f.is_subset_of(*m))
            .collect()
    };
    let mut coefficient_ideals = Vec::new();
    for v in k.support().iter() {
        let qualifying: Vec<VertexSet> = k
            .nonempty_faces()
            .into_iter()
            .filter(|&f| star_facets(f).iter().all(|m| m.contains(v)))
            .collect();
        let minimal: Vec<VertexSet> = qualifying
            .iter()
            .copied()
            .filter(|f| !qualifying.iter().any(|g| *g != *f && g.is_subset_of(*f)))
            .collect();
        coefficient_ideals.push((v, minimal));
    }
    DerivationReport {
        euler_generated: witnesses.is_empty(),
        witnesses,
        coefficient_ideals,
    }
}

fn check_caps(c: &Multidegree) -> Result<()> {
    if c.b.len() > MAX_B_LEN || c.a_total() > MAX_A_TOTAL {
        return Err(Error::Resource(format!(
            "degree out of oracle caps (|b| ≤ {MAX_B_LEN}, Σa ≤ {MAX_A_TOTAL}): |b| = {}, Σa = {}",
            c.b.len(),
            c.a_total()
        )));
    }
    Ok(())
}

/// Is x^(m + a - b) nonzero in the Stanley-Reisner ring, for a squarefree
/// multiset m given as (set, doubled subset)? Entries: m_v + a_v - b_v with
/// m_v = 1 on `m`, +1 extra on `twice`.
fn monomial_survives(
    k: &SimplicialComplex,
    m: VertexSet,
    twice: VertexSet,
    a: VertexSet,
    b: VertexSet,
) -> bool {
    // nonnegativity: b must be covered by m (a is disjoint from b)
    if !b.is_subset_of(m) {
        return false;
    }
    // support: v with positive exponent
    let support = m.difference(b.difference(twice.union(a))).union(a);
    // v in b ∩ twice has exponent 2 - 1 = 1, kept; v in b \ twice: 0
    k.contains(support)
}

/// Degree-c homomorphism space I → A: variables are the generators p with
/// x^(p+c) nonzero; constraint rows encode the pairwise syzygies.
struct HomSpace {
    /// index into `generators` for each variable column
    valid: Vec<usize>,
    rows: Vec<Vec<(usize, i64)>>,
}

fn hom_space(k: &SimplicialComplex, gens: &[VertexSet], c: &Multidegree) -> HomSpace {
    let a = c.a_support();
    let b = c.b;
    let mut col_of: Vec<Option<usize>> = vec![None; gens.len()];
    let mut valid = Vec::new();
    for (i, &p) in gens.iter().enumerate() {
        if monomial_survives(k, p, VertexSet::EMPTY, a, b) {
            col_of[i] = Some(valid.len());
            valid.push(i);
        }
    }
    let mut rows = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let lcm = gens[i].union(gens[j]);
            if !monomial_survives(k, lcm, VertexSet::EMPTY, a, b) {
                continue;
            }
            let mut row: Vec<(usize, i64)> = Vec::new();
            if let Some(ci) = col_of[i] {
                row.push((ci, 1));
            }
            if let Some(cj) = col_of[j] {
                row.push((cj, -1));
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    HomSpace { valid, rows }
}

fn rank_of(n_cols: usize, rows: &[Vec<(usize, i64)>]) -> usize {
    SparseMatrix {
        n_cols,
        rows: rows
            .iter()
            .map(|r| r.iter().map(|&(c, v)| (c, rational(v))).collect())
            .collect(),
    }
    .rank()
}

/// dim T¹ in degree c, directly from the presentation: Hom(I, A)_c modulo
/// the restricted derivations.
pub fn t1_oracle_dim(k: &SimplicialComplex, c: &Multidegree) -> Result<usize> {
    check_caps(c)?;
    if !k.contains(c.a_support()) {
        return Ok(0);
    }
    let gens = k.minimal_nonfaces();
    let hs = hom_space(k, &gens, c);
    let n = hs.valid.len();
    if n == 0 {
        return Ok(0);
    }
    let rank_c = rank_of(n, &hs.rows);
    // derivations of multidegree c exist only when b is a single vertex:
    // x^a ∂/∂x_v sends x_p to [v ∈ p] x^(p+c)
    let mut with_der = hs.rows.clone();
    if c.b.len() == 1 {
        let v = c.b.min_vertex().unwrap();
        let row: Vec<(usize, i64)> = hs
            .valid
            .iter()
            .enumerate()
            .filter(|&(_, &gi)| gens[gi].contains(v))
            .map(|(col, _)| (col, 1))
            .collect();
        if !row.is_empty() {
            with_der.push(row);
        }
    }
    let rank_cd = rank_of(n, &with_der);
    Ok((n - rank_c) - (rank_cd - rank_c))
}

/// dim T² in degree c from the Taylor relations: homomorphisms on the
/// pairwise syzygies, killed on the Koszul pairs and the triple second
/// syzygies, modulo homomorphisms lifted from the free module.
pub fn t2_oracle_dim(k: &SimplicialComplex, c: &Multidegree) -> Result<usize> {
    check_caps(c)?;
    if !k.contains(c.a_support()) {
        return Ok(0);
    }
    let a = c.a_support();
    let b = c.b;
    let gens = k.minimal_nonfaces();
    let m = gens.len();
    if m < 2 {
        return Ok(0);
    }
    // pair variables
    let mut pair_col: Vec<Vec<Option<usize>>> = vec![vec![None; m]; m];
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if monomial_survives(k, gens[i].union(gens[j]), VertexSet::EMPTY, a, b) {
                pair_col[i][j] = Some(pairs.len());
                pairs.push((i, j));
            }
        }
    }
    let n = pairs.len();
    if n == 0 {
        return Ok(0);
    }
    let mut rows: Vec<Vec<(usize, i64)>> = Vec::new();
    // Koszul: x_q e_p - x_p e_q = x_(p∩q) r_pq, so ψ_pq dies whenever
    // x^(p+q+c) is nonzero
    for (col, &(i, j)) in pairs.iter().enumerate() {
        let twice = gens[i].intersection(gens[j]);
        if monomial_survives(k, gens[i].union(gens[j]), twice, a, b) {
            rows.push(vec![(col, 1)]);
        }
    }
    // triples
    for i in 0..m {
        for j in i + 1..m {
            for l in j + 1..m {
                let lcm = gens[i].union(gens[j]).union(gens[l]);
                if !monomial_survives(k, lcm, VertexSet::EMPTY, a, b) {
                    continue;
                }
                let mut row: Vec<(usize, i64)> = Vec::new();
                if let Some(cij) = pair_col[i][j] {
                    row.push((cij, 1));
                }
                if let Some(cil) = pair_col[i][l] {
                    row.push((cil, -1));
                }
                if let Some(cjl) = pair_col[j][l] {
                    row.push((cjl, 1));
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let rank_c = rank_of(n, &rows);
    // image of Hom(F, A)_c: for a valid generator p, the lift sends r_pq
    // to ±x^((p∪q)+c)
    let mut with_img = rows.clone();
    for (gi, &p) in gens.iter().enumerate() {
        if !monomial_survives(k, p, VertexSet::EMPTY, a, b) {
            continue;
        }
        let row: Vec<(usize, i64)> = pairs
            .iter()
            .enumerate()
            .filter_map(|(col, &(i, j))| {
                if i == gi {
                    Some((col, 1))
                } else if j == gi {
                    Some((col, -1))
                } else {
                    None
                }
            })
            .collect();
        if !row.is_empty() {
            with_img.push(row);
        }
    }
    let rank_ci = rank_of(n, &with_img);
    Ok((n - rank_c) - (rank_ci - rank_c))
}

/// dim Hom(I, A) in total degree zero, summed over all contributing
/// multidegrees with composition multiplicities.
pub fn embedded_first_order_dim(k: &SimplicialComplex) -> Result<usize> {
    let gens = k.minimal_nonfaces();
    if gens.is_empty() {
        return Ok(0);
    }
    // candidate negative supports: subsets of generators
    let mut b_cands: Vec<VertexSet> = gens
        .iter()
        .flat_map(|g| g.subsets())
        .filter(|s| !s.is_empty())
        .collect();
    b_cands.sort();
    b_cands.dedup();
    let faces = k.nonempty_faces();
    let mut total = 0usize;
    for &b in &b_cands {
        for &a in &faces {
            if a.len() > b.len() || !a.is_disjoint(b) {
                continue;
            }
            let mult = binom(b.len() - 1, a.len() - 1);
            let c = Multidegree::new(a.iter().map(|v| (v, 1)).collect(), b)?;
            let hs = hom_space(k, &gens, &c);
            let n = hs.valid.len();
            if n == 0 {
                continue;
            }
            let dim = n - rank_of(n, &hs.rows);
            total += dim * mult;
        }
    }
    Ok(total)
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn deg(a: &[(usize, u32)], b: &[usize]) -> Multidegree {
        Multidegree::new(a.to_vec(), vs(b)).unwrap()
    }

    #[test]
    fn generators_of_small_complexes() {
        assert_eq!(
            minimal_nonfaces(&named::boundary_simplex(2)).generators,
            vec![vs(&[0, 1, 2])]
        );
        assert_eq!(
            minimal_nonfaces(&named::cycle(4).unwrap()).generators,
            vec![vs(&[0, 2]), vs(&[1, 3])]
        );
        assert_eq!(minimal_nonfaces(&named::cycle(6).unwrap()).generators.len(), 9);
    }

    #[test]
    fn derivation_criterion() {
        assert!(derivation_module_check(&named::octahedron()).euler_generated);
        assert!(derivation_module_check(&named::cycle(5).unwrap()).euler_generated);
        assert!(!derivation_module_check(&named::chain(2).unwrap()).euler_generated);
        assert!(!derivation_module_check(&named::simplex(2)).euler_generated);
    }

    #[test]
    fn square_diagonal_via_oracle() {
        let e4 = named::cycle(4).unwrap();
        assert_eq!(t1_oracle_dim(&e4, &deg(&[], &[1, 3])).unwrap(), 1);
        assert_eq!(t1_oracle_dim(&e4, &deg(&[], &[0, 2])).unwrap(), 1);
        assert_eq!(t2_oracle_dim(&e4, &deg(&[], &[1, 3])).unwrap(), 0);
        assert_eq!(t2_oracle_dim(&e4, &deg(&[], &[0, 1, 2, 3])).unwrap(), 0);
    }

    #[test]
    fn pentagon_basis_directions() {
        let e5 = named::cycle(5).unwrap();
        for i in 0..5usize {
            let c = deg(&[(i, 2)], &[(i + 4) % 5, (i + 1) % 5]);
            assert_eq!(t1_oracle_dim(&e5, &c).unwrap(), 1, "vertex {i}");
        }
    }

    #[test]
    fn hexagon_t2_long_diagonal() {
        let e6 = named::cycle(6).unwrap();
        assert_eq!(t2_oracle_dim(&e6, &deg(&[], &[0, 3])).unwrap(), 1);
        assert_eq!(t2_oracle_dim(&e6, &deg(&[], &[0, 2])).unwrap(), 0);
    }

    #[test]
    fn caps_are_enforced() {
        let e4 = named::cycle(4).unwrap();
        let too_deep = deg(&[(0, 5)], &[1]);
        assert!(matches!(
            t1_oracle_dim(&e4, &too_deep),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn embedded_dims() {
        assert_eq!(embedded_first_order_dim(&named::simplex(3)).unwrap(), 0);
        assert_eq!(embedded_first_order_dim(&named::boundary_simplex(2)).unwrap(), 9);
    }

    #[test]
    fn icosahedron_degree_zero_sample() {
        let k = named::icosahedron();
        // link of vertex 0 is the pentagon 1-2-3-4-5
        let c = deg(&[(0, 2)], &[1, 3]);
        assert_eq!(t1_oracle_dim(&k, &c).unwrap(), 0);
    }
}
