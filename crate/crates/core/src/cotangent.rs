//! Graded cotangent cohomology T¹ and T² of Stanley-Reisner rings.
//!
//! The general route computes the degree-(a−b) piece as relative cohomology
//! of the pair of up-closed families U_b, Ũ_b inside link(a). On closed
//! manifolds there are fast paths: T¹ pieces are 0 or 1 and detected by
//! emptiness of Ũ_b, and T² pieces reduce to ordinary homology of iterated
//! links. Degree-zero totals, the dimension formulas for the projective
//! schemes of surfaces and 3-manifolds, and the rigidity criterion live
//! here as well.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{domain, Result};
use crate::families::{order_complex, pair_cohomology_dims, UpClosedFamily};
use crate::homology::{betti_number, betti_numbers, reduced_homology_dim};
use crate::named;
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    GeneralTopological,
    ManifoldFastPath,
    Oracle,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedPieceReport {
    pub i: u8,
    pub a: VertexSet,
    pub b: VertexSet,
    pub dim: usize,
    pub basis: Option<String>,
    pub method: Method,
}

/// The families U_b = {f : f ∪ b ∉ K} and Ũ_b = {f : (f∪b)∖{v} ∉ K for
/// some v ∈ b}, both up-closed, Ũ_b ⊆ U_b.
pub fn u_families(
    k: &SimplicialComplex,
    b: VertexSet,
) -> Result<(UpClosedFamily, UpClosedFamily)> {
    if b.is_empty() {
        return domain("u_families: b must be nonempty");
    }
    if b.max_vertex().unwrap() >= k.n_vertices() {
        return domain(format!(
            "u_families: {b} is not within the vertex universe 0..{}",
            k.n_vertices()
        ));
    }
    let mut u = Vec::new();
    let mut ut = Vec::new();
    let mut u_empty = false;
    let mut ut_empty = false;
    for f in k.all_faces() {
        let fb = f.union(b);
        if !k.contains(fb) {
            if f.is_empty() {
                u_empty = true;
            } else {
                u.push(f);
            }
        }
        if b.iter().any(|v| !k.contains(fb.remove(v))) {
            if f.is_empty() {
                ut_empty = true;
            } else {
                ut.push(f);
            }
        }
    }
    Ok((
        UpClosedFamily::new_unchecked(u, u_empty),
        UpClosedFamily::new_unchecked(ut, ut_empty),
    ))
}

fn u_tilde_is_empty(k: &SimplicialComplex, b: VertexSet) -> bool {
    k.all_faces().iter().all(|&f| {
        let fb = f.union(b);
        b.iter().all(|v| k.contains(fb.remove(v)))
    })
}

fn require_closed_manifold(k: &SimplicialComplex) -> Result<usize> {
    match k.is_closed_manifold()? {
        (true, d) => Ok(d),
        (false, _) => domain("operation requires a closed manifold"),
    }
}

/// All b with |b| ≥ 2 and Ũ_b(K) = ∅, for a closed manifold K. These are
/// exactly the degrees in which T¹ pieces with context a survive when this
/// complex is link(a).
pub fn b_set(k: &SimplicialComplex) -> Result<Vec<VertexSet>> {
    require_closed_manifold(k)?;
    // Ũ_b = K ≠ ∅ unless every proper subset of b is a face, so candidates
    // are faces and minimal non-faces.
    let mut candidates: Vec<VertexSet> = k
        .nonempty_faces()
        .into_iter()
        .filter(|f| f.len() >= 2)
        .collect();
    candidates.extend(k.minimal_nonfaces().into_iter().filter(|f| f.len() >= 2));
    candidates.sort();
    Ok(candidates
        .into_iter()
        .filter(|&b| u_tilde_is_empty(k, b))
        .collect())
}

/// dim T^i in degree a − b by the pair-cohomology description; depends
/// only on the supports. Works for arbitrary complexes.
pub fn t_graded_dim(k: &SimplicialComplex, i: usize, a: VertexSet, b: VertexSet) -> Result<usize> {
    if i != 1 && i != 2 {
        return domain("only T^1 and T^2 are available");
    }
    if b.is_empty() || !a.is_disjoint(b) || !k.contains(a) {
        return Ok(0);
    }
    let l = k.link(a)?;
    if !b.is_subset_of(l.support()) {
        return Ok(0);
    }
    let (u, ut) = u_families(&l, b)?;
    let dims = pair_cohomology_dims(&u, &ut, b.len() == 1)?;
    Ok(dims.get(i).copied().unwrap_or(0))
}

fn t1_dim_on_link(l: &SimplicialComplex, b: VertexSet) -> usize {
    if b.len() < 2 || !b.is_subset_of(l.support()) {
        return 0;
    }
    usize::from(u_tilde_is_empty(l, b))
}

fn boundary_is_subcomplex(l: &SimplicialComplex, b: VertexSet) -> bool {
    b.boundary_faces().all(|s| l.contains(s))
}

/// Common intersection L_b of the links of all proper nonempty subsets of
/// b; the void complex when only the empty face survives.
fn multi_link(l: &SimplicialComplex, b: VertexSet) -> Result<SimplicialComplex> {
    let subs: Vec<VertexSet> = b
        .subsets()
        .into_iter()
        .filter(|s| !s.is_empty() && *s != b)
        .collect();
    let first = l.link(subs[0])?;
    let faces: Vec<VertexSet> = first
        .nonempty_faces()
        .into_iter()
        .filter(|f| f.is_disjoint(b) && subs.iter().all(|&bp| l.contains(f.union(bp))))
        .collect();
    let maximal: Vec<VertexSet> = faces
        .iter()
        .copied()
        .filter(|f| !faces.iter().any(|g| *f != *g && f.is_subset_of(*g)))
        .collect();
    if maximal.is_empty() {
        return Ok(SimplicialComplex::void(l.n_vertices()));
    }
    SimplicialComplex::build_from_facets(maximal, l.n_vertices())
}

/// T² piece with context reduced to the link `l` of dimension `n`.
fn t2_dim_on_link(l: &SimplicialComplex, n: i32, b: VertexSet) -> Result<(usize, Method)> {
    let fast = Method::ManifoldFastPath;
    if b.is_empty() || !b.is_subset_of(l.support()) || !boundary_is_subcomplex(l, b) {
        return Ok((0, fast));
    }
    if !l.contains(b) {
        // the open complement of ∂b ∗ L_b is the union of open simplices
        // of Ũ_b, so its H̃⁰ is read off the order complex
        let (_, ut) = u_families(l, b)?;
        let oc = order_complex(&ut)?;
        return Ok((reduced_homology_dim(&oc, 0), fast));
    }
    if !l.is_orientable().unwrap_or(false) {
        let (u, ut) = u_families(l, b)?;
        let dims = pair_cohomology_dims(&u, &ut, b.len() == 1)?;
        return Ok((dims.get(2).copied().unwrap_or(0), Method::GeneralTopological));
    }
    if b.len() == 1 {
        return Ok((reduced_homology_dim(l, n - 1), fast));
    }
    if u_tilde_is_empty(l, b) {
        // the T¹ piece in this degree is nonzero, which kills T²
        return Ok((0, fast));
    }
    let lb = multi_link(l, b)?;
    let h = reduced_homology_dim(&lb, n - b.len() as i32);
    Ok((h.saturating_sub(1), fast))
}

/// Closed-manifold T¹ piece: 0 or 1, with the explicit basis rule when 1.
pub fn t1_manifold_dim(
    k: &SimplicialComplex,
    a: VertexSet,
    b: VertexSet,
) -> Result<GradedPieceReport> {
    require_closed_manifold(k)?;
    let mut rep = GradedPieceReport {
        i: 1,
        a,
        b,
        dim: 0,
        basis: None,
        method: Method::ManifoldFastPath,
    };
    if !a.is_disjoint(b) || !k.contains(a) {
        return Ok(rep);
    }
    let l = k.link(a)?;
    rep.dim = t1_dim_on_link(&l, b);
    if rep.dim == 1 {
        rep.basis = Some(format!("x_p ↦ x^{a} · x_(p ∖ {b}) if {b} ⊆ p, else 0"));
    }
    Ok(rep)
}

/// Closed-manifold T² piece via the link-homology shortcuts, falling back
/// to the general pair formula in non-orientable contexts.
pub fn t2_manifold_dim(
    k: &SimplicialComplex,
    a: VertexSet,
    b: VertexSet,
) -> Result<GradedPieceReport> {
    let d = require_closed_manifold(k)?;
    let mut rep = GradedPieceReport {
        i: 2,
        a,
        b,
        dim: 0,
        basis: None,
        method: Method::ManifoldFastPath,
    };
    if !a.is_disjoint(b) || !k.contains(a) {
        return Ok(rep);
    }
    let l = k.link(a)?;
    let (dim, method) = t2_dim_on_link(&l, d as i32 - a.len() as i32, b)?;
    rep.dim = dim;
    rep.method = method;
    Ok(rep)
}

#[derive(Debug, Clone, Serialize)]
pub struct Contribution {
    pub i: u8,
    pub a: VertexSet,
    pub b: VertexSet,
    pub dim: usize,
    /// Number of exponent vectors with support exactly `a`, entries ≥ 1 and
    /// total |b|: C(|b|−1, |a|−1).
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeZeroSummary {
    pub t1_total: usize,
    pub t2_total: usize,
    pub contributions: Vec<Contribution>,
}

impl DegreeZeroSummary {
    /// Sum of dim × multiplicity over contributions with the given index
    /// and context size |a|.
    pub fn total_for_context_size(&self, i: u8, a_len: usize) -> usize {
        self.contributions
            .iter()
            .filter(|c| c.i == i && c.a.len() == a_len)
            .map(|c| c.dim * c.multiplicity)
            .sum()
    }
}

fn compositions(b_len: usize, a_len: usize) -> usize {
    // C(b_len − 1, a_len − 1)
    if a_len == 0 || a_len > b_len {
        return 0;
    }
    let (n, mut k) = (b_len - 1, a_len - 1);
    k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All contributions to T¹ and T² in total degree zero: pieces T^i_{a−b}
/// with 0 < |a| ≤ |b| weighted by the number of admissible exponent
/// vectors on a.
pub fn degree_zero_totals(k: &SimplicialComplex) -> Result<DegreeZeroSummary> {
    let d = require_closed_manifold(k)?;
    let faces = k.nonempty_faces();
    let per_face: Vec<Vec<Contribution>> = faces
        .par_iter()
        .map(|&a| -> Result<Vec<Contribution>> {
            let l = k.link(a)?;
            let n = d as i32 - a.len() as i32;
            let mut cands: Vec<VertexSet> = l.nonempty_faces();
            cands.extend(l.minimal_nonfaces());
            let mut out = Vec::new();
            for b in cands {
                let mult = compositions(b.len(), a.len());
                if mult == 0 {
                    continue;
                }
                let t1 = t1_dim_on_link(&l, b);
                if t1 > 0 {
                    out.push(Contribution {
                        i: 1,
                        a,
                        b,
                        dim: t1,
                        multiplicity: mult,
                    });
                }
                let (t2, _) = t2_dim_on_link(&l, n, b)?;
                if t2 > 0 {
                    out.push(Contribution {
                        i: 2,
                        a,
                        b,
                        dim: t2,
                        multiplicity: mult,
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut contributions: Vec<Contribution> = per_face.into_iter().flatten().collect();
    contributions.sort_by_key(|c| (c.i, c.a, c.b));
    let total = |i: u8| -> usize {
        contributions
            .iter()
            .filter(|c| c.i == i)
            .map(|c| c.dim * c.multiplicity)
            .sum()
    };
    Ok(DegreeZeroSummary {
        t1_total: total(1),
        t2_total: total(2),
        contributions,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SurfaceReport {
    /// Vertex counts by valency.
    pub f0_by_valency: Vec<(usize, usize)>,
    pub f1: usize,
    pub h2: usize,
    pub euler: i64,
    pub t1_projective: usize,
    pub t2_degree_zero: usize,
    pub h2_theta: usize,
}

/// dim T¹ of the projective scheme of a closed surface, both displayed
/// forms cross-checked, plus the degree-zero T² total.
pub fn surface_formulas(k: &SimplicialComplex) -> Result<SurfaceReport> {
    let d = require_closed_manifold(k)?;
    if d != 2 {
        return domain(format!("surface formulas need a closed surface, got dimension {d}"));
    }
    let f0k = k.face_valency_counts(0);
    let f1 = k.f_vector()[1];
    let h2 = betti_number(k, 2);
    let chi = k.euler_characteristic();
    let g = |v: usize| f0k.get(&v).copied().unwrap_or(0);
    let form1 = 4 * g(3) + 2 * g(4) + f1 + h2;
    let f0: usize = f0k.values().sum();
    let extra: i64 = f0k
        .iter()
        .filter(|(&v, _)| v >= 6)
        .map(|(&v, &c)| 2 * (v as i64 - 5) * c as i64)
        .sum();
    let form2 = f0 as i64 + 9 * chi + h2 as i64 + extra;
    if form1 as i64 != form2 {
        return domain(format!(
            "internal inconsistency: valency form {form1} vs Euler form {form2}"
        ));
    }
    let t2: usize = f0k
        .iter()
        .filter(|(&v, _)| v >= 6)
        .map(|(&v, &c)| v * (v - 5) / 2 * c)
        .sum();
    Ok(SurfaceReport {
        f0_by_valency: f0k.into_iter().collect(),
        f1,
        h2,
        euler: chi,
        t1_projective: form1,
        t2_degree_zero: t2,
        h2_theta: 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinkClass {
    BoundarySimplex3,
    SuspendedCycle(usize),
    Cyclic3(usize),
    Other,
}

fn classify_sphere_link(l: &SimplicialComplex) -> LinkClass {
    let (c, _) = l.compactified();
    if c.is_isomorphic_to(&named::boundary_simplex(3)) {
        return LinkClass::BoundarySimplex3;
    }
    let f0 = c.f_vector().first().copied().unwrap_or(0);
    if f0 >= 5 {
        if let Ok(model) = named::cycle(f0 - 2).and_then(|e| e.suspension()) {
            if c.is_isomorphic_to(&model) {
                return LinkClass::SuspendedCycle(f0 - 2);
            }
        }
    }
    if f0 >= 6 {
        if let Ok(model) = named::cyclic3(f0) {
            if c.is_isomorphic_to(&model) {
                return LinkClass::Cyclic3(f0);
            }
        }
    }
    LinkClass::Other
}

#[derive(Debug, Clone, Serialize)]
pub struct ThreefoldReport {
    pub d3: usize,
    pub e3: usize,
    pub e4: usize,
    pub e_ge5: usize,
    pub c_ge6: usize,
    pub f1_valency3: usize,
    pub f1_valency4: usize,
    pub h2: usize,
    pub unclassified_vertices: Vec<usize>,
    pub t1_projective: usize,
}

/// dim T¹ of the projective scheme of a closed 3-manifold from the vertex
/// link census and edge valencies.
pub fn threefold_formula(k: &SimplicialComplex) -> Result<ThreefoldReport> {
    let d = require_closed_manifold(k)?;
    if d != 3 {
        return domain(format!("3-fold formula needs a closed 3-manifold, got dimension {d}"));
    }
    let mut rep = ThreefoldReport {
        d3: 0,
        e3: 0,
        e4: 0,
        e_ge5: 0,
        c_ge6: 0,
        f1_valency3: 0,
        f1_valency4: 0,
        h2: betti_number(k, 2),
        unclassified_vertices: Vec::new(),
        t1_projective: 0,
    };
    let classes: Vec<(usize, LinkClass)> = k
        .support()
        .to_vec()
        .par_iter()
        .map(|&v| {
            let l = k.link(VertexSet::singleton(v)).expect("vertex link");
            (v, classify_sphere_link(&l))
        })
        .collect();
    for (v, class) in classes {
        match class {
            LinkClass::BoundarySimplex3 => rep.d3 += 1,
            LinkClass::SuspendedCycle(3) => rep.e3 += 1,
            LinkClass::SuspendedCycle(4) => rep.e4 += 1,
            LinkClass::SuspendedCycle(_) => rep.e_ge5 += 1,
            LinkClass::Cyclic3(_) => rep.c_ge6 += 1,
            LinkClass::Other => rep.unclassified_vertices.push(v),
        }
    }
    let f1k = k.face_valency_counts(1);
    rep.f1_valency3 = f1k.get(&3).copied().unwrap_or(0);
    rep.f1_valency4 = f1k.get(&4).copied().unwrap_or(0);
    rep.t1_projective = 11 * rep.d3
        + 5 * rep.e3
        + 3 * rep.e4
        + rep.e_ge5
        + rep.c_ge6
        + 5 * rep.f1_valency3
        + 2 * rep.f1_valency4
        + rep.h2;
    Ok(rep)
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaReport {
    pub h0_theta: usize,
    /// h^p(Θ) for p ≥ 1 (index p − 1); equals h^{p+1}(K).
    pub higher_theta: Vec<usize>,
    pub t1_projective: usize,
    /// dim H³(K): a lower bound for dim T² of the projective scheme.
    pub h3: usize,
    /// dim T²_{A,0}, which injects into the global sections of the T²
    /// sheaf; h3 + sections is an upper bound for dim T², but the sections
    /// are only bounded below by this number.
    pub t2_degree_zero: usize,
}

/// Cohomology of the tangent sheaf and the resulting T¹/T² data of the
/// projective scheme of a closed manifold.
pub fn theta_and_projective_dims(k: &SimplicialComplex) -> Result<ThetaReport> {
    require_closed_manifold(k)?;
    let betti = betti_numbers(k);
    let b = |i: usize| betti.get(i).copied().unwrap_or(0);
    let n_plus_1 = k.support().len();
    let totals = degree_zero_totals(k)?;
    Ok(ThetaReport {
        h0_theta: n_plus_1 - 1 + b(1),
        higher_theta: (1..betti.len()).map(|p| b(p + 1)).collect(),
        t1_projective: b(2) + totals.t1_total,
        h3: b(3),
        t2_degree_zero: totals.t2_total,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    pub rigid: bool,
    pub h2: usize,
    /// Edges of valency < 5 with their valencies.
    pub low_valency_edges: Vec<(VertexSet, usize)>,
}

/// A closed 3-manifold gives a rigid projective scheme if H²(K) = 0 and
/// every edge has valency at least 5.
pub fn is_rigid(k: &SimplicialComplex) -> Result<RigidityReport> {
    let d = require_closed_manifold(k)?;
    if d != 3 {
        return domain(format!("rigidity criterion needs a closed 3-manifold, got dimension {d}"));
    }
    let h2 = betti_number(k, 2);
    let low: Vec<(VertexSet, usize)> = k
        .faces_of_dim(1)
        .par_iter()
        .filter_map(|&e| {
            let v = k.valency(e);
            (v < 5).then_some((e, v))
        })
        .collect();
    Ok(RigidityReport {
        rigid: h2 == 0 && low.is_empty(),
        h2,
        low_valency_edges: low,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn square_diagonal_families() {
        let e4 = named::cycle(4).unwrap();
        let (u, ut) = u_families(&e4, vs(&[1, 3])).unwrap();
        assert_eq!(u.len(), e4.face_count());
        assert!(u.contains_empty);
        assert!(ut.is_empty());
        // proper up-closedness of both, checked against the ambient complex
        assert!(UpClosedFamily::new(&e4, u.members.clone()).is_ok());
    }

    #[test]
    fn b_set_table_rows() {
        assert_eq!(b_set(&named::boundary_simplex(1)).unwrap().len(), 1);
        assert_eq!(b_set(&named::boundary_simplex(2)).unwrap().len(), 4);
        assert_eq!(b_set(&named::cycle(4).unwrap()).unwrap().len(), 2);
        assert_eq!(b_set(&named::boundary_simplex(3)).unwrap().len(), 11);
        assert_eq!(b_set(&named::cycle(5).unwrap()).unwrap().len(), 0);
        assert_eq!(b_set(&named::cycle(6).unwrap()).unwrap().len(), 0);
    }

    #[test]
    fn square_diagonal_t1() {
        let e4 = named::cycle(4).unwrap();
        let b = vs(&[1, 3]);
        assert_eq!(t_graded_dim(&e4, 1, VertexSet::EMPTY, b).unwrap(), 1);
        assert_eq!(t1_manifold_dim(&e4, VertexSet::EMPTY, b).unwrap().dim, 1);
        assert_eq!(t_graded_dim(&e4, 2, VertexSet::EMPTY, b).unwrap(), 0);
    }

    #[test]
    fn polygon_vertex_context() {
        // a a vertex of E_n, b its two neighbours: the link is two points
        // and b is its diagonal
        for n in [5usize, 6, 7] {
            let en = named::cycle(n).unwrap();
            let a = vs(&[0]);
            let b = vs(&[1, n - 1]);
            assert_eq!(t1_manifold_dim(&en, a, b).unwrap().dim, 1, "E{n}");
            assert_eq!(t_graded_dim(&en, 1, a, b).unwrap(), 1, "E{n}");
        }
    }

    #[test]
    fn hexagon_long_diagonal_t2() {
        let e6 = named::cycle(6).unwrap();
        let b = vs(&[0, 3]);
        assert_eq!(t2_manifold_dim(&e6, VertexSet::EMPTY, b).unwrap().dim, 1);
        assert_eq!(t_graded_dim(&e6, 2, VertexSet::EMPTY, b).unwrap(), 1);
        // short diagonals do not contribute
        assert_eq!(
            t2_manifold_dim(&e6, VertexSet::EMPTY, vs(&[0, 2])).unwrap().dim,
            0
        );
    }

    #[test]
    fn octahedron_vertex_diagonals() {
        let k = named::octahedron();
        // link of vertex 0 is the square on {2,3,4,5} with diagonals
        // {2,3} and {4,5}
        assert_eq!(t1_manifold_dim(&k, vs(&[0]), vs(&[2, 3])).unwrap().dim, 1);
        assert_eq!(t1_manifold_dim(&k, vs(&[0]), vs(&[4, 5])).unwrap().dim, 1);
        assert_eq!(t1_manifold_dim(&k, vs(&[0]), vs(&[2, 4])).unwrap().dim, 0);
    }

    #[test]
    fn icosahedron_vertex_contexts_vanish() {
        let k = named::icosahedron();
        let l = k.link(vs(&[1])).unwrap();
        for b in l.support().subsets() {
            if b.len() >= 2 {
                assert_eq!(t1_dim_on_link(&l, b), 0);
            }
        }
    }

    #[test]
    fn degree_zero_boundary_simplex3() {
        let s = degree_zero_totals(&named::boundary_simplex(3)).unwrap();
        assert_eq!(s.t1_total, 22);
        assert_eq!(s.total_for_context_size(1, 1), 16);
        assert_eq!(s.total_for_context_size(1, 2), 6);
    }

    #[test]
    fn surface_reports() {
        let oct = surface_formulas(&named::octahedron()).unwrap();
        assert_eq!(oct.t1_projective, 25);
        assert_eq!(oct.t2_degree_zero, 0);
        let ico = surface_formulas(&named::icosahedron()).unwrap();
        assert_eq!(ico.t1_projective, 31);
        assert_eq!(ico.t2_degree_zero, 0);
        let tor = surface_formulas(&named::torus(7).unwrap()).unwrap();
        assert_eq!(tor.t1_projective, 22);
        assert_eq!(tor.t2_degree_zero, 21);
    }

    #[test]
    fn torus_degree_zero_matches_formula() {
        let k = named::torus(7).unwrap();
        let s = degree_zero_totals(&k).unwrap();
        assert_eq!(s.t1_total, 21);
        assert_eq!(s.t2_total, 21);
    }

    #[test]
    fn threefold_boundary_simplex4() {
        let rep = threefold_formula(&named::boundary_simplex(4)).unwrap();
        assert_eq!((rep.d3, rep.f1_valency3, rep.h2), (5, 10, 0));
        assert_eq!(rep.t1_projective, 105);
        let s = degree_zero_totals(&named::boundary_simplex(4)).unwrap();
        assert_eq!(s.t1_total + rep.h2, rep.t1_projective);
    }

    #[test]
    fn theta_small_sphere() {
        let rep = theta_and_projective_dims(&named::boundary_simplex(3)).unwrap();
        assert_eq!(rep.h0_theta, 3);
        assert_eq!(rep.t1_projective, 1 + 22);
        assert!(rep.higher_theta.iter().skip(1).all(|&h| h == 0));
    }

    #[test]
    fn rigidity_of_simplex_boundary() {
        let rep = is_rigid(&named::boundary_simplex(4)).unwrap();
        assert!(!rep.rigid);
        assert_eq!(rep.low_valency_edges.len(), 10);
    }
}
