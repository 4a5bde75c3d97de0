//! Up-closed families of faces and the homotopy model for the union of
//! their open simplices.
//!
//! For an up-closed family Y inside a complex, the union of open simplices
//! of the members deformation retracts onto the order complex (nerve of the
//! inclusion poset) of the nonempty members; if ∅ is a member, the union is
//! a cone. Pairs of nested families get relative simplicial cohomology on
//! the corresponding pair of order complexes.

use std::collections::{HashMap, HashSet};

use crate::complex::SimplicialComplex;
use crate::error::{domain, Error, Result};
use crate::homology::{rational, SparseMatrix};
use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpClosedFamily {
    /// Nonempty members, sorted.
    pub members: Vec<VertexSet>,
    pub contains_empty: bool,
}

impl UpClosedFamily {
    pub fn new(
        ambient: &SimplicialComplex,
        members: impl IntoIterator<Item = VertexSet>,
    ) -> Result<UpClosedFamily> {
        let mut contains_empty = false;
        let mut set: HashSet<VertexSet> = HashSet::new();
        for f in members {
            if f.is_empty() {
                contains_empty = true;
            } else {
                set.insert(f);
            }
        }
        // upward closure check
        for f in &set {
            for g in ambient.all_faces() {
                if f.is_subset_of(g) && !g.is_empty() && !set.contains(&g) {
                    return domain(format!("family is not up-closed: {f} ⊆ {g} but {g} missing"));
                }
            }
        }
        if contains_empty {
            for g in ambient.all_faces() {
                if !g.is_empty() && !set.contains(&g) {
                    return domain("family contains ∅ but is not the full face set".to_string());
                }
            }
        }
        let mut members: Vec<VertexSet> = set.into_iter().collect();
        members.sort();
        Ok(UpClosedFamily {
            members,
            contains_empty,
        })
    }

    /// Construct without the up-closure check (used internally where the
    /// defining property guarantees closure).
    pub fn new_unchecked(
        members: impl IntoIterator<Item = VertexSet>,
        contains_empty: bool,
    ) -> UpClosedFamily {
        let mut members: Vec<VertexSet> = members.into_iter().filter(|f| !f.is_empty()).collect();
        members.sort();
        members.dedup();
        UpClosedFamily {
            members,
            contains_empty,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty() && !self.contains_empty
    }

    pub fn is_subfamily_of(&self, other: &UpClosedFamily) -> bool {
        (!self.contains_empty || other.contains_empty)
            && self
                .members
                .iter()
                .all(|f| other.members.binary_search(f).is_ok())
    }

    pub fn len(&self) -> usize {
        self.members.len() + usize::from(self.contains_empty)
    }
}

/// Simplices of the order complex of the nonempty members: chains in the
/// inclusion poset, with vertex i standing for `members[i]` of `u`. Only
/// chains whose elements all lie in `restrict` are produced (pass the full
/// member list of the same family to get its own order complex; pass a
/// subfamily's member set to get the subcomplex).
fn order_complex_facets(members: &[VertexSet]) -> Vec<Vec<usize>> {
    let n = members.len();
    // covers[i] = indices j with members[i] ⊂ members[j] minimal such
    let strictly_above = |i: usize| -> Vec<usize> {
        (0..n)
            .filter(|&j| j != i && members[i].is_subset_of(members[j]))
            .collect()
    };
    let above: Vec<Vec<usize>> = (0..n).map(strictly_above).collect();
    let mut facets = Vec::new();
    // minimal elements: not above anything
    let is_minimal: Vec<bool> = (0..n)
        .map(|i| !(0..n).any(|j| j != i && members[j].is_subset_of(members[i])))
        .collect();
    fn extend(
        chain: &mut Vec<usize>,
        top: usize,
        members: &[VertexSet],
        above: &[Vec<usize>],
        facets: &mut Vec<Vec<usize>>,
    ) {
        // covers of `top`: minimal elements of `above[top]`
        let covers: Vec<usize> = above[top]
            .iter()
            .copied()
            .filter(|&j| {
                !above[top]
                    .iter()
                    .any(|&z| z != j && members[z].is_subset_of(members[j]))
            })
            .collect();
        if covers.is_empty() {
            facets.push(chain.clone());
            return;
        }
        for j in covers {
            chain.push(j);
            extend(chain, j, members, above, facets);
            chain.pop();
        }
    }
    for i in 0..n {
        if is_minimal[i] {
            let mut chain = vec![i];
            extend(&mut chain, i, members, &above, &mut facets);
        }
    }
    facets
}

/// The order complex of an up-closed family; a cone when ∅ is a member
/// (the cone point gets the last vertex index).
pub fn order_complex(y: &UpClosedFamily) -> Result<SimplicialComplex> {
    let n = y.members.len();
    let extra = usize::from(y.contains_empty);
    if n + extra > MAX_VERTICES {
        return Err(Error::Capacity(n + extra));
    }
    if n == 0 {
        return Ok(if y.contains_empty {
            // cone over nothing: a point
            SimplicialComplex::build_from_facets([VertexSet::singleton(0)], 1)?
        } else {
            SimplicialComplex::empty(0)
        });
    }
    let chains = order_complex_facets(&y.members);
    let facets: Vec<VertexSet> = chains
        .into_iter()
        .map(|c| {
            let mut f: VertexSet = c.into_iter().collect();
            if y.contains_empty {
                f = f.insert(n);
            }
            f
        })
        .collect();
    SimplicialComplex::build_from_facets(facets, n + extra)
}

/// Relative simplicial cohomology dimensions of the order-complex pair
/// (⟨U⟩, ⟨V⟩) with V ⊆ U. The returned vector is indexed so that slot k is
/// cohomological degree k - 1 (slot 0 is degree -1).
///
/// When V is the empty family and `reduced` is set, this is the reduced
/// cohomology of ⟨U⟩ (augmented cochain complex). Otherwise the relative
/// (equivalently, for V = ∅, the ordinary) cochain complex is used.
pub fn pair_cohomology_dims(
    u: &UpClosedFamily,
    v: &UpClosedFamily,
    reduced: bool,
) -> Result<Vec<usize>> {
    if !v.is_subfamily_of(u) {
        return domain("pair cohomology: V is not a subfamily of U");
    }
    let oc_u = order_complex(u)?;
    // V's order complex reuses U's vertex labels.
    let index: HashMap<VertexSet, usize> = u
        .members
        .iter()
        .enumerate()
        .map(|(i, f)| (*f, i))
        .collect();
    let mut v_simplices: HashSet<VertexSet> = HashSet::new();
    if !v.is_empty() {
        let chains = order_complex_facets(&v.members);
        let n_u = u.members.len();
        for c in chains {
            let mut f: VertexSet = c.iter().map(|&i| index[&v.members[i]]).collect();
            if v.contains_empty {
                f = f.insert(n_u);
            }
            for s in f.subsets() {
                v_simplices.insert(s);
            }
        }
        // the empty simplex is in every nonempty subcomplex
        v_simplices.insert(VertexSet::EMPTY);
    }

    let max_dim = oc_u.dim().unwrap_or(-1);
    let use_augmentation = reduced && v.is_empty();
    let start = if use_augmentation { -1 } else { 0 };
    let mut levels: Vec<Vec<VertexSet>> = Vec::new();
    for d in start..=max_dim {
        let lvl: Vec<VertexSet> = oc_u
            .faces_of_dim(d)
            .iter()
            .filter(|s| !v_simplices.contains(s))
            .copied()
            .collect();
        levels.push(lvl);
    }
    if levels.is_empty() {
        return Ok(vec![0]);
    }
    // coboundary ranks between consecutive levels
    let mut ranks: Vec<usize> = Vec::new();
    for lvl in 1..levels.len() {
        let lower_index: HashMap<VertexSet, usize> = levels[lvl - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i))
            .collect();
        // build δ as a matrix with rows = upper simplices (so rank is the
        // same as of δ itself)
        let rows: Vec<Vec<(usize, _)>> = levels[lvl]
            .iter()
            .map(|s| {
                let mut row = Vec::new();
                for (pos, v) in s.iter().enumerate() {
                    let g = s.remove(v);
                    if let Some(&ci) = lower_index.get(&g) {
                        let sign = if pos % 2 == 0 { rational(1) } else { rational(-1) };
                        row.push((ci, sign));
                    }
                }
                row.sort_by_key(|(c, _)| *c);
                row
            })
            .collect();
        ranks.push(
            SparseMatrix {
                n_cols: levels[lvl - 1].len(),
                rows,
            }
            .rank(),
        );
    }
    let dims: Vec<usize> = (0..levels.len())
        .map(|lvl| {
            let up = if lvl < ranks.len() { ranks[lvl] } else { 0 };
            let down = if lvl == 0 { 0 } else { ranks[lvl - 1] };
            levels[lvl].len() - up - down
        })
        .collect();
    // re-index so slot 0 is degree -1
    if use_augmentation {
        Ok(dims)
    } else {
        let mut out = vec![0];
        out.extend(dims);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{betti_numbers, reduced_homology};
    use crate::named;

    fn all_nonempty(k: &SimplicialComplex) -> UpClosedFamily {
        UpClosedFamily::new_unchecked(k.nonempty_faces(), false)
    }

    #[test]
    fn order_complex_is_barycentric_subdivision() {
        for name in ["cycle:5", "boundary-simplex:2", "octahedron", "torus:7"] {
            let k = named::named_complex(name).unwrap();
            let oc = order_complex(&all_nonempty(&k)).unwrap();
            assert_eq!(
                reduced_homology(&oc),
                reduced_homology(&k),
                "barycentric invariance for {name}"
            );
        }
    }

    #[test]
    fn family_with_empty_is_a_cone() {
        let k = named::cycle(4).unwrap();
        let y = UpClosedFamily::new(&k, k.all_faces()).unwrap();
        assert!(y.contains_empty);
        let oc = order_complex(&y).unwrap();
        for d in reduced_homology(&oc) {
            assert_eq!(d, 0);
        }
    }

    #[test]
    fn open_star_is_contractible() {
        let k = named::icosahedron();
        let star = k.open_star(VertexSet::singleton(3)).unwrap();
        let y = UpClosedFamily::new(&k, star).unwrap();
        let oc = order_complex(&y).unwrap();
        assert!(reduced_homology(&oc).iter().all(|&d| d == 0));
        assert_eq!(betti_numbers(&oc)[0], 1);
    }

    #[test]
    fn identical_pair_vanishes() {
        let k = named::cycle(6).unwrap();
        let u = all_nonempty(&k);
        let dims = pair_cohomology_dims(&u, &u, false).unwrap();
        assert!(dims.iter().all(|&d| d == 0));
    }

    #[test]
    fn upclosure_validation() {
        let k = named::cycle(4).unwrap();
        // an edge without its superfaces... edges are facets, so fine; a
        // vertex alone is not up-closed
        assert!(UpClosedFamily::new(&k, [VertexSet::singleton(0)]).is_err());
        let ok = UpClosedFamily::new(&k, k.faces_of_dim(1).to_vec());
        assert!(ok.is_ok());
    }

    #[test]
    fn pair_euler_consistency() {
        // alternating sums: χ(U,V) = χ(U) − χ(V) for nested families
        let k = named::cyclic3(6).unwrap();
        let faces = k.nonempty_faces();
        // V = triangles only, U = edges and triangles
        let v = UpClosedFamily::new_unchecked(
            faces.iter().copied().filter(|f| f.len() == 3),
            false,
        );
        let u = UpClosedFamily::new_unchecked(
            faces.iter().copied().filter(|f| f.len() >= 2),
            false,
        );
        let dims = pair_cohomology_dims(&u, &v, false).unwrap();
        let chi_rel: i64 = dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { -(d as i64) } else { d as i64 })
            .sum();
        // χ via counts of chains
        let chi = |fam: &UpClosedFamily| -> i64 {
            let oc = order_complex(fam).unwrap();
            oc.f_vector()
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
                .sum()
        };
        assert_eq!(chi_rel, chi(&u) - chi(&v));
    }
}
