//! Abstract simplicial complexes given by their facets.
//!
//! A complex is stored as the antichain of its maximal faces. The full face
//! list is computed lazily and cached; all query operations are pure, so a
//! complex can be shared freely between threads once built.
//!
//! Two degenerate objects are distinguished: the *void* complex `{∅}` (one
//! empty facet, the complex of the zero ring's Proj counterpart) and the
//! *empty* complex with no faces at all. `build_from_facets` with an empty
//! facet list yields the void complex and sets a warning flag.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::error::{domain, unsupported, Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Debug)]
struct FaceTable {
    /// `by_dim[d + 1]` holds the faces of dimension `d` (so index 0 is the
    /// empty face), each level sorted.
    by_dim: Vec<Vec<VertexSet>>,
    all: HashSet<VertexSet>,
}

#[derive(Debug)]
pub struct SimplicialComplex {
    n_vertices: usize,
    /// Maximal faces, sorted; `[∅]` for the void complex, `[]` for the
    /// empty complex.
    facets: Vec<VertexSet>,
    /// Set when construction had to merge duplicates, drop non-maximal
    /// entries, or fall back to the void complex.
    normalized_input: bool,
    faces: OnceLock<FaceTable>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            n_vertices: self.n_vertices,
            facets: self.facets.clone(),
            normalized_input: self.normalized_input,
            faces: OnceLock::new(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n_vertices == other.n_vertices && self.facets == other.facets
    }
}
impl Eq for SimplicialComplex {}

fn maximal_antichain(mut sets: Vec<VertexSet>) -> (Vec<VertexSet>, bool) {
    let before = sets.len();
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|m| s.is_subset_of(*m)) {
            out.push(s);
        }
    }
    out.sort();
    let changed = out.len() != before;
    (out, changed)
}

impl SimplicialComplex {
    pub fn build_from_facets<I>(facet_list: I, n_vertices: usize) -> Result<SimplicialComplex>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n_vertices > MAX_VERTICES {
            return Err(Error::Capacity(n_vertices));
        }
        let facets: Vec<VertexSet> = facet_list.into_iter().collect();
        for f in &facets {
            if let Some(m) = f.max_vertex() {
                if m >= n_vertices {
                    return domain(format!(
                        "facet {f} uses vertex {m}, outside universe 0..{n_vertices}"
                    ));
                }
            }
        }
        if facets.is_empty() {
            return Ok(SimplicialComplex {
                n_vertices,
                facets: vec![VertexSet::EMPTY],
                normalized_input: true,
                faces: OnceLock::new(),
            });
        }
        let (facets, normalized_input) = maximal_antichain(facets);
        Ok(SimplicialComplex {
            n_vertices,
            facets,
            normalized_input,
            faces: OnceLock::new(),
        })
    }

    /// The void complex `{∅}`.
    pub fn void(n_vertices: usize) -> SimplicialComplex {
        SimplicialComplex {
            n_vertices,
            facets: vec![VertexSet::EMPTY],
            normalized_input: false,
            faces: OnceLock::new(),
        }
    }

    /// The complex with no faces at all.
    pub fn empty(n_vertices: usize) -> SimplicialComplex {
        SimplicialComplex {
            n_vertices,
            facets: Vec::new(),
            normalized_input: false,
            faces: OnceLock::new(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn normalized_input(&self) -> bool {
        self.normalized_input
    }

    pub fn is_void(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension: `None` for the empty complex, `-1` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets
            .iter()
            .map(|f| f.len() as i32 - 1)
            .max()
    }

    /// Union of all facets.
    pub fn support(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// Vertex indices in the universe that are not faces.
    pub fn ghost_vertices(&self) -> Vec<usize> {
        let sup = self.support();
        (0..self.n_vertices).filter(|v| !sup.contains(*v)).collect()
    }

    pub fn contains(&self, f: VertexSet) -> bool {
        if self.is_empty_complex() {
            return false;
        }
        self.facets.iter().any(|m| f.is_subset_of(*m))
    }

    fn face_table(&self) -> &FaceTable {
        self.faces.get_or_init(|| {
            let mut all: HashSet<VertexSet> = HashSet::new();
            if !self.is_empty_complex() {
                let mut stack: Vec<VertexSet> = self.facets.clone();
                while let Some(f) = stack.pop() {
                    if all.insert(f) {
                        for g in f.boundary_faces() {
                            if !all.contains(&g) {
                                stack.push(g);
                            }
                        }
                    }
                }
            }
            let max_dim = self.dim().unwrap_or(-1);
            let mut by_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); (max_dim + 2) as usize];
            for f in &all {
                by_dim[f.len()].push(*f);
            }
            for level in &mut by_dim {
                level.sort();
            }
            FaceTable { by_dim, all }
        })
    }

    /// Faces of dimension `d` (pass `-1` for the empty face level).
    pub fn faces_of_dim(&self, d: i32) -> &[VertexSet] {
        let t = self.face_table();
        let idx = d + 1;
        if idx < 0 || idx as usize >= t.by_dim.len() {
            &[]
        } else {
            &t.by_dim[idx as usize]
        }
    }

    /// All faces including the empty face (unless this is the empty complex).
    pub fn all_faces(&self) -> Vec<VertexSet> {
        let t = self.face_table();
        t.by_dim.iter().flatten().copied().collect()
    }

    pub fn nonempty_faces(&self) -> Vec<VertexSet> {
        let t = self.face_table();
        t.by_dim.iter().skip(1).flatten().copied().collect()
    }

    pub fn face_count(&self) -> usize {
        self.face_table().all.len()
    }

    /// Number of `d`-dimensional faces for `d = 0 ..= dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let t = self.face_table();
        t.by_dim.iter().skip(1).map(|l| l.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Minimal non-faces: sets that are not faces but all of whose proper
    /// subsets are. Only vertices in the support are considered; sizes run
    /// from 2 to dim + 2.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let sup = self.support().to_vec();
        let mut out: HashSet<VertexSet> = HashSet::new();
        // size 2: non-adjacent support pairs
        for (i, &u) in sup.iter().enumerate() {
            for &v in &sup[i + 1..] {
                let p = VertexSet::singleton(u).insert(v);
                if !self.contains(p) {
                    out.insert(p);
                }
            }
        }
        // size s >= 3: extend an (s-1)-face by one support vertex
        let max_dim = self.dim().unwrap_or(-1);
        for d in 1..=max_dim {
            for &f in self.faces_of_dim(d) {
                for &v in &sup {
                    if f.contains(v) {
                        continue;
                    }
                    let p = f.insert(v);
                    if self.contains(p) || out.contains(&p) {
                        continue;
                    }
                    if p.boundary_faces().all(|g| self.contains(g)) {
                        out.insert(p);
                    }
                }
            }
        }
        let mut out: Vec<VertexSet> = out.into_iter().collect();
        out.sort();
        out
    }

    /// Number of `(dim f + 1)`-faces containing `f`; equals the vertex count
    /// of `link(f)`.
    pub fn valency(&self, f: VertexSet) -> usize {
        (0..self.n_vertices)
            .filter(|&v| !f.contains(v) && self.contains(f.insert(v)))
            .count()
    }

    /// Counts of `i`-faces by valency: map `valency -> count`.
    pub fn face_valency_counts(&self, i: i32) -> std::collections::BTreeMap<usize, usize> {
        let mut out = std::collections::BTreeMap::new();
        for &f in self.faces_of_dim(i) {
            *out.entry(self.valency(f)).or_insert(0) += 1;
        }
        out
    }

    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains(f) {
            return domain(format!("link: {f} is not a face"));
        }
        if f.is_empty() {
            return Ok(self.clone());
        }
        let link_facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|m| f.is_subset_of(**m))
            .map(|m| m.difference(f))
            .collect();
        // A facet strictly containing f always exists unless f is itself a
        // facet, in which case the link is the void complex.
        SimplicialComplex::build_from_facets(link_facets, self.n_vertices).map(|mut k| {
            k.normalized_input = false;
            k
        })
    }

    pub fn closed_star(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains(f) {
            return domain(format!("closed star: {f} is not a face"));
        }
        if f.is_empty() {
            return Ok(self.clone());
        }
        let st: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|m| f.is_subset_of(**m))
            .copied()
            .collect();
        SimplicialComplex::build_from_facets(st, self.n_vertices).map(|mut k| {
            k.normalized_input = false;
            k
        })
    }

    /// Faces containing `f` (the open star).
    pub fn open_star(&self, f: VertexSet) -> Result<Vec<VertexSet>> {
        if !self.contains(f) {
            return domain(format!("open star: {f} is not a face"));
        }
        Ok(self
            .all_faces()
            .into_iter()
            .filter(|g| f.is_subset_of(*g))
            .collect())
    }

    /// Join `K * L`, re-indexing `L` above the universe of `K`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n = self.n_vertices + other.n_vertices;
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        if self.is_empty_complex() || other.is_empty_complex() {
            return Ok(SimplicialComplex::empty(n));
        }
        let shift = self.n_vertices;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let shifted: VertexSet = g.iter().map(|v| v + shift).collect();
                facets.push(f.union(shifted));
            }
        }
        SimplicialComplex::build_from_facets(facets, n).map(|mut k| {
            k.normalized_input = false;
            k
        })
    }

    pub fn cone(&self) -> Result<SimplicialComplex> {
        crate::named::simplex(0).join(self)
    }

    pub fn suspension(&self) -> Result<SimplicialComplex> {
        crate::named::boundary_simplex(1).join(self)
    }

    /// Restrict the vertex universe to the support, relabelling vertices in
    /// increasing order. Returns the relabelled complex and the old labels.
    pub fn compactified(&self) -> (SimplicialComplex, Vec<usize>) {
        let sup = self.support().to_vec();
        let mut index = HashMap::new();
        for (i, &v) in sup.iter().enumerate() {
            index.insert(v, i);
        }
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| index[&v]).collect())
            .collect();
        let k = SimplicialComplex::build_from_facets(facets, sup.len().max(0))
            .expect("relabelling cannot fail");
        (
            SimplicialComplex {
                normalized_input: false,
                ..k
            },
            sup,
        )
    }

    pub fn is_pure(&self) -> bool {
        match self.dim() {
            None => true,
            Some(d) => self.facets.iter().all(|f| f.len() as i32 - 1 == d),
        }
    }

    /// Connectivity of the 1-skeleton restricted to the support.
    pub fn is_connected(&self) -> bool {
        let sup = self.support().to_vec();
        if sup.len() <= 1 {
            return true;
        }
        let mut seen: HashSet<usize> = HashSet::new();
        let mut stack = vec![sup[0]];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for &w in &sup {
                if w != v && !seen.contains(&w) && self.contains(VertexSet::from_vertices([v, w])) {
                    stack.push(w);
                }
            }
        }
        seen.len() == sup.len()
    }

    fn is_two_points(&self) -> bool {
        self.f_vector() == vec![2]
    }

    fn is_cycle(&self) -> bool {
        let fv = self.f_vector();
        if fv.len() != 2 || fv[0] != fv[1] || fv[0] < 3 {
            return false;
        }
        self.support()
            .iter()
            .all(|v| self.valency(VertexSet::singleton(v)) == 2)
            && self.is_connected()
    }

    /// Closed combinatorial manifold recognition for dimension at most 3.
    ///
    /// Dimension 2 uses link-of-vertex = cycle; dimension 3 additionally
    /// requires vertex links to be closed 2-manifolds with Euler
    /// characteristic 2 (2-spheres). Recognition in dimension 4 and up is
    /// not attempted.
    pub fn is_closed_manifold(&self) -> Result<(bool, usize)> {
        let d = match self.dim() {
            None | Some(-1) => return Ok((false, 0)),
            Some(d) => d,
        };
        if d > 3 {
            return unsupported(format!(
                "manifold recognition is only supported up to dimension 3, got {d}"
            ));
        }
        if !self.is_pure() {
            return Ok((false, d as usize));
        }
        let ok = match d {
            0 => true,
            1 => self
                .support()
                .iter()
                .all(|v| match self.link(VertexSet::singleton(v)) {
                    Ok(l) => l.is_two_points(),
                    Err(_) => false,
                }),
            2 => {
                self.support().iter().all(|v| {
                    self.link(VertexSet::singleton(v))
                        .map(|l| l.is_cycle())
                        .unwrap_or(false)
                }) && self
                    .faces_of_dim(1)
                    .iter()
                    .all(|&e| self.link(e).map(|l| l.is_two_points()).unwrap_or(false))
            }
            3 => {
                let vertex_links_ok = self.support().iter().all(|v| {
                    let l = match self.link(VertexSet::singleton(v)) {
                        Ok(l) => l,
                        Err(_) => return false,
                    };
                    l.is_connected()
                        && l.euler_characteristic() == 2
                        && matches!(l.is_closed_manifold(), Ok((true, 2)))
                });
                vertex_links_ok
                    && self
                        .faces_of_dim(1)
                        .iter()
                        .all(|&e| self.link(e).map(|l| l.is_cycle()).unwrap_or(false))
                    && self
                        .faces_of_dim(2)
                        .iter()
                        .all(|&t| self.link(t).map(|l| l.is_two_points()).unwrap_or(false))
            }
            _ => unreachable!(),
        };
        Ok((ok, d as usize))
    }

    /// Orientability of a closed pseudomanifold, decided by propagating
    /// facet orientations across ridges.
    pub fn is_orientable(&self) -> Result<bool> {
        let (is_mfd, _) = self.is_closed_manifold()?;
        if !is_mfd {
            return domain("orientability is only defined for closed manifolds here");
        }
        let d = self.dim().unwrap();
        if d == 0 {
            return Ok(true);
        }
        // ridge -> (facet index, sign of removed vertex position)
        let mut ridge_map: HashMap<VertexSet, Vec<(usize, i32)>> = HashMap::new();
        for (fi, f) in self.facets.iter().enumerate() {
            for (pos, v) in f.iter().enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                ridge_map.entry(f.remove(v)).or_default().push((fi, sign));
            }
        }
        for adj in ridge_map.values() {
            if adj.len() != 2 {
                return domain("not a closed pseudomanifold: ridge not in exactly two facets");
            }
        }
        let mut orient: Vec<i32> = vec![0; self.facets.len()];
        for start in 0..self.facets.len() {
            if orient[start] != 0 {
                continue;
            }
            orient[start] = 1;
            let mut stack = vec![start];
            while let Some(fi) = stack.pop() {
                for (pos, v) in self.facets[fi].iter().enumerate() {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    let ridge = self.facets[fi].remove(v);
                    let adj = &ridge_map[&ridge];
                    let (gi, gsign) = if adj[0].0 == fi { adj[1] } else { adj[0] };
                    // Induced orientations on the shared ridge must cancel.
                    let needed = -orient[fi] * sign * gsign;
                    if orient[gi] == 0 {
                        orient[gi] = needed;
                        stack.push(gi);
                    } else if orient[gi] != needed {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Stellar exchange: replace `∂b * ā * L` by `∂a * b̄ * L` where
    /// `link(a) = ∂b * L`.
    pub fn flip(&self, a: VertexSet, b: VertexSet) -> Result<SimplicialComplex> {
        if a.is_empty() || !self.contains(a) {
            return domain("flip: a must be a nonempty face");
        }
        if b.is_empty() {
            return domain("flip: b must be nonempty");
        }
        let link_a = self.link(a)?;
        if link_a.contains(b) {
            return domain("flip: b must not be a face of link(a)");
        }
        // Candidate co-factor L: the link in link(a) of a facet of ∂b.
        for v in b.iter() {
            let bf = b.remove(v);
            if !link_a.contains(bf) {
                return domain(format!("flip: link(a) does not contain ∂b (missing {bf})"));
            }
        }
        let bf = b.remove(b.min_vertex().unwrap());
        let l = link_a.link(bf)?;
        // Verify link(a) = ∂b * L exactly.
        let boundary_b = if b.len() == 1 {
            SimplicialComplex::void(self.n_vertices)
        } else {
            SimplicialComplex::build_from_facets(b.boundary_faces().collect::<Vec<_>>(), self.n_vertices)?
        };
        let db_l = join_in_place(&boundary_b, &l, self.n_vertices)?;
        if face_set(&db_l) != face_set(&link_a) {
            return domain("flip: link(a) does not decompose as ∂b * L");
        }
        // faces(K') = (faces(K) \ faces(∂b * ā * L)) ∪ faces(∂a * b̄ * L)
        let bar_a = SimplicialComplex::build_from_facets([a], self.n_vertices)?;
        let boundary_a = if a.len() == 1 {
            SimplicialComplex::void(self.n_vertices)
        } else {
            SimplicialComplex::build_from_facets(a.boundary_faces().collect::<Vec<_>>(), self.n_vertices)?
        };
        let bar_b = SimplicialComplex::build_from_facets([b], self.n_vertices)?;
        let removed = join_in_place(&join_in_place(&boundary_b, &bar_a, self.n_vertices)?, &l, self.n_vertices)?;
        let added = join_in_place(&join_in_place(&boundary_a, &bar_b, self.n_vertices)?, &l, self.n_vertices)?;
        let mut faces: HashSet<VertexSet> = face_set(self);
        for f in face_set(&removed) {
            faces.remove(&f);
        }
        faces.extend(face_set(&added));
        let (maximal, _) = maximal_antichain(faces.into_iter().collect());
        let mut k = SimplicialComplex::build_from_facets(maximal, self.n_vertices)?;
        k.normalized_input = false;
        Ok(k)
    }

    /// Simplicial isomorphism test via backtracking on support bijections,
    /// pruned by valency profiles. Intended for the small link models used
    /// in classification.
    pub fn is_isomorphic_to(&self, other: &SimplicialComplex) -> bool {
        if self.f_vector() != other.f_vector() {
            return false;
        }
        let sup_a = self.support().to_vec();
        let sup_b = other.support().to_vec();
        if sup_a.len() != sup_b.len() {
            return false;
        }
        let profile = |k: &SimplicialComplex, v: usize| {
            let mut nb: Vec<usize> = (0..k.n_vertices)
                .filter(|&w| w != v && k.contains(VertexSet::from_vertices([v, w])))
                .map(|w| k.valency(VertexSet::singleton(w)))
                .collect();
            nb.sort();
            (k.valency(VertexSet::singleton(v)), nb)
        };
        let prof_a: Vec<_> = sup_a.iter().map(|&v| profile(self, v)).collect();
        let prof_b: Vec<_> = sup_b.iter().map(|&v| profile(other, v)).collect();
        {
            let mut pa = prof_a.clone();
            let mut pb = prof_b.clone();
            pa.sort();
            pb.sort();
            if pa != pb {
                return false;
            }
        }
        let facet_set_b: HashSet<VertexSet> = other.facets.iter().copied().collect();
        // map[i] = image of sup_a[i] in sup_b
        fn backtrack(
            i: usize,
            sup_a: &[usize],
            sup_b: &[usize],
            prof_a: &[(usize, Vec<usize>)],
            prof_b: &[(usize, Vec<usize>)],
            used: &mut Vec<bool>,
            map: &mut HashMap<usize, usize>,
            a: &SimplicialComplex,
            b: &SimplicialComplex,
            facet_set_b: &HashSet<VertexSet>,
        ) -> bool {
            if i == sup_a.len() {
                return a
                    .facets
                    .iter()
                    .all(|f| facet_set_b.contains(&f.iter().map(|v| map[&v]).collect()));
            }
            for j in 0..sup_b.len() {
                if used[j] || prof_a[i] != prof_b[j] {
                    continue;
                }
                // adjacency consistency with already-mapped vertices
                let v = sup_a[i];
                let w = sup_b[j];
                let consistent = (0..i).all(|i2| {
                    let e_a = a.contains(VertexSet::from_vertices([v, sup_a[i2]]));
                    let e_b = b.contains(VertexSet::from_vertices([w, sup_b[i2]]));
                    let _ = e_b;
                    e_a == b.contains(VertexSet::from_vertices([w, map[&sup_a[i2]]]))
                });
                if !consistent {
                    continue;
                }
                used[j] = true;
                map.insert(v, w);
                if backtrack(i + 1, sup_a, sup_b, prof_a, prof_b, used, map, a, b, facet_set_b) {
                    return true;
                }
                used[j] = false;
                map.remove(&v);
            }
            false
        }
        let mut used = vec![false; sup_b.len()];
        let mut map = HashMap::new();
        backtrack(
            0,
            &sup_a,
            &sup_b,
            &prof_a,
            &prof_b,
            &mut used,
            &mut map,
            self,
            other,
            &facet_set_b,
        )
    }
}

fn face_set(k: &SimplicialComplex) -> HashSet<VertexSet> {
    k.all_faces().into_iter().collect()
}

/// Join of two complexes already living on the same vertex universe with
/// disjoint supports (no re-indexing).
pub fn join_in_place(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    n_vertices: usize,
) -> Result<SimplicialComplex> {
    if a.is_empty_complex() || b.is_empty_complex() {
        return Ok(SimplicialComplex::empty(n_vertices));
    }
    if !a.support().is_disjoint(b.support()) {
        return domain("join_in_place: supports are not disjoint");
    }
    let mut facets = Vec::new();
    for f in a.facets() {
        for g in b.facets() {
            facets.push(f.union(*g));
        }
    }
    let mut k = SimplicialComplex::build_from_facets(facets, n_vertices)?;
    k.normalized_input = false;
    Ok(k)
}
