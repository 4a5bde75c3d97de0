//! Registry of named complexes.
//!
//! Identifier grammar: `simplex:n`, `boundary-simplex:n`, `cycle:n` (n ≥ 3),
//! `chain:n` (n ≥ 1), `cyclic3:n` (n ≥ 5), `cyclic4:8`, `torus:n` (n ≥ 7),
//! `octahedron`, `icosahedron`, and `suspension:<name>`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vset::VertexSet;

fn vs(vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(vs.iter().copied())
}

/// The full simplex on n+1 vertices.
pub fn simplex(n: usize) -> SimplicialComplex {
    SimplicialComplex::build_from_facets([VertexSet::from_vertices(0..=n)], n + 1)
        .expect("simplex construction")
}

/// Boundary of the n-simplex.
pub fn boundary_simplex(n: usize) -> SimplicialComplex {
    let full = VertexSet::from_vertices(0..=n);
    SimplicialComplex::build_from_facets(full.boundary_faces().collect::<Vec<_>>(), n + 1)
        .expect("boundary simplex construction")
}

/// The n-gon boundary E_n: edges {i, i+1 mod n}.
pub fn cycle(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::Parse(format!("cycle:{n}: need n >= 3")));
    }
    let facets: Vec<VertexSet> = (0..n).map(|i| vs(&[i, (i + 1) % n])).collect();
    SimplicialComplex::build_from_facets(facets, n)
}

/// The chain C_n of n 1-simplices on n+1 vertices.
pub fn chain(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::Parse(format!("chain:{n}: need n >= 1")));
    }
    let facets: Vec<VertexSet> = (0..n).map(|i| vs(&[i, i + 1])).collect();
    SimplicialComplex::build_from_facets(facets, n + 1)
}

/// Boundary of the 3-dimensional cyclic polytope with n vertices, built as
/// ∂Δ1 * C_{n-3} ∪ ∂C_{n-3} * Δ1 with [Δ1] = {0, n-1} and
/// [C_{n-3}] = {1, ..., n-2}.
pub fn cyclic3(n: usize) -> Result<SimplicialComplex> {
    if n < 5 {
        return Err(Error::Parse(format!("cyclic3:{n}: need n >= 5")));
    }
    let mut facets = Vec::with_capacity(2 * n - 4);
    for i in 1..=n - 3 {
        facets.push(vs(&[0, i, i + 1]));
        facets.push(vs(&[n - 1, i, i + 1]));
    }
    facets.push(vs(&[0, 1, n - 1]));
    facets.push(vs(&[0, n - 2, n - 1]));
    SimplicialComplex::build_from_facets(facets, n)
}

/// Boundary of the 4-dimensional cyclic polytope with 8 vertices: the 20
/// tetrahedra {i,i+1,i+2,i+3}, {i,i+1,i+3,i+4} (i mod 8) and the four
/// distinct sets of the form {i,i+1,i+4,i+5}.
pub fn cyclic4_8() -> SimplicialComplex {
    let m = |x: usize| x % 8;
    let mut facets = Vec::with_capacity(20);
    for i in 0..8 {
        facets.push(vs(&[i, m(i + 1), m(i + 2), m(i + 3)]));
        facets.push(vs(&[i, m(i + 1), m(i + 3), m(i + 4)]));
    }
    for i in 0..4 {
        facets.push(vs(&[i, m(i + 1), m(i + 4), m(i + 5)]));
    }
    SimplicialComplex::build_from_facets(facets, 8).expect("cyclic4:8 construction")
}

/// The torus triangulation T_{n,1,2}: facets {i,i+2,i+3} and {i,i+1,i+3}
/// mod n, for n ≥ 7.
pub fn torus(n: usize) -> Result<SimplicialComplex> {
    if n < 7 {
        return Err(Error::Parse(format!("torus:{n}: need n >= 7")));
    }
    let mut facets = Vec::with_capacity(2 * n);
    for i in 0..n {
        facets.push(vs(&[i, (i + 2) % n, (i + 3) % n]));
        facets.push(vs(&[i, (i + 1) % n, (i + 3) % n]));
    }
    SimplicialComplex::build_from_facets(facets, n)
}

/// Octahedron = join of three pairs of points; diagonals {0,1},{2,3},{4,5}.
pub fn octahedron() -> SimplicialComplex {
    boundary_simplex(1)
        .join(&boundary_simplex(1))
        .and_then(|k| k.join(&boundary_simplex(1)))
        .expect("octahedron construction")
}

/// The regular icosahedron on 12 vertices.
pub fn icosahedron() -> SimplicialComplex {
    let facets = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [11, 6, 7],
        [11, 7, 8],
        [11, 8, 9],
        [11, 9, 10],
        [11, 10, 6],
        [1, 2, 6],
        [2, 6, 7],
        [2, 3, 7],
        [3, 7, 8],
        [3, 4, 8],
        [4, 8, 9],
        [4, 5, 9],
        [5, 9, 10],
        [5, 1, 10],
        [1, 10, 6],
    ];
    SimplicialComplex::build_from_facets(facets.iter().map(|f| vs(f)), 12)
        .expect("icosahedron construction")
}

pub fn named_complex(name: &str) -> Result<SimplicialComplex> {
    let (head, rest) = match name.split_once(':') {
        Some((h, r)) => (h, Some(r)),
        None => (name, None),
    };
    let param = |rest: Option<&str>| -> Result<usize> {
        rest.ok_or_else(|| Error::Parse(format!("{head}: missing parameter")))?
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("{name}: parameter is not a number")))
    };
    match head {
        "simplex" => Ok(simplex(param(rest)?)),
        "boundary-simplex" => Ok(boundary_simplex(param(rest)?)),
        "cycle" => cycle(param(rest)?),
        "chain" => chain(param(rest)?),
        "cyclic3" => cyclic3(param(rest)?),
        "cyclic4" => {
            let n = param(rest)?;
            if n == 8 {
                Ok(cyclic4_8())
            } else {
                Err(Error::Parse(format!("cyclic4:{n}: only cyclic4:8 is available")))
            }
        }
        "torus" => torus(param(rest)?),
        "octahedron" => Ok(octahedron()),
        "icosahedron" => Ok(icosahedron()),
        "suspension" => {
            let inner = rest.ok_or_else(|| Error::Parse("suspension: missing inner name".into()))?;
            named_complex(inner)?.suspension()
        }
        _ => Err(Error::Parse(format!("unknown complex name: {name}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic3_7_is_a_small_sphere() {
        let k = cyclic3(7).unwrap();
        assert_eq!(k.f_vector(), vec![7, 15, 10]);
        assert_eq!(k.is_closed_manifold().unwrap(), (true, 2));
        assert_eq!(k.euler_characteristic(), 2);
    }

    #[test]
    fn torus_7_counts() {
        let k = torus(7).unwrap();
        assert_eq!(k.f_vector(), vec![7, 21, 14]);
        assert_eq!(k.euler_characteristic(), 0);
        assert_eq!(k.is_closed_manifold().unwrap(), (true, 2));
        for v in 0..7 {
            assert_eq!(k.valency(VertexSet::singleton(v)), 6);
        }
    }

    #[test]
    fn torus_7_vertex_links_are_hexagons() {
        // link({i}) is the hexagon i+2, i+3, i+1, i-2, i-3, i-1 (mod 7).
        let k = torus(7).unwrap();
        let l = k.link(VertexSet::singleton(0)).unwrap();
        let expect = [2usize, 3, 1, 5, 4, 6];
        for w in 0..6 {
            let e = vs(&[expect[w], expect[(w + 1) % 6]]);
            assert!(l.contains(e), "missing hexagon edge {e}");
        }
        assert_eq!(l.f_vector(), vec![6, 6]);
    }

    #[test]
    fn icosahedron_counts() {
        let k = icosahedron();
        assert_eq!(k.f_vector(), vec![12, 30, 20]);
        assert_eq!(k.euler_characteristic(), 2);
        assert_eq!(k.is_closed_manifold().unwrap(), (true, 2));
        for v in 0..12 {
            assert_eq!(k.valency(VertexSet::singleton(v)), 5);
        }
    }

    #[test]
    fn cyclic4_8_counts() {
        let k = cyclic4_8();
        assert_eq!(k.f_vector()[0], 8);
        assert_eq!(k.f_vector()[3], 20);
        assert_eq!(k.is_closed_manifold().unwrap(), (true, 3));
    }

    #[test]
    fn cyclic4_8_links_are_cyclic3_7() {
        let k = cyclic4_8();
        let model = cyclic3(7).unwrap();
        for v in 0..8 {
            let (l, _) = k.link(VertexSet::singleton(v)).unwrap().compactified();
            assert!(l.is_isomorphic_to(&model), "link of {v} not cyclic3:7");
        }
    }

    #[test]
    fn registry_parses() {
        assert_eq!(named_complex("cycle:4").unwrap().f_vector(), vec![4, 4]);
        let s = named_complex("suspension:cycle:6").unwrap();
        assert_eq!(s.f_vector(), vec![8, 18, 12]);
        assert!(named_complex("nope").is_err());
        assert!(named_complex("cycle:2").is_err());
    }
}
