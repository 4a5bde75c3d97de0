//! Multidegrees c = a − b for graded cotangent cohomology: a is an
//! exponent vector with entries ≥ 1 on its support, b is a squarefree
//! vertex set, and the two supports are disjoint.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multidegree {
    /// Positive part: (vertex, exponent) pairs sorted by vertex, exponents ≥ 1.
    pub a: Vec<(usize, u32)>,
    /// Negative squarefree part.
    pub b: VertexSet,
}

impl Multidegree {
    pub fn new(a: Vec<(usize, u32)>, b: VertexSet) -> Result<Multidegree> {
        let mut a = a;
        a.sort_by_key(|(v, _)| *v);
        for w in a.windows(2) {
            if w[0].0 == w[1].0 {
                return domain(format!("repeated vertex {} in positive part", w[0].0));
            }
        }
        if a.iter().any(|&(_, e)| e == 0) {
            return domain("positive part has a zero exponent");
        }
        let support: VertexSet = a.iter().map(|&(v, _)| v).collect();
        if !support.is_disjoint(b) {
            return domain("positive and negative supports overlap");
        }
        Ok(Multidegree { a, b })
    }

    pub fn a_support(&self) -> VertexSet {
        self.a.iter().map(|&(v, _)| v).collect()
    }

    pub fn a_total(&self) -> u32 {
        self.a.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_degree_zero(&self) -> bool {
        self.a_total() as usize == self.b.len()
    }

    /// Exponent vector of length `n` (entries of `a`, −1 on `b`).
    pub fn to_exponent_vector(&self, n: usize) -> Result<Vec<i64>> {
        let mut out = vec![0i64; n];
        for &(v, e) in &self.a {
            if v >= n {
                return domain(format!("vertex {v} out of range 0..{n}"));
            }
            out[v] = e as i64;
        }
        for v in self.b.iter() {
            if v >= n {
                return domain(format!("vertex {v} out of range 0..{n}"));
            }
            out[v] = -1;
        }
        Ok(out)
    }

    pub fn from_exponent_vector(c: &[i64]) -> Result<Multidegree> {
        let mut a = Vec::new();
        let mut b = VertexSet::EMPTY;
        for (v, &e) in c.iter().enumerate() {
            if e > 0 {
                a.push((v, e as u32));
            } else if e == -1 {
                b = b.insert(v);
            } else if e < -1 {
                return domain(format!("entry {e} at vertex {v}: negative part must be squarefree"));
            }
        }
        Multidegree::new(a, b)
    }

    /// Parse "0:2,3:1" (vertex:exponent pairs; bare "0" means exponent 1).
    pub fn parse_a(s: &str) -> Result<Vec<(usize, u32)>> {
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|part| {
                let part = part.trim();
                let (v, e) = match part.split_once(':') {
                    Some((v, e)) => (v.trim(), e.trim().parse::<u32>().ok()),
                    None => (part, Some(1)),
                };
                let v = v
                    .parse::<usize>()
                    .map_err(|_| crate::error::Error::Parse(format!("bad vertex in '{part}'")))?;
                let e = e.ok_or_else(|| {
                    crate::error::Error::Parse(format!("bad exponent in '{part}'"))
                })?;
                Ok((v, e))
            })
            .collect()
    }

    /// Parse "1,4,7" as a vertex set.
    pub fn parse_b(s: &str) -> Result<VertexSet> {
        if s.trim().is_empty() {
            return Ok(VertexSet::EMPTY);
        }
        let mut b = VertexSet::EMPTY;
        for part in s.split(',') {
            let v = part.trim().parse::<usize>().map_err(|_| {
                crate::error::Error::Parse(format!("bad vertex '{}'", part.trim()))
            })?;
            if v >= crate::vset::MAX_VERTICES {
                return Err(crate::error::Error::Capacity(v + 1));
            }
            b = b.insert(v);
        }
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let d = Multidegree::new(vec![(0, 2)], Multidegree::parse_b("1,4,7").unwrap()).unwrap();
        let v = d.to_exponent_vector(8).unwrap();
        assert_eq!(v, vec![2, -1, 0, 0, -1, 0, 0, -1]);
        assert_eq!(Multidegree::from_exponent_vector(&v).unwrap(), d);
        assert!(!d.is_degree_zero());
        assert_eq!(d.a_total(), 2);
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(
            Multidegree::parse_a("0:2, 3:1").unwrap(),
            vec![(0, 2), (3, 1)]
        );
        assert_eq!(Multidegree::parse_a("5").unwrap(), vec![(5, 1)]);
        assert!(Multidegree::new(vec![(1, 1)], VertexSet::singleton(1)).is_err());
        assert!(Multidegree::from_exponent_vector(&[0, -2]).is_err());
    }
}
