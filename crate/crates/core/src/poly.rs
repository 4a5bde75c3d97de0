//! Sparse multivariate polynomials over exact rationals.
//!
//! A `Ring` carries the variable registry, a truncation weight per
//! variable, and an optional truncation order: monomials whose total
//! weighted degree exceeds the order are discarded by every operation.
//! Deformation parameters get weight 1 and coordinate variables weight 0,
//! so truncation is exactly "mod parameter degree > N".
//!
//! The module also provides degree-reverse-lexicographic monomial orders,
//! multivariate division, Buchberger's algorithm with the product and
//! chain criteria (and an S-polynomial self-check on the result), and the
//! dimension of a leading-term quotient via a minimum hitting set.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num::rational::BigRational;
use num::traits::{One, Zero};
use num::BigInt;

use crate::error::{domain, unsupported, Result};

/// Sorted sparse exponent vector; exponents are always >= 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(pub Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(v, e)), Some(&(w, f))) if v == w => {
                    out.push((v, e + f));
                    i += 1;
                    j += 1;
                }
                (Some(&(v, e)), Some(&(w, _))) if v < w => {
                    out.push((v, e));
                    i += 1;
                }
                (Some(_), Some(&(w, f))) => {
                    out.push((w, f));
                    j += 1;
                }
                (Some(&(v, e)), None) => {
                    out.push((v, e));
                    i += 1;
                }
                (None, Some(&(w, f))) => {
                    out.push((w, f));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// other / self; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .filter_map(|&(v, e)| {
                    let q = e - self.exponent(v);
                    (q > 0).then_some((v, q))
                })
                .collect(),
        )
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut vars: Vec<usize> = self.0.iter().chain(&other.0).map(|&(v, _)| v).collect();
        vars.sort_unstable();
        vars.dedup();
        Monomial(
            vars.into_iter()
                .map(|v| (v, self.exponent(v).max(other.exponent(v))))
                .collect(),
        )
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().map(|&(v, _)| v).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly(pub BTreeMap<Monomial, BigRational>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn constant_term(&self) -> BigRational {
        self.0.get(&Monomial::one()).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub struct Ring {
    names: Vec<String>,
    index: HashMap<String, usize>,
    weights: Vec<u32>,
    pub truncation: Option<u32>,
}

impl Ring {
    pub fn new(truncation: Option<u32>) -> Ring {
        Ring {
            names: Vec::new(),
            index: HashMap::new(),
            weights: Vec::new(),
            truncation,
        }
    }

    /// Register a variable; weight 1 for truncated parameters, 0 for
    /// coordinates. Re-registering with the same weight returns the
    /// existing index.
    pub fn add_var(&mut self, name: &str, weight: u32) -> usize {
        if let Some(&i) = self.index.get(name) {
            assert_eq!(self.weights[i], weight, "variable {name} re-registered with a different weight");
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.weights.push(weight);
        i
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn n_vars(&self) -> usize {
        self.names.len()
    }

    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        m.0.iter().map(|&(v, e)| self.weights[v] * e).sum()
    }

    pub(crate) fn keeps(&self, m: &Monomial) -> bool {
        match self.truncation {
            Some(n) => self.weighted_degree(m) <= n,
            None => true,
        }
    }

    pub fn constant(&self, c: BigRational) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(&self, n: i64) -> Poly {
        self.constant(rat(n))
    }

    pub fn var(&self, v: usize) -> Poly {
        let mut p = Poly::zero();
        if self.keeps(&Monomial::var(v)) {
            p.add_term(Monomial::var(v), BigRational::one());
        }
        p
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = a.clone();
        for (m, c) in &b.0 {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = a.clone();
        for (m, c) in &b.0 {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly(a.0.iter().map(|(m, c)| (m.clone(), -c.clone())).collect())
    }

    pub fn scale(&self, a: &Poly, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(a.0.iter().map(|(m, v)| (m.clone(), v * c)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &a.0 {
            for (mb, cb) in &b.0 {
                let m = ma.mul(mb);
                if self.keeps(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    pub fn mul_term(&self, a: &Poly, m: &Monomial, c: &BigRational) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &a.0 {
            let mm = ma.mul(m);
            if self.keeps(&mm) {
                out.add_term(mm, ca * c);
            }
        }
        out
    }

    pub fn pow(&self, a: &Poly, k: u32) -> Poly {
        let mut out = self.int(1);
        for _ in 0..k {
            out = self.mul(&out, a);
            if out.is_zero() {
                break;
            }
        }
        out
    }

    pub fn sum<I: IntoIterator<Item = Poly>>(&self, it: I) -> Poly {
        let mut out = Poly::zero();
        for p in it {
            out = self.add(&out, &p);
        }
        out
    }

    pub fn product<I: IntoIterator<Item = Poly>>(&self, it: I) -> Poly {
        let mut out = self.int(1);
        for p in it {
            out = self.mul(&out, &p);
        }
        out
    }

    /// Substitute polynomials for variables; unmapped variables persist.
    pub fn substitute(&self, p: &Poly, map: &HashMap<usize, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &p.0 {
            let mut term = self.constant(c.clone());
            for &(v, e) in &m.0 {
                let factor = match map.get(&v) {
                    Some(q) => self.pow(q, e),
                    None => {
                        let mut q = Poly::zero();
                        q.add_term(Monomial(vec![(v, e)]), BigRational::one());
                        q
                    }
                };
                term = self.mul(&term, &factor);
                if term.is_zero() {
                    break;
                }
            }
            out = self.add(&out, &term);
        }
        // re-apply truncation in case unmapped monomials slipped through
        out.0.retain(|m, _| self.keeps(m));
        out
    }

    /// Inverse of a unit c + h where h has weighted degree >= 1 on every
    /// monomial, by the geometric series up to the truncation order.
    pub fn invert_unit(&self, p: &Poly) -> Result<Poly> {
        let n = match self.truncation {
            Some(n) => n,
            None => return unsupported("unit inversion needs a truncation order"),
        };
        let c = p.constant_term();
        if c.is_zero() {
            return domain("not a unit: zero constant term");
        }
        let mut h = self.scale(p, &(BigRational::one() / &c));
        h.add_term(Monomial::one(), -BigRational::one());
        if h.0.keys().any(|m| self.weighted_degree(m) == 0) {
            return unsupported("unit inversion needs the non-constant part to carry parameters");
        }
        let mut acc = self.int(1);
        let mut term = self.int(1);
        for _ in 0..=n {
            term = self.neg(&self.mul(&term, &h));
            if term.is_zero() {
                break;
            }
            acc = self.add(&acc, &term);
        }
        Ok(self.scale(&acc, &(BigRational::one() / c)))
    }

    pub fn derivative(&self, p: &Poly, v: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &p.0 {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let m2 = Monomial(
                m.0.iter()
                    .filter_map(|&(w, f)| {
                        if w == v {
                            (f > 1).then_some((w, f - 1))
                        } else {
                            Some((w, f))
                        }
                    })
                    .collect(),
            );
            out.add_term(m2, c * rat(e as i64));
        }
        out
    }

    pub fn evaluate(&self, p: &Poly, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &p.0 {
            let mut v = c.clone();
            for &(w, e) in &m.0 {
                for _ in 0..e {
                    v *= &point[w];
                }
            }
            total += v;
        }
        total
    }

    /// Terms in descending degrevlex (all variables), for stable output.
    pub fn term_list<'a>(&self, p: &'a Poly) -> Vec<(&'a Monomial, &'a BigRational)> {
        let ord = MonomialOrder::all(self.n_vars());
        let mut terms: Vec<_> = p.0.iter().collect();
        terms.sort_by(|a, b| ord.cmp(b.0, a.0));
        terms
    }

    pub fn format(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.term_list(p).into_iter().enumerate() {
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_is_one = abs.is_one();
            if !coeff_is_one || m.is_one() {
                out.push_str(&abs.to_string());
                if !m.is_one() {
                    out.push('*');
                }
            }
            let parts: Vec<String> = m
                .0
                .iter()
                .map(|&(v, e)| {
                    if e == 1 {
                        self.name(v).to_string()
                    } else {
                        format!("{}^{}", self.name(v), e)
                    }
                })
                .collect();
            out.push_str(&parts.join("*"));
        }
        out
    }
}

/// Degree-reverse-lexicographic order on the listed variables (highest
/// priority first), refined on the remaining variables by graded lex so
/// the order is total and multiplicative.
pub struct MonomialOrder {
    pub vars: Vec<usize>,
    in_vars: Vec<bool>,
}

impl MonomialOrder {
    pub fn new(vars: Vec<usize>) -> MonomialOrder {
        let n = vars.iter().copied().max().map_or(0, |m| m + 1);
        let mut in_vars = vec![false; n];
        for &v in &vars {
            in_vars[v] = true;
        }
        MonomialOrder { vars, in_vars }
    }

    pub fn all(n_vars: usize) -> MonomialOrder {
        MonomialOrder::new((0..n_vars).collect())
    }

    fn contains(&self, v: usize) -> bool {
        v < self.in_vars.len() && self.in_vars[v]
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let da: u32 = a.0.iter().filter(|&&(v, _)| self.contains(v)).map(|&(_, e)| e).sum();
        let db: u32 = b.0.iter().filter(|&&(v, _)| self.contains(v)).map(|&(_, e)| e).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        // revlex: scanning from the lowest-priority variable, the first
        // difference decides, with the smaller exponent winning
        for &v in self.vars.iter().rev() {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        // graded lex on the leftover variables
        let rest = |m: &Monomial| -> Vec<(usize, u32)> {
            m.0.iter().copied().filter(|&(v, _)| !self.contains(v)).collect()
        };
        let (ra, rb) = (rest(a), rest(b));
        let ta: u32 = ra.iter().map(|&(_, e)| e).sum();
        let tb: u32 = rb.iter().map(|&(_, e)| e).sum();
        match ta.cmp(&tb) {
            Ordering::Equal => {}
            o => return o,
        }
        for (x, y) in ra.iter().zip(rb.iter()) {
            match y.0.cmp(&x.0).then(x.1.cmp(&y.1)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl MonomialOrder {
    /// Encode the order as a lexicographically comparable key (larger key
    /// means larger monomial), so term maps can be kept sorted.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let mut key = Vec::with_capacity(self.vars.len() + 2);
        let d: i64 = m
            .0
            .iter()
            .filter(|&&(v, _)| self.contains(v))
            .map(|&(_, e)| e as i64)
            .sum();
        key.push(d);
        for &v in self.vars.iter().rev() {
            key.push(-(m.exponent(v) as i64));
        }
        let rest: Vec<(usize, u32)> = m
            .0
            .iter()
            .copied()
            .filter(|&(v, _)| !self.contains(v))
            .collect();
        key.push(rest.iter().map(|&(_, e)| e as i64).sum());
        for (v, e) in rest {
            key.push(-(v as i64));
            key.push(e as i64);
        }
        key
    }
}

pub fn leading_term<'a>(p: &'a Poly, ord: &MonomialOrder) -> Option<(&'a Monomial, &'a BigRational)> {
    p.0.iter().max_by(|a, b| ord.cmp(a.0, b.0))
}

/// Full normal form of `p` with respect to `basis` (every term reduced).
pub fn reduce(ring: &Ring, p: &Poly, basis: &[Poly], ord: &MonomialOrder) -> Poly {
    let lts: Vec<(Monomial, BigRational)> = basis
        .iter()
        .filter_map(|g| leading_term(g, ord).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut work: BTreeMap<Vec<i64>, (Monomial, BigRational)> = p
        .0
        .iter()
        .map(|(m, c)| (ord.key(m), (m.clone(), c.clone())))
        .collect();
    let mut out = Poly::zero();
    while let Some((_, (m, c))) = work.pop_last() {
        let hit = lts.iter().enumerate().find(|(_, (lm, _))| lm.divides(&m));
        match hit {
            Some((gi, (lm, lc))) => {
                let q = lm.div_into(&m);
                let factor = &c / lc;
                for (gm, gc) in &basis[gi].0 {
                    let nm = gm.mul(&q);
                    if nm == m || !ring.keeps(&nm) {
                        continue;
                    }
                    let delta = gc * &factor;
                    match work.entry(ord.key(&nm)) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert((nm, -delta));
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            e.get_mut().1 -= delta;
                            if e.get().1.is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
            None => {
                out.add_term(m, c);
            }
        }
    }
    out
}

fn s_poly(ring: &Ring, f: &Poly, g: &Poly, ord: &MonomialOrder) -> Poly {
    let (lf, cf) = leading_term(f, ord).expect("s_poly of zero");
    let (lg, cg) = leading_term(g, ord).expect("s_poly of zero");
    let l = lf.lcm(lg);
    let a = ring.mul_term(f, &lf.div_into(&l), &(BigRational::one() / cf));
    let b = ring.mul_term(g, &lg.div_into(&l), &(BigRational::one() / cg));
    ring.sub(&a, &b)
}

/// Buchberger with the product and chain criteria. The returned basis is
/// interreduced and monic, and every S-polynomial of the result is checked
/// to reduce to zero before returning.
pub fn buchberger(ring: &Ring, gens: &[Poly], ord: &MonomialOrder) -> Result<Vec<Poly>> {
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let lc = leading_term(g, ord).unwrap().1.clone();
        basis.push(ring.scale(g, &(BigRational::one() / lc)));
    }
    let mut lts: Vec<Monomial> = basis
        .iter()
        .map(|g| leading_term(g, ord).unwrap().0.clone())
        .collect();
    // normal strategy: smallest lcm degree first
    let mut pairs: std::collections::BinaryHeap<std::cmp::Reverse<(u32, usize, usize)>> =
        std::collections::BinaryHeap::new();
    let mut done: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push(std::cmp::Reverse((lts[i].lcm(&lts[j]).total_degree(), i, j)));
        }
    }
    while let Some(std::cmp::Reverse((_, i, j))) = pairs.pop() {
        done.insert((i, j));
        if lts[i].gcd_is_one(&lts[j]) {
            continue;
        }
        let lcm = lts[i].lcm(&lts[j]);
        // chain criterion: a third element dividing the lcm whose pairs
        // with i and j are both settled lets us skip this pair
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lts[k].divides(&lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let r = reduce(ring, &s_poly(ring, &basis[i], &basis[j], ord), &basis, ord);
        if r.is_zero() {
            continue;
        }
        let lc = leading_term(&r, ord).unwrap().1.clone();
        let r = ring.scale(&r, &(BigRational::one() / lc));
        let new = basis.len();
        lts.push(leading_term(&r, ord).unwrap().0.clone());
        basis.push(r);
        for k in 0..new {
            pairs.push(std::cmp::Reverse((lts[k].lcm(&lts[new]).total_degree(), k, new)));
        }
    }
    // interreduce: drop elements whose leading term another divides, then
    // tail-reduce each survivor against the others
    let mut keep: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = leading_term(g, ord).unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            if i == j {
                return false;
            }
            let lh = leading_term(h, ord).unwrap().0;
            lh.divides(lg) && (lh != lg || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced: Vec<Poly> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<Poly> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = reduce(ring, &keep[i], &others, ord);
        if !r.is_zero() {
            reduced.push(r);
        }
    }
    // self-check: S-polynomials of the final basis all reduce to zero
    for i in 0..reduced.len() {
        for j in i + 1..reduced.len() {
            let r = reduce(ring, &s_poly(ring, &reduced[i], &reduced[j], ord), &reduced, ord);
            if !r.is_zero() {
                return domain("Buchberger self-check failed: nonzero S-polynomial remainder");
            }
        }
    }
    Ok(reduced)
}

/// Krull dimension of k[x_1..x_n] / (monomial ideal with the given
/// minimal-generator supports): the maximum size of a variable set meeting
/// no support, found as n minus a minimum hitting set by branch and bound.
pub fn dimension_of_lt_quotient(n_vars: usize, supports: &[Vec<usize>]) -> Result<usize> {
    if supports.iter().any(|s| s.is_empty()) {
        return domain("leading-term ideal contains a unit");
    }
    let mut supports: Vec<Vec<usize>> = supports.to_vec();
    supports.sort_by_key(|s| s.len());
    let mut best = supports.len(); // hitting one var per support always works
    fn branch(supports: &[Vec<usize>], hit: &mut Vec<usize>, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        let unhit = supports
            .iter()
            .find(|s| !s.iter().any(|v| hit.contains(v)));
        let s = match unhit {
            None => {
                *best = size;
                return;
            }
            Some(s) => s.clone(),
        };
        for v in s {
            hit.push(v);
            branch(supports, hit, size + 1, best);
            hit.pop();
        }
    }
    branch(&supports, &mut Vec::new(), 0, &mut best);
    Ok(n_vars - best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> (Ring, usize, usize, usize) {
        let mut r = Ring::new(None);
        let x = r.add_var("x", 1);
        let y = r.add_var("y", 1);
        let z = r.add_var("z", 1);
        (r, x, y, z)
    }

    #[test]
    fn arithmetic_and_truncation() {
        let mut r = Ring::new(Some(2));
        let t = r.add_var("t", 1);
        let y = r.add_var("y", 0);
        let p = r.add(&r.var(t), &r.var(y)); // t + y
        let cube = r.pow(&p, 3);
        // t^3 dropped, y^3 + 3y^2 t + 3y t^2 kept
        assert_eq!(cube.0.len(), 3);
        let yy = r.pow(&r.var(y), 7);
        assert_eq!(yy.0.len(), 1);
    }

    #[test]
    fn geometric_inverse() {
        let mut r = Ring::new(Some(5));
        let t = r.add_var("t", 1);
        let u = r.add(&r.int(1), &r.var(t)); // 1 + t
        let inv = r.invert_unit(&u).unwrap();
        assert_eq!(r.mul(&u, &inv), r.int(1));
        assert!(r.invert_unit(&r.var(t)).is_err());
    }

    #[test]
    fn degrevlex_basics() {
        let (_, x, y, z) = ring3();
        let ord = MonomialOrder::all(3);
        let m = |v: &[(usize, u32)]| Monomial(v.to_vec());
        // x^2 > xy > y^2 > xz > yz > z^2 in degrevlex
        let seq = [
            m(&[(x, 2)]),
            m(&[(x, 1), (y, 1)]),
            m(&[(y, 2)]),
            m(&[(x, 1), (z, 1)]),
            m(&[(y, 1), (z, 1)]),
            m(&[(z, 2)]),
        ];
        for w in seq.windows(2) {
            assert_eq!(ord.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn buchberger_on_a_twisted_cubic() {
        // I = (x^2 - y, x^3 - z): GB adds xy - z, y^2 - xz etc.; quotient
        // is the coordinate ring of a curve, dimension 1
        let (r, x, y, z) = ring3();
        let ord = MonomialOrder::all(3);
        let g1 = r.sub(&r.pow(&r.var(x), 2), &r.var(y));
        let g2 = r.sub(&r.pow(&r.var(x), 3), &r.var(z));
        let gb = buchberger(&r, &[g1, g2], &ord).unwrap();
        let supports: Vec<Vec<usize>> = gb
            .iter()
            .map(|g| leading_term(g, &ord).unwrap().0.support())
            .collect();
        assert_eq!(dimension_of_lt_quotient(3, &supports).unwrap(), 1);
    }

    #[test]
    fn generic_minors_have_codimension_two() {
        let mut r = Ring::new(None);
        let v: Vec<usize> = (0..6).map(|i| r.add_var(&format!("a{i}"), 1)).collect();
        let minor = |i: usize, j: usize| {
            r.sub(
                &r.mul(&r.var(v[i]), &r.var(v[j + 3])),
                &r.mul(&r.var(v[j]), &r.var(v[i + 3])),
            )
        };
        let gens = vec![minor(0, 1), minor(0, 2), minor(1, 2)];
        let ord = MonomialOrder::all(6);
        let gb = buchberger(&r, &gens, &ord).unwrap();
        let supports: Vec<Vec<usize>> = gb
            .iter()
            .map(|g| leading_term(g, &ord).unwrap().0.support())
            .collect();
        assert_eq!(dimension_of_lt_quotient(6, &supports).unwrap(), 4);
    }

    #[test]
    fn reduction_normal_form() {
        let (r, x, y, _) = ring3();
        let ord = MonomialOrder::all(3);
        let g = r.sub(&r.pow(&r.var(x), 2), &r.var(y)); // x^2 - y
        let p = r.pow(&r.var(x), 4); // -> y^2
        let nf = reduce(&r, &p, &[g], &ord);
        assert_eq!(nf, r.pow(&r.var(y), 2));
    }

    #[test]
    fn dimension_of_zero_ideal() {
        assert_eq!(dimension_of_lt_quotient(7, &[]).unwrap(), 7);
    }

    #[test]
    fn substitution_and_derivative() {
        let (r, x, y, z) = ring3();
        let p = r.add(&r.mul(&r.var(x), &r.var(y)), &r.pow(&r.var(z), 2));
        let mut map = HashMap::new();
        map.insert(x, r.int(0));
        assert_eq!(r.substitute(&p, &map), r.pow(&r.var(z), 2));
        let d = r.derivative(&p, z);
        assert_eq!(d, r.scale(&r.var(z), &rat(2)));
        assert_eq!(
            r.evaluate(&p, &[rat(1), rat(2), rat(3)]),
            rat(11)
        );
    }
}
