//! Deformation equations for the affine cones over the polygon boundaries
//! E_3 through E_6, and versal base ideals for low-valency surface
//! triangulations.
//!
//! The normal forms are families of equations over a parameter algebra,
//! truncated in total parameter degree. For E_6 the parameter algebra is
//! itself cut out by the 2x2 minors of a 2x3 matrix of first-order
//! parameters, and verification of the relation liftings reduces modulo a
//! Groebner basis of those minors. For a closed surface with all vertex
//! valencies at most 6, the versal base ideal is generated by one such
//! minor triple per valency-6 vertex in the edge parameters.

use std::collections::{BTreeMap, HashMap};

use num::rational::BigRational;
use num::traits::{One, Zero};
use num::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{domain, unsupported, Error, Result};
use crate::homology::SparseMatrix;
use crate::poly::{
    buchberger, dimension_of_lt_quotient, leading_term, rat, reduce, Monomial, MonomialOrder,
    Poly, Ring,
};
use crate::vset::VertexSet;

/// Coefficients of the power series solving x p(x)^4 = p(x) + 1 with
/// p(0) = -1. All coefficients are integers; the residual of the
/// functional equation is checked to the requested order.
pub struct PSeries {
    pub order: u32,
    pub coefficients: Vec<BigInt>,
}

pub fn p_series(order: u32) -> Result<PSeries> {
    let mut ring = Ring::new(Some(order));
    let x = ring.add_var("x", 1);
    let mut p = ring.int(-1);
    // the fixed-point iteration gains one correct order per step
    for _ in 0..=order {
        let next = ring.add(&ring.int(-1), &ring.mul(&ring.var(x), &ring.pow(&p, 4)));
        if next == p {
            break;
        }
        p = next;
    }
    let residual = ring.sub(
        &ring.mul(&ring.var(x), &ring.pow(&p, 4)),
        &ring.add(&p, &ring.int(1)),
    );
    if !residual.is_zero() {
        return domain("functional equation residual is nonzero");
    }
    let mut coefficients = Vec::with_capacity(order as usize + 1);
    for k in 0..=order {
        let m = if k == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(x, k)])
        };
        let c = p.0.get(&m).cloned().unwrap_or_else(BigRational::zero);
        if !c.denom().is_one() {
            return domain(format!("non-integer series coefficient at order {k}"));
        }
        coefficients.push(c.numer().clone());
    }
    Ok(PSeries { order, coefficients })
}

/// Equations for a deformation of the cone over E_n, truncated at the
/// given total parameter degree.
pub struct NormalForm {
    pub n: usize,
    pub order: u32,
    pub ring: Ring,
    /// y-variable indices; entry i is y_{i+1}.
    pub y: Vec<usize>,
    pub equations: Vec<Poly>,
    /// Monomial each equation restricts to when all parameters vanish.
    pub lifts: Vec<String>,
    /// Relations on the parameter algebra (minors, n = 6 only).
    pub base_relations: Vec<Poly>,
}

/// n = 6 bookkeeping shared by the equations and the lifting check.
struct E6Series {
    t: Vec<usize>,  // t[i] = first-order parameter at vertex i+1
    s: Vec<Poly>,   // s[i] = higher-order series at vertex i+1
    e: Poly,
    f: Poly,
}

fn cyc(n: usize, i: i64) -> usize {
    (((i - 1).rem_euclid(n as i64)) + 1) as usize
}

impl NormalForm {
    fn yv(&self, i: i64) -> Poly {
        self.ring.var(self.y[cyc(self.n, i) - 1])
    }
}

pub fn normal_form(n: usize, order: u32) -> Result<NormalForm> {
    if !(3..=6).contains(&n) {
        return unsupported(format!("normal form defined for n in 3..=6, got {n}"));
    }
    if order < 1 {
        return domain("truncation order must be at least 1");
    }
    let mut ring = Ring::new(Some(order));
    let y: Vec<usize> = (1..=n).map(|i| ring.add_var(&format!("y{i}"), 0)).collect();
    let t_name = |i: usize, k: i32| format!("t{i}_{k}");
    match n {
        3 => {
            let u = ring.add_var("u", 1);
            let t: Vec<Vec<usize>> = (1..=3)
                .map(|i| (0..=order as i32).map(|k| ring.add_var(&t_name(i, k), 1)).collect())
                .collect();
            let big_t = |ring: &Ring, i: usize| {
                ring.sum((1..=order).map(|k| {
                    ring.mul(&ring.var(t[i - 1][k as usize]), &ring.pow(&ring.var(y[i - 1]), k))
                }))
            };
            let mut eq = ring.product((0..3).map(|i| ring.var(y[i])));
            eq = ring.add(&eq, &ring.var(u));
            for i in 1..=3 {
                let inner = ring.add(&ring.var(t[i - 1][0]), &big_t(&ring, i));
                eq = ring.add(&eq, &ring.mul(&ring.var(y[i - 1]), &inner));
            }
            Ok(NormalForm {
                n,
                order,
                y,
                equations: vec![eq],
                lifts: vec!["y1*y2*y3".to_string()],
                base_relations: Vec::new(),
                ring,
            })
        }
        4 => {
            let u = ring.add_var("u", 1);
            let v = ring.add_var("v", 1);
            let t: Vec<Vec<usize>> = (1..=4)
                .map(|i| {
                    std::iter::once(usize::MAX)
                        .chain((1..=order as i32).map(|k| ring.add_var(&t_name(i, k), 1)))
                        .collect()
                })
                .collect();
            let big_t = |ring: &Ring, i: usize| {
                ring.sum((1..=order).map(|k| {
                    ring.mul(
                        &ring.var(t[i - 1][k as usize]),
                        &ring.pow(&ring.var(y[i - 1]), k - 1),
                    )
                }))
            };
            let eq1 = ring.sum([
                ring.mul(&ring.var(y[0]), &ring.var(y[2])),
                ring.var(u),
                ring.mul(&ring.var(y[1]), &big_t(&ring, 2)),
                ring.mul(&ring.var(y[3]), &big_t(&ring, 4)),
            ]);
            let eq2 = ring.sum([
                ring.mul(&ring.var(y[1]), &ring.var(y[3])),
                ring.var(v),
                ring.mul(&ring.var(y[0]), &big_t(&ring, 1)),
                ring.mul(&ring.var(y[2]), &big_t(&ring, 3)),
            ]);
            Ok(NormalForm {
                n,
                order,
                y,
                equations: vec![eq1, eq2],
                lifts: vec!["y1*y3".to_string(), "y2*y4".to_string()],
                base_relations: Vec::new(),
                ring,
            })
        }
        5 => {
            let t: Vec<Vec<usize>> = (1..=5)
                .map(|i| {
                    std::iter::once(usize::MAX)
                        .chain((1..=order as i32).map(|k| ring.add_var(&t_name(i, k), 1)))
                        .collect()
                })
                .collect();
            let big_t = |ring: &Ring, i: usize| {
                ring.sum((1..=order).map(|k| {
                    ring.mul(
                        &ring.var(t[i - 1][k as usize]),
                        &ring.pow(&ring.var(y[i - 1]), k - 1),
                    )
                }))
            };
            let mut equations = Vec::new();
            let mut lifts = Vec::new();
            for i in 1..=5i64 {
                let eq = ring.sum([
                    ring.mul(&ring.var(y[cyc(5, i - 1) - 1]), &ring.var(y[cyc(5, i + 1) - 1])),
                    ring.mul(&ring.var(y[i as usize - 1]), &big_t(&ring, i as usize)),
                    ring.neg(&ring.mul(&big_t(&ring, cyc(5, i - 2)), &big_t(&ring, cyc(5, i + 2)))),
                ]);
                equations.push(eq);
                lifts.push(format!("y{}*y{}", cyc(5, i - 1), cyc(5, i + 1)));
            }
            Ok(NormalForm {
                n,
                order,
                y,
                equations,
                lifts,
                base_relations: Vec::new(),
                ring,
            })
        }
        _ => {
            let series = e6_series(&mut ring, &y, order)?;
            let base_relations = e6_minors(&ring, &series.t);
            let (equations, lifts) = e6_equations(&ring, &y, &series);
            Ok(NormalForm {
                n,
                order,
                y,
                equations,
                lifts,
                base_relations,
                ring,
            })
        }
    }
}

fn e6_series(ring: &mut Ring, y: &[usize], order: u32) -> Result<E6Series> {
    let mut t = Vec::new();
    let mut s = Vec::new();
    let mut tk: Vec<Vec<usize>> = Vec::new();
    for i in 1..=6 {
        t.push(ring.add_var(&format!("t{i}_1"), 1));
        tk.push((2..=order).map(|k| ring.add_var(&format!("t{i}_{k}"), 1)).collect());
    }
    for i in 1..=6usize {
        s.push(ring.sum((2..=order).map(|k| {
            ring.mul(
                &ring.var(tk[i - 1][(k - 2) as usize]),
                &ring.pow(&ring.var(y[i - 1]), k - 2),
            )
        })));
    }
    let big_s = ring.product(s.iter().cloned());
    let ps = p_series(order)?;
    let f = ring.sum((0..=order).map(|k| {
        ring.scale(
            &ring.pow(&big_s, k),
            &BigRational::from_integer(ps.coefficients[k as usize].clone()),
        )
    }));
    let f_plus_2 = ring.add(&f, &ring.int(2));
    let e = ring.mul(&f, &ring.invert_unit(&f_plus_2)?);
    Ok(E6Series { t, s, e, f })
}

fn e6_minors(ring: &Ring, t: &[usize]) -> Vec<Poly> {
    // minors of [[t1, t3, t5], [t4, t6, t2]]
    let v = |i: usize| ring.var(t[i - 1]);
    vec![
        ring.sub(&ring.mul(&v(1), &v(6)), &ring.mul(&v(3), &v(4))),
        ring.sub(&ring.mul(&v(1), &v(2)), &ring.mul(&v(5), &v(4))),
        ring.sub(&ring.mul(&v(3), &v(2)), &ring.mul(&v(5), &v(6))),
    ]
}

fn e6_equations(ring: &Ring, y: &[usize], series: &E6Series) -> (Vec<Poly>, Vec<String>) {
    let yv = |i: i64| ring.var(y[cyc(6, i) - 1]);
    let tv = |i: i64| ring.var(series.t[cyc(6, i) - 1]);
    let sv = |i: i64| series.s[cyc(6, i) - 1].clone();
    let (e, f) = (&series.e, &series.f);
    let mut equations = Vec::new();
    let mut lifts = Vec::new();
    for i in 1..=6i64 {
        let head = ring.add(
            &ring.mul(&yv(i - 1), &yv(i + 1)),
            &ring.mul(&ring.add(&tv(i), &ring.mul(&sv(i), &yv(i))), &yv(i)),
        );
        let block = ring.sum([
            ring.mul(&ring.pow(e, 2), &ring.mul(&tv(i - 2), &tv(i + 2))),
            ring.product([e.clone(), f.clone(), sv(i + 2), tv(i - 2), yv(i + 2)]),
            ring.product([e.clone(), f.clone(), tv(i + 2), sv(i - 2), yv(i - 2)]),
        ]);
        let square = ring.pow(
            &ring.add(&ring.mul(e, &tv(i + 3)), &ring.mul(f, &ring.mul(&sv(i + 3), &yv(i + 3)))),
            2,
        );
        let tail = ring.product([
            ring.pow(e, 2),
            ring.pow(f, 2),
            sv(i - 2),
            sv(i - 1),
            sv(i + 1),
            sv(i + 2),
            sv(i + 3),
            ring.pow(&tv(i), 2),
        ]);
        let eq = ring.sum([
            head,
            ring.mul(&sv(i + 3), &block),
            ring.neg(&ring.mul(&ring.mul(&sv(i - 2), &sv(i + 2)), &square)),
            tail,
        ]);
        equations.push(eq);
        lifts.push(format!("y{}*y{}", cyc(6, i - 1), cyc(6, i + 1)));
    }
    for i in 1..=3i64 {
        let eq = ring.sum([
            ring.mul(&yv(i), &yv(i + 3)),
            ring.product([e.clone(), tv(i + 1), tv(i + 2)]),
            ring.product([e.clone(), tv(i + 2), sv(i + 1), yv(i + 1)]),
            ring.product([e.clone(), tv(i + 1), sv(i + 2), yv(i + 2)]),
            ring.product([f.clone(), sv(i + 1), sv(i + 2), yv(i + 1), yv(i + 2)]),
            ring.product([e.clone(), tv(i - 2), sv(i - 1), yv(i - 1)]),
            ring.product([e.clone(), tv(i - 1), sv(i - 2), yv(i - 2)]),
            ring.product([f.clone(), sv(i - 1), sv(i - 2), yv(i - 1), yv(i - 2)]),
            ring.neg(&ring.product([
                ring.pow(e, 2),
                ring.pow(f, 2),
                sv(i - 2),
                sv(i - 1),
                sv(i + 1),
                sv(i + 2),
                tv(i),
                tv(i + 3),
            ])),
        ]);
        equations.push(eq);
        lifts.push(format!("y{}*y{}", i, i + 3));
    }
    (equations, lifts)
}

/// Stanley-Reisner generators of the cone over E_n, in the same ring.
pub fn polygon_cone_ideal(nf: &NormalForm) -> Vec<Poly> {
    let n = nf.n;
    if n == 3 {
        return vec![nf.ring.product((0..3).map(|i| nf.ring.var(nf.y[i])))];
    }
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let d = (j - i).min(n - (j - i));
            if d >= 2 {
                out.push(nf.ring.mul(&nf.ring.var(nf.y[i - 1]), &nf.ring.var(nf.y[j - 1])));
            }
        }
    }
    out
}

/// All parameters to zero; the result should be exactly the cone ideal.
pub fn specializes_to_cone_ideal(nf: &NormalForm) -> bool {
    let map: HashMap<usize, Poly> = (0..nf.ring.n_vars())
        .filter(|&v| !nf.y.contains(&v))
        .map(|v| (v, Poly::zero()))
        .collect();
    let specialized: Vec<Poly> = nf
        .equations
        .iter()
        .map(|eq| nf.ring.substitute(eq, &map))
        .collect();
    let mut expected = polygon_cone_ideal(nf);
    let mut got = specialized;
    let key = |p: &Poly| format!("{:?}", p.0);
    expected.sort_by_key(&key);
    got.sort_by_key(&key);
    expected == got
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub description: String,
    pub residual_zero: bool,
    pub residual: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub order: u32,
    pub relations: Vec<RelationCheck>,
    pub passed: bool,
}

/// Check that the relations among the cone ideal generators lift to
/// relations among the deformed equations. For n = 3 there are no
/// relations; n = 4 has the Koszul relation; n = 5 has five relations with
/// polynomial coefficients; n = 6 reduces the dihedral orbit of two
/// lifting combinations modulo the minor relations.
pub fn verify_normal_form_relations(n: usize, order: u32) -> Result<VerificationReport> {
    verify_normal_form_relations_with(n, order, false)
}

/// Same, with an optional deliberate sign flip in one n = 6 lifting term
/// (used to demonstrate that the check can fail).
pub fn verify_normal_form_relations_with(
    n: usize,
    order: u32,
    flip_one_sign: bool,
) -> Result<VerificationReport> {
    let nf = normal_form(n, order)?;
    let ring = &nf.ring;
    let mut relations = Vec::new();
    match n {
        3 => {
            relations.push(RelationCheck {
                description: "principal ideal: no relations to lift".to_string(),
                residual_zero: true,
                residual: None,
            });
        }
        4 => {
            let r = ring.sub(
                &ring.mul(&nf.equations[0], &nf.equations[1]),
                &ring.mul(&nf.equations[1], &nf.equations[0]),
            );
            relations.push(RelationCheck {
                description: "Koszul relation between the two equations".to_string(),
                residual_zero: r.is_zero(),
                residual: (!r.is_zero()).then(|| ring.format(&r)),
            });
        }
        5 => {
            // F_c lifts y_{c-1} y_{c+1}; T_i as in the equations
            let t_poly = |i: usize| -> Poly {
                ring.sum((1..=order).map(|k| {
                    let v = ring.var_index(&format!("t{i}_{k}")).unwrap();
                    ring.mul(&ring.var(v), &ring.pow(&ring.var(nf.y[i - 1]), k - 1))
                }))
            };
            let f = |c: i64| nf.equations[cyc(5, c) - 1].clone();
            for i in 1..=5i64 {
                let r = ring.sum([
                    ring.mul(&nf.yv(i + 3), &f(i)),
                    ring.neg(&ring.mul(&nf.yv(i - 1), &f(i + 2))),
                    ring.neg(&ring.mul(&t_poly(cyc(5, i)), &f(i + 4))),
                    ring.mul(&t_poly(cyc(5, i + 2)), &f(i + 3)),
                ]);
                relations.push(RelationCheck {
                    description: format!(
                        "lift of y{}*(y{}y{}) - y{}*(y{}y{})",
                        cyc(5, i + 3),
                        cyc(5, i - 1),
                        cyc(5, i + 1),
                        cyc(5, i - 1),
                        cyc(5, i + 1),
                        cyc(5, i + 3)
                    ),
                    residual_zero: r.is_zero(),
                    residual: (!r.is_zero()).then(|| ring.format(&r)),
                });
            }
        }
        6 => {
            relations = verify_e6_liftings(&nf, flip_one_sign)?;
        }
        _ => return unsupported(format!("normal form defined for n in 3..=6, got {n}")),
    }
    let passed = relations.iter().all(|r| r.residual_zero);
    Ok(VerificationReport {
        n,
        order,
        relations,
        passed,
    })
}

/// The twelve permutations of the dihedral group on 1..=6, as images.
fn dihedral_elements() -> Vec<[usize; 6]> {
    let mut out = Vec::with_capacity(12);
    for a in 0..6i64 {
        for refl in [false, true] {
            let mut perm = [0usize; 6];
            for i in 1..=6i64 {
                let j = if refl { cyc(6, 2 - i) } else { i as usize };
                perm[i as usize - 1] = cyc(6, j as i64 + a);
            }
            out.push(perm);
        }
    }
    out
}

fn verify_e6_liftings(nf: &NormalForm, flip_one_sign: bool) -> Result<Vec<RelationCheck>> {
    let ring = &nf.ring;
    let order_vars: Vec<usize> = [1usize, 3, 5, 4, 6, 2]
        .iter()
        .map(|i| ring.var_index(&format!("t{i}_1")).unwrap())
        .collect();
    let ord = MonomialOrder::new(order_vars);
    let gb = buchberger(ring, &nf.base_relations, &ord)?;

    // rebuild the series bookkeeping from the stored ring
    let t = |i: i64| ring.var(ring.var_index(&format!("t{}_1", cyc(6, i))).unwrap());
    let s = |i: i64| -> Poly {
        let i = cyc(6, i);
        ring.sum((2..=nf.order).map(|k| {
            let v = ring.var_index(&format!("t{i}_{k}")).unwrap();
            ring.mul(&ring.var(v), &ring.pow(&ring.var(nf.y[i - 1]), k - 2))
        }))
    };
    let y = |i: i64| nf.yv(i);
    let big_s = ring.product((1..=6).map(|i| s(i)));
    let ps = p_series(nf.order)?;
    let f = ring.sum((0..=nf.order).map(|k| {
        ring.scale(
            &ring.pow(&big_s, k),
            &BigRational::from_integer(ps.coefficients[k as usize].clone()),
        )
    }));
    let e = ring.mul(&f, &ring.invert_unit(&ring.add(&f, &ring.int(2)))?);
    let f_inv = ring.invert_unit(&f)?;

    // equation lifting the monomial y_i y_j
    let big_f = |i: usize, j: usize| -> Poly {
        let (i, j) = (i.min(j), i.max(j));
        let idx = if j - i == 3 {
            5 + i
        } else {
            // distance-2 pair {c-1, c+1}: centre c
            let c = if j - i == 2 { i + 1 } else { cyc(6, j as i64 + 1) };
            c - 1
        };
        nf.equations[idx].clone()
    };

    let last_sign = if flip_one_sign { -1 } else { 1 };
    let r_a = ring.sum([
        ring.mul(
            &ring.add(&y(5), &ring.product([e.clone(), ring.pow(&f, 3), s(2), s(3), s(4), s(1), s(6), t(5)])),
            &big_f(1, 3),
        ),
        ring.neg(&ring.mul(
            &ring.add(&y(1), &ring.product([e.clone(), ring.pow(&f, 3), s(2), s(3), s(4), s(5), s(6), t(1)])),
            &big_f(3, 5),
        )),
        ring.mul(
            &ring.product([s(4), s(6), ring.add(&ring.product([e.clone(), f.clone(), t(5)]), &ring.product([ring.pow(&f, 2), s(5), y(5)]))]),
            &big_f(4, 6),
        ),
        ring.neg(&ring.mul(
            &ring.product([s(2), s(6), ring.add(&ring.product([e.clone(), f.clone(), t(1)]), &ring.product([ring.pow(&f, 2), s(1), y(1)]))]),
            &big_f(2, 6),
        )),
        ring.neg(&ring.mul(
            &ring.add(&ring.mul(&e, &t(4)), &ring.product([f.clone(), s(4), y(4)])),
            &big_f(1, 4),
        )),
        ring.scale(
            &ring.mul(
                &ring.add(&ring.mul(&e, &t(2)), &ring.product([f.clone(), s(2), y(2)])),
                &big_f(2, 5),
            ),
            &rat(last_sign),
        ),
    ]);
    let r_b = ring.sum([
        ring.mul(&y(6), &big_f(1, 3)),
        ring.mul(
            &ring.product([e.clone(), ring.pow(&f, 2), s(2), s(3), s(4), s(5), t(4)]),
            &big_f(2, 4),
        ),
        ring.neg(&ring.mul(
            &ring.product([
                ring.add(&ring.product([e.clone(), f.clone(), t(2)]), &ring.product([ring.pow(&f, 2), s(2), y(2)])),
                s(3),
                s(4),
                s(5),
            ]),
            &big_f(3, 5),
        )),
        ring.neg(&ring.mul(
            &ring.product([e.clone(), f.clone(), s(4), s(5), t(6)]),
            &big_f(4, 6),
        )),
        ring.mul(&ring.product([e.clone(), t(4), s(5)]), &big_f(1, 5)),
        ring.neg(&ring.mul(
            &ring.add(&ring.product([e.clone(), f_inv.clone(), t(2)]), &ring.mul(&s(2), &y(2))),
            &big_f(2, 6),
        )),
        ring.mul(
            &ring.mul(&s(4), &ring.add(&ring.mul(&e, &t(5)), &ring.product([f.clone(), s(5), y(5)]))),
            &big_f(1, 4),
        ),
        ring.neg(&ring.mul(&y(1), &big_f(3, 6))),
    ]);

    // permutation images, deduplicated
    let mut images: Vec<(String, Poly)> = Vec::new();
    for perm in dihedral_elements() {
        let mut map: HashMap<usize, Poly> = HashMap::new();
        for i in 1..=6usize {
            let j = perm[i - 1];
            map.insert(nf.y[i - 1], ring.var(nf.y[j - 1]));
            for k in 1..=nf.order {
                if let (Some(from), Some(to)) = (
                    ring.var_index(&format!("t{i}_{k}")),
                    ring.var_index(&format!("t{j}_{k}")),
                ) {
                    map.insert(from, ring.var(to));
                }
            }
        }
        for (tag, r) in [("a", &r_a), ("b", &r_b)] {
            let img = ring.substitute(r, &map);
            if !images.iter().any(|(_, p)| *p == img) {
                images.push((format!("orbit of lifting {tag} under {perm:?}"), img));
            }
        }
    }
    let mut checks = Vec::new();
    for (desc, img) in images {
        let residual = reduce(ring, &img, &gb, &ord);
        checks.push(RelationCheck {
            description: desc,
            residual_zero: residual.is_zero(),
            residual: (!residual.is_zero()).then(|| ring.format(&residual)),
        });
    }
    Ok(checks)
}

/// The n = 6 equations with every higher-order parameter set to zero:
/// six equations y_{i-1}y_{i+1} + t_i y_i and three y_i y_{i+3} -
/// t_{i+1} t_{i+2}.
pub fn e6_first_order_specialization_matches(order: u32) -> Result<bool> {
    let nf = normal_form(6, order)?;
    let ring = &nf.ring;
    let mut map: HashMap<usize, Poly> = HashMap::new();
    for i in 1..=6 {
        for k in 2..=order {
            if let Some(v) = ring.var_index(&format!("t{i}_{k}")) {
                map.insert(v, Poly::zero());
            }
        }
    }
    let t = |i: i64| ring.var(ring.var_index(&format!("t{}_1", cyc(6, i))).unwrap());
    for i in 1..=6i64 {
        let got = ring.substitute(&nf.equations[i as usize - 1], &map);
        let want = ring.add(
            &ring.mul(&nf.yv(i - 1), &nf.yv(i + 1)),
            &ring.mul(&t(i), &nf.yv(i)),
        );
        if got != want {
            return Ok(false);
        }
    }
    for i in 1..=3i64 {
        let got = ring.substitute(&nf.equations[5 + i as usize], &map);
        let want = ring.sub(
            &ring.mul(&nf.yv(i), &nf.yv(i + 3)),
            &ring.mul(&t(i + 1), &t(i + 2)),
        );
        if got != want {
            return Ok(false);
        }
    }
    Ok(true)
}

fn edge_var_name(i: usize, j: usize) -> String {
    format!("t_{}_{}", i.min(j), i.max(j))
}

/// Vertices of the link of `v` in cyclic order. The link of a vertex of a
/// closed surface is a circle; the walk starts at the smallest label and
/// moves toward its smaller neighbor.
pub fn link_cycle(k: &SimplicialComplex, v: usize) -> Result<Vec<usize>> {
    let link = k.link(VertexSet::singleton(v))?;
    let mut nbrs: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for f in link.facets() {
        if f.len() != 2 {
            return domain(format!("link of vertex {v} is not a circle"));
        }
        let vs = f.to_vec();
        nbrs.entry(vs[0]).or_default().push(vs[1]);
        nbrs.entry(vs[1]).or_default().push(vs[0]);
    }
    if nbrs.values().any(|n| n.len() != 2) {
        return domain(format!("link of vertex {v} is not a circle"));
    }
    let start = *nbrs.keys().next().unwrap();
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *nbrs[&start].iter().min().unwrap();
    while cur != start {
        cycle.push(cur);
        let next = *nbrs[&cur].iter().find(|&&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    if cycle.len() != nbrs.len() {
        return domain(format!("link of vertex {v} is not a single circle"));
    }
    Ok(cycle)
}

fn require_low_valency_surface(k: &SimplicialComplex) -> Result<()> {
    let (closed, dim) = k.is_closed_manifold()?;
    if !closed || dim != 2 {
        return domain("need a closed 2-manifold");
    }
    for v in k.support().iter() {
        let val = k.valency(VertexSet::singleton(v));
        if val > 6 {
            return unsupported(format!("vertex {v} has valency {val} > 6"));
        }
    }
    Ok(())
}

/// Canonical name for the valency-4 vertex variable u_{i,j}, identified
/// with u_{i,j'} for j' opposite j in the link square of i.
fn u_var_name(k: &SimplicialComplex, i: usize, j: usize) -> Result<String> {
    let cycle = link_cycle(k, i)?;
    let pos = cycle.iter().position(|&w| w == j).ok_or_else(|| {
        Error::Domain(format!("vertex {j} is not in the link of {i}"))
    })?;
    let opp = cycle[(pos + 2) % 4];
    Ok(format!("u_{}_{}", i, j.min(opp)))
}

#[derive(Debug, Clone, Serialize)]
pub struct VersalVariables {
    pub edge_variables: Vec<String>,
    pub valency3_variables: Vec<String>,
    pub valency4_variables: Vec<String>,
    pub count: usize,
}

/// First-order deformation coordinates of a low-valency closed surface:
/// one variable per edge, four per valency-3 vertex, two per valency-4
/// vertex.
pub fn versal_variables(k: &SimplicialComplex) -> Result<VersalVariables> {
    require_low_valency_surface(k)?;
    let mut edge_variables = Vec::new();
    for e in k.faces_of_dim(1) {
        let vs = e.to_vec();
        edge_variables.push(edge_var_name(vs[0], vs[1]));
    }
    let mut valency3_variables = Vec::new();
    let mut valency4_variables = Vec::new();
    for i in k.support().iter() {
        match k.valency(VertexSet::singleton(i)) {
            3 => {
                valency3_variables.push(format!("v_{i}"));
                for j in link_cycle(k, i)? {
                    valency3_variables.push(format!("v_{i}_{j}"));
                }
            }
            4 => {
                let mut names: Vec<String> = link_cycle(k, i)?
                    .into_iter()
                    .map(|j| u_var_name(k, i, j))
                    .collect::<Result<_>>()?;
                names.sort();
                names.dedup();
                valency4_variables.extend(names);
            }
            _ => {}
        }
    }
    let count = edge_variables.len() + valency3_variables.len() + valency4_variables.len();
    Ok(VersalVariables {
        edge_variables,
        valency3_variables,
        valency4_variables,
        count,
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    /// Every vertex has valency 6, so the surface is a flat torus or
    /// Klein bottle and the ideal is the exact versal base.
    Degree6Regular,
    /// No two valency-6 vertices are adjacent, so the first-order edge
    /// parameters need no higher-order corrections.
    NoAdjacentHexagons,
    /// Adjacent valency-6 vertices may need higher-order corrections that
    /// this construction does not compute.
    FirstOrderOnly,
}

pub struct VersalIdeal {
    pub ring: Ring,
    pub variables: VersalVariables,
    /// Per valency-6 vertex: (vertex, variable indices of the 2x3 matrix).
    pub matrices: Vec<(usize, [[usize; 3]; 2])>,
    pub generators: Vec<Poly>,
    pub exactness: Exactness,
}

impl VersalIdeal {
    pub fn is_exact(&self) -> bool {
        !matches!(self.exactness, Exactness::FirstOrderOnly)
    }
}

pub fn versal_ideal(k: &SimplicialComplex) -> Result<VersalIdeal> {
    let variables = versal_variables(k)?;
    let mut ring = Ring::new(None);
    for name in variables
        .edge_variables
        .iter()
        .chain(&variables.valency3_variables)
        .chain(&variables.valency4_variables)
    {
        ring.add_var(name, 1);
    }
    let mut matrices = Vec::new();
    let mut generators = Vec::new();
    let hexagons: Vec<usize> = k
        .support()
        .iter()
        .filter(|&v| k.valency(VertexSet::singleton(v)) == 6)
        .collect();
    for &i in &hexagons {
        let cycle = link_cycle(k, i)?;
        let tv = |j: usize| ring.var_index(&edge_var_name(i, cycle[j - 1])).unwrap();
        let m = [[tv(1), tv(3), tv(5)], [tv(4), tv(6), tv(2)]];
        for (c1, c2) in [(0, 1), (0, 2), (1, 2)] {
            generators.push(ring.sub(
                &ring.mul(&ring.var(m[0][c1]), &ring.var(m[1][c2])),
                &ring.mul(&ring.var(m[0][c2]), &ring.var(m[1][c1])),
            ));
        }
        matrices.push((i, m));
    }
    let all_degree6 = k
        .support()
        .iter()
        .all(|v| k.valency(VertexSet::singleton(v)) == 6);
    let adjacent_hexagons = k.faces_of_dim(1).iter().any(|e| {
        e.iter()
            .all(|v| k.valency(VertexSet::singleton(v)) == 6)
    });
    let exactness = if all_degree6 {
        Exactness::Degree6Regular
    } else if !adjacent_hexagons {
        Exactness::NoAdjacentHexagons
    } else {
        Exactness::FirstOrderOnly
    };
    Ok(VersalIdeal {
        ring,
        variables,
        matrices,
        generators,
        exactness,
    })
}

const KRULL_VARIABLE_BUDGET: usize = 40;

/// Krull dimension of the quotient by the versal ideal. Disjoint matrices
/// give codimension 2 each; otherwise a Groebner basis and the dimension
/// of its leading-term ideal.
pub fn krull_dimension(vi: &VersalIdeal) -> Result<usize> {
    let n = vi.ring.n_vars();
    if vi.generators.is_empty() {
        return Ok(n);
    }
    let var_sets: Vec<Vec<usize>> = vi
        .matrices
        .iter()
        .map(|(_, m)| {
            let mut vs: Vec<usize> = m.iter().flatten().copied().collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let disjoint = var_sets.iter().enumerate().all(|(a, s)| {
        var_sets[a + 1..]
            .iter()
            .all(|t| s.iter().all(|v| !t.contains(v)))
    });
    if disjoint {
        return Ok(n - 2 * vi.matrices.len());
    }
    if n > KRULL_VARIABLE_BUDGET {
        return Err(Error::Resource(format!(
            "{n} variables exceed the Groebner budget of {KRULL_VARIABLE_BUDGET} and the disjoint-matrix fast path does not apply"
        )));
    }
    let ord = MonomialOrder::all(n);
    let gb = buchberger(&vi.ring, &vi.generators, &ord)?;
    let supports: Vec<Vec<usize>> = gb
        .iter()
        .map(|g| leading_term(g, &ord).unwrap().0.support())
        .collect();
    dimension_of_lt_quotient(n, &supports)
}

/// Monte-Carlo cross-check for the Krull dimension: random rational
/// points are drawn on the locus where the two rows of every matrix
/// coincide, so every matrix has rank one and all minors vanish. The
/// Jacobian corank at such a point is its tangent-space dimension; at a
/// smooth point of a top-dimensional component it equals the Krull
/// dimension of the zero set. The minimum over the samples is returned.
pub fn jacobian_dimension_estimate(vi: &VersalIdeal, samples: usize, seed: u64) -> usize {
    let n = vi.ring.n_vars();
    if vi.generators.is_empty() {
        return n;
    }
    // union-find merging the two rows of each matrix columnwise; the
    // classes parameterize the rows-equal locus
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (_, m) in &vi.matrices {
        for c in 0..3 {
            let a = find(&mut parent, m[0][c]);
            let b = find(&mut parent, m[1][c]);
            parent[a] = b;
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut best = n;
    for _ in 0..samples {
        let mut class_value: HashMap<usize, BigRational> = HashMap::new();
        let point: Vec<BigRational> = (0..n)
            .map(|v| {
                let root = find(&mut parent, v);
                class_value
                    .entry(root)
                    .or_insert_with(|| rat(rng.gen_range(1..100i64)))
                    .clone()
            })
            .collect();
        debug_assert!(vi
            .generators
            .iter()
            .all(|g| vi.ring.evaluate(g, &point).is_zero()));
        let rows: Vec<Vec<(usize, BigRational)>> = vi
            .generators
            .iter()
            .map(|g| {
                (0..n)
                    .filter_map(|v| {
                        let d = vi.ring.evaluate(&vi.ring.derivative(g, v), &point);
                        (!d.is_zero()).then_some((v, d))
                    })
                    .collect()
            })
            .collect();
        let rank = SparseMatrix { n_cols: n, rows }.rank();
        best = best.min(n - rank);
    }
    best
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexAssignment {
    pub vertex: usize,
    pub valency: usize,
    /// (local normal-form parameter, global coordinate) pairs.
    pub rows: Vec<(String, String)>,
}

/// The first-order values of the local normal-form parameters of each
/// vertex chart, expressed in the global deformation coordinates.
pub fn first_order_table(k: &SimplicialComplex) -> Result<Vec<VertexAssignment>> {
    require_low_valency_surface(k)?;
    let valency = |v: usize| k.valency(VertexSet::singleton(v));
    let mut out = Vec::new();
    for i in k.support().iter() {
        let val = valency(i);
        let mut rows = Vec::new();
        if val == 3 {
            rows.push(("t^(-1)".to_string(), format!("v_{i}")));
        }
        for j in link_cycle(k, i)? {
            match val {
                3 => {
                    rows.push((format!("t{j}_0"), format!("v_{i}_{j}")));
                    rows.push((format!("t{j}_1"), edge_var_name(i, j)));
                }
                4 => {
                    rows.push((format!("t{j}_0"), u_var_name(k, i, j)?));
                    rows.push((format!("t{j}_1"), edge_var_name(i, j)));
                }
                _ => {
                    rows.push((format!("t{j}_1"), edge_var_name(i, j)));
                }
            }
            match valency(j) {
                3 => {
                    rows.push((format!("t{j}_2"), format!("v_{j}_{i}")));
                    rows.push((format!("t{j}_3"), format!("v_{j}")));
                }
                4 => {
                    rows.push((format!("t{j}_2"), u_var_name(k, j, i)?));
                }
                _ => {}
            }
        }
        out.push(VertexAssignment {
            vertex: i,
            valency: val,
            rows,
        });
    }
    Ok(out)
}
