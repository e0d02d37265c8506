//! Integer structure constants of a Chevalley basis.
//!
//! With `[E_a, E_b] = N(a,b) E_{a+b}`, `[E_a, E_-a] = H_a` (the coroot) and
//! `N(-a,-b) = -N(a,b)`, every constant is fixed by its values on the
//! extraspecial pairs. We take `N = +(p+1)` there and derive the rest by
//! height induction from the relations
//!
//! * `N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y)` when `x+y+z = 0`;
//! * for `x+y+z+w = 0` with no opposite pair,
//!   `N(x,y)N(z,w)/|x+y|^2 + N(y,z)N(x,w)/|y+z|^2 + N(z,x)N(y,w)/|z+x|^2 = 0`.
//!
//! The pairing `B(E_d, E_-d)` is proportional to `2/(d,d)`; it is stored as
//! `b(d)` so callers never need square roots.

use std::fmt::Write as _;

use num_traits::Zero;

use crate::rootsys::RootSystem;
use crate::Rational;

#[derive(Debug, Clone)]
pub struct ChevalleyTable {
    size: usize,
    // 0 marks "a + b is not a root"; real constants are never 0.
    n: Vec<i32>,
    b: Vec<Rational>,
}

impl ChevalleyTable {
    /// Builds the table for `rs`. In debug builds the Jacobi identity is
    /// checked on every triple of root vectors before returning.
    pub fn build(rs: &RootSystem) -> Self {
        let size = rs.len();
        let npos = rs.num_positive();
        let mut t = ChevalleyTable {
            size,
            n: vec![0; size * size],
            b: (0..size)
                .map(|i| Rational::from_integer(2) / rs.squared_length(i))
                .collect(),
        };

        for eta in rs.rank()..npos {
            // Special pairs (x, y), x < y in the root order, x + y = eta.
            let pairs: Vec<(usize, usize)> = (0..npos)
                .filter_map(|x| {
                    let y = rs.diff(eta, x)?;
                    (rs.is_positive(y) && x < y).then_some((x, y))
                })
                .collect();
            let (a, b) = pairs[0];
            let (p, _) = rs.root_string_idx(a, b).expect("distinct positive roots");
            t.set_pair(a, b, p as i32 + 1);

            let norm_eta = rs.squared_length(eta);
            let nab = Rational::from_integer(p as i64 + 1);
            for &(x, y) in &pairs[1..] {
                let mut acc = Rational::zero();
                if rs.diff(b, x).is_some() {
                    let t1 = t.mixed(rs, b, x) * t.mixed(rs, a, y);
                    acc += Rational::from_integer(t1) / rs.squared_length(rs.diff(b, x).unwrap());
                }
                if let Some(ax) = rs.diff(a, x) {
                    // N(-x, a) N(b, -y) with N(-x, a) = -N(a, -x).
                    let t2 = -t.mixed(rs, a, x) * t.mixed(rs, b, y);
                    acc += Rational::from_integer(t2) / rs.squared_length(ax);
                }
                let value = norm_eta / nab * acc;
                assert!(value.is_integer(), "non-integral structure constant");
                t.set_pair(x, y, value.to_integer() as i32);
            }
        }

        // Extend from positive pairs to all pairs.
        let mut full = t.n.clone();
        for i in 0..size {
            for j in 0..size {
                if rs.sum(i, j).is_none() || (rs.is_positive(i) && rs.is_positive(j)) {
                    continue;
                }
                full[i * size + j] = match (rs.is_positive(i), rs.is_positive(j)) {
                    (false, false) => -t.n[rs.neg(i) * size + rs.neg(j)],
                    (true, false) => t.mixed(rs, i, rs.neg(j)) as i32,
                    (false, true) => -(t.mixed(rs, j, rs.neg(i)) as i32),
                    (true, true) => unreachable!(),
                };
            }
        }
        t.n = full;
        debug_assert!(t.cyclic_violations(rs).is_empty());
        t
    }

    fn set_pair(&mut self, x: usize, y: usize, v: i32) {
        self.n[x * self.size + y] = v;
        self.n[y * self.size + x] = -v;
    }

    /// `N(u, -v)` for positive `u != v` with `u - v` a root, using constants
    /// already known on positive pairs of lower height.
    fn mixed(&self, rs: &RootSystem, u: usize, v: usize) -> i64 {
        let c = rs.diff(u, v).expect("u - v must be a root");
        let value = if rs.is_positive(c) {
            // v + c = u: N(u,-v) = -|c|^2/|u|^2 N(v,c)
            -rs.squared_length(c) / rs.squared_length(u)
                * Rational::from_integer(self.n[v * self.size + c] as i64)
        } else {
            // u + d = v with d = -c: N(u,-v) = |d|^2/|v|^2 N(d,u)
            let d = rs.neg(c);
            rs.squared_length(d) / rs.squared_length(v)
                * Rational::from_integer(self.n[d * self.size + u] as i64)
        };
        debug_assert!(value.is_integer() && !value.is_zero());
        value.to_integer()
    }

    /// `N(a, b)` when `a + b` is a root.
    #[inline]
    pub fn n(&self, a: usize, b: usize) -> Option<i32> {
        match self.n[a * self.size + b] {
            0 => None,
            v => Some(v),
        }
    }

    /// `N(a, b)`, or 0 when `a + b` is not a root.
    #[inline]
    pub fn n_or_zero(&self, a: usize, b: usize) -> i32 {
        self.n[a * self.size + b]
    }

    /// Pairing factor `b(d)`, proportional to `B(E_d, E_-d)`.
    pub fn b(&self, d: usize) -> Rational {
        self.b[d]
    }

    /// Negates `N(a,b)` and `N(b,a)`; used for mutation tests.
    pub fn flip_sign(&mut self, a: usize, b: usize) {
        self.n[a * self.size + b] *= -1;
        self.n[b * self.size + a] *= -1;
    }

    /// Jacobi identity on every root-vector triple and the weighted cyclic
    /// identity on every zero-sum triple.
    pub fn sign_convention_check(&self, rs: &RootSystem) -> bool {
        self.jacobi_violations(rs, 1).is_empty() && self.cyclic_violations(rs).is_empty()
    }

    /// Triples `(a, b, c)` violating Jacobi, stopping after `limit` hits.
    pub fn jacobi_violations(&self, rs: &RootSystem, limit: usize) -> Vec<(usize, usize, usize)> {
        let alg = Bracket::new(rs, self);
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in 0..self.size {
                for c in 0..self.size {
                    if !alg.jacobi_holds(a, b, c) {
                        out.push((a, b, c));
                        if out.len() >= limit {
                            return out;
                        }
                    }
                }
            }
        }
        out
    }

    /// Jacobi on a single triple.
    pub fn jacobi_holds(&self, rs: &RootSystem, a: usize, b: usize, c: usize) -> bool {
        Bracket::new(rs, self).jacobi_holds(a, b, c)
    }

    /// Zero-sum triples where `N(a,b)b(c) = N(b,c)b(a) = N(c,a)b(b)` fails.
    pub fn cyclic_violations(&self, rs: &RootSystem) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in 0..self.size {
                let Some(s) = rs.sum(a, b) else { continue };
                let c = rs.neg(s);
                let w = |x: usize, y: usize, z: usize| {
                    Rational::from_integer(self.n_or_zero(x, y) as i64) * self.b[z]
                };
                let (u, v, t) = (w(a, b, c), w(b, c, a), w(c, a, b));
                if u.is_zero() || u != v || v != t {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    /// CSV dump: `i,j,root_i,root_j,n` for every pair with a defined constant.
    pub fn to_csv(&self, rs: &RootSystem) -> String {
        let mut s = String::from("i,j,root_i,root_j,n\n");
        for i in 0..self.size {
            for j in 0..self.size {
                if let Some(v) = self.n(i, j) {
                    let _ = writeln!(s, "{i},{j},{},{},{v}", rs.root(i), rs.root(j));
                }
            }
        }
        s
    }
}

/// Builds the Chevalley structure constants of `rs`.
pub fn build_constants(rs: &RootSystem) -> ChevalleyTable {
    ChevalleyTable::build(rs)
}

/// Single-term results of brackets between basis vectors.
#[derive(Debug, Clone, PartialEq)]
enum Term {
    Zero,
    Root(usize, i64),
    Cartan(Vec<i64>),
}

/// The adjoint bracket on the Chevalley basis `{h_1..h_n} u {E_a}`.
struct Bracket<'a> {
    rs: &'a RootSystem,
    t: &'a ChevalleyTable,
    coroots: Vec<Vec<i64>>,
    pairings: Vec<Vec<i64>>,
}

impl<'a> Bracket<'a> {
    fn new(rs: &'a RootSystem, t: &'a ChevalleyTable) -> Self {
        let coroots = (0..rs.len()).map(|i| rs.coroot_coords(i)).collect();
        let pairings = (0..rs.len()).map(|i| rs.simple_pairings(i)).collect();
        Bracket {
            rs,
            t,
            coroots,
            pairings,
        }
    }

    /// `[E_a, x]`.
    fn ad(&self, a: usize, x: &Term) -> Term {
        match x {
            Term::Zero => Term::Zero,
            Term::Root(b, c) => {
                if let Some(s) = self.rs.sum(a, *b) {
                    Term::Root(s, c * self.t.n_or_zero(a, *b) as i64)
                } else if *b == self.rs.neg(a) {
                    Term::Cartan(self.coroots[a].iter().map(|h| h * c).collect())
                } else {
                    Term::Zero
                }
            }
            Term::Cartan(h) => {
                // [E_a, h] = -a(h) E_a
                let ah: i64 = h.iter().zip(&self.pairings[a]).map(|(x, y)| x * y).sum();
                if ah == 0 {
                    Term::Zero
                } else {
                    Term::Root(a, -ah)
                }
            }
        }
    }

    fn jacobi_holds(&self, a: usize, b: usize, c: usize) -> bool {
        let e = |i: usize| Term::Root(i, 1);
        let terms = [
            self.ad(a, &self.ad(b, &e(c))),
            self.ad(b, &self.ad(c, &e(a))),
            self.ad(c, &self.ad(a, &e(b))),
        ];
        let mut cartan = vec![0i64; self.rs.rank()];
        let mut roots: Vec<(usize, i64)> = Vec::with_capacity(3);
        for term in terms {
            match term {
                Term::Zero => {}
                Term::Root(i, v) => match roots.iter_mut().find(|(k, _)| *k == i) {
                    Some(slot) => slot.1 += v,
                    None => roots.push((i, v)),
                },
                Term::Cartan(h) => {
                    for (acc, x) in cartan.iter_mut().zip(h) {
                        *acc += x;
                    }
                }
            }
        }
        cartan.iter().all(|&x| x == 0) && roots.iter().all(|&(_, v)| v == 0)
    }
}
