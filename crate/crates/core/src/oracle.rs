//! Brute-force transvection test from the Levi-Civita formula.
//!
//! `E_a` (with `a` in `R_m+`) is a transvection at the base point iff for all
//! `Y = E_b`, `U = E_c` in `m`
//!
//! ```text
//! <[E_b, E_a]_m, E_c> + <[E_a, E_c]_m, E_b> + <[E_b, E_c]_m, E_a> = 0.
//! ```
//!
//! The invariant metric pairs only opposite root vectors:
//! `<E_d, E_-d> = -i eps(d) d(xi) B(E_d, E_-d)`. The common `-i` is dropped,
//! so `r(d) = eps(d) d(xi) b(d)` with `b` from the Chevalley table, and every
//! term is an exact rational. Nothing here looks at `(a + R_m+) n R`.

use num_traits::{Signed, Zero};

use crate::chevalley::ChevalleyTable;
use crate::error::Result;
use crate::flag::{FlagData, KahlerParam};
use crate::Rational;

/// `r(d)` with `<E_d, E_-d> = -i r(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairingValue(pub Rational);

pub fn pairing(f: &FlagData, xi: &KahlerParam, t: &ChevalleyTable, d: usize) -> Result<PairingValue> {
    let eps = f.epsilon_idx(d)?;
    let value = Rational::from_integer(eps as i64) * f.eval(xi, d) * t.b(d);
    Ok(PairingValue(value))
}

/// A failing decomposition `-a = b + c` together with the nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub residual: Rational,
}

struct Evaluator<'a> {
    f: &'a FlagData,
    xi: &'a KahlerParam,
    t: &'a ChevalleyTable,
}

impl Evaluator<'_> {
    /// `[E_x, E_y]_m` as `(root, coefficient)`; zero when `x + y` is not a
    /// root or lands in `R_h`. The `h`-valued bracket `[E_x, E_-x]` is
    /// projected away.
    fn bracket_m(&self, x: usize, y: usize) -> Option<(usize, i32)> {
        let s = self.f.rs().sum(x, y)?;
        if !self.f.in_m(s) {
            return None;
        }
        Some((s, self.t.n(x, y)?))
    }

    /// `<c E_x, E_y>` with the `-i` factored out.
    fn pair(&self, x: Option<(usize, i32)>, y: usize) -> Rational {
        match x {
            Some((d, c)) if d == self.f.rs().neg(y) => {
                let r = pairing(self.f, self.xi, self.t, d).expect("d lies in R_m").0;
                Rational::from_integer(c as i64) * r
            }
            _ => Rational::zero(),
        }
    }

    fn residual(&self, a: usize, b: usize, c: usize) -> Rational {
        self.pair(self.bracket_m(b, a), c)
            + self.pair(self.bracket_m(a, c), b)
            + self.pair(self.bracket_m(b, c), a)
    }

    fn witness(&self, a: usize) -> Option<Witness> {
        let rs = self.f.rs();
        // Every pairing vanishes unless b + c = -a, so only those c are tried.
        for &b in self.f.r_m() {
            let Some(c) = rs.diff(rs.neg(a), b) else { continue };
            if !self.f.in_m(c) {
                continue;
            }
            let residual = self.residual(a, b, c);
            if !residual.is_zero() {
                return Some(Witness {
                    alpha: a,
                    beta: b,
                    gamma: c,
                    residual,
                });
            }
        }
        None
    }
}

/// First decomposition violating the Levi-Civita condition for `E_a`.
///
/// # Panics
/// If `a` is not in `R_m+`.
pub fn transvection_witness(
    f: &FlagData,
    xi: &KahlerParam,
    t: &ChevalleyTable,
    a: usize,
) -> Option<Witness> {
    assert!(f.in_m_plus(a), "transvection test needs a root of R_m+");
    Evaluator { f, xi, t }.witness(a)
}

/// Exact evaluation of the Levi-Civita condition with structure constants.
pub fn transvection_check(f: &FlagData, xi: &KahlerParam, t: &ChevalleyTable, a: usize) -> bool {
    transvection_witness(f, xi, t, a).is_none()
}

/// The reduced condition: for `-a = b + c` in `R_m`,
/// `((1 + eps_c) c + (1 + eps_b) b)(xi) = 0`. No structure constants.
///
/// # Panics
/// If `a` is not in `R_m+`.
pub fn transvection_check_shortcut(f: &FlagData, xi: &KahlerParam, a: usize) -> bool {
    assert!(f.in_m_plus(a), "transvection test needs a root of R_m+");
    let rs = f.rs();
    let one = Rational::from_integer(1);
    f.r_m().iter().all(|&b| {
        let Some(c) = rs.diff(rs.neg(a), b) else { return true };
        if !f.in_m(c) {
            return true;
        }
        let eps = |x: usize| Rational::from_integer(f.epsilon_idx(x).expect("in R_m") as i64);
        let value = (one + eps(c)) * f.eval(xi, c) + (one + eps(b)) * f.eval(xi, b);
        value.is_zero()
    })
}

/// `{a in R_m+ : transvection_check(a)}`.
pub fn transvection_set(f: &FlagData, xi: &KahlerParam, t: &ChevalleyTable) -> Vec<usize> {
    f.r_m_plus()
        .iter()
        .copied()
        .filter(|&a| transvection_check(f, xi, t, a))
        .collect()
}

pub fn shortcut_set(f: &FlagData, xi: &KahlerParam) -> Vec<usize> {
    f.r_m_plus()
        .iter()
        .copied()
        .filter(|&a| transvection_check_shortcut(f, xi, a))
        .collect()
}

/// Pairing symmetry `r(-d) = r(d)` and positivity on `R_m`.
pub fn pairing_is_symmetric(f: &FlagData, xi: &KahlerParam, t: &ChevalleyTable) -> bool {
    f.r_m().iter().all(|&d| {
        let r = pairing(f, xi, t, d).map(|p| p.0);
        let s = pairing(f, xi, t, f.rs().neg(d)).map(|p| p.0);
        matches!((r, s), (Ok(r), Ok(s)) if r == s && r.is_positive())
    })
}

/// Disagreement between the oracle and a reference set of roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub xi: KahlerParam,
    pub oracle: Vec<usize>,
    pub shortcut: Vec<usize>,
    pub expected: Vec<usize>,
}

/// Runs both transvection tests for each `xi` and compares with `expected`.
pub fn cross_check(
    f: &FlagData,
    t: &ChevalleyTable,
    xis: &[KahlerParam],
    expected: &[usize],
) -> std::result::Result<(), Box<Mismatch>> {
    for xi in xis {
        let oracle = transvection_set(f, xi, t);
        let shortcut = shortcut_set(f, xi);
        if oracle != expected || shortcut != expected {
            return Err(Box::new(Mismatch {
                xi: xi.clone(),
                oracle,
                shortcut,
                expected: expected.to_vec(),
            }));
        }
    }
    Ok(())
}
