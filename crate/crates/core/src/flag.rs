//! Painted Dynkin diagrams and the root data of the flag manifold `G/H`.
//!
//! White nodes span the semisimple part of `h`; black (painted) nodes count
//! the center `c`. A root lies in `R_h` exactly when it vanishes on every
//! painted coordinate. The canonical invariant ordering is `R_m+ = R+ n R_m`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Root, RootSystem};
use crate::Rational;

/// A root system together with its black nodes (0-based internally).
#[derive(Debug, Clone)]
pub struct PaintedDiagram {
    rs: Arc<RootSystem>,
    painted: BTreeSet<usize>,
}

impl PaintedDiagram {
    /// `painted` holds 0-based node indices.
    pub fn new(rs: Arc<RootSystem>, painted: impl IntoIterator<Item = usize>) -> Result<Self> {
        let painted: BTreeSet<usize> = painted.into_iter().collect();
        if painted.is_empty() || painted.iter().any(|&i| i >= rs.rank()) {
            return Err(Error::BadPainting {
                painted: painted.iter().map(|i| i + 1).collect(),
                rank: rs.rank(),
            });
        }
        Ok(PaintedDiagram { rs, painted })
    }

    /// `nodes` in 1-based (Bourbaki) numbering.
    pub fn from_nodes(rs: Arc<RootSystem>, nodes: &[usize]) -> Result<Self> {
        if nodes.contains(&0) {
            return Err(Error::BadPainting {
                painted: nodes.to_vec(),
                rank: rs.rank(),
            });
        }
        Self::new(rs, nodes.iter().map(|i| i - 1))
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rs_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    /// 0-based painted node indices.
    pub fn painted(&self) -> &BTreeSet<usize> {
        &self.painted
    }

    /// 1-based painted node numbers.
    pub fn painted_nodes(&self) -> Vec<usize> {
        self.painted.iter().map(|i| i + 1).collect()
    }

    pub fn white(&self) -> Vec<usize> {
        (0..self.rs.rank()).filter(|i| !self.painted.contains(i)).collect()
    }
}

impl fmt::Display for PaintedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.painted_nodes().iter().map(|n| n.to_string()).collect();
        write!(f, "{}:{{{}}}", self.cartan_type(), nodes.join(","))
    }
}

impl FromStr for PaintedDiagram {
    type Err = Error;

    /// Parses `<Family><rank>:{i,j,...}`, e.g. `A3:{2,3}`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (ty, set) = s.split_once(':').ok_or_else(|| bad("expected <type>:{nodes}"))?;
        let ty: CartanType = ty.trim().parse()?;
        let inner = set
            .trim()
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(|| bad("node set must be wrapped in braces"))?;
        let nodes = inner
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| bad("node numbers must be integers")))
            .collect::<Result<Vec<_>>>()?;
        PaintedDiagram::from_nodes(Arc::new(RootSystem::from_type(ty)), &nodes)
    }
}

/// One irreducible isotropy summand: the `R_m+` roots sharing a T-root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TModule {
    /// Painted coordinates of the roots in this cell.
    pub t_root: Vec<i32>,
    pub roots: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct FlagData {
    pd: PaintedDiagram,
    r_h: Vec<usize>,
    r_m: Vec<usize>,
    r_m_plus: Vec<usize>,
    in_m: Vec<bool>,
    t_modules: Vec<TModule>,
}

impl FlagData {
    pub fn new(pd: PaintedDiagram) -> Self {
        let rs = pd.rs();
        let touches_paint =
            |i: usize| pd.painted.iter().any(|&p| rs.root(i).coords()[p] != 0);
        let in_m: Vec<bool> = (0..rs.len()).map(touches_paint).collect();
        let r_h = (0..rs.len()).filter(|&i| !in_m[i]).collect();
        let r_m = (0..rs.len()).filter(|&i| in_m[i]).collect();
        let r_m_plus: Vec<usize> = rs.positive().filter(|&i| in_m[i]).collect();

        let mut cells: BTreeMap<Vec<i32>, Vec<usize>> = BTreeMap::new();
        for &i in &r_m_plus {
            let t: Vec<i32> = pd.painted.iter().map(|&p| rs.root(i).coords()[p]).collect();
            cells.entry(t).or_default().push(i);
        }
        let t_modules = cells
            .into_iter()
            .map(|(t_root, roots)| TModule { t_root, roots })
            .collect();

        FlagData {
            pd,
            r_h,
            r_m,
            r_m_plus,
            in_m,
            t_modules,
        }
    }

    pub fn painted_diagram(&self) -> &PaintedDiagram {
        &self.pd
    }

    pub fn rs(&self) -> &RootSystem {
        self.pd.rs()
    }

    pub fn r_h(&self) -> &[usize] {
        &self.r_h
    }

    pub fn r_m(&self) -> &[usize] {
        &self.r_m
    }

    pub fn r_m_plus(&self) -> &[usize] {
        &self.r_m_plus
    }

    pub fn t_modules(&self) -> &[TModule] {
        &self.t_modules
    }

    pub fn in_m(&self, i: usize) -> bool {
        self.in_m[i]
    }

    pub fn in_m_plus(&self, i: usize) -> bool {
        self.in_m[i] && self.rs().is_positive(i)
    }

    pub fn center_dim(&self) -> usize {
        self.pd.painted.len()
    }

    /// Real dimension of `M`, i.e. `|R_m|`.
    pub fn dim_m(&self) -> usize {
        self.r_m.len()
    }

    /// `a(xi)` for any integer combination of simple roots.
    pub fn eval_root(&self, xi: &KahlerParam, a: &Root) -> Rational {
        self.pd
            .painted
            .iter()
            .map(|&p| xi.coeffs[&p] * Rational::from_integer(a.coords()[p] as i64))
            .sum()
    }

    pub fn eval(&self, xi: &KahlerParam, i: usize) -> Rational {
        self.eval_root(xi, self.rs().root(i))
    }

    /// `+1` on `R_m+`, `-1` on `-R_m+`.
    pub fn epsilon(&self, a: &Root) -> Result<i8> {
        let i = self
            .rs()
            .index_of(a)
            .ok_or_else(|| Error::NotARoot(a.to_string()))?;
        self.epsilon_idx(i)
    }

    pub fn epsilon_idx(&self, i: usize) -> Result<i8> {
        if !self.in_m[i] {
            return Err(Error::IsotropyRoot(self.rs().root(i).to_string()));
        }
        Ok(if self.rs().is_positive(i) { 1 } else { -1 })
    }

    /// `[m, m]` lies in `h`: no two roots of `R_m+` add up to a root.
    pub fn is_symmetric_coset(&self) -> bool {
        let rs = self.rs();
        self.r_m_plus
            .iter()
            .all(|&a| self.r_m_plus.iter().all(|&b| rs.sum(a, b).is_none()))
    }

    /// Deterministic sample of the chamber: coefficients in `(0, 10]`.
    pub fn random_kahler_param(&self, seed: u64) -> KahlerParam {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs = self
            .pd
            .painted
            .iter()
            .map(|&p| {
                let den: i64 = rng.random_range(1..=8);
                let num: i64 = rng.random_range(1..=10 * den);
                (p, Rational::new(num, den))
            })
            .collect();
        KahlerParam { coeffs }
    }

    /// `count` parameters from consecutive seeds starting at `seed`.
    pub fn kahler_sample(&self, seed: u64, count: usize) -> Vec<KahlerParam> {
        (0..count as u64)
            .map(|k| self.random_kahler_param(seed.wrapping_add(k)))
            .collect()
    }
}

/// Builds the flag data of a painted diagram.
pub fn make_flag(pd: PaintedDiagram) -> FlagData {
    FlagData::new(pd)
}

/// The element `xi` of the center, as positive coefficients on the painted
/// nodes (dual basis to the painted simple-root coordinates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerParam {
    coeffs: BTreeMap<usize, Rational>,
}

impl KahlerParam {
    /// `values` are listed in painted-node order.
    pub fn new(pd: &PaintedDiagram, values: &[Rational]) -> Result<Self> {
        if values.len() != pd.painted.len() {
            return Err(Error::BadKahlerParam(format!(
                "expected {} coefficients, got {}",
                pd.painted.len(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::BadKahlerParam(format!(
                "coefficient {v} is not strictly positive"
            )));
        }
        Ok(KahlerParam {
            coeffs: pd.painted.iter().copied().zip(values.iter().copied()).collect(),
        })
    }

    /// All coefficients equal to 1.
    pub fn uniform(pd: &PaintedDiagram) -> Self {
        KahlerParam {
            coeffs: pd.painted.iter().map(|&p| (p, Rational::from_integer(1))).collect(),
        }
    }

    /// Parses `c1,c2,...` with rational entries such as `3/2`.
    pub fn parse(pd: &PaintedDiagram, s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(str::trim)
            .map(|x| {
                x.parse::<Rational>().map_err(|_| Error::Parse {
                    input: s.to_string(),
                    reason: format!("{x:?} is not a rational number"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        KahlerParam::new(pd, &values)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Rational> {
        &self.coeffs
    }

    pub fn values(&self) -> Vec<Rational> {
        self.coeffs.values().copied().collect()
    }

    pub fn scaled(&self, factor: Rational) -> Self {
        assert!(factor.is_positive());
        KahlerParam {
            coeffs: self.coeffs.iter().map(|(&k, &v)| (k, v * factor)).collect(),
        }
    }
}

impl fmt::Display for KahlerParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.values().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl KahlerParam {
    /// True when `xi` lies in the open chamber of the canonical ordering.
    pub fn is_in_chamber(&self, f: &FlagData) -> bool {
        self.coeffs.values().all(|v| v.is_positive())
            && f.r_m_plus.iter().all(|&i| f.eval(self, i).is_positive())
            && f.r_h.iter().all(|&i| f.eval(self, i).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flag(s: &str) -> FlagData {
        FlagData::new(s.parse().unwrap())
    }

    fn coords(f: &FlagData, set: &[usize]) -> Vec<Vec<i32>> {
        set.iter().map(|&i| f.rs().root(i).coords().to_vec()).collect()
    }

    #[test]
    fn parse_and_display() {
        let pd: PaintedDiagram = "A3:{2,3}".parse().unwrap();
        assert_eq!(pd.painted_nodes(), vec![2, 3]);
        assert_eq!(pd.to_string(), "A3:{2,3}");
        let pd: PaintedDiagram = " G2 : { 1 } ".parse().unwrap();
        assert_eq!(pd.to_string(), "G2:{1}");
        assert!("A3:{}".parse::<PaintedDiagram>().is_err());
        assert!("A3:{4}".parse::<PaintedDiagram>().is_err());
        assert!("A3:{0}".parse::<PaintedDiagram>().is_err());
        assert!("A3{1}".parse::<PaintedDiagram>().is_err());
        assert!("D3:{1}".parse::<PaintedDiagram>().is_err());
        assert!("A3:{x}".parse::<PaintedDiagram>().is_err());
    }

    #[test]
    fn a3_two_painted_nodes() {
        let f = flag("A3:{2,3}");
        assert_eq!(coords(&f, f.r_h()), vec![vec![1, 0, 0], vec![-1, 0, 0]]);
        assert_eq!(f.r_m_plus().len(), 5);
        assert_eq!(f.center_dim(), 2);
        assert_eq!(f.dim_m(), 10);
    }

    #[test]
    fn full_flag_has_empty_r_h() {
        let f = flag("B3:{1,2,3}");
        assert!(f.r_h().is_empty());
        assert_eq!(f.r_m_plus().len(), 9);
    }

    #[test]
    fn g2_twistor_space() {
        let f = flag("G2:{1}");
        assert_eq!(coords(&f, f.r_h()), vec![vec![0, 1], vec![0, -1]]);
        assert_eq!(f.r_m_plus().len(), 5);
    }

    #[test]
    fn evaluation_on_roots() {
        let f = flag("A3:{2,3}");
        let xi = KahlerParam::uniform(f.painted_diagram());
        let rs = f.rs();
        assert_eq!(f.eval_root(&xi, &Root::simple(3, 0)), Rational::zero());
        assert_eq!(f.eval_root(&xi, rs.highest()), Rational::from_integer(2));
        assert_eq!(f.eval_root(&xi, &-&Root::simple(3, 1)), Rational::from_integer(-1));
    }

    #[test]
    fn epsilon_signs() {
        let f = flag("A3:{2,3}");
        let rs = f.rs();
        assert_eq!(f.epsilon(rs.highest()), Ok(1));
        assert_eq!(f.epsilon(&-rs.highest()), Ok(-1));
        assert_eq!(f.epsilon(&Root::new(vec![0, 1, 1])), Ok(1));
        assert!(matches!(f.epsilon(&Root::simple(3, 0)), Err(Error::IsotropyRoot(_))));
        assert!(matches!(f.epsilon(&Root::new(vec![2, 0, 0])), Err(Error::NotARoot(_))));
    }

    #[test]
    fn symmetric_cosets() {
        assert!(flag("A3:{2}").is_symmetric_coset());
        assert!(!flag("A3:{2,3}").is_symmetric_coset());
        assert!(!flag("A2:{1,2}").is_symmetric_coset());
    }

    #[test]
    fn random_params_are_reproducible_and_in_range() {
        let f = flag("E6:{1,3,6}");
        let a = f.random_kahler_param(0);
        assert_eq!(a, f.random_kahler_param(0));
        assert_ne!(a, f.random_kahler_param(1));
        for v in a.values() {
            assert!(v > Rational::zero() && v <= Rational::from_integer(10));
        }
        assert!(a.is_in_chamber(&f));
    }

    #[test]
    fn kahler_param_validation() {
        let pd: PaintedDiagram = "A3:{2,3}".parse().unwrap();
        assert!(KahlerParam::parse(&pd, "1,3/2").is_ok());
        assert!(KahlerParam::parse(&pd, "1").is_err());
        assert!(KahlerParam::parse(&pd, "1,0").is_err());
        assert!(KahlerParam::parse(&pd, "1,-2").is_err());
        assert!(KahlerParam::parse(&pd, "1,abc").is_err());
    }

    #[test]
    fn t_modules_partition_r_m_plus() {
        let f = flag("A3:{2,3}");
        let total: usize = f.t_modules().iter().map(|m| m.roots.len()).sum();
        assert_eq!(total, f.r_m_plus().len());
        let t_roots: BTreeSet<_> = f.t_modules().iter().map(|m| m.t_root.clone()).collect();
        assert_eq!(t_roots.len(), f.t_modules().len());
        // T-roots (1,0), (0,1), (1,1)
        assert_eq!(f.t_modules().len(), 3);
    }
}
