//! Symmetry roots, index and coindex of symmetry, and the leaf of symmetry.
//!
//! With the canonical ordering, a root `a` of `R_m+` carries a transvection
//! exactly when `a + R_m+` contains no root; these are the roots of the
//! center `z` of the nilradical `m^{1,0}`. Writing `R_p = R_p+ u -R_p+`:
//!
//! * index of symmetry `= |R_p|`, coindex `= |R_m| - |R_p|`;
//! * `k = [p, p]` has roots `a - b` (`a, b` in `R_p+`) and torus spanned by
//!   the coroots of `R_p+`; `u = k + p` is the leaf algebra;
//! * `h' = h + p` has roots `R_h u R_p`.
//!
//! All of this is pure root combinatorics; no structure constants are used.

use std::collections::{BTreeSet, HashSet};

use crate::diagram::{extended_diagram, Diagram, NodeLabel};
use crate::error::{Error, Result};
use crate::exceptions::{onishchik_exception, ExceptionTag};
use crate::flag::{FlagData, PaintedDiagram};
use crate::hermitian::{self, HermitianFamily};
use crate::rootsys::{CartanType, RootSystem};
use crate::subsystem::Subsystem;

/// `{a in R_m+ : (a + R_m+) n R = {}}`, scanning the root-sum table.
pub fn symmetry_roots(f: &FlagData) -> Vec<usize> {
    let rs = f.rs();
    f.r_m_plus()
        .iter()
        .copied()
        .filter(|&a| f.r_m_plus().iter().all(|&b| rs.sum(a, b).is_none()))
        .collect()
}

/// Roots of the center of `m^{1,0}`: `E_a` commutes with every `E_b`,
/// `b in R_m+`. A sum `a + b` (`b != +-a`) is a root iff the `a`-string
/// through `b` continues upward, i.e. `q = p - <b, a^vee> > 0`, so this scan
/// runs on string lengths and Cartan integers instead of the sum table.
pub fn center_of_nilradical(f: &FlagData) -> Vec<usize> {
    let rs = f.rs();
    let commutes = |a: usize, b: usize| {
        if a == b {
            return true;
        }
        let mut p = 0;
        let mut cur = rs.root(b).clone();
        loop {
            let down = &cur - rs.root(a);
            if rs.index_of(&down).is_none() {
                break;
            }
            p += 1;
            cur = down;
        }
        p - rs.cartan_integer(b, a) <= 0
    };
    f.r_m_plus()
        .iter()
        .copied()
        .filter(|&a| f.r_m_plus().iter().all(|&b| commutes(a, b)))
        .collect()
}

/// The leaf of symmetry as a Hermitian symmetric pair `(u, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafDescriptor {
    pub u_type: CartanType,
    pub k_semisimple: Vec<CartanType>,
    pub k_center_dim: usize,
    pub r_u: Vec<usize>,
    pub r_k: Vec<usize>,
    /// Dimension of the common Cartan subalgebra of `u` and `k`.
    pub toral_rank: usize,
    /// The unique `k`-highest root of `R_p+` (always the highest root).
    pub highest_vector: usize,
    pub family: HermitianFamily,
    pub name: String,
}

impl LeafDescriptor {
    pub fn dim_u(&self) -> usize {
        self.toral_rank + self.r_u.len()
    }

    pub fn dim_k(&self) -> usize {
        self.toral_rank + self.r_k.len()
    }

    /// `k` written as e.g. `A1+T1`.
    pub fn k_label(&self) -> String {
        let mut parts: Vec<String> = self.k_semisimple.iter().map(|t| t.to_string()).collect();
        if self.k_center_dim > 0 {
            parts.push(format!("T{}", self.k_center_dim));
        }
        parts.join("+")
    }
}

fn with_negatives(rs: &RootSystem, plus: &[usize]) -> Vec<usize> {
    let mut all: Vec<usize> = plus.iter().flat_map(|&a| [a, rs.neg(a)]).collect();
    all.sort_unstable();
    all
}

/// Roots of `k = [p, p]`: differences of distinct symmetry roots.
pub fn k_roots(f: &FlagData, r_p_plus: &[usize]) -> Vec<usize> {
    let rs = f.rs();
    let set: BTreeSet<usize> = r_p_plus
        .iter()
        .flat_map(|&a| r_p_plus.iter().filter_map(move |&b| rs.diff(a, b)))
        .collect();
    set.into_iter().collect()
}

/// Builds and identifies the leaf pair `(u, k)`.
///
/// Fails with [`Error::Consistency`] if `u` is not simple, if the ranks of
/// `u` and `k` disagree, if `p` does not have the highest root as its unique
/// `k`-highest weight, or if the pair is missing from the classification.
pub fn leaf_pair(f: &FlagData) -> Result<LeafDescriptor> {
    let rs = f.rs();
    let r_p_plus = symmetry_roots(f);
    let r_p = with_negatives(rs, &r_p_plus);
    let r_k = k_roots(f, &r_p_plus);
    if r_k.iter().any(|r| r_p.binary_search(r).is_ok()) {
        return Err(Error::Consistency("R_k meets R_p".into()));
    }
    let coords: Vec<&[i32]> = r_p_plus.iter().map(|&a| rs.root(a).coords()).collect();
    let toral_rank = RootSystem::span_rank(&coords);

    let mut r_u: Vec<usize> = r_k.iter().chain(&r_p).copied().collect();
    r_u.sort_unstable();
    let u = Subsystem::new(rs, &r_u)?;
    if !u.is_irreducible() {
        return Err(Error::Consistency(format!(
            "leaf algebra u is not simple: {:?}",
            u.types().iter().map(|t| t.to_string()).collect::<Vec<_>>()
        )));
    }
    if u.rank() != toral_rank {
        return Err(Error::Consistency(format!(
            "rank(u) = {} but the coroots of R_p span {toral_rank}",
            u.rank()
        )));
    }
    let k = Subsystem::new(rs, &r_k)?;
    let k_center_dim = toral_rank - k.rank();

    let r_p_set: HashSet<usize> = r_p_plus.iter().copied().collect();
    let tops: Vec<usize> = r_p_plus
        .iter()
        .copied()
        .filter(|&a| {
            k.positive
                .iter()
                .all(|&b| rs.sum(a, b).is_none_or(|s| !r_p_set.contains(&s)))
        })
        .collect();
    if tops != [rs.highest_index()] {
        return Err(Error::Consistency(format!(
            "p must have the highest root as its only k-highest vector, found {:?}",
            tops.iter().map(|&t| rs.root(t).to_string()).collect::<Vec<_>>()
        )));
    }

    let u_type = u.types()[0];
    let k_semisimple = k.types();
    let pair = hermitian::classify(u_type, &k_semisimple, k_center_dim).ok_or_else(|| {
        Error::Consistency(format!(
            "({u_type}, {k_semisimple:?} + T{k_center_dim}) is not an irreducible Hermitian symmetric pair"
        ))
    })?;

    Ok(LeafDescriptor {
        u_type,
        k_semisimple,
        k_center_dim,
        r_u,
        r_k,
        toral_rank,
        highest_vector: tops[0],
        family: pair.family,
        name: pair.name,
    })
}

/// Component of `-theta` in the extended diagram once the painted nodes are
/// removed; its type is the type of the leaf algebra `u`.
pub fn leaf_via_diagram(pd: &PaintedDiagram) -> Diagram {
    let black: BTreeSet<NodeLabel> = pd.painted().iter().map(|&i| NodeLabel::Simple(i)).collect();
    extended_diagram(pd.rs())
        .without(&black)
        .component_of(NodeLabel::Affine)
        .expect("affine node is never painted")
}

/// Roots of `h' = h + p`, checked to be closed under addition.
pub fn h_prime(f: &FlagData) -> Result<Vec<usize>> {
    let rs = f.rs();
    let r_p = with_negatives(rs, &symmetry_roots(f));
    let mut roots: Vec<usize> = f.r_h().iter().chain(&r_p).copied().collect();
    roots.sort_unstable();
    let set: HashSet<usize> = roots.iter().copied().collect();
    for &a in &roots {
        for &b in &roots {
            if let Some(s) = rs.sum(a, b) {
                if !set.contains(&s) {
                    return Err(Error::Consistency(format!(
                        "h' not closed: {} + {} = {}",
                        rs.root(a),
                        rs.root(b),
                        rs.root(s)
                    )));
                }
            }
        }
    }
    Ok(roots)
}

/// `[k', p] = 0` at root level: no root of `R_h \ R_k` adds to a root of `R_p`.
pub fn k_prime_check(f: &FlagData) -> bool {
    let rs = f.rs();
    let r_p_plus = symmetry_roots(f);
    let r_p = with_negatives(rs, &r_p_plus);
    let r_k: HashSet<usize> = k_roots(f, &r_p_plus).into_iter().collect();
    f.r_h()
        .iter()
        .filter(|g| !r_k.contains(g))
        .all(|&g| r_p.iter().all(|&a| rs.sum(g, a).is_none()))
}

#[derive(Debug, Clone)]
pub struct SymmetryReport {
    pub flag: FlagData,
    pub r_p_plus: Vec<usize>,
    /// `2 |R_p+|`.
    pub index: usize,
    /// `dim M - index`.
    pub coindex: usize,
    pub leaf: LeafDescriptor,
    pub h_prime_roots: Vec<usize>,
    pub exception: Option<ExceptionTag>,
}

impl SymmetryReport {
    pub fn new(flag: FlagData) -> Result<Self> {
        let r_p_plus = symmetry_roots(&flag);
        let index = 2 * r_p_plus.len();
        let coindex = flag.dim_m() - index;
        let leaf = leaf_pair(&flag)?;
        let h_prime_roots = h_prime(&flag)?;
        debug_assert_eq!(coindex, flag.rs().len() - h_prime_roots.len());
        let pd = flag.painted_diagram();
        let exception = onishchik_exception(pd.cartan_type(), pd.painted());
        Ok(SymmetryReport {
            flag,
            r_p_plus,
            index,
            coindex,
            leaf,
            h_prime_roots,
            exception,
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.coindex == 0
    }

    /// Extended-diagram leaf is isomorphic to the Dynkin diagram of `u`.
    pub fn diagram_agrees(&self) -> bool {
        leaf_via_diagram(self.flag.painted_diagram()).is_isomorphic(&Diagram::of_type(self.leaf.u_type))
    }
}

/// Full root-level analysis of one painted diagram.
pub fn analyze(pd: PaintedDiagram) -> Result<SymmetryReport> {
    SymmetryReport::new(FlagData::new(pd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;

    fn flag(s: &str) -> FlagData {
        FlagData::new(s.parse().unwrap())
    }

    fn coords(f: &FlagData, set: &[usize]) -> BTreeSet<Vec<i32>> {
        set.iter().map(|&i| f.rs().root(i).coords().to_vec()).collect()
    }

    fn set(items: &[&[i32]]) -> BTreeSet<Vec<i32>> {
        items.iter().map(|c| c.to_vec()).collect()
    }

    #[test]
    fn a3_two_black_nodes() {
        let f = flag("A3:{2,3}");
        let expected = set(&[&[1, 1, 1], &[0, 1, 1]]);
        assert_eq!(coords(&f, &symmetry_roots(&f)), expected);
        assert_eq!(coords(&f, &center_of_nilradical(&f)), expected);
    }

    #[test]
    fn a3_outer_nodes_center_is_the_corner() {
        let f = flag("A3:{1,3}");
        assert_eq!(coords(&f, &center_of_nilradical(&f)), set(&[&[1, 1, 1]]));
    }

    #[test]
    fn a2_full_flag_center() {
        let f = flag("A2:{1,2}");
        assert_eq!(coords(&f, &center_of_nilradical(&f)), set(&[&[1, 1]]));
    }

    #[test]
    fn g2_twistor_symmetry_roots() {
        let f = flag("G2:{1}");
        assert_eq!(coords(&f, &symmetry_roots(&f)), set(&[&[2, 3]]));
    }

    #[test]
    fn symmetric_coset_keeps_all_of_r_m_plus() {
        let f = flag("A3:{2}");
        assert_eq!(symmetry_roots(&f), f.r_m_plus());
    }

    #[test]
    fn a3_leaf_is_cp2() {
        let leaf = leaf_pair(&flag("A3:{2,3}")).unwrap();
        assert_eq!(leaf.u_type.to_string(), "A2");
        assert_eq!(leaf.k_label(), "A1+T1");
        assert_eq!(leaf.name, "CP^2");
        assert_eq!(leaf.dim_u(), leaf.dim_k() + 4);
    }

    #[test]
    fn g2_twistor_leaf_is_cp1() {
        let leaf = leaf_pair(&flag("G2:{1}")).unwrap();
        assert_eq!(leaf.u_type.to_string(), "A1");
        assert!(leaf.k_semisimple.is_empty());
        assert_eq!(leaf.k_center_dim, 1);
        assert_eq!(leaf.name, "CP^1");
    }

    #[test]
    fn symmetric_coset_leaf_is_the_whole_space() {
        let f = flag("A3:{2}");
        let leaf = leaf_pair(&f).unwrap();
        assert_eq!(leaf.r_u.len(), f.rs().len());
        assert_eq!(leaf.name, "Gr_2(C^4)");
        let r = analyze("A3:{2}".parse().unwrap()).unwrap();
        assert_eq!(r.coindex, 0);
        assert_eq!(r.h_prime_roots.len(), f.rs().len());
    }

    #[test]
    fn leaf_diagrams() {
        let a2 = Diagram::of_type("A2".parse().unwrap());
        let a1 = Diagram::of_type("A1".parse().unwrap());
        let d = leaf_via_diagram(&"A3:{2,3}".parse().unwrap());
        assert!(d.is_isomorphic(&a2));
        assert!(d.nodes().contains(&NodeLabel::Simple(0)));
        assert!(leaf_via_diagram(&"A3:{1,3}".parse().unwrap()).is_isomorphic(&a1));
        assert!(leaf_via_diagram(&"G2:{1}".parse().unwrap()).is_isomorphic(&a1));
    }

    #[test]
    fn h_prime_sizes() {
        let f = flag("A3:{2,3}");
        let h = h_prime(&f).unwrap();
        assert_eq!(h.len(), 6);
        assert_eq!(analyze(f.painted_diagram().clone()).unwrap().coindex, 6);
        let r = analyze("G2:{1}".parse().unwrap()).unwrap();
        assert_eq!((r.index, r.coindex), (2, 8));
    }

    #[test]
    fn k_prime_commutes() {
        let f = flag("A3:{2,3}");
        let r_p_plus = symmetry_roots(&f);
        assert_eq!(coords(&f, &k_roots(&f, &r_p_plus)), set(&[&[1, 0, 0], &[-1, 0, 0]]));
        assert!(k_prime_check(&f));
        assert!(k_prime_check(&flag("B3:{3}")));
    }

    #[test]
    fn g2_exception_case_raw_coindex() {
        let r = analyze("G2:{2}".parse().unwrap()).unwrap();
        assert_eq!(r.exception, Some(ExceptionTag::C));
        assert_eq!(r.coindex, 6);
        let rs = r.flag.rs();
        let got: BTreeSet<Root> = r.r_p_plus.iter().map(|&i| rs.root(i).clone()).collect();
        let want: BTreeSet<Root> = [Root::new(vec![2, 3]), Root::new(vec![1, 3])].into();
        assert_eq!(got, want);
    }
}
