//! Root systems of the simple types, built exactly from their Cartan matrices.
//!
//! Roots are integer coordinate vectors over the simple roots. Inner products
//! come from the symmetrized Cartan matrix with long roots of squared length 2,
//! so everything stays in `i32`/[`Rational`] arithmetic.
//!
//! Node numbering (1-based, as used in painted-diagram strings):
//!
//! | type | diagram                                   | short simple roots |
//! |------|-------------------------------------------|--------------------|
//! | A_n  | 1 - 2 - ... - n                           | none               |
//! | B_n  | 1 - 2 - ... - (n-1) => n                  | n                  |
//! | C_n  | 1 - 2 - ... - (n-1) <= n                  | 1 .. n-1           |
//! | D_n  | 1 - ... - (n-2) - (n-1), (n-2) - n        | none               |
//! | E_n  | 1 - 3 - 4 - 5 - ... - n, 2 attached to 4  | none               |
//! | F_4  | 1 - 2 => 3 - 4                            | 3, 4               |
//! | G_2  | 1 >= 2  (triple bond)                     | 2                  |
//!
//! For G_2 node 1 is the long root, so the highest root is `2a1+3a2`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "family must be one of A..G".into(),
            }),
        }
    }
}

/// A simple type such as `B3` or `G2`. Only valid combinations can be built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidType { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid type of rank at most `max_rank`, ordered by (family, rank).
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = CartanType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Squared lengths of the simple roots (long roots have length 2).
    pub fn simple_lengths(&self) -> Vec<Rational> {
        let n = self.rank;
        let long = Rational::from_integer(2);
        let short = Rational::one();
        (0..n)
            .map(|i| match self.family {
                Family::A | Family::D | Family::E => long,
                Family::B => {
                    if i == n - 1 {
                        short
                    } else {
                        long
                    }
                }
                Family::C => {
                    if i == n - 1 {
                        long
                    } else {
                        short
                    }
                }
                Family::F => {
                    if i < 2 {
                        long
                    } else {
                        short
                    }
                }
                Family::G => {
                    if i == 0 {
                        long
                    } else {
                        Rational::new(2, 3)
                    }
                }
            })
            .collect()
    }

    /// Bonds of the Dynkin diagram as 0-based node pairs.
    fn bonds(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
            }
            Family::D => {
                let mut b: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                b.push((n - 3, n - 1));
                b
            }
            Family::E => {
                let mut b = vec![(0, 2), (1, 3)];
                b.extend((2..n - 1).map(|i| (i, i + 1)));
                b
            }
        }
    }

    /// Gram matrix `(a_i, a_j)` of the simple roots. A bond between `a_i`
    /// and `a_j` has inner product `-max(|a_i|^2, |a_j|^2) / 2`.
    pub fn gram_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.rank;
        let lengths = self.simple_lengths();
        let mut g = vec![vec![Rational::zero(); n]; n];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = lengths[i];
        }
        for (i, j) in self.bonds() {
            let v = -lengths[i].max(lengths[j]) / Rational::from_integer(2);
            g[i][j] = v;
            g[j][i] = v;
        }
        g
    }

    /// Cartan matrix with entries `c_ij = 2(a_i, a_j) / (a_j, a_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let g = self.gram_matrix();
        let n = self.rank;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = Rational::from_integer(2) * g[i][j] / g[j][j];
                        debug_assert!(c.is_integer());
                        c.to_integer() as i32
                    })
                    .collect()
            })
            .collect()
    }

    /// Number of roots, from the classical formulas.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1),
            (Family::B | Family::C, _) => 2 * n * n,
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars.next().ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "empty type".into(),
        })?;
        let family: Family = fam.to_string().parse()?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: "rank must be a positive integer".into(),
        })?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A root as integer coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i32>,
    height: i32,
}

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        let height = coords.iter().sum();
        Root { coords, height }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Root::new(coords)
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    pub fn is_positive(&self) -> bool {
        self.height > 0
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl std::ops::Add for &Root {
    type Output = Root;
    fn add(self, other: &Root) -> Root {
        Root::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub for &Root {
    type Output = Root;
    fn sub(self, other: &Root) -> Root {
        Root::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Root {
    /// Renders as e.g. `2a1+3a2` or `-a1-a2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A complete root system.
///
/// Roots are indexed: positive roots first, ordered by height and then by
/// descending coordinates (so the simple roots occupy indices `0..rank` in
/// node order), followed by their negatives in the same order.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i32>>,
    gram: Vec<Vec<Rational>>,
    roots: Vec<Root>,
    npos: usize,
    index: HashMap<Vec<i32>, usize>,
    sums: Vec<Option<u32>>,
    lengths: Vec<Rational>,
    highest: usize,
}

impl RootSystem {
    /// Builds the root system of `family` at `rank` by root-string extension
    /// from the simple roots.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::from_type(CartanType::new(family, rank)?))
    }

    pub fn from_type(ty: CartanType) -> Self {
        let n = ty.rank();
        let cartan = ty.cartan_matrix();
        let gram = ty.gram_matrix();

        let mut known: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut positive: Vec<Vec<i32>> = Vec::new();
        let mut layer: Vec<Vec<i32>> = (0..n).map(|i| Root::simple(n, i).coords).collect();
        for r in &layer {
            known.insert(r.clone(), ());
        }
        while !layer.is_empty() {
            layer.sort_by(|a, b| b.cmp(a));
            let mut next: Vec<Vec<i32>> = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.contains_key(&up) {
                        continue;
                    }
                    // p: how far the a_i-string extends below beta.
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i32 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                    if p - pairing > 0 {
                        known.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
            positive.append(&mut layer);
            layer = next;
        }

        let npos = positive.len();
        let mut roots: Vec<Root> = positive.iter().cloned().map(Root::new).collect();
        roots.extend(positive.iter().map(|c| Root::new(c.iter().map(|x| -x).collect())));
        let index: HashMap<Vec<i32>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();

        let total = roots.len();
        let mut sums = vec![None; total * total];
        for i in 0..total {
            for j in 0..total {
                let s = &roots[i] + &roots[j];
                if let Some(&k) = index.get(&s.coords) {
                    sums[i * total + j] = Some(k as u32);
                }
            }
        }

        let quad = |c: &[i32]| -> Rational {
            let mut acc = Rational::zero();
            for i in 0..n {
                for j in 0..n {
                    acc += gram[i][j] * Rational::from_integer((c[i] * c[j]) as i64);
                }
            }
            acc
        };
        let lengths = roots.iter().map(|r| quad(&r.coords)).collect();
        let highest = npos - 1;

        RootSystem {
            ty,
            cartan,
            gram,
            roots,
            npos,
            index,
            sums,
            lengths,
            highest,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn family(&self) -> Family {
        self.ty.family()
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn positive(&self) -> std::ops::Range<usize> {
        0..self.npos
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    /// Index of the negated root.
    pub fn neg(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.coords).copied()
    }

    pub fn index_of_coords(&self, c: &[i32]) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Index of `root(i) + root(j)` when that sum is a root.
    #[inline]
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i * self.roots.len() + j].map(|k| k as usize)
    }

    /// Index of `root(i) - root(j)` when that difference is a root.
    #[inline]
    pub fn diff(&self, i: usize, j: usize) -> Option<usize> {
        self.sum(i, self.neg(j))
    }

    pub fn highest(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn highest_index(&self) -> usize {
        self.highest
    }

    /// Squared length of root `i` (long roots: 2).
    pub fn squared_length(&self, i: usize) -> Rational {
        self.lengths[i]
    }

    /// Exact inner product of two integer combinations of simple roots.
    pub fn inner_product(&self, a: &Root, b: &Root) -> Rational {
        self.inner_coords(a.coords(), b.coords())
    }

    pub fn inner_coords(&self, a: &[i32], b: &[i32]) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] != 0 {
                    acc += self.gram[i][j] * Rational::from_integer((a[i] * b[j]) as i64);
                }
            }
        }
        acc
    }

    /// Inner product of roots by index.
    pub fn inner(&self, i: usize, j: usize) -> Rational {
        self.inner_coords(self.roots[i].coords(), self.roots[j].coords())
    }

    /// `2(b, a) / (a, a)`, always an integer for roots.
    pub fn cartan_integer(&self, b: usize, a: usize) -> i32 {
        let c = Rational::from_integer(2) * self.inner(b, a) / self.lengths[a];
        debug_assert!(c.is_integer());
        c.to_integer() as i32
    }

    /// The `a`-string through `b`: `(p, q)` with `b - p a, ..., b + q a` all roots.
    pub fn root_string(&self, a: &Root, b: &Root) -> Result<(u32, u32)> {
        let ia = self.index_of(a).ok_or_else(|| Error::NotARoot(a.to_string()))?;
        let ib = self.index_of(b).ok_or_else(|| Error::NotARoot(b.to_string()))?;
        self.root_string_idx(ia, ib)
    }

    pub fn root_string_idx(&self, a: usize, b: usize) -> Result<(u32, u32)> {
        if a == b || a == self.neg(b) {
            return Err(Error::DegenerateString);
        }
        let walk = |step: usize| {
            let mut k = 0u32;
            let mut cur = b;
            while let Some(next) = self.sum(cur, step) {
                k += 1;
                cur = next;
            }
            k
        };
        Ok((walk(self.neg(a)), walk(a)))
    }

    /// Coroot of root `i` written over the simple coroots.
    pub fn coroot_coords(&self, i: usize) -> Vec<i64> {
        let simple = self.ty.simple_lengths();
        self.roots[i]
            .coords
            .iter()
            .zip(&simple)
            .map(|(&c, &len)| {
                let x = Rational::from_integer(c as i64) * len / self.lengths[i];
                debug_assert!(x.is_integer());
                x.to_integer()
            })
            .collect()
    }

    /// `<root(i), a_t^vee>` for every simple coroot `t`.
    pub fn simple_pairings(&self, i: usize) -> Vec<i64> {
        let n = self.rank();
        let c = self.roots[i].coords();
        (0..n)
            .map(|t| (0..n).map(|j| (c[j] * self.cartan[j][t]) as i64).sum())
            .collect()
    }

    /// True when every root has the same length.
    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family(), Family::A | Family::D | Family::E)
    }

    /// `|roots| + rank`.
    pub fn dim(&self) -> usize {
        self.roots.len() + self.rank()
    }

    /// Number of linearly independent vectors among `vectors`, exactly.
    pub fn span_rank(vectors: &[&[i32]]) -> usize {
        let mut rows: Vec<Vec<Rational>> = vectors
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from_integer(x as i64)).collect())
            .collect();
        let cols = rows.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let p = rows[rank][col];
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col] / p;
                    for c in col..cols {
                        let v = rows[rank][c];
                        rows[r][c] -= f * v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Builds the root system of a simple type.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(family, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type(s.parse().unwrap())
    }

    #[test]
    fn a1_has_two_roots() {
        let a1 = rs("A1");
        assert_eq!(a1.len(), 2);
        assert_eq!(a1.highest().coords(), &[1]);
    }

    #[test]
    fn a3_closure() {
        let a3 = rs("A3");
        assert_eq!(a3.len(), 12);
        assert_eq!(a3.highest().coords(), &[1, 1, 1]);
    }

    #[test]
    fn g2_long_first_node() {
        let g2 = rs("G2");
        assert_eq!(g2.len(), 12);
        assert_eq!(g2.highest().coords(), &[2, 3]);
        assert_eq!(g2.cartan()[0][1], -3);
        assert_eq!(g2.cartan()[1][0], -1);
        let positives: Vec<Vec<i32>> = g2.positive().map(|i| g2.root(i).coords().to_vec()).collect();
        assert_eq!(
            positives,
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn classical_counts() {
        for ty in CartanType::all_up_to(8) {
            let r = RootSystem::from_type(ty);
            assert_eq!(r.len(), ty.root_count(), "{ty}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::C, 2).is_err());
        assert!(RootSystem::new(Family::D, 3).is_err());
        assert!(RootSystem::new(Family::E, 5).is_err());
        assert!(RootSystem::new(Family::E, 9).is_err());
        assert!(RootSystem::new(Family::F, 3).is_err());
        assert!(RootSystem::new(Family::G, 3).is_err());
        assert!(RootSystem::new(Family::A, 0).is_err());
        assert!("X3".parse::<CartanType>().is_err());
    }

    #[test]
    fn inner_products() {
        let a3 = rs("A3");
        let a1 = Root::simple(3, 0);
        let a2 = Root::simple(3, 1);
        assert_eq!(a3.inner_product(&a1, &a1), Rational::from_integer(2));
        assert_eq!(a3.inner_product(&a1, &a2), Rational::from_integer(-1));
        let g2 = rs("G2");
        let b = Root::simple(2, 1);
        assert_eq!(g2.inner_product(&b, &b), Rational::new(2, 3));
        assert_eq!(g2.cartan_integer(0, 1), -3);
    }

    #[test]
    fn root_strings() {
        let a2 = rs("A2");
        let (a1, a2r) = (Root::simple(2, 0), Root::simple(2, 1));
        assert_eq!(a2.root_string(&a1, &a2r).unwrap(), (0, 1));
        let g2 = rs("G2");
        let (l, s) = (Root::simple(2, 0), Root::simple(2, 1));
        assert_eq!(g2.root_string(&s, &l).unwrap(), (0, 3));
        assert_eq!(g2.root_string(&l, &l), Err(Error::DegenerateString));
        assert_eq!(g2.root_string(&l, &-&l), Err(Error::DegenerateString));
    }

    #[test]
    fn string_identity_exhaustive_small_rank() {
        for ty in CartanType::all_up_to(4) {
            let r = RootSystem::from_type(ty);
            for a in 0..r.len() {
                for b in 0..r.len() {
                    if a == b || a == r.neg(b) {
                        continue;
                    }
                    let (p, q) = r.root_string_idx(a, b).unwrap();
                    assert_eq!(p as i32 - q as i32, r.cartan_integer(b, a), "{ty}");
                }
            }
        }
    }

    #[test]
    fn sums_match_coordinates_and_sign_pattern() {
        for ty in CartanType::all_up_to(8) {
            let r = RootSystem::from_type(ty);
            let theta = r.highest();
            for (i, root) in r.roots().iter().enumerate() {
                assert!(root.height() != 0);
                let c = root.coords();
                assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0));
                assert_eq!(r.index_of(&-root), Some(r.neg(i)));
                if r.is_positive(i) {
                    assert!(c.iter().zip(theta.coords()).all(|(a, t)| a <= t));
                    if i != r.highest_index() {
                        assert!(root.height() < theta.height());
                    }
                }
                let long = r.squared_length(i);
                assert!(long <= Rational::from_integer(2));
            }
            for i in 0..r.len() {
                for j in 0..r.len() {
                    let s = r.root(i) + r.root(j);
                    assert_eq!(r.sum(i, j), r.index_of(&s));
                }
            }
        }
    }

    #[test]
    fn cartan_entries_from_inner_products() {
        for ty in CartanType::all_up_to(8) {
            let r = RootSystem::from_type(ty);
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    assert_eq!(r.cartan()[i][j], r.cartan_integer(i, j));
                }
            }
            assert_eq!(r.squared_length(r.highest_index()), Rational::from_integer(2));
        }
    }

    #[test]
    fn span_rank_is_exact() {
        assert_eq!(RootSystem::span_rank(&[&[1, 0], &[0, 1], &[1, 1]]), 2);
        assert_eq!(RootSystem::span_rank(&[&[2, 4], &[1, 2]]), 1);
        assert_eq!(RootSystem::span_rank(&[]), 0);
    }
}
