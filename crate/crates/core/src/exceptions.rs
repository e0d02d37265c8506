//! Flag manifolds of a simple `G` whose full isometry group is strictly
//! larger than `G`, and the dimension of `g`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::rootsys::{CartanType, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExceptionTag {
    /// `M = CP^{2n+1}`, `g = sp(n+1)`, `h = u(1) + sp(n)`.
    #[serde(rename = "a")]
    A,
    /// `g = so(2n-1)`, `h = u(n-1)`, `n >= 4`.
    #[serde(rename = "b")]
    B,
    /// `M = Q_5`, `g = g2`, `h = u(2)` with a long root in `h`.
    #[serde(rename = "c")]
    C,
}

impl fmt::Display for ExceptionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionTag::A => "a",
            ExceptionTag::B => "b",
            ExceptionTag::C => "c",
        })
    }
}

/// Matches a painting (0-based node set) against the three exceptional
/// families.
///
/// * (a) `C_m` painted `{1}` for `m >= 3`, and `B2` painted `{2}` (which is
///   `C2` painted at its short node, `sp(2)/u(1)+sp(1) = CP^3`);
/// * (b) `B_m` painted `{m}` for `m >= 3`, so `h = u(m)`;
/// * (c) `G2` painted `{2}`, leaving the long root white.
pub fn onishchik_exception(ty: CartanType, painted: &BTreeSet<usize>) -> Option<ExceptionTag> {
    let n = ty.rank();
    let single = |node: usize| painted.len() == 1 && painted.contains(&node);
    match ty.family() {
        Family::C if single(0) => Some(ExceptionTag::A),
        Family::B if n == 2 && single(1) => Some(ExceptionTag::A),
        Family::B if n >= 3 && single(n - 1) => Some(ExceptionTag::B),
        Family::G if single(1) => Some(ExceptionTag::C),
        _ => None,
    }
}

/// Dimension of the compact simple Lie algebra of type `ty`.
pub fn dim_g(ty: CartanType) -> usize {
    let n = ty.rank();
    match (ty.family(), n) {
        (Family::A, _) => n * (n + 2),
        (Family::B | Family::C, _) => n * (2 * n + 1),
        (Family::D, _) => n * (2 * n - 1),
        (Family::E, 6) => 78,
        (Family::E, 7) => 133,
        (Family::E, _) => 248,
        (Family::F, _) => 52,
        (Family::G, _) => 14,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn tag(ty: &str, nodes: &[usize]) -> Option<ExceptionTag> {
        let set = nodes.iter().map(|n| n - 1).collect();
        onishchik_exception(ty.parse().unwrap(), &set)
    }

    #[test]
    fn the_three_families() {
        assert_eq!(tag("G2", &[2]), Some(ExceptionTag::C));
        assert_eq!(tag("G2", &[1]), None);
        assert_eq!(tag("G2", &[1, 2]), None);
        assert_eq!(tag("B3", &[3]), Some(ExceptionTag::B));
        assert_eq!(tag("B6", &[6]), Some(ExceptionTag::B));
        assert_eq!(tag("B3", &[1]), None);
        assert_eq!(tag("C3", &[1]), Some(ExceptionTag::A));
        assert_eq!(tag("C5", &[1]), Some(ExceptionTag::A));
        assert_eq!(tag("C3", &[3]), None);
        assert_eq!(tag("B2", &[2]), Some(ExceptionTag::A));
        assert_eq!(tag("B2", &[1]), None);
        assert_eq!(tag("A3", &[2, 3]), None);
    }

    #[test]
    fn dimensions_match_root_count_plus_rank() {
        assert_eq!(dim_g("A3".parse().unwrap()), 15);
        assert_eq!(dim_g("G2".parse().unwrap()), 14);
        assert_eq!(dim_g("A1".parse().unwrap()), 3);
        for ty in CartanType::all_up_to(8) {
            assert_eq!(dim_g(ty), RootSystem::from_type(ty).dim(), "{ty}");
        }
    }
}
