//! Irreducible Hermitian symmetric pairs `(u, k)` of compact type.
//!
//! Matching is on the type of `u` plus the multiset of simple factors of `k`
//! (with a one-dimensional center). Low-rank factors are normalized so that
//! e.g. `so(3)` is reported as `A1` and `so(6)` as `A3`.

use std::fmt;

use serde::Serialize;

use crate::rootsys::{CartanType, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum HermitianFamily {
    #[serde(rename = "complex Grassmannian")]
    ComplexGrassmannian,
    #[serde(rename = "odd quadric")]
    OddQuadric,
    #[serde(rename = "even quadric")]
    EvenQuadric,
    #[serde(rename = "Lagrangian type")]
    Lagrangian,
    #[serde(rename = "orthogonal type")]
    Orthogonal,
    #[serde(rename = "E III")]
    EIII,
    #[serde(rename = "E VII")]
    EVII,
}

impl fmt::Display for HermitianFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HermitianFamily::ComplexGrassmannian => "complex Grassmannian",
            HermitianFamily::OddQuadric => "odd quadric",
            HermitianFamily::EvenQuadric => "even quadric",
            HermitianFamily::Lagrangian => "Lagrangian type",
            HermitianFamily::Orthogonal => "orthogonal type",
            HermitianFamily::EIII => "E III",
            HermitianFamily::EVII => "E VII",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianPair {
    pub u: CartanType,
    /// Simple factors of `k`, normalized and sorted.
    pub k_factors: Vec<CartanType>,
    pub family: HermitianFamily,
    /// Conventional name of `U/K`, e.g. `CP^2`, `Gr_2(C^5)`, `Q_5`.
    pub name: String,
}

fn ty(family: Family, rank: usize) -> CartanType {
    CartanType::new(family, rank).expect("valid normalized type")
}

/// Simple factors of the algebra `family_rank`, allowing the degenerate
/// ranks that appear inside isotropy algebras.
pub fn normalized_factors(family: Family, rank: usize) -> Vec<CartanType> {
    match (family, rank) {
        (_, 0) | (Family::D, 1) => vec![],
        (Family::B | Family::C, 1) => vec![ty(Family::A, 1)],
        (Family::C, 2) => vec![ty(Family::B, 2)],
        (Family::D, 2) => vec![ty(Family::A, 1), ty(Family::A, 1)],
        (Family::D, 3) => vec![ty(Family::A, 3)],
        (f, r) => vec![ty(f, r)],
    }
}

fn pair(u: CartanType, mut k: Vec<CartanType>, family: HermitianFamily, name: String) -> HermitianPair {
    k.sort();
    HermitianPair {
        u,
        k_factors: k,
        family,
        name,
    }
}

/// Every irreducible Hermitian symmetric pair whose `u` has type `u`.
pub fn pairs_for(u: CartanType) -> Vec<HermitianPair> {
    let n = u.rank();
    let mut out = Vec::new();
    match u.family() {
        Family::A => {
            for p in 1..=n.div_ceil(2) {
                let q = n + 1 - p;
                let mut k = normalized_factors(Family::A, p - 1);
                k.extend(normalized_factors(Family::A, q - 1));
                let name = if p == 1 {
                    format!("CP^{n}")
                } else {
                    format!("Gr_{p}(C^{})", n + 1)
                };
                out.push(pair(u, k, HermitianFamily::ComplexGrassmannian, name));
            }
        }
        Family::B => out.push(pair(
            u,
            normalized_factors(Family::B, n - 1),
            HermitianFamily::OddQuadric,
            format!("Q_{}", 2 * n - 1),
        )),
        Family::C => out.push(pair(
            u,
            normalized_factors(Family::A, n - 1),
            HermitianFamily::Lagrangian,
            format!("Sp({n})/U({n})"),
        )),
        Family::D => {
            out.push(pair(
                u,
                normalized_factors(Family::D, n - 1),
                HermitianFamily::EvenQuadric,
                format!("Q_{}", 2 * n - 2),
            ));
            out.push(pair(
                u,
                normalized_factors(Family::A, n - 1),
                HermitianFamily::Orthogonal,
                format!("SO({})/U({n})", 2 * n),
            ));
        }
        Family::E if n == 6 => out.push(pair(
            u,
            vec![ty(Family::D, 5)],
            HermitianFamily::EIII,
            "E6/Spin(10)U(1)".into(),
        )),
        Family::E if n == 7 => out.push(pair(
            u,
            vec![ty(Family::E, 6)],
            HermitianFamily::EVII,
            "E7/E6U(1)".into(),
        )),
        _ => {}
    }
    out
}

/// Looks up `(u, k)` in the classification; `k` must have a one-dimensional
/// center. The first listed pair wins when two coincide (`D4`).
pub fn classify(u: CartanType, k_factors: &[CartanType], k_center_dim: usize) -> Option<HermitianPair> {
    if k_center_dim != 1 {
        return None;
    }
    let mut k = k_factors.to_vec();
    k.sort();
    pairs_for(u).into_iter().find(|p| p.k_factors == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn projective_plane() {
        let p = classify(t("A2"), &[t("A1")], 1).unwrap();
        assert_eq!(p.name, "CP^2");
        assert_eq!(p.family, HermitianFamily::ComplexGrassmannian);
    }

    #[test]
    fn projective_line_has_trivial_semisimple_part() {
        let p = classify(t("A1"), &[], 1).unwrap();
        assert_eq!(p.name, "CP^1");
    }

    #[test]
    fn grassmannian_and_quadrics() {
        assert_eq!(classify(t("A4"), &[t("A2"), t("A1")], 1).unwrap().name, "Gr_2(C^5)");
        assert_eq!(classify(t("B3"), &[t("B2")], 1).unwrap().name, "Q_5");
        assert_eq!(classify(t("B2"), &[t("A1")], 1).unwrap().name, "Q_3");
        assert_eq!(classify(t("D5"), &[t("A3")], 1).is_none(), true);
        assert_eq!(classify(t("D5"), &[t("D4")], 1).unwrap().name, "Q_8");
        assert_eq!(classify(t("D5"), &[t("A4")], 1).unwrap().family, HermitianFamily::Orthogonal);
        assert_eq!(classify(t("C3"), &[t("A2")], 1).unwrap().family, HermitianFamily::Lagrangian);
        assert_eq!(classify(t("E6"), &[t("D5")], 1).unwrap().family, HermitianFamily::EIII);
        assert_eq!(classify(t("E7"), &[t("E6")], 1).unwrap().family, HermitianFamily::EVII);
    }

    #[test]
    fn rejects_non_hermitian_data() {
        assert!(classify(t("A2"), &[t("A1")], 2).is_none());
        assert!(classify(t("G2"), &[t("A1"), t("A1")], 1).is_none());
        assert!(classify(t("F4"), &[t("B3")], 1).is_none());
        assert!(classify(t("E8"), &[t("E7")], 1).is_none());
    }
}
