//! Exhaustive sweeps over painted Dynkin diagrams and the theorem audit.
//!
//! Every entry is computed independently from its painting; the report is
//! ordered by (family, rank, painted set) so that output is byte-stable for
//! a fixed seed.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::chevalley::ChevalleyTable;
use crate::error::{Error, Result};
use crate::exceptions::{dim_g, onishchik_exception, ExceptionTag};
use crate::flag::{FlagData, KahlerParam, PaintedDiagram};
use crate::hermitian::HermitianFamily;
use crate::oracle;
use crate::rootsys::{CartanType, Family, RootSystem};
use crate::symmetry::{
    center_of_nilradical, h_prime, k_prime_check, leaf_pair, leaf_via_diagram, symmetry_roots,
};
use crate::diagram::Diagram;

/// Largest rank the enumerator accepts.
pub const MAX_RANK: usize = 8;

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    pub max_rank: usize,
    /// `None` sweeps every family.
    pub families: Option<Vec<Family>>,
    /// Keep one painting per orbit of the diagram automorphism group.
    pub dedup_automorphisms: bool,
    pub seed: u64,
    /// Kähler parameters sampled per painting for the oracle comparison.
    pub xi_samples: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            max_rank: 6,
            families: None,
            dedup_automorphisms: false,
            seed: 0,
            xi_samples: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafRecord {
    pub u: String,
    pub k_factors: Vec<String>,
    pub k_center_dim: usize,
    pub name: String,
    pub family: HermitianFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Checks {
    /// Structure-constant oracle = reduced test = symmetry roots = center of
    /// the nilradical, on every sampled Kähler parameter.
    pub oracle_agree: bool,
    pub diagram_agree: bool,
    pub hprime_closed: bool,
    pub kprime_commutes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryRecord {
    pub family: Family,
    pub rank: usize,
    /// 1-based painted nodes.
    pub painted: Vec<usize>,
    pub dim_g: usize,
    #[serde(rename = "dim_M")]
    pub dim_m: usize,
    pub symmetric: bool,
    pub exception: Option<ExceptionTag>,
    pub index: usize,
    pub coindex: usize,
    pub leaf: Option<LeafRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaf_error: Option<String>,
    pub checks: Checks,
}

impl EntryRecord {
    pub fn label(&self) -> String {
        let nodes: Vec<String> = self.painted.iter().map(|n| n.to_string()).collect();
        format!("{}{}:{{{}}}", self.family, self.rank, nodes.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub entry: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub symmetric: usize,
    pub exceptions: usize,
    /// Non-symmetric, non-exceptional entries: the ones the theorem covers.
    pub theorem_cases: usize,
    pub min_coindex: Option<usize>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub entries: Vec<EntryRecord>,
    pub summary: Summary,
}

fn entry_seed(base: u64, pd: &PaintedDiagram) -> u64 {
    let mask: u64 = pd.painted().iter().map(|&i| 1u64 << i).sum();
    let ty = pd.cartan_type();
    let tag = (ty.family() as u64) << 40 | (ty.rank() as u64) << 32 | mask;
    base.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(tag)
}

/// Computes one report entry. `extra_xi` is checked in addition to the
/// seeded sample.
pub fn survey_painting(
    pd: &PaintedDiagram,
    table: &ChevalleyTable,
    seed: u64,
    xi_samples: usize,
    extra_xi: &[KahlerParam],
) -> EntryRecord {
    let ty = pd.cartan_type();
    let f = FlagData::new(pd.clone());
    let r_p_plus = symmetry_roots(&f);
    let index = 2 * r_p_plus.len();

    let mut xis = f.kahler_sample(entry_seed(seed, pd), xi_samples);
    xis.extend_from_slice(extra_xi);
    let oracle_agree = center_of_nilradical(&f) == r_p_plus
        && oracle::cross_check(&f, table, &xis, &r_p_plus).is_ok();

    let (leaf, leaf_error, diagram_agree) = match leaf_pair(&f) {
        Ok(l) => {
            let agree = leaf_via_diagram(pd).is_isomorphic(&Diagram::of_type(l.u_type));
            let rec = LeafRecord {
                u: l.u_type.to_string(),
                k_factors: l.k_semisimple.iter().map(|t| t.to_string()).collect(),
                k_center_dim: l.k_center_dim,
                name: l.name,
                family: l.family,
            };
            (Some(rec), None, agree)
        }
        Err(e) => (None, Some(e.to_string()), false),
    };

    EntryRecord {
        family: ty.family(),
        rank: ty.rank(),
        painted: pd.painted_nodes(),
        dim_g: dim_g(ty),
        dim_m: f.dim_m(),
        symmetric: f.is_symmetric_coset(),
        exception: onishchik_exception(ty, pd.painted()),
        index,
        coindex: f.dim_m() - index,
        leaf,
        leaf_error,
        checks: Checks {
            oracle_agree,
            diagram_agree,
            hprime_closed: h_prime(&f).is_ok(),
            kprime_commutes: k_prime_check(&f),
        },
    }
}

/// Permutations of the nodes preserving the Cartan matrix.
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<Vec<usize>> {
    fn extend(c: &[Vec<i32>], perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let k = perm.len();
        if k == c.len() {
            out.push(perm.clone());
            return;
        }
        for img in 0..c.len() {
            if used[img] {
                continue;
            }
            let ok = (0..k).all(|j| c[k][j] == c[img][perm[j]] && c[j][k] == c[perm[j]][img]);
            if ok {
                used[img] = true;
                perm.push(img);
                extend(c, perm, used, out);
                perm.pop();
                used[img] = false;
            }
        }
    }
    let mut out = Vec::new();
    let n = rs.rank();
    extend(rs.cartan(), &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Nonempty paintings of `ty` as sorted 0-based node sets, in report order.
pub fn paintings(rs: &RootSystem, dedup: bool) -> Vec<BTreeSet<usize>> {
    let n = rs.rank();
    let autos = if dedup { diagram_automorphisms(rs) } else { vec![] };
    let mut sets: Vec<Vec<usize>> = (1u32..(1 << n))
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    if dedup {
        sets.retain(|s| {
            autos.iter().all(|p| {
                let mut img: Vec<usize> = s.iter().map(|&i| p[i]).collect();
                img.sort_unstable();
                *s <= img
            })
        });
    }
    sets.sort();
    sets.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// Sweeps every painting of every selected simple type up to `max_rank`.
pub fn enumerate(opts: &EnumerateOptions) -> Result<EnumerationReport> {
    if opts.max_rank > MAX_RANK {
        return Err(Error::Parse {
            input: opts.max_rank.to_string(),
            reason: format!("max rank is limited to {MAX_RANK}"),
        });
    }
    let mut entries = Vec::new();
    for ty in CartanType::all_up_to(opts.max_rank) {
        if let Some(fams) = &opts.families {
            if !fams.contains(&ty.family()) {
                continue;
            }
        }
        let rs = Arc::new(RootSystem::from_type(ty));
        let table = ChevalleyTable::build(&rs);
        for painted in paintings(&rs, opts.dedup_automorphisms) {
            let pd = PaintedDiagram::new(rs.clone(), painted)?;
            entries.push(survey_painting(&pd, &table, opts.seed, opts.xi_samples, &[]));
        }
    }
    Ok(EnumerationReport::from_entries(entries))
}

impl EnumerationReport {
    pub fn from_entries(entries: Vec<EntryRecord>) -> Self {
        let violations = audit(&entries);
        let theorem = |e: &&EntryRecord| !e.symmetric && e.exception.is_none();
        let summary = Summary {
            total: entries.len(),
            symmetric: entries.iter().filter(|e| e.symmetric).count(),
            exceptions: entries.iter().filter(|e| e.exception.is_some()).count(),
            theorem_cases: entries.iter().filter(theorem).count(),
            min_coindex: entries.iter().filter(theorem).map(|e| e.coindex).min(),
            violations,
        };
        EnumerationReport { entries, summary }
    }
}

/// Result of [`verify_theorem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

/// Audits a report: root-level checks on every non-exceptional entry, and on
/// non-symmetric ones the leaf classification, `k >= 6`,
/// `dim g <= k(k-1)/2`, and `k = 6` only for `A3` with white node 1 or 3.
pub fn verify_theorem(report: &EnumerationReport) -> Verdict {
    let violations = audit(&report.entries);
    Verdict {
        passed: violations.is_empty(),
        violations,
    }
}

fn is_su4_k6_painting(e: &EntryRecord) -> bool {
    e.family == Family::A && e.rank == 3 && (e.painted == [1, 2] || e.painted == [2, 3])
}

fn audit(entries: &[EntryRecord]) -> Vec<Violation> {
    let mut out = Vec::new();
    for e in entries.iter().filter(|e| e.exception.is_none()) {
        let mut fail = |check: &str, detail: String| {
            out.push(Violation {
                entry: e.label(),
                check: check.into(),
                detail,
            })
        };
        let c = e.checks;
        if !c.oracle_agree {
            fail("oracle_agree", "transvection sets disagree".into());
        }
        if !c.diagram_agree {
            fail("diagram_agree", "extended-diagram leaf differs from u".into());
        }
        if !c.hprime_closed {
            fail("hprime_closed", "h' roots not closed under addition".into());
        }
        if !c.kprime_commutes {
            fail("kprime_commutes", "[k', p] != 0".into());
        }
        if e.symmetric != (e.coindex == 0) {
            fail("symmetric_iff_coindex_zero", format!("coindex {}", e.coindex));
        }
        if e.index % 2 != 0 || e.coindex % 2 != 0 {
            fail("parity", format!("index {} coindex {}", e.index, e.coindex));
        }
        if let Some(err) = &e.leaf_error {
            fail("leaf_hermitian", err.clone());
        }
        if e.symmetric {
            continue;
        }
        let k = e.coindex;
        if k < 6 {
            fail("coindex_at_least_6", format!("k = {k}"));
        }
        if 2 * e.dim_g > k * k.saturating_sub(1) {
            fail("dim_bound", format!("dim g = {} > k(k-1)/2 with k = {k}", e.dim_g));
        }
        if k == 6 && !is_su4_k6_painting(e) {
            fail("k6_only_su4", "k = 6 outside su(4) with h = 2R+su(2)".into());
        }
        if is_su4_k6_painting(e) && k != 6 {
            fail("k6_only_su4", format!("expected k = 6, found {k}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(max_rank: usize, fams: Option<Vec<Family>>) -> EnumerateOptions {
        EnumerateOptions {
            max_rank,
            families: fams,
            xi_samples: 2,
            ..Default::default()
        }
    }

    #[test]
    fn counts_for_type_a() {
        let r = enumerate(&opts(3, Some(vec![Family::A]))).unwrap();
        assert_eq!(r.entries.len(), 1 + 3 + 7);
    }

    #[test]
    fn rank_two_includes_g2_and_b2() {
        let r = enumerate(&opts(2, None)).unwrap();
        let g2 = r.entries.iter().filter(|e| e.family == Family::G).count();
        let b2 = r.entries.iter().filter(|e| e.family == Family::B).count();
        assert_eq!((g2, b2), (3, 3));
        assert!(r.entries.iter().any(|e| e.family == Family::G && e.painted == [1]));
        assert!(r.entries.iter().any(|e| e.family == Family::G && e.painted == [2]));
    }

    #[test]
    fn automorphism_groups() {
        let sizes: Vec<usize> = ["A3", "D4", "E6", "B3", "G2", "D5", "E7"]
            .iter()
            .map(|s| diagram_automorphisms(&RootSystem::from_type(s.parse().unwrap())).len())
            .collect();
        assert_eq!(sizes, vec![2, 6, 2, 1, 1, 2, 1]);
    }

    #[test]
    fn dedup_keeps_one_per_orbit() {
        let rs = RootSystem::from_type("A3".parse().unwrap());
        assert_eq!(paintings(&rs, false).len(), 7);
        // {1}~{3}, {1,2}~{2,3}
        assert_eq!(paintings(&rs, true).len(), 5);
        let d4 = RootSystem::from_type("D4".parse().unwrap());
        // orbits of subsets of D4 nodes under S3 on the three leaves
        assert_eq!(paintings(&d4, true).len(), 7);
    }

    #[test]
    fn rank_bound_enforced() {
        assert!(enumerate(&opts(9, None)).is_err());
    }

    #[test]
    fn audit_flags_bad_entries() {
        let rs = Arc::new(RootSystem::from_type("A3".parse().unwrap()));
        let table = ChevalleyTable::build(&rs);
        let pd = PaintedDiagram::from_nodes(rs, &[2, 3]).unwrap();
        let mut e = survey_painting(&pd, &table, 0, 1, &[]);
        assert!(verify_theorem(&EnumerationReport::from_entries(vec![e.clone()])).passed);
        e.coindex = 4;
        let v = verify_theorem(&EnumerationReport::from_entries(vec![e.clone()]));
        assert!(!v.passed);
        assert!(v.violations.iter().any(|x| x.check == "coindex_at_least_6"));
        e.exception = Some(ExceptionTag::A);
        assert!(verify_theorem(&EnumerationReport::from_entries(vec![e])).passed);
    }

    #[test]
    fn report_is_deterministic() {
        let a = enumerate(&opts(3, None)).unwrap();
        let b = enumerate(&opts(3, None)).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
