//! Structure of a root subsystem: base, irreducible components, types.

use std::collections::HashSet;

use crate::diagram::{Diagram, NodeLabel};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Simple roots of this component (root indices).
    pub simple: Vec<usize>,
    pub ty: CartanType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsystem {
    pub roots: Vec<usize>,
    pub positive: Vec<usize>,
    pub simple: Vec<usize>,
    pub components: Vec<Component>,
}

impl Subsystem {
    /// Analyzes a subset of `rs` that is closed under negation and under the
    /// reflections it generates. The positive system is inherited from `rs`.
    pub fn new(rs: &RootSystem, roots: &[usize]) -> Result<Self> {
        let set: HashSet<usize> = roots.iter().copied().collect();
        if let Some(&bad) = roots.iter().find(|&&r| !set.contains(&rs.neg(r))) {
            return Err(Error::Consistency(format!(
                "subsystem not closed under negation at {}",
                rs.root(bad)
            )));
        }
        let mut roots: Vec<usize> = set.iter().copied().collect();
        roots.sort_unstable();
        let positive: Vec<usize> = roots.iter().copied().filter(|&r| rs.is_positive(r)).collect();

        let decomposable = |p: usize| {
            positive
                .iter()
                .any(|&x| rs.diff(p, x).is_some_and(|y| rs.is_positive(y) && set.contains(&y)))
        };
        let simple: Vec<usize> = positive.iter().copied().filter(|&p| !decomposable(p)).collect();

        let cartan: Vec<Vec<i32>> = simple
            .iter()
            .map(|&i| simple.iter().map(|&j| rs.cartan_integer(i, j)).collect())
            .collect();
        let whole = Diagram::from_cartan((0..simple.len()).map(NodeLabel::Simple).collect(), cartan);
        let mut components = Vec::new();
        for comp in whole.components() {
            let ty = whole.induced(&comp).classify().ok_or_else(|| {
                Error::Consistency("subsystem component is not of finite type".into())
            })?;
            components.push(Component {
                simple: comp.iter().map(|&k| simple[k]).collect(),
                ty,
            });
        }

        let expected: usize = components.iter().map(|c| c.ty.root_count() / 2).sum();
        if expected != positive.len() {
            return Err(Error::Consistency(format!(
                "subsystem with {} positive roots does not match its base (expected {expected})",
                positive.len()
            )));
        }

        Ok(Subsystem {
            roots,
            positive,
            simple,
            components,
        })
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    /// Component types, sorted.
    pub fn types(&self) -> Vec<CartanType> {
        let mut t: Vec<_> = self.components.iter().map(|c| c.ty).collect();
        t.sort();
        t
    }
}
