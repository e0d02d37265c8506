//! Dynkin and extended Dynkin diagrams.
//!
//! A [`Diagram`] keeps the (generalized) Cartan matrix of its nodes; edges,
//! canonical forms and type recognition are all derived from it. Two diagrams
//! are isomorphic exactly when their Cartan matrices agree up to a
//! simultaneous permutation of rows and columns.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::Zero;

use crate::rootsys::{CartanType, Family, RootSystem};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeLabel {
    /// Simple root `a_{i+1}` (0-based index).
    Simple(usize),
    /// The extra node `-theta` of the extended diagram.
    Affine,
}

impl std::fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NodeLabel::Simple(i) => write!(f, "a{}", i + 1),
            NodeLabel::Affine => write!(f, "-theta"),
        }
    }
}

/// Arrow on a multiple bond; it points from the longer to the shorter root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrow {
    None,
    /// From `a` to `b`.
    Forward,
    /// From `b` to `a`.
    Backward,
    /// Both directions (affine `A1`, whose two nodes pair to -2 each way).
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    pub arrow: Arrow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    nodes: Vec<NodeLabel>,
    cartan: Vec<Vec<i32>>,
}

impl Diagram {
    pub fn from_cartan(nodes: Vec<NodeLabel>, cartan: Vec<Vec<i32>>) -> Self {
        assert_eq!(nodes.len(), cartan.len());
        Diagram { nodes, cartan }
    }

    /// Standard diagram of a simple type.
    pub fn of_type(ty: CartanType) -> Self {
        let nodes = (0..ty.rank()).map(NodeLabel::Simple).collect();
        Diagram::from_cartan(nodes, ty.cartan_matrix())
    }

    pub fn nodes(&self) -> &[NodeLabel] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn edges(&self) -> Vec<Edge> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let (x, y) = (self.cartan[a][b].abs(), self.cartan[b][a].abs());
                if x == 0 && y == 0 {
                    continue;
                }
                let arrow = match x.cmp(&y) {
                    std::cmp::Ordering::Greater => Arrow::Forward,
                    std::cmp::Ordering::Less => Arrow::Backward,
                    std::cmp::Ordering::Equal if x > 1 => Arrow::Both,
                    std::cmp::Ordering::Equal => Arrow::None,
                };
                out.push(Edge {
                    a,
                    b,
                    multiplicity: x.max(y) as u8,
                    arrow,
                });
            }
        }
        out
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&w| w != v && self.cartan[v][w] != 0)
    }

    /// Subdiagram induced on the given positions.
    pub fn induced(&self, keep: &[usize]) -> Diagram {
        let nodes = keep.iter().map(|&i| self.nodes[i]).collect();
        let cartan = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        Diagram { nodes, cartan }
    }

    /// Removes every node whose label is in `labels`.
    pub fn without(&self, labels: &BTreeSet<NodeLabel>) -> Diagram {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| !labels.contains(&self.nodes[i]))
            .collect();
        self.induced(&keep)
    }

    /// Connected components as sorted position lists, ordered by first node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Component that contains the node labelled `label`, if present.
    pub fn component_of(&self, label: NodeLabel) -> Option<Diagram> {
        let pos = self.nodes.iter().position(|&l| l == label)?;
        self.components()
            .into_iter()
            .find(|c| c.contains(&pos))
            .map(|c| self.induced(&c))
    }

    /// A labelling-independent encoding: equal iff the diagrams are isomorphic.
    ///
    /// Nodes are first split into classes by iterated neighbourhood
    /// refinement; the lexicographically least Cartan matrix over all
    /// class-respecting orders is then taken.
    pub fn canonical_form(&self) -> Vec<i32> {
        let n = self.len();
        let mut colors = vec![0usize; n];
        let mut classes = 1usize;
        loop {
            let sigs: Vec<(usize, Vec<(i32, i32, usize)>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(i32, i32, usize)> = self
                        .neighbours(v)
                        .map(|w| (self.cartan[v][w], self.cartan[w][v], colors[w]))
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let distinct: BTreeSet<_> = sigs.iter().cloned().collect();
            let rank: BTreeMap<_, usize> =
                distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
            colors = sigs.iter().map(|s| rank[s]).collect();
            let now = rank.len();
            if now == classes {
                break;
            }
            classes = now;
        }

        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            cells.entry(colors[v]).or_default().push(v);
        }
        let cells: Vec<Vec<usize>> = cells.into_values().collect();

        let mut best: Option<Vec<i32>> = None;
        let mut order = Vec::with_capacity(n);
        self.search_orders(&cells, 0, &mut order, &mut best);

        let mut out = vec![n as i32];
        let mut sorted_colors = colors.clone();
        sorted_colors.sort_unstable();
        out.extend(sorted_colors.iter().map(|&c| c as i32));
        out.extend(best.unwrap_or_default());
        out
    }

    fn search_orders(
        &self,
        cells: &[Vec<usize>],
        depth: usize,
        order: &mut Vec<usize>,
        best: &mut Option<Vec<i32>>,
    ) {
        if depth == cells.len() {
            let flat: Vec<i32> = order
                .iter()
                .flat_map(|&i| order.iter().map(move |&j| (i, j)))
                .map(|(i, j)| self.cartan[i][j])
                .collect();
            if best.as_ref().is_none_or(|b| flat < *b) {
                *best = Some(flat);
            }
            return;
        }
        let mut cell = cells[depth].clone();
        permute(&mut cell, 0, &mut |perm| {
            let mark = order.len();
            order.extend_from_slice(perm);
            self.search_orders(cells, depth + 1, order, best);
            order.truncate(mark);
        });
    }

    pub fn is_isomorphic(&self, other: &Diagram) -> bool {
        self.len() == other.len() && self.canonical_form() == other.canonical_form()
    }

    /// Recognizes a connected finite-type diagram.
    pub fn classify(&self) -> Option<CartanType> {
        if self.is_empty() || !self.is_connected() {
            return None;
        }
        let n = self.len();
        let form = self.canonical_form();
        candidates(n)
            .into_iter()
            .find(|ty| Diagram::of_type(*ty).canonical_form() == form)
    }

    /// Graphviz rendering. Painted nodes are filled black; the affine node
    /// is drawn as a double circle.
    pub fn to_dot(&self, name: &str, painted: &BTreeSet<usize>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{name}\" {{");
        let _ = writeln!(s, "  node [shape=circle, label=\"\", width=0.25];");
        for (i, label) in self.nodes.iter().enumerate() {
            let style = match label {
                NodeLabel::Affine => "shape=doublecircle".to_string(),
                NodeLabel::Simple(k) if painted.contains(k) => {
                    "style=filled, fillcolor=black".to_string()
                }
                NodeLabel::Simple(_) => "style=solid".to_string(),
            };
            let _ = writeln!(s, "  n{i} [{style}, xlabel=\"{label}\"];");
        }
        for e in self.edges() {
            let dir = match e.arrow {
                Arrow::None => "",
                Arrow::Forward => ", dir=forward",
                Arrow::Backward => ", dir=back",
                Arrow::Both => ", dir=both",
            };
            let color = vec!["black"; e.multiplicity as usize].join(":");
            let _ = writeln!(s, "  n{} -- n{} [color=\"{color}\"{dir}];", e.a, e.b);
        }
        s.push_str("}\n");
        s
    }
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn candidates(n: usize) -> Vec<CartanType> {
    Family::ALL
        .iter()
        .filter_map(|&f| CartanType::new(f, n).ok())
        .collect()
}

/// Dynkin diagram of a root system, one node per simple root.
pub fn dynkin_diagram(rs: &RootSystem) -> Diagram {
    let nodes = (0..rs.rank()).map(NodeLabel::Simple).collect();
    Diagram::from_cartan(nodes, rs.cartan().to_vec())
}

/// Extended Dynkin diagram: the simple roots plus `-theta` as the last node.
pub fn extended_diagram(rs: &RootSystem) -> Diagram {
    let n = rs.rank();
    let neg_theta: Vec<i32> = rs.highest().coords().iter().map(|c| -c).collect();
    let mut vectors: Vec<Vec<i32>> = (0..n)
        .map(|i| crate::rootsys::Root::simple(n, i).coords().to_vec())
        .collect();
    vectors.push(neg_theta);
    let lengths: Vec<Rational> = vectors.iter().map(|v| rs.inner_coords(v, v)).collect();
    let cartan = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let c = Rational::from_integer(2) * rs.inner_coords(&vectors[i], &vectors[j])
                        / lengths[j];
                    debug_assert!(c.is_integer() && !lengths[j].is_zero());
                    c.to_integer() as i32
                })
                .collect()
        })
        .collect();
    let mut nodes: Vec<NodeLabel> = (0..n).map(NodeLabel::Simple).collect();
    nodes.push(NodeLabel::Affine);
    Diagram::from_cartan(nodes, cartan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type(s.parse().unwrap())
    }

    fn neighbours_of(d: &Diagram, label: NodeLabel) -> BTreeSet<NodeLabel> {
        let pos = d.nodes().iter().position(|&l| l == label).unwrap();
        d.neighbours(pos).map(|w| d.nodes()[w]).collect()
    }

    #[test]
    fn a3_extended_is_a_four_cycle() {
        let d = extended_diagram(&rs("A3"));
        assert_eq!(d.len(), 4);
        let edges = d.edges();
        assert_eq!(edges.len(), 4);
        assert!(edges.iter().all(|e| e.multiplicity == 1));
        assert_eq!(
            neighbours_of(&d, NodeLabel::Affine),
            [NodeLabel::Simple(0), NodeLabel::Simple(2)].into()
        );
    }

    #[test]
    fn a1_extended_double_bond_both_ways() {
        let d = extended_diagram(&rs("A1"));
        let edges = d.edges();
        assert_eq!(edges.len(), 1);
        assert_eq!(edges[0].multiplicity, 2);
        assert_eq!(edges[0].arrow, Arrow::Both);
    }

    #[test]
    fn g2_extended_chain() {
        let d = extended_diagram(&rs("G2"));
        assert_eq!(neighbours_of(&d, NodeLabel::Affine), [NodeLabel::Simple(0)].into());
        let triple = d
            .edges()
            .into_iter()
            .find(|e| e.multiplicity == 3)
            .unwrap();
        assert_eq!((triple.a, triple.b), (0, 1));
        assert_eq!(triple.arrow, Arrow::Forward);
    }

    #[test]
    fn dynkin_node_counts_and_multiplicities() {
        for ty in CartanType::all_up_to(8) {
            let r = RootSystem::from_type(ty);
            let d = dynkin_diagram(&r);
            let e = extended_diagram(&r);
            assert_eq!(d.len(), ty.rank());
            assert_eq!(e.len(), ty.rank() + 1);
            assert!(d.is_connected() && e.is_connected());
            for edge in d.edges().into_iter().chain(e.edges()) {
                assert!((1..=3).contains(&edge.multiplicity));
            }
            assert_eq!(d.classify(), Some(ty));
        }
    }

    #[test]
    fn canonical_form_ignores_labelling() {
        let d = Diagram::of_type("D5".parse().unwrap());
        let shuffled = d.induced(&[4, 2, 0, 3, 1]);
        assert!(d.is_isomorphic(&shuffled));
        let b3 = Diagram::of_type("B3".parse().unwrap());
        let c3 = Diagram::of_type("C3".parse().unwrap());
        assert!(!b3.is_isomorphic(&c3));
    }

    #[test]
    fn classify_low_rank_coincidences() {
        let a3 = Diagram::of_type("A3".parse().unwrap());
        assert_eq!(a3.classify().unwrap().to_string(), "A3");
        let reversed_b2 = Diagram::of_type("B2".parse().unwrap()).induced(&[1, 0]);
        assert_eq!(reversed_b2.classify().unwrap().to_string(), "B2");
    }

    #[test]
    fn dot_output_marks_painted_nodes() {
        let dot = extended_diagram(&rs("A3")).to_dot("A3", &[1, 2].into());
        assert!(dot.starts_with("graph \"A3\""));
        assert_eq!(dot.matches("fillcolor=black").count(), 2);
        assert!(dot.contains("doublecircle"));
    }
}
