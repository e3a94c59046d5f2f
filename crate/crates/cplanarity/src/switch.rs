//! Parity switches and the GF(2) decision system.
//!
//! An edge-vertex switch (e, v) drags edge e over vertex v, flipping the
//! crossing parity of e with every edge incident to v. Inside a clustered
//! drawing the drag must not cross cluster boundaries, which admits exactly
//! the switches whose v is a child of a node on the cluster-tree path
//! between e's endpoints (endpoints themselves excluded). An edge-cluster
//! switch (e, C) drags e over the whole disc of C and acts like all (e, v),
//! v in C, performed at once.
//!
//! Deciding whether some clustered drawing is independently even then reads:
//! is 0 in rhs + span(rows)? That is plain Gaussian elimination over GF(2)
//! with a fixed pivot order (lowest variable index, then lowest equation
//! index), on bit-packed rows.

use crate::bits::BitRow;
use crate::drawing::{PairIndex, ParityVector};
use crate::graph::{ClusteredGraph, EdgeId, NodeId, VertexId};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SwitchTarget {
    Vertex(VertexId),
    Cluster(NodeId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Switch {
    pub edge: EdgeId,
    pub target: SwitchTarget,
}

impl fmt::Display for Switch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.target {
            SwitchTarget::Vertex(v) => write!(f, "(edge {}, vertex {})", self.edge, v),
            SwitchTarget::Cluster(c) => write!(f, "(edge {}, cluster {})", self.edge, c),
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SwitchError {
    #[error("switch {0} is not a variable of this system")]
    UnknownSwitch(Switch),
    #[error("parity vector dimension {got} does not match the system dimension {want}")]
    DimensionMismatch { got: usize, want: usize },
}

/// Complete, duplicate-free enumeration of the allowed switches of `g`, in
/// (edge id, target) order. Expects a simplified graph; loops admit no
/// switches and parallel edges would only repeat rows.
pub fn allowed_switches(g: &ClusteredGraph) -> Vec<Switch> {
    let tree = g.tree();
    let leaf = tree.leaf_map();
    let mut out: BTreeSet<Switch> = BTreeSet::new();
    for (e, u, v) in g.edges() {
        if u == v {
            continue;
        }
        for node in tree.path_between(leaf[&u], leaf[&v]) {
            for &child in tree.children(node) {
                let target = match tree.vertex_of(child) {
                    Some(w) => {
                        if w == u || w == v {
                            continue;
                        }
                        SwitchTarget::Vertex(w)
                    }
                    None => SwitchTarget::Cluster(child),
                };
                out.insert(Switch { edge: e, target });
            }
        }
    }
    out.into_iter().collect()
}

fn vertex_row(g: &ClusteredGraph, pairs: &PairIndex, e: EdgeId, w: VertexId) -> BitRow {
    let mut row = BitRow::zero(pairs.len());
    for (f, a, b) in g.edges() {
        if f == e {
            continue;
        }
        // a loop at w is dragged over on both sides; parity unchanged
        let incidences = (a == w) as usize + (b == w) as usize;
        if incidences % 2 == 1 {
            if let Some(i) = pairs.index_of(e, f) {
                row.flip(i);
            }
        }
    }
    row
}

fn switch_row(g: &ClusteredGraph, pairs: &PairIndex, s: Switch) -> BitRow {
    match s.target {
        SwitchTarget::Vertex(w) => vertex_row(g, pairs, s.edge, w),
        SwitchTarget::Cluster(c) => {
            let mut row = BitRow::zero(pairs.len());
            for w in g.tree().leaves_under(c) {
                row.xor_assign(&vertex_row(g, pairs, s.edge, w));
            }
            row
        }
    }
}

/// The linear system over GF(2): one variable per allowed switch, one
/// equation per indexed edge pair, right-hand side the initial parity vector.
#[derive(Clone, Debug)]
pub struct SwitchSystem {
    pairs: PairIndex,
    switches: Vec<Switch>,
    index_of: BTreeMap<Switch, usize>,
    rows: Vec<BitRow>,
    rhs: ParityVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSet {
    switches: BTreeSet<Switch>,
}

impl WitnessSet {
    pub fn new(switches: impl IntoIterator<Item = Switch>) -> Self {
        // a switch applied twice cancels; set semantics are the right ones
        WitnessSet {
            switches: switches.into_iter().collect(),
        }
    }

    pub fn switches(&self) -> impl Iterator<Item = Switch> + '_ {
        self.switches.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.switches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.switches.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub witness: Option<WitnessSet>,
    pub rank: usize,
}

impl SwitchSystem {
    pub fn pair_index(&self) -> &PairIndex {
        &self.pairs
    }

    pub fn switches(&self) -> &[Switch] {
        &self.switches
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn rhs(&self) -> &ParityVector {
        &self.rhs
    }

    pub fn equation_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn variable_count(&self) -> usize {
        self.switches.len()
    }

    pub fn row_of(&self, s: Switch) -> Option<&BitRow> {
        self.index_of.get(&s).map(|&i| &self.rows[i])
    }
}

/// Assemble the switch system for `g` with right-hand side `v0`. The pair
/// indexing of `v0` must be the one of `g`'s current edge set.
pub fn build_system(g: &ClusteredGraph, v0: ParityVector) -> SwitchSystem {
    debug_assert_eq!(v0.pair_index(), &PairIndex::new(g));
    let pairs = v0.pair_index().clone();
    let switches = allowed_switches(g);
    let rows = switches
        .iter()
        .map(|&s| switch_row(g, &pairs, s))
        .collect();
    let index_of = switches.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    SwitchSystem {
        pairs,
        switches,
        index_of,
        rows,
        rhs: v0,
    }
}

/// Decide 0 in rhs + span(rows) by elimination, consuming variables in the
/// given order. Solvability does not depend on the order; the witness may.
pub fn solve_with_order(sys: &SwitchSystem, order: &[usize]) -> Solution {
    assert_eq!(order.len(), sys.switches.len(), "order must permute variables");
    let m = sys.pairs.len();
    let n = order.len();
    // work rows carry (value over equations, combination over original variables)
    let mut value: Vec<BitRow> = order.iter().map(|&v| sys.rows[v].clone()).collect();
    let mut combo: Vec<BitRow> = (0..n)
        .map(|i| {
            let mut c = BitRow::zero(n);
            c.set(i, true);
            c
        })
        .collect();
    let mut used = vec![false; n];
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (equation, work row)
    for col in 0..m {
        let Some(p) = (0..n).find(|&r| !used[r] && value[r].get(col)) else {
            continue;
        };
        used[p] = true;
        pivots.push((col, p));
        for r in 0..n {
            if r != p && !used[r] && value[r].get(col) {
                let (pv, pc) = (value[p].clone(), combo[p].clone());
                value[r].xor_assign(&pv);
                combo[r].xor_assign(&pc);
            }
        }
    }
    let mut residual = sys.rhs.bits().clone();
    let mut chosen = BitRow::zero(n);
    for &(col, p) in &pivots {
        if residual.get(col) {
            residual.xor_assign(&value[p]);
            chosen.xor_assign(&combo[p]);
        }
    }
    let witness = residual.is_zero().then(|| {
        let set = WitnessSet::new(chosen.ones().map(|i| sys.switches[order[i]]));
        debug_assert!(apply_switches(sys.rhs(), &set, sys)
            .expect("witness switches belong to the system")
            .is_zero());
        set
    });
    Solution {
        witness,
        rank: pivots.len(),
    }
}

/// Decide 0 in rhs + span(rows) with the canonical variable order.
pub fn solve(sys: &SwitchSystem) -> Solution {
    let order: Vec<usize> = (0..sys.switches.len()).collect();
    solve_with_order(sys, &order)
}

/// XOR the rows of the witness switches into `v0`.
pub fn apply_switches(
    v0: &ParityVector,
    witness: &WitnessSet,
    sys: &SwitchSystem,
) -> Result<ParityVector, SwitchError> {
    if v0.dimension() != sys.pairs.len() {
        return Err(SwitchError::DimensionMismatch {
            got: v0.dimension(),
            want: sys.pairs.len(),
        });
    }
    let mut out = v0.clone();
    for s in witness.switches() {
        let row = sys.row_of(s).ok_or(SwitchError::UnknownSwitch(s))?;
        out.xor_row(row);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{dfs_circle_order, initial_parity_vector, CircularOrder};
    use crate::graph::ClusteredGraph;

    #[test]
    fn inter_cluster_edge_switches() {
        // A = {1, 2}, B = {3}; e1 = 1-3
        let g = ClusteredGraph::flat(&[("A", vec![1, 2]), ("B", vec![3])], &[(1, 3)]);
        let sw = allowed_switches(&g);
        let a = g.flat_cluster_of(VertexId(1)).unwrap();
        let b = g.flat_cluster_of(VertexId(3)).unwrap();
        assert_eq!(
            sw,
            vec![
                Switch {
                    edge: EdgeId(1),
                    target: SwitchTarget::Vertex(VertexId(2))
                },
                Switch {
                    edge: EdgeId(1),
                    target: SwitchTarget::Cluster(a)
                },
                Switch {
                    edge: EdgeId(1),
                    target: SwitchTarget::Cluster(b)
                },
            ]
            .into_iter()
            .collect::<Vec<_>>()
        );
    }

    #[test]
    fn intra_cluster_edge_has_no_switches() {
        let g = ClusteredGraph::flat(&[("A", vec![1, 2]), ("B", vec![3])], &[(1, 2)]);
        assert!(allowed_switches(&g).is_empty());
    }

    #[test]
    fn inter_cluster_edge_reaches_every_root_child_cluster() {
        // three clusters; edge between the first two; all three clusters are
        // children of the root, hence of a path node
        let g = ClusteredGraph::flat(
            &[("C1", vec![1, 2]), ("C2", vec![3, 4]), ("C3", vec![5, 6])],
            &[(1, 3)],
        );
        let sw = allowed_switches(&g);
        let clusters: Vec<Switch> = sw
            .iter()
            .copied()
            .filter(|s| matches!(s.target, SwitchTarget::Cluster(_)))
            .collect();
        assert_eq!(clusters.len(), 3);
        // members of C3 are not individually reachable
        assert!(!sw
            .iter()
            .any(|s| s.target == SwitchTarget::Vertex(VertexId(5))
                || s.target == SwitchTarget::Vertex(VertexId(6))));
        // members of C1 and C2 other than the endpoints are
        assert!(sw.iter().any(|s| s.target == SwitchTarget::Vertex(VertexId(2))));
        assert!(sw.iter().any(|s| s.target == SwitchTarget::Vertex(VertexId(4))));
    }

    fn c4() -> ClusteredGraph {
        ClusteredGraph::flat(
            &[("A", vec![1, 2]), ("B", vec![3, 4])],
            &[(1, 2), (2, 3), (3, 4), (4, 1)],
        )
    }

    #[test]
    fn c4_twisted_system_shape() {
        let g = c4();
        let ord = CircularOrder::from_order(vec![
            VertexId(1),
            VertexId(3),
            VertexId(2),
            VertexId(4),
        ]);
        let sys = build_system(&g, initial_parity_vector(&g, &ord));
        assert_eq!(sys.equation_count(), 2);
        assert_eq!(sys.rhs().bit(EdgeId(1), EdgeId(3)), Some(true));
        assert_eq!(sys.rhs().bit(EdgeId(2), EdgeId(4)), Some(false));
        assert!(sys.variable_count() <= g.edge_count() * (g.vertex_count() + 2));
    }

    #[test]
    fn c4_canonical_order_is_solvable_with_empty_witness() {
        let g = c4();
        let ord = dfs_circle_order(&g);
        let sys = build_system(&g, initial_parity_vector(&g, &ord));
        let sol = solve(&sys);
        let w = sol.witness.expect("solvable");
        assert!(w.is_empty());
    }

    #[test]
    fn cluster_row_is_sum_of_member_rows() {
        let g = ClusteredGraph::flat(
            &[("A", vec![1, 2, 3]), ("B", vec![4, 5])],
            &[(1, 4), (2, 5), (3, 4), (1, 2), (4, 5)],
        );
        let pairs = PairIndex::new(&g);
        for (e, _, _) in g.edges() {
            for (c, members) in g.flat_clusters() {
                let cluster_row = switch_row(
                    &g,
                    &pairs,
                    Switch {
                        edge: e,
                        target: SwitchTarget::Cluster(c),
                    },
                );
                let mut sum = BitRow::zero(pairs.len());
                for v in members {
                    sum.xor_assign(&vertex_row(&g, &pairs, e, v));
                }
                assert_eq!(cluster_row, sum);
            }
        }
    }

    #[test]
    fn solvability_is_order_invariant() {
        let g = c4();
        let ord = CircularOrder::from_order(vec![
            VertexId(1),
            VertexId(3),
            VertexId(2),
            VertexId(4),
        ]);
        let sys = build_system(&g, initial_parity_vector(&g, &ord));
        let base = solve(&sys).witness.is_some();
        let n = sys.variable_count();
        let mut order: Vec<usize> = (0..n).collect();
        // a couple of fixed shuffles
        order.reverse();
        assert_eq!(solve_with_order(&sys, &order).witness.is_some(), base);
        let rotated: Vec<usize> = (0..n).map(|i| (i + 3) % n).collect();
        assert_eq!(solve_with_order(&sys, &rotated).witness.is_some(), base);
    }

    #[test]
    fn witness_cancels_rhs() {
        // twisted order of a path graph: solvable via a vertex switch
        let g = ClusteredGraph::flat(&[("A", vec![1, 2, 3, 4])], &[(1, 2), (3, 4)]);
        let ord = CircularOrder::from_order(vec![
            VertexId(1),
            VertexId(3),
            VertexId(2),
            VertexId(4),
        ]);
        let sys = build_system(&g, initial_parity_vector(&g, &ord));
        assert_eq!(sys.rhs().bit(EdgeId(1), EdgeId(2)), Some(true));
        let sol = solve(&sys);
        let w = sol.witness.expect("a switch over an endpoint-adjacent vertex fixes one crossing");
        let fixed = apply_switches(sys.rhs(), &w, &sys).unwrap();
        assert!(fixed.is_zero());
    }

    #[test]
    fn apply_rejects_foreign_switch() {
        let g = c4();
        let ord = dfs_circle_order(&g);
        let sys = build_system(&g, initial_parity_vector(&g, &ord));
        let foreign = Switch {
            edge: EdgeId(99),
            target: SwitchTarget::Vertex(VertexId(1)),
        };
        let err = apply_switches(sys.rhs(), &WitnessSet::new([foreign]), &sys).unwrap_err();
        assert_eq!(err, SwitchError::UnknownSwitch(foreign));
    }
}
