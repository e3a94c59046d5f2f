//! The Hanani-Tutte style decision pipeline.
//!
//! Simplify, lay the vertices on a circle by cluster, build the switch
//! system, solve it. An unsolvable system rules out clustered planarity for
//! every input. A solvable one proves it only when the instance falls in a
//! class where independently even drawings are known to imply clustered
//! planarity: two top-level clusters, or every cluster (and the whole graph)
//! connected. Outside those classes solvability is reported as inconclusive;
//! solvable non-c-planar instances do exist.

use crate::drawing::{dfs_circle_order, initial_parity_vector, CircularOrder};
use crate::graph::{ClusteredGraph, EdgeBoundVerdict};
use crate::switch::{build_system, solve, Solution, SwitchSystem, WitnessSet};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    CPlanar,
    NotCPlanar,
    EvenDrawingExistsInconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::CPlanar => write!(f, "c-planar"),
            Outcome::NotCPlanar => write!(f, "not c-planar"),
            Outcome::EvenDrawingExistsInconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Which structural class justified upgrading "solvable" to "c-planar".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SoundnessTier {
    TwoClustered,
    CConnected,
}

#[derive(Clone, Debug)]
pub struct Diagnostics {
    pub simplified_vertex_count: usize,
    pub simplified_edge_count: usize,
    pub edge_bound: EdgeBoundVerdict,
    pub equation_count: usize,
    pub variable_count: usize,
    pub rank: usize,
    pub witness: Option<WitnessSet>,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    pub tier: Option<SoundnessTier>,
    pub diagnostics: Diagnostics,
}

/// Everything up to (but not including) solving.
pub enum Prepared {
    /// Simplification left at least 3|V'| edges on |V'| >= 1 vertices;
    /// no simple planar drawing fits that many edges.
    BoundFailed { simplified: ClusteredGraph },
    System {
        simplified: ClusteredGraph,
        order: CircularOrder,
        system: SwitchSystem,
    },
}

pub fn prepare(g: &ClusteredGraph) -> Prepared {
    let simplified = g.simplify();
    match simplified.edge_bound {
        EdgeBoundVerdict::Fail => Prepared::BoundFailed {
            simplified: simplified.graph,
        },
        EdgeBoundVerdict::Pass => {
            let order = dfs_circle_order(&simplified.graph);
            let v0 = initial_parity_vector(&simplified.graph, &order);
            let system = build_system(&simplified.graph, v0);
            Prepared::System {
                simplified: simplified.graph,
                order,
                system,
            }
        }
    }
}

fn tier_of(simplified: &ClusteredGraph) -> Option<SoundnessTier> {
    let class = simplified.classify();
    if class.two_clustered {
        Some(SoundnessTier::TwoClustered)
    } else if class.c_connected {
        Some(SoundnessTier::CConnected)
    } else {
        None
    }
}

pub fn test_ht(g: &ClusteredGraph) -> Verdict {
    debug_assert!(g.validate().is_valid(), "malformed clustered graph");
    match prepare(g) {
        Prepared::BoundFailed { simplified } => Verdict {
            outcome: Outcome::NotCPlanar,
            tier: None,
            diagnostics: Diagnostics {
                simplified_vertex_count: simplified.vertex_count(),
                simplified_edge_count: simplified.edge_count(),
                edge_bound: EdgeBoundVerdict::Fail,
                equation_count: 0,
                variable_count: 0,
                rank: 0,
                witness: None,
            },
        },
        Prepared::System {
            simplified, system, ..
        } => {
            let Solution { witness, rank } = solve(&system);
            let tier = tier_of(&simplified);
            let outcome = match (&witness, tier) {
                (None, _) => Outcome::NotCPlanar,
                (Some(_), Some(_)) => Outcome::CPlanar,
                (Some(_), None) => Outcome::EvenDrawingExistsInconclusive,
            };
            Verdict {
                outcome,
                tier: if witness.is_some() { tier } else { None },
                diagnostics: Diagnostics {
                    simplified_vertex_count: simplified.vertex_count(),
                    simplified_edge_count: simplified.edge_count(),
                    edge_bound: EdgeBoundVerdict::Pass,
                    equation_count: system.equation_count(),
                    variable_count: system.variable_count(),
                    rank,
                    witness,
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_clustered_triangle_is_c_planar() {
        let g = ClusteredGraph::flat(
            &[("A", vec![1, 2]), ("B", vec![3])],
            &[(1, 2), (2, 3), (3, 1)],
        );
        let v = test_ht(&g);
        assert_eq!(v.outcome, Outcome::CPlanar);
        assert_eq!(v.tier, Some(SoundnessTier::TwoClustered));
    }

    #[test]
    fn k4_split_two_and_two_is_c_planar() {
        let g = ClusteredGraph::flat(
            &[("A", vec![1, 2]), ("B", vec![3, 4])],
            &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        );
        let v = test_ht(&g);
        assert_eq!(v.outcome, Outcome::CPlanar);
        assert_eq!(v.tier, Some(SoundnessTier::TwoClustered));
        let w = v.diagnostics.witness.unwrap();
        assert!(w.len() <= v.diagnostics.variable_count);
    }

    #[test]
    fn k5_in_one_cluster_is_rejected_by_the_solver() {
        let mut edges = Vec::new();
        for u in 1..=5u32 {
            for v in (u + 1)..=5 {
                edges.push((u, v));
            }
        }
        let g = ClusteredGraph::flat(&[("A", vec![1, 2, 3, 4, 5])], &edges);
        let v = test_ht(&g);
        // 10 < 15, so the count bound cannot fire; the system itself must
        assert_eq!(v.diagnostics.edge_bound, EdgeBoundVerdict::Pass);
        assert_eq!(v.outcome, Outcome::NotCPlanar);
        assert!(v.diagnostics.witness.is_none());
    }

    #[test]
    fn k7_fails_the_edge_count_bound() {
        let mut edges = Vec::new();
        for u in 1..=7u32 {
            for v in (u + 1)..=7 {
                edges.push((u, v));
            }
        }
        let g = ClusteredGraph::flat(&[("A", (1..=7).collect())], &edges);
        let v = test_ht(&g);
        assert_eq!(v.diagnostics.edge_bound, EdgeBoundVerdict::Fail);
        assert_eq!(v.outcome, Outcome::NotCPlanar);
    }

    #[test]
    fn loops_and_parallels_do_not_disturb_the_verdict() {
        let g = ClusteredGraph::flat(
            &[("A", vec![1, 2]), ("B", vec![3])],
            &[(1, 2), (1, 2), (1, 1), (2, 3), (2, 3), (3, 1)],
        );
        let v = test_ht(&g);
        assert_eq!(v.outcome, Outcome::CPlanar);
        assert_eq!(v.diagnostics.simplified_edge_count, 3);
    }

    #[test]
    fn empty_graph_is_c_planar() {
        let g = ClusteredGraph::flat(&[], &[]);
        let v = test_ht(&g);
        assert_eq!(v.outcome, Outcome::CPlanar);
        assert_eq!(v.tier, Some(SoundnessTier::CConnected));
    }

    #[test]
    fn solvable_without_a_soundness_class_is_inconclusive() {
        // three singleton clusters, no edges: trivially solvable but the
        // instance is neither two-clustered nor c-connected
        let g = ClusteredGraph::flat(&[("A", vec![1]), ("B", vec![2]), ("C", vec![3])], &[]);
        let v = test_ht(&g);
        assert_eq!(v.outcome, Outcome::EvenDrawingExistsInconclusive);
        assert_eq!(v.tier, None);
    }

    #[test]
    fn c_connected_three_cluster_path_is_c_planar() {
        let g = ClusteredGraph::flat(
            &[("A", vec![1, 2]), ("B", vec![3, 4]), ("C", vec![5, 6])],
            &[(1, 2), (3, 4), (5, 6), (2, 3), (4, 5)],
        );
        let v = test_ht(&g);
        assert_eq!(v.outcome, Outcome::CPlanar);
        assert_eq!(v.tier, Some(SoundnessTier::CConnected));
    }
}
