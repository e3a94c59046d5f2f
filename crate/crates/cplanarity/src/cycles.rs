//! Cycles over a cyclic arrangement of clusters, their winding numbers, and
//! the explicit even drawings that separate "independently even" from
//! "clustered planar".
//!
//! A cycle v_0, ..., v_{n-1} is described by the cluster assignment
//! phi: index -> {1, ..., k}, where the k clusters themselves sit in a cycle
//! (cluster j borders j-1 and j+1 mod k). Consecutive cycle vertices must lie
//! in the same or in neighbouring clusters. Each edge then gets a sign in
//! {-1, 0, +1}, and the signs sum to k times an integer: the winding number,
//! how often the cycle runs around the cluster arrangement. Such a cycle is
//! clustered planar exactly when the winding number is -1, 0 or +1
//! (Cortese et al.), which is what `cortese_test` checks.

use crate::drawing::{PairIndex, ParityVector};
use crate::graph::{ClusteredGraph, VertexId};
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("need at least 3 clusters, got {0}")]
    TooFewClusters(usize),
    #[error("the cycle has no vertices")]
    EmptyCycle,
    #[error("phi[{index}] = {value} is not a cluster in 1..={k}")]
    ClusterOutOfRange { index: usize, value: usize, k: usize },
    #[error("step {index}: clusters {from} and {to} are not equal or cyclically adjacent")]
    NonAdjacentStep { index: usize, from: usize, to: usize },
    #[error("not a cyclic-clustered cycle: {0}")]
    NotACycleGraph(String),
}

/// A cycle through a cyclic cluster arrangement. Only the step condition is
/// enforced here; whether the cycle actually visits every cluster and every
/// border of the arrangement is a separate question, see
/// [`CyclicClusteredCycle::is_cyclic_clustered`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicClusteredCycle {
    k: usize,
    phi: Vec<usize>,
}

impl CyclicClusteredCycle {
    pub fn new(k: usize, phi: Vec<usize>) -> Result<Self, CycleError> {
        if k < 3 {
            return Err(CycleError::TooFewClusters(k));
        }
        if phi.is_empty() {
            return Err(CycleError::EmptyCycle);
        }
        for (index, &value) in phi.iter().enumerate() {
            if value < 1 || value > k {
                return Err(CycleError::ClusterOutOfRange { index, value, k });
            }
        }
        let n = phi.len();
        for i in 0..n {
            let from = phi[i];
            let to = phi[(i + 1) % n];
            let d = (to + k - from) % k;
            if d != 0 && d != 1 && d != k - 1 {
                return Err(CycleError::NonAdjacentStep { index: i, from, to });
            }
        }
        Ok(CyclicClusteredCycle { k, phi })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty cycles
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    /// Sign of the edge (v_i, v_{i+1}): +1 when it advances one cluster
    /// forward, -1 backward, 0 inside a cluster.
    pub fn edge_sign(&self, i: usize) -> i64 {
        let n = self.phi.len();
        let from = self.phi[i % n];
        let to = self.phi[(i + 1) % n];
        match (to + self.k - from) % self.k {
            0 => 0,
            1 => 1,
            d if d == self.k - 1 => -1,
            _ => unreachable!("constructor enforces the step condition"),
        }
    }

    pub fn signs(&self) -> Vec<i64> {
        (0..self.phi.len()).map(|i| self.edge_sign(i)).collect()
    }

    pub fn winding_number(&self) -> i64 {
        let total: i64 = self.signs().iter().sum();
        let k = self.k as i64;
        assert_eq!(total % k, 0, "a closed cycle winds an integer number of times");
        total / k
    }

    /// All edge signs equal and nonzero.
    pub fn is_monotone(&self) -> bool {
        let signs = self.signs();
        signs[0] != 0 && signs.iter().all(|&s| s == signs[0])
    }

    /// The clustered-planarity criterion for cycles on a cyclic cluster
    /// arrangement: c-planar exactly when the winding number is -1, 0 or 1.
    pub fn cortese_test(&self) -> bool {
        self.winding_number().abs() <= 1
    }

    /// Does the cycle realize the whole arrangement: every cluster visited
    /// and the borders used between clusters form exactly the k-cycle?
    pub fn is_cyclic_clustered(&self) -> bool {
        let n = self.phi.len();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut borders: BTreeSet<(usize, usize)> = BTreeSet::new();
        for i in 0..n {
            seen.insert(self.phi[i]);
            let (a, b) = (self.phi[i], self.phi[(i + 1) % n]);
            if a != b {
                borders.insert((a.min(b), a.max(b)));
            }
        }
        if seen.len() != self.k {
            return false;
        }
        let wanted: BTreeSet<(usize, usize)> = (1..=self.k)
            .map(|j| {
                let next = j % self.k + 1;
                (j.min(next), j.max(next))
            })
            .collect();
        borders == wanted
    }

    /// Repeatedly contract edges of sign 0 and cut off return paths (a vertex
    /// whose two neighbours share a cluster) until the cycle is monotone or
    /// shorter than 3 vertices. Both moves preserve the winding number.
    pub fn monotone_reduce(&self) -> Reduction {
        let k = self.k;
        let mut phi = self.phi.clone();
        let mut steps = Vec::new();
        loop {
            let n = phi.len();
            if n < 3 {
                return Reduction {
                    outcome: Reduced::Trivial,
                    steps,
                };
            }
            let sign = |i: usize| -> i64 {
                match (phi[(i + 1) % n] + k - phi[i]) % k {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                }
            };
            if let Some(i) = (0..n).find(|&i| sign(i) == 0) {
                // v_i and v_{i+1} share a cluster; merge them
                phi.remove((i + 1) % n);
                steps.push(ReductionStep::ContractFlatEdge { index: i });
                continue;
            }
            if (1..n).all(|i| sign(i) == sign(0)) {
                let cycle = CyclicClusteredCycle::new(k, phi)
                    .expect("reduction moves keep the step condition");
                return Reduction {
                    outcome: Reduced::Monotone(cycle),
                    steps,
                };
            }
            // mixed nonzero signs: somewhere the cycle steps forward and
            // immediately back (or vice versa), so some v_{i+1} has both
            // neighbours in one cluster
            let i = (0..n)
                .find(|&i| sign(i) != 0 && sign((i + 1) % n) == -sign(i))
                .expect("mixed nonzero signs force an adjacent opposite pair");
            steps.push(ReductionStep::CutReturnPath { index: i });
            let (a, b) = ((i + 1) % n, (i + 2) % n);
            // remove the larger position first so the smaller stays valid
            phi.remove(a.max(b));
            phi.remove(a.min(b));
        }
    }

    /// The clustered graph of this cycle: vertices 1..=n in cycle order,
    /// edge i joining v_i and v_{i+1}, one flat cluster per used phi value.
    pub fn to_clustered_graph(&self) -> ClusteredGraph {
        let n = self.phi.len();
        let mut members: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (i, &c) in self.phi.iter().enumerate() {
            members.entry(c).or_default().push(i as u32 + 1);
        }
        let named: Vec<(String, Vec<u32>)> = members
            .into_iter()
            .map(|(c, vs)| (format!("C{c}"), vs))
            .collect();
        let spec: Vec<(&str, Vec<u32>)> = named
            .iter()
            .map(|(name, vs)| (name.as_str(), vs.clone()))
            .collect();
        let edges: Vec<(u32, u32)> = (0..n)
            .map(|i| (i as u32 + 1, ((i + 1) % n) as u32 + 1))
            .collect();
        ClusteredGraph::flat(&spec, &edges)
    }

    /// Recover the cycle from a clustered graph. The graph must be a single
    /// simple cycle whose cluster adjacencies form exactly one k-cycle.
    /// Conventions fix the labelling: the vertex walk starts at the smallest
    /// vertex id and moves toward its smaller neighbour; cluster 1 is the
    /// first child of the root and cluster 2 its smaller-id neighbour in the
    /// arrangement. Returns the cycle together with the vertex walk.
    pub fn from_clustered_graph(
        g: &ClusteredGraph,
    ) -> Result<(CyclicClusteredCycle, Vec<VertexId>), CycleError> {
        let class = g.classify();
        if !class.flat {
            return Err(CycleError::NotACycleGraph("clustering is not flat".into()));
        }
        if !class.cyclic_clustered {
            return Err(CycleError::NotACycleGraph(
                "cluster adjacencies do not form a single cycle of length >= 3".into(),
            ));
        }
        let n = g.vertex_count();
        if n < 3 || g.edge_count() != n {
            return Err(CycleError::NotACycleGraph(format!(
                "{} vertices and {} edges cannot form a simple cycle",
                n,
                g.edge_count()
            )));
        }
        let mut neighbours: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        let mut seen_pairs = BTreeSet::new();
        for (_, u, v) in g.edges() {
            if u == v {
                return Err(CycleError::NotACycleGraph(format!("loop at vertex {u}")));
            }
            if !seen_pairs.insert((u.min(v), u.max(v))) {
                return Err(CycleError::NotACycleGraph(format!(
                    "parallel edges between {u} and {v}"
                )));
            }
            neighbours.entry(u).or_default().push(v);
            neighbours.entry(v).or_default().push(u);
        }
        for (v, ns) in &neighbours {
            if ns.len() != 2 {
                return Err(CycleError::NotACycleGraph(format!(
                    "vertex {v} has degree {}",
                    ns.len()
                )));
            }
        }
        if neighbours.len() != n {
            return Err(CycleError::NotACycleGraph("isolated vertices".into()));
        }

        // label the cluster arrangement 1..k
        let clusters = g.flat_clusters();
        let k = clusters.len();
        let cluster_of = |v: VertexId| g.flat_cluster_of(v).expect("flat");
        let mut adj: BTreeMap<crate::graph::NodeId, BTreeSet<crate::graph::NodeId>> =
            clusters.iter().map(|&(c, _)| (c, BTreeSet::new())).collect();
        for (_, u, v) in g.edges() {
            let (cu, cv) = (cluster_of(u), cluster_of(v));
            if cu != cv {
                adj.get_mut(&cu).unwrap().insert(cv);
                adj.get_mut(&cv).unwrap().insert(cu);
            }
        }
        let start = clusters[0].0;
        let mut order = vec![start];
        let mut prev = start;
        let mut here = *adj[&start].iter().min().expect("cyclic arrangement");
        while here != start {
            order.push(here);
            let next = *adj[&here]
                .iter()
                .find(|&&c| c != prev)
                .expect("degree 2 in the arrangement");
            prev = here;
            here = next;
        }
        let label: BTreeMap<_, _> = order
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i + 1))
            .collect();

        // walk the vertex cycle
        let first = *neighbours.keys().min().expect("nonempty");
        let second = *neighbours[&first].iter().min().expect("degree 2");
        let mut walk = vec![first, second];
        while walk.len() < n {
            let last = walk[walk.len() - 1];
            let before = walk[walk.len() - 2];
            let next = *neighbours[&last]
                .iter()
                .find(|&&w| w != before)
                .expect("degree 2");
            if next == first {
                break;
            }
            walk.push(next);
        }
        if walk.len() != n {
            return Err(CycleError::NotACycleGraph(
                "the graph is a disjoint union of cycles".into(),
            ));
        }
        let phi: Vec<usize> = walk.iter().map(|&v| label[&cluster_of(v)]).collect();
        let cycle = CyclicClusteredCycle::new(k, phi).expect("labels follow the arrangement");
        Ok((cycle, walk))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    /// Edge (v_i, v_{i+1}) had sign 0 and was contracted.
    ContractFlatEdge { index: usize },
    /// Edges (v_i, v_{i+1}), (v_{i+1}, v_{i+2}) had opposite signs; v_{i+1}
    /// and v_{i+2} were removed and v_i joined to v_{i+3}.
    CutReturnPath { index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduced {
    Monotone(CyclicClusteredCycle),
    /// The cycle shrank below 3 vertices; its winding number was 0.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub outcome: Reduced,
    pub steps: Vec<ReductionStep>,
}

impl Reduction {
    pub fn winding_number(&self) -> i64 {
        match &self.outcome {
            Reduced::Monotone(c) => c.winding_number(),
            Reduced::Trivial => 0,
        }
    }
}

/// The cycle on k*r vertices through k clusters with winding number r.
/// Vertex v_i sits at angle 2*pi*r*i/(k*r+1) on a circle cut into k cluster
/// sectors with borders at odd multiples of pi/(k*r+1); each step advances
/// exactly one sector. For this family the winding criterion and the parity
/// criterion disagree once r >= 3: see [`sinusoid_parity_vector`].
pub fn generate_counterexample(k: usize, r: usize) -> CyclicClusteredCycle {
    assert!(k >= 3, "need at least 3 clusters");
    assert!(r >= 1, "need a positive winding number");
    let n = k * r;
    let modulus = 2 * (k * r + 1);
    let mut phi = Vec::with_capacity(n);
    for i in 0..n {
        let a = (2 * r * i) % modulus; // vertex angle, units of pi/(kr+1)
        let mut cluster = k; // the sector wrapping past the top
        for j in (0..k).rev() {
            let b = 2 * r * j + 1; // sector border, same units
            assert_ne!(a, b, "even vertex angles never meet odd borders");
            if a > b {
                cluster = j + 1;
                break;
            }
        }
        phi.push(cluster);
    }
    let cycle = CyclicClusteredCycle::new(k, phi).expect("sectors are consecutive");
    assert_eq!(cycle.winding_number(), r as i64);
    assert!(cycle.is_monotone());
    assert!(cycle.is_cyclic_clustered());
    cycle
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SinusoidError {
    #[error("sampling cannot separate crossings reliably: {0}")]
    ResolutionInsufficient(String),
}

pub const DEFAULT_SINUSOID_SAMPLES: usize = 4096;

struct Branch {
    /// which copy of [0, 2pi) the branch lives in
    turn: usize,
    x_lo: f64,
    x_hi: f64,
    /// y(x) = sin(omega * x + phase)
    phase: f64,
}

/// Crossing parities of the explicit drawing of the (k, r) cycle: the curve
/// (alpha mod 2pi, sin((kr+1) alpha / r)) for alpha in [0, 2 pi r], with the
/// vertices on the x-axis. Every pair of independent edges crosses an even
/// number of times, so the result is the zero vector; this is checked
/// numerically and any near-tangency is reported as an error instead of
/// being rounded away.
pub fn sinusoid_parity_vector(
    k: usize,
    r: usize,
    samples: usize,
) -> Result<ParityVector, SinusoidError> {
    assert!(samples >= 16, "too few samples to bracket crossings");
    let cycle = generate_counterexample(k, r);
    let g = cycle.to_clustered_graph();
    let pairs = PairIndex::new(&g);
    let n = k * r;
    let delta = 2.0 * PI * r as f64 / (n as f64 + 1.0); // alpha grid unit
    let omega = (n as f64 + 1.0) / r as f64;
    let phase_of = |turn: usize| 2.0 * PI * ((turn * (n + 1)) % r) as f64 / r as f64;

    // edge i joins v_{i+1} and v_{i+2}; the last edge spans two grid units
    let mut branches: Vec<Vec<Branch>> = Vec::with_capacity(n);
    for i in 0..n {
        let a_lo = i as f64 * delta;
        let a_hi = if i + 1 == n {
            (n as f64 + 1.0) * delta
        } else {
            (i + 1) as f64 * delta
        };
        let mut parts = Vec::new();
        let mut lo = a_lo;
        loop {
            let turn = (lo / (2.0 * PI)).floor() as usize;
            let seam = 2.0 * PI * (turn as f64 + 1.0);
            let hi = seam.min(a_hi);
            if hi > lo + 1e-12 {
                parts.push(Branch {
                    turn,
                    x_lo: lo - 2.0 * PI * turn as f64,
                    x_hi: hi - 2.0 * PI * turn as f64,
                    phase: phase_of(turn),
                });
            }
            if hi >= a_hi {
                break;
            }
            lo = hi;
        }
        branches.push(parts);
    }

    let mut v = ParityVector::zero(pairs.clone());
    for (idx, &(e, f)) in pairs.pairs().iter().enumerate().collect::<Vec<_>>() {
        let (ei, fi) = (e.0 as usize - 1, f.0 as usize - 1);
        let mut crossings = 0usize;
        for a in &branches[ei] {
            for b in &branches[fi] {
                if a.turn == b.turn {
                    // same sinusoid copy, disjoint alpha ranges: no crossings
                    continue;
                }
                crossings += count_crossings(a, b, omega, samples)?;
            }
        }
        v.set_bit(idx, crossings % 2 == 1);
    }
    Ok(v)
}

fn count_crossings(
    a: &Branch,
    b: &Branch,
    omega: f64,
    samples: usize,
) -> Result<usize, SinusoidError> {
    let lo = a.x_lo.max(b.x_lo);
    let hi = a.x_hi.min(b.x_hi);
    if hi <= lo {
        return Ok(0);
    }
    let g = |x: f64| (omega * x + a.phase).sin() - (omega * x + b.phase).sin();
    let tol = 1e-9;
    let side = |x: f64| -> i8 {
        let y = g(x);
        if y > tol {
            1
        } else if y < -tol {
            -1
        } else {
            0
        }
    };
    let xs: Vec<f64> = (0..=samples)
        .map(|j| lo + (hi - lo) * j as f64 / samples as f64)
        .collect();
    let sides: Vec<i8> = xs.iter().map(|&x| side(x)).collect();
    if sides[0] == 0 || sides[samples] == 0 {
        return Err(SinusoidError::ResolutionInsufficient(format!(
            "curves meet within {tol} of a branch endpoint near x = {lo:.6}..{hi:.6}"
        )));
    }
    let mut count = 0usize;
    let mut last_sign = sides[0];
    let mut last_x = xs[0];
    let mut in_zero_run = false;
    for j in 1..=samples {
        match sides[j] {
            0 => in_zero_run = true,
            s if s == last_sign => {
                if in_zero_run {
                    return Err(SinusoidError::ResolutionInsufficient(format!(
                        "tangency suspected near x = {:.9}",
                        xs[j]
                    )));
                }
                last_x = xs[j];
            }
            s => {
                // sign change: locate the crossing and keep it off endpoints
                let x = if in_zero_run {
                    (last_x + xs[j]) / 2.0
                } else {
                    bisect(&g, last_x, xs[j])
                };
                if x - lo < tol || hi - x < tol {
                    return Err(SinusoidError::ResolutionInsufficient(format!(
                        "crossing within {tol} of a branch endpoint at x = {x:.9}"
                    )));
                }
                count += 1;
                in_zero_run = false;
                last_sign = s;
                last_x = xs[j];
            }
        }
    }
    if in_zero_run {
        return Err(SinusoidError::ResolutionInsufficient(
            "zero run reaching the end of the branch".into(),
        ));
    }
    Ok(count)
}

fn bisect(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = g(lo);
    for _ in 0..100 {
        let mid = (lo + hi) / 2.0;
        let fmid = g(mid);
        if (flo > 0.0) == (fmid > 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 {
            break;
        }
    }
    (lo + hi) / 2.0
}
