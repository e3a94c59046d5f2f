//! Canonical circle drawing: vertices on a circle in cluster-tree DFS order,
//! edges as straight chords, clusters as the circular segments spanned by
//! their (contiguous) arcs.
//!
//! Two chords of a circle cross if and only if their endpoints interleave on
//! it, so the crossing parity of every independent edge pair is a function of
//! the circular order alone; no coordinates are involved anywhere except in
//! the SVG renderer.

use crate::bits::BitRow;
use crate::graph::{ClusteredGraph, EdgeId, NodeId, VertexId, ROOT};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum DrawingError {
    #[error("edge {0} is not in the graph")]
    UnknownEdge(EdgeId),
    #[error("edges {0} and {1} share an endpoint; interleaving is undefined")]
    SharedEndpoint(EdgeId, EdgeId),
    #[error("vertex {0} has no position in the circular order")]
    UnknownVertex(VertexId),
}

/// One cluster's contiguous run of circle positions.
#[derive(Clone, Debug)]
pub struct ClusterArc {
    pub node: NodeId,
    pub start: usize,
    pub len: usize,
    /// Tree depth; root children have depth 1.
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct CircularOrder {
    order: Vec<VertexId>,
    pos: BTreeMap<VertexId, usize>,
    arcs: Vec<ClusterArc>,
}

impl CircularOrder {
    /// Order without cluster arcs, for tests and oracles that want to probe
    /// an arbitrary circular placement.
    pub fn from_order(order: Vec<VertexId>) -> Self {
        let pos = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        CircularOrder {
            order,
            pos,
            arcs: Vec::new(),
        }
    }

    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.pos.get(&v).copied()
    }

    pub fn arcs(&self) -> &[ClusterArc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Depth-first placement: walk the cluster tree from the root, visiting
/// children in stored order, and append each leaf's vertex. Every cluster
/// ends up owning a contiguous arc, and arcs of nested clusters nest.
pub fn dfs_circle_order(g: &ClusteredGraph) -> CircularOrder {
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut arcs = Vec::new();
    fn visit(
        g: &ClusteredGraph,
        node: NodeId,
        depth: usize,
        order: &mut Vec<VertexId>,
        arcs: &mut Vec<ClusterArc>,
    ) {
        let tree = g.tree();
        if let Some(v) = tree.vertex_of(node) {
            order.push(v);
            return;
        }
        let start = order.len();
        for &c in tree.children(node) {
            visit(g, c, depth + 1, order, arcs);
        }
        if node != ROOT {
            arcs.push(ClusterArc {
                node,
                start,
                len: order.len() - start,
                depth,
            });
        }
    }
    visit(g, ROOT, 0, &mut order, &mut arcs);
    let pos = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    CircularOrder { order, pos, arcs }
}

/// Is `x` strictly inside the cyclic open interval `(a, b)` walking upward
/// from `a` on a circle of `n` positions?
fn in_open_arc(x: usize, a: usize, b: usize, n: usize) -> bool {
    if a == b {
        return false;
    }
    let span = (b + n - a) % n;
    let off = (x + n - a) % n;
    off > 0 && off < span
}

/// Do the chords of two vertex-disjoint edges cross in the circle drawing?
pub fn interleaves(
    g: &ClusteredGraph,
    ord: &CircularOrder,
    e: EdgeId,
    f: EdgeId,
) -> Result<bool, DrawingError> {
    let (a, b) = g.ends(e).ok_or(DrawingError::UnknownEdge(e))?;
    let (c, d) = g.ends(f).ok_or(DrawingError::UnknownEdge(f))?;
    if a == c || a == d || b == c || b == d {
        return Err(DrawingError::SharedEndpoint(e, f));
    }
    let n = ord.len();
    let p = |v: VertexId| ord.position(v).ok_or(DrawingError::UnknownVertex(v));
    let (pa, pb, pc, pd) = (p(a)?, p(b)?, p(c)?, p(d)?);
    let inside = in_open_arc(pc, pa, pb, n) as u8 + in_open_arc(pd, pa, pb, n) as u8;
    Ok(inside == 1)
}

/// Index of the unordered vertex-disjoint edge pairs of a graph, in
/// lexicographic edge-id order. Parity vectors and switch systems built from
/// the same graph share this indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairIndex {
    pairs: Vec<(EdgeId, EdgeId)>,
    lookup: BTreeMap<(EdgeId, EdgeId), usize>,
}

impl PairIndex {
    pub fn new(g: &ClusteredGraph) -> Self {
        let edges: Vec<(EdgeId, VertexId, VertexId)> = g.edges().collect();
        let mut pairs = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (e, a, b) = edges[i];
                let (f, c, d) = edges[j];
                if a != c && a != d && b != c && b != d {
                    pairs.push((e, f));
                }
            }
        }
        let lookup = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        PairIndex { pairs, lookup }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(EdgeId, EdgeId)] {
        &self.pairs
    }

    pub fn index_of(&self, e: EdgeId, f: EdgeId) -> Option<usize> {
        let key = (e.min(f), e.max(f));
        self.lookup.get(&key).copied()
    }
}

/// Crossing parities of all indexed edge pairs in some drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityVector {
    pairs: PairIndex,
    bits: BitRow,
}

impl ParityVector {
    pub fn zero(pairs: PairIndex) -> Self {
        let bits = BitRow::zero(pairs.len());
        ParityVector { pairs, bits }
    }

    pub fn dimension(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair_index(&self) -> &PairIndex {
        &self.pairs
    }

    pub fn bits(&self) -> &BitRow {
        &self.bits
    }

    pub fn bit(&self, e: EdgeId, f: EdgeId) -> Option<bool> {
        self.pairs.index_of(e, f).map(|i| self.bits.get(i))
    }

    pub fn set_bit(&mut self, index: usize, value: bool) {
        self.bits.set(index, value);
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn xor_row(&mut self, row: &BitRow) {
        self.bits.xor_assign(row);
    }
}

/// Crossing parities of the canonical circle drawing of `g` under `ord`.
pub fn initial_parity_vector(g: &ClusteredGraph, ord: &CircularOrder) -> ParityVector {
    let pairs = PairIndex::new(g);
    let mut bits = BitRow::zero(pairs.len());
    for (i, &(e, f)) in pairs.pairs().iter().enumerate() {
        let crossing = interleaves(g, ord, e, f).expect("indexed pairs are independent");
        bits.set(i, crossing);
    }
    ParityVector { pairs, bits }
}

const SVG_SIZE: f64 = 320.0;
const SVG_CENTER: f64 = SVG_SIZE / 2.0;
const SVG_RADIUS: f64 = 120.0;
const CLUSTER_FILLS: [&str; 4] = ["#4477aa", "#ee6677", "#228833", "#ccbb44"];

fn circle_point(angle: f64) -> (f64, f64) {
    (
        SVG_CENTER + SVG_RADIUS * angle.cos(),
        SVG_CENTER + SVG_RADIUS * angle.sin(),
    )
}

fn vertex_angle(p: usize, n: usize) -> f64 {
    -std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * p as f64 / n as f64
}

/// SVG 1.1 document of the canonical drawing: a rim circle, one chord per
/// edge, one circular segment per non-root cluster (deeper clusters use a
/// smaller angular margin so nested segments stay nested).
pub fn render_svg(g: &ClusteredGraph, ord: &CircularOrder) -> String {
    use std::fmt::Write;
    let n = ord.len();
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {s} {s}\" width=\"{s}\" height=\"{s}\">",
        s = SVG_SIZE
    )
    .unwrap();
    writeln!(
        out,
        "  <circle class=\"rim\" cx=\"{c}\" cy=\"{c}\" r=\"{r}\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>",
        c = SVG_CENTER,
        r = SVG_RADIUS
    )
    .unwrap();
    if n > 0 {
        let gap = 2.0 * std::f64::consts::PI / n as f64;
        for arc in ord.arcs() {
            let margin = 0.45 * gap / arc.depth as f64;
            let a0 = vertex_angle(arc.start, n) - margin;
            let a1 = vertex_angle(arc.start + arc.len - 1, n) + margin;
            let (x0, y0) = circle_point(a0);
            let (x1, y1) = circle_point(a1);
            let large = if a1 - a0 > std::f64::consts::PI { 1 } else { 0 };
            let fill = CLUSTER_FILLS[(arc.depth - 1) % CLUSTER_FILLS.len()];
            writeln!(
                out,
                "  <path class=\"cluster\" d=\"M {x0:.4} {y0:.4} A {r:.4} {r:.4} 0 {large} 1 {x1:.4} {y1:.4} Z\" fill=\"{fill}\" fill-opacity=\"0.15\" stroke=\"{fill}\" stroke-width=\"1\"/>",
                r = SVG_RADIUS
            )
            .unwrap();
        }
        for (_, u, v) in g.edges() {
            let (pu, pv) = (
                ord.position(u).expect("vertex placed"),
                ord.position(v).expect("vertex placed"),
            );
            let (x0, y0) = circle_point(vertex_angle(pu, n));
            let (x1, y1) = circle_point(vertex_angle(pv, n));
            writeln!(
                out,
                "  <line class=\"edge\" x1=\"{x0:.4}\" y1=\"{y0:.4}\" x2=\"{x1:.4}\" y2=\"{y1:.4}\" stroke=\"#333\" stroke-width=\"1.2\"/>"
            )
            .unwrap();
        }
        for (p, &v) in ord.order().iter().enumerate() {
            let (x, y) = circle_point(vertex_angle(p, n));
            writeln!(
                out,
                "  <circle class=\"vertex\" cx=\"{x:.4}\" cy=\"{y:.4}\" r=\"3.5\" fill=\"#111\"/>"
            )
            .unwrap();
            let (lx, ly) = (
                SVG_CENTER + (SVG_RADIUS + 14.0) * vertex_angle(p, n).cos(),
                SVG_CENTER + (SVG_RADIUS + 14.0) * vertex_angle(p, n).sin(),
            );
            writeln!(
                out,
                "  <text class=\"label\" x=\"{lx:.4}\" y=\"{ly:.4}\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">{v}</text>"
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
