//! Clustered planarity of embedded flat instances via saturator search.
//!
//! The input is a plane map whose regions each touch at most 5 distinct
//! vertices. The decision runs in three stages. Preprocessing contracts
//! every intra-cluster edge and removes cluster loops together with their
//! interiors (a foreign vertex strictly inside such a loop already refutes
//! the instance). Normalization then merges vertices until no region admits
//! two saturating pairs drawn without crossing; each merge is one of a small
//! list of moves that provably preserve the answer, and one terminal
//! configuration refutes the instance outright. What remains is a selection
//! problem, one candidate pair per region at most, spanning every cluster:
//! exactly a maximum common independent set of a graphic and a partition
//! matroid.

use crate::graph::{ClusteredGraph, VertexId};
use crate::map::{Attach, LoopDeletion, MapError, PlaneMap, Region, RegionId};
use crate::matroid::{
    max_common_independent_set, GraphicMatroid, Matroid, PartitionMatroid,
};
use crate::uf::UnionFind;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("the clustering is not flat")]
    NotFlat,
    #[error("a region touches {0} distinct vertices, the decision handles at most 5")]
    FaceTooLarge(usize),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmbeddedOutcome {
    CPlanar,
    NotCPlanar,
}

#[derive(Clone, Debug)]
pub struct EmbeddedVerdict {
    pub outcome: EmbeddedOutcome,
    pub merges: Vec<MergeCase>,
    pub detail: String,
}

/// Which normalization move fired (kept for diagnostics and tests).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MergeCase {
    /// Exactly two saturating pairs, merge the one with the smaller vertex.
    TwoPairs,
    /// One cluster holds at least 3 of the region's vertices, merge its two
    /// smallest.
    BigCluster,
    /// The two vertices of the smaller cluster reach the region on different
    /// boundary pieces, merge them.
    DifferentCircles,
    /// Some chord between the smaller cluster's vertices leaves room for two
    /// pairs of the bigger one, merge along that chord.
    RoomyChord,
    /// Some pair of the bigger cluster can never separate the smaller
    /// cluster's vertices, merge it.
    NeverSeparates,
    /// An alternating four-cycle bounds a pocket off the region, merge the
    /// smaller of its big-cluster vertices with the third one.
    PocketCycle,
}

/// Contract intra-cluster edges and eliminate cluster loops. `Some(reason)`
/// means the instance is already refuted.
pub fn preprocess(m: &mut PlaneMap) -> Result<Option<String>, EmbedError> {
    loop {
        let g = m.graph();
        let contractible = g
            .edges()
            .find(|&(_, u, v)| u != v && g.flat_cluster_of(u) == g.flat_cluster_of(v))
            .map(|(e, _, _)| e);
        if let Some(e) = contractible {
            m.contract_edge(e)?;
            continue;
        }
        let Some(l) = m.loops().first().copied() else {
            return Ok(None);
        };
        match m.delete_loop_and_enclosed(l)? {
            LoopDeletion::ForeignInside(w) => {
                return Ok(Some(format!(
                    "a cycle of one cluster encloses vertex {w} of another cluster"
                )));
            }
            LoopDeletion::Removed { .. } => {}
        }
    }
}

/// Distinct same-cluster vertex pairs incident to the region, sorted.
pub fn saturating_pairs(g: &ClusteredGraph, region: &Region) -> Vec<(VertexId, VertexId)> {
    let mut by_cluster: BTreeMap<_, Vec<VertexId>> = BTreeMap::new();
    for &v in &region.incident {
        by_cluster
            .entry(g.flat_cluster_of(v).expect("flat clustering"))
            .or_default()
            .push(v);
    }
    let mut out = Vec::new();
    for (_, vs) in by_cluster {
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                out.push((vs[i], vs[j]));
            }
        }
    }
    out.sort();
    out
}

/// One way a vertex shows up in a region: as a drifting isolated vertex or
/// at a corner of a boundary walk.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Occ {
    Float,
    Corner { orbit: usize, pos: usize },
}

fn occurrences(m: &PlaneMap, region: &Region, v: VertexId) -> Vec<Occ> {
    if region.floats.contains(&v) {
        return vec![Occ::Float];
    }
    let mut out = Vec::new();
    for (oi, walk) in region.orbits.iter().enumerate() {
        for (pos, &d) in walk.iter().enumerate() {
            if m.tail(d) == v {
                out.push(Occ::Corner { orbit: oi, pos });
            }
        }
    }
    out.sort();
    out
}

fn occ_attach(region: &Region, v: VertexId, o: Occ) -> Attach {
    match o {
        Occ::Float => Attach::Float(v),
        Occ::Corner { orbit, pos } => Attach::Corner(region.orbits[orbit][pos]),
    }
}

fn in_open_arc(x: usize, a: usize, b: usize, n: usize) -> bool {
    if a == b {
        return false;
    }
    let span = (b + n - a) % n;
    let off = (x + n - a) % n;
    off > 0 && off < span
}

/// Two chords drawn at these occurrences must cross, whatever routes they
/// take: that happens exactly when all four corners sit on one boundary walk
/// and strictly alternate along it.
fn forced_cross(region: &Region, c1: (Occ, Occ), c2: (Occ, Occ)) -> bool {
    let corner = |o: Occ| match o {
        Occ::Float => None,
        Occ::Corner { orbit, pos } => Some((orbit, pos)),
    };
    let (Some(a), Some(b), Some(c), Some(d)) =
        (corner(c1.0), corner(c1.1), corner(c2.0), corner(c2.1))
    else {
        return false;
    };
    if a.0 != b.0 || b.0 != c.0 || c.0 != d.0 {
        return false;
    }
    let n = region.orbits[a.0].len();
    in_open_arc(c.1, a.1, b.1, n) != in_open_arc(d.1, a.1, b.1, n)
}

/// Can both pairs be drawn inside the region without crossing each other?
/// Exact for two pairs: chords sharing a vertex can always dodge, and
/// otherwise some choice of corners avoids a forced crossing.
pub fn can_embed_noncrossing(
    m: &PlaneMap,
    g: &ClusteredGraph,
    region: &Region,
    p: (VertexId, VertexId),
    q: (VertexId, VertexId),
) -> bool {
    let _ = g;
    if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
        return true;
    }
    let (pa, pb) = (occurrences(m, region, p.0), occurrences(m, region, p.1));
    let (qa, qb) = (occurrences(m, region, q.0), occurrences(m, region, q.1));
    for &o1 in &pa {
        for &o2 in &pb {
            for &o3 in &qa {
                for &o4 in &qb {
                    if !forced_cross(region, (o1, o2), (o3, o4)) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Merge two same-cluster vertices through the region: draw the edge at the
/// given occurrences, then contract it.
fn merge_at(
    m: &mut PlaneMap,
    region: &Region,
    x: (VertexId, Occ),
    y: (VertexId, Occ),
) -> Result<VertexId, EmbedError> {
    let e = m.add_edge_at(occ_attach(region, x.0, x.1), occ_attach(region, y.0, y.1))?;
    Ok(m.contract_edge(e)?)
}

fn merge_lowest(
    m: &mut PlaneMap,
    region: &Region,
    x: VertexId,
    y: VertexId,
) -> Result<VertexId, EmbedError> {
    let ox = occurrences(m, region, x)[0];
    let oy = occurrences(m, region, y)[0];
    merge_at(m, region, (x, ox), (y, oy))
}

#[derive(Clone, Debug)]
pub struct NormalizeReport {
    pub merges: Vec<MergeCase>,
    /// `Some(reason)` when a terminal configuration refutes the instance.
    pub refuted: Option<String>,
}

/// Merge vertices until no region admits two noncrossing saturating pairs.
pub fn normalize(m: &mut PlaneMap) -> Result<NormalizeReport, EmbedError> {
    let mut merges = Vec::new();
    loop {
        let g = m.graph().clone();
        let regions = m.regions();
        let mut bad: Option<(RegionId, Vec<(VertexId, VertexId)>)> = None;
        for (rid, region) in regions.iter() {
            let pairs = saturating_pairs(&g, region);
            let two = (0..pairs.len()).any(|i| {
                ((i + 1)..pairs.len())
                    .any(|j| can_embed_noncrossing(m, &g, region, pairs[i], pairs[j]))
            });
            if two {
                bad = Some((rid, pairs));
                break;
            }
        }
        let Some((rid, pairs)) = bad else {
            return Ok(NormalizeReport {
                merges,
                refuted: None,
            });
        };
        let region = regions.get(rid).clone();
        let mut by_cluster: BTreeMap<_, Vec<VertexId>> = BTreeMap::new();
        for &v in &region.incident {
            by_cluster
                .entry(g.flat_cluster_of(v).expect("flat"))
                .or_default()
                .push(v);
        }
        let mut counts: Vec<(usize, Vec<VertexId>)> = by_cluster
            .into_values()
            .map(|vs| (vs.len(), vs))
            .collect();
        counts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        if pairs.len() == 2 {
            let p = pairs[0].min(pairs[1]);
            merge_lowest(m, &region, p.0, p.1)?;
            merges.push(MergeCase::TwoPairs);
            continue;
        }
        if counts[0].0 >= 3 && counts.iter().skip(1).all(|c| c.0 <= 1) {
            let c = &counts[0].1;
            merge_lowest(m, &region, c[0], c[1])?;
            merges.push(MergeCase::BigCluster);
            continue;
        }
        // exactly five incident vertices: three of one cluster, two of
        // another (anything else would have been caught above or cannot
        // carry more than two pairs)
        assert!(
            counts.len() == 2 && counts[0].0 == 3 && counts[1].0 == 2,
            "unexpected bad-region profile {:?}",
            counts.iter().map(|c| c.0).collect::<Vec<_>>()
        );
        let big = counts[0].1.clone();
        let (x, y) = (counts[1].1[0], counts[1].1[1]);
        let ox = occurrences(m, &region, x);
        let oy = occurrences(m, &region, y);

        // different boundary pieces: the chord x-y fuses them and cannot
        // trap anything
        let split_pieces = |o: Occ| match o {
            Occ::Float => None,
            Occ::Corner { orbit, .. } => Some(orbit),
        };
        let mut cross_piece: Option<(Occ, Occ)> = None;
        'outer: for &a in &ox {
            for &b in &oy {
                if split_pieces(a) != split_pieces(b)
                    || split_pieces(a).is_none()
                {
                    cross_piece = Some((a, b));
                    break 'outer;
                }
            }
        }
        if let Some((a, b)) = cross_piece {
            merge_at(m, &region, (x, a), (y, b))?;
            merges.push(MergeCase::DifferentCircles);
            continue;
        }

        let big_pairs = [(big[0], big[1]), (big[0], big[2]), (big[1], big[2])];
        let pair_occs = |p: (VertexId, VertexId)| {
            let (pa, pb) = (occurrences(m, &region, p.0), occurrences(m, &region, p.1));
            let mut out = Vec::new();
            for &u in &pa {
                for &v in &pb {
                    out.push((u, v));
                }
            }
            out
        };
        let chords: Vec<(Occ, Occ)> = ox
            .iter()
            .flat_map(|&a| oy.iter().map(move |&b| (a, b)))
            .collect();
        let allows = |chord: (Occ, Occ), p: (VertexId, VertexId)| {
            pair_occs(p)
                .into_iter()
                .any(|c| !forced_cross(&region, chord, c))
        };
        let mut roomy: Option<(Occ, Occ)> = None;
        for &chord in &chords {
            let n = big_pairs.iter().filter(|&&p| allows(chord, p)).count();
            assert!(n >= 1, "an x-y chord excludes every pair of the big cluster");
            if n >= 2 {
                roomy = Some(chord);
                break;
            }
        }
        if let Some((a, b)) = roomy {
            merge_at(m, &region, (x, a), (y, b))?;
            merges.push(MergeCase::RoomyChord);
            continue;
        }

        // a pair placement separates x from y when every x-y chord is
        // forced across it
        let separates =
            |c: (Occ, Occ)| chords.iter().all(|&chord| forced_cross(&region, c, chord));
        let never_separating = big_pairs
            .iter()
            .copied()
            .find(|&p| pair_occs(p).into_iter().all(|c| !separates(c)));
        if let Some(p) = never_separating {
            merge_lowest(m, &region, p.0, p.1)?;
            merges.push(MergeCase::NeverSeparates);
            continue;
        }

        // pockets: connected pieces of the plane split off by the region's
        // boundary edges, other than the region itself
        let boundary: BTreeSet<_> = region
            .orbits
            .iter()
            .flatten()
            .map(|d| d.edge())
            .collect();
        let mut side = UnionFind::new(regions.count());
        for (e, _, _) in g.edges() {
            if !boundary.contains(&e) {
                side.union(
                    regions.of_dart(crate::map::Dart::new(e, 0)).0,
                    regions.of_dart(crate::map::Dart::new(e, 1)).0,
                );
            }
        }
        let my_class = side.find(rid.0);
        let mut pocket_classes: BTreeSet<usize> = BTreeSet::new();
        for (other, _) in regions.iter() {
            let c = side.find(other.0);
            if c != my_class {
                pocket_classes.insert(c);
            }
        }
        assert!(
            !pocket_classes.is_empty(),
            "no merge applies and the boundary splits nothing off"
        );
        let mut four_cycle: Option<(VertexId, VertexId)> = None;
        for &class in &pocket_classes {
            // edges of the boundary facing this pocket
            let facing: BTreeSet<_> = boundary
                .iter()
                .copied()
                .filter(|&e| {
                    let r0 = regions.of_dart(crate::map::Dart::new(e, 0)).0;
                    let r1 = regions.of_dart(crate::map::Dart::new(e, 1)).0;
                    side.find(r0) == class || side.find(r1) == class
                })
                .collect();
            let ends: Vec<_> = facing
                .iter()
                .map(|&e| g.ends(e).expect("live edge"))
                .collect();
            if facing.len() == 2 {
                let (a, b) = (ends[0], ends[1]);
                let same = (a.0.min(a.1), a.0.max(a.1)) == (b.0.min(b.1), b.0.max(b.1));
                assert!(same, "a two-edge pocket boundary must be a pair of parallel edges");
                continue;
            }
            assert_eq!(
                facing.len(),
                4,
                "pocket boundary must be a 2-cycle or a 4-cycle, got {} edges",
                facing.len()
            );
            let mut cycle_vertices: BTreeSet<VertexId> = BTreeSet::new();
            for &(u, v) in &ends {
                cycle_vertices.insert(u);
                cycle_vertices.insert(v);
            }
            assert_eq!(cycle_vertices.len(), 4, "pocket 4-cycle has 4 vertices");
            let on_big: Vec<VertexId> = cycle_vertices
                .iter()
                .copied()
                .filter(|v| big.contains(v))
                .collect();
            assert_eq!(
                on_big.len(),
                2,
                "pocket 4-cycle must alternate between the two clusters"
            );
            four_cycle = Some((on_big[0], on_big[1]));
            break;
        }
        match four_cycle {
            None => {
                return Ok(NormalizeReport {
                    merges,
                    refuted: Some(
                        "every pocket off the region is bounded by a pair of parallel edges"
                            .into(),
                    ),
                });
            }
            Some((u, v)) => {
                let w = big
                    .iter()
                    .copied()
                    .find(|c| *c != u && *c != v)
                    .expect("three vertices in the big cluster");
                merge_lowest(m, &region, u.min(v), w)?;
                merges.push(MergeCase::PocketCycle);
            }
        }
    }
}

/// Decide clustered planarity of an embedded flat instance whose regions
/// each touch at most 5 vertices.
pub fn decide_embedded(map: &PlaneMap) -> Result<EmbeddedVerdict, EmbedError> {
    if !map.graph().is_flat() {
        return Err(EmbedError::NotFlat);
    }
    let worst = map.largest_region_incidence();
    if worst > 5 {
        return Err(EmbedError::FaceTooLarge(worst));
    }
    let mut m = map.clone();
    if let Some(reason) = preprocess(&mut m)? {
        return Ok(EmbeddedVerdict {
            outcome: EmbeddedOutcome::NotCPlanar,
            merges: Vec::new(),
            detail: reason,
        });
    }
    debug_assert!(m.largest_region_incidence() <= 5);
    let report = normalize(&mut m)?;
    if let Some(reason) = report.refuted {
        return Ok(EmbeddedVerdict {
            outcome: EmbeddedOutcome::NotCPlanar,
            merges: report.merges,
            detail: reason,
        });
    }

    let g = m.graph().clone();
    let regions = m.regions();
    let clusters = g.flat_clusters();
    let vertex_index: BTreeMap<VertexId, usize> =
        g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
    let target: usize = clusters.iter().map(|(_, vs)| vs.len() - 1).sum();

    let mut ground: Vec<(usize, VertexId, VertexId)> = Vec::new();
    for (rid, region) in regions.iter() {
        for (a, b) in saturating_pairs(&g, region) {
            ground.push((rid.0, a, b));
        }
    }

    // quick refutation: some cluster cannot be connected by any selection
    for (c, vs) in &clusters {
        let local: BTreeMap<VertexId, usize> =
            vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::new(vs.len());
        for &(_, a, b) in &ground {
            if g.flat_cluster_of(a) == Some(*c) {
                uf.union(local[&a], local[&b]);
            }
        }
        if uf.class_count() > 1 {
            return Ok(EmbeddedVerdict {
                outcome: EmbeddedOutcome::NotCPlanar,
                merges: report.merges,
                detail: format!(
                    "cluster {} cannot be connected by saturating pairs of any region",
                    g.tree().name_of(*c).unwrap_or("?")
                ),
            });
        }
    }

    let m1 = GraphicMatroid::new(
        vertex_index.len(),
        ground
            .iter()
            .map(|&(_, a, b)| (vertex_index[&a], vertex_index[&b]))
            .collect(),
    );
    let class_of: Vec<usize> = ground.iter().map(|&(r, _, _)| r).collect();
    let m2 = PartitionMatroid::new(class_of, vec![1; regions.count()]);
    debug_assert_eq!(m1.ground_size(), m2.ground_size());
    let best = max_common_independent_set(&m1, &m2);
    let achieved = best.len();
    Ok(EmbeddedVerdict {
        outcome: if achieved == target {
            EmbeddedOutcome::CPlanar
        } else {
            EmbeddedOutcome::NotCPlanar
        },
        merges: report.merges,
        detail: format!(
            "selected {achieved} of {target} connector pairs across {} regions",
            regions.count()
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;
    use crate::map::{Dart, Host, Item, Placement};

    fn rot_of(entries: &[(u32, Vec<(u32, u8)>)]) -> BTreeMap<VertexId, Vec<Dart>> {
        entries
            .iter()
            .map(|(v, ds)| {
                (
                    VertexId(*v),
                    ds.iter().map(|&(e, s)| Dart::new(EdgeId(e), s)).collect(),
                )
            })
            .collect()
    }

    /// star with center 4 (cluster D) and leaves 1,2,3 (cluster C), plus a
    /// second D vertex 5 floating in the single region
    fn star_with_float() -> PlaneMap {
        let g = ClusteredGraph::flat(
            &[("C", vec![1, 2, 3]), ("D", vec![4, 5])],
            &[(4, 1), (4, 2), (4, 3)],
        );
        let rot = rot_of(&[
            (1, vec![(1, 1)]),
            (2, vec![(2, 1)]),
            (3, vec![(3, 1)]),
            (4, vec![(1, 0), (2, 0), (3, 0)]),
        ]);
        let mut rot = rot;
        rot.insert(VertexId(5), vec![]);
        PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(5)),
                    host: Host::Unbounded,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn star_with_float_hits_the_different_circles_merge() {
        let mut m = star_with_float();
        let report = normalize(&mut m).unwrap();
        assert!(report.refuted.is_none());
        assert_eq!(report.merges[0], MergeCase::DifferentCircles);
        assert!(m.graph().vertex_count() < 5);
    }

    #[test]
    fn star_with_float_is_c_planar() {
        let m = star_with_float();
        let v = decide_embedded(&m).unwrap();
        assert_eq!(v.outcome, EmbeddedOutcome::CPlanar);
    }

    /// 4-cycle u=1,x=4,v=2,y=5 with a pendant w=3 hanging off vertex 4 into
    /// the outer region; clusters C = {1,2,3}, D = {4,5}
    fn four_cycle_with_pendant() -> PlaneMap {
        let g = ClusteredGraph::flat(
            &[("C", vec![1, 2, 3]), ("D", vec![4, 5])],
            &[(1, 4), (4, 2), (2, 5), (5, 1), (4, 3)],
        );
        // rotations chosen so the pendant 3 sits in the outer face
        let rot = rot_of(&[
            (1, vec![(1, 0), (4, 1)]),
            (2, vec![(2, 1), (3, 0)]),
            (3, vec![(5, 1)]),
            (4, vec![(1, 1), (5, 0), (2, 0)]),
            (5, vec![(3, 1), (4, 0)]),
        ]);
        PlaneMap::from_connected(g, rot, Dart::new(EdgeId(5), 0)).unwrap()
    }

    #[test]
    fn pendant_beside_a_four_cycle_merges_a_never_separating_pair() {
        let mut m = four_cycle_with_pendant();
        assert_eq!(m.largest_region_incidence(), 5);
        let report = normalize(&mut m).unwrap();
        assert!(report.refuted.is_none());
        assert!(report.merges.contains(&MergeCase::NeverSeparates));
    }

    #[test]
    fn two_pair_region_merges_the_smaller_pair() {
        // path 1-4-2 with 1,2 in C and 4 in D, plus a float 5 in D:
        // the single region holds pairs {1,2} and {4,5}
        let g = ClusteredGraph::flat(
            &[("C", vec![1, 2]), ("D", vec![4, 5])],
            &[(1, 4), (4, 2)],
        );
        let mut rot = rot_of(&[
            (1, vec![(1, 0)]),
            (2, vec![(2, 1)]),
            (4, vec![(1, 1), (2, 0)]),
        ]);
        rot.insert(VertexId(5), vec![]);
        let mut m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(5)),
                    host: Host::Unbounded,
                },
            ],
        )
        .unwrap();
        let report = normalize(&mut m).unwrap();
        assert!(report.refuted.is_none());
        assert_eq!(report.merges, vec![MergeCase::TwoPairs]);
        // pair (1,2) was merged, so vertex 2 is gone
        assert!(!m.graph().has_vertex(VertexId(2)));
    }

    #[test]
    fn big_cluster_region_merges_its_two_smallest() {
        let m = star_with_float();
        // after the different-circles merge the star has a (3,1) region;
        // run the full normalization and check the follow-up case fired
        let mut m2 = m;
        let report = normalize(&mut m2).unwrap();
        assert!(report.merges.contains(&MergeCase::BigCluster));
    }

    #[test]
    fn preprocess_contracts_and_deletes_loops() {
        // triangle inside one cluster contracts to a single vertex; the
        // loops that appear on the way get deleted
        let g = ClusteredGraph::flat(&[("A", vec![1, 2, 3])], &[(1, 2), (2, 3), (3, 1)]);
        let rot = rot_of(&[
            (1, vec![(1, 0), (3, 1)]),
            (2, vec![(2, 0), (1, 1)]),
            (3, vec![(3, 0), (2, 1)]),
        ]);
        let mut m = PlaneMap::from_connected(g, rot, Dart::new(EdgeId(1), 0)).unwrap();
        let refuted = preprocess(&mut m).unwrap();
        assert!(refuted.is_none());
        assert_eq!(m.graph().vertex_count(), 1);
        assert_eq!(m.graph().edge_count(), 0);
    }

    #[test]
    fn foreign_vertex_inside_a_cluster_cycle_refutes() {
        // triangle of cluster A with a B vertex floating inside it
        let g = ClusteredGraph::flat(
            &[("A", vec![1, 2, 3]), ("B", vec![9])],
            &[(1, 2), (2, 3), (3, 1)],
        );
        let mut rot = rot_of(&[
            (1, vec![(1, 0), (3, 1)]),
            (2, vec![(2, 0), (1, 1)]),
            (3, vec![(3, 0), (2, 1)]),
        ]);
        rot.insert(VertexId(9), vec![]);
        let m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(9)),
                    host: Host::In(Dart::new(EdgeId(1), 1)),
                },
            ],
        )
        .unwrap();
        let v = decide_embedded(&m).unwrap();
        assert_eq!(v.outcome, EmbeddedOutcome::NotCPlanar);
        assert!(v.detail.contains("encloses vertex 9"));
    }

    #[test]
    fn split_cluster_in_separate_regions_is_refuted() {
        // a 4-cycle alternating clusters D and E separates the plane;
        // cluster C has vertex 1 floating inside and vertex 2 outside, so
        // no region touches both and C can never be connected
        let g = ClusteredGraph::flat(
            &[("C", vec![1, 2]), ("D", vec![4, 5]), ("E", vec![6, 7])],
            &[(4, 6), (6, 5), (5, 7), (7, 4)],
        );
        let mut rot = rot_of(&[
            (4, vec![(1, 0), (4, 1)]),
            (6, vec![(2, 0), (1, 1)]),
            (5, vec![(3, 0), (2, 1)]),
            (7, vec![(4, 0), (3, 1)]),
        ]);
        rot.insert(VertexId(1), vec![]);
        rot.insert(VertexId(2), vec![]);
        let m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 1)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(1)),
                    host: Host::In(Dart::new(EdgeId(1), 0)),
                },
                Placement {
                    item: Item::Float(VertexId(2)),
                    host: Host::Unbounded,
                },
            ],
        )
        .unwrap();
        let v = decide_embedded(&m).unwrap();
        assert_eq!(v.outcome, EmbeddedOutcome::NotCPlanar);
        assert!(v.detail.contains("cluster C"));
    }

    #[test]
    fn face_gate_is_enforced() {
        // a 6-cycle alternating two clusters has a region with 6 vertices
        let g = ClusteredGraph::flat(
            &[("C", vec![1, 2, 3]), ("D", vec![4, 5, 6])],
            &[(1, 4), (4, 2), (2, 5), (5, 3), (3, 6), (6, 1)],
        );
        let rot = rot_of(&[
            (1, vec![(1, 0), (6, 1)]),
            (2, vec![(3, 0), (2, 1)]),
            (3, vec![(5, 0), (4, 1)]),
            (4, vec![(2, 0), (1, 1)]),
            (5, vec![(4, 0), (3, 1)]),
            (6, vec![(6, 0), (5, 1)]),
        ]);
        let m = PlaneMap::from_connected(g, rot, Dart::new(EdgeId(1), 0)).unwrap();
        let err = decide_embedded(&m).unwrap_err();
        assert_eq!(err, EmbedError::FaceTooLarge(6));
    }

    #[test]
    fn single_cluster_connected_instance_is_c_planar() {
        let g = ClusteredGraph::flat(&[("A", vec![1, 2, 3])], &[(1, 2), (2, 3), (3, 1)]);
        let rot = rot_of(&[
            (1, vec![(1, 0), (3, 1)]),
            (2, vec![(2, 0), (1, 1)]),
            (3, vec![(3, 0), (2, 1)]),
        ]);
        let m = PlaneMap::from_connected(g, rot, Dart::new(EdgeId(1), 0)).unwrap();
        let v = decide_embedded(&m).unwrap();
        assert_eq!(v.outcome, EmbeddedOutcome::CPlanar);
    }
}
