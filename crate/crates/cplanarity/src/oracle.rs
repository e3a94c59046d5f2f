//! Slow reference implementations used to cross-check the fast paths.
//!
//! Everything here favors obviousness over speed and shares as little code
//! as possible with the algorithms under test: crossings are decided by
//! exact rational geometry, abstract instances by enumerating rotation
//! systems, and embedded instances by a depth-first search over explicit
//! plane maps. All searches take a step budget and refuse loudly instead of
//! silently running forever.

use crate::drawing::{CircularOrder, PairIndex, ParityVector};
use crate::graph::{ClusteredGraph, NodeId, VertexId};
use crate::map::{Attach, Dart, Host, Item, PlaneMap, RegionId};
use crate::uf::UnionFind;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle budget of {0} steps exhausted")]
    BudgetExceeded(u64),
    #[error("the enumeration oracle needs a connected graph")]
    Disconnected,
    #[error("the clustering is not flat")]
    NotFlat,
}

// ---------------------------------------------------------------- geometry

#[derive(Clone, Debug)]
struct Pt {
    x: BigRational,
    y: BigRational,
}

/// Point number `k` of the rational circle parametrization
/// ((1-t^2)/(1+t^2), 2t/(1+t^2)); increasing k walks the circle in one
/// direction without ever repeating.
fn circle_point(k: usize) -> Pt {
    let t = BigRational::from_integer(BigInt::from(k));
    let t2 = &t * &t;
    let denom = BigRational::from_integer(BigInt::from(1)) + &t2;
    Pt {
        x: (BigRational::from_integer(BigInt::from(1)) - &t2) / denom.clone(),
        y: (BigRational::from_integer(BigInt::from(2)) * t) / denom,
    }
}

fn orient_sign(a: &Pt, b: &Pt, c: &Pt) -> i8 {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    match det.cmp(&BigRational::zero()) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

fn segments_cross(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> bool {
    let o1 = orient_sign(a, b, c);
    let o2 = orient_sign(a, b, d);
    let o3 = orient_sign(c, d, a);
    let o4 = orient_sign(c, d, b);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Crossing parities of a straight-line drawing with the vertices placed on
/// a circle in the given order, computed with exact rational arithmetic.
/// The graph must be loop-free (parallel edges are fine, the shared-endpoint
/// rule keeps them out of the pair list).
pub fn exact_parity_vector(g: &ClusteredGraph, ord: &CircularOrder) -> ParityVector {
    assert!(
        g.edges().all(|(_, u, v)| u != v),
        "the geometric oracle places loop-free graphs"
    );
    let pt: BTreeMap<VertexId, Pt> = ord
        .order()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, circle_point(i)))
        .collect();
    let pairs = PairIndex::new(g);
    let bits: Vec<bool> = pairs
        .pairs()
        .iter()
        .map(|&(e, f)| {
            let (a, b) = g.ends(e).expect("live edge");
            let (c, d) = g.ends(f).expect("live edge");
            segments_cross(&pt[&a], &pt[&b], &pt[&c], &pt[&d])
        })
        .collect();
    let mut pv = ParityVector::zero(pairs);
    for (i, b) in bits.into_iter().enumerate() {
        pv.set_bit(i, b);
    }
    pv
}

// ------------------------------------------------- rotation enumeration

fn spend(budget: &mut u64, initial: u64) -> Result<(), OracleError> {
    if *budget == 0 {
        return Err(OracleError::BudgetExceeded(initial));
    }
    *budget -= 1;
    Ok(())
}

/// Face count of the rotation system given as, for each vertex, the cyclic
/// order of its darts. Darts are `2 * edge + side`.
fn count_faces(edge_count: usize, rot: &[Vec<usize>]) -> usize {
    let dart_count = 2 * edge_count;
    let mut rot_next = vec![usize::MAX; dart_count];
    for list in rot {
        for (i, &d) in list.iter().enumerate() {
            rot_next[d] = list[(i + 1) % list.len()];
        }
    }
    let mut seen = vec![false; dart_count];
    let mut faces = 0;
    for start in 0..dart_count {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = rot_next[d ^ 1];
        }
    }
    faces
}

fn face_labels(edge_count: usize, rot: &[Vec<usize>]) -> Vec<usize> {
    let dart_count = 2 * edge_count;
    let mut rot_next = vec![usize::MAX; dart_count];
    for list in rot {
        for (i, &d) in list.iter().enumerate() {
            rot_next[d] = list[(i + 1) % list.len()];
        }
    }
    let mut label = vec![usize::MAX; dart_count];
    let mut faces = 0;
    for start in 0..dart_count {
        if label[start] != usize::MAX {
            continue;
        }
        let mut d = start;
        while label[d] == usize::MAX {
            label[d] = faces;
            d = rot_next[d ^ 1];
        }
        faces += 1;
    }
    label
}

/// In an embedded connected graph, every cluster must see all foreign
/// vertices in a single face of its induced subdrawing. Erasing the edges
/// not induced by the cluster merges faces exactly along them.
fn clusters_see_one_face(
    edges: &[(usize, usize)],
    rot: &[Vec<usize>],
    clusters: &[Vec<usize>],
    vertex_count: usize,
) -> bool {
    let labels = face_labels(edges.len(), rot);
    let faces = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
    for cluster in clusters {
        let inside: BTreeSet<usize> = cluster.iter().copied().collect();
        let mut uf = UnionFind::new(faces);
        for (e, &(u, v)) in edges.iter().enumerate() {
            if !(inside.contains(&u) && inside.contains(&v)) {
                uf.union(labels[2 * e], labels[2 * e + 1]);
            }
        }
        let mut class = None;
        for v in 0..vertex_count {
            if inside.contains(&v) {
                continue;
            }
            let d = rot[v].first().copied().expect("connected, no isolated vertex");
            let c = uf.find(labels[d]);
            match class {
                None => class = Some(c),
                Some(prev) if prev != c => return false,
                Some(_) => {}
            }
        }
    }
    true
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Decide clustered planarity of a connected flat instance by trying every
/// minimal per-cluster connector set and every rotation system.
pub fn flat_cplanar_by_enumeration(
    g: &ClusteredGraph,
    budget: u64,
) -> Result<bool, OracleError> {
    if !g.is_flat() {
        return Err(OracleError::NotFlat);
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    if verts.is_empty() {
        return Ok(true);
    }
    let vi: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    let base: Vec<(usize, usize)> = g.edges().map(|(_, u, v)| (vi[&u], vi[&v])).collect();
    let mut conn = UnionFind::new(n);
    for &(u, v) in &base {
        conn.union(u, v);
    }
    if conn.class_count() > 1 {
        return Err(OracleError::Disconnected);
    }
    if base.is_empty() {
        // a single vertex, nothing to check
        return Ok(true);
    }

    let clusters: Vec<Vec<usize>> = g
        .flat_clusters()
        .into_iter()
        .map(|(_, vs)| vs.into_iter().map(|v| vi[&v]).collect())
        .collect();

    // candidate connector sets per cluster: exactly enough bridging pairs
    // to make the induced subgraph connected
    let mut per_cluster: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
    for cluster in &clusters {
        let inside: BTreeSet<usize> = cluster.iter().copied().collect();
        let local: BTreeMap<usize, usize> =
            cluster.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::new(cluster.len());
        for &(u, v) in &base {
            if inside.contains(&u) && inside.contains(&v) {
                uf.union(local[&u], local[&v]);
            }
        }
        let comps = uf.class_count();
        if comps == 1 {
            per_cluster.push(vec![Vec::new()]);
            continue;
        }
        let mut bridging = Vec::new();
        for i in 0..cluster.len() {
            for j in (i + 1)..cluster.len() {
                if !uf.same(i, j) {
                    bridging.push((cluster[i], cluster[j]));
                }
            }
        }
        let mut options = Vec::new();
        for combo in combinations(bridging.len(), comps - 1) {
            let mut check = uf.clone();
            for &i in &combo {
                let (u, v) = bridging[i];
                check.union(local[&u], local[&v]);
            }
            if check.class_count() == 1 {
                options.push(combo.iter().map(|&i| bridging[i]).collect());
            }
        }
        assert!(!options.is_empty(), "a spanning connector always exists");
        per_cluster.push(options);
    }

    let simple_base = {
        let mut seen = BTreeSet::new();
        base.iter()
            .all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    };

    let initial = budget;
    let mut budget = budget;
    let mut pick = vec![0usize; per_cluster.len()];
    loop {
        let mut edges = base.clone();
        for (c, &i) in pick.iter().enumerate() {
            edges.extend(per_cluster[c][i].iter().copied());
        }
        let dense = simple_base && n >= 3 && edges.len() > 3 * n - 6;
        if !dense && try_all_rotations(n, &edges, &clusters, &mut budget, initial)? {
            return Ok(true);
        }
        // odometer over the connector choices
        let mut c = 0;
        loop {
            if c == pick.len() {
                return Ok(false);
            }
            pick[c] += 1;
            if pick[c] < per_cluster[c].len() {
                break;
            }
            pick[c] = 0;
            c += 1;
        }
    }
}

fn try_all_rotations(
    n: usize,
    edges: &[(usize, usize)],
    clusters: &[Vec<usize>],
    budget: &mut u64,
    initial: u64,
) -> Result<bool, OracleError> {
    let mut darts_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        darts_at[u].push(2 * e);
        darts_at[v].push(2 * e + 1);
    }
    // fix the first dart of every vertex, permute the rest
    let choices: Vec<Vec<Vec<usize>>> = darts_at
        .iter()
        .map(|list| {
            if list.len() <= 1 {
                vec![list.clone()]
            } else {
                permutations(&list[1..])
                    .into_iter()
                    .map(|tail| {
                        let mut full = vec![list[0]];
                        full.extend(tail);
                        full
                    })
                    .collect()
            }
        })
        .collect();
    let mut pick = vec![0usize; n];
    loop {
        spend(budget, initial)?;
        let rot: Vec<Vec<usize>> = pick
            .iter()
            .enumerate()
            .map(|(v, &i)| choices[v][i].clone())
            .collect();
        let faces = count_faces(edges.len(), &rot);
        if n + faces == edges.len() + 2
            && clusters_see_one_face(edges, &rot, clusters, n)
        {
            return Ok(true);
        }
        let mut v = 0;
        loop {
            if v == n {
                return Ok(false);
            }
            pick[v] += 1;
            if pick[v] < choices[v].len() {
                break;
            }
            pick[v] = 0;
            v += 1;
        }
    }
}

// ------------------------------------------------- embedded search

fn induced_components(g: &ClusteredGraph, cluster: &[VertexId]) -> Vec<Vec<VertexId>> {
    let local: BTreeMap<VertexId, usize> =
        cluster.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(cluster.len());
    for (_, u, v) in g.edges() {
        if let (Some(&a), Some(&b)) = (local.get(&u), local.get(&v)) {
            uf.union(a, b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for &v in cluster {
        groups.entry(uf.find(local[&v])).or_default().push(v);
    }
    groups.into_values().collect()
}

fn next_split_cluster(m: &PlaneMap) -> Option<(NodeId, Vec<Vec<VertexId>>)> {
    for (c, vs) in m.graph().flat_clusters() {
        let comps = induced_components(m.graph(), &vs);
        if comps.len() > 1 {
            return Some((c, comps));
        }
    }
    None
}

/// Every cluster of a fully saturated map must keep all foreign vertices in
/// the outer face of its induced subdrawing. A disk drawn around the cluster
/// necessarily swallows every bounded face of that subdrawing, so a foreign
/// vertex caught in one would end up inside the wrong disk.
fn cluster_discs_ok(m: &PlaneMap) -> bool {
    let g = m.graph();
    let regions = m.regions();
    for (c, vs) in g.flat_clusters() {
        let inside: BTreeSet<VertexId> = vs.iter().copied().collect();
        // faces of the induced subdrawing: regions merge across every edge
        // that the induced subgraph drops
        let mut uf = UnionFind::new(regions.count());
        for (e, u, v) in g.edges() {
            if !(inside.contains(&u) && inside.contains(&v)) {
                uf.union(
                    regions.of_dart(Dart::new(e, 0)).0,
                    regions.of_dart(Dart::new(e, 1)).0,
                );
            }
        }
        let _ = c;
        let outer = uf.find(regions.unbounded().0);
        for v in g.vertices() {
            if inside.contains(&v) {
                continue;
            }
            let r = if m.rotation(v).is_empty() {
                regions.of_float(v)
            } else {
                regions.of_dart(m.rotation(v)[0])
            };
            if uf.find(r.0) != outer {
                return false;
            }
        }
    }
    true
}

fn attachments(m: &PlaneMap, regions: &crate::map::Regions, v: VertexId) -> Vec<(Attach, RegionId)> {
    if m.rotation(v).is_empty() {
        vec![(Attach::Float(v), regions.of_float(v))]
    } else {
        m.rotation(v)
            .iter()
            .map(|&d| (Attach::Corner(d), regions.of_dart(d)))
            .collect()
    }
}

/// Decide clustered planarity of an embedded flat instance by searching over
/// every way of drawing connector edges: every pair of attachment corners in
/// a shared region and, when the new edge splits that region, every way of
/// distributing the region's loose contents between the two sides.
pub fn embedded_cplanar_by_search(map: &PlaneMap, budget: u64) -> Result<bool, OracleError> {
    if !map.graph().is_flat() {
        return Err(OracleError::NotFlat);
    }
    let initial = budget;
    let mut budget = budget;
    search(map, &mut budget, initial)
}

fn search(m: &PlaneMap, budget: &mut u64, initial: u64) -> Result<bool, OracleError> {
    spend(budget, initial)?;
    let Some((_, comps)) = next_split_cluster(m) else {
        return Ok(cluster_discs_ok(m));
    };
    let regions = m.regions();
    let first = &comps[0];
    let rest: Vec<VertexId> = comps[1..].iter().flatten().copied().collect();

    // which graph component each vertex is in, to tell splits from fusions
    let comp_of: BTreeMap<VertexId, usize> = {
        let verts: Vec<VertexId> = m.graph().vertices().collect();
        let idx: BTreeMap<VertexId, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::new(verts.len());
        for (_, u, v) in m.graph().edges() {
            uf.union(idx[&u], idx[&v]);
        }
        verts.iter().map(|&v| (v, uf.find(idx[&v]))).collect()
    };

    for &x in first {
        for &y in &rest {
            for (ax, rx) in attachments(m, &regions, x) {
                for (ay, ry) in attachments(m, &regions, y) {
                    if rx != ry {
                        continue;
                    }
                    let r_old = rx;
                    // contents of the region that may land on either side
                    let movable: Vec<usize> = m
                        .placements()
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| regions.of_host(p.host) == r_old)
                        .map(|(i, _)| i)
                        .collect();
                    // ceiling: the boundary walk not owned by any placement
                    // hosted here (absent when the region is unbounded or
                    // bounded entirely by its own contents)
                    let owned: BTreeSet<Dart> = movable
                        .iter()
                        .filter_map(|&i| match m.placements()[i].item {
                            Item::Component(d) => Some(d),
                            Item::Float(_) => None,
                        })
                        .collect();
                    let ceiling: Option<Dart> = regions
                        .get(r_old)
                        .orbits
                        .iter()
                        .find(|walk| !walk.iter().any(|d| owned.contains(d)))
                        .map(|walk| walk[0]);

                    let mut m2 = m.clone();
                    let Ok(e) = m2.add_edge_at(ax, ay) else {
                        continue;
                    };
                    let regs2 = m2.regions();
                    if regs2.of_dart(Dart::new(e, 0)) == regs2.of_dart(Dart::new(e, 1)) {
                        // the region did not split, nothing to distribute
                        if search(&m2, budget, initial)? {
                            return Ok(true);
                        }
                        continue;
                    }
                    // the new edge cut the region in two; enumerate side
                    // assignments for everything that was loose in it
                    let my_comp = comp_of[&x];
                    let is_self = |i: usize| match m2.placements()[i].item {
                        Item::Component(d) => comp_of[&m2.tail(d)] == my_comp,
                        Item::Float(_) => false,
                    };
                    let k = movable.len();
                    for mask in 0u32..(1 << k) {
                        spend(budget, initial)?;
                        let mut m3 = m2.clone();
                        for (bit, &i) in movable.iter().enumerate() {
                            let side = u8::from(mask & (1 << bit) != 0);
                            let anchor = Dart::new(e, side);
                            if is_self(i) {
                                // the split component itself: pick which
                                // daughter faces its host
                                m3.placement_mut(i).item = Item::Component(anchor);
                                m3.placement_mut(i).host = match ceiling {
                                    Some(d) => Host::In(d),
                                    None => Host::Unbounded,
                                };
                            } else {
                                m3.placement_mut(i).host = Host::In(anchor);
                            }
                        }
                        if m3.validate().is_err() {
                            // a side choice that contradicts the nesting
                            // structure (only possible for the self item)
                            continue;
                        }
                        if search(&m3, budget, initial)? {
                            return Ok(true);
                        }
                    }
                }
            }
        }
    }
    Ok(false)
}
