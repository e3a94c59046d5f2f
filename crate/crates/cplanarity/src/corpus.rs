//! Instance generators for exhaustive and randomized cross-checking.

use crate::cycles::CyclicClusteredCycle;
use crate::graph::{ClusteredGraph, NodeId, VertexId, ROOT};
use crate::map::{Attach, Host, Item, PlaneMap};
use crate::uf::UnionFind;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeMap;

fn pair_slots(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((i, j));
        }
    }
    out
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn go(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            go(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    go(0, &mut cur, &mut out);
    out
}

fn relabel_mask(mask: u32, slots: &[(usize, usize)], lookup: &BTreeMap<(usize, usize), usize>, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for (s, &(i, j)) in slots.iter().enumerate() {
        if mask & (1 << s) != 0 {
            let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
            out |= 1 << lookup[&(a, b)];
        }
    }
    out
}

fn mask_connected(mask: u32, slots: &[(usize, usize)], n: usize) -> bool {
    let mut uf = UnionFind::new(n);
    for (s, &(i, j)) in slots.iter().enumerate() {
        if mask & (1 << s) != 0 {
            uf.union(i, j);
        }
    }
    uf.class_count() == 1
}

/// All connected simple graphs on `n` labeled vertices, one representative
/// per isomorphism class, as edge lists over vertices `1..=n`.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Vec<(u32, u32)>> {
    assert!(n >= 1 && n <= 7, "meant for desk-scale enumeration");
    if n == 1 {
        return vec![Vec::new()];
    }
    let slots = pair_slots(n);
    let lookup: BTreeMap<(usize, usize), usize> =
        slots.iter().enumerate().map(|(s, &p)| (p, s)).collect();
    let perms = permutations_of(n);
    let mut reps = Vec::new();
    for mask in 0u32..(1 << slots.len()) {
        if !mask_connected(mask, &slots, n) {
            continue;
        }
        let canonical = perms
            .iter()
            .map(|p| relabel_mask(mask, &slots, &lookup, p))
            .min()
            .expect("at least the identity");
        if canonical == mask {
            reps.push(
                slots
                    .iter()
                    .enumerate()
                    .filter(|(s, _)| mask & (1 << s) != 0)
                    .map(|(_, &(i, j))| (i as u32 + 1, j as u32 + 1))
                    .collect(),
            );
        }
    }
    reps
}

/// Every way of splitting a connected graph into two nonempty clusters, up
/// to graph automorphisms and swapping the clusters.
pub fn two_cluster_splits(n: usize, edges: &[(u32, u32)]) -> Vec<ClusteredGraph> {
    assert!(n >= 2);
    let slots = pair_slots(n);
    let lookup: BTreeMap<(usize, usize), usize> =
        slots.iter().enumerate().map(|(s, &p)| (p, s)).collect();
    let mut mask = 0u32;
    for &(u, v) in edges {
        let (i, j) = ((u - 1) as usize, (v - 1) as usize);
        mask |= 1 << lookup[&(i.min(j), i.max(j))];
    }
    let auts: Vec<Vec<usize>> = permutations_of(n)
        .into_iter()
        .filter(|p| relabel_mask(mask, &slots, &lookup, p) == mask)
        .collect();
    let full = (1u32 << n) - 1;
    let mut out = Vec::new();
    for split in 1u32..full {
        let canonical = auts
            .iter()
            .flat_map(|p| {
                let mapped = (0..n)
                    .filter(|&i| split & (1 << i) != 0)
                    .fold(0u32, |acc, i| acc | (1 << p[i]));
                [mapped, full & !mapped]
            })
            .min()
            .expect("identity exists");
        if canonical != split {
            continue;
        }
        let a: Vec<u32> = (0..n).filter(|&i| split & (1 << i) != 0).map(|i| i as u32 + 1).collect();
        let b: Vec<u32> = (0..n).filter(|&i| split & (1 << i) == 0).map(|i| i as u32 + 1).collect();
        out.push(ClusteredGraph::flat(&[("A", a), ("B", b)], edges));
    }
    out
}

/// The full two-clustered corpus on at most `n_max` vertices.
pub fn two_clustered_corpus(n_max: usize) -> Vec<ClusteredGraph> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for edges in connected_graphs_up_to_iso(n) {
            out.extend(two_cluster_splits(n, &edges));
        }
    }
    out
}

/// A random loop-free graph with a random flat clustering; parallels and
/// disconnected graphs are allowed.
pub fn random_clustered_graph(rng: &mut impl Rng, n_max: usize) -> ClusteredGraph {
    let n = rng.gen_range(2..=n_max.max(2));
    let mut edges = Vec::new();
    for i in 1..=n as u32 {
        for j in (i + 1)..=n as u32 {
            if rng.gen_bool(0.35) {
                edges.push((i, j));
            }
        }
    }
    // sprinkle a few parallels
    if !edges.is_empty() {
        for _ in 0..rng.gen_range(0..=2) {
            let &e = edges.choose(rng).expect("nonempty");
            edges.push(e);
        }
    }
    let clusters = rng.gen_range(1..=3.min(n));
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); clusters];
    for v in 1..=n as u32 {
        // force the first vertices apart so no cluster is empty
        let c = if (v as usize) <= clusters {
            v as usize - 1
        } else {
            rng.gen_range(0..clusters)
        };
        members[c].push(v);
    }
    let names = ["A", "B", "C"];
    let spec: Vec<(&str, Vec<u32>)> = members
        .into_iter()
        .enumerate()
        .map(|(i, m)| (names[i], m))
        .collect();
    ClusteredGraph::flat(&spec, &edges)
}

/// A random connected flat clustered graph (spanning tree plus extras).
pub fn random_connected_clustered_graph(
    rng: &mut impl Rng,
    n_max: usize,
    max_clusters: usize,
) -> ClusteredGraph {
    let n = rng.gen_range(2..=n_max.max(2));
    let mut edges = Vec::new();
    for v in 2..=n as u32 {
        edges.push((rng.gen_range(1..v), v));
    }
    let extra = rng.gen_range(0..=n / 2);
    for _ in 0..extra {
        let u = rng.gen_range(1..=n as u32);
        let v = rng.gen_range(1..=n as u32);
        if u != v {
            edges.push((u.min(v), u.max(v)));
        }
    }
    let clusters = rng.gen_range(1..=max_clusters.min(n));
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); clusters];
    for v in 1..=n as u32 {
        let c = if (v as usize) <= clusters {
            v as usize - 1
        } else {
            rng.gen_range(0..clusters)
        };
        members[c].push(v);
    }
    let names = ["A", "B", "C", "D", "E"];
    let spec: Vec<(&str, Vec<u32>)> = members
        .into_iter()
        .enumerate()
        .map(|(i, m)| (names[i], m))
        .collect();
    ClusteredGraph::flat(&spec, &edges)
}

/// A random closed walk on the cluster cycle: every step stays or moves to
/// a neighbor.
pub fn random_cyclic_cycle(rng: &mut impl Rng, k: usize, n: usize) -> CyclicClusteredCycle {
    assert!(k >= 3 && n >= 3);
    loop {
        let mut phi = Vec::with_capacity(n);
        phi.push(rng.gen_range(1..=k));
        for _ in 1..n {
            let d = [0, 1, k - 1][rng.gen_range(0..3)];
            let prev = phi[phi.len() - 1];
            phi.push((prev - 1 + d) % k + 1);
        }
        let wrap = (phi[0] + k - phi[n - 1]) % k;
        if wrap == 0 || wrap == 1 || wrap == k - 1 {
            return CyclicClusteredCycle::new(k, phi).expect("steps were kept legal");
        }
    }
}

/// Grow a random plane map by repeated edge surgery, keeping every region
/// incident to at most 5 vertices. Clusters are named A, B, C in order and
/// each gets at least one vertex. With `stay_connected` the result is one
/// component with no isolated vertices; otherwise floats and extra
/// components are allowed.
pub fn random_embedded_instance(
    rng: &mut impl Rng,
    n_target: usize,
    cluster_count: usize,
    stay_connected: bool,
) -> PlaneMap {
    assert!(cluster_count >= 1 && cluster_count <= 3);
    assert!(n_target >= cluster_count && n_target >= 2);
    let names = ["A", "B", "C"];
    let spec: Vec<(&str, Vec<u32>)> = names[..cluster_count]
        .iter()
        .map(|&nm| (nm, Vec::new()))
        .collect();
    let g = ClusteredGraph::flat(&spec, &[]);
    let clusters: Vec<NodeId> = g
        .tree()
        .children(ROOT)
        .to_vec();
    let mut m = PlaneMap::new(g, BTreeMap::new(), Vec::new()).expect("empty map");
    let mut next_vertex = 1u32;
    let fresh = |rng: &mut dyn rand::RngCore, taken: &mut u32| {
        let c = if (*taken as usize) < cluster_count {
            clusters[*taken as usize]
        } else {
            clusters[rng.gen_range(0..cluster_count)]
        };
        *taken += 1;
        c
    };
    // seed with one float per cluster
    let mut taken = 0u32;
    while (next_vertex as usize) <= cluster_count {
        let c = fresh(rng, &mut taken);
        m.add_float_vertex(VertexId(next_vertex), c, Host::Unbounded)
            .expect("fresh float");
        next_vertex += 1;
    }

    let mut stall = 0;
    while stall < 40 {
        let done_growing = m.graph().vertex_count() >= n_target;
        let regions = m.regions();
        // every possible attachment, tagged with its region
        let mut hooks: Vec<(Attach, usize)> = Vec::new();
        for d in m.darts().collect::<Vec<_>>() {
            hooks.push((Attach::Corner(d), regions.of_dart(d).0));
        }
        for p in m.placements() {
            if let Item::Float(v) = p.item {
                hooks.push((Attach::Float(v), regions.of_float(v).0));
            }
        }
        let before = m.clone();
        let grew = if !done_growing && (hooks.is_empty() || rng.gen_bool(0.6)) {
            // new leaf vertex hanging off an existing hook (or a lone float
            // when nothing is there yet)
            let c = fresh(rng, &mut taken);
            let v = VertexId(next_vertex);
            if hooks.is_empty() || (!stay_connected && rng.gen_bool(0.25)) {
                let host = hooks
                    .choose(rng)
                    .map(|&(a, _)| match a {
                        Attach::Corner(d) => Host::In(d),
                        Attach::Float(_) => Host::Unbounded,
                    })
                    .unwrap_or(Host::Unbounded);
                m.add_float_vertex(v, c, host).is_ok() && {
                    next_vertex += 1;
                    true
                }
            } else {
                let &(hook, _) = hooks.choose(rng).expect("nonempty");
                // park the new vertex in the hook's own region first
                let host = match hook {
                    Attach::Corner(d) => Host::In(d),
                    Attach::Float(w) => m
                        .placements()
                        .iter()
                        .find(|p| p.item == Item::Float(w))
                        .expect("float has a placement")
                        .host,
                };
                m.add_float_vertex(v, c, host).expect("fresh float");
                let ok = m.add_edge_at(Attach::Float(v), hook).is_ok();
                if ok {
                    next_vertex += 1;
                }
                ok
            }
        } else {
            // chord between two hooks of one region at distinct vertices
            let mut ok = false;
            if let Some(&(a, r)) = hooks.choose(rng) {
                let va = hook_vertex(&m, a);
                let others: Vec<Attach> = hooks
                    .iter()
                    .filter(|&&(b, rb)| rb == r && hook_vertex(&m, b) != va)
                    .map(|&(b, _)| b)
                    .collect();
                if let Some(&b) = others.choose(rng) {
                    ok = m.add_edge_at(a, b).is_ok();
                }
            }
            ok
        };
        let still_small = m.largest_region_incidence() <= 5;
        if !grew || !still_small {
            m = before;
            stall += 1;
            continue;
        }
        stall = 0;
        if m.graph().vertex_count() >= n_target && rng.gen_bool(0.3) {
            break;
        }
    }
    if stay_connected {
        // link any leftover pieces; give up silently if geometry refuses,
        // callers check connectivity when they need it
        for _ in 0..80 {
            let comps = component_count(&m);
            if comps <= 1 {
                break;
            }
            let regions = m.regions();
            let mut hooks: Vec<(Attach, usize, VertexId)> = Vec::new();
            for d in m.darts().collect::<Vec<_>>() {
                hooks.push((Attach::Corner(d), regions.of_dart(d).0, m.tail(d)));
            }
            for p in m.placements() {
                if let Item::Float(v) = p.item {
                    hooks.push((Attach::Float(v), regions.of_float(v).0, v));
                }
            }
            let Some(&(a, r, va)) = hooks.choose(rng) else {
                break;
            };
            let others: Vec<Attach> = hooks
                .iter()
                .filter(|&&(_b, rb, vb)| rb == r && vb != va && !same_component(&m, va, vb))
                .map(|&(b, _, _)| b)
                .collect();
            if let Some(&b) = others.choose(rng) {
                let before = m.clone();
                if m.add_edge_at(a, b).is_err() || m.largest_region_incidence() > 5 {
                    m = before;
                }
            }
        }
    }
    debug_assert!(m.validate().is_ok());
    m
}

fn hook_vertex(m: &PlaneMap, a: Attach) -> VertexId {
    match a {
        Attach::Corner(d) => m.tail(d),
        Attach::Float(v) => v,
    }
}

fn component_count(m: &PlaneMap) -> usize {
    let verts: Vec<VertexId> = m.graph().vertices().collect();
    let idx: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(verts.len());
    for (_, u, v) in m.graph().edges() {
        uf.union(idx[&u], idx[&v]);
    }
    uf.class_count()
}

fn same_component(m: &PlaneMap, a: VertexId, b: VertexId) -> bool {
    let verts: Vec<VertexId> = m.graph().vertices().collect();
    let idx: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(verts.len());
    for (_, u, v) in m.graph().edges() {
        uf.union(idx[&u], idx[&v]);
    }
    uf.find(idx[&a]) == uf.find(idx[&b])
}
