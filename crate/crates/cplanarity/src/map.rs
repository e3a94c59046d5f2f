//! Plane maps: combinatorial embeddings of clustered multigraphs.
//!
//! The embedding is the usual rotation-system one. Every edge contributes two
//! darts; the clockwise cyclic order of darts around each vertex determines
//! the faces of each connected component (orbits of dart -> successor of the
//! twin). Because instances may be disconnected, the map also records how the
//! pieces nest: every edge-bearing component names one face orbit as the
//! boundary toward its surroundings and says which face of which other
//! component (or the unbounded plane) it sits in, and every isolated vertex
//! is placed the same way. A region of the whole drawing is then a face
//! orbit together with everything placed into it.
//!
//! All surgery (adding an edge inside a region, contracting an edge,
//! deleting a loop with everything it encloses) keeps the placement
//! bookkeeping consistent; anchors are darts, and anchors about to die are
//! rerouted along their old face walk before the cut.

use crate::graph::{ClusteredGraph, EdgeId, NodeId, VertexId};
use crate::uf::UnionFind;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// One of the two sides of an edge: side 0 starts at the first endpoint of
/// the edge as stored, side 1 at the second.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dart(u64);

impl Dart {
    pub fn new(e: EdgeId, side: u8) -> Dart {
        assert!(side < 2);
        Dart(u64::from(e.0) * 2 + u64::from(side))
    }

    pub fn edge(self) -> EdgeId {
        EdgeId((self.0 / 2) as u32)
    }

    pub fn side(self) -> u8 {
        (self.0 % 2) as u8
    }

    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}",
            self.edge(),
            if self.side() == 0 { "a" } else { "b" }
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Host {
    Unbounded,
    /// The region bounded by the face orbit of this dart.
    In(Dart),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Item {
    /// An edge-bearing component, identified by a dart on the face orbit
    /// that borders its host region.
    Component(Dart),
    /// An isolated vertex.
    Float(VertexId),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Placement {
    pub item: Item,
    pub host: Host,
}

/// Where to hook a new edge end: the corner just before an existing dart in
/// its vertex rotation, or an isolated vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Attach {
    Corner(Dart),
    Float(VertexId),
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("vertex {0} has no rotation entry")]
    MissingRotation(VertexId),
    #[error("rotation mentions unknown vertex {0}")]
    UnknownRotationVertex(VertexId),
    #[error("dart {0} does not belong to any edge")]
    UnknownDart(Dart),
    #[error("dart {0} appears {1} times in the rotations, expected once at its own vertex")]
    BadDartCoverage(Dart, usize),
    #[error("component containing vertex {0} does not satisfy V - E + F = 2")]
    NotPlanar(VertexId),
    #[error("component containing vertex {0} needs exactly one outer-boundary placement, found {1}")]
    BadComponentPlacement(VertexId, usize),
    #[error("isolated vertex {0} needs exactly one placement, found {1}")]
    BadFloatPlacement(VertexId, usize),
    #[error("float placement names vertex {0} which has edges")]
    FloatNotIsolated(VertexId),
    #[error("placement hosts an item inside its own component (dart {0})")]
    HostInsideItself(Dart),
    #[error("placements nest components in a cycle")]
    HostCycle,
    #[error("attachments lie in different regions")]
    DifferentRegions,
    #[error("cannot attach twice at the same corner")]
    SameCorner,
    #[error("edge {0} is a loop")]
    IsALoop(EdgeId),
    #[error("edge {0} is not a loop")]
    NotALoop(EdgeId),
    #[error("edge {0} joins different clusters and cannot be contracted")]
    ContractAcrossClusters(EdgeId),
    #[error("no edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} already present")]
    VertexExists(VertexId),
    #[error("{0} is not a flat cluster of the tree")]
    NotAFlatCluster(NodeId),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RegionId(pub usize);

#[derive(Clone, Debug)]
pub struct Region {
    /// Face walks bordering this region, each starting at its smallest dart.
    pub orbits: Vec<Vec<Dart>>,
    pub floats: Vec<VertexId>,
    pub incident: BTreeSet<VertexId>,
    pub unbounded: bool,
}

#[derive(Clone, Debug)]
pub struct Regions {
    list: Vec<Region>,
    dart_region: BTreeMap<Dart, RegionId>,
    float_region: BTreeMap<VertexId, RegionId>,
    unbounded: RegionId,
}

impl Regions {
    pub fn count(&self) -> usize {
        self.list.len()
    }

    pub fn get(&self, r: RegionId) -> &Region {
        &self.list[r.0]
    }

    pub fn iter(&self) -> impl Iterator<Item = (RegionId, &Region)> {
        self.list.iter().enumerate().map(|(i, r)| (RegionId(i), r))
    }

    pub fn of_dart(&self, d: Dart) -> RegionId {
        self.dart_region[&d]
    }

    pub fn of_float(&self, v: VertexId) -> RegionId {
        self.float_region[&v]
    }

    pub fn of_host(&self, h: Host) -> RegionId {
        match h {
            Host::Unbounded => self.unbounded,
            Host::In(d) => self.of_dart(d),
        }
    }

    pub fn unbounded(&self) -> RegionId {
        self.unbounded
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoopDeletion {
    Removed {
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
    },
    /// A vertex of another cluster lies strictly inside the loop; the map is
    /// untouched.
    ForeignInside(VertexId),
}

#[derive(Clone, Debug)]
pub struct PlaneMap {
    g: ClusteredGraph,
    rot: BTreeMap<VertexId, Vec<Dart>>,
    placements: Vec<Placement>,
}

impl PlaneMap {
    pub fn new(
        g: ClusteredGraph,
        rot: BTreeMap<VertexId, Vec<Dart>>,
        placements: Vec<Placement>,
    ) -> Result<PlaneMap, MapError> {
        let m = PlaneMap { g, rot, placements };
        m.validate()?;
        Ok(m)
    }

    /// Single placement: the orbit of `outer` borders the unbounded plane.
    pub fn from_connected(
        g: ClusteredGraph,
        rot: BTreeMap<VertexId, Vec<Dart>>,
        outer: Dart,
    ) -> Result<PlaneMap, MapError> {
        PlaneMap::new(
            g,
            rot,
            vec![Placement {
                item: Item::Component(outer),
                host: Host::Unbounded,
            }],
        )
    }

    pub fn graph(&self) -> &ClusteredGraph {
        &self.g
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rot[&v]
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    // raw access for the exhaustive search, which rewrites hosts to pick
    // a side after a face split; callers re-validate
    pub(crate) fn placement_mut(&mut self, index: usize) -> &mut Placement {
        &mut self.placements[index]
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.g
            .edges()
            .flat_map(|(e, _, _)| [Dart::new(e, 0), Dart::new(e, 1)])
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        let (u, v) = self.g.ends(d.edge()).expect("dart of a live edge");
        if d.side() == 0 {
            u
        } else {
            v
        }
    }

    pub fn head(&self, d: Dart) -> VertexId {
        self.tail(d.twin())
    }

    fn rot_next(&self, d: Dart) -> Dart {
        let r = &self.rot[&self.tail(d)];
        let i = r.iter().position(|&x| x == d).expect("dart in its rotation");
        r[(i + 1) % r.len()]
    }

    /// Next dart along the face walk.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_next(d.twin())
    }

    /// The face orbit through `d`, starting at its smallest dart.
    pub fn face_walk(&self, d: Dart) -> Vec<Dart> {
        let mut walk = vec![d];
        let mut x = self.face_next(d);
        while x != d {
            walk.push(x);
            x = self.face_next(x);
        }
        let best = walk
            .iter()
            .enumerate()
            .min_by_key(|&(_, x)| x)
            .map(|(i, _)| i)
            .expect("nonempty walk");
        walk.rotate_left(best);
        walk
    }

    /// All face orbits, sorted by smallest dart.
    pub fn orbits(&self) -> Vec<Vec<Dart>> {
        let mut seen: BTreeSet<Dart> = BTreeSet::new();
        let mut out = Vec::new();
        for d in self.darts() {
            if seen.contains(&d) {
                continue;
            }
            let walk = self.face_walk(d);
            seen.extend(walk.iter().copied());
            out.push(walk);
        }
        out.sort_by_key(|w| w[0]);
        out
    }

    pub fn regions(&self) -> Regions {
        let orbits = self.orbits();
        let orbit_of: BTreeMap<Dart, usize> = orbits
            .iter()
            .enumerate()
            .flat_map(|(i, w)| w.iter().map(move |&d| (d, i)))
            .collect();
        let unb = orbits.len(); // extra node for the unbounded plane
        let mut uf = UnionFind::new(unb + 1);
        for p in &self.placements {
            if let Item::Component(d) = p.item {
                let host = match p.host {
                    Host::Unbounded => unb,
                    Host::In(h) => orbit_of[&h],
                };
                uf.union(orbit_of[&d], host);
            }
        }
        let mut root_region: BTreeMap<usize, usize> = BTreeMap::new();
        let mut list: Vec<Region> = Vec::new();
        // the unbounded region comes first, the rest by smallest orbit
        let mut order: Vec<usize> = (0..=unb).collect();
        order.sort_by_key(|&n| (n != unb, n));
        for n in order {
            let root = uf.find(n);
            if let std::collections::btree_map::Entry::Vacant(slot) = root_region.entry(root) {
                slot.insert(list.len());
                list.push(Region {
                    orbits: Vec::new(),
                    floats: Vec::new(),
                    incident: BTreeSet::new(),
                    unbounded: false,
                });
            }
        }
        let unbounded = RegionId(root_region[&uf.find(unb)]);
        list[unbounded.0].unbounded = true;
        let mut dart_region = BTreeMap::new();
        for (i, w) in orbits.iter().enumerate() {
            let rid = root_region[&uf.find(i)];
            for &d in w {
                dart_region.insert(d, RegionId(rid));
                list[rid].incident.insert(self.tail(d));
            }
            list[rid].orbits.push(w.clone());
        }
        let mut float_region = BTreeMap::new();
        for p in &self.placements {
            if let Item::Float(v) = p.item {
                let host = match p.host {
                    Host::Unbounded => unb,
                    Host::In(h) => orbit_of[&h],
                };
                let rid = root_region[&uf.find(host)];
                float_region.insert(v, RegionId(rid));
                list[rid].floats.push(v);
                list[rid].incident.insert(v);
            }
        }
        Regions {
            list,
            dart_region,
            float_region,
            unbounded,
        }
    }

    pub fn largest_region_incidence(&self) -> usize {
        self.regions()
            .iter()
            .map(|(_, r)| r.incident.len())
            .max()
            .unwrap_or(0)
    }

    pub fn loops(&self) -> Vec<EdgeId> {
        self.g
            .edges()
            .filter(|&(_, u, v)| u == v)
            .map(|(e, _, _)| e)
            .collect()
    }

    fn component_assignment(&self) -> (UnionFind, BTreeMap<VertexId, usize>) {
        let index: BTreeMap<VertexId, usize> = self
            .g
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut uf = UnionFind::new(index.len());
        for (_, u, v) in self.g.edges() {
            uf.union(index[&u], index[&v]);
        }
        (uf, index)
    }

    pub fn validate(&self) -> Result<(), MapError> {
        for v in self.g.vertices() {
            if !self.rot.contains_key(&v) {
                return Err(MapError::MissingRotation(v));
            }
        }
        for (&v, _) in &self.rot {
            if !self.g.has_vertex(v) {
                return Err(MapError::UnknownRotationVertex(v));
            }
        }
        // every dart exactly once, at the rotation of its own tail
        let mut count: BTreeMap<Dart, usize> = BTreeMap::new();
        for (&v, darts) in &self.rot {
            for &d in darts {
                if self.g.ends(d.edge()).is_none() {
                    return Err(MapError::UnknownDart(d));
                }
                if self.tail(d) != v {
                    return Err(MapError::BadDartCoverage(d, 0));
                }
                *count.entry(d).or_insert(0) += 1;
            }
        }
        for d in self.darts() {
            let c = count.get(&d).copied().unwrap_or(0);
            if c != 1 {
                return Err(MapError::BadDartCoverage(d, c));
            }
        }
        if count.len() != self.g.edge_count() * 2 {
            let stray = count
                .keys()
                .find(|d| self.g.ends(d.edge()).is_none())
                .copied();
            if let Some(d) = stray {
                return Err(MapError::UnknownDart(d));
            }
        }

        // Euler per component
        let (mut uf, index) = self.component_assignment();
        let mut comp_v: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comp_e: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comp_f: BTreeMap<usize, usize> = BTreeMap::new();
        for v in self.g.vertices() {
            *comp_v.entry(uf.find(index[&v])).or_insert(0) += 1;
        }
        for (_, u, _) in self.g.edges() {
            *comp_e.entry(uf.find(index[&u])).or_insert(0) += 1;
        }
        for w in self.orbits() {
            let c = uf.find(index[&self.tail(w[0])]);
            *comp_f.entry(c).or_insert(0) += 1;
        }
        for (&c, &nv) in &comp_v {
            let ne = comp_e.get(&c).copied().unwrap_or(0);
            let nf = comp_f.get(&c).copied().unwrap_or(0);
            if ne == 0 {
                continue; // isolated vertex
            }
            if nv + nf != ne + 2 {
                let witness = self
                    .g
                    .vertices()
                    .find(|&v| uf.find(index[&v]) == c)
                    .expect("component has vertices");
                return Err(MapError::NotPlanar(witness));
            }
        }

        // placements: one per edge-bearing component, one per float
        let mut comp_placements: BTreeMap<usize, usize> = BTreeMap::new();
        let mut float_placements: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut hosting: Vec<(usize, usize)> = Vec::new();
        for p in &self.placements {
            match p.item {
                Item::Component(d) => {
                    if self.g.ends(d.edge()).is_none() {
                        return Err(MapError::UnknownDart(d));
                    }
                    let c = uf.find(index[&self.tail(d)]);
                    *comp_placements.entry(c).or_insert(0) += 1;
                    if let Host::In(h) = p.host {
                        if self.g.ends(h.edge()).is_none() {
                            return Err(MapError::UnknownDart(h));
                        }
                        let hc = uf.find(index[&self.tail(h)]);
                        if hc == c {
                            return Err(MapError::HostInsideItself(d));
                        }
                        hosting.push((c, hc));
                    }
                }
                Item::Float(v) => {
                    if !self.g.has_vertex(v) {
                        return Err(MapError::UnknownRotationVertex(v));
                    }
                    if self.g.degree(v) != 0 {
                        return Err(MapError::FloatNotIsolated(v));
                    }
                    *float_placements.entry(v).or_insert(0) += 1;
                    if let Host::In(h) = p.host {
                        if self.g.ends(h.edge()).is_none() {
                            return Err(MapError::UnknownDart(h));
                        }
                    }
                }
            }
        }
        for v in self.g.vertices() {
            let c = uf.find(index[&v]);
            if self.g.degree(v) == 0 {
                let n = float_placements.get(&v).copied().unwrap_or(0);
                if n != 1 {
                    return Err(MapError::BadFloatPlacement(v, n));
                }
            } else {
                let n = comp_placements.get(&c).copied().unwrap_or(0);
                if n != 1 {
                    return Err(MapError::BadComponentPlacement(v, n));
                }
            }
        }
        // nesting must not loop
        let mut hosts: BTreeMap<usize, usize> = BTreeMap::new();
        for (c, hc) in hosting {
            hosts.insert(c, hc);
        }
        for &start in hosts.keys() {
            let mut slow = start;
            let mut steps = 0;
            while let Some(&next) = hosts.get(&slow) {
                slow = next;
                steps += 1;
                if steps > hosts.len() {
                    return Err(MapError::HostCycle);
                }
            }
        }
        Ok(())
    }

    fn attach_vertex(&self, a: Attach) -> VertexId {
        match a {
            Attach::Corner(d) => self.tail(d),
            Attach::Float(v) => v,
        }
    }

    fn attach_region(&self, regions: &Regions, a: Attach) -> RegionId {
        match a {
            Attach::Corner(d) => regions.of_dart(d),
            Attach::Float(v) => regions.of_float(v),
        }
    }

    /// Draw a new edge inside a region, hooking each end at the given
    /// attachment. Attaching at `Corner(d)` puts the new dart immediately
    /// before `d` in the rotation. Returns the new edge id.
    pub fn add_edge_at(&mut self, a: Attach, b: Attach) -> Result<EdgeId, MapError> {
        if let (Attach::Corner(x), Attach::Corner(y)) = (a, b) {
            if x == y {
                return Err(MapError::SameCorner);
            }
        }
        for at in [a, b] {
            match at {
                Attach::Corner(d) if self.g.ends(d.edge()).is_none() => {
                    return Err(MapError::UnknownDart(d))
                }
                Attach::Float(v) if !self.g.has_vertex(v) => {
                    return Err(MapError::UnknownRotationVertex(v))
                }
                Attach::Float(v) if self.g.degree(v) != 0 => {
                    return Err(MapError::FloatNotIsolated(v))
                }
                _ => {}
            }
        }
        let regions = self.regions();
        let region = self.attach_region(&regions, a);
        if region != self.attach_region(&regions, b) {
            return Err(MapError::DifferentRegions);
        }
        let (va, vb) = (self.attach_vertex(a), self.attach_vertex(b));

        // placement consequences are decided on the state before surgery
        let (mut uf, index) = self.component_assignment();
        let placement_fix: PlacementFix = match (a, b) {
            (Attach::Float(x), Attach::Float(y)) => {
                let host = self
                    .placements
                    .iter()
                    .find_map(|p| (p.item == Item::Float(x)).then_some(p.host))
                    .expect("validated float has a placement");
                let _ = y;
                PlacementFix::TwoFloats { host }
            }
            (Attach::Float(x), _) | (_, Attach::Float(x)) => PlacementFix::DropFloat(x),
            (Attach::Corner(_), Attach::Corner(_)) => {
                let (ca, cb) = (uf.find(index[&va]), uf.find(index[&vb]));
                if ca == cb {
                    PlacementFix::None
                } else {
                    // joining two components: exactly one of them keeps its
                    // outer-boundary placement
                    let hosted_here = |c: usize, uf: &mut UnionFind| -> Option<usize> {
                        self.placements.iter().enumerate().find_map(|(i, p)| {
                            if let Item::Component(d) = p.item {
                                if uf.find(index[&self.tail(d)]) == c
                                    && regions.of_host(p.host) == region
                                {
                                    return Some(i);
                                }
                            }
                            None
                        })
                    };
                    let pa = hosted_here(ca, &mut uf);
                    let pb = hosted_here(cb, &mut uf);
                    // hosting chains are acyclic, so this terminates
                    let chain_hits_merged = |start: Host, uf: &mut UnionFind| -> bool {
                        let mut h = start;
                        loop {
                            let Host::In(d) = h else { return false };
                            let c = uf.find(index[&self.tail(d)]);
                            if c == ca || c == cb {
                                return true;
                            }
                            h = self
                                .placements
                                .iter()
                                .find_map(|p| match p.item {
                                    Item::Component(dd)
                                        if uf.find(index[&self.tail(dd)]) == c =>
                                    {
                                        Some(p.host)
                                    }
                                    _ => None,
                                })
                                .unwrap_or(Host::Unbounded);
                        }
                    };
                    let (drop, keep) = match (pa, pb) {
                        (Some(i), Some(j)) => (j, Some(i)), // siblings: keep the a side
                        (Some(i), None) => (i, None),
                        (None, Some(j)) => (j, None),
                        (None, None) => unreachable!(
                            "two components bordering one region cannot both enclose it"
                        ),
                    };
                    // the kept placement must not end up hosted inside the
                    // merged component; repoint it at the region's encloser
                    let rehost = keep.and_then(|i| {
                        if !chain_hits_merged(self.placements[i].host, &mut uf) {
                            return None;
                        }
                        let h = regions
                            .get(region)
                            .orbits
                            .iter()
                            .flatten()
                            .find(|&&x| !chain_hits_merged(Host::In(x), &mut uf))
                            .map(|&x| Host::In(x))
                            .unwrap_or(Host::Unbounded);
                        Some((i, h))
                    });
                    PlacementFix::DropIndex { drop, rehost }
                }
            }
        };

        let e = self.g.add_edge_raw(va, vb);
        let (na, nb) = (Dart::new(e, 0), Dart::new(e, 1));
        self.insert_dart(na, a);
        self.insert_dart(nb, b);
        match placement_fix {
            PlacementFix::None => {}
            PlacementFix::DropIndex { drop, rehost } => {
                if let Some((i, h)) = rehost {
                    self.placements[i].host = h;
                }
                self.placements.remove(drop);
            }
            PlacementFix::DropFloat(x) => {
                self.placements.retain(|p| p.item != Item::Float(x));
            }
            PlacementFix::TwoFloats { host } => {
                self.placements
                    .retain(|p| p.item != Item::Float(va) && p.item != Item::Float(vb));
                self.placements.push(Placement {
                    item: Item::Component(na),
                    host,
                });
            }
        }
        debug_assert_eq!(self.validate(), Ok(()));
        Ok(e)
    }

    fn insert_dart(&mut self, new: Dart, at: Attach) {
        match at {
            Attach::Corner(d) => {
                let v = self.tail(d);
                let r = self.rot.get_mut(&v).expect("rotation exists");
                let i = r.iter().position(|&x| x == d).expect("corner dart");
                r.insert(i, new);
            }
            Attach::Float(v) => {
                let r = self.rot.get_mut(&v).expect("rotation exists");
                assert!(r.is_empty(), "float with darts");
                r.push(new);
            }
        }
    }

    /// First dart after `from` (exclusive) along its old face walk that
    /// survives, i.e. is not in `dying`.
    fn reroute(&self, from: Dart, dying: &BTreeSet<Dart>) -> Option<Dart> {
        let mut x = self.face_next(from);
        while x != from {
            if !dying.contains(&x) {
                return Some(x);
            }
            x = self.face_next(x);
        }
        None
    }

    /// Contract a non-loop intra-cluster edge; the smaller endpoint survives.
    pub fn contract_edge(&mut self, e: EdgeId) -> Result<VertexId, MapError> {
        let Some((u, v)) = self.g.ends(e) else {
            return Err(MapError::UnknownEdge(e));
        };
        if u == v {
            return Err(MapError::IsALoop(e));
        }
        if self.g.flat_cluster_of(u) != self.g.flat_cluster_of(v) {
            return Err(MapError::ContractAcrossClusters(e));
        }
        let keep = u.min(v);
        let gone = u.max(v);
        let dying: BTreeSet<Dart> = [Dart::new(e, 0), Dart::new(e, 1)].into();
        let dart_keep = if self.tail(Dart::new(e, 0)) == keep {
            Dart::new(e, 0)
        } else {
            Dart::new(e, 1)
        };
        let dart_gone = dart_keep.twin();

        // reroute anchors sitting on the contracted edge; if the edge was a
        // whole component, things anchored at it fall back to that
        // component's own host
        let my_host = self
            .placements
            .iter()
            .find_map(|p| match p.item {
                Item::Component(d) if self.same_component(self.tail(d), keep) => Some(p.host),
                _ => None,
            })
            .expect("edge-bearing component is placed");
        let mut fixes: Vec<(usize, Placement)> = Vec::new();
        for (i, p) in self.placements.iter().enumerate() {
            let mut q = *p;
            let mut touched = false;
            if let Item::Component(d) = q.item {
                if dying.contains(&d) {
                    touched = true;
                    q.item = match self.reroute(d, &dying) {
                        Some(d2) => Item::Component(d2),
                        None => Item::Float(keep), // the component was just this edge
                    };
                }
            }
            if let Host::In(h) = q.host {
                if dying.contains(&h) {
                    touched = true;
                    q.host = match self.reroute(h, &dying) {
                        Some(h2) => Host::In(h2),
                        None => my_host, // hosted beside an edge that was a whole component
                    };
                }
            }
            if touched {
                fixes.push((i, q));
            }
        }
        for (i, q) in fixes {
            self.placements[i] = q;
        }

        // splice the rotation of `gone` into `keep` in place of the edge
        let mut rot_gone = self.rot.remove(&gone).expect("rotation exists");
        let gi = rot_gone
            .iter()
            .position(|&x| x == dart_gone)
            .expect("dart in rotation");
        rot_gone.rotate_left(gi);
        rot_gone.remove(0);
        let rot_keep = self.rot.get_mut(&keep).expect("rotation exists");
        let ki = rot_keep
            .iter()
            .position(|&x| x == dart_keep)
            .expect("dart in rotation");
        rot_keep.splice(ki..=ki, rot_gone);

        self.g.remove_edge_raw(e);
        self.g.rewrite_endpoints_raw(gone, keep);
        self.g.remove_vertex_raw(gone);
        debug_assert_eq!(self.validate(), Ok(()));
        Ok(keep)
    }

    fn same_component(&self, a: VertexId, b: VertexId) -> bool {
        let (mut uf, index) = self.component_assignment();
        uf.find(index[&a]) == uf.find(index[&b])
    }

    /// Remove a loop together with everything drawn strictly inside it,
    /// provided the inside holds only vertices of the loop's own cluster.
    pub fn delete_loop_and_enclosed(&mut self, loop_e: EdgeId) -> Result<LoopDeletion, MapError> {
        let Some((u, v)) = self.g.ends(loop_e) else {
            return Err(MapError::UnknownEdge(loop_e));
        };
        if u != v {
            return Err(MapError::NotALoop(loop_e));
        }
        let anchor_vertex = u;
        let regions = self.regions();
        let (d0, d1) = (Dart::new(loop_e, 0), Dart::new(loop_e, 1));
        let (r0, r1) = (regions.of_dart(d0), regions.of_dart(d1));
        assert_ne!(r0, r1, "a loop has two sides");

        // the two sides of the loop curve: regions connected across any
        // other edge lie on one side
        let mut side = UnionFind::new(regions.count());
        for (f, _, _) in self.g.edges() {
            if f != loop_e {
                side.union(
                    regions.of_dart(Dart::new(f, 0)).0,
                    regions.of_dart(Dart::new(f, 1)).0,
                );
            }
        }
        assert_eq!(side.class_count(), 2, "a loop splits the plane in two");
        assert_ne!(side.find(r0.0), side.find(r1.0));
        let outside_class = side.find(regions.unbounded().0);
        let inside_class = if side.find(r0.0) == outside_class {
            side.find(r1.0)
        } else {
            side.find(r0.0)
        };
        assert_ne!(inside_class, outside_class);

        let my_cluster = self.g.flat_cluster_of(anchor_vertex);
        let mut inside_vertices: Vec<VertexId> = Vec::new();
        for w in self.g.vertices() {
            if w == anchor_vertex {
                continue;
            }
            let sample = if self.g.degree(w) == 0 {
                regions.of_float(w)
            } else {
                regions.of_dart(self.rot[&w][0])
            };
            if side.find(sample.0) == inside_class {
                if self.g.flat_cluster_of(w) != my_cluster {
                    return Ok(LoopDeletion::ForeignInside(w));
                }
                inside_vertices.push(w);
            }
        }
        let mut gone_edges: Vec<EdgeId> = vec![loop_e];
        for (f, _, _) in self.g.edges() {
            if f != loop_e && side.find(regions.of_dart(Dart::new(f, 0)).0) == inside_class {
                gone_edges.push(f);
            }
        }
        gone_edges.sort();
        let dying: BTreeSet<Dart> = gone_edges
            .iter()
            .flat_map(|&f| [Dart::new(f, 0), Dart::new(f, 1)])
            .collect();
        let gone_vertex_set: BTreeSet<VertexId> = inside_vertices.iter().copied().collect();
        for &f in &gone_edges {
            let (x, y) = self.g.ends(f).expect("live edge");
            debug_assert!(x == anchor_vertex || gone_vertex_set.contains(&x));
            debug_assert!(y == anchor_vertex || gone_vertex_set.contains(&y));
        }

        // if the anchor keeps no darts its component placement turns into a
        // float placement; remember its host for rerouted anchors
        let anchor_keeps_darts = self.rot[&anchor_vertex]
            .iter()
            .any(|d| !dying.contains(d));
        let anchor_component_host = self
            .placements
            .iter()
            .find_map(|p| match p.item {
                Item::Component(d) if self.same_component(self.tail(d), anchor_vertex) => {
                    Some(p.host)
                }
                _ => None,
            })
            .expect("loop component is placed");

        let mut new_placements: Vec<Placement> = Vec::new();
        for p in &self.placements {
            let mut q = *p;
            match q.item {
                Item::Float(w) if gone_vertex_set.contains(&w) => continue,
                Item::Float(_) => {}
                Item::Component(d) => {
                    let t = self.tail(d);
                    if gone_vertex_set.contains(&t) {
                        continue; // the whole component is enclosed
                    }
                    if dying.contains(&d) {
                        q.item = match self.reroute(d, &dying) {
                            Some(d2) => Item::Component(d2),
                            None => {
                                assert!(!anchor_keeps_darts);
                                Item::Float(anchor_vertex)
                            }
                        };
                    }
                }
            }
            if let Host::In(h) = q.host {
                if dying.contains(&h) {
                    q.host = match self.reroute(h, &dying) {
                        Some(h2) => Host::In(h2),
                        None => anchor_component_host,
                    };
                }
            }
            new_placements.push(q);
        }
        self.placements = new_placements;

        let anchor_rot = self.rot.get_mut(&anchor_vertex).expect("rotation exists");
        anchor_rot.retain(|d| !dying.contains(d));
        for &f in &gone_edges {
            self.g.remove_edge_raw(f);
        }
        for &w in &inside_vertices {
            self.rot.remove(&w);
            self.g.remove_vertex_raw(w);
        }
        debug_assert_eq!(self.validate(), Ok(()));
        Ok(LoopDeletion::Removed {
            vertices: inside_vertices,
            edges: gone_edges,
        })
    }

    /// Add a fresh isolated vertex floating in the region of `host`.
    pub fn add_float_vertex(
        &mut self,
        v: VertexId,
        cluster: NodeId,
        host: Host,
    ) -> Result<(), MapError> {
        if self.g.has_vertex(v) {
            return Err(MapError::VertexExists(v));
        }
        if let Host::In(h) = host {
            if self.g.ends(h.edge()).is_none() {
                return Err(MapError::UnknownDart(h));
            }
        }
        let tree = self.g.tree();
        let is_flat_cluster = tree.parent(cluster) == Some(crate::graph::ROOT)
            && !tree.is_leaf(cluster);
        if !is_flat_cluster {
            return Err(MapError::NotAFlatCluster(cluster));
        }
        self.g.add_vertex_raw(v, cluster);
        self.rot.insert(v, Vec::new());
        self.placements.push(Placement {
            item: Item::Float(v),
            host,
        });
        debug_assert_eq!(self.validate(), Ok(()));
        Ok(())
    }
}

enum PlacementFix {
    None,
    DropIndex {
        drop: usize,
        rehost: Option<(usize, Host)>,
    },
    DropFloat(VertexId),
    TwoFloats { host: Host },
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn triangle_map() -> PlaneMap {
        // triangle 1-2-3 in one cluster; edges 1:(1,2) 2:(2,3) 3:(3,1)
        let g = ClusteredGraph::flat(&[("A", vec![1, 2, 3])], &[(1, 2), (2, 3), (3, 1)]);
        let rot = rot_of(&[
            (1, vec![(1, 0), (3, 1)]),
            (2, vec![(2, 0), (1, 1)]),
            (3, vec![(3, 0), (2, 1)]),
        ]);
        PlaneMap::from_connected(g, rot, Dart::new(EdgeId(1), 0)).unwrap()
    }

    #[test]
    fn triangle_has_two_faces_of_three_darts() {
        let m = triangle_map();
        let orbits = m.orbits();
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|w| w.len() == 3));
        let regions = m.regions();
        assert_eq!(regions.count(), 2);
        for (_, r) in regions.iter() {
            assert_eq!(r.incident.len(), 3);
        }
    }

    #[test]
    fn bad_euler_is_rejected() {
        // three parallel edges with the same rotation order at both ends
        // close up into a single face: that lives on the torus, not the plane
        let g = ClusteredGraph::flat(&[("A", vec![1, 2])], &[(1, 2), (1, 2), (1, 2)]);
        let rot = rot_of(&[
            (1, vec![(1, 0), (2, 0), (3, 0)]),
            (2, vec![(1, 1), (2, 1), (3, 1)]),
        ]);
        let err = PlaneMap::from_connected(g, rot, Dart::new(EdgeId(1), 0)).unwrap_err();
        assert!(matches!(err, MapError::NotPlanar(_)));
    }

    #[test]
    fn nested_triangles_share_a_region() {
        let g = ClusteredGraph::flat(
            &[("A", vec![1, 2, 3]), ("B", vec![4, 5, 6])],
            &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)],
        );
        let rot = rot_of(&[
            (1, vec![(1, 0), (3, 1)]),
            (2, vec![(2, 0), (1, 1)]),
            (3, vec![(3, 0), (2, 1)]),
            (4, vec![(4, 0), (6, 1)]),
            (5, vec![(5, 0), (4, 1)]),
            (6, vec![(6, 0), (5, 1)]),
        ]);
        // inner triangle placed in the face of the outer one that contains
        // dart 1:1 (an interior face of component 1-2-3)
        let m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Component(Dart::new(EdgeId(4), 0)),
                    host: Host::In(Dart::new(EdgeId(1), 1)),
                },
            ],
        )
        .unwrap();
        let regions = m.regions();
        // outer, the shared annular region, inside of the inner triangle
        assert_eq!(regions.count(), 3);
        let shared = regions.of_dart(Dart::new(EdgeId(1), 1));
        assert_eq!(regions.get(shared).incident.len(), 6);
        assert_eq!(regions.get(shared).orbits.len(), 2);
        assert_eq!(m.largest_region_incidence(), 6);
    }

    #[test]
    fn host_cycle_is_rejected() {
        let g = ClusteredGraph::flat(
            &[("A", vec![1, 2]), ("B", vec![3, 4])],
            &[(1, 2), (3, 4)],
        );
        let rot = rot_of(&[
            (1, vec![(1, 0)]),
            (2, vec![(1, 1)]),
            (3, vec![(2, 0)]),
            (4, vec![(2, 1)]),
        ]);
        let err = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::In(Dart::new(EdgeId(2), 0)),
                },
                Placement {
                    item: Item::Component(Dart::new(EdgeId(2), 0)),
                    host: Host::In(Dart::new(EdgeId(1), 0)),
                },
            ],
        )
        .unwrap_err();
        assert_eq!(err, MapError::HostCycle);
    }

    #[test]
    fn float_in_a_face_counts_as_incident() {
        let g = ClusteredGraph::flat(&[("A", vec![1, 2]), ("B", vec![3])], &[(1, 2)]);
        let rot = rot_of(&[(1, vec![(1, 0)]), (2, vec![(1, 1)]), (3, vec![])]);
        let m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(3)),
                    host: Host::In(Dart::new(EdgeId(1), 0)),
                },
            ],
        )
        .unwrap();
        let regions = m.regions();
        assert_eq!(regions.count(), 1);
        let (_, r) = regions.iter().next().unwrap();
        assert_eq!(r.incident.len(), 3);
        assert_eq!(r.floats, vec![VertexId(3)]);
    }

    #[test]
    fn add_edge_same_orbit_splits_the_face() {
        // path 1-2-3 inside one cluster; connect 1 and 3 through the face
        let g = ClusteredGraph::flat(&[("A", vec![1, 2, 3])], &[(1, 2), (2, 3)]);
        let rot = rot_of(&[
            (1, vec![(1, 0)]),
            (2, vec![(1, 1), (2, 0)]),
            (3, vec![(2, 1)]),
        ]);
        let mut m = PlaneMap::from_connected(g, rot, Dart::new(EdgeId(1), 0)).unwrap();
        assert_eq!(m.orbits().len(), 1);
        let e = m
            .add_edge_at(
                Attach::Corner(Dart::new(EdgeId(1), 0)),
                Attach::Corner(Dart::new(EdgeId(2), 1)),
            )
            .unwrap();
        assert_eq!(e, EdgeId(3));
        assert_eq!(m.orbits().len(), 2);
        assert_eq!(m.regions().count(), 2);
    }

    #[test]
    fn add_edge_across_components_fuses_orbits() {
        let g = ClusteredGraph::flat(&[("A", vec![1, 2]), ("B", vec![3, 4])], &[(1, 2), (3, 4)]);
        let rot = rot_of(&[
            (1, vec![(1, 0)]),
            (2, vec![(1, 1)]),
            (3, vec![(2, 0)]),
            (4, vec![(2, 1)]),
        ]);
        let mut m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Component(Dart::new(EdgeId(2), 0)),
                    host: Host::Unbounded,
                },
            ],
        )
        .unwrap();
        assert_eq!(m.regions().count(), 1);
        m.add_edge_at(
            Attach::Corner(Dart::new(EdgeId(1), 1)),
            Attach::Corner(Dart::new(EdgeId(2), 0)),
        )
        .unwrap();
        assert_eq!(m.placements().len(), 1);
        assert_eq!(m.orbits().len(), 1);
        assert_eq!(m.regions().count(), 1);
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn add_edge_between_floats_makes_a_component() {
        let g = ClusteredGraph::flat(&[("A", vec![1, 2])], &[]);
        let rot = rot_of(&[(1, vec![]), (2, vec![])]);
        let mut m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Float(VertexId(1)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(2)),
                    host: Host::Unbounded,
                },
            ],
        )
        .unwrap();
        let e = m
            .add_edge_at(Attach::Float(VertexId(1)), Attach::Float(VertexId(2)))
            .unwrap();
        assert_eq!(m.placements().len(), 1);
        assert!(matches!(m.placements()[0].item, Item::Component(_)));
        assert_eq!(m.graph().ends(e), Some((VertexId(1), VertexId(2))));
    }

    #[test]
    fn attachments_in_different_regions_are_rejected() {
        let mut m = triangle_map();
        // darts 1:a and 1:b border the two different faces of the triangle
        let regions = m.regions();
        assert_ne!(
            regions.of_dart(Dart::new(EdgeId(1), 0)),
            regions.of_dart(Dart::new(EdgeId(1), 1))
        );
        let err = m
            .add_edge_at(
                Attach::Corner(Dart::new(EdgeId(1), 0)),
                Attach::Corner(Dart::new(EdgeId(1), 1)),
            )
            .unwrap_err();
        assert_eq!(err, MapError::DifferentRegions);
    }

    #[test]
    fn contract_triangle_edge_leaves_two_parallel_edges() {
        let mut m = triangle_map();
        let kept = m.contract_edge(EdgeId(1)).unwrap();
        assert_eq!(kept, VertexId(1));
        assert_eq!(m.graph().vertex_count(), 2);
        assert_eq!(m.graph().edge_count(), 2);
        assert_eq!(m.orbits().len(), 2);
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn contract_lone_edge_turns_component_into_float() {
        let g = ClusteredGraph::flat(&[("A", vec![1, 2]), ("B", vec![3, 4])], &[(1, 2), (3, 4)]);
        let rot = rot_of(&[
            (1, vec![(1, 0)]),
            (2, vec![(1, 1)]),
            (3, vec![(2, 0)]),
            (4, vec![(2, 1)]),
        ]);
        let mut m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Component(Dart::new(EdgeId(2), 0)),
                    host: Host::In(Dart::new(EdgeId(1), 0)),
                },
            ],
        )
        .unwrap();
        m.contract_edge(EdgeId(2)).unwrap();
        assert_eq!(m.graph().vertex_count(), 3);
        let float = m
            .placements()
            .iter()
            .find_map(|p| match p.item {
                Item::Float(v) => Some(v),
                _ => None,
            })
            .expect("a float placement");
        assert_eq!(float, VertexId(3));
        assert_eq!(m.validate(), Ok(()));
    }

    fn loop_with_inside(inside_cluster: &str) -> PlaneMap {
        // vertex 1 carries loop edge 1; vertex 2 floats inside the loop;
        // the side of dart 1:b is the inside
        let g = ClusteredGraph::flat(
            &[("A", vec![1]), (inside_cluster, vec![2])],
            &[(1, 1)],
        );
        let rot = rot_of(&[(1, vec![(1, 0), (1, 1)]), (2, vec![])]);
        PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(2)),
                    host: Host::In(Dart::new(EdgeId(1), 1)),
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn deleting_a_loop_with_a_foreign_vertex_inside_is_refused() {
        let mut m = loop_with_inside("B");
        let out = m.delete_loop_and_enclosed(EdgeId(1)).unwrap();
        assert_eq!(out, LoopDeletion::ForeignInside(VertexId(2)));
        assert_eq!(m.graph().edge_count(), 1);
    }

    #[test]
    fn deleting_a_loop_swallows_same_cluster_content() {
        // same-cluster float inside gets removed with the loop; note the
        // cluster of vertex 2 must be A for that
        let g = ClusteredGraph::flat(&[("A", vec![1, 2])], &[(1, 1)]);
        let rot = rot_of(&[(1, vec![(1, 0), (1, 1)]), (2, vec![])]);
        let mut m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(2)),
                    host: Host::In(Dart::new(EdgeId(1), 1)),
                },
            ],
        )
        .unwrap();
        let out = m.delete_loop_and_enclosed(EdgeId(1)).unwrap();
        assert_eq!(
            out,
            LoopDeletion::Removed {
                vertices: vec![VertexId(2)],
                edges: vec![EdgeId(1)],
            }
        );
        assert_eq!(m.graph().vertex_count(), 1);
        assert_eq!(m.graph().edge_count(), 0);
        // vertex 1 became a float in the unbounded plane
        assert_eq!(m.placements().len(), 1);
        assert_eq!(m.placements()[0].item, Item::Float(VertexId(1)));
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn deleting_a_bare_loop_keeps_outside_content() {
        // loop at 1, float 2 outside the loop (in the unbounded region)
        let g = ClusteredGraph::flat(&[("A", vec![1]), ("B", vec![2])], &[(1, 1)]);
        let rot = rot_of(&[(1, vec![(1, 0), (1, 1)]), (2, vec![])]);
        let mut m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(2)),
                    host: Host::Unbounded,
                },
            ],
        )
        .unwrap();
        let out = m.delete_loop_and_enclosed(EdgeId(1)).unwrap();
        assert_eq!(
            out,
            LoopDeletion::Removed {
                vertices: vec![],
                edges: vec![EdgeId(1)],
            }
        );
        assert_eq!(m.graph().vertex_count(), 2);
        assert_eq!(m.placements().len(), 2);
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn deleting_a_loop_around_a_whole_component() {
        // loop at 1 (cluster A) enclosing an edge 2-3 of cluster A
        let g = ClusteredGraph::flat(&[("A", vec![1, 2, 3])], &[(1, 1), (2, 3)]);
        let rot = rot_of(&[
            (1, vec![(1, 0), (1, 1)]),
            (2, vec![(2, 0)]),
            (3, vec![(2, 1)]),
        ]);
        let mut m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Component(Dart::new(EdgeId(2), 0)),
                    host: Host::In(Dart::new(EdgeId(1), 1)),
                },
            ],
        )
        .unwrap();
        let out = m.delete_loop_and_enclosed(EdgeId(1)).unwrap();
        assert_eq!(
            out,
            LoopDeletion::Removed {
                vertices: vec![VertexId(2), VertexId(3)],
                edges: vec![EdgeId(1), EdgeId(2)],
            }
        );
        assert_eq!(m.graph().vertex_count(), 1);
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn add_float_then_connect() {
        let mut m = triangle_map();
        let cluster = m.graph().flat_cluster_of(VertexId(1)).unwrap();
        m.add_float_vertex(VertexId(9), cluster, Host::In(Dart::new(EdgeId(1), 1)))
            .unwrap();
        assert_eq!(m.regions().get(m.regions().of_float(VertexId(9))).floats, vec![VertexId(9)]);
        m.add_edge_at(
            Attach::Corner(Dart::new(EdgeId(1), 1)),
            Attach::Float(VertexId(9)),
        )
        .unwrap();
        assert_eq!(m.graph().vertex_count(), 4);
        assert_eq!(m.placements().len(), 1);
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn contract_reroutes_anchors_on_the_dying_edge() {
        // path 1-2 with the inner face hosting a float anchored at the edge
        let g = ClusteredGraph::flat(&[("A", vec![1, 2]), ("B", vec![3])], &[(1, 2)]);
        let rot = rot_of(&[(1, vec![(1, 0)]), (2, vec![(1, 1)]), (3, vec![])]);
        let mut m = PlaneMap::new(
            g,
            rot,
            vec![
                Placement {
                    item: Item::Component(Dart::new(EdgeId(1), 0)),
                    host: Host::Unbounded,
                },
                Placement {
                    item: Item::Float(VertexId(3)),
                    host: Host::In(Dart::new(EdgeId(1), 0)),
                },
            ],
        )
        .unwrap();
        m.contract_edge(EdgeId(1)).unwrap();
        assert_eq!(m.graph().vertex_count(), 2);
        // both remaining vertices are floats in the unbounded plane
        assert_eq!(m.placements().len(), 2);
        assert!(m
            .placements()
            .iter()
            .all(|p| matches!(p.item, Item::Float(_))));
        assert_eq!(m.validate(), Ok(()));
    }
}
