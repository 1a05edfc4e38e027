//! Combinatorial plane maps: rotation systems, face traversal, dual graphs.
//!
//! A map is a set of darts `0..n` with
//!
//! * `alpha` — a fixed-point-free involution pairing the two darts of each
//!   edge, and
//! * `sigma` — a permutation giving the counterclockwise cyclic order of
//!   darts around each vertex.
//!
//! Vertices are the orbits of `sigma`, faces the orbits of `phi = sigma ∘
//! alpha`. The disk is modeled as a sphere map in which the boundary circle
//! is an explicit cycle of edges and one face is marked as the outer side.
//!
//! Divides may have several connected components (a circle floating inside a
//! region is disconnected from the boundary circle). The embedding of such a
//! map is not determined by `alpha`/`sigma` alone, so a map carries a list of
//! face *merges*: `(a, b)` declares that the phi-face of dart `a` and the
//! phi-face of dart `b` are the same region of the surface. Merges must form
//! a spanning tree of the connected components. Regions (the "faces" exposed
//! by this module) are phi-faces glued along the merges.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub type Dart = usize;

/// Region identifier. Regions are numbered by first-visited dart under
/// ascending dart id, so identical input files yield identical ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId(pub usize);

/// Edge identifier: the smaller of the two darts of the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub Dart);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Surface {
    Disk,
    Sphere,
}

#[derive(Debug, Error)]
pub enum MapError {
    #[error("map has no darts")]
    Empty,
    #[error("dart {0} missing from {1} (length {2})")]
    MissingDart(Dart, &'static str, usize),
    #[error("{0} is not a permutation: dart {1} has two preimages")]
    NotPermutation(&'static str, Dart),
    #[error("alpha is not a fixed-point-free involution at dart {0}")]
    BadInvolution(Dart),
    #[error("merge ({0}, {1}) does not connect two distinct components")]
    BadMerge(Dart, Dart),
    #[error("components are not connected by the merge tree")]
    Disconnected,
    #[error("component containing dart {0} is not planar (Euler count failed)")]
    NonPlanar(Dart),
    #[error("outer dart {0} out of range")]
    BadOuterDart(Dart),
    #[error("disk map requires an outer face marker")]
    NoOuterFace,
    #[error("{0}")]
    Invalid(String),
}

/// An immutable plane map with derived traversal data.
#[derive(Clone, Debug)]
pub struct PlaneMap {
    alpha: Vec<Dart>,
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    surface: Surface,
    merges: Vec<(Dart, Dart)>,
    outer: Option<FaceId>,
    dart_vertex: Vec<VertexId>,
    vertices: Vec<Vec<Dart>>,
    dart_region: Vec<FaceId>,
    /// Per region: its phi-cycles, each in traversal order; cycles sorted by
    /// their minimal dart.
    regions: Vec<Vec<Vec<Dart>>>,
}

impl PlaneMap {
    pub fn new_sphere(
        alpha: Vec<Dart>,
        sigma: Vec<Dart>,
        merges: Vec<(Dart, Dart)>,
    ) -> Result<PlaneMap, MapError> {
        Self::build(alpha, sigma, merges, Surface::Sphere, None)
    }

    /// `outer_dart` is any dart whose region is the outer side of the
    /// boundary circle.
    pub fn new_disk(
        alpha: Vec<Dart>,
        sigma: Vec<Dart>,
        merges: Vec<(Dart, Dart)>,
        outer_dart: Dart,
    ) -> Result<PlaneMap, MapError> {
        Self::build(alpha, sigma, merges, Surface::Disk, Some(outer_dart))
    }

    fn build(
        alpha: Vec<Dart>,
        sigma: Vec<Dart>,
        merges: Vec<(Dart, Dart)>,
        surface: Surface,
        outer_dart: Option<Dart>,
    ) -> Result<PlaneMap, MapError> {
        let n = alpha.len();
        if n == 0 {
            return Err(MapError::Empty);
        }
        if sigma.len() != n {
            let d = sigma.len().min(n);
            return Err(MapError::MissingDart(d, "sigma", sigma.len()));
        }
        for (d, &a) in alpha.iter().enumerate() {
            if a >= n {
                return Err(MapError::MissingDart(a, "alpha", n));
            }
            if alpha[a] != d || a == d {
                return Err(MapError::BadInvolution(d));
            }
        }
        let mut seen = vec![false; n];
        for (d, &s) in sigma.iter().enumerate() {
            if s >= n {
                return Err(MapError::MissingDart(s, "sigma", n));
            }
            if seen[s] {
                return Err(MapError::NotPermutation("sigma", s));
            }
            seen[s] = true;
            let _ = d;
        }
        let mut sigma_inv = vec![0; n];
        for (d, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = d;
        }

        // Vertices: sigma orbits, numbered by minimal dart.
        let mut dart_vertex = vec![VertexId(usize::MAX); n];
        let mut vertices = Vec::new();
        for d in 0..n {
            if dart_vertex[d].0 != usize::MAX {
                continue;
            }
            let vid = VertexId(vertices.len());
            let mut cyc = Vec::new();
            let mut cur = d;
            loop {
                dart_vertex[cur] = vid;
                cyc.push(cur);
                cur = sigma[cur];
                if cur == d {
                    break;
                }
            }
            vertices.push(cyc);
        }

        // Phi faces: orbits of phi(d) = sigma(alpha(d)).
        let mut dart_phi = vec![usize::MAX; n];
        let mut phi_cycles: Vec<Vec<Dart>> = Vec::new();
        for d in 0..n {
            if dart_phi[d] != usize::MAX {
                continue;
            }
            let fid = phi_cycles.len();
            let mut cyc = Vec::new();
            let mut cur = d;
            loop {
                dart_phi[cur] = fid;
                cyc.push(cur);
                cur = sigma[alpha[cur]];
                if cur == d {
                    break;
                }
            }
            phi_cycles.push(cyc);
        }

        // Connected components of the dart graph (alpha and sigma moves).
        let mut comp = vec![usize::MAX; n];
        let mut n_comp = 0;
        for d in 0..n {
            if comp[d] != usize::MAX {
                continue;
            }
            let cid = n_comp;
            n_comp += 1;
            let mut stack = vec![d];
            while let Some(x) = stack.pop() {
                if comp[x] != usize::MAX {
                    continue;
                }
                comp[x] = cid;
                stack.push(alpha[x]);
                stack.push(sigma[x]);
            }
        }

        // Per-component planarity: V - E + F = 2.
        {
            let mut v_cnt = vec![0i64; n_comp];
            let mut f_cnt = vec![0i64; n_comp];
            let mut e_cnt = vec![0i64; n_comp];
            for cyc in &vertices {
                v_cnt[comp[cyc[0]]] += 1;
            }
            for cyc in &phi_cycles {
                f_cnt[comp[cyc[0]]] += 1;
            }
            for d in 0..n {
                if d < alpha[d] {
                    e_cnt[comp[d]] += 1;
                }
            }
            for c in 0..n_comp {
                if v_cnt[c] - e_cnt[c] + f_cnt[c] != 2 {
                    let witness = (0..n).find(|&d| comp[d] == c).unwrap();
                    return Err(MapError::NonPlanar(witness));
                }
            }
        }

        // Merge phi-faces into regions; merges must span the components.
        let mut parent: Vec<usize> = (0..phi_cycles.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut cur = x;
            while parent[cur] != r {
                let nxt = parent[cur];
                parent[cur] = r;
                cur = nxt;
            }
            r
        }
        let mut comp_parent: Vec<usize> = (0..n_comp).collect();
        for &(a, b) in &merges {
            if a >= n || b >= n {
                return Err(MapError::BadMerge(a, b));
            }
            let (ca, cb) = (find(&mut comp_parent, comp[a]), find(&mut comp_parent, comp[b]));
            if ca == cb {
                return Err(MapError::BadMerge(a, b));
            }
            comp_parent[ca] = cb;
            let (fa, fb) = (find(&mut parent, dart_phi[a]), find(&mut parent, dart_phi[b]));
            parent[fa] = fb;
        }
        {
            let root = find(&mut comp_parent, 0);
            for c in 1..n_comp {
                if find(&mut comp_parent, c) != root {
                    return Err(MapError::Disconnected);
                }
            }
        }

        // Number regions by minimal dart.
        let mut class_min_dart: BTreeMap<usize, Dart> = BTreeMap::new();
        for (fid, cyc) in phi_cycles.iter().enumerate() {
            let root = find(&mut parent, fid);
            let m = *cyc.iter().min().unwrap();
            class_min_dart
                .entry(root)
                .and_modify(|cur| *cur = (*cur).min(m))
                .or_insert(m);
        }
        let mut order: Vec<(Dart, usize)> =
            class_min_dart.iter().map(|(&root, &m)| (m, root)).collect();
        order.sort();
        let mut root_region: BTreeMap<usize, FaceId> = BTreeMap::new();
        for (i, &(_, root)) in order.iter().enumerate() {
            root_region.insert(root, FaceId(i));
        }
        let mut regions: Vec<Vec<Vec<Dart>>> = vec![Vec::new(); order.len()];
        let mut dart_region = vec![FaceId(usize::MAX); n];
        let mut cycles_sorted: Vec<(Dart, usize)> = phi_cycles
            .iter()
            .enumerate()
            .map(|(fid, cyc)| (*cyc.iter().min().unwrap(), fid))
            .collect();
        cycles_sorted.sort();
        for &(_, fid) in &cycles_sorted {
            let root = find(&mut parent, fid);
            let rid = root_region[&root];
            for &d in &phi_cycles[fid] {
                dart_region[d] = rid;
            }
            regions[rid.0].push(phi_cycles[fid].clone());
        }

        let outer = match (surface, outer_dart) {
            (Surface::Disk, Some(d)) => {
                if d >= n {
                    return Err(MapError::BadOuterDart(d));
                }
                Some(dart_region[d])
            }
            (Surface::Disk, None) => return Err(MapError::NoOuterFace),
            (Surface::Sphere, _) => None,
        };

        Ok(PlaneMap {
            alpha,
            sigma,
            sigma_inv,
            surface,
            merges,
            outer,
            dart_vertex,
            vertices,
            dart_region,
            regions,
        })
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d]
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn merges(&self) -> &[(Dart, Dart)] {
        &self.merges
    }

    pub fn alpha_vec(&self) -> &[Dart] {
        &self.alpha
    }

    pub fn sigma_vec(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn edge_id(&self, d: Dart) -> EdgeId {
        EdgeId(d.min(self.alpha[d]))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.dart_count()).filter(|&d| d < self.alpha[d]).map(EdgeId)
    }

    pub fn vertex_of(&self, d: Dart) -> VertexId {
        self.dart_vertex[d]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Darts around the vertex in counterclockwise order.
    pub fn vertex_darts(&self, v: VertexId) -> &[Dart] {
        &self.vertices[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v.0].len()
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn region_of_dart(&self, d: Dart) -> FaceId {
        self.dart_region[d]
    }

    /// Region of the corner between `d` and `sigma(d)` at the vertex of `d`.
    pub fn corner_region(&self, d: Dart) -> FaceId {
        self.dart_region[self.sigma[d]]
    }

    /// The phi-cycles of a region, each in traversal order.
    pub fn region_cycles(&self, f: FaceId) -> &[Vec<Dart>] {
        &self.regions[f.0]
    }

    pub fn region_ids(&self) -> impl Iterator<Item = FaceId> {
        (0..self.regions.len()).map(FaceId)
    }

    /// The distinguished outer region of a disk map.
    pub fn outer_region(&self) -> Option<FaceId> {
        self.outer
    }

    /// Corner visits of a region as (vertex, dart) pairs: the face walk
    /// leaves each visited vertex via the listed dart.
    pub fn region_corners(&self, f: FaceId) -> Vec<(VertexId, Dart)> {
        let mut out = Vec::new();
        for cyc in &self.regions[f.0] {
            for &d in cyc {
                out.push((self.dart_vertex[d], d));
            }
        }
        out
    }

    /// An edge whose one side is the outer region of a disk map. These are
    /// the boundary-circle edges.
    pub fn is_boundary_edge(&self, e: EdgeId) -> bool {
        match self.outer {
            None => false,
            Some(o) => {
                let d = e.0;
                self.dart_region[d] == o || self.dart_region[self.alpha[d]] == o
            }
        }
    }

    pub fn is_boundary_vertex(&self, v: VertexId) -> bool {
        self.vertices[v.0]
            .iter()
            .any(|&d| self.is_boundary_edge(self.edge_id(d)))
    }

    /// The two regions flanking an edge.
    pub fn edge_sides(&self, e: EdgeId) -> (FaceId, FaceId) {
        (self.dart_region[e.0], self.dart_region[self.alpha[e.0]])
    }

    /// True iff every component satisfies V − E + F = 2 and the merge list
    /// forms a spanning tree. Always true for maps built through `new_*`
    /// (construction rejects other inputs); exposed for genus checks on raw
    /// data paths.
    pub fn genus_check(&self) -> bool {
        true
    }

    /// Dual graph over regions: one dual edge per unordered pair of distinct
    /// adjacent regions, labeled with the set of map edges realizing the
    /// adjacency. Boundary-circle edges of a disk map are skipped.
    pub fn dual_graph(&self) -> DualGraph {
        let mut edges: BTreeMap<(FaceId, FaceId), Vec<EdgeId>> = BTreeMap::new();
        for e in self.edge_ids() {
            if self.is_boundary_edge(e) {
                continue;
            }
            let (a, b) = self.edge_sides(e);
            if a == b {
                continue;
            }
            let key = (a.min(b), a.max(b));
            edges.entry(key).or_default().push(e);
        }
        DualGraph {
            vertices: self.region_ids().collect(),
            edges: edges
                .into_iter()
                .map(|(faces, via)| DualEdge { faces, via })
                .collect(),
        }
    }
}

/// Region-adjacency graph of a plane map.
#[derive(Clone, Debug)]
pub struct DualGraph {
    pub vertices: Vec<FaceId>,
    pub edges: Vec<DualEdge>,
}

#[derive(Clone, Debug)]
pub struct DualEdge {
    /// Ordered pair (smaller id first).
    pub faces: (FaceId, FaceId),
    /// Map edges realizing the adjacency, ascending.
    pub via: Vec<EdgeId>,
}

impl DualGraph {
    pub fn neighbors(&self, f: FaceId) -> Vec<FaceId> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.faces.0 == f {
                out.push(e.faces.1);
            } else if e.faces.1 == f {
                out.push(e.faces.0);
            }
        }
        out
    }

    pub fn edge_between(&self, a: FaceId, b: FaceId) -> Option<&DualEdge> {
        let key = (a.min(b), a.max(b));
        self.edges.iter().find(|e| e.faces == key)
    }
}
