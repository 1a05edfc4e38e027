//! The divide data model: plain, cusped, and gleamed divides, with the
//! canonical-gleam formulas.
//!
//! A divide is an immersed collection of intervals and circles in the disk
//! (or circles in the sphere), encoded as a plane map whose vertices are
//! double points, interval endpoints on the boundary circle, degree-2
//! markers, and boundary-circle corners. Cusps are combinatorial decorations
//! on edges; gleams are half-integer weights on internal regions.

use crate::halfint::Half;
use crate::planemap::{Dart, EdgeId, FaceId, PlaneMap, Surface, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    /// Transversal self-intersection of the curve, degree 4.
    DoublePoint,
    /// Interval endpoint on the boundary circle, degree 3.
    Endpoint,
    /// Subdivision point on the curve, degree 2, ignored by all counts.
    Marker,
    /// Subdivision point on the boundary circle, degree 2.
    BoundaryCorner,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Interval,
    Circle,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Component {
    pub kind: ComponentKind,
    /// Divide edges of the component, ascending.
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Error)]
pub enum DivideError {
    #[error(transparent)]
    Map(#[from] crate::planemap::MapError),
    #[error("vertex {0:?} has degree {1}, which does not match kind {2:?}")]
    DegreeMismatch(VertexId, usize, VertexKind),
    #[error("vertex {0:?} of kind {1:?} lies on the wrong side of the boundary")]
    BoundaryMismatch(VertexId, VertexKind),
    #[error("vertex kind list has length {0}, map has {1} vertices")]
    KindCount(usize, usize),
    #[error("interval component through edge {0:?} has {1} endpoints")]
    BadInterval(EdgeId, usize),
    #[error("endpoints are only allowed on the disk")]
    EndpointOnSphere,
    #[error("divide has no curve components")]
    NoComponents,
    #[error("operation requires a {0:?} divide")]
    UnsupportedSurface(Surface),
    #[error("cusp on edge {0:?}: {1}")]
    BadCusp(EdgeId, String),
    #[error("gleam on region {0:?} violates parity admissibility: doubled gleam {1} vs corner count {2}")]
    Parity(FaceId, i64, usize),
    #[error("gleam assigned to {0:?}, which is not an internal region")]
    NotInternal(FaceId),
    #[error("sphere gleam total {0} is odd; closed-surface gleam sums must be even")]
    OddSphereTotal(Half),
    #[error("{0}")]
    Invalid(String),
}

/// An immersed-curve divide on the disk or the sphere.
#[derive(Clone, Debug)]
pub struct Divide {
    map: PlaneMap,
    kinds: Vec<VertexKind>,
    components: Vec<Component>,
}

impl Divide {
    pub fn new(map: PlaneMap, kinds: Vec<VertexKind>) -> Result<Divide, DivideError> {
        if kinds.len() != map.vertex_count() {
            return Err(DivideError::KindCount(kinds.len(), map.vertex_count()));
        }
        for v in 0..map.vertex_count() {
            let v = VertexId(v);
            let deg = map.degree(v);
            let want = match kinds[v.0] {
                VertexKind::DoublePoint => 4,
                VertexKind::Endpoint => 3,
                VertexKind::Marker => 2,
                VertexKind::BoundaryCorner => 2,
            };
            if deg != want {
                return Err(DivideError::DegreeMismatch(v, deg, kinds[v.0]));
            }
            let on_boundary = map.is_boundary_vertex(v);
            let needs_boundary = matches!(
                kinds[v.0],
                VertexKind::Endpoint | VertexKind::BoundaryCorner
            );
            if on_boundary != needs_boundary {
                return Err(DivideError::BoundaryMismatch(v, kinds[v.0]));
            }
            if kinds[v.0] == VertexKind::Endpoint && map.surface() == Surface::Sphere {
                return Err(DivideError::EndpointOnSphere);
            }
        }
        let components = trace_components(&map, &kinds)?;
        if components.is_empty() {
            return Err(DivideError::NoComponents);
        }
        Ok(Divide {
            map,
            kinds,
            components,
        })
    }

    pub fn map(&self) -> &PlaneMap {
        &self.map
    }

    pub fn kind(&self, v: VertexId) -> VertexKind {
        self.kinds[v.0]
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn double_points(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.map.vertex_count())
            .map(VertexId)
            .filter(|&v| self.kinds[v.0] == VertexKind::DoublePoint)
    }

    /// Divide edges: edges of the curve itself (not the boundary circle).
    pub fn divide_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.map
            .edge_ids()
            .filter(|&e| !self.map.is_boundary_edge(e))
    }

    pub fn is_divide_edge(&self, e: EdgeId) -> bool {
        !self.map.is_boundary_edge(e)
    }

    /// A region is internal when it is not the outer side of the boundary
    /// circle and touches no boundary edge. On the sphere every region is
    /// internal.
    pub fn is_internal(&self, f: FaceId) -> bool {
        match self.map.surface() {
            Surface::Sphere => true,
            Surface::Disk => {
                if Some(f) == self.map.outer_region() {
                    return false;
                }
                !self
                    .map
                    .region_corners(f)
                    .iter()
                    .any(|&(v, _)| self.map.is_boundary_vertex(v))
            }
        }
    }

    pub fn internal_regions(&self) -> Vec<FaceId> {
        self.map
            .region_ids()
            .filter(|&f| self.is_internal(f))
            .collect()
    }

    pub fn external_regions(&self) -> Vec<FaceId> {
        self.map
            .region_ids()
            .filter(|&f| Some(f) != self.map.outer_region() && !self.is_internal(f))
            .collect()
    }

    /// Number of times the boundary of the closure of the region passes
    /// through double points, counted with multiplicity.
    pub fn corner_count(&self, f: FaceId) -> usize {
        self.map
            .region_corners(f)
            .iter()
            .filter(|&&(v, _)| self.kinds[v.0] == VertexKind::DoublePoint)
            .count()
    }

    /// The strand continuing an arrival through dart `d` at the vertex of
    /// `d`'s head... more precisely: given a dart `d` (pointing away from
    /// vertex v), the dart of the same strand pass on the other side of v.
    pub fn pass_partner(&self, d: Dart) -> Option<Dart> {
        let v = self.map.vertex_of(d);
        match self.kinds[v.0] {
            VertexKind::DoublePoint => Some(self.map.sigma(self.map.sigma(d))),
            VertexKind::Marker => Some(self.map.sigma(d)),
            _ => None,
        }
    }

    pub fn component_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.edges.binary_search(&e).is_ok())
    }
}

fn trace_components(
    map: &PlaneMap,
    kinds: &[VertexKind],
) -> Result<Vec<Component>, DivideError> {
    let divide_dart = |d: Dart| !map.is_boundary_edge(map.edge_id(d));
    let mut seen: BTreeMap<Dart, ()> = BTreeMap::new();
    let mut components = Vec::new();
    for d0 in 0..map.dart_count() {
        if !divide_dart(d0) || seen.contains_key(&d0) {
            continue;
        }
        // Walk forward along the strand starting with dart d0.
        let mut edges = Vec::new();
        let mut endpoints = 0;
        let mut kind = ComponentKind::Circle;
        let mut walk = |start: Dart, seen: &mut BTreeMap<Dart, ()>| -> usize {
            // returns number of endpoint hits; walks until closing or endpoint
            let mut cur = start;
            loop {
                seen.insert(cur, ());
                let opp = map.alpha(cur);
                seen.insert(opp, ());
                edges.push(map.edge_id(cur));
                let v = map.vertex_of(opp);
                let next = match kinds[v.0] {
                    VertexKind::DoublePoint => map.sigma(map.sigma(opp)),
                    VertexKind::Marker => map.sigma(opp),
                    VertexKind::Endpoint => return 1,
                    VertexKind::BoundaryCorner => {
                        unreachable!("divide strand entering boundary corner")
                    }
                };
                if next == start {
                    return 0;
                }
                cur = next;
            }
        };
        endpoints += walk(d0, &mut seen);
        if endpoints > 0 {
            // Interval: walk the other way from d0's tail.
            kind = ComponentKind::Interval;
            let v = map.vertex_of(d0);
            let back = match kinds[v.0] {
                VertexKind::DoublePoint => Some(map.sigma(map.sigma(d0))),
                VertexKind::Marker => Some(map.sigma(d0)),
                VertexKind::Endpoint => None,
                VertexKind::BoundaryCorner => None,
            };
            if let Some(b) = back {
                if !seen.contains_key(&b) {
                    endpoints += walk(b, &mut seen);
                } else {
                    endpoints += 1; // lollipop-free: strand closes at an endpoint on both sides
                }
            } else {
                endpoints += 1;
            }
            if endpoints != 2 {
                return Err(DivideError::BadInterval(map.edge_id(d0), endpoints));
            }
        }
        edges.sort();
        edges.dedup();
        components.push(Component { kind, edges });
    }
    Ok(components)
}

/// Side of an edge with respect to its stored dart (the smaller dart),
/// walking from that dart's vertex toward the other end. With the
/// counterclockwise rotation convention the region of the stored dart lies
/// on the right of the walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Divide {
    pub fn right_region(&self, e: EdgeId) -> FaceId {
        self.map.region_of_dart(e.0)
    }

    pub fn left_region(&self, e: EdgeId) -> FaceId {
        self.map.region_of_dart(self.map.alpha(e.0))
    }

    pub fn side_region(&self, e: EdgeId, side: Side) -> FaceId {
        match side {
            Side::Left => self.left_region(e),
            Side::Right => self.right_region(e),
        }
    }
}

/// A cusp decoration: the cusp sits on `edge` at position `ordinal` along
/// it and points into the region on `side` of the edge. The cusp is an
/// inner cusp for that region and an outer cusp for the opposite one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cusp {
    pub edge: EdgeId,
    pub ordinal: u32,
    pub side: Side,
}

#[derive(Clone, Debug)]
pub struct CuspedDivide {
    pub base: Divide,
    pub cusps: Vec<Cusp>,
}

impl CuspedDivide {
    pub fn new(base: Divide, cusps: Vec<Cusp>) -> Result<CuspedDivide, DivideError> {
        if base.map().surface() != Surface::Disk {
            return Err(DivideError::UnsupportedSurface(base.map().surface()));
        }
        for c in &cusps {
            if c.edge.0 >= base.map().dart_count()
                || base.map().edge_id(c.edge.0) != c.edge
            {
                return Err(DivideError::BadCusp(c.edge, "no such edge".into()));
            }
            if !base.is_divide_edge(c.edge) {
                return Err(DivideError::BadCusp(
                    c.edge,
                    "cusps must sit on divide edges".into(),
                ));
            }
        }
        Ok(CuspedDivide { base, cusps })
    }

    pub fn cusp_free(base: Divide) -> Result<CuspedDivide, DivideError> {
        CuspedDivide::new(base, Vec::new())
    }

    /// Inner-cusp count for the region.
    pub fn inner_cusps(&self, f: FaceId) -> usize {
        self.cusps
            .iter()
            .filter(|c| self.base.side_region(c.edge, c.side) == f)
            .count()
    }

    /// Outer-cusp count for the region.
    pub fn outer_cusps(&self, f: FaceId) -> usize {
        self.cusps
            .iter()
            .filter(|c| {
                let opposite = match c.side {
                    Side::Left => Side::Right,
                    Side::Right => Side::Left,
                };
                self.base.side_region(c.edge, opposite) == f
            })
            .count()
    }

    pub fn cusps_on_component(&self, comp: usize) -> usize {
        self.cusps
            .iter()
            .filter(|c| self.base.component_of_edge(c.edge) == Some(comp))
            .count()
    }
}

/// A divide with a half-integer gleam on every internal region.
#[derive(Clone, Debug)]
pub struct GleamedDivide {
    pub base: Divide,
    gleams: BTreeMap<FaceId, Half>,
}

impl GleamedDivide {
    /// Validates parity admissibility (doubled gleam congruent to the
    /// double-point corner count mod 2) and, on the sphere, evenness of the
    /// total.
    pub fn new(
        base: Divide,
        gleams: BTreeMap<FaceId, Half>,
    ) -> Result<GleamedDivide, DivideError> {
        let internal = base.internal_regions();
        for f in &internal {
            if !gleams.contains_key(f) {
                return Err(DivideError::Invalid(format!(
                    "missing gleam for internal region {:?}",
                    f
                )));
            }
        }
        for (&f, &g) in &gleams {
            if !internal.contains(&f) {
                return Err(DivideError::NotInternal(f));
            }
            let n = base.corner_count(f);
            if (g.doubled() - n as i64).rem_euclid(2) != 0 {
                return Err(DivideError::Parity(f, g.doubled(), n));
            }
        }
        if base.map().surface() == Surface::Sphere {
            let total: Half = gleams.values().copied().sum();
            if !total.is_integer() {
                return Err(DivideError::OddSphereTotal(total));
            }
        }
        Ok(GleamedDivide { base, gleams })
    }

    pub fn gleam(&self, f: FaceId) -> Half {
        self.gleams[&f]
    }

    pub fn gleams(&self) -> &BTreeMap<FaceId, Half> {
        &self.gleams
    }

    pub fn total(&self) -> Half {
        self.gleams.values().copied().sum()
    }
}

/// Canonical gleam of a disk divide: gl(R) = (4 - n)/2 per internal region.
pub fn canonical_gleam(p: &Divide) -> Result<GleamedDivide, DivideError> {
    if p.map().surface() != Surface::Disk {
        return Err(DivideError::UnsupportedSurface(p.map().surface()));
    }
    let mut gleams = BTreeMap::new();
    for f in p.internal_regions() {
        let n = p.corner_count(f) as i64;
        gleams.insert(f, Half::new(4 - n));
    }
    GleamedDivide::new(p.clone(), gleams)
}

/// Gleam of a cusped divide: gl(R) = (4 - n)/2 + m1 - m2, with m1 inner and
/// m2 outer cusps for R. The base of the result is the divide with cusps
/// removed.
pub fn cusped_to_gleamed(p: &CuspedDivide) -> Result<GleamedDivide, DivideError> {
    let mut gleams = BTreeMap::new();
    for f in p.base.internal_regions() {
        let n = p.base.corner_count(f) as i64;
        let m1 = p.inner_cusps(f) as i64;
        let m2 = p.outer_cusps(f) as i64;
        gleams.insert(f, Half::new(4 - n) + Half::whole(m1) - Half::whole(m2));
    }
    GleamedDivide::new(p.base.clone(), gleams)
}

/// Removes all cusp decorations.
pub fn strip_cusps(p: &CuspedDivide) -> Divide {
    p.base.clone()
}

/// Component census used by the symmetry classification of the represented
/// link.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetricClassReport {
    pub interval_components: usize,
    pub circle_components: usize,
    /// Cusp count per circle component, in component order.
    pub circle_cusp_counts: Vec<usize>,
    /// All circle components carry an even number of cusps.
    pub strongly_invertible_compatible: bool,
    /// No interval components.
    pub two_periodic_compatible: bool,
}

pub fn validate_symmetric_class(p: &CuspedDivide) -> SymmetricClassReport {
    let mut interval = 0;
    let mut circle_cusps = Vec::new();
    for (i, c) in p.base.components().iter().enumerate() {
        match c.kind {
            ComponentKind::Interval => interval += 1,
            ComponentKind::Circle => circle_cusps.push(p.cusps_on_component(i)),
        }
    }
    SymmetricClassReport {
        interval_components: interval,
        circle_components: circle_cusps.len(),
        strongly_invertible_compatible: circle_cusps.iter().all(|&n| n % 2 == 0),
        two_periodic_compatible: interval == 0,
        circle_cusp_counts: circle_cusps,
    }
}
