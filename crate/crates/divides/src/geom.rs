//! Building divides from drawn curves.
//!
//! A sketch is a set of polyline curves in the plane: closed polygons, or
//! open polylines whose ends lie on the unit circle (disk sketches only).
//! The builder computes all pairwise and self intersections, derives the
//! rotation system from the tangent directions, connects floating
//! components to their enclosing region by upward ray casting, and returns
//! the resulting `Divide`.
//!
//! Sketches must be generic: transversal double points only, no triple
//! points, no tangencies. Non-generic input is rejected, which lets random
//! generators simply retry.

use crate::divide::{Divide, DivideError, VertexKind};
use crate::planemap::{Dart, PlaneMap, Surface};
use thiserror::Error;

const EPS: f64 = 1e-9;
/// Events closer than this along a curve are considered coincident
/// (rejected as non-generic).
const SEP: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct SketchCurve {
    pub points: Vec<(f64, f64)>,
    pub closed: bool,
}

impl SketchCurve {
    pub fn closed(points: Vec<(f64, f64)>) -> SketchCurve {
        SketchCurve {
            points,
            closed: true,
        }
    }

    pub fn open(points: Vec<(f64, f64)>) -> SketchCurve {
        SketchCurve {
            points,
            closed: false,
        }
    }

    fn seg_count(&self) -> usize {
        if self.closed {
            self.points.len()
        } else {
            self.points.len() - 1
        }
    }

    fn seg(&self, i: usize) -> ((f64, f64), (f64, f64)) {
        let n = self.points.len();
        (self.points[i % n], self.points[(i + 1) % n])
    }
}

#[derive(Clone, Debug)]
pub struct Sketch {
    pub surface: Surface,
    pub curves: Vec<SketchCurve>,
}

#[derive(Debug, Error)]
pub enum SketchError {
    #[error("sketch is not generic: {0}")]
    NonGeneric(String),
    #[error("open curve endpoint ({0}, {1}) is not on the unit circle")]
    EndpointOffCircle(f64, f64),
    #[error("open curves are only allowed on the disk")]
    OpenOnSphere,
    #[error("curve point ({0}, {1}) lies outside the disk")]
    OutsideDisk(f64, f64),
    #[error(transparent)]
    Divide(#[from] DivideError),
    #[error(transparent)]
    Map(#[from] crate::planemap::MapError),
}

type P2 = (f64, f64);

fn sub(a: P2, b: P2) -> P2 {
    (a.0 - b.0, a.1 - b.1)
}

fn cross(a: P2, b: P2) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

fn lerp(a: P2, b: P2, t: f64) -> P2 {
    (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t)
}

fn angle(v: P2) -> f64 {
    v.1.atan2(v.0)
}

/// Proper interior intersection of two segments, if any.
fn seg_intersect(p1: P2, p2: P2, q1: P2, q2: P2) -> Option<(f64, f64)> {
    let r = sub(p2, p1);
    let s = sub(q2, q1);
    let denom = cross(r, s);
    if denom.abs() < EPS {
        return None;
    }
    let qp = sub(q1, p1);
    let t = cross(qp, s) / denom;
    let u = cross(qp, r) / denom;
    if t > -EPS && t < 1.0 + EPS && u > -EPS && u < 1.0 + EPS {
        Some((t, u))
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum EventKind {
    Crossing(usize),
    CurveEnd,
    Marker,
}

#[derive(Clone, Debug)]
struct Event {
    /// Position along the curve: segment index plus parameter.
    at: f64,
    kind: EventKind,
    point: P2,
}

/// Intermediate arc record: a maximal curve piece between two events.
struct ArcRec {
    /// (vertex index, outgoing tangent) at each end.
    from: (usize, P2),
    to: (usize, P2),
    /// Sampled geometry, from -> to.
    poly: Vec<P2>,
    is_boundary: bool,
}

pub fn build_divide(sketch: &Sketch) -> Result<Divide, SketchError> {
    let surface = sketch.surface;
    for c in &sketch.curves {
        if !c.closed {
            if surface == Surface::Sphere {
                return Err(SketchError::OpenOnSphere);
            }
            for &p in [c.points.first().unwrap(), c.points.last().unwrap()].iter() {
                let r = (p.0 * p.0 + p.1 * p.1).sqrt();
                if (r - 1.0).abs() > 1e-6 {
                    return Err(SketchError::EndpointOffCircle(p.0, p.1));
                }
            }
            for &p in &c.points[1..c.points.len() - 1] {
                if p.0 * p.0 + p.1 * p.1 >= (1.0 - 1e-4) * (1.0 - 1e-4) {
                    return Err(SketchError::OutsideDisk(p.0, p.1));
                }
            }
        } else if surface == Surface::Disk {
            for &p in &c.points {
                if p.0 * p.0 + p.1 * p.1 >= (1.0 - 1e-4) * (1.0 - 1e-4) {
                    return Err(SketchError::OutsideDisk(p.0, p.1));
                }
            }
        }
        let min_pts = if c.closed { 3 } else { 2 };
        if c.points.len() < min_pts {
            return Err(SketchError::NonGeneric("curve with too few points".into()));
        }
    }

    // 1. All crossings.
    struct Crossing {
        point: P2,
        /// (curve, position) of the two passes.
        passes: [(usize, f64); 2],
    }
    let mut crossings: Vec<Crossing> = Vec::new();
    for ci in 0..sketch.curves.len() {
        for cj in ci..sketch.curves.len() {
            let a = &sketch.curves[ci];
            let b = &sketch.curves[cj];
            for si in 0..a.seg_count() {
                let sj_start = if ci == cj { si + 1 } else { 0 };
                for sj in sj_start..b.seg_count() {
                    if ci == cj {
                        // skip adjacent segments (shared corner)
                        let n = a.seg_count();
                        if sj == si + 1 || (a.closed && si == 0 && sj == n - 1) {
                            continue;
                        }
                    }
                    let (p1, p2) = a.seg(si);
                    let (q1, q2) = b.seg(sj);
                    if let Some((t, u)) = seg_intersect(p1, p2, q1, q2) {
                        if t < SEP || t > 1.0 - SEP || u < SEP || u > 1.0 - SEP {
                            return Err(SketchError::NonGeneric(format!(
                                "intersection too close to a corner (curves {ci},{cj})"
                            )));
                        }
                        crossings.push(Crossing {
                            point: lerp(p1, p2, t),
                            passes: [(ci, si as f64 + t), (cj, sj as f64 + u)],
                        });
                    }
                }
            }
        }
    }
    // No two crossings may coincide (triple point).
    for i in 0..crossings.len() {
        for j in (i + 1)..crossings.len() {
            let d = sub(crossings[i].point, crossings[j].point);
            if d.0.abs() < SEP && d.1.abs() < SEP {
                return Err(SketchError::NonGeneric("triple point".into()));
            }
        }
    }

    // 2. Events along each curve.
    let mut events: Vec<Vec<Event>> = vec![Vec::new(); sketch.curves.len()];
    for (xi, x) in crossings.iter().enumerate() {
        for &(c, at) in &x.passes {
            events[c].push(Event {
                at,
                kind: EventKind::Crossing(xi),
                point: x.point,
            });
        }
    }
    for (ci, c) in sketch.curves.iter().enumerate() {
        if !c.closed {
            events[ci].push(Event {
                at: 0.0,
                kind: EventKind::CurveEnd,
                point: c.points[0],
            });
            events[ci].push(Event {
                at: c.seg_count() as f64,
                kind: EventKind::CurveEnd,
                point: *c.points.last().unwrap(),
            });
        } else if events[ci].is_empty() {
            events[ci].push(Event {
                at: 0.0,
                kind: EventKind::Marker,
                point: c.points[0],
            });
        }
        events[ci].sort_by(|a, b| a.at.partial_cmp(&b.at).unwrap());
        for w in events[ci].windows(2) {
            if w[1].at - w[0].at < SEP {
                return Err(SketchError::NonGeneric(format!(
                    "events too close on curve {ci}"
                )));
            }
        }
    }

    // 3. Vertices: crossings, curve ends (grouped by position on the
    // circle), markers, boundary corners.
    #[derive(Clone)]
    struct Vert {
        kind: VertexKind,
        point: P2,
    }
    let mut verts: Vec<Vert> = Vec::new();
    let mut crossing_vert = vec![usize::MAX; crossings.len()];
    for (xi, x) in crossings.iter().enumerate() {
        crossing_vert[xi] = verts.len();
        verts.push(Vert {
            kind: VertexKind::DoublePoint,
            point: x.point,
        });
    }

    // 4. Arcs between consecutive events.
    let mut arcs: Vec<ArcRec> = Vec::new();
    let mut endpoint_verts: Vec<usize> = Vec::new(); // vertex ids of curve ends
    for (ci, c) in sketch.curves.iter().enumerate() {
        let evs = &events[ci];
        let n = evs.len();
        let mut ev_vert = vec![usize::MAX; n];
        for (i, e) in evs.iter().enumerate() {
            ev_vert[i] = match e.kind {
                EventKind::Crossing(xi) => crossing_vert[xi],
                EventKind::CurveEnd => {
                    let v = verts.len();
                    verts.push(Vert {
                        kind: VertexKind::Endpoint,
                        point: e.point,
                    });
                    endpoint_verts.push(v);
                    v
                }
                EventKind::Marker => {
                    let v = verts.len();
                    verts.push(Vert {
                        kind: VertexKind::Marker,
                        point: e.point,
                    });
                    v
                }
            };
        }
        let pieces = if c.closed { n } else { n - 1 };
        for i in 0..pieces {
            let j = (i + 1) % n;
            let (a0, a1) = (evs[i].at, evs[j].at);
            let poly = sample_piece(c, a0, a1);
            let from_dir = sub(poly[1], poly[0]);
            let to_dir = sub(poly[poly.len() - 2], poly[poly.len() - 1]);
            arcs.push(ArcRec {
                from: (ev_vert[i], from_dir),
                to: (ev_vert[j], to_dir),
                poly,
                is_boundary: false,
            });
        }
    }

    // 5. Boundary circle for disk sketches.
    if surface == Surface::Disk {
        let mut ends: Vec<(f64, usize)> = endpoint_verts
            .iter()
            .map(|&v| (verts[v].point.1.atan2(verts[v].point.0), v))
            .collect();
        ends.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for w in ends.windows(2) {
            if w[1].0 - w[0].0 < SEP {
                return Err(SketchError::NonGeneric(
                    "curve endpoints too close on the circle".into(),
                ));
            }
        }
        if ends.is_empty() {
            // lone corner vertex with a boundary loop
            let v = verts.len();
            verts.push(Vert {
                kind: VertexKind::BoundaryCorner,
                point: (1.0, 0.0),
            });
            ends.push((0.0, v));
        }
        let k = ends.len();
        for i in 0..k {
            let (th0, v0) = ends[i];
            let (mut th1, v1) = ends[(i + 1) % k];
            if th1 <= th0 + EPS {
                th1 += std::f64::consts::TAU;
            }
            let mut poly = Vec::new();
            let steps = 48;
            for s in 0..=steps {
                let th = th0 + (th1 - th0) * (s as f64 / steps as f64);
                poly.push((th.cos(), th.sin()));
            }
            let from_dir = sub(poly[1], poly[0]);
            let to_dir = sub(poly[poly.len() - 2], poly[poly.len() - 1]);
            arcs.push(ArcRec {
                from: (v0, from_dir),
                to: (v1, to_dir),
                poly,
                is_boundary: true,
            });
        }
    }

    // 6. Darts and the rotation system.
    let n_darts = 2 * arcs.len();
    let mut alpha = vec![0; n_darts];
    let mut dart_vert = vec![0usize; n_darts];
    let mut dart_dir: Vec<P2> = vec![(0.0, 0.0); n_darts];
    for (ai, a) in arcs.iter().enumerate() {
        let d0 = 2 * ai;
        let d1 = 2 * ai + 1;
        alpha[d0] = d1;
        alpha[d1] = d0;
        dart_vert[d0] = a.from.0;
        dart_dir[d0] = a.from.1;
        dart_vert[d1] = a.to.0;
        dart_dir[d1] = a.to.1;
    }
    let mut at_vertex: Vec<Vec<Dart>> = vec![Vec::new(); verts.len()];
    for d in 0..n_darts {
        at_vertex[dart_vert[d]].push(d);
    }
    let mut sigma = vec![0; n_darts];
    for v in 0..verts.len() {
        let mut ds = at_vertex[v].clone();
        ds.sort_by(|&a, &b| {
            angle(dart_dir[a])
                .partial_cmp(&angle(dart_dir[b]))
                .unwrap()
        });
        for i in 0..ds.len().saturating_sub(1) {
            let mut gap = angle(dart_dir[ds[i + 1]]) - angle(dart_dir[ds[i]]);
            if i + 1 == ds.len() - 1 && ds.len() > 1 {
                // also close the cycle
                let wrap = angle(dart_dir[ds[0]]) + std::f64::consts::TAU
                    - angle(dart_dir[ds[ds.len() - 1]]);
                gap = gap.min(wrap);
            }
            if gap.abs() < 1e-7 {
                return Err(SketchError::NonGeneric(format!(
                    "tangent directions coincide at vertex near ({:.3}, {:.3})",
                    verts[v].point.0, verts[v].point.1
                )));
            }
        }
        for (i, &d) in ds.iter().enumerate() {
            sigma[d] = ds[(i + 1) % ds.len()];
        }
    }

    // 7. Merges for disconnected pieces: cast a ray upward from just above
    // the topmost point of each component; the first arc hit (in another
    // component) hosts the merge.
    let mut comp = vec![usize::MAX; n_darts];
    let mut n_comp = 0;
    for d in 0..n_darts {
        if comp[d] != usize::MAX {
            continue;
        }
        let mut stack = vec![d];
        while let Some(x) = stack.pop() {
            if comp[x] != usize::MAX {
                continue;
            }
            comp[x] = n_comp;
            stack.push(alpha[x]);
            stack.push(sigma[x]);
        }
        n_comp += 1;
    }
    let mut merges: Vec<(Dart, Dart)> = Vec::new();
    if n_comp > 1 {
        // topmost geometric point per component
        let mut top: Vec<(f64, f64, usize)> = vec![(f64::MIN, 0.0, 0); n_comp]; // (y, x, arc)
        for (ai, a) in arcs.iter().enumerate() {
            let c = comp[2 * ai];
            for &p in &a.poly {
                if p.1 > top[c].0 {
                    top[c] = (p.1, p.0, ai);
                }
            }
        }
        let mut order: Vec<usize> = (0..n_comp).collect();
        order.sort_by(|&a, &b| top[b].0.partial_cmp(&top[a].0).unwrap());
        for &c in order.iter().skip(1) {
            let (y0, x0, arc0) = top[c];
            // own-side dart: region just above the top point of arc0
            let d_self = side_dart(&arcs[arc0], arc0, (x0, y0 + 1e-5));
            // find nearest arc of another component straight up
            let mut best: Option<(f64, usize)> = None;
            for (ai, a) in arcs.iter().enumerate() {
                if comp[2 * ai] == c {
                    continue;
                }
                for w in a.poly.windows(2) {
                    let (p, q) = (w[0], w[1]);
                    if (p.0 - x0).abs() < EPS && (q.0 - x0).abs() < EPS {
                        continue;
                    }
                    if (p.0 <= x0 && q.0 > x0) || (q.0 <= x0 && p.0 > x0) {
                        let t = (x0 - p.0) / (q.0 - p.0);
                        let y = p.1 + t * (q.1 - p.1);
                        if y > y0 + 1e-6 {
                            match best {
                                Some((by, _)) if by <= y => {}
                                _ => best = Some((y, ai)),
                            }
                        }
                    }
                }
            }
            let (_, host_arc) = best.ok_or_else(|| {
                SketchError::NonGeneric("floating component has nothing above it".into())
            })?;
            let d_host = side_dart(&arcs[host_arc], host_arc, (x0, y0 + 1e-5));
            merges.push((d_self, d_host));
        }
    }

    // 8. Assemble.
    let outer_dart = if surface == Surface::Disk {
        // a boundary dart traversing the circle counterclockwise: its
        // region (on the right of the walk) is the outer side
        let mut found = None;
        for (ai, a) in arcs.iter().enumerate() {
            if !a.is_boundary {
                continue;
            }
            // dart 2*ai points along the arc (ccw by construction)
            found = Some(2 * ai);
            let _ = a;
            break;
        }
        found
    } else {
        None
    };
    let map = match surface {
        Surface::Disk => PlaneMap::new_disk(alpha, sigma, merges, outer_dart.unwrap())?,
        Surface::Sphere => PlaneMap::new_sphere(alpha, sigma, merges)?,
    };
    let mut kinds = vec![VertexKind::Marker; map.vertex_count()];
    for d in 0..n_darts {
        kinds[map.vertex_of(d).0] = verts[dart_vert[d]].kind;
    }
    Ok(Divide::new(map, kinds)?)
}

/// Dart of `arc` (index `ai`) whose region contains the probe point, which
/// must lie directly above or below one of the arc's polyline segments.
/// The region of a dart lies on the right of the walk starting at it.
fn side_dart(arc: &ArcRec, ai: usize, probe: P2) -> Dart {
    // find the segment under/over the probe
    let mut best: Option<(f64, P2, P2)> = None;
    for w in arc.poly.windows(2) {
        let (p, q) = (w[0], w[1]);
        if (q.0 - p.0).abs() < EPS {
            continue;
        }
        if (p.0 <= probe.0 && q.0 > probe.0) || (q.0 <= probe.0 && p.0 > probe.0) {
            let t = (probe.0 - p.0) / (q.0 - p.0);
            let y = p.1 + t * (q.1 - p.1);
            let dist = (y - probe.1).abs();
            match best {
                Some((bd, _, _)) if bd <= dist => {}
                _ => best = Some((dist, p, q)),
            }
        }
    }
    let (_, p, q) = best.expect("probe not above/below the arc");
    let seg_dir = sub(q, p);
    let t = (probe.0 - p.0) / (q.0 - p.0);
    let y_hit = p.1 + t * (q.1 - p.1);
    let to_probe = (0.0, if probe.1 > y_hit { 1.0 } else { -1.0 });
    // probe is on the right of the forward walk iff cross(dir, to_probe) < 0
    if cross(seg_dir, to_probe) < 0.0 {
        2 * ai // forward dart: region on its right
    } else {
        2 * ai + 1
    }
}

fn point_at(c: &SketchCurve, a: f64) -> P2 {
    let nseg = c.seg_count();
    let mut s = a.floor() as usize;
    let mut t = a - s as f64;
    if c.closed {
        s %= nseg;
    } else if s >= nseg {
        s = nseg - 1;
        t = 1.0;
    }
    let (p, q) = c.seg(s);
    lerp(p, q, t)
}

fn sample_piece(c: &SketchCurve, a0: f64, a1: f64) -> Vec<P2> {
    let nseg = c.seg_count() as f64;
    let mut a1 = a1;
    if c.closed && a1 <= a0 + EPS {
        a1 += nseg;
    }
    let mut out: Vec<P2> = Vec::new();
    let mut push = |out: &mut Vec<P2>, p: P2| {
        if let Some(&last) = out.last() {
            let d = sub(p, last);
            if d.0.abs() < EPS && d.1.abs() < EPS {
                return;
            }
        }
        out.push(p);
    };
    push(&mut out, point_at(c, a0));
    let mut corner = a0.floor() + 1.0;
    while corner < a1 - EPS {
        push(&mut out, point_at(c, corner));
        corner += 1.0;
    }
    push(&mut out, point_at(c, a1));
    if out.len() == 1 {
        out.push(out[0]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divide::canonical_gleam;
    use crate::halfint::Half;

    #[test]
    fn sketch_curl_arc() {
        // interval with one curl, loop pointing north
        let s = Sketch {
            surface: Surface::Disk,
            curves: vec![SketchCurve::open(vec![
                (-1.0, 0.0),
                (0.3, 0.25),
                (-0.05, 0.55),
                (-0.3, 0.25),
                (1.0, 0.0),
            ])],
        };
        let d = build_divide(&s).unwrap();
        assert_eq!(d.double_points().count(), 1);
        let internal = d.internal_regions();
        assert_eq!(internal.len(), 1);
        assert_eq!(d.corner_count(internal[0]), 1);
        let g = canonical_gleam(&d).unwrap();
        assert_eq!(g.gleam(internal[0]), Half::new(3));
    }

    #[test]
    fn sketch_floating_circle() {
        let s = Sketch {
            surface: Surface::Disk,
            curves: vec![SketchCurve::closed(vec![
                (0.4, 0.0),
                (0.0, 0.4),
                (-0.4, 0.0),
                (0.0, -0.4),
            ])],
        };
        let d = build_divide(&s).unwrap();
        let internal = d.internal_regions();
        assert_eq!(internal.len(), 1);
        let g = canonical_gleam(&d).unwrap();
        assert_eq!(g.gleam(internal[0]), Half::whole(2));
    }

    #[test]
    fn sketch_two_nested_circles() {
        let s = Sketch {
            surface: Surface::Disk,
            curves: vec![
                SketchCurve::closed(vec![
                    (0.6, 0.0),
                    (0.0, 0.6),
                    (-0.6, 0.0),
                    (0.0, -0.6),
                ]),
                SketchCurve::closed(vec![
                    (0.3, 0.0),
                    (0.0, 0.3),
                    (-0.3, 0.0),
                    (0.0, -0.3),
                ]),
            ],
        };
        let d = build_divide(&s).unwrap();
        // regions: inside small (internal), ring between (internal), ring
        // to boundary (external), outer
        assert_eq!(d.internal_regions().len(), 2);
        let g = canonical_gleam(&d).unwrap();
        let vals: Vec<Half> = g.gleams().values().copied().collect();
        assert_eq!(vals, vec![Half::whole(2), Half::whole(2)]);
        // genuine nesting: exactly one internal region touches an
        // external one, the other is two dual steps away
        let dual = d.map().dual_graph();
        let ext = d.external_regions();
        let deep: Vec<_> = d
            .internal_regions()
            .into_iter()
            .filter(|&f| !dual.neighbors(f).iter().any(|g| ext.contains(g)))
            .collect();
        assert_eq!(deep.len(), 1);
    }

    #[test]
    fn sketch_sphere_circle() {
        let s = Sketch {
            surface: Surface::Sphere,
            curves: vec![SketchCurve::closed(vec![
                (0.5, 0.0),
                (0.0, 0.5),
                (-0.5, 0.0),
                (0.0, -0.5),
            ])],
        };
        let d = build_divide(&s).unwrap();
        // both sides of a circle on the sphere are internal
        assert_eq!(d.internal_regions().len(), 2);
    }
}
