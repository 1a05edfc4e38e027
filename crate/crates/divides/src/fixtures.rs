//! A catalog of small named divides used by tests, examples and the CLI's
//! demo fixtures. Each is built as an explicit rotation system; comments
//! give the picture.

use crate::divide::{Cusp, CuspedDivide, Divide, Side, VertexKind};
use crate::planemap::{EdgeId, FaceId, PlaneMap};

/// Interval with one interior curl ("alpha curve"). Its link is the
/// trefoil. One internal region (the loop wedge, n = 1).
///
/// Darts: tail1 E1-X (0,1), loop X-X (2,3), tail2 X-E2 (4,5),
/// north boundary arc E1-E2 (6,7), south arc E2-E1 (8,9).
pub fn curl_arc() -> Divide {
    let alpha = vec![1, 0, 3, 2, 5, 4, 7, 6, 9, 8];
    let mut sigma = vec![0; 10];
    // E1: (d0 -> d6 -> d9)
    sigma[0] = 6;
    sigma[6] = 9;
    sigma[9] = 0;
    // X, ccw: (d4 -> d2 -> d3 -> d1)
    sigma[4] = 2;
    sigma[2] = 3;
    sigma[3] = 1;
    sigma[1] = 4;
    // E2: (d7 -> d5 -> d8)
    sigma[7] = 5;
    sigma[5] = 8;
    sigma[8] = 7;
    let map = PlaneMap::new_disk(alpha, sigma, vec![], 7).unwrap();
    let kinds = vec![
        VertexKind::Endpoint,    // E1 (darts 0,6,9)
        VertexKind::DoublePoint, // X (1,2,3,4)
        VertexKind::Endpoint,    // E2 (5,7,8)
    ];
    Divide::new(map, kinds).unwrap()
}

/// The loop edge of `curl_arc`.
pub fn curl_arc_loop_edge(d: &Divide) -> EdgeId {
    let _ = d;
    EdgeId(2)
}

/// Mirror-image curl arc (loop on the other side). Obtained by reversing
/// every rotation; its link is the mirror trefoil.
pub fn curl_arc_mirror() -> Divide {
    let alpha = vec![1, 0, 3, 2, 5, 4, 7, 6, 9, 8];
    let mut sigma_fwd = vec![0; 10];
    sigma_fwd[0] = 6;
    sigma_fwd[6] = 9;
    sigma_fwd[9] = 0;
    sigma_fwd[4] = 2;
    sigma_fwd[2] = 3;
    sigma_fwd[3] = 1;
    sigma_fwd[1] = 4;
    sigma_fwd[7] = 5;
    sigma_fwd[5] = 8;
    sigma_fwd[8] = 7;
    let mut sigma = vec![0; 10];
    for (d, &s) in sigma_fwd.iter().enumerate() {
        sigma[s] = d;
    }
    // reversing the rotation also reverses face walks: the outer side is
    // now seen from the opposite dart of the boundary edge
    let map = PlaneMap::new_disk(alpha, sigma, vec![], 6).unwrap();
    let kinds = vec![
        VertexKind::Endpoint,
        VertexKind::DoublePoint,
        VertexKind::Endpoint,
    ];
    Divide::new(map, kinds).unwrap()
}

/// An embedded circle floating in the disk; one marker vertex on the
/// circle, one corner vertex on the boundary circle. Its single internal
/// region has n = 0 and canonical gleam 2.
pub fn circle_in_disk() -> Divide {
    // circle: darts 0,1 at marker M; boundary: darts 2,3 at corner B
    let alpha = vec![1, 0, 3, 2];
    let sigma = vec![1, 0, 3, 2];
    // circle's outside face (phi-face of dart 0) = disk-inside face (dart 3)
    let map = PlaneMap::new_disk(alpha, sigma, vec![(0, 3)], 2).unwrap();
    let kinds = vec![VertexKind::Marker, VertexKind::BoundaryCorner];
    Divide::new(map, kinds).unwrap()
}

/// Two intervals crossing twice: the "eye". One internal lens region with
/// n = 2.
///
/// Arc A runs NW endpoint - X1 - X2 - NE endpoint (middle segment on the
/// bottom of the lens), arc B runs SW - X1 - X2 - SE (middle on top).
pub fn eye_divide() -> Divide {
    let alpha = vec![
        1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14, 17, 16, 19, 18,
    ];
    let mut sigma = vec![0; 20];
    // X1 ccw: (8, 1, 7, 2)
    sigma[8] = 1;
    sigma[1] = 7;
    sigma[7] = 2;
    sigma[2] = 8;
    // X2 ccw: (4, 9, 3, 10)
    sigma[4] = 9;
    sigma[9] = 3;
    sigma[3] = 10;
    sigma[10] = 4;
    // A1 ccw: (13, 14, 0)
    sigma[13] = 14;
    sigma[14] = 0;
    sigma[0] = 13;
    // A2 ccw: (12, 5, 19)
    sigma[12] = 5;
    sigma[5] = 19;
    sigma[19] = 12;
    // B1 ccw: (6, 15, 16)
    sigma[6] = 15;
    sigma[15] = 16;
    sigma[16] = 6;
    // B2 ccw: (18, 11, 17)
    sigma[18] = 11;
    sigma[11] = 17;
    sigma[17] = 18;
    let map = PlaneMap::new_disk(alpha, sigma, vec![], 12).unwrap();
    let kinds = vec![
        VertexKind::Endpoint,    // A1 (0,13,14)
        VertexKind::DoublePoint, // X1 (1,2,7,8)
        VertexKind::DoublePoint, // X2 (3,4,9,10)
        VertexKind::Endpoint,    // A2 (5,12,19)
        VertexKind::Endpoint,    // B1 (6,15,16)
        VertexKind::Endpoint,    // B2 (11,17,18)
    ];
    Divide::new(map, kinds).unwrap()
}

/// Figure-eight curve in the disk: one circle with a single double point
/// and two loops on opposite sides. Two internal regions, each n = 1.
///
/// Darts: west loop (0,1), east loop (2,3) at the double point X; boundary
/// corner B with darts (4,5).
pub fn lemniscate() -> Divide {
    let alpha = vec![1, 0, 3, 2, 5, 4];
    let mut sigma = vec![0; 6];
    // X ccw: (2, 0, 1, 3) — west loop darts 0 (WNW) and 1 (WSW), east 2,3
    sigma[2] = 0;
    sigma[0] = 1;
    sigma[1] = 3;
    sigma[3] = 2;
    // B
    sigma[4] = 5;
    sigma[5] = 4;
    // the lemniscate's outer phi-face contains dart 0's orbit? merge outer
    // curve face with disk-inside face of the boundary circle.
    // phi(0) = sigma(alpha(0)) = sigma(1) = 3, phi(3) = sigma(2) = 0:
    // face {0,3} is the outer face of the curve (north+south sectors).
    let map = PlaneMap::new_disk(alpha, sigma, vec![(0, 5)], 4).unwrap();
    let kinds = vec![VertexKind::DoublePoint, VertexKind::BoundaryCorner];
    Divide::new(map, kinds).unwrap()
}

/// Interval making a big loop whose strand carries a smaller curl poking
/// into the big region: two double points, two internal regions with n = 3
/// (the big region) and n = 1 (the inner curl region).
///
/// Course: boundary endpoint west, through the big crossing, up the east
/// side, across the top where the strand curls downward into the big
/// region, down the west side, through the big crossing again and out east.
pub fn loop_with_inner_curl() -> Divide {
    let s = crate::geom::Sketch {
        surface: crate::planemap::Surface::Disk,
        curves: vec![crate::geom::SketchCurve::open(vec![
            (-1.0, 0.0),
            (-0.55, -0.5),
            (0.4, -0.15),
            (0.55, 0.2),
            (0.30, 0.46),
            (-0.12, 0.40),
            (-0.02, 0.26),
            (0.12, 0.35),
            (-0.35, 0.50),
            (-0.55, 0.15),
            (-0.5, -0.28),
            (0.2, -0.6),
            (1.0, 0.0),
        ])],
    };
    crate::geom::build_divide(&s).unwrap()
}

/// The region inside the small curl of `loop_with_inner_curl`.
pub fn inner_curl_region(d: &Divide) -> FaceId {
    d.internal_regions()
        .into_iter()
        .find(|&f| d.corner_count(f) == 1)
        .unwrap()
}

/// The big region of `loop_with_inner_curl` (n = 3).
pub fn big_loop_region(d: &Divide) -> FaceId {
    d.internal_regions()
        .into_iter()
        .find(|&f| d.corner_count(f) == 3)
        .unwrap()
}

/// A cusped divide on the curl arc: `k` cusps on the loop edge pointing
/// away from the loop region (outer cusps for it).
pub fn curl_arc_with_outer_cusps(k: u32) -> CuspedDivide {
    let d = curl_arc();
    let loop_edge = curl_arc_loop_edge(&d);
    let internal = d.internal_regions()[0];
    let side = if d.left_region(loop_edge) == internal {
        Side::Right
    } else {
        Side::Left
    };
    let cusps = (0..k)
        .map(|i| Cusp {
            edge: loop_edge,
            ordinal: i,
            side,
        })
        .collect();
    CuspedDivide::new(d, cusps).unwrap()
}


/// Interval carrying `k` consecutive fold curls, all poking to the same
/// side: the quotient of the standard symmetric diagram of the (2, k)
/// torus link, whose k crossings all lie on the mirror circle.
pub fn curl_chain(k: usize) -> Divide {
    let mut pts: Vec<(f64, f64)> = vec![(-1.0, 0.0)];
    let step = 1.6 / (k as f64 + 1.0);
    let w = (step / 5.0).min(0.12);
    for i in 0..k {
        let x = -0.8 + step * (i as f64 + 1.0);
        // rise east, loop back over the top, descend across the rising
        // segment, exit east: one transversal self-crossing per curl
        pts.push((x - 2.0 * w, 0.0));
        pts.push((x + 0.5 * w, 2.0 * w));
        pts.push((x - 1.5 * w, 3.0 * w));
        pts.push((x - 2.5 * w, 1.5 * w));
        pts.push((x + 2.0 * w, 0.0));
    }
    pts.push((1.0, 0.0));
    let s = crate::geom::Sketch {
        surface: crate::planemap::Surface::Disk,
        curves: vec![crate::geom::SketchCurve::open(pts)],
    };
    crate::geom::build_divide(&s).unwrap()
}

/// Circle carrying `k` fold curls, loops poking outward: the quotient of
/// the standard symmetric diagram of the (2, k) torus link (the braid
/// closure of k crossings lying on the mirror circle).
pub fn closed_curl_chain(k: usize) -> Divide {
    use std::f64::consts::TAU;
    let r = 0.55;
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let arc_steps = 8;
    for i in 0..k.max(1) {
        let th0 = TAU * (i as f64) / (k.max(1) as f64);
        let th_mid = TAU * (i as f64 + 0.5) / (k.max(1) as f64);
        // arc from th0 to the midpoint, then a curl there, clear of the
        // closing seam at angle zero
        for s in 0..arc_steps {
            let th = th0 + (th_mid - th0) * (s as f64 / arc_steps as f64);
            pts.push((r * th.cos(), r * th.sin()));
        }
        if k > 0 {
            // curl in the local frame: tangent = t, outward = n
            let (c, s) = (th_mid.cos(), th_mid.sin());
            let tx = (-s, c);
            let nx = (c, s);
            let w = (0.35 / (k as f64)).min(0.09);
            for (a, b) in [
                (-2.0 * w, 0.0),
                (0.5 * w, 2.0 * w),
                (-1.5 * w, 3.0 * w),
                (-2.5 * w, 1.5 * w),
                (2.0 * w, 0.0),
            ] {
                pts.push((
                    r * c + a * tx.0 + b * nx.0,
                    r * s + a * tx.1 + b * nx.1,
                ));
            }
        }
    }
    let sk = crate::geom::Sketch {
        surface: crate::planemap::Surface::Disk,
        curves: vec![crate::geom::SketchCurve::closed(pts)],
    };
    crate::geom::build_divide(&sk).unwrap()
}
