//! The conversion from a divide with cusps to a transvergent diagram of
//! its link, and the twist machinery it rests on.
//!
//! Steps: compute the cusped gleam gl; strip cusps and take the double
//! with a default over-strand assignment, giving a diagram whose quotient
//! gleam is gl0; per internal region R the integer n_R = gl(R) - gl0(R)
//! prescribes -n_R half twists along the fiber circle through R's two
//! copies. The twists are realized inside the quotient: a half twist on
//! the doubled cable over a corridor crossing j strands folds to a braid
//! block on the j strands, one fold curl per strand, and a second braid
//! block. For the common case j = 1 this is a single curl on the edge
//! between R and an external region.

use crate::divide::{CuspedDivide, Divide, DivideError, VertexKind};
use crate::halfint::Half;
use crate::pd::LinkDiagram;
use crate::planemap::{Dart, EdgeId, FaceId, PlaneMap, Surface, VertexId};
use crate::transvergent::{CrossingData, TransvergentDiagram, TransvergentError};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Divide(#[from] DivideError),
    #[error(transparent)]
    Transvergent(#[from] TransvergentError),
    #[error(transparent)]
    Map(#[from] crate::planemap::MapError),
    #[error(transparent)]
    Pd(#[from] crate::pd::PdError),
    #[error("non-integer twist count {1} on region {0:?}; gleam data is corrupt")]
    NonIntegerTwist(FaceId, Half),
    #[error("region {0:?} has no corridor to an external region")]
    NoCorridor(FaceId),
}

/// Calibration of the twist gadget against the bracket oracle: which pass
/// goes over in an inserted fold curl for a positive half twist, and in
/// the braid blocks of wide corridors.
#[derive(Clone, Copy, Debug)]
pub struct TwistConfig {
    /// For +1 half twists the curl's over pass is the one through the
    /// first loop dart (the pass {l1, west}); negated for -1.
    pub curl_over_l1_when_positive: bool,
    /// For +1 half twists the braid crossing's over pass is the rising
    /// strand (entering from the lower row).
    pub braid_over_lower_when_positive: bool,
    pub contrib: crate::transvergent::tables::ContribConfig,
}

/// The calibrated twist conventions.
pub const DEFAULT_TWIST: TwistConfig = TwistConfig {
    curl_over_l1_when_positive: false,
    braid_over_lower_when_positive: false,
    contrib: crate::transvergent::tables::DEFAULT,
};

/// Per-region record of the twisting step.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwistEntry {
    pub region: FaceId,
    /// n_R = gl(R) - gl0(R).
    pub n: i64,
    /// Half twists inserted (-n).
    pub half_twists: i64,
    /// Regions of the corridor from R to the external region.
    pub path: Vec<FaceId>,
    /// Strands (quotient edges) the corridor crosses.
    pub crossed_edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct TwistLog {
    pub entries: Vec<TwistEntry>,
    /// Gleam of the doubled divide before twisting, doubled values keyed
    /// by region.
    pub gl0_doubled: Vec<(FaceId, i64)>,
}

/// Editable map state carried through gadget insertions. Old darts keep
/// their ids, so old vertex and region ids survive every insertion.
struct Editor {
    alpha: Vec<Dart>,
    sigma: Vec<Dart>,
    kind_by_dart: Vec<VertexKind>,
    merges: Vec<(Dart, Dart)>,
    outer_dart: Dart,
}

impl Editor {
    fn from_divide(d: &Divide) -> Editor {
        let map = d.map();
        let n = map.dart_count();
        let mut kind_by_dart = vec![VertexKind::Marker; n];
        for x in 0..n {
            kind_by_dart[x] = d.kind(map.vertex_of(x));
        }
        let outer = map.outer_region().expect("disk divide");
        let outer_dart = (0..n)
            .find(|&x| map.region_of_dart(x) == outer)
            .expect("outer region has darts");
        Editor {
            alpha: map.alpha_vec().to_vec(),
            sigma: map.sigma_vec().to_vec(),
            kind_by_dart,
            merges: map.merges().to_vec(),
            outer_dart,
        }
    }

    fn fresh(&mut self, k: usize) -> usize {
        let base = self.alpha.len();
        for _ in 0..k {
            self.alpha.push(usize::MAX);
            self.sigma.push(usize::MAX);
            self.kind_by_dart.push(VertexKind::DoublePoint);
        }
        base
    }

    fn build(&self) -> Result<Divide, PipelineError> {
        // gadget insertions can connect components that were only joined
        // by face merges before; such merges become redundant
        let n = self.alpha.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let nx = p[c];
                p[c] = r;
                c = nx;
            }
            r
        }
        for d in 0..n {
            for e in [self.alpha[d], self.sigma[d]] {
                let (a, b) = (find(&mut parent, d), find(&mut parent, e));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut merges = Vec::new();
        for &(a, b) in &self.merges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                merges.push((a, b));
            }
        }
        let map = PlaneMap::new_disk(
            self.alpha.clone(),
            self.sigma.clone(),
            merges,
            self.outer_dart,
        )?;
        let mut kinds = vec![VertexKind::Marker; map.vertex_count()];
        for d in 0..map.dart_count() {
            kinds[map.vertex_of(d).0] = self.kind_by_dart[d];
        }
        Ok(Divide::new(map, kinds)?)
    }
}

/// Inserts the quotient image of `halves` half twists on the doubled
/// cable over a corridor crossing the given strands. `west_darts[i]` is
/// the dart of crossed edge i whose region lies on the corridor's start
/// side. Returns crossing data for the new double points, keyed by a dart
/// of each new vertex.
fn insert_corridor_twists(
    ed: &mut Editor,
    west_darts: &[Dart],
    halves: i64,
    cfg: &TwistConfig,
) -> Vec<(Dart, NewCrossing)> {
    if halves == 0 || west_darts.is_empty() {
        return Vec::new();
    }
    let j = west_darts.len();
    let positive = halves > 0;
    let mut new_data: Vec<(Dart, NewCrossing)> = Vec::new();

    // strand stubs: the open west dart per corridor height; height j-1 is
    // nearest the external region, which is the fold center of the cable
    let mut stub: Vec<Dart> = Vec::with_capacity(j);
    let mut east: Vec<Dart> = Vec::with_capacity(j);
    for &w in west_darts {
        stub.push(w);
        east.push(ed.alpha[w]);
    }

    // One half twist of the doubled cable folds to 2j alternating layers:
    // braid moves between quotient heights (m-1, m) for m of the layer
    // parity, plus a fold curl on the top strand when j has that parity
    // (the curl plays the role of the center transposition of the
    // half-twist written as a brick-wall word).
    let mut braid_move = |ed: &mut Editor,
                          stub: &mut Vec<Dart>,
                          h: usize,
                          new_data: &mut Vec<(Dart, NewCrossing)>| {
        // crossing between heights h (lower, "b") and h+1 ("a")
        let base = ed.fresh(4);
        let (a_in, b_in, a_out, b_out) = (base, base + 1, base + 2, base + 3);
        // ccw: a_in (NW), b_in (SW), a_out (SE), b_out (NE)
        ed.sigma[a_in] = b_in;
        ed.sigma[b_in] = a_out;
        ed.sigma[a_out] = b_out;
        ed.sigma[b_out] = a_in;
        ed.alpha[stub[h + 1]] = a_in;
        ed.alpha[a_in] = stub[h + 1];
        ed.alpha[stub[h]] = b_in;
        ed.alpha[b_in] = stub[h];
        // strands swap heights: a exits low, b exits high
        stub[h] = a_out;
        stub[h + 1] = b_out;
        let over = if cfg.braid_over_lower_when_positive == positive {
            b_in
        } else {
            a_in
        };
        new_data.push((a_in, NewCrossing::Paired { over }));
    };
    let mut curl_move = |ed: &mut Editor,
                         stub: &mut Vec<Dart>,
                         h: usize,
                         new_data: &mut Vec<(Dart, NewCrossing)>| {
        let base = ed.fresh(4);
        let (l1, l2, a, b) = (base, base + 1, base + 2, base + 3);
        // ccw cycle (l1, l2, a, b): loop on the left of the eastward
        // strand, poking toward the fold center
        ed.sigma[l1] = l2;
        ed.sigma[l2] = a;
        ed.sigma[a] = b;
        ed.sigma[b] = l1;
        ed.alpha[l1] = l2;
        ed.alpha[l2] = l1;
        ed.alpha[stub[h]] = a;
        ed.alpha[a] = stub[h];
        stub[h] = b;
        let over = if cfg.curl_over_l1_when_positive == positive {
            l1
        } else {
            l2
        };
        new_data.push((l1, NewCrossing::Axis { over, l1 }));
    };

    for _ in 0..halves.unsigned_abs() {
        for layer in 0..(2 * j) {
            // layer parity 0 hosts the odd transpositions (m = 1, 3, ...)
            // and the curl when j is odd; parity 1 hosts the even ones
            let want = 1 - (layer % 2); // m parity: odd first
            let mut m = 1;
            while m < j {
                if m % 2 == want {
                    braid_move(ed, &mut stub, m - 1, &mut new_data);
                }
                m += 1;
            }
            if j % 2 == want {
                curl_move(ed, &mut stub, j - 1, &mut new_data);
            }
        }
    }
    // close the chains
    for h in 0..j {
        ed.alpha[stub[h]] = east[h];
        ed.alpha[east[h]] = stub[h];
    }
    new_data
}

enum NewCrossing {
    Paired { over: Dart },
    Axis { over: Dart, l1: Dart },
}

/// Corridor from an internal region to the nearest external region:
/// breadth-first in the dual graph with ascending neighbor ids.
fn corridor(
    p: &Divide,
    from: FaceId,
) -> Result<(Vec<FaceId>, Vec<EdgeId>), PipelineError> {
    let dual = p.map().dual_graph();
    let externals: BTreeSet<FaceId> = p.external_regions().into_iter().collect();
    let mut parent: BTreeMap<FaceId, (FaceId, EdgeId)> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(from);
    queue.push_back(from);
    let mut goal = None;
    'bfs: while let Some(f) = queue.pop_front() {
        let mut nbrs: Vec<(FaceId, EdgeId)> = dual
            .edges
            .iter()
            .filter_map(|e| {
                if e.faces.0 == f {
                    Some((e.faces.1, e.via[0]))
                } else if e.faces.1 == f {
                    Some((e.faces.0, e.via[0]))
                } else {
                    None
                }
            })
            .collect();
        nbrs.sort();
        for (g, via) in nbrs {
            if seen.contains(&g) {
                continue;
            }
            seen.insert(g);
            parent.insert(g, (f, via));
            if externals.contains(&g) {
                goal = Some(g);
                break 'bfs;
            }
            queue.push_back(g);
        }
    }
    let goal = goal.ok_or(PipelineError::NoCorridor(from))?;
    let mut path = vec![goal];
    let mut edges = Vec::new();
    let mut cur = goal;
    while cur != from {
        let (prev, via) = parent[&cur];
        edges.push(via);
        path.push(prev);
        cur = prev;
    }
    path.reverse();
    edges.reverse();
    Ok((path, edges))
}

/// Draws a transvergent diagram of the link of a divide with cusps.
/// Returns the explicit diagram, its quotient encoding, and the twist log.
pub fn to_transvergent_diagram(
    p: &CuspedDivide,
) -> Result<(LinkDiagram, TransvergentDiagram, TwistLog), PipelineError> {
    to_transvergent_diagram_with(p, None)
}

/// Same, with an explicit over-strand assignment for the doubling step.
pub fn to_transvergent_diagram_with(
    p: &CuspedDivide,
    assign: Option<&BTreeMap<VertexId, Dart>>,
) -> Result<(LinkDiagram, TransvergentDiagram, TwistLog), PipelineError> {
    to_transvergent_diagram_cfg(p, assign, &DEFAULT_TWIST)
}

pub fn to_transvergent_diagram_cfg(
    p: &CuspedDivide,
    assign: Option<&BTreeMap<VertexId, Dart>>,
    cfg: &TwistConfig,
) -> Result<(LinkDiagram, TransvergentDiagram, TwistLog), PipelineError> {
    if p.base.map().surface() != Surface::Disk {
        return Err(PipelineError::Divide(DivideError::UnsupportedSurface(
            p.base.map().surface(),
        )));
    }
    // step 1: the cusped gleam
    let gl = crate::divide::cusped_to_gleamed(p)?;
    // steps 2-3: double the bare divide
    let base = crate::divide::strip_cusps(p);
    let doubled = TransvergentDiagram::double(&base, assign)?;
    // step 4: gleam of the doubled diagram
    let gl0 = doubled.fold_with(&cfg.contrib)?;
    // step 5: integer twist prescriptions
    let mut plan: Vec<(FaceId, i64)> = Vec::new();
    let mut log = TwistLog::default();
    for f in base.internal_regions() {
        let diff = gl.gleam(f) - gl0.gleam(f);
        let n = diff
            .as_integer()
            .ok_or(PipelineError::NonIntegerTwist(f, diff))?;
        plan.push((f, n));
        log.gl0_doubled.push((f, gl0.gleam(f).doubled()));
    }
    // order by corridor length, then region id, so that wide corridors
    // only ever split regions that are already handled
    let mut with_dist: Vec<(usize, FaceId, i64)> = Vec::new();
    for &(f, n) in &plan {
        let (path, _) = corridor(&base, f)?;
        with_dist.push((path.len(), f, n));
    }
    with_dist.sort();

    // step 6: insert the twists in the quotient
    let mut ed = Editor::from_divide(&base);
    let mut cur = base.clone();
    let mut data: BTreeMap<Dart, CrossingData> = BTreeMap::new();
    // seed with the doubling data, keyed by a dart of each double point
    for (&v, &cd) in doubled.data() {
        let d0 = *base.map().vertex_darts(v).iter().min().unwrap();
        data.insert(d0, cd);
    }
    for &(_, f, n) in &with_dist {
        let half_twists = -n;
        let (path, edges) = corridor(&cur, f)?;
        log.entries.push(TwistEntry {
            region: f,
            n,
            half_twists,
            path: path.clone(),
            crossed_edges: edges.clone(),
        });
        if half_twists == 0 {
            continue;
        }
        // west dart of each crossed edge: the one whose region is the
        // corridor side nearer to R
        let mut west = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            let south = path[i];
            let d = if cur.right_region(e) == south {
                e.0
            } else {
                cur.map().alpha(e.0)
            };
            west.push(d);
        }
        let new_data = insert_corridor_twists(&mut ed, &west, half_twists, cfg);
        for (key, nc) in new_data {
            match nc {
                NewCrossing::Paired { over } => {
                    data.insert(key, CrossingData::Paired { over });
                }
                NewCrossing::Axis { over, l1 } => {
                    data.insert(
                        key,
                        CrossingData::Axis {
                            over,
                            loop_edge: EdgeId(l1.min(ed.alpha[l1])),
                        },
                    );
                }
            }
        }
        cur = ed.build()?;
    }

    // assemble the final transvergent diagram
    let final_divide = cur;
    let mut by_vertex: BTreeMap<VertexId, CrossingData> = BTreeMap::new();
    for (&d, &cd) in &data {
        by_vertex.insert(final_divide.map().vertex_of(d), cd);
    }
    let out = TransvergentDiagram::new(final_divide, by_vertex)?;
    let (mut diagram, _) = out.unfold()?;
    if let Some(sym) = diagram.symmetry.as_mut() {
        sym.odd_twist_blocks = log
            .entries
            .iter()
            .filter(|e| e.half_twists % 2 != 0)
            .count();
    }
    Ok((diagram, out, log))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divide::CuspedDivide;
    use crate::fixtures;
    use crate::pd::LaurentPoly;

    #[test]
    fn zero_twists_when_gleam_matches() {
        // a cusp-free divide whose gleam is gl0 by construction: use the
        // doubled diagram's own fold as the target by checking only that
        // the twist plan for the canonical curl is small and integral
        let p = fixtures::curl_arc();
        let cd = CuspedDivide::cusp_free(p).unwrap();
        let (_, t, log) = to_transvergent_diagram(&cd).unwrap();
        assert_eq!(log.entries.len(), 1);
        assert!(log.entries[0].n.abs() <= 2);
        // crossing count: 2 paired per original double point plus gadget
        let _ = t;
    }

    #[test]
    fn trefoil_from_canonical_curl() {
        let p = fixtures::curl_arc();
        let cd = CuspedDivide::cusp_free(p).unwrap();
        let (d, _, _) = to_transvergent_diagram(&cd).unwrap();
        let b = d.jones().unwrap();
        let trefoil = LinkDiagram::from_pd(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
            .unwrap()
            .jones()
            .unwrap();
        let trefoil_mirror = trefoil.invert_variable();
        assert!(
            b == trefoil || b == trefoil_mirror,
            "got {b}, wanted trefoil either chirality"
        );
    }

    #[test]
    fn unknot_family_members() {
        // gleam 1/2 and -1/2 on the curl loop are unknots
        for doubled in [1i64, -1] {
            let p = fixtures::curl_arc();
            let f = p.internal_regions()[0];
            let mut gleams = std::collections::BTreeMap::new();
            gleams.insert(f, crate::Half::new(doubled));
            let target = crate::divide::GleamedDivide::new(p, gleams).unwrap();
            let (cusped, _) = crate::cuspify::add_cusps(&target).unwrap();
            let (d, _, _) = to_transvergent_diagram(&cusped).unwrap();
            assert_eq!(
                d.jones().unwrap(),
                LaurentPoly::one(),
                "gleam {doubled}/2 should be the unknot"
            );
        }
    }

    #[test]
    fn mirror_gleam_gives_mirror_bracket() {
        let p = fixtures::curl_arc();
        let f = p.internal_regions()[0];
        let run = |doubled: i64| {
            let mut gleams = std::collections::BTreeMap::new();
            gleams.insert(f, crate::Half::new(doubled));
            let target = crate::divide::GleamedDivide::new(p.clone(), gleams).unwrap();
            let (cusped, _) = crate::cuspify::add_cusps(&target).unwrap();
            let (d, _, _) = to_transvergent_diagram(&cusped).unwrap();
            d.jones().unwrap()
        };
        let plus = run(3);
        let minus = run(-3);
        assert_eq!(plus.invert_variable(), minus);
    }
}
