//! Explicit link diagrams as PD codes, and the Kauffman-bracket oracle.
//!
//! A crossing is stored as its four arc slots in counterclockwise order
//! plus a flag telling which opposite pair of slots carries the over
//! strand. The canonical PD tuple (counterclockwise from the incoming
//! under strand) is derived by tracing strands. The bracket is an exact
//! state sum over all smoothings; it is the verification oracle for every
//! conversion in this crate, so it deliberately stays a brute-force
//! enumeration with no shortcuts.

use crate::planemap::{Dart, PlaneMap, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PdError {
    #[error("arc {0} appears {1} times; every arc must appear exactly twice")]
    ArcCount(usize, usize),
    #[error("crossing count {0} exceeds the bracket budget of {1}")]
    TooManyCrossings(usize, usize),
    #[error("vertex {0:?} of the diagram map has degree {1}")]
    BadVertexDegree(VertexId, usize),
    #[error("missing over-strand information for crossing {0:?}")]
    MissingOver(VertexId),
    #[error("{0}")]
    Invalid(String),
}

/// Hard cap on the exponential bracket state sum.
pub const BRACKET_BUDGET: usize = 24;

/// Pairing metadata carried by unfolded diagrams: which crossings are
/// mirror partners, which sit on the symmetry axis.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SymmetryInfo {
    pub mirror_pairs: Vec<(usize, usize)>,
    pub axis_crossings: Vec<usize>,
    /// Odd half-twist blocks leave one crossing on the axis; recorded
    /// best-effort by the pipeline.
    pub odd_twist_blocks: usize,
}

#[derive(Clone, Debug)]
pub struct LinkDiagram {
    /// Four arc ids per crossing, counterclockwise.
    slots: Vec<[usize; 4]>,
    /// True when slots 0 and 2 carry the over strand.
    over_even: Vec<bool>,
    /// Crossing-free unknotted components.
    free_loops: usize,
    pub symmetry: Option<SymmetryInfo>,
    arc_count: usize,
}

impl LinkDiagram {
    /// Builds a diagram from raw slot data.
    pub fn new(
        slots: Vec<[usize; 4]>,
        over_even: Vec<bool>,
        free_loops: usize,
    ) -> Result<LinkDiagram, PdError> {
        assert_eq!(slots.len(), over_even.len());
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for s in &slots {
            for &a in s {
                *counts.entry(a).or_insert(0) += 1;
            }
        }
        for (&a, &c) in &counts {
            if c != 2 {
                return Err(PdError::ArcCount(a, c));
            }
        }
        let arc_count = counts.len();
        let mut d = LinkDiagram {
            slots,
            over_even,
            free_loops,
            symmetry: None,
            arc_count,
        };
        d.renumber_arcs();
        Ok(d)
    }

    /// Builds from standard PD tuples (counterclockwise from the incoming
    /// under strand). The over pair of a standard tuple is slots 1 and 3.
    pub fn from_pd(tuples: Vec<[usize; 4]>) -> Result<LinkDiagram, PdError> {
        let n = tuples.len();
        LinkDiagram::new(tuples, vec![false; n], 0)
    }

    pub fn unknot() -> LinkDiagram {
        LinkDiagram::new(Vec::new(), Vec::new(), 1).unwrap()
    }

    /// Extracts a diagram from a 4-valent sphere map with over-strand
    /// choices. Degree-2 vertices are traversed silently. `over` gives,
    /// per crossing, one dart of the over pass.
    pub fn from_map(
        map: &PlaneMap,
        over: &BTreeMap<VertexId, Dart>,
    ) -> Result<LinkDiagram, PdError> {
        Ok(Self::from_map_with_arcs(map, over)?.0)
    }

    /// Like `from_map`, also returning the arc occupying each dart of the
    /// map (none on free loops) in the diagram's renumbered arc ids.
    pub fn from_map_with_arcs(
        map: &PlaneMap,
        over: &BTreeMap<VertexId, Dart>,
    ) -> Result<(LinkDiagram, Vec<Option<usize>>), PdError> {
        let mut crossing_ids: BTreeMap<VertexId, usize> = BTreeMap::new();
        for v in 0..map.vertex_count() {
            let v = VertexId(v);
            match map.degree(v) {
                4 => {
                    let id = crossing_ids.len();
                    crossing_ids.insert(v, id);
                    if !over.contains_key(&v) {
                        return Err(PdError::MissingOver(v));
                    }
                }
                2 => {}
                d => return Err(PdError::BadVertexDegree(v, d)),
            }
        }
        // Trace strands; assign arcs to dart slots. Arcs are maximal
        // pieces between under-passages (between any passages, on
        // components that never go under).
        let n = map.dart_count();
        let mut arc_of_dart: Vec<Option<usize>> = vec![None; n];
        let mut visited = vec![false; n];
        let mut next_arc = 0usize;
        let mut free_loops = 0usize;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut walk = Vec::new(); // darts in traversal order
            let mut cur = start;
            loop {
                visited[cur] = true;
                visited[map.alpha(cur)] = true;
                walk.push(cur);
                let arrive = map.alpha(cur);
                let v = map.vertex_of(arrive);
                let nxt = if map.degree(v) == 4 {
                    map.sigma(map.sigma(arrive))
                } else {
                    map.sigma(arrive)
                };
                if nxt == start {
                    break;
                }
                cur = nxt;
            }
            // arcs end at every crossing passage
            let mut splits = Vec::new();
            for (i, &d) in walk.iter().enumerate() {
                let arrive = map.alpha(d);
                let v = map.vertex_of(arrive);
                if map.degree(v) == 4 {
                    splits.push(i);
                }
            }
            if splits.is_empty() {
                free_loops += 1;
                continue;
            }
            let m = walk.len();
            for (k, &s) in splits.iter().enumerate() {
                let end = splits[(k + 1) % splits.len()];
                let arc = next_arc;
                next_arc += 1;
                let mut i = (s + 1) % m;
                loop {
                    arc_of_dart[walk[i]] = Some(arc);
                    if i == end {
                        break;
                    }
                    i = (i + 1) % m;
                }
            }
        }
        // assemble crossings in vertex order
        let mut slots = Vec::with_capacity(crossing_ids.len());
        let mut over_even = Vec::with_capacity(crossing_ids.len());
        let arc_at = |d: Dart| -> usize {
            arc_of_dart[d]
                .or(arc_of_dart[map.alpha(d)])
                .expect("slot without arc")
        };
        for (&v, _cid) in &crossing_ids {
            let od = over[&v];
            let over_pass = [od, map.sigma(map.sigma(od))];
            let ds = map.vertex_darts(v);
            let s = [arc_at(ds[0]), arc_at(ds[1]), arc_at(ds[2]), arc_at(ds[3])];
            slots.push(s);
            over_even.push(over_pass.contains(&ds[0]));
        }
        let d = LinkDiagram::new(slots, over_even, free_loops)?;
        // translate raw arc ids into the renumbered ids
        let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
        {
            // replicate renumbering order: first-seen over slots
            let mut raw_slots: Vec<[usize; 4]> = Vec::new();
            for (&v, _cid) in &crossing_ids {
                let ds = map.vertex_darts(v);
                raw_slots.push([arc_at(ds[0]), arc_at(ds[1]), arc_at(ds[2]), arc_at(ds[3])]);
            }
            for s in &raw_slots {
                for &a in s {
                    let next = rename.len();
                    rename.entry(a).or_insert(next);
                }
            }
        }
        let arcs = (0..n)
            .map(|x| {
                arc_of_dart[x]
                    .or(arc_of_dart[map.alpha(x)])
                    .map(|a| *rename.get(&a).unwrap_or(&a))
            })
            .collect();
        Ok((d, arcs))
    }

    fn renumber_arcs(&mut self) {
        let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
        for s in &mut self.slots {
            for a in s.iter_mut() {
                let next = rename.len();
                let id = *rename.entry(*a).or_insert(next);
                *a = id;
            }
        }
        self.arc_count = rename.len();
    }

    pub fn crossing_count(&self) -> usize {
        self.slots.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Canonical PD tuples: counterclockwise from the incoming under
    /// strand, directions fixed by tracing each component from its lowest
    /// arc id.
    pub fn pd_tuples(&self) -> Vec<[usize; 4]> {
        let (tuples, _) = self.canonical();
        tuples
    }

    /// Crossing signs under the tracing orientation (+1 when turning the
    /// under direction counterclockwise by a quarter aligns it with the
    /// over direction).
    pub fn writhe(&self) -> i64 {
        let (_, signs) = self.canonical();
        signs.iter().sum()
    }

    /// Rotates every crossing so slot 0 is the incoming under dart, and
    /// computes crossing signs, by walking the strands.
    fn canonical(&self) -> (Vec<[usize; 4]>, Vec<i64>) {
        let n = self.slots.len();
        // occurrences: arc -> [(crossing, slot)]
        let mut occ: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, s) in self.slots.iter().enumerate() {
            for (si, &a) in s.iter().enumerate() {
                occ.entry(a).or_default().push((ci, si));
            }
        }
        // direction of travel: in_slot[ci][si] = true when the strand
        // enters the crossing through that slot
        let mut in_slot = vec![[false; 4]; n];
        let mut seen = vec![[false; 4]; n];
        for a0 in 0..self.arc_count {
            let &(c0, s0) = &occ[&a0][0];
            if seen[c0][s0] {
                continue;
            }
            // walk forward: enter c0 at s0
            let (mut ci, mut si) = (c0, s0);
            loop {
                if seen[ci][si] {
                    break;
                }
                seen[ci][si] = true;
                in_slot[ci][si] = true;
                let out = (si + 2) % 4;
                seen[ci][out] = true;
                let arc = self.slots[ci][out];
                // other occurrence of arc
                let os = &occ[&arc];
                let (nc, ns) = if (os[0].0, os[0].1) == (ci, out) {
                    os[1]
                } else {
                    os[0]
                };
                ci = nc;
                si = ns;
            }
        }
        let mut tuples = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for ci in 0..n {
            let under_slots = if self.over_even[ci] { [1, 3] } else { [0, 2] };
            let under_in = under_slots
                .into_iter()
                .find(|&s| in_slot[ci][s])
                .expect("under pass without direction");
            let t = [
                self.slots[ci][under_in],
                self.slots[ci][(under_in + 1) % 4],
                self.slots[ci][(under_in + 2) % 4],
                self.slots[ci][(under_in + 3) % 4],
            ];
            tuples.push(t);
            // over in-slot is at position 1 or 3 relative to under_in.
            // With the under strand entering at slot 0 (south, heading
            // north) the over strand entering at slot 3 (west, heading
            // east) is the positive crossing: (over, under) directions
            // form a positive frame. This pairs with the A-smoothing
            // convention below so that a positive kink contributes -A^3.
            let over_in_rel = if in_slot[ci][(under_in + 1) % 4] { 1 } else { 3 };
            signs.push(if over_in_rel == 3 { 1 } else { -1 });
        }
        (tuples, signs)
    }

    /// Per-component arc cycles (components with at least one crossing).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.slots.len();
        let mut occ: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, s) in self.slots.iter().enumerate() {
            for (si, &a) in s.iter().enumerate() {
                occ.entry(a).or_default().push((ci, si));
            }
        }
        let mut seen = vec![[false; 4]; n];
        let mut comps = Vec::new();
        for a0 in 0..self.arc_count {
            let &(c0, s0) = &occ[&a0][0];
            if seen[c0][s0] {
                continue;
            }
            let mut cycle = Vec::new();
            let (mut ci, mut si) = (c0, s0);
            loop {
                if seen[ci][si] {
                    break;
                }
                seen[ci][si] = true;
                cycle.push(self.slots[ci][si]);
                let out = (si + 2) % 4;
                seen[ci][out] = true;
                let arc = self.slots[ci][out];
                let os = &occ[&arc];
                let (nc, ns) = if (os[0].0, os[0].1) == (ci, out) {
                    os[1]
                } else {
                    os[0]
                };
                ci = nc;
                si = ns;
            }
            let mut dedup = cycle.clone();
            dedup.sort();
            dedup.dedup();
            comps.push(dedup);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// Over/under swapped at every crossing.
    pub fn mirror(&self) -> LinkDiagram {
        LinkDiagram {
            slots: self.slots.clone(),
            over_even: self.over_even.iter().map(|b| !b).collect(),
            free_loops: self.free_loops,
            symmetry: self.symmetry.clone(),
            arc_count: self.arc_count,
        }
    }

    /// The Kauffman bracket, unknot normalized to 1.
    pub fn kauffman_bracket(&self) -> Result<LaurentPoly, PdError> {
        let n = self.slots.len();
        if n > BRACKET_BUDGET {
            return Err(PdError::TooManyCrossings(n, BRACKET_BUDGET));
        }
        let delta = LaurentPoly::from_pairs(&[(2, -1), (-2, -1)]);
        // delta powers
        let max_loops = self.arc_count + self.free_loops + 1;
        let mut dpow = vec![LaurentPoly::one()];
        for i in 1..=max_loops {
            dpow.push(dpow[i - 1].mul(&delta));
        }
        let mut acc = LaurentPoly::zero();
        let mut uf = vec![0usize; self.arc_count.max(1)];
        for state in 0u64..(1u64 << n) {
            for (i, slot) in uf.iter_mut().enumerate() {
                *slot = i;
            }
            fn find(uf: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while uf[r] != r {
                    r = uf[r];
                }
                let mut c = x;
                while uf[c] != r {
                    let nx = uf[c];
                    uf[c] = r;
                    c = nx;
                }
                r
            }
            let mut union = |uf: &mut [usize], a: usize, b: usize| {
                let (ra, rb) = (find(uf, a), find(uf, b));
                if ra != rb {
                    uf[ra] = rb;
                }
            };
            let mut exp = 0i64;
            for (ci, s) in self.slots.iter().enumerate() {
                // A-smoothing of a standard crossing (under in at slot 0):
                // join (0,1) and (2,3); B-smoothing joins (0,3) and (1,2).
                // For over_even crossings the roles shift by one slot.
                let a_state = (state >> ci) & 1 == 0;
                exp += if a_state { 1 } else { -1 };
                let join_a = a_state != self.over_even[ci];
                if join_a {
                    union(&mut uf, s[0], s[1]);
                    union(&mut uf, s[2], s[3]);
                } else {
                    union(&mut uf, s[0], s[3]);
                    union(&mut uf, s[1], s[2]);
                }
            }
            let mut loops = self.free_loops;
            for a in 0..self.arc_count {
                if find(&mut uf, a) == a {
                    loops += 1;
                }
            }
            if loops == 0 {
                continue; // empty diagram
            }
            acc = acc.add(&dpow[loops - 1].scale_exp(exp));
        }
        if n == 0 && self.free_loops == 0 {
            return Ok(LaurentPoly::one());
        }
        Ok(acc)
    }

    /// Writhe-corrected bracket: (-A^3)^(-w) * bracket. The variable is A;
    /// the Jones variable is t = A^-4.
    pub fn jones(&self) -> Result<LaurentPoly, PdError> {
        let b = self.kauffman_bracket()?;
        let w = self.writhe();
        let corr = LaurentPoly::monomial(3 * (-w), if (-w).rem_euclid(2) == 1 { -1 } else { 1 });
        Ok(b.mul(&corr))
    }
}

/// Bracket equality up to framing: compares the writhe-corrected brackets
/// of the two diagrams. The raw bracket changes under the first
/// Reidemeister move, so diagrams of one link produced by different
/// constructions compare equal only after the (-A^3)^(-w) correction.
/// This is the necessary-condition oracle for link equality used
/// throughout the acceptance suite.
pub fn same_link_bracket(d1: &LinkDiagram, d2: &LinkDiagram) -> Result<bool, PdError> {
    Ok(d1.jones()? == d2.jones()?)
}

/// Exact integer-coefficient Laurent polynomial in one variable.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentPoly(BTreeMap<i64, i64>);

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly(BTreeMap::new())
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> LaurentPoly {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        LaurentPoly(m)
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(e, c) in pairs {
            p = p.add(&LaurentPoly::monomial(e, c));
        }
        p
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut m = self.0.clone();
        for (&e, &c) in &other.0 {
            let v = m.entry(e).or_insert(0);
            *v += c;
            if *v == 0 {
                m.remove(&e);
            }
        }
        LaurentPoly(m)
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut m: BTreeMap<i64, i64> = BTreeMap::new();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &other.0 {
                let v = m.entry(e1 + e2).or_insert(0);
                *v += c1 * c2;
            }
        }
        m.retain(|_, c| *c != 0);
        LaurentPoly(m)
    }

    /// Multiply by A^k.
    pub fn scale_exp(&self, k: i64) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e + k, c)).collect())
    }

    /// Substitute A -> A^-1.
    pub fn invert_variable(&self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.0.iter().rev() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ac = c.abs();
            match e {
                0 => write!(f, "{}", ac)?,
                1 => {
                    if ac == 1 {
                        write!(f, "A")?
                    } else {
                        write!(f, "{}A", ac)?
                    }
                }
                _ => {
                    if ac == 1 {
                        write!(f, "A^{}", e)?
                    } else {
                        write!(f, "{}A^{}", ac, e)?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Inserts a block of `half_twists` half twists on the strands crossed by
/// a transversal path. `crossed` lists the arcs the path crosses, in
/// order; they are cut and rejoined through a braid block in which every
/// crossing has the sign of `half_twists`.
pub fn insert_twists(
    d: &LinkDiagram,
    crossed: &[usize],
    half_twists: i64,
) -> Result<LinkDiagram, PdError> {
    if half_twists == 0 || crossed.is_empty() {
        return Ok(d.clone());
    }
    let k = crossed.len();
    {
        let mut sorted = crossed.to_vec();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != k {
            return Err(PdError::Invalid(
                "twist path crosses the same arc twice".into(),
            ));
        }
    }
    let mut slots = d.slots.clone();
    let mut over_even = d.over_even.clone();
    let mut next_arc = d.arc_count;
    // strand endpoints: strand i currently runs from left stub to right
    // stub; start: both stubs are the original arc (we cut it)
    // left[i] = arc id feeding the block on strand i
    // right[i] = arc id leaving the block on strand i
    let mut left: Vec<usize> = Vec::with_capacity(k);
    let mut cur: Vec<usize> = Vec::with_capacity(k);
    for &a in crossed {
        // cut arc a into a (left piece keeps the id) and a fresh id for
        // the right piece; one occurrence of `a` in the slot table becomes
        // the fresh id
        let fresh = next_arc;
        next_arc += 1;
        let mut replaced = false;
        'outer: for s in slots.iter_mut() {
            for v in s.iter_mut() {
                if *v == a && !replaced {
                    *v = fresh;
                    replaced = true;
                    break 'outer;
                }
            }
        }
        if !replaced {
            return Err(PdError::Invalid(format!("arc {a} not found in diagram")));
        }
        left.push(a);
        cur.push(fresh);
    }
    // cur[i] will be rewired through the braid; afterwards cur holds the
    // block's output stubs which must equal the original right pieces.
    // We build the braid going from the original arcs inward: inputs are
    // `left`, outputs must be `cur`. Generate half twists one at a time;
    // one half twist is the braid s_1 (s_2 s_1) ... (s_{k-1} ... s_1).
    let positive = half_twists > 0;
    let mut inputs = left.clone();
    for _ in 0..half_twists.unsigned_abs() {
        for stage in 1..k {
            for j in (0..stage).rev() {
                // crossing between positions j and j+1
                let a_in = inputs[j];
                let b_in = inputs[j + 1];
                let a_out = next_arc;
                let b_out = next_arc + 1;
                next_arc += 2;
                // counterclockwise slots around the crossing. Lay the two
                // strands on a grid running rightward: strand at row j
                // enters top-left (TL), leaves bottom-right (BR); row j+1
                // enters bottom-left (BL), leaves top-right (TR). ccw
                // order: TL, BL, BR, TR, so the passes are slots (0,2)
                // and (1,3). positive block: the strand rising from
                // bottom-left passes over.
                slots.push([a_in, b_in, a_out, b_out]);
                // over pass = slots 1,3 (BL,TR) when positive
                over_even.push(!positive);
                inputs[j] = b_out;
                inputs[j + 1] = a_out;
            }
        }
        if k == 1 {
            // single strand: a half twist is nothing at the diagram level
        }
    }
    // splice outputs onto the right stubs
    for i in 0..k {
        let from = inputs[i];
        let to = cur[i];
        if from == to {
            continue;
        }
        for s in slots.iter_mut() {
            for v in s.iter_mut() {
                if *v == from {
                    *v = to;
                }
            }
        }
    }
    let mut out = LinkDiagram::new(slots, over_even, d.free_loops)?;
    out.symmetry = None;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LinkDiagram {
        LinkDiagram::from_pd(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    fn figure_eight() -> LinkDiagram {
        LinkDiagram::from_pd(vec![
            [4, 2, 5, 1],
            [8, 6, 1, 5],
            [6, 3, 7, 4],
            [2, 7, 3, 8],
        ])
        .unwrap()
    }

    fn hopf() -> LinkDiagram {
        LinkDiagram::from_pd(vec![[1, 3, 2, 4], [3, 1, 4, 2]]).unwrap()
    }

    #[test]
    fn unknot_bracket_is_one() {
        assert_eq!(
            LinkDiagram::unknot().kauffman_bracket().unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn two_unknots_bracket_is_delta() {
        let d = LinkDiagram::new(Vec::new(), Vec::new(), 2).unwrap();
        assert_eq!(
            d.kauffman_bracket().unwrap(),
            LaurentPoly::from_pairs(&[(2, -1), (-2, -1)])
        );
    }

    #[test]
    fn trefoil_bracket_reference() {
        // brute-force state enumeration over 2^3 states is the oracle's
        // own definition; freeze the value it must reproduce:
        // <trefoil> = -A^5 - A^-3 + A^-7 for one chirality (or its mirror)
        let b = trefoil().kauffman_bracket().unwrap();
        let one = LaurentPoly::from_pairs(&[(5, -1), (-3, -1), (-7, 1)]);
        let other = one.invert_variable();
        assert!(b == one || b == other, "bracket {b} unexpected");
        let bm = trefoil().mirror().kauffman_bracket().unwrap();
        assert_eq!(bm, b.invert_variable());
    }

    #[test]
    fn trefoil_jones_reference() {
        // V(3_1)(t) = -t^-4 + t^-3 + t^-1 in t = A^-4:
        // exponents in A: 16, 12, 4 with coeffs -1, 1, 1 (or mirrored)
        let j = trefoil().jones().unwrap();
        let right = LaurentPoly::from_pairs(&[(16, -1), (12, 1), (4, 1)]);
        let left = right.invert_variable();
        assert!(j == right || j == left, "jones {j} unexpected");
        assert_eq!(trefoil().writhe().abs(), 3);
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let d = figure_eight();
        let b = d.kauffman_bracket().unwrap();
        assert_eq!(b, d.mirror().kauffman_bracket().unwrap());
        assert_eq!(b, b.invert_variable());
        // and its jones is the known 5-term polynomial
        let j = d.jones().unwrap();
        let expect = LaurentPoly::from_pairs(&[(8, 1), (4, -1), (0, 1), (-4, -1), (-8, 1)]);
        assert_eq!(j, expect, "jones {j}");
    }

    #[test]
    fn hopf_components_and_bracket() {
        let d = hopf();
        assert_eq!(d.component_count(), 2);
        let b = d.kauffman_bracket().unwrap();
        // <hopf> = -A^4 - A^-4 (one chirality; same for mirror)
        let expect = LaurentPoly::from_pairs(&[(4, -1), (-4, -1)]);
        assert!(b == expect || b == expect.invert_variable(), "{b}");
    }

    #[test]
    fn mirror_involution() {
        let d = figure_eight();
        let dm = d.mirror().mirror();
        assert_eq!(d.pd_tuples(), dm.pd_tuples());
    }

    #[test]
    fn jones_of_mirror_is_inverted() {
        let d = trefoil();
        let j = d.jones().unwrap();
        let jm = d.mirror().jones().unwrap();
        assert_eq!(jm, j.invert_variable());
    }

    #[test]
    fn reidemeister_two_invariance() {
        // unknot drawn with an R2 pair against a straight strand:
        // two crossings, four arcs... encode a 2-component unlink made of
        // two circles with an R2 clasp that cancels.
        let d = LinkDiagram::new(
            vec![[1, 4, 2, 3], [2, 4, 1, 3]],
            vec![false, false],
            0,
        )
        .unwrap();
        // R2 pair: bracket equals bracket of the 2-component unlink
        let unlink = LinkDiagram::new(Vec::new(), Vec::new(), 2).unwrap();
        assert_eq!(
            d.kauffman_bracket().unwrap(),
            unlink.kauffman_bracket().unwrap()
        );
    }

    #[test]
    fn twist_insertion_zero_is_identity() {
        let d = trefoil();
        let t = insert_twists(&d, &[1, 2], 0).unwrap();
        assert_eq!(t.pd_tuples(), d.pd_tuples());
    }

    #[test]
    fn twist_insertion_two_half_twists_on_unknot_pair() {
        // two parallel strands from a 2-unlink... use the hopf link as a
        // base and cancel its clasp with -2 half twists on the two strands
        // of one clasp region; we only check bracket behavior: +1 then -1
        // half twist along the same arcs is bracket-neutral.
        let d = trefoil();
        let t1 = insert_twists(&d, &[1, 2], 1).unwrap();
        let t2 = insert_twists(&t1, &[1, 2], -1).unwrap();
        // not necessarily the identical diagram, but bracket-equal?
        // +1 then -1 half twist on the same two strands cancels by R2.
        let _ = t2;
        let b0 = d.kauffman_bracket().unwrap();
        let b2 = t2.kauffman_bracket().unwrap();
        assert_eq!(b0, b2);
    }

    #[test]
    fn bracket_budget_enforced() {
        let mut slots = Vec::new();
        let mut over = Vec::new();
        for i in 0..25usize {
            let base = 2 * i;
            let nb = 2 * ((i + 1) % 25);
            slots.push([base, nb, base + 1, nb + 1]);
            over.push(false);
        }
        let d = LinkDiagram::new(slots, over, 0).unwrap();
        assert!(matches!(
            d.kauffman_bracket(),
            Err(PdError::TooManyCrossings(25, 24))
        ));
    }
}
