//! The R-R diagram data model: two handles (once-punctured tori) carrying
//! labeled bands of connections, joined by an annulus carrying weighted
//! chords. Curves are recorded implicitly by the band/chord combinatorics and
//! recovered by walking strands.
//!
//! Conventions fixed here (the figures leave them implicit):
//! - Band ends around a handle's belt circle appear in the cyclic order
//!   b0.e0, b1.e0, b2.e0, b0.e1, b1.e1, b2.e1 (the `(s,t,u,−s,−t,−u)` reading
//!   of labels around the boundary).
//! - Within a band, the strand entering end 0 at position i leaves end 1 at
//!   position w−1−i (untwisted band attached from one side).
//! - Within a chord of weight w, the from-side strand j meets the to-side at
//!   position w−1−j (parallel arcs, nested in the annulus).
//! - Traversing a band from end 0 to end 1 contributes the positive label.

pub mod families;

pub use families::{
    change_cutting_disks, family_diagram, fig1b_certificate, is_proper_power, normalize_small_mn,
    FamilyParams, Fig1bCert, InvalidParams, TransformError,
};

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::words::{cyclic_canonical, CyclicWord, Gen, Word};

/// A parallel class of connections through one handle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Band {
    /// Algebraic intersection number with the handle's cutting disk.
    pub label: i64,
    /// Number of parallel connections.
    pub weight: u32,
}

/// One handle: at most three pairwise nonparallel bands in cyclic slot order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Handle {
    pub bands: Vec<Band>,
}

/// One end of one band: `end` 0 or 1, in the belt-circle order above.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SlotRef {
    pub handle: Gen,
    pub band: usize,
    pub end: u8,
}

/// A parallel class of arcs in the annulus between two band ends.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Chord {
    pub from: SlotRef,
    pub to: SlotRef,
    pub weight: u32,
}

/// The chord system of the annulus.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AnnulusPattern {
    pub chords: Vec<Chord>,
}

/// Distinguished curves carried by a family-constructed diagram.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CurveMarks {
    /// The relator curve R.
    pub r: Option<CyclicWord>,
    /// The proper power curve β (= B^s in all families that carry one).
    pub beta: Option<CyclicWord>,
    /// A meridian curve M, where a family marks one.
    pub m: Option<CyclicWord>,
}

/// A genus-two R-R diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RRDiagram {
    pub handle_a: Handle,
    pub handle_b: Handle,
    pub annulus: AnnulusPattern,
    /// Parameters this diagram was constructed from, when family-built.
    pub family: Option<FamilyParams>,
    pub marks: CurveMarks,
}

impl RRDiagram {
    pub fn new(handle_a: Handle, handle_b: Handle, annulus: AnnulusPattern) -> RRDiagram {
        RRDiagram { handle_a, handle_b, annulus, family: None, marks: CurveMarks::default() }
    }

    pub fn handle(&self, g: Gen) -> &Handle {
        match g {
            Gen::A => &self.handle_a,
            Gen::B => &self.handle_b,
        }
    }
}

/// A validation failure; violations are data, not errors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    TooManyBands { handle: Gen, count: usize },
    ZeroWeightBand { handle: Gen, band: usize },
    /// A band may be labeled 0 only if the handle has another nonzero label.
    ZeroLabelAlone { handle: Gen },
    /// Three nonparallel bands must have labels with |t| = |s| + |u| up to order.
    LabelSumRule { handle: Gen },
    /// The two smaller labels must be coprime.
    LabelGcdRule { handle: Gen },
    BadSlotRef { chord: usize },
    /// Chord weights incident to a slot must sum to the band weight.
    SlotWeightMismatch { slot: SlotRef, band_weight: u32, chord_weight: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyBands { handle, count } => {
                write!(f, "handle {handle:?} has {count} bands; at most 3 are allowed")
            }
            Violation::ZeroWeightBand { handle, band } => {
                write!(f, "handle {handle:?} band {band} has weight 0")
            }
            Violation::ZeroLabelAlone { handle } => write!(
                f,
                "handle {handle:?} has a 0-labeled band but no band with nonzero label"
            ),
            Violation::LabelSumRule { handle } => write!(
                f,
                "handle {handle:?} labels violate |t| = |s| + |u| (three-band sum rule)"
            ),
            Violation::LabelGcdRule { handle } => {
                write!(f, "handle {handle:?} labels violate gcd(s,u) = 1")
            }
            Violation::BadSlotRef { chord } => {
                write!(f, "chord {chord} references a slot outside the diagram")
            }
            Violation::SlotWeightMismatch { slot, band_weight, chord_weight } => write!(
                f,
                "slot {:?} band {} end {}: band weight {} but incident chord weight {}",
                slot.handle, slot.band, slot.end, band_weight, chord_weight
            ),
        }
    }
}

/// Errors from strand walking.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagramError {
    /// A strand leaves a band end with no chord to continue through.
    OpenStrand { slot: SlotRef, index: u32 },
    /// A closed component crosses no cutting disk (its word is trivial).
    TrivialComponent,
    /// The diagram fails validation.
    Invalid(Vec<Violation>),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::OpenStrand { slot, index } => write!(
                f,
                "open strand at handle {:?} band {} end {} index {}",
                slot.handle, slot.band, slot.end, index
            ),
            DiagramError::TrivialComponent => {
                write!(f, "a closed component represents the trivial word")
            }
            DiagramError::Invalid(v) => {
                write!(f, "diagram is invalid ({} violations)", v.len())
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DiagramError {}

/// GDS-style double labels (s,s') and (u,u') on nonparallel connections must
/// satisfy |su' − us'| = 1.
pub fn unimodular_label_pair(s: (i64, i64), u: (i64, i64)) -> bool {
    (s.0 * u.1 - u.0 * s.1).unsigned_abs() == 1
}

// ---------------------------------------------------------------------------
// Slot attachment tables
// ---------------------------------------------------------------------------

/// One chord endpoint attached to a slot: which chord, which side (0 = from,
/// 1 = to), and the index range it occupies.
#[derive(Clone, Copy, Debug)]
struct Attachment {
    chord: usize,
    side: u8,
    offset: u32,
    weight: u32,
}

type SlotKey = (Gen, usize, u8);

fn slot_key(s: SlotRef) -> SlotKey {
    (s.handle, s.band, s.end)
}

fn attachment_table(d: &RRDiagram) -> BTreeMap<SlotKey, Vec<Attachment>> {
    let mut table: BTreeMap<SlotKey, Vec<Attachment>> = BTreeMap::new();
    for (ci, ch) in d.annulus.chords.iter().enumerate() {
        for (side, slot) in [(0u8, ch.from), (1u8, ch.to)] {
            let entry = table.entry(slot_key(slot)).or_default();
            let offset = entry.iter().map(|a| a.weight).sum();
            entry.push(Attachment { chord: ci, side, offset, weight: ch.weight });
        }
    }
    table
}

fn resolve(
    table: &BTreeMap<SlotKey, Vec<Attachment>>,
    slot: SlotRef,
    index: u32,
) -> Option<Attachment> {
    table
        .get(&slot_key(slot))?
        .iter()
        .copied()
        .find(|a| index >= a.offset && index < a.offset + a.weight)
}

fn attachment_offset(
    table: &BTreeMap<SlotKey, Vec<Attachment>>,
    slot: SlotRef,
    chord: usize,
    side: u8,
) -> Option<u32> {
    table
        .get(&slot_key(slot))?
        .iter()
        .find(|a| a.chord == chord && a.side == side)
        .map(|a| a.offset)
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Checks all structural invariants; returns the list of violations (empty
/// for a valid diagram).
pub fn validate(d: &RRDiagram) -> Vec<Violation> {
    let mut out = Vec::new();
    for g in [Gen::A, Gen::B] {
        let h = d.handle(g);
        if h.bands.len() > 3 {
            out.push(Violation::TooManyBands { handle: g, count: h.bands.len() });
        }
        for (bi, band) in h.bands.iter().enumerate() {
            if band.weight == 0 {
                out.push(Violation::ZeroWeightBand { handle: g, band: bi });
            }
        }
        let labels: Vec<u64> = h.bands.iter().map(|b| b.label.unsigned_abs()).collect();
        if !labels.is_empty() && labels.iter().all(|&l| l == 0) {
            out.push(Violation::ZeroLabelAlone { handle: g });
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        match sorted.len() {
            // Only three pairwise-nonparallel nonzero bands are constrained;
            // equal labels on distinct bands are allowed (inequivalent
            // connections can share a label).
            3 if sorted[0] > 0 => {
                if sorted[2] != sorted[0] + sorted[1] {
                    out.push(Violation::LabelSumRule { handle: g });
                }
                if crate::homology::gcd(sorted[0], sorted[1]) != 1 {
                    out.push(Violation::LabelGcdRule { handle: g });
                }
            }
            _ => {}
        }
    }
    // Slot references and weight conservation.
    let mut bad_ref = false;
    for (ci, ch) in d.annulus.chords.iter().enumerate() {
        for slot in [ch.from, ch.to] {
            if slot.end > 1 || slot.band >= d.handle(slot.handle).bands.len() {
                out.push(Violation::BadSlotRef { chord: ci });
                bad_ref = true;
            }
        }
        if ch.weight == 0 {
            out.push(Violation::BadSlotRef { chord: ci });
            bad_ref = true;
        }
    }
    if bad_ref {
        return out;
    }
    let table = attachment_table(d);
    for g in [Gen::A, Gen::B] {
        for (bi, band) in d.handle(g).bands.iter().enumerate() {
            for end in [0u8, 1] {
                let slot = SlotRef { handle: g, band: bi, end };
                let got: u32 = table
                    .get(&slot_key(slot))
                    .map(|v| v.iter().map(|a| a.weight).sum())
                    .unwrap_or(0);
                if got != band.weight {
                    out.push(Violation::SlotWeightMismatch {
                        slot,
                        band_weight: band.weight,
                        chord_weight: got,
                    });
                }
            }
        }
    }
    out
}

/// Parallel strands entering one end of a band of weight `w` at position `i`
/// leave the other end at position `w - 1 - i`.
fn band_pair(w: u32, i: u32) -> u32 {
    w - 1 - i
}

/// Parallel strands of a chord of weight `w` pair position `j` on the from
/// side with `w - 1 - j` on the to side.
fn chord_pair(w: u32, j: u32) -> u32 {
    w - 1 - j
}

/// Identity of a single strand of a chord (from-side local index).
type StrandId = (usize, u32);

/// The strand endpoints along one belt circle, in circle order.
fn circle_sequence(
    d: &RRDiagram,
    g: Gen,
    table: &BTreeMap<SlotKey, Vec<Attachment>>,
) -> Vec<StrandId> {
    let h = d.handle(g);
    let mut seq = Vec::new();
    for end in [0u8, 1] {
        for (bi, band) in h.bands.iter().enumerate() {
            let slot = SlotRef { handle: g, band: bi, end };
            for idx in 0..band.weight {
                if let Some(a) = resolve(table, slot, idx) {
                    let local = idx - a.offset;
                    let ch = &d.annulus.chords[a.chord];
                    let from_local = if a.side == 0 { local } else { chord_pair(ch.weight, local) };
                    seq.push((a.chord, from_local));
                }
            }
        }
    }
    seq
}

/// True when the chord system is realizable by disjoint embedded arcs in the
/// annulus: some pair of cut points on the two belt circles unrolls it to a
/// non-crossing matching in a disk. Informational only: curves of an R-R
/// diagram are immersed into the annulus, so `validate` does not require
/// this (the diagram families with three bands against a proper power curve
/// are never embeddable in this sense).
pub fn chords_planar(d: &RRDiagram) -> bool {
    let table = attachment_table(d);
    chords_planar_inner(d, &table)
}

fn chords_planar_inner(d: &RRDiagram, table: &BTreeMap<SlotKey, Vec<Attachment>>) -> bool {
    let seq_a = circle_sequence(d, Gen::A, table);
    let seq_b = circle_sequence(d, Gen::B, table);
    let rot_a = if seq_a.is_empty() { 1 } else { seq_a.len() };
    let rot_b = if seq_b.is_empty() { 1 } else { seq_b.len() };
    for ra in 0..rot_a {
        for rb in 0..rot_b {
            // Disk boundary: both circles forward from their cuts. The belt
            // circles are enumerated with the same handedness in the plane, so
            // unrolling the annulus traverses both the same way around the
            // disk; the parallel-strand pairing conventions (index reversal
            // through bands and chords) are consistent with exactly this
            // orientation.
            let mut cycle: Vec<StrandId> = Vec::with_capacity(seq_a.len() + seq_b.len());
            cycle.extend((0..seq_a.len()).map(|k| seq_a[(ra + k) % seq_a.len()]));
            cycle.extend((0..seq_b.len()).map(|k| seq_b[(rb + k) % seq_b.len()]));
            if non_crossing(&cycle) {
                return true;
            }
        }
    }
    false
}

fn non_crossing(cycle: &[StrandId]) -> bool {
    let mut stack: Vec<StrandId> = Vec::new();
    for &p in cycle {
        if stack.last() == Some(&p) {
            stack.pop();
        } else {
            stack.push(p);
        }
    }
    stack.is_empty()
}

// ---------------------------------------------------------------------------
// Strand walking
// ---------------------------------------------------------------------------

type WalkState = (Gen, usize, u8, u32);

/// Walks every strand and returns one canonical cyclic word per closed
/// component, sorted; the multiset is independent of walk starting points.
pub fn extract_curves(d: &RRDiagram) -> Result<Vec<CyclicWord>, DiagramError> {
    let violations = validate(d);
    if !violations.is_empty() {
        return Err(DiagramError::Invalid(violations));
    }
    let table = attachment_table(d);
    let mut visited: BTreeSet<WalkState> = BTreeSet::new();
    let mut out: Vec<CyclicWord> = Vec::new();
    for g in [Gen::A, Gen::B] {
        for bi in 0..d.handle(g).bands.len() {
            for end in [0u8, 1] {
                for idx in 0..d.handle(g).bands[bi].weight {
                    let start: WalkState = (g, bi, end, idx);
                    if visited.contains(&start) {
                        continue;
                    }
                    let word = walk(d, &table, &mut visited, start)?;
                    out.push(
                        cyclic_canonical(&word).map_err(|_| DiagramError::TrivialComponent)?,
                    );
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn walk(
    d: &RRDiagram,
    table: &BTreeMap<SlotKey, Vec<Attachment>>,
    visited: &mut BTreeSet<WalkState>,
    start: WalkState,
) -> Result<Word, DiagramError> {
    let mut syllables: Vec<(Gen, i64)> = Vec::new();
    let mut state = start;
    loop {
        let (g, bi, end, idx) = state;
        let band = d.handle(g).bands[bi];
        visited.insert(state);
        visited.insert((g, bi, 1 - end, band_pair(band.weight, idx)));
        syllables.push((g, if end == 0 { band.label } else { -band.label }));
        let exit_slot = SlotRef { handle: g, band: bi, end: 1 - end };
        let exit_idx = band_pair(band.weight, idx);
        let a = resolve(table, exit_slot, exit_idx)
            .ok_or(DiagramError::OpenStrand { slot: exit_slot, index: exit_idx })?;
        let ch = &d.annulus.chords[a.chord];
        let (partner_slot, partner_side) = if a.side == 0 { (ch.to, 1u8) } else { (ch.from, 0u8) };
        let local = exit_idx - a.offset;
        let partner_local = chord_pair(ch.weight, local);
        let partner_offset = attachment_offset(table, partner_slot, a.chord, partner_side)
            .ok_or(DiagramError::OpenStrand { slot: partner_slot, index: 0 })?;
        state = (
            partner_slot.handle,
            partner_slot.band,
            partner_slot.end,
            partner_offset + partner_local,
        );
        if state == start {
            break;
        }
        debug_assert!(!visited.contains(&state), "walker re-entered a visited strand");
    }
    Ok(Word::from_syllables(&syllables))
}

// ---------------------------------------------------------------------------
// Heegaard graph
// ---------------------------------------------------------------------------

/// Fat vertices of the Heegaard diagram: the two sides of each cutting disk.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Vertex {
    APlus,
    AMinus,
    BPlus,
    BMinus,
}

impl Vertex {
    pub const ALL: [Vertex; 4] = [Vertex::APlus, Vertex::AMinus, Vertex::BPlus, Vertex::BMinus];
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Vertex::APlus => "A+",
            Vertex::AMinus => "A-",
            Vertex::BPlus => "B+",
            Vertex::BMinus => "B-",
        };
        write!(f, "{s}")
    }
}

/// The 4-fat-vertex weighted multigraph underlying a curve system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeegaardGraph {
    /// Edge multiset with unordered endpoints (normalized min ≤ max).
    pub edges: BTreeMap<(Vertex, Vertex), u64>,
    /// The edge walk of each curve, in cyclic letter order.
    pub walks: Vec<Vec<(Vertex, Vertex)>>,
    /// The curves the graph was built from.
    pub curves: Vec<CyclicWord>,
}

impl HeegaardGraph {
    /// Total number of edges counted with weight = total cyclic length.
    pub fn complexity(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn degree(&self, v: Vertex) -> u64 {
        let mut deg = 0;
        for (&(x, y), &w) in &self.edges {
            if x == v {
                deg += w;
            }
            if y == v {
                deg += w;
            }
        }
        deg
    }
}

fn norm_edge(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Crossing X^{+1} passes D_X from the − side to the + side: the arc before
/// it ends at X⁻, the arc after it starts at X⁺.
fn exit_vertex(g: Gen, sign: i8) -> Vertex {
    match (g, sign) {
        (Gen::A, 1) => Vertex::APlus,
        (Gen::A, _) => Vertex::AMinus,
        (Gen::B, 1) => Vertex::BPlus,
        (Gen::B, _) => Vertex::BMinus,
    }
}

fn entry_vertex(g: Gen, sign: i8) -> Vertex {
    exit_vertex(g, -sign)
}

/// Builds the Heegaard graph of a curve system: each adjacent letter pair in
/// each cyclic word contributes one edge.
pub fn heegaard_graph(curves: &[CyclicWord]) -> HeegaardGraph {
    let mut edges: BTreeMap<(Vertex, Vertex), u64> = BTreeMap::new();
    let mut walks = Vec::new();
    for c in curves {
        let ls = c.letters();
        let mut walk = Vec::with_capacity(ls.len());
        for i in 0..ls.len() {
            let x = ls[i];
            let y = ls[(i + 1) % ls.len()];
            let e = (exit_vertex(x.gen, x.sign), entry_vertex(y.gen, y.sign));
            *edges.entry(norm_edge(e.0, e.1)).or_insert(0) += 1;
            walk.push(e);
        }
        walks.push(walk);
    }
    HeegaardGraph { edges, walks, curves: curves.to_vec() }
}

/// The three graph shapes of genus-two Heegaard diagrams.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphType {
    /// Connected, no cut-vertex, orientation-coherent mixed edges.
    A,
    /// Connected, no cut-vertex, mixed-sign edge support.
    B,
    /// Disconnected or has a cut-vertex (rejected by wave theory).
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GraphPredicates {
    pub connected: bool,
    pub cut_vertex: bool,
    pub positive: bool,
    pub graph_type: GraphType,
}

fn reachable(g: &HeegaardGraph, from: Vertex, skip: Option<Vertex>) -> BTreeSet<Vertex> {
    let mut seen = BTreeSet::new();
    let mut stack = alloc::vec![from];
    while let Some(v) = stack.pop() {
        if !seen.insert(v) {
            continue;
        }
        for (&(x, y), &w) in &g.edges {
            if w == 0 {
                continue;
            }
            if Some(x) == skip || Some(y) == skip {
                continue;
            }
            if x == v && !seen.contains(&y) {
                stack.push(y);
            }
            if y == v && !seen.contains(&x) {
                stack.push(x);
            }
        }
    }
    seen
}

/// Connectivity, cut-vertex, positivity (exponent-coherence), and graph type.
pub fn graph_predicates(g: &HeegaardGraph) -> GraphPredicates {
    let active: Vec<Vertex> = Vertex::ALL.into_iter().filter(|&v| g.degree(v) > 0).collect();
    // The 4-vertex graph: isolated disk sides count as disconnection.
    let connected = active.len() == 4 && {
        let seen = reachable(g, active[0], None);
        active.iter().all(|v| seen.contains(v))
    };
    let mut cut_vertex = false;
    if connected {
        for &v in &active {
            let rest: Vec<Vertex> = active.iter().copied().filter(|&u| u != v).collect();
            // A vertex of a connected graph is a cut-vertex when its removal
            // separates the remaining vertices.
            if let Some(&first) = rest.first() {
                let seen = reachable(g, first, Some(v));
                if !rest.iter().all(|u| seen.contains(u)) {
                    cut_vertex = true;
                }
            }
        }
    }
    let positive = g.curves.iter().all(|c| {
        let coherent = |gen: Gen| {
            let signs: BTreeSet<i8> =
                c.letters().iter().filter(|l| l.gen == gen).map(|l| l.sign).collect();
            signs.len() <= 1
        };
        coherent(Gen::A) && coherent(Gen::B)
    });
    let graph_type = if !connected || cut_vertex {
        GraphType::C
    } else {
        let mixed: BTreeSet<(Vertex, Vertex)> = g
            .edges
            .iter()
            .filter(|(&(x, y), &w)| w > 0 && is_mixed(x, y))
            .map(|(&e, _)| e)
            .collect();
        let coh1: BTreeSet<(Vertex, Vertex)> = [
            norm_edge(Vertex::APlus, Vertex::BMinus),
            norm_edge(Vertex::BPlus, Vertex::AMinus),
        ]
        .into_iter()
        .collect();
        let coh2: BTreeSet<(Vertex, Vertex)> = [
            norm_edge(Vertex::APlus, Vertex::BPlus),
            norm_edge(Vertex::AMinus, Vertex::BMinus),
        ]
        .into_iter()
        .collect();
        if mixed.is_subset(&coh1) || mixed.is_subset(&coh2) {
            GraphType::A
        } else {
            GraphType::B
        }
    };
    GraphPredicates { connected, cut_vertex, positive, graph_type }
}

fn is_mixed(x: Vertex, y: Vertex) -> bool {
    let side = |v: Vertex| matches!(v, Vertex::APlus | Vertex::AMinus);
    side(x) != side(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn cw(s: &str) -> CyclicWord {
        cyclic_canonical(&parse_word(s).unwrap()).unwrap()
    }

    fn s(h: Gen, band: usize, end: u8) -> SlotRef {
        SlotRef { handle: h, band, end }
    }

    /// The two-curve diagram carrying the conjugacy classes of AB and
    /// A^3 B^2 A^2 B^2: bands labeled 3, 2, 1 on the A-handle and 2, 1 on B.
    pub(crate) fn figure_eight_diagram() -> RRDiagram {
        let handle_a = Handle {
            bands: alloc::vec![
                Band { label: 3, weight: 1 },
                Band { label: 2, weight: 1 },
                Band { label: 1, weight: 1 },
            ],
        };
        let handle_b = Handle {
            bands: alloc::vec![Band { label: 2, weight: 2 }, Band { label: 1, weight: 1 }],
        };
        let chords = alloc::vec![
            Chord { from: s(Gen::A, 0, 1), to: s(Gen::B, 0, 0), weight: 1 },
            Chord { from: s(Gen::A, 1, 1), to: s(Gen::B, 0, 0), weight: 1 },
            Chord { from: s(Gen::B, 0, 1), to: s(Gen::A, 0, 0), weight: 1 },
            Chord { from: s(Gen::B, 0, 1), to: s(Gen::A, 1, 0), weight: 1 },
            Chord { from: s(Gen::A, 2, 1), to: s(Gen::B, 1, 0), weight: 1 },
            Chord { from: s(Gen::B, 1, 1), to: s(Gen::A, 2, 0), weight: 1 },
        ];
        RRDiagram::new(handle_a, handle_b, AnnulusPattern { chords })
    }

    #[test]
    fn figure_eight_is_valid() {
        let d = figure_eight_diagram();
        let v = validate(&d);
        assert!(v.is_empty(), "unexpected violations: {v:?}");
    }

    #[test]
    fn figure_eight_words() {
        let d = figure_eight_diagram();
        let curves = extract_curves(&d).unwrap();
        assert_eq!(curves, alloc::vec![cw("AB"), cw("A^3 B^2 A^2 B^2")]);
    }

    #[test]
    fn validator_flags_gcd_violation() {
        let mut d = figure_eight_diagram();
        d.handle_a.bands = alloc::vec![
            Band { label: 2, weight: 1 },
            Band { label: 2, weight: 1 },
            Band { label: 4, weight: 1 },
        ];
        assert!(validate(&d).contains(&Violation::LabelGcdRule { handle: Gen::A }));
    }

    #[test]
    fn validator_flags_sum_violation() {
        let mut d = figure_eight_diagram();
        d.handle_a.bands = alloc::vec![
            Band { label: 5, weight: 1 },
            Band { label: 2, weight: 1 },
            Band { label: 1, weight: 1 },
        ];
        assert!(validate(&d).contains(&Violation::LabelSumRule { handle: Gen::A }));
    }

    #[test]
    fn validator_flags_weight_mismatch() {
        let mut d = figure_eight_diagram();
        d.annulus.chords[0].weight = 2;
        assert!(validate(&d)
            .iter()
            .any(|v| matches!(v, Violation::SlotWeightMismatch { .. })));
    }

    #[test]
    fn planarity_predicate_distinguishes_embeddable_patterns() {
        // Two fat chords closing a single band pair: embeddable as disjoint
        // arcs (the strand pairing nests them).
        let handle_a = Handle { bands: alloc::vec![Band { label: 1, weight: 2 }] };
        let handle_b = Handle { bands: alloc::vec![Band { label: 2, weight: 2 }] };
        let chords = alloc::vec![
            Chord { from: s(Gen::A, 0, 1), to: s(Gen::B, 0, 0), weight: 2 },
            Chord { from: s(Gen::B, 0, 1), to: s(Gen::A, 0, 0), weight: 2 },
        ];
        let d = RRDiagram::new(handle_a, handle_b, AnnulusPattern { chords });
        assert!(validate(&d).is_empty());
        assert!(chords_planar(&d));

        // Same-circle chords with interleaved endpoints can never be drawn
        // disjointly: chords closing each B-band onto itself sit at positions
        // (b0.e0, b0.e1) and (b1.e0, b1.e1), which interleave in the belt
        // circle slot order (b0.e0, b1.e0, b0.e1, b1.e1).
        let handle_a = Handle { bands: alloc::vec![Band { label: 1, weight: 1 }] };
        let handle_b = Handle {
            bands: alloc::vec![Band { label: 2, weight: 1 }, Band { label: 3, weight: 1 }],
        };
        let chords = alloc::vec![
            Chord { from: s(Gen::A, 0, 1), to: s(Gen::A, 0, 0), weight: 1 },
            Chord { from: s(Gen::B, 0, 1), to: s(Gen::B, 0, 0), weight: 1 },
            Chord { from: s(Gen::B, 1, 1), to: s(Gen::B, 1, 0), weight: 1 },
        ];
        let d2 = RRDiagram::new(handle_a, handle_b, AnnulusPattern { chords });
        assert!(validate(&d2).is_empty(), "{:?}", validate(&d2));
        assert!(!chords_planar(&d2));
    }

    #[test]
    fn heegaard_graph_of_anbs() {
        for (n, es) in [(3i64, 2i64), (2, 5), (4, 4)] {
            let w = cyclic_canonical(&crate::words::Word::from_syllables(&[
                (Gen::A, n),
                (Gen::B, es),
            ]))
            .unwrap();
            let g = heegaard_graph(&[w]);
            assert_eq!(g.complexity(), (n + es) as u64);
            assert_eq!(
                g.edges.get(&(Vertex::APlus, Vertex::AMinus)).copied().unwrap_or(0),
                (n - 1) as u64
            );
            assert_eq!(
                g.edges.get(&(Vertex::BPlus, Vertex::BMinus)).copied().unwrap_or(0),
                (es - 1) as u64
            );
            let mixed: u64 = g
                .edges
                .iter()
                .filter(|(&(x, y), _)| is_mixed(x, y))
                .map(|(_, &w)| w)
                .sum();
            assert_eq!(mixed, 2);
            let p = graph_predicates(&g);
            assert!(p.connected);
            assert!(!p.cut_vertex);
            assert!(p.positive);
            assert_eq!(p.graph_type, GraphType::A);
        }
    }

    #[test]
    fn heegaard_graph_of_ab() {
        let g = heegaard_graph(&[cw("AB")]);
        assert_eq!(g.complexity(), 2);
        assert_eq!(g.edges.get(&(Vertex::APlus, Vertex::AMinus)), None);
        assert_eq!(g.edges.get(&(Vertex::BPlus, Vertex::BMinus)), None);
    }

    #[test]
    fn heegaard_graph_of_bs_is_disconnected() {
        let w = cyclic_canonical(&crate::words::Word::from_syllables(&[(Gen::B, 3)])).unwrap();
        let g = heegaard_graph(&[w]);
        assert_eq!(
            g.edges.get(&(Vertex::BPlus, Vertex::BMinus)).copied().unwrap_or(0),
            3
        );
        let p = graph_predicates(&g);
        assert!(!p.connected);
        assert_eq!(p.graph_type, GraphType::C);
    }

    #[test]
    fn mixed_sign_word_is_nonpositive_type_b() {
        // Fig9-style word with mn < 0: A-signs mixed.
        let g = heegaard_graph(&[cw("a B^2 A^3 B^2")]);
        let p = graph_predicates(&g);
        assert!(p.connected);
        assert!(!p.positive);
        assert_eq!(p.graph_type, GraphType::B);
    }

    #[test]
    fn cut_vertex_for_unit_a_labels() {
        // All A-crossings positive with single letters: (A B^s)^k pattern has
        // every A-arc through B-; removing B- isolates A+.
        let g = heegaard_graph(&[cw("A B^2 A B^2 A B^4")]);
        let p = graph_predicates(&g);
        assert!(p.connected);
        assert!(p.cut_vertex);
        assert_eq!(p.graph_type, GraphType::C);
    }

    #[test]
    fn positivity_invariant_under_swap_and_inversion() {
        for w in ["A^3 B^2 A^2 B^2", "a B^2 A^3 B^2", "A B"] {
            let c = cw(w);
            let base = graph_predicates(&heegaard_graph(&[c.clone()])).positive;
            let swapped = crate::words::apply_automorphism(
                &c,
                &crate::words::FreeAutomorphism::swap(),
            );
            assert_eq!(graph_predicates(&heegaard_graph(&[swapped])).positive, base);
            assert_eq!(graph_predicates(&heegaard_graph(&[c.inverse()])).positive, base);
        }
    }

    #[test]
    fn unimodular_pairs() {
        assert!(unimodular_label_pair((2, 1), (1, 1)));
        assert!(!unimodular_label_pair((2, 0), (0, 2)));
    }
}
