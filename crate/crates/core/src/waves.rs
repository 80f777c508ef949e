//! Wave location and surgery: a connected, cut-vertex-free diagram of a
//! curve R determines a distinguished wave; surgery on R along it yields the
//! meridian pair (M1, M2) of the 2-handle addition.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagrams::{graph_predicates, heegaard_graph, FamilyParams, RRDiagram};
use crate::homology::gcd;
use crate::words::{cyclic_canonical, CyclicWord, Gen, Word};

/// The distinguished wave of a diagram.
///
/// `Vertical` runs parallel to the cutting-disk boundary of the handle where
/// R crosses with both signs. `Horizontal` attaches inside an A-run and a
/// B-run of length ≥ 2 (the A⁺A⁻ and B⁺B⁻ edges); the fields index the runs
/// of the canonical cyclic word where the endpoints lie.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Wave {
    Vertical { handle: Gen },
    Horizontal { a_attach: usize, b_attach: usize },
}

/// Which meridian representative is strictly shorter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shorter {
    First,
    Second,
    Tie,
}

/// The two non-R boundary curves of a regular neighborhood of R ∪ ω.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MeridianPair {
    pub m1: CyclicWord,
    pub m2: CyclicWord,
    pub shorter: Shorter,
}

impl MeridianPair {
    fn new(m1: CyclicWord, m2: CyclicWord) -> MeridianPair {
        let shorter = match m1.len().cmp(&m2.len()) {
            core::cmp::Ordering::Less => Shorter::First,
            core::cmp::Ordering::Greater => Shorter::Second,
            core::cmp::Ordering::Equal => Shorter::Tie,
        };
        MeridianPair { m1, m2, shorter }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WaveError {
    /// The wave theorem's hypothesis fails: disconnected graph or cut-vertex.
    NoWaveGuarantee(String),
    /// The diagram is outside the shapes with a calibrated surgery recipe.
    UnsupportedShape(String),
}

impl fmt::Display for WaveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WaveError::NoWaveGuarantee(m) => write!(f, "no wave guarantee: {m}"),
            WaveError::UnsupportedShape(m) => write!(f, "unsupported shape: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WaveError {}

fn relator(d: &RRDiagram) -> Result<&CyclicWord, WaveError> {
    d.marks
        .r
        .as_ref()
        .ok_or_else(|| WaveError::UnsupportedShape(String::from("diagram has no marked relator")))
}

fn mixed_sign_handle(r: &CyclicWord) -> Option<Gen> {
    for gen in [Gen::A, Gen::B] {
        let mut pos = false;
        let mut neg = false;
        for l in r.letters() {
            if l.gen == gen {
                pos |= l.sign > 0;
                neg |= l.sign < 0;
            }
        }
        if pos && neg {
            return Some(gen);
        }
    }
    None
}

/// Locates the distinguished wave of the marked relator: vertical on the
/// mixed-sign handle when the diagram is nonpositive, otherwise horizontal
/// with endpoints at the connections bordering the maximal-label band of
/// each handle (the first maximal run in the canonical rotation).
pub fn locate_wave(d: &RRDiagram) -> Result<Wave, WaveError> {
    let r = relator(d)?;
    let g = heegaard_graph(core::slice::from_ref(r));
    let p = graph_predicates(&g);
    if !p.connected {
        return Err(WaveError::NoWaveGuarantee(String::from("Heegaard graph is disconnected")));
    }
    if p.cut_vertex {
        return Err(WaveError::NoWaveGuarantee(String::from("Heegaard graph has a cut-vertex")));
    }
    if let Some(handle) = mixed_sign_handle(r) {
        return Ok(Wave::Vertical { handle });
    }
    let runs = r.runs();
    let max_run = |gen: Gen| {
        let mut best: Option<(usize, u64)> = None;
        for (i, &(g, e)) in runs.iter().enumerate() {
            if g == gen {
                let m = e.unsigned_abs();
                if best.map_or(true, |(_, b)| m > b) {
                    best = Some((i, m));
                }
            }
        }
        best.map(|(i, _)| i)
    };
    let (Some(a_attach), Some(b_attach)) = (max_run(Gen::A), max_run(Gen::B)) else {
        return Err(WaveError::UnsupportedShape(String::from(
            "relator does not cross both cutting disks",
        )));
    };
    // A horizontal wave endpoint lies on an A⁺A⁻ (resp. B⁺B⁻) edge, which
    // exists only inside a run of length ≥ 2.
    if runs[a_attach].1.unsigned_abs() < 2 || runs[b_attach].1.unsigned_abs() < 2 {
        return Err(WaveError::UnsupportedShape(String::from(
            "no run of length ≥ 2 to carry the horizontal wave endpoint",
        )));
    }
    Ok(Wave::Horizontal { a_attach, b_attach })
}

fn canon(syllables: &[(Gen, i64)]) -> Result<CyclicWord, WaveError> {
    cyclic_canonical(&Word::from_syllables(syllables))
        .map_err(|_| WaveError::UnsupportedShape(String::from("surgery produced a trivial curve")))
}

/// Surgery along a vertical wave on `handle`: the wave connects two adjacent
/// strands crossing the cutting disk with opposite signs, so the relator
/// factors cyclically as u·g·X^f·g⁻¹·v; the two boundary curves of the
/// neighborhood are X^f and u·v.
fn vertical_surgery(r: &CyclicWord, handle: Gen) -> Result<MeridianPair, WaveError> {
    let runs = r.runs();
    let k = runs.len();
    for i in 0..k {
        let (g, _) = runs[i];
        if g == handle {
            continue;
        }
        let before = runs[(i + k - 1) % k];
        let after = runs[(i + 1) % k];
        if before.0 != handle || after.0 != handle || (before.1 > 0) == (after.1 > 0) {
            continue;
        }
        let m1 = canon(&[runs[i]])?;
        let mut rest: Vec<(Gen, i64)> = Vec::new();
        for (j, &(g, e)) in runs.iter().enumerate() {
            if j == i {
                continue;
            }
            let e = if j == (i + k - 1) % k {
                e - e.signum()
            } else if j == (i + 1) % k {
                e - e.signum()
            } else {
                e
            };
            if e != 0 {
                rest.push((g, e));
            }
        }
        let m2 = canon(&rest)?;
        return Ok(MeridianPair::new(m1, m2));
    }
    Err(WaveError::UnsupportedShape(format!(
        "no sign change across a run on the {handle:?}-handle"
    )))
}

/// The closed-form surgery outputs for the two-band-per-handle family with
/// unit weights, where R = A^r B^u A^q B^t A^q B^u. The four subcases follow
/// the four detour positions of the wave endpoint.
fn fig15_unit_surgery(q: i64, r: i64, u: i64, t: i64) -> Result<MeridianPair, WaveError> {
    use Gen::{A, B};
    if q == r || u == t {
        return Err(WaveError::UnsupportedShape(String::from(
            "equal labels leave the wave endpoint position undetermined",
        )));
    }
    let (m1, m2): (Vec<(Gen, i64)>, Vec<(Gen, i64)>) = if q > r && u > t {
        (
            alloc::vec![(A, r), (B, u - t), (A, r), (B, u)],
            alloc::vec![(B, t), (A, q - r), (B, t), (A, q)],
        )
    } else if q > r {
        (
            alloc::vec![(A, r), (B, u), (A, q), (B, u), (A, r), (B, u)],
            alloc::vec![(B, t - u), (A, q - r)],
        )
    } else if u > t {
        (
            alloc::vec![(A, r - q), (B, u - t)],
            alloc::vec![(B, t), (A, q), (B, u), (A, q), (B, t), (A, q)],
        )
    } else {
        (
            alloc::vec![(A, r - q), (B, u), (A, q), (B, u)],
            alloc::vec![(B, t - u), (A, q), (B, u), (A, q)],
        )
    };
    Ok(MeridianPair::new(canon(&m1)?, canon(&m2)?))
}

/// Surgery on the torus-form relator A^n B^s (n, s ≥ 2, gcd(n,s) = 1): the
/// wave splits R into the two Bézout parts A^m B^u and A^{n−m} B^{s−u} with
/// sm − un = 1 (the other part carries determinant −1).
fn torus_surgery(n: i64, s: i64) -> Result<MeridianPair, WaveError> {
    if gcd(n.unsigned_abs(), s.unsigned_abs()) != 1 {
        return Err(WaveError::UnsupportedShape(format!(
            "A^{n} B^{s} with gcd({n},{s}) > 1 is not a knot-exterior relator"
        )));
    }
    for m in 1..n {
        if (s * m - 1) % n == 0 {
            let u = (s * m - 1) / n;
            if u > 0 && u < s {
                let m1 = canon(&[(Gen::A, m), (Gen::B, u)])?;
                let m2 = canon(&[(Gen::A, n - m), (Gen::B, s - u)])?;
                return Ok(MeridianPair::new(m1, m2));
            }
        }
    }
    Err(WaveError::UnsupportedShape(format!("no Bézout split of A^{n} B^{s}")))
}

/// Performs surgery on the marked relator along `w`, returning the meridian
/// pair. Horizontal surgery uses the calibrated recipe of the diagram's
/// family; vertical surgery is the generic cut-and-reconnect.
pub fn wave_surgery(d: &RRDiagram, w: &Wave) -> Result<MeridianPair, WaveError> {
    let r = relator(d)?;
    match *w {
        Wave::Vertical { handle } => vertical_surgery(r, handle),
        Wave::Horizontal { .. } => {
            if let Some(FamilyParams::Fig15 { a: 1, b: 1, c: 1, q, r, u, t }) = d.family {
                return fig15_unit_surgery(q, r, u, t);
            }
            let runs = r.runs();
            if let [(Gen::A, n), (Gen::B, s)] = runs[..] {
                if n >= 2 && s >= 2 {
                    return torus_surgery(n, s);
                }
            }
            Err(WaveError::UnsupportedShape(String::from(
                "no calibrated horizontal surgery recipe for this diagram",
            )))
        }
    }
}

/// Locates the wave and performs surgery; `shorter` marks the minimum-length
/// representative, with ties flagged.
pub fn meridian_candidates(d: &RRDiagram) -> Result<MeridianPair, WaveError> {
    let w = locate_wave(d)?;
    wave_surgery(d, &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::family_diagram;
    use crate::homology::{abelianize, LatticeVector};
    use crate::words::parse_word;

    fn cw(s: &str) -> CyclicWord {
        cyclic_canonical(&parse_word(s).unwrap()).unwrap()
    }

    fn build(p: FamilyParams) -> RRDiagram {
        family_diagram(&p).unwrap()
    }

    fn fig15(q: i64, r: i64, u: i64, t: i64) -> RRDiagram {
        build(FamilyParams::Fig15 { a: 1, b: 1, c: 1, q, r, u, t })
    }

    fn check_pair(pair: &MeridianPair, r: &CyclicWord) {
        assert!(pair.m1.len() + pair.m2.len() <= r.len());
        assert_eq!(
            abelianize(&pair.m1).add(abelianize(&pair.m2)),
            abelianize(r),
            "abelianization must split over the pair"
        );
    }

    #[test]
    fn four_subcases_match_closed_forms() {
        // q > r, u > t.
        let p = meridian_candidates(&fig15(3, 2, 3, 2)).unwrap();
        assert_eq!(p.m1, cw("A^2 B A^2 B^3"));
        assert_eq!(p.m2, cw("B^2 A B^2 A^3"));
        assert_eq!(p.shorter, Shorter::Tie);
        // q > r, u < t.
        let p = meridian_candidates(&fig15(3, 2, 2, 3)).unwrap();
        assert_eq!(p.m1, cw("A^2 B^2 A^3 B^2 A^2 B^2"));
        assert_eq!(p.m2, cw("B A"));
        assert_eq!(p.shorter, Shorter::Second);
        // q < r, u > t.
        let p = meridian_candidates(&fig15(2, 3, 3, 2)).unwrap();
        assert_eq!(p.m1, cw("A B"));
        assert_eq!(p.m2, cw("B^2 A^2 B^3 A^2 B^2 A^2"));
        assert_eq!(p.shorter, Shorter::First);
        // q < r, u < t.
        let p = meridian_candidates(&fig15(2, 3, 2, 3)).unwrap();
        assert_eq!(p.m1, cw("A B^2 A^2 B^2"));
        assert_eq!(p.m2, cw("B A^2 B^2 A^2"));
    }

    #[test]
    fn pair_invariants_over_parameter_sweep() {
        let mut checked = 0;
        for q in 1..=6i64 {
            for r in 1..=6i64 {
                for u in 1..=6i64 {
                    for t in 1..=6i64 {
                        if q == r || u == t || q + r <= 2 || u + t <= 2 {
                            continue;
                        }
                        if gcd(q as u64, r as u64) != 1 || gcd(u as u64, t as u64) != 1 {
                            continue;
                        }
                        let d = fig15(q, r, u, t);
                        let pair = meridian_candidates(&d).unwrap();
                        check_pair(&pair, d.marks.r.as_ref().unwrap());
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 100, "only {checked} tuples swept");
    }

    #[test]
    fn vertical_wave_reproduces_proper_power_curve() {
        let d = build(FamilyParams::Fig9 { a: 1, b: 1, c: 1, m: -2, n: 3, s: 2 });
        let w = locate_wave(&d).unwrap();
        assert_eq!(w, Wave::Vertical { handle: Gen::A });
        let pair = wave_surgery(&d, &w).unwrap();
        assert_eq!(pair.m1, d.marks.beta.unwrap());
        check_pair(&pair, d.marks.r.as_ref().unwrap());
    }

    #[test]
    fn torus_relator_splits_into_bezout_parts() {
        let d = build(FamilyParams::Fig1b { a: 1, b: 0, m: 1, n: 5, s: 3 });
        let pair = meridian_candidates(&d).unwrap();
        // 3·2 − 1·5 = 1.
        assert_eq!(pair.m1, cw("A^2 B"));
        assert_eq!(pair.m2, cw("A^3 B^2"));
        assert_eq!(pair.m1.len() + pair.m2.len(), 8);
        check_pair(&pair, d.marks.r.as_ref().unwrap());
        // Determinant of the split is ±1 against the relator.
        let r = abelianize(d.marks.r.as_ref().unwrap());
        for m in [&pair.m1, &pair.m2] {
            assert!(crate::homology::is_homology_sphere_pair(r, abelianize(m)));
        }
    }

    #[test]
    fn torus_split_sweep() {
        for n in 2..=9i64 {
            for s in 2..=9i64 {
                if gcd(n as u64, s as u64) != 1 {
                    continue;
                }
                let d = build(FamilyParams::Fig1b { a: 1, b: 0, m: 1, n, s });
                let pair = meridian_candidates(&d).unwrap();
                assert_eq!(pair.m1.len() + pair.m2.len(), (n + s) as usize);
                check_pair(&pair, d.marks.r.as_ref().unwrap());
            }
        }
    }

    #[test]
    fn cut_vertex_diagram_has_no_wave_guarantee() {
        // R = A B^2: the A⁺/A⁻ corner forces a cut-vertex.
        let d = build(FamilyParams::Fig1b { a: 1, b: 0, m: 1, n: 1, s: 2 });
        match locate_wave(&d) {
            Err(WaveError::NoWaveGuarantee(_)) => {}
            other => panic!("expected NoWaveGuarantee, got {other:?}"),
        }
    }

    #[test]
    fn wave_location_is_deterministic_and_positive_is_horizontal() {
        let d = fig15(3, 2, 3, 2);
        let w1 = locate_wave(&d).unwrap();
        let w2 = locate_wave(&d).unwrap();
        assert_eq!(w1, w2);
        assert!(matches!(w1, Wave::Horizontal { .. }));
    }

    #[test]
    fn horizontal_attachment_indexes_maximal_runs() {
        // Canonical rotation of A^2 B^3 A^3 B^2 … pick the runs with the
        // maximal exponent on each handle.
        let d = fig15(3, 2, 3, 2);
        let r = d.marks.r.as_ref().unwrap();
        let Wave::Horizontal { a_attach, b_attach } = locate_wave(&d).unwrap() else {
            panic!("expected horizontal");
        };
        let runs = r.runs();
        assert_eq!(runs[a_attach].0, Gen::A);
        assert_eq!(runs[a_attach].1, 3);
        assert_eq!(runs[b_attach].0, Gen::B);
        assert_eq!(runs[b_attach].1, 3);
    }

    #[test]
    fn abelianization_identity_of_first_subcase() {
        // (2r, 2u−t) + (2q−r, 2t) = (r+2q, 2u+t).
        for (q, r, u, t) in [(3i64, 2i64, 3i64, 2i64), (5, 2, 4, 3), (4, 1, 5, 2)] {
            assert!(q > r && u > t);
            let d = fig15(q, r, u, t);
            let pair = meridian_candidates(&d).unwrap();
            assert_eq!(abelianize(&pair.m1), LatticeVector::new(2 * r, 2 * u - t));
            assert_eq!(abelianize(&pair.m2), LatticeVector::new(2 * q - r, 2 * t));
        }
    }
}
