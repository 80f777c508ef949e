//! Decision layer: the culling obstruction on meridian candidates, the
//! all-positive three-band exclusion theorem, the two-band embedding
//! conditions, knot-type classification with cabling coordinates, and a
//! census enumerator over the parameter space.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagrams::{family_diagram, fig1b_certificate, FamilyParams, Fig1bCert, InvalidParams};
use crate::homology::gcd;
use crate::waves::meridian_candidates;
use crate::words::{cyclic_canonical, CyclicWord, Gen, Word};

/// The hypothesis of the culling obstruction: an auxiliary curve α disjoint
/// from R, the shortest meridian representative M1 (2|M1| ≤ |R|), and the
/// signed essential intersections of the wave based at M1 with α.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CullingInstance {
    pub alpha: CyclicWord,
    pub r: CyclicWord,
    pub m1: CyclicWord,
    pub wave1_alpha_intersections: Vec<i8>,
}

impl CullingInstance {
    pub fn new(
        alpha: CyclicWord,
        r: CyclicWord,
        m1: CyclicWord,
        wave1_alpha_intersections: Vec<i8>,
    ) -> Result<CullingInstance, String> {
        if 2 * m1.len() > r.len() {
            return Err(format!(
                "M1 is not the shortest representative: 2·{} > {}",
                m1.len(),
                r.len()
            ));
        }
        if wave1_alpha_intersections.iter().any(|&s| s != 1 && s != -1) {
            return Err(String::from("intersection signs must be ±1"));
        }
        Ok(CullingInstance { alpha, r, m1, wave1_alpha_intersections })
    }
}

/// Why a culling instance fails: the hypothesized configuration cannot occur
/// for an S³ embedding, so the candidate (or parameter branch) is culled.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CullingVerdict {
    Pass,
    /// Wave disjoint from α: a shorter disk-bounding curve would exist.
    FailDisjoint,
    /// A single essential intersection: forces the impossible band-sum form.
    FailSingleIntersection,
    /// Exactly two essential intersections of opposite signs.
    FailOppositeSigns,
}

impl CullingVerdict {
    pub fn is_pass(self) -> bool {
        self == CullingVerdict::Pass
    }
}

/// The culling obstruction: the wave based at M1 must meet α more than once,
/// and exactly two intersections must share a sign.
pub fn culling_obstruction(inst: &CullingInstance) -> CullingVerdict {
    match inst.wave1_alpha_intersections[..] {
        [] => CullingVerdict::FailDisjoint,
        [_] => CullingVerdict::FailSingleIntersection,
        [x, y] if x != y => CullingVerdict::FailOppositeSigns,
        _ => CullingVerdict::Pass,
    }
}

/// Why an all-positive three-band instance cannot be a knot exterior.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExclusionReason {
    /// mn < 0: the vertical wave yields the proper power curve, whose
    /// 2-handle addition has torsion.
    TorsionMeridian,
    /// Neither meridian representative can have a cut-vertex, so the
    /// culling obstruction applies to the B-power subword.
    NoCutVertexCull,
    /// Cut-vertex branch with u > 1: a Seifert fibration over S² with three
    /// exceptional fibers, which is never S³.
    SeifertOverS2 { indexes: (i64, i64, i64) },
    /// Cut-vertex branch with u = 1: the determinant equation has no
    /// solution in the admissible range.
    DiophantineInsoluble,
}

impl fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExclusionReason::TorsionMeridian => write!(f, "TorsionMeridian"),
            ExclusionReason::NoCutVertexCull => write!(f, "NoCutVertexCull"),
            ExclusionReason::SeifertOverS2 { indexes } => {
                write!(f, "SeifertOverS2({},{},{})", indexes.0, indexes.1, indexes.2)
            }
            ExclusionReason::DiophantineInsoluble => write!(f, "DiophantineInsoluble"),
        }
    }
}

/// The operative reason the all-positive three-band family is excluded.
/// Requires a, b, c ≥ 1, m, n ≠ 0 with gcd(m,n) = 1, (m,n) ≠ (±1,±1), and
/// |s| > 1.
pub fn exclude_all_positive(p: &FamilyParams) -> Result<ExclusionReason, InvalidParams> {
    let FamilyParams::Fig9 { a, b, c, m, n, s } = *p else {
        return Err(InvalidParams {
            message: String::from("exclusion applies to the three-band family"),
        });
    };
    p.check()?;
    if m == 0 || n == 0 || (m == n && m.unsigned_abs() == 1) {
        return Err(InvalidParams {
            message: format!("exclusion requires m, n ≠ 0 and (m,n) ≠ (±1,±1), got ({m},{n})"),
        });
    }
    if m * n < 0 {
        return Ok(ExclusionReason::TorsionMeridian);
    }
    let (m, n) = (m.abs(), n.abs());
    let s = s.abs();
    if m != 1 && n != 1 {
        return Ok(ExclusionReason::NoCutVertexCull);
    }
    // A meridian representative can have a cut-vertex only when one of m, n
    // is 1; the band weights then swap roles with the label parameters.
    let (big_m, w1, w2) = if n == 1 {
        (m, (b + c) as i64, c as i64)
    } else {
        (n, (a + b) as i64, a as i64)
    };
    if s == 2 {
        // u is forced to 1 and the determinant equation is insoluble.
        return Ok(ExclusionReason::DiophantineInsoluble);
    }
    let u = (2..s).rev().find(|&u| gcd(s as u64, u as u64) == 1).unwrap_or(s - 1);
    let a1 = (if n == 1 { a } else { c } as i64) / w1;
    Ok(ExclusionReason::SeifertOverS2 { indexes: (u, a1 + 2, big_m * w1 - w2) })
}

/// All solutions of the cut-vertex determinant equation
/// (j+1)·s·[(m−1)(b+c)+b] = (j+m)(b+c) + b + δ with δ = ±1, over
/// b, c, j ∈ [1, bound] and m, s ∈ [2, bound]. The exclusion theorem
/// predicts none exist.
pub fn eq3_solutions(bound: i64) -> Vec<(i64, i64, i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for b in 1..=bound {
        for c in 1..=bound {
            if gcd(b as u64, c as u64) != 1 {
                continue;
            }
            let w = b + c;
            for m in 2..=bound {
                for s in 2..=bound {
                    // Linear in j: (j+1)K = (j+m)w + b + δ with
                    // K = s[(m−1)w + b], so j(K − w) = mw + b + δ − K.
                    let k = s * ((m - 1) * w + b);
                    for delta in [1i64, -1] {
                        let num = m * w + b + delta - k;
                        let den = k - w;
                        if den != 0 && num % den == 0 {
                            let j = num / den;
                            if (1..=bound).contains(&j) {
                                out.push((b, c, j, m, s, delta));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The knot type of a classified 2-handle addition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum KnotClass {
    Unknot,
    Torus(i64, i64),
    CableOfTorus { cable: (i64, i64), companion: (i64, i64) },
    NotEmbeddable(NotEmbedReason),
    Unknown(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NotEmbedReason {
    /// No embedding certificate exists for the two-band parameters.
    NoWaveCertificate,
    /// The all-positive three-band exclusion applies.
    Excluded(ExclusionReason),
}

impl fmt::Display for KnotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotClass::Unknot => write!(f, "Unknot"),
            KnotClass::Torus(p, q) => write!(f, "Torus({p},{q})"),
            KnotClass::CableOfTorus { cable, companion } => {
                write!(f, "Cable({},{};{},{})", cable.0, cable.1, companion.0, companion.1)
            }
            KnotClass::NotEmbeddable(NotEmbedReason::NoWaveCertificate) => {
                write!(f, "NotEmbeddable(NoWaveCertificate)")
            }
            KnotClass::NotEmbeddable(NotEmbedReason::Excluded(r)) => {
                write!(f, "NotEmbeddable({r})")
            }
            KnotClass::Unknown(r) => write!(f, "Unknown({r})"),
        }
    }
}

/// The meridian word A^m B^u determined by a certificate.
pub fn certificate_meridian(m: i64, cert: &Fig1bCert) -> CyclicWord {
    cyclic_canonical(&Word::from_syllables(&[(Gen::A, m), (Gen::B, cert.u)]))
        .expect("meridian word is nontrivial")
}

/// Classifies the exterior H[R] of a one-band or two-band instance: the
/// unknot, a torus knot, a cable of a torus knot, or not embeddable.
pub fn classify_exterior(p: &FamilyParams) -> Result<KnotClass, InvalidParams> {
    p.check()?;
    match *p {
        FamilyParams::Fig1a { .. } => Ok(KnotClass::Unknot),
        FamilyParams::Fig1b { a, b, m, n, s } => {
            if b == 0 && n <= 1 {
                // n = 1: R = A B^s is primitive after a cutting-disk change,
                // so H[R] is a solid torus. n = 0 is the proper power B^s.
                return if n == 1 {
                    Ok(KnotClass::Unknot)
                } else {
                    Ok(KnotClass::Unknown(String::from("relator is a proper power")))
                };
            }
            if m < 1 || n < 1 {
                return Ok(KnotClass::Unknown(format!(
                    "embedding conditions require m, n ≥ 1, got ({m},{n})"
                )));
            }
            match fig1b_certificate(a, b, m, n, s) {
                None => Ok(KnotClass::NotEmbeddable(NotEmbedReason::NoWaveCertificate)),
                Some(cert) => {
                    let (ai, bi) = (a as i64, b as i64);
                    Ok(match cert.condition {
                        1 => KnotClass::Torus(n, s),
                        2 => KnotClass::Torus((ai + bi) * n + bi * m, s),
                        _ => KnotClass::CableOfTorus {
                            cable: ((ai + bi) * n + bi * m, s),
                            companion: (ai + bi, m),
                        },
                    })
                }
            }
        }
        FamilyParams::Fig9 { .. } => {
            let reason = exclude_all_positive(p)?;
            Ok(KnotClass::NotEmbeddable(NotEmbedReason::Excluded(reason)))
        }
        FamilyParams::Fig15 { .. } => Ok(KnotClass::Unknown(String::from(
            "two bands per handle are outside the one-B-band classification",
        ))),
    }
}

/// Every classified exterior of {unknot, torus, cable-of-torus} type admits
/// a disjoint proper power curve partner; excluded shapes do not.
pub fn proper_power_partner_exists(k: &KnotClass) -> bool {
    matches!(
        k,
        KnotClass::Unknot | KnotClass::Torus(..) | KnotClass::CableOfTorus { .. }
    )
}

/// Which family a census sweeps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CensusFamily {
    Fig1b,
    Fig9,
}

/// One census row: the parameter tuple, its certificate data, the knot
/// class, and meridian words where a surgery recipe applies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusRow {
    pub family: CensusFamily,
    pub a: u32,
    pub b: u32,
    pub c: Option<u32>,
    pub m: i64,
    pub n: i64,
    pub s: i64,
    pub cert: Option<Fig1bCert>,
    pub knot_class: KnotClass,
    pub m1: Option<CyclicWord>,
    pub m2: Option<CyclicWord>,
}

fn check_row_invariants(row: &CensusRow) -> Result<(), String> {
    let offending = || {
        format!(
            "family {:?} (a,b,c,m,n,s)=({},{},{:?},{},{},{})",
            row.family, row.a, row.b, row.c, row.m, row.n, row.s
        )
    };
    match &row.knot_class {
        KnotClass::Torus(p, q) => {
            if gcd(p.unsigned_abs(), q.unsigned_abs()) != 1 {
                return Err(format!("torus coordinates not coprime: {}", offending()));
            }
        }
        KnotClass::CableOfTorus { cable, companion } => {
            if gcd(cable.0.unsigned_abs(), cable.1.unsigned_abs()) != 1 {
                return Err(format!("cable coordinates not coprime: {}", offending()));
            }
            if gcd(companion.0.unsigned_abs(), companion.1.unsigned_abs()) != 1 {
                return Err(format!("companion coordinates not coprime: {}", offending()));
            }
            let Some(cert) = &row.cert else {
                return Err(format!("cable row without certificate: {}", offending()));
            };
            // c1 = s·p·q − δ with (p,q) the companion coordinates: the
            // certificate reads ms(a+b) − [(a+b)n+bm] = δ, so the cable
            // coordinate (a+b)n+bm differs from s·p·q by −δ.
            if cable.0 != row.s * companion.0 * companion.1 - cert.delta {
                return Err(format!("cable coordinate identity fails: {}", offending()));
            }
        }
        _ => {}
    }
    Ok(())
}

/// Enumerates the family's parameter box in lexicographic order. Every row
/// carries a re-checkable certificate; any invariant violation aborts the
/// run naming the offending tuple.
pub fn census(which: CensusFamily, bound: u32) -> Result<Vec<CensusRow>, String> {
    let mut rows = Vec::new();
    let ib = bound as i64;
    match which {
        CensusFamily::Fig1b => {
            for a in 0..=bound {
                for b in 0..=bound {
                    for m in 1..=ib {
                        for n in 1..=ib {
                            for s in 2..=ib {
                                let p = FamilyParams::Fig1b { a, b, m, n, s };
                                if p.check().is_err() {
                                    continue;
                                }
                                // The embedding lemma hypothesis: a weight-one
                                // diagram must be the single-band shape with
                                // n > 1.
                                if a + b == 1 && !(a == 1 && n > 1) {
                                    continue;
                                }
                                let cert = fig1b_certificate(a, b, m, n, s);
                                let knot_class = classify_exterior(&p)
                                    .map_err(|e| format!("{e}"))?;
                                let (m1, m2) = if b == 0 {
                                    let d = family_diagram(&p).map_err(|e| format!("{e}"))?;
                                    match meridian_candidates(&d) {
                                        Ok(pair) => (Some(pair.m1), Some(pair.m2)),
                                        Err(_) => (None, None),
                                    }
                                } else {
                                    (cert.as_ref().map(|c| certificate_meridian(m, c)), None)
                                };
                                let row = CensusRow {
                                    family: CensusFamily::Fig1b,
                                    a,
                                    b,
                                    c: None,
                                    m,
                                    n,
                                    s,
                                    cert,
                                    knot_class,
                                    m1,
                                    m2,
                                };
                                check_row_invariants(&row)?;
                                rows.push(row);
                            }
                        }
                    }
                }
            }
        }
        CensusFamily::Fig9 => {
            for a in 1..=bound {
                for b in 1..=bound {
                    for c in 1..=bound {
                        for m in -ib..=ib {
                            for n in 1..=ib {
                                for s in 2..=ib {
                                    if m == 0 || (m == n && m == 1) {
                                        continue;
                                    }
                                    let p = FamilyParams::Fig9 { a, b, c, m, n, s };
                                    if p.check().is_err() {
                                        continue;
                                    }
                                    let reason = match exclude_all_positive(&p) {
                                        Ok(r) => r,
                                        Err(_) => continue,
                                    };
                                    let row = CensusRow {
                                        family: CensusFamily::Fig9,
                                        a,
                                        b,
                                        c: Some(c),
                                        m,
                                        n,
                                        s,
                                        cert: None,
                                        knot_class: KnotClass::NotEmbeddable(
                                            NotEmbedReason::Excluded(reason),
                                        ),
                                        m1: None,
                                        m2: None,
                                    };
                                    check_row_invariants(&row)?;
                                    rows.push(row);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{abelianize, is_homology_sphere_pair, LatticeVector};
    use crate::words::parse_word;

    fn cw(s: &str) -> CyclicWord {
        cyclic_canonical(&parse_word(s).unwrap()).unwrap()
    }

    fn fig20_instance(signs: Vec<i8>) -> CullingInstance {
        // The worked example: R = A^2 B^3 A^3 B^2 A^3 B^3 with (q,r,u,t) =
        // (3,2,3,2); M1 = A^2 B A^2 B^3; α the Seifert curve A B^{-1}.
        CullingInstance::new(
            cw("A b"),
            cw("A^2 B^3 A^3 B^2 A^3 B^3"),
            cw("A^2 B A^2 B^3"),
            signs,
        )
        .unwrap()
    }

    #[test]
    fn culling_verdicts() {
        assert_eq!(
            culling_obstruction(&fig20_instance(alloc::vec![1])),
            CullingVerdict::FailSingleIntersection
        );
        assert_eq!(
            culling_obstruction(&fig20_instance(alloc::vec![1, -1])),
            CullingVerdict::FailOppositeSigns
        );
        assert_eq!(culling_obstruction(&fig20_instance(alloc::vec![1, 1])), CullingVerdict::Pass);
        assert_eq!(
            culling_obstruction(&fig20_instance(alloc::vec![-1, -1])),
            CullingVerdict::Pass
        );
        assert_eq!(
            culling_obstruction(&fig20_instance(alloc::vec![1, -1, 1])),
            CullingVerdict::Pass
        );
        assert_eq!(
            culling_obstruction(&fig20_instance(alloc::vec![])),
            CullingVerdict::FailDisjoint
        );
    }

    #[test]
    fn culling_instance_rejects_long_m1() {
        assert!(CullingInstance::new(
            cw("A b"),
            cw("A^2 B"),
            cw("A^2 B^3"),
            alloc::vec![1, 1]
        )
        .is_err());
        assert!(CullingInstance::new(cw("A"), cw("A^4 B^2"), cw("A B"), alloc::vec![2]).is_err());
    }

    #[test]
    fn exclusion_reasons() {
        let ex = |a, b, c, m, n, s| {
            exclude_all_positive(&FamilyParams::Fig9 { a, b, c, m, n, s }).unwrap()
        };
        assert_eq!(ex(1, 1, 1, -2, 3, 2), ExclusionReason::TorsionMeridian);
        assert_eq!(ex(1, 1, 1, 2, 3, 2), ExclusionReason::NoCutVertexCull);
        assert_eq!(ex(1, 1, 1, 2, 1, 2), ExclusionReason::DiophantineInsoluble);
        // u > 1 branch with (b,c,m) = (1,1,2): third fiber index
        // m(b+c) − c = 3.
        match ex(1, 1, 1, 2, 1, 3) {
            ExclusionReason::SeifertOverS2 { indexes } => {
                assert_eq!(indexes.2, 3);
                assert!(indexes.0 > 1 && indexes.1 > 1);
            }
            other => panic!("expected SeifertOverS2, got {other:?}"),
        }
        assert!(exclude_all_positive(&FamilyParams::Fig9 {
            a: 1,
            b: 1,
            c: 1,
            m: 1,
            n: 1,
            s: 2
        })
        .is_err());
    }

    #[test]
    fn determinant_equation_is_insoluble() {
        assert!(eq3_solutions(20).is_empty());
    }

    #[test]
    fn determinant_equation_inequalities() {
        // s(j+1)(m−1)(b+c) > (j+m)(b+c) and bs(j+1) > b+1 over the box.
        for b in 1i64..=10 {
            for c in 1i64..=10 {
                for j in 1i64..=10 {
                    for m in 2i64..=10 {
                        for s in 2i64..=10 {
                            assert!(s * (j + 1) * (m - 1) * (b + c) > (j + m) * (b + c));
                            assert!(b * s * (j + 1) > b + 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        let cls = |a, b, m, n, s| {
            classify_exterior(&FamilyParams::Fig1b { a, b, m, n, s }).unwrap()
        };
        assert_eq!(cls(1, 0, 1, 2, 3), KnotClass::Torus(2, 3));
        assert_eq!(cls(1, 1, 1, 1, 2), KnotClass::Torus(3, 2));
        assert_eq!(
            cls(2, 1, 2, 3, 2),
            KnotClass::CableOfTorus { cable: (11, 2), companion: (3, 2) }
        );
        assert_eq!(
            classify_exterior(&FamilyParams::Fig1a { s: 4 }).unwrap(),
            KnotClass::Unknot
        );
        assert_eq!(
            cls(1, 1, 2, 3, 2),
            KnotClass::NotEmbeddable(NotEmbedReason::NoWaveCertificate)
        );
    }

    #[test]
    fn embedding_certificate_examples() {
        let cert = fig1b_certificate(1, 0, 1, 2, 3).unwrap();
        assert_eq!((cert.condition, cert.u, cert.delta), (1, 1, 1));
        let cert = fig1b_certificate(1, 1, 1, 1, 2).unwrap();
        assert_eq!((cert.condition, cert.u, cert.delta), (2, 1, 1));
        let cert = fig1b_certificate(2, 1, 2, 3, 2).unwrap();
        assert_eq!((cert.condition, cert.u, cert.delta), (3, 1, 1));
    }

    #[test]
    fn certificate_implies_homology_sphere_pair() {
        for a in 0..=6u32 {
            for b in 0..=6u32 {
                for m in 1..=6i64 {
                    for n in 1..=6i64 {
                        for s in 2..=6i64 {
                            let p = FamilyParams::Fig1b { a, b, m, n, s };
                            if p.check().is_err() || (a + b == 1 && !(a == 1 && n > 1)) {
                                continue;
                            }
                            let Some(cert) = fig1b_certificate(a, b, m, n, s) else {
                                continue;
                            };
                            let (ai, bi) = (a as i64, b as i64);
                            let r = LatticeVector::new(
                                (ai + bi) * n + bi * m,
                                (ai + bi) * s,
                            );
                            let mm = abelianize(&certificate_meridian(m, &cert));
                            assert!(is_homology_sphere_pair(r, mm), "params {p:?}");
                            if cert.condition == 3 {
                                assert!(n > m, "condition 3 requires n > m: {p:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partner_exists_exactly_on_certified_tuples() {
        for a in 0..=5u32 {
            for b in 0..=5u32 {
                for m in 1..=5i64 {
                    for n in 2..=5i64 {
                        for s in 2..=5i64 {
                            let p = FamilyParams::Fig1b { a, b, m, n, s };
                            if p.check().is_err() || (a + b == 1 && a != 1) {
                                continue;
                            }
                            let k = classify_exterior(&p).unwrap();
                            assert_eq!(
                                proper_power_partner_exists(&k),
                                fig1b_certificate(a, b, m, n, s).is_some(),
                                "params {p:?}"
                            );
                        }
                    }
                }
            }
        }
        assert!(proper_power_partner_exists(&KnotClass::Unknot));
        assert!(!proper_power_partner_exists(&KnotClass::NotEmbeddable(
            NotEmbedReason::NoWaveCertificate
        )));
    }

    #[test]
    fn census_small_sweeps() {
        let rows = census(CensusFamily::Fig1b, 5).unwrap();
        assert!(rows.windows(2).all(|w| {
            let key = |r: &CensusRow| (r.a, r.b, r.m, r.n, r.s);
            key(&w[0]) <= key(&w[1])
        }));
        assert!(rows
            .iter()
            .any(|r| (r.a, r.b, r.m, r.n, r.s) == (1, 0, 1, 2, 3)
                && r.knot_class == KnotClass::Torus(2, 3)));
        let rows = census(CensusFamily::Fig9, 3).unwrap();
        assert!(!rows.is_empty());
        assert!(rows
            .iter()
            .all(|r| matches!(r.knot_class, KnotClass::NotEmbeddable(_))));
        assert!(census(CensusFamily::Fig9, 0).unwrap().is_empty());
    }

    #[test]
    fn knot_class_display() {
        assert_eq!(alloc::format!("{}", KnotClass::Torus(2, 3)), "Torus(2,3)");
        assert_eq!(
            alloc::format!(
                "{}",
                KnotClass::CableOfTorus { cable: (11, 2), companion: (3, 2) }
            ),
            "Cable(11,2;3,2)"
        );
        assert_eq!(
            alloc::format!(
                "{}",
                KnotClass::NotEmbeddable(NotEmbedReason::Excluded(
                    ExclusionReason::TorsionMeridian
                ))
            ),
            "NotEmbeddable(TorsionMeridian)"
        );
    }
}
