//! Integer-lattice layer: abelianization, homology of 2-handle additions,
//! homology-sphere tests, and the perpendicular coefficient used for cabling
//! coordinates.

use crate::words::{CyclicWord, Gen};

/// An element of H₁(H) ≅ Z ⊕ Z: signed exponent sums per generator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticeVector {
    /// A-exponent sum.
    pub x: i64,
    /// B-exponent sum.
    pub y: i64,
}

impl LatticeVector {
    pub fn new(x: i64, y: i64) -> LatticeVector {
        LatticeVector { x, y }
    }

    pub fn add(self, other: LatticeVector) -> LatticeVector {
        LatticeVector { x: self.x + other.x, y: self.y + other.y }
    }
}

/// H₁ of a 2-handle addition: a free part plus one cyclic torsion summand.
/// `torsion_order` 0 means no finite part; 1 is also trivial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HomologyGroup {
    pub free_rank: u8,
    pub torsion_order: u64,
}

impl HomologyGroup {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion_order <= 1
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Signed exponent sums of a cyclic word.
pub fn abelianize(w: &CyclicWord) -> LatticeVector {
    let mut v = LatticeVector::new(0, 0);
    for l in w.letters() {
        match l.gen {
            Gen::A => v.x += l.sign as i64,
            Gen::B => v.y += l.sign as i64,
        }
    }
    v
}

/// H₁ of H[R] where [R] = r: the quotient Z²/⟨r⟩.
pub fn two_handle_homology(r: LatticeVector) -> HomologyGroup {
    if r.x == 0 && r.y == 0 {
        HomologyGroup { free_rank: 2, torsion_order: 0 }
    } else {
        HomologyGroup { free_rank: 1, torsion_order: gcd(r.x.unsigned_abs(), r.y.unsigned_abs()) }
    }
}

/// Signed determinant of the 2×2 matrix with rows u, w. Classification keeps
/// the sign (δ = ±1 enters the cabling coordinates).
pub fn det(u: LatticeVector, w: LatticeVector) -> i64 {
    u.x * w.y - u.y * w.x
}

/// True iff H[R,M] is an integral homology sphere: |det([r],[m])| = 1.
pub fn is_homology_sphere_pair(r: LatticeVector, m: LatticeVector) -> bool {
    det(r, m).unsigned_abs() == 1
}

/// |U⊥ ∘ W| = |u.x·w.y − u.y·w.x|, the absolute determinant of [u; w].
pub fn perp_coefficient(u: LatticeVector, w: LatticeVector) -> u64 {
    det(u, w).unsigned_abs()
}
