//! Free-group core for F(A,B): words, reduction, cyclic words, automorphisms
//! built from elementary moves, and a bounded minimal-length search.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// One of the two free generators, dual to the cutting disks of the handlebody.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    A,
    B,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::A => Gen::B,
            Gen::B => Gen::A,
        }
    }
}

/// A single letter: a generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub gen: Gen,
    /// +1 for the generator, -1 for its inverse.
    pub sign: i8,
}

impl Letter {
    pub fn new(gen: Gen, sign: i8) -> Letter {
        debug_assert!(sign == 1 || sign == -1);
        Letter { gen, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, sign: -self.sign }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign == -other.sign
    }

    /// Rank under the fixed letter order A < a < B < b (lowercase = inverse).
    fn rank(self) -> u8 {
        match (self.gen, self.sign) {
            (Gen::A, 1) => 0,
            (Gen::A, _) => 1,
            (Gen::B, 1) => 2,
            (Gen::B, _) => 3,
        }
    }

}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Letter) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Letter) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

/// A word in F(A,B), stored as a letter sequence; not necessarily reduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn generator(gen: Gen) -> Word {
        Word { letters: alloc::vec![Letter::new(gen, 1)] }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    /// Builds a word from signed syllables, e.g. `[(A, 3), (B, -2)]` for A³b².
    /// Zero exponents contribute nothing.
    pub fn from_syllables(syllables: &[(Gen, i64)]) -> Word {
        let mut letters = Vec::new();
        for &(gen, e) in syllables {
            let sign = if e >= 0 { 1 } else { -1 };
            for _ in 0..e.unsigned_abs() {
                letters.push(Letter::new(gen, sign));
            }
        }
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Signed syllable (run-length) decomposition of the linear word.
    pub fn syllables(&self) -> Vec<(Gen, i64)> {
        let mut out: Vec<(Gen, i64)> = Vec::new();
        for l in &self.letters {
            let e = l.sign as i64;
            match out.last_mut() {
                Some((g, run)) if *g == l.gen && (*run > 0) == (e > 0) => *run += e,
                _ => out.push((l.gen, e)),
            }
        }
        out
    }
}

/// Free reduction: cancels adjacent inverse pairs until none remain.
pub fn reduce(w: &Word) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        match stack.last() {
            Some(&top) if top.is_inverse_of(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    Word { letters: stack }
}

/// A reduced cyclic word (conjugacy class representative), stored in the
/// canonical rotation: the lexicographically least rotation under the letter
/// order A < a < B < b.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

/// Error from cyclic canonicalization of a word that reduces to the identity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WordIsTrivial;

impl fmt::Display for WordIsTrivial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "word reduces to the empty word; it has no cyclic form")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WordIsTrivial {}

impl PartialOrd for CyclicWord {
    fn partial_cmp(&self, other: &CyclicWord) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclicWord {
    fn cmp(&self, other: &CyclicWord) -> Ordering {
        let key = |w: &CyclicWord| (w.letters.len(), w.letters.iter().map(|l| l.rank()).collect::<Vec<_>>());
        key(self).cmp(&key(other))
    }
}

impl CyclicWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Cyclic runs: maximal blocks of a single generator with constant sign,
    /// merged across the wrap. The first run starts at the canonical rotation
    /// start unless it is absorbed by the wrap-around run.
    pub fn runs(&self) -> Vec<(Gen, i64)> {
        let mut runs: Vec<(Gen, i64)> = Vec::new();
        for l in &self.letters {
            let e = l.sign as i64;
            match runs.last_mut() {
                Some((g, run)) if *g == l.gen && (*run > 0) == (e > 0) => *run += e,
                _ => runs.push((l.gen, e)),
            }
        }
        if runs.len() > 1 {
            let (g0, e0) = runs[0];
            let &(gl, el) = runs.last().unwrap();
            if g0 == gl && (e0 > 0) == (el > 0) {
                runs[0].1 += el;
                runs.pop();
            }
        }
        runs
    }

    pub fn inverse(&self) -> CyclicWord {
        let inv = Word::from_letters(self.letters.iter().rev().map(|l| l.inverse()).collect());
        cyclic_canonical(&inv).expect("inverse of nonempty cyclic word is nonempty")
    }

    pub fn to_word(&self) -> Word {
        Word { letters: self.letters.clone() }
    }
}

/// Cyclically reduces `w` and returns its canonical rotation.
pub fn cyclic_canonical(w: &Word) -> Result<CyclicWord, WordIsTrivial> {
    let mut letters = reduce(w).letters;
    // Cyclic reduction: cancel across the wrap.
    while letters.len() >= 2 && letters.first().unwrap().is_inverse_of(*letters.last().unwrap()) {
        letters.pop();
        letters.remove(0);
    }
    if letters.is_empty() {
        return Err(WordIsTrivial);
    }
    Ok(CyclicWord { letters: least_rotation(&letters) })
}

fn least_rotation(letters: &[Letter]) -> Vec<Letter> {
    let n = letters.len();
    let mut best = 0usize;
    for cand in 1..n {
        for k in 0..n {
            let a = letters[(best + k) % n].rank();
            let b = letters[(cand + k) % n].rank();
            match b.cmp(&a) {
                Ordering::Less => {
                    best = cand;
                    break;
                }
                Ordering::Greater => break,
                Ordering::Equal => {}
            }
        }
    }
    (0..n).map(|k| letters[(best + k) % n]).collect()
}

fn fmt_syllables(f: &mut fmt::Formatter<'_>, syllables: &[(Gen, i64)]) -> fmt::Result {
    if syllables.is_empty() {
        return write!(f, "1");
    }
    for (i, &(gen, e)) in syllables.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        let sym = match gen {
            Gen::A => 'A',
            Gen::B => 'B',
        };
        if e == 1 {
            write!(f, "{sym}")?;
        } else {
            write!(f, "{sym}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_syllables(f, &self.syllables())
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_syllables(f, &self.to_word().syllables())
    }
}

/// Parse error for the word literal syntax, with a byte position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for WordParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WordParseError {}

/// Parses the word literal syntax: uppercase = generator, lowercase = inverse,
/// optional caret exponents. `"A^3 B^2"`, `"B^-2 A^3"` ≡ `"bbAAA"`.
/// Whitespace is ignored. The result is not reduced.
pub fn parse_word(input: &str) -> Result<Word, WordParseError> {
    let bytes = input.as_bytes();
    let mut i = 0usize;
    let mut syllables: Vec<(Gen, i64)> = Vec::new();
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (gen, base_sign) = match c {
            'A' => (Gen::A, 1i64),
            'a' => (Gen::A, -1),
            'B' => (Gen::B, 1),
            'b' => (Gen::B, -1),
            _ => {
                return Err(WordParseError {
                    position: i,
                    message: alloc::format!("unexpected character {c:?}; expected A, a, B, or b"),
                })
            }
        };
        i += 1;
        let mut exp = 1i64;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let start = i;
            if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                i += 1;
            }
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let text = &input[start..i];
            if text.is_empty() || text == "-" || text == "+" {
                return Err(WordParseError {
                    position: start,
                    message: String::from("expected an integer exponent after '^'"),
                });
            }
            exp = text.parse::<i64>().map_err(|_| WordParseError {
                position: start,
                message: alloc::format!("exponent {text:?} does not fit in a 64-bit integer"),
            })?;
        }
        syllables.push((gen, base_sign * exp));
    }
    Ok(Word::from_syllables(&syllables))
}

/// An elementary Nielsen-type move on F(A,B). In rank two the auxiliary
/// generator of a multiplication move is forced, so only the target is stored.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementaryMove {
    /// X ↦ X·Y^k where Y is the other generator.
    RightMultiply { target: Gen, exponent: i64 },
    /// X ↦ Y^k·X where Y is the other generator.
    LeftMultiply { target: Gen, exponent: i64 },
    /// X ↦ X⁻¹.
    Invert(Gen),
    /// A ↔ B.
    Swap,
}

impl ElementaryMove {
    pub fn inverse(self) -> ElementaryMove {
        match self {
            ElementaryMove::RightMultiply { target, exponent } => {
                ElementaryMove::RightMultiply { target, exponent: -exponent }
            }
            ElementaryMove::LeftMultiply { target, exponent } => {
                ElementaryMove::LeftMultiply { target, exponent: -exponent }
            }
            other => other,
        }
    }

    /// Image of each generator under this single move.
    fn images(self) -> (Word, Word) {
        let a = Word::generator(Gen::A);
        let b = Word::generator(Gen::B);
        match self {
            ElementaryMove::RightMultiply { target: Gen::A, exponent } => {
                (Word::from_syllables(&[(Gen::A, 1), (Gen::B, exponent)]), b)
            }
            ElementaryMove::RightMultiply { target: Gen::B, exponent } => {
                (a, Word::from_syllables(&[(Gen::B, 1), (Gen::A, exponent)]))
            }
            ElementaryMove::LeftMultiply { target: Gen::A, exponent } => {
                (Word::from_syllables(&[(Gen::B, exponent), (Gen::A, 1)]), b)
            }
            ElementaryMove::LeftMultiply { target: Gen::B, exponent } => {
                (a, Word::from_syllables(&[(Gen::A, exponent), (Gen::B, 1)]))
            }
            ElementaryMove::Invert(Gen::A) => (a.inverse(), b),
            ElementaryMove::Invert(Gen::B) => (a, b.inverse()),
            ElementaryMove::Swap => (b, a),
        }
    }
}

/// Substitutes `img_a` for A and `img_b` for B in `w` and reduces.
fn substitute(w: &Word, img_a: &Word, img_b: &Word) -> Word {
    let inv_a = img_a.inverse();
    let inv_b = img_b.inverse();
    let mut out = Word::empty();
    for &l in w.letters() {
        let piece = match (l.gen, l.sign) {
            (Gen::A, 1) => img_a,
            (Gen::A, _) => &inv_a,
            (Gen::B, 1) => img_b,
            (Gen::B, _) => &inv_b,
        };
        out = out.concat(piece);
    }
    reduce(&out)
}

/// An automorphism of F(A,B) given as a composition of elementary moves,
/// applied left-to-right.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeAutomorphism {
    moves: Vec<ElementaryMove>,
}

impl FreeAutomorphism {
    pub fn identity() -> FreeAutomorphism {
        FreeAutomorphism { moves: Vec::new() }
    }

    pub fn from_moves(moves: Vec<ElementaryMove>) -> FreeAutomorphism {
        FreeAutomorphism { moves }
    }

    /// X ↦ X·Y^k.
    pub fn right_multiply(target: Gen, exponent: i64) -> FreeAutomorphism {
        FreeAutomorphism { moves: alloc::vec![ElementaryMove::RightMultiply { target, exponent }] }
    }

    /// X ↦ Y^k·X.
    pub fn left_multiply(target: Gen, exponent: i64) -> FreeAutomorphism {
        FreeAutomorphism { moves: alloc::vec![ElementaryMove::LeftMultiply { target, exponent }] }
    }

    pub fn invert(gen: Gen) -> FreeAutomorphism {
        FreeAutomorphism { moves: alloc::vec![ElementaryMove::Invert(gen)] }
    }

    pub fn swap() -> FreeAutomorphism {
        FreeAutomorphism { moves: alloc::vec![ElementaryMove::Swap] }
    }

    pub fn moves(&self) -> &[ElementaryMove] {
        &self.moves
    }

    /// Composition: `self` first, then `other`.
    pub fn then(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&other.moves);
        FreeAutomorphism { moves }
    }

    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism { moves: self.moves.iter().rev().map(|m| m.inverse()).collect() }
    }

    /// Reduced images of (A, B) under the full composition.
    pub fn generator_images(&self) -> (Word, Word) {
        let mut img_a = Word::generator(Gen::A);
        let mut img_b = Word::generator(Gen::B);
        for m in &self.moves {
            let (ma, mb) = m.images();
            img_a = substitute(&img_a, &ma, &mb);
            img_b = substitute(&img_b, &ma, &mb);
        }
        (img_a, img_b)
    }

    /// Image of a linear word under the composition, reduced.
    pub fn apply_word(&self, w: &Word) -> Word {
        let (img_a, img_b) = self.generator_images();
        substitute(w, &img_a, &img_b)
    }

    /// Induced matrix on H₁ ≅ Z²: columns are the abelianized generator
    /// images, so abelianize(φ(w)) = M · abelianize(w).
    pub fn abelianization_matrix(&self) -> [[i64; 2]; 2] {
        let (img_a, img_b) = self.generator_images();
        let sums = |w: &Word| {
            let mut x = 0i64;
            let mut y = 0i64;
            for l in w.letters() {
                match l.gen {
                    Gen::A => x += l.sign as i64,
                    Gen::B => y += l.sign as i64,
                }
            }
            (x, y)
        };
        let (aa, ab) = sums(&img_a);
        let (ba, bb) = sums(&img_b);
        [[aa, ba], [ab, bb]]
    }
}

/// Applies φ to a cyclic word; the image is reduced and canonicalized.
pub fn apply_automorphism(w: &CyclicWord, phi: &FreeAutomorphism) -> CyclicWord {
    let image = phi.apply_word(&w.to_word());
    cyclic_canonical(&image).expect("automorphic image of a nontrivial conjugacy class is nontrivial")
}

/// Result of the bounded minimal-length search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalLengthResult {
    /// Least cyclic length found within the budget.
    pub length: usize,
    /// A word realizing that length.
    pub achiever: CyclicWord,
    /// True when the search stabilized: the frontier emptied, or no single
    /// move from the final frontier produces anything shorter than `length`.
    pub exhausted: bool,
}

fn search_moves() -> [ElementaryMove; 7] {
    [
        ElementaryMove::RightMultiply { target: Gen::A, exponent: 1 },
        ElementaryMove::RightMultiply { target: Gen::A, exponent: -1 },
        ElementaryMove::RightMultiply { target: Gen::B, exponent: 1 },
        ElementaryMove::RightMultiply { target: Gen::B, exponent: -1 },
        ElementaryMove::Invert(Gen::A),
        ElementaryMove::Invert(Gen::B),
        ElementaryMove::Swap,
    ]
}

fn single_move_image(w: &CyclicWord, m: ElementaryMove) -> CyclicWord {
    let (ma, mb) = m.images();
    let image = substitute(&w.to_word(), &ma, &mb);
    cyclic_canonical(&image).expect("automorphic image of a nontrivial conjugacy class is nontrivial")
}

struct BoundedSearch {
    visited: BTreeSet<CyclicWord>,
    frontier: BTreeSet<CyclicWord>,
    best: (usize, CyclicWord),
    exhausted: bool,
}

/// Breadth-first search over images of `w` under compositions of elementary
/// moves at unit exponent, pruning children longer than their parent.
fn bounded_search(w: &CyclicWord, depth_budget: usize) -> BoundedSearch {
    let mut visited: BTreeSet<CyclicWord> = BTreeSet::new();
    visited.insert(w.clone());
    let mut frontier: BTreeSet<CyclicWord> = BTreeSet::new();
    frontier.insert(w.clone());
    let mut best = (w.len(), w.clone());
    let mut exhausted = false;
    for _ in 0..depth_budget {
        let mut next: BTreeSet<CyclicWord> = BTreeSet::new();
        for v in &frontier {
            for m in search_moves() {
                let u = single_move_image(v, m);
                if u.len() <= v.len() && !visited.contains(&u) {
                    visited.insert(u.clone());
                    if (u.len(), &u) < (best.0, &best.1) {
                        best = (u.len(), u.clone());
                    }
                    next.insert(u);
                }
            }
        }
        if next.is_empty() {
            exhausted = true;
            break;
        }
        frontier = next;
    }
    if !exhausted {
        exhausted = frontier
            .iter()
            .all(|v| search_moves().into_iter().all(|m| single_move_image(v, m).len() >= best.0));
    }
    BoundedSearch { visited, frontier, best, exhausted }
}

/// Bounded Whitehead-type search for the minimal cyclic length of `w` under
/// automorphisms of F(A,B). Not a complete algorithm: only length-non-
/// increasing move sequences up to `depth_budget` are explored.
pub fn minimal_length(w: &CyclicWord, depth_budget: usize) -> MinimalLengthResult {
    let s = bounded_search(w, depth_budget);
    let _ = &s.frontier;
    let _ = &s.visited;
    MinimalLengthResult { length: s.best.0, achiever: s.best.1, exhausted: s.exhausted }
}

/// True when the cyclic word has the shape A^p B^q with |p| ≥ 2 and |q| ≥ 2;
/// returns (|p|, |q|).
fn two_syllable_form(w: &CyclicWord) -> Option<(u64, u64)> {
    let runs = w.runs();
    if runs.len() != 2 || runs[0].0 == runs[1].0 {
        return None;
    }
    let (p, q) = match runs[0].0 {
        Gen::A => (runs[0].1, runs[1].1),
        Gen::B => (runs[1].1, runs[0].1),
    };
    if p.unsigned_abs() >= 2 && q.unsigned_abs() >= 2 {
        Some((p.unsigned_abs(), q.unsigned_abs()))
    } else {
        None
    }
}

/// Bounded search for an automorphic image of the form A^p B^q with
/// |p|, |q| ≥ 2 (a two-exceptional-fiber Seifert relator). `None` means "not
/// detected within budget", not a disproof.
pub fn seifert_relator_form(w: &CyclicWord, depth_budget: usize) -> Option<(u64, u64)> {
    if let Some(pq) = two_syllable_form(w) {
        return Some(pq);
    }
    let s = bounded_search(w, depth_budget);
    // Deterministic: visited is ordered, and the form's (p,q) is rotation-free.
    s.visited.iter().find_map(two_syllable_form)
}
