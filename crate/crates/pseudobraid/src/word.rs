//! Words over the generators of the pseudo braid monoid.
//!
//! A [`Word`] is a finite sequence of [`Letter`]s together with an explicit
//! strand count `n`. Letters are the classical crossings `σ_i`, `σ_i⁻¹` and
//! the pre-crossings `p_i` for `1 ≤ i ≤ n−1`. The empty word is the monoid
//! identity. The strand count is carried on every word (never inferred from
//! the largest index) so that the identities of distinct monoids stay
//! distinct values; stabilization moves change `n`.
//!
//! The text grammar is fixed: tokens separated by ASCII spaces, each token
//! one of `s<i>` (positive crossing), `S<i>` (negative crossing) or `p<i>`
//! (pre-crossing), indices decimal and 1-based. Singular-flavored input may
//! write `t<i>` for its crossing markers; these are normalized to `p<i>`,
//! which is the content of the relabeling isomorphism between the two
//! presentations.

use crate::Error;

/// The three kinds of generator occurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    /// `σ_i`: strand `i` crosses over strand `i+1`.
    SigmaPos,
    /// `σ_i⁻¹`: strand `i` crosses under strand `i+1`.
    SigmaNeg,
    /// `p_i`: an unresolved crossing of strands `i` and `i+1`.
    Pre,
}

/// One generator occurrence; `index` is 1-based with `1 ≤ index ≤ n−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: usize,
}

impl Letter {
    pub fn sigma(index: usize) -> Self {
        Letter {
            kind: LetterKind::SigmaPos,
            index,
        }
    }

    pub fn sigma_inv(index: usize) -> Self {
        Letter {
            kind: LetterKind::SigmaNeg,
            index,
        }
    }

    pub fn pre(index: usize) -> Self {
        Letter {
            kind: LetterKind::Pre,
            index,
        }
    }

    pub fn is_pre(&self) -> bool {
        self.kind == LetterKind::Pre
    }

    /// The inverse letter, defined only for classical crossings.
    pub fn inverse(&self) -> Option<Letter> {
        match self.kind {
            LetterKind::SigmaPos => Some(Letter::sigma_inv(self.index)),
            LetterKind::SigmaNeg => Some(Letter::sigma(self.index)),
            LetterKind::Pre => None,
        }
    }

    /// True if `self` and `other` are a cancelling `σ σ⁻¹` or `σ⁻¹ σ` pair.
    pub fn cancels(&self, other: &Letter) -> bool {
        self.index == other.index
            && matches!(
                (self.kind, other.kind),
                (LetterKind::SigmaPos, LetterKind::SigmaNeg)
                    | (LetterKind::SigmaNeg, LetterKind::SigmaPos)
            )
    }

    fn token(&self) -> String {
        let c = match self.kind {
            LetterKind::SigmaPos => 's',
            LetterKind::SigmaNeg => 'S',
            LetterKind::Pre => 'p',
        };
        format!("{c}{}", self.index)
    }
}

/// Direction of the relabeling isomorphism between the singular and pseudo
/// presentations (`τ_i ↔ p_i`, identity on `σ` letters).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelabelDirection {
    SingularToPseudo,
    PseudoToSingular,
}

/// An element of the pseudo braid monoid on `strands` strands, spelled as a
/// sequence of generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    strands: usize,
    letters: Vec<Letter>,
}

impl Word {
    /// Builds a word, validating the strand count and every letter index.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, Error> {
        if strands < 2 {
            return Err(Error::TooFewStrands { strands });
        }
        for l in &letters {
            if l.index < 1 || l.index > strands - 1 {
                return Err(Error::IndexOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(Word { strands, letters })
    }

    /// The identity of the monoid on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self, Error> {
        Word::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    /// True if the word contains no pre-crossing, i.e. spells a classical braid.
    pub fn is_classical(&self) -> bool {
        !self.letters.iter().any(Letter::is_pre)
    }

    /// Number of pre-crossing letters.
    pub fn pre_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_pre()).count()
    }
}

/// Parses the fixed token grammar into a word on `strands` strands.
///
/// Accepts `t<i>` as a synonym for `p<i>` so singular-flavored text parses
/// directly; the result is always stored in pseudo flavor.
pub fn parse(text: &str, strands: usize) -> Result<Word, Error> {
    if strands < 2 {
        return Err(Error::TooFewStrands { strands });
    }
    let mut letters = Vec::new();
    for tok in text.split(' ').filter(|t| !t.is_empty()) {
        let kind = match tok.bytes().next() {
            Some(b's') => LetterKind::SigmaPos,
            Some(b'S') => LetterKind::SigmaNeg,
            Some(b'p') | Some(b't') => LetterKind::Pre,
            _ => {
                return Err(Error::MalformedToken {
                    token: tok.to_string(),
                })
            }
        };
        let digits = &tok[1..];
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::MalformedToken {
                token: tok.to_string(),
            });
        }
        let index: usize = digits.parse().map_err(|_| Error::MalformedToken {
            token: tok.to_string(),
        })?;
        if index < 1 || index > strands - 1 {
            return Err(Error::IndexOutOfRange { index, strands });
        }
        letters.push(Letter { kind, index });
    }
    Word::new(strands, letters)
}

/// Renders a word as canonical token text; inverse of [`parse`].
pub fn render(w: &Word) -> String {
    w.letters
        .iter()
        .map(Letter::token)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Concatenation, the monoid product. Both words must live on the same
/// number of strands.
pub fn concat(u: &Word, v: &Word) -> Result<Word, Error> {
    if u.strands != v.strands {
        return Err(Error::StrandMismatch {
            left: u.strands,
            right: v.strands,
        });
    }
    let mut letters = u.letters.clone();
    letters.extend_from_slice(&v.letters);
    Ok(Word {
        strands: u.strands,
        letters,
    })
}

/// The relabeling isomorphism between the singular and pseudo presentations.
///
/// Both monoids share one presentation shape, so after `t` tokens are
/// normalized at parse time the two flavors share their representation and
/// the isomorphism acts as the identity on stored words. It is kept as an
/// explicit operation (and trivially an involution) so that flavor changes
/// are visible at call sites.
pub fn relabel(w: &Word, _direction: RelabelDirection) -> Word {
    w.clone()
}

/// A permutation of `{0, …, n−1}` (strand positions are 0-based internally;
/// rendering is 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from images, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of position `i` (0-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` followed by `next`: `(self ⨟ next)(i) = next(self(i))`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), next.n());
        Permutation {
            images: self.images.iter().map(|&v| next.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Swaps the images of positions `i` and `i+1` (pre-composition with the
    /// adjacent transposition).
    pub fn swap_positions(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// Swaps the values `i` and `i+1` wherever they occur (post-composition
    /// with the adjacent transposition).
    pub fn swap_values(&mut self, i: usize) {
        let a = self
            .images
            .iter()
            .position(|&v| v == i)
            .expect("value present");
        let b = self
            .images
            .iter()
            .position(|&v| v == i + 1)
            .expect("value present");
        self.images.swap(a, b);
    }

    /// Cycle decomposition; each cycle lists 0-based positions, cycles sorted
    /// by their smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

/// The strand permutation spelled by a word: each letter exchanges positions
/// `i` and `i+1`, letters acting left to right.
pub fn underlying_permutation(w: &Word) -> Permutation {
    let mut perm = Permutation::identity(w.strands);
    // Track positions: perm(i) = where the strand starting at i currently sits.
    // Applying a letter at index i swaps the strands sitting at i-1 and i (0-based).
    for l in &w.letters {
        let i = l.index - 1;
        let a = perm
            .images
            .iter()
            .position(|&v| v == i)
            .expect("position occupied");
        let b = perm
            .images
            .iter()
            .position(|&v| v == i + 1)
            .expect("position occupied");
        perm.images.swap(a, b);
    }
    perm
}

/// Iteratively removes adjacent cancelling `σ σ⁻¹` / `σ⁻¹ σ` pairs until none
/// remain. Pre-crossings are never touched; the result spells the same
/// monoid element.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        if let Some(last) = out.last() {
            if last.cancels(&l) {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    Word {
        strands: w.strands,
        letters: out,
    }
}

/// `(σ-exponent sum, pre-crossing count)`.
pub fn stats(w: &Word) -> (i64, usize) {
    let mut sum = 0i64;
    let mut pre = 0usize;
    for l in &w.letters {
        match l.kind {
            LetterKind::SigmaPos => sum += 1,
            LetterKind::SigmaNeg => sum -= 1,
            LetterKind::Pre => pre += 1,
        }
    }
    (sum, pre)
}
