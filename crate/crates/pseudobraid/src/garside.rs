//! Left-greedy canonical forms for the classical braid group `B_n`.
//!
//! An element is written `Δ^k · A_1 ⋯ A_l` where `Δ` is the half twist and
//! each `A_i` is a permutation braid (a positive braid in which any two
//! strands cross at most once). The factorization is left-greedy: each factor
//! absorbs the largest permutation-braid head of what follows. Two classical
//! braid words are equal in `B_n` exactly when their normal forms agree
//! componentwise, which is the equality decision used throughout the crate.
//!
//! Permutation braids are stored as their strand permutations. Left
//! divisibility among them is inversion-set containment, so heads and meets
//! are computed by peeling adjacent transpositions.

use crate::word::{Letter, LetterKind, Permutation, Word};
use crate::Error;

/// A permutation braid: the positive braid on `n` strands in which strands
/// `i`, `j` cross exactly once when the permutation inverts them and not at
/// all otherwise. The half twist `Δ` corresponds to the order-reversing
/// permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationBraid {
    perm: Permutation,
}

impl PermutationBraid {
    pub fn identity(n: usize) -> Self {
        PermutationBraid {
            perm: Permutation::identity(n),
        }
    }

    /// The braid generator `σ_index` (1-based index).
    pub fn generator(n: usize, index: usize) -> Self {
        let mut perm = Permutation::identity(n);
        perm.swap_positions(index - 1);
        PermutationBraid { perm }
    }

    /// The half twist `Δ` on `n` strands.
    pub fn delta(n: usize) -> Self {
        PermutationBraid {
            perm: Permutation::new((0..n).rev().collect()).expect("reversal is a permutation"),
        }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    /// Word length of the braid: the inversion count of its permutation.
    pub fn crossing_count(&self) -> usize {
        let im = self.perm.images();
        let mut count = 0;
        for i in 0..im.len() {
            for j in i + 1..im.len() {
                if im[i] > im[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        self.perm
            .images()
            .iter()
            .enumerate()
            .all(|(i, &v)| v == n - 1 - i)
    }

    /// `σ_{i+1}` (0-based `i`) left-divides this braid, i.e. the strands
    /// starting at positions `i`, `i+1` cross.
    fn has_descent(&self, i: usize) -> bool {
        self.perm.image(i) > self.perm.image(i + 1)
    }

    /// Whether appending `σ_{i+1}` (0-based `i`) keeps the braid a
    /// permutation braid: the strands ending at positions `i`, `i+1` must not
    /// have crossed yet.
    fn can_append(&self, i: usize) -> bool {
        let inv = self.perm.inverse();
        inv.image(i) < inv.image(i + 1)
    }

    /// Conjugation by `Δ` (an involution on permutation braids): flips
    /// positions and values through the order reversal.
    pub fn flip(&self) -> Self {
        let n = self.n();
        let im = self.perm.images();
        let images = (0..n).map(|i| n - 1 - im[n - 1 - i]).collect();
        PermutationBraid {
            perm: Permutation::new(images).expect("flip of a permutation"),
        }
    }

    /// The canonical positive word spelling this braid: repeatedly emits the
    /// smallest descent.
    pub fn to_letters(&self) -> Vec<Letter> {
        let mut rest = self.clone();
        let mut letters = Vec::with_capacity(rest.crossing_count());
        loop {
            let n = rest.n();
            let Some(i) = (0..n - 1).find(|&i| rest.has_descent(i)) else {
                break;
            };
            letters.push(Letter::sigma(i + 1));
            rest.perm.swap_positions(i);
        }
        letters
    }
}

/// The left-greedy canonical form `Δ^inf · factors` of a `B_n` element.
/// Factors are permutation braids, none equal to the identity or to `Δ`,
/// and each consecutive pair is left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<PermutationBraid>,
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm {
            strands,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The power of `Δ` in front (the infimum of the element).
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    pub fn is_identity_element(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Canonical serialization `k|images/images/…`, images 1-based decimal
    /// separated by commas. Stable across runs; used as the group-ring key.
    pub fn serialize(&self) -> String {
        let mut s = format!("{}|", self.inf);
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|f| {
                f.perm()
                    .images()
                    .iter()
                    .map(|&v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        s.push_str(&parts.join("/"));
        s
    }

    /// Group multiplication: `self · other`, renormalized.
    pub fn product(&self, other: &NormalForm) -> Result<NormalForm, Error> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        // Δ^a A · Δ^b B  =  Δ^{a+b} τ^b(A) B  with τ = conjugation by Δ.
        let mut factors: Vec<PermutationBraid> = if other.inf % 2 == 0 {
            self.factors.clone()
        } else {
            self.factors.iter().map(PermutationBraid::flip).collect()
        };
        factors.extend_from_slice(&other.factors);
        let (extra, factors) = normalize_factors(factors);
        Ok(NormalForm {
            strands: self.strands,
            inf: self.inf + other.inf + extra,
            factors,
        })
    }

    /// The inverse element.
    pub fn inverse(&self) -> NormalForm {
        // (Δ^k A_1 ⋯ A_l)⁻¹ = A_l⁻¹ ⋯ A_1⁻¹ Δ^{-k}; each A⁻¹ = Δ⁻¹ (τ-twisted
        // complement). Build from letters of the reversed factors instead:
        // simpler and still exact.
        let mut letters: Vec<Letter> = Vec::new();
        for f in self.factors.iter().rev() {
            let mut ls = f.to_letters();
            ls.reverse();
            for l in &mut ls {
                *l = l.inverse().expect("positive letter");
            }
            letters.extend(ls);
        }
        let delta_letters = PermutationBraid::delta(self.strands).to_letters();
        if self.inf > 0 {
            for _ in 0..self.inf {
                let mut ls = delta_letters.clone();
                ls.reverse();
                for l in &mut ls {
                    *l = l.inverse().expect("positive letter");
                }
                letters.extend(ls);
            }
        } else {
            for _ in 0..(-self.inf) {
                letters.extend(delta_letters.iter().copied());
            }
        }
        let word = Word::new(self.strands, letters).expect("indices in range");
        normal_form(&word).expect("classical word")
    }
}

/// Makes the adjacent pair `(a, b)` left-weighted by sliding every letter of
/// `b` that `a` can absorb. Returns true if anything moved.
fn make_pair_left_weighted(a: &mut PermutationBraid, b: &mut PermutationBraid) -> bool {
    let n = a.n();
    let mut moved = false;
    loop {
        let mut progressed = false;
        for i in 0..n - 1 {
            if b.has_descent(i) && a.can_append(i) {
                // a := a·σ, b := σ⁻¹·b.
                a.perm.swap_values(i);
                b.perm.swap_positions(i);
                progressed = true;
                moved = true;
            }
        }
        if !progressed {
            return moved;
        }
    }
}

/// Normalizes a sequence of permutation braids into left-greedy form.
/// Returns the number of whole `Δ` factors absorbed plus the remaining
/// factors (none identity, none `Δ`, consecutive pairs left-weighted).
fn normalize_factors(mut factors: Vec<PermutationBraid>) -> (i64, Vec<PermutationBraid>) {
    factors.retain(|f| !f.is_identity());
    loop {
        let mut changed = false;
        for j in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(j + 1);
            let a = &mut left[j];
            let b = &mut right[0];
            if make_pair_left_weighted(a, b) {
                changed = true;
            }
        }
        if changed {
            factors.retain(|f| !f.is_identity());
        } else {
            break;
        }
    }
    // Identities bubbled to the tail and were stripped; Δ factors bubbled to
    // the head where they join the Δ power.
    let delta_count = factors.iter().take_while(|f| f.is_delta()).count();
    factors.drain(..delta_count);
    (delta_count as i64, factors)
}

/// The left-greedy normal form of a classical braid word.
///
/// Negative letters are rewritten `σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹)` and the `Δ⁻¹`
/// powers slide to the front through the flip automorphism, leaving a power
/// of `Δ` and a positive factor sequence to normalize.
pub fn normal_form(w: &Word) -> Result<NormalForm, Error> {
    if !w.is_classical() {
        return Err(Error::PreLetterPresent);
    }
    let n = w.strands();
    let mut inf: i64 = 0;
    let mut factors: Vec<PermutationBraid> = Vec::with_capacity(w.len());
    for l in w.letters() {
        match l.kind {
            LetterKind::SigmaPos => {
                factors.push(PermutationBraid::generator(n, l.index));
            }
            LetterKind::SigmaNeg => {
                // w · σ⁻¹ = w · Δ⁻¹ · (Δσ⁻¹) = Δ⁻¹ · τ(w) · (Δσ⁻¹)
                inf -= 1;
                for f in &mut factors {
                    *f = f.flip();
                }
                let mut r = PermutationBraid::delta(n);
                r.perm.swap_values(l.index - 1);
                factors.push(r);
            }
            LetterKind::Pre => unreachable!("checked classical"),
        }
    }
    let (extra, factors) = normalize_factors(factors);
    Ok(NormalForm {
        strands: n,
        inf: inf + extra,
        factors,
    })
}

/// Whether two classical braid words spell the same element of `B_n`.
pub fn nf_equal(u: &Word, v: &Word) -> Result<bool, Error> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(normal_form(u)? == normal_form(v)?)
}

/// A classical braid word spelling the element of the given normal form.
///
/// `Δ` is emitted as the fixed word `σ1 σ2 σ1 σ3 σ2 σ1 …`; a negative power
/// emits the inverse letters of that word reversed. Factors follow as their
/// canonical positive words.
pub fn nf_to_word(nf: &NormalForm) -> Word {
    let n = nf.strands();
    let delta_letters = PermutationBraid::delta(n).to_letters();
    let mut letters = Vec::new();
    if nf.inf() >= 0 {
        for _ in 0..nf.inf() {
            letters.extend(delta_letters.iter().copied());
        }
    } else {
        for _ in 0..(-nf.inf()) {
            letters.extend(
                delta_letters
                    .iter()
                    .rev()
                    .map(|l| l.inverse().expect("positive")),
            );
        }
    }
    for f in nf.factors() {
        letters.extend(f.to_letters());
    }
    Word::new(n, letters).expect("indices in range")
}
