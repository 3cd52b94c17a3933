//! Invariants of the closure of a pseudo braid.
//!
//! Closing a braid joins top endpoints to bottom endpoints, so the closure's
//! components correspond to the cycles of the underlying strand permutation.
//! Resolving every pre-crossing to an over- or under-crossing gives a
//! classical link; enumerating all `2^k` resolutions with uniform weight
//! `2^{-k}` and recording the component count and pairwise linking numbers of
//! each yields the [`LinkingProfile`], a computable invariant of the closure
//! that is preserved by all four Markov moves.
//!
//! Linking numbers are stored doubled (the raw signed sum of crossings
//! between two components) so every stored value is an integer, and weights
//! are exact dyadic rationals, so profile equality is exact.

use std::collections::BTreeMap;
use std::fmt;

use crate::word::{underlying_permutation, Letter, LetterKind, Word};
use crate::Error;

/// Default bound on the pre-crossing count for full resolution enumeration.
pub const DEFAULT_RESOLUTION_CAP: usize = 20;

/// An exact nonnegative rational with a power-of-two denominator,
/// kept normalized (odd numerator, or zero as `0/1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dyadic {
    numerator: u64,
    log2_denominator: u32,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            numerator: 0,
            log2_denominator: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            numerator: 1,
            log2_denominator: 0,
        }
    }

    /// `1 / 2^k`.
    pub fn half_power(k: u32) -> Self {
        Dyadic {
            numerator: 1,
            log2_denominator: k,
        }
    }

    pub fn new(numerator: u64, log2_denominator: u32) -> Self {
        let mut d = Dyadic {
            numerator,
            log2_denominator,
        };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.numerator == 0 {
            self.log2_denominator = 0;
            return;
        }
        while self.numerator.is_multiple_of(2) && self.log2_denominator > 0 {
            self.numerator /= 2;
            self.log2_denominator -= 1;
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let k = self.log2_denominator.max(other.log2_denominator);
        let a = self.numerator << (k - self.log2_denominator);
        let b = other.numerator << (k - other.log2_denominator);
        Dyadic::new(a + b, k)
    }

    pub fn is_one(&self) -> bool {
        self.numerator == 1 && self.log2_denominator == 0
    }
}

impl fmt::Display for Dyadic {
    /// Renders as `numerator/denominator`, e.g. `3/8` or `1/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, 1u64 << self.log2_denominator)
    }
}

/// An over/under choice for every pre-crossing of a word, in letter order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    choices: Vec<i8>,
}

impl Resolution {
    /// Builds from signs; every entry must be `+1` or `-1`.
    pub fn new(choices: Vec<i8>) -> Self {
        assert!(
            choices.iter().all(|&c| c == 1 || c == -1),
            "choices must be ±1"
        );
        Resolution { choices }
    }

    /// The `bits`-indexed resolution of `k` pre-crossings: bit `i` set means
    /// the `i`-th pre-crossing resolves positively.
    pub fn from_bits(bits: u64, k: usize) -> Self {
        Resolution {
            choices: (0..k)
                .map(|i| if bits >> i & 1 == 1 { 1 } else { -1 })
                .collect(),
        }
    }

    pub fn choices(&self) -> &[i8] {
        &self.choices
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }
}

/// Number of components of the closure: cycles of the strand permutation.
pub fn component_count(w: &Word) -> usize {
    underlying_permutation(w).cycles().len()
}

/// Replaces each pre-crossing with `σ_i` (choice `+1`) or `σ_i⁻¹` (`−1`).
pub fn resolve(w: &Word, r: &Resolution) -> Result<Word, Error> {
    if r.len() != w.pre_count() {
        return Err(Error::ResolutionLengthMismatch {
            expected: w.pre_count(),
            got: r.len(),
        });
    }
    let mut choices = r.choices().iter();
    let letters = w
        .letters()
        .iter()
        .map(|l| match l.kind {
            LetterKind::Pre => {
                if *choices.next().expect("length checked") > 0 {
                    Letter::sigma(l.index)
                } else {
                    Letter::sigma_inv(l.index)
                }
            }
            _ => *l,
        })
        .collect();
    Word::new(w.strands(), letters)
}

/// Doubled pairwise linking numbers of the closure of a classical word:
/// for each unordered pair of distinct components, the signed sum of the
/// crossings between them, sorted ascending. One-component closures give an
/// empty sequence.
pub fn doubled_linking_numbers(w: &Word) -> Result<Vec<i64>, Error> {
    if !w.is_classical() {
        return Err(Error::PreLetterPresent);
    }
    let n = w.strands();
    let perm = underlying_permutation(w);
    let cycles = perm.cycles();
    // component_of[strand] = index of the cycle containing that strand.
    let mut component_of = vec![0usize; n];
    for (ci, cycle) in cycles.iter().enumerate() {
        for &s in cycle {
            component_of[s] = ci;
        }
    }
    let k = cycles.len();
    let mut pair_sums: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for a in 0..k {
        for b in a + 1..k {
            pair_sums.insert((a, b), 0);
        }
    }
    // Walk the word tracking which strand occupies each position.
    let mut occupant: Vec<usize> = (0..n).collect();
    for l in w.letters() {
        let i = l.index - 1;
        let (sa, sb) = (occupant[i], occupant[i + 1]);
        let (ca, cb) = (component_of[sa], component_of[sb]);
        if ca != cb {
            let key = (ca.min(cb), ca.max(cb));
            let sign = match l.kind {
                LetterKind::SigmaPos => 1,
                LetterKind::SigmaNeg => -1,
                LetterKind::Pre => unreachable!("checked classical"),
            };
            *pair_sums.get_mut(&key).expect("pair present") += sign;
        }
        occupant.swap(i, i + 1);
    }
    let mut values: Vec<i64> = pair_sums.into_values().collect();
    values.sort_unstable();
    Ok(values)
}

/// One merged profile entry: a closure shape occurring with a given weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub component_count: usize,
    pub doubled_linkings: Vec<i64>,
    pub weight: Dyadic,
}

/// The weighted resolution profile of a word's closure: over all `2^k`
/// resolutions with uniform weight, the merged multiset of
/// `(component count, doubled linking numbers)` data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingProfile {
    entries: Vec<ProfileEntry>,
}

impl LinkingProfile {
    /// Entries sorted by `(component_count, doubled_linkings)`.
    pub fn entries(&self) -> &[ProfileEntry] {
        &self.entries
    }

    /// Exact sum of all entry weights.
    pub fn total_weight(&self) -> Dyadic {
        self.entries
            .iter()
            .fold(Dyadic::zero(), |acc, e| acc.add(&e.weight))
    }
}

/// Computes the linking profile, enumerating all resolutions.
pub fn linking_profile(w: &Word) -> Result<LinkingProfile, Error> {
    linking_profile_capped(w, DEFAULT_RESOLUTION_CAP)
}

/// [`linking_profile`] with an explicit cap on the pre-crossing count.
pub fn linking_profile_capped(w: &Word, cap: usize) -> Result<LinkingProfile, Error> {
    let k = w.pre_count();
    if k > cap {
        return Err(Error::ResolutionCapExceeded { pre_count: k, cap });
    }
    let weight = Dyadic::half_power(k as u32);
    let mut merged: BTreeMap<(usize, Vec<i64>), Dyadic> = BTreeMap::new();
    for bits in 0..(1u64 << k) {
        let resolved = resolve(w, &Resolution::from_bits(bits, k))?;
        let components = component_count(&resolved);
        let linkings = doubled_linking_numbers(&resolved)?;
        merged
            .entry((components, linkings))
            .and_modify(|acc| *acc = acc.add(&weight))
            .or_insert(weight);
    }
    let entries = merged
        .into_iter()
        .map(
            |((component_count, doubled_linkings), weight)| ProfileEntry {
                component_count,
                doubled_linkings,
                weight,
            },
        )
        .collect();
    Ok(LinkingProfile { entries })
}
