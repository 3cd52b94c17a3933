//! A bounded breadth-first equality prover over the defining relations.
//!
//! This is deliberately independent of the group-ring machinery: it knows
//! nothing about canonical forms and decides nothing. It enumerates every
//! instance of the defining relations at a given strand count and searches
//! the rewrite graph they generate — relations applied at any position in
//! either direction, plus insertion and deletion of cancelling `σ` pairs —
//! out to a depth bound, never visiting words longer than a length bound.
//! `Equal` answers are always sound; `Unknown` means the budget ran out.
//!
//! Length-increasing moves (pair insertions) are part of the search because
//! equality between words with invertible generators can require detours
//! through longer words; the length bound is what keeps the space finite.

use std::collections::HashSet;

use crate::word::{Letter, LetterKind, Word};
use crate::Error;

/// Which relation schema an instance came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationTag {
    /// `p_i p_j = p_j p_i` for `|i−j| ≥ 2`.
    PreCommute,
    /// `p_i σ_j^{±1} = σ_j^{±1} p_i` for `|i−j| ≥ 2`.
    MixedCommute,
    /// `p_i σ_i^{±1} = σ_i^{±1} p_i`.
    PreSigmaCommute,
    /// `σ_i σ_{i+1} p_i = p_{i+1} σ_i σ_{i+1}`.
    SlideUp,
    /// `σ_{i+1} σ_i p_{i+1} = p_i σ_{i+1} σ_i`.
    SlideDown,
    /// `σ_i^{±1} σ_j^{±1} = σ_j^{±1} σ_i^{±1}` for `|i−j| ≥ 2`.
    FarCommute,
    /// `σ_{i+1} σ_i σ_{i+1} = σ_i σ_{i+1} σ_i`.
    BraidRelation,
    /// `σ_i^{±1} σ_i^{∓1} = ε` (both orders).
    Cancellation,
}

/// One concrete relation instance: `lhs = rhs` holds in `PM_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub lhs: Word,
    pub rhs: Word,
    pub tag: RelationTag,
}

fn instance(n: usize, tag: RelationTag, lhs: Vec<Letter>, rhs: Vec<Letter>) -> RelationInstance {
    RelationInstance {
        lhs: Word::new(n, lhs).expect("relation letters in range"),
        rhs: Word::new(n, rhs).expect("relation letters in range"),
        tag,
    }
}

/// Every instance of every defining relation schema valid at `n` strands,
/// including both sign orientations where the schema carries `±`.
pub fn relation_set(n: usize) -> Result<Vec<RelationInstance>, Error> {
    if n < 2 {
        return Err(Error::TooFewStrands { strands: n });
    }
    let sigma = |i: usize, positive: bool| {
        if positive {
            Letter::sigma(i)
        } else {
            Letter::sigma_inv(i)
        }
    };
    let mut out = Vec::new();
    let top = n - 1;
    for i in 1..=top {
        for j in i + 2..=top {
            out.push(instance(
                n,
                RelationTag::PreCommute,
                vec![Letter::pre(i), Letter::pre(j)],
                vec![Letter::pre(j), Letter::pre(i)],
            ));
        }
    }
    for i in 1..=top {
        for j in 1..=top {
            if i.abs_diff(j) < 2 {
                continue;
            }
            for pos in [true, false] {
                out.push(instance(
                    n,
                    RelationTag::MixedCommute,
                    vec![Letter::pre(i), sigma(j, pos)],
                    vec![sigma(j, pos), Letter::pre(i)],
                ));
            }
        }
    }
    for i in 1..=top {
        for pos in [true, false] {
            out.push(instance(
                n,
                RelationTag::PreSigmaCommute,
                vec![Letter::pre(i), sigma(i, pos)],
                vec![sigma(i, pos), Letter::pre(i)],
            ));
        }
    }
    for i in 1..top {
        out.push(instance(
            n,
            RelationTag::SlideUp,
            vec![Letter::sigma(i), Letter::sigma(i + 1), Letter::pre(i)],
            vec![Letter::pre(i + 1), Letter::sigma(i), Letter::sigma(i + 1)],
        ));
        out.push(instance(
            n,
            RelationTag::SlideDown,
            vec![Letter::sigma(i + 1), Letter::sigma(i), Letter::pre(i + 1)],
            vec![Letter::pre(i), Letter::sigma(i + 1), Letter::sigma(i)],
        ));
    }
    for i in 1..=top {
        for j in i + 2..=top {
            for si in [true, false] {
                for sj in [true, false] {
                    out.push(instance(
                        n,
                        RelationTag::FarCommute,
                        vec![sigma(i, si), sigma(j, sj)],
                        vec![sigma(j, sj), sigma(i, si)],
                    ));
                }
            }
        }
    }
    for i in 1..top {
        out.push(instance(
            n,
            RelationTag::BraidRelation,
            vec![Letter::sigma(i + 1), Letter::sigma(i), Letter::sigma(i + 1)],
            vec![Letter::sigma(i), Letter::sigma(i + 1), Letter::sigma(i)],
        ));
    }
    for i in 1..=top {
        for pos in [true, false] {
            out.push(instance(
                n,
                RelationTag::Cancellation,
                vec![sigma(i, pos), sigma(i, !pos)],
                Vec::new(),
            ));
        }
    }
    Ok(out)
}

/// Verdict of the bounded search. `Unknown` is not a disproof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unknown,
}

// Packed letter: kind in the top two bits, 1-based index below.
fn pack(l: &Letter) -> u16 {
    let kind = match l.kind {
        LetterKind::SigmaPos => 0u16,
        LetterKind::SigmaNeg => 1,
        LetterKind::Pre => 2,
    };
    (kind << 14) | (l.index as u16)
}

fn unpack(code: u16) -> Letter {
    let index = (code & 0x3fff) as usize;
    match code >> 14 {
        0 => Letter::sigma(index),
        1 => Letter::sigma_inv(index),
        _ => Letter::pre(index),
    }
}

fn encode(w: &Word) -> Vec<u16> {
    w.letters().iter().map(pack).collect()
}

fn decode(n: usize, codes: &[u16]) -> Word {
    Word::new(n, codes.iter().map(|&c| unpack(c)).collect()).expect("codes in range")
}

/// A packed (pattern, replacement) rewrite.
type RewriteRule = (Vec<u16>, Vec<u16>);

/// Rewrite rules from the relation set, both directions.
fn rewrite_rules(n: usize) -> Result<Vec<RewriteRule>, Error> {
    let mut rules = Vec::new();
    for inst in relation_set(n)? {
        let l = encode(&inst.lhs);
        let r = encode(&inst.rhs);
        rules.push((l.clone(), r.clone()));
        rules.push((r, l));
    }
    Ok(rules)
}

struct BallSearch {
    rules: Vec<RewriteRule>,
    maxlen: usize,
    visited: HashSet<Vec<u16>>,
    frontier: Vec<Vec<u16>>,
}

impl BallSearch {
    fn new(n: usize, start: &Word, maxlen: usize) -> Result<Self, Error> {
        let root = encode(start);
        let mut visited = HashSet::new();
        visited.insert(root.clone());
        Ok(BallSearch {
            rules: rewrite_rules(n)?,
            maxlen,
            visited,
            frontier: vec![root],
        })
    }

    /// Expands one BFS layer; returns false once the frontier is exhausted.
    fn step(&mut self) -> bool {
        if self.frontier.is_empty() {
            return false;
        }
        let mut next = Vec::new();
        let mut buf: Vec<u16> = Vec::new();
        for word in std::mem::take(&mut self.frontier) {
            for (pat, repl) in &self.rules {
                if word.len() + repl.len() < pat.len()
                    || word.len() + repl.len() - pat.len() > self.maxlen
                {
                    continue;
                }
                let positions = word.len().saturating_sub(pat.len());
                for pos in 0..=positions {
                    if !word[pos..].starts_with(pat) {
                        continue;
                    }
                    buf.clear();
                    buf.extend_from_slice(&word[..pos]);
                    buf.extend_from_slice(repl);
                    buf.extend_from_slice(&word[pos + pat.len()..]);
                    if !self.visited.contains(&buf) {
                        let owned = buf.clone();
                        self.visited.insert(owned.clone());
                        next.push(owned);
                    }
                }
            }
        }
        self.frontier = next;
        !self.frontier.is_empty()
    }
}

/// All words reachable from `w` within `depth` rewrites, no intermediate
/// word longer than `maxlen`. The start word is always included.
pub fn reachable_words(w: &Word, depth: usize, maxlen: usize) -> Result<Vec<Word>, Error> {
    let mut search = BallSearch::new(w.strands(), w, maxlen)?;
    for _ in 0..depth {
        if !search.step() {
            break;
        }
    }
    let mut words: Vec<Vec<u16>> = search.visited.into_iter().collect();
    words.sort();
    Ok(words
        .iter()
        .map(|codes| decode(w.strands(), codes))
        .collect())
}

/// Bounded breadth-first equality: `Equal` iff `v` is reachable from `u`
/// within `depth` rewrites through words of at most `maxlen` letters.
pub fn bfs_equal(u: &Word, v: &Word, depth: usize, maxlen: usize) -> Result<Verdict, Error> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    let target = encode(v);
    let mut search = BallSearch::new(u.strands(), u, maxlen)?;
    if search.visited.contains(&target) {
        return Ok(Verdict::Equal);
    }
    for _ in 0..depth {
        if !search.step() {
            break;
        }
        if search.visited.contains(&target) {
            return Ok(Verdict::Equal);
        }
    }
    Ok(Verdict::Unknown)
}
