//! The Markov moves on the graded union of the pseudo braid monoids.
//!
//! Two pseudo braids have equivalent closures exactly when a finite sequence
//! of these moves connects them: conjugation by a classical braid (M1),
//! cyclic shift (M2), stabilization by `σ_n^{±1}` (M3) and stabilization by
//! `p_n` (M4), the latter two together with their inverse destabilizations.
//! [`apply_move`] performs a single move on a word; [`markov_search`] looks
//! for a certificate — a move sequence connecting two words — within a
//! bounded budget.
//!
//! The search is breadth-first and bidirectional over exact words taken up
//! to cyclic shift: shifts cost nothing and conjugations are enumerated one
//! generator at a time, so a found certificate interleaves free `M2` moves
//! with budgeted `M1`/`M3`/`M4` steps. Absence of a certificate is always
//! inconclusive.

use std::collections::HashMap;

use crate::ring::equal_pm;
use crate::word::{stats, underlying_permutation, Letter, LetterKind, Word};
use crate::Error;

/// Cap on the number of states each search side may visit; exceeding it ends
/// the search inconclusively but deterministically.
const SEARCH_STATE_CAP: usize = 150_000;

/// One Markov move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkovMove {
    /// M1: `β ↦ a⁻¹ β a` for a classical braid `a` on the same strands.
    Conjugate { by: Word },
    /// M2: `β₁β₂ ↦ β₂β₁`, split after `split` letters.
    CyclicShift { split: usize },
    /// M3 stabilization: `β ↦ β σ_n^{±1}`, one more strand.
    Stabilize { positive: bool },
    /// M3 destabilization: removes a final `σ_n^{±1}` whose index appears
    /// nowhere else, one strand fewer.
    Destabilize { positive: bool },
    /// M4 stabilization: `β ↦ β p_n`, one more strand.
    StabilizePre,
    /// M4 destabilization: removes a final `p_n` whose index appears nowhere
    /// else, one strand fewer.
    DestabilizePre,
}

impl MarkovMove {
    /// Mini-language rendering: `M1:s1`, `M2:3`, `M3:+`, `M3:-d`, `M4`, `M4:d`.
    pub fn render(&self) -> String {
        match self {
            MarkovMove::Conjugate { by } => {
                let tokens = crate::word::render(by).replace(' ', ",");
                format!("M1:{tokens}")
            }
            MarkovMove::CyclicShift { split } => format!("M2:{split}"),
            MarkovMove::Stabilize { positive } => {
                format!("M3:{}", if *positive { "+" } else { "-" })
            }
            MarkovMove::Destabilize { positive } => {
                format!("M3:{}d", if *positive { "+" } else { "-" })
            }
            MarkovMove::StabilizePre => "M4".to_string(),
            MarkovMove::DestabilizePre => "M4:d".to_string(),
        }
    }
}

/// The inverse of a classical word: reversed letters with flipped signs.
pub fn inverse(a: &Word) -> Result<Word, Error> {
    if !a.is_classical() {
        return Err(Error::PreLetterPresent);
    }
    let letters = a
        .letters()
        .iter()
        .rev()
        .map(|l| l.inverse().expect("classical letter"))
        .collect();
    Word::new(a.strands(), letters)
}

fn rotate(w: &Word, split: usize) -> Word {
    let mut letters = w.letters()[split..].to_vec();
    letters.extend_from_slice(&w.letters()[..split]);
    Word::new(w.strands(), letters).expect("rotation preserves validity")
}

/// Checks the destabilization precondition: the final letter is the expected
/// generator at the top index, and no other letter uses that index.
fn destab_target(w: &Word, kind: LetterKind, positive_hint: bool) -> Result<Word, Error> {
    let n = w.strands();
    if n < 3 {
        return Err(Error::InvalidMove {
            reason: format!("cannot destabilize below 2 strands (have {n})"),
        });
    }
    let top = n - 1;
    let Some(last) = w.letters().last() else {
        return Err(Error::InvalidMove {
            reason: "empty word has no final letter".into(),
        });
    };
    let expected = match kind {
        LetterKind::SigmaPos => Letter::sigma(top),
        LetterKind::SigmaNeg => Letter::sigma_inv(top),
        LetterKind::Pre => Letter::pre(top),
    };
    if *last != expected {
        return Err(Error::InvalidMove {
            reason: format!(
                "final letter must be {} to destabilize",
                if kind == LetterKind::Pre {
                    format!("p{top}")
                } else if positive_hint {
                    format!("s{top}")
                } else {
                    format!("S{top}")
                }
            ),
        });
    }
    if w.letters()[..w.len() - 1].iter().any(|l| l.index == top) {
        return Err(Error::InvalidMove {
            reason: format!("index {top} occurs before the final letter"),
        });
    }
    Word::new(n - 1, w.letters()[..w.len() - 1].to_vec())
}

/// Applies one Markov move, validating its preconditions.
pub fn apply_move(w: &Word, mv: &MarkovMove) -> Result<Word, Error> {
    match mv {
        MarkovMove::Conjugate { by } => {
            if !by.is_classical() {
                return Err(Error::InvalidMove {
                    reason: "conjugator must be a classical braid".into(),
                });
            }
            if by.strands() != w.strands() {
                return Err(Error::StrandMismatch {
                    left: w.strands(),
                    right: by.strands(),
                });
            }
            let mut letters = inverse(by)?.letters().to_vec();
            letters.extend_from_slice(w.letters());
            letters.extend_from_slice(by.letters());
            Word::new(w.strands(), letters)
        }
        MarkovMove::CyclicShift { split } => {
            if *split > w.len() {
                return Err(Error::InvalidMove {
                    reason: format!("split {split} exceeds length {}", w.len()),
                });
            }
            Ok(rotate(w, *split))
        }
        MarkovMove::Stabilize { positive } => {
            let n = w.strands();
            let mut letters = w.letters().to_vec();
            letters.push(if *positive {
                Letter::sigma(n)
            } else {
                Letter::sigma_inv(n)
            });
            Word::new(n + 1, letters)
        }
        MarkovMove::StabilizePre => {
            let n = w.strands();
            let mut letters = w.letters().to_vec();
            letters.push(Letter::pre(n));
            Word::new(n + 1, letters)
        }
        MarkovMove::Destabilize { positive } => destab_target(
            w,
            if *positive {
                LetterKind::SigmaPos
            } else {
                LetterKind::SigmaNeg
            },
            *positive,
        ),
        MarkovMove::DestabilizePre => destab_target(w, LetterKind::Pre, true),
    }
}

/// Applies a move sequence left to right.
pub fn apply_moves(w: &Word, moves: &[MarkovMove]) -> Result<Word, Error> {
    let mut current = w.clone();
    for mv in moves {
        current = apply_move(&current, mv)?;
    }
    Ok(current)
}

// --- bounded bidirectional certificate search ---

/// Cheap invariants that must agree before an expensive `equal_pm` goal test.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Fingerprint {
    strands: usize,
    sigma_sum: i64,
    pre_count: usize,
    cycle_type: Vec<usize>,
}

impl Fingerprint {
    fn of(w: &Word) -> Self {
        let (sigma_sum, pre_count) = stats(w);
        let mut cycle_type: Vec<usize> = underlying_permutation(w)
            .cycles()
            .iter()
            .map(Vec::len)
            .collect();
        cycle_type.sort_unstable();
        Fingerprint {
            strands: w.strands(),
            sigma_sum,
            pre_count,
            cycle_type,
        }
    }
}

/// The lexicographically least rotation, the canonical representative of a
/// word's cyclic-shift class.
fn min_rotation(w: &Word) -> Word {
    if w.is_empty() {
        return w.clone();
    }
    (0..w.len())
        .map(|k| rotate(w, k))
        .min()
        .expect("nonempty rotation set")
}

#[derive(Debug, Clone)]
struct Edge {
    parent: usize,
    /// The exact word the move applies to (a rotation of the parent class).
    pre_word: Word,
    mv: MarkovMove,
}

#[derive(Debug, Clone)]
struct State {
    rep: Word,
    edge: Option<Edge>,
}

struct Side {
    states: Vec<State>,
    index: HashMap<Word, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn new(root: &Word) -> Self {
        let rep = min_rotation(root);
        let mut index = HashMap::new();
        index.insert(rep.clone(), 0);
        Side {
            states: vec![State { rep, edge: None }],
            index,
            frontier: vec![0],
            depth: 0,
        }
    }

    fn insert(&mut self, rep: Word, edge: Edge, next: &mut Vec<usize>) -> Option<usize> {
        if self.index.contains_key(&rep) {
            return None;
        }
        let id = self.states.len();
        self.index.insert(rep.clone(), id);
        self.states.push(State {
            rep,
            edge: Some(edge),
        });
        next.push(id);
        Some(id)
    }

    /// Path of edges from the root to the state, in application order.
    fn path(&self, mut id: usize) -> Vec<Edge> {
        let mut edges = Vec::new();
        while let Some(edge) = &self.states[id].edge {
            edges.push(edge.clone());
            id = edge.parent;
        }
        edges.reverse();
        edges
    }
}

/// Move candidates applied forward from a state's rotations.
fn forward_neighbors(rep: &Word, max_strands: usize, size_cap: usize) -> Vec<(Word, MarkovMove)> {
    let mut out = Vec::new();
    let n = rep.strands();
    let rotations = if rep.is_empty() { 1 } else { rep.len() };
    for k in 0..rotations {
        let r = rotate(rep, k);
        if r.len() + 2 <= size_cap {
            for i in 1..n {
                for positive in [true, false] {
                    let by = Word::new(
                        n,
                        vec![if positive {
                            Letter::sigma(i)
                        } else {
                            Letter::sigma_inv(i)
                        }],
                    )
                    .expect("generator in range");
                    out.push((r.clone(), MarkovMove::Conjugate { by }));
                }
            }
        }
        if n < max_strands && r.len() < size_cap {
            out.push((r.clone(), MarkovMove::Stabilize { positive: true }));
            out.push((r.clone(), MarkovMove::Stabilize { positive: false }));
            out.push((r.clone(), MarkovMove::StabilizePre));
        }
        for mv in [
            MarkovMove::Destabilize { positive: true },
            MarkovMove::Destabilize { positive: false },
            MarkovMove::DestabilizePre,
        ] {
            if apply_move(&r, &mv).is_ok() {
                out.push((r.clone(), mv));
            }
        }
    }
    out
}

/// Preimage candidates: pairs `(pre_word, move)` with
/// `apply_move(pre_word, move)` equal to a rotation of the state. Walking
/// such an edge backward extends a path that ends at the search root.
fn backward_neighbors(rep: &Word, max_strands: usize, size_cap: usize) -> Vec<(Word, MarkovMove)> {
    let mut out = Vec::new();
    let n = rep.strands();
    let rotations = if rep.is_empty() { 1 } else { rep.len() };
    for k in 0..rotations {
        let r = rotate(rep, k);
        // Last move was a conjugation by g: r = g⁻¹ · mid · g.
        if r.len() >= 2 {
            let first = r.letters()[0];
            let last = *r.letters().last().expect("nonempty");
            if first.cancels(&last) {
                let mid = Word::new(n, r.letters()[1..r.len() - 1].to_vec())
                    .expect("interior letters valid");
                let by = Word::new(n, vec![last]).expect("letter valid");
                out.push((mid, MarkovMove::Conjugate { by }));
            }
        }
        // Last move was a stabilization: r must destabilize.
        for (mv, check) in [
            (
                MarkovMove::Stabilize { positive: true },
                MarkovMove::Destabilize { positive: true },
            ),
            (
                MarkovMove::Stabilize { positive: false },
                MarkovMove::Destabilize { positive: false },
            ),
            (MarkovMove::StabilizePre, MarkovMove::DestabilizePre),
        ] {
            if let Ok(pre) = apply_move(&r, &check) {
                out.push((pre, mv));
            }
        }
        // Last move was a destabilization: the preimage re-appends the
        // removed top generator on one more strand.
        if n < max_strands && r.len() < size_cap {
            for (letter, mv) in [
                (Letter::sigma(n), MarkovMove::Destabilize { positive: true }),
                (
                    Letter::sigma_inv(n),
                    MarkovMove::Destabilize { positive: false },
                ),
                (Letter::pre(n), MarkovMove::DestabilizePre),
            ] {
                let mut letters = r.letters().to_vec();
                letters.push(letter);
                let pre = Word::new(n + 1, letters).expect("appended top generator");
                out.push((pre, mv));
            }
        }
    }
    out
}

/// Finds the split aligning `from` onto `to` (both rotations of one class).
fn alignment_split(from: &Word, to: &Word) -> Option<usize> {
    if from.len() != to.len() || from.strands() != to.strands() {
        return None;
    }
    if from.is_empty() {
        return Some(0);
    }
    (0..from.len()).find(|&k| rotate(from, k) == *to)
}

/// Extends `moves` so the running word `current` becomes exactly `target`
/// (a rotation of it), then returns the new running word.
fn push_alignment(moves: &mut Vec<MarkovMove>, current: Word, target: &Word) -> Word {
    if current == *target {
        return current;
    }
    let split = alignment_split(&current, target).expect("words share a rotation class");
    moves.push(MarkovMove::CyclicShift { split });
    target.clone()
}

/// Bounded bidirectional search for a Markov certificate from `from` to a
/// word equal to `to` in its monoid.
///
/// `move_budget` bounds the number of conjugation and (de)stabilization
/// moves; cyclic shifts are free. `size_cap` bounds the letter count of
/// every intermediate word. `None` is inconclusive, never a disproof.
pub fn markov_search(
    from: &Word,
    to: &Word,
    move_budget: usize,
    size_cap: usize,
) -> Option<Vec<MarkovMove>> {
    let max_strands = from.strands().max(to.strands()) + move_budget;
    let goal_print = Fingerprint::of(to);

    let mut fwd = Side::new(from);
    let mut bwd = Side::new(to);

    // Goal test against `to` up to cyclic shift and monoid equality.
    let goal_hit = |rep: &Word| -> bool {
        if Fingerprint::of(rep) != goal_print {
            return false;
        }
        let rotations = if rep.is_empty() { 1 } else { rep.len() };
        (0..rotations).any(|k| equal_pm(&rotate(rep, k), to).unwrap_or(false))
    };

    // A meeting of the two searches, or a forward state passing the goal test.
    enum Meet {
        Exact { fwd_id: usize, bwd_id: usize },
        Goal { fwd_id: usize },
    }

    let meet = 'search: {
        if goal_hit(&fwd.states[0].rep) {
            break 'search Some(Meet::Goal { fwd_id: 0 });
        }
        if fwd.states[0].rep == bwd.states[0].rep {
            break 'search Some(Meet::Exact {
                fwd_id: 0,
                bwd_id: 0,
            });
        }
        while fwd.depth + bwd.depth < move_budget {
            let expand_fwd = match (fwd.frontier.is_empty(), bwd.frontier.is_empty()) {
                (true, true) => break 'search None,
                (false, true) => true,
                (true, false) => false,
                (false, false) => fwd.states.len() <= bwd.states.len(),
            };
            let (side, other) = if expand_fwd {
                (&mut fwd, &mut bwd)
            } else {
                (&mut bwd, &mut fwd)
            };
            let mut next = Vec::new();
            for id in std::mem::take(&mut side.frontier) {
                let rep = side.states[id].rep.clone();
                let candidates = if expand_fwd {
                    forward_neighbors(&rep, max_strands, size_cap)
                } else {
                    backward_neighbors(&rep, max_strands, size_cap)
                };
                for (pre_word, mv) in candidates {
                    let result = if expand_fwd {
                        match apply_move(&pre_word, &mv) {
                            Ok(word) => word,
                            Err(_) => continue,
                        }
                    } else {
                        // Backward candidates are preimages; the new state is
                        // the preimage itself.
                        pre_word.clone()
                    };
                    if result.len() > size_cap {
                        continue;
                    }
                    let class = min_rotation(&result);
                    let edge = Edge {
                        parent: id,
                        pre_word,
                        mv,
                    };
                    let Some(new_id) = side.insert(class.clone(), edge, &mut next) else {
                        continue;
                    };
                    if let Some(&other_id) = other.index.get(&class) {
                        let (fwd_id, bwd_id) = if expand_fwd {
                            (new_id, other_id)
                        } else {
                            (other_id, new_id)
                        };
                        break 'search Some(Meet::Exact { fwd_id, bwd_id });
                    }
                    if expand_fwd && goal_hit(&class) {
                        break 'search Some(Meet::Goal { fwd_id: new_id });
                    }
                    if side.states.len() > SEARCH_STATE_CAP {
                        break 'search None;
                    }
                }
            }
            side.frontier = next;
            side.depth += 1;
        }
        None
    }?;

    // Assemble the literal move list: forward edges as recorded, alignment
    // shifts in between, backward edges replayed in reverse.
    let mut moves: Vec<MarkovMove> = Vec::new();
    let mut current = from.clone();
    match meet {
        Meet::Goal { fwd_id } => {
            // Replay, then shift to the rotation that is monoid-equal to
            // `to` — no shift at all when the endpoint already matches.
            for edge in fwd.path(fwd_id) {
                current = push_alignment(&mut moves, current, &edge.pre_word);
                current = apply_move(&current, &edge.mv).expect("recorded move replays");
                moves.push(edge.mv);
            }
            if !equal_pm(&current, to).unwrap_or(false) {
                let split = (1..current.len())
                    .find(|&k| equal_pm(&rotate(&current, k), to).unwrap_or(false))
                    .expect("goal test found a matching rotation");
                current = rotate(&current, split);
                moves.push(MarkovMove::CyclicShift { split });
            }
            debug_assert!(equal_pm(&current, to).unwrap_or(false));
        }
        Meet::Exact { fwd_id, bwd_id } => {
            for edge in fwd.path(fwd_id) {
                current = push_alignment(&mut moves, current, &edge.pre_word);
                current = apply_move(&current, &edge.mv).expect("recorded move replays");
                moves.push(edge.mv);
            }
            // Backward edges run root→meet; replayed meet→root, each edge's
            // pre-word being the state nearer the meet.
            let mut edges = bwd.path(bwd_id);
            edges.reverse();
            for edge in edges {
                current = push_alignment(&mut moves, current, &edge.pre_word);
                current = apply_move(&current, &edge.mv).expect("recorded move replays");
                moves.push(edge.mv);
                debug_assert_eq!(min_rotation(&current), bwd.states[edge.parent].rep);
            }
            current = push_alignment(&mut moves, current, to);
            debug_assert_eq!(&current, to);
        }
    }
    Some(moves)
}

/// A uniformly chosen legal move for the word: a single-generator
/// conjugation, a cyclic shift, a stabilization, or — when the word permits —
/// a destabilization.
pub fn random_legal_move(rng: &mut crate::rng::Rng, w: &Word) -> MarkovMove {
    let n = w.strands();
    let mut candidates: Vec<MarkovMove> = Vec::new();
    for i in 1..n {
        candidates.push(MarkovMove::Conjugate {
            by: Word::new(n, vec![Letter::sigma(i)]).expect("generator in range"),
        });
        candidates.push(MarkovMove::Conjugate {
            by: Word::new(n, vec![Letter::sigma_inv(i)]).expect("generator in range"),
        });
    }
    for split in 0..=w.len() {
        candidates.push(MarkovMove::CyclicShift { split });
    }
    candidates.push(MarkovMove::Stabilize { positive: true });
    candidates.push(MarkovMove::Stabilize { positive: false });
    candidates.push(MarkovMove::StabilizePre);
    for mv in [
        MarkovMove::Destabilize { positive: true },
        MarkovMove::Destabilize { positive: false },
        MarkovMove::DestabilizePre,
    ] {
        if apply_move(w, &mv).is_ok() {
            candidates.push(mv);
        }
    }
    candidates[rng.below(candidates.len() as u64) as usize].clone()
}
