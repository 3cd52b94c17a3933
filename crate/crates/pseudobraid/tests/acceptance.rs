//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Everything here is exact — no tolerances. Run with `--nocapture` to see
//! the per-criterion lines:
//!
//! ```bash
//! cargo test -p pseudobraid --test acceptance -- --nocapture
//! ```

use std::collections::{BTreeMap, HashMap, HashSet};

use pseudobraid::closure::{component_count, linking_profile, Dyadic};
use pseudobraid::garside::{nf_to_word, normal_form, NormalForm};
use pseudobraid::markov::{apply_move, apply_moves, markov_search, random_legal_move, MarkovMove};
use pseudobraid::oracle::{bfs_equal, reachable_words, relation_set, RelationTag, Verdict};
use pseudobraid::ring::{equal_pm, eta, pm2_canonical, RingElement};
use pseudobraid::rng::{random_word, Rng};
use pseudobraid::word::{concat, parse, relabel, render, Letter, RelabelDirection, Word};

fn w(text: &str, n: usize) -> Word {
    parse(text, n).unwrap()
}

/// All words over the alphabet up to the length bound, shortest first.
fn enumerate_words(n: usize, alphabet: &[Letter], max_len: usize) -> Vec<Word> {
    let mut all: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &layer {
            for &l in alphabet {
                let mut word = prefix.clone();
                word.push(l);
                next.push(word);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter()
        .map(|letters| Word::new(n, letters).unwrap())
        .collect()
}

fn classical_alphabet(n: usize) -> Vec<Letter> {
    (1..n)
        .flat_map(|i| [Letter::sigma(i), Letter::sigma_inv(i)])
        .collect()
}

fn full_alphabet(n: usize) -> Vec<Letter> {
    (1..n)
        .flat_map(|i| [Letter::sigma(i), Letter::sigma_inv(i), Letter::pre(i)])
        .collect()
}

#[test]
fn acceptance_1_relation_suite() {
    let mut instances = 0usize;
    for n in 2..=6 {
        for rel in relation_set(n).unwrap() {
            assert!(
                equal_pm(&rel.lhs, &rel.rhs).unwrap(),
                "relation {:?} not decided equal at n={n}: `{}` vs `{}`",
                rel.tag,
                render(&rel.lhs),
                render(&rel.rhs),
            );
            instances += 1;
        }
    }
    assert!(
        instances > 100,
        "expected hundreds of instances, got {instances}"
    );
    println!("acceptance 1 (relation suite n=2..6): PASS — {instances} instances equal");
}

#[test]
fn acceptance_2_relabel_isomorphism() {
    let mut rng = Rng::new(0xacce_0002);
    for _ in 0..10_000 {
        let n = 2 + rng.below(4) as usize;
        let word = random_word(&mut rng, n, 10, 10);
        let there = relabel(&word, RelabelDirection::PseudoToSingular);
        let back = relabel(&there, RelabelDirection::SingularToPseudo);
        assert_eq!(back, word, "relabel must be an involution");
    }
    let mut pairs = 0usize;
    for _ in 0..2_000 {
        let n = 2 + rng.below(3) as usize;
        let u = random_word(&mut rng, n, 6, 3);
        let v = random_word(&mut rng, n, 6, 3);
        let direct = equal_pm(&u, &v).unwrap();
        let relabeled = equal_pm(
            &relabel(&u, RelabelDirection::PseudoToSingular),
            &relabel(&v, RelabelDirection::PseudoToSingular),
        )
        .unwrap();
        assert_eq!(direct, relabeled, "equality must not depend on the flavor");
        pairs += 1;
    }
    println!(
        "acceptance 2 (relabeling isomorphism): PASS — 10000 involutions, {pairs} equality pairs"
    );
}

#[test]
fn acceptance_3_eta_homomorphism() {
    let mut rng = Rng::new(0xacce_0003);
    for trial in 0..1_000 {
        let n = 2 + rng.below(3) as usize;
        let u = random_word(&mut rng, n, 6, 3);
        let v = random_word(&mut rng, n, 6, 3);
        let lhs = eta(&concat(&u, &v).unwrap()).unwrap();
        let rhs = eta(&u).unwrap().mul(&eta(&v).unwrap()).unwrap();
        assert_eq!(
            lhs,
            rhs,
            "trial {trial}: eta not multiplicative on `{}` | `{}`",
            render(&u),
            render(&v)
        );
    }
    println!("acceptance 3 (desingularization homomorphism): PASS — 1000 random pairs");
}

#[test]
fn acceptance_4_oracle_consistency() {
    // Every pair of PM_3 words of length ≤ 4 that the oracle proves equal at
    // depth 6 / maxlen 8 must also be equal under the ring decision.
    let universe = enumerate_words(3, &full_alphabet(3), 4);
    assert_eq!(universe.len(), 1 + 6 + 36 + 216 + 1296);
    let images: HashMap<Word, RingElement> = universe
        .iter()
        .map(|u| (u.clone(), eta(u).unwrap()))
        .collect();
    let mut equal_pairs = 0usize;
    for u in &universe {
        let ball: HashSet<Word> = reachable_words(u, 6, 8).unwrap().into_iter().collect();
        for v in &ball {
            if v.len() > 4 || v == u {
                continue;
            }
            assert_eq!(
                images[u],
                images[v],
                "oracle proved `{}` = `{}` but eta images differ",
                render(u),
                render(v)
            );
            equal_pairs += 1;
        }
    }
    assert!(
        equal_pairs > 1_000,
        "suspiciously few equal pairs: {equal_pairs}"
    );
    // The ball reproduces bfs_equal verdicts on sampled pairs.
    let mut rng = Rng::new(0xacce_0004);
    for _ in 0..200 {
        let u = &universe[rng.below(universe.len() as u64) as usize];
        let v = &universe[rng.below(universe.len() as u64) as usize];
        let verdict = bfs_equal(u, v, 6, 8).unwrap();
        let in_ball = reachable_words(u, 6, 8).unwrap().contains(v);
        assert_eq!(verdict == Verdict::Equal, in_ball);
    }
    println!(
        "acceptance 4 (oracle consistency, all PM_3 pairs len ≤ 4): PASS — {} words, {equal_pairs} oracle-equal ordered pairs verified",
        universe.len()
    );
}

#[test]
fn acceptance_5_pm2_structure() {
    let universe = enumerate_words(2, &full_alphabet(2), 6);
    assert_eq!(
        universe.len(),
        (0..=6).map(|k| 3usize.pow(k)).sum::<usize>()
    );
    let data: Vec<(RingElement, (i64, usize))> = universe
        .iter()
        .map(|u| (eta(u).unwrap(), pm2_canonical(u).unwrap()))
        .collect();
    let mut agreements = 0usize;
    for i in 0..data.len() {
        for j in i + 1..data.len() {
            let ring_equal = data[i].0 == data[j].0;
            let pair_equal = data[i].1 == data[j].1;
            assert_eq!(
                ring_equal,
                pair_equal,
                "PM_2 canonical pair disagrees with eta on `{}` vs `{}`",
                render(&universe[i]),
                render(&universe[j])
            );
            if ring_equal {
                agreements += 1;
            }
        }
    }
    println!(
        "acceptance 5 (PM_2 structure, all words len ≤ 6): PASS — {} words, {agreements} equal pairs",
        universe.len()
    );
}

#[test]
fn acceptance_6_garside() {
    // (a) Normal form invariant under every single relation application at
    // every position, exhaustively for classical words of length ≤ 6, n ≤ 4.
    let mut rewrites_checked = 0usize;
    let mut distinct_forms: HashSet<NormalForm> = HashSet::new();
    for n in 2..=4 {
        let rules: Vec<(Vec<Letter>, Vec<Letter>)> = relation_set(n)
            .unwrap()
            .into_iter()
            .filter(|r| {
                matches!(
                    r.tag,
                    RelationTag::FarCommute
                        | RelationTag::BraidRelation
                        | RelationTag::Cancellation
                )
            })
            .flat_map(|r| {
                let l = r.lhs.letters().to_vec();
                let rr = r.rhs.letters().to_vec();
                [(l.clone(), rr.clone()), (rr, l)]
            })
            .collect();
        for word in enumerate_words(n, &classical_alphabet(n), 6) {
            let nf = normal_form(&word).unwrap();
            distinct_forms.insert(nf.clone());
            let letters = word.letters();
            for (pat, repl) in &rules {
                for pos in 0..=letters.len().saturating_sub(pat.len()) {
                    if !letters[pos..].starts_with(pat) {
                        continue;
                    }
                    let mut rewritten = letters[..pos].to_vec();
                    rewritten.extend_from_slice(repl);
                    rewritten.extend_from_slice(&letters[pos + pat.len()..]);
                    let rewritten = Word::new(n, rewritten).unwrap();
                    assert_eq!(
                        normal_form(&rewritten).unwrap(),
                        nf,
                        "normal form changed: `{}` → `{}`",
                        render(&word),
                        render(&rewritten)
                    );
                    rewrites_checked += 1;
                }
            }
        }
    }

    // (b) Δ² is central for n ≤ 5.
    for n in 2..=5usize {
        // Δ spelled as the descending cascade σ1 σ2 σ1 σ3 σ2 σ1 …
        let mut cascade = Vec::new();
        for width in (1..n).rev() {
            for i in 1..=width {
                cascade.push(Letter::sigma(i));
            }
        }
        let delta = normal_form(&Word::new(n, cascade).unwrap()).unwrap();
        assert_eq!(delta.inf(), 1, "cascade word must be Δ at n={n}");
        let delta_sq = delta.product(&delta).unwrap();
        for i in 1..n {
            for text in [format!("s{i}"), format!("S{i}")] {
                let g = normal_form(&w(&text, n)).unwrap();
                assert_eq!(
                    delta_sq.product(&g).unwrap(),
                    g.product(&delta_sq).unwrap(),
                    "Δ² must be central (generator {text}, n={n})"
                );
            }
        }
    }

    // (c) Round-trip through nf_to_word for every form seen above.
    for nf in &distinct_forms {
        assert_eq!(
            &normal_form(&nf_to_word(nf)).unwrap(),
            nf,
            "nf_to_word round-trip failed for {}",
            nf.serialize()
        );
    }

    println!(
        "acceptance 6 (Garside correctness): PASS — {rewrites_checked} rewrites invariant, Δ² central n ≤ 5, {} round-trips",
        distinct_forms.len()
    );
}

#[test]
fn acceptance_7_markov_invariance() {
    let mut rng = Rng::new(0xacce_0007);
    let mut pre_stab_trials = 0usize;
    for trial in 0..1_000 {
        let n = 2 + rng.below(3) as usize;
        let beta = random_word(&mut rng, n, 6, 3);
        let mv = random_legal_move(&mut rng, &beta);
        let moved = apply_move(&beta, &mv).unwrap();
        assert_eq!(
            component_count(&beta),
            component_count(&moved),
            "component count changed under {} on `{}`",
            mv.render(),
            render(&beta)
        );
        assert_eq!(
            linking_profile(&beta).unwrap(),
            linking_profile(&moved).unwrap(),
            "trial {trial}: linking profile changed under {} on `{}`",
            mv.render(),
            render(&beta)
        );
        if matches!(mv, MarkovMove::StabilizePre) {
            pre_stab_trials += 1;
        }
    }
    // The doubling move specifically: p-stabilization doubles the resolution
    // set yet must keep the weighted profile exactly.
    for _ in 0..200 {
        let n = 2 + rng.below(3) as usize;
        let beta = random_word(&mut rng, n, 6, 3);
        let moved = apply_move(&beta, &MarkovMove::StabilizePre).unwrap();
        assert_eq!(
            linking_profile(&beta).unwrap(),
            linking_profile(&moved).unwrap()
        );
        pre_stab_trials += 1;
    }
    println!(
        "acceptance 7 (Markov invariance): PASS — 1200 moves ({pre_stab_trials} p-stabilizations), profiles exactly preserved"
    );
}

#[test]
fn acceptance_8_markov_search_replay() {
    let mut rng = Rng::new(0xacce_0008);
    let mut total_moves = 0usize;
    for trial in 0..200 {
        let n = 2 + rng.below(3) as usize;
        let beta = random_word(&mut rng, n, 6, 3);
        let count = rng.below(5) as usize;
        let mut current = beta.clone();
        for _ in 0..count {
            let mv = random_legal_move(&mut rng, &current);
            current = apply_move(&current, &mv).unwrap();
        }
        let target = current;
        let size_cap = beta.len().max(target.len()) + 12;
        let cert = markov_search(&beta, &target, 5, size_cap).unwrap_or_else(|| {
            panic!(
                "trial {trial}: no certificate from `{}` (n={}) to `{}` (n={})",
                render(&beta),
                beta.strands(),
                render(&target),
                target.strands()
            )
        });
        let replayed = apply_moves(&beta, &cert).unwrap();
        assert!(
            equal_pm(&replayed, &target).unwrap(),
            "trial {trial}: certificate does not replay to the target"
        );
        total_moves += cert.len();
    }
    println!(
        "acceptance 8 (Markov search replay): PASS — 200 certificates found and replayed ({total_moves} moves total)"
    );
}

#[test]
fn acceptance_9_worked_values() {
    // The defining image of a pre-crossing.
    let image = eta(&w("p1", 2)).unwrap();
    let expected = RingElement::monomial(normal_form(&w("s1", 2)).unwrap(), 1)
        .add(&RingElement::monomial(
            normal_form(&w("S1", 2)).unwrap(),
            -1,
        ))
        .unwrap();
    assert_eq!(image, expected);

    // Closure profile of p1·p1 against an independent brute-force resolver.
    let word = w("p1 p1", 2);
    let brute = brute_force_profile(&word);
    let profile = linking_profile(&word).unwrap();
    assert_eq!(profile.entries().len(), brute.len());
    for (entry, (components, linkings, weight)) in profile.entries().iter().zip(brute.iter()) {
        assert_eq!(&entry.component_count, components);
        assert_eq!(&entry.doubled_linkings, linkings);
        assert_eq!(&entry.weight, weight);
    }
    let quarter = Dyadic::new(1, 2);
    let half = Dyadic::new(1, 1);
    let weights: Vec<Dyadic> = profile.entries().iter().map(|e| e.weight).collect();
    assert_eq!(weights, vec![quarter, half, quarter]);
    println!("acceptance 9 (worked values): PASS — eta(p1) and the p1·p1 closure profile match");
}

/// Test-only resolver: enumerates resolutions by bitmask and computes the
/// closure data through a strand-pair crossing matrix, sharing no code with
/// the library's profile implementation.
fn brute_force_profile(word: &Word) -> Vec<(usize, Vec<i64>, Dyadic)> {
    let n = word.strands();
    let pre_positions: Vec<usize> = word
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.is_pre())
        .map(|(i, _)| i)
        .collect();
    let k = pre_positions.len();
    let mut buckets: BTreeMap<(usize, Vec<i64>), u64> = BTreeMap::new();
    for mask in 0..(1u64 << k) {
        // Signed crossing list for this resolution.
        let mut signs: Vec<(usize, i64)> = Vec::new(); // (position index of crossing, sign)
        let mut pre_seen = 0usize;
        for l in word.letters() {
            let sign = match l.kind {
                pseudobraid::word::LetterKind::SigmaPos => 1,
                pseudobraid::word::LetterKind::SigmaNeg => -1,
                pseudobraid::word::LetterKind::Pre => {
                    let bit = mask >> pre_seen & 1;
                    pre_seen += 1;
                    if bit == 1 {
                        1
                    } else {
                        -1
                    }
                }
            };
            signs.push((l.index - 1, sign));
        }
        // Strand trajectories and a strand-vs-strand crossing matrix.
        let mut at_position: Vec<usize> = (0..n).collect(); // position → strand
        let mut matrix = vec![vec![0i64; n]; n];
        for &(slot, sign) in &signs {
            let (a, b) = (at_position[slot], at_position[slot + 1]);
            matrix[a][b] += sign;
            matrix[b][a] += sign;
            at_position.swap(slot, slot + 1);
        }
        // Closure components: follow strand s to the position it ends at.
        let mut ends_at = vec![0usize; n];
        for (pos, &strand) in at_position.iter().enumerate() {
            ends_at[strand] = pos;
        }
        let mut component = vec![usize::MAX; n];
        let mut components = 0usize;
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            let mut s = start;
            while component[s] == usize::MAX {
                component[s] = components;
                s = ends_at[s];
            }
            components += 1;
        }
        // Doubled linking numbers per unordered component pair.
        let mut pair_sums: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for c1 in 0..components {
            for c2 in c1 + 1..components {
                pair_sums.insert((c1, c2), 0);
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let (ca, cb) = (component[a], component[b]);
                if ca != cb {
                    *pair_sums.get_mut(&(ca.min(cb), ca.max(cb))).unwrap() += matrix[a][b];
                }
            }
        }
        let mut linkings: Vec<i64> = pair_sums.into_values().collect();
        linkings.sort_unstable();
        *buckets.entry((components, linkings)).or_insert(0) += 1;
    }
    buckets
        .into_iter()
        .map(|((components, linkings), count)| (components, linkings, Dyadic::new(count, k as u32)))
        .collect()
}
