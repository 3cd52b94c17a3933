//! Closure invariants: component counts, linking numbers, and the weighted
//! resolution profile.
//!
//! ```bash
//! cargo run -p pseudobraid --example closure_profile
//! ```

use pseudobraid::closure::{
    component_count, doubled_linking_numbers, linking_profile, resolve, Resolution,
};
use pseudobraid::markov::{apply_move, MarkovMove};
use pseudobraid::word::{parse, render};

fn main() {
    // Components of the closure = cycles of the strand permutation.
    for (text, n) in [("s1", 2), ("", 3), ("p1 s2", 3)] {
        let word = parse(text, n).unwrap();
        println!(
            "closure of `{text}` on {n} strands has {} component(s)",
            component_count(&word)
        );
    }

    // Resolving pre-crossings picks a classical representative.
    let word = parse("s1 p2 p1", 3).unwrap();
    let resolved = resolve(&word, &Resolution::new(vec![1, -1])).unwrap();
    println!(
        "\n`{}` resolved (+,−) is `{}`",
        render(&word),
        render(&resolved)
    );

    // Doubled linking numbers of a classical closure: σ1² is the Hopf link.
    let hopf = parse("s1 s1", 2).unwrap();
    println!(
        "doubled linking numbers of s1 s1: {:?}",
        doubled_linking_numbers(&hopf).unwrap()
    );

    // The weighted profile enumerates all resolutions with exact weights:
    // p1 p1 closes to the Hopf link, its mirror, or the unlink.
    let word = parse("p1 p1", 2).unwrap();
    let profile = linking_profile(&word).unwrap();
    println!("\nprofile of p1 p1:");
    for entry in profile.entries() {
        println!(
            "  components {}, doubled linkings {:?}, weight {}",
            entry.component_count, entry.doubled_linkings, entry.weight
        );
    }

    // Markov moves never change the profile — here the p-stabilization,
    // which doubles the resolution count without moving a single weight.
    let stabbed = apply_move(&word, &MarkovMove::StabilizePre).unwrap();
    println!(
        "\nprofile unchanged under M4? {}",
        linking_profile(&stabbed).unwrap() == profile
    );
}
