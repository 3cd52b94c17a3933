//! The independent rewriting prover: bounded breadth-first search over the
//! defining relations.
//!
//! ```bash
//! cargo run -p pseudobraid --example oracle
//! ```

use pseudobraid::oracle::{bfs_equal, reachable_words, relation_set};
use pseudobraid::word::{parse, render};

fn main() {
    // The relation instances valid on four strands.
    let relations = relation_set(4).unwrap();
    println!("defining relation instances at n=4: {}", relations.len());
    for rel in relations.iter().take(5) {
        println!(
            "  {:?}: {} = {}",
            rel.tag,
            render(&rel.lhs),
            render(&rel.rhs)
        );
    }

    // One rewrite proves a commutation…
    let u = parse("p1 s1", 2).unwrap();
    let v = parse("s1 p1", 2).unwrap();
    println!(
        "\np1 s1 ~ s1 p1 at depth 1: {:?}",
        bfs_equal(&u, &v, 1, 4).unwrap()
    );

    // …some equalities need a detour through longer words…
    let u = parse("s1 s2 S1", 3).unwrap();
    let v = parse("S2 s1 s2", 3).unwrap();
    println!(
        "s1 s2 S1 ~ S2 s1 s2 at depth 6: {:?}",
        bfs_equal(&u, &v, 6, 8).unwrap()
    );

    // …and a bounded search that finds nothing proves nothing.
    let u = parse("p1", 3).unwrap();
    let v = parse("p2", 3).unwrap();
    println!("p1 ~ p2 at depth 8: {:?}", bfs_equal(&u, &v, 8, 8).unwrap());

    // The whole reachable ball is available for exhaustive testing.
    let ball = reachable_words(&parse("p1 s1", 2).unwrap(), 2, 6).unwrap();
    println!(
        "\nwords within 2 rewrites of p1 s1 (≤ 6 letters): {}",
        ball.len()
    );
    for word in ball.iter().take(8) {
        println!("  {}", render(word));
    }
}
