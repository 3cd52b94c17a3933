//! Words, the token grammar, and elementary statistics.
//!
//! ```bash
//! cargo run -p pseudobraid --example words
//! ```

use pseudobraid::word::{concat, free_reduce, parse, render, stats, underlying_permutation, Word};

fn main() {
    // Tokens: s<i> = positive crossing, S<i> = negative crossing,
    // p<i> = pre-crossing (an unresolved crossing). Three strands here.
    let u = parse("s1 p2 S1", 3).unwrap();
    println!("parsed      : {}", render(&u));

    let v = parse("s1 S1 p1", 3).unwrap();
    let uv = concat(&u, &v).unwrap();
    println!("concatenated: {}", render(&uv));

    // Adjacent cancelling crossing pairs vanish; pre-crossings never do.
    println!("free-reduced: {}", render(&free_reduce(&uv)));

    // Every letter swaps two adjacent strands; the whole word permutes them.
    let perm = underlying_permutation(&uv);
    let images: Vec<usize> = perm.images().iter().map(|&i| i + 1).collect();
    println!("permutation : {images:?}");
    println!("cycles      : {:?}", perm.cycles());

    let (exponent_sum, pre_count) = stats(&uv);
    println!("σ-exponent sum {exponent_sum}, pre-crossings {pre_count}");

    // The empty word is the identity of the monoid; the strand count makes
    // monoids on different strand counts distinct.
    let empty = Word::identity(3).unwrap();
    println!("identity on 3 strands renders as {:?}", render(&empty));
}
