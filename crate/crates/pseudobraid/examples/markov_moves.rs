//! The four Markov moves and the bounded certificate search.
//!
//! ```bash
//! cargo run -p pseudobraid --example markov_moves
//! ```

use pseudobraid::markov::{apply_move, apply_moves, markov_search, MarkovMove};
use pseudobraid::ring::equal_pm;
use pseudobraid::word::{parse, render};

fn main() {
    let beta = parse("s1 p1", 2).unwrap();
    println!("start: `{}` on {} strands", render(&beta), beta.strands());

    // M1: conjugation by a classical braid.
    let conj = apply_move(
        &beta,
        &MarkovMove::Conjugate {
            by: parse("s1", 2).unwrap(),
        },
    )
    .unwrap();
    println!("M1:s1 : `{}`", render(&conj));

    // M2: cyclic shift.
    let shifted = apply_move(&beta, &MarkovMove::CyclicShift { split: 1 }).unwrap();
    println!("M2:1  : `{}`", render(&shifted));

    // M3/M4: stabilizations enter the next monoid; destabilizations return.
    let up = apply_move(&beta, &MarkovMove::Stabilize { positive: true }).unwrap();
    println!("M3:+  : `{}` on {} strands", render(&up), up.strands());
    let pre = apply_move(&up, &MarkovMove::StabilizePre).unwrap();
    println!("M4    : `{}` on {} strands", render(&pre), pre.strands());
    let down = apply_move(&pre, &MarkovMove::DestabilizePre).unwrap();
    println!("M4:d  : `{}` on {} strands", render(&down), down.strands());

    // The search recovers a certificate between Markov-equivalent words.
    let target = apply_moves(
        &beta,
        &[
            MarkovMove::Stabilize { positive: false },
            MarkovMove::CyclicShift { split: 2 },
            MarkovMove::Conjugate {
                by: parse("s2", 3).unwrap(),
            },
        ],
    )
    .unwrap();
    println!(
        "\ntarget: `{}` on {} strands",
        render(&target),
        target.strands()
    );
    let cert = markov_search(&beta, &target, 5, 16).expect("certificate within budget");
    let rendered: Vec<String> = cert.iter().map(MarkovMove::render).collect();
    println!("certificate: {}", rendered.join(" "));
    let replayed = apply_moves(&beta, &cert).unwrap();
    println!(
        "replayed endpoint `{}` equals target? {}",
        render(&replayed),
        equal_pm(&replayed, &target).unwrap()
    );
}
