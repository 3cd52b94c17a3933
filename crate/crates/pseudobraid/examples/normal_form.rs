//! Canonical forms for classical braids: the left-greedy factorization
//! `Δ^k · A_1 ⋯ A_l` into a half-twist power and permutation braids.
//!
//! ```bash
//! cargo run -p pseudobraid --example normal_form
//! ```

use pseudobraid::garside::{nf_equal, nf_to_word, normal_form};
use pseudobraid::word::{parse, render};

fn main() {
    // Both sides of the braid relation σ1 σ2 σ1 = σ2 σ1 σ2 give the same
    // canonical form — on three strands this element is the half twist Δ.
    let left = parse("s1 s2 s1", 3).unwrap();
    let right = parse("s2 s1 s2", 3).unwrap();
    let nf_left = normal_form(&left).unwrap();
    let nf_right = normal_form(&right).unwrap();
    println!("nf(s1 s2 s1) = {}", nf_left.serialize());
    println!("nf(s2 s1 s2) = {}", nf_right.serialize());
    assert_eq!(nf_left, nf_right);

    // Negative crossings land in the Δ power: on two strands σ1⁻¹ = Δ⁻¹.
    let negative = normal_form(&parse("S1", 2).unwrap()).unwrap();
    println!(
        "nf(S1) on 2 strands = {} (inf {})",
        negative.serialize(),
        negative.inf()
    );

    // Equality of braid words is equality of normal forms.
    let u = parse("s1 S2 s1 s1", 3).unwrap();
    let v = parse("s1 s1 S2 s1", 3).unwrap();
    println!(
        "{} = {} in the braid group? {}",
        render(&u),
        render(&v),
        nf_equal(&u, &v).unwrap()
    );

    // Round trip: any normal form spells a word with that normal form.
    let nf = normal_form(&u).unwrap();
    let lifted = nf_to_word(&nf);
    println!("lift of {} is `{}`", nf.serialize(), render(&lifted));
    assert_eq!(normal_form(&lifted).unwrap(), nf);
}
