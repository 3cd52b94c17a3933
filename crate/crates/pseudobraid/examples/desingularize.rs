//! The desingularization map and the word problem for pseudo braids.
//!
//! Sending every pre-crossing to the difference `σ_i − σ_i⁻¹` embeds the
//! monoid into the integral group ring of the braid group, so comparing
//! images decides word equality.
//!
//! ```bash
//! cargo run -p pseudobraid --example desingularize
//! ```

use pseudobraid::ring::{equal_pm, eta, pm2_canonical};
use pseudobraid::word::parse;

fn main() {
    // The defining rule: a pre-crossing maps to σ − σ⁻¹.
    let image = eta(&parse("p1", 2).unwrap()).unwrap();
    println!("eta(p1) as coeff*key lines:\n{}", image.render());

    // Products expand and cancel: (σ1 − σ1⁻¹)·σ1 = σ1² − 1.
    let image = eta(&parse("p1 s1", 2).unwrap()).unwrap();
    println!("\neta(p1 s1):\n{}", image.render());

    // Deciding equality through the embedding: a sliding relation instance…
    let u = parse("s1 s2 p1", 3).unwrap();
    let v = parse("p2 s1 s2", 3).unwrap();
    println!("\ns1 s2 p1 = p2 s1 s2 ? {}", equal_pm(&u, &v).unwrap());

    // …and a pair that is genuinely different.
    let u = parse("p1 p2", 3).unwrap();
    let v = parse("p2 p1", 3).unwrap();
    println!("p1 p2 = p2 p1 ? {}", equal_pm(&u, &v).unwrap());

    // On two strands the monoid is just Z × Z⁺: an exponent sum and a
    // pre-crossing count decide everything.
    let word = parse("s1 p1 S1 p1 s1", 2).unwrap();
    let (exponent_sum, pre_count) = pm2_canonical(&word).unwrap();
    println!("\nPM_2 canonical pair of s1 p1 S1 p1 s1: ({exponent_sum}, {pre_count})");
}
