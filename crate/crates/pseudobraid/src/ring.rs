//! The integral group ring of `B_n` and the desingularization map.
//!
//! A [`RingElement`] is a finite integer combination of braid group elements,
//! each stored under its canonical normal form. The desingularization map
//! sends `σ_i^{±1}` to itself and every pre-crossing `p_i` to the difference
//! `σ_i − σ_i⁻¹`; it is a multiplicative embedding of the pseudo braid monoid
//! into the group ring, so comparing images decides word equality in `PM_n`.
//!
//! Expanding the image of a word with `k` pre-crossings produces up to `2^k`
//! terms before cancellation. Expansion walks the word left to right and
//! cancels after every letter; a configurable term cap turns runaway growth
//! into a reported error rather than silent truncation.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::garside::{normal_form, NormalForm};
use crate::word::{LetterKind, Word};
use crate::Error;

/// Default bound on the number of terms an intermediate product may hold.
pub const DEFAULT_TERM_CAP: usize = 1 << 20;

/// An element of the integral group ring `Z[B_n]`: a finite map from
/// canonical normal forms to nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    strands: usize,
    terms: BTreeMap<NormalForm, i64>,
}

impl RingElement {
    /// The zero element.
    pub fn zero(strands: usize) -> Self {
        RingElement {
            strands,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit: the identity braid with coefficient one.
    pub fn one(strands: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(NormalForm::identity(strands), 1);
        RingElement { strands, terms }
    }

    /// A single braid group element with the given coefficient.
    pub fn monomial(nf: NormalForm, coeff: i64) -> Self {
        let strands = nf.strands();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(nf, coeff);
        }
        RingElement { strands, terms }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms (all coefficients nonzero).
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalForm, i64)> {
        self.terms.iter().map(|(nf, &c)| (nf, c))
    }

    pub fn coefficient(&self, nf: &NormalForm) -> i64 {
        self.terms.get(nf).copied().unwrap_or(0)
    }

    /// Coefficientwise sum; zero coefficients are pruned.
    pub fn add(&self, other: &RingElement) -> Result<RingElement, Error> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut terms = self.terms.clone();
        for (nf, &c) in &other.terms {
            let entry = terms.entry(nf.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                terms.remove(nf);
            }
        }
        Ok(RingElement {
            strands: self.strands,
            terms,
        })
    }

    /// Bilinear extension of the group multiplication, with the product keys
    /// recanonicalized. Errors if the pre-cancellation term count would
    /// exceed `cap`.
    pub fn mul_capped(&self, other: &RingElement, cap: usize) -> Result<RingElement, Error> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let raw = self.terms.len().saturating_mul(other.terms.len());
        if raw > cap {
            return Err(Error::TermCapExceeded { terms: raw, cap });
        }
        let mut terms: BTreeMap<NormalForm, i64> = BTreeMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                match terms.entry(a.product(b)?) {
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += ca * cb;
                        if *e.get() == 0 {
                            e.remove();
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(ca * cb);
                    }
                }
            }
        }
        Ok(RingElement {
            strands: self.strands,
            terms,
        })
    }

    /// [`mul_capped`](Self::mul_capped) with the default cap.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement, Error> {
        self.mul_capped(other, DEFAULT_TERM_CAP)
    }

    /// Lines `coeff*key`, sorted lexicographically by serialized key. The
    /// zero element renders as the single line `0`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut entries: Vec<(String, i64)> = self
            .terms
            .iter()
            .map(|(nf, &c)| (nf.serialize(), c))
            .collect();
        entries.sort();
        entries
            .into_iter()
            .map(|(key, c)| format!("{c}*{key}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The desingularization image of a word, expanded with the default term cap.
pub fn eta(w: &Word) -> Result<RingElement, Error> {
    eta_capped(w, DEFAULT_TERM_CAP)
}

/// The desingularization image: `σ_i^{±1}` maps to itself, `p_i` maps to
/// `σ_i − σ_i⁻¹`, letters multiplied left to right with cancellation after
/// each step.
pub fn eta_capped(w: &Word, cap: usize) -> Result<RingElement, Error> {
    let n = w.strands();
    let mut acc = RingElement::one(n);
    for l in w.letters() {
        let factor = match l.kind {
            LetterKind::SigmaPos => sigma_element(n, l.index, 1)?,
            LetterKind::SigmaNeg => sigma_element(n, l.index, -1)?,
            LetterKind::Pre => {
                let pos = sigma_element(n, l.index, 1)?;
                let neg = sigma_element(n, l.index, -1)?;
                pos.add(&neg.negate())?
            }
        };
        acc = acc.mul_capped(&factor, cap)?;
    }
    Ok(acc)
}

impl RingElement {
    fn negate(&self) -> RingElement {
        RingElement {
            strands: self.strands,
            terms: self.terms.iter().map(|(nf, &c)| (nf.clone(), -c)).collect(),
        }
    }
}

fn sigma_element(n: usize, index: usize, sign: i64) -> Result<RingElement, Error> {
    let text = if sign > 0 {
        format!("s{index}")
    } else {
        format!("S{index}")
    };
    let word = crate::word::parse(&text, n)?;
    Ok(RingElement::monomial(normal_form(&word)?, 1))
}

/// Decides equality in `PM_n` by comparing desingularization images.
pub fn equal_pm(u: &Word, v: &Word) -> Result<bool, Error> {
    equal_pm_capped(u, v, DEFAULT_TERM_CAP)
}

/// [`equal_pm`] with an explicit expansion cap.
pub fn equal_pm_capped(u: &Word, v: &Word, cap: usize) -> Result<bool, Error> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(eta_capped(u, cap)? == eta_capped(v, cap)?)
}

/// The complete invariant of `PM_2`: the monoid on two strands splits as the
/// direct product of the crossing exponent and the pre-crossing count, so the
/// pair `(σ-exponent sum, p-count)` decides equality.
pub fn pm2_canonical(w: &Word) -> Result<(i64, usize), Error> {
    if w.strands() != 2 {
        return Err(Error::NotTwoStrands {
            strands: w.strands(),
        });
    }
    Ok(crate::word::stats(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{concat, parse};

    fn w(text: &str, n: usize) -> Word {
        parse(text, n).unwrap()
    }

    fn nf(text: &str, n: usize) -> NormalForm {
        normal_form(&w(text, n)).unwrap()
    }

    #[test]
    fn eta_of_single_pre_crossing() {
        let e = eta(&w("p1", 2)).unwrap();
        assert_eq!(e.term_count(), 2);
        assert_eq!(e.coefficient(&nf("s1", 2)), 1);
        assert_eq!(e.coefficient(&nf("S1", 2)), -1);
    }

    #[test]
    fn eta_of_identity() {
        let e = eta(&w("", 3)).unwrap();
        assert_eq!(e, RingElement::one(3));
    }

    #[test]
    fn eta_cancels_pre_times_sigma() {
        // (σ1 − σ1⁻¹)·σ1 = σ1² − 1.
        let e = eta(&w("p1 s1", 2)).unwrap();
        assert_eq!(e.term_count(), 2);
        assert_eq!(e.coefficient(&nf("s1 s1", 2)), 1);
        assert_eq!(e.coefficient(&nf("", 2)), -1);
    }

    #[test]
    fn eta_square_of_pre() {
        // (σ1 − σ1⁻¹)² = σ1² − 2 + σ1⁻².
        let e = eta(&w("p1 p1", 2)).unwrap();
        assert_eq!(e.term_count(), 3);
        assert_eq!(e.coefficient(&nf("s1 s1", 2)), 1);
        assert_eq!(e.coefficient(&nf("", 2)), -2);
        assert_eq!(e.coefficient(&nf("S1 S1", 2)), 1);
    }

    #[test]
    fn add_examples() {
        let x = RingElement::monomial(nf("s1", 2), 1);
        let minus_x = RingElement::monomial(nf("s1", 2), -1);
        assert!(x.add(&minus_x).unwrap().is_zero());
        let y = RingElement::monomial(nf("S1", 2), 3);
        let two_x = RingElement::monomial(nf("s1", 2), 2);
        let sum = two_x.add(&y).unwrap();
        assert_eq!(sum.term_count(), 2);
        assert_eq!(sum.coefficient(&nf("s1", 2)), 2);
        assert_eq!(sum.coefficient(&nf("S1", 2)), 3);
        assert_eq!(x.add(&RingElement::zero(2)).unwrap(), x);
    }

    #[test]
    fn mul_examples() {
        let x = RingElement::monomial(nf("s1", 2), 1);
        let xinv = RingElement::monomial(nf("S1", 2), 1);
        assert_eq!(x.mul(&xinv).unwrap(), RingElement::one(2));
        let e = eta(&w("p1 p1", 2)).unwrap();
        assert_eq!(RingElement::one(2).mul(&e).unwrap(), e);
    }

    #[test]
    fn mul_cap_is_enforced() {
        let e = eta(&w("p1 p1", 2)).unwrap();
        assert!(matches!(
            e.mul_capped(&e, 8),
            Err(Error::TermCapExceeded { terms: 9, cap: 8 })
        ));
        // And η propagates the cap: five pre-crossings exceed a cap of 8.
        assert!(matches!(
            eta_capped(&w("p1 p1 p1 p1 p1", 2), 8),
            Err(Error::TermCapExceeded { .. })
        ));
    }

    #[test]
    fn equal_pm_relation_examples() {
        assert!(equal_pm(&w("s1 s2 p1", 3), &w("p2 s1 s2", 3)).unwrap());
        assert!(equal_pm(&w("p1 s1", 2), &w("s1 p1", 2)).unwrap());
        assert!(!equal_pm(&w("p1 p2", 3), &w("p2 p1", 3)).unwrap());
        assert!(matches!(
            equal_pm(&w("p1", 2), &w("p1", 3)),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn equal_pm_agrees_with_nf_on_classical_words() {
        let pairs = [
            ("s1 s2 s1", "s2 s1 s2", true),
            ("s1 S1", "", true),
            ("s1", "s2", false),
            ("S2 s1 s1", "s1 s1 S2", false),
        ];
        for (a, b, expect) in pairs {
            let u = w(a, 3);
            let v = w(b, 3);
            assert_eq!(equal_pm(&u, &v).unwrap(), expect);
            assert_eq!(crate::garside::nf_equal(&u, &v).unwrap(), expect);
        }
    }

    #[test]
    fn pm2_canonical_examples() {
        assert_eq!(pm2_canonical(&w("s1 p1 S1", 2)).unwrap(), (0, 1));
        assert_eq!(pm2_canonical(&w("", 2)).unwrap(), (0, 0));
        assert!(matches!(
            pm2_canonical(&w("s1", 3)),
            Err(Error::NotTwoStrands { strands: 3 })
        ));
    }

    #[test]
    fn render_sorted_lines() {
        let e = eta(&w("p1", 2)).unwrap();
        assert_eq!(e.render(), "-1*-1|\n1*1|");
        assert_eq!(RingElement::zero(2).render(), "0");
    }

    #[test]
    fn eta_multiplicative_on_samples() {
        let samples = [
            (w("p1 s2", 3), w("S1 p2", 3)),
            (w("p1 p1", 3), w("s2 S1", 3)),
            (w("", 3), w("p2 s1 s1", 3)),
        ];
        for (u, v) in samples {
            let lhs = eta(&concat(&u, &v).unwrap()).unwrap();
            let rhs = eta(&u).unwrap().mul(&eta(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    mod properties {
        use super::*;
        use crate::rng::{random_word, Rng};

        #[test]
        fn ring_axioms_on_random_elements() {
            let mut rng = Rng::new(0x5eed_0001);
            for _ in 0..40 {
                let n = 2 + (rng.below(3) as usize);
                let a = eta(&random_word(&mut rng, n, 4, 2)).unwrap();
                let b = eta(&random_word(&mut rng, n, 4, 2)).unwrap();
                let c = eta(&random_word(&mut rng, n, 4, 2)).unwrap();
                // Associativity of multiplication.
                let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
                let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc);
                // Distributivity over addition.
                let left = a.mul(&b.add(&c).unwrap()).unwrap();
                let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
                assert_eq!(left, right);
                // Addition commutes.
                assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            }
        }

        #[test]
        fn eta_homomorphism_random() {
            let mut rng = Rng::new(0x5eed_0002);
            for _ in 0..60 {
                let n = 2 + (rng.below(3) as usize);
                let u = random_word(&mut rng, n, 6, 3);
                let v = random_word(&mut rng, n, 6, 3);
                let lhs = eta(&concat(&u, &v).unwrap()).unwrap();
                let rhs = eta(&u).unwrap().mul(&eta(&v).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn eta_invariant_under_free_reduction() {
            let mut rng = Rng::new(0x5eed_0003);
            for _ in 0..60 {
                let n = 2 + (rng.below(3) as usize);
                let u = random_word(&mut rng, n, 8, 2);
                let r = crate::word::free_reduce(&u);
                assert!(equal_pm(&u, &r).unwrap());
            }
        }

        #[test]
        fn eta_matches_brute_force_resolution_sum() {
            // Independent route: the image of a word is the signed sum over
            // all resolutions of its pre-crossings, each resolved word taken
            // as a single canonical term. Never touches ring multiplication.
            let mut rng = Rng::new(0x5eed_0005);
            for _ in 0..100 {
                let n = 2 + (rng.below(3) as usize);
                let word = random_word(&mut rng, n, 6, 4);
                let k = word.pre_count();
                let mut brute = RingElement::zero(n);
                for bits in 0..(1u64 << k) {
                    let resolution = crate::closure::Resolution::from_bits(bits, k);
                    let sign = match resolution.choices().iter().filter(|&&c| c < 0).count() % 2 {
                        0 => 1,
                        _ => -1,
                    };
                    let resolved = crate::closure::resolve(&word, &resolution).unwrap();
                    let term = RingElement::monomial(normal_form(&resolved).unwrap(), sign);
                    brute = brute.add(&term).unwrap();
                }
                assert_eq!(eta(&word).unwrap(), brute);
            }
        }

        #[test]
        fn equal_pm_matches_nf_equal_on_classical_words() {
            let mut rng = Rng::new(0x5eed_0004);
            for _ in 0..200 {
                let n = 2 + (rng.below(3) as usize);
                let u = crate::rng::random_classical_word(&mut rng, n, 6);
                let v = crate::rng::random_classical_word(&mut rng, n, 6);
                assert_eq!(
                    equal_pm(&u, &v).unwrap(),
                    crate::garside::nf_equal(&u, &v).unwrap()
                );
            }
        }
    }
}
