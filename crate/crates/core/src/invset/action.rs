use super::set::InvariantSet;
use super::skeleton::gamma;
use crate::error::{Error, Result};
use crate::weyl::Rational;
use crate::weyl::WeylPoint;
use crate::words::ParkingWord;

/// `j · Δ = Δ \ {a_j}` where `a_j` is the `j`-th smallest `m`-generator.
/// Returns the new set and `a_j`.
pub fn act_letter_set(set: &InvariantSet, j: usize, m: usize) -> Result<(InvariantSet, i64)> {
    if j >= m {
        return Err(Error::LetterOutOfRange { letter: j, m });
    }
    let gens = set.generators(m)?;
    let a = gens[j];
    Ok((set.without(a)?, a))
}

/// Folds [`act_letter_set`] over the word; returns the final set and the
/// removed elements in application order.
pub fn act_word_set(set: &InvariantSet, w: &ParkingWord) -> Result<(InvariantSet, Vec<i64>)> {
    let mut cur = set.clone();
    let mut removed = Vec::with_capacity(w.n());
    for &j in w.letters() {
        let (next, a) = act_letter_set(&cur, j, w.m())?;
        removed.push(a);
        cur = next;
    }
    Ok((cur, removed))
}

/// Sorted `m`-generators minus their mean.
pub fn phi(set: &InvariantSet, m: usize) -> Result<WeylPoint> {
    let gens: Vec<Rational> = set
        .generators(m)?
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    WeylPoint::balanced_from_rationals(&gens)
}

/// The monotone word removing the `n`-generators of `Δ` smallest first:
/// letter `i` is the index of the `i`-th `n`-generator among the current
/// `m`-generators.
pub fn associated_monotone(set: &InvariantSet, m: usize, n: usize) -> Result<ParkingWord> {
    set.require_invariant(m as i64)?;
    let targets = set.generators(n)?;
    let mut cur = set.clone();
    let mut letters = Vec::with_capacity(n);
    for a in targets {
        let gens = cur.generators(m)?;
        let idx = gens.binary_search(&a).map_err(|_| {
            Error::Invariant(format!(
                "{a} is an {n}-generator of {set} but not an {m}-generator of {cur}"
            ))
        })?;
        letters.push(idx);
        cur = cur.without(a)?;
    }
    let word = ParkingWord::new(m, letters)?;
    if !word.is_monotone() {
        return Err(Error::Invariant(format!(
            "associated word {word} of {set} is not monotone"
        )));
    }
    Ok(word)
}

/// Same Dyck path under [`gamma`].
pub fn equivalent(a: &InvariantSet, b: &InvariantSet, m: usize, n: usize) -> Result<bool> {
    Ok(gamma(a, m, n)? == gamma(b, m, n)?)
}
