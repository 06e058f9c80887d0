use serde::{Deserialize, Serialize};

use super::point::{AmbientPoint, Permutation, WeylPoint};
use crate::error::{Error, Result};
use crate::words::ParkingWord;

fn check_letter(i: usize, m: usize) -> Result<()> {
    if i >= m {
        return Err(Error::LetterOutOfRange { letter: i, m });
    }
    Ok(())
}

/// `i ⋆ x`: add `m` to slot `i`, subtract `1` everywhere, no resorting.
pub fn star_shift(x: &WeylPoint, i: usize) -> Result<AmbientPoint> {
    let m = x.m();
    check_letter(i, m)?;
    let den = x.den();
    let mut nums = x.nums().to_vec();
    for v in nums.iter_mut() {
        *v -= den;
    }
    nums[i] += m as i64 * den;
    Ok(AmbientPoint::from_raw(nums, den))
}

/// One letter of the action, with the resorting permutation `σ_{i,x}`.
///
/// Ties are broken by pre-sort slot index, so boundary points still get a
/// well-defined permutation.
pub fn act_letter(x: &WeylPoint, i: usize) -> Result<(WeylPoint, Permutation)> {
    let shifted = star_shift(x, i)?;
    Ok(sort_with_permutation(&shifted))
}

pub(crate) fn sort_with_permutation(shifted: &AmbientPoint) -> (WeylPoint, Permutation) {
    let nums = shifted.nums();
    let mut order: Vec<usize> = (0..nums.len()).collect();
    order.sort_by_key(|&j| nums[j]);
    let mut sigma = vec![0; nums.len()];
    for (dest, &src) in order.iter().enumerate() {
        sigma[src] = dest;
    }
    let sorted = order.iter().map(|&j| nums[j]).collect();
    (
        WeylPoint::from_sorted_raw(sorted, shifted.den()),
        Permutation::from_images(sigma).expect("sort order is a permutation"),
    )
}

impl WeylPoint {
    pub(crate) fn from_sorted_raw(nums: Vec<i64>, den: i64) -> WeylPoint {
        debug_assert!(nums.windows(2).all(|w| w[0] <= w[1]));
        AmbientPoint::from_raw(nums, den)
            .try_into()
            .expect("action preserves sum zero and order")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub letter: usize,
    /// Numerators of `letter ⋆ x` over `den`.
    pub pre_sort: Vec<i64>,
    pub den: i64,
    pub sigma: Permutation,
}

/// Per-letter record of a word acting on a point, plus the composite
/// permutation `σ_{w,x}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionTrace {
    pub sigma: Permutation,
    pub steps: Vec<TraceStep>,
}

impl ActionTrace {
    /// Recomputes `σ_{w,x}` from the per-letter permutations.
    pub fn composed(&self) -> Permutation {
        self.steps
            .iter()
            .fold(Permutation::identity(self.sigma.len()), |acc, s| {
                acc.then(&s.sigma)
            })
    }
}

/// Folds [`act_letter`] over the word in application order.
pub fn act_word(x: &WeylPoint, w: &ParkingWord) -> Result<(WeylPoint, ActionTrace)> {
    if w.m() != x.m() {
        return Err(Error::DimensionMismatch {
            expected: x.m(),
            found: w.m(),
        });
    }
    let mut cur = x.clone();
    let mut sigma = Permutation::identity(x.m());
    let mut steps = Vec::with_capacity(w.n());
    for &letter in w.letters() {
        let shifted = star_shift(&cur, letter)?;
        let (next, s) = sort_with_permutation(&shifted);
        sigma = sigma.then(&s);
        steps.push(TraceStep {
            letter,
            pre_sort: shifted.nums().to_vec(),
            den: shifted.den(),
            sigma: s,
        });
        cur = next;
    }
    Ok((cur, ActionTrace { sigma, steps }))
}

/// Applies the word without tracing; the hot path of orbit iteration.
pub(crate) fn act_word_fast(x: &WeylPoint, letters: &[usize]) -> WeylPoint {
    let m = x.m() as i64;
    let den = x.den();
    let mut nums = x.nums().to_vec();
    for &i in letters {
        let v = nums.remove(i) + m * den;
        let pos = nums.partition_point(|&y| y <= v);
        nums.insert(pos, v);
        nums.iter_mut().for_each(|y| *y -= den);
    }
    WeylPoint::from_sorted_raw(nums, den)
}

/// The unbalanced action on an `m`-element integer set: remove the `i`-th
/// smallest element `α`, insert `α + m`. Returns the new state and `α`.
pub fn act_letter_unbalanced(state: &[i64], i: usize) -> Result<(Vec<i64>, i64)> {
    let m = state.len();
    check_letter(i, m)?;
    if state.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Malformed(format!(
            "state {state:?} is not strictly increasing"
        )));
    }
    let alpha = state[i];
    let target = alpha + m as i64;
    let mut next: Vec<i64> = state.to_vec();
    next.remove(i);
    match next.binary_search(&target) {
        Ok(_) => Err(Error::Collision(format!(
            "{target} already present when acting by {i} on {state:?}"
        ))),
        Err(pos) => {
            next.insert(pos, target);
            Ok((next, alpha))
        }
    }
}

/// Folds [`act_letter_unbalanced`] over a word; returns the final state and
/// the removed elements in order.
pub fn act_word_unbalanced(state: &[i64], w: &ParkingWord) -> Result<(Vec<i64>, Vec<i64>)> {
    if w.m() != state.len() {
        return Err(Error::DimensionMismatch {
            expected: state.len(),
            found: w.m(),
        });
    }
    let mut cur = state.to_vec();
    let mut removed = Vec::with_capacity(w.n());
    for &i in w.letters() {
        let (next, alpha) = act_letter_unbalanced(&cur, i)?;
        removed.push(alpha);
        cur = next;
    }
    Ok((cur, removed))
}
