use num_integer::Integer;

use super::set::InvariantSet;
use crate::budget::DEFAULT_WORD_CAP;
use crate::error::{Error, Result};

/// All 0-normalized `(m, n)`-invariant sets, ordered by gap count then gaps.
///
/// Coprime only. The gaps of such a set are a subset of the gaps of the
/// semigroup `⟨m, n⟩` closed under subtracting `m` and `n`.
pub fn enumerate_invariant_sets(m: usize, n: usize) -> Result<Vec<InvariantSet>> {
    if m == 0 || n == 0 || m.gcd(&n) != 1 {
        return Err(Error::Unsupported(format!(
            "invariant-set enumeration needs coprime m, n ≥ 1 (got {m}, {n})"
        )));
    }
    let frobenius_bound = ((m - 1) * (n - 1)) as i64;
    closed_gap_sets(m as i64, n as i64, frobenius_bound - 1)
}

/// 0-normalized `(m, n)`-invariant sets whose gaps lie in `[1, bound]`.
/// Complete for coprime inputs once `bound ≥ (m−1)(n−1) − 1`; for other
/// inputs this is a finite slice of an infinite family.
pub fn enumerate_bounded_sets(m: usize, n: usize, bound: i64) -> Result<Vec<InvariantSet>> {
    if m == 0 || n == 0 {
        return Err(Error::Malformed("m and n must be positive".into()));
    }
    closed_gap_sets(m as i64, n as i64, bound)
}

fn closed_gap_sets(m: i64, n: i64, bound: i64) -> Result<Vec<InvariantSet>> {
    // an integer in [1, bound] may be a gap only if it is not in ⟨m, n⟩
    let top = bound.max(0) as usize;
    let mut in_semigroup = vec![false; top + 1];
    in_semigroup[0] = true;
    for x in 1..=top {
        let xi = x as i64;
        in_semigroup[x] = (xi >= m && in_semigroup[(xi - m) as usize])
            || (xi >= n && in_semigroup[(xi - n) as usize]);
    }
    let candidates: Vec<i64> = (1..=top)
        .filter(|&x| !in_semigroup[x])
        .map(|x| x as i64)
        .collect();

    let mut out = Vec::new();
    let mut chosen = vec![false; top + 1];
    let mut gaps = Vec::new();
    search(m, n, &candidates, 0, &mut chosen, &mut gaps, &mut out)?;
    out.sort_by(|a: &InvariantSet, b| (a.gaps().len(), a.gaps()).cmp(&(b.gaps().len(), b.gaps())));
    Ok(out)
}

fn search(
    m: i64,
    n: i64,
    candidates: &[i64],
    k: usize,
    chosen: &mut [bool],
    gaps: &mut Vec<i64>,
    out: &mut Vec<InvariantSet>,
) -> Result<()> {
    if k == candidates.len() {
        if out.len() as u64 >= DEFAULT_WORD_CAP {
            return Err(Error::Budget {
                what: "invariant sets",
                limit: DEFAULT_WORD_CAP,
            });
        }
        out.push(InvariantSet::new(0, gaps.clone())?);
        return Ok(());
    }
    let g = candidates[k];
    search(m, n, candidates, k + 1, chosen, gaps, out)?;
    // g may be a gap only if g − m and g − n are gaps whenever nonnegative
    let closed = |s: i64| s < 0 || (s > 0 && chosen[s as usize]);
    if closed(g - m) && closed(g - n) {
        chosen[g as usize] = true;
        gaps.push(g);
        search(m, n, candidates, k + 1, chosen, gaps, out)?;
        gaps.pop();
        chosen[g as usize] = false;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_dyck_words;

    /// Every gap subset of [1, bound] filtered by the invariance test.
    fn brute(m: usize, n: usize, bound: i64) -> Vec<InvariantSet> {
        let span = bound as usize;
        let mut out = Vec::new();
        for mask in 0u32..(1 << span) {
            let gaps: Vec<i64> = (0..span)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b as i64 + 1)
                .collect();
            let s = InvariantSet::new(0, gaps).unwrap();
            if s.is_invariant(m, n) {
                out.push(s);
            }
        }
        out.sort_by(|a, b| (a.gaps().len(), a.gaps()).cmp(&(b.gaps().len(), b.gaps())));
        out
    }

    #[test]
    fn small_grids() {
        let four_three = enumerate_invariant_sets(4, 3).unwrap();
        assert_eq!(four_three.len(), 5);
        assert_eq!(four_three[0], InvariantSet::naturals());
        let two_three = enumerate_invariant_sets(2, 3).unwrap();
        assert_eq!(
            two_three,
            vec![
                InvariantSet::naturals(),
                InvariantSet::new(0, vec![1]).unwrap()
            ]
        );
    }

    #[test]
    fn matches_brute_force() {
        for (m, n) in [(3usize, 4usize), (3, 5), (4, 5), (2, 7)] {
            let bound = ((m - 1) * (n - 1)) as i64 + 2;
            assert_eq!(enumerate_invariant_sets(m, n).unwrap(), brute(m, n, bound));
        }
        assert_eq!(enumerate_bounded_sets(6, 4, 12).unwrap(), brute(6, 4, 12));
    }

    #[test]
    fn counts_equal_dyck_counts() {
        for (m, n) in [(3usize, 4usize), (4, 3), (3, 5), (5, 3), (2, 5), (4, 7)] {
            assert_eq!(
                enumerate_invariant_sets(m, n).unwrap().len(),
                enumerate_dyck_words(m, n).unwrap().len()
            );
        }
        assert!(enumerate_invariant_sets(6, 4).is_err());
    }
}
