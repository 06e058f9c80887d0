use std::time::Instant;

use num_integer::Integer;

use super::{collect, CaseResult, SuiteReport};
use crate::budget::DEFAULT_WORD_CAP;
use crate::error::Result;
use crate::invset::{act_word_set, enumerate_bounded_sets, enumerate_invariant_sets, InvariantSet};
use crate::par::Execution;
use crate::weyl::{act_word, find_fixed_point_default, Rational, WeylPoint};
use crate::words::{all_words, ParkingWord};

/// Parking test written independently of the words module: the sorted
/// letters `b_0 ≤ … ≤ b_{n−1}` must satisfy `b_k·n ≤ k·m`.
pub fn parking_by_sorting(letters: &[usize], m: usize) -> bool {
    let n = letters.len();
    let mut b = letters.to_vec();
    b.sort_unstable();
    b.iter().enumerate().all(|(k, &v)| v * n <= k * m) && b.iter().all(|&v| v < m)
}

/// Every word in `[m]^n`: parking status (recomputed here) against the
/// existence of a fixed point.
pub fn cross_check_parking(m: usize, n: usize, exec: Execution) -> Result<SuiteReport> {
    let started = Instant::now();
    let results = parking_cases(m, n, exec)?;
    Ok(collect(
        "parking-fixed-point",
        &[(m, n)],
        None,
        results,
        started,
    ))
}

pub(crate) fn parking_cases(m: usize, n: usize, exec: Execution) -> Result<Vec<CaseResult>> {
    let words = all_words(m, n, DEFAULT_WORD_CAP)?;
    Ok(exec.map(&words, |w| {
        let parking = parking_by_sorting(w.letters(), m);
        let report = find_fixed_point_default(w);
        let input = serde_json::json!({ "m": m, "n": n, "word": w.render() });
        if report.is_fixed_point() {
            // confirm the reported point really is fixed
            match act_word(&report.terminal, w) {
                Ok((y, _)) if y == report.terminal => {}
                _ => return CaseResult::fail(input, "reported fixed point is not fixed"),
            }
        }
        let base = CaseResult::ok()
            .count("words", 1)
            .count("parking", parking as u64);
        match (parking, report.is_fixed_point()) {
            (true, false) => CaseResult::fail(
                input,
                format!(
                    "parking word without a fixed point (period {:?} after {} steps)",
                    report.period, report.budget_used
                ),
            ),
            (false, true) => CaseResult::fail(input, "non-parking word has a fixed point"),
            _ => base,
        }
    }))
}

/// All words of `[m]^n` with `w · Δ = Δ + n`.
pub fn shifting_words(set: &InvariantSet, m: usize, n: usize) -> Result<Vec<ParkingWord>> {
    let target = set.shifted(n as i64);
    let mut out = Vec::new();
    for w in all_words(m, n, DEFAULT_WORD_CAP)? {
        if act_word_set(set, &w)?.0 == target {
            out.push(w);
        }
    }
    Ok(out)
}

/// A 0-normalized set `Δ` with `p · Δ = Δ + n`, searched in enumeration
/// order. Coprime pairs search every set; otherwise only sets with gaps in
/// `[1, bound]` (default `m·n`) are tried, so `None` is not a disproof.
pub fn find_invariant_witness(p: &ParkingWord, bound: Option<i64>) -> Result<Option<InvariantSet>> {
    let (m, n) = (p.m(), p.n());
    let candidates = if m.gcd(&n) == 1 {
        enumerate_invariant_sets(m, n)?
    } else {
        enumerate_bounded_sets(m, n, bound.unwrap_or((m * n) as i64))?
    };
    for set in candidates {
        if act_word_set(&set, p)?.0 == set.shifted(n as i64) {
            return Ok(Some(set));
        }
    }
    Ok(None)
}

/// Whether `y` lies in the closure of the alcove containing the interior
/// point `x`.
pub fn in_closed_alcove(x: &WeylPoint, y: &WeylPoint) -> bool {
    let m = x.m();
    let mr = Rational::from_integer(m as i64);
    let (xc, yc) = (x.coords(), y.coords());
    for i in 0..m {
        for j in (i + 1)..m {
            let k = ((xc[j] - xc[i]) / mr).floor();
            let d = yc[j] - yc[i];
            if d < k * mr || d > (k + Rational::from_integer(1)) * mr {
                return false;
            }
        }
    }
    true
}
