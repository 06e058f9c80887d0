use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::action::act_word_fast;
use super::centroid::fundamental_centroid;
use super::point::WeylPoint;
use crate::budget;
use crate::error::{Error, Result};
use crate::words::ParkingWord;

/// Outcome of iterating a word on a point.
///
/// `terminal` is the first point of the detected cycle, or the last point
/// reached when the budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub preperiod: usize,
    pub period: Option<usize>,
    pub terminal: WeylPoint,
    pub budget_used: usize,
}

impl OrbitReport {
    pub fn is_fixed_point(&self) -> bool {
        self.period == Some(1)
    }
}

fn iterate(w: &ParkingWord, x: &WeylPoint, budget: usize) -> OrbitReport {
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut cur = x.clone();
    seen.insert(cur.nums().to_vec(), 0);
    let mut history = vec![cur.clone()];
    for step in 1..=budget {
        cur = act_word_fast(&cur, w.letters());
        if let Some(&first) = seen.get(cur.nums()) {
            return OrbitReport {
                preperiod: first,
                period: Some(step - first),
                terminal: history.swap_remove(first),
                budget_used: step,
            };
        }
        seen.insert(cur.nums().to_vec(), step);
        history.push(cur.clone());
    }
    OrbitReport {
        preperiod: budget,
        period: None,
        terminal: cur,
        budget_used: budget,
    }
}

/// Minimal preperiod and period of `x` under `w`, using at most `budget`
/// applications of the whole word.
pub fn orbit_analysis(w: &ParkingWord, x: &WeylPoint, budget: usize) -> Result<OrbitReport> {
    if w.m() != x.m() {
        return Err(Error::DimensionMismatch {
            expected: x.m(),
            found: w.m(),
        });
    }
    let report = iterate(w, x, budget);
    if report.period.is_none() {
        return Err(Error::Budget {
            what: "word applications",
            limit: budget as u64,
        });
    }
    Ok(report)
}

/// Iterates `w` from the fundamental centroid. Budget exhaustion is
/// reported through `period: None` rather than an error.
pub fn find_fixed_point(w: &ParkingWord, budget: usize) -> OrbitReport {
    iterate(w, &fundamental_centroid(w.m()), budget)
}

/// [`find_fixed_point`] with the default budget `64·(m+n)²`, or the
/// `RPL_BUDGET` override.
pub fn find_fixed_point_default(w: &ParkingWord) -> OrbitReport {
    let budget = budget::env_override().unwrap_or_else(|| budget::orbit_budget(w.m(), w.n()));
    find_fixed_point(w, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::action::act_word;

    fn pt(v: &[i64]) -> WeylPoint {
        WeylPoint::from_integers(v.to_vec()).unwrap()
    }

    #[test]
    fn fixed_point_of_2100() {
        let w = ParkingWord::parse("2100", 3).unwrap();
        let r = find_fixed_point(&w, 1000);
        assert!(r.is_fixed_point());
        assert_eq!(r.terminal, pt(&[-4, 0, 4]));
        let a = orbit_analysis(&w, &pt(&[-4, 1, 3]), 100).unwrap();
        assert_eq!(a.preperiod, 2);
        assert_eq!(a.terminal, pt(&[-4, 0, 4]));
        let f = orbit_analysis(&w, &pt(&[-4, 0, 4]), 100).unwrap();
        assert_eq!((f.preperiod, f.period), (0, Some(1)));
    }

    #[test]
    fn non_parking_word_has_no_fixed_point() {
        // 022 read right to left is [2,2,0]; two letters ≥ 1 exceed the bound
        let w = ParkingWord::parse("022", 4).unwrap();
        assert!(!w.is_parking());
        let r = find_fixed_point(&w, 10_000);
        assert!(!r.is_fixed_point());
        // independently: no point on the orbit is mapped to itself
        let mut x = fundamental_centroid(4);
        for _ in 0..10_000 {
            let (y, _) = act_word(&x, &w).unwrap();
            assert_ne!(y, x);
            x = y;
        }
    }

    #[test]
    fn zero_word_is_fixed() {
        for (m, n) in [(3, 4), (4, 3), (2, 5)] {
            let w = ParkingWord::zeros(m, n).unwrap();
            assert!(find_fixed_point_default(&w).is_fixed_point());
        }
    }

    #[test]
    fn report_invariant() {
        let w = ParkingWord::parse("1200", 3).unwrap();
        assert!(w.is_parking());
        let x = WeylPoint::new(vec![-7, 1, 6], 2).unwrap();
        let r = orbit_analysis(&w, &x, 500).unwrap();
        let p = r.period.unwrap();
        let mut y = r.terminal.clone();
        for _ in 0..p {
            y = act_word(&y, &w).unwrap().0;
        }
        assert_eq!(y, r.terminal);
    }

    #[test]
    fn budget_exhaustion() {
        let w = ParkingWord::parse("022", 4).unwrap();
        let err = orbit_analysis(&w, &fundamental_centroid(4), 3).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }
}
