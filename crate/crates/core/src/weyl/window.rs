use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::centroid::fundamental_centroid;
use super::point::AmbientPoint;
use crate::budget::DEFAULT_WORD_CAP;
use crate::error::{Error, Result};

/// An affine permutation of `Z` in 0-indexed window notation:
/// `ω(x + n) = ω(x) + n` and `Σ ω(k) = n(n−1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WindowJson", into = "WindowJson")]
pub struct AffineWindow {
    window: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct WindowJson {
    n: usize,
    window: Vec<i64>,
}

impl TryFrom<WindowJson> for AffineWindow {
    type Error = Error;
    fn try_from(j: WindowJson) -> Result<Self> {
        if j.window.len() != j.n {
            return Err(Error::DimensionMismatch {
                expected: j.n,
                found: j.window.len(),
            });
        }
        AffineWindow::new(j.window)
    }
}

impl From<AffineWindow> for WindowJson {
    fn from(w: AffineWindow) -> Self {
        WindowJson {
            n: w.window.len(),
            window: w.window,
        }
    }
}

/// Checks both window conditions: distinct residues mod `n` and the sum.
pub fn validate_window(window: &[i64]) -> Result<()> {
    let n = window.len();
    if n == 0 {
        return Err(Error::InvalidWindow("empty window".into()));
    }
    let ni = n as i64;
    let mut seen = vec![false; n];
    for &v in window {
        let r = v.rem_euclid(ni) as usize;
        if seen[r] {
            return Err(Error::InvalidWindow(format!(
                "{window:?}: residue {r} repeated mod {n}"
            )));
        }
        seen[r] = true;
    }
    let sum: i64 = window.iter().sum();
    if sum != ni * (ni - 1) / 2 {
        return Err(Error::InvalidWindow(format!(
            "{window:?}: sum {sum}, expected {}",
            ni * (ni - 1) / 2
        )));
    }
    Ok(())
}

impl AffineWindow {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        validate_window(&window)?;
        Ok(AffineWindow { window })
    }

    pub fn identity(n: usize) -> Self {
        AffineWindow {
            window: (0..n as i64).collect(),
        }
    }

    /// Reads a 1-indexed label (entries summing to `n(n+1)/2`).
    pub fn from_one_indexed(label: &[i64]) -> Result<Self> {
        AffineWindow::new(label.iter().map(|v| v - 1).collect())
    }

    pub fn to_one_indexed(&self) -> Vec<i64> {
        self.window.iter().map(|v| v + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn eval(&self, x: i64) -> i64 {
        let (q, r) = x.div_mod_floor(&(self.n() as i64));
        self.window[r as usize] + q * self.n() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64)
    }

    pub fn inverse(&self) -> AffineWindow {
        let n = self.n() as i64;
        let mut inv = vec![0; self.n()];
        for (s, &v) in self.window.iter().enumerate() {
            // ω(s) = r + q·n  ⇒  ω^{-1}(r) = s − q·n
            let (q, r) = v.div_mod_floor(&n);
            inv[r as usize] = s as i64 - q * n;
        }
        AffineWindow { window: inv }
    }

    /// `ω(x) < ω(x + m)` for all `x`.
    pub fn is_m_stable(&self, m: usize) -> bool {
        let m = m as i64;
        (0..self.n() as i64).all(|x| self.eval(x) < self.eval(x + m))
    }

    /// `ω^{-1}(x) < ω^{-1}(x + m)` for all `x`.
    pub fn is_m_restricted(&self, m: usize) -> bool {
        self.inverse().is_m_stable(m)
    }

    /// Right multiplication by the generator `s_i`: for `i ≥ 1` swap
    /// positions `i−1` and `i`; `s_0` swaps positions `−1` and `0`.
    pub fn times_generator(&self, i: usize) -> AffineWindow {
        let n = self.n();
        assert!(i < n, "generator index {i} out of range for n = {n}");
        let mut w = self.window.clone();
        if i == 0 {
            let ni = n as i64;
            let (first, last) = (w[0], w[n - 1]);
            w[0] = last - ni;
            w[n - 1] = first + ni;
        } else {
            w.swap(i - 1, i);
        }
        AffineWindow { window: w }
    }

    /// Whether `ω·s_i` is shorter than `ω`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.n();
        if i == 0 {
            self.window[n - 1] > self.window[0] + n as i64
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    /// Coxeter length: the number of inversions `(i, j)` with `0 ≤ i < n`,
    /// `i < j` and `ω(i) > ω(j)`.
    pub fn length(&self) -> u64 {
        let n = self.n() as i64;
        let mut len = 0u64;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                let d = self.window[i] - self.window[j];
                // pairs (i, j + k·n), k ≥ 0, with ω(i) > ω(j) + k·n
                if d > 0 {
                    len += ((d + n - 1) / n) as u64;
                } else {
                    // pairs (j, i + k·n), k ≥ 1, with ω(j) > ω(i) + k·n
                    len += ((-d - 1) / n).max(0) as u64;
                }
            }
        }
        len
    }

    /// Generators `[i_1, …, i_k]` with `ω = s_{i_k} ⋯ s_{i_1}`, found by
    /// stripping right descents, so `s_{i_1}` acts first.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut word = Vec::new();
        while !cur.is_identity() {
            let i = (0..cur.n())
                .find(|&i| cur.has_right_descent(i))
                .expect("non-identity element has a right descent");
            word.push(i);
            cur = cur.times_generator(i);
        }
        word
    }
}

impl fmt::Display for AffineWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All `m`-restricted windows of size `n`, by breadth-first search from the
/// identity along generator moves. Sorted lexicographically.
pub fn enumerate_sommers_windows(m: usize, n: usize) -> Result<Vec<AffineWindow>> {
    if m == 0 || n == 0 || m.gcd(&n) != 1 {
        return Err(Error::Unsupported(format!(
            "Sommers enumeration needs coprime m, n ≥ 1 (got {m}, {n})"
        )));
    }
    let cap = DEFAULT_WORD_CAP as usize;
    let start = AffineWindow::identity(n);
    let mut seen: BTreeSet<AffineWindow> = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for i in 0..n {
            let next = w.times_generator(i);
            if next.is_m_restricted(m) && !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
                if seen.len() > cap {
                    return Err(Error::Budget {
                        what: "Sommers windows",
                        limit: cap as u64,
                    });
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Reflection `s_i` on a point of `R^m` for the arrangement
/// `x_i − x_j ∈ mZ`: `s_i` swaps coordinates `i−1, i`; `s_0` exchanges
/// `x_0` and `x_{m−1}` across `x_{m−1} − x_0 = m`.
pub fn reflect(x: &AmbientPoint, i: usize) -> AmbientPoint {
    let m = x.dim();
    let den = x.den();
    let mut nums = x.nums().to_vec();
    if i == 0 {
        let shift = m as i64 * den;
        let (first, last) = (nums[0], nums[m - 1]);
        nums[0] = last - shift;
        nums[m - 1] = first + shift;
    } else {
        nums.swap(i - 1, i);
    }
    AmbientPoint::from_raw(nums, den)
}

/// The centroid of the alcove `ω(A_0)` in `R^m`, where `ω` has window size
/// `m`. The result is in general not sorted.
pub fn centroid_of_alcove(w: &AffineWindow, m: usize) -> Result<AmbientPoint> {
    if w.n() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: w.n(),
        });
    }
    validate_window(w.window())?;
    let start = fundamental_centroid(m).as_ambient().clone();
    Ok(w.reduced_word()
        .into_iter()
        .fold(start, |x, i| reflect(&x, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::centroid::is_centroid_coords;

    fn win(v: &[i64]) -> AffineWindow {
        AffineWindow::new(v.to_vec()).unwrap()
    }

    /// `(ω·x)_r = x_i − m·k` whenever `ω(i) = r + k·m`.
    fn direct_action(w: &AffineWindow, x: &AmbientPoint) -> AmbientPoint {
        let m = x.dim() as i64;
        let den = x.den();
        let mut out = vec![0; x.dim()];
        for (i, &v) in w.window().iter().enumerate() {
            let (k, r) = v.div_mod_floor(&m);
            out[r as usize] = x.nums()[i] - m * k * den;
        }
        AmbientPoint::new(out, den).unwrap()
    }

    #[test]
    fn validation() {
        assert!(AffineWindow::new(vec![0, 4, -1]).is_ok());
        assert!(AffineWindow::new(vec![0, 3, -1]).is_err());
        assert!(AffineWindow::new(vec![0, 1, 3]).is_err());
        assert!(AffineWindow::new(vec![]).is_err());
        let j: AffineWindow = serde_json::from_str(r#"{"n":3,"window":[0,4,-1]}"#).unwrap();
        assert_eq!(j, win(&[0, 4, -1]));
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"n":3,"window":[0,4,-1]}"#
        );
        assert!(serde_json::from_str::<AffineWindow>(r#"{"n":3,"window":[0,1,1]}"#).is_err());
    }

    #[test]
    fn inverse_by_hand() {
        let w = win(&[0, 4, -1]);
        assert_eq!(w.inverse(), win(&[0, -2, 5]));
        assert_eq!(w.inverse().inverse(), w);
        for x in -10..10 {
            assert_eq!(w.eval(w.inverse().eval(x)), x);
        }
        assert_eq!(
            AffineWindow::identity(4).inverse(),
            AffineWindow::identity(4)
        );
    }

    #[test]
    fn restriction() {
        assert!(AffineWindow::identity(3).is_m_restricted(4));
        assert!(win(&[0, 4, -1]).is_m_restricted(4));
        // [4,−1,3] (1-indexed) with one entry bumped by 3 and another by −3
        let outside = AffineWindow::from_one_indexed(&[7, -4, 3]).unwrap();
        assert!(!outside.is_m_restricted(4));
    }

    const SOMMERS_LABELS: [[i64; 3]; 16] = [
        [4, -1, 3],
        [-1, 3, 4],
        [-1, 4, 3],
        [0, 4, 2],
        [3, 1, 2],
        [1, 3, 2],
        [1, 2, 3],
        [0, 2, 4],
        [2, 0, 4],
        [-2, 2, 6],
        [3, 2, 1],
        [2, 3, 1],
        [2, 1, 3],
        [0, 1, 5],
        [1, 0, 5],
        [1, 5, 0],
    ];

    #[test]
    fn sommers_four_three_matches_figure() {
        let ws = enumerate_sommers_windows(4, 3).unwrap();
        let got: BTreeSet<Vec<i64>> = ws.iter().map(|w| w.to_one_indexed()).collect();
        let want: BTreeSet<Vec<i64>> = SOMMERS_LABELS.iter().map(|l| l.to_vec()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn sommers_counts() {
        for (m, n) in [(2usize, 3usize), (3, 4), (5, 3), (3, 5), (3, 2), (5, 2)] {
            let ws = enumerate_sommers_windows(m, n).unwrap();
            assert_eq!(ws.len(), m.pow(n as u32 - 1), "({m},{n})");
            assert!(ws.contains(&AffineWindow::identity(n)));
        }
        assert!(enumerate_sommers_windows(4, 6).is_err());
    }

    #[test]
    fn length_matches_reduced_word() {
        for w in enumerate_sommers_windows(3, 5).unwrap() {
            assert_eq!(w.reduced_word().len() as u64, w.length(), "{w}");
        }
    }

    #[test]
    fn reduced_word_rebuilds_window() {
        for w in enumerate_sommers_windows(4, 3).unwrap() {
            let word = w.reduced_word();
            // ω = s_{i_k} ⋯ s_{i_1}: multiply on the right starting from s_{i_k}
            let rebuilt = word
                .iter()
                .rev()
                .fold(AffineWindow::identity(3), |acc, &i| acc.times_generator(i));
            assert_eq!(rebuilt, w);
        }
    }

    #[test]
    fn centroids_of_alcoves() {
        let x0 = fundamental_centroid(3).as_ambient().clone();
        assert_eq!(
            centroid_of_alcove(&AffineWindow::identity(3), 3).unwrap(),
            x0
        );
        let s0 = AffineWindow::identity(3).times_generator(0);
        let c = centroid_of_alcove(&s0, 3).unwrap();
        assert_eq!(c.nums(), &[-2, 0, 2]);
        assert!(is_centroid_coords(&c));

        for m in [3usize, 4] {
            let ws = enumerate_sommers_windows(m + 1, m).unwrap();
            let mut seen = BTreeSet::new();
            for w in &ws {
                let c = centroid_of_alcove(w, m).unwrap();
                assert_eq!(
                    c,
                    direct_action(w, &fundamental_centroid(m).as_ambient().clone())
                );
                assert!(is_centroid_coords(&c), "{w} -> {c}");
                assert!(seen.insert(c));
            }
        }
        assert!(centroid_of_alcove(&AffineWindow::identity(4), 3).is_err());
    }
}
