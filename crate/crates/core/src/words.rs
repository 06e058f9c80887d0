//! Parking words, Dyck paths and their textual forms.
//!
//! A word over `[m] = {0, .., m-1}` of length `n` is stored in *application
//! order*: `letters[0]` is the letter that acts first. The compact rendering
//! runs the other way, so `"103"` is the word whose first letter is `3`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::DEFAULT_WORD_CAP;
use crate::error::{Error, Result};
use crate::par::Execution;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WordJson", into = "WordJson")]
pub struct ParkingWord {
    m: usize,
    letters: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    m: usize,
    n: usize,
    letters: Vec<usize>,
}

impl TryFrom<WordJson> for ParkingWord {
    type Error = Error;

    fn try_from(j: WordJson) -> Result<Self> {
        if j.letters.len() != j.n {
            return Err(Error::DimensionMismatch {
                expected: j.n,
                found: j.letters.len(),
            });
        }
        ParkingWord::new(j.m, j.letters)
    }
}

impl From<ParkingWord> for WordJson {
    fn from(w: ParkingWord) -> Self {
        WordJson {
            m: w.m,
            n: w.letters.len(),
            letters: w.letters,
        }
    }
}

impl ParkingWord {
    /// Builds a word over `[m]`. The word may be empty.
    pub fn new(m: usize, letters: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Malformed("alphabet size m must be positive".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l >= m) {
            return Err(Error::LetterOutOfRange { letter: bad, m });
        }
        Ok(ParkingWord { m, letters })
    }

    pub fn zeros(m: usize, n: usize) -> Result<Self> {
        Self::new(m, vec![0; n])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Letter applied at step `i`, extended periodically over all `i`.
    pub fn periodic(&self, i: usize) -> usize {
        self.letters[i % self.letters.len()]
    }

    pub fn is_parking(&self) -> bool {
        is_parking_word(self)
    }

    pub fn is_monotone(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
    }

    /// The word repeated `times` times (`p^times`).
    pub fn power(&self, times: usize) -> ParkingWord {
        ParkingWord {
            m: self.m,
            letters: self.letters.repeat(times),
        }
    }

    /// Cyclic rotation that starts acting at letter `k`.
    pub fn rotated(&self, k: usize) -> ParkingWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        ParkingWord { m: self.m, letters }
    }

    /// Parses the compact digit form, a JSON letter array, or a JSON object.
    ///
    /// Compact text is read right to left into application order and is only
    /// accepted for `m <= 10`.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            let w: ParkingWord = serde_json::from_str(text)
                .map_err(|e| Error::Malformed(format!("word object: {e}")))?;
            if w.m != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: w.m,
                });
            }
            return Ok(w);
        }
        if text.starts_with('[') {
            let letters: Vec<usize> = serde_json::from_str(text)
                .map_err(|e| Error::Malformed(format!("letter array: {e}")))?;
            return Self::new(m, letters);
        }
        if m > 10 {
            return Err(Error::Malformed(format!(
                "compact digit form needs m <= 10 (m = {m}); use a JSON array"
            )));
        }
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars().rev() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Malformed(format!("`{c}` is not a digit")))?;
            letters.push(d as usize);
        }
        Self::new(m, letters)
    }

    /// Compact right-to-left digit form, available when `m <= 10`.
    pub fn to_compact(&self) -> Result<String> {
        if self.m > 10 {
            return Err(Error::Malformed(format!(
                "compact digit form needs m <= 10 (m = {})",
                self.m
            )));
        }
        Ok(self
            .letters
            .iter()
            .rev()
            .map(|&l| char::from_digit(l as u32, 10).expect("letter below 10"))
            .collect())
    }

    /// Compact form when possible, JSON letter array otherwise.
    pub fn render(&self) -> String {
        self.to_compact()
            .unwrap_or_else(|_| serde_json::to_string(&self.letters).expect("letters serialize"))
    }
}

impl fmt::Display for ParkingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `m * #{j : w_j < i} >= i * n` for every `1 <= i <= m`.
pub fn is_parking_word(w: &ParkingWord) -> bool {
    let counts = below_counts(w.m, &w.letters);
    let n = w.n() as u64;
    let m = w.m as u64;
    (1..=w.m).all(|i| m * counts[i] >= i as u64 * n)
}

/// `counts[i] = #{letters < i}` for `i in 0..=m`.
fn below_counts(m: usize, letters: &[usize]) -> Vec<u64> {
    let mut hist = vec![0u64; m + 1];
    for &l in letters {
        hist[l + 1] += 1;
    }
    for i in 1..=m {
        hist[i] += hist[i - 1];
    }
    hist
}

fn check_cap(m: usize, n: usize, cap: u64) -> Result<()> {
    let total = (m as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if total > cap {
        return Err(Error::Budget {
            what: "m^n words to scan",
            limit: cap,
        });
    }
    Ok(())
}

/// Every word of `[m]^n` in lexicographic order of application-order letters.
pub fn all_words(m: usize, n: usize, cap: u64) -> Result<Vec<ParkingWord>> {
    if m == 0 {
        return Err(Error::Malformed("alphabet size m must be positive".into()));
    }
    check_cap(m, n, cap)?;
    let total = m.pow(n as u32);
    let mut out = Vec::with_capacity(total);
    let mut letters = vec![0usize; n];
    for _ in 0..total {
        out.push(ParkingWord {
            m,
            letters: letters.clone(),
        });
        // odometer, last position fastest
        for pos in (0..n).rev() {
            letters[pos] += 1;
            if letters[pos] < m {
                break;
            }
            letters[pos] = 0;
        }
    }
    Ok(out)
}

struct Search {
    m: usize,
    n: usize,
    monotone: bool,
}

impl Search {
    /// A prefix survives if filling the rest with zeros could still park.
    fn viable(&self, counts: &[u64], placed: usize) -> bool {
        let rest = (self.n - placed) as u64;
        let (m, n) = (self.m as u64, self.n as u64);
        (1..=self.m).all(|i| m * (counts[i] + rest) >= i as u64 * n)
    }

    fn run(&self, prefix: &mut Vec<usize>, counts: &mut [u64], out: &mut Vec<ParkingWord>) {
        if prefix.len() == self.n {
            out.push(ParkingWord {
                m: self.m,
                letters: prefix.clone(),
            });
            return;
        }
        let lo = if self.monotone {
            prefix.last().copied().unwrap_or(0)
        } else {
            0
        };
        for l in lo..self.m {
            for c in counts.iter_mut().skip(l + 1) {
                *c += 1;
            }
            prefix.push(l);
            if self.viable(counts, prefix.len()) {
                self.run(prefix, counts, out);
            }
            prefix.pop();
            for c in counts.iter_mut().skip(l + 1) {
                *c -= 1;
            }
        }
    }

    fn starting_with(&self, first: usize) -> Vec<ParkingWord> {
        let mut out = Vec::new();
        if self.n == 0 {
            return out;
        }
        let mut counts = vec![0u64; self.m + 1];
        for c in counts.iter_mut().skip(first + 1) {
            *c += 1;
        }
        let mut prefix = vec![first];
        if self.viable(&counts, 1) {
            self.run(&mut prefix, &mut counts, &mut out);
        }
        out
    }

    fn all(&self, exec: Execution) -> Vec<ParkingWord> {
        if self.n == 0 {
            return vec![ParkingWord {
                m: self.m,
                letters: Vec::new(),
            }];
        }
        exec.map_range(0..self.m, |first| self.starting_with(first))
            .into_iter()
            .flatten()
            .collect()
    }
}

/// All `(m, n)`-parking words, lexicographic in application order.
pub fn enumerate_parking_words(m: usize, n: usize) -> Result<Vec<ParkingWord>> {
    enumerate_parking_words_with(m, n, DEFAULT_WORD_CAP, Execution::default())
}

pub fn enumerate_parking_words_with(
    m: usize,
    n: usize,
    cap: u64,
    exec: Execution,
) -> Result<Vec<ParkingWord>> {
    if m == 0 || n == 0 {
        return Err(Error::Malformed("m and n must be positive".into()));
    }
    check_cap(m, n, cap)?;
    Ok(Search {
        m,
        n,
        monotone: false,
    }
    .all(exec))
}

/// A lattice path in the `n`-wide, `m`-tall grid weakly below the diagonal,
/// stored as its monotone word of column heights.
///
/// `heights()[i]` is the height of the column `n - 1 - i` (counting columns
/// left to right), so the compact rendering lists column heights left to
/// right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ParkingWord", into = "ParkingWord")]
pub struct DyckPath {
    word: ParkingWord,
}

impl TryFrom<ParkingWord> for DyckPath {
    type Error = Error;

    fn try_from(word: ParkingWord) -> Result<Self> {
        DyckPath::from_word(word)
    }
}

impl From<DyckPath> for ParkingWord {
    fn from(p: DyckPath) -> Self {
        p.word
    }
}

impl DyckPath {
    pub fn from_word(word: ParkingWord) -> Result<Self> {
        if !word.is_monotone() {
            return Err(Error::Malformed(format!("{word} is not monotone")));
        }
        if !word.is_parking() {
            return Err(Error::NotParking);
        }
        Ok(DyckPath { word })
    }

    pub fn from_heights(m: usize, heights: Vec<usize>) -> Result<Self> {
        Self::from_word(ParkingWord::new(m, heights)?)
    }

    pub fn m(&self) -> usize {
        self.word.m
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn heights(&self) -> &[usize] {
        &self.word.letters
    }

    pub fn word(&self) -> &ParkingWord {
        &self.word
    }

    /// Column heights read left to right across the grid.
    pub fn column_heights(&self) -> Vec<usize> {
        self.word.letters.iter().rev().copied().collect()
    }

    /// Lattice points from `(n, 0)` to `(0, m)`, moving left along the
    /// bottom of each column and up between columns.
    pub fn vertices(&self) -> Vec<(usize, usize)> {
        let cols = self.column_heights();
        let n = cols.len();
        let mut pts = vec![(n, 0)];
        let mut y = 0;
        for x in (0..n).rev() {
            let h = cols[x];
            if h != y {
                pts.push((x + 1, h));
                y = h;
            }
            pts.push((x, y));
        }
        if y != self.m() {
            pts.push((0, self.m()));
        }
        pts
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// All `(m, n)`-Dyck paths, lexicographic in their height words.
pub fn enumerate_dyck_words(m: usize, n: usize) -> Result<Vec<DyckPath>> {
    enumerate_dyck_words_with(m, n, DEFAULT_WORD_CAP, Execution::default())
}

pub fn enumerate_dyck_words_with(
    m: usize,
    n: usize,
    cap: u64,
    exec: Execution,
) -> Result<Vec<DyckPath>> {
    if m == 0 || n == 0 {
        return Err(Error::Malformed("m and n must be positive".into()));
    }
    check_cap(m, n, cap)?;
    Ok(Search {
        m,
        n,
        monotone: true,
    }
    .all(exec)
    .into_iter()
    .map(|word| DyckPath { word })
    .collect())
}
