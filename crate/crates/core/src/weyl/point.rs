use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// An exact point of `R^m` stored as integer numerators over one positive
/// denominator, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PointJson", into = "PointJson")]
pub struct AmbientPoint {
    nums: Vec<i64>,
    den: i64,
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    m: usize,
    num: Vec<i64>,
    den: i64,
}

impl TryFrom<PointJson> for AmbientPoint {
    type Error = Error;
    fn try_from(j: PointJson) -> Result<Self> {
        if j.num.len() != j.m {
            return Err(Error::DimensionMismatch {
                expected: j.m,
                found: j.num.len(),
            });
        }
        AmbientPoint::new(j.num, j.den)
    }
}

impl From<AmbientPoint> for PointJson {
    fn from(p: AmbientPoint) -> Self {
        PointJson {
            m: p.nums.len(),
            num: p.nums,
            den: p.den,
        }
    }
}

impl AmbientPoint {
    pub fn new(nums: Vec<i64>, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Malformed("zero denominator".into()));
        }
        if nums.is_empty() {
            return Err(Error::Malformed(
                "point needs at least one coordinate".into(),
            ));
        }
        let mut p = AmbientPoint { nums, den };
        if p.den < 0 {
            p.den = -p.den;
            p.nums.iter_mut().for_each(|x| *x = -*x);
        }
        p.reduce();
        Ok(p)
    }

    pub fn from_integers(nums: Vec<i64>) -> Result<Self> {
        Self::new(nums, 1)
    }

    pub fn from_rationals(coords: &[Rational]) -> Result<Self> {
        let den = coords.iter().fold(1i64, |acc, c| acc.lcm(c.denom()));
        let nums = coords
            .iter()
            .map(|c| c.numer() * (den / c.denom()))
            .collect();
        Self::new(nums, den)
    }

    fn reduce(&mut self) {
        let g = self.nums.iter().fold(self.den, |acc, &x| acc.gcd(&x));
        if g > 1 {
            self.den /= g;
            self.nums.iter_mut().for_each(|x| *x /= g);
        }
    }

    pub fn dim(&self) -> usize {
        self.nums.len()
    }

    pub fn nums(&self) -> &[i64] {
        &self.nums
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn coord(&self, i: usize) -> Rational {
        Rational::new(self.nums[i], self.den)
    }

    pub fn coords(&self) -> Vec<Rational> {
        (0..self.dim()).map(|i| self.coord(i)).collect()
    }

    pub fn sum_is_zero(&self) -> bool {
        self.nums.iter().sum::<i64>() == 0
    }

    pub fn is_sorted(&self) -> bool {
        self.nums.windows(2).all(|w| w[0] <= w[1])
    }

    /// Squared Euclidean distance, exact.
    pub fn dist2(&self, other: &AmbientPoint) -> Ratio<i128> {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let (da, db) = (self.den as i128, other.den as i128);
        let num: i128 = self
            .nums
            .iter()
            .zip(&other.nums)
            .map(|(&a, &b)| {
                let d = a as i128 * db - b as i128 * da;
                d * d
            })
            .sum();
        Ratio::new(num, da * da * db * db)
    }

    /// Sorts ascending; stable on ties.
    pub fn into_sorted(mut self) -> WeylPoint {
        self.nums.sort();
        WeylPoint(self)
    }

    pub(crate) fn from_raw(nums: Vec<i64>, den: i64) -> Self {
        let mut p = AmbientPoint { nums, den };
        p.reduce();
        p
    }
}

impl fmt::Display for AmbientPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A point of the chamber `V^m`: coordinates weakly increasing, summing to 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AmbientPoint", into = "AmbientPoint")]
pub struct WeylPoint(AmbientPoint);

impl TryFrom<AmbientPoint> for WeylPoint {
    type Error = Error;
    fn try_from(p: AmbientPoint) -> Result<Self> {
        if !p.sum_is_zero() {
            return Err(Error::Malformed(format!("{p} does not sum to zero")));
        }
        if !p.is_sorted() {
            return Err(Error::Malformed(format!("{p} is not sorted")));
        }
        Ok(WeylPoint(p))
    }
}

impl From<WeylPoint> for AmbientPoint {
    fn from(p: WeylPoint) -> Self {
        p.0
    }
}

impl WeylPoint {
    pub fn new(nums: Vec<i64>, den: i64) -> Result<Self> {
        AmbientPoint::new(nums, den)?.try_into()
    }

    pub fn from_integers(nums: Vec<i64>) -> Result<Self> {
        Self::new(nums, 1)
    }

    pub fn from_rationals(coords: &[Rational]) -> Result<Self> {
        AmbientPoint::from_rationals(coords)?.try_into()
    }

    /// Sorts the coordinates and subtracts their mean.
    pub fn balanced_from_rationals(coords: &[Rational]) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Malformed(
                "point needs at least one coordinate".into(),
            ));
        }
        let mut c = coords.to_vec();
        c.sort();
        let mean = c.iter().copied().sum::<Rational>() / Rational::from_integer(c.len() as i64);
        let shifted: Vec<Rational> = c.into_iter().map(|x| x - mean).collect();
        Self::from_rationals(&shifted)
    }

    /// `m`, the number of coordinates.
    pub fn m(&self) -> usize {
        self.0.dim()
    }

    pub fn as_ambient(&self) -> &AmbientPoint {
        &self.0
    }

    pub fn nums(&self) -> &[i64] {
        self.0.nums()
    }

    pub fn den(&self) -> i64 {
        self.0.den()
    }

    pub fn coord(&self, i: usize) -> Rational {
        self.0.coord(i)
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.0.coords()
    }

    pub fn dist2(&self, other: &WeylPoint) -> Ratio<i128> {
        self.0.dist2(&other.0)
    }
}

impl fmt::Display for WeylPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A permutation of slot indices: `self[j]` is where slot `j` is sent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Malformed(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, j: usize) -> usize {
        self.0[j]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `next ∘ self`: first `self`, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&j| next.0[j]).collect())
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Permutation::identity(self.len()), |acc, _| acc.then(self))
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}
