use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::weyl::{Rational, WeylPoint};
use crate::words::ParkingWord;

/// A ChaCha stream for one case, derived from the suite seed and the case
/// index so parallel runs draw the same numbers.
pub struct CaseRng(ChaCha8Rng);

impl CaseRng {
    pub fn new(seed: u64, case: usize) -> Self {
        let mixed = seed ^ (case as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        CaseRng(ChaCha8Rng::seed_from_u64(mixed))
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.0.gen_range(lo..=hi)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.0.gen_bool(0.5)
    }
}

/// The centroid of a random alcove: `a_i = i + m·k_i` sorted, minus the mean.
pub fn random_centroid(rng: &mut CaseRng, m: usize, spread: i64) -> WeylPoint {
    let coords: Vec<Rational> = (0..m as i64)
        .map(|i| Rational::from_integer(i + m as i64 * rng.range(-spread, spread)))
        .collect();
    WeylPoint::balanced_from_rationals(&coords).expect("non-empty")
}

/// A point strictly inside the alcove of the centroid `c`: each of the
/// first `m−1` coordinates moves by less than `1/(4m)` and the last one
/// restores the sum.
pub fn interior_point(rng: &mut CaseRng, c: &WeylPoint) -> WeylPoint {
    let m = c.m();
    let steps = 64i64;
    let den = 4 * m as i64 * steps;
    let mut delta: Vec<Rational> = (0..m - 1)
        .map(|_| Rational::new(rng.range(-(steps - 1), steps - 1), den))
        .collect();
    let total: Rational = delta.iter().copied().sum();
    delta.push(-total);
    let coords: Vec<Rational> = c.coords().iter().zip(&delta).map(|(a, b)| a + b).collect();
    WeylPoint::from_rationals(&coords).expect("perturbation keeps the order")
}

/// A point of `V^m` with coordinates of denominator dividing `den·m`.
pub fn random_point(rng: &mut CaseRng, m: usize, den: i64, spread: i64) -> WeylPoint {
    let coords: Vec<Rational> = (0..m)
        .map(|_| Rational::new(rng.range(-spread * den, spread * den), den))
        .collect();
    WeylPoint::balanced_from_rationals(&coords).expect("non-empty")
}

/// `u` plus a random displacement of size below `1/den` per coordinate.
pub fn nearby_point(rng: &mut CaseRng, u: &WeylPoint, den: i64) -> WeylPoint {
    let coords: Vec<Rational> = u
        .coords()
        .iter()
        .map(|a| a + Rational::new(rng.range(-den + 1, den - 1), den * den))
        .collect();
    WeylPoint::balanced_from_rationals(&coords).expect("non-empty")
}

pub fn random_word(rng: &mut CaseRng, m: usize, n: usize) -> ParkingWord {
    ParkingWord::new(m, (0..n).map(|_| rng.below(m)).collect()).expect("letters below m")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::in_closed_alcove;
    use crate::weyl::is_centroid;

    #[test]
    fn samples_are_reproducible() {
        let a = random_point(&mut CaseRng::new(7, 3), 4, 6, 5);
        let b = random_point(&mut CaseRng::new(7, 3), 4, 6, 5);
        assert_eq!(a, b);
        assert_ne!(a, random_point(&mut CaseRng::new(7, 4), 4, 6, 5));
    }

    #[test]
    fn centroids_and_interiors() {
        let mut rng = CaseRng::new(1, 0);
        for m in 2..6 {
            for _ in 0..50 {
                let c = random_centroid(&mut rng, m, 3);
                assert!(is_centroid(&c), "{c}");
                let x = interior_point(&mut rng, &c);
                assert!(in_closed_alcove(&c, &x));
                let sum: Rational = x.coords().iter().copied().sum();
                assert_eq!(sum, Rational::from_integer(0));
            }
        }
    }
}
