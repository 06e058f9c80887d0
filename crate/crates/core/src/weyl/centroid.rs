use super::point::{AmbientPoint, WeylPoint};
use crate::error::{Error, Result};

/// Barycenter of the fundamental alcove `x_0 < … < x_{m−1} < x_0 + m`:
/// `x_i = i − (m−1)/2`.
pub fn fundamental_centroid(m: usize) -> WeylPoint {
    let m = m as i64;
    let nums = (0..m).map(|i| 2 * i - (m - 1)).collect();
    WeylPoint::new(nums, 2).expect("balanced by construction")
}

/// Centroid test on the sorted chamber. See [`is_centroid_coords`].
pub fn is_centroid(x: &WeylPoint) -> bool {
    is_centroid_coords(x.as_ambient())
}

/// True iff `(m+1)/2 − x_i` is an integer for every `i` and no two
/// coordinates differ by a multiple of `m`. Coordinate order is ignored, so
/// this also accepts centroids of alcoves outside the chamber.
pub fn is_centroid_coords(x: &AmbientPoint) -> bool {
    let m = x.dim() as i64;
    if m == 0 || !x.sum_is_zero() {
        return false;
    }
    // x_i ∈ (m+1)/2 + Z  ⇔  2·x_i is an integer of the parity of m+1
    let twice: Option<Vec<i64>> = x
        .coords()
        .iter()
        .map(|c| {
            let t = c * 2;
            t.is_integer().then(|| *t.numer())
        })
        .collect();
    let Some(twice) = twice else {
        return false;
    };
    if twice.iter().any(|t| (t - (m + 1)).rem_euclid(2) != 0) {
        return false;
    }
    // all differences are integers now; interior iff residues mod m differ
    let mut seen = vec![false; m as usize];
    for t in &twice {
        let r = ((t - twice[0]) / 2).rem_euclid(m) as usize;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// Blocks of coordinate indices with `x_i − x_j ∈ dZ`, ordered by least
/// index. Each block must have `m/d` members whose pairwise differences
/// avoid `mZ`.
pub fn residue_partition(x: &WeylPoint, d: usize) -> Result<Vec<Vec<usize>>> {
    let m = x.m();
    if d == 0 || !m.is_multiple_of(d) {
        return Err(Error::PartitionViolation(format!(
            "{d} does not divide m = {m}"
        )));
    }
    let den = x.den();
    let modulus = d as i64 * den;
    let nums = x.nums();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    'outer: for i in 0..m {
        for block in blocks.iter_mut() {
            if (nums[i] - nums[block[0]]).rem_euclid(modulus) == 0 {
                block.push(i);
                continue 'outer;
            }
        }
        blocks.push(vec![i]);
    }
    if blocks.len() != d || blocks.iter().any(|b| b.len() != m / d) {
        return Err(Error::PartitionViolation(format!(
            "block sizes {:?} for d = {d}, m = {m}",
            blocks.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    let wall = m as i64 * den;
    for b in &blocks {
        for (k, &i) in b.iter().enumerate() {
            for &j in &b[k + 1..] {
                if (nums[i] - nums[j]).rem_euclid(wall) == 0 {
                    return Err(Error::PartitionViolation(format!(
                        "coordinates {i} and {j} differ by a multiple of {m}"
                    )));
                }
            }
        }
    }
    Ok(blocks)
}
