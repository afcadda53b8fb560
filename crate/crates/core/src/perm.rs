//! Permutations of `{1, ..., n}` stored as image arrays.
//!
//! Products are taken left to right: `p * q` first applies `p`, then `q`, so
//! `(p * q)(i) = q(p(i))`. This is the convention used for every group
//! computation in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

/// A bijection on `{1, ..., degree}`.
///
/// Trailing fixed points are dropped on construction, so two permutations that
/// differ only by padding with fixed points are equal (and hash equally).
/// Ordering compares the image arrays lexicographically after padding both to
/// a common degree; the identity is the smallest permutation of every degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation {
    // 0-based images, no trailing fixed points
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { images: Vec::new() }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image
    /// of point `i`. Returns `None` unless the array is a bijection on
    /// `{1, ..., images.len()}`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return None;
            }
            seen[img - 1] = true;
            zero_based.push((img - 1) as u32);
        }
        Some(Self::from_raw(zero_based))
    }

    /// 0-based images, assumed to be a bijection.
    pub(crate) fn from_raw(mut images: Vec<u32>) -> Self {
        while let Some(&last) = images.last() {
            if last as usize + 1 == images.len() {
                images.pop();
            } else {
                break;
            }
        }
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles of 1-based points. Returns
    /// `None` if a point is zero or appears twice.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C]) -> Option<Self> {
        let degree = cycles
            .iter()
            .flat_map(|c| c.as_ref().iter().copied())
            .max()
            .unwrap_or(0);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (pos, &pt) in cycle.iter().enumerate() {
                if pt == 0 || used[pt - 1] {
                    return None;
                }
                used[pt - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Some(Self::from_raw(images))
    }

    /// Largest moved point, or 0 for the identity.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of a 1-based point. Points beyond the degree are fixed.
    pub fn image(&self, point: usize) -> usize {
        assert!(point >= 1, "points are 1-based");
        match self.images.get(point - 1) {
            Some(&img) => img as usize + 1,
            None => point,
        }
    }

    /// 1-based image array padded with fixed points up to `degree`.
    pub fn images_padded(&self, degree: usize) -> Vec<usize> {
        (1..=degree.max(self.degree()))
            .map(|i| self.image(i))
            .collect()
    }

    #[inline]
    fn raw_image(&self, point: u32) -> u32 {
        match self.images.get(point as usize) {
            Some(&img) => img,
            None => point,
        }
    }

    /// Left-to-right product: the result maps `i` to `q(p(i))`.
    pub fn compose(&self, q: &Permutation) -> Permutation {
        let n = self.degree().max(q.degree());
        let images = (0..n as u32)
            .map(|i| q.raw_image(self.raw_image(i)))
            .collect();
        Self::from_raw(images)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self` conjugated by `y`, i.e. `y⁻¹ · self · y`.
    pub fn conjugate_by(&self, y: &Permutation) -> Permutation {
        y.inverse().compose(self).compose(y)
    }

    /// Moves every point up by `offset`; used to place a factor of a direct
    /// product on its own block of points.
    pub fn shifted(&self, offset: usize) -> Permutation {
        if self.is_identity() {
            return Permutation::identity();
        }
        let mut images: Vec<u32> = (0..offset as u32).collect();
        images.extend(self.images.iter().map(|&img| img + offset as u32));
        Self::from_raw(images)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Order of the permutation (lcm of its cycle lengths).
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.degree().max(other.degree()) as u32;
        (0..n)
            .map(|i| self.raw_image(i).cmp(&other.raw_image(i)))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

/// Disjoint-cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{pt}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}
