//! Dense permutations of `{0, …, n-1}` stored as image tables.
//!
//! Composition is left-to-right throughout the crate: `p.compose(&q)` applies
//! `p` first and `q` second, matching the exponent notation `g^{pq} = (g^p)^q`
//! used by every construction built on top of this module.

use std::fmt;

use crate::{Error, Result};

/// Parity of a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of a product, given the parities of the factors.
    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

/// A bijection of `{0, …, n-1}` as a dense image table.
///
/// `images[i]` is the image of point `i`. The table is validated on
/// construction; all operations on valid permutations stay valid, so they
/// skip re-validation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from an image table, checking bijectivity.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for (i, &img) in images.iter().enumerate() {
            let img = img as usize;
            if img >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} of point {i} is out of range for degree {n}"
                )));
            }
            if seen[img] {
                return Err(Error::InvalidPermutation(format!(
                    "value {img} appears more than once"
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from `usize` images, for convenience in tests and callers.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        Self::new(images.iter().map(|&i| i as u32).collect())
    }

    /// The identity permutation of degree `n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// The transposition `(i j)` on `n` points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n || i == j {
            return Err(Error::InvalidPermutation(format!(
                "transposition ({i} {j}) is not valid on {n} points"
            )));
        }
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.swap(i, j);
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles, fixing every point not
    /// mentioned. Fails if a point appears twice or is out of range.
    pub fn from_disjoint_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            if cycle.len() < 2 {
                return Err(Error::InvalidPermutation("cycles must have length >= 2".into()));
            }
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= n || to >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {from} out of range for degree {n}"
                    )));
                }
                if touched[from] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {from} appears in more than one cycle"
                    )));
                }
                touched[from] = true;
                images[from] = to as u32;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a single point.
    #[inline]
    pub fn image_of(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// The raw image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }

    /// Smallest moved point, or `None` for the identity.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &img)| *i as u32 != img)
            .map(|(i, _)| i)
    }

    /// Left-to-right composition: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let mut images = Vec::with_capacity(self.degree());
        for &mid in &self.images {
            images.push(other.images[mid as usize]);
        }
        Ok(Permutation { images })
    }

    /// Composes a sequence left-to-right; the empty product is the identity.
    pub fn compose_all(degree: usize, factors: &[&Permutation]) -> Result<Permutation> {
        let mut acc = Permutation::identity(degree);
        for f in factors {
            acc = acc.compose(f)?;
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `k`-fold composition of `self` with itself; `power(0)` is the identity.
    pub fn power(&self, k: u64) -> Permutation {
        // Square-and-multiply; cycle orders stay small but k need not.
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base).expect("equal degrees");
            }
            base = base.compose(&base).expect("equal degrees");
            k >>= 1;
        }
        acc
    }

    /// Even iff `n - (number of cycles, counting fixed points)` is even.
    pub fn parity(&self) -> Parity {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
            }
        }
        if (n - cycles).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Canonical cycle decomposition; see [`CycleDecomposition`].
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        let mut fixed = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            if self.images[start] as usize == start {
                seen[start] = true;
                fixed.push(start);
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p] as usize;
            }
            cycles.push(cycle);
        }
        // Scanning from 0 upward already yields min-first rotation and
        // cycles sorted by smallest element.
        CycleDecomposition {
            degree: n,
            cycles,
            fixed,
        }
    }

    /// Points with `images[i] == i`, sorted.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &img)| *i as u32 == img)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn num_fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &img)| *i as u32 == img)
            .count()
    }

    /// Restricts to the invariant prefix `{0, …, half-1}`, failing if some
    /// image escapes the prefix.
    pub fn restrict_prefix(&self, half: usize) -> Result<Permutation> {
        if half == 0 || half > self.degree() {
            return Err(Error::InvalidPermutation(format!(
                "prefix length {half} invalid for degree {}",
                self.degree()
            )));
        }
        let mut images = Vec::with_capacity(half);
        for p in 0..half {
            let img = self.images[p];
            if img as usize >= half {
                return Err(Error::InvalidPermutation(format!(
                    "prefix {{0..{half}}} is not invariant: {p} maps to {img}"
                )));
            }
            images.push(img);
        }
        Ok(Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.cycle_decomposition())
    }
}

/// Composes raw image tables into `out` (left-to-right). Internal hot-path
/// helper for the stabilizer chain; callers guarantee equal lengths.
pub(crate) fn compose_images_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    out.extend(a.iter().map(|&mid| b[mid as usize]));
}

/// Canonical cycle decomposition of a permutation.
///
/// Each cycle is rotated so its smallest element comes first, cycles are
/// sorted by smallest element, and `fixed` lists the fixed points in order.
/// Decompositions are therefore directly comparable as values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
    fixed: Vec<usize>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn fixed(&self) -> &[usize] {
        &self.fixed
    }

    /// Lengths of the nontrivial cycles, in canonical order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.len()).collect()
    }

    /// Rebuilds the permutation this decomposition came from.
    pub fn reconstruct(&self) -> Result<Permutation> {
        Permutation::from_disjoint_cycles(self.degree, &self.cycles)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        let p = perm(&[1, 2, 0]);
        let q = perm(&[1, 0, 2]);
        assert_eq!(p.compose(&q).unwrap(), perm(&[0, 2, 1]));
    }

    #[test]
    fn compose_with_identity() {
        let p = perm(&[2, 0, 3, 1]);
        let id = Permutation::identity(4);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert_eq!(id.compose(&p).unwrap(), p);
    }

    #[test]
    fn compose_degree_mismatch_is_an_error() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(matches!(p.compose(&q), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn inverse_of_three_cycle() {
        let p = perm(&[1, 2, 0]);
        assert_eq!(p.inverse(), perm(&[2, 0, 1]));
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(Permutation::identity(5).inverse().is_identity());
        let t = Permutation::transposition(4, 0, 1).unwrap();
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn parity_basics() {
        assert_eq!(Permutation::identity(6).parity(), Parity::Even);
        assert_eq!(
            Permutation::transposition(6, 2, 5).unwrap().parity(),
            Parity::Odd
        );
        assert_eq!(perm(&[1, 2, 0]).parity(), Parity::Even);
    }

    #[test]
    fn cycle_decomposition_canonical_form() {
        let id = Permutation::identity(4);
        let d = id.cycle_decomposition();
        assert!(d.cycles().is_empty());
        assert_eq!(d.fixed(), &[0, 1, 2, 3]);

        let p = perm(&[1, 2, 0, 3]);
        let d = p.cycle_decomposition();
        assert_eq!(d.cycles(), &[vec![0, 1, 2]]);
        assert_eq!(d.fixed(), &[3]);
        assert_eq!(d.to_string(), "(0 1 2)");
        assert_eq!(d.reconstruct().unwrap(), p);
    }

    #[test]
    fn involutions_decompose_into_two_cycles() {
        let p = Permutation::from_disjoint_cycles(6, &[vec![0, 3], vec![1, 5]]).unwrap();
        assert!(p.compose(&p).unwrap().is_identity());
        assert!(p.cycle_decomposition().cycles().iter().all(|c| c.len() == 2));
    }

    #[test]
    fn power_basics() {
        let p = perm(&[1, 2, 0]);
        assert_eq!(p.power(1), p);
        assert!(p.power(3).is_identity());
        assert!(p.power(0).is_identity());
        let inv = Permutation::transposition(5, 1, 3).unwrap();
        assert!(inv.power(2).is_identity());
    }

    #[test]
    fn fixed_points_basics() {
        let id = Permutation::identity(4);
        assert_eq!(id.fixed_points(), vec![0, 1, 2, 3]);
        let t = Permutation::transposition(4, 0, 1).unwrap();
        assert_eq!(t.fixed_points(), vec![2, 3]);
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(Permutation::from_images(&[]).is_err());
        assert!(Permutation::from_images(&[0, 0]).is_err());
        assert!(Permutation::from_images(&[0, 3]).is_err());
    }

    #[test]
    fn restrict_prefix_checks_invariance() {
        let p = Permutation::from_disjoint_cycles(6, &[vec![0, 1], vec![4, 5]]).unwrap();
        let r = p.restrict_prefix(4).unwrap();
        assert_eq!(r, Permutation::from_disjoint_cycles(4, &[vec![0, 1]]).unwrap());
        let q = Permutation::from_disjoint_cycles(6, &[vec![3, 4]]).unwrap();
        assert!(q.restrict_prefix(4).is_err());
    }

    /// Deterministic Fisher-Yates from a seed, so proptest can draw several
    /// permutations of one shared degree.
    fn perm_from_seed(degree: usize, seed: u64) -> Permutation {
        let mut rng = crate::engine::SplitMix64::new(seed);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for i in (1..degree).rev() {
            let j = rng.pick(i + 1);
            images.swap(i, j);
        }
        Permutation::new(images).unwrap()
    }

    proptest! {
        #[test]
        fn parity_is_multiplicative(d in 1usize..=24, s1: u64, s2: u64) {
            let p = perm_from_seed(d, s1);
            let q = perm_from_seed(d, s2);
            let pq = p.compose(&q).unwrap();
            prop_assert_eq!(pq.parity(), p.parity().xor(q.parity()));
        }

        #[test]
        fn compose_inverse_is_identity(d in 1usize..=24, s: u64) {
            let p = perm_from_seed(d, s);
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        }

        #[test]
        fn decomposition_roundtrips(d in 1usize..=24, s: u64) {
            let p = perm_from_seed(d, s);
            prop_assert_eq!(p.cycle_decomposition().reconstruct().unwrap(), p);
        }

        #[test]
        fn power_of_order_is_identity(d in 1usize..=24, s: u64) {
            let p = perm_from_seed(d, s);
            let order = p
                .cycle_decomposition()
                .cycle_lengths()
                .iter()
                .fold(1usize, |acc, &len| acc.lcm(&len));
            prop_assert!(p.power(order as u64).is_identity());
        }

        #[test]
        fn compose_is_associative(d in 1usize..=16, s1: u64, s2: u64, s3: u64) {
            let p = perm_from_seed(d, s1);
            let q = perm_from_seed(d, s2);
            let r = perm_from_seed(d, s3);
            let left = p.compose(&q).unwrap().compose(&r).unwrap();
            let right = p.compose(&q.compose(&r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
