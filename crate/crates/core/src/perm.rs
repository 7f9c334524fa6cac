use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A bijection on `0..n`, stored as its image vector: `images()[v] = π(v)`.
///
/// The derived ordering is lexicographic by image, so the identity is the
/// least permutation of its degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &v in &images {
            if v >= n || core::mem::replace(&mut seen[v], true) {
                return Err(Error::input(alloc::format!("{images:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(Permutation(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation(images)
    }

    /// Swaps `a` and `b`, fixing everything else.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    /// `self` first, then `next`: `v ↦ next(self(v))`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&v| next.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v == w)
    }

    pub fn fixes(&self, v: usize) -> bool {
        self.0[v] == v
    }

    /// Vertices moved by the permutation.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(v, &w)| *v != w).map(|(v, _)| v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl core::str::FromStr for Permutation {
    type Err = Error;

    /// Parses the one-line form `[2,0,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::input("permutation must be written as [a,b,...]"))?;
        if body.trim().is_empty() {
            return Err(Error::input("empty permutation"));
        }
        let images = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::input(alloc::format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }
}
