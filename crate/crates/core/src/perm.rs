//! Permutations on `{0, …, n-1}` and the textual cycle notation used by
//! generator files.

use std::fmt;

use crate::error::{GroupError, Result};

/// A bijection of `{0, …, degree-1}` stored as its image array.
///
/// Products compose left to right: `a.compose(&b)` applies `a` first, then
/// `b`, so `i^(ab) = (i^a)^b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            let im = im as usize;
            if im >= n || seen[im] {
                return Err(GroupError::NotAPermutation);
            }
            seen[im] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 0-based cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let a = a as usize;
                if a >= degree || touched[a] {
                    return Err(GroupError::NotAPermutation);
                }
                touched[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut next = self.image(start);
            while next != start {
                seen[next] = true;
                cycle.push(next as u32);
                next = self.image(next);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order of the permutation (lcm of its cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| crate::numtheory::lcm(acc, c.len() as u64))
    }

    /// Cycle notation with 1-based points, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&pts.join(","));
            s.push(')');
        }
        s
    }

    /// Parses 1-based disjoint-cycle notation such as `(1,2)(3,4)` on `degree` points.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| GroupError::Parse(format!("{msg} in `{text}`"));
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = text.as_str();
        if rest.is_empty() {
            return Err(bad("empty permutation"));
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for tok in inner.split(',') {
                let p: u32 = tok.parse().map_err(|_| bad("bad point"))?;
                if p == 0 || p as usize > degree {
                    return Err(bad("point out of range"));
                }
                cycle.push(p - 1);
            }
            cycles.push(cycle);
        }
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree, &refs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}
