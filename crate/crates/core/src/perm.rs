//! Permutations of `{0, .., n-1}` stored as image vectors.
//!
//! Darts are 0-based inside the library. Everything user facing (cycle
//! notation, the dessin document, CLI output) is 1-based, and the
//! conversion happens at those boundaries only.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image {image} out of range for a permutation of {len} points")]
    OutOfRange { image: usize, len: usize },
    #[error("point {0} is hit twice")]
    Repeated(usize),
    #[error("malformed cycle notation: {0}")]
    Syntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(PermError::OutOfRange { image: x, len: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PermError::Repeated(x));
            }
        }
        Ok(Self { images })
    }

    /// Builds a permutation of `n` points from 0-based disjoint cycles.
    /// Points not mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(PermError::OutOfRange { image: x, len: n });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(PermError::Repeated(x));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    /// Parses 1-based cycle notation such as `"(1 2 3)(4 5)"`. Commas are
    /// accepted as separators; `"()"` or the empty string is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, PermError> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Syntax(text.to_string()))?;
            let close = body
                .find(')')
                .ok_or_else(|| PermError::Syntax(text.to_string()))?;
            let mut cycle = Vec::new();
            for tok in body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                let v: usize = tok
                    .parse()
                    .map_err(|_| PermError::Syntax(text.to_string()))?;
                if v == 0 {
                    return Err(PermError::Syntax(text.to_string()));
                }
                cycle.push(v - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn after(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `tau ∘ self ∘ tau⁻¹`, i.e. the permutation obtained by renaming every
    /// point `x` to `tau(x)`.
    pub fn conjugate_by(&self, tau: &Permutation) -> Permutation {
        let mut images = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[tau.images[x]] = tau.images[y];
        }
        Permutation { images }
    }

    /// Disjoint cycles, fixed points included, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// The cycle through `x`, starting at `x`.
    pub fn cycle_of(&self, x: usize) -> Vec<usize> {
        let mut cycle = vec![x];
        let mut y = self.images[x];
        while y != x {
            cycle.push(y);
            y = self.images[y];
        }
        cycle
    }

    pub fn num_cycles(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Label of the cycle containing each point: `result[x]` is the index
    /// into [`Permutation::cycles`] of the cycle through `x`.
    pub fn cycle_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.len()];
        for (i, cycle) in self.cycles().iter().enumerate() {
            for &x in cycle {
                idx[x] = i;
            }
        }
        idx
    }
}

/// 1-based disjoint cycle notation, fixed points omitted; `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// An integer partition, parts kept in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// Parses a comma separated list of positive integers, in any order.
    pub fn parse(text: &str) -> Option<Partition> {
        let parts: Option<Vec<usize>> = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().ok().filter(|&v| v > 0))
            .collect();
        parts.filter(|p| !p.is_empty()).map(Partition::new)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The permutation of type `shape` whose cycles are consecutive runs
/// `(0 1 .. a-1)(a .. a+b-1)...`, longest cycles first.
pub fn canonical_of_type(shape: &Partition) -> Permutation {
    let n = shape.total();
    let mut images = vec![0; n];
    let mut start = 0;
    for &len in shape.parts() {
        for i in 0..len {
            images[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let p = Permutation::parse_cycles(5, "(1 3)(2 5 4)").unwrap();
        assert_eq!(p.image(0), 2);
        assert_eq!(p.image(1), 4);
        assert_eq!(p.to_string(), "(1 3)(2 5 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(PermError::Repeated(0))
        );
        assert!(matches!(
            Permutation::from_images(vec![3, 0, 1]),
            Err(PermError::OutOfRange { .. })
        ));
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 1)").is_err());
        assert!(Permutation::parse_cycles(3, "1 2").is_err());
    }

    #[test]
    fn composition_order() {
        // a = (1 2), b = (2 3); a∘b sends 3 -> 2 -> 1.
        let a = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let b = Permutation::parse_cycles(3, "(2 3)").unwrap();
        assert_eq!(a.after(&b).image(2), 0);
        assert!(a.after(&a.inverse()).is_identity());
    }

    #[test]
    fn conjugation_renames_points() {
        let s = Permutation::parse_cycles(4, "(1 2 3)").unwrap();
        let tau = Permutation::parse_cycles(4, "(1 4)").unwrap();
        assert_eq!(s.conjugate_by(&tau).to_string(), "(2 3 4)");
        assert_eq!(s.conjugate_by(&tau).cycle_type(), s.cycle_type());
    }

    #[test]
    fn canonical_permutation_has_requested_type() {
        let shape = Partition::new(vec![1, 3, 2, 2]);
        let p = canonical_of_type(&shape);
        assert_eq!(p.cycle_type(), shape);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)(6 7)");
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(Partition::parse("1, 3,2").unwrap().parts(), &[3, 2, 1]);
        assert!(Partition::parse("1,0").is_none());
        assert!(Partition::parse("").is_none());
    }
}
