//! Dessins d'enfants as transitive pairs of permutations.
//!
//! A dessin of degree `E` is a pair `(σ_b, σ_w)` of permutations of the
//! darts (edges) `0..E`. Cycles of `σ_b` are the black vertices, cycles of
//! `σ_w` the white vertices, and the faces are the cycles of
//!
//! ```text
//! σ_f = (σ_b ∘ σ_w)⁻¹,    so that    σ_f ∘ σ_b ∘ σ_w = id
//! ```
//!
//! where `∘` applies the right-hand factor first. This convention is fixed
//! everywhere in the crate and checked by [`Dessin::product_is_identity`].
//!
//! Equivalence is simultaneous conjugacy (orientation preserving). Because
//! the pair is transitive, a conjugator is pinned down by the image of a
//! single dart, so both the equivalence test and the canonical form cost
//! `O(E²)`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{Partition, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypermapError {
    #[error("a dessin needs at least one dart")]
    ZeroDegree,
    #[error("sigma_{which} is not a permutation of 1..{degree}: {source}")]
    NotAPermutation {
        which: &'static str,
        degree: usize,
        source: PermError,
    },
    #[error("sigma_{which} acts on {len} darts but the degree is {degree}")]
    WrongLength {
        which: &'static str,
        len: usize,
        degree: usize,
    },
    #[error("the rotations do not act transitively ({orbits} orbits)")]
    NotConnected { orbits: usize },
    #[error("c_b + c_w + c_f - E is odd")]
    OddEulerDefect,
    #[error("mark {label}: {reason}")]
    InvalidFeature { label: MarkLabel, reason: String },
    #[error("marks {0} and {1} reference the same feature")]
    DuplicateFeature(MarkLabel, MarkLabel),
    #[error("marks disagree: {0}")]
    MarkMismatch(String),
}

/// Black vertex, white vertex or face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureKind {
    Black,
    White,
    Face,
}

impl FeatureKind {
    pub const ALL: [FeatureKind; 3] = [FeatureKind::Black, FeatureKind::White, FeatureKind::Face];

    pub fn as_str(self) -> &'static str {
        match self {
            FeatureKind::Black => "black",
            FeatureKind::White => "white",
            FeatureKind::Face => "face",
        }
    }
}

impl fmt::Display for FeatureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The four singular points of a Lamé operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MarkLabel {
    Zero,
    One,
    Lambda,
    Infinity,
}

impl MarkLabel {
    pub const ALL: [MarkLabel; 4] = [
        MarkLabel::Zero,
        MarkLabel::One,
        MarkLabel::Lambda,
        MarkLabel::Infinity,
    ];

    /// Key used in documents and on the command line.
    pub fn key(self) -> &'static str {
        match self {
            MarkLabel::Zero => "0",
            MarkLabel::One => "1",
            MarkLabel::Lambda => "lambda",
            MarkLabel::Infinity => "infinity",
        }
    }

    pub fn from_key(key: &str) -> Option<MarkLabel> {
        MarkLabel::ALL.into_iter().find(|l| l.key() == key)
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for MarkLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// One cycle of `σ_b`, `σ_w` or `σ_f`, stored starting at its smallest dart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Feature {
    pub kind: FeatureKind,
    pub cycle: Vec<usize>,
}

impl Feature {
    /// Rotates `cycle` so it starts at its minimum; the darts are not checked
    /// against any dessin here.
    pub fn new(kind: FeatureKind, mut cycle: Vec<usize>) -> Self {
        if let Some(pos) = cycle
            .iter()
            .enumerate()
            .min_by_key(|(_, &x)| x)
            .map(|(i, _)| i)
        {
            cycle.rotate_left(pos);
        }
        Feature { kind, cycle }
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    fn relabel(&self, label: &[usize]) -> Feature {
        Feature::new(self.kind, self.cycle.iter().map(|&x| label[x]).collect())
    }
}

/// `face (1 3 2)`, darts numbered from 1.
impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let darts: Vec<String> = self.cycle.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "{} ({})", self.kind, darts.join(" "))
    }
}

/// Cycle types over 0 (black), 1 (white) and ∞ (faces).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passport {
    pub black: Partition,
    pub white: Partition,
    pub face: Partition,
}

impl Passport {
    pub fn new(black: Partition, white: Partition, face: Partition) -> Self {
        Passport { black, white, face }
    }

    /// The common total, or `None` if the three partitions disagree.
    pub fn degree(&self) -> Option<usize> {
        let e = self.black.total();
        (self.white.total() == e && self.face.total() == e).then_some(e)
    }

    pub fn part(&self, kind: FeatureKind) -> &Partition {
        match kind {
            FeatureKind::Black => &self.black,
            FeatureKind::White => &self.white,
            FeatureKind::Face => &self.face,
        }
    }

    /// Genus forced by the passport of a transitive pair, if integral.
    pub fn genus(&self) -> Option<usize> {
        let e = self.degree()? as i64;
        let c = (self.black.len() + self.white.len() + self.face.len()) as i64;
        let defect = 2 - (c - e);
        (defect >= 0 && defect % 2 == 0).then_some((defect / 2) as usize)
    }

    /// Parses `"1,1,1;3;3"` (black; white; faces).
    pub fn parse(text: &str) -> Option<Passport> {
        let mut parts = text.split(';').map(Partition::parse);
        let p = Passport::new(parts.next()??, parts.next()??, parts.next()??);
        parts.next().is_none().then_some(p)
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.black, self.white, self.face)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dessin {
    black: Permutation,
    white: Permutation,
    face: Permutation,
}

impl Dessin {
    pub fn new(
        degree: usize,
        black: Permutation,
        white: Permutation,
    ) -> Result<Self, HypermapError> {
        if degree == 0 {
            return Err(HypermapError::ZeroDegree);
        }
        for (which, p) in [("black", &black), ("white", &white)] {
            if p.len() != degree {
                return Err(HypermapError::WrongLength {
                    which,
                    len: p.len(),
                    degree,
                });
            }
        }
        let orbits = orbit_count(&black, &white);
        if orbits != 1 {
            return Err(HypermapError::NotConnected { orbits });
        }
        let face = black.after(&white).inverse();
        Ok(Dessin { black, white, face })
    }

    /// Builds a dessin from 0-based image vectors.
    pub fn from_images(black: Vec<usize>, white: Vec<usize>) -> Result<Self, HypermapError> {
        let degree = black.len();
        let black =
            Permutation::from_images(black).map_err(|source| HypermapError::NotAPermutation {
                which: "black",
                degree,
                source,
            })?;
        let white =
            Permutation::from_images(white).map_err(|source| HypermapError::NotAPermutation {
                which: "white",
                degree,
                source,
            })?;
        Dessin::new(degree, black, white)
    }

    /// Builds a dessin from 1-based cycle notation, e.g. `("()", "(1 2 3)")`.
    pub fn parse(degree: usize, black: &str, white: &str) -> Result<Self, HypermapError> {
        let wrap = |which, source| HypermapError::NotAPermutation {
            which,
            degree,
            source,
        };
        let b = Permutation::parse_cycles(degree, black).map_err(|e| wrap("black", e))?;
        let w = Permutation::parse_cycles(degree, white).map_err(|e| wrap("white", e))?;
        Dessin::new(degree, b, w)
    }

    pub fn degree(&self) -> usize {
        self.black.len()
    }

    pub fn black(&self) -> &Permutation {
        &self.black
    }

    pub fn white(&self) -> &Permutation {
        &self.white
    }

    /// `σ_f = (σ_b ∘ σ_w)⁻¹`; its cycles are the faces.
    pub fn face_permutation(&self) -> &Permutation {
        &self.face
    }

    pub fn permutation(&self, kind: FeatureKind) -> &Permutation {
        match kind {
            FeatureKind::Black => &self.black,
            FeatureKind::White => &self.white,
            FeatureKind::Face => &self.face,
        }
    }

    pub fn product_is_identity(&self) -> bool {
        self.face
            .after(&self.black.after(&self.white))
            .is_identity()
    }

    pub fn passport(&self) -> Passport {
        Passport::new(
            self.black.cycle_type(),
            self.white.cycle_type(),
            self.face.cycle_type(),
        )
    }

    /// `c_b + c_w + c_f − E`, which is `2 − 2g`.
    pub fn euler_characteristic(&self) -> i64 {
        (self.black.num_cycles() + self.white.num_cycles() + self.face.num_cycles()) as i64
            - self.degree() as i64
    }

    pub fn genus(&self) -> Result<usize, HypermapError> {
        let defect = 2 - self.euler_characteristic();
        if defect < 0 || defect % 2 != 0 {
            return Err(HypermapError::OddEulerDefect);
        }
        Ok((defect / 2) as usize)
    }

    pub fn is_preclean(&self) -> bool {
        self.white.cycle_type().parts().iter().all(|&p| p <= 2)
    }

    pub fn is_clean(&self) -> bool {
        self.white.cycle_type().parts().iter().all(|&p| p == 2)
    }

    pub fn features(&self, kind: FeatureKind) -> Vec<Feature> {
        self.permutation(kind)
            .cycles()
            .into_iter()
            .map(|c| Feature::new(kind, c))
            .collect()
    }

    pub fn feature_of(&self, kind: FeatureKind, dart: usize) -> Feature {
        Feature::new(kind, self.permutation(kind).cycle_of(dart))
    }

    /// True if `f` is literally a cycle of the matching permutation.
    pub fn has_feature(&self, f: &Feature) -> bool {
        match f.cycle.first() {
            Some(&start) if start < self.degree() => {
                f.cycle.iter().all(|&x| x < self.degree())
                    && self.permutation(f.kind).cycle_of(start) == f.cycle
            }
            _ => false,
        }
    }

    /// The same dessin with dart `x` renamed to `tau(x)`.
    pub fn relabel(&self, tau: &Permutation) -> Dessin {
        Dessin {
            black: self.black.conjugate_by(tau),
            white: self.white.conjugate_by(tau),
            face: self.face.conjugate_by(tau),
        }
    }

    /// The orientation-reversed dessin `(σ_b⁻¹, σ_w⁻¹)`.
    pub fn mirror(&self) -> Dessin {
        let black = self.black.inverse();
        let white = self.white.inverse();
        let face = black.after(&white).inverse();
        Dessin { black, white, face }
    }

    /// A permutation `τ` with `τ σ τ⁻¹ = σ'` for both rotations, if any.
    pub fn conjugator_to(&self, other: &Dessin) -> Option<Permutation> {
        if self.degree() != other.degree() || self.passport() != other.passport() {
            return None;
        }
        (0..other.degree()).find_map(|r| self.extend_conjugator(other, r))
    }

    /// Tries the unique candidate conjugator sending dart 0 to `root`.
    fn extend_conjugator(&self, other: &Dessin, root: usize) -> Option<Permutation> {
        let n = self.degree();
        let mut tau = vec![usize::MAX; n];
        let mut used = vec![false; n];
        tau[0] = root;
        used[root] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (mine, theirs) in [(&self.black, &other.black), (&self.white, &other.white)] {
                let y = mine.image(x);
                let ty = theirs.image(tau[x]);
                if tau[y] == usize::MAX {
                    if used[ty] {
                        return None;
                    }
                    tau[y] = ty;
                    used[ty] = true;
                    queue.push_back(y);
                } else if tau[y] != ty {
                    return None;
                }
            }
        }
        Permutation::from_images(tau).ok()
    }

    pub fn equivalent(&self, other: &Dessin) -> bool {
        self.conjugator_to(other).is_some()
    }

    /// Equivalence allowing an orientation reversal; not used in any count.
    pub fn mirror_equivalent(&self, other: &Dessin) -> bool {
        self.equivalent(other) || self.equivalent(&other.mirror())
    }

    /// Number of darts `r` such that some automorphism sends dart 0 to `r`.
    pub fn automorphism_count(&self) -> usize {
        (0..self.degree())
            .filter(|&r| self.extend_conjugator(self, r).is_some())
            .count()
    }

    /// Breadth-first relabeling from `root`, following `σ_b` then `σ_w`.
    /// `result[x]` is the new name of dart `x`.
    fn bfs_labels(&self, root: usize) -> Vec<usize> {
        let n = self.degree();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 0;
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for y in [self.black.image(x), self.white.image(x)] {
                if label[y] == usize::MAX {
                    label[y] = order.len();
                    order.push(y);
                }
            }
        }
        label
    }

    fn relabeled_images(&self, label: &[usize]) -> Vec<usize> {
        let n = self.degree();
        let mut key = vec![0; 2 * n];
        for x in 0..n {
            key[label[x]] = label[self.black.image(x)];
            key[n + label[x]] = label[self.white.image(x)];
        }
        key
    }

    /// Canonical key: the lexicographically least `(σ_b, σ_w)` image vector
    /// over all breadth-first relabelings. Two dessins are equivalent iff
    /// their keys agree.
    pub fn canonical_key(&self) -> Vec<usize> {
        (0..self.degree())
            .map(|r| self.relabeled_images(&self.bfs_labels(r)))
            .min()
            .expect("dessins have at least one dart")
    }

    /// The representative of this dessin's class whose key is minimal.
    pub fn canonical_form(&self) -> Dessin {
        let key = self.canonical_key();
        let n = self.degree();
        Dessin::from_images(key[..n].to_vec(), key[n..].to_vec())
            .expect("a relabeling of a dessin is a dessin")
    }
}

impl fmt::Display for Dessin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "E={} black={} white={}",
            self.degree(),
            self.black,
            self.white
        )
    }
}

fn orbit_count(a: &Permutation, b: &Permutation) -> usize {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut orbits = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(x) = stack.pop() {
            for y in [a.image(x), b.image(x)] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    orbits
}

/// A dessin together with the features carrying the points 0, 1, λ, ∞.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedDessin {
    dessin: Dessin,
    marks: [Feature; 4],
}

/// The dessin followed by `; 0 = black (1), 1 = ..., infinity = face (...)`.
impl fmt::Display for MarkedDessin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dessin)?;
        for (i, label) in MarkLabel::ALL.into_iter().enumerate() {
            let sep = if i == 0 { "; " } else { ", " };
            write!(f, "{sep}{} = {}", label.key(), self.mark(label))?;
        }
        Ok(())
    }
}

impl MarkedDessin {
    /// `marks` is indexed by [`MarkLabel::index`]. Each entry must be a genuine
    /// cycle of the dessin and the four entries must be distinct.
    pub fn new(dessin: Dessin, marks: [Feature; 4]) -> Result<Self, HypermapError> {
        let marks = marks.map(|f| Feature::new(f.kind, f.cycle));
        for label in MarkLabel::ALL {
            let f = &marks[label.index()];
            if !dessin.has_feature(f) {
                return Err(HypermapError::InvalidFeature {
                    label,
                    reason: format!("{:?} is not a {} cycle", one_based(&f.cycle), f.kind),
                });
            }
        }
        for (i, a) in MarkLabel::ALL.into_iter().enumerate() {
            for b in MarkLabel::ALL.into_iter().skip(i + 1) {
                if marks[a.index()] == marks[b.index()] {
                    return Err(HypermapError::DuplicateFeature(a, b));
                }
            }
        }
        Ok(MarkedDessin { dessin, marks })
    }

    pub fn dessin(&self) -> &Dessin {
        &self.dessin
    }

    pub fn mark(&self, label: MarkLabel) -> &Feature {
        &self.marks[label.index()]
    }

    pub fn marks(&self) -> &[Feature; 4] {
        &self.marks
    }

    pub fn relabel(&self, tau: &Permutation) -> MarkedDessin {
        let label = tau.images();
        MarkedDessin {
            dessin: self.dessin.relabel(tau),
            marks: self.marks.clone().map(|f| f.relabel(label)),
        }
    }

    fn check_comparable(&self, other: &MarkedDessin) -> Result<(), HypermapError> {
        for label in MarkLabel::ALL {
            let (a, b) = (self.mark(label), other.mark(label));
            if a.kind != b.kind || a.len() != b.len() {
                return Err(HypermapError::MarkMismatch(format!(
                    "{label} is a {} of length {} on one side and a {} of length {} on the other",
                    a.kind,
                    a.len(),
                    b.kind,
                    b.len()
                )));
            }
        }
        Ok(())
    }

    /// Simultaneous conjugacy that also carries every mark onto the mark with
    /// the same label. Marks of different kind or length cannot both follow
    /// one table, which is reported as [`HypermapError::MarkMismatch`].
    pub fn marked_equivalent(&self, other: &MarkedDessin) -> Result<bool, HypermapError> {
        self.check_comparable(other)?;
        if self.dessin.degree() != other.dessin.degree()
            || self.dessin.passport() != other.dessin.passport()
        {
            return Ok(false);
        }
        Ok((0..self.dessin.degree()).any(|r| {
            self.dessin
                .extend_conjugator(&other.dessin, r)
                .is_some_and(|tau| self.relabel(&tau).marks == other.marks)
        }))
    }

    fn key_from(&self, root: usize) -> Vec<usize> {
        let label = self.dessin.bfs_labels(root);
        let mut key = self.dessin.relabeled_images(&label);
        for f in &self.marks {
            let g = f.relabel(&label);
            key.push(g.kind as usize);
            key.push(g.cycle.len());
            key.extend(g.cycle);
        }
        key
    }

    fn canonical_root(&self) -> usize {
        (0..self.dessin.degree())
            .min_by_key(|&r| self.key_from(r))
            .expect("dessins have at least one dart")
    }

    /// Canonical key extending [`Dessin::canonical_key`] by the relabeled
    /// marks; equal keys mean marked-equivalent dessins.
    pub fn canonical_key(&self) -> Vec<usize> {
        self.key_from(self.canonical_root())
    }

    pub fn canonical_form(&self) -> MarkedDessin {
        let label = self.dessin.bfs_labels(self.canonical_root());
        let tau = Permutation::from_images(label).expect("breadth-first labels are a bijection");
        self.relabel(&tau)
    }
}

fn one_based(cycle: &[usize]) -> Vec<usize> {
    cycle.iter().map(|x| x + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Dessin {
        Dessin::parse(3, "()", "(1 2 3)").unwrap()
    }

    fn path() -> Dessin {
        Dessin::parse(2, "()", "(1 2)").unwrap()
    }

    fn parts(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Dessin::parse(4, "(1 2)(3 4)", "()"),
            Err(HypermapError::NotConnected { orbits: 2 })
        ));
        assert!(matches!(
            Dessin::from_images(vec![0, 0], vec![1, 0]),
            Err(HypermapError::NotAPermutation { which: "black", .. })
        ));
        assert!(matches!(
            Dessin::new(3, Permutation::identity(2), Permutation::identity(3)),
            Err(HypermapError::WrongLength { .. })
        ));
        assert_eq!(
            Dessin::new(0, Permutation::identity(0), Permutation::identity(0)),
            Err(HypermapError::ZeroDegree)
        );
    }

    #[test]
    fn star_and_path() {
        let s = star();
        assert_eq!(s.face_permutation().cycle_type(), parts(&[3]));
        assert_eq!(
            s.passport(),
            Passport::new(parts(&[1, 1, 1]), parts(&[3]), parts(&[3]))
        );
        assert_eq!(s.genus(), Ok(0));
        assert!(!s.is_preclean() && !s.is_clean());

        let p = path();
        assert_eq!(p.face_permutation().cycle_type(), parts(&[2]));
        assert_eq!(
            p.passport(),
            Passport::new(parts(&[1, 1]), parts(&[2]), parts(&[2]))
        );
        assert_eq!(p.genus(), Ok(0));
        assert!(p.is_preclean() && p.is_clean());

        let edge = Dessin::parse(1, "()", "()").unwrap();
        assert!(edge.is_preclean() && !edge.is_clean());
        assert!(s.product_is_identity() && p.product_is_identity());
    }

    #[test]
    fn torus_at_degree_four() {
        // First genus-one pair met by an exhaustive scan of S4 x S4:
        // 2 + 1 + 1 - 4 = 0 = 2 - 2g.
        let d = Dessin::parse(4, "(2 3 4)", "(1 2 3 4)").unwrap();
        assert_eq!(d.face_permutation().to_string(), "(1 4 2 3)");
        assert_eq!(d.euler_characteristic(), 0);
        assert_eq!(d.genus(), Ok(1));
    }

    #[test]
    fn equivalence() {
        let s = star();
        let t = Dessin::parse(3, "()", "(1 3 2)").unwrap();
        assert!(s.equivalent(&t));
        assert_eq!(s.canonical_key(), t.canonical_key());
        assert!(!s.equivalent(&path()));
        assert!(!s.equivalent(&Dessin::parse(3, "(1 2 3)", "()").unwrap()));
        assert_eq!(s.automorphism_count(), 3);
    }

    #[test]
    fn chiral_pair_needs_the_mirror() {
        // Smallest planar pair (E = 5) not equivalent to its own mirror image.
        let d = Dessin::parse(5, "(2 3)(4 5)", "(1 2 3 4)").unwrap();
        let m = d.mirror();
        assert!(!d.equivalent(&m));
        assert!(d.mirror_equivalent(&m));
        assert_eq!(d.passport(), m.passport());
        assert_eq!(m.genus(), Ok(0));
    }

    #[test]
    fn canonical_form_is_equivalent() {
        let d = Dessin::parse(6, "(1 2)(3 4)", "(1 3 5)(2 4 6)").unwrap();
        let c = d.canonical_form();
        assert!(d.equivalent(&c));
        assert_eq!(c.canonical_form(), c);
    }

    fn marked_star(order: [usize; 3]) -> MarkedDessin {
        let s = star();
        MarkedDessin::new(
            s.clone(),
            [
                s.feature_of(FeatureKind::Black, order[0]),
                s.feature_of(FeatureKind::Black, order[1]),
                s.feature_of(FeatureKind::Black, order[2]),
                s.feature_of(FeatureKind::Face, 0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn marked_display() {
        assert_eq!(
            marked_star([0, 1, 2]).to_string(),
            "E=3 black=() white=(1 2 3); 0 = black (1), 1 = black (2), lambda = black (3), infinity = face (1 3 2)"
        );
    }

    #[test]
    fn marked_star_relabelings() {
        let a = marked_star([0, 1, 2]);
        // Cyclic relabelings are realized by the rotation automorphism.
        assert!(a.marked_equivalent(&marked_star([1, 2, 0])).unwrap());
        assert!(a.marked_equivalent(&a).unwrap());
        // A transposition of two labels reverses the cyclic order of the
        // leaves, which no orientation-preserving map can do.
        assert!(!a.marked_equivalent(&marked_star([1, 0, 2])).unwrap());
        let tau = Permutation::parse_cycles(3, "(1 3)").unwrap();
        assert!(a.marked_equivalent(&a.relabel(&tau)).unwrap());
        assert_eq!(a.canonical_key(), a.relabel(&tau).canonical_key());
        assert_eq!(a.canonical_form().canonical_key(), a.canonical_key());
    }

    #[test]
    fn marked_validation() {
        let s = star();
        let leaf = |i| s.feature_of(FeatureKind::Black, i);
        let face = s.feature_of(FeatureKind::Face, 0);
        assert!(matches!(
            MarkedDessin::new(s.clone(), [leaf(0), leaf(0), leaf(2), face.clone()]),
            Err(HypermapError::DuplicateFeature(
                MarkLabel::Zero,
                MarkLabel::One
            ))
        ));
        let bogus = Feature::new(FeatureKind::Black, vec![0, 1]);
        assert!(matches!(
            MarkedDessin::new(s.clone(), [bogus, leaf(1), leaf(2), face.clone()]),
            Err(HypermapError::InvalidFeature {
                label: MarkLabel::Zero,
                ..
            })
        ));
        let white_mark = MarkedDessin::new(
            s.clone(),
            [
                leaf(0),
                leaf(1),
                leaf(2),
                s.feature_of(FeatureKind::White, 0),
            ],
        )
        .unwrap();
        assert!(matches!(
            marked_star([0, 1, 2]).marked_equivalent(&white_mark),
            Err(HypermapError::MarkMismatch(_))
        ));
    }

    #[test]
    fn passport_parsing() {
        let p = Passport::parse("1,1,1;3;3").unwrap();
        assert_eq!(p, star().passport());
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.genus(), Some(0));
        assert!(Passport::parse("1,1;3;3").unwrap().degree().is_none());
        assert!(Passport::parse("1;1").is_none());
        assert!(Passport::parse("1;1;1;1").is_none());
    }
}
