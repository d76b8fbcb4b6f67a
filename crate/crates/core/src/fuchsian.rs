//! Exponent differences of second-order Fuchsian operators and how they
//! transform under a rational pull-back `f`.
//!
//! If `f(Q) = P` with ramification index `e`, then `Δ_Q(f*L) = e · Δ_P(L)`.
//! Summing `Δ − 1` over all points gives `Δ_L`, and for a Belyi map the
//! degree is forced:
//!
//! ```text
//! deg f = (Δ_{f*L} + 2) / (Δ_L + 2)
//! ```
//!
//! Everything here is exact: [`Rational`] is a reduced `i64` fraction.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::hypermap::{FeatureKind, MarkLabel, MarkedDessin};
use crate::tables::{Fiber, RamificationTable};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuchsianError {
    #[error("exponent difference at {label} must be non-negative, got {value}")]
    NegativeExponent { label: PointLabel, value: Rational },
    #[error("parent operator has Δ + 2 = 0, so the degree is undefined")]
    DegenerateParent,
    #[error("{0} is not a row of the basic Schwarz list")]
    NotASchwarzRow(String),
    #[error("table mismatch: {0}")]
    TableMismatch(String),
    #[error("cannot parse {0:?} as an exact fraction p/q")]
    BadRational(String),
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// Parses `"3/4"`, `"-1/6"` or `"2"`. Decimal notation is rejected so that
/// no float ever enters the computation.
pub fn parse_rational(text: &str) -> Result<Rational, FuchsianError> {
    let t = text.trim();
    let bad = || FuchsianError::BadRational(text.to_string());
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q <= 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Positive integer value of `r`, if it is one.
pub fn as_positive_integer(r: Rational) -> Option<u64> {
    (r.is_integer() && r.is_positive()).then(|| r.to_integer() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointLabel {
    Zero,
    One,
    Lambda,
    Infinity,
    /// Any further point `a_i`.
    Other(u32),
}

impl From<MarkLabel> for PointLabel {
    fn from(l: MarkLabel) -> Self {
        match l {
            MarkLabel::Zero => PointLabel::Zero,
            MarkLabel::One => PointLabel::One,
            MarkLabel::Lambda => PointLabel::Lambda,
            MarkLabel::Infinity => PointLabel::Infinity,
        }
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Zero => f.write_str("0"),
            PointLabel::One => f.write_str("1"),
            PointLabel::Lambda => f.write_str("lambda"),
            PointLabel::Infinity => f.write_str("infinity"),
            PointLabel::Other(i) => write!(f, "a_{i}"),
        }
    }
}

/// Local exponent differences; every point not listed has difference 1
/// (an ordinary point), and entries equal to 1 are dropped on insertion.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SingularityProfile {
    entries: BTreeMap<PointLabel, Rational>,
}

impl SingularityProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, label: PointLabel, value: Rational) -> Result<(), FuchsianError> {
        if value.is_negative() {
            return Err(FuchsianError::NegativeExponent { label, value });
        }
        if value.is_one() {
            self.entries.remove(&label);
        } else {
            self.entries.insert(label, value);
        }
        Ok(())
    }

    pub fn with(mut self, label: PointLabel, value: Rational) -> Result<Self, FuchsianError> {
        self.insert(label, value)?;
        Ok(self)
    }

    pub fn get(&self, label: PointLabel) -> Rational {
        self.entries
            .get(&label)
            .copied()
            .unwrap_or_else(Rational::one)
    }

    pub fn entries(&self) -> impl Iterator<Item = (PointLabel, Rational)> + '_ {
        self.entries.iter().map(|(&l, &v)| (l, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `Δ = Σ (Δ_P − 1)` over the listed points.
pub fn delta_sum(p: &SingularityProfile) -> Rational {
    p.entries().map(|(_, v)| v - Rational::one()).sum()
}

/// `Δ_Q = e · Δ_P` at a point of ramification index `e`.
pub fn pullback_exponent(e: u64, delta_parent: Rational) -> Rational {
    assert!(e >= 1, "ramification indices are positive");
    delta_parent * Rational::from_integer(e as i64)
}

/// `(Δ_child + 2) / (Δ_parent + 2)`.
pub fn pullback_degree(
    child: &SingularityProfile,
    parent: &SingularityProfile,
) -> Result<Rational, FuchsianError> {
    let two = Rational::from_integer(2);
    let den = delta_sum(parent) + two;
    if den.is_zero() {
        return Err(FuchsianError::DegenerateParent);
    }
    Ok((delta_sum(child) + two) / den)
}

/// Size of `f⁻¹{0, 1, ∞}` for a genus-zero Belyi map of degree `deg`.
pub fn fiber_count(deg: u64) -> u64 {
    deg + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupTag {
    Cyclic,
    Dihedral,
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl GroupTag {
    pub fn name(self) -> &'static str {
        match self {
            GroupTag::Cyclic => "cyclic",
            GroupTag::Dihedral => "dihedral",
            GroupTag::Tetrahedral => "tetrahedral",
            GroupTag::Octahedral => "octahedral",
            GroupTag::Icosahedral => "icosahedral",
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A hypergeometric operator with finite projective monodromy: exponent
/// differences `(λ, μ, ν)` at `0, 1, ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchwarzSignature {
    pub group: GroupTag,
    pub exponents: [Rational; 3],
}

impl SchwarzSignature {
    pub fn cyclic(m: i64) -> Self {
        SchwarzSignature {
            group: GroupTag::Cyclic,
            exponents: [rat(1, m), Rational::one(), rat(1, m)],
        }
    }

    pub fn dihedral(m: i64) -> Self {
        SchwarzSignature {
            group: GroupTag::Dihedral,
            exponents: [rat(1, 2), rat(1, m), rat(1, 2)],
        }
    }

    pub fn tetrahedral() -> Self {
        SchwarzSignature {
            group: GroupTag::Tetrahedral,
            exponents: [rat(1, 2), rat(1, 3), rat(1, 3)],
        }
    }

    pub fn octahedral() -> Self {
        SchwarzSignature {
            group: GroupTag::Octahedral,
            exponents: [rat(1, 2), rat(1, 3), rat(1, 4)],
        }
    }

    pub fn icosahedral() -> Self {
        SchwarzSignature {
            group: GroupTag::Icosahedral,
            exponents: [rat(1, 2), rat(1, 3), rat(1, 5)],
        }
    }

    /// Validating constructor.
    pub fn new(group: GroupTag, exponents: [Rational; 3]) -> Result<Self, FuchsianError> {
        let s = SchwarzSignature { group, exponents };
        if s.is_schwarz_row() {
            Ok(s)
        } else {
            Err(FuchsianError::NotASchwarzRow(s.to_string()))
        }
    }

    pub fn is_schwarz_row(&self) -> bool {
        let [l, m, n] = self.exponents;
        let half = rat(1, 2);
        let unit_fraction = |r: Rational| *r.numer() == 1 && *r.denom() >= 2;
        let shape = match self.group {
            GroupTag::Cyclic => unit_fraction(l) && m.is_one() && n == l,
            GroupTag::Dihedral => l == half && unit_fraction(m) && n == half,
            GroupTag::Tetrahedral => self.exponents == Self::tetrahedral().exponents,
            GroupTag::Octahedral => self.exponents == Self::octahedral().exponents,
            GroupTag::Icosahedral => self.exponents == Self::icosahedral().exponents,
        };
        shape && l + m + n > Rational::one()
    }

    /// `Δ_P` for `P` in fiber `f`.
    pub fn exponent(&self, f: Fiber) -> Rational {
        self.exponents[f.index()]
    }

    pub fn profile(&self) -> SingularityProfile {
        let mut p = SingularityProfile::new();
        for (label, v) in [PointLabel::Zero, PointLabel::One, PointLabel::Infinity]
            .into_iter()
            .zip(self.exponents)
        {
            p.insert(label, v).expect("Schwarz exponents are positive");
        }
        p
    }
}

impl fmt::Display for SchwarzSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [l, m, n] = self.exponents;
        write!(f, "{} ({l}, {m}, {n})", self.group)
    }
}

/// Exponent differences `1/2, 1/2, 1/2, |n + 1/2|` at `0, 1, λ, ∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LameSignature {
    pub n: Rational,
    pub profile: SingularityProfile,
}

impl LameSignature {
    pub fn new(n: Rational) -> Self {
        let mut profile = SingularityProfile::new();
        for label in [PointLabel::Zero, PointLabel::One, PointLabel::Lambda] {
            profile.insert(label, rat(1, 2)).expect("positive");
        }
        profile
            .insert(PointLabel::Infinity, Self::infinity_exponent(n))
            .expect("absolute values are non-negative");
        LameSignature { n, profile }
    }

    pub fn infinity_exponent(n: Rational) -> Rational {
        (n + rat(1, 2)).abs()
    }

    /// Exponent difference demanded at a marked point.
    pub fn exponent(&self, label: MarkLabel) -> Rational {
        match label {
            MarkLabel::Infinity => Self::infinity_exponent(self.n),
            _ => rat(1, 2),
        }
    }
}

/// Degree of a Belyi pull-back turning `parent` into the Lamé operator `L_n`.
pub fn lame_degree(n: Rational, parent: &SchwarzSignature) -> Result<Rational, FuchsianError> {
    pullback_degree(&LameSignature::new(n).profile, &parent.profile())
}

impl Fiber {
    pub fn kind(self) -> FeatureKind {
        match self {
            Fiber::Zero => FeatureKind::Black,
            Fiber::One => FeatureKind::White,
            Fiber::Infinity => FeatureKind::Face,
        }
    }

    pub fn of_kind(kind: FeatureKind) -> Fiber {
        match kind {
            FeatureKind::Black => Fiber::Zero,
            FeatureKind::White => Fiber::One,
            FeatureKind::Face => Fiber::Infinity,
        }
    }
}

/// The profile of `f*H` read off a marked dessin: each cycle of length `e`
/// over fiber `P` carries `e · Δ_P`. Marked cycles get their mark's label,
/// the others are numbered `a_1, a_2, ...` in kind-then-dart order.
pub fn pullback_profile(m: &MarkedDessin, parent: &SchwarzSignature) -> SingularityProfile {
    let mut profile = SingularityProfile::new();
    let mut next = 1;
    for kind in FeatureKind::ALL {
        let delta = parent.exponent(Fiber::of_kind(kind));
        for feature in m.dessin().features(kind) {
            let value = pullback_exponent(feature.len() as u64, delta);
            let label = MarkLabel::ALL
                .into_iter()
                .find(|&l| *m.mark(l) == feature)
                .map(PointLabel::from)
                .unwrap_or_else(|| {
                    next += 1;
                    PointLabel::Other(next - 1)
                });
            profile.insert(label, value).expect("non-negative");
        }
    }
    profile
}

/// Both sides of the two counting identities behind the degree formula,
/// taken with `S = {0, 1, ∞}`:
///
/// ```text
/// Δ(f*L, f⁻¹S) + #f⁻¹S = deg · (Δ(L, S) + #S)
/// −2 + 2·deg           = deg · #S − #f⁻¹S
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PullbackIdentities {
    pub exponent_lhs: Rational,
    pub exponent_rhs: Rational,
    pub hurwitz_lhs: Rational,
    pub hurwitz_rhs: Rational,
}

impl PullbackIdentities {
    pub fn holds(&self) -> bool {
        self.exponent_lhs == self.exponent_rhs && self.hurwitz_lhs == self.hurwitz_rhs
    }
}

pub fn pullback_identities(m: &MarkedDessin, parent: &SchwarzSignature) -> PullbackIdentities {
    let d = m.dessin();
    let deg = Rational::from_integer(d.degree() as i64);
    let one = Rational::one();
    let mut delta_child = Rational::zero();
    let mut preimages = 0i64;
    for kind in FeatureKind::ALL {
        let delta = parent.exponent(Fiber::of_kind(kind));
        for feature in d.features(kind) {
            delta_child += pullback_exponent(feature.len() as u64, delta) - one;
            preimages += 1;
        }
    }
    let preimages = Rational::from_integer(preimages);
    let s = Rational::from_integer(3);
    let delta_parent: Rational = parent.exponents.iter().map(|&v| v - one).sum();
    PullbackIdentities {
        exponent_lhs: delta_child + preimages,
        exponent_rhs: deg * (delta_parent + s),
        hurwitz_lhs: Rational::from_integer(2) * deg - Rational::from_integer(2),
        hurwitz_rhs: deg * s - preimages,
    }
}

/// Condition (★) for a marked dessin read as a pull-back along the table's
/// parent: every marked feature lies over the fiber the table assigns and
/// has the prescribed index (so its exponent is the Lamé one), and every
/// other cycle pulls back to exponent difference exactly 1.
pub fn check_condition_star(
    m: &MarkedDessin,
    t: &RamificationTable,
) -> Result<bool, FuchsianError> {
    let d = m.dessin();
    if d.degree() as u64 != t.degree {
        return Err(FuchsianError::TableMismatch(format!(
            "dessin has degree {}, table has degree {}",
            d.degree(),
            t.degree
        )));
    }
    let lame = LameSignature::new(t.n);
    for label in MarkLabel::ALL {
        let Some((fiber, index)) = t.fiber_of(label) else {
            return Err(FuchsianError::TableMismatch(format!(
                "{label} is not marked in the table"
            )));
        };
        let f = m.mark(label);
        if f.kind != fiber.kind() || f.len() as u64 != index {
            return Ok(false);
        }
        if pullback_exponent(index, t.parent.exponent(fiber)) != lame.exponent(label) {
            return Ok(false);
        }
    }
    for kind in FeatureKind::ALL {
        let delta = t.parent.exponent(Fiber::of_kind(kind));
        for feature in d.features(kind) {
            let marked = m.marks().contains(&feature);
            if !marked && !pullback_exponent(feature.len() as u64, delta).is_one() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypermap::Dessin;
    use crate::tables::{table_for_case, CaseId};

    fn octa() -> SingularityProfile {
        SchwarzSignature::octahedral().profile()
    }

    #[test]
    fn delta_sums() {
        assert_eq!(delta_sum(&octa()), rat(-23, 12));
        assert_eq!(
            delta_sum(&LameSignature::new(rat(3, 4)).profile),
            rat(-5, 4)
        );
        assert_eq!(delta_sum(&SingularityProfile::new()), Rational::zero());
    }

    #[test]
    fn pullback_exponents() {
        assert_eq!(pullback_exponent(2, rat(1, 2)), Rational::one());
        assert_eq!(pullback_exponent(4, rat(1, 4)), Rational::one());
        // Over ∞ of the octahedral operator a face of degree 5 carries n + 1/2 at n = 3/4.
        assert_eq!(pullback_exponent(5, rat(1, 4)), rat(5, 4));
    }

    #[test]
    fn degrees() {
        let oct = SchwarzSignature::octahedral();
        let ico = SchwarzSignature::icosahedral();
        assert_eq!(lame_degree(rat(3, 4), &oct), Ok(Rational::from_integer(9)));
        assert_eq!(lame_degree(rat(1, 6), &ico), Ok(Rational::from_integer(5)));
        assert_eq!(
            lame_degree(rat(-1, 4), &oct),
            Ok(Rational::from_integer(-3))
        );
        assert_eq!(pullback_degree(&octa(), &octa()), Ok(Rational::one()));
    }

    #[test]
    fn degenerate_parent() {
        // Δ + 2 = 0: two points with exponent difference 0.
        let p = SingularityProfile::new()
            .with(PointLabel::Zero, Rational::zero())
            .unwrap()
            .with(PointLabel::One, Rational::zero())
            .unwrap();
        assert_eq!(
            pullback_degree(&octa(), &p),
            Err(FuchsianError::DegenerateParent)
        );
    }

    #[test]
    fn fiber_counts() {
        assert_eq!(fiber_count(9), 11);
        assert_eq!(fiber_count(5), 7);
        assert_eq!(fiber_count(1), 3);
    }

    #[test]
    fn profile_normalization() {
        let p = SingularityProfile::new()
            .with(PointLabel::Other(1), Rational::one())
            .unwrap();
        assert!(p.is_empty());
        assert!(matches!(
            SingularityProfile::new().with(PointLabel::Zero, rat(-1, 2)),
            Err(FuchsianError::NegativeExponent { .. })
        ));
        // |n + 1/2| = 1 at n = 1/2, so ∞ becomes an ordinary point.
        assert_eq!(LameSignature::new(rat(1, 2)).profile.len(), 3);
        assert_eq!(LameSignature::new(rat(3, 4)).profile.len(), 4);
    }

    #[test]
    fn lame_symmetry() {
        for (p, q) in [(1, 4), (3, 4), (7, 6), (-1, 10), (5, 3)] {
            let n = rat(p, q);
            let m = -n - Rational::one();
            assert_eq!(LameSignature::new(n).profile, LameSignature::new(m).profile);
        }
    }

    #[test]
    fn schwarz_rows() {
        assert!(SchwarzSignature::cyclic(5).is_schwarz_row());
        assert!(SchwarzSignature::dihedral(7).is_schwarz_row());
        assert!(SchwarzSignature::tetrahedral().is_schwarz_row());
        let bogus = [rat(1, 2), rat(1, 3), rat(1, 6)];
        assert!(matches!(
            SchwarzSignature::new(GroupTag::Octahedral, bogus),
            Err(FuchsianError::NotASchwarzRow(_))
        ));
        assert!(
            SchwarzSignature::new(GroupTag::Icosahedral, [rat(1, 2), rat(1, 3), rat(1, 5)]).is_ok()
        );
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4"), Ok(rat(3, 4)));
        assert_eq!(parse_rational("-1/6"), Ok(rat(-1, 6)));
        assert_eq!(parse_rational("2"), Ok(Rational::from_integer(2)));
        assert!(parse_rational("0.75").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    fn marked_star() -> MarkedDessin {
        let s = Dessin::parse(3, "()", "(1 2 3)").unwrap();
        let leaf = |i| s.feature_of(FeatureKind::Black, i);
        MarkedDessin::new(
            s.clone(),
            [
                leaf(0),
                leaf(1),
                leaf(2),
                s.feature_of(FeatureKind::Face, 0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn star_satisfies_both_parents() {
        let m = marked_star();
        assert_eq!(
            check_condition_star(&m, &table_for_case(CaseId::OctHalf, 0)),
            Ok(true)
        );
        assert_eq!(
            check_condition_star(&m, &table_for_case(CaseId::IcoFifth, 0)),
            Ok(true)
        );
        assert!(matches!(
            check_condition_star(&m, &table_for_case(CaseId::OctThird, 0)),
            Err(FuchsianError::TableMismatch(_))
        ));
        assert!(pullback_identities(&m, &SchwarzSignature::octahedral()).holds());
    }

    #[test]
    fn misplaced_mark_fails_star() {
        let m = marked_star();
        let d = m.dessin().clone();
        let swapped = MarkedDessin::new(
            d.clone(),
            [
                m.mark(MarkLabel::Zero).clone(),
                m.mark(MarkLabel::One).clone(),
                d.feature_of(FeatureKind::White, 0),
                m.mark(MarkLabel::Infinity).clone(),
            ],
        )
        .unwrap();
        assert_eq!(
            check_condition_star(&swapped, &table_for_case(CaseId::OctHalf, 0)),
            Ok(false)
        );
    }

    #[test]
    fn child_profile_of_the_star() {
        let m = marked_star();
        let p = pullback_profile(&m, &SchwarzSignature::octahedral());
        // leaves: 1/2 each; the white vertex of valency 3: 1 (dropped); the face: 3/4.
        assert_eq!(p.len(), 4);
        assert_eq!(p.get(PointLabel::Infinity), rat(3, 4));
        assert_eq!(
            delta_sum(&p),
            delta_sum(&LameSignature::new(rat(1, 4)).profile)
        );
        assert_eq!(
            pullback_degree(&p, &SchwarzSignature::octahedral().profile()),
            Ok(Rational::from_integer(3))
        );
    }
}
