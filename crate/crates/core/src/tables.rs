//! Ramification tables: which of the points `0, 1, λ, ∞` lie over which
//! fiber of `f`, with what index, and how many unmarked points of each
//! generic multiplicity fill up the rest of every fiber.
//!
//! A table is compatible when each row sums to the degree, each marked point
//! sits in exactly one fiber, and the total number of points is `deg + 2`
//! (genus zero).

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_traits::One;
use thiserror::Error;

use crate::fuchsian::{
    as_positive_integer, lame_degree, rat, LameSignature, Rational, SchwarzSignature,
};
use crate::hypermap::{MarkLabel, Passport};
use crate::perm::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("{0} is not a row of the basic Schwarz list")]
    NotASchwarzRow(String),
    #[error("n = {0} is out of range; only n > -1/2 is considered (L_n = L_(-n-1))")]
    ParameterOutOfRange(Rational),
    #[error("invalid table: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidTable(Vec<Violation>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fiber {
    Zero,
    One,
    Infinity,
}

impl Fiber {
    pub const ALL: [Fiber; 3] = [Fiber::Zero, Fiber::One, Fiber::Infinity];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Fiber::Zero => "0",
            Fiber::One => "1",
            Fiber::Infinity => "inf",
        }
    }
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberRow {
    /// Ramification index of each marked point lying over this fiber.
    pub marked: BTreeMap<MarkLabel, u64>,
    pub generic_count: u64,
    pub generic_mult: u64,
}

impl FiberRow {
    fn new(marked: &[(MarkLabel, u64)], generic_count: u64, generic_mult: u64) -> Self {
        FiberRow {
            marked: marked.iter().copied().collect(),
            generic_count,
            generic_mult,
        }
    }

    pub fn sum(&self) -> u64 {
        self.marked.values().sum::<u64>() + self.generic_count * self.generic_mult
    }

    pub fn points(&self) -> u64 {
        self.marked.len() as u64 + self.generic_count
    }

    pub fn partition(&self) -> Partition {
        let mut parts: Vec<usize> = self.marked.values().map(|&e| e as usize).collect();
        parts.extend(std::iter::repeat_n(
            self.generic_mult as usize,
            self.generic_count as usize,
        ));
        Partition::new(parts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamificationTable {
    pub degree: u64,
    pub parent: SchwarzSignature,
    pub n: Rational,
    /// Indexed by [`Fiber::index`].
    pub rows: [FiberRow; 3],
}

/// A broken compatibility condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    RowSum {
        fiber: Fiber,
        sum: u64,
        degree: u64,
    },
    Column {
        label: MarkLabel,
        occurrences: usize,
    },
    ZeroIndex {
        fiber: Fiber,
    },
    FiberCount {
        points: u64,
        expected: u64,
    },
    RiemannHurwitz {
        total: u64,
        expected: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowSum { fiber, sum, degree } => {
                write!(f, "row {fiber} sums to {sum}, not the degree {degree}")
            }
            Violation::Column { label, occurrences } => {
                write!(
                    f,
                    "column {label} has {occurrences} non-zero entries, expected 1"
                )
            }
            Violation::ZeroIndex { fiber } => write!(f, "row {fiber} contains a zero index"),
            Violation::FiberCount { points, expected } => {
                write!(
                    f,
                    "{points} points over 0, 1, inf; expected deg + 2 = {expected}"
                )
            }
            Violation::RiemannHurwitz { total, expected } => {
                write!(
                    f,
                    "total ramification {total}, expected 2 deg - 2 = {expected}"
                )
            }
        }
    }
}

impl RamificationTable {
    pub fn row(&self, f: Fiber) -> &FiberRow {
        &self.rows[f.index()]
    }

    /// Fiber and index of a marked point (the first, if the table is broken).
    pub fn fiber_of(&self, label: MarkLabel) -> Option<(Fiber, u64)> {
        Fiber::ALL
            .into_iter()
            .find_map(|f| self.row(f).marked.get(&label).map(|&e| (f, e)))
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for f in Fiber::ALL {
            let row = self.row(f);
            if row.generic_mult == 0 || row.marked.values().any(|&e| e == 0) {
                out.push(Violation::ZeroIndex { fiber: f });
            }
            if row.sum() != self.degree {
                out.push(Violation::RowSum {
                    fiber: f,
                    sum: row.sum(),
                    degree: self.degree,
                });
            }
        }
        for label in MarkLabel::ALL {
            let occurrences = self
                .rows
                .iter()
                .filter(|r| r.marked.contains_key(&label))
                .count();
            if occurrences != 1 {
                out.push(Violation::Column { label, occurrences });
            }
        }
        let points: u64 = self.rows.iter().map(FiberRow::points).sum();
        if points != self.degree + 2 {
            out.push(Violation::FiberCount {
                points,
                expected: self.degree + 2,
            });
        }
        let total: u64 = self
            .rows
            .iter()
            .map(|r| {
                r.marked.values().map(|&e| e.saturating_sub(1)).sum::<u64>()
                    + r.generic_count * r.generic_mult.saturating_sub(1)
            })
            .sum();
        let expected = (2 * self.degree).saturating_sub(2);
        if total != expected {
            out.push(Violation::RiemannHurwitz { total, expected });
        }
        out
    }

    pub fn render(&self) -> String {
        render_table(self)
    }
}

pub fn validate_table(t: &RamificationTable) -> bool {
    t.violations().is_empty()
}

pub fn passport_of_table(t: &RamificationTable) -> Result<Passport, TableError> {
    let v = t.violations();
    if !v.is_empty() {
        return Err(TableError::InvalidTable(v));
    }
    Ok(Passport::new(
        t.row(Fiber::Zero).partition(),
        t.row(Fiber::One).partition(),
        t.row(Fiber::Infinity).partition(),
    ))
}

/// Every compatible table for the pull-back of `parent` to `L_n`.
///
/// The degree comes from the exponent calculus; each of `0, 1, λ, ∞` is
/// tried over each fiber, keeping only integral indices
/// `e = Δ_Q(L_n) / Δ_P(parent)`, and the rest of each fiber is filled with
/// points of multiplicity `1/Δ_P`. A negative or fractional degree yields no
/// tables at all.
pub fn derive_tables(
    parent: &SchwarzSignature,
    n: Rational,
) -> Result<Vec<RamificationTable>, TableError> {
    if !parent.is_schwarz_row() {
        return Err(TableError::NotASchwarzRow(parent.to_string()));
    }
    if n <= rat(-1, 2) {
        return Err(TableError::ParameterOutOfRange(n));
    }
    let deg = match lame_degree(n, parent) {
        Ok(d) => d,
        Err(_) => return Ok(Vec::new()),
    };
    let Some(degree) = as_positive_integer(deg) else {
        return Ok(Vec::new());
    };
    let mut generic = [0u64; 3];
    for f in Fiber::ALL {
        match as_positive_integer(Rational::one() / parent.exponent(f)) {
            Some(g) => generic[f.index()] = g,
            None => return Ok(Vec::new()),
        }
    }
    let lame = LameSignature::new(n);
    // index[label][fiber], if integral
    let index: Vec<[Option<u64>; 3]> = MarkLabel::ALL
        .iter()
        .map(|&l| Fiber::ALL.map(|f| as_positive_integer(lame.exponent(l) / parent.exponent(f))))
        .collect();

    let mut tables = Vec::new();
    for code in 0..81usize {
        let choice: [Fiber; 4] =
            std::array::from_fn(|i| Fiber::ALL[(code / 3usize.pow(i as u32)) % 3]);
        let mut rows: [FiberRow; 3] = Default::default();
        let mut integral = true;
        for (i, &label) in MarkLabel::ALL.iter().enumerate() {
            let f = choice[i];
            match index[i][f.index()] {
                Some(e) => {
                    rows[f.index()].marked.insert(label, e);
                }
                None => integral = false,
            }
        }
        if !integral {
            continue;
        }
        let mut fits = true;
        for f in Fiber::ALL {
            let row = &mut rows[f.index()];
            let g = generic[f.index()];
            let used: u64 = row.marked.values().sum();
            if used > degree || !(degree - used).is_multiple_of(g) {
                fits = false;
                break;
            }
            row.generic_count = (degree - used) / g;
            row.generic_mult = g;
        }
        if !fits {
            continue;
        }
        let t = RamificationTable {
            degree,
            parent: *parent,
            n,
            rows,
        };
        if validate_table(&t) {
            tables.push(t);
        }
    }
    tables.sort();
    tables.dedup();
    Ok(tables)
}

/// The four infinite families realized by the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    /// Octahedral, `n = (k + 1/2)/2`, degree `6k + 3`.
    OctHalf,
    /// Octahedral, `n = (k + 1/2)/3`, degree `4k + 2`.
    OctThird,
    /// Icosahedral, `6n = 2k + 1`, degree `10k + 5`.
    IcoThird,
    /// Icosahedral, `n = (k + 1/2)/5`, degree `6k + 3`.
    IcoFifth,
}

impl CaseId {
    pub const ALL: [CaseId; 4] = [
        CaseId::OctHalf,
        CaseId::OctThird,
        CaseId::IcoThird,
        CaseId::IcoFifth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::OctHalf => "oct_half",
            CaseId::OctThird => "oct_third",
            CaseId::IcoThird => "ico_third",
            CaseId::IcoFifth => "ico_fifth",
        }
    }

    pub fn parent(self) -> SchwarzSignature {
        match self {
            CaseId::OctHalf | CaseId::OctThird => SchwarzSignature::octahedral(),
            CaseId::IcoThird | CaseId::IcoFifth => SchwarzSignature::icosahedral(),
        }
    }

    /// The Lamé parameter certified at step `k`.
    pub fn n(self, k: u64) -> Rational {
        let odd = 2 * k as i64 + 1;
        match self {
            CaseId::OctHalf => rat(odd, 4),
            CaseId::OctThird | CaseId::IcoThird => rat(odd, 6),
            CaseId::IcoFifth => rat(odd, 10),
        }
    }

    pub fn degree(self, k: u64) -> u64 {
        match self {
            CaseId::OctHalf | CaseId::IcoFifth => 6 * k + 3,
            CaseId::OctThird => 4 * k + 2,
            CaseId::IcoThird => 10 * k + 5,
        }
    }

    /// Largest `k` whose degree does not exceed `max_degree`.
    pub fn max_k_for_degree(self, max_degree: u64) -> Option<u64> {
        (0..=max_degree)
            .take_while(|&k| self.degree(k) <= max_degree)
            .last()
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown case {s:?}; expected one of oct_half, oct_third, ico_third, ico_fifth"
                )
            })
    }
}

/// The specialized table of a case at step `k`, written out directly.
pub fn table_for_case(case: CaseId, k: u64) -> RamificationTable {
    use MarkLabel::*;
    let degree = case.degree(k);
    let rows = match case {
        CaseId::OctHalf => [
            FiberRow::new(&[(Zero, 1), (One, 1), (Lambda, 1)], 3 * k, 2),
            FiberRow::new(&[], 2 * k + 1, 3),
            FiberRow::new(&[(Infinity, 2 * k + 3)], k, 4),
        ],
        CaseId::OctThird => [
            FiberRow::new(&[(Zero, 1), (One, 1)], 2 * k, 2),
            FiberRow::new(&[(Infinity, k + 2)], k, 3),
            FiberRow::new(&[(Lambda, 2)], k, 4),
        ],
        CaseId::IcoThird => [
            FiberRow::new(&[(Zero, 1), (One, 1), (Lambda, 1)], 5 * k + 1, 2),
            FiberRow::new(&[(Infinity, k + 2)], 3 * k + 1, 3),
            FiberRow::new(&[], 2 * k + 1, 5),
        ],
        CaseId::IcoFifth => [
            FiberRow::new(&[(Zero, 1), (One, 1), (Lambda, 1)], 3 * k, 2),
            FiberRow::new(&[], 2 * k + 1, 3),
            FiberRow::new(&[(Infinity, k + 3)], k, 5),
        ],
    };
    RamificationTable {
        degree,
        parent: case.parent(),
        n: case.n(k),
        rows,
    }
}

/// Renders a table with fibers as rows and `0, 1, λ, ∞`, the generic
/// points and the degree as columns; `0` means "not over this fiber".
pub fn render_table(t: &RamificationTable) -> String {
    let header = [
        "fiber",
        "0",
        "1",
        "lambda",
        "infinity",
        "other points",
        "deg",
    ];
    let mut cells: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for f in Fiber::ALL {
        let row = t.row(f);
        let mut line = vec![f.symbol().to_string()];
        for label in MarkLabel::ALL {
            line.push(row.marked.get(&label).copied().unwrap_or(0).to_string());
        }
        line.push(format!(
            "{} pts with mult. = {}",
            row.generic_count, row.generic_mult
        ));
        line.push(t.degree.to_string());
        cells.push(line);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    writeln!(out, "{}, n = {}, deg = {}", t.parent, t.n, t.degree).unwrap();
    let rule: String = widths
        .iter()
        .map(|w| "-".repeat(w + 2))
        .collect::<Vec<_>>()
        .join("+");
    for (i, r) in cells.iter().enumerate() {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!(" {c:<w$} "))
            .collect();
        writeln!(out, "{}", line.join("|").trim_end()).unwrap();
        if i == 0 {
            writeln!(out, "{rule}").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn parts(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn octahedral_three_quarters() {
        let tables = derive_tables(&SchwarzSignature::octahedral(), rat(3, 4)).unwrap();
        assert!(tables.contains(&table_for_case(CaseId::OctHalf, 1)));
        let t = table_for_case(CaseId::OctHalf, 1);
        assert_eq!(t.degree, 9);
        assert_eq!(t.fiber_of(MarkLabel::Infinity), Some((Fiber::Infinity, 5)));
        let counts: Vec<u64> = t.rows.iter().map(|r| r.generic_count).collect();
        assert_eq!(counts, [3, 3, 1]);
        assert!(tables.iter().all(validate_table));
    }

    #[test]
    fn icosahedral_one_sixth() {
        let tables = derive_tables(&SchwarzSignature::icosahedral(), rat(1, 6)).unwrap();
        let t = table_for_case(CaseId::IcoThird, 0);
        assert!(tables.contains(&t));
        assert_eq!(t.degree, 5);
        assert_eq!(t.fiber_of(MarkLabel::Infinity), Some((Fiber::One, 2)));
    }

    #[test]
    fn exceptional_parameters() {
        let oct = SchwarzSignature::octahedral();
        let ico = SchwarzSignature::icosahedral();
        assert!(derive_tables(&oct, rat(-1, 4)).unwrap().is_empty());
        assert!(derive_tables(&oct, rat(-1, 6)).unwrap().is_empty());
        assert!(derive_tables(&ico, rat(-1, 6)).unwrap().is_empty());
        assert!(derive_tables(&ico, rat(-1, 10)).unwrap().is_empty());
        assert_eq!(
            derive_tables(&oct, rat(-1, 2)),
            Err(TableError::ParameterOutOfRange(rat(-1, 2)))
        );
        assert!(derive_tables(&oct, Rational::zero()).unwrap().is_empty());
    }

    #[test]
    fn bad_parent() {
        let mut bogus = SchwarzSignature::octahedral();
        bogus.exponents[2] = rat(1, 7);
        assert!(matches!(
            derive_tables(&bogus, rat(3, 4)),
            Err(TableError::NotASchwarzRow(_))
        ));
    }

    #[test]
    fn cyclic_parent_gives_nothing() {
        for m in 2..8 {
            for (p, q) in [(1, 4), (3, 4), (1, 6), (5, 6), (1, 10), (1, 1), (2, 1)] {
                assert!(derive_tables(&SchwarzSignature::cyclic(m), rat(p, q))
                    .unwrap()
                    .is_empty());
            }
        }
    }

    #[test]
    fn case_tables_at_small_k() {
        use MarkLabel::*;
        let t = table_for_case(CaseId::OctHalf, 0);
        assert_eq!(t.degree, 3);
        assert_eq!(
            t.row(Fiber::Zero).marked,
            BTreeMap::from([(Zero, 1), (One, 1), (Lambda, 1)])
        );
        assert_eq!(t.fiber_of(Infinity), Some((Fiber::Infinity, 3)));
        assert_eq!(
            t.rows.iter().map(|r| r.generic_count).collect::<Vec<_>>(),
            [0, 1, 0]
        );

        let t = table_for_case(CaseId::OctThird, 1);
        assert_eq!(t.degree, 6);
        assert_eq!(t.fiber_of(Infinity), Some((Fiber::One, 3)));
        assert_eq!(t.fiber_of(Lambda), Some((Fiber::Infinity, 2)));
        assert_eq!(
            t.rows.iter().map(|r| r.generic_count).collect::<Vec<_>>(),
            [2, 1, 1]
        );

        let t = table_for_case(CaseId::IcoFifth, 0);
        assert_eq!(t.degree, 3);
        assert_eq!(t.fiber_of(Infinity), Some((Fiber::Infinity, 3)));
        assert_eq!(
            t.rows.iter().map(|r| r.generic_mult).collect::<Vec<_>>(),
            [2, 3, 5]
        );
    }

    #[test]
    fn validation_catches_corruption() {
        for k in 0..=20 {
            assert!(validate_table(&table_for_case(CaseId::OctHalf, k)));
        }
        let mut t = table_for_case(CaseId::OctHalf, 2);
        t.rows[0].generic_count -= 1;
        assert!(!validate_table(&t));
        assert!(t.violations().iter().any(|v| matches!(
            v,
            Violation::RowSum {
                fiber: Fiber::Zero,
                ..
            }
        )));

        let mut t = table_for_case(CaseId::OctHalf, 2);
        t.rows[2].marked.insert(MarkLabel::Lambda, 1);
        assert!(t.violations().contains(&Violation::Column {
            label: MarkLabel::Lambda,
            occurrences: 2
        }));
        assert!(matches!(
            passport_of_table(&t),
            Err(TableError::InvalidTable(_))
        ));
    }

    #[test]
    fn passports() {
        assert_eq!(
            passport_of_table(&table_for_case(CaseId::OctHalf, 1)),
            Ok(Passport::new(
                parts(&[1, 1, 1, 2, 2, 2]),
                parts(&[3, 3, 3]),
                parts(&[5, 4])
            ))
        );
        assert_eq!(
            passport_of_table(&table_for_case(CaseId::IcoThird, 0)),
            Ok(Passport::new(
                parts(&[1, 1, 1, 2]),
                parts(&[2, 3]),
                parts(&[5])
            ))
        );
        assert_eq!(
            passport_of_table(&table_for_case(CaseId::OctThird, 0)),
            Ok(Passport::new(parts(&[1, 1]), parts(&[2]), parts(&[2])))
        );
    }

    #[test]
    fn case_names_round_trip() {
        for c in CaseId::ALL {
            assert_eq!(c.name().parse::<CaseId>(), Ok(c));
        }
        assert!("oct_quarter".parse::<CaseId>().is_err());
        assert_eq!(CaseId::OctThird.max_k_for_degree(10), Some(2));
        assert_eq!(CaseId::IcoThird.max_k_for_degree(4), None);
    }
}
