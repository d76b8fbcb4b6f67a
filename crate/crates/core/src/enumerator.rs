//! Exhaustive search for dessins with a prescribed passport, up to
//! equivalence.
//!
//! `σ_b` is fixed to the standard permutation of its cycle type; every
//! permutation of the white (or, when that class is smaller, the face)
//! cycle type is then tried, and the survivors are deduplicated by
//! canonical form. Fixing `σ_b` loses nothing, since every class has a
//! member with that `σ_b`; what remains of the redundancy is the centralizer
//! of `σ_b`, which canonicalization absorbs.
//!
//! The candidate stream is split by the cycle through dart 0 and the pieces
//! are searched in parallel; results are merged into a map keyed by the
//! canonical form, so the output is independent of scheduling.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::fuchsian::check_condition_star;
use crate::hypermap::{Dessin, Feature, MarkLabel, MarkedDessin, Passport};
use crate::perm::{canonical_of_type, Partition, Permutation};
use crate::tables::{passport_of_table, RamificationTable, TableError};

pub const DEFAULT_DEGREE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("degree {degree} exceeds the search cap {cap}; raise the cap explicitly (--cap) if you mean it")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("passport {0} does not partition a single degree")]
    InvalidPassport(String),
    #[error(transparent)]
    InvalidTable(#[from] TableError),
}

/// Search settings; the default cap is 12 darts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    pub cap: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            cap: DEFAULT_DEGREE_CAP,
        }
    }
}

pub fn enumerate_passport(p: &Passport) -> Result<Vec<Dessin>, EnumerationError> {
    Enumerator::default().passport(p)
}

pub fn enumerate_marked(t: &RamificationTable) -> Result<Vec<MarkedDessin>, EnumerationError> {
    Enumerator::default().marked(t)
}

pub fn count_classes(t: &RamificationTable) -> Result<usize, EnumerationError> {
    Enumerator::default().count(t)
}

impl Enumerator {
    pub fn with_cap(cap: usize) -> Self {
        Enumerator { cap }
    }

    fn check_degree(&self, degree: usize) -> Result<(), EnumerationError> {
        if degree > self.cap {
            return Err(EnumerationError::DegreeCapExceeded {
                degree,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// One canonical representative per equivalence class of transitive
    /// pairs with passport `p`, of any genus, ordered by canonical key.
    pub fn passport(&self, p: &Passport) -> Result<Vec<Dessin>, EnumerationError> {
        let degree = p
            .degree()
            .ok_or_else(|| EnumerationError::InvalidPassport(p.to_string()))?;
        self.check_degree(degree)?;
        let black = canonical_of_type(&p.black);
        // Walk whichever of the white and face classes is smaller.
        let via_faces = class_size(&p.face) < class_size(&p.white);
        let (walked, other) = if via_faces {
            (&p.face, &p.white)
        } else {
            (&p.white, &p.face)
        };
        let target: Vec<usize> = other.parts().to_vec();

        let found: BTreeMap<Vec<usize>, Dessin> = first_cycles(walked)
            .into_par_iter()
            .map(|prefix| {
                let mut local = BTreeMap::new();
                let mut walker = TypeWalker::new(walked);
                walker.fix_cycle(&prefix);
                walker.run(&mut |images| {
                    let perm = Permutation::from_images(images.to_vec())
                        .expect("walker yields permutations");
                    // When walking faces, σ_w = (σ_f ∘ σ_b)⁻¹.
                    let (white, third) = if via_faces {
                        let white = perm.after(&black).inverse();
                        (white.clone(), white)
                    } else {
                        let face = black.after(&perm).inverse();
                        (perm, face)
                    };
                    if third.cycle_type().parts() != target.as_slice() {
                        return;
                    }
                    if let Ok(d) = Dessin::new(degree, black.clone(), white) {
                        local.entry(d.canonical_key()).or_insert(d);
                    }
                });
                local
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    a.entry(k).or_insert(v);
                }
                a
            });
        Ok(found.into_values().map(|d| d.canonical_form()).collect())
    }

    /// One representative per marked-equivalence class of genus-0 dessins
    /// realizing `t`, with the marks on features of the kind and length the
    /// table prescribes, in every possible way, and satisfying condition (★).
    pub fn marked(&self, t: &RamificationTable) -> Result<Vec<MarkedDessin>, EnumerationError> {
        let p = passport_of_table(t)?;
        self.check_degree(t.degree as usize)?;
        let mut found: BTreeMap<Vec<usize>, MarkedDessin> = BTreeMap::new();
        for d in self.passport(&p)? {
            if d.genus() != Ok(0) {
                continue;
            }
            for m in markings(&d, t) {
                if check_condition_star(&m, t) == Ok(true) {
                    found
                        .entry(m.canonical_key())
                        .or_insert_with(|| m.canonical_form());
                }
            }
        }
        Ok(found.into_values().collect())
    }

    pub fn count(&self, t: &RamificationTable) -> Result<usize, EnumerationError> {
        Ok(self.marked(t)?.len())
    }
}

/// All injective placements of the four marks on features matching `t`.
fn markings(d: &Dessin, t: &RamificationTable) -> Vec<MarkedDessin> {
    let mut options: Vec<Vec<Feature>> = Vec::new();
    for label in MarkLabel::ALL {
        let Some((fiber, index)) = t.fiber_of(label) else {
            return Vec::new();
        };
        options.push(
            d.features(fiber.kind())
                .into_iter()
                .filter(|f| f.len() as u64 == index)
                .collect(),
        );
    }
    let mut out = Vec::new();
    let mut pick: Vec<Feature> = Vec::with_capacity(4);
    fn go(
        options: &[Vec<Feature>],
        pick: &mut Vec<Feature>,
        d: &Dessin,
        out: &mut Vec<MarkedDessin>,
    ) {
        if pick.len() == options.len() {
            let marks: [Feature; 4] = pick.clone().try_into().expect("four marks");
            out.extend(MarkedDessin::new(d.clone(), marks).ok());
            return;
        }
        for f in &options[pick.len()] {
            if !pick.contains(f) {
                pick.push(f.clone());
                go(options, pick, d, out);
                pick.pop();
            }
        }
    }
    go(&options, &mut pick, d, &mut out);
    out
}

/// `E! / z_λ`, the number of permutations of the given cycle type.
fn class_size(shape: &Partition) -> u128 {
    let n = shape.total() as u128;
    let mut size: u128 = (1..=n).product();
    let mut seen = BTreeSet::new();
    for &p in shape.parts() {
        size /= p as u128;
        if seen.insert(p) {
            size /= (1..=shape.multiplicity(p) as u128).product::<u128>();
        }
    }
    size
}

/// Depth-first generation of every permutation with a given cycle type.
/// Each permutation is produced exactly once: cycles are opened at the
/// smallest free point, and only distinct remaining lengths are tried.
struct TypeWalker {
    images: Vec<usize>,
    used: Vec<bool>,
    remaining: BTreeMap<usize, usize>,
}

impl TypeWalker {
    fn new(shape: &Partition) -> Self {
        let n = shape.total();
        let mut remaining = BTreeMap::new();
        for &p in shape.parts() {
            *remaining.entry(p).or_insert(0) += 1;
        }
        TypeWalker {
            images: (0..n).collect(),
            used: vec![false; n],
            remaining,
        }
    }

    fn fix_cycle(&mut self, cycle: &[usize]) {
        for (i, &x) in cycle.iter().enumerate() {
            self.images[x] = cycle[(i + 1) % cycle.len()];
            self.used[x] = true;
        }
        *self
            .remaining
            .get_mut(&cycle.len())
            .expect("length available") -= 1;
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize])) {
        let Some(start) = self.used.iter().position(|&u| !u) else {
            visit(&self.images);
            return;
        };
        let lengths: Vec<usize> = self
            .remaining
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&l, _)| l)
            .collect();
        for len in lengths {
            let mut cycle = vec![start];
            self.used[start] = true;
            self.extend(&mut cycle, len, visit);
            self.used[start] = false;
        }
    }

    fn extend(&mut self, cycle: &mut Vec<usize>, len: usize, visit: &mut dyn FnMut(&[usize])) {
        if cycle.len() == len {
            for (i, &x) in cycle.iter().enumerate() {
                self.images[x] = cycle[(i + 1) % len];
            }
            *self.remaining.get_mut(&len).expect("length available") -= 1;
            self.run(visit);
            *self.remaining.get_mut(&len).expect("length available") += 1;
            return;
        }
        for x in 0..self.used.len() {
            if !self.used[x] {
                self.used[x] = true;
                cycle.push(x);
                self.extend(cycle, len, visit);
                cycle.pop();
                self.used[x] = false;
            }
        }
    }
}

/// Every possible cycle through point 0 for the given shape; the search is
/// split along these.
fn first_cycles(shape: &Partition) -> Vec<Vec<usize>> {
    let n = shape.total();
    let mut lengths: Vec<usize> = shape.parts().to_vec();
    lengths.dedup();
    let mut out = Vec::new();
    fn grow(cycle: &mut Vec<usize>, len: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cycle.len() == len {
            out.push(cycle.clone());
            return;
        }
        for x in 1..n {
            if !cycle.contains(&x) {
                cycle.push(x);
                grow(cycle, len, n, out);
                cycle.pop();
            }
        }
    }
    for len in lengths {
        grow(&mut vec![0], len, n, &mut out);
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Reference search: every pair in `S_E × S_E`, no symmetry reduction.
/// Returns the number of equivalence classes for each passport that occurs.
/// Only meant for `E ≤ 6`.
pub fn naive_class_counts(degree: usize) -> BTreeMap<Passport, usize> {
    let perms: Vec<Permutation> = all_permutations(degree)
        .into_iter()
        .map(|p| Permutation::from_images(p).expect("generated permutations are valid"))
        .collect();
    let keys: BTreeMap<Passport, BTreeSet<Vec<usize>>> = perms
        .par_iter()
        .map(|b| {
            let mut local: BTreeMap<Passport, BTreeSet<Vec<usize>>> = BTreeMap::new();
            for w in &perms {
                if let Ok(d) = Dessin::new(degree, b.clone(), w.clone()) {
                    local
                        .entry(d.passport())
                        .or_default()
                        .insert(d.canonical_key());
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (p, set) in b {
                a.entry(p).or_default().extend(set);
            }
            a
        });
    keys.into_iter().map(|(p, s)| (p, s.len())).collect()
}

/// Every partition of `n`, each in non-increasing order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{table_for_case, CaseId};

    fn pp(s: &str) -> Passport {
        Passport::parse(s).unwrap()
    }

    #[test]
    fn walker_counts_match_class_sizes() {
        for shape in partitions(6) {
            let mut count = 0u128;
            TypeWalker::new(&shape).run(&mut |images| {
                let p = Permutation::from_images(images.to_vec()).unwrap();
                assert_eq!(p.cycle_type(), shape);
                count += 1;
            });
            assert_eq!(count, class_size(&shape), "{shape}");
        }
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn small_passports() {
        let star = enumerate_passport(&pp("1,1,1;3;3")).unwrap();
        assert_eq!(star.len(), 1);
        assert_eq!(star[0].passport(), pp("1,1,1;3;3"));
        assert_eq!(enumerate_passport(&pp("1,1;2;2")).unwrap().len(), 1);
        assert!(enumerate_passport(&pp("2;2;1,1")).unwrap().len() == 1);
        assert!(enumerate_passport(&pp("2;2;2")).unwrap().is_empty());
    }

    #[test]
    fn degree_six_classes_are_distinct() {
        let list = enumerate_passport(&pp("1,1,2,2;3,3;2,4")).unwrap();
        assert!(!list.is_empty());
        for (i, a) in list.iter().enumerate() {
            assert_eq!(a.passport(), pp("1,1,2,2;3,3;2,4"));
            for b in &list[i + 1..] {
                assert!(!a.equivalent(b));
            }
        }
    }

    #[test]
    fn cap_and_bad_input() {
        let big = pp("13;13;1,1,1,1,1,1,1,1,1,1,1,1,1");
        assert_eq!(
            enumerate_passport(&big),
            Err(EnumerationError::DegreeCapExceeded {
                degree: 13,
                cap: 12
            })
        );
        assert!(matches!(
            enumerate_passport(&pp("1,1;3;3")),
            Err(EnumerationError::InvalidPassport(_))
        ));
        let mut t = table_for_case(CaseId::OctHalf, 0);
        t.rows[1].generic_count = 0;
        assert!(matches!(
            enumerate_marked(&t),
            Err(EnumerationError::InvalidTable(_))
        ));
        assert!(matches!(
            Enumerator::with_cap(5).marked(&table_for_case(CaseId::OctHalf, 1)),
            Err(EnumerationError::DegreeCapExceeded { degree: 9, cap: 5 })
        ));
    }

    #[test]
    fn marked_star() {
        // The three labels on the three leaves: the rotation group of the
        // star is cyclic of order 3, leaving 3!/3 = 2 classes.
        let t = table_for_case(CaseId::OctHalf, 0);
        assert_eq!(count_classes(&t), Ok(2));
        assert_eq!(count_classes(&table_for_case(CaseId::IcoFifth, 0)), Ok(2));
    }

    #[test]
    fn naive_matches_optimized_up_to_four() {
        for e in 1..=4 {
            let naive = naive_class_counts(e);
            for b in partitions(e) {
                for w in partitions(e) {
                    for f in partitions(e) {
                        let p = Passport::new(b.clone(), w.clone(), f.clone());
                        let fast = enumerate_passport(&p).unwrap().len();
                        assert_eq!(fast, naive.get(&p).copied().unwrap_or(0), "{p}");
                    }
                }
            }
        }
    }
}
