//! Effective curve classes indexing the irreducible components of the
//! spaces of rational curves of fixed degree, and the Young-diagram front
//! end for Grassmannian Schubert varieties.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bott_samelson::{BottSamelsonData, CurveClass, DivisorVector};
use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem};
use crate::weyl::{self, ParabolicSpec, Word};

/// One effective class: intersection numbers `b` against the `xi` and the
/// coefficients `a` in the `C` basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectiveClass {
    pub b: Vec<i64>,
    pub a: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dimension: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSet {
    pub degree: u64,
    pub count: u64,
    pub classes: Vec<EffectiveClass>,
}

/// Coefficients of the degree functional in `b` coordinates, zero on
/// contracted positions. Rejects non-positive coefficients on the free ones.
pub fn degree_functional(bs: &BottSamelsonData) -> Result<Vec<i64>> {
    let mut coef = vec![0; bs.n()];
    for k in 1..=bs.n() {
        if bs.is_contracted(k) {
            continue;
        }
        let c = bs.curve_degree(&bs.hat_curve(k)?)?;
        if c <= 0 {
            return Err(Error::UnboundedEnumeration {
                index: k,
                coefficient: c,
            });
        }
        coef[k - 1] = c;
    }
    Ok(coef)
}

/// All classes `b >= 0` vanishing on contracted positions whose image has
/// degree `d`, in decreasing lexicographic order of `b`.
pub fn ne_set(bs: &BottSamelsonData, d: u64) -> Result<ComponentSet> {
    let coef = degree_functional(bs)?;
    let n = bs.n();
    let mut found = Vec::new();
    let mut b = vec![0i64; n];
    enumerate(&coef, 0, d as i64, &mut b, &mut found);
    let classes = found
        .into_iter()
        .map(|b| {
            let b = DivisorVector { b };
            let a = bs.class_from_xi_pairings(&b)?;
            let deg = bs.curve_degree(&a)?;
            if deg != d as i64 {
                return Err(Error::invariant(format!(
                    "{}: class {:?} has degree {deg}, expected {d}",
                    bs.gamma(),
                    b.b
                )));
            }
            Ok(EffectiveClass {
                b: b.b,
                a: a.a,
                dimension: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComponentSet {
        degree: d,
        count: classes.len() as u64,
        classes,
    })
}

fn enumerate(coef: &[i64], k: usize, rest: i64, b: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if k == coef.len() {
        if rest == 0 {
            out.push(b.clone());
        }
        return;
    }
    if coef[k] == 0 {
        b[k] = 0;
        enumerate(coef, k + 1, rest, b, out);
        return;
    }
    for v in (0..=rest / coef[k]).rev() {
        b[k] = v;
        enumerate(coef, k + 1, rest - v * coef[k], b, out);
    }
    b[k] = 0;
}

/// `|ne_set(bs, d)|`, counted without listing the classes.
pub fn component_count(bs: &BottSamelsonData, d: u64) -> Result<u64> {
    let coef = degree_functional(bs)?;
    let d = d as usize;
    let mut ways = vec![0u64; d + 1];
    ways[0] = 1;
    for &c in coef.iter().filter(|&&c| c > 0) {
        let c = c as usize;
        for t in c..=d {
            ways[t] += ways[t - c];
        }
    }
    Ok(ways[d])
}

/// The rank of the Picard group of the open orbit: `n` minus the number of
/// contracted divisors.
pub fn picard_rank_open_orbit(bs: &BottSamelsonData) -> usize {
    bs.picard_rank_open_orbit()
}

/// Fills in `c . (T_1 + ... + T_n) + n` for every class.
pub fn annotate_dimensions(bs: &BottSamelsonData, set: &mut ComponentSet) -> Result<()> {
    let n = bs.n();
    for class in &mut set.classes {
        let c = CurveClass { a: class.a.clone() };
        let mut total = n as i64;
        for k in 1..=n {
            total += bs.curve_dot_tangent(&c, k)?;
        }
        class.dimension = Some(total);
    }
    Ok(())
}

/// `binom(n, k)`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of multisets of size `d` drawn from `r` kinds.
pub fn multiset_count(r: u64, d: u64) -> u64 {
    if r == 0 {
        u64::from(d == 0)
    } else {
        binomial(d + r - 1, d)
    }
}

/// A Young diagram in a `rows x cols` box, giving the Schubert variety of
/// dimension `|parts|` in the Grassmannian of `rows`-planes in a space of
/// dimension `rows + cols`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    rows: usize,
    cols: usize,
}

impl Partition {
    /// Trailing zero parts are dropped.
    pub fn new(parts: Vec<usize>, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::PartitionOverflow { parts, rows, cols });
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::PartitionNotDecreasing(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > rows || parts.first().is_some_and(|&p| p > cols) {
            return Err(Error::PartitionOverflow { parts, rows, cols });
        }
        Ok(Partition { parts, rows, cols })
    }

    /// The partition whose complement in the box is `codim`: Schubert
    /// varieties indexed by the boxes they are missing.
    pub fn from_codim(codim: Vec<usize>, rows: usize, cols: usize) -> Result<Self> {
        let c = Partition::new(codim, rows, cols)?;
        Partition::new(c.complement(), rows, cols)
    }

    fn padded(&self) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(self.rows, 0);
        v
    }

    /// Parts of the complementary diagram, rotated into a partition.
    pub fn complement(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.padded().iter().rev().map(|p| self.cols - p).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of boxes, i.e. the dimension of the Schubert variety.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The ambient root system `A_{rows + cols - 1}`.
    pub fn root_system(&self) -> Result<RootSystem> {
        RootSystem::build(Family::A, self.rows + self.cols - 1)
    }

    /// The minuscule weight of the Grassmannian.
    pub fn weight_index(&self) -> usize {
        self.rows
    }

    /// Every partition fitting in the box, smallest first.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == rows {
                out.push(prefix.clone());
                return;
            }
            for p in 0..=max {
                prefix.push(p);
                go(rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut raw = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut raw);
        let mut all: Vec<Partition> = raw
            .into_iter()
            .map(|p| Partition::new(p, rows, cols).expect("generated partitions fit"))
            .collect();
        all.sort_by(|x, y| x.size().cmp(&y.size()).then(x.parts.cmp(&y.parts)));
        all
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ") in {}x{}", self.rows, self.cols)
    }
}

/// The row-reading word of the diagram in `A_{rows + cols - 1}` for the
/// weight `w_rows`: rows from bottom to top, each read right to left, box
/// `(r, c)` giving the letter `rows - r + c`.
pub fn partition_to_word(p: &Partition) -> Result<(Word, usize)> {
    let k = p.rows;
    let padded = p.padded();
    let mut letters = Vec::with_capacity(p.size());
    for r in (1..=k).rev() {
        for c in (1..=padded[r - 1]).rev() {
            letters.push(k - r + c);
        }
    }
    let word = Word(letters);
    let rs = p.root_system()?;
    let par = ParabolicSpec::maximal(&rs, k)?;
    if !weyl::is_minimal_rep(&rs, &word, &par)? || word.len() != p.size() {
        return Err(Error::invariant(format!(
            "row word {word} of {p} is not a minimal coset representative of length {}",
            p.size()
        )));
    }
    Ok((word, k))
}

/// Addable corners of the complementary diagram inside the box. Zero for
/// the empty diagram.
pub fn partition_hole_count(p: &Partition) -> usize {
    if p.parts.is_empty() {
        return 0;
    }
    let mut mu = p.complement();
    mu.resize(p.rows, 0);
    (0..p.rows)
        .filter(|&r| mu[r] < p.cols && (r == 0 || mu[r - 1] > mu[r]))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::build(f, r).unwrap()
    }

    fn w(v: &[usize]) -> Word {
        Word(v.to_vec())
    }

    #[test]
    fn plane_has_one_class_per_degree() {
        let a2 = rs(Family::A, 2);
        let bs = BottSamelsonData::build(&a2, 1, &w(&[2, 1])).unwrap();
        for d in 0..6 {
            let set = ne_set(&bs, d).unwrap();
            assert_eq!(set.count, 1);
            assert_eq!(set.classes[0].b, vec![d as i64, 0]);
            assert_eq!(set.classes[0].a, vec![d as i64, d as i64]);
            assert_eq!(component_count(&bs, d).unwrap(), 1);
        }
    }

    #[test]
    fn lines_meeting_a_line() {
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        let set = ne_set(&bs, 2).unwrap();
        let bs_list: Vec<Vec<i64>> = set.classes.iter().map(|c| c.b.clone()).collect();
        assert_eq!(bs_list, vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0]]);
        for (d, count) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)] {
            assert_eq!(component_count(&bs, d).unwrap(), count);
            assert_eq!(ne_set(&bs, d).unwrap().count, count);
        }
        assert_eq!(picard_rank_open_orbit(&bs), 2);
        assert_eq!(degree_functional(&bs).unwrap(), vec![1, 1, 0]);
    }

    #[test]
    fn degree_zero_is_the_zero_class() {
        let a1 = rs(Family::A, 1);
        let bs = BottSamelsonData::build(&a1, 1, &w(&[1])).unwrap();
        let set = ne_set(&bs, 0).unwrap();
        assert_eq!(set.classes, vec![EffectiveClass { b: vec![0], a: vec![0], dimension: None }]);
        assert_eq!(picard_rank_open_orbit(&bs), 1);

        let point = BottSamelsonData::build(&a1, 1, &Word::empty()).unwrap();
        assert_eq!(ne_set(&point, 0).unwrap().count, 1);
        assert_eq!(ne_set(&point, 3).unwrap().count, 0);
        assert_eq!(component_count(&point, 3).unwrap(), 0);
    }

    #[test]
    fn dimensions_of_line_spaces() {
        // degree-d maps from the line to the plane form a family of dimension 3d + 2
        let a2 = rs(Family::A, 2);
        let bs = BottSamelsonData::build(&a2, 1, &w(&[2, 1])).unwrap();
        let mut set = ne_set(&bs, 1).unwrap();
        annotate_dimensions(&bs, &mut set).unwrap();
        assert_eq!(set.classes[0].dimension, Some(2 + 3));
        let mut set = ne_set(&bs, 2).unwrap();
        annotate_dimensions(&bs, &mut set).unwrap();
        assert_eq!(set.classes[0].dimension, Some(2 + 6));
    }

    #[test]
    fn partition_examples() {
        let p = Partition::new(vec![2, 1], 2, 2).unwrap();
        let (word, k) = partition_to_word(&p).unwrap();
        assert_eq!((word, k), (w(&[1, 3, 2]), 2));
        let p = Partition::new(vec![2], 1, 2).unwrap();
        assert_eq!(partition_to_word(&p).unwrap(), (w(&[2, 1]), 1));
        let p = Partition::new(vec![], 2, 3).unwrap();
        assert_eq!(partition_to_word(&p).unwrap(), (Word::empty(), 2));
        assert!(matches!(
            Partition::new(vec![3], 2, 2),
            Err(Error::PartitionOverflow { .. })
        ));
        assert!(matches!(
            Partition::new(vec![1, 1, 1], 2, 2),
            Err(Error::PartitionOverflow { .. })
        ));
        assert_eq!(
            Partition::new(vec![1, 2], 2, 2).unwrap_err(),
            Error::PartitionNotDecreasing(vec![1, 2])
        );
        assert_eq!(
            Partition::from_codim(vec![1], 2, 2).unwrap().parts(),
            &[2, 1]
        );
        assert_eq!(Partition::new(vec![2, 0], 2, 2).unwrap().parts(), &[2]);
    }

    #[test]
    fn hole_examples() {
        assert_eq!(partition_hole_count(&Partition::from_codim(vec![1], 2, 2).unwrap()), 2);
        assert_eq!(partition_hole_count(&Partition::from_codim(vec![], 2, 2).unwrap()), 1);
        assert_eq!(partition_hole_count(&Partition::new(vec![2], 1, 2).unwrap()), 1);
        assert_eq!(partition_hole_count(&Partition::new(vec![], 3, 3).unwrap()), 0);
    }

    /// Removable corners of the dimension diagram, counted directly.
    fn removable_corners(p: &Partition) -> usize {
        let parts = p.parts();
        (0..parts.len())
            .filter(|&r| r + 1 == parts.len() || parts[r + 1] < parts[r])
            .count()
    }

    #[test]
    fn holes_are_removable_corners_and_pic_rank() {
        for rows in 1..=3 {
            for cols in 1..=4 {
                let all = Partition::all_in_box(rows, cols);
                assert_eq!(all.len() as u64, binomial((rows + cols) as u64, rows as u64));
                let rs = all[0].root_system().unwrap();
                let mut seen = std::collections::HashSet::new();
                for p in &all {
                    assert_eq!(partition_hole_count(p), removable_corners(p), "{p}");
                    let (word, k) = partition_to_word(p).unwrap();
                    let bs = BottSamelsonData::build(&rs, k, &word).unwrap();
                    assert_eq!(partition_hole_count(p), bs.picard_rank_open_orbit(), "{p}");
                    assert!(seen.insert(word));
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(multiset_count(2, 3), 4);
        assert_eq!(multiset_count(0, 0), 1);
        assert_eq!(multiset_count(0, 2), 0);
        assert_eq!(multiset_count(3, 0), 1);
    }

    proptest! {
        #[test]
        fn counts_follow_the_hole_formula(rows in 1usize..=3, cols in 1usize..=3, idx in 0usize..20, d in 0u64..5) {
            let all = Partition::all_in_box(rows, cols);
            let p = &all[idx % all.len()];
            let rs = p.root_system().unwrap();
            let (word, k) = partition_to_word(p).unwrap();
            let bs = BottSamelsonData::build(&rs, k, &word).unwrap();
            let set = ne_set(&bs, d).unwrap();
            prop_assert_eq!(set.count, multiset_count(partition_hole_count(p) as u64, d));
            prop_assert_eq!(component_count(&bs, d).unwrap(), set.count);
            for class in &set.classes {
                prop_assert!(class.b.iter().all(|&x| x >= 0));
                for &x in bs.contracted_divisors() {
                    prop_assert_eq!(class.b[x - 1], 0);
                }
                let back = bs.xi_pairings(&CurveClass { a: class.a.clone() }).unwrap();
                prop_assert_eq!(&back.b, &class.b);
            }
            if d >= 1 && bs.picard_rank_open_orbit() >= 1 {
                prop_assert!(component_count(&bs, d + 1).unwrap() >= set.count);
            }
        }
    }
}
