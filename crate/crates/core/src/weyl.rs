//! Weyl group words: lengths, reduced words, longest elements, the Weyl
//! involution and minimal coset representatives for right quotients
//! `W / W_P`.
//!
//! Group elements are stored as the integer matrix of their action on the
//! root lattice, together with the matrix of the inverse.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{LatticeVector, Root, RootSystem};

/// A word in the simple reflections, letters 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word with the letter at 1-based position `pos` removed.
    pub fn without(&self, pos: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(pos - 1);
        Word(v)
    }

    /// The word with 1-based positions `pos` and `pos + 1` exchanged.
    pub fn swapped(&self, pos: usize) -> Word {
        let mut v = self.0.clone();
        v.swap(pos - 1, pos);
        Word(v)
    }

    pub fn check(&self, rs: &RootSystem) -> Result<()> {
        for &l in &self.0 {
            rs.check_simple(l)?;
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Word {
    type Err = std::num::ParseIntError;

    /// Parses comma-separated letters; the empty string is the empty word.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// The simple roots generating a standard parabolic subgroup `W_P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSpec {
    generators: Vec<usize>,
}

impl ParabolicSpec {
    pub fn new(rs: &RootSystem, mut generators: Vec<usize>) -> Result<Self> {
        for &g in &generators {
            rs.check_simple(g)?;
        }
        generators.sort_unstable();
        generators.dedup();
        Ok(ParabolicSpec { generators })
    }

    /// The maximal parabolic of the fundamental weight `w_k`.
    pub fn maximal(rs: &RootSystem, k: usize) -> Result<Self> {
        rs.check_simple(k)?;
        Ok(ParabolicSpec {
            generators: (1..=rs.rank()).filter(|&j| j != k).collect(),
        })
    }

    pub fn full(rs: &RootSystem) -> Self {
        ParabolicSpec {
            generators: (1..=rs.rank()).collect(),
        }
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, i: usize) -> bool {
        self.generators.binary_search(&i).is_ok()
    }
}

/// A Weyl group element as its matrix on the root lattice (column `j` is the
/// image of `alpha_j`), carrying the inverse matrix alongside.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    m: Vec<i64>,
    inv: Vec<i64>,
}

fn identity_matrix(r: usize) -> Vec<i64> {
    let mut m = vec![0; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            rank,
            m: identity_matrix(rank),
            inv: identity_matrix(rank),
        }
    }

    /// Matrix entries, row-major.
    pub fn matrix(&self) -> &[i64] {
        &self.m
    }

    fn column(m: &[i64], r: usize, j: usize) -> impl Iterator<Item = i64> + '_ {
        (0..r).map(move |row| m[row * r + j])
    }

    /// `self * s_i`, 0-based `i`.
    pub(crate) fn mul_simple_right(&mut self, rs: &RootSystem, i: usize) {
        let r = self.rank;
        let a = rs.cartan();
        // column j of g s_i is g(alpha_j) - a_ij g(alpha_i)
        let col_i: Vec<i64> = Self::column(&self.m, r, i).collect();
        for j in 0..r {
            let c = a[i][j];
            if c == 0 {
                continue;
            }
            for row in 0..r {
                self.m[row * r + j] -= c * col_i[row];
            }
        }
        // s_i applied on the left of the inverse: v -> v - <alpha_i^v, v> alpha_i per column
        for j in 0..r {
            let p: i64 = (0..r).map(|k| a[i][k] * self.inv[k * r + j]).sum();
            self.inv[i * r + j] -= p;
        }
    }

    /// `s_i * self`, 0-based `i`.
    pub(crate) fn mul_simple_left(&mut self, rs: &RootSystem, i: usize) {
        std::mem::swap(&mut self.m, &mut self.inv);
        self.mul_simple_right(rs, i);
        std::mem::swap(&mut self.m, &mut self.inv);
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            rank: self.rank,
            m: self.inv.clone(),
            inv: self.m.clone(),
        }
    }

    pub fn apply(&self, v: &Root) -> Root {
        let r = self.rank;
        Root(
            (0..r)
                .map(|row| (0..r).map(|c| self.m[row * r + c] * v.0[c]).sum())
                .collect(),
        )
    }

    fn column_sign(m: &[i64], r: usize, j: usize) -> i64 {
        // columns are roots, so every nonzero entry has the same sign
        Self::column(m, r, j).sum::<i64>().signum()
    }

    /// `self(alpha_i) < 0`, i.e. `l(self s_i) < l(self)`. 0-based.
    pub fn is_right_descent(&self, i: usize) -> bool {
        Self::column_sign(&self.m, self.rank, i) < 0
    }

    /// `self^-1(alpha_i) < 0`, i.e. `l(s_i self) < l(self)`. 0-based.
    pub fn is_left_descent(&self, i: usize) -> bool {
        Self::column_sign(&self.inv, self.rank, i) < 0
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|p| self.apply(p).is_negative())
            .count()
    }
}

/// The element `s_{w_1} ... s_{w_n}`.
pub fn element(rs: &RootSystem, w: &Word) -> Result<WeylElement> {
    w.check(rs)?;
    let mut g = WeylElement::identity(rs.rank());
    for &l in w.letters() {
        g.mul_simple_right(rs, l - 1);
    }
    Ok(g)
}

/// Applies the word right to left: `s_{w_1}(s_{w_2}(...(y)))`.
pub fn act_on<V: LatticeVector>(rs: &RootSystem, w: &Word, y: &V) -> Result<V> {
    w.check(rs)?;
    if y.coeffs().len() != rs.rank() {
        return Err(Error::RankMismatch {
            rank: rs.rank(),
            got: y.coeffs().len(),
        });
    }
    Ok(w.letters()
        .iter()
        .rev()
        .fold(y.clone(), |acc, &l| rs.reflect0(l - 1, &acc)))
}

pub fn length(rs: &RootSystem, w: &Word) -> Result<usize> {
    Ok(element(rs, w)?.length(rs))
}

pub fn is_reduced(rs: &RootSystem, w: &Word) -> Result<bool> {
    Ok(length(rs, w)? == w.len())
}

/// Length of the shortest non-reduced prefix, if any.
pub fn first_non_reduced_prefix(rs: &RootSystem, w: &Word) -> Result<Option<usize>> {
    w.check(rs)?;
    let mut g = WeylElement::identity(rs.rank());
    for (k, &l) in w.letters().iter().enumerate() {
        if g.is_right_descent(l - 1) {
            return Ok(Some(k + 1));
        }
        g.mul_simple_right(rs, l - 1);
    }
    Ok(None)
}

/// A reduced word for the longest element of `W_P` (or of `W` when `p` is
/// `None`), built by prepending length-increasing letters until none is left.
pub fn longest_element(rs: &RootSystem, p: Option<&ParabolicSpec>) -> Word {
    let letters: Vec<usize> = match p {
        Some(p) => p.generators().to_vec(),
        None => (1..=rs.rank()).collect(),
    };
    let mut g = WeylElement::identity(rs.rank());
    let mut word = VecDeque::new();
    loop {
        let next = letters.iter().copied().find(|&l| !g.is_left_descent(l - 1));
        match next {
            Some(l) => {
                g.mul_simple_left(rs, l - 1);
                word.push_front(l);
            }
            None => break,
        }
    }
    Word(word.into())
}

/// The permutation `i -> j` with `alpha_j = -w_0(alpha_i)`, indexed 1-based
/// (entry 0 unused).
pub fn involution_table(rs: &RootSystem) -> Result<Vec<usize>> {
    let w0 = element(rs, &longest_element(rs, None))?;
    let mut table = vec![0; rs.rank() + 1];
    for i in 1..=rs.rank() {
        let img = -w0.apply(&rs.simple_root(i));
        let j = (1..=rs.rank())
            .find(|&j| img == rs.simple_root(j))
            .ok_or_else(|| {
                Error::invariant(format!("-w0(alpha_{i}) = {img} is not a simple root"))
            })?;
        table[i] = j;
    }
    Ok(table)
}

/// The Weyl involution `i(alpha_i) = -w_0(alpha_i)` on simple indices.
pub fn weyl_involution(rs: &RootSystem, i: usize) -> Result<usize> {
    rs.check_simple(i)?;
    Ok(involution_table(rs)?[i])
}

/// First generator of `p` sent to a negative root by `g`, if any.
pub fn minimality_violation(g: &WeylElement, p: &ParabolicSpec) -> Option<usize> {
    p.generators()
        .iter()
        .copied()
        .find(|&j| g.is_right_descent(j - 1))
}

/// True iff `w` is a reduced word for the minimal element of its coset
/// `w W_P`.
pub fn is_minimal_rep(rs: &RootSystem, w: &Word, p: &ParabolicSpec) -> Result<bool> {
    if first_non_reduced_prefix(rs, w)?.is_some() {
        return Ok(false);
    }
    let g = element(rs, w)?;
    Ok(minimality_violation(&g, p).is_none())
}

/// Projects `g` to the minimal element of `g W_P`.
pub fn coset_min_element(rs: &RootSystem, g: &WeylElement, p: &ParabolicSpec) -> WeylElement {
    let mut g = g.clone();
    while let Some(j) = minimality_violation(&g, p) {
        g.mul_simple_right(rs, j - 1);
    }
    g
}

/// The lexicographically smallest reduced word of `g`.
pub fn lex_min_reduced_word(rs: &RootSystem, g: &WeylElement) -> Word {
    let mut g = g.clone();
    let mut word = Vec::new();
    while let Some(i) = (0..rs.rank()).find(|&i| g.is_left_descent(i)) {
        word.push(i + 1);
        g.mul_simple_left(rs, i);
    }
    Word(word)
}

/// The shortest representative of `w W_P`, as its lexicographically smallest
/// reduced word. Accepts any word.
pub fn minimal_coset_rep(rs: &RootSystem, w: &Word, p: &ParabolicSpec) -> Result<Word> {
    let g = element(rs, w)?;
    Ok(lex_min_reduced_word(rs, &coset_min_element(rs, &g, p)))
}

/// Length of the minimal representative of `w W_P`.
pub fn coset_length(rs: &RootSystem, w: &Word, p: &ParabolicSpec) -> Result<usize> {
    let g = element(rs, w)?;
    Ok(coset_min_element(rs, &g, p).length(rs))
}

/// Reduced words of `g` in lexicographic order, at most `limit` of them.
pub fn reduced_words(rs: &RootSystem, g: &WeylElement, limit: usize) -> Vec<Word> {
    fn go(
        rs: &RootSystem,
        g: &WeylElement,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Word>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let descents: Vec<usize> = (0..rs.rank()).filter(|&i| g.is_left_descent(i)).collect();
        if descents.is_empty() {
            out.push(Word(prefix.clone()));
            return;
        }
        for i in descents {
            let mut h = g.clone();
            h.mul_simple_left(rs, i);
            prefix.push(i + 1);
            go(rs, &h, prefix, out, limit);
            prefix.pop();
            if out.len() >= limit {
                return;
            }
        }
    }
    let mut out = Vec::new();
    go(rs, g, &mut Vec::new(), &mut out, limit);
    out
}

/// Up to `cap` distinct reduced words of `g`. If `g` has at most `cap`
/// reduced words all of them are returned (in lexicographic order) and the
/// flag is `true`; otherwise the lexicographically smallest word plus random
/// descent walks seeded by `seed` fill the sample.
pub fn sample_reduced_words(
    rs: &RootSystem,
    g: &WeylElement,
    cap: usize,
    seed: u64,
) -> (Vec<Word>, bool) {
    let cap = cap.max(1);
    let mut all = reduced_words(rs, g, cap + 1);
    if all.len() <= cap {
        return (all, true);
    }
    all.truncate(1);
    let mut seen: HashSet<Word> = all.iter().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while all.len() < cap && attempts < cap * 64 {
        attempts += 1;
        let mut h = g.clone();
        let mut word = Vec::new();
        loop {
            let descents: Vec<usize> = (0..rs.rank()).filter(|&i| h.is_left_descent(i)).collect();
            let Some(&i) = descents.choose(&mut rng) else {
                break;
            };
            word.push(i + 1);
            h.mul_simple_left(rs, i);
        }
        let w = Word(word);
        if seen.insert(w.clone()) {
            all.push(w);
        }
    }
    (all, false)
}

/// Minimal coset representatives of `W / W_P` for the maximal parabolic of
/// `w_k`, up to length `max_length`, each with its group element. Sorted by
/// length, then by the lexicographically smallest reduced word.
pub fn minuscule_coset_elements(
    rs: &RootSystem,
    k: usize,
    max_length: usize,
) -> Result<Vec<(Word, WeylElement)>> {
    rs.check_simple(k)?;
    if !rs.is_minuscule(k) {
        return Err(Error::NotMinuscule {
            family: rs.family(),
            rank: rs.rank(),
            index: k,
        });
    }
    let p = ParabolicSpec::maximal(rs, k)?;
    let mut level = vec![WeylElement::identity(rs.rank())];
    let mut out = vec![(Word::empty(), level[0].clone())];
    for _ in 0..max_length {
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut next = Vec::new();
        for g in &level {
            for i in 0..rs.rank() {
                if g.is_left_descent(i) {
                    continue;
                }
                let mut h = g.clone();
                h.mul_simple_left(rs, i);
                if minimality_violation(&h, &p).is_none() && seen.insert(h.m.clone(), ()).is_none()
                {
                    next.push(h);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let mut words: Vec<(Word, WeylElement)> = next
            .iter()
            .map(|h| (lex_min_reduced_word(rs, h), h.clone()))
            .collect();
        words.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(words);
        level = next;
    }
    Ok(out)
}

/// One canonical reduced word per minimal coset representative of length at
/// most `max_length`.
pub fn enumerate_minuscule_cosets(rs: &RootSystem, k: usize, max_length: usize) -> Result<Vec<Word>> {
    Ok(minuscule_coset_elements(rs, k, max_length)?
        .into_iter()
        .map(|(w, _)| w)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{Family, Weight};
    use proptest::prelude::*;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::build(f, r).unwrap()
    }

    fn w(v: &[usize]) -> Word {
        Word(v.to_vec())
    }

    #[test]
    fn act_on_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            act_on(&a2, &w(&[1, 2]), &Root(vec![1, 0])).unwrap(),
            Root(vec![0, 1])
        );
        assert_eq!(
            act_on(&a2, &Word::empty(), &Root(vec![1, 1])).unwrap(),
            Root(vec![1, 1])
        );
        assert_eq!(
            act_on(&a2, &w(&[1, 2, 1]), &Root(vec![1, 0])).unwrap(),
            Root(vec![0, -1])
        );
        // matrix route agrees
        let g = element(&a2, &w(&[1, 2])).unwrap();
        assert_eq!(g.apply(&Root(vec![1, 0])), Root(vec![0, 1]));
        assert!(act_on(&a2, &w(&[3]), &Root(vec![1, 0])).is_err());
        let wt = act_on(&a2, &w(&[2, 1]), &Weight(vec![1, 0])).unwrap();
        assert_eq!(wt, Weight(vec![0, -1]));
    }

    #[test]
    fn length_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(length(&a2, &w(&[1, 2, 1])).unwrap(), 3);
        assert!(is_reduced(&a2, &w(&[1, 2, 1])).unwrap());
        assert_eq!(length(&a2, &w(&[1, 1])).unwrap(), 0);
        assert!(!is_reduced(&a2, &w(&[1, 1])).unwrap());
        assert_eq!(first_non_reduced_prefix(&a2, &w(&[1, 2, 1, 2])).unwrap(), Some(4));
        let a3 = rs(Family::A, 3);
        assert_eq!(length(&a3, &w(&[1, 3, 2])).unwrap(), 3);
        assert!(is_reduced(&a3, &w(&[1, 3, 2])).unwrap());
    }

    #[test]
    fn longest_element_examples() {
        let a1 = rs(Family::A, 1);
        assert_eq!(longest_element(&a1, None), w(&[1]));
        let a2 = rs(Family::A, 2);
        let w0 = longest_element(&a2, None);
        assert_eq!(w0.len(), 3);
        let g = element(&a2, &w0).unwrap();
        assert_eq!(g.apply(&Root(vec![1, 0])), Root(vec![0, -1]));
        assert_eq!(longest_element(&rs(Family::A, 3), None).len(), 6);
    }

    #[test]
    fn longest_element_lengths() {
        let systems = [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 5),
            (Family::E, 6),
            (Family::E, 7),
            (Family::F, 4),
            (Family::G, 2),
        ];
        for (f, r) in systems {
            let sys = rs(f, r);
            let w0 = longest_element(&sys, None);
            assert_eq!(w0.len(), sys.positive_roots().len(), "{sys}");
            assert_eq!(length(&sys, &w0).unwrap(), w0.len());
        }
        // parabolic A2 x A1 inside A4 (generators 1, 2, 4): 3 + 1
        let a4 = rs(Family::A, 4);
        let p = ParabolicSpec::new(&a4, vec![1, 2, 4]).unwrap();
        let wp = longest_element(&a4, Some(&p));
        assert_eq!(wp.len(), 4);
        assert!(wp.letters().iter().all(|l| p.contains(*l)));
    }

    #[test]
    fn involution_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(weyl_involution(&a2, 1).unwrap(), 2);
        assert_eq!(weyl_involution(&a2, 2).unwrap(), 1);
        assert_eq!(weyl_involution(&rs(Family::A, 3), 2).unwrap(), 2);
        let d4 = rs(Family::D, 4);
        for i in 1..=4 {
            assert_eq!(weyl_involution(&d4, i).unwrap(), i);
        }
        let d5 = rs(Family::D, 5);
        assert_eq!(weyl_involution(&d5, 4).unwrap(), 5);
        let e6 = rs(Family::E, 6);
        assert_eq!(involution_table(&e6).unwrap(), vec![0, 6, 2, 5, 4, 3, 1]);
    }

    #[test]
    fn involution_is_trivial_when_minus_one_in_w() {
        let cases = [
            (Family::B, 4),
            (Family::C, 3),
            (Family::D, 4),
            (Family::D, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ];
        for (f, r) in cases {
            let sys = rs(f, r);
            let t = involution_table(&sys).unwrap();
            assert!((1..=r).all(|i| t[i] == i), "{sys}");
        }
        for (f, r) in [(Family::A, 5), (Family::D, 7), (Family::E, 6)] {
            let sys = rs(f, r);
            let t = involution_table(&sys).unwrap();
            assert!((1..=r).all(|i| t[t[i]] == i));
        }
    }

    #[test]
    fn minimal_rep_examples() {
        let a3 = rs(Family::A, 3);
        let p = ParabolicSpec::new(&a3, vec![1, 3]).unwrap();
        assert!(is_minimal_rep(&a3, &w(&[1, 3, 2]), &p).unwrap());
        assert!(!is_minimal_rep(&a3, &w(&[2, 1, 3]), &p).unwrap());
        assert_eq!(minimal_coset_rep(&a3, &w(&[2, 1, 3]), &p).unwrap(), w(&[2]));
        assert_eq!(minimal_coset_rep(&a3, &w(&[1, 3, 1]), &p).unwrap(), Word::empty());
        let g = element(&a3, &w(&[2, 1, 3])).unwrap();
        assert_eq!(minimality_violation(&g, &p), Some(1));
    }

    #[test]
    fn coset_enumeration_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            enumerate_minuscule_cosets(&a2, 1, 2).unwrap(),
            vec![Word::empty(), w(&[1]), w(&[2, 1])]
        );
        let a3 = rs(Family::A, 3);
        let words = enumerate_minuscule_cosets(&a3, 2, 4).unwrap();
        assert_eq!(words.len(), 6);
        assert!(words.contains(&w(&[1, 3, 2])));
        assert_eq!(
            enumerate_minuscule_cosets(&rs(Family::E, 7), 7, 0).unwrap(),
            vec![Word::empty()]
        );
        assert!(enumerate_minuscule_cosets(&a3, 5, 2).is_err());
        assert!(enumerate_minuscule_cosets(&rs(Family::E, 8), 1, 2).is_err());
    }

    #[test]
    fn minuscule_quotient_sizes() {
        let cases = [
            (Family::D, 5, 1, 10),
            (Family::D, 5, 5, 16),
            (Family::E, 6, 1, 27),
            (Family::E, 7, 7, 56),
            (Family::B, 3, 3, 8),
            (Family::C, 3, 1, 6),
        ];
        for (f, r, k, size) in cases {
            let sys = rs(f, r);
            let words = enumerate_minuscule_cosets(&sys, k, 100).unwrap();
            assert_eq!(words.len(), size, "{sys} w{k}");
            let p = ParabolicSpec::maximal(&sys, k).unwrap();
            for word in &words {
                assert!(is_minimal_rep(&sys, word, &p).unwrap());
                assert_eq!(*word, minimal_coset_rep(&sys, word, &p).unwrap());
            }
        }
    }

    /// Brute force over the whole group, identifying the coset `g W_P` by the
    /// weight `g(w_k)` and keeping the shortest length in each coset.
    fn brute_force_rank_counts(sys: &RootSystem, k: usize) -> Vec<usize> {
        let mut lengths: HashMap<Weight, usize> = HashMap::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::from([Word::empty()]);
        seen.insert(element(sys, &Word::empty()).unwrap().m);
        while let Some(word) = queue.pop_front() {
            let l = length(sys, &word).unwrap();
            let wt = act_on(sys, &word, &sys.fundamental_weight(k)).unwrap();
            let e = lengths.entry(wt).or_insert(l);
            *e = (*e).min(l);
            for i in 1..=sys.rank() {
                let mut next = word.clone();
                next.0.push(i);
                if seen.insert(element(sys, &next).unwrap().m) {
                    queue.push_back(next);
                }
            }
        }
        let max = lengths.values().copied().max().unwrap();
        let mut counts = vec![0; max + 1];
        for l in lengths.values() {
            counts[*l] += 1;
        }
        counts
    }

    fn gaussian_binomial_coeffs(n: usize, k: usize) -> Vec<usize> {
        // coefficients of [n choose k]_q via the q-Pascal recurrence
        let mut table: Vec<Vec<Vec<usize>>> = vec![vec![vec![]; n + 1]; n + 1];
        for m in 0..=n {
            for j in 0..=m {
                table[m][j] = if j == 0 || j == m {
                    vec![1]
                } else {
                    let a = &table[m - 1][j - 1];
                    let b = &table[m - 1][j];
                    let mut c = vec![0; (a.len()).max(b.len() + j)];
                    for (t, x) in a.iter().enumerate() {
                        c[t] += x;
                    }
                    for (t, x) in b.iter().enumerate() {
                        c[t + j] += x;
                    }
                    c
                };
            }
        }
        table[n][k].clone()
    }

    #[test]
    fn rank_generating_functions_match_brute_force() {
        let cases = [
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
        ];
        for (f, r) in cases {
            let sys = rs(f, r);
            for k in sys.minuscule_weights() {
                let words = enumerate_minuscule_cosets(&sys, k, 100).unwrap();
                let mut counts = vec![0; words.iter().map(Word::len).max().unwrap() + 1];
                for word in &words {
                    counts[word.len()] += 1;
                }
                assert_eq!(counts, brute_force_rank_counts(&sys, k), "{sys} w{k}");
                if f == Family::A {
                    assert_eq!(counts, gaussian_binomial_coeffs(r + 1, k), "{sys} w{k}");
                }
            }
        }
    }

    #[test]
    fn canonical_words_are_lex_smallest() {
        let sys = rs(Family::D, 4);
        for (word, g) in minuscule_coset_elements(&sys, 1, 10).unwrap() {
            let all = reduced_words(&sys, &g, usize::MAX);
            assert_eq!(all.iter().min(), Some(&word));
            assert!(all.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn sampling_is_deterministic_and_reduced() {
        let sys = rs(Family::E, 7);
        let elems = minuscule_coset_elements(&sys, 7, 100).unwrap();
        let (_, top) = elems.last().unwrap();
        let (a, exhaustive) = sample_reduced_words(&sys, top, 20, 7);
        let (b, _) = sample_reduced_words(&sys, top, 20, 7);
        assert!(!exhaustive);
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        for word in &a {
            assert_eq!(word.len(), 27);
            assert_eq!(&element(&sys, word).unwrap(), top);
        }
        let (small, exhaustive) = sample_reduced_words(&sys, &elems[3].1, 100, 1);
        assert!(exhaustive);
        assert_eq!(small.len(), reduced_words(&sys, &elems[3].1, 1000).len());
    }

    proptest! {
        #[test]
        fn minimal_coset_rep_is_idempotent(letters in proptest::collection::vec(1usize..=4, 0..12), k in 1usize..=4) {
            let sys = rs(Family::A, 4);
            let p = ParabolicSpec::maximal(&sys, k).unwrap();
            let word = Word(letters);
            let rep = minimal_coset_rep(&sys, &word, &p).unwrap();
            prop_assert!(rep.len() <= length(&sys, &word).unwrap());
            prop_assert!(rep.len() <= word.len());
            prop_assert!(is_minimal_rep(&sys, &rep, &p).unwrap());
            prop_assert_eq!(minimal_coset_rep(&sys, &rep, &p).unwrap(), rep.clone());
            // same coset: same image of w_k
            let wk = sys.fundamental_weight(k);
            prop_assert_eq!(act_on(&sys, &rep, &wk).unwrap(), act_on(&sys, &word, &wk).unwrap());
        }

        #[test]
        fn inverse_matrix_is_tracked(letters in proptest::collection::vec(1usize..=5, 0..16)) {
            let sys = rs(Family::D, 5);
            let word = Word(letters.clone());
            let g = element(&sys, &word).unwrap();
            let rev = Word(letters.into_iter().rev().collect());
            prop_assert_eq!(g.inverse(), element(&sys, &rev).unwrap());
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!("1,3,2".parse::<Word>().unwrap(), w(&[1, 3, 2]));
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert_eq!("(2, 1)".parse::<Word>().unwrap(), w(&[2, 1]));
        assert!("1,x".parse::<Word>().is_err());
        assert_eq!(w(&[1, 3, 2]).to_string(), "(1,3,2)");
    }
}
