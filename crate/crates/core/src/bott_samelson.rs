//! Bott-Samelson data of a minuscule Schubert variety: the root sequences
//! attached to a reduced minimal coset word and the intersection numbers
//! between the curves `C_i` and the divisors `xi_j` of the resolution.
//!
//! Positions in the word are 1-based throughout this module.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Family, Root, RootSystem, Weight};
use crate::weyl::{self, ParabolicSpec, Word};

/// Default bound on `j - i` for [`BottSamelsonData::chow_pairing_oracle`].
pub const DEFAULT_CHAIN_BOUND: usize = 20;

/// A curve class as coefficients in the basis `[C_1], ..., [C_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub a: Vec<i64>,
}

/// A divisor class, or the intersection numbers of a curve against
/// `xi_1, ..., xi_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorVector {
    pub b: Vec<i64>,
}

impl CurveClass {
    pub fn zero(n: usize) -> Self {
        CurveClass { a: vec![0; n] }
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut a = vec![0; n];
        a[i - 1] = 1;
        CurveClass { a }
    }

    pub fn sub(&self, other: &CurveClass) -> CurveClass {
        CurveClass {
            a: self.a.iter().zip(&other.a).map(|(x, y)| x - y).collect(),
        }
    }
}

/// The sequence `alpha_i = s_{beta_1} ... s_{beta_{i-1}}(beta_i)` for a
/// sequence of simple indices.
pub fn alpha_sequence(rs: &RootSystem, beta: &[usize]) -> Vec<Root> {
    (0..beta.len())
        .map(|i| {
            beta[..i]
                .iter()
                .rev()
                .fold(rs.simple_root(beta[i]), |acc, &b| rs.reflect0(b - 1, &acc))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct BottSamelsonData<'a> {
    rs: &'a RootSystem,
    weight_index: usize,
    gamma: Word,
    beta: Vec<usize>,
    alpha: Vec<Root>,
    pair_alpha: Vec<Vec<i64>>,
    pair_beta: Vec<Vec<i64>>,
    special_root: usize,
    contracted: Vec<usize>,
}

impl PartialEq for BottSamelsonData<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.rs == other.rs
            && self.weight_index == other.weight_index
            && self.gamma == other.gamma
            && self.beta == other.beta
            && self.alpha == other.alpha
            && self.pair_alpha == other.pair_alpha
            && self.pair_beta == other.pair_beta
            && self.special_root == other.special_root
            && self.contracted == other.contracted
    }
}

impl<'a> BottSamelsonData<'a> {
    /// Builds the data for a reduced word `gamma` that is minimal in
    /// `W / W_P` for the minuscule weight `w_k`. All structural invariants
    /// are verified before returning.
    pub fn build(rs: &'a RootSystem, k: usize, gamma: &Word) -> Result<Self> {
        let bs = Self::build_unverified(rs, k, gamma)?;
        bs.verify()?;
        Ok(bs)
    }

    /// Validates the input but skips the invariant checks, so that the audit
    /// can test them independently.
    pub(crate) fn build_unverified(rs: &'a RootSystem, k: usize, gamma: &Word) -> Result<Self> {
        rs.check_simple(k)?;
        if !rs.is_minuscule(k) {
            return Err(Error::NotMinuscule {
                family: rs.family(),
                rank: rs.rank(),
                index: k,
            });
        }
        gamma.check(rs)?;
        if let Some(prefix_len) = weyl::first_non_reduced_prefix(rs, gamma)? {
            return Err(Error::NotReduced {
                word: gamma.0.clone(),
                prefix_len,
            });
        }
        let p = ParabolicSpec::maximal(rs, k)?;
        let g = weyl::element(rs, gamma)?;
        if let Some(letter) = weyl::minimality_violation(&g, &p) {
            return Err(Error::NotMinimal {
                word: gamma.0.clone(),
                letter,
            });
        }

        let inv = weyl::involution_table(rs)?;
        let beta: Vec<usize> = gamma.letters().iter().map(|&l| inv[l]).collect();
        let alpha = alpha_sequence(rs, &beta);
        let n = beta.len();
        let mut pair_alpha = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                pair_alpha[i][j] = rs.pairing(&alpha[i], &alpha[j])?;
            }
        }
        let cartan = rs.cartan();
        let pair_beta: Vec<Vec<i64>> = beta
            .iter()
            .map(|&bi| beta.iter().map(|&bj| cartan[bi - 1][bj - 1]).collect())
            .collect();

        let n_minus_1 = n.saturating_sub(1);
        let mut contracted = Vec::new();
        for x in 1..=n {
            if weyl::coset_length(rs, &gamma.without(x), &p)? < n_minus_1 {
                contracted.push(x);
            }
        }

        Ok(BottSamelsonData {
            rs,
            weight_index: k,
            gamma: gamma.clone(),
            beta,
            alpha,
            pair_alpha,
            pair_beta,
            special_root: inv[k],
            contracted,
        })
    }

    fn verify(&self) -> Result<()> {
        let n = self.n();
        let word = &self.gamma;
        for (i, a) in self.alpha.iter().enumerate() {
            if !a.is_positive() {
                return Err(Error::invariant(format!(
                    "{word}: alpha_{} = {a} is not positive",
                    i + 1
                )));
            }
            if let Some(j) = self.alpha[..i].iter().position(|b| b == a) {
                return Err(Error::invariant(format!(
                    "{word}: alpha_{} = alpha_{} = {a}",
                    j + 1,
                    i + 1
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let p = self.pair_alpha[i][j];
                let ok = if i == j { p == 2 } else { (0..=1).contains(&p) };
                if !ok {
                    return Err(Error::invariant(format!(
                        "{word}: <alpha_{}^v, alpha_{}> = {p}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if let Some(&last) = self.beta.last() {
            if last != self.special_root {
                return Err(Error::invariant(format!(
                    "{word}: last beta letter {last} differs from the special root {}",
                    self.special_root
                )));
            }
        }
        for i in 0..n {
            let rebuilt = self.alpha[..i]
                .iter()
                .rev()
                .try_fold(self.alpha[i].clone(), |acc, a| self.rs.reflect_by(a, &acc))?;
            if rebuilt != self.rs.simple_root(self.beta[i]) {
                return Err(Error::invariant(format!(
                    "{word}: reflecting alpha_{} back gives {rebuilt}, not beta_{}",
                    i + 1,
                    i + 1
                )));
            }
        }
        Ok(())
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn weight_index(&self) -> usize {
        self.weight_index
    }

    /// Length of the word, i.e. the dimension of the Schubert variety.
    pub fn n(&self) -> usize {
        self.beta.len()
    }

    pub fn gamma(&self) -> &Word {
        &self.gamma
    }

    /// `beta[i] = i(gamma[i])`, as 1-based simple indices.
    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn alpha(&self) -> &[Root] {
        &self.alpha
    }

    pub fn pair_alpha_table(&self) -> &[Vec<i64>] {
        &self.pair_alpha
    }

    pub fn pair_beta_table(&self) -> &[Vec<i64>] {
        &self.pair_beta
    }

    /// The simple index `beta` with `<beta^v, i(w_k)> = 1`.
    pub fn special_root(&self) -> usize {
        self.special_root
    }

    fn pos(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.n() {
            Err(Error::PositionOutOfRange {
                index: i,
                len: self.n(),
            })
        } else {
            Ok(i - 1)
        }
    }

    fn check_class(&self, len: usize) -> Result<()> {
        if len != self.n() {
            Err(Error::ClassLength {
                expected: self.n(),
                got: len,
            })
        } else {
            Ok(())
        }
    }

    /// `<alpha_i^v, alpha_j>`.
    pub fn pair_alpha(&self, i: usize, j: usize) -> Result<i64> {
        Ok(self.pair_alpha[self.pos(i)?][self.pos(j)?])
    }

    /// `<beta_i^v, beta_j>`.
    pub fn pair_beta(&self, i: usize, j: usize) -> Result<i64> {
        Ok(self.pair_beta[self.pos(i)?][self.pos(j)?])
    }

    /// `[C_i] . xi_j`: 0 below the diagonal, 1 on it, `<beta_i^v, beta_j>`
    /// above.
    pub fn c_dot_xi(&self, i: usize, j: usize) -> Result<i64> {
        let (i0, j0) = (self.pos(i)?, self.pos(j)?);
        Ok(self.c_dot_xi0(i0, j0))
    }

    fn c_dot_xi0(&self, i: usize, j: usize) -> i64 {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Greater => 0,
            Equal => 1,
            Less => self.pair_beta[i][j],
        }
    }

    /// Alternating sum over all chains `i = i_0 < ... < i_k = j` of the
    /// products `prod <alpha_{i_x}^v, alpha_{i_{x+1}}>`, computed by explicit
    /// enumeration. Rejects `j - i` above [`DEFAULT_CHAIN_BOUND`].
    pub fn chow_pairing_oracle(&self, i: usize, j: usize) -> Result<i64> {
        self.chow_pairing_oracle_bounded(i, j, DEFAULT_CHAIN_BOUND)
    }

    pub fn chow_pairing_oracle_bounded(&self, i: usize, j: usize, bound: usize) -> Result<i64> {
        let (i0, j0) = (self.pos(i)?, self.pos(j)?);
        if i0 >= j0 {
            return Err(Error::ChainOrder { i, j });
        }
        let window = j0 - i0;
        if window > bound {
            return Err(Error::ChainWindowTooWide { window, bound });
        }
        // each chain is a subset of the interior positions i+1..j-1
        let interior = window - 1;
        let mut total = 0i64;
        for mask in 0u64..(1u64 << interior) {
            let mut prev = i0;
            let mut product = 1i64;
            let mut steps = 0u32;
            for t in 0..interior {
                if mask & (1 << t) != 0 {
                    let next = i0 + 1 + t;
                    product *= self.pair_alpha[prev][next];
                    prev = next;
                    steps += 1;
                    if product == 0 {
                        break;
                    }
                }
            }
            if product == 0 {
                continue;
            }
            product *= self.pair_alpha[prev][j0];
            steps += 1;
            total += if steps % 2 == 0 { product } else { -product };
        }
        Ok(total)
    }

    /// The tangent class `T_j = sum_{k <= j} <alpha_k^v, alpha_j> xi_k`.
    pub fn tangent_class(&self, j: usize) -> Result<DivisorVector> {
        let j0 = self.pos(j)?;
        Ok(DivisorVector {
            b: (0..self.n())
                .map(|k| if k <= j0 { self.pair_alpha[k][j0] } else { 0 })
                .collect(),
        })
    }

    /// `[C_i] . T_j`: 0 for `i > j`, else `<beta_i^v, beta_j>`.
    pub fn c_dot_tangent(&self, i: usize, j: usize) -> Result<i64> {
        let (i0, j0) = (self.pos(i)?, self.pos(j)?);
        Ok(if i0 > j0 { 0 } else { self.pair_beta[i0][j0] })
    }

    /// `(<alpha_1^v, lambda>, ..., <alpha_n^v, lambda>)`.
    pub fn line_bundle_class(&self, lambda: &Weight) -> Result<DivisorVector> {
        Ok(DivisorVector {
            b: self
                .alpha
                .iter()
                .map(|a| self.rs.pairing(a, lambda))
                .collect::<Result<_>>()?,
        })
    }

    /// Positions `x` whose divisor `D_x` is contracted by the resolution,
    /// sorted.
    pub fn contracted_divisors(&self) -> &[usize] {
        &self.contracted
    }

    pub fn is_contracted(&self, x: usize) -> bool {
        self.contracted.binary_search(&x).is_ok()
    }

    /// `n` minus the number of contracted divisors.
    pub fn picard_rank_open_orbit(&self) -> usize {
        self.n() - self.contracted.len()
    }

    pub fn next_same_beta(&self, j: usize) -> Result<Option<usize>> {
        let j0 = self.pos(j)?;
        Ok((j0 + 1..self.n())
            .find(|&k| self.beta[k] == self.beta[j0])
            .map(|k| k + 1))
    }

    pub fn prev_same_beta(&self, j: usize) -> Result<Option<usize>> {
        let j0 = self.pos(j)?;
        Ok((0..j0)
            .rev()
            .find(|&k| self.beta[k] == self.beta[j0])
            .map(|k| k + 1))
    }

    /// `[C_j] - [C_{n(j)}]`, or `[C_j]` when no later position carries the
    /// same beta letter.
    pub fn tilde_curve(&self, j: usize) -> Result<CurveClass> {
        self.pos(j)?;
        let mut c = CurveClass::unit(self.n(), j);
        if let Some(k) = self.next_same_beta(j)? {
            c.a[k - 1] -= 1;
        }
        Ok(c)
    }

    /// `[C_i] + sum_{k > i} <alpha_i^v, alpha_k> [C_k]`, the class dual to
    /// `xi_i`.
    pub fn hat_curve(&self, i: usize) -> Result<CurveClass> {
        let i0 = self.pos(i)?;
        let n = self.n();
        let a: Vec<i64> = (0..n)
            .map(|k| match k.cmp(&i0) {
                std::cmp::Ordering::Less => 0,
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Greater => self.pair_alpha[i0][k],
            })
            .collect();
        let c = CurveClass { a };
        let b = self.xi_pairings(&c)?;
        for (j, &v) in b.b.iter().enumerate() {
            if v != i64::from(j == i0) {
                return Err(Error::invariant(format!(
                    "{}: hat curve {i} meets xi_{} with multiplicity {v}",
                    self.gamma,
                    j + 1
                )));
            }
        }
        Ok(c)
    }

    /// `[Gamma_{x,i}] = [C^_i] - [C^_x]` for a contracted `x` and an `i` with
    /// `<alpha_i^v, alpha_x> = 1`.
    pub fn gamma_curve(&self, x: usize, i: usize) -> Result<CurveClass> {
        let (x0, i0) = (self.pos(x)?, self.pos(i)?);
        if !self.is_contracted(x) {
            return Err(Error::NotContracted(x));
        }
        let value = self.pair_alpha[i0][x0];
        if value != 1 {
            return Err(Error::GammaPairing { x, i, value });
        }
        let c = self.hat_curve(i)?.sub(&self.hat_curve(x)?);
        let b = self.xi_pairings(&c)?;
        let expected: Vec<i64> = (0..self.n())
            .map(|j| i64::from(j == i0) - i64::from(j == x0))
            .collect();
        if b.b != expected {
            return Err(Error::invariant(format!(
                "{}: gamma curve ({x}, {i}) meets the xi with {:?}",
                self.gamma, b.b
            )));
        }
        let d = self.curve_degree(&c)?;
        if d != 0 {
            return Err(Error::invariant(format!(
                "{}: gamma curve ({x}, {i}) has degree {d}",
                self.gamma
            )));
        }
        Ok(c)
    }

    /// Degree of the image of a class in `X`: the sum of the coefficients at
    /// positions whose beta letter is the special root.
    pub fn curve_degree(&self, c: &CurveClass) -> Result<i64> {
        self.check_class(c.a.len())?;
        Ok(c.a
            .iter()
            .zip(&self.beta)
            .filter(|(_, &b)| b == self.special_root)
            .map(|(a, _)| a)
            .sum())
    }

    /// `c . xi_j` for all `j`.
    pub fn xi_pairings(&self, c: &CurveClass) -> Result<DivisorVector> {
        self.check_class(c.a.len())?;
        let n = self.n();
        Ok(DivisorVector {
            b: (0..n)
                .map(|j| (0..=j).map(|k| c.a[k] * self.c_dot_xi0(k, j)).sum())
                .collect(),
        })
    }

    /// `c . D` for a divisor written in the `xi` basis.
    pub fn curve_dot_divisor(&self, c: &CurveClass, d: &DivisorVector) -> Result<i64> {
        self.check_class(d.b.len())?;
        let b = self.xi_pairings(c)?;
        Ok(b.b.iter().zip(&d.b).map(|(x, y)| x * y).sum())
    }

    /// `c . T_j` through the closed formula for `[C_i] . T_j`.
    pub fn curve_dot_tangent(&self, c: &CurveClass, j: usize) -> Result<i64> {
        self.check_class(c.a.len())?;
        let mut total = 0;
        for (i, a) in c.a.iter().enumerate() {
            if *a != 0 {
                total += a * self.c_dot_tangent(i + 1, j)?;
            }
        }
        Ok(total)
    }

    /// Recovers the `C`-basis coefficients from intersection numbers against
    /// the `xi`, by back-substitution through the unitriangular matrix
    /// `M[k][j] = [C_k] . xi_j`.
    pub fn class_from_xi_pairings(&self, b: &DivisorVector) -> Result<CurveClass> {
        self.check_class(b.b.len())?;
        let n = self.n();
        let mut a = vec![0i64; n];
        for k in 0..n {
            let lower: i64 = (0..k).map(|j| a[j] * self.c_dot_xi0(j, k)).sum();
            a[k] = b.b[k] - lower;
        }
        Ok(CurveClass { a })
    }

    /// The serializable view used for JSON output.
    pub fn report(&self) -> Result<BottSamelsonReport> {
        let n = self.n();
        Ok(BottSamelsonReport {
            family: self.rs.family(),
            rank: self.rs.rank(),
            weight: self.weight_index,
            gamma: self.gamma.0.clone(),
            beta: self.beta.clone(),
            alpha: self.alpha.iter().map(|a| a.0.clone()).collect(),
            pair_alpha: self.pair_alpha.clone(),
            pair_beta: self.pair_beta.clone(),
            special_root: self.special_root,
            contracted: self.contracted.clone(),
            tangent: (1..=n)
                .map(|j| self.tangent_class(j).map(|t| t.b))
                .collect::<Result<_>>()?,
            hat: (1..=n)
                .map(|i| self.hat_curve(i).map(|c| c.a))
                .collect::<Result<_>>()?,
        })
    }
}

/// JSON shape of Bott-Samelson data. `tangent[j]` is `T_{j+1}` in the `xi`
/// basis and `hat[i]` is `C^_{i+1}` in the `C` basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottSamelsonReport {
    pub family: Family,
    pub rank: usize,
    pub weight: usize,
    pub gamma: Vec<usize>,
    pub beta: Vec<usize>,
    pub alpha: Vec<Vec<i64>>,
    pub pair_alpha: Vec<Vec<i64>>,
    pub pair_beta: Vec<Vec<i64>>,
    pub special_root: usize,
    pub contracted: Vec<usize>,
    pub tangent: Vec<Vec<i64>>,
    pub hat: Vec<Vec<i64>>,
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

    fn root(v: &[i64]) -> Root {
        Root(v.to_vec())
    }

    #[test]
    fn build_examples() {
        let a2 = rs(Family::A, 2);
        let bs = BottSamelsonData::build(&a2, 1, &w(&[2, 1])).unwrap();
        assert_eq!(bs.beta(), &[1, 2]);
        assert_eq!(bs.alpha(), &[root(&[1, 0]), root(&[1, 1])]);
        assert_eq!(bs.special_root(), 2);

        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        assert_eq!(bs.beta(), &[3, 1, 2]);
        assert_eq!(
            bs.alpha(),
            &[root(&[0, 0, 1]), root(&[1, 0, 0]), root(&[1, 1, 1])]
        );
        assert_eq!(bs.special_root(), 2);
        assert_eq!(
            bs.pair_alpha_table(),
            &[vec![2, 0, 1], vec![0, 2, 1], vec![1, 1, 2]]
        );

        let a1 = rs(Family::A, 1);
        let bs = BottSamelsonData::build(&a1, 1, &w(&[1])).unwrap();
        assert_eq!(bs.beta(), &[1]);
        assert_eq!(bs.alpha(), &[root(&[1])]);
    }

    #[test]
    fn build_rejects_bad_input() {
        let a3 = rs(Family::A, 3);
        assert_eq!(
            BottSamelsonData::build(&a3, 2, &w(&[2, 2])).unwrap_err(),
            Error::NotReduced {
                word: vec![2, 2],
                prefix_len: 2
            }
        );
        assert_eq!(
            BottSamelsonData::build(&a3, 2, &w(&[2, 1, 3])).unwrap_err(),
            Error::NotMinimal {
                word: vec![2, 1, 3],
                letter: 1
            }
        );
        assert!(matches!(
            BottSamelsonData::build(&rs(Family::E, 8), 8, &w(&[8])),
            Err(Error::NotMinuscule { index: 8, .. })
        ));
        assert!(matches!(
            BottSamelsonData::build(&a3, 2, &w(&[7])),
            Err(Error::SimpleIndexOutOfRange { index: 7, .. })
        ));
    }

    #[test]
    fn empty_word() {
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &Word::empty()).unwrap();
        assert_eq!(bs.n(), 0);
        assert!(bs.contracted_divisors().is_empty());
        assert!(matches!(
            bs.c_dot_xi(1, 1),
            Err(Error::PositionOutOfRange { index: 1, len: 0 })
        ));
        assert!(bs.tilde_curve(1).is_err());
        assert!(bs.hat_curve(1).is_err());
        assert_eq!(bs.curve_degree(&CurveClass::zero(0)).unwrap(), 0);
    }

    #[test]
    fn c_dot_xi_examples() {
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        for i in 1..=3 {
            assert_eq!(bs.c_dot_xi(i, i).unwrap(), 1);
        }
        assert_eq!(bs.c_dot_xi(1, 3).unwrap(), -1);
        assert_eq!(bs.c_dot_xi(1, 2).unwrap(), 0);
        assert_eq!(bs.c_dot_xi(3, 1).unwrap(), 0);
        assert!(bs.c_dot_xi(0, 1).is_err());
        assert!(bs.c_dot_xi(1, 4).is_err());
    }

    #[test]
    fn oracle_examples() {
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        assert_eq!(bs.chow_pairing_oracle(1, 3).unwrap(), -1);
        assert_eq!(bs.chow_pairing_oracle(2, 3).unwrap(), -1);
        assert_eq!(bs.chow_pairing_oracle(1, 2).unwrap(), -bs.pair_alpha(1, 2).unwrap());
        assert_eq!(
            bs.chow_pairing_oracle(3, 1).unwrap_err(),
            Error::ChainOrder { i: 3, j: 1 }
        );
        assert_eq!(
            bs.chow_pairing_oracle_bounded(1, 3, 1).unwrap_err(),
            Error::ChainWindowTooWide { window: 2, bound: 1 }
        );
    }

    #[test]
    fn tangent_examples() {
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        assert_eq!(bs.tangent_class(1).unwrap().b, vec![2, 0, 0]);
        assert_eq!(bs.tangent_class(3).unwrap().b, vec![1, 1, 2]);
        assert_eq!(bs.c_dot_tangent(1, 3).unwrap(), -1);
        assert_eq!(bs.c_dot_tangent(2, 2).unwrap(), 2);
        assert_eq!(bs.c_dot_tangent(3, 1).unwrap(), 0);
        let a2 = rs(Family::A, 2);
        let bs = BottSamelsonData::build(&a2, 1, &w(&[2, 1])).unwrap();
        assert_eq!(bs.tangent_class(2).unwrap().b, vec![1, 2]);
    }

    #[test]
    fn line_bundle_examples() {
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        assert_eq!(bs.line_bundle_class(&Weight::zero(3)).unwrap().b, vec![0; 3]);
        assert_eq!(
            bs.line_bundle_class(&a3.fundamental_weight(2)).unwrap().b,
            vec![0, 0, 1]
        );
        let a2 = rs(Family::A, 2);
        let bs = BottSamelsonData::build(&a2, 1, &w(&[2, 1])).unwrap();
        assert_eq!(
            bs.line_bundle_class(&a2.fundamental_weight(1)).unwrap().b,
            vec![1, 1]
        );
    }

    #[test]
    fn contracted_examples() {
        let a2 = rs(Family::A, 2);
        let bs = BottSamelsonData::build(&a2, 1, &w(&[2, 1])).unwrap();
        assert_eq!(bs.contracted_divisors(), &[2]);
        assert_eq!(bs.picard_rank_open_orbit(), 1);
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        assert_eq!(bs.contracted_divisors(), &[3]);
        assert_eq!(bs.picard_rank_open_orbit(), 2);
        let a1 = rs(Family::A, 1);
        let bs = BottSamelsonData::build(&a1, 1, &w(&[1])).unwrap();
        assert!(bs.contracted_divisors().is_empty());
        assert_eq!(bs.picard_rank_open_orbit(), 1);
    }

    #[test]
    fn same_beta_neighbours() {
        // in A3 / w_2 the word (2,1,3,2) has beta = (2,3,1,2)
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[2, 1, 3, 2])).unwrap();
        assert_eq!(bs.beta(), &[2, 3, 1, 2]);
        assert_eq!(bs.next_same_beta(1).unwrap(), Some(4));
        assert_eq!(bs.prev_same_beta(4).unwrap(), Some(1));
        assert_eq!(bs.next_same_beta(2).unwrap(), None);
        assert_eq!(bs.prev_same_beta(1).unwrap(), None);
        assert_eq!(bs.tilde_curve(1).unwrap().a, vec![1, 0, 0, -1]);
        assert_eq!(bs.tilde_curve(2).unwrap().a, vec![0, 1, 0, 0]);
        assert_eq!(bs.tilde_curve(4).unwrap().a, vec![0, 0, 0, 1]);
        assert_eq!(bs.curve_degree(&bs.tilde_curve(1).unwrap()).unwrap(), 0);

        let a2 = rs(Family::A, 2);
        let bs = BottSamelsonData::build(&a2, 1, &w(&[2, 1])).unwrap();
        assert_eq!(bs.next_same_beta(1).unwrap(), None);
        assert!(bs.next_same_beta(3).is_err());
    }

    #[test]
    fn hat_and_gamma_examples() {
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        assert_eq!(bs.hat_curve(1).unwrap().a, vec![1, 0, 1]);
        assert_eq!(bs.hat_curve(3).unwrap().a, vec![0, 0, 1]);
        assert_eq!(bs.gamma_curve(3, 1).unwrap().a, vec![1, 0, 0]);
        assert_eq!(bs.gamma_curve(3, 2).unwrap().a, vec![0, 1, 0]);
        assert_eq!(bs.xi_pairings(&bs.gamma_curve(3, 1).unwrap()).unwrap().b[2], -1);
        assert_eq!(bs.gamma_curve(2, 1).unwrap_err(), Error::NotContracted(2));
        assert_eq!(
            bs.gamma_curve(3, 3).unwrap_err(),
            Error::GammaPairing { x: 3, i: 3, value: 2 }
        );

        let a2 = rs(Family::A, 2);
        let bs = BottSamelsonData::build(&a2, 1, &w(&[2, 1])).unwrap();
        assert_eq!(bs.hat_curve(1).unwrap().a, vec![1, 1]);
        assert_eq!(bs.gamma_curve(2, 1).unwrap().a, vec![1, 0]);
    }

    #[test]
    fn degree_examples() {
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        assert_eq!(bs.curve_degree(&CurveClass::unit(3, 3)).unwrap(), 1);
        assert_eq!(bs.curve_degree(&CurveClass::unit(3, 1)).unwrap(), 0);
        assert!(matches!(
            bs.curve_degree(&CurveClass::zero(2)),
            Err(Error::ClassLength { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn report_shape() {
        let a3 = rs(Family::A, 3);
        let bs = BottSamelsonData::build(&a3, 2, &w(&[1, 3, 2])).unwrap();
        let json = serde_json::to_value(bs.report().unwrap()).unwrap();
        assert_eq!(json["family"], "A");
        assert_eq!(json["beta"], serde_json::json!([3, 1, 2]));
        assert_eq!(json["contracted"], serde_json::json!([3]));
        assert_eq!(json["alpha"][2], serde_json::json!([1, 1, 1]));
        assert_eq!(json["hat"][0], serde_json::json!([1, 0, 1]));
    }

    fn a4_words() -> Vec<(usize, Word)> {
        let a4 = rs(Family::A, 4);
        (1..=4)
            .flat_map(|k| {
                weyl::enumerate_minuscule_cosets(&a4, k, 100)
                    .unwrap()
                    .into_iter()
                    .map(move |w| (k, w))
            })
            .collect()
    }

    proptest! {
        #[test]
        fn xi_round_trip(idx in 0usize..30, seed in proptest::collection::vec(-5i64..=5, 6)) {
            let a4 = rs(Family::A, 4);
            let words = a4_words();
            let (k, word) = &words[idx % words.len()];
            let bs = BottSamelsonData::build(&a4, *k, word).unwrap();
            let a: Vec<i64> = seed.into_iter().take(bs.n()).collect();
            prop_assume!(a.len() == bs.n());
            let c = CurveClass { a };
            let b = bs.xi_pairings(&c).unwrap();
            prop_assert_eq!(bs.class_from_xi_pairings(&b).unwrap(), c.clone());
            let db = DivisorVector { b: b.b.clone() };
            prop_assert_eq!(bs.xi_pairings(&bs.class_from_xi_pairings(&db).unwrap()).unwrap(), db);
        }
    }
}
