//! Finite root systems with exact integer arithmetic.
//!
//! Roots live in the simple-root basis and weights in the fundamental-weight
//! basis. Simple indices follow Bourbaki numbering and are 1-based wherever
//! they appear in a public signature; coefficient vectors and the Cartan
//! matrix are plain 0-based arrays.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

/// A vector in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Coefficientwise comparison `self >= other`.
    pub fn dominates(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl std::ops::Neg for Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root(self.0.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0, "a")
    }
}

impl Weight {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0, "w")
    }
}

fn write_combination(f: &mut fmt::Formatter<'_>, coeffs: &[i64], symbol: &str) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if first { "" } else { "+" };
        let mag = c.unsigned_abs();
        if mag == 1 {
            write!(f, "{sign}{symbol}{}", i + 1)?;
        } else {
            write!(f, "{sign}{mag}{symbol}{}", i + 1)?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Vectors the Weyl group acts on: roots and weights.
pub trait LatticeVector: Clone + PartialEq + fmt::Debug {
    fn coeffs(&self) -> &[i64];

    /// `<alpha_i^v, self>` for the 0-based simple index `i`.
    fn simple_pairing(&self, rs: &RootSystem, i: usize) -> i64;

    /// `self - times * alpha_i`, expressed in this vector's own basis.
    fn sub_simple(&mut self, rs: &RootSystem, i: usize, times: i64);

    /// The invariant form `(x, self)` for a root `x`, with short roots of
    /// squared length 2.
    fn form_with_root(&self, rs: &RootSystem, x: &Root) -> i64;

    /// `self - times * x` for a root `x`.
    fn sub_root(&mut self, rs: &RootSystem, x: &Root, times: i64);
}

impl LatticeVector for Root {
    fn coeffs(&self) -> &[i64] {
        &self.0
    }

    fn simple_pairing(&self, rs: &RootSystem, i: usize) -> i64 {
        rs.cartan[i].iter().zip(&self.0).map(|(a, y)| a * y).sum()
    }

    fn sub_simple(&mut self, _rs: &RootSystem, i: usize, times: i64) {
        self.0[i] -= times;
    }

    fn form_with_root(&self, rs: &RootSystem, x: &Root) -> i64 {
        rs.inner(x, self)
    }

    fn sub_root(&mut self, _rs: &RootSystem, x: &Root, times: i64) {
        for (y, c) in self.0.iter_mut().zip(&x.0) {
            *y -= times * c;
        }
    }
}

impl LatticeVector for Weight {
    fn coeffs(&self) -> &[i64] {
        &self.0
    }

    fn simple_pairing(&self, _rs: &RootSystem, i: usize) -> i64 {
        self.0[i]
    }

    fn sub_simple(&mut self, rs: &RootSystem, i: usize, times: i64) {
        // alpha_i in the weight basis is column i of the Cartan matrix.
        for (j, y) in self.0.iter_mut().enumerate() {
            *y -= times * rs.cartan[j][i];
        }
    }

    fn form_with_root(&self, rs: &RootSystem, x: &Root) -> i64 {
        // (alpha_i, w_j) = d_i * delta_ij
        x.0.iter()
            .zip(&rs.symmetrizer)
            .zip(&self.0)
            .map(|((c, d), y)| c * d * y)
            .sum()
    }

    fn sub_root(&mut self, rs: &RootSystem, x: &Root, times: i64) {
        let w = rs.root_to_weight(x);
        for (y, c) in self.0.iter_mut().zip(&w.0) {
            *y -= times * c;
        }
    }
}

/// Minuscule / cominuscule flags of one fundamental weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightClass {
    pub weight: usize,
    pub minuscule: bool,
    pub cominuscule: bool,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2`, so short roots get 1.
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    highest_root: Root,
    index: HashMap<Vec<i64>, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

fn check_type(family: Family, rank: usize) -> Result<()> {
    let reason = match family {
        Family::A if rank < 1 => Some("type A needs rank >= 1"),
        Family::B if rank < 2 => Some("type B needs rank >= 2"),
        Family::C if rank < 3 => Some("type C needs rank >= 3 (C2 is B2)"),
        Family::D if rank < 4 => Some("type D needs rank >= 4"),
        Family::E if !(6..=8).contains(&rank) => Some("type E exists only in ranks 6, 7, 8"),
        Family::F if rank != 4 => Some("type F exists only in rank 4"),
        Family::G if rank != 2 => Some("type G exists only in rank 2"),
        _ => None,
    };
    match reason {
        Some(r) => Err(Error::InvalidType {
            family,
            rank,
            reason: r.to_string(),
        }),
        None => Ok(()),
    }
}

/// Bourbaki Cartan matrix, `entry[i][j] = <alpha_i^v, alpha_j>`.
fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            for i in 3..n {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Family::G => link(1, 2),
    }
    match family {
        // alpha_n short
        Family::B => a[n - 1][n - 2] = -2,
        // alpha_n long
        Family::C => a[n - 2][n - 1] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        Family::F => a[2][1] = -2,
        // alpha_1 short, alpha_2 long
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Solves `d_i a_ij = d_j a_ji` over a connected diagram, normalized to
/// `min d = 1`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d = vec![0i64; n];
    d[0] = 6;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j] == 0 {
                let num = d[i] * cartan[i][j];
                assert_eq!(num % cartan[j][i], 0, "non-integral symmetrizer");
                d[j] = num / cartan[j][i];
                queue.push_back(j);
            }
        }
    }
    let g = d.iter().fold(0, |g, &x| gcd(g, x));
    d.iter().map(|x| x / g).collect()
}

impl RootSystem {
    /// Builds the root system of the given finite type. Positive roots are
    /// the closure of the simple roots under simple reflections.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        check_type(family, rank)?;
        let cartan = cartan_matrix(family, rank);
        let symmetrizer = symmetrizer(&cartan);
        let mut rs = RootSystem {
            family,
            rank,
            cartan,
            symmetrizer,
            positive_roots: Vec::new(),
            highest_root: Root(vec![0; rank]),
            index: HashMap::new(),
        };

        let mut queue: VecDeque<Root> = (1..=rank).map(|i| rs.simple_root(i)).collect();
        let mut roots = Vec::new();
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        for r in &queue {
            seen.insert(r.0.clone(), 0);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..rank {
                let p = r.simple_pairing(&rs, i);
                if p == 0 {
                    continue;
                }
                let mut s = r.clone();
                s.sub_simple(&rs, i, p);
                if s.is_positive() && !seen.contains_key(&s.0) {
                    seen.insert(s.0.clone(), 0);
                    queue.push_back(s);
                }
            }
            roots.push(r);
        }
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        rs.index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k))
            .collect();
        let highest = roots
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .expect("nonempty root system");
        if !roots.iter().all(|r| highest.dominates(r)) {
            return Err(Error::invariant(format!(
                "{family}{rank}: root of maximal height {highest} does not dominate all roots"
            )));
        }
        rs.highest_root = highest;
        rs.positive_roots = roots;
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Half squared lengths of the simple roots.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn is_simply_laced(&self) -> bool {
        self.symmetrizer.iter().all(|&d| d == 1)
    }

    /// Positive roots sorted by height.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn positive_root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.0).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        if r.0.len() != self.rank {
            return false;
        }
        self.index.contains_key(&r.0) || self.index.contains_key(&(-r.clone()).0)
    }

    pub(crate) fn check_simple(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank {
            Err(Error::SimpleIndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(i - 1)
        }
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank {
            Err(Error::RankMismatch {
                rank: self.rank,
                got: v.len(),
            })
        } else {
            Ok(())
        }
    }

    /// The simple root `alpha_i` (1-based).
    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank];
        v[i - 1] = 1;
        Root(v)
    }

    /// The fundamental weight `w_i` (1-based).
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn root_to_weight(&self, r: &Root) -> Weight {
        Weight(
            (0..self.rank)
                .map(|j| r.simple_pairing(self, j))
                .collect(),
        )
    }

    /// The invariant symmetric form on the root lattice.
    pub fn inner(&self, x: &Root, y: &Root) -> i64 {
        let mut total = 0;
        for i in 0..self.rank {
            if x.0[i] == 0 {
                continue;
            }
            let row: i64 = self.cartan[i].iter().zip(&y.0).map(|(a, b)| a * b).sum();
            total += x.0[i] * self.symmetrizer[i] * row;
        }
        total
    }

    /// `<x^v, y>` with `x^v = 2x / (x, x)`.
    pub fn pairing<V: LatticeVector>(&self, x: &Root, y: &V) -> Result<i64> {
        self.check_len(&x.0)?;
        self.check_len(y.coeffs())?;
        if x.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let norm = self.inner(x, x);
        let num = 2 * y.form_with_root(self, x);
        if num % norm != 0 {
            return Err(Error::NotARoot(x.0.clone()));
        }
        Ok(num / norm)
    }

    /// Simple reflection `s_i(y) = y - <alpha_i^v, y> alpha_i` (1-based `i`).
    pub fn reflect<V: LatticeVector>(&self, i: usize, y: &V) -> Result<V> {
        let i = self.check_simple(i)?;
        self.check_len(y.coeffs())?;
        Ok(self.reflect0(i, y))
    }

    /// Unchecked simple reflection with a 0-based index.
    pub(crate) fn reflect0<V: LatticeVector>(&self, i: usize, y: &V) -> V {
        let p = y.simple_pairing(self, i);
        let mut out = y.clone();
        if p != 0 {
            out.sub_simple(self, i, p);
        }
        out
    }

    /// Reflection in an arbitrary root, `s_x(y) = y - <x^v, y> x`.
    pub fn reflect_by<V: LatticeVector>(&self, x: &Root, y: &V) -> Result<V> {
        let p = self.pairing(x, y)?;
        let mut out = y.clone();
        out.sub_root(self, x, p);
        Ok(out)
    }

    pub fn is_minuscule(&self, k: usize) -> bool {
        let w = self.fundamental_weight(k);
        self.positive_roots
            .iter()
            .all(|r| self.pairing(r, &w).map(|p| p <= 1).unwrap_or(false))
    }

    /// Cominuscule means the highest root has coefficient 1 on `alpha_k`.
    pub fn is_cominuscule(&self, k: usize) -> bool {
        self.highest_root.0[k - 1] == 1
    }

    /// Minuscule and cominuscule flags for every fundamental weight.
    pub fn classify_minuscule(&self) -> Vec<WeightClass> {
        (1..=self.rank)
            .map(|k| WeightClass {
                weight: k,
                minuscule: self.is_minuscule(k),
                cominuscule: self.is_cominuscule(k),
            })
            .collect()
    }

    pub fn minuscule_weights(&self) -> Vec<usize> {
        (1..=self.rank).filter(|&k| self.is_minuscule(k)).collect()
    }
}
