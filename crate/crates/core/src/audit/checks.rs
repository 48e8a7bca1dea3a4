//! The individual checks of each suite, and their predicted counts.

use std::collections::HashSet;

use super::{AuditScope, Case, Counterexample, GrassCase, Suite, MAX_COUNTEREXAMPLES};
use crate::bott_samelson::{alpha_sequence, BottSamelsonData, CurveClass, DivisorVector};
use crate::components::{self, multiset_count};
use crate::error::Result;
use crate::root_system::Root;
use crate::weyl::{self, ParabolicSpec};

#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub checks: u64,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl Tally {
    pub fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
    }
}

/// Records checks against one Bott-Samelson data set.
struct Recorder<'c, 'a> {
    bs: &'c BottSamelsonData<'a>,
    tally: Tally,
}

impl<'c, 'a> Recorder<'c, 'a> {
    fn new(bs: &'c BottSamelsonData<'a>) -> Self {
        Recorder {
            bs,
            tally: Tally::default(),
        }
    }

    fn check(
        &mut self,
        ok: bool,
        check: &str,
        indices: &[usize],
        observed: impl FnOnce() -> String,
        expected: impl FnOnce() -> String,
    ) {
        self.tally.checks += 1;
        if ok {
            return;
        }
        self.tally.failures += 1;
        if self.tally.counterexamples.len() < MAX_COUNTEREXAMPLES {
            let rs = self.bs.root_system();
            self.tally.counterexamples.push(Counterexample {
                check: check.to_string(),
                family: rs.family(),
                rank: rs.rank(),
                weight: self.bs.weight_index(),
                word: self.bs.gamma().0.clone(),
                indices: indices.to_vec(),
                observed: observed(),
                expected: expected(),
            });
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        observed: T,
        expected: T,
        check: &str,
        indices: &[usize],
    ) {
        let ok = observed == expected;
        self.check(
            ok,
            check,
            indices,
            || format!("{observed:?}"),
            || format!("{expected:?}"),
        );
    }
}

/// Number of checks a suite runs on one word.
pub(crate) fn predicted(suite: Suite, bs: &BottSamelsonData, scope: &AuditScope) -> u64 {
    let n = bs.n() as u64;
    let contracted = bs.contracted_divisors().len() as u64;
    match suite {
        Suite::Positivity | Suite::Bounds | Suite::Reversal | Suite::TangentNonneg => n * n,
        Suite::ChowOracle => {
            let w = (scope.chain_window as u64).min(n.saturating_sub(1));
            (1..=w).map(|g| n - g).sum()
        }
        Suite::Pgqb | Suite::Rectif => n,
        Suite::Fin => bs
            .beta()
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == bs.special_root())
            .map(|(j, _)| j as u64)
            .sum(),
        Suite::Pgqmoins1 => n * n * n,
        Suite::Contracted => 2 * n,
        Suite::HatDuality => 2 * n * n + contracted + n,
        Suite::Swap => n.saturating_sub(1) + scope.max_degree + 1,
        Suite::LastLetter => n.min(1),
        Suite::GrassmannianCount | Suite::HolePic => 0,
    }
}

pub(crate) fn predicted_grass(suite: Suite, _g: &GrassCase, scope: &AuditScope) -> u64 {
    match suite {
        Suite::GrassmannianCount => scope.max_degree + 1,
        Suite::HolePic => 1,
        _ => 0,
    }
}

pub(crate) fn run_case(suite: Suite, case: &Case, scope: &AuditScope) -> Result<Tally> {
    let bs = &case.bs;
    let mut r = Recorder::new(bs);
    match suite {
        Suite::Positivity => positivity(&mut r),
        Suite::Bounds => bounds(&mut r),
        Suite::ChowOracle => chow_oracle(&mut r, scope.chain_window)?,
        Suite::Reversal => reversal(&mut r)?,
        Suite::Pgqb => pgqb(&mut r),
        Suite::Fin => fin(&mut r)?,
        Suite::Rectif => rectif(&mut r),
        Suite::Pgqmoins1 => pgqmoins1(&mut r)?,
        Suite::Contracted => contracted(&mut r)?,
        Suite::HatDuality => hat_duality(&mut r)?,
        Suite::TangentNonneg => tangent_nonneg(&mut r)?,
        Suite::Swap => swap(&mut r, &case.canonical_counts, scope)?,
        Suite::LastLetter => last_letter(&mut r),
        Suite::GrassmannianCount | Suite::HolePic => {}
    }
    Ok(r.tally)
}

pub(crate) fn run_grass(suite: Suite, g: &GrassCase, scope: &AuditScope) -> Result<Tally> {
    let mut r = Recorder::new(&g.bs);
    let holes = components::partition_hole_count(&g.partition);
    let parts = g.partition.parts();
    match suite {
        Suite::GrassmannianCount => {
            for d in 0..=scope.max_degree {
                let count = components::component_count(&g.bs, d)?;
                let listed = components::ne_set(&g.bs, d)?.count;
                let expected = multiset_count(holes as u64, d);
                r.check(
                    count == expected && listed == expected,
                    "count",
                    &[d as usize],
                    || format!("{parts:?}: count {count}, listed {listed}"),
                    || expected.to_string(),
                );
            }
        }
        Suite::HolePic => {
            r.check_eq(
                components::picard_rank_open_orbit(&g.bs),
                holes,
                "holes",
                parts,
            );
        }
        _ => {}
    }
    Ok(r.tally)
}

fn positivity(r: &mut Recorder) {
    let n = r.bs.n();
    for i in 0..n {
        for j in 0..n {
            let p = r.bs.pair_alpha_table()[i][j];
            r.check(p >= 0, "nonnegative", &[i + 1, j + 1], || p.to_string(), || ">= 0".into());
        }
    }
}

fn bounds(r: &mut Recorder) {
    let n = r.bs.n();
    for i in 0..n {
        for j in 0..n {
            let p = r.bs.pair_alpha_table()[i][j];
            let equal = r.bs.alpha()[i] == r.bs.alpha()[j];
            let ok = p <= 2 && ((p == 2) == equal);
            r.check(
                ok,
                "at most 2",
                &[i + 1, j + 1],
                || format!("{p} (equal roots: {equal})"),
                || "<= 2, and 2 exactly for equal roots".into(),
            );
        }
    }
}

fn chow_oracle(r: &mut Recorder, window: usize) -> Result<()> {
    let n = r.bs.n();
    for i in 1..=n {
        for j in i + 1..=(i + window).min(n) {
            let oracle = r.bs.chow_pairing_oracle_bounded(i, j, window)?;
            let closed = r.bs.c_dot_xi(i, j)?;
            let beta = r.bs.pair_beta(i, j)?;
            r.check(
                oracle == beta && closed == beta,
                "oracle",
                &[i, j],
                || format!("oracle {oracle}, closed form {closed}"),
                || beta.to_string(),
            );
        }
    }
    Ok(())
}

fn reversal(r: &mut Recorder) -> Result<()> {
    let bs = r.bs;
    let rs = bs.root_system();
    let n = bs.n();
    let rev: Vec<usize> = bs.beta().iter().rev().copied().collect();
    let tilde = alpha_sequence(rs, &rev);
    for i in 0..n {
        for j in 0..n {
            let t = rs.pairing(&tilde[n - 1 - i], &tilde[n - 1 - j])?;
            r.check_eq(bs.pair_alpha_table()[i][j], t, "reversed", &[i + 1, j + 1]);
        }
    }
    Ok(())
}

fn pgqb(r: &mut Recorder) {
    let bs = r.bs;
    let rs = bs.root_system();
    let rev: Vec<usize> = bs.beta().iter().rev().copied().collect();
    let tilde = alpha_sequence(rs, &rev);
    let b = bs.special_root() - 1;
    for (i, t) in tilde.iter().enumerate() {
        let ok = t.coeffs().iter().all(|&c| c >= 0) && t.0[b] == 1;
        r.check(
            ok,
            "contains special root once",
            &[i + 1],
            || t.to_string(),
            || format!("a nonnegative root with coefficient 1 on a{}", b + 1),
        );
    }
}

/// True if some chain `i = k_0 < k_1 < ... < k_m = j` has consecutive beta
/// letters that do not commute, i.e. `s_{beta_i}` cannot be moved next to
/// `s_{beta_j}` by commutations alone (0-based positions, `i <= j`).
fn linked(bs: &BottSamelsonData, i: usize, j: usize) -> bool {
    let pb = bs.pair_beta_table();
    let mut reach = vec![false; j + 1];
    reach[i] = true;
    for k in i + 1..=j {
        reach[k] = (i..k).any(|l| reach[l] && pb[l][k] != 0);
    }
    reach[j]
}

/// The value of `<alpha_i^v, alpha_j>` predicted from the beta sequence
/// when `beta_j` is the special root and `i < j` (0-based positions): 0 if
/// the two letters can be exchanged modulo commutation, otherwise 0 if
/// `i <= p(j)` and the letters at `i` and `p(j)` cannot, and 1 in the
/// remaining cases.
fn fin_expected(bs: &BottSamelsonData, i: usize, j: usize) -> Result<i64> {
    if !linked(bs, i, j) {
        return Ok(0);
    }
    let p = bs.prev_same_beta(j + 1)?.map(|p| p - 1);
    Ok(match p {
        Some(p) if i <= p && linked(bs, i, p) => 0,
        _ => 1,
    })
}

fn fin(r: &mut Recorder) -> Result<()> {
    let bs = r.bs;
    for j in 0..bs.n() {
        if bs.beta()[j] != bs.special_root() {
            continue;
        }
        for i in 0..j {
            let expected = fin_expected(bs, i, j)?;
            r.check_eq(bs.pair_alpha_table()[i][j], expected, "case analysis", &[i + 1, j + 1]);
        }
    }
    Ok(())
}

fn rectif(r: &mut Recorder) {
    let bs = r.bs;
    let n = bs.n();
    let special = bs.special_root();
    for i in 0..n {
        let sum: i64 = (i + 1..n)
            .filter(|&k| bs.beta()[k] == special)
            .map(|k| bs.pair_alpha_table()[i][k])
            .sum();
        let expected = i64::from(bs.beta()[i] != special);
        r.check_eq(sum, expected, "sum over special positions", &[i + 1]);
    }
}

fn pgqmoins1(r: &mut Recorder) -> Result<()> {
    let bs = r.bs;
    let rs = bs.root_system();
    let n = bs.n();
    for i in 0..n {
        for x in 0..n {
            let active = bs.pair_alpha_table()[i][x] == 1;
            for j in 0..n {
                let value = if active {
                    let reflected: Root = rs.reflect_by(&bs.alpha()[x], &bs.alpha()[j])?;
                    rs.pairing(&bs.alpha()[i], &reflected)?
                } else {
                    0
                };
                r.check(
                    value >= -1,
                    "reflected pairing",
                    &[i + 1, x + 1, j + 1],
                    || value.to_string(),
                    || ">= -1".into(),
                );
            }
        }
    }
    Ok(())
}

fn contracted(r: &mut Recorder) -> Result<()> {
    let bs = r.bs;
    let n = bs.n();
    if n == 0 {
        return Ok(());
    }
    for &x in bs.contracted_divisors() {
        let mut found = false;
        for i in 1..x {
            if bs.c_dot_xi(i, x)? == -1 {
                found = true;
                break;
            }
        }
        r.check(found, "some earlier C_i meets it with -1", &[x], || "none".into(), || "some i < x".into());
    }
    for x in 0..n - 1 {
        let found = (x + 1..n).any(|j| bs.pair_alpha_table()[x][j] == 1);
        r.check(found, "some later pairing is 1", &[x + 1], || "none".into(), || "some j > x".into());
    }

    // Each divisor that survives maps onto the Schubert divisor s_b X for a
    // left descent b, and distinct divisors give distinct Schubert divisors.
    let rs = bs.root_system();
    let k = bs.weight_index();
    let p = ParabolicSpec::maximal(rs, k)?;
    let g = weyl::element(rs, bs.gamma())?;
    let wk = rs.fundamental_weight(k);
    let top = weyl::act_on(rs, bs.gamma(), &wk)?;
    let descents: Vec<usize> = (1..=rs.rank()).filter(|&b| g.is_left_descent(b - 1)).collect();
    let mut images = HashSet::new();
    for x in 1..=n {
        if bs.is_contracted(x) {
            continue;
        }
        let sub = bs.gamma().without(x);
        let image = weyl::act_on(rs, &sub, &wk)?;
        let hit = descents
            .iter()
            .copied()
            .find(|&b| rs.reflect(b, &top).map(|v| v == image).unwrap_or(false));
        let len = weyl::coset_length(rs, &sub, &p)?;
        r.check(
            hit.is_some() && len == n - 1,
            "moving divisor",
            &[x],
            || format!("coset of length {len} with image {image}"),
            || format!("s_b applied to {top} for a left descent b in {descents:?}"),
        );
        if let Some(b) = hit {
            images.insert(b);
        }
    }
    let survivors = n - bs.contracted_divisors().len();
    r.check(
        images.len() == survivors && images.len() == descents.len(),
        "bijection onto Schubert divisors",
        &[],
        || format!("{} divisors hit {} of {} descents", survivors, images.len(), descents.len()),
        || "a bijection".into(),
    );
    Ok(())
}

fn hat_class(bs: &BottSamelsonData, i: usize) -> CurveClass {
    let a = (0..bs.n())
        .map(|k| {
            if k < i {
                0
            } else if k == i {
                1
            } else {
                bs.pair_alpha_table()[i][k]
            }
        })
        .collect();
    CurveClass { a }
}

fn hat_duality(r: &mut Recorder) -> Result<()> {
    let bs = r.bs;
    let n = bs.n();
    let hats: Vec<CurveClass> = (0..n).map(|i| hat_class(bs, i)).collect();
    for (i, hat) in hats.iter().enumerate() {
        let b = bs.xi_pairings(hat)?;
        for (j, &v) in b.b.iter().enumerate() {
            r.check_eq(v, i64::from(i == j), "dual to xi", &[i + 1, j + 1]);
        }
    }
    for (i, hat) in hats.iter().enumerate() {
        for j in 1..=n {
            let via_formula = bs.curve_dot_tangent(hat, j)?;
            let direct = bs.tangent_class(j)?.b[i];
            r.check_eq(via_formula, direct, "meets T_j", &[i + 1, j]);
        }
    }
    for &x in bs.contracted_divisors() {
        let partners: Vec<usize> = (0..n).filter(|&i| bs.pair_alpha_table()[i][x - 1] == 1).collect();
        let mut bad = Vec::new();
        for &i in &partners {
            let gamma = hats[i].sub(&hats[x - 1]);
            let b = bs.xi_pairings(&gamma)?;
            let expected: Vec<i64> = (0..n)
                .map(|j| i64::from(j == i) - i64::from(j == x - 1))
                .collect();
            let degree = bs.curve_degree(&gamma)?;
            if b.b != expected || degree != 0 {
                bad.push((i + 1, b.b, degree));
            }
        }
        r.check(
            !partners.is_empty() && bad.is_empty(),
            "gamma curves",
            &[x],
            || format!("partners {:?}, failing {bad:?}", partners.iter().map(|i| i + 1).collect::<Vec<_>>()),
            || "some partner; each meets xi in e_i - e_x with degree 0".into(),
        );
    }
    for j in 1..=n {
        let degree = bs.curve_degree(&bs.tilde_curve(j)?)?;
        r.check_eq(degree, i64::from(j == n), "tilde degree", &[j]);
    }
    Ok(())
}

fn tangent_nonneg(r: &mut Recorder) -> Result<()> {
    let bs = r.bs;
    let n = bs.n();
    for m in 0..n {
        let hat = hat_class(bs, m);
        let xi = bs.xi_pairings(&hat)?;
        for k in 1..=n {
            let t = bs.curve_dot_tangent(&hat, k)?;
            let via_vector = bs.curve_dot_divisor(&hat, &bs.tangent_class(k)?)?;
            let diff = t - xi.b[k - 1];
            r.check(
                t >= 0 && diff >= 0 && t == via_vector,
                "nef curve against T_k",
                &[m + 1, k],
                || format!("C.T = {t} (from the xi expansion {via_vector}), C.(T - xi) = {diff}"),
                || "both nonnegative and the two routes equal".into(),
            );
        }
    }
    Ok(())
}

fn swap(r: &mut Recorder, canonical_counts: &[u64], scope: &AuditScope) -> Result<()> {
    let bs = r.bs;
    let n = bs.n();
    for i in 1..n {
        if bs.pair_beta(i, i + 1)? != 0 {
            r.check(true, "transposed data", &[i], String::new, String::new);
            continue;
        }
        let swapped_word = bs.gamma().swapped(i);
        let other =
            BottSamelsonData::build_unverified(bs.root_system(), bs.weight_index(), &swapped_word)?;
        let tau = |x: usize| {
            if x == i {
                i + 1
            } else if x == i + 1 {
                i
            } else {
                x
            }
        };
        let ok = (1..=n).all(|x| {
            other.beta()[x - 1] == bs.beta()[tau(x) - 1]
                && other.alpha()[x - 1] == bs.alpha()[tau(x) - 1]
                && (1..=n).all(|y| {
                    other.pair_alpha_table()[x - 1][y - 1] == bs.pair_alpha_table()[tau(x) - 1][tau(y) - 1]
                        && other.pair_beta_table()[x - 1][y - 1]
                            == bs.pair_beta_table()[tau(x) - 1][tau(y) - 1]
                })
        }) && other.special_root() == bs.special_root()
            && {
                let mut moved: Vec<usize> = bs.contracted_divisors().iter().map(|&x| tau(x)).collect();
                moved.sort_unstable();
                moved == other.contracted_divisors()
            };
        r.check(
            ok,
            "transposed data",
            &[i],
            || format!("swapped word {swapped_word} gives beta {:?}, contracted {:?}", other.beta(), other.contracted_divisors()),
            || format!("beta {:?}, contracted {:?} with {i} and {} exchanged", bs.beta(), bs.contracted_divisors(), i + 1),
        );
    }
    for d in 0..=scope.max_degree {
        let count = components::component_count(bs, d)?;
        let expected = canonical_counts.get(d as usize).copied();
        r.check(
            Some(count) == expected,
            "count matches canonical word",
            &[d as usize],
            || count.to_string(),
            || format!("{expected:?}"),
        );
    }
    Ok(())
}

fn last_letter(r: &mut Recorder) {
    let bs = r.bs;
    if let Some(&last) = bs.beta().last() {
        r.check_eq(last, bs.special_root(), "last beta letter", &[bs.n()]);
    }
}

/// Whether `C_j . L(lambda)` equals the degree of `C_j` for every `j`, for
/// `lambda = w_k` and for `lambda = i(w_k)`.
pub(crate) fn line_bundle_agreement(bs: &BottSamelsonData) -> Result<(bool, bool)> {
    let rs = bs.root_system();
    let n = bs.n();
    let agrees = |l: &DivisorVector| -> Result<bool> {
        for j in 1..=n {
            let c = CurveClass::unit(n, j);
            if bs.curve_dot_divisor(&c, l)? != bs.curve_degree(&c)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let w = bs.line_bundle_class(&rs.fundamental_weight(bs.weight_index()))?;
    let dual = bs.line_bundle_class(&rs.fundamental_weight(bs.special_root()))?;
    Ok((agrees(&w)?, agrees(&dual)?))
}
