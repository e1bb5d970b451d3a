//! Root systems of rank at most two, their Weyl groups, and divided
//! difference operators on the cohomology of `G/B`.
//!
//! Coordinates are in the fundamental-weight basis: the variable `x_i` is
//! `c1` of the line bundle attached to `omega_i`, and the simple root
//! `alpha_j` is the linear form `sum_i C[i][j] x_i`. Simple-root and
//! parabolic indices are 1-based throughout the public interface.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::chern::{whitney_quotient, ChernSeries, Generator, IntersectionModel};
use crate::error::{Error, Result};
use crate::exact::{rat, to_i64, MultiPoly, Rational};

/// A polynomial in `x_1..x_r` representing a class on `G/B`.
pub type BorelClass = MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootType {
    A1,
    A1xA1,
    A2,
    B2,
    G2,
}

impl RootType {
    pub const ALL: [RootType; 5] = [RootType::A1, RootType::A1xA1, RootType::A2, RootType::B2, RootType::G2];

    pub fn cartan(self) -> Vec<Vec<i64>> {
        match self {
            RootType::A1 => vec![vec![2]],
            RootType::A1xA1 => vec![vec![2, 0], vec![0, 2]],
            RootType::A2 => vec![vec![2, -1], vec![-1, 2]],
            RootType::B2 => vec![vec![2, -2], vec![-1, 2]],
            RootType::G2 => vec![vec![2, -3], vec![-1, 2]],
        }
    }

    fn expected_positive_roots(self) -> usize {
        match self {
            RootType::A1 => 1,
            RootType::A1xA1 => 2,
            RootType::A2 => 3,
            RootType::B2 => 4,
            RootType::G2 => 6,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A1 => "A1",
            RootType::A1xA1 => "A1xA1",
            RootType::A2 => "A2",
            RootType::B2 => "B2",
            RootType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RootType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::precondition(format!("unknown root system {s:?} (expected A1, A1xA1, A2, B2, G2)")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    kind: RootType,
    cartan: Vec<Vec<i64>>,
    /// Positive roots in weight coordinates, simple roots first.
    positive_roots: Vec<Vec<i64>>,
    /// The same roots in simple-root coordinates.
    positive_roots_simple: Vec<Vec<i64>>,
}

type WMatrix = Vec<Vec<i64>>;

/// Finite Weyl group stored by exhaustive enumeration.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    /// `(shortest word, matrix acting on weight coordinates)`, in BFS order.
    elements: Vec<(Vec<usize>, WMatrix)>,
    lengths: HashMap<WMatrix, usize>,
}

/// Builds the root system; positive roots are the closure of the simple
/// roots under simple reflections, restricted to nonnegative combinations.
pub fn build_root_system(kind: RootType) -> RootSystem {
    let cartan = kind.cartan();
    let r = cartan.len();
    for i in 0..r {
        assert_eq!(cartan[i][i], 2);
        for j in 0..r {
            if i != j {
                let p = cartan[i][j] * cartan[j][i];
                assert!(cartan[i][j] <= 0 && (0..=3).contains(&p) && (p == 0) == (cartan[i][j] == 0));
            }
        }
    }
    // closure in simple-root coordinates
    let reflect = |beta: &Vec<i64>, i: usize| -> Vec<i64> {
        let pairing: i64 = (0..r).map(|j| cartan[i][j] * beta[j]).sum();
        let mut out = beta.clone();
        out[i] -= pairing;
        out
    };
    let mut roots: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut queue: VecDeque<Vec<i64>> = roots.iter().cloned().collect();
    while let Some(beta) = queue.pop_front() {
        for i in 0..r {
            let gamma = reflect(&beta, i);
            if !roots.contains(&gamma) {
                roots.push(gamma.clone());
                queue.push_back(gamma);
            }
        }
    }
    let positive_roots_simple: Vec<Vec<i64>> = roots.into_iter().filter(|b| b.iter().all(|&c| c >= 0)).collect();
    let positive_roots: Vec<Vec<i64>> = positive_roots_simple
        .iter()
        .map(|b| (0..r).map(|i| (0..r).map(|j| cartan[i][j] * b[j]).sum()).collect())
        .collect();
    assert_eq!(positive_roots.len(), kind.expected_positive_roots());
    let rs = RootSystem {
        kind,
        cartan,
        positive_roots,
        positive_roots_simple,
    };
    if kind == RootType::G2 {
        // labeling convention: alpha1 = 2x1 - x2, alpha2 = -3x1 + 2x2
        assert_eq!(rs.simple_root(1), vec![2, -1]);
        assert_eq!(rs.simple_root(2), vec![-3, 2]);
    }
    rs
}

impl RootSystem {
    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_roots_simple(&self) -> &[Vec<i64>] {
        &self.positive_roots_simple
    }

    /// Number of positive roots, which is `dim G/B`.
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// Weight coordinates of `alpha_i` (1-based).
    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|k| self.cartan[k][i - 1]).collect()
    }

    pub fn weight_class(&self, w: &[i64]) -> BorelClass {
        MultiPoly::linear(&w.iter().map(|&c| rat(c)).collect::<Vec<_>>())
    }

    pub fn simple_root_class(&self, i: usize) -> BorelClass {
        self.weight_class(&self.simple_root(i))
    }

    pub fn names(&self) -> Vec<String> {
        MultiPoly::default_names(self.rank())
    }

    pub fn format_class(&self, p: &BorelClass) -> String {
        p.to_string()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::precondition(format!(
                "simple root index {i} out of range 1..={}",
                self.rank()
            )));
        }
        Ok(())
    }

    fn check_class(&self, f: &BorelClass) -> Result<()> {
        if f.nvars() != self.rank() {
            return Err(Error::VariableMismatch(self.rank(), f.nvars()));
        }
        Ok(())
    }

    /// `s_i` acting on weight coordinates: `lambda - lambda_i alpha_i`.
    fn reflection_matrix(&self, i: usize) -> WMatrix {
        let r = self.rank();
        let alpha = self.simple_root(i);
        (0..r)
            .map(|row| {
                (0..r)
                    .map(|col| i64::from(row == col) - if col == i - 1 { alpha[row] } else { 0 })
                    .collect()
            })
            .collect()
    }

    /// `s_i` acting on classes by `x_i -> x_i - alpha_i`.
    pub fn reflect_class(&self, i: usize, f: &BorelClass) -> Result<BorelClass> {
        self.check_index(i)?;
        self.check_class(f)?;
        let r = self.rank();
        let images: Vec<MultiPoly> = (0..r)
            .map(|k| {
                let x = MultiPoly::var(r, k);
                if k == i - 1 {
                    &x - &self.simple_root_class(i)
                } else {
                    x
                }
            })
            .collect();
        f.substitute(&images)
    }

    pub fn weyl_group(&self) -> WeylGroup {
        let r = self.rank();
        let identity: WMatrix = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        let gens: Vec<WMatrix> = (1..=r).map(|i| self.reflection_matrix(i)).collect();
        let mut elements = vec![(Vec::new(), identity.clone())];
        let mut lengths = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elements.len() {
            let (word, m) = elements[head].clone();
            for (i, g) in gens.iter().enumerate() {
                let next = mat_mul_i(&m, g);
                if !lengths.contains_key(&next) {
                    let mut w = word.clone();
                    w.push(i + 1);
                    lengths.insert(next.clone(), w.len());
                    elements.push((w, next));
                }
            }
            head += 1;
        }
        WeylGroup { rank: r, elements, lengths }
    }
}

fn mat_mul_i(a: &WMatrix, b: &WMatrix) -> WMatrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Shortest words of all elements, identity first.
    pub fn words(&self) -> impl Iterator<Item = &[usize]> {
        self.elements.iter().map(|(w, _)| w.as_slice())
    }

    /// Action of the element with the given word on a weight vector.
    pub fn act(&self, word: &[usize], weight: &[i64]) -> Vec<i64> {
        let m = self.matrix_of(word);
        (0..self.rank).map(|i| (0..self.rank).map(|j| m[i][j] * weight[j]).sum()).collect()
    }

    fn generator(&self, i: usize) -> &WMatrix {
        let idx = self
            .elements
            .iter()
            .position(|(w, _)| w.as_slice() == [i])
            .expect("simple reflection enumerated");
        &self.elements[idx].1
    }

    fn matrix_of(&self, word: &[usize]) -> WMatrix {
        let identity = self.elements[0].1.clone();
        word.iter().fold(identity, |m, &i| mat_mul_i(&m, self.generator(i)))
    }

    pub fn length(&self, word: &[usize]) -> usize {
        self.lengths[&self.matrix_of(word)]
    }

    pub fn longest_length(&self) -> usize {
        self.elements.last().map_or(0, |(w, _)| w.len())
    }

    /// A reduced word for the longest element.
    pub fn longest_word(&self) -> Vec<usize> {
        self.elements.last().map(|(w, _)| w.clone()).unwrap_or_default()
    }

    /// Every reduced word of the longest element, lexicographically.
    pub fn reduced_words_w0(&self) -> Vec<Vec<usize>> {
        let target = self.longest_length();
        let mut out = Vec::new();
        let identity = self.elements[0].1.clone();
        self.extend_reduced(&mut Vec::new(), &identity, target, &mut out);
        out
    }

    fn extend_reduced(&self, word: &mut Vec<usize>, m: &WMatrix, target: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == target {
            out.push(word.clone());
            return;
        }
        for i in 1..=self.rank {
            let next = mat_mul_i(m, self.generator(i));
            if self.lengths[&next] == word.len() + 1 {
                word.push(i);
                self.extend_reduced(word, &next, target, out);
                word.pop();
            }
        }
    }
}

/// BGG operator `d_i f = (f - s_i f) / alpha_i`.
pub fn divided_difference(rs: &RootSystem, i: usize, f: &BorelClass) -> Result<BorelClass> {
    let numerator = f - &rs.reflect_class(i, f)?;
    numerator.exact_divide(&rs.simple_root_class(i)).map_err(|e| {
        Error::inconsistency(format!("divided difference d_{i} failed to divide exactly: {e}"))
    })
}

/// Applies `d_{w_1} ... d_{w_k}`, rightmost first, returning every
/// intermediate class (the last entry is the result).
pub fn apply_word(rs: &RootSystem, word: &[usize], f: &BorelClass) -> Result<Vec<BorelClass>> {
    let mut steps = Vec::with_capacity(word.len());
    let mut cur = f.clone();
    for &i in word.iter().rev() {
        cur = divided_difference(rs, i, &cur)?;
        steps.push(cur.clone());
    }
    Ok(steps)
}

/// Degree of `f` on `G/B`: the constant `d_{w0} f` along the given reduced word.
pub fn integrate_gb_with_word(rs: &RootSystem, f: &BorelClass, word: &[usize]) -> Result<Rational> {
    rs.check_class(f)?;
    let n = rs.num_positive() as u32;
    if !f.is_zero() && !f.is_weighted_homogeneous(&vec![1; rs.rank()], n) {
        return Err(Error::precondition(format!("integrand {f} is not homogeneous of degree {n}")));
    }
    let steps = apply_word(rs, word, f)?;
    let last = steps.last().cloned().unwrap_or_else(|| f.clone());
    if last.degree().is_some_and(|d| d > 0) {
        return Err(Error::inconsistency(format!("d_w0 left a nonconstant class {last}")));
    }
    Ok(last.constant_term())
}

pub fn integrate_gb(rs: &RootSystem, f: &BorelClass) -> Result<Rational> {
    integrate_gb_with_word(rs, f, &rs.weyl_group().longest_word())
}

/// `G/B` as an intersection model: generators `x_i` of degree one, the
/// degree functional from `d_w0`, and the tangent series attached.
pub fn flag_model(rs: &RootSystem) -> Result<IntersectionModel> {
    let r = rs.rank();
    let n = rs.num_positive();
    let word = rs.weyl_group().longest_word();
    let mut top = BTreeMap::new();
    for m in homogeneous_exponents(r, n as u32) {
        let f = MultiPoly::monomial(r, m.clone(), rat(1));
        top.insert(m, integrate_gb_with_word(rs, &f, &word)?);
    }
    let gens = rs
        .names()
        .into_iter()
        .map(|name| Generator { name, degree: 1 })
        .collect();
    let model = IntersectionModel::new(format!("{}/B", rs.kind()), n, gens, top)?;
    let roots: Vec<MultiPoly> = rs.positive_roots().iter().map(|a| rs.weight_class(a)).collect();
    let tangent = ChernSeries::from_roots(&model, &roots)?;
    model.with_tangent(tangent)
}

fn homogeneous_exponents(r: usize, d: u32) -> Vec<Vec<u32>> {
    if r == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|e| {
            homogeneous_exponents(r - 1, d - e).into_iter().map(move |mut rest| {
                rest.insert(0, e);
                rest
            })
        })
        .collect()
}

/// `c(T_{G/B}) = prod_{alpha > 0} (1 + alpha)`.
pub fn tangent_chern_gb(rs: &RootSystem) -> Result<(IntersectionModel, ChernSeries)> {
    let model = flag_model(rs)?;
    let t = model.tangent().cloned().expect("flag model carries its tangent series");
    Ok((model, t))
}

fn check_parabolic(rs: &RootSystem, i: usize) -> Result<usize> {
    if rs.rank() != 2 {
        return Err(Error::precondition(format!("parabolic computations need rank 2, got {}", rs.rank())));
    }
    if i != 1 && i != 2 {
        return Err(Error::precondition(format!("parabolic index {i} must be 1 or 2")));
    }
    Ok(3 - i)
}

/// Relative tangent class of `G/B -> G/P_i`: the simple root of the other
/// index, whose `P^1` fibers are contracted.
pub fn relative_tangent_class(rs: &RootSystem, i: usize) -> Result<BorelClass> {
    let j = check_parabolic(rs, i)?;
    let rel = rs.simple_root_class(j);
    let (model, t) = tangent_chern_gb(rs)?;
    let pullback = whitney_quotient(&t, &ChernSeries::line_bundle(&model, &rel)?)?;
    let back = crate::chern::whitney_product(&pullback, &ChernSeries::line_bundle(&model, &rel)?)?;
    if back.components() != t.components() {
        return Err(Error::inconsistency("c(T_{G/B}) != c(pullback) (1 + relative class)"));
    }
    Ok(rel)
}

/// Everything computed on the way to `c_top(T_{G/P_i})`.
#[derive(Clone, Debug, Serialize)]
pub struct ParabolicTrace {
    pub system: String,
    pub parabolic: usize,
    pub relative_class: String,
    pub anticanonical: String,
    pub pullback_top: String,
    pub integrand: String,
    pub reduced_word: Vec<usize>,
    pub intermediates: Vec<String>,
    pub value: i64,
}

/// `c(pi_i^* T_{G/P_i})` together with the consistency check that every
/// component is a pullback, i.e. killed by the contracted `d_j`.
fn pullback_series(rs: &RootSystem, i: usize) -> Result<(IntersectionModel, ChernSeries, BorelClass)> {
    let j = check_parabolic(rs, i)?;
    let rel = relative_tangent_class(rs, i)?;
    let (model, t) = tangent_chern_gb(rs)?;
    let q = whitney_quotient(&t, &ChernSeries::line_bundle(&model, &rel)?)?;
    for (k, c) in q.components().iter().enumerate() {
        if !divided_difference(rs, j, c)?.is_zero() {
            return Err(Error::inconsistency(format!(
                "component c{k} = {c} is not pulled back from G/P_{i}"
            )));
        }
    }
    Ok((model, q, rel))
}

pub fn anticanonical_gp(rs: &RootSystem, i: usize) -> Result<BorelClass> {
    let (_, q, _) = pullback_series(rs, i)?;
    let c1 = q.c(1);
    let r = rs.rank();
    let only_xi = c1.terms().all(|(m, _)| {
        m.exponents()
            .iter()
            .enumerate()
            .all(|(k, &e)| k == i - 1 || e == 0)
    });
    if !only_xi {
        return Err(Error::inconsistency(format!("anticanonical class {c1} is not a multiple of x{i}")));
    }
    debug_assert_eq!(c1.nvars(), r);
    Ok(c1)
}

/// `deg c_top(T_{G/P_i})`, computed as `integral_{G/B} pi^* c_top . x_j`
/// where `x_j` (`j != i`) has degree one on the fibers.
pub fn top_chern_gp_trace(rs: &RootSystem, i: usize) -> Result<ParabolicTrace> {
    let j = check_parabolic(rs, i)?;
    let (_, q, rel) = pullback_series(rs, i)?;
    let anticanonical = anticanonical_gp(rs, i)?;
    let top = q.c(rs.num_positive() - 1);
    let integrand = &top * &MultiPoly::var(rs.rank(), j - 1);
    let word = rs.weyl_group().longest_word();
    let steps = apply_word(rs, &word, &integrand)?;
    let value = integrate_gb_with_word(rs, &integrand, &word)?;
    let value = to_i64(&value).ok_or_else(|| {
        Error::inconsistency(format!("top Chern degree {value} is not an integer; labeling inconsistent"))
    })?;
    Ok(ParabolicTrace {
        system: rs.kind().to_string(),
        parabolic: i,
        relative_class: rel.to_string(),
        anticanonical: anticanonical.to_string(),
        pullback_top: top.to_string(),
        integrand: integrand.to_string(),
        reduced_word: word,
        intermediates: steps.iter().map(ToString::to_string).collect(),
        value,
    })
}

pub fn top_chern_gp(rs: &RootSystem, i: usize) -> Result<i64> {
    Ok(top_chern_gp_trace(rs, i)?.value)
}

/// Checks a braid relation on a probe class: the two alternating words of
/// length `m_ij` give the same operator.
pub fn braid_relation_holds(rs: &RootSystem, i: usize, j: usize, f: &BorelClass) -> Result<bool> {
    rs.check_index(i)?;
    rs.check_index(j)?;
    let m = braid_order(rs, i, j);
    let w1: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
    let w2: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
    let a = apply_word(rs, &w1, f)?.pop().unwrap_or_else(|| f.clone());
    let b = apply_word(rs, &w2, f)?.pop().unwrap_or_else(|| f.clone());
    Ok(a == b)
}

/// Order of `s_i s_j`: 2, 3, 4, 6 for `C_ij C_ji` = 0, 1, 2, 3.
pub fn braid_order(rs: &RootSystem, i: usize, j: usize) -> usize {
    if i == j {
        return 1;
    }
    match rs.cartan[i - 1][j - 1] * rs.cartan[j - 1][i - 1] {
        0 => 2,
        1 => 3,
        2 => 4,
        _ => 6,
    }
}

/// Sum of positive roots (`2 rho`) in weight coordinates.
pub fn two_rho(rs: &RootSystem) -> Vec<i64> {
    let mut acc = vec![0; rs.rank()];
    for a in &rs.positive_roots {
        for (s, c) in acc.iter_mut().zip(a) {
            *s += c;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(rs: &RootSystem, s: &str) -> BorelClass {
        MultiPoly::parse(s, rs.rank()).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for (t, n) in [
            (RootType::A1, 1),
            (RootType::A1xA1, 2),
            (RootType::A2, 3),
            (RootType::B2, 4),
            (RootType::G2, 6),
        ] {
            let rs = build_root_system(t);
            assert_eq!(rs.num_positive(), n, "{t}");
        }
        assert_eq!(build_root_system(RootType::G2).rank(), 2);
    }

    #[test]
    fn weyl_group_orders_and_longest_length() {
        for (t, n) in [(RootType::A1, 2), (RootType::A1xA1, 4), (RootType::A2, 6), (RootType::B2, 8), (RootType::G2, 12)] {
            let rs = build_root_system(t);
            let w = rs.weyl_group();
            assert_eq!(w.order(), n, "{t}");
            assert_eq!(w.longest_length(), rs.num_positive());
        }
    }

    #[test]
    fn reduced_words_of_w0() {
        let g2 = build_root_system(RootType::G2).weyl_group();
        assert_eq!(g2.reduced_words_w0(), vec![vec![1, 2, 1, 2, 1, 2], vec![2, 1, 2, 1, 2, 1]]);
        assert_eq!(build_root_system(RootType::A2).weyl_group().reduced_words_w0().len(), 2);
    }

    #[test]
    fn weyl_action_on_weights() {
        let rs = build_root_system(RootType::A2);
        let w = rs.weyl_group();
        assert_eq!(w.act(&[1], &[1, 0]), vec![-1, 1]);
        let w0 = w.longest_word();
        assert_eq!(w.act(&w0, &[1, 0]), vec![0, -1]);
    }

    #[test]
    fn divided_difference_examples() {
        let a2 = build_root_system(RootType::A2);
        assert_eq!(divided_difference(&a2, 1, &x(&a2, "x1")).unwrap(), MultiPoly::one(2));
        assert_eq!(divided_difference(&a2, 1, &x(&a2, "x1^2")).unwrap(), x(&a2, "x2"));
        for t in [RootType::A1xA1, RootType::A2, RootType::B2, RootType::G2] {
            let rs = build_root_system(t);
            assert!(divided_difference(&rs, 1, &x(&rs, "x2")).unwrap().is_zero());
        }
    }

    #[test]
    fn a2_poincare_pairing() {
        let rs = build_root_system(RootType::A2);
        assert_eq!(integrate_gb(&rs, &x(&rs, "x1^2 x2")).unwrap(), rat(1));
        assert_eq!(integrate_gb(&rs, &x(&rs, "x1 x2^2")).unwrap(), rat(1));
        assert_eq!(integrate_gb(&rs, &x(&rs, "x1^3")).unwrap(), rat(0));
        assert_eq!(integrate_gb(&rs, &x(&rs, "x2^3")).unwrap(), rat(0));
        assert!(integrate_gb(&rs, &x(&rs, "x1^2")).is_err());
    }

    #[test]
    fn gauss_bonnet() {
        for (t, n) in [(RootType::A1, 2), (RootType::A1xA1, 4), (RootType::A2, 6), (RootType::B2, 8), (RootType::G2, 12)] {
            let rs = build_root_system(t);
            let (m, tan) = tangent_chern_gb(&rs).unwrap();
            assert_eq!(integrate_gb(&rs, tan.top()).unwrap(), rat(n));
            assert_eq!(m.integrate(tan.top()).unwrap(), rat(n));
        }
    }

    #[test]
    fn tangent_first_chern_classes() {
        let g2 = build_root_system(RootType::G2);
        assert_eq!(tangent_chern_gb(&g2).unwrap().1.c(1), x(&g2, "2 x1 + 2 x2"));
        let a2 = build_root_system(RootType::A2);
        assert_eq!(tangent_chern_gb(&a2).unwrap().1.c(1), x(&a2, "2 x1 + 2 x2"));
        let a1 = build_root_system(RootType::A1);
        let t = tangent_chern_gb(&a1).unwrap().1;
        assert_eq!(t.components(), &[MultiPoly::one(1), x(&a1, "2 x1")]);
        assert_eq!(two_rho(&g2), vec![2, 2]);
    }

    #[test]
    fn relative_classes() {
        let g2 = build_root_system(RootType::G2);
        assert_eq!(relative_tangent_class(&g2, 1).unwrap(), x(&g2, "-3 x1 + 2 x2"));
        assert_eq!(relative_tangent_class(&g2, 2).unwrap(), x(&g2, "2 x1 - x2"));
        let aa = build_root_system(RootType::A1xA1);
        assert_eq!(relative_tangent_class(&aa, 1).unwrap(), x(&aa, "2 x2"));
        assert!(relative_tangent_class(&build_root_system(RootType::A1), 1).is_err());
        assert!(relative_tangent_class(&g2, 3).is_err());
    }

    #[test]
    fn anticanonical_classes() {
        let g2 = build_root_system(RootType::G2);
        assert_eq!(anticanonical_gp(&g2, 1).unwrap(), x(&g2, "5 x1"));
        assert_eq!(anticanonical_gp(&g2, 2).unwrap(), x(&g2, "3 x2"));
        let aa = build_root_system(RootType::A1xA1);
        assert_eq!(anticanonical_gp(&aa, 1).unwrap(), x(&aa, "2 x1"));
        let a2 = build_root_system(RootType::A2);
        assert_eq!(anticanonical_gp(&a2, 1).unwrap(), x(&a2, "3 x1"));
    }

    #[test]
    fn parabolic_top_chern() {
        let g2 = build_root_system(RootType::G2);
        assert_eq!(top_chern_gp(&g2, 1).unwrap(), 6);
        assert_eq!(top_chern_gp(&g2, 2).unwrap(), 6);
        let a2 = build_root_system(RootType::A2);
        assert_eq!(top_chern_gp(&a2, 1).unwrap(), 3);
        assert_eq!(top_chern_gp(&a2, 2).unwrap(), 3);
        let aa = build_root_system(RootType::A1xA1);
        assert_eq!(top_chern_gp(&aa, 1).unwrap(), 2);
        let b2 = build_root_system(RootType::B2);
        // B2/P are P^3 and the 3-dimensional quadric
        let mut vals = [top_chern_gp(&b2, 1).unwrap(), top_chern_gp(&b2, 2).unwrap()];
        vals.sort();
        assert_eq!(vals, [4, 4]);
    }

    #[test]
    fn trace_records_word_and_steps() {
        let g2 = build_root_system(RootType::G2);
        let t = top_chern_gp_trace(&g2, 1).unwrap();
        assert_eq!(t.reduced_word.len(), 6);
        assert_eq!(t.intermediates.len(), 6);
        assert_eq!(t.intermediates.last().unwrap(), "6");
    }

    #[test]
    fn braid_orders() {
        assert_eq!(braid_order(&build_root_system(RootType::A1xA1), 1, 2), 2);
        assert_eq!(braid_order(&build_root_system(RootType::A2), 1, 2), 3);
        assert_eq!(braid_order(&build_root_system(RootType::B2), 1, 2), 4);
        assert_eq!(braid_order(&build_root_system(RootType::G2), 1, 2), 6);
    }

    #[test]
    fn root_type_parsing() {
        assert_eq!("g2".parse::<RootType>().unwrap(), RootType::G2);
        assert!("E8".parse::<RootType>().is_err());
    }
}
