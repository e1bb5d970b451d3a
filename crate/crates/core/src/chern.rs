//! Chern series over small intersection models, with Hirzebruch-Riemann-Roch
//! up to dimension three.
//!
//! An [`IntersectionModel`] is a graded polynomial ring on named generators
//! together with a degree functional on the top-degree monomials. The
//! hyperplane model covers complete intersections in `P^N`; K3 surfaces and
//! `G/B` (see [`crate::schubert`]) have their own constructors.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{format_rational, rat, ratio, MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionModel {
    name: String,
    dim: usize,
    generators: Vec<Generator>,
    top_degrees: BTreeMap<Vec<u32>, Rational>,
    tangent: Option<ChernSeries>,
}

/// Total Chern class `c_0 + c_1 + ... + c_n` of a (virtual) bundle, truncated
/// at the model dimension. `components[i]` has pure degree `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernSeries {
    model: String,
    weights: Vec<u32>,
    rank: i64,
    components: Vec<MultiPoly>,
}

/// All exponent vectors whose weighted degree is exactly `d`.
fn monomials_of_degree(weights: &[u32], d: u32) -> Vec<Vec<u32>> {
    fn rec(weights: &[u32], d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == weights.len() {
            if d == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let w = weights[prefix.len()];
        for e in 0..=d / w {
            prefix.push(e);
            rec(weights, d - e * w, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(weights, d, &mut Vec::new(), &mut out);
    out
}

impl IntersectionModel {
    /// Builds a model from its degree functional, which must be defined on
    /// every monomial of top degree.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        generators: Vec<Generator>,
        top_degrees: BTreeMap<Vec<u32>, Rational>,
    ) -> Result<Self> {
        if generators.iter().any(|g| g.degree == 0) {
            return Err(Error::precondition("generators must have positive degree"));
        }
        let weights: Vec<u32> = generators.iter().map(|g| g.degree).collect();
        for m in monomials_of_degree(&weights, dim as u32) {
            if !top_degrees.contains_key(&m) {
                return Err(Error::precondition(format!("degree functional undefined on monomial {m:?}")));
            }
        }
        if top_degrees.keys().any(|m| m.len() != weights.len()) {
            return Err(Error::precondition("degree functional keyed by wrong-length exponent vectors"));
        }
        Ok(IntersectionModel {
            name: name.into(),
            dim,
            generators,
            top_degrees,
            tangent: None,
        })
    }

    /// One hyperplane class `h` with `integral h^dim = degree`.
    pub fn hyperplane(name: impl Into<String>, dim: usize, degree: Rational) -> Self {
        let mut top = BTreeMap::new();
        top.insert(vec![dim as u32], degree);
        Self::new(name, dim, vec![Generator { name: "h".into(), degree: 1 }], top).expect("single generator model")
    }

    /// Abstract K3 surface with a polarisation `L`: generators `L` (degree 1)
    /// and the point class `pt` (degree 2).
    ///
    /// Built-in K3 facts: `c1 = 0`, `c2 = 24 pt`; hence `chi(O) = 2`.
    /// `L^2` must be even, as on every K3.
    pub fn k3(l_squared: i64) -> Result<Self> {
        if l_squared % 2 != 0 {
            return Err(Error::precondition(format!("L^2 = {l_squared} is odd; K3 intersection form is even")));
        }
        let mut top = BTreeMap::new();
        top.insert(vec![2, 0], rat(l_squared));
        top.insert(vec![0, 1], rat(1));
        let gens = vec![
            Generator { name: "L".into(), degree: 1 },
            Generator { name: "pt".into(), degree: 2 },
        ];
        let mut model = Self::new(format!("K3(L^2={l_squared})"), 2, gens, top)?;
        let pt = model.generator(1);
        let tangent = ChernSeries::new(&model, 2, vec![model.one(), model.zero(), pt.scale(&rat(24))])?;
        model.tangent = Some(tangent);
        Ok(model)
    }

    pub fn with_tangent(mut self, tangent: ChernSeries) -> Result<Self> {
        self.check_series(&tangent)?;
        if tangent.rank != self.dim as i64 {
            return Err(Error::precondition("tangent bundle rank must equal the dimension"));
        }
        self.tangent = Some(tangent);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn weights(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn tangent(&self) -> Option<&ChernSeries> {
        self.tangent.as_ref()
    }

    pub fn top_degrees(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.top_degrees
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.ngens())
    }

    pub fn one(&self) -> MultiPoly {
        MultiPoly::one(self.ngens())
    }

    pub fn generator(&self, i: usize) -> MultiPoly {
        MultiPoly::var(self.ngens(), i)
    }

    pub fn names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn format_class(&self, p: &MultiPoly) -> String {
        p.to_string_with(&self.names())
    }

    pub fn parse_class(&self, s: &str) -> Result<MultiPoly> {
        MultiPoly::parse_with(s, &self.names())
    }

    /// Degree of a class: zero for zero, `Some(d)` when weighted-homogeneous.
    pub fn class_degree(&self, p: &MultiPoly) -> Option<u32> {
        let weights = self.weights();
        let mut degs = p.terms().map(|(m, _)| m.weighted_degree(&weights));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn check_series(&self, s: &ChernSeries) -> Result<()> {
        if s.model != self.name || s.components.len() != self.dim + 1 {
            return Err(Error::precondition(format!("series lives on {}, not on {}", s.model, self.name)));
        }
        Ok(())
    }

    /// Degree functional, extended linearly.
    pub fn integrate(&self, class: &MultiPoly) -> Result<Rational> {
        if class.nvars() != self.ngens() {
            return Err(Error::VariableMismatch(self.ngens(), class.nvars()));
        }
        if class.is_zero() {
            return Ok(Rational::zero());
        }
        let weights = self.weights();
        if !class.is_weighted_homogeneous(&weights, self.dim as u32) {
            return Err(Error::precondition(format!(
                "integrand {} is not of top degree {}",
                self.format_class(class),
                self.dim
            )));
        }
        let mut total = Rational::zero();
        for (m, c) in class.terms() {
            let v = self
                .top_degrees
                .get(m.exponents())
                .ok_or_else(|| Error::inconsistency("degree functional missing a top monomial"))?;
            total += c * v;
        }
        Ok(total)
    }
}

impl ChernSeries {
    /// Builds `c_0 + ... + c_n`; requires `c_0 = 1` and each `c_i` of degree `i`.
    pub fn new(model: &IntersectionModel, rank: i64, components: Vec<MultiPoly>) -> Result<Self> {
        if components.len() != model.dim + 1 {
            return Err(Error::precondition(format!(
                "expected {} components, got {}",
                model.dim + 1,
                components.len()
            )));
        }
        let weights = model.weights();
        for (i, c) in components.iter().enumerate() {
            if c.nvars() != model.ngens() {
                return Err(Error::VariableMismatch(model.ngens(), c.nvars()));
            }
            if !c.is_weighted_homogeneous(&weights, i as u32) {
                return Err(Error::precondition(format!("component c{i} is not of degree {i}")));
            }
        }
        if components[0] != model.one() {
            return Err(Error::precondition("c0 must be 1"));
        }
        Ok(ChernSeries {
            model: model.name.clone(),
            weights,
            rank,
            components,
        })
    }

    pub fn trivial(model: &IntersectionModel, rank: i64) -> Self {
        let mut comps = vec![model.zero(); model.dim + 1];
        comps[0] = model.one();
        ChernSeries::new(model, rank, comps).expect("trivial series")
    }

    /// `1 + class` for a degree-one class.
    pub fn line_bundle(model: &IntersectionModel, class: &MultiPoly) -> Result<Self> {
        Self::from_roots(model, std::slice::from_ref(class))
    }

    /// `prod (1 + r_k)` over Chern roots `r_k` of degree one.
    pub fn from_roots(model: &IntersectionModel, roots: &[MultiPoly]) -> Result<Self> {
        let mut s = Self::trivial(model, 0);
        for r in roots {
            if model.class_degree(r).is_some_and(|d| d != 1) {
                return Err(Error::precondition("Chern roots must have degree one"));
            }
            let mut comps = vec![model.zero(); model.dim + 1];
            comps[0] = model.one();
            if model.dim >= 1 {
                comps[1] = r.clone();
            }
            let factor = ChernSeries::new(model, 1, comps)?;
            s = whitney_product(&s, &factor)?;
        }
        Ok(s)
    }

    pub fn model(&self) -> &str {
        &self.model
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// `c_i`, zero beyond the truncation degree.
    pub fn c(&self, i: usize) -> MultiPoly {
        self.components
            .get(i)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.weights.len()))
    }

    pub fn top(&self) -> &MultiPoly {
        self.components.last().expect("c0 always present")
    }

    /// Series of the dual bundle: `c_i(E*) = (-1)^i c_i(E)`.
    pub fn dual(&self) -> ChernSeries {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        ChernSeries { components, ..self.clone() }
    }

    fn check_same_model(&self, other: &ChernSeries) -> Result<()> {
        if self.model != other.model || self.components.len() != other.components.len() {
            return Err(Error::precondition(format!(
                "model mismatch: {} vs {}",
                self.model, other.model
            )));
        }
        Ok(())
    }

    /// Series inverse `c^{-1}`, truncated.
    fn inverse(&self) -> Vec<MultiPoly> {
        let n = self.dim();
        let mut inv: Vec<MultiPoly> = Vec::with_capacity(n + 1);
        inv.push(self.components[0].clone());
        for k in 1..=n {
            let mut acc = MultiPoly::zero(self.weights.len());
            for j in 1..=k {
                acc = &acc - &(&self.components[j] * &inv[k - j]);
            }
            inv.push(acc);
        }
        inv
    }
}

/// Whitney sum formula: ranks add, total classes multiply (truncated).
pub fn whitney_product(a: &ChernSeries, b: &ChernSeries) -> Result<ChernSeries> {
    a.check_same_model(b)?;
    let n = a.dim();
    let comps = (0..=n)
        .map(|k| {
            (0..=k).fold(MultiPoly::zero(a.weights.len()), |acc, i| {
                &acc + &(&a.components[i] * &b.components[k - i])
            })
        })
        .collect();
    Ok(ChernSeries {
        model: a.model.clone(),
        weights: a.weights.clone(),
        rank: a.rank + b.rank,
        components: comps,
    })
}

/// Solves `c(Q) * c(S) = c(E)` for `c(Q)` given `total = c(E)`, `sub = c(S)`.
pub fn whitney_quotient(total: &ChernSeries, sub: &ChernSeries) -> Result<ChernSeries> {
    total.check_same_model(sub)?;
    let inv = ChernSeries {
        rank: 0,
        components: sub.inverse(),
        ..sub.clone()
    };
    let mut q = whitney_product(total, &inv)?;
    q.rank = total.rank - sub.rank;
    Ok(q)
}

/// Tangent Chern series of a smooth complete intersection of the given
/// hypersurface degrees in `P^ambient_dim`:
/// `c(T) = (1+h)^(N+1) / prod (1 + d_i h)`, with `integral h^dim = prod d_i`.
pub fn chern_tangent_ci(ambient_dim: usize, degrees: &[i64]) -> Result<(IntersectionModel, ChernSeries)> {
    if degrees.iter().any(|&d| d < 1) {
        return Err(Error::precondition("hypersurface degrees must be at least 1"));
    }
    if degrees.len() >= ambient_dim {
        return Err(Error::precondition(format!(
            "{} hypersurfaces in P^{ambient_dim} leave nonpositive dimension",
            degrees.len()
        )));
    }
    let dim = ambient_dim - degrees.len();
    let product: i64 = degrees.iter().product();
    let name = if degrees.is_empty() {
        format!("P^{ambient_dim}")
    } else {
        let ds: Vec<String> = degrees.iter().map(i64::to_string).collect();
        format!("CI({ambient_dim};{})", ds.join(","))
    };
    let model = IntersectionModel::hyperplane(name, dim, rat(product));
    let h = model.generator(0);
    let ambient = ChernSeries::from_roots(&model, &vec![h.clone(); ambient_dim + 1])?;
    let normal_roots: Vec<MultiPoly> = degrees.iter().map(|&d| h.scale(&rat(d))).collect();
    let normal = ChernSeries::from_roots(&model, &normal_roots)?;
    let mut tangent = whitney_quotient(&ambient, &normal)?;
    tangent.rank = dim as i64;
    let model = model.with_tangent(tangent.clone())?;
    Ok((model, tangent))
}

/// Free-function form of [`IntersectionModel::integrate`].
pub fn integrate(model: &IntersectionModel, class: &MultiPoly) -> Result<Rational> {
    model.integrate(class)
}

/// Graded pieces `ch_0..ch_n` and `td_0..td_n` (n = model dimension <= 3).
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterAndTodd {
    pub ch: Vec<MultiPoly>,
    pub td: Vec<MultiPoly>,
}

/// Chern character and Todd class from the closed formulas through degree 3:
///
/// `ch = r + c1 + (c1^2 - 2c2)/2 + (c1^3 - 3c1c2 + 3c3)/6`
/// `td = 1 + c1/2 + (c1^2 + c2)/12 + c1c2/24`
pub fn chern_character_and_todd(c: &ChernSeries) -> Result<CharacterAndTodd> {
    let n = c.dim();
    if n > 3 {
        return Err(Error::unsupported(format!("Chern character and Todd class above dimension 3 (got {n})")));
    }
    let nv = c.weights.len();
    let (c1, c2, c3) = (c.c(1), c.c(2), c.c(3));
    let c1sq = &c1 * &c1;
    let ch_all = [
        MultiPoly::constant(nv, rat(c.rank)),
        c1.clone(),
        (&c1sq - &c2.scale(&rat(2))).scale(&ratio(1, 2)),
        (&(&(&c1sq * &c1) - &(&c1 * &c2).scale(&rat(3))) + &c3.scale(&rat(3))).scale(&ratio(1, 6)),
    ];
    let td_all = [
        MultiPoly::one(nv),
        c1.scale(&ratio(1, 2)),
        (&c1sq + &c2).scale(&ratio(1, 12)),
        (&c1 * &c2).scale(&ratio(1, 24)),
    ];
    Ok(CharacterAndTodd {
        ch: ch_all[..=n].to_vec(),
        td: td_all[..=n].to_vec(),
    })
}

/// Top-degree part of a product of two graded class lists.
fn top_of_product(a: &[MultiPoly], b: &[MultiPoly]) -> MultiPoly {
    let n = a.len() - 1;
    (0..=n).fold(MultiPoly::zero(a[0].nvars()), |acc, i| &acc + &(&a[i] * &b[n - i]))
}

/// `chi(E) = integral ch(E) td(T)` on a model of dimension at most 3.
pub fn hrr_chi(model: &IntersectionModel, bundle: &ChernSeries) -> Result<Rational> {
    model.check_series(bundle)?;
    let tangent = model
        .tangent
        .as_ref()
        .ok_or_else(|| Error::precondition(format!("model {} has no tangent series", model.name)))?;
    let ch = chern_character_and_todd(bundle)?.ch;
    let td = chern_character_and_todd(tangent)?.td;
    model.integrate(&top_of_product(&ch, &td))
}

fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * rat(n - i) / rat(i + 1);
    }
    acc
}

/// Chern classes of `E (x) L` for a line class `L` of degree one:
/// `c_k(E (x) L) = sum_i binom(r - i, k - i) c_i(E) L^(k-i)`.
pub fn twist_chern(c: &ChernSeries, line_class: &MultiPoly) -> Result<ChernSeries> {
    if !(0..=3).contains(&c.rank) {
        return Err(Error::unsupported(format!("twisting a rank {} series (supported: 0..=3)", c.rank)));
    }
    if line_class.nvars() != c.weights.len() {
        return Err(Error::VariableMismatch(c.weights.len(), line_class.nvars()));
    }
    if !line_class.is_weighted_homogeneous(&c.weights, 1) {
        return Err(Error::precondition("twisting class must have degree one"));
    }
    let r = c.rank;
    let comps = (0..=c.dim())
        .map(|k| {
            (0..=k).fold(MultiPoly::zero(c.weights.len()), |acc, i| {
                let coeff = binomial(r - i as i64, (k - i) as i64);
                if coeff.is_zero() {
                    return acc;
                }
                &acc + &(&c.components[i] * &line_class.pow((k - i) as u32)).scale(&coeff)
            })
        })
        .collect();
    Ok(ChernSeries {
        components: comps,
        ..c.clone()
    })
}

/// Component strings for reports.
pub fn series_trace(model: &IntersectionModel, s: &ChernSeries) -> Vec<String> {
    s.components.iter().map(|c| model.format_class(c)).collect()
}

pub fn format_value(r: &Rational) -> String {
    format_rational(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h_model(dim: usize, deg: i64) -> IntersectionModel {
        IntersectionModel::hyperplane("H", dim, rat(deg))
    }

    #[test]
    fn product_of_opposite_lines() {
        let m = h_model(2, 1);
        let h = m.generator(0);
        let a = ChernSeries::line_bundle(&m, &h).unwrap();
        let b = ChernSeries::line_bundle(&m, &-&h).unwrap();
        let p = whitney_product(&a, &b).unwrap();
        assert_eq!(p.rank(), 2);
        assert!(p.c(1).is_zero());
        assert_eq!(p.c(2), -&(&h * &h));
    }

    #[test]
    fn product_with_trivial_is_identity() {
        let m = h_model(3, 1);
        let h = m.generator(0);
        let a = ChernSeries::from_roots(&m, &[h.clone(), h.scale(&rat(2))]).unwrap();
        let p = whitney_product(&a, &ChernSeries::trivial(&m, 4)).unwrap();
        assert_eq!(p.components(), a.components());
        assert_eq!(p.rank(), 6);
    }

    #[test]
    fn quadric_fivefold_restricted_ambient_tangent() {
        let (m, _) = chern_tangent_ci(6, &[2]).unwrap();
        let h = m.generator(0);
        let ambient = ChernSeries::from_roots(&m, &vec![h.clone(); 7]).unwrap();
        let expected = (&MultiPoly::one(1) + &h).pow(7);
        for k in 0..=5 {
            assert_eq!(ambient.c(k), expected.homogeneous_part(k as u32));
        }
    }

    #[test]
    fn quadric_fivefold_top_chern() {
        let (m, t) = chern_tangent_ci(6, &[2]).unwrap();
        assert_eq!(m.dim(), 5);
        assert_eq!(t.c(5), m.generator(0).pow(5).scale(&rat(3)));
        assert_eq!(m.integrate(t.top()).unwrap(), rat(6));
    }

    #[test]
    fn quotient_by_itself_is_trivial() {
        let (m, t) = chern_tangent_ci(4, &[3]).unwrap();
        let q = whitney_quotient(&t, &t).unwrap();
        assert_eq!(q, ChernSeries::trivial(&m, 0));
    }

    #[test]
    fn projective_three_space() {
        let (m, t) = chern_tangent_ci(3, &[]).unwrap();
        assert_eq!(m.integrate(t.top()).unwrap(), rat(4));
        assert_eq!(m.integrate(&m.generator(0).pow(3)).unwrap(), rat(1));
    }

    #[test]
    fn quartic_threefold_euler_number() {
        let (m, t) = chern_tangent_ci(4, &[4]).unwrap();
        // (1+h)^5 (1 - 4h + 16h^2 - 64h^3): c3 = 10 - 40 + 80 - 64 = -14
        assert_eq!(t.c(3), m.generator(0).pow(3).scale(&rat(-14)));
        assert_eq!(m.integrate(t.top()).unwrap(), rat(-56));
    }

    #[test]
    fn ci_errors() {
        assert!(chern_tangent_ci(2, &[2, 2]).is_err());
        assert!(chern_tangent_ci(4, &[0]).is_err());
    }

    #[test]
    fn integrate_checks_degree() {
        let m = h_model(3, 1);
        assert!(m.integrate(&m.generator(0)).is_err());
        assert_eq!(m.integrate(&m.zero()).unwrap(), rat(0));
    }

    #[test]
    fn ch_td_of_trivial_line() {
        let m = IntersectionModel::k3(22).unwrap();
        let o = ChernSeries::trivial(&m, 1);
        let ct = chern_character_and_todd(&o).unwrap();
        assert_eq!(ct.ch, vec![m.one(), m.zero(), m.zero()]);
        assert_eq!(ct.td, vec![m.one(), m.zero(), m.zero()]);
    }

    #[test]
    fn ch2_of_line_bundle_is_half_square() {
        let m = IntersectionModel::k3(22).unwrap();
        let l = m.generator(0);
        let ch = chern_character_and_todd(&ChernSeries::line_bundle(&m, &l).unwrap()).unwrap().ch;
        assert_eq!(ch[2], (&l * &l).scale(&ratio(1, 2)));
    }

    #[test]
    fn ch_of_k3_cotangent() {
        // c1 = 0, c2 = 24 pt: ch = 2 + 0 + (0 - 48 pt)/2
        let m = IntersectionModel::k3(22).unwrap();
        let omega = m.tangent().unwrap().dual();
        let ch = chern_character_and_todd(&omega).unwrap().ch;
        assert_eq!(ch[0], m.one().scale(&rat(2)));
        assert!(ch[1].is_zero());
        assert_eq!(ch[2], m.generator(1).scale(&rat(-24)));
    }

    #[test]
    fn ch_rejects_dimension_four() {
        let (_, t) = chern_tangent_ci(5, &[2]).unwrap();
        assert!(matches!(chern_character_and_todd(&t), Err(Error::Unsupported(_))));
    }

    #[test]
    fn k3_riemann_roch_values() {
        let m = IntersectionModel::k3(22).unwrap();
        let l = m.generator(0);
        assert_eq!(hrr_chi(&m, &ChernSeries::trivial(&m, 1)).unwrap(), rat(2));
        assert_eq!(hrr_chi(&m, &ChernSeries::line_bundle(&m, &l).unwrap()).unwrap(), rat(13));
        let omega_l = twist_chern(&m.tangent().unwrap().dual(), &l).unwrap();
        assert_eq!(hrr_chi(&m, &omega_l).unwrap(), rat(2));
        assert!(IntersectionModel::k3(3).is_err());
    }

    #[test]
    fn twist_examples() {
        let m = IntersectionModel::k3(22).unwrap();
        let l = m.generator(0);
        let pt = m.generator(1);
        let line = ChernSeries::line_bundle(&m, &(&l + &l)).unwrap();
        assert_eq!(twist_chern(&line, &l).unwrap().c(1), l.scale(&rat(3)));

        let tw = twist_chern(&ChernSeries::trivial(&m, 2), &l).unwrap();
        assert_eq!(tw.c(1), l.scale(&rat(2)));
        assert_eq!(tw.c(2), &l * &l);

        // splitting-principle oracle: roots r1, r2 with r1 + r2 = 0, r1 r2 = 24 pt
        let omega_l = twist_chern(&m.tangent().unwrap().dual(), &l).unwrap();
        assert_eq!(omega_l.c(1), l.scale(&rat(2)));
        assert_eq!(omega_l.c(2), &pt.scale(&rat(24)) + &(&l * &l));
    }

    #[test]
    fn twist_rejects_high_rank() {
        let (m, _) = chern_tangent_ci(3, &[]).unwrap();
        let e = ChernSeries::trivial(&m, 4);
        assert!(matches!(twist_chern(&e, &m.generator(0)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn cotangent_of_p3_twisted_by_two() {
        // h^0(P^3, Omega^1(2)) = 6 and higher cohomology vanishes
        let (m, t) = chern_tangent_ci(3, &[]).unwrap();
        let h2 = m.generator(0).scale(&rat(2));
        let e = twist_chern(&t.dual(), &h2).unwrap();
        assert_eq!(hrr_chi(&m, &e).unwrap(), rat(6));
    }

    #[test]
    fn model_mismatch_rejected() {
        let (_, a) = chern_tangent_ci(3, &[]).unwrap();
        let (_, b) = chern_tangent_ci(4, &[2]).unwrap();
        assert!(whitney_product(&a, &b).is_err());
        assert!(whitney_quotient(&a, &b).is_err());
    }
}
