//! `sl2`-equivariant geometry of binary forms behind the Mukai-Umemura
//! threefold. The central object is the map
//! `ν([a:b],[c:d]) = (a t0 + b t1)(c t0 + d t1)^11` from `P^1 × P^1` to
//! `P(M_12)`, along which wedges of vector fields are pulled back.
//!
//! Conventions. `sl2` acts on forms by the derivations `e = t0 ∂/∂t1`,
//! `f = t1 ∂/∂t0`, `h = t0 ∂/∂t0 − t1 ∂/∂t1`, and a group element `γ` by
//! `(γ·g)(t) = g(γ t)`. On `P^1` the same element acts by the matrices
//! `M_e = [[0,1],[0,0]]`, `M_f = [[0,0],[1,0]]`, `M_h = diag(1,−1)`; its
//! vector field is the quadratic form `v_X(u) = det[u, M_X u]`, read in the
//! chart `u0 ≠ 0` as `v_X(1, z) ∂/∂z`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::forms::{BIFORM_VARS, FORM_VARS};
use crate::exact::linalg::{mat_mul, mat_sub, rank, Matrix};
use crate::exact::{divide_out_with_multiplicity, rat, BiForm, BinaryForm, MultiPoly, Rational};
use crate::liecontact::{bracket_and_span_test, build, LieVector};
use crate::schubert::RootType;

/// Element `x_e e + x_f f + x_h h` of `sl2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Element {
    pub e: Rational,
    pub f: Rational,
    pub h: Rational,
}

impl Sl2Element {
    pub fn new(e: Rational, f: Rational, h: Rational) -> Self {
        Sl2Element { e, f, h }
    }

    pub fn e() -> Self {
        Self::new(rat(1), rat(0), rat(0))
    }

    pub fn f() -> Self {
        Self::new(rat(0), rat(1), rat(0))
    }

    pub fn h() -> Self {
        Self::new(rat(0), rat(0), rat(1))
    }

    pub fn zero() -> Self {
        Self::new(rat(0), rat(0), rat(0))
    }

    /// Parses a linear expression in `e`, `f`, `h`, e.g. `"e + f"`, `"2h"`.
    pub fn parse(s: &str) -> Result<Self> {
        let p = MultiPoly::parse_with(s, &["e", "f", "h"])?;
        if !p.is_zero() && !p.is_weighted_homogeneous(&[1, 1, 1], 1) {
            return Err(Error::Parse(format!("{s:?} is not a linear combination of e, f, h")));
        }
        Ok(Self::new(p.coeff(&[1, 0, 0]), p.coeff(&[0, 1, 0]), p.coeff(&[0, 0, 1])))
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_zero() && self.f.is_zero() && self.h.is_zero()
    }

    /// Action matrix on `C^2`.
    pub fn matrix(&self) -> [[Rational; 2]; 2] {
        [[self.h.clone(), self.e.clone()], [self.f.clone(), -self.h.clone()]]
    }

    /// Coordinates in the basis `(h, e, f)` of [`crate::liecontact`]'s `sl2`.
    fn lie_vector(&self) -> LieVector {
        vec![self.h.clone(), self.e.clone(), self.f.clone()]
    }

    /// Vector field on `P^1` as the quadratic form `det[u, M u]`.
    pub fn field(&self) -> BinaryForm {
        // u0 (f u0 - h u1) - u1 (h u0 + e u1)
        BinaryForm::new(vec![self.f.clone(), -(&self.h + &self.h), -self.e.clone()])
    }
}

impl std::fmt::Display for Sl2Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let p = MultiPoly::linear(&[self.e.clone(), self.f.clone(), self.h.clone()]);
        f.write_str(&p.to_string_with(&["e", "f", "h"]))
    }
}

/// Derivation matrices of `e, f, h` on `M_d` in the coefficient basis
/// `t0^(d-i) t1^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2OnForms {
    pub degree: usize,
    pub e: Matrix,
    pub f: Matrix,
    pub h: Matrix,
}

impl Sl2OnForms {
    pub fn new(degree: usize) -> Self {
        let n = degree + 1;
        let mut e = vec![vec![Rational::zero(); n]; n];
        let mut f = vec![vec![Rational::zero(); n]; n];
        let mut h = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            // t0 ∂1 sends index i to i - 1, t1 ∂0 sends i to i + 1
            if i > 0 {
                e[i - 1][i] = rat(i as i64);
            }
            if i < degree {
                f[i + 1][i] = rat((degree - i) as i64);
            }
            h[i][i] = rat(degree as i64 - 2 * i as i64);
        }
        Sl2OnForms { degree, e, f, h }
    }

    pub fn relations_hold(&self) -> bool {
        let comm = |a: &Matrix, b: &Matrix| mat_sub(&mat_mul(a, b), &mat_mul(b, a));
        let scale = |a: &Matrix, c: i64| -> Matrix {
            a.iter().map(|r| r.iter().map(|x| x * rat(c)).collect()).collect()
        };
        comm(&self.h, &self.e) == scale(&self.e, 2)
            && comm(&self.h, &self.f) == scale(&self.f, -2)
            && comm(&self.e, &self.f) == self.h
    }

    pub fn apply(&self, x: &Sl2Element, v: &BinaryForm) -> Result<BinaryForm> {
        if v.degree() != self.degree {
            return Err(Error::precondition(format!("form of degree {} acted on by M_{}", v.degree(), self.degree)));
        }
        let n = self.degree + 1;
        let coeffs = (0..n)
            .map(|i| {
                (0..n).fold(Rational::zero(), |acc, j| {
                    acc + (&x.e * &self.e[i][j] + &x.f * &self.f[i][j] + &x.h * &self.h[i][j]) * v.coeff(j)
                })
            })
            .collect();
        Ok(BinaryForm::new(coeffs))
    }
}

/// `x = t0 t1 (t0^10 − 11 t0^5 t1^5 − t1^10)`.
pub fn icosahedral_form() -> BinaryForm {
    let mut c = vec![Rational::zero(); 13];
    c[1] = rat(1);
    c[6] = rat(-11);
    c[11] = rat(-1);
    BinaryForm::new(c)
}

/// A point of `P(M_d ⊕ C)`: `[v : 0]` at infinity or `[v : 1]`.
#[derive(Clone, Debug, PartialEq)]
pub enum OrbitPoint {
    AtInfinity(BinaryForm),
    Affine(BinaryForm),
}

/// Dimension of the `sl2`-orbit through the point: the rank of the tangent
/// vectors `E v, F v, H v` modulo the line of the point itself.
pub fn orbit_tangent_rank(point: &OrbitPoint) -> Result<usize> {
    let (v, affine) = match point {
        OrbitPoint::AtInfinity(v) => (v, false),
        OrbitPoint::Affine(v) => (v, true),
    };
    if v.is_zero() && !affine {
        return Err(Error::precondition("the zero form is not a point"));
    }
    let action = Sl2OnForms::new(v.degree());
    let mut rows: Matrix = Vec::new();
    for x in [Sl2Element::e(), Sl2Element::f(), Sl2Element::h()] {
        let mut r = action.apply(&x, v)?.coeffs().to_vec();
        // the C summand is acted on trivially
        r.push(Rational::zero());
        rows.push(r);
    }
    let mut point_row = v.coeffs().to_vec();
    point_row.push(if affine { Rational::one() } else { Rational::zero() });
    rows.push(point_row);
    Ok(rank(&rows) - 1)
}

/// `ν` as thirteen `BiForm`s of bidegree `(1, 11)`: component `k` is the
/// coefficient of `t0^(12-k) t1^k`.
pub fn nu_components() -> Vec<BiForm> {
    let binom = |k: usize| -> Rational { rat(binomial(11, k as i64)) };
    (0..=12)
        .map(|k| {
            let mut coeffs = vec![vec![Rational::zero(); 12]; 2];
            if k <= 11 {
                coeffs[0][k] = binom(k);
            }
            if k >= 1 {
                coeffs[1][k - 1] = binom(k - 1);
            }
            BiForm::from_coeffs(coeffs).expect("rectangular")
        })
        .collect()
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `ν` as one polynomial in `a, b, c, d, t0, t1`.
fn nu_poly() -> MultiPoly {
    let v = |i| MultiPoly::var(6, i);
    let p = &(&v(0) * &v(4)) + &(&v(1) * &v(5));
    let q = &(&v(2) * &v(4)) + &(&v(3) * &v(5));
    &p * &q.pow(11)
}

pub fn nu_evaluate(p: (&Rational, &Rational), q: (&Rational, &Rational)) -> Result<BinaryForm> {
    if (p.0.is_zero() && p.1.is_zero()) || (q.0.is_zero() && q.1.is_zero()) {
        return Err(Error::precondition("source points of P^1 x P^1 must be nonzero"));
    }
    let lp = BinaryForm::linear(p.0.clone(), p.1.clone());
    let lq = BinaryForm::linear(q.0.clone(), q.1.clone());
    Ok(lp.mul(&lq.pow(11)))
}

/// Symbolic check of `ν(γ^T p, γ^T q) = γ·ν(p, q)` for `det γ = 1`.
pub fn nu_equivariance_check(g: &[[Rational; 2]; 2]) -> Result<bool> {
    if &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0] != Rational::one() {
        return Err(Error::precondition("γ must have determinant 1"));
    }
    let v = |i| MultiPoly::var(6, i);
    let lin = |x: usize, y: usize, c0: &Rational, c1: &Rational| &v(x).scale(c0) + &v(y).scale(c1);
    let nu = nu_poly();
    // γ^T (a, b) = (g00 a + g10 b, g01 a + g11 b)
    let source = [
        lin(0, 1, &g[0][0], &g[1][0]),
        lin(0, 1, &g[0][1], &g[1][1]),
        lin(2, 3, &g[0][0], &g[1][0]),
        lin(2, 3, &g[0][1], &g[1][1]),
        v(4),
        v(5),
    ];
    let target = [
        v(0),
        v(1),
        v(2),
        v(3),
        lin(4, 5, &g[0][0], &g[0][1]),
        lin(4, 5, &g[1][0], &g[1][1]),
    ];
    Ok(nu.substitute(&source)? == nu.substitute(&target)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PullbackCheck {
    pub exact: bool,
    pub modulo_radial: bool,
}

/// Compares `dν(i(X))`, the derivative of `ν` along `(M_X p, M_X q)`, with
/// the linear field `X·ν` on `M_12`. Holds modulo the radial direction;
/// with these conventions it holds on the nose.
pub fn pullback_field_check(x: &Sl2Element) -> Result<PullbackCheck> {
    let nu = nu_poly();
    let m = x.matrix();
    let v = |i| MultiPoly::var(6, i);
    let apply = |i: usize, j: usize, row: usize| &v(i).scale(&m[row][0]) + &v(j).scale(&m[row][1]);
    let dirs = [apply(0, 1, 0), apply(0, 1, 1), apply(2, 3, 0), apply(2, 3, 1)];
    let lhs = (0..4).fold(MultiPoly::zero(6), |acc, k| &acc + &(&nu.derivative(k) * &dirs[k]));
    // X·ν = e t0 ∂1 ν + f t1 ∂0 ν + h (t0 ∂0 − t1 ∂1) ν
    let d0 = nu.derivative(4);
    let d1 = nu.derivative(5);
    let rhs = &(&(&v(4) * &d1).scale(&x.e) + &(&v(5) * &d0).scale(&x.f))
        + &(&(&v(4) * &d0) - &(&v(5) * &d1)).scale(&x.h);
    let diff = &lhs - &rhs;
    let to_components = |p: &MultiPoly| -> Result<Vec<BiForm>> {
        (0..=12u32)
            .map(|k| {
                let mut part = MultiPoly::zero(4);
                for (mono, c) in p.terms() {
                    let e = mono.exponents();
                    if e[4] == 12 - k && e[5] == k {
                        part = &part + &MultiPoly::monomial(4, e[..4].to_vec(), c.clone());
                    }
                }
                BiForm::from_poly(&part, 1, 11)
            })
            .collect()
    };
    let dc = to_components(&diff)?;
    let nc = nu_components();
    let modulo_radial = (0..13).all(|i| {
        (i + 1..13).all(|j| {
            let minor = dc[i].mul(&nc[j]).add(&dc[j].mul(&nc[i]).scale(&rat(-1)));
            minor.map(|m| m.is_zero()).unwrap_or(false)
        })
    });
    Ok(PullbackCheck {
        exact: diff.is_zero(),
        modulo_radial,
    })
}

/// `s(p, q) = v_X(p) v_Y(q) − v_Y(p) v_X(q)`, a section of `O(2) ⊠ O(2)`.
pub fn wedge_section(x: &Sl2Element, y: &Sl2Element) -> BiForm {
    let (vx, vy) = (x.field(), y.field());
    let coeffs = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| vx.coeff(i) * vy.coeff(j) - vy.coeff(i) * vx.coeff(j))
                .collect()
        })
        .collect();
    BiForm::from_coeffs(coeffs).expect("3 x 3 coefficients")
}

#[derive(Clone, Debug, PartialEq)]
pub enum DivisorType {
    TwoDelta,
    DeltaPlusPrime(BiForm),
}

/// Splits `s = Δ^m r` with `Δ = ad − bc`.
pub fn divisor_type(s: &BiForm) -> Result<DivisorType> {
    if s.bidegree() != (2, 2) {
        return Err(Error::precondition(format!("expected a (2,2) form, got {:?}", s.bidegree())));
    }
    let (m, residual) = divide_out_with_multiplicity(s, &BiForm::diagonal())?;
    match m {
        0 => Err(Error::precondition("the diagonal does not divide the section; not a wedge of fields")),
        1 => Ok(DivisorType::DeltaPlusPrime(residual)),
        _ => Ok(DivisorType::TwoDelta),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FoliationVerdict {
    FoliationEverywhere,
    DivisorO1O2,
}

/// Whether `X, Y` span a subalgebra of `sl2`.
pub fn foliation_verdict(x: &Sl2Element, y: &Sl2Element) -> Result<FoliationVerdict> {
    let l = build(RootType::A1)?;
    let r = bracket_and_span_test(&l, &x.lie_vector(), &y.lie_vector())?;
    Ok(if r.in_span {
        FoliationVerdict::FoliationEverywhere
    } else {
        FoliationVerdict::DivisorO1O2
    })
}

/// `[X, Y]` in `sl2`.
pub fn sl2_bracket(x: &Sl2Element, y: &Sl2Element) -> Sl2Element {
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h
    let two = rat(2);
    Sl2Element::new(
        &two * (&x.h * &y.e - &x.e * &y.h),
        &two * (&x.f * &y.h - &x.h * &y.f),
        &x.e * &y.f - &x.f * &y.e,
    )
}

/// Degree of the image under `ν` of a curve of class `(m, n)`: `(m,n)·(1,11)`.
pub fn curve_image_degree(m: i64, n: i64) -> Result<i64> {
    if m < 0 || n < 0 {
        return Err(Error::precondition("curve class must be effective"));
    }
    Ok(11 * m + n)
}

pub fn format_biform(s: &BiForm) -> String {
    s.to_poly().to_string_with(&BIFORM_VARS)
}

pub fn format_form(v: &BinaryForm) -> String {
    v.to_poly().to_string_with(&FORM_VARS)
}
