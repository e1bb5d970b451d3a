use std::fmt;

use num_traits::Zero;

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

pub(crate) const FORM_VARS: [&str; 2] = ["t0", "t1"];
pub(crate) const BIFORM_VARS: [&str; 4] = ["a", "b", "c", "d"];

/// Homogeneous polynomial of degree `d` in `t0, t1`; `coeffs[i]` is the
/// coefficient of `t0^(d-i) t1^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    /// `c * t0^(d-i) t1^i`.
    pub fn monomial(degree: usize, i: usize, c: Rational) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i] = c;
        f
    }

    /// The linear form `a t0 + b t1`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        BinaryForm { coeffs: vec![a, b] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> MultiPoly {
        let d = self.degree() as u32;
        MultiPoly::from_terms(
            2,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![d - i as u32, i as u32], c.clone())),
        )
    }

    /// Reads a homogeneous polynomial in two variables as a form of the
    /// given degree.
    pub fn from_poly(p: &MultiPoly, degree: usize) -> Result<Self> {
        if p.nvars() != 2 {
            return Err(Error::VariableMismatch(2, p.nvars()));
        }
        let mut f = Self::zero(degree);
        for (m, c) in p.terms() {
            let e = m.exponents();
            if (e[0] + e[1]) as usize != degree {
                return Err(Error::precondition(format!("term of degree {} in a form of degree {degree}", e[0] + e[1])));
            }
            f.coeffs[e[1] as usize] = c.clone();
        }
        Ok(f)
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::precondition("adding forms of different degree"));
        }
        Ok(BinaryForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut coeffs = vec![Rational::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm { coeffs }
    }

    pub fn pow(&self, k: u32) -> BinaryForm {
        let mut out = BinaryForm::new(vec![Rational::from_integer(1.into())]);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Substitution action `f(t) -> f(g t)` for a 2x2 matrix `g`, i.e.
    /// `t0 -> g00 t0 + g01 t1`, `t1 -> g10 t0 + g11 t1`.
    pub fn act(&self, g: &[[Rational; 2]; 2]) -> BinaryForm {
        let images = [
            BinaryForm::linear(g[0][0].clone(), g[0][1].clone()).to_poly(),
            BinaryForm::linear(g[1][0].clone(), g[1][1].clone()).to_poly(),
        ];
        let p = self.to_poly().substitute(&images).expect("two variables");
        BinaryForm::from_poly(&p, self.degree()).expect("substitution keeps the degree")
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().to_string_with(&FORM_VARS))
    }
}

/// Bihomogeneous polynomial of bidegree `(d1, d2)` in `(a, b)` and `(c, d)`;
/// `coeffs[i][j]` is the coefficient of `a^(d1-i) b^i c^(d2-j) d^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiForm {
    d1: usize,
    d2: usize,
    coeffs: Vec<Vec<Rational>>,
}

impl BiForm {
    pub fn zero(d1: usize, d2: usize) -> Self {
        BiForm {
            d1,
            d2,
            coeffs: vec![vec![Rational::zero(); d2 + 1]; d1 + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Vec<Rational>>) -> Result<Self> {
        let d1 = coeffs.len().checked_sub(1).ok_or_else(|| Error::precondition("empty bi-form"))?;
        let width = coeffs[0].len();
        if width == 0 || coeffs.iter().any(|r| r.len() != width) {
            return Err(Error::precondition("ragged bi-form coefficient matrix"));
        }
        Ok(BiForm { d1, d2: width - 1, coeffs })
    }

    /// The diagonal equation `a d - b c` of bidegree (1, 1).
    pub fn diagonal() -> Self {
        let mut f = Self::zero(1, 1);
        f.coeffs[0][1] = Rational::from_integer(1.into());
        f.coeffs[1][0] = Rational::from_integer((-1).into());
        f
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> MultiPoly {
        let (d1, d2) = (self.d1 as u32, self.d2 as u32);
        let mut terms = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                terms.push((vec![d1 - i as u32, i as u32, d2 - j as u32, j as u32], c.clone()));
            }
        }
        MultiPoly::from_terms(4, terms)
    }

    pub fn from_poly(p: &MultiPoly, d1: usize, d2: usize) -> Result<Self> {
        if p.nvars() != 4 {
            return Err(Error::VariableMismatch(4, p.nvars()));
        }
        let mut f = Self::zero(d1, d2);
        for (m, c) in p.terms() {
            let e = m.exponents();
            if (e[0] + e[1]) as usize != d1 || (e[2] + e[3]) as usize != d2 {
                return Err(Error::precondition(format!("polynomial is not bihomogeneous of bidegree ({d1}, {d2})")));
            }
            f.coeffs[e[1] as usize][e[3] as usize] = c.clone();
        }
        Ok(f)
    }

    pub fn add(&self, other: &BiForm) -> Result<BiForm> {
        if self.bidegree() != other.bidegree() {
            return Err(Error::precondition("adding bi-forms of different bidegree"));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        Ok(BiForm { d1: self.d1, d2: self.d2, coeffs })
    }

    pub fn scale(&self, c: &Rational) -> BiForm {
        BiForm {
            d1: self.d1,
            d2: self.d2,
            coeffs: self.coeffs.iter().map(|r| r.iter().map(|a| a * c).collect()).collect(),
        }
    }

    pub fn mul(&self, other: &BiForm) -> BiForm {
        let p = &self.to_poly() * &other.to_poly();
        BiForm::from_poly(&p, self.d1 + other.d1, self.d2 + other.d2).expect("product is bihomogeneous")
    }

    /// Exact quotient `self / divisor`, if it exists.
    pub fn exact_divide(&self, divisor: &BiForm) -> Result<BiForm> {
        let q = self.to_poly().exact_divide(&divisor.to_poly())?;
        let d1 = self.d1.checked_sub(divisor.d1);
        let d2 = self.d2.checked_sub(divisor.d2);
        match (d1, d2) {
            (Some(d1), Some(d2)) => BiForm::from_poly(&q, d1, d2),
            _ => Err(Error::inconsistency("quotient of bi-forms has negative bidegree")),
        }
    }
}

impl fmt::Display for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().to_string_with(&BIFORM_VARS))
    }
}

/// Largest `m` with `divisor^m | s`, together with `s / divisor^m`.
pub fn divide_out_with_multiplicity(s: &BiForm, divisor: &BiForm) -> Result<(u32, BiForm)> {
    if s.is_zero() {
        return Err(Error::precondition("multiplicity of a divisor in the zero section is undefined"));
    }
    if divisor.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if divisor.bidegree() == (0, 0) {
        return Err(Error::precondition("dividing out a nonzero constant never terminates"));
    }
    let mut m = 0;
    let mut rest = s.clone();
    loop {
        match rest.exact_divide(divisor) {
            Ok(q) => {
                rest = q;
                m += 1;
            }
            Err(Error::NotDivisible { .. }) | Err(Error::Inconsistency(_)) => return Ok((m, rest)),
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn bf(s: &str, d1: usize, d2: usize) -> BiForm {
        BiForm::from_poly(&MultiPoly::parse_with(s, &BIFORM_VARS).unwrap(), d1, d2).unwrap()
    }

    #[test]
    fn binary_form_indexing() {
        let f = BinaryForm::new(vec![rat(0), rat(2), rat(0), rat(-1)]);
        assert_eq!(f.degree(), 3);
        assert_eq!(f.to_string(), "2 * t0^2 t1 - t1^3");
        assert_eq!(BinaryForm::from_poly(&f.to_poly(), 3).unwrap(), f);
    }

    #[test]
    fn substitution_action() {
        // t0 -> t0 + t1 sends t0^2 to (t0 + t1)^2
        let g = [[rat(1), rat(1)], [rat(0), rat(1)]];
        let f = BinaryForm::monomial(2, 0, rat(1));
        assert_eq!(f.act(&g).coeffs(), &[rat(1), rat(2), rat(1)]);
    }

    #[test]
    fn diagonal_prints_as_expected() {
        assert_eq!(BiForm::diagonal().to_string(), "a d - b c");
    }

    #[test]
    fn multiplicity_of_constructed_square() {
        let delta = BiForm::diagonal();
        let u = bf("a c + 3 b d", 1, 1);
        let s = delta.mul(&delta).mul(&u);
        let (m, q) = divide_out_with_multiplicity(&s, &delta).unwrap();
        assert_eq!(m, 2);
        assert_eq!(q, u);
    }

    #[test]
    fn coprime_gives_zero_multiplicity() {
        let s = bf("a^2 c^2 + b^2 d^2", 2, 2);
        let (m, q) = divide_out_with_multiplicity(&s, &BiForm::diagonal()).unwrap();
        assert_eq!((m, q), (0, s));
    }

    #[test]
    fn zero_section_rejected() {
        let zero = BiForm::zero(2, 2);
        assert!(divide_out_with_multiplicity(&zero, &BiForm::diagonal()).is_err());
    }
}
