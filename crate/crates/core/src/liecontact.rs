//! Simple Lie algebras of rank at most two with their Killing form, and the
//! contact-structure checks on the adjoint variety `M = G.[Z] ⊂ P(g)`.
//!
//! Each algebra is realized inside matrices: `sl2`, `sl3` directly, `B2`
//! by folding `sl4` and `g2` by folding `so(8)` along the triality
//! symmetry. Structure constants are read back by exact linear solves, so
//! the chosen signs are those of the matrix realization.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::linalg::{mat_mul, mat_sub, nullspace, rank, rref, solve, Matrix};
use crate::exact::{format_rational, rat, Rational};
use crate::schubert::{build_root_system, RootSystem, RootType};

pub type LieVector = Vec<Rational>;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    kind: RootType,
    rank: usize,
    labels: Vec<String>,
    /// Root of each basis vector in simple-root coordinates (zero for Cartan).
    roots: Vec<Vec<i64>>,
    /// `structure[i][j]` = coordinates of `[b_i, b_j]`.
    structure: Vec<Vec<LieVector>>,
    killing: Matrix,
}

fn unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = vec![vec![Rational::zero(); n]; n];
    m[i][j] = Rational::one();
    m
}

fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

fn comm(a: &Matrix, b: &Matrix) -> Matrix {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

fn transpose(a: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].clone()).collect()).collect()
}

fn is_zero_matrix(a: &Matrix) -> bool {
    a.iter().flatten().all(Zero::is_zero)
}

fn scale(a: &Matrix, c: &Rational) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

fn sum_of(n: usize, terms: &[(usize, usize, i64)]) -> Matrix {
    terms.iter().fold(vec![vec![Rational::zero(); n]; n], |acc, &(i, j, c)| {
        add(&acc, &scale(&unit(n, i, j), &rat(c)))
    })
}

/// Simple raising operators `E_i` of a faithful representation.
fn simple_raising(kind: RootType) -> Result<Vec<Matrix>> {
    Ok(match kind {
        RootType::A1 => vec![unit(2, 0, 1)],
        RootType::A2 => vec![unit(3, 0, 1), unit(3, 1, 2)],
        RootType::B2 => vec![sum_of(4, &[(0, 1, 1), (2, 3, 1)]), unit(4, 1, 2)],
        RootType::G2 => {
            // so(8) preserving the antidiagonal form; D4 nodes 1, 3, 4 fold to alpha1
            let d1 = sum_of(8, &[(0, 1, 1), (6, 7, -1)]);
            let d2 = sum_of(8, &[(1, 2, 1), (5, 6, -1)]);
            let d3 = sum_of(8, &[(2, 3, 1), (4, 5, -1)]);
            let d4 = sum_of(8, &[(2, 4, 1), (3, 5, -1)]);
            vec![add(&add(&d1, &d3), &d4), d2]
        }
        RootType::A1xA1 => return Err(Error::unsupported("Lie algebra of type A1xA1 (not simple)")),
    })
}

/// Expresses matrices in a fixed linearly independent family.
struct Coordinates {
    positions: Vec<(usize, usize)>,
    inverse: Matrix,
    basis: Vec<Matrix>,
}

impl Coordinates {
    fn new(basis: Vec<Matrix>) -> Result<Self> {
        let n = basis[0].len();
        let flat: Matrix = basis.iter().map(|m| m.iter().flatten().cloned().collect()).collect();
        let (_, pivots) = rref(&flat, n * n);
        if pivots.len() != basis.len() {
            return Err(Error::inconsistency("root vectors are linearly dependent"));
        }
        let d = basis.len();
        // square block: rows = basis elements, columns = pivot positions
        let block: Matrix = flat.iter().map(|row| pivots.iter().map(|&p| row[p].clone()).collect()).collect();
        let mut aug: Matrix = block
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        aug = rref(&aug, 2 * d).0;
        let inverse = aug.iter().map(|r| r[d..].to_vec()).collect();
        Ok(Coordinates {
            positions: pivots.iter().map(|&p| (p / n, p % n)).collect(),
            inverse,
            basis,
        })
    }

    /// `c` with `x = sum c_k basis_k`; errors when `x` is outside the span.
    fn coords(&self, x: &Matrix) -> Result<LieVector> {
        let d = self.basis.len();
        let vals: Vec<Rational> = self.positions.iter().map(|&(i, j)| x[i][j].clone()).collect();
        // vals = c * block  =>  c = vals * block^{-1}
        let c: LieVector = (0..d)
            .map(|k| (0..d).fold(Rational::zero(), |acc, p| acc + &vals[p] * &self.inverse[p][k]))
            .collect();
        let back = self.basis.iter().zip(&c).fold(vec![vec![Rational::zero(); x.len()]; x.len()], |acc, (b, ck)| {
            add(&acc, &scale(b, ck))
        });
        if &back != x {
            return Err(Error::inconsistency("bracket left the span of the basis"));
        }
        Ok(c)
    }
}

/// Builds the algebra from a matrix realization and checks the Chevalley
/// relations against the Cartan matrix.
pub fn build_chevalley(rs: &RootSystem) -> Result<LieAlgebra> {
    let kind = rs.kind();
    let es = simple_raising(kind)?;
    let r = rs.rank();
    let fs: Vec<Matrix> = es.iter().map(transpose).collect();
    let hs: Vec<Matrix> = (0..r).map(|i| comm(&es[i], &fs[i])).collect();
    let cartan = rs.cartan();
    for i in 0..r {
        for j in 0..r {
            if comm(&hs[i], &es[j]) != scale(&es[j], &rat(cartan[i][j])) {
                return Err(Error::inconsistency(format!("[h{}, e{}] disagrees with the Cartan matrix", i + 1, j + 1)));
            }
            let expected = if i == j { hs[i].clone() } else { vec![vec![Rational::zero(); es[0].len()]; es[0].len()] };
            if comm(&es[i], &fs[j]) != expected {
                return Err(Error::inconsistency("[e_i, f_j] relation fails"));
            }
            if i != j {
                let mut x = es[j].clone();
                for _ in 0..(1 - cartan[i][j]) {
                    x = comm(&es[i], &x);
                }
                if !is_zero_matrix(&x) {
                    return Err(Error::inconsistency("Serre relation fails"));
                }
            }
        }
    }

    let mut pos: Vec<Vec<i64>> = rs.positive_roots_simple().to_vec();
    pos.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    let mut vectors: Vec<Matrix> = Vec::new();
    for xi in &pos {
        let height: i64 = xi.iter().sum();
        if height == 1 {
            let i = xi.iter().position(|&c| c == 1).expect("simple root");
            vectors.push(es[i].clone());
            continue;
        }
        let (i, beta) = (0..r)
            .find_map(|i| {
                let mut b = xi.clone();
                b[i] -= 1;
                pos.iter().position(|p| *p == b).map(|k| (i, k))
            })
            .ok_or_else(|| Error::inconsistency("positive root not reachable from a smaller one"))?;
        let mut p = 0;
        loop {
            let mut b = pos[beta].clone();
            b[i] -= p + 1;
            if pos.contains(&b) {
                p += 1;
            } else {
                break;
            }
        }
        let v = scale(&comm(&es[i], &vectors[beta]), &(Rational::one() / rat(p + 1)));
        if is_zero_matrix(&v) {
            return Err(Error::inconsistency("vanishing root vector"));
        }
        vectors.push(v);
    }

    let mut labels: Vec<String> = (1..=r).map(|i| format!("h{i}")).collect();
    let mut roots: Vec<Vec<i64>> = vec![vec![0; r]; r];
    let mut basis: Vec<Matrix> = hs.clone();
    let fmt_root = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    for (xi, v) in pos.iter().zip(&vectors) {
        labels.push(format!("e({})", fmt_root(xi)));
        roots.push(xi.clone());
        basis.push(v.clone());
    }
    for (xi, v) in pos.iter().zip(&vectors) {
        let neg: Vec<i64> = xi.iter().map(|c| -c).collect();
        labels.push(format!("e({})", fmt_root(&neg)));
        roots.push(neg);
        basis.push(transpose(v));
    }

    let coords = Coordinates::new(basis)?;
    let dim = coords.basis.len();
    let mut structure = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            structure[i][j] = if j < i {
                structure[j][i].iter().map(|c: &Rational| -c).collect()
            } else {
                coords.coords(&comm(&coords.basis[i], &coords.basis[j]))?
            };
        }
    }
    let mut alg = LieAlgebra {
        kind,
        rank: r,
        labels,
        roots,
        structure,
        killing: Vec::new(),
    };
    let ads: Vec<Matrix> = (0..dim).map(|i| alg.ad_basis(i)).collect();
    alg.killing = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let m = mat_mul(&ads[i], &ads[j]);
                    (0..dim).fold(Rational::zero(), |acc, k| acc + &m[k][k])
                })
                .collect()
        })
        .collect();
    Ok(alg)
}

pub fn build(kind: RootType) -> Result<LieAlgebra> {
    build_chevalley(&build_root_system(kind))
}

impl LieAlgebra {
    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn killing_matrix(&self) -> &Matrix {
        &self.killing
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &LieVector {
        &self.structure[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> LieVector {
        (0..self.dim()).map(|k| if k == i { Rational::one() } else { Rational::zero() }).collect()
    }

    pub fn zero(&self) -> LieVector {
        vec![Rational::zero(); self.dim()]
    }

    /// Index of the basis vector with the given root (simple-root coordinates).
    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        if root.iter().all(|&c| c == 0) {
            return None;
        }
        self.roots.iter().position(|r| r.as_slice() == root)
    }

    pub fn root_vector(&self, root: &[i64]) -> Option<LieVector> {
        self.root_index(root).map(|i| self.basis_vector(i))
    }

    pub fn cartan_element(&self, i: usize) -> LieVector {
        self.basis_vector(i - 1)
    }

    /// Roots of the basis vectors, zero vectors for the Cartan part.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// The root of maximal height.
    pub fn highest_root(&self) -> Vec<i64> {
        self.roots
            .iter()
            .max_by_key(|r| (r.iter().sum::<i64>(), (*r).clone()))
            .cloned()
            .expect("nonempty")
    }

    pub fn label_of(&self, v: &LieVector) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("{} {}", format_rational(c), self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn bracket(&self, x: &LieVector, y: &LieVector) -> LieVector {
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let coeff = xi * yj;
                for (o, s) in out.iter_mut().zip(&self.structure[i][j]) {
                    if !s.is_zero() {
                        *o += &coeff * s;
                    }
                }
            }
        }
        out
    }

    pub fn killing(&self, x: &LieVector, y: &LieVector) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                acc += xi * yj * &self.killing[i][j];
            }
        }
        acc
    }

    fn ad_basis(&self, i: usize) -> Matrix {
        let d = self.dim();
        (0..d).map(|row| (0..d).map(|col| self.structure[i][col][row].clone()).collect()).collect()
    }

    /// Matrix of `ad x` in the basis (columns are images of basis vectors).
    pub fn ad(&self, x: &LieVector) -> Matrix {
        let d = self.dim();
        let cols: Vec<LieVector> = (0..d).map(|j| self.bracket(x, &self.basis_vector(j))).collect();
        (0..d).map(|row| (0..d).map(|col| cols[col][row].clone()).collect()).collect()
    }

    /// Exhaustive Jacobi check over ordered basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let a = self.bracket(&x, &self.bracket(&y, &z));
                    let b = self.bracket(&y, &self.bracket(&z, &x));
                    let c = self.bracket(&z, &self.bracket(&x, &y));
                    if a.iter().zip(&b).zip(&c).any(|((p, q), r)| !(p + q + r).is_zero()) {
                        return Err(Error::inconsistency(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_antisymmetry(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if self.structure[i][j].iter().zip(&self.structure[j][i]).any(|(a, b)| !(a + b).is_zero()) {
                    return Err(Error::inconsistency("bracket not antisymmetric"));
                }
            }
        }
        Ok(())
    }

    /// Symmetry and `<[x,y],z> + <y,[x,z]> = 0` on all basis triples.
    pub fn check_killing_invariance(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if self.killing[i][j] != self.killing[j][i] {
                    return Err(Error::inconsistency("Killing form not symmetric"));
                }
                for k in 0..d {
                    let (x, y, z) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let s = self.killing(&self.bracket(&x, &y), &z) + self.killing(&y, &self.bracket(&x, &z));
                    if !s.is_zero() {
                        return Err(Error::inconsistency("Killing form not ad-invariant"));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_vector(&self, v: &LieVector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::precondition(format!("vector of length {} in a {}-dimensional algebra", v.len(), self.dim())));
        }
        Ok(())
    }
}

fn nonzero(v: &LieVector) -> bool {
    v.iter().any(|c| !c.is_zero())
}

/// Basis of `z_[Z] = { X : [X, Z] ∈ C Z }`.
pub fn centralizer_line(l: &LieAlgebra, z: &LieVector) -> Result<Vec<LieVector>> {
    l.check_vector(z)?;
    if !nonzero(z) {
        return Err(Error::precondition("Z must be nonzero"));
    }
    let d = l.dim();
    // unknowns (X, lambda) with [X, Z] - lambda Z = 0
    let cols: Vec<LieVector> = (0..d).map(|j| l.bracket(&l.basis_vector(j), z)).collect();
    let system: Matrix = (0..d)
        .map(|row| {
            let mut r: Vec<Rational> = (0..d).map(|col| cols[col][row].clone()).collect();
            r.push(-z[row].clone());
            r
        })
        .collect();
    Ok(nullspace(&system, d + 1).into_iter().map(|v| v[..d].to_vec()).collect())
}

/// Kernel of `ad Z`.
pub fn centralizer(l: &LieAlgebra, z: &LieVector) -> Result<Vec<LieVector>> {
    l.check_vector(z)?;
    Ok(nullspace(&l.ad(z), l.dim()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContactCheckResult {
    pub dim_g: usize,
    pub dim_centralizer: usize,
    /// `dim g - dim z_[Z]`: dimension of the orbit `G.[Z]` in `P(g)`.
    #[serde(rename = "dim_M")]
    pub dim_m: usize,
    /// `dim g - dim ker ad Z`: dimension of the orbit of `Z` in `g`.
    pub dim_cone: usize,
    pub dim_perp: usize,
    #[serde(rename = "dim_F")]
    pub dim_f: usize,
    pub orthogonality: bool,
    pub symplectic_rank: usize,
    pub nondegenerate: bool,
    pub grading_element: Option<Vec<String>>,
}

/// Checks `z_[Z] ⊂ Z^⊥`, the rank of `(X, Y) -> <[X, Y], Z>` on a
/// complement `F` of `z_[Z]` in `Z^⊥`, and solves `[H, Z] = Z`.
pub fn contact_check(l: &LieAlgebra, z: &LieVector) -> Result<ContactCheckResult> {
    let zz = centralizer_line(l, z)?;
    let d = l.dim();
    let kz: Vec<Rational> = (0..d).map(|i| l.killing(&l.basis_vector(i), z)).collect();
    let perp = nullspace(&vec![kz], d);
    let orthogonality = zz.iter().all(|x| l.killing(x, z).is_zero());

    let mut span: Matrix = zz.iter().filter(|x| l.killing(x, z).is_zero()).cloned().collect();
    let mut cur_rank = rank(&span);
    let mut f_basis = Vec::new();
    for v in &perp {
        span.push(v.clone());
        let r = rank(&span);
        if r > cur_rank {
            cur_rank = r;
            f_basis.push(v.clone());
        } else {
            span.pop();
        }
    }
    let omega: Matrix = f_basis
        .iter()
        .map(|x| f_basis.iter().map(|y| l.killing(&l.bracket(x, y), z)).collect())
        .collect();
    let symplectic_rank = if f_basis.is_empty() { 0 } else { rank(&omega) };

    let cols: Vec<LieVector> = (0..d).map(|j| l.bracket(&l.basis_vector(j), z)).collect();
    let system: Matrix = (0..d).map(|row| (0..d).map(|col| cols[col][row].clone()).collect()).collect();
    let grading_element = solve(&system, z, d).map(|h| h.iter().map(format_rational).collect());

    let ker = centralizer(l, z)?.len();
    Ok(ContactCheckResult {
        dim_g: d,
        dim_centralizer: zz.len(),
        dim_m: d - zz.len(),
        dim_cone: d - ker,
        dim_perp: perp.len(),
        dim_f: f_basis.len(),
        orthogonality,
        symplectic_rank,
        nondegenerate: symplectic_rank == f_basis.len(),
        grading_element,
    })
}

/// Highest-root vector, the standard point of the adjoint variety.
pub fn highest_root_vector(l: &LieAlgebra) -> LieVector {
    l.root_vector(&l.highest_root()).expect("highest root has a vector")
}

#[derive(Clone, Debug, PartialEq)]
pub struct BracketSpan {
    pub bracket: LieVector,
    pub in_span: bool,
}

/// `[X1, X2]` and whether it lies in `span{X1, X2}`.
pub fn bracket_and_span_test(l: &LieAlgebra, x1: &LieVector, x2: &LieVector) -> Result<BracketSpan> {
    l.check_vector(x1)?;
    l.check_vector(x2)?;
    if rank(&vec![x1.clone(), x2.clone()]) < 2 {
        return Err(Error::precondition("X1 and X2 must be linearly independent"));
    }
    let b = l.bracket(x1, x2);
    let in_span = rank(&vec![x1.clone(), x2.clone(), b.clone()]) == 2;
    Ok(BracketSpan { bracket: b, in_span })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::determinant;

    #[test]
    fn sl2_relations() {
        let l = build(RootType::A1).unwrap();
        assert_eq!(l.dim(), 3);
        let (h, e, f) = (l.cartan_element(1), l.root_vector(&[1]).unwrap(), l.root_vector(&[-1]).unwrap());
        let two = |v: &LieVector| v.iter().map(|c| c * rat(2)).collect::<LieVector>();
        assert_eq!(l.bracket(&h, &e), two(&e));
        assert_eq!(l.bracket(&h, &f), two(&f).iter().map(|c| -c).collect::<LieVector>());
        assert_eq!(l.bracket(&e, &f), h);
    }

    #[test]
    fn dimensions() {
        assert_eq!(build(RootType::A2).unwrap().dim(), 8);
        assert_eq!(build(RootType::B2).unwrap().dim(), 10);
        assert_eq!(build(RootType::G2).unwrap().dim(), 14);
        assert!(matches!(build(RootType::A1xA1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn invariants_small() {
        for t in [RootType::A1, RootType::A2, RootType::B2] {
            let l = build(t).unwrap();
            l.check_antisymmetry().unwrap();
            l.check_jacobi().unwrap();
            l.check_killing_invariance().unwrap();
            assert!(!determinant(l.killing_matrix()).is_zero());
        }
    }

    #[test]
    fn g2_highest_root() {
        let l = build(RootType::G2).unwrap();
        assert_eq!(l.highest_root(), vec![3, 2]);
    }

    #[test]
    fn sl2_centralizer_and_contact() {
        let l = build(RootType::A1).unwrap();
        let e = l.root_vector(&[1]).unwrap();
        let z = centralizer_line(&l, &e).unwrap();
        assert_eq!(z.len(), 2);
        assert_eq!(rank(&[z.clone(), vec![e.clone(), l.cartan_element(1)]].concat()), 2);
        let c = contact_check(&l, &e).unwrap();
        assert!(c.orthogonality);
        assert_eq!((c.dim_perp, c.dim_f, c.symplectic_rank), (2, 0, 0));
        assert!(c.grading_element.is_some());
    }

    #[test]
    fn g2_contact_structure() {
        let l = build(RootType::G2).unwrap();
        let c = contact_check(&l, &highest_root_vector(&l)).unwrap();
        assert_eq!(c.dim_centralizer, 9);
        assert_eq!(c.dim_m, 5);
        assert_eq!(c.dim_cone, 6);
        assert!(c.orthogonality);
        assert_eq!(c.dim_f, 4);
        assert_eq!(c.symplectic_rank, 4);
        assert!(c.nondegenerate);
        assert!(c.grading_element.is_some());
    }

    #[test]
    fn generic_semisimple_has_cartan_centralizer() {
        let l = build(RootType::G2).unwrap();
        let mut z = l.zero();
        z[0] = rat(1);
        z[1] = rat(5);
        assert_eq!(centralizer_line(&l, &z).unwrap().len(), 2);
        assert!(contact_check(&l, &z).unwrap().grading_element.is_none());
        assert!(centralizer_line(&l, &l.zero()).is_err());
    }

    #[test]
    fn bracket_span_examples() {
        let l = build(RootType::A1).unwrap();
        let (h, e, f) = (l.cartan_element(1), l.root_vector(&[1]).unwrap(), l.root_vector(&[-1]).unwrap());
        let r = bracket_and_span_test(&l, &h, &e).unwrap();
        assert_eq!(l.label_of(&r.bracket), "2 e(1)");
        assert!(r.in_span);
        let r = bracket_and_span_test(&l, &e, &f).unwrap();
        assert_eq!(r.bracket, h);
        assert!(!r.in_span);
        assert!(bracket_and_span_test(&l, &e, &e).is_err());

        let g = build(RootType::G2).unwrap();
        let r = bracket_and_span_test(&g, &g.root_vector(&[1, 0]).unwrap(), &g.root_vector(&[0, 1]).unwrap()).unwrap();
        let idx = g.root_index(&[1, 1]).unwrap();
        assert!(r.bracket.iter().enumerate().all(|(k, c)| (k == idx) != c.is_zero()));
        assert!(!r.in_span);
    }
}
