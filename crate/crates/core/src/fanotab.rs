//! Fano threefolds of Picard number one and a rule engine for
//! `h^0(V, Ω^1_V(1))`. Each report step is tagged as computed or cited.

use serde::{Deserialize, Serialize};

use crate::chern::{hrr_chi, twist_chern, IntersectionModel};
use crate::error::{Error, Result};
use crate::exact::{format_rational, MultiPoly};
use crate::schubert::{anticanonical_gp, build_root_system, integrate_gb, RootType};
use crate::wps::{bott_dimension, dolgachev_vanishing, euler_sequence_terms, Verdict, WeightedPS};

const TABLE_SOURCE: &str = include_str!("../data/fano_table.toml");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HermitianType {
    DIII,
    CI,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Description {
    WpsHypersurface {
        weights: Vec<u64>,
        degree: u64,
    },
    CompleteIntersection {
        ambient_dim: usize,
        degrees: Vec<i64>,
    },
    GrassmannianSection {
        k: usize,
        n: usize,
        codim: usize,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        extra_degrees: Vec<i64>,
    },
    HermitianSection {
        htype: HermitianType,
        dim: usize,
        embedding_dim: usize,
        degree: i64,
        codim: usize,
    },
    G2ContactSection {
        codim: usize,
    },
    BundleZeroLocus {
        tag: String,
    },
    /// Section of degree `section_degree` of a weighted hypersurface.
    DoubleStructure {
        weights: Vec<u64>,
        degree: u64,
        section_degree: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoRecord {
    pub no: u32,
    pub r: i64,
    pub d: i64,
    pub g: i64,
    pub label: String,
    pub description: Description,
}

#[derive(Deserialize)]
struct TableFile {
    row: Vec<FanoRecord>,
}

/// Parses and validates a table in the checked-in TOML format.
pub fn parse_table(source: &str) -> Result<Vec<FanoRecord>> {
    let file: TableFile = toml::from_str(source).map_err(|e| Error::Parse(e.to_string()))?;
    for rec in &file.row {
        validate_record(rec)?;
    }
    Ok(file.row)
}

/// The 18 rows.
pub fn fano_table() -> Vec<FanoRecord> {
    parse_table(TABLE_SOURCE).expect("checked-in table is valid")
}

pub fn row(no: u32) -> Result<FanoRecord> {
    fano_table()
        .into_iter()
        .find(|r| r.no == no)
        .ok_or_else(|| Error::precondition(format!("no row {no}; rows are 1..=18")))
}

/// `g = r^3 d / 2 + 1`.
pub fn genus_of(r: i64, d: i64) -> Result<i64> {
    let twice = r * r * r * d;
    if twice % 2 != 0 {
        return Err(Error::precondition(format!("r^3 d = {twice} is odd; genus not integral")));
    }
    Ok(twice / 2 + 1)
}

/// `|-K_V|` maps to `P^(g+1)`.
pub fn embedding_target_dim(g: i64) -> Result<i64> {
    if g < 2 {
        return Err(Error::precondition("genus must be at least 2"));
    }
    Ok(g + 1)
}

fn factorial(n: i64) -> i64 {
    (1..=n).product()
}

/// Plücker degree of `Gr(k, n)`: `(k(n-k))! prod_{i<k} i! / (n-k+i)!`.
pub fn grassmannian_degree(k: usize, n: usize) -> i64 {
    let (k, n) = (k as i64, n as i64);
    let mut num = factorial(k * (n - k));
    for i in 0..k {
        num = num * factorial(i) / factorial(n - k + i);
    }
    num
}

/// Dimension of the variety and its degree, where the data determine them.
fn dimension_and_degree(desc: &Description) -> (Option<usize>, Option<i64>) {
    match desc {
        Description::WpsHypersurface { weights, degree } => {
            let prod: u64 = weights.iter().product();
            let deg = (*degree % prod == 0).then(|| (*degree / prod) as i64);
            (Some(weights.len().saturating_sub(2)), deg)
        }
        Description::CompleteIntersection { ambient_dim, degrees } => {
            (ambient_dim.checked_sub(degrees.len()), Some(degrees.iter().product()))
        }
        Description::GrassmannianSection { k, n, codim, extra_degrees } => (
            (k * (n - k)).checked_sub(codim + extra_degrees.len()),
            Some(grassmannian_degree(*k, *n) * extra_degrees.iter().product::<i64>()),
        ),
        Description::HermitianSection { dim, degree, codim, .. } => (dim.checked_sub(*codim), Some(*degree)),
        Description::G2ContactSection { codim } => (5usize.checked_sub(*codim), None),
        Description::BundleZeroLocus { .. } => (Some(12 - 9), None),
        Description::DoubleStructure { weights, degree, section_degree } => {
            let prod: u64 = weights.iter().product();
            let num = *degree as i64 * section_degree;
            let deg = (num % prod as i64 == 0).then(|| num / prod as i64);
            (Some(weights.len().saturating_sub(3)), deg)
        }
    }
}

pub fn validate_record(rec: &FanoRecord) -> Result<()> {
    if !(1..=4).contains(&rec.r) {
        return Err(Error::inconsistency(format!("row {}: index {} outside 1..=4", rec.no, rec.r)));
    }
    if genus_of(rec.r, rec.d)? != rec.g {
        return Err(Error::inconsistency(format!("row {}: genus column disagrees with r^3 d / 2 + 1", rec.no)));
    }
    let genus_ok = match rec.r {
        1 => (2..=12).contains(&rec.g) && rec.g != 11,
        2 => [5, 9, 13, 17, 21].contains(&rec.g),
        _ => true,
    };
    if !genus_ok {
        return Err(Error::inconsistency(format!("row {}: genus {} not allowed for index {}", rec.no, rec.g, rec.r)));
    }
    let (dim, deg) = dimension_and_degree(&rec.description);
    if dim != Some(3) {
        return Err(Error::inconsistency(format!("row {}: description is not a threefold", rec.no)));
    }
    if let Some(deg) = deg {
        if deg != rec.d {
            return Err(Error::inconsistency(format!(
                "row {}: description has degree {deg}, table says {}",
                rec.no, rec.d
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum H0 {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "3-general")]
    ThreeGeneral,
}

impl H0 {
    pub fn as_str(self) -> &'static str {
        match self {
            H0::Zero => "0",
            H0::One => "1",
            H0::ThreeGeneral => "3-general",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Computed,
    Cited,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub rule: String,
    pub citation: String,
    pub basis: Basis,
    pub inputs: String,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub row: u32,
    pub r: i64,
    pub d: i64,
    pub g: i64,
    pub h0: H0,
    pub trace: Vec<TraceEntry>,
    pub axioms: Vec<String>,
}

/// Rejects reports with an empty trace or an uncited step.
pub fn validate_report(rep: &VanishingReport) -> Result<()> {
    if rep.trace.is_empty() {
        return Err(Error::inconsistency(format!("row {}: empty rule trace", rep.row)));
    }
    if let Some(e) = rep.trace.iter().find(|e| e.citation.trim().is_empty()) {
        return Err(Error::inconsistency(format!("row {}: rule {:?} has no citation", rep.row, e.rule)));
    }
    Ok(())
}

/// What is known about the ambient `M` of a hypersurface `V ∈ |O_M(d)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AmbientFacts {
    pub h0_omega1_twist1_zero: bool,
    pub b2: i64,
    pub dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CiVerdict {
    Vanishes,
    Inconclusive,
}

/// Hypersurface step: with `h^0(M, Ω^1_M(1)) = 0` and `dim M >= 4`, a smooth
/// `V ∈ |O_M(d)|` has `h^0(V, Ω^1_V(1)) = 0` when `d >= 2`, or `d = 1` and
/// `b_2(M) = 1`.
pub fn hypersurface_rule(ambient: AmbientFacts, d: i64) -> Result<CiVerdict> {
    if ambient.dim < 4 {
        return Err(Error::precondition(format!("ambient dimension {} < 4", ambient.dim)));
    }
    let ok = ambient.h0_omega1_twist1_zero && (d >= 2 || (d == 1 && ambient.b2 == 1));
    Ok(if ok { CiVerdict::Vanishes } else { CiVerdict::Inconclusive })
}

struct Builder {
    trace: Vec<TraceEntry>,
    axioms: Vec<String>,
}

impl Builder {
    fn push(&mut self, rule: &str, citation: &str, basis: Basis, inputs: String, verdict: impl Into<String>) {
        self.trace.push(TraceEntry {
            rule: rule.into(),
            citation: citation.into(),
            basis,
            inputs,
            verdict: verdict.into(),
        });
    }

    /// Chains the hypersurface step through `degrees`, starting from an
    /// ambient with vanishing `h^0(Ω^1(1))` and `b_2 = 1`.
    fn chain(&mut self, start_dim: usize, degrees: &[i64]) -> Result<bool> {
        let mut dim = start_dim;
        let mut all = true;
        for &d in degrees {
            let facts = AmbientFacts {
                h0_omega1_twist1_zero: all,
                b2: 1,
                dim,
            };
            let v = hypersurface_rule(facts, d)?;
            let (verdict, citation) = match v {
                CiVerdict::Vanishes if d >= 2 => ("vanishes", "Kodaira vanishing; Kodaira-Akizuki-Nakano vanishing"),
                CiVerdict::Vanishes => ("vanishes", "Lefschetz hyperplane theorem; h^{1,1}(M) = 1"),
                CiVerdict::Inconclusive => ("inconclusive", "hypersurface step hypotheses not met"),
            };
            self.push(
                "hypersurface section",
                citation,
                Basis::Computed,
                format!("dim M = {dim}, b2(M) = 1, d = {d}, h0(M, Omega^1(1)) = 0: {}", facts.h0_omega1_twist1_zero),
                verdict,
            );
            all &= v == CiVerdict::Vanishes;
            dim -= 1;
        }
        if degrees.len() > 1 {
            self.axioms
                .push("b2 = 1 for the intermediate complete intersections (Lefschetz hyperplane theorem)".into());
        }
        Ok(all)
    }

    fn weighted_hypersurface(&mut self, weights: &[u64], degree: u64) -> Result<bool> {
        let q = WeightedPS::new(weights)?;
        let well_formed = q.is_well_formed();
        let divisible = weights.iter().all(|w| degree.is_multiple_of(*w));
        self.push(
            "weighted ambient hypotheses",
            "Dolgachev, weighted projective varieties",
            Basis::Computed,
            format!("{q}, n = {}, degree {degree}", q.dim()),
            format!(
                "well-formed: {well_formed}, n >= 4: {}, degree divisible by all weights: {divisible}",
                q.dim() >= 4
            ),
        );
        let euler = euler_sequence_terms(&q, 1);
        let v = dolgachev_vanishing(&q, 1, 1)?;
        self.push(
            "Dolgachev vanishing on the ambient",
            v.rule,
            Basis::Computed,
            format!(
                "{q}, l = 1, k = 1, Euler sequence middle twists {:?}, least weight sum {:?} = {}",
                euler.middle_twists, v.minimizing_subset, v.min_sum
            ),
            format!("{:?}: h0(P(Q), Omega^1(1)) = 0", v.verdict),
        );
        let ok = well_formed && divisible && q.dim() >= 4 && v.verdict == Verdict::AllCohomologyVanishes;
        self.push(
            "weighted hypersurface",
            "Dolgachev 2.3.4; Kodaira vanishing; Lefschetz hyperplane theorem",
            Basis::Computed,
            format!("V in |O(d)|, d = {degree}"),
            if ok { "vanishes" } else { "inconclusive" },
        );
        self.axioms
            .push(format!("V is smooth and contained in the regular locus of {q}"));
        Ok(ok)
    }
}

/// Runs the rule engine on one row.
pub fn classify_row(rec: &FanoRecord) -> Result<VanishingReport> {
    validate_record(rec)?;
    let mut b = Builder {
        trace: Vec::new(),
        axioms: Vec::new(),
    };
    let h0 = match &rec.description {
        Description::CompleteIntersection { ambient_dim, degrees } => {
            if rec.r >= 3 {
                b.push(
                    "index characterisation",
                    "Kobayashi-Ochiai",
                    Basis::Cited,
                    format!("r = {}", rec.r),
                    if rec.r == 4 { "V = P^3" } else { "V = Q_3" },
                );
            }
            let n = *ambient_dim as i64;
            let h = bott_dimension(n, 1, 1)?;
            b.push(
                "Bott formula",
                "Bott",
                Basis::Computed,
                format!("h0(P^{n}, Omega^1(1))"),
                h.to_string(),
            );
            if h == 0 && b.chain(*ambient_dim, degrees)? {
                H0::Zero
            } else {
                return Err(Error::inconsistency(format!("row {}: vanishing chain inconclusive", rec.no)));
            }
        }
        Description::WpsHypersurface { weights, degree } => {
            if !b.weighted_hypersurface(weights, *degree)? {
                return Err(Error::inconsistency(format!("row {}: weighted hypersurface step inconclusive", rec.no)));
            }
            H0::Zero
        }
        Description::DoubleStructure { weights, degree, section_degree } => {
            let first = b.weighted_hypersurface(weights, *degree)?;
            b.axioms.push(
                "the quadratic cone cuts V out of the weighted quartic V' as a smooth member of |O_V'(2)|".into(),
            );
            b.axioms.push("b2(V') = 1 (Lefschetz for the weighted quartic)".into());
            if !(first && b.chain(weights.len() - 2, &[*section_degree])?) {
                return Err(Error::inconsistency(format!("row {}: two-step chain inconclusive", rec.no)));
            }
            H0::Zero
        }
        Description::GrassmannianSection { k, n, codim, extra_degrees } => {
            b.push(
                "Grassmannian vanishing",
                "Snow 1986, Proposition 3.4",
                Basis::Cited,
                format!("Gr({k},{n}), degree {}", grassmannian_degree(*k, *n)),
                "h0(Gr, Omega^1(1)) = 0",
            );
            let mut degrees = vec![1; *codim];
            degrees.extend(extra_degrees);
            if !b.chain(k * (n - k), &degrees)? {
                return Err(Error::inconsistency(format!("row {}: Grassmannian chain inconclusive", rec.no)));
            }
            H0::Zero
        }
        Description::HermitianSection { htype, dim, codim, .. } => {
            b.push(
                "Hermitian symmetric vanishing",
                "Snow 1988; Mukai linear-section model",
                Basis::Cited,
                format!("type {htype:?}, dim {dim}"),
                "h0(M, Omega^1(1)) = 0",
            );
            if !b.chain(*dim, &vec![1; *codim])? {
                return Err(Error::inconsistency(format!("row {}: Hermitian chain inconclusive", rec.no)));
            }
            H0::Zero
        }
        Description::G2ContactSection { codim } => {
            let rs = build_root_system(RootType::G2);
            let k = anticanonical_gp(&rs, 2)?;
            let x = |s: &str| MultiPoly::parse(s, 2);
            let degree = integrate_gb(&rs, &x("x1 x2^5")?)?;
            b.push(
                "G2 adjoint variety",
                "Schubert calculus on G2/B",
                Basis::Computed,
                "G/P_2 with fundamental class x2".into(),
                format!("dim 5, -K = {k}, degree {}", format_rational(&degree)),
            );
            b.push(
                "contact form restriction",
                "Mukai linear-section model; contact sequence on G2/P",
                Basis::Cited,
                format!("codim {codim} linear section of G2/P in P^13"),
                "H0(V, Omega^1(1)) = C, spanned by the restricted contact form",
            );
            b.axioms
                .push("the contact form of G2/P restricts to a nonzero section on every smooth V18 of this type".into());
            H0::One
        }
        Description::BundleZeroLocus { tag } => {
            let s = IntersectionModel::k3(rec.d)?;
            let l = s.generator(0);
            let omega1 = twist_chern(&s.tangent().expect("K3 tangent").dual(), &l)?;
            let chi = hrr_chi(&s, &omega1)?;
            b.push(
                "Riemann-Roch on a hyperplane K3",
                "Hirzebruch-Riemann-Roch; Shokurov (smooth K3 hyperplane section)",
                Basis::Computed,
                format!("{tag}: S in |O_V(1)|, L^2 = {}", rec.d),
                format!("chi(S, Omega^1_S(1)) = {}", format_rational(&chi)),
            );
            b.push(
                "lower bound",
                "Kodaira-Akizuki-Nakano vanishing; h1(V, T_V(-1)) = 0 (Iskovskikh-Prokhorov)",
                Basis::Cited,
                "h1(S, Omega^1_S(1)) >= 1, restriction sequences".into(),
                "h0(V, Omega^1(1)) >= 3",
            );
            b.push(
                "general member",
                "Mukai-Umemura; splitting type on lines",
                Basis::Cited,
                "general V22".into(),
                "h0(V, Omega^1(1)) = 3",
            );
            b.axioms.push("h1(S, Omega^1_S(1)) >= 1".into());
            b.axioms.push("V is a general member of the V22 family".into());
            H0::ThreeGeneral
        }
    };
    let rep = VanishingReport {
        row: rec.no,
        r: rec.r,
        d: rec.d,
        g: rec.g,
        h0,
        trace: b.trace,
        axioms: b.axioms,
    };
    validate_report(&rep)?;
    Ok(rep)
}

/// `0 -> O^k -> (+) O(s_i) -> O(1-a) (+) tau -> 0` on a line, with `tau` torsion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineLedger {
    pub a: i64,
    pub torsion_length: i64,
    pub h0_coker: i64,
    pub h1_coker: i64,
    pub chi_middle: i64,
    pub chi_kernel: i64,
    pub chi_coker: i64,
    /// `a` is determined, rather than the least consistent value.
    pub forced: bool,
}

fn h0_line(m: i64) -> i64 {
    (m + 1).max(0)
}

fn h1_line(m: i64) -> i64 {
    (-m - 1).max(0)
}

/// Determines `a` from Hom-vanishing and cohomology constraints.
pub fn line_restriction_order(splitting: &[i64], kernel_rank: usize) -> Result<LineLedger> {
    if splitting.len() != kernel_rank + 1 {
        return Err(Error::precondition(format!(
            "cokernel of O^{kernel_rank} in a rank {} bundle must have free rank 1",
            splitting.len()
        )));
    }
    let k = kernel_rank as i64;
    let total: i64 = splitting.iter().sum();
    let chi_middle: i64 = splitting.iter().map(|s| s + 1).sum();
    let h0_mid: i64 = splitting.iter().map(|&s| h0_line(s)).sum();
    let h1_mid: i64 = splitting.iter().map(|&s| h1_line(s)).sum();
    let ledger = |a: i64, t: i64, forced: bool| LineLedger {
        a,
        torsion_length: t,
        h0_coker: h0_line(1 - a) + t,
        h1_coker: h1_line(1 - a),
        chi_middle,
        chi_kernel: k,
        chi_coker: (2 - a) + t,
        forced,
    };
    let nonneg: Vec<i64> = splitting.iter().copied().filter(|&s| s >= 0).collect();
    if (nonneg.len() as i64) < k {
        return Err(Error::inconsistency("O^k cannot inject into the nonnegative summands"));
    }
    if nonneg.len() as i64 == k {
        // the kernel lands in the nonnegative part with torsion cokernel;
        // the negative summand survives as the line bundle quotient
        let neg = splitting.iter().copied().find(|&s| s < 0).expect("one negative summand");
        let l = ledger(1 - neg, nonneg.iter().sum(), true);
        if l.h1_coker != h1_mid || l.h0_coker != h0_mid - k {
            return Err(Error::inconsistency("forced quotient violates the cohomology ledger"));
        }
        return Ok(l);
    }
    (0..=h1_mid + 2)
        .map(|a| (a, total - (1 - a)))
        .filter(|&(_, t)| t >= 0)
        .map(|(a, t)| ledger(a, t, false))
        .find(|l| l.h1_coker == h1_mid && l.h0_coker == h0_mid - k)
        .ok_or_else(|| Error::unsupported("no quotient O(1-a) + torsion fits the splitting"))
}
