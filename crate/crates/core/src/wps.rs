//! Weighted projective spaces `P(q_0, ..., q_n)` and vanishing of twisted
//! differential forms on them. Bott's formula covers ordinary `P^n`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

pub const DOLGACHEV_RULE: &str = "Dolgachev 2.3.4";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedPS {
    weights: Vec<u64>,
}

impl WeightedPS {
    /// Weights are stored sorted ascending. Needs at least two weights.
    pub fn new(weights: &[u64]) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::precondition("a weighted projective space needs at least two weights"));
        }
        if weights.contains(&0) {
            return Err(Error::precondition("weights must be positive"));
        }
        let mut w = weights.to_vec();
        w.sort_unstable();
        Ok(WeightedPS { weights: w })
    }

    /// Ordinary `P^n`.
    pub fn projective(n: usize) -> Result<Self> {
        Self::new(&vec![1; n + 1])
    }

    pub fn parse(s: &str) -> Result<Self> {
        let ws = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad weight {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&ws)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    /// Every `n`-element sub-multiset of weights has gcd 1.
    pub fn is_well_formed(&self) -> bool {
        (0..self.weights.len()).all(|skip| {
            self.weights
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .fold(0u64, |g, (_, &w)| g.gcd(&w))
                == 1
        })
    }
}

impl fmt::Display for WeightedPS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "P({})", ws.join(","))
    }
}

pub fn is_well_formed(q: &WeightedPS) -> bool {
    q.is_well_formed()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    AllCohomologyVanishes,
    PossiblyNonzeroH0Only,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DolgachevVerdict {
    pub verdict: Verdict,
    pub minimizing_subset: Vec<u64>,
    pub min_sum: u64,
    pub forms: usize,
    pub twist: i64,
    pub rule: &'static str,
}

/// Cohomology of `Omega^l(k)` on `P(Q)` can be nonzero only in degree 0
/// and only when `k` exceeds the least sum of `l` distinct weights.
/// `k` equal to that sum counts as vanishing.
pub fn dolgachev_vanishing(q: &WeightedPS, l: usize, k: i64) -> Result<DolgachevVerdict> {
    if l == 0 || l > q.dim() {
        return Err(Error::precondition(format!("form degree {l} out of range 1..={}", q.dim())));
    }
    let subset = q.weights[..l].to_vec();
    let min_sum: u64 = subset.iter().sum();
    let verdict = if i128::from(k) > i128::from(min_sum) {
        Verdict::PossiblyNonzeroH0Only
    } else {
        Verdict::AllCohomologyVanishes
    };
    Ok(DolgachevVerdict {
        verdict,
        minimizing_subset: subset,
        min_sum,
        forms: l,
        twist: k,
        rule: DOLGACHEV_RULE,
    })
}

/// `0 -> Omega^1(k) -> (+)_i O(k - q_i) -> O(k) -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerSequence {
    pub middle_twists: Vec<i64>,
    pub right_twist: i64,
    pub middle_rank: usize,
    pub kernel_rank: usize,
}

impl EulerSequence {
    /// First Chern bookkeeping: `sum (k - q_i) - k = n k - sum q_i`.
    pub fn c1_balance_holds(&self, q: &WeightedPS) -> bool {
        let lhs: i64 = self.middle_twists.iter().sum::<i64>() - self.right_twist;
        let sum_q: i64 = q.weights.iter().map(|&w| w as i64).sum();
        lhs == q.dim() as i64 * self.right_twist - sum_q && self.kernel_rank + 1 == self.middle_rank
    }
}

pub fn euler_sequence_terms(q: &WeightedPS, k: i64) -> EulerSequence {
    EulerSequence {
        middle_twists: q.weights.iter().map(|&w| k - w as i64).collect(),
        right_twist: k,
        middle_rank: q.weights.len(),
        kernel_rank: q.dim(),
    }
}

fn binomial(n: i64, k: i64) -> Result<i64> {
    if k < 0 || n < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * i128::from(n - i) / i128::from(i + 1);
        if acc > i128::from(i64::MAX) {
            return Err(Error::unsupported(format!("binomial({n}, {k}) overflows 64 bits")));
        }
    }
    Ok(acc as i64)
}

/// `h^0(P^n, Omega^p(k))` by Bott's formula.
pub fn bott_dimension(n: i64, p: i64, k: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::precondition(format!("dimension {n} must be positive")));
    }
    if p < 0 || p > n {
        return Err(Error::precondition(format!("form degree {p} out of range 0..={n}")));
    }
    if k == 0 && p == 0 {
        return Ok(1);
    }
    if k <= p {
        return Ok(0);
    }
    binomial(k + n - p, k)?
        .checked_mul(binomial(k - 1, p)?)
        .ok_or_else(|| Error::unsupported("Bott dimension overflows 64 bits"))
}
