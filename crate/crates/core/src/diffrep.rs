//! Differential-operator representation `T = sum_k Q_k(x) D^k` of a linear
//! operator, monotonicity classification, and closed forms for the
//! coefficient polynomials of several operator families.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bases::{basis_prefix, jensen_at_minus_one, BasisSpec, SequenceSpec};
use crate::error::{Error, Result};
use crate::operators::{images_through, OperatorSpec};
use crate::poly::{Degree, Poly};
use crate::rational::{factorial, pow, sign_pow, Rational};

/// The coefficient polynomials `Q_0, ..., Q_N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffOpPrefix {
    #[serde(rename = "N")]
    pub order: usize,
    #[serde(rename = "Q")]
    pub q: Vec<Poly>,
    #[serde(default)]
    pub source: String,
}

impl DiffOpPrefix {
    pub fn new(q: Vec<Poly>, source: impl Into<String>) -> Self {
        assert!(!q.is_empty(), "a prefix holds at least Q_0");
        DiffOpPrefix { order: q.len() - 1, q, source: source.into() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degrees(&self) -> Vec<Degree> {
        self.q.iter().map(Poly::degree).collect()
    }
}

fn rat_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `Q_0..Q_N` by the recursion
/// `Q_n = (T[x^n] - sum_{k<n} Q_k D^k[x^n]) / n!`.
pub fn rep_prefix(spec: &OperatorSpec, order: usize) -> Result<DiffOpPrefix> {
    let images = images_through(spec, order)?;
    let mut q: Vec<Poly> = Vec::with_capacity(order + 1);
    for (n, img) in images.into_iter().enumerate() {
        let mut residual = img;
        for (k, qk) in q.iter().enumerate() {
            // D^k x^n = n!/(n-k)! x^{n-k}
            let ff = rat_int(factorial(n) / factorial(n - k));
            residual = &residual - &qk.shift(n - k).scale(&ff);
        }
        q.push(residual.scale(&rat_int(factorial(n)).recip()));
    }
    Ok(DiffOpPrefix::new(q, spec.describe()))
}

/// `sum_{k<=N} Q_k p^{(k)}`; exact for `deg p <= N`.
pub fn apply_prefix(rep: &DiffOpPrefix, p: &Poly) -> Result<Poly> {
    if let Some(d) = p.degree().finite() {
        if d > rep.order {
            return Err(Error::PrefixTooShort { order: rep.order, degree: d });
        }
    }
    Ok(rep
        .q
        .iter()
        .enumerate()
        .fold(Poly::zero(), |acc, (k, qk)| &acc + &(qk * &p.derivative(k))))
}

/// Monotonicity verdict for `deg Q_k <= deg Q_{k+1}` (for every `k` with
/// `Q_k != 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MonotoneVerdict {
    /// Conclusive: `Q_witness != 0` and `deg Q_witness > deg Q_{witness+1}`.
    NotMonotone { witness: usize },
    /// Prefix-only evidence: no violation among `Q_0..Q_order`.
    MonotoneThrough { order: usize },
    /// A closed form guarantees the degree pattern for every `k`.
    MonotoneProved { reason: String },
}

impl fmt::Display for MonotoneVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonotoneVerdict::NotMonotone { witness } => write!(f, "NotMonotone({witness})"),
            MonotoneVerdict::MonotoneThrough { order } => {
                write!(f, "MonotoneThrough({order}) [prefix evidence only]")
            }
            MonotoneVerdict::MonotoneProved { reason } => write!(f, "MonotoneProved({reason:?})"),
        }
    }
}

/// Least violating `k < N`, if any. A zero `Q_{k+1}` after a nonzero `Q_k` is
/// a violation; leading zero coefficients impose nothing.
pub fn monotone_classify(rep: &DiffOpPrefix) -> MonotoneVerdict {
    for (k, w) in rep.q.windows(2).enumerate() {
        let (dk, dnext) = (w[0].degree(), w[1].degree());
        if dk != Degree::MinusInfinity && dk > dnext {
            return MonotoneVerdict::NotMonotone { witness: k };
        }
    }
    MonotoneVerdict::MonotoneThrough { order: rep.order }
}

/// Classifies `spec` through order `N`, upgrading to `MonotoneProved` when the
/// operator is diagonal in the standard or an affine basis and the prefix
/// shows no violation.
pub fn classify_operator(spec: &OperatorSpec, order: usize) -> Result<(DiffOpPrefix, MonotoneVerdict)> {
    let rep = rep_prefix(spec, order)?;
    let verdict = match (monotone_classify(&rep), spec) {
        (v @ MonotoneVerdict::NotMonotone { .. }, _) => v,
        (v, OperatorSpec::DiagonalInBasis { basis, .. }) => match basis {
            BasisSpec::Standard => MonotoneVerdict::MonotoneProved {
                reason: "diagonal in the standard basis: each Q_k is zero or g_k*(-1)/k! x^k".into(),
            },
            BasisSpec::Affine { .. } => MonotoneVerdict::MonotoneProved {
                reason: "diagonal in an affine basis: each Q_k is zero or a multiple of (ax+b)^k".into(),
            },
            _ => v,
        },
        (v, _) => v,
    };
    Ok((rep, verdict))
}

/// What can be said about finite vs infinite order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "order_evidence", rename_all = "snake_case")]
pub enum OrderEvidence {
    /// `Q_k = 0` for every `k >= vanishes_from`.
    Finite { vanishes_from: usize },
    /// Infinitely many `Q_k` are nonzero.
    Infinite { reason: String },
    /// Only the computed prefix is known.
    PrefixOnly { nonzero: usize, order: usize },
}

impl fmt::Display for OrderEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderEvidence::Finite { vanishes_from } => {
                write!(f, "finite order (Q_k = 0 for k >= {vanishes_from})")
            }
            OrderEvidence::Infinite { reason } => write!(f, "infinite order ({reason})"),
            OrderEvidence::PrefixOnly { nonzero, order } => {
                write!(f, "{nonzero} nonzero coefficients through N = {order}")
            }
        }
    }
}

pub fn order_evidence(spec: &OperatorSpec, rep: &DiffOpPrefix) -> OrderEvidence {
    let prefix_only = || OrderEvidence::PrefixOnly {
        nonzero: rep.q.iter().filter(|p| !p.is_zero()).count(),
        order: rep.order,
    };
    match spec {
        OperatorSpec::FiniteDiffOp { q } => OrderEvidence::Finite {
            vanishes_from: q.iter().rposition(|p| !p.is_zero()).map_or(0, |i| i + 1),
        },
        OperatorSpec::DiagonalInBasis {
            basis: BasisSpec::Standard | BasisSpec::Affine { .. },
            eigenvalues: SequenceSpec::PolyInK(g),
        } => OrderEvidence::Finite {
            // forward differences of a degree-d polynomial vanish past d
            vanishes_from: g.degree().finite().map_or(0, |d| d + 1),
        },
        OperatorSpec::RankTwo { alpha, beta, .. }
            if rep.order >= 1
                && alpha.default.is_zero()
                && beta.default.is_zero()
                && alpha.values.iter().skip(2).all(Zero::is_zero)
                && beta.values.iter().skip(2).all(Zero::is_zero) =>
        {
            if rep.q[0].is_zero() && rep.q[1].is_zero() {
                OrderEvidence::Finite { vanishes_from: 0 }
            } else {
                OrderEvidence::Infinite {
                    reason: "T[x^n] = 0 for n >= 2 and the rank-two closed form vanishes for at most one k".into(),
                }
            }
        }
        _ => prefix_only(),
    }
}

/// `Q_k = ((-1)^{k+1}(k-1)/k!) Q_0 x^k + ((-1)^{k+1}/(k-1)!) x^{k-1} Q_1`
/// for rank-two operators with `T[x^n] = 0` for all `n >= 2`.
pub fn closed_rank_two_lemma(q0: &Poly, q1: &Poly, k: usize) -> Result<Poly> {
    if k < 2 {
        return Err(Error::BadIndex(k));
    }
    let s = sign_pow(k + 1);
    let c0 = &s * Rational::new(BigInt::from(k - 1), factorial(k));
    let c1 = &s * rat_int(factorial(k - 1)).recip();
    Ok(&q0.shift(k).scale(&c0) + &q1.shift(k - 1).scale(&c1))
}

/// `(g_k^*(-1)/k!) x^k`: coefficients of an operator diagonal in the
/// standard basis.
pub fn closed_standard_diagonal(gammas: &SequenceSpec, k: usize) -> Result<Poly> {
    let g = jensen_at_minus_one(gammas, k)?;
    Ok(Poly::monomial(g / rat_int(factorial(k)), k))
}

/// Coefficients of an operator diagonal in `c_k (a x + b)^k`:
/// `Q_k = (-1)^k (ax+b)^k / (k! a^k) * (gamma_0 - sum_{j=1}^k C(k,j) (-1)^{j+1} gamma_j)`.
/// Independent of the scaling sequence `c_k`.
pub fn closed_affine(gammas: &SequenceSpec, a: &Rational, b: &Rational, k: usize) -> Result<Poly> {
    if a.is_zero() {
        return Err(Error::BadParameter("affine scale a must be nonzero".into()));
    }
    if k == 0 {
        return Ok(Poly::constant(gammas.value(0)?));
    }
    let mut inner = gammas.value(0)?;
    for j in 1..=k {
        inner -= rat_int(crate::rational::binomial(k, j)) * sign_pow(j + 1) * gammas.value(j)?;
    }
    let scale = sign_pow(k) * inner / (rat_int(factorial(k)) * pow(a, k));
    Ok(Poly::affine_power(a, b, k).scale(&scale))
}

/// Coefficients of an operator diagonal in the generalized Hermite basis:
/// `Q_k = sum_{j<=k/2} (-alpha)^j / (j! (k-2j)!) g_{k-j}^*(-1) H_{k-2j}^{(alpha)}`.
pub fn closed_hermite(gammas: &SequenceSpec, alpha: &Rational, k: usize) -> Result<Poly> {
    if !alpha.is_positive() {
        return Err(Error::BadParameter("hermite alpha must be positive".into()));
    }
    let hermite = basis_prefix(&BasisSpec::GeneralizedHermite { alpha: alpha.clone() }, k)?;
    let neg_alpha = -alpha.clone();
    let mut acc = Poly::zero();
    for j in 0..=k / 2 {
        let g = jensen_at_minus_one(gammas, k - j)?;
        if g.is_zero() {
            continue;
        }
        let c = pow(&neg_alpha, j) * g / rat_int(factorial(j) * factorial(k - 2 * j));
        acc = &acc + &hermite[k - 2 * j].scale(&c);
    }
    Ok(acc)
}

/// Whether every `Q_k` in the prefix has degree `deg Q_0 + k` and leading
/// coefficient `(-1)^k / k!` times that of `Q_0`.
pub fn leading_profile_check(rep: &DiffOpPrefix) -> Result<bool> {
    let q0 = &rep.q[0];
    let d0 = q0.degree().finite().ok_or(Error::ZeroQ0)?;
    let lc0 = q0.leading_coeff();
    Ok(rep.q.iter().enumerate().all(|(k, qk)| {
        qk.degree() == Degree::Finite(d0 + k)
            && qk.leading_coeff() == &lc0 * sign_pow(k) / rat_int(factorial(k))
    }))
}

/// `T^* = sum_k Q_k^* D^k`, each coefficient polynomial reversed.
pub fn reverse_rep(rep: &DiffOpPrefix) -> DiffOpPrefix {
    DiffOpPrefix {
        order: rep.order,
        q: rep.q.iter().map(Poly::reverse).collect(),
        source: format!("reversal of {}", rep.source),
    }
}

/// Leading coefficient of each `Q_k` (zero for `Q_k = 0`), i.e. `Q_k^*(0)`.
pub fn leading_coeffs(rep: &DiffOpPrefix) -> Vec<Rational> {
    rep.q.iter().map(Poly::leading_coeff).collect()
}
