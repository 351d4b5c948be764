//! Truncated operator symbols `G_T(z, w) = sum_k (-1)^k T[z^k] w^k / k!`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::{images_through, OperatorSpec};
use crate::poly::Poly;
use crate::rational::{factorial, sign_pow, Rational};
use crate::realroot::{is_hyperbolic, Hyperbolicity};

/// A bivariate series truncated at w-order `order`; entry `k` is the
/// coefficient of `w^k`, a polynomial in `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedBiSeries {
    pub order: usize,
    pub w_coeffs: Vec<Poly>,
}

impl TruncatedBiSeries {
    pub fn new(w_coeffs: Vec<Poly>) -> Self {
        assert!(!w_coeffs.is_empty(), "series holds at least the w^0 entry");
        TruncatedBiSeries { order: w_coeffs.len() - 1, w_coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedBiSeries::new(vec![Poly::zero(); order + 1])
    }

    /// The polynomial in `z` obtained by setting `w` to `w0` in the truncation.
    pub fn specialize_w(&self, w0: &Rational) -> Poly {
        self.w_coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &acc.scale(w0) + c)
    }
}

/// `G_T` through w-order `order`.
pub fn symbol(spec: &OperatorSpec, order: usize) -> Result<TruncatedBiSeries> {
    let coeffs = images_through(spec, order)?
        .into_iter()
        .enumerate()
        .map(|(k, img)| img.scale(&(sign_pow(k) / Rational::from_integer(factorial(k)))))
        .collect();
    Ok(TruncatedBiSeries::new(coeffs))
}

/// `G(z, w) -> G(z, -w)`.
pub fn substitute_neg_w(s: &TruncatedBiSeries) -> TruncatedBiSeries {
    TruncatedBiSeries::new(
        s.w_coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&sign_pow(k)))
            .collect(),
    )
}

/// `G(z, w) -> G(-z, w)`.
pub fn substitute_neg_z(s: &TruncatedBiSeries) -> TruncatedBiSeries {
    TruncatedBiSeries::new(
        s.w_coeffs
            .iter()
            .map(|c| c.compose_affine(&-Rational::from_integer(1.into()), &Rational::zero()))
            .collect(),
    )
}

/// `coeff * z^z_pow * w^w_pow`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub z_pow: usize,
    pub w_pow: usize,
    pub coeff: Rational,
}

impl Monomial {
    pub fn new(z_pow: usize, w_pow: usize, coeff: Rational) -> Self {
        Monomial { z_pow, w_pow, coeff }
    }
}

/// Closed-form right-hand sides for symbol identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReferenceExpr {
    /// `e^{zw}`.
    ExpZw,
    /// `(sum of monomials) * e^{zw}`.
    PolyTimesExpZw(Vec<Monomial>),
}

pub fn reference_series(expr: &ReferenceExpr, order: usize) -> TruncatedBiSeries {
    let unit = [Monomial::new(0, 0, Rational::from_integer(1.into()))];
    let monomials: &[Monomial] = match expr {
        ReferenceExpr::ExpZw => &unit,
        ReferenceExpr::PolyTimesExpZw(m) => m,
    };
    // w^n collects c z^i * z^{n-j} / (n-j)! from each c z^i w^j
    let coeffs = (0..=order)
        .map(|n| {
            monomials
                .iter()
                .filter(|m| m.w_pow <= n)
                .fold(Poly::zero(), |acc, m| {
                    let e = n - m.w_pow;
                    let c = &m.coeff / Rational::from_integer(factorial(e));
                    &acc + &Poly::monomial(c, m.z_pow + e)
                })
        })
        .collect();
    TruncatedBiSeries::new(coeffs)
}

/// Exact entrywise equality; the orders must agree.
pub fn series_eq(s1: &TruncatedBiSeries, s2: &TruncatedBiSeries) -> Result<bool> {
    if s1.order != s2.order {
        return Err(Error::OrderMismatch(s1.order, s2.order));
    }
    Ok(s1.w_coeffs == s2.w_coeffs)
}

/// Outcome of specializing `w` to a real value in a truncated symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeResult {
    pub w: Rational,
    pub specialization: Poly,
    pub hyperbolicity: Hyperbolicity,
}

impl ProbeResult {
    pub fn label(&self) -> &'static str {
        match self.hyperbolicity {
            Hyperbolicity::NotHyperbolic => "truncation not real-rooted in z",
            _ => "no evidence against",
        }
    }
}

/// Real stability forces `z -> G(z, w0)` to be real-rooted for real `w0`.
/// On a truncation this is only a heuristic probe and never a certificate.
pub fn probe_real_specializations(s: &TruncatedBiSeries, ws: &[Rational]) -> Vec<ProbeResult> {
    ws.iter()
        .map(|w| {
            let specialization = s.specialize_w(w);
            let hyperbolicity = is_hyperbolic(&specialization);
            ProbeResult { w: w.clone(), specialization, hyperbolicity }
        })
        .collect()
}
