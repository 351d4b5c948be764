//! Polynomial bases, basis expansion, and reversed Jensen polynomials.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, binomial, int, pow, sign_pow, Rational};

/// A sequence of rationals indexed by `k = 0, 1, 2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceSpec {
    /// Finite list; indexing past the end is an error.
    #[serde(with = "rational::serde_str::vec")]
    List(Vec<Rational>),
    /// `value(k) = coeffs(k)`, a polynomial in the index.
    PolyInK(Poly),
}

impl SequenceSpec {
    pub fn constant(c: Rational) -> Self {
        SequenceSpec::PolyInK(Poly::constant(c))
    }

    pub fn value(&self, k: usize) -> Result<Rational> {
        match self {
            SequenceSpec::List(v) => v.get(k).cloned().ok_or(Error::SequenceExhausted(k)),
            SequenceSpec::PolyInK(p) => Ok(p.eval(&int(k as i64))),
        }
    }

    /// Values at `0..=n`.
    pub fn prefix(&self, n: usize) -> Result<Vec<Rational>> {
        (0..=n).map(|k| self.value(k)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasisSpec {
    /// `x^n`.
    Standard,
    /// `c_n (a x + b)^n`.
    Affine {
        c: SequenceSpec,
        #[serde(with = "rational::serde_str")]
        a: Rational,
        #[serde(with = "rational::serde_str")]
        b: Rational,
    },
    #[serde(rename = "hermite")]
    GeneralizedHermite {
        #[serde(with = "rational::serde_str")]
        alpha: Rational,
    },
    /// Normalized so that `P_n(1) = 1`.
    Legendre,
}

impl BasisSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            BasisSpec::Affine { a, .. } if a.is_zero() => {
                Err(Error::BadParameter("affine scale a must be nonzero".into()))
            }
            BasisSpec::GeneralizedHermite { alpha } if !alpha.is_positive() => {
                Err(Error::BadParameter("hermite alpha must be positive".into()))
            }
            _ => Ok(()),
        }
    }
}

/// `B_n` for the given basis.
pub fn basis_poly(spec: &BasisSpec, n: usize) -> Result<Poly> {
    spec.validate()?;
    match spec {
        BasisSpec::Standard => Ok(Poly::monomial(Rational::one(), n)),
        BasisSpec::Affine { c, a, b } => {
            Ok(Poly::affine_power(a, b, n).scale(&affine_scale(c, n)?))
        }
        BasisSpec::GeneralizedHermite { alpha } => generalized_hermite(alpha, n),
        BasisSpec::Legendre => Ok(basis_prefix(spec, n)?.pop().expect("nonempty")),
    }
}

fn affine_scale(c: &SequenceSpec, n: usize) -> Result<Rational> {
    let cn = c.value(n)?;
    if cn.is_zero() {
        return Err(Error::BadParameter(format!("affine scale c_{n} is zero")));
    }
    Ok(cn)
}

/// `B_0, ..., B_n`.
pub fn basis_prefix(spec: &BasisSpec, n: usize) -> Result<Vec<Poly>> {
    spec.validate()?;
    match spec {
        BasisSpec::Legendre => {
            let mut out = vec![Poly::one(), Poly::x()];
            for m in 1..n {
                // (m+1) P_{m+1} = (2m+1) x P_m - m P_{m-1}
                let next = &out[m].shift(1).scale(&int(2 * m as i64 + 1))
                    - &out[m - 1].scale(&int(m as i64));
                out.push(next.scale(&Rational::new(1.into(), (m as i64 + 1).into())));
            }
            out.truncate(n + 1);
            Ok(out)
        }
        BasisSpec::GeneralizedHermite { alpha } => {
            let mut e = Poly::one();
            let mut out = vec![Poly::one()];
            let x_over_alpha = Poly::monomial(alpha.recip(), 1);
            let neg_alpha = -alpha.clone();
            for k in 1..=n {
                e = &e.derivative(1) - &(&x_over_alpha * &e);
                out.push(e.scale(&pow(&neg_alpha, k)));
            }
            Ok(out)
        }
        _ => (0..=n).map(|k| basis_poly(spec, k)).collect(),
    }
}

/// `H_n^{(alpha)} = (-alpha)^n exp(x^2/2alpha) D^n exp(-x^2/2alpha)`.
///
/// Writes `D^n exp(-x^2/2alpha) = E_n(x) exp(-x^2/2alpha)` with `E_0 = 1` and
/// `E_n = E_{n-1}' - (x/alpha) E_{n-1}`.
pub fn generalized_hermite(alpha: &Rational, n: usize) -> Result<Poly> {
    let spec = BasisSpec::GeneralizedHermite { alpha: alpha.clone() };
    Ok(basis_prefix(&spec, n)?.pop().expect("nonempty"))
}

/// Coordinates `d_0..d_{deg p}` with `p = sum d_k B_k`.
pub fn expand_in_basis(p: &Poly, spec: &BasisSpec) -> Result<Vec<Rational>> {
    let Some(n) = p.degree().finite() else {
        return Ok(Vec::new());
    };
    let basis = basis_prefix(spec, n)?;
    expand_with(p, &basis)
}

/// Back-substitution against a precomputed triangular basis prefix.
pub fn expand_with(p: &Poly, basis: &[Poly]) -> Result<Vec<Rational>> {
    let Some(n) = p.degree().finite() else {
        return Ok(Vec::new());
    };
    if basis.len() <= n {
        return Err(Error::SequenceExhausted(basis.len()));
    }
    let mut rem = p.clone();
    let mut d = vec![Rational::zero(); n + 1];
    for k in (0..=n).rev() {
        let c = rem.coeff(k);
        if c.is_zero() {
            continue;
        }
        let dk = c / basis[k].leading_coeff();
        rem = &rem - &basis[k].scale(&dk);
        d[k] = dk;
    }
    debug_assert!(rem.is_zero());
    Ok(d)
}

/// `sum d_k B_k`.
pub fn recombine(coords: &[Rational], basis: &[Poly]) -> Poly {
    coords
        .iter()
        .zip(basis)
        .fold(Poly::zero(), |acc, (d, b)| &acc + &b.scale(d))
}

/// `g_k^*(x) = sum_j C(k,j) gamma_j x^{k-j}`.
pub fn jensen_reversed(gammas: &SequenceSpec, k: usize) -> Result<Poly> {
    let coeffs = (0..=k)
        .map(|i| {
            // coefficient of x^i comes from j = k - i
            let j = k - i;
            Ok(Rational::from_integer(binomial(k, j)) * gammas.value(j)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// `g_k^*(-1) = sum_j C(k,j) (-1)^{k-j} gamma_j`, the k-th forward difference
/// of the sequence at 0.
pub fn jensen_at_minus_one(gammas: &SequenceSpec, k: usize) -> Result<Rational> {
    (0..=k).try_fold(Rational::zero(), |acc, j| {
        Ok(acc + Rational::from_integer(binomial(k, j)) * sign_pow(k - j) * gammas.value(j)?)
    })
}
