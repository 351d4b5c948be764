//! Linear operators on R[x], described by their action on a basis.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bases::{basis_prefix, expand_with, recombine, BasisSpec, SequenceSpec};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::realroot::{is_hyperbolic, Hyperbolicity};

/// A linear functional given by its values on `1, x, x^2, ...`; indices past
/// the list take `default`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalSpec {
    #[serde(with = "rational::serde_str::vec")]
    pub values: Vec<Rational>,
    #[serde(with = "rational::serde_str", default = "Rational::zero")]
    pub default: Rational,
}

impl FunctionalSpec {
    pub fn new(values: Vec<Rational>) -> Self {
        FunctionalSpec { values, default: Rational::zero() }
    }

    pub fn on_monomial(&self, n: usize) -> Rational {
        self.values.get(n).cloned().unwrap_or_else(|| self.default.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum OperatorSpec {
    /// `T[f] = alpha(f) P + beta(f) R`.
    #[serde(rename = "rank_two")]
    RankTwo {
        alpha: FunctionalSpec,
        beta: FunctionalSpec,
        #[serde(rename = "P")]
        p: Poly,
        #[serde(rename = "R")]
        r: Poly,
    },
    /// `T[B_n] = gamma_n B_n`.
    #[serde(rename = "diagonal")]
    DiagonalInBasis { basis: BasisSpec, eigenvalues: SequenceSpec },
    /// `T[x^n] = images[n]`; undefined past the list.
    #[serde(rename = "explicit")]
    ExplicitImages { images: Vec<Poly> },
    /// `T = sum_k Q_k D^k`, finitely many terms.
    #[serde(rename = "finite_diffop")]
    FiniteDiffOp {
        #[serde(rename = "Q")]
        q: Vec<Poly>,
    },
}

impl OperatorSpec {
    pub fn identity() -> Self {
        OperatorSpec::FiniteDiffOp { q: vec![Poly::one()] }
    }

    pub fn zero() -> Self {
        OperatorSpec::FiniteDiffOp { q: Vec::new() }
    }

    pub fn finite_diffop(q: Vec<Poly>) -> Self {
        OperatorSpec::FiniteDiffOp { q }
    }

    pub fn diagonal(basis: BasisSpec, eigenvalues: SequenceSpec) -> Self {
        OperatorSpec::DiagonalInBasis { basis, eigenvalues }
    }

    pub fn describe(&self) -> String {
        match self {
            OperatorSpec::RankTwo { p, r, .. } => format!("rank_two(P = {p}, R = {r})"),
            OperatorSpec::DiagonalInBasis { basis, .. } => {
                let name = match basis {
                    BasisSpec::Standard => "standard".to_string(),
                    BasisSpec::Affine { a, b, .. } => format!("affine(a = {a}, b = {b})"),
                    BasisSpec::GeneralizedHermite { alpha } => format!("hermite(alpha = {alpha})"),
                    BasisSpec::Legendre => "legendre".to_string(),
                };
                format!("diagonal in {name} basis")
            }
            OperatorSpec::ExplicitImages { images } => format!("explicit images ({} given)", images.len()),
            OperatorSpec::FiniteDiffOp { q } => {
                format!("finite differential operator of order {}", q.len().saturating_sub(1))
            }
        }
    }
}

/// `T[x^n]`.
pub fn image(spec: &OperatorSpec, n: usize) -> Result<Poly> {
    match spec {
        OperatorSpec::DiagonalInBasis { .. } => Ok(images_through(spec, n)?.pop().expect("nonempty")),
        _ => image_direct(spec, n),
    }
}

fn image_direct(spec: &OperatorSpec, n: usize) -> Result<Poly> {
    match spec {
        OperatorSpec::RankTwo { alpha, beta, p, r } => {
            Ok(&p.scale(&alpha.on_monomial(n)) + &r.scale(&beta.on_monomial(n)))
        }
        OperatorSpec::ExplicitImages { images } => {
            images.get(n).cloned().ok_or(Error::SequenceExhausted(n))
        }
        OperatorSpec::FiniteDiffOp { q } => {
            Ok(apply_diffop(q, &Poly::monomial(Rational::from_integer(1.into()), n)))
        }
        OperatorSpec::DiagonalInBasis { .. } => image(spec, n),
    }
}

/// `T[1], T[x], ..., T[x^n]`.
pub fn images_through(spec: &OperatorSpec, n: usize) -> Result<Vec<Poly>> {
    match spec {
        OperatorSpec::DiagonalInBasis { basis, eigenvalues } => {
            let table = DiagonalTable::new(basis, eigenvalues, n)?;
            (0..=n)
                .map(|m| table.apply(&Poly::monomial(Rational::from_integer(1.into()), m)))
                .collect()
        }
        _ => (0..=n).map(|m| image_direct(spec, m)).collect(),
    }
}

/// Basis prefix and eigenvalues for a diagonal operator, up to a fixed degree.
struct DiagonalTable {
    basis: Vec<Poly>,
    gammas: Vec<Rational>,
}

impl DiagonalTable {
    fn new(basis: &BasisSpec, eigenvalues: &SequenceSpec, n: usize) -> Result<Self> {
        Ok(DiagonalTable {
            basis: basis_prefix(basis, n)?,
            gammas: eigenvalues.prefix(n)?,
        })
    }

    fn apply(&self, p: &Poly) -> Result<Poly> {
        let mut coords = expand_with(p, &self.basis)?;
        for (d, g) in coords.iter_mut().zip(&self.gammas) {
            *d *= g;
        }
        Ok(recombine(&coords, &self.basis))
    }
}

fn apply_diffop(q: &[Poly], p: &Poly) -> Poly {
    q.iter()
        .enumerate()
        .fold(Poly::zero(), |acc, (k, qk)| &acc + &(qk * &p.derivative(k)))
}

/// `T[p]` by linearity.
pub fn apply(spec: &OperatorSpec, p: &Poly) -> Result<Poly> {
    let Some(deg) = p.degree().finite() else {
        return Ok(Poly::zero());
    };
    match spec {
        OperatorSpec::FiniteDiffOp { q } => Ok(apply_diffop(q, p)),
        OperatorSpec::DiagonalInBasis { basis, eigenvalues } => {
            DiagonalTable::new(basis, eigenvalues, deg)?.apply(p)
        }
        _ => {
            let mut acc = Poly::zero();
            for (n, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc = &acc + &image_direct(spec, n)?.scale(c);
                }
            }
            Ok(acc)
        }
    }
}

/// Per-item outcome of [`preserve_test`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemVerdict {
    pub index: usize,
    pub image: Poly,
    pub hyperbolicity: Hyperbolicity,
}

impl ItemVerdict {
    /// Zero images and nonzero constants pass (they have no non-real zeros).
    pub fn is_violation(&self) -> bool {
        self.hyperbolicity == Hyperbolicity::NotHyperbolic
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreserveReport {
    pub items: Vec<ItemVerdict>,
}

impl PreserveReport {
    pub fn violations(&self) -> Vec<&ItemVerdict> {
        self.items.iter().filter(|v| v.is_violation()).collect()
    }

    pub fn violation_indices(&self) -> Vec<usize> {
        self.violations().iter().map(|v| v.index).collect()
    }

    pub fn summary(&self) -> String {
        let k = self.violations().len();
        let n = self.items.len();
        if k == 0 {
            format!("violations: 0 of {n} (no violation found)")
        } else {
            format!("violations: {k} of {n}")
        }
    }
}

/// Applies `spec` to every corpus polynomial and checks the images for
/// hyperbolicity. This can falsify preservation but never certify it.
pub fn preserve_test(spec: &OperatorSpec, corpus: &[Poly]) -> Result<PreserveReport> {
    if let Some(bad) = corpus
        .iter()
        .position(|p| is_hyperbolic(p) != Hyperbolicity::Hyperbolic)
    {
        return Err(Error::CorpusNotHyperbolic(bad));
    }
    let items = corpus
        .par_iter()
        .enumerate()
        .map(|(index, p)| {
            let image = apply(spec, p)?;
            let hyperbolicity = is_hyperbolic(&image);
            Ok(ItemVerdict { index, image, hyperbolicity })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PreserveReport { items })
}
