//! Inputs shared by the benchmarks.

use hyperop_cli::corpus::CorpusGenerator;
use hyperop_core::{BasisSpec, OperatorSpec, Poly, SequenceSpec};
use hyperop_core::rational::rat;

/// Seeded hyperbolic corpus of `count` polynomials of degree at most 8.
pub fn corpus(count: usize) -> Vec<Poly> {
    CorpusGenerator::new(2024, count, 8).generate()
}

/// Hermite-diagonal operator with `gamma_n = 2n`.
pub fn hermite_diagonal() -> OperatorSpec {
    OperatorSpec::diagonal(
        BasisSpec::GeneralizedHermite { alpha: rat(1, 2) },
        SequenceSpec::PolyInK(Poly::from_ints(&[0, 2])),
    )
}

/// Product of `n` distinct linear factors with rational roots.
pub fn wide_product(n: usize) -> Poly {
    let roots: Vec<_> = (0..n as i64).map(|i| rat(2 * i - n as i64, 3)).collect();
    Poly::from_roots(&roots)
}
