//! Named operators that appear throughout the test suites and scenarios.

use crate::bases::{BasisSpec, SequenceSpec};
use crate::operators::{FunctionalSpec, OperatorSpec};
use crate::poly::Poly;
use crate::rational::{int, rat};

/// `P(x) = x(x+1)(x-1)`.
pub fn cubic_p() -> Poly {
    Poly::from_ints(&[0, -1, 0, 1])
}

/// `R(x) = x^2 - 1/4`.
pub fn quadratic_r() -> Poly {
    Poly::new(vec![rat(-1, 4), int(0), int(1)])
}

/// `T[f] = f'(0) P + f(0) R`: infinite order, hyperbolicity preserving, and
/// not monotone (`deg Q_0 = 2 > 1 = deg Q_1`).
pub fn rank_two_nonmonotone() -> OperatorSpec {
    OperatorSpec::RankTwo {
        alpha: FunctionalSpec::new(vec![int(0), int(1)]),
        beta: FunctionalSpec::new(vec![int(1)]),
        p: cubic_p(),
        r: quadratic_r(),
    }
}

/// `T = xD + D^2`.
pub fn xd_plus_d2() -> OperatorSpec {
    OperatorSpec::finite_diffop(vec![Poly::zero(), Poly::x(), Poly::one()])
}

/// `T = 2xD - D^2`, diagonal on the Hermite polynomials.
pub fn hermite_two_xd_minus_d2() -> OperatorSpec {
    OperatorSpec::finite_diffop(vec![Poly::zero(), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1])])
}

/// `T = 1 + 2xD - D^2`.
pub fn one_plus_two_xd_minus_d2() -> OperatorSpec {
    OperatorSpec::finite_diffop(vec![Poly::one(), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1])])
}

/// Legendre-diagonal operator with eigenvalues `k^2 + a k + b`.
pub fn legendre_quadratic(a: i64, b: i64) -> OperatorSpec {
    OperatorSpec::diagonal(
        BasisSpec::Legendre,
        SequenceSpec::PolyInK(Poly::from_ints(&[b, a, 1])),
    )
}
