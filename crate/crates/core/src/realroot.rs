//! Exact real-root analysis: Sturm chains, root counting and isolation,
//! hyperbolicity and zero interlacing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{sign, Degree, Poly};
use crate::rational::{int, Rational};

/// Signed remainder sequence `p, p', -rem(p, p'), ...`, stopping before the
/// first zero remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<Poly>,
    // integer coefficients of every member, set for primitive chains
    integral: Option<Vec<Vec<BigInt>>>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Result<Self> {
        Self::build(p, |r| r)
    }

    /// Same sign pattern as [`SturmChain::new`], but every member is scaled by
    /// a positive constant to a primitive integer polynomial. Much cheaper to
    /// evaluate at many points.
    pub(crate) fn primitive(p: &Poly) -> Result<Self> {
        let mut chain = Self::build(&primitive_part(p), |r| primitive_part(&r))?;
        let ints = chain.chain.iter().map(|m| m.coeffs().iter().map(|c| c.to_integer()).collect()).collect();
        chain.integral = Some(ints);
        Ok(chain)
    }

    fn build(p: &Poly, normalize: impl Fn(Poly) -> Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.clone()];
        let d = p.derivative(1);
        if d.is_zero() {
            return Ok(SturmChain { chain, integral: None });
        }
        chain.push(normalize(d));
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(normalize(-r));
        }
        Ok(SturmChain { chain, integral: None })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.chain
    }

    /// Sign variations of the chain evaluated at `r`, zeros skipped.
    pub fn variations_at(&self, r: &Rational) -> usize {
        match &self.integral {
            Some(ints) => count_variations(ints.iter().map(|cs| int_sign_at(cs, r))),
            None => count_variations(self.chain.iter().map(|p| p.sign_at(r))),
        }
    }

    fn sign_of_first(&self, r: &Rational) -> i8 {
        match &self.integral {
            Some(ints) => int_sign_at(&ints[0], r),
            None => self.chain[0].sign_at(r),
        }
    }

    /// Sign variations at `+inf` (`positive = true`) or `-inf`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.chain.iter().map(|p| {
            let s = sign(&p.leading_coeff());
            match p.degree() {
                Degree::Finite(d) if !positive && d % 2 == 1 => -s,
                _ => s,
            }
        }))
    }
}

/// Sign of `d^m p(n/d)` for `r = n/d`, which is the sign of `p(r)`.
fn int_sign_at(cs: &[BigInt], r: &Rational) -> i8 {
    let (n, d) = (r.numer(), r.denom());
    let Some((lead, rest)) = cs.split_last() else {
        return 0;
    };
    let mut acc = lead.clone();
    let mut dp = BigInt::one();
    for a in rest.iter().rev() {
        dp *= d;
        acc = acc * n + a * &dp;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// `c * p` with `c > 0` chosen so the coefficients are coprime integers.
fn primitive_part(p: &Poly) -> Poly {
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = p.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &den / c.denom())));
    if num.is_zero() {
        return p.clone();
    }
    p.scale(&Rational::new(den, num))
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

pub fn sturm_chain(p: &Poly) -> Result<SturmChain> {
    SturmChain::new(p)
}

/// Range for root counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootRange {
    WholeLine,
    /// Half-open interval `(a, b]`.
    HalfOpen(Rational, Rational),
}

/// Number of distinct real roots of `p` in `range`.
pub fn count_distinct_real_roots(p: &Poly, range: &RootRange) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    count_with_chain(&chain, range)
}

fn count_with_chain(chain: &SturmChain, range: &RootRange) -> Result<usize> {
    let p = &chain.chain[0];
    match range {
        RootRange::WholeLine => {
            Ok(chain.variations_at_infinity(false) - chain.variations_at_infinity(true))
        }
        RootRange::HalfOpen(a, b) => {
            for e in [a, b] {
                if p.eval(e).is_zero() {
                    return Err(Error::EndpointIsRoot(e.to_string()));
                }
            }
            if a >= b {
                return Err(Error::BadParameter(format!("empty interval ({a}, {b}]")));
            }
            Ok(chain.variations_at(a) - chain.variations_at(b))
        }
    }
}

/// Outcome of a hyperbolicity check. The zero polynomial gets its own marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hyperbolicity {
    Hyperbolic,
    NotHyperbolic,
    ZeroPolynomial,
}

impl Hyperbolicity {
    pub fn label(self) -> &'static str {
        match self {
            Hyperbolicity::Hyperbolic => "True",
            Hyperbolicity::NotHyperbolic => "False",
            Hyperbolicity::ZeroPolynomial => "Zero",
        }
    }
}

/// All roots real, counted with multiplicity. Nonzero constants are hyperbolic.
pub fn is_hyperbolic(p: &Poly) -> Hyperbolicity {
    if p.is_zero() {
        return Hyperbolicity::ZeroPolynomial;
    }
    let sf = p.squarefree_part().expect("nonzero");
    let deg = sf.degree().finite().expect("nonzero");
    if deg == 0 {
        return Hyperbolicity::Hyperbolic;
    }
    let n = count_distinct_real_roots(&sf, &RootRange::WholeLine).expect("nonzero");
    if n == deg {
        Hyperbolicity::Hyperbolic
    } else {
        Hyperbolicity::NotHyperbolic
    }
}

/// `1 + max |a_i| / |a_n|`; every real root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &Poly) -> Result<Rational> {
    let n = match p.degree() {
        Degree::Finite(n) if n >= 1 => n,
        _ => return Err(Error::DegreeTooLow),
    };
    let lc = p.leading_coeff().abs();
    let max = p.coeffs()[..n]
        .iter()
        .map(|a| a.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Rational::one() + max)
}

/// Disjoint half-open intervals `(a_i, b_i]`, sorted ascending, each holding
/// exactly one distinct real root. Endpoints are never roots.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Isolation {
    pub intervals: Vec<(Rational, Rational)>,
}

impl Isolation {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Bisection on `[-B, B]` guided by Sturm counts on the squarefree part.
pub fn isolate_roots(p: &Poly) -> Result<Isolation> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.squarefree_part()?;
    if sf.degree() == Degree::Finite(0) {
        return Err(Error::DegreeTooLow);
    }
    let chain = SturmChain::primitive(&sf)?;
    let bound = dyadic_ceil(&cauchy_bound(&sf)?);
    let lo = -bound.clone();
    let total = count_with_chain(&chain, &RootRange::HalfOpen(lo.clone(), bound.clone()))?;

    let mut out = Vec::new();
    let mut stack = vec![(lo, bound, total)];
    while let Some((a, b, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let m = split_point(&chain, &a, &b);
                let left = count_with_chain(&chain, &RootRange::HalfOpen(a.clone(), m.clone()))?;
                stack.push((m.clone(), b, n - left));
                stack.push((a, m, left));
            }
        }
    }
    out.sort();
    Ok(Isolation { intervals: out })
}

/// Smallest power of two `>= r`, for `r >= 1`. Keeps bisection points dyadic.
fn dyadic_ceil(r: &Rational) -> Rational {
    let mut b = Rational::one();
    while &b < r {
        b *= int(2);
    }
    b
}

/// A point strictly inside `(a, b)` that is not a root of `p`.
fn split_point(chain: &SturmChain, a: &Rational, b: &Rational) -> Rational {
    let width = b - a;
    // candidate fractions 1/2, 1/3, 2/3, 1/4, 3/4, ...
    for den in 2i64.. {
        for num in 1..den {
            if num_integer::gcd(num, den) != 1 {
                continue;
            }
            let m = a + &width * Rational::new(num.into(), den.into());
            if chain.sign_of_first(&m) != 0 {
                return m;
            }
        }
    }
    unreachable!("a nonzero polynomial has finitely many roots")
}

fn is_squarefree(p: &Poly) -> Result<bool> {
    Ok(p.gcd(&p.derivative(1))?.degree() == Degree::Finite(0))
}

/// Whether the zeros of `p` and `q` strictly alternate along the real line.
pub fn interlaces(p: &Poly, q: &Poly) -> Result<bool> {
    let (dp, dq) = match (p.degree(), q.degree()) {
        (Degree::Finite(dp), Degree::Finite(dq)) if dp >= 1 && dq >= 1 => (dp, dq),
        _ => return Err(Error::DegreeTooLow),
    };
    for f in [p, q] {
        if is_hyperbolic(f) != Hyperbolicity::Hyperbolic {
            return Err(Error::NotHyperbolic);
        }
    }
    for f in [p, q] {
        if !is_squarefree(f)? {
            return Err(Error::NotSquarefree);
        }
    }
    if p.gcd(q)?.degree() != Degree::Finite(0) {
        return Err(Error::NotCoprime);
    }
    if dp.abs_diff(dq) > 1 {
        return Err(Error::DegreeGapTooLarge);
    }

    let iso = isolate_roots(&(p * q))?;
    let p_chain = SturmChain::primitive(p)?;
    let mut prev: Option<bool> = None;
    for (a, b) in &iso.intervals {
        let owned_by_p = count_with_chain(&p_chain, &RootRange::HalfOpen(a.clone(), b.clone()))? == 1;
        if prev == Some(owned_by_p) {
            return Ok(false);
        }
        prev = Some(owned_by_p);
    }
    Ok(true)
}

/// Sturm-chain sign convention check helper: counts on `(-(B+1), B+1]`.
pub fn count_in_bounding_box(p: &Poly) -> Result<usize> {
    let b = cauchy_bound(p)? + int(1);
    count_distinct_real_roots(p, &RootRange::HalfOpen(-b.clone(), b))
}
