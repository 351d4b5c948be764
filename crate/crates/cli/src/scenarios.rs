//! Self-contained verification scenarios, one per reproduced result.
//!
//! Every scenario hard-codes its operator and seeded data, so `verify` needs
//! no input files.

use std::collections::BTreeSet;

use hyperop_core::bases::basis_poly;
use hyperop_core::catalog;
use hyperop_core::diffrep::{
    apply_prefix, classify_operator, closed_affine, closed_hermite, closed_rank_two_lemma,
    closed_standard_diagonal, leading_profile_check, monotone_classify, rep_prefix,
};
use hyperop_core::operators::preserve_test;
use hyperop_core::rational::{int, rat};
use hyperop_core::realroot::{count_distinct_real_roots, interlaces, is_hyperbolic, RootRange};
use hyperop_core::symbol::{reference_series, substitute_neg_w, symbol, Monomial, ReferenceExpr};
use hyperop_core::{
    BasisSpec, FunctionalSpec, Hyperbolicity, MonotoneVerdict, OperatorSpec, Poly, Rational, SequenceSpec,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{CorpusGenerator, Xorshift64Star};

pub const SCENARIOS: [&str; 10] = [
    "lemma6",
    "qform",
    "symbol",
    "standard_diag",
    "affine",
    "hermite",
    "legendre",
    "bates",
    "preserve",
    "rank_two_leading",
];

/// The first object that disagreed with its expected value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub what: String,
    pub expected: Value,
    pub actual: Value,
}

pub type Outcome = Result<(), Mismatch>;

fn check<T: Serialize + PartialEq>(what: impl Into<String>, expected: &T, actual: &T) -> Outcome {
    if expected == actual {
        Ok(())
    } else {
        Err(Mismatch {
            what: what.into(),
            expected: serde_json::to_value(expected).unwrap_or(Value::Null),
            actual: serde_json::to_value(actual).unwrap_or(Value::Null),
        })
    }
}

fn check_ok<T, E: std::fmt::Display>(what: &str, r: Result<T, E>) -> Result<T, Mismatch> {
    r.map_err(|e| Mismatch { what: what.into(), expected: json!("success"), actual: json!(e.to_string()) })
}

/// Runs a scenario by name; `None` for unknown names.
pub fn run(name: &str) -> Option<Outcome> {
    let outcome = match name {
        "lemma6" => lemma6(),
        "qform" => qform(),
        "symbol" => symbol_identity(),
        "standard_diag" => standard_diag(),
        "affine" => affine(),
        "hermite" => hermite(),
        "legendre" => legendre(),
        "bates" => bates(),
        "preserve" => preserve(),
        "rank_two_leading" => rank_two_leading(),
        _ => return None,
    };
    Some(outcome)
}

pub fn lemma6() -> Outcome {
    let rep = check_ok("rep_prefix", rep_prefix(&catalog::rank_two_nonmonotone(), 1))?;
    let expected = vec![catalog::quadratic_r(), Poly::new(vec![int(0), rat(-3, 4)])];
    check("Q_0, Q_1", &expected, &rep.q)?;
    check("monotone verdict", &MonotoneVerdict::NotMonotone { witness: 0 }, &monotone_classify(&rep))?;
    let il = check_ok("interlaces", interlaces(&catalog::cubic_p(), &catalog::quadratic_r()))?;
    check("P and R interlace", &true, &il)
}

pub fn qform() -> Outcome {
    let rep = check_ok("rep_prefix", rep_prefix(&catalog::rank_two_nonmonotone(), 25))?;
    for k in 2..=25 {
        let closed = check_ok("closed form", closed_rank_two_lemma(&rep.q[0], &rep.q[1], k))?;
        check(format!("Q_{k}"), &closed, &rep.q[k])?;
        check(format!("Q_{k} nonzero"), &true, &!rep.q[k].is_zero())?;
    }
    Ok(())
}

/// `(z + w) w e^{zw}`.
pub fn symbol_reference() -> ReferenceExpr {
    ReferenceExpr::PolyTimesExpZw(vec![Monomial::new(1, 1, int(1)), Monomial::new(0, 2, int(1))])
}

pub fn symbol_identity() -> Outcome {
    let s = check_ok("symbol", symbol(&catalog::xd_plus_d2(), 8))?;
    let lhs = substitute_neg_w(&s);
    check("G_T(z,-w) for xD + D^2", &reference_series(&symbol_reference(), 8), &lhs)
}

/// 20 sequences of 13 rationals.
pub fn standard_gamma_sets() -> Vec<Vec<Rational>> {
    let mut rng = Xorshift64Star::new(11);
    (0..20).map(|_| (0..13).map(|_| rng.rational(50, 9)).collect()).collect()
}

pub fn standard_diag() -> Outcome {
    for (i, gammas) in standard_gamma_sets().into_iter().enumerate() {
        let seq = SequenceSpec::List(gammas.clone());
        let spec = OperatorSpec::diagonal(BasisSpec::Standard, seq.clone());
        let (rep, verdict) = check_ok("classify", classify_operator(&spec, 12))?;
        for k in 0..=12 {
            let closed = check_ok("closed form", closed_standard_diagonal(&seq, k))?;
            check(format!("set {i}: Q_{k}"), &closed, &rep.q[k])?;
            let xk = Poly::monomial(int(1), k);
            let img = check_ok("apply_prefix", apply_prefix(&rep, &xk))?;
            check(format!("set {i}: T[x^{k}]"), &xk.scale(&gammas[k]), &img)?;
        }
        let proved = matches!(verdict, MonotoneVerdict::MonotoneProved { .. });
        check(format!("set {i}: verdict is MonotoneProved"), &true, &proved)?;
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct AffineCase {
    pub a: Rational,
    pub b: Rational,
    pub c: Vec<Rational>,
    pub gammas: Vec<Rational>,
}

impl AffineCase {
    pub fn basis(&self) -> BasisSpec {
        BasisSpec::Affine { c: SequenceSpec::List(self.c.clone()), a: self.a.clone(), b: self.b.clone() }
    }
}

/// 10 tuples `(a != 0, b, c_0..c_10 != 0, gamma_0..gamma_10)`.
pub fn affine_cases() -> Vec<AffineCase> {
    let mut rng = Xorshift64Star::new(13);
    (0..10)
        .map(|_| AffineCase {
            a: rng.nonzero_rational(9, 5),
            b: rng.rational(9, 5),
            c: (0..11).map(|_| rng.nonzero_rational(9, 5)).collect(),
            gammas: (0..11).map(|_| rng.rational(30, 7)).collect(),
        })
        .collect()
}

pub fn affine() -> Outcome {
    for (i, case) in affine_cases().into_iter().enumerate() {
        let seq = SequenceSpec::List(case.gammas.clone());
        let basis = case.basis();
        let rep = check_ok("rep_prefix", rep_prefix(&OperatorSpec::diagonal(basis.clone(), seq.clone()), 10))?;
        for k in 0..=10 {
            let closed = check_ok("closed form", closed_affine(&seq, &case.a, &case.b, k))?;
            check(format!("case {i}: Q_{k}"), &closed, &rep.q[k])?;
            let qk = check_ok("basis", basis_poly(&basis, k))?;
            let img = check_ok("apply_prefix", apply_prefix(&rep, &qk))?;
            check(format!("case {i}: T[q_{k}]"), &qk.scale(&case.gammas[k]), &img)?;
        }
    }
    Ok(())
}

pub fn hermite_alphas() -> [Rational; 3] {
    [rat(1, 2), int(1), int(3)]
}

/// `gamma_n = 2n` followed by 5 seeded nondecreasing sequences of length 11.
pub fn hermite_gamma_sets() -> Vec<SequenceSpec> {
    let mut rng = Xorshift64Star::new(17);
    let mut sets = vec![SequenceSpec::PolyInK(Poly::from_ints(&[0, 2]))];
    for _ in 0..5 {
        let mut g = vec![rng.rational(10, 3)];
        for _ in 0..10 {
            let step = rat(rng.range(0, 6), rng.range(1, 3));
            let next = g.last().expect("nonempty") + step;
            g.push(next);
        }
        sets.push(SequenceSpec::List(g));
    }
    sets
}

pub fn hermite() -> Outcome {
    for alpha in hermite_alphas() {
        for (i, seq) in hermite_gamma_sets().into_iter().enumerate() {
            let basis = BasisSpec::GeneralizedHermite { alpha: alpha.clone() };
            let rep = check_ok("rep_prefix", rep_prefix(&OperatorSpec::diagonal(basis, seq.clone()), 10))?;
            for k in 0..=10 {
                let closed = check_ok("closed form", closed_hermite(&seq, &alpha, k))?;
                check(format!("alpha {alpha}, set {i}: Q_{k}"), &closed, &rep.q[k])?;
            }
        }
    }
    let basis = BasisSpec::GeneralizedHermite { alpha: rat(1, 2) };
    let seq = SequenceSpec::PolyInK(Poly::from_ints(&[0, 2]));
    let rep = check_ok("rep_prefix", rep_prefix(&OperatorSpec::diagonal(basis, seq), 10))?;
    let mut expected = vec![Poly::zero(), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1])];
    expected.resize(11, Poly::zero());
    check("2xD - D^2 prefix", &expected, &rep.q)
}

/// `[3, 3x, x^2 - 4/3, (2/15)x, -(1 + 4x^2)/105]`.
pub fn legendre_expected_a2_b3() -> Vec<Poly> {
    vec![
        Poly::from_ints(&[3]),
        Poly::from_ints(&[0, 3]),
        Poly::new(vec![rat(-4, 3), int(0), int(1)]),
        Poly::new(vec![int(0), rat(2, 15)]),
        Poly::new(vec![rat(-1, 105), int(0), rat(-4, 105)]),
    ]
}

pub fn legendre() -> Outcome {
    let rep = check_ok("rep_prefix", rep_prefix(&catalog::legendre_quadratic(2, 3), 4))?;
    check("eigenvalues k^2+2k+3", &legendre_expected_a2_b3(), &rep.q)?;
    let rep = check_ok("rep_prefix", rep_prefix(&catalog::legendre_quadratic(1, 3), 10))?;
    let mut expected = vec![Poly::from_ints(&[3]), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1, 0, 1])];
    expected.resize(11, Poly::zero());
    check("eigenvalues k^2+k+3", &expected, &rep.q)
}

pub fn bates() -> Outcome {
    let rep = check_ok("rep_prefix", rep_prefix(&catalog::one_plus_two_xd_minus_d2(), 5))?;
    let mut expected = vec![Poly::one(), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1])];
    expected.resize(6, Poly::zero());
    check("1 + 2xD - D^2 prefix", &expected, &rep.q)?;
    check("monotone verdict", &MonotoneVerdict::NotMonotone { witness: 1 }, &monotone_classify(&rep))
}

pub fn preserve_corpus() -> CorpusGenerator {
    CorpusGenerator::new(2024, 200, 8)
}

pub fn preserve() -> Outcome {
    let corpus = preserve_corpus().generate();
    for (name, op) in [("rank-two counterexample", catalog::rank_two_nonmonotone()), ("xD + D^2", catalog::xd_plus_d2())] {
        let report = check_ok("preserve_test", preserve_test(&op, &corpus))?;
        if let Some(first) = report.violations().first() {
            return Err(Mismatch {
                what: format!("{name}: {}", report.summary()),
                expected: json!("no violations"),
                actual: json!({
                    "index": first.index,
                    "input": corpus[first.index],
                    "image": first.image,
                }),
            });
        }
    }
    let sturm = |cs: &[i64]| count_distinct_real_roots(&Poly::from_ints(cs), &RootRange::WholeLine);
    check("roots of x^2+1", &Ok(0), &sturm(&[1, 0, 1]).map_err(|e| e.to_string()))?;
    check("roots of x^3-x", &Ok(3), &sturm(&[0, -1, 0, 1]).map_err(|e| e.to_string()))?;
    check("roots of x^3-3x+2", &Ok(2), &sturm(&[2, -3, 0, 1]).map_err(|e| e.to_string()))?;
    let hyp = |cs: &[i64]| is_hyperbolic(&Poly::from_ints(cs)) == Hyperbolicity::Hyperbolic;
    check("x^2+1 hyperbolic", &false, &hyp(&[1, 0, 1]))?;
    check("x^3-3x+2 hyperbolic", &true, &hyp(&[2, -3, 0, 1]))
}

/// Rank-two operators with `alpha(1), beta(1) != 0` and interlacing `P`, `R`
/// with `deg P = deg R + 1`.
pub fn rank_two_cases() -> Vec<OperatorSpec> {
    let mut rng = Xorshift64Star::new(19);
    (0..10)
        .map(|_| {
            let d = rng.range(1, 3) as usize;
            let mut roots = BTreeSet::new();
            while roots.len() < 2 * d + 1 {
                roots.insert(rng.rational(12, 4));
            }
            let roots: Vec<Rational> = roots.into_iter().collect();
            let p_roots: Vec<Rational> = roots.iter().step_by(2).cloned().collect();
            let r_roots: Vec<Rational> = roots.iter().skip(1).step_by(2).cloned().collect();
            let functional = |rng: &mut Xorshift64Star| {
                let mut values = vec![rng.nonzero_rational(9, 4)];
                values.extend((0..4).map(|_| rng.rational(9, 4)));
                FunctionalSpec::new(values)
            };
            OperatorSpec::RankTwo {
                alpha: functional(&mut rng),
                beta: functional(&mut rng),
                p: Poly::from_roots(&p_roots).scale(&rng.nonzero_rational(5, 3)),
                r: Poly::from_roots(&r_roots).scale(&rng.nonzero_rational(5, 3)),
            }
        })
        .collect()
}

pub fn rank_two_leading() -> Outcome {
    for (i, op) in rank_two_cases().into_iter().enumerate() {
        if let OperatorSpec::RankTwo { p, r, .. } = &op {
            let il = check_ok("interlaces", interlaces(p, r))?;
            check(format!("case {i}: P, R interlace"), &true, &il)?;
        }
        let rep = check_ok("rep_prefix", rep_prefix(&op, 10))?;
        let profile = check_ok("leading_profile_check", leading_profile_check(&rep))?;
        check(format!("case {i}: leading profile"), &true, &profile)?;
        let all_nonzero = rep.q.iter().all(|q| !q.is_zero());
        check(format!("case {i}: every Q_k nonzero"), &true, &all_nonzero)?;
    }
    Ok(())
}
