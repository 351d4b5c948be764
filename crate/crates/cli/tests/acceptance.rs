//! Acceptance suite. Each test prints one `criterion N (name): PASS|FAIL` line.
//!
//! Run with `cargo test -p hyperop-cli --test acceptance -- --nocapture --test-threads=1`.
//! Expected values are either frozen literals or come from small oracles
//! written here, independent of the closed forms in the core crate.

use hyperop_cli::corpus::Xorshift64Star;
use hyperop_cli::scenarios;
use hyperop_core::bases::{basis_poly, basis_prefix, expand_in_basis};
use hyperop_core::catalog;
use hyperop_core::diffrep::{
    apply_prefix, classify_operator, closed_affine, closed_hermite, closed_rank_two_lemma,
    closed_standard_diagonal, leading_profile_check, monotone_classify, rep_prefix,
};
use hyperop_core::operators::{apply, image, preserve_test};
use hyperop_core::rational::{int, rat};
use hyperop_core::realroot::{count_distinct_real_roots, interlaces, is_hyperbolic, RootRange};
use hyperop_core::symbol::{reference_series, substitute_neg_w, symbol, TruncatedBiSeries};
use hyperop_core::{
    BasisSpec, Degree, FunctionalSpec, Hyperbolicity, MonotoneVerdict, OperatorSpec, Poly, Rational,
    SequenceSpec,
};

type Check = Result<(), String>;

fn report(n: u32, name: &str, result: Check) {
    match result {
        Ok(()) => println!("criterion {n} ({name}): PASS"),
        Err(msg) => {
            println!("criterion {n} ({name}): FAIL: {msg}");
            panic!("criterion {n} ({name}) failed: {msg}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same<T: PartialEq + std::fmt::Debug>(what: &str, expected: &T, actual: &T) -> Check {
    ensure(expected == actual, || format!("{what}: expected {expected:?}, got {actual:?}"))
}

fn fact(n: usize) -> Rational {
    (1..=n as i64).fold(int(1), |acc, i| acc * int(i))
}

fn choose(n: usize, k: usize) -> Rational {
    fact(n) / (fact(k) * fact(n - k))
}

fn neg_one_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn poly(cs: &[Rational]) -> Poly {
    Poly::new(cs.to_vec())
}

fn xk(k: usize) -> Poly {
    Poly::monomial(int(1), k)
}

/// `sum_k Q_k D^k p`, computed directly.
fn act(q: &[Poly], p: &Poly) -> Poly {
    q.iter().enumerate().fold(Poly::zero(), |acc, (k, qk)| acc + qk * &p.derivative(k))
}

/// The defining recursion, driven only by the images `T[x^n]`.
fn recursion_oracle(spec: &OperatorSpec, order: usize) -> Vec<Poly> {
    let mut q: Vec<Poly> = Vec::new();
    for n in 0..=order {
        let residual = image(spec, n).expect("image") - act(&q, &xk(n));
        q.push(residual.scale(&(int(1) / fact(n))));
    }
    q
}

fn rank_two_operator() -> OperatorSpec {
    catalog::rank_two_nonmonotone()
}

#[test]
fn criterion_01_lemma6() {
    let run = || -> Check {
        let rep = rep_prefix(&rank_two_operator(), 1).map_err(|e| e.to_string())?;
        let expected = vec![poly(&[rat(-1, 4), int(0), int(1)]), poly(&[int(0), rat(-3, 4)])];
        same("Q_0, Q_1", &expected, &rep.q)?;
        same("degrees", &vec![Degree::Finite(2), Degree::Finite(1)], &rep.degrees())?;
        same("verdict", &MonotoneVerdict::NotMonotone { witness: 0 }, &monotone_classify(&rep))?;
        let p = poly(&[int(0), int(-1), int(0), int(1)]);
        let r = poly(&[rat(-1, 4), int(0), int(1)]);
        same("interlaces(x^3 - x, x^2 - 1/4)", &Ok(true), &interlaces(&p, &r).map_err(|e| e.to_string()))
    };
    report(1, "lemma6", run());
}

/// `((-1)^{k+1}(k-1)/k!) Q0 x^k + ((-1)^{k+1}/(k-1)!) x^{k-1} Q1`.
fn rank_two_oracle(q0: &Poly, q1: &Poly, k: usize) -> Poly {
    let s = -neg_one_pow(k);
    let a = &s * int(k as i64 - 1) / fact(k);
    let b = &s / fact(k - 1);
    (q0 * &xk(k)).scale(&a) + (q1 * &xk(k - 1)).scale(&b)
}

#[test]
fn criterion_02_qform() {
    let run = || -> Check {
        let op = rank_two_operator();
        let rep = rep_prefix(&op, 25).map_err(|e| e.to_string())?;
        same("prefix against recursion oracle", &recursion_oracle(&op, 25), &rep.q)?;
        for k in 2..=25 {
            let oracle = rank_two_oracle(&rep.q[0], &rep.q[1], k);
            same(&format!("Q_{k} against oracle"), &oracle, &rep.q[k])?;
            let closed = closed_rank_two_lemma(&rep.q[0], &rep.q[1], k).map_err(|e| e.to_string())?;
            same(&format!("Q_{k} against closed_rank_two_lemma"), &closed, &rep.q[k])?;
            ensure(!rep.q[k].is_zero(), || format!("Q_{k} vanished"))?;
        }
        Ok(())
    };
    report(2, "qform", run());
}

#[test]
fn criterion_03_symbol() {
    let run = || -> Check {
        let n = 8;
        let s = symbol(&catalog::xd_plus_d2(), n).map_err(|e| e.to_string())?;
        let lhs = substitute_neg_w(&s);
        // (z + w) w e^{zw}: coefficient of w^k is z^k/(k-1)! + z^{k-2}/(k-2)!.
        let oracle: Vec<Poly> = (0..=n)
            .map(|k| {
                let mut p = Poly::zero();
                if k >= 1 {
                    p = p + Poly::monomial(int(1) / fact(k - 1), k);
                }
                if k >= 2 {
                    p = p + Poly::monomial(int(1) / fact(k - 2), k - 2);
                }
                p
            })
            .collect();
        same("G_T(z,-w) against oracle", &TruncatedBiSeries::new(oracle.clone()), &lhs)?;
        let reference = reference_series(&scenarios::symbol_reference(), n);
        same("reference_series against oracle", &TruncatedBiSeries::new(oracle), &reference)
    };
    report(3, "symbol", run());
}

#[test]
fn criterion_04_standard_diag() {
    let run = || -> Check {
        let sets = scenarios::standard_gamma_sets();
        same("number of sequences", &20, &sets.len())?;
        for (i, gammas) in sets.into_iter().enumerate() {
            same("sequence length", &13, &gammas.len())?;
            let seq = SequenceSpec::List(gammas.clone());
            let spec = OperatorSpec::diagonal(BasisSpec::Standard, seq.clone());
            let (rep, verdict) = classify_operator(&spec, 12).map_err(|e| e.to_string())?;
            for k in 0..=12 {
                // sum_j C(k,j) gamma_j (-1)^{k-j} / k! x^k
                let g: Rational = (0..=k).map(|j| choose(k, j) * &gammas[j] * neg_one_pow(k - j)).sum();
                let oracle = Poly::monomial(g / fact(k), k);
                same(&format!("set {i}: Q_{k} against oracle"), &oracle, &rep.q[k])?;
                let closed = closed_standard_diagonal(&seq, k).map_err(|e| e.to_string())?;
                same(&format!("set {i}: Q_{k} against closed form"), &closed, &rep.q[k])?;
                let img = apply_prefix(&rep, &xk(k)).map_err(|e| e.to_string())?;
                same(&format!("set {i}: T[x^{k}]"), &xk(k).scale(&gammas[k]), &img)?;
            }
            ensure(matches!(verdict, MonotoneVerdict::MonotoneProved { .. }), || {
                format!("set {i}: verdict {verdict}")
            })?;
        }
        Ok(())
    };
    report(4, "standard_diag", run());
}

#[test]
fn criterion_05_affine() {
    let run = || -> Check {
        let cases = scenarios::affine_cases();
        same("number of cases", &10, &cases.len())?;
        for (i, case) in cases.into_iter().enumerate() {
            ensure(case.a != int(0), || format!("case {i}: a = 0"))?;
            ensure(case.c.iter().all(|c| *c != int(0)), || format!("case {i}: some c_k = 0"))?;
            let seq = SequenceSpec::List(case.gammas.clone());
            let spec = OperatorSpec::diagonal(case.basis(), seq.clone());
            let rep = rep_prefix(&spec, 10).map_err(|e| e.to_string())?;
            let lin = poly(&[case.b.clone(), case.a.clone()]);
            let mut power = Poly::one();
            for n in 0..=10 {
                let q_n = power.scale(&case.c[n]);
                let img = apply_prefix(&rep, &q_n).map_err(|e| e.to_string())?;
                same(&format!("case {i}: T[q_{n}]"), &q_n.scale(&case.gammas[n]), &img)?;
                let closed = closed_affine(&seq, &case.a, &case.b, n).map_err(|e| e.to_string())?;
                same(&format!("case {i}: Q_{n} against closed form"), &closed, &rep.q[n])?;
                power = &power * &lin;
            }
        }
        Ok(())
    };
    report(5, "affine", run());
}

/// `H_0 = 1`, `H_{n+1} = x H_n - alpha H_n'`.
fn hermite_oracle(alpha: &Rational, n: usize) -> Vec<Poly> {
    let mut hs = vec![Poly::one()];
    for i in 0..n {
        let next = (&Poly::x() * &hs[i]) - hs[i].derivative(1).scale(alpha);
        hs.push(next);
    }
    hs
}

#[test]
fn criterion_06_hermite() {
    let run = || -> Check {
        for alpha in scenarios::hermite_alphas() {
            let hs = hermite_oracle(&alpha, 10);
            for (i, seq) in scenarios::hermite_gamma_sets().into_iter().enumerate() {
                let basis = BasisSpec::GeneralizedHermite { alpha: alpha.clone() };
                let rep = rep_prefix(&OperatorSpec::diagonal(basis, seq.clone()), 10).map_err(|e| e.to_string())?;
                for k in 0..=10 {
                    let gamma = seq.value(k).map_err(|e| e.to_string())?;
                    let img = apply_prefix(&rep, &hs[k]).map_err(|e| e.to_string())?;
                    same(&format!("alpha {alpha}, set {i}: T[H_{k}]"), &hs[k].scale(&gamma), &img)?;
                    let closed = closed_hermite(&seq, &alpha, k).map_err(|e| e.to_string())?;
                    same(&format!("alpha {alpha}, set {i}: Q_{k} against closed form"), &closed, &rep.q[k])?;
                }
            }
        }
        let basis = BasisSpec::GeneralizedHermite { alpha: rat(1, 2) };
        let seq = SequenceSpec::PolyInK(Poly::from_ints(&[0, 2]));
        let rep = rep_prefix(&OperatorSpec::diagonal(basis, seq), 10).map_err(|e| e.to_string())?;
        let mut expected = vec![Poly::zero(), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1])];
        expected.resize(11, Poly::zero());
        same("alpha 1/2, gamma_n = 2n", &expected, &rep.q)
    };
    report(6, "hermite", run());
}

/// Bonnet: `(n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}`.
fn legendre_oracle(n: usize) -> Vec<Poly> {
    let mut ps = vec![Poly::one(), Poly::x()];
    for i in 1..n {
        let a = int(2 * i as i64 + 1);
        let b = int(i as i64);
        let next = ((&Poly::x() * &ps[i]).scale(&a) - ps[i - 1].scale(&b)).scale(&(int(1) / int(i as i64 + 1)));
        ps.push(next);
    }
    ps.truncate(n + 1);
    ps
}

#[test]
fn criterion_07_legendre() {
    let run = || -> Check {
        let ps = legendre_oracle(10);
        let op = catalog::legendre_quadratic(2, 3);
        let rep = rep_prefix(&op, 4).map_err(|e| e.to_string())?;
        let expected = vec![
            Poly::from_ints(&[3]),
            Poly::from_ints(&[0, 3]),
            poly(&[rat(-4, 3), int(0), int(1)]),
            poly(&[int(0), rat(2, 15)]),
            poly(&[rat(-1, 105), int(0), rat(-4, 105)]),
        ];
        same("eigenvalues k^2+2k+3", &expected, &rep.q)?;
        for (n, p) in ps.iter().enumerate().take(5) {
            let gamma = int((n * n + 2 * n + 3) as i64);
            same(&format!("T[P_{n}]"), &p.scale(&gamma), &apply_prefix(&rep, p).map_err(|e| e.to_string())?)?;
        }
        let op = catalog::legendre_quadratic(1, 3);
        let rep = rep_prefix(&op, 10).map_err(|e| e.to_string())?;
        same("alpha 1 against recursion oracle", &recursion_oracle(&op, 10), &rep.q)?;
        let mut expected = vec![Poly::from_ints(&[3]), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1, 0, 1])];
        expected.resize(11, Poly::zero());
        same("eigenvalues k^2+k+3", &expected, &rep.q)?;
        for (n, p) in ps.iter().enumerate() {
            let gamma = int((n * n + n + 3) as i64);
            same(&format!("(3 + 2xD + (x^2-1)D^2) P_{n}"), &p.scale(&gamma), &act(&expected, p))?;
        }
        Ok(())
    };
    report(7, "legendre", run());
}

#[test]
fn criterion_08_bates() {
    let run = || -> Check {
        let op = OperatorSpec::finite_diffop(vec![Poly::one(), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1])]);
        let rep = rep_prefix(&op, 5).map_err(|e| e.to_string())?;
        let mut expected = vec![Poly::one(), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1])];
        expected.resize(6, Poly::zero());
        same("prefix", &expected, &rep.q)?;
        same("verdict", &MonotoneVerdict::NotMonotone { witness: 1 }, &monotone_classify(&rep))
    };
    report(8, "bates", run());
}

#[test]
fn criterion_09_preserve() {
    let run = || -> Check {
        let corpus = scenarios::preserve_corpus().generate();
        same("corpus size", &200, &corpus.len())?;
        ensure(corpus.iter().all(|p| matches!(p.degree(), Degree::Finite(d) if (1..=8).contains(&d))), || {
            "corpus degree out of range".into()
        })?;
        ensure(corpus.iter().all(|p| is_hyperbolic(p) == Hyperbolicity::Hyperbolic), || {
            "corpus contains a non-hyperbolic entry".into()
        })?;

        let sturm = |cs: &[i64]| count_distinct_real_roots(&Poly::from_ints(cs), &RootRange::WholeLine).ok();
        same("distinct real roots of x^2+1", &Some(0), &sturm(&[1, 0, 1]))?;
        same("distinct real roots of x^3-x", &Some(3), &sturm(&[0, -1, 0, 1]))?;
        same("distinct real roots of x^3-3x+2", &Some(2), &sturm(&[2, -3, 0, 1]))?;
        same("x^2+1", &Hyperbolicity::NotHyperbolic, &is_hyperbolic(&Poly::from_ints(&[1, 0, 1])))?;
        same("x^3-3x+2", &Hyperbolicity::Hyperbolic, &is_hyperbolic(&Poly::from_ints(&[2, -3, 0, 1])))?;

        let mut failures = Vec::new();
        for (name, op) in [("rank-two operator", rank_two_operator()), ("xD + D^2", catalog::xd_plus_d2())] {
            let report = preserve_test(&op, &corpus).map_err(|e| e.to_string())?;
            if let Some(first) = report.violations().first() {
                failures.push(format!(
                    "{name}: {}; first at [{}]: T[{}] = {}",
                    report.summary(),
                    first.index,
                    corpus[first.index],
                    first.image
                ));
            }
        }
        // x^2 is hyperbolic; (xD + D^2)[x^2] = 2x^2 + 2 is not.
        let witness = apply(&catalog::xd_plus_d2(), &xk(2)).map_err(|e| e.to_string())?;
        if is_hyperbolic(&witness) == Hyperbolicity::NotHyperbolic {
            failures.push(format!("xD + D^2 maps x^2 to {witness}"));
        }
        ensure(failures.is_empty(), || failures.join("; "))
    };
    report(9, "preserve", run());
}

#[test]
fn criterion_10_rank_two_leading() {
    let run = || -> Check {
        let cases = scenarios::rank_two_cases();
        same("number of operators", &10, &cases.len())?;
        for (i, op) in cases.iter().enumerate() {
            let OperatorSpec::RankTwo { alpha, beta, p, r } = op else {
                return Err(format!("case {i} is not rank-two"));
            };
            let at_one = |f: &FunctionalSpec| f.on_monomial(0);
            ensure(at_one(alpha) != int(0) && at_one(beta) != int(0), || format!("case {i}: functional vanishes at 1"))?;
            ensure(interlaces(p, r) == Ok(true), || format!("case {i}: P and R do not interlace"))?;
            let rep = rep_prefix(op, 10).map_err(|e| e.to_string())?;
            same(&format!("case {i}: prefix against recursion oracle"), &recursion_oracle(op, 10), &rep.q)?;
            let d0 = rep.q[0].degree().finite().ok_or_else(|| format!("case {i}: Q_0 = 0"))?;
            let lc0 = rep.q[0].leading_coeff();
            for k in 0..=10 {
                ensure(!rep.q[k].is_zero(), || format!("case {i}: Q_{k} = 0"))?;
                same(&format!("case {i}: deg Q_{k}"), &Degree::Finite(d0 + k), &rep.q[k].degree())?;
                let lead = neg_one_pow(k) * &lc0 / fact(k);
                same(&format!("case {i}: leading coefficient of Q_{k}"), &lead, &rep.q[k].leading_coeff())?;
            }
            same(&format!("case {i}: leading_profile_check"), &Ok(true), &leading_profile_check(&rep).map_err(|e| e.to_string()))?;
        }
        Ok(())
    };
    report(10, "rank_two_leading", run());
}

const CASES: usize = 128;

fn random_poly(rng: &mut Xorshift64Star, max_degree: u64) -> Poly {
    let d = rng.below(max_degree + 1) as usize;
    Poly::new((0..=d).map(|_| rng.rational(20, 6)).collect())
}

fn exactpoly_laws(rng: &mut Xorshift64Star) -> Check {
    for case in 0..CASES {
        let (p, q, r) = (random_poly(rng, 6), random_poly(rng, 6), random_poly(rng, 6));
        same(&format!("case {case}: p(q+r)"), &(&(&p * &q) + &(&p * &r)), &(&p * &(&q + &r)))?;
        same(&format!("case {case}: pq = qp"), &(&p * &q), &(&q * &p))?;
        same(&format!("case {case}: (p+q)-q"), &p, &(&(&p + &q) - &q))?;
        let lhs = (&p * &q).derivative(1);
        let rhs = &(&p.derivative(1) * &q) + &(&p * &q.derivative(1));
        same(&format!("case {case}: product rule"), &rhs, &lhs)?;
        if !p.is_zero() && !q.is_zero() {
            same(&format!("case {case}: deg pq"), &(p.degree() + q.degree()), &(&p * &q).degree())?;
        }
    }
    Ok(())
}

fn random_basis(rng: &mut Xorshift64Star) -> BasisSpec {
    match rng.below(4) {
        0 => BasisSpec::Standard,
        1 => BasisSpec::Affine {
            c: SequenceSpec::List((0..8).map(|_| rng.nonzero_rational(9, 4)).collect()),
            a: rng.nonzero_rational(9, 4),
            b: rng.rational(9, 4),
        },
        2 => BasisSpec::GeneralizedHermite { alpha: rat(rng.range(1, 9), rng.range(1, 4)) },
        _ => BasisSpec::Legendre,
    }
}

fn bases_laws(rng: &mut Xorshift64Star) -> Check {
    for case in 0..CASES {
        let basis = random_basis(rng);
        let p = random_poly(rng, 7);
        let coords = expand_in_basis(&p, &basis).map_err(|e| e.to_string())?;
        let back = coords
            .iter()
            .enumerate()
            .map(|(k, c)| basis_poly(&basis, k).map(|b| b.scale(c)))
            .try_fold(Poly::zero(), |acc, b| b.map(|b| acc + b))
            .map_err(|e| e.to_string())?;
        same(&format!("case {case}: round trip in {basis:?}"), &p, &back)?;

        let alpha = rat(rng.range(1, 9), rng.range(1, 4));
        let n = 2 + rng.below(9) as usize;
        let hs = basis_prefix(&BasisSpec::GeneralizedHermite { alpha: alpha.clone() }, n).map_err(|e| e.to_string())?;
        same(&format!("case {case}: Hermite({alpha}) through {n}"), &hermite_oracle(&alpha, n), &hs)?;
    }
    Ok(())
}

fn random_operator(rng: &mut Xorshift64Star) -> OperatorSpec {
    match rng.below(3) {
        0 => OperatorSpec::finite_diffop((0..4).map(|_| random_poly(rng, 3)).collect()),
        1 => OperatorSpec::diagonal(random_basis(rng), SequenceSpec::List((0..8).map(|_| rng.rational(9, 4)).collect())),
        _ => OperatorSpec::RankTwo {
            alpha: FunctionalSpec::new((0..8).map(|_| rng.rational(5, 3)).collect()),
            beta: FunctionalSpec::new((0..8).map(|_| rng.rational(5, 3)).collect()),
            p: random_poly(rng, 4),
            r: random_poly(rng, 4),
        },
    }
}

fn operator_laws(rng: &mut Xorshift64Star) -> Check {
    for case in 0..CASES {
        let op = random_operator(rng);
        let (p, q) = (random_poly(rng, 7), random_poly(rng, 7));
        let c = rng.rational(9, 4);
        let lhs = apply(&op, &(&p.scale(&c) + &q)).map_err(|e| e.to_string())?;
        let rhs = apply(&op, &p).map_err(|e| e.to_string())?.scale(&c) + apply(&op, &q).map_err(|e| e.to_string())?;
        same(&format!("case {case}: linearity of {}", op.describe()), &rhs, &lhs)?;

        let basis = random_basis(rng);
        let gammas: Vec<Rational> = (0..8).map(|_| rng.rational(9, 4)).collect();
        let diag = OperatorSpec::diagonal(basis.clone(), SequenceSpec::List(gammas.clone()));
        let k = rng.below(8) as usize;
        let b = basis_poly(&basis, k).map_err(|e| e.to_string())?;
        let img = apply(&diag, &b).map_err(|e| e.to_string())?;
        same(&format!("case {case}: diagonal action on B_{k}"), &b.scale(&gammas[k]), &img)?;
    }
    Ok(())
}

fn symbol_laws(rng: &mut Xorshift64Star) -> Check {
    for case in 0..CASES {
        let order = 5;
        let q1: Vec<Poly> = (0..3).map(|_| random_poly(rng, 3)).collect();
        let q2: Vec<Poly> = (0..3).map(|_| random_poly(rng, 3)).collect();
        let c = rng.rational(9, 4);
        let sum: Vec<Poly> = q1.iter().zip(&q2).map(|(a, b)| &a.scale(&c) + b).collect();
        let s = |q: Vec<Poly>| symbol(&OperatorSpec::finite_diffop(q), order).map_err(|e| e.to_string());
        let (s1, s2, s12) = (s(q1)?, s(q2)?, s(sum)?);
        let combined: Vec<Poly> = s1.w_coeffs.iter().zip(&s2.w_coeffs).map(|(a, b)| &a.scale(&c) + b).collect();
        same(&format!("case {case}: symbol linearity"), &TruncatedBiSeries::new(combined), &s12)?;
        same(&format!("case {case}: double negation"), &s1, &substitute_neg_w(&substitute_neg_w(&s1)))?;
    }
    Ok(())
}

#[test]
fn criterion_11_property_suites() {
    let run = || -> Check {
        exactpoly_laws(&mut Xorshift64Star::new(101)).map_err(|e| format!("exactpoly: {e}"))?;
        bases_laws(&mut Xorshift64Star::new(102)).map_err(|e| format!("bases: {e}"))?;
        operator_laws(&mut Xorshift64Star::new(103)).map_err(|e| format!("operators: {e}"))?;
        symbol_laws(&mut Xorshift64Star::new(104)).map_err(|e| format!("symbol: {e}"))
    };
    report(11, "property_suites", run());
}
