//! Exit criteria. Run with `cargo test -p dickson --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use common::*;
use dickson::families::{companion, dixon_recurrence, family_recurrence, family_trace};
use dickson::identities::{trace_lemma_sides, Verifier};
use dickson::seq_eval::{bench, fibonacci_number, lucas_number, SeqTarget, Strategy};
use dickson::{BigInt, BivarPoly, FamilyId, PolyMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 7;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, started: Instant) -> Outcome {
    let took = started.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn report(r: dickson::VerificationReport) -> Outcome {
    ensure(r.passed, || {
        format!("{}: {:?}", r.identity_id, r.counterexample)
    })
}

fn golden_tables() -> Outcome {
    let started = Instant::now();
    for (f, rows) in UNIVARIATE {
        for (n, expected) in rows.iter().enumerate() {
            let got = family_recurrence(f, n as u32);
            ensure(got == p(expected), || {
                format!("{f} n={n}: {got} != {expected}")
            })?;
        }
    }
    for (kind, sign, rows) in DICKSON {
        for (n, expected) in rows.iter().enumerate() {
            let got = dixon_recurrence(kind, sign, n as u32);
            ensure(got == p(expected), || {
                format!("{kind:?}/{sign:?} n={n}: {got}")
            })?;
        }
    }
    for (kind, sign, misprint, corrected) in DICKSON_N5 {
        let got = dixon_recurrence(kind, sign, 5);
        ensure(got == p(corrected) && got != p(misprint), || {
            format!("{kind:?}/{sign:?} n=5: {got}")
        })?;
    }
    within(Duration::from_secs(1), started)
}

fn central_equivalence() -> Outcome {
    let started = Instant::now();
    for f in FamilyId::ALL {
        for n in 0..=64 {
            let trace = family_trace(f, n).map_err(|e| format!("{f} n={n}: {e}"))?;
            ensure(trace == family_recurrence(f, n), || format!("{f} n={n}"))?;
        }
    }
    within(Duration::from_secs(60), started)
}

fn power_trace_sweep() -> Outcome {
    let started = Instant::now();
    let v = Verifier::default();
    let r = v.verify_prop1_random(100, 16, SEED);
    ensure(
        matches!(
            r.range,
            dickson::identities::Coverage::Trials {
                count: 100,
                n_max: 16
            }
        ),
        || format!("{:?}", r.range),
    )?;
    report(r)?;
    report(v.verify_triangular_trace(16, SEED))?;
    within(Duration::from_secs(30), started)
}

fn companion_tables() -> Outcome {
    let m = companion(FamilyId::DicksonReg2);
    for (i, expected) in generic_sym_powers().iter().enumerate().skip(1) {
        let n = i as u32 + 1;
        ensure(&m.sym_power(n).unwrap() == expected, || {
            format!("sym power {n}")
        })?;
    }
    for (n, expected) in generic_powers().iter().enumerate() {
        ensure(&m.mat_pow(n as u32) == expected, || format!("power {n}"))?;
    }
    let d1 = |n| {
        dixon_recurrence(
            dickson::families::Kind::Second,
            dickson::families::Sign::Plus,
            n,
        )
    };
    let y = BivarPoly::y();
    let m5 = PolyMatrix::two_by_two(d1(5), &y * &d1(4), d1(4), &y * &d1(3));
    ensure(m.mat_pow(5) == m5, || "power 5 vs recurrence".into())
}

fn symmetric_power_structure() -> Outcome {
    let started = Instant::now();
    let v = Verifier::default();
    report(v.verify_block_structure(32))?;
    report(v.verify_kind_sum(64))?;
    report(
        v.verify_det_sym(20, 6, 5, SEED)
            .map_err(|e| e.to_string())?,
    )?;
    report(v.verify_subdiag_sums(16))?;
    within(Duration::from_secs(60), started)
}

fn pascal() -> Outcome {
    report(Verifier::default().verify_pascal(20))
}

fn trigonometry() -> Outcome {
    let started = Instant::now();
    report(Verifier::default().verify_trig(20, 10, 1e-9))?;
    within(Duration::from_secs(1), started)
}

fn sequence_scale() -> Outcome {
    let mut lucas = (BigInt::from(2), BigInt::from(1));
    let mut fib = (BigInt::from(1), BigInt::from(1));
    for n in 0..=10_000u64 {
        ensure(lucas_number(n) == lucas.0, || format!("lucas n={n}"))?;
        ensure(fibonacci_number(n) == fib.0, || format!("fibonacci n={n}"))?;
        lucas = (lucas.1.clone(), lucas.0 + lucas.1);
        fib = (fib.1.clone(), fib.0 + fib.1);
    }

    let started = Instant::now();
    std::hint::black_box(lucas_number(100_000));
    std::hint::black_box(fibonacci_number(100_000));
    within(Duration::from_secs(5), started)?;

    for n in [1u64, 10, 100, 1_000, 10_000, 100_000] {
        let target = SeqTarget::family(FamilyId::Lucas, 1.into(), 1.into());
        let row = bench(Strategy::MatrixPow, &target, n, 1).map_err(|e| e.to_string())?;
        // 8 multiplications per 2×2 product, at most two products per bit
        let bits = u64::from(64 - n.leading_zeros());
        ensure(row.bigint_mults <= 16 * bits, || {
            format!(
                "n={n}: {} multiplications for {bits} bits",
                row.bigint_mults
            )
        })?;
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let poly = |rng: &mut ChaCha8Rng| -> BivarPoly {
        (0..rng.random_range(0..6))
            .map(|_| {
                let i = rng.random_range(0..=8u32);
                let j = rng.random_range(0..=8 - i);
                BivarPoly::monomial(i, j, rng.random_range(-50..=50))
            })
            .sum()
    };
    for _ in 0..200 {
        let (a, b, c) = (poly(&mut rng), poly(&mut rng), poly(&mut rng));
        ensure(&a * &(&b + &c) == &a * &b + &a * &c, || {
            "distributivity".into()
        })?;
        ensure((&a * &b) * &c == &a * &(&b * &c), || "associativity".into())?;
        ensure(&a * &b == &b * &a && &a + &b == &b + &a, || {
            "commutativity".into()
        })?;
    }
    let int_matrix = |rng: &mut ChaCha8Rng, bound: i64| {
        PolyMatrix::from_ints([
            [
                rng.random_range(-bound..=bound),
                rng.random_range(-bound..=bound),
            ],
            [
                rng.random_range(-bound..=bound),
                rng.random_range(-bound..=bound),
            ],
        ])
    };
    for _ in 0..200 {
        let (a, b) = (int_matrix(&mut rng, 9), int_matrix(&mut rng, 9));
        ensure(
            a.mat_mul(&b).unwrap().trace() == b.mat_mul(&a).unwrap().trace(),
            || format!("trace cyclicity {a} {b}"),
        )?;
        let (lhs, rhs) = trace_lemma_sides(&a, &b);
        ensure(lhs == rhs, || format!("lemma {a} {b}"))?;
    }
    report(Verifier::default().verify_trace_lemma(1000, SEED))?;
    for _ in 0..50 {
        let (a, b) = (int_matrix(&mut rng, 4), int_matrix(&mut rng, 4));
        let ab = a.mat_mul(&b).unwrap();
        for n in 0..=5 {
            let lhs = ab.sym_power(n).unwrap();
            let rhs = a
                .sym_power(n)
                .unwrap()
                .mat_mul(&b.sym_power(n).unwrap())
                .unwrap();
            ensure(lhs == rhs, || format!("functoriality {a} {b} n={n}"))?;
        }
    }
    report(Verifier::default().verify_parity(64))?;
    for n in 0..=64u64 {
        let l = lucas_number(n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        ensure(lucas_number(2 * n) == &l * &l - 2 * sign, || {
            format!("doubling n={n}")
        })?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("AC1 golden tables reproduced", golden_tables),
        (
            "AC2 trace = recurrence, all families, n <= 64",
            central_equivalence,
        ),
        (
            "AC3 trace identities on 100 random matrices, n <= 16",
            power_trace_sweep,
        ),
        ("AC4 generic companion power tables", companion_tables),
        (
            "AC5 block form, kind sum, det, subdiagonal sums",
            symmetric_power_structure,
        ),
        ("AC6 Pascal specialization, n <= 20", pascal),
        ("AC7 trigonometric checks, tol 1e-9", trigonometry),
        (
            "AC8 sequence scale and multiplication counts",
            sequence_scale,
        ),
        ("AC9 property suites under a fixed seed", property_suites),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let took = started.elapsed();
        match &outcome {
            Ok(()) => println!("PASS  {name}  ({took:.2?})"),
            Err(why) => {
                println!("FAIL  {name}  ({took:.2?}): {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
