//! Executable checks of the trace identities and the symmetric-power
//! properties, each producing a [`VerificationReport`].
//!
//! Every check compares two independent routes to the same object: a
//! recurrence against a matrix construction, a matrix construction against a
//! closed formula, or a symbolic result against integer probes. A failing
//! check carries the first counterexample found (lowest index, or first trial
//! in seed order), so reports are reproducible for a given configuration.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{
    companion, dixon_sequence, family_sequence, family_trace, relate_reduced, FamilyId, Kind, Sign,
};
use crate::matrix::{PolyMatrix, DEFAULT_DET_BOUND};
use crate::parallel::Exec;
use crate::poly::BivarPoly;
use crate::seq_eval::{fibonacci_number, lucas_number};

/// What a report covered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Coverage {
    Index { n_min: u32, n_max: u32 },
    Trials { count: u32, n_max: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    fn polys(inputs: impl Into<String>, lhs: &BivarPoly, rhs: &BivarPoly) -> Self {
        Self {
            inputs: inputs.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn ints(inputs: impl Into<String>, lhs: &BigInt, rhs: &BigInt) -> Self {
        Self {
            inputs: inputs.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

fn compare_polys(
    inputs: impl FnOnce() -> String,
    lhs: &BivarPoly,
    rhs: &BivarPoly,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample::polys(inputs(), lhs, rhs))
}

fn compare_ints(
    inputs: impl FnOnce() -> String,
    lhs: &BigInt,
    rhs: &BigInt,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample::ints(inputs(), lhs, rhs))
}

/// Outcome of one verifier. `passed` holds exactly when `counterexample` is
/// absent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub range: Coverage,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(rename = "elapsed_ms", with = "millis")]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn finish(
        id: &str,
        range: Coverage,
        started: Instant,
        counterexample: Option<Counterexample>,
    ) -> Self {
        Self {
            identity_id: id.to_string(),
            range,
            passed: counterexample.is_none(),
            counterexample,
            note: None,
            elapsed: started.elapsed(),
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64() * 1e3)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let ms = f64::deserialize(d)?;
        Duration::try_from_secs_f64(ms / 1e3).map_err(serde::de::Error::custom)
    }
}

/// A stated identity and the verifiers that cover it.
#[derive(Clone, Copy, Debug)]
pub struct IdentityEntry {
    pub key: &'static str,
    pub statement: &'static str,
    pub verifiers: &'static [&'static str],
}

/// Every identity the library claims, in a fixed order.
pub const REGISTRY: &[IdentityEntry] = &[
    IdentityEntry {
        key: "trace-of-power",
        statement: "Tr(M^n) = 2P_n(Tr M, det M)",
        verifiers: &["prop1", "family-traces"],
    },
    IdentityEntry {
        key: "trace-of-sym-power",
        statement: "Tr(M^{⊙n}) = 1P_n(Tr M, det M)",
        verifiers: &["prop1", "triangular-trace", "family-traces"],
    },
    IdentityEntry {
        key: "trace-square-lemma",
        statement: "Tr(A^2 B) = Tr A · Tr(AB) - det A · Tr B",
        verifiers: &["trace-lemma"],
    },
    IdentityEntry {
        key: "triangular-sym-trace",
        statement: "Tr [[a,0],[c,b]]^{⊙n} = a^n + a^{n-1}b + ... + b^n",
        verifiers: &["triangular-trace"],
    },
    IdentityEntry {
        key: "standard-dickson-traces",
        statement: "2P_n = Tr [[x,-y],[1,0]]^n, 1P_n = Tr [[x,-y],[1,0]]^{⊙n}",
        verifiers: &["family-traces"],
    },
    IdentityEntry {
        key: "family-companion-traces",
        statement: "D, L, F, reduced T/U and T/U are traces of powers / symmetric powers of their companions",
        verifiers: &["family-traces"],
    },
    IdentityEntry {
        key: "standard-regular-sign-flip",
        statement: "P(x, y) = D(x, -y)",
        verifiers: &["sign-flip"],
    },
    IdentityEntry {
        key: "dickson-specializations",
        statement: "D at y=1 gives L, F; at y=-1 gives reduced T, U; at x=y=1 gives Lucas and Fibonacci numbers",
        verifiers: &["specializations"],
    },
    IdentityEntry {
        key: "reduced-chebyshev",
        statement: "T_n(x) = 1/2 reduced-T_n(2x), U_n(x) = reduced-U_n(2x)",
        verifiers: &["reduced-relations"],
    },
    IdentityEntry {
        key: "exponent-parity",
        statement: "every exponent of x in a family member has the parity of n",
        verifiers: &["parity"],
    },
    IdentityEntry {
        key: "chebyshev-cosine",
        statement: "cos(n phi) = T_n(cos phi) = 1/2 reduced-T_n(2 cos phi)",
        verifiers: &["trig"],
    },
    IdentityEntry {
        key: "chebyshev-sine",
        statement: "sin(n phi) = U_{n-1}(cos phi) sin phi",
        verifiers: &["trig"],
    },
    IdentityEntry {
        key: "sym-power-definition",
        statement: "(M v)^{⊙n} = M^{⊙n} v^{⊙n}",
        verifiers: &["sym-power-definition"],
    },
    IdentityEntry {
        key: "sym-power-pascal",
        statement: "[[1,1],[1,0]]^{⊙n} has entries binomial(n-k, j)",
        verifiers: &["pascal"],
    },
    IdentityEntry {
        key: "power-block-form",
        statement: "M^{n+1} = [[1D_{n+1}, y 1D_n], [1D_n, y 1D_{n-1}]]",
        verifiers: &["block-structure"],
    },
    IdentityEntry {
        key: "kind-sum",
        statement: "1D_n + y 1D_{n-2} = 2D_n",
        verifiers: &["kind-sum"],
    },
    IdentityEntry {
        key: "sym-power-determinant",
        statement: "det M^{⊙n} = (det M)^{n(n+1)/2}",
        verifiers: &["det-sym"],
    },
    IdentityEntry {
        key: "subdiagonal-sums",
        statement: "sum of the k-th subdiagonal of M^{⊙n} = 1D_{n-k}",
        verifiers: &["subdiag-sums"],
    },
];

/// Verifier ids in report order.
pub const VERIFIER_IDS: &[&str] = &[
    "trace-lemma",
    "prop1",
    "triangular-trace",
    "family-traces",
    "sign-flip",
    "specializations",
    "reduced-relations",
    "parity",
    "sym-power-definition",
    "pascal",
    "block-structure",
    "kind-sum",
    "det-sym",
    "subdiag-sums",
    "trig",
];

const SUBDIAG_NOTE: &str = "checked form: sum_i M^{⊙n}[i+k][i] = 1D_{n-k} for 1 <= k < n; \
the index pattern M_{1,1+k} + M_{1,2+k} + ... + M_{n-k,n} = y^k D_{n-k} does not hold on the \
computed symmetric powers and is not what is verified";

/// Ranges, trial counts and tolerances for [`run_all`].
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub lemma_trials: u32,
    pub prop1_trials: u32,
    pub prop1_n_max: u32,
    pub triangular_n_max: u32,
    pub family_n_max: u32,
    pub relation_n_max: u32,
    pub sym_definition_trials: u32,
    pub sym_definition_n_max: u32,
    pub pascal_n_max: u32,
    pub block_n_max: u32,
    pub kind_sum_n_max: u32,
    pub det_trials: u32,
    pub det_n_max: u32,
    pub det_symbolic_n_max: u32,
    pub subdiag_n_max: u32,
    pub trig_n_max: u32,
    pub trig_angles: u32,
    pub tol: f64,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            lemma_trials: 1000,
            prop1_trials: 100,
            prop1_n_max: 16,
            triangular_n_max: 16,
            family_n_max: 64,
            relation_n_max: 64,
            sym_definition_trials: 50,
            sym_definition_n_max: 8,
            pascal_n_max: 20,
            block_n_max: 32,
            kind_sum_n_max: 64,
            det_trials: 20,
            det_n_max: 6,
            det_symbolic_n_max: 5,
            subdiag_n_max: 16,
            trig_n_max: 20,
            trig_angles: 10,
            tol: 1e-9,
            exec: Exec::default(),
        }
    }
}

impl VerifyConfig {
    /// Uses `n_max` for every sweep. Determinant checks are capped below the
    /// cofactor-expansion bound.
    pub fn with_n_max(mut self, n_max: u32) -> Self {
        let det_cap = (DEFAULT_DET_BOUND - 1) as u32;
        self.prop1_n_max = n_max;
        self.triangular_n_max = n_max;
        self.family_n_max = n_max;
        self.relation_n_max = n_max;
        self.sym_definition_n_max = n_max;
        self.pascal_n_max = n_max;
        self.block_n_max = n_max;
        self.kind_sum_n_max = n_max;
        self.det_n_max = n_max.min(det_cap);
        self.det_symbolic_n_max = n_max.min(self.det_symbolic_n_max);
        self.subdiag_n_max = n_max;
        self.trig_n_max = n_max;
        self
    }
}

fn random_int_matrix(rng: &mut ChaCha8Rng, bound: i64) -> PolyMatrix {
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
}

/// Integer value of a constant polynomial entry.
fn int_entry(m: &PolyMatrix, r: usize, c: usize) -> Result<BigInt> {
    m.get(r, c).constant_value().ok_or_else(|| {
        Error::Input(format!(
            "entry ({r}, {c}) = {} is not an integer",
            m.get(r, c)
        ))
    })
}

fn first_matrix_mismatch(
    inputs: &str,
    lhs: &PolyMatrix,
    rhs: &PolyMatrix,
) -> Option<Counterexample> {
    if lhs.size() != rhs.size() {
        return Some(Counterexample {
            inputs: format!("{inputs}, sizes {} vs {}", lhs.size(), rhs.size()),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    for r in 0..lhs.size() {
        for c in 0..lhs.size() {
            if lhs.get(r, c) != rhs.get(r, c) {
                return Some(Counterexample::polys(
                    format!("{inputs}, entry ({r}, {c})"),
                    lhs.get(r, c),
                    rhs.get(r, c),
                ));
            }
        }
    }
    None
}

fn lowest(found: Vec<Option<Counterexample>>) -> Option<Counterexample> {
    found.into_iter().flatten().next()
}

/// Runs the individual checks under a fixed execution strategy.
#[derive(Clone, Copy, Debug, Default)]
pub struct Verifier {
    pub exec: Exec,
}

impl Verifier {
    pub fn new(exec: Exec) -> Self {
        Self { exec }
    }

    fn sweep<F>(&self, n_min: u32, n_max: u32, check: F) -> Option<Counterexample>
    where
        F: Fn(u32) -> Option<Counterexample> + Sync + Send,
    {
        if n_min > n_max {
            return None;
        }
        lowest(self.exec.map_range(n_min..=n_max, check))
    }

    /// `Tr(A²B) = Tr A·Tr(AB) − det A·Tr B` on random integer pairs with
    /// entries in `[−9, 9]`.
    pub fn verify_trace_lemma(&self, trials: u32, seed: u64) -> VerificationReport {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs: Vec<_> = (0..trials)
            .map(|_| {
                (
                    random_int_matrix(&mut rng, 9),
                    random_int_matrix(&mut rng, 9),
                )
            })
            .collect();
        let found = self.exec.map_slice(&pairs, |(a, b)| {
            let (lhs, rhs) = trace_lemma_sides(a, b);
            compare_polys(|| format!("A={a}, B={b}"), &lhs, &rhs)
        });
        VerificationReport::finish(
            "trace-lemma",
            Coverage::Trials {
                count: trials,
                n_max: 0,
            },
            started,
            lowest(found),
        )
    }

    /// Both trace statements for one integer 2×2 matrix, `0 ≤ n ≤ n_max`:
    /// `Tr Mⁿ = ²Pₙ(Tr M, det M)` and `Tr M^{⊙n} = ¹Pₙ(Tr M, det M)`.
    pub fn verify_prop1(&self, m: &PolyMatrix, n_max: u32) -> Result<VerificationReport> {
        let started = Instant::now();
        let found = self.prop1_counterexample(m, n_max, &dixon_tables(n_max))?;
        Ok(VerificationReport::finish(
            "prop1",
            Coverage::Index { n_min: 0, n_max },
            started,
            found,
        ))
    }

    /// [`Self::verify_prop1`] over seeded random matrices with entries in `[−9, 9]`.
    pub fn verify_prop1_random(&self, trials: u32, n_max: u32, seed: u64) -> VerificationReport {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mats: Vec<_> = (0..trials)
            .map(|_| random_int_matrix(&mut rng, 9))
            .collect();
        let tables = dixon_tables(n_max);
        let found = self.exec.map_slice(&mats, |m| {
            self.prop1_counterexample(m, n_max, &tables)
                .expect("random matrices are integer 2×2")
        });
        VerificationReport::finish(
            "prop1",
            Coverage::Trials {
                count: trials,
                n_max,
            },
            started,
            lowest(found),
        )
    }

    fn prop1_counterexample(
        &self,
        m: &PolyMatrix,
        n_max: u32,
        tables: &(Vec<BivarPoly>, Vec<BivarPoly>),
    ) -> Result<Option<Counterexample>> {
        if m.size() != 2 {
            return Err(Error::Input(format!(
                "expected a 2×2 matrix, got {0}×{0}",
                m.size()
            )));
        }
        for r in 0..2 {
            for c in 0..2 {
                int_entry(m, r, c)?;
            }
        }
        let tr = m.trace().constant_value().expect("integer matrix");
        let det = m.det()?.constant_value().expect("integer matrix");
        let (first, second) = tables;
        let mut power = PolyMatrix::identity(2);
        for n in 0..=n_max {
            if n > 0 {
                power = power.mat_mul(m)?;
            }
            let lhs = power.trace();
            let rhs = BivarPoly::constant(first[n as usize].eval_int(&tr, &det));
            if let Some(cex) = compare_polys(|| format!("M={m}, n={n}, power"), &lhs, &rhs) {
                return Ok(Some(cex));
            }
            let lhs = m.sym_power(n)?.trace();
            let rhs = BivarPoly::constant(second[n as usize].eval_int(&tr, &det));
            if let Some(cex) =
                compare_polys(|| format!("M={m}, n={n}, symmetric power"), &lhs, &rhs)
            {
                return Ok(Some(cex));
            }
        }
        Ok(None)
    }

    /// `Tr [[a,0],[c,b]]^{⊙n} = Σ a^{n−i} bⁱ`, symbolically with `a = x`,
    /// `b = y` for several integer `c`, and on an `(n+2)×(n+2)` grid of
    /// integer `(a, b)` with seeded random `c`.
    pub fn verify_triangular_trace(&self, n_max: u32, seed: u64) -> VerificationReport {
        let started = Instant::now();
        let found = self.sweep(0, n_max, |n| {
            let expected: BivarPoly = (0..=n).map(|i| BivarPoly::monomial(n - i, i, 1)).sum();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(n));
            for c in [-2, 0, 1, 3, rng.random_range(-50..=50)] {
                let m = PolyMatrix::two_by_two(
                    BivarPoly::x(),
                    BivarPoly::zero(),
                    c.into(),
                    BivarPoly::y(),
                );
                let lhs = m.sym_power(n).expect("2×2").trace();
                if let Some(cex) =
                    compare_polys(|| format!("a=x, b=y, c={c}, n={n}"), &lhs, &expected)
                {
                    return Some(cex);
                }
            }
            let side = i64::from(n) + 2;
            for a in -side / 2..side - side / 2 {
                for b in -side / 2..side - side / 2 {
                    let c = rng.random_range(-9..=9);
                    let m = PolyMatrix::from_ints([[a, 0], [c, b]]);
                    let lhs = m.sym_power(n).expect("2×2").trace();
                    let rhs = expected.eval_int(&a.into(), &b.into());
                    let lhs = lhs.constant_value().expect("integer matrix");
                    if let Some(cex) =
                        compare_ints(|| format!("a={a}, b={b}, c={c}, n={n}"), &lhs, &rhs)
                    {
                        return Some(cex);
                    }
                }
            }
            None
        });
        VerificationReport::finish(
            "triangular-trace",
            Coverage::Index { n_min: 0, n_max },
            started,
            found,
        )
    }

    /// `family_trace(f, n) = family_recurrence(f, n)` for every family.
    pub fn verify_family_traces(&self, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let cells: Vec<(FamilyId, u32)> = FamilyId::ALL
            .into_iter()
            .flat_map(|f| (0..=n_max).map(move |n| (f, n)))
            .collect();
        let sequences: Vec<_> = FamilyId::ALL.map(|f| family_sequence(f, n_max)).into();
        let found = self.exec.map_slice(&cells, |&(f, n)| {
            let inputs = || format!("family={f}, n={n}");
            let expected = &sequences[f as usize][n as usize];
            match family_trace(f, n) {
                Ok(trace) => compare_polys(inputs, &trace, expected),
                Err(e) => Some(Counterexample {
                    inputs: format!("{}, {e}", inputs()),
                    lhs: "0".into(),
                    rhs: expected.to_string(),
                }),
            }
        });
        VerificationReport::finish(
            "family-traces",
            Coverage::Index { n_min: 0, n_max },
            started,
            lowest(found),
        )
    }

    /// `P(x, y) = D(x, −y)` for both kinds.
    pub fn verify_sign_flip(&self, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let minus_y = BivarPoly::monomial(0, 1, -1);
        let found = [Kind::First, Kind::Second].into_iter().find_map(|kind| {
            let standard = dixon_sequence(kind, Sign::Minus, n_max);
            let regular = dixon_sequence(kind, Sign::Plus, n_max);
            self.sweep(0, n_max, |n| {
                let flipped = negate_y(&regular[n as usize], &minus_y);
                compare_polys(
                    || format!("c={}, n={n}", kind.constant()),
                    &standard[n as usize],
                    &flipped,
                )
            })
        });
        VerificationReport::finish(
            "sign-flip",
            Coverage::Index { n_min: 0, n_max },
            started,
            found,
        )
    }

    /// Regular Dickson at `y = ±1` against the univariate families, and at
    /// `x = y = 1` against the integer sequences.
    pub fn verify_specializations(&self, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let one = BigInt::one();
        let minus_one = -BigInt::one();
        let d2 = dixon_sequence(Kind::First, Sign::Plus, n_max);
        let d1 = dixon_sequence(Kind::Second, Sign::Plus, n_max);
        let targets = [
            (&d2, &one, FamilyId::Lucas),
            (&d1, &one, FamilyId::Fibonacci),
            (&d2, &minus_one, FamilyId::ReducedT),
            (&d1, &minus_one, FamilyId::ReducedU),
        ];
        let found = targets.into_iter().find_map(|(dickson, y0, f)| {
            let family = family_sequence(f, n_max);
            self.sweep(0, n_max, |n| {
                let n_us = n as usize;
                compare_polys(
                    || format!("D at y={y0} vs {f}, n={n}"),
                    &dickson[n_us].substitute_y(y0),
                    &family[n_us],
                )
            })
        });
        let found = found.or_else(|| {
            self.sweep(0, n_max, |n| {
                let n_us = n as usize;
                compare_ints(
                    || format!("2D at x=y=1, n={n}"),
                    &d2[n_us].eval_int(&one, &one),
                    &lucas_number(n.into()),
                )
                .or_else(|| {
                    compare_ints(
                        || format!("1D at x=y=1, n={n}"),
                        &d1[n_us].eval_int(&one, &one),
                        &fibonacci_number(n.into()),
                    )
                })
            })
        });
        VerificationReport::finish(
            "specializations",
            Coverage::Index { n_min: 0, n_max },
            started,
            found,
        )
    }

    /// `T_n(x) = ½ Ṫ_n(2x)` and `U_n(x) = U̇_n(2x)`.
    pub fn verify_reduced_relations(&self, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let found = self.sweep(0, n_max, |n| {
            [FamilyId::ChebyshevT, FamilyId::ChebyshevU]
                .into_iter()
                .find_map(|f| match relate_reduced(f, n) {
                    Ok((lhs, rhs)) => compare_polys(|| format!("family={f}, n={n}"), &lhs, &rhs),
                    Err(e) => Some(Counterexample {
                        inputs: format!("family={f}, n={n}, {e}"),
                        lhs: family_sequence(f, n)[n as usize].to_string(),
                        rhs: "0".into(),
                    }),
                })
        });
        VerificationReport::finish(
            "reduced-relations",
            Coverage::Index { n_min: 0, n_max },
            started,
            found,
        )
    }

    /// Every term of the `n`-th member has `x`-degree ≡ n (mod 2).
    pub fn verify_parity(&self, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let found = FamilyId::ALL.into_iter().find_map(|f| {
            let seq = family_sequence(f, n_max);
            self.sweep(0, n_max, |n| {
                let p = &seq[n as usize];
                let odd: BivarPoly = p
                    .terms()
                    .filter(|(e, _)| e.x % 2 != n % 2)
                    .map(|(e, c)| BivarPoly::monomial(e.x, e.y, c.clone()))
                    .sum();
                // the wrong-parity part must vanish
                compare_polys(
                    || format!("family={f}, n={n}, wrong-parity terms"),
                    &odd,
                    &BivarPoly::zero(),
                )
            })
        });
        VerificationReport::finish(
            "parity",
            Coverage::Index { n_min: 0, n_max },
            started,
            found,
        )
    }

    /// `(M v)^{⊙n} = M^{⊙n} v^{⊙n}` with `v = (x, y)` symbolic and random
    /// integer `M` (entries in `[−5, 5]`).
    pub fn verify_sym_power_definition(
        &self,
        trials: u32,
        n_max: u32,
        seed: u64,
    ) -> VerificationReport {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut mats: Vec<_> = (0..trials)
            .map(|_| random_int_matrix(&mut rng, 5))
            .collect();
        mats.push(companion(FamilyId::DicksonReg2));
        let found = self.exec.map_slice(&mats, |m| {
            let mv = [
                m.get(0, 0) * &BivarPoly::x() + m.get(0, 1) * &BivarPoly::y(),
                m.get(1, 0) * &BivarPoly::x() + m.get(1, 1) * &BivarPoly::y(),
            ];
            (0..=n_max).find_map(|n| {
                let s = m.sym_power(n).expect("2×2");
                (0..=n).find_map(|k| {
                    let lhs = mv[0].pow(n - k) * mv[1].pow(k);
                    let rhs: BivarPoly = (0..=n)
                        .map(|j| s.get(k as usize, j as usize) * &BivarPoly::monomial(n - j, j, 1))
                        .sum();
                    compare_polys(|| format!("M={m}, n={n}, component {k}"), &lhs, &rhs)
                })
            })
        });
        VerificationReport::finish(
            "sym-power-definition",
            Coverage::Trials {
                count: trials + 1,
                n_max,
            },
            started,
            lowest(found),
        )
    }

    /// Generic companion at `x = y = 1`: entry `(k, j)` of `M^{⊙n}` is
    /// `binomial(n−k, j)`, against an additive Pascal triangle.
    pub fn verify_pascal(&self, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let mut pascal: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for m in 1..=n_max as usize {
            let prev = &pascal[m - 1];
            let row = (0..=m)
                .map(|j| {
                    let left = j
                        .checked_sub(1)
                        .map(|i| prev[i].clone())
                        .unwrap_or_default();
                    let right = prev.get(j).cloned().unwrap_or_default();
                    left + right
                })
                .collect();
            pascal.push(row);
        }
        let generic = companion(FamilyId::DicksonReg2);
        let one = BigInt::one();
        let found = self.sweep(0, n_max, |n| {
            let s = generic.sym_power(n).expect("2×2");
            let size = n as usize + 1;
            for k in 0..size {
                for j in 0..size {
                    let lhs = s.get(k, j).eval_int(&one, &one);
                    let rhs = pascal[size - 1 - k]
                        .get(j)
                        .cloned()
                        .unwrap_or_else(BigInt::zero);
                    if let Some(cex) =
                        compare_ints(|| format!("n={n}, entry ({k}, {j})"), &lhs, &rhs)
                    {
                        return Some(cex);
                    }
                }
            }
            None
        });
        VerificationReport::finish(
            "pascal",
            Coverage::Index { n_min: 0, n_max },
            started,
            found,
        )
    }

    /// `Mⁿ⁺¹ = [[¹D_{n+1}, y·¹Dₙ], [¹Dₙ, y·¹D_{n−1}]]` for the generic companion.
    pub fn verify_block_structure(&self, n_max: u32) -> VerificationReport {
        let d1 = dixon_sequence(Kind::Second, Sign::Plus, n_max + 1);
        self.verify_block_structure_against(n_max, |n| d1[n as usize].clone())
    }

    /// [`Self::verify_block_structure`] with a caller-supplied `¹D` oracle.
    pub fn verify_block_structure_against<F>(&self, n_max: u32, oracle: F) -> VerificationReport
    where
        F: Fn(u32) -> BivarPoly + Sync + Send,
    {
        let started = Instant::now();
        let generic = companion(FamilyId::DicksonReg2);
        let y = BivarPoly::y();
        let found = self.sweep(1, n_max, |n| {
            let expected = PolyMatrix::two_by_two(
                oracle(n + 1),
                &y * &oracle(n),
                oracle(n),
                &y * &oracle(n - 1),
            );
            first_matrix_mismatch(&format!("n={n}"), &generic.mat_pow(n + 1), &expected)
        });
        VerificationReport::finish(
            "block-structure",
            Coverage::Index { n_min: 1, n_max },
            started,
            found,
        )
    }

    /// `¹Dₙ + y·¹D_{n−2} = ²Dₙ` for `2 ≤ n ≤ n_max`.
    pub fn verify_kind_sum(&self, n_max: u32) -> VerificationReport {
        let d2 = dixon_sequence(Kind::First, Sign::Plus, n_max);
        self.verify_kind_sum_against(n_max, |n| d2[n as usize].clone())
    }

    /// [`Self::verify_kind_sum`] with a caller-supplied `²D` oracle.
    pub fn verify_kind_sum_against<F>(&self, n_max: u32, oracle: F) -> VerificationReport
    where
        F: Fn(u32) -> BivarPoly + Sync + Send,
    {
        let started = Instant::now();
        let d1 = dixon_sequence(Kind::Second, Sign::Plus, n_max);
        let y = BivarPoly::y();
        let found = self.sweep(2, n_max, |n| {
            let lhs = &d1[n as usize] + &(&y * &d1[n as usize - 2]);
            compare_polys(|| format!("n={n}"), &lhs, &oracle(n))
        });
        VerificationReport::finish(
            "kind-sum",
            Coverage::Index { n_min: 2, n_max },
            started,
            found,
        )
    }

    /// `det M^{⊙n} = (det M)^{n(n+1)/2}` on random integer matrices with
    /// entries in `[−3, 3]`, then symbolically for the generic companion,
    /// where the right side is `(−y)^{n(n+1)/2}`.
    pub fn verify_det_sym(
        &self,
        trials: u32,
        n_max: u32,
        symbolic_n_max: u32,
        seed: u64,
    ) -> Result<VerificationReport> {
        let largest = n_max.max(symbolic_n_max) as usize + 1;
        if largest > DEFAULT_DET_BOUND {
            return Err(Error::Capacity {
                size: largest,
                bound: DEFAULT_DET_BOUND,
            });
        }
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mats: Vec<_> = (0..trials)
            .map(|_| random_int_matrix(&mut rng, 3))
            .collect();
        let check = |m: &PolyMatrix, n: u32| {
            let lhs = m.sym_power(n).and_then(|s| s.det()).expect("within bound");
            let rhs = m.det().expect("2×2").pow(n * (n + 1) / 2);
            compare_polys(|| format!("M={m}, n={n}"), &lhs, &rhs)
        };
        let found = lowest(
            self.exec
                .map_slice(&mats, |m| (0..=n_max).find_map(|n| check(m, n))),
        );
        let generic = companion(FamilyId::DicksonReg2);
        let found = found.or_else(|| self.sweep(0, symbolic_n_max, |n| check(&generic, n)));
        Ok(VerificationReport::finish(
            "det-sym",
            Coverage::Trials {
                count: trials,
                n_max,
            },
            started,
            found,
        ))
    }

    /// Sum of the `k`-th subdiagonal of `M^{⊙n}` equals `¹D_{n−k}` for the
    /// generic companion and `1 ≤ k < n ≤ n_max`.
    pub fn verify_subdiag_sums(&self, n_max: u32) -> VerificationReport {
        let started = Instant::now();
        let generic = companion(FamilyId::DicksonReg2);
        let d1 = dixon_sequence(Kind::Second, Sign::Plus, n_max);
        let found = self.sweep(2, n_max.max(1), |n| {
            let s = generic.sym_power(n).expect("2×2");
            (1..n).find_map(|k| {
                let sum: BivarPoly = (0..=(n - k) as usize)
                    .map(|i| s.get(i + k as usize, i).clone())
                    .sum();
                compare_polys(|| format!("n={n}, k={k}"), &sum, &d1[(n - k) as usize])
            })
        });
        VerificationReport::finish(
            "subdiag-sums",
            Coverage::Index { n_min: 1, n_max },
            started,
            found,
        )
        .with_note(SUBDIAG_NOTE)
    }

    /// Floating checks at `angles` equispaced points of `(0, π)`:
    /// `Tₙ(cos φ) = cos nφ`, `Ṫₙ(2cos φ) = 2cos nφ`, and
    /// `U_{n−1}(cos φ)·sin φ = sin nφ`.
    pub fn verify_trig(&self, n_max: u32, angles: u32, tol: f64) -> VerificationReport {
        let started = Instant::now();
        let t = family_sequence(FamilyId::ChebyshevT, n_max);
        let rt = family_sequence(FamilyId::ReducedT, n_max);
        let u = family_sequence(FamilyId::ChebyshevU, n_max);
        let float_cex = |inputs: String, lhs: f64, rhs: f64| {
            // NaN must fail, so not `> tol`
            let close = (lhs - rhs).abs() <= tol;
            (!close).then(|| Counterexample {
                inputs,
                lhs: format!("{lhs:e}"),
                rhs: format!("{rhs:e}"),
            })
        };
        let found = self.sweep(0, n_max, |n| {
            let nf = f64::from(n);
            (0..angles).find_map(|i| {
                let phi = std::f64::consts::PI * f64::from(i + 1) / f64::from(angles + 1);
                let (s, c) = phi.sin_cos();
                let n_us = n as usize;
                float_cex(
                    format!("T, n={n}, phi={phi}"),
                    t[n_us].eval_float(c, 0.0),
                    (nf * phi).cos(),
                )
                .or_else(|| {
                    float_cex(
                        format!("reduced T, n={n}, phi={phi}"),
                        rt[n_us].eval_float(2.0 * c, 0.0),
                        2.0 * (nf * phi).cos(),
                    )
                })
                .or_else(|| {
                    (n >= 1)
                        .then(|| {
                            float_cex(
                                format!("U, n={n}, phi={phi}"),
                                u[n_us - 1].eval_float(c, 0.0) * s,
                                (nf * phi).sin(),
                            )
                        })
                        .flatten()
                })
            })
        });
        VerificationReport::finish("trig", Coverage::Index { n_min: 0, n_max }, started, found)
    }

    /// Runs the verifier named `id` with the ranges from `config`.
    pub fn run_one(&self, id: &str, config: &VerifyConfig) -> Result<VerificationReport> {
        let c = config;
        Ok(match id {
            "trace-lemma" => self.verify_trace_lemma(c.lemma_trials, c.seed),
            "prop1" => self.verify_prop1_random(c.prop1_trials, c.prop1_n_max, c.seed),
            "triangular-trace" => self.verify_triangular_trace(c.triangular_n_max, c.seed),
            "family-traces" => self.verify_family_traces(c.family_n_max),
            "sign-flip" => self.verify_sign_flip(c.relation_n_max),
            "specializations" => self.verify_specializations(c.relation_n_max),
            "reduced-relations" => self.verify_reduced_relations(c.relation_n_max),
            "parity" => self.verify_parity(c.relation_n_max),
            "sym-power-definition" => self.verify_sym_power_definition(
                c.sym_definition_trials,
                c.sym_definition_n_max,
                c.seed,
            ),
            "pascal" => self.verify_pascal(c.pascal_n_max),
            "block-structure" => self.verify_block_structure(c.block_n_max),
            "kind-sum" => self.verify_kind_sum(c.kind_sum_n_max),
            "det-sym" => {
                self.verify_det_sym(c.det_trials, c.det_n_max, c.det_symbolic_n_max, c.seed)?
            }
            "subdiag-sums" => self.verify_subdiag_sums(c.subdiag_n_max),
            "trig" => self.verify_trig(c.trig_n_max, c.trig_angles, c.tol),
            other => return Err(Error::Input(format!("unknown identity `{other}`"))),
        })
    }
}

/// Runs every verifier in [`VERIFIER_IDS`] order. Verifiers fan out under
/// `config.exec`; the report order does not depend on it.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    let verifier = Verifier::new(config.exec);
    config
        .exec
        .map_slice(VERIFIER_IDS, |id| verifier.run_one(id, config))
        .into_iter()
        .collect()
}

/// `Tr(A²B)` and `Tr A·Tr(AB) − det A·Tr B`.
pub fn trace_lemma_sides(a: &PolyMatrix, b: &PolyMatrix) -> (BivarPoly, BivarPoly) {
    let ab = a.mat_mul(b).expect("2×2");
    let lhs = a.mat_mul(&ab).expect("2×2").trace();
    let rhs = a.trace() * ab.trace() - a.det().expect("2×2") * b.trace();
    (lhs, rhs)
}

fn dixon_tables(n_max: u32) -> (Vec<BivarPoly>, Vec<BivarPoly>) {
    (
        dixon_sequence(Kind::First, Sign::Minus, n_max),
        dixon_sequence(Kind::Second, Sign::Minus, n_max),
    )
}

/// `p(x, y) ↦ p(x, −y)`, via term-wise sign flips.
fn negate_y(p: &BivarPoly, minus_y: &BivarPoly) -> BivarPoly {
    p.terms()
        .map(|(e, c)| BivarPoly::monomial(e.x, 0, c.clone()) * minus_y.pow(e.y))
        .sum()
}
