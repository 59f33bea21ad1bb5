//! Exact integer values of the families at a point, by 2×2 big-integer
//! matrix powers.
//!
//! For a companion `C = [[a, b], [1, 0]]`:
//! * first kind: `Tr Cⁿ`
//! * second kind: the lower-left entry of `Cⁿ⁺¹`, which equals the trace of
//!   the `n`-th symmetric power without building it.
//!
//! Fibonacci values use the polynomial indexing `F₀ = F₁ = 1`, so
//! `fibonacci_number(n)` is the classical Fibonacci number with index `n + 1`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{FamilyId, Kind, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMatrix2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// `[[a, b], [1, 0]]`.
    pub fn companion(a: BigInt, b: BigInt) -> Self {
        Self::new(a, b, BigInt::one(), BigInt::zero())
    }

    /// Product; adds the eight big-integer multiplications to `mults`.
    pub fn mul_counted(&self, rhs: &Self, mults: &mut u64) -> Self {
        *mults += 8;
        Self {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn pow_counted(&self, mut n: u64, mults: &mut u64) -> Self {
        let mut result = Self::identity();
        let mut base = self.clone();
        let mut first = true;
        while n > 0 {
            if n & 1 == 1 {
                if first {
                    result = base.clone();
                    first = false;
                } else {
                    result = result.mul_counted(&base, mults);
                }
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_counted(&base, mults);
            }
        }
        result
    }

    pub fn pow(&self, n: u64) -> Self {
        self.pow_counted(n, &mut 0)
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }
}

/// A family at a fixed numeric point, reduced to its companion entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqTarget {
    pub kind: Kind,
    /// Upper-left companion entry (the trace).
    pub a: BigInt,
    /// Upper-right companion entry (minus the determinant).
    pub b: BigInt,
    /// Whether the raw value is twice the wanted one.
    pub halve: bool,
}

impl SeqTarget {
    pub fn dixon(kind: Kind, sign: Sign, x0: BigInt, y0: BigInt) -> Self {
        Self {
            kind,
            a: x0,
            b: y0 * sign.value(),
            halve: false,
        }
    }

    /// `y0` is ignored for the univariate families.
    pub fn family(f: FamilyId, x0: BigInt, y0: BigInt) -> Self {
        let y = if f.is_bivariate() { y0 } else { BigInt::one() };
        Self {
            kind: f.kind(),
            a: x0 * f.x_scale(),
            b: y * f.sign().value(),
            halve: f.halves_trace(),
        }
    }

    fn finish(&self, raw: BigInt) -> Result<BigInt> {
        if !self.halve {
            return Ok(raw);
        }
        if raw.bit(0) {
            return Err(Error::IdentityViolation(format!(
                "odd value {raw} cannot be halved"
            )));
        }
        Ok(raw / 2)
    }

    pub fn matrix_pow_counted(&self, n: u64, mults: &mut u64) -> Result<BigInt> {
        let c = IntMatrix2::companion(self.a.clone(), self.b.clone());
        let raw = match self.kind {
            Kind::First => c.pow_counted(n, mults).trace(),
            Kind::Second => c.pow_counted(n + 1, mults).c,
        };
        self.finish(raw)
    }

    /// `P_{k+1} = a·P_k + b·P_{k−1}` from `P₀ = c`, `P₁ = a`; two
    /// multiplications per step.
    pub fn recurrence_counted(&self, n: u64, mults: &mut u64) -> Result<BigInt> {
        let mut prev = BigInt::from(self.kind.constant());
        if n == 0 {
            return self.finish(prev);
        }
        let mut cur = self.a.clone();
        for _ in 1..n {
            let next = &self.a * &cur + &self.b * &prev;
            *mults += 2;
            prev = std::mem::replace(&mut cur, next);
        }
        self.finish(cur)
    }

    pub fn value(&self, n: u64) -> Result<BigInt> {
        self.matrix_pow_counted(n, &mut 0)
    }
}

/// `L(n) = Tr [[1, 1], [1, 0]]ⁿ`: 2, 1, 3, 4, 7, 11, …
pub fn lucas_number(n: u64) -> BigInt {
    IntMatrix2::companion(BigInt::one(), BigInt::one())
        .pow(n)
        .trace()
}

/// Lower-left entry of `[[1, 1], [1, 0]]ⁿ⁺¹`: 1, 1, 2, 3, 5, 8, …
pub fn fibonacci_number(n: u64) -> BigInt {
    IntMatrix2::companion(BigInt::one(), BigInt::one())
        .pow(n + 1)
        .c
}

/// Value of the `n`-th Dickson polynomial at `(x0, y0)`.
pub fn dixon_value(kind: Kind, sign: Sign, n: u64, x0: &BigInt, y0: &BigInt) -> BigInt {
    SeqTarget::dixon(kind, sign, x0.clone(), y0.clone())
        .value(n)
        .expect("no halving for Dickson targets")
}

pub fn family_value(f: FamilyId, n: u64, x0: &BigInt, y0: &BigInt) -> Result<BigInt> {
    SeqTarget::family(f, x0.clone(), y0.clone()).value(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Recurrence,
    MatrixPow,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Recurrence => "recurrence",
            Strategy::MatrixPow => "matrix_pow",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recurrence" => Ok(Strategy::Recurrence),
            "matrix_pow" | "matrix-pow" => Ok(Strategy::MatrixPow),
            other => Err(Error::Input(format!("unknown strategy `{other}`"))),
        }
    }
}

/// One timing row; `bigint_mults` counts a single evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRecord {
    pub strategy: Strategy,
    pub n: u64,
    pub reps: u32,
    pub ns_total: u128,
    pub bigint_mults: u64,
    pub value: BigInt,
}

pub const BENCH_CSV_HEADER: &str = "strategy,n,reps,ns_total,bigint_mults";

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.strategy, self.n, self.reps, self.ns_total, self.bigint_mults
        )
    }
}

fn run(strategy: Strategy, target: &SeqTarget, n: u64, mults: &mut u64) -> Result<BigInt> {
    match strategy {
        Strategy::Recurrence => target.recurrence_counted(n, mults),
        Strategy::MatrixPow => target.matrix_pow_counted(n, mults),
    }
}

/// Times `reps` evaluations with `strategy`, after checking that both
/// strategies produce the same value.
pub fn bench(strategy: Strategy, target: &SeqTarget, n: u64, reps: u32) -> Result<BenchRecord> {
    let mut mults = 0;
    let value = run(strategy, target, n, &mut mults)?;
    let other = match strategy {
        Strategy::Recurrence => Strategy::MatrixPow,
        Strategy::MatrixPow => Strategy::Recurrence,
    };
    let check = run(other, target, n, &mut 0)?;
    if check != value {
        return Err(Error::IdentityViolation(format!(
            "{strategy} gives {value} but {other} gives {check} at n = {n}"
        )));
    }
    let start = Instant::now();
    for _ in 0..reps {
        std::hint::black_box(run(strategy, target, n, &mut 0)?);
    }
    Ok(BenchRecord {
        strategy,
        n,
        reps,
        ns_total: start.elapsed().as_nanos(),
        bigint_mults: mults,
        value,
    })
}
