//! The ten polynomial families and their two constructions.
//!
//! Every family is generated twice: by its own three-term recurrence
//! ([`family_recurrence`]) and as a trace over its 2×2 companion matrix
//! ([`family_trace`]). First-kind families (initial constant 2) are traces of
//! ordinary powers; second-kind families (initial constant 1) are traces of
//! symmetric tensor powers.
//!
//! | family        | companion            | kind   | relation to regular `D`   |
//! |---------------|----------------------|--------|---------------------------|
//! | `DicksonStd2` | `[[x, -y], [1, 0]]`  | first  | `²P(x, y) = ²D(x, −y)`    |
//! | `DicksonStd1` | `[[x, -y], [1, 0]]`  | second | `¹P(x, y) = ¹D(x, −y)`    |
//! | `DicksonReg2` | `[[x, y], [1, 0]]`   | first  | `²D`                      |
//! | `DicksonReg1` | `[[x, y], [1, 0]]`   | second | `¹D`                      |
//! | `Lucas`       | `[[x, 1], [1, 0]]`   | first  | `²D` at `y = 1`           |
//! | `Fibonacci`   | `[[x, 1], [1, 0]]`   | second | `¹D` at `y = 1`           |
//! | `ReducedT`    | `[[x, -1], [1, 0]]`  | first  | `²D` at `y = −1`          |
//! | `ReducedU`    | `[[x, -1], [1, 0]]`  | second | `¹D` at `y = −1`          |
//! | `ChebyshevT`  | `[[2x, -1], [1, 0]]` | first  | `½ ²D(2x, −1)`            |
//! | `ChebyshevU`  | `[[2x, -1], [1, 0]]` | second | `¹D(2x, −1)`              |
//!
//! At `n = 5` the recurrences give
//! `²P₅ = x⁵ − 5x³y + 5xy²`, `¹P₅ = x⁵ − 4x³y + 3xy²`,
//! `²D₅ = x⁵ + 5x³y + 5xy²` and `¹D₅ = x⁵ + 4x³y + 3xy²`. Tables that print
//! the last coefficient of these four as `3xy²` and `2xy²` respectively are
//! misprinted: the recurrence values are the ones consistent with `L₅` and `F₅`
//! at `y = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::BivarPoly;

/// Initial constant of a Dickson-type recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `c = 2`; traces of ordinary powers.
    First,
    /// `c = 1`; traces of symmetric powers.
    Second,
}

impl Kind {
    pub fn constant(self) -> i64 {
        match self {
            Kind::First => 2,
            Kind::Second => 1,
        }
    }

    pub fn from_constant(c: i64) -> Result<Self> {
        match c {
            2 => Ok(Kind::First),
            1 => Ok(Kind::Second),
            other => Err(Error::Input(format!(
                "initial constant must be 1 or 2, got {other}"
            ))),
        }
    }
}

/// Sign of the `y`-term in the recurrence step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Standard convention, `P_{n+1} = x P_n − y P_{n−1}`.
    Minus,
    /// Regular convention, `D_{n+1} = x D_n + y D_{n−1}`.
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "+1" | "1" | "plus" | "regular" => Ok(Sign::Plus),
            "-" | "-1" | "minus" | "standard" => Ok(Sign::Minus),
            other => Err(Error::Input(format!("unknown sign `{other}`"))),
        }
    }
}

/// How a family arises from the regular Dickson polynomials `D(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// Bivariate; no substitution (the standard families use `y → −y`).
    None,
    /// `y` fixed to the given value.
    Y(i64),
    /// `y` fixed and `x → 2x`.
    YAndDoubledX(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    DicksonStd1,
    DicksonStd2,
    DicksonReg1,
    DicksonReg2,
    ChebyshevT,
    ChebyshevU,
    ReducedT,
    ReducedU,
    Lucas,
    Fibonacci,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        FamilyId::DicksonStd1,
        FamilyId::DicksonStd2,
        FamilyId::DicksonReg1,
        FamilyId::DicksonReg2,
        FamilyId::ChebyshevT,
        FamilyId::ChebyshevU,
        FamilyId::ReducedT,
        FamilyId::ReducedU,
        FamilyId::Lucas,
        FamilyId::Fibonacci,
    ];

    pub fn dickson(kind: Kind, sign: Sign) -> Self {
        match (kind, sign) {
            (Kind::Second, Sign::Minus) => FamilyId::DicksonStd1,
            (Kind::First, Sign::Minus) => FamilyId::DicksonStd2,
            (Kind::Second, Sign::Plus) => FamilyId::DicksonReg1,
            (Kind::First, Sign::Plus) => FamilyId::DicksonReg2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::DicksonStd1 => "dickson-std-1",
            FamilyId::DicksonStd2 => "dickson-std-2",
            FamilyId::DicksonReg1 => "dickson-reg-1",
            FamilyId::DicksonReg2 => "dickson-reg-2",
            FamilyId::ChebyshevT => "chebyshev-t",
            FamilyId::ChebyshevU => "chebyshev-u",
            FamilyId::ReducedT => "reduced-t",
            FamilyId::ReducedU => "reduced-u",
            FamilyId::Lucas => "lucas",
            FamilyId::Fibonacci => "fibonacci",
        }
    }

    /// Which trace construction yields the family.
    pub fn kind(self) -> Kind {
        match self {
            FamilyId::DicksonStd2
            | FamilyId::DicksonReg2
            | FamilyId::ChebyshevT
            | FamilyId::ReducedT
            | FamilyId::Lucas => Kind::First,
            FamilyId::DicksonStd1
            | FamilyId::DicksonReg1
            | FamilyId::ChebyshevU
            | FamilyId::ReducedU
            | FamilyId::Fibonacci => Kind::Second,
        }
    }

    pub fn sign(self) -> Sign {
        match self {
            FamilyId::DicksonReg1
            | FamilyId::DicksonReg2
            | FamilyId::Lucas
            | FamilyId::Fibonacci => Sign::Plus,
            _ => Sign::Minus,
        }
    }

    pub fn is_bivariate(self) -> bool {
        matches!(
            self,
            FamilyId::DicksonStd1
                | FamilyId::DicksonStd2
                | FamilyId::DicksonReg1
                | FamilyId::DicksonReg2
        )
    }

    /// Factor multiplying `x` in the recurrence step and in the companion.
    pub fn x_scale(self) -> i64 {
        match self {
            FamilyId::ChebyshevT | FamilyId::ChebyshevU => 2,
            _ => 1,
        }
    }

    /// Whether the trace is twice the family member.
    pub fn halves_trace(self) -> bool {
        self == FamilyId::ChebyshevT
    }

    pub fn specialization(self) -> Specialization {
        if self.is_bivariate() {
            Specialization::None
        } else if self.x_scale() == 2 {
            Specialization::YAndDoubledX(self.sign().value())
        } else {
            Specialization::Y(self.sign().value())
        }
    }

    /// `(P₀, P₁)` of the family's own recurrence.
    pub fn initial_terms(self) -> (BivarPoly, BivarPoly) {
        match self {
            FamilyId::ChebyshevT => (BivarPoly::one(), BivarPoly::x()),
            FamilyId::ChebyshevU => (BivarPoly::one(), BivarPoly::monomial(1, 0, 2)),
            f => (BivarPoly::constant(f.kind().constant()), BivarPoly::x()),
        }
    }

    /// The `y`-slot of the step: `±y` for Dickson families, `±1` otherwise.
    fn lower_coefficient(self) -> BivarPoly {
        let sign = self.sign().value();
        if self.is_bivariate() {
            BivarPoly::monomial(0, 1, sign)
        } else {
            BivarPoly::constant(sign)
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown family `{s}`")))
    }
}

fn three_term(
    p0: BivarPoly,
    p1: BivarPoly,
    step: &BivarPoly,
    lower: &BivarPoly,
    n: u32,
) -> Vec<BivarPoly> {
    let mut seq = vec![p0];
    if n == 0 {
        return seq;
    }
    seq.push(p1);
    for k in 2..=n as usize {
        let next = step * &seq[k - 1] + lower * &seq[k - 2];
        seq.push(next);
    }
    seq
}

/// `P₀ … P_n` of the Dickson recurrence with `P₀ = c`, `P₁ = x`.
pub fn dixon_sequence(kind: Kind, sign: Sign, n: u32) -> Vec<BivarPoly> {
    three_term(
        BivarPoly::constant(kind.constant()),
        BivarPoly::x(),
        &BivarPoly::x(),
        &BivarPoly::monomial(0, 1, sign.value()),
        n,
    )
}

/// The `n`-th standard (`Sign::Minus`) or regular (`Sign::Plus`) Dickson
/// polynomial of the given kind.
pub fn dixon_recurrence(kind: Kind, sign: Sign, n: u32) -> BivarPoly {
    dixon_sequence(kind, sign, n).pop().expect("non-empty")
}

/// Members `0..=n` of a family from its defining recurrence.
pub fn family_sequence(f: FamilyId, n: u32) -> Vec<BivarPoly> {
    let (p0, p1) = f.initial_terms();
    let step = BivarPoly::monomial(1, 0, f.x_scale());
    three_term(p0, p1, &step, &f.lower_coefficient(), n)
}

pub fn family_recurrence(f: FamilyId, n: u32) -> BivarPoly {
    family_sequence(f, n).pop().expect("non-empty")
}

/// `[[s·x, b], [1, 0]]` with trace `s·x` and determinant `−b`.
pub fn companion(f: FamilyId) -> PolyMatrix {
    PolyMatrix::two_by_two(
        BivarPoly::monomial(1, 0, f.x_scale()),
        f.lower_coefficient(),
        BivarPoly::one(),
        BivarPoly::zero(),
    )
}

/// The family member computed from its companion matrix.
///
/// Fails only if a Chebyshev-T trace has an odd coefficient, which would mean
/// the halving relation is broken.
pub fn family_trace(f: FamilyId, n: u32) -> Result<BivarPoly> {
    let c = companion(f);
    let trace = match f.kind() {
        Kind::First => c.mat_pow(n).trace(),
        Kind::Second => c.sym_power(n)?.trace(),
    };
    if f.halves_trace() {
        trace.halve_exact()
    } else {
        Ok(trace)
    }
}

/// Both sides of `T_n(x) = ½ Ṫ_n(2x)` or `U_n(x) = U̇_n(2x)`.
pub fn relate_reduced(f: FamilyId, n: u32) -> Result<(BivarPoly, BivarPoly)> {
    let two = BigInt::from(2);
    match f {
        FamilyId::ChebyshevT => {
            let rhs = family_recurrence(FamilyId::ReducedT, n)
                .scale_x(&two)
                .halve_exact()?;
            Ok((family_recurrence(f, n), rhs))
        }
        FamilyId::ChebyshevU => {
            let rhs = family_recurrence(FamilyId::ReducedU, n).scale_x(&two);
            Ok((family_recurrence(f, n), rhs))
        }
        other => Err(Error::Input(format!(
            "reduction relation is defined for chebyshev-t and chebyshev-u, not {other}"
        ))),
    }
}
