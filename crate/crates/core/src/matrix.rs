//! Square matrices with [`BivarPoly`] entries.
//!
//! Besides the ring operations this module builds the symmetric tensor power
//! `M^{⊙n}` of a 2×2 matrix: the `(n+1)×(n+1)` matrix `S` with
//! `(M v)^{⊙n} = S v^{⊙n}`, where `v^{⊙n} = [Xⁿ, Xⁿ⁻¹Y, …, Yⁿ]` for two
//! formal variables `X`, `Y` that never appear in the result.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::BivarPoly;

/// Largest size [`PolyMatrix::det`] accepts.
pub const DEFAULT_DET_BOUND: usize = 10;

/// Row-major square matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<BivarPoly>,
}

impl PolyMatrix {
    pub fn zeros(size: usize) -> Self {
        Self {
            size,
            entries: vec![BivarPoly::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.entries[i * size + i] = BivarPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BivarPoly>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Input("matrix must have at least one row".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::Input(format!(
                "matrix is not square: row of length {} in a {size}-row matrix",
                bad.len()
            )));
        }
        Ok(Self {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix of integer constants.
    pub fn from_ints<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self {
            size: N,
            entries: rows
                .iter()
                .flat_map(|r| r.iter().map(|&v| BivarPoly::constant(v)))
                .collect(),
        }
    }

    /// `[[a, b], [c, d]]`.
    pub fn two_by_two(a: BivarPoly, b: BivarPoly, c: BivarPoly, d: BivarPoly) -> Self {
        Self {
            size: 2,
            entries: vec![a, b, c, d],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &BivarPoly {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BivarPoly) {
        self.entries[row * self.size + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BivarPoly]> + '_ {
        self.entries.chunks(self.size)
    }

    pub fn map_entries(&self, f: impl Fn(&BivarPoly) -> BivarPoly) -> Self {
        Self {
            size: self.size,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mat_mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.size != rhs.size {
            return Err(Error::Input(format!(
                "cannot multiply {0}×{0} by {1}×{1}",
                self.size, rhs.size
            )));
        }
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] = &out.entries[i * n + j] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Mⁿ` by repeated squaring; `M⁰` is the identity.
    pub fn mat_pow(&self, n: u32) -> PolyMatrix {
        let mut result = Self::identity(self.size);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mat_mul(&base).expect("same size");
            }
            n >>= 1;
            if n > 0 {
                base = base.mat_mul(&base).expect("same size");
            }
        }
        result
    }

    pub fn trace(&self) -> BivarPoly {
        (0..self.size).map(|i| self.get(i, i).clone()).sum()
    }

    /// Exact determinant by cofactor expansion, limited to
    /// [`DEFAULT_DET_BOUND`] rows.
    pub fn det(&self) -> Result<BivarPoly> {
        self.det_with_bound(DEFAULT_DET_BOUND)
    }

    /// Laplace expansion along the rows, sharing minors: after placing rows
    /// `0..r`, `minors[mask]` holds the signed sum over all ways of assigning
    /// the columns in `mask` to those rows.
    pub fn det_with_bound(&self, bound: usize) -> Result<BivarPoly> {
        let n = self.size;
        if n > bound {
            return Err(Error::Capacity { size: n, bound });
        }
        let full = (1usize << n) - 1;
        let mut minors = vec![BivarPoly::zero(); 1 << n];
        minors[0] = BivarPoly::one();
        for row in 0..n {
            let mut next = vec![BivarPoly::zero(); 1 << n];
            for mask in (0..=full).filter(|m| m.count_ones() as usize == row) {
                let partial = &minors[mask];
                if partial.is_zero() {
                    continue;
                }
                for col in (0..n).filter(|c| mask & (1 << c) == 0) {
                    let entry = self.get(row, col);
                    if entry.is_zero() {
                        continue;
                    }
                    // columns already used to the right of `col` each add an inversion
                    let inversions = (mask >> (col + 1)).count_ones();
                    let term = partial * entry;
                    let slot = &mut next[mask | (1 << col)];
                    *slot = if inversions % 2 == 0 {
                        &*slot + &term
                    } else {
                        &*slot - &term
                    };
                }
            }
            minors = next;
        }
        Ok(std::mem::take(&mut minors[full]))
    }

    fn check_two_by_two(&self) -> Result<()> {
        if self.size != 2 {
            return Err(Error::Input(format!(
                "symmetric powers need a 2×2 matrix, got {0}×{0}",
                self.size
            )));
        }
        Ok(())
    }

    /// Powers of the linear forms given by the two rows of a 2×2 matrix.
    fn row_form_powers(&self, n: u32) -> [Vec<Vec<BivarPoly>>; 2] {
        [0, 1].map(|row| linear_form_powers(self.get(row, 0), self.get(row, 1), n))
    }

    /// The `n`-th symmetric tensor power of a 2×2 matrix.
    ///
    /// Row `k` holds the coefficients of
    /// `(m₀₀X + m₀₁Y)^{n−k} · (m₁₀X + m₁₁Y)^k` in the basis `[Xⁿ, Xⁿ⁻¹Y, …, Yⁿ]`.
    /// `M^{⊙0}` is the 1×1 matrix `[1]`.
    pub fn sym_power(&self, n: u32) -> Result<PolyMatrix> {
        self.check_two_by_two()?;
        let [top, bottom] = self.row_form_powers(n);
        let size = n as usize + 1;
        let mut out = Self::zeros(size);
        for k in 0..size {
            let first = &top[size - 1 - k];
            let second = &bottom[k];
            for (i, a) in first.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (l, b) in second.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                    let slot = &mut out.entries[k * size + i + l];
                    *slot = &*slot + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// `Tr M^{⊙n}` from the diagonal alone, without building the full matrix.
    pub fn sym_power_trace(&self, n: u32) -> Result<BivarPoly> {
        self.check_two_by_two()?;
        let [top, bottom] = self.row_form_powers(n);
        let size = n as usize + 1;
        let mut trace = BivarPoly::zero();
        for k in 0..size {
            let first = &top[size - 1 - k];
            let second = &bottom[k];
            for (l, s) in second.iter().enumerate().take(k + 1) {
                let i = k - l;
                if i < first.len() && !first[i].is_zero() && !s.is_zero() {
                    trace = trace + &first[i] * s;
                }
            }
        }
        Ok(trace)
    }
}

/// `powers[j][i]` is the coefficient of `X^{j−i} Y^i` in `(aX + bY)^j`,
/// built by repeated multiplication with the form.
fn linear_form_powers(a: &BivarPoly, b: &BivarPoly, n: u32) -> Vec<Vec<BivarPoly>> {
    let mut powers = Vec::with_capacity(n as usize + 1);
    powers.push(vec![BivarPoly::one()]);
    for j in 1..=n as usize {
        let prev: &Vec<BivarPoly> = &powers[j - 1];
        let next = (0..=j)
            .map(|i| {
                let from_x = prev.get(i).filter(|c| !c.is_zero()).map(|c| c * a);
                let from_y = i
                    .checked_sub(1)
                    .and_then(|i| prev.get(i))
                    .filter(|c| !c.is_zero())
                    .map(|c| c * b);
                match (from_x, from_y) {
                    (Some(p), Some(q)) => p + q,
                    (Some(p), None) | (None, Some(p)) => p,
                    (None, None) => BivarPoly::zero(),
                }
            })
            .collect();
        powers.push(next);
    }
    powers
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, entry) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{entry}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[BivarPoly]> = self.rows().collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<BivarPoly>>::deserialize(deserializer)?;
        PolyMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
