//! 3x3 unit-triangular matrices over an arbitrary scalar.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Lower,
    Upper,
}

/// A unit-triangular 3x3 matrix. Multiplication of two matrices of the
/// same shape stays in that shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangularMatrix3<T> {
    entries: [[T; 3]; 3],
    shape: Shape,
}

impl<T: Scalar> TriangularMatrix3<T> {
    pub fn identity(shape: Shape) -> Self {
        let e = |i: usize, j: usize| if i == j { T::one() } else { T::zero() };
        TriangularMatrix3 {
            entries: [
                [e(0, 0), e(0, 1), e(0, 2)],
                [e(1, 0), e(1, 1), e(1, 2)],
                [e(2, 0), e(2, 1), e(2, 2)],
            ],
            shape,
        }
    }

    /// Entries below the diagonal: `(2,1)`, `(3,1)`, `(3,2)` in 1-based terms.
    pub fn lower(a21: T, a31: T, a32: T) -> Self {
        let mut m = Self::identity(Shape::Lower);
        m.entries[1][0] = a21;
        m.entries[2][0] = a31;
        m.entries[2][1] = a32;
        m
    }

    /// Entries above the diagonal: `(1,2)`, `(1,3)`, `(2,3)` in 1-based terms.
    pub fn upper(a12: T, a13: T, a23: T) -> Self {
        let mut m = Self::identity(Shape::Upper);
        m.entries[0][1] = a12;
        m.entries[0][2] = a13;
        m.entries[1][2] = a23;
        m
    }

    /// Accepts a row-major array and infers the shape. The identity is
    /// read as lower.
    pub fn from_rows(rows: [[T; 3]; 3]) -> Option<Self> {
        let unit_diag = (0..3).all(|i| rows[i][i].is_one());
        let above_zero = rows[0][1].is_zero() && rows[0][2].is_zero() && rows[1][2].is_zero();
        let below_zero = rows[1][0].is_zero() && rows[2][0].is_zero() && rows[2][1].is_zero();
        let shape = match (above_zero, below_zero) {
            (true, _) => Shape::Lower,
            (false, true) => Shape::Upper,
            (false, false) => return None,
        };
        unit_diag.then_some(TriangularMatrix3 {
            entries: rows,
            shape,
        })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// 1-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row - 1][col - 1]
    }

    pub fn rows(&self) -> &[[T; 3]; 3] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        (0..3).all(|i| {
            (0..3).all(|j| {
                let e = &self.entries[i][j];
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }
}

impl<T: Scalar> Mul for &TriangularMatrix3<T> {
    type Output = TriangularMatrix3<T>;

    fn mul(self, rhs: Self) -> TriangularMatrix3<T> {
        let mut out = TriangularMatrix3::identity(self.shape);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = T::zero();
                for k in 0..3 {
                    acc = acc + self.entries[i][k].clone() * rhs.entries[k][j].clone();
                }
                out.entries[i][j] = acc;
            }
        }
        // a product of an identity with a matrix takes the non-trivial shape
        if self.is_identity() {
            out.shape = rhs.shape;
        }
        out
    }
}

impl<T: Scalar> Mul for TriangularMatrix3<T> {
    type Output = TriangularMatrix3<T>;

    fn mul(self, rhs: Self) -> TriangularMatrix3<T> {
        &self * &rhs
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for TriangularMatrix3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let lines: Vec<String> = cells
            .iter()
            .map(|row| {
                let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                format!("[ {} ]", padded.join(" "))
            })
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

/// Row-major nested arrays of decimal strings, so entries of any size
/// survive a JSON round trip.
impl<T: Scalar + fmt::Display> Serialize for TriangularMatrix3<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for TriangularMatrix3<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(D::Error::custom("expected a 3x3 row-major array"));
        }
        let parse = |s: &String| {
            s.parse::<T>()
                .map_err(|_| D::Error::custom(format!("bad matrix entry {s:?}")))
        };
        let mut out = TriangularMatrix3::<T>::identity(Shape::Lower).entries;
        for (i, row) in rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                out[i][j] = parse(cell)?;
            }
        }
        TriangularMatrix3::from_rows(out)
            .ok_or_else(|| D::Error::custom("not a unit-triangular matrix"))
    }
}
