//! Small prime fields GF(p), p in {2, 3, 5, 7}, and dense vectors/matrices
//! over them.
//!
//! Entries are stored as residues in `0..p`. Matrices are row-major. The
//! sizes that occur in this crate are tiny (at most 17x17), so everything
//! is plain byte arithmetic; the GF(2) bit-packed fast path lives in
//! [`crate::gf2`] and is selected by the rank routines in
//! [`crate::linalg`].

use std::fmt;

use crate::error::{Error, Result};

/// One of the supported prime fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u8,
}

impl FieldSpec {
    pub const SUPPORTED: [u8; 4] = [2, 3, 5, 7];

    pub fn new(p: u8) -> Result<Self> {
        if Self::SUPPORTED.contains(&p) {
            Ok(FieldSpec { p })
        } else {
            Err(Error::UnsupportedField(p))
        }
    }

    pub const fn gf2() -> Self {
        FieldSpec { p: 2 }
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    /// All field elements, in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0 && a < self.p);
        // p <= 7, so a linear scan beats anything clever.
        (1..self.p).find(|&x| self.mul(a, x) == 1).unwrap()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// A dense vector over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector {
    field: FieldSpec,
    entries: Vec<u8>,
}

impl FVector {
    pub fn new(field: FieldSpec, entries: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e >= field.p()) {
            return Err(Error::DimensionMismatch(format!(
                "entry {bad} is not a residue mod {}",
                field.p()
            )));
        }
        Ok(FVector { field, entries })
    }

    pub fn zero(field: FieldSpec, len: usize) -> Self {
        FVector {
            field,
            entries: vec![0; len],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn get(&self, i: usize) -> u8 {
        self.entries[i]
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A dense row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl FMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FMatrix {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: Vec<u8>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= field.p()) {
            return Err(Error::DimensionMismatch(format!(
                "entry {bad} is not a residue mod {}",
                field.p()
            )));
        }
        Ok(FMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Convenience constructor from row slices; handy in tests.
    pub fn from_rows(field: FieldSpec, rows: &[&[u8]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            entries.extend_from_slice(row);
        }
        Self::from_entries(field, r, c, entries)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!(i < self.rows && j < self.cols);
        debug_assert!(v < self.field.p());
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> FVector {
        let entries = (0..self.rows).map(|i| self.get(i, j)).collect();
        FVector {
            field: self.field,
            entries,
        }
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = FMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {}x{} beside {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = FMatrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j));
            }
        }
        Ok(m)
    }

    /// `self` with the column `w` appended.
    pub fn with_column(&self, w: &FVector) -> Result<FMatrix> {
        if self.field != w.field {
            return Err(Error::FieldMismatch);
        }
        if w.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "column of length {} next to a {}x{} matrix",
                w.len(),
                self.rows,
                self.cols
            )));
        }
        let mut m = FMatrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            m.set(i, self.cols, w.get(i));
        }
        Ok(m)
    }

    /// Matrix-vector product `self * x`.
    pub fn mul_vector(&self, x: &FVector) -> Result<FVector> {
        if self.field != x.field {
            return Err(Error::FieldMismatch);
        }
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times length-{} vector",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let f = self.field;
        let entries = (0..self.rows)
            .map(|i| {
                let mut acc = 0u8;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, j), x.get(j)));
                }
                acc
            })
            .collect();
        Ok(FVector {
            field: f,
            entries,
        })
    }
}

impl fmt::Display for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supported_fields_only() {
        for p in FieldSpec::SUPPORTED {
            assert!(FieldSpec::new(p).is_ok());
        }
        for p in [0, 1, 4, 6, 9, 11] {
            assert!(matches!(FieldSpec::new(p), Err(Error::UnsupportedField(q)) if q == p));
        }
    }

    #[test]
    fn arithmetic_tables() {
        for p in FieldSpec::SUPPORTED {
            let f = FieldSpec::new(p).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), (a + b) % p);
                    assert_eq!(f.mul(a, b), (a * b) % p);
                    assert_eq!(f.add(f.sub(a, b), b), a);
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn entries_validated() {
        let f = FieldSpec::new(3).unwrap();
        assert!(FVector::new(f, vec![0, 1, 2]).is_ok());
        assert!(FVector::new(f, vec![0, 3]).is_err());
        assert!(FMatrix::from_entries(f, 2, 2, vec![0, 1, 2, 3]).is_err());
        assert!(FMatrix::from_entries(f, 2, 2, vec![0, 1, 2]).is_err());
    }

    #[test]
    fn symmetry_and_transpose() {
        let f = FieldSpec::gf2();
        let m = FMatrix::from_rows(f, &[&[0, 1, 0], &[1, 1, 1], &[0, 1, 0]]).unwrap();
        assert!(m.is_symmetric());
        assert_eq!(m.transpose(), m);
        let a = FMatrix::from_rows(f, &[&[0, 1], &[0, 0]]).unwrap();
        assert!(!a.is_symmetric());
        assert_eq!(a.transpose().get(1, 0), 1);
    }

    #[test]
    fn hstack_shapes() {
        let f = FieldSpec::gf2();
        let a = FMatrix::identity(f, 2);
        let b = FMatrix::zeros(f, 3, 1);
        assert!(a.hstack(&b).is_err());
        let c = a.hstack(&a).unwrap();
        assert_eq!((c.rows(), c.cols()), (2, 4));
    }
}
