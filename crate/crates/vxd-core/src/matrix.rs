//! Dense matrices over the ambient function field.
//!
//! The determinant clears denominators row by row and runs fraction-free
//! Bareiss elimination over the polynomial ring; inverses go through the
//! adjugate so no intermediate entry ever needs an undeclared denominator.

use std::fmt;

use crate::ambient::{check_ambient, Ambient};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixA {
    ambient: Ambient,
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl MatrixA {
    pub fn new(ambient: Ambient, rows: usize, cols: usize, entries: Vec<RatFunc>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            check_ambient(&ambient, e.ambient())?;
        }
        Ok(MatrixA { ambient, rows, cols, entries })
    }

    pub fn from_rows(ambient: Ambient, rows: Vec<Vec<RatFunc>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(ambient, r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(ambient: Ambient, n: usize) -> Self {
        let mut entries = vec![RatFunc::zero(ambient.clone()); n * n];
        for i in 0..n {
            entries[i * n + i] = RatFunc::one(ambient.clone());
        }
        MatrixA { ambient, rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &MatrixA) -> Result<MatrixA> {
        check_ambient(&self.ambient, &other.ambient)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RatFunc::zero(self.ambient.clone());
                for k in 0..self.cols {
                    acc = acc.add_rf(&self.get(i, k).mul_rf(other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        MatrixA::new(self.ambient.clone(), self.rows, other.cols, entries)
    }

    pub fn add(&self, other: &MatrixA) -> Result<MatrixA> {
        check_ambient(&self.ambient, &other.ambient)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix addition".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add_rf(b))
            .collect();
        MatrixA::new(self.ambient.clone(), self.rows, self.cols, entries)
    }

    pub fn transpose(&self) -> MatrixA {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        MatrixA { ambient: self.ambient.clone(), rows: self.cols, cols: self.rows, entries }
    }

    pub fn trace(&self) -> Result<RatFunc> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("trace of a non-square matrix".into()));
        }
        let mut acc = RatFunc::zero(self.ambient.clone());
        for i in 0..self.rows {
            acc = acc.add_rf(self.get(i, i));
        }
        Ok(acc)
    }

    pub fn map_entrywise<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> MatrixA {
        MatrixA {
            ambient: self.ambient.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Determinant by row denominator clearing plus fraction-free Bareiss
    /// elimination over the polynomial ring.
    pub fn det(&self) -> Result<RatFunc> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut cleared: Vec<Vec<Poly>> = Vec::with_capacity(n);
        let mut den_product = Poly::one(self.ambient.clone());
        for i in 0..n {
            let mut row_den = Poly::one(self.ambient.clone());
            for j in 0..n {
                row_den = row_den.lcm(self.get(i, j).den());
            }
            let row = (0..n)
                .map(|j| {
                    let e = self.get(i, j);
                    let cofactor = row_den.div_exact(e.den()).expect("lcm divides");
                    e.num().mul(&cofactor)
                })
                .collect();
            cleared.push(row);
            den_product = den_product.mul(&row_den);
        }
        let det_poly = bareiss(cleared, &self.ambient);
        RatFunc::new(det_poly, den_product)
    }

    /// Exact inverse via the adjugate. Errors when the determinant vanishes
    /// or is not a unit of the algebra.
    pub fn inverse(&self) -> Result<MatrixA> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let det = self.det()?;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        if !det.is_unit() {
            return Err(Error::UnitViolation { determinant: det.to_string() });
        }
        let det_inv = det.inverse()?;
        let n = self.rows;
        if n == 1 {
            return MatrixA::new(self.ambient.clone(), 1, 1, vec![det_inv]);
        }
        let mut entries = vec![RatFunc::zero(self.ambient.clone()); n * n];
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j).det()?;
                let mut cof = minor.mul_rf(&det_inv);
                if (i + j) % 2 == 1 {
                    cof = cof.neg_rf();
                }
                // adjugate transposes the cofactor grid
                entries[j * n + i] = cof;
            }
        }
        MatrixA::new(self.ambient.clone(), n, n, entries)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> MatrixA {
        let n = self.rows;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == skip_row {
                continue;
            }
            for j in 0..n {
                if j == skip_col {
                    continue;
                }
                entries.push(self.get(i, j).clone());
            }
        }
        MatrixA { ambient: self.ambient.clone(), rows: n - 1, cols: n - 1, entries }
    }

    /// Entrywise derivation by the coordinate derivation `∂ᵢ`.
    pub fn partial(&self, i: usize) -> MatrixA {
        self.map_entrywise(|e| e.partial(i))
    }

    pub fn with_ambient(&self, ambient: &Ambient) -> Result<MatrixA> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.with_ambient(ambient))
            .collect::<Result<Vec<_>>>()?;
        MatrixA::new(ambient.clone(), self.rows, self.cols, entries)
    }
}

fn bareiss(mut m: Vec<Vec<Poly>>, ambient: &Ambient) -> Poly {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = Poly::one(ambient.clone());
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Poly::zero(ambient.clone()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero(ambient.clone());
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

impl fmt::Display for MatrixA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
