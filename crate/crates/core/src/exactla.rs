//! Incremental reduced row-echelon bases over `ℚ(ζₙ)`.
//!
//! Rows are kept in fully reduced form: each row has a leading 1 in its
//! pivot column and every other row is zero there. Membership of a vector
//! in the span is then a single forward pass over the rows.

use crate::cyclo::CycloField;
use crate::evalpoints::EvalVector;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: &'static CycloField,
    width: usize,
    rows: Vec<EvalVector>,
    /// Strictly increasing; `pivots[i]` belongs to `rows[i]`.
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &'static CycloField, width: usize) -> Self {
        EchelonBasis {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[EvalVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, v: &EvalVector) -> Result<()> {
        if v.len() != self.width {
            return Err(Error::input(format!(
                "vector of length {} for an echelon basis of width {}",
                v.len(),
                self.width
            )));
        }
        if let Some(x) = v.entries().first() {
            if x.field().n() != self.field.n() {
                return Err(Error::input("vector lives in a different cyclotomic field"));
            }
        }
        Ok(())
    }

    /// Residual of `v` after clearing every pivot column; zero iff `v` is in the span.
    pub fn reduce(&self, v: &EvalVector) -> Result<EvalVector> {
        self.check(v)?;
        let mut v = v.clone();
        self.reduce_in_place(&mut v);
        Ok(v)
    }

    fn reduce_in_place(&self, v: &mut EvalVector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.0[p].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v.0[p], self.field.zero());
            for (j, x) in row.0.iter().enumerate() {
                if j != p && !x.is_zero() {
                    v.0[j].sub_mul_assign(&c, x);
                }
            }
        }
    }

    pub fn contains(&self, v: &EvalVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &EvalVector) -> Result<bool> {
        self.check(v)?;
        let mut r = v.clone();
        self.reduce_in_place(&mut r);
        let Some(pivot) = r.0.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r.0[pivot].invert()?;
        for x in r.0.iter_mut().skip(pivot) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in &mut self.rows {
            if row.0[pivot].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut row.0[pivot], self.field.zero());
            for (j, x) in r.0.iter().enumerate().skip(pivot + 1) {
                if !x.is_zero() {
                    row.0[j].sub_mul_assign(&c, x);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, r);
        Ok(true)
    }
}
