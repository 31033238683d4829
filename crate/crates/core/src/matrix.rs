//! Small dense square integer matrices.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        Self {
            size,
            entries: vec![0; size * size],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for r in rows {
            if r.len() != size {
                return Err(Error::NotSquare {
                    rows: size,
                    cols: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(Self { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.size + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    /// Largest absolute row sum; bounds the modulus of every eigenvalue.
    pub fn max_abs_row_sum(&self) -> u64 {
        (0..self.size)
            .map(|i| self.row(i).iter().map(|v| v.unsigned_abs()).sum::<u64>())
            .max()
            .unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
