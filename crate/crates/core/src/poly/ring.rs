use std::fmt;

use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals, with arbitrary precision.
    Rational,
    /// The prime field `F_p`.
    Prime(u32),
}

impl Field {
    /// Checked constructor for `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        if p < 2 || !(2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(Error::Domain(format!("{p} is not a prime")));
        }
        if p >= 1 << 16 {
            return Err(Error::Domain(format!("prime {p} too large (must be < 65536)")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Index of a variable inside a [`Ring`].
///
/// Matrix variables are numbered row-major: entry `(row, col)` of the
/// `rows x cols` generic matrix gets index `(row - 1) * cols + (col - 1)`.
/// Auxiliary variables (used internally for elimination) follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub(crate) u16);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Polynomial ring over the entries of a generic `rows x cols` matrix,
/// optionally extended by a few auxiliary variables.
///
/// For the classical two-row case `x_j` is entry `(1, j)` and `y_j` is
/// entry `(2, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    rows: u16,
    cols: u16,
    aux: u16,
    field: Field,
}

impl Ring {
    pub fn new(rows: usize, cols: usize, field: Field) -> Self {
        assert!(rows >= 1 && cols >= 1, "ring needs at least one row and column");
        assert!(rows * cols < 4096, "ring too large");
        Ring {
            rows: rows as u16,
            cols: cols as u16,
            aux: 0,
            field,
        }
    }

    /// `QQ[x_1..x_n, y_1..y_n]`.
    pub fn classical(n: usize) -> Self {
        Ring::new(2, n, Field::Rational)
    }

    pub fn rows(&self) -> usize {
        self.rows as usize
    }

    pub fn cols(&self) -> usize {
        self.cols as usize
    }

    pub fn aux_count(&self) -> usize {
        self.aux as usize
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn with_field(self, field: Field) -> Self {
        Ring { field, ..self }
    }

    pub fn with_aux(self, aux: usize) -> Self {
        Ring {
            aux: aux as u16,
            ..self
        }
    }

    pub fn matrix_var_count(&self) -> usize {
        self.rows() * self.cols()
    }

    pub fn var_count(&self) -> usize {
        self.matrix_var_count() + self.aux_count()
    }

    /// The variable at `(row, col)`, both 1-based.
    pub fn var(&self, row: usize, col: usize) -> VarId {
        self.try_var(row, col).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_var(&self, row: usize, col: usize) -> Result<VarId> {
        if row == 0 || row > self.rows() || col == 0 || col > self.cols() {
            return Err(Error::Context(format!(
                "variable ({row},{col}) outside a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(VarId(((row - 1) * self.cols() + (col - 1)) as u16))
    }

    pub fn x(&self, col: usize) -> VarId {
        self.var(1, col)
    }

    pub fn y(&self, col: usize) -> VarId {
        self.var(2, col)
    }

    pub fn aux_var(&self, k: usize) -> VarId {
        assert!(k < self.aux_count(), "auxiliary variable {k} not in ring");
        VarId((self.matrix_var_count() + k) as u16)
    }

    /// All variables of column `col`.
    pub fn column_vars(&self, col: usize) -> Vec<VarId> {
        (1..=self.rows()).map(|r| self.var(r, col)).collect()
    }

    /// `(row, col)` for a matrix variable, `None` for auxiliaries.
    pub fn coords(&self, v: VarId) -> Option<(usize, usize)> {
        let i = v.index();
        (i < self.matrix_var_count()).then(|| (i / self.cols() + 1, i % self.cols() + 1))
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        v.index() < self.var_count()
    }

    pub fn var_name(&self, v: VarId) -> String {
        match self.coords(v) {
            Some((row, col)) if self.rows <= 3 => {
                format!("{}{}", ["x", "y", "z"][row - 1], col)
            }
            Some((row, col)) => format!("v{row}_{col}"),
            None => {
                let k = v.index() - self.matrix_var_count();
                if k == 0 {
                    "t".to_string()
                } else {
                    format!("t{k}")
                }
            }
        }
    }

    /// Inverse of [`Ring::var_name`].
    pub fn parse_var(&self, name: &str) -> Option<VarId> {
        if name.is_empty() || !name.is_ascii() {
            return None;
        }
        let (head, tail) = name.split_at(1);
        match head {
            "x" | "y" | "z" if self.rows <= 3 => {
                let row = match head {
                    "x" => 1,
                    "y" => 2,
                    _ => 3,
                };
                let col: usize = tail.parse().ok()?;
                self.try_var(row, col).ok()
            }
            "v" => {
                let (r, c) = tail.split_once('_')?;
                self.try_var(r.parse().ok()?, c.parse().ok()?).ok()
            }
            "t" => {
                let k: usize = if tail.is_empty() { 0 } else { tail.parse().ok()? };
                (k < self.aux_count()).then(|| VarId((self.matrix_var_count() + k) as u16))
            }
            _ => None,
        }
    }

    /// Human readable description of the fixed term order convention.
    pub fn order_convention(&self) -> String {
        let names: Vec<String> = (0..self.matrix_var_count())
            .map(|i| self.var_name(VarId(i as u16)))
            .collect();
        format!("DiagonalLex: lexicographic, {}", names.join(" > "))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}x{} matrix", self.field, self.rows, self.cols)?;
        if self.aux > 0 {
            write!(f, " + {} aux", self.aux)?;
        }
        write!(f, "]")
    }
}
