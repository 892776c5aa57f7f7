use crate::error::{Error, Result};

use super::{FieldSpec, Scalar, Vector};

/// A square matrix acting on column vectors; column `j` is the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    field: FieldSpec,
    dim: usize,
    // row-major: entries[r * dim + c] is the e_r coefficient of f(e_c)
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn new(field: FieldSpec, dim: usize, entries: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|s| !field.contains(s)) {
            return Err(Error::FieldMismatch {
                left: field.to_string(),
                right: bad.field().to_string(),
            });
        }
        Ok(LinearMap {
            field,
            dim,
            entries,
        })
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: r.len(),
            });
        }
        Self::new(field, dim, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers.
    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn identity(field: FieldSpec, dim: usize) -> Self {
        Self::scalar(field, dim, field.one())
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        LinearMap {
            field,
            dim,
            entries: vec![field.zero(); dim * dim],
        }
    }

    pub fn scalar(field: FieldSpec, dim: usize, c: Scalar) -> Self {
        let mut m = Self::zero(field, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn diagonal(field: FieldSpec, diag: Vec<Scalar>) -> Result<Self> {
        let dim = diag.len();
        let mut m = Self::zero(field, dim);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        Self::new(field, dim, m.entries)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim)
    }

    /// Image of the basis vector `e_col`.
    pub fn column(&self, col: usize) -> Vector {
        (0..self.dim).map(|r| self.entry(r, col).clone()).collect()
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vector> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &[Scalar]) -> Vector {
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    fn check_compatible(&self, other: &LinearMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// `self o g`: apply `g`, then `self`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap> {
        self.check_compatible(g)?;
        Ok(self.compose_unchecked(g))
    }

    pub(crate) fn compose_unchecked(&self, g: &LinearMap) -> LinearMap {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = self.field.zero();
                for k in 0..n {
                    let a = self.entry(r, k);
                    let b = g.entry(k, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        LinearMap {
            field: self.field,
            dim: n,
            entries,
        }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_compatible(other)?;
        Ok(LinearMap {
            field: self.field,
            dim: self.dim,
            entries: super::vadd(&self.entries, &other.entries),
        })
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            field: self.field,
            dim: self.dim,
            entries: super::vscale(c, &self.entries),
        }
    }

    /// `self^n` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, mut n: u64) -> LinearMap {
        let mut acc = LinearMap::identity(self.field, self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.compose_unchecked(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim;
        (0..n).all(|r| {
            (0..n).all(|c| {
                let e = self.entry(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Gauss-Jordan elimination on `[self | I]`.
    pub fn invert(&self) -> Result<LinearMap> {
        let n = self.dim;
        let w = 2 * n;
        let mut m: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.entries[r * n..(r + 1) * n].to_vec();
                row.extend((0..n).map(|c| {
                    if c == r {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::SingularMap)?;
            m.swap(col, pivot);
            let inv = m[col][col].inv().expect("nonzero pivot");
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in 0..w {
                        let t = &factor * &m[col][c];
                        m[r][c] = &m[r][c] - &t;
                    }
                }
            }
        }
        let entries = m.into_iter().flat_map(|row| row[n..].to_vec()).collect();
        Ok(LinearMap {
            field: self.field,
            dim: n,
            entries,
        })
    }

    /// A nonzero vector `v` with `self(v) = 0`, if one exists.
    pub fn kernel_vector(&self) -> Option<Vector> {
        let n = self.dim;
        let mut m: Vec<Vec<Scalar>> = self.rows().map(|r| r.to_vec()).collect();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].inv().expect("nonzero pivot");
            for x in m[row].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in 0..n {
                        let t = &factor * &m[row][c];
                        m[r][c] = &m[r][c] - &t;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        let free = (0..n).find(|c| !pivot_cols.contains(c))?;
        let mut v = super::zero_vector(self.field, n);
        v[free] = self.field.one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -&m[r][free];
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn p_nil() -> LinearMap {
        // u -> t, t -> 0 in the basis (u, t)
        LinearMap::from_i64_rows(q(), &[&[0, 0], &[1, 0]]).unwrap()
    }

    #[test]
    fn identity_is_left_unit() {
        let g = LinearMap::from_i64_rows(q(), &[&[1, 2], &[3, 4]]).unwrap();
        let id = LinearMap::identity(q(), 2);
        assert_eq!(id.compose(&g).unwrap(), g);
    }

    #[test]
    fn nilpotent_squares_to_zero() {
        let p = p_nil();
        assert!(p.compose(&p).unwrap().is_zero());
    }

    #[test]
    fn identity_over_f2() {
        let f2 = FieldSpec::prime(2).unwrap();
        let id = LinearMap::identity(f2, 3);
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    #[test]
    fn diagonal_inverse() {
        let d = LinearMap::from_i64_rows(q(), &[&[1, 0], &[0, 2]]).unwrap();
        let inv = d.invert().unwrap();
        assert_eq!(inv.entry(1, 1), &q().fraction(1, 2).unwrap());
        assert!(inv.compose(&d).unwrap().is_identity());
        assert!(LinearMap::identity(q(), 3).invert().unwrap().is_identity());
    }

    #[test]
    fn singular_inverse_fails() {
        assert!(matches!(p_nil().invert(), Err(Error::SingularMap)));
        let k = p_nil().kernel_vector().unwrap();
        assert!(super::super::is_zero_vector(&p_nil().apply(&k).unwrap()));
        assert!(LinearMap::identity(q(), 2).kernel_vector().is_none());
    }

    #[test]
    fn compose_rejects_mismatch() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(
            LinearMap::identity(q(), 2).compose(&LinearMap::identity(f2, 2)),
            Err(Error::FieldMismatch { .. })
        ));
        assert!(matches!(
            LinearMap::identity(q(), 2).compose(&LinearMap::identity(q(), 3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn pow_matches_repeated_compose() {
        let m = LinearMap::from_i64_rows(q(), &[&[1, 1], &[0, 2]]).unwrap();
        let mut acc = LinearMap::identity(q(), 2);
        for n in 0..6 {
            assert_eq!(m.pow(n), acc);
            acc = acc.compose(&m).unwrap();
        }
    }
}
