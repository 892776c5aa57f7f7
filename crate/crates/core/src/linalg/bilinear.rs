use crate::error::{Error, Result};

use super::{axpy, FieldSpec, LinearMap, Scalar, Vector};

/// A bilinear product given by structure constants:
/// `e_i o e_j = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    field: FieldSpec,
    dim: usize,
    // index (i * dim + j) * dim + k; the product e_i o e_j is a contiguous slice
    c: Vec<Scalar>,
}

impl BilinearMap {
    pub fn new(field: FieldSpec, dim: usize, c: Vec<Scalar>) -> Result<Self> {
        if dim == 0 || c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: c.len(),
            });
        }
        if let Some(bad) = c.iter().find(|s| !field.contains(s)) {
            return Err(Error::FieldMismatch {
                left: field.to_string(),
                right: bad.field().to_string(),
            });
        }
        Ok(BilinearMap { field, dim, c })
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        BilinearMap {
            field,
            dim,
            c: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(field: FieldSpec, dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c.push(f(i, j, k));
                }
            }
        }
        BilinearMap { field, dim, c }
    }

    /// Builds a product from the listed nonzero constants `(i, j, k, value)`.
    pub fn from_entries(field: FieldSpec, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut m = Self::zero(field, dim);
        for &(i, j, k, v) in entries {
            m.c[(i * dim + j) * dim + k] = field.from_i64(v);
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.c
    }

    /// The coordinates of `e_i o e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.c[start..start + self.dim]
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.apply_unchecked(x, y))
    }

    pub(crate) fn apply_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = super::zero_vector(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.product(i, j));
            }
        }
        out
    }

    /// `p o m`.
    pub fn compose_left(&self, p: &LinearMap) -> BilinearMap {
        let n = self.dim;
        let mut c = Vec::with_capacity(self.c.len());
        for i in 0..n {
            for j in 0..n {
                c.extend(p.apply_unchecked(self.product(i, j)));
            }
        }
        BilinearMap {
            field: self.field,
            dim: n,
            c,
        }
    }

    /// `(x, y) -> m(f(x), g(y))`.
    pub fn precompose(&self, f: &LinearMap, g: &LinearMap) -> BilinearMap {
        let n = self.dim;
        let cols_f: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
        let cols_g: Vec<Vector> = (0..n).map(|j| g.column(j)).collect();
        let mut c = Vec::with_capacity(self.c.len());
        for fi in &cols_f {
            for gj in &cols_g {
                c.extend(self.apply_unchecked(fi, gj));
            }
        }
        BilinearMap {
            field: self.field,
            dim: n,
            c,
        }
    }

    /// `(x, y) -> m(y, x)`.
    pub fn opposite(&self) -> BilinearMap {
        let n = self.dim;
        BilinearMap::from_fn(self.field, n, |i, j, k| self.get(j, i, k).clone())
    }

    pub fn add(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!(self.dim, other.dim, "bilinear dimension mismatch");
        BilinearMap {
            field: self.field,
            dim: self.dim,
            c: super::vadd(&self.c, &other.c),
        }
    }

    pub fn sub(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!(self.dim, other.dim, "bilinear dimension mismatch");
        BilinearMap {
            field: self.field,
            dim: self.dim,
            c: super::vsub(&self.c, &other.c),
        }
    }

    pub fn scale(&self, s: &Scalar) -> BilinearMap {
        BilinearMap {
            field: self.field,
            dim: self.dim,
            c: super::vscale(s, &self.c),
        }
    }

    /// `m(x, y) - m(y, x)`.
    pub fn antisymmetrize(&self) -> BilinearMap {
        self.sub(&self.opposite())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// First index triple (0-based) breaking `c[i][i][k] = 0` or
    /// `c[i][j][k] = -c[j][i][k]`.
    pub fn alternating_defect(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.get(i, j, k);
                    let ok = if i == j {
                        a.is_zero()
                    } else {
                        (a + self.get(j, i, k)).is_zero()
                    };
                    if !ok {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}
