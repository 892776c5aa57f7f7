//! Exact scalars, vectors, linear maps and bilinear maps given by structure
//! constants.
//!
//! Vectors are plain `Vec<Scalar>` in the standard basis `e_1, ..., e_n`.

mod bilinear;
mod field;
mod linear;

pub use bilinear::BilinearMap;
pub use field::{FieldSpec, Scalar, MAX_MODULUS};
pub use linear::LinearMap;

use crate::error::Result;

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, dim: usize) -> Vector {
    vec![field.zero(); dim]
}

pub fn basis_vector(field: FieldSpec, dim: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, dim);
    v[i] = field.one();
    v
}

pub fn vadd(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn vneg(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// `acc += c * a`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, a: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (t, x) in acc.iter_mut().zip(a) {
        if !x.is_zero() {
            *t = &*t + &(c * x);
        }
    }
}

pub fn is_zero_vector(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// `sum_{i,j} x_i y_j (e_i o e_j)`.
pub fn bilinear_apply(m: &BilinearMap, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
    m.apply(x, y)
}

/// `f o g`, applying `g` first.
pub fn map_compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    f.compose(g)
}

pub fn map_invert(f: &LinearMap) -> Result<LinearMap> {
    f.invert()
}
