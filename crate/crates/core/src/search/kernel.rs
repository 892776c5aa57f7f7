//! Word-sized arithmetic mod p for candidate screening.
//!
//! Matrices are row-major `d x d` arrays of residues; entry `(r, c)` is the
//! `e_r` coefficient of the image of `e_c`. Tensors use the same layout as
//! [`BilinearMap`]: `c[(i*d + j)*d + k]`.

use crate::linalg::{BilinearMap, LinearMap, Scalar};
use crate::linalg::FieldSpec;

#[derive(Debug, Clone)]
pub(crate) struct Tensor {
    pub c: Vec<u32>,
}

pub(crate) fn residue(s: &Scalar) -> u32 {
    s.residue_value().expect("prime-field scalar") as u32
}

impl Tensor {
    pub fn from_map(m: &BilinearMap) -> Self {
        Tensor {
            c: m.constants().iter().map(residue).collect(),
        }
    }
}

pub(crate) fn matrix_from_map(m: &LinearMap) -> Vec<u32> {
    m.entries().iter().map(residue).collect()
}

pub(crate) fn matrix_to_map(field: FieldSpec, d: usize, m: &[u32]) -> LinearMap {
    LinearMap::new(field, d, m.iter().map(|&v| field.residue(u64::from(v))).collect()).expect("square matrix")
}

/// Scratch space and arithmetic for one dimension and modulus.
#[derive(Debug, Clone)]
pub(crate) struct Kernel {
    pub p: u64,
    pub d: usize,
}

impl Kernel {
    pub fn new(p: u64, d: usize) -> Self {
        Kernel { p, d }
    }

    /// Writes the digits of `index` (base p, most significant first) into `m`.
    pub fn decode(&self, mut index: u64, m: &mut [u32]) {
        for slot in m.iter_mut().rev() {
            *slot = (index % self.p) as u32;
            index /= self.p;
        }
    }

    /// Advances `m` to the next matrix in lexicographic order.
    pub fn increment(&self, m: &mut [u32]) {
        for slot in m.iter_mut().rev() {
            *slot += 1;
            if u64::from(*slot) == self.p {
                *slot = 0;
            } else {
                return;
            }
        }
    }

    pub fn column(&self, m: &[u32], c: usize) -> Vec<u32> {
        (0..self.d).map(|r| m[r * self.d + c]).collect()
    }

    pub fn apply(&self, m: &[u32], v: &[u32]) -> Vec<u32> {
        let d = self.d;
        (0..d)
            .map(|r| {
                let s: u64 = (0..d).map(|c| u64::from(m[r * d + c]) * u64::from(v[c])).sum();
                (s % self.p) as u32
            })
            .collect()
    }

    pub fn product(&self, t: &Tensor, x: &[u32], y: &[u32]) -> Vec<u32> {
        let d = self.d;
        let mut acc = vec![0u64; d];
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                let xy = u64::from(x[i]) * u64::from(y[j]) % self.p;
                if xy == 0 {
                    continue;
                }
                let base = (i * d + j) * d;
                for (k, a) in acc.iter_mut().enumerate() {
                    *a += xy * u64::from(t.c[base + k]);
                }
            }
        }
        acc.into_iter().map(|a| (a % self.p) as u32).collect()
    }

    fn product_basis(&self, t: &Tensor, i: usize, j: usize) -> Vec<u32> {
        let base = (i * self.d + j) * self.d;
        t.c[base..base + self.d].to_vec()
    }

    fn add3(&self, a: &[u32], b: &[u32], c: &[u32], w: u32) -> Vec<u32> {
        (0..self.d)
            .map(|k| ((u64::from(a[k]) + u64::from(b[k]) + u64::from(w) * u64::from(c[k])) % self.p) as u32)
            .collect()
    }

    /// `P_a(x) P_b(y) = P_a(x P_b(y)) + P_b(P_a(x) y) + w P_a(xy)` on basis pairs.
    pub fn rota_baxter(&self, t: &Tensor, pa: &[u32], pb: &[u32], w: u32) -> bool {
        let cols_a: Vec<Vec<u32>> = (0..self.d).map(|c| self.column(pa, c)).collect();
        let cols_b: Vec<Vec<u32>> = (0..self.d).map(|c| self.column(pb, c)).collect();
        let basis = |i: usize| {
            let mut e = vec![0u32; self.d];
            e[i] = 1;
            e
        };
        for i in 0..self.d {
            let ei = basis(i);
            for j in 0..self.d {
                let ej = basis(j);
                let lhs = self.product(t, &cols_a[i], &cols_b[j]);
                let inner_a = self.product(t, &ei, &cols_b[j]);
                let inner_b = self.product(t, &cols_a[i], &ej);
                let xy = self.product_basis(t, i, j);
                // P_a(x P_b y) + w P_a(xy) = P_a(x P_b y + w xy)
                let zero = vec![0u32; self.d];
                let a_arg = self.add3(&inner_a, &zero, &xy, w);
                let rhs_a = self.apply(pa, &a_arg);
                let rhs_b = self.apply(pb, &inner_b);
                let rhs = self.add3(&rhs_a, &rhs_b, &zero, 0);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// `p(x o y) = p(x) o p(y)` on basis pairs.
    pub fn endomorphism(&self, t: &Tensor, p: &[u32]) -> bool {
        let cols: Vec<Vec<u32>> = (0..self.d).map(|c| self.column(p, c)).collect();
        for i in 0..self.d {
            for j in 0..self.d {
                let lhs = self.apply(p, &self.product_basis(t, i, j));
                if lhs != self.product(t, &cols[i], &cols[j]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn multiply(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let d = self.d;
        let mut out = vec![0u32; d * d];
        for r in 0..d {
            for c in 0..d {
                let s: u64 = (0..d).map(|k| u64::from(a[r * d + k]) * u64::from(b[k * d + c])).sum();
                out[r * d + c] = (s % self.p) as u32;
            }
        }
        out
    }

    pub fn commutes(&self, a: &[u32], b: &[u32]) -> bool {
        self.multiply(a, b) == self.multiply(b, a)
    }
}
