//! Dense square complex matrices, row-major.
//!
//! Dimensions here are small (at most 2^8 for an 8-spin register), so a
//! straightforward `Vec`-backed layout with tight loops beats pulling in a
//! BLAS. All quantum operators in the crate are carried by [`CMat`].

use num_complex::Complex64;
use rand::Rng;

pub type C64 = Complex64;

pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// e^{i phi}
#[inline]
pub fn cis(phi: f64) -> C64 {
    C64::new(phi.cos(), phi.sin())
}

/// Square complex matrix, row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    dim: usize,
    data: Vec<C64>,
}

impl CMat {
    pub fn zeros(dim: usize) -> Self {
        CMat { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diag(entries: &[C64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Convenience constructor from row slices; panics on ragged input.
    pub fn from_rows(rows: &[&[C64]]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "ragged row {i}");
            m.row_mut(i).copy_from_slice(row);
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [C64] {
        &mut self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> CMat {
        let n = self.dim;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn scale(&self, s: C64) -> CMat {
        CMat { dim: self.dim, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!(self.dim, other.dim);
        CMat {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!(self.dim, other.dim);
        CMat {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add_assign_scaled(&mut self, other: &CMat, s: C64) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * s;
        }
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.dim, rhs.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            let arow = self.row(i);
            // i-k-j order keeps both the rhs row and the output row streaming.
            for k in 0..n {
                let aik = arow[k];
                if aik == ZERO {
                    continue;
                }
                let brow = rhs.row(k);
                let orow = out.row_mut(i);
                for j in 0..n {
                    orow[j] += aik * brow[j];
                }
            }
        }
        out
    }

    /// `self * v` for a column vector.
    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.dim, v.len());
        let n = self.dim;
        let mut out = vec![ZERO; n];
        for i in 0..n {
            let row = self.row(i);
            let mut acc = ZERO;
            for j in 0..n {
                acc += row[j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// `self^† * v` without forming the adjoint.
    pub fn adjoint_mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.dim, v.len());
        let n = self.dim;
        let mut out = vec![ZERO; n];
        for i in 0..n {
            let row = self.row(i);
            let vi = v[i];
            for j in 0..n {
                out[j] += row[j].conj() * vi;
            }
        }
        out
    }

    /// Conjugation `self * m * self^†`.
    pub fn conjugate(&self, m: &CMat) -> CMat {
        self.mul(m).mul(&self.adjoint())
    }

    /// Kronecker product, `self` as the left (most significant) factor.
    pub fn kron(&self, rhs: &CMat) -> CMat {
        let (a, b) = (self.dim, rhs.dim);
        let mut out = CMat::zeros(a * b);
        for i in 0..a {
            for j in 0..a {
                let z = self[(i, j)];
                if z == ZERO {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        out[(i * b + k, j * b + l)] = z * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn fro_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_diff(&self, other: &CMat) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// ||m - m^†||_max, the Hermiticity defect.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// ||U^†U - I||_max, the unitarity defect.
    pub fn unitarity_defect(&self) -> f64 {
        self.adjoint().mul(self).max_diff(&CMat::identity(self.dim))
    }

    /// (m + m^†)/2
    pub fn symmetrize(&self) -> CMat {
        let n = self.dim;
        CMat::from_fn(n, |i, j| (self[(i, j)] + self[(j, i)].conj()) * 0.5)
    }

    /// Random Hermitian matrix with entries O(1); handy for stress tests.
    pub fn random_hermitian(dim: usize, rng: &mut impl Rng) -> CMat {
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(rng.gen_range(-1.0..1.0), 0.0);
            for j in (i + 1)..dim {
                let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
        m
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = C64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matmul_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = CMat::random_hermitian(5, &mut rng);
        let id = CMat::identity(5);
        assert_eq!(a.mul(&id).max_diff(&a), 0.0);
        assert_eq!(id.mul(&a).max_diff(&a), 0.0);
    }

    #[test]
    fn kron_dims_and_entries() {
        let a = CMat::from_rows(&[
            &[ONE, C64::new(2.0, 0.0)],
            &[ZERO, C64::new(0.0, 1.0)],
        ]);
        let b = CMat::identity(3);
        let k = a.kron(&b);
        assert_eq!(k.dim(), 6);
        assert_eq!(k[(0, 3)], C64::new(2.0, 0.0));
        assert_eq!(k[(4, 4)], C64::new(0.0, 1.0));
        assert_eq!(k[(1, 4)], C64::new(2.0, 0.0));
    }

    #[test]
    fn adjoint_mul_vec_matches_explicit() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = CMat::random_hermitian(7, &mut rng);
        let v: Vec<C64> =
            (0..7).map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let direct = a.adjoint().mul_vec(&v);
        let fused = a.adjoint_mul_vec(&v);
        for (x, y) in direct.iter().zip(&fused) {
            assert!((x - y).norm() < 1e-14);
        }
    }
}
