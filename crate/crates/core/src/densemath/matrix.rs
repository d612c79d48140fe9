//! Dense complex matrices in row-major storage.
//!
//! `ComplexMatrix` is the universal operator representation at desk scale:
//! Hamiltonians, jump operators, density matrices and vectorized
//! superoperators are all instances of it. Products go through
//! `matrixmultiply::zgemm`; everything else is straightforward loops.

use num_complex::Complex;

use crate::error::{LabError, Result};

pub type C64 = Complex<f64>;

/// Largest allowed entry count for any constructed matrix (2^26 entries,
/// 1 GiB of complex data). Kronecker products and superoperator assembly
/// check against this cap.
pub const ENTRY_CAP: usize = 1 << 26;

/// Dense complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl std::fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ComplexMatrix {}x{}", self.rows, self.cols)?;
        if self.rows <= 8 && self.cols <= 8 {
            for i in 0..self.rows {
                let row: Vec<String> = (0..self.cols)
                    .map(|j| format!("{:+.4}{:+.4}i", self[(i, j)].re, self[(i, j)].im))
                    .collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl ComplexMatrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(LabError::Dimension(format!(
                "entry count {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        let m = Self { rows, cols, data };
        if !m.is_finite() {
            return Err(LabError::Domain("matrix contains NaN/Inf entries".into()));
        }
        Ok(m)
    }

    pub fn from_rows(rows: usize, cols: usize, entries: &[C64]) -> Result<Self> {
        Self::from_vec(rows, cols, entries.to_vec())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn diag(values: &[C64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    /// Rank-one |u⟩⟨v|.
    pub fn outer(u: &[C64], v: &[C64]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose M†.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(C64::new(c, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add: shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub: shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: C64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += b * c;
        }
    }

    /// Matrix product via zgemm.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "mul: inner dimension mismatch");
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let mut out = Self::zeros(m, n);
        if m == 0 || k == 0 || n == 0 {
            return out;
        }
        unsafe {
            matrixmultiply::zgemm(
                matrixmultiply::CGemmOption::Standard,
                matrixmultiply::CGemmOption::Standard,
                m,
                k,
                n,
                [1.0, 0.0],
                self.data.as_ptr() as *const _,
                k as isize,
                1,
                other.data.as_ptr() as *const _,
                n as isize,
                1,
                [0.0, 0.0],
                out.data.as_mut_ptr() as *mut _,
                n as isize,
                1,
            );
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![C64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = C64::new(0.0, 0.0);
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            for (a, b) in row.iter().zip(v.iter()) {
                acc += a * b;
            }
            out[i] = acc;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Induced 1-norm (max absolute column sum); cheap bound used by expm.
    pub fn norm_one(&self) -> f64 {
        let mut best = 0.0f64;
        for j in 0..self.cols {
            let s: f64 = (0..self.rows).map(|i| self[(i, j)].norm()).sum();
            best = best.max(s);
        }
        best
    }

    /// Max entrywise deviation from Hermiticity, max_ij |M_ij − conj(M_ji)|.
    pub fn hermiticity_defect(&self) -> f64 {
        assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermiticity_defect() <= tol
    }

    /// (M + M†)/2.
    pub fn hermitize(&self) -> Self {
        assert!(self.is_square());
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()) * 0.5
        })
    }

    /// Kronecker product; result dimensions multiply.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let rows = self.rows.checked_mul(other.rows);
        let cols = self.cols.checked_mul(other.cols);
        let (rows, cols) = match (rows, cols) {
            (Some(r), Some(c)) if r.saturating_mul(c) <= ENTRY_CAP => (r, c),
            _ => {
                return Err(LabError::Dimension(format!(
                    "kron result {}x{} * {}x{} exceeds the {} entry cap",
                    self.rows, self.cols, other.rows, other.cols, ENTRY_CAP
                )))
            }
        };
        let mut out = Self::zeros(rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self[(i1, j1)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for i2 in 0..other.rows {
                    let ro = i1 * other.rows + i2;
                    for j2 in 0..other.cols {
                        out[(ro, j1 * other.cols + j2)] = a * other[(i2, j2)];
                    }
                }
            }
        }
        Ok(out)
    }

    /// Partial trace over the subsystems *not* listed in `keep`.
    ///
    /// `dims` are the subsystem dimensions in tensor order (leftmost factor
    /// first, matching `kron` chaining); `keep` lists the subsystem indices
    /// to retain, in ascending order.
    pub fn partial_trace(&self, dims: &[usize], keep: &[usize]) -> Result<Self> {
        let total: usize = dims.iter().product();
        if !self.is_square() || total != self.rows {
            return Err(LabError::Dimension(format!(
                "partial_trace: subsystem dims product {} != matrix dim {}",
                total, self.rows
            )));
        }
        if keep.windows(2).any(|w| w[0] >= w[1]) || keep.iter().any(|&k| k >= dims.len()) {
            return Err(LabError::Dimension(
                "partial_trace: keep set must be ascending and in range".into(),
            ));
        }
        let kept_dims: Vec<usize> = keep.iter().map(|&k| dims[k]).collect();
        let traced: Vec<usize> = (0..dims.len()).filter(|i| !keep.contains(i)).collect();
        let traced_dims: Vec<usize> = traced.iter().map(|&k| dims[k]).collect();
        let dk: usize = kept_dims.iter().product::<usize>().max(1);
        let dt: usize = traced_dims.iter().product::<usize>().max(1);

        // strides of each subsystem in the full index
        let mut strides = vec![0usize; dims.len()];
        let mut acc = 1usize;
        for i in (0..dims.len()).rev() {
            strides[i] = acc;
            acc *= dims[i];
        }

        let flat = |multi: &[usize], subs: &[usize]| -> usize {
            subs.iter().zip(multi.iter()).map(|(&s, &m)| strides[s] * m).sum()
        };

        let unrank = |mut x: usize, ds: &[usize]| -> Vec<usize> {
            let mut out = vec![0usize; ds.len()];
            for i in (0..ds.len()).rev() {
                out[i] = x % ds[i];
                x /= ds[i];
            }
            out
        };

        let mut out = Self::zeros(dk, dk);
        for ik in 0..dk {
            let ik_multi = unrank(ik, &kept_dims);
            let base_i = flat(&ik_multi, keep);
            for jk in 0..dk {
                let jk_multi = unrank(jk, &kept_dims);
                let base_j = flat(&jk_multi, keep);
                let mut acc = C64::new(0.0, 0.0);
                for t in 0..dt {
                    let t_multi = unrank(t, &traced_dims);
                    let off = flat(&t_multi, &traced);
                    acc += self[(base_i + off, base_j + off)];
                }
                out[(ik, jk)] = acc;
            }
        }
        Ok(out)
    }

    /// Column-stacking vectorization: v[j*rows + i] = M[i,j].
    ///
    /// With this convention vec(A X B) = (Bᵀ ⊗ A) vec(X).
    pub fn vectorize(&self) -> Vec<C64> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self[(i, j)]);
            }
        }
        v
    }

    /// Inverse of [`vectorize`]; the length must be a perfect square.
    pub fn unvectorize(v: &[C64]) -> Result<Self> {
        let d = (v.len() as f64).sqrt().round() as usize;
        if d * d != v.len() {
            return Err(LabError::Dimension(format!(
                "unvectorize: length {} is not a perfect square",
                v.len()
            )));
        }
        let mut m = Self::zeros(d, d);
        for j in 0..d {
            for i in 0..d {
                m[(i, j)] = v[j * d + i];
            }
        }
        Ok(m)
    }

    // nalgebra bridges (column-major on their side)

    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<C64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)])
    }

    pub fn from_nalgebra(m: &nalgebra::DMatrix<C64>) -> Self {
        Self::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
    }
}

/// Hilbert–Schmidt inner product ⟨A, B⟩ = Tr[A†B].
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> C64 {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    a.data()
        .iter()
        .zip(b.data().iter())
        .map(|(x, y)| x.conj() * y)
        .sum()
}
