#[cfg(test)]
mod nalgebra_probe {
    use nalgebra::{DMatrix, Complex};
    type C64 = Complex<f64>;

    #[test]
    fn complex_hermitian_eigen() {
        // H = [[1, i],[-i, 2]] hermitian; eigenvalues (3±sqrt(5))/2
        let h = DMatrix::from_row_slice(2, 2, &[
            C64::new(1.0, 0.0), C64::new(0.0, 1.0),
            C64::new(0.0, -1.0), C64::new(2.0, 0.0),
        ]);
        let eig = h.clone().symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let lo = (3.0 - 5.0f64.sqrt()) / 2.0;
        let hi = (3.0 + 5.0f64.sqrt()) / 2.0;
        assert!((vals[0] - lo).abs() < 1e-12, "got {vals:?}");
        assert!((vals[1] - hi).abs() < 1e-12);
        // reconstruction
        let v = &eig.eigenvectors;
        let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|x| C64::new(x, 0.0)));
        let rec = v * d * v.adjoint();
        assert!((rec - h).norm() < 1e-12);
    }

    #[test]
    fn complex_svd() {
        let t = DMatrix::from_row_slice(2, 2, &[
            C64::new(0.0, 2.0), C64::new(1.0, 0.0),
            C64::new(0.0, 0.0), C64::new(0.0, -1.0),
        ]);
        let svd = t.clone().svd(true, true);
        let u = svd.u.unwrap();
        let vt = svd.v_t.unwrap();
        let s = DMatrix::from_diagonal(&svd.singular_values.map(|x| C64::new(x, 0.0)));
        let rec = u * s * vt;
        assert!((rec - t).norm() < 1e-12);
    }

    #[test]
    fn real_schur_complex_eigenvalues() {
        // companion-ish real matrix with complex eigenvalues 0, +/- i
        let m = DMatrix::from_row_slice(3, 3, &[
            0.0, -1.0, 0.0,
            1.0, 0.0, 0.0,
            0.0, 0.0, 0.0,
        ]);
        let ev = m.complex_eigenvalues();
        let mut ims: Vec<f64> = ev.iter().map(|z| z.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ims[0] + 1.0).abs() < 1e-12, "{ev:?}");
        assert!((ims[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complex_lu_solve() {
        let a = DMatrix::from_row_slice(2, 2, &[
            C64::new(2.0, 0.0), C64::new(0.0, 1.0),
            C64::new(0.0, -1.0), C64::new(3.0, 0.0),
        ]);
        let b = DMatrix::identity(2, 2);
        let lu = a.clone().lu();
        let x = lu.solve(&b).unwrap();
        assert!(((&a * &x) - DMatrix::<C64>::identity(2, 2)).norm() < 1e-12);
    }

    #[test]
    fn zgemm_works() {
        // matrixmultiply zgemm: row-major C = A*B
        let a = [C64::new(1.0, 1.0), C64::new(2.0, 0.0), C64::new(0.0, 1.0), C64::new(1.0, 0.0)];
        let b = [C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)];
        let mut c = [C64::new(0.0, 0.0); 4];
        unsafe {
            matrixmultiply::zgemm(
                matrixmultiply::CGemmOption::Standard,
                matrixmultiply::CGemmOption::Standard,
                2, 2, 2,
                [1.0, 0.0],
                a.as_ptr() as *const _, 2, 1,
                b.as_ptr() as *const _, 2, 1,
                [0.0, 0.0],
                c.as_mut_ptr() as *mut _, 2, 1,
            );
        }
        assert!((c[0] - a[0]).norm() < 1e-15);
        assert!((c[3] - a[3]).norm() < 1e-15);
    }
}
