use std::time::Instant;
fn main() {
    for &n in &[1024usize, 2048] {
        let a = vec![1.0f64; n * n];
        let b = vec![1.0f64; n * n];
        let mut c = vec![0.0f64; n * n];
        let t0 = Instant::now();
        unsafe {
            matrixmultiply::dgemm(
                n, n, n, 1.0,
                a.as_ptr(), n as isize, 1,
                b.as_ptr(), n as isize, 1,
                0.0, c.as_mut_ptr(), n as isize, 1,
            );
        }
        let dt = t0.elapsed().as_secs_f64();
        let gflops = 2.0 * (n as f64).powi(3) / dt / 1e9;
        println!("dgemm n={n}: {dt:.2}s  {gflops:.1} Gflop/s");
    }
}
