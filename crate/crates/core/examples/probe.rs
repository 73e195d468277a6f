use nalgebra::{DMatrix, DVector};
use std::time::Instant;

fn main() {
    // complex eigenvalues of a small damped state matrix
    let a = DMatrix::<f64>::from_row_slice(2, 2, &[0.0, 1.0, -4.0, -0.4]);
    let ev = a.complex_eigenvalues();
    println!("complex eigenvalues: {:?}", ev.as_slice());

    // symmetric eigen timing at n=1200
    let n = 1200;
    let m = DMatrix::<f64>::from_fn(n, n, |i, j| ((i * 31 + j * 17) % 101) as f64 / 101.0);
    let s = &m * m.transpose();
    let t0 = Instant::now();
    let prod = &s * &s;
    println!("matmul {n}^3: {:?}, trace {}", t0.elapsed(), prod.trace());
    let t1 = Instant::now();
    let se = s.clone().symmetric_eigen();
    println!("symmetric_eigen {n}: {:?}, max {}", t1.elapsed(), se.eigenvalues.max());

    let t2 = Instant::now();
    let v = DVector::<f64>::from_element(n, 1.0);
    let mut w = v.clone();
    for _ in 0..100 {
        w = &s * &w;
        let nrm = w.norm();
        w /= nrm;
    }
    println!("100 matvecs {n}: {:?}, rq {}", t2.elapsed(), (w.transpose() * &s * &w)[(0,0)]);

    // svd
    let x = DMatrix::<f64>::from_fn(50, 3, |i, j| ((i + j * 7) % 13) as f64);
    let svd = x.clone().svd(true, true);
    println!("svd singular values: {:?}", svd.singular_values.as_slice());
}
