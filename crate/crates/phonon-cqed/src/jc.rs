//! probe
use ndarray::{array, Array2};
use ndarray_linalg::Eig;
use num_complex::Complex64;

pub fn probe_eig() -> f64 {
    let m: Array2<Complex64> = array![
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.5)],
        [Complex64::new(2.0, -0.5), Complex64::new(-1.0, 0.0)]
    ];
    let (vals, _vecs) = m.eig().unwrap();
    vals.iter().map(|z| z.re).sum()
}

#[cfg(test)]
mod tests {
    #[test]
    fn eig_links_and_runs() {
        let s = super::probe_eig();
        assert!((s - (-1.0)).abs() < 1e-12, "trace mismatch: {s}");
    }
}
