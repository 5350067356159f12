use nalgebra::DMatrix;
use num_complex::Complex64;

/// Quick probe of nalgebra's hermitian eigensolver on Complex64.
pub fn probe(n: usize) -> (f64, f64) {
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let raw = DMatrix::<Complex64>::from_fn(n, n, |_, _| {
        Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
    });
    let h = (&raw + raw.adjoint()).scale(0.5);
    let se = h.clone().symmetric_eigen();
    // reconstruction error
    let lam = DMatrix::<Complex64>::from_diagonal(&se.eigenvalues.map(|x| Complex64::new(x, 0.0)));
    let rec = &se.eigenvectors * lam * se.eigenvectors.adjoint();
    let err = (&h - &rec).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let orth = (se.eigenvectors.adjoint() * &se.eigenvectors - DMatrix::<Complex64>::identity(n, n))
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    (err, orth)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigensolver_probe() {
        for n in [2usize, 3, 8, 16, 32, 64] {
            let (err, orth) = probe(n);
            println!("n={n} rec_err={err:.3e} orth_err={orth:.3e}");
            assert!(err < 1e-9, "n={n} rec {err}");
            assert!(orth < 1e-9, "n={n} orth {orth}");
        }
    }
}
