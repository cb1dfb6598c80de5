mod common;

use common::{rel_err, rng};
use ddperm::generate::{random_admissible_matrix, random_admissible_tensor, random_strongly_dominant};
use ddperm::{
    normalize_strongly_dominant, permanent_ryser, permanent_tensor, strip_diagonal_matrix, strip_diagonal_tensor,
    Complex, DominanceForm,
};

const ONE: Complex = Complex::new(1.0, 0.0);

#[test]
fn normalization_preserves_permanent() {
    let mut r = rng(21);
    for n in 1..=7 {
        for _ in 0..5 {
            let b = random_strongly_dominant(&mut r, n, 0.7);
            let p = normalize_strongly_dominant(&b, 0.7).unwrap();
            assert!(p.report.admissible && p.report.effective_lambda <= 0.7);
            assert_eq!(p.report.form, DominanceForm::ZeroDiagonalA);
            let got = p.log_prefactor.exp() * permanent_ryser(&p.a.shifted(ONE)).unwrap();
            assert!(rel_err(got, permanent_ryser(&b).unwrap()) < 1e-9);
        }
    }
}

#[test]
fn stripping_preserves_permanent_matrix() {
    let mut r = rng(22);
    for n in 1..=7 {
        for _ in 0..5 {
            let a = random_admissible_matrix(&mut r, n, 0.9, false);
            let p = strip_diagonal_matrix(&a).unwrap();
            assert!(p.report.admissible);
            assert!((0..n).all(|i| p.a.get(i, i) == Complex::new(0.0, 0.0)));
            let got = p.log_prefactor.exp() * permanent_ryser(&p.a.shifted(ONE)).unwrap();
            assert!(rel_err(got, permanent_ryser(&a.shifted(ONE)).unwrap()) < 1e-9);
        }
    }
}

#[test]
fn stripping_preserves_permanent_tensor() {
    let mut r = rng(23);
    for n in 1..=4 {
        for _ in 0..5 {
            let a = random_admissible_tensor(&mut r, 3, n, 0.9, false);
            let p = strip_diagonal_tensor(&a).unwrap();
            assert!(p.report.admissible);
            assert_eq!(p.report.form, DominanceForm::ZeroDiagonalA);
            let got = p.log_prefactor.exp() * permanent_tensor(&p.a.shifted(ONE)).unwrap();
            assert!(rel_err(got, permanent_tensor(&a.shifted(ONE)).unwrap()) < 1e-9);
        }
    }
}
