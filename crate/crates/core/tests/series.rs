use proptest::prelude::*;
use seqinv_core::ntt::{convolve, schoolbook};
use seqinv_core::sequences::{c_terms, inverse_terms, rudin_terms, thue_terms, Method, SequenceId};
use seqinv_core::series::catalog::Equation;
use seqinv_core::series::{comp_inverse_ref, compose, newton_root, residual};
use seqinv_core::{PowerSeries, Prime};

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

#[test]
fn every_catalogued_root_solves_its_equation() {
    for eq in Equation::all(&[prime(2), prime(3), prime(5), prime(7)]) {
        let root = newton_root(&eq.poly(), &eq.seed(), 1500).unwrap();
        assert_eq!(root.order(), 1500);
        assert!(residual(&eq.poly(), &root).unwrap().is_zero(), "{eq:?}");
    }
}

#[test]
fn newton_roots_are_the_named_series() {
    for p in [2, 3, 5] {
        let eq = Equation::ThueMorse(prime(p));
        let f = newton_root(&eq.poly(), &eq.seed(), 700).unwrap();
        assert_eq!(f, thue_terms(prime(p), 700).to_series());
    }
    let eq = Equation::Rudin;
    let r = newton_root(&eq.poly(), &eq.seed(), 700).unwrap();
    assert_eq!(r, rudin_terms(SequenceId::Rudin, 700).unwrap().to_series());
}

#[test]
fn inverses_undo_each_other() {
    let n = 600;
    for p in [3, 7] {
        let f = thue_terms(prime(p), n).to_series();
        let g = c_terms(prime(p), n, Method::Recurrence).unwrap().to_series();
        assert_eq!(compose(&f, &g).unwrap(), PowerSeries::x(prime(p), n));
        assert_eq!(comp_inverse_ref(&f).unwrap(), g);
    }
    let r2 = rudin_terms(SequenceId::RudinShifted, n).unwrap().to_series();
    let v = inverse_terms(SequenceId::V, n, Method::Newton).unwrap().to_series();
    assert_eq!(compose(&v, &r2).unwrap(), PowerSeries::x(prime(2), n));
}

proptest! {
    #[test]
    fn fast_convolution_matches_schoolbook(
        a in prop::collection::vec(0u32..7, 0..300),
        b in prop::collection::vec(0u32..7, 0..300),
        extra in 0usize..20,
    ) {
        let len = a.len() + b.len() + extra;
        prop_assert_eq!(convolve(&a, &b, prime(7), len), schoolbook(&a, &b, prime(7), len));
    }

    #[test]
    fn composition_is_associative(
        f in prop::collection::vec(0u32..5, 40),
        g in prop::collection::vec(0u32..5, 40),
        h in prop::collection::vec(0u32..5, 40),
    ) {
        let p = prime(5);
        let zero_const = |mut v: Vec<u32>| { v[0] = 0; PowerSeries::new(p, v) };
        let (f, g, h) = (PowerSeries::new(p, f), zero_const(g), zero_const(h));
        let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
