use num_bigint::BigInt;
use proptest::prelude::*;

use qderiv_core::permstats::{self, Permutation, Stats};
use qderiv_core::poly::{gauss_binomial, int_binomial, q_multinomial, QPoly};
use qderiv_core::series::{DividedSeries, Mode, QSeries};
use qderiv_core::tcomb::{cut, enumerate_t_compositions, InsertionKind};

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-20i64..20, 0..7).prop_map(|c| QPoly::from_i64s(&c))
}

fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(poly(), 7).prop_map(|c| DividedSeries::new(Mode::Q, c).unwrap())
}

fn unit_series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(poly(), 6).prop_map(|mut c| {
        c.insert(0, QPoly::one());
        DividedSeries::new(Mode::Q, c).unwrap()
    })
}

/// A random permutation of `1..=n` from a Lehmer code.
fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| (0..n).map(|i| 0..n - i).collect::<Vec<_>>())
        .prop_map(|code| {
            let mut pool: Vec<usize> = (1..=code.len()).collect();
            let values = code.iter().map(|&i| pool.remove(i)).collect();
            Permutation::new(values).unwrap()
        })
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!(&(&a - &a), &QPoly::zero());
    }

    #[test]
    fn reverse_is_an_involution(a in poly(), extra in 0usize..4) {
        let d = a.degree().unwrap_or(0) + extra;
        let r = a.reverse(d).unwrap();
        prop_assert_eq!(r.reverse(d).unwrap(), a.clone());
        prop_assert_eq!(r.eval_at_one(), a.eval_at_one());
    }

    #[test]
    fn parse_display_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<QPoly>().unwrap(), a);
    }

    #[test]
    fn gaussian_binomials(n in 0usize..12, m in 0usize..12) {
        prop_assume!(m <= n);
        let g = gauss_binomial(n, m).unwrap();
        prop_assert_eq!(&g, &gauss_binomial(n, n - m).unwrap());
        prop_assert_eq!(g.eval_at_one(), int_binomial(n, m).unwrap());
        prop_assert_eq!(g.reverse(m * (n - m)).unwrap(), g.clone());
        prop_assert_eq!(q_multinomial(n, &[m, n - m]).unwrap(), g);
    }

    #[test]
    fn inverse_series(f in unit_series()) {
        let one = DividedSeries::one(Mode::Q, f.order()).unwrap();
        prop_assert_eq!(f.mul(&f.invert().unwrap()).unwrap(), one);
    }

    #[test]
    fn q_leibniz_rule(f in series(), g in series()) {
        // D_q(fg) = D_q f · g + f(qu) · D_q g
        let lhs = f.mul(&g).unwrap().d_q().unwrap();
        let rhs = f.d_q().unwrap().mul(&g.truncate(5)).unwrap()
            .add(&f.scale_arg(1).unwrap().truncate(5).mul(&g.d_q().unwrap()).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scale_arg_composes(f in series(), j in 0usize..3, k in 0usize..3) {
        prop_assert_eq!(
            f.scale_arg(j).unwrap().scale_arg(k).unwrap(),
            f.scale_arg(j + k).unwrap()
        );
    }

    #[test]
    fn statistics_of_the_inverse(p in permutation(9)) {
        let s = Stats::of(p.values());
        let t = Stats::of(p.inverse().values());
        prop_assert_eq!(s.inv, t.inv);
        prop_assert_eq!(s.iligne, t.ligne);
        prop_assert_eq!(s.imaj, t.maj);
        prop_assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn foata_and_psi(p in permutation(9)) {
        let s = p.stats();
        let phi = p.foata_phi();
        prop_assert_eq!(s.maj, phi.stats().inv);
        prop_assert_eq!(&s.iligne, &phi.stats().iligne);
        let psi = p.psi();
        prop_assert_eq!(s.imaj, psi.stats().inv);
        prop_assert_eq!(&s.ligne, &psi.stats().ligne);
    }

    #[test]
    fn mirror_and_complement(p in permutation(9)) {
        let n = p.len();
        let total = n * n.saturating_sub(1) / 2;
        prop_assert_eq!(p.stats().inv + p.mirror_rho().stats().inv, total);
        prop_assert_eq!(p.complement_gamma().mirror_rho().stats().inv, p.stats().inv);
    }

    #[test]
    fn insertion_round_trip(p in permutation(8), pick in any::<prop::sample::Index>()) {
        let comps = enumerate_t_compositions(p.len());
        let hits: Vec<_> = comps.iter().filter_map(|c| cut(p.values(), c)).collect();
        prop_assume!(!hits.is_empty());
        let w = pick.get(&hits);
        for i in 1..=w.mu() {
            let d = w.delta_star(i).unwrap();
            prop_assert_eq!(d.undo_insertion().unwrap(), (InsertionKind::First, i, w.clone()));
            let s = w.star_delta(i).unwrap();
            prop_assert_eq!(s.undo_insertion().unwrap(), (InsertionKind::Second, i, w.clone()));
        }
        let v = w.psi();
        prop_assert_eq!(v.lambda(), w.lambda());
        prop_assert_eq!(v.stats().inv, w.stats().imaj);
    }
}

#[test]
fn alternating_counts() {
    let counts: Vec<BigInt> = (0..=9)
        .map(|n| BigInt::from(permstats::enumerate_ra(n).count()))
        .collect();
    let euler: Vec<BigInt> = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]
        .iter()
        .map(|&x| BigInt::from(x))
        .collect();
    assert_eq!(counts, euler);
}
