use proptest::prelude::*;

use bismash_core::arith::{divisors, factorial, gcd};
use bismash_core::construct::{build_from_seed, extract_seed, RemainderSeed, Workload};
use bismash_core::indicator::{indicator_bruteforce, indicator_reduced, indicator_table, IrrepDescriptor};
use bismash_core::matched_pair::{act_left, act_right, factorize, orbit, stabilizer};
use bismash_core::perm::{compose, Permutation};
use num_traits::ToPrimitive;

/// A permutation of S_{n-1}, viewed inside S_n.
fn fixing_n(max_n: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_n).prop_flat_map(|n| {
        Just((1..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |mut v| {
            v.push(n);
            Permutation::from_images(&v).unwrap()
        })
    })
}

fn seed(max_n: usize) -> impl Strategy<Value = RemainderSeed> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::sample::select(divisors(n))))
        .prop_flat_map(|(n, t)| {
            let m = n / t;
            let units: Vec<usize> = (0..m).filter(|&j| gcd(j, m) == 1).collect();
            (
                Just((n, t)),
                proptest::sample::select(units),
                Just((1..t).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(0..m, t - 1),
            )
        })
        .prop_map(|((n, t), j, mut sigma, u)| {
            sigma.push(t);
            RemainderSeed::new(n, t, j, Permutation::from_images(&sigma).unwrap(), u).unwrap()
        })
}

proptest! {
    #[test]
    fn cycles_round_trip(x in fixing_n(16)) {
        let text = x.to_string();
        prop_assert_eq!(Permutation::parse(&text, Some(x.n())).unwrap(), x.clone());
        let one_line: Permutation = format!("{:?}", x.images()).parse().unwrap();
        prop_assert_eq!(one_line, x);
    }

    #[test]
    fn inverse_composes_to_identity(x in fixing_n(16)) {
        prop_assert!(compose(&x, &x.inverse()).unwrap().is_identity());
        prop_assert_eq!(x.inverse().inverse(), x);
    }

    #[test]
    fn left_action_is_a_right_action(x in fixing_n(14), r in 0usize..40, s in 0usize..40) {
        let n = x.n();
        prop_assert_eq!(act_left(&act_left(&x, r), s), act_left(&x, (r + s) % n));
        prop_assert!(act_left(&x, r).fixes_n());
    }

    #[test]
    fn refactorization(x in fixing_n(14), r in 0usize..40) {
        let n = x.n();
        let lhs = compose(&x, &Permutation::shift(n, r)).unwrap();
        let rhs = compose(&Permutation::shift(n, act_right(&x, r)), &act_left(&x, r)).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let (r2, y) = factorize(&lhs);
        prop_assert_eq!(r2 % n, act_right(&x, r) % n);
        prop_assert_eq!(y, act_left(&x, r));
    }

    #[test]
    fn orbit_length_is_the_stabilizer(x in fixing_n(14)) {
        let o = orbit(&x);
        prop_assert_eq!(o.len(), stabilizer(&x).t);
        prop_assert!(o.members.iter().all(|y| o.representative <= *y));
    }

    #[test]
    fn seed_round_trip(s in seed(24)) {
        let x = build_from_seed(&s);
        prop_assert!(x.fixes_n());
        prop_assert_eq!(s.t % stabilizer(&x).t, 0);
        prop_assert_eq!(extract_seed(&x, s.t).unwrap(), s);
    }

    #[test]
    fn reduced_matches_bruteforce(x in fixing_n(10), i in 0usize..10) {
        let t = stabilizer(&x).t;
        let d = IrrepDescriptor::new(orbit(&x).representative, t, i % (x.n() / t)).unwrap();
        prop_assert_eq!(indicator_reduced(&d), indicator_bruteforce(&d));
    }
}

#[test]
fn squared_dimensions_sum_to_n_factorial() {
    for n in 2..=10 {
        let table = indicator_table(n, None, &Workload::unlimited()).unwrap();
        let want = factorial(n).to_u128().unwrap();
        assert_eq!(table.sum_of_squared_dimensions(), want, "n={n}");
    }
}
