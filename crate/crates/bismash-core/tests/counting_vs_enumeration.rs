use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use bismash_core::arith::{divisors, factorial};
use bismash_core::construct::{
    enumerate_involutions, enumerate_involutions_fixed, orbit_census, scan_exact_stabilizer, Workload,
};
use bismash_core::counting::tables::e_set;
use bismash_core::counting::CountContext;
use bismash_core::indicator::tally_pairs;
use bismash_core::matched_pair::{orbit, stabilizer};
use bismash_core::perm::Permutation;

const MAX_N: usize = 12;

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

/// Fixed points of x reduced mod t, counted in 1..=t.
fn fixed_mod(x: &Permutation, t: usize) -> usize {
    (1..=t).filter(|&k| x.apply(k) % t == k % t).count()
}

fn involutions(n: usize, t: usize) -> Vec<Permutation> {
    enumerate_involutions(n, t, &Workload::unlimited()).unwrap()
}

#[test]
fn m_matches_enumeration_and_factorial() {
    for n in 2..=MAX_N {
        let mut ctx = CountContext::new(n).unwrap();
        let mut total = BigInt::from(0);
        for t in divisors(n) {
            let enumerated = scan_exact_stabilizer(n, t, &Workload::unlimited(), |_| Some(())).unwrap().len();
            let counted = ctx.count_m(t).unwrap();
            assert_eq!(counted, big(enumerated), "M n={n} t={t}");
            total += counted;
        }
        assert_eq!(total, factorial(n - 1), "n={n}");
    }
}

#[test]
fn t_and_r_match_enumeration() {
    for n in 2..=MAX_N {
        let mut ctx = CountContext::new(n).unwrap();
        for t in divisors(n) {
            let invs = involutions(n, t);
            assert!(invs.iter().all(|x| x.is_involution() && stabilizer(x).t == t));
            assert_eq!(ctx.count_t(t).unwrap(), big(invs.len()), "T n={n} t={t}");
            let mut sum_r = BigInt::from(0);
            for r in 1..=n {
                let want = invs.iter().filter(|x| x.fixed_points().len() == r).count();
                let fixed = enumerate_involutions_fixed(n, t, r, &Workload::unlimited()).unwrap();
                assert_eq!(fixed.len(), want);
                let got = ctx.count_r(t, r).unwrap();
                assert_eq!(got, big(want), "R n={n} t={t} r={r}");
                sum_r += got;
            }
            assert_eq!(sum_r, ctx.count_t(t).unwrap(), "sum of R n={n} t={t}");
        }
    }
}

#[test]
fn x_and_c_match_enumeration() {
    for n in 2..=MAX_N {
        let mut ctx = CountContext::new(n).unwrap();
        let by_t: BTreeMap<usize, Vec<Permutation>> = divisors(n).into_iter().map(|t| (t, involutions(n, t))).collect();
        for t in divisors(n) {
            for r in 1..=t {
                let want = by_t[&t].iter().filter(|x| orbit(x).involution_count() == r).count();
                assert_eq!(ctx.count_x(t, r).unwrap(), big(want), "X n={n} t={t} r={r}");
                for s in divisors(t) {
                    let want = by_t[&s].iter().filter(|x| fixed_mod(x, t) == r).count();
                    assert_eq!(ctx.count_c(t, s, r).unwrap(), big(want), "C n={n} t={t} s={s} r={r}");
                }
            }
        }
    }
}

#[test]
fn r_is_c_at_the_top() {
    for n in 2..=24 {
        let mut ctx = CountContext::new(n).unwrap();
        for s in divisors(n) {
            for r in 1..=n {
                assert_eq!(ctx.count_r(s, r).unwrap(), ctx.count_c(n, s, r).unwrap(), "n={n} s={s} r={r}");
            }
        }
    }
}

#[test]
fn o_and_o_j_match_orbit_scan() {
    for n in 2..=MAX_N {
        let mut ctx = CountContext::new(n).unwrap();
        for t in divisors(n) {
            let census = orbit_census(n, t, &Workload::unlimited()).unwrap();
            for r in 0..=t {
                let want = census.get(&r).copied().unwrap_or(0);
                assert_eq!(ctx.count_o(t, r).unwrap(), BigInt::from(want), "O n={n} t={t} r={r}");
            }
            // orbits holding involutions, split by j
            let mut reps: BTreeSet<(usize, usize, Permutation)> = BTreeSet::new();
            for x in involutions(n, t) {
                let o = orbit(&x);
                reps.insert((o.stabilizer.j, o.involution_count(), o.representative));
            }
            let m = n / t;
            for r in 1..=t {
                let mut marginal = BigInt::from(0);
                for j in e_set(m) {
                    let want = reps.iter().filter(|(jj, rr, _)| *jj == j && *rr == r).count();
                    let got = ctx.count_o_j(t, r, j).unwrap();
                    assert_eq!(got, big(want), "O_j n={n} t={t} r={r} j={j}");
                    marginal += got;
                }
                assert_eq!(marginal, ctx.count_o(t, r).unwrap());
            }
        }
    }
}

#[test]
fn indicator_counts_match_tallies() {
    for n in 2..=MAX_N {
        let mut ctx = CountContext::new(n).unwrap();
        for t in divisors(n) {
            if t % 2 == 1 {
                let tally = tally_pairs(n, t, &Workload::unlimited()).unwrap();
                let counts = ctx.count_i_odd(t).unwrap();
                assert_eq!(tally.minus, 0);
                assert_eq!(counts.plus, BigInt::from(tally.plus), "I+ n={n} t={t}");
                assert_eq!(counts.zero, BigInt::from(tally.zero), "I0 n={n} t={t}");
            }
        }
    }
    for n in (4..=24).step_by(2) {
        let mut ctx = CountContext::new(n).unwrap();
        let tally = tally_pairs(n, 2, &Workload::unlimited()).unwrap();
        let counts = ctx.count_i_t2().unwrap();
        assert_eq!(
            (counts.plus, counts.minus, counts.zero),
            (BigInt::from(tally.plus), BigInt::from(tally.minus), BigInt::from(tally.zero)),
            "n={n}"
        );
    }
}
