use num_bigint::BigUint;
use proptest::prelude::*;
use taufield::arith::{self, factorize, multiplicative_order, pow_mod};
use taufield::fields::{
    power_residue_character, split_cyclotomic, split_quadratic, CyclotomicField, KummerField,
    QuadraticField,
};
use taufield::ideal::{
    big_omega_ideal, enumerate_ideal_divisors, enumerate_ideal_exp_divisors, ideal_pow,
    omega_ideal, tau_e_ideal, tau_ideal, FactoredIdeal,
};
use taufield::oracle::{brute_character, brute_order, dedekind_quadratic_oracle};
use taufield::verify::{
    check_galois_prime_ideal, check_galois_prime_ideal_on, check_power_sum,
    check_reciprocal_exponent_sum, check_sandor, check_square_ideal_bounds,
    check_square_ideal_refined, check_unitary_sum, odd_degree_ramified_bound,
};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn exponents() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..6, 1..5)
}

fn ideal(exps: &[u32]) -> FactoredIdeal {
    FactoredIdeal::from_exponents("K", exps).unwrap()
}

proptest! {
    #[test]
    fn factorization_reassembles(n in 1u64..) {
        let f = factorize(n).unwrap();
        let mut product = 1u128;
        let mut last = 1;
        for &(p, a) in f.pairs() {
            prop_assert!(arith::is_prime(p) && p > last);
            last = p;
            product *= u128::from(p).pow(a);
        }
        prop_assert_eq!(product, u128::from(n));
    }

    #[test]
    fn divisor_functions_are_multiplicative(a in 1u64..100_000, b in 1u64..100_000) {
        prop_assume!(gcd(a, b) == 1);
        let ab = a * b;
        prop_assert_eq!(arith::tau(ab).unwrap(), arith::tau(a).unwrap() * arith::tau(b).unwrap());
        prop_assert_eq!(arith::tau_e(ab).unwrap(), arith::tau_e(a).unwrap() * arith::tau_e(b).unwrap());
        prop_assert_eq!(arith::tau_star(ab).unwrap(), arith::tau_star(a).unwrap() * arith::tau_star(b).unwrap());
    }

    #[test]
    fn divisor_function_relations(n in 1u64..(1 << 40)) {
        let f = factorize(n).unwrap();
        prop_assert!(f.tau_e() <= f.tau());
        prop_assert!(f.tau_star() <= f.tau());
        prop_assert_eq!(f.tau_star(), 1u64 << f.omega());
        prop_assert!(f.omega() <= f.big_omega());
    }

    #[test]
    fn divisor_lists_match_counts(n in 1u64..5_000_000) {
        let f = factorize(n).unwrap();
        let divs = f.divisors();
        prop_assert_eq!(divs.len() as u64, f.tau());
        prop_assert!(divs.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(divs.iter().all(|d| n % d == 0));
        let ediv = f.exponential_divisors();
        prop_assert_eq!(ediv.len() as u64, f.tau_e());
        for d in ediv {
            prop_assert!(n % d == 0);
            let g = factorize(d).unwrap();
            prop_assert!(g.primes().eq(f.primes()));
            prop_assert!(g.exponents().zip(f.exponents()).all(|(b, a)| a % b == 0));
        }
    }

    #[test]
    fn order_divides_totient(a in 1u64..10_000, n in 2u64..10_000) {
        prop_assume!(gcd(a, n) == 1);
        let ord = multiplicative_order(a, n).unwrap();
        prop_assert_eq!(arith::euler_phi(n).unwrap() % ord, 0);
        prop_assert_eq!(pow_mod(a, ord, n), 1);
        prop_assert_eq!(ord, brute_order(a as i64, n).unwrap());
    }

    #[test]
    fn ideal_powers(exps in exponents(), j in 1u32..4, k in 1u32..4) {
        let i = ideal(&exps);
        let ik = ideal_pow(&i, k).unwrap();
        let expected: BigUint = exps.iter().map(|&a| BigUint::from(k * a + 1)).product();
        prop_assert_eq!(tau_ideal(&ik), expected);
        prop_assert_eq!(big_omega_ideal(&ik), u64::from(k) * big_omega_ideal(&i));
        prop_assert_eq!(omega_ideal(&ik), omega_ideal(&i));
        prop_assert_eq!(ideal_pow(&ideal_pow(&i, j).unwrap(), k).unwrap(), ideal_pow(&i, j * k).unwrap());
    }

    #[test]
    fn ideal_enumeration_counts(exps in exponents()) {
        let i = ideal(&exps);
        let divs = enumerate_ideal_divisors(&i).unwrap();
        prop_assert_eq!(BigUint::from(divs.len()), tau_ideal(&i));
        let ediv = enumerate_ideal_exp_divisors(&i).unwrap();
        prop_assert_eq!(BigUint::from(ediv.len()), tau_e_ideal(&i));
        prop_assert!(ediv.iter().all(|d| omega_ideal(d) == omega_ideal(&i)));
    }

    #[test]
    fn ideal_text_round_trips(exps in prop::collection::vec(1u32..40, 0..6)) {
        let i = FactoredIdeal::from_exponents("K", &exps).unwrap();
        let back = FactoredIdeal::parse("K", &i.to_string()).unwrap();
        prop_assert_eq!(back.to_string(), i.to_string());
        prop_assert!(back.exponents().eq(i.exponents()));
    }

    #[test]
    fn ideals_abstract_integers(n in 1u64..(1 << 48)) {
        let f = factorize(n).unwrap();
        let i = FactoredIdeal::from_factorization(&f);
        prop_assert_eq!(tau_ideal(&i), BigUint::from(f.tau()));
        prop_assert_eq!(tau_e_ideal(&i), BigUint::from(f.tau_e()));
        prop_assert_eq!(big_omega_ideal(&i), u64::from(f.big_omega()));
    }

    #[test]
    fn quadratic_splitting_matches_root_count(d in -5000i64..5000, p_idx in 0usize..200) {
        prop_assume!(d != 0 && d != 1 && arith::is_squarefree(d).unwrap());
        let p = (2u64..).filter(|&p| arith::is_prime(p)).nth(p_idx).unwrap();
        let s = split_quadratic(&QuadraticField::new(d).unwrap(), p).unwrap();
        prop_assert_eq!(s.splitting, dedekind_quadratic_oracle(d, p));
        prop_assert_eq!(u64::from(s.splitting.e()) * s.splitting.f() * u64::from(s.splitting.g()), 2);
    }

    #[test]
    fn cyclotomic_efg_is_totient(n in 3u64..400, p_idx in 0usize..300) {
        let p = (2u64..).filter(|&p| arith::is_prime(p)).nth(p_idx).unwrap();
        prop_assume!(n % p != 0);
        let s = split_cyclotomic(&CyclotomicField::new(n).unwrap(), p).unwrap().splitting;
        prop_assert_eq!(s.f() * u64::from(s.g()), arith::euler_phi(n).unwrap());
        prop_assert_eq!(s.f(), brute_order(p as i64, n).unwrap());
    }

    #[test]
    fn character_matches_oracle(l_idx in 0usize..4, p_idx in 0usize..100, mu in -10_000i64..10_000) {
        let l = [3u64, 5, 7, 11][l_idx];
        let p = (2u64..).filter(|&p| arith::is_prime(p) && p != l).nth(p_idx).unwrap();
        prop_assume!(mu != 0 && brute_order(p as i64, l).unwrap() == l - 1);
        let field = KummerField::new(l, mu).unwrap();
        prop_assert_eq!(power_residue_character(&field, p).unwrap(), brute_character(l, mu, p).unwrap());
    }

    #[test]
    fn integer_claims_hold(n in 2u64..(1 << 50)) {
        prop_assert!(check_unitary_sum(n).unwrap().holds());
        let r = check_reciprocal_exponent_sum(n).unwrap();
        prop_assert!(r.holds());
        if factorize(n).unwrap().omega() == 1 && factorize(n).unwrap().big_omega() <= 2 {
            prop_assert!(r.is_equality());
        }
    }

    #[test]
    fn sandor_holds_on_squares(m in 2u64..(1 << 31)) {
        prop_assert!(check_sandor(m * m).unwrap().holds());
    }

    #[test]
    fn square_ideal_claims_hold(exps in prop::collection::vec(1u32..30, 1..7)) {
        let i = ideal(&exps);
        prop_assert!(check_square_ideal_bounds(&i).unwrap().holds());
        prop_assert!(check_square_ideal_refined(&i).unwrap().holds());
    }

    #[test]
    fn power_sum_holds(m in 2u64..100_000, n in 0u64..200) {
        prop_assert!(check_power_sum(m, n).unwrap().holds());
    }

    #[test]
    fn galois_equality_is_exact(e in 1u32..500, g in 1u32..30) {
        let r = check_galois_prime_ideal(e, g).unwrap();
        prop_assert!(r.holds());
        prop_assert_eq!(r.is_equality(), (e, g) == (1, 1) || (e, g) == (2, 1));
        let direct = check_galois_prime_ideal_on(&ideal(&vec![e; g as usize])).unwrap();
        prop_assert_eq!(&direct.comparisons[0].lhs, &r.comparisons[0].lhs);
        prop_assert_eq!(&direct.comparisons[0].rhs, &r.comparisons[0].rhs);
    }

    #[test]
    fn odd_degree_equality_is_exact(e in 3u32..500, g in 1u32..30) {
        let r = odd_degree_ramified_bound(e, g).unwrap();
        prop_assert!(r.holds());
        prop_assert_eq!(r.is_equality(), (e, g) == (3, 1));
    }

    #[test]
    fn holds_is_recomputed_from_sides(n in 1u64..1_000_000) {
        let r = check_unitary_sum(n).unwrap();
        let c = &r.comparisons[0];
        prop_assert_eq!(r.holds(), c.relation.admits(c.lhs.cmp(&c.rhs)));
        prop_assert_eq!(r.is_equality(), c.lhs == c.rhs);
        prop_assert_eq!(r.clone().holds(), r.holds());
    }
}
