//! Property tests for the invariants the library promises.

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::sample::SizeRange;

use vknot::braidrep::{represent, VBGenerator, VirtualBraidWord, WadaKind};
use vknot::foxcalc::{fox_derivative, fundamental_identity_holds};
use vknot::freegroup::{Alphabet, Word};
use vknot::laurent::{rat, variables, LaurentPoly};
use vknot::ncalg::{group_to_series, AlgebraSpec, NcMonomial, NcPoly};
use vknot::nilpotent::{hall_basis, Collector};
use vknot::presentation::GroupPresentation;

const LABELS: [&str; 3] = ["x", "y", "z"];

fn word(rank: usize, len: impl Into<SizeRange>) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..rank, prop_oneof![Just(1i64), Just(-1i64)]), len).prop_map(Word::reduce)
}

fn alphabet(rank: usize) -> Alphabet {
    Alphabet::new(&LABELS[..rank]).unwrap()
}

/// Image of `w` in the group ring of the abelianization, computed from
/// exponent sums.
fn abelian(rank: usize, w: &Word) -> LaurentPoly {
    let vars = variables(&LABELS[..rank]);
    LaurentPoly::monomial(&vars, (0..rank).map(|g| w.exponent_sum(g)).collect(), rat(1))
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut sign, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

/// Necklace count of the free Lie algebra of rank `r` in degree `n`.
fn witt(r: usize, n: usize) -> usize {
    let total: i64 = (1..=n).filter(|&d| n.is_multiple_of(d)).map(|d| mobius(n / d) * (r as i64).pow(d as u32)).sum();
    (total / n as i64) as usize
}

fn laurent(rank: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, rank), -5i64..=5), 0..5).prop_map(move |terms| {
        let vars = variables(&LABELS[..rank]);
        terms.into_iter().fold(LaurentPoly::zero(&vars), |acc, (e, c)| &acc + &LaurentPoly::monomial(&vars, e, rat(c)))
    })
}

fn braid(strands: usize) -> impl Strategy<Value = VirtualBraidWord> {
    let letter = (1..strands, 0..3u8).prop_map(|(i, k)| match k {
        0 => VBGenerator::sigma(i),
        1 => VBGenerator::sigma_inv(i),
        _ => VBGenerator::rho(i),
    });
    prop::collection::vec(letter, 0..8).prop_map(move |l| VirtualBraidWord::new(strands, l).unwrap())
}

fn kind() -> impl Strategy<Value = WadaKind> {
    prop_oneof![(1u32..=3).prop_map(|r| WadaKind::W1 { r }), Just(WadaKind::W2), Just(WadaKind::W3)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn collection_is_a_homomorphism(
        (rank, class, u, v) in (2usize..=3, 2usize..=4)
            .prop_flat_map(|(r, c)| (Just(r), Just(c), word(r, 0..12), word(r, 0..12)))
    ) {
        let col = Collector::get(rank, class).unwrap();
        let uv = &u * &v;
        let lhs = col.collect(&uv).unwrap();
        let rhs = col.collect(&u).unwrap().mul(&col.collect(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let inv = col.collect(&u.inverse()).unwrap();
        prop_assert_eq!(inv, col.collect(&u).unwrap().inverse().unwrap());
    }

    #[test]
    fn series_map_is_multiplicative(u in word(2, 0..10), v in word(2, 0..10)) {
        let spec = AlgebraSpec::free(&["X", "Y"], 6);
        let su = group_to_series(&u, &spec).unwrap();
        let sv = group_to_series(&v, &spec).unwrap();
        prop_assert_eq!(group_to_series(&(&u * &v), &spec).unwrap(), spec.mul(&su, &sv));
        let back = spec.mul(&su, &group_to_series(&u.inverse(), &spec).unwrap());
        prop_assert_eq!(back, NcPoly::one(spec.vars().clone()));
    }

    #[test]
    fn monomial_reduction_ignores_rule_order(
        rules in prop::collection::vec(prop::collection::vec(0usize..2, 2..=4), 1..4),
        seed in any::<u64>(),
        words in prop::collection::vec(prop::collection::vec(0usize..2, 0..9), 1..8),
        commutative in any::<bool>(),
    ) {
        let vars = ["X", "Y"];
        let text: Vec<String> = rules.iter().map(|r| r.iter().map(|&i| vars[i]).collect()).collect();
        let mut shuffled = text.clone();
        shuffled.rotate_left((seed as usize) % text.len());
        shuffled.reverse();
        let a = AlgebraSpec::new(&vars, &text, commutative, Some(8)).unwrap();
        let b = AlgebraSpec::new(&vars, &shuffled, commutative, Some(8)).unwrap();
        for w in words {
            let m = NcMonomial::new(w);
            prop_assert_eq!(a.normal_word(&m), b.normal_word(&m));
        }
    }

    #[test]
    fn fox_calculus_identities((rank, u, v) in (1usize..=3).prop_flat_map(|r| (Just(r), word(r, 0..=20), word(r, 0..=10)))) {
        let a = alphabet(rank);
        prop_assert!(fundamental_identity_holds(&a, &u));
        // left product rule d(uv) = du + u·dv
        let uv = &u * &v;
        for g in 0..rank {
            let rhs = &fox_derivative(&a, &u, g) + &(&abelian(rank, &u) * &fox_derivative(&a, &v, g));
            prop_assert_eq!(fox_derivative(&a, &uv, g), rhs);
        }
    }

    #[test]
    fn laurent_ring_laws(p in laurent(2), q in laurent(2), r in laurent(2)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!((&p * &q).augment(), p.augment() * q.augment());
        prop_assert_eq!(p.invert_variables().invert_variables(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn braid_representation_is_a_homomorphism(k in kind(), a in braid(3), b in braid(3)) {
        let ab = represent(k, &a.concat(&b).unwrap()).unwrap();
        let composed = represent(k, &a).unwrap().compose(&represent(k, &b).unwrap()).unwrap();
        prop_assert_eq!(ab, composed);
        prop_assert!(represent(k, &a.concat(&a.inverse()).unwrap()).unwrap().is_identity());
    }
}

#[test]
fn free_lie_ranks_match_necklace_counts() {
    for rank in 2..=3 {
        let class = 5;
        let basis = hall_basis(rank, class).unwrap();
        for w in 1..=class {
            assert_eq!(basis.of_weight(w).len(), witt(rank, w), "rank {rank} weight {w}");
        }
        let free = GroupPresentation::parse(&LABELS[..rank], &[] as &[&str]).unwrap();
        let layers = vknot::nilpotent::lcs_layers(&free, 4).unwrap();
        let ranks: Vec<usize> = layers.iter().map(|l| l.rank).collect();
        let expected: Vec<usize> = (1..=4).map(|w| witt(rank, w)).collect();
        assert_eq!(ranks, expected);
        assert!(layers.iter().all(|l| l.torsion.is_empty()));
    }
}

#[test]
fn series_of_generators_are_exact() {
    let spec = AlgebraSpec::free(&["X", "Y"], 4);
    let x = group_to_series(&Word::generator(0), &spec).unwrap();
    let xi = group_to_series(&Word::power_of(0, -1), &spec).unwrap();
    assert_eq!(x.coefficient(&NcMonomial::new(vec![0])), BigRational::one());
    for d in 0..=4 {
        let sign = if d % 2 == 0 { 1 } else { -1 };
        assert_eq!(xi.coefficient(&NcMonomial::new(vec![0; d])), rat(sign));
    }
    assert!(xi.coefficient(&NcMonomial::new(vec![1])).is_zero());
}
