use kr_core::builders::{promotion, Builder};
use kr_core::cartan::{labels_of, rank, weight_from_labels, AffineSpec, ClassicalType, Family, Shape};
use kr_core::crystal::tensor_signature;
use kr_core::pm::{double_pm, enumerate_pm, halve_pm};
use kr_core::tableaux::{enumerate_tableaux, validate_tableau};
use proptest::prelude::*;

/// Cancel adjacent `+-` pairs in the written-out sign word until none remain.
fn bracket(factors: &[(u32, u32)]) -> (u32, u32, Option<usize>, Option<usize>) {
    let mut word: Vec<(bool, usize)> = Vec::new();
    for (k, &(e, p)) in factors.iter().enumerate() {
        word.extend(std::iter::repeat_n((false, k), e as usize));
        word.extend(std::iter::repeat_n((true, k), p as usize));
    }
    while let Some(i) = word.windows(2).position(|w| w[0].0 && !w[1].0) {
        word.drain(i..i + 2);
    }
    let minus: Vec<usize> = word.iter().filter(|x| !x.0).map(|x| x.1).collect();
    let plus: Vec<usize> = word.iter().filter(|x| x.0).map(|x| x.1).collect();
    (minus.len() as u32, plus.len() as u32, minus.last().copied(), plus.first().copied())
}

fn any_type() -> impl Strategy<Value = ClassicalType> {
    prop_oneof![Just(ClassicalType::A), Just(ClassicalType::B), Just(ClassicalType::C), Just(ClassicalType::D)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn signature_rule_matches_bracketing(factors in prop::collection::vec((0u32..4, 0u32..4), 0..7)) {
        let sig = tensor_signature(&factors);
        prop_assert_eq!((sig.eps, sig.phi, sig.e_pos, sig.f_pos), bracket(&factors));
        let total_eps: u32 = factors.iter().map(|f| f.0).sum();
        let total_phi: u32 = factors.iter().map(|f| f.1).sum();
        prop_assert_eq!(total_phi as i64 - total_eps as i64, sig.phi as i64 - sig.eps as i64);
    }

    #[test]
    fn labels_round_trip(t in any_type(), n in 4usize..6, seed in prop::collection::vec(0u32..3, 6)) {
        let labels = seed[..rank(t, n)].to_vec();
        let w = weight_from_labels(t, n, &labels);
        prop_assert_eq!(labels_of(t, n, &w), Some(labels));
    }

    #[test]
    fn promotion_has_order_n(n in 2usize..5, r in 1usize..4, s in 1usize..3, pick in any::<prop::sample::Index>()) {
        prop_assume!(r < n);
        let shape = Shape::from_columns(vec![r; s]);
        let all = enumerate_tableaux(ClassicalType::A, n, &shape);
        let start = &all[pick.index(all.len())];
        let mut t = start.clone();
        for _ in 0..n {
            t = promotion(&t, n).unwrap();
            prop_assert!(validate_tableau(ClassicalType::A, n, &t));
        }
        prop_assert_eq!(&t, start);
    }

    #[test]
    fn halving_inverts_doubling(
        b in any::<bool>(),
        n in 2usize..4,
        cols in prop::collection::vec(1usize..4, 1..3),
        spin in any::<bool>(),
        pick in any::<prop::sample::Index>(),
    ) {
        let t = if b { ClassicalType::B } else { ClassicalType::C };
        let mut shape = Shape::from_columns(cols.into_iter().map(|h| h.min(n)).collect());
        shape.spin = b && spin;
        let all = enumerate_pm(t, n, &shape);
        prop_assume!(!all.is_empty());
        let p = &all[pick.index(all.len())];
        let back = halve_pm(&double_pm(p), t);
        prop_assert_eq!(back.as_ref(), Ok(p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sigma_is_an_involution(f in 0usize..3, n in 2usize..4, r in 1usize..4, s in 1usize..3) {
        let family = [Family::B1, Family::D1, Family::A2Odd][f];
        let n = if family == Family::D1 { n + 2 } else { n };
        // B_n^{(1)} spin-node builds come from the similarity embedding and carry no σ table
        prop_assume!(r <= n && (r < n || family != Family::B1));
        let spec = AffineSpec::new(family, n, r, s).unwrap();
        let build = Builder::new().build(spec).unwrap();
        for v in 0..build.len() as u32 {
            let sv = build.sigma_of(v).unwrap();
            if family == Family::D1 && r + 1 >= n {
                continue;
            }
            prop_assert_eq!(build.sigma_of(sv), Some(v));
            prop_assert_eq!(build.graph.weight(sv).0[1..].to_vec(), build.graph.weight(v).0[1..].to_vec());
        }
    }
}
