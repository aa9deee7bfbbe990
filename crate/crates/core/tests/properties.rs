mod common;

use std::collections::BTreeSet;

use chaingroup::braid::{generator, BraidWord};
use chaingroup::finite::ln::{ln_cardinality_formula, ln_group, relation_matrix, validate_params, LnParams};
use chaingroup::finite::snf::smith_normal_form;
use chaingroup::graph::{all_classes, classify, generate};
use chaingroup::homology::{build_chain, monodromy_rep, transvection_matrix, CurveClass, SkewLattice};
use chaingroup::matrix::{primitive_part, IntMatrix};
use chaingroup::oracle::{are_equal, artin_action, is_identity};
use chaingroup::periodic::{fixed_bound, order_bounds, rh_check, rh_enumerate, RamificationData};
use chaingroup::text;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n as i32, any::<bool>()), 0..=max_len).prop_map(move |v| {
        BraidWord::new(n, v.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect()).unwrap()
    })
}

fn sized_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (3..=max_n).prop_flat_map(move |n| word(n, max_len))
}

fn primitive(dim: usize) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(-3i64..=3, dim)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(|v| primitive_part(&v.into_iter().map(BigInt::from).collect::<Vec<_>>()))
}

/// Rewrites `w` by one relation of `B_n` at a random position.
fn rewrite(w: &BraidWord, pos: usize, i: i32, j: i32, kind: u8) -> BraidWord {
    let n = w.strands() as i32;
    let mut letters = w.letters().to_vec();
    let at = pos % (letters.len() + 1);
    let insert: Vec<i32> = match kind % 3 {
        0 => vec![i, -i],
        1 => {
            let j = if i + 1 < n { i + 1 } else { i - 1 };
            vec![i, j, i, -j, -i, -j]
        }
        _ if (i - j).abs() >= 2 => vec![i, j, -i, -j],
        _ => vec![-i, i],
    };
    letters.splice(at..at, insert);
    BraidWord::new(w.strands(), letters).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_is_a_homomorphism(u in word(6, 8), v in word(6, 8)) {
        prop_assert_eq!(artin_action(&(&u * &v)), artin_action(&u).then(&artin_action(&v)));
    }

    #[test]
    fn inverse_cancels(w in sized_word(8, 12)) {
        prop_assert!(is_identity(&(&w * &w.inverse())));
        prop_assert!(is_identity(&(&w.inverse() * &w)));
    }

    #[test]
    fn relation_rewrites_preserve_the_element(
        w in word(7, 10), pos in 0usize..20, i in 1i32..7, j in 1i32..7, kind in 0u8..3,
    ) {
        let v = rewrite(&w, pos, i, j, kind);
        prop_assert!(are_equal(&w, &v).unwrap());
        prop_assert!(common::burau_agree(&w, &v));
    }

    #[test]
    fn oracle_agrees_with_burau_on_inequality(u in word(4, 6), v in word(4, 6)) {
        if !common::burau_agree(&u, &v) {
            prop_assert!(!are_equal(&u, &v).unwrap());
        }
        if are_equal(&u, &v).unwrap() {
            prop_assert!(common::burau_agree(&u, &v));
        }
    }

    #[test]
    fn generator_index_is_read_mod_n(n in 3usize..=9, k in -30i64..30) {
        let a = generator(n, k).unwrap();
        let b = generator(n, k.rem_euclid(n as i64)).unwrap();
        let c = generator(n, k + n as i64).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
    }

    #[test]
    fn transvection_inverse_and_pairing(c in primitive(6), x in primitive(6), y in primitive(6)) {
        let l = SkewLattice::standard(3).unwrap();
        let c = CurveClass::new(c).unwrap();
        let t = transvection_matrix(&l, &c, 1).unwrap();
        let ti = transvection_matrix(&l, &c, -1).unwrap();
        prop_assert!((&t * &ti).is_identity());
        prop_assert!(common::is_symplectic(&t, 3));
        prop_assert_eq!(l.pairing(&t.mul_vec(&x), &t.mul_vec(&y)), l.pairing(&x, &y));
    }

    #[test]
    fn pairing_criterion(a in primitive(4), b in primitive(4)) {
        let l = SkewLattice::standard(2).unwrap();
        let p = l.pairing(&a, &b);
        let ta = transvection_matrix(&l, &CurveClass::new(a).unwrap(), 1).unwrap();
        let tb = transvection_matrix(&l, &CurveClass::new(b).unwrap(), 1).unwrap();
        if p.is_zero() {
            prop_assert_eq!(&ta * &tb, &tb * &ta);
        }
        if p == BigInt::from(1) || p == BigInt::from(-1) {
            prop_assert_eq!(&(&ta * &tb) * &ta, &(&tb * &ta) * &tb);
        }
    }

    #[test]
    fn smith_form_ignores_unimodular_changes(
        entries in prop::collection::vec(-9i64..=9, 12),
        ops in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3, any::<bool>()), 0..12),
    ) {
        let rows: Vec<Vec<BigInt>> = entries.chunks(3).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let a = IntMatrix::from_rows(rows).unwrap();
        let mut b = a.clone();
        for (i, j, k, on_rows) in ops {
            let k = BigInt::from(k);
            if on_rows {
                let (i, j) = (i % 4, j % 4);
                if i == j { continue; }
                for c in 0..3 {
                    let v = b.get(i, c) + &k * b.get(j, c);
                    b.set(i, c, v);
                }
            } else {
                let (i, j) = (i % 3, j % 3);
                if i == j { continue; }
                for r in 0..4 {
                    let v = b.get(r, i) + &k * b.get(r, j);
                    b.set(r, i, v);
                }
            }
        }
        let sa = smith_normal_form(&a);
        prop_assert_eq!(&sa, &smith_normal_form(&b));
        prop_assert_eq!(sa.nontrivial_factors(), smith_normal_form(&a.transpose()).nontrivial_factors());
        prop_assert_eq!(sa.cardinality().unwrap_or_default(), common::quotient_order(&a));
    }

    #[test]
    fn quotient_order_matches_formula(r in 2usize..=5, d in 1u64..=5, a in 1u64..=3, b in 0u64..=4, q in 1u64..=6) {
        let m = d * a;
        let s = m * b;
        let p = LnParams::new(r, q * m, m, d, s);
        prop_assume!(validate_params(&p));
        let snf = ln_group(&p).unwrap();
        prop_assert_eq!(snf.cardinality(), Some(ln_cardinality_formula(&p)));
        prop_assert_eq!(common::quotient_order(&relation_matrix(&p)), ln_cardinality_formula(&p));
    }

    #[test]
    fn fixed_bound_is_monotone(g in 0u64..40, m in 2u64..40) {
        let here = fixed_bound(g, m).unwrap();
        prop_assert!(fixed_bound(g + 1, m).unwrap() >= here);
        prop_assert!(fixed_bound(g, m + 1).unwrap() <= here);
    }

    #[test]
    fn enumeration_matches_scan(chi in -10i64..=0, m in 1u64..=12, chis in prop::collection::btree_set(-6i64..=2, 1..4)) {
        let found: BTreeSet<RamificationData> = rh_enumerate(chi, m, &chis, None).unwrap().into_iter().collect();
        for d in &found {
            prop_assert!(rh_check(d).unwrap());
        }
        prop_assert_eq!(found, scan(chi, m, &chis));
    }

    #[test]
    fn text_round_trips(w in sized_word(8, 10)) {
        prop_assert_eq!(text::parse_braid(&w.to_string()).unwrap(), w);
    }
}

/// Every multiset of proper divisors, by counting vectors.
fn scan(chi: i64, m: u64, chis: &BTreeSet<i64>) -> BTreeSet<RamificationData> {
    let divisors: Vec<u64> = (1..m).filter(|o| m.is_multiple_of(*o)).collect();
    let mut out = BTreeSet::new();
    for &chiq in chis {
        let target = m as i64 * chiq - chi;
        if target < 0 {
            continue;
        }
        let caps: Vec<i64> = divisors.iter().map(|&o| target / (m - o) as i64).collect();
        let mut counts = vec![0i64; divisors.len()];
        loop {
            let total: i64 = counts.iter().zip(&divisors).map(|(c, &o)| c * (m - o) as i64).sum();
            if total == target {
                let branch: Vec<u64> = counts
                    .iter()
                    .zip(&divisors)
                    .flat_map(|(&c, &o)| std::iter::repeat_n(o, c as usize))
                    .collect();
                out.insert(RamificationData { chi_total: chi, m, branch, chi_quotient: chiq });
            }
            let mut i = 0;
            while i < counts.len() {
                if counts[i] < caps[i] {
                    counts[i] += 1;
                    break;
                }
                counts[i] = 0;
                i += 1;
            }
            if i == counts.len() {
                break;
            }
        }
    }
    out
}

#[test]
fn two_letter_words_are_trivial_only_when_they_cancel() {
    for n in 3..=8usize {
        for i in 1..n as i32 {
            for j in 1..n as i32 {
                for a in -2..=2i32 {
                    for b in -2..=2i32 {
                        let mut letters = vec![i * a.signum(); a.unsigned_abs() as usize];
                        letters.extend(std::iter::repeat_n(j * b.signum(), b.unsigned_abs() as usize));
                        let w = BraidWord::new(n, letters).unwrap();
                        let trivial = (a == 0 && b == 0) || (i == j && a + b == 0);
                        assert_eq!(is_identity(&w), trivial, "n={n} i={i}^{a} j={j}^{b}");
                    }
                }
            }
        }
    }
}

#[test]
fn classify_inverts_generate() {
    for m in 1..=12 {
        for c in all_classes(m) {
            let g = generate(&c, m).unwrap();
            assert!(g.is_connected(), "{c}");
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * m, "{c}");
            assert_eq!(classify(&g).unwrap().normalized(), c.normalized(), "m={m}");
        }
    }
}

#[test]
fn cyclic_bound_below_hurwitz_bound() {
    for g in 2..=200 {
        let b = order_bounds(g, 0).unwrap();
        assert!(b.cyclic_max.unwrap() <= b.finite_subgroup_max.unwrap());
    }
}

#[test]
fn monodromy_relations_for_all_chain_lengths() {
    for g in 1..=4 {
        let l = SkewLattice::standard(g).unwrap();
        for k in 1..=2 * g + 1 {
            let chain = build_chain(&l, k).unwrap();
            for eps in [1, -1] {
                let ms = monodromy_rep(&l, &chain, eps).unwrap();
                assert!(ms.iter().all(|m| common::is_symplectic(m, g)));
            }
        }
    }
}
