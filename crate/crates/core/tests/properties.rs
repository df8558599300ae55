use multiarr_core::coxeter::{root_system, RootKind};
use multiarr_core::exact::{rat, RatMatrix};
use multiarr_core::freeness::{is_free_multi, rank2_exponents, wakamiko_exponents};
use multiarr_core::lattice::char_poly;
use multiarr_core::structure::{decone_extension, extend, k_range};
use multiarr_core::{Arrangement, Multiarrangement, UniPoly};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn forms(dim: usize, max_len: usize, affine: bool) -> impl Strategy<Value = Arrangement> {
    let c = if affine { -2i64..=2 } else { 0i64..=0 };
    proptest::collection::vec((proptest::collection::vec(-3i64..=3, dim), c), 1..=max_len).prop_filter_map(
        "zero or repeated form",
        move |fs| {
            let refs: Vec<(&[i64], i64)> = fs.iter().map(|(v, c)| (v.as_slice(), *c)).collect();
            Arrangement::from_int_affine(dim, &refs).ok()
        },
    )
}

/// Unit upper triangular integer matrices, which are unimodular.
fn unimodular(dim: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(-2i64..=2, dim * dim).prop_map(move |v| {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| rat(if i == j { 1 } else if j > i { v[i * dim + j] } else { 0 })).collect())
            .collect();
        RatMatrix::from_rows(dim, rows)
    })
}

fn root_subset() -> impl Strategy<Value = (usize, Vec<usize>, Vec<u32>)> {
    (2usize..=3, any::<u8>(), proptest::collection::vec(0u32..=3, 6)).prop_map(|(rank, pick, m)| {
        let n = rank * (rank + 1) / 2;
        let mut idx: Vec<usize> = (0..n).filter(|i| pick >> i & 1 == 1).collect();
        if idx.is_empty() {
            idx.push(0);
        }
        let m = m[..idx.len()].to_vec();
        (rank, idx, m)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn central_chi_is_monic_alternating_and_divisible(a in forms(3, 7, false)) {
        let chi = char_poly(&a).into_poly();
        prop_assert_eq!(chi.degree(), Some(3));
        prop_assert!(chi.is_monic());
        for (i, c) in chi.coeffs().iter().enumerate() {
            let sign_ok = if (3 - i) % 2 == 0 { !c.is_negative() } else { !c.is_positive() };
            prop_assert!(sign_ok, "coefficient {} of {}", i, chi);
        }
        prop_assert!(chi.div_linear_factor(&rat(1)).is_some());
        prop_assert_eq!(chi.coeff(2), rat(-(a.len() as i64)));
    }

    #[test]
    fn chi_is_invariant_under_coordinate_change(a in forms(3, 6, true), m in unimodular(3)) {
        prop_assert_eq!(char_poly(&a), char_poly(&a.linear_change(&m).unwrap()));
    }

    #[test]
    fn cone_multiplies_chi_by_t_minus_one(a in forms(2, 6, true)) {
        let cone = char_poly(&a.cone()).into_poly();
        prop_assert_eq!(cone, &UniPoly::from_integer_roots(&[1]) * &char_poly(&a).into_poly());
        let back = a.cone().decone(a.len()).unwrap();
        prop_assert!(back.same_hyperplanes(&a));
    }

    #[test]
    fn essentializing_drops_factors_of_t(a in forms(3, 5, false)) {
        let ess = a.essentialize().unwrap();
        let pad = UniPoly::monomial(a.dim() - ess.dim());
        prop_assert_eq!(char_poly(&a).into_poly(), &pad * &char_poly(&ess).into_poly());
    }

    #[test]
    fn translate_ranges_have_m_members(m in 0u32..50) {
        let r = k_range(m);
        prop_assert_eq!(r.clone().count(), m as usize);
        prop_assert_eq!(r.contains(&0), m > 0);
        if m > 0 {
            prop_assert!(r.end() - r.start() <= i64::from(m));
            prop_assert!((r.end() + r.start()).abs() <= 1);
        }
    }

    #[test]
    fn extension_chi_is_cone_of_deconed_chi((rank, idx, m) in root_subset()) {
        let ps = root_system(RootKind::A, rank).unwrap().positive_system().restrict(&idx).unwrap();
        let e = char_poly(&extend(&ps, &m).unwrap()).into_poly();
        let de = char_poly(&decone_extension(&ps, &m).unwrap()).into_poly();
        prop_assert_eq!(e, &UniPoly::from_integer_roots(&[1]) * &de);
    }

    #[test]
    fn closed_form_exponents_match_modules(a in 0u32..=6, b in 0u32..=6, c in 0u32..=6) {
        let (e1, e2) = wakamiko_exponents(a, b, c);
        prop_assert_eq!(e1 + e2, a + b + c);
        let mm = Multiarrangement::new(
            Arrangement::from_int_normals(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap(),
            vec![a, b, c],
        ).unwrap();
        prop_assert_eq!(rank2_exponents(&mm).unwrap(), [e1.min(e2), e1.max(e2)]);
    }

    #[test]
    fn free_exponents_sum_to_total((rank, idx, m) in root_subset()) {
        let base = root_system(RootKind::A, rank).unwrap().positive_system().restrict(&idx).unwrap();
        let mm = Multiarrangement::new(base.arrangement().clone(), m).unwrap();
        if let Some(e) = is_free_multi(&mm).exponents() {
            prop_assert_eq!(e.iter().sum::<u32>(), mm.total());
            prop_assert_eq!(e.len(), mm.dim());
        }
    }

    #[test]
    fn integer_roots_round_trip(mut roots in proptest::collection::vec(-6i64..=6, 0..6)) {
        let p = UniPoly::from_integer_roots(&roots);
        let found = p.integer_roots().unwrap();
        prop_assert!(found.splits());
        let mut got: Vec<i64> = found.roots.iter().map(|r| i64::try_from(r).unwrap()).collect();
        got.sort_unstable();
        roots.sort_unstable();
        prop_assert_eq!(got, roots);
        prop_assert!(!p.is_zero());
    }
}

#[test]
fn empty_essential_part() {
    let a = Arrangement::from_int_normals(3, &[&[1, 0, 0]]).unwrap();
    assert!(char_poly(&a).into_poly().coeff(0).is_zero());
}
