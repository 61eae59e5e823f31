use proptest::prelude::*;

use weak_syt::tableau::rsk_inverse;
use weak_syt::{rsk, Permutation, SkewTableau, Tableau};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

proptest! {
    #[test]
    fn rsk_round_trip(u in permutation(10)) {
        let (i, r) = rsk(&u);
        prop_assert_eq!(rsk_inverse(&i, &r).unwrap(), u);
    }

    #[test]
    fn recording_of_inverse_is_insertion(u in permutation(10)) {
        let (i, r) = rsk(&u);
        let (i2, r2) = rsk(&u.inverse());
        prop_assert_eq!(i, r2);
        prop_assert_eq!(r, i2);
    }

    #[test]
    fn knuth_and_dual_moves(u in permutation(9)) {
        let (i, r) = rsk(&u);
        for v in u.knuth_neighbors() {
            prop_assert_eq!(&rsk(&v).0, &i);
        }
        for v in u.dual_knuth_neighbors() {
            prop_assert_eq!(&rsk(&v).1, &r);
        }
    }

    #[test]
    fn word_symmetries(u in permutation(9)) {
        let i = rsk(&u).0;
        prop_assert_eq!(i.transpose(), rsk(&u.transpose_word()).0);
        prop_assert_eq!(i.evacuate(), rsk(&u.evac_word()).0);
        prop_assert_eq!(i.evacuate().evacuate(), i);
    }

    #[test]
    fn restriction_commutes_with_insertion(u in permutation(9), a in 0usize..9, b in 0usize..9) {
        let n = u.len();
        let (i, j) = (a % n + 1, b % n + 1);
        prop_assume!(i < j);
        let lhs = rsk(&u).0.restrict(i, j).unwrap();
        prop_assert_eq!(lhs, rsk(&u.restrict_standardize(i, j).unwrap()).0);
    }

    #[test]
    fn text_and_json_round_trip(u in permutation(9)) {
        let i = rsk(&u).0;
        prop_assert_eq!(i.to_string().parse::<Tableau>().unwrap(), i.clone());
        let json = serde_json::to_string(&i).unwrap();
        prop_assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), i.clone());
        let skew = SkewTableau::from_tableau(&i);
        prop_assert_eq!(skew.to_string().parse::<SkewTableau>().unwrap(), skew);
    }
}
