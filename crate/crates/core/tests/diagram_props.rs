use proptest::prelude::*;

use quantum_skein::diagram::{BraidWord, MorseDiagram, Resolution};
use quantum_skein::laurent::LaurentPoly;
use quantum_skein::skein::{kauffman_poly, KauffmanVariant};

fn arb_braid(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_n).prop_flat_map(move |n| {
        let letter = if n < 2 {
            Just(0i64).boxed()
        } else {
            (1..n as i64, any::<bool>())
                .prop_map(|(g, s)| if s { g } else { -g })
                .boxed()
        };
        prop::collection::vec(letter, 0..=max_len).prop_map(move |w| {
            let w = w.into_iter().filter(|&g| g != 0).collect();
            BraidWord::new(n, w).unwrap()
        })
    })
}

/// Cycle count of the permutation, computed without the library.
fn cycles(b: &BraidWord) -> usize {
    let n = b.strands();
    let mut perm: Vec<usize> = (0..n).collect();
    for &g in b.word() {
        let i = g.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; n];
    let mut c = 0;
    for s in 0..n {
        if !seen[s] {
            c += 1;
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
            }
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closure_is_valid_and_counts_match(b in arb_braid(6, 10)) {
        let d = b.closure();
        prop_assert!(MorseDiagram::new(d.slices().to_vec()).is_ok());
        prop_assert!(d.is_closed());
        prop_assert_eq!(d.component_count().unwrap(), cycles(&b));
        prop_assert_eq!(b.cycle_count(), cycles(&b));
        let signs: i64 = b.word().iter().map(|g| g.signum()).sum();
        prop_assert_eq!(d.local_writhe(), signs);
        prop_assert_eq!(b.writhe(), signs);
        prop_assert_eq!(d.crossing_count(), b.word().len());
    }

    #[test]
    fn resolutions_stay_valid(b in arb_braid(5, 8), pick in any::<prop::sample::Index>()) {
        let d = b.closure();
        let xs = d.crossing_indices();
        prop_assume!(!xs.is_empty());
        let i = xs[pick.index(xs.len())];
        for mode in [Resolution::Switch, Resolution::SmoothId, Resolution::SmoothCupCap] {
            let r = d.resolve_crossing(i, mode).unwrap();
            prop_assert!(r.len().abs_diff(d.len()) <= 1);
            prop_assert!(MorseDiagram::new(r.slices().to_vec()).unwrap().is_closed());
            prop_assert_eq!(r.crossing_count() + usize::from(mode != Resolution::Switch), d.crossing_count());
        }
    }

    #[test]
    fn text_round_trip(b in arb_braid(6, 10)) {
        let back: BraidWord = b.to_string().parse().unwrap();
        prop_assert_eq!(&back, &b);
        let d = b.closure();
        let back: MorseDiagram = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn markov_moves(b in arb_braid(3, 5), g in 1i64..3, pos in any::<bool>(), v in prop::sample::select(vec![KauffmanVariant::Dubrovnik, KauffmanVariant::Kauffman])) {
        let n = b.strands();
        let value = kauffman_poly(&b.closure(), v).unwrap();
        if n >= 2 {
            let g = 1 + (g - 1) % (n as i64 - 1);
            let g = if pos { g } else { -g };
            let mut w = vec![g];
            w.extend_from_slice(b.word());
            w.push(-g);
            let conj = BraidWord::new(n, w).unwrap();
            prop_assert_eq!(kauffman_poly(&conj.closure(), v).unwrap(), value.clone());
        }
        // stabilization adds one kink: framed value changes by a^{±1}
        let s = if pos { n as i64 } else { -(n as i64) };
        let mut w = b.word().to_vec();
        w.push(s);
        let stab = BraidWord::new(n + 1, w).unwrap();
        let factor = LaurentPoly::var_pow("a", s.signum());
        prop_assert_eq!(kauffman_poly(&stab.closure(), v).unwrap(), &factor * &value);
    }
}
