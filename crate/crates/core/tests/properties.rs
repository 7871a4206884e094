use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use pfcond::families::{generate, FamilySpec, WeightMode};
use pfcond::formats::{parse_graph, write_graph};
use pfcond::kasteleyn::{count_via_pfaffian, kasteleyn_matrix, kasteleyn_orient, PlaneGraph};
use pfcond::pfaffian::{canonical_sign, crossing_sign, det_skew, pf_bipartite, pf_semibipartite};
use pfcond::superposition::{build_bicoloured, swap_sign};
use pfcond::{matching_gf, pf_definition, pf_eliminate, sym_diff, OrderedGraph, SkewArray, VertexSubset};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn skew(n: usize, entries: &[i64]) -> SkewArray<BigInt> {
    let mut it = entries.iter();
    SkewArray::from_fn(n, |_, _| BigInt::from(*it.next().expect("enough entries")))
}

/// Skew arrays with entries in `-20..=20` and size drawn from `sizes`.
fn arb_skew(sizes: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SkewArray<BigInt>> {
    sizes.prop_flat_map(|n| prop::collection::vec(-20i64..=20, n * n.saturating_sub(1) / 2).prop_map(move |e| skew(n, &e)))
}

fn arb_pairing(max_half: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    (1..=max_half)
        .prop_flat_map(|h| Just((0..2 * h).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|p| p.chunks(2).map(|c| (c[0], c[1])).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn square_of_pfaffian_is_determinant(a in arb_skew(0..=10)) {
        let pf = pf_eliminate(&a);
        prop_assert_eq!(det_skew(&a), &pf * &pf);
    }

    #[test]
    fn elimination_matches_definition(a in arb_skew(0..=10)) {
        prop_assert_eq!(pf_eliminate(&a), pf_definition(&a).unwrap());
    }

    #[test]
    fn odd_size_vanishes(a in arb_skew(0..=9).prop_filter("odd", |a| a.n() % 2 == 1)) {
        prop_assert!(pf_eliminate(&a).is_zero());
    }

    #[test]
    fn linear_in_each_row(a in arb_skew(2..=8), row in 0usize..8, c in -5i64..=5) {
        let row = row % a.n();
        let mut b = a.clone();
        for j in (0..a.n()).filter(|&j| j != row) {
            b.set(row, j, a.get(row, j) * BigInt::from(c));
        }
        prop_assert_eq!(pf_eliminate(&b), pf_eliminate(&a) * BigInt::from(c));
    }

    #[test]
    fn crossing_and_canonical_signs_agree(pairs in arb_pairing(6)) {
        let support = VertexSubset::range(2 * pairs.len());
        prop_assert_eq!(crossing_sign(&pairs, &support).unwrap(), canonical_sign(&pairs, &support).unwrap());
    }

    #[test]
    fn bipartite_formula(a in arb_skew(2..=10), mask in prop::collection::vec(any::<bool>(), 10)) {
        let n = a.n();
        let part_a = VertexSubset::from_mask(&mask[..n]);
        let part_b = VertexSubset::range(n).difference(&part_a);
        let mut b = a.clone();
        for i in 0..n {
            for j in i + 1..n {
                if part_a.contains(i) == part_a.contains(j) {
                    b.set(i, j, BigInt::zero());
                }
            }
        }
        prop_assert_eq!(pf_bipartite(&b, &part_a, &part_b).unwrap(), pf_definition(&b).unwrap());
    }

    #[test]
    fn semibipartite_expansion(a in arb_skew(2..=10), m in 0usize..=10) {
        let n = a.n();
        let m = m.min(n);
        let part_a = VertexSubset::range(m);
        let part_b = VertexSubset::range(n).difference(&part_a);
        let mut b = a.clone();
        for i in 0..m {
            for j in i + 1..m {
                b.set(i, j, BigInt::zero());
            }
        }
        prop_assert_eq!(pf_semibipartite(&b, &part_a, &part_b).unwrap(), pf_definition(&b).unwrap());
    }

    #[test]
    fn principal_minor_is_restriction(a in arb_skew(2..=10), keep in subsequence((0..10).collect::<Vec<_>>(), 0..=10)) {
        let keep: Vec<usize> = keep.into_iter().filter(|&i| i < a.n()).collect();
        let s = VertexSubset::new(keep.clone());
        prop_assert_eq!(pf_eliminate(&a.principal(&keep)), pf_eliminate(&a.restrict(&s)));
    }

    #[test]
    fn sym_diff_is_union_minus_intersection(x in prop::collection::vec(any::<bool>(), 12), y in prop::collection::vec(any::<bool>(), 12)) {
        let (x, y) = (VertexSubset::from_mask(&x), VertexSubset::from_mask(&y));
        prop_assert_eq!(sym_diff(&x, &y), x.union(&y).difference(&x.intersection(&y)));
    }

    #[test]
    fn swap_is_a_signed_involution(a in arb_skew(2..=7), colours in prop::collection::vec(0u8..3, 7)) {
        let g = a.map(|w| if w.is_zero() { BigInt::from(1) } else { w.abs() }).to_complete_graph();
        let n = g.n();
        let red = VertexSubset::new((0..n).filter(|&v| colours[v] == 1).collect());
        let blue = VertexSubset::new((0..n).filter(|&v| colours[v] == 2).collect());
        let bg = build_bicoloured(&g, &red, &blue).unwrap();
        let coloured = bg.coloured();
        for s in bg.superpositions().take(50) {
            for x in coloured.iter() {
                let sw = s.swap(&g, x).unwrap();
                prop_assert_eq!(&sw.superposition.swap(&g, sw.partner).unwrap().superposition, &s);
                prop_assert_eq!(sw.superposition.weight(&g), s.weight(&g));
                let law = swap_sign(&coloured, x, sw.partner).unwrap();
                prop_assert_eq!(s.sign(&g), law * sw.superposition.sign(&g));
            }
        }
    }

    #[test]
    fn kasteleyn_pfaffian_counts_grids(rows in 1usize..=4, cols in 1usize..=4, seed in any::<u64>()) {
        let fam = generate(&FamilySpec::Grid { rows, cols }, &WeightMode::Random { lo: 1, hi: 30 }, seed).unwrap();
        let pg = PlaneGraph::new(&fam.graph, fam.embedding.as_ref().unwrap()).unwrap();
        let xi = kasteleyn_orient(&pg).unwrap();
        let pf = pf_eliminate(&kasteleyn_matrix(&pg, &xi).unwrap());
        prop_assert_eq!(pf.abs(), matching_gf(&fam.graph));
        prop_assert_eq!(count_via_pfaffian(&pg).unwrap(), matching_gf(&fam.graph));
    }

    #[test]
    fn graph_file_round_trip(a in arb_skew(1..=7)) {
        let g = a.to_complete_graph();
        let text = write_graph(&g);
        let back: OrderedGraph<BigInt> = parse_graph(&text).unwrap();
        prop_assert_eq!(write_graph(&back), text);
        prop_assert_eq!(matching_gf(&back), matching_gf(&g));
    }
}
