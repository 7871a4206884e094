use num_bigint::BigInt;
use pfcond::families::{generate, Family, FamilySpec, WeightMode};
use pfcond::identities::{
    check_ciucu, check_ciucu1996, check_edge_condensation, check_general_srinivasan, check_krattenthaler, check_kuo,
    check_lemma_yyz, check_ohta, check_sign_preserving, check_srinivasan, check_tanner, witness_ohta, witness_tanner,
    KrattVariant,
};
use pfcond::kasteleyn::PlaneGraph;
use pfcond::{Error, PfMethod, SkewArray, VertexSubset};

fn fixed(n: usize) -> SkewArray<BigInt> {
    // deterministic, no zero entries, no symmetry to hide sign errors
    SkewArray::from_fn(n, |i, j| BigInt::from(((7 * i + 13 * j + i * j) % 19) as i64 - 9).max(BigInt::from(1)) + BigInt::from(i))
}

fn set(v: &[usize]) -> VertexSubset {
    VertexSubset::new(v.to_vec())
}

fn family(spec: &str, seed: u64) -> Family {
    let spec: FamilySpec = spec.parse().unwrap();
    generate(&spec, &WeightMode::Random { lo: 1, hi: 9 }, seed).unwrap()
}

#[test]
fn tanner_every_k_both_methods() {
    let a = fixed(8);
    let (alpha, beta) = (set(&[0, 2, 5]), set(&[1, 3, 4, 6, 7]));
    for k in 1..=beta.len() {
        for method in [PfMethod::Definition, PfMethod::Eliminate] {
            let r = check_tanner(&a, &alpha, &beta, k, method).unwrap();
            assert!(r.pass(), "{r}");
        }
        assert!(witness_tanner(&a, &alpha, &beta, k).unwrap().holds());
    }
}

#[test]
fn tanner_rejects_overlap() {
    let a = fixed(6);
    assert!(check_tanner(&a, &set(&[0, 1]), &set(&[1, 2]), 1, PfMethod::Eliminate).is_err());
}

#[test]
fn ohta_and_its_involution() {
    let a = fixed(7);
    let (alpha, beta) = (set(&[0, 1, 3]), set(&[1, 2, 4, 5, 6]));
    assert!(check_ohta(&a, &alpha, &beta, PfMethod::Eliminate).unwrap().pass());
    let w = witness_ohta(&a, &alpha, &beta).unwrap();
    assert!(w.holds());
    assert!(w.objects > 0);
}

#[test]
fn krattenthaler_variants() {
    let a = fixed(8);
    let odd = (set(&[0, 2, 3]), set(&[2, 4, 5, 6, 7]));
    let even = (set(&[0, 1, 2, 3]), set(&[2, 3, 4, 5]));
    for (alpha, beta, variant) in [
        (&odd.0, &odd.1, KrattVariant::OddS),
        (&even.0, &even.1, KrattVariant::EvenWeak),
        (&odd.0, &odd.1, KrattVariant::Uniform),
        (&even.0, &even.1, KrattVariant::Uniform),
    ] {
        let r = check_krattenthaler(&a, alpha, beta, variant, PfMethod::Eliminate).unwrap();
        assert!(r.pass(), "{r}");
    }
    assert!(check_krattenthaler(&a, &even.0, &even.1, KrattVariant::OddS, PfMethod::Eliminate).is_err());
    assert_eq!("even_weak".parse::<KrattVariant>().unwrap(), KrattVariant::EvenWeak);
}

#[test]
fn srinivasan_all_cases() {
    let a = fixed(8);
    for m in 0..=8 {
        let part_a = VertexSubset::range(m);
        let part_b = VertexSubset::range(8).difference(&part_a);
        let r = check_srinivasan(&a, &part_a, &part_b).unwrap();
        assert!(r.pass(), "{r}");
    }
}

#[test]
fn general_srinivasan_with_white_vertices() {
    let a = fixed(7);
    let r = check_general_srinivasan(&a, &set(&[0, 3, 5]), &set(&[1, 6]), &set(&[2, 4])).unwrap();
    assert!(r.pass(), "{r}");
    let r = check_general_srinivasan(&a, &set(&[1]), &set(&[0, 3, 5]), &set(&[2, 4, 6])).unwrap();
    assert!(r.pass(), "{r}");
}

#[test]
fn kuo_on_grid_corners() {
    let fam = family("grid:3,4", 11);
    let pg = PlaneGraph::new(&fam.graph, fam.embedding.as_ref().unwrap()).unwrap();
    // corners in walk order around the outer face
    let corners = [0, 3, 11, 8];
    assert!(check_kuo(&pg, corners).unwrap().pass());
    assert!(check_kuo(&pg, [0, 11, 3, 8]).is_err());
}

#[test]
fn kuo_rejects_repeated_vertices() {
    let fam = family("grid:2,3", 1);
    let pg = PlaneGraph::new(&fam.graph, fam.embedding.as_ref().unwrap()).unwrap();
    assert!(check_kuo(&pg, [0, 0, 1, 2]).is_err());
}

#[test]
fn sign_preserving_and_ciucu_on_a_face() {
    let fam = family("grid:4,4", 5);
    let pg = PlaneGraph::new(&fam.graph, fam.embedding.as_ref().unwrap()).unwrap();
    // the central square, walk 5, 6, 10, 9
    let r = check_sign_preserving(&pg, &[5, 10], &[6, 9], &VertexSubset::empty()).unwrap();
    assert!(r.pass(), "{r}");
    let r = check_ciucu(&pg, &[5], &[6]).unwrap();
    assert!(r.pass(), "{r}");
}

#[test]
fn ciucu_needs_balanced_colour_classes() {
    let fam = family("grid:4,4", 5);
    let pg = PlaneGraph::new(&fam.graph, fam.embedding.as_ref().unwrap()).unwrap();
    assert!(check_ciucu(&pg, &[5], &[6, 9]).is_err());
}

#[test]
fn ciucu1996_adjacent_and_nested() {
    let g = fixed(6).to_complete_graph();
    for pairs in [vec![(0, 1)], vec![(2, 3), (4, 5)], vec![(0, 5), (1, 2)], vec![(1, 4)]] {
        let r = check_ciucu1996(&g, &pairs).unwrap();
        assert!(r.pass(), "{pairs:?}: {r}");
    }
    assert!(matches!(check_ciucu1996(&g, &[(0, 2), (1, 3)]), Err(Error::Precondition(_))));
}

#[test]
fn lemma_yyz_plain_reading() {
    let g = fixed(6).to_complete_graph();
    let rep = check_lemma_yyz(&g, &[(0, 1), (3, 4)]).unwrap();
    assert_eq!(rep.without_prefactor, rep.cases);
    assert!(rep.to_report().pass());
    assert!(check_lemma_yyz(&g, &[(0, 2)]).is_err());
}

#[test]
fn edge_condensation_on_grid() {
    let fam = family("grid:3,4", 3);
    let pg = PlaneGraph::new(&fam.graph, fam.embedding.as_ref().unwrap()).unwrap();
    // two boundary edges of the top row, walk-separated
    let r = check_edge_condensation(&pg, &[(0, 1), (2, 3)], &[false, true]).unwrap();
    assert!(r.pass(), "{r}");
}
