use num_bigint::BigInt;
use num_traits::Signed;
use pfcond::families::{generate, FamilySpec, WeightMode};
use pfcond::kasteleyn::{count_via_pfaffian, kasteleyn_matrix, kasteleyn_orient, verify_admissible, CheckMode, PlaneGraph};
use pfcond::{matching_gf, pf_eliminate};

const SPECS: [&str; 5] = ["grid:3,3", "grid:2,5", "aztec:2", "cycle:8", "complete:4"];

#[test]
fn mirrored_embedding_gives_an_admissible_orientation_too() {
    for spec in SPECS {
        let fam = generate(&spec.parse::<FamilySpec>().unwrap(), &WeightMode::Random { lo: 1, hi: 9 }, 2).unwrap();
        let mirror = fam.embedding.as_ref().unwrap().mirrored();
        let pg = PlaneGraph::new(&fam.graph, &mirror).unwrap();
        let xi = kasteleyn_orient(&pg).unwrap();
        for mode in [CheckMode::Faces, CheckMode::AllCycles, CheckMode::SuperpositionCycles] {
            assert!(verify_admissible(&pg, &xi, mode).unwrap().is_admissible(), "{spec} {mode}");
        }
        assert_eq!(pf_eliminate(&kasteleyn_matrix(&pg, &xi).unwrap()).abs(), matching_gf(&fam.graph));
    }
}

#[test]
fn grid_without_two_corners_keeps_counting() {
    let fam = generate(&FamilySpec::Grid { rows: 3, cols: 4 }, &WeightMode::Unit, 0).unwrap();
    let pg = PlaneGraph::new(&fam.graph, fam.embedding.as_ref().unwrap()).unwrap();
    // removing two opposite-colour corners leaves a tileable region
    let sub = pg.without_vertices(&[0usize, 11].into_iter().collect()).unwrap();
    let xi = kasteleyn_orient(&sub).unwrap();
    assert!(verify_admissible(&sub, &xi, CheckMode::SuperpositionCycles).unwrap().is_admissible());
    let brute: BigInt = sub.matchings().map(|m| m.weight(sub.graph())).sum();
    assert!(brute > BigInt::from(0));
    assert_eq!(count_via_pfaffian(&sub).unwrap(), brute);
}
