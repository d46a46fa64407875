use fockjack::fock::{singular_space, virasoro_apply, ModelParams};
use fockjack::scalars::{QuadScalar, Scalar};
use fockjack::screening::{proportionality, singular_vector, Sign};

const MODELS: [(i64, i64); 3] = [(2, 3), (2, 5), (3, 4)];

fn labels() -> impl Iterator<Item = (i64, i64)> {
    (1..=3)
        .flat_map(|r| (1..=3).map(move |s| (r, s)))
        .filter(|(r, s)| r * s <= 8)
}

#[test]
fn closed_form_spans_the_singular_space() {
    for (a, b) in MODELS {
        let m = ModelParams::new(a, b).unwrap();
        for (r, s) in labels() {
            let v = singular_vector(&m, Sign::Plus, r, s).unwrap();
            assert!(!v.is_zero());
            let space = singular_space(&m, &m.weight(-r, -s, 0), (r * s) as usize).unwrap();
            assert_eq!(space.len(), 1, "model ({a},{b}) label ({r},{s})");
            assert!(
                v.ratio_to(&space[0]).is_some(),
                "model ({a},{b}) label ({r},{s})"
            );
        }
    }
}

#[test]
fn singular_vectors_have_shifted_weight() {
    for (a, b) in MODELS {
        let m = ModelParams::new(a, b).unwrap();
        for (r, s) in labels() {
            for sign in [Sign::Plus, Sign::Minus] {
                let v = singular_vector(&m, sign, r, s).unwrap();
                let h = QuadScalar::from_rational(&m.h_rs(-r, s));
                assert_eq!(virasoro_apply(&m, &v, 0), v.scale(&h));
                assert!(virasoro_apply(&m, &v, 1).is_zero());
                assert!(virasoro_apply(&m, &v, 2).is_zero());
            }
        }
    }
}

#[test]
fn screening_images_are_proportional() {
    for (a, b) in MODELS {
        let m = ModelParams::new(a, b).unwrap();
        for (r, s) in labels() {
            let c = proportionality(&m, r, s).unwrap();
            assert!(c.pass, "{c}");
        }
    }
}
