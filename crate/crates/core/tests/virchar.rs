use fockjack::fock::ModelParams;
use fockjack::scalars::{rat, Rational};
use fockjack::screening::Sign;
use fockjack::virchar::{
    felder_euler, kx_characters, kx_solver_cutoff, solve_simple_characters,
    solve_simple_characters_ordered, top_lowest_weight, verify_socle_sum, CharSeries,
};
use num_traits::ToPrimitive;

const MODELS: [(i64, i64); 3] = [(2, 3), (2, 5), (3, 4)];

/// Rocha-Caridi: `q^{-h} ch L(h_{r,s}) = Σ_k (q^{a_k} − q^{b_k}) / ∏(1−q^n)` for the minimal model.
fn rocha_caridi(pp: i64, pm: i64, r: i64, s: i64, cutoff: usize) -> Vec<i64> {
    let n = 4 * pp * pm;
    let h0 = (r * pm - s * pp).pow(2);
    let mut numer = vec![0i64; cutoff + 1];
    for k in -40i64..=40 {
        for (sign, x) in [
            (1, 2 * pp * pm * k + pm * r - pp * s),
            (-1, 2 * pp * pm * k + pm * r + pp * s),
        ] {
            let e = x * x - h0;
            if e % n == 0 && e >= 0 && ((e / n) as usize) <= cutoff {
                numer[(e / n) as usize] += sign;
            }
        }
    }
    let mut p = vec![0i64; cutoff + 1];
    p[0] = 1;
    for part in 1..=cutoff {
        for j in part..=cutoff {
            p[j] += p[j - part];
        }
    }
    (0..=cutoff)
        .map(|d| (0..=d).map(|i| numer[i] * p[d - i]).sum())
        .collect()
}

fn solver_cutoff_for_labels(m: &ModelParams, max_n: i64, cutoff: usize) -> usize {
    let mut top: Rational = rat(0, 1);
    for r in 1..=m.pp {
        for s in 1..=m.pm {
            for n in -max_n..=max_n {
                top = top.max(m.h_label(r, s, n));
            }
        }
    }
    (top - top_lowest_weight(m))
        .ceil()
        .to_integer()
        .to_usize()
        .unwrap()
        + cutoff
}

#[test]
fn simple_characters_match_minimal_model_oracle() {
    for (a, b) in MODELS {
        let m = ModelParams::new(a, b).unwrap();
        let chars = solve_simple_characters(&m, 20).unwrap();
        for r in 1..a {
            for s in 1..b {
                let h = m.h_rs(r, s);
                let c = chars.get(&h).unwrap();
                let l = c.cutoff().min(20);
                assert_eq!(
                    c.coeffs[..=l],
                    rocha_caridi(a, b, r, s, l)[..],
                    "({a},{b}) L({h})"
                );
            }
        }
    }
}

#[test]
fn socle_sums_reproduce_fock_characters() {
    for (a, b) in [(2, 3), (2, 5)] {
        let m = ModelParams::new(a, b).unwrap();
        let chars = solve_simple_characters(&m, solver_cutoff_for_labels(&m, 3, 20)).unwrap();
        for r in 1..=a {
            for s in 1..=b {
                for n in -3..=3 {
                    let c = verify_socle_sum(&m, &chars, r, s, n, 20).unwrap();
                    assert!(c.pass, "{c}");
                }
            }
        }
    }
}

#[test]
fn solver_is_order_independent() {
    for (a, b) in MODELS {
        let m = ModelParams::new(a, b).unwrap();
        let x = solve_simple_characters_ordered(&m, 15, false).unwrap();
        let y = solve_simple_characters_ordered(&m, 15, true).unwrap();
        assert_eq!(x.chars, y.chars);
        assert!(x
            .chars
            .values()
            .all(|c| c.is_nonnegative() && c.coeffs[0] == 1));
    }
}

#[test]
fn felder_euler_characteristics() {
    for (a, b) in MODELS {
        let m = ModelParams::new(a, b).unwrap();
        let chars = solve_simple_characters(&m, 20).unwrap();
        let expect = |r: i64, s: i64, exact: bool| -> CharSeries {
            let h = m.h_label(r, s, 0);
            if exact {
                CharSeries::zero(h, 20)
            } else {
                chars
                    .get(&h)
                    .unwrap()
                    .realign(&h, &(&h + rat(20, 1)))
                    .unwrap()
            }
        };
        for r in 1..a {
            for s in 1..=b {
                let f = felder_euler(&m, Sign::Plus, r, s, 20).unwrap();
                assert_eq!(f, expect(r, s, s == b), "S+ ({a},{b}) ({r},{s})");
                assert!(f.is_nonnegative());
                assert_eq!(
                    felder_euler(&m, Sign::Plus, r, s, 26).unwrap().truncate(20),
                    f
                );
            }
        }
        for r in 1..=a {
            for s in 1..b {
                let f = felder_euler(&m, Sign::Minus, r, s, 20).unwrap();
                assert_eq!(f, expect(r, s, r == a), "S- ({a},{b}) ({r},{s})");
            }
        }
    }
}

#[test]
fn kernel_and_image_characters() {
    for (a, b) in MODELS {
        let m = ModelParams::new(a, b).unwrap();
        let chars = solve_simple_characters(&m, kx_solver_cutoff(&m, 20).unwrap()).unwrap();
        for r in 1..=a {
            for s in 1..=b {
                for sign in [Sign::Plus, Sign::Minus] {
                    let rep = kx_characters(&m, &chars, r, s, sign, 20).unwrap();
                    assert!(rep.certificate().pass);
                    assert!(rep.x_soliton.is_nonnegative());
                }
            }
        }
    }
}
