use laplab::partitions::{
    parametric_instance, parametric_polynomial, quotient_matrix, sign_claims, verify_parametric_identity,
    ParametricFamily,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const MAX_N: usize = 30;

fn instances(family: ParametricFamily, max_n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for n in 5..=max_n {
        match family {
            ParametricFamily::H24F | ParametricFamily::H24G => out.extend((1..=n - 4).map(|s| vec![n, s])),
            ParametricFamily::G3abF => {
                for a in 1..n {
                    out.extend((1..).take_while(|b| a + b + 5 <= n).map(|b| vec![n, a, b]));
                }
            }
            ParametricFamily::Gn43F if n >= 7 => out.push(vec![n]),
            ParametricFamily::Gn43F => {}
        }
    }
    out
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let k = m.len();
    let mut acc = BigRational::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        let pivot = m[c][c].clone();
        acc *= &pivot;
        for r in c + 1..k {
            let f = &m[r][c] / &pivot;
            for j in c..k {
                let v = &f * &m[c][j];
                m[r][j] -= v;
            }
        }
    }
    acc
}

// x * f(x) = det(xI - B) at a few integer points, by elimination.
#[test]
fn closed_forms_match_quotient_determinants() {
    for family in ParametricFamily::ALL {
        for params in instances(family, 16) {
            let f = parametric_polynomial(family, &params).unwrap();
            let (g, p) = parametric_instance(family, &params).unwrap();
            let b: Vec<Vec<BigRational>> = quotient_matrix(&g, &p)
                .unwrap()
                .to_strings()
                .iter()
                .map(|row| row.iter().map(|x| x.parse().unwrap()).collect())
                .collect();
            for x in [-1i64, 0, 2, 3, 7] {
                let xm: Vec<Vec<BigRational>> = (0..b.len())
                    .map(|i| {
                        (0..b.len())
                            .map(|j| {
                                let d = if i == j { BigRational::from_integer(x.into()) } else { BigRational::zero() };
                                d - &b[i][j]
                            })
                            .collect()
                    })
                    .collect();
                let expected = BigRational::from_integer(BigInt::from(x) * f.eval_i64(x));
                assert_eq!(det(xm), expected, "{family}{params:?} at {x}");
            }
        }
    }
}

#[test]
fn identities_hold_through_order_thirty() {
    for family in ParametricFamily::ALL {
        for params in instances(family, MAX_N) {
            let r = verify_parametric_identity(family, &params).unwrap();
            assert!(r.confirmed(), "{}", r.instance);
        }
    }
}

// Two printed evaluations disagree with the polynomials they evaluate:
// h24_g(2) is s(n-2), and g3ab_f(0) is n(n-2-a-b). Every other printed
// value agrees, and every sign claim holds.
#[test]
fn printed_evaluations() {
    for family in ParametricFamily::ALL {
        for params in instances(family, MAX_N) {
            let p: Vec<i64> = params.iter().map(|&x| x as i64).collect();
            for c in sign_claims(family, &params).unwrap() {
                assert!(c.sign_holds(), "{family}{params:?} at {}", c.point);
                let actual = match (family, c.point) {
                    (ParametricFamily::H24G, 2) => Some(p[1] * (p[0] - 2)),
                    (ParametricFamily::G3abF, 0) => Some(p[0] * (p[0] - 2 - p[1] - p[2])),
                    _ => None,
                };
                match actual {
                    Some(v) => {
                        assert_eq!(c.value, BigInt::from(v), "{family}{params:?}");
                        assert!(!c.printed_matches(), "{family}{params:?}");
                    }
                    None => assert!(c.printed_matches(), "{family}{params:?} at {}", c.point),
                }
            }
        }
    }
}

#[test]
fn out_of_range_instances_are_rejected() {
    assert!(parametric_polynomial(ParametricFamily::H24F, &[8, 5]).is_err());
    assert!(parametric_polynomial(ParametricFamily::G3abF, &[9, 2, 3]).is_err());
    assert!(parametric_polynomial(ParametricFamily::Gn43F, &[6]).is_err());
    assert!(parametric_polynomial(ParametricFamily::H24G, &[8]).is_err());
}
