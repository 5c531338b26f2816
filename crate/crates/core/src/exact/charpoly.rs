//! Characteristic polynomials by the Faddeev–LeVerrier recurrence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{IntPolynomial, RationalPolynomial};
use crate::matrix::{IntMatrix, Matrix};

/// `det(xI - M)` over the integers. Monic of degree `n`.
///
/// With `N_0 = 0`, `c_n = 1`:
/// `N_k = M N_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(M N_k) / k`.
/// Every division by `k` is exact for integer input.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    if let Some(c) = char_poly_i128(m) {
        return IntPolynomial::new(c.into_iter().map(BigInt::from).collect());
    }
    let a = Matrix::from_fn(m.order(), |i, j| BigInt::from(m[(i, j)]));
    let coeffs = faddeev_leverrier(&a, |num, k| {
        let (q, r) = (num / BigInt::from(k), num % BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        q
    });
    IntPolynomial::new(coeffs)
}

/// Same recurrence in checked `i128`; `None` on overflow.
fn char_poly_i128(m: &IntMatrix) -> Option<Vec<i128>> {
    let n = m.order();
    let a: Vec<i128> = (0..n * n).map(|k| i128::from(m[(k / n, k % n)])).collect();
    let mul = |x: &[i128], y: &[i128]| -> Option<Vec<i128>> {
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let xik = x[i * n + k];
                if xik == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = xik.checked_mul(y[k * n + j])?;
                    out[i * n + j] = out[i * n + j].checked_add(t)?;
                }
            }
        }
        Some(out)
    };
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut prev = vec![0i128; n * n];
    for k in 1..=n {
        let mut next = mul(&a, &prev)?;
        for i in 0..n {
            next[i * n + i] = next[i * n + i].checked_add(coeffs[n - k + 1])?;
        }
        let mut trace = 0i128;
        for i in 0..n {
            for j in 0..n {
                trace = trace.checked_add(a[i * n + j].checked_mul(next[j * n + i])?)?;
            }
        }
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -(trace / k as i128);
        prev = next;
    }
    Some(coeffs)
}

/// `det(xI - B)` for a rational matrix.
pub fn char_poly_rational(m: &Matrix<BigRational>) -> RationalPolynomial {
    let coeffs = faddeev_leverrier(m, |num, k| num / BigRational::from_integer(BigInt::from(k)));
    RationalPolynomial::new(coeffs)
}

fn faddeev_leverrier<T, F>(a: &Matrix<T>, div: F) -> Vec<T>
where
    T: Clone + Default + Zero + One + PartialEq,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
    T: std::ops::Add<Output = T> + std::ops::Neg<Output = T>,
    F: Fn(&T, usize) -> T,
{
    let n = a.order();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut prev: Matrix<T> = Matrix::zeros(n);
    for k in 1..=n {
        // N_k = A N_{k-1} + c_{n-k+1} I
        let mut next = multiply(a, &prev);
        for i in 0..n {
            next[(i, i)] = next[(i, i)].clone() + coeffs[n - k + 1].clone();
        }
        let am = multiply(a, &next);
        let trace = (0..n).fold(T::zero(), |t, i| t + am[(i, i)].clone());
        coeffs[n - k] = -div(&trace, k);
        prev = next;
    }
    coeffs
}

fn multiply<T>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T>
where
    T: Clone + Default + Zero + std::ops::Add<Output = T>,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    let n = a.order();
    Matrix::from_fn(n, |i, j| {
        (0..n).fold(T::zero(), |acc, k| {
            let x = &a[(i, k)];
            if x.is_zero() {
                acc
            } else {
                acc + x * &b[(k, j)]
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::matrix::laplacian;

    #[test]
    fn small_graphs() {
        let k3 = char_poly(&laplacian(&Graph::complete(3).unwrap()));
        assert_eq!(k3, IntPolynomial::from_i64(&[0, 9, -6, 1]));
        let p2 = char_poly(&laplacian(&Graph::path(2).unwrap()));
        assert_eq!(p2, IntPolynomial::from_i64(&[0, -2, 1]));
        let k0 = char_poly(&laplacian(&Graph::empty(0).unwrap()));
        assert_eq!(k0, IntPolynomial::one());
    }

    #[test]
    fn fast_path_matches_bigint() {
        let g = Graph::complete(12).unwrap();
        let m = laplacian(&g);
        let a = Matrix::from_fn(12, |i, j| BigInt::from(m[(i, j)]));
        let slow = faddeev_leverrier(&a, |num, k| num / BigInt::from(k));
        assert_eq!(char_poly(&m), IntPolynomial::new(slow));
        assert!(char_poly_i128(&m).is_some());
    }

    #[test]
    fn non_symmetric_rational() {
        // [[1, 1/2], [0, 3]] -> (x-1)(x-3)
        let half = BigRational::new(1.into(), 2.into());
        let one = BigRational::from_integer(1.into());
        let three = BigRational::from_integer(3.into());
        let m = Matrix::from_rows(vec![vec![one, half], vec![BigRational::zero(), three]]).unwrap();
        let p = char_poly_rational(&m);
        assert_eq!(p.to_integer().unwrap(), IntPolynomial::from_i64(&[3, -4, 1]));
    }
}
