#![allow(dead_code)]

use chaingroup::braid::BraidWord;
use chaingroup::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type QMat = Vec<Vec<BigRational>>;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn qmul(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Unreduced Burau matrix of `w` at the rational point `t`.
pub fn burau(w: &BraidWord, t: i64) -> QMat {
    let n = w.strands();
    let t = q(t);
    let mut acc: QMat = (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let mut g: QMat = (0..n)
            .map(|a| (0..n).map(|b| if a == b { q(1) } else { q(0) }).collect())
            .collect();
        if l > 0 {
            g[i][i] = q(1) - &t;
            g[i][i + 1] = t.clone();
            g[i + 1][i] = q(1);
            g[i + 1][i + 1] = q(0);
        } else {
            let ti = t.recip();
            g[i][i] = q(0);
            g[i][i + 1] = q(1);
            g[i + 1][i] = ti.clone();
            g[i + 1][i + 1] = q(1) - ti;
        }
        acc = qmul(&acc, &g);
    }
    acc
}

/// Burau images at two points agree. Necessary for equality in `B_n`.
pub fn burau_agree(u: &BraidWord, v: &BraidWord) -> bool {
    [2, -3].iter().all(|&t| burau(u, t) == burau(v, t))
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// Fraction-free determinant.
pub fn det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Order of `Z^c / rowspace(a)`: gcd of the maximal minors, zero if infinite.
pub fn quotient_order(a: &IntMatrix) -> BigInt {
    let (r, c) = (a.rows(), a.cols());
    let mut g = BigInt::zero();
    let mut pick = Vec::with_capacity(c);
    fn rec(a: &IntMatrix, r: usize, c: usize, from: usize, pick: &mut Vec<usize>, g: &mut BigInt) {
        if pick.len() == c {
            let rows: Vec<Vec<BigInt>> = pick.iter().map(|&i| a.row(i).to_vec()).collect();
            *g = g.gcd(&det(&rows));
            return;
        }
        for i in from..r {
            if r - i < c - pick.len() {
                break;
            }
            pick.push(i);
            rec(a, r, c, i + 1, pick, g);
            pick.pop();
        }
    }
    rec(a, r, c, 0, &mut pick, &mut g);
    g.abs()
}

pub fn omega(g: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        m.set(2 * i, 2 * i + 1, BigInt::from(1));
        m.set(2 * i + 1, 2 * i, BigInt::from(-1));
    }
    m
}

pub fn is_symplectic(m: &IntMatrix, g: usize) -> bool {
    let w = omega(g);
    &(&m.transpose() * &w) * m == w
}
