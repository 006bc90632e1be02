//! Multi-modular route to `det M` and `sm(adj M)`.
//!
//! Both polynomials are recovered exactly: each prime contributes their
//! images, obtained by evaluating `M` at enough points, solving there, and
//! interpolating. Primes are added until their product exceeds twice a
//! Hadamard bound on the coefficients, which is taken on the unit circle:
//! `|c_k| <= max |det M(z)| <= prod_i ||row_i(z)||_2` for `|z| = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::matrix::PolyMatrix;
use super::polynomial::IntPoly;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, exact below 2^32.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13] {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        if a % n == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below 2^31, largest first; products of two residues fit in u64.
fn primes() -> impl Iterator<Item = u64> {
    (1u64 << 30..1 << 31).rev().filter(|&n| is_prime(n))
}

fn residue(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue below p")
}

/// `det A` and the sum of the entries of `A^{-1}`, or `None` when `A` is
/// singular mod `p`. `a` is consumed as scratch space.
fn solve_mod(a: &mut [Vec<u64>], p: u64) -> Option<(u64, u64)> {
    let n = a.len();
    let mut rhs = vec![1u64; n];
    let mut det = 1u64;
    for k in 0..n {
        let pivot = (k..n).find(|&i| a[i][k] != 0)?;
        if pivot != k {
            a.swap(pivot, k);
            rhs.swap(pivot, k);
            det = (p - det) % p;
        }
        det = mul_mod(det, a[k][k], p);
        let inv = inv_mod(a[k][k], p);
        for i in k + 1..n {
            if a[i][k] == 0 {
                continue;
            }
            let f = mul_mod(a[i][k], inv, p);
            let (top, bottom) = a.split_at_mut(i);
            let (row_k, row_i) = (&top[k], &mut bottom[0]);
            for j in k..n {
                row_i[j] = (row_i[j] + p - mul_mod(f, row_k[j], p)) % p;
            }
            rhs[i] = (rhs[i] + p - mul_mod(f, rhs[k], p)) % p;
        }
    }
    let mut w = vec![0u64; n];
    for k in (0..n).rev() {
        let mut acc = rhs[k];
        for j in k + 1..n {
            acc = (acc + p - mul_mod(a[k][j], w[j], p)) % p;
        }
        w[k] = mul_mod(acc, inv_mod(a[k][k], p), p);
    }
    let sum = w.iter().fold(0, |s, &x| (s + x) % p);
    Some((det, sum))
}

/// Coefficients (ascending) of the polynomial of degree `< xs.len()`
/// through the given points, by Newton divided differences.
fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let m = xs.len();
    let mut c = ys.to_vec();
    for j in 1..m {
        for i in (j..m).rev() {
            let num = (c[i] + p - c[i - 1]) % p;
            let den = (xs[i] + p - xs[i - j]) % p;
            c[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    // expand the Newton form from the innermost term outwards
    let mut poly = vec![0u64; m];
    for i in (0..m).rev() {
        // poly = poly * (q - x_i) + c_i
        let mut next = vec![0u64; m];
        for k in 0..m {
            if poly[k] == 0 {
                continue;
            }
            if k + 1 < m {
                next[k + 1] = (next[k + 1] + poly[k]) % p;
            }
            next[k] = (next[k] + p - mul_mod(poly[k], xs[i], p)) % p;
        }
        next[0] = (next[0] + c[i]) % p;
        poly = next;
    }
    poly
}

/// Incremental CRT on each coefficient: `acc` holds residues modulo
/// `modulus`, `r` the new residues modulo `p`.
fn crt_step(acc: &mut [BigInt], modulus: &BigInt, r: &[u64], p: u64) {
    let bp = BigInt::from(p);
    let m_inv = BigInt::from(inv_mod(residue(modulus, p), p));
    for (a, &ri) in acc.iter_mut().zip(r) {
        let diff = (BigInt::from(ri) - &*a).mod_floor(&bp);
        let t = (diff * &m_inv).mod_floor(&bp);
        *a += modulus * t;
    }
}

fn symmetric_lift(acc: Vec<BigInt>, modulus: &BigInt) -> IntPoly {
    let half: BigInt = modulus / 2;
    IntPoly::new(
        acc.into_iter()
            .map(|c| if c > half { c - modulus } else { c })
            .collect(),
    )
}

impl PolyMatrix {
    /// `(det M, sm(adj M))` by evaluation, interpolation and Chinese
    /// remaindering; the same pair as [`PolyMatrix::det_and_adjugate_sum`].
    ///
    /// Returns `None` when `M` is not square, or when `det M` vanishes mod
    /// several primes in a row (an identically singular matrix, say); the
    /// fraction-free route handles those.
    pub fn det_and_adjugate_sum_modular(&self) -> Option<(IntPoly, IntPoly)> {
        let n = self.rows();
        if n != self.cols() {
            return None;
        }
        if n == 0 {
            return Some((IntPoly::one(), IntPoly::zero()));
        }
        let entry = |i: usize, j: usize| self.get(i, j);
        // degree bound, by rows and by columns; the bordered matrix adds
        // only constants so the same bound covers the adjugate sum
        let row_deg: usize = (0..n)
            .map(|i| {
                (0..n)
                    .filter_map(|j| entry(i, j).degree())
                    .max()
                    .unwrap_or(0)
            })
            .sum();
        let col_deg: usize = (0..n)
            .map(|j| {
                (0..n)
                    .filter_map(|i| entry(i, j).degree())
                    .max()
                    .unwrap_or(0)
            })
            .sum();
        let degree = row_deg.min(col_deg);

        // Hadamard bound for the bordered matrix [[M, 1], [1^T, 0]], which
        // dominates the bound for M itself
        let mut log2_bound = 0.5 * (n as f64).log2();
        for i in 0..n {
            let mut sq = 1.0f64;
            for j in 0..n {
                let l1 = entry(i, j)
                    .coeffs()
                    .iter()
                    .fold(BigInt::zero(), |s, c| s + c.abs())
                    .to_f64()?;
                sq += l1 * l1;
            }
            if !sq.is_finite() {
                return None;
            }
            log2_bound += 0.5 * sq.log2();
        }
        let needed_bits = log2_bound.ceil() as u64 + 2;

        let mut modulus = BigInt::from(1u8);
        let mut det_acc = vec![BigInt::zero(); degree + 1];
        let mut adj_acc = vec![BigInt::zero(); degree + 1];
        let mut misses = 0;
        for p in primes() {
            if modulus.bits() > needed_bits {
                break;
            }
            let reduced: Vec<Vec<u64>> = (0..n * n)
                .map(|k| {
                    entry(k / n, k % n)
                        .coeffs()
                        .iter()
                        .map(|c| residue(c, p))
                        .collect()
                })
                .collect();
            let (mut xs, mut dets, mut adjs) = (Vec::new(), Vec::new(), Vec::new());
            let mut x = 0u64;
            // det mod p has at most `degree` roots unless it vanishes
            while xs.len() <= degree && x <= 2 * degree as u64 + 1 {
                let mut a: Vec<Vec<u64>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                reduced[i * n + j]
                                    .iter()
                                    .rev()
                                    .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
                            })
                            .collect()
                    })
                    .collect();
                if let Some((d, s)) = solve_mod(&mut a, p) {
                    xs.push(x);
                    dets.push(d);
                    adjs.push(mul_mod(d, s, p));
                }
                x += 1;
            }
            if xs.len() <= degree {
                misses += 1;
                if misses == 3 {
                    return None;
                }
                continue;
            }
            crt_step(&mut det_acc, &modulus, &interpolate(&xs, &dets, p), p);
            crt_step(&mut adj_acc, &modulus, &interpolate(&xs, &adjs, p), p);
            modulus *= p;
        }
        Some((
            symmetric_lift(det_acc, &modulus),
            symmetric_lift(adj_acc, &modulus),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let found: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(found, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert_eq!(primes().next(), Some((1 << 31) - 1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = 1_000_000_007;
        let coeffs = [5u64, 0, 3, p - 1];
        let xs: Vec<u64> = (0..4).collect();
        let ys: Vec<u64> = xs
            .iter()
            .map(|&x| {
                coeffs
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
            })
            .collect();
        assert_eq!(interpolate(&xs, &ys, p), coeffs.to_vec());
    }

    #[test]
    fn agrees_with_bareiss() {
        let m = PolyMatrix::from_rows(vec![
            vec![
                IntPoly::from_i64s(&[1]),
                IntPoly::from_i64s(&[0, 1]),
                IntPoly::from_i64s(&[0, 0, 1]),
            ],
            vec![
                IntPoly::from_i64s(&[0, 1]),
                IntPoly::from_i64s(&[1]),
                IntPoly::from_i64s(&[0, 1]),
            ],
            vec![
                IntPoly::from_i64s(&[0, 0, 1]),
                IntPoly::from_i64s(&[0, 1]),
                IntPoly::from_i64s(&[1]),
            ],
        ])
        .unwrap();
        assert_eq!(
            m.det_and_adjugate_sum_modular(),
            Some(m.det_and_adjugate_sum().unwrap())
        );
    }

    #[test]
    fn big_coefficients() {
        let big = IntPoly::new(vec![BigInt::from(3).pow(80u32), BigInt::from(-7)]);
        let m = PolyMatrix::from_rows(vec![
            vec![big.clone(), IntPoly::from_i64s(&[2, 1])],
            vec![IntPoly::from_i64s(&[0, -5]), big],
        ])
        .unwrap();
        assert_eq!(
            m.det_and_adjugate_sum_modular(),
            Some(m.det_and_adjugate_sum().unwrap())
        );
    }

    #[test]
    fn singular_falls_back() {
        let row = vec![IntPoly::from_i64s(&[1, 1]), IntPoly::from_i64s(&[2])];
        let m = PolyMatrix::from_rows(vec![row.clone(), row]).unwrap();
        assert_eq!(m.det_and_adjugate_sum_modular(), None);
        assert_eq!(
            PolyMatrix::identity(0).det_and_adjugate_sum_modular(),
            Some((IntPoly::one(), IntPoly::zero()))
        );
    }
}
