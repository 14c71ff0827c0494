//! Enumeration and sampling of linear combinations over `F_p`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::Field;

/// Visits every vector `sum_j c_j * basis[j]` with `c in [0, p)^d` exactly once,
/// in reflected p-ary Gray-code order so each step adds or subtracts a single
/// basis vector. The callback receives the coefficients and the combination;
/// returning `false` stops the walk. Returns `false` if stopped early.
pub fn for_each_combination<F>(field: Field, basis: &[Vec<u32>], len: usize, mut visit: F) -> bool
where
    F: FnMut(&[u32], &[u32]) -> bool,
{
    let p = field.characteristic();
    let d = basis.len();
    let mut digits = vec![0u32; d];
    let mut up = vec![true; d];
    let mut current = vec![0u32; len];
    if !visit(&digits, &current) {
        return false;
    }
    loop {
        let mut j = 0;
        while j < d {
            let movable = if up[j] { digits[j] + 1 < p } else { digits[j] > 0 };
            if movable {
                break;
            }
            up[j] = !up[j];
            j += 1;
        }
        if j == d {
            return true;
        }
        if up[j] {
            digits[j] += 1;
            for (c, &b) in current.iter_mut().zip(&basis[j]) {
                *c = field.add(*c, b);
            }
        } else {
            digits[j] -= 1;
            for (c, &b) in current.iter_mut().zip(&basis[j]) {
                *c = field.sub(*c, b);
            }
        }
        if !visit(&digits, &current) {
            return false;
        }
    }
}

/// Combination with the given coefficients.
pub fn combine(field: Field, basis: &[Vec<u32>], coeffs: &[u32], len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for (b, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(b) {
            *o = field.add(*o, field.mul(c, x));
        }
    }
    out
}

pub fn random_coefficients(field: Field, d: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    (0..d).map(|_| rng.gen_range(0..field.characteristic())).collect()
}
