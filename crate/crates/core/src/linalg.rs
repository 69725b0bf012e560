//! Exact rank computations: modular Gaussian elimination over `ZZ/p`,
//! fraction-free (Bareiss) elimination over `QQ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{Coeff, FieldSpec};

/// Rank of a dense matrix given by rows. All entries must lie in `field`.
pub fn rank(rows: &[Vec<Coeff>], field: FieldSpec) -> usize {
    if rows.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::PrimeField(p) => {
            let m: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| match c {
                            Coeff::Fp { value, .. } => *value as u64,
                            Coeff::Q(_) => panic!("rational entry in a prime-field matrix"),
                        })
                        .collect()
                })
                .collect();
            rank_mod_p(m, p as u64)
        }
        FieldSpec::Rationals => {
            let m: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
            rank_bareiss(m)
        }
    }
}

fn clear_denominators(row: &[Coeff]) -> Vec<BigInt> {
    let qs: Vec<_> = row.iter().map(|c| c.to_rational()).collect();
    let l = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    qs.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = m.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a = (*a + p - f * b % p) % p;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Bareiss elimination; every intermediate division is exact.
fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> usize {
    let ncols = m.iter().map(|r| r.len()).max().unwrap_or(0);
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let pivot = m[rank][col].clone();
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let f = row[col].clone();
            for (a, b) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let v = &pivot * &*a - &f * b;
                debug_assert!((&v % &prev).is_zero());
                *a = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Is `v` in the column span of `a` (`a` given by rows)?
pub fn in_column_span(a: &[Vec<Coeff>], v: &[Coeff], field: FieldSpec) -> bool {
    let augmented: Vec<Vec<Coeff>> = a
        .iter()
        .zip(v)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    rank(a, field) == rank(&augmented, field)
}
