//! Dense linear algebra over a prime field `F_p`.

use super::field::{Field, PrimeField};

/// Solution set `{ particular + span(kernel) }` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<u64>,
    pub kernel: Vec<Vec<u64>>,
}

/// Solves `A x = b` over `F_p` where `a` has `rows` rows of equal length.
/// Returns `None` when the system is inconsistent. The particular solution
/// has all free variables set to zero.
pub fn solve(fp: &PrimeField, a: &[Vec<u64>], b: &[u64]) -> Option<AffineSolution> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut row = r.clone();
            row.push(bi);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = fp.inv(&m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = fp.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in c..=cols {
                    let sub = fp.mul(&factor, &m[r][j]);
                    m[i][j] = fp.sub(&m[i][j], &sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| row[cols] != 0) {
        return None;
    }
    let mut particular = vec![0u64; cols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][cols];
    }
    let kernel = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = fp.neg(&m[i][free]);
            }
            v
        })
        .collect();
    Some(AffineSolution { particular, kernel })
}
