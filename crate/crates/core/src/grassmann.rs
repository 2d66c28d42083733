//! Gaussian binomial coefficients and deterministic enumeration of the
//! Grassmannian G_q(n, k).
//!
//! Every k-dimensional subspace of GF(q)^n has a unique reduced row echelon
//! basis, which splits into the identifying vector (the 0/1 indicator of the
//! pivot columns) and the Ferrers tableau (the free entries to the right of
//! the pivots). Enumeration walks identifying vectors in ascending
//! lexicographic order (leftmost coordinate most significant) and, inside
//! each one, tableau value strings in ascending lexicographic order
//! (row-major, last entry fastest). The order is total and stable, so
//! enumeration indices are reproducible identifiers.

use crate::field::Field;
use crate::linalg::{check_cap, MatrixGF, Subspace};
use crate::{Error, Result};
use num::bigint::BigUint;
use num::{One, Zero};

/// Gaussian binomial [n choose k]_q.
pub fn gaussian(n: u64, k: u64, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

/// Number of dots in the Ferrers diagram row of each pivot: row i gets one
/// dot per non-pivot column to the right of pivot i.
pub fn row_lengths(iv: &[u8]) -> Vec<usize> {
    let n = iv.len();
    let pivots: Vec<usize> = (0..n).filter(|&j| iv[j] == 1).collect();
    let k = pivots.len();
    // p <= n - k + i always holds: k - 1 - i pivots still follow pivot i
    pivots
        .iter()
        .enumerate()
        .map(|(i, &p)| n - k + i - p)
        .collect()
}

/// Builds the canonical basis matrix from an identifying vector and a flat
/// row-major tableau value vector (one entry per dot).
pub fn subspace_from_tableaux(f: &Field, iv: &[u8], values: &[u64]) -> Subspace {
    let n = iv.len();
    let pivots: Vec<usize> = (0..n).filter(|&j| iv[j] == 1).collect();
    let k = pivots.len();
    let mut m = MatrixGF::zero(f.q(), k, n);
    let mut vi = 0usize;
    for (i, &p) in pivots.iter().enumerate() {
        m.set(i, p, 1);
        for j in (p + 1)..n {
            if iv[j] == 0 {
                m.set(i, j, values[vi]);
                vi += 1;
            }
        }
    }
    assert_eq!(vi, values.len(), "tableau size mismatch");
    Subspace::from_rref_unchecked(m)
}

/// Reads the identifying vector and tableau values back off a subspace.
pub fn ferrers_tableaux(s: &Subspace) -> (Vec<u8>, Vec<u64>) {
    let iv = s.identifying_vector();
    let n = s.ambient();
    let pivots = s.pivots();
    let mut values = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for j in (p + 1)..n {
            if iv[j] == 0 {
                values.push(s.gen().get(i, j));
            }
        }
    }
    (iv, values)
}

/// All of G_q(n, k) in canonical order. Fails fast if the Grassmannian is
/// larger than `cap`.
pub fn enumerate_grassmannian(
    f: &Field,
    n: usize,
    k: usize,
    cap: u128,
) -> Result<Vec<Subspace>> {
    if k > n || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "G_q({n},{k}) is empty or malformed"
        )));
    }
    if n > 32 {
        return Err(Error::InvalidParameter(
            "enumeration supports ambient dimension up to 32".into(),
        ));
    }
    let total = gaussian(n as u64, k as u64, f.q());
    let total_u128: u128 = (&total)
        .try_into()
        .map_err(|_| Error::CapExceeded {
            what: "grassmannian enumeration",
            needed: u128::MAX,
            cap,
        })?;
    check_cap("grassmannian enumeration", total_u128, cap)?;

    let q = f.q();
    let mut out = Vec::with_capacity(total_u128 as usize);
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        // bit (n-1-j) of mask is column j, so ascending mask order is
        // ascending lexicographic order of the identifying vector string
        let iv: Vec<u8> = (0..n).map(|j| ((mask >> (n - 1 - j)) & 1) as u8).collect();
        let dots: usize = row_lengths(&iv).iter().sum();
        let mut values = vec![0u64; dots];
        loop {
            out.push(subspace_from_tableaux(f, &iv, &values));
            // odometer, last dot fastest
            let mut i = dots;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                values[i] += 1;
                if values[i] < q {
                    break;
                }
                values[i] = 0;
            }
            if values.iter().all(|&v| v == 0) {
                break;
            }
        }
    }
    debug_assert_eq!(out.len() as u128, total_u128);
    Ok(out)
}

/// Normalized representatives of the one-dimensional subspaces of GF(q)^len,
/// ascending by the vector read as a radix-q integer, leftmost coordinate
/// most significant.
pub fn normalized_vectors(f: &Field, len: usize) -> Vec<Vec<u64>> {
    let q = f.q();
    let mut out = Vec::new();
    let mut v = vec![0u64; len];
    loop {
        if let Some(first) = v.iter().position(|&c| c != 0) {
            if v[first] == 1 {
                out.push(v.clone());
            }
        }
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < q {
                break;
            }
            v[i] = 0;
        }
    }
}
