//! Binary linear codes from the incidence structure of a lifted MRD code.
//!
//! Every codeword of a lifted MRD code covers a fixed number of points
//! (one-dimensional subspaces) outside the common "zero prefix" region, and
//! every point lies in a fixed number of codewords. Writing these
//! incidences as a 0/1 matrix `H`, with one row per codeword (in
//! enumeration order, so rows group into parallel classes) and one column
//! per point (in the canonical group-major order of the designs module),
//! yields a highly regular parity-check matrix:
//!
//! * row weight `k' = (q^k − 1)/(q − 1)`, the points per codeword;
//! * column weight `r = q^{(n−k)(k−δ)}`, the codewords per point;
//! * each (parallel class) × (point group) sub-block is a
//!   `q^{n−k} × q^{n−k}` permutation matrix.
//!
//! Two binary codes follow: `C = null(H)` of length equal to the point
//! count, and `C^T = null(H^T)` of length equal to the codeword count. Both
//! contain only even-weight words because the all-ones vector lies in the
//! row space of either orientation (sum one parallel class for `H`, one
//! point group for `H^T`).
//!
//! The Gram matrix `H^T H` has exactly three eigenvalues, `r k'`, `r` and
//! `0`, with multiplicities `1`, `k'(q^{n−k} − 1)` and `k' − 1`. This is
//! certified exactly, with no floating point and no eigensolver: the
//! annihilating polynomial `M(M − rI)(M − r k' I) = 0` confines the
//! spectrum to those three values, and the traces of `M` and `M²` then pin
//! the multiplicities through a Vandermonde system.
//!
//! The second eigenvalue feeds two regularity-based distance bounds (the
//! two-sided Tanner bounds T1 and T2), and the bounded pairwise
//! intersection of codewords gives a third floor for the transpose code.
//! Minimum distances are computed exactly by a Gray-code sweep of the
//! kernel when the dimension is at most [`EXACT_DISTANCE_MAX_DIM`];
//! otherwise the summary reports the interval between the best lower bound
//! and an upper bound (`2 q^{n−k}`, tightened by seeded random sampling of
//! kernel combinations).

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{BigRational, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::designs::PointMap;
use crate::field::Field;
use crate::rankmetric::{CodeFamily, ConstantDimensionCode};
use crate::rng::SplitMix64;
use crate::{Error, Result};

/// Kernel dimension up to which minimum distance is found by exhaustive
/// Gray-code sweep (2^28 codewords, a minutes-scale budget).
pub const EXACT_DISTANCE_MAX_DIM: usize = 28;

/// Column cap for the exact Gram-matrix certificate; the Gram matrix is
/// dense with `n_cols²` entries of 128 bits.
const GRAM_MAX_COLS: usize = 4096;

/// Seeded random kernel samples used to tighten the distance upper bound
/// when the kernel is too large to sweep.
const UPPER_BOUND_SAMPLES: usize = 4096;

// ---------------------------------------------------------------------------
// packed GF(2) rows: column j lives in bit j % 64 of word j / 64

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

fn get_bit(row: &[u64], j: usize) -> bool {
    row[j / 64] >> (j % 64) & 1 == 1
}

fn set_bit(row: &mut [u64], j: usize) {
    row[j / 64] |= 1u64 << (j % 64);
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn row_weight(row: &[u64]) -> u64 {
    row.iter().map(|w| w.count_ones() as u64).sum()
}

fn first_set(row: &[u64]) -> Option<usize> {
    for (wi, &w) in row.iter().enumerate() {
        if w != 0 {
            return Some(wi * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

/// Reduced row echelon form of packed rows; returns (reduced rows, pivot
/// columns) with pivot columns strictly increasing.
fn gf2_rref(rows: impl Iterator<Item = Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut red: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut v in rows {
        for (i, &pc) in pivots.iter().enumerate() {
            if get_bit(&v, pc) {
                xor_into(&mut v, &red[i]);
            }
        }
        if let Some(c) = first_set(&v) {
            for r in red.iter_mut() {
                if get_bit(r, c) {
                    xor_into(r, &v);
                }
            }
            let pos = pivots.partition_point(|&p| p < c);
            pivots.insert(pos, c);
            red.insert(pos, v);
        }
    }
    (red, pivots)
}

/// Basis of the right kernel {x : Mx = 0} of the matrix given by packed
/// rows over `n_cols` columns. One basis vector per non-pivot column, in
/// ascending column order.
fn gf2_nullspace(rows: impl Iterator<Item = Vec<u64>>, n_cols: usize) -> Vec<Vec<u64>> {
    let (red, pivots) = gf2_rref(rows);
    let words = words_for(n_cols);
    let mut pivot_set = vec![false; n_cols];
    for &p in &pivots {
        pivot_set[p] = true;
    }
    let mut basis = Vec::with_capacity(n_cols - pivots.len());
    for j in 0..n_cols {
        if pivot_set[j] {
            continue;
        }
        let mut b = vec![0u64; words];
        set_bit(&mut b, j);
        for (i, &pc) in pivots.iter().enumerate() {
            if get_bit(&red[i], j) {
                set_bit(&mut b, pc);
            }
        }
        basis.push(b);
    }
    basis
}

// ---------------------------------------------------------------------------

/// The codeword-by-point incidence matrix of a lifted MRD code, bit-packed
/// row-major. Rows follow the code's enumeration order (consecutive runs of
/// `q^{n−k}` rows form parallel classes); columns follow the canonical
/// group-major point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    n_rows: usize,
    n_cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl IncidenceMatrix {
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Points per codeword: `(q^k − 1)/(q − 1)`.
    pub fn row_weight(&self) -> u64 {
        (self.q.pow(self.k as u32) - 1) / (self.q - 1)
    }

    /// Codewords per point: `q^{(n−k)(k−δ)}`.
    pub fn col_weight(&self) -> u64 {
        self.q.pow(((self.n - self.k) * (self.k - self.delta)) as u32)
    }

    /// Rows per parallel class and points per group: `q^{n−k}`.
    pub fn block_size(&self) -> usize {
        self.q.pow((self.n - self.k) as u32) as usize
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn bit(&self, i: usize, j: usize) -> bool {
        get_bit(self.row(i), j)
    }

    fn rows_packed(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.n_rows).map(|i| self.row(i).to_vec())
    }

    /// Columns of `H` as packed bitsets over the rows, i.e. the rows of
    /// `H^T`.
    pub fn transposed_rows(&self) -> Vec<Vec<u64>> {
        let words = words_for(self.n_rows);
        let mut cols = vec![vec![0u64; words]; self.n_cols];
        for i in 0..self.n_rows {
            let row = self.row(i);
            for (wi, &w) in row.iter().enumerate() {
                let mut bitsleft = w;
                while bitsleft != 0 {
                    let j = wi * 64 + bitsleft.trailing_zeros() as usize;
                    bitsleft &= bitsleft - 1;
                    set_bit(&mut cols[j], i);
                }
            }
        }
        cols
    }

    /// Serialize `H` in alist form.
    pub fn alist(&self) -> String {
        emit_alist(self.n_rows, self.n_cols, &(0..self.n_rows).map(|i| self.row(i).to_vec()).collect::<Vec<_>>())
    }

    /// Serialize `H^T` in alist form.
    pub fn alist_transposed(&self) -> String {
        emit_alist(self.n_cols, self.n_rows, &self.transposed_rows())
    }
}

/// Build and fully verify the incidence matrix of a lifted MRD code.
///
/// Rejects codes that are not of lifted-MRD provenance and the degenerate
/// case `δ = k`, where every column would have weight one, the null space
/// of `H` has minimum distance 2, and the transpose code is trivial.
pub fn incidence_matrix(f: &Field, code: &ConstantDimensionCode) -> Result<IncidenceMatrix> {
    if code.family != CodeFamily::LiftedMrd {
        return Err(Error::InvalidParameter(
            "incidence analysis needs a lifted MRD code; other families lack the row regularity".into(),
        ));
    }
    let (q, n, k) = (code.q, code.n, code.k);
    let delta = code.claimed_d / 2;
    if delta >= k {
        return Err(Error::InvalidParameter(format!(
            "delta = k = {k} gives column weight one and a trivial transpose code; nothing to analyze"
        )));
    }
    let pm = PointMap::new(f, n, k)?;
    let n_rows = code.codewords.len();
    let n_cols = pm.point_count();
    let words = words_for(n_cols);
    let mut bits = vec![0u64; n_rows * words];
    for (i, cw) in code.codewords.iter().enumerate() {
        let row = &mut bits[i * words..(i + 1) * words];
        for p in cw.points(f) {
            let id = pm.id(&p)? as usize;
            if get_bit(row, id) {
                return Err(Error::InvalidParameter(format!(
                    "codeword {i} repeats point {id}; the code is not simple"
                )));
            }
            set_bit(row, id);
        }
    }
    let m = IncidenceMatrix {
        q,
        n,
        k,
        delta,
        n_rows,
        n_cols,
        words,
        bits,
    };
    verify_incidence_invariants(&m)?;
    Ok(m)
}

/// Check row regularity, column regularity, and the permutation-block
/// decomposition by parallel class and point group.
fn verify_incidence_invariants(m: &IncidenceMatrix) -> Result<()> {
    let kp = m.row_weight();
    for i in 0..m.n_rows {
        let w = row_weight(m.row(i));
        if w != kp {
            return Err(Error::InvalidParameter(format!(
                "row {i} has weight {w}, expected {kp}"
            )));
        }
    }
    let r = m.col_weight();
    let mut col_counts = vec![0u64; m.n_cols];
    for i in 0..m.n_rows {
        let row = m.row(i);
        for j in 0..m.n_cols {
            if get_bit(row, j) {
                col_counts[j] += 1;
            }
        }
    }
    if let Some(j) = col_counts.iter().position(|&c| c != r) {
        return Err(Error::InvalidParameter(format!(
            "column {j} has weight {}, expected {r}",
            col_counts[j]
        )));
    }
    let b = m.block_size();
    if m.n_rows % b != 0 || m.n_cols % b != 0 {
        return Err(Error::InvalidParameter(
            "matrix dimensions do not tile into class-by-group blocks".into(),
        ));
    }
    for class in 0..m.n_rows / b {
        for group in 0..m.n_cols / b {
            let mut col_seen = vec![false; b];
            for i in class * b..(class + 1) * b {
                let mut in_group = 0usize;
                for j in group * b..(group + 1) * b {
                    if m.bit(i, j) {
                        in_group += 1;
                        if col_seen[j - group * b] {
                            return Err(Error::InvalidParameter(format!(
                                "class {class} hits column {j} twice; block is not a permutation"
                            )));
                        }
                        col_seen[j - group * b] = true;
                    }
                }
                if in_group != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "row {i} meets group {group} in {in_group} points, expected 1"
                    )));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// distance machinery

/// Exact minimum distance, or the interval bracketing it when the kernel is
/// too large to sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceEstimate {
    Exact(u64),
    Interval { lower: u64, upper: u64 },
}

impl DistanceEstimate {
    pub fn lower(&self) -> u64 {
        match self {
            DistanceEstimate::Exact(d) => *d,
            DistanceEstimate::Interval { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> u64 {
        match self {
            DistanceEstimate::Exact(d) => *d,
            DistanceEstimate::Interval { upper, .. } => *upper,
        }
    }
}

/// Everything known about one of the two derived codes.
#[derive(Debug, Clone)]
pub struct LinearCodeSummary {
    pub length: usize,
    pub dimension: usize,
    pub distance: DistanceEstimate,
    pub even_weight: bool,
    /// Regularity bound `n(2γ − μ2)/(γρ − μ2)`; may be negative.
    pub tanner_t1: BigRational,
    /// Regularity bound `2n(2γ + ρ − 2 − μ2)/(ρ(γρ − μ2))`.
    pub tanner_t2: BigRational,
    /// `k'/((q^{k−δ}−1)/(q−1)) + 1` from bounded pairwise intersections;
    /// applies to the transpose code only.
    pub intersection_floor: Option<BigRational>,
    /// Best integer lower bound implied by the rational floors (rounded up
    /// to even when all weights are even).
    pub distance_floor: u64,
    /// `2 q^{n−k}`: two parallel codewords through a common point pattern.
    pub distance_cap: u64,
}

/// The two Tanner bounds for an `n_cols`-column parity-check matrix with
/// column weight `gamma`, row weight `rho`, and second-largest Gram
/// eigenvalue `mu2`.
pub fn tanner_bounds(n_cols: u64, gamma: u64, rho: u64, mu2: u64) -> (BigRational, BigRational) {
    let n = BigInt::from(n_cols);
    let g = BigInt::from(gamma);
    let r = BigInt::from(rho);
    let m = BigInt::from(mu2);
    let denom = &g * &r - &m;
    let t1 = Ratio::new(&n * (2 * &g - &m), denom.clone());
    let t2 = Ratio::new(2 * &n * (2 * &g + &r - 2 - &m), &r * &denom);
    (t1, t2)
}

/// Distance floor for the transpose code from bounded pairwise block
/// intersections: blocks share at most `(q^{k−δ} − 1)/(q − 1)` points, so
/// `d ≥ k'/that + 1 = (q^k − 1)/(q^{k−δ} − 1) + 1`.
pub fn intersection_bound(q: u64, k: usize, delta: usize) -> BigRational {
    let num = BigInt::from(q.pow(k as u32) - 1);
    let den = BigInt::from(q.pow((k - delta) as u32) - 1);
    Ratio::new(num, den) + BigInt::from(1)
}

fn ceil_to_u64(x: &BigRational) -> u64 {
    if x.is_negative() || x.is_zero() {
        return 0;
    }
    x.ceil().to_integer().to_u64().unwrap_or(u64::MAX)
}

/// Gray-code sweep over all 2^dim − 1 nonzero kernel combinations,
/// partitioned into index ranges for parallel reduction. Returns the
/// minimum weight and whether every weight was even.
fn sweep_min_weight(basis: &[Vec<u64>], words: usize) -> (u64, bool) {
    let dim = basis.len();
    assert!(dim >= 1 && dim <= EXACT_DISTANCE_MAX_DIM);
    let total = 1u64 << dim;
    let chunks = if dim <= 16 { 1 } else { 512 };
    let step = total.div_ceil(chunks);
    let starts: Vec<u64> = (0..chunks).map(|c| (c * step).max(1)).collect();
    let combine = |s: u64| -> Vec<u64> {
        let g = s ^ (s >> 1);
        let mut v = vec![0u64; words];
        for b in 0..dim {
            if g >> b & 1 == 1 {
                xor_into(&mut v, &basis[b]);
            }
        }
        v
    };
    starts
        .par_iter()
        .enumerate()
        .map(|(ci, &s)| {
            let e = ((ci as u64 + 1) * step).min(total);
            if s >= e {
                return (u64::MAX, true);
            }
            let mut state = combine(s);
            let mut min = row_weight(&state);
            let mut even = min % 2 == 0;
            for i in s + 1..e {
                let flip = i.trailing_zeros() as usize;
                xor_into(&mut state, &basis[flip]);
                let w = row_weight(&state);
                even &= w % 2 == 0;
                if w < min {
                    min = w;
                }
            }
            (min, even)
        })
        .reduce(|| (u64::MAX, true), |a, b| (a.0.min(b.0), a.1 && b.1))
}

/// Cheapest kernel words found by seeded sampling: every basis vector, plus
/// random pairs and triples. A valid upper bound on the distance, never
/// below the true minimum.
fn sampled_min_weight(basis: &[Vec<u64>], words: usize) -> u64 {
    let mut min = u64::MAX;
    for b in basis {
        min = min.min(row_weight(b));
    }
    let dim = basis.len() as u64;
    if dim >= 2 {
        let mut rng = SplitMix64::new(0);
        let mut buf = vec![0u64; words];
        for s in 0..UPPER_BOUND_SAMPLES {
            buf.iter_mut().for_each(|w| *w = 0);
            let picks = 2 + (s % 2) as u64;
            for _ in 0..picks.min(dim) {
                xor_into(&mut buf, &basis[rng.below(dim) as usize]);
            }
            let w = row_weight(&buf);
            if w > 0 && w < min {
                min = w;
            }
        }
    }
    min
}

fn summarize(
    rows: Vec<Vec<u64>>,
    n_cols: usize,
    t1: BigRational,
    t2: BigRational,
    intersection: Option<BigRational>,
    cap: u64,
) -> LinearCodeSummary {
    let words = words_for(n_cols);
    let basis = gf2_nullspace(rows.into_iter(), n_cols);
    let dimension = basis.len();
    // Weight parity is linear over GF(2), so the basis decides it for the
    // whole kernel.
    let even_weight = basis.iter().all(|b| row_weight(b) % 2 == 0);
    let mut floors = vec![t1.clone(), t2.clone()];
    if let Some(x) = &intersection {
        floors.push(x.clone());
    }
    let mut floor = floors.iter().map(ceil_to_u64).max().unwrap().max(1);
    if even_weight && floor % 2 == 1 {
        floor += 1;
    }
    let distance = if dimension == 0 {
        // Only the zero word; by convention no distance, reported as the cap
        // interval degenerate at the top.
        DistanceEstimate::Interval { lower: floor, upper: cap }
    } else if dimension <= EXACT_DISTANCE_MAX_DIM {
        let (d, sweep_even) = sweep_min_weight(&basis, words);
        debug_assert_eq!(sweep_even, even_weight);
        DistanceEstimate::Exact(d)
    } else {
        let upper = cap.min(sampled_min_weight(&basis, words));
        DistanceEstimate::Interval { lower: floor, upper }
    };
    LinearCodeSummary {
        length: n_cols,
        dimension,
        distance,
        even_weight,
        tanner_t1: t1,
        tanner_t2: t2,
        intersection_floor: intersection,
        distance_floor: floor,
        distance_cap: cap,
    }
}

/// Analyze `C = null(H)`: the code whose parity-check matrix is the
/// incidence matrix itself.
pub fn analyze_c(m: &IncidenceMatrix) -> LinearCodeSummary {
    let (t1, t2) = tanner_bounds(m.n_cols as u64, m.col_weight(), m.row_weight(), m.col_weight());
    let cap = 2 * m.block_size() as u64;
    summarize(m.rows_packed().collect(), m.n_cols, t1, t2, None, cap)
}

/// Analyze `C^T = null(H^T)`: the code whose parity-check matrix is the
/// transposed incidence matrix.
pub fn analyze_ct(m: &IncidenceMatrix) -> LinearCodeSummary {
    let (t1, t2) = tanner_bounds(m.n_rows as u64, m.row_weight(), m.col_weight(), m.col_weight());
    let kv = intersection_bound(m.q, m.k, m.delta);
    let cap = 2 * m.block_size() as u64;
    summarize(m.transposed_rows(), m.n_rows, t1, t2, Some(kv), cap)
}

// ---------------------------------------------------------------------------
// spectrum certificate

/// Exact certificate that the Gram matrix `M = H^T H` has eigenvalues
/// `{r k', r, 0}` with multiplicities `{1, k'(q^{n−k} − 1), k' − 1}`.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub eigenvalues: [u128; 3],
    pub multiplicities: [u128; 3],
    /// `M(M − rI)(M − r k' I) = 0` verified entrywise.
    pub annihilator_ok: bool,
    /// trace(M) matches the eigenvalue/multiplicity table.
    pub trace_ok: bool,
    /// trace(M²) matches; together with trace(M) and the column count this
    /// pins the multiplicities uniquely (Vandermonde on distinct values).
    pub square_trace_ok: bool,
    pub pass: bool,
}

/// Build `H^T H` exactly and verify its annihilating polynomial and the two
/// trace identities.
pub fn spectrum_certificate(m: &IncidenceMatrix) -> Result<SpectrumReport> {
    let nc = m.n_cols;
    if nc > GRAM_MAX_COLS {
        return Err(Error::CapExceeded {
            what: "gram matrix columns",
            needed: nc as u128,
            cap: GRAM_MAX_COLS as u128,
        });
    }
    let cols = m.transposed_rows();
    let mut gram = vec![0i128; nc * nc];
    for i in 0..nc {
        for j in i..nc {
            let dot: u64 = cols[i]
                .iter()
                .zip(&cols[j])
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum();
            gram[i * nc + j] = dot as i128;
            gram[j * nc + i] = dot as i128;
        }
    }
    let r = m.col_weight() as i128;
    let kp = m.row_weight() as i128;
    let big = r * kp;

    // P = (M - rI)(M - r k' I), then check M P = 0.
    let mut shifted_r = gram.clone();
    let mut shifted_big = gram.clone();
    for i in 0..nc {
        shifted_r[i * nc + i] -= r;
        shifted_big[i * nc + i] -= big;
    }
    let p = mat_mul(&shifted_r, &shifted_big, nc);
    let mp = mat_mul(&gram, &p, nc);
    let annihilator_ok = mp.iter().all(|&x| x == 0);

    let classes = m.block_size() as i128 - 1;
    let mult_mid = kp * classes;
    let trace: i128 = (0..nc).map(|i| gram[i * nc + i]).sum();
    let trace_sq: i128 = gram.iter().map(|&x| x * x).sum();
    let trace_ok = trace == big + r * mult_mid;
    let square_trace_ok = trace_sq == big * big + r * r * mult_mid;

    let pass = annihilator_ok && trace_ok && square_trace_ok;
    Ok(SpectrumReport {
        eigenvalues: [big as u128, r as u128, 0],
        multiplicities: [1, mult_mid as u128, (kp - 1) as u128],
        annihilator_ok,
        trace_ok,
        square_trace_ok,
        pass,
    })
}

fn mat_mul(a: &[i128], b: &[i128], n: usize) -> Vec<i128> {
    let mut out = vec![0i128; n * n];
    out.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        for l in 0..n {
            let av = a[i * n + l];
            if av == 0 {
                continue;
            }
            for (j, o) in row.iter_mut().enumerate() {
                *o += av * b[l * n + j];
            }
        }
    });
    out
}

// ---------------------------------------------------------------------------
// dimension bounds

/// Computed dimensions of both codes against the regularity-derived bounds.
///
/// Lower bounds hold unconditionally (the Gram spectrum caps the real rank
/// of `H`). For odd `q` the nonzero eigenvalues are odd, which forces rank
/// over GF(2) high and gives matching upper bounds, with equality when
/// `k'` is odd. For even `q` the permutation blocks still force
/// `rank ≥ q^{n−k}`.
#[derive(Debug, Clone)]
pub struct DimensionReport {
    pub dim_c: usize,
    pub dim_ct: usize,
    pub lower_c: u64,
    pub upper_c: u64,
    pub lower_ct: u64,
    pub upper_ct: u64,
    pub pass: bool,
}

/// Rank `H` once over GF(2) and check every applicable dimension bound.
pub fn dimension_bound_checks(m: &IncidenceMatrix) -> DimensionReport {
    let (_, pivots) = gf2_rref(m.rows_packed());
    let rank = pivots.len();
    let dim_c = m.n_cols - rank;
    let dim_ct = m.n_rows - rank;

    let kp = m.row_weight();
    let block = m.block_size() as u64;
    let len_ct = m.n_rows as u64;
    let lower_c = kp - 1;
    let lower_ct = (len_ct + kp).saturating_sub(kp * block + 1);
    let (upper_c, upper_ct) = if m.q % 2 == 1 {
        if kp % 2 == 1 {
            (kp - 1, (len_ct + kp).saturating_sub(kp * block + 1))
        } else {
            (kp, (len_ct + kp).saturating_sub(kp * block))
        }
    } else {
        (block * (kp - 1), len_ct - block)
    };
    let pass = lower_c <= dim_c as u64
        && dim_c as u64 <= upper_c
        && lower_ct <= dim_ct as u64
        && dim_ct as u64 <= upper_ct;
    DimensionReport {
        dim_c,
        dim_ct,
        lower_c,
        upper_c,
        lower_ct,
        upper_ct,
        pass,
    }
}

// ---------------------------------------------------------------------------
// alist serialization

/// Serialize a binary matrix in alist form: `N M` (columns, rows), the
/// maximum column and row weights, per-column weights, per-row weights,
/// then 1-indexed row lists per column and column lists per row.
pub fn emit_alist(n_rows: usize, n_cols: usize, rows: &[Vec<u64>]) -> String {
    let mut col_lists: Vec<Vec<usize>> = vec![Vec::new(); n_cols];
    let mut row_lists: Vec<Vec<usize>> = vec![Vec::new(); n_rows];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n_cols {
            if get_bit(row, j) {
                col_lists[j].push(i + 1);
                row_lists[i].push(j + 1);
            }
        }
    }
    let cmax = col_lists.iter().map(Vec::len).max().unwrap_or(0);
    let rmax = row_lists.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", n_cols, n_rows));
    out.push_str(&format!("{} {}\n", cmax, rmax));
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    out.push_str(&join(&col_lists.iter().map(Vec::len).collect::<Vec<_>>()));
    out.push('\n');
    out.push_str(&join(&row_lists.iter().map(Vec::len).collect::<Vec<_>>()));
    out.push('\n');
    for list in &col_lists {
        out.push_str(&join(list));
        out.push('\n');
    }
    for list in &row_lists {
        out.push_str(&join(list));
        out.push('\n');
    }
    out
}

/// A matrix read back from alist text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedAlist {
    pub n_rows: usize,
    pub n_cols: usize,
    pub rows: Vec<Vec<u64>>,
}

/// Parse alist text; verifies weight headers, list lengths, index ranges,
/// and cross-consistency of the column and row lists.
pub fn parse_alist(text: &str) -> Result<ParsedAlist> {
    let mut nums = text
        .split_ascii_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad alist token {t:?}"))));
    let mut next = |what: &str| -> Result<usize> {
        nums.next()
            .ok_or_else(|| Error::Parse(format!("alist truncated before {what}")))?
    };
    let n_cols = next("column count")?;
    let n_rows = next("row count")?;
    let cmax = next("max column weight")?;
    let rmax = next("max row weight")?;
    let col_w: Vec<usize> = (0..n_cols).map(|_| next("column weight")).collect::<Result<_>>()?;
    let row_w: Vec<usize> = (0..n_rows).map(|_| next("row weight")).collect::<Result<_>>()?;
    if col_w.iter().any(|&w| w > cmax) || row_w.iter().any(|&w| w > rmax) {
        return Err(Error::Parse("alist weight exceeds declared maximum".into()));
    }
    let words = words_for(n_cols);
    let mut rows = vec![vec![0u64; words]; n_rows];
    for (j, &w) in col_w.iter().enumerate() {
        for _ in 0..w {
            let i = next("column list entry")?;
            if i == 0 || i > n_rows {
                return Err(Error::Parse(format!("alist row index {i} out of range")));
            }
            set_bit(&mut rows[i - 1], j);
        }
    }
    let mut check = vec![vec![0u64; words]; n_rows];
    for (i, &w) in row_w.iter().enumerate() {
        for _ in 0..w {
            let j = next("row list entry")?;
            if j == 0 || j > n_cols {
                return Err(Error::Parse(format!("alist column index {j} out of range")));
            }
            set_bit(&mut check[i], j - 1);
        }
    }
    if rows != check {
        return Err(Error::Parse("alist column and row lists disagree".into()));
    }
    Ok(ParsedAlist { n_rows, n_cols, rows })
}
