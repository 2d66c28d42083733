//! Matrices over GF(q), reduced row echelon form, canonical subspaces and the
//! subspace distance.
//!
//! Two storage layouts sit behind one interface: GF(2) matrices are
//! bit-packed (column j of row i is bit j mod 64 of word i*wpr + j/64), all
//! other fields store one `u16` element index per entry. Row operations on
//! the packed layout are word-parallel XORs, which is what makes exhaustive
//! pairwise distance sweeps over millions of binary subspaces affordable.
//!
//! A [`Subspace`] is always held in canonical form: the unique reduced row
//! echelon basis with zero rows dropped. Equality and hashing are therefore
//! plain structural comparisons.

use crate::field::Field;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum MatData {
    /// GF(2), bit-packed rows.
    B(Vec<u64>),
    /// Any other field, element indices row-major.
    G(Vec<u16>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixGF {
    q: u64,
    rows: usize,
    cols: usize,
    data: MatData,
}

impl MatrixGF {
    pub fn zero(q: u64, rows: usize, cols: usize) -> MatrixGF {
        let data = if q == 2 {
            MatData::B(vec![0u64; rows * Self::wpr_for(cols)])
        } else {
            assert!(q <= 65536, "field too large for u16 entries");
            MatData::G(vec![0u16; rows * cols])
        };
        MatrixGF {
            q,
            rows,
            cols,
            data,
        }
    }

    pub fn from_entries(q: u64, rows: usize, cols: usize, entries: &[u64]) -> MatrixGF {
        assert_eq!(entries.len(), rows * cols);
        let mut m = MatrixGF::zero(q, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, entries[i * cols + j]);
            }
        }
        m
    }

    fn wpr_for(cols: usize) -> usize {
        cols.div_ceil(64)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Words per row in the packed layout (0 for the generic layout).
    pub fn words_per_row(&self) -> usize {
        match self.data {
            MatData::B(_) => Self::wpr_for(self.cols),
            MatData::G(_) => 0,
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.data {
            MatData::B(w) => {
                let wpr = Self::wpr_for(self.cols);
                (w[i * wpr + j / 64] >> (j % 64)) & 1
            }
            MatData::G(v) => v[i * self.cols + j] as u64,
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, val: u64) {
        debug_assert!(i < self.rows && j < self.cols && val < self.q);
        match &mut self.data {
            MatData::B(w) => {
                let wpr = Self::wpr_for(self.cols);
                let word = &mut w[i * wpr + j / 64];
                let bit = 1u64 << (j % 64);
                if val == 1 {
                    *word |= bit;
                } else {
                    *word &= !bit;
                }
            }
            MatData::G(v) => v[i * self.cols + j] = val as u16,
        }
    }

    /// Packed words of row i. Panics on the generic layout.
    pub fn row_words(&self, i: usize) -> &[u64] {
        match &self.data {
            MatData::B(w) => {
                let wpr = Self::wpr_for(self.cols);
                &w[i * wpr..(i + 1) * wpr]
            }
            MatData::G(_) => panic!("row_words on a non-binary matrix"),
        }
    }

    /// Element indices of row i. Panics on the packed layout.
    pub fn row_elems(&self, i: usize) -> &[u16] {
        match &self.data {
            MatData::G(v) => &v[i * self.cols..(i + 1) * self.cols],
            MatData::B(_) => panic!("row_elems on a binary matrix"),
        }
    }

    pub fn row(&self, i: usize) -> Vec<u64> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.data {
            MatData::B(w) => {
                let wpr = Self::wpr_for(self.cols);
                for t in 0..wpr {
                    w.swap(a * wpr + t, b * wpr + t);
                }
            }
            MatData::G(v) => {
                for t in 0..self.cols {
                    v.swap(a * self.cols + t, b * self.cols + t);
                }
            }
        }
    }

    /// Reduce to reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        debug_assert_eq!(f.q(), self.q);
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut sel = None;
            for i in r..self.rows {
                if self.get(i, c) != 0 {
                    sel = Some(i);
                    break;
                }
            }
            let Some(i) = sel else { continue };
            self.swap_rows(i, r);
            match &mut self.data {
                MatData::B(w) => {
                    let wpr = Self::wpr_for(self.cols);
                    let pivot_row: Vec<u64> = w[r * wpr..(r + 1) * wpr].to_vec();
                    for i in 0..self.rows {
                        if i != r && (w[i * wpr + c / 64] >> (c % 64)) & 1 == 1 {
                            for t in 0..wpr {
                                w[i * wpr + t] ^= pivot_row[t];
                            }
                        }
                    }
                }
                MatData::G(_) => {
                    let inv = f.inv(self.get(r, c));
                    if inv != 1 {
                        for j in 0..self.cols {
                            let v = f.mul(self.get(r, j), inv);
                            self.set(r, j, v);
                        }
                    }
                    for i in 0..self.rows {
                        if i == r {
                            continue;
                        }
                        let factor = self.get(i, c);
                        if factor != 0 {
                            for j in 0..self.cols {
                                let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                                self.set(i, j, v);
                            }
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    pub fn stack(a: &MatrixGF, b: &MatrixGF) -> MatrixGF {
        assert_eq!(a.q, b.q);
        assert_eq!(a.cols, b.cols);
        let mut m = MatrixGF::zero(a.q, a.rows + b.rows, a.cols);
        match (&mut m.data, &a.data, &b.data) {
            (MatData::B(w), MatData::B(wa), MatData::B(wb)) => {
                w[..wa.len()].copy_from_slice(wa);
                w[wa.len()..].copy_from_slice(wb);
            }
            (MatData::G(v), MatData::G(va), MatData::G(vb)) => {
                v[..va.len()].copy_from_slice(va);
                v[va.len()..].copy_from_slice(vb);
            }
            _ => unreachable!(),
        }
        m
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut m = MatrixGF::zero(self.q, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    m.set(j, i, v);
                }
            }
        }
        m
    }

    pub fn matmul(a: &MatrixGF, b: &MatrixGF, f: &Field) -> MatrixGF {
        assert_eq!(a.cols, b.rows);
        let mut m = MatrixGF::zero(a.q, a.rows, b.cols);
        for i in 0..a.rows {
            for t in 0..a.cols {
                let x = a.get(i, t);
                if x == 0 {
                    continue;
                }
                for j in 0..b.cols {
                    let y = b.get(t, j);
                    if y != 0 {
                        let v = f.add(m.get(i, j), f.mul(x, y));
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            MatData::B(w) => w.iter().all(|&x| x == 0),
            MatData::G(v) => v.iter().all(|&x| x == 0),
        }
    }

    fn take_rows(&self, keep: usize) -> MatrixGF {
        let mut m = MatrixGF::zero(self.q, keep, self.cols);
        for i in 0..keep {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    m.set(i, j, v);
                }
            }
        }
        m
    }
}

/// Basis of the right nullspace of a GF(2) matrix, one packed row per basis
/// vector (length = cols of `mat`).
pub fn nullspace_gf2(mat: &MatrixGF, f: &Field) -> Vec<Vec<u64>> {
    assert_eq!(mat.q(), 2);
    let mut m = mat.clone();
    let pivots = m.rref(f);
    let n = mat.cols();
    let wpr = MatrixGF::wpr_for(n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(n - pivots.len());
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![0u64; wpr];
        v[free / 64] |= 1 << (free % 64);
        for (r, &p) in pivots.iter().enumerate() {
            if m.get(r, free) == 1 {
                v[p / 64] |= 1 << (p % 64);
            }
        }
        basis.push(v);
    }
    basis
}

/// A subspace of GF(q)^n in canonical (reduced row echelon) form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    gen: MatrixGF,
}

impl Subspace {
    /// Canonicalizes an arbitrary spanning set given as a matrix.
    pub fn from_matrix(f: &Field, mat: MatrixGF) -> Subspace {
        let mut m = mat;
        let rank = m.rref(f).len();
        let n = m.cols();
        Subspace {
            n,
            gen: m.take_rows(rank),
        }
    }

    pub fn from_rows(f: &Field, n: usize, rows: &[Vec<u64>]) -> Subspace {
        let mut flat = Vec::with_capacity(rows.len() * n);
        for r in rows {
            assert_eq!(r.len(), n);
            flat.extend_from_slice(r);
        }
        Subspace::from_matrix(f, MatrixGF::from_entries(f.q(), rows.len(), n, &flat))
    }

    /// Wraps a matrix that is already in reduced row echelon form with no
    /// zero rows. Debug builds verify the invariant.
    pub fn from_rref_unchecked(gen: MatrixGF) -> Subspace {
        debug_assert!(is_rref(&gen), "matrix is not in canonical form");
        Subspace {
            n: gen.cols(),
            gen,
        }
    }

    pub fn q(&self) -> u64 {
        self.gen.q()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    pub fn gen(&self) -> &MatrixGF {
        &self.gen
    }

    /// Pivot columns of the canonical basis.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| (0..self.n).find(|&j| self.gen.get(i, j) != 0).unwrap())
            .collect()
    }

    /// 0/1 indicator of the pivot columns, leftmost coordinate first.
    pub fn identifying_vector(&self) -> Vec<u8> {
        let mut iv = vec![0u8; self.n];
        for p in self.pivots() {
            iv[p] = 1;
        }
        iv
    }

    pub fn contains(&self, f: &Field, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.n);
        let mut v = v.to_vec();
        for (i, &p) in self.pivots().iter().enumerate() {
            let c = v[p];
            if c != 0 {
                for j in 0..self.n {
                    v[j] = f.sub(v[j], f.mul(c, self.gen.get(i, j)));
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// The (q^k - 1)/(q - 1) one-dimensional subspaces covered, as normalized
    /// vectors (first nonzero coordinate 1), in ascending order of the
    /// normalized coefficient vector.
    pub fn points(&self, f: &Field) -> Vec<Vec<u64>> {
        let q = f.q();
        let k = self.dim();
        let mut out = Vec::new();
        let mut coeff = vec![0u64; k];
        // normalized coefficient vectors: first nonzero entry equals 1
        loop {
            if let Some(first) = coeff.iter().position(|&c| c != 0) {
                if coeff[first] == 1 {
                    let mut v = vec![0u64; self.n];
                    for (i, &c) in coeff.iter().enumerate() {
                        if c != 0 {
                            for j in 0..self.n {
                                v[j] = f.add(v[j], f.mul(c, self.gen.get(i, j)));
                            }
                        }
                    }
                    out.push(v);
                }
            }
            // odometer, last coordinate fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                coeff[i] += 1;
                if coeff[i] < q {
                    break;
                }
                coeff[i] = 0;
            }
        }
    }
}

fn is_rref(m: &MatrixGF) -> bool {
    let mut last_pivot: Option<usize> = None;
    for i in 0..m.rows() {
        let Some(p) = (0..m.cols()).find(|&j| m.get(i, j) != 0) else {
            return false; // zero row
        };
        if let Some(lp) = last_pivot {
            if p <= lp {
                return false;
            }
        }
        if m.get(i, p) != 1 {
            return false;
        }
        for r in 0..m.rows() {
            if r != i && m.get(r, p) != 0 {
                return false;
            }
        }
        last_pivot = Some(p);
    }
    true
}

/// Subspace (injection) distance: dim X + dim Y - 2 dim(X meet Y), computed
/// as 2 rank([X; Y]) - dim X - dim Y.
pub fn subspace_distance(f: &Field, x: &Subspace, y: &Subspace) -> usize {
    assert_eq!(x.ambient(), y.ambient());
    let rank = MatrixGF::stack(x.gen(), y.gen()).rank(f);
    2 * rank - x.dim() - y.dim()
}

/// Rank of the row span of two packed GF(2) generator sets over an ambient
/// of at most 64 columns. Allocation-free; `x` and `y` hold one word per row.
/// Capacity is 16 combined rows, plenty for the dimensions swept here.
#[inline]
pub fn rank_union_gf2(x: &[u64], y: &[u64]) -> u32 {
    let mut lead = [0u32; 16];
    let mut vecs = [0u64; 16];
    let mut cnt = 0usize;
    debug_assert!(x.len() + y.len() <= 16);
    for &row in x.iter().chain(y.iter()) {
        let mut v = row;
        'reduce: while v != 0 {
            let l = v.trailing_zeros();
            for t in 0..cnt {
                if lead[t] == l {
                    v ^= vecs[t];
                    continue 'reduce;
                }
            }
            lead[cnt] = l;
            vecs[cnt] = v;
            cnt += 1;
            break;
        }
    }
    cnt as u32
}

/// Rank of the union of two generic generator sets (k rows each, n columns,
/// element indices). `scratch` is reused across calls to avoid allocation.
pub fn rank_union_gen(
    f: &Field,
    x: &[u16],
    y: &[u16],
    n: usize,
    scratch: &mut Vec<u16>,
) -> u32 {
    let rows = (x.len() + y.len()) / n;
    scratch.clear();
    scratch.extend_from_slice(x);
    scratch.extend_from_slice(y);
    let mut r = 0usize;
    for c in 0..n {
        if r == rows {
            break;
        }
        let mut sel = None;
        for i in r..rows {
            if scratch[i * n + c] != 0 {
                sel = Some(i);
                break;
            }
        }
        let Some(i) = sel else { continue };
        if i != r {
            for t in c..n {
                scratch.swap(i * n + t, r * n + t);
            }
        }
        let inv = f.inv(scratch[r * n + c] as u64);
        if inv != 1 {
            for t in c..n {
                scratch[r * n + t] = f.mul(scratch[r * n + t] as u64, inv) as u16;
            }
        }
        for i in (r + 1)..rows {
            let factor = scratch[i * n + c] as u64;
            if factor != 0 {
                for t in c..n {
                    let v = f.sub(scratch[i * n + t] as u64, f.mul(factor, scratch[r * n + t] as u64));
                    scratch[i * n + t] = v as u16;
                }
            }
        }
        r += 1;
    }
    r as u32
}

/// Guard used by enumeration and sweep entry points.
pub fn check_cap(what: &'static str, needed: u128, cap: u128) -> Result<()> {
    if needed > cap {
        Err(Error::CapExceeded { what, needed, cap })
    } else {
        Ok(())
    }
}
