//! Ferrers diagrams of identifying vectors and rank-metric codes supported
//! on them.
//!
//! The echelon form of a subspace confines the free entries to a right-
//! aligned staircase: row i may be nonzero only in the non-pivot columns to
//! the right of pivot i. Reading off the row lengths gives the Ferrers
//! diagram of the identifying vector. A code whose codewords are matrices
//! supported on a fixed diagram, with pairwise rank distance at least delta,
//! lifts to a set of subspaces sharing one identifying vector, and the
//! subspace distance between such lifts is twice the rank distance of the
//! underlying matrices.
//!
//! For three-row diagrams and rank distance two, the dimension of such a
//! code (as a GF(q)-linear space) is at most the number of dots below the
//! first row, and the bound is attained for every diagram arising here: fix
//! the second and third rows freely inside their allowed spans and solve a
//! 2x2 Moore system for the linearized polynomial f(x) = a x + b x^q whose
//! evaluations reproduce them; the first row is then determined. The
//! resulting code is a subcode of a Gabidulin code, so nonzero codewords
//! have rank at least two.
//!
//! Some diagrams additionally carry pending entries: a prefix of the first
//! row that is frozen to constants instead of participating in the linear
//! code. Removing a first-row prefix never changes the dots below the first
//! row, so the dimension bound is unaffected as long as the shortened first
//! row still covers the second (`pending <= rows[0] - rows[1]`). The
//! constructions use pending constants to separate codes that share
//! Hamming-close identifying vectors.

use crate::field::{ExtField, Field};
use crate::grassmann::{row_lengths, subspace_from_tableaux};
use crate::linalg::{MatrixGF, Subspace};
use crate::{Error, Result};

/// Ferrers diagram of an identifying vector: right-aligned rows, top row
/// first, lengths non-increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerrersDiagram {
    n: usize,
    k: usize,
    pivots: Vec<usize>,
    rows: Vec<usize>,
}

impl FerrersDiagram {
    pub fn from_iv(iv: &[u8]) -> Result<FerrersDiagram> {
        if iv.iter().any(|&b| b > 1) {
            return Err(Error::InvalidParameter(
                "identifying vector must be 0/1".into(),
            ));
        }
        let pivots: Vec<usize> = (0..iv.len()).filter(|&j| iv[j] == 1).collect();
        if pivots.is_empty() {
            return Err(Error::InvalidParameter(
                "identifying vector has no pivots".into(),
            ));
        }
        let rows = row_lengths(iv);
        Ok(FerrersDiagram {
            n: iv.len(),
            k: pivots.len(),
            pivots,
            rows,
        })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Row lengths, top row first.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn dots(&self) -> usize {
        self.rows.iter().sum()
    }

    /// How many leading first-row dots may be frozen to constants without
    /// shortening the first row below the second.
    pub fn max_pending(&self) -> usize {
        if self.k < 2 {
            self.rows[0]
        } else {
            self.rows[0] - self.rows[1]
        }
    }

    /// Upper bound on the GF(q)-dimension of a diagram-supported rank-metric
    /// code with minimum rank distance `delta`: the dots below the first
    /// row. Certified only for three-row diagrams, delta = 2, ambient at
    /// least 8 and leftmost pivot among the first three columns; anything
    /// else is refused rather than guessed.
    pub fn dimension_bound(&self, delta: usize) -> Result<usize> {
        if self.k != 3 || delta != 2 {
            return Err(Error::InvalidParameter(format!(
                "dimension bound implemented for 3-row diagrams at rank distance 2 only, \
                 got k={}, delta={delta}",
                self.k
            )));
        }
        if self.n < 8 {
            return Err(Error::InvalidParameter(format!(
                "dimension bound not certified for ambient {} < 8",
                self.n
            )));
        }
        if self.pivots[0] > 2 {
            return Err(Error::InvalidParameter(
                "dimension bound needs the leftmost pivot among the first three columns".into(),
            ));
        }
        Ok(self.rows[1] + self.rows[2])
    }
}

/// GF(q)-linear rank-metric code supported on a three-row Ferrers diagram,
/// minimum rank distance 2, dimension = dots below the first row, with an
/// optional frozen constant prefix on the first row.
pub struct FdCode {
    diagram: FerrersDiagram,
    pending: Vec<u64>,
    q: u64,
    /// Linear width: rows[0] - pending.len().
    width: usize,
    dimension: usize,
}

impl FdCode {
    /// Builds the code. `pending` freezes the first `pending.len()` dots of
    /// the first row to the given constants.
    pub fn new(f: &Field, diagram: FerrersDiagram, pending: Vec<u64>) -> Result<FdCode> {
        if diagram.k() != 3 {
            return Err(Error::InvalidParameter(
                "diagram-supported codes are implemented for 3-row diagrams".into(),
            ));
        }
        if pending.len() > diagram.max_pending() {
            return Err(Error::InvalidParameter(format!(
                "{} pending entries exceed the removable prefix {}",
                pending.len(),
                diagram.max_pending()
            )));
        }
        if pending.iter().any(|&c| c >= f.q()) {
            return Err(Error::InvalidParameter(
                "pending constant out of field range".into(),
            ));
        }
        let width = diagram.rows()[0] - pending.len();
        let dimension = diagram.rows()[1] + diagram.rows()[2];
        if dimension > 0 && width < 3 && solve_by_search(f, &diagram, pending.len()).is_none() {
            return Err(Error::Construction(format!(
                "no rank-2 code of dimension {dimension} exists on this diagram"
            )));
        }
        Ok(FdCode {
            diagram,
            pending,
            q: f.q(),
            width,
            dimension,
        })
    }

    pub fn diagram(&self) -> &FerrersDiagram {
        &self.diagram
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        (self.q as usize).pow(self.dimension as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All codeword matrices (3 x rows[0]), pending constants included, in
    /// ascending order of the information vector (second row fast).
    pub fn codeword_matrices(&self, f: &Field) -> Result<Vec<MatrixGF>> {
        let g1 = self.diagram.rows()[0];
        let g2 = self.diagram.rows()[1];
        let g3 = self.diagram.rows()[2];
        let pc = self.pending.len();
        let w = self.width;

        let linear: Vec<[Vec<u64>; 3]> = if self.dimension == 0 {
            vec![[vec![0; w], Vec::new(), Vec::new()]]
        } else if w >= 3 {
            self.enumerate_by_moore()?
        } else {
            solve_by_search(f, &self.diagram, pc).ok_or_else(|| {
                Error::Construction("diagram admits no rank-2 code of full dimension".into())
            })?
        };

        let mut out = Vec::with_capacity(linear.len());
        for [r1, r2, r3] in &linear {
            let mut m = MatrixGF::zero(self.q, 3, g1);
            for (c, &v) in self.pending.iter().enumerate() {
                if v != 0 {
                    m.set(0, c, v);
                }
            }
            for (c, &v) in r1.iter().enumerate() {
                if v != 0 {
                    m.set(0, pc + c, v);
                }
            }
            // rows 2 and 3 are right-aligned within the full width
            for (c, &v) in r2.iter().enumerate() {
                if v != 0 {
                    m.set(1, g1 - g2 + c, v);
                }
            }
            for (c, &v) in r3.iter().enumerate() {
                if v != 0 {
                    m.set(2, g1 - g3 + c, v);
                }
            }
            out.push(m);
        }
        Ok(out)
    }

    /// Moore-system path: rows 2 and 3 range over their spans inside
    /// GF(q^w); f(x) = a x + b x^q is solved to evaluate them at x and x^2,
    /// and the first row is f(1) = a + b.
    fn enumerate_by_moore(&self) -> Result<Vec<[Vec<u64>; 3]>> {
        let w = self.width;
        let g2 = self.diagram.rows()[1];
        let g3 = self.diagram.rows()[2];
        let ext = ExtField::new(self.q, w as u32)?;
        let x = ext.basis_element(1);
        let x2 = ext.basis_element(2);
        let xq = ext.frobenius(x, 1);
        let x2q = ext.frobenius(x2, 1);
        let det = ext.sub(ext.mul(x, x2q), ext.mul(x2, xq));
        let det_inv = ext.inv(det);

        // span of the last g_i basis elements: coordinates 0..w-g_i are zero
        let mut out = Vec::with_capacity(self.len());
        let mut info = vec![0u64; g2 + g3];
        loop {
            let mut c2 = vec![0u64; w];
            c2[w - g2..].copy_from_slice(&info[..g2]);
            let mut c3 = vec![0u64; w];
            c3[w - g3..].copy_from_slice(&info[g2..]);
            let y2 = ext.from_coords(&c2);
            let y3 = ext.from_coords(&c3);
            let a = ext.mul(
                ext.sub(ext.mul(y2, x2q), ext.mul(y3, xq)),
                det_inv,
            );
            let b = ext.mul(ext.sub(ext.mul(x, y3), ext.mul(x2, y2)), det_inv);
            let r1 = ext.coords(ext.add(a, b));
            out.push([r1, c2[w - g2..].to_vec(), c3[w - g3..].to_vec()]);
            // odometer over the information vector, last entry fastest
            let mut i = g2 + g3;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                info[i] += 1;
                if info[i] < self.q {
                    break;
                }
                info[i] = 0;
            }
        }
    }
}

/// Deterministic fallback for degenerate widths: depth-first search over
/// all diagram-supported matrices in ascending index order, extending the
/// basis when every new nonzero combination keeps rank >= 2, backtracking
/// otherwise. Returns all codewords of a full-dimension code, or None.
fn solve_by_search(
    f: &Field,
    diagram: &FerrersDiagram,
    pc: usize,
) -> Option<Vec<[Vec<u64>; 3]>> {
    let q = f.q();
    let g1 = diagram.rows()[0];
    let g2 = diagram.rows()[1];
    let g3 = diagram.rows()[2];
    let w = g1 - pc;
    let target = g2 + g3;
    let free = w + g2 + g3;
    if free > 24 {
        return None; // out of scope for brute force
    }

    let rows_of = |digits: &[u64]| -> [Vec<u64>; 3] {
        [
            digits[..w].to_vec(),
            digits[w..w + g2].to_vec(),
            digits[w + g2..].to_vec(),
        ]
    };
    let rank_ok = |word: &[u64]| -> bool {
        // rank of the 3 x g1 matrix (pending prefix is zero in differences)
        let mut m = MatrixGF::zero(q, 3, g1.max(1));
        let [r1, r2, r3] = rows_of(word);
        for (c, &v) in r1.iter().enumerate() {
            m.set(0, pc + c, v);
        }
        for (c, &v) in r2.iter().enumerate() {
            m.set(1, g1 - g2 + c, v);
        }
        for (c, &v) in r3.iter().enumerate() {
            m.set(2, g1 - g3 + c, v);
        }
        m.rank(f) >= 2
    };
    // candidate by ascending index, most significant digit first
    let digits_of = |mut idx: u128| -> Vec<u64> {
        let mut d = vec![0u64; free];
        for slot in d.iter_mut().rev() {
            *slot = (idx % q as u128) as u64;
            idx /= q as u128;
        }
        d
    };

    fn extend(
        span: &[Vec<u64>],
        depth: usize,
        start: u128,
        total: u128,
        target: usize,
        q: u64,
        f: &Field,
        rank_ok: &dyn Fn(&[u64]) -> bool,
        digits_of: &dyn Fn(u128) -> Vec<u64>,
    ) -> Option<Vec<Vec<u64>>> {
        if depth == target {
            return Some(span.to_vec());
        }
        for idx in start..total {
            let cand = digits_of(idx);
            let ok = span.iter().all(|s| {
                (1..q).all(|c| {
                    let combo: Vec<u64> = s
                        .iter()
                        .zip(cand.iter())
                        .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                        .collect();
                    rank_ok(&combo)
                })
            });
            if !ok {
                continue;
            }
            let mut new_span = span.to_vec();
            for s in span {
                for c in 1..q {
                    new_span.push(
                        s.iter()
                            .zip(cand.iter())
                            .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                            .collect(),
                    );
                }
            }
            if let Some(found) = extend(
                &new_span,
                depth + 1,
                idx + 1,
                total,
                target,
                q,
                f,
                rank_ok,
                digits_of,
            ) {
                return Some(found);
            }
        }
        None
    }

    let total = (q as u128).checked_pow(free as u32)?;
    let zero = vec![vec![0u64; free]];
    let mut span = extend(&zero, 0, 1, total, target, q, f, &rank_ok, &digits_of)?;
    span.sort();
    Some(span.iter().map(|s| rows_of(s)).collect())
}

/// Lifts every codeword of a diagram-supported code onto its identifying
/// vector, producing canonical subspaces.
pub fn lift_fd(f: &Field, iv: &[u8], code: &FdCode) -> Result<Vec<Subspace>> {
    let diagram = FerrersDiagram::from_iv(iv)?;
    if diagram != *code.diagram() {
        return Err(Error::InvalidParameter(
            "identifying vector does not match the code's diagram".into(),
        ));
    }
    let rows = diagram.rows();
    let g1 = rows[0];
    let mats = code.codeword_matrices(f)?;
    let mut out = Vec::with_capacity(mats.len());
    for m in &mats {
        let mut values = Vec::with_capacity(diagram.dots());
        for (i, &len) in rows.iter().enumerate() {
            for c in (g1 - len)..g1 {
                values.push(m.get(i, c));
            }
        }
        out.push(subspace_from_tableaux(f, iv, &values));
    }
    Ok(out)
}
