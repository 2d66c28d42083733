//! Constant-dimension codes that extend a lifted MRD code with codewords
//! on further identifying vectors.
//!
//! All three constructions here produce (n, M, 4, k)_q codes containing the
//! lifted MRD code with identifying vector 1^k 0^{n-k}.
//!
//! For k = 3 the extra identifying vectors have the form x || y with x of
//! length 3 and weight 1 and y of length n-3 and weight 2. Two subspaces
//! whose identifying vectors are at Hamming distance >= 4 automatically have
//! subspace distance >= 4, so the only dangerous pairs share x and use
//! weight-2 suffixes y, y' with overlapping support. A one-factorization of
//! the complete graph on the suffix positions groups the y's into classes
//! with pairwise disjoint supports; codes built on ivs from one class are
//! safe, and classes sharing x are separated by frozen pending values in the
//! first row of the Ferrers tableaux (the first construction) or by placing
//! the classes in disjoint coordinate windows (the second construction, used
//! when there are more classes than pending values).
//!
//! The third construction targets k = 4, n = 8 and minimum distance 4. On
//! top of the lifted MRD code it adds, for every ordered pair (Z, Z') of
//! blocks from one spread of a 2-parallelism of GF(q)^4 and every c in
//! GF(q^2), the 4-dimensional subspace spanned by {0} x Z together with
//! {(x, sigma_c(x)) : x in Z'}, where sigma_c is multiplication by c under
//! fixed GF(q)-linear identifications of Z' and of GF(q)^4 / Z with GF(q^2).
//! Differences sigma_c - sigma_c' = sigma_{c - c'} are invertible for
//! c != c', which keeps intersections at {0} x Z; the parallelism keeps
//! codewords built on different spreads or blocks from meeting in more than
//! a 2-dimensional space. One extra codeword, {0} x GF(q)^4, joins the code.

use crate::ferrers::{lift_fd, FdCode, FerrersDiagram};
use crate::field::{ExtField, Field};
use crate::grassmann::{enumerate_grassmannian, gaussian, normalized_vectors};
use crate::linalg::Subspace;
use crate::rankmetric::{lifted_mrd_code, CodeFamily, ConstantDimensionCode};
use crate::{Error, Result, ENUMERATION_CAP};
use num::{BigUint, ToPrimitive};
use std::collections::HashMap;

/// Partitions the edge set of the complete graph on `m` vertices into
/// matchings by the rotation method: for even m, vertex m-1 stays fixed and
/// the rest rotate, giving m-1 perfect matchings; for odd m every round
/// leaves one vertex unmatched, giving m near-perfect matchings. Every edge
/// appears in exactly one class.
pub fn one_factorization(m: usize) -> Vec<Vec<(usize, usize)>> {
    let mut classes = Vec::new();
    if m < 2 {
        return classes;
    }
    if m % 2 == 0 {
        let c = m - 1;
        for r in 0..c {
            let mut class = vec![(r, m - 1)];
            for i in 1..=(m - 2) / 2 {
                let a = (r + c - i) % c;
                let b = (r + i) % c;
                class.push((a.min(b), a.max(b)));
            }
            classes.push(class);
        }
    } else {
        for r in 0..m {
            let mut class = Vec::new();
            for i in 1..=(m - 1) / 2 {
                let a = (r + m - i) % m;
                let b = (r + i) % m;
                class.push((a.min(b), a.max(b)));
            }
            classes.push(class);
        }
    }
    classes
}

/// Identifying vector x || y: x of length 3 with a single one at `xpos`,
/// y of length m with ones at the edge's endpoints.
fn weight2_iv(m: usize, xpos: usize, edge: (usize, usize)) -> Vec<u8> {
    let mut iv = vec![0u8; 3 + m];
    iv[xpos] = 1;
    iv[3 + edge.0] = 1;
    iv[3 + edge.1] = 1;
    iv
}

/// Appends the lifted diagram code for one identifying vector.
fn push_iv_codewords(
    f: &Field,
    iv: &[u8],
    pending: Vec<u64>,
    out: &mut Vec<Subspace>,
) -> Result<()> {
    let diagram = FerrersDiagram::from_iv(iv)?;
    let code = FdCode::new(f, diagram, pending)?;
    out.extend(lift_fd(f, iv, &code)?);
    Ok(())
}

/// Number of matching classes the suffix length m splits into.
fn class_count(m: usize) -> usize {
    if m % 2 == 0 {
        m - 1
    } else {
        m
    }
}

/// Closed-form size of `construction_i`: q^(2(n-3)) + [n-3 choose 2]_q.
/// Evaluates the formula without enumerating, so it covers parameters far
/// beyond what fits in memory.
pub fn construction_i_size(q: u64, n: usize) -> BigUint {
    let m = (n - 3) as u64;
    BigUint::from(q).pow(2 * m as u32) + gaussian(m, 2, q)
}

/// Closed-form size of `construction_ii`: the lifted code plus one
/// [w choose 2]_q batch per window, scaled by the free suffix coordinates
/// remaining to the right of that window (w = q^2 + q + 2).
pub fn construction_ii_size(q: u64, n: usize) -> BigUint {
    let m = n - 3;
    let w = (q * q + q + 2) as usize;
    let alpha = m / w;
    let mut total = BigUint::from(q).pow(2 * m as u32);
    for i in 1..=alpha {
        total += gaussian(w as u64, 2, q) * BigUint::from(q).pow(2 * (m - w * i) as u32);
    }
    total
}

/// Extends the lifted MRD code over every weight-2 suffix: one class of
/// suffixes keeps prefix 001 and no pending value, up to q classes take
/// prefix 010 and one pending value each, and up to q^2 further classes
/// take prefix 100 and a pair of pending values. Requires enough pending
/// values for all classes: q^2 + q + 1 >= class_count(n - 3).
pub fn construction_i(f: &Field, n: usize) -> Result<ConstantDimensionCode> {
    let q = f.q();
    if n < 8 {
        return Err(Error::Construction(format!(
            "ambient {n} too small, need n >= 8"
        )));
    }
    let m = n - 3;
    let s = class_count(m);
    let budget = (q * q + q + 1) as usize;
    if budget < s {
        return Err(Error::Construction(format!(
            "{s} suffix classes exceed the {budget} separable patterns at q={q}; \
             the windowed construction applies instead"
        )));
    }
    let mrd = lifted_mrd_code(q, n, 3, 2, ENUMERATION_CAP)?;
    let mut words = mrd.codewords;

    let classes = one_factorization(m);
    for (ci, class) in classes.iter().enumerate() {
        // class 0 -> prefix 001, no pending; classes 1..q -> prefix 010,
        // pending value ci-1; the rest -> prefix 100, two pending values
        let (xpos, pending) = if ci == 0 {
            (2, Vec::new())
        } else if ci <= q as usize {
            (1, vec![(ci - 1) as u64])
        } else {
            let t = (ci - 1 - q as usize) as u64;
            (0, vec![t / q, t % q])
        };
        for &edge in class {
            let iv = weight2_iv(m, xpos, edge);
            push_iv_codewords(f, &iv, pending.clone(), &mut words)?;
        }
    }

    debug_assert_eq!(BigUint::from(words.len()), construction_i_size(q, n));
    Ok(ConstantDimensionCode {
        q,
        n,
        k: 3,
        claimed_d: 4,
        family: CodeFamily::ConstructionI,
        codewords: words,
    })
}

/// Windowed variant for long ambients: the suffix splits into windows of
/// q^2 + q + 2 coordinates (a trailing remainder stays unused), each window
/// carries its own matching classes with the same prefix and pending scheme
/// as `construction_i`. Suffixes from different windows have disjoint
/// support, so pending values never need to separate them.
pub fn construction_ii(f: &Field, n: usize) -> Result<ConstantDimensionCode> {
    let q = f.q();
    if n < 8 {
        return Err(Error::Construction(format!(
            "ambient {n} too small, need n >= 8"
        )));
    }
    let m = n - 3;
    let w = (q * q + q + 2) as usize;
    let alpha = m / w;
    if alpha < 1 {
        return Err(Error::Construction(format!(
            "suffix length {m} shorter than one window of {w}; \
             the pending-value construction applies instead"
        )));
    }
    let mrd = lifted_mrd_code(q, n, 3, 2, ENUMERATION_CAP)?;
    let mut words = mrd.codewords;

    let classes = one_factorization(w);
    debug_assert_eq!(classes.len(), w - 1);
    for i in 0..alpha {
        let off = i * w;
        for (ci, class) in classes.iter().enumerate() {
            let (xpos, pending) = if ci == 0 {
                (2, Vec::new())
            } else if ci <= q as usize {
                (1, vec![(ci - 1) as u64])
            } else {
                let t = (ci - 1 - q as usize) as u64;
                (0, vec![t / q, t % q])
            };
            for &edge in class {
                let iv = weight2_iv(m, xpos, (off + edge.0, off + edge.1));
                push_iv_codewords(f, &iv, pending.clone(), &mut words)?;
            }
        }
    }

    debug_assert_eq!(BigUint::from(words.len()), construction_ii_size(q, n));
    Ok(ConstantDimensionCode {
        q,
        n,
        k: 3,
        claimed_d: 4,
        family: CodeFamily::ConstructionII,
        codewords: words,
    })
}

/// A 2-parallelism of GF(q)^4: spreads of pairwise disjoint 2-subspaces,
/// each spread covering every nonzero vector once, every 2-subspace lying
/// in exactly one spread.
pub struct Parallelism {
    pub q: u64,
    pub spreads: Vec<Vec<Subspace>>,
}

/// Hand-listed 2-parallelism of GF(2)^4: seven spreads of five blocks,
/// each block written as its three nonzero vectors (a, b, a+b), vectors as
/// 4-bit values with the leftmost coordinate in bit 3. The listing
/// circulates with a defect: the fourth block of the sixth spread repeats
/// the vector 0b1000 already covered by the first block and is not closed
/// under addition. Kept verbatim so the verifier can refute it; see
/// `parallelism_table_repaired` for the corrected listing.
pub const PARALLELISM_TABLE_RAW: [[[u16; 3]; 5]; 7] = [
    [
        [0b1000, 0b0100, 0b1100],
        [0b1010, 0b0101, 0b1111],
        [0b1011, 0b0110, 0b1101],
        [0b1001, 0b0111, 0b1110],
        [0b0010, 0b0001, 0b0011],
    ],
    [
        [0b1000, 0b0010, 0b1010],
        [0b0100, 0b0001, 0b0101],
        [0b1011, 0b0111, 0b1100],
        [0b1001, 0b0110, 0b1111],
        [0b1101, 0b0011, 0b1110],
    ],
    [
        [0b1000, 0b0110, 0b1110],
        [0b1001, 0b0100, 0b1101],
        [0b1100, 0b0011, 0b1111],
        [0b0101, 0b0010, 0b0111],
        [0b1010, 0b0001, 0b1011],
    ],
    [
        [0b1000, 0b0001, 0b1001],
        [0b1011, 0b0100, 0b1111],
        [0b1100, 0b0010, 0b1110],
        [0b1010, 0b0111, 0b1101],
        [0b0101, 0b0011, 0b0110],
    ],
    [
        [0b1000, 0b0101, 0b1101],
        [0b0100, 0b0011, 0b0111],
        [0b1010, 0b0110, 0b1100],
        [0b1001, 0b0010, 0b1011],
        [0b1110, 0b0001, 0b1111],
    ],
    [
        [0b1000, 0b0111, 0b1111],
        [0b0100, 0b0010, 0b0110],
        [0b1100, 0b0001, 0b1101],
        [0b1000, 0b0011, 0b1001],
        [0b1011, 0b0101, 0b1110],
    ],
    [
        [0b1000, 0b0011, 0b1011],
        [0b1010, 0b0100, 0b1110],
        [0b1001, 0b0101, 0b1100],
        [0b1101, 0b0010, 0b1111],
        [0b0110, 0b0001, 0b0111],
    ],
];

/// The listing above with its defective block replaced by the unique line
/// that completes the sixth spread: {1010, 0011, 1001}.
pub fn parallelism_table_repaired() -> [[[u16; 3]; 5]; 7] {
    let mut t = PARALLELISM_TABLE_RAW;
    t[5][3] = [0b1010, 0b0011, 0b1001];
    t
}

fn bits4(v: u16) -> Vec<u64> {
    (0..4).map(|j| ((v >> (3 - j)) & 1) as u64).collect()
}

/// Vector-level check of a spread listing over GF(2): within each spread
/// every nonzero vector must be covered exactly once and every block triple
/// must be closed under addition; across spreads all blocks must be
/// distinct and every line must appear.
pub fn verify_spread_triples(spreads: &[Vec<[u16; 3]>]) -> crate::designs::DesignReport {
    let fail = |cx: String| crate::designs::DesignReport {
        check: "spread-listing".into(),
        pass: false,
        parameters: vec![("spreads".into(), spreads.len().to_string())],
        counterexample: Some(cx),
    };
    let mut all_blocks = std::collections::HashSet::new();
    for (si, spread) in spreads.iter().enumerate() {
        let mut covered = [false; 16];
        for block in spread {
            for &v in block {
                if v == 0 || v > 15 {
                    return fail(format!("spread {}: vector {v:04b} out of range", si + 1));
                }
                if covered[v as usize] {
                    return fail(format!(
                        "spread {}: vector {v:04b} covered twice",
                        si + 1
                    ));
                }
                covered[v as usize] = true;
            }
        }
        if let Some(missing) = (1..16).find(|&v| !covered[v]) {
            return fail(format!("spread {}: vector {missing:04b} uncovered", si + 1));
        }
        for block in spread {
            if block[0] ^ block[1] != block[2] {
                return fail(format!(
                    "spread {}: block {:04b},{:04b},{:04b} not closed under addition",
                    si + 1,
                    block[0],
                    block[1],
                    block[2]
                ));
            }
            let mut sorted = *block;
            sorted.sort_unstable();
            if !all_blocks.insert(sorted) {
                return fail(format!(
                    "block {:04b},{:04b},{:04b} appears in two spreads",
                    block[0], block[1], block[2]
                ));
            }
        }
    }
    crate::designs::DesignReport {
        check: "spread-listing".into(),
        pass: all_blocks.len() == 35,
        parameters: vec![
            ("spreads".into(), spreads.len().to_string()),
            ("blocks".into(), all_blocks.len().to_string()),
        ],
        counterexample: if all_blocks.len() == 35 {
            None
        } else {
            Some(format!("{} distinct blocks, expected 35", all_blocks.len()))
        },
    }
}

/// Converts a verified GF(2) listing into subspaces; errors on any block
/// that is not closed under addition.
pub fn parallelism_from_table(f: &Field, table: &[[[u16; 3]; 5]; 7]) -> Result<Parallelism> {
    if f.q() != 2 {
        return Err(Error::InvalidParameter(
            "the spread listing is over GF(2)".into(),
        ));
    }
    let mut spreads = Vec::new();
    for spread in table {
        let mut blocks = Vec::new();
        for t in spread {
            if t[0] ^ t[1] != t[2] {
                return Err(Error::Construction(format!(
                    "block {:04b},{:04b},{:04b} is not closed under addition",
                    t[0], t[1], t[2]
                )));
            }
            let s = Subspace::from_rows(f, 4, &[bits4(t[0]), bits4(t[1])]);
            if s.dim() != 2 {
                return Err(Error::Construction(format!(
                    "block {:04b},{:04b} does not span 2 dimensions",
                    t[0], t[1]
                )));
            }
            blocks.push(s);
        }
        spreads.push(blocks);
    }
    Ok(Parallelism { q: 2, spreads })
}

/// Subspace-level parallelism check: every spread partitions the nonzero
/// vectors (equivalently, the projective points) and the spreads together
/// contain every 2-subspace exactly once.
pub fn verify_parallelism(f: &Field, par: &Parallelism) -> crate::designs::DesignReport {
    let q = par.q;
    let total = gaussian(4, 2, q).to_u64().unwrap_or(u64::MAX);
    let params = vec![
        ("q".into(), q.to_string()),
        ("spreads".into(), par.spreads.len().to_string()),
        ("lines".into(), total.to_string()),
    ];
    let fail = |cx: String| crate::designs::DesignReport {
        check: "parallelism".into(),
        pass: false,
        parameters: params.clone(),
        counterexample: Some(cx),
    };
    let points = normalized_vectors(f, 4);
    let pt_index: HashMap<Vec<u64>, usize> =
        points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut all_blocks = std::collections::HashSet::new();
    for (si, spread) in par.spreads.iter().enumerate() {
        let mut covered = vec![false; points.len()];
        for block in spread {
            if block.ambient() != 4 || block.dim() != 2 {
                return fail(format!("spread {}: block of wrong shape", si + 1));
            }
            for p in block.points(f) {
                let pi = pt_index[&p];
                if covered[pi] {
                    return fail(format!(
                        "spread {}: point {p:?} covered twice",
                        si + 1
                    ));
                }
                covered[pi] = true;
            }
            if !all_blocks.insert(block.clone()) {
                return fail(format!("spread {}: block repeated across spreads", si + 1));
            }
        }
        if covered.iter().any(|&c| !c) {
            return fail(format!("spread {} does not cover every point", si + 1));
        }
    }
    let pass = all_blocks.len() as u64 == total;
    crate::designs::DesignReport {
        check: "parallelism".into(),
        pass,
        parameters: params,
        counterexample: if pass {
            None
        } else {
            Some(format!(
                "{} distinct blocks, expected {total}",
                all_blocks.len()
            ))
        },
    }
}

/// Finds a 2-parallelism of GF(q)^4 deterministically: first enumerate all
/// spreads (exact covers of the projective points by lines, extending on
/// the lowest uncovered point), then exact-cover the line set by spreads,
/// always branching on the lowest unused line. Implemented for q <= 3; the
/// spread census grows too fast beyond that.
pub fn search_parallelism(f: &Field) -> Result<Parallelism> {
    let q = f.q();
    if q > 3 {
        return Err(Error::InvalidParameter(
            "parallelism search implemented for q = 2 and q = 3".into(),
        ));
    }
    let lines = enumerate_grassmannian(f, 4, 2, ENUMERATION_CAP)?;
    let points = normalized_vectors(f, 4);
    let pt_index: HashMap<Vec<u64>, usize> =
        points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let npts = points.len();
    let masks: Vec<u64> = lines
        .iter()
        .map(|l| {
            l.points(f)
                .iter()
                .fold(0u64, |m, p| m | (1u64 << pt_index[p]))
        })
        .collect();
    let full: u64 = if npts == 64 { u64::MAX } else { (1u64 << npts) - 1 };
    let mut through: Vec<Vec<u32>> = vec![Vec::new(); npts];
    for (li, &m) in masks.iter().enumerate() {
        for p in 0..npts {
            if m >> p & 1 == 1 {
                through[p].push(li as u32);
            }
        }
    }

    // phase 1: all spreads, each as sorted line indices
    let mut spreads: Vec<Vec<u32>> = Vec::new();
    let mut partial: Vec<u32> = Vec::new();
    fn dfs_spreads(
        cover: u64,
        full: u64,
        masks: &[u64],
        through: &[Vec<u32>],
        partial: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cover == full {
            out.push(partial.clone());
            return;
        }
        let p = (!cover).trailing_zeros() as usize;
        for &li in &through[p] {
            if masks[li as usize] & cover != 0 {
                continue;
            }
            partial.push(li);
            dfs_spreads(cover | masks[li as usize], full, masks, through, partial, out);
            partial.pop();
        }
    }
    dfs_spreads(0, full, &masks, &through, &mut partial, &mut spreads);

    // phase 2: partition the lines into spreads
    let nl = lines.len();
    let line_mask = |s: &[u32]| -> [u64; 3] {
        let mut m = [0u64; 3];
        for &li in s {
            m[(li / 64) as usize] |= 1u64 << (li % 64);
        }
        m
    };
    let spread_masks: Vec<[u64; 3]> = spreads.iter().map(|s| line_mask(s)).collect();
    let mut by_line: Vec<Vec<u32>> = vec![Vec::new(); nl];
    for (si, s) in spreads.iter().enumerate() {
        for &li in s {
            by_line[li as usize].push(si as u32);
        }
    }
    let full_lines = {
        let mut m = [0u64; 3];
        for li in 0..nl {
            m[li / 64] |= 1u64 << (li % 64);
        }
        m
    };
    fn disjoint(a: &[u64; 3], b: &[u64; 3]) -> bool {
        a[0] & b[0] == 0 && a[1] & b[1] == 0 && a[2] & b[2] == 0
    }
    fn union3(a: &[u64; 3], b: &[u64; 3]) -> [u64; 3] {
        [a[0] | b[0], a[1] | b[1], a[2] | b[2]]
    }
    fn dfs_pack(
        cover: [u64; 3],
        full: &[u64; 3],
        nl: usize,
        spread_masks: &[[u64; 3]],
        by_line: &[Vec<u32>],
        chosen: &mut Vec<u32>,
    ) -> bool {
        if cover == *full {
            return true;
        }
        let mut li = 0;
        while cover[li / 64] >> (li % 64) & 1 == 1 {
            li += 1;
        }
        let _ = nl;
        for &si in &by_line[li] {
            if !disjoint(&cover, &spread_masks[si as usize]) {
                continue;
            }
            chosen.push(si);
            if dfs_pack(
                union3(&cover, &spread_masks[si as usize]),
                full,
                nl,
                spread_masks,
                by_line,
                chosen,
            ) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if !dfs_pack([0; 3], &full_lines, nl, &spread_masks, &by_line, &mut chosen) {
        return Err(Error::Construction(
            "no parallelism found over the enumerated spreads".into(),
        ));
    }
    let spreads_out = chosen
        .iter()
        .map(|&si| {
            spreads[si as usize]
                .iter()
                .map(|&li| lines[li as usize].clone())
                .collect()
        })
        .collect();
    Ok(Parallelism {
        q,
        spreads: spreads_out,
    })
}

fn row_coords(s: &Subspace, i: usize) -> Vec<u64> {
    (0..s.ambient()).map(|j| s.gen().get(i, j)).collect()
}

/// The q^2 codewords attached to the ordered block pair (Z, Z'): prefix
/// space Z', common suffix space Z, and for each c in GF(q^2) the graph of
/// multiplication by c. Z' is identified with GF(q^2) through its echelon
/// basis, GF(q)^4 / Z through the unit vectors at Z's non-pivot columns
/// (the later column carries the low coordinate).
fn pair_codewords(
    f: &Field,
    ext: &ExtField,
    z: &Subspace,
    zp: &Subspace,
) -> Result<Vec<Subspace>> {
    let q = f.q();
    let piv = z.pivots();
    let nonpiv: Vec<usize> = (0..4).filter(|c| !piv.contains(c)).collect();
    let (jf, jl) = (nonpiv[0], nonpiv[1]);
    let embed = |e: u64| -> Vec<u64> {
        let c = ext.coords(e);
        let mut v = vec![0u64; 4];
        v[jl] = c[0];
        v[jf] = c[1];
        v
    };
    let xi = ext.basis_element(1);
    let mut out = Vec::with_capacity((q * q) as usize);
    for c in 0..q * q {
        let mut rows = Vec::with_capacity(4);
        for i in 0..2 {
            let mut r = vec![0u64; 8];
            r[4..].copy_from_slice(&row_coords(z, i));
            rows.push(r);
        }
        for (i, img) in [ext.mul(c, 1), ext.mul(c, xi)].into_iter().enumerate() {
            let mut r = row_coords(zp, i);
            r.extend(embed(img));
            rows.push(r);
        }
        let s = Subspace::from_rows(f, 8, &rows);
        if s.dim() != 4 {
            return Err(Error::Construction(
                "block pair produced a degenerate codeword".into(),
            ));
        }
        out.push(s);
    }
    Ok(out)
}

/// Extends the lifted MRD (8, q^12, 4, 4)_q code by q^2 codewords per
/// ordered pair of blocks from a common spread of the given 2-parallelism,
/// plus the all-suffix space {0} x GF(q)^4, reaching size
/// q^12 + [4 choose 2]_q (q^2 + 1) q^2 + 1 at minimum distance 4.
pub fn construction_iii(f: &Field, par: &Parallelism) -> Result<ConstantDimensionCode> {
    let q = f.q();
    if par.q != q {
        return Err(Error::InvalidParameter(
            "parallelism field does not match".into(),
        ));
    }
    let mrd = lifted_mrd_code(q, 8, 4, 2, ENUMERATION_CAP)?;
    let mut words = mrd.codewords;
    let ext = ExtField::new(q, 2)?;
    for spread in &par.spreads {
        for z in spread {
            for zp in spread {
                words.extend(pair_codewords(f, &ext, z, zp)?);
            }
        }
    }
    let mut rows = Vec::new();
    for i in 0..4 {
        let mut r = vec![0u64; 8];
        r[4 + i] = 1;
        rows.push(r);
    }
    words.push(Subspace::from_rows(f, 8, &rows));

    let expected = BigUint::from(q).pow(12)
        + gaussian(4, 2, q) * BigUint::from(q * q + 1) * BigUint::from(q * q)
        + BigUint::from(1u32);
    debug_assert_eq!(BigUint::from(words.len()), expected);
    Ok(ConstantDimensionCode {
        q,
        n: 8,
        k: 4,
        claimed_d: 4,
        family: CodeFamily::ConstructionIII,
        codewords: words,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::subspace_distance;
    use crate::rankmetric::{verify_min_distance, DistanceMode};
    use crate::PAIR_CAP;
    use std::collections::HashSet;

    #[test]
    fn one_factorization_covers_all_edges_once() {
        for m in [4usize, 5, 6, 8, 9, 10] {
            let classes = one_factorization(m);
            assert_eq!(classes.len(), class_count(m));
            let mut seen = HashSet::new();
            for class in &classes {
                let mut used = vec![false; m];
                assert_eq!(class.len(), (m - m % 2) / 2);
                for &(a, b) in class {
                    assert!(a < b && b < m);
                    assert!(!used[a] && !used[b], "m={m}: class reuses a vertex");
                    used[a] = true;
                    used[b] = true;
                    assert!(seen.insert((a, b)), "m={m}: edge repeated");
                }
            }
            assert_eq!(seen.len(), m * (m - 1) / 2);
        }
    }

    #[test]
    fn construction_i_n8_sizes_and_distance() {
        let f = Field::new(2).unwrap();
        let code = construction_i(&f, 8).unwrap();
        assert_eq!(code.codewords.len(), 1179);
        let set: HashSet<_> = code.codewords.iter().cloned().collect();
        assert_eq!(set.len(), 1179);
        for cw in &code.codewords {
            assert_eq!(cw.dim(), 3);
        }
        // the lifted code sits at the front
        let mrd = lifted_mrd_code(2, 8, 3, 2, ENUMERATION_CAP).unwrap();
        assert_eq!(&code.codewords[..1024], &mrd.codewords[..]);
        let chk = verify_min_distance(
            &f,
            &code,
            DistanceMode::Exhaustive,
            PAIR_CAP,
        )
        .unwrap();
        assert!(chk.pass, "min distance {:?}", chk.min_distance);
        assert_eq!(chk.min_distance, Some(4));
    }

    #[test]
    fn construction_i_gf3() {
        let f = Field::new(3).unwrap();
        let code = construction_i(&f, 8).unwrap();
        // 3^10 + [5 choose 2]_3 = 59049 + 1210
        assert_eq!(code.codewords.len(), 60259);
        let chk = verify_min_distance(
            &f,
            &code,
            DistanceMode::Sampled {
                samples: 30_000,
                seed: 7,
            },
            PAIR_CAP,
        )
        .unwrap();
        assert!(chk.pass, "witness {:?}", chk.witness);
    }

    #[test]
    fn construction_gates() {
        let f = Field::new(2).unwrap();
        // 9 suffix classes at n = 12 exceed the 7 patterns of GF(2)
        assert!(construction_i(&f, 12).is_err());
        // suffix shorter than one window
        assert!(construction_ii(&f, 9).is_err());
        assert!(construction_i(&f, 7).is_err());
    }

    #[test]
    fn construction_ii_sizes() {
        let f = Field::new(2).unwrap();
        let code = construction_ii(&f, 11).unwrap();
        assert_eq!(code.codewords.len(), 76331);
        let code = construction_ii(&f, 13).unwrap();
        assert_eq!(code.codewords.len(), 1_221_296);
        // spot-check distance on a sample
        let chk = verify_min_distance(
            &f,
            &code,
            DistanceMode::Sampled {
                samples: 30_000,
                seed: 11,
            },
            PAIR_CAP,
        )
        .unwrap();
        assert!(chk.pass, "witness {:?}", chk.witness);
    }

    #[test]
    fn raw_table_is_refuted_and_repair_is_unique() {
        let raw: Vec<Vec<[u16; 3]>> = PARALLELISM_TABLE_RAW
            .iter()
            .map(|s| s.to_vec())
            .collect();
        let r = verify_spread_triples(&raw);
        assert!(!r.pass);
        let cx = r.counterexample.unwrap();
        assert!(cx.contains("spread 6"), "{cx}");
        assert!(cx.contains("1000"), "{cx}");

        // the repaired block is the only line fixing spread 6
        let f = Field::new(2).unwrap();
        let lines = enumerate_grassmannian(&f, 4, 2, ENUMERATION_CAP).unwrap();
        let mut fixes = Vec::new();
        for line in &lines {
            let vecs: Vec<u16> = line
                .points(&f)
                .iter()
                .map(|p| p.iter().fold(0u16, |a, &b| (a << 1) | b as u16))
                .collect();
            let mut cand = raw.clone();
            // ascending points of a 2-space always satisfy t[2] = t[0] ^ t[1]
            cand[5][3] = [vecs[0], vecs[1], vecs[2]];
            if verify_spread_triples(&cand).pass {
                fixes.push(cand[5][3]);
            }
        }
        assert_eq!(fixes.len(), 1);
        let mut found = fixes[0];
        found.sort_unstable();
        let mut expected = parallelism_table_repaired()[5][3];
        expected.sort_unstable();
        assert_eq!(found, expected);
    }

    #[test]
    fn repaired_table_is_a_parallelism() {
        let f = Field::new(2).unwrap();
        let repaired: Vec<Vec<[u16; 3]>> = parallelism_table_repaired()
            .iter()
            .map(|s| s.to_vec())
            .collect();
        assert!(verify_spread_triples(&repaired).pass);
        let par = parallelism_from_table(&f, &parallelism_table_repaired()).unwrap();
        let r = verify_parallelism(&f, &par);
        assert!(r.pass, "{:?}", r.counterexample);
        // the raw table cannot even be converted
        assert!(parallelism_from_table(&f, &PARALLELISM_TABLE_RAW).is_err());
    }

    #[test]
    fn searched_parallelisms_verify() {
        let f2 = Field::new(2).unwrap();
        let par = search_parallelism(&f2).unwrap();
        assert_eq!(par.spreads.len(), 7);
        assert!(verify_parallelism(&f2, &par).pass);
        let f3 = Field::new(3).unwrap();
        let par = search_parallelism(&f3).unwrap();
        assert_eq!(par.spreads.len(), 13);
        assert!(verify_parallelism(&f3, &par).pass);
    }

    #[test]
    fn block_pair_codewords_match_known_listing() {
        let f = Field::new(2).unwrap();
        let ext = ExtField::new(2, 2).unwrap();
        let z = Subspace::from_rows(&f, 4, &[bits4(0b1000), bits4(0b0100)]);
        let zp = Subspace::from_rows(&f, 4, &[bits4(0b1010), bits4(0b0101)]);
        let words = pair_codewords(&f, &ext, &z, &zp).unwrap();
        assert_eq!(words.len(), 4);

        let v8 = |s: &str| -> Vec<u64> {
            s.bytes().map(|b| (b - b'0') as u64).collect()
        };
        // expected nonzero points of each codeword, c = 0 first
        let expect = [
            vec![
                "00001000", "00000100", "00001100", "10100000", "10101000",
                "10100100", "10101100", "01010000", "01011000", "01010100",
                "01011100", "11110000", "11111000", "11110100", "11111100",
            ],
            vec![
                "00001000", "00000100", "00001100", "10100001", "10101001",
                "10100101", "10101101", "01010010", "01011010", "01010110",
                "01011110", "11110011", "11111011", "11110111", "11111111",
            ],
            vec![
                "00001000", "00000100", "00001100", "10100010", "10101010",
                "10100110", "10101110", "01010011", "01011011", "01010111",
                "01011111", "11110001", "11111001", "11110101", "11111101",
            ],
            vec![
                "00001000", "00000100", "00001100", "10100011", "10101011",
                "10100111", "10101111", "01010001", "01011001", "01010101",
                "01011101", "11110010", "11111010", "11110110", "11111110",
            ],
        ];
        for (w, exp) in words.iter().zip(expect.iter()) {
            let pts: HashSet<Vec<u64>> = w.points(&f).into_iter().collect();
            assert_eq!(pts.len(), 15);
            for s in exp {
                assert!(pts.contains(&v8(s)), "missing point {s}");
            }
        }
    }

    #[test]
    fn construction_iii_gf2() {
        let f = Field::new(2).unwrap();
        let par = parallelism_from_table(&f, &parallelism_table_repaired()).unwrap();
        let code = construction_iii(&f, &par).unwrap();
        assert_eq!(code.codewords.len(), 4797);
        let set: HashSet<_> = code.codewords.iter().cloned().collect();
        assert_eq!(set.len(), 4797);
        for cw in &code.codewords {
            assert_eq!(cw.dim(), 4);
        }
        let chk = verify_min_distance(
            &f,
            &code,
            DistanceMode::Sampled {
                samples: 60_000,
                seed: 3,
            },
            PAIR_CAP,
        )
        .unwrap();
        assert!(chk.pass, "witness {:?}", chk.witness);
        // distance drops to 2 if a foreign subspace joins
        let mut bad = code;
        let mut rows = Vec::new();
        for i in 0..4 {
            let mut r = vec![0u64; 8];
            r[i] = 1;
            if i == 0 {
                r[7] = 1;
            }
            rows.push(r);
        }
        bad.codewords.push(Subspace::from_rows(&f, 8, &rows));
        let d01 = subspace_distance(&f, &bad.codewords[0], bad.codewords.last().unwrap());
        assert_eq!(d01, 2);
    }
}
