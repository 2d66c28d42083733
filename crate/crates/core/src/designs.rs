//! Combinatorial designs carried by lifted rank-metric codes.
//!
//! A lifted code with ambient dimension n and codeword dimension k acts on
//! the point set {(c, s)}: c a normalized nonzero vector of GF(q)^k, s an
//! arbitrary vector of GF(q)^{n-k}. Every such point lies in exactly one
//! normalized form (c || s), so there are (q^k - 1)/(q - 1) groups (one per
//! normalized prefix) of q^{n-k} points each. A codeword, viewed as the row
//! space of [I_k | A], contains exactly one point per group: the point
//! (c || cA). Treating codewords as blocks therefore yields a transversal
//! design; when the code is a lifted maximum-rank-distance code with minimum
//! subspace distance 2*delta, every pair of points from distinct groups lies
//! in exactly q^{(n-k)(k-delta-1)} blocks, and the blocks split into parallel
//! classes of consecutive runs (the enumeration order places each coset of
//! the degree-one subcode contiguously).
//!
//! The same structure satisfies a stronger, subspace-level property: every
//! (k - delta + 1)-dimensional subspace all of whose nonzero vectors have a
//! nonzero prefix lies in exactly one codeword. Projecting blocks to their
//! within-group indices turns the design into an orthogonal array of
//! strength k - delta with the same index.
//!
//! Points are numbered group-major: groups sorted by their normalized prefix
//! read as a radix-q integer (leftmost digit most significant), suffixes
//! sorted the same way, id = group_index * q^{n-k} + suffix_index.

use crate::field::Field;
use crate::grassmann::{enumerate_grassmannian, gaussian, normalized_vectors};
use crate::linalg::{check_cap, MatrixGF, Subspace};
use crate::rankmetric::{ConstantDimensionCode, GabidulinCode};
use crate::{Error, Result, ENUMERATION_CAP};
use num::ToPrimitive;
use std::collections::HashMap;

/// Assigns ids to the points with a nonzero prefix, group-major.
pub struct PointMap {
    q: u64,
    n: usize,
    k: usize,
    group_size: u64,
    prefix_index: HashMap<Vec<u64>, u32>,
}

impl PointMap {
    pub fn new(f: &Field, n: usize, k: usize) -> Result<PointMap> {
        if k == 0 || k >= n {
            return Err(Error::InvalidParameter(format!(
                "point map needs 0 < k < n, got k={k}, n={n}"
            )));
        }
        let q = f.q();
        let group_size = (q as u128).checked_pow((n - k) as u32).ok_or(
            Error::InvalidParameter("suffix space overflows".into()),
        )?;
        let prefixes = normalized_vectors(f, k);
        check_cap(
            "design points",
            prefixes.len() as u128 * group_size,
            u32::MAX as u128,
        )?;
        let prefix_index = prefixes
            .into_iter()
            .enumerate()
            .map(|(i, p)| (p, i as u32))
            .collect();
        Ok(PointMap {
            q,
            n,
            k,
            group_size: group_size as u64,
            prefix_index,
        })
    }

    pub fn groups(&self) -> usize {
        self.prefix_index.len()
    }

    pub fn group_size(&self) -> usize {
        self.group_size as usize
    }

    pub fn point_count(&self) -> usize {
        self.groups() * self.group_size()
    }

    /// Id of a normalized vector; errors when the prefix is zero (such
    /// points lie outside the group structure).
    pub fn id(&self, v: &[u64]) -> Result<u32> {
        if v.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "point has length {}, ambient is {}",
                v.len(),
                self.n
            )));
        }
        let group = *self.prefix_index.get(&v[..self.k]).ok_or_else(|| {
            Error::InvalidParameter(
                "point prefix is zero or not normalized".into(),
            )
        })?;
        let mut suffix = 0u64;
        for &d in &v[self.k..] {
            suffix = suffix * self.q + d;
        }
        Ok(group * self.group_size as u32 + suffix as u32)
    }

    pub fn group_of(&self, id: u32) -> usize {
        (id as u64 / self.group_size) as usize
    }
}

/// Blocks over the group-major point set; one point per group in a valid
/// design, blocks kept in code order so parallel classes stay contiguous.
pub struct TransversalDesign {
    pub q: u64,
    pub groups: usize,
    pub group_size: usize,
    pub blocks: Vec<Vec<u32>>,
}

/// Outcome of a design check: parameters echo the verified quantities, the
/// counterexample pinpoints the first violation when the check fails.
#[derive(Debug, Clone)]
pub struct DesignReport {
    pub check: String,
    pub pass: bool,
    pub parameters: Vec<(String, String)>,
    pub counterexample: Option<String>,
}

fn report(
    check: &str,
    pass: bool,
    mut parameters: Vec<(String, String)>,
    counterexample: Option<String>,
) -> DesignReport {
    parameters.sort();
    DesignReport {
        check: check.into(),
        pass,
        parameters,
        counterexample,
    }
}

/// Pair multiplicity of the transversal design carried by a lifted code of
/// minimum distance 2*delta: q^{(n-k)(k-delta-1)}. Needs delta <= k - 1;
/// at delta = k the blocks are pairwise disjoint outside the groups and no
/// pair balance holds.
pub fn td_lambda(q: u64, n: usize, k: usize, delta: usize) -> Result<u128> {
    if delta == 0 || delta > k - 1 {
        return Err(Error::InvalidParameter(format!(
            "pair balance needs 1 <= delta <= k - 1, got delta={delta}, k={k}"
        )));
    }
    (q as u128)
        .checked_pow(((n - k) * (k - 1 - delta)) as u32)
        .ok_or(Error::InvalidParameter("index overflows".into()))
}

/// Maps each codeword to its sorted point-id block. Errors if any codeword
/// contains a point with zero prefix (the code is then not transversal over
/// this group structure).
pub fn td_from_code(f: &Field, code: &ConstantDimensionCode) -> Result<TransversalDesign> {
    let pm = PointMap::new(f, code.n, code.k)?;
    let mut blocks = Vec::with_capacity(code.codewords.len());
    for cw in &code.codewords {
        let mut ids = Vec::new();
        for p in cw.points(f) {
            ids.push(pm.id(&p)?);
        }
        ids.sort_unstable();
        blocks.push(ids);
    }
    Ok(TransversalDesign {
        q: code.q,
        groups: pm.groups(),
        group_size: pm.group_size(),
        blocks,
    })
}

/// Checks the transversal-design axioms: every block has one point per
/// group, and every cross-group point pair lies in exactly `lambda` blocks.
pub fn verify_td(td: &TransversalDesign, lambda: u128) -> Result<DesignReport> {
    let n_pts = td.groups * td.group_size;
    let params = vec![
        ("groups".to_string(), td.groups.to_string()),
        ("group_size".to_string(), td.group_size.to_string()),
        ("blocks".to_string(), td.blocks.len().to_string()),
        ("lambda".to_string(), lambda.to_string()),
    ];
    for (bi, b) in td.blocks.iter().enumerate() {
        if b.len() != td.groups {
            return Ok(report(
                "transversal-design",
                false,
                params,
                Some(format!(
                    "block {bi} has {} points, expected {}",
                    b.len(),
                    td.groups
                )),
            ));
        }
        for (gi, &p) in b.iter().enumerate() {
            if (p as usize) / td.group_size != gi || (p as usize) >= n_pts {
                return Ok(report(
                    "transversal-design",
                    false,
                    params,
                    Some(format!("block {bi} does not meet group {gi} exactly once")),
                ));
            }
        }
    }
    check_cap(
        "pair tally",
        (n_pts as u128) * (n_pts as u128),
        ENUMERATION_CAP * 100,
    )?;
    let mut tally = vec![0u64; n_pts * n_pts];
    for b in &td.blocks {
        for i in 0..b.len() {
            for j in (i + 1)..b.len() {
                tally[b[i] as usize * n_pts + b[j] as usize] += 1;
            }
        }
    }
    for a in 0..n_pts {
        for b in (a + 1)..n_pts {
            let got = tally[a * n_pts + b] as u128;
            let want = if a / td.group_size == b / td.group_size {
                0
            } else {
                lambda
            };
            if got != want {
                return Ok(report(
                    "transversal-design",
                    false,
                    params,
                    Some(format!("pair ({a}, {b}) lies in {got} blocks, expected {want}")),
                ));
            }
        }
    }
    Ok(report("transversal-design", true, params, None))
}

/// Checks that consecutive runs of `group_size` blocks each partition the
/// point set (the design is resolvable with those runs as parallel classes).
pub fn verify_resolvable(td: &TransversalDesign) -> Result<DesignReport> {
    let n_pts = td.groups * td.group_size;
    let m = td.group_size;
    let classes = td.blocks.len() / m.max(1);
    let params = vec![
        ("classes".to_string(), classes.to_string()),
        ("blocks_per_class".to_string(), m.to_string()),
        ("points".to_string(), n_pts.to_string()),
    ];
    if m == 0 || td.blocks.len() % m != 0 {
        return Ok(report(
            "resolvability",
            false,
            params,
            Some(format!(
                "{} blocks do not split into runs of {m}",
                td.blocks.len()
            )),
        ));
    }
    let mut seen = vec![false; n_pts];
    for (ci, class) in td.blocks.chunks(m).enumerate() {
        seen.iter_mut().for_each(|s| *s = false);
        for b in class {
            for &p in b {
                if seen[p as usize] {
                    return Ok(report(
                        "resolvability",
                        false,
                        params,
                        Some(format!("class {ci} covers point {p} twice")),
                    ));
                }
                seen[p as usize] = true;
            }
        }
        if let Some(missed) = seen.iter().position(|&s| !s) {
            return Ok(report(
                "resolvability",
                false,
                params,
                Some(format!("class {ci} misses point {missed}")),
            ));
        }
    }
    Ok(report("resolvability", true, params, None))
}

/// Checks the subspace-level transversal property: every t-dimensional
/// subspace of every codeword occurs exactly once across the code, and the
/// number of distinct such subspaces equals [k choose t]_q * q^{(n-k)t},
/// i.e. every t-subspace meeting the zero-prefix space trivially is covered.
pub fn verify_std(f: &Field, code: &ConstantDimensionCode, t: usize) -> Result<DesignReport> {
    let q = code.q;
    let k = code.k;
    if t == 0 || t > k {
        return Err(Error::InvalidParameter(format!(
            "subspace strength must satisfy 1 <= t <= k, got t={t}"
        )));
    }
    let coeffs = enumerate_grassmannian(f, k, t, ENUMERATION_CAP)?;
    let expected = gaussian(k as u64, t as u64, q)
        * num::BigUint::from(q).pow(((code.n - k) * t) as u32);
    let expected = expected.to_u128().ok_or(Error::InvalidParameter(
        "expected subspace count overflows".into(),
    ))?;
    check_cap(
        "qualifying subspaces",
        code.codewords.len() as u128 * coeffs.len() as u128,
        ENUMERATION_CAP * 10,
    )?;
    let mut tally: HashMap<Subspace, u32> = HashMap::new();
    for cw in &code.codewords {
        for cf in &coeffs {
            let sub = Subspace::from_matrix(f, MatrixGF::matmul(cf.gen(), cw.gen(), f));
            debug_assert_eq!(sub.dim(), t);
            *tally.entry(sub).or_insert(0) += 1;
        }
    }
    let params = vec![
        ("t".to_string(), t.to_string()),
        ("distinct".to_string(), tally.len().to_string()),
        ("expected".to_string(), expected.to_string()),
    ];
    if let Some((s, &c)) = tally.iter().find(|(_, &c)| c != 1) {
        return Ok(report(
            "subspace-transversal",
            false,
            params,
            Some(format!(
                "a {t}-subspace with identifying vector {:?} occurs {c} times",
                s.identifying_vector()
            )),
        ));
    }
    if tally.len() as u128 != expected {
        return Ok(report(
            "subspace-transversal",
            false,
            params,
            Some(format!(
                "covered {} subspaces, expected {expected}",
                tally.len()
            )),
        ));
    }
    Ok(report("subspace-transversal", true, params, None))
}

/// Orthogonal array: `rows` runs over `s` symbols; strength-t means every
/// t columns carry every t-tuple equally often.
pub struct OrthogonalArray {
    pub s: u64,
    pub rows: Vec<Vec<u16>>,
}

/// Array of the maximum-rank-distance code itself: one run per codeword,
/// one column per evaluation point, symbols in GF(q^{n-k}).
pub fn oa_from_mrd(q: u64, n: usize, k: usize, delta: usize) -> Result<OrthogonalArray> {
    let ell = n - k;
    let gab = GabidulinCode::new(q, ell, k, delta)?;
    let s = (q as u128).pow(ell as u32);
    if s > u16::MAX as u128 + 1 {
        return Err(Error::InvalidParameter(
            "symbol alphabet exceeds 16 bits".into(),
        ));
    }
    check_cap("array runs", gab.message_count(), ENUMERATION_CAP)?;
    let mut rows = Vec::with_capacity(gab.message_count() as usize);
    for word in gab.codewords() {
        rows.push(word.iter().map(|&x| x as u16).collect());
    }
    Ok(OrthogonalArray { s: s as u64, rows })
}

/// Array of a transversal design: one run per block, one column per group,
/// symbols are within-group indices.
pub fn oa_from_td(td: &TransversalDesign) -> Result<OrthogonalArray> {
    if td.group_size > u16::MAX as usize + 1 {
        return Err(Error::InvalidParameter(
            "symbol alphabet exceeds 16 bits".into(),
        ));
    }
    let rows = td
        .blocks
        .iter()
        .map(|b| b.iter().map(|&p| (p as usize % td.group_size) as u16).collect())
        .collect();
    Ok(OrthogonalArray {
        s: td.group_size as u64,
        rows,
    })
}

/// Checks strength `t` at index `lambda`: every t-subset of columns carries
/// every t-tuple of symbols in exactly `lambda` runs.
pub fn verify_oa(oa: &OrthogonalArray, t: usize, lambda: u128) -> Result<DesignReport> {
    let cols = oa.rows.first().map_or(0, |r| r.len());
    let params = vec![
        ("columns".to_string(), cols.to_string()),
        ("symbols".to_string(), oa.s.to_string()),
        ("t".to_string(), t.to_string()),
        ("lambda".to_string(), lambda.to_string()),
    ];
    if t == 0 || t > cols {
        return Err(Error::InvalidParameter(format!(
            "strength must satisfy 1 <= t <= {cols}, got {t}"
        )));
    }
    let tuples = (oa.s as u128)
        .checked_pow(t as u32)
        .ok_or(Error::InvalidParameter("tuple space overflows".into()))?;
    check_cap("tuple tally", tuples, ENUMERATION_CAP)?;
    let mut tally = vec![0u64; tuples as usize];

    // iterate t-subsets of columns in lexicographic order
    let mut choice: Vec<usize> = (0..t).collect();
    loop {
        tally.iter_mut().for_each(|x| *x = 0);
        for row in &oa.rows {
            let mut idx = 0u128;
            for &c in &choice {
                idx = idx * oa.s as u128 + row[c] as u128;
            }
            tally[idx as usize] += 1;
        }
        if let Some(bad) = tally.iter().position(|&c| c as u128 != lambda) {
            return Ok(report(
                "orthogonal-array",
                false,
                params,
                Some(format!(
                    "columns {choice:?}: tuple index {bad} occurs {} times, expected {lambda}",
                    tally[bad]
                )),
            ));
        }
        // next combination
        let mut i = t;
        loop {
            if i == 0 {
                return Ok(report("orthogonal-array", true, params, None));
            }
            i -= 1;
            if choice[i] < cols - (t - i) {
                choice[i] += 1;
                for j in (i + 1)..t {
                    choice[j] = choice[j - 1] + 1;
                }
                break;
            }
        }
    }
}
