//! Rank-metric codes, Gabidulin codes, lifting, and minimum-distance
//! verification of constant-dimension subspace codes.
//!
//! A rank-metric codeword is a k x l matrix over GF(q); the distance between
//! two codewords is the rank of their difference. Gabidulin codes evaluate
//! linearized polynomials f(x) = sum_j a_j x^(q^j), deg_q f <= k - delta, at
//! the first k polynomial-basis elements of GF(q^l); they meet the Singleton
//! bound for the rank metric, so every nonzero codeword has rank at least
//! delta.
//!
//! Lifting prepends an identity: A maps to the row space of [I_k | A], a
//! k-dimensional subspace of GF(q)^(k+l). Lifting doubles distance
//! (subspace distance = 2 rank distance), so a lifted MRD code is a
//! constant-dimension code with q^((n-k)(k-delta+1)) codewords and minimum
//! subspace distance 2 delta.
//!
//! Messages are ordered by their index, little-endian radix q^l: digit j is
//! the coefficient a_j. Because a_0 is the fastest digit and the codewords
//! with a_1 = ... = a_(k-delta) fixed form a coset of the one-dimensional
//! subcode {f(x) = a_0 x}, consecutive runs of q^l messages are exactly the
//! parallel classes used by the induced resolvable designs.

use crate::field::{ExtField, Field};
use crate::linalg::{check_cap, rank_union_gen, rank_union_gf2, MatrixGF, Subspace};
use crate::rng::SplitMix64;
use crate::{Error, Result};
use rayon::prelude::*;

/// Provenance of a constant-dimension code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeFamily {
    LiftedMrd,
    ConstructionI,
    ConstructionII,
    ConstructionIII,
    External,
}

impl CodeFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            CodeFamily::LiftedMrd => "lifted-mrd",
            CodeFamily::ConstructionI => "construction-i",
            CodeFamily::ConstructionII => "construction-ii",
            CodeFamily::ConstructionIII => "construction-iii",
            CodeFamily::External => "external",
        }
    }

    pub fn parse(s: &str) -> Result<CodeFamily> {
        Ok(match s {
            "lifted-mrd" => CodeFamily::LiftedMrd,
            "construction-i" => CodeFamily::ConstructionI,
            "construction-ii" => CodeFamily::ConstructionII,
            "construction-iii" => CodeFamily::ConstructionIII,
            "external" => CodeFamily::External,
            other => {
                return Err(Error::Parse(format!("unknown provenance {other:?}")));
            }
        })
    }
}

/// A set of k-dimensional subspaces of GF(q)^n with a design distance the
/// construction claims (and verification checks).
#[derive(Clone, Debug)]
pub struct ConstantDimensionCode {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub claimed_d: usize,
    pub family: CodeFamily,
    pub codewords: Vec<Subspace>,
}

impl ConstantDimensionCode {
    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }
}

/// Rank distance between two equally sized matrices.
pub fn rank_distance(f: &Field, a: &MatrixGF, b: &MatrixGF) -> usize {
    assert_eq!(a.rows(), b.rows());
    assert_eq!(a.cols(), b.cols());
    let mut diff = MatrixGF::zero(f.q(), a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            diff.set(i, j, f.sub(a.get(i, j), b.get(i, j)));
        }
    }
    diff.rank(f)
}

/// Gabidulin code: npoints evaluation points, message dimension
/// npoints - delta + 1 over GF(q^ell).
pub struct GabidulinCode {
    ext: ExtField,
    npoints: usize,
    delta: usize,
    /// moore[j][i] = g_{i+1}^(q^j), the evaluation of the j-th message
    /// monomial at the i-th point.
    moore: Vec<Vec<u64>>,
}

impl GabidulinCode {
    pub fn new(q: u64, ell: usize, npoints: usize, delta: usize) -> Result<GabidulinCode> {
        if npoints == 0 || npoints > ell {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= npoints <= ell, got npoints={npoints}, ell={ell}"
            )));
        }
        if delta == 0 || delta > npoints {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= delta <= npoints, got delta={delta}"
            )));
        }
        let ext = ExtField::new(q, ell as u32)?;
        let dim = npoints - delta + 1;
        let moore = (0..dim)
            .map(|j| {
                (0..npoints)
                    .map(|i| ext.frobenius(ext.basis_element(i as u32), j as u32))
                    .collect()
            })
            .collect();
        Ok(GabidulinCode {
            ext,
            npoints,
            delta,
            moore,
        })
    }

    pub fn ext(&self) -> &ExtField {
        &self.ext
    }

    pub fn npoints(&self) -> usize {
        self.npoints
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn message_dim(&self) -> usize {
        self.npoints - self.delta + 1
    }

    /// Saturates at u128::MAX; callers compare against caps far below that.
    pub fn message_count(&self) -> u128 {
        (self.ext.order() as u128)
            .checked_pow(self.message_dim() as u32)
            .unwrap_or(u128::MAX)
    }

    /// Codeword for one message index, as extension-field element per point.
    pub fn codeword(&self, msg: u128) -> Vec<u64> {
        let order = self.ext.order() as u128;
        let mut out = vec![0u64; self.npoints];
        let mut m = msg;
        for row in &self.moore {
            let a = (m % order) as u64;
            m /= order;
            if a != 0 {
                for (i, &g) in row.iter().enumerate() {
                    out[i] = self.ext.add(out[i], self.ext.mul(a, g));
                }
            }
        }
        debug_assert_eq!(m, 0, "message index out of range");
        out
    }

    /// All codewords in message order. Uses a per-digit contribution table so
    /// the enumeration is pure coordinate additions.
    pub fn codewords(&self) -> Vec<Vec<u64>> {
        let order = self.ext.order();
        let dim = self.message_dim();
        let total = self.message_count();
        assert!(total <= usize::MAX as u128);
        // contrib[j][a][i] = a * moore[j][i]
        let contrib: Vec<Vec<Vec<u64>>> = (0..dim)
            .map(|j| {
                (0..order)
                    .map(|a| {
                        (0..self.npoints)
                            .map(|i| self.ext.mul(a, self.moore[j][i]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut out = Vec::with_capacity(total as usize);
        let mut digits = vec![0u64; dim];
        loop {
            let mut w = vec![0u64; self.npoints];
            for (j, &a) in digits.iter().enumerate() {
                if a != 0 {
                    let c = &contrib[j][a as usize];
                    for i in 0..self.npoints {
                        w[i] = self.ext.add(w[i], c[i]);
                    }
                }
            }
            out.push(w);
            let mut j = 0;
            loop {
                if j == dim {
                    return out;
                }
                digits[j] += 1;
                if digits[j] < order {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
        }
    }

    /// The codeword as a npoints x ell matrix over the base field.
    pub fn codeword_matrix(&self, word: &[u64]) -> MatrixGF {
        let ell = self.ext.degree() as usize;
        let mut m = MatrixGF::zero(self.ext.base().q(), self.npoints, ell);
        for (i, &w) in word.iter().enumerate() {
            for (j, c) in self.ext.coords(w).into_iter().enumerate() {
                if c != 0 {
                    m.set(i, j, c);
                }
            }
        }
        m
    }
}

/// Row space of [I_k | A]; canonical by construction.
pub fn lift(a: &MatrixGF) -> Subspace {
    let k = a.rows();
    let n = k + a.cols();
    let mut m = MatrixGF::zero(a.q(), k, n);
    for i in 0..k {
        m.set(i, i, 1);
        for j in 0..a.cols() {
            let v = a.get(i, j);
            if v != 0 {
                m.set(i, k + j, v);
            }
        }
    }
    Subspace::from_rref_unchecked(m)
}

/// The lifted MRD code: all q^((n-k)(k-delta+1)) lifts of Gabidulin
/// codewords, in message order (parallel classes are the consecutive runs of
/// q^(n-k) codewords).
pub fn lifted_mrd_code(
    q: u64,
    n: usize,
    k: usize,
    delta: usize,
    cap: u128,
) -> Result<ConstantDimensionCode> {
    let ell = n.checked_sub(k).ok_or_else(|| {
        Error::InvalidParameter(format!("k={k} exceeds n={n}"))
    })?;
    if k < 2 || k > ell {
        return Err(Error::InvalidParameter(format!(
            "lifted MRD codes need 2 <= k <= n - k, got k={k}, n={n}"
        )));
    }
    let gab = GabidulinCode::new(q, ell, k, delta)?;
    check_cap("lifted MRD enumeration", gab.message_count(), cap)?;
    let codewords = gab
        .codewords()
        .iter()
        .map(|w| lift(&gab.codeword_matrix(w)))
        .collect();
    Ok(ConstantDimensionCode {
        q,
        n,
        k,
        claimed_d: 2 * delta,
        family: CodeFamily::LiftedMrd,
        codewords,
    })
}

/// How a minimum-distance check traverses codeword pairs.
#[derive(Clone, Copy, Debug)]
pub enum DistanceMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// Result of a distance verification sweep.
#[derive(Clone, Debug)]
pub struct DistanceCheck {
    pub pairs_checked: u128,
    pub min_distance: Option<usize>,
    /// Codeword indices attaining the minimum (smallest such pair).
    pub witness: Option<(usize, usize)>,
    pub pass: bool,
}

/// Flattened generator rows for fast pairwise kernels.
enum FlatCode {
    /// One word per row, k rows per codeword.
    Packed { rows: Vec<u64>, k: usize },
    /// Element indices, k*n entries per codeword.
    Generic { rows: Vec<u16>, k: usize, n: usize },
}

fn flatten(code: &ConstantDimensionCode) -> FlatCode {
    let k = code.k;
    let n = code.n;
    if code.q == 2 && n <= 64 {
        let mut rows = Vec::with_capacity(code.len() * k);
        for s in &code.codewords {
            assert_eq!(s.dim(), k, "not constant dimension");
            for i in 0..k {
                rows.push(s.gen().row_words(i)[0]);
            }
        }
        FlatCode::Packed { rows, k }
    } else {
        let mut rows = Vec::with_capacity(code.len() * k * n);
        for s in &code.codewords {
            assert_eq!(s.dim(), k, "not constant dimension");
            for i in 0..k {
                for j in 0..n {
                    rows.push(s.gen().get(i, j) as u16);
                }
            }
        }
        FlatCode::Generic { rows, k, n }
    }
}

impl FlatCode {
    #[inline]
    fn distance(&self, f: &Field, i: usize, j: usize, scratch: &mut Vec<u16>) -> usize {
        match self {
            FlatCode::Packed { rows, k } => {
                let x = &rows[i * k..(i + 1) * k];
                let y = &rows[j * k..(j + 1) * k];
                2 * (rank_union_gf2(x, y) as usize - k)
            }
            FlatCode::Generic { rows, k, n } => {
                let x = &rows[i * k * n..(i + 1) * k * n];
                let y = &rows[j * k * n..(j + 1) * k * n];
                2 * (rank_union_gen(f, x, y, *n, scratch) as usize - k)
            }
        }
    }
}

/// Verifies the minimum subspace distance of a code, exhaustively or by
/// seeded sampling. Exhaustive sweeps respect `pair_cap` and run in parallel
/// with an order-independent merge, so results are identical for any thread
/// count.
pub fn verify_min_distance(
    f: &Field,
    code: &ConstantDimensionCode,
    mode: DistanceMode,
    pair_cap: u128,
) -> Result<DistanceCheck> {
    let nw = code.len();
    if nw < 2 {
        return Ok(DistanceCheck {
            pairs_checked: 0,
            min_distance: None,
            witness: None,
            pass: true,
        });
    }
    let flat = flatten(code);
    match mode {
        DistanceMode::Exhaustive => {
            let pairs = (nw as u128) * (nw as u128 - 1) / 2;
            check_cap("pairwise distance sweep", pairs, pair_cap)?;
            let best = (0..nw - 1)
                .into_par_iter()
                .map_init(
                    Vec::new,
                    |scratch, i| {
                        let mut local: Option<(usize, usize, usize)> = None;
                        for j in (i + 1)..nw {
                            let d = flat.distance(f, i, j, scratch);
                            let cand = (d, i, j);
                            if local.map_or(true, |b| cand < b) {
                                local = Some(cand);
                            }
                        }
                        local
                    },
                )
                .flatten()
                .min();
            let (d, i, j) = best.expect("at least one pair");
            Ok(DistanceCheck {
                pairs_checked: pairs,
                min_distance: Some(d),
                witness: Some((i, j)),
                pass: d >= code.claimed_d,
            })
        }
        DistanceMode::Sampled { samples, seed } => {
            let mut rng = SplitMix64::new(seed);
            let mut scratch = Vec::new();
            let mut best: Option<(usize, usize, usize)> = None;
            for _ in 0..samples {
                let (i, j) = rng.distinct_pair(nw as u64);
                let d = flat.distance(f, i as usize, j as usize, &mut scratch);
                let cand = (d, i as usize, j as usize);
                if best.map_or(true, |b| cand < b) {
                    best = Some(cand);
                }
            }
            let (d, i, j) = best.expect("samples > 0");
            Ok(DistanceCheck {
                pairs_checked: samples as u128,
                min_distance: Some(d),
                witness: Some((i, j)),
                pass: d >= code.claimed_d,
            })
        }
    }
}

/// Seeded sampling restricted to pairs from different groups (for example,
/// different identifying vectors). Draws are rejected until `samples`
/// cross-group pairs have been checked.
pub fn sampled_cross_group_min_distance(
    f: &Field,
    code: &ConstantDimensionCode,
    groups: &[u32],
    samples: u64,
    seed: u64,
) -> DistanceCheck {
    assert_eq!(groups.len(), code.len());
    let nw = code.len();
    let flat = flatten(code);
    let mut rng = SplitMix64::new(seed);
    let mut scratch = Vec::new();
    let mut best: Option<(usize, usize, usize)> = None;
    let mut accepted = 0u64;
    while accepted < samples {
        let (i, j) = rng.distinct_pair(nw as u64);
        if groups[i as usize] == groups[j as usize] {
            continue;
        }
        accepted += 1;
        let d = flat.distance(f, i as usize, j as usize, &mut scratch);
        let cand = (d, i as usize, j as usize);
        if best.map_or(true, |b| cand < b) {
            best = Some(cand);
        }
    }
    let (d, i, j) = best.expect("samples > 0");
    DistanceCheck {
        pairs_checked: samples as u128,
        min_distance: Some(d),
        witness: Some((i, j)),
        pass: d >= code.claimed_d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::subspace_distance;

    #[test]
    fn gabidulin_is_mrd_small() {
        // (ell=3, npoints=3, delta=2) over GF(2): 64 codewords, min nonzero
        // rank exactly 2.
        let gab = GabidulinCode::new(2, 3, 3, 2).unwrap();
        assert_eq!(gab.message_count(), 64);
        let f = Field::new(2).unwrap();
        let mut min_rank = usize::MAX;
        for (m, w) in gab.codewords().iter().enumerate() {
            let mat = gab.codeword_matrix(w);
            if m == 0 {
                assert!(mat.is_zero());
                continue;
            }
            min_rank = min_rank.min(mat.rank(&f));
        }
        assert_eq!(min_rank, 2);
    }

    #[test]
    fn gabidulin_singleton_sizes() {
        let gab = GabidulinCode::new(3, 4, 3, 2).unwrap();
        assert_eq!(gab.message_count(), 81u128.pow(2));
        assert_eq!(gab.codewords().len() as u128, gab.message_count());
    }

    #[test]
    fn moore_first_row_is_ones() {
        let gab = GabidulinCode::new(2, 4, 3, 2).unwrap();
        // message with a_0 = 1, rest 0 evaluates x at each point: the points
        // themselves 1, x, x^2 (indices 1, 2, 4)
        let w = gab.codeword(1);
        assert_eq!(w, vec![1, 2, 4]);
    }

    #[test]
    fn codeword_matches_enumeration_order() {
        let gab = GabidulinCode::new(2, 3, 2, 1).unwrap();
        let all = gab.codewords();
        for (m, w) in all.iter().enumerate() {
            assert_eq!(&gab.codeword(m as u128), w);
        }
    }

    #[test]
    fn lift_is_canonical_and_distance_doubles() {
        let f = Field::new(2).unwrap();
        let gab = GabidulinCode::new(2, 3, 3, 2).unwrap();
        let words = gab.codewords();
        let mats: Vec<MatrixGF> = words.iter().map(|w| gab.codeword_matrix(w)).collect();
        let lifts: Vec<Subspace> = mats.iter().map(lift).collect();
        for s in &lifts {
            assert_eq!(s.dim(), 3);
            assert_eq!(s.ambient(), 6);
            assert_eq!(s.identifying_vector(), vec![1, 1, 1, 0, 0, 0]);
        }
        // lifting doubles distance, pair by pair
        for i in 0..mats.len() {
            for j in (i + 1)..mats.len() {
                let dr = rank_distance(&f, &mats[i], &mats[j]);
                let ds = subspace_distance(&f, &lifts[i], &lifts[j]);
                assert_eq!(ds, 2 * dr);
            }
        }
    }

    #[test]
    fn lifted_mrd_basic_parameters() {
        let code = lifted_mrd_code(2, 6, 3, 2, 1 << 20).unwrap();
        assert_eq!(code.len(), 64);
        assert_eq!(code.claimed_d, 4);
        let f = Field::new(2).unwrap();
        let check =
            verify_min_distance(&f, &code, DistanceMode::Exhaustive, u128::MAX).unwrap();
        assert_eq!(check.min_distance, Some(4));
        assert!(check.pass);
    }

    #[test]
    fn lifted_mrd_rejects_bad_parameters() {
        assert!(lifted_mrd_code(2, 6, 4, 2, 1 << 20).is_err()); // k > n - k
        assert!(lifted_mrd_code(2, 6, 1, 1, 1 << 20).is_err()); // k < 2
        assert!(lifted_mrd_code(2, 6, 3, 4, 1 << 20).is_err()); // delta > k
    }

    #[test]
    fn exhaustive_and_sampled_agree_on_small_code() {
        let f = Field::new(3).unwrap();
        let code = lifted_mrd_code(3, 4, 2, 1, 1 << 20).unwrap();
        assert_eq!(code.len(), 81);
        let ex = verify_min_distance(&f, &code, DistanceMode::Exhaustive, u128::MAX).unwrap();
        assert_eq!(ex.min_distance, Some(2));
        let sa = verify_min_distance(
            &f,
            &code,
            DistanceMode::Sampled {
                samples: 20_000,
                seed: 5,
            },
            u128::MAX,
        )
        .unwrap();
        // dense sampling of 3240 pairs certainly hits a minimal one
        assert_eq!(sa.min_distance, Some(2));
    }

    #[test]
    fn pair_cap_is_enforced() {
        let f = Field::new(2).unwrap();
        let code = lifted_mrd_code(2, 6, 3, 2, 1 << 20).unwrap();
        assert!(matches!(
            verify_min_distance(&f, &code, DistanceMode::Exhaustive, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn cross_group_sampling_skips_same_group() {
        let f = Field::new(2).unwrap();
        let code = lifted_mrd_code(2, 6, 3, 2, 1 << 20).unwrap();
        // put every codeword in one group except the last: all sampled pairs
        // must involve the last codeword
        let mut groups = vec![0u32; code.len()];
        *groups.last_mut().unwrap() = 1;
        let check = sampled_cross_group_min_distance(&f, &code, &groups, 500, 0);
        assert_eq!(check.pairs_checked, 500);
        let (i, j) = check.witness.unwrap();
        assert!(i == code.len() - 1 || j == code.len() - 1);
    }
}
