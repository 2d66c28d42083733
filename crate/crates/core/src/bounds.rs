//! Upper bounds on the size of constant-dimension codes and the ratios that
//! measure how much of each bound a lifted MRD code (or an extension of one)
//! fills.
//!
//! All quantities are computed in exact arbitrary-precision arithmetic:
//! integer bounds as [`BigUint`], ratios as [`BigRational`]. Decimal output
//! is produced only at print time by [`render_decimal`], so no floating
//! point is accumulated anywhere.
//!
//! The bounds implemented here:
//!
//! * [`johnson_bound`]: an anticode-type bound. A code of dimension-`k`
//!   subspaces of GF(q)^n with subspace distance `2δ` has every pair of
//!   codewords intersecting in dimension less than `t = k − δ + 1`, so each
//!   `t`-dimensional subspace lies in at most one codeword. Counting
//!   `t`-subspaces gives `A_q(n, 2δ, k) ≤ [n,t]_q / [k,t]_q`. The quotient
//!   is usually but not always an integer; [`FlooredBound::exact`] records
//!   divisibility.
//! * [`bound_extension_k_minus_1`]: for codes of minimum distance `2(k−1)`
//!   that contain the lifted MRD code. Codewords outside the lifted code
//!   meet the last `n−k` coordinates in dimension at least `k−1`, and their
//!   traces form a code in GF(q)^{n−k}, giving
//!   `M ≤ q^{2(n−k)} + A_q(n−k, 2(k−2), k−1)`.
//! * [`bound_extension_2k`]: for codes of dimension `2k` and minimum
//!   distance `2k` containing the lifted MRD code,
//!   `M ≤ q^{(n−2k)(k+1)} + [n−2k,k]_q (q^n − q^{n−2k})/(q^{2k} − q^k)
//!   + A_q(n−2k, 2k, 2k)`.
//!
//! The density side:
//!
//! * [`q_delta`]: the infinite product `Q_δ(q) = ∏_{j≥δ} (1 − q^{−j})`,
//!   truncated once a factor differs from 1 by less than 10^{−12}.
//! * [`mrd_ratio`]: lifted MRD size over the Johnson-type bound; always
//!   exceeds `Q_δ(q)` because the finite products telescope in the code's
//!   favour.
//! * [`construction_ratio_limit`]: the limit, as n grows, of the ratio
//!   between `q^{2(n−3)} + [n−3,2]_q` (the size attained by the weight-two
//!   extension of a dimension-3 lifted MRD code) and the Johnson-type
//!   bound. Equals `(q²+q+1)(q(q²−1)(q−1)+1)/q^6`.

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{BigRational, BigUint, One, Zero};

use crate::grassmann::gaussian;
use crate::{Error, Result};

/// An integer bound obtained by flooring a rational expression.
///
/// `exact` is true when the rational value was already an integer, so the
/// floor lost nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlooredBound {
    pub value: BigUint,
    pub exact: bool,
}

/// An upper bound assembled from a main term plus a smaller packing term.
///
/// `exact` is true when every summand is known exactly; false when the
/// packing term had to be replaced by its own Johnson-type upper bound, in
/// which case the total is still a valid upper bound but not tight against
/// the underlying counting argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionBound {
    pub value: BigUint,
    pub exact: bool,
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("q = {q} must be at least 2")));
    }
    Ok(())
}

/// Anticode-type upper bound on `A_q(n, 2δ, k)`: floor of
/// `[n, k−δ+1]_q / [k, k−δ+1]_q`, with a divisibility flag.
///
/// Requires `1 ≤ δ ≤ k ≤ n`.
pub fn johnson_bound(q: u64, n: usize, k: usize, delta: usize) -> Result<FlooredBound> {
    check_q(q)?;
    if delta == 0 || delta > k || k > n {
        return Err(Error::InvalidParameter(format!(
            "johnson bound needs 1 <= delta <= k <= n, got n={n} k={k} delta={delta}"
        )));
    }
    let t = (k - delta + 1) as u64;
    let num = gaussian(n as u64, t, q);
    let den = gaussian(k as u64, t, q);
    let value = &num / &den;
    let exact = (&num % &den).is_zero();
    Ok(FlooredBound { value, exact })
}

/// Number of subspaces in a lifted MRD code of dimension-`k` subspaces of
/// GF(q)^n with subspace distance `2δ`: `q^{(n−k)(k−δ+1)}`.
///
/// Requires `1 ≤ δ ≤ k ≤ n−k` (the rank-metric code is `k × (n−k)` and
/// Singleton-optimal only when `k` is the shorter side).
pub fn lifted_mrd_size(q: u64, n: usize, k: usize, delta: usize) -> Result<BigUint> {
    check_q(q)?;
    if delta == 0 || delta > k || 2 * k > n {
        return Err(Error::InvalidParameter(format!(
            "lifted MRD size needs 1 <= delta <= k <= n-k, got n={n} k={k} delta={delta}"
        )));
    }
    Ok(BigUint::from(q).pow(((n - k) * (k - delta + 1)) as u32))
}

/// Truncation threshold for [`q_delta`]: factors `1 − q^{−j}` are dropped
/// once `q^j` exceeds this, i.e. once they differ from 1 by less than
/// 10^{−12}. The dropped tail shrinks the product by less than 2·10^{−12}
/// for q ≥ 2, so four printed decimals are always correct.
const Q_DELTA_CUTOFF: u64 = 1_000_000_000_000;

/// The truncated infinite product `Q_δ(q) = ∏_{j≥δ} (1 − q^{−j})` as an
/// exact rational. Requires `q ≥ 2`, `δ ≥ 1`.
pub fn q_delta(q: u64, delta: usize) -> Result<BigRational> {
    check_q(q)?;
    if delta == 0 {
        return Err(Error::InvalidParameter(
            "q_delta needs delta >= 1; the j = 0 factor would vanish".into(),
        ));
    }
    let mut acc = BigRational::one();
    let mut power = BigUint::from(q).pow(delta as u32);
    let cutoff = BigUint::from(Q_DELTA_CUTOFF);
    while power <= cutoff {
        let num = BigInt::from(&power - 1u32);
        let den = BigInt::from(power.clone());
        acc *= Ratio::new(num, den);
        power *= q;
    }
    Ok(acc)
}

/// Ratio of the lifted MRD code size to the Johnson-type bound, as an exact
/// rational. Requires `1 ≤ δ ≤ k ≤ n−k`.
///
/// The ratio always exceeds `Q_δ(q)`: writing both sides as products of
/// terms `1 − q^{−j}` shows the finite quotient dominates the infinite one.
/// This is asserted on every call.
pub fn mrd_ratio(q: u64, n: usize, k: usize, delta: usize) -> Result<BigRational> {
    let mrd = lifted_mrd_size(q, n, k, delta)?;
    let bound = johnson_bound(q, n, k, delta)?;
    let ratio = Ratio::new(BigInt::from(mrd), BigInt::from(bound.value));
    let floor = q_delta(q, delta)?;
    assert!(
        ratio > floor,
        "density ratio fell below its guaranteed floor at q={q} n={n} k={k} delta={delta}"
    );
    Ok(ratio)
}

/// Upper bound on codes of dimension `k ≥ 3` and minimum subspace distance
/// `2(k−1)` that contain the lifted MRD code:
/// `q^{2(n−k)} + A_q(n−k, 2(k−2), k−1)`.
///
/// For `k = 3` the packing term is `A_q(n−3, 2, 2)`: distance 2 is no
/// constraint between distinct subspaces, so the term is the full count
/// `[n−3, 2]_q` and the bound is exact. For `k > 3` the term is replaced by
/// its Johnson-type bound and the result is flagged inexact.
pub fn bound_extension_k_minus_1(q: u64, n: usize, k: usize) -> Result<ExtensionBound> {
    check_q(q)?;
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "the distance-2(k-1) extension bound needs k >= 3, got k={k}"
        )));
    }
    if n + 1 < 2 * k {
        return Err(Error::InvalidParameter(format!(
            "the distance-2(k-1) extension bound needs n >= 2k-1, got n={n} k={k}"
        )));
    }
    let main = BigUint::from(q).pow((2 * (n - k)) as u32);
    let tail = johnson_bound(q, n - k, k - 1, k - 2)?;
    Ok(ExtensionBound {
        value: main + tail.value,
        exact: k == 3,
    })
}

/// Upper bound on codes of dimension `2k` and minimum subspace distance `2k`
/// that contain the lifted MRD code:
/// `q^{(n−2k)(k+1)} + [n−2k,k]_q (q^n − q^{n−2k})/(q^{2k} − q^k)
/// + A_q(n−2k, 2k, 2k)`.
///
/// Requires `k ≥ 1` and `n ≥ 3k` (so the middle quotient is the integer
/// `q^{n−3k}(q^k + 1)`). The packing term is 0 when `n − 2k < 2k` (no
/// subspaces of that dimension exist), 1 when `n − 2k = 2k` (only the whole
/// space), and otherwise is replaced by its Johnson-type bound with the
/// result flagged inexact.
pub fn bound_extension_2k(q: u64, n: usize, k: usize) -> Result<ExtensionBound> {
    check_q(q)?;
    if k == 0 || n < 3 * k {
        return Err(Error::InvalidParameter(format!(
            "the dimension-2k extension bound needs k >= 1 and n >= 3k, got n={n} k={k}"
        )));
    }
    let qb = BigUint::from(q);
    let main = qb.pow(((n - 2 * k) * (k + 1)) as u32);
    let middle =
        gaussian((n - 2 * k) as u64, k as u64, q) * qb.pow((n - 3 * k) as u32) * (qb.pow(k as u32) + 1u32);
    let (tail, exact) = if n - 2 * k < 2 * k {
        (BigUint::zero(), true)
    } else if n - 2 * k == 2 * k {
        (BigUint::one(), true)
    } else {
        (johnson_bound(q, n - 2 * k, 2 * k, k)?.value, false)
    };
    Ok(ExtensionBound {
        value: main + middle + tail,
        exact,
    })
}

/// Limit of the ratio between the weight-two extension size
/// `q^{2(n−3)} + [n−3, 2]_q` and the Johnson-type bound for dimension-3
/// codes with distance 4, as n grows:
/// `(q² + q + 1)(q(q² − 1)(q − 1) + 1) / q^6`.
pub fn construction_ratio_limit(q: u64) -> Result<BigRational> {
    check_q(q)?;
    let q = BigInt::from(q);
    let q2 = &q * &q;
    let num = (&q2 + &q + 1) * (&q * (&q2 - 1) * (&q - 1) + 1);
    let den = q.pow(6);
    Ok(Ratio::new(num, den))
}

/// One row of the bound comparison: the Johnson-type bound, the lifted MRD
/// size and density ratio, plus whichever of the two extension bounds
/// applies to codes with exactly these parameters.
///
/// `thm_a` is present when the parameters describe a dimension-`k ≥ 3` code
/// of distance `2(k−1)` (`δ = k−1`); `thm_b` when they describe a
/// dimension-`2δ` code of distance `2δ` (`k = 2δ`) with `n` large enough.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub johnson: FlooredBound,
    pub mrd_size: BigUint,
    pub ratio: BigRational,
    pub thm_a: Option<ExtensionBound>,
    pub thm_b: Option<ExtensionBound>,
}

/// Assemble the full [`BoundReport`] for one parameter point.
/// Requires `1 ≤ δ ≤ k ≤ n−k`.
pub fn bound_report(q: u64, n: usize, k: usize, delta: usize) -> Result<BoundReport> {
    let johnson = johnson_bound(q, n, k, delta)?;
    let mrd_size = lifted_mrd_size(q, n, k, delta)?;
    let ratio = mrd_ratio(q, n, k, delta)?;
    let thm_a = if k >= 3 && delta == k - 1 {
        Some(bound_extension_k_minus_1(q, n, k)?)
    } else {
        None
    };
    let thm_b = if k == 2 * delta && n >= 3 * delta {
        Some(bound_extension_2k(q, n, delta)?)
    } else {
        None
    };
    Ok(BoundReport {
        q,
        n,
        k,
        delta,
        johnson,
        mrd_size,
        ratio,
        thm_a,
        thm_b,
    })
}

/// Render an exact rational as a decimal string with `places` digits after
/// the point, rounding half away from zero. Negative values keep their sign.
pub fn render_decimal(x: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = x * Ratio::from_integer(scale.clone());
    let num = scaled.numer();
    let den = scaled.denom();
    let (quot, rem) = (num / den, num % den);
    let mut units = quot;
    if &(rem.magnitude() * 2u32) >= den.magnitude() {
        if num.sign() == num::bigint::Sign::Minus {
            units -= 1;
        } else {
            units += 1;
        }
    }
    let negative = units.sign() == num::bigint::Sign::Minus;
    let mag = units.magnitude();
    let int_part = mag / scale.magnitude();
    let frac_part = mag % scale.magnitude();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        out.push('.');
        let frac = frac_part.to_string();
        for _ in frac.len()..places as usize {
            out.push('0');
        }
        out.push_str(&frac);
    }
    out
}
