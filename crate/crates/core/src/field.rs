//! Finite fields GF(q) and their extensions GF(q^m).
//!
//! Elements are canonical `u64` indices. For GF(p^e) the index is read as
//! little-endian radix-p digits giving the coefficients of the element on the
//! polynomial basis 1, x, x^2, ...; for a prime field the index is just the
//! residue. The same convention is applied one level up: an element of
//! GF(q^m) has an index whose little-endian radix-q digits are its
//! coordinates over GF(q).
//!
//! Extension arithmetic needs an irreducible modulus, and the modulus choice
//! changes element indices, so reproducible builds need a frozen choice. The
//! [`MODULI`] table pins the lexicographically smallest monic irreducible
//! polynomial (by the index encoding above) for every q in {2,3,4,5,7,8,9}
//! and every degree 2..=16; a unit test re-verifies irreducibility of each
//! entry. Parameters outside the table fall back to the same smallest-first
//! deterministic search at construction time, so they are reproducible too,
//! just slower to set up.

use crate::{Error, Result};

/// A prime power q = p^e with 2 <= q <= 65536.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self> {
        if !(2..=65536).contains(&q) {
            return Err(Error::NotPrimePower(q));
        }
        let mut n = q;
        let mut p = 0u64;
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                p = d;
                break;
            }
            d += 1;
        }
        if p == 0 {
            p = n; // q itself is prime
        }
        let mut e = 0u32;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if n != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Ok(PrimePower { p, e, q })
    }
}

/// GF(q) for a prime power q. Multiplication and inversion are table-driven
/// for q <= 256 and computed digit-wise above that.
#[derive(Clone, Debug)]
pub struct Field {
    pp: PrimePower,
    /// Monic modulus over GF(p), little-endian, length e+1. Empty when e = 1.
    modulus: Vec<u64>,
    mul_table: Vec<u16>,
    inv_table: Vec<u16>,
}

const TABLE_LIMIT: u64 = 256;

impl Field {
    pub fn new(q: u64) -> Result<Field> {
        let pp = PrimePower::new(q)?;
        let modulus = if pp.e == 1 {
            Vec::new()
        } else {
            let prime = Field::prime(pp.p);
            modulus_for(&prime, pp.e)?
        };
        let mut f = Field {
            pp,
            modulus,
            mul_table: Vec::new(),
            inv_table: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            let q = q as usize;
            let mut mul = vec![0u16; q * q];
            for a in 0..q as u64 {
                for b in a..q as u64 {
                    let v = f.mul_raw(a, b) as u16;
                    mul[(a * q as u64 + b) as usize] = v;
                    mul[(b * q as u64 + a) as usize] = v;
                }
            }
            let mut inv = vec![0u16; q];
            for a in 1..q as u64 {
                inv[a as usize] = f.pow_raw(a, f.pp.q - 2) as u16;
            }
            f.mul_table = mul;
            f.inv_table = inv;
        }
        Ok(f)
    }

    fn prime(p: u64) -> Field {
        Field {
            pp: PrimePower { p, e: 1, q: p },
            modulus: Vec::new(),
            mul_table: Vec::new(),
            inv_table: Vec::new(),
        }
    }

    pub fn q(&self) -> u64 {
        self.pp.q
    }

    pub fn characteristic(&self) -> u64 {
        self.pp.p
    }

    pub fn degree_over_prime(&self) -> u32 {
        self.pp.e
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.pp.q && b < self.pp.q);
        if self.pp.e == 1 {
            let s = a + b;
            if s >= self.pp.p {
                s - self.pp.p
            } else {
                s
            }
        } else if self.pp.p == 2 {
            a ^ b
        } else {
            let p = self.pp.p;
            let (mut a, mut b) = (a, b);
            let mut out = 0u64;
            let mut shift = 1u64;
            for _ in 0..self.pp.e {
                let s = (a % p + b % p) % p;
                out += s * shift;
                shift *= p;
                a /= p;
                b /= p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.pp.q);
        if self.pp.p == 2 {
            return a;
        }
        if self.pp.e == 1 {
            if a == 0 {
                0
            } else {
                self.pp.p - a
            }
        } else {
            let p = self.pp.p;
            let mut a = a;
            let mut out = 0u64;
            let mut shift = 1u64;
            for _ in 0..self.pp.e {
                let d = a % p;
                out += if d == 0 { 0 } else { p - d } * shift;
                shift *= p;
                a /= p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.pp.q && b < self.pp.q);
        if !self.mul_table.is_empty() {
            self.mul_table[(a * self.pp.q + b) as usize] as u64
        } else {
            self.mul_raw(a, b)
        }
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        if self.pp.e == 1 {
            return a * b % self.pp.p;
        }
        let p = self.pp.p;
        let e = self.pp.e as usize;
        let da = digits(a, p, e);
        let db = digits(b, p, e);
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x != 0 {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
        }
        // reduce by the monic modulus over GF(p)
        for i in (e..prod.len()).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for j in 0..e {
                    let t = c * self.modulus[j] % p;
                    prod[i - e + j] = (prod[i - e + j] + p - t) % p;
                }
            }
        }
        undigits(&prod[..e], p)
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        if !self.inv_table.is_empty() {
            self.inv_table[a as usize] as u64
        } else {
            self.pow_raw(a, self.pp.q - 2)
        }
    }

    pub fn pow(&self, a: u64, mut exp: u64) -> u64 {
        if exp == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let mut base = a;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn pow_raw(&self, a: u64, mut exp: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            exp >>= 1;
        }
        acc
    }
}

#[inline]
fn digits(mut a: u64, p: u64, e: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(e);
    for _ in 0..e {
        d.push(a % p);
        a /= p;
    }
    d
}

#[inline]
fn undigits(d: &[u64], p: u64) -> u64 {
    let mut a = 0u64;
    for &x in d.iter().rev() {
        a = a * p + x;
    }
    a
}

// ---------------------------------------------------------------------------
// Polynomials over a Field, little-endian coefficient slices of element
// indices. Used for modulus validation, the deterministic modulus search and
// extension-field arithmetic.
// ---------------------------------------------------------------------------

fn poly_trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

/// Remainder of f modulo the monic polynomial m (in place on a copy).
fn poly_mod(fld: &Field, f: &[u64], m: &[u64]) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut f = f.to_vec();
    for i in (dm..f.len()).rev() {
        let c = f[i];
        if c != 0 {
            f[i] = 0;
            for j in 0..dm {
                let t = fld.mul(c, m[j]);
                f[i - dm + j] = fld.sub(f[i - dm + j], t);
            }
        }
    }
    f.truncate(dm.min(f.len()));
    poly_trim(&mut f);
    f
}

fn poly_mulmod(fld: &Field, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x != 0 {
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = fld.add(prod[i + j], fld.mul(x, y));
                }
            }
        }
    }
    poly_mod(fld, &prod, m)
}

fn poly_powmod(fld: &Field, base: &[u64], mut exp: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = poly_mod(fld, base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mulmod(fld, &acc, &base, m);
        }
        base = poly_mulmod(fld, &base, &base, m);
        exp >>= 1;
    }
    acc
}

fn poly_sub(fld: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = fld.sub(x, y);
    }
    poly_trim(&mut out);
    out
}

fn poly_gcd(fld: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // make b monic before reducing
        let lead = *b.last().unwrap();
        if lead != 1 {
            let il = fld.inv(lead);
            for c in b.iter_mut() {
                *c = fld.mul(*c, il);
            }
        }
        let r = poly_mod(fld, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin irreducibility test for a monic polynomial over GF(q).
/// Degree-1 polynomials are irreducible by definition.
pub fn is_irreducible(fld: &Field, f: &[u64]) -> bool {
    let m = f.len() - 1;
    if m == 0 || *f.last().unwrap() != 1 {
        return false;
    }
    if m == 1 {
        return true;
    }
    let x = [0u64, 1];
    let qm = match fld.q().checked_pow(m as u32) {
        Some(v) => v,
        None => return false, // out of supported index range
    };
    let t = poly_powmod(fld, &x, qm, f);
    if t != x {
        return false;
    }
    for d in prime_divisors(m as u64) {
        let sub = fld.q().pow((m as u64 / d) as u32);
        let t = poly_powmod(fld, &x, sub, f);
        let g = poly_gcd(fld, &poly_sub(fld, &t, &x), f);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Smallest-index monic irreducible polynomial of degree m over GF(q), where
/// the index of x^m + sum c_j x^j is the little-endian radix-q value of
/// (c_0, ..., c_{m-1}).
pub fn search_modulus(fld: &Field, m: u32) -> Result<Vec<u64>> {
    if m == 1 {
        return Ok(vec![0, 1]);
    }
    let q = fld.q();
    let total = (q as u128).checked_pow(m).ok_or_else(|| {
        Error::InvalidParameter(format!("q^m overflows for q={q}, m={m}"))
    })?;
    let mut idx: u128 = 1; // constant term must be nonzero
    while idx < total {
        if idx % q as u128 == 0 {
            idx += 1;
            continue;
        }
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut t = idx;
        for _ in 0..m {
            f.push((t % q as u128) as u64);
            t /= q as u128;
        }
        f.push(1);
        if is_irreducible(fld, &f) {
            return Ok(f);
        }
        idx += 1;
    }
    Err(Error::InvalidParameter(format!(
        "no irreducible polynomial of degree {m} over GF({q})"
    )))
}

fn modulus_for(fld: &Field, m: u32) -> Result<Vec<u64>> {
    if m == 1 {
        return Ok(vec![0, 1]);
    }
    for &(q, deg, coeffs) in MODULI {
        if q == fld.q() && deg == m {
            return Ok(coeffs.to_vec());
        }
    }
    search_modulus(fld, m)
}

/// GF(q^m) on top of a base GF(q), with elements indexed by little-endian
/// radix-q coordinate vectors over the polynomial basis 1, x, ..., x^(m-1).
#[derive(Clone, Debug)]
pub struct ExtField {
    base: Field,
    m: u32,
    /// Monic irreducible modulus over the base field, length m+1.
    modulus: Vec<u64>,
    order: u64,
}

impl ExtField {
    pub fn new(q: u64, m: u32) -> Result<ExtField> {
        let base = Field::new(q)?;
        let modulus = modulus_for(&base, m)?;
        ExtField::with_modulus(base, modulus)
    }

    /// Builds the extension from an explicit monic modulus, validating it.
    pub fn with_modulus(base: Field, modulus: Vec<u64>) -> Result<ExtField> {
        if modulus.len() < 2 {
            return Err(Error::InvalidParameter(
                "extension modulus must have degree >= 1".into(),
            ));
        }
        let m = (modulus.len() - 1) as u32;
        if modulus.iter().any(|&c| c >= base.q()) {
            return Err(Error::InvalidParameter(
                "modulus coefficient out of range".into(),
            ));
        }
        if m > 1 && !is_irreducible(&base, &modulus) {
            return Err(Error::InvalidParameter(format!(
                "modulus is reducible over GF({})",
                base.q()
            )));
        }
        let order = (base.q() as u128).checked_pow(m).and_then(|v| {
            if v <= (1u128 << 63) {
                Some(v as u64)
            } else {
                None
            }
        });
        let order = order.ok_or_else(|| {
            Error::InvalidParameter(format!("q^m out of range for q={}, m={m}", base.q()))
        })?;
        Ok(ExtField {
            base,
            m,
            modulus,
            order,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Index of the polynomial-basis element x^j.
    pub fn basis_element(&self, j: u32) -> u64 {
        debug_assert!(j < self.m);
        self.base.q().pow(j)
    }

    pub fn coords(&self, a: u64) -> Vec<u64> {
        debug_assert!(a < self.order);
        digits(a, self.base.q(), self.m as usize)
    }

    pub fn from_coords(&self, c: &[u64]) -> u64 {
        debug_assert_eq!(c.len(), self.m as usize);
        undigits(c, self.base.q())
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.base.q() == 2 {
            return a ^ b;
        }
        let q = self.base.q();
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut shift = 1u64;
        for _ in 0..self.m {
            out += self.base.add(a % q, b % q) * shift;
            shift *= q;
            a /= q;
            b /= q;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.base.characteristic() == 2 {
            return a;
        }
        let q = self.base.q();
        let mut a = a;
        let mut out = 0u64;
        let mut shift = 1u64;
        for _ in 0..self.m {
            out += self.base.neg(a % q) * shift;
            shift *= q;
            a /= q;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let ca = self.coords(a);
        let cb = self.coords(b);
        self.from_coords(&self.mul_coords(&ca, &cb))
    }

    /// Product of two coordinate vectors (length m), reduced by the modulus.
    pub fn mul_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let m = self.m as usize;
        let fld = &self.base;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x != 0 {
                for (j, &y) in b.iter().enumerate() {
                    if y != 0 {
                        prod[i + j] = fld.add(prod[i + j], fld.mul(x, y));
                    }
                }
            }
        }
        for i in (m..prod.len()).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for j in 0..m {
                    let t = fld.mul(c, self.modulus[j]);
                    prod[i - m + j] = fld.sub(prod[i - m + j], t);
                }
            }
        }
        prod.truncate(m);
        prod
    }

    /// acc += x, coefficientwise on coordinate vectors.
    #[inline]
    pub fn add_assign_coords(&self, acc: &mut [u64], x: &[u64]) {
        let fld = &self.base;
        for (a, &b) in acc.iter_mut().zip(x.iter()) {
            *a = fld.add(*a, b);
        }
    }

    pub fn pow(&self, a: u64, mut exp: u64) -> u64 {
        if exp == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let mut base = a;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.order - 2)
    }

    /// The i-th Frobenius power a^(q^i).
    pub fn frobenius(&self, a: u64, i: u32) -> u64 {
        let mut out = a;
        for _ in 0..(i % self.m) {
            out = self.pow(out, self.base.q());
        }
        out
    }
}

/// Frozen table of smallest-index monic irreducible polynomials, little-endian
/// coefficients (element indices of the ground field), constant term first.
const MODULI: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 14, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (3, 7, &[2, 0, 1, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 0, 1, 0, 0, 0, 0, 0, 1]),
    (3, 9, &[1, 0, 1, 2, 0, 0, 0, 0, 0, 1]),
    (3, 10, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 11, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 12, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 13, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 14, &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 15, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 16, &[1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (4, 2, &[2, 1, 1]),
    (4, 3, &[2, 0, 0, 1]),
    (4, 4, &[1, 2, 1, 0, 1]),
    (4, 5, &[2, 1, 0, 0, 0, 1]),
    (4, 6, &[2, 1, 1, 0, 0, 0, 1]),
    (4, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (4, 8, &[2, 1, 0, 1, 0, 0, 0, 0, 1]),
    (4, 9, &[2, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (4, 10, &[3, 0, 2, 1, 0, 0, 0, 0, 0, 0, 1]),
    (4, 11, &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (4, 12, &[1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (4, 13, &[1, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (4, 14, &[1, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (4, 15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (4, 16, &[2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (5, 3, &[1, 1, 0, 1]),
    (5, 4, &[2, 0, 0, 0, 1]),
    (5, 5, &[1, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (5, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (5, 8, &[2, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 9, &[3, 2, 1, 0, 0, 0, 0, 0, 0, 1]),
    (5, 10, &[3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 11, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 12, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 13, &[2, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 14, &[2, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 15, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 16, &[2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 2, &[1, 0, 1]),
    (7, 3, &[2, 0, 0, 1]),
    (7, 4, &[1, 1, 0, 0, 1]),
    (7, 5, &[3, 1, 0, 0, 0, 1]),
    (7, 6, &[2, 0, 0, 0, 0, 0, 1]),
    (7, 7, &[1, 6, 0, 0, 0, 0, 0, 1]),
    (7, 8, &[3, 1, 0, 0, 0, 0, 0, 0, 1]),
    (7, 9, &[2, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 10, &[3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 11, &[3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 12, &[2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 13, &[3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 14, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 15, &[6, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 16, &[3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 2, &[1, 1, 1]),
    (8, 3, &[2, 1, 0, 1]),
    (8, 4, &[1, 1, 0, 0, 1]),
    (8, 5, &[1, 0, 1, 0, 0, 1]),
    (8, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (8, 7, &[2, 0, 0, 0, 0, 0, 0, 1]),
    (8, 8, &[3, 2, 0, 1, 0, 0, 0, 0, 1]),
    (8, 9, &[3, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 10, &[1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 12, &[3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 13, &[3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 14, &[6, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 15, &[1, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 16, &[5, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (9, 2, &[4, 0, 1]),
    (9, 3, &[3, 1, 0, 1]),
    (9, 4, &[4, 0, 0, 0, 1]),
    (9, 5, &[4, 1, 0, 0, 0, 1]),
    (9, 6, &[4, 0, 1, 0, 0, 0, 1]),
    (9, 7, &[4, 1, 0, 0, 0, 0, 0, 1]),
    (9, 8, &[4, 0, 0, 0, 0, 0, 0, 0, 1]),
    (9, 9, &[3, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (9, 10, &[5, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (9, 11, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (9, 12, &[3, 4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (9, 13, &[4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (9, 14, &[3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (9, 15, &[2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (9, 16, &[4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
];
