//! Exact arithmetic in GF(p^κ) with a deterministic canonical element encoding.
//!
//! Field descriptions are interned per process: constructing the same
//! (p, κ) twice yields the same `&'static FieldParams`, so [`Field`] and
//! [`FieldElement`] are `Copy` and element arithmetic never touches shared
//! state. Elements are coefficient vectors over GF(p) reduced by a fixed
//! modulus polynomial; the modulus is the lexicographically smallest monic
//! irreducible of the requested degree, so the same (p, κ) always yields
//! the same field. The integer encoding `Σ coeffs[i]·p^i` is a bijection
//! onto `0..q-1` and defines the element ordering used everywhere else in
//! the crate.

use std::fmt;
use std::sync::Mutex;

use crate::error::Error;

/// Hard upper bound on the field order: fields above 2^20 elements are rejected.
pub const MAX_ORDER: u64 = 1 << 20;

/// Largest extension degree reachable within [`MAX_ORDER`] (p = 2, κ = 20).
const MAX_KAPPA: usize = 20;

/// Immutable description of a finite field GF(p^κ).
///
/// `modulus` is stored low degree first with the monic leading coefficient
/// included; prime fields carry the placeholder `λ` (coefficients `[0, 1]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldParams {
    p: u64,
    kappa: u32,
    q: u64,
    modulus: Vec<u64>,
}

impl FieldParams {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// JSON form `{p, kappa, modulus: [c0..cκ]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p,
            "kappa": self.kappa,
            "modulus": self.modulus,
        })
    }
}

/// Interned field descriptions, one per distinct (p, κ) in the process.
static REGISTRY: Mutex<Vec<&'static FieldParams>> = Mutex::new(Vec::new());

fn find_interned(p: u64, kappa: u32) -> Option<&'static FieldParams> {
    REGISTRY
        .lock()
        .expect("field registry lock")
        .iter()
        .find(|f| f.p == p && f.kappa == kappa)
        .copied()
}

/// Shared handle to an interned finite field.
#[derive(Debug, Clone, Copy)]
pub struct Field {
    params: &'static FieldParams,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.params, other.params) || self.params == other.params
    }
}

impl Eq for Field {}

impl Field {
    /// Construct GF(p^κ) with the deterministic smallest modulus.
    pub fn new(p: u64, kappa: u32) -> Result<Field, Error> {
        if kappa == 0 {
            return Err(Error::InvalidDegree);
        }
        if p < 2 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = checked_pow(p, kappa).ok_or(Error::TooLarge(u64::MAX))?;
        if q > MAX_ORDER {
            return Err(Error::TooLarge(q));
        }
        if let Some(params) = find_interned(p, kappa) {
            return Ok(Field { params });
        }
        // The modulus search can be slow for large q; run it outside the
        // lock and re-check before inserting.
        let modulus = if kappa == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, kappa)
        };
        let mut registry = REGISTRY.lock().expect("field registry lock");
        if let Some(params) = registry.iter().find(|f| f.p == p && f.kappa == kappa) {
            return Ok(Field { params });
        }
        let params: &'static FieldParams = Box::leak(Box::new(FieldParams {
            p,
            kappa,
            q,
            modulus,
        }));
        registry.push(params);
        Ok(Field { params })
    }

    /// Construct the field of order q, factoring q as a prime power.
    pub fn from_order(q: u64) -> Result<Field, Error> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = (2..=q)
            .find(|d| q.is_multiple_of(*d))
            .expect("q >= 2 has a divisor");
        let mut rest = q;
        let mut kappa = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            kappa += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Field::new(p, kappa)
    }

    pub fn params(&self) -> &'static FieldParams {
        self.params
    }

    pub fn p(&self) -> u64 {
        self.params.p
    }

    pub fn kappa(&self) -> u32 {
        self.params.kappa
    }

    pub fn q(&self) -> u64 {
        self.params.q
    }

    pub fn char_two(&self) -> bool {
        self.params.p == 2
    }

    /// Guard for boundaries that accept caller-supplied elements.
    pub fn ensure_same(&self, other: &Field) -> Result<(), Error> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: *self,
            coeffs: [0; MAX_KAPPA],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Embed an integer through the prime subfield (n mod p as a constant).
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.params.p as i64;
        let mut coeffs = [0u32; MAX_KAPPA];
        coeffs[0] = n.rem_euclid(p) as u32;
        FieldElement {
            field: *self,
            coeffs,
        }
    }

    /// Inverse of [`FieldElement::encode`]: base-p digits of n, low degree first.
    pub fn decode(&self, n: u64) -> Result<FieldElement, Error> {
        if n >= self.params.q {
            return Err(Error::OutOfRange {
                n,
                q: self.params.q,
            });
        }
        let mut coeffs = [0u32; MAX_KAPPA];
        let mut rest = n;
        for slot in coeffs.iter_mut().take(self.params.kappa as usize) {
            *slot = (rest % self.params.p) as u32;
            rest /= self.params.p;
        }
        Ok(FieldElement {
            field: *self,
            coeffs,
        })
    }

    /// All q elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        let field = *self;
        (0..field.q()).map(move |n| field.decode(n).expect("in range"))
    }

    /// True iff z² + a·z + 1 has no root in the field (exhaustive scan).
    pub fn quadratic_is_irreducible(&self, a: &FieldElement) -> bool {
        let one = self.one();
        self.elements()
            .all(|z| !(((z * z) + (a * z)) + one).is_zero())
    }
}

/// An element of GF(p^κ), tied to its field.
#[derive(Clone, Copy)]
pub struct FieldElement {
    field: Field,
    coeffs: [u32; MAX_KAPPA],
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.encode().hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈GF({})", self.encode(), self.field.q())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical integer encoding Σ coeffs[i]·p^i.
    pub fn encode(&self) -> u64 {
        let p = self.field.p();
        let k = self.field.kappa() as usize;
        let mut acc = 0u64;
        for i in (0..k).rev() {
            acc = acc * p + self.coeffs[i] as u64;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(self.field == other.field, "{}", Error::FieldMismatch);
    }

    fn binop(&self, rhs: &FieldElement, f: impl Fn(u64, u64, u64) -> u64) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.field.p();
        let mut out = *self;
        for i in 0..self.field.kappa() as usize {
            out.coeffs[i] = f(self.coeffs[i] as u64, rhs.coeffs[i] as u64, p) as u32;
        }
        out
    }

    pub fn try_add(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.field.ensure_same(&rhs.field)?;
        Ok(self + rhs)
    }

    pub fn try_sub(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.field.ensure_same(&rhs.field)?;
        Ok(self - rhs)
    }

    pub fn try_mul(&self, rhs: &FieldElement) -> Result<FieldElement, Error> {
        self.field.ensure_same(&rhs.field)?;
        Ok(self * rhs)
    }

    fn mul_impl(&self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.field.p();
        let k = self.field.kappa() as usize;
        let modulus = self.field.params.modulus.as_slice();

        // Schoolbook product; terms stay below 2^45 so one reduction at the
        // end of accumulation is exact.
        let mut buf = [0u64; 2 * MAX_KAPPA - 1];
        for (i, &ac) in self.coeffs.iter().enumerate().take(k) {
            let a = ac as u64;
            if a == 0 {
                continue;
            }
            for j in 0..k {
                buf[i + j] += a * rhs.coeffs[j] as u64;
            }
        }
        for v in buf.iter_mut().take(2 * k - 1) {
            *v %= p;
        }
        // λ^κ ≡ -(m_0 + m_1 λ + ... + m_{κ-1} λ^{κ-1})
        for i in (k..2 * k - 1).rev() {
            let c = buf[i];
            if c == 0 {
                continue;
            }
            buf[i] = 0;
            for j in 0..k {
                buf[i - k + j] = (buf[i - k + j] + (p - modulus[j]) * c) % p;
            }
        }
        let mut out = self.field.zero();
        for (slot, &v) in out.coeffs.iter_mut().zip(buf.iter()).take(k) {
            *slot = v as u32;
        }
        out
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut result = self.field.one();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base;
            }
            base = base * base;
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse by extended Euclid on the coefficient
    /// polynomial and the field modulus.
    pub fn inv(&self) -> Result<FieldElement, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.field.q()));
        }
        let p = self.field.p();
        if self.field.kappa() == 1 {
            let mut out = self.field.zero();
            out.coeffs[0] = int_inv(self.coeffs[0] as u64, p) as u32;
            return Ok(out);
        }

        let k = self.field.kappa() as usize;
        let mut r0 = self.field.params.modulus.clone();
        let mut r1: Vec<u64> = self.coeffs[..k].iter().map(|&c| c as u64).collect();
        poly_trim(&mut r1);
        // Bezout coefficients of `self`: r_i = s_i·self + t_i·modulus.
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (quot, rem) = poly_divmod(&r0, &r1, p);
            let s_next = poly_sub(&s0, &poly_mul(&quot, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s_next);
        }
        debug_assert_eq!(r0.len(), 1, "gcd with an irreducible modulus is a unit");
        let scale = int_inv(r0[0], p);
        let mut inv_poly: Vec<u64> = s0.iter().map(|&c| c * scale % p).collect();
        inv_poly = poly_divmod(&inv_poly, &self.field.params.modulus, p).1;
        let mut out = self.field.zero();
        for (i, &c) in inv_poly.iter().enumerate() {
            out.coeffs[i] = c as u32;
        }
        Ok(out)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $f:expr) => {
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                $f(self, rhs)
            }
        }
        impl std::ops::$trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                $f(self, &rhs)
            }
        }
        impl std::ops::$trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                $f(&self, rhs)
            }
        }
        impl std::ops::$trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                $f(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &FieldElement, b: &FieldElement| a
    .binop(b, |x, y, p| (x + y) % p));
forward_binop!(Sub, sub, |a: &FieldElement, b: &FieldElement| a
    .binop(b, |x, y, p| (x + p - y) % p));
forward_binop!(Mul, mul, |a: &FieldElement, b: &FieldElement| a.mul_impl(b));

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.p();
        let mut out = *self;
        for c in out.coeffs.iter_mut().take(self.field.kappa() as usize) {
            *c = ((p - *c as u64) % p) as u32;
        }
        out
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(p: u64, kappa: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..kappa {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Inverse of a mod p by extended Euclid; requires 0 < a < p, p prime.
fn int_inv(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (s0, s1) = (s1, s0 - quot * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i64) as u64
}

// -- dense polynomials over GF(p), low degree first, trimmed --

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    poly_trim(&mut out);
    out
}

fn poly_divmod(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let den_deg = den.len() - 1;
    let lead_inv = int_inv(den[den_deg], p);
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let mut quot = vec![0u64; rem.len().saturating_sub(den_deg)];
    while rem.len() > den_deg {
        let shift = rem.len() - 1 - den_deg;
        let c = rem[rem.len() - 1] * lead_inv % p;
        quot[shift] = c;
        for j in 0..=den_deg {
            rem[shift + j] = (rem[shift + j] + (p - den[j]) * c) % p;
        }
        rem.pop();
        poly_trim(&mut rem);
    }
    poly_trim(&mut quot);
    (quot, rem)
}

/// Trial division by every monic polynomial of degree ≤ deg/2.
fn poly_is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = checked_pow(p, d as u32).expect("divisor space fits");
        for idx in 0..count {
            let mut divisor = digits_base_p(idx, p, d);
            divisor.push(1);
            let (_, rem) = poly_divmod(poly, &divisor, p);
            if rem.is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits_base_p(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for slot in out.iter_mut() {
        *slot = n % p;
        n /= p;
    }
    out
}

/// First monic irreducible of degree κ in base-p lexicographic order.
fn smallest_irreducible(p: u64, kappa: u32) -> Vec<u64> {
    let count = checked_pow(p, kappa).expect("bounded by MAX_ORDER");
    for c in 0..count {
        let mut candidate = digits_base_p(c, p, kappa as usize);
        candidate.push(1);
        if poly_is_irreducible(&candidate, p) {
            return candidate;
        }
    }
    unreachable!("monic irreducibles of every degree exist over GF(p)")
}
