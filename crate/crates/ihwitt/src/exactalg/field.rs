use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, Integer, One, Zero};

use super::AlgebraError;

/// Commutative ring arithmetic used by the elimination and echelon routines.
pub trait Ring: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a / b` when `b` divides `a` exactly, `None` otherwise.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u64;
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn div_exact(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// The integers with arbitrary precision. Not a field; used for lattice work.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
}

const TABLE_LIMIT: u64 = 1 << 20;
const ADD_TABLE_LIMIT: u32 = 256;

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
}

/// A finite field with `p^m` elements.
///
/// Elements are encoded as integers `c0 + c1 p + ... + c_{m-1} p^{m-1}` where
/// `c0 + c1 x + ...` is the polynomial representative modulo the defining
/// polynomial. For `m = 1` this is the usual residue.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Arc<Tables>>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

// Polynomials over Z_p, coefficients low degree first, trailing zeros trimmed.
fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead_inv = inv_mod(*b.last().expect("nonzero divisor") as u64, p as u64);
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = (*r.last().unwrap() as u64 * lead_inv) % p as u64;
        for (i, &bi) in b.iter().enumerate() {
            let t = (c * bi as u64) % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - t) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    poly_rem(&out.into_iter().map(|v| v as u32).collect::<Vec<_>>(), modulus, p)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not invertible");
    t.rem_euclid(p as i64) as u64
}

/// Monic polynomials of degree `deg` over Z_p in the order used to pick moduli:
/// coefficients compared from the constant term upwards.
fn monic_polys(p: u32, deg: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(deg);
    (0..count).map(move |mut code| {
        // The constant term is the most significant digit of `code`.
        let mut coeffs = vec![0u32; deg as usize + 1];
        for i in (0..deg as usize).rev() {
            coeffs[i] = (code % p as u64) as u32;
            code /= p as u64;
        }
        coeffs[deg as usize] = 1;
        coeffs
    })
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = (f.len() - 1) as u32;
    for d in 1..=deg / 2 {
        // Any monic factor order works here; reuse the enumerator.
        for g in monic_polys(p, d) {
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Builds `F_{p^m}` with the lexicographically smallest monic irreducible
/// modulus, comparing coefficients from the constant term upwards.
pub fn make_field(p: u32, m: u32) -> Result<FiniteField, AlgebraError> {
    if !is_prime(p as u64) {
        return Err(AlgebraError::NotPrime(p as u64));
    }
    if m == 0 {
        return Err(AlgebraError::InvalidExtensionDegree(m));
    }
    let q = (p as u64)
        .checked_pow(m)
        .filter(|&q| q <= u32::MAX as u64)
        .ok_or(AlgebraError::FieldTooLarge { p, m })?;
    if m == 1 {
        return Ok(FiniteField {
            p,
            m,
            q: q as u32,
            modulus: vec![0, 1],
            tables: None,
        });
    }
    if q > TABLE_LIMIT {
        return Err(AlgebraError::FieldTooLarge { p, m });
    }
    let modulus = monic_polys(p, m)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree");
    let q = q as u32;
    let digits = |mut e: u32| -> Vec<u32> {
        let mut out = Vec::with_capacity(m as usize);
        for _ in 0..m {
            out.push(e % p);
            e /= p;
        }
        trim(out)
    };
    let encode = |coeffs: &[u32]| -> u32 { coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c) };
    let order = q - 1;
    let factors = prime_factors(order as u64);
    let mut generator = None;
    for g in 2..q {
        let gp = digits(g);
        let is_gen = factors.iter().all(|&r| {
            let e = order as u64 / r;
            let mut acc = vec![1u32];
            let mut base = gp.clone();
            let mut k = e;
            while k > 0 {
                if k & 1 == 1 {
                    acc = poly_mul_mod(&acc, &base, &modulus, p);
                }
                base = poly_mul_mod(&base, &base, &modulus, p);
                k >>= 1;
            }
            acc != vec![1u32]
        });
        if is_gen {
            generator = Some(gp);
            break;
        }
    }
    let g = generator.expect("multiplicative group of a finite field is cyclic");
    let mut exp = vec![0u32; 2 * order as usize];
    let mut log = vec![0u32; q as usize];
    let mut cur = vec![1u32];
    for i in 0..order as usize {
        let e = encode(&cur);
        exp[i] = e;
        exp[i + order as usize] = e;
        log[e as usize] = i as u32;
        cur = poly_mul_mod(&cur, &g, &modulus, p);
    }
    let digit_add = |a: u32, b: u32| -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut scale = 1u32;
        for _ in 0..m {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale = scale.wrapping_mul(p);
        }
        out
    };
    let neg = (0..q)
        .map(|a| {
            let mut a = a;
            let mut out = 0u32;
            let mut scale = 1u32;
            for _ in 0..m {
                out += ((p - a % p) % p) * scale;
                a /= p;
                scale = scale.wrapping_mul(p);
            }
            out
        })
        .collect();
    let add = (q <= ADD_TABLE_LIMIT).then(|| {
        let mut t = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                t[(a * q + b) as usize] = digit_add(a, b);
            }
        }
        t
    });
    Ok(FiniteField {
        p,
        m,
        q,
        modulus,
        tables: Some(Arc::new(Tables { exp, log, add, neg })),
    })
}

impl FiniteField {
    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Element from polynomial coefficients (constant term first), reduced
    /// modulo the defining polynomial.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> u32 {
        let reduced: Vec<u32> = coeffs.iter().map(|&c| c.rem_euclid(self.p as i64) as u32).collect();
        let r = if self.m == 1 {
            reduced.first().copied().into_iter().collect::<Vec<_>>()
        } else {
            poly_rem(&reduced, &self.modulus, self.p)
        };
        r.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    /// Polynomial coefficients of an element, constant term first, length `m`.
    pub fn coeffs(&self, mut a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Whether `a` is a square. Zero counts as a square; in characteristic 2
    /// every element is one.
    pub fn is_square(&self, a: u32) -> bool {
        if a == 0 || self.p == 2 {
            return true;
        }
        self.pow(a, (self.q as u64 - 1) / 2) == 1
    }

    /// Smallest nonsquare in canonical order, if any.
    pub fn smallest_nonsquare(&self) -> Option<u32> {
        self.elements().find(|&a| a != 0 && !self.is_square(a))
    }

    /// Image of `a` under the inclusion of the prime field.
    pub fn embed_prime(&self, a: u32) -> u32 {
        a % self.p
    }

    /// Writes an element as a residue, or as a polynomial in `x` for
    /// proper extensions (`2x+1`, `x^2`).
    pub fn format_element(&self, a: u32) -> String {
        if self.m == 1 || a < self.p {
            return a.to_string();
        }
        let terms: Vec<String> = self
            .coeffs(a)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
                match i {
                    0 => coef,
                    1 => format!("{coef}x"),
                    _ => format!("{coef}x^{i}"),
                }
            })
            .collect();
        terms.join("+")
    }
}

impl Ring for FiniteField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        match &self.tables {
            None => ((*a as u64 + *b as u64) % self.p as u64) as u32,
            Some(t) => match &t.add {
                Some(add) => add[(*a * self.q + *b) as usize],
                None => {
                    let (mut x, mut y) = (*a, *b);
                    let mut out = 0u32;
                    let mut scale = 1u32;
                    for _ in 0..self.m {
                        out += ((x % self.p + y % self.p) % self.p) * scale;
                        x /= self.p;
                        y /= self.p;
                        scale = scale.wrapping_mul(self.p);
                    }
                    out
                }
            },
        }
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        match &self.tables {
            None => ((*a as u64 * *b as u64) % self.p as u64) as u32,
            Some(t) => {
                if *a == 0 || *b == 0 {
                    0
                } else {
                    t.exp[(t.log[*a as usize] + t.log[*b as usize]) as usize]
                }
            }
        }
    }
    fn neg(&self, a: &u32) -> u32 {
        match &self.tables {
            None => {
                if *a == 0 {
                    0
                } else {
                    self.p - *a
                }
            }
            Some(t) => t.neg[*a as usize],
        }
    }
    fn div_exact(&self, a: &u32, b: &u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

impl Field for FiniteField {
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        match &self.tables {
            None => Some(inv_mod(*a as u64, self.p as u64) as u32),
            Some(t) => {
                let order = self.q - 1;
                Some(t.exp[((order - t.log[*a as usize]) % order) as usize])
            }
        }
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
}

/// Reduces an integer modulo a positive modulus into `0..m`.
pub(crate) fn reduce_bigint(v: &BigInt, m: u32) -> u32 {
    let r = v.mod_floor(&BigInt::from(m));
    let (_, digits) = r.to_u32_digits();
    digits.first().copied().unwrap_or(0)
}

/// Converts a rational to an element of a finite field, if its denominator is
/// invertible there.
pub fn rational_to_finite(f: &FiniteField, v: &BigRational) -> Option<u32> {
    let num = reduce_bigint(v.numer(), f.prime());
    let den = reduce_bigint(v.denom(), f.prime());
    let den_inv = f.inv(&den)?;
    Some(f.mul(&num, &den_inv))
}
