//! Galois fields GF(p^n).
//!
//! Elements are stored by their canonical index: the residue
//! `c_{n-1} x^{n-1} + ... + c_1 x + c_0` is the integer `sum c_i p^i`.
//! Enumerating indices `0..q` therefore walks the residues in base-p
//! coefficient order with zero first.
//!
//! The modulus is the lexicographically smallest monic irreducible
//! polynomial of degree `n` (compared on `(c_{n-1}, ..., c_0)`), so two
//! fields of the same order are always identical.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest field order accepted by [`Field::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Fields up to this order get log/exp tables for multiplication.
const TABLE_LIMIT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field order exceeds the limit of {limit}")]
    OrderTooLarge { limit: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to fields of order {left} and {right}")]
    MixedFields { left: u32, right: u32 },
    #[error("{value} is not an element of GF({order})")]
    OutOfRange { value: u64, order: u32 },
    #[error("cannot parse field element from {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, FieldError>;

/// An element of some GF(q). Carries the field order so that operands from
/// different fields are rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    order: u32,
    value: u32,
}

impl FieldElement {
    /// Canonical index of the residue in `[0, q)`.
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn order(self) -> u32 {
        self.order
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    p: u32,
    n: u32,
    q: u32,
    /// Coefficients, highest degree first, length `n + 1`, leading 1.
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// The finite field GF(p^n). Cheap to clone.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) [{}]", self.order(), self)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.q == other.inner.q
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over F_{}", format_poly(&self.inner.modulus), self.inner.p)
    }
}

pub fn is_prime(n: u64) -> bool {
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

/// Splits `q` into `(p, n)` with `q = p^n`, or `None` if `q` is not a prime power.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // no factor up to sqrt(q): q itself is prime
        return Some((q, 1));
    }
    let (mut rest, mut n) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

impl Field {
    /// Builds GF(p^n) with the canonical modulus.
    pub fn new(p: u64, n: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 {
            return Err(FieldError::DegreeZero);
        }
        let q = p
            .checked_pow(n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(FieldError::OrderTooLarge { limit: MAX_FIELD_ORDER })?;
        let (p, q) = (p as u32, q as u32);
        let modulus = if n == 1 { vec![1, 0] } else { smallest_irreducible(p, n) };
        let mut inner = Inner { p, n, q, modulus, tables: None };
        if n > 1 && q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field { inner: Arc::new(inner) })
    }

    /// GF(q) for a prime power `q`.
    pub fn with_order(q: u64) -> Result<Field> {
        match prime_power_decomposition(q) {
            Some((p, n)) => Field::new(p, n),
            None => Err(FieldError::NotPrime(q)),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.n
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// Modulus coefficients, highest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// The class of `x` in `F_p[x]/(modulus)`. For prime fields this is 0.
    pub fn x(&self) -> FieldElement {
        if self.inner.n == 1 {
            self.zero()
        } else {
            self.wrap(self.inner.p)
        }
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value >= self.inner.q as u64 {
            return Err(FieldError::OutOfRange { value, order: self.inner.q });
        }
        Ok(self.wrap(value as u32))
    }

    /// Element from coefficients given highest degree first. Missing leading
    /// coefficients are zero; each coefficient must lie in `[0, p)`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        let p = self.inner.p;
        if coeffs.len() > self.inner.n as usize {
            return Err(FieldError::Parse(format!("{coeffs:?}")));
        }
        let mut value = 0u64;
        for &c in coeffs {
            if c >= p {
                return Err(FieldError::OutOfRange { value: c as u64, order: p });
            }
            value = value * p as u64 + c as u64;
        }
        self.element(value)
    }

    /// Coefficients of `e`, highest degree first, exactly `n` of them.
    pub fn coeffs(&self, e: FieldElement) -> Vec<u32> {
        let mut d = digits(e.value, self.inner.p, self.inner.n);
        d.reverse();
        d
    }

    /// All `q` elements in canonical order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |v| self.wrap(v))
    }

    pub fn enumerate_elements(&self) -> Vec<FieldElement> {
        self.elements().collect()
    }

    fn wrap(&self, value: u32) -> FieldElement {
        FieldElement { order: self.inner.q, value }
    }

    fn check(&self, a: FieldElement) -> Result<u32> {
        if a.order != self.inner.q {
            return Err(FieldError::MixedFields { left: self.inner.q, right: a.order });
        }
        Ok(a.value)
    }

    fn check2(&self, a: FieldElement, b: FieldElement) -> Result<(u32, u32)> {
        if a.order != b.order {
            return Err(FieldError::MixedFields { left: a.order, right: b.order });
        }
        Ok((self.check(a)?, self.check(b)?))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let (a, b) = self.check2(a, b)?;
        Ok(self.wrap(self.add_raw(a, b)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let (a, b) = self.check2(a, b)?;
        Ok(self.wrap(self.sub_raw(a, b)))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement> {
        let a = self.check(a)?;
        Ok(self.wrap(self.neg_raw(a)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let (a, b) = self.check2(a, b)?;
        Ok(self.wrap(self.mul_raw(a, b)))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let a = self.check(a)?;
        self.inv_raw(a).map(|v| self.wrap(v)).ok_or(FieldError::DivisionByZero)
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let (a, b) = self.check2(a, b)?;
        let b_inv = self.inv_raw(b).ok_or(FieldError::DivisionByZero)?;
        Ok(self.wrap(self.mul_raw(a, b_inv)))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> Result<FieldElement> {
        let a = self.check(a)?;
        Ok(self.wrap(self.pow_raw(a, e)))
    }

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let Inner { p, n, .. } = *self.inner;
        if n == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0u32, 1u32);
        for _ in 0..n {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        let Inner { p, n, .. } = *self.inner;
        if n == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        if p == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0u32, 1u32);
        for _ in 0..n {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.inner;
        if inner.n == 1 {
            return ((a as u64 * b as u64) % inner.p as u64) as u32;
        }
        if let Some(t) = &inner.tables {
            let l = (t.log[a as usize] + t.log[b as usize]) % (inner.q - 1);
            return t.exp[l as usize];
        }
        poly_mulmod(inner, a, b)
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let inner = &*self.inner;
        if let Some(t) = &inner.tables {
            let l = (inner.q - 1 - t.log[a as usize]) % (inner.q - 1);
            return Some(t.exp[l as usize]);
        }
        Some(self.pow_raw(a, inner.q as u64 - 2))
    }

    pub(crate) fn pow_raw(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    /// Base-p digit string, highest degree first. Digits are concatenated
    /// when `p <= 10` and joined with `.` otherwise. Prime fields print the
    /// plain integer.
    pub fn format_element(&self, e: FieldElement) -> String {
        if self.inner.n == 1 {
            return e.value.to_string();
        }
        let c = self.coeffs(e);
        let parts: Vec<String> = c.iter().map(|d| d.to_string()).collect();
        if self.inner.p <= 10 {
            parts.concat()
        } else {
            parts.join(".")
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let bad = || FieldError::Parse(s.to_string());
        let s = s.trim();
        if self.inner.n == 1 {
            let v: u64 = s.parse().map_err(|_| bad())?;
            return self.element(v);
        }
        let coeffs: Vec<u32> = if self.inner.p <= 10 {
            s.chars().map(|ch| ch.to_digit(10).ok_or_else(bad)).collect::<Result<_>>()?
        } else {
            s.split('.').map(|d| d.parse().map_err(|_| bad())).collect::<Result<_>>()?
        };
        if coeffs.len() != self.inner.n as usize {
            return Err(bad());
        }
        self.from_coeffs(&coeffs)
    }
}

/// Low-degree-first digits of `v` in base `p`, exactly `n` of them.
fn digits(mut v: u32, p: u32, n: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(n as usize);
    for _ in 0..n {
        d.push(v % p);
        v /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_mulmod(inner: &Inner, a: u32, b: u32) -> u32 {
    let (p, n) = (inner.p as u64, inner.n as usize);
    let a = digits(a, inner.p, inner.n);
    let b = digits(b, inner.p, inner.n);
    let mut prod = vec![0u64; 2 * n - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
        }
    }
    // low-first modulus coefficients, leading coefficient 1 at index n
    let m: Vec<u64> = inner.modulus.iter().rev().map(|&c| c as u64).collect();
    for k in (n..prod.len()).rev() {
        let t = prod[k];
        if t == 0 {
            continue;
        }
        for (i, &mi) in m.iter().enumerate().take(n + 1) {
            let idx = k - n + i;
            prod[idx] = (prod[idx] + (p - t) * mi) % p;
        }
    }
    let out: Vec<u32> = prod[..n].iter().map(|&c| c as u32).collect();
    undigits(&out, inner.p)
}

fn build_tables(inner: &Inner) -> Tables {
    let q = inner.q;
    let order = q - 1;
    // find a primitive element: smallest g whose powers cover all of F_q^*
    for g in 2..q {
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = 1u32;
        let mut ok = true;
        for k in 0..order {
            if log[cur as usize] != u32::MAX {
                ok = false;
                break;
            }
            exp[k as usize] = cur;
            log[cur as usize] = k;
            cur = poly_mulmod(inner, cur, g);
        }
        if ok {
            log[0] = 0;
            return Tables { exp, log };
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

/// Monic polynomial `f` (low-first coefficients) reduced modulo monic `g`.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (i, &gc) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * gc as u64) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

fn is_irreducible(f_low: &[u32], p: u32) -> bool {
    let n = f_low.len() - 1;
    for d in 1..=n / 2 {
        // every monic polynomial of degree d
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = digits(idx as u32, p, d as u32);
            g.push(1);
            if poly_rem(f_low, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    // idx enumerates (c_{n-1}, ..., c_0) lexicographically
    let count = (p as u64).pow(n);
    for idx in 0..count {
        let mut low = digits(idx as u32, p, n);
        low.push(1);
        if is_irreducible(&low, p) {
            low.reverse();
            return low;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Human-readable polynomial from highest-first coefficients.
fn format_poly(coeffs: &[u32]) -> String {
    let deg = coeffs.len() - 1;
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let e = deg - i;
        let mono = match e {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{e}"),
        };
        terms.push(match (c, e) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.order(), 7);
        let (a, b) = (f.element(3).unwrap(), f.element(5).unwrap());
        assert_eq!(f.mul(a, b).unwrap(), f.one());
        assert_eq!(f.to_string(), "x over F_7");
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(Field::new(2, 3).unwrap().to_string(), "x^3+x+1 over F_2");
    }

    /// Independent check of the canonical GF(9) modulus: scan monic
    /// quadratics in lexicographic order and keep the first without roots.
    #[test]
    fn gf9_modulus_by_root_search() {
        let mut found = None;
        'outer: for c1 in 0..3u32 {
            for c0 in 0..3u32 {
                if (0..3u32).all(|x| (x * x + c1 * x + c0) % 3 != 0) {
                    found = Some([1, c1, c0]);
                    break 'outer;
                }
            }
        }
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &found.unwrap());
    }

    #[test]
    fn gf4_x_squared() {
        let f = Field::new(2, 2).unwrap();
        let g = f.x();
        let g1 = f.add(g, f.one()).unwrap();
        assert_eq!(f.mul(g, g).unwrap(), g1);
    }

    #[test]
    fn gf8_inverse_of_x() {
        let f = Field::new(2, 3).unwrap();
        let g = f.x();
        let g2p1 = f.add(f.mul(g, g).unwrap(), f.one()).unwrap();
        assert_eq!(f.inv(g).unwrap(), g2p1);
        assert_eq!(f.mul(g, g2p1).unwrap(), f.one());
    }

    #[test]
    fn element_enumeration_order() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.enumerate_elements().iter().map(|e| e.value()).collect::<Vec<_>>(), [0, 1]);
        let f4 = Field::new(2, 2).unwrap();
        let els = f4.enumerate_elements();
        let g = f4.x();
        assert_eq!(els, vec![f4.zero(), f4.one(), g, f4.add(g, f4.one()).unwrap()]);
        let f9 = Field::new(3, 2).unwrap();
        let els = f9.enumerate_elements();
        assert_eq!(els.len(), 9);
        assert!(els[0].is_zero());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(6, 1).unwrap_err(), FieldError::NotPrime(6));
        assert_eq!(Field::new(5, 0).unwrap_err(), FieldError::DegreeZero);
        assert!(matches!(Field::new(2, 21), Err(FieldError::OrderTooLarge { .. })));
        assert!(Field::new(2, 20).is_ok());
        assert_eq!(Field::with_order(12).unwrap_err(), FieldError::NotPrime(12));
    }

    #[test]
    fn arithmetic_errors() {
        let f = Field::new(5, 1).unwrap();
        let g = Field::new(7, 1).unwrap();
        assert_eq!(f.inv(f.zero()).unwrap_err(), FieldError::DivisionByZero);
        assert_eq!(f.div(f.one(), f.zero()).unwrap_err(), FieldError::DivisionByZero);
        assert!(matches!(f.add(f.one(), g.one()), Err(FieldError::MixedFields { .. })));
        assert!(matches!(f.neg(g.one()), Err(FieldError::MixedFields { .. })));
    }

    #[test]
    fn prime_power_decomposition_cases() {
        assert_eq!(prime_power_decomposition(64), Some((2, 6)));
        assert_eq!(prime_power_decomposition(23), Some((23, 1)));
        assert_eq!(prime_power_decomposition(1), None);
        assert_eq!(prime_power_decomposition(12), None);
        assert_eq!(prime_power_decomposition(121), Some((11, 2)));
    }

    #[test]
    fn table_and_polynomial_paths_agree() {
        for (p, n) in [(2, 4), (3, 3), (5, 2), (7, 2)] {
            let f = Field::new(p, n).unwrap();
            for a in 0..f.order() {
                for b in 0..f.order() {
                    assert_eq!(f.mul_raw(a, b), if a == 0 || b == 0 { 0 } else { poly_mulmod(&f.inner, a, b) });
                }
            }
        }
    }

    #[test]
    fn serialization_round_trip() {
        let f = Field::new(3, 2).unwrap();
        let e = f.from_coeffs(&[1, 2]).unwrap();
        assert_eq!(f.format_element(e), "12");
        assert_eq!(f.parse_element("12").unwrap(), e);
        let f = Field::new(11, 2).unwrap();
        let e = f.from_coeffs(&[10, 3]).unwrap();
        assert_eq!(f.format_element(e), "10.3");
        assert_eq!(f.parse_element("10.3").unwrap(), e);
        assert!(f.parse_element("12.3").is_err());
    }

    fn small_fields() -> Vec<Field> {
        [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]
            .into_iter()
            .map(|(p, n)| Field::new(p, n).unwrap())
            .collect()
    }

    #[test]
    fn axioms_exhaustive_up_to_nine() {
        for f in small_fields() {
            let els = f.enumerate_elements();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a).unwrap()).unwrap(), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()).unwrap(), f.one());
                }
                for &b in &els {
                    assert_eq!(f.add(a, b).unwrap(), f.add(b, a).unwrap());
                    assert_eq!(f.mul(a, b).unwrap(), f.mul(b, a).unwrap());
                    for &c in &els {
                        let ab_c = f.add(f.add(a, b).unwrap(), c).unwrap();
                        assert_eq!(ab_c, f.add(a, f.add(b, c).unwrap()).unwrap());
                        let m = f.mul(f.mul(a, b).unwrap(), c).unwrap();
                        assert_eq!(m, f.mul(a, f.mul(b, c).unwrap()).unwrap());
                        let lhs = f.mul(a, f.add(b, c).unwrap()).unwrap();
                        let rhs = f.add(f.mul(a, b).unwrap(), f.mul(a, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_order() {
        for q in 2..=64u64 {
            let Ok(f) = Field::with_order(q) else { continue };
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, q - 1).unwrap(), f.one(), "q={q}");
            }
        }
    }
}
