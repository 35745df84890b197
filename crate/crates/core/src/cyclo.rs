//! Exact arithmetic in the cyclotomic field `ℚ(ζₙ)`.
//!
//! Elements are polynomials in `ζ` of degree `< φ(n)`, reduced modulo the
//! `n`-th cyclotomic polynomial `Φₙ`. Working modulo `Φₙ` rather than
//! `xⁿ − 1` keeps the quotient a field, which the echelon code relies on.
//!
//! Internally an element is an integer coefficient vector over one positive
//! common denominator, kept in lowest terms, so equality is plain structural
//! equality. Fields are interned per `n` and live for the whole process;
//! elements carry a `&'static` reference to theirs.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Integer coefficients of `Φₙ`, lowest degree first.
///
/// Computed as `(xⁿ − 1) / ∏_{d | n, d < n} Φ_d` by exact division.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n ≥ 1");
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = BigInt::from(-1);
    poly[n] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_monic_division(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

/// Divides `num` by the monic `den`, asserting a zero remainder.
fn exact_monic_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division by Φ_d was not exact");
    quot
}

/// Overwrites `dst` with `v`, reusing its allocation.
fn set_small(dst: &mut BigInt, v: i128) {
    let sign = match v.signum() {
        0 => Sign::NoSign,
        1 => Sign::Plus,
        _ => Sign::Minus,
    };
    let m = v.unsigned_abs();
    let digits = [m as u32, (m >> 32) as u32, (m >> 64) as u32, (m >> 96) as u32];
    dst.assign_from_slice(sign, &digits);
}

/// Non-negative gcd, in 64-bit arithmetic when both values fit.
fn gcd_i128(a: i128, b: i128) -> i128 {
    match (i64::try_from(a), i64::try_from(b)) {
        (Ok(x), Ok(y)) => i128::from(x.unsigned_abs().gcd(&y.unsigned_abs())),
        _ => a.gcd(&b),
    }
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// The field `ℚ(ζₙ)` with its reduction data.
pub struct CycloField {
    n: usize,
    phi: usize,
    min_poly: Vec<BigInt>,
    /// `root_powers[k]` = coefficients of `ζᵏ` in the basis `1, ζ, …, ζ^{φ−1}`.
    root_powers: Vec<Vec<i64>>,
    /// Sparse form of `root_powers`, used when reducing products.
    sparse_powers: Vec<Vec<(usize, i64)>>,
}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloField(Q(zeta_{}))", self.n)
    }
}

impl CycloField {
    /// The interned field `ℚ(ζₙ)`.
    pub fn get(n: usize) -> &'static CycloField {
        assert!(n >= 1, "cyclotomic field needs n ≥ 1");
        static FIELDS: OnceLock<Mutex<HashMap<usize, &'static CycloField>>> = OnceLock::new();
        let mut fields = FIELDS
            .get_or_init(|| Mutex::new(HashMap::new()))
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        fields
            .entry(n)
            .or_insert_with(|| Box::leak(Box::new(CycloField::build(n))))
    }

    fn build(n: usize) -> CycloField {
        let min_poly = cyclotomic_polynomial(n);
        let phi = min_poly.len() - 1;
        let low: Vec<i64> = min_poly[..phi]
            .iter()
            .map(|c| i64::try_from(c).expect("cyclotomic coefficient fits in i64"))
            .collect();
        let mut root_powers = Vec::with_capacity(n);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            root_powers.push(cur.clone());
            // multiply by x, then replace x^phi by -(low part of Φ)
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1] - top * low[j];
            }
            cur[0] = -top * low[0];
        }
        debug_assert_eq!(cur[0], 1);
        let sparse_powers = root_powers
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(j, c)| (j, *c))
                    .collect()
            })
            .collect();
        CycloField {
            n,
            phi,
            min_poly,
            root_powers,
            sparse_powers,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `φ(n)`, the dimension of the field over `ℚ`.
    pub fn phi(&self) -> usize {
        self.phi
    }

    /// Coefficients of `Φₙ`, lowest degree first (monic, degree `φ(n)`).
    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    /// Integer coordinates of `ζᵏ`, `0 ≤ k < n`.
    pub fn root_power_coeffs(&self, k: usize) -> &[i64] {
        &self.root_powers[k]
    }

    pub fn zero(&'static self) -> CycloElement {
        CycloElement {
            field: self,
            num: vec![BigInt::zero(); self.phi],
            den: BigInt::one(),
        }
    }

    pub fn one(&'static self) -> CycloElement {
        self.from_int(1)
    }

    pub fn from_int(&'static self, k: i64) -> CycloElement {
        let mut num = vec![BigInt::zero(); self.phi];
        num[0] = BigInt::from(k);
        CycloElement {
            field: self,
            num,
            den: BigInt::one(),
        }
    }

    /// `ζᵏ`, with `k` taken modulo `n`.
    pub fn root_power(&'static self, k: i64) -> CycloElement {
        let k = k.rem_euclid(self.n as i64) as usize;
        self.from_int_coeffs(&self.root_powers[k])
    }

    /// `Σ_k counts[k] · ζᵏ` for a residue tally of length `n`.
    ///
    /// Only integer arithmetic is involved.
    pub fn from_root_tally(&'static self, counts: &[i64]) -> CycloElement {
        debug_assert_eq!(counts.len(), self.n);
        let mut acc = vec![0i64; self.phi];
        for (k, &c) in counts.iter().enumerate() {
            if c != 0 {
                for &(j, r) in &self.sparse_powers[k] {
                    acc[j] += c * r;
                }
            }
        }
        self.from_int_coeffs(&acc)
    }

    pub fn from_int_coeffs(&'static self, coeffs: &[i64]) -> CycloElement {
        assert_eq!(coeffs.len(), self.phi);
        CycloElement {
            field: self,
            num: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// Element with the given rational coordinates in the basis `1, ζ, …`.
    pub fn from_coeffs(&'static self, coeffs: &[Rational]) -> Result<CycloElement> {
        if coeffs.len() != self.phi {
            return Err(Error::input(format!(
                "expected {} coefficients for Q(zeta_{}), got {}",
                self.phi,
                self.n,
                coeffs.len()
            )));
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut e = CycloElement {
            field: self,
            num,
            den,
        };
        e.normalize();
        Ok(e)
    }

    /// Reduces an integer polynomial of length `< 2φ` modulo `Φₙ`.
    fn reduce_wide(&self, wide: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.phi;
        let mut out: Vec<BigInt> = Vec::with_capacity(phi);
        let mut iter = wide.into_iter();
        out.extend(iter.by_ref().take(phi));
        out.resize(phi, BigInt::zero());
        for (k, c) in iter.enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(j, r) in &self.sparse_powers[(phi + k) % self.n] {
                match r {
                    1 => out[j] += &c,
                    -1 => out[j] -= &c,
                    _ => out[j] += &c * r,
                }
            }
        }
        out
    }
}

/// An element of `ℚ(ζₙ)`.
#[derive(Clone)]
pub struct CycloElement {
    field: &'static CycloField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycloElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycloElement {}

impl CycloElement {
    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    /// Rational coordinates in the basis `1, ζ, …, ζ^{φ(n)−1}`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Whether the element is a rational number (only the constant coordinate set).
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    fn check_field(&self, other: &CycloElement) -> Result<()> {
        if self.field.n != other.field.n {
            return Err(Error::input(format!(
                "field mismatch: Q(zeta_{}) vs Q(zeta_{})",
                self.field.n, other.field.n
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycloElement) -> Result<CycloElement> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn checked_sub(&self, other: &CycloElement) -> Result<CycloElement> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn checked_mul(&self, other: &CycloElement) -> Result<CycloElement> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &CycloElement, subtract: bool) -> CycloElement {
        let combine = |a: &BigInt, b: &BigInt| if subtract { a - b } else { a + b };
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| combine(a, b)).collect();
            let mut e = CycloElement {
                field: self.field,
                num,
                den: self.den.clone(),
            };
            if !e.den.is_one() {
                e.normalize();
            }
            return e;
        }
        let g = self.den.gcd(&other.den);
        let sa = &other.den / &g;
        let sb = &self.den / &g;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| combine(&(a * &sa), &(b * &sb)))
            .collect();
        let mut e = CycloElement {
            field: self.field,
            num,
            den: &self.den * sa,
        };
        e.normalize();
        e
    }

    fn mul_unchecked(&self, other: &CycloElement) -> CycloElement {
        let field = self.field;
        if self.is_zero() || other.is_zero() {
            return field.zero();
        }
        if self.is_rational() {
            return other.scale_unchecked(&self.num[0], &self.den);
        }
        if other.is_rational() {
            return self.scale_unchecked(&other.num[0], &other.den);
        }
        let phi = field.phi;
        let mut wide = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut e = CycloElement {
            field,
            num: field.reduce_wide(wide),
            den: &self.den * &other.den,
        };
        e.normalize();
        e
    }

    /// `self · (p/q)`.
    fn scale_unchecked(&self, p: &BigInt, q: &BigInt) -> CycloElement {
        let mut e = CycloElement {
            field: self.field,
            num: self.num.iter().map(|a| a * p).collect(),
            den: &self.den * q,
        };
        e.normalize();
        e
    }

    /// `self −= a · b`, the elimination kernel.
    pub fn sub_mul_assign(&mut self, a: &CycloElement, b: &CycloElement) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if self.sub_mul_small(a, b).is_some() {
            return;
        }
        let field = self.field;
        let mut wide = vec![BigInt::zero(); 2 * field.phi - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    wide[i + j] += x * y;
                }
            }
        }
        let prod = field.reduce_wide(wide);
        let pden = &a.den * &b.den;
        if self.is_zero() {
            self.num = prod.into_iter().map(|c| -c).collect();
            self.den = pden;
        } else if self.den == pden {
            for (c, p) in self.num.iter_mut().zip(prod) {
                *c -= p;
            }
        } else {
            let g = self.den.gcd(&pden);
            let s_self = &pden / &g;
            let s_prod = &self.den / &g;
            for (c, p) in self.num.iter_mut().zip(prod) {
                *c *= &s_self;
                *c -= p * &s_prod;
            }
            self.den *= s_self;
        }
        self.normalize();
    }

    /// [`sub_mul_assign`](Self::sub_mul_assign) in checked `i128` arithmetic;
    /// `None` (with `self` untouched) when an operand or intermediate is too large.
    fn sub_mul_small(&mut self, a: &CycloElement, b: &CycloElement) -> Option<()> {
        const MAX_PHI: usize = 16;
        let field = self.field;
        let phi = field.phi;
        if phi > MAX_PHI {
            return None;
        }
        let small = |x: &BigInt| x.to_i64().map(i128::from);
        let mut wide = [0i128; 2 * MAX_PHI - 1];
        let mut bs = [0i128; MAX_PHI];
        for (dst, y) in bs.iter_mut().zip(&b.num) {
            *dst = small(y)?;
        }
        for (i, x) in a.num.iter().enumerate() {
            let x = small(x)?;
            if x == 0 {
                continue;
            }
            for (j, &y) in bs[..phi].iter().enumerate() {
                wide[i + j] = wide[i + j].checked_add(x.checked_mul(y)?)?;
            }
        }
        let mut prod = [0i128; MAX_PHI];
        prod[..phi].copy_from_slice(&wide[..phi]);
        for (k, &c) in wide[phi..2 * phi - 1].iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(j, r) in &field.sparse_powers[(phi + k) % field.n] {
                prod[j] = prod[j].checked_add(c.checked_mul(i128::from(r))?)?;
            }
        }
        let pden = small(&a.den)?.checked_mul(small(&b.den)?)?;
        let sden = small(&self.den)?;
        let g = if sden == pden { sden } else { gcd_i128(sden, pden) };
        let (s_self, s_prod) = (pden / g, sden / g);
        let mut out = [0i128; MAX_PHI];
        for (k, c) in self.num.iter().enumerate() {
            out[k] = small(c)?
                .checked_mul(s_self)?
                .checked_sub(prod[k].checked_mul(s_prod)?)?;
        }
        let mut den = sden.checked_mul(s_self)?;
        let content = if den == 1 {
            1
        } else {
            out[..phi].iter().fold(den, |g, &c| if g == 1 { 1 } else { gcd_i128(g, c) })
        };
        if content > 1 {
            den /= content;
            out[..phi].iter_mut().for_each(|c| *c /= content);
        }
        if out[..phi].iter().all(|&c| c == 0) {
            den = 1;
        }
        for (dst, &c) in self.num.iter_mut().zip(&out[..phi]) {
            set_small(dst, c);
        }
        set_small(&mut self.den, den);
        Some(())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `ℚ[x]`
    /// against `Φₙ`.
    pub fn invert(&self) -> Result<CycloElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = self.field;
        if self.is_rational() {
            let c = Rational::new(self.num[0].clone(), self.den.clone()).recip();
            let mut coeffs = vec![Rational::zero(); field.phi];
            coeffs[0] = c;
            return field.from_coeffs(&coeffs);
        }
        let to_q = |v: &[BigInt]| -> Vec<Rational> {
            trim(v.iter().map(|c| Rational::from_integer(c.clone())).collect())
        };
        // Invert the integer numerator polynomial, then multiply by den.
        let mut r0 = to_q(&field.min_poly);
        let mut r1 = to_q(&self.num);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return Err(Error::consistency("gcd with the cyclotomic polynomial is not constant"));
        }
        let scale = Rational::from_integer(self.den.clone()) / &r0[0];
        let (_, s) = poly_divrem(&s0, &to_q(&field.min_poly));
        let mut coeffs: Vec<Rational> = s.into_iter().map(|c| c * &scale).collect();
        coeffs.resize(field.phi, Rational::zero());
        field.from_coeffs(&coeffs)
    }

    /// Lowest terms with a positive denominator; zero has denominator 1.
    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().expect("division by the zero polynomial").clone();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

// Operator forms panic on a field mismatch; use the `checked_*` methods
// when the operands may come from different fields.

impl Add for &CycloElement {
    type Output = CycloElement;
    fn add(self, rhs: &CycloElement) -> CycloElement {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl Sub for &CycloElement {
    type Output = CycloElement;
    fn sub(self, rhs: &CycloElement) -> CycloElement {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &CycloElement {
    type Output = CycloElement;
    fn mul(self, rhs: &CycloElement) -> CycloElement {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        CycloElement {
            field: self.field,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        -&self
    }
}

/// Human-readable form such as `-1 - ζ` or `3/2ζ^2`.
impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "ζ")?,
                (1, false) => write!(f, "{mag}ζ")?,
                (_, true) => write!(f, "ζ^{k}")?,
                (_, false) => write!(f, "{mag}ζ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]_{}", self.field.n)
    }
}

/// JSON form: `{"coeffs": ["p/q", ...]}` in the `ζ`-power basis.
impl Serialize for CycloElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self
            .coeffs()
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect();
        let mut s = serializer.serialize_struct("CycloElement", 1)?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}
