//! Exact arithmetic in `ℚ(ε)`, `ε` a primitive `ℓ`-th root of unity, and the
//! q-numbers / q-binomials evaluated at elements of that field.
//!
//! Elements are stored as residues of `ℚ[q]` modulo the cyclotomic polynomial
//! `Φ_ℓ`, so two elements are equal iff their coefficient vectors are equal.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The field `ℚ[q]/Φ_ℓ(q)` together with precomputed reductions of `q^k`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    ell: u64,
    /// `Φ_ℓ`, low degree first; monic.
    phi: Vec<i64>,
    /// `q^k mod Φ_ℓ` for `0 <= k < ℓ`.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    /// Builds `ℚ(ε)` for an odd `ℓ >= 3`.
    pub fn new(ell: u64) -> Result<Arc<Self>> {
        if ell < 3 || ell.is_multiple_of(2) {
            return Err(Error::InvalidEll(ell));
        }
        let phi = cyclotomic_polynomial(ell);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(ell as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..ell {
            powers.push(cur.clone());
            // multiply by q, then fold the overflow coefficient back using Φ monic
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1] - top * phi[i];
            }
            cur[0] = -top * phi[0];
        }
        Ok(Arc::new(CyclotomicField { ell, phi, powers }))
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// `deg Φ_ℓ = φ(ℓ)`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Coefficients of `Φ_ℓ`, constant term first.
    pub fn minimal_polynomial(&self) -> &[i64] {
        &self.phi
    }

    fn power_row(&self, k: i64) -> &[i64] {
        &self.powers[k.rem_euclid(self.ell as i64) as usize]
    }
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // q^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// An element of `ℚ(ε)` in canonical reduced form.
///
/// Coefficients share one positive denominator. Values whose numerators and
/// denominator fit in an `i64` are held in machine integers, larger ones as
/// big rationals; the choice depends only on the value, so structural
/// equality is equality in the field.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    /// Numerators over a positive denominator, jointly coprime.
    Small {
        num: Vec<i64>,
        den: i64,
    },
    Big(Vec<BigRational>),
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.ell == other.field.ell && self.repr == other.repr
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[ell={}]({})", self.field.ell, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        f.write_str("ε")?;
                    } else {
                        write!(f, "ε^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduces `num / den` to lowest terms; `None` if it does not fit in `i64`.
fn small(mut num: Vec<i128>, mut den: i128) -> Option<Repr> {
    if den < 0 {
        den = den.checked_neg()?;
        for x in num.iter_mut() {
            *x = x.checked_neg()?;
        }
    }
    let g = num.iter().fold(den, |g, &x| gcd(g, x));
    let fit = |x: i128| i64::try_from(x / g).ok().filter(|&y| y != i64::MIN);
    let num = num.into_iter().map(fit).collect::<Option<Vec<i64>>>()?;
    Some(Repr::Small { num, den: fit(den)? })
}

fn from_big(coeffs: Vec<BigRational>) -> Repr {
    let den = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let as_small = i128::try_from(&den).ok().and_then(|d| {
        let num = coeffs
            .iter()
            .map(|c| i128::try_from(c.numer() * (&den / c.denom())).ok())
            .collect::<Option<Vec<i128>>>()?;
        small(num, d)
    });
    as_small.unwrap_or(Repr::Big(coeffs))
}

/// `Σ_k prod[k] ε^k` reduced to the power basis, with checked arithmetic.
fn reduce_small(field: &CyclotomicField, prod: &[i128]) -> Option<Vec<i128>> {
    let d = field.degree();
    let mut out = prod[..d.min(prod.len())].to_vec();
    out.resize(d, 0);
    for (k, &c) in prod.iter().enumerate().skip(d) {
        if c == 0 {
            continue;
        }
        for (o, &p) in out.iter_mut().zip(field.power_row(k as i64)) {
            *o = o.checked_add(c.checked_mul(p as i128)?)?;
        }
    }
    Some(out)
}

fn reduce_big(field: &CyclotomicField, prod: &[BigRational]) -> Vec<BigRational> {
    let d = field.degree();
    let mut out = vec![BigRational::zero(); d];
    for (k, c) in prod.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if k < d {
            out[k] += c;
        } else {
            add_scaled_row(&mut out, c, field.power_row(k as i64));
        }
    }
    out
}

impl Cyclotomic {
    fn with(field: &Arc<CyclotomicField>, repr: Repr) -> Self {
        Cyclotomic { field: field.clone(), repr }
    }

    fn from_rationals(field: &Arc<CyclotomicField>, coeffs: Vec<BigRational>) -> Self {
        Self::with(field, from_big(coeffs))
    }

    fn from_parts(field: &Arc<CyclotomicField>, num: Vec<i128>, den: i128) -> Option<Self> {
        Some(Self::with(field, small(num, den)?))
    }

    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self::with(field, Repr::Small { num: vec![0; field.degree()], den: 1 })
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_integer(field, 1)
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        coeffs[0] = r;
        Self::from_rationals(field, coeffs)
    }

    /// `ε^k`; negative `k` allowed.
    pub fn root_power(field: &Arc<CyclotomicField>, k: i64) -> Self {
        Self::with(field, Repr::Small { num: field.power_row(k).to_vec(), den: 1 })
    }

    /// Builds an element from an arbitrary polynomial in `ε` (low degree first),
    /// reducing it modulo `Φ_ℓ`.
    pub fn from_polynomial(field: &Arc<CyclotomicField>, poly: &[BigRational]) -> Self {
        Self::from_rationals(field, reduce_big(field, poly))
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn ell(&self) -> u64 {
        self.field.ell
    }

    /// Coordinates in the power basis `1, ε, …, ε^{φ(ℓ)−1}`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        match &self.repr {
            Repr::Small { num, den } => {
                num.iter().map(|&n| BigRational::new(BigInt::from(n), BigInt::from(*den))).collect()
            }
            Repr::Big(c) => c.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.repr, Repr::Small { num, .. } if num.iter().all(|&n| n == 0))
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.repr, Repr::Small { num, den: 1 } if num[0] == 1 && num[1..].iter().all(|&n| n == 0))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.ell != other.field.ell {
            return Err(Error::EllMismatch(self.field.ell, other.field.ell));
        }
        Ok(())
    }

    fn add_signed(&self, other: &Self, sign: i128) -> Result<Self> {
        self.check(other)?;
        if let (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) = (&self.repr, &other.repr) {
            let (da, db) = (*da as i128, *db as i128);
            let g = gcd(da, db);
            let (fa, fb) = (db / g, da / g);
            let sum = || -> Option<Self> {
                let num = a
                    .iter()
                    .zip(b)
                    .map(|(&x, &y)| (x as i128).checked_mul(fa)?.checked_add((y as i128).checked_mul(fb)? * sign))
                    .collect::<Option<Vec<i128>>>()?;
                Self::from_parts(&self.field, num, da.checked_mul(fa)?)
            };
            if let Some(s) = sum() {
                return Ok(s);
            }
        }
        let coeffs =
            self.coeffs().iter().zip(other.coeffs()).map(|(x, y)| if sign > 0 { x + y } else { x - y }).collect();
        Ok(Self::from_rationals(&self.field, coeffs))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.add_signed(other, 1)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.add_signed(other, -1)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.field.degree();
        if let (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) = (&self.repr, &other.repr) {
            let product = || -> Option<Self> {
                let mut prod = vec![0i128; 2 * d - 1];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        prod[i + j] = prod[i + j].checked_add(x as i128 * y as i128)?;
                    }
                }
                let num = reduce_small(&self.field, &prod)?;
                Self::from_parts(&self.field, num, *da as i128 * *db as i128)
            };
            if let Some(p) = product() {
                return Ok(p);
            }
        }
        let (a, b) = (self.coeffs(), other.coeffs());
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Ok(Self::from_rationals(&self.field, reduce_big(&self.field, &prod)))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.inverse()?)
    }

    /// Multiplicative inverse, by solving `x · self = 1` in the power basis.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.field.degree();
        // column j of the multiplication-by-self matrix is self * ε^j
        let cols: Vec<Vec<BigRational>> = (0..d).map(|j| self.mul_root_power(j as i64).coeffs()).collect();
        let mut m: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !m[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(col, piv);
            let p = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x /= &p;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        Ok(Self::from_rationals(&self.field, m.into_iter().map(|mut row| row.pop().unwrap()).collect()))
    }

    /// `self^k` for any integer `k` (negative powers need `self ≠ 0`).
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Cyclotomic::one(&self.field);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `self · ε^k`.
    pub fn mul_root_power(&self, k: i64) -> Self {
        if let Repr::Small { num, den } = &self.repr {
            let mut prod = vec![0i128; self.field.ell as usize];
            let l = self.field.ell as i64;
            for (i, &x) in num.iter().enumerate() {
                prod[(i as i64 + k).rem_euclid(l) as usize] = x as i128;
            }
            if let Some(out) =
                reduce_small(&self.field, &prod).and_then(|n| Self::from_parts(&self.field, n, *den as i128))
            {
                return out;
            }
        }
        let mut out = vec![BigRational::zero(); self.field.degree()];
        for (i, c) in self.coeffs().iter().enumerate() {
            if !c.is_zero() {
                add_scaled_row(&mut out, c, self.field.power_row(i as i64 + k));
            }
        }
        Self::from_rationals(&self.field, out)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_one() {
            return self.clone();
        }
        Self::from_rationals(&self.field, self.coeffs().iter().map(|c| c * r).collect())
    }
}

/// `out += c · row` for a small integer row.
fn add_scaled_row(out: &mut [BigRational], c: &BigRational, row: &[i64]) {
    for (o, &p) in out.iter_mut().zip(row) {
        match p {
            0 => {}
            1 => *o += c,
            -1 => *o -= c,
            _ => *o += c * BigRational::from_integer(BigInt::from(p)),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            /// Panics when the operands live in different cyclotomic fields;
            /// use the `try_*` methods to get an error instead.
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$try(rhs).expect("cyclotomic operands over different ℓ")
            }
        }
        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        let repr = match &self.repr {
            // i64::MIN never occurs in the small form
            Repr::Small { num, den } => Repr::Small { num: num.iter().map(|&n| -n).collect(), den: *den },
            Repr::Big(c) => Repr::Big(c.iter().map(|x| -x).collect()),
        };
        Cyclotomic { field: self.field.clone(), repr }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// `ε^k` in `ℚ(ε)` for an odd `ℓ >= 3`.
pub fn root_power(ell: u64, k: i64) -> Result<Cyclotomic> {
    let field = CyclotomicField::new(ell)?;
    Ok(Cyclotomic::root_power(&field, k))
}

/// The symmetric q-number `[t]_u = u^{t-1} + u^{t-3} + … + u^{1-t}`.
pub fn q_number(t: u64, u: &Cyclotomic) -> Result<Cyclotomic> {
    if u.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut acc = Cyclotomic::zero(u.field());
    if t == 0 {
        return Ok(acc);
    }
    let u2 = u * u;
    let mut term = u.pow(1 - t as i64)?;
    for _ in 0..t {
        acc = &acc + &term;
        term = &term * &u2;
    }
    Ok(acc)
}

/// The Gaussian number `(t)_u = 1 + u + … + u^{t-1}`.
pub fn gaussian_number(t: u64, u: &Cyclotomic) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(u.field());
    let mut term = Cyclotomic::one(u.field());
    for _ in 0..t {
        acc = &acc + &term;
        term = &term * u;
    }
    acc
}

/// `[t]_u! = [t]_u [t-1]_u ⋯ [1]_u`.
pub fn q_factorial(t: u64, u: &Cyclotomic) -> Result<Cyclotomic> {
    let mut acc = Cyclotomic::one(u.field());
    for j in 1..=t {
        acc = &acc * &q_number(j, u)?;
    }
    Ok(acc)
}

/// The bracket q-binomial `[m t]_u`, via the q-Pascal rule
/// `[m t] = u^{-t} [m-1 t] + u^{m-t} [m-1 t-1]`.
///
/// The recursion stays inside the ring, so it is valid even where `[m]_u! = 0`.
pub fn q_binomial(m: u64, t: u64, u: &Cyclotomic) -> Result<Cyclotomic> {
    if t > m {
        return Err(Error::BinomialRange { m, t });
    }
    if u.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let uinv = u.inverse()?;
    pascal(m, t, u, |row, j| (uinv.pow(j as i64).unwrap(), u.pow((row - j) as i64).unwrap()))
}

/// The parenthesis q-binomial `(m t)_u`, via `(m t) = u^t (m-1 t) + (m-1 t-1)`.
pub fn gaussian_binomial(m: u64, t: u64, u: &Cyclotomic) -> Result<Cyclotomic> {
    if t > m {
        return Err(Error::BinomialRange { m, t });
    }
    let one = Cyclotomic::one(u.field());
    pascal(m, t, u, |_, j| (u.pow(j as i64).unwrap(), one.clone()))
}

/// Runs a Pascal-type recursion `c(m, j) = a · c(m-1, j) + b · c(m-1, j-1)`
/// where `(a, b) = weights(m, j)`.
fn pascal<W>(m: u64, t: u64, u: &Cyclotomic, weights: W) -> Result<Cyclotomic>
where
    W: Fn(u64, u64) -> (Cyclotomic, Cyclotomic),
{
    let field = u.field();
    let mut row = vec![Cyclotomic::one(field)];
    for r in 1..=m {
        let mut next = Vec::with_capacity(r as usize + 1);
        for j in 0..=r {
            let (a, b) = weights(r, j);
            let mut c = Cyclotomic::zero(field);
            if j < r {
                c = &c + &(&a * &row[j as usize]);
            }
            if j > 0 {
                c = &c + &(&b * &row[j as usize - 1]);
            }
            next.push(c);
        }
        row = next;
    }
    Ok(row.swap_remove(t as usize))
}
