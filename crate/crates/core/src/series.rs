//! Truncated power series with exact coefficients, and the generating
//! functions used to cross-check the counting routines.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::HookType;
use crate::{IntSeries, RatSeries, Scalar};

pub const DEFAULT_TRUNCATION: usize = 128;

/// `c_0 + c_1 x + ... + c_N x^N`; terms beyond `N` are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    pub fn zero(bound: usize) -> Self {
        Series {
            coeffs: vec![T::zero(); bound + 1],
        }
    }

    pub fn one(bound: usize) -> Self {
        Self::monomial(0, T::one(), bound)
    }

    pub fn monomial(degree: usize, c: T, bound: usize) -> Self {
        let mut s = Self::zero(bound);
        if degree <= bound {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<T>, bound: usize) -> Self {
        coeffs.resize(bound + 1, T::zero());
        Series { coeffs }
    }

    /// `1 - x^step`.
    pub fn one_minus_power(step: usize, bound: usize) -> Self {
        let mut s = Self::one(bound);
        if step <= bound {
            s.coeffs[step] = s.coeffs[step].clone() - T::one();
        }
        s
    }

    /// `1 / (1 - x^step) = 1 + x^step + x^(2 step) + ...`.
    pub fn geometric(step: usize, bound: usize) -> Self {
        assert!(step >= 1, "geometric series needs a positive step");
        let mut s = Self::zero(bound);
        for d in (0..=bound).step_by(step) {
            s.coeffs[d] = T::one();
        }
        s
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: u64) -> Result<T> {
        let bound = self.bound();
        usize::try_from(degree)
            .ok()
            .and_then(|d| self.coeffs.get(d))
            .cloned()
            .ok_or(Error::TruncationTooSmall {
                needed: degree,
                bound,
            })
    }

    /// Multiply by `x^degree`.
    pub fn shift(&self, degree: usize) -> Self {
        let bound = self.bound();
        let mut out = Self::zero(bound);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + degree > bound {
                break;
            }
            out.coeffs[i + degree] = c.clone();
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Formal derivative. The result is only known up to `N - 1`, so its
    /// bound drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs: Vec<T> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * T::from_usize(i).expect("degree fits the scalar"))
            .collect();
        let bound = self.bound().saturating_sub(1);
        Self::from_coeffs(coeffs, bound)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.bound()), |acc, _| &acc * self)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Series<U> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;

    fn mul(self, rhs: Self) -> Series<T> {
        let bound = self.bound().min(rhs.bound());
        let mut out = Series::<T>::zero(bound);
        for (i, a) in self.coeffs.iter().enumerate().take(bound + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(bound + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        out
    }
}

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;

    fn add(self, rhs: Self) -> Series<T> {
        let bound = self.bound().min(rhs.bound());
        Series {
            coeffs: (0..=bound)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;

    fn sub(self, rhs: Self) -> Series<T> {
        let bound = self.bound().min(rhs.bound());
        Series {
            coeffs: (0..=bound)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

fn check_bound(n: u64, bound: usize) -> Result<()> {
    if n > bound as u64 {
        return Err(Error::TruncationTooSmall { needed: n, bound });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfForm {
    /// `x^(r^2) prod_{i<=r} (1 - x^i)^-2`.
    Product,
    /// `x^C(r+1,2) / r! * prod_{i<=r} d/dx (1 - x^i)^-1`.
    Derivative,
}

/// `x^(r^2) / prod_{i=1}^r (1 - x^i)^2`, the generating function of `p(n, r)`.
pub fn durfee_gf(r: usize, bound: usize) -> IntSeries {
    let mut s = IntSeries::monomial(r * r, BigInt::one(), bound);
    for i in 1..=r {
        let g = IntSeries::geometric(i, bound);
        s = &(&s * &g) * &g;
    }
    s
}

/// The derivative form, evaluated over the rationals.
pub fn durfee_gf_derivative(r: usize, bound: usize) -> RatSeries {
    // each derivative loses one degree of precision
    let work = bound + 1;
    let mut s = RatSeries::one(work);
    for i in 1..=r {
        let d = RatSeries::geometric(i, work + 1).derivative();
        s = &s * &d;
    }
    let factorial = (1..=r).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let inv = BigRational::new(BigInt::one(), factorial);
    let shifted = s.shift(r * (r + 1) / 2).scale(&inv);
    RatSeries::from_coeffs(
        shifted.coeffs[..=bound.min(shifted.bound())].to_vec(),
        bound,
    )
}

/// Coefficient of `x^n` in the generating function of `p(n, r)`.
pub fn gf_pnr_coeff(n: u64, r: usize, form: GfForm, bound: usize) -> Result<BigInt> {
    check_bound(n, bound)?;
    let degree = n as usize;
    match form {
        GfForm::Product => durfee_gf(r, degree).coeff(n),
        GfForm::Derivative => {
            let c = durfee_gf_derivative(r, degree).coeff(n)?;
            if !c.is_integer() {
                return Err(Error::Consistency(format!(
                    "derivative form of p({n},{r}) gave non-integral {c}"
                )));
            }
            Ok(c.to_integer())
        }
    }
}

/// `p(n)` as a sum of generating-function coefficients over Durfee sizes.
pub fn gf_pn_coeff(n: u64, bound: usize) -> Result<BigInt> {
    check_bound(n, bound)?;
    let mut total = BigInt::zero();
    for r in 1..=n.sqrt() as usize {
        total += gf_pnr_coeff(n, r, GfForm::Product, bound)?;
    }
    Ok(total)
}

/// `sum_{r>=1} x^(r^2) / (1 - x^r)^2`.
pub fn dh_gf(bound: usize) -> IntSeries {
    let mut total = IntSeries::zero(bound);
    let mut r = 1usize;
    while r * r <= bound {
        let g = IntSeries::geometric(r, bound);
        let term = (&g * &g).shift(r * r);
        total = &total + &term;
        r += 1;
    }
    total
}

pub fn gf_dh_coeff(n: u64, bound: usize) -> Result<BigInt> {
    check_bound(n, bound)?;
    dh_gf(n as usize).coeff(n)
}

/// A polynomial in at most [`MultiPoly::MAX_VARS`] variables, truncated at a
/// total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly<T> {
    nvars: usize,
    bound: u32,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub const MAX_VARS: usize = 3;

    pub fn zero(nvars: usize, bound: u32) -> Result<Self> {
        if nvars > Self::MAX_VARS {
            return Err(Error::TooManyVariables {
                got: nvars,
                max: Self::MAX_VARS,
            });
        }
        Ok(MultiPoly {
            nvars,
            bound,
            terms: BTreeMap::new(),
        })
    }

    pub fn monomial(exps: Vec<u32>, c: T, bound: u32) -> Result<Self> {
        let mut p = Self::zero(exps.len(), bound)?;
        p.add_term(exps, c);
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: T) {
        debug_assert_eq!(exps.len(), self.nvars);
        if exps.iter().sum::<u32>() > self.bound || c.is_zero() {
            return;
        }
        let sum = self.coeff(&exps) + c;
        if sum.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &T)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    /// `(1 - x_1 ... x_i)^-2 = sum_m (m + 1) (x_1 ... x_i)^m`, truncated.
    pub fn inverse_square_of_prefix(nvars: usize, i: usize, bound: u32) -> Result<Self> {
        let mut p = Self::zero(nvars, bound)?;
        let mut m = 0u32;
        while m * i as u32 <= bound {
            let exps = (0..nvars).map(|v| if v < i { m } else { 0 }).collect();
            p.add_term(
                exps,
                T::from_u32(m + 1).expect("coefficient fits the scalar"),
            );
            m += 1;
            if i == 0 {
                break;
            }
        }
        Ok(p)
    }
}

impl<T: Scalar> Mul for &MultiPoly<T> {
    type Output = MultiPoly<T>;

    fn mul(self, rhs: Self) -> MultiPoly<T> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let bound = self.bound.min(rhs.bound);
        let mut out = MultiPoly {
            nvars: self.nvars,
            bound,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &rhs.terms {
                if da + eb.iter().sum::<u32>() > bound {
                    continue;
                }
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(exps).or_insert_with(T::zero);
                *entry = entry.clone() + ca.clone() * cb.clone();
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
}

/// `x_1^(2r-1) x_2^(2r-3) ... x_r prod_{i<=r} (1 - x_1...x_i)^-2`, truncated
/// at total degree `bound`.
pub fn hook_type_gf(r: usize, bound: u32) -> Result<MultiPoly<BigInt>> {
    let lead: Vec<u32> = (0..r).map(|i| 2 * (r - i) as u32 - 1).collect();
    let mut acc = MultiPoly::monomial(lead, BigInt::one(), bound)?;
    for i in 1..=r {
        acc = &acc * &MultiPoly::inverse_square_of_prefix(r, i, bound)?;
    }
    Ok(acc)
}

/// Coefficient of `x_1^k_1 ... x_r^k_r` in [`hook_type_gf`].
pub fn mv_coeff(h: &HookType, bound: u32) -> Result<BigInt> {
    let r = h.len();
    if r > MultiPoly::<BigInt>::MAX_VARS {
        return Err(Error::TooManyVariables {
            got: r,
            max: MultiPoly::<BigInt>::MAX_VARS,
        });
    }
    let weight = h.weight();
    if weight > u64::from(bound) {
        return Err(Error::TruncationTooSmall {
            needed: weight,
            bound: bound as usize,
        });
    }
    Ok(hook_type_gf(r, weight as u32)?.coeff(h.ks()))
}
