use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Field;

use super::minimal::{minimal_free_resolution, FreeResolution};
use super::presentation::Presentation;

/// An integer-valued polynomial in the twist `d`, stored by rational coefficients
/// (`coeffs[k]` multiplies `d^k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        HilbertPolynomial { coeffs: Vec::new() }
    }

    /// The polynomial `C(d - a + n, n)` in `d`.
    fn shifted_binomial(a: i64, n: usize) -> Self {
        let mut coeffs = vec![BigRational::one()];
        let mut factorial = BigInt::one();
        for k in 1..=n as i64 {
            // multiply by (d - a + k)
            let c = BigRational::from_integer(BigInt::from(k - a));
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (i, x) in coeffs.iter().enumerate() {
                next[i] += x * &c;
                next[i + 1] += x;
            }
            coeffs = next;
            factorial *= BigInt::from(k);
        }
        let f = BigRational::from_integer(factorial);
        HilbertPolynomial { coeffs: coeffs.into_iter().map(|x| x / &f).collect() }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn add_scaled(&mut self, other: &HilbertPolynomial, s: i64) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigRational::zero());
        }
        let s = BigRational::from_integer(BigInt::from(s));
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c * &s;
        }
    }

    pub fn from_resolution<K: Field>(res: &FreeResolution<K>, num_vars: usize) -> Self {
        let n = num_vars - 1;
        let mut p = HilbertPolynomial::zero();
        for (i, f) in res.modules().iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &a in f.degrees() {
                p.add_scaled(&HilbertPolynomial::shifted_binomial(a, n), sign);
            }
        }
        p.trimmed()
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, d: i64) -> i64 {
        let x = BigRational::from_integer(BigInt::from(d));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        assert!(acc.is_integer(), "Hilbert polynomial is integer-valued");
        acc.to_integer().to_i64().expect("Hilbert polynomial value fits in i64")
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag_s = if mag.is_integer() { mag.to_integer().to_string() } else { format!("({mag})") };
            match k {
                0 => write!(f, "{mag_s}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag_s}*")?;
                    }
                    if k == 1 {
                        write!(f, "d")?;
                    } else {
                        write!(f, "d^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Hilbert function on a window together with the Hilbert polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub function: BTreeMap<i64, i64>,
    pub polynomial: HilbertPolynomial,
}

/// `dim M_d` for `d` in `[d_min, d_max]` from the alternating sum over the minimal
/// resolution, and the Hilbert polynomial from the same sum of binomials read as
/// polynomials in `d`.
pub fn hilbert_data<K: Field>(pres: &Presentation<K>, d_min: i64, d_max: i64) -> HilbertData {
    let res = minimal_free_resolution(pres);
    let function = (d_min..=d_max).map(|d| (d, res.hilbert_function(d))).collect();
    HilbertData { function, polynomial: HilbertPolynomial::from_resolution(&res, pres.ring().num_vars()) }
}
