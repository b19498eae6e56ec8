use std::cmp::Ordering;
use std::fmt;

/// Largest supported number of variables (so projective space up to P^7).
pub const MAX_VARS: usize = 8;

/// An exponent vector. Unused trailing slots are zero, so comparisons do not need
/// to know the number of variables.
///
/// `Ord` is graded reverse lexicographic: higher total degree is larger; on ties the
/// monomial with the smaller exponent in the last differing variable is larger.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Panics if more than [`MAX_VARS`] exponents are given.
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let mut m = Monomial::default();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
        }
        m
    }

    pub fn var(index: usize) -> Self {
        let mut m = Monomial::default();
        m.exps[index] = 1;
        m
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    pub fn exponents(&self, num_vars: usize) -> Vec<u32> {
        self.exps[..num_vars].iter().map(|&e| e as u32).collect()
    }

    /// Index one past the last variable with a nonzero exponent.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    #[inline]
    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for (a, b) in m.exps.iter_mut().zip(self.exps.iter()) {
            *a -= *b;
        }
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Raise every exponent to a multiple: the substitution `x_i -> x_i^q`.
    pub fn inflate(&self, q: u32) -> Monomial {
        let mut m = *self;
        for e in m.exps.iter_mut() {
            *e = u16::try_from(*e as u32 * q).expect("exponent overflow");
        }
        m
    }

    pub fn pow(&self, k: u32) -> Monomial {
        self.inflate(k)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of total degree `degree` in `num_vars` variables, in lexicographic
/// order (`x0^d` first). Empty for negative degrees.
pub fn monomials_of_degree(num_vars: usize, degree: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if degree < 0 || num_vars == 0 {
        return out;
    }
    let mut exps = vec![0u32; num_vars];
    fill(&mut exps, 0, degree as u32, &mut out);
    out
}

fn fill(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::from_exponents(exps));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// `C(m, k)` with the convention that it vanishes for `m < k` or `m < 0`.
pub fn binomial(m: i64, k: i64) -> u128 {
    if k < 0 || m < 0 || m < k {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of monomials of degree `d` in `num_vars` variables.
pub fn monomial_count(num_vars: usize, d: i64) -> usize {
    binomial(num_vars as i64 - 1 + d, num_vars as i64 - 1) as usize
}
