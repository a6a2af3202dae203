//! Gaudin Hamiltonians on tensor powers of the vector representation of
//! `gl_r`, their singular weight spaces and joint spectra.
//!
//! Operators act on the word basis of `V^{⊗n}`, ordered lexicographically.

mod operator;
mod spectrum;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use operator::LinearOperator;
pub use spectrum::{
    joint_spectrum, joint_spectrum_with_tolerance, restrict, singular_weight_basis, JointSpectrum, SingularBasis,
    DEFAULT_TOLERANCE,
};

/// Pairwise distinct rational points `z_1, …, z_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParameterPoint {
    z: Vec<BigRational>,
}

impl ParameterPoint {
    pub fn new(z: Vec<BigRational>) -> Result<Self> {
        for a in 0..z.len() {
            for b in a + 1..z.len() {
                if z[a] == z[b] {
                    return Err(Error::RepeatedParameter { a: a + 1, b: b + 1 });
                }
            }
        }
        Ok(ParameterPoint { z })
    }

    pub fn from_integers(z: &[i64]) -> Result<Self> {
        ParameterPoint::new(z.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    /// Parses comma separated values such as `0,1/2,-3,0.25`.
    pub fn parse_csv(s: &str) -> Result<Self> {
        let z =
            s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(parse_rational).collect::<Result<Vec<_>>>()?;
        ParameterPoint::new(z)
    }

    /// `n` distinct sorted rationals with small numerators and denominators,
    /// drawn from a seeded generator.
    pub fn random_sorted(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut z: Vec<BigRational> = Vec::with_capacity(n);
        while z.len() < n {
            let num: i64 = rng.random_range(-40..=40);
            let den: i64 = rng.random_range(1..=9);
            let x = BigRational::new(num.into(), den.into());
            if !z.contains(&x) {
                z.push(x);
            }
        }
        z.sort();
        ParameterPoint { z }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.z
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    /// The point `α z + β`.
    pub fn affine(&self, alpha: &BigRational, beta: &BigRational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::OutOfRange("the scaling factor must be non-zero".into()));
        }
        Ok(ParameterPoint { z: self.z.iter().map(|x| alpha * x + beta).collect() })
    }
}

impl fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.z.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for ParameterPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.z.iter().map(ToString::to_string).collect();
        parts.serialize(s)
    }
}

/// Parses `3`, `-2/5` or a decimal such as `0.125`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::OutOfRange(format!("cannot parse {s:?} as a rational"));
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num = BigInt::from_str(&digits).map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let x = BigRational::new(num, den);
        return Ok(if negative { -x } else { x });
    }
    BigRational::from_str(s).map_err(|_| bad())
}

/// Index of a word in the lexicographic basis of `V^{⊗n}`.
pub fn word_index(letters: &[u32], r: usize) -> usize {
    letters.iter().fold(0, |acc, &x| acc * r + (x as usize - 1))
}

/// The word at a basis index.
pub fn word_at(index: usize, n: usize, r: usize) -> Vec<u32> {
    let mut letters = vec![0u32; n];
    let mut rest = index;
    for slot in letters.iter_mut().rev() {
        *slot = (rest % r) as u32 + 1;
        rest /= r;
    }
    letters
}

fn dimension(n: usize, r: usize) -> Result<usize> {
    if r == 0 {
        return Err(Error::OutOfRange("the alphabet must be non-empty".into()));
    }
    r.checked_pow(n as u32).ok_or_else(|| Error::OutOfRange(format!("{r}^{n} overflows")))
}

/// `Ω_ab = Σ e_ij^{(a)} e_ji^{(b)}`, which swaps tensor factors `a` and `b`.
pub fn omega(a: usize, b: usize, n: usize, r: usize) -> Result<LinearOperator> {
    if a == b || a == 0 || b == 0 || a > n || b > n {
        return Err(Error::OutOfRange(format!("factors ({a},{b}) for n = {n}")));
    }
    let dim = dimension(n, r)?;
    let mut out = LinearOperator::zero(dim);
    for idx in 0..dim {
        let mut w = word_at(idx, n, r);
        w.swap(a - 1, b - 1);
        out.add_entry(word_index(&w, r), idx, BigRational::one());
    }
    Ok(out)
}

/// `H_a(z) = Σ_{b ≠ a} Ω_ab / (z_a - z_b)`.
pub fn hamiltonian(a: usize, z: &ParameterPoint, r: usize) -> Result<LinearOperator> {
    let n = z.len();
    if a == 0 || a > n {
        return Err(Error::OutOfRange(format!("index {a} for n = {n}")));
    }
    let mut out = LinearOperator::zero(dimension(n, r)?);
    for b in 1..=n {
        if b != a {
            let c = (&z.z[a - 1] - &z.z[b - 1]).recip();
            out = out.add(&omega(a, b, n, r)?.scale(&c))?;
        }
    }
    Ok(out)
}

/// All of `H_1(z), …, H_n(z)`.
pub fn hamiltonians(z: &ParameterPoint, r: usize) -> Result<Vec<LinearOperator>> {
    (1..=z.len()).map(|a| hamiltonian(a, z, r)).collect()
}

/// `Σ_a e_ij^{(a)}`: replaces one letter `j` by `i`, summed over positions.
pub fn gl_generator(i: usize, j: usize, n: usize, r: usize) -> Result<LinearOperator> {
    if i == 0 || j == 0 || i > r || j > r {
        return Err(Error::OutOfRange(format!("e_({i},{j}) for r = {r}")));
    }
    let dim = dimension(n, r)?;
    let mut out = LinearOperator::zero(dim);
    for idx in 0..dim {
        let w = word_at(idx, n, r);
        for a in 0..n {
            if w[a] as usize == j {
                let mut v = w.clone();
                v[a] = i as u32;
                out.add_entry(word_index(&v, r), idx, BigRational::one());
            }
        }
    }
    Ok(out)
}
