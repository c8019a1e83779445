//! Weight gradings of the polynomial ring, over Z (modulus 0) or Z/m, with
//! homogeneous decomposition and discovery of diagonal-symmetry weights for
//! monomial derivations.

use std::collections::BTreeMap;

use crate::derivation::{Derivation, ExponentMatrix};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Poly;

/// Upper bound on mⁿ for exhaustive symmetry enumeration.
pub const ENUMERATION_CAP: u128 = 1 << 20;

/// One integer weight per variable, graded over Z when `modulus` is 0 and
/// over Z/m when it is positive (weights then stored reduced to 0..m−1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVector {
    weights: Vec<i64>,
    modulus: u32,
}

impl WeightVector {
    pub fn new(weights: Vec<i64>, modulus: u32) -> Self {
        let weights = if modulus > 0 {
            weights
                .into_iter()
                .map(|w| w.rem_euclid(modulus as i64))
                .collect()
        } else {
            weights
        };
        WeightVector { weights, modulus }
    }

    /// All-ones Z-grading: weighted degree = total degree.
    pub fn standard(arity: usize) -> Self {
        WeightVector::new(vec![1; arity], 0)
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn reduce(&self, value: i64) -> i64 {
        if self.modulus > 0 {
            value.rem_euclid(self.modulus as i64)
        } else {
            value
        }
    }

    /// Σ wᵢ·eᵢ, reduced mod m when m > 0.
    pub fn degree(&self, mono: &Monomial) -> i64 {
        assert_eq!(mono.arity(), self.arity(), "monomial arity mismatch");
        let raw: i64 = self
            .weights
            .iter()
            .zip(mono.exponents())
            .map(|(w, &e)| w * e as i64)
            .sum();
        self.reduce(raw)
    }
}

/// Splits a polynomial into its weight-homogeneous parts; the parts sum back
/// to the input and the map is empty exactly for the zero polynomial.
pub fn homogeneous_components<F: Field>(
    poly: &Poly<F>,
    w: &WeightVector,
) -> BTreeMap<i64, Poly<F>> {
    let mut out: BTreeMap<i64, Poly<F>> = BTreeMap::new();
    for (mono, coeff) in poly.terms() {
        let d = w.degree(mono);
        let slot = out
            .entry(d)
            .or_insert_with(|| Poly::zero(poly.context()));
        *slot = slot.add(&Poly::from_term(poly.context(), mono.clone(), coeff.clone()));
    }
    out
}

/// Some(degree) when every term has the same weighted degree; `None` for the
/// zero polynomial (no degree) and for mixed polynomials.
pub fn homogeneous_degree<F: Field>(poly: &Poly<F>, w: &WeightVector) -> Option<i64> {
    let mut degree = None;
    for (mono, _) in poly.terms() {
        let d = w.degree(mono);
        match degree {
            None => degree = Some(d),
            Some(seen) if seen == d => {}
            Some(_) => return None,
        }
    }
    degree
}

/// The common shift s with degree(d(xᵢ)) − wᵢ ≡ s for every variable with a
/// nonzero image; `None` when some image is inhomogeneous or the shifts
/// disagree. The zero derivation is homogeneous of degree 0 by convention.
pub fn derivation_homogeneity<F: Field>(d: &Derivation<F>, w: &WeightVector) -> Option<i64> {
    assert_eq!(d.context().arity(), w.arity(), "weight arity mismatch");
    let mut shift: Option<i64> = None;
    for (i, img) in d.images().iter().enumerate() {
        if img.is_zero() {
            continue;
        }
        let deg = homogeneous_degree(img, w)?;
        let s = w.reduce(deg - w.weights[i]);
        match shift {
            None => shift = Some(s),
            Some(seen) if seen == s => {}
            Some(_) => return None,
        }
    }
    Some(shift.unwrap_or(0))
}

/// Weight vector mod m together with the shift c it induces: for every
/// variable, ωᵢ − ω·βᵢ ≡ c (mod m). Scaling variable i by ζ^{ωᵢ} for an m-th
/// root of unity ζ then conjugates the derivation to ζ^c times itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetrySolution {
    weights: WeightVector,
    shift: i64,
}

impl SymmetrySolution {
    /// Packages a weight vector and shift as a candidate symmetry. The
    /// weights must carry a positive modulus; the shift is reduced mod m.
    /// No congruence against any particular derivation is implied.
    pub fn new(weights: WeightVector, shift: i64) -> Result<Self> {
        if weights.modulus() < 1 {
            return Err(Error::InvalidModulus);
        }
        let shift = shift.rem_euclid(weights.modulus() as i64);
        Ok(SymmetrySolution { weights, shift })
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn modulus(&self) -> u32 {
        self.weights.modulus()
    }

    /// True for the all-zero weight vector (every derivation admits it).
    pub fn is_trivial(&self) -> bool {
        self.weights.weights().iter().all(|&w| w == 0)
    }

    /// Checks ωᵢ − ω·βᵢ ≡ c (mod m) for every row of the exponent matrix.
    pub fn satisfies(&self, beta: &ExponentMatrix) -> bool {
        if beta.arity() != self.weights.arity() {
            return false;
        }
        let m = self.modulus() as i64;
        let omega = self.weights.weights();
        (0..beta.arity()).all(|i| {
            let dot: i64 = beta
                .row(i)
                .iter()
                .zip(omega)
                .map(|(&b, &w)| b as i64 * w)
                .sum();
            (omega[i] - dot).rem_euclid(m) == self.shift
        })
    }
}

/// Exhaustively enumerates all (ω, c) in (Z/m)ⁿ × Z/m with
/// ωᵢ − ω·βᵢ ≡ c (mod m) for every i, in lexicographic order of ω.
/// Fails when mⁿ exceeds [`ENUMERATION_CAP`].
pub fn find_symmetry_weights(
    beta: &ExponentMatrix,
    m: u32,
) -> Result<Vec<SymmetrySolution>> {
    if m < 1 {
        return Err(Error::InvalidModulus);
    }
    let n = beta.arity();
    let mut candidates: u128 = 1;
    for _ in 0..n {
        candidates = candidates.saturating_mul(m as u128);
        if candidates > ENUMERATION_CAP {
            return Err(Error::EnumerationCap {
                candidates,
                cap: ENUMERATION_CAP,
            });
        }
    }

    let m_i = m as i64;
    let mut solutions = Vec::new();
    let mut omega = vec![0i64; n];
    loop {
        let mut common: Option<i64> = None;
        let mut consistent = true;
        for i in 0..n {
            let dot: i64 = beta
                .row(i)
                .iter()
                .zip(&omega)
                .map(|(&b, &w)| b as i64 * w)
                .sum();
            let c = (omega[i] - dot).rem_euclid(m_i);
            match common {
                None => common = Some(c),
                Some(seen) if seen == c => {}
                Some(_) => {
                    consistent = false;
                    break;
                }
            }
        }
        if consistent {
            solutions.push(SymmetrySolution {
                weights: WeightVector::new(omega.clone(), m),
                shift: common.unwrap_or(0),
            });
        }
        // Odometer increment in the last position keeps ω lexicographic.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(solutions);
            }
            pos -= 1;
            omega[pos] += 1;
            if omega[pos] < m_i {
                break;
            }
            omega[pos] = 0;
        }
    }
}
