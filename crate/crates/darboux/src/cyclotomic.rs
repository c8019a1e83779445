//! Exact arithmetic in the eighth cyclotomic field Q(ζ₈).
//!
//! Elements are stored in the power basis 1, ζ, ζ², ζ³ with rational
//! coordinates; the reduction ζ⁴ = −1 keeps the representation unique. The
//! conductor is fixed at 8: that is the only root-of-unity field the
//! constructions here need, and a power-of-two conductor makes reduction a
//! sign flip.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::field::{Field, Rational};

/// Element of Q(ζ₈): `c0 + c1·ζ + c2·ζ² + c3·ζ³` with ζ a fixed primitive
/// eighth root of unity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyc8 {
    coords: [Rational; 4],
}

impl Cyc8 {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        Cyc8 {
            coords: [c0, c1, c2, c3],
        }
    }

    pub fn from_coords(coords: [Rational; 4]) -> Self {
        Cyc8 { coords }
    }

    /// Coordinates in the power basis 1, ζ, ζ², ζ³.
    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    pub fn from_rational(value: Rational) -> Self {
        Cyc8 {
            coords: [value, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    /// The generator ζ.
    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// ζ^r for any integer r, reduced mod 8 with sign folding through ζ⁴ = −1.
    pub fn zeta_pow(r: i64) -> Self {
        let k = r.rem_euclid(8) as usize;
        let mut coords = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        if k < 4 {
            coords[k] = Rational::one();
        } else {
            coords[k - 4] = -Rational::one();
        }
        Cyc8 { coords }
    }

    /// Σ_{i=0}^{7} ζ^{ri}: zero unless r ≡ 0 (mod 8), in which case it is 8.
    pub fn root_of_unity_sum(r: i64) -> Self {
        let mut acc = <Self as Field>::zero();
        for i in 0..8 {
            acc = Field::add(&acc, &Self::zeta_pow(r * i));
        }
        acc
    }

    /// Some(&q) when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn nonzero_coords(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplicative inverse, obtained by solving the 4×4 linear system
    /// `self · x = 1` over the rationals in the power basis. `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        // Column j of the multiplication matrix is self · ζ^j.
        let mut aug: Vec<Vec<Rational>> = vec![vec![Rational::zero(); 5]; 4];
        for (j, col) in mult_columns(&self.coords).into_iter().enumerate() {
            for i in 0..4 {
                aug[i][j] = col[i].clone();
            }
        }
        aug[0][4] = Rational::one();
        // Gaussian elimination with partial (first nonzero) pivoting.
        for col in 0..4 {
            let pivot = (col..4).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            for entry in aug[col].iter_mut() {
                *entry = &*entry / &p;
            }
            let pivot_row = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (entry, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *entry = &*entry - &(&f * p);
                    }
                }
            }
        }
        Some(Cyc8 {
            coords: [
                aug[0][4].clone(),
                aug[1][4].clone(),
                aug[2][4].clone(),
                aug[3][4].clone(),
            ],
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        Field::pow(self, exp)
    }
}

/// Columns of the multiplication-by-`a` matrix in the basis 1, ζ, ζ², ζ³:
/// multiplying by ζ shifts coordinates up one slot and negates the overflow.
fn mult_columns(a: &[Rational; 4]) -> Vec<[Rational; 4]> {
    let mut cols = Vec::with_capacity(4);
    let mut current = a.clone();
    for _ in 0..4 {
        cols.push(current.clone());
        current = [
            -current[3].clone(),
            current[0].clone(),
            current[1].clone(),
            current[2].clone(),
        ];
    }
    cols
}

impl Field for Cyc8 {
    fn zero() -> Self {
        Cyc8::from_rational(Rational::zero())
    }

    fn one() -> Self {
        Cyc8::from_rational(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    fn neg(&self) -> Self {
        Cyc8 {
            coords: [
                -self.coords[0].clone(),
                -self.coords[1].clone(),
                -self.coords[2].clone(),
                -self.coords[3].clone(),
            ],
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut coords = self.coords.clone();
        for (a, b) in coords.iter_mut().zip(rhs.coords.iter()) {
            *a = &*a + b;
        }
        Cyc8 { coords }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut coords = self.coords.clone();
        for (a, b) in coords.iter_mut().zip(rhs.coords.iter()) {
            *a = &*a - b;
        }
        Cyc8 { coords }
    }

    fn mul(&self, rhs: &Self) -> Self {
        // Convolution reduced by ζ⁴ = −1: the i+j ≥ 4 part flips sign.
        let mut coords: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                let k = i + j;
                if k < 4 {
                    coords[k] = &coords[k] + &prod;
                } else {
                    coords[k - 4] = &coords[k - 4] - &prod;
                }
            }
        }
        Cyc8 { coords }
    }

    fn inv(&self) -> Option<Self> {
        Cyc8::inv(self)
    }

    fn from_rational(value: &Rational) -> Self {
        Cyc8::from_rational(value.clone())
    }

    fn scalar_ident(name: &str) -> Option<Self> {
        if name == "z8" {
            Some(Cyc8::zeta())
        } else {
            None
        }
    }

    fn has_leading_minus(&self) -> bool {
        self.coords
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.is_negative())
            .unwrap_or(false)
    }

    fn needs_parens(&self) -> bool {
        self.nonzero_coords() > 1
    }
}

impl Add for &Cyc8 {
    type Output = Cyc8;
    fn add(self, rhs: &Cyc8) -> Cyc8 {
        Field::add(self, rhs)
    }
}

impl Sub for &Cyc8 {
    type Output = Cyc8;
    fn sub(self, rhs: &Cyc8) -> Cyc8 {
        Field::sub(self, rhs)
    }
}

impl Mul for &Cyc8 {
    type Output = Cyc8;
    fn mul(self, rhs: &Cyc8) -> Cyc8 {
        Field::mul(self, rhs)
    }
}

impl Neg for &Cyc8 {
    type Output = Cyc8;
    fn neg(self) -> Cyc8 {
        Field::neg(self)
    }
}

impl fmt::Display for Cyc8 {
    /// Canonical textual form `a0 + a1*z8 + a2*z8^2 + a3*z8^3`, zero
    /// components omitted, rationals as `p/q`; the zero element prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Field::is_zero(self) {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let sym = match j {
                0 => "",
                1 => "z8",
                2 => "z8^2",
                _ => "z8^3",
            };
            if j == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{mag}*{sym}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn zp(r: i64) -> Cyc8 {
        Cyc8::zeta_pow(r)
    }

    #[test]
    fn addition() {
        let one = <Cyc8 as Field>::one();
        assert!(Field::is_zero(&Field::add(&one, &Field::neg(&one))));
        assert_eq!(
            Field::add(&zp(3), &zp(3)),
            Cyc8::new(rat(0, 1), rat(0, 1), rat(0, 1), rat(2, 1))
        );
        // ζ⁶ = −ζ², so ζ² + ζ⁶ = 0.
        assert!(Field::is_zero(&Field::add(&zp(2), &zp(6))));
    }

    #[test]
    fn multiplication_reduces_exponents_mod_8() {
        assert_eq!(Field::mul(&zp(3), &zp(14)), zp(1));
        assert!(Field::is_one(&Field::mul(&zp(4), &zp(4))));
        // (1 + ζ)(1 − ζ) = 1 − ζ².
        let one = <Cyc8 as Field>::one();
        let a = Field::add(&one, &zp(1));
        let b = Field::sub(&one, &zp(1));
        assert_eq!(Field::mul(&a, &b), Field::sub(&one, &zp(2)));
    }

    #[test]
    fn inverse() {
        assert_eq!(zp(3).inv().unwrap(), zp(5));
        assert_eq!(zp(5), Field::neg(&zp(1)));
        assert!(Field::is_one(&<Cyc8 as Field>::one().inv().unwrap()));
        let a = Field::add(&<Cyc8 as Field>::one(), &zp(1));
        let inv = a.inv().unwrap();
        assert!(Field::is_one(&Field::mul(&a, &inv)));
        assert_eq!(<Cyc8 as Field>::zero().inv(), None);
    }

    #[test]
    fn zeta_powers_fold_signs() {
        assert_eq!(zp(17), zp(1));
        assert!(Field::is_one(&zp(0)));
        assert_eq!(zp(-1), Field::neg(&zp(3)));
        assert!(Field::is_one(&Field::mul(&zp(1), &zp(-1))));
    }

    #[test]
    fn root_of_unity_sums() {
        let eight = Cyc8::from_rational(rat(8, 1));
        for r in 1..8 {
            assert!(
                Field::is_zero(&Cyc8::root_of_unity_sum(r)),
                "sum for r={r} should vanish"
            );
        }
        for r in [0, 8, 16] {
            assert_eq!(Cyc8::root_of_unity_sum(r), eight);
        }
        assert!(Field::is_zero(&Cyc8::root_of_unity_sum(4)));
        assert!(Field::is_zero(&Cyc8::root_of_unity_sum(3)));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(zp(3).to_string(), "z8^3");
        assert_eq!(Field::neg(&zp(1)).to_string(), "-z8");
        assert_eq!(<Cyc8 as Field>::zero().to_string(), "0");
        let x = Cyc8::new(rat(1, 2), rat(0, 1), rat(-3, 1), rat(0, 1));
        assert_eq!(x.to_string(), "1/2 - 3*z8^2");
    }
}
