//! Derivations of the polynomial ring and their basic invariants.
//!
//! A derivation is stored extensionally as one image polynomial per
//! variable; the Leibniz rule then determines it everywhere via
//! `apply`. Monomial-ness is a predicate, not a subtype, so every
//! operation and property test runs on the same representation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::context::VarContext;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::monomial::Monomial;
use crate::poly::Poly;

/// Exponent matrix of a monomial derivation: row i is the exponent vector of
/// the image of variable i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentMatrix {
    rows: Vec<Vec<u16>>,
}

impl ExponentMatrix {
    pub fn new(rows: Vec<Vec<u16>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        Ok(ExponentMatrix { rows })
    }

    pub fn arity(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u16>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> u16 {
        self.rows[i][j]
    }

    /// det(β − I) as an exact integer, by fraction-free elimination.
    pub fn wd(&self) -> BigInt {
        let n = self.arity();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = BigInt::from(self.rows[i][j]);
                        if i == j {
                            v -= 1;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        bareiss_determinant(&mut a)
    }

    /// Zero diagonal and w_d ≠ 0.
    pub fn is_normal(&self) -> bool {
        (0..self.arity()).all(|i| self.rows[i][i] == 0) && !self.wd().is_zero()
    }
}

/// Determinant by the Bareiss fraction-free algorithm; all intermediate
/// divisions are exact over the integers. Consumes the matrix buffer.
fn bareiss_determinant(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Derivation of the polynomial ring, determined by its images on the
/// context variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation<F: Field> {
    ctx: VarContext,
    images: Vec<Poly<F>>,
}

impl<F: Field> Derivation<F> {
    pub fn new(ctx: &VarContext, images: Vec<Poly<F>>) -> Result<Self> {
        if images.len() != ctx.arity() {
            return Err(Error::ArityMismatch {
                expected: ctx.arity(),
                found: images.len(),
            });
        }
        for img in &images {
            assert_eq!(img.context(), ctx, "image built over a different context");
        }
        Ok(Derivation {
            ctx: ctx.clone(),
            images,
        })
    }

    /// Monomial derivation `x_i ↦ X^{β_i}` with unit coefficients.
    pub fn from_exponent_matrix(ctx: &VarContext, beta: &ExponentMatrix) -> Result<Self> {
        if beta.arity() != ctx.arity() {
            return Err(Error::ArityMismatch {
                expected: ctx.arity(),
                found: beta.arity(),
            });
        }
        let images = beta
            .rows()
            .iter()
            .map(|row| Poly::from_term(ctx, Monomial::from_exponents(row.clone()), F::one()))
            .collect();
        Derivation::new(ctx, images)
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn image(&self, i: usize) -> &Poly<F> {
        &self.images[i]
    }

    pub fn images(&self) -> &[Poly<F>] {
        &self.images
    }

    /// Σ d(xᵢ)·∂f/∂xᵢ, the unique extension of the images by the Leibniz
    /// rule.
    pub fn apply(&self, f: &Poly<F>) -> Poly<F> {
        assert_eq!(f.context(), &self.ctx, "polynomial from a different context");
        let mut out = Poly::zero(&self.ctx);
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let part = f.partial_derivative(i);
            if !part.is_zero() {
                out = out.add(&img.mul(&part));
            }
        }
        out
    }

    /// True when every image is a single nonzero term (a scalar multiple of a
    /// monomial).
    pub fn is_monomial(&self) -> bool {
        self.images.iter().all(|img| img.num_terms() == 1)
    }

    /// Exponent matrix of a monomial derivation; the coefficient of each
    /// image is ignored, only the power products matter.
    pub fn exponent_matrix(&self) -> Result<ExponentMatrix> {
        let mut rows = Vec::with_capacity(self.ctx.arity());
        for (i, img) in self.images.iter().enumerate() {
            if img.num_terms() != 1 {
                return Err(Error::NotMonomial(self.ctx.name(i).to_string()));
            }
            let (mono, _) = img.terms().next().unwrap();
            rows.push(mono.exponents().to_vec());
        }
        ExponentMatrix::new(rows)
    }

    pub fn scale(&self, factor: &F) -> Self {
        Derivation {
            ctx: self.ctx.clone(),
            images: self.images.iter().map(|img| img.scale(factor)).collect(),
        }
    }

    pub fn map_coeff<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> Derivation<G> {
        Derivation {
            ctx: self.ctx.clone(),
            images: self.images.iter().map(|img| img.map_coeff(f)).collect(),
        }
    }
}

impl Derivation<Rational> {
    /// The library's principal worked example on k[x,y,z,t]:
    /// d(x)=t², d(y)=zt, d(z)=y², d(t)=xy. Its exponent matrix has w_d = 0,
    /// yet a diagonal mod-8 symmetry eliminates every possible Darboux
    /// cofactor, so bounded-degree certification succeeds where the w_d
    /// criterion is silent.
    pub fn cyclic_squares() -> Self {
        let ctx = VarContext::xyzt();
        let beta = ExponentMatrix::new(vec![
            vec![0, 0, 0, 2],
            vec![0, 0, 1, 1],
            vec![0, 2, 0, 0],
            vec![1, 1, 0, 0],
        ])
        .unwrap();
        Derivation::from_exponent_matrix(&ctx, &beta).unwrap()
    }

    /// The Jouanolou derivation d(x)=z^s, d(y)=x^s, d(z)=y^s on k[x,y,z].
    pub fn jouanolou(s: u16) -> Self {
        let ctx = VarContext::new(["x", "y", "z"]).unwrap();
        let beta = ExponentMatrix::new(vec![
            vec![0, 0, s],
            vec![s, 0, 0],
            vec![0, s, 0],
        ])
        .unwrap();
        Derivation::from_exponent_matrix(&ctx, &beta).unwrap()
    }

    /// The Euler derivation d(xᵢ) = xᵢ over the given context.
    pub fn euler(ctx: &VarContext) -> Self {
        let images = (0..ctx.arity()).map(|i| Poly::var(ctx, i)).collect();
        Derivation::new(ctx, images).unwrap()
    }

    /// The rotation derivation d(x)=y, d(y)=x on k[x,y]; its constants
    /// include x²−y², the standard positive control for nullspace searches.
    pub fn rotation() -> Self {
        let ctx = VarContext::new(["x", "y"]).unwrap();
        let images = vec![Poly::var(&ctx, 1), Poly::var(&ctx, 0)];
        Derivation::new(&ctx, images).unwrap()
    }
}

/// Candidate Darboux polynomial together with its cofactor. The polynomial
/// part is required to be nonconstant at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DarbouxPair<F: Field> {
    f: Poly<F>,
    lambda: Poly<F>,
}

impl<F: Field> DarbouxPair<F> {
    pub fn new(f: Poly<F>, lambda: Poly<F>) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        assert_eq!(
            f.context(),
            lambda.context(),
            "pair members from different contexts"
        );
        Ok(DarbouxPair { f, lambda })
    }

    pub fn polynomial(&self) -> &Poly<F> {
        &self.f
    }

    pub fn cofactor(&self) -> &Poly<F> {
        &self.lambda
    }
}

/// Exact test of d(F) = Λ·F.
pub fn is_darboux_pair<F: Field>(d: &Derivation<F>, pair: &DarbouxPair<F>) -> bool {
    d.apply(pair.polynomial()) == pair.cofactor().mul(pair.polynomial())
}
