//! Diagonal ring automorphisms with cyclotomic scalars, conjugation of
//! derivations, and the twisted averaging constructions built on them: orbit
//! products, averaged cofactors, and the generic-cofactor vanishing test.

use crate::context::VarContext;
use crate::cyclotomic::Cyc8;
use crate::derivation::{is_darboux_pair, DarbouxPair, Derivation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Poly;

/// Automorphism xᵢ ↦ sᵢ·xᵢ with nonzero scalars sᵢ in Q(ζ₈).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagonalAutomorphism {
    ctx: VarContext,
    scalars: Vec<Cyc8>,
}

impl DiagonalAutomorphism {
    pub fn new(ctx: &VarContext, scalars: Vec<Cyc8>) -> Result<Self> {
        if scalars.len() != ctx.arity() {
            return Err(Error::ArityMismatch {
                expected: ctx.arity(),
                found: scalars.len(),
            });
        }
        if let Some(i) = scalars.iter().position(|s| s.is_zero()) {
            return Err(Error::BadSpec(format!(
                "automorphism scalar for `{}` is zero",
                ctx.name(i)
            )));
        }
        Ok(DiagonalAutomorphism {
            ctx: ctx.clone(),
            scalars,
        })
    }

    pub fn identity(ctx: &VarContext) -> Self {
        DiagonalAutomorphism {
            ctx: ctx.clone(),
            scalars: vec![Cyc8::one(); ctx.arity()],
        }
    }

    /// Scalars ζ^{eᵢ} from a list of exponents of the eighth root of unity.
    pub fn from_zeta_exponents(ctx: &VarContext, exponents: &[i64]) -> Result<Self> {
        let scalars = exponents.iter().map(|&e| Cyc8::zeta_pow(e)).collect();
        DiagonalAutomorphism::new(ctx, scalars)
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn scalars(&self) -> &[Cyc8] {
        &self.scalars
    }

    pub fn apply(&self, f: &Poly<Cyc8>) -> Poly<Cyc8> {
        assert_eq!(f.context(), &self.ctx, "polynomial from a different context");
        f.substitute_diagonal(&self.scalars)
    }

    /// Componentwise inverse; total because scalars are nonzero.
    pub fn inverse(&self) -> Self {
        DiagonalAutomorphism {
            ctx: self.ctx.clone(),
            scalars: self
                .scalars
                .iter()
                .map(|s| s.inv().expect("scalars are nonzero by construction"))
                .collect(),
        }
    }

    /// Composition (scalars multiply; diagonal automorphisms commute).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "automorphisms over different contexts");
        DiagonalAutomorphism {
            ctx: self.ctx.clone(),
            scalars: self
                .scalars
                .iter()
                .zip(&other.scalars)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn power(&self, i: u32) -> Self {
        DiagonalAutomorphism {
            ctx: self.ctx.clone(),
            scalars: self.scalars.iter().map(|s| s.pow(i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.scalars.iter().all(Cyc8::is_one)
    }

    /// The conjugated derivation xᵢ ↦ σ⁻¹(d(σ(xᵢ))).
    pub fn conjugate(&self, d: &Derivation<Cyc8>) -> Derivation<Cyc8> {
        assert_eq!(d.context(), &self.ctx, "derivation over a different context");
        let inv = self.inverse();
        let images = (0..self.ctx.arity())
            .map(|i| {
                let sigma_xi = Poly::var(&self.ctx, i).scale(&self.scalars[i]);
                inv.apply(&d.apply(&sigma_xi))
            })
            .collect();
        Derivation::new(&self.ctx, images).expect("arity preserved")
    }

    /// Π_{i=0}^{order−1} σⁱ(f), factors in ascending i. Requires σ^order to
    /// be the identity so the degree bookkeeping deg = order·deg f holds.
    pub fn orbit_product(&self, f: &Poly<Cyc8>, order: u32) -> Result<Poly<Cyc8>> {
        if order < 1 {
            return Err(Error::BadSpec("orbit order must be at least 1".into()));
        }
        if !self.power(order).is_identity() {
            return Err(Error::OrderMismatch(order));
        }
        let mut product = Poly::one(&self.ctx);
        let mut power = DiagonalAutomorphism::identity(&self.ctx);
        for _ in 0..order {
            product = product.mul(&power.apply(f));
            power = power.compose(self);
        }
        Ok(product)
    }

    /// Σ_{i=0}^{order−1} epsⁱ·σⁱ(lam), the cofactor picked up by an orbit
    /// product when conjugation scales the derivation by eps.
    pub fn averaged_cofactor(&self, eps: &Cyc8, lam: &Poly<Cyc8>, order: u32) -> Poly<Cyc8> {
        assert!(order >= 1, "orbit order must be at least 1");
        let mut sum = Poly::zero(&self.ctx);
        let mut power = DiagonalAutomorphism::identity(&self.ctx);
        let mut eps_pow = Cyc8::one();
        for _ in 0..order {
            sum = sum.add(&power.apply(lam).scale(&eps_pow));
            power = power.compose(self);
            eps_pow = &eps_pow * eps;
        }
        sum
    }

    /// Tests whether the averaged cofactor of a fully generic linear form
    /// vanishes identically: coefficients k₁..kₙ are adjoined as fresh ring
    /// variables (invariant under σ), the generic Λ = Σ kⱼ·xⱼ is averaged,
    /// and the result is compared with zero literally.
    pub fn generic_cofactor_vanishes(&self, eps: &Cyc8, order: u32) -> bool {
        let n = self.ctx.arity();
        let mut fresh = Vec::with_capacity(n);
        for j in 1..=n {
            let mut name = format!("k{j}");
            while self.ctx.index_of(&name).is_some() || fresh.contains(&name) {
                name.push('_');
            }
            fresh.push(name);
        }
        let ext = self
            .ctx
            .extend(fresh)
            .expect("fresh names are unique by construction");
        let mut lam = Poly::zero(&ext);
        for j in 0..n {
            let mut exps = vec![0u16; 2 * n];
            exps[j] = 1;
            exps[n + j] = 1;
            lam = lam.add(&Poly::from_term(&ext, Monomial::from_exponents(exps), Cyc8::one()));
        }
        let mut scalars = self.scalars.clone();
        scalars.extend(std::iter::repeat_n(Cyc8::one(), n));
        let extended = DiagonalAutomorphism::new(&ext, scalars)
            .expect("extension preserves nonzero scalars");
        extended.averaged_cofactor(eps, &lam, order).is_zero()
    }
}

/// Verifies the full orbit identity d(F̄) = Λ̄·F̄ for a Darboux pair, after
/// checking the two hypotheses it rests on: σ⁻¹dσ = eps·d and d(F) = Λ·F.
pub fn product_rule_check(
    d: &Derivation<Cyc8>,
    sigma: &DiagonalAutomorphism,
    eps: &Cyc8,
    pair: &DarbouxPair<Cyc8>,
    order: u32,
) -> Result<bool> {
    if sigma.conjugate(d) != d.scale(eps) {
        return Err(Error::ConjugationMismatch);
    }
    if !is_darboux_pair(d, pair) {
        return Err(Error::NotDarbouxPair);
    }
    let fbar = sigma.orbit_product(pair.polynomial(), order)?;
    let lbar = sigma.averaged_cofactor(eps, pair.cofactor(), order);
    Ok(d.apply(&fbar) == lbar.mul(&fbar))
}
