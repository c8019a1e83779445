//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms live in a `BTreeMap` keyed by the grevlex order, so iteration,
//! printing and every downstream computation are deterministic. Zero
//! coefficients are never stored. Values are immutable: every operation
//! returns a fresh polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::context::VarContext;
use crate::field::Field;
use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<F: Field> {
    ctx: VarContext,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(ctx: &VarContext) -> Self {
        Poly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &VarContext) -> Self {
        Poly::constant(ctx, F::one())
    }

    pub fn constant(ctx: &VarContext, value: F) -> Self {
        let mut p = Poly::zero(ctx);
        p.add_term(Monomial::unit(ctx.arity()), value);
        p
    }

    pub fn var(ctx: &VarContext, index: usize) -> Self {
        let mut p = Poly::zero(ctx);
        p.add_term(Monomial::var(ctx.arity(), index), F::one());
        p
    }

    pub fn from_term(ctx: &VarContext, mono: Monomial, coeff: F) -> Self {
        assert_eq!(mono.arity(), ctx.arity(), "monomial arity mismatch");
        let mut p = Poly::zero(ctx);
        p.add_term(mono, coeff);
        p
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    /// Terms in descending grevlex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, mono: &Monomial) -> F {
        self.terms.get(mono).cloned().unwrap_or_else(F::zero)
    }

    /// Total degree; `None` is the zero polynomial's sentinel (conventionally
    /// −∞), kept distinct from every integer so it cannot leak into degree
    /// arithmetic.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    /// Some(value) when the polynomial is constant (zero included).
    pub fn constant_value(&self) -> Option<F> {
        if self.is_zero() {
            Some(F::zero())
        } else if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    fn add_term(&mut self, mono: Monomial, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&coeff);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    fn assert_same_context(&self, other: &Poly<F>) {
        assert_eq!(
            self.ctx, other.ctx,
            "polynomials built over different variable contexts"
        );
    }

    pub fn add(&self, other: &Poly<F>) -> Poly<F> {
        self.assert_same_context(other);
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly<F> {
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly<F>) -> Poly<F> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly<F>) -> Poly<F> {
        self.assert_same_context(other);
        let mut out = Poly::zero(&self.ctx);
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, factor: &F) -> Poly<F> {
        if factor.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul(factor)))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u16) -> Poly<F> {
        let mut acc = Poly::one(&self.ctx);
        let mut base = self.clone();
        let mut exp = exp as u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Poly<F> {
        assert!(
            index < self.ctx.arity(),
            "unknown variable index {index} in context {}",
            self.ctx
        );
        let mut out = Poly::zero(&self.ctx);
        for (m, c) in self.terms.iter() {
            let e = m.exponent(index);
            if e == 0 {
                continue;
            }
            let lowered = m.divide_by_var(index).unwrap();
            out.add_term(lowered, c.mul(&F::from_integer(e as i64)));
        }
        out
    }

    /// Scales each term X^e by Π scalarᵢ^eᵢ, the diagonal substitution
    /// xᵢ ↦ scalarᵢ·xᵢ. One scalar per context variable.
    pub fn substitute_diagonal(&self, scalars: &[F]) -> Poly<F> {
        assert_eq!(
            scalars.len(),
            self.ctx.arity(),
            "one scalar per variable required"
        );
        let mut out = Poly::zero(&self.ctx);
        for (m, c) in self.terms.iter() {
            let mut factor = c.clone();
            for (scalar, &e) in scalars.iter().zip(m.exponents()) {
                if e > 0 {
                    factor = factor.mul(&scalar.pow(e as u32));
                }
            }
            out.add_term(m.clone(), factor);
        }
        out
    }

    /// Reinterpret the coefficients in another field through `f` (e.g. embed
    /// rational polynomials into the cyclotomic field).
    pub fn map_coeff<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        let mut out = Poly::zero(&self.ctx);
        for (m, c) in self.terms.iter() {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// The same polynomial over an extended context; `self`'s variables must
    /// be a prefix of `ctx`'s.
    pub fn extend_context(&self, ctx: &VarContext) -> Poly<F> {
        assert!(
            ctx.arity() >= self.ctx.arity()
                && ctx.names()[..self.ctx.arity()] == *self.ctx.names(),
            "target context does not extend the source context"
        );
        let pad = ctx.arity() - self.ctx.arity();
        let mut out = Poly::zero(ctx);
        for (m, c) in self.terms.iter() {
            let mut exps = m.exponents().to_vec();
            exps.extend(std::iter::repeat_n(0, pad));
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        out
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        Poly::add(self, rhs)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        Poly::sub(self, rhs)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        Poly::mul(self, rhs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::neg(self)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ctx: &VarContext, mono: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in mono.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", ctx.name(i))?;
        } else {
            write!(f, "{}^{}", ctx.name(i), e)?;
        }
    }
    Ok(())
}

impl<F: Field> fmt::Display for Poly<F> {
    /// Deterministic canonical form: terms in descending grevlex order,
    /// coefficient first, `*` written explicitly, no implicit multiplication.
    /// The output parses back to an equal polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in self.terms_desc() {
            // Sign folding only for coefficients that print as a single
            // product; sums are parenthesized and keep their own signs.
            let (negative, magnitude) = if !coeff.needs_parens() && coeff.has_leading_minus() {
                (true, coeff.neg())
            } else {
                (false, coeff.clone())
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let parens = magnitude.needs_parens();
            if mono.is_unit() {
                if parens {
                    write!(f, "({magnitude})")?;
                } else {
                    write!(f, "{magnitude}")?;
                }
            } else if magnitude.is_one() {
                write_monomial(f, &self.ctx, mono)?;
            } else {
                if parens {
                    write!(f, "({magnitude})*")?;
                } else {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, &self.ctx, mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyc8;
    use crate::field::Rational;

    fn ctx() -> VarContext {
        VarContext::xyzt()
    }

    fn var(c: &VarContext, name: &str) -> Poly<Rational> {
        Poly::var(c, c.index_of(name).unwrap())
    }

    #[test]
    fn product_of_conjugates() {
        let c = ctx();
        let x = var(&c, "x");
        let y = var(&c, "y");
        let lhs = (&x + &y).mul(&x.sub(&y));
        let rhs = &x.mul(&x) - &y.mul(&y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_annihilates() {
        let c = ctx();
        let f = var(&c, "x").add(&Poly::constant(&c, Rational::from_integer(7.into())));
        assert!(Poly::zero(&c).mul(&f).is_zero());
    }

    #[test]
    fn square_of_binomial() {
        // (y² + zt)² = y⁴ + 2y²zt + z²t²
        let c = ctx();
        let y = var(&c, "y");
        let z = var(&c, "z");
        let t = var(&c, "t");
        let f = &y.mul(&y) + &z.mul(&t);
        let sq = f.pow(2);
        let expected = &(&y.pow(4) + &y.pow(2).mul(&z).mul(&t).scale(&Rational::from_integer(2.into())))
            + &z.pow(2).mul(&t.pow(2));
        assert_eq!(sq, expected);
    }

    #[test]
    fn partial_derivatives() {
        let c = ctx();
        let t = var(&c, "t");
        let ti = c.index_of("t").unwrap();
        assert_eq!(
            t.pow(2).partial_derivative(ti),
            t.scale(&Rational::from_integer(2.into()))
        );
        let xy = var(&c, "x").mul(&var(&c, "y"));
        assert!(xy.partial_derivative(c.index_of("z").unwrap()).is_zero());
        // ∂(y⁴ + 2y²zt)/∂y = 4y³ + 4yzt
        let y = var(&c, "y");
        let z = var(&c, "z");
        let f = &y.pow(4) + &y.pow(2).mul(&z).mul(&t).scale(&Rational::from_integer(2.into()));
        let four = Rational::from_integer(4.into());
        let expected = &y.pow(3).scale(&four) + &y.mul(&z).mul(&t).scale(&four);
        assert_eq!(f.partial_derivative(c.index_of("y").unwrap()), expected);
    }

    #[test]
    fn total_degree_and_sentinel() {
        let c = ctx();
        let zt = var(&c, "z").mul(&var(&c, "t"));
        assert_eq!(zt.total_degree(), Some(2));
        assert_eq!(Poly::<Rational>::zero(&c).total_degree(), None);
        // product of eight degree-1 forms has degree 8
        let lin = var(&c, "x").add(&var(&c, "y"));
        let mut prod = Poly::one(&c);
        for _ in 0..8 {
            prod = prod.mul(&lin);
        }
        assert_eq!(prod.total_degree(), Some(8));
    }

    #[test]
    fn diagonal_substitution() {
        let c = ctx();
        let one = <Cyc8 as Field>::one();
        let zeta = Cyc8::zeta();
        let t: Poly<Cyc8> = Poly::var(&c, 3);
        let t2 = t.pow(2);
        let scalars = [one.clone(), one.clone(), one.clone(), zeta.clone()];
        assert_eq!(
            t2.substitute_diagonal(&scalars),
            t2.scale(&Cyc8::zeta_pow(2))
        );
        // all-ones scalars leave the polynomial unchanged
        let f: Poly<Cyc8> = Poly::var(&c, 0).mul(&Poly::var(&c, 1));
        let ones = vec![one.clone(); 4];
        assert_eq!(f.substitute_diagonal(&ones), f);
        // x·y with x ↦ ζ³x, y ↦ ζ⁵y picks up ζ⁸ = 1
        let scalars = [
            Cyc8::zeta_pow(3),
            Cyc8::zeta_pow(5),
            one.clone(),
            one.clone(),
        ];
        assert_eq!(f.substitute_diagonal(&scalars), f);
    }
}
