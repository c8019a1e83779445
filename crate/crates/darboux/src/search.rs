//! Bounded-degree linear searches built on exact nullspaces: polynomial
//! constants, Darboux spaces with a fixed cofactor, and the per-variable
//! cofactor elimination induced by a diagonal symmetry.
//!
//! Matrix assembly indexes source monomials (columns) and target monomials
//! (rows) in descending graded reverse-lexicographic order, so identical
//! inputs always produce identical matrices, bases, and reports.

use std::collections::BTreeMap;

use crate::autom::DiagonalAutomorphism;
use crate::cyclotomic::Cyc8;
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::grading::{
    derivation_homogeneity, homogeneous_degree, SymmetrySolution, WeightVector,
};
use crate::linalg::ExactMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Poly;

/// Assembled coefficient system of a linear map between graded slices:
/// column j is the source monomial `columns[j]`, row i the target monomial of
/// the same index in the target slice.
pub struct AssembledSystem {
    pub matrix: ExactMatrix,
    pub columns: Vec<Monomial>,
}

/// Homogeneity shift of `d` for the all-ones grading, or the error the
/// searches report for inhomogeneous derivations.
pub fn standard_shift(d: &Derivation<Rational>) -> Result<i64> {
    derivation_homogeneity(d, &WeightVector::standard(d.context().arity()))
        .ok_or(Error::Inhomogeneous)
}

fn assemble<G>(d: &Derivation<Rational>, p: u32, image_of: G) -> Result<AssembledSystem>
where
    G: Fn(&Poly<Rational>) -> Poly<Rational>,
{
    let s = standard_shift(d)?;
    let n = d.context().arity();
    let columns = monomials_of_degree(n, p);
    let target = p as i64 + s;
    let targets = if target < 0 {
        Vec::new()
    } else {
        monomials_of_degree(n, target as u32)
    };
    let row_index: BTreeMap<&Monomial, usize> =
        targets.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = ExactMatrix::new(targets.len(), columns.len());
    for (j, mono) in columns.iter().enumerate() {
        let source = Poly::from_term(d.context(), mono.clone(), Rational::one());
        for (m, c) in image_of(&source).terms() {
            let i = *row_index
                .get(m)
                .expect("image term escaped the graded target slice");
            matrix.add_to(i, j, c.clone());
        }
    }
    Ok(AssembledSystem { matrix, columns })
}

/// Coefficient system of F ↦ d(F) on the degree-p slice.
pub fn constants_system(d: &Derivation<Rational>, p: u32) -> Result<AssembledSystem> {
    assemble(d, p, |f| d.apply(f))
}

/// Coefficient system of F ↦ d(F) − Λ·F on the degree-p slice.
pub fn darboux_system(
    d: &Derivation<Rational>,
    lam: &Poly<Rational>,
    p: u32,
) -> Result<AssembledSystem> {
    let s = standard_shift(d)?;
    if !lam.is_zero() {
        let std = WeightVector::standard(d.context().arity());
        match homogeneous_degree(lam, &std) {
            Some(deg) if deg == s => {}
            Some(deg) => {
                return Err(Error::CofactorDegree {
                    expected: s,
                    found: deg.to_string(),
                })
            }
            None => {
                return Err(Error::CofactorDegree {
                    expected: s,
                    found: "inhomogeneous".into(),
                })
            }
        }
    }
    assemble(d, p, |f| d.apply(f).sub(&lam.mul(f)))
}

/// Rebuilds polynomials from nullspace vectors over the column monomials and
/// normalizes each to leading coefficient 1 (the spanned space is unchanged;
/// printing becomes canonical).
fn reconstruct(
    ctx: &crate::context::VarContext,
    columns: &[Monomial],
    vectors: &[Vec<Rational>],
) -> Vec<Poly<Rational>> {
    vectors
        .iter()
        .map(|v| {
            let mut p = Poly::zero(ctx);
            for (j, coeff) in v.iter().enumerate() {
                if !coeff.is_zero() {
                    p = p.add(&Poly::from_term(ctx, columns[j].clone(), coeff.clone()));
                }
            }
            let lead_inv = p
                .terms_desc()
                .next()
                .filter(|(_, lead)| !lead.is_one())
                .map(|(_, lead)| lead.inv().expect("leading coefficient is nonzero"));
            match lead_inv {
                Some(inv) => p.scale(&inv),
                None => p,
            }
        })
        .collect()
}

/// Basis of the polynomial constants of degree exactly p: the nullspace of
/// F ↦ d(F) on the degree-p slice, leading-coefficient-normalized, in
/// deterministic echelon order. Requires a standard-homogeneous derivation.
/// Every returned element is re-verified to be annihilated exactly.
pub fn constants_basis(d: &Derivation<Rational>, p: u32) -> Result<Vec<Poly<Rational>>> {
    let system = constants_system(d, p)?;
    let vectors = system.matrix.nullspace();
    let basis = reconstruct(d.context(), &system.columns, &vectors);
    for b in &basis {
        if !d.apply(b).is_zero() {
            return Err(Error::Internal(
                "constants basis element is not annihilated by the derivation".into(),
            ));
        }
    }
    Ok(basis)
}

/// Nonconstant polynomial constants of degree ≤ maxdeg for an arbitrary
/// derivation: the constant monomial is excluded from the source space, which
/// quotients out the ground field.
pub fn constants_basis_inhomogeneous(
    d: &Derivation<Rational>,
    maxdeg: u32,
) -> Result<Vec<Poly<Rational>>> {
    let n = d.context().arity();
    let mut columns = Vec::new();
    for p in 1..=maxdeg {
        columns.extend(monomials_of_degree(n, p));
    }
    let mut images = Vec::with_capacity(columns.len());
    let mut targets: std::collections::BTreeSet<Monomial> = std::collections::BTreeSet::new();
    for mono in &columns {
        let image = d.apply(&Poly::from_term(d.context(), mono.clone(), Rational::one()));
        for (m, _) in image.terms() {
            targets.insert(m.clone());
        }
        images.push(image);
    }
    let row_index: BTreeMap<&Monomial, usize> =
        targets.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = ExactMatrix::new(targets.len(), columns.len());
    for (j, image) in images.iter().enumerate() {
        for (m, c) in image.terms() {
            matrix.add_to(row_index[m], j, c.clone());
        }
    }
    let vectors = matrix.nullspace();
    let basis = reconstruct(d.context(), &columns, &vectors);
    for b in &basis {
        if !d.apply(b).is_zero() || b.is_constant() {
            return Err(Error::Internal(
                "filtered constants basis element failed re-verification".into(),
            ));
        }
    }
    Ok(basis)
}

/// Darboux polynomials of degree exactly p with the fixed cofactor Λ:
/// nullspace of F ↦ d(F) − Λ·F. Λ must be zero or standard-homogeneous of
/// the derivation's shift degree. Each element is re-verified exactly.
pub fn darboux_basis_fixed_cofactor(
    d: &Derivation<Rational>,
    lam: &Poly<Rational>,
    p: u32,
) -> Result<Vec<Poly<Rational>>> {
    let system = darboux_system(d, lam, p)?;
    let vectors = system.matrix.nullspace();
    let basis = reconstruct(d.context(), &system.columns, &vectors);
    for b in &basis {
        if d.apply(b) != lam.mul(b) {
            return Err(Error::Internal(
                "fixed-cofactor basis element failed re-verification".into(),
            ));
        }
    }
    Ok(basis)
}

/// Per-variable outcome of symmetry averaging applied to a generic linear
/// cofactor: variable j is eliminated when Σᵢ ζ^{(c+ωⱼ)i} = 0, i.e. when
/// (c + ωⱼ) ≢ 0 (mod m).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EliminationEntry {
    pub variable: String,
    pub residue: i64,
    pub eliminated: bool,
}

/// Result of [`eliminate_cofactors`]: all-eliminated means every possible
/// linear Darboux cofactor of the derivation is forced to zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EliminationReport {
    pub entries: Vec<EliminationEntry>,
    pub lambda_forced_zero: bool,
    /// True when the residue arithmetic was additionally replayed through the
    /// cyclotomic averaging machinery (possible whenever m divides 8).
    pub cross_checked: bool,
}

/// Decides, for each variable, whether the symmetry (ω, c) mod m forces the
/// corresponding coefficient of a linear Darboux cofactor to vanish. The
/// derivation must be standard-homogeneous of degree 1, the only case in
/// which cofactors are linear forms. When the modulus divides 8 the verdict
/// is cross-validated against the generic cyclotomic averaging; disagreement
/// is an internal error.
pub fn eliminate_cofactors(
    d: &Derivation<Rational>,
    sol: &SymmetrySolution,
) -> Result<EliminationReport> {
    let s = standard_shift(d)?;
    if s != 1 {
        return Err(Error::EliminationDegree(s));
    }
    let ctx = d.context();
    assert_eq!(
        sol.weights().arity(),
        ctx.arity(),
        "symmetry arity mismatch"
    );
    let m = sol.modulus() as i64;
    let entries: Vec<EliminationEntry> = (0..ctx.arity())
        .map(|j| {
            let residue = (sol.shift() + sol.weights().weights()[j]).rem_euclid(m);
            EliminationEntry {
                variable: ctx.name(j).to_string(),
                residue,
                eliminated: residue != 0,
            }
        })
        .collect();
    let lambda_forced_zero = entries.iter().all(|e| e.eliminated);

    let mut cross_checked = false;
    if 8 % m == 0 {
        let k = 8 / m;
        let exponents: Vec<i64> = sol.weights().weights().iter().map(|w| w * k).collect();
        let sigma = DiagonalAutomorphism::from_zeta_exponents(ctx, &exponents)?;
        let eps = Cyc8::zeta_pow(sol.shift() * k);
        let vanishes = sigma.generic_cofactor_vanishes(&eps, sol.modulus());
        if vanishes != lambda_forced_zero {
            return Err(Error::Internal(format!(
                "residue elimination says forced={lambda_forced_zero} but cyclotomic averaging says vanishes={vanishes}"
            )));
        }
        cross_checked = true;
    }

    Ok(EliminationReport {
        entries,
        lambda_forced_zero,
        cross_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VarContext;
    use crate::grading::find_symmetry_weights;
    use crate::linalg::dense_nullspace;
    use crate::parser::parse_poly;

    fn p(text: &str, ctx: &VarContext) -> Poly<Rational> {
        parse_poly(text, ctx).unwrap()
    }

    #[test]
    fn rotation_constant_at_degree_two() {
        let d = Derivation::rotation();
        let basis = constants_basis(&d, 2).unwrap();
        let ctx = d.context().clone();
        assert_eq!(basis, vec![p("x^2 - y^2", &ctx)]);
        // and the assembled system has rank 2, nullity 1
        let system = constants_system(&d, 2).unwrap();
        assert_eq!(system.matrix.rank(), 2);
    }

    #[test]
    fn degree_zero_constants_are_the_ground_field() {
        let d = Derivation::cyclic_squares();
        let basis = constants_basis(&d, 0).unwrap();
        assert_eq!(basis, vec![Poly::one(d.context())]);
    }

    #[test]
    fn worked_example_constants_are_generated_by_two_binomials() {
        // d(xz) = zt² + xy² = d(yt) and d(xy²) = y²t² + 2xyzt = d(zt²), so
        // xz − yt and xy² − zt² lie in the kernel; the per-degree nullities
        // match the count of monomials in those two generators.
        let d = Derivation::cyclic_squares();
        let ctx = d.context().clone();
        let g2 = p("x*z - y*t", &ctx);
        let g3 = p("x*y^2 - z*t^2", &ctx);
        assert!(d.apply(&g2).is_zero());
        assert!(d.apply(&g3).is_zero());

        assert!(constants_basis(&d, 1).unwrap().is_empty());
        assert_eq!(constants_basis(&d, 2).unwrap(), vec![g2.clone()]);
        assert_eq!(constants_basis(&d, 3).unwrap(), vec![g3.clone()]);
        assert_eq!(constants_basis(&d, 4).unwrap(), vec![g2.mul(&g2)]);

        let nullities: Vec<usize> = (1..=8u32)
            .map(|p| constants_basis(&d, p).unwrap().len())
            .collect();
        assert_eq!(nullities, vec![0, 1, 1, 1, 1, 2, 1, 2]);
    }

    #[test]
    fn sparse_agrees_with_dense_on_assembled_systems() {
        let d = Derivation::cyclic_squares();
        for p in 1..=5u32 {
            let system = constants_system(&d, p).unwrap();
            assert!(system.matrix.ncols() <= 200);
            assert_eq!(
                system.matrix.nullspace(),
                dense_nullspace(&system.matrix.to_dense(), system.matrix.ncols())
            );
        }
    }

    #[test]
    fn inhomogeneous_variant_matches_and_quotients_constants() {
        // the filtered search over degrees 1..=6 recovers exactly the
        // per-degree graded bases, concatenated in ascending degree
        let d = Derivation::cyclic_squares();
        let expected: Vec<Poly<Rational>> = (1..=6u32)
            .flat_map(|p| constants_basis(&d, p).unwrap())
            .collect();
        assert_eq!(expected.len(), 6);
        assert_eq!(constants_basis_inhomogeneous(&d, 6).unwrap(), expected);

        let rot = Derivation::rotation();
        let ctx = rot.context().clone();
        assert_eq!(
            constants_basis_inhomogeneous(&rot, 2).unwrap(),
            vec![p("x^2 - y^2", &ctx)]
        );

        let zero = Derivation::new(
            &VarContext::xyzt(),
            vec![
                Poly::zero(&VarContext::xyzt()),
                Poly::zero(&VarContext::xyzt()),
                Poly::zero(&VarContext::xyzt()),
                Poly::zero(&VarContext::xyzt()),
            ],
        )
        .unwrap();
        let basis = constants_basis_inhomogeneous(&zero, 1).unwrap();
        let c = VarContext::xyzt();
        assert_eq!(
            basis,
            vec![p("x", &c), p("y", &c), p("z", &c), p("t", &c)]
        );
    }

    #[test]
    fn fixed_cofactor_search() {
        let ctx = VarContext::new(["x"]).unwrap();
        let euler = Derivation::euler(&ctx);
        let basis = darboux_basis_fixed_cofactor(&euler, &Poly::one(&ctx), 1).unwrap();
        assert_eq!(basis, vec![Poly::var(&ctx, 0)]);

        let d = Derivation::cyclic_squares();
        let c4 = d.context().clone();
        let lam = p("x", &c4);
        assert!(darboux_basis_fixed_cofactor(&d, &lam, 1).unwrap().is_empty());

        // Λ = 0 reduces to the constants search
        for deg in 1..=4u32 {
            assert_eq!(
                darboux_basis_fixed_cofactor(&d, &Poly::zero(&c4), deg).unwrap(),
                constants_basis(&d, deg).unwrap()
            );
        }
    }

    #[test]
    fn fixed_cofactor_rejects_wrong_degrees() {
        let d = Derivation::cyclic_squares();
        let ctx = d.context().clone();
        assert!(matches!(
            darboux_basis_fixed_cofactor(&d, &p("x^2", &ctx), 1),
            Err(Error::CofactorDegree { expected: 1, .. })
        ));
        assert!(matches!(
            darboux_basis_fixed_cofactor(&d, &p("x + x^2", &ctx), 1),
            Err(Error::CofactorDegree { .. })
        ));
    }

    #[test]
    fn elimination_on_the_worked_example() {
        let d = Derivation::cyclic_squares();
        let beta = d.exponent_matrix().unwrap();
        let sols = find_symmetry_weights(&beta, 8).unwrap();
        let sol = sols
            .iter()
            .find(|s| s.weights().weights() == [3, 5, 3, 1])
            .unwrap();
        let report = eliminate_cofactors(&d, sol).unwrap();
        assert!(report.lambda_forced_zero);
        assert!(report.cross_checked);
        let residues: Vec<i64> = report.entries.iter().map(|e| e.residue).collect();
        assert_eq!(residues, vec![4, 6, 4, 2]);

        let trivial = sols.iter().find(|s| s.is_trivial()).unwrap();
        let report = eliminate_cofactors(&d, trivial).unwrap();
        assert!(!report.lambda_forced_zero);
        assert!(report.entries.iter().all(|e| !e.eliminated));
    }

    #[test]
    fn elimination_with_a_surviving_variable() {
        let d = Derivation::cyclic_squares();
        let sol = SymmetrySolution::new(WeightVector::new(vec![7, 5, 3, 1], 8), 1).unwrap();
        let report = eliminate_cofactors(&d, &sol).unwrap();
        assert!(!report.lambda_forced_zero);
        assert!(!report.entries[0].eliminated);
        assert_eq!(report.entries[0].residue, 0);
        assert!(report.entries[1..].iter().all(|e| e.eliminated));
    }

    #[test]
    fn elimination_requires_degree_one() {
        // jouanolou(3) has cubic images, so it is homogeneous of degree 2
        let jou = Derivation::jouanolou(3);
        let sol = SymmetrySolution::new(WeightVector::new(vec![1, 2, 4], 7), 0).unwrap();
        assert!(matches!(
            eliminate_cofactors(&jou, &sol),
            Err(Error::EliminationDegree(2))
        ));
    }

    #[test]
    fn scaling_leaves_constants_bases_unchanged() {
        let d = Derivation::cyclic_squares();
        let scaled = d.scale(&Rational::new(7.into(), 3.into()));
        for p in 1..=4u32 {
            assert_eq!(
                constants_basis(&d, p).unwrap(),
                constants_basis(&scaled, p).unwrap()
            );
        }
        let rot = Derivation::rotation();
        let neg = rot.scale(&Rational::from_integer((-2).into()));
        assert_eq!(
            constants_basis(&rot, 2).unwrap(),
            constants_basis(&neg, 2).unwrap()
        );
    }

    #[test]
    fn inhomogeneous_derivations_are_rejected_by_graded_search() {
        let ctx = VarContext::new(["x", "y"]).unwrap();
        let d = Derivation::new(&ctx, vec![p("y", &ctx), p("x^2", &ctx)]).unwrap();
        assert!(matches!(constants_basis(&d, 2), Err(Error::Inhomogeneous)));
        // the filtered variant still works
        assert!(constants_basis_inhomogeneous(&d, 2).is_ok());
    }
}
