//! Exponent vectors with the graded reverse-lexicographic order.

use std::cmp::Ordering;

/// Power product of the context variables, stored as one exponent per
/// variable. Exponents are capped at 16 bits; arithmetic is checked and
/// overflow is a hard error, since silent wraparound would corrupt exact
/// results.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    /// The constant monomial (all exponents zero).
    pub fn unit(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index {index} out of range");
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Product of two power products.
    ///
    /// Panics if any exponent exceeds the 16-bit cap.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .unwrap_or_else(|| panic!("exponent overflow: {a} + {b} exceeds 16 bits"))
            })
            .collect();
        Monomial { exps }
    }

    /// `self / x_index`, or `None` when the variable does not divide.
    pub fn divide_by_var(&self, index: usize) -> Option<Monomial> {
        if self.exps[index] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[index] -= 1;
        Some(Monomial { exps })
    }

    /// Raise to the `n`-th power; panics on exponent overflow.
    pub fn pow(&self, n: u16) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&e| {
                let v = (e as u32).checked_mul(n as u32).unwrap();
                u16::try_from(v)
                    .unwrap_or_else(|_| panic!("exponent overflow: {e}^{n} exceeds 16 bits"))
            })
            .collect();
        Monomial { exps }
    }
}

impl Ord for Monomial {
    /// Graded reverse-lexicographic order, ascending: first by total degree;
    /// for equal degrees the monomial with the larger exponent at the last
    /// differing position is the smaller one. With variables x > y > z this
    /// yields x² > xy > y² > xz > yz > z².
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
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

/// All monomials of the given total degree, in descending grevlex order
/// (leading monomial first). This is the indexing used for linear-algebra
/// assembly and basis reconstruction.
pub fn monomials_of_degree(arity: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if arity == 0 {
        if degree == 0 {
            out.push(Monomial::unit(0));
        }
        return out;
    }
    let mut exps = vec![0u16; arity];
    fill(&mut out, &mut exps, 0, degree);
    out.sort();
    out.reverse();
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u16>, pos: usize, remaining: u32) {
    if pos + 1 == exps.len() {
        exps[pos] = u16::try_from(remaining).expect("degree exceeds exponent cap");
        out.push(Monomial::from_exponents(exps.clone()));
        return;
    }
    for e in 0..=remaining {
        exps[pos] = u16::try_from(e).expect("degree exceeds exponent cap");
        fill(out, exps, pos + 1, remaining - e);
    }
    exps[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn grevlex_orders_degree_two_in_three_vars() {
        // x² > xy > y² > xz > yz > z²
        let expected = vec![
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        assert_eq!(monomials_of_degree(3, 2), expected);
        for w in expected.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn degree_dominates() {
        assert!(m(&[0, 0, 3]) > m(&[2, 0, 0]));
    }

    #[test]
    fn count_matches_stars_and_bars() {
        // dim of degree-p forms in 4 variables is C(p+3, 3)
        assert_eq!(monomials_of_degree(4, 5).len(), 56);
        assert_eq!(monomials_of_degree(4, 0), vec![Monomial::unit(4)]);
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_is_a_hard_error() {
        let big = m(&[u16::MAX]);
        let one = m(&[1]);
        let _ = big.mul(&one);
    }

    #[test]
    fn divide_by_var() {
        let xy = m(&[1, 1]);
        assert_eq!(xy.divide_by_var(0), Some(m(&[0, 1])));
        assert_eq!(m(&[0, 1]).divide_by_var(0), None);
    }
}
