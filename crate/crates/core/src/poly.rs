//! Univariate polynomials over a finite field as coefficient lists, low degree first.

use crate::field::{FieldElement, FiniteField};

pub type Polynomial = Vec<FieldElement>;

pub fn degree(f: &[FieldElement]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

pub fn eval(field: &FiniteField, f: &[FieldElement], x: FieldElement) -> FieldElement {
    f.iter().rev().fold(FieldElement::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
}

/// All distinct roots of `f` in the field, in increasing element order, by
/// evaluating at every element. The zero polynomial has no well-defined
/// root set and yields the whole field.
pub fn distinct_roots_in_field(field: &FiniteField, f: &[FieldElement]) -> Vec<FieldElement> {
    field.elements().filter(|&x| eval(field, f, x).is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &FiniteField, xs: &[i64]) -> Polynomial {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn roots_of_x2_minus_x_over_gf3() {
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(distinct_roots_in_field(&f, &poly(&f, &[0, -1, 1])), poly(&f, &[0, 1]));
    }

    #[test]
    fn x2_x_1_has_no_roots_over_gf2() {
        let f = FiniteField::new(2, 1).unwrap();
        assert!(distinct_roots_in_field(&f, &poly(&f, &[1, 1, 1])).is_empty());
    }

    #[test]
    fn x3_minus_x_vanishes_on_gf3() {
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(distinct_roots_in_field(&f, &poly(&f, &[0, -1, 0, 1])), poly(&f, &[0, 1, 2]));
    }

    #[test]
    fn x2_x_1_splits_over_gf4() {
        let f = FiniteField::new(2, 2).unwrap();
        let roots = distinct_roots_in_field(&f, &poly(&f, &[1, 1, 1]));
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert_eq!(f.pow(r, 3), f.one());
            assert_ne!(r, f.one());
        }
    }

    #[test]
    fn degree_ignores_trailing_zeros() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(degree(&poly(&f, &[1, 2, 0, 0])), Some(1));
        assert_eq!(degree(&poly(&f, &[0, 0])), None);
    }
}
