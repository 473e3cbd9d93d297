//! Conway-normalized Alexander polynomials.
//!
//! Three independent routes are available for positive braid closures:
//! Seifert matrices ([`braid_poly`], the default), skein recursion
//! ([`skein_oracle`]) and the reduced Burau representation ([`burau_poly`]).

mod burau;
mod det;
mod skein;

pub use burau::{burau_poly, reduced_burau, reduced_burau_generator};
pub use det::{det_bareiss, det_laplace, det_laurent, LaurentMatrix, LAPLACE_MAX_DIM};
pub use skein::{skein_oracle, SkeinOracle};

use crate::braid::PositiveBraidWord;
use crate::laurent::HalfLaurent;
use crate::surfaces::{seifert_from_braid, seifert_from_tree, SeifertMatrix};
use crate::tree::PlaneTree;

/// `det(t^{-1/2} V - t^{1/2} Vᵀ)`.
pub fn from_seifert(v: &SeifertMatrix) -> HalfLaurent {
    let m = LaurentMatrix::from_fn(v.dim(), |i, j| {
        &HalfLaurent::monomial(-1, v.get(i, j)) - &HalfLaurent::monomial(1, v.get(j, i))
    });
    m.det()
}

/// Default route for positive braid closures: the unknot for one strand,
/// zero for split closures, otherwise the product of the Seifert-matrix
/// polynomials of the connected summands.
pub fn braid_poly(word: &PositiveBraidWord) -> HalfLaurent {
    if word.strands() == 1 {
        return HalfLaurent::one();
    }
    if !word.has_full_support() {
        return HalfLaurent::zero();
    }
    word.factor_single_occurrence()
        .expect("full support checked above")
        .iter()
        .map(|f| from_seifert(&seifert_from_braid(f)))
        .product()
}

/// Alexander polynomial of the arborescent plumbing of positive Hopf bands
/// along `tree`.
pub fn tree_poly(tree: &PlaneTree) -> HalfLaurent {
    from_seifert(&seifert_from_tree(tree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[usize]) -> PositiveBraidWord {
        PositiveBraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn from_seifert_examples() {
        assert_eq!(
            from_seifert(&seifert_from_braid(&w(2, &[1, 1]))),
            p("t^(1/2) - t^(-1/2)")
        );
        assert_eq!(
            from_seifert(&seifert_from_braid(&w(2, &[1, 1, 1]))),
            p("t - 1 + t^-1")
        );
        assert_eq!(
            from_seifert(&seifert_from_braid(
                &PositiveBraidWord::torus(3, 3).unwrap()
            )),
            p("t^2 - t - t^-1 + t^-2")
        );
    }

    #[test]
    fn braid_poly_examples() {
        assert!(braid_poly(&w(3, &[1, 1])).is_zero());
        assert_eq!(
            braid_poly(&w(2, &[1, 1, 1, 1, 1])),
            p("t^2 - t + 1 - t^-1 + t^-2")
        );
        assert_eq!(
            braid_poly(&w(3, &[1, 1, 1, 2, 2])),
            p("t - 1 + t^-1") * HalfLaurent::skein_factor()
        );
        assert_eq!(braid_poly(&w(1, &[])), HalfLaurent::one());
        assert_eq!(braid_poly(&w(2, &[1])), HalfLaurent::one());
    }

    #[test]
    fn tree_poly_examples() {
        assert_eq!(tree_poly(&PlaneTree::single()), HalfLaurent::skein_factor());
        assert_eq!(
            tree_poly(&PlaneTree::path(3)),
            p("t^(3/2) - t^(1/2) + t^(-1/2) - t^(-3/2)")
        );
        assert_eq!(tree_poly(&PlaneTree::star(4)), p("t^2 - t - t^-1 + t^-2"));
        let u = HalfLaurent::skein_factor();
        assert_eq!(tree_poly(&PlaneTree::star(4)), u.pow(4) + u.pow(2).scale(3));
        assert_eq!(
            tree_poly(&PlaneTree::path(3)),
            braid_poly(&w(2, &[1, 1, 1, 1]))
        );
    }

    #[test]
    fn permuting_the_basis_keeps_the_polynomial() {
        let v = seifert_from_braid(&PositiveBraidWord::torus(3, 4).unwrap());
        let perm: Vec<usize> = (0..v.dim()).rev().collect();
        assert_eq!(from_seifert(&v.permuted(&perm)), from_seifert(&v));
    }
}
