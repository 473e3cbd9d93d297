//! Alexander polynomials from the reduced Burau representation, an
//! independent cross-check of the Seifert-matrix route.

use crate::braid::PositiveBraidWord;
use crate::error::{Error, Result};
use crate::laurent::{ConwayParity, HalfLaurent};

use super::det::LaurentMatrix;

/// `t` as a [`HalfLaurent`].
fn t() -> HalfLaurent {
    HalfLaurent::monomial(2, 1)
}

/// Reduced Burau image of `σ_i` (1-based) on `strands` strands, an
/// `(n-1) × (n-1)` matrix over `Z[t^{±1}]`. For two strands this is `[-t]`.
pub fn reduced_burau_generator(strands: usize, i: usize) -> LaurentMatrix {
    let dim = strands - 1;
    let r = i - 1;
    LaurentMatrix::from_fn(dim, |a, b| {
        if a != r {
            if a == b {
                HalfLaurent::one()
            } else {
                HalfLaurent::zero()
            }
        } else if b == r {
            -t()
        } else if b + 1 == r {
            t()
        } else if b == r + 1 {
            HalfLaurent::one()
        } else {
            HalfLaurent::zero()
        }
    })
}

pub fn reduced_burau(word: &PositiveBraidWord) -> LaurentMatrix {
    let n = word.strands();
    word.letters()
        .iter()
        .fold(LaurentMatrix::identity(n - 1), |acc, &l| {
            acc.mul(&reduced_burau_generator(n, l))
        })
}

/// `det(ρ̄(w) - I) / (1 + t + ⋯ + t^{n-1})`, recentred and signed so that it
/// is Conway-symmetric with positive leading coefficient.
pub fn burau_poly(word: &PositiveBraidWord) -> Result<HalfLaurent> {
    let n = word.strands();
    if n < 2 || !word.has_full_support() {
        return Err(Error::MissingSupport(word.to_string()));
    }
    let m = reduced_burau(word).sub(&LaurentMatrix::identity(n - 1));
    let det = m.det();
    let strand_factor = HalfLaurent::from_integral_coeffs(0, &vec![1; n]);
    let quotient = det
        .exact_div(&strand_factor)
        .ok_or_else(|| Error::NonExactDivision(word.to_string()))?;
    let (Some(hi), Some(lo)) = (quotient.max_exp(), quotient.min_exp()) else {
        return Ok(quotient);
    };
    let centred = quotient.shift(-(hi + lo) / 2);
    let normalized = if centred.leading_coeff() < 0 {
        -centred
    } else {
        centred
    };
    match normalized.conway_parity() {
        ConwayParity::SymmetricIntegral | ConwayParity::AntisymmetricHalf => Ok(normalized),
        _ => Err(Error::NoUnitNormalization(word.to_string())),
    }
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
    fn two_strand_generator() {
        let g = reduced_burau_generator(2, 1);
        assert_eq!(g.dim(), 1);
        assert_eq!(g.get(0, 0), &p("-t"));
    }

    #[test]
    fn burau_examples() {
        // det(t^2 - 1)/(1 + t) = t - 1
        assert_eq!(burau_poly(&w(2, &[1, 1])).unwrap(), p("t^(1/2) - t^(-1/2)"));
        // det(-t^3 - 1)/(1 + t) = -(t^2 - t + 1)
        assert_eq!(burau_poly(&w(2, &[1, 1, 1])).unwrap(), p("t - 1 + t^-1"));
        assert_eq!(burau_poly(&w(3, &[1, 2, 1, 2])).unwrap(), p("t - 1 + t^-1"));
    }

    #[test]
    fn burau_satisfies_braid_relation() {
        let n = 4;
        let lhs = reduced_burau(&w(n, &[2, 3, 2]));
        let rhs = reduced_burau(&w(n, &[3, 2, 3]));
        assert_eq!(lhs, rhs);
        assert_eq!(reduced_burau(&w(n, &[1, 3])), reduced_burau(&w(n, &[3, 1])));
    }

    #[test]
    fn rejects_split_words() {
        assert!(burau_poly(&w(3, &[1, 1])).is_err());
        assert!(burau_poly(&w(1, &[])).is_err());
    }
}
