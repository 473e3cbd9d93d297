//! Satellite Alexander polynomials `Δ_{P(K)}(t) = Δ_K(t^w) · Δ_{P(U)}(t)` and
//! the sign obstruction they give against membership in the plumbing class.

use serde::Serialize;

use crate::alexander::braid_poly;
use crate::braid::PositiveBraidWord;
use crate::error::{Error, Result};
use crate::laurent::{AlexSummary, ConwayParity, HalfLaurent};

/// A pattern given numerically by its winding number and the Alexander
/// polynomial of `P(U)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatellitePattern {
    winding: i64,
    pattern_poly: HalfLaurent,
}

impl SatellitePattern {
    pub fn new(winding: i64, pattern_poly: HalfLaurent) -> Result<Self> {
        if pattern_poly.conway_parity() == ConwayParity::Violation {
            return Err(Error::InvalidArgument(format!(
                "pattern polynomial {pattern_poly} is not Conway-symmetric"
            )));
        }
        Ok(Self {
            winding,
            pattern_poly,
        })
    }

    /// The `(n, 1)`-cable: winding `n`, `P(U)` the unknot.
    pub fn cable(n: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "cable patterns need n >= 2, got {n}"
            )));
        }
        Self::new(n, HalfLaurent::one())
    }

    pub fn winding(&self) -> i64 {
        self.winding
    }

    pub fn pattern_poly(&self) -> &HalfLaurent {
        &self.pattern_poly
    }
}

pub fn cable_pattern(n: i64) -> Result<SatellitePattern> {
    SatellitePattern::cable(n)
}

pub fn satellite_poly(pattern: &SatellitePattern, companion: &HalfLaurent) -> HalfLaurent {
    &companion.substitute_power(pattern.winding) * &pattern.pattern_poly
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionVerdict {
    /// `|w| ≠ 1`.
    pub winding_ok: bool,
    /// `α(P(U)) · β(P(U)) ≥ 0`.
    pub sign_ok: bool,
    /// Both hypotheses hold, so `P(K)` lies outside the class for every knot `K`.
    pub fires: bool,
    /// `Δ_{P(U)} = 0`: `α` is undefined and `sign_ok` holds only vacuously.
    pub zero_pattern: bool,
}

pub fn obstruction(pattern: &SatellitePattern) -> ObstructionVerdict {
    let s = pattern.pattern_poly.summarize();
    let winding_ok = pattern.winding.abs() != 1;
    let sign_ok = s.is_zero || s.alpha * s.beta >= 0;
    ObstructionVerdict {
        winding_ok,
        sign_ok,
        fires: winding_ok && sign_ok,
        zero_pattern: s.is_zero,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KrishnaReport {
    pub n: i64,
    pub companion: PositiveBraidWord,
    pub companion_poly: HalfLaurent,
    pub cable_poly: HalfLaurent,
    pub summary: AlexSummary,
    pub verdict: ObstructionVerdict,
    /// `β = 0` and the obstruction fires.
    pub not_in_p: bool,
}

/// The `(n, 1)`-cable of the closure of `companion_word`.
pub fn krishna_check(n: i64, companion_word: &PositiveBraidWord) -> Result<KrishnaReport> {
    if companion_word.closure_components() != 1 {
        return Err(Error::InvalidArgument(format!(
            "companion {companion_word} does not close to a knot"
        )));
    }
    let pattern = cable_pattern(n)?;
    let companion_poly = braid_poly(companion_word);
    let cable_poly = satellite_poly(&pattern, &companion_poly);
    let summary = cable_poly.summarize();
    let verdict = obstruction(&pattern);
    Ok(KrishnaReport {
        n,
        companion: companion_word.clone(),
        companion_poly,
        cable_poly,
        summary,
        not_in_p: summary.beta == 0 && verdict.fires,
        verdict,
    })
}
