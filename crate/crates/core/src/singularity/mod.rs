//! Differentials, tangent modules, T¹ and singular loci; the tangent sequence of a
//! pushout and the strata of its singular locus.

mod alpha;
pub mod radical;
mod strata;

use crate::error::{Error, Result};
use crate::fpmod::{ext1, ext1_subquotient, hom_subquotient, minors, FPModule, ModuleMap, Subquotient};
use crate::poly::Polynomial;
use crate::presentation::RingPresentation;

pub use alpha::{build_alpha, involution, tangent_sequence_check, Alpha, TangentSequenceReport};
pub use radical::{count_points, radical_zero_dim};
pub use strata::{classify_points, ideal_y_in_xsing, t1_restricted_to_y, IdealYReport, LineBundleCheck, StrataReport};

/// Rows `(∂r/∂x_1, ..., ∂r/∂x_n)` for each relation `r`.
pub fn jacobian_rows(x: &RingPresentation) -> Vec<Vec<Polynomial>> {
    x.relations().iter().map(|r| (0..x.nvars()).map(|i| r.diff(i)).collect()).collect()
}

/// `Ω_X` with generators `dx_i` and one relation per ring relation.
pub fn kahler(x: &RingPresentation) -> Result<FPModule> {
    FPModule::from_rows(x, x.nvars(), jacobian_rows(x))
}

/// Derivations of `X` as a submodule of `O_X^n` (coefficients of `∂/∂x_i`).
pub fn tangent_subquotient(x: &RingPresentation) -> Result<Subquotient> {
    hom_subquotient(&kahler(x)?, &FPModule::free(x, 1))
}

/// `T_X = Hom(Ω_X, O_X)`, presented on its derivation generators.
pub fn tangent(x: &RingPresentation) -> Result<FPModule> {
    Ok(tangent_subquotient(x)?.presentation()?.clone())
}

pub fn t1(x: &RingPresentation) -> Result<FPModule> {
    ext1(&kahler(x)?, &FPModule::free(x, 1))
}

pub fn t1_subquotient(x: &RingPresentation) -> Result<Subquotient> {
    ext1_subquotient(&kahler(x)?, &FPModule::free(x, 1))
}

/// Ideal of the relations and the maximal minors of the Jacobian matrix, for a
/// complete intersection presentation.
pub fn jacobian_ideal(x: &RingPresentation) -> Result<Vec<Polynomial>> {
    let c = x.relations().len();
    if c == 0 {
        return Ok(vec![x.one()]);
    }
    let mins = minors(&jacobian_rows(x), x.nvars(), c);
    x.normalize_ideal(&mins)
}

/// The singular subscheme of a hypersurface.
#[derive(Clone, Debug)]
pub struct SingularLocus {
    pub x: RingPresentation,
    /// Generators modulo the relation; `[1]` for smooth `X`.
    pub ideal: Vec<Polynomial>,
}

impl SingularLocus {
    pub fn is_empty(&self) -> Result<bool> {
        self.x.ideal_equal(&self.ideal, &[self.x.one()])
    }
}

pub fn singular_subscheme(x: &RingPresentation) -> Result<SingularLocus> {
    if x.relations().len() != 1 {
        return Err(Error::NotHypersurface(format!("{} relations", x.relations().len())));
    }
    Ok(SingularLocus { x: x.clone(), ideal: jacobian_ideal(x)? })
}

/// Certifies `T¹_X ≅ O_X/(f, ∂f)` for a hypersurface by an explicit map with zero
/// kernel and cokernel.
pub fn t1_hypersurface_certificate(x: &RingPresentation) -> Result<bool> {
    let sing = singular_subscheme(x)?;
    let quotient = FPModule::cyclic(x, &sing.ideal)?;
    let sq = t1_subquotient(x)?;
    let pres = sq.presentation()?;
    let Some(img) = sq.coords(&[x.one()])? else { return Ok(false) };
    let map = match ModuleMap::new(&quotient, pres, vec![img]) {
        Ok(m) => m,
        Err(Error::NotWellDefined(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    map.is_isomorphism()
}

#[cfg(test)]
mod tests;
