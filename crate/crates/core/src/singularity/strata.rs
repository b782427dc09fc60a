//! `I_{Y|X_sing}`, `T¹|_Y` and the pinch / double-crossing strata of a pushout.

use super::radical::{count_points, radical_zero_dim};
use super::{jacobian_ideal, t1};
use crate::error::Result;
use crate::fpmod::{annihilator, base_change, fitting_ideal, prune, FPModule, Subquotient};
use crate::glue::PushoutPresentation;
use crate::poly::Polynomial;
use crate::presentation::{RingMap, RingPresentation};

/// Fitting-ideal certificate that a module is locally free of rank one on its ring:
/// `Fitt₀ = 0` and `Fitt₁ = (1)`.
#[derive(Clone, Debug)]
pub struct LineBundleCheck {
    pub module: FPModule,
    pub fitt0: Vec<Polynomial>,
    pub fitt1: Vec<Polynomial>,
    pub fitt0_zero: bool,
    pub fitt1_unit: bool,
    /// True when the base ring is the zero ring, where the check is vacuous.
    pub empty_support: bool,
}

impl LineBundleCheck {
    pub fn new(m: &FPModule) -> Result<Self> {
        let ring = m.ring();
        let module = prune(m)?.module;
        if ring.is_trivial()? {
            return Ok(LineBundleCheck { module, fitt0: vec![], fitt1: vec![], fitt0_zero: true, fitt1_unit: true, empty_support: true });
        }
        let fitt0 = fitting_ideal(m, 0)?;
        let fitt1 = fitting_ideal(m, 1)?;
        let fitt0_zero = fitt0.is_empty();
        let fitt1_unit = ring.ideal_equal(&fitt1, &[ring.one()])?;
        Ok(LineBundleCheck { module, fitt0, fitt1, fitt0_zero, fitt1_unit, empty_support: false })
    }

    pub fn is_invertible(&self) -> bool {
        self.fitt0_zero && self.fitt1_unit
    }
}

fn restrict_to(ring: &RingPresentation, ideal: &[Polynomial]) -> Result<(RingPresentation, RingMap)> {
    let sub = ring.quotient(ideal);
    let map = RingMap::new_unchecked(ring, &sub, ring.gens())?;
    Ok((sub, map))
}

/// `I_Y / I_{X_sing}` presented over its support ring `O_D`.
#[derive(Clone, Debug)]
pub struct IdealYReport {
    pub xsing_ideal: Vec<Polynomial>,
    pub xsing_in_y: bool,
    pub o_d: RingPresentation,
    pub check: LineBundleCheck,
    /// A generator of the module, as an element of `I_Y`, when it is cyclic.
    pub generator: Option<Polynomial>,
}

pub fn ideal_y_in_xsing(p: &PushoutPresentation) -> Result<IdealYReport> {
    let a = &p.a;
    let iy = &p.conductor_a;
    let xs = jacobian_ideal(a)?;
    let xsing_in_y = a.ideal_subset(&xs, iy)?;
    let col = |v: &[Polynomial]| v.iter().map(|g| vec![g.clone()]).collect::<Vec<_>>();
    let sub = Subquotient::new(a, 1, col(iy), col(&xs));
    let m = sub.presentation()?.clone();
    let ann = annihilator(&m)?;
    let (o_d, to_d) = restrict_to(a, &ann)?;
    let md = base_change(&to_d, &m)?;
    let check = LineBundleCheck::new(&md)?;
    let pruned = prune(&md)?;
    let generator = if pruned.module.ngens() == 1 {
        let coeffs = pruned.from_pruned.apply(&pruned.module.unit(0))?;
        let g = coeffs.iter().zip(iy).fold(a.zero(), |acc, (c, y)| &acc + &(c * y));
        Some(a.reduce(&g)?)
    } else {
        None
    };
    Ok(IdealYReport { xsing_ideal: xs, xsing_in_y, o_d, check, generator })
}

/// `T¹_X ⊗ O_Y` with its rank-one certificate.
pub fn t1_restricted_to_y(p: &PushoutPresentation) -> Result<LineBundleCheck> {
    let (_, to_y) = restrict_to(&p.a, &p.conductor_a)?;
    LineBundleCheck::new(&base_change(&to_y, &t1(&p.a)?)?)
}

/// Strata of the singular locus of a semi-smooth pushout.
#[derive(Clone, Debug)]
pub struct StrataReport {
    pub y_ideal: Vec<Polynomial>,
    pub xsing_ideal: Vec<Polynomial>,
    /// Ideal of the pinch locus `D`; radical when `d_reduced`.
    pub d_ideal: Vec<Polynomial>,
    pub d_reduced: bool,
    pub d_points: Option<usize>,
    pub d_empty: bool,
    /// `X_sing ⊆ Y` and `I_Y^k ⊆ I_{X_sing}` for some `k ≤ 4`.
    pub supports_agree: bool,
    pub dc_locus: String,
}

fn ideal_power(ring: &RingPresentation, ideal: &[Polynomial], k: u32) -> Result<Vec<Polynomial>> {
    let mut acc = vec![ring.one()];
    for _ in 0..k {
        let mut next = Vec::new();
        for a in &acc {
            for b in ideal {
                next.push(ring.reduce(&(a * b))?);
            }
        }
        acc = ring.normalize_ideal(&next)?;
    }
    Ok(acc)
}

pub fn classify_points(p: &PushoutPresentation) -> Result<StrataReport> {
    let a = &p.a;
    let iy = p.conductor_a.clone();
    let xs = jacobian_ideal(a)?;
    let mut supports_agree = false;
    if a.ideal_subset(&xs, &iy)? {
        for k in 1..=4 {
            if a.ideal_subset(&ideal_power(a, &iy, k)?, &xs)? {
                supports_agree = true;
                break;
            }
        }
    }
    let col = |v: &[Polynomial]| v.iter().map(|g| vec![g.clone()]).collect::<Vec<_>>();
    let m = Subquotient::new(a, 1, col(&iy), col(&xs)).presentation()?.clone();
    let fitt0 = fitting_ideal(&m, 0)?;
    let d_empty = a.ideal_equal(&fitt0, &[a.one()])?;
    let (d_ideal, d_reduced) = match radical_zero_dim(a, &fitt0)? {
        Some(r) => (r, true),
        None => (fitt0.clone(), false),
    };
    let d_points = if d_empty { Some(0) } else { count_points(a, &fitt0)? };
    let dc_locus = if d_empty {
        "all of Y".to_string()
    } else {
        "Y minus D".to_string()
    };
    Ok(StrataReport { y_ideal: iy, xsing_ideal: xs, d_ideal, d_reduced, d_points, d_empty, supports_agree, dc_locus })
}
