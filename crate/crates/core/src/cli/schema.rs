//! JSON input formats.

use serde::{Deserialize, Serialize};

use crate::covers::{CoverDatum, LinearizedModule};
use crate::error::{Error, Result};
use crate::glue::{GluingDatum, PushoutOptions};
use crate::poly::Polynomial;
use crate::presentation::RingPresentation;
use crate::ring::MonomialOrder;

fn default_order() -> String {
    "grevlex".into()
}

/// `{"vars": [...], "order": "grevlex", "relations": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub vars: Vec<String>,
    #[serde(default = "default_order")]
    pub order: String,
    #[serde(default)]
    pub relations: Vec<String>,
}

impl RingSpec {
    pub fn build(&self, order_override: Option<MonomialOrder>) -> Result<RingPresentation> {
        let order = match order_override {
            Some(o) => o,
            None => MonomialOrder::parse(&self.order)?,
        };
        RingPresentation::parse(&self.vars, order, &self.relations)
    }
}

fn parse_all(r: &RingPresentation, ps: &[String]) -> Result<Vec<Polynomial>> {
    ps.iter().map(|p| r.parse_poly(p)).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GluingSpec {
    #[serde(rename = "Abar")]
    pub abar: RingSpec,
    pub y: String,
    #[serde(rename = "B")]
    pub b: RingSpec,
    pub phi_images: Vec<String>,
    pub module_gens: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u32>,
    /// Names for the generators of `A`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_vars: Option<Vec<String>>,
    /// A ring the pushout should be isomorphic to, with the images of its variables in `Ā`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_ring: Option<RingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_images: Option<Vec<String>>,
    /// Vector fields on `X̄` (coefficients of `∂/∂x_i`) spanning the kernel of `g_*T_X̄|_Ȳ → G`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_kernel: Option<Vec<Vec<String>>>,
    /// Drop the relations of `A` (negative control).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub corrupt: bool,
}

impl GluingSpec {
    pub fn datum(&self, order: Option<MonomialOrder>) -> Result<GluingDatum> {
        let abar = self.abar.build(order)?;
        let b = self.b.build(order)?;
        let y = abar.parse_poly(&self.y)?;
        let phi = parse_all(&abar, &self.phi_images)?;
        let gens = parse_all(&abar, &self.module_gens)?;
        let d = GluingDatum::new(abar, y, b, phi, gens)?;
        Ok(match &self.a_vars {
            Some(n) => d.with_a_vars(n),
            None => d,
        })
    }

    pub fn options(&self, degree_bound: Option<u32>) -> PushoutOptions {
        PushoutOptions { degree_bound: degree_bound.or(self.degree_bound), drop_relations: self.corrupt }
    }

    pub fn expected(&self, abar: &RingPresentation) -> Result<Option<(RingPresentation, Vec<Polynomial>)>> {
        match (&self.expected_ring, &self.expected_images) {
            (Some(r), Some(imgs)) => Ok(Some((r.build(None)?, parse_all(abar, imgs)?))),
            (None, None) => Ok(None),
            _ => Err(Error::Input("expected_ring and expected_images must be given together".into())),
        }
    }

    pub fn kernel(&self, abar: &RingPresentation) -> Result<Option<Vec<Vec<Polynomial>>>> {
        self.expected_kernel.as_ref().map(|vs| vs.iter().map(|v| parse_all(abar, v)).collect()).transpose()
    }
}

fn default_generator() -> String {
    "m".into()
}

fn default_sign() -> i8 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CoverSpec {
    #[serde(rename = "B")]
    pub b_ring: RingSpec,
    pub b: String,
    #[serde(rename = "M_generator", default = "default_generator")]
    pub m_generator: String,
    #[serde(default = "default_sign")]
    pub sign: i8,
}

impl CoverSpec {
    pub fn build(&self, order: Option<MonomialOrder>) -> Result<(CoverDatum, LinearizedModule)> {
        let base = self.b_ring.build(order)?;
        let b = base.parse_poly(&self.b)?;
        Ok((CoverDatum::new(&base, b, "z")?, LinearizedModule::new(&self.m_generator, self.sign)?))
    }
}

fn default_parameter() -> String {
    "t".into()
}

fn default_fibers() -> Vec<i64> {
    vec![0, 1]
}

/// A family over the `t`-line: a ring, or the constant / normal-cone family of a gluing.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSpec>,
    #[serde(default = "default_parameter")]
    pub parameter: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<GluingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_cone: Option<GluingSpec>,
    #[serde(default = "default_fibers")]
    pub fibers: Vec<i64>,
    /// Subset of `thm2.11`, `cor2.13`, `prop3.12`, `cor5.5`, `prop5.4`; empty means all.
    #[serde(default)]
    pub checks: Vec<String>,
}

impl FamilySpec {
    pub fn wants(&self, name: &str) -> bool {
        self.checks.is_empty() || self.checks.iter().any(|c| c == name)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct P1Spec {
    /// Degree of `N` for the `T¹|_Y` identities and of `M` for the embedding identities.
    pub m: i64,
}

/// A bundled or user-supplied corpus entry.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CorpusItem {
    pub name: String,
    pub kind: String,
    pub payload: serde_json::Value,
    /// Check-name prefixes that must pass.
    #[serde(default)]
    pub expected: Vec<String>,
    /// Check-name prefixes that must fail (negative controls).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected_failures: Vec<String>,
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("line {}, column {}: {e}", e.line(), e.column())))
}

pub fn from_value<T: for<'de> Deserialize<'de>>(v: &serde_json::Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Input(e.to_string()))
}
