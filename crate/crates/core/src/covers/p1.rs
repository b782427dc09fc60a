//! Degree bookkeeping for the double cover `P¹ → P¹, x ↦ x²` on two affine charts.
//!
//! Chart 0 has coordinate `x` downstairs `X = x²`; chart 1 has `x' = 1/x`, `X' = 1/X`.
//! A line bundle of degree `d` on either line has local generators `s₀, s₁` with
//! `s₀ = x'^d·s₁`.

use crate::error::Result;
use crate::glue::Check;
use crate::poly::Polynomial;

use super::{embed_in_ve, CoverDatum, LinearizedModule};

/// A line bundle on the two-chart `P¹`, recorded by its degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct P1Bundle {
    pub degree: i64,
}

impl P1Bundle {
    pub fn new(degree: i64) -> Self {
        P1Bundle { degree }
    }

    pub fn tensor(self, other: P1Bundle) -> P1Bundle {
        P1Bundle::new(self.degree + other.degree)
    }

    pub fn dual(self) -> P1Bundle {
        P1Bundle::new(-self.degree)
    }

    /// Pullback along the degree-two cover.
    pub fn pullback(self) -> P1Bundle {
        P1Bundle::new(2 * self.degree)
    }

    pub fn h0(self) -> i64 {
        (self.degree + 1).max(0)
    }
}

/// For the chart-0 basis element `x^i·s₀` (`i ∈ {0, 1}`) of `g_*O(d)`, the pair
/// `(k, r)` with `x^i·s₀ = X'^k · (x'^r·s₁)`.
fn transition(d: i64, i: i64) -> (i64, i64) {
    let e = d - i;
    (e.div_euclid(2), e.rem_euclid(2))
}

/// Splitting degrees of `g_*O(d)`, largest first.
pub fn p1_pushforward_degrees(d: i64) -> (i64, i64) {
    let (k0, _) = transition(d, 0);
    let (k1, _) = transition(d, 1);
    (k0.max(k1), k0.min(k1))
}

/// Integer identities of the cover `P¹ → P¹` for `M` of degree `deg_m`.
#[derive(Clone, Debug)]
pub struct P1DegreeReport {
    pub deg_m: i64,
    pub splitting: (i64, i64),
    pub deg_l: i64,
    pub deg_d: i64,
    pub deg_det_e: i64,
    /// Degree of `O(X)|_Y`, read off from the transition of the embedding equation.
    pub deg_t1: i64,
    pub checks: Vec<Check>,
}

impl P1DegreeReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.starts_with(prefix))
    }
}

/// Laurent terms `(X-exponent, v-exponent, u-exponent, coefficient)` of an equation.
type Laurent = Vec<(i64, i64, i64, Polynomial)>;

fn chart_equation() -> Result<(Polynomial, Laurent)> {
    let c = CoverDatum::parse(&["X"], &[] as &[&str], "X")?;
    let emb = embed_in_ve(&c, &LinearizedModule::trivial())?;
    let h = emb.equation().ok_or_else(|| crate::error::Error::Certification("no chart equation".into()))?;
    let terms = h
        .terms()
        .iter()
        .map(|(m, q)| (m.0[0] as i64, m.0[1] as i64, m.0[2] as i64, Polynomial::constant(h.ring(), q.clone())))
        .collect();
    Ok((h, terms))
}

/// Rewrites the chart-0 equation in chart-1 coordinates. Coordinates `v, u` are the
/// basis `m, z·m` of `E`; returns `(e, sign)` with `h₀ = sign·X'^e·h₁` if such a
/// factorization exists.
fn chart_twist(deg_m: i64, h0: &Laurent) -> Option<(i64, i64)> {
    let (kv, rv) = transition(deg_m, 0);
    let (ku, ru) = transition(deg_m, 1);
    // chart-0 v = X'^kv · (basis rv), u = X'^ku · (basis ru); basis 0 is v₁, basis 1 is u₁
    let mut out: Vec<(i64, i64, i64, Polynomial)> = Vec::new();
    for (xe, ve, ue, c) in h0 {
        let mut e1 = [0i64; 2];
        e1[rv as usize] += ve;
        e1[ru as usize] += ue;
        let xprime = -xe + kv * ve + ku * ue;
        out.push((xprime, e1[0], e1[1], c.clone()));
    }
    // h₁ = u₁² − X'·v₁², the chart-1 equation with b = X'
    let lead = out.iter().find(|t| t.1 == 0 && t.2 == 2)?;
    let other = out.iter().find(|t| t.1 == 2 && t.2 == 0)?;
    if out.len() != 2 {
        return None;
    }
    let e = lead.0;
    if other.0 != e + 1 {
        return None;
    }
    let one = Polynomial::one(lead.3.ring());
    let sign = if lead.3 == one { 1 } else if lead.3 == -&one { -1 } else { return None };
    if other.3 != lead.3.scale(&crate::poly::q(-1)) {
        return None;
    }
    Some((e, sign))
}

/// Determinant, embedding and discriminant degree identities for `M` of degree `deg_m`.
pub fn cor46_degree_check(deg_m: i64) -> Result<P1DegreeReport> {
    let (h0, lau) = chart_equation()?;
    let splitting = p1_pushforward_degrees(deg_m);
    let deg_d = 2;
    let deg_l = 1;
    let deg_det_e = splitting.0 + splitting.1;
    let m = P1Bundle::new(deg_m);
    let mut checks = Vec::new();

    let (twist, deg_t1) = match chart_twist(deg_m, &lau) {
        Some((e, _)) => (true, -e),
        None => (false, 0),
    };
    checks.push(Check::new("chart equations agree on the overlap", twist, format!("h0 = {h0}")));
    let lem47 = P1Bundle::new(deg_det_e).pullback() == m.tensor(m).tensor(P1Bundle::new(deg_l).pullback().dual());
    checks.push(Check::new(
        "lem4.7: deg g^*det E = 2 deg M - 2 deg L",
        lem47,
        format!("{} vs {}", 2 * deg_det_e, 2 * deg_m - 2 * deg_l),
    ));
    checks.push(Check::new(
        "thm4.5: deg O(X)|_Y = deg L - deg det E",
        deg_t1 == deg_l - deg_det_e,
        format!("chart {deg_t1}, formula {}", deg_l - deg_det_e),
    ));
    let lhs = P1Bundle::new(deg_l - deg_det_e).pullback().degree;
    let rhs = P1Bundle::new(deg_d).pullback().degree - 2 * deg_m;
    let chart_lhs = P1Bundle::new(deg_t1).pullback().degree;
    checks.push(Check::new(
        "cor4.6: deg g^*(L - det E) = deg g^*D - 2 deg M",
        lhs == rhs && chart_lhs == rhs && rhs == 4 - 2 * deg_m,
        format!("{lhs} = {rhs}"),
    ));
    Ok(P1DegreeReport { deg_m, splitting, deg_l, deg_d, deg_det_e, deg_t1, checks })
}

/// Degree of `T¹|_Y` for `N = N_{Ȳ|X̄}` of degree `m`, with `M = N⁻¹`.
pub fn thm53_degree_check(m: i64) -> Result<P1DegreeReport> {
    let mut r = cor46_degree_check(-m)?;
    let n = P1Bundle::new(m);
    let l = P1Bundle::new(r.deg_l);
    let t1 = P1Bundle::new(r.deg_t1);
    r.checks.push(Check::new(
        "thm5.3(i): deg T1|_Y = deg L - deg det g_*(N^-1)",
        t1.degree == l.degree - r.deg_det_e,
        format!("{} = {} - ({})", t1.degree, l.degree, r.deg_det_e),
    ));
    let lhs = t1.pullback();
    let rhs = l.tensor(l).pullback().tensor(n).tensor(n);
    r.checks.push(Check::new(
        "thm5.3(ii): deg g^*T1|_Y = deg g^*L^2 + 2 deg N",
        lhs == rhs && lhs.degree == 2 * (m + 2),
        format!("{} = {}", lhs.degree, rhs.degree),
    ));
    Ok(r)
}
