//! The map `α: T_X → f_*T_X̄` of a pushout and the tangent sequence along `Y`.

use super::tangent_subquotient;
use crate::error::{Error, Result};
use crate::finite::Pushforward;
use crate::fpmod::{prune, restrict_scalars, Element, FPModule, ModuleMap, Subquotient};
use crate::glue::{Check, PushoutPresentation};
use crate::groebner::module::SubmoduleBasis;
use crate::poly::{q_frac, Polynomial};
use crate::presentation::RingMap;

/// `α` together with the modules it connects.
pub struct Alpha {
    pub pushout: PushoutPresentation,
    /// Derivations of `A`, as vectors of values on the variables of `A`.
    pub t_x: Subquotient,
    pub t_x_module: FPModule,
    /// Derivations of `Ā`.
    pub t_xbar: Subquotient,
    pub t_xbar_module: FPModule,
    /// `f_*T_X̄` over `A`, on generators `m_l·D_k` (derivation `D_k` major).
    pub push: FPModule,
    pf: Pushforward,
    chain: SubmoduleBasis,
    /// `α` of each generator of `T_X`, as a derivation of `Ā`.
    pub images: Vec<Element>,
    pub map: ModuleMap,
}

impl Alpha {
    /// The derivation `δ` of `Ā` with `δ ∘ f# = f# ∘ e`, if it exists.
    pub fn lift_derivation(&self, e: &[Polynomial]) -> Result<Option<Element>> {
        let p = &self.pushout;
        let abar = &p.datum.abar;
        let mut target = p.fsharp.apply_all(e)?;
        target.extend(abar.relations().iter().map(|_| abar.zero()));
        self.chain.lift(&target)
    }

    /// Coordinates of a derivation of `Ā` on the generators of `f_*T_X̄`.
    pub fn push_coords(&self, delta: &[Polynomial]) -> Result<Option<Element>> {
        match self.t_xbar.coords(delta)? {
            Some(c) => self.pf.express(&c),
            None => Ok(None),
        }
    }

    pub fn is_injective(&self) -> Result<bool> {
        self.map.is_injective()
    }
}

pub fn build_alpha(p: &PushoutPresentation) -> Result<Alpha> {
    let a = &p.a;
    let abar = &p.datum.abar;
    let t_x = tangent_subquotient(a)?;
    let t_x_module = t_x.presentation()?.clone();
    let t_xbar = tangent_subquotient(abar)?;
    let t_xbar_module = t_xbar.presentation()?.clone();
    let (push, pf) = restrict_scalars(&p.fsharp, &t_xbar_module, &p.datum.module_gens)?;

    // rows: x_j ↦ (∂f#(a_i)/∂x_j)_i followed by (∂r/∂x_j)_r for the relations r of Ā
    let rows: Vec<Element> = (0..abar.nvars())
        .map(|j| {
            p.fsharp
                .images()
                .iter()
                .chain(abar.relations())
                .map(|g| g.diff(j))
                .collect()
        })
        .collect();
    let chain = SubmoduleBasis::new(abar, p.a.nvars() + abar.relations().len(), rows)?;

    let mut alpha = Alpha { pushout: p.clone(), t_x, t_x_module, t_xbar, t_xbar_module, push, pf, chain, images: vec![], map: ModuleMap::identity(&FPModule::free(a, 0)) };
    let mut rows = Vec::new();
    for e in alpha.t_x.gens().to_vec() {
        let delta = alpha
            .lift_derivation(&e)?
            .ok_or_else(|| Error::Certification(format!("no derivation of Ā lifts {:?}", e)))?;
        let coords = alpha
            .push_coords(&delta)?
            .ok_or_else(|| Error::Certification("lifted derivation is not in f_*T_X̄".into()))?;
        alpha.images.push(delta);
        rows.push(coords);
    }
    alpha.map = ModuleMap::new(&alpha.t_x_module, &alpha.push, rows)?;
    Ok(alpha)
}

/// The involution of `B̄ = Ā/(y)` over `B`, as images of the variables of `Ā`.
pub fn involution(p: &PushoutPresentation) -> Result<RingMap> {
    let d = &p.datum;
    let bbar = d.abar_mod_y();
    let gens = &d.module_gens;
    if gens.len() != 2 || !bbar.equal(&gens[0], &bbar.one())? {
        return Err(Error::Input("the involution needs module generators [1, m]".into()));
    }
    let phi = d.phi_map()?;
    let pf = Pushforward::algebra(&phi, gens.clone())?;
    let m = &gens[1];
    let sq = pf
        .express_scalar(&bbar.reduce(&(m * m))?)?
        .ok_or_else(|| Error::Certification("m^2 is not in the span of 1, m".into()))?;
    let iota_m = &phi.apply(&sq[1])? - m;
    let mut imgs = Vec::new();
    for x in bbar.gens() {
        let c = pf
            .express_scalar(&x)?
            .ok_or_else(|| Error::Certification(format!("{x} is not in the span of 1, m")))?;
        imgs.push(bbar.reduce(&(&phi.apply(&c[0])? + &(&phi.apply(&c[1])? * &iota_m)))?);
    }
    let iota = RingMap::new(&bbar, &bbar, imgs)?;
    for (i, img) in iota.then(&iota)?.images().iter().enumerate() {
        if !bbar.equal(img, &bbar.gen(i))? {
            return Err(Error::NotInvolution(format!("ι∘ι moves {}", bbar.vars()[i])));
        }
    }
    Ok(iota)
}

/// `ι·δ = ι ∘ δ ∘ ι` for a derivation `δ` of `B̄`.
fn conjugate(iota: &RingMap, delta: &[Polynomial]) -> Result<Element> {
    let r = iota.target();
    let mut out = Vec::with_capacity(delta.len());
    for img in iota.images() {
        let d = (0..r.nvars()).fold(r.zero(), |acc, k| &acc + &(&img.diff(k) * &delta[k]));
        out.push(iota.apply(&d)?);
    }
    Ok(out)
}

/// Results of the tangent sequence checks.
pub struct TangentSequenceReport {
    pub checks: Vec<Check>,
    /// `G = coker α`, pruned.
    pub g: FPModule,
    /// `α(T_X) / f_*T_X̄(−Ȳ)` inside `f_*T_X̄ / f_*T_X̄(−Ȳ)`.
    pub kernel: Subquotient,
    /// `(g_*T_Ȳ)^inv` inside the same module.
    pub invariants: Subquotient,
}

impl TangentSequenceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.starts_with(prefix))
    }
}

/// Coordinates on `f_*T_X̄` of a vector `v ∈ Ā^n` that is a derivation modulo `y`.
fn push_coords_mod_y(alpha: &Alpha, v: &[Polynomial]) -> Result<Option<Element>> {
    let abar = &alpha.pushout.datum.abar;
    let y = &alpha.pushout.datum.y;
    let n = abar.nvars();
    let rels: Vec<Element> = (0..n)
        .map(|j| (0..n).map(|k| if j == k { y.clone() } else { abar.zero() }).collect())
        .collect();
    let sq = Subquotient::new(abar, n, alpha.t_xbar.gens().to_vec(), rels);
    match sq.coords(v)? {
        Some(c) => alpha.pf.express(&c),
        None => Ok(None),
    }
}

impl Alpha {
    /// Coordinates of `v` in `f_*T_X̄ / f_*T_X̄(−Ȳ)`.
    pub fn restricted_coords(&self, v: &[Polynomial]) -> Result<Option<Element>> {
        push_coords_mod_y(self, v)
    }

    /// `f_*T_X̄(−Ȳ)` as elements of `f_*T_X̄`.
    pub fn twisted_gens(&self) -> Result<Vec<Element>> {
        let d = &self.pushout.datum;
        let mut out = Vec::new();
        for g in self.pf.gens() {
            let v: Element = g.iter().map(|p| d.abar.reduce(&(&d.y * p))).collect::<Result<_>>()?;
            let c = self
                .pf
                .express(&v)?
                .ok_or_else(|| Error::Certification("y·f_*T_X̄ is not in f_*T_X̄".into()))?;
            out.push(c);
        }
        Ok(out)
    }
}

pub fn tangent_sequence_check(alpha: &Alpha) -> Result<TangentSequenceReport> {
    let p = &alpha.pushout;
    let a = &p.a;
    let push = &alpha.push;
    let n_push = push.ngens();
    let mut checks = Vec::new();

    let inj = alpha.is_injective()?;
    checks.push(Check::new("alpha injective", inj, if inj { "ker α = 0" } else { "α has a kernel" }));

    let g_full = alpha.map.cokernel();
    let g = prune(&g_full)?.module;

    let twisted = alpha.twisted_gens()?;
    let mut composite_zero = true;
    for t in &twisted {
        if !g_full.is_zero_element(t)? {
            composite_zero = false;
            break;
        }
    }
    checks.push(Check::new(
        "composite f_*T(-Ybar) -> G is zero",
        composite_zero,
        format!("{} generators of f_*T_X̄(−Ȳ) checked", twisted.len()),
    ));

    let mut base_rels: Vec<Element> = push.relations().rows().to_vec();
    base_rels.extend(twisted);
    let kernel = Subquotient::new(a, n_push, alpha.map.matrix().rows().to_vec(), base_rels.clone());

    let bbar = p.datum.abar_mod_y();
    let mut inv_gens = Vec::new();
    if !bbar.is_trivial()? {
        let iota = involution(p)?;
        let t_ybar = tangent_subquotient(&bbar)?;
        let half = Polynomial::constant(bbar.ambient(), q_frac(1, 2));
        for dk in t_ybar.gens() {
            for m in &p.datum.module_gens {
                let v: Element = dk.iter().map(|c| bbar.reduce(&(m * c))).collect::<Result<_>>()?;
                let w = conjugate(&iota, &v)?;
                let s: Element = v.iter().zip(&w).map(|(a, b)| bbar.reduce(&(&half * &(a + b)))).collect::<Result<_>>()?;
                let c = push_coords_mod_y(alpha, &s)?
                    .ok_or_else(|| Error::Certification("invariant vector field not in g_*T_X̄|_Ȳ".into()))?;
                inv_gens.push(c);
            }
        }
    }
    let invariants = Subquotient::new(a, n_push, inv_gens, base_rels);
    let k_in_inv = kernel.is_submodule_of(&invariants)?;
    let inv_in_k = invariants.is_submodule_of(&kernel)?;
    checks.push(Check::new(
        "kernel of g_*T|_Ybar -> G equals invariants",
        k_in_inv && inv_in_k,
        format!("kernel ⊆ invariants: {k_in_inv}; invariants ⊆ kernel: {inv_in_k}"),
    ));
    Ok(TangentSequenceReport { checks, g, kernel, invariants })
}
