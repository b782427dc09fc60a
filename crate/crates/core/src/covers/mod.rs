//! Flat double covers `B̄ = B[z]/(z² − b)`, pushforwards of rank-one modules and the
//! embedding of the pushout into `V_Y(E)`.

mod p1;

pub use p1::{cor46_degree_check, p1_pushforward_degrees, thm53_degree_check, P1Bundle, P1DegreeReport};

use crate::error::{Error, Result};
use crate::fpmod::{base_change, prune, restrict_scalars, Element, FPModule, InvolutionAction, ModuleMap, Subquotient};
use crate::glue::{pushout, verify_cartesian, CartesianReport, Check, GluingDatum, PushoutPresentation, DEFAULT_DEGREE_BOUND};
use crate::poly::{q, Polynomial};
use crate::presentation::{RingMap, RingPresentation};
use crate::ring::{fresh_name, MonomialOrder, PolyRing};
use crate::singularity::{ideal_y_in_xsing, jacobian_ideal, radical::squarefree_part, IdealYReport, LineBundleCheck};

/// A double cover given by its branch equation.
#[derive(Clone, Debug)]
pub struct CoverDatum {
    base: RingPresentation,
    branch: Polynomial,
    bbar: RingPresentation,
    z: String,
}

impl CoverDatum {
    /// `z` is renamed if it clashes with a variable of `B`.
    pub fn new(base: &RingPresentation, branch: Polynomial, z: &str) -> Result<Self> {
        let branch = base.reduce(&branch.rename_into(base.ambient())?)?;
        let z = fresh_name(base.vars(), z);
        let mut names = base.vars().to_vec();
        names.push(z.clone());
        let amb = PolyRing::new(&names, MonomialOrder::Grevlex)?;
        let mut rels: Vec<Polynomial> = base.relations().iter().map(|r| r.rename_into(&amb)).collect::<Result<_>>()?;
        let zv = Polynomial::var_named(&amb, &z)?;
        rels.push(&(&zv * &zv) - &branch.rename_into(&amb)?);
        let bbar = RingPresentation::new(&amb, rels);
        Ok(CoverDatum { base: base.clone(), branch, bbar, z })
    }

    pub fn parse<S: AsRef<str>, T: AsRef<str>>(vars: &[S], relations: &[T], branch: &str) -> Result<Self> {
        let base = RingPresentation::parse(vars, MonomialOrder::Grevlex, relations)?;
        let b = base.parse_poly(branch)?;
        CoverDatum::new(&base, b, "z")
    }

    pub fn base(&self) -> &RingPresentation {
        &self.base
    }

    pub fn branch(&self) -> &Polynomial {
        &self.branch
    }

    pub fn cover(&self) -> &RingPresentation {
        &self.bbar
    }

    pub fn z_name(&self) -> &str {
        &self.z
    }

    pub fn z(&self) -> Polynomial {
        self.bbar.gen(self.bbar.nvars() - 1)
    }

    /// `g#: B → B̄`.
    pub fn inclusion(&self) -> Result<RingMap> {
        let imgs = self.base.gens().iter().map(|g| g.rename_into(self.bbar.ambient())).collect::<Result<_>>()?;
        RingMap::new_unchecked(&self.base, &self.bbar, imgs)
    }

    /// `ι: z ↦ −z`.
    pub fn involution(&self) -> Result<RingMap> {
        let mut imgs = self.bbar.gens();
        let last = imgs.len() - 1;
        imgs[last] = -&imgs[last];
        RingMap::new(&self.bbar, &self.bbar, imgs)
    }

    /// `b` viewed in `B̄`.
    pub fn branch_in_cover(&self) -> Result<Polynomial> {
        self.branch.rename_into(self.bbar.ambient())
    }

    /// Whether `D = V(b)` is empty.
    pub fn is_etale(&self) -> Result<bool> {
        self.base.ideal_equal(std::slice::from_ref(&self.branch), &[self.base.one()])
    }

    /// Squarefreeness of `b`, decided for univariate polynomial bases only.
    pub fn branch_is_squarefree(&self) -> Option<bool> {
        if self.base.nvars() != 1 || !self.base.relations().is_empty() {
            return None;
        }
        let sf = squarefree_part(&self.branch, 0);
        Some(sf.total_degree() == self.branch.total_degree())
    }
}

/// A free rank-one `B̄`-module with linearization `ι^*m = sign·m`.
#[derive(Clone, Debug)]
pub struct LinearizedModule {
    pub generator: String,
    pub sign: i8,
}

impl LinearizedModule {
    pub fn trivial() -> Self {
        LinearizedModule { generator: "m".into(), sign: 1 }
    }

    pub fn new(generator: &str, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Input(format!("linearization sign must be 1 or -1, got {sign}")));
        }
        Ok(LinearizedModule { generator: generator.into(), sign })
    }

    pub fn module(&self, c: &CoverDatum) -> FPModule {
        FPModule::free(c.cover(), 1)
    }

    fn sign_poly(&self, c: &CoverDatum) -> Polynomial {
        Polynomial::constant(c.cover().ambient(), q(self.sign as i64))
    }
}

/// `E = g_*M` with basis `{m, z·m}` and the maps out of `g^*E`.
#[derive(Clone, Debug)]
pub struct CoverPushforward {
    pub e: FPModule,
    /// `g^*E` over `B̄`.
    pub pullback: FPModule,
    /// `g^*E → M`, with matrix `[1; z]`.
    pub surjection: ModuleMap,
    /// `α: g^*E → M ⊕ ι^*M`.
    pub alpha: ModuleMap,
    /// The involution induced on `E` by the linearization.
    pub action: InvolutionAction,
    pub free_rank_two: bool,
}

pub fn pushforward_module(c: &CoverDatum, m: &LinearizedModule) -> Result<CoverPushforward> {
    let bbar = c.cover();
    let g = c.inclusion()?;
    let (e, _) = restrict_scalars(&g, &m.module(c), &[bbar.one(), c.z()])?;
    let pruned = prune(&e)?;
    let free_rank_two = pruned.module.ngens() == 2 && pruned.module.relations().rows().iter().all(|r| r.iter().all(|p| p.is_zero()));
    let pullback = base_change(&g, &e)?;
    let mfree = m.module(c);
    let z = c.z();
    let surjection = ModuleMap::new(&pullback, &mfree, vec![vec![bbar.one()], vec![z.clone()]])?;
    let s = m.sign_poly(c);
    let sum = FPModule::free(bbar, 2);
    let alpha = ModuleMap::new(&pullback, &sum, vec![vec![bbar.one(), s.clone()], vec![z.clone(), -&(&s * &z)]])?;
    let base = c.base();
    let sb = Polynomial::constant(base.ambient(), q(m.sign as i64));
    let act = ModuleMap::new(&e, &e, vec![vec![sb.clone(), base.zero()], vec![base.zero(), -&sb]])?;
    let action = InvolutionAction::new(act)?;
    Ok(CoverPushforward { e, pullback, surjection, alpha, action, free_rank_two })
}

fn image_subquotient(f: &ModuleMap) -> Subquotient {
    Subquotient::new(f.target().ring(), f.target().ngens(), f.matrix().rows().to_vec(), f.target().relations().rows().to_vec())
}

fn same_submodule(a: &Subquotient, b: &Subquotient) -> Result<bool> {
    Ok(a.is_submodule_of(b)? && b.is_submodule_of(a)?)
}

/// Checks collected by the cover-level verifications.
#[derive(Clone, Debug)]
pub struct CoverReport {
    pub checks: Vec<Check>,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.starts_with(prefix))
    }
}

/// Exactness of `0 → g^*E → M ⊕ ι^*M → M|_R → 0` and the determinant identity
/// `det α ~ z`, i.e. `g^*det E ≅ M ⊗ ι^*M ⊗ O(−R)` with `O(2R) = O(g^*D)`.
pub fn det_sequence_check(c: &CoverDatum, m: &LinearizedModule) -> Result<CoverReport> {
    let bbar = c.cover();
    let pf = pushforward_module(c, m)?;
    let z = c.z();
    let m_r = FPModule::cyclic(bbar, std::slice::from_ref(&z))?;
    let s = m.sign_poly(c);
    let beta = ModuleMap::new(pf.alpha.target(), &m_r, vec![vec![bbar.one()], vec![-&s]])?;
    let mut checks = Vec::new();

    checks.push(Check::new("E free of rank 2", pf.free_rank_two, "basis {m, z*m}"));
    let surj = pf.surjection.is_surjective()?;
    checks.push(Check::new("g^*E -> M surjective", surj, "cokernel of [1; z] is 0"));
    checks.push(Check::new("alpha injective", pf.alpha.is_injective()?, ""));
    let comp = pf.alpha.then(&beta)?.is_zero()?;
    checks.push(Check::new("beta o alpha = 0", comp, ""));
    let exact_mid = same_submodule(&beta.kernel()?, &image_subquotient(&pf.alpha))?;
    checks.push(Check::new("ker beta = im alpha", exact_mid, ""));
    checks.push(Check::new("beta surjective", beta.is_surjective()?, ""));

    let rows = pf.alpha.matrix().rows();
    let det = bbar.reduce(&(&(&rows[0][0] * &rows[1][1]) - &(&rows[0][1] * &rows[1][0])))?;
    let det_ok = bbar.ideal_equal(std::slice::from_ref(&det), std::slice::from_ref(&z))?;
    checks.push(Check::new("det alpha generates I_R", det_ok, format!("det = {det}")));
    let b = c.branch_in_cover()?;
    let twice = bbar.ideal_equal(&[&z * &z], &[b])?;
    checks.push(Check::new("2R = g^*D", twice, ""));
    Ok(CoverReport { checks })
}

/// The pushout `X = V_Ȳ(M) ⊔_Ȳ Y` inside `Spec B[u,v]`.
#[derive(Clone, Debug)]
pub struct VEmbedding {
    pub pushout: PushoutPresentation,
    /// `u² − b·v²` in the ambient ring of `A`.
    pub expected: Polynomial,
    pub u: Polynomial,
    pub v: Polynomial,
    pub cartesian: CartesianReport,
    pub checks: Vec<Check>,
}

impl VEmbedding {
    pub fn passed(&self) -> bool {
        self.cartesian.passed() && self.checks.iter().all(|c| c.passed)
    }

    /// The defining equation of `X`, when the relations of `A` beyond those of `B`
    /// are a single polynomial.
    pub fn equation(&self) -> Option<Polynomial> {
        let a = &self.pushout.a;
        let extra: Vec<&Polynomial> = a
            .relations()
            .iter()
            .filter(|r| r.support_vars().iter().any(|&i| i >= a.nvars() - 2))
            .collect();
        match extra.as_slice() {
            [h] => Some((*h).clone()),
            _ => None,
        }
    }
}

/// `Ā = B̄[t]` glued to `B` along `t = 0`, with `A`-coordinates `(B, v, u) ↦ (B, t, z·t)`.
pub fn embed_in_ve(c: &CoverDatum, m: &LinearizedModule) -> Result<VEmbedding> {
    let _ = m;
    let bbar = c.cover();
    let mut names = bbar.vars().to_vec();
    let t = fresh_name(&names, "t");
    names.push(t.clone());
    let amb = PolyRing::new(&names, MonomialOrder::Grevlex)?;
    let rels = bbar.relations().iter().map(|r| r.rename_into(&amb)).collect::<Result<Vec<_>>>()?;
    let abar = RingPresentation::new(&amb, rels);
    let tv = Polynomial::var_named(&amb, &t)?;
    let zv = c.z().rename_into(&amb)?;
    let phi = c.base().gens().iter().map(|g| g.rename_into(&amb)).collect::<Result<Vec<_>>>()?;
    let v_name = fresh_name(c.base().vars(), "v");
    let mut taken = c.base().vars().to_vec();
    taken.push(v_name.clone());
    let u_name = fresh_name(&taken, "u");
    let mut a_names = c.base().vars().to_vec();
    a_names.push(v_name.clone());
    a_names.push(u_name.clone());
    let datum = GluingDatum::new(abar.clone(), tv.clone(), c.base().clone(), phi, vec![abar.one(), zv.clone()])?.with_a_vars(&a_names);
    let p = pushout(&datum, DEFAULT_DEGREE_BOUND)?;
    let a = &p.a;
    let u = a.var(&u_name)?;
    let v = a.var(&v_name)?;
    let b = c.branch().rename_into(a.ambient())?;
    let expected = &(&u * &u) - &(&b * &(&v * &v));

    let mut checks = Vec::new();
    let mut want: Vec<Polynomial> = c.base().relations().iter().map(|r| r.rename_into(a.ambient())).collect::<Result<_>>()?;
    want.push(expected.clone());
    let free = RingPresentation::polynomial_ring(a.ambient());
    let eq_ok = free.ideal_equal(a.relations(), &want)?;
    checks.push(Check::new("equation is u^2 - b*v^2", eq_ok, format!("relations {}", join(a.relations()))));
    let phi_u = abar.equal(&p.fsharp.apply(&u)?, &(&zv * &tv))?;
    let phi_v = abar.equal(&p.fsharp.apply(&v)?, &tv)?;
    checks.push(Check::new("Phi#(u, v) = (z*t, t)", phi_u && phi_v, ""));
    let cartesian = verify_cartesian(&p)?;
    Ok(VEmbedding { pushout: p, expected, u, v, cartesian, checks })
}

fn join(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

/// Pulled back to `B̄[u,v]`, `h` splits as `(u − z·v)(u + z·v)`: the two factors are
/// the coordinates cut out by `M` and `ι^*M`, and the discriminant is `4b`.
pub fn cor46_affine_check(c: &CoverDatum, emb: &VEmbedding) -> Result<Check> {
    let h = match emb.equation() {
        Some(h) => h,
        None => return Ok(Check::new("h = (u - z*v)(u + z*v)", false, "no single equation")),
    };
    let bbar = c.cover();
    let mut names = bbar.vars().to_vec();
    let a = &emb.pushout.a;
    let nb = c.base().nvars();
    names.push(a.vars()[nb].clone());
    names.push(a.vars()[nb + 1].clone());
    let amb = PolyRing::new(&names, MonomialOrder::Grevlex)?;
    let rels = bbar.relations().iter().map(|r| r.rename_into(&amb)).collect::<Result<Vec<_>>>()?;
    let big = RingPresentation::new(&amb, rels);
    let hz = h.rename_into(&amb)?;
    let u = emb.u.rename_into(&amb)?;
    let v = emb.v.rename_into(&amb)?;
    let z = c.z().rename_into(&amb)?;
    let prod = &(&u - &(&z * &v)) * &(&u + &(&z * &v));
    let ok = big.equal(&hz, &prod)? || big.equal(&-&hz, &prod)?;
    let b = c.branch().rename_into(&amb)?;
    let (iu, iv) = (nb + 2, nb + 1);
    let cu = coeff_in(&hz, iu, iv, 2, 0);
    let cuv = coeff_in(&hz, iu, iv, 1, 1);
    let cv = coeff_in(&hz, iu, iv, 0, 2);
    let disc = &(&cuv * &cuv) - &(&cu * &cv).scale(&q(4));
    let disc_ok = big.equal(&disc, &b.scale(&q(4)))?;
    Ok(Check::new("h = (u - z*v)(u + z*v)", ok && disc_ok, format!("h = {h}")))
}

/// The coefficient of `x_i^a x_j^b` in `p`, as a polynomial free of `x_i, x_j`.
fn coeff_in(p: &Polynomial, i: usize, j: usize, a: u32, b: u32) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .filter(|(m, _)| m.0[i] == a && m.0[j] == b)
        .map(|(m, c)| {
            let mut m = m.clone();
            m.0[i] = 0;
            m.0[j] = 0;
            (m, c.clone())
        })
        .collect();
    Polynomial::from_terms(p.ring(), terms)
}

/// `I_{Y|X_sing} ≅ r_*(M|_R)`, certified over `B` by surjections from `E` with equal kernels.
#[derive(Clone, Debug)]
pub struct Prop48Report {
    pub embedding: VEmbedding,
    pub ideal_report: IdealYReport,
    /// `I_Y / I_{X_sing}` as a `B`-module on the generators `(v, u)`.
    pub ideal_module: FPModule,
    /// `r_*(M|_R)` as a `B`-module on `(m, z·m)`.
    pub restricted: FPModule,
    pub restricted_check: LineBundleCheck,
    pub checks: Vec<Check>,
}

impl Prop48Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.starts_with(prefix))
    }
}

fn column(v: &[Polynomial]) -> Vec<Element> {
    v.iter().map(|g| vec![g.clone()]).collect()
}

pub fn prop48_check(c: &CoverDatum, m: &LinearizedModule) -> Result<Prop48Report> {
    let emb = embed_in_ve(c, m)?;
    let p = &emb.pushout;
    let a = &p.a;
    let base = c.base();
    let mut checks = Vec::new();
    if let Some(false) = c.branch_is_squarefree() {
        checks.push(Check::new("b squarefree", false, format!("b = {}", c.branch())));
    }

    let uv = vec![emb.v.clone(), emb.u.clone()];
    let iy_ok = a.ideal_equal(&p.conductor_a, &uv)?;
    checks.push(Check::new("I_Y = (u, v)", iy_ok, ""));
    let xs = jacobian_ideal(a)?;
    let sq: Vec<Polynomial> = uv.iter().flat_map(|x| uv.iter().map(move |y| x * y)).collect();
    checks.push(Check::new("I_Y^2 in I_Xsing", a.ideal_subset(&sq, &xs)?, ""));

    let n = Subquotient::new(a, 1, column(&uv), column(&xs));
    let n_b = base_change(&p.jsharp, n.presentation()?)?;
    let (m_r, _) = restrict_scalars(
        &c.inclusion()?,
        &FPModule::cyclic(c.cover(), &[c.z()])?,
        &[c.cover().one(), c.z()],
    )?;
    let e = FPModule::free(base, 2);
    let id = |t: &FPModule| ModuleMap::new(&e, t, vec![vec![base.one(), base.zero()], vec![base.zero(), base.one()]]);
    let psi = id(&n_b)?;
    let phi = id(&m_r)?;
    let kpsi = psi.kernel()?;
    let kphi = phi.kernel()?;
    checks.push(Check::new("ker phi in ker psi", kphi.is_submodule_of(&kpsi)?, "z*m maps to 0 in both"));
    checks.push(Check::new("ker psi in ker phi", kpsi.is_submodule_of(&kphi)?, ""));
    let z_row = vec![base.zero(), base.one()];
    checks.push(Check::new("e_zm in ker phi", kphi.contains(&z_row)?, ""));

    let ideal_report = ideal_y_in_xsing(p)?;
    let fitt = ideal_report.check.is_invertible() || ideal_report.check.empty_support;
    checks.push(Check::new(
        "I_Y|Xsing invertible on D",
        fitt,
        format!("Fitt0 = ({}), Fitt1 = ({})", join(&ideal_report.check.fitt0), join(&ideal_report.check.fitt1)),
    ));
    let o_d = base.quotient(std::slice::from_ref(c.branch()));
    let to_d = RingMap::new_unchecked(base, &o_d, base.gens())?;
    let restricted_check = LineBundleCheck::new(&base_change(&to_d, &m_r)?)?;
    checks.push(Check::new(
        "r_*(M|_R) invertible on D",
        restricted_check.is_invertible() || restricted_check.empty_support,
        "",
    ));
    Ok(Prop48Report { embedding: emb, ideal_report, ideal_module: n_b, restricted: m_r, restricted_check, checks })
}

#[cfg(test)]
mod tests;
