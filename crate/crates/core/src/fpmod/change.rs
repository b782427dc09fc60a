//! Pruning, change of rings, and invariants of involutions.

use super::{Element, FPModule, ModuleMap, Subquotient};
use crate::error::{Error, Result};
use crate::finite::Pushforward;
use crate::groebner::module::ModuleMatrix;
use crate::poly::{q_frac, Polynomial};
use crate::presentation::RingMap;

/// A presentation with unit pivots removed, and the isomorphisms to and from it.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub module: FPModule,
    /// Original module → pruned module.
    pub to_pruned: ModuleMap,
    /// Pruned module → original module.
    pub from_pruned: ModuleMap,
}

impl ModuleMap {
    pub(crate) fn from_parts(source: &FPModule, target: &FPModule, images: Vec<Element>) -> Result<Self> {
        let matrix = ModuleMatrix::new(target.ring(), target.ngens(), images)?;
        Ok(ModuleMap { source: source.clone(), target: target.clone(), matrix })
    }
}

/// Eliminates generators that some relation expresses with a unit coefficient.
pub fn prune(m: &FPModule) -> Result<Pruned> {
    let ring = m.ring();
    let n0 = m.ngens();
    let mut rows: Vec<Element> = m.relations().rows().to_vec();
    let mut kept: Vec<usize> = (0..n0).collect();
    let mut expr: Vec<Element> = (0..n0).map(|i| m.unit(i)).collect();
    loop {
        let pivot = rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|p| !p.is_zero() && p.is_constant()).map(|c| (r, c))
        });
        let Some((r, c)) = pivot else { break };
        let pivot_row = rows.remove(r);
        let u = pivot_row[c].as_constant().expect("constant pivot");
        let inv = Polynomial::constant(ring.ambient(), u.recip());
        for row in rows.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                *e = ring.reduce(&(&*e - &(&f * p)))?;
            }
        }
        // e_c = −u⁻¹ Σ_{j≠c} pivot_row[j] e_j
        for ex in expr.iter_mut() {
            let a = ex[c].clone();
            if !a.is_zero() {
                let f = &a * &inv;
                for (j, p) in pivot_row.iter().enumerate() {
                    if j != c {
                        ex[j] = ring.reduce(&(&ex[j] - &(&f * p)))?;
                    }
                }
            }
            ex.remove(c);
        }
        for row in rows.iter_mut() {
            row.remove(c);
        }
        kept.remove(c);
    }
    rows.retain(|r| r.iter().any(|p| !p.is_zero()));
    let module = FPModule::from_rows(ring, kept.len(), rows)?;
    let to_pruned = ModuleMap::from_parts(m, &module, expr)?;
    let from_pruned = ModuleMap::from_parts(&module, m, kept.iter().map(|&i| m.unit(i)).collect())?;
    Ok(Pruned { module, to_pruned, from_pruned })
}

/// `M ⊗ S` along `map: R → S`.
pub fn base_change(map: &RingMap, m: &FPModule) -> Result<FPModule> {
    let rows = m
        .relations()
        .rows()
        .iter()
        .map(|r| map.apply_all(r))
        .collect::<Result<Vec<_>>>()?;
    FPModule::from_rows(map.target(), m.ngens(), rows)
}

/// `M` over `Ā` viewed as an `A`-module along `map: A → Ā`, where `Ā` is generated
/// over `A` by `algebra_gens`. Generators are `algebra_gens[l]·e_j`, `j` major.
pub fn restrict_scalars(map: &RingMap, m: &FPModule, algebra_gens: &[Polynomial]) -> Result<(FPModule, Pushforward)> {
    let abar = map.target();
    let b = m.ngens();
    let mut gens = Vec::with_capacity(b * algebra_gens.len());
    for j in 0..b {
        for g in algebra_gens {
            let mut v = vec![abar.zero(); b];
            v[j] = g.clone();
            gens.push(v);
        }
    }
    let pf = Pushforward::new(map, b, m.relations().rows(), gens)?;
    let module = FPModule::from_rows(map.source(), pf.gens().len(), pf.relations()?)?;
    Ok((module, pf))
}

/// An endomorphism of a module that squares to the identity.
#[derive(Clone, Debug)]
pub struct InvolutionAction {
    action: ModuleMap,
}

impl InvolutionAction {
    pub fn new(action: ModuleMap) -> Result<Self> {
        let m = action.source().clone();
        for i in 0..m.ngens() {
            let e = m.unit(i);
            let twice = action.apply(&action.apply(&e)?)?;
            if !m.equal(&twice, &e)? {
                return Err(Error::NotInvolution(format!("generator {i} is not fixed by the square of the action")));
            }
        }
        Ok(InvolutionAction { action })
    }

    pub fn module(&self) -> &FPModule {
        self.action.source()
    }

    pub fn action(&self) -> &ModuleMap {
        &self.action
    }

    fn projector(&self, sign: i64) -> Result<Vec<Element>> {
        let m = self.module();
        let ring = m.ring();
        let half = Polynomial::constant(ring.ambient(), q_frac(sign, 2));
        let mut out = Vec::with_capacity(m.ngens());
        for i in 0..m.ngens() {
            let e = m.unit(i);
            let s = self.action.apply(&e)?;
            let g: Element = e.iter().zip(&s).map(|(a, b)| ring.reduce(&(&a.scale(&q_frac(1, 2)) + &(&half * b)))).collect::<Result<_>>()?;
            out.push(g);
        }
        Ok(out)
    }

    /// The submodule of elements with `S v = v`, as the image of `(1 + S)/2`.
    pub fn invariants(&self) -> Result<Invariants> {
        Invariants::build(self.module(), self.projector(1)?)
    }

    /// The submodule of elements with `S v = −v`.
    pub fn anti_invariants(&self) -> Result<Invariants> {
        Invariants::build(self.module(), self.projector(-1)?)
    }
}

/// A submodule given as an image, with its presentation and inclusion.
#[derive(Clone, Debug)]
pub struct Invariants {
    pub submodule: Subquotient,
    pub module: FPModule,
    pub inclusion: ModuleMap,
}

impl Invariants {
    fn build(m: &FPModule, gens: Vec<Element>) -> Result<Self> {
        let submodule = Subquotient::new(m.ring(), m.ngens(), gens.clone(), m.relations().rows().to_vec());
        let module = submodule.presentation()?.clone();
        let inclusion = ModuleMap::from_parts(&module, m, gens)?;
        Ok(Invariants { submodule, module, inclusion })
    }
}

pub fn invariants(action: &InvolutionAction) -> Result<Invariants> {
    action.invariants()
}
