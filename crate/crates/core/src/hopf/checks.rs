//! The Hopf-axiom suite and the Hopf-morphism checker.

use super::elem::{Elem, Elem2, FreeElem, Mono};
use super::engine::EngineError;
use super::structure::StructureHopfAlgebra;
use crate::report::{CheckResult, Witness};
use crate::scalar::Scalar;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Copy, Debug)]
pub struct AxiomCheckConfig {
    pub seed: u64,
    /// exhaustive associativity up to this many basis elements
    pub exhaustive_limit: usize,
    /// number of sampled triples above the limit
    pub samples: usize,
}

impl Default for AxiomCheckConfig {
    fn default() -> Self {
        AxiomCheckConfig {
            seed: crate::DEFAULT_SEED,
            exhaustive_limit: 5000,
            samples: 10_000,
        }
    }
}

/// Verify the bialgebra and Hopf axioms of a structure-constant algebra:
/// defining relations, associativity (exhaustive or seeded), unit laws,
/// multiplicativity of Δ and ε across every relation, coassociativity and
/// counit laws on generators, and the antipode convolution identity.
pub fn check_hopf_axioms(
    alg: &StructureHopfAlgebra,
    cfg: &AxiomCheckConfig,
) -> Result<Vec<CheckResult>, EngineError> {
    let mut out = Vec::new();

    // 1. defining relations hold in the structure constants
    let mut witness = None;
    for rel in &alg.relations {
        let lhs = alg.eval_free(&rel.lhs)?;
        let rhs = alg.eval_free(&rel.rhs)?;
        if lhs != rhs {
            witness = Some(Witness {
                location: rel.name.clone(),
                lhs: alg.elem_label(&lhs),
                rhs: alg.elem_label(&rhs),
            });
            break;
        }
    }
    out.push(CheckResult::of("relations-hold", witness));

    // 2. associativity
    out.push(check_associativity(alg, cfg)?);

    // 3. unit laws
    out.push(check_unit_laws(alg, cfg)?);

    // 4. counit laws on generators: (ε⊗Id)Δ = Id = (Id⊗ε)Δ
    let mut witness = None;
    for g in 0..alg.gens.len() {
        let d = &alg.gens[g].coproduct;
        let mut left = Elem::zero();
        let mut right = Elem::zero();
        for ((a, b), c) in &d.terms {
            left.add_term(b.clone(), c.mul(&alg.counit_mono(a)));
            right.add_term(a.clone(), c.mul(&alg.counit_mono(b)));
        }
        let expect = alg.gen_elem(g);
        if left != expect || right != expect {
            witness = Some(Witness {
                location: alg.gens[g].name.clone(),
                lhs: alg.elem_label(&left),
                rhs: alg.elem_label(&right),
            });
            break;
        }
    }
    out.push(CheckResult::of("counit-law", witness));

    // 5. coassociativity on generators
    let mut witness = None;
    for g in 0..alg.gens.len() {
        let (l, r) = alg.coassoc_sides(&alg.gen_elem(g))?;
        if !l.sub(&r).is_zero() {
            witness = Some(Witness {
                location: alg.gens[g].name.clone(),
                lhs: format!("(Δ⊗Id)Δ with {} terms", l.terms.len()),
                rhs: format!("(Id⊗Δ)Δ with {} terms", r.terms.len()),
            });
            break;
        }
    }
    out.push(CheckResult::of("coassociativity", witness));

    // 6. Δ preserves every defining relation (Δ is an algebra map)
    let images: Vec<Elem2> = alg.gens.iter().map(|g| g.coproduct.clone()).collect();
    let mut witness = None;
    for rel in &alg.relations {
        let lhs = alg.eval_free_in_square(&rel.lhs, &images)?;
        let rhs = alg.eval_free_in_square(&rel.rhs, &images)?;
        if !lhs.sub(&rhs).is_zero() {
            witness = Some(Witness {
                location: rel.name.clone(),
                lhs: alg.elem2_label(&lhs),
                rhs: alg.elem2_label(&rhs),
            });
            break;
        }
    }
    out.push(CheckResult::of("coproduct-preserves-relations", witness));

    // 7. ε preserves every defining relation
    let eps_images: Vec<Scalar> = alg.gens.iter().map(|g| g.counit.clone()).collect();
    let mut witness = None;
    for rel in &alg.relations {
        let lhs = alg.eval_free_scalar(&rel.lhs, &eps_images);
        let rhs = alg.eval_free_scalar(&rel.rhs, &eps_images);
        if lhs != rhs {
            witness = Some(Witness {
                location: rel.name.clone(),
                lhs: lhs.to_text(),
                rhs: rhs.to_text(),
            });
            break;
        }
    }
    out.push(CheckResult::of("counit-preserves-relations", witness));

    // 8. antipode: m(S⊗Id)Δ = ηε = m(Id⊗S)Δ on generators
    let mut witness = None;
    for g in 0..alg.gens.len() {
        let d = &alg.gens[g].coproduct;
        let mut left = Elem::zero();
        let mut right = Elem::zero();
        for ((a, b), c) in &d.terms {
            let sa = alg.antipode_mono(a)?;
            let p = alg.product(&sa, &Elem::single(b.clone(), Scalar::one(alg.field())))?;
            for (m, s) in p.terms {
                left.add_term(m, s.mul(c));
            }
            let sb = alg.antipode_mono(b)?;
            let p = alg.product(&Elem::single(a.clone(), Scalar::one(alg.field())), &sb)?;
            for (m, s) in p.terms {
                right.add_term(m, s.mul(c));
            }
        }
        let expect = alg.unit_elem().scale(&alg.gens[g].counit);
        if left != expect || right != expect {
            witness = Some(Witness {
                location: alg.gens[g].name.clone(),
                lhs: alg.elem_label(&left),
                rhs: alg.elem_label(&right),
            });
            break;
        }
    }
    out.push(CheckResult::of("antipode-convolution", witness));

    Ok(out)
}

fn check_associativity(
    alg: &StructureHopfAlgebra,
    cfg: &AxiomCheckConfig,
) -> Result<CheckResult, EngineError> {
    match alg.dim() {
        Some(dim) if dim <= cfg.exhaustive_limit => {
            let witness = assoc_exhaustive(alg, dim)?;
            Ok(CheckResult::of(
                format!("associativity-exhaustive-{}^3", dim),
                witness,
            ))
        }
        _ => {
            let witness = assoc_sampled(alg, cfg)?;
            Ok(CheckResult::of(
                format!("associativity-sampled-{}", cfg.samples),
                witness,
            ))
        }
    }
}

fn assoc_exhaustive(
    alg: &StructureHopfAlgebra,
    dim: usize,
) -> Result<Option<Witness>, EngineError> {
    // materialize the table once, then contract triples on index elements
    let mut table: Vec<Vec<Arc<Vec<(u32, Scalar)>>>> = Vec::with_capacity(dim);
    for a in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for b in 0..dim {
            row.push(alg.product_basis(a, b)?);
        }
        table.push(row);
    }
    let contract_left = |ab: &Arc<Vec<(u32, Scalar)>>, c: usize| -> BTreeMap<u32, Scalar> {
        let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (w, s) in ab.iter() {
            for (r, t) in table[*w as usize][c].iter() {
                add_idx(&mut acc, *r, s.mul(t));
            }
        }
        acc
    };
    let contract_right = |a: usize, bc: &Arc<Vec<(u32, Scalar)>>| -> BTreeMap<u32, Scalar> {
        let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (w, s) in bc.iter() {
            for (r, t) in table[a][*w as usize].iter() {
                add_idx(&mut acc, *r, s.mul(t));
            }
        }
        acc
    };
    for a in 0..dim {
        for b in 0..dim {
            let ab = table[a][b].clone();
            for c in 0..dim {
                let lhs = contract_left(&ab, c);
                let rhs = contract_right(a, &table[b][c]);
                if lhs != rhs {
                    return Ok(Some(Witness {
                        location: format!(
                            "({})·({})·({})",
                            alg.mono_label(alg.basis_mono(a)),
                            alg.mono_label(alg.basis_mono(b)),
                            alg.mono_label(alg.basis_mono(c))
                        ),
                        lhs: format!("{} terms", lhs.len()),
                        rhs: format!("{} terms", rhs.len()),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn add_idx(acc: &mut BTreeMap<u32, Scalar>, r: u32, v: Scalar) {
    if v.is_zero() {
        return;
    }
    match acc.remove(&r) {
        Some(old) => {
            let nv = old.add(&v);
            if !nv.is_zero() {
                acc.insert(r, nv);
            }
        }
        None => {
            acc.insert(r, v);
        }
    }
}

fn assoc_sampled(
    alg: &StructureHopfAlgebra,
    cfg: &AxiomCheckConfig,
) -> Result<Option<Witness>, EngineError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pool = sample_pool(alg);
    for _ in 0..cfg.samples {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let c = &pool[rng.gen_range(0..pool.len())];
        let ab = alg.engine.mul_monos(a, b)?;
        let bc = alg.engine.mul_monos(b, c)?;
        let lhs = alg
            .engine
            .mul_elems(&ab, &Elem::single(c.clone(), Scalar::one(alg.field())))?;
        let rhs = alg
            .engine
            .mul_elems(&Elem::single(a.clone(), Scalar::one(alg.field())), &bc)?;
        if lhs != rhs {
            return Ok(Some(Witness {
                location: format!(
                    "({})·({})·({})",
                    alg.mono_label(a),
                    alg.mono_label(b),
                    alg.mono_label(c)
                ),
                lhs: alg.elem_label(&lhs),
                rhs: alg.elem_label(&rhs),
            }));
        }
    }
    Ok(None)
}

/// Monomials to sample from: the full basis when finite, otherwise bounded
/// block words and small group exponents so products stay within cutoffs.
fn sample_pool(alg: &StructureHopfAlgebra) -> Vec<Mono> {
    if let Some(basis) = alg.basis() {
        return basis.to_vec();
    }
    let engine = &alg.engine;
    let mut lowers: Vec<crate::words::Word> = vec![Vec::new()];
    if let Some(b) = &engine.lower {
        let max_level = b.alg.cutoff / 3;
        lowers = (0..b.alg.dim())
            .filter(|&i| b.alg.basis_level(i) <= max_level)
            .map(|i| b.alg.basis_word(i).clone())
            .collect();
    }
    let mut uppers: Vec<crate::words::Word> = vec![Vec::new()];
    if let Some(b) = &engine.upper {
        let max_level = b.alg.cutoff / 3;
        uppers = (0..b.alg.dim())
            .filter(|&i| b.alg.basis_level(i) <= max_level)
            .map(|i| b.alg.basis_word(i).clone())
            .collect();
    }
    let grps: Vec<Vec<i64>> = match &engine.kgroup {
        None => vec![Vec::new()],
        Some(g) => match g.modulus {
            Some(_) => g.elements(),
            None => {
                // small window of the free lattice
                let mut out = Vec::new();
                let ranges: Vec<i64> = vec![-2, -1, 0, 1, 2];
                let mut cur = vec![0i64; g.rank];
                fn rec(
                    k: usize,
                    rank: usize,
                    ranges: &[i64],
                    cur: &mut Vec<i64>,
                    out: &mut Vec<Vec<i64>>,
                ) {
                    if k == rank {
                        out.push(cur.clone());
                        return;
                    }
                    for &v in ranges {
                        cur[k] = v;
                        rec(k + 1, rank, ranges, cur, out);
                    }
                }
                rec(0, g.rank, &ranges, &mut cur, &mut out);
                out
            }
        },
    };
    let mut pool = Vec::new();
    for lo in &lowers {
        for grp in &grps {
            for hi in &uppers {
                pool.push(Mono {
                    lo: lo.clone(),
                    grp: grp.clone(),
                    hi: hi.clone(),
                });
            }
        }
    }
    pool
}

fn check_unit_laws(
    alg: &StructureHopfAlgebra,
    cfg: &AxiomCheckConfig,
) -> Result<CheckResult, EngineError> {
    let unit = alg.unit_elem();
    let pool: Vec<Mono> = match alg.basis() {
        Some(basis) if basis.len() <= cfg.exhaustive_limit => basis.to_vec(),
        _ => sample_pool(alg),
    };
    let mut witness = None;
    for m in &pool {
        let e = Elem::single(m.clone(), Scalar::one(alg.field()));
        let l = alg.product(&unit, &e)?;
        let r = alg.product(&e, &unit)?;
        if l != e || r != e {
            witness = Some(Witness {
                location: alg.mono_label(m),
                lhs: alg.elem_label(&l),
                rhs: alg.elem_label(&r),
            });
            break;
        }
    }
    Ok(CheckResult::of("unit-laws", witness))
}

pub struct HopfMorphismSpec<'a> {
    pub name: String,
    pub source: &'a StructureHopfAlgebra,
    pub target: &'a StructureHopfAlgebra,
    /// image of each source generator in the target
    pub images: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct MorphismReport {
    pub is_algebra_map: CheckResult,
    pub is_coalgebra_map: CheckResult,
    pub commutes_with_antipode: CheckResult,
    pub bijective: CheckResult,
}

impl MorphismReport {
    pub fn results(&self) -> Vec<CheckResult> {
        vec![
            self.is_algebra_map.clone(),
            self.is_coalgebra_map.clone(),
            self.commutes_with_antipode.clone(),
            self.bijective.clone(),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.results().iter().all(|r| r.pass)
    }
}

/// Image of a source monomial under the generator images: the ordered
/// product of letter images and group-generator image powers.
pub fn image_of_mono(
    spec: &HopfMorphismSpec<'_>,
    m: &Mono,
) -> Result<Elem, EngineError> {
    let t = spec.target;
    let s = spec.source;
    let mut acc = t.unit_elem();
    for &j in &m.lo {
        acc = t.product(&acc, &spec.images[s.lower_gens[j as usize]])?;
    }
    for (i, &e) in m.grp.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let (k, kinv) = s.group_gens[i];
        let img = if e > 0 { &spec.images[k] } else { &spec.images[kinv] };
        for _ in 0..e.unsigned_abs() {
            acc = t.product(&acc, img)?;
        }
    }
    for &j in &m.hi {
        acc = t.product(&acc, &spec.images[s.upper_gens[j as usize]])?;
    }
    Ok(acc)
}

fn image_of_elem(spec: &HopfMorphismSpec<'_>, e: &Elem) -> Result<Elem, EngineError> {
    let mut out = Elem::zero();
    for (m, c) in &e.terms {
        for (mm, s) in image_of_mono(spec, m)?.terms {
            out.add_term(mm, s.mul(c));
        }
    }
    Ok(out)
}

fn image_of_elem2(spec: &HopfMorphismSpec<'_>, e: &Elem2) -> Result<Elem2, EngineError> {
    let mut out = Elem2::zero();
    for ((a, b), c) in &e.terms {
        let ia = image_of_mono(spec, a)?;
        let ib = image_of_mono(spec, b)?;
        for (ma, sa) in &ia.terms {
            for (mb, sb) in &ib.terms {
                out.add_term(ma.clone(), mb.clone(), c.mul(sa).mul(sb));
            }
        }
    }
    Ok(out)
}

/// Decide the four morphism flags exactly.
pub fn check_morphism(spec: &HopfMorphismSpec<'_>) -> Result<MorphismReport, EngineError> {
    let s = spec.source;
    let t = spec.target;

    // algebra map: source relations hold on the images
    let mut witness = None;
    for rel in &s.relations {
        let lhs = t.eval_free_with(&rel.lhs, &spec.images)?;
        let rhs = t.eval_free_with(&rel.rhs, &spec.images)?;
        if lhs != rhs {
            witness = Some(Witness {
                location: rel.name.clone(),
                lhs: t.elem_label(&lhs),
                rhs: t.elem_label(&rhs),
            });
            break;
        }
    }
    let is_algebra_map = CheckResult::of("morphism-algebra-map", witness);

    // coalgebra map on generators: Δ_T(φ g) = (φ⊗φ)(Δ_S g)
    let mut witness = None;
    for (g, gen) in s.gens.iter().enumerate() {
        let lhs = t.coproduct_elem(&spec.images[g])?;
        let rhs = image_of_elem2(spec, &gen.coproduct)?;
        if !lhs.sub(&rhs).is_zero() {
            witness = Some(Witness {
                location: gen.name.clone(),
                lhs: t.elem2_label(&lhs),
                rhs: t.elem2_label(&rhs),
            });
            break;
        }
    }
    let is_coalgebra_map = CheckResult::of("morphism-coalgebra-map", witness);

    // antipode: φ(S_S g) = S_T(φ g)
    let mut witness = None;
    for (g, gen) in s.gens.iter().enumerate() {
        let lhs = image_of_elem(spec, &gen.antipode)?;
        let rhs = t.antipode_elem(&spec.images[g])?;
        if lhs != rhs {
            witness = Some(Witness {
                location: gen.name.clone(),
                lhs: t.elem_label(&lhs),
                rhs: t.elem_label(&rhs),
            });
            break;
        }
    }
    let commutes_with_antipode = CheckResult::of("morphism-antipode", witness);

    // bijectivity by the rank of the basis-to-basis matrix
    let bijective = match (s.dim(), t.dim()) {
        (Some(ds), Some(dt)) if ds == dt => {
            let mut rows: Vec<Vec<(u32, Scalar)>> = Vec::with_capacity(ds);
            for i in 0..ds {
                let img = image_of_mono(spec, s.basis_mono(i))?;
                let row: Vec<(u32, Scalar)> = img
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        let idx = t
                            .basis_index(m)
                            .expect("image outside the target basis");
                        (idx as u32, c.clone())
                    })
                    .collect();
                rows.push(row);
            }
            let rank = crate::linalg::sparse_rank(rows);
            if rank == ds {
                CheckResult::ok("morphism-bijective")
            } else {
                CheckResult::fail(
                    "morphism-bijective",
                    format!("rank {} < dim {}", rank, ds),
                    rank.to_string(),
                    ds.to_string(),
                )
            }
        }
        (Some(ds), Some(dt)) => CheckResult::fail(
            "morphism-bijective",
            "dimension mismatch".to_string(),
            ds.to_string(),
            dt.to_string(),
        ),
        _ => CheckResult::fail(
            "morphism-bijective",
            "source or target not finite dimensional".to_string(),
            String::new(),
            String::new(),
        ),
    };

    Ok(MorphismReport {
        is_algebra_map,
        is_coalgebra_map,
        commutes_with_antipode,
        bijective,
    })
}

/// Evaluate a free element as an operator product of generator action
/// matrices on a module carrier: the word [a, b] acts as ρ(a)∘ρ(b).
pub fn eval_free_as_operator(
    fe: &FreeElem,
    images: &[crate::gmap::GradedMap],
    carrier: &crate::space::Space,
) -> Result<crate::gmap::GradedMap, crate::gmap::GmapError> {
    use crate::gmap::GradedMap;
    let mut out = GradedMap::zero(carrier.clone(), carrier.clone());
    for (word, coef) in &fe.0 {
        let mut acc = GradedMap::identity(carrier);
        for &g in word.iter().rev() {
            acc = acc.then(&images[g])?;
        }
        out = out.add(&acc.scale(coef))?;
    }
    Ok(out)
}
