//! Constructors for the algebra families: the small quantum group and its
//! braided-double presentation, the generic quantum group, the triangular
//! Hopf algebras on two positive parts, and the bosonization
//! (B ⊗ B^cop) ⋊ H in its diagonal realization.

use super::elem::{Elem, Elem2, FreeElem, Mono};
use super::engine::{BlockData, CrossRule, EngineError, TriangularAlgebra};
use super::structure::{GenKind, Generator, Relation, StructureHopfAlgebra};
use crate::cartan::CartanDatum;
use crate::grading::{GradingGroup, GroupElem};
use crate::nichols::{nichols_quotient_named, CutoffSpec, NicholsError};
use crate::scalar::{primitive_root, Field, Scalar, ScalarError};
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error("l must be odd and >= 3, got {0}")]
    InvalidL(u32),
    #[error("l must be coprime to 3 for data with a G2 factor")]
    G2Factor,
    #[error("family {0:?} requires a root of unity (--l)")]
    NeedsRootOfUnity(Family),
    #[error("nichols data: {0}")]
    Nichols(#[from] NicholsError),
    #[error("engine: {0}")]
    Engine(#[from] EngineError),
    #[error("scalar: {0}")]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// u_ε(g): generators E_i, F_i, K_i^{±1}
    Small,
    /// the braided-double presentation: e_i, f_i, k_i^{±1}
    Drin,
    /// U_q(g) over rational functions, on PBW monomials with a cutoff
    Generic,
    /// T_q(g): x_i, y_i, K_i^{±1} with x y = q^{i·j} y x
    Tq,
    /// t_ε(g): the root-of-unity T with nilpotent generators
    Teps,
    /// (B ⊗ B^cop) ⋊ H in the diagonal realization: b_i, d_i, k_i^{±1}
    Bbh,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_lowercase().as_str() {
            "small" => Some(Family::Small),
            "drin" | "double" => Some(Family::Drin),
            "generic" => Some(Family::Generic),
            "tq" => Some(Family::Tq),
            "teps" | "t_eps" => Some(Family::Teps),
            "bbh" => Some(Family::Bbh),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Small => "small",
            Family::Drin => "drin",
            Family::Generic => "generic",
            Family::Tq => "tq",
            Family::Teps => "teps",
            Family::Bbh => "bbh",
        }
    }

    fn needs_root_of_unity(&self) -> bool {
        matches!(self, Family::Small | Family::Drin | Family::Teps)
    }

    fn letter_prefixes(&self) -> (&'static str, &'static str, &'static str) {
        // (lower, upper, group)
        match self {
            Family::Small | Family::Generic => ("F", "E", "K"),
            Family::Drin => ("f", "e", "k"),
            Family::Tq => ("x", "y", "K"),
            Family::Teps => ("x", "y", "k"),
            Family::Bbh => ("b", "d", "k"),
        }
    }
}

pub fn validate_root_of_unity(datum: &CartanDatum, l: u32) -> Result<(), BuildError> {
    if l < 3 || l % 2 == 0 {
        return Err(BuildError::InvalidL(l));
    }
    if datum.has_g2_factor() && l % 3 == 0 {
        return Err(BuildError::G2Factor);
    }
    Ok(())
}

const DEFAULT_GENERIC_CUTOFF: u32 = 6;
const MAX_ZERO_LEVEL: u32 = 24;
const PRODUCT_GUARD: u64 = 10_000_000;

/// Build one algebra family over a Cartan datum.
///
/// `l = None` selects generic q; `Some(l)` a primitive l-th root of unity.
/// `cutoff` bounds the block bases for generic families (ignored at roots of
/// unity, where the Nichols quotients are finite).
pub fn build_family(
    family: Family,
    datum: &CartanDatum,
    l: Option<u32>,
    cutoff: Option<u32>,
) -> Result<StructureHopfAlgebra, BuildError> {
    if family.needs_root_of_unity() && l.is_none() {
        return Err(BuildError::NeedsRootOfUnity(family));
    }
    let n = datum.rank();
    let (base, group, cutoff_spec) = match l {
        Some(l) => {
            validate_root_of_unity(datum, l)?;
            (
                primitive_root(l),
                GradingGroup::finite(n, l),
                CutoffSpec::UntilZeroLevel { max: MAX_ZERO_LEVEL },
            )
        }
        None => (
            Scalar::q(),
            GradingGroup::free(n),
            CutoffSpec::Fixed(cutoff.unwrap_or(DEFAULT_GENERIC_CUTOFF)),
        ),
    };
    let field = base.field();
    let (lo_pfx, up_pfx, kname) = family.letter_prefixes();

    // block algebras
    let ef_blocks = matches!(family, Family::Small | Family::Generic | Family::Drin);
    let (lower_alg, upper_alg, bichar) = if ef_blocks {
        let pair = nichols_quotient_named(datum, base.clone(), group, cutoff_spec, up_pfx, lo_pfx)?;
        let bichar = pair.eside.letters.bichar.clone();
        (pair.fside, pair.eside, bichar)
    } else {
        // both blocks are copies of the F-side quotient
        let pair = nichols_quotient_named(datum, base.clone(), group, cutoff_spec, "e", lo_pfx)?;
        let bichar = pair.fside.letters.bichar.clone();
        let upper = Arc::new(
            pair.fside
                .with_letter_names((0..n).map(|i| format!("{}{}", up_pfx, i + 1)).collect()),
        );
        (pair.fside, upper, bichar)
    };

    // cross rule
    let cross_scalar = |i: usize, j: usize| -> Result<Scalar, ScalarError> {
        match family {
            Family::Small | Family::Generic => Ok(Scalar::one(field)),
            Family::Drin => base.pow(datum.dot(i, j)),
            Family::Tq | Family::Teps | Family::Bbh => base.pow(-datum.dot(i, j)),
        }
    };
    let mut scalar = vec![vec![Scalar::one(field); n]; n];
    for (i, row) in scalar.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = cross_scalar(i, j)?;
        }
    }
    let mut correction: Vec<Vec<(GroupElem, Scalar)>> = vec![Vec::new(); n];
    if matches!(family, Family::Small | Family::Generic | Family::Drin) {
        for (i, corr) in correction.iter_mut().enumerate() {
            let bi = base.pow(datum.half_diagonal(i))?;
            let ci = bi.sub(&bi.inv()?).inv()?;
            let unit = group.unit(i);
            match family {
                Family::Small | Family::Generic => {
                    // (K_i - K_i^{-1}) · c_i
                    corr.push((unit.clone(), ci.clone()));
                    corr.push((group.neg(&unit), ci.neg()));
                }
                Family::Drin => {
                    // (1 - k_i^{-2}) · c_i
                    corr.push((group.zero(), ci.clone()));
                    let m2 = group.reduce(&unit.iter().map(|x| -2 * x).collect::<Vec<_>>());
                    corr.push((m2, ci.neg()));
                }
                _ => unreachable!(),
            }
        }
    }

    let engine = TriangularAlgebra {
        field,
        bichar: bichar.clone(),
        lower: Some(BlockData { alg: lower_alg.clone() }),
        kgroup: Some(group),
        upper: Some(BlockData { alg: upper_alg.clone() }),
        cross: Some(CrossRule { scalar, correction }),
        guard: PRODUCT_GUARD,
    };

    // generators: lower letters, upper letters, K_i, K_i^{-1}
    let one = Scalar::one(field);
    let zero = Scalar::zero(field);
    let unit_mono = Mono::unit(n);
    let mono_lower = |j: usize| Mono {
        lo: vec![j as u8],
        grp: group.zero(),
        hi: Vec::new(),
    };
    let mono_upper = |j: usize| Mono {
        lo: Vec::new(),
        grp: group.zero(),
        hi: vec![j as u8],
    };
    let mono_k = |i: usize, inv: bool| {
        let u = group.unit(i);
        Mono {
            lo: Vec::new(),
            grp: if inv { group.neg(&u) } else { u },
            hi: Vec::new(),
        }
    };

    let mut gens: Vec<Generator> = Vec::new();
    let mut lower_gens = Vec::new();
    let mut upper_gens = Vec::new();
    let mut group_gens = Vec::new();
    for j in 0..n {
        lower_gens.push(gens.len());
        let name = format!("{}{}", lo_pfx, j + 1);
        // Δ on the lower letter per family
        let coproduct = match family {
            Family::Small | Family::Generic => {
                // Δ(F) = F⊗1 + K^{-1}⊗F
                let mut d = Elem2::single(mono_lower(j), unit_mono.clone(), one.clone());
                d.add_term(mono_k(j, true), mono_lower(j), one.clone());
                d
            }
            Family::Drin => {
                // Δ(f) = f⊗1 + k^{-1}⊗f
                let mut d = Elem2::single(mono_lower(j), unit_mono.clone(), one.clone());
                d.add_term(mono_k(j, true), mono_lower(j), one.clone());
                d
            }
            Family::Tq | Family::Teps | Family::Bbh => {
                // Δ(x) = x⊗1 + K^{-1}⊗x
                let mut d = Elem2::single(mono_lower(j), unit_mono.clone(), one.clone());
                d.add_term(mono_k(j, true), mono_lower(j), one.clone());
                d
            }
        };
        gens.push(Generator {
            name,
            kind: GenKind::Lower(j as u8),
            mono: mono_lower(j),
            coproduct,
            counit: zero.clone(),
            antipode: Elem::zero(), // filled below via engine products
        });
    }
    for j in 0..n {
        upper_gens.push(gens.len());
        let name = format!("{}{}", up_pfx, j + 1);
        let coproduct = match family {
            Family::Small | Family::Generic => {
                // Δ(E) = E⊗K + 1⊗E
                let mut d = Elem2::single(mono_upper(j), mono_k(j, false), one.clone());
                d.add_term(unit_mono.clone(), mono_upper(j), one.clone());
                d
            }
            Family::Drin => {
                // Δ(e) = e⊗1 + k^{-1}⊗e
                let mut d = Elem2::single(mono_upper(j), unit_mono.clone(), one.clone());
                d.add_term(mono_k(j, true), mono_upper(j), one.clone());
                d
            }
            Family::Tq | Family::Teps | Family::Bbh => {
                // Δ(y) = y⊗1 + K⊗y
                let mut d = Elem2::single(mono_upper(j), unit_mono.clone(), one.clone());
                d.add_term(mono_k(j, false), mono_upper(j), one.clone());
                d
            }
        };
        gens.push(Generator {
            name,
            kind: GenKind::Upper(j as u8),
            mono: mono_upper(j),
            coproduct,
            counit: zero.clone(),
            antipode: Elem::zero(),
        });
    }
    for i in 0..n {
        let ki = gens.len();
        gens.push(Generator {
            name: format!("{}{}", kname, i + 1),
            kind: GenKind::Group { index: i, inverse: false },
            mono: mono_k(i, false),
            coproduct: Elem2::single(mono_k(i, false), mono_k(i, false), one.clone()),
            counit: one.clone(),
            antipode: Elem::single(mono_k(i, true), one.clone()),
        });
        let kinv = gens.len();
        gens.push(Generator {
            name: format!("{}{}^-1", kname, i + 1),
            kind: GenKind::Group { index: i, inverse: true },
            mono: mono_k(i, true),
            coproduct: Elem2::single(mono_k(i, true), mono_k(i, true), one.clone()),
            counit: one.clone(),
            antipode: Elem::single(mono_k(i, false), one.clone()),
        });
        group_gens.push((ki, kinv));
    }

    // antipodes of skew-primitive letters: Δ(g) = g⊗u + v⊗g with grouplike
    // u, v forces S(g) = -v^{-1} g u^{-1}; realized through engine products.
    for j in 0..n {
        let (u_inv, v_inv): (Mono, Mono) = match family {
            // F: u = 1, v = K^{-1}  =>  S(F) = -K F
            Family::Small | Family::Generic => (unit_mono.clone(), mono_k(j, false)),
            // f: u = 1, v = k^{-1}  =>  S(f) = -k f
            Family::Drin => (unit_mono.clone(), mono_k(j, false)),
            // x: u = 1, v = K^{-1}  =>  S(x) = -K x
            Family::Tq | Family::Teps | Family::Bbh => (unit_mono.clone(), mono_k(j, false)),
        };
        let s = engine
            .mul_monos(&v_inv, &mono_lower(j))
            .and_then(|e| {
                engine.mul_elems(
                    &e,
                    &Elem::single(u_inv, one.clone()),
                )
            })?
            .neg();
        gens[lower_gens[j]].antipode = s;
    }
    for j in 0..n {
        let (u_inv, v_inv): (Mono, Mono) = match family {
            // E: u = K, v = 1  =>  S(E) = -E K^{-1}
            Family::Small | Family::Generic => (mono_k(j, true), unit_mono.clone()),
            // e: u = 1, v = k^{-1}  =>  S(e) = -k e
            Family::Drin => (unit_mono.clone(), mono_k(j, false)),
            // y: u = 1, v = K  =>  S(y) = -K^{-1} y
            Family::Tq | Family::Teps | Family::Bbh => (unit_mono.clone(), mono_k(j, true)),
        };
        let s = engine
            .mul_monos(&v_inv, &mono_upper(j))
            .and_then(|e| engine.mul_elems(&e, &Elem::single(u_inv, one.clone())))?
            .neg();
        gens[upper_gens[j]].antipode = s;
    }

    let relations = build_relations(
        family, datum, &base, l, &gens, &lower_gens, &upper_gens, &group_gens,
    )?;

    let lname = match l {
        Some(l) => format!("l{}", l),
        None => "q".to_string(),
    };
    let name = format!("{}-{}-{}", family.name(), datum_label(datum), lname);
    Ok(StructureHopfAlgebra::new(
        name,
        family.name().to_string(),
        engine,
        gens,
        relations,
        lower_gens,
        upper_gens,
        group_gens,
        kname.to_string(),
    ))
}

fn datum_label(datum: &CartanDatum) -> String {
    format!("rank{}", datum.rank())
}

#[allow(clippy::too_many_arguments)]
fn build_relations(
    family: Family,
    datum: &CartanDatum,
    base: &Scalar,
    l: Option<u32>,
    gens: &[Generator],
    lower_gens: &[usize],
    upper_gens: &[usize],
    group_gens: &[(usize, usize)],
) -> Result<Vec<Relation>, BuildError> {
    let n = datum.rank();
    let field = base.field();
    let one = Scalar::one(field);
    let mut rels: Vec<Relation> = Vec::new();
    let unit_fe = FreeElem::word(Vec::new(), field);

    // group inverses and order
    for i in 0..n {
        let (k, kinv) = group_gens[i];
        rels.push(Relation {
            name: format!("{}·{} = 1", gens[k].name, gens[kinv].name),
            lhs: FreeElem::word(vec![k, kinv], field),
            rhs: unit_fe.clone(),
        });
        rels.push(Relation {
            name: format!("{}·{} = 1", gens[kinv].name, gens[k].name),
            lhs: FreeElem::word(vec![kinv, k], field),
            rhs: unit_fe.clone(),
        });
        if let Some(l) = l {
            rels.push(Relation {
                name: format!("{}^{} = 1", gens[k].name, l),
                lhs: FreeElem::word(vec![k; l as usize], field),
                rhs: unit_fe.clone(),
            });
        }
    }

    // K-commutation with every letter generator
    let letter_degree_sign = |gi: usize| -> i64 {
        match gens[gi].kind {
            GenKind::Lower(_) => -1,
            GenKind::Upper(_) => {
                if matches!(family, Family::Small | Family::Generic | Family::Drin) {
                    1
                } else {
                    -1
                }
            }
            GenKind::Group { .. } => 0,
        }
    };
    for i in 0..n {
        let (k, kinv) = group_gens[i];
        for &g in lower_gens.iter().chain(upper_gens.iter()) {
            let letter = match gens[g].kind {
                GenKind::Lower(j) | GenKind::Upper(j) => j as usize,
                GenKind::Group { .. } => unreachable!(),
            };
            let e = datum.dot(i, letter) * letter_degree_sign(g);
            let chi = base.pow(e)?;
            rels.push(Relation {
                name: format!("{}·{} = χ·{}·{}", gens[k].name, gens[g].name, gens[g].name, gens[k].name),
                lhs: FreeElem::word(vec![k, g], field),
                rhs: FreeElem::term(vec![g, k], chi.clone()),
            });
            rels.push(Relation {
                name: format!(
                    "{}·{} = χ^-1·{}·{}",
                    gens[kinv].name, gens[g].name, gens[g].name, gens[kinv].name
                ),
                lhs: FreeElem::word(vec![kinv, g], field),
                rhs: FreeElem::term(vec![g, kinv], chi.inv()?),
            });
        }
    }

    // cross relations
    for i in 0..n {
        for j in 0..n {
            let u = upper_gens[i];
            let lo = lower_gens[j];
            let s = match family {
                Family::Small | Family::Generic => one.clone(),
                Family::Drin => base.pow(datum.dot(i, j))?,
                Family::Tq | Family::Teps | Family::Bbh => base.pow(-datum.dot(i, j))?,
            };
            let mut rhs = FreeElem::term(vec![lo, u], s);
            if i == j && matches!(family, Family::Small | Family::Generic | Family::Drin) {
                let bi = base.pow(datum.half_diagonal(i))?;
                let ci = bi.sub(&bi.inv()?).inv()?;
                let (k, kinv) = group_gens[i];
                match family {
                    Family::Small | Family::Generic => {
                        rhs.push(vec![k], ci.clone());
                        rhs.push(vec![kinv], ci.neg());
                    }
                    Family::Drin => {
                        rhs.push(Vec::new(), ci.clone());
                        rhs.push(vec![kinv, kinv], ci.neg());
                    }
                    _ => unreachable!(),
                }
            }
            rels.push(Relation {
                name: format!("cross {}·{}", gens[u].name, gens[lo].name),
                lhs: FreeElem::word(vec![u, lo], field),
                rhs,
            });
        }
    }

    // quantum Serre relations in both letter blocks
    for (block, gen_ids) in [(0, lower_gens), (1, upper_gens)] {
        let _ = block;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = 1 - datum.cartan_integer(i, j);
                let qi = base.pow(datum.half_diagonal(i))?;
                let mut lhs = FreeElem::zero();
                for k in 0..=m {
                    let mut coef = crate::scalar::quantum_binomial(m, k, &qi)?;
                    if k % 2 == 1 {
                        coef = coef.neg();
                    }
                    let mut w = Vec::new();
                    for _ in 0..(m - k) {
                        w.push(gen_ids[i]);
                    }
                    w.push(gen_ids[j]);
                    for _ in 0..k {
                        w.push(gen_ids[i]);
                    }
                    lhs.push(w, coef);
                }
                rels.push(Relation {
                    name: format!("serre {}|{}", gens[gen_ids[i]].name, gens[gen_ids[j]].name),
                    lhs,
                    rhs: FreeElem::zero(),
                });
            }
        }
    }

    // nilpotency at roots of unity
    if let Some(l) = l {
        for &g in lower_gens.iter().chain(upper_gens.iter()) {
            rels.push(Relation {
                name: format!("{}^{} = 0", gens[g].name, l),
                lhs: FreeElem::word(vec![g; l as usize], field),
                rhs: FreeElem::zero(),
            });
        }
    }

    Ok(rels)
}

/// The small quantum group together with its braided-double presentation.
pub fn build_small_quantum_group(
    datum: &CartanDatum,
    l: u32,
) -> Result<(StructureHopfAlgebra, StructureHopfAlgebra), BuildError> {
    let small = build_family(Family::Small, datum, Some(l), None)?;
    let drin = build_family(Family::Drin, datum, Some(l), None)?;
    Ok((small, drin))
}

/// The generic quantum group over rational functions in q.
pub fn build_generic_quantum_group(
    datum: &CartanDatum,
    cutoff: Option<u32>,
) -> Result<StructureHopfAlgebra, BuildError> {
    build_family(Family::Generic, datum, None, cutoff)
}

/// Named families per the build interface.
pub fn build_named(
    family: Family,
    datum: &CartanDatum,
    l: Option<u32>,
    cutoff: Option<u32>,
) -> Result<StructureHopfAlgebra, BuildError> {
    build_family(family, datum, l, cutoff)
}

/// The group algebra of Z/l over the rationals, with group-like generator:
/// the textbook Hopf algebra used as a reference object in tests and the
/// expression evaluator.
pub fn build_group_algebra(l: u32) -> StructureHopfAlgebra {
    use crate::bichar::Bicharacter;
    let datum = CartanDatum::new(vec![vec![2]]).unwrap();
    let group = GradingGroup::finite(1, l);
    let field = Field::Rationals;
    let bichar = Arc::new(Bicharacter::new(datum, Scalar::one(field), group).unwrap());
    let engine = TriangularAlgebra {
        field,
        bichar,
        lower: None,
        kgroup: Some(group),
        upper: None,
        cross: None,
        guard: PRODUCT_GUARD,
    };
    let one = Scalar::one(field);
    let g = Mono {
        lo: Vec::new(),
        grp: vec![1],
        hi: Vec::new(),
    };
    let ginv = Mono {
        lo: Vec::new(),
        grp: group.reduce(&[-1]),
        hi: Vec::new(),
    };
    let gens = vec![
        Generator {
            name: "g".to_string(),
            kind: GenKind::Group { index: 0, inverse: false },
            mono: g.clone(),
            coproduct: Elem2::single(g.clone(), g.clone(), one.clone()),
            counit: one.clone(),
            antipode: Elem::single(ginv.clone(), one.clone()),
        },
        Generator {
            name: "g^-1".to_string(),
            kind: GenKind::Group { index: 0, inverse: true },
            mono: ginv.clone(),
            coproduct: Elem2::single(ginv.clone(), ginv.clone(), one.clone()),
            counit: one.clone(),
            antipode: Elem::single(g.clone(), one.clone()),
        },
    ];
    let unit_fe = FreeElem::word(Vec::new(), field);
    let relations = vec![
        Relation {
            name: "g·g^-1 = 1".to_string(),
            lhs: FreeElem::word(vec![0, 1], field),
            rhs: unit_fe.clone(),
        },
        Relation {
            name: format!("g^{} = 1", l),
            lhs: FreeElem::word(vec![0; l as usize], field),
            rhs: unit_fe,
        },
    ];
    StructureHopfAlgebra::new(
        format!("group-Z{}", l),
        "group".to_string(),
        engine,
        gens,
        relations,
        Vec::new(),
        Vec::new(),
        vec![(0, 1)],
        "g".to_string(),
    )
}
