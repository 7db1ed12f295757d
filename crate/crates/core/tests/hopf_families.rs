//! Structure constants and axiom suites of the algebra families.

use braidhopf::cartan::CartanDatum;
use braidhopf::hopf::{
    build_family, build_group_algebra, build_small_quantum_group, check_hopf_axioms,
    check_morphism, AxiomCheckConfig, Elem, Family, HopfMorphismSpec, Mono,
};
use braidhopf::report::all_pass;
use braidhopf::scalar::{primitive_root, Field, Scalar};

fn a1() -> CartanDatum {
    CartanDatum::named("A1").unwrap()
}

#[test]
fn small_a1_l3_dimension_and_relations() {
    let (small, drin) = build_small_quantum_group(&a1(), 3).unwrap();
    assert_eq!(small.dim(), Some(27));
    assert_eq!(drin.dim(), Some(27));

    let eps = primitive_root(3);
    let e = small.gen_elem(small.gen_index("E1").unwrap());
    let f = small.gen_elem(small.gen_index("F1").unwrap());
    let k = small.gen_elem(small.gen_index("K1").unwrap());
    let kinv = small.gen_elem(small.gen_index("K1^-1").unwrap());

    // k³ = 1
    let k3 = small.product(&small.product(&k, &k).unwrap(), &k).unwrap();
    assert_eq!(k3, small.unit_elem());

    // E·F - F·E = (K - K^{-1})/(ε - ε^{-1})
    let ef = small.product(&e, &f).unwrap();
    let fe = small.product(&f, &e).unwrap();
    let c = eps.sub(&eps.inv().unwrap()).inv().unwrap();
    let expect = k.sub(&kinv).scale(&c);
    assert_eq!(ef.sub(&fe), expect);

    // E³ = F³ = 0
    let e3 = small.product(&small.product(&e, &e).unwrap(), &e).unwrap();
    assert!(e3.is_zero());
    let f3 = small.product(&small.product(&f, &f).unwrap(), &f).unwrap();
    assert!(f3.is_zero());

    // Δ(K) = K ⊗ K
    let dk = &small.gens[small.gen_index("K1").unwrap()].coproduct;
    assert_eq!(dk.terms.len(), 1);
}

#[test]
fn drin_a1_l3_cross_relation() {
    let (_, drin) = build_small_quantum_group(&a1(), 3).unwrap();
    let eps = primitive_root(3);
    let e = drin.gen_elem(drin.gen_index("e1").unwrap());
    let f = drin.gen_elem(drin.gen_index("f1").unwrap());
    let kinv = drin.gen_elem(drin.gen_index("k1^-1").unwrap());

    // e·f - ε²·f·e = (1 - k^{-2})/(ε - ε^{-1})
    let lhs = drin
        .product(&e, &f)
        .unwrap()
        .sub(&drin.product(&f, &e).unwrap().scale(&eps.pow(2).unwrap()));
    let c = eps.sub(&eps.inv().unwrap()).inv().unwrap();
    let k2inv = drin.product(&kinv, &kinv).unwrap();
    let expect = drin.unit_elem().sub(&k2inv).scale(&c);
    assert_eq!(lhs, expect);
}

#[test]
fn generic_a1_structure_constants() {
    let uq = build_family(Family::Generic, &a1(), None, Some(6)).unwrap();
    assert_eq!(uq.dim(), None); // infinite K-lattice
    let q = Scalar::q();
    let e = uq.gen_elem(uq.gen_index("E1").unwrap());
    let f = uq.gen_elem(uq.gen_index("F1").unwrap());
    let k = uq.gen_elem(uq.gen_index("K1").unwrap());
    let kinv = uq.gen_elem(uq.gen_index("K1^-1").unwrap());

    // K E = q² E K
    let ke = uq.product(&k, &e).unwrap();
    let ek = uq.product(&e, &k).unwrap();
    assert_eq!(ke, ek.scale(&q.pow(2).unwrap()));

    // E F - F E = (K - K^{-1})/(q - q^{-1})
    let comm = uq
        .product(&e, &f)
        .unwrap()
        .sub(&uq.product(&f, &e).unwrap());
    let c = q.sub(&q.inv().unwrap()).inv().unwrap();
    assert_eq!(comm, k.sub(&kinv).scale(&c));

    // associativity instance: (E·F)·F = E·(F·F)
    let lhs = uq.product(&uq.product(&e, &f).unwrap(), &f).unwrap();
    let rhs = uq.product(&e, &uq.product(&f, &f).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn teps_a1_l3() {
    let t = build_family(Family::Teps, &a1(), Some(3), None).unwrap();
    assert_eq!(t.dim(), Some(27));
    let eps = primitive_root(3);
    let x = t.gen_elem(t.gen_index("x1").unwrap());
    let y = t.gen_elem(t.gen_index("y1").unwrap());

    // x y = ε² y x
    let xy = t.product(&x, &y).unwrap();
    let yx = t.product(&y, &x).unwrap();
    assert_eq!(xy, yx.scale(&eps.pow(2).unwrap()));

    // x³ = y³ = 0
    let x3 = t.product(&t.product(&x, &x).unwrap(), &x).unwrap();
    assert!(x3.is_zero());
    let y3 = t.product(&t.product(&y, &y).unwrap(), &y).unwrap();
    assert!(y3.is_zero());
}

#[test]
fn tq_coproduct_of_y() {
    let t = build_family(Family::Tq, &a1(), None, Some(4)).unwrap();
    // Δ(y) = y⊗1 + K⊗y
    let d = &t.gens[t.gen_index("y1").unwrap()].coproduct;
    assert_eq!(d.terms.len(), 2);
    let k = Mono {
        lo: vec![],
        grp: vec![1],
        hi: vec![],
    };
    let y = Mono {
        lo: vec![],
        grp: vec![0],
        hi: vec![0],
    };
    assert!(d.terms.contains_key(&(k, y)));
}

#[test]
fn bbh_a1_l3_cross_relation_matches_rmatrix_sum() {
    let bbh = build_family(Family::Bbh, &a1(), Some(3), None).unwrap();
    assert_eq!(bbh.dim(), Some(27));
    let b = bbh.gen_elem(bbh.gen_index("b1").unwrap());
    let d = bbh.gen_elem(bbh.gen_index("d1").unwrap());

    // Oracle: the normalized character sum (1/l)·Σ_{a,b∈Z_l} ε^{-2ab}·ε^{-2b}·ε^{-2a}
    // realizes (R⁽²⁾▷d)(R⁽¹⁾▷b) on the rank-1 grading |b| = |d| = -g, so
    // b·d = oracle · d·b must hold in the structure constants.
    let eps = primitive_root(3);
    let field = eps.field();
    let mut oracle = Scalar::zero(field);
    for a in 0..3i64 {
        for bb in 0..3i64 {
            let term = eps.pow(-2 * a * bb).unwrap().mul(
                &eps.pow(-2 * bb)
                    .unwrap()
                    .mul(&eps.pow(-2 * a).unwrap()),
            );
            oracle = oracle.add(&term);
        }
    }
    oracle = oracle
        .mul(&Scalar::rational(1, 3, field));
    assert_eq!(oracle, eps.pow(2).unwrap(), "normalization 1/l^|I| is forced");

    let bd = bbh.product(&b, &d).unwrap();
    let db = bbh.product(&d, &b).unwrap();
    assert_eq!(bd, db.scale(&oracle));
}

#[test]
fn axioms_small_a1_l3_full_pass() {
    let (small, _) = build_small_quantum_group(&a1(), 3).unwrap();
    let results = check_hopf_axioms(&small, &AxiomCheckConfig::default()).unwrap();
    assert!(all_pass(&results), "failures: {:?}", results);
}

#[test]
fn axioms_group_algebra_z3() {
    let g = build_group_algebra(3);
    assert_eq!(g.dim(), Some(3));
    let results = check_hopf_axioms(&g, &AxiomCheckConfig::default()).unwrap();
    assert!(all_pass(&results), "failures: {:?}", results);
}

#[test]
fn axioms_mutated_coproduct_fails_with_witness() {
    let (mut small, _) = build_small_quantum_group(&a1(), 3).unwrap();
    // drop the K-leg: Δ(E) := E⊗1 + 1⊗E
    let ei = small.gen_index("E1").unwrap();
    let e = Mono {
        lo: vec![],
        grp: vec![0],
        hi: vec![0],
    };
    let unit = Mono::unit(1);
    let one = Scalar::one(small.field());
    let mut bad = braidhopf::hopf::Elem2::single(e.clone(), unit.clone(), one.clone());
    bad.add_term(unit, e, one);
    small.gens[ei].coproduct = bad;
    let results = check_hopf_axioms(&small, &AxiomCheckConfig::default()).unwrap();
    let failed: Vec<_> = results.iter().filter(|r| !r.pass).collect();
    assert!(!failed.is_empty());
    let rel_fail = results
        .iter()
        .find(|r| r.check == "coproduct-preserves-relations")
        .unwrap();
    assert!(!rel_fail.pass);
    assert!(rel_fail.witness.is_some());
}

#[test]
fn morphism_small_iso_a1_l3() {
    let (small, drin) = build_small_quantum_group(&a1(), 3).unwrap();
    let images = double_iso_images(&drin, &small);
    let spec = HopfMorphismSpec {
        name: "double-to-small".to_string(),
        source: &drin,
        target: &small,
        images,
    };
    let report = check_morphism(&spec).unwrap();
    assert!(report.all_pass(), "{:?}", report);
}

#[test]
fn morphism_mutation_detected() {
    let (small, drin) = build_small_quantum_group(&a1(), 3).unwrap();
    let mut images = double_iso_images(&drin, &small);
    // wrong image: φ(e1) = E1 without the K^{-1} factor
    let src_e = drin.gen_index("e1").unwrap();
    images[src_e] = small.gen_elem(small.gen_index("E1").unwrap());
    let spec = HopfMorphismSpec {
        name: "broken".to_string(),
        source: &drin,
        target: &small,
        images,
    };
    let report = check_morphism(&spec).unwrap();
    assert!(!report.is_coalgebra_map.pass);
    assert!(report.is_coalgebra_map.witness.is_some());
}

#[test]
fn identity_morphism_passes() {
    let (small, _) = build_small_quantum_group(&a1(), 3).unwrap();
    let images: Vec<Elem> = (0..small.gens.len()).map(|i| small.gen_elem(i)).collect();
    let spec = HopfMorphismSpec {
        name: "identity".to_string(),
        source: &small,
        target: &small,
        images,
    };
    let report = check_morphism(&spec).unwrap();
    assert!(report.all_pass());
}

/// φ(k_i) = K_i, φ(e_i) = K_i^{-1}·E_i, φ(f_i) = F_i.
fn double_iso_images(
    drin: &braidhopf::hopf::StructureHopfAlgebra,
    small: &braidhopf::hopf::StructureHopfAlgebra,
) -> Vec<Elem> {
    let n = drin.lower_gens.len();
    let mut images: Vec<Elem> = vec![Elem::zero(); drin.gens.len()];
    for i in 0..n {
        let f_src = drin.lower_gens[i];
        images[f_src] = small.gen_elem(small.gen_index(&format!("F{}", i + 1)).unwrap());
        let e_src = drin.upper_gens[i];
        let kinv = small.gen_elem(small.gen_index(&format!("K{}^-1", i + 1)).unwrap());
        let e = small.gen_elem(small.gen_index(&format!("E{}", i + 1)).unwrap());
        images[e_src] = small.product(&kinv, &e).unwrap();
        let (k_src, kinv_src) = drin.group_gens[i];
        images[k_src] = small.gen_elem(small.gen_index(&format!("K{}", i + 1)).unwrap());
        images[kinv_src] = kinv;
    }
    images
}

#[test]
fn field_descriptor_consistency() {
    let (small, _) = build_small_quantum_group(&a1(), 3).unwrap();
    assert_eq!(small.field(), Field::Cyclotomic { l: 3 });
    let uq = build_family(Family::Generic, &a1(), None, Some(4)).unwrap();
    assert_eq!(uq.field(), Field::RationalFunctions);
}

#[test]
fn even_or_small_l_rejected() {
    assert!(build_small_quantum_group(&a1(), 4).is_err());
    assert!(build_small_quantum_group(&a1(), 1).is_err());
    let g2 = CartanDatum::named("G2").unwrap();
    assert!(build_family(Family::Small, &g2, Some(9), None).is_err());
}
