//! Cones and brute-force universal-cone search in finite categories, the
//! product–equalizer construction of (co)limits in finite sets, and the
//! complete-implies-preorder check with its hom-power bijection.

use crate::cat::{
    opposite_functor, CatRef, FinCat, Functor, MorId, ObjId,
};
use crate::finset::{
    fs_equalizer, fs_coequalizer, fs_product_n, fs_sum_n, Diagram, FinFn, FinSetObj,
};

/// A cone over a diagram (a functor J → C): an apex with one leg per
/// shape object, legs[j]: apex → D(j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatCone {
    pub apex: ObjId,
    pub legs: Vec<MorId>,
}

/// A cocone: legs[j]: D(j) → apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatCocone {
    pub apex: ObjId,
    pub legs: Vec<MorId>,
}

/// The discrete category with one object per morphism of C.
pub fn arrow_index_category(c: &CatRef) -> CatRef {
    FinCat::discrete(c.n_morphisms())
}

/// The constant diagram at y over the given shape.
pub fn constant_diagram(shape: &CatRef, target: &CatRef, y: ObjId) -> Functor {
    Functor::new(
        shape.clone(),
        target.clone(),
        vec![y.0; shape.n_objects()],
        vec![target.identity(y).0; shape.n_morphisms()],
    )
    .expect("constant tables are in bounds")
}

/// All cones over the diagram, ordered by apex index then lexicographic
/// leg tuple.
pub fn enumerate_cones(d: &Functor) -> Vec<CatCone> {
    let shape = d.dom();
    let target = d.cod();
    let n_obj = shape.n_objects();
    let mut out = Vec::new();
    for apex in target.objects() {
        let candidates: Vec<Vec<MorId>> = shape
            .objects()
            .map(|j| target.hom(apex, d.apply_obj(j)))
            .collect();
        if candidates.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut choice = vec![0usize; n_obj];
        'tuples: loop {
            let legs: Vec<MorId> = (0..n_obj).map(|j| candidates[j][choice[j]]).collect();
            let commutes = shape.morphisms().all(|f| {
                target.compose(d.apply_mor(f), legs[shape.src(f).0])
                    == Some(legs[shape.dst(f).0])
            });
            if commutes {
                out.push(CatCone { apex, legs });
            }
            let mut i = n_obj;
            loop {
                if i == 0 {
                    break 'tuples;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < candidates[i].len() {
                    break;
                }
                choice[i] = 0;
            }
        }
    }
    out
}

/// Morphisms m: from → cone.apex factoring `other` through `cone`
/// (legs(cone) ∘ m = legs(other) componentwise).
fn factorizations(d: &Functor, cone: &CatCone, other: &CatCone) -> Vec<MorId> {
    let target = d.cod();
    target
        .hom(other.apex, cone.apex)
        .into_iter()
        .filter(|&m| {
            cone.legs
                .iter()
                .zip(&other.legs)
                .all(|(&lc, &lo)| target.compose(lc, m) == Some(lo))
        })
        .collect()
}

/// The universal cone, if one exists; ties among isomorphic universal
/// cones broken by least apex index, then least leg tuple. Absence is a
/// normal value.
pub fn limit_by_search(d: &Functor) -> Option<CatCone> {
    let cones = enumerate_cones(d);
    cones
        .iter()
        .find(|cone| cones.iter().all(|other| factorizations(d, cone, other).len() == 1))
        .cloned()
}

/// The universal cocone, computed as the limit in the opposite
/// categories.
pub fn colimit_by_search(d: &Functor) -> Option<CatCocone> {
    let op = opposite_functor(d);
    limit_by_search(&op).map(|c| CatCocone { apex: c.apex, legs: c.legs })
}

/// A cone in finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCone {
    pub apex: FinSetObj,
    pub legs: Vec<FinFn>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCocone {
    pub apex: FinSetObj,
    pub legs: Vec<FinFn>,
}

/// Limit of a set-valued diagram as the equalizer of the two canonical
/// maps Π_c D(c) ⇉ Π_f D(dst f). Elements are exactly the matching
/// families; legs are the restricted projections.
pub fn finset_limit(d: &Diagram) -> SetCone {
    let shape = &d.shape;
    let obj_prod = fs_product_n(&d.on_objects);
    let mor_factors: Vec<FinSetObj> = shape
        .morphisms()
        .map(|f| d.value(shape.dst(f)).clone())
        .collect();
    let mor_prod = fs_product_n(&mor_factors);
    let n = obj_prod.obj.size();
    let mut u_table = Vec::with_capacity(n);
    let mut v_table = Vec::with_capacity(n);
    for i in 0..n {
        let tuple = obj_prod.tuple_of(i);
        let u_tuple: Vec<usize> = shape.morphisms().map(|f| tuple[shape.dst(f).0]).collect();
        let v_tuple: Vec<usize> = shape
            .morphisms()
            .map(|f| d.arrow(f).apply(tuple[shape.src(f).0]))
            .collect();
        u_table.push(mor_prod.tuple_index(&u_tuple));
        v_table.push(mor_prod.tuple_index(&v_tuple));
    }
    let u = FinFn::new(obj_prod.obj.clone(), mor_prod.obj.clone(), u_table).unwrap();
    let v = FinFn::new(obj_prod.obj.clone(), mor_prod.obj.clone(), v_table).unwrap();
    let eq = fs_equalizer(&u, &v).expect("parallel by construction");
    let legs = obj_prod
        .projections
        .iter()
        .map(|p| FinFn::compose(p, &eq.include).unwrap())
        .collect();
    SetCone { apex: eq.obj, legs }
}

/// Colimit as the coequalizer of Σ_f D(src f) ⇉ Σ_c D(c); classes named
/// by their least member.
pub fn finset_colimit(d: &Diagram) -> SetCocone {
    let shape = &d.shape;
    let obj_sum = fs_sum_n(&d.on_objects);
    let mor_summands: Vec<FinSetObj> = shape
        .morphisms()
        .map(|f| d.value(shape.src(f)).clone())
        .collect();
    let mor_sum = fs_sum_n(&mor_summands);
    let total = mor_sum.obj.size();
    let mut u_table = Vec::with_capacity(total);
    let mut v_table = Vec::with_capacity(total);
    for (fi, f) in shape.morphisms().enumerate() {
        let s = shape.src(f).0;
        let dcount = d.value(ObjId(s)).size();
        for x in 0..dcount {
            u_table.push(obj_sum.inject_index(s, x));
            v_table.push(obj_sum.inject_index(shape.dst(f).0, d.arrow(MorId(fi)).apply(x)));
        }
    }
    let u = FinFn::new(mor_sum.obj.clone(), obj_sum.obj.clone(), u_table).unwrap();
    let v = FinFn::new(mor_sum.obj.clone(), obj_sum.obj.clone(), v_table).unwrap();
    let coeq = fs_coequalizer(&u, &v).expect("parallel by construction");
    let legs = obj_sum
        .injections
        .iter()
        .map(|inj| FinFn::compose(&coeq.quotient, inj).unwrap())
        .collect();
    SetCocone { apex: coeq.obj, legs }
}

/// Brute-force matching-family oracle: all tuples (x_c) with
/// D(f)(x_{src f}) = x_{dst f}, in the same tuple order as finset_limit.
pub fn matching_families(d: &Diagram) -> Vec<Vec<usize>> {
    let shape = &d.shape;
    let sizes: Vec<usize> = d.on_objects.iter().map(|o| o.size()).collect();
    let n = sizes.len();
    if sizes.iter().any(|&s| s == 0) && n > 0 {
        // a zero factor can still admit families if no object forces it;
        // it cannot: every tuple needs an entry there
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut tuple = vec![0usize; n];
    loop {
        let ok = shape.morphisms().all(|f| {
            d.arrow(f).apply(tuple[shape.src(f).0]) == tuple[shape.dst(f).0]
        });
        if ok {
            out.push(tuple.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < sizes[i] {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// Report of the complete-implies-preorder check on a finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletePreorderReport {
    /// Has a terminal object, all binary products and all equalizers
    /// (the generating family for finite limits).
    pub complete: bool,
    pub missing_limit: Option<String>,
    /// |Hom(x,y)| ≤ 1 everywhere; asserted when complete.
    pub preorder: Option<bool>,
    /// Number of (x, y) instances where |Hom(x, y')| = |Hom(x,y)|^|Mor C|
    /// was verified, with y' the |Mor C|-indexed power of y.
    pub hom_power_instances: usize,
    pub hom_power_verified: bool,
}

/// Whether the category has the generating family of finite limits:
/// a terminal object, binary products of every ordered pair, and
/// equalizers of every parallel pair. A finite category has limits of
/// every finite diagram exactly when it has these.
pub fn completeness_proxy(c: &CatRef) -> Result<(), String> {
    if c.n_objects() == 0 {
        return Err("empty category has no terminal object".into());
    }
    let empty_diag = Functor::new(FinCat::empty(), c.clone(), vec![], vec![]).unwrap();
    if limit_by_search(&empty_diag).is_none() {
        return Err("no terminal object".into());
    }
    let d2 = FinCat::discrete(2);
    for a in c.objects() {
        for b in c.objects() {
            let diag = Functor::new(
                d2.clone(),
                c.clone(),
                vec![a.0, b.0],
                vec![c.identity(a).0, c.identity(b).0],
            )
            .unwrap();
            if limit_by_search(&diag).is_none() {
                return Err(format!("no product of objects {} and {}", a.0, b.0));
            }
        }
    }
    let pp = FinCat::parallel_pair();
    for f in c.morphisms() {
        for g in c.morphisms() {
            if f.0 < g.0 && c.src(f) == c.src(g) && c.dst(f) == c.dst(g) {
                let diag = Functor::new(
                    pp.clone(),
                    c.clone(),
                    vec![c.src(f).0, c.dst(f).0],
                    vec![
                        c.identity(c.src(f)).0,
                        c.identity(c.dst(f)).0,
                        f.0,
                        g.0,
                    ],
                )
                .unwrap();
                if limit_by_search(&diag).is_none() {
                    return Err(format!("no equalizer of morphisms {} and {}", f.0, g.0));
                }
            }
        }
    }
    Ok(())
}

pub fn is_preorder(c: &CatRef) -> bool {
    c.objects()
        .all(|a| c.objects().all(|b| c.hom(a, b).len() <= 1))
}

/// Runs the completeness proxy; when complete, asserts the preorder
/// property, and verifies the hom-power cardinality identity
/// |Hom(x, y')| = |Hom(x, y)|^|Mor C| whenever the |Mor C|-indexed
/// discrete power y' of y exists.
pub fn complete_preorder_check(c: &CatRef) -> CompletePreorderReport {
    let proxy = completeness_proxy(c);
    let complete = proxy.is_ok();
    let preorder = if complete { Some(is_preorder(c)) } else { None };
    let m = c.n_morphisms();
    let shape = FinCat::discrete(m);
    let mut instances = 0;
    let mut verified = true;
    for y in c.objects() {
        let diag = constant_diagram(&shape, c, y);
        if let Some(power) = limit_by_search(&diag) {
            for x in c.objects() {
                let lhs = c.hom(x, power.apex).len();
                let rhs = c.hom(x, y).len().pow(m as u32);
                instances += 1;
                if lhs != rhs {
                    verified = false;
                }
            }
        }
    }
    CompletePreorderReport {
        complete,
        missing_limit: proxy.err(),
        preorder,
        hom_power_instances: instances,
        hom_power_verified: verified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::all_fns;
    use std::sync::Arc;

    #[test]
    fn cones_over_empty_and_singleton_shapes() {
        let c = FinCat::chain(3);
        // empty shape: one cone per object
        let empty_diag = Functor::new(FinCat::empty(), c.clone(), vec![], vec![]).unwrap();
        assert_eq!(enumerate_cones(&empty_diag).len(), 3);
        // one-object shape: cones are arrows into the value
        let one = Functor::new(FinCat::unit(), c.clone(), vec![2], vec![c.identity(ObjId(2)).0])
            .unwrap();
        let cones = enumerate_cones(&one);
        let arrows: usize = c.objects().map(|a| c.hom(a, ObjId(2)).len()).sum();
        assert_eq!(cones.len(), arrows);
    }

    #[test]
    fn cone_count_matches_double_loop_oracle() {
        // 2-object discrete diagram {0, 1} in the 3-chain
        let c = FinCat::chain(3);
        let d2 = FinCat::discrete(2);
        let diag = Functor::new(
            d2,
            c.clone(),
            vec![0, 1],
            vec![c.identity(ObjId(0)).0, c.identity(ObjId(1)).0],
        )
        .unwrap();
        let cones = enumerate_cones(&diag);
        let mut oracle = 0;
        for a in c.objects() {
            oracle += c.hom(a, ObjId(0)).len() * c.hom(a, ObjId(1)).len();
        }
        assert_eq!(cones.len(), oracle);
    }

    #[test]
    fn terminal_and_meet_in_chain() {
        let c = FinCat::chain(3);
        let empty_diag = Functor::new(FinCat::empty(), c.clone(), vec![], vec![]).unwrap();
        let term = limit_by_search(&empty_diag).unwrap();
        assert_eq!(term.apex, ObjId(2)); // the top element
        let d2 = FinCat::discrete(2);
        let diag = Functor::new(
            d2,
            c.clone(),
            vec![0, 1],
            vec![c.identity(ObjId(0)).0, c.identity(ObjId(1)).0],
        )
        .unwrap();
        let meet = limit_by_search(&diag).unwrap();
        assert_eq!(meet.apex, ObjId(0));
    }

    #[test]
    fn discrete_pair_in_discrete_category_has_no_limit() {
        let c = FinCat::discrete(2);
        let d2 = FinCat::discrete(2);
        let diag = Functor::new(
            d2,
            c.clone(),
            vec![0, 1],
            vec![c.identity(ObjId(0)).0, c.identity(ObjId(1)).0],
        )
        .unwrap();
        assert_eq!(limit_by_search(&diag), None);
    }

    fn sets(labels: &[&[&str]]) -> Vec<FinSetObj> {
        labels
            .iter()
            .map(|l| FinSetObj::new(l.iter().map(|s| s.to_string()).collect()).unwrap())
            .collect()
    }

    #[test]
    fn finset_limit_discrete_and_empty() {
        let shape = FinCat::discrete(2);
        let objs = sets(&[&["a", "b"], &["x", "y", "z"]]);
        let d = Diagram::new(
            shape,
            objs.clone(),
            vec![FinFn::identity(&objs[0]), FinFn::identity(&objs[1])],
        )
        .unwrap();
        let lim = finset_limit(&d);
        assert_eq!(lim.apex.size(), 6);
        let empty = Diagram::new(FinCat::empty(), vec![], vec![]).unwrap();
        assert_eq!(finset_limit(&empty).apex.size(), 1);
        assert_eq!(finset_colimit(&empty).apex.size(), 0);
    }

    #[test]
    fn cospan_pullback_matches_matching_families() {
        // cospan shape: 0 → 2 ← 1
        let leq = vec![
            vec![true, false, true],
            vec![false, true, true],
            vec![false, false, true],
        ];
        let shape = FinCat::poset(&leq).unwrap();
        let two = FinSetObj::new(vec!["0".into(), "1".into()]).unwrap();
        let one = FinSetObj::new(vec!["0".into()]).unwrap();
        let f = FinFn::new(two.clone(), one.clone(), vec![0, 0]).unwrap();
        let mut on_morphisms = Vec::new();
        for m in shape.morphisms() {
            let s = shape.src(m).0;
            let d = shape.dst(m).0;
            let val = |o: usize| if o == 2 { one.clone() } else { two.clone() };
            if s == d {
                on_morphisms.push(FinFn::identity(&val(s)));
            } else {
                on_morphisms.push(f.clone());
            }
        }
        let d = Diagram::new(shape, vec![two.clone(), two.clone(), one], on_morphisms).unwrap();
        let lim = finset_limit(&d);
        assert_eq!(lim.apex.size(), 4);
        let oracle = matching_families(&d);
        assert_eq!(lim.apex.size(), oracle.len());
        // the bijection commutes with legs
        for (i, fam) in oracle.iter().enumerate() {
            for (j, leg) in lim.legs.iter().enumerate() {
                assert_eq!(leg.apply(i), fam[j]);
            }
        }
    }

    #[test]
    fn pushout_of_surjections_matches_union_find() {
        // span shape: 0 ← 2 → 1 (colimit = pushout)
        let leq = vec![
            vec![true, false, false],
            vec![false, true, false],
            vec![true, true, true],
        ];
        let shape = FinCat::poset(&leq).unwrap();
        let two = FinSetObj::new(vec!["a".into(), "b".into()]).unwrap();
        let one0 = FinSetObj::new(vec!["x".into()]).unwrap();
        let one1 = FinSetObj::new(vec!["y".into()]).unwrap();
        let mut on_morphisms = Vec::new();
        for m in shape.morphisms() {
            let (s, d) = (shape.src(m).0, shape.dst(m).0);
            on_morphisms.push(match (s, d) {
                (0, 0) => FinFn::identity(&one0),
                (1, 1) => FinFn::identity(&one1),
                (2, 2) => FinFn::identity(&two),
                (2, 0) => FinFn::new(two.clone(), one0.clone(), vec![0, 0]).unwrap(),
                (2, 1) => FinFn::new(two.clone(), one1.clone(), vec![0, 0]).unwrap(),
                _ => unreachable!(),
            });
        }
        let d = Diagram::new(shape, vec![one0, one1, two], on_morphisms).unwrap();
        let colim = finset_colimit(&d);
        // both points of the span collapse into one class
        assert_eq!(colim.apex.size(), 1);
        for leg in &colim.legs {
            assert!(leg.is_surjective() || leg.dom().size() == 0);
        }
    }

    #[test]
    fn chain_is_complete_preorder() {
        let c = FinCat::chain(3);
        let r = complete_preorder_check(&c);
        assert!(r.complete);
        assert_eq!(r.preorder, Some(true));
        assert!(r.hom_power_verified);
        assert!(r.hom_power_instances > 0);
    }

    #[test]
    fn walking_arrow_hom_power() {
        let c = FinCat::walking_arrow();
        let r = complete_preorder_check(&c);
        assert!(r.complete);
        assert_eq!(r.preorder, Some(true));
        // |Hom(x, y')| = |Hom(x, y)|^3 instances all verified
        assert!(r.hom_power_verified);
        assert_eq!(r.hom_power_instances, 4);
    }

    #[test]
    fn parallel_pair_without_equalizer_is_incomplete() {
        let c = FinCat::parallel_pair();
        let r = complete_preorder_check(&c);
        assert!(!r.complete);
        assert_eq!(r.preorder, None);
    }

    #[test]
    fn colimit_duality_on_chain() {
        let c = FinCat::chain(3);
        let d2 = FinCat::discrete(2);
        let diag = Functor::new(
            d2,
            c.clone(),
            vec![0, 1],
            vec![c.identity(ObjId(0)).0, c.identity(ObjId(1)).0],
        )
        .unwrap();
        let colim = colimit_by_search(&diag).unwrap();
        assert_eq!(colim.apex, ObjId(1)); // join in the chain
        let op = opposite_functor(&diag);
        let lim_op = limit_by_search(&op).unwrap();
        assert_eq!(colim.apex, lim_op.apex);
        assert_eq!(colim.legs, lim_op.legs);
    }

    #[test]
    fn universal_cones_connected_by_unique_iso() {
        // in the 2-chain, products are unique on the nose here, but check
        // the mediating-iso machinery over all universal cones anyway
        let c = FinCat::chain(2);
        let d2 = FinCat::discrete(2);
        let diag = Functor::new(
            d2,
            c.clone(),
            vec![0, 1],
            vec![c.identity(ObjId(0)).0, c.identity(ObjId(1)).0],
        )
        .unwrap();
        let cones = enumerate_cones(&diag);
        let universal: Vec<&CatCone> = cones
            .iter()
            .filter(|cone| cones.iter().all(|o| factorizations(&diag, cone, o).len() == 1))
            .collect();
        assert!(!universal.is_empty());
        for a in &universal {
            for b in &universal {
                let to = factorizations(&diag, a, b);
                let back = factorizations(&diag, b, a);
                assert_eq!(to.len(), 1);
                assert_eq!(back.len(), 1);
                assert_eq!(c.compose(to[0], back[0]), Some(c.identity(a.apex)));
                assert_eq!(c.compose(back[0], to[0]), Some(c.identity(b.apex)));
            }
        }
    }

    #[test]
    fn finset_limit_apex_is_singleton_iff_all_functions_agree() {
        // sanity against all_fns enumeration on a parallel-pair diagram
        let shape = FinCat::parallel_pair();
        let a = FinSetObj::canonical(2);
        let b = FinSetObj::canonical(2);
        for f in all_fns(&a, &b) {
            for g in all_fns(&a, &b) {
                let d = Diagram::new(
                    shape.clone(),
                    vec![a.clone(), b.clone()],
                    vec![FinFn::identity(&a), FinFn::identity(&b), f.clone(), g.clone()],
                )
                .unwrap();
                let lim = finset_limit(&d);
                let agree = (0..a.size()).filter(|&i| f.apply(i) == g.apply(i)).count();
                assert_eq!(lim.apex.size(), agree);
            }
        }
        let _ = Arc::strong_count(&shape);
    }
}
