//! Categories of T-algebras and T-coalgebras for an endofunctor T of a
//! finite category. No equational laws are imposed beyond typing: an
//! algebra is a carrier c with a structure arrow T c → c, and algebra
//! morphisms are carrier arrows making the usual square commute.

use crate::cat::{
    opposite_category, opposite_functor, CatError, CatRef, FinCat, Functor, MorId, ObjId,
};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TAlgebra {
    pub carrier: ObjId,
    pub structure: MorId,
}

/// The category of algebras for an endofunctor, with its forgetful
/// functor to the base. `arrows[i]` is the carrier arrow of algebra-
/// category morphism i.
#[derive(Debug, Clone)]
pub struct AlgebraCat {
    pub cat: CatRef,
    pub algebras: Vec<TAlgebra>,
    pub arrows: Vec<MorId>,
    pub forgetful: Functor,
}

/// Builds the category of T-algebras. Objects are all (carrier,
/// structure) pairs in lexicographic order; morphisms are triples
/// (source algebra, target algebra, carrier arrow) in lexicographic
/// order, kept when structure' ∘ T(h) = h ∘ structure.
pub fn algebra_category(t: &Functor) -> Result<AlgebraCat, CatError> {
    if t.dom() != t.cod() {
        return Err(CatError::BadIndex("not an endofunctor".into()));
    }
    let c = t.dom().clone();
    let mut algebras = Vec::new();
    for carrier in c.objects() {
        for structure in c.hom(t.apply_obj(carrier), carrier) {
            algebras.push(TAlgebra { carrier, structure });
        }
    }
    // morphisms: (i, j, h) with the algebra square commuting
    let mut triples: Vec<(usize, usize, MorId)> = Vec::new();
    for (i, a) in algebras.iter().enumerate() {
        for (j, b) in algebras.iter().enumerate() {
            for h in c.hom(a.carrier, b.carrier) {
                let lhs = c.compose(b.structure, t.apply_mor(h));
                let rhs = c.compose(h, a.structure);
                if lhs.is_some() && lhs == rhs {
                    triples.push((i, j, h));
                }
            }
        }
    }
    let find = |i: usize, j: usize, h: MorId| {
        triples.iter().position(|&x| x == (i, j, h)).unwrap()
    };
    let src: Vec<usize> = triples.iter().map(|&(i, _, _)| i).collect();
    let dst: Vec<usize> = triples.iter().map(|&(_, j, _)| j).collect();
    let identity: Vec<usize> = algebras
        .iter()
        .enumerate()
        .map(|(i, a)| find(i, i, c.identity(a.carrier)))
        .collect();
    let comp: Vec<Vec<Option<usize>>> = triples
        .iter()
        .map(|&(j2, k, g)| {
            triples
                .iter()
                .map(|&(i, j, h)| {
                    if j == j2 {
                        Some(find(i, k, c.compose(g, h).expect("typed")))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    let cat: CatRef = Arc::new(FinCat::new(algebras.len(), src, dst, identity, comp)?);
    let arrows: Vec<MorId> = triples.iter().map(|&(_, _, h)| h).collect();
    let forgetful = Functor::new(
        cat.clone(),
        c,
        algebras.iter().map(|a| a.carrier.0).collect(),
        arrows.iter().map(|h| h.0).collect(),
    )?;
    Ok(AlgebraCat { cat, algebras, arrows, forgetful })
}

/// The category of T-coalgebras, computed as the opposite of the
/// algebra category of T^op. A coalgebra's structure arrow runs
/// carrier → T carrier.
pub fn coalgebra_category(t: &Functor) -> Result<AlgebraCat, CatError> {
    let alg = algebra_category(&opposite_functor(t))?;
    Ok(AlgebraCat {
        cat: opposite_category(&alg.cat),
        algebras: alg.algebras,
        arrows: alg.arrows,
        forgetful: opposite_functor(&alg.forgetful),
    })
}

fn is_iso(c: &CatRef, m: MorId) -> bool {
    c.hom(c.dst(m), c.src(m)).into_iter().any(|inv| {
        c.compose(inv, m) == Some(c.identity(c.src(m)))
            && c.compose(m, inv) == Some(c.identity(c.dst(m)))
    })
}

/// Finds the initial algebra, if any, and checks Lambek's property:
/// its structure arrow must be an isomorphism in the base category.
pub fn lambek_check(alg: &AlgebraCat) -> Result<Option<TAlgebra>, String> {
    let base = alg.forgetful.cod();
    for (i, a) in alg.algebras.iter().enumerate() {
        let initial = alg
            .cat
            .objects()
            .all(|j| alg.cat.hom(ObjId(i), j).len() == 1);
        if initial {
            if !is_iso(base, a.structure) {
                return Err(format!(
                    "initial algebra at carrier {} has non-iso structure arrow {}",
                    a.carrier.0, a.structure.0
                ));
            }
            return Ok(Some(*a));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinCat;

    fn corpus_endofunctors() -> Vec<Functor> {
        let mut out = Vec::new();
        for c in [
            FinCat::unit(),
            FinCat::walking_arrow(),
            FinCat::chain(3),
            FinCat::monoid(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], 0).unwrap(),
        ] {
            out.extend(crate::cat::enumerate_functors(&c, &c));
        }
        out
    }

    #[test]
    fn identity_on_walking_arrow_has_2_algebras_3_morphisms() {
        let c = FinCat::walking_arrow();
        let alg = algebra_category(&Functor::identity(&c)).unwrap();
        assert_eq!(alg.cat.n_objects(), 2);
        assert_eq!(alg.cat.n_morphisms(), 3);
        for a in &alg.algebras {
            assert!(c.is_identity(a.structure));
        }
        assert_eq!(alg.cat.validate(), Ok(()));
        assert_eq!(alg.forgetful.validate(), Ok(()));
    }

    #[test]
    fn object_count_matches_hom_sum() {
        for t in corpus_endofunctors() {
            let c = t.dom().clone();
            let alg = algebra_category(&t).unwrap();
            let expect: usize = c
                .objects()
                .map(|o| c.hom(t.apply_obj(o), o).len())
                .sum();
            assert_eq!(alg.cat.n_objects(), expect);
            let coalg = coalgebra_category(&t).unwrap();
            let expect_co: usize = c
                .objects()
                .map(|o| c.hom(o, t.apply_obj(o)).len())
                .sum();
            assert_eq!(coalg.cat.n_objects(), expect_co);
        }
    }

    #[test]
    fn categories_validate_and_forgetful_is_faithful() {
        for t in corpus_endofunctors() {
            let alg = algebra_category(&t).unwrap();
            assert_eq!(alg.cat.validate(), Ok(()));
            assert_eq!(alg.forgetful.validate(), Ok(()));
            let coalg = coalgebra_category(&t).unwrap();
            assert_eq!(coalg.cat.validate(), Ok(()));
            assert_eq!(coalg.forgetful.validate(), Ok(()));
            // faithfulness: within a hom-set, carrier arrows are distinct
            for a in alg.cat.objects() {
                for b in alg.cat.objects() {
                    let hom = alg.cat.hom(a, b);
                    let mut carriers: Vec<MorId> =
                        hom.iter().map(|m| alg.arrows[m.0]).collect();
                    carriers.sort();
                    carriers.dedup();
                    assert_eq!(carriers.len(), hom.len());
                }
            }
        }
    }

    #[test]
    fn coalgebras_are_opposite_algebras_table_for_table() {
        for t in corpus_endofunctors() {
            let coalg = coalgebra_category(&t).unwrap();
            let via_dual = algebra_category(&opposite_functor(&t)).unwrap();
            assert_eq!(*coalg.cat, *opposite_category(&via_dual.cat));
        }
    }

    #[test]
    fn lambek_on_identity_endofunctors() {
        // for T = Id on chain(3), the bottom object with identity
        // structure is the initial algebra and its structure is an iso
        let c = FinCat::chain(3);
        let alg = algebra_category(&Functor::identity(&c)).unwrap();
        let initial = lambek_check(&alg).unwrap().expect("chain has a bottom");
        assert_eq!(initial.carrier, ObjId(0));
        assert!(c.is_identity(initial.structure));
    }
}
