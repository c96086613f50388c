//! Hom functors, the Yoneda embedding, the Yoneda bijection verified by
//! exact enumeration, and the cartesian-closed exponential isomorphism
//! (a^b)^c ≅ a^(b×c) on finite sets.
//!
//! Presheaves on C are `Diagram`s whose shape is C^op. Hom-set elements
//! are ordered by global morphism index, so every table here is
//! deterministic.

use crate::cat::{opposite_category, CatRef, MorId, ObjId};
use crate::finset::{
    all_fns, fs_exponential, fs_product, test_objects, Diagram, Exponential, FinFn, FinSetObj,
};

/// A natural transformation between two diagrams over the same shape,
/// with one finite function per shape object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramMap {
    pub source: Diagram,
    pub target: Diagram,
    pub components: Vec<FinFn>,
}

impl DiagramMap {
    pub fn new(
        source: Diagram,
        target: Diagram,
        components: Vec<FinFn>,
    ) -> Result<DiagramMap, String> {
        let m = DiagramMap { source, target, components };
        m.validate()?;
        Ok(m)
    }

    pub fn identity(d: &Diagram) -> DiagramMap {
        let components = d.on_objects.iter().map(FinFn::identity).collect();
        DiagramMap { source: d.clone(), target: d.clone(), components }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.source.shape != self.target.shape {
            return Err("source and target shapes differ".into());
        }
        let shape = &self.source.shape;
        if self.components.len() != shape.n_objects() {
            return Err("wrong number of components".into());
        }
        for o in shape.objects() {
            let c = &self.components[o.0];
            if c.dom() != self.source.value(o) || c.cod() != self.target.value(o) {
                return Err(format!("component at object {} ill-typed", o.0));
            }
        }
        for m in shape.morphisms() {
            let x = shape.src(m);
            let y = shape.dst(m);
            let lhs = FinFn::compose(&self.components[y.0], self.source.arrow(m)).unwrap();
            let rhs = FinFn::compose(self.target.arrow(m), &self.components[x.0]).unwrap();
            if lhs != rhs {
                return Err(format!("naturality fails at shape morphism {}", m.0));
            }
        }
        Ok(())
    }

    pub fn compose(n2: &DiagramMap, n1: &DiagramMap) -> Result<DiagramMap, String> {
        if n1.target != n2.source {
            return Err("composition endpoints differ".into());
        }
        let components = n1
            .components
            .iter()
            .zip(&n2.components)
            .map(|(a, b)| FinFn::compose(b, a).unwrap())
            .collect();
        Ok(DiagramMap { source: n1.source.clone(), target: n2.target.clone(), components })
    }
}

/// All natural transformations between two same-shape diagrams, in
/// lexicographic order of per-object component choices.
pub fn enumerate_diagram_maps(source: &Diagram, target: &Diagram) -> Vec<DiagramMap> {
    if source.shape != target.shape {
        return Vec::new();
    }
    let shape = &source.shape;
    let choices: Vec<Vec<FinFn>> = shape
        .objects()
        .map(|o| all_fns(source.value(o), target.value(o)))
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let components: Vec<FinFn> = idx
            .iter()
            .enumerate()
            .map(|(o, &i)| choices[o][i].clone())
            .collect();
        let cand = DiagramMap {
            source: source.clone(),
            target: target.clone(),
            components,
        };
        if cand.validate().is_ok() {
            out.push(cand);
        }
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn hom_set(c: &CatRef, d: ObjId, target: ObjId) -> FinSetObj {
    FinSetObj::new(
        c.hom(d, target)
            .into_iter()
            .map(|m| format!("m{}", m.0))
            .collect(),
    )
    .expect("morphism indices are distinct")
}

/// The representable presheaf y c = Hom(−, c), a diagram over C^op.
/// Elements are labeled "m{global index}" in hom-set order; the action
/// of f: d' → d is precomposition.
pub fn hom_functor(c: &CatRef, target: ObjId) -> Diagram {
    let shape = opposite_category(c);
    let on_objects: Vec<FinSetObj> =
        c.objects().map(|d| hom_set(c, d, target)).collect();
    let on_morphisms = c
        .morphisms()
        .map(|m| {
            // in C^op, m runs dst(m) → src(m); its action precomposes
            let d = c.dst(m);
            let d2 = c.src(m);
            let cod_hom = c.hom(d2, target);
            let table = c
                .hom(d, target)
                .into_iter()
                .map(|h| {
                    let hm = c.compose(h, m).expect("typed");
                    cod_hom.iter().position(|&x| x == hm).unwrap()
                })
                .collect();
            FinFn::new(on_objects[d.0].clone(), on_objects[d2.0].clone(), table).unwrap()
        })
        .collect();
    Diagram { shape, on_objects, on_morphisms }
}

/// The action of the embedding on f: c → c', i.e. the postcomposition
/// transformation y f: y c → y c'.
pub fn hom_functor_map(c: &CatRef, f: MorId) -> DiagramMap {
    let source = hom_functor(c, c.src(f));
    let target = hom_functor(c, c.dst(f));
    let components = c
        .objects()
        .map(|d| {
            let cod_hom = c.hom(d, c.dst(f));
            let table = c
                .hom(d, c.src(f))
                .into_iter()
                .map(|h| {
                    let fh = c.compose(f, h).expect("typed");
                    cod_hom.iter().position(|&x| x == fh).unwrap()
                })
                .collect();
            FinFn::new(
                source.value(d).clone(),
                target.value(d).clone(),
                table,
            )
            .unwrap()
        })
        .collect();
    DiagramMap { source, target, components }
}

/// The full Yoneda embedding: one presheaf per object, one diagram map
/// per morphism, functorial by construction.
#[derive(Debug, Clone)]
pub struct YonedaEmbedding {
    pub objects: Vec<Diagram>,
    pub arrows: Vec<DiagramMap>,
}

pub fn yoneda_embedding(c: &CatRef) -> YonedaEmbedding {
    YonedaEmbedding {
        objects: c.objects().map(|o| hom_functor(c, o)).collect(),
        arrows: c.morphisms().map(|m| hom_functor_map(c, m)).collect(),
    }
}

/// θ: the element of F(c) classified by a transformation y c ⇒ F, namely
/// the component at c applied to id_c.
pub fn yoneda_element_from_nat(c: &CatRef, target: ObjId, n: &DiagramMap) -> usize {
    let pos = c
        .hom(target, target)
        .iter()
        .position(|&m| m == c.identity(target))
        .expect("identity is in Hom(c, c)");
    n.components[target.0].apply(pos)
}

/// θ⁻¹: the transformation y c ⇒ F induced by an element x of F(c),
/// with components h ↦ F(h)(x).
pub fn yoneda_nat_from_element(c: &CatRef, f: &Diagram, target: ObjId, elem: usize) -> DiagramMap {
    let source = hom_functor(c, target);
    let components = c
        .objects()
        .map(|d| {
            let table = c
                .hom(d, target)
                .into_iter()
                .map(|h| f.arrow(h).apply(elem))
                .collect();
            FinFn::new(source.value(d).clone(), f.value(d).clone(), table).unwrap()
        })
        .collect();
    DiagramMap { source, target: f.clone(), components }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YonedaReport {
    pub object: ObjId,
    pub nat_count: usize,
    pub elem_count: usize,
}

/// Verifies the Yoneda bijection Nat(y c, F) ≅ F(c) at one object by
/// exhaustive enumeration plus both round-trips.
pub fn yoneda_bijection(c: &CatRef, f: &Diagram, target: ObjId) -> Result<YonedaReport, String> {
    if f.shape != opposite_category(c) {
        return Err("presheaf shape is not C^op".into());
    }
    let yc = hom_functor(c, target);
    let nats = enumerate_diagram_maps(&yc, f);
    let elems = f.value(target).size();
    if nats.len() != elems {
        return Err(format!(
            "|Nat(y {}, F)| = {} but |F({})| = {}",
            target.0,
            nats.len(),
            target.0,
            elems
        ));
    }
    for n in &nats {
        let x = yoneda_element_from_nat(c, target, n);
        let back = yoneda_nat_from_element(c, f, target, x);
        if back != *n {
            return Err(format!("nat round-trip fails at object {}", target.0));
        }
    }
    for x in 0..elems {
        let n = yoneda_nat_from_element(c, f, target, x);
        n.validate()
            .map_err(|e| format!("induced transformation invalid: {e}"))?;
        if yoneda_element_from_nat(c, target, &n) != x {
            return Err(format!("element round-trip fails at object {}", target.0));
        }
    }
    Ok(YonedaReport { object: target, nat_count: nats.len(), elem_count: elems })
}

/// Naturality of θ in the representing object: for every g: c → c',
/// θ_c(α ∘ y g) = F(g)(θ_{c'}(α)).
pub fn yoneda_natural_in_c(c: &CatRef, f: &Diagram) -> Result<(), String> {
    for g in c.morphisms() {
        let c0 = c.src(g);
        let c1 = c.dst(g);
        let yg = hom_functor_map(c, g);
        let yc1 = hom_functor(c, c1);
        for alpha in enumerate_diagram_maps(&yc1, f) {
            let precomposed = DiagramMap::compose(&alpha, &yg)?;
            let lhs = yoneda_element_from_nat(c, c0, &precomposed);
            // g is a shape morphism of C^op running c1 → c0
            let rhs = f.arrow(g).apply(yoneda_element_from_nat(c, c1, &alpha));
            if lhs != rhs {
                return Err(format!("θ not natural along morphism {}", g.0));
            }
        }
    }
    Ok(())
}

/// Full and faithful by enumeration: the embedding maps Hom(a, b)
/// bijectively onto Nat(y a, y b) for every object pair.
pub fn yoneda_full_faithful(c: &CatRef) -> Result<(), String> {
    let emb = yoneda_embedding(c);
    for a in c.objects() {
        for b in c.objects() {
            let all = enumerate_diagram_maps(&emb.objects[a.0], &emb.objects[b.0]);
            let hom = c.hom(a, b);
            if all.len() != hom.len() {
                return Err(format!(
                    "|Nat(y {}, y {})| = {} ≠ |Hom| = {}",
                    a.0,
                    b.0,
                    all.len(),
                    hom.len()
                ));
            }
            let mut images: Vec<&DiagramMap> =
                hom.iter().map(|m| &emb.arrows[m.0]).collect();
            for img in &images {
                if !all.contains(img) {
                    return Err("embedded arrow is not a valid transformation".into());
                }
            }
            images.sort_by(|x, y| {
                let kx: Vec<&[usize]> = x.components.iter().map(|f| f.table()).collect();
                let ky: Vec<&[usize]> = y.components.iter().map(|f| f.table()).collect();
                kx.cmp(&ky)
            });
            images.dedup();
            if images.len() != hom.len() {
                return Err(format!("embedding not faithful between {} and {}", a.0, b.0));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// cartesian-closed exponential isomorphism
// ---------------------------------------------------------------------

/// Postcomposition b^a → b'^a induced by w: b → b'.
fn exp_post(from: &Exponential, to: &Exponential, w: &FinFn) -> FinFn {
    let table = (0..from.obj.size())
        .map(|e| {
            let t: Vec<usize> = from.table_of(e).iter().map(|&i| w.apply(i)).collect();
            to.index_of_table(&t).expect("total")
        })
        .collect();
    FinFn::new(from.obj.clone(), to.obj.clone(), table).unwrap()
}

/// Precomposition b^a → b^{a'} induced by u: a' → a.
fn exp_pre(from: &Exponential, to: &Exponential, u: &FinFn) -> FinFn {
    let table = (0..from.obj.size())
        .map(|e| {
            let t: Vec<usize> = u.table().iter().map(|&i| from.table_of(e)[i]).collect();
            to.index_of_table(&t).expect("total")
        })
        .collect();
    FinFn::new(from.obj.clone(), to.obj.clone(), table).unwrap()
}

/// The invertible pair (a^b)^c → a^(b×c) and back, with the round-trips
/// checked before returning.
pub fn ccc_exponential_iso(
    a: &FinSetObj,
    b: &FinSetObj,
    c: &FinSetObj,
) -> Result<(FinFn, FinFn), String> {
    let eab = fs_exponential(b, a);
    let lhs = fs_exponential(c, &eab.obj);
    let pbc = fs_product(b, c);
    let rhs = fs_exponential(&pbc.obj, a);
    let forward_table: Vec<usize> = (0..lhs.obj.size())
        .map(|g| {
            let mut t = vec![0usize; pbc.obj.size()];
            for y in 0..b.size() {
                for z in 0..c.size() {
                    t[pbc.pair_index(y, z)] = eab.table_of(lhs.table_of(g)[z])[y];
                }
            }
            rhs.index_of_table(&t).expect("total")
        })
        .collect();
    let backward_table: Vec<usize> = (0..rhs.obj.size())
        .map(|h| {
            let t: Vec<usize> = (0..c.size())
                .map(|z| {
                    let inner: Vec<usize> = (0..b.size())
                        .map(|y| rhs.table_of(h)[pbc.pair_index(y, z)])
                        .collect();
                    eab.index_of_table(&inner).expect("total")
                })
                .collect();
            lhs.index_of_table(&t).expect("total")
        })
        .collect();
    let forward = FinFn::new(lhs.obj.clone(), rhs.obj.clone(), forward_table).unwrap();
    let backward = FinFn::new(rhs.obj.clone(), lhs.obj.clone(), backward_table).unwrap();
    if FinFn::compose(&backward, &forward).unwrap() != FinFn::identity(&lhs.obj)
        || FinFn::compose(&forward, &backward).unwrap() != FinFn::identity(&rhs.obj)
    {
        return Err("exponential iso round-trip fails".into());
    }
    Ok((forward, backward))
}

/// Naturality of the exponential isomorphism in all three variables,
/// exhaustively over test sets of size ≤ bound.
pub fn ccc_exponential_iso_natural(bound: usize) -> Result<(), String> {
    let tests = test_objects(bound);
    for a in &tests {
        for b in &tests {
            for c in &tests {
                let (fwd, _) = ccc_exponential_iso(a, b, c)?;
                let eab = fs_exponential(b, a);
                let lhs = fs_exponential(c, &eab.obj);
                let pbc = fs_product(b, c);
                let rhs = fs_exponential(&pbc.obj, a);
                // in a: postcompose w everywhere
                for a2 in &tests {
                    for w in all_fns(a, a2) {
                        let ea2b = fs_exponential(b, a2);
                        let lhs2 = fs_exponential(c, &ea2b.obj);
                        let rhs2 = fs_exponential(&pbc.obj, a2);
                        let (fwd2, _) = ccc_exponential_iso(a2, b, c)?;
                        let left_leg = exp_post(&lhs, &lhs2, &exp_post(&eab, &ea2b, &w));
                        let right_leg = exp_post(&rhs, &rhs2, &w);
                        if FinFn::compose(&fwd2, &left_leg).unwrap()
                            != FinFn::compose(&right_leg, &fwd).unwrap()
                        {
                            return Err("iso not natural in a".into());
                        }
                    }
                }
                // in b: precompose u: b' → b; on the right via u×id
                for b2 in &tests {
                    for u in all_fns(b2, b) {
                        let eab2 = fs_exponential(b2, a);
                        let lhs2 = fs_exponential(c, &eab2.obj);
                        let pb2c = fs_product(b2, c);
                        let rhs2 = fs_exponential(&pb2c.obj, a);
                        let (fwd2, _) = ccc_exponential_iso(a, b2, c)?;
                        let left_leg = exp_post(&lhs, &lhs2, &exp_pre(&eab, &eab2, &u));
                        let uxid = pbc
                            .pair(
                                &FinFn::compose(&u, &pb2c.proj1).unwrap(),
                                &pb2c.proj2,
                            )
                            .unwrap();
                        let right_leg = exp_pre(&rhs, &rhs2, &uxid);
                        if FinFn::compose(&fwd2, &left_leg).unwrap()
                            != FinFn::compose(&right_leg, &fwd).unwrap()
                        {
                            return Err("iso not natural in b".into());
                        }
                    }
                }
                // in c: precompose v: c' → c; on the right via id×v
                for c2 in &tests {
                    for v in all_fns(c2, c) {
                        let lhs2 = fs_exponential(c2, &eab.obj);
                        let pbc2 = fs_product(b, c2);
                        let rhs2 = fs_exponential(&pbc2.obj, a);
                        let (fwd2, _) = ccc_exponential_iso(a, b, c2)?;
                        let left_leg = exp_pre(&lhs, &lhs2, &v);
                        let idxv = pbc
                            .pair(
                                &pbc2.proj1,
                                &FinFn::compose(&v, &pbc2.proj2).unwrap(),
                            )
                            .unwrap();
                        let right_leg = exp_pre(&rhs, &rhs2, &idxv);
                        if FinFn::compose(&fwd2, &left_leg).unwrap()
                            != FinFn::compose(&right_leg, &fwd).unwrap()
                        {
                            return Err("iso not natural in c".into());
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinCat;

    fn corpus() -> Vec<CatRef> {
        vec![
            FinCat::unit(),
            FinCat::walking_arrow(),
            FinCat::chain(3),
            FinCat::parallel_pair(),
            FinCat::monoid(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], 0).unwrap(),
        ]
    }

    #[test]
    fn hom_functors_are_law_valid() {
        for c in corpus() {
            for o in c.objects() {
                let y = hom_functor(&c, o);
                assert_eq!(y.validate(), Ok(()));
                for d in c.objects() {
                    assert_eq!(y.value(d).size(), c.hom(d, o).len());
                }
                for d in c.objects() {
                    let id = c.identity(d);
                    assert_eq!(
                        *y.arrow(id),
                        FinFn::identity(y.value(d)),
                        "identity action must be identity"
                    );
                }
            }
        }
    }

    #[test]
    fn unit_category_embeds_as_one_point_presheaf() {
        let c = FinCat::unit();
        let emb = yoneda_embedding(&c);
        assert_eq!(emb.objects.len(), 1);
        assert_eq!(emb.objects[0].value(ObjId(0)).size(), 1);
    }

    #[test]
    fn embedding_is_functorial() {
        for c in corpus() {
            let emb = yoneda_embedding(&c);
            for m in &emb.arrows {
                assert_eq!(m.validate(), Ok(()));
            }
            for o in c.objects() {
                assert_eq!(
                    emb.arrows[c.identity(o).0],
                    DiagramMap::identity(&emb.objects[o.0])
                );
            }
            for g in c.morphisms() {
                for f in c.morphisms() {
                    if let Some(gf) = c.compose(g, f) {
                        let composed =
                            DiagramMap::compose(&emb.arrows[g.0], &emb.arrows[f.0]).unwrap();
                        assert_eq!(composed, emb.arrows[gf.0]);
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_on_representables() {
        for c in corpus() {
            for a in c.objects() {
                for b in c.objects() {
                    let yb = hom_functor(&c, b);
                    let report = yoneda_bijection(&c, &yb, a).unwrap();
                    assert_eq!(report.nat_count, c.hom(a, b).len());
                }
            }
        }
    }

    /// A concrete non-representable presheaf on the 3-chain: sizes
    /// 2 ← 3 ← 1 with surjective restriction maps.
    fn chain_presheaf(c: &CatRef) -> Diagram {
        let shape = opposite_category(c);
        let sizes = [2usize, 3, 1];
        let on_objects: Vec<FinSetObj> =
            sizes.iter().map(|&n| FinSetObj::canonical(n)).collect();
        // step maps F(1) → F(0) and F(2) → F(1)
        let steps = [vec![0usize, 1, 1], vec![2usize]];
        let on_morphisms = c
            .morphisms()
            .map(|m| {
                // shape morphism m runs dst(m) → src(m) in the chain
                let hi = c.dst(m).0;
                let lo = c.src(m).0;
                let mut table: Vec<usize> = (0..sizes[hi]).collect();
                for level in (lo..hi).rev() {
                    table = table.into_iter().map(|i| steps[level][i]).collect();
                }
                FinFn::new(
                    on_objects[hi].clone(),
                    on_objects[lo].clone(),
                    table,
                )
                .unwrap()
            })
            .collect();
        Diagram::new(shape, on_objects, on_morphisms).unwrap()
    }

    #[test]
    fn bijection_on_a_chain_presheaf() {
        let c = FinCat::chain(3);
        let f = chain_presheaf(&c);
        for (o, expect) in [(0usize, 2usize), (1, 3), (2, 1)] {
            let report = yoneda_bijection(&c, &f, ObjId(o)).unwrap();
            assert_eq!(report.nat_count, expect);
        }
        assert_eq!(yoneda_natural_in_c(&c, &f), Ok(()));
    }

    #[test]
    fn full_and_faithful_on_corpus() {
        for c in corpus() {
            assert_eq!(yoneda_full_faithful(&c), Ok(()));
        }
    }

    #[test]
    fn theta_natural_on_representables() {
        for c in corpus() {
            for o in c.objects() {
                let y = hom_functor(&c, o);
                assert_eq!(yoneda_natural_in_c(&c, &y), Ok(()));
            }
        }
    }

    #[test]
    fn exponential_iso_cardinalities_and_degenerates() {
        let sizes = |n: usize| FinSetObj::canonical(n);
        for (na, nb, nc) in [(2usize, 2usize, 2usize), (3, 2, 1), (1, 3, 2), (2, 0, 3)] {
            let (fwd, _) = ccc_exponential_iso(&sizes(na), &sizes(nb), &sizes(nc)).unwrap();
            let expect = na.checked_pow((nb * nc) as u32).unwrap();
            assert_eq!(fwd.dom().size(), expect);
            assert_eq!(fwd.cod().size(), expect);
        }
        // a empty, b nonempty: both sides empty... (a^b is empty, so
        // (a^b)^c is empty unless c is empty)
        let (fwd, _) = ccc_exponential_iso(&sizes(0), &sizes(1), &sizes(1)).unwrap();
        assert_eq!(fwd.dom().size(), 0);
        assert_eq!(fwd.cod().size(), 0);
    }

    #[test]
    fn exponential_iso_natural_at_bound_2() {
        assert_eq!(ccc_exponential_iso_natural(2), Ok(()));
    }
}
