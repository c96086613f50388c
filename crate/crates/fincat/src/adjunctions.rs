//! Adjunctions in three presentations — hom-bijection family, unit–counit
//! pair, universal-morphism family — with conversions among all of them,
//! duality, uniqueness of adjoints up to natural isomorphism, and the
//! concrete finite-set adjunction chains + ⊣ Δ ⊣ × and (−×X) ⊣ (−)^X.
//!
//! The hom form is the internal normal form. phi is stored per object
//! pair as a permutation table indexed by the deterministic hom-set
//! enumeration order (global morphism index order).

use crate::cat::{
    compose_functors, opposite_functor, CatRef, Functor, MorId, NatTrans, ObjId,
};
use crate::finset::{all_fns, fs_exponential, fs_product, fs_sum, test_objects, FinFn};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdjViolation {
    #[error("malformed adjunction data: {0}")]
    Structural(String),
    #[error("phi at (a={a:?}, b={b:?}) is not a bijection")]
    PhiNotBijective { a: ObjId, b: ObjId },
    #[error("phi naturality fails at (a={a:?}, b={b:?}), f position {f}, u={u:?}, h={h:?}")]
    PhiNaturality { a: ObjId, b: ObjId, f: usize, u: MorId, h: MorId },
    #[error("unit is not natural")]
    UnitNotNatural,
    #[error("counit is not natural")]
    CounitNotNatural,
    #[error("triangle identity (Gε)(ηG) = id fails at object {b:?}")]
    TriangleRight { b: ObjId },
    #[error("triangle identity (εF)(Fη) = id fails at object {a:?}")]
    TriangleLeft { a: ObjId },
    #[error("arrow at c={c:?} is not universal: m={m:?} into G({b:?}) has {count} factorizations")]
    NotUniversal { c: ObjId, b: ObjId, m: MorId, count: usize },
    #[error("functors are not adjoint")]
    NotAdjoint,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// F ⊣ G in hom form: a bijection family
/// phi[a][b]: Hom(F a, b) → Hom(a, G b), natural in both variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjHom {
    pub left: Functor,
    pub right: Functor,
    pub phi: Vec<Vec<Vec<usize>>>,
}

/// F ⊣ G via unit η: Id ⇒ G∘F and counit ε: F∘G ⇒ Id satisfying the
/// triangle identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjUnitCounit {
    pub left: Functor,
    pub right: Functor,
    pub unit: NatTrans,
    pub counit: NatTrans,
}

/// F ⊣ G via universal arrows: per object c a chosen F₀(c) and
/// η_c: c → G(F₀ c) through which every c → G b factors uniquely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjUniversal {
    pub right: Functor,
    pub f0: Vec<usize>,
    pub eta: Vec<usize>,
}

/// Any of the three adjunction presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Adjunction {
    Hom(AdjHom),
    UnitCounit(AdjUnitCounit),
    Universal(AdjUniversal),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjForm {
    Hom,
    UnitCounit,
    Universal,
}

fn hom_pos(c: &CatRef, a: ObjId, b: ObjId, m: MorId) -> Option<usize> {
    c.hom(a, b).iter().position(|&x| x == m)
}

impl AdjHom {
    /// The identity adjunction Id ⊣ Id with identity phi tables.
    pub fn identity(c: &CatRef) -> AdjHom {
        let id = Functor::identity(c);
        let phi = c
            .objects()
            .map(|a| {
                c.objects()
                    .map(|b| (0..c.hom(a, b).len()).collect())
                    .collect()
            })
            .collect();
        AdjHom { left: id.clone(), right: id, phi }
    }

    fn check_structure(&self) -> Result<(), AdjViolation> {
        let c = self.left.dom();
        let d = self.left.cod();
        if self.right.dom() != d || self.right.cod() != c {
            return Err(AdjViolation::Structural("F and G must be opposing".into()));
        }
        if self.phi.len() != c.n_objects()
            || self.phi.iter().any(|row| row.len() != d.n_objects())
        {
            return Err(AdjViolation::Structural("phi table dimensions".into()));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), AdjViolation> {
        self.check_structure()?;
        let c = self.left.dom();
        let d = self.left.cod();
        for a in c.objects() {
            for b in d.objects() {
                let from = d.hom(self.left.apply_obj(a), b);
                let to = c.hom(a, self.right.apply_obj(b));
                let table = &self.phi[a.0][b.0];
                if table.len() != from.len() || from.len() != to.len() {
                    return Err(AdjViolation::PhiNotBijective { a, b });
                }
                let mut seen = vec![false; to.len()];
                for &t in table {
                    if t >= to.len() || std::mem::replace(&mut seen[t], true) {
                        return Err(AdjViolation::PhiNotBijective { a, b });
                    }
                }
            }
        }
        // naturality in both variables:
        // phi(h ∘ f ∘ F u) = G h ∘ phi(f) ∘ u
        for a in c.objects() {
            for b in d.objects() {
                let from = d.hom(self.left.apply_obj(a), b);
                for (k, &f) in from.iter().enumerate() {
                    let phi_f = c.hom(a, self.right.apply_obj(b))[self.phi[a.0][b.0][k]];
                    for u in c.morphisms().filter(|&u| c.dst(u) == a) {
                        let a2 = c.src(u);
                        for h in d.morphisms().filter(|&h| d.src(h) == b) {
                            let b2 = d.dst(h);
                            let lhs_arrow = d
                                .compose(h, d.compose(f, self.left.apply_mor(u)).unwrap())
                                .unwrap();
                            let pos = hom_pos(d, self.left.apply_obj(a2), b2, lhs_arrow)
                                .expect("typed");
                            let lhs =
                                c.hom(a2, self.right.apply_obj(b2))[self.phi[a2.0][b2.0][pos]];
                            let rhs = c
                                .compose(
                                    self.right.apply_mor(h),
                                    c.compose(phi_f, u).unwrap(),
                                )
                                .unwrap();
                            if lhs != rhs {
                                return Err(AdjViolation::PhiNaturality { a, b, f: k, u, h });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn apply_phi(&self, a: ObjId, b: ObjId, f: MorId) -> MorId {
        let c = self.left.dom();
        let d = self.left.cod();
        let k = hom_pos(d, self.left.apply_obj(a), b, f).expect("f in Hom(F a, b)");
        c.hom(a, self.right.apply_obj(b))[self.phi[a.0][b.0][k]]
    }

    pub fn apply_phi_inv(&self, a: ObjId, b: ObjId, g: MorId) -> MorId {
        let c = self.left.dom();
        let d = self.left.cod();
        let pos = hom_pos(c, a, self.right.apply_obj(b), g).expect("g in Hom(a, G b)");
        let k = self.phi[a.0][b.0]
            .iter()
            .position(|&t| t == pos)
            .expect("phi bijective");
        d.hom(self.left.apply_obj(a), b)[k]
    }
}

impl AdjUnitCounit {
    pub fn validate(&self) -> Result<(), AdjViolation> {
        let c = self.left.dom();
        let d = self.left.cod();
        if self.right.dom() != d || self.right.cod() != c {
            return Err(AdjViolation::Structural("F and G must be opposing".into()));
        }
        let gf = compose_functors(&self.right, &self.left)
            .map_err(|e| AdjViolation::Structural(e.to_string()))?;
        let fg = compose_functors(&self.left, &self.right)
            .map_err(|e| AdjViolation::Structural(e.to_string()))?;
        if *self.unit.source() != Functor::identity(c) || *self.unit.target() != gf {
            return Err(AdjViolation::Structural("unit must be Id ⇒ G∘F".into()));
        }
        if *self.counit.source() != fg || *self.counit.target() != Functor::identity(d) {
            return Err(AdjViolation::Structural("counit must be F∘G ⇒ Id".into()));
        }
        if self.unit.validate().is_err() {
            return Err(AdjViolation::UnitNotNatural);
        }
        if self.counit.validate().is_err() {
            return Err(AdjViolation::CounitNotNatural);
        }
        // (Gε) ∘ (ηG) = id_G componentwise
        for b in d.objects() {
            let gb = self.right.apply_obj(b);
            let lhs = c.compose(
                self.right.apply_mor(self.counit.component(b)),
                self.unit.component(gb),
            );
            if lhs != Some(c.identity(gb)) {
                return Err(AdjViolation::TriangleRight { b });
            }
        }
        // (εF) ∘ (Fη) = id_F componentwise
        for a in c.objects() {
            let fa = self.left.apply_obj(a);
            let lhs = d.compose(
                self.counit.component(fa),
                self.left.apply_mor(self.unit.component(a)),
            );
            if lhs != Some(d.identity(fa)) {
                return Err(AdjViolation::TriangleLeft { a });
            }
        }
        Ok(())
    }
}

impl AdjUniversal {
    pub fn validate(&self) -> Result<(), AdjViolation> {
        let d = self.right.dom();
        let c = self.right.cod();
        if self.f0.len() != c.n_objects() || self.eta.len() != c.n_objects() {
            return Err(AdjViolation::Structural("per-object table lengths".into()));
        }
        for cobj in c.objects() {
            let f0 = ObjId(self.f0[cobj.0]);
            if f0.0 >= d.n_objects() {
                return Err(AdjViolation::Structural("F0 out of bounds".into()));
            }
            let eta = MorId(self.eta[cobj.0]);
            if c.src(eta) != cobj || c.dst(eta) != self.right.apply_obj(f0) {
                return Err(AdjViolation::Structural(format!(
                    "eta at object {} ill-typed",
                    cobj.0
                )));
            }
            for b in d.objects() {
                for m in c.hom(cobj, self.right.apply_obj(b)) {
                    let count = d
                        .hom(f0, b)
                        .into_iter()
                        .filter(|&h| c.compose(self.right.apply_mor(h), eta) == Some(m))
                        .count();
                    if count != 1 {
                        return Err(AdjViolation::NotUniversal { c: cobj, b, m, count });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Validates any of the three presentations, returning the first
/// violated law with a witness.
pub fn validate_adjunction(a: &Adjunction) -> Result<(), AdjViolation> {
    match a {
        Adjunction::Hom(h) => h.validate(),
        Adjunction::UnitCounit(uc) => uc.validate(),
        Adjunction::Universal(u) => u.validate(),
    }
}

/// hom → unit-counit: η_a = phi(id_{F a}), ε_b = phi⁻¹(id_{G b}).
pub fn hom_to_unit_counit(adj: &AdjHom) -> AdjUnitCounit {
    let c = adj.left.dom();
    let d = adj.left.cod();
    let gf = compose_functors(&adj.right, &adj.left).unwrap();
    let fg = compose_functors(&adj.left, &adj.right).unwrap();
    let unit_components = c
        .objects()
        .map(|a| {
            let fa = adj.left.apply_obj(a);
            adj.apply_phi(a, fa, d.identity(fa)).0
        })
        .collect();
    let counit_components = d
        .objects()
        .map(|b| {
            let gb = adj.right.apply_obj(b);
            adj.apply_phi_inv(gb, b, c.identity(gb)).0
        })
        .collect();
    AdjUnitCounit {
        left: adj.left.clone(),
        right: adj.right.clone(),
        unit: NatTrans::new(Functor::identity(c), gf, unit_components).unwrap(),
        counit: NatTrans::new(fg, Functor::identity(d), counit_components).unwrap(),
    }
}

/// unit-counit → hom: phi(f) = G f ∘ η_a.
pub fn unit_counit_to_hom(adj: &AdjUnitCounit) -> AdjHom {
    let c = adj.left.dom();
    let d = adj.left.cod();
    let phi = c
        .objects()
        .map(|a| {
            d.objects()
                .map(|b| {
                    let target = c.hom(a, adj.right.apply_obj(b));
                    d.hom(adj.left.apply_obj(a), b)
                        .into_iter()
                        .map(|f| {
                            let img = c
                                .compose(adj.right.apply_mor(f), adj.unit.component(a))
                                .expect("typed");
                            target.iter().position(|&t| t == img).expect("in hom set")
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    AdjHom { left: adj.left.clone(), right: adj.right.clone(), phi }
}

/// hom → universal arrows: F₀ = F's object map, η from the unit.
pub fn hom_to_universal(adj: &AdjHom) -> AdjUniversal {
    let uc = hom_to_unit_counit(adj);
    AdjUniversal {
        right: adj.right.clone(),
        f0: adj.left.omap().to_vec(),
        eta: uc.unit.components().to_vec(),
    }
}

/// universal arrows → hom: F is reconstructed on morphisms by unique
/// factorization, then phi(f) = G f ∘ η.
pub fn universal_to_hom(adj: &AdjUniversal) -> Result<AdjHom, AdjViolation> {
    adj.validate()?;
    let d = adj.right.dom();
    let c = adj.right.cod();
    let mut mmap = Vec::with_capacity(c.n_morphisms());
    for u in c.morphisms() {
        let a = c.src(u);
        let a2 = c.dst(u);
        let target = c
            .compose(MorId(adj.eta[a2.0]), u)
            .ok_or(AdjViolation::InvalidInput("eta composition".into()))?;
        let hs: Vec<MorId> = d
            .hom(ObjId(adj.f0[a.0]), ObjId(adj.f0[a2.0]))
            .into_iter()
            .filter(|&h| c.compose(adj.right.apply_mor(h), MorId(adj.eta[a.0])) == Some(target))
            .collect();
        match hs.as_slice() {
            [h] => mmap.push(h.0),
            _ => return Err(AdjViolation::NotUniversal { c: a, b: ObjId(adj.f0[a2.0]), m: target, count: hs.len() }),
        }
    }
    let left = Functor::new(c.clone(), d.clone(), adj.f0.clone(), mmap)
        .map_err(|e| AdjViolation::Structural(e.to_string()))?;
    let unit = NatTrans::new(
        Functor::identity(c),
        compose_functors(&adj.right, &left).unwrap(),
        adj.eta.clone(),
    )
    .map_err(|e| AdjViolation::Structural(e.to_string()))?;
    // counit comes from the hom form once phi exists; build phi directly
    let phi = c
        .objects()
        .map(|a| {
            d.objects()
                .map(|b| {
                    let target = c.hom(a, adj.right.apply_obj(b));
                    d.hom(left.apply_obj(a), b)
                        .into_iter()
                        .map(|f| {
                            let img = c
                                .compose(adj.right.apply_mor(f), unit.component(a))
                                .expect("typed");
                            target.iter().position(|&t| t == img).expect("in hom set")
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(AdjHom { left, right: adj.right.clone(), phi })
}

/// Converts a valid adjunction to the requested presentation. All six
/// directed conversions go through the hom normal form.
pub fn adj_convert(a: &Adjunction, target: AdjForm) -> Result<Adjunction, AdjViolation> {
    validate_adjunction(a)?;
    let hom = match a {
        Adjunction::Hom(h) => h.clone(),
        Adjunction::UnitCounit(uc) => unit_counit_to_hom(uc),
        Adjunction::Universal(u) => universal_to_hom(u)?,
    };
    Ok(match target {
        AdjForm::Hom => Adjunction::Hom(hom),
        AdjForm::UnitCounit => Adjunction::UnitCounit(hom_to_unit_counit(&hom)),
        AdjForm::Universal => Adjunction::Universal(hom_to_universal(&hom)),
    })
}

/// F ⊣ G gives G^op ⊣ F^op; phi transposes by inversion. An involution
/// at the level of tables.
pub fn adj_dual(adj: &AdjHom) -> AdjHom {
    let c = adj.left.dom();
    let d = adj.left.cod();
    // phi'[b][a] (over D^op × C^op) is the inverse permutation of phi[a][b];
    // hom sets of the opposite category keep their index order
    let phi = d
        .objects()
        .map(|b| {
            c.objects()
                .map(|a| {
                    let fwd = &adj.phi[a.0][b.0];
                    let mut inv = vec![0usize; fwd.len()];
                    for (k, &t) in fwd.iter().enumerate() {
                        inv[t] = k;
                    }
                    inv
                })
                .collect()
        })
        .collect();
    AdjHom {
        left: opposite_functor(&adj.right),
        right: opposite_functor(&adj.left),
        phi,
    }
}

/// For two right adjoints G, G' of the same F, the canonical natural
/// isomorphism G ⇒ G' with components phi'(ε_b).
pub fn adj_unique_iso(adj1: &AdjHom, adj2: &AdjHom) -> Result<NatTrans, AdjViolation> {
    if adj1.left != adj2.left {
        return Err(AdjViolation::NotAdjoint);
    }
    adj1.validate()?;
    adj2.validate()?;
    let c = adj1.left.dom();
    let d = adj1.left.cod();
    let components: Vec<usize> = d
        .objects()
        .map(|b| {
            let gb = adj1.right.apply_obj(b);
            let counit = adj1.apply_phi_inv(gb, b, c.identity(gb));
            adj2.apply_phi(gb, b, counit).0
        })
        .collect();
    let iso = NatTrans::new(adj1.right.clone(), adj2.right.clone(), components)
        .map_err(|e| AdjViolation::Structural(e.to_string()))?;
    if iso.validate().is_err() {
        return Err(AdjViolation::NotAdjoint);
    }
    // every component must be an isomorphism (two-sided inverse by search)
    for b in d.objects() {
        let comp = iso.component(b);
        let has_inverse = c
            .hom(c.dst(comp), c.src(comp))
            .into_iter()
            .any(|inv| {
                c.compose(inv, comp) == Some(c.identity(c.src(comp)))
                    && c.compose(comp, inv) == Some(c.identity(c.dst(comp)))
            });
        if !has_inverse {
            return Err(AdjViolation::NotAdjoint);
        }
    }
    Ok(iso)
}

/// Searches for an adjunction F ⊣ G by enumerating unit/counit
/// candidates and checking the triangle identities.
pub fn find_adjunction(left: &Functor, right: &Functor) -> Option<AdjUnitCounit> {
    let c = left.dom();
    let gf = compose_functors(right, left).ok()?;
    let fg = compose_functors(left, right).ok()?;
    let d = left.cod();
    for unit in crate::cat::enumerate_nat_trans(&Functor::identity(c), &gf) {
        for counit in crate::cat::enumerate_nat_trans(&fg, &Functor::identity(d)) {
            let cand = AdjUnitCounit {
                left: left.clone(),
                right: right.clone(),
                unit: unit.clone(),
                counit,
            };
            if cand.validate().is_ok() {
                return Some(cand);
            }
        }
    }
    None
}

/// The floor/inclusion Galois connection: F: chain(2) → chain(3) with
/// 0 ↦ 0, 1 ↦ 2, and right adjoint G: 0,1 ↦ 0, 2 ↦ 1.
pub fn galois_connection() -> (Functor, Functor) {
    use crate::cat::FinCat;
    let c2 = FinCat::chain(2);
    let c3 = FinCat::chain(3);
    let find3 = |i: usize, j: usize| c3.hom(ObjId(i), ObjId(j))[0].0;
    let find2 = |i: usize, j: usize| c2.hom(ObjId(i), ObjId(j))[0].0;
    // chain(2) morphisms: (0,0), (0,1), (1,1)
    let f = Functor::new(
        c2.clone(),
        c3.clone(),
        vec![0, 2],
        vec![find3(0, 0), find3(0, 2), find3(2, 2)],
    )
    .unwrap();
    let gmap: Vec<usize> = vec![0, 0, 1];
    let mmap = c3
        .morphisms()
        .map(|m| find2(gmap[c3.src(m).0], gmap[c3.dst(m).0]))
        .collect();
    let g = Functor::new(c3, c2, gmap, mmap).unwrap();
    (f, g)
}

/// Which finite-set adjunction witness to construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FsAdjKind {
    /// Hom(A+B, C) ≅ Hom(A,C) × Hom(B,C)
    SumDiag,
    /// Hom(A,B) × Hom(A,C) ≅ Hom(A, B×C)
    DiagProd,
    /// Hom(A×X, B) ≅ Hom(A, B^X)
    ProdExp,
}

/// Constructs the explicit bijection for the requested adjunction over
/// every triple of test sets of size ≤ bound, checking that it is
/// invertible and natural in every variable. The bijections themselves
/// are exact; only the object quantifier is bounded.
pub fn fs_adjunction_witness(kind: FsAdjKind, bound: usize) -> Result<(), String> {
    let tests = test_objects(bound);
    match kind {
        FsAdjKind::SumDiag => {
            for a in &tests {
                for b in &tests {
                    for c in &tests {
                        let s = fs_sum(a, b);
                        let homs = all_fns(&s.obj, c);
                        // forward: h ↦ (h∘i1, h∘i2); inverse: copair
                        for h in &homs {
                            let f = FinFn::compose(h, &s.inj1).unwrap();
                            let g = FinFn::compose(h, &s.inj2).unwrap();
                            let back = s.copair(&f, &g).unwrap();
                            if back != *h {
                                return Err(format!(
                                    "sum bijection round-trip fails at sizes {},{},{}",
                                    a.size(), b.size(), c.size()
                                ));
                            }
                        }
                        if homs.len() != all_fns(a, c).len() * all_fns(b, c).len() {
                            return Err("sum bijection cardinality mismatch".into());
                        }
                        // naturality in C: postcomposition with w commutes
                        for c2 in &tests {
                            for w in all_fns(c, c2) {
                                for h in &homs {
                                    let lhs = FinFn::compose(&w, h).unwrap();
                                    let f = FinFn::compose(&lhs, &s.inj1).unwrap();
                                    let exp = FinFn::compose(
                                        &w,
                                        &FinFn::compose(h, &s.inj1).unwrap(),
                                    )
                                    .unwrap();
                                    if f != exp {
                                        return Err("sum naturality in C fails".into());
                                    }
                                }
                            }
                        }
                        // naturality in A: precomposition with u+id
                        for a2 in &tests {
                            for u in all_fns(a2, a) {
                                let s2 = fs_sum(a2, b);
                                let upv = s2
                                    .copair(
                                        &FinFn::compose(&s.inj1, &u).unwrap(),
                                        &s.inj2,
                                    )
                                    .unwrap();
                                for h in &homs {
                                    let pre = FinFn::compose(h, &upv).unwrap();
                                    let lhs = FinFn::compose(&pre, &s2.inj1).unwrap();
                                    let rhs = FinFn::compose(
                                        &FinFn::compose(h, &s.inj1).unwrap(),
                                        &u,
                                    )
                                    .unwrap();
                                    if lhs != rhs {
                                        return Err("sum naturality in A fails".into());
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        }
        FsAdjKind::DiagProd => {
            for a in &tests {
                for b in &tests {
                    for c in &tests {
                        let p = fs_product(b, c);
                        let homs = all_fns(a, &p.obj);
                        for h in &homs {
                            let f = FinFn::compose(&p.proj1, h).unwrap();
                            let g = FinFn::compose(&p.proj2, h).unwrap();
                            if p.pair(&f, &g).unwrap() != *h {
                                return Err("product bijection round-trip fails".into());
                            }
                        }
                        if homs.len() != all_fns(a, b).len() * all_fns(a, c).len() {
                            return Err("product bijection cardinality mismatch".into());
                        }
                        // naturality in A: precomposition
                        for a2 in &tests {
                            for u in all_fns(a2, a) {
                                for h in &homs {
                                    let lhs = FinFn::compose(
                                        &p.proj1,
                                        &FinFn::compose(h, &u).unwrap(),
                                    )
                                    .unwrap();
                                    let rhs = FinFn::compose(
                                        &FinFn::compose(&p.proj1, h).unwrap(),
                                        &u,
                                    )
                                    .unwrap();
                                    if lhs != rhs {
                                        return Err("product naturality in A fails".into());
                                    }
                                }
                            }
                        }
                        // naturality in B: postcomposition through w×id
                        for b2 in &tests {
                            for w in all_fns(b, b2) {
                                let p2 = fs_product(b2, c);
                                for h in &homs {
                                    let f = FinFn::compose(&p.proj1, h).unwrap();
                                    let g = FinFn::compose(&p.proj2, h).unwrap();
                                    let wf = FinFn::compose(&w, &f).unwrap();
                                    let via_pair = p2.pair(&wf, &g).unwrap();
                                    let wxid = p2
                                        .pair(
                                            &FinFn::compose(&w, &p.proj1).unwrap(),
                                            &p.proj2,
                                        )
                                        .unwrap();
                                    let via_post = FinFn::compose(&wxid, h).unwrap();
                                    if via_pair != via_post {
                                        return Err("product naturality in B fails".into());
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        }
        FsAdjKind::ProdExp => {
            for a in &tests {
                for x in &tests {
                    for b in &tests {
                        let e = fs_exponential(x, b);
                        let pax = fs_product(a, x);
                        let homs = all_fns(&pax.obj, b);
                        if homs.len() != all_fns(a, &e.obj).len() {
                            return Err("exponential bijection cardinality mismatch".into());
                        }
                        for f in &homs {
                            let t = e.transpose(a, f).unwrap();
                            // eval ∘ (t × id) must reproduce f
                            let t_x_id = e
                                .eval_product
                                .pair(
                                    &FinFn::compose(&t, &pax.proj1).unwrap(),
                                    &pax.proj2,
                                )
                                .unwrap();
                            if FinFn::compose(&e.eval, &t_x_id).unwrap() != *f {
                                return Err("exponential round-trip fails".into());
                            }
                        }
                        // naturality in A: transpose(f ∘ (u×id)) = transpose(f) ∘ u
                        for a2 in &tests {
                            for u in all_fns(a2, a) {
                                let pa2x = fs_product(a2, x);
                                let uxid = pax
                                    .pair(
                                        &FinFn::compose(&u, &pa2x.proj1).unwrap(),
                                        &pa2x.proj2,
                                    )
                                    .unwrap();
                                for f in &homs {
                                    let lhs = e
                                        .transpose(a2, &FinFn::compose(f, &uxid).unwrap())
                                        .unwrap();
                                    let rhs = FinFn::compose(&e.transpose(a, f).unwrap(), &u)
                                        .unwrap();
                                    if lhs != rhs {
                                        return Err("exponential naturality in A fails".into());
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        }
    }
}
