//! The category of finite sets with canonical element labels: products,
//! sums, equalizers, coequalizers (by union-find), exponentials, the
//! subobject classifier, slice exponentials, and a bounded
//! universal-property verifier.
//!
//! Label conventions, fixed for golden-test determinism: product
//! elements "a,b", sum elements "L:a"/"R:b" (n-ary "i:a"), quotient
//! classes named by their least member, function elements by their
//! table "[b0,b1,...]".

use crate::cat::{CatRef, MorId, ObjId};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FinSetError {
    #[error("duplicate element label: {0}")]
    DuplicateLabel(String),
    #[error("index out of bounds: {0}")]
    BadIndex(String),
    #[error("functions are not parallel")]
    NotParallel,
    #[error("functions are not composable")]
    NotComposable,
    #[error("function is not a monomorphism")]
    NotMono,
    #[error("codomain mismatch")]
    CodomainMismatch,
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
}

/// A finite set with an ordered sequence of distinct labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinSetObj {
    elements: Vec<String>,
}

impl FinSetObj {
    pub fn new(elements: Vec<String>) -> Result<FinSetObj, FinSetError> {
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(FinSetError::DuplicateLabel(e.clone()));
            }
        }
        Ok(FinSetObj { elements })
    }

    /// The fixed terminal singleton {*}.
    pub fn terminal() -> FinSetObj {
        FinSetObj { elements: vec!["*".into()] }
    }

    pub fn empty() -> FinSetObj {
        FinSetObj { elements: vec![] }
    }

    /// A canonical test set of size n with labels t0, t1, ...
    pub fn canonical(n: usize) -> FinSetObj {
        FinSetObj { elements: (0..n).map(|i| format!("t{i}")).collect() }
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }
}

/// A function between finite sets as a position table; equality is
/// extensional (same dom, cod, table).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinFn {
    dom: FinSetObj,
    cod: FinSetObj,
    table: Vec<usize>,
}

impl FinFn {
    pub fn new(dom: FinSetObj, cod: FinSetObj, table: Vec<usize>) -> Result<FinFn, FinSetError> {
        if table.len() != dom.size() {
            return Err(FinSetError::BadIndex("table length".into()));
        }
        if table.iter().any(|&t| t >= cod.size()) {
            return Err(FinSetError::BadIndex("table entry".into()));
        }
        Ok(FinFn { dom, cod, table })
    }

    pub fn identity(obj: &FinSetObj) -> FinFn {
        FinFn { dom: obj.clone(), cod: obj.clone(), table: (0..obj.size()).collect() }
    }

    pub fn dom(&self) -> &FinSetObj {
        &self.dom
    }

    pub fn cod(&self) -> &FinSetObj {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    /// g ∘ f.
    pub fn compose(g: &FinFn, f: &FinFn) -> Result<FinFn, FinSetError> {
        if f.cod != g.dom {
            return Err(FinSetError::NotComposable);
        }
        Ok(FinFn {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            table: f.table.iter().map(|&i| g.table[i]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        self.table.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &t in &self.table {
            seen[t] = true;
        }
        seen.iter().all(|&s| s)
    }
}

/// All functions dom → cod in lexicographic table order.
pub fn all_fns(dom: &FinSetObj, cod: &FinSetObj) -> Vec<FinFn> {
    let n = dom.size();
    let k = cod.size();
    if n == 0 {
        return vec![FinFn { dom: dom.clone(), cod: cod.clone(), table: vec![] }];
    }
    if k == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut table = vec![0usize; n];
    loop {
        out.push(FinFn { dom: dom.clone(), cod: cod.clone(), table: table.clone() });
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            table[i] += 1;
            if table[i] < k {
                break;
            }
            table[i] = 0;
        }
    }
}

/// The canonical test family: one set per cardinality 0..=bound.
pub fn test_objects(bound: usize) -> Vec<FinSetObj> {
    (0..=bound).map(FinSetObj::canonical).collect()
}

// ---------------------------------------------------------------------
// products and sums
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Product {
    pub obj: FinSetObj,
    pub proj1: FinFn,
    pub proj2: FinFn,
}

/// A × B with lexicographic pair labels "a,b".
pub fn fs_product(a: &FinSetObj, b: &FinSetObj) -> Product {
    let mut elements = Vec::with_capacity(a.size() * b.size());
    let mut t1 = Vec::new();
    let mut t2 = Vec::new();
    for (i, x) in a.elements.iter().enumerate() {
        for (j, y) in b.elements.iter().enumerate() {
            elements.push(format!("{x},{y}"));
            t1.push(i);
            t2.push(j);
        }
    }
    let obj = FinSetObj { elements };
    Product {
        proj1: FinFn { dom: obj.clone(), cod: a.clone(), table: t1 },
        proj2: FinFn { dom: obj.clone(), cod: b.clone(), table: t2 },
        obj,
    }
}

impl Product {
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        i * self.proj2.cod.size() + j
    }

    /// The unique mediating map ⟨f, g⟩ : X → A×B.
    pub fn pair(&self, f: &FinFn, g: &FinFn) -> Result<FinFn, FinSetError> {
        if f.dom != g.dom {
            return Err(FinSetError::DomainMismatch("pairing".into()));
        }
        if f.cod != self.proj1.cod || g.cod != self.proj2.cod {
            return Err(FinSetError::CodomainMismatch);
        }
        let table = f
            .table
            .iter()
            .zip(&g.table)
            .map(|(&i, &j)| self.pair_index(i, j))
            .collect();
        Ok(FinFn { dom: f.dom.clone(), cod: self.obj.clone(), table })
    }
}

#[derive(Debug, Clone)]
pub struct ProductN {
    pub obj: FinSetObj,
    pub projections: Vec<FinFn>,
    sizes: Vec<usize>,
}

/// N-ary product with comma-joined labels. The empty product is the
/// terminal singleton.
pub fn fs_product_n(factors: &[FinSetObj]) -> ProductN {
    if factors.is_empty() {
        return ProductN { obj: FinSetObj::terminal(), projections: vec![], sizes: vec![] };
    }
    let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    let total: usize = sizes.iter().product();
    let mut elements = Vec::with_capacity(total);
    let mut proj_tables: Vec<Vec<usize>> = vec![Vec::with_capacity(total); factors.len()];
    let mut tuple = vec![0usize; factors.len()];
    if total > 0 {
        loop {
            let label = tuple
                .iter()
                .enumerate()
                .map(|(k, &i)| factors[k].label(i).to_string())
                .collect::<Vec<_>>()
                .join(",");
            elements.push(label);
            for (k, &i) in tuple.iter().enumerate() {
                proj_tables[k].push(i);
            }
            let mut i = factors.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                tuple[i] += 1;
                if tuple[i] < sizes[i] {
                    break;
                }
                tuple[i] = 0;
                if i == 0 {
                    break;
                }
            }
            if tuple.iter().all(|&t| t == 0) {
                break;
            }
        }
    }
    let obj = FinSetObj { elements };
    let projections = proj_tables
        .into_iter()
        .zip(factors)
        .map(|(table, f)| FinFn { dom: obj.clone(), cod: f.clone(), table })
        .collect();
    ProductN { obj, projections, sizes }
}

impl ProductN {
    pub fn tuple_index(&self, tuple: &[usize]) -> usize {
        let mut idx = 0;
        for (k, &i) in tuple.iter().enumerate() {
            idx = idx * self.sizes[k] + i;
        }
        idx
    }

    pub fn tuple_of(&self, mut idx: usize) -> Vec<usize> {
        let mut tuple = vec![0usize; self.sizes.len()];
        for k in (0..self.sizes.len()).rev() {
            tuple[k] = idx % self.sizes[k];
            idx /= self.sizes[k];
        }
        tuple
    }
}

#[derive(Debug, Clone)]
pub struct Sum {
    pub obj: FinSetObj,
    pub inj1: FinFn,
    pub inj2: FinFn,
}

/// A + B with labels "L:a" and "R:b".
pub fn fs_sum(a: &FinSetObj, b: &FinSetObj) -> Sum {
    let mut elements: Vec<String> = a.elements.iter().map(|x| format!("L:{x}")).collect();
    elements.extend(b.elements.iter().map(|y| format!("R:{y}")));
    let obj = FinSetObj { elements };
    Sum {
        inj1: FinFn { dom: a.clone(), cod: obj.clone(), table: (0..a.size()).collect() },
        inj2: FinFn {
            dom: b.clone(),
            cod: obj.clone(),
            table: (0..b.size()).map(|j| a.size() + j).collect(),
        },
        obj,
    }
}

impl Sum {
    /// The unique copairing [f, g] : A+B → X.
    pub fn copair(&self, f: &FinFn, g: &FinFn) -> Result<FinFn, FinSetError> {
        if f.cod != g.cod {
            return Err(FinSetError::CodomainMismatch);
        }
        if f.dom != self.inj1.dom || g.dom != self.inj2.dom {
            return Err(FinSetError::DomainMismatch("copairing".into()));
        }
        let mut table = f.table.clone();
        table.extend(&g.table);
        Ok(FinFn { dom: self.obj.clone(), cod: f.cod.clone(), table })
    }
}

#[derive(Debug, Clone)]
pub struct SumN {
    pub obj: FinSetObj,
    pub injections: Vec<FinFn>,
    offsets: Vec<usize>,
}

/// N-ary disjoint union with labels "i:a".
pub fn fs_sum_n(summands: &[FinSetObj]) -> SumN {
    let mut elements = Vec::new();
    let mut offsets = Vec::with_capacity(summands.len());
    for (i, s) in summands.iter().enumerate() {
        offsets.push(elements.len());
        elements.extend(s.elements.iter().map(|x| format!("{i}:{x}")));
    }
    let obj = FinSetObj { elements };
    let injections = summands
        .iter()
        .zip(&offsets)
        .map(|(s, &off)| FinFn {
            dom: s.clone(),
            cod: obj.clone(),
            table: (0..s.size()).map(|j| off + j).collect(),
        })
        .collect();
    SumN { obj, injections, offsets }
}

impl SumN {
    pub fn inject_index(&self, summand: usize, elem: usize) -> usize {
        self.offsets[summand] + elem
    }
}

// ---------------------------------------------------------------------
// equalizers and coequalizers
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Equalizer {
    pub obj: FinSetObj,
    pub include: FinFn,
}

/// The subset {x | f(x) = g(x)} in domain order, with its inclusion.
pub fn fs_equalizer(f: &FinFn, g: &FinFn) -> Result<Equalizer, FinSetError> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(FinSetError::NotParallel);
    }
    let kept: Vec<usize> = (0..f.dom.size()).filter(|&i| f.table[i] == g.table[i]).collect();
    let obj = FinSetObj {
        elements: kept.iter().map(|&i| f.dom.elements[i].clone()).collect(),
    };
    let include = FinFn { dom: obj.clone(), cod: f.dom.clone(), table: kept };
    Ok(Equalizer { obj, include })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        // keep the least index as representative, for label determinism
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

#[derive(Debug, Clone)]
pub struct Coequalizer {
    pub obj: FinSetObj,
    pub quotient: FinFn,
}

/// The codomain quotiented by the equivalence generated by f(a) ~ g(a);
/// classes are labeled by their least member.
pub fn fs_coequalizer(f: &FinFn, g: &FinFn) -> Result<Coequalizer, FinSetError> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(FinSetError::NotParallel);
    }
    let mut uf = UnionFind::new(f.cod.size());
    for i in 0..f.dom.size() {
        uf.union(f.table[i], g.table[i]);
    }
    let mut reps = Vec::new();
    let mut class_of = vec![0usize; f.cod.size()];
    for x in 0..f.cod.size() {
        let r = uf.find(x);
        let pos = match reps.iter().position(|&p| p == r) {
            Some(p) => p,
            None => {
                reps.push(r);
                reps.len() - 1
            }
        };
        class_of[x] = pos;
    }
    let obj = FinSetObj {
        elements: reps.iter().map(|&r| f.cod.elements[r].clone()).collect(),
    };
    let quotient = FinFn { dom: f.cod.clone(), cod: obj.clone(), table: class_of };
    Ok(Coequalizer { obj, quotient })
}

// ---------------------------------------------------------------------
// exponentials
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Exponential {
    /// B^A: all function tables A → B in lexicographic order.
    pub obj: FinSetObj,
    pub base: FinSetObj,
    pub exponent: FinSetObj,
    /// eval: B^A × A → B, over fs_product(obj, exponent).
    pub eval: FinFn,
    pub eval_product: Product,
    tables: Vec<Vec<usize>>,
}

/// B^A with elements named by their tables "[b_for_a0,b_for_a1,...]".
pub fn fs_exponential(a: &FinSetObj, b: &FinSetObj) -> Exponential {
    let fns = all_fns(a, b);
    let elements = fns
        .iter()
        .map(|f| {
            let body = f
                .table
                .iter()
                .map(|&i| b.label(i).to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("[{body}]")
        })
        .collect();
    let obj = FinSetObj { elements };
    let eval_product = fs_product(&obj, a);
    let mut eval_table = Vec::with_capacity(obj.size() * a.size());
    for f in &fns {
        for x in 0..a.size() {
            eval_table.push(f.table[x]);
        }
    }
    let eval = FinFn { dom: eval_product.obj.clone(), cod: b.clone(), table: eval_table };
    Exponential {
        obj,
        base: b.clone(),
        exponent: a.clone(),
        eval,
        eval_product,
        tables: fns.into_iter().map(|f| f.table).collect(),
    }
}

impl Exponential {
    pub fn table_of(&self, elem: usize) -> &[usize] {
        &self.tables[elem]
    }

    pub fn index_of_table(&self, table: &[usize]) -> Option<usize> {
        self.tables.iter().position(|t| t == table)
    }

    /// Transpose f: X×A → B (over fs_product(x, A)) to X → B^A.
    pub fn transpose(&self, x: &FinSetObj, f: &FinFn) -> Result<FinFn, FinSetError> {
        let prod = fs_product(x, &self.exponent);
        if f.dom != prod.obj || f.cod != self.base {
            return Err(FinSetError::DomainMismatch("transpose expects X×A → B".into()));
        }
        let a = self.exponent.size();
        let table = (0..x.size())
            .map(|i| {
                let t: Vec<usize> = (0..a).map(|j| f.table[i * a + j]).collect();
                self.index_of_table(&t).expect("every table is an element")
            })
            .collect();
        Ok(FinFn { dom: x.clone(), cod: self.obj.clone(), table })
    }
}

// ---------------------------------------------------------------------
// pullbacks
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Pullback {
    pub obj: FinSetObj,
    pub proj1: FinFn,
    pub proj2: FinFn,
}

/// X ×_Z Y = {(x, y) | f(x) = g(y)} with pair labels, for f: X→Z, g: Y→Z.
pub fn fs_pullback(f: &FinFn, g: &FinFn) -> Result<Pullback, FinSetError> {
    if f.cod != g.cod {
        return Err(FinSetError::CodomainMismatch);
    }
    let mut elements = Vec::new();
    let mut t1 = Vec::new();
    let mut t2 = Vec::new();
    for i in 0..f.dom.size() {
        for j in 0..g.dom.size() {
            if f.table[i] == g.table[j] {
                elements.push(format!("{},{}", f.dom.label(i), g.dom.label(j)));
                t1.push(i);
                t2.push(j);
            }
        }
    }
    let obj = FinSetObj { elements };
    Ok(Pullback {
        proj1: FinFn { dom: obj.clone(), cod: f.dom.clone(), table: t1 },
        proj2: FinFn { dom: obj.clone(), cod: g.dom.clone(), table: t2 },
        obj,
    })
}

/// Exact criterion for a commuting square (p1, p2, f, g) with
/// f∘p1 = g∘p2 being a pullback in finite sets: ⟨p1, p2⟩ is a bijection
/// onto {(x, y) | f(x) = g(y)}.
pub fn fs_is_pullback_square(p1: &FinFn, p2: &FinFn, f: &FinFn, g: &FinFn) -> bool {
    if p1.dom != p2.dom || f.dom != p1.cod || g.dom != p2.cod || f.cod != g.cod {
        return false;
    }
    if FinFn::compose(f, p1) != FinFn::compose(g, p2) {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for i in 0..p1.dom.size() {
        if !seen.insert((p1.table[i], p2.table[i])) {
            return false;
        }
    }
    let mut expected = 0usize;
    for x in 0..f.dom.size() {
        for y in 0..g.dom.size() {
            if f.table[x] == g.table[y] {
                expected += 1;
            }
        }
    }
    seen.len() == expected
}

// ---------------------------------------------------------------------
// subobject classifier
// ---------------------------------------------------------------------

/// Ω = {⊥, ⊤}.
pub fn fs_omega() -> FinSetObj {
    FinSetObj { elements: vec!["⊥".into(), "⊤".into()] }
}

/// true: 1 → Ω.
pub fn fs_true() -> FinFn {
    FinFn { dom: FinSetObj::terminal(), cod: fs_omega(), table: vec![1] }
}

/// The characteristic map χ_m: A → Ω of a mono m: S → A; the square
/// (S → 1 → Ω, S → A → Ω) is a pullback and χ_m is unique with that
/// property.
pub fn fs_classify(m: &FinFn) -> Result<FinFn, FinSetError> {
    if !m.is_injective() {
        return Err(FinSetError::NotMono);
    }
    let mut table = vec![0usize; m.cod.size()];
    for &i in &m.table {
        table[i] = 1;
    }
    Ok(FinFn { dom: m.cod.clone(), cod: fs_omega(), table })
}

// ---------------------------------------------------------------------
// slice exponentials
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SliceExp {
    /// Σ_{a∈A} (fiber of f over a)^(fiber of g over a), elements labeled
    /// "a|[y↦x,...]".
    pub obj: FinSetObj,
    /// Projection to the base A.
    pub to_base: FinFn,
    /// Per element: base point and the fiber map (g-fiber pos → f-fiber pos).
    pub entries: Vec<(usize, Vec<usize>)>,
    /// f_fibers[a] = positions in dom(f) mapping to a.
    pub f_fibers: Vec<Vec<usize>>,
    pub g_fibers: Vec<Vec<usize>>,
}

/// The exponential (f)^(g) in the slice over A, for f, g with codomain A.
pub fn fs_slice_exponential(f: &FinFn, g: &FinFn) -> Result<SliceExp, FinSetError> {
    if f.cod != g.cod {
        return Err(FinSetError::CodomainMismatch);
    }
    let a = &f.cod;
    let fiber = |h: &FinFn, pt: usize| -> Vec<usize> {
        (0..h.dom.size()).filter(|&i| h.table[i] == pt).collect()
    };
    let f_fibers: Vec<Vec<usize>> = (0..a.size()).map(|pt| fiber(f, pt)).collect();
    let g_fibers: Vec<Vec<usize>> = (0..a.size()).map(|pt| fiber(g, pt)).collect();
    let mut elements = Vec::new();
    let mut entries = Vec::new();
    let mut base_table = Vec::new();
    for pt in 0..a.size() {
        let gf = &g_fibers[pt];
        let ff = &f_fibers[pt];
        let gdom = FinSetObj {
            elements: gf.iter().map(|&i| g.dom.elements[i].clone()).collect(),
        };
        let fcod = FinSetObj {
            elements: ff.iter().map(|&i| f.dom.elements[i].clone()).collect(),
        };
        for h in all_fns(&gdom, &fcod) {
            let body = (0..gdom.size())
                .map(|j| format!("{}↦{}", gdom.label(j), fcod.label(h.table[j])))
                .collect::<Vec<_>>()
                .join(",");
            elements.push(format!("{}|[{body}]", a.label(pt)));
            entries.push((pt, h.table.clone()));
            base_table.push(pt);
        }
    }
    let obj = FinSetObj::new(elements)?;
    let to_base = FinFn { dom: obj.clone(), cod: a.clone(), table: base_table };
    Ok(SliceExp { obj, to_base, entries, f_fibers, g_fibers })
}

impl SliceExp {
    /// Evaluate element `e` at a point of dom(g) over the same base
    /// point, returning a position in dom(f).
    pub fn eval_at(&self, e: usize, g_elem_pos_in_fiber: usize) -> usize {
        let (pt, ref map) = self.entries[e];
        self.f_fibers[pt][map[g_elem_pos_in_fiber]]
    }
}

// ---------------------------------------------------------------------
// diagrams
// ---------------------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramViolation {
    #[error("wrong number of object or morphism assignments")]
    Shape,
    #[error("morphism {m:?} has endpoints not matching the object assignment")]
    Endpoints { m: MorId },
    #[error("identity of {o:?} is not the identity table")]
    Identity { o: ObjId },
    #[error("composition not preserved at g={g:?}, f={f:?}")]
    Composition { g: MorId, f: MorId },
}

/// A functor from a finite shape category into finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub shape: CatRef,
    pub on_objects: Vec<FinSetObj>,
    pub on_morphisms: Vec<FinFn>,
}

impl Diagram {
    pub fn new(
        shape: CatRef,
        on_objects: Vec<FinSetObj>,
        on_morphisms: Vec<FinFn>,
    ) -> Result<Diagram, DiagramViolation> {
        let d = Diagram { shape, on_objects, on_morphisms };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), DiagramViolation> {
        if self.on_objects.len() != self.shape.n_objects()
            || self.on_morphisms.len() != self.shape.n_morphisms()
        {
            return Err(DiagramViolation::Shape);
        }
        for m in self.shape.morphisms() {
            let f = &self.on_morphisms[m.0];
            if *f.dom() != self.on_objects[self.shape.src(m).0]
                || *f.cod() != self.on_objects[self.shape.dst(m).0]
            {
                return Err(DiagramViolation::Endpoints { m });
            }
        }
        for o in self.shape.objects() {
            let id = self.shape.identity(o);
            if self.on_morphisms[id.0] != FinFn::identity(&self.on_objects[o.0]) {
                return Err(DiagramViolation::Identity { o });
            }
        }
        for g in self.shape.morphisms() {
            for f in self.shape.morphisms() {
                if let Some(gf) = self.shape.compose(g, f) {
                    let composed =
                        FinFn::compose(&self.on_morphisms[g.0], &self.on_morphisms[f.0])
                            .expect("typed by endpoint check");
                    if composed != self.on_morphisms[gf.0] {
                        return Err(DiagramViolation::Composition { g, f });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn value(&self, o: ObjId) -> &FinSetObj {
        &self.on_objects[o.0]
    }

    pub fn arrow(&self, m: MorId) -> &FinFn {
        &self.on_morphisms[m.0]
    }
}

// ---------------------------------------------------------------------
// bounded universal-property verification
// ---------------------------------------------------------------------

/// A candidate universal construction to verify.
#[derive(Debug, Clone)]
pub enum UniversalCandidate {
    Terminal { obj: FinSetObj },
    Initial { obj: FinSetObj },
    Product { a: FinSetObj, b: FinSetObj, obj: FinSetObj, p1: FinFn, p2: FinFn },
    Sum { a: FinSetObj, b: FinSetObj, obj: FinSetObj, i1: FinFn, i2: FinFn },
    Equalizer { f: FinFn, g: FinFn, obj: FinSetObj, include: FinFn },
    Coequalizer { f: FinFn, g: FinFn, obj: FinSetObj, quotient: FinFn },
    Exponential { a: FinSetObj, b: FinSetObj, obj: FinSetObj, eval: FinFn },
    PullbackSquare { f: FinFn, g: FinFn, obj: FinSetObj, p1: FinFn, p2: FinFn },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("universal property fails: {witness}")]
pub struct UniversalFailure {
    pub witness: String,
}

fn mediators_exactly_one(count: usize, what: &str) -> Result<(), UniversalFailure> {
    match count {
        1 => Ok(()),
        0 => Err(UniversalFailure { witness: format!("no mediating map for {what}") }),
        n => Err(UniversalFailure { witness: format!("{n} mediating maps for {what}") }),
    }
}

/// Checks existence and uniqueness of mediating maps against every test
/// object of cardinality ≤ bound and every function among them. Fails
/// with a printable counterexample.
pub fn fs_verify_universal(
    candidate: &UniversalCandidate,
    bound: usize,
) -> Result<(), UniversalFailure> {
    let tests = test_objects(bound.max(1));
    match candidate {
        UniversalCandidate::Terminal { obj } => {
            for x in &tests {
                let n = all_fns(x, obj).len();
                mediators_exactly_one(n, &format!("X of size {} into terminal", x.size()))?;
            }
            Ok(())
        }
        UniversalCandidate::Initial { obj } => {
            for x in &tests {
                let n = all_fns(obj, x).len();
                mediators_exactly_one(n, &format!("initial into X of size {}", x.size()))?;
            }
            Ok(())
        }
        UniversalCandidate::Product { a, b, obj, p1, p2 } => {
            for x in &tests {
                for f in all_fns(x, a) {
                    for g in all_fns(x, b) {
                        let n = all_fns(x, obj)
                            .into_iter()
                            .filter(|m| {
                                FinFn::compose(p1, m).as_ref() == Ok(&f)
                                    && FinFn::compose(p2, m).as_ref() == Ok(&g)
                            })
                            .count();
                        mediators_exactly_one(
                            n,
                            &format!("(f,g) from X of size {}", x.size()),
                        )?;
                    }
                }
            }
            Ok(())
        }
        UniversalCandidate::Sum { a, b, obj, i1, i2 } => {
            for x in &tests {
                for f in all_fns(a, x) {
                    for g in all_fns(b, x) {
                        let n = all_fns(obj, x)
                            .into_iter()
                            .filter(|m| {
                                FinFn::compose(m, i1).as_ref() == Ok(&f)
                                    && FinFn::compose(m, i2).as_ref() == Ok(&g)
                            })
                            .count();
                        mediators_exactly_one(
                            n,
                            &format!("[f,g] into X of size {}", x.size()),
                        )?;
                    }
                }
            }
            Ok(())
        }
        UniversalCandidate::Equalizer { f, g, obj, include } => {
            if FinFn::compose(f, include) != FinFn::compose(g, include) {
                return Err(UniversalFailure { witness: "inclusion does not equalize".into() });
            }
            for x in &tests {
                for h in all_fns(x, f.dom()) {
                    if FinFn::compose(f, &h) != FinFn::compose(g, &h) {
                        continue;
                    }
                    let n = all_fns(x, obj)
                        .into_iter()
                        .filter(|m| FinFn::compose(include, m).as_ref() == Ok(&h))
                        .count();
                    mediators_exactly_one(n, &format!("equalizing h from X of size {}", x.size()))?;
                }
            }
            Ok(())
        }
        UniversalCandidate::Coequalizer { f, g, obj, quotient } => {
            if FinFn::compose(quotient, f) != FinFn::compose(quotient, g) {
                return Err(UniversalFailure { witness: "quotient does not coequalize".into() });
            }
            for x in &tests {
                for h in all_fns(f.cod(), x) {
                    if FinFn::compose(&h, f) != FinFn::compose(&h, g) {
                        continue;
                    }
                    let n = all_fns(obj, x)
                        .into_iter()
                        .filter(|m| FinFn::compose(m, quotient).as_ref() == Ok(&h))
                        .count();
                    mediators_exactly_one(
                        n,
                        &format!("coequalizing h into X of size {}", x.size()),
                    )?;
                }
            }
            Ok(())
        }
        UniversalCandidate::Exponential { a, b, obj, eval } => {
            for x in &tests {
                let prod_xa = fs_product(x, a);
                let prod_oa = fs_product(obj, a);
                if *eval.dom() != prod_oa.obj || *eval.cod() != *b {
                    return Err(UniversalFailure {
                        witness: "eval is not a map obj×A → B".into(),
                    });
                }
                for f in all_fns(&prod_xa.obj, b) {
                    let n = all_fns(x, obj)
                        .into_iter()
                        .filter(|t| {
                            // eval ∘ (t × id_A) = f
                            let t_x_id = prod_oa
                                .pair(
                                    &FinFn::compose(t, &prod_xa.proj1).unwrap(),
                                    &prod_xa.proj2,
                                )
                                .unwrap();
                            FinFn::compose(eval, &t_x_id).as_ref() == Ok(&f)
                        })
                        .count();
                    mediators_exactly_one(n, &format!("transpose from X of size {}", x.size()))?;
                }
            }
            Ok(())
        }
        UniversalCandidate::PullbackSquare { f, g, obj, p1, p2 } => {
            if FinFn::compose(f, p1) != FinFn::compose(g, p2) {
                return Err(UniversalFailure { witness: "square does not commute".into() });
            }
            let _ = obj;
            for x in &tests {
                for u in all_fns(x, f.dom()) {
                    for v in all_fns(x, g.dom()) {
                        if FinFn::compose(f, &u) != FinFn::compose(g, &v) {
                            continue;
                        }
                        let n = all_fns(x, p1.dom())
                            .into_iter()
                            .filter(|m| {
                                FinFn::compose(p1, m).as_ref() == Ok(&u)
                                    && FinFn::compose(p2, m).as_ref() == Ok(&v)
                            })
                            .count();
                        mediators_exactly_one(
                            n,
                            &format!("(u,v) from X of size {}", x.size()),
                        )?;
                    }
                }
            }
            Ok(())
        }
    }
}
