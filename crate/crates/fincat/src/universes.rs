//! A symbolic universe-level constraint solver. Levels are variables
//! plus non-negative offsets, optionally under max; constraints are
//! ≤ / < / =. After normalization everything becomes atomic constraints
//! `x + p REL y + q`, which form a weighted graph; the constraint set is
//! inconsistent exactly when some cycle has positive total weight, and
//! every inconsistency verdict carries such a cycle as a witness that
//! re-validates independently.
//!
//! Size signatures model how a proof assistant with universe
//! polymorphism assigns levels to the types of objects and arrows of a
//! category, and the theorem/scenario suite reproduces the classical
//! smallness/largeness phenomena (a complete small category must be a
//! preorder; no exponential-closed category of categories can contain
//! the category of sets; and so on).

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UniverseError {
    #[error("malformed constraint: {0}")]
    MalformedConstraint(String),
    #[error("unknown signature name: {0}")]
    UnknownName(String),
    #[error("unknown theorem: {0}")]
    UnknownTheorem(String),
    #[error("signature kind mismatch: {0}")]
    SignatureKindMismatch(String),
}

/// A level expression: a variable with a non-negative offset, or the
/// max of a non-empty list of level expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelExpr {
    Var { id: usize, offset: u32 },
    Max(Vec<LevelExpr>),
}

impl LevelExpr {
    pub fn var(id: usize) -> LevelExpr {
        LevelExpr::Var { id, offset: 0 }
    }

    pub fn shifted(id: usize, offset: u32) -> LevelExpr {
        LevelExpr::Var { id, offset }
    }

    /// The expression plus n, distributed over max.
    pub fn plus(&self, n: u32) -> LevelExpr {
        match self {
            LevelExpr::Var { id, offset } => LevelExpr::Var { id: *id, offset: offset + n },
            LevelExpr::Max(es) => LevelExpr::Max(es.iter().map(|e| e.plus(n)).collect()),
        }
    }

    /// The variable leaves, or an error if the expression is expected
    /// to be max-free.
    fn as_var(&self) -> Result<(usize, u32), UniverseError> {
        match self {
            LevelExpr::Var { id, offset } => Ok((*id, *offset)),
            LevelExpr::Max(_) => Err(UniverseError::MalformedConstraint(
                "max is not allowed here".into(),
            )),
        }
    }

    fn leaves(&self, out: &mut Vec<(usize, u32)>) {
        match self {
            LevelExpr::Var { id, offset } => out.push((*id, *offset)),
            LevelExpr::Max(es) => {
                for e in es {
                    e.leaves(out);
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Le,
    Lt,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub rel: Rel,
    pub lhs: LevelExpr,
    pub rhs: LevelExpr,
}

impl Constraint {
    pub fn le(lhs: LevelExpr, rhs: LevelExpr) -> Constraint {
        Constraint { rel: Rel::Le, lhs, rhs }
    }

    pub fn lt(lhs: LevelExpr, rhs: LevelExpr) -> Constraint {
        Constraint { rel: Rel::Lt, lhs, rhs }
    }

    pub fn eq(lhs: LevelExpr, rhs: LevelExpr) -> Constraint {
        Constraint { rel: Rel::Eq, lhs, rhs }
    }
}

/// A normalized constraint `lhs.0 + lhs.1 REL rhs.0 + rhs.1` with
/// REL ∈ {≤, <}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Atom {
    pub lhs: (usize, u32),
    pub strict: bool,
    pub rhs: (usize, u32),
}

impl Atom {
    /// Edge weight: the cycle criterion sums these; positive total
    /// weight on a cycle forces v < v for some variable.
    pub fn weight(&self) -> i64 {
        self.lhs.1 as i64 - self.rhs.1 as i64 + self.strict as i64
    }
}

/// Expands = both ways and max conjunctively. max may appear only on
/// the smaller side of ≤ / < (max(a,b) ≤ c ⟺ a ≤ c ∧ b ≤ c); on the
/// larger side the expansion would be disjunctive, which the cycle
/// criterion cannot express, so it is rejected.
pub fn normalize(cs: &[Constraint]) -> Result<Vec<Atom>, UniverseError> {
    let mut atoms = Vec::new();
    for c in cs {
        match c.rel {
            Rel::Eq => {
                let l = c.lhs.as_var()?;
                let r = c.rhs.as_var()?;
                atoms.push(Atom { lhs: l, strict: false, rhs: r });
                atoms.push(Atom { lhs: r, strict: false, rhs: l });
            }
            Rel::Le | Rel::Lt => {
                let r = c.rhs.as_var().map_err(|_| {
                    UniverseError::MalformedConstraint(
                        "max on the larger side of an inequality".into(),
                    )
                })?;
                let mut ls = Vec::new();
                c.lhs.leaves(&mut ls);
                for l in ls {
                    atoms.push(Atom { lhs: l, strict: c.rel == Rel::Lt, rhs: r });
                }
            }
        }
    }
    atoms.sort();
    atoms.dedup();
    Ok(atoms)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Inconsistent { cycle: Vec<Atom> },
}

impl Verdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Verdict::Consistent)
    }
}

/// Longest-path relaxation over the atom graph; a relaxation still
/// possible after |vars| rounds exposes a positive cycle, which is
/// extracted by walking predecessors.
pub fn check_consistency(cs: &[Constraint]) -> Result<Verdict, UniverseError> {
    let atoms = normalize(cs)?;
    let n = atoms
        .iter()
        .map(|a| a.lhs.0.max(a.rhs.0) + 1)
        .max()
        .unwrap_or(0);
    let mut dist = vec![0i64; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    for _ in 0..=n {
        let mut changed = false;
        for (ai, a) in atoms.iter().enumerate() {
            let cand = dist[a.lhs.0] + a.weight();
            if cand > dist[a.rhs.0] {
                dist[a.rhs.0] = cand;
                pred[a.rhs.0] = Some(ai);
                changed = true;
            }
        }
        if !changed {
            return Ok(Verdict::Consistent);
        }
    }
    // still relaxable: some node is reachable from a positive cycle
    let start_atom = atoms
        .iter()
        .position(|a| dist[a.lhs.0] + a.weight() > dist[a.rhs.0])
        .expect("a relaxation was performed in the last round");
    pred[atoms[start_atom].rhs.0] = Some(start_atom);
    let mut cur = atoms[start_atom].rhs.0;
    for _ in 0..n {
        cur = atoms[pred[cur].expect("on a path from the cycle")].lhs.0;
    }
    let start = cur;
    let mut cycle = Vec::new();
    loop {
        let ai = pred[cur].expect("inside the cycle");
        cycle.push(atoms[ai]);
        cur = atoms[ai].lhs.0;
        if cur == start {
            break;
        }
    }
    cycle.reverse();
    Ok(Verdict::Inconsistent { cycle })
}

/// Independent witness validation: the atoms must chain into a closed
/// cycle whose summed weights are positive.
pub fn revalidate_cycle(cycle: &[Atom]) -> bool {
    if cycle.is_empty() {
        return false;
    }
    for (i, a) in cycle.iter().enumerate() {
        let next = &cycle[(i + 1) % cycle.len()];
        if a.rhs.0 != next.lhs.0 {
            return false;
        }
    }
    cycle.iter().map(Atom::weight).sum::<i64>() > 0
}

// ---------------------------------------------------------------------
// size signatures
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigKind {
    /// category(i, j): objects at level i, arrows at level j, the
    /// signature itself inhabiting Type at max(i+1, j+1).
    Category,
    /// set(i): the category of types at level i; objects at i+1,
    /// arrows at i, so arrows are strictly below objects.
    Set,
    /// cat(i, j, k, l): a category of categories at (i, j) whose member
    /// categories carry levels (k, l).
    Cat,
}

#[derive(Debug, Clone)]
pub struct SizeSig {
    pub name: String,
    pub kind: SigKind,
    /// Variable ids in declaration order: category [i,j]; set [i];
    /// cat [i,j,k,l].
    pub vars: Vec<usize>,
    pub obj_type_level: LevelExpr,
    pub hom_type_level: LevelExpr,
    /// The level of the signature's own type.
    pub type_level: LevelExpr,
    pub rigid: bool,
}

/// Registry of level variables, registered signatures, and accumulated
/// constraints.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    pub var_names: Vec<String>,
    pub constraints: Vec<Constraint>,
    sigs: Vec<SizeSig>,
}

impl Registry {
    pub fn new() -> Registry {
        Registry::default()
    }

    pub fn fresh_var(&mut self, name: impl Into<String>) -> usize {
        self.var_names.push(name.into());
        self.var_names.len() - 1
    }

    pub fn sig(&self, name: &str) -> Option<&SizeSig> {
        self.sigs.iter().find(|s| s.name == name)
    }

    pub fn add_constraint(&mut self, c: Constraint) {
        self.constraints.push(c);
    }

    pub fn check(&self) -> Result<Verdict, UniverseError> {
        check_consistency(&self.constraints)
    }

    fn build_sig(&mut self, kind: SigKind, name: &str, suffix: &str) -> SizeSig {
        let var = |reg: &mut Registry, v: &str| reg.fresh_var(format!("{name}.{v}{suffix}"));
        match kind {
            SigKind::Category => {
                let i = var(self, "i");
                let j = var(self, "j");
                SizeSig {
                    name: name.into(),
                    kind,
                    vars: vec![i, j],
                    obj_type_level: LevelExpr::var(i),
                    hom_type_level: LevelExpr::var(j),
                    type_level: LevelExpr::Max(vec![
                        LevelExpr::shifted(i, 1),
                        LevelExpr::shifted(j, 1),
                    ]),
                    rigid: false,
                }
            }
            SigKind::Set => {
                let i = var(self, "i");
                let sig = SizeSig {
                    name: name.into(),
                    kind,
                    vars: vec![i],
                    obj_type_level: LevelExpr::shifted(i, 1),
                    hom_type_level: LevelExpr::var(i),
                    type_level: LevelExpr::shifted(i, 1),
                    rigid: false,
                };
                // strictness of the arrow level: hom + 1 ≤ obj
                self.add_constraint(Constraint::le(
                    sig.hom_type_level.plus(1),
                    sig.obj_type_level.clone(),
                ));
                sig
            }
            SigKind::Cat => {
                let i = var(self, "i");
                let j = var(self, "j");
                let k = var(self, "k");
                let l = var(self, "l");
                // member categories at (k, l) must fit in the objects
                // (strictly) and arrows of the ambient category
                self.add_constraint(Constraint::le(
                    LevelExpr::shifted(k, 1),
                    LevelExpr::var(i),
                ));
                self.add_constraint(Constraint::le(
                    LevelExpr::shifted(l, 1),
                    LevelExpr::var(i),
                ));
                self.add_constraint(Constraint::le(LevelExpr::var(k), LevelExpr::var(j)));
                self.add_constraint(Constraint::le(LevelExpr::var(l), LevelExpr::var(j)));
                SizeSig {
                    name: name.into(),
                    kind,
                    vars: vec![i, j, k, l],
                    obj_type_level: LevelExpr::var(i),
                    hom_type_level: LevelExpr::var(j),
                    type_level: LevelExpr::Max(vec![
                        LevelExpr::shifted(i, 1),
                        LevelExpr::shifted(j, 1),
                    ]),
                    rigid: false,
                }
            }
        }
    }

    /// Registers a named signature with fresh variables and its
    /// generated constraints. Re-registering a rigid name allocates a
    /// fresh copy and adds variable-by-variable equality constraints
    /// (monomorphic instances: two typings of the same thing must agree
    /// on levels).
    pub fn register(
        &mut self,
        kind: SigKind,
        name: &str,
        rigid: bool,
    ) -> Result<SizeSig, UniverseError> {
        if let Some(existing) = self.sig(name).cloned() {
            if existing.kind != kind {
                return Err(UniverseError::SignatureKindMismatch(format!(
                    "{name} already registered with a different kind"
                )));
            }
            if !existing.rigid {
                return Err(UniverseError::MalformedConstraint(format!(
                    "{name} already registered and not rigid"
                )));
            }
            let copies = self.sigs.iter().filter(|s| s.name == name).count();
            let suffix = "'".repeat(copies);
            let mut sig = self.build_sig(kind, name, &suffix);
            sig.rigid = true;
            for (&old, &new) in existing.vars.iter().zip(&sig.vars) {
                self.add_constraint(Constraint::eq(LevelExpr::var(old), LevelExpr::var(new)));
            }
            self.sigs.push(sig.clone());
            return Ok(sig);
        }
        let mut sig = self.build_sig(kind, name, "");
        sig.rigid = rigid;
        self.sigs.push(sig.clone());
        Ok(sig)
    }

    fn var_name(&self, id: usize) -> &str {
        &self.var_names[id]
    }

    pub fn render_atom(&self, a: &Atom) -> String {
        let side = |(id, off): (usize, u32)| {
            if off == 0 {
                self.var_name(id).to_string()
            } else {
                format!("{}+{}", self.var_name(id), off)
            }
        };
        format!(
            "{} {} {}",
            side(a.lhs),
            if a.strict { "<" } else { "≤" },
            side(a.rhs)
        )
    }

    pub fn render_constraint(&self, c: &Constraint) -> String {
        let rel = match c.rel {
            Rel::Le => "≤",
            Rel::Lt => "<",
            Rel::Eq => "=",
        };
        format!("{} {} {}", self.render_expr(&c.lhs), rel, self.render_expr(&c.rhs))
    }

    pub fn render_expr(&self, e: &LevelExpr) -> String {
        match e {
            LevelExpr::Var { id, offset: 0 } => self.var_name(*id).to_string(),
            LevelExpr::Var { id, offset } => format!("{}+{}", self.var_name(*id), offset),
            LevelExpr::Max(es) => format!(
                "max({})",
                es.iter().map(|x| self.render_expr(x)).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

// ---------------------------------------------------------------------
// theorems
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// A complete category is a preorder — applicable only when the
    /// object level is at most the arrow level.
    CompletePreorder,
    /// A category of categories has exponentials (functor categories)
    /// only when its arrow level and both member levels coincide.
    CatExponentials,
    /// Membership of the category of sets in an exponential-closed
    /// category of categories.
    SetInCat,
}

impl Theorem {
    pub fn from_name(name: &str) -> Result<Theorem, UniverseError> {
        match name {
            "complete_preorder" => Ok(Theorem::CompletePreorder),
            "cat_exponentials" => Ok(Theorem::CatExponentials),
            "set_in_cat" => Ok(Theorem::SetInCat),
            other => Err(UniverseError::UnknownTheorem(other.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: String,
    /// Rendered constraints the theorem added.
    pub added: Vec<String>,
    pub verdict: Verdict,
    /// Rendered inconsistency cycle, empty when consistent.
    pub cycle: Vec<String>,
    pub cycle_revalidated: bool,
}

/// Applies a theorem to registered signatures: adds the constraints it
/// demands and reruns the solver over everything accumulated so far.
pub fn apply_theorem(
    reg: &mut Registry,
    theorem: Theorem,
    sig_names: &[&str],
) -> Result<TheoremReport, UniverseError> {
    let need = |n: usize| {
        if sig_names.len() != n {
            Err(UniverseError::SignatureKindMismatch(format!(
                "theorem expects {n} signature(s), got {}",
                sig_names.len()
            )))
        } else {
            Ok(())
        }
    };
    let lookup = |reg: &Registry, name: &str| {
        reg.sig(name)
            .cloned()
            .ok_or_else(|| UniverseError::UnknownName(name.into()))
    };
    let mut added = Vec::new();
    let mut push = |reg: &mut Registry, c: Constraint| {
        added.push(reg.render_constraint(&c));
        reg.add_constraint(c);
    };
    let name;
    match theorem {
        Theorem::CompletePreorder => {
            need(1)?;
            name = "complete_preorder";
            let sig = lookup(reg, sig_names[0])?;
            push(
                reg,
                Constraint::le(sig.obj_type_level.clone(), sig.hom_type_level.clone()),
            );
        }
        Theorem::CatExponentials => {
            need(1)?;
            name = "cat_exponentials";
            let sig = lookup(reg, sig_names[0])?;
            if sig.kind != SigKind::Cat {
                return Err(UniverseError::SignatureKindMismatch(
                    "cat_exponentials needs a cat signature".into(),
                ));
            }
            let (j, k, l) = (sig.vars[1], sig.vars[2], sig.vars[3]);
            push(reg, Constraint::eq(LevelExpr::var(j), LevelExpr::var(k)));
            push(reg, Constraint::eq(LevelExpr::var(k), LevelExpr::var(l)));
        }
        Theorem::SetInCat => {
            need(2)?;
            name = "set_in_cat";
            let cat = lookup(reg, sig_names[0])?;
            let set = lookup(reg, sig_names[1])?;
            if cat.kind != SigKind::Cat || set.kind != SigKind::Set {
                return Err(UniverseError::SignatureKindMismatch(
                    "set_in_cat needs (cat, set) signatures".into(),
                ));
            }
            let (j, k, l) = (cat.vars[1], cat.vars[2], cat.vars[3]);
            // exponentials: j = k = l
            push(reg, Constraint::eq(LevelExpr::var(j), LevelExpr::var(k)));
            push(reg, Constraint::eq(LevelExpr::var(k), LevelExpr::var(l)));
            // membership: the member slot carries exactly Set's levels
            push(reg, Constraint::eq(LevelExpr::var(k), set.obj_type_level.clone()));
            push(reg, Constraint::eq(LevelExpr::var(l), set.hom_type_level.clone()));
        }
    }
    let verdict = reg.check()?;
    let (cycle, cycle_revalidated) = match &verdict {
        Verdict::Consistent => (Vec::new(), true),
        Verdict::Inconsistent { cycle } => (
            cycle.iter().map(|a| reg.render_atom(a)).collect(),
            revalidate_cycle(cycle),
        ),
    };
    Ok(TheoremReport {
        theorem: name.into(),
        added,
        verdict,
        cycle,
        cycle_revalidated,
    })
}

// ---------------------------------------------------------------------
// scenarios
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// complete_preorder applied to the category of sets: refused with
    /// a universe inconsistency.
    SetCompletePreorder,
    /// complete_preorder applied to a small category whose object and
    /// arrow levels coincide: accepted.
    SmallCompletePreorder,
    /// exponentials force the arrow level and both member levels of a
    /// category of categories to coincide.
    CatExponentials,
    /// no exponential-closed category of categories contains the
    /// category of sets.
    SetInCat,
    /// taking the one-element type as the terminal object of the
    /// category of sets pins its arrow level to the bottom universe —
    /// and, notably, only the arrow level. Reproduced as stated, with
    /// no claim about why the restriction is one-sided.
    UnitTerminal,
}

impl Scenario {
    pub fn from_name(name: &str) -> Result<Scenario, UniverseError> {
        match name {
            "set-complete-preorder" => Ok(Scenario::SetCompletePreorder),
            "small-complete-preorder" => Ok(Scenario::SmallCompletePreorder),
            "cat-exponentials" => Ok(Scenario::CatExponentials),
            "set-in-cat" => Ok(Scenario::SetInCat),
            "unit-terminal" => Ok(Scenario::UnitTerminal),
            other => Err(UniverseError::UnknownName(other.into())),
        }
    }

    pub fn all() -> [Scenario; 5] {
        [
            Scenario::SetCompletePreorder,
            Scenario::SmallCompletePreorder,
            Scenario::CatExponentials,
            Scenario::SetInCat,
            Scenario::UnitTerminal,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Scenario::SetCompletePreorder => "set-complete-preorder",
            Scenario::SmallCompletePreorder => "small-complete-preorder",
            Scenario::CatExponentials => "cat-exponentials",
            Scenario::SetInCat => "set-in-cat",
            Scenario::UnitTerminal => "unit-terminal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioReport {
    pub name: String,
    pub description: String,
    pub consistent: bool,
    pub added: Vec<String>,
    pub cycle: Vec<String>,
    pub cycle_revalidated: bool,
}

pub fn run_scenario(s: Scenario) -> ScenarioReport {
    let mut reg = Registry::new();
    let from_theorem = |description: &str, rep: TheoremReport| ScenarioReport {
        name: s.name().into(),
        description: description.into(),
        consistent: rep.verdict.is_consistent(),
        added: rep.added,
        cycle: rep.cycle,
        cycle_revalidated: rep.cycle_revalidated,
    };
    match s {
        Scenario::SetCompletePreorder => {
            reg.register(SigKind::Set, "Set", false).unwrap();
            let rep = apply_theorem(&mut reg, Theorem::CompletePreorder, &["Set"]).unwrap();
            from_theorem(
                "a complete category is a preorder: inapplicable to the category of sets",
                rep,
            )
        }
        Scenario::SmallCompletePreorder => {
            let sig = reg.register(SigKind::Category, "C", false).unwrap();
            reg.add_constraint(Constraint::eq(
                sig.obj_type_level.clone(),
                sig.hom_type_level.clone(),
            ));
            let rep = apply_theorem(&mut reg, Theorem::CompletePreorder, &["C"]).unwrap();
            from_theorem(
                "a complete category is a preorder: applicable to a small category",
                rep,
            )
        }
        Scenario::CatExponentials => {
            reg.register(SigKind::Cat, "Cat", false).unwrap();
            let rep = apply_theorem(&mut reg, Theorem::CatExponentials, &["Cat"]).unwrap();
            from_theorem(
                "exponentials restrict a category of categories to one level shape",
                rep,
            )
        }
        Scenario::SetInCat => {
            reg.register(SigKind::Cat, "Cat", false).unwrap();
            reg.register(SigKind::Set, "Set", false).unwrap();
            let rep =
                apply_theorem(&mut reg, Theorem::SetInCat, &["Cat", "Set"]).unwrap();
            from_theorem(
                "no exponential-closed category of categories contains the category of sets",
                rep,
            )
        }
        Scenario::UnitTerminal => {
            let set = reg.register(SigKind::Set, "Set", false).unwrap();
            let bottom = reg.fresh_var("bottom");
            let forced =
                Constraint::eq(set.hom_type_level.clone(), LevelExpr::var(bottom));
            let added = vec![reg.render_constraint(&forced)];
            reg.add_constraint(forced);
            let consistent = reg.check().unwrap().is_consistent();
            ScenarioReport {
                name: s.name().into(),
                description: "the one-element terminal object pins the arrow level of the \
                              category of sets to the bottom universe, but not the object level"
                    .into(),
                consistent,
                added,
                cycle: Vec::new(),
                cycle_revalidated: true,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycle_is_inconsistent() {
        let cs = vec![
            Constraint::lt(LevelExpr::var(0), LevelExpr::var(1)),
            Constraint::lt(LevelExpr::var(1), LevelExpr::var(0)),
        ];
        match check_consistency(&cs).unwrap() {
            Verdict::Inconsistent { cycle } => {
                assert_eq!(cycle.len(), 2);
                assert!(revalidate_cycle(&cycle));
            }
            v => panic!("expected inconsistency, got {v:?}"),
        }
    }

    #[test]
    fn chains_are_consistent() {
        let cs = vec![
            Constraint::le(LevelExpr::var(0), LevelExpr::var(1)),
            Constraint::le(LevelExpr::var(1), LevelExpr::var(2)),
            Constraint::lt(LevelExpr::var(0), LevelExpr::var(2)),
        ];
        assert_eq!(check_consistency(&cs).unwrap(), Verdict::Consistent);
    }

    #[test]
    fn max_expands_on_the_smaller_side_only() {
        let ok = vec![Constraint::le(
            LevelExpr::Max(vec![LevelExpr::var(0), LevelExpr::var(1)]),
            LevelExpr::var(2),
        )];
        assert_eq!(normalize(&ok).unwrap().len(), 2);
        let bad = vec![Constraint::le(
            LevelExpr::var(0),
            LevelExpr::Max(vec![LevelExpr::var(1), LevelExpr::var(2)]),
        )];
        assert!(matches!(
            normalize(&bad),
            Err(UniverseError::MalformedConstraint(_))
        ));
        let bad_eq = vec![Constraint::eq(
            LevelExpr::Max(vec![LevelExpr::var(0)]),
            LevelExpr::var(1),
        )];
        assert!(normalize(&bad_eq).is_err());
    }

    #[test]
    fn set_complete_preorder_is_the_classic_inconsistency() {
        let rep = run_scenario(Scenario::SetCompletePreorder);
        assert!(!rep.consistent);
        assert!(rep.cycle_revalidated);
        // the trace is the self-loop i+1 ≤ i
        assert_eq!(rep.cycle, vec!["Set.i+1 ≤ Set.i".to_string()]);
    }

    #[test]
    fn small_complete_preorder_is_consistent() {
        let rep = run_scenario(Scenario::SmallCompletePreorder);
        assert!(rep.consistent);
    }

    #[test]
    fn cat_exponentials_forces_level_equalities() {
        let rep = run_scenario(Scenario::CatExponentials);
        assert!(rep.consistent);
        assert_eq!(
            rep.added,
            vec!["Cat.j = Cat.k".to_string(), "Cat.k = Cat.l".to_string()]
        );
    }

    #[test]
    fn set_in_cat_is_inconsistent_with_revalidated_cycle() {
        let rep = run_scenario(Scenario::SetInCat);
        assert!(!rep.consistent);
        assert!(rep.cycle_revalidated);
        assert!(!rep.cycle.is_empty());
    }

    #[test]
    fn unit_terminal_documents_a_one_sided_restriction() {
        let rep = run_scenario(Scenario::UnitTerminal);
        assert!(rep.consistent);
        assert_eq!(rep.added, vec!["Set.i = bottom".to_string()]);
    }

    #[test]
    fn monotonicity_of_inconsistency() {
        let mut cs = vec![
            Constraint::lt(LevelExpr::var(0), LevelExpr::var(1)),
            Constraint::le(LevelExpr::var(1), LevelExpr::var(0)),
        ];
        assert!(!check_consistency(&cs).unwrap().is_consistent());
        cs.push(Constraint::le(LevelExpr::var(2), LevelExpr::var(0)));
        cs.push(Constraint::eq(LevelExpr::var(3), LevelExpr::var(3)));
        assert!(!check_consistency(&cs).unwrap().is_consistent());
    }

    #[test]
    fn determinism_of_verdicts_and_witnesses() {
        for s in Scenario::all() {
            assert_eq!(run_scenario(s), run_scenario(s));
        }
    }

    #[test]
    fn rigidity_rule_adds_equalities() {
        let mut reg = Registry::new();
        let first = reg.register(SigKind::Category, "C", true).unwrap();
        let before = reg.constraints.len();
        let second = reg.register(SigKind::Category, "C", true).unwrap();
        assert_eq!(reg.constraints.len(), before + 2);
        assert_ne!(first.vars, second.vars);
        // the copies are now pinned together: separating them breaks
        reg.add_constraint(Constraint::lt(
            LevelExpr::var(first.vars[0]),
            LevelExpr::var(second.vars[0]),
        ));
        assert!(!reg.check().unwrap().is_consistent());
        // and re-registering under a different kind is rejected
        assert!(matches!(
            reg.register(SigKind::Set, "C", true),
            Err(UniverseError::SignatureKindMismatch(_))
        ));
    }

    #[test]
    fn builtin_levels_match_their_shapes() {
        let mut reg = Registry::new();
        let cat = reg.register(SigKind::Category, "C", false).unwrap();
        assert_eq!(reg.render_expr(&cat.type_level), "max(C.i+1, C.j+1)");
        let set = reg.register(SigKind::Set, "S", false).unwrap();
        assert_eq!(reg.render_expr(&set.obj_type_level), "S.i+1");
        assert_eq!(reg.render_expr(&set.hom_type_level), "S.i");
        // generated strictness constraint is recorded and consistent
        assert!(reg.check().unwrap().is_consistent());
    }
}
