//! Limits of set-valued diagrams via products and equalizers, checked
//! against brute-force matching families, plus the complete-implies-
//! preorder scan.

use fincat::cat::FinCat;
use fincat::corpus::{complete_corpus, scan_complete_preorder};
use fincat::finset::{Diagram, FinFn, FinSetObj};
use fincat::limits::{complete_preorder_check, finset_colimit, finset_limit, matching_families};

fn main() {
    // a cospan x -> z <- y whose limit is the pullback
    let spec = fincat::parse::parse_spec(include_str!("data/cospan.fc")).unwrap();
    let d = &spec.diagrams[0].diagram;
    let cone = finset_limit(d);
    let families = matching_families(d);
    println!(
        "cospan limit: {} elements, {} matching families",
        cone.apex.size(),
        families.len()
    );
    assert_eq!(cone.apex.size(), 4);
    assert_eq!(families.len(), 4);

    let cocone = finset_colimit(d);
    println!("cospan colimit: {} elements", cocone.apex.size());

    // a parallel pair whose limit is an equalizer
    let pp = FinCat::parallel_pair();
    let s = FinSetObj::canonical(3);
    let t = FinSetObj::canonical(3);
    let f = FinFn::new(s.clone(), t.clone(), vec![0, 1, 2]).unwrap();
    let g = FinFn::new(s.clone(), t.clone(), vec![0, 1, 1]).unwrap();
    // morphism order in the built-in shape: both identities, then the pair
    let ids = [FinFn::identity(&s), FinFn::identity(&t)];
    let d2 = Diagram::new(pp.clone(), vec![s, t], vec![ids[0].clone(), ids[1].clone(), f, g])
        .unwrap();
    println!(
        "parallel-pair limit: {} elements (agreement points of f and g)",
        finset_limit(&d2).apex.size()
    );

    // complete lattices pass the completeness proxy and are preorders
    for (name, c) in complete_corpus() {
        let r = complete_preorder_check(&c);
        assert!(r.complete && r.preorder == Some(true));
        println!(
            "{name}: complete, preorder, hom-power identity on {} instances",
            r.hom_power_instances
        );
    }

    // exhaustive small-scale scan: no complete non-preorder exists
    let scan = scan_complete_preorder(3, 8);
    println!(
        "scan <=3 objects / <=8 morphisms: {} profiles, {} preorder, {} pruned, \
         {} enumerated, {} counterexamples",
        scan.profiles_total,
        scan.profiles_preorder,
        scan.profiles_pruned,
        scan.categories_checked,
        scan.counterexamples
    );
    assert_eq!(scan.counterexamples, 0);
}
