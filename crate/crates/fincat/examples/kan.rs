//! Pointwise Kan extensions over comma categories, with the limit as
//! the special case of extending along the functor to the point.

use fincat::cat::{CatRef, Functor};
use fincat::kan::{kan_local_check_set, left_kan_set, right_kan_set};
use fincat::limits::{finset_colimit, finset_limit};
use fincat::parse::parse_spec;

fn main() {
    let spec = parse_spec(include_str!("data/kan.fc")).unwrap();
    let d = &spec.diagrams[0].diagram;
    let p = &spec.functor("p").unwrap().functor;

    let ran = right_kan_set(d, p).unwrap();
    let sizes: Vec<usize> = ran.extension.on_objects.iter().map(|o| o.size()).collect();
    println!("Ran_p F values: {sizes:?}");
    kan_local_check_set(&ran, d, p, 2).unwrap();
    println!("local universal property holds: |Nat(M, Ran)| = |Nat(M . p, F)| for all M");

    let lan = left_kan_set(d, p).unwrap();
    let sizes: Vec<usize> = lan.extension.on_objects.iter().map(|o| o.size()).collect();
    println!("Lan_p F values: {sizes:?}");

    // extension along the unique functor to the terminal category
    // computes exactly the (co)limit
    let shape: CatRef = d.shape.clone();
    let bang = Functor::to_unit(&shape);
    let ran_pt = right_kan_set(d, &bang).unwrap();
    let lim = finset_limit(d);
    assert_eq!(ran_pt.extension.on_objects[0].size(), lim.apex.size());
    println!(
        "Ran along ! has value size {} = limit size {}",
        ran_pt.extension.on_objects[0].size(),
        lim.apex.size()
    );

    let lan_pt = left_kan_set(d, &bang).unwrap();
    let colim = finset_colimit(d);
    assert_eq!(lan_pt.extension.on_objects[0].size(), colim.apex.size());
    println!(
        "Lan along ! has value size {} = colimit size {}",
        lan_pt.extension.on_objects[0].size(),
        colim.apex.size()
    );
}
