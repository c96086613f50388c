//! Opposite categories: the double opposite is the same table, and
//! taking opposites reverses functor composition.

use fincat::cat::{
    compose_functors, enumerate_functors, opposite_category, opposite_functor, FinCat,
};
use fincat::corpus::duality_corpus;

fn main() {
    let corpus = duality_corpus();
    println!("corpus: {} categories", corpus.len());

    let mut involutions = 0;
    for c in &corpus {
        let back = opposite_category(&opposite_category(c));
        assert_eq!(**c, *back, "double opposite must be table-identical");
        involutions += 1;
    }
    println!("opposite . opposite is the identity on all {involutions} categories");

    // functor composition reverses cleanly: (g . f)^op = g^op . f^op
    let a = FinCat::walking_arrow();
    let b = FinCat::chain(3);
    let mut checked = 0;
    for f in enumerate_functors(&a, &b) {
        for g in enumerate_functors(&b, &a) {
            let gf = compose_functors(&g, &f).unwrap();
            let lhs = opposite_functor(&gf);
            let rhs = compose_functors(&opposite_functor(&g), &opposite_functor(&f)).unwrap();
            assert_eq!(lhs, rhs);
            checked += 1;
        }
    }
    println!("(g . f)^op = g^op . f^op for {checked} composable pairs");
}
