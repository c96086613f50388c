//! Categories of algebras and coalgebras for an endofunctor, the
//! forgetful functor, and Lambek's observation that an initial
//! algebra's structure arrow is an isomorphism.

use fincat::algebra::{algebra_category, coalgebra_category, lambek_check};
use fincat::cat::{enumerate_functors, FinCat, Functor};

fn main() {
    let c = FinCat::chain(3);
    let t = Functor::identity(&c);
    let alg = algebra_category(&t).unwrap();
    println!(
        "identity endofunctor on chain(3): {} algebras, {} morphisms",
        alg.cat.n_objects(),
        alg.cat.n_morphisms()
    );
    alg.forgetful.validate().unwrap();
    println!("forgetful functor to the base validates");

    let initial = lambek_check(&alg).unwrap().expect("the bottom element is initial");
    println!(
        "initial algebra: carrier {}, structure arrow is an isomorphism",
        initial.carrier.0
    );

    let coalg = coalgebra_category(&t).unwrap();
    println!(
        "dual side: {} coalgebras, {} morphisms",
        coalg.cat.n_objects(),
        coalg.cat.n_morphisms()
    );

    // every endofunctor of a small monoid gives a lawful algebra category
    let z3 = FinCat::monoid(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], 0).unwrap();
    for (i, t) in enumerate_functors(&z3, &z3).iter().enumerate() {
        let alg = algebra_category(t).unwrap();
        alg.cat.validate().unwrap();
        println!(
            "Z/3 endofunctor {i}: {} algebras, {} morphisms",
            alg.cat.n_objects(),
            alg.cat.n_morphisms()
        );
    }
}
