//! Adjunctions three ways: hom-set bijections, unit/counit pairs with
//! the triangle identities, and universal arrows — plus conversions
//! between the presentations and concrete finite-set adjunctions.

use fincat::adjunctions::{
    adj_convert, adj_dual, find_adjunction, fs_adjunction_witness, galois_connection,
    hom_to_unit_counit, unit_counit_to_hom, validate_adjunction, AdjForm, Adjunction, FsAdjKind,
};

fn main() {
    // a Galois connection between the chains 0<1 and 0<1<2
    let (f, g) = galois_connection();
    let adj = find_adjunction(&f, &g).expect("the floor map is right adjoint to the inclusion");
    println!("found unit/counit adjunction for the Galois connection");

    let hom = unit_counit_to_hom(&adj);
    validate_adjunction(&Adjunction::Hom(hom.clone())).unwrap();
    let back = hom_to_unit_counit(&hom);
    assert_eq!(back.unit, adj.unit);
    assert_eq!(back.counit, adj.counit);
    println!("hom-form round-trip preserves unit and counit");

    for form in [AdjForm::Hom, AdjForm::UnitCounit, AdjForm::Universal] {
        let converted = adj_convert(&Adjunction::UnitCounit(adj.clone()), form).unwrap();
        validate_adjunction(&converted).unwrap();
    }
    println!("all conversion targets validate");

    let dual = adj_dual(&hom);
    let double = adj_dual(&dual);
    assert_eq!(double.phi, hom.phi);
    println!("adj_dual is an involution on the hom presentation");

    for (kind, label) in [
        (FsAdjKind::SumDiag, "disjoint union -| diagonal"),
        (FsAdjKind::DiagProd, "diagonal -| product"),
        (FsAdjKind::ProdExp, "(- x a) -| a^-"),
    ] {
        fs_adjunction_witness(kind, 2).unwrap();
        println!("finite-set adjunction {label}: natural bijection verified at bound 2");
    }
}
