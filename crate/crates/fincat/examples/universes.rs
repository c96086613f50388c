//! Universe-level bookkeeping: size signatures generate level
//! constraints, theorems add more, and inconsistency is a positive
//! cycle in the constraint graph.

use fincat::universes::{run_scenario, Scenario};

fn main() {
    for s in Scenario::all() {
        let rep = run_scenario(s);
        println!("== {}", rep.name);
        println!("   {}", rep.description);
        for a in &rep.added {
            println!("   adds: {a}");
        }
        if rep.consistent {
            println!("   verdict: consistent");
        } else {
            println!("   verdict: inconsistent");
            for c in &rep.cycle {
                println!("   cycle: {c}");
            }
            assert!(rep.cycle_revalidated, "the reported cycle must recheck");
            println!("   cycle independently revalidated");
        }
        println!();
    }
}
