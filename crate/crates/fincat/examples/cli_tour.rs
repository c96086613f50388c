//! The text format and command dispatch, driven programmatically: parse
//! the bundled files, pretty-print one back, and run a few commands.

use fincat::cli::{dispatch_table, run_command, CheckKind, Command, ConstructKind, Options};
use fincat::parse::{parse_spec, print_spec};
use fincat::report::Format;

fn main() {
    let cospan = parse_spec(include_str!("data/cospan.fc")).unwrap();
    println!("--- canonical form of the cospan file ---");
    print!("{}", print_spec(&cospan));

    let opts = Options::default();
    let report = run_command(&Command::Construct(ConstructKind::Limit), &cospan, &opts).unwrap();
    println!("--- limit report (text) ---");
    print!("{}", report.render(Format::Text));

    let chain = parse_spec(include_str!("data/chain3.fc")).unwrap();
    let report = run_command(&Command::Check(CheckKind::CompletePreorder), &chain, &opts).unwrap();
    println!("--- complete-preorder report (structured) ---");
    print!("{}", report.render(Format::Structured));

    println!("--- dispatch table ---");
    for (cmd, covers) in dispatch_table() {
        println!("{cmd:24} {covers}");
    }
}
