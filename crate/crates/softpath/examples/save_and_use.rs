//! Parse path data, keep the results in a registry, and print their dumps.

use softpath::{parse_path, Registry};

fn main() {
    let mut reg = Registry::new();
    reg.store("wire", parse_path("M 0 0 L 10 0").unwrap());
    reg.store("arch", parse_path("M 0 0 C 2 4 4 4 6 0").unwrap());
    reg.store("box", parse_path("M 0 0 L 4 0 L 4 3 L 0 3 Z").unwrap());
    reg.clone_entry("wire2", "wire").unwrap();

    for name in reg.names() {
        println!("{name}:");
        print!("{}", reg.lookup(name).unwrap().serialize());
        println!();
    }

    // The dump is itself valid path data, and it round-trips exactly.
    let dump = reg.lookup("arch").unwrap().serialize();
    assert_eq!(parse_path(&dump).unwrap().serialize(), dump);
    println!("arch dump round-trips bit for bit");
}
