//! Drive the whole toolkit from a script, as the command-line front end
//! does, but embedded: inspect outputs, warnings and the path registry.

use softpath::script::Interp;

const SCRIPT: &str = r#"
# Cut a wave where it crosses the axis, then keep only the middle arch.
load axis "M -1 0 L 10 0"
load wave "M 0 -2 C 3 6 6 -6 9 2"
splitboth wave axis
components wave
keepmiddle wave 0.34 0.66
show wave
svg wave axis crossing.svg
"#;

fn main() {
    let out_dir = std::env::temp_dir().join("softpath-script-example");
    let mut interp = Interp::new(out_dir.clone());
    interp.run_script(SCRIPT).unwrap();

    for line in &interp.outputs {
        print!("{line}");
    }
    for warning in &interp.warnings {
        eprintln!("warning: {warning}");
    }

    // The registry holds every named path for further library-side work.
    let wave = interp.registry.lookup("wave").unwrap();
    println!("wave spans {:?} -> {:?}", wave.start_point().unwrap(), wave.end_point().unwrap());
    println!("svg written to {}", out_dir.join("crossing.svg").display());
}
