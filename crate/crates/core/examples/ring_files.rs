//! Ring definition files and the command line entry point, driven in-process.

use artinian::cli::{run, RingDefinition};
use artinian::{ArtinianLocalAlgebra, PrimeField, Result};

fn main() -> Result<()> {
    let def: RingDefinition =
        serde_json::from_str(r#"{"characteristic": 101, "variables": ["a", "b"], "dual_generators": ["a^3 + b^2"]}"#)
            .unwrap();
    let ring = def.load(101)?;
    println!("loaded: hilbert {:?}", ring.algebra.hilbert_function());

    // multiplication-table form round-trips
    let table = RingDefinition::from_algebra(&ring.algebra);
    println!("{}", serde_json::to_string(&table).unwrap());

    let dir = std::env::temp_dir().join(format!("artinian-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ring.json");
    std::fs::write(&path, serde_json::to_string(&table).unwrap()).unwrap();
    let mut out = Vec::new();
    let code = run(
        ["artinian", "golod", path.to_str().unwrap(), "--max-degree", "5", "--format", "table"],
        &mut out,
        &mut std::io::stderr(),
    );
    println!("exit {code}\n{}", String::from_utf8_lossy(&out));
    std::fs::remove_dir_all(&dir).unwrap();

    let field = PrimeField::new(101)?;
    let r = ArtinianLocalAlgebra::from_ideal(field, 2, &["x1^3", "x1*x2", "x2^2"], 10)?;
    println!("{}", serde_json::to_string_pretty(&RingDefinition::from_algebra(&r)).unwrap());
    Ok(())
}
