// Driving the command-line front end from a job file and from flags.

use tiltstab::cli;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("tiltstab-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("family.toml");
    std::fs::write(&path, "command = \"p3-family\"\nn = 2\nm = 2\n")?;

    let from_file = cli::run(["tiltstab", "--jobfile", path.to_str().unwrap()]);
    let from_flags = cli::run(["tiltstab", "p3-family", "--n", "2", "--m", "2"]);
    assert_eq!(from_file, from_flags);
    print!("{}", from_file.stdout);

    let csv = cli::run(["tiltstab", "--jobfile", path.to_str().unwrap(), "--n", "3", "--m", "1", "--format", "csv"]);
    println!("{} csv rows", csv.stdout.lines().count() - 1);

    let rejected = cli::run(["tiltstab", "slope", "--v", "1,0,0,0", "--alpha-sq", "0.5"]);
    println!("exit {}: {}", rejected.code, rejected.stdout.trim());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
