// Table generation through the command-line entry point.

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = [
        "spin-kostka",
        "table",
        "--n",
        "4",
        "--format",
        "md",
        "--display",
        "bracket",
    ];
    let code = spin_kostka::cli::run(args, &mut out, &mut err);
    if code != 0 {
        return Err(String::from_utf8(err)?.into());
    }
    print!("{}", String::from_utf8(out)?);

    let mut out = Vec::new();
    let code = spin_kostka::cli::run(
        ["spin-kostka", "table", "--n", "3", "--mode", "b", "--format", "csv"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    print!("{}", String::from_utf8(out)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("table example");
}
