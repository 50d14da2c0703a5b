//! Drive the command-line front end in-process and collect its CSV output.
//!
//! cargo run --example cli_datasets

fn main() {
    for args in [
        vec!["qstrata", "tables", "3"],
        vec!["qstrata", "qutrit", "fig3", "--c2", "0.5", "--a-steps", "4"],
        vec![
            "qstrata",
            "qutrit",
            "fraction",
            "--n",
            "2",
            "--c2",
            "0.8",
            "--samples",
            "500",
            "--seed",
            "7",
        ],
    ] {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = qstrata::cli::run_with(args.clone(), &mut out, &mut err);
        println!("$ {} -> exit {code}", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
    }
}
