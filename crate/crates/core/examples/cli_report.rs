//! Drives the command-line layer in-process and prints its JSON report.

fn main() {
    let args = ["hhq", "verify", "--suite", "ring", "--field", "Fp:5", "--q", "2", "--cap", "9", "--format", "json"];
    let mut out = Vec::new();
    let code = hhq::cli::run(args, &mut out, &mut std::io::stderr());
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");
}
